#pragma once

#include "archtrace/types.hpp"

namespace archtrace {

/// Relational composition: (s, f) is linked iff some component c has
/// (s, c) in sadSam and (c, f) in samCode. Multi-path duplicates collapse.
LinkSet compose_links(const LinkSet& sad_sam, const LinkSet& sam_code);

} // namespace archtrace
