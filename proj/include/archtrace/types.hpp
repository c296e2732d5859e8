#pragma once

#include "archtrace/errors.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace archtrace {

/// One line of architecture documentation. Ids are 1-indexed line numbers.
struct Sentence {
    int id = 0;
    std::string text;

    friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// Architecture documentation as an ordered list of sentences (id order == file order).
struct SadDocument {
    std::string project;
    std::vector<Sentence> sentences;

    bool empty() const { return sentences.empty(); }

    friend bool operator==(const SadDocument&, const SadDocument&) = default;
};

/// A named architecture component with a stable identifier.
struct Component {
    std::string id;
    std::string name;

    friend bool operator==(const Component&, const Component&) = default;
};

enum class Provenance {
    Manual,
    ExtractedDoc,
    ExtractedCode,
    ExtractedCombined,
};

/// A simple architecture model: just identified, named components.
struct Sam {
    std::string project;
    std::vector<Component> components;
    Provenance provenance = Provenance::Manual;

    friend bool operator==(const Sam&, const Sam&) = default;
};

/// A scanned source artifact, path relative to the scan root with '/' separators.
struct CodeArtifact {
    enum class Kind { File, Package };

    std::string path;
    Kind kind = Kind::File;

    friend bool operator==(const CodeArtifact&, const CodeArtifact&) = default;
    friend auto operator<=>(const CodeArtifact&, const CodeArtifact&) = default;
};

enum class LinkKind {
    SadSam,  // sentence id (as string) -> component id
    SamCode, // component id -> code path
    SadCode, // sentence id (as string) -> code path
};

const char* to_string(LinkKind kind);

/// A single endpoint pair. Endpoint roles are fixed by the kind.
struct TraceLink {
    LinkKind kind = LinkKind::SadSam;
    std::string left;
    std::string right;

    friend bool operator==(const TraceLink&, const TraceLink&) = default;
};

/// A set of trace links of one kind. Set semantics: no duplicate (left, right) pairs.
class LinkSet {
public:
    using Pair = std::pair<std::string, std::string>;

    LinkSet() = default;
    explicit LinkSet(LinkKind kind) : kind_(kind) {}

    LinkKind kind() const { return kind_; }
    std::size_t size() const { return links_.size(); }
    bool empty() const { return links_.empty(); }

    void add(std::string left, std::string right) {
        links_.emplace(std::move(left), std::move(right));
    }

    void add(const TraceLink& link) {
        if (link.kind != kind_) {
            throw KindMismatchError("link kind does not match link set kind");
        }
        links_.emplace(link.left, link.right);
    }

    bool contains(const std::string& left, const std::string& right) const {
        return links_.count({left, right}) > 0;
    }

    /// Pairs in lexicographic (left, right) order.
    const std::set<Pair>& pairs() const { return links_; }

    auto begin() const { return links_.begin(); }
    auto end() const { return links_.end(); }

    friend bool operator==(const LinkSet&, const LinkSet&) = default;

private:
    LinkKind kind_ = LinkKind::SadSam;
    std::set<Pair> links_;
};

/// Human-curated correct links used for evaluation.
struct GoldStandard {
    LinkKind kind = LinkKind::SadSam;
    LinkSet links;

    friend bool operator==(const GoldStandard&, const GoldStandard&) = default;
};

} // namespace archtrace
