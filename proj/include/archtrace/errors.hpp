#pragma once

#include <stdexcept>
#include <string>

namespace archtrace {

/// Base class for all errors raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File could not be read/written or content violates a format precondition.
struct IoError : Error {
    using Error::Error;
};

/// Malformed CSV, config, or non-UTF-8 input. Carries a human-readable location.
struct FormatError : Error {
    using Error::Error;
};

/// Replay-mode lookup failed: the cassette has no entry for the request.
struct CassetteMissError : Error {
    using Error::Error;
};

/// Live provider returned a non-2xx response or the connection failed.
struct ProviderError : Error {
    using Error::Error;
};

/// An LLM response could not be interpreted (e.g. no JSON array found).
struct MalformedResponseError : Error {
    using Error::Error;
};

/// An extraction pipeline produced an empty component-name list.
struct EmptyExtractionError : Error {
    using Error::Error;
};

/// Two link sets of different kinds were combined.
struct KindMismatchError : Error {
    using Error::Error;
};

/// Statistical test is undefined for the given sample (e.g. all-zero differences).
struct UndefinedTestError : Error {
    using Error::Error;
};

/// A documented operation precondition was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

} // namespace archtrace
