#pragma once

#include <stdexcept>
#include <string>

namespace lanekit {

// Base class for everything this library throws on bad data or bad config.
// Callers that only want "did it work" can catch this one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed text or header while parsing; carries a byte offset or line
// number in the message where the producer knows it.
class ParseError : public Error {
public:
    using Error::Error;
};

// Payload ended before the declared size.
class TruncationError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure (open/read/write).
class IoError : public Error {
public:
    using Error::Error;
};

// Wrong magic or unrecognized container layout.
class FormatError : public Error {
public:
    using Error::Error;
};

// Structurally valid input whose values violate an invariant (NaN payload,
// size mismatch, out-of-range field).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Caller-supplied configuration or operand shapes that the operation
// cannot work with.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A forward pass produced a non-finite intermediate.
class NumericsError : public Error {
public:
    using Error::Error;
};

// Two lanes share no row where both are valid; their overlap is undefined.
class UndefinedOverlap : public Error {
public:
    using Error::Error;
};

// Metric preconditions not met (degenerate lane, anchor-row mismatch).
class MetricError : public Error {
public:
    using Error::Error;
};

} // namespace lanekit
