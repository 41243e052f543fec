#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace gores {

// Base class for all toolkit errors. The CLI maps subclasses onto two exit
// families: input errors (parse/version/io) exit 2, domain errors exit 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {
inline std::string with_row(const std::string& msg, std::optional<int> row) {
    return row ? "row " + std::to_string(*row) + ": " + msg : msg;
}
} // namespace detail

// Malformed input: bad CSV/JSON syntax, wrong column count, unknown enum token.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg, std::optional<int> row = std::nullopt)
        : Error(detail::with_row(msg, row)), row_(row) {}
    std::optional<int> row() const { return row_; }

private:
    std::optional<int> row_;
};

// Well-formed input that breaks a domain invariant (non-positive watts,
// duplicate ids, dangling device references).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg, std::optional<int> row = std::nullopt)
        : Error(detail::with_row(msg, row)), row_(row) {}
    std::optional<int> row() const { return row_; }

private:
    std::optional<int> row_;
};

// Catalog document with an unsupported format version.
class VersionError : public Error {
public:
    using Error::Error;
};

// Filesystem failure (missing file, unwritable path).
class IoError : public Error {
public:
    using Error::Error;
};

// Argument outside an operation's mathematical domain (e.g. non-positive
// E_CR, non-positive trend slope).
class DomainError : public Error {
public:
    using Error::Error;
};

// Improvement comparison across systems with different full-duplex capacity.
class CapacityMismatch : public Error {
public:
    using Error::Error;
};

// Configuration that cannot be rated (empty components, zero capacity).
class InvalidConfiguration : public Error {
public:
    using Error::Error;
};

// Named device or configuration absent from the catalog.
class NotFoundError : public Error {
public:
    using Error::Error;
};

// Fleet demand that no admissible selection can satisfy.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

// Trend fit with fewer than two usable points.
class InsufficientData : public Error {
public:
    using Error::Error;
};

// Chart requested for an empty series.
class EmptySeries : public Error {
public:
    using Error::Error;
};

} // namespace gores
