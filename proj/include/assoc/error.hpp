#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace assoc {

/// Arguments violate an operation's precondition (bad labels, edge not
/// present, not one flip apart, malformed text).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Polygon too small (or too large) for the requested operation.
class SizeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A flip sequence could not be replayed; `index` is the failing position.
class FlipSequenceError : public InvalidInput {
public:
    FlipSequenceError(std::size_t index, const std::string& what)
        : InvalidInput(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// A configured budget was exhausted. Never a wrong answer: callers get the
/// best bracket known at the time, when there is one.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what,
                           std::optional<int> lower = std::nullopt,
                           std::optional<int> upper = std::nullopt)
        : std::runtime_error(what), lower_(lower), upper_(upper) {}

    std::optional<int> lower_bound() const noexcept { return lower_; }
    std::optional<int> upper_bound() const noexcept { return upper_; }

private:
    std::optional<int> lower_;
    std::optional<int> upper_;
};

/// Node budget shared by every exhaustive or search routine.
struct Budget {
    std::size_t max_nodes = 20'000'000;

    /// Reads ASSOC_MAX_NODES when set and parseable, else the default.
    static Budget from_env();
};

}  // namespace assoc
