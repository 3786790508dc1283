#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace patstat {

/// Malformed input: a sequence that is not a permutation, a bad pattern
/// string, an unparsable polynomial.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A permutation handed to a class-specific routine contains one of the
/// class's forbidden patterns.
class not_in_class : public std::domain_error {
public:
    not_in_class(std::string message, std::string pattern, std::vector<int> positions)
        : std::domain_error(std::move(message)),
          pattern_(std::move(pattern)),
          positions_(std::move(positions)) {}

    const std::string& pattern() const noexcept { return pattern_; }
    /// 1-based positions of the offending occurrence.
    const std::vector<int>& positions() const noexcept { return positions_; }

private:
    std::string pattern_;
    std::vector<int> positions_;
};

/// The pair {123,321} has no generating function; it is finite.
class finite_class : public std::domain_error {
public:
    finite_class()
        : std::domain_error("finite class {123,321}: no generating function, use class_count") {}
};

/// A rational generating function whose denominator cannot start a power
/// series expansion (constant term is not 1).
class bad_denominator : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace patstat
