#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pslat {

struct ZeroVectorError : std::invalid_argument {
    ZeroVectorError() : std::invalid_argument("zero vector has no ray direction") {}
};

struct NegativeIndexError : std::domain_error {
    explicit NegativeIndexError(long n)
        : std::domain_error("chain index must be nonnegative, got " + std::to_string(n)) {}
};

struct NegativeEntryError : std::domain_error {
    explicit NegativeEntryError(std::size_t pos)
        : std::domain_error("state vector has a negative entry at position " +
                            std::to_string(pos + 1)) {}
};

struct NotGhzDiagonalError : std::domain_error {
    NotGhzDiagonalError()
        : std::domain_error("X-state is not GHZ-diagonal (requires a = b and real c)") {}
};

// Raised when the double-description intermediate ray count exceeds the cap.
struct ResourceExceededError : std::runtime_error {
    std::size_t cap;
    ResourceExceededError(std::size_t cap_, std::size_t reached)
        : std::runtime_error("double-description ray count " + std::to_string(reached) +
                             " exceeds cap " + std::to_string(cap_)),
          cap(cap_) {}
};

// Parse failure with byte offset and the token set that would have been accepted.
struct SyntaxError : std::runtime_error {
    std::size_t offset;
    std::vector<std::string> expected;
    SyntaxError(std::size_t offset_, std::vector<std::string> expected_);
};

// An arithmetic check in one of the induction replays failed; this indicates a
// transcription error in the hard-coded step formulas, never a normal outcome.
struct ReplayError : std::runtime_error {
    long n;
    std::string step;
    ReplayError(long n_, std::string step_)
        : std::runtime_error("replay failed at n=" + std::to_string(n_) + ", step: " + step_),
          n(n_),
          step(std::move(step_)) {}
};

}  // namespace pslat
