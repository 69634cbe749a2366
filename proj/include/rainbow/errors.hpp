#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rainbow {

/// A search ran past its configured node/partition/candidate budget.
/// `best_found` carries the best value known when the search stopped
/// (meaning depends on the caller: a packing size, a φ value, a count).
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const std::string &what, std::int64_t best_found,
                 bool proven_optimal = false)
      : std::runtime_error(what), best_found_(best_found),
        proven_optimal_(proven_optimal) {}

  std::int64_t best_found() const noexcept { return best_found_; }
  bool proven_optimal() const noexcept { return proven_optimal_; }

private:
  std::int64_t best_found_;
  bool proven_optimal_;
};

/// Malformed textual input (graph6, generator specs, coloring files).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// An internal consistency check failed. Always indicates a bug or a
/// violated theorem-backed assertion, never bad user input.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A coloring did not assign a color to every edge of its host.
class ColoringError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace rainbow
