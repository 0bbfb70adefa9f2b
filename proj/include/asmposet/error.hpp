#pragma once

#include <stdexcept>
#include <string>

namespace asmposet {

enum class Violation {
  BadEntry,
  NotAlternating,
  NotConstrained,
  NonSquare,
  RowNotAlternating,
  ColumnNotAlternating,
  BadEndpoints,
  NotACover,
  WrongLength,
  LengthMismatch,
  BadToken,
  NotABijection,
  OutOfRange,
};

// Thrown when a value fails a domain invariant or a parser rejects input.
// `index` / `index2` are 1-based positions (row/column, token, step) when the
// violation has a location, -1 otherwise.
class ValidationError : public std::runtime_error {
public:
  ValidationError(Violation kind, std::string message, int index = -1, int index2 = -1)
      : std::runtime_error(std::move(message)), kind_(kind), index_(index), index2_(index2) {}

  Violation kind() const { return kind_; }
  int index() const { return index_; }
  int index2() const { return index2_; }

private:
  Violation kind_;
  int index_;
  int index2_;
};

}  // namespace asmposet
