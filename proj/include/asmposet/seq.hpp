#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asmposet/error.hpp"

namespace asmposet {

// Guard for enumeration; validation-only operations accept any length >= 1.
inline constexpr int kMaxAltEnumLen = 24;

// A sign sequence is any sequence over {-1, 0, 1}.
using SignSequence = std::vector<int>;

bool is_sign_sequence(std::span<const int> s);

// True iff the nonzero entries of s read 1, -1, 1, ..., -1, 1 (so at least
// one nonzero, first and last nonzero are 1). Total on sign sequences;
// entries outside {-1, 0, 1} yield false.
bool is_alternating(std::span<const int> s);

// True iff all entries are 0/1, the first is 0 and the last is 1.
bool is_constrained(std::span<const int> s);

// Validated alternating sequence (alpha_1, ..., alpha_n).
class AlternatingSequence {
public:
  explicit AlternatingSequence(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const AlternatingSequence&, const AlternatingSequence&) = default;
  friend auto operator<=>(const AlternatingSequence&, const AlternatingSequence&) = default;

private:
  std::vector<int> entries_;
};

// Validated constrained sequence (sigma_0, ..., sigma_n); size() returns n.
class ConstrainedSequence {
public:
  explicit ConstrainedSequence(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()) - 1; }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const ConstrainedSequence&, const ConstrainedSequence&) = default;
  friend auto operator<=>(const ConstrainedSequence&, const ConstrainedSequence&) = default;

private:
  std::vector<int> entries_;
};

// The difference/partial-sum bijection between the two families.
AlternatingSequence differences(const ConstrainedSequence& sigma);
ConstrainedSequence partial_sums(const AlternatingSequence& alpha);

// All alternating sequences of length n in lexicographic order of the entry
// tuple with -1 < 0 < 1. There are exactly 2^(n-1) of them.
void for_each_alternating(int n, const std::function<void(std::span<const int>)>& emit);
std::vector<AlternatingSequence> enumerate_alternating(int n);

// Text formats: numeric is space-separated "-1 0 1" tokens, compact maps
// -1/0/1 to '-', '0', '+'. parse_sign_sequence() treats whitespace-free
// input over "+-0" as compact and everything else as numeric tokens;
// rejects malformed input with a 1-based position.
std::string format_numeric(std::span<const int> s);
std::string format_compact(std::span<const int> s);
SignSequence parse_sign_sequence(std::string_view text);

}  // namespace asmposet
