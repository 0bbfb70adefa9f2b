#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "asmposet/seq.hpp"

namespace asmposet {

inline constexpr int kMaxExhaustiveAsmLen = 3;
inline constexpr int kMaxBacktrackAsmLen = 6;

// An n x n matrix over {-1, 0, 1} whose every row and column is alternating.
// Immutable once validated.
class Asm {
public:
  // Row-major entries; throws ValidationError naming the first failing
  // row/column (NonSquare, BadEntry, RowNotAlternating, ColumnNotAlternating).
  static Asm validate(int n, std::vector<std::int8_t> entries);
  static Asm validate(const std::vector<std::vector<int>>& rows);

  int order() const { return n_; }
  // 0-based access.
  int at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  std::vector<int> row(int i) const;
  const std::vector<std::int8_t>& entries() const { return e_; }

  Asm transpose() const;

  friend bool operator==(const Asm&, const Asm&) = default;
  friend auto operator<=>(const Asm&, const Asm&) = default;

private:
  Asm(int n, std::vector<std::int8_t> e) : n_(n), e_(std::move(e)) {}
  int n_;
  std::vector<std::int8_t> e_;
};

// Non-throwing check used by the exhaustive filter.
bool is_asm(int n, std::span<const std::int8_t> entries);

// Oracle 1: filter all 3^(n*n) grids, n <= 3. Row-major lexicographic order
// of the entry tuple with -1 < 0 < 1.
std::vector<Asm> enumerate_asms_exhaustive(int n);

// Oracle 2: row-by-row backtracking over alternating candidate rows with
// column partial sums pruned to {0, 1}; completed matrices are re-checked by
// the full validator. Output in lexicographic order of row tuples. n <= 6.
void for_each_asm_backtrack(int n, const std::function<void(const Asm&)>& emit);
std::vector<Asm> enumerate_asms_backtrack(int n);

// Text format: n lines of n whitespace-separated tokens from {-1, 0, 1}.
Asm parse_asm(std::string_view text);
std::string serialize_asm(const Asm& a);

}  // namespace asmposet
