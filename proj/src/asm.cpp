#include "asmposet/asm.hpp"

#include <optional>

namespace asmposet {

namespace {

// First violation, or nullopt if the grid is a valid ASM. Indices 1-based.
struct GridViolation {
  Violation kind;
  int i;
  int j;
};

std::optional<GridViolation> find_violation(int n, std::span<const std::int8_t> e) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::int8_t v = e[static_cast<std::size_t>(i) * n + j];
      if (v < -1 || v > 1) return GridViolation{Violation::BadEntry, i + 1, j + 1};
    }
  }
  std::vector<int> line(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) line[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(i) * n + j];
    if (!is_alternating(line)) return GridViolation{Violation::RowNotAlternating, i + 1, -1};
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i) * n + j];
    if (!is_alternating(line)) return GridViolation{Violation::ColumnNotAlternating, j + 1, -1};
  }
  return std::nullopt;
}

}  // namespace

Asm Asm::validate(int n, std::vector<std::int8_t> entries) {
  if (n < 1) {
    throw ValidationError(Violation::OutOfRange, "order must be at least 1");
  }
  if (entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw ValidationError(Violation::NonSquare,
                          "expected " + std::to_string(n * n) + " entries for order " +
                              std::to_string(n) + ", got " + std::to_string(entries.size()));
  }
  if (auto v = find_violation(n, entries)) {
    switch (v->kind) {
      case Violation::BadEntry:
        throw ValidationError(v->kind,
                              "entry (" + std::to_string(v->i) + "," + std::to_string(v->j) +
                                  ") is not -1, 0, or 1",
                              v->i, v->j);
      case Violation::RowNotAlternating:
        throw ValidationError(v->kind, "row " + std::to_string(v->i) + " is not alternating",
                              v->i);
      default:
        throw ValidationError(v->kind, "column " + std::to_string(v->i) + " is not alternating",
                              v->i);
    }
  }
  return Asm(n, std::move(entries));
}

Asm Asm::validate(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  if (n < 1) {
    throw ValidationError(Violation::OutOfRange, "order must be at least 1");
  }
  std::vector<std::int8_t> e;
  e.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw ValidationError(Violation::NonSquare,
                            "row " + std::to_string(i + 1) + " has " +
                                std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                                " entries, expected " + std::to_string(n),
                            i + 1);
    }
    for (int v : rows[static_cast<std::size_t>(i)]) e.push_back(static_cast<std::int8_t>(v));
  }
  return validate(n, std::move(e));
}

std::vector<int> Asm::row(int i) const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(j)] = at(i, j);
  return out;
}

Asm Asm::transpose() const {
  std::vector<std::int8_t> t(e_.size());
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      t[static_cast<std::size_t>(j) * n_ + i] = e_[static_cast<std::size_t>(i) * n_ + j];
    }
  }
  return Asm(n_, std::move(t));
}

bool is_asm(int n, std::span<const std::int8_t> entries) {
  if (n < 1 || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    return false;
  }
  return !find_violation(n, entries).has_value();
}

std::vector<Asm> enumerate_asms_exhaustive(int n) {
  if (n < 1 || n > kMaxExhaustiveAsmLen) {
    throw ValidationError(Violation::OutOfRange,
                          "exhaustive enumeration supports 1 <= n <= " +
                              std::to_string(kMaxExhaustiveAsmLen) + ", got " + std::to_string(n));
  }
  std::vector<Asm> out;
  const int cells = n * n;
  std::vector<std::int8_t> grid(static_cast<std::size_t>(cells), -1);
  // Odometer over {-1,0,1}^(n*n); cell (1,1) is most significant, so the
  // iteration order is row-major lexicographic.
  for (;;) {
    if (is_asm(n, grid)) out.push_back(Asm::validate(n, grid));
    int i = cells - 1;
    while (i >= 0 && grid[static_cast<std::size_t>(i)] == 1) {
      grid[static_cast<std::size_t>(i)] = -1;
      --i;
    }
    if (i < 0) break;
    ++grid[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace {

struct BacktrackState {
  int n;
  std::vector<std::vector<int>> candidates;  // alternating rows, lex order
  std::vector<std::int8_t> grid;
  std::vector<std::int8_t> colsum;
  const std::function<void(const Asm&)>* emit;
};

void backtrack_rows(BacktrackState& st, int row) {
  if (row == st.n) {
    for (int j = 0; j < st.n; ++j) {
      if (st.colsum[static_cast<std::size_t>(j)] != 1) return;
    }
    // Guard against drift between the pruning rules and the definition.
    (*st.emit)(Asm::validate(st.n, st.grid));
    return;
  }
  for (const auto& cand : st.candidates) {
    int j = 0;
    for (; j < st.n; ++j) {
      std::int8_t s = static_cast<std::int8_t>(st.colsum[static_cast<std::size_t>(j)] +
                                               cand[static_cast<std::size_t>(j)]);
      if (s < 0 || s > 1) break;
      st.colsum[static_cast<std::size_t>(j)] = s;
    }
    if (j < st.n) {
      for (int k = 0; k < j; ++k) {
        st.colsum[static_cast<std::size_t>(k)] = static_cast<std::int8_t>(
            st.colsum[static_cast<std::size_t>(k)] - cand[static_cast<std::size_t>(k)]);
      }
      continue;
    }
    for (int k = 0; k < st.n; ++k) {
      st.grid[static_cast<std::size_t>(row) * st.n + k] =
          static_cast<std::int8_t>(cand[static_cast<std::size_t>(k)]);
    }
    backtrack_rows(st, row + 1);
    for (int k = 0; k < st.n; ++k) {
      st.colsum[static_cast<std::size_t>(k)] = static_cast<std::int8_t>(
          st.colsum[static_cast<std::size_t>(k)] - cand[static_cast<std::size_t>(k)]);
    }
  }
}

}  // namespace

void for_each_asm_backtrack(int n, const std::function<void(const Asm&)>& emit) {
  if (n < 1 || n > kMaxBacktrackAsmLen) {
    throw ValidationError(Violation::OutOfRange,
                          "backtracking enumeration supports 1 <= n <= " +
                              std::to_string(kMaxBacktrackAsmLen) + ", got " + std::to_string(n));
  }
  BacktrackState st;
  st.n = n;
  for (const auto& a : enumerate_alternating(n)) st.candidates.push_back(a.entries());
  st.grid.assign(static_cast<std::size_t>(n) * n, 0);
  st.colsum.assign(static_cast<std::size_t>(n), 0);
  st.emit = &emit;
  backtrack_rows(st, 0);
}

std::vector<Asm> enumerate_asms_backtrack(int n) {
  std::vector<Asm> out;
  for_each_asm_backtrack(n, [&](const Asm& a) { out.push_back(a); });
  return out;
}

Asm parse_asm(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        (nl == std::string_view::npos) ? text.substr(pos) : text.substr(pos, nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      --lineno;
      if (nl == std::string_view::npos) break;
      if (!rows.empty()) {
        throw ValidationError(Violation::BadToken,
                              "blank line inside matrix at line " + std::to_string(lineno + 1));
      }
      continue;
    }
    std::vector<int> row;
    std::size_t p = 0;
    int tok = 0;
    while (p < line.size()) {
      while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) ++p;
      if (p >= line.size()) break;
      std::size_t q = p;
      while (q < line.size() && line[q] != ' ' && line[q] != '\t') ++q;
      std::string_view token = line.substr(p, q - p);
      ++tok;
      if (token == "1") {
        row.push_back(1);
      } else if (token == "0") {
        row.push_back(0);
      } else if (token == "-1") {
        row.push_back(-1);
      } else {
        throw ValidationError(Violation::BadToken,
                              "line " + std::to_string(lineno) + ", token " + std::to_string(tok) +
                                  ": '" + std::string(token) + "' is not -1, 0, or 1",
                              lineno, tok);
      }
      p = q;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ValidationError(Violation::BadToken, "empty matrix");
  }
  int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw ValidationError(Violation::NonSquare,
                            "row " + std::to_string(i + 1) + " has " +
                                std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                                " tokens, expected " + std::to_string(n),
                            i + 1);
    }
  }
  return Asm::validate(rows);
}

std::string serialize_asm(const Asm& a) {
  std::string out;
  for (int i = 0; i < a.order(); ++i) {
    if (i) out += '\n';
    for (int j = 0; j < a.order(); ++j) {
      if (j) out += ' ';
      out += std::to_string(a.at(i, j));
    }
  }
  return out;
}

}  // namespace asmposet
