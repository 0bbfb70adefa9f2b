#include "asmposet/poset.hpp"

#include <algorithm>
#include <bit>

// Cover generation. A cover step from x adds an alternating sequence to x,
// so its +1 entries sit on 0-coordinates of x and its -1 entries on
// 1-coordinates. Walking positions left to right with the running sum kept in
// {0,1} (the partial-sum form of the alternating pattern) enumerates exactly
// the compatible sequences: place +1 only at sum 0, -1 only at sum 1, and
// accept when the final sum is 1. The recursion below carries the resulting
// cover's bits directly instead of materializing the sequence.

namespace asmposet {

namespace {

void check_same_length(const Vertex& x, const Vertex& y) {
  if (x.length() != y.length()) {
    throw ValidationError(Violation::LengthMismatch,
                          "vertex lengths differ: " + std::to_string(x.length()) + " vs " +
                              std::to_string(y.length()));
  }
}

// Emits the bits of every y covering x. `pos` is the bit index (position i
// of the word is bit n-i, so we walk from bit n-1 down to 0).
template <class F>
void up_covers_rec(std::uint32_t xbits, int pos, int sum, std::uint32_t ybits, F&& emit) {
  if (pos < 0) {
    if (sum == 1) emit(ybits);
    return;
  }
  const std::uint32_t bit = 1u << pos;
  up_covers_rec(xbits, pos - 1, sum, ybits, emit);  // skip this position
  if (sum == 0) {
    if (!(xbits & bit)) up_covers_rec(xbits, pos - 1, 1, ybits | bit, emit);
  } else if (xbits & bit) {
    up_covers_rec(xbits, pos - 1, 0, ybits & ~bit, emit);
  }
}

// Dual walk: emits the bits of every x covered by y.
template <class F>
void down_covers_rec(std::uint32_t ybits, int pos, int sum, std::uint32_t xbits, F&& emit) {
  if (pos < 0) {
    if (sum == 1) emit(xbits);
    return;
  }
  const std::uint32_t bit = 1u << pos;
  down_covers_rec(ybits, pos - 1, sum, xbits, emit);
  if (sum == 0) {
    if (ybits & bit) down_covers_rec(ybits, pos - 1, 1, xbits & ~bit, emit);
  } else if (!(ybits & bit)) {
    down_covers_rec(ybits, pos - 1, 0, xbits | bit, emit);
  }
}

void check_poset_size(int n, int maxn, const char* what) {
  if (n < 1 || n > maxn) {
    throw ValidationError(Violation::OutOfRange, std::string(what) + " supports 1 <= n <= " +
                                                     std::to_string(maxn) + ", got " +
                                                     std::to_string(n));
  }
}

}  // namespace

bool is_cover(const Vertex& x, const Vertex& y) {
  check_same_length(x, y);
  const int n = x.length();
  int sum = 0;
  for (int pos = n - 1; pos >= 0; --pos) {
    const int xb = static_cast<int>((x.bits() >> pos) & 1u);
    const int yb = static_cast<int>((y.bits() >> pos) & 1u);
    const int d = yb - xb;
    if (d == 0) continue;
    sum += d;
    if (sum < 0 || sum > 1) return false;
  }
  return sum == 1;
}

std::vector<Vertex> up_covers(const Vertex& x) {
  std::vector<std::uint32_t> bits;
  up_covers_rec(x.bits(), x.length() - 1, 0, x.bits(),
                [&](std::uint32_t y) { bits.push_back(y); });
  std::sort(bits.begin(), bits.end());  // numeric order == lex order of the word
  std::vector<Vertex> out;
  out.reserve(bits.size());
  for (std::uint32_t b : bits) out.push_back(Vertex(x.length(), b));
  return out;
}

std::vector<Vertex> down_covers(const Vertex& y) {
  std::vector<std::uint32_t> bits;
  down_covers_rec(y.bits(), y.length() - 1, 0, y.bits(),
                  [&](std::uint32_t x) { bits.push_back(x); });
  std::sort(bits.begin(), bits.end());
  std::vector<Vertex> out;
  out.reserve(bits.size());
  for (std::uint32_t b : bits) out.push_back(Vertex(y.length(), b));
  return out;
}

void for_each_hasse_edge(int n, const std::function<void(const HasseEdge&)>& emit) {
  check_poset_size(n, kMaxHasseLen, "hasse edge enumeration");
  const std::uint64_t count = 1ull << n;
  std::vector<std::uint32_t> ys;
  for (std::uint64_t x = 0; x < count; ++x) {
    ys.clear();
    up_covers_rec(static_cast<std::uint32_t>(x), n - 1, 0, static_cast<std::uint32_t>(x),
                  [&](std::uint32_t y) { ys.push_back(y); });
    std::sort(ys.begin(), ys.end());
    for (std::uint32_t y : ys) {
      emit(HasseEdge{Vertex(n, static_cast<std::uint32_t>(x)), Vertex(n, y)});
    }
  }
}

std::vector<HasseEdge> hasse_edges(int n) {
  check_poset_size(n, 14, "materialized hasse edge list");
  std::vector<HasseEdge> out;
  for_each_hasse_edge(n, [&](const HasseEdge& e) { out.push_back(e); });
  return out;
}

bool leq(const Vertex& x, const Vertex& y) {
  check_same_length(x, y);
  if (x == y) return true;
  if (x.rank() >= y.rank()) return false;
  const int n = x.length();
  std::vector<std::uint32_t> frontier{x.bits()};
  for (int r = x.rank(); r < y.rank(); ++r) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t v : frontier) {
      up_covers_rec(v, n - 1, 0, v, [&](std::uint32_t w) { next.push_back(w); });
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  return std::binary_search(frontier.begin(), frontier.end(), y.bits());
}

Chain Chain::validate(std::vector<Vertex> vertices) {
  if (vertices.empty()) {
    throw ValidationError(Violation::WrongLength, "empty vertex sequence");
  }
  const int n = vertices.front().length();
  for (const Vertex& v : vertices) {
    if (v.length() != n) {
      throw ValidationError(Violation::LengthMismatch, "vertices have mixed lengths");
    }
  }
  if (static_cast<int>(vertices.size()) != n + 1) {
    throw ValidationError(Violation::WrongLength,
                          "a maximal chain on words of length " + std::to_string(n) + " has " +
                              std::to_string(n + 1) + " vertices, got " +
                              std::to_string(vertices.size()));
  }
  if (vertices.front() != Vertex::zero(n) || vertices.back() != Vertex::ones(n)) {
    throw ValidationError(Violation::BadEndpoints,
                          "chain must run from " + Vertex::zero(n).str() + " to " +
                              Vertex::ones(n).str());
  }
  for (int i = 1; i <= n; ++i) {
    if (!is_cover(vertices[static_cast<std::size_t>(i) - 1], vertices[static_cast<std::size_t>(i)])) {
      throw ValidationError(Violation::NotACover,
                            "step " + std::to_string(i) + " (" +
                                vertices[static_cast<std::size_t>(i) - 1].str() + " -> " +
                                vertices[static_cast<std::size_t>(i)].str() + ") is not a cover",
                            i);
    }
  }
  return Chain(std::move(vertices));
}

BigInt count_maximal_chains(int n) {
  check_poset_size(n, kMaxCountLen, "chain counting");
  const std::uint64_t count = 1ull << n;
  std::vector<BigInt> f(count);
  f[0] = 1;
  // Every cover of v is numerically smaller than v (the most significant
  // changed position flips 1 -> 0), so ascending order is a topological one.
  for (std::uint64_t v = 1; v < count; ++v) {
    BigInt acc = 0;
    down_covers_rec(static_cast<std::uint32_t>(v), n - 1, 0, static_cast<std::uint32_t>(v),
                    [&](std::uint32_t x) { acc += f[x]; });
    f[v] = std::move(acc);
  }
  return f[count - 1];
}

namespace {

void chains_rec(int n, std::vector<Vertex>& path,
                const std::function<void(const Chain&)>& emit) {
  const Vertex& top = path.back();
  if (top.rank() == n) {
    emit(Chain::validate(path));
    return;
  }
  for (const Vertex& y : up_covers(top)) {
    path.push_back(y);
    chains_rec(n, path, emit);
    path.pop_back();
  }
}

}  // namespace

void for_each_maximal_chain(int n, const std::function<void(const Chain&)>& emit, bool force) {
  check_poset_size(n, kMaxCountLen, "chain enumeration");
  if (n > kDefaultChainEnumLen && !force) {
    throw ValidationError(Violation::OutOfRange,
                          "chain enumeration above n = " + std::to_string(kDefaultChainEnumLen) +
                              " is guarded; output grows like the ASM numbers (force to override)");
  }
  std::vector<Vertex> path{Vertex::zero(n)};
  chains_rec(n, path, emit);
}

std::vector<Chain> enumerate_maximal_chains(int n, bool force) {
  std::vector<Chain> out;
  for_each_maximal_chain(n, [&](const Chain& c) { out.push_back(c); }, force);
  return out;
}

Asm chain_to_asm(const Chain& c) {
  const int n = c.length();
  std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    const Vertex& lo = c.vertices()[static_cast<std::size_t>(i) - 1];
    const Vertex& hi = c.vertices()[static_cast<std::size_t>(i)];
    for (int j = 1; j <= n; ++j) {
      e[static_cast<std::size_t>(i - 1) * n + (j - 1)] =
          static_cast<std::int8_t>(hi.coordinate(j) - lo.coordinate(j));
    }
  }
  return Asm::validate(n, std::move(e));
}

Chain asm_to_chain(const Asm& a) {
  const int n = a.order();
  std::vector<Vertex> vs;
  vs.reserve(static_cast<std::size_t>(n) + 1);
  std::vector<int> coord(static_cast<std::size_t>(n), 0);
  vs.push_back(Vertex::zero(n));
  for (int i = 0; i < n; ++i) {
    std::uint32_t bits = 0;
    for (int j = 0; j < n; ++j) {
      coord[static_cast<std::size_t>(j)] += a.at(i, j);
      const int cj = coord[static_cast<std::size_t>(j)];
      if (cj != 0 && cj != 1) {
        throw ValidationError(Violation::BadEntry,
                              "partial row sums leave {0,1} at row " + std::to_string(i + 1) +
                                  ", column " + std::to_string(j + 1),
                              i + 1, j + 1);
      }
      bits = (bits << 1) | static_cast<std::uint32_t>(cj);
    }
    vs.push_back(Vertex(n, bits));
  }
  return Chain::validate(std::move(vs));
}

}  // namespace asmposet
