#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <vector>

#include "asmposet/asm.hpp"
#include "asmposet/vertex.hpp"

namespace asmposet {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kMaxHasseLen = 20;
inline constexpr int kMaxCountLen = 20;
inline constexpr int kDefaultChainEnumLen = 6;

// y covers x iff y - x is alternating (coordinatewise difference).
bool is_cover(const Vertex& x, const Vertex& y);

// All covers of x / covees of y, in lexicographic vertex order.
std::vector<Vertex> up_covers(const Vertex& x);
std::vector<Vertex> down_covers(const Vertex& y);

struct HasseEdge {
  Vertex lower;
  Vertex upper;
  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

// Every cover pair exactly once, ordered by lower vertex then upper vertex.
// There are (3^n - 1)/2 of them, so only the streaming form scales.
void for_each_hasse_edge(int n, const std::function<void(const HasseEdge&)>& emit);
std::vector<HasseEdge> hasse_edges(int n);

// Reflexive-transitive closure of the cover relation, by rank-layered search.
bool leq(const Vertex& x, const Vertex& y);

// A maximal chain x_0 < x_1 < ... < x_n: starts at the zero word, ends at the
// all-ones word, every step a cover (hence rank(x_i) = i).
class Chain {
public:
  // Throws WrongLength / BadEndpoints / NotACover(i) on the first violation.
  static Chain validate(std::vector<Vertex> vertices);

  int length() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<Vertex>& vertices() const { return vertices_; }

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;

private:
  explicit Chain(std::vector<Vertex> vs) : vertices_(std::move(vs)) {}

  std::vector<Vertex> vertices_;
};

// Rank-layer dynamic program; arbitrary precision, counts exceed 64 bits
// well inside the supported range. n <= 20.
BigInt count_maximal_chains(int n);

// Depth-first from the minimum, up_covers taken in lexicographic order.
// Guarded at n <= 6 unless force (output size is exponential in n^2).
void for_each_maximal_chain(int n, const std::function<void(const Chain&)>& emit,
                            bool force = false);
std::vector<Chain> enumerate_maximal_chains(int n, bool force = false);

// The chain <-> ASM bijection: row i of the matrix is x_i - x_{i-1}; inverse
// takes x_i to the sum of rows 1..i.
Asm chain_to_asm(const Chain& c);
Chain asm_to_chain(const Asm& a);

}  // namespace asmposet
