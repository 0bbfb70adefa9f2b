#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "asmposet/vertex.hpp"

namespace asmposet {

inline constexpr int kMaxAutomorphismLen = 14;
inline constexpr int kMaxOrbitLen = 14;
inline constexpr int kMaxGroupOrderLen = 12;

// rho: right cyclic shift (a1,...,an) -> (an, a1,..., a_{n-1}); order n.
Vertex apply_rho(const Vertex& v);
// xi: flip the first coordinate; order 2.
Vertex apply_xi(const Vertex& v);
// theta = xi . rho: (a1,...,an) -> (~an, a1, ..., a_{n-1}); order 2n,
// and theta^n is the coordinatewise complement.
Vertex apply_theta(const Vertex& v);
Vertex apply_theta_inverse(const Vertex& v);
// tau: reversal (a1,...,an) -> (an,...,a1); order 2, theta.tau = tau.theta^-1.
Vertex apply_tau(const Vertex& v);

// Group element in canonical form theta^k . tau^r (tau applied first),
// 0 <= k < 2n, r in {0, 1}.
class DihedralElement {
public:
  DihedralElement(int n, int k, int r);

  static DihedralElement identity(int n) { return DihedralElement(n, 0, 0); }
  static DihedralElement theta(int n) { return DihedralElement(n, 1, 0); }
  static DihedralElement tau(int n) { return DihedralElement(n, 0, 1); }

  int length() const { return n_; }
  int k() const { return k_; }
  int r() const { return r_; }

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;

private:
  int n_;
  int k_;  // reduced mod 2n
  int r_;
};

Vertex apply(const DihedralElement& g, const Vertex& v);
// g . h with h applied first, rewritten to canonical form via
// theta^(2n) = 1, tau^2 = 1, tau . theta^k = theta^(-k) . tau.
DihedralElement compose(const DihedralElement& g, const DihedralElement& h);
DihedralElement inverse(const DihedralElement& g);

// A vertex permutation of the 2^n words, images indexed by Vertex::bits().
using VertexPermutation = std::vector<std::uint32_t>;

VertexPermutation permutation_table(int n, const std::function<Vertex(const Vertex&)>& f);
VertexPermutation permutation_table(const DihedralElement& g);

// Exhaustive edge-image verification over the Hasse diagram. n <= 14.
bool is_graph_automorphism(const VertexPermutation& f, int n);

// Orbit of v under repeated theta, starting at v; its length divides 2n.
std::vector<Vertex> theta_cycle(const Vertex& v);

// Orbit partition under the generated group. Orbits sorted by their
// lexicographically minimal member, members sorted within each orbit.
std::vector<std::vector<Vertex>> vertex_orbits(int n,
                                               std::span<const VertexPermutation> generators);

// Number of distinct vertex permutations among the 4n canonical elements
// theta^k . tau^r. Divides 4n, but the action need not be faithful (n = 1).
int group_order(int n);

}  // namespace asmposet
