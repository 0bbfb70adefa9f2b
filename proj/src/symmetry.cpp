#include "asmposet/symmetry.hpp"

#include <algorithm>
#include <set>

#include "asmposet/poset.hpp"

namespace asmposet {

namespace {

std::uint32_t word_mask(int n) { return (n == 32) ? ~0u : ((1u << n) - 1u); }

void check_sym_size(int n, int maxn, const char* what) {
  if (n < 1 || n > maxn) {
    throw ValidationError(Violation::OutOfRange, std::string(what) + " supports 1 <= n <= " +
                                                     std::to_string(maxn) + ", got " +
                                                     std::to_string(n));
  }
}

}  // namespace

Vertex apply_rho(const Vertex& v) {
  const int n = v.length();
  const std::uint32_t b = v.bits();
  return Vertex(n, ((b & 1u) << (n - 1)) | (b >> 1));
}

Vertex apply_xi(const Vertex& v) {
  return Vertex(v.length(), v.bits() ^ (1u << (v.length() - 1)));
}

Vertex apply_theta(const Vertex& v) {
  const int n = v.length();
  const std::uint32_t b = v.bits();
  return Vertex(n, ((((b & 1u) ^ 1u)) << (n - 1)) | (b >> 1));
}

Vertex apply_theta_inverse(const Vertex& v) {
  const int n = v.length();
  const std::uint32_t b = v.bits();
  return Vertex(n, ((b << 1) & word_mask(n)) | (((b >> (n - 1)) & 1u) ^ 1u));
}

Vertex apply_tau(const Vertex& v) {
  const int n = v.length();
  const std::uint32_t b = v.bits();
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i) {
    r = (r << 1) | ((b >> i) & 1u);
  }
  return Vertex(n, r);
}

DihedralElement::DihedralElement(int n, int k, int r) : n_(n), k_(k), r_(r) {
  if (n < 1 || n > kMaxVertexLen) {
    throw ValidationError(Violation::OutOfRange, "dihedral element needs 1 <= n <= " +
                                                     std::to_string(kMaxVertexLen));
  }
  const int m = 2 * n;
  k_ = ((k % m) + m) % m;
  if (r != 0 && r != 1) {
    throw ValidationError(Violation::BadEntry, "r must be 0 or 1");
  }
}

Vertex apply(const DihedralElement& g, const Vertex& v) {
  if (g.length() != v.length()) {
    throw ValidationError(Violation::LengthMismatch,
                          "element acts on words of length " + std::to_string(g.length()) +
                              ", got " + std::to_string(v.length()));
  }
  Vertex w = g.r() ? apply_tau(v) : v;
  for (int i = 0; i < g.k(); ++i) w = apply_theta(w);
  return w;
}

DihedralElement compose(const DihedralElement& g, const DihedralElement& h) {
  if (g.length() != h.length()) {
    throw ValidationError(Violation::LengthMismatch, "cannot compose elements of different n");
  }
  // theta^a tau^s . theta^b tau^t = theta^(a + s*b') tau^(s+t), b' = b or -b.
  const int m = 2 * g.length();
  const int shifted = g.r() ? (m - h.k()) % m : h.k();
  return DihedralElement(g.length(), (g.k() + shifted) % m, (g.r() + h.r()) & 1);
}

DihedralElement inverse(const DihedralElement& g) {
  const int m = 2 * g.length();
  return DihedralElement(g.length(), g.r() ? g.k() : (m - g.k()) % m, g.r());
}

VertexPermutation permutation_table(int n, const std::function<Vertex(const Vertex&)>& f) {
  check_sym_size(n, kMaxVertexLen, "permutation table");
  const std::uint64_t count = 1ull << n;
  VertexPermutation table(count);
  for (std::uint64_t b = 0; b < count; ++b) {
    Vertex img = f(Vertex(n, static_cast<std::uint32_t>(b)));
    if (img.length() != n) {
      throw ValidationError(Violation::LengthMismatch, "map changes the word length");
    }
    table[b] = img.bits();
  }
  return table;
}

VertexPermutation permutation_table(const DihedralElement& g) {
  return permutation_table(g.length(), [&](const Vertex& v) { return apply(g, v); });
}

namespace {

void check_bijection(const VertexPermutation& f, int n) {
  const std::uint64_t count = 1ull << n;
  if (f.size() != count) {
    throw ValidationError(Violation::NotABijection,
                          "permutation table has " + std::to_string(f.size()) +
                              " entries, expected " + std::to_string(count));
  }
  std::vector<bool> seen(count, false);
  for (std::uint32_t img : f) {
    if (img >= count || seen[img]) {
      throw ValidationError(Violation::NotABijection, "table is not a bijection on vertices");
    }
    seen[img] = true;
  }
}

}  // namespace

bool is_graph_automorphism(const VertexPermutation& f, int n) {
  check_sym_size(n, kMaxAutomorphismLen, "automorphism check");
  check_bijection(f, n);
  // A bijection mapping every edge to an edge hits distinct edges, so it is
  // onto the edge set as well; checking images of all edges suffices.
  bool ok = true;
  for_each_hasse_edge(n, [&](const HasseEdge& e) {
    if (!ok) return;
    const Vertex a(n, f[e.lower.bits()]);
    const Vertex b(n, f[e.upper.bits()]);
    if (!is_cover(a, b) && !is_cover(b, a)) ok = false;
  });
  return ok;
}

std::vector<Vertex> theta_cycle(const Vertex& v) {
  std::vector<Vertex> cycle{v};
  Vertex w = apply_theta(v);
  while (w != v) {
    cycle.push_back(w);
    w = apply_theta(w);
  }
  return cycle;
}

std::vector<std::vector<Vertex>> vertex_orbits(int n,
                                               std::span<const VertexPermutation> generators) {
  check_sym_size(n, kMaxOrbitLen, "orbit computation");
  for (const auto& g : generators) check_bijection(g, n);
  const std::uint64_t count = 1ull << n;
  std::vector<bool> visited(count, false);
  std::vector<std::vector<Vertex>> orbits;
  for (std::uint64_t seed = 0; seed < count; ++seed) {
    if (visited[seed]) continue;
    std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(seed)};
    std::vector<std::uint32_t> members;
    visited[seed] = true;
    while (!stack.empty()) {
      std::uint32_t b = stack.back();
      stack.pop_back();
      members.push_back(b);
      for (const auto& g : generators) {
        std::uint32_t img = g[b];
        if (!visited[img]) {
          visited[img] = true;
          stack.push_back(img);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<Vertex> orbit;
    orbit.reserve(members.size());
    for (std::uint32_t b : members) orbit.push_back(Vertex(n, b));
    orbits.push_back(std::move(orbit));
  }
  return orbits;  // seeds ascend, so orbits are sorted by minimal member
}

int group_order(int n) {
  check_sym_size(n, kMaxGroupOrderLen, "group order");
  std::set<VertexPermutation> distinct;
  for (int r = 0; r <= 1; ++r) {
    for (int k = 0; k < 2 * n; ++k) {
      distinct.insert(permutation_table(DihedralElement(n, k, r)));
    }
  }
  return static_cast<int>(distinct.size());
}

}  // namespace asmposet
