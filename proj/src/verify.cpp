#include "asmposet/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "asmposet/poset.hpp"
#include "asmposet/symmetry.hpp"

namespace asmposet {

namespace {

// Subject predicate under test; the fault hook swaps in a broken version so
// the suite can demonstrate it catches one.
using AltFn = bool (*)(std::span<const int>);

bool broken_is_alternating(std::span<const int> s) {
  bool all_zero = true;
  for (int v : s) {
    if (v != 0) all_zero = false;
  }
  if (all_zero && !s.empty()) return true;  // wrongly accepts the zero sequence
  return is_alternating(s);
}

// Independent characterization: prefix sums in {0,1}, total 1.
bool alt_by_prefix_sums(std::span<const int> s) {
  if (s.empty()) return false;
  int sum = 0;
  for (int v : s) {
    if (v < -1 || v > 1) return false;
    sum += v;
    if (sum < 0 || sum > 1) return false;
  }
  return sum == 1;
}

// All of {-1,0,1}^n, odometer order.
void for_each_sign_sequence(int n, const std::function<void(std::span<const int>)>& emit) {
  std::vector<int> s(static_cast<std::size_t>(n), -1);
  for (;;) {
    emit(s);
    int i = n - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == 1) {
      s[static_cast<std::size_t>(i)] = -1;
      --i;
    }
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
  }
}

// All constrained sequences (sigma_0, ..., sigma_n), free middle bits.
void for_each_constrained(int n, const std::function<void(std::span<const int>)>& emit) {
  std::vector<int> s(static_cast<std::size_t>(n) + 1, 0);
  s[static_cast<std::size_t>(n)] = 1;
  const std::uint32_t free_count = (n >= 1) ? (1u << (n - 1)) : 1u;
  for (std::uint32_t m = 0; m < free_count; ++m) {
    for (int i = 1; i < n; ++i) {
      s[static_cast<std::size_t>(i)] = static_cast<int>((m >> (i - 1)) & 1u);
    }
    emit(s);
  }
}

struct CheckSpec {
  const char* name;
  int stated_cap;
  bool oracle_backed;
  // Returns nullopt on pass, else the first counterexample.
  std::function<std::optional<std::string>(int cap, AltFn alt)> run;
};

std::optional<std::string> check_roundtrip_sigma(int cap, AltFn) {
  for (int n = 1; n <= cap; ++n) {
    std::optional<std::string> bad;
    for_each_constrained(n, [&](std::span<const int> s) {
      if (bad) return;
      ConstrainedSequence sigma(std::vector<int>(s.begin(), s.end()));
      if (partial_sums(differences(sigma)) != sigma) {
        bad = "sigma = " + format_numeric(s);
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

std::optional<std::string> check_roundtrip_alpha(int cap, AltFn) {
  for (int n = 1; n <= cap; ++n) {
    for (const auto& alpha : enumerate_alternating(n)) {
      if (differences(partial_sums(alpha)) != alpha) {
        return "alpha = " + format_numeric(alpha.entries());
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_alt_count_law(int cap, AltFn alt) {
  for (int n = 1; n <= cap; ++n) {
    std::uint64_t brute = 0;
    for_each_sign_sequence(n, [&](std::span<const int> s) {
      if (alt(s)) ++brute;
    });
    const std::uint64_t expected = 1ull << (n - 1);
    const std::uint64_t listed = enumerate_alternating(n).size();
    if (brute != expected || listed != expected) {
      return "n = " + std::to_string(n) + ": brute force " + std::to_string(brute) +
             ", enumerated " + std::to_string(listed) + ", expected " + std::to_string(expected);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_alt_characterization(int cap, AltFn alt) {
  for (int n = 1; n <= cap; ++n) {
    std::optional<std::string> bad;
    for_each_sign_sequence(n, [&](std::span<const int> s) {
      if (bad) return;
      if (alt(s) != alt_by_prefix_sums(s)) {
        bad = "s = " + format_numeric(s);
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

std::optional<std::string> check_alt_enumeration_order(int cap, AltFn alt) {
  for (int n = 1; n <= cap; ++n) {
    const auto all = enumerate_alternating(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!alt(all[i].entries())) {
        return "non-alternating output " + format_numeric(all[i].entries());
      }
      if (i > 0 && !(all[i - 1] < all[i])) {
        return "order violation at n = " + std::to_string(n) + ", index " + std::to_string(i);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_asm_oracles_agree(int cap, AltFn) {
  for (int n = 1; n <= std::min(cap, kMaxExhaustiveAsmLen); ++n) {
    if (enumerate_asms_exhaustive(n) != enumerate_asms_backtrack(n)) {
      return "oracles disagree at n = " + std::to_string(n);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_asm_outputs_valid(int cap, AltFn) {
  for (int n = 1; n <= std::min(cap, kMaxBacktrackAsmLen); ++n) {
    std::optional<std::string> bad;
    for_each_asm_backtrack(n, [&](const Asm& a) {
      if (bad) return;
      if (!is_asm(a.order(), a.entries())) bad = "invalid output at n = " + std::to_string(n);
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

std::optional<std::string> check_asm_transpose(int cap, AltFn) {
  for (int n = 1; n <= std::min(cap, 4); ++n) {
    std::optional<std::string> bad;
    for_each_asm_backtrack(n, [&](const Asm& a) {
      if (bad) return;
      if (!is_asm(n, a.transpose().entries())) {
        bad = "transpose fails at n = " + std::to_string(n) + ":\n" + serialize_asm(a);
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

std::optional<std::string> check_asm_counts(int cap, AltFn) {
  static const std::uint64_t expected[] = {0, 1, 2, 7, 42, 429, 7436};
  for (int n = 1; n <= std::min(cap, kMaxBacktrackAsmLen); ++n) {
    std::uint64_t c = 0;
    for_each_asm_backtrack(n, [&](const Asm&) { ++c; });
    if (c != expected[n]) {
      return "n = " + std::to_string(n) + ": counted " + std::to_string(c) + ", expected " +
             std::to_string(expected[n]);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_gradedness(int cap, AltFn) {
  for (int n = 1; n <= cap; ++n) {
    std::optional<std::string> bad;
    for_each_hasse_edge(n, [&](const HasseEdge& e) {
      if (bad) return;
      if (e.upper.rank() != e.lower.rank() + 1 || !is_cover(e.lower, e.upper)) {
        bad = e.lower.str() + " -- " + e.upper.str();
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

std::optional<std::string> check_covers_genuine(int cap, AltFn) {
  for (int n = 1; n <= cap; ++n) {
    std::optional<std::string> bad;
    for_each_hasse_edge(n, [&](const HasseEdge& e) {
      if (bad) return;
      const std::uint64_t count = 1ull << n;
      for (std::uint64_t zb = 0; zb < count; ++zb) {
        Vertex z(n, static_cast<std::uint32_t>(zb));
        if (z == e.lower || z == e.upper) continue;
        if (leq(e.lower, z) && leq(z, e.upper)) {
          bad = "middle vertex " + z.str() + " inside cover " + e.lower.str() + " < " +
                e.upper.str();
          return;
        }
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

std::optional<std::string> check_cube_containment(int cap, AltFn) {
  for (int n = 1; n <= cap; ++n) {
    const std::uint64_t count = 1ull << n;
    for (std::uint64_t xb = 0; xb < count; ++xb) {
      for (int p = 0; p < n; ++p) {
        if (xb & (1ull << p)) continue;
        Vertex x(n, static_cast<std::uint32_t>(xb));
        Vertex y(n, static_cast<std::uint32_t>(xb | (1ull << p)));
        if (!is_cover(x, y)) {
          return "cube edge " + x.str() + " -- " + y.str() + " missing";
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_bijection_roundtrip(int cap, AltFn) {
  for (int n = 1; n <= std::min(cap, 5); ++n) {
    std::optional<std::string> bad;
    for_each_maximal_chain(n, [&](const Chain& c) {
      if (bad) return;
      Asm a = chain_to_asm(c);
      if (!is_asm(a.order(), a.entries()) || asm_to_chain(a) != c) {
        bad = "chain " + c.vertices().front().str() + "... at n = " + std::to_string(n);
      }
    });
    if (bad) return bad;
    for_each_asm_backtrack(n, [&](const Asm& a) {
      if (bad) return;
      if (chain_to_asm(asm_to_chain(a)) != a) {
        bad = "matrix round trip fails:\n" + serialize_asm(a);
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

std::optional<std::string> check_column_trajectories(int cap, AltFn) {
  for (int n = 1; n <= std::min(cap, 5); ++n) {
    std::optional<std::string> bad;
    for_each_maximal_chain(n, [&](const Chain& c) {
      if (bad) return;
      for (int j = 1; j <= n; ++j) {
        std::vector<int> sigma;
        for (const Vertex& v : c.vertices()) sigma.push_back(v.coordinate(j));
        if (!is_constrained(sigma)) {
          bad = "column " + std::to_string(j) + " trajectory " + format_numeric(sigma);
          return;
        }
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

std::optional<std::string> check_count_vs_enumeration(int cap, AltFn) {
  for (int n = 1; n <= std::min(cap, kDefaultChainEnumLen); ++n) {
    BigInt streamed = 0;
    for_each_maximal_chain(n, [&](const Chain&) { ++streamed; });
    if (streamed != count_maximal_chains(n)) {
      return "n = " + std::to_string(n) + ": DP and DFS disagree";
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_count_vs_oracle(int cap, AltFn) {
  for (int n = 1; n <= std::min(cap, 4); ++n) {
    std::uint64_t oracle = 0;
    for_each_asm_backtrack(n, [&](const Asm&) { ++oracle; });
    if (count_maximal_chains(n) != oracle) {
      return "n = " + std::to_string(n) + ": chain count != ASM oracle count " +
             std::to_string(oracle);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_complement_duality(int cap, AltFn) {
  for (int n = 1; n <= cap; ++n) {
    const std::uint64_t count = 1ull << n;
    for (std::uint64_t xb = 0; xb < count; ++xb) {
      for (std::uint64_t yb = 0; yb < count; ++yb) {
        Vertex x(n, static_cast<std::uint32_t>(xb));
        Vertex y(n, static_cast<std::uint32_t>(yb));
        if (is_cover(x, y) != is_cover(y.complement(), x.complement())) {
          return "x = " + x.str() + ", y = " + y.str();
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_theta_order(int cap, AltFn) {
  for (int n = 1; n <= cap; ++n) {
    const std::uint64_t count = 1ull << n;
    for (std::uint64_t b = 0; b < count; ++b) {
      Vertex v(n, static_cast<std::uint32_t>(b));
      Vertex w = v;
      for (int i = 0; i < n; ++i) w = apply_theta(w);
      if (w != v.complement()) return "theta^n != complement at " + v.str();
      for (int i = 0; i < n; ++i) w = apply_theta(w);
      if (w != v) return "theta^(2n) != id at " + v.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_theta_factorization(int cap, AltFn) {
  for (int n = 1; n <= cap; ++n) {
    const std::uint64_t count = 1ull << n;
    for (std::uint64_t b = 0; b < count; ++b) {
      Vertex v(n, static_cast<std::uint32_t>(b));
      if (apply_xi(apply_rho(v)) != apply_theta(v)) return "xi.rho != theta at " + v.str();
      if (apply_theta_inverse(apply_theta(v)) != v) return "theta^-1.theta != id at " + v.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_braid_relation(int cap, AltFn) {
  for (int n = 1; n <= cap; ++n) {
    const std::uint64_t count = 1ull << n;
    for (std::uint64_t b = 0; b < count; ++b) {
      Vertex v(n, static_cast<std::uint32_t>(b));
      if (apply_theta(apply_tau(v)) != apply_tau(apply_theta_inverse(v))) {
        return "theta.tau != tau.theta^-1 at " + v.str();
      }
      if (apply_tau(apply_tau(v)) != v) return "tau^2 != id at " + v.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_automorphisms(int cap, AltFn) {
  for (int n = 1; n <= std::min(cap, 10); ++n) {
    const auto theta = permutation_table(n, [](const Vertex& v) { return apply_theta(v); });
    const auto tau = permutation_table(n, [](const Vertex& v) { return apply_tau(v); });
    if (!is_graph_automorphism(theta, n)) return "theta fails at n = " + std::to_string(n);
    if (!is_graph_automorphism(tau, n)) return "tau fails at n = " + std::to_string(n);
  }
  return std::nullopt;
}

std::optional<std::string> check_dihedral_algebra(int cap, AltFn) {
  for (int n = 1; n <= std::min(cap, 6); ++n) {
    std::vector<DihedralElement> all;
    for (int r = 0; r <= 1; ++r) {
      for (int k = 0; k < 2 * n; ++k) all.push_back(DihedralElement(n, k, r));
    }
    const std::uint64_t count = 1ull << n;
    for (const auto& g : all) {
      if (!(compose(g, inverse(g)) == DihedralElement::identity(n))) {
        return "g . g^-1 != id at n = " + std::to_string(n);
      }
      for (const auto& h : all) {
        DihedralElement gh = compose(g, h);
        for (std::uint64_t b = 0; b < count; ++b) {
          Vertex v(n, static_cast<std::uint32_t>(b));
          if (apply(gh, v) != apply(g, apply(h, v))) {
            return "apply(compose) mismatch at n = " + std::to_string(n) + ", v = " + v.str();
          }
        }
        for (const auto& f : all) {
          if (!(compose(compose(f, g), h) == compose(f, compose(g, h)))) {
            return "associativity fails at n = " + std::to_string(n);
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_orbit_sizes(int cap, AltFn) {
  for (int n = 1; n <= cap; ++n) {
    const auto theta = permutation_table(n, [](const Vertex& v) { return apply_theta(v); });
    const VertexPermutation gens[] = {theta};
    for (const auto& orbit : vertex_orbits(n, gens)) {
      if ((2 * n) % static_cast<int>(orbit.size()) != 0) {
        return "orbit of size " + std::to_string(orbit.size()) + " at n = " + std::to_string(n);
      }
    }
  }
  return std::nullopt;
}

const CheckSpec kChecks[] = {
    {"constrained -> alternating -> constrained round trip", 8, false, check_roundtrip_sigma},
    {"alternating -> constrained -> alternating round trip", 8, false, check_roundtrip_alpha},
    {"alternating count law |Alt_n| = 2^(n-1) vs brute force", 8, false, check_alt_count_law},
    {"is_alternating matches prefix-sum characterization", 8, false, check_alt_characterization},
    {"alternating enumeration valid and strictly increasing", 8, false,
     check_alt_enumeration_order},
    {"asm oracles agree (exhaustive vs backtracking)", 3, true, check_asm_oracles_agree},
    {"asm oracle outputs pass validation", 6, true, check_asm_outputs_valid},
    {"asm set closed under transpose", 4, true, check_asm_transpose},
    {"asm counts 1, 2, 7, 42, 429, 7436", 6, true, check_asm_counts},
    {"hasse edges raise rank by exactly 1", 10, false, check_gradedness},
    {"declared covers have no strict middle vertex", 6, false, check_covers_genuine},
    {"all n-cube unit-flip edges are covers", 10, false, check_cube_containment},
    {"chain <-> asm bijection round trip", 5, true, check_bijection_roundtrip},
    {"chain column trajectories are constrained", 5, false, check_column_trajectories},
    {"chain count matches chain enumeration", 6, false, check_count_vs_enumeration},
    {"chain count matches asm oracle count", 4, true, check_count_vs_oracle},
    {"cover complement duality", 8, false, check_complement_duality},
    {"theta has order 2n and theta^n is complement", 12, false, check_theta_order},
    {"theta = xi . rho and theta^-1 inverts theta", 12, false, check_theta_factorization},
    {"theta . tau = tau . theta^-1 and tau^2 = id", 12, false, check_braid_relation},
    {"theta and tau are hasse-diagram automorphisms", 10, false, check_automorphisms},
    {"dihedral compose is associative and matches apply", 6, false, check_dihedral_algebra},
    {"theta orbit sizes divide 2n", 12, false, check_orbit_sizes},
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  if (opts.n_max < 1) {
    throw ValidationError(Violation::OutOfRange, "n_max must be at least 1");
  }
  AltFn alt = is_alternating;
  if (opts.inject_fault == "alternating") {
    alt = broken_is_alternating;
  } else if (!opts.inject_fault.empty()) {
    throw ValidationError(Violation::BadToken, "unknown fault '" + opts.inject_fault + "'");
  }
  std::vector<CheckResult> results;
  for (const CheckSpec& spec : kChecks) {
    int cap = std::min(spec.stated_cap, opts.n_max);
    if (spec.oracle_backed) cap = std::min(cap, 6);
    auto counterexample = spec.run(cap, alt);
    if (counterexample) {
      results.push_back({spec.name, false, *counterexample});
    } else {
      results.push_back({spec.name, true, "n <= " + std::to_string(cap)});
    }
  }
  return results;
}

bool all_passed(std::span<const CheckResult> results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace asmposet
