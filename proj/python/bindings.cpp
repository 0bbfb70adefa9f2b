#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "asmposet/io.hpp"
#include "asmposet/poset.hpp"
#include "asmposet/symmetry.hpp"
#include "asmposet/verify.hpp"

namespace py = pybind11;

namespace {

using namespace asmposet;

Vertex word(const std::string& s) { return Vertex::parse(s); }

std::vector<std::string> to_strings(const std::vector<Vertex>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (const Vertex& v : vs) out.push_back(v.str());
  return out;
}

std::vector<std::vector<int>> asm_rows(const Asm& a) {
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(a.order()));
  for (int i = 0; i < a.order(); ++i) rows.push_back(a.row(i));
  return rows;
}

Chain chain_from_strings(const std::vector<std::string>& vs) {
  std::vector<Vertex> verts;
  verts.reserve(vs.size());
  for (const auto& s : vs) verts.push_back(Vertex::parse(s));
  return Chain::validate(std::move(verts));
}

py::int_ bigint_to_py(const BigInt& v) {
  const std::string dec = v.str();
  PyObject* obj = PyLong_FromString(dec.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

VertexPermutation named_permutation(int n, const std::string& name) {
  if (name == "theta") {
    return permutation_table(n, [](const Vertex& v) { return apply_theta(v); });
  }
  if (name == "tau") {
    return permutation_table(n, [](const Vertex& v) { return apply_tau(v); });
  }
  if (name == "rho") {
    return permutation_table(n, [](const Vertex& v) { return apply_rho(v); });
  }
  if (name == "xi") {
    return permutation_table(n, [](const Vertex& v) { return apply_xi(v); });
  }
  throw ValidationError(Violation::BadToken,
                        "unknown generator '" + name + "' (use theta, tau, rho, or xi)");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Core operations on the ASM chain poset: alternating sequences, "
            "alternating sign matrices, covers and maximal chains, and the "
            "dihedral symmetry of the Hasse diagram.";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  // sequences
  m.def("is_alternating", [](const std::vector<int>& s) { return is_alternating(s); }, py::arg("entries"));
  m.def("is_constrained", [](const std::vector<int>& s) { return is_constrained(s); }, py::arg("entries"));
  m.def("differences",
        [](const std::vector<int>& sigma) {
          return differences(ConstrainedSequence(sigma)).entries();
        },
        py::arg("sigma"));
  m.def("partial_sums",
        [](const std::vector<int>& alpha) {
          return partial_sums(AlternatingSequence(alpha)).entries();
        },
        py::arg("alpha"));
  m.def("enumerate_alternating",
        [](int n) {
          std::vector<std::vector<int>> out;
          for_each_alternating(n, [&](std::span<const int> s) {
            out.emplace_back(s.begin(), s.end());
          });
          return out;
        },
        py::arg("n"));
  m.def("complement", [](const std::string& v) { return word(v).complement().str(); },
        py::arg("vertex"));
  m.def("rank", [](const std::string& v) { return word(v).rank(); }, py::arg("vertex"));

  // alternating sign matrices
  m.def("validate_asm",
        [](const std::vector<std::vector<int>>& rows) { (void)Asm::validate(rows); },
        py::arg("rows"), "Raises ValidationError when the grid is not an ASM.");
  m.def("is_asm",
        [](const std::vector<std::vector<int>>& rows) {
          try {
            (void)Asm::validate(rows);
            return true;
          } catch (const ValidationError&) {
            return false;
          }
        },
        py::arg("rows"));
  m.def("enumerate_asms",
        [](int n, const std::string& method) {
          std::vector<std::vector<std::vector<int>>> out;
          if (method == "exhaustive") {
            for (const auto& a : enumerate_asms_exhaustive(n)) out.push_back(asm_rows(a));
          } else if (method == "chains") {
            for_each_maximal_chain(
                n, [&](const Chain& c) { out.push_back(asm_rows(chain_to_asm(c))); });
          } else if (method == "backtrack") {
            for_each_asm_backtrack(n, [&](const Asm& a) { out.push_back(asm_rows(a)); });
          } else {
            throw ValidationError(Violation::BadToken, "unknown method '" + method + "'");
          }
          return out;
        },
        py::arg("n"), py::arg("method") = "backtrack");
  m.def("parse_asm", [](const std::string& text) { return asm_rows(parse_asm_any(text)); },
        py::arg("text"));
  m.def("serialize_asm",
        [](const std::vector<std::vector<int>>& rows) { return serialize_asm(Asm::validate(rows)); },
        py::arg("rows"));

  // poset
  m.def("is_cover", [](const std::string& x, const std::string& y) { return is_cover(word(x), word(y)); },
        py::arg("x"), py::arg("y"));
  m.def("up_covers", [](const std::string& x) { return to_strings(up_covers(word(x))); },
        py::arg("x"));
  m.def("down_covers", [](const std::string& y) { return to_strings(down_covers(word(y))); },
        py::arg("y"));
  m.def("leq", [](const std::string& x, const std::string& y) { return leq(word(x), word(y)); },
        py::arg("x"), py::arg("y"));
  m.def("hasse_edges",
        [](int n) {
          std::vector<std::pair<std::string, std::string>> out;
          for_each_hasse_edge(n, [&](const HasseEdge& e) {
            out.emplace_back(e.lower.str(), e.upper.str());
          });
          return out;
        },
        py::arg("n"));
  m.def("count_maximal_chains", [](int n) { return bigint_to_py(count_maximal_chains(n)); },
        py::arg("n"));
  m.def("maximal_chains",
        [](int n, bool force) {
          std::vector<std::vector<std::string>> out;
          for_each_maximal_chain(
              n, [&](const Chain& c) { out.push_back(to_strings(c.vertices())); }, force);
          return out;
        },
        py::arg("n"), py::arg("force") = false);
  m.def("validate_chain",
        [](const std::vector<std::string>& vs) { (void)chain_from_strings(vs); },
        py::arg("vertices"), "Raises ValidationError when the list is not a maximal chain.");
  m.def("chain_to_asm",
        [](const std::vector<std::string>& vs) { return asm_rows(chain_to_asm(chain_from_strings(vs))); },
        py::arg("vertices"));
  m.def("asm_to_chain",
        [](const std::vector<std::vector<int>>& rows) {
          return to_strings(asm_to_chain(Asm::validate(rows)).vertices());
        },
        py::arg("rows"));

  // symmetry
  m.def("rho", [](const std::string& v) { return apply_rho(word(v)).str(); }, py::arg("vertex"));
  m.def("xi", [](const std::string& v) { return apply_xi(word(v)).str(); }, py::arg("vertex"));
  m.def("theta", [](const std::string& v) { return apply_theta(word(v)).str(); }, py::arg("vertex"));
  m.def("theta_inverse", [](const std::string& v) { return apply_theta_inverse(word(v)).str(); },
        py::arg("vertex"));
  m.def("tau", [](const std::string& v) { return apply_tau(word(v)).str(); }, py::arg("vertex"));
  m.def("theta_cycle", [](const std::string& v) { return to_strings(theta_cycle(word(v))); },
        py::arg("vertex"));
  m.def("theta_cycles_report", &theta_cycles_report, py::arg("n"));
  m.def("vertex_orbits",
        [](int n, const std::vector<std::string>& generators) {
          std::vector<VertexPermutation> gens;
          for (const auto& g : generators) gens.push_back(named_permutation(n, g));
          std::vector<std::vector<std::string>> out;
          for (const auto& orbit : vertex_orbits(n, gens)) out.push_back(to_strings(orbit));
          return out;
        },
        py::arg("n"), py::arg("generators") = std::vector<std::string>{"theta"});
  m.def("is_graph_automorphism",
        [](int n, const std::vector<std::string>& images) {
          VertexPermutation f;
          f.reserve(images.size());
          for (const auto& s : images) {
            Vertex v = Vertex::parse(s);
            if (v.length() != n) {
              throw ValidationError(Violation::LengthMismatch,
                                    "image " + s + " does not have length " + std::to_string(n));
            }
            f.push_back(v.bits());
          }
          return is_graph_automorphism(f, n);
        },
        py::arg("n"), py::arg("images"),
        "images[k] is the image of the vertex whose bitstring is k in binary.");
  m.def("group_order", &group_order, py::arg("n"));

  py::class_<DihedralElement>(m, "DihedralElement",
                              "Canonical form theta^k . tau^r, tau applied first.")
      .def(py::init<int, int, int>(), py::arg("n"), py::arg("k"), py::arg("r"))
      .def_property_readonly("n", &DihedralElement::length)
      .def_property_readonly("k", &DihedralElement::k)
      .def_property_readonly("r", &DihedralElement::r)
      .def("apply", [](const DihedralElement& g, const std::string& v) { return apply(g, word(v)).str(); },
           py::arg("vertex"))
      .def("inverse", [](const DihedralElement& g) { return inverse(g); })
      .def("__mul__", [](const DihedralElement& g, const DihedralElement& h) { return compose(g, h); })
      .def("__eq__", [](const DihedralElement& g, const DihedralElement& h) { return g == h; })
      .def("__repr__", [](const DihedralElement& g) {
        return "DihedralElement(n=" + std::to_string(g.length()) + ", k=" + std::to_string(g.k()) +
               ", r=" + std::to_string(g.r()) + ")";
      });

  // invariant suite
  m.def("verify",
        [](int n_max) {
          VerifyOptions opts;
          opts.n_max = n_max;
          std::vector<std::tuple<std::string, bool, std::string>> out;
          for (const auto& r : run_verification(opts)) {
            out.emplace_back(r.name, r.pass, r.detail);
          }
          return out;
        },
        py::arg("n_max") = 6);
}
