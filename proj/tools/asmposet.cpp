// asmposet: command-line front end over the library. Exit codes: 0 success,
// 1 domain/validation failure, 2 usage error. Machine-readable output goes to
// stdout and is byte-stable across runs; diagnostics go to stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "asmposet/io.hpp"
#include "asmposet/poset.hpp"
#include "asmposet/symmetry.hpp"
#include "asmposet/verify.hpp"
#include "json.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
      throw asmposet::ValidationError(asmposet::Violation::BadToken,
                                      "cannot open '" + path + "'");
    }
    ss << f.rdbuf();
  }
  return ss.str();
}

int run_alt(int n, const std::string& format) {
  asmposet::for_each_alternating(n, [&](std::span<const int> s) {
    if (format == "numeric") {
      std::cout << asmposet::format_numeric(s) << '\n';
    } else if (format == "json") {
      std::cout << nlohmann::json(std::vector<int>(s.begin(), s.end())).dump() << '\n';
    } else {
      std::cout << asmposet::format_compact(s) << '\n';
    }
  });
  return 0;
}

int run_chains_count(int n) {
  std::cout << asmposet::count_maximal_chains(n) << '\n';
  return 0;
}

int run_chains_enumerate(int n, bool force, bool quiet) {
  if (n > asmposet::kDefaultChainEnumLen && !quiet) {
    std::cerr << "note: streaming " << asmposet::count_maximal_chains(n) << " chains\n";
  }
  asmposet::for_each_maximal_chain(
      n, [&](const asmposet::Chain& c) { std::cout << asmposet::chain_to_json(c) << '\n'; },
      force);
  return 0;
}

int run_asm_validate(const std::string& input) {
  asmposet::Asm a = asmposet::parse_asm_any(read_input(input));
  std::cout << "ok n=" << a.order() << '\n';
  return 0;
}

void print_asm_stream(const asmposet::Asm& a, const std::string& format) {
  if (format == "text") {
    std::cout << asmposet::serialize_asm(a) << "\n\n";
  } else {
    std::cout << asmposet::asm_to_json(a) << '\n';
  }
}

int run_asm_enumerate(int n, const std::string& method, const std::string& format, bool force) {
  if (method == "exhaustive") {
    for (const auto& a : asmposet::enumerate_asms_exhaustive(n)) print_asm_stream(a, format);
  } else if (method == "chains") {
    asmposet::for_each_maximal_chain(
        n,
        [&](const asmposet::Chain& c) { print_asm_stream(asmposet::chain_to_asm(c), format); },
        force);
  } else {
    asmposet::for_each_asm_backtrack(
        n, [&](const asmposet::Asm& a) { print_asm_stream(a, format); });
  }
  return 0;
}

int run_asm_to_chain(const std::string& input) {
  asmposet::Asm a = asmposet::parse_asm_any(read_input(input));
  std::cout << asmposet::chain_to_json(asmposet::asm_to_chain(a)) << '\n';
  return 0;
}

int run_chain_to_asm(const std::string& input) {
  asmposet::Chain c = asmposet::parse_chain(read_input(input));
  std::cout << asmposet::serialize_asm(asmposet::chain_to_asm(c)) << '\n';
  return 0;
}

int run_hasse(int n, const std::string& format) {
  if (format == "dot") {
    asmposet::write_hasse_dot(std::cout, n);
  } else if (format == "json") {
    asmposet::write_hasse_json(std::cout, n);
  } else {
    asmposet::write_hasse_edgelist(std::cout, n);
  }
  return 0;
}

int run_theta_cycles(int n) {
  std::cout << asmposet::theta_cycles_report(n);
  return 0;
}

int run_orbits(int n, const std::string& gen, const std::string& format) {
  std::vector<asmposet::VertexPermutation> gens;
  gens.push_back(asmposet::permutation_table(
      n, [](const asmposet::Vertex& v) { return asmposet::apply_theta(v); }));
  if (gen == "theta,tau") {
    gens.push_back(asmposet::permutation_table(
        n, [](const asmposet::Vertex& v) { return asmposet::apply_tau(v); }));
  }
  const auto orbits = asmposet::vertex_orbits(n, gens);
  if (format == "json") {
    std::cout << asmposet::orbits_json(orbits) << '\n';
  } else {
    std::cout << asmposet::orbits_report(orbits);
  }
  return 0;
}

int run_sym_check(int n) {
  const auto theta = asmposet::permutation_table(
      n, [](const asmposet::Vertex& v) { return asmposet::apply_theta(v); });
  const auto tau = asmposet::permutation_table(
      n, [](const asmposet::Vertex& v) { return asmposet::apply_tau(v); });
  const bool theta_ok = asmposet::is_graph_automorphism(theta, n);
  const bool tau_ok = asmposet::is_graph_automorphism(tau, n);
  std::cout << "theta automorphism: " << (theta_ok ? "ok" : "FAIL") << '\n';
  std::cout << "tau automorphism: " << (tau_ok ? "ok" : "FAIL") << '\n';
  std::cout << "realized group order: " << asmposet::group_order(n) << '\n';
  return (theta_ok && tau_ok) ? 0 : 1;
}

int run_verify(int n_max, const std::string& fault) {
  asmposet::VerifyOptions opts;
  opts.n_max = n_max;
  opts.inject_fault = fault;
  const auto results = asmposet::run_verification(opts);
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.pass) {
      std::cout << "[ ok ] " << r.name << " (" << r.detail << ")\n";
      ++passed;
    } else {
      std::cout << "[FAIL] " << r.name << ": " << r.detail << '\n';
    }
  }
  std::cout << passed << "/" << results.size() << " checks passed\n";
  return asmposet::all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"the ASM chain poset: covers, maximal chains, the chain <-> "
               "alternating-sign-matrix bijection, and the dihedral symmetry of "
               "its Hasse diagram"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress informational notes on stderr");

  std::function<int()> action;

  // alt <n>
  {
    auto* alt = app.add_subcommand("alt", "list the alternating sequences of length n");
    auto n = std::make_shared<int>(1);
    auto format = std::make_shared<std::string>("compact");
    alt->add_option("n", *n, "sequence length")->required()->check(CLI::Range(1, 24));
    alt->add_option("--format", *format, "compact|numeric|json")
        ->check(CLI::IsMember({"compact", "numeric", "json"}));
    alt->callback([&action, n, format] {
      action = [n, format] { return run_alt(*n, *format); };
    });
  }

  // chains count|enumerate <n>
  {
    auto* chains = app.add_subcommand("chains", "maximal chains of the poset");
    chains->require_subcommand(1);
    auto n = std::make_shared<int>(1);
    auto force = std::make_shared<bool>(false);

    auto* count = chains->add_subcommand("count", "count the maximal chains");
    count->add_option("n", *n, "word length")->required()->check(CLI::Range(1, 20));
    count->callback([&action, n] {
      action = [n] { return run_chains_count(*n); };
    });

    auto* enumerate = chains->add_subcommand("enumerate", "stream the maximal chains as JSON lines");
    enumerate->add_option("n", *n, "word length")->required()->check(CLI::Range(1, 20));
    enumerate->add_flag("--force", *force, "lift the n <= 6 guard");
    enumerate->callback([&action, n, force, &quiet] {
      if (*n > asmposet::kDefaultChainEnumLen && !*force) {
        throw CLI::ValidationError("enumerate",
                                   "n > 6 needs --force (output grows like the ASM numbers)");
      }
      action = [n, force, &quiet] { return run_chains_enumerate(*n, *force, quiet); };
    });
  }

  // asm validate|enumerate|to-chain
  {
    auto* am = app.add_subcommand("asm", "alternating sign matrices");
    am->require_subcommand(1);

    auto input = std::make_shared<std::string>("-");
    auto* validate = am->add_subcommand("validate", "validate a matrix (text or JSON)");
    validate->add_option("input", *input, "file path or - for stdin");
    validate->callback([&action, input] {
      action = [input] { return run_asm_validate(*input); };
    });

    auto n = std::make_shared<int>(1);
    auto method = std::make_shared<std::string>("backtrack");
    auto format = std::make_shared<std::string>("json");
    auto force = std::make_shared<bool>(false);
    auto* enumerate = am->add_subcommand("enumerate", "stream all ASMs of order n");
    enumerate->add_option("n", *n, "matrix order")->required()->check(CLI::Range(1, 20));
    enumerate->add_option("--method", *method, "backtrack|exhaustive|chains")
        ->check(CLI::IsMember({"backtrack", "exhaustive", "chains"}));
    enumerate->add_option("--format", *format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    enumerate->add_flag("--force", *force, "lift the n <= 6 guard of the chains method");
    enumerate->callback([&action, n, method, format, force] {
      if (*method == "exhaustive" && *n > asmposet::kMaxExhaustiveAsmLen) {
        throw CLI::ValidationError("enumerate", "--method exhaustive supports n <= 3");
      }
      if (*method == "backtrack" && *n > asmposet::kMaxBacktrackAsmLen) {
        throw CLI::ValidationError("enumerate", "--method backtrack supports n <= 6");
      }
      if (*method == "chains" && *n > asmposet::kDefaultChainEnumLen && !*force) {
        throw CLI::ValidationError("enumerate", "--method chains needs --force above n = 6");
      }
      action = [n, method, format, force] {
        return run_asm_enumerate(*n, *method, *format, *force);
      };
    });

    auto tc_input = std::make_shared<std::string>("-");
    auto* to_chain = am->add_subcommand("to-chain", "map a matrix to its maximal chain");
    to_chain->add_option("input", *tc_input, "file path or - for stdin");
    to_chain->callback([&action, tc_input] {
      action = [tc_input] { return run_asm_to_chain(*tc_input); };
    });
  }

  // chain-to-asm
  {
    auto input = std::make_shared<std::string>("-");
    auto* c2a = app.add_subcommand("chain-to-asm",
                                   "map a chain (JSON or bitstring tokens) to its matrix");
    c2a->add_option("input", *input, "file path or - for stdin");
    c2a->callback([&action, input] {
      action = [input] { return run_chain_to_asm(*input); };
    });
  }

  // hasse <n>
  {
    auto n = std::make_shared<int>(1);
    auto format = std::make_shared<std::string>("edgelist");
    auto* hasse = app.add_subcommand("hasse", "export the Hasse diagram");
    hasse->add_option("n", *n, "word length")->required()->check(CLI::Range(1, 14));
    hasse->add_option("--format", *format, "edgelist|dot|json")
        ->check(CLI::IsMember({"edgelist", "dot", "json"}));
    hasse->callback([&action, n, format] {
      action = [n, format] { return run_hasse(*n, *format); };
    });
  }

  // sym theta-cycles|orbits|check
  {
    auto* sym = app.add_subcommand("sym", "the dihedral action on the Hasse diagram");
    sym->require_subcommand(1);

    auto n = std::make_shared<int>(1);
    auto* cycles = sym->add_subcommand("theta-cycles", "print every theta cycle");
    cycles->add_option("n", *n, "word length")->required()->check(CLI::Range(1, 12));
    cycles->callback([&action, n] {
      action = [n] { return run_theta_cycles(*n); };
    });

    auto on = std::make_shared<int>(1);
    auto gen = std::make_shared<std::string>("theta");
    auto oformat = std::make_shared<std::string>("text");
    auto* orbits = sym->add_subcommand("orbits", "print the vertex orbit partition");
    orbits->add_option("n", *on, "word length")->required()->check(CLI::Range(1, 12));
    orbits->add_option("--gen", *gen, "theta|theta,tau")
        ->check(CLI::IsMember({"theta", "theta,tau"}));
    orbits->add_option("--format", *oformat, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    orbits->callback([&action, on, gen, oformat] {
      action = [on, gen, oformat] { return run_orbits(*on, *gen, *oformat); };
    });

    auto cn = std::make_shared<int>(1);
    auto* check = sym->add_subcommand("check", "verify theta/tau are automorphisms");
    check->add_option("n", *cn, "word length")->required()->check(CLI::Range(1, 10));
    check->callback([&action, cn] {
      action = [cn] { return run_sym_check(*cn); };
    });
  }

  // verify [n_max]
  {
    auto n_max = std::make_shared<int>(6);
    auto fault = std::make_shared<std::string>("");
    auto* verify = app.add_subcommand("verify", "run the whole invariant suite");
    verify->add_option("n_max", *n_max, "size cap for every check (default 6)")
        ->check(CLI::Range(1, 12));
    verify->add_option("--inject-fault", *fault,
                       "self-test hook: break a named predicate ('alternating')");
    verify->callback([&action, n_max, fault] {
      action = [n_max, fault] { return run_verify(*n_max, *fault); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const asmposet::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
