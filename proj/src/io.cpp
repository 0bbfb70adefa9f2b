#include "asmposet/io.hpp"

#include <ostream>

#include "asmposet/symmetry.hpp"
#include "json.hpp"

namespace asmposet {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ValidationError(Violation::BadToken, std::string("malformed ") + what + " JSON");
  }
  return j;
}

std::string_view skip_space(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  return (b == std::string_view::npos) ? std::string_view{} : text.substr(b);
}

}  // namespace

std::string chain_to_json(const Chain& c) {
  json j;
  j["n"] = c.length();
  json vs = json::array();
  for (const Vertex& v : c.vertices()) vs.push_back(v.str());
  j["vertices"] = std::move(vs);
  return j.dump();
}

Chain chain_from_json(std::string_view text) {
  json j = parse_json(text, "chain");
  if (!j.is_object() || !j.contains("n") || !j.contains("vertices") ||
      !j["n"].is_number_integer() || !j["vertices"].is_array()) {
    throw ValidationError(Violation::BadToken,
                          R"(chain JSON must look like {"n":3,"vertices":["000",...]})");
  }
  const int n = j["n"].get<int>();
  std::vector<Vertex> vs;
  for (const auto& item : j["vertices"]) {
    if (!item.is_string()) {
      throw ValidationError(Violation::BadToken, "chain vertices must be bitstrings");
    }
    Vertex v = Vertex::parse(item.get<std::string>());
    if (v.length() != n) {
      throw ValidationError(Violation::LengthMismatch,
                            "vertex " + v.str() + " does not have declared length " +
                                std::to_string(n));
    }
    vs.push_back(v);
  }
  return Chain::validate(std::move(vs));
}

Chain chain_from_tokens(std::string_view text) {
  std::vector<Vertex> vs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r')) {
      ++pos;
    }
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\n' &&
           text[end] != '\r') {
      ++end;
    }
    vs.push_back(Vertex::parse(text.substr(pos, end - pos)));
    pos = end;
  }
  return Chain::validate(std::move(vs));
}

Chain parse_chain(std::string_view text) {
  std::string_view t = skip_space(text);
  if (!t.empty() && t.front() == '{') return chain_from_json(t);
  return chain_from_tokens(t);
}

std::string asm_to_json(const Asm& a) {
  json j;
  j["n"] = a.order();
  json rows = json::array();
  for (int i = 0; i < a.order(); ++i) rows.push_back(a.row(i));
  j["rows"] = std::move(rows);
  return j.dump();
}

Asm asm_from_json(std::string_view text) {
  json j = parse_json(text, "matrix");
  if (!j.is_object() || !j.contains("n") || !j.contains("rows") || !j["n"].is_number_integer() ||
      !j["rows"].is_array()) {
    throw ValidationError(Violation::BadToken,
                          R"(matrix JSON must look like {"n":3,"rows":[[0,1,0],...]})");
  }
  const int n = j["n"].get<int>();
  std::vector<std::vector<int>> rows;
  for (const auto& r : j["rows"]) {
    if (!r.is_array()) {
      throw ValidationError(Violation::BadToken, "matrix rows must be arrays of integers");
    }
    std::vector<int> row;
    for (const auto& v : r) {
      if (!v.is_number_integer()) {
        throw ValidationError(Violation::BadToken, "matrix entries must be integers");
      }
      row.push_back(v.get<int>());
    }
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != n) {
    throw ValidationError(Violation::NonSquare,
                          "declared n = " + std::to_string(n) + " but got " +
                              std::to_string(rows.size()) + " rows");
  }
  return Asm::validate(rows);
}

Asm parse_asm_any(std::string_view text) {
  std::string_view t = skip_space(text);
  if (!t.empty() && t.front() == '{') return asm_from_json(t);
  return parse_asm(t);
}

void write_hasse_edgelist(std::ostream& out, int n) {
  for_each_hasse_edge(n, [&](const HasseEdge& e) {
    out << e.lower.str() << ' ' << e.upper.str() << '\n';
  });
}

void write_hasse_dot(std::ostream& out, int n) {
  out << "graph hasse_n" << n << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  // one rank=same group per rank, vertices in lex order
  std::vector<std::vector<std::string>> by_rank(static_cast<std::size_t>(n) + 1);
  const std::uint64_t count = 1ull << n;
  for (std::uint64_t b = 0; b < count; ++b) {
    Vertex v(n, static_cast<std::uint32_t>(b));
    by_rank[static_cast<std::size_t>(v.rank())].push_back(v.str());
  }
  for (int r = 0; r <= n; ++r) {
    out << "  { rank=same;";
    for (const auto& s : by_rank[static_cast<std::size_t>(r)]) out << " \"" << s << "\";";
    out << " }\n";
  }
  for_each_hasse_edge(n, [&](const HasseEdge& e) {
    out << "  \"" << e.lower.str() << "\" -- \"" << e.upper.str() << "\";\n";
  });
  out << "}\n";
}

void write_hasse_json(std::ostream& out, int n) {
  // Streamed by hand so large diagrams never materialize in memory.
  out << "{\"n\":" << n << ",\"vertices\":[";
  const std::uint64_t count = 1ull << n;
  for (std::uint64_t b = 0; b < count; ++b) {
    if (b) out << ',';
    out << '"' << Vertex(n, static_cast<std::uint32_t>(b)).str() << '"';
  }
  out << "],\"edges\":[";
  bool first = true;
  for_each_hasse_edge(n, [&](const HasseEdge& e) {
    if (!first) out << ',';
    first = false;
    out << "[\"" << e.lower.str() << "\",\"" << e.upper.str() << "\"]";
  });
  out << "]}\n";
}

std::string theta_cycles_report(int n) {
  const std::uint64_t count = 1ull << n;
  std::vector<bool> visited(count, false);
  std::string out;
  for (std::uint64_t seed = 0; seed < count; ++seed) {
    if (visited[seed]) continue;
    const std::vector<Vertex> cycle = theta_cycle(Vertex(n, static_cast<std::uint32_t>(seed)));
    for (const Vertex& v : cycle) visited[v.bits()] = true;
    for (const Vertex& v : cycle) {
      out += v.str();
      out += " -> ";
    }
    out += cycle.front().str();
    out += '\n';
  }
  return out;
}

std::string orbits_report(const std::vector<std::vector<Vertex>>& orbits) {
  std::string out;
  for (const auto& orbit : orbits) {
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      if (i) out += ' ';
      out += orbit[i].str();
    }
    out += '\n';
  }
  return out;
}

std::string orbits_json(const std::vector<std::vector<Vertex>>& orbits) {
  json arr = json::array();
  for (const auto& orbit : orbits) {
    json o = json::array();
    for (const Vertex& v : orbit) o.push_back(v.str());
    arr.push_back(std::move(o));
  }
  json j;
  j["orbits"] = std::move(arr);
  return j.dump();
}

}  // namespace asmposet
