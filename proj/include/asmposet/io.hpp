#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "asmposet/poset.hpp"

namespace asmposet {

// Chain JSON: {"n":3,"vertices":["000","010","101","111"]}.
std::string chain_to_json(const Chain& c);
Chain chain_from_json(std::string_view text);
// Whitespace-separated bitstrings: "000 010 101 111".
Chain chain_from_tokens(std::string_view text);
// Accepts either form (JSON if the first non-space byte is '{').
Chain parse_chain(std::string_view text);

// ASM JSON: {"n":3,"rows":[[0,1,0],[1,-1,1],[0,1,0]]}.
std::string asm_to_json(const Asm& a);
Asm asm_from_json(std::string_view text);
// Text or JSON, dispatched like parse_chain.
Asm parse_asm_any(std::string_view text);

// Hasse diagram exports, all in the canonical edge order.
void write_hasse_edgelist(std::ostream& out, int n);
void write_hasse_dot(std::ostream& out, int n);
void write_hasse_json(std::ostream& out, int n);

// One theta-cycle per line, "v1 -> v2 -> ... -> v1", cycles listed by their
// lexicographically minimal starting vertex.
std::string theta_cycles_report(int n);

// One orbit per line, members space-separated.
std::string orbits_report(const std::vector<std::vector<Vertex>>& orbits);
std::string orbits_json(const std::vector<std::vector<Vertex>>& orbits);

}  // namespace asmposet
