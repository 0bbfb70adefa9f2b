#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "asmposet/error.hpp"

namespace asmposet {

// Hard cap on word length; keeps every vertex in a 32-bit mask.
inline constexpr int kMaxVertexLen = 24;

// A binary word (a1, a2, ..., an). Coordinate a_i lives in bit (n - i) of
// `bits`, so unsigned comparison of `bits` agrees with lexicographic order of
// the textual form a1a2...an (a1 leftmost).
class Vertex {
public:
  Vertex(int n, std::uint32_t bits);

  static Vertex zero(int n) { return Vertex(n, 0); }
  static Vertex ones(int n);
  static Vertex parse(std::string_view text);

  int length() const { return n_; }
  std::uint32_t bits() const { return bits_; }

  // 1-based coordinate access: a_i.
  int coordinate(int i) const { return static_cast<int>((bits_ >> (n_ - i)) & 1u); }

  int rank() const;
  Vertex complement() const;

  std::string str() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;

private:
  int n_;
  std::uint32_t bits_;
};

int rank(const Vertex& v);
Vertex complement(const Vertex& v);

}  // namespace asmposet
