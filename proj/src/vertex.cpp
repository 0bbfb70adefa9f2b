#include "asmposet/vertex.hpp"

#include <bit>

namespace asmposet {

Vertex::Vertex(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > kMaxVertexLen) {
    throw ValidationError(Violation::OutOfRange,
                          "vertex length must be between 1 and " +
                              std::to_string(kMaxVertexLen) + ", got " + std::to_string(n));
  }
  if (n < 32 && (bits >> n) != 0) {
    throw ValidationError(Violation::BadEntry,
                          "bits 0x" + std::to_string(bits) + " do not fit in " +
                              std::to_string(n) + " coordinates");
  }
}

Vertex Vertex::ones(int n) {
  Vertex v = Vertex::zero(n);
  v.bits_ = (n == 32) ? ~0u : ((1u << n) - 1u);
  return v;
}

Vertex Vertex::parse(std::string_view text) {
  if (text.empty()) {
    throw ValidationError(Violation::BadToken, "empty vertex");
  }
  if (static_cast<int>(text.size()) > kMaxVertexLen) {
    throw ValidationError(Violation::OutOfRange,
                          "vertex longer than " + std::to_string(kMaxVertexLen) +
                              " coordinates");
  }
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '0' && c != '1') {
      throw ValidationError(Violation::BadToken,
                            "char " + std::to_string(i + 1) + ": expected '0' or '1', got '" +
                                std::string(1, c) + "'",
                            static_cast<int>(i + 1));
    }
    bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return Vertex(static_cast<int>(text.size()), bits);
}

int Vertex::rank() const { return std::popcount(bits_); }

Vertex Vertex::complement() const {
  std::uint32_t mask = (n_ == 32) ? ~0u : ((1u << n_) - 1u);
  return Vertex(n_, bits_ ^ mask);
}

std::string Vertex::str() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    if ((bits_ >> (n_ - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

int rank(const Vertex& v) { return v.rank(); }
Vertex complement(const Vertex& v) { return v.complement(); }

}  // namespace asmposet
