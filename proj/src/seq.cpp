#include "asmposet/seq.hpp"

#include <cctype>

namespace asmposet {

bool is_sign_sequence(std::span<const int> s) {
  if (s.empty()) return false;
  for (int v : s) {
    if (v < -1 || v > 1) return false;
  }
  return true;
}

bool is_alternating(std::span<const int> s) {
  if (s.empty()) return false;
  int expect = 1;  // next nonzero must be this
  for (int v : s) {
    if (v == 0) continue;
    if (v != -1 && v != 1) return false;
    if (v != expect) return false;
    expect = -expect;
  }
  // expect == -1 iff an odd number of nonzeros was seen, so the pattern
  // started and ended with 1.
  return expect == -1;
}

bool is_constrained(std::span<const int> s) {
  if (s.size() < 2) return false;
  for (int v : s) {
    if (v != 0 && v != 1) return false;
  }
  return s.front() == 0 && s.back() == 1;
}

AlternatingSequence::AlternatingSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw ValidationError(Violation::NotAlternating, "alternating sequence must be nonempty");
  }
  int expect = 1;
  bool any = false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    int v = entries_[i];
    if (v < -1 || v > 1) {
      throw ValidationError(Violation::BadEntry,
                            "entry " + std::to_string(i + 1) + " is " + std::to_string(v) +
                                "; expected -1, 0, or 1",
                            static_cast<int>(i + 1));
    }
    if (v == 0) continue;
    if (v != expect) {
      throw ValidationError(Violation::NotAlternating,
                            "entry " + std::to_string(i + 1) +
                                " breaks the 1,-1,...,-1,1 pattern",
                            static_cast<int>(i + 1));
    }
    expect = -expect;
    any = true;
  }
  if (!any) {
    throw ValidationError(Violation::NotAlternating, "no nonzero entries");
  }
  if (expect != -1) {
    throw ValidationError(Violation::NotAlternating, "last nonzero entry must be 1");
  }
}

ConstrainedSequence::ConstrainedSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) {
    throw ValidationError(Violation::WrongLength,
                          "constrained sequence needs at least 2 entries, got " +
                              std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    int v = entries_[i];
    if (v != 0 && v != 1) {
      throw ValidationError(Violation::BadEntry,
                            "entry " + std::to_string(i + 1) + " is " + std::to_string(v) +
                                "; expected 0 or 1",
                            static_cast<int>(i + 1));
    }
  }
  if (entries_.front() != 0) {
    throw ValidationError(Violation::NotConstrained, "first entry must be 0");
  }
  if (entries_.back() != 1) {
    throw ValidationError(Violation::NotConstrained, "last entry must be 1");
  }
}

AlternatingSequence differences(const ConstrainedSequence& sigma) {
  const auto& s = sigma.entries();
  std::vector<int> alpha(s.size() - 1);
  for (std::size_t i = 1; i < s.size(); ++i) {
    alpha[i - 1] = s[i] - s[i - 1];
  }
  return AlternatingSequence(std::move(alpha));
}

ConstrainedSequence partial_sums(const AlternatingSequence& alpha) {
  const auto& a = alpha.entries();
  std::vector<int> sigma(a.size() + 1);
  sigma[0] = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sigma[i + 1] = sigma[i] + a[i];
  }
  return ConstrainedSequence(std::move(sigma));
}

namespace {

void alternating_rec(int n, int sum, std::vector<int>& buf,
                     const std::function<void(std::span<const int>)>& emit) {
  if (static_cast<int>(buf.size()) == n) {
    if (sum == 1) emit(buf);
    return;
  }
  for (int v = -1; v <= 1; ++v) {  // ascending: lex order with -1 < 0 < 1
    int s = sum + v;
    if (s < 0 || s > 1) continue;
    buf.push_back(v);
    alternating_rec(n, s, buf, emit);
    buf.pop_back();
  }
}

}  // namespace

void for_each_alternating(int n, const std::function<void(std::span<const int>)>& emit) {
  if (n < 1 || n > kMaxAltEnumLen) {
    throw ValidationError(Violation::OutOfRange,
                          "enumeration length must be between 1 and " +
                              std::to_string(kMaxAltEnumLen) + ", got " + std::to_string(n));
  }
  std::vector<int> buf;
  buf.reserve(static_cast<std::size_t>(n));
  alternating_rec(n, 0, buf, emit);
}

std::vector<AlternatingSequence> enumerate_alternating(int n) {
  std::vector<AlternatingSequence> out;
  for_each_alternating(n, [&](std::span<const int> s) {
    out.push_back(AlternatingSequence(std::vector<int>(s.begin(), s.end())));
  });
  return out;
}

std::string format_numeric(std::span<const int> s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

std::string format_compact(std::span<const int> s) {
  std::string out;
  out.reserve(s.size());
  for (int v : s) {
    out += (v == 1) ? '+' : (v == -1) ? '-' : '0';
  }
  return out;
}

namespace {

bool compact_alphabet(std::string_view t) {
  for (char c : t) {
    if (c != '+' && c != '-' && c != '0') return false;
  }
  return true;
}

}  // namespace

SignSequence parse_sign_sequence(std::string_view text) {
  // Trim outer whitespace first so a trailing newline does not force the
  // numeric branch.
  std::size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) {
    throw ValidationError(Violation::BadToken, "empty sequence");
  }
  std::size_t e = text.find_last_not_of(" \t\r\n");
  std::string_view t = text.substr(b, e - b + 1);

  bool has_space = t.find_first_of(" \t\r\n") != std::string_view::npos;
  if (!has_space && compact_alphabet(t)) {
    SignSequence out;
    out.reserve(t.size());
    for (char c : t) {
      out.push_back(c == '+' ? 1 : c == '-' ? -1 : 0);
    }
    return out;
  }

  SignSequence out;
  std::size_t pos = 0;
  int tok = 0;
  while (pos < t.size()) {
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos >= t.size()) break;
    std::size_t end = pos;
    while (end < t.size() && !std::isspace(static_cast<unsigned char>(t[end]))) ++end;
    std::string_view token = t.substr(pos, end - pos);
    ++tok;
    if (token == "1") {
      out.push_back(1);
    } else if (token == "0") {
      out.push_back(0);
    } else if (token == "-1") {
      out.push_back(-1);
    } else {
      throw ValidationError(Violation::BadToken,
                            "token " + std::to_string(tok) + ": '" + std::string(token) +
                                "' is not -1, 0, or 1",
                            tok);
    }
    pos = end;
  }
  return out;
}

}  // namespace asmposet
