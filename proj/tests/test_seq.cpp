#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>

#include "asmposet/seq.hpp"
#include "asmposet/vertex.hpp"
#include "doctest.h"

using namespace asmposet;

namespace {

// Independent oracle: alternating iff every prefix sum is 0 or 1 and the
// total is 1. Deliberately a different algorithm than the library's
// pattern scan.
bool oracle_alternating(const std::vector<int>& s) {
  if (s.empty()) return false;
  int sum = 0;
  for (int v : s) {
    if (v < -1 || v > 1) return false;
    sum += v;
    if (sum < 0 || sum > 1) return false;
  }
  return sum == 1;
}

// All of {-1,0,1}^n, row-major odometer.
void all_sign_sequences(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> s(static_cast<std::size_t>(n), -1);
  for (;;) {
    f(s);
    int i = n - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == 1) {
      s[static_cast<std::size_t>(i)] = -1;
      --i;
    }
    if (i < 0) break;
    ++s[static_cast<std::size_t>(i)];
  }
}

void all_constrained(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> s(static_cast<std::size_t>(n) + 1, 0);
  s[static_cast<std::size_t>(n)] = 1;
  const std::uint32_t count = 1u << (n - 1);
  for (std::uint32_t m = 0; m < count; ++m) {
    for (int i = 1; i < n; ++i) s[static_cast<std::size_t>(i)] = static_cast<int>((m >> (i - 1)) & 1u);
    f(s);
  }
}

}  // namespace

TEST_CASE("is_alternating on known sequences") {
  CHECK(is_alternating(std::vector<int>{0, 1, 0, 0, -1, 1, 0, -1, 0, 1}));
  CHECK(is_alternating(std::vector<int>{1, 0, 0, 0}));
  CHECK(is_alternating(std::vector<int>{0, 1, -1, 1}));
  CHECK_FALSE(is_alternating(std::vector<int>{0, 0, 0, 0}));
  CHECK_FALSE(is_alternating(std::vector<int>{1, -1}));
  CHECK_FALSE(is_alternating(std::vector<int>{-1, 1, 1}));
  CHECK_FALSE(is_alternating(std::vector<int>{}));
  CHECK_FALSE(is_alternating(std::vector<int>{2}));  // total on sign sequences
}

TEST_CASE("is_alternating agrees with the prefix-sum characterization, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    all_sign_sequences(n, [&](const std::vector<int>& s) {
      CAPTURE(format_numeric(s));
      CHECK(is_alternating(s) == oracle_alternating(s));
    });
  }
}

TEST_CASE("is_constrained") {
  CHECK(is_constrained(std::vector<int>{0, 0, 1, 1, 1, 0, 1, 1, 0, 0, 1}));
  CHECK(is_constrained(std::vector<int>{0, 1}));
  CHECK_FALSE(is_constrained(std::vector<int>{1, 1, 1}));
  CHECK_FALSE(is_constrained(std::vector<int>{0, 0}));
  CHECK_FALSE(is_constrained(std::vector<int>{1}));
  CHECK_FALSE(is_constrained(std::vector<int>{0, 2, 1}));
}

TEST_CASE("differences and partial_sums on the worked example") {
  const std::vector<int> sigma{0, 0, 1, 1, 1, 0, 1, 1, 0, 0, 1};
  const std::vector<int> alpha{0, 1, 0, 0, -1, 1, 0, -1, 0, 1};
  CHECK(differences(ConstrainedSequence(sigma)).entries() == alpha);
  CHECK(partial_sums(AlternatingSequence(alpha)).entries() == sigma);

  CHECK(differences(ConstrainedSequence({0, 1})).entries() == std::vector<int>{1});
  CHECK(differences(ConstrainedSequence({0, 0, 1})).entries() == std::vector<int>{0, 1});
  CHECK(partial_sums(AlternatingSequence({1})).entries() == std::vector<int>{0, 1});
  CHECK(partial_sums(AlternatingSequence({1, -1, 1, 0})).entries() ==
        std::vector<int>{0, 1, 0, 1, 1});
}

TEST_CASE("difference/partial-sum round trips, exhaustive at small sizes") {
  for (int n = 1; n <= 8; ++n) {  // constrained length n+1 <= 9
    all_constrained(n, [&](const std::vector<int>& s) {
      ConstrainedSequence sigma(s);
      CHECK(partial_sums(differences(sigma)) == sigma);
    });
  }
  for (int n = 1; n <= 8; ++n) {
    for (const auto& alpha : enumerate_alternating(n)) {
      CHECK(differences(partial_sums(alpha)) == alpha);
    }
  }
}

TEST_CASE("sequence validation names the first violated invariant") {
  CHECK_THROWS_AS(AlternatingSequence({0, 0}), ValidationError);
  CHECK_THROWS_AS(AlternatingSequence({}), ValidationError);
  try {
    AlternatingSequence({1, 2, 1});
    FAIL("expected a throw");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == Violation::BadEntry);
    CHECK(e.index() == 2);
  }
  try {
    AlternatingSequence({1, 1});
    FAIL("expected a throw");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == Violation::NotAlternating);
    CHECK(e.index() == 2);
  }
  try {
    ConstrainedSequence({0, 2, 1});
    FAIL("expected a throw");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == Violation::BadEntry);
    CHECK(e.index() == 2);
  }
  try {
    ConstrainedSequence({1, 0, 1});
    FAIL("expected a throw");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == Violation::NotConstrained);
  }
  CHECK_THROWS_AS(ConstrainedSequence({1}), ValidationError);
}

TEST_CASE("enumerate_alternating at n = 4 gives exactly the known eight") {
  const auto got = enumerate_alternating(4);
  std::vector<std::vector<int>> expected{
      {1, 0, 0, 0}, {0, 1, -1, 1}, {0, 1, 0, 0}, {1, 0, -1, 1},
      {0, 0, 1, 0}, {1, -1, 0, 1}, {0, 0, 0, 1}, {1, -1, 1, 0},
  };
  REQUIRE(got.size() == expected.size());
  std::sort(expected.begin(), expected.end());  // library order is lex ascending
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(got[i].entries() == expected[i]);
  }
}

TEST_CASE("enumerate_alternating counts match brute force, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    std::size_t brute = 0;
    all_sign_sequences(n, [&](const std::vector<int>& s) {
      if (oracle_alternating(s)) ++brute;
    });
    const auto listed = enumerate_alternating(n);
    CHECK(listed.size() == brute);
    CHECK(listed.size() == (1u << (n - 1)));
    for (std::size_t i = 0; i < listed.size(); ++i) {
      CHECK(is_alternating(listed[i].entries()));
      if (i > 0) CHECK(listed[i - 1] < listed[i]);
    }
  }
}

TEST_CASE("enumeration guards") {
  CHECK(enumerate_alternating(1).size() == 1);
  CHECK(enumerate_alternating(1).front().entries() == std::vector<int>{1});
  CHECK(enumerate_alternating(6).size() == 32);
  CHECK_THROWS_AS(enumerate_alternating(0), ValidationError);
  CHECK_THROWS_AS(enumerate_alternating(25), ValidationError);
}

TEST_CASE("sequence text formats") {
  const std::vector<int> alpha{0, 1, 0, 0, -1, 1, 0, -1, 0, 1};
  CHECK(format_numeric(alpha) == "0 1 0 0 -1 1 0 -1 0 1");
  CHECK(format_compact(alpha) == "0+00-+0-0+");
  CHECK(parse_sign_sequence("0+00-+0-0+") == alpha);
  CHECK(parse_sign_sequence("0 1 0 0 -1 1 0 -1 0 1") == alpha);
  CHECK(parse_sign_sequence("+") == std::vector<int>{1});
  CHECK(parse_sign_sequence("1") == std::vector<int>{1});
  CHECK(parse_sign_sequence(" -1 0 1\n") == std::vector<int>{-1, 0, 1});

  try {
    parse_sign_sequence("0 1 x 0");
    FAIL("expected a throw");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == Violation::BadToken);
    CHECK(e.index() == 3);
  }
  CHECK_THROWS_AS(parse_sign_sequence(""), ValidationError);
  CHECK_THROWS_AS(parse_sign_sequence("  \n"), ValidationError);

  // formats round-trip over everything small
  for (int n = 1; n <= 6; ++n) {
    for (const auto& a : enumerate_alternating(n)) {
      CHECK(parse_sign_sequence(format_compact(a.entries())) == a.entries());
      CHECK(parse_sign_sequence(format_numeric(a.entries())) == a.entries());
    }
  }
}

TEST_CASE("vertex basics") {
  CHECK(Vertex::parse("0101").str() == "0101");
  CHECK(Vertex::parse("1").rank() == 1);
  CHECK(Vertex::parse("10110").rank() == 3);
  CHECK(Vertex::zero(3).str() == "000");
  CHECK(Vertex::ones(3).str() == "111");
  CHECK(Vertex::zero(3).complement() == Vertex::ones(3));
  CHECK(Vertex::parse("10101").complement().str() == "01010");
  CHECK(rank(Vertex::zero(5)) == 0);
  CHECK(rank(Vertex::ones(5)) == 5);

  try {
    Vertex::parse("01x1");
    FAIL("expected a throw");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == Violation::BadToken);
    CHECK(e.index() == 3);
  }
  CHECK_THROWS_AS(Vertex::parse(""), ValidationError);
  CHECK_THROWS_AS(Vertex::parse("0101010101010101010101010"), ValidationError);  // 25 chars
  CHECK_THROWS_AS(Vertex(0, 0), ValidationError);
  CHECK_THROWS_AS(Vertex(2, 0b100), ValidationError);
}

TEST_CASE("vertex textual form round-trips and orders lexicographically") {
  for (int n = 1; n <= 6; ++n) {
    std::string prev;
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      Vertex v(n, b);
      CHECK(Vertex::parse(v.str()) == v);
      CHECK(v.complement().complement() == v);
      const std::string s = v.str();
      if (b > 0) CHECK(prev < s);  // bit order == lex order of the word
      prev = s;
    }
  }
}
