#include <random>
#include <string>

#include "doctest.h"
#include "preop/errors.hpp"
#include "preop/formal_sum.hpp"
#include "preop/rational.hpp"

using namespace preop;

namespace {

using Sum = FormalSum<std::string>;

std::string text(const Sum& x) {
  return to_text(x, [](const std::string& k) { return k; });
}

// mpq_class(p, d) does not reduce; equality needs canonical values.
Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

Sum random_sum(std::mt19937& rng) {
  static const char* keys[] = {"a", "b", "c", "d", "e"};
  Sum out;
  const int terms = rng() % 4;
  for (int k = 0; k < terms; ++k)
    out.add(keys[rng() % 5], q(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4));
  return out;
}

Rational random_scalar(std::mt19937& rng) { return q(static_cast<long>(rng() % 13) - 6, 1 + rng() % 5); }

// Concatenation of keys, a non-commutative product on strings.
Sum concat(const std::string& x, const std::string& y) { return Sum::term(x + y); }

}  // namespace

TEST_CASE("normalization") {
  const auto t = Sum::term("t");
  const auto s = Sum::term("s");
  CHECK((t + q(-1) * t).is_zero());
  CHECK((t + q(-1) * t) == Sum{});
  CHECK(q(1, 2) * t + q(1, 2) * t == t);
  CHECK(q(3) * t - q(3) * t + s == s);
  CHECK(Sum::term("t", 0).is_zero());
  CHECK(Sum::normalize({{"a", 0}, {"b", 2}}).size() == 1);
  CHECK((q(0) * (t + s)).is_zero());
  for (const auto& [k, c] : q(2) * t - q(2) * t + q(5, 3) * s) CHECK(c != 0);
}

TEST_CASE("coefficient access") {
  const auto x = q(2, 3) * Sum::term("a") - Sum::term("b");
  CHECK(x.coefficient("a") == q(2, 3));
  CHECK(x.coefficient("b") == q(-1));
  CHECK(x.coefficient("z") == 0);
}

TEST_CASE("module laws on random sums") {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_sum(rng), y = random_sum(rng), z = random_sum(rng);
    const auto a = random_scalar(rng), b = random_scalar(rng);
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x + Sum{} == x);
    CHECK((x + -x).is_zero());
    CHECK(x - y == x + q(-1) * y);
    CHECK(a * (b * x) == (a * b) * x);
    CHECK((a + b) * x == a * x + b * x);
    CHECK(a * (x + y) == a * x + a * y);
    CHECK(q(1) * x == x);
    CHECK(x * a == a * x);
  }
}

TEST_CASE("bilinear_extend") {
  const auto p = bilinear_extend<std::string>(concat);
  const auto x = Sum::term("x");
  const auto y = Sum::term("y");
  CHECK(p(Sum{}, y).is_zero());
  CHECK(p(x, Sum{}).is_zero());
  CHECK(p(x, y) == concat("x", "y"));
  CHECK(p(q(2) * x, q(3) * y) == q(6) * concat("x", "y"));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto u = random_sum(rng), v = random_sum(rng), w = random_sum(rng);
    const auto a = random_scalar(rng), b = random_scalar(rng);
    CHECK(p(a * u + b * v, w) == a * p(u, w) + b * p(v, w));
    CHECK(p(w, a * u + b * v) == a * p(w, u) + b * p(w, v));
  }
}

TEST_CASE("linear_extend") {
  const auto x = q(2) * Sum::term("a") + q(-1, 2) * Sum::term("b");
  const auto doubled = linear_extend(x, [](const std::string& k) { return Sum::term(k + k); });
  CHECK(doubled == q(2) * Sum::term("aa") + q(-1, 2) * Sum::term("bb"));
  const auto collapsed = linear_extend(x, [](const std::string&) { return Sum::term("k"); });
  CHECK(collapsed == q(3, 2) * Sum::term("k"));
}

TEST_CASE("text and JSON forms") {
  CHECK(text(Sum{}) == "0");
  CHECK(text(Sum::term("a")) == "a");
  CHECK(text(q(-1) * Sum::term("a")) == "-a");
  CHECK(text(q(2) * Sum::term("a") - q(3, 4) * Sum::term("b")) == "2*a - 3/4*b");
  CHECK(text(q(-2) * Sum::term("a") + Sum::term("b")) == "-2*a + b");

  const auto key = [](const std::string& k) { return k; };
  const auto j = to_json(q(2) * Sum::term("a") - q(3, 4) * Sum::term("b"), key);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["coeff"] == "2");
  CHECK(j[0]["key"] == "a");
  CHECK(j[1]["coeff"] == "-3/4");
  CHECK(to_json(Sum{}, key).empty());
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3") == q(3));
  CHECK(parse_rational("-3") == q(-3));
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK(to_string(q(6, 4)) == "3/2");
  CHECK(to_string(q(-4, 2)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}
