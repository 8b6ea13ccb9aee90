#include <random>

#include "doctest.h"

#include "cogebra/recseq.hpp"

using namespace cogebra;

namespace {

Field gf(std::uint32_t p) { return standard_finite_field(p, 1); }

std::vector<Scalar> ints(const Field& f, const std::vector<long long>& v) {
  std::vector<Scalar> out;
  for (auto x : v) out.push_back(f.from_int(x));
  return out;
}

LinRecSeq fibonacci(const Field& f) { return LinRecSeq(f, parse_polynomial(f, "x^2 - x - 1"), ints(f, {0, 1})); }

bool annihilates(const Field& f, const Polynomial& p, const std::vector<Scalar>& t) {
  for (std::size_t n = 0; n + p.coeffs.size() <= t.size(); ++n) {
    Scalar s = f.zero();
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) s = f.add(s, f.mul(p.coeffs[i], t[n + i]));
    if (!f.is_zero(s)) return false;
  }
  return true;
}

// Pascal's triangle, independent of the Lucas routine.
std::vector<std::vector<Scalar>> pascal(const Field& f, std::size_t n) {
  std::vector<std::vector<Scalar>> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c[i].assign(i + 1, f.one());
    for (std::size_t k = 1; k < i; ++k) c[i][k] = f.add(c[i - 1][k - 1], c[i - 1][k]);
  }
  return c;
}

LinRecSeq random_sequence(const Field& f, std::mt19937& rng, std::size_t max_order) {
  std::uniform_int_distribution<int> coin(0, static_cast<int>(f.size()) - 1);
  const std::size_t r = 1 + rng() % max_order;
  Polynomial p;
  for (std::size_t i = 0; i < r; ++i) p.coeffs.push_back(f.element(static_cast<std::uint32_t>(coin(rng))));
  p.coeffs.push_back(f.one());
  std::vector<Scalar> init;
  for (std::size_t i = 0; i < r; ++i) init.push_back(f.element(static_cast<std::uint32_t>(coin(rng))));
  return LinRecSeq(f, p, init);
}

// Twenty extendable fixtures over Q.
std::vector<LinRecSeq> extendable_fixtures() {
  const Field q = rationals();
  std::vector<LinRecSeq> out{fibonacci(q), LinRecSeq::constant(q, q.one()), LinRecSeq::constant(q, q.from_int(-3))};
  for (int a : {2, -1, 3, 5}) out.push_back(LinRecSeq::geometric(q, q.from_int(a)));
  out.push_back(LinRecSeq::geometric(q, q.parse("1/2")));
  out.push_back(LinRecSeq(q, parse_polynomial(q, "x^2 - 2x + 1"), ints(q, {0, 1})));         // n
  out.push_back(LinRecSeq(q, parse_polynomial(q, "x^2 + 1"), ints(q, {1, 0})));              // period 4
  out.push_back(LinRecSeq(q, parse_polynomial(q, "x^2 - 2"), ints(q, {1, 1})));
  out.push_back(LinRecSeq(q, parse_polynomial(q, "x^3 - x - 1"), ints(q, {3, 0, 2})));      // Perrin
  out.push_back(LinRecSeq(q, parse_polynomial(q, "x^3 - 1"), ints(q, {1, 2, 3})));
  out.push_back(LinRecSeq(q, parse_polynomial(q, "x^2 - 3x + 2"), ints(q, {0, 1})));         // 2^n - 1
  out.push_back(LinRecSeq(q, parse_polynomial(q, "x^2 - x + 1"), ints(q, {1, 2})));
  out.push_back(LinRecSeq(q, parse_polynomial(q, "x^3 - 3x^2 + 3x - 1"), ints(q, {0, 1, 4})));  // n^2
  out.push_back(LinRecSeq(q, parse_polynomial(q, "x^2 - 2x - 1"), ints(q, {0, 1})));        // Pell
  out.push_back(LinRecSeq(q, parse_polynomial(q, "x^2 + x + 1"), ints(q, {2, -1})));
  out.push_back(LinRecSeq(q, parse_polynomial(q, "x^2 - x - 1"), ints(q, {2, 1})));         // Lucas
  out.push_back(LinRecSeq(q, parse_polynomial(q, "x^4 - 1"), ints(q, {1, 0, 0, 0})));
  return out;
}

}  // namespace

TEST_CASE("minimal polynomials") {
  const Field q = rationals();
  const PolynomialRing ring(q);
  const LinRecSeq fib = fibonacci(q);
  CHECK(fib.minimal_polynomial() == parse_polynomial(q, "x^2-x-1"));
  CHECK(fib.terms(8) == ints(q, {0, 1, 1, 2, 3, 5, 8, 13}));
  CHECK(annihilates(q, fib.minimal_polynomial(), fib.terms(6)));
  CHECK(LinRecSeq::constant(q, q.one()).minimal_polynomial() == parse_polynomial(q, "x - 1"));
  // declared with the non-minimal annihilator x^2
  const LinRecSeq delta(q, ring.monomial(q.one(), 2), ints(q, {1, 0}));
  CHECK(delta.minimal_polynomial() == ring.x());
  CHECK(delta == LinRecSeq::delta(q));
  // a redundant annihilator is reduced: (x-1)(x-2) on the constant sequence
  CHECK(LinRecSeq(q, parse_polynomial(q, "x^2-3x+2"), ints(q, {5, 5})) == LinRecSeq::constant(q, q.from_int(5)));
  const LinRecSeq zero(q, ring.x(), ints(q, {0}));
  CHECK(zero.order() == 0);
  CHECK(zero.terms(3) == ints(q, {0, 0, 0}));
  CHECK_THROWS_AS(LinRecSeq(q, parse_polynomial(q, "2x - 1"), ints(q, {1})), InputError);
  CHECK_THROWS_AS(LinRecSeq(q, parse_polynomial(q, "x^2 - 1"), ints(q, {1})), InputError);
  CHECK_THROWS_AS(LinRecSeq(q, parse_polynomial(q, "x - 1"), ints(q, {1, 2})), InputError);
}

TEST_CASE("minimal polynomial degree is the Hankel rank") {
  std::mt19937 rng(3);
  for (const Field& f : {gf(2), gf(3), gf(5)})
    for (int t = 0; t < 40; ++t) {
      const LinRecSeq s = random_sequence(f, rng, 5);
      const auto terms = s.terms(24);
      CHECK(annihilates(f, s.minimal_polynomial(), terms));
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < 8; ++i) rows.emplace_back(terms.begin() + static_cast<long>(i), terms.begin() + static_cast<long>(i + 8));
      CHECK(rank(Matrix::from_rows(f, rows, 8)) == s.order());
      CHECK(berlekamp_massey(f, terms) == s.minimal_polynomial());
    }
}

TEST_CASE("polynomial parsing") {
  const Field q = rationals();
  const PolynomialRing ring(q);
  CHECK(parse_polynomial(q, "x^2-x-1") == ring.from_ints({-1, -1, 1}));
  CHECK(parse_polynomial(q, "3*x^3 + 2x + 1") == ring.from_ints({1, 2, 0, 3}));
  CHECK(parse_polynomial(q, "-x") == ring.from_ints({0, -1}));
  CHECK(parse_polynomial(q, "1/2*x - 1/2x") == ring.zero());
  CHECK_THROWS_AS(parse_polynomial(q, ""), InputError);
  CHECK_THROWS_AS(parse_polynomial(q, "x^"), InputError);
}

TEST_CASE("Hadamard products") {
  const Field q = rationals();
  const LinRecSeq fib = fibonacci(q);
  const LinRecSeq sq = hadamard_product(fib, fib);
  const auto t = sq.terms(10);
  const auto ft = fib.terms(10);
  for (std::size_t n = 0; n < 10; ++n) CHECK(t[n] == q.mul(ft[n], ft[n]));
  CHECK(annihilates(q, parse_polynomial(q, "x^3-2x^2-2x+1"), t));
  CHECK(sq.minimal_polynomial() == parse_polynomial(q, "x^3-2x^2-2x+1"));
  CHECK(hadamard_product(fib, LinRecSeq::constant(q, q.one())) == fib);
  const LinRecSeq g = hadamard_product(LinRecSeq::geometric(q, q.from_int(2)), LinRecSeq::geometric(q, q.from_int(-3)));
  CHECK(g == LinRecSeq::geometric(q, q.from_int(-6)));
  CHECK(g.minimal_polynomial() == parse_polynomial(q, "x + 6"));
  CHECK_THROWS_AS(hadamard_product(fib, fibonacci(gf(5))), FieldMismatch);
}

TEST_CASE("Hurwitz products") {
  const Field q = rationals();
  const LinRecSeq fib = fibonacci(q);
  CHECK(hurwitz_product(fib, LinRecSeq::delta(q)) == fib);
  CHECK(hurwitz_product(LinRecSeq::geometric(q, q.from_int(2)), LinRecSeq::geometric(q, q.from_int(5))) ==
        LinRecSeq::geometric(q, q.from_int(7)));
  const Field f2 = gf(2);
  const LinRecSeq ones = LinRecSeq::constant(f2, f2.one());
  const auto t = hurwitz_product(ones, ones).terms(9);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(t[n] == (n == 0 ? f2.one() : f2.zero()));
  // against a direct convolution with Pascal's triangle
  std::mt19937 rng(11);
  for (const Field& f : {gf(2), gf(3), gf(7)}) {
    const auto c = pascal(f, 30);
    for (int k = 0; k < 20; ++k) {
      const LinRecSeq a = random_sequence(f, rng, 3), b = random_sequence(f, rng, 3);
      const auto x = a.terms(31), y = b.terms(31), z = hurwitz_product(a, b).terms(31);
      for (std::size_t n = 0; n <= 30; ++n) {
        Scalar s = f.zero();
        for (std::size_t i = 0; i <= n; ++i) s = f.add(s, f.mul(c[n][i], f.mul(x[i], y[n - i])));
        CHECK(z[n] == s);
      }
    }
  }
  const auto c = pascal(q, 40);
  for (std::size_t n = 0; n <= 40; n += 7)
    for (std::size_t k = 0; k <= n; ++k) CHECK(binomial(q, n, k) == c[n][k]);
  CHECK(binomial(q, 100, 50) == q.parse("100891344545564193334812497256"));
  CHECK(binomial(gf(3), 10, 4) == gf(3).from_int(210));
}

TEST_CASE("both products are commutative, associative and unital") {
  std::mt19937 rng(7);
  const Field f = gf(3);
  for (int t = 0; t < 25; ++t) {
    const LinRecSeq a = random_sequence(f, rng, 2), b = random_sequence(f, rng, 2), c = random_sequence(f, rng, 2);
    CHECK(hadamard_product(a, b) == hadamard_product(b, a));
    CHECK(hurwitz_product(a, b) == hurwitz_product(b, a));
    CHECK(hadamard_product(hadamard_product(a, b), c) == hadamard_product(a, hadamard_product(b, c)));
    CHECK(hurwitz_product(hurwitz_product(a, b), c) == hurwitz_product(a, hurwitz_product(b, c)));
    CHECK(hadamard_product(a, LinRecSeq::constant(f, f.one())) == a);
    CHECK(hurwitz_product(a, LinRecSeq::delta(f)) == a);
  }
}

TEST_CASE("bilateral extension and the antipode") {
  const Field q = rationals();
  const LinRecSeq fib = fibonacci(q);
  CHECK(is_bilaterally_extendable(fib));
  CHECK(is_bilaterally_extendable(LinRecSeq::constant(q, q.one())));
  CHECK_FALSE(is_bilaterally_extendable(LinRecSeq::delta(q)));
  CHECK_THROWS_AS(antipode(LinRecSeq::delta(q)), InputError);
  const LinRecSeq s = antipode(fib);
  CHECK(s.terms(7) == ints(q, {0, 1, -1, 2, -3, 5, -8}));
  for (long n = 1; n <= 6; ++n) {
    const Scalar sign = n % 2 ? q.one() : q.from_int(-1);
    CHECK(bilateral_term(fib, -n) == q.mul(sign, fib.term(static_cast<std::size_t>(n))));
  }
  CHECK(antipode(LinRecSeq::geometric(q, q.from_int(3))) == LinRecSeq::geometric(q, q.parse("1/3")));

  const auto fixtures = extendable_fixtures();
  REQUIRE(fixtures.size() == 20);
  for (const auto& a : fixtures) {
    REQUIRE(is_bilaterally_extendable(a));
    CHECK(antipode(antipode(a)) == a);
    CHECK(is_bilaterally_extendable(shift(a)));
    // the bilateral extension obeys the recurrence on a window around 0
    const Polynomial& p = a.minimal_polynomial();
    for (long n = -6; n <= 2; ++n) {
      Scalar acc = q.zero();
      for (std::size_t i = 0; i < p.coeffs.size(); ++i) acc = q.add(acc, q.mul(p.coeffs[i], bilateral_term(a, n + static_cast<long>(i))));
      CHECK(q.is_zero(acc));
    }
  }
  for (std::size_t i = 0; i < fixtures.size(); ++i)
    for (std::size_t j = i; j < fixtures.size(); j += 3) {
      const LinRecSeq prod = hadamard_product(fixtures[i], fixtures[j]);
      CHECK(is_bilaterally_extendable(prod));
      CHECK(antipode(prod) == hadamard_product(antipode(fixtures[i]), antipode(fixtures[j])));
    }
}

TEST_CASE("zero constant term leaves no room for negative indices") {
  std::mt19937 rng(19);
  const Field f = gf(5);
  int seen = 0;
  for (int t = 0; t < 200 && seen < 20; ++t) {
    const LinRecSeq s = random_sequence(f, rng, 4);
    if (is_bilaterally_extendable(s) || s.order() == 0) continue;
    ++seen;
    // p_0 f_{-1} + sum_{i>=1} p_i f_{i-1} = 0 has p_0 = 0, so it needs the sum to vanish
    const Polynomial& p = s.minimal_polynomial();
    const auto t0 = s.terms(p.coeffs.size());
    Scalar rest = f.zero();
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) rest = f.add(rest, f.mul(p.coeffs[i], t0[i - 1]));
    CHECK_FALSE(f.is_zero(rest));
    CHECK_THROWS_AS(bilateral_term(s, -1), InputError);
  }
  CHECK(seen == 20);
}

TEST_CASE("comultiplication components") {
  const Field q = rationals();
  const auto one = comultiplication_components(LinRecSeq::constant(q, q.one()));
  REQUIRE(one.size() == 1);
  CHECK(one[0].left == LinRecSeq::constant(q, q.one()));
  CHECK(one[0].right == LinRecSeq::constant(q, q.one()));
  const LinRecSeq g = LinRecSeq::geometric(q, q.from_int(4));
  const auto geo = comultiplication_components(g);
  REQUIRE(geo.size() == 1);
  CHECK(geo[0].left == g);
  CHECK(geo[0].right == g);

  const LinRecSeq fib = fibonacci(q);
  const auto parts = comultiplication_components(fib);
  CHECK(parts.size() == 2);
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n) {
      Scalar acc = q.zero();
      for (const auto& p : parts) acc = q.add(acc, q.mul(p.left.term(m), p.right.term(n)));
      CHECK(acc == fib.term(m + n));
      // F_{m+n} = F_m F_{n+1} + F_{m-1} F_n
      const Scalar classic = q.add(q.mul(bilateral_term(fib, static_cast<long>(m)), fib.term(n + 1)),
                                   q.mul(bilateral_term(fib, static_cast<long>(m) - 1), fib.term(n)));
      CHECK(classic == acc);
    }
  std::mt19937 rng(23);
  for (int t = 0; t < 30; ++t) {
    const LinRecSeq s = random_sequence(gf(3), rng, 4);
    const auto pr = comultiplication_components(s);
    CHECK(pr.size() == s.order());
    CHECK(pr.size() <= s.order() * s.order());
    for (std::size_t m = 0; m < 10; ++m)
      for (std::size_t n = 0; n < 10; ++n) {
        Scalar acc = gf(3).zero();
        for (const auto& p : pr) acc = gf(3).add(acc, gf(3).mul(p.left.term(m), p.right.term(n)));
        CHECK(acc == s.term(m + n));
      }
  }
}
