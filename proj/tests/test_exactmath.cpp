#include <random>

#include "doctest.h"

#include "cogebra/matrix.hpp"
#include "cogebra/polynomial.hpp"

using namespace cogebra;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937& rng) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(f.size() - 1));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.element(pick(rng));
  return m;
}

Matrix low_rank_matrix(const Field& f, std::size_t r, std::size_t c, std::size_t k, std::mt19937& rng) {
  return random_matrix(f, r, k, rng) * random_matrix(f, k, c, rng);
}

}  // namespace

TEST_CASE("prime and extension fields") {
  Field f2 = make_field(FieldDescriptor::prime_field(2));
  CHECK(f2.is_zero(f2.add(f2.one(), f2.one())));
  CHECK(f2.size() == 2);

  Field f4 = make_field(FieldDescriptor::extension_of(FieldDescriptor::prime_field(2), {1, 1, 1}));
  CHECK(f4.size() == 4);
  const Scalar y = f4.generator();
  CHECK(f4.is_zero(f4.add(f4.add(f4.mul(y, y), y), f4.one())));
  // every nonzero element is invertible
  for (std::uint32_t c = 1; c < 4; ++c) CHECK(f4.is_one(f4.mul(f4.element(c), f4.inv(f4.element(c)))));

  CHECK_THROWS_AS(make_field(FieldDescriptor::extension_of(FieldDescriptor::prime_field(2), {0, 0, 1})), InputError);
  CHECK_THROWS_AS(make_field(FieldDescriptor::prime_field(4)), InputError);
  CHECK(standard_finite_field(2, 2) == f4);
}

TEST_CASE("tower fields are flattened") {
  Field f4 = standard_finite_field(2, 2);
  // GF(16) as GF(4)[z]/(z^2 + z + y) where y generates GF(4)
  auto desc = FieldDescriptor::extension_of(f4.descriptor(), {2, 1, 1});
  Field f16 = make_field(desc);
  CHECK(f16.size() == 16);
  CHECK(f16.degree() == 4);
  Embedding e = embed(f4, f16);
  CHECK(e.degree() == 2);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      CHECK(e(f4.mul(f4.element(a), f4.element(b))) == f16.mul(e(f4.element(a)), e(f4.element(b))));
      CHECK(e(f4.add(f4.element(a), f4.element(b))) == f16.add(e(f4.element(a)), e(f4.element(b))));
    }
}

TEST_CASE("embeddings between finite fields") {
  Field f2 = standard_finite_field(2, 1);
  Field f4 = standard_finite_field(2, 2);
  Field f8 = standard_finite_field(2, 3);
  Field f16 = standard_finite_field(2, 4);

  CHECK(all_embeddings(f2, f4).size() == 1);

  // oracle: roots of y^2+y+1 in GF(16) by exhaustion
  std::vector<std::uint32_t> roots;
  for (std::uint32_t c = 0; c < 16; ++c) {
    Scalar x = f16.element(c);
    if (f16.is_zero(f16.add(f16.add(f16.mul(x, x), x), f16.one()))) roots.push_back(c);
  }
  REQUIRE(roots.size() == 2);
  auto embs = all_embeddings(f4, f16);
  REQUIRE(embs.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(embs[i].generator_images()[0].code() == roots[i]);
  for (auto r : roots) CHECK_NOTHROW(embed(f4, f16, {f16.element(r)}));
  CHECK_THROWS_AS(embed(f4, f16, {f16.element(1)}), InputError);

  CHECK_THROWS_AS(embed(f4, f8), InputError);
  CHECK(all_embeddings(f4, f8).empty());

  Embedding chain = compose(embed(f2, f4), embs[0]);
  CHECK(chain.degree() == 4);
  CHECK(chain(f2.one()) == f16.one());
}

TEST_CASE("rationals and rational functions") {
  Field q = rationals();
  Scalar a = q.parse("3/4");
  CHECK(q.format(q.add(a, q.parse("1/4"))) == "1");
  CHECK(q.format(q.inv(q.parse("-2/3"))) == "-3/2");

  Field qt = rational_functions(q);
  Scalar t = qt.generator();
  Scalar r = qt.div(qt.sub(qt.mul(t, t), qt.one()), qt.sub(t, qt.one()));  // (t^2-1)/(t-1) = t+1
  CHECK(r == qt.add(t, qt.one()));
  Scalar s = qt.parse("(t^2+{3/4}*t)/(2*t-1)");
  CHECK(qt.parse(qt.format(s)) == s);

  Field f2t = rational_functions(standard_finite_field(2, 1));
  Scalar u = f2t.generator();
  CHECK(f2t.is_zero(f2t.add(u, u)));
  CHECK(f2t.is_one(f2t.mul(u, f2t.inv(u))));
}

TEST_CASE("scalar extension of matrices") {
  Field f2 = standard_finite_field(2, 1);
  Field f4 = standard_finite_field(2, 2);
  Embedding e = embed(f2, f4);
  CHECK(scalar_extend(Matrix::identity(f2, 3), e) == Matrix::identity(f4, 3));

  Field q = rationals();
  Field qt = rational_functions(q);
  Matrix m = Matrix::from_ints(q, {{1, 2}, {2, 4}});
  CHECK(rank(m) == 1);
  CHECK(rank(scalar_extend(m, embed(q, qt))) == 1);

  Field f3 = standard_finite_field(3, 1);
  Field f9 = standard_finite_field(3, 2);
  Embedding e3 = embed(f3, f9);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = low_rank_matrix(f3, 3, 3, trial % 4, rng);
    CHECK(scalar_extend(kernel(a), e3) == kernel(scalar_extend(a, e3)));
  }
  CHECK_THROWS_AS(scalar_extend(Matrix::identity(f3, 2), e), FieldMismatch);
}

TEST_CASE("subspace operations") {
  Field q = rationals();
  auto unit = [&](std::size_t i) {
    Vector v(3, q.zero());
    v[i] = q.one();
    return v;
  };
  Subspace a = Subspace::span(q, 3, {unit(0), unit(1)});
  Subspace b = Subspace::span(q, 3, {unit(1), unit(2)});
  CHECK(a.intersect(b) == Subspace::span(q, 3, {unit(1)}));
  CHECK(a.sum(b) == Subspace::full(q, 3));
  CHECK(kernel(Matrix(q, 2, 2)) == Subspace::full(q, 2));
  CHECK(a.contains(unit(0)));
  CHECK_FALSE(a.contains(unit(2)));
  CHECK_THROWS_AS(a.intersect(Subspace::full(q, 2)), InputError);

  Matrix ann = a.annihilator();
  REQUIRE(ann.rows() == 1);
  CHECK(ann * unit(0) == Vector{q.zero()});
}

TEST_CASE("kronecker of Fibonacci companions") {
  Field q = rationals();
  PolynomialRing ring(q);
  Polynomial fib = ring.from_ints({-1, -1, 1});
  Matrix c = companion(q, fib);
  CHECK(characteristic_polynomial(c) == fib);
  Matrix k = kronecker(c, c);
  REQUIRE(k.rows() == 4);
  Polynomial chi = characteristic_polynomial(k);
  // independent expansion: eigenvalues phi^2, psi^2, phi*psi, psi*phi give
  // (x^2 - 3x + 1)(x + 1)^2 = x^4 - x^3 - 4x^2 - x + 1
  CHECK(chi == ring.from_ints({1, -1, -4, -1, 1}));
  CHECK(ring.divides(ring.from_ints({1, -2, -2, 1}), chi));
}

TEST_CASE("linear algebra properties on random instances") {
  std::mt19937 rng(11);
  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    Field f = standard_finite_field(p, n);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
      Matrix m = low_rank_matrix(f, r, c, rng() % 4, rng);
      CHECK(rank(m) + kernel(m).dim() == c);
      CHECK(rank(m) == image(m).dim());
      auto once = row_reduce(m);
      auto twice = row_reduce(once.reduced);
      CHECK(once.reduced == twice.reduced);
      if (r == c) {
        auto inv = inverse(m);
        CHECK(inv.has_value() == (rank(m) == r));
        CHECK(f.is_zero(determinant(m)) == !inv.has_value());
        if (inv) CHECK(*inv * m == Matrix::identity(f, r));
      }
    }
  }
}

TEST_CASE("solve_affine") {
  Field f3 = standard_finite_field(3, 1);
  Matrix m = Matrix::from_ints(f3, {{1, 1, 0}, {0, 1, 1}});
  auto sol = solve_affine(m, {f3.one(), f3.zero()});
  REQUIRE(sol.has_value());
  CHECK(m * sol->particular == Vector{f3.one(), f3.zero()});
  CHECK(sol->directions.size() == 1);
  Matrix z = Matrix::from_ints(f3, {{0, 0}});
  CHECK_FALSE(solve_affine(z, {f3.one()}).has_value());
}

TEST_CASE("scalar extension commutes with subspace operations") {
  Field f2 = standard_finite_field(2, 1);
  Field f4 = standard_finite_field(2, 2);
  Embedding e = embed(f2, f4);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    Subspace a = Subspace::row_space(random_matrix(f2, rng() % (n + 1), n, rng));
    Subspace b = Subspace::row_space(random_matrix(f2, rng() % (n + 1), n, rng));
    Subspace ea = scalar_extend(a, e), eb = scalar_extend(b, e);
    CHECK(scalar_extend(a.sum(b), e) == ea.sum(eb));
    CHECK(scalar_extend(a.intersect(b), e) == ea.intersect(eb));
    Matrix m = random_matrix(f2, n, n, rng);
    CHECK(scalar_extend(kernel(m), e) == kernel(scalar_extend(m, e)));
    CHECK(scalar_extend(image(m), e) == image(scalar_extend(m, e)));
  }
}

TEST_CASE("echelon basis agrees with row reduction") {
  Field f3 = standard_finite_field(3, 1);
  std::mt19937 rng(5);
  Matrix m = low_rank_matrix(f3, 8, 6, 3, rng);
  EchelonBasis eb(f3, 6);
  std::size_t inserted = 0;
  for (std::size_t i = 0; i < 8; ++i) inserted += eb.insert(m.row(i));
  CHECK(inserted == rank(m));
  CHECK(eb.subspace() == Subspace::row_space(m));
}

TEST_CASE("polynomial ring") {
  Field f2 = standard_finite_field(2, 1);
  PolynomialRing ring(f2);
  CHECK(ring.is_irreducible(ring.from_ints({1, 1, 1})));
  CHECK_FALSE(ring.is_irreducible(ring.from_ints({1, 0, 1})));
  CHECK(ring.is_irreducible(ring.from_ints({1, 1, 0, 0, 0, 0, 1})));
  auto [quo, rem] = ring.divmod(ring.from_ints({1, 0, 0, 1}), ring.from_ints({1, 1}));
  CHECK(rem.is_zero());
  CHECK(quo == ring.from_ints({1, 1, 1}));
}
