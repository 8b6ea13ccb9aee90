#include <random>

#include "doctest.h"

#include "cogebra/presented.hpp"

using namespace cogebra;

namespace {

Field gf(std::uint32_t p, std::uint32_t n = 1) { return standard_finite_field(p, n); }

FinAlgebra diagonal(const Field& f) { return dual_algebra(grouplike_coalgebra(f, {"a", "b"})); }

Matrix mat(const Field& f, std::vector<std::vector<long long>> rows) { return Matrix::from_ints(f, rows); }

// Independent oracle: enumerate every subspace of k^d of dimension 1..d-1 as an
// RREF matrix and test invariance directly.
bool brute_has_invariant_subspace(const std::vector<Matrix>& gens, std::size_t d, const Field& f) {
  const std::uint32_t q = static_cast<std::uint32_t>(f.size());
  for (std::size_t r = 1; r < d; ++r) {
    std::vector<std::uint32_t> code(r * d, 0);
    while (true) {
      Matrix b(f, r, d);
      for (std::size_t i = 0; i < r * d; ++i) b(i / d, i % d) = f.element(code[i]);
      if (rank(b) == r) {
        bool invariant = true;
        for (const auto& g : gens) {
          Matrix moved = b * g.transpose();  // rows g v
          Matrix both(f, 2 * r, d);
          for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < d; ++j) both(i, j) = b(i, j), both(r + i, j) = moved(i, j);
          if (rank(both) != r) invariant = false;
        }
        if (invariant) return true;
      }
      std::size_t i = code.size();
      while (i > 0 && ++code[i - 1] == q) code[--i] = 0;
      if (i == 0) break;
    }
  }
  return false;
}

// Independent oracle: any invertible T with T r = s T, by exhausting GL_d.
bool brute_isomorphic(const Representation& r, const Representation& s, const Field& f) {
  const std::size_t d = r.dim;
  const std::uint32_t q = static_cast<std::uint32_t>(f.size());
  std::vector<std::uint32_t> code(d * d, 0);
  while (true) {
    Matrix t(f, d, d);
    for (std::size_t i = 0; i < d * d; ++i) t(i / d, i % d) = f.element(code[i]);
    if (!f.is_zero(determinant(t))) {
      bool ok = true;
      for (std::size_t g = 0; g < r.matrices.size() && ok; ++g) ok = t * r.matrices[g] == s.matrices[g] * t;
      if (ok) return true;
    }
    std::size_t i = code.size();
    while (i > 0 && ++code[i - 1] == q) code[--i] = 0;
    if (i == 0) break;
  }
  return false;
}

}  // namespace

TEST_CASE("presentations") {
  const Field f = gf(2);
  const PresentedAlgebra p = free_product({diagonal(f), diagonal(f)});
  REQUIRE(p.generator_count() == 2);
  CHECK(p.symbols()[p.generator_symbol(0)].name == "p");
  CHECK(p.symbols()[p.generator_symbol(1)].name == "q");
  REQUIRE(p.relations().size() == 2);
  CHECK(p.format_relation(p.relations()[0]) == "p + p*p");  // p^2 - p over GF(2)
  CHECK(p.format_relation(p.relations()[1]) == "q + q*q");

  const Field f3 = gf(3);
  const PresentedAlgebra p3 = free_product({diagonal(f3)});
  CHECK(p3.format_relation(p3.relations()[0]) == "2*p + p*p");

  const PresentedAlgebra ext = free_product({field_as_algebra(embed(f, gf(2, 2))), field_as_algebra(embed(f, gf(2, 3)))});
  CHECK(ext.generator_count() == 3);
  CHECK(ext.symbols()[ext.generator_symbol(0)].name == "p");
  CHECK(ext.symbols()[ext.generator_symbol(1)].name == "q1");
  CHECK(ext.relations().size() == 1 + 4);

  CHECK_THROWS_AS(free_product({}), InputError);
  CHECK_THROWS_AS(free_product({diagonal(f), diagonal(f3)}), FieldMismatch);

  PresentedAlgebra laurent(f);
  laurent.add_generator("x", true);
  CHECK(laurent.symbol_count() == 2);
  CHECK(laurent.inverse_symbol(0) == 1);
  CHECK(laurent.relations().size() == 2);
  CHECK(laurent.format_relation(laurent.relations()[0]) == "1 + x*x^-1");
  CHECK_THROWS_AS(laurent.add_relation({{f.one(), {5}}}), InputError);
}

TEST_CASE("enumeration counts") {
  const Field f2 = gf(2);
  // free algebra on two generators: all pairs of 2x2 matrices
  CHECK(enumerate_representations(free_algebra(2, f2), 2).size() == 256);
  CHECK(enumerate_representations(free_algebra(0, f2), 3).size() == 1);

  const PresentedAlgebra pq = free_product({diagonal(f2), diagonal(f2)});
  const auto reps1 = enumerate_representations(pq, 1);
  CHECK(reps1.size() == 4);
  // sorted by generator codes
  for (std::size_t i = 1; i < reps1.size(); ++i) CHECK(representation_less(reps1[i - 1], reps1[i], 2));

  // idempotent 2x2 over GF(2): 8 of them, pairs 64
  CHECK(enumerate_representations(pq, 2).size() == 64);
  // idempotent 2x2 over GF(3): 14; 3x3: 236 (oracle: direct count below)
  const Field f3 = gf(3);
  const PresentedAlgebra p3 = presentation_of(diagonal(f3));
  CHECK(enumerate_representations(p3, 2).size() == 14);
  CHECK(enumerate_representations(p3, 3).size() == 236);
  {
    std::size_t count = 0;
    std::vector<std::uint32_t> code(9, 0);
    while (true) {
      Matrix m(f3, 3, 3);
      for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = f3.element(code[i]);
      if (m * m == m) ++count;
      std::size_t i = 9;
      while (i > 0 && ++code[i - 1] == 3) code[--i] = 0;
      if (i == 0) break;
    }
    CHECK(count == 236);
  }

  const PresentedAlgebra gf4 = presentation_of(field_as_algebra(embed(f2, gf(2, 2))));
  CHECK(enumerate_representations(gf4, 1).empty());
  const auto gf4_2 = enumerate_representations(gf4, 2);
  CHECK_FALSE(gf4_2.empty());
  // contains the companion matrix of y^2 + y + 1
  const Matrix comp = mat(f2, {{0, 1}, {1, 1}});
  CHECK(std::any_of(gf4_2.begin(), gf4_2.end(), [&](const auto& r) { return r.matrices[0] == comp; }));

  // GF(8) as GF(2)-algebra has no modules of dimension 1 or 2
  const PresentedAlgebra gf8 = presentation_of(field_as_algebra(embed(f2, gf(2, 3))));
  CHECK(enumerate_representations(gf8, 1).empty());
  CHECK(enumerate_representations(gf8, 2).empty());
  CHECK_FALSE(enumerate_representations(gf8, 3).empty());

  // every enumerated representation satisfies the relations (checked independently)
  for (const auto& r : enumerate_representations(pq, 2)) {
    CHECK(satisfies_relations(pq, r));
    for (std::size_t g = 0; g < 2; ++g) CHECK(r.matrices[g] * r.matrices[g] == r.matrices[g]);
  }

  CHECK_THROWS_AS(enumerate_representations(free_algebra(2, f3), 3, {1000}), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_representations(free_algebra(1, rationals()), 1), InputError);
}

TEST_CASE("invertible generators") {
  const Field f3 = gf(3);
  PresentedAlgebra laurent(f3);
  laurent.add_generator("x", true);
  // GL_1(3) has 2 elements, GL_2(3) has 48
  CHECK(enumerate_representations(laurent, 1).size() == 2);
  const auto reps = enumerate_representations(laurent, 2);
  CHECK(reps.size() == 48);
  for (const auto& r : reps) CHECK(satisfies_relations(laurent, r));

  CHECK_THROWS_AS(make_representation(laurent, {mat(f3, {{1, 1}, {1, 1}})}), InputError);
  const Representation r = make_representation(laurent, {mat(f3, {{1, 1}, {0, 1}})});
  CHECK(r.matrices[1] == mat(f3, {{1, 2}, {0, 1}}));
}

TEST_CASE("simplicity") {
  const Field f3 = gf(3);
  const PresentedAlgebra pq = free_product({diagonal(f3), diagonal(f3)});
  const Representation simple = make_representation(pq, {mat(f3, {{1, 0}, {0, 0}}), mat(f3, {{2, 2}, {2, 2}})});
  REQUIRE(satisfies_relations(pq, simple));
  CHECK(is_simple(simple));
  const Representation split = make_representation(pq, {mat(f3, {{1, 0}, {0, 0}}), mat(f3, {{1, 0}, {0, 0}})});
  CHECK_FALSE(is_simple(split));
  for (const auto& r : enumerate_representations(pq, 1)) CHECK(is_simple(r));

  // agreement with the exhaustive subspace oracle at d <= 2 (and a d = 3 sample)
  for (const Field& f : {gf(2), gf(3)}) {
    const PresentedAlgebra p = free_product({diagonal(f), diagonal(f)});
    for (std::size_t d : {2u, 3u}) {
      const auto reps = enumerate_representations(p, d);
      std::size_t step = d == 2 ? 1 : 97;
      for (std::size_t i = 0; i < reps.size(); i += step)
        CHECK(is_simple(reps[i]) == !brute_has_invariant_subspace(reps[i].matrices, d, f));
    }
  }

  // over Q: a rotation-like pair is irreducible, a triangular pair is not
  const Field q = rationals();
  const PresentedAlgebra free2 = free_algebra(2, q);
  CHECK(is_simple(make_representation(free2, {Matrix::from_ints(q, {{1, 0}, {0, 2}}), Matrix::from_ints(q, {{0, 1}, {1, 0}})})));
  CHECK_FALSE(is_simple(make_representation(free2, {Matrix::from_ints(q, {{1, 1}, {0, 2}}), Matrix::from_ints(q, {{3, 5}, {0, 1}})})));
  // x -> [[0,-1],[1,0]] has no rational eigenvector but its algebra is commutative, dimension 2:
  // Burnside does not apply; Norton finds nothing at small lambda
  const Representation rot = make_representation(free_algebra(1, q), {Matrix::from_ints(q, {{0, -1}, {1, 0}})});
  CHECK_THROWS_AS(is_simple(rot), Undecided);
  // a rational eigenvector is found by the kernel test
  CHECK_FALSE(is_simple(make_representation(free_algebra(1, q), {Matrix::from_ints(q, {{2, 1}, {0, 1}})})));
}

TEST_CASE("isomorphism") {
  const Field f3 = gf(3);
  const PresentedAlgebra pq = free_product({diagonal(f3), diagonal(f3)});
  const auto reps1 = enumerate_representations(pq, 1);
  CHECK_FALSE(are_isomorphic(reps1[0], reps1[1]));
  for (const auto& r : reps1) CHECK(are_isomorphic(r, r));

  std::mt19937 rng(3);
  const auto reps2 = enumerate_representations(pq, 2);
  // conjugates are isomorphic
  std::uniform_int_distribution<std::uint32_t> pick(0, 2);
  for (int t = 0; t < 20; ++t) {
    const auto& r = reps2[rng() % reps2.size()];
    Matrix g(f3, 2, 2);
    do
      for (std::size_t i = 0; i < 4; ++i) g(i / 2, i % 2) = f3.element(pick(rng));
    while (f3.is_zero(determinant(g)));
    const Matrix gi = *inverse(g);
    const Representation c = make_representation(pq, {g * r.matrices[0] * gi, g * r.matrices[1] * gi});
    CHECK(are_isomorphic(r, c));
  }
  // agreement with brute force on a sample, and transitivity on a small block
  for (int t = 0; t < 150; ++t) {
    const auto& r = reps2[rng() % reps2.size()];
    const auto& s = reps2[rng() % reps2.size()];
    const bool iso = are_isomorphic(r, s);
    CHECK(iso == brute_isomorphic(r, s, f3));
    CHECK(iso == are_isomorphic(s, r));
  }
  for (std::size_t a = 0; a < 12; ++a)
    for (std::size_t b = 0; b < 12; ++b)
      for (std::size_t c = 0; c < 12; ++c)
        if (are_isomorphic(reps2[a], reps2[b]) && are_isomorphic(reps2[b], reps2[c]))
          CHECK(are_isomorphic(reps2[a], reps2[c]));

  // over Q the grid search decides too
  const Field q = rationals();
  const PresentedAlgebra free1 = free_algebra(1, q);
  const Representation n1 = make_representation(free1, {Matrix::from_ints(q, {{0, 1}, {0, 0}})});
  const Representation n2 = make_representation(free1, {Matrix::from_ints(q, {{0, 5}, {0, 0}})});
  const Representation z = make_representation(free1, {Matrix::from_ints(q, {{0, 0}, {0, 0}})});
  CHECK(are_isomorphic(n1, n2));
  CHECK_FALSE(are_isomorphic(n1, z));
}

TEST_CASE("composition factors and simple modules") {
  const Field f2 = gf(2);
  // k x k: two 1-dimensional simples
  CHECK(simple_modules(diagonal(f2)).size() == 2);
  // 2x2 matrices: one simple of dimension 2
  const auto m2 = simple_modules(matrix_algebra(f2, 2));
  REQUIRE(m2.size() == 1);
  CHECK(m2[0][0].rows() == 2);
  // GF(8) over GF(2): a single simple of dimension 3
  const auto s8 = simple_modules(field_as_algebra(embed(f2, gf(2, 3))));
  REQUIRE(s8.size() == 1);
  CHECK(s8[0][0].rows() == 3);

  // a unipotent Jordan block plus a fixed line: three trivial factors
  const auto factors = composition_factors({Matrix::from_ints(f2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})}, 3);
  std::size_t total = 0;
  for (const auto& fac : factors) total += fac[0].rows();
  CHECK(total == 3);
  CHECK(factors.size() == 3);
}

TEST_CASE("conjugation orbits") {
  const Field f2 = gf(2);
  const PresentedAlgebra pq = free_product({diagonal(f2), diagonal(f2)});
  const auto reps = enumerate_representations(pq, 2);
  const auto orbits = orbit_representatives(reps, f2);
  // each representative is from a distinct orbit
  for (std::size_t i = 0; i < orbits.size(); ++i)
    for (std::size_t j = i + 1; j < orbits.size(); ++j) CHECK_FALSE(brute_isomorphic(orbits[i], orbits[j], f2));
  // and every representation is conjugate to one of them
  for (const auto& r : reps)
    CHECK(std::any_of(orbits.begin(), orbits.end(), [&](const auto& o) { return brute_isomorphic(r, o, f2); }));
  // tiny budget: falls back to the full list
  CHECK(orbit_representatives(reps, f2, 4).size() == reps.size());
}
