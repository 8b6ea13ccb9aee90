#include <random>

#include "doctest.h"

#include "cogebra/coefficients.hpp"

using namespace cogebra;

namespace {

Field gf(std::uint32_t p, std::uint32_t n = 1) { return standard_finite_field(p, n); }

FinAlgebra diagonal(const Field& f) { return dual_algebra(grouplike_coalgebra(f, {"a", "b"})); }

Matrix random_invertible(const Field& f, std::size_t d, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(f.size() - 1));
  while (true) {
    Matrix g(f, d, d);
    for (std::size_t i = 0; i < d * d; ++i) g(i / d, i % d) = f.element(pick(rng));
    if (!f.is_zero(determinant(g))) return g;
  }
}

Representation conjugate(const Representation& r, const Matrix& g) {
  const Matrix gi = *inverse(g);
  Representation out{r.dim, {}};
  for (const auto& m : r.matrices) out.matrices.push_back(g * m * gi);
  return out;
}

// Span dimension straight from the definition: rank of the matrix of all
// coefficient values on all words up to length `len`.
std::size_t naive_span_dim(const PresentedAlgebra& p, const std::vector<Representation>& reps, std::size_t len) {
  const Field& f = p.field();
  std::vector<Word> words{{}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() == len) continue;
    for (std::size_t g = 0; g < p.generator_count(); ++g) {
      Word w = words[i];
      w.push_back(static_cast<std::uint32_t>(p.generator_symbol(g)));
      words.push_back(w);
    }
  }
  std::vector<Vector> rows;  // one row per functional
  for (const auto& r : reps)
    for (std::size_t i = 0; i < r.dim; ++i)
      for (std::size_t j = 0; j < r.dim; ++j) {
        Vector row;
        for (const auto& w : words) row.push_back(evaluate_word(r, w, f)(i, j));
        rows.push_back(row);
      }
  if (rows.empty()) return 0;
  return rank(Matrix::from_rows(f, rows, words.size()));
}

}  // namespace

TEST_CASE("coefficient span examples") {
  const Field f = gf(3);
  const PresentedAlgebra x = free_algebra(1, f);
  const CoefficientSpan one(x, {make_representation(x, {Matrix::from_ints(f, {{2}})})});
  CHECK(one.dim() == 1);
  CHECK(one.stabilization_length() == 0);

  // regular representation of k x k on the basis (1, p): p acts by diag(0, 1) after completing
  const PresentedAlgebra p = presentation_of(diagonal(f));
  const Representation regular = make_representation(p, {Matrix::from_ints(f, {{1, 0}, {0, 0}})});
  const CoefficientSpan reg(p, {regular});
  CHECK(reg.dim() == 2);
  CHECK(reg.words().size() == 2);
  CHECK(reg.words()[1] == Word{0});

  // non-isomorphic simples: spans add
  const Representation s0 = make_representation(p, {Matrix::from_ints(f, {{0}})});
  const Representation s1 = make_representation(p, {Matrix::from_ints(f, {{1}})});
  CHECK(CoefficientSpan(p, {s0}).dim() == 1);
  CHECK(CoefficientSpan(p, {s1}).dim() == 1);
  CHECK(CoefficientSpan(p, {s0, s1}).dim() == 2);
  // isomorphic ones do not
  CHECK(CoefficientSpan(p, {s1, s1}).dim() == 1);

  CHECK(CoefficientSpan(p, {}).dim() == 0);
}

TEST_CASE("coefficient span agrees with the definition") {
  std::mt19937 rng(17);
  for (const Field& f : {gf(2), gf(3)}) {
    const PresentedAlgebra free2 = free_algebra(2, f);
    const auto reps2 = enumerate_representations(free2, 2);
    for (int t = 0; t < 20; ++t) {
      std::vector<Representation> pick;
      for (int k = 0; k < 3; ++k) pick.push_back(reps2[rng() % reps2.size()]);
      const CoefficientSpan s(free2, pick);
      std::size_t total = 0;
      for (const auto& r : pick) total += r.dim * r.dim;
      CHECK(s.stabilization_length() < total);
      CHECK(s.dim() == naive_span_dim(free2, pick, s.stabilization_length() + 1));
      CHECK(s.dim() == naive_span_dim(free2, pick, 4));
      // conjugation invariance
      std::vector<Representation> conj;
      for (const auto& r : pick) conj.push_back(conjugate(r, random_invertible(f, 2, rng)));
      CHECK(CoefficientSpan(free2, conj).dim() == s.dim());
    }
  }
}

TEST_CASE("carrier comultiplication on coefficients") {
  const Field f = gf(3);
  const PresentedAlgebra free2 = free_algebra(2, f);
  const auto reps2 = enumerate_representations(free2, 2);
  std::vector<Representation> pick{reps2[100], reps2[2000], reps2[4321]};
  const CoefficientSpan s(free2, pick);
  const Coalgebra c = s.carrier();
  CHECK_FALSE(validate_coalgebra(c));
  for (std::size_t r = 0; r < pick.size(); ++r)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        // Delta(c_ij) = sum_k c_ik (x) c_kj, eps(c_ij) = delta_ij
        const Matrix lhs = c.comultiply(s.coefficient_functional(r, i, j));
        Matrix rhs(f, c.dim(), c.dim());
        for (std::size_t k = 0; k < 2; ++k) {
          const Vector a = s.coefficient_functional(r, i, k), b = s.coefficient_functional(r, k, j);
          for (std::size_t x = 0; x < c.dim(); ++x)
            for (std::size_t y = 0; y < c.dim(); ++y) rhs(x, y) = f.add(rhs(x, y), f.mul(a[x], b[y]));
        }
        CHECK(lhs == rhs);
        const Vector v = s.coefficient_functional(r, i, j);
        Scalar e = f.zero();
        for (std::size_t x = 0; x < c.dim(); ++x) e = f.add(e, f.mul(v[x], c.counit()[x]));
        CHECK(e == (i == j ? f.one() : f.zero()));
      }
  // the image algebra is a quotient of the free algebra: words multiply by concatenation
  const FinAlgebra b = s.image_algebra();
  CHECK_FALSE(validate_algebra(b));
  for (std::size_t x = 0; x < s.dim(); ++x)
    for (std::size_t y = 0; y < s.dim(); ++y) {
      Word w = s.words()[x];
      w.insert(w.end(), s.words()[y].begin(), s.words()[y].end());
      CHECK(b.multiply(b.basis_vector(x), b.basis_vector(y)) == s.coordinates(w));
    }
}

TEST_CASE("spans are monotone and include compatibly") {
  const Field f = gf(2);
  const PresentedAlgebra pq = free_product({diagonal(f), diagonal(f)});
  std::vector<Representation> acc;
  std::vector<CoefficientSpan> spans;
  for (std::size_t d = 1; d <= 3; ++d) {
    for (auto& r : enumerate_representations(pq, d)) acc.push_back(r);
    spans.emplace_back(pq, acc);
  }
  CHECK(spans[0].dim() == 4);
  CHECK(spans[1].dim() == 8);
  CHECK(spans[2].dim() == 12);
  for (std::size_t i = 0; i + 1 < spans.size(); ++i) {
    const Matrix inc = span_inclusion(spans[i], spans[i + 1]);
    CHECK(rank(inc) == spans[i].dim());
    CHECK_FALSE(check_coalgebra_morphism(inc, spans[i].carrier(), spans[i + 1].carrier()));
  }
}

TEST_CASE("inverse symbols in the word alphabet") {
  const Field f = gf(3);
  PresentedAlgebra laurent(f);
  laurent.add_generator("x", true);
  const auto reps = enumerate_representations(laurent, 2);
  const CoefficientSpan pos(laurent, reps);
  const CoefficientSpan all(laurent, reps, {true});
  CHECK(pos.dim() == all.dim());
}

TEST_CASE("spans over the rationals") {
  const Field q = rationals();
  const PresentedAlgebra x = free_algebra(1, q);
  // a Jordan block has a 2-dimensional coefficient span; a 3x3 diagonal with distinct entries 3
  const CoefficientSpan j(x, {make_representation(x, {Matrix::from_ints(q, {{2, 1}, {0, 2}})})});
  CHECK(j.dim() == 2);
  const CoefficientSpan d(x, {make_representation(x, {Matrix::from_ints(q, {{1, 0, 0}, {0, 2, 0}, {0, 0, -1}})})});
  CHECK(d.dim() == 3);
  CHECK_FALSE(validate_coalgebra(d.carrier()));
  const Vector c = d.coordinates(Word{0, 0, 0});  // x^3 = 2x^2 + x - 2
  CHECK(c == Vector{q.from_int(-2), q.from_int(1), q.from_int(2)});
}
