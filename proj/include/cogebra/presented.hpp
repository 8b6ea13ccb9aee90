#pragma once

// Finitely presented algebras, their representations over exact fields, and
// the module-side tests (simplicity, isomorphism) used by the census.

#include <optional>
#include <string>
#include <vector>

#include "cogebra/coalgebra.hpp"

namespace cogebra {

/// Work budget for enumerations: COGEBRA_BUDGET if set, else 10^7.
std::uint64_t default_budget();

/// Symbol indices into PresentedAlgebra::symbols(); an invertible generator's
/// formal inverse is the symbol right after it.
using Word = std::vector<std::uint32_t>;

struct Term {
  Scalar coeff;
  Word word;
};
/// A noncommutative polynomial, implicitly set to zero.
using Relation = std::vector<Term>;

struct Symbol {
  std::string name;
  std::size_t generator = 0;
  bool inverse = false;
};

/// Bookkeeping for one free-product factor: the unit replaced basis vector
/// `unit_index`; every other basis vector k is the generator `generator_of[k]`.
struct FactorBlock {
  FinAlgebra algebra;
  std::size_t unit_index = 0;
  std::vector<std::size_t> generator_of;  // npos at unit_index
};

class PresentedAlgebra {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  PresentedAlgebra() = default;
  explicit PresentedAlgebra(Field f) : field_(std::move(f)) {}

  /// Adds a generator; invertible ones get an inverse symbol and the relations
  /// s s^-1 - 1, s^-1 s - 1. Returns the generator index.
  std::size_t add_generator(std::string name, bool invertible = false);
  void add_relation(Relation r);

  const Field& field() const { return field_; }
  std::size_t generator_count() const { return generators_.size(); }
  std::size_t symbol_count() const { return symbols_.size(); }
  std::size_t generator_symbol(std::size_t g) const { return generators_[g]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  bool invertible(std::size_t g) const { return inverse_of_[g] != npos; }
  /// Symbol index of the inverse of generator g, or npos.
  std::size_t inverse_symbol(std::size_t g) const { return inverse_of_[g]; }
  const std::vector<Relation>& relations() const { return relations_; }
  const std::vector<FactorBlock>& factors() const { return factors_; }

  std::string format_word(const Word& w) const;
  std::string format_relation(const Relation& r) const;

 private:
  friend PresentedAlgebra free_product(const std::vector<FinAlgebra>& factors);
  Field field_;
  std::vector<std::size_t> generators_;  // symbol index per generator
  std::vector<Symbol> symbols_;
  std::vector<std::size_t> inverse_of_;
  std::vector<Relation> relations_;
  std::vector<FactorBlock> factors_;
};

/// Generators: the non-unit basis vectors of each factor after completing the
/// basis with the unit; relations: each factor's multiplication table.
PresentedAlgebra free_product(const std::vector<FinAlgebra>& factors);
PresentedAlgebra presentation_of(const FinAlgebra& a);
PresentedAlgebra free_algebra(std::size_t m, const Field& f);

/// One matrix per symbol.
struct Representation {
  std::size_t dim = 0;
  std::vector<Matrix> matrices;

  friend bool operator==(const Representation&, const Representation&) = default;
};

Representation scalar_extend(const Representation& r, const Embedding& e);

/// Builds a representation from generator matrices, solving the inverse symbols.
/// Throws InputError on a shape mismatch or a singular invertible generator.
/// `dim` is needed only when there are no generators.
Representation make_representation(const PresentedAlgebra& p, std::vector<Matrix> generator_matrices,
                                   std::size_t dim = PresentedAlgebra::npos);
Matrix evaluate_word(const Representation& r, const Word& w, const Field& f);
Matrix evaluate_relation(const Representation& r, const Relation& rel, const Field& f);
/// Every relation evaluates to zero and inverse symbols are actual inverses.
bool satisfies_relations(const PresentedAlgebra& p, const Representation& r);
/// Lexicographic order on the codes of the generator matrices.
bool representation_less(const Representation& a, const Representation& b, std::size_t generators);

struct EnumerationOptions {
  std::uint64_t budget = default_budget();
};

/// All d-dimensional representations over the (finite) field of P, sorted.
/// Generators are assigned in order; relations affine in the newest generator
/// cut its candidates to an affine subspace, the rest are checked per candidate.
/// Throws BudgetExceeded when the number of candidate matrices tried exceeds the budget.
std::vector<Representation> enumerate_representations(const PresentedAlgebra& p, std::size_t d,
                                                       const EnumerationOptions& opt = {});

/// Smallest subspace containing v that is invariant under the matrices.
Subspace spin(const std::vector<Matrix>& gens, const Vector& v);
/// A proper nonzero invariant subspace, or nullopt when the action is irreducible.
/// Finite fields: exhaustive over lines. Infinite fields: Burnside's criterion and
/// Norton's kernel test; throws Undecided when neither settles it.
std::optional<Subspace> find_invariant_subspace(const std::vector<Matrix>& gens, std::size_t dim,
                                                std::uint64_t budget = default_budget());
bool is_simple(const Representation& r, std::uint64_t budget = default_budget());
/// Linear space of T with T r(g) = s(g) T for all symbols g.
std::vector<Matrix> intertwiners(const Representation& r, const Representation& s, const Field& f);
bool are_isomorphic(const Representation& r, const Representation& s, std::uint64_t budget = default_budget());

/// Action restricted to an invariant subspace, and induced on the quotient.
std::vector<Matrix> restrict_action(const std::vector<Matrix>& gens, const Subspace& u);
std::vector<Matrix> quotient_action(const std::vector<Matrix>& gens, const Subspace& u);
/// Composition factors of the module given by `gens`, each as its action matrices.
std::vector<std::vector<Matrix>> composition_factors(const std::vector<Matrix>& gens, std::size_t dim,
                                                     std::uint64_t budget = default_budget());
/// One simple A-module per isomorphism class (all occur in the regular module), by dimension.
/// Each simple module is returned as the action matrices of the basis of A.
std::vector<std::vector<Matrix>> simple_modules(const FinAlgebra& a, std::uint64_t budget = default_budget());

/// One representation per conjugation orbit (the first in the given order). Falls
/// back to the full list when GL_d(q) is too large for the budget.
std::vector<Representation> orbit_representatives(const std::vector<Representation>& reps, const Field& f,
                                                  std::uint64_t budget = default_budget());
/// Same, but nullopt instead of the fallback.
std::optional<std::vector<Representation>> try_orbit_representatives(const std::vector<Representation>& reps,
                                                                     const Field& f,
                                                                     std::uint64_t budget = default_budget());

/// Simultaneous conjugation on tuples (x_1, ..., x_m), x_i drawn from lists[i]; each
/// list must be closed under conjugation and sorted. An element is a list of d x d
/// matrices. Orbits are found factor by factor under the stabilizer of the prefix,
/// so every returned tuple is lex-least in its orbit.
struct TupleOrbits {
  std::vector<std::vector<std::size_t>> tuples;  // indices into the lists
  std::vector<std::uint64_t> sizes;              // orbit sizes
};
/// nullopt when GL_d(q) or the orbit work exceeds the budget.
std::optional<TupleOrbits> tuple_orbits(const std::vector<std::vector<std::vector<Matrix>>>& lists, std::size_t d,
                                        const Field& f, std::uint64_t budget = default_budget());

}  // namespace cogebra
