#pragma once

// Comodules, joint comodules over a family of coalgebras, the simple census and
// degree-truncated products.
//
// A comodule over C with coaction rho(x_j) = sum_{i,k} (R_k)_ij x_i (x) e_k is
// stored as the matrices R_k. The laws read R_a R_b = sum_k mu_k^{ab} R_k and
// sum_k eps_k R_k = I, i.e. e_k^* -> R_k is a representation of C^*. A joint
// comodule over (C_1..C_m) is one such structure per factor on a shared space,
// i.e. a representation of the free product of the C_i^*.

#include "cogebra/coefficients.hpp"

namespace cogebra {

using Family = std::vector<Coalgebra>;

class Comodule {
 public:
  Comodule() = default;
  /// One dim x dim matrix per basis vector of C.
  Comodule(Coalgebra c, std::vector<Matrix> action);
  /// From the (dim * dim C) x dim coaction matrix: row i*n + k, column j.
  static Comodule from_coaction(Coalgebra c, const Matrix& coaction);

  const Coalgebra& coalgebra() const { return c_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& action() const { return action_; }
  Matrix coaction() const;

 private:
  Coalgebra c_;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
};

std::optional<Violation> validate_comodule(const Comodule& v);
/// C over itself by Delta.
Comodule regular_comodule(const Coalgebra& c);

/// Representation of presentation_of(dual_algebra(C)); InputError on an invalid coaction.
Representation comodule_to_rep(const Comodule& v);
Comodule rep_to_comodule(const Coalgebra& c, const Representation& r);

struct JointComodule {
  std::size_t dim = 0;
  std::vector<Comodule> structures;  // one per factor
};

/// free_product of the dual algebras; rejects empty or mixed-field families and invalid members.
PresentedAlgebra joint_presentation(const Family& family);
Representation joint_to_rep(const PresentedAlgebra& p, const JointComodule& v);
JointComodule rep_to_joint(const Family& family, const PresentedAlgebra& p, const Representation& r);

struct ProductOptions {
  std::uint64_t budget = default_budget();
  /// Carriers (and projections) are built only up to this dimension; beyond it
  /// only dimensions are reported.
  std::size_t materialize_limit = 160;
  /// Replace enumerated representations by conjugation-orbit representatives.
  bool reduce_orbits = true;
};

/// All e-dimensional joint representations, sorted: the product of the factor
/// enumerations. BudgetExceeded if the factor or product counts exceed the budget.
std::vector<Representation> joint_representations(const Family& family, const PresentedAlgebra& p, std::size_t e,
                                                  const ProductOptions& opt = {});

/// One joint representation per conjugation orbit (lex-least), with orbit sizes;
/// falls back to the full sorted list (`orbits` false) when GL_e(q) is too large
/// or orbit reduction is switched off.
struct JointOrbits {
  std::vector<Representation> reps;
  std::vector<std::uint64_t> sizes;
  bool orbits = false;
};
JointOrbits joint_orbit_representatives(const Family& family, const PresentedAlgebra& p, std::size_t e,
                                        const ProductOptions& opt = {});

/// Dimensions of the simple modules of each factor's dual algebra.
std::vector<std::vector<std::size_t>> factor_simple_dims(const Family& family, std::uint64_t budget = default_budget());
/// Whether some module of every factor has dimension e (e lies in each semigroup of simple dimensions).
bool joint_dimension_possible(const std::vector<std::vector<std::size_t>>& simple_dims, std::size_t e);

struct SimpleCensus {
  PresentedAlgebra presentation;
  /// classes[e-1]: the lex-least representation of each class of simple e-dimensional joint comodules.
  std::vector<std::vector<Representation>> classes;
  std::vector<std::size_t> simple_counts;  // raw simple representations per dimension
};
SimpleCensus simple_census(const Family& family, std::size_t d, const ProductOptions& opt = {});

struct TruncatedProduct {
  Family family;
  std::size_t d = 0;
  bool supplied = false;  // relative to a supplied comodule list
  PresentedAlgebra presentation;
  CoefficientSpan span;
  std::size_t carrier_dim = 0;
  std::optional<Coalgebra> carrier;
  std::vector<Matrix> projections;        // dim C_i x carrier_dim, present with the carrier
  std::vector<Representation> witnesses;  // representations contributing to the span
  std::vector<std::size_t> skipped_dims;  // dimensions with no joint module at all
};

/// Carrier = coefficient span of all joint representations of dimension <= d.
TruncatedProduct truncated_product(const Family& family, std::size_t d, const ProductOptions& opt = {});
/// Same construction on a supplied list (any field); d is the largest supplied dimension.
TruncatedProduct truncated_product_from(const Family& family, const std::vector<JointComodule>& supplied,
                                        const ProductOptions& opt = {});

/// pi_i as a dim C_i x dim span matrix: the restriction of functionals to the i-th factor.
Matrix projection(const CoefficientSpan& span, const PresentedAlgebra& p, std::size_t factor);

struct ProfileReport {
  std::vector<std::size_t> dims;  // d = 1..dmax
  bool nondecreasing = true;
  bool strictly_increasing = true;
};
ProfileReport dimension_profile(const Family& family, std::size_t dmax, const ProductOptions& opt = {});

Family scalar_extend(const Family& family, const Embedding& e);

struct ExtensionReport {
  std::size_t d = 0;
  std::size_t source_dim = 0;           // trunc_d over k
  std::size_t extended_source_dim = 0;  // its functionals, extended to k'
  std::size_t target_dim = 0;           // trunc_d of the extended family
  bool equal = false;
  /// The comparison trunc_d(k) (x) k' -> trunc_d(k') is an injection of functionals.
  bool comparison_injective = false;
};
ExtensionReport extension_commutation_report(const Family& family, const Embedding& e, std::size_t d,
                                             const ProductOptions& opt = {});

struct VanishingReport {
  bool vanishes = false;  // no nonzero joint comodule of dimension <= d
  std::size_t first_dim = 0;
  std::vector<std::vector<std::size_t>> simple_dims;
  std::optional<JointComodule> witness;  // a direct sum of simples of dimension first_dim
  /// Exhaustive enumeration covered dimensions 1..enumerated_up_to (as far as the
  /// budget allowed) and agreed with the structural answer there.
  std::size_t enumerated_up_to = 0;
  bool enumeration_consistent = true;
};
VanishingReport vanishing_check(const Family& family, std::size_t d, const ProductOptions& opt = {});

}  // namespace cogebra
