#pragma once

// Degree-truncated cofree coalgebras on V = k^m, realized as coefficient spans
// of the free algebra T(V*) on m generators, and the convolution tensor product
// of representations of T(C) for a coalgebra C.

#include "cogebra/coefficients.hpp"

namespace cogebra {

struct CofreeOptions {
  std::uint64_t budget = default_budget();
  /// Cofree carriers are dense; past this only the dimension and structure map are kept.
  std::size_t materialize_limit = 64;
  bool reduce_orbits = true;
};

struct CofreeTruncation {
  std::size_t m = 0;
  std::size_t d = 0;
  PresentedAlgebra presentation;  // free algebra on x1..xm
  CoefficientSpan span;
  std::size_t carrier_dim = 0;
  std::optional<Coalgebra> carrier;
  /// m x carrier_dim: a functional goes to its values on the generators (V = V** in the fixed basis).
  Matrix structure_map;
  std::vector<Representation> representations;  // what was spanned (orbit representatives)
};

/// Coefficient span of all representations of the free algebra of dimension 1..d.
/// Finite fields only; d >= 1.
CofreeTruncation cofree_truncated(std::size_t m, std::size_t d, const Field& f, const CofreeOptions& opt = {});

struct OntoReport {
  bool onto = false;
  /// preimages[g] (carrier coordinates) maps to the g-th basis vector of V.
  std::vector<Vector> preimages;
};
OntoReport structure_map_onto(const CofreeTruncation& t);

/// The inclusion of the level-d carrier into a higher level, as a large x small matrix.
Matrix cofree_inclusion(const CofreeTruncation& small, const CofreeTruncation& large);

struct CofreeExtensionReport {
  std::size_t d = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  bool equal = false;
  /// The extended source functionals stay independent and lie in the target carrier.
  bool comparison_injective = false;
};
CofreeExtensionReport cofree_extension_report(std::size_t m, std::size_t d, const Embedding& e,
                                              const CofreeOptions& opt = {});

/// Free algebra T(C) with generator g <-> basis vector g of C.
PresentedAlgebra tensor_presentation(const Coalgebra& c);

/// Generator c_k acts on the tensor space by sum mu_k^{ij} rho(c_i) (x) sigma(c_j), so the
/// (a,b),(i,j) coefficient is the product of the coefficient functionals rho_ai * sigma_bj
/// in T(C)^o. Row index of the tensor space: a * dim sigma + b.
Representation convolution_tensor_rep(const Coalgebra& c, const Representation& rho, const Representation& sigma);

}  // namespace cogebra
