#pragma once

// Finite-dimensional coalgebras and algebras by sparse structure constants.
//
// Coalgebra: Delta(e_k) = sum mu_k^{ij} e_i (x) e_j, counit eps_k = eps(e_k).
// FinAlgebra: e_i e_j = sum c_{ij}^k e_k, with a unit vector.
// The dual algebra of C has basis e_k^* and the convolution product
// e_a^* e_b^* = sum_k mu_k^{ab} e_k^*, so dual_algebra and dual_coalgebra just
// transpose the indexing.

#include <optional>
#include <string>
#include <vector>

#include "cogebra/matrix.hpp"

namespace cogebra {

struct DeltaTerm {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  Scalar c;
};

struct ProductTerm {
  std::uint32_t k = 0;
  Scalar c;
};

/// First failing axiom instance; `indices` names the basis indices involved.
struct Violation {
  std::string law;
  std::vector<std::size_t> indices;
  std::string message;
};

class Coalgebra {
 public:
  Coalgebra() = default;
  Coalgebra(Field f, std::size_t dim);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  const std::vector<DeltaTerm>& delta(std::size_t k) const { return delta_[k]; }
  /// Replaces Delta(e_k); terms are merged, sorted by (i, j), zeros dropped.
  void set_delta(std::size_t k, std::vector<DeltaTerm> terms);
  Scalar delta_coefficient(std::size_t k, std::size_t i, std::size_t j) const;
  std::size_t delta_size() const;

  const Vector& counit() const { return counit_; }
  void set_counit(std::size_t k, Scalar c) { counit_.at(k) = std::move(c); }
  void set_counit(Vector eps);

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(std::size_t k) const;

  /// Delta(x) as a dim x dim matrix: entry (i, j) is the coefficient of e_i (x) e_j.
  Matrix comultiply(const Vector& x) const;

  friend bool operator==(const Coalgebra& a, const Coalgebra& b);

 private:
  Field field_;
  std::size_t dim_ = 0;
  std::vector<std::vector<DeltaTerm>> delta_;
  Vector counit_;
  std::vector<std::string> labels_;
};

class FinAlgebra {
 public:
  FinAlgebra() = default;
  FinAlgebra(Field f, std::size_t dim);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  const std::vector<ProductTerm>& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  void set_product(std::size_t i, std::size_t j, std::vector<ProductTerm> terms);
  Scalar product_coefficient(std::size_t i, std::size_t j, std::size_t k) const;

  const Vector& unit() const { return unit_; }
  void set_unit(Vector u);

  Vector multiply(const Vector& a, const Vector& b) const;
  /// Matrix of x -> a x (columns indexed by the basis).
  Matrix left_multiplication(const Vector& a) const;
  Matrix left_multiplication(std::size_t basis_index) const;
  Vector basis_vector(std::size_t k) const;

  friend bool operator==(const FinAlgebra& a, const FinAlgebra& b);

 private:
  Field field_;
  std::size_t dim_ = 0;
  std::vector<std::vector<ProductTerm>> products_;
  Vector unit_;
};

std::optional<Violation> validate_coalgebra(const Coalgebra& c);
std::optional<Violation> validate_algebra(const FinAlgebra& a);

/// Basis e_ij (row-major), Delta(e_ij) = sum_k e_ik (x) e_kj, eps(e_ij) = delta_ij.
Coalgebra matrix_coalgebra(const Field& f, std::size_t n);
/// Delta(g_s) = g_s (x) g_s, eps(g_s) = 1.
Coalgebra grouplike_coalgebra(const Field& f, const std::vector<std::string>& labels);
Coalgebra trivial_coalgebra(const Field& f);
/// Functions on Z/n: basis delta_g, Delta(delta_g) = sum_{h} delta_h (x) delta_{g-h}, eps(delta_g) = [g = 0].
/// Its dual algebra is the group algebra k[Z/n]; comodules are Z/n-representations.
Coalgebra cyclic_function_coalgebra(const Field& f, std::size_t n);
/// The n x n matrix algebra with basis E_ij (row-major).
FinAlgebra matrix_algebra(const Field& f, std::size_t n);
/// A finite extension k -> k' viewed as a k-algebra, on the basis 1, y, ..., y^(r-1).
FinAlgebra field_as_algebra(const Embedding& e);
/// The k-coalgebra dual to k' as a k-algebra.
Coalgebra dual_field_coalgebra(const Embedding& e);

/// Convolution algebra; `check` re-validates C first (InputError if invalid).
FinAlgebra dual_algebra(const Coalgebra& c, bool check = true);
Coalgebra dual_coalgebra(const FinAlgebra& a, bool check = true);

Coalgebra direct_sum(const Coalgebra& a, const Coalgebra& b);
Coalgebra scalar_extend(const Coalgebra& c, const Embedding& e);
FinAlgebra scalar_extend(const FinAlgebra& a, const Embedding& e);

/// The largest subcoalgebra contained in W, by the decreasing fixpoint
/// D_{k+1} = {x in D_k : Delta(x) in D_k (x) D_k}.
Subspace largest_subcoalgebra(const Coalgebra& c, const Subspace& w);
/// Direct check that Delta(D) lies in D (x) D.
bool is_subcoalgebra(const Coalgebra& c, const Subspace& d);

/// Whether C becomes pointed over the algebraic closure, i.e. C^*/rad is
/// commutative. Decided as: the ideal of C^* generated by commutators is nilpotent.
bool is_geometrically_pointed(const Coalgebra& c);
/// Same criterion on an algebra: A/rad(A) is commutative.
bool has_commutative_semisimple_quotient(const FinAlgebra& a);

/// Checks (pi (x) pi) Delta_src = Delta_dst pi and eps_dst pi = eps_src, where
/// pi is a dst.dim() x src.dim() matrix.
std::optional<Violation> check_coalgebra_morphism(const Matrix& pi, const Coalgebra& src, const Coalgebra& dst);

/// Coordinates of a finite extension k' over k on the basis 1, y, ..., y^(r-1),
/// y the flat generator of k'.
class RelativeBasis {
 public:
  explicit RelativeBasis(Embedding e);
  const Embedding& embedding() const { return e_; }
  std::size_t degree() const { return basis_.size(); }
  const std::vector<Scalar>& basis() const { return basis_; }
  /// k-coordinates of an element of k'.
  Vector coordinates(const Scalar& z) const;

 private:
  Embedding e_;
  std::vector<Scalar> basis_;
  Matrix to_coords_;  // over the prime field: target residues -> stacked source residues
};

}  // namespace cogebra
