#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cogebra/field.hpp"
#include "cogebra/polynomial.hpp"

namespace cogebra {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, const std::vector<Vector>& rows, std::size_t cols = 0);
  static Matrix from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  const std::vector<Scalar>& data() const { return data_; }

  Matrix transpose() const;
  Matrix scaled(const Scalar& c) const;
  bool is_zero() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Lexicographic comparison on finite-field codes (row-major). Finite fields only.
bool code_less(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                   // RREF, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

RowEchelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);
Matrix kronecker(const Matrix& a, const Matrix& b);
/// Division-free (Berkowitz) characteristic polynomial det(xI - M), monic.
Polynomial characteristic_polynomial(const Matrix& m);
/// Companion matrix of a monic polynomial: last column holds -c_0..-c_{r-1}.
Matrix companion(const Field& f, const Polynomial& monic_poly);
Matrix scalar_extend(const Matrix& m, const Embedding& e);
/// Stacks vec(M) (row-major) of each matrix as the rows of a matrix.
Matrix stack_vectorized(const std::vector<Matrix>& mats);

class Subspace;

/// {x : M x = 0} in k^cols.
Subspace kernel(const Matrix& m);
/// Column space of M in k^rows.
Subspace image(const Matrix& m);

/// Solution set of M x = b: a particular solution plus a kernel basis, or empty.
struct AffineSolution {
  Vector particular;
  std::vector<Vector> directions;
};
std::optional<AffineSolution> solve_affine(const Matrix& m, const Vector& b);

/// A subspace of k^n stored by its reduced row-echelon basis (no zero rows).
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient);

  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace full(const Field& f, std::size_t ambient);
  static Subspace coordinate(const Field& f, std::size_t ambient, const std::vector<std::size_t>& axes);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the echelon basis; nullopt if v is not in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// Rows spanning the annihilator {phi : phi(x) = 0 for x in this}.
  Matrix annihilator() const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace scalar_extend(const Subspace& s, const Embedding& e);

/// Incrementally built echelon basis; insert() reports whether the vector was new.
/// Rows are kept fully reduced so membership tests are a single sweep.
class EchelonBasis {
 public:
  EchelonBasis(Field f, std::size_t ambient) : field_(std::move(f)), ambient_(ambient) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  /// Reduces v against the basis in place; returns true if it becomes zero.
  bool reduce(Vector& v) const;
  bool insert(Vector v);
  bool contains(Vector v) const { return reduce(v); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Subspace subspace() const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace cogebra
