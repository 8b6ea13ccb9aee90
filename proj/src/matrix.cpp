#include "cogebra/matrix.hpp"

#include <algorithm>

namespace cogebra {

namespace {

void require_same_field(const Field& a, const Field& b, const char* op) {
  if (!(a == b)) throw FieldMismatch(std::string(op) + ": operands over " + a.name() + " and " + b.name());
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows[0].size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged rows in matrix construction");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged rows in matrix construction");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.from_int(rows[r][c]);
  }
  return m;
}

Vector Matrix::row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x = field_.mul(x, c);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [&](const Scalar& x) { return field_.is_zero(x); });
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_, "matrix +");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix +: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_, "matrix -");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix -: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_, "matrix *");
  if (a.cols_ != b.rows_) throw InputError("matrix *: shape mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  if (const auto* t = a.field_.finite_tables()) {
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        std::uint32_t acc = 0;
        for (std::size_t k = 0; k < a.cols_; ++k)
          acc = t->add(acc, t->mul(a.data_[i * a.cols_ + k].code(), b.data_[k * b.cols_ + j].code()));
        out.data_[i * b.cols_ + j] = Scalar(acc);
      }
    return out;
  }
  const Field& f = a.field_;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (f.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(k, j)));
    }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw InputError("matrix-vector *: shape mismatch");
  Vector out(a.rows_, a.field_.zero());
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] = a.field_.add(out[i], a.field_.mul(a(i, k), v[k]));
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && (a.data_.empty() || a.field_ == b.field_) && a.data_ == b.data_;
}

bool code_less(const Matrix& a, const Matrix& b) {
  const auto& x = a.data();
  const auto& y = b.data();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i)
    if (x[i].code() != y[i].code()) return x[i].code() < y[i].code();
  return x.size() < y.size();
}

RowEchelon row_reduce(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && f.is_zero(a(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const Scalar s = f.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), s);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || f.is_zero(a(i, c))) continue;
      const Scalar factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {a.block(0, 0, r, a.cols()), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Field& f = m.field();
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw InputError("determinant of a non-square matrix");
  const Field& f = m.field();
  Matrix a = m;
  Scalar det = f.one();
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(a(piv, c))) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, a(c, c));
    const Scalar s = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(a(i, c))) continue;
      const Scalar factor = f.mul(a(i, c), s);
      for (std::size_t j = c; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(c, j)));
    }
  }
  return det;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "kronecker");
  const Field& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (f.is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
    }
  return out;
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw InputError("characteristic polynomial of a non-square matrix");
  const Field& f = m.field();
  PolynomialRing ring(f);
  const std::size_t n = m.rows();
  if (n == 0) return ring.one();
  // Coefficients high-to-low of det(xI - A_r) for leading principal blocks.
  std::vector<Scalar> c{f.one(), f.neg(m(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<Scalar> q(r + 2, f.zero());
    q[0] = f.one();
    q[1] = f.neg(m(r, r));
    // v = A_r^k S, starting with S = column r above the diagonal.
    Vector v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Scalar rs = f.zero();
      for (std::size_t i = 0; i < r; ++i) rs = f.add(rs, f.mul(m(r, i), v[i]));
      q[k + 2] = f.neg(rs);
      Vector next(r, f.zero());
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] = f.add(next[i], f.mul(m(i, j), v[j]));
      v = std::move(next);
    }
    std::vector<Scalar> nc(r + 2, f.zero());
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) nc[i] = f.add(nc[i], f.mul(q[i - j], c[j]));
    c = std::move(nc);
  }
  Polynomial p;
  p.coeffs.assign(c.rbegin(), c.rend());
  return p;
}

Matrix companion(const Field& f, const Polynomial& monic_poly) {
  if (monic_poly.degree() < 1 || !f.is_one(monic_poly.coeffs.back()))
    throw InputError("companion matrix needs a monic polynomial of degree >= 1");
  const auto r = static_cast<std::size_t>(monic_poly.degree());
  Matrix c(f, r, r);
  for (std::size_t i = 1; i < r; ++i) c(i, i - 1) = f.one();
  for (std::size_t i = 0; i < r; ++i) c(i, r - 1) = f.neg(monic_poly.coeffs[i]);
  return c;
}

Matrix scalar_extend(const Matrix& m, const Embedding& e) {
  require_same_field(m.field(), e.source(), "scalar_extend");
  Matrix out(e.target(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = e(m(r, c));
  return out;
}

Matrix stack_vectorized(const std::vector<Matrix>& mats) {
  if (mats.empty()) throw InputError("stack_vectorized: empty list");
  Matrix out(mats[0].field(), mats.size(), mats[0].rows() * mats[0].cols());
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = mats[i].data()[j];
  return out;
}

Subspace kernel(const Matrix& m) {
  const Field& f = m.field();
  auto e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), basis);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InputError("solve_affine: shape mismatch");
  const Field& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(m.cols(), f.zero());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) sol.particular[e.pivots[i]] = e.reduced(i, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    sol.directions.push_back(std::move(v));
  }
  return sol;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(Field f, std::size_t ambient) : field_(std::move(f)), ambient_(ambient), basis_(field_, 0, ambient) {}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw InputError("span: ambient-dimension mismatch");
  if (vectors.empty()) return Subspace(f, ambient);
  return row_space(Matrix::from_rows(f, vectors, ambient));
}

Subspace Subspace::row_space(const Matrix& m) {
  Subspace s(m.field(), m.cols());
  auto e = row_reduce(m);
  s.basis_ = std::move(e.reduced);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(const Field& f, std::size_t ambient) { return row_space(Matrix::identity(f, ambient)); }

Subspace Subspace::coordinate(const Field& f, std::size_t ambient, const std::vector<std::size_t>& axes) {
  std::vector<Vector> vs;
  for (auto a : axes) {
    if (a >= ambient) throw InputError("coordinate subspace: axis out of range");
    Vector v(ambient, f.zero());
    v[a] = f.one();
    vs.push_back(std::move(v));
  }
  return span(f, ambient, vs);
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw InputError("subspace membership: ambient-dimension mismatch");
  Vector coords(dim(), field_.zero());
  Vector rest = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar c = rest[pivots_[i]];
    coords[i] = c;
    if (field_.is_zero(c)) continue;
    for (std::size_t j = 0; j < ambient_; ++j) rest[j] = field_.sub(rest[j], field_.mul(c, basis_(i, j)));
  }
  for (const auto& x : rest)
    if (!field_.is_zero(x)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("subspace containment: ambient-dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Matrix Subspace::annihilator() const {
  auto k = kernel(basis_.rows() == 0 ? Matrix(field_, 0, ambient_) : basis_);
  return k.basis();
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("subspace sum: ambient-dimension mismatch");
  require_same_field(field_, other.field_, "subspace sum");
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < dim(); ++i) vs.push_back(basis_vector(i));
  for (std::size_t i = 0; i < other.dim(); ++i) vs.push_back(other.basis_vector(i));
  return span(field_, ambient_, vs);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("subspace intersection: ambient-dimension mismatch");
  require_same_field(field_, other.field_, "subspace intersection");
  if (dim() == 0 || other.dim() == 0) return Subspace(field_, ambient_);
  // Columns u_1..u_a, -w_1..-w_b; a kernel vector (x, y) gives sum x_i u_i in both.
  Matrix sys(field_, ambient_, dim() + other.dim());
  for (std::size_t j = 0; j < ambient_; ++j) {
    for (std::size_t i = 0; i < dim(); ++i) sys(j, i) = basis_(i, j);
    for (std::size_t i = 0; i < other.dim(); ++i) sys(j, dim() + i) = field_.neg(other.basis_(i, j));
  }
  auto k = kernel(sys);
  std::vector<Vector> vs;
  for (std::size_t r = 0; r < k.dim(); ++r) {
    Vector v(ambient_, field_.zero());
    for (std::size_t i = 0; i < dim(); ++i) {
      const Scalar& c = k.basis()(r, i);
      if (field_.is_zero(c)) continue;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] = field_.add(v[j], field_.mul(c, basis_(i, j)));
    }
    vs.push_back(std::move(v));
  }
  return span(field_, ambient_, vs);
}

bool operator==(const Subspace& a, const Subspace& b) { return a.ambient_ == b.ambient_ && a.basis_ == b.basis_; }

Subspace scalar_extend(const Subspace& s, const Embedding& e) {
  return Subspace::row_space(scalar_extend(s.basis().rows() ? s.basis() : Matrix(s.field(), 0, s.ambient()), e));
}

// ---------------------------------------------------------------------------
// EchelonBasis

bool EchelonBasis::reduce(Vector& v) const {
  if (v.size() != ambient_) throw InputError("echelon reduce: ambient-dimension mismatch");
  if (const auto* t = field_.finite_tables()) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::uint32_t c = v[pivots_[r]].code();
      if (c == 0) continue;
      const std::uint32_t nc = t->neg[c];
      const Vector& row = rows_[r];
      for (std::size_t j = pivots_[r]; j < ambient_; ++j) {
        const std::uint32_t x = row[j].code();
        if (x) v[j] = Scalar(t->add(v[j].code(), t->mul(nc, x)));
      }
    }
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.code() == 0; });
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (field_.is_zero(c)) continue;
    for (std::size_t j = pivots_[r]; j < ambient_; ++j)
      if (!field_.is_zero(rows_[r][j])) v[j] = field_.sub(v[j], field_.mul(c, rows_[r][j]));
  }
  return std::all_of(v.begin(), v.end(), [&](const Scalar& x) { return field_.is_zero(x); });
}

bool EchelonBasis::insert(Vector v) {
  if (reduce(v)) return false;
  std::size_t piv = 0;
  while (field_.is_zero(v[piv])) ++piv;
  const Scalar s = field_.inv(v[piv]);
  for (auto& x : v) x = field_.mul(x, s);
  for (auto& row : rows_) {
    const Scalar c = row[piv];
    if (field_.is_zero(c)) continue;
    for (std::size_t j = piv; j < ambient_; ++j) row[j] = field_.sub(row[j], field_.mul(c, v[j]));
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Subspace EchelonBasis::subspace() const { return Subspace::span(field_, ambient_, rows_); }

}  // namespace cogebra
