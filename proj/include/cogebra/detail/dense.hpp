#pragma once

// Flat dense kernels shared by the enumeration and span engines. Two arithmetic
// policies: raw finite-field codes (table lookups) and general Scalars.

#include <cstdint>
#include <vector>

#include "cogebra/matrix.hpp"

namespace cogebra::detail {

struct CodeOps {
  using E = std::uint32_t;
  const FiniteTables* t = nullptr;

  explicit CodeOps(const Field& f) : t(f.finite_tables()) {}
  E zero() const { return 0; }
  E one() const { return 1; }
  E add(E a, E b) const { return t->add(a, b); }
  E sub(E a, E b) const { return t->sub(a, b); }
  E mul(E a, E b) const { return t->mul(a, b); }
  E neg(E a) const { return t->neg[a]; }
  E inv(E a) const { return t->inv(a); }
  bool is_zero(E a) const { return a == 0; }
  E from(const Scalar& s) const { return s.code(); }
  Scalar to(E a) const { return Scalar(a); }
};

struct ScalarOps {
  using E = Scalar;
  Field f;

  explicit ScalarOps(Field field) : f(std::move(field)) {}
  E zero() const { return f.zero(); }
  E one() const { return f.one(); }
  E add(const E& a, const E& b) const { return f.add(a, b); }
  E sub(const E& a, const E& b) const { return f.sub(a, b); }
  E mul(const E& a, const E& b) const { return f.mul(a, b); }
  E neg(const E& a) const { return f.neg(a); }
  E inv(const E& a) const { return f.inv(a); }
  bool is_zero(const E& a) const { return f.is_zero(a); }
  E from(const Scalar& s) const { return s; }
  Scalar to(const E& a) const { return a; }
};

template <class Ops>
using Flat = std::vector<typename Ops::E>;

template <class Ops>
Flat<Ops> flatten(const Ops& ops, const Matrix& m) {
  Flat<Ops> out;
  out.reserve(m.data().size());
  for (const auto& x : m.data()) out.push_back(ops.from(x));
  return out;
}

template <class Ops>
Matrix unflatten(const Ops& ops, const Field& f, const Flat<Ops>& v, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = ops.to(v[i * cols + j]);
  return m;
}

template <class Ops>
Flat<Ops> identity_flat(const Ops& ops, std::size_t d) {
  Flat<Ops> out(d * d, ops.zero());
  for (std::size_t i = 0; i < d; ++i) out[i * d + i] = ops.one();
  return out;
}

/// out = a * b for d x d row-major matrices.
template <class Ops>
void matmul(const Ops& ops, const typename Ops::E* a, const typename Ops::E* b, typename Ops::E* out, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      typename Ops::E acc = ops.zero();
      for (std::size_t k = 0; k < d; ++k) {
        const auto& x = a[i * d + k];
        if (ops.is_zero(x)) continue;
        acc = ops.add(acc, ops.mul(x, b[k * d + j]));
      }
      out[i * d + j] = acc;
    }
}

/// Echelon basis over flat vectors; rows kept fully reduced.
template <class Ops>
class Echelon {
 public:
  using E = typename Ops::E;

  Echelon(Ops ops, std::size_t ambient) : ops_(std::move(ops)), n_(ambient) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<Flat<Ops>>& rows() const { return rows_; }

  /// Reduces v in place; returns true when it becomes zero.
  bool reduce(Flat<Ops>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (ops_.is_zero(v[p])) continue;
      const E c = v[p];
      const auto& row = rows_[r];
      for (std::size_t j = p; j < n_; ++j)
        if (!ops_.is_zero(row[j])) v[j] = ops_.sub(v[j], ops_.mul(c, row[j]));
    }
    for (const auto& x : v)
      if (!ops_.is_zero(x)) return false;
    return true;
  }

  bool insert(Flat<Ops> v) {
    if (reduce(v)) return false;
    std::size_t p = 0;
    while (ops_.is_zero(v[p])) ++p;
    const E s = ops_.inv(v[p]);
    for (std::size_t j = p; j < n_; ++j) v[j] = ops_.mul(v[j], s);
    for (auto& row : rows_) {
      if (ops_.is_zero(row[p])) continue;
      const E c = row[p];
      for (std::size_t j = p; j < n_; ++j)
        if (!ops_.is_zero(v[j])) row[j] = ops_.sub(row[j], ops_.mul(c, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  Ops ops_;
  std::size_t n_;
  std::vector<Flat<Ops>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace cogebra::detail
