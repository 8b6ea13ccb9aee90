#include "cogebra/coalgebra.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace cogebra {

namespace {

void require_same_field(const Field& a, const Field& b, const char* op) {
  if (!(a == b)) throw FieldMismatch(std::string(op) + ": " + a.name() + " vs " + b.name());
}

std::string index_label(const char* prefix, std::size_t i, std::size_t j, std::size_t n) {
  if (n < 10) return prefix + std::to_string(i + 1) + std::to_string(j + 1);
  return prefix + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// Coalgebra

Coalgebra::Coalgebra(Field f, std::size_t dim)
    : field_(std::move(f)), dim_(dim), delta_(dim), counit_(dim, field_.zero()) {}

void Coalgebra::set_delta(std::size_t k, std::vector<DeltaTerm> terms) {
  if (k >= dim_) throw InputError("comultiplication index out of range");
  for (const auto& t : terms)
    if (t.i >= dim_ || t.j >= dim_) throw InputError("comultiplication term index out of range");
  std::sort(terms.begin(), terms.end(), [](const DeltaTerm& a, const DeltaTerm& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  std::vector<DeltaTerm> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().i == t.i && merged.back().j == t.j)
      merged.back().c = field_.add(merged.back().c, t.c);
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [&](const DeltaTerm& t) { return field_.is_zero(t.c); });
  delta_[k] = std::move(merged);
}

Scalar Coalgebra::delta_coefficient(std::size_t k, std::size_t i, std::size_t j) const {
  const auto& terms = delta_.at(k);
  auto it = std::lower_bound(terms.begin(), terms.end(), std::pair{i, j}, [](const DeltaTerm& t, const auto& key) {
    return t.i != key.first ? t.i < key.first : t.j < key.second;
  });
  if (it != terms.end() && it->i == i && it->j == j) return it->c;
  return field_.zero();
}

std::size_t Coalgebra::delta_size() const {
  std::size_t n = 0;
  for (const auto& d : delta_) n += d.size();
  return n;
}

void Coalgebra::set_counit(Vector eps) {
  if (eps.size() != dim_) throw InputError("counit length does not match the dimension");
  counit_ = std::move(eps);
}

void Coalgebra::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != dim_) throw InputError("label count does not match the dimension");
  labels_ = std::move(labels);
}

std::string Coalgebra::label(std::size_t k) const {
  return labels_.empty() ? "e" + std::to_string(k) : labels_.at(k);
}

Matrix Coalgebra::comultiply(const Vector& x) const {
  if (x.size() != dim_) throw InputError("comultiply: vector length mismatch");
  Matrix m(field_, dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    if (field_.is_zero(x[k])) continue;
    for (const auto& t : delta_[k]) m(t.i, t.j) = field_.add(m(t.i, t.j), field_.mul(x[k], t.c));
  }
  return m;
}

bool operator==(const Coalgebra& a, const Coalgebra& b) {
  if (a.dim_ != b.dim_ || !(a.field_ == b.field_) || a.counit_ != b.counit_) return false;
  for (std::size_t k = 0; k < a.dim_; ++k) {
    const auto& x = a.delta_[k];
    const auto& y = b.delta_[k];
    if (x.size() != y.size()) return false;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (x[t].i != y[t].i || x[t].j != y[t].j || !(x[t].c == y[t].c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FinAlgebra

FinAlgebra::FinAlgebra(Field f, std::size_t dim)
    : field_(std::move(f)), dim_(dim), products_(dim * dim), unit_(dim, field_.zero()) {}

void FinAlgebra::set_product(std::size_t i, std::size_t j, std::vector<ProductTerm> terms) {
  if (i >= dim_ || j >= dim_) throw InputError("product index out of range");
  for (const auto& t : terms)
    if (t.k >= dim_) throw InputError("product term index out of range");
  std::sort(terms.begin(), terms.end(), [](const ProductTerm& a, const ProductTerm& b) { return a.k < b.k; });
  std::vector<ProductTerm> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().k == t.k)
      merged.back().c = field_.add(merged.back().c, t.c);
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [&](const ProductTerm& t) { return field_.is_zero(t.c); });
  products_[i * dim_ + j] = std::move(merged);
}

Scalar FinAlgebra::product_coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : product(i, j))
    if (t.k == k) return t.c;
  return field_.zero();
}

void FinAlgebra::set_unit(Vector u) {
  if (u.size() != dim_) throw InputError("unit length does not match the dimension");
  unit_ = std::move(u);
}

Vector FinAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw InputError("multiply: vector length mismatch");
  Vector out(dim_, field_.zero());
  for (std::size_t i = 0; i < dim_; ++i) {
    if (field_.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (field_.is_zero(b[j])) continue;
      const Scalar ab = field_.mul(a[i], b[j]);
      for (const auto& t : product(i, j)) out[t.k] = field_.add(out[t.k], field_.mul(ab, t.c));
    }
  }
  return out;
}

Matrix FinAlgebra::left_multiplication(const Vector& a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (field_.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& t : product(i, j)) m(t.k, j) = field_.add(m(t.k, j), field_.mul(a[i], t.c));
  }
  return m;
}

Matrix FinAlgebra::left_multiplication(std::size_t basis_index) const {
  return left_multiplication(basis_vector(basis_index));
}

Vector FinAlgebra::basis_vector(std::size_t k) const {
  Vector v(dim_, field_.zero());
  v.at(k) = field_.one();
  return v;
}

bool operator==(const FinAlgebra& a, const FinAlgebra& b) {
  if (a.dim_ != b.dim_ || !(a.field_ == b.field_) || a.unit_ != b.unit_) return false;
  for (std::size_t x = 0; x < a.products_.size(); ++x) {
    const auto& p = a.products_[x];
    const auto& q = b.products_[x];
    if (p.size() != q.size()) return false;
    for (std::size_t t = 0; t < p.size(); ++t)
      if (p[t].k != q[t].k || !(p[t].c == q[t].c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Validation

std::optional<Violation> validate_coalgebra(const Coalgebra& c) {
  const Field& f = c.field();
  const std::size_t n = c.dim();
  if (c.counit().size() != n) return Violation{"shape", {}, "counit length differs from the dimension"};
  using Key = std::array<std::uint32_t, 3>;
  for (std::size_t k = 0; k < n; ++k) {
    std::map<Key, Scalar> lhs, rhs;
    auto accumulate = [&](std::map<Key, Scalar>& m, Key key, const Scalar& v) {
      auto [it, fresh] = m.try_emplace(key, v);
      if (!fresh) it->second = f.add(it->second, v);
    };
    for (const auto& t : c.delta(k)) {
      for (const auto& u : c.delta(t.i)) accumulate(lhs, {u.i, u.j, t.j}, f.mul(t.c, u.c));
      for (const auto& u : c.delta(t.j)) accumulate(rhs, {t.i, u.i, u.j}, f.mul(t.c, u.c));
    }
    std::erase_if(lhs, [&](const auto& e) { return f.is_zero(e.second); });
    std::erase_if(rhs, [&](const auto& e) { return f.is_zero(e.second); });
    if (lhs != rhs) {
      // first differing key in lexicographic order
      auto a = lhs.begin();
      auto b = rhs.begin();
      while (a != lhs.end() && b != rhs.end() && a->first == b->first && a->second == b->second) ++a, ++b;
      Key key = (a == lhs.end()) ? b->first : (b == rhs.end() ? a->first : std::min(a->first, b->first));
      return Violation{"coassociativity",
                       {k, key[0], key[1], key[2]},
                       "(Delta(x)id)Delta and (id(x)Delta)Delta differ on " + c.label(k) + " at (" +
                           std::to_string(key[0]) + "," + std::to_string(key[1]) + "," + std::to_string(key[2]) + ")"};
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    Vector left(n, f.zero()), right(n, f.zero());
    for (const auto& t : c.delta(k)) {
      left[t.j] = f.add(left[t.j], f.mul(c.counit()[t.i], t.c));
      right[t.i] = f.add(right[t.i], f.mul(c.counit()[t.j], t.c));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar expected = j == k ? f.one() : f.zero();
      if (!(left[j] == expected))
        return Violation{"counit", {k, j}, "(eps(x)id)Delta(" + c.label(k) + ") has wrong coefficient at " + c.label(j)};
      if (!(right[j] == expected))
        return Violation{"counit", {k, j}, "(id(x)eps)Delta(" + c.label(k) + ") has wrong coefficient at " + c.label(j)};
    }
  }
  return std::nullopt;
}

std::optional<Violation> validate_algebra(const FinAlgebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = a.multiply(a.basis_vector(i), a.basis_vector(j));
      for (std::size_t k = 0; k < n; ++k) {
        const Vector lhs = a.multiply(ij, a.basis_vector(k));
        const Vector rhs = a.multiply(a.basis_vector(i), a.multiply(a.basis_vector(j), a.basis_vector(k)));
        if (lhs != rhs) return Violation{"associativity", {i, j, k}, "(e_i e_j) e_k != e_i (e_j e_k)"};
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    const Vector e = a.basis_vector(i);
    if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e)
      return Violation{"unit", {i}, "unit does not act as identity on e_" + std::to_string(i)};
  }
  (void)f;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constructors

Coalgebra matrix_coalgebra(const Field& f, std::size_t n) {
  if (n == 0) throw InputError("matrix coalgebra needs n >= 1");
  Coalgebra c(f, n * n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<DeltaTerm> terms;
      for (std::size_t k = 0; k < n; ++k)
        terms.push_back({static_cast<std::uint32_t>(i * n + k), static_cast<std::uint32_t>(k * n + j), f.one()});
      c.set_delta(i * n + j, std::move(terms));
      if (i == j) c.set_counit(i * n + j, f.one());
      labels.push_back(index_label("e", i, j, n));
    }
  c.set_labels(std::move(labels));
  return c;
}

Coalgebra grouplike_coalgebra(const Field& f, const std::vector<std::string>& labels) {
  if (labels.empty()) throw InputError("grouplike coalgebra needs at least one label");
  Coalgebra c(f, labels.size());
  for (std::uint32_t k = 0; k < labels.size(); ++k) {
    c.set_delta(k, {{k, k, f.one()}});
    c.set_counit(k, f.one());
  }
  c.set_labels(labels);
  return c;
}

Coalgebra trivial_coalgebra(const Field& f) { return grouplike_coalgebra(f, {"1"}); }

Coalgebra cyclic_function_coalgebra(const Field& f, std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  Coalgebra c(f, n);
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<DeltaTerm> terms;
    for (std::size_t h = 0; h < n; ++h)
      terms.push_back({static_cast<std::uint32_t>(h), static_cast<std::uint32_t>((g + n - h) % n), f.one()});
    c.set_delta(g, terms);
    c.set_counit(g, g == 0 ? f.one() : f.zero());
    labels.push_back("d" + std::to_string(g));
  }
  c.set_labels(labels);
  return c;
}

FinAlgebra matrix_algebra(const Field& f, std::size_t n) {
  if (n == 0) throw InputError("matrix algebra needs n >= 1");
  FinAlgebra a(f, n * n);
  Vector unit(n * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = f.one();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        a.set_product(i * n + j, j * n + l, {{static_cast<std::uint32_t>(i * n + l), f.one()}});
  }
  a.set_unit(std::move(unit));
  return a;
}

FinAlgebra field_as_algebra(const Embedding& e) {
  RelativeBasis rb(e);
  const Field& k = e.source();
  const Field& kp = e.target();
  const std::size_t r = rb.degree();
  FinAlgebra a(k, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Vector coords = rb.coordinates(kp.mul(rb.basis()[i], rb.basis()[j]));
      std::vector<ProductTerm> terms;
      for (std::uint32_t l = 0; l < r; ++l) terms.push_back({l, coords[l]});
      a.set_product(i, j, std::move(terms));
    }
  a.set_unit(rb.coordinates(kp.one()));
  return a;
}

Coalgebra dual_field_coalgebra(const Embedding& e) {
  Coalgebra c = dual_coalgebra(field_as_algebra(e), false);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < c.dim(); ++i) labels.push_back(i == 0 ? "1*" : i == 1 ? "y*" : "y" + std::to_string(i) + "*");
  c.set_labels(std::move(labels));
  return c;
}

FinAlgebra dual_algebra(const Coalgebra& c, bool check) {
  if (check)
    if (auto v = validate_coalgebra(c)) throw InputError("dual_algebra: invalid coalgebra: " + v->message);
  const std::size_t n = c.dim();
  std::vector<std::vector<ProductTerm>> table(n * n);
  for (std::uint32_t k = 0; k < n; ++k)
    for (const auto& t : c.delta(k)) table[t.i * n + t.j].push_back({k, t.c});
  FinAlgebra a(c.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.set_product(i, j, std::move(table[i * n + j]));
  a.set_unit(c.counit());
  return a;
}

Coalgebra dual_coalgebra(const FinAlgebra& a, bool check) {
  if (check)
    if (auto v = validate_algebra(a)) throw InputError("dual_coalgebra: invalid algebra: " + v->message);
  const std::size_t n = a.dim();
  std::vector<std::vector<DeltaTerm>> delta(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (const auto& t : a.product(i, j)) delta[t.k].push_back({i, j, t.c});
  Coalgebra c(a.field(), n);
  for (std::size_t k = 0; k < n; ++k) c.set_delta(k, std::move(delta[k]));
  c.set_counit(a.unit());
  return c;
}

Coalgebra direct_sum(const Coalgebra& a, const Coalgebra& b) {
  require_same_field(a.field(), b.field(), "direct_sum");
  const auto shift = static_cast<std::uint32_t>(a.dim());
  Coalgebra c(a.field(), a.dim() + b.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    c.set_delta(k, a.delta(k));
    c.set_counit(k, a.counit()[k]);
  }
  for (std::size_t k = 0; k < b.dim(); ++k) {
    std::vector<DeltaTerm> terms;
    for (const auto& t : b.delta(k)) terms.push_back({t.i + shift, t.j + shift, t.c});
    c.set_delta(shift + k, std::move(terms));
    c.set_counit(shift + k, b.counit()[k]);
  }
  if (!a.labels().empty() || !b.labels().empty()) {
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < a.dim(); ++k) labels.push_back(a.label(k));
    for (std::size_t k = 0; k < b.dim(); ++k) labels.push_back(b.label(k));
    c.set_labels(std::move(labels));
  }
  return c;
}

Coalgebra scalar_extend(const Coalgebra& c, const Embedding& e) {
  require_same_field(c.field(), e.source(), "scalar_extend");
  Coalgebra out(e.target(), c.dim());
  for (std::size_t k = 0; k < c.dim(); ++k) {
    std::vector<DeltaTerm> terms;
    for (const auto& t : c.delta(k)) terms.push_back({t.i, t.j, e(t.c)});
    out.set_delta(k, std::move(terms));
    out.set_counit(k, e(c.counit()[k]));
  }
  out.set_labels(c.labels());
  return out;
}

FinAlgebra scalar_extend(const FinAlgebra& a, const Embedding& e) {
  require_same_field(a.field(), e.source(), "scalar_extend");
  FinAlgebra out(e.target(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      std::vector<ProductTerm> terms;
      for (const auto& t : a.product(i, j)) terms.push_back({t.k, e(t.c)});
      out.set_product(i, j, std::move(terms));
    }
  Vector u;
  for (const auto& x : a.unit()) u.push_back(e(x));
  out.set_unit(std::move(u));
  return out;
}

// ---------------------------------------------------------------------------
// Subcoalgebras

Subspace largest_subcoalgebra(const Coalgebra& c, const Subspace& w) {
  if (w.ambient() != c.dim()) throw InputError("largest_subcoalgebra: W is not a subspace of C");
  require_same_field(c.field(), w.field(), "largest_subcoalgebra");
  const Field& f = c.field();
  const std::size_t n = c.dim();
  Subspace d = w;
  for (std::size_t step = 0; step <= n; ++step) {
    const Matrix phi = d.annihilator();
    if (phi.rows() == 0) return d;
    // x in D and Delta(x) in (D (x) C) cap (C (x) D): rows are linear forms in x.
    Matrix cons(f, phi.rows() * (1 + 2 * n), n);
    std::size_t row = 0;
    for (std::size_t r = 0; r < phi.rows(); ++r, ++row)
      for (std::size_t k = 0; k < n; ++k) cons(row, k) = phi(r, k);
    for (std::size_t r = 0; r < phi.rows(); ++r) {
      const std::size_t left = row, right = row + n;
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& t : c.delta(k)) {
          if (!f.is_zero(phi(r, t.i))) cons(left + t.j, k) = f.add(cons(left + t.j, k), f.mul(t.c, phi(r, t.i)));
          if (!f.is_zero(phi(r, t.j))) cons(right + t.i, k) = f.add(cons(right + t.i, k), f.mul(t.c, phi(r, t.j)));
        }
      row += 2 * n;
    }
    Subspace next = kernel(cons);
    if (next == d) return d;
    d = std::move(next);
  }
  return d;
}

bool is_subcoalgebra(const Coalgebra& c, const Subspace& d) {
  const Field& f = c.field();
  const std::size_t n = c.dim();
  std::vector<Vector> tensor_basis;
  for (std::size_t a = 0; a < d.dim(); ++a)
    for (std::size_t b = 0; b < d.dim(); ++b) {
      Vector v(n * n, f.zero());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v[i * n + j] = f.mul(d.basis()(a, i), d.basis()(b, j));
      tensor_basis.push_back(std::move(v));
    }
  Subspace dd = Subspace::span(f, n * n, tensor_basis);
  for (std::size_t a = 0; a < d.dim(); ++a)
    if (!dd.contains(c.comultiply(d.basis_vector(a)).data())) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Pointedness

bool has_commutative_semisimple_quotient(const FinAlgebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  // two-sided ideal generated by commutators
  EchelonBasis ideal(f, n);
  std::vector<Vector> spanning;
  std::vector<Vector> queue;
  auto offer = [&](Vector v) {
    if (ideal.insert(v)) {
      spanning.push_back(v);
      queue.push_back(std::move(v));
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector ij = a.multiply(a.basis_vector(i), a.basis_vector(j));
      const Vector ji = a.multiply(a.basis_vector(j), a.basis_vector(i));
      for (std::size_t k = 0; k < n; ++k) ij[k] = f.sub(ij[k], ji[k]);
      offer(std::move(ij));
    }
  while (!queue.empty()) {
    Vector v = std::move(queue.back());
    queue.pop_back();
    for (std::size_t k = 0; k < n; ++k) {
      offer(a.multiply(a.basis_vector(k), v));
      offer(a.multiply(v, a.basis_vector(k)));
    }
  }
  if (spanning.empty()) return true;
  // I^m strictly decreases until it vanishes, or stalls at a nonzero idempotent ideal.
  std::vector<Vector> power = spanning;
  while (true) {
    EchelonBasis next(f, n);
    std::vector<Vector> next_span;
    for (const auto& x : power)
      for (const auto& y : spanning) {
        Vector xy = a.multiply(x, y);
        if (next.insert(xy)) next_span.push_back(std::move(xy));
      }
    if (next_span.empty()) return true;
    if (next_span.size() == power.size()) return false;
    power = std::move(next_span);
  }
}

bool is_geometrically_pointed(const Coalgebra& c) {
  const auto kind = c.field().kind();
  if (kind == FieldKind::rational_functions)
    throw InputError("is_geometrically_pointed: supported over finite fields and Q only");
  return has_commutative_semisimple_quotient(dual_algebra(c));
}

std::optional<Violation> check_coalgebra_morphism(const Matrix& pi, const Coalgebra& src, const Coalgebra& dst) {
  if (pi.rows() != dst.dim() || pi.cols() != src.dim()) return Violation{"shape", {}, "projection has the wrong shape"};
  const Field& f = src.field();
  const std::size_t m = dst.dim();
  for (std::size_t k = 0; k < src.dim(); ++k) {
    Matrix lhs(f, m, m);
    for (const auto& t : src.delta(k))
      for (std::size_t a = 0; a < m; ++a) {
        if (f.is_zero(pi(a, t.i))) continue;
        const Scalar ca = f.mul(t.c, pi(a, t.i));
        for (std::size_t b = 0; b < m; ++b)
          if (!f.is_zero(pi(b, t.j))) lhs(a, b) = f.add(lhs(a, b), f.mul(ca, pi(b, t.j)));
      }
    if (!(lhs == dst.comultiply(pi.column(k))))
      return Violation{"morphism-comultiplication", {k}, "(pi(x)pi)Delta != Delta pi on basis element " + src.label(k)};
    Scalar eps = f.zero();
    for (std::size_t a = 0; a < m; ++a) eps = f.add(eps, f.mul(dst.counit()[a], pi(a, k)));
    if (!(eps == src.counit()[k]))
      return Violation{"morphism-counit", {k}, "eps pi != eps on basis element " + src.label(k)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// RelativeBasis

RelativeBasis::RelativeBasis(Embedding e) : e_(std::move(e)) {
  const Field& k = e_.source();
  const Field& kp = e_.target();
  if (!k.is_finite() || !kp.is_finite()) throw InputError("relative basis needs a finite extension of finite fields");
  const std::size_t n = k.degree(), np = kp.degree();
  const std::size_t r = np / n;
  Field prime = standard_finite_field(k.characteristic(), 1);
  Scalar power = kp.one();
  for (std::size_t i = 0; i < r; ++i) {
    basis_.push_back(power);
    power = kp.mul(power, kp.generator());
  }
  Matrix phi(prime, np, np);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::uint32_t> unit(n, 0);
      unit[s] = 1;
      const auto res = kp.residues(kp.mul(basis_[a], e_(k.from_residues(unit))));
      for (std::size_t row = 0; row < np; ++row) phi(row, a * n + s) = prime.element(res[row]);
    }
  auto inv = inverse(phi);
  if (!inv) throw InputError("relative basis: powers of the generator are dependent");
  to_coords_ = std::move(*inv);
}

Vector RelativeBasis::coordinates(const Scalar& z) const {
  const Field& k = e_.source();
  const Field& kp = e_.target();
  const Field& prime = to_coords_.field();
  const auto res = kp.residues(z);
  Vector v;
  for (auto x : res) v.push_back(prime.element(x));
  const Vector c = to_coords_ * v;
  const std::size_t n = k.degree();
  Vector out;
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    std::vector<std::uint32_t> digits(n);
    for (std::size_t s = 0; s < n; ++s) digits[s] = c[a * n + s].code();
    out.push_back(k.from_residues(digits));
  }
  return out;
}

}  // namespace cogebra
