#include "cogebra/coefficients.hpp"

#include <mutex>

#include "cogebra/detail/dense.hpp"

namespace cogebra {

struct CoefficientSpan::Impl {
  Field field;
  PresentedAlgebra presentation;
  std::vector<Word> words;
  std::vector<std::size_t> dims;
  std::size_t length = 0;

  virtual ~Impl() = default;
  virtual Vector coordinates_of(const Relation& combination) const = 0;
  virtual Scalar entry(std::size_t word, std::size_t rep, std::size_t i, std::size_t j) const = 0;
  virtual FinAlgebra image_algebra() const = 0;
};

namespace {

template <class Ops>
struct SpanImpl final : CoefficientSpan::Impl {
  using E = typename Ops::E;
  using Flat = detail::Flat<Ops>;

  Ops ops;
  std::vector<std::size_t> offsets;  // start of each block in the long vector
  std::size_t width = 0;
  std::vector<std::vector<Flat>> mats;  // [rep][symbol]
  std::vector<Flat> kept;               // long vectors of the kept words
  std::vector<std::size_t> parent;      // kept index of the prefix, npos for the empty word
  std::vector<std::uint32_t> last;      // last symbol
  std::vector<std::size_t> pivots;      // echelon pivots, one per kept word

  mutable std::once_flag inverse_once;
  mutable std::vector<Flat> minv;  // N x N, rows: coordinates = minv * x_P

  explicit SpanImpl(Ops o) : ops(std::move(o)) {}

  Flat multiply_right(const Flat& v, std::uint32_t s) const {
    Flat out(width, ops.zero());
    for (std::size_t r = 0; r < dims.size(); ++r) {
      const std::size_t d = dims[r];
      if (d) detail::matmul(ops, v.data() + offsets[r], mats[r][s].data(), out.data() + offsets[r], d);
    }
    return out;
  }

  Flat evaluate(const Word& w) const {
    Flat v(width, ops.zero());
    for (std::size_t r = 0; r < dims.size(); ++r)
      for (std::size_t i = 0; i < dims[r]; ++i) v[offsets[r] + i * dims[r] + i] = ops.one();
    for (auto s : w) v = multiply_right(v, s);
    return v;
  }

  void build(const std::vector<Representation>& reps, const SpanOptions& opt) {
    for (const auto& r : reps) {
      if (r.matrices.size() != presentation.symbol_count())
        throw InputError("coefficient span: representation does not match the presentation");
      offsets.push_back(width);
      dims.push_back(r.dim);
      width += r.dim * r.dim;
      std::vector<Flat> per;
      for (const auto& m : r.matrices) {
        if (m.rows() != r.dim || m.cols() != r.dim) throw InputError("coefficient span: matrix shape mismatch");
        if (r.dim && !(m.field() == field)) throw FieldMismatch("coefficient span: representation over another field");
        per.push_back(detail::flatten(ops, m));
      }
      mats.push_back(std::move(per));
    }
    std::vector<std::uint32_t> alphabet;
    for (std::size_t g = 0; g < presentation.generator_count(); ++g) {
      alphabet.push_back(static_cast<std::uint32_t>(presentation.generator_symbol(g)));
      if (opt.include_inverses && presentation.invertible(g))
        alphabet.push_back(static_cast<std::uint32_t>(presentation.inverse_symbol(g)));
    }
    if (width == 0) return;
    detail::Echelon<Ops> ech(ops, width);
    auto try_keep = [&](Flat v, Word w, std::size_t from, std::uint32_t s) {
      if (!ech.insert(v)) return;
      pivots.push_back(ech.pivots().back());
      kept.push_back(std::move(v));
      length = std::max(length, w.size());
      words.push_back(std::move(w));
      parent.push_back(from);
      last.push_back(s);
    };
    try_keep(evaluate({}), {}, PresentedAlgebra::npos, 0);
    for (std::size_t i = 0; i < kept.size(); ++i)
      for (auto s : alphabet) {
        if (kept.size() == width) break;
        Word w = words[i];
        w.push_back(s);
        try_keep(multiply_right(kept[i], s), std::move(w), i, s);
      }
  }

  void ensure_inverse() const {
    std::call_once(inverse_once, [&] {
      // M(a, b) = kept[b][pivot a]; invert by Gauss-Jordan
      const std::size_t n = kept.size();
      std::vector<Flat> a(n, Flat(n, ops.zero()));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = kept[c][pivots[r]];
      std::vector<Flat> inv(n, Flat(n, ops.zero()));
      for (std::size_t i = 0; i < n; ++i) inv[i][i] = ops.one();
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && ops.is_zero(a[p][c])) ++p;
        if (p == n) throw std::logic_error("coefficient span: singular evaluation matrix");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const E s = ops.inv(a[c][c]);
        for (std::size_t j = 0; j < n; ++j) {
          if (!ops.is_zero(a[c][j])) a[c][j] = ops.mul(a[c][j], s);
          if (!ops.is_zero(inv[c][j])) inv[c][j] = ops.mul(inv[c][j], s);
        }
        for (std::size_t r = 0; r < n; ++r) {
          if (r == c || ops.is_zero(a[r][c])) continue;
          const E f = a[r][c];
          for (std::size_t j = 0; j < n; ++j) {
            if (!ops.is_zero(a[c][j])) a[r][j] = ops.sub(a[r][j], ops.mul(f, a[c][j]));
            if (!ops.is_zero(inv[c][j])) inv[r][j] = ops.sub(inv[r][j], ops.mul(f, inv[c][j]));
          }
        }
      }
      minv = std::move(inv);
    });
  }

  Flat coords(const Flat& x) const {
    ensure_inverse();
    const std::size_t n = kept.size();
    Flat out(n, ops.zero());
    for (std::size_t r = 0; r < n; ++r) {
      E acc = ops.zero();
      for (std::size_t c = 0; c < n; ++c) {
        const E& xp = x[pivots[c]];
        if (!ops.is_zero(xp) && !ops.is_zero(minv[r][c])) acc = ops.add(acc, ops.mul(minv[r][c], xp));
      }
      out[r] = acc;
    }
    return out;
  }

  Vector coordinates_of(const Relation& combination) const override {
    Flat x(width, ops.zero());
    for (const auto& t : combination) {
      const E c = ops.from(t.coeff);
      if (ops.is_zero(c)) continue;
      const Flat v = evaluate(t.word);
      for (std::size_t i = 0; i < width; ++i)
        if (!ops.is_zero(v[i])) x[i] = ops.add(x[i], ops.mul(c, v[i]));
    }
    // a single kept word needs no solve
    if (combination.size() == 1 && ops.is_zero(ops.sub(ops.from(combination[0].coeff), ops.one())))
      for (std::size_t k = 0; k < words.size(); ++k)
        if (words[k] == combination[0].word) {
          Vector out(words.size(), field.zero());
          out[k] = field.one();
          return out;
        }
    Vector out;
    for (const auto& e : coords(x)) out.push_back(ops.to(e));
    return out;
  }

  Scalar entry(std::size_t word, std::size_t rep, std::size_t i, std::size_t j) const override {
    return ops.to(kept[word][offsets[rep] + i * dims[rep] + j]);
  }

  FinAlgebra image_algebra() const override {
    const std::size_t n = kept.size();
    FinAlgebra alg(field, n);
    if (n == 0) return alg;
    // right multiplication by each symbol used in the kept words, in the basis K
    std::vector<std::vector<Flat>> right(presentation.symbol_count());
    auto right_of = [&](std::uint32_t s) -> const std::vector<Flat>& {
      auto& r = right[s];
      if (r.empty())
        for (std::size_t k = 0; k < n; ++k) r.push_back(coords(multiply_right(kept[k], s)));
      return r;
    };
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<Flat> row(n);  // coordinates of K_a K_b
      for (std::size_t b = 0; b < n; ++b) {
        if (parent[b] == PresentedAlgebra::npos) {
          row[b].assign(n, ops.zero());
          row[b][a] = ops.one();
        } else {
          const Flat& prev = row[parent[b]];
          const auto& rs = right_of(last[b]);
          Flat acc(n, ops.zero());
          for (std::size_t k = 0; k < n; ++k) {
            if (ops.is_zero(prev[k])) continue;
            for (std::size_t l = 0; l < n; ++l)
              if (!ops.is_zero(rs[k][l])) acc[l] = ops.add(acc[l], ops.mul(prev[k], rs[k][l]));
          }
          row[b] = std::move(acc);
        }
        std::vector<ProductTerm> terms;
        for (std::uint32_t l = 0; l < n; ++l)
          if (!ops.is_zero(row[b][l])) terms.push_back({l, ops.to(row[b][l])});
        alg.set_product(a, b, std::move(terms));
      }
    }
    Vector unit(n, field.zero());
    unit[0] = field.one();  // the empty word is kept first
    alg.set_unit(std::move(unit));
    return alg;
  }
};

}  // namespace

CoefficientSpan::CoefficientSpan(const PresentedAlgebra& p, const std::vector<Representation>& reps, SpanOptions opt) {
  auto fill = [&](auto impl) {
    impl->field = p.field();
    impl->presentation = p;
    impl->build(reps, opt);
    impl_ = std::move(impl);
  };
  if (p.field().is_finite())
    fill(std::make_shared<SpanImpl<detail::CodeOps>>(detail::CodeOps(p.field())));
  else
    fill(std::make_shared<SpanImpl<detail::ScalarOps>>(detail::ScalarOps(p.field())));
}

const Field& CoefficientSpan::field() const { return impl_->field; }
const PresentedAlgebra& CoefficientSpan::presentation() const { return impl_->presentation; }
std::size_t CoefficientSpan::dim() const { return impl_ ? impl_->words.size() : 0; }
std::size_t CoefficientSpan::stabilization_length() const { return impl_->length; }
const std::vector<Word>& CoefficientSpan::words() const { return impl_->words; }
std::size_t CoefficientSpan::representation_count() const { return impl_->dims.size(); }
std::size_t CoefficientSpan::representation_dim(std::size_t r) const { return impl_->dims.at(r); }

Vector CoefficientSpan::coordinates(const Word& w) const { return impl_->coordinates_of({{field().one(), w}}); }
Vector CoefficientSpan::coordinates(const Relation& combination) const { return impl_->coordinates_of(combination); }

FinAlgebra CoefficientSpan::image_algebra() const { return impl_->image_algebra(); }

Coalgebra CoefficientSpan::carrier() const {
  Coalgebra c = dual_coalgebra(image_algebra(), false);
  std::vector<std::string> labels;
  for (const auto& w : words()) labels.push_back("[" + presentation().format_word(w) + "]*");
  c.set_labels(std::move(labels));
  return c;
}

Vector CoefficientSpan::coefficient_functional(std::size_t rep, std::size_t i, std::size_t j) const {
  if (rep >= representation_count() || i >= representation_dim(rep) || j >= representation_dim(rep))
    throw InputError("coefficient_functional: index out of range");
  Vector out;
  for (std::size_t k = 0; k < dim(); ++k) out.push_back(impl_->entry(k, rep, i, j));
  return out;
}

Matrix span_inclusion(const CoefficientSpan& small, const CoefficientSpan& large) {
  Matrix m(small.field(), large.dim(), small.dim());
  for (std::size_t b = 0; b < large.dim(); ++b) {
    const Vector c = small.coordinates(large.words()[b]);
    for (std::size_t a = 0; a < small.dim(); ++a) m(b, a) = c[a];
  }
  return m;
}

}  // namespace cogebra
