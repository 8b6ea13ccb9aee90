#include "cogebra/presented.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "cogebra/detail/dense.hpp"

namespace cogebra {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("COGEBRA_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ULL;
}

// ---------------------------------------------------------------------------
// PresentedAlgebra

namespace {

Relation normalize_relation(const Field& f, Relation r) {
  std::sort(r.begin(), r.end(), [](const Term& a, const Term& b) {
    return a.word.size() != b.word.size() ? a.word.size() < b.word.size() : a.word < b.word;
  });
  Relation out;
  for (auto& t : r) {
    if (!out.empty() && out.back().word == t.word)
      out.back().coeff = f.add(out.back().coeff, t.coeff);
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [&](const Term& t) { return f.is_zero(t.coeff); });
  return out;
}

std::string factor_letter(std::size_t i) {
  static const std::string letters = "pqrsuvwxyz";
  if (i < letters.size()) return std::string(1, letters[i]);
  return "f" + std::to_string(i) + "_";
}

}  // namespace

std::size_t PresentedAlgebra::add_generator(std::string name, bool invertible) {
  const std::size_t g = generators_.size();
  generators_.push_back(symbols_.size());
  symbols_.push_back({name, g, false});
  inverse_of_.push_back(npos);
  if (invertible) {
    const auto s = static_cast<std::uint32_t>(symbols_.size() - 1);
    const auto inv = static_cast<std::uint32_t>(symbols_.size());
    inverse_of_[g] = inv;
    symbols_.push_back({name + "^-1", g, true});
    relations_.push_back(normalize_relation(field_, {{field_.one(), {s, inv}}, {field_.neg(field_.one()), {}}}));
    relations_.push_back(normalize_relation(field_, {{field_.one(), {inv, s}}, {field_.neg(field_.one()), {}}}));
  }
  return g;
}

void PresentedAlgebra::add_relation(Relation r) {
  for (const auto& t : r)
    for (auto s : t.word)
      if (s >= symbols_.size()) throw InputError("relation uses an undeclared symbol");
  r = normalize_relation(field_, std::move(r));
  if (!r.empty()) relations_.push_back(std::move(r));
}

std::string PresentedAlgebra::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += "*";
    out += symbols_.at(w[i]).name;
  }
  return out;
}

std::string PresentedAlgebra::format_relation(const Relation& r) const {
  if (r.empty()) return "0";
  std::string out;
  for (const auto& t : r) {
    std::string c = field_.format(t.coeff);
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (t.word.empty())
      out += c;
    else if (c == "1")
      out += format_word(t.word);
    else
      out += (c.find_first_of("+-/ ") == std::string::npos ? c : "(" + c + ")") + "*" + format_word(t.word);
  }
  return out;
}

PresentedAlgebra free_product(const std::vector<FinAlgebra>& factors) {
  if (factors.empty()) throw InputError("free_product needs at least one factor");
  const Field& f = factors[0].field();
  PresentedAlgebra p(f);
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    const FinAlgebra& a = factors[fi];
    if (!(a.field() == f)) throw FieldMismatch("free_product: factors over different fields");
    if (auto v = validate_algebra(a)) throw InputError("free_product: invalid factor: " + v->message);
    const Vector& u = a.unit();
    std::size_t k0 = PresentedAlgebra::npos;
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (!f.is_zero(u[k])) k0 = k;
    if (k0 == PresentedAlgebra::npos) throw InputError("free_product: factor has zero unit");
    FactorBlock block{a, k0, std::vector<std::size_t>(a.dim(), PresentedAlgebra::npos)};
    const std::string letter = factor_letter(fi);
    const bool single = a.dim() == 2;
    std::size_t local = 0;
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (k == k0) continue;
      ++local;
      block.generator_of[k] = p.add_generator(single ? letter : letter + std::to_string(local));
    }
    // e_k0 = (1 - sum_{k != k0} u_k e_k) / u_k0
    const Scalar inv_u0 = f.inv(u[k0]);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (i == k0) continue;
      for (std::size_t j = 0; j < a.dim(); ++j) {
        if (j == k0) continue;
        const auto si = static_cast<std::uint32_t>(p.generator_symbol(block.generator_of[i]));
        const auto sj = static_cast<std::uint32_t>(p.generator_symbol(block.generator_of[j]));
        Relation rel{{f.one(), {si, sj}}};
        const Scalar c0 = a.product_coefficient(i, j, k0);
        for (std::size_t k = 0; k < a.dim(); ++k) {
          if (k == k0) continue;
          Scalar c = f.sub(a.product_coefficient(i, j, k), f.mul(f.mul(c0, u[k]), inv_u0));
          const auto sk = static_cast<std::uint32_t>(p.generator_symbol(block.generator_of[k]));
          rel.push_back({f.neg(c), {sk}});
        }
        rel.push_back({f.neg(f.mul(c0, inv_u0)), {}});
        p.add_relation(std::move(rel));
      }
    }
    p.factors_.push_back(std::move(block));
  }
  return p;
}

PresentedAlgebra presentation_of(const FinAlgebra& a) { return free_product({a}); }

PresentedAlgebra free_algebra(std::size_t m, const Field& f) {
  PresentedAlgebra p(f);
  for (std::size_t i = 0; i < m; ++i) p.add_generator(m == 1 ? "x" : "x" + std::to_string(i + 1));
  return p;
}

// ---------------------------------------------------------------------------
// Representations

Representation make_representation(const PresentedAlgebra& p, std::vector<Matrix> generator_matrices, std::size_t dim) {
  if (generator_matrices.size() != p.generator_count())
    throw InputError("representation: expected " + std::to_string(p.generator_count()) + " generator matrices");
  Representation r;
  r.dim = generator_matrices.empty() ? (dim == PresentedAlgebra::npos ? 0 : dim) : generator_matrices[0].rows();
  r.matrices.resize(p.symbol_count());
  for (std::size_t g = 0; g < p.generator_count(); ++g) {
    Matrix& m = generator_matrices[g];
    if (!m.is_square() || m.rows() != r.dim) throw InputError("representation: generator matrices must be square of equal size");
    if (!(m.field() == p.field())) throw FieldMismatch("representation: matrix over the wrong field");
    if (p.invertible(g)) {
      auto inv = inverse(m);
      if (!inv) throw InputError("representation: invertible generator " + p.symbols()[p.generator_symbol(g)].name + " maps to a singular matrix");
      r.matrices[p.inverse_symbol(g)] = std::move(*inv);
    }
    r.matrices[p.generator_symbol(g)] = std::move(m);
  }
  return r;
}

Representation scalar_extend(const Representation& r, const Embedding& e) {
  Representation out{r.dim, {}};
  for (const auto& m : r.matrices) out.matrices.push_back(scalar_extend(m, e));
  return out;
}

Matrix evaluate_word(const Representation& r, const Word& w, const Field& f) {
  Matrix out = Matrix::identity(f, r.dim);
  for (auto s : w) out = out * r.matrices.at(s);
  return out;
}

Matrix evaluate_relation(const Representation& r, const Relation& rel, const Field& f) {
  Matrix out(f, r.dim, r.dim);
  for (const auto& t : rel) out = out + evaluate_word(r, t.word, f).scaled(t.coeff);
  return out;
}

bool satisfies_relations(const PresentedAlgebra& p, const Representation& r) {
  if (r.matrices.size() != p.symbol_count()) return false;
  const Field& f = p.field();
  for (const auto& m : r.matrices)
    if (m.rows() != r.dim || m.cols() != r.dim || (r.dim && !(m.field() == f))) return false;
  for (std::size_t g = 0; g < p.generator_count(); ++g)
    if (p.invertible(g) &&
        !(r.matrices[p.generator_symbol(g)] * r.matrices[p.inverse_symbol(g)] == Matrix::identity(f, r.dim)))
      return false;
  for (const auto& rel : p.relations())
    if (!evaluate_relation(r, rel, f).is_zero()) return false;
  return true;
}

bool representation_less(const Representation& a, const Representation& b, std::size_t generators) {
  for (std::size_t g = 0; g < generators && g < a.matrices.size(); ++g) {
    const auto& x = a.matrices[g].data();
    const auto& y = b.matrices[g].data();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].code() != y[i].code()) return x[i].code() < y[i].code();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

using detail::CodeOps;
using Flat = detail::Flat<CodeOps>;

bool invert_flat(const CodeOps& ops, const Flat& m, Flat& out, std::size_t d) {
  Flat a = m;
  out = detail::identity_flat(ops, d);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && a[piv * d + c] == 0) ++piv;
    if (piv == d) return false;
    if (piv != c)
      for (std::size_t j = 0; j < d; ++j) {
        std::swap(a[piv * d + j], a[c * d + j]);
        std::swap(out[piv * d + j], out[c * d + j]);
      }
    const auto s = ops.inv(a[c * d + c]);
    for (std::size_t j = 0; j < d; ++j) {
      a[c * d + j] = ops.mul(a[c * d + j], s);
      out[c * d + j] = ops.mul(out[c * d + j], s);
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || a[i * d + c] == 0) continue;
      const auto factor = a[i * d + c];
      for (std::size_t j = 0; j < d; ++j) {
        a[i * d + j] = ops.sub(a[i * d + j], ops.mul(factor, a[c * d + j]));
        out[i * d + j] = ops.sub(out[i * d + j], ops.mul(factor, out[c * d + j]));
      }
    }
  }
  return true;
}

struct Enumerator {
  const PresentedAlgebra& p;
  std::size_t d;
  std::uint64_t budget;
  CodeOps ops;
  std::uint64_t q;
  std::uint64_t work = 0;

  struct Candidate {
    Flat x, x_inv;
  };
  struct Stage {
    std::vector<std::size_t> affine;     // relation indices affine in this generator
    std::vector<std::size_t> checked;    // relation indices checked per candidate
    bool self_only = true;               // no other generator appears
    bool cached = false;
    std::vector<Candidate> cache;
  };

  std::vector<Stage> stages;
  std::vector<Flat> assignment;  // per symbol
  std::vector<Representation> out;

  Enumerator(const PresentedAlgebra& pa, std::size_t dim, std::uint64_t b)
      : p(pa), d(dim), budget(b), ops(pa.field()), q(pa.field().size()) {}

  void charge(std::uint64_t n) {
    work += n;
    if (work > budget) {
      const double naive = std::pow(static_cast<double>(q), static_cast<double>(p.generator_count() * d * d));
      throw BudgetExceeded("representation enumeration (naive tuple count " + std::to_string(naive) + ")",
                           static_cast<double>(work), budget);
    }
  }

  Flat eval_word(const Word& w, std::size_t from, std::size_t to) const {
    Flat acc = detail::identity_flat(ops, d);
    Flat tmp(d * d);
    for (std::size_t i = from; i < to; ++i) {
      detail::matmul(ops, acc.data(), assignment[w[i]].data(), tmp.data(), d);
      acc.swap(tmp);
    }
    return acc;
  }

  bool relation_holds(const Relation& rel) const {
    Flat sum(d * d, 0);
    for (const auto& t : rel) {
      const Flat w = eval_word(t.word, 0, t.word.size());
      const auto c = t.coeff.code();
      for (std::size_t i = 0; i < d * d; ++i) sum[i] = ops.add(sum[i], ops.mul(c, w[i]));
    }
    return std::all_of(sum.begin(), sum.end(), [](auto x) { return x == 0; });
  }

  void prepare() {
    const std::size_t g = p.generator_count();
    stages.assign(g, {});
    assignment.assign(p.symbol_count(), Flat{});
    const auto& rels = p.relations();
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      std::size_t owner = 0;
      bool any = false;
      for (const auto& t : rels[ri])
        for (auto s : t.word) {
          owner = std::max(owner, p.symbols()[s].generator);
          any = true;
        }
      if (!any) {
        // constant relation: nonzero constants admit no representation of positive dimension
        if (d > 0 && !rels[ri].empty()) stages.clear();
        if (stages.empty()) return;
        continue;
      }
      Stage& st = stages[owner];
      const std::size_t gs = p.generator_symbol(owner);
      bool affine = true;
      for (const auto& t : rels[ri]) {
        std::size_t hits = 0;
        for (auto s : t.word) {
          if (p.symbols()[s].generator != owner) st.self_only = false;
          if (s == gs) ++hits;
          if (p.symbols()[s].generator == owner && s != gs) affine = false;
        }
        if (hits > 1) affine = false;
      }
      (affine ? st.affine : st.checked).push_back(ri);
    }
  }

  // Candidate matrices for generator t given the current assignment of earlier ones.
  std::vector<Candidate> candidates(std::size_t t) {
    Stage& st = stages[t];
    if (st.cached) return st.cache;
    const Field& f = p.field();
    const std::size_t dd = d * d;
    const std::size_t gs = p.generator_symbol(t);
    std::vector<Flat> points;
    if (!st.affine.empty()) {
      Matrix sys(f, st.affine.size() * dd, dd);
      Vector rhs(st.affine.size() * dd, f.zero());
      for (std::size_t a = 0; a < st.affine.size(); ++a) {
        const std::size_t base = a * dd;
        for (const auto& term : p.relations()[st.affine[a]]) {
          const auto c = term.coeff.code();
          auto pos = std::find(term.word.begin(), term.word.end(), static_cast<std::uint32_t>(gs));
          if (pos == term.word.end()) {
            const Flat w = eval_word(term.word, 0, term.word.size());
            for (std::size_t i = 0; i < dd; ++i)
              rhs[base + i] = Scalar(ops.sub(rhs[base + i].code(), ops.mul(c, w[i])));
            continue;
          }
          const std::size_t at = static_cast<std::size_t>(pos - term.word.begin());
          const Flat left = eval_word(term.word, 0, at);
          const Flat right = eval_word(term.word, at + 1, term.word.size());
          // (A X B)_{rs} = sum_{ij} A_ri X_ij B_js
          for (std::size_t r = 0; r < d; ++r)
            for (std::size_t s = 0; s < d; ++s)
              for (std::size_t i = 0; i < d; ++i) {
                const auto ari = ops.mul(c, left[r * d + i]);
                if (ari == 0) continue;
                for (std::size_t j = 0; j < d; ++j) {
                  const auto v = ops.mul(ari, right[j * d + s]);
                  if (v == 0) continue;
                  Scalar& cell = sys(base + r * d + s, i * d + j);
                  cell = Scalar(ops.add(cell.code(), v));
                }
              }
        }
      }
      auto sol = solve_affine(sys, rhs);
      if (sol) {
        const std::size_t k = sol->directions.size();
        Flat base_point;
        for (const auto& x : sol->particular) base_point.push_back(x.code());
        std::vector<std::uint32_t> coeff(k, 0);
        while (true) {
          charge(1);
          Flat x = base_point;
          for (std::size_t i = 0; i < k; ++i) {
            if (coeff[i] == 0) continue;
            for (std::size_t j = 0; j < dd; ++j)
              x[j] = ops.add(x[j], ops.mul(coeff[i], sol->directions[i][j].code()));
          }
          points.push_back(std::move(x));
          std::size_t i = k;
          while (i > 0 && ++coeff[i - 1] == q) coeff[--i] = 0;
          if (i == 0) break;
        }
      }
    } else {
      Flat x(dd, 0);
      while (true) {
        charge(1);
        points.push_back(x);
        std::size_t i = dd;
        while (i > 0 && ++x[i - 1] == q) x[--i] = 0;
        if (i == 0) break;
      }
    }
    std::vector<Candidate> result;
    const std::size_t inv = p.inverse_symbol(t);
    for (auto& x : points) {
      Candidate c{std::move(x), {}};
      if (inv != PresentedAlgebra::npos && !invert_flat(ops, c.x, c.x_inv, d)) continue;
      assignment[gs] = c.x;
      if (inv != PresentedAlgebra::npos) assignment[inv] = c.x_inv;
      bool ok = true;
      for (auto ri : st.checked)
        if (!relation_holds(p.relations()[ri])) {
          ok = false;
          break;
        }
      if (ok) result.push_back(std::move(c));
    }
    if (st.self_only) {
      st.cached = true;
      st.cache = result;
    }
    return result;
  }

  void recurse(std::size_t t) {
    if (t == p.generator_count()) {
      charge(1);
      Representation r;
      r.dim = d;
      for (const auto& m : assignment) r.matrices.push_back(detail::unflatten(ops, p.field(), m, d, d));
      out.push_back(std::move(r));
      return;
    }
    const auto cands = candidates(t);
    const std::size_t gs = p.generator_symbol(t);
    const std::size_t inv = p.inverse_symbol(t);
    for (const auto& c : cands) {
      charge(1);
      assignment[gs] = c.x;
      if (inv != PresentedAlgebra::npos) assignment[inv] = c.x_inv;
      recurse(t + 1);
    }
  }
};

}  // namespace

std::vector<Representation> enumerate_representations(const PresentedAlgebra& p, std::size_t d,
                                                       const EnumerationOptions& opt) {
  if (!p.field().is_finite()) throw InputError("representation enumeration needs a finite field; supply representations instead");
  if (d == 0) throw InputError("representation enumeration needs d >= 1");
  Enumerator e(p, d, opt.budget);
  e.prepare();
  if (e.stages.empty() && p.generator_count() > 0) return {};
  if (p.generator_count() == 0) {
    for (const auto& rel : p.relations())
      if (!rel.empty()) return {};
    return {Representation{d, {}}};
  }
  e.recurse(0);
  std::sort(e.out.begin(), e.out.end(), [&](const Representation& a, const Representation& b) {
    for (std::size_t g = 0; g < p.generator_count(); ++g) {
      const auto& x = a.matrices[p.generator_symbol(g)].data();
      const auto& y = b.matrices[p.generator_symbol(g)].data();
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i].code() != y[i].code()) return x[i].code() < y[i].code();
    }
    return false;
  });
  return std::move(e.out);
}

// ---------------------------------------------------------------------------
// Invariant subspaces

Subspace spin(const std::vector<Matrix>& gens, const Vector& v) {
  if (gens.empty()) {
    throw InputError("spin needs at least one matrix (use the span of v directly)");
  }
  const Field& f = gens[0].field();
  const std::size_t n = v.size();
  EchelonBasis basis(f, n);
  std::vector<Vector> spanning;
  std::vector<Vector> queue;
  if (basis.insert(v)) queue.push_back(v), spanning.push_back(v);
  while (!queue.empty()) {
    Vector x = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : gens) {
      Vector y = g * x;
      if (basis.insert(y)) {
        spanning.push_back(y);
        queue.push_back(std::move(y));
      }
      if (basis.rank() == n) return Subspace::full(f, n);
    }
  }
  return Subspace::span(f, n, spanning);
}

namespace {

std::vector<Matrix> transposes(const std::vector<Matrix>& gens) {
  std::vector<Matrix> out;
  for (const auto& g : gens) out.push_back(g.transpose());
  return out;
}

// Words in the matrices up to closure: a basis of the generated algebra.
std::vector<Matrix> generated_algebra(const std::vector<Matrix>& gens, std::size_t dim) {
  const Field& f = gens[0].field();
  EchelonBasis basis(f, dim * dim);
  std::vector<Matrix> kept{Matrix::identity(f, dim)};
  basis.insert(kept[0].data());
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (const auto& g : gens) {
      Matrix w = kept[i] * g;
      if (basis.insert(w.data())) kept.push_back(std::move(w));
    }
  return kept;
}

}  // namespace

std::optional<Subspace> find_invariant_subspace(const std::vector<Matrix>& gens, std::size_t dim, std::uint64_t budget) {
  if (dim <= 1) return std::nullopt;
  if (gens.empty()) {
    throw InputError("find_invariant_subspace: no matrices (every subspace is invariant)");
  }
  const Field& f = gens[0].field();
  if (f.is_finite()) {
    const std::uint64_t q = f.size();
    double lines = 0;
    for (std::size_t p = 0; p < dim; ++p) lines += std::pow(static_cast<double>(q), static_cast<double>(dim - 1 - p));
    if (lines > static_cast<double>(budget)) throw BudgetExceeded("invariant-subspace search over lines", lines, budget);
    for (std::size_t p = 0; p < dim; ++p) {
      std::vector<std::uint32_t> tail(dim - 1 - p, 0);
      while (true) {
        Vector v(dim, f.zero());
        v[p] = f.one();
        for (std::size_t i = 0; i < tail.size(); ++i) v[p + 1 + i] = f.element(tail[i]);
        Subspace s = spin(gens, v);
        if (s.dim() < dim) return s;
        std::size_t i = tail.size();
        while (i > 0 && ++tail[i - 1] == q) tail[--i] = 0;
        if (i == 0) break;
      }
    }
    return std::nullopt;
  }
  // Burnside: the generated algebra is all of M_dim exactly when the action is irreducible
  // over the algebraic closure, which implies irreducible here.
  const auto algebra = generated_algebra(gens, dim);
  if (algebra.size() == dim * dim) return std::nullopt;
  const auto gens_t = transposes(gens);
  for (const auto& a : algebra)
    for (long lambda : {0L, 1L, -1L, 2L, -2L}) {
      const Matrix b = a - Matrix::identity(f, dim).scaled(f.from_int(lambda));
      const Subspace ker = kernel(b);
      if (ker.dim() == 0 || ker.dim() == dim) continue;
      for (std::size_t i = 0; i < ker.dim(); ++i) {
        Subspace s = spin(gens, ker.basis_vector(i));
        if (s.dim() < dim) return s;
      }
      const Subspace ker_t = kernel(b.transpose());
      for (std::size_t i = 0; i < ker_t.dim(); ++i) {
        Subspace s = spin(gens_t, ker_t.basis_vector(i));
        if (s.dim() < dim) return kernel(s.basis());
      }
      // Norton: a nullity-one element whose kernel and cokernel vectors both spin fully
      if (ker.dim() == 1) return std::nullopt;
    }
  throw Undecided("irreducibility over an infinite field not settled by Burnside or Norton tests");
}

bool is_simple(const Representation& r, std::uint64_t budget) {
  if (r.dim == 0) return false;
  if (r.dim == 1) return true;
  if (r.matrices.empty()) return false;
  return !find_invariant_subspace(r.matrices, r.dim, budget).has_value();
}

std::vector<Matrix> intertwiners(const Representation& r, const Representation& s, const Field& f) {
  if (r.matrices.size() != s.matrices.size()) throw InputError("intertwiners: representations of different presentations");
  const std::size_t d = r.dim, e = s.dim;
  // unknown T is e x d, vec row-major: vec(T R) = (I_e (x) R^T) vec T, vec(S T) = (S (x) I_d) vec T
  Matrix sys(f, r.matrices.size() * e * d, e * d);
  for (std::size_t g = 0; g < r.matrices.size(); ++g) {
    const Matrix block = kronecker(Matrix::identity(f, e), r.matrices[g].transpose()) -
                         kronecker(s.matrices[g], Matrix::identity(f, d));
    for (std::size_t i = 0; i < e * d; ++i)
      for (std::size_t j = 0; j < e * d; ++j) sys(g * e * d + i, j) = block(i, j);
  }
  const Subspace k = kernel(sys);
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < k.dim(); ++i) {
    Matrix t(f, e, d);
    for (std::size_t a = 0; a < e; ++a)
      for (std::size_t b = 0; b < d; ++b) t(a, b) = k.basis()(i, a * d + b);
    out.push_back(std::move(t));
  }
  return out;
}

bool are_isomorphic(const Representation& r, const Representation& s, std::uint64_t budget) {
  if (r.dim != s.dim) return false;
  if (r.matrices.size() != s.matrices.size()) throw InputError("are_isomorphic: representations of different presentations");
  if (r.dim == 0) return true;
  if (r.matrices.empty()) return true;
  const Field& f = r.matrices[0].field();
  const auto ts = intertwiners(r, s, f);
  if (ts.empty()) return false;
  for (const auto& t : ts)
    if (!f.is_zero(determinant(t))) return true;
  const std::size_t k = ts.size();
  const std::size_t d = r.dim;
  // det(sum a_i T_i) has degree <= d in each a_i: a grid of d+1 values per
  // coordinate meets its nonvanishing locus unless it is identically zero.
  std::vector<Scalar> values;
  double points = 0;
  if (f.is_finite() && std::pow(static_cast<double>(f.size()), static_cast<double>(k)) <= static_cast<double>(budget)) {
    for (std::uint32_t c = 0; c < f.size(); ++c) values.push_back(f.element(c));
  } else if (!f.is_finite() || f.size() > d) {
    for (std::size_t c = 0; c <= d; ++c) values.push_back(f.is_finite() ? f.element(static_cast<std::uint32_t>(c)) : f.from_int(static_cast<long long>(c)));
    points = std::pow(static_cast<double>(values.size()), static_cast<double>(k));
    if (points > static_cast<double>(budget)) throw BudgetExceeded("intertwiner search grid", points, budget);
  } else {
    throw BudgetExceeded("intertwiner search", std::pow(static_cast<double>(f.size()), static_cast<double>(k)), budget);
  }
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    Matrix t(f, d, d);
    for (std::size_t i = 0; i < k; ++i)
      if (!f.is_zero(values[idx[i]])) t = t + ts[i].scaled(values[idx[i]]);
    if (!f.is_zero(determinant(t))) return true;
    std::size_t i = k;
    while (i > 0 && ++idx[i - 1] == values.size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return false;
}

std::vector<Matrix> restrict_action(const std::vector<Matrix>& gens, const Subspace& u) {
  std::vector<Matrix> out;
  for (const auto& g : gens) {
    Matrix m(g.field(), u.dim(), u.dim());
    for (std::size_t i = 0; i < u.dim(); ++i) {
      auto c = u.coordinates(g * u.basis_vector(i));
      if (!c) throw InputError("restrict_action: subspace is not invariant");
      for (std::size_t j = 0; j < u.dim(); ++j) m(j, i) = (*c)[j];
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> quotient_action(const std::vector<Matrix>& gens, const Subspace& u) {
  const std::size_t n = u.ambient();
  std::vector<bool> pivot(n, false);
  for (auto p : u.pivots()) pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) free.push_back(c);
  std::vector<Matrix> out;
  for (const auto& g : gens) {
    const Field& f = g.field();
    Matrix m(f, free.size(), free.size());
    for (std::size_t a = 0; a < free.size(); ++a) {
      Vector w = g.column(free[a]);
      for (std::size_t i = 0; i < u.dim(); ++i) {
        const Scalar c = w[u.pivots()[i]];
        if (f.is_zero(c)) continue;
        for (std::size_t j = 0; j < n; ++j) w[j] = f.sub(w[j], f.mul(c, u.basis()(i, j)));
      }
      for (std::size_t b = 0; b < free.size(); ++b) m(b, a) = w[free[b]];
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::vector<Matrix>> composition_factors(const std::vector<Matrix>& gens, std::size_t dim, std::uint64_t budget) {
  if (dim == 0) return {};
  auto u = find_invariant_subspace(gens, dim, budget);
  if (!u) return {gens};
  auto lower = composition_factors(restrict_action(gens, *u), u->dim(), budget);
  auto upper = composition_factors(quotient_action(gens, *u), dim - u->dim(), budget);
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

std::vector<std::vector<Matrix>> simple_modules(const FinAlgebra& a, std::uint64_t budget) {
  std::vector<Matrix> regular;
  for (std::size_t k = 0; k < a.dim(); ++k) regular.push_back(a.left_multiplication(k));
  std::vector<std::vector<Matrix>> classes;
  for (auto& factor : composition_factors(regular, a.dim(), budget)) {
    Representation r{factor[0].rows(), factor};
    bool seen = false;
    for (const auto& c : classes)
      if (are_isomorphic(Representation{c[0].rows(), c}, r, budget)) {
        seen = true;
        break;
      }
    if (!seen) classes.push_back(std::move(factor));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) { return x[0].rows() < y[0].rows(); });
  return classes;
}

// ---------------------------------------------------------------------------
// Conjugation orbits

namespace {

std::vector<std::pair<Flat, Flat>> general_linear_group(const CodeOps& ops, std::size_t d, std::uint32_t q) {
  std::vector<std::pair<Flat, Flat>> group;
  Flat x(d * d, 0), xi;
  while (true) {
    if (invert_flat(ops, x, xi, d)) group.emplace_back(x, xi);
    std::size_t i = d * d;
    while (i > 0 && ++x[i - 1] == q) x[--i] = 0;
    if (i == 0) break;
  }
  return group;
}

}  // namespace

std::vector<Representation> orbit_representatives(const std::vector<Representation>& reps, const Field& f, std::uint64_t budget) {
  auto out = try_orbit_representatives(reps, f, budget);
  return out ? std::move(*out) : reps;
}

std::optional<std::vector<Representation>> try_orbit_representatives(const std::vector<Representation>& reps,
                                                                     const Field& f, std::uint64_t budget) {
  if (reps.empty()) return reps;
  if (!f.is_finite()) return std::nullopt;
  const std::size_t d = reps[0].dim;
  for (const auto& r : reps)
    if (r.dim != d) throw InputError("orbit_representatives: mixed dimensions");
  // scalars are fixed by conjugation
  if (d <= 1 || reps[0].matrices.empty()) return reps;
  const double all = std::pow(static_cast<double>(f.size()), static_cast<double>(d * d));
  if (all > static_cast<double>(budget)) return std::nullopt;
  CodeOps ops(f);
  const auto group = general_linear_group(ops, d, static_cast<std::uint32_t>(f.size()));
  auto key_of = [&](const std::vector<Flat>& mats) {
    std::u32string key;
    for (const auto& m : mats)
      for (auto c : m) key.push_back(static_cast<char32_t>(c));
    return key;
  };
  std::unordered_set<std::u32string> seen;
  std::vector<Representation> out;
  std::uint64_t work = 0;
  Flat tmp(d * d), conj(d * d);
  for (const auto& r : reps) {
    std::vector<Flat> mats;
    for (const auto& m : r.matrices) mats.push_back(detail::flatten(ops, m));
    if (seen.count(key_of(mats))) continue;
    out.push_back(r);
    work += group.size() * mats.size();
    if (work > budget) return std::nullopt;
    for (const auto& [g, gi] : group) {
      std::vector<Flat> c;
      for (const auto& m : mats) {
        detail::matmul(ops, g.data(), m.data(), tmp.data(), d);
        detail::matmul(ops, tmp.data(), gi.data(), conj.data(), d);
        c.push_back(conj);
      }
      seen.insert(key_of(c));
    }
  }
  return out;
}

std::optional<TupleOrbits> tuple_orbits(const std::vector<std::vector<std::vector<Matrix>>>& lists, std::size_t d,
                                        const Field& f, std::uint64_t budget) {
  if (!f.is_finite() || d == 0) return std::nullopt;
  if (std::pow(static_cast<double>(f.size()), static_cast<double>(d * d)) > static_cast<double>(budget)) return std::nullopt;
  CodeOps ops(f);
  const auto group = general_linear_group(ops, d, static_cast<std::uint32_t>(f.size()));
  auto key_of = [](const std::vector<Flat>& mats) {
    std::u32string key;
    for (const auto& m : mats)
      for (auto c : m) key.push_back(static_cast<char32_t>(c));
    return key;
  };
  std::vector<std::vector<std::vector<Flat>>> flat(lists.size());
  std::vector<std::unordered_map<std::u32string, std::size_t>> index(lists.size());
  for (std::size_t i = 0; i < lists.size(); ++i)
    for (std::size_t j = 0; j < lists[i].size(); ++j) {
      std::vector<Flat> mats;
      for (const auto& m : lists[i][j]) mats.push_back(detail::flatten(ops, m));
      index[i].emplace(key_of(mats), j);
      flat[i].push_back(std::move(mats));
    }
  TupleOrbits out;
  std::uint64_t work = 0;
  bool over = false;
  std::vector<std::size_t> prefix;
  Flat tmp(d * d);
  std::function<void(std::size_t, const std::vector<std::size_t>&)> recurse = [&](std::size_t i, const std::vector<std::size_t>& stab) {
    if (over) return;
    if (i == lists.size()) {
      out.tuples.push_back(prefix);
      out.sizes.push_back(group.size() / stab.size());
      return;
    }
    std::vector<bool> seen(flat[i].size(), false);
    for (std::size_t j = 0; j < flat[i].size(); ++j) {
      if (seen[j]) continue;
      work += stab.size() * (flat[i][j].size() + 1);
      if (work > budget) {
        over = true;
        return;
      }
      std::vector<std::size_t> next;
      for (auto gi : stab) {
        const auto& [g, ginv] = group[gi];
        std::vector<Flat> conj;
        for (const auto& m : flat[i][j]) {
          Flat c(d * d);
          detail::matmul(ops, g.data(), m.data(), tmp.data(), d);
          detail::matmul(ops, tmp.data(), ginv.data(), c.data(), d);
          conj.push_back(std::move(c));
        }
        auto it = index[i].find(key_of(conj));
        if (it == index[i].end()) throw InputError("tuple_orbits: list not closed under conjugation");
        seen[it->second] = true;
        if (it->second == j) next.push_back(gi);
      }
      prefix.push_back(j);
      recurse(i + 1, next);
      prefix.pop_back();
      if (over) return;
    }
  };
  std::vector<std::size_t> all(group.size());
  for (std::size_t g = 0; g < group.size(); ++g) all[g] = g;
  recurse(0, all);
  if (over) return std::nullopt;
  return out;
}

}  // namespace cogebra
