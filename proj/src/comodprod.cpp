#include "cogebra/comodprod.hpp"

#include <algorithm>
#include <cmath>

namespace cogebra {

// ---------------------------------------------------------------------------
// Comodules

Comodule::Comodule(Coalgebra c, std::vector<Matrix> action) : c_(std::move(c)), action_(std::move(action)) {
  if (action_.size() != c_.dim())
    throw InputError("comodule: expected one matrix per basis vector of the coalgebra (" + std::to_string(c_.dim()) + ")");
  dim_ = action_.empty() ? 0 : action_[0].rows();
  for (const auto& m : action_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw InputError("comodule: action matrices must be square of equal size");
    if (!(m.field() == c_.field())) throw FieldMismatch("comodule: action over another field");
  }
}

Comodule Comodule::from_coaction(Coalgebra c, const Matrix& coaction) {
  const std::size_t n = c.dim();
  const std::size_t v = coaction.cols();
  if (coaction.rows() != v * n) throw InputError("comodule: coaction must be (dim * dim C) x dim");
  std::vector<Matrix> action(n, Matrix(c.field(), v, v));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < v; ++j) action[k](i, j) = coaction(i * n + k, j);
  return Comodule(std::move(c), std::move(action));
}

Matrix Comodule::coaction() const {
  const std::size_t n = c_.dim();
  Matrix m(c_.field(), dim_ * n, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < dim_; ++j) m(i * n + k, j) = action_[k](i, j);
  return m;
}

std::optional<Violation> validate_comodule(const Comodule& v) {
  const Coalgebra& c = v.coalgebra();
  const Field& f = c.field();
  const std::size_t n = c.dim();
  const auto& r = v.action();
  // R_a R_b = sum_k mu_k^{ab} R_k
  std::vector<Matrix> expected(n * n, Matrix(f, v.dim(), v.dim()));
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : c.delta(k)) {
      Matrix& e = expected[t.i * n + t.j];
      e = e + r[k].scaled(t.c);
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!(r[a] * r[b] == expected[a * n + b]))
        return Violation{"coassociativity", {a, b},
                         "coaction is not coassociative at (" + c.label(a) + ", " + c.label(b) + ")"};
  Matrix unit(f, v.dim(), v.dim());
  for (std::size_t k = 0; k < n; ++k)
    if (!f.is_zero(c.counit()[k])) unit = unit + r[k].scaled(c.counit()[k]);
  if (!(unit == Matrix::identity(f, v.dim()))) return Violation{"counit", {}, "(id (x) eps) rho is not the identity"};
  return std::nullopt;
}

Comodule regular_comodule(const Coalgebra& c) {
  const std::size_t n = c.dim();
  std::vector<Matrix> action(n, Matrix(c.field(), n, n));
  // Delta(e_j) = sum mu_j^{ik} e_i (x) e_k, so (R_k)_ij = mu_j^{ik}
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& t : c.delta(j)) action[t.j](t.i, j) = t.c;
  return Comodule(c, std::move(action));
}

namespace {

void require_valid_family(const Family& family) {
  if (family.empty()) throw InputError("empty coalgebra family (use the trivial coalgebra explicitly)");
  for (const auto& c : family) {
    if (!(c.field() == family[0].field())) throw FieldMismatch("family members over different fields");
    if (auto v = validate_coalgebra(c)) throw InputError("invalid family member: " + v->message);
  }
}

// Action matrices R_k of one factor block, read off the generator matrices.
std::vector<Matrix> block_action(const PresentedAlgebra& p, const FactorBlock& block, const Representation& r) {
  const Field& f = p.field();
  const std::size_t n = block.algebra.dim();
  const Vector& u = block.algebra.unit();
  std::vector<Matrix> action(n);
  Matrix rest = Matrix::identity(f, r.dim);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == block.unit_index) continue;
    action[k] = r.matrices.at(p.generator_symbol(block.generator_of[k]));
    if (!f.is_zero(u[k])) rest = rest - action[k].scaled(u[k]);
  }
  action[block.unit_index] = rest.scaled(f.inv(u[block.unit_index]));
  return action;
}

std::vector<Matrix> block_generators(const FactorBlock& block, const std::vector<Matrix>& action) {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < action.size(); ++k)
    if (k != block.unit_index) out.push_back(action[k]);
  return out;
}

}  // namespace

Representation comodule_to_rep(const Comodule& v) {
  if (auto bad = validate_comodule(v)) throw InputError("comodule_to_rep: invalid coaction: " + bad->message);
  const PresentedAlgebra p = presentation_of(dual_algebra(v.coalgebra()));
  return make_representation(p, block_generators(p.factors()[0], v.action()));
}

Comodule rep_to_comodule(const Coalgebra& c, const Representation& r) {
  const PresentedAlgebra p = presentation_of(dual_algebra(c));
  if (!satisfies_relations(p, r)) throw InputError("rep_to_comodule: not a representation of the dual algebra");
  return Comodule(c, block_action(p, p.factors()[0], r));
}

PresentedAlgebra joint_presentation(const Family& family) {
  require_valid_family(family);
  std::vector<FinAlgebra> duals;
  for (const auto& c : family) duals.push_back(dual_algebra(c, false));
  return free_product(duals);
}

Representation joint_to_rep(const PresentedAlgebra& p, const JointComodule& v) {
  if (v.structures.size() != p.factors().size()) throw InputError("joint comodule: one structure per factor expected");
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < v.structures.size(); ++i) {
    const Comodule& s = v.structures[i];
    if (s.dim() != v.dim) throw InputError("joint comodule: structures on spaces of different dimension");
    if (auto bad = validate_comodule(s)) throw InputError("joint comodule: factor " + std::to_string(i) + ": " + bad->message);
    for (auto& m : block_generators(p.factors()[i], s.action())) gens.push_back(std::move(m));
  }
  if (gens.empty()) return Representation{v.dim, {}};
  return make_representation(p, std::move(gens));
}

JointComodule rep_to_joint(const Family& family, const PresentedAlgebra& p, const Representation& r) {
  if (family.size() != p.factors().size()) throw InputError("rep_to_joint: family does not match the presentation");
  JointComodule out{r.dim, {}};
  for (std::size_t i = 0; i < family.size(); ++i)
    out.structures.emplace_back(family[i], block_action(p, p.factors()[i], r));
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration over the family

namespace {

using GeneratorLists = std::vector<std::vector<std::vector<Matrix>>>;  // [factor][rep] -> generator matrices

// Factor-wise enumerations; empty when some factor has no e-dimensional module.
GeneratorLists factor_lists(const PresentedAlgebra& p, std::size_t e, const ProductOptions& opt) {
  GeneratorLists per_factor;
  for (const auto& block : p.factors()) {
    const PresentedAlgebra fp = presentation_of(block.algebra);
    std::vector<std::vector<Matrix>> list;
    for (auto& r : enumerate_representations(fp, e, {opt.budget})) {
      std::vector<Matrix> gens;
      for (std::size_t g = 0; g < fp.generator_count(); ++g) gens.push_back(std::move(r.matrices[fp.generator_symbol(g)]));
      list.push_back(std::move(gens));
    }
    if (list.empty()) return {};
    per_factor.push_back(std::move(list));
  }
  return per_factor;
}

Representation assemble(const PresentedAlgebra& p, const GeneratorLists& lists, const std::vector<std::size_t>& idx,
                        std::size_t e) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < lists.size(); ++i)
    for (const auto& m : lists[i][idx[i]]) gens.push_back(m);
  return make_representation(p, std::move(gens), e);
}

std::vector<Representation> full_product(const PresentedAlgebra& p, const GeneratorLists& lists, std::size_t e,
                                         const ProductOptions& opt) {
  if (lists.empty()) return {};
  // charged by matrix entries produced
  double total = static_cast<double>(std::max<std::size_t>(1, p.generator_count() * e * e));
  for (const auto& l : lists) total *= static_cast<double>(l.size());
  if (total > static_cast<double>(opt.budget))
    throw BudgetExceeded("joint representations in dimension " + std::to_string(e), total, opt.budget);
  std::vector<Representation> out;
  std::vector<std::size_t> idx(lists.size(), 0);
  while (true) {
    out.push_back(assemble(p, lists, idx, e));
    std::size_t i = idx.size();
    while (i > 0 && ++idx[i - 1] == lists[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace

std::vector<Representation> joint_representations(const Family& family, const PresentedAlgebra& p, std::size_t e,
                                                  const ProductOptions& opt) {
  (void)family;
  return full_product(p, factor_lists(p, e, opt), e, opt);
}

JointOrbits joint_orbit_representatives(const Family& family, const PresentedAlgebra& p, std::size_t e,
                                        const ProductOptions& opt) {
  (void)family;
  const GeneratorLists lists = factor_lists(p, e, opt);
  JointOrbits out;
  if (lists.empty()) {
    out.orbits = true;
    return out;
  }
  if (opt.reduce_orbits)
    if (auto orbits = tuple_orbits(lists, e, p.field(), opt.budget)) {
      out.orbits = true;
      for (std::size_t t = 0; t < orbits->tuples.size(); ++t) {
        out.reps.push_back(assemble(p, lists, orbits->tuples[t], e));
        out.sizes.push_back(orbits->sizes[t]);
      }
      return out;
    }
  out.reps = full_product(p, lists, e, opt);
  out.sizes.assign(out.reps.size(), 1);
  return out;
}

namespace {

std::vector<std::vector<std::vector<Matrix>>> factor_simples(const Family& family, std::uint64_t budget) {
  std::vector<std::vector<std::vector<Matrix>>> out;
  for (const auto& c : family) out.push_back(simple_modules(dual_algebra(c, false), budget));
  return out;
}

std::vector<std::vector<std::size_t>> dims_of(const std::vector<std::vector<std::vector<Matrix>>>& simples) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : simples) {
    std::vector<std::size_t> dims;
    for (const auto& m : s) dims.push_back(m[0].rows());
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    out.push_back(std::move(dims));
  }
  return out;
}

// Which simple (by index) to add last to reach each total, or -1; -2 marks 0.
std::vector<int> coin_table(const std::vector<std::size_t>& dims, std::size_t e) {
  std::vector<int> how(e + 1, -1);
  how[0] = -2;
  for (std::size_t t = 1; t <= e; ++t)
    for (std::size_t i = 0; i < dims.size(); ++i)
      if (dims[i] <= t && how[t - dims[i]] != -1) {
        how[t] = static_cast<int>(i);
        break;
      }
  return how;
}

Matrix block_diagonal(const Field& f, const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix m(f, n, n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(at + i, at + j) = b(i, j);
    at += b.rows();
  }
  return m;
}

}  // namespace

std::vector<std::vector<std::size_t>> factor_simple_dims(const Family& family, std::uint64_t budget) {
  require_valid_family(family);
  return dims_of(factor_simples(family, budget));
}

bool joint_dimension_possible(const std::vector<std::vector<std::size_t>>& simple_dims, std::size_t e) {
  for (const auto& dims : simple_dims)
    if (coin_table(dims, e)[e] == -1) return false;
  return true;
}

SimpleCensus simple_census(const Family& family, std::size_t d, const ProductOptions& opt) {
  if (!family.empty() && !family[0].field().is_finite())
    throw InputError("simple census needs a finite field");
  SimpleCensus out;
  out.presentation = joint_presentation(family);
  const auto possible = factor_simple_dims(family, opt.budget);
  for (std::size_t e = 1; e <= d; ++e) {
    std::vector<Representation> classes;
    std::size_t simple_count = 0;
    if (joint_dimension_possible(possible, e)) {
      const JointOrbits jo = joint_orbit_representatives(family, out.presentation, e, opt);
      for (std::size_t k = 0; k < jo.reps.size(); ++k) {
        if (!is_simple(jo.reps[k], opt.budget)) continue;
        simple_count += jo.sizes[k];
        if (jo.orbits) {
          // orbits are the isomorphism classes, each given by its lex-least member
          classes.push_back(jo.reps[k]);
          continue;
        }
        bool known = false;
        for (const auto& c : classes)
          if (are_isomorphic(c, jo.reps[k], opt.budget)) {
            known = true;
            break;
          }
        if (!known) classes.push_back(jo.reps[k]);
      }
    }
    out.classes.push_back(std::move(classes));
    out.simple_counts.push_back(simple_count);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Truncated products

Matrix projection(const CoefficientSpan& span, const PresentedAlgebra& p, std::size_t factor) {
  const FactorBlock& block = p.factors().at(factor);
  const Field& f = p.field();
  const std::size_t n = block.algebra.dim();
  const Vector& u = block.algebra.unit();
  const Scalar inv_u0 = f.inv(u[block.unit_index]);
  Matrix pi(f, n, span.dim());
  for (std::size_t k = 0; k < n; ++k) {
    Relation image;
    if (k == block.unit_index) {
      // e_k0 = (1 - sum_{k != k0} u_k e_k) / u_k0
      image.push_back({inv_u0, {}});
      for (std::size_t j = 0; j < n; ++j)
        if (j != block.unit_index && !f.is_zero(u[j]))
          image.push_back({f.neg(f.mul(u[j], inv_u0)),
                           {static_cast<std::uint32_t>(p.generator_symbol(block.generator_of[j]))}});
    } else {
      image.push_back({f.one(), {static_cast<std::uint32_t>(p.generator_symbol(block.generator_of[k]))}});
    }
    const Vector c = span.coordinates(image);
    for (std::size_t a = 0; a < span.dim(); ++a) pi(k, a) = c[a];
  }
  return pi;
}

namespace {

void finish(TruncatedProduct& t, const ProductOptions& opt) {
  t.span = CoefficientSpan(t.presentation, t.witnesses);
  t.carrier_dim = t.span.dim();
  if (t.carrier_dim <= opt.materialize_limit) {
    t.carrier = t.span.carrier();
    for (std::size_t i = 0; i < t.family.size(); ++i) t.projections.push_back(projection(t.span, t.presentation, i));
  }
}

// Joint representations of each dimension 1..d (orbit-reduced), skipping impossible dimensions.
struct Stages {
  std::vector<std::vector<Representation>> reps;
  std::vector<std::size_t> skipped;
};

Stages collect(const Family& family, const PresentedAlgebra& p, std::size_t d, const ProductOptions& opt) {
  if (!family[0].field().is_finite())
    throw InputError("truncated product over an infinite field needs a supplied comodule list");
  const auto possible = factor_simple_dims(family, opt.budget);
  Stages s;
  for (std::size_t e = 1; e <= d; ++e) {
    if (!joint_dimension_possible(possible, e)) {
      s.skipped.push_back(e);
      s.reps.emplace_back();
      continue;
    }
    s.reps.push_back(joint_orbit_representatives(family, p, e, opt).reps);
  }
  return s;
}

}  // namespace

TruncatedProduct truncated_product(const Family& family, std::size_t d, const ProductOptions& opt) {
  if (d == 0) throw InputError("truncated product needs d >= 1");
  TruncatedProduct t;
  t.family = family;
  t.d = d;
  t.presentation = joint_presentation(family);
  Stages s = collect(family, t.presentation, d, opt);
  t.skipped_dims = s.skipped;
  for (auto& list : s.reps)
    for (auto& r : list) t.witnesses.push_back(std::move(r));
  finish(t, opt);
  return t;
}

TruncatedProduct truncated_product_from(const Family& family, const std::vector<JointComodule>& supplied,
                                        const ProductOptions& opt) {
  TruncatedProduct t;
  t.family = family;
  t.supplied = true;
  t.presentation = joint_presentation(family);
  for (const auto& v : supplied) {
    t.d = std::max(t.d, v.dim);
    t.witnesses.push_back(joint_to_rep(t.presentation, v));
  }
  finish(t, opt);
  return t;
}

ProfileReport dimension_profile(const Family& family, std::size_t dmax, const ProductOptions& opt) {
  const PresentedAlgebra p = joint_presentation(family);
  Stages s = collect(family, p, dmax, opt);
  ProfileReport out;
  std::vector<Representation> acc;
  for (std::size_t e = 0; e < dmax; ++e) {
    acc.insert(acc.end(), s.reps[e].begin(), s.reps[e].end());
    out.dims.push_back(CoefficientSpan(p, acc).dim());
  }
  for (std::size_t i = 1; i < out.dims.size(); ++i) {
    if (out.dims[i] < out.dims[i - 1]) out.nondecreasing = false;
    if (out.dims[i] <= out.dims[i - 1]) out.strictly_increasing = false;
  }
  return out;
}

Family scalar_extend(const Family& family, const Embedding& e) {
  Family out;
  for (const auto& c : family) out.push_back(scalar_extend(c, e));
  return out;
}

ExtensionReport extension_commutation_report(const Family& family, const Embedding& e, std::size_t d,
                                             const ProductOptions& opt) {
  if (!e.is_finite())
    throw InputError("extension report needs a finite extension; transcendental extensions are handled by the extension lab");
  ProductOptions dims_only = opt;
  dims_only.materialize_limit = 0;
  const TruncatedProduct src = truncated_product(family, d, dims_only);
  const TruncatedProduct tgt = truncated_product(scalar_extend(family, e), d, dims_only);
  ExtensionReport r;
  r.d = d;
  r.source_dim = src.carrier_dim;
  r.target_dim = tgt.carrier_dim;
  r.equal = r.source_dim == r.target_dim;
  std::vector<Representation> extended;
  for (const auto& w : src.witnesses) extended.push_back(scalar_extend(w, e));
  r.extended_source_dim = CoefficientSpan(tgt.presentation, extended).dim();
  std::vector<Representation> both = tgt.witnesses;
  both.insert(both.end(), extended.begin(), extended.end());
  const bool contained = CoefficientSpan(tgt.presentation, both).dim() == r.target_dim;
  r.comparison_injective = contained && r.extended_source_dim == r.source_dim;
  return r;
}

VanishingReport vanishing_check(const Family& family, std::size_t d, const ProductOptions& opt) {
  require_valid_family(family);
  const auto simples = factor_simples(family, opt.budget);
  VanishingReport r;
  r.simple_dims = dims_of(simples);
  for (std::size_t e = 1; e <= d && !r.first_dim; ++e)
    if (joint_dimension_possible(r.simple_dims, e)) r.first_dim = e;
  r.vanishes = r.first_dim == 0;
  const Field& f = family[0].field();
  if (!r.vanishes) {
    JointComodule w{r.first_dim, {}};
    for (std::size_t i = 0; i < family.size(); ++i) {
      // pick simples of this factor adding up to first_dim
      std::vector<std::size_t> dims;
      for (const auto& s : simples[i]) dims.push_back(s[0].rows());
      const auto how = coin_table(dims, r.first_dim);
      std::vector<std::size_t> chosen;
      for (std::size_t t = r.first_dim; t > 0; t -= dims[static_cast<std::size_t>(how[t])])
        chosen.push_back(static_cast<std::size_t>(how[t]));
      std::vector<Matrix> action;
      for (std::size_t k = 0; k < family[i].dim(); ++k) {
        std::vector<Matrix> blocks;
        for (auto s : chosen) blocks.push_back(simples[i][s][k]);
        action.push_back(block_diagonal(f, blocks));
      }
      w.structures.emplace_back(family[i], std::move(action));
    }
    r.witness = std::move(w);
  }
  // exhaustive confirmation as far as the budget allows
  if (f.is_finite()) {
    const PresentedAlgebra p = joint_presentation(family);
    const std::size_t last = r.vanishes ? d : r.first_dim;
    for (std::size_t e = 1; e <= last; ++e) {
      try {
        const bool found = !joint_representations(family, p, e, opt).empty();
        if (found != (e == r.first_dim)) r.enumeration_consistent = false;
        r.enumerated_up_to = e;
      } catch (const BudgetExceeded&) {
        break;
      }
    }
  }
  return r;
}

}  // namespace cogebra
