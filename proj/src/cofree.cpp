#include "cogebra/cofree.hpp"

namespace cogebra {

CofreeTruncation cofree_truncated(std::size_t m, std::size_t d, const Field& f, const CofreeOptions& opt) {
  if (d == 0) throw InputError("cofree truncation: degree must be at least 1");
  if (!f.is_finite()) throw InputError("cofree truncation: representations are enumerated, so the field must be finite");
  CofreeTruncation t;
  t.m = m;
  t.d = d;
  t.presentation = free_algebra(m, f);
  for (std::size_t e = 1; e <= d; ++e) {
    auto reps = enumerate_representations(t.presentation, e, {opt.budget});
    if (opt.reduce_orbits)
      if (auto orbits = try_orbit_representatives(reps, f, opt.budget)) reps = std::move(*orbits);
    for (auto& r : reps) t.representations.push_back(std::move(r));
  }
  t.span = CoefficientSpan(t.presentation, t.representations);
  t.carrier_dim = t.span.dim();
  t.structure_map = Matrix(f, m, t.carrier_dim);
  // f(x_g) = sum_k coords(x_g)[k] f(w_k), and f(w_k) is the k-th carrier coordinate
  for (std::size_t g = 0; g < m; ++g) {
    const Vector c = t.span.coordinates(Word{static_cast<std::uint32_t>(t.presentation.generator_symbol(g))});
    for (std::size_t k = 0; k < t.carrier_dim; ++k) t.structure_map(g, k) = c[k];
  }
  if (t.carrier_dim <= opt.materialize_limit) t.carrier = t.span.carrier();
  return t;
}

OntoReport structure_map_onto(const CofreeTruncation& t) {
  OntoReport r;
  const Field& f = t.structure_map.field();
  r.onto = rank(t.structure_map) == t.m;
  if (!r.onto) return r;
  for (std::size_t g = 0; g < t.m; ++g) {
    Vector target(t.m, f.zero());
    target[g] = f.one();
    r.preimages.push_back(solve_affine(t.structure_map, target)->particular);
  }
  return r;
}

Matrix cofree_inclusion(const CofreeTruncation& small, const CofreeTruncation& large) {
  if (small.m != large.m || !(small.structure_map.field() == large.structure_map.field()))
    throw InputError("cofree inclusion: truncations of different spaces");
  if (small.d > large.d) throw InputError("cofree inclusion: source level above target level");
  return span_inclusion(small.span, large.span);
}

CofreeExtensionReport cofree_extension_report(std::size_t m, std::size_t d, const Embedding& e,
                                              const CofreeOptions& opt) {
  if (!e.is_finite())
    throw InputError("extension report needs a finite extension; transcendental extensions are handled by the extension lab");
  CofreeOptions dims_only = opt;
  dims_only.materialize_limit = 0;
  const CofreeTruncation src = cofree_truncated(m, d, e.source(), dims_only);
  const CofreeTruncation tgt = cofree_truncated(m, d, e.target(), dims_only);
  CofreeExtensionReport r;
  r.d = d;
  r.source_dim = src.carrier_dim;
  r.target_dim = tgt.carrier_dim;
  r.equal = r.source_dim == r.target_dim;
  std::vector<Representation> extended;
  for (const auto& w : src.representations) extended.push_back(scalar_extend(w, e));
  const std::size_t ext_dim = CoefficientSpan(tgt.presentation, extended).dim();
  std::vector<Representation> both = tgt.representations;
  both.insert(both.end(), extended.begin(), extended.end());
  r.comparison_injective = ext_dim == r.source_dim && CoefficientSpan(tgt.presentation, both).dim() == r.target_dim;
  return r;
}

PresentedAlgebra tensor_presentation(const Coalgebra& c) { return free_algebra(c.dim(), c.field()); }

Representation convolution_tensor_rep(const Coalgebra& c, const Representation& rho, const Representation& sigma) {
  const PresentedAlgebra p = tensor_presentation(c);
  const std::size_t n = c.dim();
  if (rho.matrices.size() != p.symbol_count() || sigma.matrices.size() != p.symbol_count())
    throw InputError("convolution tensor: representations must have one matrix per basis vector of the coalgebra");
  const Field& f = c.field();
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix g(f, rho.dim * sigma.dim, rho.dim * sigma.dim);
    for (const auto& t : c.delta(k)) {
      const Matrix& a = rho.matrices[p.generator_symbol(t.i)];
      const Matrix& b = sigma.matrices[p.generator_symbol(t.j)];
      if (!(a.field() == f) || !(b.field() == f)) throw FieldMismatch("convolution tensor: representation over another field");
      g = g + kronecker(a, b).scaled(t.c);
    }
    gens.push_back(std::move(g));
  }
  return make_representation(p, std::move(gens), rho.dim * sigma.dim);
}

}  // namespace cogebra
