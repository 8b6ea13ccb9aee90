#pragma once

// Span of matrix-coefficient functionals of a list of representations.
//
// All representations are evaluated at once on the direct sum: a word w maps to
// the concatenation of the rho(w), one block per representation. Words are
// explored breadth first, extending only words whose image was new, so the kept
// words K are a basis of the image algebra B of the presented algebra in
// prod End(V_rho). The coefficient functionals c^rho_ij span exactly B^*, and the
// basis of B^* dual to K is the carrier basis used throughout.

#include <memory>

#include "cogebra/presented.hpp"

namespace cogebra {

struct SpanOptions {
  /// Also multiply by the inverse symbols while exploring words.
  bool include_inverses = false;
};

class CoefficientSpan {
 public:
  CoefficientSpan() = default;
  CoefficientSpan(const PresentedAlgebra& p, const std::vector<Representation>& reps, SpanOptions opt = {});

  const Field& field() const;
  const PresentedAlgebra& presentation() const;
  /// Dimension of the span (= dim B = |K|).
  std::size_t dim() const;
  /// Longest kept word: images of words of length <= L already span B.
  std::size_t stabilization_length() const;
  const std::vector<Word>& words() const;
  std::size_t representation_count() const;
  std::size_t representation_dim(std::size_t r) const;

  /// Coordinates of the image of w (or of a linear combination of words) in the basis K.
  Vector coordinates(const Word& w) const;
  Vector coordinates(const Relation& combination) const;

  /// B on the basis K; cost grows like |K|^4, callers decide when it is affordable.
  FinAlgebra image_algebra() const;
  /// B^* on the basis dual to K, labelled "[w]*".
  Coalgebra carrier() const;
  /// c^rho_ij in carrier coordinates: its values on the kept words.
  Vector coefficient_functional(std::size_t rep, std::size_t i, std::size_t j) const;

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

/// The inclusion of carriers small -> large (both over the same presentation,
/// with every functional of `small` in `large`): a^* goes to b -> a^*(image of b).
/// Returns a large.dim() x small.dim() matrix.
Matrix span_inclusion(const CoefficientSpan& small, const CoefficientSpan& large);

}  // namespace cogebra
