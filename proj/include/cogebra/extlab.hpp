#pragma once

// Experiments that separate algebraic from transcendental extensions: the
// k-algebra generated by matrices over a finite extension stays finite, while
// over k(t) the explicit witnesses below keep growing. Each experiment returns a
// WitnessReport whose evidence can be re-checked from the report alone.

#include "cogebra/io.hpp"

namespace cogebra {

/// Dimension over k of the k-algebra generated by `gens` (square, over k') inside
/// the matrices over k', by a word-span fixpoint; nullopt once it passes `cap`.
/// The extension must be finite.
std::optional<std::size_t> generated_algebra_dimension(const Embedding& e, const std::vector<Matrix>& gens,
                                                       std::size_t cap);

/// For matrices over k(t): dimension over k of the span of the first n, n = 1..size.
/// BudgetExceeded when an entry's numerator or denominator degree passes degree_cap.
std::vector<std::size_t> base_span_dimensions(const std::vector<Matrix>& mats, std::size_t degree_cap = 4096);

struct WitnessReport {
  std::string experiment;
  Json parameters;
  bool verdict = false;
  std::string statement;
  std::vector<std::size_t> dimensions;  // numeric evidence where the experiment has any
  Json witness;
};

Json to_json(const WitnessReport& r);
WitnessReport witness_from_json(const Json& j);
/// Recomputes the verdict from the stored evidence; `reason` says what failed.
bool revalidate(const WitnessReport& r, std::string* reason = nullptr);

/// x -> t over GF(p)(t) (Q(t) for p = 0) against every nonzero polynomial of degree
/// <= D over the prime field; beyond `exhaustive_limit` polynomials only the
/// monomials are evaluated and their independence over the prime field is checked.
WitnessReport transcendental_character_check(std::uint32_t p, std::size_t D,
                                             std::uint64_t exhaustive_limit = 1u << 16);

/// M = [[t, t^2 - t], [0, -t]] over GF(p)(t) (Q(t) for p = 0): base-field dimensions
/// of span{M, .., M^n} for n <= N.
WitnessReport matrix_power_span_growth(std::uint32_t p, std::size_t N, std::size_t degree_cap = 4096);

/// x = e12 (square zero), x' = e21 its conjugate by the swap: base-field dimensions of
/// span{(x x' t)^1 .. (x x' t)^n} for n <= N.
WitnessReport nilpotent_witness_span(std::uint32_t p, std::size_t N, std::size_t degree_cap = 4096);

/// vanishing_check on (GF(p^n_i)^*) over GF(p) at level d, then on the family
/// extended to GF(p^m) at level d_ext. The verdict is the dichotomy: vanishing
/// below, a comodule above.
WitnessReport dualfields_experiment(std::uint32_t p, const std::vector<std::uint32_t>& exts, std::size_t d,
                                    std::uint32_t m, std::size_t d_ext = 1, const ProductOptions& opt = {});

}  // namespace cogebra
