#pragma once

// Linearly recursive sequences, the elements of k[x]^o. With x grouplike the
// product is the termwise (Hadamard) product and the comultiplication is dual to
// x^m x^n = x^{m+n}; with x primitive the product is the binomial (Hurwitz)
// convolution. The sequences with invertible shift (nonzero constant term in
// the minimal polynomial) extend to all of Z and carry the antipode n -> -n.

#include <string>
#include <vector>

#include "cogebra/matrix.hpp"
#include "cogebra/polynomial.hpp"

namespace cogebra {

class LinRecSeq {
 public:
  LinRecSeq() = default;
  /// Any monic annihilator p with at least deg p initial terms; the minimal
  /// polynomial is recovered by Berlekamp-Massey and checked to divide p.
  LinRecSeq(Field f, const Polynomial& annihilator, std::vector<Scalar> initial);
  static LinRecSeq constant(const Field& f, const Scalar& c);
  static LinRecSeq geometric(const Field& f, const Scalar& a);
  /// 1, 0, 0, ...: the unit of the Hurwitz product.
  static LinRecSeq delta(const Field& f);

  const Field& field() const { return field_; }
  /// Monic, low-to-high; the zero sequence has minimal polynomial 1.
  const Polynomial& minimal_polynomial() const { return minpoly_; }
  std::size_t order() const { return initial_.size(); }
  const std::vector<Scalar>& initial() const { return initial_; }

  Scalar term(std::size_t n) const;
  std::vector<Scalar> terms(std::size_t count) const;

  friend bool operator==(const LinRecSeq& a, const LinRecSeq& b) = default;

 private:
  Field field_;
  Polynomial minpoly_;
  std::vector<Scalar> initial_;  // first deg(minpoly) terms
};

/// Minimal connection polynomial of a finite sequence as a monic polynomial in
/// the shift (degree = linear complexity).
Polynomial berlekamp_massey(const Field& f, const std::vector<Scalar>& terms);

LinRecSeq hadamard_product(const LinRecSeq& a, const LinRecSeq& b);
LinRecSeq hurwitz_product(const LinRecSeq& a, const LinRecSeq& b);
LinRecSeq add(const LinRecSeq& a, const LinRecSeq& b);
LinRecSeq scale(const LinRecSeq& a, const Scalar& c);
/// (f_{n+1})_n
LinRecSeq shift(const LinRecSeq& a);

bool is_bilaterally_extendable(const LinRecSeq& f);
/// f_{-n} via the recurrence run backwards; InputError unless extendable.
Scalar bilateral_term(const LinRecSeq& f, long n);
LinRecSeq antipode(const LinRecSeq& f);

struct ComultiplicationPair {
  LinRecSeq left, right;
};
/// f_{m+n} = sum_i left_i(m) right_i(n) from f_n = e_0 A^n s_0 (A the shift on
/// states): left_i(m) = (A^m)_{0i}, right_i(n) = f_{n+i}. deg(minpoly) pairs,
/// checked for m, n <= 2r.
std::vector<ComultiplicationPair> comultiplication_components(const LinRecSeq& f);

/// C(n, k) as an element of f (Lucas in positive characteristic).
Scalar binomial(const Field& f, std::uint64_t n, std::uint64_t k);

/// Parses "x^2-x-1", "3*x^3 + 2x + 1" into a polynomial over f.
Polynomial parse_polynomial(const Field& f, std::string_view text, char var = 'x');

}  // namespace cogebra
