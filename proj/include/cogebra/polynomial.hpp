#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cogebra/field.hpp"

namespace cogebra {

/// Arithmetic in F[x] over a fixed coefficient field.
class PolynomialRing {
 public:
  explicit PolynomialRing(Field f) : field_(std::move(f)) {}

  const Field& field() const { return field_; }

  Polynomial zero() const { return {}; }
  Polynomial one() const { return constant(field_.one()); }
  Polynomial x() const { return monomial(field_.one(), 1); }
  Polynomial constant(const Scalar& c) const;
  Polynomial monomial(const Scalar& c, std::size_t degree) const;
  Polynomial from_ints(const std::vector<long long>& low_to_high) const;

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  Polynomial scale(const Polynomial& a, const Scalar& c) const;
  /// Quotient and remainder; throws InputError on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) const;
  Polynomial mod(const Polynomial& a, const Polynomial& b) const { return divmod(a, b).second; }
  /// Monic gcd (zero if both are zero).
  Polynomial gcd(const Polynomial& a, const Polynomial& b) const;
  Polynomial monic(const Polynomial& a) const;
  Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) const;
  Polynomial derivative(const Polynomial& a) const;
  /// x^deg * a(1/x): coefficients reversed.
  Polynomial reversed(const Polynomial& a) const;
  Scalar eval(const Polynomial& a, const Scalar& at) const;
  Scalar leading(const Polynomial& a) const { return a.coeffs.back(); }
  bool divides(const Polynomial& d, const Polynomial& a) const;

  /// Rabin's test; finite coefficient fields only.
  bool is_irreducible(const Polynomial& f) const;

  std::string format(const Polynomial& a, const std::string& var = "x") const;

 private:
  void trim(Polynomial& a) const;
  Field field_;
};

}  // namespace cogebra
