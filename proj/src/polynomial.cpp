#include "cogebra/polynomial.hpp"

#include <algorithm>

namespace cogebra {

void PolynomialRing::trim(Polynomial& a) const {
  while (!a.coeffs.empty() && field_.is_zero(a.coeffs.back())) a.coeffs.pop_back();
}

Polynomial PolynomialRing::constant(const Scalar& c) const {
  Polynomial p;
  if (!field_.is_zero(c)) p.coeffs.push_back(c);
  return p;
}

Polynomial PolynomialRing::monomial(const Scalar& c, std::size_t degree) const {
  Polynomial p;
  if (field_.is_zero(c)) return p;
  p.coeffs.assign(degree + 1, field_.zero());
  p.coeffs[degree] = c;
  return p;
}

Polynomial PolynomialRing::from_ints(const std::vector<long long>& low_to_high) const {
  Polynomial p;
  for (auto v : low_to_high) p.coeffs.push_back(field_.from_int(v));
  trim(p);
  return p;
}

Polynomial PolynomialRing::add(const Polynomial& a, const Polynomial& b) const {
  Polynomial out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), field_.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] = field_.add(out.coeffs[i], b.coeffs[i]);
  trim(out);
  return out;
}

Polynomial PolynomialRing::neg(const Polynomial& a) const {
  Polynomial out = a;
  for (auto& c : out.coeffs) c = field_.neg(c);
  return out;
}

Polynomial PolynomialRing::sub(const Polynomial& a, const Polynomial& b) const { return add(a, neg(b)); }

Polynomial PolynomialRing::mul(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  Polynomial out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, field_.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (field_.is_zero(a.coeffs[i])) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out.coeffs[i + j] = field_.add(out.coeffs[i + j], field_.mul(a.coeffs[i], b.coeffs[j]));
  }
  trim(out);
  return out;
}

Polynomial PolynomialRing::scale(const Polynomial& a, const Scalar& c) const {
  Polynomial out = a;
  for (auto& x : out.coeffs) x = field_.mul(x, c);
  trim(out);
  return out;
}

std::pair<Polynomial, Polynomial> PolynomialRing::divmod(const Polynomial& a, const Polynomial& b) const {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  Polynomial rem = a;
  if (rem.degree() < b.degree()) return {{}, rem};
  Polynomial quo;
  quo.coeffs.assign(static_cast<std::size_t>(rem.degree() - b.degree() + 1), field_.zero());
  const Scalar lead_inv = field_.inv(leading(b));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
    const Scalar c = field_.mul(leading(rem), lead_inv);
    quo.coeffs[shift] = c;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i)
      rem.coeffs[shift + i] = field_.sub(rem.coeffs[shift + i], field_.mul(c, b.coeffs[i]));
    trim(rem);
  }
  trim(quo);
  return {quo, rem};
}

Polynomial PolynomialRing::monic(const Polynomial& a) const {
  if (a.is_zero()) return a;
  return scale(a, field_.inv(leading(a)));
}

Polynomial PolynomialRing::gcd(const Polynomial& a, const Polynomial& b) const {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Polynomial PolynomialRing::pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) const {
  Polynomial result = mod(one(), modulus);
  Polynomial b = mod(base, modulus);
  while (e) {
    if (e & 1) result = mod(mul(result, b), modulus);
    e >>= 1;
    if (e) b = mod(mul(b, b), modulus);
  }
  return result;
}

Polynomial PolynomialRing::derivative(const Polynomial& a) const {
  Polynomial out;
  for (std::size_t i = 1; i < a.coeffs.size(); ++i)
    out.coeffs.push_back(field_.mul(field_.from_int(static_cast<long long>(i)), a.coeffs[i]));
  trim(out);
  return out;
}

Polynomial PolynomialRing::reversed(const Polynomial& a) const {
  Polynomial out = a;
  std::reverse(out.coeffs.begin(), out.coeffs.end());
  trim(out);
  return out;
}

Scalar PolynomialRing::eval(const Polynomial& a, const Scalar& at) const {
  Scalar acc = field_.zero();
  for (std::size_t i = a.coeffs.size(); i-- > 0;) acc = field_.add(field_.mul(acc, at), a.coeffs[i]);
  return acc;
}

bool PolynomialRing::divides(const Polynomial& d, const Polynomial& a) const {
  if (d.is_zero()) return a.is_zero();
  return mod(a, d).is_zero();
}

bool PolynomialRing::is_irreducible(const Polynomial& f) const {
  if (!field_.is_finite()) throw InputError("irreducibility test needs a finite coefficient field");
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const Polynomial g = monic(f);
  const std::uint64_t q = field_.size();
  const auto n = static_cast<std::uint64_t>(g.degree());
  // x^(q^k) mod g for k = 0..n
  std::vector<Polynomial> frob{mod(x(), g)};
  for (std::uint64_t k = 1; k <= n; ++k) frob.push_back(pow_mod(frob.back(), q, g));
  if (!(frob[n] == mod(x(), g))) return false;
  std::uint64_t m = n;
  for (std::uint64_t r = 2; r <= m; ++r) {
    if (m % r) continue;
    while (m % r == 0) m /= r;
    Polynomial h = sub(frob[n / r], x());
    if (gcd(h, g).degree() != 0) return false;
  }
  return true;
}

std::string PolynomialRing::format(const Polynomial& a, const std::string& var) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t k = a.coeffs.size(); k-- > 0;) {
    if (field_.is_zero(a.coeffs[k])) continue;
    std::string c = field_.format(a.coeffs[k]);
    bool negative = false;
    if (!c.empty() && c.front() == '-') {
      negative = true;
      c.erase(0, 1);
    }
    const bool plain = std::all_of(c.begin(), c.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    if (!plain) c = "(" + c + ")";
    out += out.empty() ? (negative ? "-" : "") : (negative ? "-" : "+");
    if (k == 0) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace cogebra
