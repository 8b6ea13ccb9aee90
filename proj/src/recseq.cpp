#include "cogebra/recseq.hpp"

#include <cctype>

namespace cogebra {

namespace {

void require_same(const LinRecSeq& a, const LinRecSeq& b, const char* what) {
  if (!(a.field() == b.field())) throw FieldMismatch(std::string(what) + ": sequences over different fields");
}

// Extends `terms` to `count` entries with the monic recurrence p.
std::vector<Scalar> run(const Field& f, const Polynomial& p, std::vector<Scalar> terms, std::size_t count) {
  const auto r = static_cast<std::size_t>(p.degree());
  if (r == 0) return std::vector<Scalar>(count, f.zero());
  while (terms.size() < count) {
    const std::size_t n = terms.size() - r;
    Scalar s = f.zero();
    for (std::size_t i = 0; i < r; ++i) s = f.sub(s, f.mul(p.coeffs[i], terms[n + i]));
    terms.push_back(s);
  }
  terms.resize(count);
  return terms;
}

}  // namespace

Polynomial berlekamp_massey(const Field& f, const std::vector<Scalar>& s) {
  // connection polynomial C(z) = 1 + c_1 z + ... with s_n + sum c_i s_{n-i} = 0
  std::vector<Scalar> c{f.one()}, b{f.one()};
  std::size_t l = 0, m = 1;
  Scalar bd = f.one();
  for (std::size_t n = 0; n < s.size(); ++n) {
    Scalar disc = s[n];
    for (std::size_t i = 1; i <= l && i < c.size(); ++i) disc = f.add(disc, f.mul(c[i], s[n - i]));
    if (f.is_zero(disc)) {
      ++m;
      continue;
    }
    const Scalar coef = f.div(disc, bd);
    std::vector<Scalar> t = c;
    if (c.size() < b.size() + m) c.resize(b.size() + m, f.zero());
    for (std::size_t i = 0; i < b.size(); ++i) c[i + m] = f.sub(c[i + m], f.mul(coef, b[i]));
    if (2 * l <= n) {
      l = n + 1 - l;
      b = std::move(t);
      bd = disc;
      m = 1;
    } else {
      ++m;
    }
  }
  c.resize(l + 1, f.zero());
  // p(x) = x^l C(1/x)
  Polynomial p;
  for (std::size_t i = 0; i <= l; ++i) p.coeffs.push_back(c[l - i]);
  return p;
}

LinRecSeq::LinRecSeq(Field f, const Polynomial& annihilator, std::vector<Scalar> initial) : field_(std::move(f)) {
  const PolynomialRing ring(field_);
  if (annihilator.is_zero() || !field_.is_one(annihilator.coeffs.back()))
    throw InputError("recursive sequence: the annihilator must be monic");
  const auto r = static_cast<std::size_t>(annihilator.degree());
  if (initial.size() < r)
    throw InputError("recursive sequence: need " + std::to_string(r) + " initial terms for " + ring.format(annihilator));
  const std::vector<Scalar> given = initial;
  initial.resize(r);
  const std::vector<Scalar> seq = run(field_, annihilator, std::move(initial), std::max(2 * r, given.size()));
  // extra initial terms must obey the annihilator
  for (std::size_t i = r; i < given.size(); ++i)
    if (!(seq[i] == given[i])) throw InputError("recursive sequence: initial terms do not satisfy " + ring.format(annihilator));
  minpoly_ = berlekamp_massey(field_, std::vector<Scalar>(seq.begin(), seq.begin() + static_cast<long>(2 * r)));
  if (!ring.divides(minpoly_, annihilator)) throw std::logic_error("recursive sequence: minimal polynomial does not divide the annihilator");
  initial_.assign(seq.begin(), seq.begin() + minpoly_.degree());
}

LinRecSeq LinRecSeq::constant(const Field& f, const Scalar& c) {
  const PolynomialRing ring(f);
  return LinRecSeq(f, ring.sub(ring.x(), ring.one()), {c});
}

LinRecSeq LinRecSeq::geometric(const Field& f, const Scalar& a) {
  const PolynomialRing ring(f);
  return LinRecSeq(f, ring.sub(ring.x(), ring.constant(a)), {f.one()});
}

LinRecSeq LinRecSeq::delta(const Field& f) {
  const PolynomialRing ring(f);
  return LinRecSeq(f, ring.x(), {f.one()});
}

Scalar LinRecSeq::term(std::size_t n) const { return terms(n + 1).back(); }

std::vector<Scalar> LinRecSeq::terms(std::size_t count) const { return run(field_, minpoly_, initial_, count); }

namespace {

// Recovers the sequence from an annihilator of degree r and its first 2r terms,
// checking that the computed minimal polynomial divides the annihilator.
LinRecSeq from_annihilator(const Field& f, const Polynomial& ann, const std::vector<Scalar>& first_terms) {
  const auto r = static_cast<std::size_t>(ann.degree());
  LinRecSeq out(f, ann, std::vector<Scalar>(first_terms.begin(), first_terms.begin() + static_cast<long>(r)));
  // the annihilator really annihilates: compare the remaining given terms
  const auto check = out.terms(first_terms.size());
  if (check != first_terms) throw std::logic_error("recursive sequence: product annihilator check failed");
  return out;
}

Polynomial annihilator_of(const Field& f, const LinRecSeq& a) {
  if (a.order() == 0) return PolynomialRing(f).x();  // the zero sequence; any monic will do
  return a.minimal_polynomial();
}

}  // namespace

LinRecSeq hadamard_product(const LinRecSeq& a, const LinRecSeq& b) {
  require_same(a, b, "hadamard_product");
  const Field& f = a.field();
  const Polynomial ann = characteristic_polynomial(
      kronecker(companion(f, annihilator_of(f, a)), companion(f, annihilator_of(f, b))));
  const auto n = static_cast<std::size_t>(2 * ann.degree());
  const auto x = a.terms(n), y = b.terms(n);
  std::vector<Scalar> t;
  for (std::size_t i = 0; i < n; ++i) t.push_back(f.mul(x[i], y[i]));
  return from_annihilator(f, ann, t);
}

LinRecSeq hurwitz_product(const LinRecSeq& a, const LinRecSeq& b) {
  require_same(a, b, "hurwitz_product");
  const Field& f = a.field();
  const Matrix ca = companion(f, annihilator_of(f, a)), cb = companion(f, annihilator_of(f, b));
  const Polynomial ann = characteristic_polynomial(kronecker(ca, Matrix::identity(f, cb.rows())) +
                                                   kronecker(Matrix::identity(f, ca.rows()), cb));
  const auto n = static_cast<std::size_t>(2 * ann.degree());
  const auto x = a.terms(n), y = b.terms(n);
  std::vector<Scalar> t;
  for (std::size_t i = 0; i < n; ++i) {
    Scalar s = f.zero();
    for (std::size_t k = 0; k <= i; ++k) s = f.add(s, f.mul(binomial(f, i, k), f.mul(x[k], y[i - k])));
    t.push_back(s);
  }
  return from_annihilator(f, ann, t);
}

LinRecSeq add(const LinRecSeq& a, const LinRecSeq& b) {
  require_same(a, b, "add");
  const Field& f = a.field();
  const PolynomialRing ring(f);
  const Polynomial l = ring.monic(ring.divmod(ring.mul(a.minimal_polynomial(), b.minimal_polynomial()),
                                              ring.gcd(a.minimal_polynomial(), b.minimal_polynomial())).first);
  const auto n = static_cast<std::size_t>(std::max<long>(1, 2 * l.degree()));
  const auto x = a.terms(n), y = b.terms(n);
  std::vector<Scalar> t;
  for (std::size_t i = 0; i < n; ++i) t.push_back(f.add(x[i], y[i]));
  return from_annihilator(f, l, t);
}

LinRecSeq scale(const LinRecSeq& a, const Scalar& c) {
  const Field& f = a.field();
  std::vector<Scalar> t;
  for (const auto& v : a.initial()) t.push_back(f.mul(c, v));
  return LinRecSeq(f, a.minimal_polynomial(), std::move(t));
}

LinRecSeq shift(const LinRecSeq& a) {
  const auto r = a.order();
  auto t = a.terms(r + 1);
  t.erase(t.begin());
  return LinRecSeq(a.field(), a.minimal_polynomial(), std::move(t));
}

bool is_bilaterally_extendable(const LinRecSeq& f) {
  return !f.field().is_zero(f.minimal_polynomial().coeffs.front());
}

Scalar bilateral_term(const LinRecSeq& s, long n) {
  if (n >= 0) return s.term(static_cast<std::size_t>(n));
  if (!is_bilaterally_extendable(s))
    throw InputError("sequence does not extend to negative indices: its minimal polynomial " +
                     PolynomialRing(s.field()).format(s.minimal_polynomial()) + " has zero constant term");
  const Field& f = s.field();
  const Polynomial& p = s.minimal_polynomial();
  const auto r = static_cast<std::size_t>(p.degree());
  // window holds f_k .. f_{k+r-1}; step back: f_{k-1} = -(1/p_0)(sum_{i>=1} p_i f_{k-1+i})
  std::vector<Scalar> w = s.initial();
  const Scalar inv0 = f.inv(p.coeffs[0]);
  for (long k = 0; k > n; --k) {
    Scalar acc = f.zero();
    for (std::size_t i = 1; i <= r; ++i) acc = f.add(acc, f.mul(p.coeffs[i], w[i - 1]));
    w.insert(w.begin(), f.neg(f.mul(inv0, acc)));
    w.pop_back();
  }
  return w.front();
}

LinRecSeq antipode(const LinRecSeq& s) {
  if (!is_bilaterally_extendable(s))
    throw InputError("antipode needs a bilaterally extendable sequence; minimal polynomial " +
                     PolynomialRing(s.field()).format(s.minimal_polynomial()) + " has zero constant term");
  const Field& f = s.field();
  const PolynomialRing ring(f);
  const Polynomial rev = ring.monic(ring.reversed(s.minimal_polynomial()));
  std::vector<Scalar> t;
  for (long i = 0; i < rev.degree(); ++i) t.push_back(bilateral_term(s, -i));
  return LinRecSeq(f, rev, std::move(t));
}

std::vector<ComultiplicationPair> comultiplication_components(const LinRecSeq& s) {
  const Field& f = s.field();
  const auto r = s.order();
  std::vector<ComultiplicationPair> out;
  if (r == 0) return out;
  const Matrix a = companion(f, s.minimal_polynomial()).transpose();  // state shift: s_{n+1} = A s_n
  std::vector<std::vector<Scalar>> left(r);
  Matrix power = Matrix::identity(f, r);
  for (std::size_t m = 0; m < r; ++m, power = power * a)
    for (std::size_t i = 0; i < r; ++i) left[i].push_back(power(0, i));
  for (std::size_t i = 0; i < r; ++i) {
    auto right = s.terms(i + r);
    right.erase(right.begin(), right.begin() + static_cast<long>(i));
    out.push_back({LinRecSeq(f, s.minimal_polynomial(), left[i]), LinRecSeq(f, s.minimal_polynomial(), right)});
  }
  const auto whole = s.terms(4 * r + 1);
  for (std::size_t m = 0; m <= 2 * r; ++m)
    for (std::size_t n = 0; n <= 2 * r; ++n) {
      Scalar acc = f.zero();
      for (const auto& pr : out) acc = f.add(acc, f.mul(pr.left.term(m), pr.right.term(n)));
      if (!(acc == whole[m + n])) throw std::logic_error("comultiplication components: identity fails");
    }
  return out;
}

Scalar binomial(const Field& f, std::uint64_t n, std::uint64_t k) {
  if (k > n) return f.zero();
  const std::uint32_t p = f.characteristic();
  if (p == 0) {
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    if (z.fits_slong_p()) return f.from_int(z.get_si());
    return f.parse(z.get_str());
  }
  // Lucas: product of digit binomials
  long long acc = 1;
  while (n || k) {
    const std::uint64_t a = n % p, b = k % p;
    if (b > a) return f.zero();
    long long c = 1;
    for (std::uint64_t i = 0; i < b; ++i) c = c * static_cast<long long>(a - i) / static_cast<long long>(i + 1);
    acc = acc * (c % p) % p;
    n /= p;
    k /= p;
  }
  return f.from_int(acc);
}

Polynomial parse_polynomial(const Field& f, std::string_view text, char var) {
  const PolynomialRing ring(f);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw InputError("empty polynomial");
  Polynomial out = ring.zero();
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
    std::size_t j = i;
    while (j < s.size() && s[j] != var && s[j] != '+' && s[j] != '-') ++j;
    std::string coef = s.substr(i, j - i);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    Scalar c = coef.empty() ? f.one() : f.parse(coef);
    std::size_t degree = 0;
    i = j;
    if (i < s.size() && s[i] == var) {
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        std::size_t k = ++i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) throw InputError("bad exponent in polynomial '" + std::string(text) + "'");
        degree = std::stoul(s.substr(i, k - i));
        i = k;
      }
    } else if (coef.empty()) {
      throw InputError("bad term in polynomial '" + std::string(text) + "'");
    }
    if (negative) c = f.neg(c);
    out = ring.add(out, ring.monomial(c, degree));
  }
  return out;
}

}  // namespace cogebra
