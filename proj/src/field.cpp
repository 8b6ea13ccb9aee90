#include "cogebra/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cogebra/polynomial.hpp"

namespace cogebra {

// ---------------------------------------------------------------------------
// Descriptors

FieldDescriptor FieldDescriptor::prime_field(std::uint32_t p) {
  FieldDescriptor d;
  d.kind = FieldKind::prime;
  d.p = p;
  return d;
}

FieldDescriptor FieldDescriptor::extension_of(const FieldDescriptor& base, std::vector<std::uint32_t> modulus) {
  FieldDescriptor d;
  d.kind = FieldKind::extension;
  d.base = std::make_shared<const FieldDescriptor>(base);
  d.p = base.p;
  d.modulus = std::move(modulus);
  return d;
}

FieldDescriptor FieldDescriptor::rationals_field() {
  FieldDescriptor d;
  d.kind = FieldKind::rationals;
  return d;
}

FieldDescriptor FieldDescriptor::rational_functions_over(const FieldDescriptor& base, std::string variable) {
  FieldDescriptor d;
  d.kind = FieldKind::rational_functions;
  d.base = std::make_shared<const FieldDescriptor>(base);
  d.p = base.p;
  d.variable = std::move(variable);
  return d;
}

bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case FieldKind::prime:
      return a.p == b.p;
    case FieldKind::extension:
      return *a.base == *b.base && a.modulus == b.modulus;
    case FieldKind::rationals:
      return true;
    case FieldKind::rational_functions:
      return *a.base == *b.base && a.variable == b.variable;
  }
  return false;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  switch (a.rep_.index()) {
    case 0:
      return a.code() == b.code();
    case 1:
      return a.rational() == b.rational();
    default:
      return a.function() == b.function();
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

std::uint32_t FiniteTables::digit_add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    out += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return out;
}

class FieldImpl {
 public:
  explicit FieldImpl(FieldDescriptor d) : desc(std::move(d)) {}
  virtual ~FieldImpl() = default;

  virtual Scalar zero() const = 0;
  virtual Scalar one() const = 0;
  virtual Scalar from_int(long long v) const = 0;
  virtual Scalar add(const Scalar& a, const Scalar& b) const = 0;
  virtual Scalar sub(const Scalar& a, const Scalar& b) const = 0;
  virtual Scalar mul(const Scalar& a, const Scalar& b) const = 0;
  virtual Scalar neg(const Scalar& a) const = 0;
  virtual Scalar inv(const Scalar& a) const = 0;
  virtual bool is_zero(const Scalar& a) const = 0;
  virtual std::string format(const Scalar& a) const = 0;
  virtual Scalar parse(std::string_view text) const = 0;
  virtual std::string name() const = 0;
  virtual std::uint32_t characteristic() const = 0;
  virtual Field base() const { return {}; }
  virtual const FiniteTables* tables() const { return nullptr; }
  virtual Scalar generator() const = 0;

  FieldDescriptor desc;
};

}  // namespace detail

namespace {

using detail::FiniteTables;

std::string trim_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

bool plain_integer(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

struct CoefText {
  bool zero = true;
  bool negative = false;
  std::string magnitude;
};

// Renders sum c_i var^i from high to low degree.
std::string format_terms(const std::vector<CoefText>& coeffs, std::string_view var) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const CoefText& c = coeffs[k];
    if (c.zero) continue;
    if (out.empty()) {
      if (c.negative) out += "-";
    } else {
      out += c.negative ? "-" : "+";
    }
    std::string mag = plain_integer(c.magnitude) ? c.magnitude : "{" + c.magnitude + "}";
    if (k == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

struct TermText {
  bool negative = false;
  std::string coef;  // empty means 1
  std::size_t exponent = 0;
};

// Parses "c*v^e + ..." where c is a decimal integer or a braced base-field string.
std::vector<TermText> parse_terms(const std::string& s, std::string_view var) {
  std::vector<TermText> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw InputError("cannot parse polynomial '" + s + "': " + why); };
  if (s.empty()) fail("empty");
  while (i < s.size()) {
    TermText t;
    if (s[i] == '+' || s[i] == '-') {
      t.negative = s[i] == '-';
      ++i;
    } else if (!out.empty()) {
      fail("expected sign");
    }
    bool have_coef = false;
    if (i < s.size() && s[i] == '{') {
      int depth = 0;
      std::size_t start = i + 1;
      for (; i < s.size(); ++i) {
        if (s[i] == '{') ++depth;
        if (s[i] == '}' && --depth == 0) break;
      }
      if (i >= s.size()) fail("unbalanced brace");
      t.coef = s.substr(start, i - start);
      ++i;
      have_coef = true;
    } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      t.coef = s.substr(start, i - start);
      have_coef = true;
    }
    if (have_coef && i < s.size() && s[i] == '*') ++i;
    if (s.compare(i, var.size(), var) == 0 && !var.empty()) {
      i += var.size();
      t.exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("missing exponent");
        t.exponent = std::stoul(s.substr(start, i - start));
      }
    } else if (!have_coef) {
      fail("unexpected character at " + std::to_string(i));
    }
    out.push_back(std::move(t));
  }
  return out;
}

// Residue-polynomial helpers over GF(p), used before tables exist.
std::vector<std::uint32_t> residues_of(std::uint32_t code, std::uint32_t p, std::uint32_t n) {
  std::vector<std::uint32_t> r(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    r[i] = code % p;
    code /= p;
  }
  return r;
}

std::uint32_t code_of(const std::vector<std::uint32_t>& r, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = r.size(); i-- > 0;) code = code * p + r[i];
  return code;
}

std::vector<std::uint32_t> mulmod_residues(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                           const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t n = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t k = 2 * n; k-- > n;) {
    std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < n; ++i) prod[k - n + i] = (prod[k - n + i] + (p - c) * modulus[i]) % p;
  }
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

FiniteTables build_tables(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  FiniteTables t;
  t.p = p;
  t.n = static_cast<std::uint32_t>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < t.n; ++i) q *= p;
  if (q > (1u << 22)) throw InputError("finite field too large for table arithmetic: q = " + std::to_string(q));
  t.q = static_cast<std::uint32_t>(q);
  t.modulus = std::move(modulus);

  auto mul_codes = [&](std::uint32_t a, std::uint32_t b) {
    return code_of(mulmod_residues(residues_of(a, p, t.n), residues_of(b, p, t.n), t.modulus, p), p);
  };
  auto pow_code = [&](std::uint32_t g, std::uint64_t e) {
    std::uint32_t result = 1;
    while (e) {
      if (e & 1) result = mul_codes(result, g);
      g = mul_codes(g, g);
      e >>= 1;
    }
    return result;
  };
  const auto factors = prime_factors(q - 1);
  std::uint32_t gen = 1;
  for (std::uint32_t g = 1; g < t.q; ++g) {
    bool primitive = true;
    for (auto r : factors)
      if (pow_code(g, (q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      gen = g;
      break;
    }
  }
  t.exp.assign(2 * (q - 1), 0);
  t.log.assign(q, 0);
  std::uint32_t cur = 1;
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    t.exp[i] = cur;
    t.exp[i + q - 1] = cur;
    t.log[cur] = static_cast<std::uint32_t>(i);
    cur = mul_codes(cur, gen);
  }
  t.neg.assign(q, 0);
  for (std::uint32_t a = 0; a < t.q; ++a) {
    auto r = residues_of(a, p, t.n);
    for (auto& c : r) c = (p - c) % p;
    t.neg[a] = code_of(r, p);
  }
  if (p > 2 && q <= 729) {
    t.add_table.assign(q * q, 0);
    for (std::uint32_t a = 0; a < t.q; ++a)
      for (std::uint32_t b = 0; b < t.q; ++b) t.add_table[std::size_t{a} * q + b] = static_cast<std::uint16_t>(t.digit_add(a, b));
  }
  t.tower_generator_image = t.n > 1 ? p : 0;
  return t;
}

// Solves a square system over GF(p) given as rows; returns nullopt if singular.
std::optional<std::vector<std::vector<std::uint32_t>>> invert_mod_p(std::vector<std::vector<std::uint32_t>> a, std::uint32_t p) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::uint32_t>> inv(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  auto inv_elem = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    std::uint64_t s = inv_elem(a[c][c]);
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = static_cast<std::uint32_t>(a[c][j] * s % p);
      inv[c][j] = static_cast<std::uint32_t>(inv[c][j] * s % p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      std::uint64_t f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = static_cast<std::uint32_t>((a[r][j] + (p - f) * a[c][j]) % p);
        inv[r][j] = static_cast<std::uint32_t>((inv[r][j] + (p - f) * inv[c][j]) % p);
      }
    }
  }
  return inv;
}

class FiniteFieldImpl final : public detail::FieldImpl {
 public:
  FiniteFieldImpl(FieldDescriptor d, FiniteTables t, Field base)
      : FieldImpl(std::move(d)), t_(std::move(t)), base_(std::move(base)) {}

  Scalar zero() const override { return Scalar(std::uint32_t{0}); }
  Scalar one() const override { return Scalar(std::uint32_t{1}); }
  Scalar from_int(long long v) const override {
    long long r = v % static_cast<long long>(t_.p);
    if (r < 0) r += t_.p;
    return Scalar(static_cast<std::uint32_t>(r));
  }
  Scalar add(const Scalar& a, const Scalar& b) const override { return Scalar(t_.add(a.code(), b.code())); }
  Scalar sub(const Scalar& a, const Scalar& b) const override { return Scalar(t_.sub(a.code(), b.code())); }
  Scalar mul(const Scalar& a, const Scalar& b) const override { return Scalar(t_.mul(a.code(), b.code())); }
  Scalar neg(const Scalar& a) const override { return Scalar(t_.neg[a.code()]); }
  Scalar inv(const Scalar& a) const override {
    if (a.code() == 0) throw InputError("division by zero in " + name());
    return Scalar(t_.inv(a.code()));
  }
  bool is_zero(const Scalar& a) const override { return a.code() == 0; }
  std::string format(const Scalar& a) const override {
    if (t_.n == 1) return std::to_string(a.code());
    auto r = residues_of(a.code(), t_.p, t_.n);
    std::vector<CoefText> c(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) c[i] = {r[i] == 0, false, std::to_string(r[i])};
    return format_terms(c, "y");
  }
  Scalar parse(std::string_view text) const override {
    std::string s = trim_spaces(text);
    if (t_.n == 1) {
      try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw InputError("trailing characters");
        return from_int(v);
      } catch (const std::exception&) {
        throw InputError("cannot parse GF(" + std::to_string(t_.p) + ") element '" + s + "'");
      }
    }
    std::vector<std::uint32_t> r(t_.n, 0);
    for (const auto& term : parse_terms(s, "y")) {
      if (term.exponent >= t_.n) throw InputError("residue degree too large in '" + s + "'");
      long long c = term.coef.empty() ? 1 : std::stoll(term.coef);
      c %= t_.p;
      if (term.negative) c = (t_.p - c) % t_.p;
      r[term.exponent] = static_cast<std::uint32_t>((r[term.exponent] + c) % t_.p);
    }
    return Scalar(code_of(r, t_.p));
  }
  std::string name() const override {
    return t_.n == 1 ? "GF(" + std::to_string(t_.p) + ")" : "GF(" + std::to_string(t_.p) + "^" + std::to_string(t_.n) + ")";
  }
  std::uint32_t characteristic() const override { return t_.p; }
  Field base() const override { return base_; }
  const FiniteTables* tables() const override { return &t_; }
  Scalar generator() const override { return Scalar(t_.n == 1 ? 1u : t_.p); }

 private:
  FiniteTables t_;
  Field base_;
};

class RationalImpl final : public detail::FieldImpl {
 public:
  explicit RationalImpl(FieldDescriptor d) : FieldImpl(std::move(d)) {}
  Scalar zero() const override { return Scalar(mpq_class(0)); }
  Scalar one() const override { return Scalar(mpq_class(1)); }
  Scalar from_int(long long v) const override { return Scalar(mpq_class(mpz_class(std::to_string(v)))); }
  Scalar add(const Scalar& a, const Scalar& b) const override { return Scalar(mpq_class(a.rational() + b.rational())); }
  Scalar sub(const Scalar& a, const Scalar& b) const override { return Scalar(mpq_class(a.rational() - b.rational())); }
  Scalar mul(const Scalar& a, const Scalar& b) const override { return Scalar(mpq_class(a.rational() * b.rational())); }
  Scalar neg(const Scalar& a) const override { return Scalar(mpq_class(-a.rational())); }
  Scalar inv(const Scalar& a) const override {
    if (a.rational() == 0) throw InputError("division by zero in Q");
    return Scalar(mpq_class(1 / a.rational()));
  }
  bool is_zero(const Scalar& a) const override { return a.rational() == 0; }
  std::string format(const Scalar& a) const override { return a.rational().get_str(); }
  Scalar parse(std::string_view text) const override {
    std::string s = trim_spaces(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    mpq_class v;
    if (s.empty() || v.set_str(s, 10) != 0 || v.get_den() == 0) throw InputError("cannot parse rational '" + s + "'");
    v.canonicalize();
    return Scalar(v);
  }
  std::string name() const override { return "Q"; }
  std::uint32_t characteristic() const override { return 0; }
  Scalar generator() const override { return one(); }
};

class RationalFunctionImpl final : public detail::FieldImpl {
 public:
  RationalFunctionImpl(FieldDescriptor d, Field base) : FieldImpl(std::move(d)), base_(std::move(base)), ring_(base_) {}

  Scalar make(Polynomial num, Polynomial den) const {
    if (den.is_zero()) throw InputError("division by zero in " + name());
    if (num.is_zero()) return zero();
    Polynomial g = ring_.gcd(num, den);
    if (g.degree() > 0) {
      num = ring_.divmod(num, g).first;
      den = ring_.divmod(den, g).first;
    }
    Scalar lc = ring_.leading(den);
    if (!base_.is_one(lc)) {
      Scalar s = base_.inv(lc);
      num = ring_.scale(num, s);
      den = ring_.scale(den, s);
    }
    return Scalar(std::make_shared<const RationalFunction>(RationalFunction{std::move(num), std::move(den)}));
  }
  Scalar from_poly(Polynomial num) const { return make(std::move(num), ring_.one()); }

  Scalar zero() const override { return Scalar(std::make_shared<const RationalFunction>(RationalFunction{{}, ring_.one()})); }
  Scalar one() const override { return from_poly(ring_.one()); }
  Scalar from_int(long long v) const override { return from_poly(ring_.constant(base_.from_int(v))); }
  Scalar add(const Scalar& a, const Scalar& b) const override {
    const auto& x = a.function();
    const auto& y = b.function();
    if (x.den == y.den) return make(ring_.add(x.num, y.num), x.den);
    return make(ring_.add(ring_.mul(x.num, y.den), ring_.mul(y.num, x.den)), ring_.mul(x.den, y.den));
  }
  Scalar sub(const Scalar& a, const Scalar& b) const override { return add(a, neg(b)); }
  Scalar mul(const Scalar& a, const Scalar& b) const override {
    const auto& x = a.function();
    const auto& y = b.function();
    if (x.num.is_zero() || y.num.is_zero()) return zero();
    return make(ring_.mul(x.num, y.num), ring_.mul(x.den, y.den));
  }
  Scalar neg(const Scalar& a) const override {
    const auto& x = a.function();
    return Scalar(std::make_shared<const RationalFunction>(RationalFunction{ring_.neg(x.num), x.den}));
  }
  Scalar inv(const Scalar& a) const override {
    const auto& x = a.function();
    if (x.num.is_zero()) throw InputError("division by zero in " + name());
    return make(x.den, x.num);
  }
  bool is_zero(const Scalar& a) const override { return a.function().num.is_zero(); }

  std::string format_poly(const Polynomial& f) const {
    std::vector<CoefText> c(f.coeffs.size());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
      const Scalar& s = f.coeffs[i];
      if (base_.is_zero(s)) continue;
      c[i].zero = false;
      if (base_.kind() == FieldKind::rationals && s.rational() < 0) {
        c[i].negative = true;
        c[i].magnitude = base_.format(base_.neg(s));
      } else {
        c[i].magnitude = base_.format(s);
      }
    }
    return format_terms(c, desc.variable);
  }
  std::string format(const Scalar& a) const override {
    const auto& x = a.function();
    if (x.den.degree() == 0) return format_poly(x.num);
    return "(" + format_poly(x.num) + ")/(" + format_poly(x.den) + ")";
  }
  Polynomial parse_poly(const std::string& s) const {
    Polynomial out;
    for (const auto& term : parse_terms(s, desc.variable)) {
      Scalar c = term.coef.empty() ? base_.one() : base_.parse(term.coef);
      if (term.negative) c = base_.neg(c);
      out = ring_.add(out, ring_.monomial(c, term.exponent));
    }
    return out;
  }
  Scalar parse(std::string_view text) const override {
    std::string s = trim_spaces(text);
    // Split at a top-level '/' (outside parentheses and braces).
    int depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      if (c == '(' || c == '{') ++depth;
      if (c == ')' || c == '}') --depth;
      if (c == '/' && depth == 0) slash = i;
    }
    auto strip = [](std::string part) {
      if (part.size() >= 2 && part.front() == '(' && part.back() == ')') return part.substr(1, part.size() - 2);
      return part;
    };
    if (slash == std::string::npos) return from_poly(parse_poly(strip(s)));
    return make(parse_poly(strip(s.substr(0, slash))), parse_poly(strip(s.substr(slash + 1))));
  }
  std::string name() const override { return base_.name() + "(" + desc.variable + ")"; }
  std::uint32_t characteristic() const override { return base_.characteristic(); }
  Field base() const override { return base_; }
  Scalar generator() const override { return from_poly(ring_.x()); }

  const PolynomialRing& ring() const { return ring_; }

 private:
  Field base_;
  PolynomialRing ring_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Field handle

const FieldDescriptor& Field::descriptor() const {
  if (!impl_) throw InputError("use of an uninitialised field");
  return impl_->desc;
}
std::uint32_t Field::characteristic() const { return impl_->characteristic(); }
Field Field::base() const { return impl_->base(); }
Scalar Field::zero() const { return impl_->zero(); }
Scalar Field::one() const { return impl_->one(); }
Scalar Field::from_int(long long v) const { return impl_->from_int(v); }
Scalar Field::add(const Scalar& a, const Scalar& b) const { return impl_->add(a, b); }
Scalar Field::sub(const Scalar& a, const Scalar& b) const { return impl_->sub(a, b); }
Scalar Field::mul(const Scalar& a, const Scalar& b) const { return impl_->mul(a, b); }
Scalar Field::neg(const Scalar& a) const { return impl_->neg(a); }
Scalar Field::inv(const Scalar& a) const { return impl_->inv(a); }
bool Field::is_zero(const Scalar& a) const { return impl_->is_zero(a); }
std::string Field::format(const Scalar& a) const { return impl_->format(a); }
Scalar Field::parse(std::string_view text) const { return impl_->parse(text); }
std::string Field::name() const { return impl_->name(); }
Scalar Field::generator() const { return impl_->generator(); }

Scalar Field::element(std::uint32_t code) const {
  if (!finite_ || code >= finite_->q) throw InputError("element code out of range for " + name());
  return Scalar(code);
}

std::vector<std::uint32_t> Field::residues(const Scalar& a) const {
  if (!finite_) throw InputError("residues are defined for finite fields only");
  return residues_of(a.code(), finite_->p, finite_->n);
}

Scalar Field::from_residues(const std::vector<std::uint32_t>& r) const {
  if (!finite_ || r.size() > finite_->n) throw InputError("residue vector does not fit " + (valid() ? name() : "field"));
  std::vector<std::uint32_t> full(finite_->n, 0);
  for (std::size_t i = 0; i < r.size(); ++i) full[i] = r[i] % finite_->p;
  return Scalar(code_of(full, finite_->p));
}

Scalar Field::constant(const Scalar& base_element) const {
  auto* rf = dynamic_cast<const RationalFunctionImpl*>(impl_.get());
  if (!rf) throw InputError("constant(): not a rational-function field");
  return rf->from_poly(rf->ring().constant(base_element));
}

bool operator==(const Field& a, const Field& b) {
  if (a.impl_ == b.impl_) return true;
  if (!a.impl_ || !b.impl_) return false;
  return a.impl_->desc == b.impl_->desc;
}

Field make_field(const FieldDescriptor& desc) {
  Field f;
  switch (desc.kind) {
    case FieldKind::prime: {
      if (!is_prime(desc.p)) throw InputError("field characteristic " + std::to_string(desc.p) + " is not prime");
      auto t = build_tables(desc.p, {0, 1});
      f.impl_ = std::make_shared<FiniteFieldImpl>(desc, std::move(t), Field{});
      break;
    }
    case FieldKind::extension: {
      if (!desc.base) throw InputError("extension without base field");
      Field base = make_field(*desc.base);
      if (!base.is_finite()) throw InputError("extensions are supported over finite fields only");
      const auto* bt = base.finite_tables();
      if (desc.modulus.size() < 2) throw InputError("extension modulus must have degree >= 1");
      if (desc.modulus.back() != 1) throw InputError("extension modulus must be monic");
      Polynomial mod;
      for (auto c : desc.modulus) {
        if (c >= bt->q) throw InputError("modulus coefficient code out of range");
        mod.coeffs.push_back(Scalar(c));
      }
      PolynomialRing ring(base);
      if (!ring.is_irreducible(mod))
        throw InputError("extension modulus " + ring.format(mod, "y") + " is reducible over " + base.name());
      const std::uint32_t p = bt->p;
      const std::uint32_t k = static_cast<std::uint32_t>(desc.modulus.size() - 1);
      FiniteTables t;
      if (bt->n == 1) {
        t = build_tables(p, desc.modulus);
      } else {
        // Tower: find a primitive element for GF(p) inside B[y]/(mod) and flatten.
        const std::uint32_t m = bt->n;
        const std::uint32_t n = m * k;
        using Elem = std::vector<std::uint32_t>;  // k base codes
        auto tower_mul = [&](const Elem& a, const Elem& b) {
          std::vector<std::uint32_t> prod(2 * k, 0);
          for (std::uint32_t i = 0; i < k; ++i)
            for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = bt->add(prod[i + j], bt->mul(a[i], b[j]));
          for (std::uint32_t d = 2 * k; d-- > k;) {
            std::uint32_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (std::uint32_t i = 0; i < k; ++i) prod[d - k + i] = bt->sub(prod[d - k + i], bt->mul(c, desc.modulus[i]));
          }
          return Elem(prod.begin(), prod.begin() + k);
        };
        auto coords = [&](const Elem& a) {
          std::vector<std::uint32_t> out;
          for (auto c : a) {
            auto r = residues_of(c, p, m);
            out.insert(out.end(), r.begin(), r.end());
          }
          return out;
        };
        std::uint64_t tower_size = 1;
        for (std::uint32_t i = 0; i < n; ++i) tower_size *= p;
        std::optional<std::vector<std::vector<std::uint32_t>>> inv_basis;
        std::vector<std::vector<std::uint32_t>> power_coords;
        Elem alpha_n;
        for (std::uint64_t code = 1; code < tower_size && !inv_basis; ++code) {
          Elem alpha(k);
          std::uint64_t c = code;
          for (std::uint32_t i = 0; i < k; ++i) {
            alpha[i] = static_cast<std::uint32_t>(c % bt->q);
            c /= bt->q;
          }
          Elem cur(k, 0);
          cur[0] = 1;
          power_coords.clear();
          for (std::uint32_t i = 0; i < n; ++i) {
            power_coords.push_back(coords(cur));
            cur = tower_mul(cur, alpha);
          }
          alpha_n = cur;
          // Columns are the powers; rows coordinates. Invert the transpose layout.
          std::vector<std::vector<std::uint32_t>> cols(n, std::vector<std::uint32_t>(n));
          for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j) cols[j][i] = power_coords[i][j];
          inv_basis = invert_mod_p(cols, p);
        }
        if (!inv_basis) throw InputError("no primitive element found while flattening tower");
        auto flat_code = [&](const Elem& a) {
          auto c = coords(a);
          std::vector<std::uint32_t> r(n, 0);
          for (std::uint32_t i = 0; i < n; ++i) {
            std::uint64_t s = 0;
            for (std::uint32_t j = 0; j < n; ++j) s += std::uint64_t{(*inv_basis)[i][j]} * c[j];
            r[i] = static_cast<std::uint32_t>(s % p);
          }
          return code_of(r, p);
        };
        auto an = residues_of(flat_code(alpha_n), p, n);
        std::vector<std::uint32_t> flat_mod(n + 1);
        for (std::uint32_t i = 0; i < n; ++i) flat_mod[i] = (p - an[i]) % p;
        flat_mod[n] = 1;
        t = build_tables(p, flat_mod);
        Elem bgen(k, 0);
        bgen[0] = p;  // the base's own flat generator has code p
        Elem tgen(k, 0);
        if (k > 1)
          tgen[1] = 1;
        else
          tgen[0] = bt->neg[desc.modulus[0]];
        t.base_generator_image = flat_code(bgen);
        t.tower_generator_image = flat_code(tgen);
      }
      f.impl_ = std::make_shared<FiniteFieldImpl>(desc, std::move(t), base);
      break;
    }
    case FieldKind::rationals:
      f.impl_ = std::make_shared<RationalImpl>(desc);
      break;
    case FieldKind::rational_functions: {
      if (!desc.base) throw InputError("rational-function field without base");
      Field base = make_field(*desc.base);
      if (base.kind() == FieldKind::rational_functions)
        throw InputError("rational-function base must be a finite field or Q");
      if (desc.variable.empty() || desc.variable == "y") throw InputError("invalid rational-function variable name");
      f.impl_ = std::make_shared<RationalFunctionImpl>(desc, base);
      break;
    }
  }
  f.finite_ = f.impl_->tables();
  return f;
}

Field standard_finite_field(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw InputError("extension degree must be >= 1");
  auto prime = FieldDescriptor::prime_field(p);
  if (n == 1) return make_field(prime);
  Field fp = make_field(prime);
  PolynomialRing ring(fp);
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> mod(n + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < n; ++i) {
      mod[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    mod[n] = 1;
    Polynomial f;
    for (auto x : mod) f.coeffs.push_back(Scalar(x));
    if (ring.is_irreducible(f)) return make_field(FieldDescriptor::extension_of(prime, mod));
  }
  throw InputError("no irreducible polynomial found");
}

Field rationals() { return make_field(FieldDescriptor::rationals_field()); }

Field rational_functions(const Field& base, std::string variable) {
  return make_field(FieldDescriptor::rational_functions_over(base.descriptor(), std::move(variable)));
}

// ---------------------------------------------------------------------------
// Embeddings

namespace {

Scalar eval_modulus_at(const Field& target, const std::vector<std::uint32_t>& modulus, const Scalar& at) {
  Scalar acc = target.zero();
  for (std::size_t i = modulus.size(); i-- > 0;) acc = target.add(target.mul(acc, at), target.from_int(modulus[i]));
  return acc;
}

}  // namespace

Scalar Embedding::operator()(const Scalar& x) const {
  const FieldKind sk = source_.kind();
  const FieldKind tk = target_.kind();
  if (source_.is_finite()) {
    Scalar img(code_map_.at(x.code()));
    return tk == FieldKind::rational_functions ? target_.constant(img) : img;
  }
  if (sk == FieldKind::rationals) return tk == FieldKind::rationals ? x : target_.constant(x);
  // k(t) -> k'(t)
  const auto& f = x.function();
  PolynomialRing ring(target_.base());
  Polynomial num, den;
  for (const auto& c : f.num.coeffs) num.coeffs.push_back((*base_map_)(c));
  for (const auto& c : f.den.coeffs) den.coeffs.push_back((*base_map_)(c));
  Scalar t = target_.generator();
  Scalar n = target_.zero(), d = target_.zero();
  for (std::size_t i = num.coeffs.size(); i-- > 0;) n = target_.add(target_.mul(n, t), target_.constant(num.coeffs[i]));
  for (std::size_t i = den.coeffs.size(); i-- > 0;) d = target_.add(target_.mul(d, t), target_.constant(den.coeffs[i]));
  return target_.div(n, d);
}

std::uint64_t Embedding::degree() const {
  if (source_.is_finite() && target_.is_finite()) return target_.degree() / source_.degree();
  if (source_.kind() == FieldKind::rationals && target_.kind() == FieldKind::rationals) return 1;
  if (source_.kind() == FieldKind::rational_functions && target_.kind() == FieldKind::rational_functions)
    return base_map_->degree();
  return 0;
}

Embedding embed(const Field& source, const Field& target, std::vector<Scalar> images) {
  if (source.characteristic() != target.characteristic())
    throw InputError("no common prime subfield between " + source.name() + " and " + target.name());
  Embedding e;
  e.source_ = source;
  e.target_ = target;
  if (source.is_finite()) {
    Field finite_target = target.kind() == FieldKind::rational_functions ? target.base() : target;
    if (!finite_target.is_finite()) throw InputError("cannot embed " + source.name() + " into " + target.name());
    const auto* st = source.finite_tables();
    if (finite_target.degree() % st->n != 0)
      throw InputError("no root of the modulus of " + source.name() + " in " + finite_target.name());
    Scalar beta = finite_target.one();
    if (st->n > 1) {
      if (images.empty()) {
        for (std::uint32_t c = 0; c < finite_target.size(); ++c) {
          if (finite_target.is_zero(eval_modulus_at(finite_target, st->modulus, Scalar(c)))) {
            images.push_back(Scalar(c));
            break;
          }
        }
        if (images.empty()) throw InputError("no root of the modulus of " + source.name() + " in " + finite_target.name());
      }
      if (images.size() != 1) throw InputError("finite embeddings take exactly one generator image");
      beta = images[0];
      if (!beta.is_code() || beta.code() >= finite_target.size()) throw InputError("generator image is not an element of the target");
      if (!finite_target.is_zero(eval_modulus_at(finite_target, st->modulus, beta)))
        throw InputError("generator image violates the source modulus relation");
    } else if (!images.empty()) {
      throw InputError("prime fields take no generator images");
    }
    e.code_map_.resize(st->q);
    std::vector<Scalar> powers{finite_target.one()};
    for (std::uint32_t i = 1; i < st->n; ++i) powers.push_back(finite_target.mul(powers.back(), beta));
    for (std::uint32_t c = 0; c < st->q; ++c) {
      auto r = residues_of(c, st->p, st->n);
      Scalar acc = finite_target.zero();
      for (std::uint32_t i = 0; i < st->n; ++i)
        acc = finite_target.add(acc, finite_target.mul(finite_target.from_int(r[i]), powers[i]));
      e.code_map_[c] = acc.code();
    }
    e.images_ = std::move(images);
    return e;
  }
  if (source.kind() == FieldKind::rationals) {
    if (!images.empty()) throw InputError("Q takes no generator images");
    if (target.kind() == FieldKind::rationals ||
        (target.kind() == FieldKind::rational_functions && target.base().kind() == FieldKind::rationals))
      return e;
    throw InputError("cannot embed Q into " + target.name());
  }
  if (source.kind() == FieldKind::rational_functions && target.kind() == FieldKind::rational_functions) {
    if (!images.empty()) throw InputError("rational-function embeddings fix the variable and take base images only");
    e.base_map_ = std::make_shared<const Embedding>(embed(source.base(), target.base()));
    return e;
  }
  throw InputError("unsupported embedding " + source.name() + " -> " + target.name());
}

Embedding identity_embedding(const Field& f) {
  if (f.is_finite() && f.degree() > 1) return embed(f, f, {f.generator()});
  return embed(f, f);
}

std::vector<Embedding> all_embeddings(const Field& source, const Field& target) {
  if (!source.is_finite() || !target.is_finite()) throw InputError("all_embeddings: finite fields only");
  if (source.characteristic() != target.characteristic() || target.degree() % source.degree() != 0) return {};
  if (source.degree() == 1) return {embed(source, target)};
  std::vector<Embedding> out;
  const auto* st = source.finite_tables();
  for (std::uint32_t c = 0; c < target.size(); ++c)
    if (target.is_zero(eval_modulus_at(target, st->modulus, Scalar(c)))) out.push_back(embed(source, target, {Scalar(c)}));
  return out;
}

Embedding compose(const Embedding& first, const Embedding& second) {
  if (!(first.target() == second.source())) throw FieldMismatch("compose: target/source mismatch");
  const Field& s = first.source();
  if (s.is_finite() && s.degree() > 1) return embed(s, second.target(), {second(first(s.generator()))});
  return embed(s, second.target());
}

}  // namespace cogebra
