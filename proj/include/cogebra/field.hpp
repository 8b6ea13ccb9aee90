#pragma once

// Exact fields: prime fields, finite extensions (towers flattened to a single
// extension of the prime field), the rationals, and rational-function fields
// k(t) over a finite field or Q.
//
// Elements are plain values (Scalar) interpreted through a Field handle, in the
// style of a context object: `F.add(a, b)`. Finite-field elements are encoded as
// integer codes sum_i c_i p^i of their residue coefficients over the prime field;
// code order is the deterministic element order used by every enumeration.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "cogebra/errors.hpp"

namespace cogebra {

enum class FieldKind { prime, extension, rationals, rational_functions };

struct FieldDescriptor {
  FieldKind kind = FieldKind::rationals;
  std::uint32_t p = 0;
  std::shared_ptr<const FieldDescriptor> base;
  // Extension modulus over `base`, low-to-high, as base element codes; monic.
  std::vector<std::uint32_t> modulus;
  std::string variable = "t";

  static FieldDescriptor prime_field(std::uint32_t p);
  static FieldDescriptor extension_of(const FieldDescriptor& base, std::vector<std::uint32_t> modulus);
  static FieldDescriptor rationals_field();
  static FieldDescriptor rational_functions_over(const FieldDescriptor& base, std::string variable = "t");

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b);
};

struct RationalFunction;

class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(std::uint32_t code) : rep_(code) {}
  explicit Scalar(mpq_class value) : rep_(std::move(value)) {}
  explicit Scalar(std::shared_ptr<const RationalFunction> f) : rep_(std::move(f)) {}

  bool is_code() const { return rep_.index() == 0; }
  bool is_rational() const { return rep_.index() == 1; }
  bool is_function() const { return rep_.index() == 2; }

  std::uint32_t code() const { return std::get<0>(rep_); }
  const mpq_class& rational() const { return std::get<1>(rep_); }
  const RationalFunction& function() const { return *std::get<2>(rep_); }

  // Representations are canonical, so structural equality is field equality.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<std::uint32_t, mpq_class, std::shared_ptr<const RationalFunction>> rep_{std::uint32_t{0}};
};

/// Dense univariate polynomial, coefficients low-to-high, no trailing zeros.
struct Polynomial {
  std::vector<Scalar> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// num/den with gcd 1 and den monic; zero is 0/1.
struct RationalFunction {
  Polynomial num;
  Polynomial den;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

namespace detail {

class FieldImpl;

// Table-driven arithmetic on finite-field codes; used by hot loops.
struct FiniteTables {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // flat modulus over GF(p), monic, length n+1
  std::vector<std::uint32_t> exp;      // length 2(q-1)
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> neg;
  std::vector<std::uint16_t> add_table;  // q*q entries when p > 2 and q is small
  std::uint32_t base_generator_image = 0;  // towers: flat code of the base's generator
  std::uint32_t tower_generator_image = 0;  // towers: flat code of the adjoined root

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    if (!add_table.empty()) return add_table[static_cast<std::size_t>(a) * q + b];
    return digit_add(a, b);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg[b]); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp[log[a] + log[b]];
  }
  std::uint32_t inv(std::uint32_t a) const { return exp[(q - 1 - log[a]) % (q - 1)]; }
  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const;
};

}  // namespace detail

class Field {
 public:
  Field() = default;

  const FieldDescriptor& descriptor() const;
  FieldKind kind() const { return descriptor().kind; }
  bool valid() const { return impl_ != nullptr; }
  bool is_finite() const { return finite_ != nullptr; }
  std::uint32_t characteristic() const;
  /// Number of elements for finite fields; 0 otherwise.
  std::uint64_t size() const { return finite_ ? finite_->q : 0; }
  /// Degree over the prime field for finite fields.
  std::uint32_t degree() const { return finite_ ? finite_->n : 0; }
  /// Base field of an extension or rational-function field.
  Field base() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const { return a == one(); }

  /// Finite fields: element with the given code; residues over GF(p).
  Scalar element(std::uint32_t code) const;
  std::vector<std::uint32_t> residues(const Scalar& a) const;
  Scalar from_residues(const std::vector<std::uint32_t>& residues) const;
  /// The adjoined generator: flat root for finite extensions, t for k(t).
  Scalar generator() const;
  /// Rational functions: the constant embedding of a base element.
  Scalar constant(const Scalar& base_element) const;

  std::string format(const Scalar& a) const;
  Scalar parse(std::string_view text) const;
  std::string name() const;

  const detail::FiniteTables* finite_tables() const { return finite_; }
  const detail::FieldImpl& impl() const { return *impl_; }

  friend bool operator==(const Field& a, const Field& b);

 private:
  friend Field make_field(const FieldDescriptor& desc);
  std::shared_ptr<const detail::FieldImpl> impl_;
  const detail::FiniteTables* finite_ = nullptr;
};

/// Builds a field; throws InputError for a nonprime p, a reducible or non-monic
/// modulus, or an unsupported base.
Field make_field(const FieldDescriptor& desc);

/// GF(p^n) with the lexicographically first monic irreducible modulus of degree n.
Field standard_finite_field(std::uint32_t p, std::uint32_t n);
Field rationals();
Field rational_functions(const Field& base, std::string variable = "t");

bool is_prime(std::uint64_t n);

/// A verified field homomorphism. Supported: finite -> finite, finite -> k(t),
/// Q -> Q, Q -> Q(t), k(t) -> k'(t) (t fixed, base mapped).
class Embedding {
 public:
  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  /// Images of the source generators (the flat root for finite extensions).
  const std::vector<Scalar>& generator_images() const { return images_; }
  Scalar operator()(const Scalar& x) const;
  /// [target : source] when finite, 0 when the extension is infinite.
  std::uint64_t degree() const;
  bool is_finite() const { return degree() != 0; }

 private:
  friend Embedding embed(const Field&, const Field&, std::vector<Scalar>);
  Field source_;
  Field target_;
  std::vector<Scalar> images_;
  std::vector<std::uint32_t> code_map_;
  std::shared_ptr<const Embedding> base_map_;
};

/// Verifies the images and builds the embedding. With no images, a finite source
/// is mapped by the least root (in code order) of its modulus in the target.
Embedding embed(const Field& source, const Field& target, std::vector<Scalar> images = {});
Embedding identity_embedding(const Field& f);
/// Every embedding between finite fields, ordered by generator image code.
std::vector<Embedding> all_embeddings(const Field& source, const Field& target);
Embedding compose(const Embedding& first, const Embedding& second);

}  // namespace cogebra
