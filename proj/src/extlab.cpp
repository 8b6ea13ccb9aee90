#include "cogebra/extlab.hpp"

namespace cogebra {

namespace {

Field function_field(std::uint32_t p) {
  if (p != 0 && !is_prime(p)) throw InputError("extension lab: p must be prime or 0 (rationals)");
  return rational_functions(p == 0 ? rationals() : standard_finite_field(p, 1));
}

// Prime-field residues of a matrix over a finite field, row-major.
Vector residue_vector(const Matrix& m, const Field& prime) {
  const Field& f = m.field();
  Vector v;
  for (const auto& x : m.data())
    for (auto r : f.residues(x)) v.push_back(prime.element(r));
  return v;
}

std::string describe(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s;
}

bool strictly_increasing(const std::vector<std::size_t>& dims) {
  for (std::size_t i = 1; i < dims.size(); ++i)
    if (dims[i] <= dims[i - 1]) return false;
  return !dims.empty();
}

std::vector<Matrix> powers(const Matrix& m, std::size_t n) {
  std::vector<Matrix> out{m};
  while (out.size() < n) out.push_back(out.back() * m);
  return out;
}

}  // namespace

std::optional<std::size_t> generated_algebra_dimension(const Embedding& e, const std::vector<Matrix>& gens,
                                                       std::size_t cap) {
  if (!e.is_finite() || !e.target().is_finite())
    throw InputError("generated_algebra_dimension: needs a finite extension of finite fields");
  const Field& big = e.target();
  const Field prime = standard_finite_field(big.characteristic(), 1);
  std::size_t d = gens.empty() ? 1 : gens[0].rows();
  for (const auto& g : gens) {
    if (!(g.field() == big)) throw FieldMismatch("generated_algebra_dimension: generators over another field");
    if (g.rows() != d || g.cols() != d) throw InputError("generated_algebra_dimension: generators must be square of one size");
  }
  // the k-span of a set is the prime-field span of its multiples by a prime-field basis of k
  std::vector<Scalar> kbasis{big.one()};
  const Scalar beta = e(e.source().generator());
  for (std::uint32_t i = 1; i < e.source().degree(); ++i) kbasis.push_back(big.mul(kbasis.back(), beta));
  const std::size_t kdeg = kbasis.size();
  EchelonBasis ech(prime, d * d * big.degree());
  std::vector<Matrix> kept;
  auto add = [&](const Matrix& m) {
    for (const auto& c : kbasis) {
      const Matrix x = m.scaled(c);
      if (ech.insert(residue_vector(x, prime))) kept.push_back(x);
    }
  };
  add(Matrix::identity(big, d));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept.size() / kdeg > cap) return std::nullopt;
    for (const auto& g : gens) add(kept[i] * g);
  }
  if (kept.size() / kdeg > cap) return std::nullopt;
  return kept.size() / kdeg;
}

std::vector<std::size_t> base_span_dimensions(const std::vector<Matrix>& mats, std::size_t degree_cap) {
  std::vector<std::size_t> out;
  if (mats.empty()) return out;
  const Field& f = mats[0].field();
  if (f.kind() != FieldKind::rational_functions) throw InputError("base_span_dimensions: matrices must be over k(t)");
  const Field k = f.base();
  const PolynomialRing ring(k);
  // a common denominator turns each matrix into polynomial entries
  Polynomial den = ring.one();
  std::size_t top = 0;
  for (const auto& m : mats) {
    if (!(m.field() == f)) throw FieldMismatch("base_span_dimensions: matrices over different fields");
    for (const auto& x : m.data()) {
      if (f.is_zero(x)) continue;
      const auto& r = x.function();
      const auto deg = static_cast<std::size_t>(std::max(r.num.degree(), r.den.degree()));
      if (deg > degree_cap) throw BudgetExceeded("rational function degree", static_cast<double>(deg), degree_cap);
      den = ring.divmod(ring.mul(den, r.den), ring.gcd(den, r.den)).first;
    }
  }
  std::vector<std::vector<Polynomial>> entries;
  for (const auto& m : mats) {
    std::vector<Polynomial> row;
    for (const auto& x : m.data()) {
      if (f.is_zero(x)) {
        row.push_back(ring.zero());
        continue;
      }
      const auto& r = x.function();
      row.push_back(ring.mul(r.num, ring.divmod(den, r.den).first));
      top = std::max(top, static_cast<std::size_t>(std::max<long>(0, row.back().degree())));
    }
    entries.push_back(std::move(row));
  }
  const std::size_t width = top + 1;
  EchelonBasis ech(k, mats[0].data().size() * width);
  for (const auto& row : entries) {
    Vector v(mats[0].data().size() * width, k.zero());
    for (std::size_t i = 0; i < row.size(); ++i)
      for (std::size_t c = 0; c < row[i].coeffs.size(); ++c) v[i * width + c] = row[i].coeffs[c];
    ech.insert(std::move(v));
    out.push_back(ech.rank());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

Json to_json(const WitnessReport& r) {
  return Json{{"experiment", r.experiment},
              {"parameters", r.parameters},
              {"verdict", r.verdict},
              {"statement", r.statement},
              {"dimensions", r.dimensions},
              {"witness", r.witness}};
}

WitnessReport witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("experiment") || !j.contains("verdict"))
    throw InputError("witness report: expected an object with \"experiment\" and \"verdict\"");
  WitnessReport r;
  r.experiment = j.at("experiment").get<std::string>();
  r.parameters = j.value("parameters", Json::object());
  r.verdict = j.at("verdict").get<bool>();
  r.statement = j.value("statement", std::string());
  r.dimensions = j.value("dimensions", std::vector<std::size_t>{});
  r.witness = j.value("witness", Json::object());
  return r;
}

WitnessReport transcendental_character_check(std::uint32_t p, std::size_t D, std::uint64_t exhaustive_limit) {
  const Field kt = function_field(p);
  const Field k = kt.base();
  const PolynomialRing ring(k);
  WitnessReport r;
  r.experiment = "transcendental-character";
  r.parameters = Json{{"p", p}, {"D", D}};
  std::uint64_t total = 0;
  bool exhaustive = p != 0;
  if (exhaustive) {
    total = 1;
    for (std::size_t i = 0; i <= D && exhaustive; ++i) {
      total *= p;
      if (total > exhaustive_limit) exhaustive = false;
    }
    --total;
  }
  Json values = Json::array();
  std::size_t zeros = 0;
  auto evaluate = [&](const Polynomial& poly) {
    // x -> t: the polynomial read in t
    Scalar v = kt.zero(), power = kt.one();
    for (const auto& c : poly.coeffs) {
      v = kt.add(v, kt.mul(kt.constant(c), power));
      power = kt.mul(power, kt.generator());
    }
    if (kt.is_zero(v)) ++zeros;
    values.push_back(Json{{"polynomial", ring.format(poly)}, {"value", kt.format(v)}});
  };
  if (exhaustive) {
    for (std::uint64_t code = 1; code <= total; ++code) {
      Polynomial poly;
      for (std::uint64_t c = code; c; c /= p) poly.coeffs.push_back(k.from_int(static_cast<long long>(c % p)));
      evaluate(poly);
    }
    r.verdict = zeros == 0;
  } else {
    std::vector<Matrix> images;
    for (std::size_t i = 0; i <= D; ++i) {
      evaluate(ring.monomial(k.one(), i));
      Matrix m(kt, 1, 1);
      m(0, 0) = kt.parse(values.back()["value"].get<std::string>());
      images.push_back(m);
    }
    r.dimensions = base_span_dimensions(images);
    r.verdict = zeros == 0 && r.dimensions.back() == D + 1;
  }
  r.witness = Json{{"field", field_to_json(kt)}, {"exhaustive", exhaustive}, {"checked", values.size()}, {"evaluations", values}};
  r.statement = r.verdict ? "x -> t is nonzero on every nonzero polynomial of degree <= " + std::to_string(D) +
                                ", so it annihilates no nonzero ideal generated in that degree: not in (k[x]^o)_k' at level " +
                                std::to_string(D)
                          : "a nonzero polynomial of degree <= " + std::to_string(D) + " vanishes at t";
  return r;
}

namespace {

WitnessReport growth_report(const std::string& name, std::uint32_t p, std::size_t N, const std::vector<Matrix>& mats,
                            std::size_t cap) {
  WitnessReport r;
  r.experiment = name;
  r.parameters = Json{{"p", p}, {"N", N}};
  r.dimensions = base_span_dimensions(mats, cap);
  r.verdict = strictly_increasing(r.dimensions) && r.dimensions.size() == N;
  r.statement = (r.verdict ? "span dimension strictly increasing through N = " : "span dimension stalls before N = ") +
                std::to_string(N) + " (" + describe(r.dimensions) + ")";
  return r;
}

}  // namespace

WitnessReport matrix_power_span_growth(std::uint32_t p, std::size_t N, std::size_t degree_cap) {
  if (N == 0) throw InputError("matrix_power_span_growth: N must be at least 1");
  const Field kt = function_field(p);
  const Scalar t = kt.generator();
  Matrix m(kt, 2, 2);
  m(0, 0) = t;
  m(0, 1) = kt.sub(kt.mul(t, t), t);
  m(1, 1) = kt.neg(t);
  WitnessReport r = growth_report("matrix-span", p, N, powers(m, N), degree_cap);
  r.witness = Json{{"field", field_to_json(kt)}, {"matrix", matrix_to_json(m)}};
  return r;
}

WitnessReport nilpotent_witness_span(std::uint32_t p, std::size_t N, std::size_t degree_cap) {
  if (N == 0) throw InputError("nilpotent_witness_span: N must be at least 1");
  const Field kt = function_field(p);
  const Matrix x = Matrix::from_ints(kt, {{0, 1}, {0, 0}});
  const Matrix swap = Matrix::from_ints(kt, {{0, 1}, {1, 0}});
  const Matrix xp = swap * x * swap;  // e21
  const Matrix prod = (x * xp).scaled(kt.generator());
  WitnessReport r = growth_report("nilpotent-span", p, N, powers(prod, N), degree_cap);
  const bool square_zero = (x * x).is_zero();
  const bool not_nilpotent = !(powers(x * xp, 3).back().is_zero());
  r.verdict = r.verdict && square_zero && not_nilpotent;
  r.witness = Json{{"field", field_to_json(kt)},
                   {"x", matrix_to_json(x)},
                   {"x_prime", matrix_to_json(xp)},
                   {"x_squared_zero", square_zero},
                   {"product_not_nilpotent", not_nilpotent}};
  return r;
}

WitnessReport dualfields_experiment(std::uint32_t p, const std::vector<std::uint32_t>& exts, std::size_t d,
                                    std::uint32_t m, std::size_t d_ext, const ProductOptions& opt) {
  if (exts.empty()) throw InputError("dualfields: at least one extension degree");
  const Field base = standard_finite_field(p, 1);
  Family family;
  for (auto n : exts) {
    if (n == 0) throw InputError("dualfields: extension degrees must be positive");
    family.push_back(dual_field_coalgebra(embed(base, standard_finite_field(p, n))));
  }
  const Field big = standard_finite_field(p, m);
  const Embedding e = embed(base, big);
  const Family extended = scalar_extend(family, e);
  const VanishingReport below = vanishing_check(family, d, opt);
  const VanishingReport above = vanishing_check(extended, d_ext, opt);
  WitnessReport r;
  r.experiment = "dualfields";
  r.parameters = Json{{"p", p}, {"exts", exts}, {"d", d}, {"m", m}, {"d_ext", d_ext}};
  r.verdict = below.vanishes && !above.vanishes;
  r.witness = Json{{"source", Json{{"field", field_to_json(base)}, {"report", vanishing_to_json(family, below)}}},
                   {"target", Json{{"field", field_to_json(big)}, {"report", vanishing_to_json(extended, above)}}}};
  r.statement = std::string("over ") + base.name() + ": " +
                (below.vanishes ? "no nonzero joint comodule of dimension <= " + std::to_string(d)
                                : "a joint comodule of dimension " + std::to_string(below.first_dim)) +
                "; over " + big.name() + ": " +
                (above.vanishes ? "none of dimension <= " + std::to_string(d_ext)
                                : "a joint comodule of dimension " + std::to_string(above.first_dim));
  return r;
}

// ---------------------------------------------------------------------------
// Revalidation

namespace {

bool fail(std::string* reason, const std::string& why) {
  if (reason) *reason = why;
  return false;
}

std::size_t param(const WitnessReport& r, const char* key) {
  if (!r.parameters.contains(key)) throw InputError(std::string("witness report: missing parameter ") + key);
  return r.parameters.at(key).get<std::size_t>();
}

}  // namespace

bool revalidate(const WitnessReport& r, std::string* reason) {
  try {
    if (r.experiment == "matrix-span" || r.experiment == "nilpotent-span") {
      const Field kt = field_from_json(r.witness.at("field"));
      const std::size_t N = param(r, "N");
      Matrix gen;
      if (r.experiment == "matrix-span") {
        gen = matrix_from_json(kt, r.witness.at("matrix"));
      } else {
        const Matrix x = matrix_from_json(kt, r.witness.at("x")), xp = matrix_from_json(kt, r.witness.at("x_prime"));
        if (r.verdict && !(x * x).is_zero()) return fail(reason, "x is not square zero");
        if (r.verdict && powers(x * xp, 3).back().is_zero()) return fail(reason, "x x' is nilpotent");
        gen = (x * xp).scaled(kt.generator());
      }
      const auto dims = base_span_dimensions(powers(gen, N));
      if (dims != r.dimensions) return fail(reason, "recomputed dimensions " + describe(dims) + " differ");
      if ((strictly_increasing(dims) && dims.size() == N) != r.verdict) return fail(reason, "verdict does not match the dimensions");
      return true;
    }
    if (r.experiment == "transcendental-character") {
      const Field kt = field_from_json(r.witness.at("field"));
      const PolynomialRing ring(kt.base());
      const auto p = static_cast<std::uint32_t>(param(r, "p"));
      const std::size_t D = param(r, "D");
      const bool exhaustive = r.witness.at("exhaustive").get<bool>();
      const auto& evals = r.witness.at("evaluations");
      std::size_t zeros = 0;
      std::vector<Matrix> images;
      for (const auto& e : evals) {
        const Polynomial poly = parse_polynomial(kt.base(), e.at("polynomial").get<std::string>());
        if (poly.is_zero() || poly.degree() > static_cast<long>(D)) return fail(reason, "evaluated polynomial out of range");
        Scalar v = kt.zero(), power = kt.one();
        for (const auto& c : poly.coeffs) {
          v = kt.add(v, kt.mul(kt.constant(c), power));
          power = kt.mul(power, kt.generator());
        }
        if (!(v == kt.parse(e.at("value").get<std::string>()))) return fail(reason, "stored value differs from evaluation");
        if (kt.is_zero(v)) ++zeros;
        Matrix m(kt, 1, 1);
        m(0, 0) = v;
        images.push_back(m);
      }
      bool ok = zeros == 0;
      if (exhaustive) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i <= D; ++i) total *= p;
        if (evals.size() != total - 1) return fail(reason, "exhaustive list is incomplete");
      } else {
        ok = ok && evals.size() == D + 1 && base_span_dimensions(images).back() == D + 1;
      }
      if (ok != r.verdict) return fail(reason, "verdict does not match the evaluations");
      return true;
    }
    if (r.experiment == "dualfields") {
      const auto p = static_cast<std::uint32_t>(param(r, "p"));
      const auto exts = r.parameters.at("exts").get<std::vector<std::uint32_t>>();
      const std::size_t d = param(r, "d"), d_ext = param(r, "d_ext");
      const auto m = static_cast<std::uint32_t>(param(r, "m"));
      const Field base = standard_finite_field(p, 1);
      Family family;
      for (auto n : exts) family.push_back(dual_field_coalgebra(embed(base, standard_finite_field(p, n))));
      const Family extended = scalar_extend(family, embed(base, standard_finite_field(p, m)));
      // each side: the stored simple dimensions, the semigroup argument and the witness
      auto side = [&](const Family& fam, const Json& rep, std::size_t level, bool& vanishes) -> bool {
        const auto dims = rep.at("simple_dims").get<std::vector<std::vector<std::size_t>>>();
        if (dims != factor_simple_dims(fam)) return fail(reason, "stored simple dimensions differ");
        std::size_t first = 0;
        for (std::size_t e = 1; e <= level && !first; ++e)
          if (joint_dimension_possible(dims, e)) first = e;
        vanishes = first == 0;
        if (vanishes != rep.at("vanishes").get<bool>()) return fail(reason, "vanishing flag contradicts the simple dimensions");
        if (!vanishes) {
          if (rep.at("witness").is_null()) return fail(reason, "missing witness comodule");
          const JointComodule w = joint_comodule_from_json(fam, rep.at("witness"));
          if (w.dim == 0 || w.dim > level) return fail(reason, "witness has the wrong dimension");
          for (const auto& s : w.structures)
            if (validate_comodule(s)) return fail(reason, "witness is not a comodule");
        }
        return true;
      };
      bool below = false, above = false;
      if (!side(family, r.witness.at("source").at("report"), d, below)) return false;
      if (!side(extended, r.witness.at("target").at("report"), d_ext, above)) return false;
      if ((below && !above) != r.verdict) return fail(reason, "verdict does not match the two sides");
      return true;
    }
    return fail(reason, "unknown experiment '" + r.experiment + "'");
  } catch (const Json::exception& e) {
    return fail(reason, std::string("malformed evidence: ") + e.what());
  } catch (const InputError& e) {
    return fail(reason, std::string("malformed evidence: ") + e.what());
  }
}

}  // namespace cogebra
