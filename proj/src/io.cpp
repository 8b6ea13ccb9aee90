#include "cogebra/io.hpp"

#include <cctype>

namespace cogebra {

namespace {

std::string strip(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  return s;
}

std::uint64_t parse_count(const std::string& s, std::string_view whole) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InputError("cannot parse field '" + std::string(whole) + "'");
  return std::stoull(s);
}

Field finite_from(const std::string& s, std::string_view whole) {
  const auto caret = s.find('^');
  if (caret != std::string::npos) {
    const auto p = parse_count(s.substr(0, caret), whole), n = parse_count(s.substr(caret + 1), whole);
    if (!is_prime(p) || n == 0) throw InputError("cannot parse field '" + std::string(whole) + "'");
    return standard_finite_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n));
  }
  std::uint64_t q = parse_count(s, whole);
  if (q < 2) throw InputError("field size must be a prime power: '" + std::string(whole) + "'");
  std::uint64_t p = 2;
  while (q % p) ++p;
  std::uint32_t n = 0;
  while (q % p == 0) q /= p, ++n;
  if (q != 1) throw InputError("field size must be a prime power: '" + std::string(whole) + "'");
  return standard_finite_field(static_cast<std::uint32_t>(p), n);
}

const Json& at(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::size_t index_from(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(std::string("expected a non-negative integer for ") + what);
  return j.get<std::size_t>();
}

Json descriptor_to_json(const FieldDescriptor& d) {
  switch (d.kind) {
    case FieldKind::prime: return "GF(" + std::to_string(d.p) + ")";
    case FieldKind::rationals: return "Q";
    case FieldKind::extension: return Json{{"base", descriptor_to_json(*d.base)}, {"modulus", d.modulus}};
    case FieldKind::rational_functions: return Json{{"base", descriptor_to_json(*d.base)}, {"variable", d.variable}};
  }
  return nullptr;
}

}  // namespace

Field parse_field(std::string_view text) {
  std::string s = strip(text);
  if (s.size() > 3 && s.ends_with("(t)")) return rational_functions(parse_field(s.substr(0, s.size() - 3)));
  if (s == "Q" || s == "QQ") return rationals();
  if (s.starts_with("GF(") && s.ends_with(")")) return finite_from(s.substr(3, s.size() - 4), text);
  if (s.starts_with("GF") && s.size() > 2) return finite_from(s.substr(2), text);
  return finite_from(s, text);
}

Json field_to_json(const Field& f) {
  try {
    if (parse_field(f.name()) == f) return f.name();
  } catch (const InputError&) {
  }
  return descriptor_to_json(f.descriptor());
}

Field field_from_json(const Json& j) {
  if (j.is_string()) return parse_field(j.get<std::string>());
  if (j.is_number_integer()) return parse_field(std::to_string(j.get<long long>()));
  if (!j.is_object()) throw InputError("field must be a name or a descriptor object");
  const Field base = field_from_json(at(j, "base"));
  if (j.contains("modulus")) {
    std::vector<std::uint32_t> modulus;
    for (const auto& c : j.at("modulus")) modulus.push_back(static_cast<std::uint32_t>(index_from(c, "modulus")));
    return make_field(FieldDescriptor::extension_of(base.descriptor(), std::move(modulus)));
  }
  return rational_functions(base, j.value("variable", std::string("t")));
}

Json scalar_to_json(const Field& f, const Scalar& s) { return f.format(s); }

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  throw InputError("scalar must be a string or an integer");
}

Json vector_to_json(const Field& f, const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(f, x));
  return out;
}

Vector vector_from_json(const Field& f, const Json& j) {
  if (!j.is_array()) throw InputError("vector must be an array");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(f, x));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.field(), m.row(r)));
  return out;
}

Matrix matrix_from_json(const Field& f, const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(f, r));
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) throw InputError("matrix rows of different lengths");
  return Matrix::from_rows(f, rows, cols);
}

Json coalgebra_to_json(const Coalgebra& c) {
  const Field& f = c.field();
  Json delta = Json::array();
  for (std::size_t k = 0; k < c.dim(); ++k) {
    Json terms = Json::array();
    for (const auto& t : c.delta(k)) terms.push_back(Json::array({t.i, t.j, scalar_to_json(f, t.c)}));
    delta.push_back(std::move(terms));
  }
  return Json{{"field", field_to_json(f)},
              {"dim", c.dim()},
              {"labels", c.labels()},
              {"delta", std::move(delta)},
              {"counit", vector_to_json(f, c.counit())}};
}

Coalgebra coalgebra_from_json(const Json& j, const Field& fallback) {
  if (!j.is_object()) throw InputError("coalgebra must be a JSON object");
  const Field f = j.contains("field") ? field_from_json(j.at("field")) : fallback;
  if (!f.valid()) throw InputError("coalgebra: no field given");
  if (j.contains("construct")) {
    const auto kind = at(j, "construct").get<std::string>();
    if (kind == "matrix") return matrix_coalgebra(f, index_from(at(j, "n"), "n"));
    if (kind == "grouplike") return grouplike_coalgebra(f, at(j, "labels").get<std::vector<std::string>>());
    if (kind == "trivial") return trivial_coalgebra(f);
    if (kind == "dual_field") return dual_field_coalgebra(embed(f, field_from_json(at(j, "extension"))));
    throw InputError("unknown coalgebra construction '" + kind + "'");
  }
  const std::size_t n = index_from(at(j, "dim"), "dim");
  Coalgebra c(f, n);
  const Json& delta = at(j, "delta");
  if (!delta.is_array() || delta.size() != n) throw InputError("coalgebra: \"delta\" needs one entry per basis vector");
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<DeltaTerm> terms;
    for (const auto& t : delta[k]) {
      if (!t.is_array() || t.size() != 3) throw InputError("coalgebra: delta terms are [i, j, coefficient]");
      const std::size_t i = index_from(t[0], "delta index"), jj = index_from(t[1], "delta index");
      if (i >= n || jj >= n) throw InputError("coalgebra: delta index out of range");
      terms.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(jj), scalar_from_json(f, t[2])});
    }
    c.set_delta(k, std::move(terms));
  }
  const Vector eps = vector_from_json(f, at(j, "counit"));
  if (eps.size() != n) throw InputError("coalgebra: counit length differs from the dimension");
  c.set_counit(eps);
  if (j.contains("labels")) {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != n) throw InputError("coalgebra: one label per basis vector");
    c.set_labels(std::move(labels));
  }
  return c;
}

Json family_to_json(const Family& family) {
  Json out = Json::array();
  for (const auto& c : family) out.push_back(coalgebra_to_json(c));
  return out;
}

Family builtin_family(std::string_view name, const Field& f) {
  const std::string s = strip(name);
  if (s == "dihedral") return {cyclic_function_coalgebra(f, 2), cyclic_function_coalgebra(f, 2)};
  if (s == "idempotents") return {grouplike_coalgebra(f, {"a", "b"}), grouplike_coalgebra(f, {"a", "b"})};
  if (s == "trivial") return {trivial_coalgebra(f)};
  if (s.starts_with("dual_fields:")) {
    if (!f.is_finite()) throw InputError("dual_fields family needs a finite base field");
    Family out;
    std::string rest = s.substr(12);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string part = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      const auto n = parse_count(part, name);
      if (n == 0) throw InputError("dual_fields: degrees must be positive");
      out.push_back(dual_field_coalgebra(embed(f, standard_finite_field(f.characteristic(), static_cast<std::uint32_t>(n) * f.degree()))));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return out;
  }
  throw InputError("unknown family '" + s + "' (dihedral, idempotents, trivial, dual_fields:n1,n2,...)");
}

Family family_from_json(const Json& j, const Field& fallback) {
  if (j.is_object() && j.contains("builtin")) {
    const Field f = j.contains("field") ? field_from_json(j.at("field")) : fallback;
    if (!f.valid()) throw InputError("family: no field given");
    return builtin_family(j.at("builtin").get<std::string>(), f);
  }
  const Json& list = j.is_object() ? at(j, "family") : j;
  if (!list.is_array()) throw InputError("family must be an array of coalgebras");
  const Field f = j.is_object() && j.contains("field") ? field_from_json(j.at("field")) : fallback;
  Family out;
  for (const auto& c : list) out.push_back(coalgebra_from_json(c, f));
  return out;
}

Json comodule_to_json(const Comodule& v) {
  Json action = Json::array();
  for (const auto& m : v.action()) action.push_back(matrix_to_json(m));
  return action;
}

Json joint_comodule_to_json(const JointComodule& v) {
  Json s = Json::array();
  for (const auto& c : v.structures) s.push_back(comodule_to_json(c));
  return Json{{"dim", v.dim}, {"structures", std::move(s)}};
}

JointComodule joint_comodule_from_json(const Family& family, const Json& j) {
  JointComodule v;
  v.dim = index_from(at(j, "dim"), "dim");
  const Json& s = at(j, "structures");
  if (!s.is_array() || s.size() != family.size()) throw InputError("joint comodule: one structure per family member");
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::vector<Matrix> action;
    for (const auto& m : s[i]) {
      Matrix a = matrix_from_json(family[i].field(), m);
      if (a.rows() == 0 && v.dim == 0) a = Matrix(family[i].field(), 0, 0);
      action.push_back(std::move(a));
    }
    v.structures.emplace_back(family[i], std::move(action));
  }
  return v;
}

Json representation_to_json(const PresentedAlgebra& p, const Representation& r) {
  Json gens = Json::object();
  for (std::size_t g = 0; g < p.generator_count(); ++g) {
    const std::size_t s = p.generator_symbol(g);
    gens[p.symbols()[s].name] = matrix_to_json(r.matrices[s]);
  }
  return Json{{"dim", r.dim}, {"generators", std::move(gens)}};
}

Json sequence_to_json(const LinRecSeq& s) {
  return Json{{"field", field_to_json(s.field())},
              {"minpoly", vector_to_json(s.field(), s.minimal_polynomial().coeffs)},
              {"initial", vector_to_json(s.field(), s.initial())}};
}

LinRecSeq sequence_from_json(const Json& j) {
  const Field f = field_from_json(at(j, "field"));
  Polynomial p{vector_from_json(f, at(j, "minpoly"))};
  while (!p.coeffs.empty() && f.is_zero(p.coeffs.back())) p.coeffs.pop_back();
  return LinRecSeq(f, p, vector_from_json(f, at(j, "initial")));
}

Json group_word_to_json(const GroupWord& w) { return Json(w); }

Json group_element_to_json(const GroupAlgebraElement& a) {
  Json terms = Json::object();
  for (const auto& [w, c] : a.terms()) terms[a.group().format(w)] = scalar_to_json(a.field(), c);
  return Json{{"field", field_to_json(a.field())}, {"alphabet", a.group().names()}, {"terms", std::move(terms)}};
}

GroupAlgebraElement group_element_from_json(const Json& j) {
  const Field f = field_from_json(at(j, "field"));
  const FreeGroup g(at(j, "alphabet").get<std::vector<std::string>>());
  GroupAlgebraElement a(f, g);
  const Json& terms = at(j, "terms");
  if (!terms.is_object()) throw InputError("group element terms must be a {word: coefficient} object");
  for (const auto& [w, c] : terms.items()) a.add_term(g.parse(w), scalar_from_json(f, c));
  return a;
}

Json census_to_json(const SimpleCensus& c) {
  Json dims = Json::array();
  for (std::size_t e = 1; e <= c.classes.size(); ++e) {
    Json witnesses = Json::array();
    for (const auto& r : c.classes[e - 1]) witnesses.push_back(representation_to_json(c.presentation, r));
    dims.push_back(Json{{"dim", e},
                        {"classes", c.classes[e - 1].size()},
                        {"simple_representations", c.simple_counts[e - 1]},
                        {"witnesses", std::move(witnesses)}});
  }
  return Json{{"dimensions", std::move(dims)}};
}

Json product_to_json(const TruncatedProduct& t) {
  Json words = Json::array();
  for (const auto& w : t.span.words()) words.push_back(t.presentation.format_word(w));
  Json projections = Json::array();
  for (const auto& p : t.projections) projections.push_back(matrix_to_json(p));
  return Json{{"d", t.d},
              {"supplied", t.supplied},
              {"carrier_dim", t.carrier_dim},
              {"stabilization_length", t.carrier_dim ? t.span.stabilization_length() : 0},
              {"skipped_dims", t.skipped_dims},
              {"representations", t.witnesses.size()},
              {"basis_words", std::move(words)},
              {"carrier", t.carrier ? coalgebra_to_json(*t.carrier) : Json(nullptr)},
              {"projections", std::move(projections)}};
}

Json profile_to_json(const ProfileReport& r) {
  return Json{{"dims", r.dims}, {"nondecreasing", r.nondecreasing}, {"strictly_increasing", r.strictly_increasing}};
}

Json extension_to_json(const ExtensionReport& r) {
  return Json{{"d", r.d},
              {"source_dim", r.source_dim},
              {"extended_source_dim", r.extended_source_dim},
              {"target_dim", r.target_dim},
              {"equal", r.equal},
              {"comparison_injective", r.comparison_injective}};
}

Json vanishing_to_json(const Family& family, const VanishingReport& r) {
  (void)family;
  return Json{{"vanishes", r.vanishes},
              {"first_dim", r.first_dim},
              {"simple_dims", r.simple_dims},
              {"witness", r.witness ? joint_comodule_to_json(*r.witness) : Json(nullptr)},
              {"enumerated_up_to", r.enumerated_up_to},
              {"enumeration_consistent", r.enumeration_consistent}};
}

Json cofree_to_json(const CofreeTruncation& t) {
  Json words = Json::array();
  for (const auto& w : t.span.words()) words.push_back(t.presentation.format_word(w));
  return Json{{"m", t.m},
              {"d", t.d},
              {"carrier_dim", t.carrier_dim},
              {"stabilization_length", t.carrier_dim ? t.span.stabilization_length() : 0},
              {"representations", t.representations.size()},
              {"basis_words", std::move(words)},
              {"structure_map", matrix_to_json(t.structure_map)},
              {"carrier", t.carrier ? coalgebra_to_json(*t.carrier) : Json(nullptr)}};
}

Json cofree_extension_to_json(const CofreeExtensionReport& r) {
  return Json{{"d", r.d},
              {"source_dim", r.source_dim},
              {"target_dim", r.target_dim},
              {"equal", r.equal},
              {"comparison_injective", r.comparison_injective}};
}

Json embedding_to_json(const EmbeddingReport& r) {
  return Json{{"alphabet_size", r.rank},
              {"d", r.d},
              {"representations", r.representations},
              {"positive_dim", r.positive_dim},
              {"all_dim", r.all_dim},
              {"positive_length", r.positive_length},
              {"all_length", r.all_length},
              {"equal", r.equal}};
}

}  // namespace cogebra
