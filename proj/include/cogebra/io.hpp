#pragma once

// JSON forms of fields, scalars, matrices, coalgebras, comodules, sequences and
// the module reports. Scalars are strings in the field's own notation; object
// keys come out in a fixed order so reports diff cleanly.

#include <string>
#include <string_view>

#include "json.hpp"

#include "cogebra/cofree.hpp"
#include "cogebra/comodprod.hpp"
#include "cogebra/grouphopf.hpp"
#include "cogebra/recseq.hpp"

namespace cogebra {

using Json = nlohmann::ordered_json;

/// "Q", "Q(t)", "GF(p)", "GF(p^n)", "GF(q)", "p", "p^n", "q", and any of the
/// finite ones followed by "(t)". Finite extensions use the standard modulus.
Field parse_field(std::string_view text);

/// The name for standard fields, else the descriptor as an object.
Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json scalar_to_json(const Field& f, const Scalar& s);
/// Strings in field notation or integers.
Scalar scalar_from_json(const Field& f, const Json& j);
Json vector_to_json(const Field& f, const Vector& v);
Vector vector_from_json(const Field& f, const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const Json& j);

/// {"field", "dim", "labels", "delta": [[[i, j, c], ...] per basis vector], "counit"}.
Json coalgebra_to_json(const Coalgebra& c);
/// Also accepts {"construct": "matrix"|"grouplike"|"trivial"|"dual_field", ...}.
/// A missing "field" falls back to `fallback` when it is valid.
Coalgebra coalgebra_from_json(const Json& j, const Field& fallback = {});

Json family_to_json(const Family& family);
/// An array of coalgebras, {"family": [...]}, or {"builtin": "dihedral"|"dual_fields", ...}.
Family family_from_json(const Json& j, const Field& fallback = {});
/// Named families: "dihedral" (two copies of grouplike({a, b})), "trivial",
/// "dual_fields:2,3" (the GF(p^n_i)^* over GF(p)).
Family builtin_family(std::string_view name, const Field& f);

Json comodule_to_json(const Comodule& v);
Json joint_comodule_to_json(const JointComodule& v);
JointComodule joint_comodule_from_json(const Family& family, const Json& j);
Json representation_to_json(const PresentedAlgebra& p, const Representation& r);

Json sequence_to_json(const LinRecSeq& s);
LinRecSeq sequence_from_json(const Json& j);

Json group_word_to_json(const GroupWord& w);
Json group_element_to_json(const GroupAlgebraElement& a);
GroupAlgebraElement group_element_from_json(const Json& j);

Json census_to_json(const SimpleCensus& c);
Json product_to_json(const TruncatedProduct& t);
Json profile_to_json(const ProfileReport& r);
Json extension_to_json(const ExtensionReport& r);
Json vanishing_to_json(const Family& family, const VanishingReport& r);
Json cofree_to_json(const CofreeTruncation& t);
Json cofree_extension_to_json(const CofreeExtensionReport& r);
Json embedding_to_json(const EmbeddingReport& r);

}  // namespace cogebra
