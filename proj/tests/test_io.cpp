#include <random>

#include "doctest.h"

#include "cogebra/io.hpp"

using namespace cogebra;

TEST_CASE("field names") {
  CHECK(parse_field("Q") == rationals());
  CHECK(parse_field("GF(2)") == standard_finite_field(2, 1));
  CHECK(parse_field("GF(4)") == standard_finite_field(2, 2));
  CHECK(parse_field("GF(2^3)") == standard_finite_field(2, 3));
  CHECK(parse_field("9") == standard_finite_field(3, 2));
  CHECK(parse_field("3^2") == standard_finite_field(3, 2));
  CHECK(parse_field("GF(3)(t)") == rational_functions(standard_finite_field(3, 1)));
  CHECK(parse_field("Q(t)") == rational_functions(rationals()));
  for (const char* bad : {"6", "1", "GF(0)", "GF(2^0)", "R", "", "GF(x)"}) CHECK_THROWS_AS(parse_field(bad), InputError);
  for (const Field& f : {rationals(), standard_finite_field(5, 1), standard_finite_field(2, 4),
                         rational_functions(standard_finite_field(2, 1)), rational_functions(rationals(), "s")})
    CHECK(field_from_json(Json::parse(field_to_json(f).dump())) == f);
  // a non-standard modulus survives as a descriptor
  const Field odd = make_field(FieldDescriptor::extension_of(FieldDescriptor::prime_field(2), {1, 0, 1, 1}));
  CHECK(field_to_json(odd).is_object());
  CHECK(field_from_json(field_to_json(odd)) == odd);
}

TEST_CASE("scalars and matrices round trip") {
  std::mt19937 rng(4);
  for (const Field& f : {standard_finite_field(3, 2), standard_finite_field(7, 1)}) {
    for (std::uint32_t c = 0; c < f.size(); ++c) CHECK(scalar_from_json(f, scalar_to_json(f, f.element(c))) == f.element(c));
  }
  const Field q = rationals();
  CHECK(scalar_from_json(q, Json("-3/4")) == q.parse("-3/4"));
  CHECK(scalar_from_json(q, Json(5)) == q.from_int(5));
  CHECK_THROWS_AS(scalar_from_json(q, Json::array()), InputError);
  const Field kt = rational_functions(standard_finite_field(3, 1));
  const Scalar t = kt.generator();
  Matrix m(kt, 2, 2);
  m(0, 0) = kt.div(kt.add(t, kt.one()), kt.mul(t, t));
  m(1, 0) = kt.neg(t);
  CHECK(matrix_from_json(kt, Json::parse(matrix_to_json(m).dump())) == m);
  CHECK_THROWS_AS(matrix_from_json(q, Json::parse("[[1,2],[3]]")), InputError);
}

TEST_CASE("coalgebra files") {
  const Field f = standard_finite_field(2, 1);
  for (const Coalgebra& c : {matrix_coalgebra(f, 2), grouplike_coalgebra(f, {"a", "b", "c"}),
                             dual_field_coalgebra(embed(f, standard_finite_field(2, 3)))}) {
    const Coalgebra back = coalgebra_from_json(Json::parse(coalgebra_to_json(c).dump()));
    CHECK(back == c);
    CHECK(back.labels() == c.labels());
  }
  CHECK(coalgebra_from_json(Json::parse(R"j({"field":"GF(3)","construct":"matrix","n":2})j")) ==
        matrix_coalgebra(standard_finite_field(3, 1), 2));
  CHECK(coalgebra_from_json(Json::parse(R"j({"construct":"dual_field","extension":"GF(4)"})j"), f) ==
        dual_field_coalgebra(embed(f, standard_finite_field(2, 2))));
  CHECK_THROWS_AS(coalgebra_from_json(Json::parse(R"j({"construct":"matrix","n":2})j")), InputError);
  CHECK_THROWS_AS(coalgebra_from_json(Json::parse(R"j({"field":"GF(2)","dim":2,"delta":[[]],"counit":["1","0"]})j")), InputError);
  CHECK_THROWS_AS(coalgebra_from_json(Json::parse(R"j({"field":"GF(2)","dim":1,"delta":[[[0,3,"1"]]],"counit":["1"]})j")), InputError);
  CHECK_THROWS_AS(coalgebra_from_json(Json::parse(R"j({"field":"GF(2)","construct":"cube"})j")), InputError);
}

TEST_CASE("families") {
  const Field f = standard_finite_field(2, 1);
  const Family d = builtin_family("dihedral", f);
  CHECK(d.size() == 2);
  CHECK(d[0] == cyclic_function_coalgebra(f, 2));
  CHECK(builtin_family("idempotents", f)[1] == grouplike_coalgebra(f, {"a", "b"}));
  const Family df = builtin_family("dual_fields:2,3", f);
  CHECK(df[1] == dual_field_coalgebra(embed(f, standard_finite_field(2, 3))));
  CHECK(family_from_json(Json::parse(R"j({"builtin":"trivial","field":"GF(5)"})j")).size() == 1);
  CHECK(family_from_json(Json::parse(family_to_json(df).dump())) == df);
  CHECK_THROWS_AS(builtin_family("dual_fields:2,x", f), InputError);
  CHECK_THROWS_AS(builtin_family("square", f), InputError);
}

TEST_CASE("comodules, sequences and group elements") {
  const Field f = standard_finite_field(3, 1);
  const Family fam = builtin_family("idempotents", f);
  JointComodule v{1, {Comodule(fam[0], {Matrix::from_ints(f, {{1}}), Matrix::from_ints(f, {{0}})}),
                      Comodule(fam[1], {Matrix::from_ints(f, {{0}}), Matrix::from_ints(f, {{1}})})}};
  const JointComodule back = joint_comodule_from_json(fam, Json::parse(joint_comodule_to_json(v).dump()));
  CHECK(back.dim == 1);
  CHECK(back.structures[1].action() == v.structures[1].action());
  CHECK_THROWS_AS(joint_comodule_from_json(fam, Json::parse(R"j({"dim":1,"structures":[]})j")), InputError);

  const Field q = rationals();
  const LinRecSeq fib(q, parse_polynomial(q, "x^2-x-1"), {q.zero(), q.one()});
  const Json sj = sequence_to_json(fib);
  CHECK(sj.dump() == R"j({"field":"Q","minpoly":["-1","-1","1"],"initial":["0","1"]})j");
  CHECK(sequence_from_json(sj) == fib);

  const FreeGroup g = FreeGroup::standard(2);
  GroupAlgebraElement a(f, g);
  a.add_term({1, -2}, f.from_int(2));
  a.add_term({}, f.one());
  const Json aj = group_element_to_json(a);
  CHECK(aj["terms"]["s*t^-1"] == "2");
  CHECK(group_element_from_json(Json::parse(aj.dump())) == a);
  CHECK(group_word_to_json({1, -2}).dump() == "[1,-2]");
}
