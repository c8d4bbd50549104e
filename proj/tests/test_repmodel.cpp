#include "doctest.h"

#include "lowcohom/errors.hpp"
#include "lowcohom/repmodel.hpp"

using namespace lowcohom;

TEST_CASE("tensor type table") {
  const FSType r = FSType::real, q = FSType::quaternionic, c = FSType::complex;
  CHECK(tensor_type(r, r) == r);
  CHECK(tensor_type(q, q) == r);
  CHECK(tensor_type(c, q) == c);
  CHECK(tensor_type(r, q) == q);
  for (FSType a : {r, q, c})
    for (FSType b : {r, q, c}) {
      CHECK(tensor_type(a, b) == tensor_type(b, a));
      for (FSType x : {r, q, c}) CHECK(tensor_type(tensor_type(a, b), x) == tensor_type(a, tensor_type(b, x)));
    }
}

TEST_CASE("real cases and degrees") {
  CHECK(classify_real_irrep(parse_spec("A1[1]")) == RealCase::case_b_quaternionic);
  CHECK(classify_real_irrep(parse_spec("A1[1] * C3[1,0,0]")) == RealCase::case_a_real);
  CHECK(classify_real_irrep(parse_spec("U1(1) * D6[0,0,0,0,0,1]")) == RealCase::case_c_complex);
  CHECK(real_degree(parse_spec("A1[4]")) == 5);
  CHECK(real_degree(parse_spec("A1[2]")) == 3);
  CHECK(real_degree(parse_spec("A1[1] * B5[0,0,0,0,1]")) == 64);
  CHECK(real_degree(parse_spec("U1(1) * E7[0,0,0,0,0,0,1]")) == 112);
  CHECK(real_degree(parse_spec("A1[1]")) == 4);
  CHECK(realization_route(parse_spec("A1[2] * A1[2]")) == Route::real_tensor);
  CHECK(realization_route(parse_spec("A1[2] * A4[1,0,0,0]")) == Route::real_tensor);
  CHECK(realization_route(parse_spec("A1[1] * C3[1,0,0]")) == Route::quaternionic_tensor);
  CHECK(realization_route(parse_spec("U1(1) * A5[0,0,1,0,0]")) == Route::complex_realification);
  CHECK(realization_route(parse_spec("B3[0,0,1]")) == Route::simple);
  for (const char* s : {"U1(1) * A1[4]", "U1(1) * A2[1,0] * C3[1,0,0]", "U1(1) * C3[0,0,1]"})
    CHECK(classify_real_irrep(parse_spec(s)) != RealCase::case_a_real);
}

TEST_CASE("spec grammar round trip") {
  const auto s = parse_spec("U1(1) * A5[0,0,1,0,0] : C-realification");
  CHECK(s.u1_charges == std::vector<int>{1});
  CHECK(format_spec(s) == "U1(1) * A5[0,0,1,0,0] : C-realification");
  CHECK(parse_spec(format_spec(s)) == s);
  CHECK(spec_from_json(spec_to_json(s)) == s);
  const auto h = parse_spec("A1[1] * B5[0,0,0,0,1]");
  CHECK(h.tensor_field == TensorField::H);
  CHECK(h.presentation == Presentation::real_form);
  CHECK_FALSE(h.effective_kernel_note.empty());
  CHECK_THROWS_AS(parse_spec("A1[1] : R-real_form"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spec("U1(1) * A1[2] : R-real_form"), std::invalid_argument);
  try {
    parse_spec("A1[2] * B3[0,x,1]");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 13);
  }
}

TEST_CASE("normal form") {
  const auto a = normalize(parse_spec("C2[1,0] * A1[2]"));
  const auto b = normalize(parse_spec("A1[2] * B2[0,1]"));
  CHECK(a == b);
  CHECK(normalize(parse_spec("D3[0,1,1]")).factors.front() == parse_typed_weight("A3[1,0,1]"));
  CHECK(normalize(parse_spec("A4[0,0,0,2]")).factors.front().weight == HighestWeight{2, 0, 0, 0});
  CHECK(normalize(parse_spec("U1(3) * A1[4]")).u1_charges == std::vector<int>{1});
}

TEST_CASE("realized dimensions match real degrees") {
  for (const char* s : {"A1[2]", "A1[1]", "A1[1] * C3[1,0,0]", "U1(1) * A5[0,0,1,0,0]", "A1[2] * A1[1] * C2[1,0]",
                        "U1(1) * A2[1,0] * C2[1,0]", "B3[0,0,1] * A1[1]", "A1[1] * A1[1] * G2[1,0]",
                        "U1(1) * D6[0,0,0,0,0,1]", "D7[0,0,0,0,0,0,1]", "A4[1,0,0,0] * A4[1,0,0,0]"}) {
    CAPTURE(s);
    const auto spec = parse_spec(s);
    const auto r = realize(spec);
    CHECK(r.space_dim == real_degree(spec));
    CHECK(verify_real(r).empty());
  }
  CHECK_THROWS_AS(realize(parse_spec("U1(1) * E7[0,0,0,0,0,0,1]")), UnsupportedConstruction);
}
