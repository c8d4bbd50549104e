#include "doctest.h"

#include "lowcohom/errors.hpp"
#include "lowcohom/numslice.hpp"

using namespace lowcohom;

namespace {

GenericPointReport cohom(const std::string& expr) {
  OracleOptions opt;
  return generic_cohom(build_rep(expr), opt);
}

TypedWeight tw(const char* s) { return parse_typed_weight(s); }

}  // namespace

TEST_CASE("basic modules satisfy the axioms") {
  for (const auto& m : {su_vector(4), sp_vector(3), so_vector(5), spin_module(7), spin_module(8), spin_module(9),
                        spin_module(10), spin_module(11), spin_module(12), g2_vector()}) {
    CAPTURE(m.label);
    CHECK(verify_module(m).empty());
  }
  CHECK(spin_module(7).structure_sign == 1);
  CHECK(spin_module(11).structure_sign == -1);
  CHECK(spin_module(12).structure_sign == -1);
  CHECK(spin_module(16).structure_sign == 1);
  CHECK_FALSE(spin_module(10).structure.has_value());
  CHECK(g2_vector().gens.size() == 14);
}

TEST_CASE("functors preserve the axioms") {
  const auto v = su_vector(6);
  const auto l3 = with_hodge_structure(alt_power(v, 3), 6);
  CHECK(l3.dim == 20);
  CHECK(l3.structure_sign == -1);
  CHECK(verify_module(l3).empty());
  const auto l2 = with_hodge_structure(alt_power(su_vector(4), 2), 4);
  CHECK(l2.structure_sign == 1);
  CHECK(verify_module(l2).empty());
  const auto s3 = sym_power(sp_vector(1), 3);
  CHECK(s3.dim == 4);
  CHECK(verify_module(s3).empty());
  const auto c3 = contraction_kernel(alt_power(sp_vector(3), 3), sp_vector(3), 3, false);
  CHECK(c3.dim == 14);
  CHECK(verify_module(c3).empty());
  const auto ad = adjoint_module(su_vector(3));
  CHECK(ad.dim == 8);
  CHECK(verify_module(ad).empty());
  CHECK(verify_module(tensor_c(sp_vector(1), sp_vector(2))).empty());
  CHECK(verify_module(dualize(alt_power(v, 2))).empty());
}

TEST_CASE("real forms are orthogonal representations") {
  for (const char* e : {"so(3)", "sym(sp(1),4)", "spin(7)", "spin(11)", "tensorR(so(4), g2)", "tensorH(sp(1), sp(2))",
                        "alt(su(6),3)", "traceless(sym2(so(5)))", "adjoint(g2)"}) {
    CAPTURE(e);
    const auto r = build_rep(e);
    CHECK(verify_real(r).empty());
  }
}

TEST_CASE("construction examples") {
  const auto a = build_rep("tensorR(so(4), g2)");
  CHECK(a.group_dim() == 20);
  CHECK(a.space_dim == 28);
  const auto s = build_rep("spin(11)");
  CHECK(s.group_dim() == 55);
  CHECK(s.space_dim == 64);
  CHECK(isotropy_dim_at(build_rep("spin(7)"), random_point(8, 3, 0, 2)) == 14);
  CHECK(build_rep("u(3)").space_dim == 6);
  CHECK(build_rep("tensorH(sp(1), sp(2))").space_dim == 8);
}

TEST_CASE("generic isotropy on small examples") {
  CHECK(cohom("so(3)").cohom == 1);
  CHECK(cohom("so(3)").isotropy_dim == 1);
  CHECK(cohom("traceless(sym2(so(3)))").isotropy_dim == 0);
  CHECK(cohom("traceless(sym2(so(3)))").cohom == 2);
  CHECK(cohom("tensorR(so(3), so(3))").cohom == 3);
  CHECK(cohom("tensorR(so(4), g2)").cohom == 8);
  CHECK(cohom("adjoint(su(3))").cohom == 2);
  CHECK(cohom("sp(2)").cohom == 1);
  CHECK(cohom("spin(9)").cohom == 1);
}

TEST_CASE("determinism") {
  const auto r = build_rep("tensorR(so(3), sym(sp(1),4))");
  OracleOptions opt;
  opt.seed = 42;
  const auto x = generic_cohom(r, opt), y = generic_cohom(r, opt);
  CHECK(x.cohom == y.cohom);
  CHECK(x.min_attained_at_trial == y.min_attained_at_trial);
  CHECK(random_point(5, 9, 2, 2) == random_point(5, 9, 2, 2));
}

TEST_CASE("polar test") {
  OracleOptions opt;
  CHECK(polar_test(build_rep("adjoint(su(3))"), opt) == PolarVerdict::polar);
  CHECK(polar_test(build_rep("traceless(sym2(so(4)))"), opt) == PolarVerdict::polar);
  CHECK(polar_test(build_rep("tensorR(so(3), so(4))"), opt) == PolarVerdict::polar);
  CHECK(polar_test(build_rep("tensorR(so(4), g2)"), opt) == PolarVerdict::non_polar);
  CHECK(polar_test(build_rep("sym(sp(1),4)"), opt) == PolarVerdict::polar);
  CHECK(polar_test(build_rep("sym(sp(1),3)"), opt) == PolarVerdict::non_polar);
}

TEST_CASE("slice reduction") {
  const auto r = build_rep("tensorR(so(3), so(3))");
  const auto p = random_point(r.space_dim, 1, 0, 2);
  const auto step = slice_at(r, p);
  CHECK(step.isotropy_dim == 0);
  CHECK(step.normal_dim == 3);
}

TEST_CASE("irreducible modules by highest weight") {
  struct Case {
    const char* w;
    int complex_dim;
  };
  for (const auto& c : {Case{"A1[4]", 5}, Case{"A4[2,0,0,0]", 15}, Case{"A5[0,0,1,0,0]", 20}, Case{"C3[0,0,1]", 14},
                        Case{"C3[0,1,0]", 14}, Case{"B5[0,0,0,0,1]", 32}, Case{"D6[0,0,0,0,0,1]", 32},
                        Case{"G2[1,0]", 7}, Case{"B2[1,0]", 5}, Case{"D3[0,1,1]", 15}, Case{"A3[0,2,0]", 20},
                        Case{"A2[1,1]", 8}, Case{"C2[0,2]", 14}}) {
    CAPTURE(c.w);
    const auto m = irrep_module(tw(c.w));
    CHECK(m.dim == c.complex_dim);
    CHECK(verify_module(m).empty());
  }
  CHECK_THROWS_AS(irrep_module(tw("F4[0,0,0,1]")), UnsupportedConstruction);
  CHECK_THROWS_AS(irrep_module(tw("E6[1,0,0,0,0,0]")), UnsupportedConstruction);
}

TEST_CASE("expression errors carry positions") {
  try {
    build_rep("tensorR(so(3), foo(2))");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 15);
  }
  CHECK_THROWS_AS(build_rep("so(3"), ParseError);
  CHECK_THROWS_AS(build_rep("traceless(so(3))"), ParseError);
}
