#include "epiclo/algebra.hpp"
#include "epiclo/error.hpp"
#include "epiclo/homomorphism.hpp"
#include "epiclo/term.hpp"
#include "fixtures.hpp"

#include <doctest.h>

using namespace epiclo;
using terms::op;
using terms::x;

namespace {

AlgebraSpec z4_spec() {
  AlgebraSpec s{4, group_signature(), {}, Variety::group};
  std::vector<std::int64_t> mul(16), inv(4);
  for (int a = 0; a < 4; ++a) {
    inv[a] = (4 - a) % 4;
    for (int b = 0; b < 4; ++b) mul[a * 4 + b] = (a + b) % 4;
  }
  s.tables = {mul, inv, {0}};
  return s;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("validate accepts the Z4 group table") {
  auto z4 = validate_algebra(z4_spec());
  CHECK(z4.size() == 4);
  CHECK(z4.tag() == Variety::group);
  CHECK(z4.apply(z4.op_index("mul"), 3, 2) == 1);
  CHECK(z4 == cyclic_group(4));
}

TEST_CASE("validate rejects out-of-range entries") {
  auto s = z4_spec();
  s.tables[0][5] = 7;
  try {
    validate_algebra(s);
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
    CHECK(e.witness()["value"] == 7);
    CHECK(e.witness()["args"] == nlohmann::json{1, 1});
  }
}

TEST_CASE("validate reports shape problems") {
  auto s = z4_spec();
  s.tables[1].pop_back();
  CHECK(code_of([&] { validate_algebra(s); }) == ErrorCode::TableShape);
  s = z4_spec();
  s.size = 0;
  CHECK(code_of([&] { validate_algebra(s); }) == ErrorCode::TableShape);
  s = z4_spec();
  s.tables.pop_back();
  CHECK(code_of([&] { validate_algebra(s); }) == ErrorCode::TableShape);
  AlgebraSpec wrong{2, Signature({{"mul", 2}}), {{0, 1, 1, 0}}, Variety::group};
  CHECK(code_of([&] { validate_algebra(wrong); }) == ErrorCode::TableShape);
}

TEST_CASE("quandle without idempotence is rejected with the axiom") {
  // x ◁ y = x + 1 mod 3: a permutation in each column but a ◁ a != a.
  AlgebraSpec s{3, quandle_signature(), {}, Variety::quandle};
  std::vector<std::int64_t> rhd(9), rhd_inv(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      rhd[a * 3 + b] = (a + 1) % 3;
      rhd_inv[a * 3 + b] = (a + 2) % 3;
    }
  s.tables = {rhd, rhd_inv};
  try {
    validate_algebra(s);
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::AxiomViolation);
    CHECK(e.witness()["axiom"] == "a ◁ a = a");
    CHECK(e.witness()["assignment"]["x0"] == 0);
  }
}

TEST_CASE("group axioms are enforced") {
  auto s = z4_spec();
  s.tables[1] = {0, 1, 2, 3};  // wrong inverses
  CHECK(code_of([&] { validate_algebra(s); }) == ErrorCode::AxiomViolation);
}

TEST_CASE("signature rejects duplicate names") {
  CHECK(code_of([] { Signature({{"f", 1}, {"f", 2}}); }) == ErrorCode::InvalidInput);
  CHECK(group_signature().find("inv") == 1u);
  CHECK_FALSE(group_signature().find("add"));
}

TEST_CASE("unknown operations") {
  auto z4 = cyclic_group(4);
  CHECK(code_of([&] { z4.op_index("add"); }) == ErrorCode::UnknownOp);
  std::vector<Equation> eqs{{op("add", {x(0), x(0)}), x(0), ""}};
  CHECK(code_of([&] { satisfies_equations(z4, eqs); }) == ErrorCode::UnknownOp);
}

TEST_CASE("satisfies_equations") {
  std::vector<Equation> comm{{op("mul", {x(0), x(1)}), op("mul", {x(1), x(0)}), "xy=yx"}};
  CHECK(satisfies_equations(cyclic_group(4), comm).holds);

  auto s3 = fx::s3();
  auto res = satisfies_equations(s3, comm);
  REQUIRE_FALSE(res.holds);
  REQUIRE(res.assignment.size() == 2);
  auto mul = s3.op_index("mul");
  CHECK(s3.apply(mul, res.assignment[0], res.assignment[1]) !=
        s3.apply(mul, res.assignment[1], res.assignment[0]));

  std::vector<Equation> refl{{x(0), x(0), "x=x"}};
  CHECK(satisfies_equations(s3, refl).holds);
  CHECK(satisfies_equations(zn_rng(5), refl).holds);
}

TEST_CASE("satisfies_quasiequations") {
  std::vector<QuasiEquation> reduced{
      {{{op("mul", {x(0), x(0)}), op("zero"), ""}}, {x(0), op("zero"), ""}}};
  CHECK(satisfies_quasiequations(zn_rng(2), reduced).holds);
  auto res = satisfies_quasiequations(zn_rng(4), reduced);
  CHECK_FALSE(res.holds);
  CHECK(res.assignment == std::vector<Elem>{2});

  std::vector<QuasiEquation> trivial{{{}, {x(0), x(0), ""}}};
  CHECK(satisfies_quasiequations(fx::s3(), trivial).holds);
}

TEST_CASE("evaluate terms") {
  auto z5 = zn_rng(5);
  auto t = op("add", {op("mul", {x(0), x(0)}), x(1)});
  std::vector<Elem> env{3, 4};
  CHECK(evaluate(z5, t, env) == (9 + 4) % 5);
  CHECK(t.variable_bound() == 2);
  std::vector<Elem> short_env{3};
  CHECK(code_of([&] { evaluate(z5, t, short_env); }) == ErrorCode::InvalidInput);
}

TEST_CASE("homomorphism enumeration") {
  auto z2 = cyclic_group(2);
  auto homs = enumerate_homs(z2, z2);
  REQUIRE(homs.size() == 2);
  CHECK(homs[0].map() == std::vector<Elem>{0, 0});
  CHECK(homs[1].map() == std::vector<Elem>{0, 1});

  CHECK(enumerate_surjections(z2, cyclic_group(4)).empty());
  for (auto const& x : {cyclic_group(6), fx::s3(), cyclic_group(1)}) {
    CHECK(enumerate_surjections(x, cyclic_group(1)).size() == 1);
  }
  // Z4 -> Z4 endomorphisms are x -> kx.
  CHECK(enumerate_homs(cyclic_group(4), cyclic_group(4)).size() == 4);
  CHECK(enumerate_homs(fx::s3(), cyclic_group(2)).size() == 2);
  CHECK(code_of([] { enumerate_homs(cyclic_group(2), zn_rng(2)); }) ==
        ErrorCode::SignatureMismatch);
}

TEST_CASE("homomorphism checks and composition") {
  auto z4 = cyclic_group(4), z2 = cyclic_group(2);
  CHECK(code_of([&] { Homomorphism(z4, z2, {0, 0, 1, 1}); }) == ErrorCode::NotHomomorphism);
  CHECK(code_of([&] { Homomorphism(z4, z2, {0, 1, 0}); }) == ErrorCode::TableShape);
  CHECK(code_of([&] { Homomorphism(z4, z2, {0, 1, 0, 2}); }) == ErrorCode::OutOfRange);

  auto f = fx::mod_hom(8, 4), g = fx::mod_hom(4, 2);
  auto gf = compose(g, f);
  CHECK(gf == fx::mod_hom(8, 2));
  CHECK(gf.surjective());
  CHECK_FALSE(gf.injective());
  CHECK(code_of([&] { compose(f, g); }) == ErrorCode::FibreMismatch);
  CHECK(code_of([&] { f.inverse(); }) == ErrorCode::PreconditionFailed);

  auto neg = Homomorphism(z4, z4, {0, 3, 2, 1});
  CHECK(neg.injective());
  CHECK(compose(neg, neg.inverse()) == Homomorphism::identity(z4));
}

TEST_CASE("isomorphism search") {
  auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK_FALSE(find_isomorphism(cyclic_group(4), v4));
  auto d3 = dihedral_group(3);
  auto iso = find_isomorphism(d3, fx::s3());
  REQUIRE(iso);
  CHECK(iso->injective());
  CHECK(find_isomorphism(dihedral_quandle(3), dihedral_quandle(3)));
  CHECK_FALSE(find_isomorphism(dihedral_quandle(3), trivial_quandle(3)));
}

TEST_CASE("structural order is total and deterministic") {
  auto a = cyclic_group(4), b = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK((a < b) != (b < a));
  CHECK_FALSE(a < a);
  CHECK(cyclic_group(3) < a);
}
