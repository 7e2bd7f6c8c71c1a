#include "epiclo/closure.hpp"
#include "epiclo/error.hpp"
#include "epiclo/instances.hpp"
#include "epiclo/quotient_form.hpp"
#include "epiclo/reflection.hpp"
#include "fixtures.hpp"

#include <doctest.h>

using namespace epiclo;

namespace {

UniversePtr z4_universe() { return Universe::quotient_closure({cyclic_group(4)}, "z4"); }

std::vector<ClosureOperator::Table> identity_tables(Universe const& u) {
  std::vector<ClosureOperator::Table> t;
  for (std::size_t i = 0; i < u.size(); ++i) {
    ClosureOperator::Table row(u.lattice(i).size());
    for (std::size_t r = 0; r < row.size(); ++r) row[r] = r;
    t.push_back(row);
  }
  return t;
}

ErrorCode make_error(UniversePtr u, std::vector<ClosureOperator::Table> t) {
  try {
    ClosureOperator::make(std::move(u), std::move(t), "bad");
  } catch (Error const& e) {
    return e.code();
  }
  FAIL("accepted");
  return ErrorCode::InvalidInput;
}

std::vector<ClosureOperator> builtins() {
  auto groups = corpus(CorpusKind::groups, 8);
  auto rngs = corpus(CorpusKind::rngs, 12);
  auto quandles = corpus(CorpusKind::quandles, 3);
  return {identity_operator(groups),       top_operator(groups),
          identity_operator(rngs),         top_operator(quandles),
          nilradical_operator(rngs),       quandle_closure_operator(quandles),
          abelianization_operator(groups), elementary_abelian2_operator(groups)};
}

}  // namespace

TEST_CASE("universe basics") {
  auto u = z4_universe();
  REQUIRE(u->size() == 3);
  CHECK(u->quotient_closed());
  CHECK(u->algebra(0).size() == 1);
  CHECK(u->algebra(2) == cyclic_group(4));
  CHECK(u->id(2) == "z4-4-0");
  // Homs: 1->1, 1->2, 1->4, 2->1, 2->2 (x2), 2->4 (x2), 4->1, 4->2 (x2), 4->4 (x4).
  CHECK(u->homs().size() == 15);
  // Surjections: 1->1, 2->1, 2->2, 4->1, 4->2, and the two automorphisms of Z4.
  CHECK(u->surjections().size() == 7);

  auto loc = u->locate(dihedral_quandle(3));
  CHECK_FALSE(loc);
  // Z4 presented with a relabelled carrier.
  auto z4 = cyclic_group(4);
  auto perm = Homomorphism(z4, z4, {0, 3, 2, 1});
  auto located = u->require_member(perm.cod());
  CHECK(located.index == 2);
  CHECK_THROWS_AS(u->require_member(fx::s3()), Error);

  try {
    Universe::make({cyclic_group(4)}, Universe::Closure::quotient_closed, "open");
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::UniverseNotQuotientClosed);
  }
  auto open = Universe::make({cyclic_group(4), cyclic_group(4)}, Universe::Closure::none);
  CHECK(open->size() == 1);
  CHECK_THROWS_AS(open->quotient_link(0, 0), Error);
}

TEST_CASE("make validates operators") {
  auto u = z4_universe();
  CHECK_NOTHROW(ClosureOperator::make(u, identity_tables(*u), "id"));
  CHECK(ClosureOperator::make(u, identity_tables(*u), "id") == identity_operator(u));
  CHECK_NOTHROW(top_operator(u));

  auto t = identity_tables(*u);
  auto const& lat = u->lattice(2);
  t[2][lat.top_index()] = lat.bottom_index();  // C(∇) = Δ
  CHECK(make_error(u, t) == ErrorCode::NotExtensive);

  t = identity_tables(*u);
  t[2][lat.index_of(fx::cong(u->algebra(2), {{0, 2}, {1, 3}}))] = lat.top_index();
  CHECK(make_error(u, t) == ErrorCode::NotNatural);

  t = identity_tables(*u);
  t.pop_back();
  CHECK(make_error(u, t) == ErrorCode::TableShape);
  t = identity_tables(*u);
  t[1][0] = 9;
  CHECK(make_error(u, t) == ErrorCode::OutOfRange);
}

TEST_CASE("identity and top satisfy every axiom") {
  auto u = corpus(CorpusKind::groups, 6);
  for (auto const& c : {identity_operator(u), top_operator(u)}) {
    CHECK(is_extensive(c));
    CHECK(is_monotone(c));
    CHECK(is_natural(c));
    CHECK(is_idempotent(c));
    CHECK(is_cohereditary(c));
    CHECK(is_minimal(c));
    CHECK(preserves_cocartesian(c));
    auto report = operator_report(c);
    CHECK(report["minimal"] == true);
    CHECK(report["witnesses"].empty());
  }
}

TEST_CASE("built-in operators") {
  for (auto const& c : builtins()) {
    CAPTURE(c.name());
    CHECK(is_extensive(c));
    CHECK(is_monotone(c));
    CHECK(is_natural(c));
    CHECK(is_idempotent(c));
    CHECK(is_cohereditary(c));
    CHECK(is_minimal(c).holds == preserves_cocartesian(c).holds);
  }
  auto groups = corpus(CorpusKind::groups, 8);
  CHECK(is_minimal(abelianization_operator(groups)));
  CHECK(is_minimal(quandle_closure_operator(corpus(CorpusKind::quandles, 4))));
}

TEST_CASE("applying an operator to a relabelled algebra") {
  auto groups = corpus(CorpusKind::groups, 6);
  auto ab = abelianization_operator(groups);
  auto s3 = fx::s3();
  CHECK(ab.apply(s3, Congruence::identity(s3)) == fx::s3_a3(s3));
  CHECK(ab.apply(s3, Congruence::total(s3)).is_total());
  auto z4 = cyclic_group(4);
  for (auto const& r : con_lattice(z4)) CHECK(ab.apply(z4, r) == r);
}

TEST_CASE("a non-minimal idempotent cohereditary operator") {
  // Reflection onto {Z1, Z4} inside the rngs {Z1, Z2, Z4}. There is no rng hom
  // Z2 -> Z4, so this is reflective, but Z2 is a quotient of Z4.
  auto u = Universe::quotient_closure({zn_rng(4)}, "z4-rng");
  SubcategoryPredicate pred{"not-z2", [](FiniteAlgebra const& x) { return x.size() != 2; }};
  auto c = closure_from_reflector(oracle_reflector(u, pred));
  CHECK(is_idempotent(c));
  CHECK(is_cohereditary(c));
  auto minimal = is_minimal(c);
  CHECK_FALSE(minimal);
  CHECK_FALSE(minimal.witness.is_null());
  CHECK_FALSE(preserves_cocartesian(c));
  CHECK_FALSE(closed_under_quotients(pred, *u));
}

TEST_CASE("minimality and pushouts agree on enumerated cohereditary operators") {
  for (auto const& g : {cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2)),
                        cyclic_group(3)}) {
    auto u = Universe::quotient_closure({g}, "micro");
    std::size_t cohereditary = 0;
    for (auto const& c : enumerate_closure_operators(u)) {
      CHECK(is_natural(c));
      if (!is_cohereditary(c)) continue;
      ++cohereditary;
      CHECK(is_minimal(c).holds == preserves_cocartesian(c).holds);
    }
    CHECK(cohereditary >= 2);
  }
}

TEST_CASE("enumeration respects its limit") {
  auto u = corpus(CorpusKind::quandles, 3);
  CHECK_THROWS_AS(enumerate_closure_operators(u, 10), Error);
}

TEST_CASE("closed congruences pull back along quotient chains") {
  auto groups = corpus(CorpusKind::groups, 8);
  auto ab = abelianization_operator(groups);
  for (std::size_t i = 0; i < groups->size(); ++i) {
    auto const& x = groups->algebra(i);
    for (auto const& r : groups->lattice(i)) {
      auto q = quotient(x, r);
      for (auto const& s : con_lattice(q.algebra)) {
        auto e = quotient(q.algebra, s).projection;
        auto lhs = ab.apply(x, preimage_congruence(q.projection, kernel_congruence(e)));
        auto rhs = preimage_congruence(q.projection, ab.apply(q.algebra, kernel_congruence(e)));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("strictify") {
  auto u = corpus(CorpusKind::groups, 6);
  CHECK(strictify(identity_operator(u)) == identity_operator(u));
  auto top = strictify(top_operator(u));
  CHECK(top == top_operator(u));
  for (std::size_t i = 0; i < u->size(); ++i) {
    auto const& lat = u->lattice(i);
    CHECK(top.apply_index(i, lat.top_index()) == lat.top_index());
  }
  for (auto const& d : builtins()) {
    auto c = strictify(d);
    CHECK(c == d);
    auto const& uu = *d.universe();
    for (std::size_t i = 0; i < uu.size(); ++i) {
      auto const& lat = uu.lattice(i);
      bool const member = d.apply_index(i, lat.bottom_index()) == lat.bottom_index();
      CHECK(member == (c.apply_index(i, lat.bottom_index()) == lat.bottom_index()));
    }
  }
  auto open = Universe::make({cyclic_group(4)}, Universe::Closure::none);
  CHECK_THROWS_AS(strictify(identity_operator(open)), Error);
}

TEST_CASE("strictify rejects non-idempotent operators") {
  // On {Z1, Z2, Z4}: Δ -> M, M -> ∇ on Z4 and Δ -> ∇ on Z2 is natural but not
  // idempotent.
  auto u = z4_universe();
  auto t = identity_tables(*u);
  auto const& l2 = u->lattice(1);
  auto const& l4 = u->lattice(2);
  auto m = l4.index_of(fx::cong(u->algebra(2), {{0, 2}, {1, 3}}));
  t[1][l2.bottom_index()] = l2.top_index();
  t[2][l4.bottom_index()] = m;
  t[2][m] = l4.top_index();
  auto c = ClosureOperator::make(u, t, "step");
  CHECK_FALSE(is_idempotent(c));
  try {
    strictify(c);
    FAIL("accepted");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::PreconditionFailed);
  }
}

TEST_CASE("operator order is a partial order") {
  auto groups = corpus(CorpusKind::groups, 8);
  std::vector<ClosureOperator> ops{identity_operator(groups), abelianization_operator(groups),
                                   elementary_abelian2_operator(groups), top_operator(groups)};
  for (auto const& a : ops) {
    CHECK(operator_leq(a, a));
    CHECK(operator_leq(ops.front(), a));
    CHECK(operator_leq(a, ops.back()));
    for (auto const& b : ops) {
      if (operator_leq(a, b) && operator_leq(b, a)) CHECK(a == b);
      for (auto const& c : ops) {
        if (operator_leq(a, b) && operator_leq(b, c)) CHECK(operator_leq(a, c));
      }
    }
  }
  CHECK_FALSE(operator_leq(ops[2], ops[1]));
  CHECK_THROWS_AS(operator_leq(ops[0], identity_operator(corpus(CorpusKind::groups, 4))),
                  Error);
}
