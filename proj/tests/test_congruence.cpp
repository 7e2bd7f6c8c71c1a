#include "epiclo/congruence.hpp"
#include "epiclo/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace epiclo;

namespace {

std::vector<FiniteAlgebra> small_algebras() {
  std::vector<FiniteAlgebra> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto& g : enumerate_groups(n)) out.push_back(g);
    out.push_back(zn_rng(n));
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto& q : enumerate_quandles(n)) out.push_back(q);
  }
  return out;
}

}  // namespace

TEST_CASE("congruences are stored canonically") {
  auto z4 = cyclic_group(4);
  auto r = Congruence::from_labels(z4, std::vector<Elem>{7, 3, 7, 3});
  CHECK(std::vector<Elem>(r.labels().begin(), r.labels().end()) ==
        std::vector<Elem>{0, 1, 0, 1});
  CHECK(r == fx::cong(z4, {{1, 3}, {2, 0}}));
  CHECK(r.blocks() == std::vector<std::vector<Elem>>{{0, 2}, {1, 3}});
  CHECK(r.representatives() == std::vector<Elem>{0, 1});
  CHECK(r.block_count() == 2);
}

TEST_CASE("non-congruences are rejected") {
  auto z4 = cyclic_group(4);
  CHECK_THROWS_AS(fx::cong(z4, {{0, 1}, {2, 3}}), Error);
  try {
    fx::cong(z4, {{0, 1}, {2, 3}});
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotCongruence);
  }
  auto expect = [&](std::vector<std::vector<Elem>> blocks, ErrorCode code) {
    try {
      Congruence::from_blocks(z4, blocks);
      FAIL("accepted");
    } catch (Error const& e) {
      CHECK(e.code() == code);
    }
  };
  expect({{0, 2}, {1}}, ErrorCode::InvalidInput);
  expect({{0, 2}, {1, 3}, {}}, ErrorCode::InvalidInput);
  expect({{0, 2}, {1, 3, 3}}, ErrorCode::InvalidInput);
  expect({{0, 2}, {1, 3, 9}}, ErrorCode::OutOfRange);
}

TEST_CASE("kernel congruence") {
  auto f = fx::mod_hom(4, 2);
  CHECK(kernel_congruence(f) == fx::cong(f.dom(), {{0, 2}, {1, 3}}));
  auto z6 = cyclic_group(6);
  CHECK(kernel_congruence(Homomorphism::identity(z6)).is_identity());
  CHECK(kernel_congruence(Homomorphism(z6, cyclic_group(1), std::vector<Elem>(6, 0))).is_total());
}

TEST_CASE("quotient") {
  auto z4 = cyclic_group(4);
  auto q = quotient(z4, fx::cong(z4, {{0, 2}, {1, 3}}));
  CHECK(q.algebra == cyclic_group(2));
  CHECK(q.projection.map() == std::vector<Elem>{0, 1, 0, 1});
  CHECK(q.projection.surjective());

  auto s3 = fx::s3();
  CHECK(quotient(s3, Congruence::identity(s3)).algebra == s3);
  auto top = quotient(s3, Congruence::total(s3));
  CHECK(top.algebra.size() == 1);
  CHECK(top.algebra.tag() == Variety::group);
}

TEST_CASE("generated congruence examples") {
  auto z4 = cyclic_group(4);
  std::vector<ElemPair> p02{{0, 2}}, p01{{0, 1}}, none;
  CHECK(generated_congruence(z4, p02) == fx::cong(z4, {{0, 2}, {1, 3}}));
  CHECK(generated_congruence(z4, p01).is_total());
  CHECK(generated_congruence(z4, none).is_identity());
  std::vector<ElemPair> bad{{0, 4}};
  CHECK_THROWS_AS(generated_congruence(z4, bad), Error);
}

TEST_CASE("con_lattice examples") {
  auto z4 = cyclic_group(4);
  auto lat = con_lattice(z4);
  REQUIRE(lat.size() == 3);
  CHECK(lat.bottom().is_identity());
  CHECK(lat.top().is_total());
  CHECK(std::find(lat.begin(), lat.end(), fx::cong(z4, {{0, 2}, {1, 3}})) != lat.end());

  auto one = con_lattice(cyclic_group(1));
  CHECK(one.size() == 1);
  CHECK(one.bottom_index() == one.top_index());

  // Con(S3): Δ, A3 cosets, ∇.
  auto s3 = fx::s3();
  auto ls3 = con_lattice(s3);
  CHECK(ls3.size() == 3);
  CHECK_NOTHROW(ls3.index_of(fx::s3_a3(s3)));
  CHECK_THROWS_AS(ls3.index_of(Congruence::identity(z4)), Error);

  // The dihedral quandle on Z3 is simple; the trivial one has all 5 partitions.
  CHECK(con_lattice(dihedral_quandle(3)).size() == 2);
  CHECK(con_lattice(trivial_quandle(3)).size() == 5);
}

TEST_CASE("join and meet identities") {
  auto z4 = cyclic_group(4);
  auto r = fx::cong(z4, {{0, 2}, {1, 3}});
  CHECK(join(Congruence::identity(z4), r) == r);
  CHECK(meet(Congruence::total(z4), r) == r);
  CHECK_THROWS_AS(join(r, Congruence::identity(cyclic_group(2))), Error);
  CHECK_THROWS_AS(r.leq(Congruence::identity(cyclic_group(2))), Error);
}

TEST_CASE("con_lattice matches the all-partitions scan") {
  for (auto const& a : small_algebras()) {
    auto lat = con_lattice(a);
    auto scan = oracle::partition_scan(a);
    REQUIRE(lat.elements() == scan);
  }
}

TEST_CASE("generated congruence equals the meet of containing congruences") {
  for (auto const& a : small_algebras()) {
    std::size_t const n = a.size();
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x + 1; y < n; ++y) {
        std::vector<ElemPair> one{{x, y}};
        CHECK(generated_congruence(a, one) == oracle::meet_of_containing(a, one));
        for (Elem z = 0; z + 1 < n; ++z) {
          std::vector<ElemPair> two{{x, y}, {z, static_cast<Elem>(z + 1)}};
          CHECK(generated_congruence(a, two) == oracle::meet_of_containing(a, two));
        }
      }
    }
  }
}

TEST_CASE("lattice laws on every enumerated lattice") {
  for (auto const& a : small_algebras()) {
    auto lat = con_lattice(a);
    for (auto const& r : lat) {
      CHECK(join(r, r) == r);
      CHECK(meet(r, r) == r);
      CHECK(lat.bottom().leq(r));
      CHECK(r.leq(lat.top()));
      // ker(q_R) = R
      CHECK(kernel_congruence(quotient(a, r).projection) == r);
      for (auto const& s : lat) {
        auto j = join(r, s), m = meet(r, s);
        CHECK(j == join(s, r));
        CHECK(m == meet(s, r));
        CHECK(join(r, m) == r);
        CHECK(meet(r, j) == r);
        CHECK(r.leq(s) == (j == s));
        CHECK_NOTHROW(lat.index_of(j));
        CHECK_NOTHROW(lat.index_of(m));
        for (auto const& t : lat) {
          CHECK(join(join(r, s), t) == join(r, join(s, t)));
          CHECK(meet(meet(r, s), t) == meet(r, meet(s, t)));
        }
      }
    }
  }
}

TEST_CASE("kernels of enumerated homs are congruences") {
  auto algs = small_algebras();
  for (auto const& x : algs) {
    if (x.size() > 4) continue;
    for (auto const& y : algs) {
      if (y.size() > 4 || !same_signature(x, y)) continue;
      for (auto const& f : enumerate_homs(x, y)) {
        auto k = kernel_congruence(f);
        CHECK_FALSE(find_incompatibility(x, k.labels()));
      }
    }
  }
}
