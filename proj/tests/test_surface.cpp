#include <random>

#include "doctest.h"
#include "factorcenter/surface.hpp"
#include "test_support.hpp"

using namespace fc;
using fctest::cyclic;
using fctest::klein4;
using fctest::f20;
using fctest::natural;
using fctest::sign_set;
using fctest::sym;

namespace {

std::vector<SurfaceModel> sample_models() {
  std::vector<SurfaceModel> out;
  auto triv = make_group(1, {});
  auto s3 = sym(3);
  auto f = f20();
  out.push_back(SurfaceModel::dp9(triv));
  out.push_back(SurfaceModel::dp9(cyclic(3), false));
  out.push_back(SurfaceModel::dp8(GSet::trivial(triv, 2)));
  out.push_back(SurfaceModel::dp8(sign_set(s3)));
  out.push_back(SurfaceModel::c8(s3));
  out.push_back(SurfaceModel::dp6(GSet::trivial(triv, 2), GSet::trivial(triv, 3)));
  out.push_back(SurfaceModel::dp6(sign_set(s3), natural(s3)));
  out.push_back(SurfaceModel::dp6(GSet::trivial(s3, 2), natural(s3)));
  out.push_back(SurfaceModel::dp5(GSet::trivial(triv, 5)));
  out.push_back(SurfaceModel::dp5(natural(f)));
  out.push_back(SurfaceModel::dp5(natural(sym(5))));
  return out;
}

}  // namespace

TEST_CASE("virtual Neron-Severi sets") {
  auto triv = make_group(1, {});
  auto ring = burnside_ring(triv);
  CHECK(virtual_ns_set(SurfaceModel::dp9(triv)) == BurnsideElement::of_type(ring, 0, 1));
  CHECK(virtual_ns_set(SurfaceModel::c8(triv)) == BurnsideElement::of_type(ring, 0, 2));
  auto dp6 = SurfaceModel::dp6(GSet::trivial(triv, 2), GSet::trivial(triv, 3));
  CHECK(mu(virtual_ns_set(dp6)) == Character{4});
  CHECK_THROWS_AS(virtual_ns_set(SurfaceModel::p2_blowup(LatticeAction::trivial(triv, PicardLattice::blowup_p2(6)))),
                  ValidationError);
  CHECK_THROWS_AS(SurfaceModel::dp8(GSet::trivial(triv, 3)), ValidationError);
}

TEST_CASE("NS character equals the lattice trace for every model") {
  for (const auto& s : sample_models()) {
    CAPTURE(to_string(s.tag));
    auto act = lattice_action_of(s);
    CHECK(act.trace_character() == mu(virtual_ns_set(s)));
    CHECK(ns_character(s) == mu(virtual_ns_set(s)));
    CHECK(picard_rank(s) == orbit_count_from_character(*s.galois, act.trace_character()));
  }
  auto triv = make_group(1, {});
  CHECK(ns_character(SurfaceModel::dp9(triv)) == Character{1});
  CHECK(ns_character(SurfaceModel::p2_blowup(LatticeAction::trivial(triv, PicardLattice::blowup_p2(6)))) ==
        Character{7});
  auto s3 = sym(3);
  CHECK(ns_character(SurfaceModel::dp9(s3)) == Character{1, 1, 1});
}

TEST_CASE("M^j sets") {
  auto triv = make_group(1, {});
  auto dp8 = SurfaceModel::dp8(GSet::trivial(triv, 2));
  CHECK(mj_set(dp8, 2).size() == 2);
  CHECK(mj_set(dp8, 4).size() == 1);
  auto dp6 = SurfaceModel::dp6(GSet::trivial(triv, 2), GSet::trivial(triv, 3));
  CHECK(mj_set(dp6, 2).size() == 3);
  CHECK(orbits(mj_set(dp6, 2)).size() == 3);
  CHECK(mj_set(dp6, 3).size() == 2);
  auto dp5 = SurfaceModel::dp5(GSet::trivial(triv, 5));
  CHECK(mj_set(dp5, 2).size() == 5);
  CHECK(mj_set(dp5, 3).size() == 5);

  auto five = SurfaceModel::dp5(natural(cyclic(5)));
  CHECK(orbits(mj_set(five, 2)).size() == 1);

  // The reconstructed lattice action recovers the attached sets.
  for (const auto& s : sample_models()) {
    if (s.tag == SurfaceTag::dP8) {
      CHECK(is_isomorphic(mj_set(s, 2), *s.z2));
      CHECK(is_isomorphic(mj_set(s, 6), *s.z2));
    }
    if (s.tag == SurfaceTag::dP6) {
      CHECK(is_isomorphic(mj_set(s, 2), *s.z3));
      CHECK(is_isomorphic(mj_set(s, 4), *s.z3));
      CHECK(is_isomorphic(mj_set(s, 3), *s.z2));
    }
    if (s.tag == SurfaceTag::dP5) {
      CHECK(is_isomorphic(mj_set(s, 2), *s.z5));
      CHECK(is_isomorphic(mj_set(s, 3), *s.z5));
    }
  }
}

TEST_CASE("M^j duality") {
  for (const auto& s : sample_models()) {
    if (s.tag == SurfaceTag::dP9 || s.tag == SurfaceTag::C8) continue;
    const int d = s.degree();
    for (int j = 1; j <= d - 1; ++j) {
      if (s.tag == SurfaceTag::dP8 && j % 2 != 0) continue;
      CHECK(mj_duality_check(s, j));
      CHECK(orbits(mj_set(s, j)).size() == orbits(mj_set(s, d - j)).size());
    }
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int r = 3 + trial % 4;
    auto s = SurfaceModel::p2_blowup(random_weyl_action(r, 2, 3, rng));
    for (int j = 1; j <= 8 - r; ++j) CHECK(mj_duality_check(s, j));
  }
}

TEST_CASE("lattice action validation") {
  auto c2 = cyclic(2);
  auto l = PicardLattice::blowup_p2(3);
  auto swap = identity_matrix(4);
  swap[1][1] = swap[2][2] = 0;
  swap[1][2] = swap[2][1] = 1;
  CHECK_NOTHROW(LatticeAction(c2, l, {swap}));
  auto corrupt = swap;
  corrupt[0][1] = 1;
  CHECK_THROWS_AS(LatticeAction(c2, l, {corrupt}), ValidationError);
  // A 3-cycle matrix does not satisfy the relation of an order-2 generator.
  auto cyc = identity_matrix(4);
  cyc[1][1] = cyc[2][2] = cyc[3][3] = 0;
  cyc[2][1] = cyc[3][2] = cyc[1][3] = 1;
  CHECK_THROWS_AS(LatticeAction(c2, l, {cyc}), ValidationError);
}

TEST_CASE("singular fibers and Picard rank") {
  CHECK(singular_fiber_count(8) == 0);
  CHECK(singular_fiber_count(5) == 3);
  CHECK(singular_fiber_count(0) == 8);
  CHECK_THROWS_AS(singular_fiber_count(9), ValidationError);

  auto triv = make_group(1, {});
  CHECK(picard_rank(SurfaceModel::dp9(triv)) == 1);
  auto s3 = sym(3);
  CHECK(picard_rank(SurfaceModel::dp8(sign_set(s3))) == 1);
  CHECK(picard_rank(SurfaceModel::dp6(GSet::trivial(triv, 2), GSet::trivial(triv, 3))) == 4);
  CHECK(picard_rank(SurfaceModel::dp6(sign_set(s3), natural(s3))) == 1);
  CHECK(picard_rank(SurfaceModel::dp5(natural(f20()))) == 1);

  auto s = SurfaceModel::dp8(sign_set(s3));
  const auto before = picard_rank(s);
  s.stack.push_back(natural(s3));
  CHECK(picard_rank(s) == before + 1);
  s.stack.pop_back();
  CHECK(picard_rank(s) == before);
}

TEST_CASE("models_isomorphic") {
  auto s3 = sym(3);
  auto a = SurfaceModel::dp6(sign_set(s3), natural(s3));
  auto b = SurfaceModel::dp6(sign_set(s3), GSet::from_subgroup(s3, Subgroup::generated_by(*s3, std::vector<ElementId>{
                                                                                                    s3->generator_ids()[1]})));
  CHECK(models_isomorphic(a, a));
  CHECK(models_isomorphic(a, b));  // the natural action is the coset action on a transposition stabilizer
  auto c = SurfaceModel::dp6(GSet::trivial(s3, 2), natural(s3));
  CHECK_FALSE(models_isomorphic(a, c));
}
