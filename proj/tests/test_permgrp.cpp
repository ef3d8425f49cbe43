#include <algorithm>
#include <set>
#include <random>

#include "doctest.h"
#include "factorcenter/group.hpp"
#include "test_support.hpp"

using namespace fc;

using fctest::klein4;
using fctest::psl32;
using fctest::sym;

namespace {

std::multiset<std::size_t> class_sizes(const Group& g) {
  std::multiset<std::size_t> s;
  for (const auto& c : g.conjugacy_classes().classes) s.insert(c.size());
  return s;
}

}  // namespace

TEST_CASE("permutation parsing and composition") {
  auto p = Permutation::from_cycles(4, "(0 1 2)");
  auto q = Permutation::from_cycles(4, "(0,1)");
  CHECK(p[0] == 1);
  CHECK((p * q)[0] == 0);  // 0 -> 1 -> 0
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.to_cycles() == "(0 1 2)");
  CHECK(Permutation::identity(3).to_cycles() == "()");
  CHECK_THROWS_AS(Permutation({0, 0, 1}), ValidationError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 3)"), ValidationError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(0 1)(1 2)"), ValidationError);
}

TEST_CASE("group closure") {
  auto trivial = make_group(1, {});
  CHECK(trivial->order() == 1);
  CHECK(trivial->conjugacy_classes().size() == 1);

  auto k = klein4();
  CHECK(k->order() == 4);
  CHECK(k->conjugacy_classes().size() == 4);

  auto g = psl32();
  CHECK(g->order() == 168);
  CHECK(class_sizes(*g) == std::multiset<std::size_t>{1, 21, 42, 56, 24, 24});
  CHECK(g->conjugacy_classes().classes[0] == std::vector<ElementId>{0});

  CHECK_THROWS_AS(make_group(3, {Permutation::identity(4)}), ValidationError);
  Limits tight;
  tight.max_group_order = 100;
  CHECK_THROWS_AS(Group::from_generators(7, {Permutation({1, 2, 3, 4, 5, 6, 0}), Permutation({0, 1, 4, 3, 2, 6, 5})}, tight),
                  ResourceError);
}

TEST_CASE("class sums and conjugation stability") {
  for (auto g : {klein4(), psl32(), sym(5)}) {
    std::size_t total = 0;
    for (const auto& c : g->conjugacy_classes().classes) total += c.size();
    CHECK(total == g->order());
    const auto& cc = g->conjugacy_classes();
    for (ElementId x = 0; x < g->order(); x += 7)
      for (ElementId a = 0; a < g->order(); ++a) CHECK(cc.class_of[g->conjugate(a, x)] == cc.class_of[a]);
  }
}

TEST_CASE("subgroups up to conjugacy") {
  CHECK(subgroups_up_to_conjugacy(*klein4()).size() == 5);
  auto c4 = make_group(4, {Permutation::from_cycles(4, "(0 1 2 3)")});
  auto c4subs = subgroups_up_to_conjugacy(*c4);
  REQUIRE(c4subs.size() == 3);
  CHECK(c4subs[0].order() == 1);
  CHECK(c4subs[1].order() == 2);
  CHECK(c4subs[2].order() == 4);
  CHECK(subgroups_up_to_conjugacy(*sym(4)).size() == 11);
  CHECK(subgroups_up_to_conjugacy(*sym(5)).size() == 19);
  auto l6 = SubgroupLattice::compute(*sym(6));
  CHECK(l6.size() == 56);
  CHECK(l6.total_subgroups() == 1455);
  for (const auto& h : l6.classes()) CHECK(720 % h.order() == 0);
}

TEST_CASE("lattice output is independent of generator order") {
  auto a = make_group(5, {Permutation::from_cycles(5, "(0 1)"), Permutation::from_cycles(5, "(0 1 2 3 4)")});
  auto b = make_group(5, {Permutation::from_cycles(5, "(0 1 2 3 4)"), Permutation::from_cycles(5, "(0 1)")});
  auto la = subgroups_up_to_conjugacy(*a);
  auto lb = subgroups_up_to_conjugacy(*b);
  REQUIRE(la.size() == lb.size());
  for (std::size_t i = 0; i < la.size(); ++i) CHECK(la[i].elements() == lb[i].elements());
}

TEST_CASE("are_conjugate") {
  auto k = klein4();
  auto h1 = Subgroup::generated_by(*k, std::vector<ElementId>{k->generator_ids()[0]});
  auto h2 = Subgroup::generated_by(*k, std::vector<ElementId>{k->generator_ids()[1]});
  CHECK(are_conjugate(*k, h1, h1));
  CHECK_FALSE(are_conjugate(*k, h1, h2));

  auto g = psl32();
  std::vector<ElementId> point_stab, line_stab;
  for (ElementId i = 0; i < g->order(); ++i) {
    const auto& p = g->element(i);
    if (p[0] == 0) point_stab.push_back(i);
    std::vector<Point> line{p[0], p[1], p[3]};
    std::sort(line.begin(), line.end());
    if (line == std::vector<Point>{0, 1, 3}) line_stab.push_back(i);
  }
  auto hp = Subgroup::from_elements(*g, point_stab);
  auto hl = Subgroup::from_elements(*g, line_stab);
  CHECK(hp.order() == 24);
  CHECK(hl.order() == 24);
  CHECK_FALSE(are_conjugate(*g, hp, hl));
  CHECK(class_distribution(*g, hp) == class_distribution(*g, hl));

  // Equivalence relation on sampled triples from S4.
  auto s4 = sym(4);
  std::vector<Subgroup> all;
  std::mt19937 rng(7);
  for (int i = 0; i < 12; ++i) {
    std::vector<ElementId> gens{static_cast<ElementId>(rng() % 24)};
    all.push_back(Subgroup::generated_by(*s4, gens));
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      CHECK(are_conjugate(*s4, a, b) == are_conjugate(*s4, b, a));
      for (const auto& c : all)
        if (are_conjugate(*s4, a, b) && are_conjugate(*s4, b, c)) CHECK(are_conjugate(*s4, a, c));
    }
}

TEST_CASE("subgroup validation") {
  auto k = klein4();
  CHECK_THROWS_AS(Subgroup::from_elements(*k, {1}), ValidationError);
  CHECK_THROWS_AS(Subgroup::from_elements(*k, {0, 1, 2}), ValidationError);
}
