// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "factorcenter/burnside.hpp"
#include "factorcenter/links.hpp"
#include "factorcenter/surface.hpp"
#include "lattice_oracle.hpp"
#include "test_support.hpp"

using namespace fc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

GroupPtr as_group(const Group& parent, const Subgroup& h) {
  std::vector<Permutation> gens;
  for (ElementId x : h.generators()) gens.push_back(parent.element(x));
  return make_group(parent.degree(), gens);
}

bool faithful(const GSet& a) { return kernel(a).order() == 1; }

std::string orbit_shape(const GSet& a) {
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits(a)) sizes.push_back(o.size());
  std::sort(sizes.rbegin(), sizes.rend());
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "+" : "") + std::to_string(sizes[i]);
  return s;
}

Outcome small_order_triviality() {
  std::size_t groups = 0, faithful_pairs = 0, any_pairs = 0;
  auto s5 = fctest::sym(5);
  const auto lattice_s5 = SubgroupLattice::compute(*s5);
  for (const auto& h : lattice_s5.classes()) {
    auto g = as_group(*s5, h);
    ++groups;
    for (const auto& p : gassmann_search(burnside_ring(g), 5, false)) {
      if (p.isomorphic) continue;
      ++any_pairs;
      if (faithful(p.a) && faithful(p.b)) ++faithful_pairs;
    }
  }
  std::size_t transitive_groups = 0, transitive_pairs = 0;
  auto s6 = fctest::sym(6);
  const auto lattice_s6 = SubgroupLattice::compute(*s6);
  for (const auto& h : lattice_s6.classes()) {
    auto g = as_group(*s6, h);
    if (!is_transitive(*g)) continue;
    ++transitive_groups;
    for (const auto& p : gassmann_search(burnside_ring(g), 6, true))
      if (!p.isomorphic) ++transitive_pairs;
  }
  std::ostringstream d;
  d << groups << " subgroup classes of Sym(5): " << faithful_pairs << " faithful pairs (" << any_pairs
    << " in total); " << transitive_groups << " transitive subgroups of Sym(6): " << transitive_pairs << " pairs";
  return {faithful_pairs == 0 && transitive_pairs == 0, d.str()};
}

Outcome klein_pair() {
  auto pairs = gassmann_search(burnside_ring(fctest::klein4()), 6, false);
  std::set<std::string> shapes;
  bool good = pairs.size() == 1;
  for (const auto& p : pairs) {
    shapes = {orbit_shape(p.a), orbit_shape(p.b)};
    good = good && !p.isomorphic && is_gassmann(p.a, p.b) && !is_isomorphic(p.a, p.b);
  }
  good = good && shapes == std::set<std::string>{"2+2+2", "4+1+1"};
  std::ostringstream d;
  d << pairs.size() << " pair(s)";
  for (const auto& s : shapes) d << " " << s;
  return {good, d.str()};
}

Outcome order_seven() {
  auto s7 = fctest::sym(7);
  std::size_t transitive_groups = 0, pairs = 0;
  std::vector<std::size_t> orders;
  const auto lattice_s7 = SubgroupLattice::compute(*s7);
  for (const auto& h : lattice_s7.classes()) {
    auto g = as_group(*s7, h);
    if (!is_transitive(*g)) continue;
    ++transitive_groups;
    for (const auto& p : gassmann_search(burnside_ring(g), 7, true)) {
      if (p.isomorphic) continue;
      ++pairs;
      orders.push_back(g->order());
    }
  }
  std::ostringstream d;
  d << transitive_groups << " transitive subgroups of Sym(7), " << pairs << " non-isomorphic pair(s)";
  for (auto o : orders) d << " in order " << o;
  return {pairs == 1 && orders == std::vector<std::size_t>{168}, d.str()};
}

Outcome cyclic_triviality() {
  std::size_t searched_pairs = 0, gassmann = 0, bad = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(trial_seed(4, seed));
    auto g = fctest::cyclic(1 + rng() % 30);
    auto ring = burnside_ring(g);
    searched_pairs += gassmann_search(ring, 8, false).size();
    for (int k = 0; k < 5; ++k) {
      const std::size_t size = 1 + rng() % 12;
      GSet a = random_gset(g, size, rng);
      GSet b = random_gset(g, size, rng);
      if (is_gassmann(a, b)) {
        ++gassmann;
        if (!is_isomorphic(a, b)) ++bad;
      }
    }
  }
  std::ostringstream d;
  d << "200 cyclic groups: " << searched_pairs << " pairs up to degree 8; " << gassmann
    << " Gassmann random pairs, " << bad << " non-isomorphic";
  return {searched_pairs == 0 && bad == 0, d.str()};
}

Outcome lattice_lists() {
  bool good = true;
  std::ostringstream d;
  for (int r = 0; r <= 6; ++r) {
    auto l = PicardLattice::blowup_p2(r);
    const int deg = 9 - r;
    for (int j = 1; j <= deg - 1; ++j) {
      auto list = rational_degree_classes(l, j).classes;
      std::set<DivisorClass> got(list.begin(), list.end());
      if (got != fctest::family_oracle(r, j) || got.size() != list.size()) {
        good = false;
        d << " family mismatch r=" << r << " j=" << j << ";";
      }
      if (r <= 5 && list != fctest::box_scan(l, j, j - 2, 4)) {
        good = false;
        d << " box mismatch r=" << r << " j=" << j << ";";
      }
    }
  }
  auto count = [](const PicardLattice& l, int j) { return rational_degree_classes(l, j).classes.size(); };
  auto quadric = PicardLattice::quadric();
  const std::vector<std::size_t> trivial = {count(quadric, 2), count(quadric, 4),
                                            count(PicardLattice::blowup_p2(3), 2), count(PicardLattice::blowup_p2(3), 3),
                                            count(PicardLattice::blowup_p2(4), 2), count(PicardLattice::blowup_p2(4), 3)};
  for (int j : {2, 4, 6})
    if (rational_degree_classes(quadric, j).classes != fctest::box_scan(quadric, j, j - 2, 6)) {
      good = false;
      d << " quadric box mismatch j=" << j << ";";
    }
  good = good && trivial == std::vector<std::size_t>{2, 1, 3, 2, 5, 5};
  std::vector<std::size_t> neg;
  for (int r = 0; r <= 6; ++r) {
    auto l = PicardLattice::blowup_p2(r);
    auto c = neg_one_classes(l).classes;
    neg.push_back(c.size());
    if (c != fctest::box_scan(l, 1, -1, r <= 5 ? 4 : 3)) {
      good = false;
      d << " (-1) box mismatch r=" << r << ";";
    }
  }
  good = good && neg == std::vector<std::size_t>{0, 1, 3, 6, 10, 16, 27};
  d << " dP8 (" << trivial[0] << "," << trivial[1] << ") dP6 (" << trivial[2] << "," << trivial[3] << ") dP5 ("
    << trivial[4] << "," << trivial[5] << "); (-1)-classes";
  for (auto n : neg) d << " " << n;
  return {good, d.str()};
}

Outcome duality() {
  std::size_t lists = 0, bijective = 0;
  std::vector<PicardLattice> lattices = {PicardLattice::quadric()};
  for (int r = 0; r <= 6; ++r) lattices.push_back(PicardLattice::blowup_p2(r));
  for (const auto& l : lattices) {
    const int deg = static_cast<int>(l.degree());
    for (int j = 1; j <= deg - 1; ++j) {
      if (l.kind() == LatticeKind::Quadric && j % 2) continue;
      auto from = rational_degree_classes(l, j).classes;
      auto to = rational_degree_classes(l, deg - j).classes;
      std::vector<DivisorClass> image;
      for (const auto& c : from) image.push_back(adjoint_dual(l, c));
      std::sort(image.begin(), image.end());
      ++lists;
      if (image == to) ++bijective;
    }
  }
  std::size_t samples = 0, dual = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(trial_seed(6, seed));
    const int r = 2 + static_cast<int>(rng() % 5);
    auto act = random_weyl_action(r, 1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 6), rng);
    auto s = SurfaceModel::p2_blowup(act);
    bool all = true;
    for (int j = 1; j <= s.degree() - 1; ++j) all = all && mj_duality_check(s, j);
    ++samples;
    if (all) ++dual;
  }
  std::ostringstream d;
  d << bijective << "/" << lists << " lists map bijectively under D -> -K - D; " << dual << "/" << samples
    << " sampled actions satisfy M^j = M^(d-j)";
  return {bijective == lists && dual == samples, d.str()};
}

Outcome delta_table() {
  bool good = true;
  std::ostringstream d;
  for (const auto& row : delta_rows()) {
    auto rep = verify_delta_row(row.tag());
    const bool exact = rep.ok && rep.families == 1 && rep.delta == row.delta &&
                       rep.contracted.size() == static_cast<std::size_t>(row.b - row.d);
    bool mutations = true;
    for (int m : {row.delta - 1, row.delta + 1})
      if (m >= 1 && verify_delta_row(row.tag(), m).ok) mutations = false;
    good = good && exact && mutations;
    d << " " << row.tag().name() << "(d=" << row.delta << ",n=" << rep.contracted.size() << ")"
      << (exact && mutations ? "" : "!");
  }
  d << "; " << classified_delta_rows().size() << " classified rows plus " << delta_rows().size() - classified_delta_rows().size()
    << " more, delta +- 1 rejected";
  return {good, d.str()};
}

Outcome mu_consistency() {
  auto t = verify_table(100, 2024);
  std::size_t links = 0, balanced = 0;
  for (const auto& l : t.links) {
    ++links;
    if (l.ok()) ++balanced;
  }
  std::size_t models = 0, equal = 0;
  std::set<std::string> families;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(trial_seed(8, seed));
    const auto& pool = fctest::galois_pool();
    auto g = pool[rng() % pool.size()];
    for (auto tag : fctest::large_degree_tags()) {
      auto s = random_model(tag, g, rng);
      ++models;
      families.insert(to_string(tag));
      const Character chi = mu(virtual_ns_set(s));
      if (ns_character(s) == chi && lattice_action_of(s).trace_character() == chi) ++equal;
    }
  }
  std::ostringstream d;
  d << balanced << "/" << links << " links balanced over 100 assignments; " << equal << "/" << models
    << " models with ns_character = mu(A_X) over " << families.size() << " families";
  return {t.ok() && balanced == links && equal == models && families.size() == 5, d.str()};
}

SurfaceModel with_stack(SurfaceModel s, std::mt19937_64& rng) {
  const std::size_t n = rng() % 3;
  for (std::size_t i = 0; i < n; ++i) s.stack.push_back(random_gset(s.galois, 1 + rng() % 3, rng));
  return s;
}

Outcome zero_on_loops() {
  std::size_t trials = 0, zero = 0, longest = 0, moves = 0;
  const auto& pool = fctest::galois_pool();
  for (std::uint64_t src = 0; src < 100; ++src) {
    std::mt19937_64 rng(trial_seed(9, src));
    auto g = pool[rng() % pool.size()];
    const auto& tags = fctest::large_degree_tags();
    SurfaceModel s = random_model(tags[rng() % tags.size()], g, rng);
    if (src % 4 == 1) s = with_stack(s, rng);
    auto rep = loop_invariance_check(s, 100, 12, src);
    trials += rep.trials;
    zero += rep.zero;
    moves += rep.total_moves;
    longest = std::max(longest, rep.longest);
  }
  auto chain = dp5_chain_example();
  std::multiset<std::size_t> up, down;
  for (const auto& z : chain.evaluation.ledger.blowups) up.insert(z.size());
  for (const auto& z : chain.evaluation.ledger.blowdowns) down.insert(z.size());
  const bool ledger = up == std::multiset<std::size_t>{1, 2, 5} && down == up;
  std::ostringstream d;
  d << zero << "/" << trials << " loops with c = 0 (" << moves << " moves, longest " << longest << "); dp5 chain c "
    << (chain.evaluation.c.is_zero() ? "= 0" : "!= 0") << " with [Z2] - [Z2'] + [Z5] - [Z5'] + [pt] - [pt]";
  return {trials == 10000 && zero == trials && chain.ok() && ledger, d.str()};
}

Outcome rationality_centers() {
  std::size_t targets = 0, agree = 0, words = 0;
  const auto& pool = fctest::galois_pool();
  const std::vector<SurfaceTag> tags = {SurfaceTag::dP9, SurfaceTag::dP8, SurfaceTag::C8, SurfaceTag::dP6,
                                        SurfaceTag::dP5};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(trial_seed(10, seed));
    auto g = pool[rng() % pool.size()];
    SurfaceModel target = with_stack(random_model(tags[seed % tags.size()], g, rng), rng);
    const SurfaceModel plane = SurfaceModel::dp9(g);
    std::vector<MoveWord> ws;
    ws.push_back({plane, building_path(target)});
    MoveWord loop = random_loop(plane, 12, rng);
    ws.push_back(concatenate(loop, MoveWord{evaluate_word(loop).target, building_path(target)}));
    std::vector<Move> blowups;
    for (const auto& z : target.stack) blowups.push_back(Move::blow_up(z));
    if (target.tag == SurfaceTag::dP5) {
      std::vector<Move> alt = {Move::link(LinkTag::iid(9, 7, 8), random_gset(g, 2, rng)),
                               Move::link(LinkTag::iid(8, 3, 5), *target.z5)};
      alt.insert(alt.end(), blowups.begin(), blowups.end());
      ws.push_back({plane, alt});
    }
    if (target.tag == SurfaceTag::dP8) {
      std::vector<Move> alt = {Move::link(LinkTag::iid(9, 4, 5), random_gset(g, 5, rng)),
                               Move::link(LinkTag::iid(5, 3, 8), *target.z2)};
      alt.insert(alt.end(), blowups.begin(), blowups.end());
      ws.push_back({plane, alt});
    }
    ++targets;
    bool same = true;
    const BurnsideElement first = rationality_center(ws[0]);
    for (const auto& w : ws) {
      ++words;
      same = same && models_isomorphic(evaluate_word(w).target, target) && rationality_center(w) == first;
    }
    if (same) ++agree;
  }
  auto cubic = cubic_example_suite();
  const bool cubic_ok = cubic.ok() && cubic.gassmann && !cubic.isomorphic &&
                        cubic.ns_character == cubic.ns_character_prime && !(cubic.center == cubic.center_prime) &&
                        cubic.fixed_lines == 3 && cubic.fixed_lines_prime == 5;
  std::ostringstream d;
  d << agree << "/" << targets << " targets agree across " << words << " words; cubic: equal NS characters "
    << (cubic.ns_character == cubic.ns_character_prime) << ", distinct centers "
    << !(cubic.center == cubic.center_prime) << ", fixed lines " << cubic.fixed_lines << " vs "
    << cubic.fixed_lines_prime;
  return {agree == targets && cubic_ok, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria = {
      {"gassmann small-order triviality", small_order_triviality},
      {"klein four pair", klein_pair},
      {"order-7 uniqueness", order_seven},
      {"cyclic triviality", cyclic_triviality},
      {"lattice lists", lattice_lists},
      {"duality", duality},
      {"delta table", delta_table},
      {"mu consistency", mu_consistency},
      {"loops and dp5 chain", zero_on_loops},
      {"rationality centers and cubic suite", rationality_centers},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].name << ": " << o.detail << " ["
              << static_cast<int>(secs * 10) / 10.0 << "s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
