#include "factorcenter/gset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fc {

namespace {

std::vector<Point> identity_images(std::size_t n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  return v;
}

void require_bijection(const std::vector<Point>& images, std::size_t size) {
  if (images.size() != size) throw ValidationError("action array has length " + std::to_string(images.size()) +
                                                   ", expected " + std::to_string(size));
  std::vector<bool> seen(size, false);
  for (Point y : images) {
    if (y >= size || seen[y]) throw ValidationError("action array is not a bijection of the point set");
    seen[y] = true;
  }
}

void require_same_group(const GSet& a, const GSet& b) {
  if (a.group() != b.group() && !a.group()->same_as(*b.group()))
    throw ValidationError("G-sets are attached to different groups");
}

}  // namespace

GSet::GSet(GroupPtr group, std::size_t size, std::vector<std::vector<Point>> generator_images)
    : group_(std::move(group)), size_(size), generator_images_(std::move(generator_images)) {
  if (!group_) throw ValidationError("G-set without a group");
  if (generator_images_.size() != group_->generators().size())
    throw ValidationError("G-set gives " + std::to_string(generator_images_.size()) + " generator actions for " +
                          std::to_string(group_->generators().size()) + " generators");
  for (const auto& img : generator_images_) require_bijection(img, size_);
  build_actions();
}

void GSet::build_actions() {
  const Group& g = *group_;
  actions_.assign(g.order(), {});
  actions_[Group::identity()] = identity_images(size_);
  std::vector<bool> visited(g.order(), false);
  visited[Group::identity()] = true;
  std::vector<ElementId> queue{Group::identity()};
  const auto& gens = g.generator_ids();
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const ElementId x = queue[k];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const ElementId y = g.multiply(x, gens[s]);
      std::vector<Point> img(size_);
      for (std::size_t p = 0; p < size_; ++p) img[p] = generator_images_[s][actions_[x][p]];
      if (!visited[y]) {
        visited[y] = true;
        actions_[y] = std::move(img);
        queue.push_back(y);
      } else if (actions_[y] != img) {
        throw ValidationError("generator actions do not satisfy the group relations");
      }
    }
  }
}

GSet GSet::from_subgroup(GroupPtr group, const Subgroup& h) {
  const Group& g = *group;
  constexpr Point kUnset = 0xffffffffU;
  std::vector<Point> coset_of(g.order(), kUnset);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    const auto c = static_cast<Point>(reps.size());
    reps.push_back(x);
    for (ElementId e : h.elements()) coset_of[g.multiply(e, x)] = c;
  }
  std::vector<std::vector<Point>> images;
  for (ElementId s : g.generator_ids()) {
    std::vector<Point> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) img[c] = coset_of[g.multiply(reps[c], s)];
    images.push_back(std::move(img));
  }
  return GSet(std::move(group), reps.size(), std::move(images));
}

GSet GSet::trivial(GroupPtr group, std::size_t size) {
  std::vector<std::vector<Point>> images(group->generators().size(), identity_images(size));
  return GSet(std::move(group), size, std::move(images));
}

GSet GSet::from_element_actions(GroupPtr group, std::size_t size, std::vector<std::vector<Point>> actions) {
  if (actions.size() != group->order()) throw ValidationError("element action table has the wrong length");
  std::vector<std::vector<Point>> images;
  for (ElementId s : group->generator_ids()) images.push_back(actions[s]);
  GSet a(std::move(group), size, std::move(images));
  for (ElementId x = 0; x < a.group()->order(); ++x)
    if (a.actions_[x] != actions[x]) throw ValidationError("element actions are not a group action");
  return a;
}

Subgroup GSet::stabilizer(Point x) const {
  std::vector<ElementId> elems;
  for (ElementId g = 0; g < group_->order(); ++g)
    if (actions_[g][x] == x) elems.push_back(g);
  return Subgroup::from_elements(*group_, std::move(elems));
}

std::vector<std::vector<Point>> orbits(const GSet& a) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(a.size(), false);
  for (Point x = 0; x < a.size(); ++x) {
    if (seen[x]) continue;
    std::vector<Point> orbit{x};
    seen[x] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& img : a.generator_images()) {
        Point y = img[orbit[k]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::int64_t orbit_count_from_character(const Group& g, const Character& chi) {
  const auto& cc = g.conjugacy_classes();
  std::int64_t total = 0;
  for (std::size_t c = 0; c < cc.size(); ++c) total += chi[c] * static_cast<std::int64_t>(cc.classes[c].size());
  if (total % static_cast<std::int64_t>(g.order()) != 0)
    throw ValidationError("character is not a virtual permutation character");
  return total / static_cast<std::int64_t>(g.order());
}

Character fixed_point_character(const GSet& a) {
  const auto& cc = a.group()->conjugacy_classes();
  Character chi(cc.size(), 0);
  for (std::size_t c = 0; c < cc.size(); ++c) {
    const auto& act = a.action(cc.representatives[c]);
    for (Point x = 0; x < a.size(); ++x)
      if (act[x] == x) ++chi[c];
  }
  return chi;
}

Subgroup kernel(const GSet& a) {
  std::vector<ElementId> elems;
  for (ElementId g = 0; g < a.group()->order(); ++g) {
    bool fixes_all = true;
    for (Point x = 0; x < a.size() && fixes_all; ++x) fixes_all = a.image(x, g) == x;
    if (fixes_all) elems.push_back(g);
  }
  return Subgroup::from_elements(*a.group(), std::move(elems));
}

std::pair<GroupPtr, GSet> faithful_quotient(const GSet& a) {
  const std::size_t n = a.size();
  std::vector<Permutation> gens;
  for (const auto& img : a.generator_images()) gens.emplace_back(img);
  auto q = make_group(n, gens);
  std::vector<std::vector<Point>> images;
  for (const auto& img : a.generator_images()) images.push_back(img);
  return {q, GSet(q, n, std::move(images))};
}

bool is_gassmann(const GSet& a, const GSet& b) {
  require_same_group(a, b);
  if (a.size() != b.size()) return false;
  if (!(kernel(a) == kernel(b))) return false;
  return fixed_point_character(a) == fixed_point_character(b);
}

bool is_isomorphic(const GSet& a, const GSet& b) {
  require_same_group(a, b);
  if (a.size() != b.size()) return false;
  const Group& g = *a.group();
  auto oa = orbits(a);
  auto ob = orbits(b);
  if (oa.size() != ob.size()) return false;
  std::vector<Subgroup> sb;
  for (const auto& o : ob) sb.push_back(b.stabilizer(o.front()));
  std::vector<bool> used(ob.size(), false);
  // Conjugacy is an equivalence relation, so greedy matching is exact.
  for (const auto& o : oa) {
    const Subgroup h = a.stabilizer(o.front());
    bool matched = false;
    for (std::size_t j = 0; j < ob.size() && !matched; ++j) {
      if (used[j] || ob[j].size() != o.size()) continue;
      if (are_conjugate(g, h, sb[j])) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

GSet disjoint_union(const GSet& a, const GSet& b) {
  require_same_group(a, b);
  std::vector<std::vector<Point>> images;
  for (std::size_t s = 0; s < a.generator_images().size(); ++s) {
    std::vector<Point> img = a.generator_images()[s];
    for (Point y : b.generator_images()[s]) img.push_back(static_cast<Point>(y + a.size()));
    images.push_back(std::move(img));
  }
  return GSet(a.group(), a.size() + b.size(), std::move(images));
}

GSet disjoint_union(GroupPtr group, const std::vector<GSet>& parts) {
  GSet acc = GSet::trivial(std::move(group), 0);
  for (const auto& p : parts) acc = disjoint_union(acc, p);
  return acc;
}

GSet restrict_to(const GSet& a, const std::vector<Point>& points) {
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  constexpr Point kOut = 0xffffffffU;
  std::vector<Point> renumber(a.size(), kOut);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= a.size()) throw ValidationError("restriction point out of range");
    renumber[sorted[i]] = static_cast<Point>(i);
  }
  std::vector<std::vector<Point>> images;
  for (const auto& img : a.generator_images()) {
    std::vector<Point> r(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      r[i] = renumber[img[sorted[i]]];
      if (r[i] == kOut) throw ValidationError("restriction to a subset that is not invariant");
    }
    images.push_back(std::move(r));
  }
  return GSet(a.group(), sorted.size(), std::move(images));
}

GSet twist(const GSet& a, const std::vector<ElementId>& element_map) {
  const Group& g = *a.group();
  if (element_map.size() != g.order()) throw ValidationError("automorphism table has the wrong length");
  std::vector<std::vector<Point>> images;
  for (ElementId s : g.generator_ids()) images.push_back(a.action(element_map[s]));
  GSet out(a.group(), a.size(), std::move(images));
  return out;
}

std::vector<ElementId> automorphism_from_normalizer(const Group& g, const Permutation& x) {
  if (x.degree() != g.degree()) throw ValidationError("normalizing permutation has the wrong degree");
  const Permutation xi = x.inverse();
  std::vector<ElementId> map(g.order());
  for (ElementId e = 0; e < g.order(); ++e) {
    std::int64_t idx = g.index_of(xi * g.element(e) * x);
    if (idx < 0) throw ValidationError("permutation does not normalize the group");
    map[e] = static_cast<ElementId>(idx);
  }
  return map;
}

GroupPtr subgroup_as_group(const Group& g, const Subgroup& h) {
  std::vector<Permutation> gens;
  for (ElementId s : h.generators()) gens.push_back(g.element(s));
  return make_group(g.degree(), std::move(gens));
}

GSet induce(GroupPtr group, const Subgroup& h, const GSet& a) {
  const Group& g = *group;
  const Group& hg = *a.group();
  if (hg.order() != h.order()) throw ValidationError("induction: set is not over the given subgroup");
  constexpr Point kUnset = 0xffffffffU;
  std::vector<Point> coset_of(g.order(), kUnset);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnset) continue;
    const auto c = static_cast<Point>(reps.size());
    reps.push_back(x);
    for (ElementId e : h.elements()) coset_of[g.multiply(e, x)] = c;
  }
  const std::size_t m = reps.size();
  const std::size_t n = a.size();
  std::vector<std::vector<Point>> images;
  for (ElementId s : g.generator_ids()) {
    std::vector<Point> img(n * m);
    for (std::size_t i = 0; i < m; ++i) {
      const ElementId tg = g.multiply(reps[i], s);
      const Point j = coset_of[tg];
      const ElementId hh = g.multiply(tg, g.inverse(reps[j]));  // t_i g = hh t_j
      const std::int64_t local = hg.index_of(g.element(hh));
      if (local < 0) throw ValidationError("induction: set is not over the given subgroup");
      const auto& act = a.action(static_cast<ElementId>(local));
      for (std::size_t x = 0; x < n; ++x) img[x + n * i] = static_cast<Point>(act[x] + n * j);
    }
    images.push_back(std::move(img));
  }
  return GSet(std::move(group), n * m, std::move(images));
}

}  // namespace fc
