#include "factorcenter/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>
#include <unordered_set>

namespace fc {

namespace {

constexpr std::size_t kCayleyTableMaxOrder = 5040;

}  // namespace

const Limits& default_limits() {
  static const Limits limits = [] {
    Limits l;
    if (const char* env = std::getenv("FACTORCENTER_MAX_GROUP_ORDER")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) l.max_group_order = static_cast<std::size_t>(v);
    }
    return l;
  }();
  return limits;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Group

Group Group::from_generators(std::size_t degree, std::vector<Permutation> gens, const Limits& limits) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw ValidationError("generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                            std::to_string(degree));

  Group grp;
  grp.degree_ = degree;
  grp.generators_ = gens;

  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    Permutation x = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& s : gens) {
      Permutation y = x * s;
      if (seen.insert(y).second) {
        if (seen.size() > limits.max_group_order)
          throw ResourceError("group order exceeds the configured bound " + std::to_string(limits.max_group_order));
        frontier.push_back(std::move(y));
      }
    }
  }

  grp.elements_.assign(seen.begin(), seen.end());
  std::sort(grp.elements_.begin(), grp.elements_.end());
  grp.index_.reserve(grp.elements_.size());
  for (std::size_t i = 0; i < grp.elements_.size(); ++i) grp.index_.emplace(grp.elements_[i], static_cast<ElementId>(i));

  const std::size_t n = grp.elements_.size();
  grp.inverses_.resize(n);
  for (std::size_t i = 0; i < n; ++i) grp.inverses_[i] = grp.require_index(grp.elements_[i].inverse());
  for (const auto& s : gens) grp.generator_ids_.push_back(grp.require_index(s));

  if (n <= kCayleyTableMaxOrder) {
    grp.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        grp.table_[a * n + b] = static_cast<std::uint16_t>(grp.require_index(grp.elements_[a] * grp.elements_[b]));
  }

  // Conjugacy classes by orbit search under conjugation by the generators.
  auto& cc = grp.classes_;
  constexpr std::uint32_t kUnset = 0xffffffffU;
  cc.class_of.assign(n, kUnset);
  for (ElementId x = 0; x < n; ++x) {
    if (cc.class_of[x] != kUnset) continue;
    const auto cls = static_cast<std::uint32_t>(cc.classes.size());
    std::vector<ElementId> members{x};
    cc.class_of[x] = cls;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (ElementId s : grp.generator_ids_) {
        ElementId y = grp.conjugate(members[k], s);
        if (cc.class_of[y] == kUnset) {
          cc.class_of[y] = cls;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    cc.representatives.push_back(members.front());
    cc.classes.push_back(std::move(members));
  }
  return grp;
}

ElementId Group::multiply(ElementId a, ElementId b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return require_index(elements_[a] * elements_[b]);
}

std::int64_t Group::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

ElementId Group::require_index(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw ValidationError("permutation " + p.to_cycles() + " is not a group element");
  return it->second;
}

bool Group::same_as(const Group& other) const {
  return this == &other || (degree_ == other.degree_ && elements_ == other.elements_);
}

GroupPtr make_group(std::size_t degree, std::vector<Permutation> gens, const Limits& limits) {
  return std::make_shared<const Group>(Group::from_generators(degree, std::move(gens), limits));
}

const ConjugacyClassTable& conjugacy_classes(const Group& g) { return g.conjugacy_classes(); }

// ---------------------------------------------------------------------------
// Subgroup

namespace {

// Extends `elements`/`members` (already a subgroup, or just {id}) to the
// subgroup generated by it and `gens`.
void close_under(const Group& g, std::span<const ElementId> gens, std::vector<ElementId>& elements,
                 ElementSet& members) {
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (ElementId s : gens) {
      ElementId y = g.multiply(elements[k], s);
      if (!members.contains(y)) {
        members.insert(y);
        elements.push_back(y);
      }
    }
  }
}

}  // namespace

Subgroup Subgroup::generated_by(const Group& g, std::span<const ElementId> gens) {
  Subgroup h;
  h.members_ = ElementSet(g.order());
  h.members_.insert(Group::identity());
  h.elements_.push_back(Group::identity());
  for (ElementId s : gens)
    if (s != Group::identity()) h.generators_.push_back(s);
  close_under(g, h.generators_, h.elements_, h.members_);
  std::sort(h.elements_.begin(), h.elements_.end());
  return h;
}

Subgroup Subgroup::from_elements(const Group& g, std::vector<ElementId> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup h;
  h.members_ = ElementSet(g.order());
  for (ElementId e : elements) {
    if (e >= g.order()) throw ValidationError("subgroup element index out of range");
    h.members_.insert(e);
  }
  if (elements.empty() || !h.members_.contains(Group::identity()))
    throw ValidationError("subgroup does not contain the identity");
  for (ElementId a : elements) {
    if (!h.members_.contains(g.inverse(a))) throw ValidationError("subgroup is not closed under inverses");
    for (ElementId b : elements)
      if (!h.members_.contains(g.multiply(a, b))) throw ValidationError("subgroup is not closed under composition");
  }
  if (g.order() % elements.size() != 0) throw ValidationError("subgroup order does not divide the group order");
  h.elements_ = std::move(elements);
  // Greedy generating set in index order.
  std::vector<ElementId> span_elems{Group::identity()};
  ElementSet span(g.order());
  span.insert(Group::identity());
  for (ElementId e : h.elements_) {
    if (span.contains(e)) continue;
    h.generators_.push_back(e);
    close_under(g, h.generators_, span_elems, span);
  }
  return h;
}

Subgroup Subgroup::whole(const Group& g) {
  return generated_by(g, g.generator_ids());
}

Subgroup Subgroup::trivial(const Group& g) { return generated_by(g, {}); }

Subgroup conjugate(const Group& g, const Subgroup& h, ElementId x) {
  std::vector<ElementId> gens;
  for (ElementId s : h.generators()) gens.push_back(g.conjugate(s, x));
  return Subgroup::generated_by(g, gens);
}

std::vector<std::size_t> class_distribution(const Group& g, const Subgroup& h) {
  const auto& cc = g.conjugacy_classes();
  std::vector<std::size_t> dist(cc.size(), 0);
  for (ElementId e : h.elements()) ++dist[cc.class_of[e]];
  return dist;
}

bool are_conjugate(const Group& g, const Subgroup& h, const Subgroup& k) {
  if (h.order() != k.order()) return false;
  if (h == k) return true;
  if (class_distribution(g, h) != class_distribution(g, k)) return false;
  for (ElementId x = 0; x < g.order(); ++x) {
    bool inside = true;
    for (ElementId s : h.generators()) {
      if (!k.contains(g.conjugate(s, x))) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// SubgroupLattice

SubgroupLattice SubgroupLattice::compute(const Group& g, const Limits& limits) {
  struct Found {
    Subgroup rep;                   // first member discovered, used for extension
    std::vector<ElementId> best;    // lexicographically smallest conjugate
    ElementId best_conjugator = 0;  // best = x^-1 rep x
    std::size_t conjugates = 0;
  };
  std::vector<Found> found;
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> lookup;

  auto add_class = [&](Subgroup h) {
    const auto cls = static_cast<std::uint32_t>(found.size());
    Found f;
    f.best = h.elements();
    // Conjugation orbit of h, tracking the conjugating element.
    std::vector<std::pair<ElementSet, ElementId>> orbit;
    lookup.emplace(h.members(), cls);
    orbit.emplace_back(h.members(), Group::identity());
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const ElementId x = orbit[k].second;
      for (ElementId s : g.generator_ids()) {
        const ElementId y = g.multiply(x, s);
        ElementSet conj(g.order());
        std::vector<ElementId> elems;
        elems.reserve(h.order());
        for (ElementId e : h.elements()) {
          ElementId c = g.conjugate(e, y);
          conj.insert(c);
          elems.push_back(c);
        }
        if (lookup.contains(conj)) continue;
        lookup.emplace(conj, cls);
        if (lookup.size() > limits.max_subgroups)
          throw ResourceError("subgroup count exceeds the configured cap " + std::to_string(limits.max_subgroups));
        std::sort(elems.begin(), elems.end());
        if (elems < f.best) {
          f.best = std::move(elems);
          f.best_conjugator = y;
        }
        orbit.emplace_back(std::move(conj), y);
      }
    }
    f.conjugates = orbit.size();
    f.rep = std::move(h);
    found.push_back(std::move(f));
  };

  add_class(Subgroup::trivial(g));

  std::vector<ElementId> gens;
  for (std::size_t next = 0; next < found.size(); ++next) {
    const Subgroup h = found[next].rep;
    ElementSet seen = h.members();
    for (ElementId x = 0; x < g.order(); ++x) {
      if (seen.contains(x)) continue;
      // <H, x> only depends on the double coset HxH.
      std::vector<ElementId> dc{x};
      seen.insert(x);
      for (std::size_t k = 0; k < dc.size(); ++k) {
        for (ElementId s : h.generators()) {
          for (ElementId y : {g.multiply(s, dc[k]), g.multiply(dc[k], s)}) {
            if (!seen.contains(y)) {
              seen.insert(y);
              dc.push_back(y);
            }
          }
        }
      }
      gens = h.generators();
      gens.push_back(x);
      Subgroup k;
      k.members_ = h.members();
      k.elements_ = h.elements();
      k.generators_ = gens;
      close_under(g, k.generators_, k.elements_, k.members_);
      if (lookup.contains(k.members_)) continue;
      std::sort(k.elements_.begin(), k.elements_.end());
      add_class(std::move(k));
    }
  }

  // Canonical representatives, sorted by (order, element list).
  std::vector<std::uint32_t> perm(found.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (found[a].best.size() != found[b].best.size()) return found[a].best.size() < found[b].best.size();
    return found[a].best < found[b].best;
  });
  std::vector<std::uint32_t> new_index(found.size());
  SubgroupLattice lattice;
  for (std::uint32_t i = 0; i < perm.size(); ++i) {
    new_index[perm[i]] = i;
    lattice.classes_.push_back(Subgroup::from_elements(g, found[perm[i]].best));
    lattice.class_sizes_.push_back(found[perm[i]].conjugates);
  }
  for (auto& [key, cls] : lookup) cls = new_index[cls];
  lattice.lookup_ = std::move(lookup);
  return lattice;
}

std::size_t SubgroupLattice::class_of(const Subgroup& h) const {
  auto it = lookup_.find(h.members());
  if (it == lookup_.end()) throw ValidationError("not a subgroup of the lattice's group");
  return it->second;
}

std::vector<Subgroup> subgroups_up_to_conjugacy(const Group& g, const Limits& limits) {
  return SubgroupLattice::compute(g, limits).classes();
}

bool is_transitive(const Group& g) {
  if (g.degree() == 0) return true;
  std::vector<bool> hit(g.degree(), false);
  std::vector<Point> orbit{0};
  hit[0] = true;
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& s : g.generators()) {
      Point y = s[orbit[k]];
      if (!hit[y]) {
        hit[y] = true;
        orbit.push_back(y);
      }
    }
  return orbit.size() == g.degree();
}

}  // namespace fc
