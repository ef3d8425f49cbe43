#include "factorcenter/burnside.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <unordered_map>

namespace fc {

Character transitive_character(const Group& g, const Subgroup& h) {
  const auto& cc = g.conjugacy_classes();
  std::vector<std::int64_t> meet(cc.size(), 0);
  for (ElementId e : h.elements()) ++meet[cc.class_of[e]];
  Character chi(cc.size(), 0);
  const auto order = static_cast<std::int64_t>(g.order());
  const auto horder = static_cast<std::int64_t>(h.order());
  for (std::size_t c = 0; c < cc.size(); ++c)
    chi[c] = order * meet[c] / (static_cast<std::int64_t>(cc.classes[c].size()) * horder);
  return chi;
}

std::shared_ptr<const BurnsideRing> BurnsideRing::create(GroupPtr group, const Limits& limits) {
  auto ring = std::make_shared<BurnsideRing>();
  ring->group_ = std::move(group);
  ring->lattice_ = SubgroupLattice::compute(*ring->group_, limits);
  for (const auto& h : ring->lattice_.classes()) ring->characters_.push_back(fc::transitive_character(*ring->group_, h));
  return ring;
}

std::size_t BurnsideRing::type_of_point(const GSet& a, Point x) const {
  return lattice_.class_of(a.stabilizer(x));
}

GSet BurnsideRing::transitive_set(std::size_t i) const {
  return GSet::from_subgroup(group_, lattice_.classes().at(i));
}

BurnsidePtr burnside_ring(const GroupPtr& group) {
  static std::mutex mutex;
  static std::unordered_map<const Group*, BurnsidePtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(group.get());
  if (it != cache.end()) return it->second;
  auto ring = BurnsideRing::create(group);
  cache.emplace(group.get(), ring);
  return ring;
}

BurnsideElement BurnsideElement::of(BurnsidePtr ring, const GSet& a) {
  BurnsideElement e(ring);
  for (const auto& orbit : orbits(a)) e.add(ring->type_of_point(a, orbit.front()), 1);
  return e;
}

BurnsideElement BurnsideElement::of_type(BurnsidePtr ring, std::size_t type, std::int64_t coefficient) {
  BurnsideElement e(std::move(ring));
  e.add(type, coefficient);
  return e;
}

std::int64_t BurnsideElement::coefficient(std::size_t type) const {
  auto it = coeffs_.find(type);
  return it == coeffs_.end() ? 0 : it->second;
}

bool BurnsideElement::is_actual_set() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second > 0; });
}

std::int64_t BurnsideElement::total_degree() const {
  std::int64_t d = 0;
  for (const auto& [t, c] : coeffs_) d += c * static_cast<std::int64_t>(ring_->index_of_type(t));
  return d;
}

std::int64_t BurnsideElement::orbit_count() const {
  std::int64_t n = 0;
  for (const auto& kv : coeffs_) n += kv.second;
  return n;
}

void BurnsideElement::add(std::size_t type, std::int64_t coefficient) {
  if (coefficient == 0) return;
  if (ring_ && type >= ring_->type_count()) throw ValidationError("Burnside type index out of range");
  auto [it, inserted] = coeffs_.emplace(type, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coeffs_.erase(it);
  }
}

namespace {

void require_same_ring(const BurnsideElement& a, const BurnsideElement& b) {
  if (a.ring() && b.ring() && a.ring() != b.ring() && !a.ring()->group()->same_as(*b.ring()->group()))
    throw ValidationError("Burnside elements over different groups");
}

}  // namespace

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& o) {
  require_same_ring(*this, o);
  if (!ring_) ring_ = o.ring_;
  for (const auto& [t, c] : o.coeffs_) add(t, c);
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& o) {
  require_same_ring(*this, o);
  if (!ring_) ring_ = o.ring_;
  for (const auto& [t, c] : o.coeffs_) add(t, -c);
  return *this;
}

BurnsideElement operator*(std::int64_t k, const BurnsideElement& a) {
  BurnsideElement r(a.ring_);
  for (const auto& [t, c] : a.coeffs_) r.add(t, k * c);
  return r;
}

BurnsideElement burnside_canonicalize(BurnsidePtr ring, const std::vector<GSet>& pos, const std::vector<GSet>& neg) {
  BurnsideElement e(ring);
  for (const auto& a : pos) e += BurnsideElement::of(ring, a);
  for (const auto& a : neg) e -= BurnsideElement::of(ring, a);
  return e;
}

Character mu(const BurnsideElement& e) {
  if (!e.ring()) throw ValidationError("Burnside element without a group");
  Character chi(e.ring()->group()->conjugacy_classes().size(), 0);
  for (const auto& [t, c] : e.coefficients()) {
    const auto& x = e.ring()->transitive_character(t);
    for (std::size_t i = 0; i < chi.size(); ++i) chi[i] += c * x[i];
  }
  return chi;
}

namespace {

struct CharacterHash {
  std::size_t operator()(const Character& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : c) {
      h ^= static_cast<std::size_t>(v);
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  // Both sorted.
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return true;
}

GSet build_set(const BurnsideRing& ring, const std::vector<std::size_t>& types) {
  std::vector<GSet> parts;
  for (std::size_t t : types) parts.push_back(ring.transitive_set(t));
  return disjoint_union(ring.group(), parts);
}

}  // namespace

std::vector<GassmannPair> gassmann_search(const BurnsidePtr& ring, int max_degree, bool transitive_only,
                                          const Limits& limits) {
  if (max_degree < 1) throw ValidationError("max_degree must be positive");
  if (max_degree > limits.max_search_degree)
    throw ResourceError("max_degree " + std::to_string(max_degree) + " exceeds the search cap " +
                        std::to_string(limits.max_search_degree));

  std::vector<std::size_t> types;
  for (std::size_t t = 0; t < ring->type_count(); ++t)
    if (ring->index_of_type(t) <= static_cast<std::size_t>(max_degree)) types.push_back(t);

  std::unordered_map<Character, std::vector<std::vector<std::size_t>>, CharacterHash> buckets;
  if (transitive_only) {
    for (std::size_t t : types) buckets[ring->transitive_character(t)].push_back({t});
  } else {
    std::size_t count = 0;
    std::vector<std::size_t> current;
    Character chi(ring->group()->conjugacy_classes().size(), 0);
    // Multisets as nondecreasing sequences of positions in `types`.
    auto recurse = [&](auto&& self, std::size_t start, std::size_t budget) -> void {
      for (std::size_t p = start; p < types.size(); ++p) {
        const std::size_t t = types[p];
        const std::size_t idx = ring->index_of_type(t);
        if (idx > budget) continue;
        const auto& x = ring->transitive_character(t);
        for (std::size_t i = 0; i < chi.size(); ++i) chi[i] += x[i];
        current.push_back(t);
        if (++count > limits.max_search_multisets)
          throw ResourceError("Gassmann search exceeds the multiset cap " + std::to_string(limits.max_search_multisets));
        buckets[chi].push_back(current);
        self(self, p, budget - idx);
        current.pop_back();
        for (std::size_t i = 0; i < chi.size(); ++i) chi[i] -= x[i];
      }
    };
    recurse(recurse, 0, static_cast<std::size_t>(max_degree));
  }

  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> found;
  for (auto& [chi, members] : buckets) {
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (disjoint(members[i], members[j])) found.emplace_back(members[i], members[j]);
  }
  std::sort(found.begin(), found.end());

  std::vector<GassmannPair> pairs;
  for (auto& [ta, tb] : found) {
    GassmannPair p;
    p.a = build_set(*ring, ta);
    p.b = build_set(*ring, tb);
    p.certificate = fixed_point_character(p.a);
    p.isomorphic = is_isomorphic(p.a, p.b);
    p.types_a = ta;
    p.types_b = tb;
    pairs.push_back(std::move(p));
  }
  return pairs;
}

}  // namespace fc
