#ifndef FACTORCENTER_BURNSIDE_HPP
#define FACTORCENTER_BURNSIDE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "factorcenter/gset.hpp"

namespace fc {

/// Subgroup lattice of a group together with the fixed-point characters of
/// all transitive G-sets G/H.
class BurnsideRing {
 public:
  static std::shared_ptr<const BurnsideRing> create(GroupPtr group, const Limits& limits = default_limits());

  const GroupPtr& group() const { return group_; }
  const SubgroupLattice& lattice() const { return lattice_; }
  std::size_t type_count() const { return lattice_.size(); }
  /// [G:H] for the i-th subgroup class.
  std::size_t index_of_type(std::size_t i) const { return group_->order() / lattice_.classes()[i].order(); }
  const Character& transitive_character(std::size_t i) const { return characters_[i]; }
  std::size_t trivial_type() const { return lattice_.size() - 1; }
  std::size_t regular_type() const { return 0; }
  /// Subgroup class of the stabilizer of `x`.
  std::size_t type_of_point(const GSet& a, Point x) const;
  GSet transitive_set(std::size_t i) const;

 private:
  GroupPtr group_;
  SubgroupLattice lattice_;
  std::vector<Character> characters_;
};

using BurnsidePtr = std::shared_ptr<const BurnsideRing>;

/// Process-wide cache keyed by group identity.
BurnsidePtr burnside_ring(const GroupPtr& group);

/// Virtual G-set: integer combination of transitive types, zero
/// coefficients never stored.
class BurnsideElement {
 public:
  BurnsideElement() = default;
  explicit BurnsideElement(BurnsidePtr ring) : ring_(std::move(ring)) {}
  static BurnsideElement of(BurnsidePtr ring, const GSet& a);
  static BurnsideElement of_type(BurnsidePtr ring, std::size_t type, std::int64_t coefficient = 1);

  const BurnsidePtr& ring() const { return ring_; }
  const std::map<std::size_t, std::int64_t>& coefficients() const { return coeffs_; }
  std::int64_t coefficient(std::size_t type) const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_actual_set() const;
  /// Signed number of points.
  std::int64_t total_degree() const;
  /// Signed number of orbits.
  std::int64_t orbit_count() const;

  void add(std::size_t type, std::int64_t coefficient);
  BurnsideElement& operator+=(const BurnsideElement& o);
  BurnsideElement& operator-=(const BurnsideElement& o);
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend BurnsideElement operator*(std::int64_t k, const BurnsideElement& a);
  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) { return a.coeffs_ == b.coeffs_; }

 private:
  BurnsidePtr ring_;
  std::map<std::size_t, std::int64_t> coeffs_;
};

/// Sum of the orbit types of `pos` minus those of `neg`.
BurnsideElement burnside_canonicalize(BurnsidePtr ring, const std::vector<GSet>& pos, const std::vector<GSet>& neg);

/// Virtual permutation character, linear in e.
Character mu(const BurnsideElement& e);

/// Character of a transitive type evaluated on every conjugacy class.
Character transitive_character(const Group& g, const Subgroup& h);

struct GassmannPair {
  GSet a;
  GSet b;
  Character certificate;
  bool isomorphic = false;
  /// Orbit stabilizer classes (indices into the lattice) of each side.
  std::vector<std::size_t> types_a;
  std::vector<std::size_t> types_b;
};

/// Non-isomorphic G-sets of size <= max_degree with equal characters, up to
/// swapping and up to adding common orbits. With `transitive_only` only
/// coset sets G/H are compared.
std::vector<GassmannPair> gassmann_search(const BurnsidePtr& ring, int max_degree, bool transitive_only,
                                          const Limits& limits = default_limits());

}  // namespace fc

#endif  // FACTORCENTER_BURNSIDE_HPP
