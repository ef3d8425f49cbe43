#ifndef FACTORCENTER_GROUP_HPP
#define FACTORCENTER_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "factorcenter/error.hpp"
#include "factorcenter/permutation.hpp"

namespace fc {

using ElementId = std::uint32_t;

/// Bitset over the element indices of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  void insert(ElementId i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool contains(ElementId i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  std::size_t universe() const { return universe_; }
  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

struct ConjugacyClassTable {
  /// Classes ordered by their smallest element index, so class 0 is {identity}.
  std::vector<std::vector<ElementId>> classes;
  std::vector<ElementId> representatives;
  std::vector<std::uint32_t> class_of;

  std::size_t size() const { return classes.size(); }
};

/// A finite permutation group with its full element list.
///
/// Elements are stored in lexicographic order of their image arrays, which
/// makes every index (and everything derived from indices) independent of the
/// generating set that was supplied. The identity is always element 0.
class Group {
 public:
  /// Closure of `gens`. Throws ValidationError on degree mismatch and
  /// ResourceError when the order exceeds `limits.max_group_order`.
  static Group from_generators(std::size_t degree, std::vector<Permutation> gens,
                               const Limits& limits = default_limits());

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(ElementId i) const { return elements_[i]; }
  static constexpr ElementId identity() { return 0; }

  /// a then b.
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverses_[a]; }
  /// x^-1 * a * x.
  ElementId conjugate(ElementId a, ElementId x) const { return multiply(multiply(inverses_[x], a), x); }
  /// Index of `p`, or -1 when p is not in the group.
  std::int64_t index_of(const Permutation& p) const;
  ElementId require_index(const Permutation& p) const;

  const ConjugacyClassTable& conjugacy_classes() const { return classes_; }

  /// Same degree and same element set.
  bool same_as(const Group& other) const;

 private:
  Group() = default;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> inverses_;
  std::vector<std::uint16_t> table_;  // full Cayley table for small groups
  ConjugacyClassTable classes_;
};

using GroupPtr = std::shared_ptr<const Group>;

GroupPtr make_group(std::size_t degree, std::vector<Permutation> gens, const Limits& limits = default_limits());

/// Partition of the elements by conjugation.
const ConjugacyClassTable& conjugacy_classes(const Group& g);

class Subgroup {
 public:
  Subgroup() = default;

  /// Closure of the given elements inside `g`.
  static Subgroup generated_by(const Group& g, std::span<const ElementId> gens);
  /// Checks closure, identity and the Lagrange condition; throws ValidationError otherwise.
  static Subgroup from_elements(const Group& g, std::vector<ElementId> elements);
  static Subgroup whole(const Group& g);
  static Subgroup trivial(const Group& g);

  std::size_t order() const { return elements_.size(); }
  const std::vector<ElementId>& elements() const { return elements_; }
  const std::vector<ElementId>& generators() const { return generators_; }
  const ElementSet& members() const { return members_; }
  bool contains(ElementId i) const { return members_.contains(i); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  std::vector<ElementId> elements_;  // sorted
  std::vector<ElementId> generators_;
  ElementSet members_;

  friend class SubgroupLattice;
};

/// x^-1 H x.
Subgroup conjugate(const Group& g, const Subgroup& h, ElementId x);

/// True iff some g has g^-1 H g = K.
bool are_conjugate(const Group& g, const Subgroup& h, const Subgroup& k);

/// Number of elements of `h` in each conjugacy class of `g`.
std::vector<std::size_t> class_distribution(const Group& g, const Subgroup& h);

/// Conjugacy classes of subgroups, found by layered closure: starting from the
/// trivial subgroup, every class representative H is extended to <H, g> for one
/// g per (H,H)-double coset, and new subgroups are recorded together with all of
/// their conjugates. Each class is represented by the conjugate with the
/// lexicographically smallest sorted element list; classes are sorted by
/// (order, element list).
class SubgroupLattice {
 public:
  static SubgroupLattice compute(const Group& g, const Limits& limits = default_limits());

  const std::vector<Subgroup>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  /// Index of the conjugacy class containing `h`. Throws ValidationError if `h`
  /// is not a subgroup of the group the lattice was computed for.
  std::size_t class_of(const Subgroup& h) const;
  std::size_t total_subgroups() const { return lookup_.size(); }
  /// Number of conjugates of class i.
  std::size_t class_size(std::size_t i) const { return class_sizes_[i]; }

 private:
  std::vector<Subgroup> classes_;
  std::vector<std::size_t> class_sizes_;
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> lookup_;
};

std::vector<Subgroup> subgroups_up_to_conjugacy(const Group& g, const Limits& limits = default_limits());

/// Orbit of point 0 under the natural action covers every point.
bool is_transitive(const Group& g);

}  // namespace fc

#endif  // FACTORCENTER_GROUP_HPP
