#ifndef FACTORCENTER_GSET_HPP
#define FACTORCENTER_GSET_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "factorcenter/group.hpp"

namespace fc {

/// Integer vector indexed by the conjugacy classes of a group. Used both for
/// fixed-point characters of G-sets and for virtual (signed) characters.
using Character = std::vector<std::int64_t>;

/// A finite right G-set on points {0..size-1}.
///
/// The action of every group element is computed eagerly by walking the
/// Cayley graph of the generators; an inconsistency on any edge means the
/// generator images do not satisfy the group's relations and is rejected.
class GSet {
 public:
  GSet() = default;
  /// `generator_images[i]` is the action of `group->generators()[i]`.
  GSet(GroupPtr group, std::size_t size, std::vector<std::vector<Point>> generator_images);

  /// Right cosets Hg with point 0 = H.
  static GSet from_subgroup(GroupPtr group, const Subgroup& h);
  static GSet trivial(GroupPtr group, std::size_t size);
  /// Action given by an element-to-permutation map (one entry per group element).
  static GSet from_element_actions(GroupPtr group, std::size_t size, std::vector<std::vector<Point>> actions);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return size_; }
  const std::vector<std::vector<Point>>& generator_images() const { return generator_images_; }
  const std::vector<Point>& action(ElementId g) const { return actions_[g]; }
  Point image(Point x, ElementId g) const { return actions_[g][x]; }

  Subgroup stabilizer(Point x) const;

 private:
  void build_actions();

  GroupPtr group_;
  std::size_t size_ = 0;
  std::vector<std::vector<Point>> generator_images_;
  std::vector<std::vector<Point>> actions_;  // indexed by ElementId
};

/// Orbit partition; each orbit sorted, orbits ordered by smallest point.
std::vector<std::vector<Point>> orbits(const GSet& a);

/// Number of orbits recovered from the character by the orbit-counting formula.
std::int64_t orbit_count_from_character(const Group& g, const Character& chi);

Character fixed_point_character(const GSet& a);

/// {g : g fixes every point}.
Subgroup kernel(const GSet& a);

/// The group generated by the generator images acting on the same points.
std::pair<GroupPtr, GSet> faithful_quotient(const GSet& a);

/// Throws ValidationError if the two sets are attached to different groups.
bool is_gassmann(const GSet& a, const GSet& b);
bool is_isomorphic(const GSet& a, const GSet& b);

GSet disjoint_union(const GSet& a, const GSet& b);
GSet disjoint_union(GroupPtr group, const std::vector<GSet>& parts);

/// Restriction to a union of orbits; the points are renumbered in increasing order.
GSet restrict_to(const GSet& a, const std::vector<Point>& points);

/// The same set with g acting as `element_map[g]` did before. `element_map`
/// must be an automorphism of the group.
GSet twist(const GSet& a, const std::vector<ElementId>& element_map);

/// Automorphism g -> x^-1 g x for a permutation x normalizing the group.
/// Throws ValidationError if x does not normalize it.
std::vector<ElementId> automorphism_from_normalizer(const Group& g, const Permutation& x);

/// The subgroup `h` of `g` as a group in its own right, with the same degree.
GroupPtr subgroup_as_group(const Group& g, const Subgroup& h);

/// Induction from a subgroup: `a` is a set over `subgroup_as_group(*g, h)`
/// (or any group with the same elements). Points are pairs (x, coset i)
/// numbered x + |a|*i.
GSet induce(GroupPtr g, const Subgroup& h, const GSet& a);

}  // namespace fc

#endif  // FACTORCENTER_GSET_HPP
