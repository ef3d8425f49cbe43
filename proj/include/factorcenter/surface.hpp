#ifndef FACTORCENTER_SURFACE_HPP
#define FACTORCENTER_SURFACE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "factorcenter/burnside.hpp"
#include "factorcenter/gset.hpp"
#include "factorcenter/lattice.hpp"

namespace fc {

/// Galois action on a Picard lattice: one matrix per group generator,
/// extended to every element. Matrices act on coordinate columns and,
/// because G-sets are right actions, M(gh) = M(h) M(g).
class LatticeAction {
 public:
  LatticeAction() = default;
  /// Throws ValidationError unless every matrix is an isometry fixing K and
  /// the matrices satisfy the group relations.
  LatticeAction(GroupPtr group, PicardLattice lattice, std::vector<IntMatrix> generator_matrices);
  static LatticeAction trivial(GroupPtr group, PicardLattice lattice);

  const GroupPtr& group() const { return group_; }
  const PicardLattice& lattice() const { return lattice_; }
  const std::vector<IntMatrix>& generator_matrices() const { return generator_matrices_; }
  const IntMatrix& matrix(ElementId g) const { return matrices_[g]; }
  /// Trace on each conjugacy class.
  Character trace_character() const;

 private:
  GroupPtr group_;
  PicardLattice lattice_;
  std::vector<IntMatrix> generator_matrices_;
  std::vector<IntMatrix> matrices_;
};

/// Induced action on a list of classes; ValidationError if the list is not permuted.
GSet action_on_classes(const LatticeAction& action, const std::vector<DivisorClass>& classes);

enum class SurfaceTag { dP9, dP8, C8, dP6, dP5, P2Blowup };

std::string to_string(SurfaceTag tag);
SurfaceTag parse_surface_tag(const std::string& s);
/// K^2 of the minimal model with this tag (P2Blowup: 9 - r).
int surface_degree(SurfaceTag tag);

/// A model of large degree (or a plane blow-up with an explicit lattice
/// action) together with a stack of blown-up centers, outermost last.
struct SurfaceModel {
  SurfaceTag tag = SurfaceTag::dP9;
  GroupPtr galois;
  /// dP9 only: false for a nontrivial Severi-Brauer surface.
  bool brauer_trivial = true;
  std::optional<GSet> z2;  // dP8 rulings, dP6 cubic families
  std::optional<GSet> z3;  // dP6 conic pencils
  std::optional<GSet> z5;  // dP5 conic pencils
  std::optional<LatticeAction> action;  // P2Blowup
  std::vector<GSet> stack;

  static SurfaceModel dp9(GroupPtr g, bool brauer_trivial = true);
  static SurfaceModel dp8(GSet z2);
  static SurfaceModel c8(GroupPtr g);
  static SurfaceModel dp6(GSet z2, GSet z3);
  static SurfaceModel dp5(GSet z5);
  static SurfaceModel p2_blowup(LatticeAction action);

  /// Set sizes match the tag and every set lives over `galois`.
  void validate() const;
  int degree() const;
  bool is_large_degree() const { return tag != SurfaceTag::P2Blowup; }
};

/// Equal tag, isomorphic attached sets, same Brauer flag and isomorphic stacks (as multisets).
bool models_isomorphic(const SurfaceModel& a, const SurfaceModel& b);

/// A_X. ValidationError for P2Blowup.
BurnsideElement virtual_ns_set(const SurfaceModel& s);

/// mu(A_X) (or the lattice trace for P2Blowup) plus the characters of the stacked centers.
Character ns_character(const SurfaceModel& s);

/// Galois action on NS(X) reconstructed from the attached sets: trivial on
/// the plane and on F_1, the ruling swap on the quadric, the S3 x Z/2 action
/// on the blow-up of three points, and the S5 action on the blow-up of four
/// points through the five conic classes.
LatticeAction lattice_action_of(const SurfaceModel& s);

/// Degree-j rational classes as a G-set.
GSet mj_set(const SurfaceModel& s, int j);

/// Whether D -> -K - D is an isomorphism of G-sets M^j -> M^(d-j).
bool mj_duality_check(const SurfaceModel& s, int j);

/// 8 - K^2; ValidationError when K^2 > 8.
int singular_fiber_count(int k2);

std::int64_t picard_rank(const SurfaceModel& s);

/// A group generated by `generators` random Weyl elements (products of up
/// to `word_length` simple reflections) on the plane blown up in r points,
/// realized as a permutation group on the (-1)-classes. Samples whose group
/// exceeds the order bound are redrawn.
LatticeAction random_weyl_action(int r, int generators, int word_length, std::mt19937_64& rng);

/// Permutation matrices on the exceptional classes induced by a G-set of size r.
LatticeAction permutation_action(const GSet& points);

}  // namespace fc

#endif  // FACTORCENTER_SURFACE_HPP
