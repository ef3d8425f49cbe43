#ifndef FACTORCENTER_LATTICE_HPP
#define FACTORCENTER_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fc {

/// Coordinates (a; b_1..b_r) for D = aH - sum b_i E_i on a blow-up of the
/// plane, or (x, y; c_1..c_r) for D = xF_1 + yF_2 - sum c_i E_i on a blow-up
/// of the quadric (F_1, F_2 the two rulings).
using DivisorClass = std::vector<std::int64_t>;

/// Square matrix acting on coordinate columns.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

enum class LatticeKind { BlowupP2, Quadric };

class PicardLattice {
 public:
  /// Plane blown up in r points, 0 <= r <= 8.
  static PicardLattice blowup_p2(int r);
  /// Quadric blown up in r points, 0 <= r <= 7.
  static PicardLattice quadric(int r = 0);

  LatticeKind kind() const { return kind_; }
  /// Number of exceptional classes E_i.
  int blowups() const { return r_; }
  std::size_t rank() const { return canonical_.size(); }
  /// Index of the first exceptional coordinate.
  std::size_t exceptional_offset() const { return kind_ == LatticeKind::BlowupP2 ? 1 : 2; }
  const DivisorClass& canonical() const { return canonical_; }
  /// K.K
  std::int64_t degree() const;
  IntMatrix form() const;
  PicardLattice blown_up(int extra) const;
  /// "blowup:r", "quadric" or "quadric:r".
  std::string name() const;
  /// Inverse of name(); throws ValidationError.
  static PicardLattice parse(const std::string& text);

  friend bool operator==(const PicardLattice&, const PicardLattice&) = default;

 private:
  LatticeKind kind_ = LatticeKind::BlowupP2;
  int r_ = 0;
  DivisorClass canonical_;
};

struct ClassList {
  std::string lattice;
  int j = 0;
  std::vector<DivisorClass> classes;
};

/// D^T M D' for the intersection form M. Throws ValidationError on rank mismatch.
std::int64_t intersection(const PicardLattice& l, const DivisorClass& d, const DivisorClass& e);
/// -K.D
std::int64_t anticanonical_degree(const PicardLattice& l, const DivisorClass& d);

/// All integer D with D.D = self_intersection and -K.D = j, sorted
/// lexicographically.
std::vector<DivisorClass> numerical_classes(const PicardLattice& l, std::int64_t j, std::int64_t self_intersection);

/// Solutions of D^2 = j-2, -K.D = j within 1 <= j <= d-1 (j even on the
/// unblown quadric). Throws ValidationError outside that range.
ClassList rational_degree_classes(const PicardLattice& l, int j);

/// D^2 = -1, K.D = -1.
ClassList neg_one_classes(const PicardLattice& l);

/// -K - D.
DivisorClass adjoint_dual(const PicardLattice& l, const DivisorClass& d);

/// Classes with b_i >= 1 (or b_i = 1 when `exact`) for every 1-based i in `points`.
ClassList classes_through(const PicardLattice& l, const ClassList& c, const std::vector<int>& points,
                          bool multiplicity_exact);

/// The class of X viewed on a blow-up of X (zero multiplicity at the new points).
DivisorClass pull_back(const PicardLattice& target, const DivisorClass& d);

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
DivisorClass transform_class(const IntMatrix& m, const DivisorClass& d);
std::int64_t trace(const IntMatrix& m);
/// M^T Q M = Q and M K = K.
bool is_isometry_fixing_canonical(const PicardLattice& l, const IntMatrix& m);
/// Reflection D -> D + (D.alpha) alpha in a root alpha with alpha^2 = -2, alpha.K = 0.
IntMatrix reflection(const PicardLattice& l, const DivisorClass& alpha);
/// Simple roots E_i - E_{i+1} and H - E_1 - E_2 - E_3 (the latter for r >= 3).
std::vector<DivisorClass> simple_roots(const PicardLattice& l);

}  // namespace fc

#endif  // FACTORCENTER_LATTICE_HPP
