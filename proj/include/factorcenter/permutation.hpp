#ifndef FACTORCENTER_PERMUTATION_HPP
#define FACTORCENTER_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fc {

using Point = std::uint32_t;

// Permutations act on the right on 0-based points: x^p = images[x].
//
// Composition convention, used everywhere in this library:
//   (p * q)(x) = q(p(x))      "apply left, then right"
// so a G-set is a right action, x.(pq) = (x.p).q, and matrices acting on
// coordinate columns compose as M_{pq} = M_q * M_p.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  static Permutation identity(std::size_t degree);

  /// Throws ValidationError unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  /// Parse cycle notation such as "(0 1)(2 3)" or "(0,1,2)". "()" is the identity.
  static Permutation from_cycles(std::size_t degree, std::string_view cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// this, then rhs.
  Permutation operator*(const Permutation& rhs) const;

  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace fc

#endif  // FACTORCENTER_PERMUTATION_HPP
