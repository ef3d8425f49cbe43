#include "factorcenter/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "factorcenter/error.hpp"

namespace fc {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw ValidationError("permutation images are not a bijection of {0.." +
                            std::to_string(images_.size()) + "-1}");
    seen[y] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
      ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ValidationError("cycle notation: expected '(' in \"" + std::string(text) + "\"");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw ValidationError("cycle notation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ValidationError("cycle notation: unexpected character '" + std::string(1, text[pos]) + "'");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
      if (value >= degree)
        throw ValidationError("cycle notation: point " + std::to_string(value) + " outside degree " +
                              std::to_string(degree));
      if (used[value]) throw ValidationError("cycle notation: point " + std::to_string(value) + " repeated");
      used[value] = true;
      cycle.push_back(static_cast<Point>(value));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw ValidationError("cannot compose permutations of different degree");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = rhs.images_[images_[i]];
  return r;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i) continue;
    out << '(';
    Point x = static_cast<Point>(i);
    bool first = true;
    while (!done[x]) {
      if (!first) out << ' ';
      out << x;
      done[x] = true;
      x = images_[x];
      first = false;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace fc
