#include "factorcenter/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "factorcenter/error.hpp"

namespace fc {

PicardLattice PicardLattice::blowup_p2(int r) {
  if (r < 0 || r > 8) throw ValidationError("plane blow-ups need 0 <= r <= 8, got " + std::to_string(r));
  PicardLattice l;
  l.kind_ = LatticeKind::BlowupP2;
  l.r_ = r;
  l.canonical_.assign(static_cast<std::size_t>(r) + 1, -1);
  l.canonical_[0] = -3;
  return l;
}

PicardLattice PicardLattice::quadric(int r) {
  if (r < 0 || r > 7) throw ValidationError("quadric blow-ups need 0 <= r <= 7, got " + std::to_string(r));
  PicardLattice l;
  l.kind_ = LatticeKind::Quadric;
  l.r_ = r;
  l.canonical_.assign(static_cast<std::size_t>(r) + 2, -1);
  l.canonical_[0] = -2;
  l.canonical_[1] = -2;
  return l;
}

std::int64_t PicardLattice::degree() const { return intersection(*this, canonical_, canonical_); }

IntMatrix PicardLattice::form() const {
  const std::size_t n = rank();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  if (kind_ == LatticeKind::BlowupP2) {
    m[0][0] = 1;
  } else {
    m[0][1] = m[1][0] = 1;
  }
  for (std::size_t i = exceptional_offset(); i < n; ++i) m[i][i] = -1;
  return m;
}

PicardLattice PicardLattice::blown_up(int extra) const {
  return kind_ == LatticeKind::BlowupP2 ? blowup_p2(r_ + extra) : quadric(r_ + extra);
}

std::string PicardLattice::name() const {
  if (kind_ == LatticeKind::BlowupP2) return "blowup:" + std::to_string(r_);
  return r_ == 0 ? std::string("quadric") : "quadric:" + std::to_string(r_);
}

PicardLattice PicardLattice::parse(const std::string& text) {
  auto number = [&](const std::string& tail) {
    if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ValidationError("bad lattice kind \"" + text + "\"");
    return std::stoi(tail);
  };
  if (text == "quadric") return quadric(0);
  if (text.rfind("quadric:", 0) == 0) return quadric(number(text.substr(8)));
  if (text.rfind("blowup:", 0) == 0) return blowup_p2(number(text.substr(7)));
  throw ValidationError("bad lattice kind \"" + text + "\" (expected blowup:R, quadric or quadric:R)");
}

std::int64_t intersection(const PicardLattice& l, const DivisorClass& d, const DivisorClass& e) {
  if (d.size() != l.rank() || e.size() != l.rank())
    throw ValidationError("divisor class has rank " + std::to_string(d.size() != l.rank() ? d.size() : e.size()) +
                          ", lattice has rank " + std::to_string(l.rank()));
  std::int64_t v = 0;
  std::size_t off = l.exceptional_offset();
  if (l.kind() == LatticeKind::BlowupP2) {
    v = d[0] * e[0];
  } else {
    v = d[0] * e[1] + d[1] * e[0];
  }
  for (std::size_t i = off; i < d.size(); ++i) v -= d[i] * e[i];
  return v;
}

std::int64_t anticanonical_degree(const PicardLattice& l, const DivisorClass& d) {
  return -intersection(l, l.canonical(), d);
}

namespace {

std::int64_t isqrt(std::int64_t v) {
  if (v <= 0) return 0;
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

// All b in Z^k with sum b = sum and sum b^2 = squares, appended after `prefix`.
void enumerate_tails(std::size_t k, std::int64_t sum, std::int64_t squares, DivisorClass& prefix,
                     std::vector<DivisorClass>& out) {
  if (k == 0) {
    if (sum == 0 && squares == 0) out.push_back(prefix);
    return;
  }
  if (squares < 0) return;
  // Cauchy-Schwarz on the remaining k entries.
  if (sum * sum > static_cast<std::int64_t>(k) * squares) return;
  const std::int64_t bound = isqrt(squares);
  for (std::int64_t b = -bound; b <= bound; ++b) {
    prefix.push_back(b);
    enumerate_tails(k - 1, sum - b, squares - b * b, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<DivisorClass> numerical_classes(const PicardLattice& l, std::int64_t j, std::int64_t self_intersection) {
  std::vector<DivisorClass> out;
  const std::int64_t s = self_intersection;
  if (l.kind() == LatticeKind::BlowupP2) {
    const auto r = static_cast<std::int64_t>(l.blowups());
    // With sum b = 3a - j and sum b^2 = a^2 - s, Cauchy-Schwarz gives
    // (9 - r) a^2 - 6 j a + j^2 + r s <= 0, a bounded range since r <= 8.
    const std::int64_t span = 8 * (std::abs(j) + std::abs(s) + 4);
    for (std::int64_t a = -span; a <= span; ++a) {
      const std::int64_t sum = 3 * a - j;
      const std::int64_t squares = a * a - s;
      if (squares < 0) continue;
      if (r == 0) {
        if (sum == 0 && squares == 0) out.push_back({a});
        continue;
      }
      if (sum * sum > r * squares) continue;
      DivisorClass prefix{a};
      enumerate_tails(static_cast<std::size_t>(r), sum, squares, prefix, out);
    }
  } else {
    const auto r = static_cast<std::int64_t>(l.blowups());
    // sum c = 2(x + y) - j and sum c^2 = 2xy - s; with r <= 7 Cauchy-Schwarz
    // bounds x + y, and then x - y.
    const std::int64_t span = 24 * (std::abs(j) + std::abs(s) + 4);
    for (std::int64_t x = -span; x <= span; ++x)
      for (std::int64_t y = -span; y <= span; ++y) {
        const std::int64_t sum = 2 * (x + y) - j;
        const std::int64_t squares = 2 * x * y - s;
        if (squares < 0) continue;
        if (r == 0) {
          if (sum == 0 && squares == 0) out.push_back({x, y});
          continue;
        }
        if (sum * sum > r * squares) continue;
        DivisorClass prefix{x, y};
        enumerate_tails(static_cast<std::size_t>(r), sum, squares, prefix, out);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassList rational_degree_classes(const PicardLattice& l, int j) {
  const std::int64_t d = l.degree();
  if (l.kind() == LatticeKind::Quadric) {
    if (l.blowups() == 0 && (j < 2 || j > d - 1 || j % 2 != 0))
      throw ValidationError("quadric needs an even degree 2 <= j <= 6, got " + std::to_string(j));
  }
  if (j < 1 || j > d - 1) {
    throw ValidationError("degree j = " + std::to_string(j) + " outside 1 <= j <= " + std::to_string(d - 1));
  }
  return {l.name(), j, numerical_classes(l, j, j - 2)};
}

ClassList neg_one_classes(const PicardLattice& l) {
  return {l.name(), 1, numerical_classes(l, 1, -1)};
}

DivisorClass adjoint_dual(const PicardLattice& l, const DivisorClass& d) {
  if (d.size() != l.rank()) throw ValidationError("divisor class rank does not match the lattice");
  DivisorClass out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = -l.canonical()[i] - d[i];
  return out;
}

ClassList classes_through(const PicardLattice& l, const ClassList& c, const std::vector<int>& points,
                          bool multiplicity_exact) {
  for (int p : points)
    if (p < 1 || p > l.blowups()) throw ValidationError("point index " + std::to_string(p) + " out of range");
  ClassList out{c.lattice, c.j, {}};
  const std::size_t off = l.exceptional_offset();
  for (const auto& d : c.classes) {
    bool keep = true;
    for (int p : points) {
      const std::int64_t b = d.at(off + static_cast<std::size_t>(p) - 1);
      if (multiplicity_exact ? b != 1 : b < 1) keep = false;
    }
    if (keep) out.classes.push_back(d);
  }
  return out;
}

DivisorClass pull_back(const PicardLattice& target, const DivisorClass& d) {
  if (d.size() > target.rank()) throw ValidationError("cannot pull back to a lattice of smaller rank");
  DivisorClass out = d;
  out.resize(target.rank(), 0);
  return out;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

DivisorClass transform_class(const IntMatrix& m, const DivisorClass& d) {
  if (m.size() != d.size()) throw ValidationError("matrix size does not match the divisor class");
  DivisorClass out(d.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) out[i] += m[i][j] * d[j];
  return out;
}

std::int64_t trace(const IntMatrix& m) {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

bool is_isometry_fixing_canonical(const PicardLattice& l, const IntMatrix& m) {
  const std::size_t n = l.rank();
  if (m.size() != n) return false;
  for (const auto& row : m)
    if (row.size() != n) return false;
  if (transform_class(m, l.canonical()) != l.canonical()) return false;
  std::vector<DivisorClass> cols(n, DivisorClass(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) cols[k][i] = m[i][k];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      DivisorClass ea(n, 0), eb(n, 0);
      ea[a] = 1;
      eb[b] = 1;
      if (intersection(l, cols[a], cols[b]) != intersection(l, ea, eb)) return false;
    }
  return true;
}

IntMatrix reflection(const PicardLattice& l, const DivisorClass& alpha) {
  if (intersection(l, alpha, alpha) != -2 || intersection(l, alpha, l.canonical()) != 0)
    throw ValidationError("reflection needs a root with alpha^2 = -2 and alpha.K = 0");
  const std::size_t n = l.rank();
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    DivisorClass e(n, 0);
    e[k] = 1;
    const std::int64_t t = intersection(l, e, alpha);
    for (std::size_t i = 0; i < n; ++i) m[i][k] = e[i] + t * alpha[i];
  }
  return m;
}

std::vector<DivisorClass> simple_roots(const PicardLattice& l) {
  std::vector<DivisorClass> roots;
  const std::size_t n = l.rank();
  const std::size_t off = l.exceptional_offset();
  for (std::size_t i = off; i + 1 < n; ++i) {
    DivisorClass a(n, 0);
    a[i] = -1;  // E_i
    a[i + 1] = 1;  // - E_{i+1}
    roots.push_back(a);
  }
  if (l.kind() == LatticeKind::BlowupP2 && l.blowups() >= 3) {
    DivisorClass a(n, 0);
    a[0] = 1;
    a[1] = a[2] = a[3] = 1;
    roots.push_back(a);
  } else if (l.kind() == LatticeKind::Quadric) {
    DivisorClass a(n, 0);  // F_1 - F_2
    a[0] = 1;
    a[1] = -1;
    roots.push_back(a);
    if (l.blowups() >= 2) {
      DivisorClass b(n, 0);  // F_1 - E_1 - E_2
      b[0] = 1;
      b[2] = b[3] = 1;
      roots.push_back(b);
    }
  }
  return roots;
}

}  // namespace fc
