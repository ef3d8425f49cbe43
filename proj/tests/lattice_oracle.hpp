#ifndef FACTORCENTER_LATTICE_ORACLE_HPP
#define FACTORCENTER_LATTICE_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "factorcenter/lattice.hpp"

namespace fctest {

// Independent box scan: every vector with entries in [-bound, bound].
inline std::vector<fc::DivisorClass> box_scan(const fc::PicardLattice& l, std::int64_t j, std::int64_t self, std::int64_t bound) {
  std::vector<fc::DivisorClass> out;
  fc::DivisorClass d(l.rank(), -bound);
  for (;;) {
    if (fc::anticanonical_degree(l, d) == j && fc::intersection(l, d, d) == self) out.push_back(d);
    std::size_t i = 0;
    while (i < d.size() && d[i] == bound) d[i++] = -bound;
    if (i == d.size()) break;
    ++d[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The closed-form solution list for plane blow-ups: E_i; H minus t points;
// 2H minus r-t points; 3H - 2E_i minus the other points.
inline std::set<fc::DivisorClass> family_oracle(int r, int j) {
  std::set<fc::DivisorClass> out;
  const int n = r + 1;
  auto subsets = [&](int size, auto&& emit) {
    for (int mask = 0; mask < (1 << r); ++mask)
      if (__builtin_popcount(static_cast<unsigned>(mask)) == size) emit(mask);
  };
  if (j == 1)
    for (int i = 0; i < r; ++i) {
      fc::DivisorClass e(n, 0);
      e[1 + i] = -1;
      out.insert(e);
    }
  for (int t = 0; t <= 2 && t <= r; ++t) {
    if (3 - t == j)
      subsets(t, [&](int mask) {
        fc::DivisorClass d(n, 0);
        d[0] = 1;
        for (int i = 0; i < r; ++i) d[1 + i] = (mask >> i) & 1;
        out.insert(d);
      });
    if (6 - (r - t) == j)
      subsets(r - t, [&](int mask) {
        fc::DivisorClass d(n, 0);
        d[0] = 2;
        for (int i = 0; i < r; ++i) d[1 + i] = (mask >> i) & 1;
        out.insert(d);
      });
  }
  if (r >= 1 && j == 8 - r)
    for (int i = 0; i < r; ++i) {
      fc::DivisorClass d(n, 1);
      d[0] = 3;
      d[1 + i] = 2;
      out.insert(d);
    }
  return out;
}

}  // namespace fctest

#endif  // FACTORCENTER_LATTICE_ORACLE_HPP
