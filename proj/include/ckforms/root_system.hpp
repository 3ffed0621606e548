// Root-system engine. Roots live in the simple-root basis as integer
// coordinate vectors, so everything here is exact integer arithmetic.
//
// Conventions (used throughout the library):
//   cartan[i][j] = a_ij = 2(alpha_i, alpha_j) / (alpha_j, alpha_j),
//   Bourbaki node numbering, and the arrow on a multiple bond points
//   toward the shorter root.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "ckforms/simple_type.hpp"

namespace ckforms {

using Root = std::vector<int>;  // coordinates in the simple-root basis
using IntMatrix = std::vector<std::vector<int>>;

struct RootSystem {
  SimpleType simple_type;
  IntMatrix cartan_matrix;
  std::vector<Root> positive_roots;  // simple roots first, then by height
};

inline IntMatrix cartan_matrix(SimpleType t) {
  require_valid(t);
  const int n = t.rank;
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, int aij = -1, int aji = -1) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:  // alpha_n short
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -2, -1);
      break;
    case Family::C:  // alpha_n long
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -1, -2);
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 2; ++i) link(i, i + 1);
      link(n - 3, n - 2);
      link(n - 3, n - 1);
      break;
    case Family::E: {
      // chain 1-3-4-5-6(-7-8), branch 2-4 (Bourbaki), zero-based here
      const int chain[] = {0, 2, 3, 4, 5, 6, 7};
      for (int i = 0; i + 1 < n - 1; ++i) link(chain[i], chain[i + 1]);
      link(1, 3);
      break;
    }
    case Family::F:  // 1-2=>3-4, alpha_1, alpha_2 long
      link(0, 1);
      link(1, 2, -2, -1);
      link(2, 3);
      break;
    case Family::G:  // alpha_1 long, alpha_2 short
      link(0, 1, -3, -1);
      break;
  }
  return a;
}

// Positive roots by the standard closure: walk up by height; alpha + alpha_i
// is a root iff the alpha_i-string through alpha allows it (q = p - <alpha,
// alpha_i^vee> >= 1, p = how far the string extends downward).
inline RootSystem build_root_system(SimpleType t) {
  const IntMatrix a = cartan_matrix(t);
  const int n = t.rank;
  std::set<Root> known;
  std::vector<Root> roots;
  for (int i = 0; i < n; ++i) {
    Root e(n, 0);
    e[i] = 1;
    known.insert(e);
    roots.push_back(e);
  }
  // level-by-level, so the result is ordered by height with simple roots first
  std::size_t begin = 0;
  while (begin < roots.size()) {
    const std::size_t end = roots.size();
    for (std::size_t k = begin; k < end; ++k) {
      const Root r = roots[k];
      for (int i = 0; i < n; ++i) {
        int pairing = 0;  // <r, alpha_i^vee> = sum_j r_j a_ji
        for (int j = 0; j < n; ++j) pairing += r[j] * a[j][i];
        int p = 0;
        Root down = r;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        if (p - pairing >= 1) {
          Root up = r;
          up[i] += 1;
          if (known.insert(up).second) roots.push_back(up);
        }
      }
    }
    begin = end;
  }
  return RootSystem{t, a, roots};
}

inline int positive_root_count(SimpleType t) {
  return static_cast<int>(build_root_system(t).positive_roots.size());
}

/// dim g = rank + number of roots.
inline int dimension(SimpleType t) {
  return t.rank + 2 * positive_root_count(t);
}

/// Fundamental degrees p_1 <= ... <= p_rank (degrees of the generators of
/// the Weyl-invariant polynomial ring; p_i = exponent_i + 1). Computed via
/// the dual partition of the height distribution of the positive roots.
inline std::vector<int> degrees(SimpleType t) {
  const RootSystem rs = build_root_system(t);
  std::map<int, int> count_at_height;
  for (const Root& r : rs.positive_roots)
    count_at_height[std::accumulate(r.begin(), r.end(), 0)] += 1;
  std::vector<int> out;
  for (int k = 1; k <= t.rank; ++k) {
    int parts = 0;
    for (auto [h, c] : count_at_height)
      if (c >= k) ++parts;
    out.push_back(parts + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Highest root (the unique positive root of maximal height).
inline Root highest_root(SimpleType t) {
  const RootSystem rs = build_root_system(t);
  return rs.positive_roots.back();
}

}  // namespace ckforms
