// Dynkin diagrams as small labeled graphs, their affine extensions, and
// classification of induced subdiagrams back into simple types. This is the
// substrate for the Borel-de Siebenthal enumeration in subalg.hpp.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "ckforms/root_system.hpp"
#include "ckforms/simple_type.hpp"

namespace ckforms {

struct DynkinDiagram {
  struct Edge {
    int a, b;
    int multiplicity;     // a_ab * a_ba: 1, 2, 3 (4 only on the A1 affine edge)
    int toward;           // node the arrow points to (the shorter root), -1 if none
  };
  SimpleType simple_type;
  std::vector<int> nodes;           // node ids 0..n-1, affine node last if present
  std::vector<int> length2;         // normalized half squared length per node (short = 1)
  std::vector<Edge> edges;
  std::optional<int> affine_node;
};

namespace detail {

// Half squared lengths normalized to integers with min 1 (so 1 = short and
// 2 or 3 = long), propagated from node 0 through d_i a_ij = d_j a_ji.
inline std::vector<int> half_lengths(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  // track as rationals num/den to avoid ordering assumptions
  std::vector<long long> num(n, 0), den(n, 0);
  num[0] = den[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (den[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (i != j && a[i][j] != 0 && den[j] == 0) {
          // d_j = d_i * a_ji / a_ij
          num[j] = num[i] * a[j][i];
          den[j] = den[i] * a[i][j];
          if (den[j] < 0) {
            num[j] = -num[j];
            den[j] = -den[j];
          }
          changed = true;
        }
      }
    }
  }
  std::vector<int> out(n);
  // scale so the minimum is 1
  long long best_num = 0, best_den = 1;
  for (int i = 0; i < n; ++i) {
    if (best_num == 0 || num[i] * best_den < best_num * den[i]) {
      best_num = num[i];
      best_den = den[i];
    }
  }
  for (int i = 0; i < n; ++i) {
    long long v_num = num[i] * best_den;
    long long v_den = den[i] * best_num;
    if (v_den == 0 || v_num % v_den != 0)
      throw internal_error("non-integral length ratio in Cartan matrix");
    out[i] = static_cast<int>(v_num / v_den);
  }
  return out;
}

inline void add_edges(DynkinDiagram& dg, const IntMatrix& a,
                      const std::vector<int>& len2) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[i][j] != 0) {
        int mult = a[i][j] * a[j][i];
        int toward = -1;
        if (len2[i] != len2[j]) toward = len2[i] < len2[j] ? i : j;
        dg.edges.push_back({i, j, mult, toward});
      }
}

}  // namespace detail

inline DynkinDiagram diagram(SimpleType t) {
  const IntMatrix a = cartan_matrix(t);
  DynkinDiagram dg;
  dg.simple_type = t;
  dg.nodes.resize(t.rank);
  for (int i = 0; i < t.rank; ++i) dg.nodes[i] = i;
  dg.length2 = detail::half_lengths(a);
  detail::add_edges(dg, a, dg.length2);
  return dg;
}

// Affine extension: attach the lowest root -theta as node n. Its pairings
// with the simple roots are computed from the root system, not tabulated:
//   a_{0i} = <-theta, alpha_i^vee>,  a_{i0} = -(alpha_i, theta) / d_theta.
inline DynkinDiagram extended_diagram(SimpleType t) {
  const IntMatrix a = cartan_matrix(t);
  const int n = t.rank;
  const std::vector<int> len2 = detail::half_lengths(a);
  const Root theta = highest_root(t);

  // (alpha_i, alpha_j) = d_j a_ij in the same normalization as len2
  auto inner = [&](int i, int j) { return len2[j] * a[i][j]; };
  std::vector<int> alpha_dot_theta(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) alpha_dot_theta[i] += theta[j] * inner(i, j);
  int theta2 = 0;
  for (int i = 0; i < n; ++i) theta2 += theta[i] * alpha_dot_theta[i];
  if (theta2 % 2 != 0) throw internal_error("odd (theta,theta)");
  const int d_theta = theta2 / 2;  // theta is long, so this is max(len2)

  IntMatrix ext(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ext[i][j] = a[i][j];
  ext[n][n] = 2;
  for (int i = 0; i < n; ++i) {
    int a0i = 0;  // <-theta, alpha_i^vee>
    for (int j = 0; j < n; ++j) a0i -= theta[j] * a[j][i];
    if (alpha_dot_theta[i] % d_theta != 0)
      throw internal_error("non-integral affine pairing");
    ext[n][i] = a0i;
    ext[i][n] = -alpha_dot_theta[i] / d_theta;
  }

  DynkinDiagram dg;
  dg.simple_type = t;
  dg.nodes.resize(n + 1);
  for (int i = 0; i <= n; ++i) dg.nodes[i] = i;
  dg.length2 = len2;
  dg.length2.push_back(d_theta);
  detail::add_edges(dg, ext, dg.length2);
  dg.affine_node = n;
  return dg;
}

// --- classification of induced subdiagrams ---

/// Connected components of the subdiagram induced by `alive`.
inline std::vector<std::vector<int>> diagram_components(
    const DynkinDiagram& dg, const std::vector<int>& alive) {
  std::vector<char> in(dg.nodes.size() + 1, 0), seen(dg.nodes.size() + 1, 0);
  for (int v : alive) in[v] = 1;
  std::vector<std::vector<int>> comps;
  for (int v : alive) {
    if (seen[v]) continue;
    std::vector<int> comp, stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (const auto& e : dg.edges) {
        int w = -1;
        if (e.a == u) w = e.b;
        if (e.b == u) w = e.a;
        if (w >= 0 && in[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// Identify one connected induced subdiagram as a simple type. Applies the
/// standard low-rank identifications: a rank-2 double bond is B2 (= C2) and
/// a 3-node fork is A3 (= D3).
inline SimpleType classify_component(const DynkinDiagram& dg,
                                     const std::vector<int>& comp) {
  const int n = static_cast<int>(comp.size());
  if (n == 1) return {Family::A, 1};

  std::vector<char> in(dg.nodes.size() + 1, 0);
  for (int v : comp) in[v] = 1;
  std::vector<DynkinDiagram::Edge> edges;
  for (const auto& e : dg.edges)
    if (in[e.a] && in[e.b]) edges.push_back(e);
  auto deg = [&](int v) {
    int d = 0;
    for (const auto& e : edges) d += (e.a == v) + (e.b == v);
    return d;
  };

  int max_mult = 1;
  for (const auto& e : edges) max_mult = std::max(max_mult, e.multiplicity);
  if (max_mult == 3) {
    if (n != 2) throw internal_error("triple bond outside G2");
    return {Family::G, 2};
  }
  if (max_mult == 2) {
    int shortest = dg.length2[comp[0]];
    for (int v : comp) shortest = std::min(shortest, dg.length2[v]);
    int n_short = 0;
    for (int v : comp)
      if (dg.length2[v] == shortest) ++n_short;
    const int n_long = n - n_short;
    for (int v : comp)
      if (deg(v) > 2) throw internal_error("fork in a multiply-laced component");
    if (n == 2) return {Family::B, 2};
    if (n == 4 && n_short == 2 && n_long == 2) {
      // F4 iff the double bond sits in the middle of the chain
      for (const auto& e : edges)
        if (e.multiplicity == 2 && deg(e.a) == 2 && deg(e.b) == 2)
          return {Family::F, 4};
    }
    if (n_short == 1) return {Family::B, n};
    if (n_long == 1) return {Family::C, n};
    throw internal_error("unclassifiable doubly-laced component");
  }

  // simply laced: A by shape chain, D/E by the fork's arm lengths
  std::vector<int> forks;
  for (int v : comp) {
    if (deg(v) > 3) throw internal_error("node of degree > 3");
    if (deg(v) == 3) forks.push_back(v);
  }
  if (forks.empty()) return {Family::A, n};
  if (forks.size() != 1) throw internal_error("more than one fork");
  const int c = forks[0];
  std::vector<int> arms;
  for (const auto& e : edges) {
    int s = e.a == c ? e.b : (e.b == c ? e.a : -1);
    if (s < 0) continue;
    int len = 1, prev = c, cur = s;
    while (true) {
      int next = -1;
      for (const auto& f : edges) {
        int w = f.a == cur ? f.b : (f.b == cur ? f.a : -1);
        if (w >= 0 && w != prev) next = w;
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};  // n >= 4 here
  if (arms == std::vector<int>{1, 2, 2}) return {Family::E, 6};
  if (arms == std::vector<int>{1, 2, 3}) return {Family::E, 7};
  if (arms == std::vector<int>{1, 2, 4}) return {Family::E, 8};
  throw internal_error("unclassifiable simply-laced component");
}

/// All components of the induced subdiagram, as a sorted type multiset.
inline std::vector<SimpleType> classify_subdiagram(const DynkinDiagram& dg,
                                                   const std::vector<int>& alive) {
  std::vector<SimpleType> out;
  for (const auto& comp : diagram_components(dg, alive))
    out.push_back(classify_component(dg, comp));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ckforms
