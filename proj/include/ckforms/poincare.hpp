// The permuted Poincare-polynomial construction:
//
//   P(t) = prod_{j=m+1..l} (1 + t^{2 p_j - 1})
//          * prod_{i=1..m} (1 - t^{2 p_i}) / (1 - t^{2 q_i})
//
// swept over the assignments of the big degrees p to the paired/unpaired
// positions, keeping exactly the assignments for which the ratio is a
// polynomial over Z.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "ckforms/poly.hpp"
#include "ckforms/simple_type.hpp"

namespace ckforms {

struct DegreeData {
  std::vector<int> big_degrees;      // p_1..p_l, degrees of G_U
  std::vector<int> compact_degrees;  // q_1..q_m, degrees of K

  void validate() const {
    if (compact_degrees.size() > big_degrees.size())
      throw input_error("degree data: more compact degrees than big degrees");
    for (int p : big_degrees)
      if (p < 2) throw input_error("degree data: degree < 2");
    for (int q : compact_degrees)
      if (q < 2) throw input_error("degree data: degree < 2");
  }
};

/// P(t) for one ordered assignment: the first m entries of `p_ordered` are
/// paired against q, the rest contribute the odd-degree factors. Empty when
/// the ratio is not a polynomial.
inline std::optional<IntPolynomial> formula_one(const std::vector<int>& p_ordered,
                                                const std::vector<int>& q) {
  const std::size_t l = p_ordered.size(), m = q.size();
  if (m > l) throw input_error("formula_one: size mismatch (m > l)");
  IntPolynomial num = IntPolynomial::one();
  for (std::size_t j = m; j < l; ++j)
    num *= IntPolynomial::one_plus_power(2 * p_ordered[j] - 1);
  for (std::size_t i = 0; i < m; ++i)
    num *= IntPolynomial::one_minus_power(2 * p_ordered[i]);
  IntPolynomial den = IntPolynomial::one();
  for (std::size_t i = 0; i < m; ++i)
    den *= IntPolynomial::one_minus_power(2 * q[i]);
  return exact_divide(num, den);
}

// The products in formula (1) commute, so the value depends on the
// permutation only through which m of the l big degrees are paired.
// Sweeping the m-subsets therefore hits the same polynomial set as the
// full S_l sweep (asserted against a raw sweep in the test suite).
inline std::vector<IntPolynomial> candidate_polynomials(const DegreeData& dd) {
  dd.validate();
  const int l = static_cast<int>(dd.big_degrees.size());
  const int m = static_cast<int>(dd.compact_degrees.size());
  std::set<IntPolynomial> results;

  std::vector<int> choose(m);
  for (int i = 0; i < m; ++i) choose[i] = i;
  while (true) {
    std::vector<int> ordered;
    ordered.reserve(l);
    std::vector<char> picked(l, 0);
    for (int i : choose) {
      ordered.push_back(dd.big_degrees[i]);
      picked[i] = 1;
    }
    for (int i = 0; i < l; ++i)
      if (!picked[i]) ordered.push_back(dd.big_degrees[i]);
    if (auto p = formula_one(ordered, dd.compact_degrees)) results.insert(*p);

    // next m-combination of {0..l-1}
    int k = m - 1;
    while (k >= 0 && choose[k] == l - m + k) --k;
    if (k < 0) break;
    ++choose[k];
    for (int i = k + 1; i < m; ++i) choose[i] = choose[i - 1] + 1;
  }
  return {results.begin(), results.end()};
}

}  // namespace ckforms
