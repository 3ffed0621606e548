// The verdict pipeline. For a pair (g, h):
//
//   1. equal real ranks           -> no compact form (Calabi-Markus);
//   2. otherwise sweep the candidate Poincare polynomials of the compact
//      dual of G over K and test the coefficient in degree d = d(H):
//      all zero -> no compact form (cohomological obstruction),
//      any nonzero -> inconclusive.
//
// Embeddability of h in g is NOT verified beyond rank and dimension sanity
// checks; a no-compact-form verdict for a pair that does not actually embed
// is vacuous. The caller owns that assertion.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckforms/catalog.hpp"
#include "ckforms/poincare.hpp"
#include "ckforms/subalg.hpp"

namespace ckforms {

enum class Outcome { NoCK_CalabiMarkus, NoCK_Tholozan, Inconclusive };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::NoCK_CalabiMarkus: return "NoCK_CalabiMarkus";
    case Outcome::NoCK_Tholozan: return "NoCK_Tholozan";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  throw internal_error("to_string(Outcome)");
}

struct Verdict {
  Outcome outcome;
  int d = 0;       // d(H)
  int rank_g = 0;  // real ranks
  int rank_h = 0;
  std::vector<IntPolynomial> polynomials;   // candidate set (empty on the CM branch)
  std::vector<Coeff> coefficients_at_d;     // parallel to polynomials
  std::optional<bool> sl2_fast_path_agrees; // set only when h = sl(2,R)
};

struct SurveyRow {
  SemisimpleRealAlgebra h;
  Verdict verdict;
};

/// Degrees of K as one sorted list over the simple factors of the maximal
/// compact subalgebra. Rejects g whose K has a torus part.
inline DegreeData degree_data(const RealSimpleAlgebra& g) {
  const RealInvariants inv = invariants(g);
  if (inv.torus_rank != 0)
    throw input_error("the maximal compact subgroup of " + name(g) +
                      " is not semisimple (torus rank " +
                      std::to_string(inv.torus_rank) + ")");
  DegreeData dd;
  dd.big_degrees = inv.dual_degrees;
  for (const auto& kf : inv.max_compact.factors) {
    std::vector<int> qs = degrees(kf.complex_type);
    dd.compact_degrees.insert(dd.compact_degrees.end(), qs.begin(), qs.end());
  }
  std::sort(dd.compact_degrees.begin(), dd.compact_degrees.end());
  dd.validate();
  return dd;
}

inline Verdict check_pair(const RealSimpleAlgebra& g,
                          const SemisimpleRealAlgebra& h) {
  const RealInvariants ginv = invariants(g);
  if (ginv.d == 0) throw input_error(name(g) + " is compact");
  if (ginv.torus_rank != 0)
    throw input_error("the maximal compact subgroup of " + name(g) +
                      " is not semisimple");
  const auto [dh, rank_h] = sum_invariants(h);
  if (rank_h > ginv.real_rank)
    throw input_error("real rank of h (" + std::to_string(rank_h) +
                      ") exceeds real rank of g (" +
                      std::to_string(ginv.real_rank) + "): no embedding exists");
  int dim_h = 0;
  for (const auto& f : h.factors) dim_h += invariants(f).dim;
  if (dim_h >= ginv.dim)
    throw input_error("dim h (" + std::to_string(dim_h) +
                      ") is not smaller than dim g (" +
                      std::to_string(ginv.dim) + ")");

  Verdict v;
  v.d = dh;
  v.rank_g = ginv.real_rank;
  v.rank_h = rank_h;

  const bool h_is_sl2 =
      h.factors.size() == 1 && h.factors[0].kind == FormKind::SlR &&
      h.factors[0].p == 2;

  if (rank_h == ginv.real_rank) {
    v.outcome = Outcome::NoCK_CalabiMarkus;
  } else {
    v.polynomials = candidate_polynomials(degree_data(g));
    if (v.polynomials.empty())
      throw internal_error("empty candidate polynomial set for " + name(g) +
                           " (formality guarantees at least one ordering)");
    bool all_zero = true;
    for (const auto& p : v.polynomials) {
      v.coefficients_at_d.push_back(p.coefficient(v.d));
      if (v.coefficients_at_d.back() != 0) all_zero = false;
    }
    v.outcome = all_zero ? Outcome::NoCK_Tholozan : Outcome::Inconclusive;
  }

  // h = sl(2,R) with semisimple K: no compact form independently of the
  // sweep (H^2 of the compact dual vanishes); record agreement.
  if (h_is_sl2)
    v.sl2_fast_path_agrees = (v.outcome != Outcome::Inconclusive);
  return v;
}

namespace detail {

inline void sort_rows(std::vector<SurveyRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const SurveyRow& a, const SurveyRow& b) {
    const auto ka = std::make_pair(a.h.factors.size(), canonical_name(a.h));
    const auto kb = std::make_pair(b.h.factors.size(), canonical_name(b.h));
    return ka < kb;
  });
}

}  // namespace detail

/// Run the split survey: enumerate the regular subalgebra types of t, take
/// split real forms, and check every pair against split_form(t). Returns
/// every row (all outcomes) sorted by (factor count, canonical name).
inline std::vector<SurveyRow> survey_split(SimpleType t) {
  const RealSimpleAlgebra g = split_form(t);
  degree_data(g);  // reject non-semisimple K up front
  std::vector<SurveyRow> rows;
  for (const auto& type : enumerate_regular_types(t)) {
    SemisimpleRealAlgebra h = split_real_form(type);
    rows.push_back({h, check_pair(g, h)});
  }
  detail::sort_rows(rows);
  return rows;
}

/// Check every entry of a candidate list against its ambient algebra.
inline std::vector<SurveyRow> survey_candidates(const RealSimpleAlgebra& g,
                                                const CandidateList& cl) {
  if (!(g == cl.ambient))
    throw input_error("candidate list ambient " + name(cl.ambient) +
                      " does not match " + name(g));
  std::vector<SurveyRow> rows;
  for (const auto& h : cl.entries) rows.push_back({h, check_pair(g, h)});
  detail::sort_rows(rows);
  return rows;
}

/// The rows a survey reports by default (Algorithm output L).
inline std::vector<SurveyRow> tholozan_rows(const std::vector<SurveyRow>& rows) {
  std::vector<SurveyRow> out;
  for (const auto& r : rows)
    if (r.verdict.outcome == Outcome::NoCK_Tholozan) out.push_back(r);
  return out;
}

}  // namespace ckforms
