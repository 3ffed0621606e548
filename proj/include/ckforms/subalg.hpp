// Candidate subalgebra lists: Borel-de Siebenthal closure over Dynkin
// diagrams for the complex regular semisimple subalgebra TYPES, and JSON
// ingestion of externally computed real candidate lists.
//
// The enumeration works at the level of isomorphism types (sorted multisets
// of simple types), not conjugacy classes: the downstream checks only
// consume the type. Torus summands of regular reductive subalgebras are
// discarded throughout.
#pragma once

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "ckforms/catalog.hpp"
#include "ckforms/dynkin.hpp"
#include "ckforms/simple_type.hpp"

namespace ckforms {

struct ComplexSemisimpleType {
  std::vector<SimpleType> factors;  // kept sorted

  explicit ComplexSemisimpleType(std::vector<SimpleType> f = {})
      : factors(std::move(f)) {
    std::sort(factors.begin(), factors.end());
  }
  int total_rank() const {
    int r = 0;
    for (SimpleType t : factors) r += t.rank;
    return r;
  }
  auto operator<=>(const ComplexSemisimpleType&) const = default;
};

inline std::string to_string(const ComplexSemisimpleType& t) {
  std::string s;
  for (SimpleType f : t.factors) {
    if (!s.empty()) s += "+";
    s += to_string(f);
  }
  return s;
}

namespace detail {

// One-step successors of a single simple factor:
//  (i)  every induced subdiagram except the full one (possibly empty), and
//  (ii) the extended diagram with exactly one node deleted.
inline std::set<std::vector<SimpleType>> one_step_moves(SimpleType t) {
  std::set<std::vector<SimpleType>> out;
  const DynkinDiagram dg = diagram(t);
  const int n = t.rank;
  for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
    std::vector<int> alive;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) alive.push_back(i);
    out.insert(classify_subdiagram(dg, alive));
  }
  const DynkinDiagram ext = extended_diagram(t);
  for (int k = 0; k <= n; ++k) {
    std::vector<int> alive;
    for (int i = 0; i <= n; ++i)
      if (i != k) alive.push_back(i);
    out.insert(classify_subdiagram(ext, alive));
  }
  return out;
}

}  // namespace detail

/// All isomorphism types of regular semisimple subalgebras of t, excluding
/// t itself: fixed-point closure of node deletion and the extended-diagram
/// move, deduplicated by sorted factor multiset.
inline std::set<ComplexSemisimpleType> enumerate_regular_types(SimpleType t) {
  require_valid(t);
  std::map<SimpleType, std::set<std::vector<SimpleType>>> memo;
  auto moves = [&memo](SimpleType s) -> const std::set<std::vector<SimpleType>>& {
    auto it = memo.find(s);
    if (it == memo.end()) it = memo.emplace(s, detail::one_step_moves(s)).first;
    return it->second;
  };

  std::set<ComplexSemisimpleType> seen;
  std::vector<ComplexSemisimpleType> frontier{ComplexSemisimpleType({t})};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    ComplexSemisimpleType cur = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < cur.factors.size(); ++i) {
      if (i > 0 && cur.factors[i] == cur.factors[i - 1]) continue;  // same moves
      std::vector<SimpleType> rest = cur.factors;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      for (const auto& repl : moves(cur.factors[i])) {
        std::vector<SimpleType> next = rest;
        next.insert(next.end(), repl.begin(), repl.end());
        if (next.empty()) continue;
        ComplexSemisimpleType cand(std::move(next));
        if (seen.insert(cand).second) frontier.push_back(std::move(cand));
      }
    }
  }
  seen.erase(ComplexSemisimpleType({t}));
  return seen;
}

/// The split real form, factor by factor.
inline SemisimpleRealAlgebra split_real_form(const ComplexSemisimpleType& t) {
  SemisimpleRealAlgebra out;
  for (SimpleType f : t.factors) out.factors.push_back(split_form(f));
  return out;
}

// --- candidate files ---

struct CandidateList {
  RealSimpleAlgebra ambient;
  std::vector<SemisimpleRealAlgebra> entries;
  std::string source;
};

/// Load a JSON candidate file: {"ambient": name, "candidates": [name, ...]}.
inline CandidateList load_candidates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open candidate file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw input_error("candidate file " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("ambient") || !j.contains("candidates"))
    throw input_error("candidate file " + path +
                      ": expected fields \"ambient\" and \"candidates\"");

  CandidateList cl;
  cl.source = path;
  cl.ambient = parse_simple_algebra(j.at("ambient").get<std::string>());
  const auto& arr = j.at("candidates");
  if (!arr.is_array() || arr.empty())
    throw input_error("candidate file " + path + ": empty candidate list");
  const std::string ambient_name = name(cl.ambient);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    SemisimpleRealAlgebra h;
    try {
      h = parse_algebra(arr[i].get<std::string>());
    } catch (const input_error& e) {
      throw input_error("candidate file " + path + ", entry " +
                        std::to_string(i) + ": " + e.what());
    }
    if (canonical_name(h) == ambient_name)
      throw input_error("candidate file " + path + ", entry " +
                        std::to_string(i) + ": entry equals the ambient algebra");
    cl.entries.push_back(std::move(h));
  }
  return cl;
}

}  // namespace ckforms
