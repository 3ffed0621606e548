// Shared test helpers: independent oracles kept deliberately separate from
// the library implementation paths they check.
#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ckforms/poincare.hpp"
#include "ckforms/simple_type.hpp"

namespace testutil {

// Published fundamental-degree tables (the implementation computes these
// from root heights; the tables are the oracle, never the other way round).
inline std::vector<int> standard_degrees(ckforms::SimpleType t) {
  using ckforms::Family;
  std::vector<int> d;
  switch (t.family) {
    case Family::A:
      for (int i = 2; i <= t.rank + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 2; i <= 2 * t.rank; i += 2) d.push_back(i);
      break;
    case Family::D:
      for (int i = 2; i <= 2 * t.rank - 2; i += 2) d.push_back(i);
      d.push_back(t.rank);
      break;
    case Family::E:
      if (t.rank == 6) d = {2, 5, 6, 8, 9, 12};
      else if (t.rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::G: d = {2, 6}; break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Published positive-root counts.
inline int standard_positive_root_count(ckforms::SimpleType t) {
  using ckforms::Family;
  switch (t.family) {
    case Family::A: return t.rank * (t.rank + 1) / 2;
    case Family::B:
    case Family::C: return t.rank * t.rank;
    case Family::D: return t.rank * (t.rank - 1);
    case Family::E: return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  throw std::logic_error("standard_positive_root_count");
}

// All valid simple types with rank <= max_rank.
inline std::vector<ckforms::SimpleType> all_types_up_to(int max_rank) {
  using ckforms::Family;
  std::vector<ckforms::SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E,
                   Family::F, Family::G})
    for (int r = 1; r <= max_rank; ++r)
      if (ckforms::is_valid({f, r})) out.push_back({f, r});
  return out;
}

// Raw S_l sweep of formula (1): the oracle for the reduced assignment sweep.
inline std::vector<ckforms::IntPolynomial> raw_permutation_sweep(
    const ckforms::DegreeData& dd) {
  std::vector<int> p = dd.big_degrees;
  std::sort(p.begin(), p.end());
  std::set<ckforms::IntPolynomial> out;
  do {
    if (auto r = ckforms::formula_one(p, dd.compact_degrees)) out.insert(*r);
  } while (std::next_permutation(p.begin(), p.end()));
  return {out.begin(), out.end()};
}

// Multisets {A_{k_1},...,A_{k_r}} with sum (k_i + 1) <= n + 1: the Levi
// subalgebra types of A_n, an independent oracle for the A-family closure.
inline std::set<std::vector<ckforms::SimpleType>> levi_multisets(int n) {
  std::set<std::vector<ckforms::SimpleType>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int budget, int max_part) -> void {
    if (!cur.empty()) {
      std::vector<ckforms::SimpleType> m;
      for (int k : cur) m.push_back({ckforms::Family::A, k});
      std::sort(m.begin(), m.end());
      out.insert(m);
    }
    for (int k = 1; k <= max_part && k + 1 <= budget; ++k) {
      cur.push_back(k);
      self(self, budget - (k + 1), k);
      cur.pop_back();
    }
  };
  rec(rec, n + 1, n);
  out.erase({{ckforms::Family::A, n}});
  return out;
}

struct CommandResult {
  int exit_code;
  std::string output;  // stdout only
};

// Run a command, capture stdout and the exit code.
inline CommandResult run_command(const std::string& cmd) {
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  int code = -1;
  if (status >= 0) code = (status & 0x7f) == 0 ? (status >> 8) & 0xff : -1;
  return {code, out};
}

}  // namespace testutil
