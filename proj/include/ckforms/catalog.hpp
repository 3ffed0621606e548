// Catalog of real simple Lie algebras: real rank, maximal compact
// subalgebra, non-compact dimension d = dim g - dim k, and the degrees of
// the compact dual. Dimensions always come from the root-system engine;
// the per-form data here is only the shape of k and the real rank.
//
// Naming grammar (also the wire format of candidate files):
//   sum    ::= factor ("+" factor)*
//   factor ::= "sl(" n ",R)" | "sl(" n ",C)" | "su(" p "," q ")" | "su*(" 2n ")"
//            | "so(" p "," q ")" | "so*(" 2n ")" | "so(" n ",C)"
//            | "sp(" n ",R)" | "sp(" p "," q ")" | "sp(" n ",C)"
//            | "su(" n ")" | "so(" n ")" | "sp(" n ")"          (compact)
//            | "e6(6)" | "e6(2)" | "e6(-14)" | "e6(-26)" | "e7(7)" | "e7(-5)"
//            | "e7(-25)" | "e8(8)" | "e8(-24)" | "f4(4)" | "f4(-20)" | "g2(2)"
// Whitespace is ignored. so(p,q) is stored with p <= q; su(p,q) and sp(p,q)
// are kept as written. No isomorphism normalization is applied to names.
#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ckforms/root_system.hpp"
#include "ckforms/simple_type.hpp"

namespace ckforms {

enum class FormKind {
  SlR,         // sl(n,R), split A
  SlC,         // sl(n,C) viewed as a real algebra
  SuPQ,        // su(p,q)
  SuStar,      // su*(2n)
  SoPQ,        // so(p,q), p <= q
  SoStar,      // so*(2n)
  SoC,         // so(n,C) viewed as real
  SpR,         // sp(n,R), split C
  SpPQ,        // sp(p,q)
  SpC,         // sp(n,C) viewed as real
  CompactSu,   // su(n)
  CompactSo,   // so(n)
  CompactSp,   // sp(n)
  CompactExc,  // compact exceptional (display only; arises as a k-factor)
  Exc,         // labeled non-compact exceptional form
};

enum class ExcLabel {
  E6_6, E6_2, E6_m14, E6_m26,
  E7_7, E7_m5, E7_m25,
  E8_8, E8_m24,
  F4_4, F4_m20,
  G2_2,
};

struct RealSimpleAlgebra {
  FormKind kind;
  int p = 0, q = 0;              // parameters as applicable (n goes in p)
  ExcLabel label{};              // for Exc
  SimpleType complex_type{};     // derived at construction
  bool complexified = false;     // true for SlC / SoC / SpC

  bool operator==(const RealSimpleAlgebra& o) const {
    return kind == o.kind && p == o.p && q == o.q &&
           (kind != FormKind::Exc || label == o.label) &&
           complex_type == o.complex_type;
  }
};

struct SemisimpleRealAlgebra {
  std::vector<RealSimpleAlgebra> factors;
};

namespace detail {

// so(k) compact: simple factors plus torus rank (so(2) is a torus,
// so(4) = su(2)+su(2), so(6) = su(4) at type level)
inline void append_compact_so(int k, std::vector<SimpleType>& factors, int& torus) {
  if (k <= 1) return;
  if (k == 2) { torus += 1; return; }
  if (k == 3) { factors.push_back({Family::A, 1}); return; }
  if (k == 4) {
    factors.push_back({Family::A, 1});
    factors.push_back({Family::A, 1});
    return;
  }
  if (k == 6) { factors.push_back({Family::A, 3}); return; }
  if (k % 2 == 1) factors.push_back({Family::B, (k - 1) / 2});
  else factors.push_back({Family::D, k / 2});
}

inline void append_compact_su(int k, std::vector<SimpleType>& factors) {
  if (k >= 2) factors.push_back({Family::A, k - 1});
}

inline void append_compact_sp(int k, std::vector<SimpleType>& factors) {
  if (k == 1) factors.push_back({Family::A, 1});
  else if (k >= 2) factors.push_back({Family::C, k});
}

inline SimpleType so_complex_type(int total) {
  // complex type of so(total, C); rejects the non-simple small cases
  if (total < 3 || total == 4)
    throw input_error("so(" + std::to_string(total) +
                      ") is not simple; smallest simple case is so(3)");
  if (total == 3) return {Family::A, 1};
  if (total == 5) return {Family::B, 2};
  if (total == 6) return {Family::A, 3};  // D3 = A3
  if (total % 2 == 1) return {Family::B, (total - 1) / 2};
  return {Family::D, total / 2};
}

inline SimpleType sp_complex_type(int n) {
  return n == 1 ? SimpleType{Family::A, 1} : SimpleType{Family::C, n};
}

}  // namespace detail

// --- factories (validate parameters, fill in the complex type) ---

inline RealSimpleAlgebra sl_R(int n) {
  if (n < 2) throw input_error("sl(n,R) requires n >= 2");
  return {FormKind::SlR, n, 0, {}, {Family::A, n - 1}, false};
}
inline RealSimpleAlgebra sl_C(int n) {
  if (n < 2) throw input_error("sl(n,C) requires n >= 2");
  return {FormKind::SlC, n, 0, {}, {Family::A, n - 1}, true};
}
inline RealSimpleAlgebra su_pq(int p, int q) {
  if (p < 1 || q < 1) throw input_error("su(p,q) requires p,q >= 1");
  return {FormKind::SuPQ, p, q, {}, {Family::A, p + q - 1}, false};
}
inline RealSimpleAlgebra su_star(int two_n) {
  if (two_n < 2 || two_n % 2 != 0)
    throw input_error("su*(2n) requires an even argument >= 2");
  return {FormKind::SuStar, two_n, 0, {}, {Family::A, two_n - 1}, false};
}
inline RealSimpleAlgebra so_pq(int p, int q) {
  if (p < 1 || q < 1) throw input_error("so(p,q) requires p,q >= 1");
  if (p > q) std::swap(p, q);
  if (p + q == 4)
    throw input_error("so(p,q) with p+q=4 is not simple (so(1,3) = sl(2,C), "
                      "so(2,2) = sl(2,R)+sl(2,R))");
  if (p + q < 3) throw input_error("so(p,q) requires p+q >= 3");
  return {FormKind::SoPQ, p, q, {}, detail::so_complex_type(p + q), false};
}
inline RealSimpleAlgebra so_star(int two_n) {
  if (two_n % 2 != 0) throw input_error("so*(2n) requires an even argument");
  if (two_n < 6)
    throw input_error("so*(2n) requires 2n >= 6 (so*(4) is not simple)");
  const int n = two_n / 2;
  return {FormKind::SoStar, two_n, 0, {},
          n == 3 ? SimpleType{Family::A, 3} : SimpleType{Family::D, n}, false};
}
inline RealSimpleAlgebra so_C(int n) {
  return {FormKind::SoC, n, 0, {}, detail::so_complex_type(n), true};
}
inline RealSimpleAlgebra sp_R(int n) {
  if (n < 1) throw input_error("sp(n,R) requires n >= 1");
  return {FormKind::SpR, n, 0, {}, detail::sp_complex_type(n), false};
}
inline RealSimpleAlgebra sp_pq(int p, int q) {
  if (p < 1 || q < 1) throw input_error("sp(p,q) requires p,q >= 1");
  return {FormKind::SpPQ, p, q, {}, detail::sp_complex_type(p + q), false};
}
inline RealSimpleAlgebra sp_C(int n) {
  if (n < 1) throw input_error("sp(n,C) requires n >= 1");
  return {FormKind::SpC, n, 0, {}, detail::sp_complex_type(n), true};
}
inline RealSimpleAlgebra compact_su(int n) {
  if (n < 2) throw input_error("su(n) requires n >= 2");
  return {FormKind::CompactSu, n, 0, {}, {Family::A, n - 1}, false};
}
inline RealSimpleAlgebra compact_so(int n) {
  return {FormKind::CompactSo, n, 0, {}, detail::so_complex_type(n), false};
}
inline RealSimpleAlgebra compact_sp(int n) {
  if (n < 1) throw input_error("sp(n) requires n >= 1");
  return {FormKind::CompactSp, n, 0, {}, detail::sp_complex_type(n), false};
}
inline RealSimpleAlgebra compact_exceptional(SimpleType t) {
  require_valid(t);
  return {FormKind::CompactExc, 0, 0, {}, t, false};
}
inline RealSimpleAlgebra exceptional(ExcLabel label) {
  SimpleType t{};
  switch (label) {
    case ExcLabel::E6_6: case ExcLabel::E6_2:
    case ExcLabel::E6_m14: case ExcLabel::E6_m26: t = {Family::E, 6}; break;
    case ExcLabel::E7_7: case ExcLabel::E7_m5:
    case ExcLabel::E7_m25: t = {Family::E, 7}; break;
    case ExcLabel::E8_8: case ExcLabel::E8_m24: t = {Family::E, 8}; break;
    case ExcLabel::F4_4: case ExcLabel::F4_m20: t = {Family::F, 4}; break;
    case ExcLabel::G2_2: t = {Family::G, 2}; break;
  }
  return {FormKind::Exc, 0, 0, label, t, false};
}

// --- invariants ---

struct RealInvariants {
  int dim = 0;
  int real_rank = 0;
  SemisimpleRealAlgebra max_compact;  // compact simple factors of k
  int torus_rank = 0;                 // abelian part of k
  int d = 0;                          // dim p = dim g - dim k
  std::vector<int> dual_degrees;      // degrees of the compact dual, sorted
};

namespace detail {

inline RealSimpleAlgebra compact_factor_from_type(SimpleType t) {
  switch (t.family) {
    case Family::A: return compact_su(t.rank + 1);
    case Family::B: return compact_so(2 * t.rank + 1);
    case Family::C: return compact_sp(t.rank);
    case Family::D: return compact_so(2 * t.rank);
    default: return compact_exceptional(t);
  }
}

// shape of the maximal compact subalgebra: simple factor types + torus rank
inline void max_compact_types(const RealSimpleAlgebra& a,
                              std::vector<SimpleType>& factors, int& torus) {
  switch (a.kind) {
    case FormKind::SlR: append_compact_so(a.p, factors, torus); break;
    case FormKind::SlC: append_compact_su(a.p, factors); break;
    case FormKind::SuPQ:
      append_compact_su(a.p, factors);
      append_compact_su(a.q, factors);
      torus += 1;
      break;
    case FormKind::SuStar: append_compact_sp(a.p / 2, factors); break;
    case FormKind::SoPQ:
      append_compact_so(a.p, factors, torus);
      append_compact_so(a.q, factors, torus);
      break;
    case FormKind::SoStar:
      append_compact_su(a.p / 2, factors);
      torus += 1;
      break;
    case FormKind::SoC: append_compact_so(a.p, factors, torus); break;
    case FormKind::SpR:
      append_compact_su(a.p, factors);
      torus += 1;
      break;
    case FormKind::SpPQ:
      append_compact_sp(a.p, factors);
      append_compact_sp(a.q, factors);
      break;
    case FormKind::SpC: append_compact_sp(a.p, factors); break;
    case FormKind::CompactSu:
    case FormKind::CompactSo:
    case FormKind::CompactSp:
    case FormKind::CompactExc:
      factors.push_back(a.complex_type);  // k = g for compact forms
      break;
    case FormKind::Exc:
      switch (a.label) {
        case ExcLabel::E6_6: factors = {{Family::C, 4}}; break;
        case ExcLabel::E6_2: factors = {{Family::A, 5}, {Family::A, 1}}; break;
        case ExcLabel::E6_m14: factors = {{Family::D, 5}}; torus += 1; break;
        case ExcLabel::E6_m26: factors = {{Family::F, 4}}; break;
        case ExcLabel::E7_7: factors = {{Family::A, 7}}; break;
        case ExcLabel::E7_m5: factors = {{Family::D, 6}, {Family::A, 1}}; break;
        case ExcLabel::E7_m25: factors = {{Family::E, 6}}; torus += 1; break;
        case ExcLabel::E8_8: factors = {{Family::D, 8}}; break;
        case ExcLabel::E8_m24: factors = {{Family::E, 7}, {Family::A, 1}}; break;
        case ExcLabel::F4_4: factors = {{Family::C, 3}, {Family::A, 1}}; break;
        case ExcLabel::F4_m20: factors = {{Family::B, 4}}; break;
        case ExcLabel::G2_2: factors = {{Family::A, 1}, {Family::A, 1}}; break;
      }
      break;
  }
}

inline int real_rank_of(const RealSimpleAlgebra& a) {
  switch (a.kind) {
    case FormKind::SlR: return a.p - 1;
    case FormKind::SlC: return a.p - 1;
    case FormKind::SuPQ: return std::min(a.p, a.q);
    case FormKind::SuStar: return a.p / 2 - 1;
    case FormKind::SoPQ: return a.p;  // p <= q
    case FormKind::SoStar: return a.p / 4;  // floor(n/2) with n = p/2... see below
    case FormKind::SoC: return a.p / 2;
    case FormKind::SpR: return a.p;
    case FormKind::SpPQ: return std::min(a.p, a.q);
    case FormKind::SpC: return a.p;
    case FormKind::CompactSu:
    case FormKind::CompactSo:
    case FormKind::CompactSp:
    case FormKind::CompactExc: return 0;
    case FormKind::Exc:
      switch (a.label) {
        case ExcLabel::E6_6: return 6;
        case ExcLabel::E6_2: return 4;
        case ExcLabel::E6_m14: return 2;
        case ExcLabel::E6_m26: return 2;
        case ExcLabel::E7_7: return 7;
        case ExcLabel::E7_m5: return 4;
        case ExcLabel::E7_m25: return 3;
        case ExcLabel::E8_8: return 8;
        case ExcLabel::E8_m24: return 4;
        case ExcLabel::F4_4: return 4;
        case ExcLabel::F4_m20: return 1;
        case ExcLabel::G2_2: return 2;
      }
  }
  throw internal_error("real_rank_of: unhandled form");
}

}  // namespace detail

inline RealInvariants invariants(const RealSimpleAlgebra& a) {
  RealInvariants inv;
  inv.dim = dimension(a.complex_type) * (a.complexified ? 2 : 1);
  inv.real_rank = detail::real_rank_of(a);

  std::vector<SimpleType> kfactors;
  detail::max_compact_types(a, kfactors, inv.torus_rank);
  int dim_k = inv.torus_rank;
  for (SimpleType t : kfactors) {
    dim_k += dimension(t);
    inv.max_compact.factors.push_back(detail::compact_factor_from_type(t));
  }
  inv.d = inv.dim - dim_k;
  if (inv.d < 0 || inv.d < inv.real_rank)
    throw internal_error("catalog inconsistency: d < real rank");

  inv.dual_degrees = degrees(a.complex_type);
  if (a.complexified) {
    // compact dual of a complex group is a product of two compact copies
    std::vector<int> twice = inv.dual_degrees;
    twice.insert(twice.end(), inv.dual_degrees.begin(), inv.dual_degrees.end());
    std::sort(twice.begin(), twice.end());
    inv.dual_degrees = std::move(twice);
  }
  return inv;
}

inline bool is_compact_form(const RealSimpleAlgebra& a) {
  return invariants(a).d == 0;
}

/// The split real form of a complex simple type.
inline RealSimpleAlgebra split_form(SimpleType t) {
  require_valid(t);
  switch (t.family) {
    case Family::A: return sl_R(t.rank + 1);
    case Family::B: return so_pq(t.rank, t.rank + 1);
    case Family::C: return sp_R(t.rank);
    case Family::D: return so_pq(t.rank, t.rank);
    case Family::E:
      return exceptional(t.rank == 6   ? ExcLabel::E6_6
                         : t.rank == 7 ? ExcLabel::E7_7
                                       : ExcLabel::E8_8);
    case Family::F: return exceptional(ExcLabel::F4_4);
    case Family::G: return exceptional(ExcLabel::G2_2);
  }
  throw internal_error("split_form: unhandled family");
}

inline bool is_split_form(const RealSimpleAlgebra& a) {
  return invariants(a).real_rank == a.complex_type.rank && !a.complexified;
}

/// Total (d, real rank) over the factors of a semisimple algebra.
inline std::pair<int, int> sum_invariants(const SemisimpleRealAlgebra& h) {
  if (h.factors.empty()) throw input_error("empty semisimple algebra");
  int d = 0, rank = 0;
  for (const auto& f : h.factors) {
    RealInvariants inv = invariants(f);
    d += inv.d;
    rank += inv.real_rank;
  }
  return {d, rank};
}

// --- names ---

inline std::string name(const RealSimpleAlgebra& a) {
  auto two = [](int p, int q) {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  };
  switch (a.kind) {
    case FormKind::SlR: return "sl(" + std::to_string(a.p) + ",R)";
    case FormKind::SlC: return "sl(" + std::to_string(a.p) + ",C)";
    case FormKind::SuPQ: return "su" + two(a.p, a.q);
    case FormKind::SuStar: return "su*(" + std::to_string(a.p) + ")";
    case FormKind::SoPQ: return "so" + two(a.p, a.q);
    case FormKind::SoStar: return "so*(" + std::to_string(a.p) + ")";
    case FormKind::SoC: return "so(" + std::to_string(a.p) + ",C)";
    case FormKind::SpR: return "sp(" + std::to_string(a.p) + ",R)";
    case FormKind::SpPQ: return "sp" + two(a.p, a.q);
    case FormKind::SpC: return "sp(" + std::to_string(a.p) + ",C)";
    case FormKind::CompactSu: return "su(" + std::to_string(a.p) + ")";
    case FormKind::CompactSo: return "so(" + std::to_string(a.p) + ")";
    case FormKind::CompactSp: return "sp(" + std::to_string(a.p) + ")";
    case FormKind::CompactExc: {
      std::string s = to_string(a.complex_type);
      s[0] = static_cast<char>(std::tolower(s[0]));
      return s;
    }
    case FormKind::Exc:
      switch (a.label) {
        case ExcLabel::E6_6: return "e6(6)";
        case ExcLabel::E6_2: return "e6(2)";
        case ExcLabel::E6_m14: return "e6(-14)";
        case ExcLabel::E6_m26: return "e6(-26)";
        case ExcLabel::E7_7: return "e7(7)";
        case ExcLabel::E7_m5: return "e7(-5)";
        case ExcLabel::E7_m25: return "e7(-25)";
        case ExcLabel::E8_8: return "e8(8)";
        case ExcLabel::E8_m24: return "e8(-24)";
        case ExcLabel::F4_4: return "f4(4)";
        case ExcLabel::F4_m20: return "f4(-20)";
        case ExcLabel::G2_2: return "g2(2)";
      }
  }
  throw internal_error("name: unhandled form");
}

/// Canonical printed form: factors sorted by descending dimension, then by
/// name, joined with "+". parse_algebra round-trips this.
inline std::string canonical_name(const SemisimpleRealAlgebra& h) {
  std::vector<std::pair<std::pair<int, std::string>, std::string>> keyed;
  for (const auto& f : h.factors) {
    std::string n = name(f);
    keyed.push_back({{-invariants(f).dim, n}, n});
  }
  std::sort(keyed.begin(), keyed.end());
  std::string out;
  for (const auto& [key, n] : keyed) {
    if (!out.empty()) out += "+";
    out += n;
  }
  return out;
}

// --- parsing ---

namespace detail {

struct Parser {
  std::string text;      // whitespace stripped
  std::size_t pos = 0;

  explicit Parser(std::string_view raw) {
    for (char c : raw)
      if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw input_error("parse error at position " + std::to_string(pos) + ": " +
                      what + " in \"" + text + "\"");
  }
  bool eat(char c) {
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool lookahead(std::string_view s) const {
    return text.compare(pos, s.size(), s) == 0;
  }
  int integer() {
    std::size_t start = pos;
    bool neg = eat('-');
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start + (neg ? 1 : 0)) fail("expected an integer");
    return std::stoi(text.substr(start, pos - start));
  }

  RealSimpleAlgebra factor() {
    static const std::pair<const char*, ExcLabel> exc_names[] = {
        {"e6(-14)", ExcLabel::E6_m14}, {"e6(-26)", ExcLabel::E6_m26},
        {"e6(6)", ExcLabel::E6_6},     {"e6(2)", ExcLabel::E6_2},
        {"e7(-5)", ExcLabel::E7_m5},   {"e7(-25)", ExcLabel::E7_m25},
        {"e7(7)", ExcLabel::E7_7},     {"e8(-24)", ExcLabel::E8_m24},
        {"e8(8)", ExcLabel::E8_8},     {"f4(-20)", ExcLabel::F4_m20},
        {"f4(4)", ExcLabel::F4_4},     {"g2(2)", ExcLabel::G2_2},
    };
    for (const auto& [nm, label] : exc_names)
      if (lookahead(nm)) {
        pos += std::string_view(nm).size();
        return exceptional(label);
      }
    if (lookahead("sl(")) {
      pos += 3;
      int n = integer();
      expect(',');
      if (eat('R')) { expect(')'); return sl_R(n); }
      if (eat('C')) { expect(')'); return sl_C(n); }
      fail("expected R or C");
    }
    if (lookahead("su*(")) {
      pos += 4;
      int n = integer();
      expect(')');
      return su_star(n);
    }
    if (lookahead("su(")) {
      pos += 3;
      int p = integer();
      if (eat(',')) {
        int q = integer();
        expect(')');
        return su_pq(p, q);
      }
      expect(')');
      return compact_su(p);
    }
    if (lookahead("so*(")) {
      pos += 4;
      int n = integer();
      expect(')');
      return so_star(n);
    }
    if (lookahead("so(")) {
      pos += 3;
      int p = integer();
      if (eat(',')) {
        if (eat('C')) { expect(')'); return so_C(p); }
        int q = integer();
        expect(')');
        return so_pq(p, q);
      }
      expect(')');
      return compact_so(p);
    }
    if (lookahead("sp(")) {
      pos += 3;
      int p = integer();
      if (eat(',')) {
        if (eat('R')) { expect(')'); return sp_R(p); }
        if (eat('C')) { expect(')'); return sp_C(p); }
        int q = integer();
        expect(')');
        return sp_pq(p, q);
      }
      expect(')');
      return compact_sp(p);
    }
    fail("expected an algebra name");
  }
};

}  // namespace detail

inline SemisimpleRealAlgebra parse_algebra(std::string_view text) {
  detail::Parser p(text);
  if (p.text.empty()) throw input_error("empty algebra name");
  SemisimpleRealAlgebra out;
  out.factors.push_back(p.factor());
  while (p.eat('+')) out.factors.push_back(p.factor());
  if (p.pos != p.text.size()) p.fail("trailing input");
  return out;
}

/// Parse a name that must denote a single simple algebra.
inline RealSimpleAlgebra parse_simple_algebra(std::string_view text) {
  SemisimpleRealAlgebra a = parse_algebra(text);
  if (a.factors.size() != 1)
    throw input_error("expected a simple algebra, got a sum: " +
                      std::string(text));
  return a.factors[0];
}

}  // namespace ckforms
