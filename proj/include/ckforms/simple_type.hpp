// Complex simple Lie algebra types: family letter + rank, with the
// usual low-rank exclusions (D2/D3 are handled by callers as A1+A1/A3).
#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckforms {

// User-facing errors (bad names, bad parameters, bad files) vs. violations
// of internal invariants. The CLI maps them to exit codes 1 and 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Family : char {
  A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

struct SimpleType {
  Family family;
  int rank;
  auto operator<=>(const SimpleType&) const = default;
};

inline bool is_valid(SimpleType t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B:
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 3;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

inline std::string to_string(SimpleType t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

inline void require_valid(SimpleType t) {
  if (!is_valid(t))
    throw input_error("invalid simple type " + to_string(t));
}

inline SimpleType make_type(Family f, int rank) {
  SimpleType t{f, rank};
  require_valid(t);
  return t;
}

}  // namespace ckforms
