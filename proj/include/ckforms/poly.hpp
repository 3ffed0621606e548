// Dense one-variable polynomials over Z with arbitrary-precision
// coefficients, plus exact division (the polynomiality filter).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ckforms/simple_type.hpp"

namespace ckforms {

using Coeff = boost::multiprecision::cpp_int;

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial({Coeff(1)}); }
  /// 1 - t^k
  static IntPolynomial one_minus_power(int k) {
    std::vector<Coeff> c(k + 1, Coeff(0));
    c[0] = 1;
    c[k] += -1;  // += so that k = 0 gives the zero polynomial
    return IntPolynomial(std::move(c));
  }
  /// 1 + t^k
  static IntPolynomial one_plus_power(int k) {
    std::vector<Coeff> c(k + 1, Coeff(0));
    c[0] = 1;
    c[k] += 1;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient in degree d (0 beyond the degree).
  Coeff coefficient(int d) const {
    if (d < 0) throw input_error("coefficient: negative degree");
    if (d >= static_cast<int>(coeffs_.size())) return Coeff(0);
    return coeffs_[d];
  }

  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
  // lexicographic by (degree, coefficients); gives candidate sets a stable order
  bool operator<(const IntPolynomial& o) const {
    if (coeffs_.size() != o.coeffs_.size())
      return coeffs_.size() < o.coeffs_.size();
    return coeffs_ < o.coeffs_;
  }

  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Coeff> out(coeffs_.size() + o.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
  }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  bool has_negative_coefficient() const {
    for (const Coeff& c : coeffs_)
      if (c < 0) return true;
    return false;
  }

  /// coeff(k) == coeff(deg - k) for all k.
  bool is_palindromic() const {
    for (std::size_t i = 0; i < coeffs_.size() / 2 + 1; ++i)
      if (coeffs_[i] != coeffs_[coeffs_.size() - 1 - i]) return false;
    return true;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = 0; d <= degree(); ++d) {
      if (coeffs_[d] == 0) continue;
      Coeff c = coeffs_[d];
      if (!s.empty()) {
        s += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      } else if (c < 0) {
        s += "-";
        c = -c;
      }
      if (d == 0 || c != 1) s += c.str();
      if (d > 0) s += "t^" + std::to_string(d);
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Coeff> coeffs_;  // index = degree; empty means 0
};

/// Quotient of numerator by denominator iff the division is exact over Z.
inline std::optional<IntPolynomial> exact_divide(const IntPolynomial& numerator,
                                                 const IntPolynomial& denominator) {
  if (denominator.is_zero()) throw input_error("exact_divide: zero denominator");
  if (numerator.is_zero()) return IntPolynomial::zero();
  if (numerator.degree() < denominator.degree()) return std::nullopt;

  std::vector<Coeff> rem = numerator.coefficients();
  const std::vector<Coeff>& den = denominator.coefficients();
  const Coeff& lead = den.back();
  const int qdeg = numerator.degree() - denominator.degree();
  std::vector<Coeff> quot(qdeg + 1, Coeff(0));
  for (int k = qdeg; k >= 0; --k) {
    const Coeff& c = rem[k + denominator.degree()];
    if (c % lead != 0) return std::nullopt;
    quot[k] = c / lead;
    if (quot[k] == 0) continue;
    for (std::size_t i = 0; i < den.size(); ++i)
      rem[k + i] -= quot[k] * den[i];
  }
  for (const Coeff& c : rem)
    if (c != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

}  // namespace ckforms
