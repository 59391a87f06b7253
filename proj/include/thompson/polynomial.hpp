#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "thompson/numeric.hpp"

namespace thompson {

// Dense univariate polynomial with big-integer coefficients, ascending powers.
class BigPoly {
 public:
  BigPoly() = default;
  explicit BigPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static BigPoly monomial(unsigned degree, BigInt coeff = 1) {
    std::vector<BigInt> c(degree + 1, BigInt(0));
    c[degree] = std::move(coeff);
    return BigPoly(std::move(c));
  }

  const std::vector<BigInt>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigInt coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  friend BigPoly operator+(const BigPoly& a, const BigPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return BigPoly(std::move(c));
  }

  friend BigPoly operator*(const BigPoly& a, const BigPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return BigPoly(std::move(c));
  }

  Rational eval(const Rational& x) const {
    Rational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Rational(c_[i]);
    return r;
  }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += c_[i] > 0 ? " + " : " - ";
      else if (c_[i] < 0) out += "-";
      BigInt a = abs(c_[i]);
      if (a != 1 || i == 0) out += a.str();
      if (i >= 1) {
        if (a != 1) out += "*";
        out += var;
        if (i >= 2) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

// Phi_0 = x, Phi_k = x + Phi_{k-1}^2; the generating polynomial of trees of
// height at most k (coefficient of x^n = number of such trees with n leaves).
inline BigPoly phi_poly(int k) {
  if (k < 0) throw std::invalid_argument("phi index must be non-negative");
  BigPoly p = BigPoly::monomial(1);
  for (int i = 1; i <= k; ++i) p = BigPoly::monomial(1) + p * p;
  return p;
}

// Exact evaluation of Phi_k through the recursion (k squarings).
inline Rational phi_eval(int k, const Rational& x) {
  Rational v = x;
  for (int i = 1; i <= k; ++i) v = x + v * v;
  return v;
}

struct RootBracket {
  Rational lo, hi;
  bool exact = false;  // lo == hi == the root
  Rational width() const { return hi - lo; }
};

// Bracket of the unique positive root xi_k of Phi_k(x) = 1, by bisection.
// Phi_k is strictly increasing on [0, inf); the invariant is
// Phi_k(lo) < 1 <= Phi_k(hi).
inline RootBracket xi_root(int k, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  Rational lo = 0, hi = 1;
  if (phi_eval(k, hi) == 1) return {hi, hi, true};  // xi_0 = 1 exactly
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    Rational v = phi_eval(k, mid);
    if (v == 1) return {mid, mid, true};
    if (v < 1)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi, false};
}

}  // namespace thompson
