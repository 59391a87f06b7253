#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace thompson {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// "p" or "p/q", q > 0 after normalization
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  BigInt num(s.substr(0, slash));
  BigInt den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rational(num, den);
}

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Prime field used for fast probing runs of the linear solver.  The modulus
// is the Mersenne prime 2^61 - 1.
class Fp {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t(1) << 61) - 1;

  Fp() : v_(0) {}
  Fp(long long x) {
    long long m = x % static_cast<long long>(kModulus);
    if (m < 0) m += kModulus;
    v_ = static_cast<std::uint64_t>(m);
  }
  explicit Fp(const BigInt& x) {
    BigInt m = x % kModulus;
    if (m < 0) m += kModulus;
    v_ = m.convert_to<std::uint64_t>();
  }
  explicit Fp(const Rational& q) : Fp(Fp(numerator(q)) / Fp(denominator(q))) {}

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.v_ + b.v_;
    if (s >= kModulus) s -= kModulus;
    return from_raw(s);
  }
  friend Fp operator-(Fp a, Fp b) {
    std::uint64_t s = a.v_ + kModulus - b.v_;
    if (s >= kModulus) s -= kModulus;
    return from_raw(s);
  }
  friend Fp operator*(Fp a, Fp b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a.v_) * b.v_;
    return from_raw(static_cast<std::uint64_t>(p % kModulus));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return from_raw(v_ == 0 ? 0 : kModulus - v_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    // Fermat: v^(p-2)
    Fp base = *this, acc = Fp(1);
    std::uint64_t e = kModulus - 2;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  std::string str() const { return std::to_string(v_); }

 private:
  static Fp from_raw(std::uint64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint64_t v_;
};

// Uniform helpers so templated code can treat Rational and Fp alike.
inline bool is_zero(const Rational& q) { return q == 0; }
inline bool is_zero(const Fp& f) { return f.is_zero(); }
inline std::string scalar_str(const Rational& q) { return to_string(q); }
inline std::string scalar_str(const Fp& f) { return f.str(); }

}  // namespace thompson
