#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace aztec {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline BigInt numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rational& r) {
  if (denom(r) == 1) return numer(r).str();
  return numer(r).str() + "/" + denom(r).str();
}

inline BigInt isqrt(const BigInt& m) { return boost::multiprecision::sqrt(m); }

// Natural log of a positive big integer without converting the whole value.
inline long double log_bigint(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log of non-positive integer");
  const unsigned bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 62) return std::log(static_cast<long double>(v.convert_to<std::uint64_t>()));
  const unsigned shift = bits - 62;
  BigInt top = v >> shift;
  return std::log(static_cast<long double>(top.convert_to<std::uint64_t>())) +
         static_cast<long double>(shift) * std::log(2.0L);
}

inline long double log_rational(const Rational& r) { return log_bigint(numer(r)) - log_bigint(denom(r)); }

namespace detail {

inline const std::vector<unsigned>& small_primes() {
  static const std::vector<unsigned> primes = [] {
    std::vector<unsigned> out;
    for (unsigned p = 2; p < 2000; ++p) {
      bool prime = true;
      for (unsigned q : out) {
        if (q * q > p) break;
        if (p % q == 0) { prime = false; break; }
      }
      if (prime) out.push_back(p);
    }
    return out;
  }();
  return primes;
}

// Moves square factors of m into the returned root; m is left with the rest.
// Trial division only goes so far, so a large squared prime times a large
// cofactor can survive. Equality never relies on this being complete.
inline BigInt extract_square(BigInt& m) {
  BigInt root = 1;
  if (m <= 1) return root;
  for (unsigned p : small_primes()) {
    const BigInt p2 = BigInt(p) * p;
    if (p2 > m) break;
    while (m % p2 == 0) {
      m /= p2;
      root *= p;
    }
  }
  BigInt s = isqrt(m);
  if (s * s == m) {
    root *= s;
    m = 1;
  }
  return root;
}

}  // namespace detail

// coeff * pi^(pi_half/2) * sqrt(radicand)
class ExactValue {
 public:
  ExactValue() = default;
  ExactValue(const Rational& c, int pi_half = 0, const Rational& radicand = 1)
      : coeff_(c), pi_half_(pi_half), radicand_(1) {
    if (radicand < 0) throw std::domain_error("negative radicand");
    if (radicand == 0) {
      coeff_ = 0;
    } else {
      absorb_radicand(numer(radicand) * denom(radicand), denom(radicand));
    }
    normalize();
  }
  ExactValue(long long c) : ExactValue(Rational(c)) {}

  static ExactValue sqrt_of(const Rational& r) { return ExactValue(1, 0, r); }
  static ExactValue pi_power(int half_power) { return ExactValue(1, half_power, 1); }

  const Rational& coeff() const { return coeff_; }
  int pi_half_power() const { return pi_half_; }
  Rational radicand() const { return Rational(radicand_); }

  bool is_zero() const { return coeff_ == 0; }
  bool is_rational() const { return pi_half_ == 0 && radicand_ == 1; }
  Rational as_rational() const {
    if (!is_rational()) throw std::domain_error("value is not rational: " + str());
    return coeff_;
  }
  int sign() const { return coeff_ > 0 ? 1 : (coeff_ < 0 ? -1 : 0); }

  ExactValue inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // 1/sqrt(m) = sqrt(m)/m
    ExactValue out;
    out.coeff_ = Rational(1) / (coeff_ * Rational(radicand_));
    out.pi_half_ = -pi_half_;
    out.radicand_ = radicand_;
    return out;
  }

  ExactValue pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    ExactValue out(1), base = *this;
    while (e) {
      if (e & 1) out *= base;
      base *= base;
      e >>= 1;
    }
    return out;
  }

  ExactValue& operator*=(const ExactValue& o) {
    coeff_ *= o.coeff_;
    pi_half_ += o.pi_half_;
    const BigInt g = boost::multiprecision::gcd(radicand_, o.radicand_);
    coeff_ *= g;
    BigInt a = radicand_ / g, b = o.radicand_ / g;
    radicand_ = 1;
    absorb_radicand(a * b, 1);
    normalize();
    return *this;
  }
  ExactValue& operator/=(const ExactValue& o) { return *this *= o.inverse(); }
  ExactValue& operator*=(const Rational& r) {
    coeff_ *= r;
    normalize();
    return *this;
  }

  friend ExactValue operator*(ExactValue a, const ExactValue& b) { return a *= b; }
  friend ExactValue operator/(ExactValue a, const ExactValue& b) { return a /= b; }
  friend ExactValue operator-(const ExactValue& a) {
    ExactValue out = a;
    out.coeff_ = -out.coeff_;
    return out;
  }

  // Sums are only formed between like terms (same pi power, same radical).
  friend ExactValue operator+(const ExactValue& a, const ExactValue& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.pi_half_ != b.pi_half_)
      throw std::domain_error("sum of unlike terms: " + a.str() + " + " + b.str());
    if (a.radicand_ == b.radicand_) {
      ExactValue out = a;
      out.coeff_ += b.coeff_;
      out.normalize();
      return out;
    }
    // radicands can still differ by a hidden square factor
    const Rational q = Rational(a.radicand_) / Rational(b.radicand_);
    BigInt qn = numer(q), qd = denom(q);
    BigInt rn = isqrt(qn), rd = isqrt(qd);
    if (rn * rn != qn || rd * rd != qd)
      throw std::domain_error("sum of unlike radicals: " + a.str() + " + " + b.str());
    ExactValue out = b;
    out.coeff_ += a.coeff_ * Rational(rn, rd);
    out.normalize();
    return out;
  }
  friend ExactValue operator-(const ExactValue& a, const ExactValue& b) { return a + (-b); }

  friend bool operator==(const ExactValue& a, const ExactValue& b) {
    if (a.sign() != b.sign()) return false;
    if (a.is_zero()) return true;
    if (a.pi_half_ != b.pi_half_) return false;
    return a.coeff_ * a.coeff_ * Rational(a.radicand_) == b.coeff_ * b.coeff_ * Rational(b.radicand_);
  }
  friend bool operator!=(const ExactValue& a, const ExactValue& b) { return !(a == b); }

  std::string str() const {
    std::ostringstream os;
    os << to_string(coeff_) << " * pi^(" << pi_half_ << "/2) * sqrt(" << radicand_.str() << ")";
    return os.str();
  }

  long double to_long_double() const {
    if (is_zero()) return 0.0L;
    const long double mag = std::exp(log_abs());
    return sign() < 0 ? -mag : mag;
  }

  long double log_abs() const {
    if (is_zero()) throw std::domain_error("log of zero");
    const long double pi = boost::math::constants::pi<long double>();
    Rational c = coeff_ < 0 ? Rational(-coeff_) : coeff_;
    return log_rational(c) + 0.5L * pi_half_ * std::log(pi) + 0.5L * log_bigint(radicand_);
  }

 private:
  // multiply the value by sqrt(m)/d
  void absorb_radicand(BigInt m, const BigInt& d) {
    BigInt root = detail::extract_square(m);
    coeff_ *= Rational(root, d);
    radicand_ *= m;
    BigInt again = detail::extract_square(radicand_);
    coeff_ *= again;
  }
  void normalize() {
    if (coeff_ == 0) {
      pi_half_ = 0;
      radicand_ = 1;
    }
  }

  Rational coeff_ = 0;
  int pi_half_ = 0;
  BigInt radicand_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const ExactValue& v) { return os << v.str(); }

inline long double log_value(const ExactValue& v) {
  if (v.sign() <= 0) throw std::domain_error("log_value of non-positive value");
  return v.log_abs();
}

// Twice-value of a half-integer rational; throws if 2x is not an integer.
inline long long twice_of(const Rational& x) {
  Rational t = 2 * x;
  if (denom(t) != 1) throw std::domain_error("argument is not a multiple of 1/2: " + to_string(x));
  return numer(t).convert_to<long long>();
}

inline ExactValue pochhammer(const Rational& a, unsigned m) {
  Rational out = 1;
  for (unsigned i = 0; i < m; ++i) {
    Rational f = a + i;
    if (f <= 0) throw std::domain_error("pochhammer: non-positive factor " + to_string(f));
    out *= f;
  }
  return ExactValue(out);
}

// Product of Gamma values at positive half-integers, stored as net exponents.
class GammaProduct {
 public:
  GammaProduct& mul(const Rational& x, int power = 1) { return add(twice_of(x), power); }
  GammaProduct& div(const Rational& x, int power = 1) { return add(twice_of(x), -power); }
  GammaProduct& mul_twice(long long t, int power = 1) { return add(t, power); }
  GammaProduct& div_twice(long long t, int power = 1) { return add(t, -power); }

  GammaProduct& operator*=(const GammaProduct& o) {
    for (auto [t, e] : o.terms_) add(t, e);
    return *this;
  }
  GammaProduct inverse() const {
    GammaProduct out;
    for (auto [t, e] : terms_) out.terms_[t] = -e;
    return out;
  }

  // arguments (as twice-values) with multiplicity
  std::vector<Rational> numerator() const { return side(+1); }
  std::vector<Rational> denominator() const { return side(-1); }
  const std::map<long long, int>& terms() const { return terms_; }

 private:
  GammaProduct& add(long long t, int e) {
    if (t <= 0) throw std::domain_error("Gamma argument must be positive");
    if (e == 0) return *this;
    int& slot = terms_[t];
    slot += e;
    if (slot == 0) terms_.erase(t);
    return *this;
  }
  std::vector<Rational> side(int s) const {
    std::vector<Rational> out;
    for (auto [t, e] : terms_)
      for (int i = 0; i < e * s; ++i) out.emplace_back(t, 2);
    return out;
  }

  std::map<long long, int> terms_;
};

inline ExactValue eval_gamma_product(const GammaProduct& p) {
  // Walk each residue class upward: Gamma(x+1) = x Gamma(x).
  // Integer args start from Gamma(1)=1, half-integer args from Gamma(1/2)=sqrt(pi).
  BigInt num = 1, den = 1;
  int pi_half = 0;
  for (int cls = 0; cls < 2; ++cls) {
    Rational running = 1;  // rational part of Gamma at current point
    long long cur = cls == 0 ? 2 : 1;  // twice-value of the class start
    for (auto [t, e] : p.terms()) {
      if ((t & 1) != (cls == 0 ? 0 : 1)) continue;
      while (cur < t) {
        running *= Rational(cur, 2);
        cur += 2;
      }
      Rational pw = 1;
      for (int i = 0; i < std::abs(e); ++i) pw *= running;
      if (e > 0) {
        num *= numer(pw);
        den *= denom(pw);
      } else {
        num *= denom(pw);
        den *= numer(pw);
      }
      if (cls == 1) pi_half += e;
    }
  }
  return ExactValue(Rational(num, den), pi_half, 1);
}

namespace detail {
// Neumaier compensated sum.
struct CompensatedSum {
  long double sum = 0, comp = 0;
  void add(long double x) {
    long double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  long double value() const { return sum + comp; }
};
}  // namespace detail

inline long double log_gamma(long double x) { return boost::math::lgamma(x); }

inline long double log_eval_gamma_product(const GammaProduct& p) {
  detail::CompensatedSum acc;
  for (auto [t, e] : p.terms()) acc.add(e * log_gamma(static_cast<long double>(t) / 2));
  return acc.value();
}

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt hyperfactorial_int(unsigned n) {
  BigInt h = 1, f = 1;
  for (unsigned j = 1; j < n; ++j) {
    f *= j;
    h *= f;
  }
  return h;
}

inline ExactValue hyperfactorial(unsigned n) { return ExactValue(Rational(hyperfactorial_int(n))); }

inline BigInt even_superfactorial_int(unsigned n) {
  BigInt e = 1, f = 1;
  for (unsigned j = 1; j <= n; ++j) {
    f *= (2 * j - 1);
    f *= (2 * j);
    e *= f;
  }
  return e;
}

inline ExactValue even_superfactorial(unsigned n) { return ExactValue(Rational(even_superfactorial_int(n))); }

inline long double log_hyperfactorial(unsigned n) {
  detail::CompensatedSum acc;
  for (unsigned j = 2; j < n; ++j) acc.add((n - j) * std::log(static_cast<long double>(j)));
  return acc.value();
}

inline BigInt pow2(unsigned long e) { return BigInt(1) << e; }

}  // namespace aztec
