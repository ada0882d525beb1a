#pragma once

/**
 * @file numpoly.hpp
 * @brief Numerical (integer-valued) polynomials with exact rational coefficients.
 *
 * A NumericalPolynomial is stored in the binomial basis
 *
 *     p(t) = c_0 C(t,0) + c_1 C(t,1) + ... + c_d C(t,d),
 *
 * where C(t,k) = t(t-1)...(t-k+1)/k!.  In this basis p takes integer values on
 * the integers exactly when every c_k is an integer, and the Newton forward
 * differences of p at 0 are the coefficients themselves.
 */

#include <hilbsmooth/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hilbsmooth {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline std::string to_string(const Rational& q) { return q.str(); }

/// Generalized binomial coefficient C(n, k) = n(n-1)...(n-k+1)/k! for any
/// integer n; zero when k < 0.  C(-1, 2) = 1, C(-1, 0) = 1.
inline Integer binomial(const Integer& n, long k) {
  if (k < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

inline Integer factorial(long n) {
  Integer f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

class NumericalPolynomial {
 public:
  NumericalPolynomial() = default;

  /// Builds p from binomial-basis coefficients c_0..c_d; trailing zeros dropped.
  explicit NumericalPolynomial(std::vector<Rational> binomial_coeffs)
      : coeffs_(std::move(binomial_coeffs)) {
    trim();
  }

  static NumericalPolynomial constant(const Rational& c) {
    return NumericalPolynomial(std::vector<Rational>{c});
  }

  /// Builds p from power-basis coefficients a_0..a_d (p = sum a_k t^k).
  static NumericalPolynomial from_power_basis(const std::vector<Rational>& power) {
    // The binomial coefficients are the forward differences at t = 0.
    std::vector<Rational> values(power.size());
    for (std::size_t j = 0; j < power.size(); ++j) {
      values[j] = eval_power(power, Rational(static_cast<long>(j)));
    }
    return NumericalPolynomial(forward_differences(std::move(values)));
  }

  /// Interpolates the unique polynomial of degree < values.size() with
  /// p(start + j) = values[j].
  static NumericalPolynomial interpolate(long start, std::vector<Rational> values) {
    NumericalPolynomial at_zero(forward_differences(std::move(values)));
    return at_zero.shifted(start);
  }

  const std::vector<Rational>& binomial_coeffs() const noexcept { return coeffs_; }

  /// Power-basis coefficients a_0..a_d.
  std::vector<Rational> power_coeffs() const {
    std::vector<Rational> out(coeffs_.size());
    // falling[k] holds the power coefficients of t(t-1)...(t-k+1).
    std::vector<Integer> falling{1};
    Integer kfact = 1;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k > 0) {
        kfact *= static_cast<long>(k);
        std::vector<Integer> next(falling.size() + 1, 0);
        const long shift = static_cast<long>(k) - 1;
        for (std::size_t i = 0; i < falling.size(); ++i) {
          next[i + 1] += falling[i];
          next[i] -= falling[i] * shift;
        }
        falling = std::move(next);
      }
      if (coeffs_[k] == 0) continue;
      for (std::size_t i = 0; i < falling.size(); ++i) {
        out[i] += coeffs_[k] * Rational(falling[i], kfact);
      }
    }
    return out;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  /// True iff p(Z) is contained in Z.
  bool is_numerical() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return is_integral(c); });
  }

  Rational operator()(const Integer& t) const {
    Rational value = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] != 0) value += coeffs_[k] * binomial(t, static_cast<long>(k));
    }
    return value;
  }

  /// q(t) = p(t - s).
  NumericalPolynomial shifted(long s) const {
    if (is_zero() || s == 0) return *this;
    std::vector<Rational> values(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      values[j] = (*this)(Integer(static_cast<long>(j) - s));
    }
    return NumericalPolynomial(forward_differences(std::move(values)));
  }

  NumericalPolynomial& operator+=(const NumericalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }

  NumericalPolynomial& operator-=(const NumericalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }

  friend NumericalPolynomial operator+(NumericalPolynomial a, const NumericalPolynomial& b) {
    return a += b;
  }
  friend NumericalPolynomial operator-(NumericalPolynomial a, const NumericalPolynomial& b) {
    return a -= b;
  }
  friend NumericalPolynomial operator-(NumericalPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend bool operator==(const NumericalPolynomial&, const NumericalPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  static Rational eval_power(const std::vector<Rational>& power, const Rational& t) {
    Rational value = 0;
    for (auto it = power.rbegin(); it != power.rend(); ++it) value = value * t + *it;
    return value;
  }

  static std::vector<Rational> forward_differences(std::vector<Rational> values) {
    // In place: after pass k, values[k] = Δ^k f(0).
    for (std::size_t k = 1; k < values.size(); ++k) {
      for (std::size_t j = values.size() - 1; j >= k; --j) {
        values[j] -= values[j - 1];
      }
    }
    return values;
  }

  std::vector<Rational> coeffs_;
};

/// C(t + a, b) as a polynomial in t; zero when b < 0.
inline NumericalPolynomial binom_poly(long a, long b) {
  if (b < 0) return {};
  // Vandermonde: C(t + a, b) = sum_k C(a, b - k) C(t, k).
  std::vector<Rational> coeffs(static_cast<std::size_t>(b) + 1);
  for (long k = 0; k <= b; ++k) coeffs[static_cast<std::size_t>(k)] = Rational(binomial(a, b - k));
  return NumericalPolynomial(std::move(coeffs));
}

inline NumericalPolynomial add(const NumericalPolynomial& p, const NumericalPolynomial& q) {
  return p + q;
}

inline NumericalPolynomial sub(const NumericalPolynomial& p, const NumericalPolynomial& q) {
  return p - q;
}

/// shift(p, s)(t) = p(t - s).
inline NumericalPolynomial shift(const NumericalPolynomial& p, long s) { return p.shifted(s); }

inline Rational eval(const NumericalPolynomial& p, const Integer& t0) { return p(t0); }

struct LeadingTerm {
  long degree;
  Rational coeff;  // power-basis leading coefficient
};

inline LeadingTerm leading(const NumericalPolynomial& p) {
  if (p.is_zero()) throw error(errc::zero_polynomial, "leading term of the zero polynomial");
  const long d = p.degree();
  return {d, p.binomial_coeffs().back() / Rational(factorial(d))};
}

/// Human-readable power-basis form, e.g. "(1/2)t^2+(3/2)t+1".  Parses back
/// through parse_polynomial.
inline std::string to_string(const NumericalPolynomial& p) {
  if (p.is_zero()) return "0";
  const auto power = p.power_coeffs();
  std::string out;
  for (long k = static_cast<long>(power.size()) - 1; k >= 0; --k) {
    Rational c = power[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const bool integral = is_integral(c);
    if (k == 0) {
      out += integral ? c.str() : "(" + c.str() + ")";
      continue;
    }
    if (c != 1) out += integral ? c.str() : "(" + c.str() + ")";
    out += 't';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

/// Exact power-basis coefficients a_0..a_d as strings ("3", "-1/2").
inline std::vector<std::string> serialize_power_coeffs(const NumericalPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.power_coeffs()) out.push_back(c.str());
  return out;
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) src_ += ch;
    }
  }

  NumericalPolynomial parse() {
    if (src_.empty()) fail("empty polynomial");
    std::vector<Rational> power;
    bool first = true;
    while (pos_ < src_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coeff, exponent] = term();
      if (negative) coeff = -coeff;
      if (power.size() <= exponent) power.resize(exponent + 1);
      power[exponent] += coeff;
    }
    return NumericalPolynomial::from_power_basis(power);
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw error(errc::parse_error,
                "polynomial '" + src_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(src_.substr(start, pos_ - start));
  }

  Rational rational() {
    Integer num = integer();
    if (peek() != '/') return Rational(num);
    ++pos_;
    Integer den = integer();
    if (den == 0) fail("zero denominator");
    return Rational(num, den);
  }

  std::pair<Rational, std::size_t> term() {
    Rational coeff = 1;
    bool have_coeff = false;
    if (peek() == '(') {
      ++pos_;
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
      }
      coeff = rational();
      if (negative) coeff = -coeff;
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      have_coeff = true;
    }
    if (peek() == '*') {
      if (!have_coeff) fail("'*' without a coefficient");
      ++pos_;
      if (peek() != 't') fail("expected 't' after '*'");
    }
    if (peek() != 't') {
      if (!have_coeff) fail("expected a coefficient or 't'");
      return {coeff, 0};
    }
    ++pos_;
    std::size_t exponent = 1;
    if (peek() == '^') {
      ++pos_;
      const Integer e = integer();
      if (e > 1000) fail("exponent too large");
      exponent = static_cast<std::size_t>(e);
    }
    return {coeff, exponent};
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses sums of terms `R`, `R*t`, `R*t^K` (the `*` is optional, `R` is an
/// integer or `a/b`, optionally parenthesised).  Whitespace is ignored.
inline NumericalPolynomial parse_polynomial(std::string_view text) {
  return detail::PolyParser(text).parse();
}

}  // namespace hilbsmooth
