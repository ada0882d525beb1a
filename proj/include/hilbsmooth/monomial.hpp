#pragma once

/**
 * @file monomial.hpp
 * @brief Monomials and monomial ideals in R = k[x_0, ..., x_m].
 *
 * Everything here is naive on purpose: Hilbert functions are counted by
 * enumerating standard monomials, and ideal equality is equality of the
 * canonical (minimal, lex-descending) generator list.  This layer is the
 * reference the rest of the library is checked against.
 */

#include <hilbsmooth/error.hpp>
#include <hilbsmooth/numpoly.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hilbsmooth {

class Monomial {
 public:
  Monomial() = default;

  /// The unit monomial in nvars variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

  explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_) {
      if (e < 0) throw error(errc::parameter_out_of_range, "negative exponent");
    }
  }

  /// x_i^power in nvars variables.
  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1) {
    if (i >= nvars) throw error(errc::index_out_of_range, "variable index out of range");
    Monomial mu(nvars);
    mu.exps_[i] = power;
    return mu;
  }

  std::size_t nvars() const noexcept { return exps_.size(); }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  int operator[](std::size_t i) const { return exps_[i]; }

  int degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0); }
  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    check_same(other);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] += b.exps_[i];
    return out;
  }

  /// a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw error(errc::parameter_out_of_range, "inexact monomial division");
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] -= b.exps_[i];
    return out;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return out;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    Monomial out = a;
    for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return out;
  }

  /// Lexicographic comparison of exponent vectors: x_0 is the largest variable.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void check_same(const Monomial& other) const {
    if (other.exps_.size() != exps_.size()) {
      throw error(errc::length_mismatch, "monomials in different numbers of variables");
    }
  }

  std::vector<int> exps_;
};

/// A monomial ideal held by its canonical generating set: no generator divides
/// another, and generators are sorted in descending lexicographic order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  /// The zero ideal of k[x_0..x_{nvars-1}].
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}

  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    for (const auto& g : gens) {
      if (g.nvars() != nvars) {
        throw error(errc::length_mismatch, "generator has " + std::to_string(g.nvars()) +
                                               " exponents, expected " + std::to_string(nvars));
      }
    }
    // Sorting by degree first guarantees that every divisor of g precedes g.
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      const int da = a.degree(), db = b.degree();
      return da != db ? da < db : a > b;
    });
    for (auto& g : gens) {
      const bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                         [&](const Monomial& h) { return h.divides(g); });
      if (!redundant) gens_.push_back(std::move(g));
    }
    std::sort(gens_.begin(), gens_.end(), std::greater<>());
  }

  static MonomialIdeal unit(std::size_t nvars) { return MonomialIdeal(nvars, {Monomial(nvars)}); }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& gens() const& noexcept { return gens_; }
  // By value on temporaries so range-for over a returned ideal stays valid.
  std::vector<Monomial> gens() && { return std::move(gens_); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& mu) const {
    if (mu.nvars() != nvars_) throw error(errc::length_mismatch, "monomial/ideal variable count");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(mu); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t nvars) {
  return MonomialIdeal(nvars, std::move(gens));
}

inline bool contains(const MonomialIdeal& ideal, const Monomial& mu) { return ideal.contains(mu); }

namespace detail {
inline void check_same(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw error(errc::length_mismatch, "ideals in different rings");
}
}  // namespace detail

inline MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::check_same(a, b);
  auto gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.nvars(), std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::check_same(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& f : a.gens()) {
    for (const auto& g : b.gens()) gens.push_back(lcm(f, g));
  }
  return MonomialIdeal(a.nvars(), std::move(gens));
}

/// (I : mu), generated by g / gcd(g, mu).
inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& mu) {
  if (mu.nvars() != ideal.nvars()) throw error(errc::length_mismatch, "monomial/ideal variable count");
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(g / gcd(g, mu));
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

/// (I : J) = intersection of (I : mu) over the generators mu of J.
inline MonomialIdeal colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::check_same(a, b);
  if (b.is_zero()) return MonomialIdeal::unit(a.nvars());
  MonomialIdeal out = colon(a, b.gens().front());
  for (std::size_t i = 1; i < b.gens().size(); ++i) out = intersect(out, colon(a, b.gens()[i]));
  return out;
}

/// (I : x_v^infinity).
inline MonomialIdeal saturate(const MonomialIdeal& ideal, std::size_t v) {
  if (v >= ideal.nvars()) throw error(errc::index_out_of_range, "saturation variable out of range");
  const Monomial xv = Monomial::variable(ideal.nvars(), v);
  MonomialIdeal current = ideal;
  while (true) {
    MonomialIdeal next = colon(current, xv);
    if (next == current) return current;
    current = std::move(next);
  }
}

/// Strong stability: x_i * g / x_j is in I whenever x_j divides a generator g and i < j.
inline bool is_strongly_stable(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.gens()) {
    for (std::size_t j = 1; j < ideal.nvars(); ++j) {
      if (g[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        auto e = g.exponents();
        --e[j];
        ++e[i];
        if (!ideal.contains(Monomial(std::move(e)))) return false;
      }
    }
  }
  return true;
}

/// Calls fn on every monomial of the given degree, in descending lex order.
template <typename Fn>
void for_each_monomial(std::size_t nvars, int degree, Fn&& fn) {
  if (degree < 0 || nvars == 0) return;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == nvars) {
      e[i] = remaining;
      fn(Monomial(e));
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, remaining - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
}

inline std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal, int degree) {
  std::vector<Monomial> out;
  for_each_monomial(ideal.nvars(), degree, [&](Monomial mu) {
    if (!ideal.contains(mu)) out.push_back(std::move(mu));
  });
  return out;
}

/// h_{R/I}(j); zero for j < 0.
inline long hilbert_function(const MonomialIdeal& ideal, int degree) {
  long count = 0;
  for_each_monomial(ideal.nvars(), degree, [&](const Monomial& mu) {
    if (!ideal.contains(mu)) ++count;
  });
  return count;
}

/// Interpolates h_{R/I} at degrees hint .. hint + m + 1 and checks the result
/// at the next two degrees.  Throws not_yet_polynomial when the check fails,
/// which means the hint is below the degree where h becomes polynomial.
inline NumericalPolynomial hilbert_polynomial_of_ideal(const MonomialIdeal& ideal, int hint) {
  if (hint < 0) throw error(errc::parameter_out_of_range, "regularity hint must be nonnegative");
  if (ideal.nvars() == 0) throw error(errc::parameter_out_of_range, "ideal has no variables");
  const int m = static_cast<int>(ideal.nvars()) - 1;
  std::vector<Rational> values;
  for (int j = hint; j <= hint + m + 1; ++j) values.emplace_back(hilbert_function(ideal, j));
  auto p = NumericalPolynomial::interpolate(hint, std::move(values));
  for (int j = hint + m + 2; j <= hint + m + 3; ++j) {
    if (p(Integer(j)) != hilbert_function(ideal, j)) {
      throw error(errc::not_yet_polynomial,
                  "Hilbert function is not yet polynomial from degree " + std::to_string(hint));
    }
  }
  return p;
}

/// hilbert_polynomial_of_ideal, raising the hint until the check passes.
inline NumericalPolynomial stable_hilbert_polynomial(const MonomialIdeal& ideal, int hint,
                                                     int max_hint = 64) {
  for (int h = std::max(hint, 0);; ++h) {
    try {
      return hilbert_polynomial_of_ideal(ideal, h);
    } catch (const error& e) {
      if (e.code() != errc::not_yet_polynomial || h >= max_hint) throw;
    }
  }
}

// ---------------------------------------------------------------------------
// Text forms

/// Product form "x0^2*x3"; "1" for the unit monomial.
inline std::string to_string(const Monomial& mu) {
  std::string out;
  for (std::size_t i = 0; i < mu.nvars(); ++i) {
    if (mu[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i);
    if (mu[i] > 1) out += "^" + std::to_string(mu[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string to_string(const MonomialIdeal& ideal) {
  std::string out = "<";
  for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(ideal.gens()[i]);
  }
  return out + ">";
}

/// Parses "x0^2*x3" (or "1") in nvars variables.
inline Monomial parse_monomial_product(std::string_view text, std::size_t nvars) {
  std::vector<int> e(nvars, 0);
  std::string src;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) src += c;
  }
  if (src == "1") return Monomial(std::move(e));
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw error(errc::parse_error, "monomial '" + src + "': " + why);
  };
  auto number = [&]() {
    const std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (start == pos || pos - start > 9) fail("expected a number");
    return std::stoi(src.substr(start, pos - start));
  };
  if (src.empty()) fail("empty");
  while (true) {
    if (pos >= src.size() || src[pos] != 'x') fail("expected 'x'");
    ++pos;
    const int var = number();
    if (var < 0 || static_cast<std::size_t>(var) >= nvars) {
      throw error(errc::index_out_of_range, "variable x" + std::to_string(var) + " out of range");
    }
    int power = 1;
    if (pos < src.size() && src[pos] == '^') {
      ++pos;
      power = number();
    }
    e[static_cast<std::size_t>(var)] += power;
    if (pos == src.size()) break;
    if (src[pos] != '*') fail("expected '*'");
    ++pos;
  }
  return Monomial(std::move(e));
}

/// Reads the ideal file format: a `vars N` header, then one generator per
/// line as N exponents or a product such as `x0^2*x3`.  Blank lines and lines
/// starting with `#` are skipped.
inline MonomialIdeal read_ideal(std::istream& in) {
  std::string line;
  std::size_t nvars = 0;
  bool have_header = false;
  std::vector<Monomial> gens;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string keyword;
      long n = -1;
      std::string trailing;
      if (!(ls >> keyword >> n) || keyword != "vars" || n < 1 || (ls >> trailing)) {
        throw error(errc::parse_error, "ideal file must start with 'vars N'");
      }
      nvars = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    const bool numeric = std::all_of(tokens.begin(), tokens.end(), [](const std::string& t) {
      return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    });
    if (numeric && tokens.size() == nvars) {
      std::vector<int> e;
      for (const auto& t : tokens) {
        if (t.size() > 9) throw error(errc::parse_error, "exponent too large: " + t);
        e.push_back(std::stoi(t));
      }
      gens.emplace_back(std::move(e));
    } else if (numeric && tokens.size() > 1) {
      throw error(errc::length_mismatch, "generator line '" + line + "' has " +
                                             std::to_string(tokens.size()) + " exponents, expected " +
                                             std::to_string(nvars));
    } else {
      gens.push_back(parse_monomial_product(line, nvars));
    }
  }
  if (!have_header) throw error(errc::parse_error, "ideal file has no 'vars N' header");
  return MonomialIdeal(nvars, std::move(gens));
}

inline MonomialIdeal read_ideal(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_ideal(in);
}

/// Writes the canonical exponent-vector form of the ideal file format.
inline void write_ideal(std::ostream& out, const MonomialIdeal& ideal) {
  out << "vars " << ideal.nvars() << '\n';
  for (const auto& g : ideal.gens()) {
    for (std::size_t i = 0; i < g.nvars(); ++i) {
      if (i > 0) out << ' ';
      out << g[i];
    }
    out << '\n';
  }
}

inline std::string format_ideal_file(const MonomialIdeal& ideal) {
  std::ostringstream out;
  write_ideal(out, ideal);
  return out.str();
}

}  // namespace hilbsmooth
