#pragma once

/**
 * @file partition.hpp
 * @brief Integer partitions, residual types, and their Hilbert polynomials.
 *
 * A partition lambda = (lambda_1 >= ... >= lambda_r >= 1) encodes the Hilbert
 * polynomial
 *
 *     p(t) = sum_{i=1}^{r} C(t + lambda_i - i, lambda_i - 1),
 *
 * and its grouped form (n_1^{d_1}, ..., n_e^{d_e}) is the residual type
 * (n, d) = (n_1, d_1), ..., (n_e, d_e).
 */

#include <hilbsmooth/error.hpp>
#include <hilbsmooth/numpoly.hpp>

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hilbsmooth {

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) {
        throw error(errc::invalid_partition, "parts must be positive");
      }
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw error(errc::invalid_partition, "parts must be weakly decreasing");
      }
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// lambda_1; zero for the empty partition.
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  /// lambda_r; zero for the empty partition.
  int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }

  /// 1-based access lambda_i, matching the usual notation.
  int operator()(std::size_t i) const { return parts_.at(i - 1); }

  /// a_j: the number of parts equal to j.
  int multiplicity(int j) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
  }

  std::size_t distinct_values() const {
    return std::set<int>(parts_.begin(), parts_.end()).size();
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct ResidualPair {
  int n;  // plane dimension
  int d;  // hypersurface degree
  friend bool operator==(const ResidualPair&, const ResidualPair&) = default;
};

class ResidualType {
 public:
  ResidualType() = default;

  explicit ResidualType(std::vector<ResidualPair> pairs) : pairs_(std::move(pairs)) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (pairs_[i].n < 1 || pairs_[i].d < 1) {
        throw error(errc::invalid_partition, "residual type entries must be positive");
      }
      if (i > 0 && pairs_[i].n >= pairs_[i - 1].n) {
        throw error(errc::invalid_partition, "plane dimensions must strictly decrease");
      }
    }
  }

  const std::vector<ResidualPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const ResidualPair& operator[](std::size_t i) const { return pairs_.at(i); }

  friend bool operator==(const ResidualType&, const ResidualType&) = default;

 private:
  std::vector<ResidualPair> pairs_;
};

inline Partition partition_of_type(const ResidualType& rt) {
  std::vector<int> parts;
  for (const auto& [n, d] : rt.pairs()) parts.insert(parts.end(), static_cast<std::size_t>(d), n);
  return Partition(std::move(parts));
}

inline ResidualType type_of_partition(const Partition& lambda) {
  if (lambda.empty()) throw error(errc::empty_partition, "type of the empty partition");
  std::vector<ResidualPair> pairs;
  for (int part : lambda.parts()) {
    if (!pairs.empty() && pairs.back().n == part) {
      ++pairs.back().d;
    } else {
      pairs.push_back({part, 1});
    }
  }
  return ResidualType(std::move(pairs));
}

inline NumericalPolynomial hilbert_polynomial(const Partition& lambda) {
  NumericalPolynomial p;
  for (std::size_t i = 1; i <= lambda.length(); ++i) {
    const long part = lambda(i);
    p += binom_poly(part - static_cast<long>(i), part - 1);
  }
  return p;
}

/// Upper bound on the number of parts partition_of_polynomial will emit.
inline constexpr long max_partition_length = 1'000'000;

/// Inverts hilbert_polynomial by peeling off leading terms: the top-degree
/// terms of p all come from parts equal to lambda_1 = deg p + 1, and their
/// number is (deg p)! times the leading coefficient.
inline Partition partition_of_polynomial(const NumericalPolynomial& p) {
  std::vector<int> parts;
  NumericalPolynomial rest = p;
  while (!rest.is_zero()) {
    const auto [c, lead] = leading(rest);
    const Rational scaled = lead * Rational(factorial(c));
    if (!is_integral(scaled) || scaled <= 0) {
      throw error(errc::not_hilbert, to_string(p) + " has no partition representation");
    }
    const Integer count = boost::multiprecision::numerator(scaled);
    if (count + static_cast<long>(parts.size()) > max_partition_length) {
      throw error(errc::parameter_out_of_range, "partition of " + to_string(p) + " is too long");
    }
    const int part = static_cast<int>(c) + 1;
    if (!parts.empty() && part >= parts.back()) {
      throw error(errc::not_hilbert, to_string(p) + " has no partition representation");
    }
    for (long k = 0; k < static_cast<long>(count); ++k) {
      parts.push_back(part);
      const long i = static_cast<long>(parts.size());
      rest -= binom_poly(part - i, part - 1);
    }
    if (!rest.is_zero() && rest.degree() >= c) {
      throw error(errc::not_hilbert, to_string(p) + " has no partition representation");
    }
  }
  return Partition(std::move(parts));
}

struct PartitionInvariants {
  long dimension;
  long degree;
  Integer genus;
  long gotzmann_bound;
};

inline PartitionInvariants invariants(const Partition& lambda) {
  if (lambda.empty()) throw error(errc::empty_partition, "invariants of the empty partition");
  Integer sum = 0;
  for (std::size_t i = 2; i <= lambda.length(); ++i) {
    const long part = lambda(i);
    sum += binomial(Integer(part - static_cast<long>(i)), part - 1);
  }
  const long dim = lambda.largest() - 1;
  return {dim, lambda.multiplicity(lambda.largest()), dim % 2 == 0 ? sum : Integer(-sum),
          static_cast<long>(lambda.length())};
}

struct HypersurfaceSplit {
  int s;           // number of leading parts equal to m
  Partition rest;  // lambda with those parts removed
};

/// Splits off the leading parts equal to m, so that
/// hilbert_polynomial(lambda) = hilbert_polynomial((m^s)) + shift(hilbert_polynomial(rest), s).
inline HypersurfaceSplit split_hypersurface(const Partition& lambda, int m) {
  if (m < 1) throw error(errc::invalid_ambient, "ambient dimension must be at least 1");
  const auto& parts = lambda.parts();
  const auto first_other = std::find_if(parts.begin(), parts.end(), [m](int x) { return x != m; });
  return {static_cast<int>(first_other - parts.begin()),
          Partition(std::vector<int>(first_other, parts.end()))};
}

inline Partition union_one(const Partition& lambda) {
  auto parts = lambda.parts();
  parts.push_back(1);
  return Partition(std::move(parts));
}

/// lambda with its last part removed when that part equals 1.
inline Partition drop_trailing_one(const Partition& lambda) {
  auto parts = lambda.parts();
  if (!parts.empty() && parts.back() == 1) parts.pop_back();
  return Partition(std::move(parts));
}

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline int parse_positive(const std::string& token, std::string_view what) {
  if (token.empty() || token.size() > 9 ||
      !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw error(errc::parse_error, "bad " + std::string(what) + " '" + token + "'");
  }
  return std::stoi(token);
}

}  // namespace detail

/// Comma-separated parts, e.g. "3,3,2,1".  The empty string is the empty partition.
inline Partition parse_partition(std::string_view text) {
  const auto tokens = detail::split(text, ',');
  if (tokens.size() == 1 && tokens.front().empty()) return {};
  std::vector<int> parts;
  for (const auto& t : tokens) parts.push_back(detail::parse_positive(t, "partition part"));
  return Partition(std::move(parts));
}

/// Residual type syntax "3:2,2:4" for (n, d) = (3, 2), (2, 4).
inline ResidualType parse_residual_type(std::string_view text) {
  std::vector<ResidualPair> pairs;
  for (const auto& item : detail::split(text, ',')) {
    const auto fields = detail::split(item, ':');
    if (fields.size() != 2) {
      throw error(errc::parse_error, "residual type entry '" + item + "' is not n:d");
    }
    pairs.push_back({detail::parse_positive(fields[0], "plane dimension"),
                     detail::parse_positive(fields[1], "degree")});
  }
  return ResidualType(std::move(pairs));
}

inline std::string to_string(const Partition& lambda) {
  std::string out;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(lambda.parts()[i]);
  }
  return out;
}

inline std::string to_string(const ResidualType& rt) {
  std::string out;
  for (std::size_t i = 0; i < rt.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(rt[i].n) + ":" + std::to_string(rt[i].d);
  }
  return out;
}

}  // namespace hilbsmooth
