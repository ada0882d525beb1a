#pragma once

/**
 * @file linalg.hpp
 * @brief Exact rank of sparse matrices by incremental row echelon reduction.
 *
 * Two arithmetic policies are provided: fraction-free integer elimination
 * (rank over Q) and arithmetic modulo a prime.
 */

#include <hilbsmooth/error.hpp>
#include <hilbsmooth/numpoly.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hilbsmooth::linalg {

template <typename T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;  // sorted by column, no zeros

namespace detail {

__extension__ typedef unsigned __int128 uint128;

/// a*x - b*y over the union of supports, dropping zeros.
template <typename T, typename Combine>
SparseRow<T> merge(const SparseRow<T>& x, const SparseRow<T>& y, Combine&& combine) {
  SparseRow<T> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  const T zero{};
  while (i < x.size() || j < y.size()) {
    std::size_t col;
    T value;
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      col = x[i].first;
      value = combine(x[i].second, zero);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      col = y[j].first;
      value = combine(zero, y[j].second);
      ++j;
    } else {
      col = x[i].first;
      value = combine(x[i].second, y[j].second);
      ++i;
      ++j;
    }
    if (value != zero) out.emplace_back(col, std::move(value));
  }
  return out;
}

}  // namespace detail

/// Fraction-free elimination over Z; the rank equals the rank over Q.
struct IntegerArithmetic {
  using value_type = Integer;

  static value_type from_int(long v) { return value_type(v); }

  /// Cancels the leading entry of row against pivot (same leading column).
  static SparseRow<value_type> eliminate(const SparseRow<value_type>& row,
                                         const SparseRow<value_type>& pivot) {
    const Integer a = pivot.front().second;
    const Integer b = row.front().second;
    return detail::merge(row, pivot, [&](const Integer& x, const Integer& y) { return a * x - b * y; });
  }

  /// Divides out the content and makes the leading entry positive.
  static void normalize(SparseRow<value_type>& row) {
    Integer g = 0;
    for (const auto& [col, v] : row) {
      g = boost::multiprecision::gcd(g, v);
      if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1) {
      for (auto& [col, v] : row) v /= g;
    }
  }
};

/// Arithmetic in Z/pZ for a prime p < 2^63.
class PrimeArithmetic {
 public:
  using value_type = std::uint64_t;

  explicit PrimeArithmetic(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw error(errc::parameter_out_of_range, std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 63)) throw error(errc::parameter_out_of_range, "prime too large");
  }

  std::uint64_t modulus() const noexcept { return p_; }

  value_type from_int(long v) const {
    const long p = static_cast<long>(p_);
    long r = v % p;
    if (r < 0) r += p;
    return static_cast<value_type>(r);
  }

  SparseRow<value_type> eliminate(const SparseRow<value_type>& row,
                                  const SparseRow<value_type>& pivot) const {
    // pivot is normalized (leading entry 1): row - b * pivot.
    const value_type b = row.front().second;
    return detail::merge(row, pivot, [&](value_type x, value_type y) { return sub(x, mul(b, y)); });
  }

  void normalize(SparseRow<value_type>& row) const {
    const value_type inv = inverse(row.front().second);
    for (auto& [col, v] : row) v = mul(v, inv);
  }

  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
      if (d > 3'000'000) break;  // fall through to Miller-Rabin for huge n
    }
    if (n < 3'000'000ULL * 3'000'000ULL) return true;
    // Deterministic Miller-Rabin for 64-bit n.
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
      d /= 2;
      ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
      std::uint64_t x = pow_mod(a % n, d, n);
      if (x == 0 || x == 1 || x == n - 1) continue;
      bool composite = true;
      for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) {
          composite = false;
          break;
        }
      }
      if (composite) return false;
    }
    return true;
  }

 private:
  static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<detail::uint128>(a) * b % n);
  }
  static std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1;
    while (e > 0) {
      if (e & 1) r = mul_mod(r, a, n);
      a = mul_mod(a, a, n);
      e >>= 1;
    }
    return r;
  }

  value_type mul(value_type a, value_type b) const { return mul_mod(a, b, p_); }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p_ - b); }
  value_type inverse(value_type a) const { return pow_mod(a, p_ - 2, p_); }

  std::uint64_t p_;
};

/// Accumulates rows one at a time and tracks the rank of their span.
template <typename Arithmetic>
class RowEchelon {
 public:
  using value_type = typename Arithmetic::value_type;
  using Row = SparseRow<value_type>;

  RowEchelon(std::size_t columns, Arithmetic arith = Arithmetic{})
      : arith_(std::move(arith)), pivots_(columns), has_pivot_(columns, false) {}

  /// Reduces row against the current pivots; returns true if it increased the rank.
  bool insert(Row row) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      if (lead >= pivots_.size()) throw error(errc::index_out_of_range, "column out of range");
      if (!has_pivot_[lead]) {
        arith_.normalize(row);
        pivots_[lead] = std::move(row);
        has_pivot_[lead] = true;
        ++rank_;
        return true;
      }
      row = arith_.eliminate(row, pivots_[lead]);
    }
    return false;
  }

  std::size_t rank() const noexcept { return rank_; }
  std::size_t columns() const noexcept { return pivots_.size(); }

 private:
  Arithmetic arith_;
  std::vector<Row> pivots_;
  std::vector<bool> has_pivot_;
  std::size_t rank_ = 0;
};

}  // namespace hilbsmooth::linalg
