#pragma once

/**
 * @file lex.hpp
 * @brief The named monomial ideals: lexicographic ideals L(lambda), their
 * irreducible components, residual chains, nearly lexicographic ideals, and
 * the singular witnesses.
 *
 * Variables follow the convention x_0 > x_1 > ... > x_m; all ideals live in
 * m + 1 variables.
 */

#include <hilbsmooth/error.hpp>
#include <hilbsmooth/monomial.hpp>
#include <hilbsmooth/partition.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace hilbsmooth {

namespace detail {

inline void check_lex_args(const Partition& lambda, int m) {
  if (m < 1) throw error(errc::invalid_ambient, "ambient dimension must be at least 1");
  if (lambda.largest() > m) {
    throw error(errc::partition_too_large, "lambda_1 = " + std::to_string(lambda.largest()) +
                                               " exceeds m = " + std::to_string(m));
  }
}

inline std::size_t nv(int m) { return static_cast<std::size_t>(m) + 1; }

}  // namespace detail

/// L(lambda) in k[x_0..x_m], generated by
///   x_0^{a_m+1}, x_0^{a_m} x_1^{a_{m-1}+1}, ..., x_0^{a_m}...x_{m-3}^{a_3} x_{m-2}^{a_2+1},
///   x_0^{a_m} ... x_{m-2}^{a_2} x_{m-1}^{a_1},
/// where a_j counts the parts equal to j.  The empty partition gives the unit ideal.
inline MonomialIdeal lex_ideal(const Partition& lambda, int m) {
  detail::check_lex_args(lambda, m);
  const std::size_t n = detail::nv(m);
  // prefix[l] = a_{m-l}, the exponent of x_l in the common prefix.
  std::vector<int> prefix(n, 0);
  for (int l = 0; l < m; ++l) prefix[static_cast<std::size_t>(l)] = lambda.multiplicity(m - l);

  std::vector<Monomial> gens;
  for (int k = 0; k <= m - 2; ++k) {
    std::vector<int> e(n, 0);
    for (int l = 0; l < k; ++l) e[static_cast<std::size_t>(l)] = prefix[static_cast<std::size_t>(l)];
    e[static_cast<std::size_t>(k)] = prefix[static_cast<std::size_t>(k)] + 1;
    gens.emplace_back(std::move(e));
  }
  std::vector<int> last(n, 0);
  for (int l = 0; l <= m - 1; ++l) last[static_cast<std::size_t>(l)] = prefix[static_cast<std::size_t>(l)];
  gens.emplace_back(std::move(last));
  return MonomialIdeal(n, std::move(gens));
}

/// The irredundant irreducible decomposition of L(lambda): for each i with
/// a_i != 0 (largest i first) the ideal
///   < x_0^{a_m+1}, x_1^{a_{m-1}+1}, ..., x_{m-i-1}^{a_{i+1}+1}, x_{m-i}^{a_i} >.
inline std::vector<MonomialIdeal> irreducible_components(const Partition& lambda, int m) {
  detail::check_lex_args(lambda, m);
  const std::size_t n = detail::nv(m);
  std::vector<MonomialIdeal> out;
  for (int i = m; i >= 1; --i) {
    const int ai = lambda.multiplicity(i);
    if (ai == 0) continue;
    std::vector<Monomial> gens;
    for (int l = 0; l <= m - i - 1; ++l) {
      gens.push_back(Monomial::variable(n, static_cast<std::size_t>(l), lambda.multiplicity(m - l) + 1));
    }
    gens.push_back(Monomial::variable(n, static_cast<std::size_t>(m - i), ai));
    out.emplace_back(n, std::move(gens));
  }
  return out;
}

/// [I_1, ..., I_e] with I_i = L(n_i^{d_i}, ..., n_e^{d_e}); I_1 is contained in I_2, etc.
inline std::vector<MonomialIdeal> residual_chain(const ResidualType& rt, int m) {
  std::vector<MonomialIdeal> out;
  for (std::size_t i = 0; i < rt.size(); ++i) {
    const ResidualType tail(std::vector<ResidualPair>(rt.pairs().begin() + static_cast<long>(i),
                                                      rt.pairs().end()));
    out.push_back(lex_ideal(partition_of_type(tail), m));
  }
  return out;
}

/// K = L(lambda) ∩ J with
///   J = < x_0, ..., x_{m-lambda_1-2}, x_{m-lambda_1-1}^2, x_{m-lambda_1}, ..., x_{m-1} >.
/// K defines the lexicographic scheme with an extra embedded point.
inline MonomialIdeal nearly_lex_ideal(const Partition& lambda, int m) {
  if (lambda.empty()) throw error(errc::empty_partition, "nearly lexicographic ideal needs r >= 1");
  if (m <= lambda.largest()) {
    throw error(errc::ambient_too_small, "need m > lambda_1, got m = " + std::to_string(m) +
                                             ", lambda_1 = " + std::to_string(lambda.largest()));
  }
  const std::size_t n = detail::nv(m);
  const int doubled = m - lambda.largest() - 1;
  std::vector<Monomial> jgens;
  for (int l = 0; l <= m - 1; ++l) {
    jgens.push_back(Monomial::variable(n, static_cast<std::size_t>(l), l == doubled ? 2 : 1));
  }
  return intersect(lex_ideal(lambda, m), MonomialIdeal(n, std::move(jgens)));
}

/// K = x_0 <x_0, ..., x_{m-1}> + x_1^{r-s-1} <x_1, ..., x_{n-1}, x_n^{s+1}>,
/// for r - 2 >= s >= 0 and m - 2 >= n >= 2.
inline MonomialIdeal lsing_witness(int m, int n, int r, int s) {
  if (!(s >= 0 && r - 2 >= s && n >= 2 && m - 2 >= n)) {
    throw error(errc::parameter_out_of_range,
                "need r-2 >= s >= 0 and m-2 >= n >= 2 (m=" + std::to_string(m) + ", n=" +
                    std::to_string(n) + ", r=" + std::to_string(r) + ", s=" + std::to_string(s) + ")");
  }
  const std::size_t nvars = detail::nv(m);
  const Monomial x0 = Monomial::variable(nvars, 0);
  const Monomial x1pow = Monomial::variable(nvars, 1, r - s - 1);
  std::vector<Monomial> gens;
  for (int l = 0; l <= m - 1; ++l) gens.push_back(x0 * Monomial::variable(nvars, static_cast<std::size_t>(l)));
  for (int l = 1; l <= n - 1; ++l) gens.push_back(x1pow * Monomial::variable(nvars, static_cast<std::size_t>(l)));
  gens.push_back(x1pow * Monomial::variable(nvars, static_cast<std::size_t>(n), s + 1));
  return MonomialIdeal(nvars, std::move(gens));
}

/// B(s) = < x_0, ..., x_{m-4}, x_{m-3}^2, x_{m-3}x_{m-2}, x_{m-3}x_{m-1},
///          x_{m-2}^2, x_{m-2}x_{m-1}, x_{m-1}^{s+2} >, with Hilbert polynomial s + 4.
inline MonomialIdeal four_points_ideal(int m, int s) {
  if (m < 3 || s < 0) {
    throw error(errc::parameter_out_of_range, "need m >= 3 and s >= 0 (m=" + std::to_string(m) +
                                                  ", s=" + std::to_string(s) + ")");
  }
  const std::size_t n = detail::nv(m);
  auto x = [n](int i, int power = 1) { return Monomial::variable(n, static_cast<std::size_t>(i), power); };
  std::vector<Monomial> gens;
  for (int l = 0; l <= m - 4; ++l) gens.push_back(x(l));
  gens.push_back(x(m - 3, 2));
  gens.push_back(x(m - 3) * x(m - 2));
  gens.push_back(x(m - 3) * x(m - 1));
  gens.push_back(x(m - 2, 2));
  gens.push_back(x(m - 2) * x(m - 1));
  gens.push_back(x(m - 1, s + 2));
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace hilbsmooth
