#pragma once

/**
 * @file classify.hpp
 * @brief Smoothness classification of Hilb^p(P^m), dimension formulas, and
 * singular-witness dispatch.
 *
 * With p encoded by a partition lambda, the Hilbert scheme is smooth exactly
 * when one of seven patterns holds:
 *
 *   (1) m = 2
 *   (2) lambda_r >= 2
 *   (3) lambda = (1) or lambda = (m^{r-2}, lambda_{r-1}, 1), m >= lambda_{r-1} >= 1
 *   (4) lambda = (m^{r-s-3}, c^{s+2}, 1), r-3 >= s >= 0, m-1 >= c >= 3
 *   (5) lambda = (m^{r-s-5}, 2^{s+4}, 1), r-5 >= s >= 0
 *   (6) lambda = (m^{r-3}, 1^3), r >= 3
 *   (7) lambda = (m+1) or r = 0
 *
 * Otherwise it is singular (or empty when no subscheme has polynomial p).
 */

#include <hilbsmooth/error.hpp>
#include <hilbsmooth/lex.hpp>
#include <hilbsmooth/monomial.hpp>
#include <hilbsmooth/partition.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hilbsmooth {

enum class Verdict { empty, smooth, singular };

enum class WitnessStatus { not_needed, provided, not_constructed_by_paper };

constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::empty: return "empty";
    case Verdict::smooth: return "smooth";
    case Verdict::singular: return "singular";
  }
  return "";
}

constexpr std::string_view to_string(WitnessStatus w) noexcept {
  switch (w) {
    case WitnessStatus::not_needed: return "NotNeeded";
    case WitnessStatus::provided: return "Provided";
    case WitnessStatus::not_constructed_by_paper: return "NotConstructedByPaper";
  }
  return "";
}

struct Classification {
  int ambient_m = 0;
  Partition partition;
  Verdict verdict = Verdict::empty;
  std::optional<int> condition;  // set iff verdict == smooth
  std::optional<Integer> lex_component_dim;
  std::string description;
  std::optional<MonomialIdeal> witness;
  WitnessStatus witness_status = WitnessStatus::not_needed;
  std::string witness_rationale;
};

// ---------------------------------------------------------------------------
// Condition predicates, each a literal reading of its pattern.

namespace conditions {

/// Number of leading parts equal to m.
inline std::size_t leading_m(const Partition& lambda, int m) {
  std::size_t k = 0;
  while (k < lambda.length() && lambda.parts()[k] == m) ++k;
  return k;
}

inline bool c1(int m, const Partition&) { return m == 2; }

inline bool c2(int m, const Partition& lambda) {
  return !lambda.empty() && lambda.largest() <= m && lambda.smallest() >= 2;
}

inline bool c3(int m, const Partition& lambda) {
  const std::size_t r = lambda.length();
  if (r == 1) return lambda(1) == 1;
  if (r < 2 || lambda(r) != 1) return false;
  const int before_last = lambda(r - 1);
  if (before_last > m || before_last < 1) return false;
  for (std::size_t i = 1; i <= r - 2; ++i) {
    if (lambda(i) != m) return false;
  }
  return true;
}

inline bool c4(int m, const Partition& lambda) {
  const std::size_t r = lambda.length();
  if (r < 3 || lambda(r) != 1) return false;
  const std::size_t k = leading_m(lambda, m);  // r - s - 3
  if (k + 3 > r) return false;
  const int c = lambda(k + 1);
  if (c > m - 1 || c < 3) return false;
  for (std::size_t i = k + 1; i <= r - 1; ++i) {
    if (lambda(i) != c) return false;
  }
  return true;  // c repeated r - 1 - k = s + 2 >= 2 times
}

inline bool c5(int m, const Partition& lambda) {
  const std::size_t r = lambda.length();
  if (r < 5 || lambda(r) != 1) return false;
  // Try every split m^{k}, 2^{r-1-k}; k = r - s - 5 ranges over 0..r-5.
  for (std::size_t k = 0; k + 5 <= r; ++k) {
    bool ok = true;
    for (std::size_t i = 1; i <= k && ok; ++i) ok = lambda(i) == m;
    for (std::size_t i = k + 1; i <= r - 1 && ok; ++i) ok = lambda(i) == 2;
    if (ok) return true;
  }
  return false;
}

inline bool c6(int m, const Partition& lambda) {
  const std::size_t r = lambda.length();
  if (r < 3) return false;
  for (std::size_t i = 1; i <= r - 3; ++i) {
    if (lambda(i) != m) return false;
  }
  return lambda(r - 2) == 1 && lambda(r - 1) == 1 && lambda(r) == 1;
}

inline bool c7(int m, const Partition& lambda) {
  return lambda.empty() || (lambda.length() == 1 && lambda(1) == m + 1);
}

/// Indices k in 1..7 whose pattern matches, in increasing order.
inline std::vector<int> matching(int m, const Partition& lambda) {
  using Pred = bool (*)(int, const Partition&);
  constexpr Pred preds[] = {c1, c2, c3, c4, c5, c6, c7};
  std::vector<int> out;
  for (int k = 0; k < 7; ++k) {
    if (preds[k](m, lambda)) out.push_back(k + 1);
  }
  return out;
}

}  // namespace conditions

/// True when no closed subscheme of P^m has the Hilbert polynomial of lambda.
inline bool is_empty_hilbert_scheme(int m, const Partition& lambda) {
  return lambda.largest() > m + 1 || (lambda.largest() == m + 1 && lambda.length() > 1);
}

// ---------------------------------------------------------------------------
// Dimension formulas

namespace detail {

/// C(n_i + d_i, d_i) - 1 + (n_i + 1)(n_{i-1} - n_i), with n_0 := n0 and i 1-based.
inline Integer flag_term(long n0, const ResidualType& rt, std::size_t i) {
  const long ni = rt[i - 1].n;
  const long di = rt[i - 1].d;
  const long prev = i == 1 ? n0 : rt[i - 2].n;
  return binomial(Integer(ni + di), di) - 1 + Integer(ni + 1) * (prev - ni);
}

inline long plane_dim(long n0, const ResidualType& rt, std::size_t i) {
  return i == 0 ? n0 : rt[i - 1].n;
}

}  // namespace detail

/// Dimension of the parameter space of residual flags of type rt in P^{n0}.
inline Integer res_space_dim(int n0, const ResidualType& rt) {
  if (rt.empty()) throw error(errc::parameter_out_of_range, "empty residual type");
  if (n0 < rt[0].n) {
    throw error(errc::parameter_out_of_range, "need n0 >= n_1 (n0=" + std::to_string(n0) +
                                                  ", n_1=" + std::to_string(rt[0].n) + ")");
  }
  const std::size_t e = rt.size();
  Integer sum = 0;
  for (std::size_t i = 1; i <= e; ++i) sum += detail::flag_term(n0, rt, i);
  if (rt[e - 1].d == 1) sum -= detail::plane_dim(n0, rt, e - 1) - rt[e - 1].n;
  return sum;
}

/// Dimension of the lexicographic component through L(lambda) in Hilb^p(P^m).
inline Integer lex_component_dim(int m, const Partition& lambda) {
  if (lambda.empty()) throw error(errc::empty_partition, "lexicographic component of r = 0");
  if (m < 1) throw error(errc::invalid_ambient, "ambient dimension must be at least 1");
  if (lambda.largest() > m) {
    throw error(errc::partition_too_large, "lambda_1 exceeds m");
  }
  const ResidualType rt = type_of_partition(lambda);
  const std::size_t e = rt.size();
  const long ne = rt[e - 1].n;
  const long de = rt[e - 1].d;
  if (ne > 1) return res_space_dim(m, rt);  // d_e > 1 and d_e = 1 cases coincide
  if (e == 1) return Integer(m) * de;
  Integer sum = Integer(m) * de;
  for (std::size_t i = 1; i <= e - 1; ++i) sum += detail::flag_term(m, rt, i);
  if (rt[e - 2].d == 1) sum -= detail::plane_dim(m, rt, e - 2) - rt[e - 2].n;
  return sum;
}

struct LsingCounts {
  Integer N;          // independent tangent directions exhibited at the witness
  Integer lex_bound;  // upper bound for the lexicographic component dimension
};

inline LsingCounts lsing_counts(int m, int n, int r, int s) {
  if (!(s >= 0 && r - 2 >= s && n >= 2 && m - 2 >= n)) {
    throw error(errc::parameter_out_of_range, "need r-2 >= s >= 0 and m-2 >= n >= 2");
  }
  const Integer big = binomial(Integer(m + r - s - 2), r - s - 1);
  const Integer small = binomial(Integer(m - n + s + 1), s + 1);
  const Integer mixed = Integer(m - n + 1) * (n - 1);
  return {Integer(m - 1) + big - 1 + (m + n) + mixed + small - 1,
          big + small + mixed + 2 * m - 2};
}

// ---------------------------------------------------------------------------
// Singular witnesses

struct WitnessResult {
  std::optional<MonomialIdeal> ideal;
  WitnessStatus status = WitnessStatus::not_constructed_by_paper;
  std::string rationale;
};

namespace detail {

inline Verdict verdict_of(int m, const Partition& lambda) {
  if (is_empty_hilbert_scheme(m, lambda)) return Verdict::empty;
  return conditions::matching(m, lambda).empty() ? Verdict::singular : Verdict::smooth;
}

inline MonomialIdeal times_x0_power(const MonomialIdeal& ideal, int power) {
  if (power == 0) return ideal;
  const Monomial f = Monomial::variable(ideal.nvars(), 0, power);
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) gens.push_back(f * g);
  return MonomialIdeal(ideal.nvars(), std::move(gens));
}

}  // namespace detail

/// A saturated Borel-fixed ideal at which Hilb^p(P^m) is singular, when one of
/// the known constructions applies.  Leading parts equal to m are split off as
/// a factor x_0^s (the hypersurface factor of the product decomposition).
inline WitnessResult singular_witness(int m, const Partition& lambda) {
  if (m < 1) throw error(errc::invalid_ambient, "ambient dimension must be at least 1");
  if (detail::verdict_of(m, lambda) != Verdict::singular) {
    throw error(errc::not_singular, "Hilbert scheme for (" + to_string(lambda) + ") in P^" +
                                        std::to_string(m) + " is not singular");
  }
  const auto [s, rest] = split_hypersurface(lambda, m);
  const std::string prefix =
      s > 0 ? "hypersurface factor x0^" + std::to_string(s) + " times " : std::string();

  WitnessResult out;
  const int r = static_cast<int>(rest.length());
  if (rest.largest() == 1 && r >= 4) {
    out.ideal = detail::times_x0_power(four_points_ideal(m, r - 4), s);
    out.status = WitnessStatus::provided;
    out.rationale = prefix + "B(" + std::to_string(r - 4) + ") for " + std::to_string(r) + " points";
    return out;
  }
  const Partition mu = drop_trailing_one(rest);
  if (rest == Partition({2, 2, 1}) || rest == Partition({2, 2, 2, 1})) {
    out.ideal = detail::times_x0_power(nearly_lex_ideal(mu, m), s);
    out.status = WitnessStatus::provided;
    out.rationale = prefix + "nearly lexicographic ideal L(" + to_string(mu) +
                    ") ∩ J for the two-component case (" + to_string(rest) + ")";
    return out;
  }
  if (rest.smallest() == 1 && rest.distinct_values() >= 3 && rest.largest() < m) {
    out.ideal = detail::times_x0_power(nearly_lex_ideal(mu, m), s);
    out.status = WitnessStatus::provided;
    out.rationale = prefix + "nearly lexicographic ideal L(" + to_string(mu) + ") ∩ J";
    return out;
  }
  out.status = WitnessStatus::not_constructed_by_paper;
  out.rationale = "(" + to_string(rest) +
                  ") has fewer than three distinct parts and is not (1^k), (2,2,1) or (2,2,2,1); "
                  "no explicit singular point is constructed";
  return out;
}

namespace detail {

inline std::string describe(int condition, int m, const Partition& lambda) {
  const std::size_t r = lambda.length();
  auto type_text = [](const Partition& p) { return "(" + to_string(type_of_partition(p)) + ")"; };
  switch (condition) {
    case 1:
      if (lambda.empty()) return "subschemes of P^2: the empty subscheme";
      return "subschemes of P^2 with residual type " + type_text(lambda);
    case 2:
    case 3:
      return "residual flags of type " + type_text(lambda);
    case 4:
    case 5:
      return "residual flag of type " + type_text(drop_trailing_one(lambda)) + " ∪ isolated point";
    case 6: {
      const std::size_t deg = r - 3;
      if (deg == 0) return "3 points";
      return "hypersurface of degree " + std::to_string(deg) + " ∪ 3 points";
    }
    case 7:
      if (lambda.empty()) return "single point: the empty subscheme";
      return "single point: all of P^" + std::to_string(m);
    default:
      return {};
  }
}

}  // namespace detail

inline Classification classify(int m, const Partition& lambda) {
  if (m < 1) throw error(errc::invalid_ambient, "ambient dimension must be at least 1");
  Classification c;
  c.ambient_m = m;
  c.partition = lambda;
  if (is_empty_hilbert_scheme(m, lambda)) {
    c.verdict = Verdict::empty;
    c.description = "no closed subscheme of P^" + std::to_string(m) + " has this Hilbert polynomial";
    return c;
  }
  const auto matches = conditions::matching(m, lambda);
  if (!lambda.empty() && lambda.largest() <= m) c.lex_component_dim = lex_component_dim(m, lambda);
  if (!matches.empty()) {
    c.verdict = Verdict::smooth;
    c.condition = matches.front();
    if (conditions::c7(m, lambda)) c.lex_component_dim = Integer(0);
    c.description = detail::describe(*c.condition, m, lambda);
    return c;
  }
  c.verdict = Verdict::singular;
  c.description = "singular; residual type (" + to_string(type_of_partition(lambda)) + ")";
  auto w = singular_witness(m, lambda);
  c.witness = std::move(w.ideal);
  c.witness_status = w.status;
  c.witness_rationale = std::move(w.rationale);
  return c;
}

}  // namespace hilbsmooth
