#pragma once

/**
 * @file tangent.hpp
 * @brief dim Hom_R(I, R/I)_0 for a monomial ideal I, by exact linear algebra.
 *
 * A degree-0 homomorphism sends each generator g_i to an element of
 * (R/I)_{deg g_i}; it is well defined iff every pairwise syzygy
 * m_ij g_i = m_ji g_j maps to zero in R/I.  The pairs present every monomial
 * ideal, so the kernel of the assembled matrix is the full Hom space.
 */

#include <hilbsmooth/classify.hpp>
#include <hilbsmooth/error.hpp>
#include <hilbsmooth/linalg.hpp>
#include <hilbsmooth/monomial.hpp>
#include <hilbsmooth/partition.hpp>

#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hilbsmooth {

struct SyzygyPair {
  std::size_t i;
  std::size_t j;
  Monomial multiplier_i;  // lcm / g_i
  Monomial multiplier_j;  // lcm / g_j
  int degree;             // deg lcm
};

/// All pairs i < j of minimal generators, ordered lexicographically by (i, j).
inline std::vector<SyzygyPair> taylor_syzygies(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw error(errc::zero_ideal, "the zero ideal has no generators");
  const auto& g = ideal.gens();
  std::vector<SyzygyPair> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Monomial l = lcm(g[i], g[j]);
      out.push_back({i, j, l / g[i], l / g[j], l.degree()});
    }
  }
  return out;
}

struct FieldSpec {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::uint64_t prime = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(std::uint64_t p) {
    if (!linalg::PrimeArithmetic::is_prime(p)) {
      throw error(errc::parameter_out_of_range, std::to_string(p) + " is not prime");
    }
    return {Kind::prime, p};
  }

  std::string describe() const {
    return kind == Kind::rational ? "rationals" : "prime " + std::to_string(prime);
  }
};

/// "rational" or "prime:P".
inline FieldSpec parse_field(std::string_view text) {
  if (text == "rational" || text == "rationals") return FieldSpec::rationals();
  if (text.substr(0, 6) == "prime:") {
    const std::string digits(text.substr(6));
    if (digits.empty() || digits.size() > 19 ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      throw error(errc::parse_error, "bad prime '" + digits + "'");
    }
    return FieldSpec::prime_field(std::stoull(digits));
  }
  throw error(errc::parse_error, "field must be 'rational' or 'prime:P', got '" + std::string(text) + "'");
}

inline constexpr int default_degree_cap = 20;

/// HILB_DEGREE_CAP if set to a positive integer, otherwise the fallback.
inline int degree_cap_from_env(int fallback = default_degree_cap) {
  const char* value = std::getenv("HILB_DEGREE_CAP");
  if (value == nullptr || *value == '\0') return fallback;
  char* end = nullptr;
  const long cap = std::strtol(value, &end, 10);
  if (*end != '\0' || cap < 1 || cap > 1000) {
    throw error(errc::parse_error, std::string("HILB_DEGREE_CAP must be a positive integer, got '") + value + "'");
  }
  return static_cast<int>(cap);
}

struct TangentReport {
  MonomialIdeal ideal;
  long hom0_dim;
  long unknowns;
  long equations;
  std::string field;
};

namespace detail {

class StandardBasis {
 public:
  explicit StandardBasis(const MonomialIdeal& ideal) : ideal_(ideal) {}

  const std::vector<Monomial>& monomials(int degree) {
    auto it = cache_.find(degree);
    if (it == cache_.end()) it = cache_.emplace(degree, standard_monomials(ideal_, degree)).first;
    return it->second;
  }

 private:
  const MonomialIdeal& ideal_;
  std::map<int, std::vector<Monomial>> cache_;
};

template <typename Arithmetic>
long nullity(const MonomialIdeal& ideal, Arithmetic arith, long& unknowns, long& equations) {
  const auto& g = ideal.gens();
  StandardBasis basis(ideal);

  // Column of the coefficient of standard monomial v in phi(g_i).
  std::vector<std::map<Monomial, std::size_t>> column(g.size());
  std::size_t ncols = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (const auto& v : basis.monomials(g[i].degree())) column[i].emplace(v, ncols++);
  }

  linalg::RowEchelon<Arithmetic> echelon(ncols, arith);
  const auto one = arith.from_int(1);
  const auto minus_one = arith.from_int(-1);
  long rows = 0;
  for (const auto& pair : taylor_syzygies(ideal)) {
    rows += static_cast<long>(basis.monomials(pair.degree).size());
    // Row u collects m_ij * phi(g_i) - m_ji * phi(g_j) at the standard monomial u.
    std::map<Monomial, linalg::SparseRow<typename Arithmetic::value_type>> by_target;
    for (const auto& [v, col] : column[pair.i]) {
      const Monomial u = pair.multiplier_i * v;
      if (!ideal.contains(u)) by_target[u].emplace_back(col, one);
    }
    for (const auto& [w, col] : column[pair.j]) {
      const Monomial u = pair.multiplier_j * w;
      if (!ideal.contains(u)) by_target[u].emplace_back(col, minus_one);
    }
    for (auto& [u, row] : by_target) echelon.insert(std::move(row));  // columns of i precede j
  }
  unknowns = static_cast<long>(ncols);
  equations = rows;
  return static_cast<long>(ncols - echelon.rank());
}

}  // namespace detail

inline TangentReport hom0_dimension(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rationals(),
                                    int degree_cap = default_degree_cap) {
  if (ideal.is_zero()) throw error(errc::zero_ideal, "Hom from the zero ideal");
  int top = 0;
  for (const auto& g : ideal.gens()) top = std::max(top, g.degree());
  for (const auto& a : ideal.gens()) {
    for (const auto& b : ideal.gens()) top = std::max(top, lcm(a, b).degree());
  }
  if (top > degree_cap) {
    throw error(errc::degree_cap_exceeded, "needs degree " + std::to_string(top) + " > cap " +
                                               std::to_string(degree_cap));
  }
  TangentReport report{ideal, 0, 0, 0, field.describe()};
  if (field.kind == FieldSpec::Kind::rational) {
    report.hom0_dim = detail::nullity(ideal, linalg::IntegerArithmetic{}, report.unknowns, report.equations);
  } else {
    report.hom0_dim =
        detail::nullity(ideal, linalg::PrimeArithmetic(field.prime), report.unknowns, report.equations);
  }
  return report;
}

struct SingularCertificate {
  long hom0;
  Integer lex_dim;
  bool singular_certified;
  std::string assumption;
  TangentReport report;
};

/// Compares dim Hom(W, R/W)_0, a lower bound for the tangent space at [W],
/// against the dimension of the lexicographic component.
inline SingularCertificate certify_singular(int m, const Partition& lambda, const MonomialIdeal& witness,
                                            const FieldSpec& field = FieldSpec::rationals(),
                                            int degree_cap = default_degree_cap) {
  if (witness.nvars() != static_cast<std::size_t>(m) + 1) {
    throw error(errc::length_mismatch, "witness lives in " + std::to_string(witness.nvars()) +
                                           " variables, expected " + std::to_string(m + 1));
  }
  const NumericalPolynomial expected = hilbert_polynomial(lambda);
  const NumericalPolynomial actual =
      stable_hilbert_polynomial(witness, static_cast<int>(lambda.length()));
  if (actual != expected) {
    throw error(errc::polynomial_mismatch,
                "witness has Hilbert polynomial " + to_string(actual) + ", expected " + to_string(expected));
  }
  TangentReport report = hom0_dimension(witness, field, degree_cap);
  const Integer lex_dim = lex_component_dim(m, lambda);
  const bool certified = Integer(report.hom0_dim) > lex_dim;
  return {report.hom0_dim, lex_dim, certified,
          "witness assumed to lie on the lexicographic component; hom0 is a lower bound for the tangent dimension",
          std::move(report)};
}

}  // namespace hilbsmooth
