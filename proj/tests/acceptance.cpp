// Acceptance checks.  One line per criterion; exit status is the number of failures.

#include "oracles.hpp"

#include <hilbsmooth/classify.hpp>
#include <hilbsmooth/lex.hpp>
#include <hilbsmooth/tangent.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace hilbsmooth;

namespace {

// Wall-clock budgets in seconds.
constexpr double budget_tables = 1.0;
constexpr double budget_round_trip = 5.0;
constexpr double budget_lex_hilbert = 30.0;
constexpr double budget_default = 30.0;
constexpr double budget_certificate = 10.0;

struct Check {
  bool ok = true;
  std::ostringstream why;
  long cases = 0;

  template <typename T>
  void expect(bool cond, const T& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      why << what;
    }
  }
};

Partition rep(int part, int count) { return Partition(std::vector<int>(static_cast<std::size_t>(count), part)); }
Monomial x(std::size_t n, std::size_t i, int p = 1) { return Monomial::variable(n, i, p); }

void tables(Check& c) {
  c.expect(hilbert_polynomial(Partition({2, 2, 1})) == parse_polynomial("2t+2"), "(2,2,1)");
  c.expect(hilbert_polynomial(Partition({2, 2, 2, 1})) == parse_polynomial("3t+1"), "(2,2,2,1)");
  for (int r = 0; r <= 8; ++r)
    c.expect(hilbert_polynomial(rep(1, r)) == NumericalPolynomial::constant(r), "(1^" + std::to_string(r) + ")");
  for (int m = 0; m <= 6; ++m) {
    // Degree m and agreement with C(t+m, m) at more than m points pins the polynomial.
    const auto p = hilbert_polynomial(Partition({m + 1}));
    bool same = p.degree() == m;
    for (long t = -10; t <= 20; ++t) same = same && p(t) == Rational(oracle::binom(t + m, m));
    c.expect(same, "(" + std::to_string(m + 1) + ")");
  }
}

void round_trip(Check& c) {
  // The stated range holds 462 partitions; lengths up to 8 push the count past 1000.
  for (const auto& lambda : oracle::partitions(5, 8))
    c.expect(partition_of_polynomial(hilbert_polynomial(lambda)) == lambda, to_string(lambda));
  c.expect(c.cases >= 1000, "fewer than 1000 partitions enumerated");
}

void lex_hilbert(Check& c) {
  for (const auto& lambda : oracle::partitions(4, 5)) {
    if (lambda.empty()) continue;
    for (int m : {lambda.largest(), lambda.largest() + 1}) {
      const auto ideal = lex_ideal(lambda, m);
      for (int j = 0; j <= static_cast<int>(lambda.length()) + 2; ++j)
        c.expect(Integer(hilbert_function(ideal, j)) == oracle::lex_hilbert_function(lambda, j),
                 to_string(lambda) + " m=" + std::to_string(m) + " j=" + std::to_string(j));
    }
  }
}

void decomposition(Check& c) {
  for (const auto& lambda : oracle::partitions(4, 5)) {
    if (lambda.empty()) continue;
    for (int m : {lambda.largest(), lambda.largest() + 1}) {
      auto acc = MonomialIdeal::unit(static_cast<std::size_t>(m) + 1);
      for (const auto& q : irreducible_components(lambda, m)) acc = intersect(acc, q);
      c.expect(acc == lex_ideal(lambda, m), to_string(lambda) + " m=" + std::to_string(m));
    }
  }
}

void chain_colon(Check& c) {
  for (int n1 = 1; n1 <= 4; ++n1) {
    const int m = n1 + 1;
    const std::size_t nv = static_cast<std::size_t>(m) + 1;
    // Strictly decreasing plane dimensions starting at n1, at most three of them.
    for (const auto& shape : oracle::partitions(n1, 3)) {
      if (shape.empty() || shape.largest() != n1 || shape.distinct_values() != shape.length()) continue;
      int total = 1;
      for (std::size_t k = 0; k < shape.length(); ++k) total *= 3;
      for (int code = 0; code < total; ++code) {
        std::vector<ResidualPair> pairs;
        int rest = code;
        for (int n : shape.parts()) {
          pairs.push_back({n, rest % 3 + 1});
          rest /= 3;
        }
        const ResidualType rt(pairs);
        const auto chain = residual_chain(rt, m);
        for (std::size_t i = 0; i + 1 < rt.size(); ++i) {
          std::vector<Monomial> lin;
          for (int l = m - rt[i].n; l <= m - rt[i + 1].n - 1; ++l) lin.push_back(x(nv, static_cast<std::size_t>(l)));
          const auto expected = add(MonomialIdeal(nv, lin), chain[i + 1]);
          c.expect(colon(chain[i], x(nv, static_cast<std::size_t>(m - rt[i].n), rt[i].d)) == expected,
                   to_string(rt) + " i=" + std::to_string(i));
        }
      }
    }
  }
}

void nearly_lex(Check& c) {
  for (const auto& lambda : oracle::partitions(3, 4)) {
    if (lambda.empty()) continue;
    const int m = lambda.largest() + 1;
    const auto k = nearly_lex_ideal(lambda, m);
    const auto p = stable_hilbert_polynomial(k, static_cast<int>(lambda.length()) + 1);
    c.expect(p == hilbert_polynomial(lambda) + NumericalPolynomial::constant(1), to_string(lambda) + " polynomial");
    const auto v = static_cast<std::size_t>(m - 1);
    c.expect(saturate(lex_ideal(lambda, m), v) == saturate(k, v), to_string(lambda) + " saturation");
  }
}

void certificate(Check& c) {
  const auto w = lsing_witness(4, 2, 2, 0);
  const auto h = hom0_dimension(w).hom0_dim;
  c.expect(h >= 17, "hom0 = " + std::to_string(h));
  const auto counts = lsing_counts(4, 2, 2, 0);
  c.expect(counts.N == 17 && counts.lex_bound == 16, "lsing counts");
  const Partition lambda({3, 2, 1});
  c.expect(lex_component_dim(4, lambda) <= counts.lex_bound, "lex component above bound");
  const auto cert = certify_singular(4, lambda, w);
  c.expect(cert.singular_certified, "not certified");
  c.expect(Integer(cert.hom0) > Integer(16), "hom0 not above 16");
  for (int m = 4; m <= 7; ++m)
    for (int n = 2; n <= m - 2; ++n)
      for (int r = 2; r <= 7; ++r)
        for (int s = 0; s <= r - 2; ++s) {
          const auto k = lsing_counts(m, n, r, s);
          c.expect(k.N - k.lex_bound == n - 1, "N - lex_bound");
        }
}

void smooth_tangent(Check& c) {
  const auto h = hom0_dimension(MonomialIdeal(3, {x(3, 0), x(3, 1, 2)})).hom0_dim;
  c.expect(h == 4 && Integer(h) == lex_component_dim(2, Partition({1, 1})), "<x0, x1^2>");
  for (int m = 1; m <= 4; ++m) {
    const std::size_t n = static_cast<std::size_t>(m) + 1;
    for (int a = 1; a <= 4; ++a) {
      const auto ha = hom0_dimension(MonomialIdeal(n, {x(n, 0, a)})).hom0_dim;
      c.expect(Integer(ha) == oracle::binom(m + a, a) - 1, "x0^" + std::to_string(a) + " m=" + std::to_string(m));
    }
  }
}

void golden(Check& c) {
  auto is = [&](int m, const Partition& lambda, Verdict v, std::optional<int> cond = std::nullopt) {
    const auto got = classify(m, lambda);
    c.expect(got.verdict == v && (!cond || got.condition == cond),
             "m=" + std::to_string(m) + " (" + to_string(lambda) + ")");
  };
  for (const auto& lambda : oracle::partitions(3, 5)) {
    // In P^2 a part equal to 3 = m+1 is only realizable as the whole plane.
    if (lambda.largest() == 3 && lambda.length() > 1) {
      is(2, lambda, Verdict::empty);
    } else {
      is(2, lambda, Verdict::smooth, 1);
    }
  }
  is(3, Partition({2, 2, 1}), Verdict::singular);
  is(3, Partition({2, 2, 2, 1}), Verdict::singular);
  for (int m = 3; m <= 6; ++m) {
    for (int k = 1; k <= 3; ++k) is(m, rep(1, k), Verdict::smooth);
    for (int k = 4; k <= 8; ++k) is(m, rep(1, k), Verdict::singular);
  }
  is(3, Partition({3, 3, 2, 1}), Verdict::smooth, 3);
  is(4, Partition({3, 3, 1}), Verdict::smooth, 4);
  is(3, Partition({2, 2, 2, 2, 1}), Verdict::smooth, 5);
  is(5, Partition({5, 5, 1, 1, 1}), Verdict::smooth, 6);
  is(4, Partition({5}), Verdict::smooth, 7);
  is(4, Partition({5, 1}), Verdict::empty);
}

void dimensions(Check& c) {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n < m; ++n)
      c.expect(res_space_dim(m, ResidualType({{n + 1, 1}})) == (n + 1) * (m - n),
               "Grassmannian n=" + std::to_string(n) + " m=" + std::to_string(m));
  for (int m = 1; m <= 6; ++m)
    for (int d = 1; d <= 5; ++d)
      c.expect(res_space_dim(m, ResidualType({{m, d}})) == oracle::binom(m + d, d) - 1,
               "hypersurface d=" + std::to_string(d) + " m=" + std::to_string(m));
  for (int m = 1; m <= 6; ++m)
    for (const auto& lambda : oracle::partitions(m, 7)) {
      if (lambda.empty() || !(conditions::c2(m, lambda) || conditions::c3(m, lambda))) continue;
      c.expect(lex_component_dim(m, lambda) == res_space_dim(m, type_of_partition(lambda)),
               "m=" + std::to_string(m) + " (" + to_string(lambda) + ")");
    }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<void(Check&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "partition/polynomial tables", budget_tables, tables},
      {2, "partition round trip", budget_round_trip, round_trip},
      {3, "lex ideal Hilbert function", budget_lex_hilbert, lex_hilbert},
      {4, "irreducible decomposition", budget_default, decomposition},
      {5, "residual chain colon identity", budget_default, chain_colon},
      {6, "nearly lexicographic ideal", budget_default, nearly_lex},
      {7, "singularity certificate", budget_certificate, certificate},
      {8, "smooth point tangent check", budget_default, smooth_tangent},
      {9, "classifier golden table", budget_default, golden},
      {10, "dimension cross-checks", budget_default, dimensions},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.why << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.ok && secs > cr.budget) {
      c.ok = false;
      c.why << "took " << secs << " s, budget " << cr.budget << " s";
    }
    std::printf("%s criterion %2d: %-32s %6ld cases %8.3f s%s%s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.name, c.cases,
                secs, c.ok ? "" : "  ", c.why.str().c_str());
    if (!c.ok) ++failures;
  }
  return failures;
}
