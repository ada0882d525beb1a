#include "oracles.hpp"

#include <hilbsmooth/lex.hpp>
#include <hilbsmooth/monomial.hpp>

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace hilbsmooth;

namespace {

Monomial M(std::vector<int> e) { return Monomial(std::move(e)); }
MonomialIdeal I(std::size_t n, std::vector<std::vector<int>> gens) {
  std::vector<Monomial> g;
  for (auto& e : gens) g.emplace_back(std::move(e));
  return MonomialIdeal(n, std::move(g));
}

template <typename Fn>
errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return errc::parse_error;
}

MonomialIdeal random_ideal(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> count(1, 6), ex(0, 4);
  std::vector<Monomial> g;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<int> e(n);
    for (auto& x : e) x = ex(rng);
    g.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(g));
}

}  // namespace

TEST(Monomial, Basics) {
  const auto a = M({2, 1, 0});
  const auto b = M({1, 0, 3});
  EXPECT_EQ(a.degree(), 3);
  EXPECT_EQ(a * b, M({3, 1, 3}));
  EXPECT_EQ(lcm(a, b), M({2, 1, 3}));
  EXPECT_EQ(gcd(a, b), M({1, 0, 0}));
  EXPECT_TRUE(M({1, 0, 0}).divides(a));
  EXPECT_TRUE(a > b);  // lex order, x0 largest
  EXPECT_EQ(code_of([&] { return a * M({1, 1}); }), errc::length_mismatch);
  EXPECT_EQ(to_string(M({2, 0, 1})), "x0^2*x2");
  EXPECT_EQ(to_string(Monomial(3)), "1");
}

TEST(Minimalize, Examples) {
  EXPECT_EQ(I(2, {{1, 0}, {2, 0}}), I(2, {{1, 0}}));
  EXPECT_TRUE(minimalize({}, 3).is_zero());
  EXPECT_EQ(I(2, {{1, 1}, {2, 0}, {2, 1}}).gens(), (std::vector<Monomial>{M({2, 0}), M({1, 1})}));
  EXPECT_EQ(code_of([] { I(2, {{1, 1, 0}}); }), errc::length_mismatch);
}

TEST(Minimalize, CanonicalFormIsOrderIndependent) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto ideal = random_ideal(rng, 4);
    auto gens = ideal.gens();
    // Add redundant multiples and shuffle.
    for (const auto& g : ideal.gens()) gens.push_back(g * Monomial::variable(4, 2));
    std::shuffle(gens.begin(), gens.end(), rng);
    EXPECT_EQ(MonomialIdeal(4, gens), ideal);
    for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
      for (std::size_t j = 0; j < ideal.gens().size(); ++j) {
        if (i != j) {
          EXPECT_FALSE(ideal.gens()[i].divides(ideal.gens()[j]));
        }
      }
    }
    EXPECT_TRUE(std::is_sorted(ideal.gens().begin(), ideal.gens().end(), std::greater<>()));
  }
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(I(2, {{1, 0}}), M({1, 1})));
  EXPECT_FALSE(contains(I(2, {{2, 0}}), M({1, 0})));
  EXPECT_FALSE(contains(MonomialIdeal(3), Monomial(3)));
  EXPECT_EQ(code_of([] { contains(I(2, {{1, 0}}), M({1, 0, 0})); }), errc::length_mismatch);
}

TEST(Operations, Examples) {
  EXPECT_EQ(intersect(I(2, {{1, 0}}), I(2, {{0, 1}})), I(2, {{1, 1}}));
  EXPECT_EQ(intersect(I(4, {{1, 0, 0, 0}, {0, 2, 0, 0}}), I(4, {{1, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 1, 0}})),
            I(4, {{1, 0, 0, 0}, {0, 3, 0, 0}, {0, 2, 1, 0}}));
  EXPECT_EQ(colon(I(2, {{1, 1}, {2, 0}}), M({1, 0})), I(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(add(I(2, {{2, 0}}), I(2, {{1, 0}})), I(2, {{1, 0}}));
  EXPECT_EQ(code_of([] { add(I(2, {{1, 0}}), I(3, {{1, 0, 0}})); }), errc::length_mismatch);
}

TEST(Saturate, Examples) {
  EXPECT_EQ(saturate(I(2, {{2, 0}, {1, 1}}), 1), I(2, {{1, 0}}));
  EXPECT_EQ(saturate(I(2, {{1, 0}}), 1), I(2, {{1, 0}}));
  EXPECT_EQ(saturate(I(3, {{0, 2, 0}, {0, 1, 1}}), 2), I(3, {{0, 1, 0}}));
  EXPECT_EQ(code_of([] { saturate(I(2, {{1, 0}}), 2); }), errc::index_out_of_range);
}

TEST(StronglyStable, Examples) {
  EXPECT_TRUE(is_strongly_stable(I(3, {{1, 0, 0}, {0, 2, 0}})));
  EXPECT_FALSE(is_strongly_stable(I(2, {{0, 1}})));
  EXPECT_TRUE(is_strongly_stable(four_points_ideal(3, 0)));
}

TEST(StandardMonomials, Examples) {
  EXPECT_EQ(standard_monomials(MonomialIdeal(3), 1), (std::vector<Monomial>{M({1, 0, 0}), M({0, 1, 0}), M({0, 0, 1})}));
  EXPECT_EQ(standard_monomials(I(3, {{1, 0, 0}}), 2), (std::vector<Monomial>{M({0, 2, 0}), M({0, 1, 1}), M({0, 0, 2})}));
  EXPECT_EQ(standard_monomials(I(3, {{1, 0, 0}, {0, 2, 0}}), 3), (std::vector<Monomial>{M({0, 1, 2}), M({0, 0, 3})}));
}

TEST(HilbertFunction, Examples) {
  for (int j = 0; j <= 8; ++j) {
    EXPECT_EQ(hilbert_function(I(3, {{1, 0, 0}}), j), j + 1);
    EXPECT_EQ(hilbert_function(I(3, {{1, 0, 0}, {0, 2, 0}}), j), j == 0 ? 1 : 2);
    for (std::size_t m = 0; m <= 4; ++m)
      EXPECT_EQ(Integer(hilbert_function(MonomialIdeal(m + 1), j)),
                oracle::binom(j + static_cast<long>(m), static_cast<long>(m)));
  }
  EXPECT_EQ(hilbert_function(I(3, {{1, 0, 0}}), -1), 0);
}

TEST(HilbertPolynomialOfIdeal, Examples) {
  EXPECT_EQ(hilbert_polynomial_of_ideal(I(3, {{1, 0, 0}}), 1), parse_polynomial("t+1"));
  EXPECT_EQ(hilbert_polynomial_of_ideal(lex_ideal(Partition({2, 2, 1}), 3), 3), parse_polynomial("2t+2"));
  EXPECT_EQ(hilbert_polynomial_of_ideal(I(3, {{2, 0, 0}, {1, 1, 0}}), 2), parse_polynomial("t+2"));
}

TEST(HilbertPolynomialOfIdeal, TooSmallHintIsReported) {
  // <x0^2, x0 x1 x2^3>: h(j) = 2j+1 up to degree 4, then j+5.
  const auto ideal = I(3, {{2, 0, 0}, {1, 1, 3}});
  EXPECT_EQ(code_of([&] { hilbert_polynomial_of_ideal(ideal, 0); }), errc::not_yet_polynomial);
  EXPECT_EQ(stable_hilbert_polynomial(ideal, 0), parse_polynomial("t+5"));
}

TEST(Properties, IntersectionColonSaturationMembership) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
    const auto a = random_ideal(rng, n);
    const auto b = random_ideal(rng, n);
    const auto mu = random_ideal(rng, n).gens().front();
    const auto inter = intersect(a, b);
    const auto sum = add(a, b);
    const auto col = colon(a, mu);
    const auto sat = saturate(a, n - 1);
    const auto x = Monomial::variable(n, n - 1, 12);  // x^12 exceeds every exponent used
    for (int d = 0; d <= (n <= 3 ? 8 : 6); ++d) {
      for (const auto& e : oracle::monomials_of_degree(n, d)) {
        const Monomial v(e);
        EXPECT_EQ(inter.contains(v), oracle::in_ideal(a, e) && oracle::in_ideal(b, e));
        EXPECT_EQ(sum.contains(v), oracle::in_ideal(a, e) || oracle::in_ideal(b, e));
        EXPECT_EQ(col.contains(v), oracle::in_ideal(a, (v * mu).exponents()));
        EXPECT_EQ(sat.contains(v), oracle::in_ideal(a, (v * x).exponents()));
      }
    }
  }
}

TEST(Properties, MayerVietoris) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
    const auto a = random_ideal(rng, n);
    const auto b = random_ideal(rng, n);
    for (int j = 0; j <= 8; ++j) {
      EXPECT_EQ(hilbert_function(add(a, b), j) + hilbert_function(intersect(a, b), j),
                hilbert_function(a, j) + hilbert_function(b, j));
      EXPECT_EQ(hilbert_function(a, j), oracle::hilbert_function(a, j));
    }
  }
}

TEST(ColonIdeal, IntersectionOfColons) {
  const auto a = I(3, {{2, 0, 0}, {1, 1, 0}, {0, 3, 1}});
  const auto b = I(3, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(colon_ideal(a, b), intersect(colon(a, M({1, 0, 0})), colon(a, M({0, 1, 0}))));
  EXPECT_TRUE(colon_ideal(a, MonomialIdeal(3)).is_unit());
}

TEST(IdealFile, ReadWrite) {
  const auto ideal = read_ideal("vars 3\n# comment\n\n1 0 0\nx1^2\nx1^3*x2\n");
  EXPECT_EQ(ideal, I(3, {{1, 0, 0}, {0, 2, 0}}));
  EXPECT_EQ(format_ideal_file(ideal), "vars 3\n1 0 0\n0 2 0\n");
  EXPECT_EQ(read_ideal(format_ideal_file(ideal)), ideal);
  EXPECT_EQ(code_of([] { read_ideal("1 0 0\n"); }), errc::parse_error);
  EXPECT_EQ(code_of([] { read_ideal("vars 3\n1 0\n"); }), errc::length_mismatch);
  EXPECT_EQ(code_of([] { read_ideal("vars 3\nx5\n"); }), errc::index_out_of_range);
  EXPECT_EQ(code_of([] { read_ideal("vars 3\ny1\n"); }), errc::parse_error);
  EXPECT_TRUE(read_ideal("vars 2\n").is_zero());
}
