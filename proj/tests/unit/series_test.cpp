#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "pdtrank/designated.hpp"
#include "pdtrank/partition.hpp"
#include "pdtrank/ranks.hpp"
#include "pdtrank/series.hpp"

namespace pdtrank {
namespace {

Series S(int precision, std::vector<int> c) {
    std::vector<BigInt> big(c.begin(), c.end());
    return Series(precision, std::move(big));
}

std::vector<long long> coeffs(const Series& s) {
    std::vector<long long> out;
    for (const auto& c : s.coefficients()) out.push_back(static_cast<long long>(c));
    return out;
}

TEST(Series, BasicArithmetic) {
    EXPECT_EQ(S(6, {1, -1}).inverse(), S(6, {1, 1, 1, 1, 1, 1, 1}));
    EXPECT_EQ(S(6, {1, -1}).substitute_power(3), S(6, {1, 0, 0, -1}));
    EXPECT_EQ(S(6, {1, -1}) * S(6, {1, 1}), S(6, {1, 0, -1}));
    EXPECT_EQ(S(4, {1, 2}) + S(4, {0, 1, 3}), S(4, {1, 3, 3}));
    EXPECT_EQ(S(4, {1, 2}) - S(4, {1, 2}), Series(4));
    EXPECT_EQ(S(4, {1, 1}).pow(3), S(4, {1, 3, 3, 1}));
    EXPECT_EQ(S(4, {-1, 1}).inverse(), S(4, {-1, -1, -1, -1, -1}));
}

TEST(Series, MixedPrecisionTakesMinimum) {
    const Series a = S(3, {1, 1, 1, 1});
    const Series b = S(6, {1, 1, 1, 1, 1, 1, 1});
    EXPECT_EQ((a + b).precision(), 3);
    EXPECT_EQ((b * a).precision(), 3);
    EXPECT_EQ((b - a).precision(), 3);
    EXPECT_EQ(b.truncated(2), S(2, {1, 1, 1}));
    EXPECT_THROW((void)a.truncated(5), std::invalid_argument);
}

TEST(Series, Errors) {
    EXPECT_THROW(S(4, {2, 1}).inverse(), std::domain_error);
    EXPECT_THROW(Series(4).inverse(), std::domain_error);
    EXPECT_THROW(Series(-1), std::invalid_argument);
    EXPECT_THROW((void)S(4, {1}).substitute_power(0), std::invalid_argument);
    EXPECT_THROW((void)S(4, {1})[5], std::out_of_range);
    EXPECT_THROW(euler_product(0, 5), std::invalid_argument);
    EXPECT_THROW(pochhammer(0, 1, 1, 5), std::invalid_argument);
}

TEST(Series, InverseOfRandomUnitalSeries) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-50, 50);
    for (int trial = 0; trial < 100; ++trial) {
        const int precision = std::uniform_int_distribution<int>(0, 40)(rng);
        std::vector<BigInt> c(static_cast<std::size_t>(precision) + 1);
        c[0] = trial % 2 == 0 ? 1 : -1;
        for (std::size_t i = 1; i < c.size(); ++i) c[i] = coef(rng);
        const Series a(precision, c);
        EXPECT_EQ(a * a.inverse(), Series::one(precision)) << trial;
        EXPECT_EQ(a.inverse() * a, Series::one(precision)) << trial;
    }
}

TEST(Series, BinomialUpdatesMatchMultiplication) {
    const Series a = S(10, {3, -1, 4, 1, -5, 9, 2, -6});
    Series m = a;
    m.multiply_binomial(3, -1);
    EXPECT_EQ(m, a * S(10, {1, 0, 0, 1}));
    m.divide_binomial(3, -1);
    EXPECT_EQ(m, a);
}

TEST(EulerProduct, Examples) {
    EXPECT_EQ(coeffs(euler_product(1, 5)), (std::vector<long long>{1, -1, -1, 0, 0, 1}));
    EXPECT_EQ(coeffs(euler_product(6, 5)), (std::vector<long long>{1, 0, 0, 0, 0, 0}));
    EXPECT_EQ(coeffs(euler_product(2, 4)), (std::vector<long long>{1, 0, -1, 0, -1}));
}

TEST(EulerProduct, PentagonalNumberTheorem) {
    // (q;q)_inf = sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
    const int N = 300;
    std::vector<BigInt> c(N + 1, BigInt(0));
    for (int k = -20; k <= 20; ++k) {
        const int e = k * (3 * k - 1) / 2;
        if (e <= N) c[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
    }
    EXPECT_EQ(euler_product(1, N), Series(N, c));
    EXPECT_EQ(euler_product(4, N), euler_product(1, N).substitute_power(4));
}

TEST(Pochhammer, Examples) {
    EXPECT_EQ(pochhammer(1, 1, 1, 40), euler_product(1, 40));
    EXPECT_EQ(coeffs(pochhammer(3, 3, -1, 9)), (std::vector<long long>{1, 0, 0, 1, 0, 0, 1, 0, 0, 2}));
    // (q^3; q^6)_inf = (1 - q^3)(1 - q^9)(1 - q^15)...
    EXPECT_EQ(pochhammer(3, 6, 1, 12), S(12, {1, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 1}));
}

TEST(Lambert, Examples) {
    EXPECT_EQ(coeffs(lambert_pdt(5)), (std::vector<long long>{0, 1, 2, 1, 1, 0}));
    EXPECT_EQ(coeffs(lambert_pdt(2)), (std::vector<long long>{0, 1, 2}));
    EXPECT_EQ(lambert_pdt(100)[0], 0);
}

TEST(Lambert, MatchesTermwiseDivision) {
    // Oracle: sum the terms (q^k + q^{2k}) * (1 + q^{3k})^{-1} with generic series arithmetic.
    const int N = 80;
    Series total(N);
    for (int k = 1; k <= N; ++k) {
        Series num = Series::monomial(N, k) + Series::monomial(N, 2 * k);
        Series den = Series::one(N) + Series::monomial(N, 3 * k);
        total += num * den.inverse();
    }
    EXPECT_EQ(total, lambert_pdt(N));
}

TEST(Theta, Examples) {
    EXPECT_EQ(coeffs(theta_alternating(5)), (std::vector<long long>{1, -2, 0, 0, 2, 0}));
    const Series t = theta_alternating(50);
    EXPECT_EQ(t[9], -2);
    for (int n = 1; n <= 50; ++n) {
        const int r = static_cast<int>(std::lround(std::sqrt(n)));
        if (r * r != n) EXPECT_EQ(t[n], 0) << n;
    }
}

TEST(PdtGeneratingFunction, Examples) {
    const Series gf = pdt_generating_function(5);
    EXPECT_EQ(coeffs(gf), (std::vector<long long>{0, 1, 3, 6, 13, 24}));
}

TEST(PdtGeneratingFunction, MatchesEnumeration) {
    const Series gf = pdt_generating_function(32);
    for (int n = 0; n <= 32; ++n) EXPECT_EQ(gf[n], pdt_count(n)) << n;
}

TEST(PdPrefactor, MatchesEnumeration) {
    const Series pre = pd_prefactor(32);
    EXPECT_EQ(pre[0], 1);
    EXPECT_EQ(pre[2], 3);
    EXPECT_EQ(pre[5], 15);
    for (int n = 0; n <= 32; ++n) EXPECT_EQ(pre[n], pd_count(n)) << n;
}

TEST(Identities, LambertEtaQuotient) {
    EXPECT_TRUE(verify_lambert_eta_identity(0));
    EXPECT_TRUE(verify_lambert_eta_identity(5));
    EXPECT_EQ(coeffs(lambert_pdt(5) * BigInt(2) + Series::one(5)), (std::vector<long long>{1, 2, 4, 2, 2, 0}));
    EXPECT_EQ(coeffs(lambert_eta_quotient(5)), (std::vector<long long>{1, 2, 4, 2, 2, 0}));
    EXPECT_TRUE(verify_lambert_eta_identity(300));
}

TEST(Identities, ThetaProduct) {
    EXPECT_TRUE(verify_theta_product_identity(0));
    EXPECT_TRUE(verify_theta_product_identity(1));
    EXPECT_TRUE(verify_theta_product_identity(300));
}

TEST(Identities, AlphaGeneratingFunction) {
    // sum_k q^k/(1-q^k) prod_{j != k} (1 + q^{2j}/(1-q^j)) built factor by factor,
    // against the number of (alpha, t) pairs counted from S2.
    const int N = 24;
    Series alpha_gf(N);
    for (int k = 1; k <= N; ++k) {
        Series term = Series::monomial(N, k) * (Series::one(N) - Series::monomial(N, k)).inverse();
        for (int j = 1; j <= N; ++j) {
            if (j == k) continue;
            term *= Series::one(N) +
                    Series::monomial(N, 2 * j) * (Series::one(N) - Series::monomial(N, j)).inverse();
        }
        alpha_gf += term;
    }
    for (int a = 1; a <= N; ++a) {
        std::uint64_t pairs = 0;
        for_each_s2(a, [&](const S2Triple& t) { pairs += t.beta().empty() ? 1 : 0; });
        EXPECT_EQ(alpha_gf[a], pairs) << a;
    }
    // Times the partition generating function this is the PD_t generating function.
    Series partitions = euler_product(1, N).inverse();
    EXPECT_EQ(alpha_gf * partitions, pdt_generating_function(N));
}

TEST(Dissection, Examples) {
    const Series g = dissection_series(300);
    EXPECT_EQ(g[0], 0);
    EXPECT_EQ(g[1], 2);
    for (int n = 2; n <= 300; n += 3) EXPECT_EQ(g[n], 0) << n;
}

TEST(Dissection, MatchesEnumeratedResidues) {
    const Series g = dissection_series(24);
    for (int n = 1; n <= 24; ++n) {
        const auto r = ndt_residue(n, 3);
        EXPECT_EQ(r.at(1), r.at(2)) << n;
        EXPECT_EQ(BigInt(2) * (r.at(0) - r.at(1)), g[n]) << n;
    }
}

TEST(CrankGeneratingFunction, Examples) {
    const auto gf = crank_generating_function(20);
    using Poly = LaurentPolySeries::Poly;
    EXPECT_EQ(gf[0], (Poly{{0, 1}}));
    EXPECT_EQ(gf[1], (Poly{{-1, 1}, {0, -1}, {1, 1}}));
    EXPECT_EQ(gf[4], (Poly{{-4, 1}, {-2, 1}, {0, 1}, {2, 1}, {4, 1}}));
    for (int n = 0; n <= 20; ++n) {
        Poly expected;
        for (const auto& [m, c] : crank_distribution(n).counts) expected[m] = c;
        EXPECT_EQ(gf[n], expected) << n;
    }
}

}  // namespace
}  // namespace pdtrank
