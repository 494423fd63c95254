#include <gtest/gtest.h>

#include "gl2/gauss_sums.hpp"

#include <random>

using namespace gl2;

TEST(GaussSums, ZeroMatrixIsOrthogonality) {
    const CharacterTable t = CharacterTable::build(5);
    const GaussTable gt(t);
    for (std::size_t r = 0; r < t.size(); ++r) {
        const Complex v = gauss_trace_closed(gt, r, ModMat2::zero(5));
        const double want = r == t.trivial_index() ? double(t.group_order()) : 0.0;
        EXPECT_NEAR(std::abs(v - want), 0, 1e-9) << to_string(t.irrep(r));
        EXPECT_NEAR(std::abs(gauss_trace_bruteforce(t, r, ModMat2::zero(5)) - want), 0, 1e-6);
    }
}

TEST(GaussSums, SteinbergAtNilpotent) {
    const CharacterTable t = CharacterTable::build(3);
    const GaussTable gt(t);
    const ModMat2 n(0, 1, 0, 0, 3);
    EXPECT_NEAR(std::abs(gauss_trace_closed(gt, t.steinberg_index(), n) - 18.0), 0, 1e-9);
    EXPECT_NEAR(std::abs(gauss_trace_bruteforce(t, t.steinberg_index(), n) - 18.0), 0, 1e-9);
}

TEST(GaussSums, UnitPrincipalAtRankOneIdempotent) {
    const CharacterTable t = CharacterTable::build(5);
    const GaussTable gt(t);
    const std::size_t r = t.index_of({IrrepKind::Principal, 0, 2});
    const ModMat2 a1(1, 0, 0, 0, 5);
    const double want = 20 * std::sqrt(5.0);
    EXPECT_NEAR(std::abs(gauss_trace_closed(gt, r, a1) - want), 0, 1e-9);
    EXPECT_NEAR(std::abs(gauss_trace_bruteforce(t, r, a1) - want), 0, 1e-6);
}

TEST(GaussSums, CuspidalVanishesOnSingular) {
    const CharacterTable t = CharacterTable::build(7);
    const GaussTable gt(t);
    const std::vector<ModMat2> singular{ModMat2(1, 0, 0, 0, 7), ModMat2(0, 1, 0, 0, 7), ModMat2(2, 4, 1, 2, 7)};
    for (std::size_t r = 0; r < t.size(); ++r) {
        if (t.irrep(r).kind != IrrepKind::Cuspidal) continue;
        for (const auto& a : singular) EXPECT_NEAR(std::abs(gauss_trace_closed(gt, r, a)), 0, 1e-9);
    }
}

TEST(GaussSums, ScalarAtIdentityIsTraceOverDimension) {
    const CharacterTable t = CharacterTable::build(3);
    const auto brute = gauss_trace_bruteforce_all(t, ModMat2::identity(3));
    for (std::size_t r = 0; r < t.size(); ++r) {
        EXPECT_NEAR(std::abs(g_scalar(t, r) * double(t.dim(r)) - brute[r]), 0, 1e-9);
        const double k = unit_multiplicity(t.irrep(r));
        EXPECT_NEAR(std::abs(g_scalar(t, r)), std::pow(3.0, (4 - k) / 2), 1e-9) << to_string(t.irrep(r));
    }
}

TEST(GaussSums, ClosedFormMatchesBruteForce) {
    for (std::uint32_t p : {3u, 5u}) {
        const CharacterTable t = CharacterTable::build(p);
        const GaussTable gt(t);
        std::mt19937_64 rng(p);
        std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
        for (int i = 0; i < 12; ++i) {
            const ModMat2 a(d(rng), d(rng), d(rng), d(rng), p);
            const auto brute = gauss_trace_bruteforce_all(t, a);
            const auto cells = gauss_trace_cells_all(t, a);
            for (std::size_t r = 0; r < t.size(); ++r) {
                EXPECT_NEAR(std::abs(gauss_trace_closed(gt, r, a) - brute[r]), 0, 1e-6)
                    << to_string(t.irrep(r)) << " A=" << to_literal(a);
                EXPECT_NEAR(std::abs(cells[r].total() - brute[r]), 0, 1e-6);
                EXPECT_NEAR(std::abs(gauss_trace_cells(t, r, a).total() - brute[r]), 0, 1e-6);
            }
        }
    }
}

TEST(GaussSums, SingularTypes) {
    EXPECT_TRUE(singular_type(ModMat2(0, 3, 0, 0, 5)).nilpotent);
    const SingularType s = singular_type(ModMat2(2, 4, 1, 2, 5));
    EXPECT_FALSE(s.nilpotent);
    EXPECT_EQ(s.a, 4u);
    EXPECT_EQ(singular_representative(s, 5), ModMat2(4, 0, 0, 0, 5));
}

TEST(CharFourier, Bounds) {
    const std::uint32_t p = 7;
    const CharacterTable t = CharacterTable::build(p);
    const GaussTable gt(t);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    for (int i = 0; i < 40; ++i) {
        const ModMat2 a(d(rng), d(rng), d(rng), d(rng), p);
        if (a.is_zero()) continue;
        const bool central = a.is_invertible() && a.is_scalar();
        for (std::size_t r = 0; r < t.size(); ++r) {
            if (r == t.trivial_index()) continue;
            const double v = std::abs(char_ft(gt, r, a));
            EXPECT_LE(v, double(t.dim(r)) / (p * p) + 1e-12);
            if (a.is_invertible() && !central) EXPECT_LE(v, 2.0 / (p * p) + 1e-12);
        }
    }
    for (std::size_t r = 0; r < t.size(); ++r)
        if (r != t.trivial_index()) EXPECT_NEAR(std::abs(char_ft(gt, r, ModMat2::zero(p))), 0, 1e-12);
}
