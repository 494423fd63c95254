#include <gtest/gtest.h>

#include "gl2/arith.hpp"

#include <numeric>

using namespace gl2;

TEST(Arith, Primality) {
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(101));
    EXPECT_FALSE(is_prime(91));
    EXPECT_TRUE(is_prime(2003));
}

TEST(Arith, DivisorFunctions) {
    auto f8 = arith_functions(8);
    EXPECT_EQ(f8.divisors, (std::vector<std::uint64_t>{1, 2, 4, 8}));
    EXPECT_EQ(f8.mobius, 0);
    EXPECT_EQ(f8.totient, 4u);
    EXPECT_EQ(f8.num_divisors, 4u);

    auto f1 = arith_functions(1);
    EXPECT_EQ(f1.divisors, (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(f1.mobius, 1);
    EXPECT_EQ(f1.totient, 1u);

    auto f24 = arith_functions(24);
    EXPECT_EQ(f24.divisors, (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 12, 24}));
    EXPECT_EQ(f24.mobius, 0);
    EXPECT_EQ(f24.totient, 8u);
}

TEST(Arith, MobiusAgainstSieve) {
    // mu(n) from the defining sum over divisors.
    for (std::uint64_t n = 1; n <= 200; ++n) {
        int s = 0;
        for (auto d : divisors(n)) s += mobius(d);
        EXPECT_EQ(s, n == 1 ? 1 : 0) << n;
        std::uint64_t phi = 0;
        for (std::uint64_t k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
        EXPECT_EQ(totient(n), phi) << n;
    }
}

TEST(Arith, FloorModAndDiv) {
    EXPECT_EQ(floor_mod(-1, 7), 6);
    EXPECT_EQ(floor_mod(-8, 7), 6);
    EXPECT_EQ(floor_div(-1, 7), -1);
    EXPECT_EQ(floor_div(13, 7), 1);
}

TEST(Arith, FieldElementOps) {
    FieldElement a(3, 7), b(5, 7);
    EXPECT_EQ((a + b).value(), 1u);
    EXPECT_EQ((a - b).value(), 5u);
    EXPECT_EQ((a * b).value(), 1u);
    EXPECT_EQ((a / b).value(), 2u);
    EXPECT_EQ(a.inverse().value(), 5u);
    EXPECT_EQ(FieldElement(-1, 7).value(), 6u);
    EXPECT_THROW(FieldElement(1, 9), std::invalid_argument);
    EXPECT_THROW(FieldElement(0, 7).inverse(), std::domain_error);
}

TEST(Arith, DiscreteLogTables) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 101u}) {
        auto ctx = FieldContext::make(p);
        EXPECT_EQ(ctx->order(ctx->generator()), p - 1);
        EXPECT_EQ(ctx->legendre(ctx->tau()), -1);
        for (std::uint32_t a = 1; a < p; ++a) EXPECT_EQ(ctx->gen_pow(std::uint64_t(ctx->dlog(a))), a);
        auto [gx, gy] = ctx->quad_generator();
        EXPECT_EQ(ctx->quad_element_order(gx, gy), ctx->quad_order());
        for (std::uint32_t x = 0; x < p; ++x)
            for (std::uint32_t y = 0; y < p; ++y) {
                if (x == 0 && y == 0) continue;
                EXPECT_EQ(ctx->gen2_pow(std::uint64_t(ctx->dlog2(x, y))), std::make_pair(x, y));
            }
    }
}

TEST(Arith, CharacterValues) {
    auto ctx = FieldContext::make(5);
    ASSERT_EQ(ctx->generator(), 2u);
    MulCharacter trivial(ctx, UnitGroup::PrimeField, 0);
    MulCharacter chi1(ctx, UnitGroup::PrimeField, 1);
    MulCharacter chi2(ctx, UnitGroup::PrimeField, 2);
    EXPECT_TRUE(approx_equal(trivial(FieldElement(3, 5)), 1.0));
    EXPECT_TRUE(approx_equal(chi1(FieldElement(2, 5)), Complex(0, 1)));
    EXPECT_TRUE(approx_equal(chi2(FieldElement(4, 5)), 1.0));
}

TEST(Arith, ClassicalGaussSums) {
    auto c5 = FieldContext::make(5);
    EXPECT_TRUE(approx_equal(classical_gauss_sum(MulCharacter(c5, UnitGroup::PrimeField, 0)), -1.0));
    const Complex legendre = classical_gauss_sum(MulCharacter(c5, UnitGroup::PrimeField, 2));
    EXPECT_NEAR(legendre.real(), std::sqrt(5.0), 1e-9);
    EXPECT_NEAR(legendre.imag(), 0.0, 1e-9);

    auto c7 = FieldContext::make(7);
    EXPECT_NEAR(std::abs(classical_gauss_sum(MulCharacter(c7, UnitGroup::PrimeField, 3))), std::sqrt(7.0), 1e-9);
    for (std::int64_t k = 1; k < 6; ++k)
        EXPECT_NEAR(std::abs(classical_gauss_sum(MulCharacter(c7, UnitGroup::PrimeField, k))), std::sqrt(7.0), 1e-9);
}

TEST(Arith, QuadraticNorm) {
    auto c3 = FieldContext::make(3);
    ASSERT_EQ(c3->tau(), 2u);
    EXPECT_EQ(quad_ext_norm(QuadExtElement(*c3, 1, 0)).value(), 1u);
    EXPECT_EQ(quad_ext_norm(QuadExtElement(*c3, 0, 1)).value(), 1u);

    auto c5 = FieldContext::make(5);
    ASSERT_EQ(c5->tau(), 2u);
    const QuadExtElement z(*c5, 2, 1);
    EXPECT_EQ(quad_ext_norm(z).value(), 2u);
    const QuadExtElement zp1 = z.pow(6);
    EXPECT_TRUE(zp1.in_base_field());
    EXPECT_EQ(zp1.x().value(), 2u);
    EXPECT_EQ(z.frobenius(), z.pow(5));
}

TEST(Arith, RejectsLargeOrCompositeModulus) {
    EXPECT_THROW(FieldContext::make(9), std::invalid_argument);
    EXPECT_THROW(FieldContext::make(2011), std::invalid_argument);
}
