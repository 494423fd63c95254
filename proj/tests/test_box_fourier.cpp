#include <gtest/gtest.h>

#include "gl2/box_fourier.hpp"

#include <random>

using namespace gl2;

TEST(LinearSums, ClosedForm) {
    const auto ctx = FieldContext::make(5);
    EXPECT_NEAR(std::abs(additive_interval_sum(*ctx, 0, {3, 9}) - 7.0), 0, 1e-12);
    for (std::int64_t b = 1; b < 5; ++b) EXPECT_NEAR(std::abs(additive_interval_sum(*ctx, b, {-2, 2})), 0, 1e-12);
    const Complex want = 1.0 + ctx->additive(1) + ctx->additive(2);
    const Complex got = additive_interval_sum(*ctx, 1, {0, 2});
    EXPECT_NEAR(std::abs(got - want), 0, 1e-12);
    EXPECT_LE(std::abs(got), 2.5);
}

TEST(IndicatorTransform, FullBox) {
    const std::uint32_t p = 5;
    const auto ctx = FieldContext::make(p);
    const MatrixInterval full = MatrixInterval::full(p);
    EXPECT_NEAR(std::abs(interval_indicator_ft(*ctx, full, ModMat2::zero(p)) - 1.0), 0, 1e-12);
    EXPECT_NEAR(std::abs(interval_indicator_ft(*ctx, full, ModMat2(0, 2, 0, 0, p))), 0, 1e-12);
}

TEST(IndicatorTransform, MatchesDefinition) {
    const std::uint32_t p = 5;
    const auto ctx = FieldContext::make(p);
    const MatrixInterval box{{{{-1, 1}, {0, 2}, {-2, 0}, {1, 1}}}};
    const IndicatorFactors fac = indicator_factors(*ctx, box);
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    for (int i = 0; i < 20; ++i) {
        const ModMat2 b(d(rng), d(rng), d(rng), d(rng), p);
        Complex s = 0;
        for (auto x11 = box.entry[0].lo; x11 <= box.entry[0].hi; ++x11)
            for (auto x12 = box.entry[1].lo; x12 <= box.entry[1].hi; ++x12)
                for (auto x21 = box.entry[2].lo; x21 <= box.entry[2].hi; ++x21)
                    for (auto x22 = box.entry[3].lo; x22 <= box.entry[3].hi; ++x22)
                        s += ctx->additive(-std::int64_t(b.trace_product(ModMat2(x11, x12, x21, x22, p))));
        s /= double(p) * p * p * p;
        const Complex v = interval_indicator_ft(*ctx, box, b);
        EXPECT_NEAR(std::abs(v - s), 0, 1e-12);
        EXPECT_NEAR(std::abs(fac(b.a11(), b.a12(), b.a21(), b.a22()) - s), 0, 1e-12);
        EXPECT_LE(std::abs(v), interval_indicator_ft_bound(*ctx, box, b) + 1e-12);
    }
}

TEST(BoxSums, TrivialAndFullBox) {
    const CharacterTable t = CharacterTable::build(3);
    const GaussTable gt(t);
    EXPECT_NEAR(std::abs(box_char_sum(gt, t.trivial_index(), MatrixInterval::box(1), SumMethod::Direct) - 48.0), 0,
                1e-9);
    const auto full = box_char_sums(gt, MatrixInterval::full(3), SumMethod::Plancherel);
    for (std::size_t r = 0; r < t.size(); ++r)
        if (r != t.trivial_index()) EXPECT_NEAR(std::abs(full[r]), 0, 1e-9);
}

TEST(BoxSums, PlancherelAgreesWithDirect) {
    for (std::uint32_t p : {5u, 7u}) {
        const CharacterTable t = CharacterTable::build(p);
        const GaussTable gt(t);
        const std::vector<MatrixInterval> boxes{MatrixInterval::box(1), MatrixInterval::box(2),
                                                MatrixInterval::shifted(IntMat2{3, -1, 4, 2}, 2),
                                                MatrixInterval{{{{0, 3}, {-5, 1}, {2, 2}, {-1, 8}}}}};
        for (const auto& box : boxes) {
            const auto direct = box_char_sums(gt, box, SumMethod::Direct);
            const auto planch = box_char_sums(gt, box, SumMethod::Plancherel);
            for (std::size_t r = 0; r < t.size(); ++r) {
                EXPECT_NEAR(std::abs(direct[r] - planch[r]), 0, 1e-6);
                if (r % 5 == 0)
                    EXPECT_NEAR(std::abs(box_char_sum(gt, r, box, SumMethod::Plancherel) - direct[r]), 0, 1e-6);
            }
        }
    }
}

TEST(BoxSums, PvScanAtEleven) {
    const CharacterTable t = CharacterTable::build(11);
    const GaussTable gt(t);
    const PvScanReport rep = pv_scan(gt, {1, 3, 5, 10});
    EXPECT_TRUE(rep.asserted);
    EXPECT_EQ(rep.rows.size(), 4 * (t.size() - 1));
    EXPECT_LE(rep.max_ratio, 16.0);
}

TEST(BoxSums, ShiftedScanBound) {
    const CharacterTable t = CharacterTable::build(13);
    const GaussTable gt(t);
    PvScanOptions opts;
    opts.c = 1.0;
    opts.shift = IntMat2{5, -7, 2, 11};
    const PvScanReport rep = pv_scan(gt, {1, 2, 4, 6}, opts);
    EXPECT_DOUBLE_EQ(rep.bound, 16.0);
    EXPECT_LE(rep.max_ratio, rep.bound);
}

TEST(Plancherel, Identities) {
    const std::uint32_t p = 3;
    const std::size_t n = 81;
    std::vector<Complex> delta(n, 0.0), ones(n, 1.0);
    delta[0] = 1.0;
    EXPECT_NEAR(plancherel_check(p, delta, delta), 0, 1e-12);
    EXPECT_NEAR(plancherel_check(p, ones, ones), 0, 1e-12);
    const auto hat = matrix_fourier_transform(p, ones);
    EXPECT_NEAR(std::abs(hat[0] - 1.0), 0, 1e-12);
    for (std::size_t i = 1; i < n; ++i) EXPECT_NEAR(std::abs(hat[i]), 0, 1e-12);

    const CharacterTable t = CharacterTable::build(p);
    std::vector<Complex> st(n), box(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ModMat2 m(i / 27, (i / 9) % 3, (i / 3) % 3, i % 3, p);
        st[i] = char_value(t, t.steinberg_index(), m);
        box[i] = 1.0;
    }
    EXPECT_LT(plancherel_check(p, st, box), 1e-9);
}

TEST(Histogram, CountsEveryPoint) {
    const ClassInventory inv = ClassInventory::make(5);
    const ClassHistogram h = box_class_histogram(inv, MatrixInterval::box(2));
    std::uint64_t total = h.singular;
    for (auto c : h.per_class) total += c;
    EXPECT_EQ(total, 625u);
}
