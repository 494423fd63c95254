#include <gtest/gtest.h>

#include "gl2/group.hpp"

#include <map>
#include <random>

using namespace gl2;

TEST(Matrices, LiteralRoundTrip) {
    const IntMat2 m = parse_matrix_literal("1, -2; 30,4");
    EXPECT_EQ(m, (IntMat2{1, -2, 30, 4}));
    EXPECT_EQ(m.height(), 30);
    EXPECT_EQ(parse_matrix_literal(to_literal(m)), m);
    EXPECT_THROW(parse_matrix_literal("1,2;3"), std::invalid_argument);
    EXPECT_THROW(parse_matrix_literal("1,2;3,x"), std::invalid_argument);
    EXPECT_THROW(parse_matrix_literal(""), std::invalid_argument);
}

TEST(Matrices, ReductionIsRingHomomorphism) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> d(-50, 50);
    for (int i = 0; i < 200; ++i) {
        IntMat2 a{d(rng), d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng), d(rng)};
        EXPECT_EQ(reduce(a * b, 11), reduce(a, 11) * reduce(b, 11));
        EXPECT_EQ(reduce(a + b, 11), reduce(a, 11) + reduce(b, 11));
        EXPECT_EQ(reduce(a, 11).det(), std::uint32_t(floor_mod(a.det(), 11)));
    }
}

TEST(Matrices, InverseAndPowers) {
    const ModMat2 a(2, 3, 1, 4, 7);
    EXPECT_EQ(a * a.inverse(), ModMat2::identity(7));
    EXPECT_EQ(a.pow(0), ModMat2::identity(7));
    EXPECT_EQ(a.pow(3), a * a * a);
    EXPECT_THROW(ModMat2(1, 2, 2, 4, 7).inverse(), std::domain_error);
    EXPECT_EQ(a.trace_product(ModMat2(5, 6, 0, 1, 7)), (a * ModMat2(5, 6, 0, 1, 7)).trace());
}

TEST(Matrices, GroupOrder) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        std::uint64_t n = 0;
        for_each_invertible(p, [&](const ModMat2&) { ++n; });
        EXPECT_EQ(n, group_order(p));
    }
}

TEST(Classes, Classification) {
    auto ctx = FieldContext::make(5);
    EXPECT_EQ(classify_conjugacy(*ctx, ModMat2::identity(5)), (ClassLabel{ClassKind::Central, 1, 0}));
    EXPECT_EQ(classify_conjugacy(*ctx, ModMat2(1, 1, 0, 1, 5)), (ClassLabel{ClassKind::NonSemisimple, 1, 0}));
    EXPECT_EQ(classify_conjugacy(*ctx, ModMat2(0, 2, 1, 0, 5)).kind, ClassKind::Elliptic);
    EXPECT_EQ(classify_conjugacy(*ctx, ModMat2(3, 0, 0, 2, 5)), (ClassLabel{ClassKind::Split, 2, 3}));
}

TEST(Classes, InventoryAtThree) {
    const ClassInventory inv = ClassInventory::make(3);
    ASSERT_EQ(inv.size(), 8u);
    std::map<ClassKind, int> kinds;
    std::uint64_t total = 0;
    for (const auto& c : inv.classes()) {
        ++kinds[c.label.kind];
        total += c.size;
    }
    EXPECT_EQ(kinds[ClassKind::Central], 2);
    EXPECT_EQ(kinds[ClassKind::NonSemisimple], 2);
    EXPECT_EQ(kinds[ClassKind::Split], 1);
    EXPECT_EQ(kinds[ClassKind::Elliptic], 3);
    EXPECT_EQ(total, 48u);
}

TEST(Classes, InventoryMatchesOrbitSweep) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const ClassInventory inv = ClassInventory::make(p);
        EXPECT_EQ(inv.size(), std::size_t(p) * p - 1);
        std::vector<std::uint64_t> seen(inv.size());
        for_each_invertible(p, [&](const ModMat2& m) {
            const std::size_t k = inv.index_of(m);
            ++seen[k];
            EXPECT_EQ(classify_conjugacy(inv.field(), m), inv[k].label);
            EXPECT_EQ(element_order(m), inv[k].element_order);
        });
        for (std::size_t k = 0; k < inv.size(); ++k) {
            EXPECT_EQ(seen[k], inv[k].size) << to_string(inv[k].label);
            EXPECT_EQ(inv.index_of(inv[k].label), k);
            EXPECT_EQ(inv.index_of(class_representative(inv.field(), inv[k].label)), k);
            EXPECT_EQ(parse_class_label(to_string(inv[k].label), p), inv[k].label);
        }
    }
}

TEST(Classes, ConjugationInvariance) {
    const ClassInventory inv = ClassInventory::make(7);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint32_t> d(0, 6);
    for (int i = 0; i < 300; ++i) {
        ModMat2 a(d(rng), d(rng), d(rng), d(rng), 7), z(d(rng), d(rng), d(rng), d(rng), 7);
        if (!a.is_invertible() || !z.is_invertible()) continue;
        EXPECT_EQ(inv.index_of(a), inv.index_of(z * a * z.inverse()));
    }
}

TEST(Classes, LabelErrors) {
    EXPECT_THROW(parse_class_label("split:2,2", 5), std::invalid_argument);
    EXPECT_THROW(parse_class_label("central:0", 5), std::invalid_argument);
    EXPECT_THROW(parse_class_label("bogus:1", 5), std::invalid_argument);
    EXPECT_THROW(parse_class_label("elliptic:1,0", 5), std::invalid_argument);
}

TEST(Bruhat, FactorizationReassembles) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for_each_invertible(p, [&](const ModMat2& m) {
            const BruhatFactorization f = bruhat_factorize(m);
            EXPECT_EQ(f.reassemble(), m);
            EXPECT_EQ(f.cell == BruhatCell::PU, m.a11() != 0);
        });
    }
}

TEST(Bruhat, SimpleCases) {
    const auto id = bruhat_factorize(ModMat2::identity(5));
    EXPECT_EQ(id.cell, BruhatCell::PU);
    EXPECT_EQ(id.u, 0u);
    EXPECT_EQ(id.l, 1u);
    EXPECT_EQ(id.m, 1u);
    EXPECT_EQ(id.u_prime, 0u);

    const auto w = bruhat_factorize(ModMat2(0, 1, 1, 0, 5));
    EXPECT_EQ(w.cell, BruhatCell::WP);
    EXPECT_EQ(w.l, 1u);
    EXPECT_EQ(w.m, 1u);
    EXPECT_EQ(w.u_prime, 0u);
}

TEST(Sets, CardinalitiesAtThree) {
    const ClassInventory inv = ClassInventory::make(3);
    EXPECT_EQ(set_cardinality(inv, {SetKind::Elliptic, std::nullopt}), 18u);
    EXPECT_EQ(set_cardinality(inv, {SetKind::Primitive, std::nullopt}), 12u);
    EXPECT_EQ(set_cardinality(inv, {SetKind::Nonsingular, std::nullopt}), 48u);
    EXPECT_EQ(set_cardinality(inv, {SetKind::DiscZero, std::nullopt}), 27u);
}

TEST(Sets, CardinalityMatchesMembership) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const ClassInventory inv = ClassInventory::make(p);
        std::vector<ResidueSet> sets{{SetKind::Nonsingular, std::nullopt},
                                     {SetKind::Elliptic, std::nullopt},
                                     {SetKind::Primitive, std::nullopt},
                                     {SetKind::DiscZero, std::nullopt},
                                     {SetKind::Class, ClassLabel{ClassKind::Split, 1, 2}}};
        for (const auto& s : sets) {
            const auto table = membership_table(inv, s);
            std::uint64_t n = 0;
            for (auto f : table) n += f;
            EXPECT_EQ(n, set_cardinality(inv, s)) << to_string(s) << " p=" << p;
            EXPECT_EQ(parse_residue_set(to_string(s), p).kind, s.kind);
        }
    }
    EXPECT_THROW(parse_residue_set("odd", 5), std::invalid_argument);
}
