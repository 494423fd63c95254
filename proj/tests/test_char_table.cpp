#include <gtest/gtest.h>

#include "gl2/char_table.hpp"
#include "gl2/induced_model.hpp"

using namespace gl2;

namespace {

std::size_t class_of(const CharacterTable& t, ClassKind kind, std::uint32_t a, std::uint32_t b = 0) {
    return t.classes().index_of(ClassLabel{kind, a, b});
}

}  // namespace

TEST(Irreps, LabelsParseAndCanonicalise) {
    EXPECT_EQ(parse_irrep_label("trivial", 5), IrrepLabel::trivial());
    EXPECT_EQ(parse_irrep_label("st", 5), IrrepLabel::steinberg());
    EXPECT_EQ(parse_irrep_label("principal:3,1", 5), (IrrepLabel{IrrepKind::Principal, 1, 3}));
    // k and kp give the same cuspidal representation.
    EXPECT_EQ(parse_irrep_label("cuspidal:5", 5), parse_irrep_label("cuspidal:1", 5));
    EXPECT_THROW(parse_irrep_label("cuspidal:6", 5), std::invalid_argument);
    EXPECT_THROW(parse_irrep_label("principal:2,2", 5), std::invalid_argument);
    EXPECT_THROW(parse_irrep_label("nonsense", 5), std::invalid_argument);
    EXPECT_EQ(irrep_dimension(IrrepLabel::steinberg(), 7), 7u);
    EXPECT_EQ(irrep_dimension({IrrepKind::Cuspidal, 1, 0}, 7), 6u);
    EXPECT_EQ(irrep_dimension({IrrepKind::Principal, 0, 1}, 7), 8u);
}

TEST(Irreps, UnitMultiplicity) {
    EXPECT_EQ(unit_multiplicity(IrrepLabel::trivial()), 2);
    EXPECT_EQ(unit_multiplicity(IrrepLabel::steinberg()), 2);
    EXPECT_EQ(unit_multiplicity({IrrepKind::Principal, 0, 2}), 1);
    EXPECT_EQ(unit_multiplicity({IrrepKind::Principal, 1, 2}), 0);
    EXPECT_EQ(unit_multiplicity({IrrepKind::Cuspidal, 1, 0}), 0);
    EXPECT_EQ(unit_multiplicity({IrrepKind::OneDim, 1, 0}), 0);
}

TEST(CharacterTable, ShapeAndDimensions) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        const CharacterTable t = CharacterTable::build(p);
        EXPECT_EQ(t.size(), t.classes().size());
        std::uint64_t sum = 0;
        for (std::size_t r = 0; r < t.size(); ++r) {
            sum += t.dim(r) * t.dim(r);
            const std::size_t id = class_of(t, ClassKind::Central, 1);
            EXPECT_NEAR(t.value(r, id).real(), double(t.dim(r)), 1e-9);
        }
        EXPECT_EQ(sum, t.group_order());
    }
    EXPECT_THROW(CharacterTable::build(103), std::invalid_argument);
}

TEST(CharacterTable, Orthogonality) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        const CharacterTable t = CharacterTable::build(p);
        for (std::size_t r = 0; r < t.size(); ++r)
            for (std::size_t s = 0; s < t.size(); ++s) {
                const Complex ip = class_inner_product(t.classes(), t.row(r), t.row(s));
                EXPECT_NEAR(std::abs(ip - Complex(r == s ? 1 : 0)), 0.0, 1e-9);
            }
    }
}

TEST(CharacterTable, SpecificValues) {
    const std::uint32_t p = 5;
    const CharacterTable t = CharacterTable::build(p);
    const std::size_t st = t.steinberg_index();
    for (const auto& c : t.classes().classes()) {
        const std::size_t k = t.classes().index_of(c.label);
        if (c.label.kind == ClassKind::Elliptic) EXPECT_NEAR(std::abs(t.value(st, k) + 1.0), 0, 1e-12);
        if (c.label.kind == ClassKind::Central) EXPECT_NEAR(std::abs(t.value(st, k) - double(p)), 0, 1e-12);
        for (std::size_t r = 0; r < t.size(); ++r) {
            if (t.irrep(r).kind == IrrepKind::Principal && c.label.kind == ClassKind::Elliptic)
                EXPECT_NEAR(std::abs(t.value(r, k)), 0, 1e-12);
            if (c.label.kind != ClassKind::Central && r != t.trivial_index())
                EXPECT_LE(std::abs(t.value(r, k)), 2 + 1e-9);
        }
    }
}

TEST(CharacterTable, CuspidalValueOnElliptic) {
    const std::uint32_t p = 5;
    const CharacterTable t = CharacterTable::build(p);
    const FieldContext& f = t.field();
    const std::size_t r = t.index_of({IrrepKind::Cuspidal, 1, 0});
    for (const auto& c : t.classes().classes()) {
        if (c.label.kind != ClassKind::Elliptic) continue;
        const std::int64_t j = f.dlog2(c.label.a, c.label.b);
        const Complex phi = f.unit_root_quad(j), phi_p = f.unit_root_quad(j * p);
        EXPECT_NEAR(std::abs(t.value(r, t.classes().index_of(c.label)) + phi + phi_p), 0, 1e-9);
    }
}

TEST(CharacterTable, ValueOnMatrices) {
    const CharacterTable t = CharacterTable::build(7);
    const ModMat2 m(2, 5, 3, 1, 7);
    for (std::size_t r = 0; r < t.size(); ++r) {
        EXPECT_EQ(char_value(t, r, m), t.value(r, t.classes().index_of(m)));
        EXPECT_EQ(char_value(t, r, ModMat2(1, 2, 2, 4, 7)), Complex(0));
    }
}

TEST(Induction, LiteralOracleMatchesBinnedRow) {
    const ClassInventory inv = ClassInventory::make(5);
    for (const auto& h : {InducingSubgroup::mirabolic_unipotent(), InducingSubgroup::borel(1, 3)}) {
        const auto row = induced_character_row(inv, h);
        for (std::size_t k = 0; k < inv.size(); ++k)
            EXPECT_NEAR(std::abs(row[k] - induced_character(inv, h, inv[k].label)), 0, 1e-9);
    }
}

TEST(Induction, BorelInductionIsPrincipalSeries) {
    const CharacterTable t = CharacterTable::build(7);
    const auto row = induced_character_row(t.classes(), InducingSubgroup::borel(1, 4));
    const std::size_t r = t.index_of({IrrepKind::Principal, 1, 4});
    for (std::size_t k = 0; k < t.classes().size(); ++k) EXPECT_NEAR(std::abs(row[k] - t.value(r, k)), 0, 1e-9);
}

TEST(InducedModel, IsAHomomorphismWithTheRightCharacter) {
    const CharacterTable t = CharacterTable::build(5);
    const auto ctx = t.classes().field_ptr();
    const InducedModel m = InducedModel::borel(ctx, 1, 2);
    const InducedModel st = InducedModel::steinberg(ctx);
    const std::size_t r = t.index_of({IrrepKind::Principal, 1, 2});
    const ModMat2 a(1, 2, 3, 4, 5), b(0, 1, 1, 1, 5);
    EXPECT_LT((m(a * b) - m(a) * m(b)).norm(), 1e-9);
    EXPECT_LT((st(a * b) - st(a) * st(b)).norm(), 1e-9);
    for_each_invertible(5, [&](const ModMat2& g) {
        const std::size_t k = t.classes().index_of(g);
        EXPECT_NEAR(std::abs(m(g).trace() - t.value(r, k)), 0, 1e-9);
        EXPECT_NEAR(std::abs(st(g).trace() - t.value(t.steinberg_index(), k)), 0, 1e-9);
    });
}

TEST(InducedModel, ProjectionRanks) {
    const auto ctx = FieldContext::make(7);
    EXPECT_EQ(projection_rank(InducedModel::borel(ctx, 2, 0), ProjectionSubgroup::MirabolicUnipotent).rank, 1);
    EXPECT_EQ(projection_rank(InducedModel::borel(ctx, 1, 3), ProjectionSubgroup::MirabolicUnipotent).rank, 0);
    EXPECT_EQ(projection_rank(InducedModel::steinberg(ctx), ProjectionSubgroup::Borel).rank, 1);
    EXPECT_EQ(projection_rank(InducedModel::borel(ctx, 2, 0), ProjectionSubgroup::Borel).rank, 0);
    const auto pr = projection_rank(InducedModel::borel(ctx, 2, 0), ProjectionSubgroup::MirabolicUnipotent);
    ASSERT_TRUE(pr.invariant.has_value());
    Eigen::VectorXcd delta = Eigen::VectorXcd::Zero(8);
    delta(0) = 1;
    EXPECT_NEAR(alignment(*pr.invariant, delta), 1.0, 1e-9);
    EXPECT_LT(pr.idempotency_error, 1e-9);
}
