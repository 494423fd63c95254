#pragma once

// Irreducible characters of GL(2, F_p): labels, dimensions, the class-by-class
// value table, and induced characters computed straight from the definition.

#include "gl2/group.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gl2 {

enum class IrrepKind { OneDim, Principal, SteinbergTwist, Cuspidal };

/// Exponents against the canonical generators. OneDim(k) = chi_k o det,
/// Principal(k, l) with k < l, SteinbergTwist(k), Cuspidal(k) with k mod p^2-1.
struct IrrepLabel {
    IrrepKind kind = IrrepKind::OneDim;
    std::uint64_t k = 0;
    std::uint64_t l = 0;

    bool operator==(const IrrepLabel&) const = default;

    static IrrepLabel trivial() { return {IrrepKind::OneDim, 0, 0}; }
    static IrrepLabel steinberg() { return {IrrepKind::SteinbergTwist, 0, 0}; }
};

std::string to_string(const IrrepLabel& r);
std::string kind_name(IrrepKind kind);
/// "trivial", "st", "onedim:k", "principal:k,l", "steinberg:k", "cuspidal:k".
/// Parameters are reduced and canonicalised; invalid labels throw.
IrrepLabel parse_irrep_label(std::string_view text, std::uint32_t p);
/// Canonical form of a label, or throws if it names no irreducible.
IrrepLabel canonical_irrep(const IrrepLabel& r, std::uint32_t p);

std::uint64_t irrep_dimension(const IrrepLabel& r, std::uint32_t p);

/// Multiplicity of the eigenvalue 1 in the semisimple class parametrising the
/// irreducible: 2 for the trivial character and St, 1 for I_{chi,1} with chi
/// nontrivial, 0 otherwise.
int unit_multiplicity(const IrrepLabel& r);

/// Immutable character table of GL(2, F_p). Values are evaluated in O(1) from
/// cached discrete logs rather than stored.
class CharacterTable {
public:
    static CharacterTable build(std::uint32_t p);

    std::uint32_t p() const noexcept;
    const ClassInventory& classes() const noexcept;
    const FieldContext& field() const noexcept { return classes().field(); }
    std::uint64_t group_order() const noexcept { return classes().group_order(); }

    std::size_t size() const noexcept;
    const std::vector<IrrepLabel>& irreps() const noexcept;
    const IrrepLabel& irrep(std::size_t i) const;
    std::uint64_t dim(std::size_t i) const;
    std::size_t index_of(const IrrepLabel& r) const;
    std::size_t trivial_index() const { return index_of(IrrepLabel::trivial()); }
    std::size_t steinberg_index() const { return index_of(IrrepLabel::steinberg()); }

    Complex value(std::size_t irrep, std::size_t cls) const;
    std::vector<Complex> row(std::size_t irrep) const;

private:
    struct Impl;
    explicit CharacterTable(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

Complex char_value(const CharacterTable& t, std::size_t irrep, const ClassLabel& c);
/// Extended character: zero on singular matrices.
Complex char_value(const CharacterTable& t, std::size_t irrep, const ModMat2& m);

/// <f, g> = |G|^-1 sum_C |C| f(C) conj(g(C))
Complex class_inner_product(const ClassInventory& inv, const std::vector<Complex>& f, const std::vector<Complex>& g);

/// Inducing data. Borel: theta((a b; 0 d)) = chi_k1(a) chi_k2(d) on upper
/// triangular matrices. MirabolicUnipotent: trivial character of
/// {(1 u; 0 m)}.
struct InducingSubgroup {
    enum class Kind { Borel, MirabolicUnipotent } kind = Kind::Borel;
    std::uint64_t k1 = 0;
    std::uint64_t k2 = 0;

    static InducingSubgroup borel(std::uint64_t k1, std::uint64_t k2) { return {Kind::Borel, k1, k2}; }
    static InducingSubgroup mirabolic_unipotent() { return {Kind::MirabolicUnipotent, 0, 0}; }
};

std::uint64_t subgroup_order(const InducingSubgroup& h, std::uint32_t p);
bool subgroup_contains(const InducingSubgroup& h, const ModMat2& m);
Complex inducing_character(const FieldContext& ctx, const InducingSubgroup& h, const ModMat2& m);

/// (1/|H|) sum_{x in G, x^-1 g x in H} theta(x^-1 g x), one group sweep per
/// call.
Complex induced_character(const ClassInventory& inv, const InducingSubgroup& h, const ClassLabel& target);

/// The whole induced class function at once, from |C_G(g)| / |H| times the sum
/// of theta over H meet class(g). One sweep over H.
std::vector<Complex> induced_character_row(const ClassInventory& inv, const InducingSubgroup& h);

}  // namespace gl2
