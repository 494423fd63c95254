#pragma once

// 2x2 matrices over the integers and over F_p, conjugacy classification of
// GL(2, F_p), the class inventory, Bruhat-cell factorisation and the element
// sets used by the counting pipeline.

#include "gl2/arith.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gl2 {

/// Integer 2x2 matrix (a11 a12; a21 a22).
struct IntMat2 {
    std::int64_t a11 = 0, a12 = 0, a21 = 0, a22 = 0;

    /// h(A) = max |a_ij|
    std::int64_t height() const noexcept;
    std::int64_t det() const noexcept { return a11 * a22 - a12 * a21; }
    std::int64_t trace() const noexcept { return a11 + a22; }
    IntMat2 operator*(const IntMat2& o) const noexcept;
    IntMat2 operator+(const IntMat2& o) const noexcept;
    IntMat2 operator-(const IntMat2& o) const noexcept;
    bool operator==(const IntMat2&) const = default;
};

/// Parses "a11,a12;a21,a22" (integers, optional minus signs, spaces allowed).
IntMat2 parse_matrix_literal(std::string_view text);
std::string to_literal(const IntMat2& m);

/// 2x2 matrix over F_p, entries stored as least residues.
class ModMat2 {
public:
    ModMat2(std::int64_t a11, std::int64_t a12, std::int64_t a21, std::int64_t a22, std::uint32_t p);

    static ModMat2 identity(std::uint32_t p) { return {1, 0, 0, 1, p}; }
    static ModMat2 zero(std::uint32_t p) { return {0, 0, 0, 0, p}; }
    static ModMat2 scalar(std::int64_t a, std::uint32_t p) { return {a, 0, 0, a, p}; }

    std::uint32_t modulus() const noexcept { return p_; }
    std::uint32_t a11() const noexcept { return e_[0]; }
    std::uint32_t a12() const noexcept { return e_[1]; }
    std::uint32_t a21() const noexcept { return e_[2]; }
    std::uint32_t a22() const noexcept { return e_[3]; }
    const std::array<std::uint32_t, 4>& entries() const noexcept { return e_; }

    std::uint32_t det() const noexcept;
    std::uint32_t trace() const noexcept;
    /// (a-d)^2 + 4bc = tr^2 - 4 det
    std::uint32_t discriminant() const noexcept;
    bool is_invertible() const noexcept { return det() != 0; }
    bool is_scalar() const noexcept { return e_[1] == 0 && e_[2] == 0 && e_[0] == e_[3]; }
    bool is_zero() const noexcept { return e_ == std::array<std::uint32_t, 4>{0, 0, 0, 0}; }

    ModMat2 inverse() const;
    ModMat2 pow(std::uint64_t n) const;
    ModMat2 operator*(const ModMat2& o) const;
    ModMat2 operator+(const ModMat2& o) const;
    ModMat2 operator-(const ModMat2& o) const;
    ModMat2 operator-() const;
    /// Tr(A X) without forming the product.
    std::uint32_t trace_product(const ModMat2& x) const noexcept;

    bool operator==(const ModMat2&) const = default;

private:
    void require_same_field(const ModMat2& o) const;

    std::array<std::uint32_t, 4> e_{};
    std::uint32_t p_;
};

/// Reduction Z -> F_p, a ring homomorphism on M(2).
ModMat2 reduce(const IntMat2& m, std::uint32_t p);
std::string to_literal(const ModMat2& m);

/// Enumerates GL(2, F_p) row-major lexicographically in (a11, a12, a21, a22),
/// skipping singular matrices.
template <typename Fn>
void for_each_invertible(std::uint32_t p, Fn&& fn) {
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c)
                for (std::uint32_t d = 0; d < p; ++d)
                    if ((std::uint64_t(a) * d + std::uint64_t(p - b) * c) % p != 0)
                        fn(ModMat2(a, b, c, d, p));
}

std::uint64_t group_order(std::uint32_t p) noexcept;

enum class ClassKind { Central, NonSemisimple, Split, Elliptic };

/// Canonical conjugacy-class tag. Parameters by kind:
///   Central(a), NonSemisimple(a): a in F_p^*, b unused (0)
///   Split(a, b): 1 <= a < b <= p-1
///   Elliptic(x, y): zeta = x + tau' y with 1 <= y <= (p-1)/2
struct ClassLabel {
    ClassKind kind = ClassKind::Central;
    std::uint32_t a = 1;
    std::uint32_t b = 0;

    bool operator==(const ClassLabel&) const = default;
};

std::string to_string(const ClassLabel& c);
/// Accepts "central:a", "nonss:a", "split:a,b", "elliptic:x,y".
ClassLabel parse_class_label(std::string_view text, std::uint32_t p);

/// Classifies an invertible matrix from its trace, determinant and scalarity.
ClassLabel classify_conjugacy(const FieldContext& ctx, const ModMat2& m);

/// Multiplicative order by testing divisors of p (p-1) (p+1).
std::uint64_t element_order(const ModMat2& m);

/// Canonical representative: aI, (a 1; 0 a), diag(a, b), d_{x,y} = (x tau y; y x).
ModMat2 class_representative(const FieldContext& ctx, const ClassLabel& c);

struct ClassInfo {
    ClassLabel label;
    ModMat2 representative;
    std::uint64_t size;
    std::uint64_t element_order;
    std::uint32_t trace;
    std::uint32_t det;
    // Discrete logs used for character evaluation. Central / NonSemisimple:
    // log1 = dlog(a), log2 = dlog2(a). Split: log1 = dlog(a), log2 = dlog(b).
    // Elliptic: log1 = dlog(N zeta), log2 = dlog2(zeta).
    std::int64_t log1 = 0;
    std::int64_t log2 = 0;
};

/// The p^2 - 1 classes of GL(2, F_p) in canonical order: Central(a),
/// NonSemisimple(a), Split(a, b) lexicographic, Elliptic(x, y) lexicographic.
class ClassInventory {
public:
    explicit ClassInventory(std::shared_ptr<const FieldContext> ctx);
    static ClassInventory make(std::uint32_t p) { return ClassInventory(FieldContext::make(p)); }

    std::uint32_t p() const noexcept { return ctx_->p(); }
    const FieldContext& field() const noexcept { return *ctx_; }
    const std::shared_ptr<const FieldContext>& field_ptr() const noexcept { return ctx_; }
    std::uint64_t group_order() const noexcept { return gl2::group_order(p()); }

    std::size_t size() const noexcept { return classes_.size(); }
    const std::vector<ClassInfo>& classes() const noexcept { return classes_; }
    const ClassInfo& operator[](std::size_t i) const { return classes_[i]; }

    std::size_t index_of(const ClassLabel& label) const;
    /// Throws for singular input.
    std::size_t index_of(const ModMat2& m) const;
    /// Class index of (a b; c d), or -1 when singular. Residues must be < p.
    std::int64_t index_of(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) const noexcept {
        const std::uint32_t p = ctx_->p();
        const std::uint32_t tr = (a + d) % p;
        const auto det = std::uint32_t((std::uint64_t(a) * d + std::uint64_t(p - b) * c) % p);
        if (det == 0) return -1;
        const std::int32_t idx = by_trace_det_[std::size_t(tr) * p + det];
        if (idx >= 0) return idx;
        // Repeated eigenvalue: central when scalar, otherwise non-semisimple.
        const std::int32_t central = -idx - 1;
        return (b == 0 && c == 0) ? central : central + std::int64_t(p - 1);
    }

private:
    std::shared_ptr<const FieldContext> ctx_;
    std::vector<ClassInfo> classes_;
    // >= 0: class index. < 0: -(central index) - 1 for the repeated-root case.
    std::vector<std::int32_t> by_trace_det_;
    std::vector<std::size_t> split_offset_;
};

enum class BruhatCell { PU, WP };

/// X = x_u x_l x_m x_{u'} (cell PU') or X = w x_l x_m x_{u'} (cell wP'), with
/// x_u = (1 0; u 1), x_l = diag(l, 1), x_m = diag(1, m), x_{u'} = (1 u'; 0 1),
/// w = (0 1; 1 0).
struct BruhatFactorization {
    BruhatCell cell;
    std::uint32_t u = 0;  // unused in cell wP'
    std::uint32_t l = 1;
    std::uint32_t m = 1;
    std::uint32_t u_prime = 0;
    std::uint32_t p = 3;

    ModMat2 reassemble() const;
};

BruhatFactorization bruhat_factorize(const ModMat2& m);

enum class SetKind { Nonsingular, Elliptic, Primitive, DiscZero, Class };

struct ResidueSet {
    SetKind kind = SetKind::Nonsingular;
    std::optional<ClassLabel> class_label;  // only for SetKind::Class
};

std::string to_string(const ResidueSet& s);
/// "nonsingular" | "elliptic" | "primitive" | "disc-zero" | "class:<label>"
ResidueSet parse_residue_set(std::string_view text, std::uint32_t p);

bool set_membership(const ClassInventory& inv, const ModMat2& m, const ResidueSet& set);
/// Closed-form cardinality of the set inside M(2, F_p).
std::uint64_t set_cardinality(const ClassInventory& inv, const ResidueSet& set);

/// Per-class flags (indexed like ClassInventory). Not defined for DiscZero,
/// which contains singular matrices.
std::vector<std::uint8_t> class_membership(const ClassInventory& inv, const ResidueSet& set);

/// Per-residue membership flags for all p^4 matrices, indexed
/// ((a p + b) p + c) p + d.
std::vector<std::uint8_t> membership_table(const ClassInventory& inv, const ResidueSet& set);

}  // namespace gl2
