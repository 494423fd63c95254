#pragma once

// Matrix intervals, additive characters of M(2, F_p), Fourier transforms of
// interval indicators, and character sums over boxes.

#include "gl2/gauss_sums.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace gl2 {

struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    std::int64_t length() const noexcept { return hi - lo + 1; }
};

/// Product of four integer intervals, one per entry, ordered (11, 12, 21, 22).
struct MatrixInterval {
    std::array<Interval, 4> entry;

    static MatrixInterval box(std::int64_t x) { return {{{{-x, x}, {-x, x}, {-x, x}, {-x, x}}}}; }
    static MatrixInterval shifted(const IntMat2& centre, std::int64_t x);
    static MatrixInterval full(std::uint32_t p) {
        const std::int64_t h = std::int64_t(p) - 1;
        return {{{{0, h}, {0, h}, {0, h}, {0, h}}}};
    }

    std::uint64_t cardinality() const;
    std::int64_t max_length() const;
    /// Smallest c with every component length <= c p.
    double length_budget(std::uint32_t p) const;
};

/// sum_{lo <= n <= hi} e_p(b n) in closed form; asserts
/// |value| <= min(N, 1 / (2 ||b/p||)).
Complex additive_interval_sum(const FieldContext& ctx, std::int64_t b, const Interval& range);

/// delta-hat(B) = p^-4 sum_{X in interval} e_p(-Tr(BX)). For intervals longer
/// than p this is the transform of the multiplicity function of the image mod
/// p. Asserts the product bound.
Complex interval_indicator_ft(const FieldContext& ctx, const MatrixInterval& box, const ModMat2& b);
double interval_indicator_ft_bound(const FieldContext& ctx, const MatrixInterval& box, const ModMat2& b);

/// The four one-dimensional factors of delta-hat, tabulated over b in F_p.
/// factor[k][b] pairs b_{ij} with the interval of x_{ji}.
struct IndicatorFactors {
    std::array<std::vector<Complex>, 4> factor;
    Complex operator()(std::uint32_t b11, std::uint32_t b12, std::uint32_t b21, std::uint32_t b22) const {
        return factor[0][b11] * factor[1][b12] * factor[2][b21] * factor[3][b22];
    }
};
IndicatorFactors indicator_factors(const FieldContext& ctx, const MatrixInterval& box);

/// Number of integer matrices of the interval in each class, plus the number
/// of singular ones. Enumerates the interval.
struct ClassHistogram {
    std::vector<std::uint64_t> per_class;
    std::uint64_t singular = 0;
};
ClassHistogram box_class_histogram(const ClassInventory& inv, const MatrixInterval& box);

enum class SumMethod { Direct, Plancherel };

inline constexpr std::uint64_t kDirectCardinalityLimit = 100'000'000;

/// S(chi_rho, I) = sum_{A in I} chi_rho(A mod p). Direct enumerates the
/// interval; Plancherel evaluates p^4 sum_B chi-hat(B) conj(delta-hat(B)).
Complex box_char_sum(const GaussTable& gt, std::size_t irrep, const MatrixInterval& box, SumMethod method);

/// All irreducibles at once. Plancherel here groups the B-sum by the class of
/// (-B)^-1 (invertible B) or the type of -B (singular B), which is the same sum
/// reorganised.
std::vector<Complex> box_char_sums(const GaussTable& gt, const MatrixInterval& box, SumMethod method);

struct PvRow {
    std::size_t irrep;
    std::int64_t x;
    double abs_sum;
    double ratio;  // |S| / (d p^2 (log p)^4)
};

struct PvScanOptions {
    double c = 1.0;
    std::optional<IntMat2> shift;
};

struct PvScanReport {
    std::uint32_t p;
    std::vector<PvRow> rows;
    double max_ratio = 0;
    double bound = 16;
    bool asserted = false;
};

/// Scans every nontrivial irreducible over the boxes (shift +) [-x, x]^4 and
/// asserts the Polya-Vinogradov constant: 16 for centred boxes with x < p and
/// p >= 11, ((c+3)/2)^4 for shifted boxes whose lengths fit in c p.
PvScanReport pv_scan(const GaussTable& gt, const std::vector<std::int64_t>& xs, const PvScanOptions& opts = {});

/// p^-4 sum_X f(X) conj(g(X)) versus sum_B f-hat(B) conj(g-hat(B)); returns the
/// absolute deviation. Values are indexed ((x11 p + x12) p + x21) p + x22.
double plancherel_check(std::uint32_t p, const std::vector<Complex>& f, const std::vector<Complex>& g);

/// f-hat(B) = p^-4 sum_X f(X) e_p(-Tr(BX)), as a separable transform, indexed
/// like the input by (b11, b12, b21, b22).
std::vector<Complex> matrix_fourier_transform(std::uint32_t p, const std::vector<Complex>& f);

/// The additive character psi_B(X) = e_p(Tr(BX)).
Complex additive_character(const FieldContext& ctx, const ModMat2& b, const ModMat2& x);

}  // namespace gl2
