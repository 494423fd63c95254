#pragma once

// Exact counts of integer matrices of bounded height by reduction mod p,
// main-term comparisons, the primitive-indicator Fourier expansion and the
// shifted-generator counts over F_{p^2}.

#include "gl2/box_fourier.hpp"

#include <functional>
#include <string>

namespace gl2 {

/// #{n in [lo, hi] : n = r mod p}
std::int64_t residue_class_count(const Interval& range, std::uint32_t r, std::uint32_t p);

/// sum over residue matrices R with pred(R) of prod_ij #{n in I_ij : n = r_ij}.
using ResiduePredicate = std::function<bool(std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t)>;
std::uint64_t residue_box_count(std::uint32_t p, const MatrixInterval& box, const ResiduePredicate& pred);
std::uint64_t residue_box_count(const ClassInventory& inv, const MatrixInterval& box, const ResidueSet& set);
std::uint64_t residue_box_count(const ClassInventory& inv, std::int64_t x, const ResidueSet& set);

/// Counts by enumerating every integer matrix of the interval.
std::uint64_t enumeration_count(const ClassInventory& inv, const MatrixInterval& box, const ResidueSet& set);

enum class CountMethod { Enumeration, ResidueCount, Fourier };
std::string to_string(CountMethod m);

struct CountReport {
    std::uint32_t p = 0;
    std::int64_t x = 0;
    std::string set_kind;
    std::uint64_t exact_count = 0;
    double main_term = 0;
    double residual = 0;
    double normalized_residual = 0;
    CountMethod method = CountMethod::ResidueCount;
    std::optional<std::uint64_t> enumeration_count;  // filled when compared
};

double main_term(const ClassInventory& inv, std::int64_t x, const ResidueSet& set);
double error_envelope(std::uint32_t p, std::int64_t x, const ResidueSet& set);

/// With compare, also enumerates and throws if the two counts differ.
CountReport count_with_main_term(const ClassInventory& inv, std::int64_t x, const ResidueSet& set,
                                 bool compare = false);

/// Closed form for the coefficient of chi_rho in the expansion of the
/// primitive-element indicator.
double fourier_coeff(std::uint32_t p, const IrrepLabel& r);
/// (p^2-1)^-1 sum over primitive classes of conj(chi_rho(zeta)), i.e.
/// <delta_prim, chi_rho>.
Complex fourier_coeff_oracle(const CharacterTable& t, std::size_t irrep);

/// sum_{d | m} mu(d)/d sum_{chi^d = 1} chi(n), rounded.
int generator_indicator(std::uint64_t m, std::int64_t n);

struct CoeffSums {
    double onedim = 0;
    double steinberg = 0;
    double cuspidal = 0;
    std::uint64_t divisor_bound = 0;  // number of divisors of p^2 - 1
};
/// Asserts each family sum is at most the divisor count.
CoeffSums coeff_sum_report(std::uint32_t p);

/// |#primitive - sum_rho c_rho S(chi_rho, [-x, x]^4)| with S by direct
/// enumeration.
double fourier_expansion_residual(const CharacterTable& t, std::int64_t x);

/// sum_{h <= x} (chi_1 - chi_St)(A) against
/// 2 S(elliptic) + S(non-semisimple) + (1 - p) S(central). Returns the
/// absolute difference.
double class_type_identity_check(const CharacterTable& t, std::int64_t x);

struct DiscriminantSplit {
    std::uint64_t total = 0;               // (2x+1)^4
    std::int64_t legendre_sum = 0;         // S' = sum (disc/p)
    std::uint64_t elliptic = 0;            // S(elliptic)
    std::uint64_t disc_zero = 0;           // S(disc = 0)
    bool holds = false;                    // total - S' == 2 elliptic + disc_zero
};
DiscriminantSplit discriminant_split(const ClassInventory& inv, std::int64_t x);

/// sum_{start <= n < start + length} (n/p); asserts |sum| <= sqrt(p) log p.
Complex legendre_interval_sum(const FieldContext& ctx, std::int64_t start, std::int64_t length);

/// #{0 <= m <= x : theta + m generates F_{p^2}^*}, against phi(p^2-1)/(p^2-1) x.
CountReport ps_shifted_generator_count(const FieldContext& ctx, std::uint32_t theta_x, std::uint32_t theta_y,
                                       std::int64_t x);

struct PsScanReport {
    double max_abs = 0;
    std::uint32_t theta_x = 0, theta_y = 0;
    std::uint64_t character = 0;
    std::int64_t length = 0;  // maximising x
    double bound = 0;         // 2 sqrt(p) log p
};
/// max over nontrivial characters chi of F_{p^2}^*, over 0 <= x' <= x and over
/// theta (all theta outside F_p when none is given) of |sum_{m <= x'} chi(theta+m)|.
/// Asserts the bound.
PsScanReport ps_char_sum_scan(const FieldContext& ctx, std::int64_t x,
                              std::optional<std::pair<std::uint32_t, std::uint32_t>> theta = std::nullopt);

/// Counts primitive-reducing matrices of height <= x by splitting the box into
/// families {B + n I}; needs x < p.
std::uint64_t partition_primitive_count(const ClassInventory& inv, std::int64_t x);

}  // namespace gl2
