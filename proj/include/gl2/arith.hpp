#pragma once

// Exact arithmetic in F_p and F_{p^2} = F_p(sqrt(tau)), multiplicative and
// additive characters, classical Gauss sums and elementary arithmetic
// functions.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gl2 {

using Complex = std::complex<double>;

/// Raised when an asserted bound from the theory is violated. The anchor names
/// the bound that failed.
class BoundViolation : public std::runtime_error {
public:
    BoundViolation(std::string anchor, const std::string& detail)
        : std::runtime_error(anchor + ": " + detail), anchor_(std::move(anchor)) {}
    const std::string& anchor() const noexcept { return anchor_; }

private:
    std::string anchor_;
};

/// |a - b| <= max(rel * |b|, abs)
bool approx_equal(Complex a, Complex b, double rel = 1e-9, double abs = 1e-6);

/// e(num / den) = exp(2 pi i num / den)
Complex unit_root(std::int64_t num, std::int64_t den);

/// Least non-negative residue.
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Floor division for a positive divisor.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t m) {
    return (a - floor_mod(a, m)) / m;
}

bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Prime factorisation by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

struct ArithFunctions {
    std::vector<std::uint64_t> divisors;  // ascending
    int mobius = 0;
    std::uint64_t totient = 0;
    std::uint64_t num_divisors = 0;
};

ArithFunctions arith_functions(std::uint64_t n);
int mobius(std::uint64_t n);
std::uint64_t totient(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Residue of F_p. The modulus is checked for primality at construction.
class FieldElement {
public:
    FieldElement(std::int64_t value, std::uint32_t p);

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t n) const;

    bool operator==(const FieldElement& o) const = default;

private:
    struct Unchecked {};
    FieldElement(Unchecked, std::uint32_t value, std::uint32_t p) : value_(value), p_(p) {}
    void require_same_field(const FieldElement& o) const;

    std::uint32_t value_;
    std::uint32_t p_;
};

/// Immutable lookup tables for F_p and F_{p^2} at one prime: the canonical
/// non-residue tau, canonical generators, full discrete-log tables, square
/// roots, inverses and root-of-unity tables for e(j/p), e(j/(p-1)),
/// e(j/(p^2-1)).
///
/// F_{p^2} elements x + tau' y are indexed as x * p + y.
class FieldContext {
public:
    static std::shared_ptr<const FieldContext> make(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t tau() const noexcept { return tau_; }
    std::uint32_t generator() const noexcept { return gen_; }
    std::pair<std::uint32_t, std::uint32_t> quad_generator() const noexcept { return gen2_; }
    std::uint64_t quad_order() const noexcept { return std::uint64_t(p_) * p_ - 1; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + p_ - b) % p_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return std::uint32_t((std::uint64_t(a) * b) % p_);
    }
    std::uint32_t reduce(std::int64_t a) const noexcept { return std::uint32_t(floor_mod(a, p_)); }
    /// Requires a != 0.
    std::uint32_t inv(std::uint32_t a) const noexcept { return inverse_[a]; }
    /// +1, -1, or 0.
    int legendre(std::uint32_t a) const noexcept;
    std::optional<std::uint32_t> sqrt(std::uint32_t a) const noexcept;

    /// Discrete log of a unit against generator(); -1 for zero.
    std::int32_t dlog(std::uint32_t a) const noexcept { return dlog_[a]; }
    std::uint32_t gen_pow(std::uint64_t j) const noexcept { return powers_[j % (p_ - 1)]; }
    /// Discrete log of x + tau' y against quad_generator(); -1 for zero.
    std::int32_t dlog2(std::uint32_t x, std::uint32_t y) const noexcept { return dlog2_[x * p_ + y]; }
    std::pair<std::uint32_t, std::uint32_t> gen2_pow(std::uint64_t j) const noexcept {
        return powers2_[j % quad_order()];
    }

    /// e(j/p)
    Complex additive(std::int64_t j) const noexcept { return roots_p_[floor_mod(j, p_)]; }
    /// e(j/(p-1))
    Complex unit_root_p(std::int64_t j) const noexcept { return roots_p1_[floor_mod(j, p_ - 1)]; }
    /// e(j/(p^2-1))
    Complex unit_root_quad(std::int64_t j) const noexcept {
        return roots_q_[floor_mod(j, std::int64_t(quad_order()))];
    }

    /// Multiplicative order of a unit of F_p.
    std::uint64_t order(std::uint32_t a) const;
    /// Multiplicative order of a unit of F_{p^2}.
    std::uint64_t quad_element_order(std::uint32_t x, std::uint32_t y) const;

    const std::vector<std::pair<std::uint64_t, int>>& quad_order_factors() const noexcept {
        return quad_factors_;
    }

private:
    explicit FieldContext(std::uint32_t p);

    std::uint32_t p_;
    std::uint32_t tau_ = 0;
    std::uint32_t gen_ = 0;
    std::pair<std::uint32_t, std::uint32_t> gen2_{0, 0};
    std::vector<std::uint32_t> inverse_;
    std::vector<std::int32_t> sqrt_;
    std::vector<std::int32_t> dlog_;
    std::vector<std::uint32_t> powers_;
    std::vector<std::int32_t> dlog2_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> powers2_;
    std::vector<Complex> roots_p_;
    std::vector<Complex> roots_p1_;
    std::vector<Complex> roots_q_;
    std::vector<std::pair<std::uint64_t, int>> p1_factors_;
    std::vector<std::pair<std::uint64_t, int>> quad_factors_;
};

/// x + tau' y in F_{p^2}, with tau' ^ 2 = tau a fixed non-residue.
class QuadExtElement {
public:
    QuadExtElement(FieldElement x, FieldElement y, FieldElement tau);
    /// Uses the canonical tau of the context.
    QuadExtElement(const FieldContext& ctx, std::int64_t x, std::int64_t y);

    const FieldElement& x() const noexcept { return x_; }
    const FieldElement& y() const noexcept { return y_; }
    const FieldElement& tau() const noexcept { return tau_; }
    std::uint32_t modulus() const noexcept { return x_.modulus(); }
    bool is_zero() const noexcept { return x_.is_zero() && y_.is_zero(); }
    bool in_base_field() const noexcept { return y_.is_zero(); }

    QuadExtElement operator+(const QuadExtElement& o) const;
    QuadExtElement operator*(const QuadExtElement& o) const;
    QuadExtElement pow(std::uint64_t n) const;
    /// zeta^p = x - tau' y
    QuadExtElement frobenius() const;

    bool operator==(const QuadExtElement& o) const = default;

private:
    void require_same_field(const QuadExtElement& o) const;

    FieldElement x_;
    FieldElement y_;
    FieldElement tau_;
};

/// N(z) = z^{p+1} = x^2 - tau y^2
FieldElement quad_ext_norm(const QuadExtElement& z);

enum class UnitGroup { PrimeField, QuadraticField };

/// chi_k(g^j) = e(k j / ord) against the canonical generator of the group.
class MulCharacter {
public:
    MulCharacter(std::shared_ptr<const FieldContext> ctx, UnitGroup group, std::int64_t index);

    UnitGroup group() const noexcept { return group_; }
    std::uint64_t index() const noexcept { return index_; }
    std::uint64_t group_order() const noexcept;
    /// Order of chi in the character group.
    std::uint64_t order() const noexcept;
    std::uint32_t modulus() const noexcept { return ctx_->p(); }
    const FieldContext& field() const noexcept { return *ctx_; }
    bool is_trivial() const noexcept { return index_ == 0; }

    Complex operator()(const FieldElement& u) const;
    Complex operator()(const QuadExtElement& u) const;

private:
    std::shared_ptr<const FieldContext> ctx_;
    UnitGroup group_;
    std::uint64_t index_;
};

Complex mul_char_value(const MulCharacter& chi, const FieldElement& u);
Complex mul_char_value(const MulCharacter& chi, const QuadExtElement& u);

/// G(chi) = sum_{a in F_p^*} chi(a) e_p(a)
Complex classical_gauss_sum(const MulCharacter& chi);

}  // namespace gl2
