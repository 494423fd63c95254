#include "gl2/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace gl2 {

bool approx_equal(Complex a, Complex b, double rel, double abs) {
    return std::abs(a - b) <= std::max(rel * std::abs(b), abs);
}

Complex unit_root(std::int64_t num, std::int64_t den) {
    const double angle = 2.0 * std::numbers::pi * double(floor_mod(num, den)) / double(den);
    return {std::cos(angle), std::sin(angle)};
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    unsigned __int128 result = 1 % m;
    unsigned __int128 b = base % m;
    while (exp) {
        if (exp & 1) result = (result * b) % m;
        b = (b * b) % m;
        exp >>= 1;
    }
    return std::uint64_t(result);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (auto [q, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::uint64_t qk = 1;
        for (int k = 1; k <= e; ++k) {
            qk *= q;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * qk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int mobius(std::uint64_t n) {
    int mu = 1;
    for (auto [q, e] : factorize(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

std::uint64_t totient(std::uint64_t n) {
    std::uint64_t phi = n;
    for (auto [q, e] : factorize(n)) phi = phi / q * (q - 1);
    return phi;
}

ArithFunctions arith_functions(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("arith_functions: n must be positive");
    ArithFunctions f;
    f.divisors = divisors(n);
    f.mobius = mobius(n);
    f.totient = totient(n);
    f.num_divisors = f.divisors.size();
    return f;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(std::int64_t value, std::uint32_t p) : value_(0), p_(p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not an odd prime");
    value_ = std::uint32_t(floor_mod(value, p));
}

void FieldElement::require_same_field(const FieldElement& o) const {
    if (p_ != o.p_) throw std::invalid_argument("modulus mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(o);
    return {Unchecked{}, (value_ + o.value_) % p_, p_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(o);
    return {Unchecked{}, (value_ + p_ - o.value_) % p_, p_};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(o);
    return {Unchecked{}, std::uint32_t(std::uint64_t(value_) * o.value_ % p_), p_};
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::operator-() const { return {Unchecked{}, (p_ - value_) % p_, p_}; }

FieldElement FieldElement::inverse() const {
    if (value_ == 0) throw std::domain_error("not invertible");
    return pow(p_ - 2);
}

FieldElement FieldElement::pow(std::uint64_t n) const {
    return {Unchecked{}, std::uint32_t(pow_mod(value_, n, p_)), p_};
}

// ---------------------------------------------------------------------------
// FieldContext

namespace {

std::pair<std::uint32_t, std::uint32_t> quad_mul(std::pair<std::uint32_t, std::uint32_t> a,
                                                 std::pair<std::uint32_t, std::uint32_t> b,
                                                 std::uint64_t tau, std::uint64_t p) {
    const std::uint64_t x = (std::uint64_t(a.first) * b.first + tau * (std::uint64_t(a.second) * b.second % p)) % p;
    const std::uint64_t y = (std::uint64_t(a.first) * b.second + std::uint64_t(a.second) * b.first) % p;
    return {std::uint32_t(x), std::uint32_t(y)};
}

std::pair<std::uint32_t, std::uint32_t> quad_pow(std::pair<std::uint32_t, std::uint32_t> a, std::uint64_t n,
                                                 std::uint64_t tau, std::uint64_t p) {
    std::pair<std::uint32_t, std::uint32_t> r{1, 0};
    while (n) {
        if (n & 1) r = quad_mul(r, a, tau, p);
        a = quad_mul(a, a, tau, p);
        n >>= 1;
    }
    return r;
}

}  // namespace

std::shared_ptr<const FieldContext> FieldContext::make(std::uint32_t p) {
    return std::shared_ptr<const FieldContext>(new FieldContext(p));
}

FieldContext::FieldContext(std::uint32_t p) : p_(p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not an odd prime");
    if (p > 2003) throw std::invalid_argument("modulus too large for lookup tables");

    inverse_.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a) inverse_[a] = std::uint32_t(pow_mod(a, p - 2, p));

    sqrt_.assign(p, -1);
    for (std::uint32_t s = 0; s < p; ++s) {
        const auto sq = std::uint32_t(std::uint64_t(s) * s % p);
        if (sqrt_[sq] < 0) sqrt_[sq] = std::int32_t(s);
    }
    for (std::uint32_t t = 2; t < p; ++t) {
        if (sqrt_[t] < 0) {
            tau_ = t;
            break;
        }
    }

    p1_factors_ = factorize(p - 1);
    for (std::uint32_t g = 2; g < p; ++g) {
        const bool primitive = std::all_of(p1_factors_.begin(), p1_factors_.end(), [&](auto qe) {
            return pow_mod(g, (p - 1) / qe.first, p) != 1;
        });
        if (primitive) {
            gen_ = g;
            break;
        }
    }

    dlog_.assign(p, -1);
    powers_.assign(p - 1, 0);
    std::uint64_t acc = 1;
    for (std::uint32_t j = 0; j + 1 < p; ++j) {
        powers_[j] = std::uint32_t(acc);
        dlog_[acc] = std::int32_t(j);
        acc = acc * gen_ % p;
    }

    const std::uint64_t m = std::uint64_t(p) * p - 1;
    quad_factors_ = factorize(m);
    bool found = false;
    for (std::uint32_t x = 0; x < p && !found; ++x) {
        for (std::uint32_t y = 0; y < p && !found; ++y) {
            if (x == 0 && y == 0) continue;
            const bool primitive = std::all_of(quad_factors_.begin(), quad_factors_.end(), [&](auto qe) {
                return quad_pow({x, y}, m / qe.first, tau_, p) != std::pair<std::uint32_t, std::uint32_t>{1, 0};
            });
            if (primitive) {
                gen2_ = {x, y};
                found = true;
            }
        }
    }

    dlog2_.assign(std::size_t(p) * p, -1);
    powers2_.assign(m, {0, 0});
    std::pair<std::uint32_t, std::uint32_t> z{1, 0};
    for (std::uint64_t j = 0; j < m; ++j) {
        powers2_[j] = z;
        dlog2_[std::size_t(z.first) * p + z.second] = std::int32_t(j);
        z = quad_mul(z, gen2_, tau_, p);
    }

    roots_p_.resize(p);
    for (std::uint32_t j = 0; j < p; ++j) roots_p_[j] = unit_root(j, p);
    roots_p1_.resize(p - 1);
    for (std::uint32_t j = 0; j + 1 < p; ++j) roots_p1_[j] = unit_root(j, p - 1);
    roots_q_.resize(m);
    for (std::uint64_t j = 0; j < m; ++j) roots_q_[j] = unit_root(std::int64_t(j), std::int64_t(m));
}

int FieldContext::legendre(std::uint32_t a) const noexcept {
    a %= p_;
    if (a == 0) return 0;
    return sqrt_[a] >= 0 ? 1 : -1;
}

std::optional<std::uint32_t> FieldContext::sqrt(std::uint32_t a) const noexcept {
    const std::int32_t s = sqrt_[a % p_];
    if (s < 0) return std::nullopt;
    return std::uint32_t(s);
}

std::uint64_t FieldContext::order(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("not invertible");
    std::uint64_t ord = p_ - 1;
    for (auto [q, e] : p1_factors_) {
        while (ord % q == 0 && pow_mod(a, ord / q, p_) == 1) ord /= q;
    }
    return ord;
}

std::uint64_t FieldContext::quad_element_order(std::uint32_t x, std::uint32_t y) const {
    if (x % p_ == 0 && y % p_ == 0) throw std::domain_error("not invertible");
    std::uint64_t ord = quad_order();
    for (auto [q, e] : quad_factors_) {
        while (ord % q == 0 &&
               quad_pow({x, y}, ord / q, tau_, p_) == std::pair<std::uint32_t, std::uint32_t>{1, 0})
            ord /= q;
    }
    return ord;
}

// ---------------------------------------------------------------------------
// QuadExtElement

QuadExtElement::QuadExtElement(FieldElement x, FieldElement y, FieldElement tau) : x_(x), y_(y), tau_(tau) {
    if (x.modulus() != y.modulus() || x.modulus() != tau.modulus())
        throw std::invalid_argument("modulus mismatch");
    if (tau.pow((tau.modulus() - 1) / 2).value() != tau.modulus() - 1)
        throw std::invalid_argument("tau must be a quadratic non-residue");
}

QuadExtElement::QuadExtElement(const FieldContext& ctx, std::int64_t x, std::int64_t y)
    : QuadExtElement(FieldElement(x, ctx.p()), FieldElement(y, ctx.p()), FieldElement(ctx.tau(), ctx.p())) {}

void QuadExtElement::require_same_field(const QuadExtElement& o) const {
    if (modulus() != o.modulus() || tau_ != o.tau_) throw std::invalid_argument("modulus mismatch");
}

QuadExtElement QuadExtElement::operator+(const QuadExtElement& o) const {
    require_same_field(o);
    return {x_ + o.x_, y_ + o.y_, tau_};
}

QuadExtElement QuadExtElement::operator*(const QuadExtElement& o) const {
    require_same_field(o);
    return {x_ * o.x_ + tau_ * y_ * o.y_, x_ * o.y_ + o.x_ * y_, tau_};
}

QuadExtElement QuadExtElement::pow(std::uint64_t n) const {
    QuadExtElement result(FieldElement(1, modulus()), FieldElement(0, modulus()), tau_);
    QuadExtElement base = *this;
    while (n) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

QuadExtElement QuadExtElement::frobenius() const { return {x_, -y_, tau_}; }

FieldElement quad_ext_norm(const QuadExtElement& z) { return z.x() * z.x() - z.tau() * z.y() * z.y(); }

// ---------------------------------------------------------------------------
// Characters

MulCharacter::MulCharacter(std::shared_ptr<const FieldContext> ctx, UnitGroup group, std::int64_t index)
    : ctx_(std::move(ctx)), group_(group), index_(0) {
    if (!ctx_) throw std::invalid_argument("MulCharacter: missing field context");
    index_ = std::uint64_t(floor_mod(index, std::int64_t(group_order())));
}

std::uint64_t MulCharacter::group_order() const noexcept {
    return group_ == UnitGroup::PrimeField ? ctx_->p() - 1 : ctx_->quad_order();
}

std::uint64_t MulCharacter::order() const noexcept {
    const std::uint64_t n = group_order();
    return n / gcd_u64(index_, n);
}

Complex MulCharacter::operator()(const FieldElement& u) const {
    if (u.modulus() != ctx_->p()) throw std::invalid_argument("modulus mismatch");
    if (u.is_zero()) throw std::domain_error("not invertible");
    if (group_ == UnitGroup::PrimeField)
        return ctx_->unit_root_p(std::int64_t(index_ * std::uint64_t(ctx_->dlog(u.value()))));
    return ctx_->unit_root_quad(std::int64_t(index_ * std::uint64_t(ctx_->dlog2(u.value(), 0))));
}

Complex MulCharacter::operator()(const QuadExtElement& u) const {
    if (u.modulus() != ctx_->p() || u.tau().value() != ctx_->tau())
        throw std::invalid_argument("modulus mismatch");
    if (u.is_zero()) throw std::domain_error("not invertible");
    if (group_ == UnitGroup::PrimeField) {
        if (!u.in_base_field()) throw std::invalid_argument("element is not in F_p");
        return (*this)(u.x());
    }
    const auto j = std::uint64_t(ctx_->dlog2(u.x().value(), u.y().value()));
    return ctx_->unit_root_quad(std::int64_t((index_ * j) % ctx_->quad_order()));
}

Complex mul_char_value(const MulCharacter& chi, const FieldElement& u) { return chi(u); }
Complex mul_char_value(const MulCharacter& chi, const QuadExtElement& u) { return chi(u); }

Complex classical_gauss_sum(const MulCharacter& chi) {
    if (chi.group() != UnitGroup::PrimeField)
        throw std::invalid_argument("classical Gauss sum needs a character of F_p^*");
    const std::uint32_t p = chi.modulus();
    Complex sum = 0;
    for (std::uint32_t a = 1; a < p; ++a) sum += chi(FieldElement(a, p)) * chi.field().additive(a);
    return sum;
}

}  // namespace gl2
