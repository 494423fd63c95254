#include "gl2/counting.hpp"

#include "gl2/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace gl2 {

std::int64_t residue_class_count(const Interval& range, std::uint32_t r, std::uint32_t p) {
    if (range.hi < range.lo) return 0;
    return floor_div(range.hi - r, p) - floor_div(range.lo - 1 - std::int64_t(r), p);
}

namespace {

using EntryCounts = std::array<std::vector<std::uint64_t>, 4>;

EntryCounts entry_counts(std::uint32_t p, const MatrixInterval& box) {
    EntryCounts n;
    for (int k = 0; k < 4; ++k) {
        n[k].resize(p);
        for (std::uint32_t r = 0; r < p; ++r) n[k][r] = std::uint64_t(residue_class_count(box.entry[k], r, p));
    }
    return n;
}

// sum over residues (a, b, c, d) of weight(a, b, c, d) * prod of entry counts.
template <typename T, typename Weight>
T weighted_residue_sum(std::uint32_t p, const MatrixInterval& box, Weight&& weight) {
    const EntryCounts n = entry_counts(p, box);
    return parallel_sum<T>(p, [&](std::size_t a) {
        T s{};
        if (n[0][a] == 0) return s;
        for (std::uint32_t b = 0; b < p; ++b) {
            if (n[1][b] == 0) continue;
            for (std::uint32_t c = 0; c < p; ++c) {
                if (n[2][c] == 0) continue;
                const T head = T(n[0][a] * n[1][b] * n[2][c]);
                for (std::uint32_t d = 0; d < p; ++d) {
                    if (n[3][d] == 0) continue;
                    s += head * T(n[3][d]) * weight(std::uint32_t(a), b, c, d);
                }
            }
        }
        return s;
    });
}

bool disc_zero(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d, std::uint32_t p) {
    const std::uint64_t diff = (a + p - d) % p;
    return (diff * diff + 4ull * b * c) % p == 0;
}

std::vector<IrrepLabel> family(std::uint32_t p, IrrepKind kind) {
    std::vector<IrrepLabel> out;
    const std::uint64_t m = std::uint64_t(p) * p - 1;
    if (kind == IrrepKind::Cuspidal) {
        for (std::uint64_t k = 1; k < m; ++k)
            if (k % (p + 1) != 0 && canonical_irrep({kind, k, 0}, p).k == k) out.push_back({kind, k, 0});
    } else {
        for (std::uint64_t k = 0; k + 1 < p; ++k) out.push_back({kind, k, 0});
    }
    return out;
}

// sum_{d | m, ord | d} mu(d) / d
double mobius_tail(std::uint64_t m, std::uint64_t ord) {
    double s = 0;
    for (std::uint64_t d : divisors(m))
        if (d % ord == 0) s += double(mobius(d)) / double(d);
    return s;
}

}  // namespace

std::uint64_t residue_box_count(std::uint32_t p, const MatrixInterval& box, const ResiduePredicate& pred) {
    return weighted_residue_sum<std::uint64_t>(
        p, box, [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) -> std::uint64_t {
            return pred(a, b, c, d) ? 1 : 0;
        });
}

std::uint64_t residue_box_count(const ClassInventory& inv, const MatrixInterval& box, const ResidueSet& set) {
    const std::uint32_t p = inv.p();
    if (set.kind == SetKind::DiscZero)
        return weighted_residue_sum<std::uint64_t>(p, box, [p](auto a, auto b, auto c, auto d) -> std::uint64_t {
            return disc_zero(a, b, c, d, p);
        });
    const auto flags = class_membership(inv, set);
    return weighted_residue_sum<std::uint64_t>(p, box, [&](auto a, auto b, auto c, auto d) -> std::uint64_t {
        const std::int64_t k = inv.index_of(a, b, c, d);
        return k >= 0 && flags[std::size_t(k)];
    });
}

std::uint64_t residue_box_count(const ClassInventory& inv, std::int64_t x, const ResidueSet& set) {
    if (x < 0) throw std::invalid_argument("height bound must be non-negative");
    return residue_box_count(inv, MatrixInterval::box(x), set);
}

std::uint64_t enumeration_count(const ClassInventory& inv, const MatrixInterval& box, const ResidueSet& set) {
    if (box.cardinality() > kDirectCardinalityLimit) throw std::invalid_argument("interval too large to enumerate");
    const std::uint32_t p = inv.p();
    std::uint64_t n = 0;
    for (std::int64_t a = box.entry[0].lo; a <= box.entry[0].hi; ++a)
        for (std::int64_t b = box.entry[1].lo; b <= box.entry[1].hi; ++b)
            for (std::int64_t c = box.entry[2].lo; c <= box.entry[2].hi; ++c)
                for (std::int64_t d = box.entry[3].lo; d <= box.entry[3].hi; ++d)
                    n += set_membership(inv, ModMat2(a, b, c, d, p), set);
    return n;
}

std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::Enumeration: return "enumeration";
        case CountMethod::ResidueCount: return "residue_count";
        case CountMethod::Fourier: return "fourier";
    }
    return {};
}

double main_term(const ClassInventory& inv, std::int64_t x, const ResidueSet& set) {
    const double p = inv.p();
    const double x4 = std::pow(double(x), 4);
    const double gamma = 1 - 1 / p - 1 / (p * p) + 1 / (p * p * p);
    const double q = p * p - 1;
    const double elliptic_density = 1 - 2 / p + 1 / (p * p);
    switch (set.kind) {
        case SetKind::Nonsingular: return 16 * gamma * x4;
        case SetKind::DiscZero: return 16 * x4 / p;
        case SetKind::Class:
            return 16 * double(set_cardinality(inv, set)) * gamma / double(inv.group_order()) * x4;
        case SetKind::Elliptic: return 8 * elliptic_density * x4;
        // c_1 times the trivial-character sum; only OneDim(0) has a nonzero
        // total over GL(2).
        case SetKind::Primitive: return 8 * double(totient(std::uint64_t(q))) / q * gamma * x4;
    }
    return 0;
}

double error_envelope(std::uint32_t p, std::int64_t x, const ResidueSet& set) {
    const double xd = double(x), pd = p, lp = std::log(pd);
    switch (set.kind) {
        case SetKind::Nonsingular:
        case SetKind::DiscZero:
        case SetKind::Class: return xd * xd * xd;
        case SetKind::Elliptic: return xd * xd * xd * std::sqrt(pd) * lp;
        case SetKind::Primitive: return xd * xd * xd * std::sqrt(pd) * lp + xd * xd * pd * lp + pd * pd;
    }
    return 1;
}

CountReport count_with_main_term(const ClassInventory& inv, std::int64_t x, const ResidueSet& set, bool compare) {
    CountReport r;
    r.p = inv.p();
    r.x = x;
    r.set_kind = to_string(set);
    r.exact_count = residue_box_count(inv, x, set);
    r.main_term = main_term(inv, x, set);
    r.residual = double(r.exact_count) - r.main_term;
    const double env = error_envelope(inv.p(), x, set);
    r.normalized_residual = env > 0 ? r.residual / env : 0.0;
    r.method = CountMethod::ResidueCount;
    if (compare) {
        r.enumeration_count = enumeration_count(inv, MatrixInterval::box(x), set);
        if (*r.enumeration_count != r.exact_count)
            throw std::logic_error("residue count " + std::to_string(r.exact_count) + " != enumeration " +
                                   std::to_string(*r.enumeration_count));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Fourier coefficients of the primitive indicator

double fourier_coeff(std::uint32_t p, const IrrepLabel& label) {
    const IrrepLabel r = canonical_irrep(label, p);
    const std::uint64_t m = std::uint64_t(p) * p - 1;
    switch (r.kind) {
        case IrrepKind::Principal: return 0;
        case IrrepKind::OneDim:
        case IrrepKind::SteinbergTwist: {
            const std::uint64_t ord = (p - 1) / gcd_u64(r.k, p - 1);
            const double c = 0.5 * mobius_tail(m, ord);
            return r.kind == IrrepKind::OneDim ? c : -c;
        }
        case IrrepKind::Cuspidal: {
            const std::uint64_t ord = m / gcd_u64(r.k, m);
            return -mobius_tail(m, ord);
        }
    }
    return 0;
}

Complex fourier_coeff_oracle(const CharacterTable& t, std::size_t irrep) {
    const ClassInventory& inv = t.classes();
    const auto flags = class_membership(inv, {SetKind::Primitive, std::nullopt});
    Complex s = 0;
    for (std::size_t c = 0; c < inv.size(); ++c)
        if (flags[c]) s += std::conj(t.value(irrep, c));
    return s / double(inv.field().quad_order());
}

int generator_indicator(std::uint64_t m, std::int64_t n) {
    if (m == 0) throw std::invalid_argument("m must be positive");
    Complex s = 0;
    for (std::uint64_t d : divisors(m)) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        Complex inner = 0;
        for (std::uint64_t t = 0; t < d; ++t) inner += unit_root(std::int64_t(t) * floor_mod(n, std::int64_t(d)), std::int64_t(d));
        s += double(mu) / double(d) * inner;
    }
    return int(std::lround(s.real()));
}

CoeffSums coeff_sum_report(std::uint32_t p) {
    CoeffSums s;
    auto total = [p](IrrepKind kind) {
        double acc = 0;
        for (const auto& r : family(p, kind)) acc += std::abs(fourier_coeff(p, r));
        return acc;
    };
    s.onedim = total(IrrepKind::OneDim);
    s.steinberg = total(IrrepKind::SteinbergTwist);
    s.cuspidal = total(IrrepKind::Cuspidal);
    s.divisor_bound = divisors(std::uint64_t(p) * p - 1).size();
    for (double v : {s.onedim, s.steinberg, s.cuspidal})
        if (v > double(s.divisor_bound) + 1e-12)
            throw BoundViolation("coefficient family sum", std::to_string(v) + " > " + std::to_string(s.divisor_bound));
    return s;
}

double fourier_expansion_residual(const CharacterTable& t, std::int64_t x) {
    const ClassInventory& inv = t.classes();
    const std::uint64_t exact = residue_box_count(inv, x, {SetKind::Primitive, std::nullopt});
    const ClassHistogram h = box_class_histogram(inv, MatrixInterval::box(x));
    double expansion = 0;
    for (std::size_t r = 0; r < t.size(); ++r) {
        const double c = fourier_coeff(t.p(), t.irrep(r));
        if (c == 0) continue;
        Complex s = 0;
        for (std::size_t k = 0; k < inv.size(); ++k)
            if (h.per_class[k]) s += double(h.per_class[k]) * t.value(r, k);
        expansion += c * s.real();
    }
    return std::abs(double(exact) - expansion);
}

double class_type_identity_check(const CharacterTable& t, std::int64_t x) {
    const ClassInventory& inv = t.classes();
    const std::size_t one = t.trivial_index(), st = t.steinberg_index();
    const ClassHistogram h = box_class_histogram(inv, MatrixInterval::box(x));
    Complex lhs = 0;
    for (std::size_t k = 0; k < inv.size(); ++k)
        if (h.per_class[k]) lhs += double(h.per_class[k]) * (t.value(one, k) - t.value(st, k));

    const MatrixInterval box = MatrixInterval::box(x);
    auto count_kind = [&](ClassKind kind) {
        return double(residue_box_count(inv.p(), box, [&](auto a, auto b, auto c, auto d) {
            const std::int64_t k = inv.index_of(a, b, c, d);
            return k >= 0 && inv[std::size_t(k)].label.kind == kind;
        }));
    };
    const double rhs = 2 * count_kind(ClassKind::Elliptic) + count_kind(ClassKind::NonSemisimple) +
                       (1 - double(inv.p())) * count_kind(ClassKind::Central);
    return std::abs(lhs - rhs);
}

DiscriminantSplit discriminant_split(const ClassInventory& inv, std::int64_t x) {
    const std::uint32_t p = inv.p();
    const FieldContext& f = inv.field();
    const MatrixInterval box = MatrixInterval::box(x);
    DiscriminantSplit s;
    s.total = box.cardinality();
    s.legendre_sum = weighted_residue_sum<std::int64_t>(p, box, [&](auto a, auto b, auto c, auto d) -> std::int64_t {
        const std::uint64_t diff = (a + p - d) % p;
        return f.legendre(std::uint32_t((diff * diff + 4ull * b * c) % p));
    });
    s.elliptic = residue_box_count(inv, box, {SetKind::Elliptic, std::nullopt});
    s.disc_zero = residue_box_count(inv, box, {SetKind::DiscZero, std::nullopt});
    s.holds = std::int64_t(s.total) - s.legendre_sum == std::int64_t(2 * s.elliptic + s.disc_zero);
    return s;
}

Complex legendre_interval_sum(const FieldContext& ctx, std::int64_t start, std::int64_t length) {
    if (length < 1) throw std::invalid_argument("length must be positive");
    std::int64_t s = 0;
    for (std::int64_t n = start; n < start + length; ++n) s += ctx.legendre(std::uint32_t(floor_mod(n, ctx.p())));
    const double bound = std::sqrt(double(ctx.p())) * std::log(double(ctx.p()));
    if (double(std::llabs(s)) > bound)
        throw BoundViolation("Polya-Vinogradov (Legendre)", "|sum| = " + std::to_string(std::llabs(s)) + " > " +
                                                                std::to_string(bound));
    return double(s);
}

CountReport ps_shifted_generator_count(const FieldContext& ctx, std::uint32_t theta_x, std::uint32_t theta_y,
                                       std::int64_t x) {
    const std::uint32_t p = ctx.p();
    if (theta_y % p == 0) throw std::invalid_argument("theta generates a proper subfield");
    if (x < 0) throw std::invalid_argument("x must be non-negative");
    const std::uint64_t m = ctx.quad_order();
    CountReport r;
    r.p = p;
    r.x = x;
    r.set_kind = "shifted-generator";
    r.method = CountMethod::Enumeration;
    for (std::int64_t k = 0; k <= x; ++k)
        r.exact_count += ctx.quad_element_order(std::uint32_t(floor_mod(theta_x + k, p)), theta_y % p) == m;
    r.main_term = double(totient(m)) / double(m) * double(x);
    r.residual = double(r.exact_count) - r.main_term;
    r.normalized_residual = r.residual / (std::sqrt(double(p)) * std::log(double(p)));
    return r;
}

PsScanReport ps_char_sum_scan(const FieldContext& ctx, std::int64_t x,
                              std::optional<std::pair<std::uint32_t, std::uint32_t>> theta) {
    const std::uint32_t p = ctx.p();
    if (x < 0) throw std::invalid_argument("x must be non-negative");
    const std::uint64_t m = ctx.quad_order();
    PsScanReport rep;
    rep.bound = 2 * std::sqrt(double(p)) * std::log(double(p));

    std::vector<std::pair<std::uint32_t, std::uint32_t>> thetas;
    if (theta) {
        if (theta->second % p == 0) throw std::invalid_argument("theta generates a proper subfield");
        thetas.push_back({theta->first % p, theta->second % p});
    } else {
        for (std::uint32_t tx = 0; tx < p; ++tx)
            for (std::uint32_t ty = 1; ty < p; ++ty) thetas.push_back({tx, ty});
    }

    std::vector<std::int64_t> logs(std::size_t(x) + 1);
    for (auto [tx, ty] : thetas) {
        for (std::int64_t k = 0; k <= x; ++k) logs[std::size_t(k)] = ctx.dlog2(std::uint32_t((tx + k) % p), ty);
        for (std::uint64_t chi = 1; chi < m; ++chi) {
            Complex s = 0;
            for (std::int64_t k = 0; k <= x; ++k) {
                s += ctx.unit_root_quad(std::int64_t(chi) * logs[std::size_t(k)]);
                const double a = std::abs(s);
                if (a > rep.max_abs) rep = {a, tx, ty, chi, k, rep.bound};
            }
        }
    }
    if (rep.max_abs > rep.bound)
        throw BoundViolation("shifted character sum bound",
                             "|sum| = " + std::to_string(rep.max_abs) + " > " + std::to_string(rep.bound));
    return rep;
}

std::uint64_t partition_primitive_count(const ClassInventory& inv, std::int64_t x) {
    const std::uint32_t p = inv.p();
    if (x < 0 || x >= std::int64_t(p)) throw std::invalid_argument("partition count needs 0 <= x < p");
    const FieldContext& f = inv.field();
    const auto primitive = class_membership(inv, {SetKind::Primitive, std::nullopt});
    std::uint64_t total = 0;
    // Family {B + nI}: fixed b, c and a - d; the discriminant is constant on it.
    for (std::int64_t b = -x; b <= x; ++b)
        for (std::int64_t c = -x; c <= x; ++c)
            for (std::int64_t delta = -2 * x; delta <= 2 * x; ++delta) {
                const std::int64_t disc = delta * delta + 4 * b * c;
                if (f.legendre(std::uint32_t(floor_mod(disc, p))) != -1) continue;
                const std::int64_t lo = std::max(-x, -x - delta), hi = std::min(x, x - delta);
                for (std::int64_t d = lo; d <= hi; ++d) {
                    const std::int64_t k =
                        inv.index_of(std::uint32_t(floor_mod(d + delta, p)), std::uint32_t(floor_mod(b, p)),
                                     std::uint32_t(floor_mod(c, p)), std::uint32_t(floor_mod(d, p)));
                    total += primitive[std::size_t(k)];
                }
            }
    return total;
}

}  // namespace gl2
