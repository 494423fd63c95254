#include "gl2/box_fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gl2 {

MatrixInterval MatrixInterval::shifted(const IntMat2& c, std::int64_t x) {
    return {{{{c.a11 - x, c.a11 + x}, {c.a12 - x, c.a12 + x}, {c.a21 - x, c.a21 + x}, {c.a22 - x, c.a22 + x}}}};
}

std::uint64_t MatrixInterval::cardinality() const {
    std::uint64_t n = 1;
    for (const auto& i : entry) {
        if (i.hi < i.lo) return 0;
        n *= std::uint64_t(i.length());
    }
    return n;
}

std::int64_t MatrixInterval::max_length() const {
    std::int64_t m = 0;
    for (const auto& i : entry) m = std::max(m, i.length());
    return m;
}

double MatrixInterval::length_budget(std::uint32_t p) const { return double(max_length()) / double(p); }

namespace {

// ||b/p||, distance to the nearest integer.
double frac_distance(std::int64_t b, std::uint32_t p) {
    const std::int64_t r = floor_mod(b, p);
    return double(std::min<std::int64_t>(r, p - r)) / double(p);
}

void check_interval(const Interval& i) {
    if (i.hi < i.lo) throw std::invalid_argument("empty interval");
    if (i.length() > 1'000'000'000) throw std::invalid_argument("interval longer than 1e9");
}

}  // namespace

Complex additive_interval_sum(const FieldContext& ctx, std::int64_t b, const Interval& range) {
    check_interval(range);
    const std::uint32_t p = ctx.p();
    const std::int64_t n = range.length();
    const std::int64_t r = floor_mod(b, p);
    if (r == 0) return double(n);
    const Complex head = ctx.additive(floor_mod(range.lo, p) * r);
    const Complex value = head * (1.0 - ctx.additive(floor_mod(n, p) * r)) / (1.0 - ctx.additive(r));
    const double bound = std::min(double(n), 1.0 / (2.0 * frac_distance(r, p)));
    if (std::abs(value) > bound * (1 + 1e-9) + 1e-9)
        throw BoundViolation("linear-sum bound", "|sum| = " + std::to_string(std::abs(value)) + " > " +
                                                     std::to_string(bound));
    return value;
}

IndicatorFactors indicator_factors(const FieldContext& ctx, const MatrixInterval& box) {
    const std::uint32_t p = ctx.p();
    // b11 <-> x11, b12 <-> x21, b21 <-> x12, b22 <-> x22
    static constexpr std::array<int, 4> partner{0, 2, 1, 3};
    IndicatorFactors f;
    for (int k = 0; k < 4; ++k) {
        f.factor[k].resize(p);
        for (std::uint32_t b = 0; b < p; ++b)
            f.factor[k][b] = additive_interval_sum(ctx, -std::int64_t(b), box.entry[partner[k]]) / double(p);
    }
    return f;
}

double interval_indicator_ft_bound(const FieldContext& ctx, const MatrixInterval& box, const ModMat2& b) {
    const std::uint32_t p = ctx.p();
    static constexpr std::array<int, 4> partner{0, 2, 1, 3};
    double bound = 1;
    for (int k = 0; k < 4; ++k) {
        const double n = double(box.entry[partner[k]].length());
        const std::uint32_t bij = b.entries()[k];
        bound *= bij == 0 ? n : std::min(n, 1.0 / frac_distance(bij, p));
    }
    return bound / std::pow(double(p), 4);
}

Complex interval_indicator_ft(const FieldContext& ctx, const MatrixInterval& box, const ModMat2& b) {
    if (b.modulus() != ctx.p()) throw std::invalid_argument("modulus mismatch");
    static constexpr std::array<int, 4> partner{0, 2, 1, 3};
    Complex v = 1;
    for (int k = 0; k < 4; ++k)
        v *= additive_interval_sum(ctx, -std::int64_t(b.entries()[k]), box.entry[partner[k]]) / double(ctx.p());
    const double bound = interval_indicator_ft_bound(ctx, box, b);
    if (std::abs(v) > bound * (1 + 1e-9) + 1e-15)
        throw BoundViolation("interval-indicator transform bound",
                             "|delta-hat| = " + std::to_string(std::abs(v)) + " > " + std::to_string(bound));
    return v;
}

ClassHistogram box_class_histogram(const ClassInventory& inv, const MatrixInterval& box) {
    if (box.cardinality() > kDirectCardinalityLimit)
        throw std::invalid_argument("interval has more than 1e8 points; use the plancherel method");
    const std::uint32_t p = inv.p();
    std::array<std::vector<std::uint32_t>, 4> residues;
    for (int k = 0; k < 4; ++k)
        for (std::int64_t v = box.entry[k].lo; v <= box.entry[k].hi; ++v)
            residues[k].push_back(std::uint32_t(floor_mod(v, p)));
    ClassHistogram h{std::vector<std::uint64_t>(inv.size(), 0), 0};
    for (auto a : residues[0])
        for (auto b : residues[1])
            for (auto c : residues[2])
                for (auto d : residues[3]) {
                    const std::int64_t idx = inv.index_of(a, b, c, d);
                    if (idx < 0)
                        ++h.singular;
                    else
                        ++h.per_class[std::size_t(idx)];
                }
    return h;
}

Complex box_char_sum(const GaussTable& gt, std::size_t irrep, const MatrixInterval& box, SumMethod method) {
    const CharacterTable& t = gt.table();
    if (method == SumMethod::Direct) {
        const ClassHistogram h = box_class_histogram(t.classes(), box);
        Complex s = 0;
        for (std::size_t c = 0; c < h.per_class.size(); ++c)
            if (h.per_class[c]) s += double(h.per_class[c]) * t.value(irrep, c);
        return s;
    }
    const FieldContext& f = t.field();
    const std::uint32_t p = f.p();
    const IndicatorFactors delta = indicator_factors(f, box);
    Complex s = 0;
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c)
                for (std::uint32_t d = 0; d < p; ++d)
                    s += char_ft(gt, irrep, ModMat2(a, b, c, d, p)) * std::conj(delta(a, b, c, d));
    return s * std::pow(double(p), 4);
}

std::vector<Complex> box_char_sums(const GaussTable& gt, const MatrixInterval& box, SumMethod method) {
    const CharacterTable& t = gt.table();
    const ClassInventory& inv = t.classes();
    std::vector<Complex> out(t.size(), 0.0);
    if (method == SumMethod::Direct) {
        const ClassHistogram h = box_class_histogram(inv, box);
        for (std::size_t r = 0; r < t.size(); ++r)
            for (std::size_t c = 0; c < h.per_class.size(); ++c)
                if (h.per_class[c]) out[r] += double(h.per_class[c]) * t.value(r, c);
        return out;
    }

    const FieldContext& f = inv.field();
    const std::uint32_t p = f.p();
    const IndicatorFactors delta = indicator_factors(f, box);
    std::vector<Complex> by_class(inv.size(), 0.0);
    std::vector<Complex> by_trace(p, 0.0);  // index 0: nilpotent
    Complex at_zero = 0;
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c)
                for (std::uint32_t d = 0; d < p; ++d) {
                    const Complex w = std::conj(delta(a, b, c, d));
                    const std::uint32_t det = f.sub(f.mul(a, d), f.mul(b, c));
                    if (det != 0) {
                        // (-B)^-1 = det^-1 (-d b; c -a)
                        const std::uint32_t s = f.inv(det);
                        const std::int64_t k = inv.index_of(f.mul(s, (p - d) % p), f.mul(s, b), f.mul(s, c),
                                                            f.mul(s, (p - a) % p));
                        by_class[std::size_t(k)] += w;
                    } else if (a == 0 && b == 0 && c == 0 && d == 0) {
                        at_zero += w;
                    } else {
                        by_trace[f.sub(0, f.add(a, d))] += w;
                    }
                }

    for (std::size_t r = 0; r < t.size(); ++r) {
        Complex s = 0;
        for (std::size_t k = 0; k < inv.size(); ++k) s += t.value(r, k) * by_class[k];
        s *= gt.g(r);
        s += gt.singular_trace(r, {true, 0}) * by_trace[0];
        for (std::uint32_t a = 1; a < p; ++a) s += gt.singular_trace(r, {false, a}) * by_trace[a];
        if (r == gt.trivial_index()) s += double(t.group_order()) * at_zero;
        out[r] = s;
    }
    return out;
}

PvScanReport pv_scan(const GaussTable& gt, const std::vector<std::int64_t>& xs, const PvScanOptions& opts) {
    const CharacterTable& t = gt.table();
    const std::uint32_t p = t.p();
    PvScanReport rep{p, {}, 0, opts.shift ? std::pow((opts.c + 3) / 2, 4) : 16.0, false};
    const double log4 = std::pow(std::log(double(p)), 4);
    const std::size_t trivial = gt.trivial_index();
    for (std::int64_t x : xs) {
        if (x < 0) throw std::invalid_argument("box radius must be non-negative");
        const MatrixInterval box = opts.shift ? MatrixInterval::shifted(*opts.shift, x) : MatrixInterval::box(x);
        const bool in_hypothesis =
            p >= 11 && (opts.shift ? double(box.max_length()) <= opts.c * p : x < std::int64_t(p));
        rep.asserted = rep.asserted || in_hypothesis;
        const auto sums = box_char_sums(gt, box, SumMethod::Plancherel);
        for (std::size_t r = 0; r < t.size(); ++r) {
            if (r == trivial) continue;
            const double abs_sum = std::abs(sums[r]);
            const double ratio = abs_sum / (double(t.dim(r)) * double(p) * double(p) * log4);
            rep.rows.push_back({r, x, abs_sum, ratio});
            if (in_hypothesis) rep.max_ratio = std::max(rep.max_ratio, ratio);
            if (in_hypothesis && ratio > rep.bound)
                throw BoundViolation("Polya-Vinogradov constant", to_string(t.irrep(r)) + " at x=" + std::to_string(x) +
                                                                      ": ratio " + std::to_string(ratio) + " > " +
                                                                      std::to_string(rep.bound));
        }
    }
    return rep;
}

std::vector<Complex> matrix_fourier_transform(std::uint32_t p, const std::vector<Complex>& f) {
    const std::size_t n = std::size_t(p) * p * p * p;
    if (f.size() != n) throw std::invalid_argument("expected p^4 values");
    const auto ctx = FieldContext::make(p);
    std::vector<Complex> cur = f, next(n);
    // One axis at a time; stride of axis k is p^(3-k).
    for (int axis = 0; axis < 4; ++axis) {
        std::size_t stride = 1;
        for (int j = axis; j < 3; ++j) stride *= p;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t k = (i / stride) % p;
            const std::size_t base = i - k * stride;
            Complex s = 0;
            for (std::size_t x = 0; x < p; ++x) s += cur[base + x * stride] * ctx->additive(-std::int64_t(k * x));
            next[i] = s;
        }
        std::swap(cur, next);
    }
    // The transform pairs x12 with the dual of b21 and x21 with b12; swap them.
    std::vector<Complex> out(n);
    const double scale = std::pow(double(p), 4);
    for (std::size_t b11 = 0; b11 < p; ++b11)
        for (std::size_t b12 = 0; b12 < p; ++b12)
            for (std::size_t b21 = 0; b21 < p; ++b21)
                for (std::size_t b22 = 0; b22 < p; ++b22)
                    out[((b11 * p + b12) * p + b21) * p + b22] = cur[((b11 * p + b21) * p + b12) * p + b22] / scale;
    return out;
}

double plancherel_check(std::uint32_t p, const std::vector<Complex>& f, const std::vector<Complex>& g) {
    const std::size_t n = std::size_t(p) * p * p * p;
    if (f.size() != n || g.size() != n) throw std::invalid_argument("plancherel_check: expected p^4 values each");
    Complex lhs = 0;
    for (std::size_t i = 0; i < n; ++i) lhs += f[i] * std::conj(g[i]);
    lhs /= double(n);
    const auto fh = matrix_fourier_transform(p, f);
    const auto gh = matrix_fourier_transform(p, g);
    Complex rhs = 0;
    for (std::size_t i = 0; i < n; ++i) rhs += fh[i] * std::conj(gh[i]);
    return std::abs(lhs - rhs);
}

Complex additive_character(const FieldContext& ctx, const ModMat2& b, const ModMat2& x) {
    return ctx.additive(b.trace_product(x));
}

}  // namespace gl2
