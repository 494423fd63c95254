#include "gl2/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace gl2 {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return std::uint32_t(std::uint64_t(a) * b % p);
}

}  // namespace

// ---------------------------------------------------------------------------
// IntMat2

std::int64_t IntMat2::height() const noexcept {
    return std::max({std::llabs(a11), std::llabs(a12), std::llabs(a21), std::llabs(a22)});
}

IntMat2 IntMat2::operator*(const IntMat2& o) const noexcept {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22, a21 * o.a11 + a22 * o.a21,
            a21 * o.a12 + a22 * o.a22};
}

IntMat2 IntMat2::operator+(const IntMat2& o) const noexcept {
    return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
}

IntMat2 IntMat2::operator-(const IntMat2& o) const noexcept {
    return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
}

IntMat2 parse_matrix_literal(std::string_view text) {
    const auto rows = split(text, ';');
    if (rows.size() != 2) throw std::invalid_argument("matrix literal must look like 'a,b;c,d'");
    const auto r0 = split(rows[0], ',');
    const auto r1 = split(rows[1], ',');
    if (r0.size() != 2 || r1.size() != 2) throw std::invalid_argument("matrix literal must look like 'a,b;c,d'");
    return {parse_int(r0[0], "matrix entry"), parse_int(r0[1], "matrix entry"), parse_int(r1[0], "matrix entry"),
            parse_int(r1[1], "matrix entry")};
}

std::string to_literal(const IntMat2& m) {
    return std::to_string(m.a11) + "," + std::to_string(m.a12) + ";" + std::to_string(m.a21) + "," +
           std::to_string(m.a22);
}

// ---------------------------------------------------------------------------
// ModMat2

ModMat2::ModMat2(std::int64_t a11, std::int64_t a12, std::int64_t a21, std::int64_t a22, std::uint32_t p) : p_(p) {
    if (p < 3) throw std::invalid_argument("modulus must be an odd prime");
    e_ = {std::uint32_t(floor_mod(a11, p)), std::uint32_t(floor_mod(a12, p)), std::uint32_t(floor_mod(a21, p)),
          std::uint32_t(floor_mod(a22, p))};
}

void ModMat2::require_same_field(const ModMat2& o) const {
    if (p_ != o.p_) throw std::invalid_argument("modulus mismatch");
}

std::uint32_t ModMat2::det() const noexcept {
    return std::uint32_t((std::uint64_t(e_[0]) * e_[3] + std::uint64_t(p_ - e_[1]) * e_[2]) % p_);
}

std::uint32_t ModMat2::trace() const noexcept { return (e_[0] + e_[3]) % p_; }

std::uint32_t ModMat2::discriminant() const noexcept {
    const std::uint64_t t = trace();
    return std::uint32_t((t * t + 4ull * (p_ - det())) % p_);
}

ModMat2 ModMat2::inverse() const {
    const std::uint32_t d = det();
    if (d == 0) throw std::domain_error("not in GL(2)");
    const auto inv = std::uint32_t(pow_mod(d, p_ - 2, p_));
    return {mulmod(e_[3], inv, p_), mulmod(p_ - e_[1], inv, p_), mulmod(p_ - e_[2], inv, p_), mulmod(e_[0], inv, p_),
            p_};
}

ModMat2 ModMat2::pow(std::uint64_t n) const {
    ModMat2 r = identity(p_);
    ModMat2 b = *this;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

ModMat2 ModMat2::operator*(const ModMat2& o) const {
    require_same_field(o);
    const std::uint64_t p = p_;
    const auto& a = e_;
    const auto& b = o.e_;
    return {std::int64_t((std::uint64_t(a[0]) * b[0] + std::uint64_t(a[1]) * b[2]) % p),
            std::int64_t((std::uint64_t(a[0]) * b[1] + std::uint64_t(a[1]) * b[3]) % p),
            std::int64_t((std::uint64_t(a[2]) * b[0] + std::uint64_t(a[3]) * b[2]) % p),
            std::int64_t((std::uint64_t(a[2]) * b[1] + std::uint64_t(a[3]) * b[3]) % p), p_};
}

ModMat2 ModMat2::operator+(const ModMat2& o) const {
    require_same_field(o);
    return {e_[0] + o.e_[0], e_[1] + o.e_[1], e_[2] + o.e_[2], e_[3] + o.e_[3], p_};
}

ModMat2 ModMat2::operator-(const ModMat2& o) const {
    require_same_field(o);
    return {std::int64_t(e_[0]) - o.e_[0], std::int64_t(e_[1]) - o.e_[1], std::int64_t(e_[2]) - o.e_[2],
            std::int64_t(e_[3]) - o.e_[3], p_};
}

ModMat2 ModMat2::operator-() const {
    return {-std::int64_t(e_[0]), -std::int64_t(e_[1]), -std::int64_t(e_[2]), -std::int64_t(e_[3]), p_};
}

std::uint32_t ModMat2::trace_product(const ModMat2& x) const noexcept {
    // Tr(AX) = a11 x11 + a12 x21 + a21 x12 + a22 x22
    const auto& a = e_;
    const auto& b = x.e_;
    return std::uint32_t((std::uint64_t(a[0]) * b[0] + std::uint64_t(a[1]) * b[2] + std::uint64_t(a[2]) * b[1] +
                          std::uint64_t(a[3]) * b[3]) %
                         p_);
}

ModMat2 reduce(const IntMat2& m, std::uint32_t p) { return {m.a11, m.a12, m.a21, m.a22, p}; }

std::string to_literal(const ModMat2& m) {
    return std::to_string(m.a11()) + "," + std::to_string(m.a12()) + ";" + std::to_string(m.a21()) + "," +
           std::to_string(m.a22());
}

std::uint64_t group_order(std::uint32_t p) noexcept {
    const std::uint64_t q = p;
    return (q * q - 1) * (q * q - q);
}

// ---------------------------------------------------------------------------
// Conjugacy classes

std::string to_string(const ClassLabel& c) {
    switch (c.kind) {
        case ClassKind::Central: return "central:" + std::to_string(c.a);
        case ClassKind::NonSemisimple: return "nonss:" + std::to_string(c.a);
        case ClassKind::Split: return "split:" + std::to_string(c.a) + "," + std::to_string(c.b);
        case ClassKind::Elliptic: return "elliptic:" + std::to_string(c.a) + "," + std::to_string(c.b);
    }
    return {};
}

ClassLabel parse_class_label(std::string_view text, std::uint32_t p) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("class label needs 'kind:params'");
    const std::string_view kind = trim(text.substr(0, colon));
    const auto params = split(text.substr(colon + 1), ',');
    auto residue = [&](std::string_view s) { return std::uint32_t(floor_mod(parse_int(s, "class parameter"), p)); };

    if (kind == "central" || kind == "nonss") {
        if (params.size() != 1) throw std::invalid_argument("class '" + std::string(kind) + "' takes one parameter");
        const std::uint32_t a = residue(params[0]);
        if (a == 0) throw std::invalid_argument("class parameter must be a unit");
        return {kind == "central" ? ClassKind::Central : ClassKind::NonSemisimple, a, 0};
    }
    if (params.size() != 2) throw std::invalid_argument("class '" + std::string(kind) + "' takes two parameters");
    std::uint32_t a = residue(params[0]);
    std::uint32_t b = residue(params[1]);
    if (kind == "split") {
        if (a == 0 || b == 0 || a == b) throw std::invalid_argument("split class needs two distinct units");
        if (a > b) std::swap(a, b);
        return {ClassKind::Split, a, b};
    }
    if (kind == "elliptic") {
        if (b == 0) throw std::invalid_argument("elliptic class needs y != 0");
        return {ClassKind::Elliptic, a, std::min(b, p - b)};
    }
    throw std::invalid_argument("unknown class kind '" + std::string(kind) + "'");
}

ClassLabel classify_conjugacy(const FieldContext& ctx, const ModMat2& m) {
    if (m.modulus() != ctx.p()) throw std::invalid_argument("modulus mismatch");
    if (!m.is_invertible()) throw std::domain_error("not in GL(2)");
    const std::uint32_t p = ctx.p();
    const std::uint32_t tr = m.trace();
    const std::uint32_t disc = m.discriminant();
    const std::uint32_t half = ctx.inv(2);
    if (disc == 0) {
        const std::uint32_t a = ctx.mul(tr, half);
        return {m.is_scalar() ? ClassKind::Central : ClassKind::NonSemisimple, a, 0};
    }
    if (auto s = ctx.sqrt(disc)) {
        std::uint32_t a = ctx.mul(ctx.add(tr, *s), half);
        std::uint32_t b = ctx.mul(ctx.sub(tr, *s), half);
        if (a > b) std::swap(a, b);
        return {ClassKind::Split, a, b};
    }
    const std::uint32_t y2 = ctx.mul(disc, ctx.inv(ctx.mul(4 % p, ctx.tau())));
    const std::uint32_t y = *ctx.sqrt(y2);
    return {ClassKind::Elliptic, ctx.mul(tr, half), std::min(y, p - y)};
}

std::uint64_t element_order(const ModMat2& m) {
    if (!m.is_invertible()) throw std::domain_error("not in GL(2)");
    const std::uint64_t p = m.modulus();
    std::uint64_t ord = p * (p * p - 1);
    const ModMat2 one = ModMat2::identity(m.modulus());
    for (auto [q, e] : factorize(ord)) {
        while (ord % q == 0 && m.pow(ord / q) == one) ord /= q;
    }
    return ord;
}

ModMat2 class_representative(const FieldContext& ctx, const ClassLabel& c) {
    const std::uint32_t p = ctx.p();
    switch (c.kind) {
        case ClassKind::Central: return ModMat2::scalar(c.a, p);
        case ClassKind::NonSemisimple: return {c.a, 1, 0, c.a, p};
        case ClassKind::Split: return {c.a, 0, 0, c.b, p};
        case ClassKind::Elliptic: return {c.a, ctx.mul(ctx.tau(), c.b), c.b, c.a, p};
    }
    throw std::logic_error("unreachable");
}

ClassInventory::ClassInventory(std::shared_ptr<const FieldContext> ctx) : ctx_(std::move(ctx)) {
    const FieldContext& f = *ctx_;
    const std::uint32_t p = f.p();
    const std::uint64_t q = p;
    const std::uint32_t half_range = (p - 1) / 2;
    classes_.reserve(std::size_t(q * q - 1));

    auto add = [&](ClassLabel label, std::uint64_t size, std::int64_t log1, std::int64_t log2) {
        ClassInfo info{label, class_representative(f, label), size, 0, 0, 0, log1, log2};
        info.element_order = element_order(info.representative);
        info.trace = info.representative.trace();
        info.det = info.representative.det();
        classes_.push_back(info);
    };

    for (std::uint32_t a = 1; a < p; ++a) add({ClassKind::Central, a, 0}, 1, f.dlog(a), f.dlog2(a, 0));
    for (std::uint32_t a = 1; a < p; ++a) add({ClassKind::NonSemisimple, a, 0}, q * q - 1, f.dlog(a), f.dlog2(a, 0));
    split_offset_.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a) {
        split_offset_[a] = classes_.size();
        for (std::uint32_t b = a + 1; b < p; ++b) add({ClassKind::Split, a, b}, q * q + q, f.dlog(a), f.dlog(b));
    }
    for (std::uint32_t x = 0; x < p; ++x) {
        for (std::uint32_t y = 1; y <= half_range; ++y) {
            const std::uint32_t norm = f.sub(f.mul(x, x), f.mul(f.tau(), f.mul(y, y)));
            add({ClassKind::Elliptic, x, y}, q * q - q, f.dlog(norm), f.dlog2(x, y));
        }
    }

    by_trace_det_.assign(std::size_t(p) * p, std::int32_t(-1 - std::int64_t(classes_.size())));
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        const ClassInfo& c = classes_[i];
        const std::size_t key = std::size_t(c.trace) * p + c.det;
        switch (c.label.kind) {
            case ClassKind::Central: by_trace_det_[key] = -std::int32_t(i) - 1; break;
            case ClassKind::NonSemisimple: break;
            default: by_trace_det_[key] = std::int32_t(i);
        }
    }
}

std::size_t ClassInventory::index_of(const ClassLabel& label) const {
    const std::uint32_t p = ctx_->p();
    const std::uint32_t half_range = (p - 1) / 2;
    auto bad = [&] { return std::invalid_argument("class label " + to_string(label) + " is not canonical"); };
    switch (label.kind) {
        case ClassKind::Central:
            if (label.a == 0 || label.a >= p) throw bad();
            return label.a - 1;
        case ClassKind::NonSemisimple:
            if (label.a == 0 || label.a >= p) throw bad();
            return p - 1 + label.a - 1;
        case ClassKind::Split:
            if (label.a == 0 || label.a >= label.b || label.b >= p) throw bad();
            return split_offset_[label.a] + (label.b - label.a - 1);
        case ClassKind::Elliptic: {
            if (label.a >= p || label.b == 0 || label.b > half_range) throw bad();
            const std::size_t base = 2 * std::size_t(p - 1) + std::size_t(p - 1) * (p - 2) / 2;
            return base + std::size_t(label.a) * half_range + (label.b - 1);
        }
    }
    throw bad();
}

std::size_t ClassInventory::index_of(const ModMat2& m) const {
    if (m.modulus() != ctx_->p()) throw std::invalid_argument("modulus mismatch");
    const std::int64_t idx = index_of(m.a11(), m.a12(), m.a21(), m.a22());
    if (idx < 0) throw std::domain_error("not in GL(2)");
    return std::size_t(idx);
}

// ---------------------------------------------------------------------------
// Bruhat cells

ModMat2 BruhatFactorization::reassemble() const {
    const ModMat2 x_l(l, 0, 0, 1, p);
    const ModMat2 x_m(1, 0, 0, m, p);
    const ModMat2 x_up(1, u_prime, 0, 1, p);
    const ModMat2 head = cell == BruhatCell::PU ? ModMat2(1, 0, u, 1, p) : ModMat2(0, 1, 1, 0, p);
    return head * x_l * x_m * x_up;
}

BruhatFactorization bruhat_factorize(const ModMat2& x) {
    const std::uint32_t p = x.modulus();
    const std::uint32_t det = x.det();
    if (det == 0) throw std::domain_error("not in GL(2)");
    auto inv = [p](std::uint32_t a) { return std::uint32_t(pow_mod(a, p - 2, p)); };
    BruhatFactorization f;
    f.p = p;
    if (x.a11() != 0) {
        const std::uint32_t ia = inv(x.a11());
        f.cell = BruhatCell::PU;
        f.l = x.a11();
        f.u_prime = mulmod(x.a12(), ia, p);
        f.u = mulmod(x.a21(), ia, p);
        f.m = mulmod(det, ia, p);
    } else {
        f.cell = BruhatCell::WP;
        f.l = x.a21();
        f.m = x.a12();
        f.u_prime = mulmod(x.a22(), inv(x.a21()), p);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Residue sets

std::string to_string(const ResidueSet& s) {
    switch (s.kind) {
        case SetKind::Nonsingular: return "nonsingular";
        case SetKind::Elliptic: return "elliptic";
        case SetKind::Primitive: return "primitive";
        case SetKind::DiscZero: return "disc-zero";
        case SetKind::Class: return "class:" + to_string(*s.class_label);
    }
    return {};
}

ResidueSet parse_residue_set(std::string_view text, std::uint32_t p) {
    text = trim(text);
    if (text == "nonsingular") return {SetKind::Nonsingular, std::nullopt};
    if (text == "elliptic") return {SetKind::Elliptic, std::nullopt};
    if (text == "primitive") return {SetKind::Primitive, std::nullopt};
    if (text == "disc-zero" || text == "disc_zero") return {SetKind::DiscZero, std::nullopt};
    if (text.starts_with("class:")) return {SetKind::Class, parse_class_label(text.substr(6), p)};
    throw std::invalid_argument("unknown set kind '" + std::string(text) + "'");
}

namespace {

bool primitive_class(const ClassInventory& inv, const ClassInfo& c) {
    return c.label.kind == ClassKind::Elliptic && c.element_order == inv.field().quad_order();
}

}  // namespace

std::vector<std::uint8_t> class_membership(const ClassInventory& inv, const ResidueSet& set) {
    if (set.kind == SetKind::DiscZero) throw std::invalid_argument("disc-zero is not a union of classes");
    std::vector<std::uint8_t> flags(inv.size(), 0);
    std::optional<std::size_t> target;
    if (set.kind == SetKind::Class) {
        if (!set.class_label) throw std::invalid_argument("class set without a label");
        target = inv.index_of(*set.class_label);
    }
    for (std::size_t i = 0; i < inv.size(); ++i) {
        const ClassInfo& c = inv[i];
        switch (set.kind) {
            case SetKind::Nonsingular: flags[i] = 1; break;
            case SetKind::Elliptic: flags[i] = c.label.kind == ClassKind::Elliptic; break;
            case SetKind::Primitive: flags[i] = primitive_class(inv, c); break;
            case SetKind::DiscZero:
                flags[i] = c.label.kind == ClassKind::Central || c.label.kind == ClassKind::NonSemisimple;
                break;
            case SetKind::Class: flags[i] = i == *target; break;
        }
    }
    return flags;
}

bool set_membership(const ClassInventory& inv, const ModMat2& m, const ResidueSet& set) {
    if (m.modulus() != inv.p()) throw std::invalid_argument("modulus mismatch");
    if (set.kind == SetKind::DiscZero) return m.discriminant() == 0;
    if (!m.is_invertible()) return false;
    const ClassInfo& c = inv[inv.index_of(m)];
    switch (set.kind) {
        case SetKind::Nonsingular: return true;
        case SetKind::Elliptic: return c.label.kind == ClassKind::Elliptic;
        case SetKind::Primitive: return primitive_class(inv, c);
        case SetKind::Class:
            if (!set.class_label) throw std::invalid_argument("class set without a label");
            return c.label == *set.class_label;
        case SetKind::DiscZero: break;
    }
    return false;
}

std::uint64_t set_cardinality(const ClassInventory& inv, const ResidueSet& set) {
    const std::uint64_t p = inv.p();
    switch (set.kind) {
        case SetKind::Nonsingular: return (p * p - 1) * (p * p - p);
        case SetKind::Elliptic: return (p * p - p) * (p * p - p) / 2;
        case SetKind::Primitive: return (p * p - p) * totient(p * p - 1) / 2;
        case SetKind::DiscZero: return p * p * p;
        case SetKind::Class:
            if (!set.class_label) throw std::invalid_argument("class set without a label");
            return inv[inv.index_of(*set.class_label)].size;
    }
    throw std::invalid_argument("unknown set kind");
}

std::vector<std::uint8_t> membership_table(const ClassInventory& inv, const ResidueSet& set) {
    const std::uint32_t p = inv.p();
    std::vector<std::uint8_t> table(std::size_t(p) * p * p * p, 0);
    if (set.kind == SetKind::DiscZero) {
        std::size_t i = 0;
        for (std::uint32_t a = 0; a < p; ++a)
            for (std::uint32_t b = 0; b < p; ++b)
                for (std::uint32_t c = 0; c < p; ++c)
                    for (std::uint32_t d = 0; d < p; ++d, ++i) {
                        const std::uint64_t diff = (a + p - d) % p;
                        table[i] = (diff * diff + 4ull * b * c) % p == 0;
                    }
        return table;
    }
    const auto flags = class_membership(inv, set);
    std::size_t i = 0;
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c)
                for (std::uint32_t d = 0; d < p; ++d, ++i) {
                    const std::int64_t k = inv.index_of(a, b, c, d);
                    table[i] = k >= 0 && flags[std::size_t(k)];
                }
    return table;
}

}  // namespace gl2
