#include "gl2/char_table.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace gl2 {

namespace {

std::uint64_t parse_u(std::string_view s, std::int64_t modulus) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed representation parameter '" + std::string(s) + "'");
    return std::uint64_t(floor_mod(v, modulus));
}

std::uint64_t quad_order(std::uint32_t p) { return std::uint64_t(p) * p - 1; }

std::uint64_t cuspidal_canonical(std::uint64_t k, std::uint32_t p) {
    const std::uint64_t m = quad_order(p);
    return std::min(k % m, (k % m) * p % m);
}

}  // namespace

std::string kind_name(IrrepKind kind) {
    switch (kind) {
        case IrrepKind::OneDim: return "onedim";
        case IrrepKind::Principal: return "principal";
        case IrrepKind::SteinbergTwist: return "steinberg";
        case IrrepKind::Cuspidal: return "cuspidal";
    }
    return {};
}

std::string to_string(const IrrepLabel& r) {
    if (r.kind == IrrepKind::Principal) return "principal:" + std::to_string(r.k) + "," + std::to_string(r.l);
    return kind_name(r.kind) + ":" + std::to_string(r.k);
}

IrrepLabel canonical_irrep(const IrrepLabel& r, std::uint32_t p) {
    const std::uint64_t n = p - 1;
    switch (r.kind) {
        case IrrepKind::OneDim:
        case IrrepKind::SteinbergTwist: return {r.kind, r.k % n, 0};
        case IrrepKind::Principal: {
            std::uint64_t k = r.k % n, l = r.l % n;
            if (k == l) throw std::invalid_argument("principal series needs two distinct characters");
            if (k > l) std::swap(k, l);
            return {r.kind, k, l};
        }
        case IrrepKind::Cuspidal: {
            const std::uint64_t k = r.k % quad_order(p);
            if (k % (p + 1) == 0) throw std::invalid_argument("cuspidal index must not be divisible by p+1");
            return {r.kind, cuspidal_canonical(k, p), 0};
        }
    }
    throw std::invalid_argument("unknown representation kind");
}

IrrepLabel parse_irrep_label(std::string_view text, std::uint32_t p) {
    if (text == "trivial") return IrrepLabel::trivial();
    if (text == "st") return IrrepLabel::steinberg();
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("unknown representation '" + std::string(text) + "'");
    const std::string_view kind = text.substr(0, colon);
    const std::string_view params = text.substr(colon + 1);
    const auto n = std::int64_t(p - 1);
    if (kind == "onedim") return canonical_irrep({IrrepKind::OneDim, parse_u(params, n), 0}, p);
    if (kind == "steinberg") return canonical_irrep({IrrepKind::SteinbergTwist, parse_u(params, n), 0}, p);
    if (kind == "cuspidal")
        return canonical_irrep({IrrepKind::Cuspidal, parse_u(params, std::int64_t(quad_order(p))), 0}, p);
    if (kind == "principal") {
        const std::size_t comma = params.find(',');
        if (comma == std::string_view::npos) throw std::invalid_argument("principal series takes two parameters");
        return canonical_irrep(
            {IrrepKind::Principal, parse_u(params.substr(0, comma), n), parse_u(params.substr(comma + 1), n)}, p);
    }
    throw std::invalid_argument("unknown representation kind '" + std::string(kind) + "'");
}

std::uint64_t irrep_dimension(const IrrepLabel& r, std::uint32_t p) {
    switch (r.kind) {
        case IrrepKind::OneDim: return 1;
        case IrrepKind::Principal: return p + 1;
        case IrrepKind::SteinbergTwist: return p;
        case IrrepKind::Cuspidal: return p - 1;
    }
    return 0;
}

int unit_multiplicity(const IrrepLabel& r) {
    switch (r.kind) {
        case IrrepKind::OneDim:
        case IrrepKind::SteinbergTwist: return r.k == 0 ? 2 : 0;
        case IrrepKind::Principal: return (r.k == 0) != (r.l == 0) ? 1 : 0;
        case IrrepKind::Cuspidal: return 0;
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct CharacterTable::Impl {
    ClassInventory inventory;
    std::vector<IrrepLabel> irreps;
    std::vector<std::uint64_t> dims;

    explicit Impl(std::uint32_t p) : inventory(ClassInventory::make(p)) {}

    Complex value(const IrrepLabel& r, const ClassInfo& c) const {
        const FieldContext& f = inventory.field();
        const std::int64_t p = f.p();
        const auto chi = [&](std::uint64_t k, std::int64_t log) { return f.unit_root_p(std::int64_t(k) * log); };
        const std::int64_t log1 = c.log1;
        const std::int64_t log2 = c.log2;
        switch (r.kind) {
            case IrrepKind::OneDim:
                switch (c.label.kind) {
                    case ClassKind::Central:
                    case ClassKind::NonSemisimple: return chi(r.k, 2 * log1);
                    case ClassKind::Split: return chi(r.k, log1 + log2);
                    case ClassKind::Elliptic: return chi(r.k, log1);
                }
                break;
            case IrrepKind::Principal:
                switch (c.label.kind) {
                    case ClassKind::Central: return double(p + 1) * chi(r.k + r.l, log1);
                    case ClassKind::NonSemisimple: return chi(r.k + r.l, log1);
                    case ClassKind::Split:
                        return f.unit_root_p(std::int64_t(r.k) * log1 + std::int64_t(r.l) * log2) +
                               f.unit_root_p(std::int64_t(r.k) * log2 + std::int64_t(r.l) * log1);
                    case ClassKind::Elliptic: return 0.0;
                }
                break;
            case IrrepKind::SteinbergTwist:
                switch (c.label.kind) {
                    case ClassKind::Central: return double(p) * chi(r.k, 2 * log1);
                    case ClassKind::NonSemisimple: return 0.0;
                    case ClassKind::Split: return chi(r.k, log1 + log2);
                    case ClassKind::Elliptic: return -chi(r.k, log1);
                }
                break;
            case IrrepKind::Cuspidal: {
                const auto k = std::int64_t(r.k);
                switch (c.label.kind) {
                    case ClassKind::Central: return double(p - 1) * f.unit_root_quad(k * log2);
                    case ClassKind::NonSemisimple: return -f.unit_root_quad(k * log2);
                    case ClassKind::Split: return 0.0;
                    case ClassKind::Elliptic: return -(f.unit_root_quad(k * log2) + f.unit_root_quad(k * p * log2));
                }
                break;
            }
        }
        return 0.0;
    }
};

CharacterTable CharacterTable::build(std::uint32_t p) {
    if (p < 3 || p > 101 || !is_prime(p))
        throw std::invalid_argument("character table needs a prime 3 <= p <= 101, got " + std::to_string(p));
    auto impl = std::make_shared<Impl>(p);
    auto add = [&](IrrepLabel r) {
        impl->irreps.push_back(r);
        impl->dims.push_back(irrep_dimension(r, p));
    };
    for (std::uint64_t k = 0; k + 1 < p; ++k) add({IrrepKind::OneDim, k, 0});
    for (std::uint64_t k = 0; k + 1 < p; ++k)
        for (std::uint64_t l = k + 1; l + 1 < p; ++l) add({IrrepKind::Principal, k, l});
    for (std::uint64_t k = 0; k + 1 < p; ++k) add({IrrepKind::SteinbergTwist, k, 0});
    for (std::uint64_t k = 1; k < quad_order(p); ++k)
        if (k % (p + 1) != 0 && cuspidal_canonical(k, p) == k) add({IrrepKind::Cuspidal, k, 0});
    return CharacterTable(std::move(impl));
}

std::uint32_t CharacterTable::p() const noexcept { return impl_->inventory.p(); }
const ClassInventory& CharacterTable::classes() const noexcept { return impl_->inventory; }
std::size_t CharacterTable::size() const noexcept { return impl_->irreps.size(); }
const std::vector<IrrepLabel>& CharacterTable::irreps() const noexcept { return impl_->irreps; }
const IrrepLabel& CharacterTable::irrep(std::size_t i) const { return impl_->irreps.at(i); }
std::uint64_t CharacterTable::dim(std::size_t i) const { return impl_->dims.at(i); }

std::size_t CharacterTable::index_of(const IrrepLabel& r) const {
    const IrrepLabel c = canonical_irrep(r, p());
    const auto& v = impl_->irreps;
    const auto it = std::find(v.begin(), v.end(), c);
    if (it == v.end()) throw std::invalid_argument("no irreducible labelled " + to_string(r));
    return std::size_t(it - v.begin());
}

Complex CharacterTable::value(std::size_t irrep, std::size_t cls) const {
    return impl_->value(impl_->irreps[irrep], impl_->inventory[cls]);
}

std::vector<Complex> CharacterTable::row(std::size_t irrep) const {
    std::vector<Complex> out(impl_->inventory.size());
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = value(irrep, c);
    return out;
}

Complex char_value(const CharacterTable& t, std::size_t irrep, const ClassLabel& c) {
    return t.value(irrep, t.classes().index_of(c));
}

Complex char_value(const CharacterTable& t, std::size_t irrep, const ModMat2& m) {
    if (m.modulus() != t.p()) throw std::invalid_argument("modulus mismatch");
    const std::int64_t c = t.classes().index_of(m.a11(), m.a12(), m.a21(), m.a22());
    return c < 0 ? Complex{} : t.value(irrep, std::size_t(c));
}

Complex class_inner_product(const ClassInventory& inv, const std::vector<Complex>& f, const std::vector<Complex>& g) {
    if (f.size() != inv.size() || g.size() != inv.size())
        throw std::invalid_argument("class function length mismatch");
    Complex s = 0;
    for (std::size_t c = 0; c < inv.size(); ++c) s += double(inv[c].size) * f[c] * std::conj(g[c]);
    return s / double(inv.group_order());
}

// ---------------------------------------------------------------------------
// Induction

std::uint64_t subgroup_order(const InducingSubgroup& h, std::uint32_t p) {
    const std::uint64_t q = p;
    return h.kind == InducingSubgroup::Kind::Borel ? q * (q - 1) * (q - 1) : q * (q - 1);
}

bool subgroup_contains(const InducingSubgroup& h, const ModMat2& m) {
    if (m.a21() != 0 || !m.is_invertible()) return false;
    return h.kind == InducingSubgroup::Kind::Borel || m.a11() == 1;
}

Complex inducing_character(const FieldContext& ctx, const InducingSubgroup& h, const ModMat2& m) {
    if (h.kind == InducingSubgroup::Kind::MirabolicUnipotent) return 1.0;
    return ctx.unit_root_p(std::int64_t(h.k1) * ctx.dlog(m.a11()) + std::int64_t(h.k2) * ctx.dlog(m.a22()));
}

Complex induced_character(const ClassInventory& inv, const InducingSubgroup& h, const ClassLabel& target) {
    const FieldContext& f = inv.field();
    const std::uint32_t p = f.p();
    const ModMat2 g = class_representative(f, target);
    Complex sum = 0;
    for_each_invertible(p, [&](const ModMat2& x) {
        const ModMat2 y = x.inverse() * g * x;
        if (subgroup_contains(h, y)) sum += inducing_character(f, h, y);
    });
    return sum / double(subgroup_order(h, p));
}

std::vector<Complex> induced_character_row(const ClassInventory& inv, const InducingSubgroup& h) {
    const FieldContext& f = inv.field();
    const std::uint32_t p = f.p();
    std::vector<Complex> binned(inv.size(), 0.0);
    const std::uint32_t a_max = h.kind == InducingSubgroup::Kind::Borel ? p - 1 : 1;
    for (std::uint32_t a = 1; a <= a_max; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t d = 1; d < p; ++d) {
                const ModMat2 m(a, b, 0, d, p);
                binned[inv.index_of(m)] += inducing_character(f, h, m);
            }
    const double order_h = double(subgroup_order(h, p));
    const double order_g = double(inv.group_order());
    for (std::size_t c = 0; c < inv.size(); ++c) binned[c] *= order_g / double(inv[c].size) / order_h;
    return binned;
}

}  // namespace gl2
