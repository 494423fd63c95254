#include "gl2/gauss_sums.hpp"

#include <cmath>
#include <stdexcept>

namespace gl2 {

namespace {

// Per-class sums of e_p(Tr(AX)), optionally split by Bruhat cell.
struct ClassSums {
    std::vector<Complex> pu;
    std::vector<Complex> wp;
};

ClassSums class_sums(const ClassInventory& inv, const ModMat2& a) {
    const FieldContext& f = inv.field();
    const std::uint32_t p = f.p();
    if (a.modulus() != p) throw std::invalid_argument("modulus mismatch");
    ClassSums s{std::vector<Complex>(inv.size()), std::vector<Complex>(inv.size())};
    const auto& e = a.entries();
    for (std::uint32_t x11 = 0; x11 < p; ++x11)
        for (std::uint32_t x12 = 0; x12 < p; ++x12)
            for (std::uint32_t x21 = 0; x21 < p; ++x21)
                for (std::uint32_t x22 = 0; x22 < p; ++x22) {
                    const std::int64_t c = inv.index_of(x11, x12, x21, x22);
                    if (c < 0) continue;
                    const std::int64_t tr = std::int64_t(e[0]) * x11 + std::int64_t(e[1]) * x21 +
                                            std::int64_t(e[2]) * x12 + std::int64_t(e[3]) * x22;
                    (x11 != 0 ? s.pu : s.wp)[std::size_t(c)] += f.additive(tr);
                }
    return s;
}

Complex dot(const CharacterTable& t, std::size_t irrep, const std::vector<Complex>& sums) {
    Complex s = 0;
    for (std::size_t c = 0; c < sums.size(); ++c) s += t.value(irrep, c) * sums[c];
    return s;
}

}  // namespace

Complex gauss_trace_bruteforce(const CharacterTable& t, std::size_t irrep, const ModMat2& a) {
    const ClassInventory& inv = t.classes();
    const FieldContext& f = inv.field();
    if (a.modulus() != t.p()) throw std::invalid_argument("modulus mismatch");
    Complex sum = 0;
    for_each_invertible(t.p(), [&](const ModMat2& x) {
        sum += t.value(irrep, inv.index_of(x)) * f.additive(a.trace_product(x));
    });
    return sum;
}

std::vector<Complex> gauss_trace_bruteforce_all(const CharacterTable& t, const ModMat2& a) {
    const ClassSums s = class_sums(t.classes(), a);
    std::vector<Complex> total(s.pu.size());
    for (std::size_t c = 0; c < total.size(); ++c) total[c] = s.pu[c] + s.wp[c];
    std::vector<Complex> out(t.size());
    for (std::size_t r = 0; r < t.size(); ++r) out[r] = dot(t, r, total);
    return out;
}

CellTraces gauss_trace_cells(const CharacterTable& t, std::size_t irrep, const ModMat2& a) {
    const ClassInventory& inv = t.classes();
    const FieldContext& f = inv.field();
    if (a.modulus() != t.p()) throw std::invalid_argument("modulus mismatch");
    CellTraces out;
    for_each_invertible(t.p(), [&](const ModMat2& x) {
        const Complex term = t.value(irrep, inv.index_of(x)) * f.additive(a.trace_product(x));
        (bruhat_factorize(x).cell == BruhatCell::PU ? out.g1 : out.g2) += term;
    });
    return out;
}

std::vector<CellTraces> gauss_trace_cells_all(const CharacterTable& t, const ModMat2& a) {
    const ClassSums s = class_sums(t.classes(), a);
    std::vector<CellTraces> out(t.size());
    for (std::size_t r = 0; r < t.size(); ++r) out[r] = {dot(t, r, s.pu), dot(t, r, s.wp)};
    return out;
}

Complex g_scalar(const CharacterTable& t, std::size_t irrep) {
    return gauss_trace_bruteforce(t, irrep, ModMat2::identity(t.p())) / double(t.dim(irrep));
}

SingularType singular_type(const ModMat2& a) {
    if (a.is_invertible() || a.is_zero()) throw std::invalid_argument("expected a nonzero singular matrix");
    const std::uint32_t tr = a.trace();
    return tr == 0 ? SingularType{true, 0} : SingularType{false, tr};
}

ModMat2 singular_representative(const SingularType& s, std::uint32_t p) {
    return s.nilpotent ? ModMat2(0, 1, 0, 0, p) : ModMat2(s.a, 0, 0, 0, p);
}

GaussTable::GaussTable(const CharacterTable& t) : t_(t), trivial_(t.trivial_index()) {
    const ClassInventory& inv = t.classes();
    const FieldContext& f = inv.field();
    g_.resize(t.size());
    for (std::size_t r = 0; r < t.size(); ++r) {
        Complex s = 0;
        for (std::size_t c = 0; c < inv.size(); ++c) s += double(inv[c].size) * t.value(r, c) * f.additive(inv[c].trace);
        g_[r] = s / double(t.dim(r));
    }
    auto ctx = inv.field_ptr();
    for (std::uint64_t k = 0; k + 1 < t.p(); ++k)
        classical_.push_back(classical_gauss_sum(MulCharacter(ctx, UnitGroup::PrimeField, std::int64_t(k))));
}

Complex GaussTable::singular_trace(std::size_t irrep, const SingularType& s) const {
    const IrrepLabel& r = t_.irrep(irrep);
    const double p = t_.p();
    const FieldContext& f = t_.field();
    if (r == IrrepLabel::trivial()) return -p * (p - 1);
    if (r == IrrepLabel::steinberg()) return s.nilpotent ? p * p * (p - 1) : -p * (p - 1);
    if (r.kind == IrrepKind::Principal && r.k == 0) {
        if (s.nilpotent) return 0.0;
        const Complex chi_a = f.unit_root_p(std::int64_t(r.l) * f.dlog(s.a));
        return p * (p - 1) * std::conj(chi_a) * classical_.at(r.l);
    }
    return 0.0;
}

Complex gauss_trace_closed(const GaussTable& gt, std::size_t irrep, const ModMat2& a) {
    const CharacterTable& t = gt.table();
    if (a.modulus() != t.p()) throw std::invalid_argument("modulus mismatch");
    if (a.is_zero()) return irrep == gt.trivial_index() ? Complex(double(t.group_order())) : Complex{};
    if (a.is_invertible()) return gt.g(irrep) * char_value(t, irrep, a.inverse());
    return gt.singular_trace(irrep, singular_type(a));
}

Complex char_ft(const GaussTable& gt, std::size_t irrep, const ModMat2& a) {
    const double p4 = std::pow(double(gt.p()), 4);
    return gauss_trace_closed(gt, irrep, -a) / p4;
}

}  // namespace gl2
