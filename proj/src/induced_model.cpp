#include "gl2/induced_model.hpp"

#include <cmath>
#include <stdexcept>

namespace gl2 {

InducedModel InducedModel::borel(std::shared_ptr<const FieldContext> ctx, std::uint64_t k1, std::uint64_t k2) {
    if (!ctx) throw std::invalid_argument("missing field context");
    const std::uint64_t n = ctx->p() - 1;
    return InducedModel(std::move(ctx), k1 % n, k2 % n);
}

InducedModel InducedModel::steinberg(std::shared_ptr<const FieldContext> ctx) {
    InducedModel m = borel(std::move(ctx), 0, 0);
    const Eigen::Index n = m.p() + 1;
    Eigen::MatrixXcd seed = Eigen::MatrixXcd::Identity(n, n);
    seed.col(0).setOnes();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(seed);
    const Eigen::MatrixXcd q = qr.householderQ();
    m.basis_ = q.rightCols(n - 1);
    return m;
}

Eigen::MatrixXcd InducedModel::on_line(const ModMat2& g) const {
    const FieldContext& f = *ctx_;
    const std::uint32_t p = f.p();
    if (g.modulus() != p) throw std::invalid_argument("matrix modulus does not match the model");
    if (!g.is_invertible()) throw std::domain_error("not in GL(2)");
    const ModMat2 g_inv = g.inverse();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(p + 1, p + 1);

    // g^-1 r_i = r_j b with b upper triangular; rho(g)[i][j] = theta(b)^-1.
    for (std::uint32_t i = 0; i <= p; ++i) {
        const ModMat2 r = i == 0 ? ModMat2::identity(p) : ModMat2(i - 1, 1, 1, 0, p);
        const ModMat2 x = g_inv * r;
        std::uint32_t j = 0;
        std::uint32_t diag1 = x.a11(), diag2 = x.a22();
        if (x.a21() != 0) {
            const std::uint32_t t = f.mul(x.a11(), f.inv(x.a21()));
            j = 1 + t;
            diag1 = x.a21();
            diag2 = f.sub(x.a12(), f.mul(t, x.a22()));
        }
        const std::int64_t phase = std::int64_t(k1_) * f.dlog(diag1) + std::int64_t(k2_) * f.dlog(diag2);
        rho(i, j) = f.unit_root_p(-phase);
    }
    return rho;
}

Eigen::MatrixXcd InducedModel::operator()(const ModMat2& g) const {
    if (!basis_) return on_line(g);
    return basis_->adjoint() * on_line(g) * *basis_;
}

Eigen::VectorXcd InducedModel::coordinates(const Eigen::VectorXcd& v) const {
    if (v.size() != Eigen::Index(p()) + 1) throw std::invalid_argument("expected a function on P^1");
    if (!basis_) return v;
    return basis_->adjoint() * v;
}

Eigen::MatrixXcd projection(const InducedModel& model, ProjectionSubgroup h) {
    const std::uint32_t p = model.p();
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(model.dim(), model.dim());
    std::uint64_t count = 0;
    const std::uint32_t a_max = h == ProjectionSubgroup::Borel ? p - 1 : 1;
    for (std::uint32_t a = 1; a <= a_max; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t d = 1; d < p; ++d) {
                sum += model(ModMat2(a, b, 0, d, p));
                ++count;
            }
    return sum / double(count);
}

ProjectionRank projection_rank(const InducedModel& model, ProjectionSubgroup h) {
    const Eigen::MatrixXcd pr = projection(model, h);
    ProjectionRank out;
    out.trace = pr.trace().real();
    out.idempotency_error = (pr * pr - pr).cwiseAbs().maxCoeff();
    const double rounded = std::round(out.trace);
    if (std::abs(out.trace - rounded) > 0.01 || std::abs(pr.trace().imag()) > 0.01)
        throw std::runtime_error("projection trace " + std::to_string(out.trace) + " is not an integer");
    out.rank = int(rounded);
    if (out.rank == 1) {
        // Any nonzero column spans the image.
        Eigen::Index best = 0;
        pr.colwise().norm().maxCoeff(&best);
        out.invariant = pr.col(best);
    }
    return out;
}

double alignment(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
    const double nu = u.norm(), nv = v.norm();
    if (nu == 0 || nv == 0) return 0;
    return std::abs(u.dot(v)) / (nu * nv);
}

}  // namespace gl2
