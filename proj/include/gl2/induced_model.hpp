#pragma once

// Explicit matrix models of Ind_{P'}(theta) on functions on the projective
// line, the Steinberg submodel, and averaging projections onto subgroup
// invariants.

#include "gl2/char_table.hpp"

#include <Eigen/Dense>

#include <optional>

namespace gl2 {

/// Basis: index 0 is the coset of the identity (the point at infinity),
/// index 1 + t is the coset of (t 1; 1 0).
class InducedModel {
public:
    /// Ind_{P'}(chi_k1 (x) chi_k2), dimension p + 1.
    static InducedModel borel(std::shared_ptr<const FieldContext> ctx, std::uint64_t k1, std::uint64_t k2);
    /// St: sum-zero functions on P^1 in an orthonormal basis, dimension p.
    static InducedModel steinberg(std::shared_ptr<const FieldContext> ctx);

    std::uint32_t p() const noexcept { return ctx_->p(); }
    Eigen::Index dim() const noexcept { return is_steinberg() ? ctx_->p() : ctx_->p() + 1; }
    bool is_steinberg() const noexcept { return basis_.has_value(); }
    std::uint64_t k1() const noexcept { return k1_; }
    std::uint64_t k2() const noexcept { return k2_; }

    Eigen::MatrixXcd operator()(const ModMat2& g) const;

    /// Coordinates of a function on P^1 (length p + 1) in this model's basis.
    Eigen::VectorXcd coordinates(const Eigen::VectorXcd& on_line) const;

private:
    InducedModel(std::shared_ptr<const FieldContext> ctx, std::uint64_t k1, std::uint64_t k2)
        : ctx_(std::move(ctx)), k1_(k1), k2_(k2) {}
    Eigen::MatrixXcd on_line(const ModMat2& g) const;

    std::shared_ptr<const FieldContext> ctx_;
    std::uint64_t k1_ = 0;
    std::uint64_t k2_ = 0;
    std::optional<Eigen::MatrixXcd> basis_;  // (p+1) x p, orthonormal columns
};

enum class ProjectionSubgroup { MirabolicUnipotent, Borel };

/// Pr_H = |H|^-1 sum_{h in H} rho(h)
Eigen::MatrixXcd projection(const InducedModel& model, ProjectionSubgroup h);

struct ProjectionRank {
    int rank = 0;
    double trace = 0;
    double idempotency_error = 0;  // max |Pr^2 - Pr|
    std::optional<Eigen::VectorXcd> invariant;
};

/// Rank from the rounded trace of Pr_H (a projection, so the trace is an
/// integer up to rounding noise); fails if the trace is not within 0.01 of an
/// integer.
ProjectionRank projection_rank(const InducedModel& model, ProjectionSubgroup h);

/// |<u, v>| / (|u| |v|), 1 when the vectors are parallel.
double alignment(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v);

}  // namespace gl2
