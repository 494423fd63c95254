#pragma once

// Traces of matrix Gauss sums Tr G(rho, A) = sum_{X in GL(2)} chi_rho(X) e_p(Tr(AX)):
// exhaustive evaluation, the two-cell split, and closed forms.

#include "gl2/char_table.hpp"

#include <vector>

namespace gl2 {

/// One pass over X, one irreducible.
Complex gauss_trace_bruteforce(const CharacterTable& t, std::size_t irrep, const ModMat2& a);

/// One pass over X binned by class, then a dot product per irreducible.
std::vector<Complex> gauss_trace_bruteforce_all(const CharacterTable& t, const ModMat2& a);

/// G1 sums over the cell a11 != 0 (PU'), G2 over a11 = 0 (wP').
struct CellTraces {
    Complex g1;
    Complex g2;
    Complex total() const { return g1 + g2; }
};

CellTraces gauss_trace_cells(const CharacterTable& t, std::size_t irrep, const ModMat2& a);
std::vector<CellTraces> gauss_trace_cells_all(const CharacterTable& t, const ModMat2& a);

/// g(rho) = Tr G(rho, I) / d(rho), by brute force.
Complex g_scalar(const CharacterTable& t, std::size_t irrep);

/// The canonical form of a singular nonzero matrix: A_a = diag(a, 0) when the
/// trace a is nonzero, N = (0 1; 0 0) otherwise.
struct SingularType {
    bool nilpotent = false;
    std::uint32_t a = 0;  // trace when not nilpotent
};
SingularType singular_type(const ModMat2& a);
ModMat2 singular_representative(const SingularType& s, std::uint32_t p);

/// g(rho) for every irreducible, computed once from class sums at A = I, and
/// the closed-form traces built on top of it.
class GaussTable {
public:
    explicit GaussTable(const CharacterTable& t);

    const CharacterTable& table() const noexcept { return t_; }
    std::uint32_t p() const noexcept { return t_.p(); }
    Complex g(std::size_t irrep) const { return g_.at(irrep); }
    std::size_t trivial_index() const noexcept { return trivial_; }

    /// Tr G(rho, A) at the nonzero singular class of the given type.
    Complex singular_trace(std::size_t irrep, const SingularType& s) const;
    /// Classical Gauss sum of chi_k on F_p^*.
    Complex classical(std::uint64_t k) const { return classical_.at(k); }

private:
    CharacterTable t_;
    std::size_t trivial_;
    std::vector<Complex> g_;
    std::vector<Complex> classical_;
};

/// Closed form: A = 0 by orthogonality, invertible A by equivariance
/// (g(rho) chi_rho(A^-1)), singular A by reduction to A_a or N.
Complex gauss_trace_closed(const GaussTable& gt, std::size_t irrep, const ModMat2& a);

/// Fourier transform of the extended character: p^-4 Tr G(rho, -A).
Complex char_ft(const GaussTable& gt, std::size_t irrep, const ModMat2& a);

}  // namespace gl2
