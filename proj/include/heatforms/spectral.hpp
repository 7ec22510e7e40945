#pragma once

#include <iosfwd>
#include <string>

#include "heatforms/dec.hpp"

namespace heatforms {

/// Generalized eigenpairs of (L_k, M_k).  Eigenvectors are the columns of
/// `eigenvectors`, M_k-orthonormal, in ascending eigenvalue order with a
/// fixed sign convention (largest-magnitude component positive).
struct SpectralData {
    int degree = 0;
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
    Eigen::VectorXd mass_diagonal;
    double zero_tol = 0.0;

    int size() const { return static_cast<int>(eigenvalues.size()); }
    bool is_harmonic(int i) const { return eigenvalues[i] <= zero_tol; }
    int harmonic_count() const;
    /// Smallest eigenvalue above zero_tol; returns +inf if none.
    double smallest_positive() const;
};

/// Discrete double form K_k(x,y,t): row index is the x slot, column index
/// the y slot.  `tag` is "heat", "tail" or "harmonic".
struct KernelMatrix {
    int degree = 0;
    double time = 0.0;
    std::string tag;
    Eigen::MatrixXd entries;
};

/// Solve L phi = lambda M phi for a diagonal positive M.  Throws on
/// non-positive mass entries.  zero_tol = 1e-9 * (lambda_max + 1).
SpectralData eigendecompose(const LinearOperator& L, const LinearOperator& M);

/// Convenience: decompose (L_k, M_k) of a complex.
SpectralData eigendecompose(const SimplicialComplex& c, int k, MassScheme scheme);

/// K_k(t) = sum_i e^{-lambda_i t} phi_i phi_i^T.  Throws on negative t.
KernelMatrix heat_kernel_matrix(const SpectralData& s, double t);

/// Tail integral over the nonharmonic spectrum:
/// sum_{lambda > 0} (e^{-lambda t} / lambda) phi phi^T.
KernelMatrix tail_integral_kernel(const SpectralData& s, double t);

/// Projector onto the harmonic modes (the large-time limit of the kernel).
KernelMatrix harmonic_projector(const SpectralData& s);

/// Heat flow of a cochain: heat_kernel_matrix(s,t) * M * f.
Eigen::VectorXd evolve(const SpectralData& s, const Eigen::VectorXd& f, double t);

/// Row-major CSV dump, 17 significant digits per entry.
void write_kernel_csv(std::ostream& out, const KernelMatrix& k);

}  // namespace heatforms
