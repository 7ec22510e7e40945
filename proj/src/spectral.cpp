#include "heatforms/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace heatforms {

int SpectralData::harmonic_count() const {
    int n = 0;
    for (int i = 0; i < size(); ++i)
        if (is_harmonic(i)) ++n;
    return n;
}

double SpectralData::smallest_positive() const {
    for (int i = 0; i < size(); ++i)
        if (!is_harmonic(i)) return eigenvalues[i];
    return std::numeric_limits<double>::infinity();
}

SpectralData eigendecompose(const LinearOperator& L, const LinearOperator& M) {
    if (L.row_degree != L.col_degree || M.row_degree != M.col_degree ||
        L.row_degree != M.row_degree)
        throw std::invalid_argument("eigendecompose: degree tags must agree");
    const int n = L.rows();
    Eigen::VectorXd m = M.mat.diagonal();
    if ((m.array() <= 0.0).any())
        throw std::runtime_error("eigendecompose: non-positive mass entry");

    // M diagonal positive: reduce to a standard symmetric problem with
    // B = M^{-1/2} (M L) M^{-1/2}; symmetrize to kill assembly noise.
    Eigen::VectorXd ms = m.array().sqrt();
    Eigen::VectorXd msi = ms.cwiseInverse();
    Eigen::MatrixXd ML = M.mat * L.mat;
    ML = 0.5 * (ML + ML.transpose()).eval();
    Eigen::MatrixXd B = msi.asDiagonal() * ML * msi.asDiagonal();

    // The dense solver does not accept empty matrices (absent degrees).
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    if (n > 0) {
        solver.compute(B);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("eigendecompose: convergence failure");
    }

    SpectralData s;
    s.degree = L.row_degree;
    s.eigenvalues = n > 0 ? solver.eigenvalues() : Eigen::VectorXd(0);
    s.eigenvectors = n > 0 ? (msi.asDiagonal() * solver.eigenvectors()).eval()
                           : Eigen::MatrixXd(0, 0);
    s.mass_diagonal = m;
    const double lmax = n ? s.eigenvalues.maxCoeff() : 0.0;
    s.zero_tol = 1e-9 * (std::abs(lmax) + 1.0);

    // Sign convention: the largest-magnitude component positive.
    for (int j = 0; j < n; ++j) {
        int arg = 0;
        s.eigenvectors.col(j).cwiseAbs().maxCoeff(&arg);
        if (s.eigenvectors(arg, j) < 0) s.eigenvectors.col(j) *= -1.0;
    }
    return s;
}

SpectralData eigendecompose(const SimplicialComplex& c, int k, MassScheme scheme) {
    return eigendecompose(hodge_laplacian(c, k, scheme), mass_matrix(c, k, scheme));
}

namespace {

KernelMatrix weighted_outer(const SpectralData& s, const Eigen::VectorXd& w,
                            double t, const char* tag) {
    KernelMatrix k;
    k.degree = s.degree;
    k.time = t;
    k.tag = tag;
    k.entries = s.eigenvectors * w.asDiagonal() * s.eigenvectors.transpose();
    return k;
}

}  // namespace

KernelMatrix heat_kernel_matrix(const SpectralData& s, double t) {
    if (t < 0) throw std::invalid_argument("heat_kernel_matrix: negative t");
    Eigen::VectorXd w = (-t * s.eigenvalues.array()).exp();
    return weighted_outer(s, w, t, "heat");
}

KernelMatrix tail_integral_kernel(const SpectralData& s, double t) {
    if (t < 0) throw std::invalid_argument("tail_integral_kernel: negative t");
    Eigen::VectorXd w = Eigen::VectorXd::Zero(s.size());
    for (int i = 0; i < s.size(); ++i)
        if (!s.is_harmonic(i))
            w[i] = std::exp(-s.eigenvalues[i] * t) / s.eigenvalues[i];
    return weighted_outer(s, w, t, "tail");
}

KernelMatrix harmonic_projector(const SpectralData& s) {
    Eigen::VectorXd w = Eigen::VectorXd::Zero(s.size());
    for (int i = 0; i < s.size(); ++i)
        if (s.is_harmonic(i)) w[i] = 1.0;
    return weighted_outer(s, w, 0.0, "harmonic");
}

Eigen::VectorXd evolve(const SpectralData& s, const Eigen::VectorXd& f, double t) {
    if (f.size() != s.size())
        throw std::invalid_argument("evolve: cochain degree/size mismatch");
    if (t < 0) throw std::invalid_argument("evolve: negative t");
    Eigen::VectorXd coeffs = s.eigenvectors.transpose() * (s.mass_diagonal.asDiagonal() * f);
    coeffs.array() *= (-t * s.eigenvalues.array()).exp();
    return s.eigenvectors * coeffs;
}

void write_kernel_csv(std::ostream& out, const KernelMatrix& k) {
    char buf[64];
    for (Eigen::Index i = 0; i < k.entries.rows(); ++i) {
        for (Eigen::Index j = 0; j < k.entries.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", k.entries(i, j));
            if (j) out << ',';
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace heatforms
