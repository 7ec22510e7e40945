#pragma once

#include "heatforms/report.hpp"
#include "heatforms/spectral.hpp"

namespace heatforms {

// All residual norms are Frobenius, relative to the norm of the left-hand
// side plus machine epsilon.  Kernel matrices use the convention
// row = x slot, column = y slot; a y-slot operator A therefore acts by
// right multiplication with A^T.

/// d_x K_k = delta_y K_{k+1} and its x<->y mirror, as matrix residuals,
/// at each sampled time.  Requires 0 <= k < c.dim.
VerificationReport check_lemma1(const SimplicialComplex& c, MassScheme scheme,
                                int k, const std::vector<double>& times,
                                double tol = 1e-8);

/// K_k(t) = C + d_x d_y Tail_{k-1}(t) + delta_x delta_y Tail_{k+1}(t)
/// on a closed complex, absent-degree terms dropped.
VerificationReport check_theorem_compact(const SimplicialComplex& c,
                                         MassScheme scheme, int k,
                                         const std::vector<double>& times,
                                         double tol = 1e-8);

/// Tests the time-rescaling identity for the diffusion equation
/// (Delta + c dt) w = 0 against both candidate Green's functions,
/// G_k(t) := K_k(c t) (variant A) and G_k(t) := K_k(t / c) (variant B),
/// with the reconstruction tails taken at lower limit c*t.  The report
/// names which variant satisfies the identity.
VerificationReport check_diffusion_scaling(const SimplicialComplex& c,
                                           MassScheme scheme, int k,
                                           double cfactor,
                                           const std::vector<double>& times,
                                           double tol = 1e-8);

/// Multiset equality of the nonzero eigenvalues of the even-degree and
/// odd-degree Laplacians (the spectral shadow of d L_k = L_{k+1} d).
VerificationReport check_supersymmetry(const SimplicialComplex& c,
                                       MassScheme scheme, double tol = 1e-8);

/// Evolves f by the spectral semigroup and by pairing with the kernel
/// reconstructed from the compact theorem; reports the max discrepancy.
VerificationReport check_evolution_equivalence(const SimplicialComplex& c,
                                               MassScheme scheme, int k,
                                               const Eigen::VectorXd& f,
                                               const std::vector<double>& times,
                                               double tol = 1e-8);

/// Informational only: gap between the nonzero spectra of L_0 and L_2 on a
/// 2-complex.  Discrete star duality is not exact on general meshes, so
/// this never gates.
VerificationReport duality_diagnostic(const SimplicialComplex& c,
                                      MassScheme scheme);

/// Harmonic dimensions per degree (the discrete Betti numbers).
std::vector<int> harmonic_dimensions(const SimplicialComplex& c,
                                     MassScheme scheme);

}  // namespace heatforms
