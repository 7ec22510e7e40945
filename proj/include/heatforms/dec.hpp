#pragma once

#include "heatforms/complex.hpp"

namespace heatforms {

enum class MassScheme {
    identity,
    barycentric_lumped,
};

const char* mass_scheme_name(MassScheme s);
MassScheme parse_mass_scheme(const std::string& name);

/// Discrete exterior derivative d_k: C^k -> C^{k+1}, the transpose of the
/// degree-(k+1) boundary matrix.  Requires 0 <= k < c.dim.
LinearOperator coboundary(const SimplicialComplex& c, int k);

/// Diagonal mass matrix M_k realizing the L2 pairing on k-cochains.
/// identity: identity matrix.  barycentric_lumped: each top simplex
/// distributes its volume evenly over its k-faces (vertex and edge get a
/// third of each incident triangle area, face gets its own area).
/// Throws on degenerate (zero-volume) simplices under barycentric_lumped.
LinearOperator mass_matrix(const SimplicialComplex& c, int k, MassScheme scheme);

/// Codifferential delta_k = M_{k-1}^{-1} d_{k-1}^T M_k, the M-adjoint of d.
/// Requires 1 <= k <= c.dim.
LinearOperator codifferential(const SimplicialComplex& c, int k, MassScheme scheme);

/// Hodge Laplacian L_k = delta_{k+1} d_k + d_{k-1} delta_k (absent terms
/// dropped at the boundary degrees).  Self-adjoint in the M_k pairing.
LinearOperator hodge_laplacian(const SimplicialComplex& c, int k, MassScheme scheme);

/// f^T M g.  Throws on dimension/degree mismatch.
double inner_product(const Eigen::VectorXd& f, const Eigen::VectorXd& g,
                     const LinearOperator& M);

}  // namespace heatforms
