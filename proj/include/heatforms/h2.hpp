#pragma once

#include <Eigen/Dense>

namespace heatforms {

/// Upper half-plane point, metric (da^2 + db^2) / b^2.  Throws for b <= 0.
struct H2Point {
    double a = 0.0;
    double b = 1.0;
    H2Point() = default;
    H2Point(double a_, double b_);
};

/// Radial kernel value with the quadrature error estimate that produced it.
struct RadialKernelSample {
    double r = 0.0;
    double t = 0.0;
    double value = 0.0;
    double err_est = 0.0;
};

/// Geodesic distance, cosh d = 1 + (da^2 + db^2) / (2 b_x b_y).
double h2_distance(const H2Point& x, const H2Point& y);

/// Conical (Mehler) Legendre function P_{-1/2 + i rho}(cosh r), evaluated
/// through the Mehler-Dirichlet integral with the endpoint singularity
/// removed by a square-root substitution.  P(1) = 1 exactly at r = 0.
double conical_p(double rho, double r, double tol = 1e-13);

/// Scalar heat kernel of the hyperbolic plane (curvature -1):
///   K_0(r,t) = (1/2pi) Int_0^inf P_{-1/2+i rho}(cosh r)
///              rho e^{-(1/4 + rho^2) t} tanh(pi rho) d rho.
RadialKernelSample h2_k0(double r, double t, double tol = 1e-9);

/// Int_t^inf K_0(r,tau) d tau: same integrand with the extra factor
/// 1 / (1/4 + rho^2).
RadialKernelSample h2_tail(double r, double t, double tol = 1e-9);

/// 1-form heat kernel component matrix in the coordinate coframes at x
/// and y: (I + *_x *_y) d_x d_y applied to the tail, with the mixed
/// second partials taken by centered finite differences of step h.
/// Throws for coincident points or steps crossing b <= 0.
Eigen::Matrix2d h2_k1_matrix(const H2Point& x, const H2Point& y, double t,
                             double h = 1e-3, double quad_tol = 1e-13);

/// Independent classical single-integral representation of the same scalar
/// kernel; used only to validate h2_k0.
RadialKernelSample mckean_oracle_k0(double r, double t, double tol = 1e-9);

/// Int_0^inf K(r,t) 2 pi sinh(r) dr for either representation.
double h2_mass(double t, bool use_oracle = false, double tol = 1e-8);

}  // namespace heatforms
