#pragma once

#include <iosfwd>

#include <Eigen/Dense>

#include "heatforms/report.hpp"

namespace heatforms {

/// Point on the unit flat torus [0,1)^2; coordinates reduced mod 1.
struct TorusPoint {
    double u = 0.0;
    double v = 0.0;
    TorusPoint() = default;
    TorusPoint(double u_, double v_);
};

/// Smallest truncation radius making the Fourier tail of the degree-0
/// kernel smaller than eps at time t.  Throws for t <= 0.
int torus_truncation(double t, double eps = 1e-12);

/// Scalar heat kernel: sum over (m,n) in Z^2 of
/// e^{-4 pi^2 (m^2+n^2) t} cos(2 pi (m du + n dv)), |m|,|n| <= trunc.
double torus_k0(const TorusPoint& x, const TorusPoint& y, double t, int trunc);

/// 1-form heat kernel in the global coframe {du, dv}.  The flat torus is
/// parallelizable, so the kernel acts componentwise: K_1 = K_0 * I,
/// harmonic part diag(1,1) included.
Eigen::Matrix2d torus_k1(const TorusPoint& x, const TorusPoint& y, double t,
                         int trunc);

/// 2-form kernel component in the frame du^dv; equals K_0 on the unit
/// flat torus (star duality), but summed independently.
double torus_k2(const TorusPoint& x, const TorusPoint& y, double t, int trunc);

/// Termwise-Fourier assembly of
///   C_1 + (I + *_x *_y) d_x d_y Tail_0(t)
/// compared against torus_k1.  The mode-by-mode d_x d_y and star algebra
/// is carried out numerically, not simplified.
VerificationReport torus_corollary6_check(const TorusPoint& x,
                                          const TorusPoint& y, double t,
                                          int trunc, double tol = 1e-10);

/// CSV emitter for plotting: u_x,v_x,u_y,v_y,t followed by the component
/// values of the requested degree.
void write_torus_csv_row(std::ostream& out, const TorusPoint& x,
                         const TorusPoint& y, double t, int degree, int trunc);

}  // namespace heatforms
