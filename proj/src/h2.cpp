#include "heatforms/h2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace heatforms {

namespace {

constexpr double kPi = 3.14159265358979323846;

using GK31 = boost::math::quadrature::gauss_kronrod<double, 31>;
using GK61 = boost::math::quadrature::gauss_kronrod<double, 61>;

void require_time(double t) {
    if (!(t > 0)) throw std::invalid_argument("h2 kernel: t must be positive");
}

double rho_cutoff(double t, double tol) {
    // Gaussian factor e^{-rho^2 t} dominates; additive margin covers the
    // polynomial and tanh factors.
    return std::sqrt(std::max(0.0, -std::log(tol)) / t) + 10.0;
}

// Spectral-side integrand shared by the kernel and its time tail.
double spectral_integral(double r, double t, double tol, bool tail, double* err) {
    const double rho_max = rho_cutoff(t, std::min(tol, 1e-14));
    // Clamped: a sub-1e-13 relative target is unreachable in doubles and
    // only drives the adaptive quadrature to its depth cap.
    const double p_tol = std::clamp(tol * 1e-2, 1e-13, 1e-11);
    auto f = [&](double rho) {
        double val = conical_p(rho, r, p_tol) * rho *
                     std::exp(-(0.25 + rho * rho) * t) * std::tanh(kPi * rho);
        if (tail) val /= 0.25 + rho * rho;
        return val;
    };
    // Depth is capped: at large r the result is exponentially small against
    // the integrand scale, so a relative target is unreachable and the
    // absolute error estimate (checked by the callers) is what matters.
    double abs_err = 0.0;
    double value =
        GK31::integrate(f, 0.0, rho_max, 10, std::max(tol * 0.1, 1e-14), &abs_err) /
        (2 * kPi);
    if (err) *err = abs_err / (2 * kPi);
    return value;
}

}  // namespace

H2Point::H2Point(double a_, double b_) : a(a_), b(b_) {
    if (!(b > 0)) throw std::invalid_argument("H2Point: b must be positive");
}

double h2_distance(const H2Point& x, const H2Point& y) {
    if (!(x.b > 0) || !(y.b > 0))
        throw std::invalid_argument("h2_distance: nonpositive b coordinate");
    const double da = x.a - y.a, db = x.b - y.b;
    const double arg = 1.0 + (da * da + db * db) / (2.0 * x.b * y.b);
    return std::acosh(arg);
}

double conical_p(double rho, double r, double tol) {
    if (r < 0) throw std::invalid_argument("conical_p: negative r");
    if (r == 0.0) return 1.0;
    // Mehler-Dirichlet with s = r - u^2 and the stable product form
    // cosh r - cosh s = 2 sinh(r - u^2/2) sinh(u^2/2):
    //   P = (2/pi) Int_0^sqrt(r) u cos(rho s) / sqrt(sinh(r-u^2/2) sinh(u^2/2)) du
    auto f = [&](double u) {
        if (u == 0.0) return std::sqrt(2.0 / std::sinh(r)) * std::cos(rho * r);
        const double half = 0.5 * u * u;
        return u * std::cos(rho * (r - u * u)) /
               std::sqrt(std::sinh(r - half) * std::sinh(half));
    };
    double abs_err = 0.0;
    double value = GK31::integrate(f, 0.0, std::sqrt(r), 10, std::max(tol, 1e-14),
                                   &abs_err) *
                   2.0 / kPi;
    if (abs_err * 2.0 / kPi > std::max(tol * 100.0, 1e-10))
        throw std::runtime_error("conical_p: quadrature non-convergence");
    return value;
}

RadialKernelSample h2_k0(double r, double t, double tol) {
    require_time(t);
    if (r < 0) throw std::invalid_argument("h2_k0: negative r");
    if (!(tol > 0)) throw std::invalid_argument("h2_k0: nonpositive tol");
    RadialKernelSample s{r, t, 0.0, 0.0};
    s.value = spectral_integral(r, t, tol, false, &s.err_est);
    if (s.err_est > tol)
        throw std::runtime_error("h2_k0: tolerance unachievable at requested truncation");
    return s;
}

RadialKernelSample h2_tail(double r, double t, double tol) {
    require_time(t);
    if (r < 0) throw std::invalid_argument("h2_tail: negative r");
    if (!(tol > 0)) throw std::invalid_argument("h2_tail: nonpositive tol");
    RadialKernelSample s{r, t, 0.0, 0.0};
    s.value = spectral_integral(r, t, tol, true, &s.err_est);
    if (s.err_est > tol)
        throw std::runtime_error("h2_tail: tolerance unachievable at requested truncation");
    return s;
}

Eigen::Matrix2d h2_k1_matrix(const H2Point& x, const H2Point& y, double t,
                             double h, double quad_tol) {
    require_time(t);
    if (!(h > 0)) throw std::invalid_argument("h2_k1_matrix: nonpositive step");
    if (h2_distance(x, y) == 0.0)
        throw std::invalid_argument("h2_k1_matrix: coincident points");
    if (x.b - h <= 0 || y.b - h <= 0)
        throw std::invalid_argument("h2_k1_matrix: FD step crosses b <= 0");

    auto tail_at = [&](double ax, double bx, double ay, double by) {
        return h2_tail(h2_distance(H2Point(ax, bx), H2Point(ay, by)), t, quad_tol).value;
    };
    // Mixed second partials of J(x,y) = Tail(d(x,y), t) by the centered
    // 4-point stencil, for (a_x,b_x) x (a_y,b_y).
    Eigen::Matrix2d dd;
    for (int a = 0; a < 2; ++a) {
        const double xa = x.a + (a == 0 ? h : 0.0), xam = x.a - (a == 0 ? h : 0.0);
        const double xb = x.b + (a == 1 ? h : 0.0), xbm = x.b - (a == 1 ? h : 0.0);
        for (int b = 0; b < 2; ++b) {
            const double ya = y.a + (b == 0 ? h : 0.0), yam = y.a - (b == 0 ? h : 0.0);
            const double yb = y.b + (b == 1 ? h : 0.0), ybm = y.b - (b == 1 ? h : 0.0);
            dd(a, b) = (tail_at(xa, xb, ya, yb) - tail_at(xa, xb, yam, ybm) -
                        tail_at(xam, xbm, ya, yb) + tail_at(xam, xbm, yam, ybm)) /
                       (4.0 * h * h);
        }
    }
    // Star on 1-forms in the conformal half-plane chart is the coframe
    // rotation (f,g) -> (-g,f), independent of b.
    Eigen::Matrix2d rot;
    rot << 0, -1, 1, 0;
    return dd + rot * dd * rot.transpose();
}

RadialKernelSample mckean_oracle_k0(double r, double t, double tol) {
    require_time(t);
    if (r < 0) throw std::invalid_argument("mckean_oracle_k0: negative r");
    // sqrt(2) e^{-t/4} / (4 pi t)^{3/2} Int_r^inf s e^{-s^2/4t} /
    // sqrt(cosh s - cosh r) ds, with s = r + u^2 removing the endpoint
    // singularity and the sinh product form removing the cancellation.
    auto f = [&](double u) {
        const double s = r + u * u;
        const double half = 0.5 * u * u;
        const double den = 2.0 * std::sinh(r + half) * std::sinh(half);
        if (den == 0.0) {
            // u = 0 limit: finite for r > 0, zero for r = 0.
            return r > 0 ? 2.0 * r * std::exp(-r * r / (4 * t)) / std::sqrt(std::sinh(r))
                         : 0.0;
        }
        return 2.0 * u * s * std::exp(-s * s / (4 * t)) / std::sqrt(den);
    };
    const double s_max = std::sqrt(-4.0 * t * std::log(1e-18)) + r + 5.0;
    const double u_max = std::sqrt(s_max - r);
    double abs_err = 0.0;
    double integral =
        GK31::integrate(f, 0.0, u_max, 10, std::max(tol * 0.1, 1e-14), &abs_err);
    const double prefactor =
        std::sqrt(2.0) * std::exp(-t / 4.0) / std::pow(4.0 * kPi * t, 1.5);
    RadialKernelSample out{r, t, prefactor * integral, prefactor * abs_err};
    if (out.err_est > tol)
        throw std::runtime_error("mckean_oracle_k0: quadrature failure");
    return out;
}

double h2_mass(double t, bool use_oracle, double tol) {
    require_time(t);
    const double inner_tol = std::max(std::min(tol * 1e-2, 1e-10), 1e-9 * tol);
    auto f = [&](double r) {
        double k = use_oracle ? mckean_oracle_k0(r, t, inner_tol).value
                              : h2_k0(r, t, inner_tol).value;
        return k * 2.0 * kPi * std::sinh(r);
    };
    // Gaussian off-diagonal decay e^{r/2 - r^2/4t} bounds the truncated tail
    // below ~1e-9 at this radius.
    const double r_max = t + std::sqrt(84.0 * t) + 1.0;
    double abs_err = 0.0;
    return GK61::integrate(f, 0.0, r_max, 10, tol, &abs_err);
}

}  // namespace heatforms
