#include "heatforms/torus.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace heatforms {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kFourPiSq = 4.0 * kPi * kPi;

double wrap_unit(double x) {
    double y = x - std::floor(x);
    return (y >= 1.0) ? 0.0 : y;
}

void require_time(double t) {
    if (!(t > 0)) throw std::invalid_argument("torus kernel: t must be positive");
}

void require_trunc(double t, int trunc) {
    if (trunc < torus_truncation(t))
        throw std::invalid_argument("torus kernel: truncation insufficient for tolerance");
}

}  // namespace

TorusPoint::TorusPoint(double u_, double v_) : u(wrap_unit(u_)), v(wrap_unit(v_)) {}

int torus_truncation(double t, double eps) {
    require_time(t);
    if (!(eps > 0) || eps >= 1) throw std::invalid_argument("torus_truncation: bad eps");
    // Gaussian tail of e^{-4 pi^2 r^2 t}; +2 margin for the lattice sum.
    return static_cast<int>(std::ceil(std::sqrt(-std::log(eps) / (kFourPiSq * t)))) + 2;
}

double torus_k0(const TorusPoint& x, const TorusPoint& y, double t, int trunc) {
    require_time(t);
    require_trunc(t, trunc);
    const double du = x.u - y.u, dv = x.v - y.v;
    double sum = 0.0;
    for (int m = -trunc; m <= trunc; ++m)
        for (int n = -trunc; n <= trunc; ++n)
            sum += std::exp(-kFourPiSq * (m * m + n * n) * t) *
                   std::cos(2 * kPi * (m * du + n * dv));
    return sum;
}

Eigen::Matrix2d torus_k1(const TorusPoint& x, const TorusPoint& y, double t,
                         int trunc) {
    // The flat torus is parallelizable: the 1-form kernel acts
    // componentwise in {du, dv}, constant harmonic part included.
    return torus_k0(x, y, t, trunc) * Eigen::Matrix2d::Identity();
}

double torus_k2(const TorusPoint& x, const TorusPoint& y, double t, int trunc) {
    require_time(t);
    require_trunc(t, trunc);
    // Star on both slots of the scalar kernel; components unchanged in the
    // frame du^dv on the unit-area torus.  Summed independently of torus_k0
    // (diagonal-first lattice order).
    const double du = x.u - y.u, dv = x.v - y.v;
    double sum = 0.0;
    for (int d = 0; d <= 2 * trunc; ++d) {
        for (int m = -trunc; m <= trunc; ++m) {
            int n = d - std::abs(m);
            if (n < 0 || n > trunc) continue;
            for (int sn = (n == 0 ? 1 : -1); sn <= 1; sn += 2) {
                int nn = sn * n;
                sum += std::exp(-kFourPiSq * (m * m + nn * nn) * t) *
                       std::cos(2 * kPi * (m * du + nn * dv));
            }
        }
    }
    return sum;
}

VerificationReport torus_corollary6_check(const TorusPoint& x, const TorusPoint& y,
                                          double t, int trunc, double tol) {
    require_time(t);
    require_trunc(t, trunc);
    VerificationReport r;
    r.check = "torus_corollary6";
    r.complex_name = "torus-analytic";
    r.degree = 1;
    r.tolerance = tol;
    r.times.push_back(t);

    // C_1 + (I + *_x *_y) d_x d_y Tail_0, assembled mode by mode.  The
    // star on 1-forms is the coframe rotation (f,g) -> (-g,f).
    Eigen::Matrix2d rot;
    rot << 0, -1, 1, 0;
    Eigen::Matrix2d rhs = Eigen::Matrix2d::Identity();  // harmonic part C_1
    const double du = x.u - y.u, dv = x.v - y.v;
    for (int m = -trunc; m <= trunc; ++m) {
        for (int n = -trunc; n <= trunc; ++n) {
            if (m == 0 && n == 0) continue;
            const double lambda = kFourPiSq * (m * m + n * n);
            const double weight = std::exp(-lambda * t) / lambda;
            const double cosv = std::cos(2 * kPi * (m * du + n * dv));
            Eigen::Vector2d wave(m, n);
            // d/dx_a d/dy_b of cos(2 pi k.(x-y)) = 4 pi^2 k_a k_b cos(...)
            Eigen::Matrix2d dd = kFourPiSq * (wave * wave.transpose()) * cosv;
            rhs += weight * (dd + rot * dd * rot.transpose());
        }
    }

    Eigen::Matrix2d lhs = torus_k1(x, y, t, trunc);
    double abs = (lhs - rhs).norm();
    r.abs_residuals.push_back(abs);
    r.rel_residuals.push_back(abs / (lhs.norm() + 1e-300));
    r.pass = r.rel_residuals.back() <= tol;
    return r;
}

void write_torus_csv_row(std::ostream& out, const TorusPoint& x, const TorusPoint& y,
                         double t, int degree, int trunc) {
    char buf[64];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << ',' << buf;
    };
    std::snprintf(buf, sizeof buf, "%.17g", x.u);
    out << buf;
    put(x.v);
    put(y.u);
    put(y.v);
    put(t);
    switch (degree) {
        case 0:
            put(torus_k0(x, y, t, trunc));
            break;
        case 1: {
            Eigen::Matrix2d k = torus_k1(x, y, t, trunc);
            put(k(0, 0));
            put(k(0, 1));
            put(k(1, 0));
            put(k(1, 1));
            break;
        }
        case 2:
            put(torus_k2(x, y, t, trunc));
            break;
        default:
            throw std::invalid_argument("write_torus_csv_row: degree must be 0, 1 or 2");
    }
    out << '\n';
}

}  // namespace heatforms
