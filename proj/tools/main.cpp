#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "heatforms/h2.hpp"
#include "heatforms/suite.hpp"
#include "heatforms/torus.hpp"

namespace {

using namespace heatforms;

std::string default_out_dir() {
    if (const char* env = std::getenv("HEATFORMS_OUT")) return env;
    return ".";
}

void ensure_dir(const std::string& dir) {
    std::filesystem::create_directories(dir);
}

int print_summary(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) {
        std::cout << (r.pass ? "PASS" : (r.gated ? "FAIL" : "info")) << "  "
                  << report_filename(r);
        if (!r.rel_residuals.empty()) {
            double worst = 0;
            for (double v : r.rel_residuals) worst = std::max(worst, v);
            std::cout << "  worst rel residual " << worst;
        }
        std::cout << '\n';
    }
    return all_gated_pass(reports) ? 0 : 1;
}

int run_verify(const SuiteConfig& config, const std::string& out) {
    auto reports = run_suite(config);
    ensure_dir(out);
    write_reports(reports, out);
    return print_summary(reports);
}

int run_torus(const std::vector<double>& times, int trunc_flag, int pairs,
              unsigned seed, double tol, const std::string& out) {
    ensure_dir(out);
    std::vector<VerificationReport> reports;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    std::ofstream csv(out + "/torus_kernels.csv");
    csv << "u_x,v_x,u_y,v_y,t,degree,components...\n";
    for (double t : times) {
        int trunc = trunc_flag > 0 ? trunc_flag : torus_truncation(t);
        VerificationReport dual;
        dual.check = "torus_star_duality";
        dual.complex_name = "flat_torus";
        dual.degree = 2;
        dual.tolerance = 1e-12;
        dual.times = {t};
        double worst6 = 0, worst_dual = 0;
        bool pass6 = true;
        for (int i = 0; i < pairs; ++i) {
            TorusPoint x(unif(rng), unif(rng)), y(unif(rng), unif(rng));
            for (int k = 0; k <= 2; ++k) write_torus_csv_row(csv, x, y, t, k, trunc);
            worst_dual = std::max(worst_dual,
                                  std::abs(torus_k2(x, y, t, trunc) -
                                           torus_k0(x, y, t, trunc)));
            auto c6 = torus_corollary6_check(x, y, t, trunc, tol);
            pass6 = pass6 && c6.pass;
            worst6 = std::max(worst6, c6.rel_residuals[0]);
        }
        dual.abs_residuals = {worst_dual};
        dual.rel_residuals = {worst_dual};
        dual.pass = worst_dual <= dual.tolerance;
        reports.push_back(dual);

        VerificationReport c6;
        c6.check = "torus_corollary6";
        c6.complex_name = "flat_torus";
        c6.degree = 1;
        c6.tolerance = tol;
        c6.times = {t};
        c6.abs_residuals = {worst6};
        c6.rel_residuals = {worst6};
        c6.pass = pass6;
        c6.notes.push_back("worst over " + std::to_string(pairs) +
                           " random point pairs, seed " + std::to_string(seed));
        reports.push_back(c6);
    }
    write_reports(reports, out);
    return print_summary(reports);
}

int run_h2(const std::vector<double>& times, double fd_step, double tol,
           const std::string& out) {
    ensure_dir(out);
    std::vector<VerificationReport> reports;

    std::ofstream csv(out + "/h2_radial.csv");
    csv << "r,t,k0,err_est,mckean\n";
    csv.precision(17);
    for (double t : times) {
        VerificationReport dual;
        dual.check = "h2_dual_representation";
        dual.complex_name = "hyperbolic_plane";
        dual.degree = 0;
        dual.tolerance = tol;
        dual.times = {t};
        double worst = 0;
        for (double r : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0}) {
            auto spec = h2_k0(r, t);
            auto oracle = mckean_oracle_k0(r, t);
            csv << r << ',' << t << ',' << spec.value << ',' << spec.err_est
                << ',' << oracle.value << '\n';
            worst = std::max(worst,
                             std::abs(spec.value - oracle.value) / oracle.value);
        }
        dual.abs_residuals = {worst};
        dual.rel_residuals = {worst};
        dual.pass = worst <= tol;
        reports.push_back(dual);

        VerificationReport mass;
        mass.check = "h2_mass";
        mass.complex_name = "hyperbolic_plane";
        mass.degree = 0;
        mass.tolerance = 1e-4;
        mass.times = {t};
        double m = h2_mass(t);
        mass.abs_residuals = {std::abs(m - 1.0)};
        mass.rel_residuals = {std::abs(m - 1.0)};
        mass.pass = std::abs(m - 1.0) <= mass.tolerance;
        reports.push_back(mass);
    }

    // 1-form kernel sample with the requested finite-difference step
    {
        VerificationReport k1;
        k1.check = "h2_k1_symmetry";
        k1.complex_name = "hyperbolic_plane";
        k1.degree = 1;
        k1.tolerance = 1e-5;
        const H2Point x(0, 1), y(0.5, 1.2);
        double worst = 0;
        for (double t : times) {
            Eigen::Matrix2d a = h2_k1_matrix(x, y, t, fd_step);
            Eigen::Matrix2d b = h2_k1_matrix(y, x, t, fd_step);
            k1.times.push_back(t);
            double res = (a - b.transpose()).cwiseAbs().maxCoeff();
            k1.abs_residuals.push_back(res);
            k1.rel_residuals.push_back(res / a.norm());
            worst = std::max(worst, res);
        }
        k1.pass = worst <= k1.tolerance;
        reports.push_back(k1);
    }
    write_reports(reports, out);
    return print_summary(reports);
}

int run_dump(const std::string& mesh, const std::string& scheme_name,
             const std::vector<int>& degrees, const std::vector<double>& times,
             const std::string& out) {
    SimplicialComplex c = builtin_mesh(mesh);
    MassScheme scheme = parse_mass_scheme(scheme_name);
    ensure_dir(out);
    std::vector<int> ks = degrees;
    if (ks.empty())
        for (int k = 0; k <= c.dim; ++k) ks.push_back(k);
    for (int k : ks) {
        if (k < 0 || k > c.dim)
            throw std::invalid_argument("degrees: degree " + std::to_string(k) +
                                        " outside mesh dimension " +
                                        std::to_string(c.dim));
        auto s = eigendecompose(c, k, scheme);
        for (double t : times) {
            auto kernel = heat_kernel_matrix(s, t);
            std::ofstream f(out + "/" + mesh + "_k" + std::to_string(k) + "_t" +
                            std::to_string(t) + ".csv");
            write_kernel_csv(f, kernel);
        }
    }
    std::cout << "wrote " << ks.size() * times.size() << " kernel files to "
              << out << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Differential-form heat kernel laboratory"};
    app.require_subcommand(1);

    SuiteConfig config;
    std::string out = default_out_dir();
    std::vector<double> times = {0.01, 0.1, 1.0};
    std::vector<int> degrees;
    double tol = 1e-8;
    double h2_tol = 1e-6;
    double fd_step = 1e-3;
    int trunc = 0;
    int pairs = 20;
    unsigned seed = 1234;

    auto* verify = app.add_subcommand(
        "verify", "Run the discrete identity suite on a mesh");
    verify->add_option("--mesh", config.mesh,
                       "builtin (tetra, ico<level>, torus<n>) or OFF path");
    verify->add_option("--scheme", config.scheme,
                       "identity | barycentric-lumped | both");
    verify->add_option("--degrees", config.degrees, "cochain degrees to check");
    verify->add_option("--times", config.times, "diffusion times");
    verify->add_option("--tol", config.tolerance, "gating tolerance");
    verify->add_option("--cfactor", config.cfactor, "time-rescaling factor");
    verify->add_option("--seed", config.seed, "random cochain seed");
    verify->add_option("--jobs", config.jobs, "worker threads");
    verify->add_option("--out", out, "report directory");

    auto* torus = app.add_subcommand(
        "torus", "Analytic flat-torus kernels and reconstructions");
    torus->add_option("--times", times, "diffusion times");
    torus->add_option("--trunc", trunc, "Fourier truncation (0 = automatic)");
    torus->add_option("--pairs", pairs, "random point pairs per time");
    torus->add_option("--seed", seed, "point-pair seed");
    torus->add_option("--tol", tol, "reconstruction tolerance");
    torus->add_option("--out", out, "output directory");

    auto* h2 = app.add_subcommand(
        "h2", "Hyperbolic-plane kernels: dual representations and mass");
    h2->add_option("--times", times, "diffusion times");
    h2->add_option("--fd-step", fd_step, "finite-difference step for the 1-form kernel");
    h2->add_option("--tol", h2_tol, "dual-representation tolerance");
    h2->add_option("--out", out, "output directory");

    auto* dump = app.add_subcommand("dump", "Write heat kernel matrices as CSV");
    std::string dump_mesh = "torus8";
    std::string dump_scheme = "barycentric-lumped";
    dump->add_option("--mesh", dump_mesh, "builtin mesh or OFF path");
    dump->add_option("--scheme", dump_scheme, "identity | barycentric-lumped");
    dump->add_option("--degrees", degrees, "degrees to dump (default all)");
    dump->add_option("--times", times, "diffusion times");
    dump->add_option("--out", out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(config, out);
        if (torus->parsed()) return run_torus(times, trunc, pairs, seed, tol, out);
        if (h2->parsed()) return run_h2(times, fd_step, h2_tol, out);
        if (dump->parsed()) return run_dump(dump_mesh, dump_scheme, degrees, times, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
