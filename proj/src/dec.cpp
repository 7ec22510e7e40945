#include "heatforms/dec.hpp"

#include <map>
#include <stdexcept>

namespace heatforms {

const char* mass_scheme_name(MassScheme s) {
    return s == MassScheme::identity ? "identity" : "barycentric-lumped";
}

MassScheme parse_mass_scheme(const std::string& name) {
    if (name == "identity") return MassScheme::identity;
    if (name == "barycentric-lumped" || name == "barycentric")
        return MassScheme::barycentric_lumped;
    throw std::invalid_argument("unknown mass scheme: " + name);
}

LinearOperator coboundary(const SimplicialComplex& c, int k) {
    if (k < 0 || k >= c.dim)
        throw std::invalid_argument("coboundary: k out of range");
    LinearOperator b = boundary_matrix(c, k + 1);
    return {k + 1, k, b.mat.transpose()};
}

LinearOperator mass_matrix(const SimplicialComplex& c, int k, MassScheme scheme) {
    if (k < 0 || k > c.dim)
        throw std::invalid_argument("mass_matrix: k out of range");
    const int n = c.count(k);
    if (scheme == MassScheme::identity)
        return {k, k, Eigen::MatrixXd::Identity(n, n)};

    // Each top simplex spreads its volume evenly over its k-faces.
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[c.simplices[k][i]] = i;

    const int top = c.dim;
    const auto& tops = c.simplices[top];
    // #k-faces of a top simplex = C(dim+1, k+1)
    auto choose = [](int a, int b) {
        double out = 1;
        for (int i = 0; i < b; ++i) out = out * (a - i) / (i + 1);
        return out;
    };
    const double share = choose(top + 1, k + 1);
    for (size_t ti = 0; ti < tops.size(); ++ti) {
        double vol = c.simplex_volume(top, static_cast<int>(ti));
        if (vol <= 0.0)
            throw std::runtime_error("mass_matrix: degenerate (zero-volume) simplex");
        // enumerate k-subsets of the top simplex
        const auto& s = tops[ti];
        std::vector<int> pick(k + 1, 0);
        for (int i = 0; i <= k; ++i) pick[i] = i;
        while (true) {
            std::vector<int> face(k + 1);
            for (int i = 0; i <= k; ++i) face[i] = s[pick[i]];
            w[index.at(face)] += vol / share;
            int i = k;
            while (i >= 0 && pick[i] == top - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j <= k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    if ((w.array() <= 0.0).any())
        throw std::runtime_error("mass_matrix: nonpositive lumped weight");
    return {k, k, w.asDiagonal().toDenseMatrix()};
}

LinearOperator codifferential(const SimplicialComplex& c, int k, MassScheme scheme) {
    if (k < 1 || k > c.dim)
        throw std::invalid_argument("codifferential: k out of range");
    LinearOperator d = coboundary(c, k - 1);
    LinearOperator mk = mass_matrix(c, k, scheme);
    LinearOperator mk1 = mass_matrix(c, k - 1, scheme);
    Eigen::VectorXd inv = mk1.mat.diagonal().cwiseInverse();
    return {k - 1, k, inv.asDiagonal() * d.mat.transpose() * mk.mat};
}

LinearOperator hodge_laplacian(const SimplicialComplex& c, int k, MassScheme scheme) {
    if (k < 0 || k > c.dim)
        throw std::invalid_argument("hodge_laplacian: k out of range");
    const int n = c.count(k);
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    if (k < c.dim)
        L += compose(codifferential(c, k + 1, scheme), coboundary(c, k)).mat;
    if (k > 0)
        L += compose(coboundary(c, k - 1), codifferential(c, k, scheme)).mat;
    return {k, k, std::move(L)};
}

double inner_product(const Eigen::VectorXd& f, const Eigen::VectorXd& g,
                     const LinearOperator& M) {
    if (M.row_degree != M.col_degree)
        throw std::invalid_argument("inner_product: M is not degree-diagonal");
    if (f.size() != M.mat.rows() || g.size() != M.mat.cols())
        throw std::invalid_argument("inner_product: cochain size mismatch");
    return f.dot(M.mat * g);
}

}  // namespace heatforms
