#include "heatforms/complex.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace heatforms {

namespace {

Eigen::Vector3d to_vec(const std::array<double, 3>& p) {
    return {p[0], p[1], p[2]};
}

// All (k-1)-faces of a sorted vertex tuple, in lexicographic order of the
// omitted index (sign (-1)^i belongs to position i).
std::vector<std::vector<int>> faces_of(const std::vector<int>& simplex) {
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i < simplex.size(); ++i) {
        std::vector<int> f;
        for (size_t j = 0; j < simplex.size(); ++j)
            if (j != i) f.push_back(simplex[j]);
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

int SimplicialComplex::euler_characteristic() const {
    int chi = 0;
    int sign = 1;
    for (int k = 0; k <= dim; ++k, sign = -sign) chi += sign * count(k);
    return chi;
}

double SimplicialComplex::simplex_volume(int k, int i) const {
    const auto& s = simplices.at(k).at(i);
    switch (k) {
        case 0:
            return 1.0;
        case 1:
            return (to_vec(vertices[s[1]]) - to_vec(vertices[s[0]])).norm();
        case 2: {
            Eigen::Vector3d e1 = to_vec(vertices[s[1]]) - to_vec(vertices[s[0]]);
            Eigen::Vector3d e2 = to_vec(vertices[s[2]]) - to_vec(vertices[s[0]]);
            return 0.5 * e1.cross(e2).norm();
        }
        case 3: {
            Eigen::Vector3d e1 = to_vec(vertices[s[1]]) - to_vec(vertices[s[0]]);
            Eigen::Vector3d e2 = to_vec(vertices[s[2]]) - to_vec(vertices[s[0]]);
            Eigen::Vector3d e3 = to_vec(vertices[s[3]]) - to_vec(vertices[s[0]]);
            return std::abs(e1.cross(e2).dot(e3)) / 6.0;
        }
        default:
            throw std::invalid_argument("simplex_volume: unsupported degree");
    }
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
    if (a.col_degree != b.row_degree)
        throw std::invalid_argument("compose: degree tags do not chain (" +
                                    std::to_string(a.col_degree) + " vs " +
                                    std::to_string(b.row_degree) + ")");
    if (a.mat.cols() != b.mat.rows())
        throw std::invalid_argument("compose: dimension mismatch");
    return {a.row_degree, b.col_degree, a.mat * b.mat};
}

SimplicialComplex build_complex(int dim,
                                std::vector<std::array<double, 3>> vertices,
                                const std::vector<std::vector<int>>& top_simplices) {
    if (dim < 1 || dim > 3)
        throw std::invalid_argument("build_complex: dim must be in [1,3]");
    SimplicialComplex c;
    c.dim = dim;
    c.vertices = std::move(vertices);
    c.simplices.assign(dim + 1, {});

    std::set<std::vector<int>> level;
    for (auto s : top_simplices) {
        if (static_cast<int>(s.size()) != dim + 1)
            throw std::invalid_argument("build_complex: top simplex of wrong size");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("build_complex: repeated vertex in simplex");
        for (int v : s)
            if (v < 0 || v >= static_cast<int>(c.vertices.size()))
                throw std::invalid_argument("build_complex: vertex index out of range");
        level.insert(std::move(s));
    }
    for (int k = dim; k >= 0; --k) {
        c.simplices[k].assign(level.begin(), level.end());
        std::set<std::vector<int>> next;
        if (k > 0)
            for (const auto& s : level)
                for (auto& f : faces_of(s)) next.insert(std::move(f));
        level = std::move(next);
    }
    return c;
}

SimplicialComplex load_off(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_off: cannot open " + path);

    auto next_token_line = [&in]() -> std::string {
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream probe(line);
            std::string tok;
            if (probe >> tok) return line;
        }
        return {};
    };

    std::string header = next_token_line();
    {
        std::istringstream hs(header);
        std::string magic;
        hs >> magic;
        if (magic != "OFF") throw std::runtime_error("load_off: missing OFF header");
    }
    std::istringstream counts(next_token_line());
    long nv = -1, nf = -1, ne = -1;
    if (!(counts >> nv >> nf >> ne) || nv < 0 || nf < 0)
        throw std::runtime_error("load_off: malformed counts line");
    if (nf == 0) throw std::runtime_error("load_off: empty face list");

    std::vector<std::array<double, 3>> vertices;
    vertices.reserve(nv);
    for (long i = 0; i < nv; ++i) {
        std::istringstream vs(next_token_line());
        double x, y, z;
        if (!(vs >> x >> y >> z))
            throw std::runtime_error("load_off: malformed vertex line " + std::to_string(i));
        vertices.push_back({x, y, z});
    }
    std::vector<std::vector<int>> faces;
    faces.reserve(nf);
    for (long i = 0; i < nf; ++i) {
        std::istringstream fs(next_token_line());
        int n = 0;
        if (!(fs >> n)) throw std::runtime_error("load_off: malformed face line " + std::to_string(i));
        if (n != 3) throw std::runtime_error("load_off: non-triangle face (" + std::to_string(n) + " vertices)");
        std::vector<int> f(3);
        if (!(fs >> f[0] >> f[1] >> f[2]))
            throw std::runtime_error("load_off: malformed face line " + std::to_string(i));
        for (int v : f)
            if (v < 0 || v >= nv)
                throw std::runtime_error("load_off: dangling vertex reference " + std::to_string(v));
        faces.push_back(std::move(f));
    }
    return build_complex(2, std::move(vertices), faces);
}

LinearOperator boundary_matrix(const SimplicialComplex& c, int k) {
    if (k < 1 || k > c.dim)
        throw std::invalid_argument("boundary_matrix: k out of range");
    const auto& rows = c.simplices[k - 1];
    const auto& cols = c.simplices[k];
    std::map<std::vector<int>, int> row_index;
    for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);

    LinearOperator op{k - 1, k, Eigen::MatrixXd::Zero(rows.size(), cols.size())};
    for (size_t j = 0; j < cols.size(); ++j) {
        auto faces = faces_of(cols[j]);
        double sign = 1.0;
        for (auto& f : faces) {
            auto it = row_index.find(f);
            if (it == row_index.end())
                throw std::runtime_error("boundary_matrix: missing face in complex");
            op.mat(it->second, j) = sign;
            sign = -sign;
        }
    }
    return op;
}

std::vector<std::string> validate(const SimplicialComplex& c) {
    std::vector<std::string> violations;
    auto describe = [](const std::vector<int>& s) {
        std::string out = "(";
        for (size_t i = 0; i < s.size(); ++i)
            out += (i ? "," : "") + std::to_string(s[i]);
        return out + ")";
    };

    if (c.dim < 1 || c.dim > 3 || static_cast<int>(c.simplices.size()) != c.dim + 1) {
        violations.push_back("dimension/simplex-list structure invalid");
        return violations;
    }
    const int nv = static_cast<int>(c.vertices.size());
    for (int k = 0; k <= c.dim; ++k) {
        std::set<std::vector<int>> seen;
        for (const auto& s : c.simplices[k]) {
            if (static_cast<int>(s.size()) != k + 1)
                violations.push_back("degree " + std::to_string(k) + " simplex " +
                                     describe(s) + " has wrong arity");
            if (!std::is_sorted(s.begin(), s.end()) ||
                std::adjacent_find(s.begin(), s.end()) != s.end())
                violations.push_back("simplex " + describe(s) + " not strictly increasing");
            for (int v : s)
                if (v < 0 || v >= nv)
                    violations.push_back("simplex " + describe(s) + " references missing vertex " +
                                         std::to_string(v));
            if (!seen.insert(s).second)
                violations.push_back("duplicate degree-" + std::to_string(k) + " simplex " +
                                     describe(s));
        }
    }
    for (int k = 1; k <= c.dim; ++k) {
        std::set<std::vector<int>> lower(c.simplices[k - 1].begin(), c.simplices[k - 1].end());
        for (const auto& s : c.simplices[k])
            for (const auto& f : faces_of(s))
                if (!lower.count(f))
                    violations.push_back("face " + describe(f) + " of simplex " + describe(s) +
                                         " missing from degree " + std::to_string(k - 1));
    }
    return violations;
}

SimplicialComplex tetrahedron_sphere() {
    const double s = 1.0 / std::sqrt(3.0);
    std::vector<std::array<double, 3>> verts = {
        {s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
    return build_complex(2, std::move(verts),
                         {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex icosphere(int level) {
    if (level < 0) throw std::invalid_argument("icosphere: negative level");
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<std::array<double, 3>> verts = {
        {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
        {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
        {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
    std::vector<std::vector<int>> faces = {
        {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11},
        {1, 5, 9}, {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8}, {3, 8, 9},
        {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1}};

    for (int iter = 0; iter < level; ++iter) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) {
            auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            std::array<double, 3> m = {(verts[a][0] + verts[b][0]) / 2,
                                       (verts[a][1] + verts[b][1]) / 2,
                                       (verts[a][2] + verts[b][2]) / 2};
            verts.push_back(m);
            int idx = static_cast<int>(verts.size()) - 1;
            midpoint[key] = idx;
            return idx;
        };
        std::vector<std::vector<int>> next;
        next.reserve(faces.size() * 4);
        for (const auto& f : faces) {
            int a = mid(f[0], f[1]), b = mid(f[1], f[2]), c = mid(f[2], f[0]);
            next.push_back({f[0], a, c});
            next.push_back({f[1], b, a});
            next.push_back({f[2], c, b});
            next.push_back({a, b, c});
        }
        faces = std::move(next);
    }
    for (auto& v : verts) {
        double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        v = {v[0] / n, v[1] / n, v[2] / n};
    }
    return build_complex(2, std::move(verts), faces);
}

SimplicialComplex grid_torus(int n) {
    if (n < 3) throw std::invalid_argument("grid_torus: n must be >= 3");
    const double pi = std::acos(-1.0);
    const double R = 2.0, r = 1.0;
    std::vector<std::array<double, 3>> verts;
    verts.reserve(n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double u = 2 * pi * i / n, v = 2 * pi * j / n;
            verts.push_back({(R + r * std::cos(v)) * std::cos(u),
                             (R + r * std::cos(v)) * std::sin(u),
                             r * std::sin(v)});
        }
    }
    auto id = [n](int i, int j) { return ((i % n + n) % n) * n + ((j % n + n) % n); };
    std::vector<std::vector<int>> faces;
    faces.reserve(2 * n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            faces.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
            faces.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    }
    return build_complex(2, std::move(verts), faces);
}

}  // namespace heatforms
