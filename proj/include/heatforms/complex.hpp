#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace heatforms {

/// Oriented simplicial complex of dimension 2 or 3 with embedded vertices.
///
/// Simplices are stored per degree as strictly increasing vertex-index
/// tuples, listed in sorted (lexicographic) order so that operator
/// matrices are reproducible bit-for-bit across runs.  Orientation is the
/// global lexicographic convention: the boundary of (v0 < ... < vk) picks
/// up sign (-1)^i on the face omitting vi.
struct SimplicialComplex {
    int dim = 2;
    std::vector<std::array<double, 3>> vertices;
    // simplices[k]: sorted list of k-simplices, each a sorted vertex tuple.
    std::vector<std::vector<std::vector<int>>> simplices;

    int count(int k) const {
        if (k < 0 || k >= static_cast<int>(simplices.size())) return 0;
        return static_cast<int>(simplices[k].size());
    }

    /// Euler characteristic from the stored counts.
    int euler_characteristic() const;

    /// Unsigned k-volume (length / area / tet volume) of simplices[k][i].
    double simplex_volume(int k, int i) const;
};

/// Real matrix acting between cochain spaces, with explicit degree tags.
struct LinearOperator {
    int row_degree = 0;
    int col_degree = 0;
    Eigen::MatrixXd mat;

    int rows() const { return static_cast<int>(mat.rows()); }
    int cols() const { return static_cast<int>(mat.cols()); }
};

/// Tag-checked composition; throws std::invalid_argument when the degree
/// tags do not chain.
LinearOperator compose(const LinearOperator& a, const LinearOperator& b);

/// Build a complex from its top-dimensional simplices; all lower faces are
/// enumerated automatically.  Vertex tuples need not be sorted on input.
SimplicialComplex build_complex(int dim,
                                std::vector<std::array<double, 3>> vertices,
                                const std::vector<std::vector<int>>& top_simplices);

/// Parse an ASCII OFF triangle mesh.  Throws std::runtime_error on
/// malformed input (bad header, counts mismatch, non-triangle face,
/// out-of-range vertex index, empty face list).
SimplicialComplex load_off(const std::string& path);

/// Signed boundary matrix d_k: C_k -> C_{k-1}, entries in {-1,0,+1}.
LinearOperator boundary_matrix(const SimplicialComplex& c, int k);

/// Check all structural invariants; returns human-readable violations
/// (empty list iff the complex is valid).
std::vector<std::string> validate(const SimplicialComplex& c);

// Built-in generators (all closed surfaces).
SimplicialComplex tetrahedron_sphere();
SimplicialComplex icosphere(int level);
SimplicialComplex grid_torus(int n);

}  // namespace heatforms
