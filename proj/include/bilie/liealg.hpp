#pragma once

#include "bilie/linalg.hpp"
#include "bilie/rootsys.hpp"

#include <json.hpp>

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bilie {

inline constexpr const char* kChevalleyConvention = "chevalley-v1";

/// Bilinear map on a basis: entry (i,j) is the image of (e_i, e_j).
struct Table {
    int dim = 0;
    std::vector<SparseVec> c;

    Table() = default;
    explicit Table(int n) : dim(n), c(static_cast<std::size_t>(n) * n) {}
    const SparseVec& at(int i, int j) const { return c[static_cast<std::size_t>(i) * dim + j]; }
    SparseVec& at(int i, int j) { return c[static_cast<std::size_t>(i) * dim + j]; }

    SparseVec apply(const SparseVec& x, const SparseVec& y) const;
    /// b(x, e_j)
    SparseVec apply_right(const SparseVec& x, int j) const;
    Vec apply(const Vec& x, const Vec& y) const;
    bool operator==(const Table& o) const { return dim == o.dim && c == o.c; }
};

Table operator+(const Table& a, const Table& b);
Table operator-(const Table& a, const Table& b);
Table operator*(const Scalar& s, const Table& a);
bool is_antisymmetric(const Table& t);
/// (i,j) of the first differing entry, if any.
std::optional<std::array<int, 2>> first_difference(const Table& a, const Table& b);
std::size_t max_bit_length(const Table& t);

struct BasisLabel {
    enum Kind { Cartan, Root, Matrix } kind = Matrix;
    int index = 0; ///< simple-root index, root index, or basis position
};

struct LieAlgebra {
    std::string name;
    int dim = 0;
    std::vector<BasisLabel> labels;
    Table table;
    Mat killing;

    /// Root data; null for matrix models.
    std::shared_ptr<const RootSystem> roots;
    int rank = 0;             ///< Cartan dimension when root data is present
    std::vector<int> weight;  ///< root index of each basis vector, -1 for Cartan
    std::vector<int> opposite; ///< basis index of E_{-a} for root vectors, -1 for Cartan
    Mat root_values;          ///< root_values(k, j) = root_k(H_j)
    /// Unnormalized integer Chevalley constants N_{a,b} for all root pairs with a+b a root.
    std::map<std::pair<int, int>, int> raw_N;

    int root_basis(int root) const { return rank + root; }
    bool has_roots() const { return roots != nullptr; }
    /// True when the basis is a Cartan basis followed by root vectors.
    bool has_grading() const { return !weight.empty(); }
    bool is_cartan(int i) const { return has_grading() && weight[i] < 0; }
    std::string label(int i) const;
    const Mat& killing_inverse() const;

private:
    mutable std::optional<Mat> kinv_;
};

LieAlgebra chevalley_algebra(const RootSystem& R);
LieAlgebra chevalley_algebra(const std::string& tag);

/// Algebra from a structure table; Killing form is computed.
LieAlgebra algebra_from_table(std::string name, Table t);

Mat killing_matrix(const Table& t);

/// Same algebra in the basis given by the columns of s.
LieAlgebra change_basis(const LieAlgebra& L, const Mat& s, std::string name);

Vec bracket(const LieAlgebra& L, const Vec& x, const Vec& y);
Mat ad(const LieAlgebra& L, const Vec& x);
Mat ad_basis(const LieAlgebra& L, int i);
Scalar killing(const LieAlgebra& L, const Vec& x, const Vec& y);
Vec basis_vector(const LieAlgebra& L, int i);

/// H_alpha for a root as an element of the algebra; the first rank entries are its Cartan coordinates.
Vec cartan_of_root(const LieAlgebra& L, int root);

struct JacobiResult {
    bool pass = true;
    std::array<int, 3> witness{-1, -1, -1};
    SparseVec value;
    std::string describe() const;
};

/// Cyclic sum of [[x,y],z] over all basis triples i<j<k.
JacobiResult jacobi_check(const Table& t);
/// Cyclic sum of a(b(x,y),z) + b(a(x,y),z); vanishes iff a+b is Lie when a, b are.
JacobiResult mixed_jacobi_check(const Table& a, const Table& b);

struct InvarianceResult {
    bool pass = true;
    std::array<int, 3> witness{-1, -1, -1};
};
/// B([x,y],z) + B(y,[x,z]) = 0 on all basis triples.
InvarianceResult killing_invariance_check(const LieAlgebra& L);

struct MatrixAlgebra {
    std::string model;
    int n = 0;
    int size = 0; ///< matrices are size x size
    std::vector<Mat> basis;
    Mat trace_form;
    LieAlgebra algebra;

    /// Coordinates of a matrix lying in the span of the basis.
    Vec coords(const Mat& x) const;
    bool contains(const Mat& x) const;
    Mat to_matrix(const Vec& c) const;

    std::vector<int> probe_rows;
    Mat probe_inverse;
};

MatrixAlgebra matrix_model(const std::string& model, int n);
MatrixAlgebra matrix_algebra_from_basis(std::string name, int size, std::vector<Mat> basis);

Mat commutator(const Mat& a, const Mat& b);
Mat matrix_unit(int size, int i, int j);

nlohmann::json structure_json(const LieAlgebra& L);

} // namespace bilie
