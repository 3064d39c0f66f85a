#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bilie {

using RootVec = std::vector<int>;

/// Irreducible reduced root system, Bourbaki numbering of simple roots.
///
/// Roots are integer coefficient vectors in the simple-root basis. Indices
/// 0..N-1 are the positive roots sorted by (height, lex), index k+N is -root(k).
struct RootSystem {
    char family = 'A';
    int rank = 0;
    std::vector<std::vector<int>> cartan; ///< cartan[i][j] = 2(a_i,a_j)/(a_j,a_j)
    std::vector<std::vector<int>> form;   ///< (a_i,a_j), integer scaled
    std::vector<RootVec> roots;
    int num_positive = 0;
    RootVec highest;          ///< coefficients of the highest root = labels a_i
    std::map<RootVec, int> index_of;

    std::string tag() const;
    int size() const { return static_cast<int>(roots.size()); }
    bool is_positive(int k) const { return k < num_positive; }
    int neg(int k) const { return k < num_positive ? k + num_positive : k - num_positive; }
    int positive_rep(int k) const { return k < num_positive ? k : k - num_positive; }
    int simple(int i) const { return find_simple(i); }
    int height(int k) const;
    int inner(const RootVec& a, const RootVec& b) const;
    int inner(int a, int b) const { return inner(roots[a], roots[b]); }
    /// 2(a,b)/(b,b)
    int cartan_int(int a, int b) const;
    std::optional<int> find(const RootVec& v) const;
    /// index of a+b if it is a root
    std::optional<int> sum(int a, int b) const;
    RootVec lowest() const;

private:
    int find_simple(int i) const;
};

RootSystem build_root_system(char family, int rank);
/// "A2", "E7", ...
RootSystem build_root_system(const std::string& tag);

struct Triangle {
    int a, b, c; ///< sorted root indices, roots sum to zero
    bool operator==(const Triangle&) const = default;
};

std::vector<Triangle> triangles(const RootSystem& R);

struct RootSubset {
    const RootSystem* parent = nullptr;
    std::vector<int> members; ///< sorted root indices
    bool closed = false;
    bool symmetric = false;

    bool contains(int k) const;
};

struct SubsetFlags {
    bool closed;
    bool symmetric;
};

SubsetFlags check_closed_symmetric(const RootSystem& R, const std::vector<int>& members);
RootSubset make_subset(const RootSystem& R, std::vector<int> members);

/// Span_Z(B0) cap R, B0 given as 0-based simple-root indices.
RootSubset levi_subset(const RootSystem& R, const std::vector<int>& b0);

/// Simple root indices (0-based) whose successive partial sums are all roots.
std::vector<int> chain_decomposition(const RootSystem& R, int positive_root);

/// Orthonormal epsilon coordinates of a root for A, B, C, D; empty otherwise.
std::vector<int> epsilon_coords(const RootSystem& R, int root);
/// Root with the given epsilon coordinates.
std::optional<int> root_from_epsilon(const RootSystem& R, const std::vector<int>& eps);
/// Human readable label, epsilon form for classical types.
std::string root_name(const RootSystem& R, int root);

int classical_root_count(char family, int rank);

} // namespace bilie
