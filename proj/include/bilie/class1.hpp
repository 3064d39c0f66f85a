#pragma once

#include "bilie/diagrams.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bilie {

/// Toral symmetric quasigrading of Class I, described root by root.
struct QuasigradingI {
    AlgebraPtr alg;
    std::vector<Scalar> X;                    ///< pairwise distinct times
    std::vector<std::array<int, 2>> root_pair; ///< per positive root, sorted indices into X
    std::vector<Mat> cartan_part;             ///< per time, basis in the Cartan basis (rank x d)
    std::string name;

    /// Pairs diagram; an element of T_a is virtual when H_a lies in the Cartan part of the other one.
    PairsDiagram diagram() const;
    /// Basis of g_{t_i t_i} in the full algebra.
    Mat diagonal_component(int i) const;
};

/// Root-level axioms; Cartan-versus-root brackets are not constrained.
CheckResult validate_quasigrading_i(const QuasigradingI& q);

/// W = (t_i + t_j)/2 on g_{t_i t_j} and t_i on the Cartan part of g_{t_i t_i}.
Mat class1_operator(const QuasigradingI& q);
/// P = 0 on h and (t_1 - t_2)^2 / 8 on each root.
Mat class1_primitive(const QuasigradingI& q);
BiLieStructure wno_class1(const QuasigradingI& q);

/// Centre of the exceptional bracket at t_i from the quasigrading data.
Mat centre_formula(const QuasigradingI& q, int i);

/// Builder-level checks on a constructed structure.
std::vector<CheckResult> check_class1(const QuasigradingI& q, const BiLieStructure& s, const TimesReport& r);

struct Z2Grading {
    int m = 0; ///< number of times; the group is Z_2^(m-1)
    /// degree per positive root
    std::vector<std::vector<int>> degree;
    int quasiroots = 0; ///< number of distinct degrees with a nonzero component (h counts for 0)
    bool homomorphism = true;
    std::string witness;
};
Z2Grading z2_grading(const QuasigradingI& q);

/// Grading by model automorphisms of types (s_0, ..., s_n), one group coordinate per type.
struct ModelGrading {
    std::vector<int> orders;
    std::vector<std::vector<int>> degree; ///< per root index
};
ModelGrading model_grading(const RootSystem& R, const std::vector<std::vector<int>>& types);

/// Lemma 12.19 reduction along a surjection mu onto the new times Y.
QuasigradingI reduce(const QuasigradingI& q, const std::vector<int>& mu, const std::vector<Scalar>& Y);

/// Element H_lambda of h for a weight given in epsilon coordinates (classical types).
Vec cartan_of_epsilon(const LieAlgebra& L, const std::vector<Scalar>& eps);

// Catalog. Times are given explicitly and must be pairwise distinct.
enum class TwoTimeSide { FirstFull, SecondFull };
/// Z_2 grading from an inner automorphism of type s (default chosen from the labels).
QuasigradingI example_12_12(AlgebraPtr L, const std::vector<Scalar>& t, TwoTimeSide side = TwoTimeSide::FirstFull,
                            std::vector<int> type = {});
QuasigradingI example_12_13(AlgebraPtr L, const std::vector<Scalar>& t); ///< B_n, n+1 times
QuasigradingI example_12_14(AlgebraPtr L, const std::vector<Scalar>& t); ///< D_n, n times
QuasigradingI example_12_15(AlgebraPtr L, const std::vector<Scalar>& t); ///< C_n, n times
QuasigradingI example_12_16(AlgebraPtr L, const std::vector<Scalar>& t); ///< A_n, n+1 times
QuasigradingI example_12_17(AlgebraPtr L, const std::vector<Scalar>& t, const Scalar& a); ///< A_n, n times
/// B_n, two times; s is the Cartan part of g_{t1t1} in the Cartan basis.
QuasigradingI example_12_18(AlgebraPtr L, const std::vector<Scalar>& t, std::optional<Vec> s = std::nullopt);

struct D4Attempt {
    int alpha2_time = 0;
    int assignments_tried = 0;
    int assignments_valid = 0;
    std::string witness; ///< from the first failing assignment
};
/// Every placement of the zero-degree roots for the D_4 grading of types
/// (0,1,0,0,1), (0,0,0,1,1); one entry per choice of the component of alpha_2.
std::vector<D4Attempt> example_12_10_attempts();

// Matrix models.

/// Algebra in a joint eigenbasis of ad of the given commuting matrices, with
/// the given matrices as Cartan basis. Eigenvalues are searched among k and k*i, |k| <= 4.
struct GradedModel {
    LieAlgebra alg;
    Mat S; ///< columns: new basis in the coordinates of the matrix model
    std::vector<std::vector<Scalar>> weights; ///< per basis vector, ad eigenvalues
};
GradedModel graded_model(const MatrixAlgebra& M, const std::vector<Mat>& cartan);

/// Operator X -> (AX + XA)/2 on a matrix model, in its coordinates.
Mat half_anticommutator(const MatrixAlgebra& M, const Mat& A);

struct MatrixCrosscheck {
    std::vector<CheckResult> checks;
    bool regular = false;
    std::vector<Scalar> times; ///< empty unless regular
};
/// so(N) with W = (AX + XA)/2 for a symmetric A.
MatrixCrosscheck matrix_crosscheck_so(int N, const Mat& A);

/// gl(n+1): T_W = T_Z for the operator of the A_n example written on matrices.
CheckResult gl_torsion_match(int n, const std::vector<Scalar>& t);
/// The A_n example operator on sl(n+1) matrices, as a map on matrices.
Mat example_12_16_matrix_map(const std::vector<Scalar>& t, const Mat& x);

/// su(n+1) with the A_n example operator: closure of the real form, Jacobi, compatibility.
std::vector<CheckResult> compact_restriction_sl(int n, const std::vector<Scalar>& t);

} // namespace bilie
