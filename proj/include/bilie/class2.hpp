#pragma once

#include "bilie/diagrams.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bilie {

/// Integer lattice Span_Z(generators) in Z^n with its Smith form.
class Lattice {
public:
    Lattice(int n, const std::vector<RootVec>& generators);
    bool contains(const RootVec& v) const;
    /// Class of v in Z^n / lattice: torsion coordinates first, then free ones.
    std::vector<long long> coset(const RootVec& v) const;
    /// Invariant factors > 1.
    const std::vector<long long>& torsion() const { return torsion_; }
    int free_rank() const { return n_ - rank_; }
    /// "Z x Z3", "Z3 x Z3", "0".
    std::string group() const;

private:
    int n_ = 0, rank_ = 0;
    std::vector<long long> d_;
    std::vector<std::vector<long long>> V_;
    std::vector<long long> torsion_;
};

/// Coarsening of the root grading by Q / Q0, Q0 = Span_Z(R0 and extra generators).
struct ToralGrading {
    RootSystemPtr R;
    std::vector<int> r0;
    std::string group;
    std::vector<std::vector<long long>> degree; ///< per root index
    std::map<std::vector<long long>, std::vector<int>> components; ///< nonzero degrees only
    bool zero_is_r0 = true;
    bool irreducible = true; ///< each component is an irreducible g0-module
    std::string witness;
};
ToralGrading toral_grading(RootSystemPtr R, const std::vector<int>& r0, const std::vector<RootVec>& extra = {});
bool same_partition(const ToralGrading& a, const ToralGrading& b);

/// Fixed points g0 = g0^1 + g0^2 of a Class II quasigrading.
struct AdmissibleSplit {
    AlgebraPtr alg;
    std::vector<int> r0, r1, r2;
    Mat h1, h2; ///< Cartan basis coordinates
};

/// A triangle with no member in R0, if any.
std::optional<Triangle> offset_triangle(const RootSystem& R, const std::vector<int>& r0);
CheckResult validate_split(const AdmissibleSplit& s);

/// Simple factors of [g0, g0], as root index lists.
std::vector<std::vector<int>> simple_factors(const RootSystem& R, const std::vector<int>& r0);
/// Cartan elements killed by every root of R0.
Mat cartan_centre(const LieAlgebra& L, const std::vector<int>& r0);
/// g0^1 = the listed factors (plus the centre when centre_first), g0^2 = the rest.
AdmissibleSplit split_by_factors(AlgebraPtr L, const std::vector<int>& r0, const std::vector<int>& first_factors,
                                 bool centre_first = true);

/// Affine form c0 + c1 v1 + ... in named parameters.
struct Affine {
    std::vector<Scalar> c;

    explicit Affine(std::size_t vars = 0) : c(vars + 1, Scalar(0)) {}
    static Affine constant(const Scalar& x, std::size_t vars);
    static Affine variable(std::size_t i, std::size_t vars);
    bool is_zero() const;
    Scalar eval(const std::vector<Scalar>& values) const;
    std::string str(const std::vector<std::string>& names) const;
    bool operator==(const Affine& o) const { return c == o.c; }
};
Affine operator+(const Affine& x, const Affine& y);
Affine operator-(const Affine& x, const Affine& y);
Affine operator-(const Affine& x);
Affine operator*(const Scalar& s, const Affine& x);

using LabelFn = std::function<int(const Triangle&)>;
/// sign on triangles off R0 with two positive roots, -sign with one, 0 otherwise.
LabelFn parabolic_labels(const RootSystem& R, const std::vector<int>& r0, int sign);
/// + when the degrees sum to m, - when they sum to 2m, 0 when a member has degree 0.
LabelFn zm_labels(const std::vector<int>& degree, int m);

struct Reconstruction {
    std::vector<Affine> kappa; ///< per root index
    bool consistent = true;
    std::string witness;
};
/// Height induction kappa_a = kappa_b + kappa_c - label(b, c, -a) a from the simple-root seeds,
/// then a check of every triangle. last picks the last decomposition instead of the first.
Reconstruction reconstruct_kappa(const RootSystem& R, const std::vector<Affine>& seeds, const Affine& a,
                                 const LabelFn& label, bool last = false);

struct Class2Build {
    BiLieStructure s;
    Mat W_raw; ///< before the principal projection
    std::vector<Scalar> kappa;
    AdmissibleSplit split;
    Scalar t1, t2;
    LabelSystem labels;
    ToralGrading grading;
};

/// W = t_j on g0^j, (t1+t2)/2 + kappa on the roots off R0, then the principal projection.
Class2Build wno_class2(const AdmissibleSplit& split, const Scalar& t1, const Scalar& t2,
                       const std::vector<Scalar>& kappa, const std::string& name = "class II");
std::vector<CheckResult> check_class2(const Class2Build& b, const TimesReport& r);

/// t1 on g0^1 and on positive roots off R0, t2 on g0^2 and on negative roots off R0.
Class2Build parabolic_wno(AlgebraPtr L, const Scalar& t1, const Scalar& t2, const std::vector<int>& b0,
                          const std::vector<int>& first_factors, bool centre_first = true);
/// Degrees of a model automorphism of type s = (s_0, ..., s_n); order m must exceed 2.
Class2Build zm_wno(AlgebraPtr L, const Scalar& t1, const Scalar& t2, const std::vector<int>& type,
                   const std::vector<int>& first_factors, bool centre_first = true);
std::vector<int> zm_degrees(const RootSystem& R, const std::vector<int>& type, int* order = nullptr);

struct E7Report {
    std::vector<int> r0;
    bool r0_definitions_agree = false;
    std::string group_span_r0;   ///< Q / Span_Z(R0)
    std::string group_lattice;   ///< Q / Span(a1, a2, 3a3, a4, 3a5, a6, a7)
    bool same_partition = false;
    Reconstruction symbolic;     ///< parameters (x, a)
    bool table_matches = false;
    std::string table_witness;
    std::string theta_relation;  ///< kappa(theta) with free seeds c3, c5
    bool kappa_vanishes_on_r0 = false;
};
E7Report e7_symbolic();
Class2Build e7_example(const Scalar& x, const Scalar& t1, const Scalar& t2);

} // namespace bilie
