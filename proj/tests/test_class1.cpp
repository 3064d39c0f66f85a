#include <doctest.h>

#include "bilie/class1.hpp"

using namespace bilie;

namespace {

AlgebraPtr algebra(const char* tag)
{
    return std::make_shared<const LieAlgebra>(chevalley_algebra(tag));
}

int nonzero_count(const std::vector<int>& e)
{
    int n = 0;
    for (int x : e) n += x != 0;
    return n;
}

std::vector<Scalar> ts(std::initializer_list<long> v)
{
    std::vector<Scalar> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

void full_check(const QuasigradingI& q)
{
    auto v = validate_quasigrading_i(q);
    REQUIRE_MESSAGE(v.pass, q.name << ": " << v.witness);
    auto s = wno_class1(q);
    for (const auto& c : verify_structure(s)) CHECK_MESSAGE(c.pass, q.name << " " << c.name << " " << c.witness);
    auto r = times(s);
    CHECK(r.bhat_consistent);
    for (const auto& c : check_class1(q, s, r)) CHECK_MESSAGE(c.pass, q.name << " " << c.name << " " << c.witness);
    CHECK(cartan_factorization_check(s, r).pass);
    CHECK(centre_disjoint_commuting_check(s, r).pass);
    CHECK(cartan_in_centres_check(s, r).pass);
}

} // namespace

TEST_CASE("catalog quasigradings give Class I structures")
{
    full_check(example_12_12(algebra("A2"), ts({0, 3})));
    full_check(example_12_12(algebra("B2"), ts({1, -2}), TwoTimeSide::SecondFull));
    full_check(example_12_12(algebra("G2"), ts({0, 1})));
    full_check(example_12_13(algebra("B2"), ts({0, 1, 3})));
    full_check(example_12_13(algebra("B3"), ts({2, -1, 5, 7})));
    full_check(example_12_14(algebra("D4"), ts({0, 1, 2, 5})));
    full_check(example_12_15(algebra("C3"), ts({1, 4, -2})));
    full_check(example_12_16(algebra("A2"), ts({0, 1, 3})));
    full_check(example_12_16(algebra("A3"), ts({1, 2, 4, 8})));
    full_check(example_12_17(algebra("A3"), ts({0, 1, 5}), Scalar(2)));
    full_check(example_12_17(algebra("A2"), ts({3, -1}), Scalar(-1, 2)));
    Vec s(3);
    s << Scalar(1), Scalar(1), Scalar(2);
    full_check(example_12_18(algebra("B3"), ts({0, 1}), s));
    full_check(example_12_18(algebra("B2"), ts({4, 1})));
}

TEST_CASE("virtual elements")
{
    auto q = example_12_16(algebra("A3"), ts({1, 2, 4, 8}));
    auto d = q.diagram();
    const RootSystem& R = *d.roots;
    for (int a = 0; a < R.num_positive; ++a) {
        auto e = epsilon_coords(R, a);
        bool last = e[3] != 0;
        // the element t_4 = 8 is virtual exactly in the pairs containing it
        CHECK(d.pairs[a].virtual2 == last);
        CHECK_FALSE(d.pairs[a].virtual1);
    }
    auto b = example_12_13(algebra("B3"), ts({0, 1, 2, 3})).diagram();
    for (int a = 0; a < b.roots->num_positive; ++a) CHECK(b.pairs[a].virtual2 == (b.pairs[a].t2 == Scalar(3)));
}

TEST_CASE("reduction merging the last two times of the B_n example")
{
    auto q = example_12_13(algebra("B3"), ts({0, 2, 5, 9}));
    auto r = reduce(q, {0, 1, 2, 2}, ts({0, 2, 5}));
    full_check(r);
    auto d = r.diagram();
    for (int a = 0; a < d.roots->num_positive; ++a) {
        const auto& p = d.pairs[a];
        // T_{e_i} = {t_i (t_n)} while e_i +- e_n carry no virtual element
        bool short_root = nonzero_count(epsilon_coords(*d.roots, a)) == 1;
        if (p.t2 == Scalar(5) && p.t1 != Scalar(5)) CHECK(p.virtual2 == short_root);
        if (p.diagonal()) CHECK_FALSE(p.virtual1);
    }
    // same structure as the so(7) operator with A = diag(0,0,2,2,5,5,5)
    Mat A = zeros<Scalar>(7, 7);
    std::vector<long> diag{0, 0, 2, 2, 5, 5, 5};
    for (int i = 0; i < 7; ++i) A(i, i) = diag[i];
    auto m = matrix_crosscheck_so(7, A);
    CHECK(m.regular);
    CHECK(m.times == ts({0, 2, 5}));
}

TEST_CASE("Z_2 gradings")
{
    auto q = example_12_16(algebra("A3"), ts({1, 2, 4, 8}));
    auto g = z2_grading(q);
    CHECK(g.homomorphism);
    CHECK(g.quasiroots == 1 + 4 * 3 / 2);
    auto q17 = example_12_17(algebra("A3"), ts({1, 2, 4}), Scalar(3));
    auto g17 = z2_grading(q17);
    CHECK(g17.homomorphism);
    CHECK(g17.quasiroots == 1 + 3 * 2 / 2);
    // the same partition of roots as the model automorphisms (1,1,0,0), (1,0,1,0)
    auto mg = model_grading(*q17.alg->roots, {{1, 1, 0, 0}, {1, 0, 1, 0}});
    CHECK(mg.orders == std::vector<int>{2, 2});
    for (int a = 0; a < q17.alg->roots->num_positive; ++a)
        for (int b = 0; b < q17.alg->roots->num_positive; ++b)
            CHECK((g17.degree[a] == g17.degree[b]) == (mg.degree[a] == mg.degree[b]));
}

TEST_CASE("D4 grading admits no quasigrading")
{
    auto att = example_12_10_attempts();
    REQUIRE(att.size() == 3);
    for (const auto& a : att) {
        CHECK(a.assignments_tried > 0);
        CHECK(a.assignments_valid == 0);
        CHECK_FALSE(a.witness.empty());
    }
}

TEST_CASE("broken quasigradings are rejected")
{
    auto q = example_12_16(algebra("A2"), ts({0, 1, 3}));
    q.root_pair[0] = {2, 2};
    CHECK_FALSE(validate_quasigrading_i(q).pass);
    CHECK_THROWS_AS(wno_class1(q), PreconditionError);
    auto r = example_12_13(algebra("B2"), ts({0, 1, 1}));
    CHECK_FALSE(validate_quasigrading_i(r).pass);
    auto c = example_12_16(algebra("A2"), ts({0, 1, 3}));
    c.cartan_part[1] = c.cartan_part[0];
    CHECK_FALSE(validate_quasigrading_i(c).pass);
}

TEST_CASE("so(N) matrix operator")
{
    Mat A = zeros<Scalar>(5, 5);
    std::vector<long> diag{1, 1, 4, 4, -2};
    for (int i = 0; i < 5; ++i) A(i, i) = diag[i];
    auto m = matrix_crosscheck_so(5, A);
    for (const auto& c : m.checks) CHECK_MESSAGE(c.pass, c.name << " " << c.witness);
    CHECK(m.regular);
    auto s = wno_class1(example_12_13(algebra("B2"), ts({1, 4, -2})));
    CHECK(m.times == times(s).times);

    Mat D = zeros<Scalar>(3, 3);
    D(0, 0) = 1;
    D(1, 1) = 2;
    D(2, 2) = 3;
    auto n = matrix_crosscheck_so(3, D);
    CHECK_FALSE(n.regular);
    for (const auto& c : n.checks)
        if (c.name != "regular") CHECK(c.pass);
}

TEST_CASE("gl and su matrix forms of the A_n example")
{
    CHECK(gl_torsion_match(2, ts({1, 3, 7})).pass);
    CHECK(gl_torsion_match(3, ts({0, 2, -1, 5})).pass);
    for (int n : {2, 3})
        for (const auto& c : compact_restriction_sl(n, n == 2 ? ts({1, 3, 7}) : ts({0, 2, -1, 5})))
            CHECK_MESSAGE(c.pass, c.name << " " << c.witness);
}
