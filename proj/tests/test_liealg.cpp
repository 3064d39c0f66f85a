#include <doctest.h>

#include "bilie/liealg.hpp"

#include <set>

using namespace bilie;

TEST_CASE("gaussian rationals")
{
    Scalar a = Scalar::parse("1/2+3i");
    Scalar b = Scalar::parse("-2/3");
    CHECK((a * b).str() == "-1/3-2i");
    CHECK((a / a) == Scalar(1));
    CHECK(Scalar::parse("i") * Scalar::parse("i") == Scalar(-1));
    CHECK(Scalar::parse("0.25") == Scalar(1, 4));
    CHECK(Scalar::parse(Scalar::parse("-7/5i").str()) == Scalar::parse("-7/5i"));
    Scalar r;
    CHECK(exact_sqrt(Scalar(9, 4), r));
    CHECK(r * r == Scalar(9, 4));
    CHECK(exact_sqrt(Scalar(-4), r));
    CHECK(r * r == Scalar(-4));
    CHECK_FALSE(exact_sqrt(Scalar(2), r));
    CHECK(exact_sqrt(Scalar::parse("2i"), r));
    CHECK(r * r == Scalar::parse("2i"));
    CHECK_THROWS(Scalar(1) / Scalar(0));
}

TEST_CASE("exact linear algebra")
{
    Mat m(2, 3);
    m << Scalar(1), Scalar(2), Scalar(3), Scalar(2), Scalar(4), Scalar(6);
    CHECK(rank(m) == 1);
    Mat k = kernel(m);
    CHECK(k.cols() == 2);
    CHECK(is_zero_matrix<Scalar>(m * k));
    Mat s(2, 2);
    s << Scalar(1), Scalar(2), Scalar(3), Scalar(4);
    CHECK(s * inverse(s) == identity<Scalar>(2));
}

TEST_CASE("A1 relations")
{
    LieAlgebra L = chevalley_algebra("A1");
    CHECK(L.dim == 3);
    const int h = 0, e = L.root_basis(0), f = L.root_basis(1);
    CHECK(L.killing(e, f) == Scalar(1));
    CHECK(L.table.at(e, f) == SparseVec{{h, Scalar(1)}});
    // (alpha, alpha) = alpha(H_alpha) = B(H_alpha, H_alpha)
    Scalar aa = L.killing(h, h);
    CHECK(L.table.at(h, e) == SparseVec{{e, aa}});
    CHECK(aa == Scalar(1, 2));
}

TEST_CASE("Chevalley algebras satisfy Jacobi and invariance")
{
    for (const char* tag : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
        LieAlgebra L = chevalley_algebra(tag);
        CHECK(is_antisymmetric(L.table));
        CHECK(jacobi_check(L.table).pass);
        CHECK(killing_invariance_check(L).pass);
        CHECK(rank(L.killing) == L.dim);
        // recomputed Killing form equals the transformed one
        CHECK(killing_matrix(L.table) == L.killing);
    }
}

TEST_CASE("normalization B(E_a,E_-a)=1 and B(H_a,H)=a(H)")
{
    for (const char* tag : {"A2", "B2", "G2"}) {
        LieAlgebra L = chevalley_algebra(tag);
        const RootSystem& R = *L.roots;
        for (int a = 0; a < R.size(); ++a) {
            int e = L.root_basis(a), f = L.root_basis(R.neg(a));
            if (R.is_positive(a)) CHECK(L.killing(e, f) == Scalar(1));
            Vec ha = cartan_of_root(L, a);
            if (R.is_positive(a)) CHECK(to_dense(L.table.at(e, f), L.dim) == ha);
            for (int j = 0; j < L.rank; ++j) CHECK(killing(L, ha, basis_vector(L, j)) == L.root_values(a, j));
        }
    }
}

TEST_CASE("B2 Jacobi on all 120 triples")
{
    LieAlgebra L = chevalley_algebra("B2");
    CHECK(L.dim == 10);
    int triples = 0;
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j)
            for (int k = j + 1; k < 10; ++k) {
                Vec x = basis_vector(L, i), y = basis_vector(L, j), z = basis_vector(L, k);
                Vec s = bracket(L, bracket(L, x, y), z) + bracket(L, bracket(L, y, z), x) +
                        bracket(L, bracket(L, z, x), y);
                CHECK(is_zero_matrix<Scalar>(s));
                ++triples;
            }
    CHECK(triples == 120);
}

TEST_CASE("raw structure constants are p+1 in absolute value")
{
    for (const char* tag : {"G2", "B3", "C3", "F4"}) {
        LieAlgebra L = chevalley_algebra(tag);
        const RootSystem& R = *L.roots;
        std::set<int> absval;
        for (const auto& [ab, N] : L.raw_N) {
            auto [a, b] = ab;
            int p = 0;
            RootVec v = R.roots[b];
            while (true) {
                for (int i = 0; i < R.rank; ++i) v[i] -= R.roots[a][i];
                if (!R.find(v)) break;
                ++p;
            }
            CHECK(std::abs(N) == p + 1);
            absval.insert(std::abs(N));
        }
        if (std::string(tag) == "G2") CHECK(absval == std::set<int>{1, 2, 3});
    }
}

TEST_CASE("sign flip breaks Jacobi")
{
    LieAlgebra L = chevalley_algebra("A2");
    Table t = L.table;
    int e1 = L.root_basis(L.roots->simple(0)), e2 = L.root_basis(L.roots->simple(1));
    for (auto& [k, x] : t.at(e1, e2)) x = -x;
    for (auto& [k, x] : t.at(e2, e1)) x = -x;
    auto r = jacobi_check(t);
    CHECK_FALSE(r.pass);
    CHECK(r.witness[0] >= 0);
    CHECK_FALSE(r.describe().empty());
}

TEST_CASE("matrix models")
{
    CHECK(matrix_model("so", 3).basis.size() == 3);
    CHECK(matrix_model("sl", 4).basis.size() == 15);
    MatrixAlgebra sp = matrix_model("sp", 2);
    CHECK(sp.basis.size() == 10);
    Mat J = zeros<Scalar>(4, 4);
    J(0, 2) = 1;
    J(1, 3) = 1;
    J(2, 0) = -1;
    J(3, 1) = -1;
    for (const Mat& X : sp.basis) CHECK(is_zero_matrix<Scalar>(Mat(X * J + J * X.transpose())));
    for (const char* m : {"gl", "sl", "so", "sp"}) {
        MatrixAlgebra M = matrix_model(m, 3);
        CHECK(jacobi_check(M.algebra.table).pass);
    }
    CHECK_THROWS(matrix_model("su", 3));
    CHECK_THROWS(matrix_model("sl", 9));
}

TEST_CASE("so(n) Killing form is (n-2) times the trace form")
{
    for (int n = 3; n <= 5; ++n) {
        MatrixAlgebra M = matrix_model("so", n);
        CHECK(M.algebra.killing == Scalar(n - 2) * M.trace_form);
    }
}

TEST_CASE("[x,y]_A on so(4) with symmetric A is Lie")
{
    MatrixAlgebra M = matrix_model("so", 4);
    Mat A = zeros<Scalar>(4, 4);
    A(0, 0) = 1;
    A(1, 1) = 2;
    A(2, 2) = -1;
    A(3, 3) = 5;
    A(0, 1) = A(1, 0) = 3;
    const int d = M.algebra.dim;
    Table t(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Mat c = M.basis[i] * A * M.basis[j] - M.basis[j] * A * M.basis[i];
            REQUIRE(M.contains(c));
            t.at(i, j) = to_sparse(M.coords(c));
        }
    CHECK(jacobi_check(t).pass);
}

TEST_CASE("structure dump")
{
    LieAlgebra L = chevalley_algebra("A1");
    auto j = structure_json(L);
    CHECK(j["convention"] == kChevalleyConvention);
    CHECK(j["dim"] == 3);
    CHECK(j["brackets"].size() == 3);
}
