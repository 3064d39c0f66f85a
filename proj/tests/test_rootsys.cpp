#include <doctest.h>

#include "bilie/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace bilie;

namespace {

// Closure of the simple roots under simple reflections.
std::set<RootVec> reflection_closure(const RootSystem& R)
{
    std::set<RootVec> all;
    std::vector<RootVec> todo;
    for (int i = 0; i < R.rank; ++i) {
        RootVec v(R.rank, 0);
        v[i] = 1;
        all.insert(v);
        todo.push_back(v);
    }
    while (!todo.empty()) {
        RootVec v = todo.back();
        todo.pop_back();
        for (int i = 0; i < R.rank; ++i) {
            int s = 0;
            for (int j = 0; j < R.rank; ++j) s += v[j] * R.cartan[j][i];
            RootVec w = v;
            w[i] -= s;
            if (all.insert(w).second) todo.push_back(w);
        }
    }
    return all;
}

int brute_triangles(const RootSystem& R)
{
    std::set<std::array<int, 3>> seen;
    for (int a = 0; a < R.size(); ++a)
        for (int b = 0; b < R.size(); ++b)
            for (int c = 0; c < R.size(); ++c) {
                if (a == b || b == c || a == c) continue;
                bool zero = true;
                for (int i = 0; i < R.rank; ++i)
                    if (R.roots[a][i] + R.roots[b][i] + R.roots[c][i] != 0) zero = false;
                if (!zero) continue;
                std::array<int, 3> t{a, b, c};
                std::sort(t.begin(), t.end());
                seen.insert(t);
            }
    return static_cast<int>(seen.size());
}

} // namespace

TEST_CASE("root counts match closed forms")
{
    const std::pair<char, int> types[] = {{'A', 1}, {'A', 2}, {'A', 5}, {'A', 8}, {'B', 2}, {'B', 5},
                                          {'B', 8}, {'C', 3}, {'C', 8}, {'D', 4}, {'D', 8}, {'E', 6},
                                          {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
    for (auto [f, n] : types) {
        RootSystem R = build_root_system(f, n);
        CHECK(R.size() == classical_root_count(f, n));
        CHECK(R.num_positive * 2 == R.size());
    }
}

TEST_CASE("E7 roots agree with reflection closure")
{
    RootSystem R = build_root_system('E', 7);
    auto closure = reflection_closure(R);
    CHECK(closure.size() == 126);
    std::set<RootVec> ours(R.roots.begin(), R.roots.end());
    CHECK(ours == closure);
}

TEST_CASE("positive roots are sorted by height then lex")
{
    RootSystem R = build_root_system("F4");
    for (int k = 0; k + 1 < R.num_positive; ++k) {
        int h0 = R.height(k), h1 = R.height(k + 1);
        CHECK((h0 < h1 || (h0 == h1 && R.roots[k] < R.roots[k + 1])));
    }
    CHECK(R.highest == RootVec{2, 3, 4, 2});
}

TEST_CASE("reduced and Cartan integers bounded")
{
    for (const char* tag : {"B3", "C3", "G2", "F4", "E6"}) {
        RootSystem R = build_root_system(tag);
        for (int a = 0; a < R.size(); ++a) {
            RootVec twice = R.roots[a];
            for (int& x : twice) x *= 2;
            CHECK_FALSE(R.find(twice).has_value());
            for (int b = 0; b < R.size(); ++b) CHECK(std::abs(R.cartan_int(a, b)) <= 3);
        }
    }
}

TEST_CASE("A1 and B2 data")
{
    RootSystem a1 = build_root_system('A', 1);
    CHECK(a1.size() == 2);
    RootSystem b2 = build_root_system('B', 2);
    CHECK(b2.size() == 8);
    std::set<std::vector<int>> eps;
    for (int k = 0; k < b2.size(); ++k) eps.insert(epsilon_coords(b2, k));
    std::set<std::vector<int>> expected{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    CHECK(eps == expected);
}

TEST_CASE("invalid types are rejected")
{
    CHECK_THROWS(build_root_system('D', 3));
    CHECK_THROWS(build_root_system('E', 9));
    CHECK_THROWS(build_root_system('B', 1));
    CHECK_THROWS(build_root_system("X2"));
}

TEST_CASE("triangles")
{
    CHECK(triangles(build_root_system("A1")).empty());
    for (const char* tag : {"A2", "B2", "G2", "A3"}) {
        RootSystem R = build_root_system(tag);
        auto t = triangles(R);
        CHECK(static_cast<int>(t.size()) == brute_triangles(R));
        for (const auto& tr : t)
            for (int i = 0; i < R.rank; ++i)
                CHECK(R.roots[tr.a][i] + R.roots[tr.b][i] + R.roots[tr.c][i] == 0);
    }
    CHECK(triangles(build_root_system("A2")).size() == 2);
    CHECK(triangles(build_root_system("B2")).size() == 4);
}

TEST_CASE("levi subsets")
{
    RootSystem a2 = build_root_system("A2");
    CHECK(levi_subset(a2, {}).members.empty());
    auto s = levi_subset(a2, {0});
    CHECK(s.members == std::vector<int>{a2.simple(0), a2.neg(a2.simple(0))});
    CHECK(s.closed);
    CHECK(s.symmetric);

    RootSystem a3 = build_root_system("A3");
    auto l = levi_subset(a3, {0, 2});
    // brute force: roots whose support avoids alpha_2
    std::vector<int> expect;
    for (int k = 0; k < a3.size(); ++k)
        if (a3.roots[k][1] == 0) expect.push_back(k);
    CHECK(l.members == expect);
    CHECK(l.members.size() == 4);
    CHECK(l.closed);
    CHECK(l.symmetric);
}

TEST_CASE("chain decompositions")
{
    for (const char* tag : {"A2", "B2", "G2", "E7", "F4"}) {
        RootSystem R = build_root_system(tag);
        for (int b = 0; b < R.num_positive; ++b) {
            auto ch = chain_decomposition(R, b);
            CHECK(static_cast<int>(ch.size()) == R.height(b));
            RootVec acc(R.rank, 0);
            for (int i : ch) {
                acc[i] += 1;
                CHECK(R.find(acc).has_value());
            }
            CHECK(acc == R.roots[b]);
        }
    }
    RootSystem b2 = build_root_system("B2");
    auto ch = chain_decomposition(b2, *b2.find({1, 2}));
    CHECK(ch.size() == 3);
    CHECK(chain_decomposition(b2, b2.simple(1)) == std::vector<int>{1});
}

TEST_CASE("closed and symmetric flags")
{
    RootSystem R = build_root_system("A2");
    int a1 = R.simple(0), a2 = R.simple(1);
    auto f = check_closed_symmetric(R, {a1, R.neg(a1)});
    CHECK(f.closed);
    CHECK(f.symmetric);
    CHECK_FALSE(check_closed_symmetric(R, {a1}).symmetric);
    CHECK_FALSE(check_closed_symmetric(R, {a1, R.neg(a1), a2, R.neg(a2)}).closed);
}
