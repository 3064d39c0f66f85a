#include "bilie/rootsys.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <tuple>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bilie {

namespace {

void bond(std::vector<std::vector<int>>& f, int i, int j, int v)
{
    f[i][j] = v;
    f[j][i] = v;
}

std::vector<std::vector<int>> make_form(char family, int n)
{
    std::vector<std::vector<int>> f(n, std::vector<int>(n, 0));
    switch (family) {
    case 'A':
        for (int i = 0; i < n; ++i) f[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i) bond(f, i, i + 1, -1);
        break;
    case 'B':
        for (int i = 0; i < n; ++i) f[i][i] = 4;
        f[n - 1][n - 1] = 2;
        for (int i = 0; i + 1 < n; ++i) bond(f, i, i + 1, -2);
        break;
    case 'C':
        for (int i = 0; i < n; ++i) f[i][i] = 2;
        f[n - 1][n - 1] = 4;
        for (int i = 0; i + 2 < n; ++i) bond(f, i, i + 1, -1);
        bond(f, n - 2, n - 1, -2);
        break;
    case 'D':
        for (int i = 0; i < n; ++i) f[i][i] = 2;
        for (int i = 0; i + 2 < n; ++i) bond(f, i, i + 1, -1);
        bond(f, n - 3, n - 1, -1);
        break;
    case 'E': {
        for (int i = 0; i < n; ++i) f[i][i] = 2;
        const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
        for (auto& e : edges)
            if (e[0] <= n && e[1] <= n) bond(f, e[0] - 1, e[1] - 1, -1);
        break;
    }
    case 'F':
        f[0][0] = f[1][1] = 4;
        f[2][2] = f[3][3] = 2;
        bond(f, 0, 1, -2);
        bond(f, 1, 2, -2);
        bond(f, 2, 3, -1);
        break;
    case 'G':
        f[0][0] = 2;
        f[1][1] = 6;
        bond(f, 0, 1, -3);
        break;
    default:
        throw std::invalid_argument("unknown family");
    }
    return f;
}

bool valid_type(char family, int n)
{
    switch (family) {
    case 'A': return n >= 1;
    case 'B':
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
    }
}

} // namespace

int classical_root_count(char family, int n)
{
    switch (family) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
    default: return 0;
    }
}

std::string RootSystem::tag() const
{
    return std::string(1, family) + std::to_string(rank);
}

int RootSystem::height(int k) const
{
    return std::accumulate(roots[k].begin(), roots[k].end(), 0);
}

int RootSystem::inner(const RootVec& a, const RootVec& b) const
{
    int s = 0;
    for (int i = 0; i < rank; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank; ++j) s += a[i] * form[i][j] * b[j];
    }
    return s;
}

int RootSystem::cartan_int(int a, int b) const
{
    return 2 * inner(a, b) / inner(b, b);
}

std::optional<int> RootSystem::find(const RootVec& v) const
{
    auto it = index_of.find(v);
    if (it == index_of.end()) return std::nullopt;
    return it->second;
}

std::optional<int> RootSystem::sum(int a, int b) const
{
    RootVec v(rank);
    for (int i = 0; i < rank; ++i) v[i] = roots[a][i] + roots[b][i];
    return find(v);
}

RootVec RootSystem::lowest() const
{
    RootVec v = highest;
    for (int& x : v) x = -x;
    return v;
}

int RootSystem::find_simple(int i) const
{
    RootVec v(rank, 0);
    v[i] = 1;
    return index_of.at(v);
}

RootSystem build_root_system(char family, int n)
{
    if (!valid_type(family, n))
        throw std::invalid_argument("invalid root system type " + std::string(1, family) +
                                    std::to_string(n));
    RootSystem R;
    R.family = family;
    R.rank = n;
    R.form = make_form(family, n);
    R.cartan.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) R.cartan[i][j] = 2 * R.form[i][j] / R.form[j][j];

    std::set<RootVec> pos;
    std::vector<RootVec> layer;
    for (int i = 0; i < n; ++i) {
        RootVec v(n, 0);
        v[i] = 1;
        pos.insert(v);
        layer.push_back(v);
    }
    auto pairing = [&](const RootVec& b, int i) {
        int s = 0;
        for (int j = 0; j < n; ++j) s += b[j] * R.form[j][i];
        return 2 * s / R.form[i][i];
    };
    while (!layer.empty()) {
        std::set<RootVec> next;
        for (const auto& b : layer)
            for (int i = 0; i < n; ++i) {
                int p = 0;
                RootVec d = b;
                while (true) {
                    d[i] -= 1;
                    if (!pos.count(d)) break;
                    ++p;
                }
                int q = p - pairing(b, i);
                if (q > 0) {
                    RootVec u = b;
                    u[i] += 1;
                    if (!pos.count(u)) next.insert(u);
                }
            }
        layer.assign(next.begin(), next.end());
        pos.insert(next.begin(), next.end());
    }
    std::vector<RootVec> sorted(pos.begin(), pos.end());
    std::sort(sorted.begin(), sorted.end(), [](const RootVec& a, const RootVec& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    R.num_positive = static_cast<int>(sorted.size());
    R.roots = sorted;
    for (const auto& v : sorted) {
        RootVec m = v;
        for (int& x : m) x = -x;
        R.roots.push_back(m);
    }
    for (int k = 0; k < R.size(); ++k) R.index_of[R.roots[k]] = k;
    R.highest = sorted.back();
    return R;
}

RootSystem build_root_system(const std::string& tag)
{
    if (tag.size() < 2) throw std::invalid_argument("bad root system tag: " + tag);
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(tag[0])));
    int n = 0;
    try {
        n = std::stoi(tag.substr(1));
    } catch (...) {
        throw std::invalid_argument("bad root system tag: " + tag);
    }
    return build_root_system(f, n);
}

std::vector<Triangle> triangles(const RootSystem& R)
{
    std::set<std::array<int, 3>> seen;
    std::vector<Triangle> out;
    for (int a = 0; a < R.size(); ++a)
        for (int b = a + 1; b < R.size(); ++b) {
            auto s = R.sum(a, b);
            if (!s) continue;
            std::array<int, 3> t{a, b, R.neg(*s)};
            std::sort(t.begin(), t.end());
            if (seen.insert(t).second) out.push_back({t[0], t[1], t[2]});
        }
    std::sort(out.begin(), out.end(), [](const Triangle& x, const Triangle& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    return out;
}

bool RootSubset::contains(int k) const
{
    return std::binary_search(members.begin(), members.end(), k);
}

SubsetFlags check_closed_symmetric(const RootSystem& R, const std::vector<int>& members)
{
    std::set<int> m(members.begin(), members.end());
    SubsetFlags f{true, true};
    for (int a : m) {
        if (!m.count(R.neg(a))) f.symmetric = false;
        for (int b : m) {
            auto s = R.sum(a, b);
            if (s && !m.count(*s)) f.closed = false;
        }
    }
    return f;
}

RootSubset make_subset(const RootSystem& R, std::vector<int> members)
{
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    RootSubset s;
    s.parent = &R;
    s.members = std::move(members);
    auto f = check_closed_symmetric(R, s.members);
    s.closed = f.closed;
    s.symmetric = f.symmetric;
    return s;
}

RootSubset levi_subset(const RootSystem& R, const std::vector<int>& b0)
{
    std::vector<bool> allowed(R.rank, false);
    for (int i : b0) {
        if (i < 0 || i >= R.rank) throw std::invalid_argument("simple root index out of range");
        allowed[i] = true;
    }
    std::vector<int> members;
    for (int k = 0; k < R.size(); ++k) {
        bool ok = true;
        for (int i = 0; i < R.rank; ++i)
            if (R.roots[k][i] != 0 && !allowed[i]) ok = false;
        if (ok) members.push_back(k);
    }
    return make_subset(R, members);
}

std::vector<int> chain_decomposition(const RootSystem& R, int beta)
{
    if (!R.is_positive(beta)) throw std::invalid_argument("chain_decomposition needs a positive root");
    std::vector<int> chain;
    RootVec cur = R.roots[beta];
    while (true) {
        int h = std::accumulate(cur.begin(), cur.end(), 0);
        if (h == 1) {
            for (int i = 0; i < R.rank; ++i)
                if (cur[i] == 1) chain.push_back(i);
            break;
        }
        bool found = false;
        for (int i = 0; i < R.rank && !found; ++i) {
            if (cur[i] == 0) continue;
            RootVec d = cur;
            d[i] -= 1;
            if (R.find(d)) {
                chain.push_back(i);
                cur = d;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no simple root can be removed");
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::vector<int> epsilon_coords(const RootSystem& R, int root)
{
    const int n = R.rank;
    const RootVec& c = R.roots[root];
    std::vector<int> e;
    switch (R.family) {
    case 'A':
        e.assign(n + 1, 0);
        for (int i = 0; i < n; ++i) {
            e[i] += c[i];
            e[i + 1] -= c[i];
        }
        break;
    case 'B':
    case 'C':
    case 'D':
        e.assign(n, 0);
        for (int i = 0; i + 1 < n; ++i) {
            e[i] += c[i];
            e[i + 1] -= c[i];
        }
        if (R.family == 'B') e[n - 1] += c[n - 1];
        if (R.family == 'C') e[n - 1] += 2 * c[n - 1];
        if (R.family == 'D') {
            e[n - 2] += c[n - 1];
            e[n - 1] += c[n - 1];
        }
        break;
    default:
        break;
    }
    return e;
}

std::optional<int> root_from_epsilon(const RootSystem& R, const std::vector<int>& eps)
{
    for (int k = 0; k < R.size(); ++k)
        if (epsilon_coords(R, k) == eps) return k;
    return std::nullopt;
}

std::string root_name(const RootSystem& R, int root)
{
    std::ostringstream os;
    auto e = epsilon_coords(R, root);
    if (!e.empty()) {
        bool first = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] > 0 && !first) os << '+';
            if (e[i] == -1)
                os << '-';
            else if (e[i] != 1)
                os << e[i];
            os << 'e' << (i + 1);
            first = false;
        }
        return os.str();
    }
    os << '(';
    for (int i = 0; i < R.rank; ++i) os << (i ? "," : "") << R.roots[root][i];
    os << ')';
    return os.str();
}

} // namespace bilie
