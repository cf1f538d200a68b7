#include "mdade/group.hpp"

#include <cmath>
#include <stdexcept>

namespace mdade {

namespace {

bool prime_power_of(int order, int p) {
    if (order < 1 || p < 2) return false;
    while (order % p == 0) order /= p;
    return order == 1;
}

int smallest_prime_factor(int n) {
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

}  // namespace

int FiniteGroup::power(int a, long e) const {
    int ord = element_order(a);
    e %= ord;
    if (e < 0) e += ord;
    int r = 0;
    for (long i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

int FiniteGroup::element_order(int a) const {
    int x = a, n = 1;
    while (x != 0) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

FiniteGroup FiniteGroup::from_table(std::string name, int prime, std::vector<int> table) {
    FiniteGroup g;
    g.name = std::move(name);
    const size_t sz = table.size();
    int n = int(std::lround(std::sqrt(double(sz))));
    if (size_t(n) * n != sz || n == 0)
        throw std::invalid_argument("from_table: table is not square");
    g.order = n;
    g.prime = prime;
    g.table = std::move(table);

    if (!prime_power_of(n, prime))
        throw std::invalid_argument("group '" + g.name + "': order " + std::to_string(n) +
                                    " is not a power of " + std::to_string(prime));
    for (int v : g.table)
        if (v < 0 || v >= n) throw std::invalid_argument("from_table: entry out of range");
    // identity and Latin-square property
    for (int a = 0; a < n; ++a) {
        if (g.mul(0, a) != a || g.mul(a, 0) != a)
            throw std::invalid_argument("group '" + g.name + "': 0 is not an identity");
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int b = 0; b < n; ++b) {
            int r = g.mul(a, b), c = g.mul(b, a);
            if (seen_row[r] || seen_col[c])
                throw std::invalid_argument("group '" + g.name + "': table is not a bijection");
            seen_row[r] = seen_col[c] = true;
        }
    }
    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == 0 && g.mul(b, a) == 0) g.inverse[a] = b;
    for (int a = 0; a < n; ++a)
        if (g.inverse[a] < 0)
            throw std::invalid_argument("group '" + g.name + "': missing inverse");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw std::invalid_argument("group '" + g.name + "': associativity fails");
    return g;
}

namespace {

FiniteGroup cyclic_group(int n) {
    if (n < 2) throw std::invalid_argument("C" + std::to_string(n) + ": order must be >= 2");
    int p = smallest_prime_factor(n);
    if (!prime_power_of(n, p))
        throw std::invalid_argument("C" + std::to_string(n) + ": order is not a prime power");
    std::vector<int> t(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[size_t(a) * n + b] = (a + b) % n;
    return FiniteGroup::from_table("C" + std::to_string(n), p, std::move(t));
}

// Order-2^n group with normal form a^i b^j (0 <= i < m = 2^(n-1), j in
// {0,1}), defining relation b a b^-1 = a^t, and b^2 = a^(m/2) in the
// quaternion case, b^2 = 1 otherwise. Element index is i + m*j.
FiniteGroup two_generator_2group(const std::string& name, int order, int t_exp, bool quaternion) {
    int m = order / 2;
    auto idx = [m](int i, int j) { return ((i % m + m) % m) + m * (j & 1); };
    auto tpow = [&](int e, int j) {  // e * t^j mod m
        long v = e;
        for (int k = 0; k < j; ++k) v = (v * t_exp) % m;
        return int(((v % m) + m) % m);
    };
    std::vector<int> tab(size_t(order) * order);
    for (int i1 = 0; i1 < m; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i = i1 + tpow(i2, j1);
                    int j = j1 + j2;
                    if (j == 2 && quaternion) i += m / 2;
                    tab[size_t(idx(i1, j1)) * order + idx(i2, j2)] = idx(i, j % 2);
                }
    return FiniteGroup::from_table(name, 2, std::move(tab));
}

// Unitriangular 3x3 matrices over F_p; element (a,b,c) has index
// a + p*b + p^2*c and represents the matrix [[1,a,c],[0,1,b],[0,0,1]].
FiniteGroup heisenberg_group(int p) {
    int n = p * p * p;
    auto idx = [p](int a, int b, int c) { return a + p * b + p * p * c; };
    std::vector<int> tab(size_t(n) * n);
    for (int a1 = 0; a1 < p; ++a1)
        for (int b1 = 0; b1 < p; ++b1)
            for (int c1 = 0; c1 < p; ++c1)
                for (int a2 = 0; a2 < p; ++a2)
                    for (int b2 = 0; b2 < p; ++b2)
                        for (int c2 = 0; c2 < p; ++c2)
                            tab[size_t(idx(a1, b1, c1)) * n + idx(a2, b2, c2)] =
                                idx((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
    return FiniteGroup::from_table("He" + std::to_string(n), p, std::move(tab));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.prime != b.prime)
        throw std::invalid_argument(a.name + "x" + b.name + ": order is not a prime power");
    int n = a.order * b.order;
    std::vector<int> tab(size_t(n) * n);
    auto idx = [&](int x, int y) { return x * b.order + y; };
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1)
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    tab[size_t(idx(x1, y1)) * n + idx(x2, y2)] =
                        idx(a.mul(x1, x2), b.mul(y1, y2));
    return FiniteGroup::from_table(a.name + "x" + b.name, a.prime, std::move(tab));
}

FiniteGroup make_atom(const std::string& s) {
    if (s.size() >= 2 && s[0] == 'C') {
        int n = std::stoi(s.substr(1));
        return cyclic_group(n);
    }
    if (s == "D8") return two_generator_2group("D8", 8, -1, false);
    if (s == "D16") return two_generator_2group("D16", 16, -1, false);
    if (s == "Q8") return two_generator_2group("Q8", 8, -1, true);
    if (s == "Q16") return two_generator_2group("Q16", 16, -1, true);
    if (s == "SD16") return two_generator_2group("SD16", 16, 3, false);
    if (s == "M16") return two_generator_2group("M16", 16, 5, false);
    if (s.size() >= 3 && s.substr(0, 2) == "He") {
        int n = std::stoi(s.substr(2));
        int p = int(std::lround(std::cbrt(double(n))));
        if (p < 2 || p * p * p != n || smallest_prime_factor(p) != p)
            throw std::invalid_argument("He" + std::to_string(n) + ": order is not a prime cubed");
        return heisenberg_group(p);
    }
    throw std::invalid_argument("unknown group spec '" + s + "'");
}

}  // namespace

FiniteGroup make_group(const std::string& spec) {
    if (spec.empty()) throw std::invalid_argument("empty group spec");
    std::vector<std::string> atoms;
    size_t start = 0;
    for (size_t i = 0; i <= spec.size(); ++i) {
        if (i == spec.size() || spec[i] == 'x') {
            if (i == start) throw std::invalid_argument("malformed group spec '" + spec + "'");
            atoms.push_back(spec.substr(start, i - start));
            start = i + 1;
        }
    }
    FiniteGroup g = make_atom(atoms[0]);
    for (size_t i = 1; i < atoms.size(); ++i) g = direct_product(g, make_atom(atoms[i]));
    return g;
}

}  // namespace mdade
