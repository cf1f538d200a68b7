#ifndef MDADE_GROUP_HPP
#define MDADE_GROUP_HPP

#include <string>
#include <vector>

namespace mdade {

/// A finite p-group backed by its Cayley table. Elements are the indices
/// 0..order-1, with 0 the identity. Construction validates the full set of
/// group axioms exhaustively, which is cheap at the supported orders.
struct FiniteGroup {
    std::string name;
    int order = 0;
    int prime = 0;
    std::vector<int> table;    // row-major, table[a*order+b] = a*b
    std::vector<int> inverse;

    int mul(int a, int b) const { return table[size_t(a) * order + b]; }
    int inv(int a) const { return inverse[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
    int power(int a, long e) const;
    int element_order(int a) const;

    /// Validates identity, inverses, Latin-square rows/columns, full
    /// associativity and that order is a power of prime.
    static FiniteGroup from_table(std::string name, int prime, std::vector<int> table);
};

/// Builds a group from a spec string. Supported atoms: "C{n}" for n a prime
/// power, "D8", "D16", "Q8", "Q16", "SD16", "M16", "He{p^3}"; atoms may be
/// combined with 'x' for direct products ("C2xC2x...").
FiniteGroup make_group(const std::string& spec);

}  // namespace mdade

#endif
