#ifndef MDADE_MACKEY_HPP
#define MDADE_MACKEY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mdade/context.hpp"
#include "mdade/exactla.hpp"

namespace mdade {

// ---------------------------------------------------------------------------
// The Mackey algebra from its presentation
// ---------------------------------------------------------------------------

/// Normal form t^H_{gLg^-1} c^g_L r^K_L: top = H, bottom = K, g the canonical
/// representative of its (H,K) double coset, sub = L a canonical class
/// representative inside H^g inter K (conjugacy within that intersection).
struct MackeyBasisElement {
    int top = -1;     // lattice index of H
    int bottom = -1;  // lattice index of K
    int g = 0;
    int sub = -1;     // lattice index of L

    auto operator<=>(const MackeyBasisElement&) const = default;
};

/// Integer linear combination of basis elements.
using MackeyCombination = std::map<MackeyBasisElement, long>;

/// One generator of the presentation.
struct MackeyGen {
    enum Kind { Conj, Res, Tr } kind = Res;
    int g = 0;       // Conj only
    int upper = -1;  // H (the domain for Conj and Res, the codomain for Tr)
    int lower = -1;  // K <= H for Res/Tr

    static MackeyGen conj(int g, int h) { return {Conj, g, h, -1}; }
    static MackeyGen res(int h, int k) { return {Res, 0, h, k}; }
    static MackeyGen tr(int h, int k) { return {Tr, 0, h, k}; }
};

/// A word in the generators, applied right to left like a composite of maps.
using MackeyWord = std::vector<MackeyGen>;

/// Rewrites a word to its normal form: mismatched interior subgroups kill a
/// product, inner r.t products expand through the Mackey relation,
/// conjugations commute past r and t, and chains compose.
MackeyCombination normalize_word(const GroupContext& ctx, const MackeyWord& w);

/// Normal form of the concatenation a.b.
MackeyCombination normalize_product(const GroupContext& ctx, const MackeyWord& a,
                                    const MackeyWord& b);

MackeyCombination multiply_basis(const GroupContext& ctx, const MackeyBasisElement& a,
                                 const MackeyBasisElement& b);
MackeyCombination multiply_combinations(const GroupContext& ctx, const MackeyCombination& a,
                                        const MackeyCombination& b);

/// The canonical basis (H, K, double coset, class of L), without structure
/// constants; cheap at any supported order.
std::vector<MackeyBasisElement> enumerate_mackey_basis(const GroupContext& ctx);

/// The full algebra with structure constants, for |G| <= 8.
struct MackeyAlgebra {
    std::shared_ptr<const GroupContext> ctx;
    std::vector<MackeyBasisElement> basis;
    std::map<MackeyBasisElement, int> index;
    std::vector<std::vector<std::map<int, long>>> product;  // [i][j] -> sparse result
    MackeyCombination identity;

    int dim() const { return int(basis.size()); }
    MackeyCombination multiply(const MackeyCombination& a, const MackeyCombination& b) const;
};

MackeyAlgebra build_algebra(std::shared_ptr<const GroupContext> ctx);

// ---------------------------------------------------------------------------
// Explicit Mackey functors
// ---------------------------------------------------------------------------

/// A Mackey functor presented by generator maps: restriction and transfer
/// for maximal pairs, conjugation for group generators. All other maps are
/// derived by composition; validate_functor checks the derived system
/// against the defining relations.
struct MackeyFunctor {
    std::shared_ptr<const GroupContext> ctx;
    Field field = Field::Q;
    long p = 0;
    std::string name;
    std::vector<int> dims;  // per lattice index
    std::map<std::pair<int, int>, ExactMatrix> res_max;  // (H, K maximal in H)
    std::map<std::pair<int, int>, ExactMatrix> tr_max;
    std::vector<std::map<int, ExactMatrix>> conj_gen;  // per generator, per subgroup

    ExactMatrix restriction(int h, int k) const;  // M(H) -> M(K), K <= H
    ExactMatrix transfer(int h, int k) const;     // M(K) -> M(H), K <= H
    ExactMatrix conjugation(int g, int h) const;  // M(H) -> M(gHg^-1)
    ExactMatrix eye(int n) const { return ExactMatrix::identity(n, field, p); }
};

MackeyFunctor burnside_functor(std::shared_ptr<const GroupContext> ctx, Field f, long p = 0);
MackeyFunctor fixed_point_functor(std::shared_ptr<const GroupContext> ctx, Field f, long p = 0);

struct FunctorCheckReport {
    bool ok = true;
    int checks = 0;
    std::string first_failure;
};

/// Verifies the six relation families on derived maps: identities on inner
/// conjugations, chain composition, conjugation compatibility, and the
/// Mackey relation. Exhaustive over subgroup chains; conjugators are the
/// generators plus seeded random elements.
FunctorCheckReport validate_functor(const MackeyFunctor& m, std::uint64_t seed = 1,
                                    bool thorough = true);

// ---------------------------------------------------------------------------
// Bar construction and conjugation modules
// ---------------------------------------------------------------------------

/// Quotient data of M(H) by the images of proper transfers.
struct BarData {
    QuotientSpace q;
};

BarData bar_data(const MackeyFunctor& m, int h);

/// A module over the Weyl group of H, with one action matrix per element.
struct ConjugationModule {
    std::shared_ptr<const GroupContext> w;
    int dim = 0;
    std::vector<ExactMatrix> action;  // indexed by Weyl group element

    Rat trace(int welt) const;
};

/// The bar quotient of M at H with its Weyl action.
ConjugationModule bar_module(const MackeyFunctor& m, int h);

/// Bar dimensions at every subgroup, indexed by lattice position.
std::vector<int> bar_dims(const MackeyFunctor& m);

// ---------------------------------------------------------------------------
// Twin, dual and twin-dual functors
// ---------------------------------------------------------------------------

/// The twin functor: Q-fixed points of the direct sum of the bar quotients
/// of all subgroups of Q, with projection restrictions and trace transfers.
MackeyFunctor twin_functor(const MackeyFunctor& m);

/// The dual functor: transposed maps with restriction and transfer swapped.
MackeyFunctor dual_functor(const MackeyFunctor& m);

/// The twin-dual: Q-coinvariants of the direct sum of dual bar quotients.
MackeyFunctor twin_dual_functor(const MackeyFunctor& m);

struct TwinDualDims {
    int coinvariants = 0;  // dim of the twin-dual evaluation
    int fixed = 0;         // dim of the twin evaluation
};

/// Both evaluations at Q, computed independently of the functor plumbing.
TwinDualDims twin_dual_dims(const MackeyFunctor& m, int q);

// ---------------------------------------------------------------------------
// Restriction and multiplicative deflation of functors
// ---------------------------------------------------------------------------

struct RestrictedFunctor {
    MackeyFunctor functor;  // over the subgroup as a group
    int subgroup = -1;      // lattice index in the original group
};

RestrictedFunctor restrict_functor(const MackeyFunctor& m, int k);

struct DeflatedFunctor {
    MackeyFunctor functor;        // over G/N
    std::vector<int> project;     // G element -> G/N element
    std::vector<int> section;     // G/N element -> least preimage
    int kernel = -1;              // lattice index of N
};

/// Multiplicative deflation: evaluation at K/N is M(K) modulo transfers
/// from subgroups of K not containing N.
DeflatedFunctor jef_functor(const MackeyFunctor& m, int n);

/// dim of (Jef Res M)(H/H) computed through the deflation route; equals the
/// bar dimension at H.
int bar_dim_via_jef(const MackeyFunctor& m, int h);

struct Prop1Report {
    bool ok = false;
    int lhs_dim = 0;
    int rhs_dim = 0;
    bool traces_equal = false;
};

/// bar(Res_K M)(H) versus the restriction of bar(M)(H) to N_K(H)/H:
/// dimension and elementwise trace comparison.
Prop1Report check_prop1_restriction(const MackeyFunctor& m, int k, int h);

/// bar(Jef_{G/N} M)(H/N) versus bar(M)(H) under the canonical quotient
/// identification of the Weyl groups.
Prop1Report check_prop1_deflation(const MackeyFunctor& m, int n, int h);

}  // namespace mdade

#endif
