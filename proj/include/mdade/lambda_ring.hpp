#ifndef MDADE_LAMBDA_RING_HPP
#define MDADE_LAMBDA_RING_HPP

#include <utility>
#include <vector>

#include "mdade/burnside.hpp"
#include "mdade/context.hpp"
#include "mdade/exactla.hpp"

namespace mdade {

/// An element of the rationalized ring of subquotients: coordinates over the
/// subquotient classes [Q,N]_P in canonical order.
struct LambdaElement {
    const GroupContext* ctx = nullptr;
    std::vector<Rat> coords;

    bool operator==(const LambdaElement& o) const { return coords == o.coords; }
};

LambdaElement lambda_zero(const GroupContext& ctx);
LambdaElement lambda_basis(const GroupContext& ctx, int sq_class);
LambdaElement lambda_add(const LambdaElement& a, const LambdaElement& b);
LambdaElement lambda_unit(const GroupContext& ctx);  // [P,1]

/// Basis product: [R,N].[S,M] = sum over double cosets x in R\P/S with
/// xMx^-1 <= R and N <= xSx^-1 of [R inter xS, xMx^-1 . N].
LambdaElement lambda_mult(const LambdaElement& a, const LambdaElement& b);

/// Ring embedding QB(P) -> QLambda(P), [P/R] -> [R,1].
LambdaElement burnside_embed(const BurnsideElement& a);

/// Offsets of the per-class blocks of a direct sum over R in s(P).
struct BlockLayout {
    std::vector<int> block_class;  // class index of R, in canonical order
    std::vector<int> offsets;
    std::vector<int> sizes;
    int total = 0;
};

/// Blocks sized by all subgroup classes of W_P(R): the direct sum of the
/// Burnside spaces of the Weyl groups.
BlockLayout ss_layout(const GroupContext& ctx);
/// Blocks sized by the cyclic subgroup classes of W_P(R): the direct sum of
/// the character spaces of the Weyl groups.
BlockLayout grothendieck_layout(const GroupContext& ctx);

/// Element of the direct sum of QB(W_P(R)) over R in s(P).
struct BurnsideSumVector {
    const GroupContext* ctx = nullptr;
    std::vector<BurnsideElement> blocks;
};

/// Element of the direct sum of the character spaces over R in s(P).
struct GrothendieckVector {
    const GroupContext* ctx = nullptr;
    std::vector<RationalCharacterVector> blocks;
};

BurnsideSumVector split_burnside_sum(const GroupContext& ctx, const std::vector<Rat>& stacked);
GrothendieckVector split_grothendieck(const GroupContext& ctx, const std::vector<Rat>& stacked);

/// The matrix of the isomorphism QLambda(P) -> direct sum of QB(W_P(R)).
/// For the column [Q,N] and block R, sums [W_P(R)/(N_{g^-1 Q}(R)/R)] over
/// the double cosets g in Q\P/N_P(R) with N <= gRg^-1 <= Q.
ExactMatrix alpha_matrix(const GroupContext& ctx);

/// The mutually inverse maps between subquotient classes and pairs
/// (R in s(P), subgroup class of W_P(R)), with full round-trip data.
struct SqSsBijection {
    std::vector<std::pair<int, int>> ss;  // (block position, class of W) per SS index
    std::vector<int> forward;             // SQ class -> SS index  (f)
    std::vector<int> backward;            // SS index -> SQ class  (f~)
    bool forward_then_back_identity = false;
    bool back_then_forward_identity = false;
    int sq_count = 0;
    int ss_count = 0;
};

SqSsBijection sq_ss_bijection(const GroupContext& ctx);

/// Mackey linearization via composition: block-diagonal classical
/// linearizations of the Weyl groups applied after alpha.
ExactMatrix lin_mu_via_alpha(const GroupContext& ctx);

/// Mackey linearization computed directly: for the column [R,N] and block Q,
/// one induced-trivial character per R-conjugacy class of subgroups K with
/// N <= K <= R that are conjugate to Q.
ExactMatrix lin_mu_direct(const GroupContext& ctx);

/// Canonical basis of ker(QLin^mu), the rational model of the Mackey-Dade
/// group inside QLambda(P).
ExactMatrix lin_mu_kernel(const GroupContext& ctx);

}  // namespace mdade

#endif
