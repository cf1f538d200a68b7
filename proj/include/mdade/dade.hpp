#ifndef MDADE_DADE_HPP
#define MDADE_DADE_HPP

#include <memory>
#include <vector>

#include "mdade/context.hpp"
#include "mdade/exactla.hpp"

namespace mdade {

/// An element of the rational Dade group QD(W) in the relative-syzygy
/// basis: one coordinate per W-conjugacy class of non-cyclic subgroups R,
/// the basis symbol of class [R] being Ten_R Delta(R). For cyclic W the
/// space is zero.
struct DadeVector {
    const GroupContext* weyl = nullptr;
    std::vector<Rat> coords;
};

/// Torsion-free rank of QD(W): the number of conjugacy classes of
/// non-cyclic subgroups.
int dade_dim(const GroupContext& w);

struct DadeRestriction {
    std::shared_ptr<const GroupContext> v;  // the subgroup as a group
    ExactMatrix m;                          // QD(W) -> QD(V) in the Ten Delta bases
};

/// Restriction along V <= W by the Mackey formula: Ten_R Delta(R) maps to
/// the sum of Ten_{xR} Delta(xR) over double cosets x in V\W/R with
/// xRx^-1 <= V.
DadeRestriction dade_restrict(const GroupContext& w, int v_subgroup_index);

/// Basis permutation induced by a group isomorphism, given as an element
/// map from `a` to `b`. Throws if the map is not an isomorphism or does not
/// carry non-cyclic classes bijectively onto non-cyclic classes.
ExactMatrix dade_transport(const GroupContext& a, const GroupContext& b,
                           const std::vector<int>& element_map);

/// The direct-sum model of QD_mu(P): one QD(W_P(Q)) block per conjugacy
/// class of subgroups Q, in canonical class order.
struct MackeyDadeModel {
    std::shared_ptr<const GroupContext> ctx;
    struct Block {
        int class_index = -1;          // class of Q in the base lattice
        int rep_subgroup = -1;         // lattice index of the representative Q
        std::vector<int> nc_classes;   // non-cyclic classes of W_P(Q)
        int offset = 0;
    };
    std::vector<Block> blocks;
    int dim = 0;
};

MackeyDadeModel mackey_dade_model(std::shared_ptr<const GroupContext> ctx);

/// An element of the model: per-block Dade vectors.
struct MackeyDadeVector {
    const MackeyDadeModel* model = nullptr;
    std::vector<Rat> coords;  // stacked per block
};

/// Whether the subquotient class representative Q/N is a cyclic group.
bool subquotient_cyclic(const GroupContext& ctx, int sq_class);

/// dim QD_mu(P) = sum over blocks of dade_dim(W_P(Q)). Throws logic_error
/// if this disagrees with the count of non-cyclic subquotient classes.
int dmu_dim(const GroupContext& ctx);

struct JefRes {
    MackeyDadeModel target;  // model of QD_mu(R/N)
    ExactMatrix m;
};

/// The deflation-restriction map QD_mu(P) -> QD_mu(R/N) for a subquotient
/// class: per target block S/N, transport of the source block of the
/// P-class of S followed by restriction from W_P(S) to N_R(S)/S.
JefRes jef_res_map(const MackeyDadeModel& model, int sq_class);

/// Canonical basis of the intersection of the kernels of all proper
/// deflation-restriction maps: columns over the model coordinates.
ExactMatrix underline_dmu(const GroupContext& ctx);

}  // namespace mdade

#endif
