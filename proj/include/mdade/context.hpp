#ifndef MDADE_CONTEXT_HPP
#define MDADE_CONTEXT_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mdade/exactla.hpp"
#include "mdade/group.hpp"
#include "mdade/lattice.hpp"

namespace mdade {

struct GroupContext;

/// N_G(Q)/Q packaged with everything needed to move data back and forth:
/// the normalizer as a group of its own, the quotient, and a full context
/// for the Weyl group.
struct WeylContext {
    int subgroup = -1;     // Q, lattice index in the base context
    int normalizer = -1;   // N_G(Q), lattice index
    const FiniteGroup* base_group = nullptr;
    SubgroupGroup ngroup;  // N_G(Q) relabelled
    QuotientGroup quo;     // ngroup.group / image of Q
    std::shared_ptr<const GroupContext> w;  // context for quo.cosets

    /// Parent element (must lie in N_G(Q)) -> Weyl group element.
    int project_parent(int g) const;
    /// Weyl group element -> a parent-element representative.
    int section_to_parent(int welt) const;
    /// Subgroup of the base group with Q <= S <= N_G(Q) -> subgroup of W.
    Subgroup image_subgroup(const Subgroup& s) const;
    /// Subgroup of W -> its full preimage in the base group.
    Subgroup preimage_subgroup(const Subgroup& t) const;
};

/// Per-subgroup conjugacy data: the subgroups of H up to H-conjugacy.
struct LocalClasses {
    std::vector<int> reps;          // lattice indices, canonical order
    std::map<int, int> class_of;    // lattice index of any L <= H -> local class
};

/// A group together with its lattice and lazily built derived data. All
/// lazily cached pieces are guarded by a mutex, so shared read access from
/// several threads stays safe.
struct GroupContext : std::enable_shared_from_this<GroupContext> {
    FiniteGroup group;
    SubgroupLattice lat;
    std::vector<int> generators;             // a small generating set
    std::vector<std::vector<int>> gen_word;  // element -> generator indices composing to it

    const SubquotientClasses& sq() const;
    const WeylContext& weyl(int subgroup_index) const;
    const LocalClasses& local_classes(int subgroup_index) const;
    const ExactMatrix& mark_table_matrix() const;
    /// Context for a subgroup viewed as a group of its own.
    std::shared_ptr<const GroupContext> subgroup_context(int subgroup_index) const;
    const SubgroupGroup& subgroup_group(int subgroup_index) const;

    int order() const { return group.order; }
    std::string name() const { return group.name; }

private:
    mutable std::mutex mu_;
    mutable std::optional<SubquotientClasses> sq_;
    mutable std::map<int, std::shared_ptr<WeylContext>> weyl_;
    mutable std::map<int, LocalClasses> local_;
    mutable std::optional<ExactMatrix> marks_;
    mutable std::map<int, std::pair<std::shared_ptr<SubgroupGroup>,
                                    std::shared_ptr<const GroupContext>>> subctx_;

    friend std::shared_ptr<const GroupContext> make_context(FiniteGroup g, int bound);
};

std::shared_ptr<const GroupContext> make_context(FiniteGroup g, int bound = 64);
std::shared_ptr<const GroupContext> make_context(const std::string& spec, int bound = 32);

}  // namespace mdade

#endif
