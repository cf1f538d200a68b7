#ifndef MDADE_LATTICE_HPP
#define MDADE_LATTICE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdade/group.hpp"

namespace mdade {

/// A subgroup, stored as the sorted set of its element indices.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> members;  // sorted ascending; always contains 0

    int size() const { return int(members.size()); }
    bool contains(int e) const;
    bool contains_all(const Subgroup& other) const;
    bool operator==(const Subgroup& o) const { return members == o.members; }
};

Subgroup subgroup_closure(const FiniteGroup& g, std::vector<int> generators);
Subgroup conjugate_subgroup(const Subgroup& h, int g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_normal_in(const Subgroup& n, const Subgroup& q);  // n <= q assumed
bool is_cyclic(const Subgroup& h);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);

/// A conjugating element g with gHg^-1 = K, if one exists.
std::optional<int> conjugating_element(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

/// Representatives (least element index) of the double cosets HxK, sweeping
/// the whole group.
std::vector<int> double_cosets(const FiniteGroup& g, const Subgroup& h, const Subgroup& k);

/// Same, but the orbits partition only the given ambient subgroup, which
/// must contain both H and K.
std::vector<int> double_cosets_in(const FiniteGroup& g, const std::vector<int>& ambient,
                                  const Subgroup& h, const Subgroup& k);

/// Complete subgroup lattice with conjugacy classes, normalizers and
/// inclusion data. Subgroups are listed in the canonical order: size
/// increasing, then lexicographic on member sets. Class representatives are
/// the lexicographically least member sets of their classes.
struct SubgroupLattice {
    const FiniteGroup* group = nullptr;
    std::vector<Subgroup> subgroups;
    std::vector<std::vector<int>> classes;  // sorted subgroup indices; [0] is the representative
    std::vector<int> class_of;              // subgroup index -> class index
    std::vector<int> normalizer_of;         // subgroup index -> subgroup index
    std::vector<std::vector<bool>> leq;     // leq[a][b] : subgroup a <= subgroup b
    std::vector<std::vector<int>> maximal_subgroups_of;
    std::vector<bool> cyclic;

    int index_of(const std::vector<int>& members) const;  // -1 if absent
    int index_of(const Subgroup& h) const { return index_of(h.members); }
    int conjugate_index(int subgroup, int g) const;
    int trivial_index() const { return 0; }
    int full_index() const { return int(subgroups.size()) - 1; }
    int num_classes() const { return int(classes.size()); }
    int rep_of_class(int c) const { return classes[c][0]; }

    /// Class indices whose representative is cyclic / non-cyclic, in order.
    std::vector<int> cyclic_classes() const;
    std::vector<int> noncyclic_classes() const;
};

/// Enumerates all subgroups: all cyclic subgroups first, then iterated
/// pairwise joins until a fixed point. Refuses groups larger than the bound
/// (hard limit 64).
SubgroupLattice all_subgroups(const FiniteGroup& g, int bound = 32);

/// A subgroup relabelled as a group of its own. The relabelling is monotone
/// (members in ascending order), so nested constructions stay aligned.
struct SubgroupGroup {
    FiniteGroup group;
    std::vector<int> to_parent;
    std::map<int, int> from_parent;
};

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, const std::string& name);

/// A quotient by a normal subgroup. Cosets are ordered by least element, so
/// the identity coset is index 0; section picks the least representative.
struct QuotientGroup {
    const FiniteGroup* parent = nullptr;
    Subgroup kernel;
    FiniteGroup cosets;
    std::vector<int> project;  // parent element -> coset index
    std::vector<int> section;  // coset index -> least parent element
};

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n, const std::string& name);

/// A pair (big, small) of lattice indices with small normal in big.
struct Subquotient {
    int big = -1;
    int small = -1;
    bool operator==(const Subquotient& o) const { return big == o.big && small == o.small; }
};

/// All subquotients partitioned into conjugacy orbits. Classes are sorted
/// by (|Q|, |N|, lattice index of Q, lattice index of N) of the
/// representative, which is the least pair of its orbit.
struct SubquotientClasses {
    std::vector<std::vector<Subquotient>> classes;
    std::vector<Subquotient> reps;
    std::map<std::pair<int, int>, int> index;  // (big, small) lattice indices -> class

    int num_classes() const { return int(classes.size()); }
    int class_of(int big, int small) const;
};

SubquotientClasses subquotient_classes(const SubgroupLattice& lat);

}  // namespace mdade

#endif
