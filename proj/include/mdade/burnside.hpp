#ifndef MDADE_BURNSIDE_HPP
#define MDADE_BURNSIDE_HPP

#include <memory>
#include <vector>

#include "mdade/context.hpp"
#include "mdade/exactla.hpp"

namespace mdade {

/// An element of QB(G): rational coordinates over the conjugacy classes of
/// subgroups, coefficient of [G/H] at the class of H.
struct BurnsideElement {
    const GroupContext* ctx = nullptr;
    std::vector<Rat> coords;

    bool operator==(const BurnsideElement& o) const { return coords == o.coords; }
};

BurnsideElement burnside_zero(const GroupContext& ctx);
BurnsideElement burnside_basis(const GroupContext& ctx, int class_index);
BurnsideElement burnside_add(const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement burnside_scale(const BurnsideElement& a, const Rat& c);

/// The table of marks. Rows are the transitive sets [G/H], columns the
/// subgroup classes [K], both in canonical class order; entry = |(G/H)^K|.
/// Lower triangular with diagonal |N_G(H):H|.
struct MarkTable {
    const GroupContext* ctx = nullptr;
    ExactMatrix m;

    const Rat& at(int set_class, int subgroup_class) const {
        return m.get(set_class, subgroup_class);
    }
};

MarkTable mark_table(const GroupContext& ctx);

/// Mark vector of an element: fixed-point counts indexed by all subgroup
/// classes. The mark homomorphism turns the double-coset product into the
/// pointwise product.
std::vector<Rat> marks_of(const BurnsideElement& a);

/// [G/H].[G/K] = sum over double cosets HxK of [G/(H inter xKx^-1)],
/// extended bilinearly.
BurnsideElement burnside_mult(const BurnsideElement& a, const BurnsideElement& b);

/// Marks restricted to the cyclic subgroup classes; the rational model of a
/// virtual permutation character.
struct RationalCharacterVector {
    const GroupContext* ctx = nullptr;
    std::vector<Rat> values;  // indexed by cyclic_classes() positions
};

RationalCharacterVector character_of(const BurnsideElement& a);

/// Matrix of the linearization map QB(G) -> characters: column [G/H] is the
/// mark vector of G/H on cyclic subgroup classes.
ExactMatrix lin_matrix(const GroupContext& ctx);

/// Canonical basis of ker(QLin): virtual sets all of whose marks on cyclic
/// subgroups vanish.
ExactMatrix lin_kernel(const GroupContext& ctx);

}  // namespace mdade

#endif
