#include <algorithm>
#include <stdexcept>

#include "mdade/mackey.hpp"

namespace mdade {

namespace {

void add_term(MackeyCombination& c, const MackeyBasisElement& e, long coeff) {
    long& v = c[e];
    v += coeff;
    if (v == 0) c.erase(e);
}

// Rewrites (H, K, g, L) to use the canonical double-coset representative and
// the canonical conjugacy class of L inside H^g inter K. Writing the
// representative as h.g.k moves L to k^-1 L k.
MackeyBasisElement canonical_form(const GroupContext& ctx, int top, int bottom, int g, int sub) {
    const FiniteGroup& grp = ctx.group;
    const Subgroup& h = ctx.lat.subgroups[top];
    const Subgroup& k = ctx.lat.subgroups[bottom];

    int best = -1;
    for (int a : h.members)
        for (int b : k.members) {
            int x = grp.mul(grp.mul(a, g), b);
            if (best < 0 || x < best) best = x;
        }
    int hconj = -1, kconj = -1;
    for (int a : h.members) {
        int need = grp.mul(grp.inv(grp.mul(a, g)), best);  // (a g)^-1 best
        if (k.contains(need)) { hconj = a; kconj = need; break; }
    }
    if (hconj < 0) throw std::logic_error("canonical_form: decomposition not found");

    int l_moved = ctx.lat.conjugate_index(sub, grp.inv(kconj));  // k^-1 L k
    Subgroup hg = conjugate_subgroup(h, grp.inv(best));
    Subgroup meet = intersect(hg, k);
    int meet_idx = ctx.lat.index_of(meet);
    const LocalClasses& lc = ctx.local_classes(meet_idx);
    int l_canon = lc.reps[lc.class_of.at(l_moved)];
    return {top, bottom, best, l_canon};
}

MackeyBasisElement gen_to_basis(const GroupContext& ctx, const MackeyGen& gen) {
    const SubgroupLattice& lat = ctx.lat;
    switch (gen.kind) {
        case MackeyGen::Res:
            if (gen.lower < 0 || gen.upper < 0 || !lat.leq[gen.lower][gen.upper])
                throw std::invalid_argument("normalize_word: ill-formed restriction");
            return canonical_form(ctx, gen.lower, gen.upper, 0, gen.lower);
        case MackeyGen::Tr:
            if (gen.lower < 0 || gen.upper < 0 || !lat.leq[gen.lower][gen.upper])
                throw std::invalid_argument("normalize_word: ill-formed transfer");
            return canonical_form(ctx, gen.upper, gen.lower, 0, gen.lower);
        case MackeyGen::Conj: {
            if (gen.upper < 0 || gen.g < 0 || gen.g >= ctx.order())
                throw std::invalid_argument("normalize_word: ill-formed conjugation");
            int image = lat.conjugate_index(gen.upper, gen.g);
            return canonical_form(ctx, image, gen.upper, gen.g, gen.upper);
        }
    }
    throw std::invalid_argument("normalize_word: unknown generator");
}

}  // namespace

MackeyCombination multiply_basis(const GroupContext& ctx, const MackeyBasisElement& a,
                                 const MackeyBasisElement& b) {
    MackeyCombination out;
    if (a.bottom != b.top) return out;  // mismatched products vanish
    const FiniteGroup& grp = ctx.group;
    const SubgroupLattice& lat = ctx.lat;

    const Subgroup& l1 = lat.subgroups[a.sub];
    int g2l2_idx = lat.conjugate_index(b.sub, b.g);
    const Subgroup& g2l2 = lat.subgroups[g2l2_idx];
    const Subgroup& mid = lat.subgroups[a.bottom];

    // Inner product r^mid_{L1} . t^mid_{g2 L2} expands through the Mackey
    // relation; conjugations then pass outward and chains compose.
    for (int x : double_cosets_in(grp, mid.members, l1, g2l2)) {
        int xg2 = grp.mul(x, b.g);
        Subgroup lp = intersect(conjugate_subgroup(l1, grp.inv(xg2)), lat.subgroups[b.sub]);
        int gp = grp.mul(a.g, xg2);
        MackeyBasisElement term =
            canonical_form(ctx, a.top, b.bottom, gp, lat.index_of(lp));
        add_term(out, term, 1);
    }
    return out;
}

MackeyCombination multiply_combinations(const GroupContext& ctx, const MackeyCombination& a,
                                        const MackeyCombination& b) {
    MackeyCombination out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            for (const auto& [e, c] : multiply_basis(ctx, ea, eb)) add_term(out, e, ca * cb * c);
    return out;
}

MackeyCombination normalize_word(const GroupContext& ctx, const MackeyWord& w) {
    if (w.empty()) throw std::invalid_argument("normalize_word: empty word");
    MackeyCombination acc{{gen_to_basis(ctx, w[0]), 1}};
    for (size_t i = 1; i < w.size(); ++i) {
        MackeyCombination next{{gen_to_basis(ctx, w[i]), 1}};
        acc = multiply_combinations(ctx, acc, next);
    }
    return acc;
}

MackeyCombination normalize_product(const GroupContext& ctx, const MackeyWord& a,
                                    const MackeyWord& b) {
    MackeyWord w = a;
    w.insert(w.end(), b.begin(), b.end());
    return normalize_word(ctx, w);
}

std::vector<MackeyBasisElement> enumerate_mackey_basis(const GroupContext& ctx) {
    const SubgroupLattice& lat = ctx.lat;
    const FiniteGroup& grp = ctx.group;
    std::vector<MackeyBasisElement> basis;
    for (int hi = 0; hi < int(lat.subgroups.size()); ++hi)
        for (int ki = 0; ki < int(lat.subgroups.size()); ++ki) {
            const Subgroup& h = lat.subgroups[hi];
            const Subgroup& k = lat.subgroups[ki];
            for (int g : double_cosets(grp, h, k)) {
                Subgroup meet = intersect(conjugate_subgroup(h, grp.inv(g)), k);
                int meet_idx = lat.index_of(meet);
                for (int l : ctx.local_classes(meet_idx).reps)
                    basis.push_back({hi, ki, g, l});
            }
        }
    std::sort(basis.begin(), basis.end());
    return basis;
}

MackeyAlgebra build_algebra(std::shared_ptr<const GroupContext> ctx) {
    if (ctx->order() > 8)
        throw std::runtime_error("build_algebra: structure constants limited to order <= 8");
    MackeyAlgebra alg;
    alg.ctx = ctx;
    const SubgroupLattice& lat = ctx->lat;

    alg.basis = enumerate_mackey_basis(*ctx);
    for (int i = 0; i < alg.dim(); ++i) alg.index[alg.basis[i]] = i;

    alg.product.assign(alg.dim(), std::vector<std::map<int, long>>(alg.dim()));
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j)
            for (const auto& [e, c] : multiply_basis(*ctx, alg.basis[i], alg.basis[j])) {
                auto it = alg.index.find(e);
                if (it == alg.index.end())
                    throw std::logic_error("build_algebra: product left the basis");
                alg.product[i][j][it->second] = c;
            }

    for (int hi = 0; hi < int(lat.subgroups.size()); ++hi)
        add_term(alg.identity, canonical_form(*ctx, hi, hi, 0, hi), 1);
    return alg;
}

MackeyCombination MackeyAlgebra::multiply(const MackeyCombination& a,
                                          const MackeyCombination& b) const {
    MackeyCombination out;
    for (const auto& [ea, ca] : a) {
        int i = index.at(ea);
        for (const auto& [eb, cb] : b) {
            int j = index.at(eb);
            for (const auto& [k, c] : product[i][j]) add_term(out, basis[k], ca * cb * c);
        }
    }
    return out;
}

}  // namespace mdade
