#include "mdade/burnside.hpp"

#include <stdexcept>

namespace mdade {

BurnsideElement burnside_zero(const GroupContext& ctx) {
    return {&ctx, std::vector<Rat>(ctx.lat.num_classes(), Rat(0))};
}

BurnsideElement burnside_basis(const GroupContext& ctx, int class_index) {
    BurnsideElement e = burnside_zero(ctx);
    e.coords.at(class_index) = 1;
    return e;
}

BurnsideElement burnside_add(const BurnsideElement& a, const BurnsideElement& b) {
    if (a.ctx != b.ctx) throw std::invalid_argument("burnside_add: group mismatch");
    BurnsideElement c = a;
    for (size_t i = 0; i < c.coords.size(); ++i) c.coords[i] += b.coords[i];
    return c;
}

BurnsideElement burnside_scale(const BurnsideElement& a, const Rat& s) {
    BurnsideElement c = a;
    for (Rat& v : c.coords) v *= s;
    return c;
}

MarkTable mark_table(const GroupContext& ctx) { return {&ctx, ctx.mark_table_matrix()}; }

std::vector<Rat> marks_of(const BurnsideElement& a) {
    const ExactMatrix& m = a.ctx->mark_table_matrix();
    const int nc = m.rows();
    std::vector<Rat> out(nc, Rat(0));
    for (int h = 0; h < nc; ++h) {
        if (a.coords[h] == 0) continue;
        for (int k = 0; k < nc; ++k) out[k] += a.coords[h] * m.get(h, k);
    }
    return out;
}

BurnsideElement burnside_mult(const BurnsideElement& a, const BurnsideElement& b) {
    if (a.ctx != b.ctx) throw std::invalid_argument("burnside_mult: group mismatch");
    const GroupContext& ctx = *a.ctx;
    const SubgroupLattice& lat = ctx.lat;
    BurnsideElement out = burnside_zero(ctx);
    for (int hc = 0; hc < lat.num_classes(); ++hc) {
        if (a.coords[hc] == 0) continue;
        const Subgroup& h = lat.subgroups[lat.rep_of_class(hc)];
        for (int kc = 0; kc < lat.num_classes(); ++kc) {
            if (b.coords[kc] == 0) continue;
            const Subgroup& k = lat.subgroups[lat.rep_of_class(kc)];
            Rat coeff = a.coords[hc] * b.coords[kc];
            for (int x : double_cosets(ctx.group, h, k)) {
                Subgroup meet = intersect(h, conjugate_subgroup(k, x));
                out.coords[lat.class_of[lat.index_of(meet)]] += coeff;
            }
        }
    }
    return out;
}

RationalCharacterVector character_of(const BurnsideElement& a) {
    std::vector<Rat> all = marks_of(a);
    RationalCharacterVector v{a.ctx, {}};
    for (int c : a.ctx->lat.cyclic_classes()) v.values.push_back(all[c]);
    return v;
}

ExactMatrix lin_matrix(const GroupContext& ctx) {
    const ExactMatrix& m = ctx.mark_table_matrix();
    std::vector<int> cyc = ctx.lat.cyclic_classes();
    ExactMatrix lin(int(cyc.size()), ctx.lat.num_classes());
    for (int r = 0; r < int(cyc.size()); ++r)
        for (int h = 0; h < ctx.lat.num_classes(); ++h)
            lin.set(r, h, m.get(h, cyc[r]));
    return lin;
}

ExactMatrix lin_kernel(const GroupContext& ctx) { return nullspace(lin_matrix(ctx)); }

}  // namespace mdade
