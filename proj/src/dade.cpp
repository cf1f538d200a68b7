#include "mdade/dade.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mdade {

int dade_dim(const GroupContext& w) { return int(w.lat.noncyclic_classes().size()); }

namespace {

int nc_position(const GroupContext& w, int class_index) {
    std::vector<int> nc = w.lat.noncyclic_classes();
    for (int i = 0; i < int(nc.size()); ++i)
        if (nc[i] == class_index) return i;
    throw std::logic_error("nc_position: class is cyclic");
}

}  // namespace

DadeRestriction dade_restrict(const GroupContext& w, int v_subgroup_index) {
    const SubgroupLattice& lat = w.lat;
    const Subgroup& v = lat.subgroups[v_subgroup_index];
    std::shared_ptr<const GroupContext> vctx = w.subgroup_context(v_subgroup_index);
    const SubgroupGroup& vg = w.subgroup_group(v_subgroup_index);

    std::vector<int> src_nc = lat.noncyclic_classes();
    std::vector<int> dst_nc = vctx->lat.noncyclic_classes();
    ExactMatrix m(int(dst_nc.size()), int(src_nc.size()));

    for (int col = 0; col < int(src_nc.size()); ++col) {
        const Subgroup& r = lat.subgroups[lat.rep_of_class(src_nc[col])];
        for (int x : double_cosets(w.group, v, r)) {
            Subgroup xr = conjugate_subgroup(r, x);
            if (!v.contains_all(xr)) continue;
            std::vector<int> relabeled;
            relabeled.reserve(xr.members.size());
            for (int e : xr.members) relabeled.push_back(vg.from_parent.at(e));
            std::sort(relabeled.begin(), relabeled.end());
            int idx = vctx->lat.index_of(relabeled);
            int row = nc_position(*vctx, vctx->lat.class_of[idx]);
            m.add_to(row, col, Rat(1));
        }
    }
    return {vctx, std::move(m)};
}

ExactMatrix dade_transport(const GroupContext& a, const GroupContext& b,
                           const std::vector<int>& element_map) {
    if (int(element_map.size()) != a.order())
        throw std::invalid_argument("dade_transport: element map has wrong length");
    std::vector<bool> hit(b.order(), false);
    for (int x : element_map) {
        if (x < 0 || x >= b.order() || hit[x])
            throw std::invalid_argument("dade_transport: element map is not a bijection");
        hit[x] = true;
    }
    if (a.order() != b.order() || element_map[0] != 0)
        throw std::invalid_argument("dade_transport: not an isomorphism");
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y)
            if (element_map[a.group.mul(x, y)] != b.group.mul(element_map[x], element_map[y]))
                throw std::invalid_argument("dade_transport: not a homomorphism");

    std::vector<int> a_nc = a.lat.noncyclic_classes();
    std::vector<int> b_nc = b.lat.noncyclic_classes();
    if (a_nc.size() != b_nc.size())
        throw std::invalid_argument("dade_transport: class mismatch");
    ExactMatrix m(int(b_nc.size()), int(a_nc.size()));
    std::vector<bool> used(b_nc.size(), false);
    for (int col = 0; col < int(a_nc.size()); ++col) {
        const Subgroup& r = a.lat.subgroups[a.lat.rep_of_class(a_nc[col])];
        std::vector<int> img;
        img.reserve(r.members.size());
        for (int e : r.members) img.push_back(element_map[e]);
        std::sort(img.begin(), img.end());
        int idx = b.lat.index_of(img);
        if (idx < 0) throw std::invalid_argument("dade_transport: image is not a subgroup");
        int row = nc_position(b, b.lat.class_of[idx]);
        if (used[row]) throw std::invalid_argument("dade_transport: class mismatch");
        used[row] = true;
        m.set(row, col, Rat(1));
    }
    return m;
}

MackeyDadeModel mackey_dade_model(std::shared_ptr<const GroupContext> ctx) {
    MackeyDadeModel model;
    model.ctx = std::move(ctx);
    for (int c = 0; c < model.ctx->lat.num_classes(); ++c) {
        MackeyDadeModel::Block b;
        b.class_index = c;
        b.rep_subgroup = model.ctx->lat.rep_of_class(c);
        b.nc_classes = model.ctx->weyl(b.rep_subgroup).w->lat.noncyclic_classes();
        b.offset = model.dim;
        model.dim += int(b.nc_classes.size());
        model.blocks.push_back(std::move(b));
    }
    return model;
}

bool subquotient_cyclic(const GroupContext& ctx, int sq_class) {
    const Subquotient& rep = ctx.sq().reps[sq_class];
    const SubgroupGroup& qg = ctx.subgroup_group(rep.big);
    std::vector<int> kernel;
    for (int e : ctx.lat.subgroups[rep.small].members) kernel.push_back(qg.from_parent.at(e));
    std::sort(kernel.begin(), kernel.end());
    QuotientGroup quo = quotient(qg.group, Subgroup{&qg.group, kernel}, "tmp");
    for (int x = 0; x < quo.cosets.order; ++x)
        if (quo.cosets.element_order(x) == quo.cosets.order) return true;
    return false;
}

int dmu_dim(const GroupContext& ctx) {
    MackeyDadeModel model = mackey_dade_model(ctx.shared_from_this());
    int noncyclic_sq = 0;
    for (int c = 0; c < ctx.sq().num_classes(); ++c)
        if (!subquotient_cyclic(ctx, c)) ++noncyclic_sq;
    if (model.dim != noncyclic_sq)
        throw std::logic_error("dmu_dim: block dimensions disagree with the subquotient count");
    return model.dim;
}

namespace {

// The subquotient R/N packaged as a group with a projection from R.
struct SubquotientGroup {
    SubgroupGroup rgroup;
    QuotientGroup quo;
    std::shared_ptr<const GroupContext> ctx;

    int project_parent(int p) const { return quo.project[rgroup.from_parent.at(p)]; }
};

SubquotientGroup build_subquotient_group(const GroupContext& base, int big, int small) {
    SubquotientGroup s;
    s.rgroup = subgroup_as_group(base.group, base.lat.subgroups[big],
                                 base.name() + ":R" + std::to_string(big));
    std::vector<int> kernel;
    for (int e : base.lat.subgroups[small].members) kernel.push_back(s.rgroup.from_parent.at(e));
    std::sort(kernel.begin(), kernel.end());
    s.quo = quotient(s.rgroup.group, Subgroup{&s.rgroup.group, kernel},
                     base.name() + ":R" + std::to_string(big) + "/N" + std::to_string(small));
    s.ctx = make_context(s.quo.cosets, 64);
    return s;
}

}  // namespace

JefRes jef_res_map(const MackeyDadeModel& model, int sq_class) {
    const GroupContext& ctx = *model.ctx;
    const SubgroupLattice& lat = ctx.lat;
    const Subquotient& rep = ctx.sq().reps[sq_class];
    const Subgroup& r = lat.subgroups[rep.big];

    SubquotientGroup sqg = build_subquotient_group(ctx, rep.big, rep.small);
    JefRes out{mackey_dade_model(sqg.ctx), ExactMatrix()};
    out.m = ExactMatrix(out.target.dim, model.dim);

    for (const MackeyDadeModel::Block& tb : out.target.blocks) {
        if (tb.nc_classes.empty()) continue;
        // S = preimage in the base group of the block representative Q'.
        const Subgroup& qprime = out.target.ctx->lat.subgroups[tb.rep_subgroup];
        std::vector<int> smembers;
        for (int p : r.members)
            if (qprime.contains(sqg.project_parent(p))) smembers.push_back(p);
        std::sort(smembers.begin(), smembers.end());
        int s_idx = lat.index_of(smembers);
        if (s_idx < 0) throw std::logic_error("jef_res_map: preimage missing from lattice");
        const Subgroup& s = lat.subgroups[s_idx];

        int src_class = lat.class_of[s_idx];
        const MackeyDadeModel::Block* sb = nullptr;
        for (const auto& b : model.blocks)
            if (b.class_index == src_class) sb = &b;
        if (!sb) throw std::logic_error("jef_res_map: missing source block");
        if (sb->nc_classes.empty()) continue;

        // Transport QD(W_P(Q)) -> QD(W_P(S)) along conjugation by g, gQg^-1 = S.
        int q_idx = sb->rep_subgroup;
        auto g = conjugating_element(ctx.group, lat.subgroups[q_idx], s);
        if (!g) throw std::logic_error("jef_res_map: representative not conjugate");
        const WeylContext& wq = ctx.weyl(q_idx);
        const WeylContext& ws = ctx.weyl(s_idx);
        std::vector<int> iso(wq.w->order());
        for (int welt = 0; welt < wq.w->order(); ++welt) {
            int n = wq.section_to_parent(welt);
            iso[welt] = ws.project_parent(ctx.group.conj(*g, n));
        }
        ExactMatrix t1 = dade_transport(*wq.w, *ws.w, iso);

        // Restrict from W_P(S) to V = N_R(S)/S.
        std::vector<int> nrs;
        for (int x : r.members)
            if (conjugate_subgroup(s, x).members == s.members) nrs.push_back(x);
        Subgroup v = ws.image_subgroup(Subgroup{&ctx.group, nrs});
        int v_idx = ws.w->lat.index_of(v);
        DadeRestriction res = dade_restrict(*ws.w, v_idx);

        // Identify V with the Weyl group of Q' inside R/N.
        const SubgroupGroup& vg = ws.w->subgroup_group(v_idx);
        const WeylContext& wqp = out.target.ctx->weyl(tb.rep_subgroup);
        std::vector<int> psi(res.v->order());
        for (int velt = 0; velt < res.v->order(); ++velt) {
            int welt = vg.to_parent[velt];
            int n = ws.section_to_parent(welt);  // lies in N_R(S); see below
            psi[velt] = wqp.project_parent(sqg.project_parent(n));
        }
        // The section is safe: the whole coset nS sits inside N_R(S)
        // because S <= R and some representative lies in N_R(S).
        ExactMatrix t3 = dade_transport(*res.v, *wqp.w, psi);

        ExactMatrix block = multiply(t3, multiply(res.m, t1));
        for (int i = 0; i < block.rows(); ++i)
            for (int j = 0; j < block.cols(); ++j)
                out.m.set(tb.offset + i, sb->offset + j, block.get(i, j));
    }
    return out;
}

ExactMatrix underline_dmu(const GroupContext& ctx) {
    MackeyDadeModel model = mackey_dade_model(ctx.shared_from_this());
    if (model.dim == 0) return ExactMatrix(0, 0);

    int top = ctx.sq().class_of(ctx.lat.full_index(), ctx.lat.trivial_index());
    ExactMatrix stacked(0, model.dim);
    for (int c = 0; c < ctx.sq().num_classes(); ++c) {
        if (c == top) continue;
        JefRes jr = jef_res_map(model, c);
        if (jr.m.rows() > 0) stacked = vstack(stacked, jr.m);
    }
    return nullspace(stacked);
}

}  // namespace mdade
