#include "mdade/lambda_ring.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mdade {

LambdaElement lambda_zero(const GroupContext& ctx) {
    return {&ctx, std::vector<Rat>(ctx.sq().num_classes(), Rat(0))};
}

LambdaElement lambda_basis(const GroupContext& ctx, int sq_class) {
    LambdaElement e = lambda_zero(ctx);
    e.coords.at(sq_class) = 1;
    return e;
}

LambdaElement lambda_add(const LambdaElement& a, const LambdaElement& b) {
    if (a.ctx != b.ctx) throw std::invalid_argument("lambda_add: group mismatch");
    LambdaElement c = a;
    for (size_t i = 0; i < c.coords.size(); ++i) c.coords[i] += b.coords[i];
    return c;
}

LambdaElement lambda_unit(const GroupContext& ctx) {
    int cls = ctx.sq().class_of(ctx.lat.full_index(), ctx.lat.trivial_index());
    return lambda_basis(ctx, cls);
}

namespace {

// Product of two subgroups that normalize each other, as a subgroup.
Subgroup subgroup_product(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
    std::set<int> m;
    for (int x : a.members)
        for (int y : b.members) m.insert(g.mul(x, y));
    return Subgroup{&g, std::vector<int>(m.begin(), m.end())};
}

}  // namespace

LambdaElement lambda_mult(const LambdaElement& a, const LambdaElement& b) {
    if (a.ctx != b.ctx) throw std::invalid_argument("lambda_mult: group mismatch");
    const GroupContext& ctx = *a.ctx;
    const SubgroupLattice& lat = ctx.lat;
    const SubquotientClasses& sq = ctx.sq();
    const FiniteGroup& g = ctx.group;

    LambdaElement out = lambda_zero(ctx);
    for (int ca = 0; ca < sq.num_classes(); ++ca) {
        if (a.coords[ca] == 0) continue;
        const Subgroup& r = lat.subgroups[sq.reps[ca].big];
        const Subgroup& n = lat.subgroups[sq.reps[ca].small];
        for (int cb = 0; cb < sq.num_classes(); ++cb) {
            if (b.coords[cb] == 0) continue;
            const Subgroup& s = lat.subgroups[sq.reps[cb].big];
            const Subgroup& m = lat.subgroups[sq.reps[cb].small];
            Rat coeff = a.coords[ca] * b.coords[cb];
            for (int x : double_cosets(g, r, s)) {
                Subgroup xs = conjugate_subgroup(s, x);
                Subgroup xm = conjugate_subgroup(m, x);
                // xM.N <= R inter xS, equivalently xM <= R and N <= xS; both
                // factors are then normal in the intersection, so the
                // product below is a subgroup.
                if (!r.contains_all(xm) || !xs.contains_all(n)) continue;
                Subgroup big = intersect(r, xs);
                Subgroup small = subgroup_product(g, xm, n);
                out.coords[sq.class_of(lat.index_of(big), lat.index_of(small))] += coeff;
            }
        }
    }
    return out;
}

LambdaElement burnside_embed(const BurnsideElement& a) {
    const GroupContext& ctx = *a.ctx;
    LambdaElement out = lambda_zero(ctx);
    for (int c = 0; c < ctx.lat.num_classes(); ++c) {
        if (a.coords[c] == 0) continue;
        int cls = ctx.sq().class_of(ctx.lat.rep_of_class(c), ctx.lat.trivial_index());
        out.coords[cls] += a.coords[c];
    }
    return out;
}

namespace {

BlockLayout layout_by(const GroupContext& ctx, bool cyclic_only) {
    BlockLayout l;
    for (int c = 0; c < ctx.lat.num_classes(); ++c) {
        const WeylContext& wc = ctx.weyl(ctx.lat.rep_of_class(c));
        int sz = cyclic_only ? int(wc.w->lat.cyclic_classes().size())
                             : wc.w->lat.num_classes();
        l.block_class.push_back(c);
        l.offsets.push_back(l.total);
        l.sizes.push_back(sz);
        l.total += sz;
    }
    return l;
}

}  // namespace

BlockLayout ss_layout(const GroupContext& ctx) { return layout_by(ctx, false); }
BlockLayout grothendieck_layout(const GroupContext& ctx) { return layout_by(ctx, true); }

BurnsideSumVector split_burnside_sum(const GroupContext& ctx, const std::vector<Rat>& stacked) {
    BlockLayout l = ss_layout(ctx);
    if (int(stacked.size()) != l.total)
        throw std::invalid_argument("split_burnside_sum: wrong length");
    BurnsideSumVector v{&ctx, {}};
    for (size_t b = 0; b < l.block_class.size(); ++b) {
        const WeylContext& wc = ctx.weyl(ctx.lat.rep_of_class(l.block_class[b]));
        BurnsideElement e = burnside_zero(*wc.w);
        for (int i = 0; i < l.sizes[b]; ++i) e.coords[i] = stacked[l.offsets[b] + i];
        v.blocks.push_back(std::move(e));
    }
    return v;
}

GrothendieckVector split_grothendieck(const GroupContext& ctx, const std::vector<Rat>& stacked) {
    BlockLayout l = grothendieck_layout(ctx);
    if (int(stacked.size()) != l.total)
        throw std::invalid_argument("split_grothendieck: wrong length");
    GrothendieckVector v{&ctx, {}};
    for (size_t b = 0; b < l.block_class.size(); ++b) {
        const WeylContext& wc = ctx.weyl(ctx.lat.rep_of_class(l.block_class[b]));
        RationalCharacterVector r{wc.w.get(), std::vector<Rat>(size_t(l.sizes[b]), Rat(0))};
        for (int i = 0; i < l.sizes[b]; ++i) r.values[i] = stacked[l.offsets[b] + i];
        v.blocks.push_back(std::move(r));
    }
    return v;
}

ExactMatrix alpha_matrix(const GroupContext& ctx) {
    const SubgroupLattice& lat = ctx.lat;
    const SubquotientClasses& sq = ctx.sq();
    const FiniteGroup& g = ctx.group;
    BlockLayout l = ss_layout(ctx);

    ExactMatrix m(l.total, sq.num_classes());
    for (int col = 0; col < sq.num_classes(); ++col) {
        const Subgroup& q = lat.subgroups[sq.reps[col].big];
        const Subgroup& n = lat.subgroups[sq.reps[col].small];
        for (size_t b = 0; b < l.block_class.size(); ++b) {
            int r_idx = lat.rep_of_class(l.block_class[b]);
            const Subgroup& r = lat.subgroups[r_idx];
            const WeylContext& wc = ctx.weyl(r_idx);
            const Subgroup& nr = lat.subgroups[wc.normalizer];
            for (int x : double_cosets(g, q, nr)) {
                Subgroup gr = conjugate_subgroup(r, x);
                if (!q.contains_all(gr) || !gr.contains_all(n)) continue;
                // Point stabilizer N_{g^-1 Q}(R)/R inside the Weyl group.
                Subgroup qg = conjugate_subgroup(q, g.inv(x));
                Subgroup stab = intersect(qg, nr);
                Subgroup img = wc.image_subgroup(stab);
                int wcls = wc.w->lat.class_of[wc.w->lat.index_of(img)];
                m.add_to(l.offsets[b] + wcls, col, Rat(1));
            }
        }
    }
    return m;
}

SqSsBijection sq_ss_bijection(const GroupContext& ctx) {
    const SubgroupLattice& lat = ctx.lat;
    const SubquotientClasses& sq = ctx.sq();
    const FiniteGroup& g = ctx.group;
    BlockLayout l = ss_layout(ctx);

    SqSsBijection bij;
    bij.sq_count = sq.num_classes();
    for (size_t b = 0; b < l.block_class.size(); ++b)
        for (int wcls = 0; wcls < l.sizes[b]; ++wcls)
            bij.ss.push_back({int(b), wcls});
    bij.ss_count = int(bij.ss.size());

    // f: [Q,N] -> the W_P({N})-class of xQ/xN, where xN is the class
    // representative of N.
    bij.forward.assign(sq.num_classes(), -1);
    for (int c = 0; c < sq.num_classes(); ++c) {
        const Subgroup& q = lat.subgroups[sq.reps[c].big];
        const Subgroup& n = lat.subgroups[sq.reps[c].small];
        int ncls = lat.class_of[sq.reps[c].small];
        int nrep = lat.rep_of_class(ncls);
        auto x = conjugating_element(g, n, lat.subgroups[nrep]);
        if (!x) throw std::logic_error("sq_ss_bijection: representative not conjugate");
        Subgroup t = conjugate_subgroup(q, *x);
        const WeylContext& wc = ctx.weyl(nrep);
        Subgroup img = wc.image_subgroup(t);
        int wcls = wc.w->lat.class_of[wc.w->lat.index_of(img)];
        bij.forward[c] = l.offsets[ncls] + wcls;
    }

    // f~: [T]_R -> [T, R] where T is the preimage of the W-class rep.
    bij.backward.assign(bij.ss.size(), -1);
    for (size_t s = 0; s < bij.ss.size(); ++s) {
        int b = bij.ss[s].first, wcls = bij.ss[s].second;
        int r_idx = lat.rep_of_class(l.block_class[b]);
        const WeylContext& wc = ctx.weyl(r_idx);
        const Subgroup& trep = wc.w->lat.subgroups[wc.w->lat.rep_of_class(wcls)];
        Subgroup t = wc.preimage_subgroup(trep);
        bij.backward[s] = sq.class_of(lat.index_of(t), r_idx);
    }

    bij.forward_then_back_identity = true;
    for (int c = 0; c < sq.num_classes(); ++c)
        if (bij.backward[bij.forward[c]] != c) bij.forward_then_back_identity = false;
    bij.back_then_forward_identity = true;
    for (size_t s = 0; s < bij.ss.size(); ++s)
        if (bij.forward[bij.backward[s]] != int(s)) bij.back_then_forward_identity = false;
    return bij;
}

ExactMatrix lin_mu_via_alpha(const GroupContext& ctx) {
    ExactMatrix a = alpha_matrix(ctx);
    BlockLayout ssl = ss_layout(ctx);
    BlockLayout gl = grothendieck_layout(ctx);
    ExactMatrix blockdiag(gl.total, ssl.total);
    for (size_t b = 0; b < ssl.block_class.size(); ++b) {
        const WeylContext& wc = ctx.weyl(ctx.lat.rep_of_class(ssl.block_class[b]));
        ExactMatrix lin = lin_matrix(*wc.w);
        for (int i = 0; i < lin.rows(); ++i)
            for (int j = 0; j < lin.cols(); ++j)
                blockdiag.set(gl.offsets[b] + i, ssl.offsets[b] + j, lin.get(i, j));
    }
    return multiply(blockdiag, a);
}

ExactMatrix lin_mu_direct(const GroupContext& ctx) {
    const SubgroupLattice& lat = ctx.lat;
    const SubquotientClasses& sq = ctx.sq();
    const FiniteGroup& g = ctx.group;
    BlockLayout gl = grothendieck_layout(ctx);

    ExactMatrix m(gl.total, sq.num_classes());
    for (int col = 0; col < sq.num_classes(); ++col) {
        int r_idx = sq.reps[col].big, n_idx = sq.reps[col].small;
        const Subgroup& r = lat.subgroups[r_idx];
        for (size_t b = 0; b < gl.block_class.size(); ++b) {
            int q_cls = gl.block_class[b];
            int q_idx = lat.rep_of_class(q_cls);
            const Subgroup& q = lat.subgroups[q_idx];
            const WeylContext& wc = ctx.weyl(q_idx);
            const Subgroup& npq = lat.subgroups[wc.normalizer];
            ExactMatrix wlin = lin_matrix(*wc.w);

            // Subgroups K with N <= K <= R conjugate to Q, one summand per
            // R-conjugacy class of such K.
            std::set<int> seen;
            for (int k = 0; k < int(lat.subgroups.size()); ++k) {
                if (lat.class_of[k] != q_cls) continue;
                if (!lat.leq[n_idx][k] || !lat.leq[k][r_idx]) continue;
                if (seen.count(k)) continue;
                for (int x : r.members) seen.insert(lat.conjugate_index(k, x));

                auto cg = conjugating_element(g, q, lat.subgroups[k]);
                if (!cg) throw std::logic_error("lin_mu_direct: class member not conjugate");
                // Induced trivial character from N_{g^-1 R}(Q)/Q up to W_P(Q):
                // the permutation character on the cosets of that subgroup.
                Subgroup rg = conjugate_subgroup(r, g.inv(*cg));
                Subgroup stab = intersect(rg, npq);
                Subgroup img = wc.image_subgroup(stab);
                int wcls = wc.w->lat.class_of[wc.w->lat.index_of(img)];
                for (int i = 0; i < wlin.rows(); ++i)
                    m.add_to(gl.offsets[b] + i, col, wlin.get(i, wcls));
            }
        }
    }
    return m;
}

ExactMatrix lin_mu_kernel(const GroupContext& ctx) { return nullspace(lin_mu_via_alpha(ctx)); }

}  // namespace mdade
