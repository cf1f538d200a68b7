#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mdade/mackey.hpp"

namespace mdade {

namespace {

// Maximal chain H = c0 > c1 > ... > K, one maximal step at a time.
std::vector<int> chain_down(const SubgroupLattice& lat, int h, int k) {
    std::vector<int> chain{h};
    int cur = h;
    while (cur != k) {
        int next = -1;
        for (int m : lat.maximal_subgroups_of[cur])
            if (lat.leq[k][m]) { next = m; break; }
        if (next < 0) throw std::logic_error("chain_down: no descending chain");
        chain.push_back(next);
        cur = next;
    }
    return chain;
}

std::vector<int> subgroup_generators(const FiniteGroup& g, const Subgroup& q) {
    std::vector<int> gens;
    Subgroup span = subgroup_closure(g, {});
    for (int x : q.members) {
        if (span.contains(x)) continue;
        gens.push_back(x);
        span = subgroup_closure(g, gens);
        if (span.size() == q.size()) break;
    }
    return gens;
}

std::vector<int> left_coset_reps(const FiniteGroup& g, const Subgroup& q, const Subgroup& r) {
    std::vector<bool> seen(g.order, false);
    std::vector<int> reps;
    for (int x : q.members) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (int y : r.members) seen[g.mul(x, y)] = true;  // coset xR
    }
    return reps;
}

std::vector<int> right_coset_reps(const FiniteGroup& g, const Subgroup& r, const Subgroup& q) {
    std::vector<bool> seen(g.order, false);
    std::vector<int> reps;
    for (int x : q.members) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (int y : r.members) seen[g.mul(y, x)] = true;  // coset Rx
    }
    return reps;
}

}  // namespace

ExactMatrix MackeyFunctor::restriction(int h, int k) const {
    const SubgroupLattice& lat = ctx->lat;
    if (!lat.leq[k][h]) throw std::invalid_argument("restriction: K is not below H");
    std::vector<int> chain = chain_down(lat, h, k);
    ExactMatrix m = eye(dims[h]);
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        m = multiply(res_max.at({chain[i], chain[i + 1]}), m);
    return m;
}

ExactMatrix MackeyFunctor::transfer(int h, int k) const {
    const SubgroupLattice& lat = ctx->lat;
    if (!lat.leq[k][h]) throw std::invalid_argument("transfer: K is not below H");
    std::vector<int> chain = chain_down(lat, h, k);
    ExactMatrix m = eye(dims[k]);
    for (size_t i = chain.size(); i-- > 1;)
        m = multiply(tr_max.at({chain[i - 1], chain[i]}), m);
    return m;
}

ExactMatrix MackeyFunctor::conjugation(int g, int h) const {
    ExactMatrix m = eye(dims[h]);
    int cur = h;
    for (int gi : ctx->gen_word[g]) {
        m = multiply(conj_gen[gi].at(cur), m);
        cur = ctx->lat.conjugate_index(cur, ctx->generators[gi]);
    }
    return m;
}

// ---------------------------------------------------------------------------
// Concrete functors
// ---------------------------------------------------------------------------

MackeyFunctor burnside_functor(std::shared_ptr<const GroupContext> ctx, Field f, long p) {
    const SubgroupLattice& lat = ctx->lat;
    const FiniteGroup& grp = ctx->group;
    MackeyFunctor m;
    m.ctx = ctx;
    m.field = f;
    m.p = p;
    m.name = "burnside";
    const int ns = int(lat.subgroups.size());
    m.dims.resize(ns);
    for (int h = 0; h < ns; ++h) m.dims[h] = int(ctx->local_classes(h).reps.size());

    for (int h = 0; h < ns; ++h) {
        const LocalClasses& lch = ctx->local_classes(h);
        for (int k : lat.maximal_subgroups_of[h]) {
            const LocalClasses& lck = ctx->local_classes(k);
            // restriction of H-sets: [H/A] -> sum over K\H/A of [K/(K inter xA)]
            ExactMatrix res(m.dims[k], m.dims[h], f, p);
            for (int a = 0; a < m.dims[h]; ++a) {
                const Subgroup& asub = lat.subgroups[lch.reps[a]];
                for (int x : double_cosets_in(grp, lat.subgroups[h].members,
                                              lat.subgroups[k], asub)) {
                    Subgroup meet = intersect(lat.subgroups[k], conjugate_subgroup(asub, x));
                    res.add_to(lck.class_of.at(lat.index_of(meet)), a, Rat(1));
                }
            }
            m.res_max[{h, k}] = std::move(res);
            // induction: [K/B] -> [H/B]
            ExactMatrix tr(m.dims[h], m.dims[k], f, p);
            for (int b = 0; b < m.dims[k]; ++b)
                tr.add_to(lch.class_of.at(lck.reps[b]), b, Rat(1));
            m.tr_max[{h, k}] = std::move(tr);
        }
    }
    m.conj_gen.resize(ctx->generators.size());
    for (size_t gi = 0; gi < ctx->generators.size(); ++gi) {
        int g = ctx->generators[gi];
        for (int h = 0; h < ns; ++h) {
            int gh = lat.conjugate_index(h, g);
            const LocalClasses& src = ctx->local_classes(h);
            const LocalClasses& dst = ctx->local_classes(gh);
            ExactMatrix c(m.dims[gh], m.dims[h], f, p);
            for (int a = 0; a < m.dims[h]; ++a)
                c.add_to(dst.class_of.at(lat.conjugate_index(src.reps[a], g)), a, Rat(1));
            m.conj_gen[gi][h] = std::move(c);
        }
    }
    return m;
}

MackeyFunctor fixed_point_functor(std::shared_ptr<const GroupContext> ctx, Field f, long p) {
    const SubgroupLattice& lat = ctx->lat;
    MackeyFunctor m;
    m.ctx = ctx;
    m.field = f;
    m.p = p;
    m.name = "fixed-point";
    const int ns = int(lat.subgroups.size());
    m.dims.assign(ns, 1);
    for (int h = 0; h < ns; ++h)
        for (int k : lat.maximal_subgroups_of[h]) {
            ExactMatrix res(1, 1, f, p), tr(1, 1, f, p);
            res.set(0, 0, Rat(1));
            tr.set(0, 0, Rat(lat.subgroups[h].size() / lat.subgroups[k].size()));
            m.res_max[{h, k}] = std::move(res);
            m.tr_max[{h, k}] = std::move(tr);
        }
    m.conj_gen.resize(ctx->generators.size());
    for (size_t gi = 0; gi < ctx->generators.size(); ++gi)
        for (int h = 0; h < ns; ++h)
            m.conj_gen[gi][h] = ExactMatrix::identity(1, f, p);
    return m;
}

// ---------------------------------------------------------------------------
// Validation against the defining relations
// ---------------------------------------------------------------------------

FunctorCheckReport validate_functor(const MackeyFunctor& m, std::uint64_t seed, bool thorough) {
    const GroupContext& ctx = *m.ctx;
    const SubgroupLattice& lat = ctx.lat;
    const FiniteGroup& grp = ctx.group;
    const int ns = int(lat.subgroups.size());
    FunctorCheckReport rep;

    auto fail = [&rep](const std::string& what) {
        if (rep.ok) rep.first_failure = what;
        rep.ok = false;
    };
    auto expect = [&](bool cond, const char* what, int a, int b) {
        ++rep.checks;
        if (!cond) {
            std::ostringstream os;
            os << what << " (" << a << "," << b << ")";
            fail(os.str());
        }
    };

    // (1) inner conjugations act as the identity
    for (int h = 0; h < ns; ++h)
        for (int x : lat.subgroups[h].members)
            expect(m.conjugation(x, h) == m.eye(m.dims[h]), "inner conjugation", h, x);

    // (2) chain composition for derived restrictions and transfers
    for (int h = 0; h < ns; ++h)
        for (int l = 0; l < ns; ++l) {
            if (l == h || !lat.leq[l][h]) continue;
            for (int k = 0; k < ns; ++k) {
                if (k == l || !lat.leq[k][l]) continue;
                expect(multiply(m.restriction(l, k), m.restriction(h, l)) == m.restriction(h, k),
                       "restriction chain", h, k);
                expect(multiply(m.transfer(h, l), m.transfer(l, k)) == m.transfer(h, k),
                       "transfer chain", h, k);
            }
        }

    // (3) conjugation commutes with restriction and transfer
    std::vector<int> conjugators = ctx.generators;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 3; ++i) conjugators.push_back(int(rng() % grp.order));
    for (int g : conjugators)
        for (int h = 0; h < ns; ++h) {
            int gh = lat.conjugate_index(h, g);
            for (int k = 0; k < ns; ++k) {
                if (!lat.leq[k][h]) continue;
                int gk = lat.conjugate_index(k, g);
                expect(multiply(m.conjugation(g, k), m.restriction(h, k)) ==
                           multiply(m.restriction(gh, gk), m.conjugation(g, h)),
                       "conjugation/restriction", g, h);
                expect(multiply(m.conjugation(g, h), m.transfer(h, k)) ==
                           multiply(m.transfer(gh, gk), m.conjugation(g, k)),
                       "conjugation/transfer", g, h);
            }
        }

    // (4) the Mackey relation; conjugates of checked tops follow from (3)
    std::vector<int> tops;
    if (thorough)
        for (int h = 0; h < ns; ++h) tops.push_back(h);
    else
        for (int c = 0; c < lat.num_classes(); ++c) tops.push_back(lat.rep_of_class(c));
    for (int h : tops)
        for (int j = 0; j < ns; ++j) {
            if (!lat.leq[j][h]) continue;
            for (int k = 0; k < ns; ++k) {
                if (!lat.leq[k][h]) continue;
                ExactMatrix lhs = multiply(m.restriction(h, j), m.transfer(h, k));
                ExactMatrix rhs(m.dims[j], m.dims[k], m.field, m.p);
                for (int x : double_cosets_in(grp, lat.subgroups[h].members,
                                              lat.subgroups[j], lat.subgroups[k])) {
                    Subgroup a = intersect(lat.subgroups[j],
                                           conjugate_subgroup(lat.subgroups[k], x));
                    Subgroup b = conjugate_subgroup(a, grp.inv(x));
                    int ai = lat.index_of(a.members), bi = lat.index_of(b.members);
                    rhs = add(rhs, multiply(m.transfer(j, ai),
                                            multiply(m.conjugation(x, bi),
                                                     m.restriction(k, bi))));
                }
                expect(lhs == rhs, "Mackey relation", h, j * 100 + k);
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Bar construction
// ---------------------------------------------------------------------------

BarData bar_data(const MackeyFunctor& m, int h) {
    const SubgroupLattice& lat = m.ctx->lat;
    ExactMatrix span(m.dims[h], 0, m.field, m.p);
    for (int l : lat.maximal_subgroups_of[h]) span = hstack(span, m.transfer(h, l));
    return {quotient_by_columns(span)};
}

ConjugationModule bar_module(const MackeyFunctor& m, int h) {
    BarData bd = bar_data(m, h);
    const WeylContext& wc = m.ctx->weyl(h);
    ConjugationModule cm;
    cm.w = wc.w;
    cm.dim = bd.q.dim;
    for (int w = 0; w < wc.w->order(); ++w) {
        int g = wc.section_to_parent(w);
        cm.action.push_back(multiply(bd.q.proj, multiply(m.conjugation(g, h), bd.q.sect)));
    }
    return cm;
}

Rat ConjugationModule::trace(int welt) const {
    Rat t(0);
    for (int i = 0; i < dim; ++i) t += action[welt].get(i, i);
    return t;
}

std::vector<int> bar_dims(const MackeyFunctor& m) {
    std::vector<int> out;
    for (int h = 0; h < int(m.ctx->lat.subgroups.size()); ++h)
        out.push_back(bar_data(m, h).q.dim);
    return out;
}

// ---------------------------------------------------------------------------
// Twin, dual and twin-dual
// ---------------------------------------------------------------------------

namespace {

// Shared scaffolding for the twin and twin-dual constructions: the block
// space V(Q) = sum of bar quotients over subgroups of Q, with the
// conjugation shuffle; `dualize` replaces each block by its dual.
struct BlockSpaces {
    const MackeyFunctor* m = nullptr;
    bool dualize = false;
    std::vector<QuotientSpace> bar;        // per subgroup
    std::vector<std::vector<int>> subs;    // per Q: subgroups of Q
    std::vector<std::vector<int>> offset;  // per Q: block offsets
    std::vector<int> vdim;                 // per Q

    int block_pos(int q, int k) const {
        const std::vector<int>& s = subs[q];
        auto it = std::lower_bound(s.begin(), s.end(), k);
        if (it == s.end() || *it != k) throw std::logic_error("block_pos: missing summand");
        return int(it - s.begin());
    }
    int bdim(int k) const { return bar[k].dim; }

    // bar conjugation M~(K) -> M~(gK), dualized when requested
    ExactMatrix bar_conj(int g, int k) const {
        const SubgroupLattice& lat = m->ctx->lat;
        int gk = lat.conjugate_index(k, g);
        if (!dualize)
            return multiply(bar[gk].proj, multiply(m->conjugation(g, k), bar[k].sect));
        int ginv = m->ctx->group.inv(g);
        ExactMatrix back =
            multiply(bar[k].proj, multiply(m->conjugation(ginv, gk), bar[gk].sect));
        return back.transpose();
    }

    // V(Q) -> V(gQg^-1)
    ExactMatrix shuffle(int g, int q) const {
        const SubgroupLattice& lat = m->ctx->lat;
        int gq = lat.conjugate_index(q, g);
        ExactMatrix s(vdim[gq], vdim[q], m->field, m->p);
        for (size_t i = 0; i < subs[q].size(); ++i) {
            int k = subs[q][i];
            int gk = lat.conjugate_index(k, g);
            ExactMatrix blk = bar_conj(g, k);
            int ro = offset[gq][block_pos(gq, gk)], co = offset[q][i];
            for (int r = 0; r < blk.rows(); ++r)
                for (int c = 0; c < blk.cols(); ++c) s.set(ro + r, co + c, blk.get(r, c));
        }
        return s;
    }

    // select the summands K <= R: V(Q) -> V(R)
    ExactMatrix project_to(int q, int r) const {
        ExactMatrix p(vdim[r], vdim[q], m->field, m->p);
        for (size_t i = 0; i < subs[r].size(); ++i) {
            int k = subs[r][i];
            int co = offset[q][block_pos(q, k)], ro = offset[r][i];
            for (int d = 0; d < bdim(k); ++d) p.set(ro + d, co + d, Rat(1));
        }
        return p;
    }

    ExactMatrix extend_from(int r, int q) const { return project_to(q, r).transpose(); }
};

BlockSpaces make_block_spaces(const MackeyFunctor& m, bool dualize) {
    const SubgroupLattice& lat = m.ctx->lat;
    const int ns = int(lat.subgroups.size());
    BlockSpaces bs;
    bs.m = &m;
    bs.dualize = dualize;
    for (int k = 0; k < ns; ++k) bs.bar.push_back(bar_data(m, k).q);
    bs.subs.resize(ns);
    bs.offset.resize(ns);
    bs.vdim.assign(ns, 0);
    for (int q = 0; q < ns; ++q)
        for (int k = 0; k < ns; ++k) {
            if (!lat.leq[k][q]) continue;
            bs.subs[q].push_back(k);
            bs.offset[q].push_back(bs.vdim[q]);
            bs.vdim[q] += bs.bar[k].dim;
        }
    return bs;
}

ExactMatrix coords_in(const ExactMatrix& basis, const ExactMatrix& vectors, const char* who) {
    auto x = solve_matrix(basis, vectors);
    if (!x) throw std::logic_error(std::string(who) + ": vector outside the span");
    return *x;
}

}  // namespace

MackeyFunctor twin_functor(const MackeyFunctor& m) {
    const GroupContext& ctx = *m.ctx;
    const SubgroupLattice& lat = ctx.lat;
    const FiniteGroup& grp = ctx.group;
    const int ns = int(lat.subgroups.size());
    BlockSpaces bs = make_block_spaces(m, false);

    MackeyFunctor t;
    t.ctx = m.ctx;
    t.field = m.field;
    t.p = m.p;
    t.name = "twin(" + m.name + ")";
    t.dims.assign(ns, 0);

    // Fixed points of the Q-shuffle, as canonical column bases.
    std::vector<ExactMatrix> basis(ns);
    for (int q = 0; q < ns; ++q) {
        ExactMatrix stack(0, bs.vdim[q], m.field, m.p);
        for (int g : subgroup_generators(grp, lat.subgroups[q]))
            stack = vstack(stack, subtract(bs.shuffle(g, q),
                                           ExactMatrix::identity(bs.vdim[q], m.field, m.p)));
        basis[q] = nullspace(stack);
        t.dims[q] = basis[q].cols();
    }

    for (int q = 0; q < ns; ++q)
        for (int r : lat.maximal_subgroups_of[q]) {
            t.res_max[{q, r}] =
                coords_in(basis[r], multiply(bs.project_to(q, r), basis[q]), "twin res");
            ExactMatrix total(bs.vdim[q], basis[r].cols(), m.field, m.p);
            for (int x : left_coset_reps(grp, lat.subgroups[q], lat.subgroups[r]))
                total = add(total, multiply(bs.shuffle(x, q),
                                            multiply(bs.extend_from(r, q), basis[r])));
            t.tr_max[{q, r}] = coords_in(basis[q], total, "twin tr");
        }

    t.conj_gen.resize(ctx.generators.size());
    for (size_t gi = 0; gi < ctx.generators.size(); ++gi) {
        int g = ctx.generators[gi];
        for (int q = 0; q < ns; ++q) {
            int gq = lat.conjugate_index(q, g);
            t.conj_gen[gi][q] =
                coords_in(basis[gq], multiply(bs.shuffle(g, q), basis[q]), "twin conj");
        }
    }
    return t;
}

MackeyFunctor dual_functor(const MackeyFunctor& m) {
    const GroupContext& ctx = *m.ctx;
    MackeyFunctor d;
    d.ctx = m.ctx;
    d.field = m.field;
    d.p = m.p;
    d.name = "dual(" + m.name + ")";
    d.dims = m.dims;
    for (const auto& [hk, mat] : m.tr_max) d.res_max[hk] = mat.transpose();
    for (const auto& [hk, mat] : m.res_max) d.tr_max[hk] = mat.transpose();
    d.conj_gen.resize(ctx.generators.size());
    for (size_t gi = 0; gi < ctx.generators.size(); ++gi) {
        int g = ctx.generators[gi];
        int ginv = ctx.group.inv(g);
        for (int h = 0; h < int(ctx.lat.subgroups.size()); ++h) {
            int gh = ctx.lat.conjugate_index(h, g);
            d.conj_gen[gi][h] = m.conjugation(ginv, gh).transpose();
        }
    }
    return d;
}

MackeyFunctor twin_dual_functor(const MackeyFunctor& m) {
    const GroupContext& ctx = *m.ctx;
    const SubgroupLattice& lat = ctx.lat;
    const FiniteGroup& grp = ctx.group;
    const int ns = int(lat.subgroups.size());
    BlockSpaces bs = make_block_spaces(m, true);

    MackeyFunctor t;
    t.ctx = m.ctx;
    t.field = m.field;
    t.p = m.p;
    t.name = "twin-dual(" + m.name + ")";
    t.dims.assign(ns, 0);

    // Coinvariants: quotient by the span of (shuffle(q) - 1).
    std::vector<QuotientSpace> coinv(ns);
    for (int q = 0; q < ns; ++q) {
        ExactMatrix span(bs.vdim[q], 0, m.field, m.p);
        for (int g : subgroup_generators(grp, lat.subgroups[q]))
            span = hstack(span, subtract(bs.shuffle(g, q),
                                         ExactMatrix::identity(bs.vdim[q], m.field, m.p)));
        coinv[q] = quotient_by_columns(span);
        t.dims[q] = coinv[q].dim;
    }

    for (int q = 0; q < ns; ++q)
        for (int r : lat.maximal_subgroups_of[q]) {
            // transfer: induced by extension of summands
            t.tr_max[{q, r}] = multiply(
                coinv[q].proj, multiply(bs.extend_from(r, q), coinv[r].sect));
            // restriction: sum over right cosets Rx of project-after-shuffle
            ExactMatrix total(bs.vdim[q], coinv[q].dim, m.field, m.p);
            for (int x : right_coset_reps(grp, lat.subgroups[r], lat.subgroups[q]))
                total = add(total, multiply(bs.shuffle(x, q), coinv[q].sect));
            t.res_max[{q, r}] = multiply(coinv[r].proj, multiply(bs.project_to(q, r), total));
        }

    t.conj_gen.resize(ctx.generators.size());
    for (size_t gi = 0; gi < ctx.generators.size(); ++gi) {
        int g = ctx.generators[gi];
        for (int q = 0; q < ns; ++q) {
            int gq = lat.conjugate_index(q, g);
            t.conj_gen[gi][q] =
                multiply(coinv[gq].proj, multiply(bs.shuffle(g, q), coinv[q].sect));
        }
    }
    return t;
}

TwinDualDims twin_dual_dims(const MackeyFunctor& m, int q) {
    const GroupContext& ctx = *m.ctx;
    std::vector<int> gens = subgroup_generators(ctx.group, ctx.lat.subgroups[q]);

    BlockSpaces dual = make_block_spaces(m, true);
    ExactMatrix span(dual.vdim[q], 0, m.field, m.p);
    for (int g : gens)
        span = hstack(span, subtract(dual.shuffle(g, q),
                                     ExactMatrix::identity(dual.vdim[q], m.field, m.p)));
    TwinDualDims out;
    out.coinvariants = quotient_by_columns(span).dim;

    BlockSpaces plain = make_block_spaces(m, false);
    ExactMatrix stack(0, plain.vdim[q], m.field, m.p);
    for (int g : gens)
        stack = vstack(stack, subtract(plain.shuffle(g, q),
                                       ExactMatrix::identity(plain.vdim[q], m.field, m.p)));
    out.fixed = nullspace(stack).cols();
    return out;
}

// ---------------------------------------------------------------------------
// Restriction and multiplicative deflation of functors
// ---------------------------------------------------------------------------

RestrictedFunctor restrict_functor(const MackeyFunctor& m, int k) {
    const GroupContext& base = *m.ctx;
    const SubgroupGroup& sg = base.subgroup_group(k);
    std::shared_ptr<const GroupContext> sub = base.subgroup_context(k);
    const int ns = int(sub->lat.subgroups.size());

    // new lattice index -> parent lattice index
    std::vector<int> parent_of(ns);
    for (int i = 0; i < ns; ++i) {
        std::vector<int> members;
        for (int e : sub->lat.subgroups[i].members) members.push_back(sg.to_parent[e]);
        std::sort(members.begin(), members.end());
        parent_of[i] = base.lat.index_of(members);
        if (parent_of[i] < 0) throw std::logic_error("restrict_functor: missing subgroup");
    }

    MackeyFunctor f;
    f.ctx = sub;
    f.field = m.field;
    f.p = m.p;
    f.name = m.name + "|" + std::to_string(k);
    f.dims.resize(ns);
    for (int i = 0; i < ns; ++i) f.dims[i] = m.dims[parent_of[i]];
    for (int h = 0; h < ns; ++h)
        for (int l : sub->lat.maximal_subgroups_of[h]) {
            f.res_max[{h, l}] = m.restriction(parent_of[h], parent_of[l]);
            f.tr_max[{h, l}] = m.transfer(parent_of[h], parent_of[l]);
        }
    f.conj_gen.resize(sub->generators.size());
    for (size_t gi = 0; gi < sub->generators.size(); ++gi) {
        int g = sg.to_parent[sub->generators[gi]];
        for (int h = 0; h < ns; ++h) f.conj_gen[gi][h] = m.conjugation(g, parent_of[h]);
    }
    return {std::move(f), k};
}

DeflatedFunctor jef_functor(const MackeyFunctor& m, int n) {
    const GroupContext& base = *m.ctx;
    const SubgroupLattice& lat = base.lat;
    const FiniteGroup& grp = base.group;

    QuotientGroup quo = quotient(grp, lat.subgroups[n], base.name() + "/N" + std::to_string(n));
    std::shared_ptr<const GroupContext> qctx = make_context(quo.cosets, 64);
    const int ns = int(qctx->lat.subgroups.size());

    // preimages and the quotient data of each evaluation
    std::vector<int> parent_of(ns);
    std::vector<QuotientSpace> qs(ns);
    for (int i = 0; i < ns; ++i) {
        std::vector<int> members;
        for (int x = 0; x < grp.order; ++x)
            if (qctx->lat.subgroups[i].contains(quo.project[x])) members.push_back(x);
        parent_of[i] = lat.index_of(members);
        if (parent_of[i] < 0) throw std::logic_error("jef_functor: preimage not a subgroup");
        int h = parent_of[i];
        ExactMatrix span(m.dims[h], 0, m.field, m.p);
        for (int l = 0; l < int(lat.subgroups.size()); ++l)
            if (lat.leq[l][h] && !lat.leq[n][l]) span = hstack(span, m.transfer(h, l));
        qs[i] = quotient_by_columns(span);
    }

    MackeyFunctor f;
    f.ctx = qctx;
    f.field = m.field;
    f.p = m.p;
    f.name = "jef(" + m.name + ")";
    f.dims.resize(ns);
    for (int i = 0; i < ns; ++i) f.dims[i] = qs[i].dim;
    for (int h = 0; h < ns; ++h)
        for (int k : qctx->lat.maximal_subgroups_of[h]) {
            f.res_max[{h, k}] = multiply(
                qs[k].proj, multiply(m.restriction(parent_of[h], parent_of[k]), qs[h].sect));
            f.tr_max[{h, k}] = multiply(
                qs[h].proj, multiply(m.transfer(parent_of[h], parent_of[k]), qs[k].sect));
        }
    f.conj_gen.resize(qctx->generators.size());
    for (size_t gi = 0; gi < qctx->generators.size(); ++gi) {
        int lift = quo.section[qctx->generators[gi]];
        for (int h = 0; h < ns; ++h) {
            int gh = qctx->lat.conjugate_index(h, qctx->generators[gi]);
            f.conj_gen[gi][h] = multiply(
                qs[gh].proj, multiply(m.conjugation(lift, parent_of[h]), qs[h].sect));
        }
    }
    return {std::move(f), quo.project, quo.section, n};
}

int bar_dim_via_jef(const MackeyFunctor& m, int h) {
    const GroupContext& base = *m.ctx;
    int norm = base.lat.normalizer_of[h];
    RestrictedFunctor rf = restrict_functor(m, norm);
    const SubgroupGroup& sg = base.subgroup_group(norm);
    std::vector<int> members;
    for (int e : base.lat.subgroups[h].members) members.push_back(sg.from_parent.at(e));
    std::sort(members.begin(), members.end());
    int hsub = rf.functor.ctx->lat.index_of(members);
    DeflatedFunctor df = jef_functor(rf.functor, hsub);
    return df.functor.dims[df.functor.ctx->lat.trivial_index()];
}

Prop1Report check_prop1_restriction(const MackeyFunctor& m, int k, int h) {
    const GroupContext& base = *m.ctx;
    const SubgroupGroup& sg = base.subgroup_group(k);
    RestrictedFunctor rf = restrict_functor(m, k);

    std::vector<int> members;
    for (int e : base.lat.subgroups[h].members) members.push_back(sg.from_parent.at(e));
    std::sort(members.begin(), members.end());
    int hsub = rf.functor.ctx->lat.index_of(members);

    ConjugationModule lhs = bar_module(rf.functor, hsub);  // over N_K(H)/H
    ConjugationModule rhs = bar_module(m, h);              // over N_G(H)/H

    const WeylContext& wl = rf.functor.ctx->weyl(hsub);
    const WeylContext& wr = base.weyl(h);
    Prop1Report rep;
    rep.lhs_dim = lhs.dim;
    rep.rhs_dim = rhs.dim;
    rep.traces_equal = true;
    for (int w = 0; w < wl.w->order(); ++w) {
        int parent = sg.to_parent[wl.section_to_parent(w)];
        int image = wr.project_parent(parent);
        if (lhs.trace(w) != rhs.trace(image)) rep.traces_equal = false;
    }
    rep.ok = rep.lhs_dim == rep.rhs_dim && rep.traces_equal;
    return rep;
}

Prop1Report check_prop1_deflation(const MackeyFunctor& m, int n, int h) {
    const GroupContext& base = *m.ctx;
    DeflatedFunctor df = jef_functor(m, n);

    std::set<int> img;
    for (int e : base.lat.subgroups[h].members) img.insert(df.project[e]);
    int himg = df.functor.ctx->lat.index_of(std::vector<int>(img.begin(), img.end()));

    ConjugationModule lhs = bar_module(df.functor, himg);  // over the quotient Weyl group
    ConjugationModule rhs = bar_module(m, h);              // over N_G(H)/H

    const WeylContext& wl = df.functor.ctx->weyl(himg);
    const WeylContext& wr = base.weyl(h);
    Prop1Report rep;
    rep.lhs_dim = lhs.dim;
    rep.rhs_dim = rhs.dim;
    rep.traces_equal = true;
    for (int w = 0; w < wl.w->order(); ++w) {
        int lift = df.section[wl.section_to_parent(w)];
        int image = wr.project_parent(lift);
        if (lhs.trace(w) != rhs.trace(image)) rep.traces_equal = false;
    }
    rep.ok = rep.lhs_dim == rep.rhs_dim && rep.traces_equal;
    return rep;
}

}  // namespace mdade
