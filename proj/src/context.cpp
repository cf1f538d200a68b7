#include "mdade/context.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mdade {

int WeylContext::project_parent(int g) const {
    auto it = ngroup.from_parent.find(g);
    if (it == ngroup.from_parent.end())
        throw std::logic_error("project_parent: element outside the normalizer");
    return quo.project[it->second];
}

int WeylContext::section_to_parent(int welt) const {
    return ngroup.to_parent[quo.section[welt]];
}

Subgroup WeylContext::image_subgroup(const Subgroup& s) const {
    std::set<int> img;
    for (int x : s.members) img.insert(project_parent(x));
    return Subgroup{&w->group, std::vector<int>(img.begin(), img.end())};
}

Subgroup WeylContext::preimage_subgroup(const Subgroup& t) const {
    std::vector<int> m;
    for (int e = 0; e < ngroup.group.order; ++e)
        if (t.contains(quo.project[e])) m.push_back(ngroup.to_parent[e]);
    std::sort(m.begin(), m.end());
    return Subgroup{base_group, std::move(m)};
}

const SubquotientClasses& GroupContext::sq() const {
    std::scoped_lock lock(mu_);
    if (!sq_) sq_ = subquotient_classes(lat);
    return *sq_;
}

const WeylContext& GroupContext::weyl(int subgroup_index) const {
    std::scoped_lock lock(mu_);
    auto it = weyl_.find(subgroup_index);
    if (it != weyl_.end()) return *it->second;

    auto wc = std::make_shared<WeylContext>();
    wc->subgroup = subgroup_index;
    wc->normalizer = lat.normalizer_of[subgroup_index];
    wc->base_group = &group;
    const Subgroup& q = lat.subgroups[subgroup_index];
    const Subgroup& n = lat.subgroups[wc->normalizer];
    std::string base = group.name + ":W(" + std::to_string(subgroup_index) + ")";
    wc->ngroup = subgroup_as_group(group, n, base + ":N");
    std::vector<int> kmembers;
    for (int x : q.members) kmembers.push_back(wc->ngroup.from_parent.at(x));
    std::sort(kmembers.begin(), kmembers.end());
    wc->quo = quotient(wc->ngroup.group, Subgroup{&wc->ngroup.group, kmembers}, base);
    wc->w = make_context(wc->quo.cosets, 64);
    weyl_[subgroup_index] = wc;
    return *wc;
}

const LocalClasses& GroupContext::local_classes(int subgroup_index) const {
    std::scoped_lock lock(mu_);
    auto it = local_.find(subgroup_index);
    if (it != local_.end()) return it->second;

    const Subgroup& h = lat.subgroups[subgroup_index];
    LocalClasses lc;
    for (int i = 0; i < int(lat.subgroups.size()); ++i) {
        if (!lat.leq[i][subgroup_index] || lc.class_of.count(i)) continue;
        std::set<int> orbit;
        for (int x : h.members) orbit.insert(lat.conjugate_index(i, x));
        int c = int(lc.reps.size());
        lc.reps.push_back(*orbit.begin());
        for (int j : orbit) lc.class_of[j] = c;
    }
    return local_.emplace(subgroup_index, std::move(lc)).first->second;
}

const ExactMatrix& GroupContext::mark_table_matrix() const {
    std::scoped_lock lock(mu_);
    if (marks_) return *marks_;

    // Row [G/H], column [K]: number of cosets gH with KgH = gH, counted
    // directly from coset representatives.
    const int nc = lat.num_classes();
    ExactMatrix m(nc, nc);
    for (int hc = 0; hc < nc; ++hc) {
        const Subgroup& h = lat.subgroups[lat.rep_of_class(hc)];
        std::vector<int> coset_of(group.order, -1);
        std::vector<int> reps;
        for (int x = 0; x < group.order; ++x) {
            if (coset_of[x] >= 0) continue;
            int c = int(reps.size());
            reps.push_back(x);
            for (int y : h.members) coset_of[group.mul(x, y)] = c;
        }
        for (int kc = 0; kc < nc; ++kc) {
            const Subgroup& k = lat.subgroups[lat.rep_of_class(kc)];
            long fixed = 0;
            for (int r : reps) {
                bool fix = true;
                for (int x : k.members)
                    if (coset_of[group.mul(x, r)] != coset_of[r]) { fix = false; break; }
                if (fix) ++fixed;
            }
            m.set(hc, kc, Rat(fixed));
        }
    }
    marks_ = std::move(m);
    return *marks_;
}

const SubgroupGroup& GroupContext::subgroup_group(int subgroup_index) const {
    subgroup_context(subgroup_index);
    std::scoped_lock lock(mu_);
    return *subctx_.at(subgroup_index).first;
}

std::shared_ptr<const GroupContext> GroupContext::subgroup_context(int subgroup_index) const {
    std::scoped_lock lock(mu_);
    auto it = subctx_.find(subgroup_index);
    if (it != subctx_.end()) return it->second.second;

    auto sg = std::make_shared<SubgroupGroup>(subgroup_as_group(
        group, lat.subgroups[subgroup_index],
        group.name + ":S" + std::to_string(subgroup_index)));
    auto ctx = make_context(sg->group, 64);
    subctx_[subgroup_index] = {sg, ctx};
    return ctx;
}

namespace {

void compute_generators(GroupContext& c) {
    const FiniteGroup& g = c.group;
    Subgroup span = subgroup_closure(g, {});
    for (int x = 0; x < g.order && span.size() < g.order; ++x) {
        if (span.contains(x)) continue;
        std::vector<int> gens = c.generators;
        gens.push_back(x);
        Subgroup bigger = subgroup_closure(g, gens);
        if (bigger.size() > span.size()) {
            c.generators.push_back(x);
            span = bigger;
        }
    }
    // Breadth-first words over the generators (by left multiplication).
    c.gen_word.assign(g.order, {});
    std::vector<bool> seen(g.order, false);
    seen[0] = true;
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int gi = 0; gi < int(c.generators.size()); ++gi) {
                int y = g.mul(c.generators[gi], x);
                if (seen[y]) continue;
                seen[y] = true;
                c.gen_word[y] = c.gen_word[x];
                c.gen_word[y].push_back(gi);  // y = gen * x, word applies right-to-left
                next.push_back(y);
            }
        frontier = std::move(next);
    }
}

}  // namespace

std::shared_ptr<const GroupContext> make_context(FiniteGroup g, int bound) {
    auto c = std::make_shared<GroupContext>();
    c->lat = all_subgroups(g, bound);
    c->group = std::move(g);
    c->lat.group = &c->group;
    for (Subgroup& s : c->lat.subgroups) s.parent = &c->group;
    compute_generators(*c);
    return c;
}

std::shared_ptr<const GroupContext> make_context(const std::string& spec, int bound) {
    return make_context(make_group(spec), bound);
}

}  // namespace mdade
