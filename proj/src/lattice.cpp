#include "mdade/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mdade {

bool Subgroup::contains(int e) const {
    return std::binary_search(members.begin(), members.end(), e);
}

bool Subgroup::contains_all(const Subgroup& other) const {
    return std::includes(members.begin(), members.end(), other.members.begin(),
                         other.members.end());
}

Subgroup subgroup_closure(const FiniteGroup& g, std::vector<int> generators) {
    std::set<int> s{0};
    for (int x : generators) s.insert(x);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur)
                if (s.insert(g.mul(a, b)).second) grew = true;
        for (int a : cur)
            if (s.insert(g.inv(a)).second) grew = true;
    }
    return Subgroup{&g, std::vector<int>(s.begin(), s.end())};
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
    const FiniteGroup& grp = *h.parent;
    std::vector<int> m;
    m.reserve(h.members.size());
    for (int x : h.members) m.push_back(grp.conj(g, x));
    std::sort(m.begin(), m.end());
    return Subgroup{h.parent, std::move(m)};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    std::vector<int> m;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                          b.members.end(), std::back_inserter(m));
    return Subgroup{a.parent, std::move(m)};
}

bool is_normal_in(const Subgroup& n, const Subgroup& q) {
    for (int g : q.members)
        if (conjugate_subgroup(n, g).members != n.members) return false;
    return true;
}

bool is_cyclic(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    for (int x : h.members)
        if (g.element_order(x) == h.size()) return true;
    return false;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
    std::vector<int> m;
    for (int x = 0; x < g.order; ++x)
        if (conjugate_subgroup(h, x).members == h.members) m.push_back(x);
    return Subgroup{&g, std::move(m)};
}

std::optional<int> conjugating_element(const FiniteGroup& g, const Subgroup& h,
                                       const Subgroup& k) {
    if (h.size() != k.size()) return std::nullopt;
    for (int x = 0; x < g.order; ++x)
        if (conjugate_subgroup(h, x).members == k.members) return x;
    return std::nullopt;
}

std::vector<int> double_cosets(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    std::vector<int> all(g.order);
    for (int i = 0; i < g.order; ++i) all[i] = i;
    return double_cosets_in(g, all, h, k);
}

std::vector<int> double_cosets_in(const FiniteGroup& g, const std::vector<int>& ambient,
                                  const Subgroup& h, const Subgroup& k) {
    std::vector<bool> seen(g.order, false);
    std::vector<int> reps;
    for (int x : ambient) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (int a : h.members)
            for (int b : k.members) seen[g.mul(g.mul(a, x), b)] = true;
    }
    return reps;
}

SubgroupLattice all_subgroups(const FiniteGroup& g, int bound) {
    if (g.order > 64)
        throw std::runtime_error("all_subgroups: order " + std::to_string(g.order) +
                                 " exceeds the hard limit 64");
    if (g.order > bound)
        throw std::runtime_error("all_subgroups: order " + std::to_string(g.order) +
                                 " exceeds the configured bound " + std::to_string(bound));

    std::set<std::vector<int>> found;
    for (int x = 0; x < g.order; ++x) found.insert(subgroup_closure(g, {x}).members);
    // Iterated pairwise joins to a fixed point.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(found.begin(), found.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                std::vector<int> gens = cur[i];
                gens.insert(gens.end(), cur[j].begin(), cur[j].end());
                if (found.insert(subgroup_closure(g, gens).members).second) grew = true;
            }
    }

    SubgroupLattice lat;
    lat.group = &g;
    for (const auto& m : found) lat.subgroups.push_back(Subgroup{&g, m});
    std::sort(lat.subgroups.begin(), lat.subgroups.end(),
              [](const Subgroup& a, const Subgroup& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a.members < b.members;
              });

    const int n = int(lat.subgroups.size());
    std::map<std::vector<int>, int> pos;
    for (int i = 0; i < n; ++i) pos[lat.subgroups[i].members] = i;

    lat.class_of.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (lat.class_of[i] >= 0) continue;
        std::set<int> orbit;
        for (int x = 0; x < g.order; ++x)
            orbit.insert(pos.at(conjugate_subgroup(lat.subgroups[i], x).members));
        int c = int(lat.classes.size());
        lat.classes.emplace_back(orbit.begin(), orbit.end());
        for (int j : lat.classes.back()) lat.class_of[j] = c;
    }
    // Classes inherit the canonical order from their least member, which is
    // the representative; classes were created in increasing order of that
    // least member already.

    lat.normalizer_of.assign(n, -1);
    for (int i = 0; i < n; ++i)
        lat.normalizer_of[i] = pos.at(normalizer(g, lat.subgroups[i]).members);

    lat.leq.assign(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            lat.leq[a][b] = lat.subgroups[b].contains_all(lat.subgroups[a]);

    lat.maximal_subgroups_of.assign(n, {});
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k) {
            if (k == h || !lat.leq[k][h]) continue;
            bool maximal = true;
            for (int l = 0; l < n && maximal; ++l)
                if (l != k && l != h && lat.leq[k][l] && lat.leq[l][h]) maximal = false;
            if (maximal) lat.maximal_subgroups_of[h].push_back(k);
        }

    lat.cyclic.assign(n, false);
    for (int i = 0; i < n; ++i) lat.cyclic[i] = is_cyclic(lat.subgroups[i]);
    return lat;
}

int SubgroupLattice::index_of(const std::vector<int>& members) const {
    for (int i = 0; i < int(subgroups.size()); ++i)
        if (subgroups[i].members == members) return i;
    return -1;
}

int SubgroupLattice::conjugate_index(int subgroup, int g) const {
    int i = index_of(conjugate_subgroup(subgroups[subgroup], g).members);
    if (i < 0) throw std::logic_error("conjugate_index: conjugate missing from lattice");
    return i;
}

std::vector<int> SubgroupLattice::cyclic_classes() const {
    std::vector<int> out;
    for (int c = 0; c < num_classes(); ++c)
        if (cyclic[rep_of_class(c)]) out.push_back(c);
    return out;
}

std::vector<int> SubgroupLattice::noncyclic_classes() const {
    std::vector<int> out;
    for (int c = 0; c < num_classes(); ++c)
        if (!cyclic[rep_of_class(c)]) out.push_back(c);
    return out;
}

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, const std::string& name) {
    SubgroupGroup out;
    out.to_parent = h.members;
    for (int i = 0; i < int(h.members.size()); ++i) out.from_parent[h.members[i]] = i;
    const int n = h.size();
    std::vector<int> tab(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            tab[size_t(a) * n + b] = out.from_parent.at(g.mul(h.members[a], h.members[b]));
    out.group = FiniteGroup::from_table(name, g.prime, std::move(tab));
    return out;
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n, const std::string& name) {
    Subgroup whole{&g, {}};
    whole.members.resize(g.order);
    for (int i = 0; i < g.order; ++i) whole.members[i] = i;
    if (!is_normal_in(n, whole)) throw std::invalid_argument("quotient: kernel is not normal");

    QuotientGroup q;
    q.parent = &g;
    q.kernel = n;
    q.project.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x) {
        if (q.project[x] >= 0) continue;
        int c = int(q.section.size());
        q.section.push_back(x);  // x ascending, so x is the least of its coset
        for (int k : n.members) q.project[g.mul(x, k)] = c;
    }
    const int m = int(q.section.size());
    std::vector<int> tab(size_t(m) * m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            tab[size_t(a) * m + b] = q.project[g.mul(q.section[a], q.section[b])];
    q.cosets = FiniteGroup::from_table(name, g.prime, std::move(tab));
    return q;
}

SubquotientClasses subquotient_classes(const SubgroupLattice& lat) {
    const FiniteGroup& g = *lat.group;
    const int n = int(lat.subgroups.size());

    std::vector<Subquotient> all;
    for (int big = 0; big < n; ++big)
        for (int small = 0; small < n; ++small)
            if (lat.leq[small][big] &&
                is_normal_in(lat.subgroups[small], lat.subgroups[big]))
                all.push_back({big, small});

    SubquotientClasses out;
    std::map<std::pair<int, int>, bool> seen;
    for (const Subquotient& sqt : all) {
        if (seen.count({sqt.big, sqt.small})) continue;
        std::set<std::pair<int, int>> orbit;
        for (int x = 0; x < g.order; ++x)
            orbit.insert({lat.conjugate_index(sqt.big, x), lat.conjugate_index(sqt.small, x)});
        std::vector<Subquotient> cls;
        for (const auto& [b, s] : orbit) {
            cls.push_back({b, s});
            seen[{b, s}] = true;
        }
        out.classes.push_back(std::move(cls));
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [&](const std::vector<Subquotient>& a, const std::vector<Subquotient>& b) {
                  const Subquotient &ra = a[0], &rb = b[0];
                  int qa = lat.subgroups[ra.big].size(), qb = lat.subgroups[rb.big].size();
                  if (qa != qb) return qa < qb;
                  int na = lat.subgroups[ra.small].size(), nb = lat.subgroups[rb.small].size();
                  if (na != nb) return na < nb;
                  if (ra.big != rb.big) return ra.big < rb.big;
                  return ra.small < rb.small;
              });
    for (int c = 0; c < int(out.classes.size()); ++c) {
        out.reps.push_back(out.classes[c][0]);
        for (const Subquotient& sqt : out.classes[c]) out.index[{sqt.big, sqt.small}] = c;
    }
    return out;
}

int SubquotientClasses::class_of(int big, int small) const {
    auto it = index.find({big, small});
    if (it == index.end()) throw std::invalid_argument("class_of: not a subquotient");
    return it->second;
}

}  // namespace mdade
