#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mdade/context.hpp"
#include "oracles.hpp"

using namespace mdade;

namespace {

const std::vector<std::string> kBuiltins = {
    "C2",     "C4",   "C8",   "C16", "C3",  "C9",       "C27",
    "C2xC2",  "C2xC4", "C2xC2xC2", "C3xC3", "D8", "Q8", "D16",
    "Q16",    "SD16", "M16",  "He27"};

int reflection_subgroup(const GroupContext& d8) {
    // <b> = {0, 4} in the normal form a^i b^j with index i + 4j
    return d8.lat.index_of(std::vector<int>{0, 4});
}

}  // namespace

TEST_CASE("construction and exhaustive axioms for every builtin") {
    for (const std::string& spec : kBuiltins) {
        FiniteGroup g = make_group(spec);  // from_table validates all axioms
        CHECK(g.order <= 32);
        int n = g.order, p = g.prime;
        while (n % p == 0) n /= p;
        CHECK(n == 1);
    }
}

TEST_CASE("spec errors") {
    CHECK_THROWS_AS(make_group("C6"), std::invalid_argument);
    CHECK_THROWS_AS(make_group("C2xC3"), std::invalid_argument);
    CHECK_THROWS_AS(make_group("F20"), std::invalid_argument);
    CHECK_THROWS_AS(make_group(""), std::invalid_argument);
    CHECK_THROWS_AS(make_group("C1"), std::invalid_argument);
    CHECK_THROWS_AS(all_subgroups(make_group("C16"), 8), std::runtime_error);
}

TEST_CASE("subgroup counts against the subset-closure oracle") {
    for (const std::string& spec : {"C2", "C4", "C8", "C16", "C3", "C9", "C2xC2", "C2xC4",
                                    "C2xC2xC2", "C3xC3", "D8", "Q8", "D16", "Q16", "SD16",
                                    "M16"}) {
        FiniteGroup g = make_group(spec);
        auto expected = oracles::all_subgroups_bruteforce(g);
        SubgroupLattice lat = all_subgroups(g);
        REQUIRE(lat.subgroups.size() == expected.size());
        std::set<std::vector<int>> got;
        for (const Subgroup& s : lat.subgroups) got.insert(s.members);
        for (const auto& m : expected) CHECK(got.count(m) == 1);
    }
}

TEST_CASE("named counts") {
    CHECK(make_context("C4")->lat.subgroups.size() == 3);
    CHECK(make_context("C2xC2")->lat.subgroups.size() == 5);
    CHECK(make_context("Q8")->lat.subgroups.size() == 6);
    auto d8 = make_context("D8");
    CHECK(d8->lat.subgroups.size() == 10);
    CHECK(d8->lat.num_classes() == 8);
}

TEST_CASE("normalizers") {
    auto d8 = make_context("D8");
    // the full group normalizes every normal subgroup
    for (int i = 0; i < int(d8->lat.subgroups.size()); ++i) {
        Subgroup whole = d8->lat.subgroups[d8->lat.full_index()];
        if (is_normal_in(d8->lat.subgroups[i], whole))
            CHECK(d8->lat.normalizer_of[i] == d8->lat.full_index());
    }
    CHECK(d8->lat.normalizer_of[d8->lat.full_index()] == d8->lat.full_index());

    int refl = reflection_subgroup(*d8);
    REQUIRE(refl >= 0);
    int norm = d8->lat.normalizer_of[refl];
    CHECK(d8->lat.subgroups[norm].size() == 4);
    // elementwise oracle
    for (int x = 0; x < d8->order(); ++x) {
        bool fixes = conjugate_subgroup(d8->lat.subgroups[refl], x).members ==
                     d8->lat.subgroups[refl].members;
        CHECK(fixes == d8->lat.subgroups[norm].contains(x));
    }
}

TEST_CASE("class size times normalizer order") {
    for (const std::string& spec : kBuiltins) {
        auto ctx = make_context(spec);
        for (int c = 0; c < ctx->lat.num_classes(); ++c) {
            int rep = ctx->lat.rep_of_class(c);
            int nsize = ctx->lat.subgroups[ctx->lat.normalizer_of[rep]].size();
            CHECK(int(ctx->lat.classes[c].size()) * nsize == ctx->order());
        }
    }
}

TEST_CASE("weyl groups") {
    auto d8 = make_context("D8");
    CHECK(d8->weyl(d8->lat.trivial_index()).w->order() == 8);
    CHECK(d8->weyl(d8->lat.full_index()).w->order() == 1);

    // center = the unique normal order-2 subgroup; D8/Z is a Klein four group
    int z = -1;
    for (int i = 0; i < int(d8->lat.subgroups.size()); ++i)
        if (d8->lat.subgroups[i].size() == 2 &&
            d8->lat.normalizer_of[i] == d8->lat.full_index())
            z = i;
    REQUIRE(z >= 0);
    const FiniteGroup& w = d8->weyl(z).w->group;
    CHECK(w.order == 4);
    for (int x = 1; x < 4; ++x) CHECK(w.element_order(x) == 2);  // quotient table oracle
}

TEST_CASE("double cosets") {
    auto d8 = make_context("D8");
    const FiniteGroup& g = d8->group;
    Subgroup whole = d8->lat.subgroups[d8->lat.full_index()];
    Subgroup triv = d8->lat.subgroups[d8->lat.trivial_index()];
    CHECK(double_cosets(g, whole, whole).size() == 1);
    CHECK(double_cosets(g, triv, triv).size() == size_t(g.order));

    int refl = reflection_subgroup(*d8);
    const Subgroup& s = d8->lat.subgroups[refl];
    auto sizes = oracles::double_coset_sizes(g, s.members, s.members);
    CHECK(sizes == std::vector<int>{2, 2, 4});
    CHECK(double_cosets(g, s, s).size() == 3);

    // double cosets partition the group
    for (const std::string& spec : {"D8", "Q8", "He27"}) {
        auto ctx = make_context(spec);
        for (int a = 0; a < int(ctx->lat.subgroups.size()); a += 2)
            for (int b = 0; b < int(ctx->lat.subgroups.size()); b += 3) {
                auto sizes2 = oracles::double_coset_sizes(
                    ctx->group, ctx->lat.subgroups[a].members, ctx->lat.subgroups[b].members);
                int total = 0;
                for (int s2 : sizes2) total += s2;
                CHECK(total == ctx->order());
                CHECK(double_cosets(ctx->group, ctx->lat.subgroups[a],
                                    ctx->lat.subgroups[b])
                          .size() == sizes2.size());
            }
    }
}

TEST_CASE("subquotient classes") {
    auto c4 = make_context("C4");
    const SubquotientClasses& sq = c4->sq();
    REQUIRE(sq.num_classes() == 6);
    // canonical order (1,1),(C2,1),(C2,C2),(C4,1),(C4,C2),(C4,C4)
    std::vector<std::pair<int, int>> sizes;
    for (const Subquotient& r : sq.reps)
        sizes.push_back({c4->lat.subgroups[r.big].size(), c4->lat.subgroups[r.small].size()});
    CHECK(sizes == std::vector<std::pair<int, int>>{
                       {1, 1}, {2, 1}, {2, 2}, {4, 1}, {4, 2}, {4, 4}});

    CHECK(make_context("C2xC2")->sq().num_classes() == 12);
    CHECK(make_context("D8")->sq().num_classes() == 24);
    for (const std::string& spec : {"C4", "C2xC2", "D8", "Q8", "C2xC4"})
        CHECK(make_context(spec)->sq().num_classes() ==
              oracles::subquotient_class_count(make_group(spec)));
}

TEST_CASE("subquotient count identity over Weyl groups") {
    for (const std::string& spec : kBuiltins) {
        auto ctx = make_context(spec);
        int total = 0;
        for (int c = 0; c < ctx->lat.num_classes(); ++c)
            total += ctx->weyl(ctx->lat.rep_of_class(c)).w->lat.num_classes();
        CHECK(total == ctx->sq().num_classes());
    }
}

TEST_CASE("cyclicity and conjugacy") {
    auto c4 = make_context("C4");
    CHECK(is_cyclic(c4->lat.subgroups[c4->lat.full_index()]));
    auto v4 = make_context("C2xC2");
    CHECK_FALSE(is_cyclic(v4->lat.subgroups[v4->lat.full_index()]));

    auto d8 = make_context("D8");
    int s = d8->lat.index_of(std::vector<int>{0, 4});       // <b>
    int rs2 = d8->lat.index_of(std::vector<int>{0, 6});     // <a^2 b>
    REQUIRE(s >= 0);
    REQUIRE(rs2 >= 0);
    auto g = conjugating_element(d8->group, d8->lat.subgroups[s], d8->lat.subgroups[rs2]);
    REQUIRE(g.has_value());
    CHECK(conjugate_subgroup(d8->lat.subgroups[s], *g).members ==
          d8->lat.subgroups[rs2].members);
    // <b> and <ab> are not conjugate in D8
    int rs1 = d8->lat.index_of(std::vector<int>{0, 5});
    REQUIRE(rs1 >= 0);
    CHECK_FALSE(
        conjugating_element(d8->group, d8->lat.subgroups[s], d8->lat.subgroups[rs1]));
}

TEST_CASE("quotient projection is a homomorphism with the right kernel") {
    auto q8 = make_context("Q8");
    int z = -1;
    for (int i = 0; i < int(q8->lat.subgroups.size()); ++i)
        if (q8->lat.subgroups[i].size() == 2) z = i;
    QuotientGroup quo = quotient(q8->group, q8->lat.subgroups[z], "Q8/Z");
    CHECK(quo.cosets.order == 4);
    for (int a = 0; a < q8->order(); ++a)
        for (int b = 0; b < q8->order(); ++b)
            CHECK(quo.project[q8->group.mul(a, b)] ==
                  quo.cosets.mul(quo.project[a], quo.project[b]));
    for (int a = 0; a < q8->order(); ++a)
        CHECK((quo.project[a] == 0) == q8->lat.subgroups[z].contains(a));
}
