#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "mdade/mackey.hpp"
#include "oracles.hpp"

using namespace mdade;

TEST_CASE("normal forms on C2") {
    auto c2 = make_context("C2");
    // r.t = the two conjugations of the trivial subgroup
    MackeyCombination rt = normalize_product(*c2, {MackeyGen::res(1, 0)}, {MackeyGen::tr(1, 0)});
    MackeyCombination want;
    for (int g = 0; g < 2; ++g)
        for (const auto& [e, c] : normalize_word(*c2, {MackeyGen::conj(g, 0)})) want[e] += c;
    CHECK(rt == want);

    // (t r)^2 = 2 t r
    MackeyWord tr{MackeyGen::tr(1, 0), MackeyGen::res(1, 0)};
    MackeyCombination one = normalize_word(*c2, tr);
    MackeyCombination two = normalize_product(*c2, tr, tr);
    REQUIRE(one.size() == 1);
    REQUIRE(two.size() == 1);
    CHECK(two.begin()->first == one.begin()->first);
    CHECK(two.begin()->second == 2 * one.begin()->second);

    // mismatched idempotents vanish
    CHECK(normalize_product(*c2, {MackeyGen::res(0, 0)}, {MackeyGen::res(1, 1)}).empty());

    CHECK_THROWS_AS(normalize_word(*c2, {MackeyGen::res(0, 1)}), std::invalid_argument);
}

TEST_CASE("algebra dimensions against the quadruple oracle") {
    CHECK(build_algebra(make_context("C2")).dim() == 6);
    for (const std::string& spec : {"C2", "C4", "C2xC2", "C3"}) {
        auto ctx = make_context(spec);
        CHECK(build_algebra(ctx).dim() == oracles::mackey_dim_bruteforce(ctx->group));
    }
    CHECK(build_algebra(make_context("C2xC2")).dim() ==
          int(enumerate_mackey_basis(*make_context("C2xC2")).size()));
    CHECK_THROWS_AS(build_algebra(make_context("C16")), std::runtime_error);
}

TEST_CASE("closing the generators reaches the whole basis") {
    for (const std::string& spec : {"C2", "C4", "C2xC2"}) {
        auto ctx = make_context(spec);
        const SubgroupLattice& lat = ctx->lat;
        std::set<MackeyBasisElement> reached;
        std::vector<MackeyCombination> gens;
        for (int h = 0; h < int(lat.subgroups.size()); ++h) {
            for (int g = 0; g < ctx->order(); ++g)
                gens.push_back(normalize_word(*ctx, {MackeyGen::conj(g, h)}));
            for (int k = 0; k < int(lat.subgroups.size()); ++k)
                if (k != h && lat.leq[k][h]) {
                    gens.push_back(normalize_word(*ctx, {MackeyGen::res(h, k)}));
                    gens.push_back(normalize_word(*ctx, {MackeyGen::tr(h, k)}));
                }
        }
        for (const auto& c : gens)
            for (const auto& [e, _] : c) reached.insert(e);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<MackeyBasisElement> cur(reached.begin(), reached.end());
            for (const MackeyBasisElement& a : cur)
                for (const MackeyBasisElement& b : cur)
                    for (const auto& [e, _] : multiply_basis(*ctx, a, b))
                        if (reached.insert(e).second) grew = true;
        }
        std::vector<MackeyBasisElement> basis = enumerate_mackey_basis(*ctx);
        CHECK(reached.size() == basis.size());
        for (const MackeyBasisElement& e : basis) CHECK(reached.count(e) == 1);
    }
}

TEST_CASE("structure constants are associative and unital") {
    std::mt19937_64 rng(29);
    for (const std::string& spec : {"C2", "C4", "C2xC2"}) {
        MackeyAlgebra alg = build_algebra(make_context(spec));
        for (int t = 0; t < 500; ++t) {
            MackeyCombination a{{alg.basis[rng() % alg.dim()], 1}};
            MackeyCombination b{{alg.basis[rng() % alg.dim()], 1}};
            MackeyCombination c{{alg.basis[rng() % alg.dim()], 1}};
            CHECK(alg.multiply(alg.multiply(a, b), c) == alg.multiply(a, alg.multiply(b, c)));
            CHECK(alg.multiply(alg.identity, a) == a);
            CHECK(alg.multiply(a, alg.identity) == a);
        }
    }
}

TEST_CASE("functor relations") {
    for (const std::string& spec : {"C2", "C4", "C2xC2", "D8", "Q8"}) {
        auto ctx = make_context(spec);
        for (int fp = 0; fp < 2; ++fp) {
            Field f = fp ? Field::Fp : Field::Q;
            long p = fp ? ctx->group.prime : 0;
            CHECK(validate_functor(burnside_functor(ctx, f, p)).ok);
            CHECK(validate_functor(fixed_point_functor(ctx, f, p)).ok);
        }
    }
}

TEST_CASE("burnside functor evaluations and transfers") {
    auto c2 = make_context("C2");
    MackeyFunctor b = burnside_functor(c2, Field::Q, 0);
    CHECK(b.dims[1] == 2);
    CHECK(b.dims[0] == 1);
    // induction of the point: [1/1] -> [C2/1]
    ExactMatrix t = b.transfer(1, 0);
    CHECK(t.get(c2->local_classes(1).class_of.at(0), 0) == Rat(1));
}

TEST_CASE("fixed point functor transfer scalars") {
    auto c4 = make_context("C4");
    MackeyFunctor fq = fixed_point_functor(c4, Field::Q, 0);
    CHECK(fq.transfer(2, 1).get(0, 0) == Rat(2));
    MackeyFunctor f2 = fixed_point_functor(c4, Field::Fp, 2);
    CHECK(f2.transfer(2, 1).get(0, 0) == Rat(0));
}

TEST_CASE("bar dimensions") {
    for (const std::string& spec : {"C2", "C4", "C2xC2", "D8", "Q8", "He27"}) {
        auto ctx = make_context(spec);
        for (int fp = 0; fp < 2; ++fp) {
            Field f = fp ? Field::Fp : Field::Q;
            long p = fp ? ctx->group.prime : 0;
            for (int d : bar_dims(burnside_functor(ctx, f, p))) CHECK(d == 1);
            std::vector<int> fd = bar_dims(fixed_point_functor(ctx, f, p));
            for (size_t h = 0; h < fd.size(); ++h)
                CHECK(fd[h] == (fp ? 1 : (h == 0 ? 1 : 0)));
        }
    }
}

TEST_CASE("bar modules carry the Weyl action") {
    auto d8 = make_context("D8");
    MackeyFunctor b = burnside_functor(d8, Field::Q, 0);
    for (int h = 0; h < int(d8->lat.subgroups.size()); ++h) {
        ConjugationModule cm = bar_module(b, h);
        const FiniteGroup& w = cm.w->group;
        for (int x = 0; x < w.order; ++x)
            for (int y = 0; y < w.order; ++y)
                CHECK(multiply(cm.action[x], cm.action[y]) == cm.action[w.mul(x, y)]);
    }
}

TEST_CASE("twin and twin-dual functors") {
    for (const std::string& spec : {"C2", "C4", "C2xC2", "D8"}) {
        auto ctx = make_context(spec);
        for (int fp = 0; fp < 2; ++fp) {
            Field f = fp ? Field::Fp : Field::Q;
            long p = fp ? ctx->group.prime : 0;
            for (bool fixed : {false, true}) {
                MackeyFunctor m = fixed ? fixed_point_functor(ctx, f, p)
                                        : burnside_functor(ctx, f, p);
                MackeyFunctor tw = twin_functor(m);
                MackeyFunctor td = twin_dual_functor(m);
                MackeyFunctor du = dual_functor(m);
                CHECK(validate_functor(tw).ok);
                CHECK(validate_functor(td).ok);
                CHECK(validate_functor(du).ok);
                // bar of the twin-dual has the bar dimensions of the dual
                CHECK(bar_dims(td) == bar_dims(m));
                for (int q = 0; q < int(ctx->lat.subgroups.size()); ++q) {
                    TwinDualDims dd = twin_dual_dims(m, q);
                    CHECK(dd.coinvariants == dd.fixed);
                    CHECK(dd.coinvariants == td.dims[q]);
                    CHECK(dd.fixed == tw.dims[q]);
                    if (!fp) CHECK(dd.coinvariants == m.dims[q]);
                }
            }
        }
    }
}

TEST_CASE("twin-dual of the Burnside functor of C2 at the top") {
    auto c2 = make_context("C2");
    MackeyFunctor m = burnside_functor(c2, Field::Q, 0);
    TwinDualDims dd = twin_dual_dims(m, 1);
    CHECK(dd.coinvariants == 2);
    CHECK(m.dims[1] == 2);
    TwinDualDims at1 = twin_dual_dims(m, 0);
    CHECK(at1.coinvariants == m.dims[0]);
}

TEST_CASE("the deflation route to the bar dimension") {
    for (const std::string& spec : {"C2", "C4", "C2xC2", "D8", "Q8"}) {
        auto ctx = make_context(spec);
        MackeyFunctor b = burnside_functor(ctx, Field::Q, 0);
        for (int h = 0; h < int(ctx->lat.subgroups.size()); ++h)
            CHECK(bar_dim_via_jef(b, h) == bar_data(b, h).q.dim);
    }
}

TEST_CASE("restriction and deflation of functors keep the relations") {
    auto d8 = make_context("D8");
    MackeyFunctor b = burnside_functor(d8, Field::Q, 0);
    std::vector<int> nc = d8->lat.noncyclic_classes();
    int v4a = d8->lat.rep_of_class(nc[0]);
    RestrictedFunctor rf = restrict_functor(b, v4a);
    CHECK(validate_functor(rf.functor).ok);

    int z = -1;
    for (int i = 0; i < int(d8->lat.subgroups.size()); ++i)
        if (d8->lat.subgroups[i].size() == 2 &&
            d8->lat.normalizer_of[i] == d8->lat.full_index())
            z = i;
    DeflatedFunctor df = jef_functor(b, z);
    CHECK(validate_functor(df.functor).ok);
    CHECK(df.functor.ctx->order() == 4);
}

TEST_CASE("bar compatibility with restriction and deflation") {
    auto d8 = make_context("D8");
    MackeyFunctor b = burnside_functor(d8, Field::Q, 0);
    std::vector<int> nc = d8->lat.noncyclic_classes();
    int v4a = d8->lat.rep_of_class(nc[0]);
    int z = -1;
    for (int i = 0; i < int(d8->lat.subgroups.size()); ++i)
        if (d8->lat.subgroups[i].size() == 2 &&
            d8->lat.normalizer_of[i] == d8->lat.full_index())
            z = i;
    REQUIRE(d8->lat.leq[z][v4a]);
    CHECK(check_prop1_restriction(b, v4a, z).ok);
    CHECK(check_prop1_restriction(b, v4a, d8->lat.trivial_index()).ok);

    auto c4 = make_context("C4");
    MackeyFunctor b4 = burnside_functor(c4, Field::Q, 0);
    CHECK(check_prop1_deflation(b4, 1, c4->lat.full_index()).ok);

    // the same identities over the prime field
    MackeyFunctor bp = burnside_functor(d8, Field::Fp, 2);
    CHECK(check_prop1_restriction(bp, v4a, z).ok);
}
