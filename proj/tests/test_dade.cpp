#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mdade/dade.hpp"
#include "mdade/lambda_ring.hpp"

using namespace mdade;

TEST_CASE("dade dimensions") {
    CHECK(dade_dim(*make_context("C8")) == 0);
    CHECK(dade_dim(*make_context("C2xC2")) == 1);
    CHECK(dade_dim(*make_context("Q8")) == 1);
    CHECK(dade_dim(*make_context("D8")) == 3);
}

TEST_CASE("restriction to the whole group is the identity") {
    auto d8 = make_context("D8");
    DadeRestriction res = dade_restrict(*d8, d8->lat.full_index());
    CHECK(res.m == ExactMatrix::identity(3));
}

TEST_CASE("self restriction carries the normalizer index") {
    for (const std::string& spec : {"D8", "Q8", "D16", "He27", "C2xC2xC2"}) {
        auto ctx = make_context(spec);
        std::vector<int> nc = ctx->lat.noncyclic_classes();
        for (size_t pos = 0; pos < nc.size(); ++pos) {
            int q = ctx->lat.rep_of_class(nc[pos]);
            DadeRestriction res = dade_restrict(*ctx, q);
            int expected = ctx->lat.subgroups[ctx->lat.normalizer_of[q]].size() /
                           ctx->lat.subgroups[q].size();
            int top = res.v->lat.class_of[res.v->lat.full_index()];
            std::vector<int> vnc = res.v->lat.noncyclic_classes();
            for (int r = 0; r < res.m.rows(); ++r)
                CHECK(res.m.get(r, int(pos)) == (vnc[r] == top ? Rat(expected) : Rat(0)));
        }
    }
}

TEST_CASE("the top class dies in every proper subgroup") {
    for (const std::string& spec : {"D8", "Q8", "C2xC2", "He27"}) {
        auto ctx = make_context(spec);
        std::vector<int> nc = ctx->lat.noncyclic_classes();
        REQUIRE(!nc.empty());
        for (int v = 0; v < int(ctx->lat.subgroups.size()) - 1; ++v) {
            DadeRestriction res = dade_restrict(*ctx, v);
            for (int r = 0; r < res.m.rows(); ++r)
                CHECK(res.m.get(r, res.m.cols() - 1) == 0);
        }
    }
}

TEST_CASE("restriction of D8 to a Klein four subgroup") {
    auto d8 = make_context("D8");
    std::vector<int> nc = d8->lat.noncyclic_classes();
    int v4a = d8->lat.rep_of_class(nc[0]);
    REQUIRE(d8->lat.subgroups[v4a].size() == 4);
    DadeRestriction res = dade_restrict(*d8, v4a);
    REQUIRE(res.m.rows() == 1);
    REQUIRE(res.m.cols() == 3);
    CHECK(res.m.get(0, 0) == Rat(2));
    CHECK(res.m.get(0, 1) == Rat(0));
    CHECK(res.m.get(0, 2) == Rat(0));
}

TEST_CASE("restriction is transitive along chains") {
    std::mt19937_64 rng(23);
    for (const std::string& spec : {"D8", "D16", "He27", "C2xC2xC2"}) {
        auto ctx = make_context(spec);
        const int ns = int(ctx->lat.subgroups.size());
        for (int trial = 0; trial < 12; ++trial) {
            int v = int(rng() % ns);
            std::vector<int> below;
            for (int u = 0; u < ns; ++u)
                if (ctx->lat.leq[u][v]) below.push_back(u);
            int u = below[rng() % below.size()];
            DadeRestriction wu = dade_restrict(*ctx, u);
            DadeRestriction wv = dade_restrict(*ctx, v);
            const SubgroupGroup& vg = ctx->subgroup_group(v);
            std::vector<int> relabeled;
            for (int e : ctx->lat.subgroups[u].members)
                relabeled.push_back(vg.from_parent.at(e));
            std::sort(relabeled.begin(), relabeled.end());
            DadeRestriction vu = dade_restrict(*wv.v, wv.v->lat.index_of(relabeled));
            CHECK(multiply(vu.m, wv.m) == wu.m);
        }
    }
}

TEST_CASE("transport") {
    auto d8 = make_context("D8");
    // the identity map
    std::vector<int> ident(d8->order());
    for (int i = 0; i < d8->order(); ++i) ident[i] = i;
    CHECK(dade_transport(*d8, *d8, ident) == ExactMatrix::identity(3));

    // conjugation by a reflection is inner: classes stay put
    std::vector<int> by_b(d8->order());
    for (int i = 0; i < d8->order(); ++i) by_b[i] = d8->group.conj(4, i);
    CHECK(dade_transport(*d8, *d8, by_b) == ExactMatrix::identity(3));

    // an automorphism of the Klein four group permuting the involutions
    auto v4 = make_context("C2xC2");
    std::vector<int> swap_map{0, 2, 1, 3};
    CHECK(dade_transport(*v4, *v4, swap_map) == ExactMatrix::identity(1));

    // a non-homomorphism is rejected
    std::vector<int> bad{0, 3, 1, 2};
    bool homo = true;
    for (int a = 0; a < 4 && homo; ++a)
        for (int b = 0; b < 4 && homo; ++b)
            if (bad[v4->group.mul(a, b)] != v4->group.mul(bad[a], bad[b])) homo = false;
    if (!homo) CHECK_THROWS_AS(dade_transport(*v4, *v4, bad), std::invalid_argument);
}

TEST_CASE("model dimensions") {
    CHECK(dmu_dim(*make_context("C2xC2")) == 1);
    CHECK(dmu_dim(*make_context("D8")) == 4);
    CHECK(dmu_dim(*make_context("Q8")) == 2);
    CHECK(dmu_dim(*make_context("C8")) == 0);
    CHECK(dmu_dim(*make_context("He27")) == 6);
    // agrees with the kernel of the Mackey linearization
    for (const std::string& spec : {"C2xC2", "D8", "Q8", "C2xC4", "C3xC3"})
        CHECK(dmu_dim(*make_context(spec)) == lin_mu_kernel(*make_context(spec)).cols());
}

TEST_CASE("deflation-restriction maps") {
    auto d8 = make_context("D8");
    MackeyDadeModel model = mackey_dade_model(d8);

    // the full subquotient gives the identity
    int top = d8->sq().class_of(d8->lat.full_index(), d8->lat.trivial_index());
    JefRes full = jef_res_map(model, top);
    CHECK(full.m == ExactMatrix::identity(model.dim));

    // every proper subquotient of the Klein four group has a zero target
    auto v4 = make_context("C2xC2");
    MackeyDadeModel vmodel = mackey_dade_model(v4);
    int vtop = v4->sq().class_of(v4->lat.full_index(), v4->lat.trivial_index());
    for (int c = 0; c < v4->sq().num_classes(); ++c) {
        if (c == vtop) continue;
        JefRes jr = jef_res_map(vmodel, c);
        CHECK(jr.target.dim == 0);
        CHECK(jr.m.rows() == 0);
    }

    // deflating D8 by its center reads exactly the center block
    int z = -1;
    for (int i = 0; i < int(d8->lat.subgroups.size()); ++i)
        if (d8->lat.subgroups[i].size() == 2 &&
            d8->lat.normalizer_of[i] == d8->lat.full_index())
            z = i;
    JefRes zmap = jef_res_map(model, d8->sq().class_of(d8->lat.full_index(), z));
    REQUIRE(zmap.target.dim == 1);
    int zblock_offset = -1, zblock_size = 0;
    for (const auto& b : model.blocks)
        if (b.class_index == d8->lat.class_of[z]) {
            zblock_offset = b.offset;
            zblock_size = int(b.nc_classes.size());
        }
    REQUIRE(zblock_size == 1);
    for (int j = 0; j < model.dim; ++j)
        CHECK((zmap.m.get(0, j) != 0) == (j == zblock_offset));
}

TEST_CASE("the deflation-restriction core") {
    CHECK(underline_dmu(*make_context("C8")).cols() == 0);

    auto v4 = make_context("C2xC2");
    ExactMatrix uv = underline_dmu(*v4);
    REQUIRE(uv.cols() == 1);
    CHECK(uv.get(0, 0) == Rat(1));

    auto d8 = make_context("D8");
    ExactMatrix ud = underline_dmu(*d8);
    REQUIRE(ud.cols() == 1);
    MackeyDadeModel model = mackey_dade_model(d8);
    const GroupContext& w = *d8->weyl(model.blocks[0].rep_subgroup).w;
    int top_class = w.lat.class_of[w.lat.full_index()];
    int expect = -1;
    for (size_t i = 0; i < model.blocks[0].nc_classes.size(); ++i)
        if (model.blocks[0].nc_classes[i] == top_class) expect = int(i);
    for (int r = 0; r < ud.rows(); ++r)
        CHECK((ud.get(r, 0) != 0) == (r == expect));
}
