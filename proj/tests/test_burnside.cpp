#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mdade/burnside.hpp"
#include "oracles.hpp"

using namespace mdade;

TEST_CASE("mark table of C2") {
    auto c2 = make_context("C2");
    MarkTable t = mark_table(*c2);
    CHECK(t.at(0, 0) == Rat(2));
    CHECK(t.at(0, 1) == Rat(0));
    CHECK(t.at(1, 0) == Rat(1));
    CHECK(t.at(1, 1) == Rat(1));
}

TEST_CASE("mark table shape") {
    for (const std::string& spec : {"C4", "C2xC2", "D8", "Q8", "C2xC4", "D16", "He27"}) {
        auto ctx = make_context(spec);
        MarkTable t = mark_table(*ctx);
        for (int h = 0; h < ctx->lat.num_classes(); ++h) {
            int rep = ctx->lat.rep_of_class(h);
            CHECK(t.at(h, 0) == Rat(ctx->order() / ctx->lat.subgroups[rep].size()));
            int norm = ctx->lat.normalizer_of[rep];
            CHECK(t.at(h, h) == Rat(ctx->lat.subgroups[norm].size() /
                                    ctx->lat.subgroups[rep].size()));
            for (int k = h + 1; k < ctx->lat.num_classes(); ++k) CHECK(t.at(h, k) == Rat(0));
        }
    }
}

TEST_CASE("product basics") {
    auto v4 = make_context("C2xC2");
    int full = v4->lat.class_of[v4->lat.full_index()];
    int triv = v4->lat.class_of[v4->lat.trivial_index()];

    BurnsideElement unit = burnside_basis(*v4, full);
    BurnsideElement free1 = burnside_basis(*v4, triv);
    std::mt19937_64 rng(3);
    BurnsideElement x = burnside_zero(*v4);
    for (Rat& c : x.coords) c = Rat(long(rng() % 9) - 4);
    CHECK(burnside_mult(unit, x) == x);
    CHECK(burnside_mult(x, unit) == x);

    BurnsideElement sq = burnside_mult(free1, free1);
    CHECK(sq.coords[triv] == Rat(4));  // [G/1]^2 = |G| [G/1]
    for (int c = 0; c < v4->lat.num_classes(); ++c)
        if (c != triv) CHECK(sq.coords[c] == 0);

    // distinct order-2 subgroups multiply to the free orbit
    BurnsideElement a = burnside_basis(*v4, 1), b = burnside_basis(*v4, 2);
    BurnsideElement ab = burnside_mult(a, b);
    CHECK(ab.coords[triv] == Rat(1));
    for (int c = 1; c < v4->lat.num_classes(); ++c) CHECK(ab.coords[c] == 0);
}

TEST_CASE("mark homomorphism on random elements") {
    std::mt19937_64 rng(11);
    for (const std::string& spec : {"C4", "C2xC2", "D8", "Q8", "He27"}) {
        auto ctx = make_context(spec);
        for (int t = 0; t < 25; ++t) {
            BurnsideElement a = burnside_zero(*ctx), b = burnside_zero(*ctx);
            for (int c = 0; c < ctx->lat.num_classes(); ++c) {
                a.coords[c] = Rat(long(rng() % 7) - 3);
                b.coords[c] = Rat(long(rng() % 7) - 3);
            }
            std::vector<Rat> lhs = marks_of(burnside_mult(a, b));
            std::vector<Rat> ma = marks_of(a), mb = marks_of(b);
            for (int c = 0; c < ctx->lat.num_classes(); ++c) CHECK(lhs[c] == ma[c] * mb[c]);
        }
    }
}

TEST_CASE("linearization matrix and kernel") {
    auto c4 = make_context("C4");
    ExactMatrix lin4 = lin_matrix(*c4);
    CHECK(lin4.rows() == 3);
    CHECK(lin4.cols() == 3);
    CHECK(rank(lin4) == 3);
    CHECK(lin_kernel(*c4).cols() == 0);
    CHECK(lin_kernel(*make_context("C8")).cols() == 0);

    auto v4 = make_context("C2xC2");
    ExactMatrix linv = lin_matrix(*v4);
    CHECK(linv.rows() == 4);
    CHECK(linv.cols() == 5);
    CHECK(rank(linv) == 4);
    ExactMatrix ker = lin_kernel(*v4);
    REQUIRE(ker.cols() == 1);
    std::vector<long> expected{1, -1, -1, -1, 2};
    for (int i = 0; i < 5; ++i) CHECK(ker.get(i, 0) == Rat(expected[i]));
    CHECK(rank(linv) == oracles::rank_gauss(oracles::to_rows(linv)));

    auto d8 = make_context("D8");
    ExactMatrix lind = lin_matrix(*d8);
    CHECK(lind.rows() == 5);
    CHECK(lind.cols() == 8);
    CHECK(rank(lind) == 5);
    CHECK(lin_kernel(*d8).cols() == 3);
}

TEST_CASE("characters are the cyclic marks") {
    auto d8 = make_context("D8");
    ExactMatrix lin = lin_matrix(*d8);
    for (int h = 0; h < d8->lat.num_classes(); ++h) {
        RationalCharacterVector chi = character_of(burnside_basis(*d8, h));
        REQUIRE(int(chi.values.size()) == lin.rows());
        for (int r = 0; r < lin.rows(); ++r) CHECK(chi.values[r] == lin.get(r, h));
    }
}

TEST_CASE("kernel dimension equals the non-cyclic class count") {
    for (const std::string& spec :
         {"C2", "C4", "C8", "C16", "C3", "C9", "C27", "C2xC2", "C2xC4", "C2xC2xC2",
          "C3xC3", "D8", "Q8", "D16", "Q16", "SD16", "M16", "He27"}) {
        auto ctx = make_context(spec);
        CHECK(lin_kernel(*ctx).cols() == int(ctx->lat.noncyclic_classes().size()));
        CHECK(rank(lin_matrix(*ctx)) == int(ctx->lat.cyclic_classes().size()));
    }
}
