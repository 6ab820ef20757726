#include <catch_amalgamated.hpp>

#include "hocolim/generate.hpp"
#include "hocolim/verify.hpp"
#include "oracles.hpp"

using namespace hocolim;

namespace {

// Fibers [1] <- * -> [2] over the pushout shape; * lands on 1 in [1] and on 0 in [2].
CatDiagram pushout_of_ordinals() {
    CatDiagram H{pushout_shape(), {ordinal(1), trivial_category(), ordinal(2)}, {}};
    for (uint32_t i = 0; i < 3; ++i) H.transition.push_back(identity_functor(H.fiber[i]));
    H.transition.push_back(object_inclusion(H.fiber[0], 1));  // center -> left
    H.transition.push_back(object_inclusion(H.fiber[2], 0));  // center -> right
    validate(H);
    return H;
}

void check_agrees(const Report& r) {
    INFO(r.claim << ": " << r.detail);
    CHECK(r.verdict);
    REQUIRE(r.betti.size() >= 2);
    for (const auto& row : r.betti) CHECK(row.second == r.betti.front().second);
    CHECK_FALSE(r.citation.empty());
}

}  // namespace

TEST_CASE("fubini on small products") {
    ChainValues v;
    Rng rng(3);
    {
        const ProductCat P = product(trivial_category(), trivial_category());
        const auto D = random_indexed(rng, v, P.cat);
        const Report r = verify_fubini(v, P, D);
        check_agrees(r);
        CHECK(r.betti.front().second == v.betti(D.value[0]));
    }
    for (int t = 0; t < 4; ++t) {
        const ProductCat P = product(ordinal(1), ordinal(1));
        const auto D = random_indexed(rng, v, P.cat);
        const Report r = verify_fubini(v, P, D);
        check_agrees(r);
        // [1] x [1] has the terminal object (1, 1)
        CHECK(r.betti.front().second == v.betti(D.value[P.object(1, 1)]));
    }
    for (int t = 0; t < 3; ++t) {
        const ProductCat P = product(pushout_shape(), ordinal(1));
        const auto D = random_indexed(rng, v, P.cat);
        const Report r = verify_fubini(v, P, D);
        check_agrees(r);
        CHECK(r.betti.front().second == oracle::bar_betti(*P.cat, D.value, D.mor, 2));
    }
}

TEST_CASE("thomason on constant and pushout fibers") {
    Rng rng(5);
    {
        // trivial fibers: Gr is the base itself
        const CatPtr I = pushout_shape();
        const CatDiagram H = constant_cat_diagram(I, trivial_category());
        const Report r = verify_thomason_nerves(H, 2);
        check_agrees(r);
        CHECK(r.betti.front().second == trimmed(homology(*nerve(I).space, 2)));
    }
    {
        const CatDiagram H = pushout_of_ordinals();
        const Grothendieck G = grothendieck(H);
        CHECK(G.cat->num_objects() == 6);
        const Report r = verify_thomason_nerves(H, 2);
        check_agrees(r);
        CHECK(r.betti.front().second == std::vector<size_t>{1});
        ChainValues v;
        for (int t = 0; t < 3; ++t) check_agrees(verify_thomason(v, H, G, random_indexed(rng, v, G.cat)));
    }
    {
        // constant H = J gives the product I x J
        const CatPtr I = parallel_arrows();
        const CatPtr J = pushout_shape();
        const CatDiagram H = constant_cat_diagram(I, J);
        const Report r = verify_thomason_nerves(H, 2);
        check_agrees(r);
        CHECK(r.betti.front().second == trimmed(homology(*nerve(product(I, J).cat).space, 2)));
        CHECK(r.betti.front().second == std::vector<size_t>{1, 1});
    }
}

TEST_CASE("thomason on generated fibers with chain values") {
    Rng rng(12);
    ChainValues v(3);
    for (int t = 0; t < 4; ++t) {
        const CatDiagram H = random_cat_diagram(rng, random_poset(rng, 3, 1, 2), 3);
        const Grothendieck G = grothendieck(H);
        const auto F = random_indexed(rng, v, G.cat);
        const Report r = verify_thomason(v, H, G, F);
        check_agrees(r);
        CHECK(r.betti.front().second == oracle::bar_betti(*G.cat, F.value, F.mor, 3));
        check_agrees(verify_thomason_nerves(H, 3));
    }
}

TEST_CASE("cofinality of terminal functors") {
    ChainValues v;
    Rng rng(9);
    for (int t = 0; t < 4; ++t) {
        const ConeCat C = cone_cat(random_poset(rng, 3, 1, 2));
        const auto D = random_indexed(rng, v, C.cat);
        const Report r = verify_cofinality(v, object_inclusion(C.cat, C.apex), D);
        check_agrees(r);
        CHECK(r.betti.front().second == v.betti(D.value[C.apex]));
        check_agrees(verify_cofinality(v, identity_functor(C.cat), D));
    }
    {
        // the projection I x [1] -> I has the left adjoint i -> (i, 0)
        const CatPtr I = pushout_shape();
        const ProductCat P = product(I, ordinal(1));
        check_agrees(verify_cofinality(v, P.pr1, random_indexed(rng, v, I)));
    }
    {
        // the inclusion of a non-terminal object is not terminal
        const CatPtr I = ordinal(1);
        CHECK_THROWS_AS(verify_cofinality(v, object_inclusion(I, 0), random_indexed(rng, v, I)), PreconditionError);
    }
}

TEST_CASE("kan boundedness and reduction reports") {
    ChainValues v;
    Rng rng(21);
    for (int t = 0; t < 10; ++t) {
        Presented Lp;
        const SMap f = random_smap(rng, random_sset(rng, 3, 3), 3, 3, &Lp);
        const Report r = verify_kan_bounded(v, f, random_bounded(rng, v, Lp));
        check_agrees(r);
    }
    for (int t = 0; t < 10; ++t) {
        const Presented Kp = random_presented_sset(rng, 3, 3);
        const SMap f = random_smap(rng, Kp.space, 3, 3);
        const Report r = verify_reduction(v, f, pullback_diagram(v, f, random_bounded(rng, v, Kp)));
        check_agrees(r);
    }
    {
        // the edge of Delta[1] collapses to a point while F(d_i) are not isomorphisms
        const SSetPtr L = standard(1);
        const auto pt = chains(*standard(0), 2);
        const auto two = direct_sum(2, {&pt, &pt});
        const uint32_t e = L->of_dim(1).front();
        BoundedDiagram<ChainValues> F{L, std::vector<ChainComplex>(L->size(), pt), {}};
        F.face.resize(L->size());
        F.value[e] = two.apex;
        F.face[e] = {two.legs[0], two.legs[1]};
        REQUIRE(check_bounded(v, F).ok);
        CHECK_THROWS_AS(verify_reduction(v, terminal_map(L), F), PreconditionError);
    }
}

TEST_CASE("cone collapse reports") {
    ChainValues v;
    SSetValues w;
    Rng rng(17);
    for (int t = 0; t < 6; ++t) check_agrees(verify_cone(v, random_bounded(rng, v, random_presented_sset(rng, 2, 3))));
    check_agrees(verify_cone(w, random_bounded(rng, w, random_presented_sset(rng, 1, 2))));
}

TEST_CASE("suites run with small instance counts") {
    SuiteOptions o;
    o.seed = 4;
    o.instances = 3;
    for (const Report& r : {suite_terminal_simplex(o), suite_sphere_colimit(o), suite_kan_bounded(o),
                            suite_degeneracy_pullback(o), suite_reduction(o), suite_epsilon_cofinality(o),
                            suite_terminal_hocolim(o, false), suite_terminal_hocolim(o, true),
                            suite_classifying_space(o), suite_thomason(o), suite_fubini(o),
                            suite_cofibration_colimit(o), suite_cofinality(o), suite_cone(o)}) {
        INFO(r.claim << ": " << r.detail);
        CHECK(r.verdict);
        CHECK(r.ms >= 0);
    }
    check_agrees(check_ocolim_sphere());
    check_agrees(check_homotopy_pushout());
}

TEST_CASE("suites are deterministic in the seed") {
    SuiteOptions o;
    o.seed = 11;
    o.instances = 2;
    const Report a = suite_fubini(o);
    const Report b = suite_fubini(o);
    CHECK(a.betti == b.betti);
    CHECK(a.detail == b.detail);
    CHECK(a.inputs == b.inputs);
}
