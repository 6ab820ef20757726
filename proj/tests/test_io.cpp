#include <catch_amalgamated.hpp>

#include <algorithm>
#include <filesystem>

#include "hocolim/generate.hpp"
#include "hocolim/io.hpp"

using namespace hocolim;
using io::IoError;

namespace {

io::Workspace sample(Rng& rng) {
    io::Workspace w;
    ChainValues v(3);
    SSetValues s;
    const Presented Kp = random_presented_sset(rng, 3, 3);
    io::put(w, "K", Kp.space);
    Presented Lp;
    const SMap f = random_smap(rng, Kp.space, 2, 3, &Lp);
    io::put(w, "L", Lp.space);
    w.maps["f"] = {"L", "K", f};
    w.bounded_diagrams["F"] = {"K", {true, 3}, random_bounded(rng, v, Kp), std::nullopt};
    w.bounded_diagrams["G"] = {"L", {false, 2}, std::nullopt, random_bounded(rng, s, Lp)};
    const CatPtr I = random_poset(rng, 4, 1, 2);
    const CatPtr J = random_free_category(rng, 3);
    io::put(w, "I", I);
    io::put(w, "J", J);
    io::put(w, "parallel", parallel_arrows());
    w.indexed_diagrams["D"] = {"I", {true, 3}, random_indexed(rng, v, I), std::nullopt};
    w.indexed_diagrams["E"] = {"J", {false, 2}, std::nullopt, random_indexed(rng, s, J)};
    const ConeCat C = cone_cat(I);
    io::put(w, "CI", C.cat);
    w.functors["inc"] = {"I", "CI", C.inclusion};
    w.cat_diagrams["H"] = {"I", random_cat_diagram(rng, I, 3)};
    w.chain_complexes["X"] = random_complex(rng, 3, 3, 3).complex;
    return w;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string error_of(const std::string& text) {
    try {
        io::parse(text, "case.json");
    } catch (const IoError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("workspace round trip is byte-identical") {
    Rng rng(101);
    for (int t = 0; t < 8; ++t) {
        const io::Workspace w = sample(rng);
        const std::string text = io::dump(w);
        const io::Workspace back = io::parse(text);
        CHECK(io::dump(back) == text);
        CHECK(*back.ssets.at("K") == *w.ssets.at("K"));
        CHECK(back.maps.at("f").map == w.maps.at("f").map);
        CHECK(*back.categories.at("J") == *w.categories.at("J"));
        CHECK(back.functors.at("inc").functor == w.functors.at("inc").functor);
        CHECK(back.chain_complexes.at("X") == w.chain_complexes.at("X"));
        const auto& F = *back.bounded_diagrams.at("F").chain;
        CHECK(F.value == w.bounded_diagrams.at("F").chain->value);
        CHECK(F.face == w.bounded_diagrams.at("F").chain->face);
        const auto& D = *back.indexed_diagrams.at("D").chain;
        CHECK(D.mor == w.indexed_diagrams.at("D").chain->mor);
        const auto& H = back.cat_diagrams.at("H").diagram;
        for (size_t u = 0; u < H.transition.size(); ++u) CHECK(H.transition[u] == w.cat_diagrams.at("H").diagram.transition[u]);
    }
}

TEST_CASE("files merge and keep names consistent") {
    Rng rng(7);
    const io::Workspace w = sample(rng);
    io::Workspace a, b;
    a.categories = w.categories;
    b.indexed_diagrams["D"] = w.indexed_diagrams.at("D");
    const std::string dir = std::filesystem::temp_directory_path().string();
    io::save(a, dir + "/hocolim_io_a.json");
    // b alone references a category it does not define
    CHECK_THROWS_AS(io::parse(io::dump(b)), IoError);
    b.categories["I"] = w.categories.at("I");
    io::save(b, dir + "/hocolim_io_b.json");
    const io::Workspace m = io::load({dir + "/hocolim_io_a.json", dir + "/hocolim_io_b.json"});
    CHECK(m.categories.size() == w.categories.size());
    CHECK(m.indexed_diagrams.count("D") == 1);

    io::Workspace c;
    c.categories["I"] = ordinal(2);
    io::save(c, dir + "/hocolim_io_c.json");
    try {
        io::load({dir + "/hocolim_io_a.json", dir + "/hocolim_io_c.json"});
        FAIL("conflicting definitions were accepted");
    } catch (const IoError& e) {
        CHECK(contains(e.what(), "/categories/I"));
        CHECK(contains(e.what(), "defined differently"));
    }
}

TEST_CASE("load errors name the offending reference") {
    const std::string base = R"({"version":1,"ssets":{"K":{"simplices":[{"id":0,"dim":0},{"id":1,"dim":1}],"faces":{"1:0":{"base":0,"op":[0]},"1:1":{"base":FACE,"op":[0]}}}}})";
    auto with = [&](const std::string& face) {
        std::string s = base;
        s.replace(s.find("FACE"), 4, face);
        return s;
    };
    CHECK(error_of(with("0")).empty());
    const std::string dangling = error_of(with("7"));
    CHECK(contains(dangling, "/ssets/K/faces/1:1/base"));
    CHECK(contains(dangling, "simplex 7 does not exist"));

    const std::string map = R"({"version":1,"ssets":{"P":{"simplices":[{"id":0,"dim":0}],"faces":{}}},"maps":{"g":{"from":"P","to":"Q","image":{"0":{"base":0,"op":[0]}}}}})";
    CHECK(contains(error_of(map), "unknown simplicial set 'Q'"));

    const std::string cat = R"({"version":1,"categories":{"C":{"objects":["a","b"],"morphisms":[{"name":"u","src":"a","tgt":"c"}],"compose":[]}}})";
    CHECK(contains(error_of(cat), "/categories/C/morphisms/0/tgt"));

    const std::string missing_comp =
        R"({"version":1,"categories":{"C":{"objects":["a","b","c"],"morphisms":[{"name":"u","src":"a","tgt":"b"},{"name":"v","src":"b","tgt":"c"}],"compose":[]}}})";
    CHECK(contains(error_of(missing_comp), "missing"));
}

TEST_CASE("schema versions and malformed input") {
    CHECK(contains(error_of(R"({"version":2})"), "unsupported schema version 2"));
    CHECK(contains(error_of(R"({"ssets":{}})"), "missing schema version"));
    CHECK(contains(error_of(R"({"version":1,"widgets":{}})"), "unknown section"));
    CHECK(contains(error_of(R"({"version":1,)"), "malformed JSON"));
    CHECK(io::parse(R"({"version":1})").empty());
}

TEST_CASE("chain payloads are validated") {
    const std::string good = R"({"version":1,"chain_complexes":{"X":{"p":2,"dims":[1,1],"d":[[1]]}}})";
    CHECK(io::parse(good).chain_complexes.at("X").dims() == std::vector<size_t>{1, 1});
    CHECK(contains(error_of(R"({"version":1,"chain_complexes":{"X":{"p":4,"dims":[1],"d":[]}}})"), "prime"));
    CHECK(contains(error_of(R"({"version":1,"chain_complexes":{"X":{"p":2,"dims":[1,1],"d":[[1,0]]}}})"), "row-major"));
    // d o d != 0
    CHECK_FALSE(error_of(R"({"version":1,"chain_complexes":{"X":{"p":2,"dims":[1,1,1],"d":[[1],[1]]}}})").empty());
}

TEST_CASE("value category tags") {
    CHECK(io::parse_tag("chain:f2").chain);
    CHECK(io::parse_tag("chain:f3").p == 3);
    CHECK_FALSE(io::parse_tag("sset:f2").chain);
    CHECK(io::parse_tag("sset:f2").str() == "sset:f2");
    CHECK_THROWS(io::parse_tag("chain:f4"));
    CHECK_THROWS(io::parse_tag("groups:f2"));
}

TEST_CASE("reports serialize") {
    Report r;
    r.claim = "fubini";
    r.citation = "Fubini theorem for homotopy colimits";
    r.inputs = {"I: 2 objects"};
    r.betti = {{"hocolim over I x J", {1, 0, 2}}, {"hocolim_I hocolim_J", {1, 0, 2}}};
    r.verdict = true;
    r.ms = 1.23456;
    const std::string j = io::report_json(r);
    for (const char* key : {"\"claim\"", "\"citation\"", "\"inputs\"", "\"betti\"", "\"verdict\": true", "\"ms\": 1.235"})
        CHECK(contains(j, key));
    const std::string t = io::report_text(r);
    CHECK(contains(t, "verdict   positive"));
    CHECK(contains(t, "  hocolim over I x J    1   0   2\n"));
    CHECK(contains(t, "  hocolim_I hocolim_J   1   0   2\n"));
}

TEST_CASE("cube fixture is the face poset of the triangle") {
    const std::string dir = HOCOLIM_DATA_DIR;
    const io::Workspace w = io::load({dir + "/cube_base.json", dir + "/cube_fibers.json"});
    const CatDiagram& H = w.cat_diagrams.at("H").diagram;
    const Grothendieck G = grothendieck(H);
    // non-empty subsets of {0, 1, 2} with an arrow S -> T for T inside S
    const std::vector<std::string> faces{"012", "01", "02", "12", "0", "1", "2"};
    std::vector<std::pair<uint32_t, uint32_t>> rel;
    for (uint32_t a = 0; a < faces.size(); ++a)
        for (uint32_t b = 0; b < faces.size(); ++b)
            if (a != b && faces[a].size() == faces[b].size() + 1 &&
                std::all_of(faces[b].begin(), faces[b].end(), [&](char c) { return faces[a].find(c) != std::string::npos; }))
                rel.push_back({a, b});
    const CatPtr P = poset_category(faces.size(), rel);
    CHECK(G.cat->num_objects() == 7);
    CHECK(G.cat->num_morphisms() == P->num_morphisms());
    CHECK(find_isomorphism(nerve(G.cat).space, nerve(P).space).has_value());
    CHECK(verify_thomason_nerves(H, 2).verdict);
}

TEST_CASE("generated workspaces are deterministic and valid") {
    for (const std::string& family : io::gen_families()) {
        for (uint64_t seed = 1; seed <= 20; ++seed) {
            io::GenSpec g;
            g.family = family;
            g.seed = seed;
            g.tag = {family != "bounded-diagram-via-closure" || seed % 2 == 0, seed % 3 == 0 ? 3u : 2u};
            const std::string text = io::dump(io::generate(g));
            CHECK(io::dump(io::generate(g)) == text);
            // parsing reruns every validator: loop-freeness, d o d = 0, check_bounded
            const io::Workspace w = io::parse(text);
            for (const auto& [name, C] : w.categories) CHECK(is_loop_free(*C));
        }
    }
    io::GenSpec bad;
    bad.family = "spheres";
    CHECK_THROWS_AS(io::generate(bad), std::invalid_argument);
    bad.family = "poset";
    bad.max_objects = 0;
    CHECK_THROWS_AS(io::generate(bad), std::invalid_argument);
}
