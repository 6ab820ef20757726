#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hocolim/generate.hpp"
#include "hocolim/io.hpp"
#include "hocolim/verify.hpp"

using namespace hocolim;

namespace {

// Bad command line or inconsistent inputs; exit code 2 like schema errors.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// FILE or FILE#name; an empty name selects the only entity of the expected kind.
struct Ref {
    std::string path;
    std::string name;
};

Ref parse_ref(const std::string& s) {
    const auto hash = s.rfind('#');
    if (hash == std::string::npos) return {s, ""};
    return {s.substr(0, hash), s.substr(hash + 1)};
}

struct Options {
    std::string value_cat;
    uint64_t seed = 1;
    std::string out;
    std::string format = "text";
    bool cross_check = false;
    int instances = 0;
};

uint32_t default_prime() {
    const char* env = std::getenv("HOCOLIM_PRIME");
    if (!env || !*env) return 2;
    try {
        return io::parse_tag(std::string("chain:f") + env).p;
    } catch (const std::exception&) {
        throw UsageError("HOCOLIM_PRIME must be a supported prime, got '" + std::string(env) + "'");
    }
}

io::ValueTag requested_tag(const Options& o) {
    if (o.value_cat.empty()) return {true, default_prime()};
    try {
        return io::parse_tag(o.value_cat);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--value-cat: ") + e.what());
    }
}

// A loaded diagram carries its own tag; --value-cat may only confirm it.
void check_tag(const Options& o, const io::ValueTag& have, const std::string& what) {
    if (o.value_cat.empty()) return;
    const io::ValueTag want = requested_tag(o);
    if (want.chain != have.chain || want.p != have.p)
        throw UsageError(what + " has value category " + have.str() + " but --value-cat is " + want.str());
}

io::Workspace load_refs(const std::vector<const Ref*>& refs) {
    std::vector<std::string> paths;
    std::set<std::string> seen;
    for (const Ref* r : refs)
        if (r && !r->path.empty() && seen.insert(r->path).second) paths.push_back(r->path);
    if (paths.empty()) return {};
    return io::load(paths);
}

std::string cells(const SSet& K) {
    std::string out = "cells";
    for (size_t c : cell_counts(K)) out += " " + std::to_string(c);
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <class Fn>
auto with_bounded(const io::NamedBounded& d, Fn&& fn) {
    if (d.tag.chain) return fn(ChainValues(d.tag.p), *d.chain);
    return fn(SSetValues(d.tag.p), *d.sset);
}

template <class Fn>
auto with_indexed(const io::NamedIndexed& d, Fn&& fn) {
    if (d.tag.chain) return fn(ChainValues(d.tag.p), *d.chain);
    return fn(SSetValues(d.tag.p), *d.sset);
}

template <class Fn>
auto with_tag(const io::ValueTag& t, Fn&& fn) {
    if (t.chain) return fn(ChainValues(t.p));
    return fn(SSetValues(t.p));
}

void append(Report& into, const Report& part, const std::string& prefix) {
    for (const auto& in : part.inputs)
        if (std::find(into.inputs.begin(), into.inputs.end(), in) == into.inputs.end()) into.inputs.push_back(in);
    for (const auto& row : part.betti) into.betti.push_back({prefix + row.first, row.second});
    into.verdict = into.verdict && part.verdict;
    if (!part.detail.empty()) into.detail += (into.detail.empty() ? "" : "; ") + prefix + part.detail;
}

void emit(const Options& o, const Report& r) {
    const std::string text = o.format == "json" ? io::report_json(r) : io::report_text(r);
    std::cout << text;
    std::cout.flush();
}

void emit_artifact(const Options& o, const io::Workspace& w) {
    if (o.out.empty())
        std::cout << io::dump(w);
    else
        io::save(w, o.out);
}

// ---- plain computations ----

Report run_homology(const Options& o, const Ref& space, const Ref& complex) {
    const auto t0 = std::chrono::steady_clock::now();
    const io::Workspace w = load_refs({&space, &complex});
    Report r;
    r.claim = "homology";
    r.verdict = true;
    if (!space.path.empty()) {
        const std::string& name = io::select_name(w.ssets, space.name, "--space");
        const SSet& K = *w.ssets.at(name);
        const uint32_t p = requested_tag(o).p;
        r.citation = "simplicial homology with F_" + std::to_string(p) + " coefficients";
        r.inputs.push_back(name + ": " + cells(K));
        r.betti.push_back({name, trimmed(homology(K, p))});
    } else {
        const std::string& name = io::select_name(w.chain_complexes, complex.name, "--complex");
        const ChainComplex& X = w.chain_complexes.at(name);
        r.citation = "homology of a chain complex over F_" + std::to_string(X.p());
        std::string dims = name + ": dims";
        for (size_t d : X.dims()) dims += " " + std::to_string(d);
        r.inputs.push_back(dims);
        r.betti.push_back({name, ChainValues(X.p()).betti(X)});
    }
    r.ms = elapsed_ms(t0);
    return r;
}

Report run_nerve(const Options& o, const Ref& cat) {
    const auto t0 = std::chrono::steady_clock::now();
    const io::Workspace w = load_refs({&cat});
    const std::string& name = io::select_name(w.categories, cat.name, "--cat");
    const CatPtr C = w.categories.at(name);
    const Nerve N = nerve(C);
    const uint32_t p = requested_tag(o).p;
    Report r;
    r.claim = "nerve";
    r.citation = "nerve of a loop-free category, homology over F_" + std::to_string(p);
    r.inputs = {name + ": " + describe(*C), "N(" + name + "): " + cells(*N.space)};
    r.betti.push_back({"N(" + name + ")", trimmed(homology(*N.space, p))});
    r.verdict = true;
    io::Workspace out;
    io::put(out, name, C);
    io::put(out, "N(" + name + ")", N.space);
    if (!o.out.empty()) io::save(out, o.out);
    r.ms = elapsed_ms(t0);
    return r;
}

// The diagram named by `ref` among bounded and indexed diagrams.
struct AnyDiagram {
    const io::NamedBounded* bounded = nullptr;
    const io::NamedIndexed* indexed = nullptr;
    std::string name;
};

AnyDiagram find_diagram(const io::Workspace& w, const Ref& ref) {
    AnyDiagram d;
    if (!ref.name.empty()) {
        if (auto it = w.bounded_diagrams.find(ref.name); it != w.bounded_diagrams.end()) d.bounded = &it->second;
        if (auto it = w.indexed_diagrams.find(ref.name); it != w.indexed_diagrams.end()) d.indexed = &it->second;
        if (!d.bounded && !d.indexed) throw io::IoError("--diagram", "no diagram named '" + ref.name + "'");
        d.name = ref.name;
        return d;
    }
    const size_t n = w.bounded_diagrams.size() + w.indexed_diagrams.size();
    if (n != 1) throw io::IoError("--diagram", n ? "several diagrams; pass FILE#name" : "no diagram in the given files");
    if (!w.bounded_diagrams.empty()) {
        d.bounded = &w.bounded_diagrams.begin()->second;
        d.name = w.bounded_diagrams.begin()->first;
    } else {
        d.indexed = &w.indexed_diagrams.begin()->second;
        d.name = w.indexed_diagrams.begin()->first;
    }
    return d;
}

Report run_colim(const Options& o, const Ref& diagram) {
    const auto t0 = std::chrono::steady_clock::now();
    const io::Workspace w = load_refs({&diagram});
    const AnyDiagram d = find_diagram(w, diagram);
    Report r;
    r.claim = "colim";
    r.verdict = true;
    if (d.bounded) {
        check_tag(o, d.bounded->tag, d.name);
        with_bounded(*d.bounded, [&](const auto& v, const auto& F) {
            r.citation = "colimit of a bounded diagram indexed by a space, values in " + v.tag();
            r.inputs.push_back(d.name + " over " + d.bounded->base + ": " + cells(*F.base));
            r.betti.push_back({"colim " + d.name, trimmed(v.betti(colim_bounded(v, F).apex))});
            if (o.cross_check) {
                r.betti.push_back({"colim by cells", trimmed(v.betti(colim_cells(v, F).apex))});
                if (!colim_cross_check(v, F)) {
                    r.verdict = false;
                    r.detail = "comparison between the two colimit algorithms is not an isomorphism";
                }
            }
            return 0;
        });
    } else {
        check_tag(o, d.indexed->tag, d.name);
        with_indexed(*d.indexed, [&](const auto& v, const auto& D) {
            r.citation = "colimit of a diagram indexed by a finite category, values in " + v.tag();
            r.inputs.push_back(d.name + " over " + d.indexed->category + ": " + describe(*D.cat));
            r.betti.push_back({"colim " + d.name, trimmed(v.betti(cat_colim(v, D).apex))});
            if (o.cross_check) {
                const auto F = pullback_epsilon(v, nerve(D.cat), D);
                r.betti.push_back({"colim over the nerve", trimmed(v.betti(colim_bounded(v, F).apex))});
                if (!colim_cross_check(v, F)) {
                    r.verdict = false;
                    r.detail = "comparison between the two colimit algorithms is not an isomorphism";
                }
            }
            return 0;
        });
    }
    if (r.betti.size() > 1 && r.betti[0].second != r.betti[1].second) r.verdict = false;
    r.ms = elapsed_ms(t0);
    return r;
}

// Objectwise certified eta and a cofibrant result; with --cross-check also the dual colimit on QF.
template <class V>
void judge_replacement(const Options& o, const V& v, const ReplacementResult<V>& R, Report& r) {
    if (!R.cofibrant()) {
        r.verdict = false;
        r.detail = "replacement is not cofibrant";
    } else if (!R.certified()) {
        r.verdict = false;
        r.detail = "replacement map is not certified as a weak equivalence";
    }
    if (o.cross_check && !colim_cross_check(v, R.QF)) {
        r.verdict = false;
        r.detail = "colimit algorithms disagree on the replacement";
    }
}

Report run_ocolim(const Options& o, const Ref& diagram) {
    const auto t0 = std::chrono::steady_clock::now();
    const io::Workspace w = load_refs({&diagram});
    const std::string& name = io::select_name(w.bounded_diagrams, diagram.name, "--diagram");
    const io::NamedBounded& d = w.bounded_diagrams.at(name);
    check_tag(o, d.tag, name);
    Report r;
    r.claim = "ocolim";
    r.verdict = true;
    with_bounded(d, [&](const auto& v, const auto& F) {
        r.citation = "colimit of a cofibrant replacement of a bounded diagram, values in " + v.tag();
        r.inputs.push_back(name + " over " + d.base + ": " + cells(*F.base));
        const auto O = ocolim(v, F);
        r.betti.push_back({"ocolim " + name, trimmed(v.betti(O.value()))});
        r.betti.push_back({"colim " + name, trimmed(v.betti(colim_bounded(v, F).apex))});
        judge_replacement(o, v, O.replacement, r);
        return 0;
    });
    r.ms = elapsed_ms(t0);
    return r;
}

Report run_hocolim(const Options& o, const Ref& cat, const Ref& diagram) {
    const auto t0 = std::chrono::steady_clock::now();
    const io::Workspace w = load_refs({&cat, &diagram});
    const std::string& name = io::select_name(w.indexed_diagrams, diagram.name, "--diagram");
    const io::NamedIndexed& d = w.indexed_diagrams.at(name);
    check_tag(o, d.tag, name);
    if (!cat.path.empty()) {
        const std::string& cname = io::select_name(w.categories, cat.name, "--cat");
        if (cname != d.category && !(*w.categories.at(cname) == *w.categories.at(d.category)))
            throw UsageError(name + " is indexed by " + d.category + ", not by " + cname);
    }
    Report r;
    r.claim = "hocolim";
    r.verdict = true;
    with_indexed(d, [&](const auto& v, const auto& D) {
        r.citation = "homotopy colimit over a loop-free category, values in " + v.tag();
        r.inputs.push_back(d.category + ": " + describe(*D.cat));
        const auto H = homotopy_colimit(v, D);
        r.inputs.push_back("N(" + d.category + "): " + cells(*H.nerve.space));
        r.betti.push_back({"hocolim " + name, trimmed(v.betti(H.value()))});
        judge_replacement(o, v, H.result.replacement, r);
        return 0;
    });
    r.ms = elapsed_ms(t0);
    return r;
}

const io::NamedMap& map_of(const io::Workspace& w, const Ref& ref, std::string& name) {
    name = io::select_name(w.maps, ref.name, "--map");
    return w.maps.at(name);
}

void require_base(const io::Workspace& w, const std::string& diagram, const std::string& base,
                  const std::string& want, const char* role) {
    if (base != want && !(*w.ssets.at(base) == *w.ssets.at(want)))
        throw UsageError(diagram + " lives over " + base + ", expected the " + role + " " + want);
}

Report run_kan(const Options& o, const Ref& map, const Ref& diagram) {
    const auto t0 = std::chrono::steady_clock::now();
    const io::Workspace w = load_refs({&map, &diagram});
    std::string fname;
    const io::NamedMap& f = map_of(w, map, fname);
    const std::string& name = io::select_name(w.bounded_diagrams, diagram.name, "--diagram");
    const io::NamedBounded& d = w.bounded_diagrams.at(name);
    check_tag(o, d.tag, name);
    require_base(w, name, d.base, f.from, "domain");
    Report r;
    r.claim = "kan";
    io::Workspace out;
    io::put(out, f.to, w.ssets.at(f.to));
    const std::string result = fname + "^k " + name;
    with_bounded(d, [&](const auto& v, const auto& F) {
        using V = std::decay_t<decltype(v)>;
        r.citation = "left Kan extension of a bounded diagram along a simplicial map, values in " + v.tag();
        r.inputs = {fname + ": " + f.from + " -> " + f.to, name + " over " + f.from + ": " + cells(*F.base)};
        const KanExtension<V> E = kan_extension(v, f.map, F);
        const CheckReport bounded = check_bounded(v, E.diagram);
        r.betti.push_back({"colim over " + f.to + " of " + result, trimmed(v.betti(colim_bounded(v, E.diagram).apex))});
        r.betti.push_back({"colim over " + f.from + " of " + name, trimmed(v.betti(colim_bounded(v, F).apex))});
        r.verdict = bounded.ok && r.betti[0].second == r.betti[1].second;
        if (!bounded.ok) r.detail = "extension is not bounded: " + bounded.message;
        io::NamedBounded nb{f.to, d.tag, std::nullopt, std::nullopt};
        if constexpr (std::is_same_v<V, ChainValues>)
            nb.chain = E.diagram;
        else
            nb.sset = E.diagram;
        out.bounded_diagrams[result] = std::move(nb);
        return 0;
    });
    if (!o.out.empty()) io::save(out, o.out);
    r.ms = elapsed_ms(t0);
    return r;
}

Report run_reduce(const Options& o, const Ref& map) {
    const auto t0 = std::chrono::steady_clock::now();
    const io::Workspace w = load_refs({&map});
    std::string fname;
    const io::NamedMap& f = map_of(w, map, fname);
    const ReductionResult R = reduce_map(f.map);
    const uint32_t p = requested_tag(o).p;
    const std::string red = "red(" + fname + ")";
    Report r;
    r.claim = "reduce-map";
    r.citation = "reduction of a simplicial map into an epimorphism followed by a reduced map";
    r.inputs = {fname + ": " + f.from + " -> " + f.to, f.from + ": " + cells(*f.map.domain_ptr()),
                red + ": " + cells(*R.red)};
    r.betti.push_back({f.from, trimmed(homology(*f.map.domain_ptr(), p))});
    r.betti.push_back({red, trimmed(homology(*R.red, p))});
    r.betti.push_back({f.to, trimmed(homology(*f.map.codomain_ptr(), p))});
    const bool reduced = is_reduced(R.residual);
    const bool epi = is_epi(R.f_red);
    const bool factors = compose(R.residual, R.f_red) == f.map;
    r.verdict = reduced && epi && factors;
    r.detail = std::to_string(R.log.size()) + " collapse steps";
    if (!reduced) r.detail += "; residual map is not reduced";
    if (!epi) r.detail += "; collapse map is not onto";
    if (!factors) r.detail += "; factorization does not recover the map";
    io::Workspace out;
    io::put(out, f.from, f.map.domain_ptr());
    io::put(out, f.to, f.map.codomain_ptr());
    io::put(out, red, R.red);
    out.maps[fname + "_epi"] = {f.from, red, R.f_red};
    out.maps[fname + "_residual"] = {red, f.to, R.residual};
    if (!o.out.empty()) io::save(out, o.out);
    r.ms = elapsed_ms(t0);
    return r;
}

// ---- verify ----

SuiteOptions suite_options(const Options& o) {
    const io::ValueTag t = requested_tag(o);
    if (!t.chain) throw UsageError("generated verify suites use chain values; pass --value-cat chain:f<p>");
    SuiteOptions s;
    s.seed = o.seed;
    s.instances = o.instances;
    s.p = t.p;
    return s;
}

Report run_verify_fubini(const Options& o, const Ref& left, const Ref& right, const Ref& diagram) {
    if (left.path.empty() && right.path.empty() && diagram.path.empty()) return suite_fubini(suite_options(o));
    if (left.path.empty() || right.path.empty()) throw UsageError("verify fubini needs both --left and --right");
    const io::Workspace w = load_refs({&left, &right, &diagram});
    const CatPtr I = w.categories.at(io::select_name(w.categories, left.name, "--left"));
    const CatPtr J = w.categories.at(io::select_name(w.categories, right.name, "--right"));
    const ProductCat P = product(I, J);
    if (diagram.path.empty()) {
        Rng rng(o.seed);
        return with_tag(requested_tag(o), [&](const auto& v) { return verify_fubini(v, P, random_indexed(rng, v, P.cat)); });
    }
    const std::string& name = io::select_name(w.indexed_diagrams, diagram.name, "--diagram");
    const io::NamedIndexed& d = w.indexed_diagrams.at(name);
    check_tag(o, d.tag, name);
    if (!(*w.categories.at(d.category) == *P.cat))
        throw UsageError(name + " is not indexed by the product of --left and --right (objects named (i,j))");
    return with_indexed(d, [&](const auto& v, const auto& D) {
        auto copy = D;
        copy.cat = P.cat;
        return verify_fubini(v, P, copy);
    });
}

Report run_verify_thomason(const Options& o, const Ref& base, const Ref& fibers, const Ref& diagram) {
    if (base.path.empty() && fibers.path.empty() && diagram.path.empty()) return suite_thomason(suite_options(o));
    if (fibers.path.empty()) throw UsageError("verify thomason needs --fibers");
    const auto t0 = std::chrono::steady_clock::now();
    const io::Workspace w = load_refs({&base, &fibers, &diagram});
    const std::string& hname = io::select_name(w.cat_diagrams, fibers.name, "--fibers");
    const io::NamedCatDiagram& H = w.cat_diagrams.at(hname);
    if (!base.path.empty()) {
        const std::string& bname = io::select_name(w.categories, base.name, "--base");
        if (bname != H.base && !(*w.categories.at(bname) == *w.categories.at(H.base)))
            throw UsageError(hname + " is a diagram over " + H.base + ", not over " + bname);
    }
    const Grothendieck G = grothendieck(H.diagram);
    const io::ValueTag tag = requested_tag(o);
    Report r = verify_thomason_nerves(H.diagram, tag.p);
    if (!diagram.path.empty()) {
        const std::string& name = io::select_name(w.indexed_diagrams, diagram.name, "--diagram");
        const io::NamedIndexed& d = w.indexed_diagrams.at(name);
        check_tag(o, d.tag, name);
        if (!(*w.categories.at(d.category) == *G.cat))
            throw UsageError(name + " is not indexed by the Grothendieck construction of " + hname);
        with_indexed(d, [&](const auto& v, const auto& D) {
            auto copy = D;
            copy.cat = G.cat;
            append(r, verify_thomason(v, H.diagram, G, copy), name + ": ");
            return 0;
        });
    } else if (tag.chain) {
        // Random chain-valued diagrams over Gr, one per requested instance (default one).
        Rng rng(o.seed);
        const ChainValues v(tag.p);
        const int n = o.instances > 0 ? o.instances : 1;
        for (int k = 0; k < n; ++k)
            append(r, verify_thomason(v, H.diagram, G, random_indexed(rng, v, G.cat)), "F" + std::to_string(k) + ": ");
    }
    r.ms = elapsed_ms(t0);
    return r;
}

Report run_verify_cofinality(const Options& o, const Ref& functor, const Ref& diagram) {
    if (functor.path.empty() && diagram.path.empty()) return suite_cofinality(suite_options(o));
    if (functor.path.empty()) throw UsageError("verify cofinality needs --functor");
    const io::Workspace w = load_refs({&functor, &diagram});
    const std::string& fname = io::select_name(w.functors, functor.name, "--functor");
    const io::NamedFunctor& f = w.functors.at(fname);
    if (diagram.path.empty()) {
        Rng rng(o.seed);
        return with_tag(requested_tag(o),
                        [&](const auto& v) { return verify_cofinality(v, f.functor, random_indexed(rng, v, f.functor.cod)); });
    }
    const std::string& name = io::select_name(w.indexed_diagrams, diagram.name, "--diagram");
    const io::NamedIndexed& d = w.indexed_diagrams.at(name);
    check_tag(o, d.tag, name);
    if (d.category != f.to && !(*w.categories.at(d.category) == *w.categories.at(f.to)))
        throw UsageError(name + " must be indexed by the codomain " + f.to + " of " + fname);
    return with_indexed(d, [&](const auto& v, const auto& D) { return verify_cofinality(v, f.functor, D); });
}

template <class Verify, class Suite>
Report run_verify_map(const Options& o, const Ref& map, const Ref& diagram, const char* side, Verify&& verify,
                      Suite&& suite) {
    if (map.path.empty() && diagram.path.empty()) return suite(suite_options(o));
    if (map.path.empty() || diagram.path.empty()) throw UsageError("pass both --map and --diagram");
    const io::Workspace w = load_refs({&map, &diagram});
    std::string fname;
    const io::NamedMap& f = map_of(w, map, fname);
    const std::string& name = io::select_name(w.bounded_diagrams, diagram.name, "--diagram");
    const io::NamedBounded& d = w.bounded_diagrams.at(name);
    check_tag(o, d.tag, name);
    // A diagram over the codomain is pulled back first when `side` allows it.
    const bool over_codomain = std::string(side) == "either" && d.base != f.from &&
                               !(*w.ssets.at(d.base) == *w.ssets.at(f.from));
    require_base(w, name, d.base, over_codomain ? f.to : f.from, over_codomain ? "codomain" : "domain");
    return with_bounded(d, [&](const auto& v, const auto& F) {
        return over_codomain ? verify(v, f.map, pullback_diagram(v, f.map, F)) : verify(v, f.map, F);
    });
}

Report run_verify_cone(const Options& o, const Ref& diagram) {
    if (diagram.path.empty()) return suite_cone(suite_options(o));
    const io::Workspace w = load_refs({&diagram});
    const std::string& name = io::select_name(w.bounded_diagrams, diagram.name, "--diagram");
    const io::NamedBounded& d = w.bounded_diagrams.at(name);
    check_tag(o, d.tag, name);
    return with_bounded(d, [&](const auto& v, const auto& G) { return verify_cone(v, G); });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colimits and homotopy colimits of finite diagrams"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c, bool value_cat = true) {
        if (value_cat) c->add_option("--value-cat", o.value_cat, "chain:f<p> or sset:f<p>");
        c->add_option("--seed", o.seed, "seed for generated instances");
        c->add_option("--out", o.out, "output file");
        c->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
        c->add_flag("--cross-check", o.cross_check, "also compute colimits by cell induction and compare");
    };
    std::string space, complex, cat, diagram, map, functor, base, fibers, left, right;
    io::GenSpec gen;

    auto* homology_cmd = app.add_subcommand("homology", "Betti numbers of a space or a chain complex");
    common(homology_cmd);
    auto* space_opt = homology_cmd->add_option("--space", space, "FILE[#name] of a simplicial set");
    homology_cmd->add_option("--complex", complex, "FILE[#name] of a chain complex")->excludes(space_opt);

    auto* nerve_cmd = app.add_subcommand("nerve", "nerve of a loop-free category");
    common(nerve_cmd);
    nerve_cmd->add_option("--cat", cat, "FILE[#name]")->required();

    auto* colim_cmd = app.add_subcommand("colim", "colimit of a bounded or indexed diagram");
    common(colim_cmd);
    colim_cmd->add_option("--diagram", diagram, "FILE[#name]")->required();

    auto* kan_cmd = app.add_subcommand("kan", "left Kan extension of a bounded diagram along a map");
    common(kan_cmd);
    kan_cmd->add_option("--map", map, "FILE[#name]")->required();
    kan_cmd->add_option("--diagram", diagram, "FILE[#name] over the domain")->required();

    auto* reduce_cmd = app.add_subcommand("reduce-map", "factor a map as an epimorphism followed by a reduced map");
    common(reduce_cmd);
    reduce_cmd->add_option("--map", map, "FILE[#name]")->required();

    auto* ocolim_cmd = app.add_subcommand("ocolim", "colimit of a cofibrant replacement");
    common(ocolim_cmd);
    ocolim_cmd->add_option("--diagram", diagram, "FILE[#name]")->required();

    auto* hocolim_cmd = app.add_subcommand("hocolim", "homotopy colimit over a loop-free category");
    common(hocolim_cmd);
    hocolim_cmd->add_option("--cat", cat, "FILE[#name]; must index the diagram");
    hocolim_cmd->add_option("--diagram", diagram, "FILE[#name]")->required();

    auto* verify_cmd = app.add_subcommand("verify", "check a theorem on given or generated inputs");
    verify_cmd->require_subcommand(1);
    auto verify_sub = [&](const char* name, const char* help) {
        auto* c = verify_cmd->add_subcommand(name, help);
        common(c);
        c->add_option("--instances", o.instances, "generated instances (0 selects the default)");
        return c;
    };
    auto* fubini_cmd = verify_sub("fubini", "hocolim over a product against iterated hocolims");
    fubini_cmd->add_option("--left", left, "FILE[#name] of I");
    fubini_cmd->add_option("--right", right, "FILE[#name] of J");
    fubini_cmd->add_option("--diagram", diagram, "FILE[#name] over I x J");
    auto* thomason_cmd = verify_sub("thomason", "nerve of a Grothendieck construction against a hocolim of nerves");
    thomason_cmd->add_option("--base", base, "FILE[#name] of I");
    thomason_cmd->add_option("--fibers", fibers, "FILE[#name] of H: I -> Cat");
    thomason_cmd->add_option("--diagram", diagram, "FILE[#name] over Gr H");
    auto* cofinality_cmd = verify_sub("cofinality", "hocolim along a terminal functor");
    cofinality_cmd->add_option("--functor", functor, "FILE[#name]");
    cofinality_cmd->add_option("--diagram", diagram, "FILE[#name] over the codomain");
    auto* kan_bounded_cmd = verify_sub("kan-bounded", "Kan extensions preserve boundedness and colimits");
    kan_bounded_cmd->add_option("--map", map, "FILE[#name]");
    kan_bounded_cmd->add_option("--diagram", diagram, "FILE[#name] over the domain");
    auto* reduction_cmd = verify_sub("reduction", "reduction of a map and the unit of its Kan extension");
    reduction_cmd->add_option("--map", map, "FILE[#name]");
    reduction_cmd->add_option("--diagram", diagram, "FILE[#name], f-bounded over the domain or over the codomain");
    auto* cone_cmd = verify_sub("cone", "collapse of a diagram over a cone onto its apex");
    cone_cmd->add_option("--diagram", diagram, "FILE[#name]");

    auto* gen_cmd = app.add_subcommand("gen", "write a generated instance");
    common(gen_cmd);
    gen_cmd->add_option("--family", gen.family, "instance family")
        ->required()
        ->check(CLI::IsMember(io::gen_families()));
    gen_cmd->add_option("--max-objects", gen.max_objects, "bound on objects, cells or summands");
    gen_cmd->add_option("--max-dim", gen.max_dim, "bound on dimensions and degrees");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        const Ref rspace = parse_ref(space), rcomplex = parse_ref(complex), rcat = parse_ref(cat),
                  rdiagram = parse_ref(diagram), rmap = parse_ref(map), rfunctor = parse_ref(functor),
                  rbase = parse_ref(base), rfibers = parse_ref(fibers), rleft = parse_ref(left),
                  rright = parse_ref(right);
        if (*gen_cmd) {
            gen.seed = o.seed;
            gen.tag = requested_tag(o);
            emit_artifact(o, io::generate(gen));
            return 0;
        }
        Report r;
        // Commands producing artifacts write them to --out and the report to stdout.
        bool artifact = false;
        if (*homology_cmd) {
            if (space.empty() && complex.empty()) throw UsageError("homology needs --space or --complex");
            r = run_homology(o, rspace, rcomplex);
        } else if (*nerve_cmd) {
            r = run_nerve(o, rcat);
            artifact = true;
        } else if (*colim_cmd) {
            r = run_colim(o, rdiagram);
        } else if (*kan_cmd) {
            r = run_kan(o, rmap, rdiagram);
            artifact = true;
        } else if (*reduce_cmd) {
            r = run_reduce(o, rmap);
            artifact = true;
        } else if (*ocolim_cmd) {
            r = run_ocolim(o, rdiagram);
        } else if (*hocolim_cmd) {
            r = run_hocolim(o, rcat, rdiagram);
        } else if (*fubini_cmd) {
            r = run_verify_fubini(o, rleft, rright, rdiagram);
        } else if (*thomason_cmd) {
            r = run_verify_thomason(o, rbase, rfibers, rdiagram);
        } else if (*cofinality_cmd) {
            r = run_verify_cofinality(o, rfunctor, rdiagram);
        } else if (*kan_bounded_cmd) {
            r = run_verify_map(
                o, rmap, rdiagram, "domain", [](const auto& v, const SMap& f, const auto& F) { return verify_kan_bounded(v, f, F); },
                [](const SuiteOptions& s) { return suite_kan_bounded(s); });
        } else if (*reduction_cmd) {
            r = run_verify_map(
                o, rmap, rdiagram, "either",
                [](const auto& v, const SMap& f, const auto& F) { return verify_reduction(v, f, F); },
                [](const SuiteOptions& s) { return suite_reduction(s); });
        } else if (*cone_cmd) {
            r = run_verify_cone(o, rdiagram);
        }
        if (!artifact && !o.out.empty()) {
            std::ofstream f(o.out, std::ios::binary);
            if (!f) throw UsageError("cannot write " + o.out);
            f << (o.format == "json" ? io::report_json(r) : io::report_text(r));
        } else {
            emit(o, r);
        }
        return r.verdict ? 0 : 1;
    } catch (const io::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        // UsageError, PreconditionError and validation failures inside the library
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
