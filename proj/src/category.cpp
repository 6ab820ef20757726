#include "hocolim/category.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace hocolim {

FinCat FinCat::make(std::vector<std::string> objects, std::vector<Arrow> arrows,
                    const std::function<uint32_t(uint32_t, uint32_t)>& comp) {
    FinCat C;
    const size_t n = objects.size();
    C.objects_ = std::move(objects);
    for (uint32_t o = 0; o < n; ++o) C.mor_.push_back({o, o, "1_" + C.objects_[o]});
    for (auto& a : arrows) {
        if (a.src >= n || a.tgt >= n) throw std::invalid_argument("morphism " + a.name + " has an unknown endpoint");
        C.mor_.push_back(std::move(a));
    }
    const size_t N = C.mor_.size();
    C.hom_.assign(n * n, {});
    for (uint32_t m = 0; m < N; ++m) C.hom_[C.mor_[m].src * n + C.mor_[m].tgt].push_back(m);
    C.comp_.assign(N * N, -1);
    for (uint32_t g = 0; g < N; ++g)
        for (uint32_t f = 0; f < N; ++f) {
            if (C.mor_[f].tgt != C.mor_[g].src) continue;
            uint32_t h;
            if (C.is_identity(g))
                h = f;
            else if (C.is_identity(f))
                h = g;
            else
                h = comp(g, f);
            if (h >= N || C.mor_[h].src != C.mor_[f].src || C.mor_[h].tgt != C.mor_[g].tgt)
                throw std::invalid_argument("composite " + C.mor_[g].name + " o " + C.mor_[f].name +
                                            " is missing or has the wrong endpoints");
            C.comp_[g * N + f] = static_cast<int32_t>(h);
        }
    return C;
}

uint32_t FinCat::compose(uint32_t g, uint32_t f) const {
    int32_t h = comp_[g * mor_.size() + f];
    if (h < 0) throw std::invalid_argument("morphisms " + mor_[g].name + " and " + mor_[f].name + " are not composable");
    return static_cast<uint32_t>(h);
}

const std::vector<uint32_t>& FinCat::hom(uint32_t a, uint32_t b) const { return hom_[a * objects_.size() + b]; }

std::optional<uint32_t> FinCat::find_object(const std::string& name) const {
    for (uint32_t o = 0; o < objects_.size(); ++o)
        if (objects_[o] == name) return o;
    return std::nullopt;
}

std::optional<uint32_t> FinCat::find_morphism(const std::string& name) const {
    for (uint32_t m = 0; m < mor_.size(); ++m)
        if (mor_[m].name == name) return m;
    return std::nullopt;
}

bool FinCat::same_arrows(const FinCat& o) const {
    if (mor_.size() != o.mor_.size()) return false;
    for (size_t m = 0; m < mor_.size(); ++m)
        if (mor_[m].src != o.mor_[m].src || mor_[m].tgt != o.mor_[m].tgt || mor_[m].name != o.mor_[m].name)
            return false;
    return true;
}

CheckReport check_fincat(const FinCat& C) {
    const auto N = static_cast<uint32_t>(C.num_morphisms());
    auto name = [&](uint32_t m) { return C.morphism_name(m); };
    for (uint32_t f = 0; f < N; ++f) {
        if (C.compose(C.identity(C.tgt(f)), f) != f || C.compose(f, C.identity(C.src(f))) != f)
            return {false, "unit law fails for " + name(f)};
    }
    for (uint32_t f = 0; f < N; ++f)
        for (uint32_t b = 0; b < C.num_objects(); ++b)
            for (uint32_t g : C.hom(C.tgt(f), b)) {
                uint32_t gf = C.compose(g, f);
                for (uint32_t c = 0; c < C.num_objects(); ++c)
                    for (uint32_t h : C.hom(b, c))
                        if (C.compose(h, gf) != C.compose(C.compose(h, g), f))
                            return {false, "associativity fails for (" + name(h) + ", " + name(g) + ", " + name(f) + ")"};
            }
    return {};
}

CheckReport check_loop_free(const FinCat& C) {
    const size_t n = C.num_objects();
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t m : C.hom(a, a))
            if (!C.is_identity(m))
                return {false, "non-identity endomorphism " + C.morphism_name(m) + " on " + C.object_name(a)};
    // cycle search on the relation "there is a non-identity morphism a -> b"
    std::vector<int> state(n, 0);
    std::vector<uint32_t> stack;
    std::string witness;
    std::function<bool(uint32_t)> dfs = [&](uint32_t a) -> bool {
        state[a] = 1;
        stack.push_back(a);
        for (uint32_t b = 0; b < n; ++b) {
            if (b == a || C.hom(a, b).empty()) continue;
            if (state[b] == 1) {
                auto it = std::find(stack.begin(), stack.end(), b);
                for (; it != stack.end(); ++it) witness += C.object_name(*it) + " -> ";
                witness += C.object_name(b);
                return true;
            }
            if (state[b] == 0 && dfs(b)) return true;
        }
        stack.pop_back();
        state[a] = 2;
        return false;
    };
    for (uint32_t a = 0; a < n; ++a)
        if (state[a] == 0 && dfs(a)) return {false, "cycle of non-identity morphisms " + witness};
    return {};
}

bool is_loop_free(const FinCat& C) { return check_loop_free(C).ok; }

namespace {

CatPtr share(FinCat C) { return std::make_shared<const FinCat>(std::move(C)); }

std::vector<std::string> numbered(size_t n, const std::string& prefix = "") {
    std::vector<std::string> v;
    for (size_t k = 0; k < n; ++k) v.push_back(prefix + std::to_string(k));
    return v;
}

// Categories with at most one morphism between any two objects.
FinCat thin(std::vector<std::string> names, const std::vector<std::vector<char>>& leq) {
    const size_t n = names.size();
    std::vector<FinCat::Arrow> arrows;
    std::vector<std::vector<int64_t>> id(n, std::vector<int64_t>(n, -1));
    for (uint32_t a = 0; a < n; ++a) id[a][a] = a;
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b)
            if (a != b && leq[a][b]) {
                id[a][b] = static_cast<int64_t>(n + arrows.size());
                arrows.push_back({a, b, names[a] + "<" + names[b]});
            }
    std::vector<FinCat::Arrow> copy = arrows;
    return FinCat::make(std::move(names), std::move(arrows), [&](uint32_t g, uint32_t f) {
        const auto& af = copy[f - n];
        const auto& ag = copy[g - n];
        return static_cast<uint32_t>(id[af.src][ag.tgt]);
    });
}

}  // namespace

CatPtr empty_category() { return share(FinCat::make({}, {}, nullptr)); }
CatPtr trivial_category() { return share(FinCat::make({"*"}, {}, nullptr)); }
CatPtr discrete_category(size_t n) { return share(FinCat::make(numbered(n), {}, nullptr)); }

CatPtr poset_category(size_t n, const std::vector<std::pair<uint32_t, uint32_t>>& relations,
                      std::vector<std::string> names) {
    if (names.empty()) names = numbered(n);
    if (names.size() != n) throw std::invalid_argument("poset needs one name per element");
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (size_t a = 0; a < n; ++a) leq[a][a] = 1;
    for (auto [a, b] : relations) {
        if (a >= n || b >= n) throw std::invalid_argument("poset relation out of range");
        leq[a][b] = 1;
    }
    for (size_t k = 0; k < n; ++k)
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b)
                if (leq[a][k] && leq[k][b]) leq[a][b] = 1;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            if (leq[a][b] && leq[b][a])
                throw std::invalid_argument("relations are cyclic between " + names[a] + " and " + names[b]);
    return share(thin(std::move(names), leq));
}

CatPtr ordinal(int n) {
    std::vector<std::pair<uint32_t, uint32_t>> rel;
    for (int k = 0; k < n; ++k) rel.push_back({static_cast<uint32_t>(k), static_cast<uint32_t>(k + 1)});
    return poset_category(n + 1, rel);
}

CatPtr pushout_shape() { return poset_category(3, {{1, 0}, {1, 2}}, {"left", "center", "right"}); }

CatPtr parallel_arrows() {
    return share(FinCat::make({"a", "b"}, {{0, 1, "u"}, {0, 1, "v"}}, [](uint32_t, uint32_t) -> uint32_t {
        throw std::logic_error("no composable non-identity pairs");
    }));
}

CatPtr idempotent_category() {
    return share(FinCat::make({"x"}, {{0, 0, "e"}}, [](uint32_t, uint32_t) { return 1u; }));
}

void validate(const Functor& f) {
    const FinCat& J = *f.dom;
    const FinCat& I = *f.cod;
    if (f.obj.size() != J.num_objects() || f.mor.size() != J.num_morphisms())
        throw std::invalid_argument("functor tables have the wrong size");
    for (uint32_t o : f.obj)
        if (o >= I.num_objects()) throw std::invalid_argument("functor sends an object outside its codomain");
    for (uint32_t m = 0; m < J.num_morphisms(); ++m) {
        uint32_t fm = f.mor[m];
        if (fm >= I.num_morphisms() || I.src(fm) != f.obj[J.src(m)] || I.tgt(fm) != f.obj[J.tgt(m)])
            throw std::invalid_argument("functor does not preserve the endpoints of " + J.morphism_name(m));
        if (J.is_identity(m) && !I.is_identity(fm))
            throw std::invalid_argument("functor does not preserve the identity of " + J.object_name(m));
    }
    for (uint32_t g = 0; g < J.num_morphisms(); ++g)
        for (uint32_t b = 0; b < J.num_objects(); ++b)
            for (uint32_t h : J.hom(J.tgt(g), b))
                if (f.mor[J.compose(h, g)] != I.compose(f.mor[h], f.mor[g]))
                    throw std::invalid_argument("functor does not preserve the composite " + J.morphism_name(h) +
                                                " o " + J.morphism_name(g));
}

Functor compose(const Functor& g, const Functor& f) {
    if (!(*f.cod == *g.dom)) throw std::invalid_argument("functors are not composable");
    Functor h{f.dom, g.cod, {}, {}};
    for (uint32_t o : f.obj) h.obj.push_back(g.obj[o]);
    for (uint32_t m : f.mor) h.mor.push_back(g.mor[m]);
    return h;
}

Functor identity_functor(const CatPtr& C) {
    Functor f{C, C, std::vector<uint32_t>(C->num_objects()), std::vector<uint32_t>(C->num_morphisms())};
    std::iota(f.obj.begin(), f.obj.end(), 0u);
    std::iota(f.mor.begin(), f.mor.end(), 0u);
    return f;
}

Functor object_inclusion(const CatPtr& C, uint32_t i) {
    if (i >= C->num_objects()) throw std::invalid_argument("object index out of range");
    return Functor{trivial_category(), C, {i}, {C->identity(i)}};
}

Functor to_point(const CatPtr& C) {
    return Functor{C, trivial_category(), std::vector<uint32_t>(C->num_objects(), 0),
                   std::vector<uint32_t>(C->num_morphisms(), 0)};
}

CatPtr opposite(const CatPtr& C) {
    const size_t n = C->num_objects();
    std::vector<std::string> names;
    for (uint32_t o = 0; o < n; ++o) names.push_back(C->object_name(o));
    std::vector<FinCat::Arrow> arrows;
    for (uint32_t m = static_cast<uint32_t>(n); m < C->num_morphisms(); ++m)
        arrows.push_back({C->tgt(m), C->src(m), C->morphism_name(m)});
    return share(FinCat::make(std::move(names), std::move(arrows), [&](uint32_t g, uint32_t f) { return C->compose(f, g); }));
}

Functor opposite(const Functor& f, const CatPtr& dom_op, const CatPtr& cod_op) {
    return Functor{dom_op, cod_op, f.obj, f.mor};
}

uint32_t ProductCat::morphism(uint32_t a, uint32_t b) const { return pair_index.at({a, b}); }

ProductCat product(const CatPtr& I, const CatPtr& J) {
    const auto nI = static_cast<uint32_t>(I->num_objects()), nJ = static_cast<uint32_t>(J->num_objects());
    ProductCat P;
    std::vector<std::string> names;
    for (uint32_t i = 0; i < nI; ++i)
        for (uint32_t j = 0; j < nJ; ++j) names.push_back("(" + I->object_name(i) + "," + J->object_name(j) + ")");
    const uint32_t n = nI * nJ;
    for (uint32_t i = 0; i < nI; ++i)
        for (uint32_t j = 0; j < nJ; ++j) P.pair_index[{i, j}] = i * nJ + j;
    std::vector<FinCat::Arrow> arrows;
    std::vector<std::pair<uint32_t, uint32_t>> parts;
    for (uint32_t a = 0; a < I->num_morphisms(); ++a)
        for (uint32_t b = 0; b < J->num_morphisms(); ++b) {
            if (I->is_identity(a) && J->is_identity(b)) continue;
            P.pair_index[{a, b}] = n + static_cast<uint32_t>(arrows.size());
            parts.push_back({a, b});
            arrows.push_back({I->src(a) * nJ + J->src(b), I->tgt(a) * nJ + J->tgt(b),
                              "(" + I->morphism_name(a) + "," + J->morphism_name(b) + ")"});
        }
    auto split = [&](uint32_t m) { return m < n ? std::make_pair(m / nJ, m % nJ) : parts[m - n]; };
    P.cat = share(FinCat::make(std::move(names), std::move(arrows), [&](uint32_t g, uint32_t f) {
        auto [ga, gb] = split(g);
        auto [fa, fb] = split(f);
        return P.pair_index.at({I->compose(ga, fa), J->compose(gb, fb)});
    }));
    P.pr1 = Functor{P.cat, I, {}, {}};
    P.pr2 = Functor{P.cat, J, {}, {}};
    for (uint32_t o = 0; o < n; ++o) {
        P.pr1.obj.push_back(o / nJ);
        P.pr2.obj.push_back(o % nJ);
    }
    for (uint32_t m = 0; m < P.cat->num_morphisms(); ++m) {
        auto [a, b] = split(m);
        // identities are stored under object ids; convert to identity morphisms
        if (m < n) {
            a = I->identity(a);
            b = J->identity(b);
        }
        P.pr1.mor.push_back(a);
        P.pr2.mor.push_back(b);
    }
    return P;
}

ConeCat cone_cat(const CatPtr& I) {
    const auto n = static_cast<uint32_t>(I->num_objects());
    std::vector<std::string> names;
    for (uint32_t o = 0; o < n; ++o) names.push_back(I->object_name(o));
    names.push_back("e");
    const uint32_t e = n;
    // ids shift by one because the new object adds an identity
    std::vector<FinCat::Arrow> arrows;
    for (uint32_t m = n; m < I->num_morphisms(); ++m)
        arrows.push_back({I->src(m), I->tgt(m), I->morphism_name(m)});
    const auto shift = [&](uint32_t m) { return m < n ? m : m + 1; };
    const auto unshift = [&](uint32_t m) { return m < n ? m : m - 1; };
    const uint32_t first_leg = static_cast<uint32_t>(I->num_morphisms()) + 1;
    for (uint32_t o = 0; o < n; ++o) arrows.push_back({o, e, "e_" + I->object_name(o)});
    ConeCat out;
    out.apex = e;
    out.cat = share(FinCat::make(std::move(names), std::move(arrows), [&](uint32_t g, uint32_t f) -> uint32_t {
        // a leg after anything is the leg at the source
        if (g >= first_leg) return first_leg + (f < n ? f : I->src(unshift(f)));
        return shift(I->compose(unshift(g), unshift(f)));
    }));
    out.inclusion = Functor{I, out.cat, {}, {}};
    for (uint32_t o = 0; o < n; ++o) out.inclusion.obj.push_back(o);
    for (uint32_t m = 0; m < I->num_morphisms(); ++m) out.inclusion.mor.push_back(shift(m));
    return out;
}

namespace {

CommaCat comma(const Functor& f, uint32_t i, bool over) {
    const FinCat& J = *f.dom;
    const FinCat& I = *f.cod;
    CommaCat out;
    std::vector<std::string> names;
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> obj_id;
    for (uint32_t l = 0; l < J.num_objects(); ++l) {
        const auto& homs = over ? I.hom(f.obj[l], i) : I.hom(i, f.obj[l]);
        for (uint32_t u : homs) {
            obj_id[{l, u}] = static_cast<uint32_t>(out.label.size());
            out.label.push_back({l, u});
            names.push_back("(" + J.object_name(l) + "," + I.morphism_name(u) + ")");
        }
    }
    const auto n = static_cast<uint32_t>(names.size());
    std::vector<FinCat::Arrow> arrows;
    std::vector<uint32_t> under;  // morphism of J behind each non-identity arrow
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> mor_id;  // (source object, J-morphism)
    for (uint32_t a = 0; a < n; ++a) mor_id[{a, J.identity(out.label[a].first)}] = a;
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = 0; b < n; ++b) {
            auto [l, u] = out.label[a];
            auto [l2, u2] = out.label[b];
            for (uint32_t beta : J.hom(l, l2)) {
                bool ok = over ? I.compose(u2, f.mor[beta]) == u : I.compose(f.mor[beta], u) == u2;
                if (!ok || (a == b && J.is_identity(beta))) continue;
                mor_id[{a, beta}] = n + static_cast<uint32_t>(arrows.size());
                under.push_back(beta);
                arrows.push_back({a, b, J.morphism_name(beta) + "@" + names[a]});
            }
        }
    const auto beta_of = [&](uint32_t m) { return m < n ? J.identity(out.label[m].first) : under[m - n]; };
    const auto src_of = [&](uint32_t m) { return m < n ? m : arrows[m - n].src; };
    out.cat = share(FinCat::make(std::move(names), arrows, [&](uint32_t g, uint32_t f2) {
        return mor_id.at({src_of(f2), J.compose(beta_of(g), beta_of(f2))});
    }));
    out.projection = Functor{out.cat, f.dom, {}, {}};
    for (uint32_t a = 0; a < n; ++a) out.projection.obj.push_back(out.label[a].first);
    for (uint32_t m = 0; m < out.cat->num_morphisms(); ++m) out.projection.mor.push_back(beta_of(m));
    return out;
}

}  // namespace

CommaCat over_cat(const Functor& f, uint32_t i) { return comma(f, i, true); }
CommaCat under_cat(uint32_t i, const Functor& f) { return comma(f, i, false); }

std::vector<uint32_t> terminal_objects(const FinCat& C) {
    std::vector<uint32_t> out;
    for (uint32_t t = 0; t < C.num_objects(); ++t) {
        bool ok = true;
        for (uint32_t a = 0; ok && a < C.num_objects(); ++a) ok = C.hom(a, t).size() == 1;
        if (ok) out.push_back(t);
    }
    return out;
}

std::vector<uint32_t> initial_objects(const FinCat& C) {
    std::vector<uint32_t> out;
    for (uint32_t t = 0; t < C.num_objects(); ++t) {
        bool ok = true;
        for (uint32_t a = 0; ok && a < C.num_objects(); ++a) ok = C.hom(t, a).size() == 1;
        if (ok) out.push_back(t);
    }
    return out;
}

bool is_connected(const FinCat& C) {
    const size_t n = C.num_objects();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<uint32_t> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        uint32_t a = q.front();
        q.pop();
        for (uint32_t b = 0; b < n; ++b)
            if (!seen[b] && (!C.hom(a, b).empty() || !C.hom(b, a).empty())) {
                seen[b] = 1;
                q.push(b);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

void validate(const CatDiagram& H) {
    const FinCat& I = *H.base;
    if (H.fiber.size() != I.num_objects() || H.transition.size() != I.num_morphisms())
        throw std::invalid_argument("category diagram tables have the wrong size");
    for (uint32_t m = 0; m < I.num_morphisms(); ++m) {
        const Functor& t = H.transition[m];
        if (!(*t.dom == *H.fiber[I.src(m)]) || !(*t.cod == *H.fiber[I.tgt(m)]))
            throw std::invalid_argument("transition functor of " + I.morphism_name(m) + " has the wrong endpoints");
        validate(t);
        if (I.is_identity(m) && !(t == identity_functor(H.fiber[m])))
            throw std::invalid_argument("transition of an identity is not the identity functor");
    }
    for (uint32_t g = 0; g < I.num_morphisms(); ++g)
        for (uint32_t b = 0; b < I.num_objects(); ++b)
            for (uint32_t h : I.hom(I.tgt(g), b))
                if (!(H.transition[I.compose(h, g)] == compose(H.transition[h], H.transition[g])))
                    throw std::invalid_argument("transitions do not compose strictly at " + I.morphism_name(h) + " o " +
                                                I.morphism_name(g));
}

CatDiagram constant_cat_diagram(const CatPtr& base, const CatPtr& value) {
    CatDiagram H{base, std::vector<CatPtr>(base->num_objects(), value), {}};
    for (uint32_t m = 0; m < base->num_morphisms(); ++m) H.transition.push_back(identity_functor(value));
    return H;
}

uint32_t Grothendieck::morphism(uint32_t alpha, uint32_t h, uint32_t source_obj) const {
    return mor_index.at({alpha, h, source_obj});
}

Functor Grothendieck::fiber_inclusion(const CatDiagram& H, uint32_t i) const {
    const FinCat& Hi = *H.fiber[i];
    Functor f{H.fiber[i], cat, {}, {}};
    for (uint32_t a = 0; a < Hi.num_objects(); ++a) f.obj.push_back(object_id[i][a]);
    for (uint32_t h = 0; h < Hi.num_morphisms(); ++h)
        f.mor.push_back(morphism(H.base->identity(i), h, object_id[i][Hi.src(h)]));
    return f;
}

Grothendieck grothendieck(const CatDiagram& H) {
    validate(H);
    const FinCat& I = *H.base;
    Grothendieck G;
    std::vector<std::string> names;
    G.object_id.resize(I.num_objects());
    for (uint32_t i = 0; i < I.num_objects(); ++i)
        for (uint32_t a = 0; a < H.fiber[i]->num_objects(); ++a) {
            G.object_id[i].push_back(static_cast<uint32_t>(names.size()));
            G.label.push_back({i, a});
            names.push_back("(" + I.object_name(i) + "," + H.fiber[i]->object_name(a) + ")");
        }
    const auto n = static_cast<uint32_t>(names.size());
    struct Part {
        uint32_t alpha, h, src;
    };
    std::vector<Part> parts;
    std::vector<FinCat::Arrow> arrows;
    for (uint32_t x = 0; x < n; ++x) {
        auto [i, a] = G.label[x];
        G.mor_index[{I.identity(i), H.fiber[i]->identity(a), x}] = x;
    }
    for (uint32_t x = 0; x < n; ++x) {
        auto [i, a] = G.label[x];
        for (uint32_t j = 0; j < I.num_objects(); ++j)
            for (uint32_t alpha : I.hom(i, j)) {
                const FinCat& Hj = *H.fiber[j];
                const uint32_t image = H.transition[alpha].obj[a];
                for (uint32_t b = 0; b < Hj.num_objects(); ++b)
                    for (uint32_t h : Hj.hom(image, b)) {
                        if (I.is_identity(alpha) && Hj.is_identity(h)) continue;
                        const uint32_t y = G.object_id[j][b];
                        G.mor_index[{alpha, h, x}] = n + static_cast<uint32_t>(arrows.size());
                        parts.push_back({alpha, h, x});
                        arrows.push_back({x, y, "(" + I.morphism_name(alpha) + "," + Hj.morphism_name(h) + ")@" + names[x]});
                    }
            }
    }
    auto part = [&](uint32_t m) -> Part {
        if (m >= n) return parts[m - n];
        auto [i, a] = G.label[m];
        return {I.identity(i), H.fiber[i]->identity(a), m};
    };
    G.cat = share(FinCat::make(std::move(names), std::move(arrows), [&](uint32_t g, uint32_t f) {
        Part pf = part(f), pg = part(g);
        const uint32_t j2 = I.tgt(pg.alpha);
        // (alpha', h') o (alpha, h) = (alpha' alpha, h' o H(alpha')(h))
        const uint32_t moved = H.transition[pg.alpha].mor[pf.h];
        return G.mor_index.at({I.compose(pg.alpha, pf.alpha), H.fiber[j2]->compose(pg.h, moved), pf.src});
    }));
    G.projection = Functor{G.cat, H.base, {}, {}};
    for (uint32_t x = 0; x < n; ++x) G.projection.obj.push_back(G.label[x].first);
    for (uint32_t m = 0; m < G.cat->num_morphisms(); ++m) G.projection.mor.push_back(part(m).alpha);
    return G;
}

uint32_t Nerve::object(uint32_t s, int k) const {
    if (k == 0) return target[s];
    return cat->src(chain[s][k - 1]);
}

SimplexRef Nerve::locate(uint32_t i0, const std::vector<uint32_t>& alphas) const {
    std::vector<uint32_t> kept;
    uint32_t mask = 0;
    for (size_t k = 0; k < alphas.size(); ++k) {
        if (cat->is_identity(alphas[k]))
            mask |= 1u << k;
        else
            kept.push_back(alphas[k]);
    }
    const auto m = static_cast<uint8_t>(alphas.size());
    if (kept.empty()) return {index.at({i0}), m, mask};
    return {index.at(kept), m, mask};
}

Nerve nerve(const CatPtr& C) {
    auto lf = check_loop_free(*C);
    if (!lf.ok) throw std::invalid_argument("nerve needs a loop-free category: " + lf.message);
    Nerve N;
    N.cat = C;
    auto K = std::make_shared<SSet>();
    // vertices are keyed by the one-element vector {object}; higher simplices by their morphisms
    for (uint32_t o = 0; o < C->num_objects(); ++o) {
        N.index[{o}] = K->add(0, {});
        N.chain.push_back({});
        N.target.push_back(o);
    }
    std::vector<uint32_t> layer;
    for (uint32_t m = static_cast<uint32_t>(C->num_objects()); m < C->num_morphisms(); ++m) {
        std::vector<SimplexRef> faces{SimplexRef::nondeg(C->src(m), 0), SimplexRef::nondeg(C->tgt(m), 0)};
        uint32_t id = K->add(1, faces);
        N.index[{m}] = id;
        N.chain.push_back({m});
        N.target.push_back(C->tgt(m));
        layer.push_back(id);
    }
    // vertex keys are one-element vectors too; disambiguate edges from vertices by storing vertices first
    for (int dim = 2; !layer.empty(); ++dim) {
        std::vector<uint32_t> next;
        for (uint32_t s : layer) {
            const auto& ch = N.chain[s];
            const uint32_t top = C->src(ch.back());
            for (uint32_t b = 0; b < C->num_objects(); ++b)
                for (uint32_t a : C->hom(b, top)) {
                    if (C->is_identity(a)) continue;
                    std::vector<uint32_t> c = ch;
                    c.push_back(a);
                    std::vector<SimplexRef> faces;
                    const int m = static_cast<int>(c.size());
                    for (int k = 0; k <= m; ++k) {
                        std::vector<uint32_t> f;
                        if (k == 0) {
                            f.assign(c.begin() + 1, c.end());
                        } else if (k == m) {
                            f.assign(c.begin(), c.end() - 1);
                        } else {
                            f.assign(c.begin(), c.begin() + (k - 1));
                            f.push_back(C->compose(c[k - 1], c[k]));
                            f.insert(f.end(), c.begin() + k + 1, c.end());
                        }
                        faces.push_back(SimplexRef::nondeg(N.index.at(f), m - 1));
                    }
                    uint32_t id = K->add(m, std::move(faces));
                    N.index[c] = id;
                    N.chain.push_back(c);
                    N.target.push_back(C->tgt(c[0]));
                    next.push_back(id);
                }
        }
        layer = std::move(next);
    }
    N.space = K;
    return N;
}

SMap nerve_map(const Functor& f, const Nerve& dom, const Nerve& cod) {
    std::vector<SimplexRef> img(dom.space->size());
    for (uint32_t s = 0; s < img.size(); ++s) {
        std::vector<uint32_t> alphas;
        for (uint32_t a : dom.chain[s]) alphas.push_back(f.mor[a]);
        img[s] = cod.locate(f.obj[dom.target[s]], alphas);
    }
    return SMap(dom.space, cod.space, std::move(img), false);
}

const char* to_string(Terminality t) {
    switch (t) {
        case Terminality::certified: return "certified";
        case Terminality::evidence: return "evidence";
        case Terminality::refuted: return "refuted";
    }
    return "?";
}

TerminalityReport is_terminal_functor(const Functor& f) {
    TerminalityReport r;
    auto worse = [](Terminality a, Terminality b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; };
    for (uint32_t i = 0; i < f.cod->num_objects(); ++i) {
        CommaCat c = under_cat(i, f);
        const FinCat& C = *c.cat;
        std::pair<Terminality, std::string> v;
        if (C.num_objects() == 0) {
            v = {Terminality::refuted, "empty under-category"};
        } else if (!is_connected(C)) {
            v = {Terminality::refuted, "disconnected under-category"};
        } else if (!terminal_objects(C).empty()) {
            v = {Terminality::certified, "terminal object"};
        } else if (!initial_objects(C).empty()) {
            v = {Terminality::certified, "initial object"};
        } else {
            Nerve N = nerve(c.cat);
            bool acyclic = true;
            for (uint32_t p : {2u, 3u}) {
                auto b = homology(*N.space, p);
                for (size_t n = 0; n < b.size(); ++n) acyclic = acyclic && b[n] == (n == 0 ? 1u : 0u);
            }
            v = acyclic ? std::make_pair(Terminality::evidence, std::string("acyclic over F_2 and F_3"))
                        : std::make_pair(Terminality::refuted, std::string("nerve has nontrivial homology"));
        }
        r.verdict = worse(r.verdict, v.first);
        r.per_object.push_back(std::move(v));
    }
    return r;
}

std::string describe(const FinCat& C) {
    return std::to_string(C.num_objects()) + " objects, " + std::to_string(C.num_morphisms()) + " morphisms";
}

}  // namespace hocolim
