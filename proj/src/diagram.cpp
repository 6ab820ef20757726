#include "hocolim/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace hocolim {

namespace {

std::string ref_str(uint32_t s, int i, int j = -1) {
    std::string out = "(" + std::to_string(s) + ", " + std::to_string(i);
    if (j >= 0) out += ", " + std::to_string(j);
    return out + ")";
}

// theta(j) for the surjection encoded by a collapse mask.
int theta(uint32_t mask, int j) { return j - __builtin_popcount(mask & ((1u << j) - 1u)); }

std::vector<int> vertex_list(const SSet& D, const SimplexRef& r) {
    std::vector<int> out;
    for (int j = 0; j <= r.dim; ++j) out.push_back(static_cast<int>(D.vertex(r, j)));
    return out;
}

}  // namespace

template <class V>
typename V::Morphism structure(const V& v, const BoundedDiagram<V>& F, const SimplexRef& r, int i) {
    if (r.dim < 1 || i < 0 || i > r.dim) throw std::invalid_argument("face index out of range");
    // d_i of s.tau stays on tau when i is collapsed together with a neighbour
    const bool left = i > 0 && (r.mask >> (i - 1) & 1u);
    const bool right = i < r.dim && (r.mask >> i & 1u);
    if (left || right) return v.identity(F.value[r.base]);
    return F.face[r.base][theta(r.mask, i)];
}

template <class V>
typename V::Morphism face_operator(const V& v, const BoundedDiagram<V>& F, const SimplexRef& x,
                                   const std::vector<int>& kept) {
    const SSet& K = *F.base;
    typename V::Morphism acc = v.identity(F.value[x.base]);
    SimplexRef r = x;
    size_t k = kept.size();
    for (int j = x.dim; j >= 0; --j) {
        if (k > 0 && kept[k - 1] == j) {
            --k;
            continue;
        }
        acc = v.compose(acc, structure(v, F, r, j));
        r = K.face(r, j);
    }
    return acc;
}

template <class V>
CheckReport check_bounded(const V& v, const BoundedDiagram<V>& F) {
    const SSet& K = *F.base;
    if (F.value.size() != K.size() || F.face.size() != K.size()) return {false, "diagram tables have the wrong size"};
    for (uint32_t s = 0; s < K.size(); ++s) {
        const int n = K.dim(s);
        if (F.face[s].size() != static_cast<size_t>(n >= 1 ? n + 1 : 0))
            return {false, "simplex " + std::to_string(s) + " has the wrong number of face morphisms"};
        for (int i = 0; n >= 1 && i <= n; ++i) {
            const auto& m = F.face[s][i];
            if (!v.same_object(v.source(m), F.value[K.face(s, i).base]) || !v.same_object(v.target(m), F.value[s]))
                return {false, "face morphism " + ref_str(s, i) + " has the wrong endpoints"};
        }
    }
    for (uint32_t s = 0; s < K.size(); ++s) {
        const int n = K.dim(s);
        for (int j = 1; n >= 2 && j <= n; ++j)
            for (int i = 0; i < j; ++i) {
                auto a = v.compose(F.face[s][j], structure(v, F, K.face(s, j), i));
                auto b = v.compose(F.face[s][i], structure(v, F, K.face(s, i), j - 1));
                if (!v.equal(a, b)) return {false, "double faces disagree at " + ref_str(s, i, j)};
            }
    }
    return {};
}

template <class V>
CheckReport check_diag_map(const V& v, const BoundedDiagram<V>& F, const BoundedDiagram<V>& G, const DiagMap<V>& psi) {
    const SSet& K = *F.base;
    if (psi.comp.size() != K.size()) return {false, "map has the wrong number of components"};
    for (uint32_t s = 0; s < K.size(); ++s) {
        if (!v.same_object(v.source(psi.comp[s]), F.value[s]) || !v.same_object(v.target(psi.comp[s]), G.value[s]))
            return {false, "component " + std::to_string(s) + " has the wrong endpoints"};
        for (int i = 0; K.dim(s) >= 1 && i <= K.dim(s); ++i) {
            const uint32_t b = K.face(s, i).base;
            if (!v.equal(v.compose(psi.comp[s], F.face[s][i]), v.compose(G.face[s][i], psi.comp[b])))
                return {false, "naturality fails at " + ref_str(s, i)};
        }
    }
    return {};
}

template <class V>
CheckReport check_indexed(const V& v, const IndexedDiagram<V>& D) {
    const FinCat& I = *D.cat;
    if (D.value.size() != I.num_objects() || D.mor.size() != I.num_morphisms())
        return {false, "indexed diagram tables have the wrong size"};
    for (uint32_t m = 0; m < I.num_morphisms(); ++m) {
        if (!v.same_object(v.source(D.mor[m]), D.value[I.src(m)]) || !v.same_object(v.target(D.mor[m]), D.value[I.tgt(m)]))
            return {false, "morphism " + I.morphism_name(m) + " has the wrong endpoints"};
        if (I.is_identity(m) && !v.equal(D.mor[m], v.identity(D.value[m])))
            return {false, "identity of " + I.object_name(m) + " is not sent to an identity"};
    }
    for (uint32_t g = 0; g < I.num_morphisms(); ++g)
        for (uint32_t b = 0; b < I.num_objects(); ++b)
            for (uint32_t h : I.hom(I.tgt(g), b))
                if (!v.equal(D.mor[I.compose(h, g)], v.compose(D.mor[h], D.mor[g])))
                    return {false, "composite " + I.morphism_name(h) + " o " + I.morphism_name(g) + " is not preserved"};
    return {};
}

template <class V>
BoundedDiagram<V> constant_diagram(const V& v, const SSetPtr& K, const typename V::Object& X) {
    BoundedDiagram<V> F{K, std::vector<typename V::Object>(K->size(), X), {}};
    F.face.resize(K->size());
    const auto id = v.identity(X);
    for (uint32_t s = 0; s < K->size(); ++s)
        if (K->dim(s) >= 1) F.face[s].assign(K->dim(s) + 1, id);
    return F;
}

template <class V>
BoundedDiagram<V> pullback_diagram(const V& v, const SMap& f, const BoundedDiagram<V>& F) {
    const SSet& L = f.domain();
    BoundedDiagram<V> G{f.domain_ptr(), {}, {}};
    G.value.reserve(L.size());
    G.face.resize(L.size());
    for (uint32_t x = 0; x < L.size(); ++x) {
        const SimplexRef& r = f.image(x);
        G.value.push_back(F.value[r.base]);
        for (int i = 0; L.dim(x) >= 1 && i <= L.dim(x); ++i) G.face[x].push_back(structure(v, F, r, i));
    }
    return G;
}

template <class V>
DiagMap<V> pullback_diag_map(const V&, const SMap& f, const DiagMap<V>& psi) {
    DiagMap<V> out;
    for (const auto& r : f.images()) out.comp.push_back(psi.comp[r.base]);
    return out;
}

template <class V>
BoundedDiagram<V> pullback_epsilon(const V& v, const Nerve& N, const IndexedDiagram<V>& D) {
    const SSet& K = *N.space;
    BoundedDiagram<V> F{N.space, {}, {}};
    F.face.resize(K.size());
    for (uint32_t s = 0; s < K.size(); ++s) {
        F.value.push_back(D.value[N.target[s]]);
        const int n = K.dim(s);
        if (n == 0) continue;
        F.face[s].push_back(D.mor[N.chain[s][0]]);
        const auto id = v.identity(F.value[s]);
        for (int i = 1; i <= n; ++i) F.face[s].push_back(id);
    }
    return F;
}

template <class V>
IndexedDiagram<V> restrict_diagram(const IndexedDiagram<V>& D, const Functor& f) {
    IndexedDiagram<V> out{f.dom, {}, {}};
    for (uint32_t o : f.obj) out.value.push_back(D.value[o]);
    for (uint32_t m : f.mor) out.mor.push_back(D.mor[m]);
    return out;
}

template <class V>
typename V::Colimit cat_colim(const V& v, const IndexedDiagram<V>& D) {
    const FinCat& I = *D.cat;
    std::vector<const typename V::Object*> objects;
    for (const auto& x : D.value) objects.push_back(&x);
    std::vector<typename V::Arrow> arrows;
    for (uint32_t m = static_cast<uint32_t>(I.num_objects()); m < I.num_morphisms(); ++m)
        arrows.push_back({I.src(m), I.tgt(m), &D.mor[m]});
    return v.colimit(objects, arrows);
}

template <class V>
typename V::Colimit colim_bounded(const V& v, const BoundedDiagram<V>& F) {
    const SSet& K = *F.base;
    std::vector<const typename V::Object*> objects;
    for (const auto& x : F.value) objects.push_back(&x);
    std::vector<typename V::Arrow> arrows;
    for (uint32_t s = 0; s < K.size(); ++s)
        for (int i = 0; K.dim(s) >= 1 && i <= K.dim(s); ++i) arrows.push_back({K.face(s, i).base, s, &F.face[s][i]});
    return v.colimit(objects, arrows);
}

template <class V>
typename V::Morphism colim_map(const V& v, const typename V::Colimit& from, const typename V::Colimit& to,
                               const BoundedDiagram<V>& F, const DiagMap<V>& psi) {
    std::vector<typename V::Morphism> maps;
    maps.reserve(F.value.size());
    for (size_t s = 0; s < F.value.size(); ++s) maps.push_back(v.compose(to.legs[s], psi.comp[s]));
    std::vector<const typename V::Morphism*> ptrs;
    for (const auto& m : maps) ptrs.push_back(&m);
    return v.induce(from, ptrs, to.apex);
}

template <class V>
BoundaryColimit<V> boundary_colimit(const V& v, const BoundedDiagram<V>& F, uint32_t sigma) {
    const int n = F.base->dim(sigma);
    BoundaryColimit<V> out;
    if (n == 0) {
        out.restricted.base = empty_sset();
        out.colimit = v.colimit({}, {});
        return out;
    }
    SMap incl = boundary_inclusion(n);
    SMap along = compose(simplex_map(F.base, SimplexRef::nondeg(sigma, n)), incl);
    out.restricted = pullback_diagram(v, along, F);
    out.colimit = colim_bounded(v, out.restricted);
    const SSet& D = incl.codomain();
    for (const auto& r : incl.images()) out.vertices.push_back(vertex_list(D, r));
    return out;
}

template <class V>
Latching<V> latching(const V& v, const BoundedDiagram<V>& F, uint32_t sigma) {
    Latching<V> out{boundary_colimit(v, F, sigma), {}};
    const int n = F.base->dim(sigma);
    std::vector<typename V::Morphism> maps;
    for (const auto& verts : out.boundary.vertices) maps.push_back(face_operator(v, F, SimplexRef::nondeg(sigma, n), verts));
    std::vector<const typename V::Morphism*> ptrs;
    for (const auto& m : maps) ptrs.push_back(&m);
    out.map = v.induce(out.boundary.colimit, ptrs, F.value[sigma]);
    return out;
}

template <class V>
bool is_cofibrant(const V& v, const BoundedDiagram<V>& F) {
    for (uint32_t s = 0; s < F.base->size(); ++s)
        if (!v.is_cofibration(latching(v, F, s).map)) return false;
    return true;
}

template <class V>
bool is_relative_cofibrant(const V& v, const BoundedDiagram<V>& F, const SMap& f) {
    for (uint32_t s = 0; s < F.base->size(); ++s)
        if (f.image(s).nondegenerate() && !v.is_cofibration(latching(v, F, s).map)) return false;
    return true;
}

template <class V>
bool is_cofibration(const V& v, const BoundedDiagram<V>& F, const BoundedDiagram<V>& G, const DiagMap<V>& psi) {
    for (uint32_t s = 0; s < F.base->size(); ++s) {
        Latching<V> lf = latching(v, F, s);
        Latching<V> lg = latching(v, G, s);
        DiagMap<V> restricted;
        if (F.base->dim(s) > 0) {
            SMap along = compose(simplex_map(F.base, SimplexRef::nondeg(s, F.base->dim(s))), boundary_inclusion(F.base->dim(s)));
            restricted = pullback_diag_map(v, along, psi);
        }
        auto between = colim_map(v, lf.boundary.colimit, lg.boundary.colimit, lf.boundary.restricted, restricted);
        // M(s) = F(s) + L_s G over L_s F
        std::vector<const typename V::Object*> objects{&lf.boundary.colimit.apex, &F.value[s], &lg.boundary.colimit.apex};
        typename V::Colimit M = v.colimit(objects, {{0, 1, &lf.map}, {0, 2, &between}});
        auto on_l = v.compose(lg.map, between);
        std::vector<const typename V::Morphism*> maps{&on_l, &psi.comp[s], &lg.map};
        if (!v.is_cofibration(v.induce(M, maps, G.value[s]))) return false;
    }
    return true;
}

template <class V>
bool is_f_bounded(const V& v, const BoundedDiagram<V>& F, const SMap& f) {
    const SSet& L = *F.base;
    for (uint32_t s = 0; s < L.size(); ++s) {
        const SimplexRef& r = f.image(s);
        for (int i = 0; i + 1 <= L.dim(s); ++i)
            if ((r.mask >> i & 1u) && (!v.is_iso(F.face[s][i]) || !v.is_iso(F.face[s][i + 1]))) return false;
    }
    return true;
}

template <class V>
typename V::Colimit colim_cells(const V& v, const BoundedDiagram<V>& F) {
    const SSet& K = *F.base;
    typename V::Colimit acc = v.colimit({}, {});
    std::vector<typename V::Morphism> legs(K.size());
    std::vector<char> done(K.size(), 0);
    for (int n = 0; n <= K.max_dim(); ++n)
        for (uint32_t s : K.of_dim(n)) {
            Latching<V> lt = latching(v, F, s);
            // legs of the boundary colimit go to the legs of the already glued faces
            SMap along;
            std::vector<const typename V::Morphism*> ptrs;
            std::vector<typename V::Morphism> comps;
            if (n > 0) {
                along = compose(simplex_map(F.base, SimplexRef::nondeg(s, n)), boundary_inclusion(n));
                for (const auto& r : along.images()) comps.push_back(legs[r.base]);
                for (const auto& m : comps) ptrs.push_back(&m);
            }
            typename V::Morphism attach = v.induce(lt.boundary.colimit, ptrs, acc.apex);
            std::vector<const typename V::Object*> objects{&lt.boundary.colimit.apex, &acc.apex, &F.value[s]};
            typename V::Colimit next = v.colimit(objects, {{0, 1, &attach}, {0, 2, &lt.map}});
            for (uint32_t t = 0; t < K.size(); ++t)
                if (done[t]) legs[t] = v.compose(next.legs[1], legs[t]);
            legs[s] = next.legs[2];
            done[s] = 1;
            acc.apex = next.apex;
        }
    acc.legs = std::move(legs);
    return acc;
}

template <class V>
bool colim_cross_check(const V& v, const BoundedDiagram<V>& F) {
    auto a = colim_bounded(v, F);
    auto b = colim_cells(v, F);
    std::vector<const typename V::Morphism*> ptrs;
    for (const auto& m : b.legs) ptrs.push_back(&m);
    return v.is_iso(v.induce(a, ptrs, b.apex));
}

SPullback fiber_space(const SMap& f, uint32_t sigma) {
    const SSetPtr& K = f.codomain_ptr();
    return sset_pullback(f, simplex_map(K, SimplexRef::nondeg(sigma, K->dim(sigma))));
}

template <class V>
KanExtension<V> kan_extension(const V& v, const SMap& f, const BoundedDiagram<V>& F) {
    const SSetPtr& K = f.codomain_ptr();
    KanExtension<V> E;
    E.diagram.base = K;
    E.diagram.face.resize(K->size());
    for (uint32_t s = 0; s < K->size(); ++s) {
        E.fibers.push_back(fiber_space(f, s));
        auto local = pullback_diagram(v, E.fibers.back().p1, F);
        E.colimits.push_back(colim_bounded(v, local));
        E.diagram.value.push_back(E.colimits.back().apex);
    }
    for (uint32_t s = 0; s < K->size(); ++s) {
        const int n = K->dim(s);
        for (int i = 0; n >= 1 && i <= n; ++i) {
            const SimplexRef r = K->face(s, i);
            const int m = K->dim(r.base);
            // a section of the collapse of d_i s onto its base, followed by the i-th coface
            std::vector<int> g(m + 1, -1);
            for (int j = n - 1; j >= 0; --j) g[theta(r.mask, j)] = j < i ? j : j + 1;
            SMap gm = standard_map(m, n, g);
            SMap h = pullback_map(E.fibers[r.base], E.fibers[s], nullptr, &gm);
            std::vector<const typename V::Morphism*> ptrs;
            for (const auto& img : h.images()) ptrs.push_back(&E.colimits[s].legs[img.base]);
            E.diagram.face[s].push_back(v.induce(E.colimits[r.base], ptrs, E.diagram.value[s]));
        }
    }
    return E;
}

namespace {

// The simplex (x, s . iota) of df(base f(x)) that carries x.
SimplexRef carrier(const SMap& f, const SPullback& fiber, uint32_t x) {
    const SimplexRef& r = f.image(x);
    const int m = f.codomain().dim(r.base);
    std::vector<int> all(m + 1);
    for (int k = 0; k <= m; ++k) all[k] = k;
    const uint32_t top = standard_face_id(m, all);
    return fiber.locate(SimplexRef::nondeg(x, r.dim), {top, r.dim, r.mask});
}

}  // namespace

template <class V>
DiagMap<V> kan_unit(const V&, const SMap& f, const BoundedDiagram<V>& F, const KanExtension<V>& E) {
    DiagMap<V> out;
    for (uint32_t x = 0; x < F.base->size(); ++x) {
        const uint32_t t = f.image(x).base;
        out.comp.push_back(E.colimits[t].legs[carrier(f, E.fibers[t], x).base]);
    }
    return out;
}

template <class V>
DiagMap<V> kan_counit(const V& v, const SMap& f, const BoundedDiagram<V>& G, const KanExtension<V>& E) {
    (void)f;
    DiagMap<V> out;
    const SSet& K = *G.base;
    for (uint32_t s = 0; s < K.size(); ++s) {
        const SPullback& fib = E.fibers[s];
        const SSet& D = fib.p2.codomain();
        std::vector<typename V::Morphism> maps;
        for (uint32_t z = 0; z < fib.apex->size(); ++z) {
            std::vector<int> verts = vertex_list(D, fib.p2.image(z));
            verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
            maps.push_back(face_operator(v, G, SimplexRef::nondeg(s, K.dim(s)), verts));
        }
        std::vector<const typename V::Morphism*> ptrs;
        for (const auto& m : maps) ptrs.push_back(&m);
        out.comp.push_back(v.induce(E.colimits[s], ptrs, G.value[s]));
    }
    return out;
}

template <class V>
typename V::Morphism kan_comparison(const V& v, const SMap& f, const BoundedDiagram<V>& F, const KanExtension<V>& E,
                                    const typename V::Colimit& over_L, const typename V::Colimit& over_K) {
    DiagMap<V> unit = kan_unit(v, f, F, E);
    std::vector<typename V::Morphism> maps;
    for (uint32_t x = 0; x < F.base->size(); ++x) maps.push_back(v.compose(over_K.legs[f.image(x).base], unit.comp[x]));
    std::vector<const typename V::Morphism*> ptrs;
    for (const auto& m : maps) ptrs.push_back(&m);
    return v.induce(over_L, ptrs, over_K.apex);
}

ReductionResult reduce_map(const SMap& f) {
    const SSetPtr& K = f.codomain_ptr();
    ReductionResult out{f.domain_ptr(), identity(f.domain_ptr()), f, {}};
    for (;;) {
        const SSet& M = *out.red;
        std::optional<uint32_t> hit;
        for (int n = 1; !hit && n <= M.max_dim(); ++n)
            for (uint32_t s : M.of_dim(n))
                if (!out.residual.image(s).nondegenerate()) {
                    hit = s;
                    break;
                }
        if (!hit) break;
        const uint32_t s = *hit;
        const int n = M.dim(s);
        const SimplexRef r = out.residual.image(s);
        const int i = __builtin_ctz(r.mask);
        SMap at = simplex_map(out.red, SimplexRef::nondeg(s, n));
        SMap collapse = codegeneracy(n - 1, i);
        SColimit c = sset_colimit({at.domain_ptr(), out.red, collapse.codomain_ptr()}, {{0, 1, &at}, {0, 2, &collapse}});
        SMap on_simplex = compose(out.residual, at);
        SMap on_face = simplex_map(K, K->face(r, i));
        SMap residual = sset_induce(c, {&on_simplex, &out.residual, &on_face}, K);
        out.log.push_back("collapse simplex " + std::to_string(s) + " of dimension " + std::to_string(n) + " along s_" +
                          std::to_string(i));
        out.f_red = compose(c.legs[1], out.f_red);
        out.residual = std::move(residual);
        out.red = c.apex;
    }
    return out;
}

#define HOCOLIM_INSTANTIATE_DIAGRAM(V)                                                                                  \
    template typename V::Morphism structure(const V&, const BoundedDiagram<V>&, const SimplexRef&, int);               \
    template typename V::Morphism face_operator(const V&, const BoundedDiagram<V>&, const SimplexRef&,                 \
                                                const std::vector<int>&);                                              \
    template CheckReport check_bounded(const V&, const BoundedDiagram<V>&);                                            \
    template CheckReport check_diag_map(const V&, const BoundedDiagram<V>&, const BoundedDiagram<V>&,                  \
                                        const DiagMap<V>&);                                                            \
    template CheckReport check_indexed(const V&, const IndexedDiagram<V>&);                                            \
    template BoundedDiagram<V> constant_diagram(const V&, const SSetPtr&, const typename V::Object&);                  \
    template BoundedDiagram<V> pullback_diagram(const V&, const SMap&, const BoundedDiagram<V>&);                      \
    template DiagMap<V> pullback_diag_map(const V&, const SMap&, const DiagMap<V>&);                                   \
    template BoundedDiagram<V> pullback_epsilon(const V&, const Nerve&, const IndexedDiagram<V>&);                     \
    template IndexedDiagram<V> restrict_diagram(const IndexedDiagram<V>&, const Functor&);                             \
    template typename V::Colimit cat_colim(const V&, const IndexedDiagram<V>&);                                        \
    template typename V::Colimit colim_bounded(const V&, const BoundedDiagram<V>&);                                    \
    template typename V::Colimit colim_cells(const V&, const BoundedDiagram<V>&);                                      \
    template bool colim_cross_check(const V&, const BoundedDiagram<V>&);                                               \
    template typename V::Morphism colim_map(const V&, const typename V::Colimit&, const typename V::Colimit&,          \
                                            const BoundedDiagram<V>&, const DiagMap<V>&);                              \
    template BoundaryColimit<V> boundary_colimit(const V&, const BoundedDiagram<V>&, uint32_t);                        \
    template Latching<V> latching(const V&, const BoundedDiagram<V>&, uint32_t);                                       \
    template bool is_cofibrant(const V&, const BoundedDiagram<V>&);                                                    \
    template bool is_relative_cofibrant(const V&, const BoundedDiagram<V>&, const SMap&);                              \
    template bool is_cofibration(const V&, const BoundedDiagram<V>&, const BoundedDiagram<V>&, const DiagMap<V>&);     \
    template bool is_f_bounded(const V&, const BoundedDiagram<V>&, const SMap&);                                       \
    template KanExtension<V> kan_extension(const V&, const SMap&, const BoundedDiagram<V>&);                           \
    template DiagMap<V> kan_unit(const V&, const SMap&, const BoundedDiagram<V>&, const KanExtension<V>&);             \
    template DiagMap<V> kan_counit(const V&, const SMap&, const BoundedDiagram<V>&, const KanExtension<V>&);           \
    template typename V::Morphism kan_comparison(const V&, const SMap&, const BoundedDiagram<V>&,                      \
                                                 const KanExtension<V>&, const typename V::Colimit&,                   \
                                                 const typename V::Colimit&);

HOCOLIM_INSTANTIATE_DIAGRAM(ChainValues)
HOCOLIM_INSTANTIATE_DIAGRAM(SSetValues)

}  // namespace hocolim
