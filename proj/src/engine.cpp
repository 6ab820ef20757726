#include "hocolim/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hocolim {

namespace {

SMap boundary_of(const SSetPtr& K, uint32_t sigma) {
    const int n = K->dim(sigma);
    return compose(simplex_map(K, SimplexRef::nondeg(sigma, n)), boundary_inclusion(n));
}

// Position of the facet d_k of Delta[n] among the boundary simplices, for k = 0..n.
template <class V>
std::vector<size_t> facet_positions(const BoundaryColimit<V>& B, int n) {
    std::vector<size_t> out(n + 1, B.vertices.size());
    for (size_t b = 0; b < B.vertices.size(); ++b) {
        const auto& verts = B.vertices[b];
        if (static_cast<int>(verts.size()) != n) continue;
        int missing = n;
        for (int j = 0; j < n; ++j)
            if (verts[j] != j) {
                missing = j;
                break;
            }
        out[missing] = b;
    }
    return out;
}

template <class V>
std::vector<const typename V::Morphism*> pointers(const std::vector<typename V::Morphism>& maps) {
    std::vector<const typename V::Morphism*> out;
    out.reserve(maps.size());
    for (const auto& m : maps) out.push_back(&m);
    return out;
}

std::vector<uint32_t> processing_order(const SSet& K, bool reverse) {
    std::vector<uint32_t> out;
    for (int d = 0; d <= K.max_dim(); ++d) {
        std::vector<uint32_t> layer = K.of_dim(d);
        std::sort(layer.begin(), layer.end());
        if (reverse) std::reverse(layer.begin(), layer.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace

template <class V>
bool ReplacementResult<V>::cofibrant() const {
    return std::all_of(latching_cofibration.begin(), latching_cofibration.end(), [](bool b) { return b; });
}

template <class V>
bool ReplacementResult<V>::certified() const {
    if (certificate.size() != QF.value.size()) return false;
    return std::all_of(certificate.begin(), certificate.end(), [](const WeCertificate& c) { return c.positive; });
}

template <class V>
ReplacementResult<V> cofibrant_replacement(const V& v, const BoundedDiagram<V>& F, const ReplacementOptions& opt) {
    const CheckReport rep = check_bounded(v, F);
    if (!rep.ok) throw std::invalid_argument("cofibrant replacement of an unbounded diagram: " + rep.message);
    const SSetPtr& K = F.base;
    const size_t N = K->size();
    ReplacementResult<V> out;
    out.QF.base = K;
    out.QF.value.resize(N);
    out.QF.face.resize(N);
    out.eta.comp.resize(N);
    out.latching.resize(N);
    out.latching_cofibration.assign(N, false);
    out.boundary.resize(N);
    out.cell.resize(N);
    out.order = processing_order(*K, opt.reverse_within_dimension);

    for (uint32_t s : out.order) {
        const int n = K->dim(s);
        if (n == 0) {
            out.eta.comp[s] = v.cofibrant_replacement(F.value[s]);
            out.QF.value[s] = v.source(out.eta.comp[s]);
            out.boundary[s] = boundary_colimit(v, out.QF, s);
            out.latching[s] = v.induce(out.boundary[s].colimit, {}, out.QF.value[s]);
            out.latching_cofibration[s] = v.is_cofibration(out.latching[s]);
            continue;
        }
        out.boundary[s] = boundary_colimit(v, out.QF, s);
        const BoundaryColimit<V>& B = out.boundary[s];
        const SMap along = boundary_of(K, s);
        const SimplexRef top = SimplexRef::nondeg(s, n);
        std::vector<typename V::Morphism> into_F;
        for (size_t b = 0; b < B.vertices.size(); ++b)
            into_F.push_back(v.compose(face_operator(v, F, top, B.vertices[b]), out.eta.comp[along.image(b).base]));
        typename V::Morphism to_F = v.induce(B.colimit, pointers<V>(into_F), F.value[s]);

        if (opt.keep_cofibrant_cells && v.is_cofibration(to_F)) {
            out.QF.value[s] = F.value[s];
            out.eta.comp[s] = v.identity(F.value[s]);
            out.latching[s] = to_F;
        } else {
            auto fac = v.factor(to_F);
            out.QF.value[s] = fac.mid;
            out.eta.comp[s] = fac.q;
            out.latching[s] = fac.i;
            out.cell[s] = std::move(fac);
        }
        out.latching_cofibration[s] = v.is_cofibration(out.latching[s]);
        const auto facets = facet_positions(B, n);
        for (int k = 0; k <= n; ++k) out.QF.face[s].push_back(v.compose(out.latching[s], B.colimit.legs[facets[k]]));
    }
    if (opt.certify)
        for (uint32_t s = 0; s < N; ++s) out.certificate.push_back(v.certificate(out.eta.comp[s]));
    return out;
}

template <class V>
DiagMap<V> replacement_map(const V& v, const ReplacementResult<V>& RF, const ReplacementResult<V>& RG,
                           const DiagMap<V>& psi) {
    const SSetPtr& K = RF.QF.base;
    if (RG.QF.base != K && !(*RG.QF.base == *K)) throw std::invalid_argument("replacement map across different bases");
    DiagMap<V> out;
    out.comp.resize(K->size());
    for (uint32_t s : RF.order) {
        if (K->dim(s) == 0 || (!RF.cell[s] && !RG.cell[s])) {
            out.comp[s] = psi.comp[s];
            continue;
        }
        if (!RF.cell[s] || !RG.cell[s])
            throw std::invalid_argument("replacement map needs replacements built without kept cells");
        const DiagMap<V> restricted = pullback_diag_map(v, boundary_of(K, s), out);
        const auto a = colim_map(v, RF.boundary[s].colimit, RG.boundary[s].colimit, RF.boundary[s].restricted, restricted);
        out.comp[s] = v.factor_map(*RF.cell[s], *RG.cell[s], a, psi.comp[s]);
    }
    return out;
}

template <class V>
DiagramFactorization<V> factor_diagram_map(const V& v, const BoundedDiagram<V>& F, const BoundedDiagram<V>& G,
                                           const DiagMap<V>& psi) {
    const SSetPtr& K = F.base;
    const size_t N = K->size();
    DiagramFactorization<V> out;
    out.M.base = K;
    out.M.value.resize(N);
    out.M.face.resize(N);
    out.i.comp.resize(N);
    out.q.comp.resize(N);
    for (uint32_t s : processing_order(*K, false)) {
        const int n = K->dim(s);
        if (n == 0) {
            auto fac = v.factor(psi.comp[s]);
            out.M.value[s] = fac.mid;
            out.i.comp[s] = fac.i;
            out.q.comp[s] = fac.q;
            continue;
        }
        const SMap along = boundary_of(K, s);
        const SimplexRef top = SimplexRef::nondeg(s, n);
        const Latching<V> LF = latching(v, F, s);
        const BoundaryColimit<V> BM = boundary_colimit(v, out.M, s);
        const auto between = colim_map(v, LF.boundary.colimit, BM.colimit, LF.boundary.restricted,
                                       pullback_diag_map(v, along, out.i));
        // P = F(s) + L_s M over L_s F
        std::vector<const typename V::Object*> objects{&LF.boundary.colimit.apex, &F.value[s], &BM.colimit.apex};
        const typename V::Colimit P = v.colimit(objects, {{0, 1, &LF.map}, {0, 2, &between}});

        std::vector<typename V::Morphism> into_G;
        for (size_t b = 0; b < BM.vertices.size(); ++b)
            into_G.push_back(v.compose(face_operator(v, G, top, BM.vertices[b]), out.q.comp[along.image(b).base]));
        const auto LM_to_G = v.induce(BM.colimit, pointers<V>(into_G), G.value[s]);
        const auto LF_to_G = v.compose(psi.comp[s], LF.map);
        const auto P_to_G = v.induce(P, {&LF_to_G, &psi.comp[s], &LM_to_G}, G.value[s]);

        auto fac = v.factor(P_to_G);
        out.M.value[s] = fac.mid;
        out.i.comp[s] = v.compose(fac.i, P.legs[1]);
        out.q.comp[s] = fac.q;
        const auto facets = facet_positions(BM, n);
        const auto from_LM = v.compose(fac.i, P.legs[2]);
        for (int k = 0; k <= n; ++k) out.M.face[s].push_back(v.compose(from_LM, BM.colimit.legs[facets[k]]));
    }
    return out;
}

template <class V>
Ocolim<V> ocolim(const V& v, const BoundedDiagram<V>& F, const ReplacementOptions& opt) {
    Ocolim<V> out;
    out.replacement = cofibrant_replacement(v, F, opt);
    out.colimit = colim_bounded(v, out.replacement.QF);
    return out;
}

template <class V>
Hocolim<V> homotopy_colimit(const V& v, const IndexedDiagram<V>& D, const ReplacementOptions& opt) {
    const CheckReport rep = check_indexed(v, D);
    if (!rep.ok) throw std::invalid_argument("hocolim of an invalid diagram: " + rep.message);
    Hocolim<V> out;
    out.nerve = nerve(D.cat);
    out.pulled = pullback_epsilon(v, out.nerve, D);
    out.result = ocolim(v, out.pulled, opt);
    return out;
}

namespace {

// (l, g) -> (l, u g) from f|j to f|j'.
Functor postcompose(const Functor& f, const CommaCat& from, const CommaCat& to, uint32_t u) {
    const FinCat& J = *f.cod;
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> index;
    for (uint32_t a = 0; a < to.label.size(); ++a) index[to.label[a]] = a;
    Functor T{from.cat, to.cat, {}, {}};
    for (const auto& [l, g] : from.label) T.obj.push_back(index.at({l, J.compose(u, g)}));
    for (uint32_t m = 0; m < from.cat->num_morphisms(); ++m) {
        const uint32_t beta = from.projection.mor[m];
        uint32_t hit = 0;
        bool found = false;
        for (uint32_t c : to.cat->hom(T.obj[from.cat->src(m)], T.obj[from.cat->tgt(m)]))
            if (to.projection.mor[c] == beta) {
                hit = c;
                found = true;
                break;
            }
        if (!found) throw std::logic_error("comma categories: no image for a morphism");
        T.mor.push_back(hit);
    }
    return T;
}

}  // namespace

template <class V>
KanHocolim<V> hocolim_kan(const V& v, const Functor& f, const IndexedDiagram<V>& D, const ReplacementOptions& opt) {
    const Nerve NI = nerve(f.dom);
    const ReplacementResult<V> R = cofibrant_replacement(v, pullback_epsilon(v, NI, D), opt);
    const FinCat& J = *f.cod;
    KanHocolim<V> out;
    out.diagram.cat = f.cod;
    std::vector<Nerve> nerves;
    for (uint32_t j = 0; j < J.num_objects(); ++j) {
        out.comma.push_back(over_cat(f, j));
        nerves.push_back(nerve(out.comma[j].cat));
        const SMap to_I = nerve_map(out.comma[j].projection, nerves[j], NI);
        out.colimits.push_back(colim_bounded(v, pullback_diagram(v, to_I, R.QF)));
        out.diagram.value.push_back(out.colimits[j].apex);
    }
    for (uint32_t u = 0; u < J.num_morphisms(); ++u) {
        const uint32_t a = J.src(u), b = J.tgt(u);
        if (J.is_identity(u)) {
            out.diagram.mor.push_back(v.identity(out.diagram.value[a]));
            continue;
        }
        const SMap T = nerve_map(postcompose(f, out.comma[a], out.comma[b], u), nerves[a], nerves[b]);
        std::vector<typename V::Morphism> legs;
        for (const auto& r : T.images()) legs.push_back(out.colimits[b].legs[r.base]);
        out.diagram.mor.push_back(v.induce(out.colimits[a], pointers<V>(legs), out.diagram.value[b]));
    }
    return out;
}

template <class V>
IndexedDiagram<V> hocolim_partial(const V& v, const ProductCat& P, const IndexedDiagram<V>& D, int axis) {
    if (axis != 0 && axis != 1) throw std::invalid_argument("axis must be 0 or 1");
    const CatPtr& A = axis == 1 ? P.pr1.cod : P.pr2.cod;  // kept
    const CatPtr& B = axis == 1 ? P.pr2.cod : P.pr1.cod;  // collapsed
    const auto obj_of = [&](uint32_t a, uint32_t b) { return axis == 1 ? P.object(a, b) : P.object(b, a); };
    const auto mor_of = [&](uint32_t alpha, uint32_t beta) {
        return axis == 1 ? P.morphism(alpha, beta) : P.morphism(beta, alpha);
    };
    const Nerve NB = nerve(B);
    ReplacementOptions opt;
    opt.keep_cofibrant_cells = false;
    opt.certify = false;

    std::vector<BoundedDiagram<V>> pulled;
    std::vector<ReplacementResult<V>> reps;
    std::vector<typename V::Colimit> colims;
    IndexedDiagram<V> out{A, {}, {}};
    for (uint32_t a = 0; a < A->num_objects(); ++a) {
        Functor at{B, P.cat, {}, {}};
        for (uint32_t b = 0; b < B->num_objects(); ++b) at.obj.push_back(obj_of(a, b));
        for (uint32_t beta = 0; beta < B->num_morphisms(); ++beta) at.mor.push_back(mor_of(A->identity(a), beta));
        pulled.push_back(pullback_epsilon(v, NB, restrict_diagram(D, at)));
        reps.push_back(cofibrant_replacement(v, pulled.back(), opt));
        colims.push_back(colim_bounded(v, reps.back().QF));
        out.value.push_back(colims.back().apex);
    }
    for (uint32_t u = 0; u < A->num_morphisms(); ++u) {
        const uint32_t a = A->src(u), a2 = A->tgt(u);
        if (A->is_identity(u)) {
            out.mor.push_back(v.identity(out.value[a]));
            continue;
        }
        DiagMap<V> psi;
        for (uint32_t s = 0; s < NB.space->size(); ++s) psi.comp.push_back(D.mor[mor_of(u, B->identity(NB.target[s]))]);
        const DiagMap<V> q = replacement_map(v, reps[a], reps[a2], psi);
        out.mor.push_back(colim_map(v, colims[a], colims[a2], reps[a].QF, q));
    }
    return out;
}

#define HOCOLIM_INSTANTIATE_ENGINE(V)                                                                                   \
    template struct ReplacementResult<V>;                                                                              \
    template ReplacementResult<V> cofibrant_replacement(const V&, const BoundedDiagram<V>&, const ReplacementOptions&); \
    template DiagMap<V> replacement_map(const V&, const ReplacementResult<V>&, const ReplacementResult<V>&,             \
                                        const DiagMap<V>&);                                                            \
    template DiagramFactorization<V> factor_diagram_map(const V&, const BoundedDiagram<V>&, const BoundedDiagram<V>&,  \
                                                        const DiagMap<V>&);                                            \
    template Ocolim<V> ocolim(const V&, const BoundedDiagram<V>&, const ReplacementOptions&);                          \
    template Hocolim<V> homotopy_colimit(const V&, const IndexedDiagram<V>&, const ReplacementOptions&);                        \
    template KanHocolim<V> hocolim_kan(const V&, const Functor&, const IndexedDiagram<V>&, const ReplacementOptions&);  \
    template IndexedDiagram<V> hocolim_partial(const V&, const ProductCat&, const IndexedDiagram<V>&, int);

HOCOLIM_INSTANTIATE_ENGINE(ChainValues)
HOCOLIM_INSTANTIATE_ENGINE(SSetValues)

}  // namespace hocolim
