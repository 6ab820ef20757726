#pragma once

#include <string>
#include <vector>

#include "hocolim/category.hpp"
#include "hocolim/simplicial.hpp"
#include "hocolim/values.hpp"

namespace hocolim {

// A bounded diagram over K in strongly bounded form: values on non-degenerate simplices,
// and for every (s, i) with dim s >= 1 a morphism value(base(d_i s)) -> value(s).
// Degeneracies act as identities by representation.
template <class V>
struct BoundedDiagram {
    SSetPtr base;
    std::vector<typename V::Object> value;
    std::vector<std::vector<typename V::Morphism>> face;
};

// Componentwise morphisms between diagrams over a common base.
template <class V>
struct DiagMap {
    std::vector<typename V::Morphism> comp;
};

// A functor from a finite category to the value category; one morphism per morphism id.
template <class V>
struct IndexedDiagram {
    CatPtr cat;
    std::vector<typename V::Object> value;
    std::vector<typename V::Morphism> mor;
};

// Coherence of double faces, shapes and endpoints; names the failing (s, i, j).
template <class V>
CheckReport check_bounded(const V& v, const BoundedDiagram<V>& F);
// Endpoints and naturality squares of Psi: F -> G.
template <class V>
CheckReport check_diag_map(const V& v, const BoundedDiagram<V>& F, const BoundedDiagram<V>& G, const DiagMap<V>& psi);
template <class V>
CheckReport check_indexed(const V& v, const IndexedDiagram<V>& D);

// The morphism F(base(d_i r)) -> F(base r) for any simplex r of the base.
template <class V>
typename V::Morphism structure(const V& v, const BoundedDiagram<V>& F, const SimplexRef& r, int i);
// F(base of the face of x spanned by `kept`) -> F(base x); `kept` is an increasing vertex list.
template <class V>
typename V::Morphism face_operator(const V& v, const BoundedDiagram<V>& F, const SimplexRef& x,
                                   const std::vector<int>& kept);

template <class V>
BoundedDiagram<V> constant_diagram(const V& v, const SSetPtr& K, const typename V::Object& X);
// f*F over the domain of f.
template <class V>
BoundedDiagram<V> pullback_diagram(const V& v, const SMap& f, const BoundedDiagram<V>& F);
template <class V>
DiagMap<V> pullback_diag_map(const V& v, const SMap& f, const DiagMap<V>& psi);
// Value F(i_0) on every chain; d_0 acts by F(alpha_1), the other faces by identities.
template <class V>
BoundedDiagram<V> pullback_epsilon(const V& v, const Nerve& N, const IndexedDiagram<V>& D);

template <class V>
IndexedDiagram<V> restrict_diagram(const IndexedDiagram<V>& D, const Functor& f);

// Coequalizer presentation: one summand per object, one relation per non-identity morphism.
template <class V>
typename V::Colimit cat_colim(const V& v, const IndexedDiagram<V>& D);
// Coequalizer presentation: one summand per non-degenerate simplex, one relation per face.
template <class V>
typename V::Colimit colim_bounded(const V& v, const BoundedDiagram<V>& F);
// Colimit by cell induction in order of dimension: one pushout per simplex along its latching object.
// Returns the apex with legs per simplex.
template <class V>
typename V::Colimit colim_cells(const V& v, const BoundedDiagram<V>& F);
// True iff the comparison from the coequalizer presentation to the cell induction is an isomorphism.
template <class V>
bool colim_cross_check(const V& v, const BoundedDiagram<V>& F);
// colim(psi) between colimits of diagrams over a common base.
template <class V>
typename V::Morphism colim_map(const V& v, const typename V::Colimit& from, const typename V::Colimit& to,
                               const BoundedDiagram<V>& F, const DiagMap<V>& psi);

// Colimit of sigma*F over the boundary of Delta[dim sigma], with the faces of sigma it records.
template <class V>
struct BoundaryColimit {
    BoundedDiagram<V> restricted;
    typename V::Colimit colimit;
    // Per simplex of the boundary: its increasing vertex list in Delta[n].
    std::vector<std::vector<int>> vertices;
};
template <class V>
BoundaryColimit<V> boundary_colimit(const V& v, const BoundedDiagram<V>& F, uint32_t sigma);

template <class V>
struct Latching {
    BoundaryColimit<V> boundary;
    typename V::Morphism map;  // L_sigma -> F(sigma)
};
template <class V>
Latching<V> latching(const V& v, const BoundedDiagram<V>& F, uint32_t sigma);
template <class V>
bool is_cofibrant(const V& v, const BoundedDiagram<V>& F);
// Only simplices sigma with f(sigma) non-degenerate are tested.
template <class V>
bool is_relative_cofibrant(const V& v, const BoundedDiagram<V>& F, const SMap& f);
// Tests the relative latching maps F(sigma) + L_sigma G over L_sigma F -> G(sigma).
template <class V>
bool is_cofibration(const V& v, const BoundedDiagram<V>& F, const BoundedDiagram<V>& G, const DiagMap<V>& psi);

// F over L is f-bounded iff for every sigma with f(sigma) = s_i xi the face morphisms
// F(d_i), F(d_{i+1}) into F(sigma) are isomorphisms.
template <class V>
bool is_f_bounded(const V& v, const BoundedDiagram<V>& F, const SMap& f);

// df(sigma) = L x_K Delta[n] along the simplex sigma: Delta[n] -> K; p1 maps it to L.
SPullback fiber_space(const SMap& f, uint32_t sigma);

template <class V>
struct KanExtension {
    BoundedDiagram<V> diagram;
    std::vector<SPullback> fibers;
    std::vector<typename V::Colimit> colimits;
};
template <class V>
KanExtension<V> kan_extension(const V& v, const SMap& f, const BoundedDiagram<V>& F);
// The unit F -> f*(f^k F).
template <class V>
DiagMap<V> kan_unit(const V& v, const SMap& f, const BoundedDiagram<V>& F, const KanExtension<V>& E);
// The counit f^k(f*G) -> G, where E = kan_extension(f, f*G).
template <class V>
DiagMap<V> kan_counit(const V& v, const SMap& f, const BoundedDiagram<V>& G, const KanExtension<V>& E);
// colim_L F -> colim_K f^k F.
template <class V>
typename V::Morphism kan_comparison(const V& v, const SMap& f, const BoundedDiagram<V>& F, const KanExtension<V>& E,
                                    const typename V::Colimit& over_L, const typename V::Colimit& over_K);

struct ReductionResult {
    SSetPtr red;
    SMap f_red;     // L -> red, an epimorphism
    SMap residual;  // red -> K, reduced
    std::vector<std::string> log;
};
// Collapses, one simplex at a time, every non-degenerate simplex sent to a degenerate one.
ReductionResult reduce_map(const SMap& f);

}  // namespace hocolim
