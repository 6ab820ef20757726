#pragma once

#include <optional>
#include <vector>

#include "hocolim/category.hpp"
#include "hocolim/diagram.hpp"
#include "hocolim/values.hpp"

namespace hocolim {

struct ReplacementOptions {
    // Cells within one dimension are independent; the order only changes the traversal.
    bool reverse_within_dimension = false;
    // Keep F(sigma) with eta = identity when its latching map is already a cofibration.
    // Must be off when replacement maps between diagrams are needed.
    bool keep_cofibrant_cells = true;
    // Compute a weak-equivalence certificate for every component of eta.
    bool certify = true;
};

template <class V>
struct ReplacementResult {
    BoundedDiagram<V> QF;
    DiagMap<V> eta;  // QF -> F
    std::vector<typename V::Morphism> latching;  // L_sigma QF -> QF(sigma)
    std::vector<bool> latching_cofibration;
    std::vector<WeCertificate> certificate;  // of eta, empty unless certified
    std::vector<uint32_t> order;
    // Retained per simplex for replacement maps; cell[s] is empty where F(s) was kept.
    std::vector<BoundaryColimit<V>> boundary;
    std::vector<std::optional<typename V::Factorization>> cell;

    bool cofibrant() const;
    bool certified() const;
};

// Cells in increasing dimension: QF(sigma) = Cyl(L_sigma QF -> F(sigma)), vertices kept as they are.
// Throws on unbounded input.
template <class V>
ReplacementResult<V> cofibrant_replacement(const V& v, const BoundedDiagram<V>& F, const ReplacementOptions& opt = {});

// Q(psi): QF -> QG for psi: F -> G; both replacements built without kept cells.
// Relies on vertex replacement being the identity in both value categories.
template <class V>
DiagMap<V> replacement_map(const V& v, const ReplacementResult<V>& RF, const ReplacementResult<V>& RG,
                           const DiagMap<V>& psi);

// psi: F -> G factored as a cofibration F -> M followed by an objectwise weak equivalence M -> G.
template <class V>
struct DiagramFactorization {
    BoundedDiagram<V> M;
    DiagMap<V> i;
    DiagMap<V> q;
};
template <class V>
DiagramFactorization<V> factor_diagram_map(const V& v, const BoundedDiagram<V>& F, const BoundedDiagram<V>& G,
                                           const DiagMap<V>& psi);

template <class V>
struct Ocolim {
    ReplacementResult<V> replacement;
    typename V::Colimit colimit;
    const typename V::Object& value() const { return colimit.apex; }
};
template <class V>
Ocolim<V> ocolim(const V& v, const BoundedDiagram<V>& F, const ReplacementOptions& opt = {});

// ocolim over N(I) of the pullback along N(I) -> I. Throws unless I is loop-free.
template <class V>
struct Hocolim {
    Nerve nerve;
    BoundedDiagram<V> pulled;
    Ocolim<V> result;
    const typename V::Object& value() const { return result.colimit.apex; }
};
template <class V>
Hocolim<V> homotopy_colimit(const V& v, const IndexedDiagram<V>& D, const ReplacementOptions& opt = {});

// Homotopy left Kan extension along f: I -> J. The value at j is the colimit of QF pulled back
// along the reduced map N(f|j) -> N(I).
template <class V>
struct KanHocolim {
    IndexedDiagram<V> diagram;
    std::vector<CommaCat> comma;
    std::vector<typename V::Colimit> colimits;
};
template <class V>
KanHocolim<V> hocolim_kan(const V& v, const Functor& f, const IndexedDiagram<V>& D, const ReplacementOptions& opt = {});

// hocolim along one factor of a product, as a strict diagram over the other factor.
// axis 1 collapses the second factor (result over the first), axis 0 the first.
template <class V>
IndexedDiagram<V> hocolim_partial(const V& v, const ProductCat& P, const IndexedDiagram<V>& D, int axis);

}  // namespace hocolim
