#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hocolim/category.hpp"
#include "hocolim/chain.hpp"
#include "hocolim/diagram.hpp"
#include "hocolim/simplicial.hpp"

namespace hocolim {

// Draws use plain modulo reduction so that instances are identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : g_(seed) {}
    uint64_t next() { return g_(); }
    // Uniform-ish in [0, n).
    uint64_t below(uint64_t n) { return n ? g_() % n : 0; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1))); }
    bool coin(int num = 1, int den = 2) { return below(den) < static_cast<uint64_t>(num); }

private:
    std::mt19937_64 g_;
};

// A chain complex built as a direct sum of elementary pieces (F in one degree, or F --id--> F)
// followed by a random change of basis in every degree. The decomposition is kept so that
// random chain maps can be assembled from elementary blocks.
struct GenComplex {
    struct Piece {
        bool disk;  // true: F --id--> F from degree top to top-1
        int top;
    };
    ChainComplex complex;
    std::vector<Piece> pieces;
    // Per degree, the basis change B (standard -> presented) and its inverse, dense.
    std::vector<std::vector<std::vector<uint32_t>>> B, Binv;
    // Per degree, (piece index, which cell: 0 top, 1 bottom) of each standard basis vector.
    std::vector<std::vector<std::pair<size_t, int>>> cells;
};

GenComplex random_complex(Rng& rng, uint32_t p, int max_degree, int max_pieces);
// Random chain map between generated complexes; always commutes with the differentials.
ChainMap random_chain_map(Rng& rng, const GenComplex& X, const GenComplex& Y);
// A weakly equivalent enlargement X + (acyclic disks) together with the quasi-isomorphism onto X.
ChainMap random_acyclic_thickening(Rng& rng, const ChainComplex& X, int disks);

// A space together with a quotient map onto it from a coproduct of standard simplices,
// the pieces appearing in order with the given dimensions.
struct Presented {
    SSetPtr space;
    SMap quotient;
    std::vector<int> piece_dims;
};

// Finite simplicial set obtained by gluing standard simplices along random face identifications.
Presented random_presented_sset(Rng& rng, int max_dim, int max_cells);
SSetPtr random_sset(Rng& rng, int max_dim, int max_cells);
Presented presented_standard(int n);
// Delta[n] -> Delta[n] / boundary.
Presented presented_sphere(int n);
// Random map L -> K obtained by mapping standard simplices of L through random operators.
// When `domain` is given it receives the presentation of L.
SMap random_smap(Rng& rng, const SSetPtr& K, int max_dim, int max_cells, Presented* domain = nullptr);

// Random poset on n elements; each pair a < b (in index order) is related with probability num/den.
CatPtr random_poset(Rng& rng, int n, int num = 1, int den = 3);
// Random monotone functor between posets built by random_poset, or std::nullopt after a few failed draws.
std::optional<Functor> random_poset_functor(Rng& rng, const CatPtr& J, const CatPtr& I);

// Free category on a random acyclic graph on n objects, edges a -> b only for a < b,
// with up to max_parallel parallel edges; morphisms are the paths. Loop-free, usually not thin.
CatPtr random_free_category(Rng& rng, int n, int max_parallel = 2);
// H(i) = the subposet of a random universe poset on the elements of a set S_i with S_i inside S_j
// whenever there is a morphism i -> j; transitions are the inclusions.
CatDiagram random_cat_diagram(Rng& rng, const CatPtr& I, int universe);

// Functors on a poset built as sums of sequences X_0 -> ... -> X_k pulled back along
// random monotone maps to [k]; functorial by construction.
IndexedDiagram<ChainValues> random_indexed(Rng& rng, const ChainValues& v, const CatPtr& P, int max_degree = 2);
IndexedDiagram<SSetValues> random_indexed(Rng& rng, const SSetValues& v, const CatPtr& P);

// D' with D'(i) = D(i) + (acyclic disks) and the objectwise quasi-isomorphism D' -> D, natural by
// construction: D'(m) = inclusion o D(m) o projection for non-identity m.
struct Thickened {
    IndexedDiagram<ChainValues> diagram;
    std::vector<ChainMap> to_original;
};
Thickened random_weak_equivalent(Rng& rng, const IndexedDiagram<ChainValues>& D);

// Bounded diagram over a presented space: an epsilon-pullback from a random poset, pulled back
// along random simplices on each piece, then Kan-extended along the quotient.
template <class V>
BoundedDiagram<V> random_bounded(Rng& rng, const V& v, const Presented& K);

}  // namespace hocolim
