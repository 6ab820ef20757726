#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hocolim/chain.hpp"

namespace hocolim {

constexpr int kMaxDim = 30;

// Weakly monotone surjection [m] -> [n], stored as the set of positions j < m with op(j) == op(j+1).
struct MonotoneSurjection {
    int m = 0;
    uint32_t mask = 0;

    int n() const { return m - __builtin_popcount(mask); }
    int operator()(int j) const { return j - __builtin_popcount(mask & ((1u << j) - 1)); }
    bool is_identity() const { return mask == 0; }
    std::vector<int> values() const;
    static MonotoneSurjection from_values(const std::vector<int>& v);
    static MonotoneSurjection identity(int m) { return {m, 0}; }
    bool operator==(const MonotoneSurjection&) const = default;
};

// outer o inner
MonotoneSurjection compose(const MonotoneSurjection& outer, const MonotoneSurjection& inner);

// A simplex in Eilenberg-Zilber form: op^*(base) with base non-degenerate.
struct SimplexRef {
    uint32_t base = 0;
    uint8_t dim = 0;
    uint32_t mask = 0;

    bool nondegenerate() const { return mask == 0; }
    int base_dim() const { return dim - __builtin_popcount(mask); }
    MonotoneSurjection op() const { return {dim, mask}; }
    static SimplexRef make(uint32_t base, const MonotoneSurjection& op) {
        return {base, static_cast<uint8_t>(op.m), op.mask};
    }
    static SimplexRef nondeg(uint32_t base, int dim) { return {base, static_cast<uint8_t>(dim), 0}; }
    auto operator<=>(const SimplexRef&) const = default;
};

struct SimplexRefHash {
    size_t operator()(const SimplexRef& r) const {
        uint64_t h = (static_cast<uint64_t>(r.base) << 32) ^ (static_cast<uint64_t>(r.dim) << 26) ^ r.mask;
        return std::hash<uint64_t>{}(h * 0x9E3779B97F4A7C15ull);
    }
};

// Finite simplicial set presented by its non-degenerate simplices and their faces.
class SSet {
public:
    size_t size() const { return dims_.size(); }
    int dim(uint32_t id) const { return dims_[id]; }
    int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<uint32_t>& of_dim(int d) const;
    size_t count(int d) const { return of_dim(d).size(); }
    // Position of id inside of_dim(dim(id)).
    uint32_t position(uint32_t id) const { return pos_[id]; }
    const SimplexRef& face(uint32_t id, int i) const { return faces_[id][i]; }

    // EZ form of d_i(x).
    SimplexRef face(const SimplexRef& x, int i) const;
    // EZ form of x o mu for a weakly monotone mu: [k] -> [dim x], given by its values.
    SimplexRef apply(const SimplexRef& x, const std::vector<int>& mu) const;
    // Vertex j of x.
    uint32_t vertex(const SimplexRef& x, int j) const;
    // All simplices of degree n, in deterministic order (by base id, then op).
    std::vector<SimplexRef> simplices(int n) const;

    // Appends a non-degenerate simplex; faces must reference existing simplices.
    uint32_t add(int dim, std::vector<SimplexRef> faces);
    // Checks face dimensions and the simplicial identities; throws with a witness.
    void validate() const;

    bool operator==(const SSet& o) const { return dims_ == o.dims_ && faces_ == o.faces_; }

private:
    std::vector<uint8_t> dims_;
    std::vector<uint32_t> pos_;
    std::vector<std::vector<SimplexRef>> faces_;
    std::vector<std::vector<uint32_t>> by_dim_;
};

using SSetPtr = std::shared_ptr<const SSet>;

class SMap {
public:
    SMap() = default;
    // Validates dimensions and face compatibility.
    SMap(SSetPtr dom, SSetPtr cod, std::vector<SimplexRef> image, bool check = true);

    const SSet& domain() const { return *dom_; }
    const SSet& codomain() const { return *cod_; }
    const SSetPtr& domain_ptr() const { return dom_; }
    const SSetPtr& codomain_ptr() const { return cod_; }
    const SimplexRef& image(uint32_t id) const { return image_[id]; }
    const std::vector<SimplexRef>& images() const { return image_; }
    SimplexRef apply(const SimplexRef& x) const;

    bool operator==(const SMap& o) const;

private:
    SSetPtr dom_;
    SSetPtr cod_;
    std::vector<SimplexRef> image_;
};

SMap identity(const SSetPtr& K);
SMap compose(const SMap& g, const SMap& f);
bool is_mono(const SMap& f);
bool is_epi(const SMap& f);
bool is_reduced(const SMap& f);
bool is_iso(const SMap& f);
SMap inverse(const SMap& f);
SMap empty_map(const SSetPtr& K);
SMap terminal_map(const SSetPtr& K);

SSetPtr empty_sset();
SSetPtr standard(int n);
SSetPtr boundary(int n);
SSetPtr horn(int n, int k);
SSetPtr sphere(int n);
// Id of the face of Delta[n] spanned by the given increasing vertex list.
uint32_t standard_face_id(int n, const std::vector<int>& vertices);
// The map Delta[dim x] -> K classifying the simplex x.
SMap simplex_map(const SSetPtr& K, const SimplexRef& x);
// Inclusion of the boundary into Delta[n], and of a horn.
SMap boundary_inclusion(int n);
SMap horn_inclusion(int n, int k);
// s_i : Delta[n+1] -> Delta[n] and d_i : Delta[n-1] -> Delta[n].
SMap codegeneracy(int n, int i);
SMap coface(int n, int i);
// Map Delta[k] -> Delta[n] given by vertex values.
SMap standard_map(int k, int n, const std::vector<int>& values);

struct SArrow {
    size_t src;
    size_t tgt;
    const SMap* map;
};

// Colimit of a graph-shaped diagram of simplicial sets.
struct SColimit {
    SSetPtr apex;
    std::vector<SMap> legs;
    // For each non-degenerate apex simplex, a (object, non-degenerate simplex) mapping onto it.
    std::vector<std::pair<size_t, uint32_t>> rep;
};
SColimit sset_colimit(const std::vector<SSetPtr>& objects, const std::vector<SArrow>& arrows);
// Map out of the colimit determined by a compatible family; throws if incompatible on representatives.
SMap sset_induce(const SColimit& c, const std::vector<const SMap*>& maps, const SSetPtr& target);
SColimit sset_pushout(const SMap& f, const SMap& g);
SColimit sset_coproduct(const std::vector<SSetPtr>& objects);

struct SPullback {
    SSetPtr apex;
    SMap p1;
    SMap p2;
    // EZ form of the pair (x, y) of simplices of equal degree with f(x) = g(y).
    SimplexRef locate(const SimplexRef& x, const SimplexRef& y) const;

    struct PairHash {
        size_t operator()(const std::pair<SimplexRef, SimplexRef>& p) const {
            SimplexRefHash h;
            return h(p.first) * 31 + h(p.second);
        }
    };
    std::unordered_map<std::pair<SimplexRef, SimplexRef>, uint32_t, PairHash> index;
};
SPullback sset_pullback(const SMap& f, const SMap& g);
SPullback sset_product(const SSetPtr& K, const SSetPtr& N);
// Map between pullbacks induced by maps over a common base: (x, y) -> (a(x), b(y)).
SMap pullback_map(const SPullback& from, const SPullback& to, const SMap* a, const SMap* b);

struct SCone {
    SSetPtr cone;
    SMap inclusion;
    uint32_t apex;
};
SCone cone(const SSetPtr& K);
// Same simplices with reversed vertex order.
SSetPtr opposite(const SSetPtr& K);
SMap opposite(const SMap& f, const SSetPtr& dom_op, const SSetPtr& cod_op);

std::optional<SMap> find_isomorphism(const SSetPtr& K, const SSetPtr& L);

ChainComplex chains(const SSet& K, uint32_t p);
ChainMap chain_map(const SMap& f, uint32_t p);
std::vector<size_t> homology(const SSet& K, uint32_t p);
WeCertificate induced_homology(const SMap& f, uint32_t p);

// Euler-style summary: number of non-degenerate simplices per dimension.
std::vector<size_t> cell_counts(const SSet& K);
std::string describe(const SimplexRef& r);

}  // namespace hocolim
