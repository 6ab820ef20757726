#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hocolim/simplicial.hpp"

namespace hocolim {

// Finite category. Morphism k < num_objects() is the identity of object k.
class FinCat {
public:
    struct Arrow {
        uint32_t src;
        uint32_t tgt;
        std::string name;
    };

    FinCat() = default;
    // `arrows` are the non-identity morphisms; they receive ids num_objects() + k.
    // `comp(g, f)` returns the id of g o f for composable ids; it is tabulated once.
    // Throws if the table is partial or points at a morphism with the wrong endpoints.
    static FinCat make(std::vector<std::string> objects, std::vector<Arrow> arrows,
                       const std::function<uint32_t(uint32_t g, uint32_t f)>& comp);

    size_t num_objects() const { return objects_.size(); }
    size_t num_morphisms() const { return mor_.size(); }
    const std::string& object_name(uint32_t o) const { return objects_[o]; }
    const std::string& morphism_name(uint32_t m) const { return mor_[m].name; }
    uint32_t src(uint32_t m) const { return mor_[m].src; }
    uint32_t tgt(uint32_t m) const { return mor_[m].tgt; }
    uint32_t identity(uint32_t o) const { return o; }
    bool is_identity(uint32_t m) const { return m < objects_.size(); }
    // g o f; requires tgt(f) == src(g).
    uint32_t compose(uint32_t g, uint32_t f) const;
    const std::vector<uint32_t>& hom(uint32_t a, uint32_t b) const;
    std::optional<uint32_t> find_object(const std::string& name) const;
    std::optional<uint32_t> find_morphism(const std::string& name) const;

    bool operator==(const FinCat& o) const {
        return objects_ == o.objects_ && comp_ == o.comp_ && same_arrows(o);
    }

private:
    bool same_arrows(const FinCat& o) const;
    std::vector<std::string> objects_;
    std::vector<Arrow> mor_;
    std::vector<int32_t> comp_;  // row g, column f
    std::vector<std::vector<uint32_t>> hom_;  // a * n + b
};

using CatPtr = std::shared_ptr<const FinCat>;

struct CheckReport {
    bool ok = true;
    std::string message;
};

// Associativity, unit laws and composite endpoints on the full table.
CheckReport check_fincat(const FinCat& C);
// Loop-free: only identities as endomorphisms and no cycles of non-identity morphisms.
CheckReport check_loop_free(const FinCat& C);
bool is_loop_free(const FinCat& C);

CatPtr empty_category();
CatPtr trivial_category();
CatPtr discrete_category(size_t n);
// Poset on 0..n-1 generated by the relations a <= b (one morphism a -> b); throws on cycles.
CatPtr poset_category(size_t n, const std::vector<std::pair<uint32_t, uint32_t>>& relations,
                      std::vector<std::string> names = {});
// The ordinal [n] = {0 -> 1 -> ... -> n}.
CatPtr ordinal(int n);
// left <- center -> right, objects in that order.
CatPtr pushout_shape();
// Two objects with two parallel non-identity arrows a -> b.
CatPtr parallel_arrows();
// A non-identity idempotent e o e = e on one object; not loop-free.
CatPtr idempotent_category();

struct Functor {
    CatPtr dom;
    CatPtr cod;
    std::vector<uint32_t> obj;
    std::vector<uint32_t> mor;

    bool operator==(const Functor& o) const { return obj == o.obj && mor == o.mor && *dom == *o.dom && *cod == *o.cod; }
};

// Preservation of endpoints, identities and composition; throws with the failing pair.
void validate(const Functor& f);
Functor compose(const Functor& g, const Functor& f);
Functor identity_functor(const CatPtr& C);
// * -> C picking the object i.
Functor object_inclusion(const CatPtr& C, uint32_t i);
// C -> *.
Functor to_point(const CatPtr& C);

CatPtr opposite(const CatPtr& C);
Functor opposite(const Functor& f, const CatPtr& dom_op, const CatPtr& cod_op);

struct ProductCat {
    CatPtr cat;  // object (i, j) has id i * |J| + j
    Functor pr1;
    Functor pr2;
    uint32_t object(uint32_t i, uint32_t j) const { return i * static_cast<uint32_t>(pr2.cod->num_objects()) + j; }
    uint32_t morphism(uint32_t a, uint32_t b) const;
    std::map<std::pair<uint32_t, uint32_t>, uint32_t> pair_index;
};
ProductCat product(const CatPtr& I, const CatPtr& J);

// Adds a terminal object e (the last object) with a unique arrow from every object.
struct ConeCat {
    CatPtr cat;
    Functor inclusion;
    uint32_t apex;
};
ConeCat cone_cat(const CatPtr& I);

// Comma categories with their projections to the domain of f.
struct CommaCat {
    CatPtr cat;
    Functor projection;
    // Per object: (object of the domain of f, structure morphism in the codomain).
    std::vector<std::pair<uint32_t, uint32_t>> label;
};
// f|i: objects (l, u: f(l) -> i).
CommaCat over_cat(const Functor& f, uint32_t i);
// i|f: objects (l, u: i -> f(l)).
CommaCat under_cat(uint32_t i, const Functor& f);

std::vector<uint32_t> terminal_objects(const FinCat& C);
std::vector<uint32_t> initial_objects(const FinCat& C);
bool is_connected(const FinCat& C);

// A strict functor from a finite category to finite categories.
struct CatDiagram {
    CatPtr base;
    std::vector<CatPtr> fiber;
    std::vector<Functor> transition;  // one per morphism of base, identities included
};
void validate(const CatDiagram& H);
CatDiagram constant_cat_diagram(const CatPtr& base, const CatPtr& value);

struct Grothendieck {
    CatPtr cat;
    Functor projection;
    // object (i, a) -> id
    std::vector<std::vector<uint32_t>> object_id;
    // per object of Gr: (i, a)
    std::vector<std::pair<uint32_t, uint32_t>> label;
    // Inclusion of the fiber over i.
    Functor fiber_inclusion(const CatDiagram& H, uint32_t i) const;
    // Morphism id of (alpha, h).
    uint32_t morphism(uint32_t alpha, uint32_t h_in_target_fiber, uint32_t source_obj) const;
    std::map<std::tuple<uint32_t, uint32_t, uint32_t>, uint32_t> mor_index;  // (alpha, h, source object)
};
Grothendieck grothendieck(const CatDiagram& H);

// Nerve of a loop-free category with the chain behind each non-degenerate simplex.
struct Nerve {
    CatPtr cat;
    SSetPtr space;
    // Non-identity morphisms alpha_1..alpha_m of the chain i_m -> ... -> i_0, with alpha_k: i_k -> i_{k-1}.
    std::vector<std::vector<uint32_t>> chain;
    // i_0 for every non-degenerate simplex.
    std::vector<uint32_t> target;

    // Object i_k of a non-degenerate simplex.
    uint32_t object(uint32_t s, int k) const;
    // EZ form of the chain i_m -> ... -> i_0 given by i_0 and the morphisms alpha_1..alpha_m (identities allowed).
    SimplexRef locate(uint32_t i0, const std::vector<uint32_t>& alphas) const;
    std::map<std::vector<uint32_t>, uint32_t> index;
};
// Throws if C is not loop-free, naming a witness.
Nerve nerve(const CatPtr& C);
// The simplicial map N(f): N(dom f) -> N(cod f).
SMap nerve_map(const Functor& f, const Nerve& dom, const Nerve& cod);

enum class Terminality { certified, evidence, refuted };
const char* to_string(Terminality t);
struct TerminalityReport {
    Terminality verdict = Terminality::certified;
    // Per object i of the codomain: the verdict for i|f and a short reason.
    std::vector<std::pair<Terminality, std::string>> per_object;
};
TerminalityReport is_terminal_functor(const Functor& f);

std::string describe(const FinCat& C);

}  // namespace hocolim
