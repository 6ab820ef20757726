#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hocolim/chain.hpp"
#include "hocolim/simplicial.hpp"

namespace hocolim {

// Value categories used by diagrams and the engine. Every instance provides:
//   Object, Morphism, Colimit, Factorization
//   initial, identity, compose, source, target, equal, same_object
//   colimit(objects, arrows), induce(colimit, maps, target)
//   is_cofibration, is_iso, certificate, factor, factor_map, betti
// A Colimit exposes `apex` and `legs`; a Factorization exposes `mid`, `i`, `q` with q i = f.

// Bounded chain complexes over F_p; cofibrations are degreewise injections,
// weak equivalences are quasi-isomorphisms.
class ChainValues {
public:
    using Object = ChainComplex;
    using Morphism = ChainMap;
    using Colimit = ChainColimit;
    using Factorization = ChainFactorization;
    struct Arrow {
        size_t src;
        size_t tgt;
        const Morphism* map;
    };

    explicit ChainValues(uint32_t p = 2) : p_(p) {}
    uint32_t p() const { return p_; }
    std::string tag() const { return "chain:f" + std::to_string(p_); }

    Object initial() const { return zero_complex(p_); }
    Morphism identity(const Object& X) const { return identity_map(X); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return hocolim::compose(g, f); }
    const Object& source(const Morphism& f) const { return f.source(); }
    const Object& target(const Morphism& f) const { return f.target(); }
    bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
    bool same_object(const Object& a, const Object& b) const { return a == b; }

    Colimit colimit(const std::vector<const Object*>& objects, const std::vector<Arrow>& arrows) const;
    Morphism induce(const Colimit& c, const std::vector<const Morphism*>& maps, const Object& target) const {
        return chain_induce(c, maps, target);
    }

    bool is_cofibration(const Morphism& f) const { return is_degreewise_injective(f); }
    bool is_iso(const Morphism& f) const { return is_degreewise_iso(f); }
    WeCertificate certificate(const Morphism& f) const { return we_certificate(f); }
    // Every object is cofibrant; kept as a hook for instances where this fails.
    Morphism cofibrant_replacement(const Object& X) const { return identity_map(X); }
    Factorization factor(const Morphism& f) const { return mapping_cylinder(f); }
    Morphism factor_map(const Factorization& from, const Factorization& to, const Morphism& a,
                        const Morphism& b) const {
        return cylinder_map(from, to, a, b);
    }
    std::vector<size_t> betti(const Object& X) const;

private:
    uint32_t p_;
};

// Finite simplicial sets; cofibrations are monomorphisms, weak equivalences are
// certified by F_p homology isomorphism (a necessary condition).
class SSetValues {
public:
    using Object = SSetPtr;
    using Morphism = SMap;
    using Colimit = SColimit;
    struct Factorization {
        Object mid;
        Morphism i;
        Morphism q;
        SPullback prod;  // X x Delta[1]
        SColimit glue;   // objects X, X x Delta[1], Y
    };
    struct Arrow {
        size_t src;
        size_t tgt;
        const Morphism* map;
    };

    explicit SSetValues(uint32_t p = 2) : p_(p) {}
    uint32_t p() const { return p_; }
    std::string tag() const { return "sset:f" + std::to_string(p_); }

    Object initial() const { return empty_sset(); }
    Morphism identity(const Object& X) const { return hocolim::identity(X); }
    Morphism compose(const Morphism& g, const Morphism& f) const { return hocolim::compose(g, f); }
    const Object& source(const Morphism& f) const { return f.domain_ptr(); }
    const Object& target(const Morphism& f) const { return f.codomain_ptr(); }
    bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
    bool same_object(const Object& a, const Object& b) const { return a == b || *a == *b; }

    Colimit colimit(const std::vector<const Object*>& objects, const std::vector<Arrow>& arrows) const;
    Morphism induce(const Colimit& c, const std::vector<const Morphism*>& maps, const Object& target) const {
        return sset_induce(c, maps, target);
    }

    bool is_cofibration(const Morphism& f) const { return is_mono(f); }
    bool is_iso(const Morphism& f) const { return hocolim::is_iso(f); }
    WeCertificate certificate(const Morphism& f) const { return induced_homology(f, p_); }
    Morphism cofibrant_replacement(const Object& X) const { return hocolim::identity(X); }
    // Cyl(f) = (X x Delta[1]) glued to Y along X x {1}; i is the inclusion at X x {0}.
    Factorization factor(const Morphism& f) const;
    Morphism factor_map(const Factorization& from, const Factorization& to, const Morphism& a,
                        const Morphism& b) const;
    std::vector<size_t> betti(const Object& X) const;

private:
    uint32_t p_;
};

// Homology with trailing zeros removed, so tables compare across representations.
std::vector<size_t> trimmed(std::vector<size_t> b);

}  // namespace hocolim
