#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hocolim/category.hpp"
#include "hocolim/diagram.hpp"
#include "hocolim/engine.hpp"

namespace hocolim {

// verdict is true iff every compared Betti table agrees and every required map is invertible.
struct Report {
    std::string claim;
    std::string citation;
    std::vector<std::string> inputs;
    std::vector<std::pair<std::string, std::vector<size_t>>> betti;
    bool verdict = false;
    std::string detail;
    double ms = 0;
};

// Thrown for inputs outside a claim's hypotheses; the CLI maps it to exit code 2.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// hocolim over I x J against both iterated hocolims.
template <class V>
Report verify_fubini(const V& v, const ProductCat& P, const IndexedDiagram<V>& D);

// hocolim over Gr H of F against hocolim over I of the homotopy Kan extension along Gr H -> I.
// Each value of the extension is also compared with hocolim over the fiber H(i).
template <class V>
Report verify_thomason(const V& v, const CatDiagram& H, const Grothendieck& G, const IndexedDiagram<V>& F);
// Homology of N(Gr H) against hocolim over I of i -> N(H(i)) computed with simplicial values.
Report verify_thomason_nerves(const CatDiagram& H, uint32_t p);

// Requires is_terminal_functor(f) to be certified.
template <class V>
Report verify_cofinality(const V& v, const Functor& f, const IndexedDiagram<V>& D);

// f^k F is bounded and colim_K f^k F <- colim_L F is an isomorphism.
template <class V>
Report verify_kan_bounded(const V& v, const SMap& f, const BoundedDiagram<V>& F);

// The residual map is reduced, f_red is onto, and for f-bounded F the unit F -> f_red* f_red^k F is invertible.
template <class V>
Report verify_reduction(const V& v, const SMap& f, const BoundedDiagram<V>& F);

// G over K extended to the cone CK by colim G at the apex; F = Q(extension) satisfies the
// hypotheses by construction and F(apex) -> colim F must be a weak equivalence.
template <class V>
Report verify_cone(const V& v, const BoundedDiagram<V>& G);

// Generated suites, one per acceptance criterion. Instances are drawn from Rng(seed).
struct SuiteOptions {
    uint64_t seed = 1;
    int instances = 0;  // 0 selects the default count
    uint32_t p = 2;
};
Report suite_terminal_simplex(const SuiteOptions& o);
Report suite_sphere_colimit(const SuiteOptions& o);
Report check_ocolim_sphere();
Report suite_kan_bounded(const SuiteOptions& o);
Report suite_degeneracy_pullback(const SuiteOptions& o);
Report suite_reduction(const SuiteOptions& o);
Report suite_epsilon_cofinality(const SuiteOptions& o);
// reversed: reverse the processing order and relabel the poset; weak: replace inputs by
// objectwise weakly equivalent diagrams. The Betti tables of every variant are compared.
Report suite_terminal_hocolim(const SuiteOptions& o, bool variants);
Report check_homotopy_pushout();
Report suite_classifying_space(const SuiteOptions& o);
Report suite_thomason(const SuiteOptions& o);
Report suite_fubini(const SuiteOptions& o);
Report suite_cofibration_colimit(const SuiteOptions& o);
Report suite_cofinality(const SuiteOptions& o);
Report suite_cone(const SuiteOptions& o);

}  // namespace hocolim
