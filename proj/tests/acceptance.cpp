// Acceptance run: one line per criterion, exit status 1 if any criterion fails.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hocolim/verify.hpp"

using namespace hocolim;

namespace {

struct Criterion {
    int id;
    const char* name;
    double limit_ms;
    std::function<Report()> run;
    // Extra exact expectation on the first Betti row; empty when the report carries its own oracle.
    std::vector<size_t> expect = {};
};

std::string show(const std::vector<size_t>& b) {
    std::string out = "(";
    for (size_t i = 0; i < b.size(); ++i) out += (i ? ", " : "") + std::to_string(b[i]);
    return out + ")";
}

}  // namespace

int main() {
    const SuiteOptions o;
    const std::vector<Criterion> criteria = {
        {1, "terminal simplex leg is an isomorphism", 10e3, [&] { return suite_terminal_simplex(o); }},
        {2, "sphere colimit leg is an isomorphism", 10e3, [&] { return suite_sphere_colimit(o); }},
        {3, "ocolim over S^2 of the point is the point", 10e3, [] { return check_ocolim_sphere(); }, {1}},
        {4, "Kan extensions stay bounded and keep colimits", 10e3, [&] { return suite_kan_bounded(o); }},
        {5, "colimits across degeneracy pullbacks", 10e3, [&] { return suite_degeneracy_pullback(o); }},
        {6, "reduction of maps and the Kan round trip", 10e3, [&] { return suite_reduction(o); }},
        {7, "epsilon pullback computes the categorical colimit", 10e3, [&] { return suite_epsilon_cofinality(o); }},
        {8, "hocolim over a poset with terminal object", 10e3, [&] { return suite_terminal_hocolim(o, false); }},
        {9, "homotopy pushout of point <- S^1 -> point", 10e3, [] { return check_homotopy_pushout(); }, {1, 0, 1}},
        {10, "hocolim of the point is the classifying space", 10e3, [&] { return suite_classifying_space(o); }},
        {11, "Grothendieck construction against hocolim of fibers", 60e3, [&] { return suite_thomason(o); }},
        {12, "hocolim over a product against iterated hocolims", 10e3, [&] { return suite_fubini(o); }},
        {13, "colimits of cofibrations and weak equivalences", 10e3, [&] { return suite_cofibration_colimit(o); }},
        {14, "determinism and homotopy invariance", 10e3, [&] { return suite_terminal_hocolim(o, true); }},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::string why;
        Report r;
        try {
            r = c.run();
            if (!r.verdict) why = r.detail.empty() ? "negative verdict" : r.detail;
            if (why.empty() && !c.expect.empty() && (r.betti.empty() || r.betti.front().second != c.expect))
                why = "Betti table " + (r.betti.empty() ? std::string("missing") : show(r.betti.front().second)) +
                      ", expected " + show(c.expect);
            if (why.empty() && r.ms > c.limit_ms) why = "over the time limit";
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const bool pass = why.empty();
        failed += pass ? 0 : 1;
        std::printf("[%s] %2d %-52s %9.1f ms (limit %.0f s) %s\n", pass ? "PASS" : "FAIL", c.id, c.name, r.ms,
                    c.limit_ms / 1e3, pass ? r.detail.c_str() : why.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
