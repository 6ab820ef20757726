#include "hocolim/values.hpp"

namespace hocolim {

std::vector<size_t> trimmed(std::vector<size_t> b) {
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
}

ChainValues::Colimit ChainValues::colimit(const std::vector<const Object*>& objects,
                                          const std::vector<Arrow>& arrows) const {
    std::vector<ChainArrow> a;
    a.reserve(arrows.size());
    for (const auto& x : arrows) a.push_back({x.src, x.tgt, x.map});
    return chain_colimit(p_, objects, a);
}

std::vector<size_t> ChainValues::betti(const Object& X) const { return trimmed(hocolim::betti(X)); }

SSetValues::Colimit SSetValues::colimit(const std::vector<const Object*>& objects,
                                        const std::vector<Arrow>& arrows) const {
    std::vector<SSetPtr> obj;
    obj.reserve(objects.size());
    for (const auto* o : objects) obj.push_back(*o);
    std::vector<SArrow> a;
    a.reserve(arrows.size());
    for (const auto& x : arrows) a.push_back({x.src, x.tgt, x.map});
    return sset_colimit(obj, a);
}

namespace {

// X -> X x Delta[1] at the vertex e.
SMap end_inclusion(const SPullback& prod, const SSetPtr& X, int e) {
    const uint32_t v = standard_face_id(1, {e});
    std::vector<SimplexRef> img(X->size());
    for (uint32_t s = 0; s < img.size(); ++s) {
        const int n = X->dim(s);
        img[s] = prod.locate(SimplexRef::nondeg(s, n), {v, static_cast<uint8_t>(n), (1u << n) - 1u});
    }
    return SMap(X, prod.apex, std::move(img), false);
}

}  // namespace

SSetValues::Factorization SSetValues::factor(const Morphism& f) const {
    const SSetPtr& X = f.domain_ptr();
    const SSetPtr& Y = f.codomain_ptr();
    Factorization out;
    out.prod = sset_product(X, standard(1));
    SMap at1 = end_inclusion(out.prod, X, 1);
    out.glue = sset_colimit({X, out.prod.apex, Y}, {{0, 1, &at1}, {0, 2, &f}});
    out.mid = out.glue.apex;
    out.i = hocolim::compose(out.glue.legs[1], end_inclusion(out.prod, X, 0));
    SMap collapse = hocolim::compose(f, out.prod.p1);
    SMap idY = hocolim::identity(Y);
    out.q = sset_induce(out.glue, {&f, &collapse, &idY}, Y);
    return out;
}

SSetValues::Morphism SSetValues::factor_map(const Factorization& from, const Factorization& to, const Morphism& a,
                                            const Morphism& b) const {
    SMap interval = hocolim::identity(standard(1));
    SMap ab = pullback_map(from.prod, to.prod, &a, &interval);
    SMap on_x = hocolim::compose(to.glue.legs[0], a);
    SMap on_prod = hocolim::compose(to.glue.legs[1], ab);
    SMap on_y = hocolim::compose(to.glue.legs[2], b);
    return sset_induce(from.glue, {&on_x, &on_prod, &on_y}, to.mid);
}

std::vector<size_t> SSetValues::betti(const Object& X) const { return trimmed(homology(*X, p_)); }

}  // namespace hocolim
