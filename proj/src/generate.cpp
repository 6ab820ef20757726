#include "hocolim/generate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace hocolim {

namespace {

using Dense = std::vector<std::vector<uint32_t>>;

Dense dense_identity(size_t n) {
    Dense d(n, std::vector<uint32_t>(n, 0));
    for (size_t i = 0; i < n; ++i) d[i][i] = 1;
    return d;
}

Dense dense_mul(const Field& F, const Dense& a, const Dense& b, size_t inner, size_t cols) {
    Dense c(a.size(), std::vector<uint32_t>(cols, 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t t = 0; t < inner; ++t) {
            if (!a[i][t]) continue;
            for (size_t j = 0; j < cols; ++j) c[i][j] = F.add(c[i][j], F.mul(a[i][t], b[t][j]));
        }
    return c;
}

Matrix to_sparse(const Dense& d, size_t rows, size_t cols) {
    Matrix m(rows, cols);
    for (size_t j = 0; j < cols; ++j) {
        SparseVec c;
        for (size_t i = 0; i < rows; ++i)
            if (d[i][j]) c.push_back({static_cast<uint32_t>(i), d[i][j]});
        m.set_col(j, std::move(c));
    }
    return m;
}

// Index of the given cell of a piece in the standard basis of degree n, or -1.
long cell_index(const GenComplex& g, int n, size_t piece, int cell) {
    if (n < 0 || n >= static_cast<int>(g.cells.size())) return -1;
    for (size_t k = 0; k < g.cells[n].size(); ++k)
        if (g.cells[n][k] == std::make_pair(piece, cell)) return static_cast<long>(k);
    return -1;
}

}  // namespace

GenComplex random_complex(Rng& rng, uint32_t p, int max_degree, int max_pieces) {
    Field F(p);
    GenComplex g;
    const int count = rng.range(1, std::max(1, max_pieces));
    for (int k = 0; k < count; ++k) {
        bool disk = max_degree >= 1 && rng.coin();
        int top = disk ? rng.range(1, max_degree) : rng.range(0, max_degree);
        g.pieces.push_back({disk, top});
    }
    int top = 0;
    for (const auto& pc : g.pieces) top = std::max(top, pc.top);
    g.cells.assign(top + 1, {});
    for (size_t k = 0; k < g.pieces.size(); ++k) {
        g.cells[g.pieces[k].top].push_back({k, 0});
        if (g.pieces[k].disk) g.cells[g.pieces[k].top - 1].push_back({k, 1});
    }
    std::vector<size_t> dims(top + 1);
    for (int n = 0; n <= top; ++n) dims[n] = g.cells[n].size();

    g.B.resize(top + 1);
    g.Binv.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        const size_t d = dims[n];
        Dense B = dense_identity(d), Bi = dense_identity(d);
        for (size_t step = 0; d >= 2 && step < 2 * d; ++step) {
            size_t i = rng.below(d), j = rng.below(d - 1);
            if (j >= i) ++j;
            uint32_t c = static_cast<uint32_t>(1 + rng.below(p - 1));
            // B <- E B with E = I + c e_i e_j^T; Bi <- Bi E^{-1}
            for (size_t t = 0; t < d; ++t) B[i][t] = F.add(B[i][t], F.mul(c, B[j][t]));
            for (size_t t = 0; t < d; ++t) Bi[t][j] = F.sub(Bi[t][j], F.mul(c, Bi[t][i]));
        }
        g.B[n] = std::move(B);
        g.Binv[n] = std::move(Bi);
    }
    std::vector<Matrix> d;
    for (int n = 1; n <= top; ++n) {
        Dense s(dims[n - 1], std::vector<uint32_t>(dims[n], 0));
        for (size_t k = 0; k < dims[n]; ++k) {
            auto [piece, cell] = g.cells[n][k];
            if (cell != 0 || !g.pieces[piece].disk) continue;
            s[cell_index(g, n - 1, piece, 1)][k] = 1;
        }
        Dense t = dense_mul(F, dense_mul(F, g.B[n - 1], s, dims[n - 1], dims[n]), g.Binv[n], dims[n], dims[n]);
        d.push_back(to_sparse(t, dims[n - 1], dims[n]));
    }
    g.complex = ChainComplex(F, dims, std::move(d));
    return g;
}

ChainMap random_chain_map(Rng& rng, const GenComplex& X, const GenComplex& Y) {
    const Field F = X.complex.field();
    const uint32_t p = F.p();
    const int top = std::max(X.complex.top(), Y.complex.top());
    std::vector<Dense> M(top + 1);
    for (int n = 0; n <= top; ++n) M[n].assign(Y.complex.dim(n), std::vector<uint32_t>(X.complex.dim(n), 0));
    auto put = [&](int n, long r, long c, uint32_t v) {
        if (r >= 0 && c >= 0) M[n][r][c] = v;
    };
    for (size_t a = 0; a < X.pieces.size(); ++a)
        for (size_t b = 0; b < Y.pieces.size(); ++b) {
            if (!rng.coin()) continue;
            const auto& pa = X.pieces[a];
            const auto& pb = Y.pieces[b];
            const uint32_t c = static_cast<uint32_t>(rng.below(p));
            if (!pa.disk && !pb.disk && pa.top == pb.top) {
                put(pa.top, cell_index(Y, pa.top, b, 0), cell_index(X, pa.top, a, 0), c);
            } else if (pa.disk && pb.disk && pa.top == pb.top) {
                put(pa.top, cell_index(Y, pa.top, b, 0), cell_index(X, pa.top, a, 0), c);
                put(pa.top - 1, cell_index(Y, pa.top - 1, b, 1), cell_index(X, pa.top - 1, a, 1), c);
            } else if (!pa.disk && pb.disk && pb.top == pa.top + 1) {
                put(pa.top, cell_index(Y, pa.top, b, 1), cell_index(X, pa.top, a, 0), c);
            } else if (pa.disk && !pb.disk && pb.top == pa.top) {
                put(pa.top, cell_index(Y, pa.top, b, 0), cell_index(X, pa.top, a, 0), c);
            } else if (pa.disk && pb.disk && pb.top == pa.top + 1) {
                put(pa.top, cell_index(Y, pa.top, b, 1), cell_index(X, pa.top, a, 0), c);
            }
        }
    std::vector<Matrix> comps;
    for (int n = 0; n <= top; ++n) {
        const size_t ry = Y.complex.dim(n), cx = X.complex.dim(n);
        if (ry == 0 || cx == 0) {
            comps.emplace_back(ry, cx);
            continue;
        }
        Dense t = dense_mul(F, dense_mul(F, Y.B[n], M[n], ry, cx), X.Binv[n], cx, cx);
        comps.push_back(to_sparse(t, ry, cx));
    }
    return ChainMap(X.complex, Y.complex, std::move(comps));
}

ChainMap random_acyclic_thickening(Rng& rng, const ChainComplex& X, int disks) {
    const Field F = X.field();
    const int xtop = std::max(0, X.top());
    std::vector<int> tops;
    for (int k = 0; k < disks; ++k) tops.push_back(rng.range(1, xtop + 1));
    const int top = std::max(X.top(), disks ? *std::max_element(tops.begin(), tops.end()) : 0);
    std::vector<size_t> dims(top + 1);
    // basis in degree n: X_n first, then disk cells in disk order
    std::vector<std::vector<std::pair<int, int>>> extra(top + 1);
    for (int k = 0; k < disks; ++k) {
        extra[tops[k]].push_back({k, 0});
        extra[tops[k] - 1].push_back({k, 1});
    }
    for (int n = 0; n <= top; ++n) dims[n] = X.dim(n) + extra[n].size();
    auto where = [&](int n, int k, int cell) {
        for (size_t t = 0; t < extra[n].size(); ++t)
            if (extra[n][t] == std::make_pair(k, cell)) return static_cast<uint32_t>(X.dim(n) + t);
        throw std::logic_error("disk cell missing");
    };
    // images of disk tops in X
    std::vector<SparseVec> lift(disks);
    for (int k = 0; k < disks; ++k) {
        for (size_t i = 0; i < X.dim(tops[k]); ++i) {
            uint32_t c = static_cast<uint32_t>(rng.below(F.p()));
            if (c) lift[k].push_back({static_cast<uint32_t>(i), c});
        }
    }
    std::vector<Matrix> d;
    for (int n = 1; n <= top; ++n) {
        Matrix m(dims[n - 1], dims[n]);
        const Matrix dx = X.d(n);
        for (size_t j = 0; j < X.dim(n); ++j) m.set_col(j, dx.col(j));
        for (size_t t = 0; t < extra[n].size(); ++t) {
            auto [k, cell] = extra[n][t];
            if (cell == 0) m.set_col(X.dim(n) + t, SparseVec{{where(n - 1, k, 1), 1}});
        }
        d.push_back(std::move(m));
    }
    ChainComplex Y(F, dims, std::move(d));
    std::vector<Matrix> q;
    for (int n = 0; n <= top; ++n) {
        Matrix m(X.dim(n), Y.dim(n));
        for (size_t j = 0; j < X.dim(n); ++j) m.set_col(j, SparseVec{{static_cast<uint32_t>(j), 1}});
        for (size_t t = 0; t < extra[n].size(); ++t) {
            auto [k, cell] = extra[n][t];
            // top cell goes to the chosen lift, bottom cell to its boundary
            m.set_col(X.dim(n) + t, cell == 0 ? lift[k] : apply(F, X.d(n + 1), lift[k]));
        }
        q.push_back(std::move(m));
    }
    return ChainMap(Y, X, std::move(q));
}

Presented random_presented_sset(Rng& rng, int max_dim, int max_cells) {
    std::vector<SSetPtr> parts;
    Presented out;
    const int cells = rng.range(1, std::max(1, max_cells));
    for (int k = 0; k < cells; ++k) {
        out.piece_dims.push_back(rng.range(0, max_dim));
        parts.push_back(standard(out.piece_dims.back()));
    }
    SSetPtr K = sset_coproduct(parts).apex;
    out.quotient = identity(K);
    const int glue = rng.range(0, 3);
    for (int r = 0; r < glue; ++r) {
        const int d = rng.range(0, K->max_dim());
        const auto& nd = K->of_dim(d);
        if (nd.empty()) continue;
        SimplexRef x = SimplexRef::nondeg(nd[rng.below(nd.size())], d);
        auto all = K->simplices(d);
        SimplexRef y = all[rng.below(all.size())];
        if (x == y) continue;
        SMap f = simplex_map(K, x), g = simplex_map(K, y);
        SColimit c = sset_colimit({f.domain_ptr(), K}, {{0, 1, &f}, {0, 1, &g}});
        out.quotient = compose(c.legs[1], out.quotient);
        K = c.apex;
    }
    out.space = K;
    return out;
}

SSetPtr random_sset(Rng& rng, int max_dim, int max_cells) { return random_presented_sset(rng, max_dim, max_cells).space; }

Presented presented_standard(int n) { return {standard(n), identity(standard(n)), {n}}; }

Presented presented_sphere(int n) {
    SSetPtr S = sphere(n);
    SSetPtr D = standard(n);
    uint32_t point = S->of_dim(0).front();
    uint32_t top = S->of_dim(n).front();
    std::vector<SimplexRef> img(D->size());
    for (uint32_t s = 0; s < D->size(); ++s) {
        const int d = D->dim(s);
        img[s] = d == n ? SimplexRef::nondeg(top, n) : SimplexRef{point, static_cast<uint8_t>(d), (1u << d) - 1u};
    }
    return {S, SMap(D, S, std::move(img)), {n}};
}

SMap random_smap(Rng& rng, const SSetPtr& K, int max_dim, int max_cells, Presented* domain) {
    if (K->size() == 0) {
        if (domain) *domain = {empty_sset(), identity(empty_sset()), {}};
        return empty_map(K);
    }
    std::vector<SSetPtr> parts;
    std::vector<SMap> maps;
    const int cells = rng.range(1, std::max(1, max_cells));
    for (int k = 0; k < cells; ++k) {
        const int d = rng.range(0, max_dim);
        auto all = K->simplices(d);
        maps.push_back(simplex_map(K, all[rng.below(all.size())]));
        parts.push_back(maps.back().domain_ptr());
    }
    SColimit c = sset_coproduct(parts);
    std::vector<const SMap*> mp;
    for (const auto& m : maps) mp.push_back(&m);
    SMap f = sset_induce(c, mp, K);
    SMap quotient = identity(c.apex);
    // identify a few simplices with equal images
    const int glue = rng.range(0, 2);
    for (int r = 0; r < glue; ++r) {
        const SSetPtr L = f.domain_ptr();
        const int d = rng.range(0, L->max_dim());
        const auto& nd = L->of_dim(d);
        if (nd.size() < 2) continue;
        SimplexRef x = SimplexRef::nondeg(nd[rng.below(nd.size())], d);
        std::vector<SimplexRef> same;
        for (const auto& y : L->simplices(d))
            if (y != x && f.apply(y) == f.apply(x)) same.push_back(y);
        if (same.empty()) continue;
        SimplexRef y = same[rng.below(same.size())];
        SMap a = simplex_map(L, x), b = simplex_map(L, y);
        SColimit q = sset_colimit({a.domain_ptr(), L}, {{0, 1, &a}, {0, 1, &b}});
        SMap fa = compose(f, a);
        f = sset_induce(q, {&fa, &f}, K);
        quotient = compose(q.legs[1], quotient);
    }
    if (domain) {
        domain->space = f.domain_ptr();
        domain->quotient = quotient;
        domain->piece_dims.clear();
        for (const auto& part : parts) domain->piece_dims.push_back(part->max_dim());
    }
    return f;
}

}  // namespace hocolim

namespace hocolim {

CatPtr random_poset(Rng& rng, int n, int num, int den) {
    std::vector<std::pair<uint32_t, uint32_t>> rel;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.coin(num, den)) rel.push_back({static_cast<uint32_t>(a), static_cast<uint32_t>(b)});
    return poset_category(static_cast<size_t>(n), rel);
}

std::optional<Functor> random_poset_functor(Rng& rng, const CatPtr& J, const CatPtr& I) {
    const auto nJ = static_cast<uint32_t>(J->num_objects());
    const auto nI = static_cast<uint32_t>(I->num_objects());
    if (nI == 0) return nJ == 0 ? std::optional<Functor>(Functor{J, I, {}, {}}) : std::nullopt;
    auto leq = [&](uint32_t a, uint32_t b) { return !I->hom(a, b).empty(); };
    for (int attempt = 0; attempt < 32; ++attempt) {
        // greedy assignment; every relation with an already placed object must be respected
        std::vector<uint32_t> obj(nJ);
        bool ok = true;
        for (uint32_t l = 0; ok && l < nJ; ++l) {
            std::vector<uint32_t> options;
            for (uint32_t i = 0; i < nI; ++i) {
                bool fits = true;
                for (uint32_t k = 0; fits && k < l; ++k)
                    if ((!J->hom(k, l).empty() && !leq(obj[k], i)) || (!J->hom(l, k).empty() && !leq(i, obj[k])))
                        fits = false;
                if (fits) options.push_back(i);
            }
            if (options.empty())
                ok = false;
            else
                obj[l] = options[rng.below(options.size())];
        }
        if (!ok) continue;
        Functor f{J, I, obj, {}};
        for (uint32_t m = 0; m < J->num_morphisms(); ++m) f.mor.push_back(I->hom(obj[J->src(m)], obj[J->tgt(m)]).front());
        return f;
    }
    return std::nullopt;
}

}  // namespace hocolim

namespace hocolim {

namespace {

// Composites X_a -> X_b along a sequence of maps X_t -> X_{t+1}.
template <class V>
typename V::Morphism along(const V& v, const std::vector<typename V::Object>& xs,
                           const std::vector<typename V::Morphism>& steps, uint32_t a, uint32_t b) {
    typename V::Morphism m = v.identity(xs[a]);
    for (uint32_t t = a; t < b; ++t) m = v.compose(steps[t], m);
    return m;
}

template <class V>
IndexedDiagram<V> from_sequence(const V& v, const CatPtr& P, const Functor& phi, const std::vector<typename V::Object>& xs,
                                const std::vector<typename V::Morphism>& steps) {
    IndexedDiagram<V> D{P, {}, {}};
    for (uint32_t o : phi.obj) D.value.push_back(xs[o]);
    for (uint32_t m = 0; m < P->num_morphisms(); ++m)
        D.mor.push_back(along(v, xs, steps, phi.obj[P->src(m)], phi.obj[P->tgt(m)]));
    return D;
}

Functor monotone_to_ordinal(Rng& rng, const CatPtr& P, int k) {
    // every poset admits a monotone map to [k]; the constant one is the fallback
    if (auto f = random_poset_functor(rng, P, ordinal(k))) return *f;
    CatPtr O = ordinal(k);
    return Functor{P, O, std::vector<uint32_t>(P->num_objects(), 0), std::vector<uint32_t>(P->num_morphisms(), 0)};
}

}  // namespace

IndexedDiagram<ChainValues> random_indexed(Rng& rng, const ChainValues& v, const CatPtr& P, int max_degree) {
    std::vector<IndexedDiagram<ChainValues>> pieces;
    const int count = rng.range(1, 2);
    for (int c = 0; c < count; ++c) {
        const int k = rng.range(0, 2);
        std::vector<GenComplex> gs;
        for (int t = 0; t <= k; ++t) gs.push_back(random_complex(rng, v.p(), max_degree, 2));
        std::vector<ChainComplex> xs;
        std::vector<ChainMap> steps;
        for (const auto& g : gs) xs.push_back(g.complex);
        for (int t = 0; t < k; ++t) steps.push_back(random_chain_map(rng, gs[t], gs[t + 1]));
        pieces.push_back(from_sequence(v, P, monotone_to_ordinal(rng, P, k), xs, steps));
    }
    if (pieces.size() == 1) return pieces.front();
    IndexedDiagram<ChainValues> D{P, {}, {}};
    std::vector<ChainColimit> sums;
    for (uint32_t o = 0; o < P->num_objects(); ++o) {
        std::vector<const ChainComplex*> parts;
        for (const auto& pc : pieces) parts.push_back(&pc.value[o]);
        sums.push_back(direct_sum(v.p(), parts));
        D.value.push_back(sums.back().apex);
    }
    for (uint32_t m = 0; m < P->num_morphisms(); ++m) {
        std::vector<ChainMap> maps;
        for (size_t c = 0; c < pieces.size(); ++c) maps.push_back(compose(sums[P->tgt(m)].legs[c], pieces[c].mor[m]));
        std::vector<const ChainMap*> ptrs;
        for (const auto& x : maps) ptrs.push_back(&x);
        D.mor.push_back(P->is_identity(m) ? identity_map(D.value[m]) : chain_induce(sums[P->src(m)], ptrs, D.value[P->tgt(m)]));
    }
    return D;
}

IndexedDiagram<SSetValues> random_indexed(Rng& rng, const SSetValues& v, const CatPtr& P) {
    const int k = rng.range(0, 2);
    std::vector<SSetPtr> xs(k + 1);
    std::vector<SMap> steps(k);
    xs[k] = random_sset(rng, 2, 2);
    for (int t = k - 1; t >= 0; --t) {
        steps[t] = random_smap(rng, xs[t + 1], 2, 2);
        xs[t] = steps[t].domain_ptr();
    }
    return from_sequence(v, P, monotone_to_ordinal(rng, P, k), xs, steps);
}

CatPtr random_free_category(Rng& rng, int n, int max_parallel) {
    std::vector<std::string> names;
    for (int o = 0; o < n; ++o) names.push_back("o" + std::to_string(o));
    struct Edge {
        uint32_t a, b;
    };
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.coin(1, 2)) {
                const int k = rng.range(1, max_parallel);
                for (int c = 0; c < k; ++c) edges.push_back({static_cast<uint32_t>(a), static_cast<uint32_t>(b)});
            }
    // paths as edge sequences, grouped by length; edges increase the object index, so this terminates
    std::vector<std::vector<uint32_t>> paths;
    for (uint32_t e = 0; e < edges.size(); ++e) paths.push_back({e});
    for (size_t k = 0; k < paths.size(); ++k)
        for (uint32_t e = 0; e < edges.size(); ++e)
            if (edges[e].a == edges[paths[k].back()].b) {
                auto x = paths[k];
                x.push_back(e);
                paths.push_back(x);
            }
    std::map<std::vector<uint32_t>, uint32_t> id;
    std::vector<FinCat::Arrow> arrows;
    for (const auto& path : paths) {
        id[path] = static_cast<uint32_t>(n + arrows.size());
        std::string name;
        for (uint32_t e : path) name += (name.empty() ? "e" : ".e") + std::to_string(e);
        arrows.push_back({edges[path.front()].a, edges[path.back()].b, name});
    }
    const auto path_of = [&](uint32_t m) { return paths[m - static_cast<uint32_t>(n)]; };
    return std::make_shared<const FinCat>(FinCat::make(names, arrows, [&](uint32_t g, uint32_t f) {
        auto x = path_of(f);
        const auto y = path_of(g);
        x.insert(x.end(), y.begin(), y.end());
        return id.at(x);
    }));
}

CatDiagram random_cat_diagram(Rng& rng, const CatPtr& I, int universe) {
    CatPtr U = random_poset(rng, universe, 1, 2);
    const size_t n = I->num_objects();
    // S_i contains S_k for every k with a morphism k -> i; objects of a loop-free category admit
    // an order in which all predecessors come first
    std::vector<uint32_t> order;
    std::vector<char> placed(n, 0);
    while (order.size() < n)
        for (uint32_t i = 0; i < n; ++i) {
            if (placed[i]) continue;
            bool ready = true;
            for (uint32_t k = 0; ready && k < n; ++k) ready = k == i || placed[k] || I->hom(k, i).empty();
            if (ready) {
                order.push_back(i);
                placed[i] = 1;
            }
        }
    std::vector<std::vector<char>> S(n, std::vector<char>(universe, 0));
    for (uint32_t i : order) {
        for (uint32_t k = 0; k < n; ++k)
            if (k != i && !I->hom(k, i).empty())
                for (int x = 0; x < universe; ++x) S[i][x] |= S[k][x];
        for (int x = 0; x < universe; ++x)
            if (rng.coin(1, 3)) S[i][x] = 1;
        bool any = false;
        for (int x = 0; x < universe; ++x) any = any || S[i][x];
        if (!any) S[i][rng.below(universe)] = 1;
    }
    CatDiagram H;
    H.base = I;
    std::vector<std::vector<uint32_t>> elems(n);
    for (uint32_t i = 0; i < n; ++i) {
        std::vector<std::pair<uint32_t, uint32_t>> rel;
        for (int x = 0; x < universe; ++x)
            if (S[i][x]) elems[i].push_back(static_cast<uint32_t>(x));
        std::vector<std::string> names;
        for (uint32_t x : elems[i]) names.push_back("u" + std::to_string(x));
        for (uint32_t a = 0; a < elems[i].size(); ++a)
            for (uint32_t b = 0; b < elems[i].size(); ++b)
                if (a != b && !U->hom(elems[i][a], elems[i][b]).empty()) rel.push_back({a, b});
        H.fiber.push_back(poset_category(elems[i].size(), rel, names));
    }
    for (uint32_t m = 0; m < I->num_morphisms(); ++m) {
        const uint32_t a = I->src(m), b = I->tgt(m);
        Functor t{H.fiber[a], H.fiber[b], {}, {}};
        for (uint32_t x : elems[a])
            t.obj.push_back(static_cast<uint32_t>(std::find(elems[b].begin(), elems[b].end(), x) - elems[b].begin()));
        for (uint32_t h = 0; h < H.fiber[a]->num_morphisms(); ++h)
            t.mor.push_back(H.fiber[b]->hom(t.obj[H.fiber[a]->src(h)], t.obj[H.fiber[a]->tgt(h)]).front());
        H.transition.push_back(t);
    }
    return H;
}

Thickened random_weak_equivalent(Rng& rng, const IndexedDiagram<ChainValues>& D) {
    const FinCat& I = *D.cat;
    Thickened out;
    out.diagram.cat = D.cat;
    std::vector<ChainColimit> sums;
    std::vector<ChainMap> into;
    for (uint32_t o = 0; o < I.num_objects(); ++o) {
        const ChainComplex& X = D.value[o];
        const int k = rng.range(0, 2);
        std::vector<ChainComplex> disks;
        for (int c = 0; c < k; ++c) disks.push_back(mapping_cone(identity_map(sphere_complex(X.p(), rng.range(0, 1)))));
        std::vector<const ChainComplex*> parts{&X};
        for (const auto& d : disks) parts.push_back(&d);
        sums.push_back(direct_sum(X.p(), parts));
        std::vector<ChainMap> proj{identity_map(X)};
        for (const auto& d : disks) proj.push_back(zero_map(d, X));
        std::vector<const ChainMap*> ptrs;
        for (const auto& m : proj) ptrs.push_back(&m);
        out.to_original.push_back(chain_induce(sums.back(), ptrs, X));
        into.push_back(sums.back().legs[0]);
        out.diagram.value.push_back(sums.back().apex);
    }
    for (uint32_t m = 0; m < I.num_morphisms(); ++m) {
        if (I.is_identity(m)) {
            out.diagram.mor.push_back(identity_map(out.diagram.value[m]));
            continue;
        }
        out.diagram.mor.push_back(compose(into[I.tgt(m)], compose(D.mor[m], out.to_original[I.src(m)])));
    }
    return out;
}

template <class V>
BoundedDiagram<V> random_bounded(Rng& rng, const V& v, const Presented& K) {
    CatPtr P = random_poset(rng, rng.range(2, 4), 1, 2);
    IndexedDiagram<V> D = random_indexed(rng, v, P);
    Nerve N = nerve(P);
    BoundedDiagram<V> E = pullback_epsilon(v, N, D);
    auto pick = [&](int n) {
        auto all = N.space->simplices(n);
        return simplex_map(N.space, all[rng.below(all.size())]);
    };
    if (K.piece_dims.size() == 1 && K.quotient.domain_ptr() == K.space) return pullback_diagram(v, pick(K.piece_dims[0]), E);
    std::vector<SSetPtr> parts;
    std::vector<SMap> maps;
    for (int n : K.piece_dims) {
        maps.push_back(pick(n));
        parts.push_back(maps.back().domain_ptr());
    }
    SColimit cover = sset_coproduct(parts);
    std::vector<const SMap*> ptrs;
    for (const auto& m : maps) ptrs.push_back(&m);
    SMap onto = sset_induce(cover, ptrs, N.space);
    SMap rebased(K.quotient.domain_ptr(), N.space, onto.images());
    BoundedDiagram<V> G = pullback_diagram(v, rebased, E);
    if (K.quotient.domain_ptr() == K.space) return G;
    return kan_extension(v, K.quotient, G).diagram;
}

template BoundedDiagram<ChainValues> random_bounded(Rng&, const ChainValues&, const Presented&);
template BoundedDiagram<SSetValues> random_bounded(Rng&, const SSetValues&, const Presented&);

}  // namespace hocolim
