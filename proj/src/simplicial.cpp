#include "hocolim/simplicial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace hocolim {

namespace {

uint32_t low_bits(int k) { return k >= 32 ? ~0u : ((1u << k) - 1); }

uint32_t mask_of(const int* v, int len) {
    uint32_t m = 0;
    for (int j = 0; j + 1 < len; ++j)
        if (v[j] == v[j + 1]) m |= 1u << j;
    return m;
}

// Keeps the bits of m outside `drop`, packed to the low end. Both masks live on `len` positions.
uint32_t compress(uint32_t m, uint32_t drop, int len) {
    uint32_t out = 0;
    int k = 0;
    for (int j = 0; j < len; ++j) {
        if (drop >> j & 1) continue;
        if (m >> j & 1) out |= 1u << k;
        ++k;
    }
    return out;
}

uint32_t reverse_bits(uint32_t m, int len) {
    uint32_t out = 0;
    for (int j = 0; j < len; ++j)
        if (m >> j & 1) out |= 1u << (len - 1 - j);
    return out;
}

bool same_sset(const SSetPtr& a, const SSetPtr& b) { return a == b || (a && b && *a == *b); }

std::string str(const SimplexRef& r) { return describe(r); }

struct SubsetSpace {
    std::shared_ptr<SSet> K;
    std::vector<uint32_t> verts;  // vertex bitmask per id
};

// Subsets of [n] accepted by keep, ordered by size then lexicographically.
SubsetSpace subset_space(int n, const std::function<bool(uint32_t)>& keep) {
    if (n < 0 || n > kMaxDim) throw std::invalid_argument("dimension out of range: " + std::to_string(n));
    SubsetSpace s;
    s.K = std::make_shared<SSet>();
    std::unordered_map<uint32_t, uint32_t> id;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int start, int remaining) {
        if (remaining == 0) {
            uint32_t m = 0;
            for (int v : cur) m |= 1u << v;
            if (!keep(m)) return;
            int d = static_cast<int>(cur.size()) - 1;
            std::vector<SimplexRef> faces;
            if (d >= 1)
                for (int i = 0; i <= d; ++i) faces.push_back(SimplexRef::nondeg(id.at(m & ~(1u << cur[i])), d - 1));
            id[m] = s.K->add(d, std::move(faces));
            s.verts.push_back(m);
            return;
        }
        for (int v = start; v <= n - remaining + 1; ++v) {
            cur.push_back(v);
            rec(v + 1, remaining - 1);
            cur.pop_back();
        }
    };
    for (int k = 1; k <= n + 1; ++k) rec(0, k);
    return s;
}

uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<int> MonotoneSurjection::values() const {
    std::vector<int> v(m + 1);
    for (int j = 0; j <= m; ++j) v[j] = (*this)(j);
    return v;
}

MonotoneSurjection MonotoneSurjection::from_values(const std::vector<int>& v) {
    if (v.empty() || v.size() > kMaxDim + 1)
        throw std::invalid_argument("a monotone surjection needs between 1 and " + std::to_string(kMaxDim + 1) +
                                    " values");
    if (v[0] != 0) throw std::invalid_argument("monotone surjection values must start at 0");
    for (size_t j = 0; j + 1 < v.size(); ++j)
        if (v[j + 1] != v[j] && v[j + 1] != v[j] + 1)
            throw std::invalid_argument("monotone surjection values must be nondecreasing without gaps");
    return {static_cast<int>(v.size()) - 1, mask_of(v.data(), static_cast<int>(v.size()))};
}

MonotoneSurjection compose(const MonotoneSurjection& outer, const MonotoneSurjection& inner) {
    if (outer.m != inner.n()) throw std::invalid_argument("monotone surjections are not composable");
    uint32_t mask = inner.mask;
    for (int j = 0; j < inner.m; ++j)
        if (!(inner.mask >> j & 1) && (outer.mask >> inner(j) & 1)) mask |= 1u << j;
    return {inner.m, mask};
}

std::string describe(const SimplexRef& r) {
    std::string s = "#" + std::to_string(r.base);
    if (r.mask) {
        s += "[";
        auto v = r.op().values();
        for (size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + std::to_string(v[j]);
        s += "]";
    }
    return s;
}

const std::vector<uint32_t>& SSet::of_dim(int d) const {
    static const std::vector<uint32_t> none;
    return (d >= 0 && d < static_cast<int>(by_dim_.size())) ? by_dim_[d] : none;
}

SimplexRef SSet::face(const SimplexRef& x, int i) const {
    const int m = x.dim;
    if (m < 1 || i < 0 || i > m)
        throw std::out_of_range("face index " + std::to_string(i) + " out of range for a " + std::to_string(m) +
                                "-simplex");
    if (x.mask == 0) return faces_[x.base][i];
    const MonotoneSurjection th = x.op();
    int v[kMaxDim + 1];
    for (int j = 0; j < m; ++j) v[j] = th(j < i ? j : j + 1);
    const bool shared = (i > 0 && (x.mask >> (i - 1) & 1)) || (i < m && (x.mask >> i & 1));
    if (shared) return {x.base, static_cast<uint8_t>(m - 1), mask_of(v, m)};
    // the image misses k = th(i): factor through d_k of the base
    const int k = th(i);
    for (int j = 0; j < m; ++j)
        if (v[j] > k) --v[j];
    const SimplexRef& f = faces_[x.base][k];
    MonotoneSurjection rest{m - 1, mask_of(v, m)};
    return SimplexRef::make(f.base, compose(f.op(), rest));
}

SimplexRef SSet::apply(const SimplexRef& x, const std::vector<int>& mu) const {
    const int k = static_cast<int>(mu.size()) - 1;
    if (k < 0 || k > kMaxDim) throw std::invalid_argument("operator length out of range");
    const MonotoneSurjection th = x.op();
    int v[kMaxDim + 1];
    uint32_t hit = 0;
    for (int j = 0; j <= k; ++j) {
        if (mu[j] < 0 || mu[j] > x.dim || (j > 0 && mu[j] < mu[j - 1]))
            throw std::invalid_argument("operator values must be nondecreasing in [0, " + std::to_string(x.dim) + "]");
        v[j] = th(mu[j]);
        hit |= 1u << v[j];
    }
    SimplexRef y = SimplexRef::nondeg(x.base, th.n());
    for (int t = th.n(); t >= 0; --t)
        if (!(hit >> t & 1)) y = face(y, t);
    for (int j = 0; j <= k; ++j) v[j] = __builtin_popcount(hit & low_bits(v[j]));
    MonotoneSurjection rest{k, mask_of(v, k + 1)};
    return SimplexRef::make(y.base, compose(y.op(), rest));
}

uint32_t SSet::vertex(const SimplexRef& x, int j) const { return apply(x, {j}).base; }

std::vector<SimplexRef> SSet::simplices(int n) const {
    std::vector<SimplexRef> out;
    if (n < 0 || n > kMaxDim) return out;
    for (uint32_t b = 0; b < size(); ++b) {
        const int d = dims_[b];
        if (d > n) continue;
        const int c = n - d;
        if (c == 0) {
            out.push_back(SimplexRef::nondeg(b, n));
            continue;
        }
        // all masks on n positions with c bits, increasing
        uint32_t m = low_bits(c);
        const uint32_t limit = n >= 32 ? ~0u : (1u << n);
        while (m < limit) {
            out.push_back({b, static_cast<uint8_t>(n), m});
            uint32_t t = m | (m - 1);
            m = (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctz(m) + 1));
            if (m == 0) break;
        }
    }
    return out;
}

uint32_t SSet::add(int dim, std::vector<SimplexRef> faces) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("simplex dimension out of range: " + std::to_string(dim));
    const size_t expect = dim == 0 ? 0 : static_cast<size_t>(dim) + 1;
    if (faces.size() != expect)
        throw std::invalid_argument("a " + std::to_string(dim) + "-simplex needs " + std::to_string(expect) +
                                    " faces, got " + std::to_string(faces.size()));
    for (size_t i = 0; i < faces.size(); ++i) {
        const auto& f = faces[i];
        if (f.base >= size())
            throw std::invalid_argument("face " + std::to_string(i) + " references unknown simplex " +
                                        std::to_string(f.base));
        if (f.dim != dim - 1)
            throw std::invalid_argument("face " + std::to_string(i) + " has dimension " + std::to_string(f.dim) +
                                        ", expected " + std::to_string(dim - 1));
        if ((f.mask & ~low_bits(f.dim)) || f.base_dim() != dims_[f.base])
            throw std::invalid_argument("face " + std::to_string(i) + " has an operator incompatible with simplex " +
                                        std::to_string(f.base));
    }
    const auto id = static_cast<uint32_t>(size());
    dims_.push_back(static_cast<uint8_t>(dim));
    faces_.push_back(std::move(faces));
    if (static_cast<int>(by_dim_.size()) <= dim) by_dim_.resize(dim + 1);
    pos_.push_back(static_cast<uint32_t>(by_dim_[dim].size()));
    by_dim_[dim].push_back(id);
    return id;
}

void SSet::validate() const {
    for (uint32_t s = 0; s < size(); ++s) {
        const int n = dims_[s];
        if (n < 2) continue;
        const auto x = SimplexRef::nondeg(s, n);
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i) {
                SimplexRef a = face(face(x, j), i);
                SimplexRef b = face(face(x, i), j - 1);
                if (a != b)
                    throw std::invalid_argument("simplicial identity fails at simplex " + std::to_string(s) +
                                                " for faces (" + std::to_string(i) + "," + std::to_string(j) +
                                                "): " + str(a) + " vs " + str(b));
            }
    }
}

SMap::SMap(SSetPtr dom, SSetPtr cod, std::vector<SimplexRef> image, bool check)
    : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {
    if (!dom_ || !cod_) throw std::invalid_argument("simplicial map needs a domain and codomain");
    if (image_.size() != dom_->size())
        throw std::invalid_argument("simplicial map has " + std::to_string(image_.size()) + " images for " +
                                    std::to_string(dom_->size()) + " simplices");
    if (!check) return;
    for (uint32_t s = 0; s < image_.size(); ++s) {
        const auto& y = image_[s];
        if (y.dim != dom_->dim(s) || y.base >= cod_->size() || y.base_dim() != cod_->dim(y.base) ||
            (y.mask & ~low_bits(y.dim)))
            throw std::invalid_argument("image of simplex " + std::to_string(s) + " is not a simplex of dimension " +
                                        std::to_string(dom_->dim(s)));
    }
    for (uint32_t s = 0; s < image_.size(); ++s) {
        const int n = dom_->dim(s);
        for (int i = 0; n >= 1 && i <= n; ++i) {
            SimplexRef a = apply(dom_->face(s, i));
            SimplexRef b = cod_->face(image_[s], i);
            if (a != b)
                throw std::invalid_argument("map does not commute with face " + std::to_string(i) + " of simplex " +
                                            std::to_string(s) + ": " + str(a) + " vs " + str(b));
        }
    }
}

SimplexRef SMap::apply(const SimplexRef& x) const {
    const SimplexRef& y = image_[x.base];
    if (x.mask == 0) return y;
    return SimplexRef::make(y.base, compose(y.op(), x.op()));
}

bool SMap::operator==(const SMap& o) const {
    return image_ == o.image_ && same_sset(dom_, o.dom_) && same_sset(cod_, o.cod_);
}

SMap identity(const SSetPtr& K) {
    std::vector<SimplexRef> img(K->size());
    for (uint32_t s = 0; s < K->size(); ++s) img[s] = SimplexRef::nondeg(s, K->dim(s));
    return SMap(K, K, std::move(img), false);
}

SMap compose(const SMap& g, const SMap& f) {
    if (!same_sset(f.codomain_ptr(), g.domain_ptr()))
        throw std::invalid_argument("simplicial maps are not composable");
    std::vector<SimplexRef> img(f.domain().size());
    for (uint32_t s = 0; s < img.size(); ++s) img[s] = g.apply(f.image(s));
    return SMap(f.domain_ptr(), g.codomain_ptr(), std::move(img), false);
}

bool is_mono(const SMap& f) {
    const SSet& L = f.domain();
    for (int n = 0; n <= L.max_dim() + 1; ++n) {
        std::unordered_set<SimplexRef, SimplexRefHash> seen;
        for (const auto& x : L.simplices(n))
            if (!seen.insert(f.apply(x)).second) return false;
    }
    return true;
}

bool is_epi(const SMap& f) {
    std::vector<char> hit(f.codomain().size(), 0);
    for (const auto& y : f.images())
        if (y.mask == 0) hit[y.base] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool is_reduced(const SMap& f) {
    return std::all_of(f.images().begin(), f.images().end(), [](const SimplexRef& y) { return y.mask == 0; });
}

bool is_iso(const SMap& f) {
    if (!is_reduced(f) || f.domain().size() != f.codomain().size()) return false;
    std::vector<char> hit(f.codomain().size(), 0);
    for (const auto& y : f.images()) {
        if (hit[y.base]) return false;
        hit[y.base] = 1;
    }
    return true;
}

SMap inverse(const SMap& f) {
    if (!is_iso(f)) throw std::invalid_argument("map is not an isomorphism");
    std::vector<SimplexRef> img(f.codomain().size());
    for (uint32_t s = 0; s < f.domain().size(); ++s)
        img[f.image(s).base] = SimplexRef::nondeg(s, f.domain().dim(s));
    return SMap(f.codomain_ptr(), f.domain_ptr(), std::move(img), false);
}

SMap empty_map(const SSetPtr& K) { return SMap(empty_sset(), K, {}, false); }

SMap terminal_map(const SSetPtr& K) {
    std::vector<SimplexRef> img(K->size());
    for (uint32_t s = 0; s < K->size(); ++s) img[s] = {0, static_cast<uint8_t>(K->dim(s)), low_bits(K->dim(s))};
    return SMap(K, standard(0), std::move(img), false);
}

SSetPtr empty_sset() {
    static const SSetPtr e = std::make_shared<SSet>();
    return e;
}

SSetPtr standard(int n) {
    static std::mutex mu;
    static std::map<int, SSetPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto s = subset_space(n, [](uint32_t) { return true; });
    cache[n] = s.K;
    return s.K;
}

uint32_t standard_face_id(int n, const std::vector<int>& vertices) {
    const int N = n + 1;
    const int k = static_cast<int>(vertices.size());
    if (k < 1 || k > N) throw std::invalid_argument("face of a standard simplex needs 1.." + std::to_string(N) + " vertices");
    uint64_t id = 0;
    for (int s = 1; s < k; ++s) id += binom(N, s);
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        if (vertices[i] <= prev || vertices[i] > n)
            throw std::invalid_argument("face vertices must be increasing in [0, " + std::to_string(n) + "]");
        for (int v = prev + 1; v < vertices[i]; ++v) id += binom(N - 1 - v, k - 1 - i);
        prev = vertices[i];
    }
    return static_cast<uint32_t>(id);
}

SSetPtr boundary(int n) {
    if (n < 0) throw std::invalid_argument("boundary needs n >= 0");
    const uint32_t full = low_bits(n + 1);
    return subset_space(n, [full](uint32_t m) { return m != full; }).K;
}

SSetPtr horn(int n, int k) {
    if (n < 1 || k < 0 || k > n)
        throw std::invalid_argument("horn(" + std::to_string(n) + "," + std::to_string(k) + ") needs 0 <= k <= n, n >= 1");
    const uint32_t full = low_bits(n + 1);
    const uint32_t opposite_face = full & ~(1u << k);
    return subset_space(n, [=](uint32_t m) { return m != full && m != opposite_face; }).K;
}

SSetPtr sphere(int n) {
    if (n < 1) throw std::invalid_argument("sphere needs n >= 1");
    auto K = std::make_shared<SSet>();
    K->add(0, {});
    std::vector<SimplexRef> faces(n + 1, SimplexRef{0, static_cast<uint8_t>(n - 1), low_bits(n - 1)});
    K->add(n, std::move(faces));
    return K;
}

namespace {

SMap subset_inclusion(int n, const SubsetSpace& s) {
    std::vector<SimplexRef> img(s.K->size());
    for (uint32_t id = 0; id < img.size(); ++id) {
        std::vector<int> vs;
        for (int v = 0; v <= n; ++v)
            if (s.verts[id] >> v & 1) vs.push_back(v);
        img[id] = SimplexRef::nondeg(standard_face_id(n, vs), s.K->dim(id));
    }
    return SMap(s.K, standard(n), std::move(img), false);
}

}  // namespace

SMap boundary_inclusion(int n) {
    const uint32_t full = low_bits(n + 1);
    return subset_inclusion(n, subset_space(n, [full](uint32_t m) { return m != full; }));
}

SMap horn_inclusion(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("horn index out of range");
    const uint32_t full = low_bits(n + 1);
    const uint32_t opposite_face = full & ~(1u << k);
    return subset_inclusion(n, subset_space(n, [=](uint32_t m) { return m != full && m != opposite_face; }));
}

SMap simplex_map(const SSetPtr& K, const SimplexRef& x) {
    const int m = x.dim;
    SSetPtr D = standard(m);
    std::vector<SimplexRef> img(D->size());
    std::vector<int> vs;
    for (uint32_t id = 0; id < D->size(); ++id) {
        // recover the vertex list from the standard ordering
        vs.clear();
        SimplexRef f = SimplexRef::nondeg(id, D->dim(id));
        for (int j = 0; j <= f.dim; ++j) vs.push_back(static_cast<int>(D->vertex(f, j)));
        img[id] = K->apply(x, vs);
    }
    return SMap(D, K, std::move(img), false);
}

SMap standard_map(int k, int n, const std::vector<int>& values) {
    if (static_cast<int>(values.size()) != k + 1) throw std::invalid_argument("standard map needs k+1 values");
    for (int j = 0; j <= k; ++j)
        if (values[j] < 0 || values[j] > n || (j > 0 && values[j] < values[j - 1]))
            throw std::invalid_argument("standard map values must be nondecreasing in [0, n]");
    SSetPtr top = standard(n);
    return simplex_map(top, top->apply(SimplexRef::nondeg(static_cast<uint32_t>(top->size() - 1), n), values));
}

SMap codegeneracy(int n, int i) {
    if (i < 0 || i > n) throw std::invalid_argument("codegeneracy index out of range");
    std::vector<int> v(n + 2);
    for (int j = 0; j <= n + 1; ++j) v[j] = j <= i ? j : j - 1;
    return standard_map(n + 1, n, v);
}

SMap coface(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw std::invalid_argument("coface index out of range");
    std::vector<int> v;
    for (int j = 0; j <= n; ++j)
        if (j != i) v.push_back(j);
    return standard_map(n - 1, n, v);
}

namespace {

struct UnionFind {
    std::vector<uint32_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    uint32_t find(uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) std::swap(a, b);
        parent[a] = b;
    }
};

}  // namespace

SColimit sset_colimit(const std::vector<SSetPtr>& objects, const std::vector<SArrow>& arrows) {
    int D = -1;
    for (const auto& o : objects) D = std::max(D, o->max_dim());
    const size_t no = objects.size();
    for (const auto& a : arrows) {
        if (a.src >= no || a.tgt >= no) throw std::invalid_argument("colimit arrow references a missing object");
        if (!same_sset(a.map->domain_ptr(), objects[a.src]) || !same_sset(a.map->codomain_ptr(), objects[a.tgt]))
            throw std::invalid_argument("colimit arrow does not match its endpoints");
    }
    // global numbering of (object, simplex) in degrees <= D
    std::vector<std::vector<std::unordered_map<SimplexRef, uint32_t, SimplexRefHash>>> index(no);
    std::vector<std::pair<size_t, SimplexRef>> member;
    for (size_t o = 0; o < no; ++o) {
        index[o].resize(D + 1);
        for (int n = 0; n <= D; ++n)
            for (const auto& x : objects[o]->simplices(n)) {
                index[o][n].emplace(x, static_cast<uint32_t>(member.size()));
                member.emplace_back(o, x);
            }
    }
    auto gid = [&](size_t o, const SimplexRef& x) { return index[o][x.dim].at(x); };
    UnionFind uf(member.size());
    for (const auto& a : arrows)
        for (int n = 0; n <= D; ++n)
            for (const auto& x : objects[a.src]->simplices(n)) uf.unite(gid(a.src, x), gid(a.tgt, a.map->apply(x)));

    // a class is degenerate iff some member is
    std::vector<char> degenerate(member.size(), 0);
    std::vector<uint32_t> witness(member.size(), UINT32_MAX);
    for (uint32_t g = 0; g < member.size(); ++g) {
        uint32_t r = uf.find(g);
        if (member[g].second.mask != 0) {
            degenerate[r] = 1;
            if (witness[r] == UINT32_MAX) witness[r] = g;
        }
    }
    // members are numbered by (object, degree, base, op), so the root is the smallest member
    std::vector<uint32_t> nondeg_roots;
    for (uint32_t g = 0; g < member.size(); ++g)
        if (uf.find(g) == g && !degenerate[g]) nondeg_roots.push_back(g);
    std::stable_sort(nondeg_roots.begin(), nondeg_roots.end(), [&](uint32_t a, uint32_t b) {
        const auto& ma = member[a];
        const auto& mb = member[b];
        if (ma.second.dim != mb.second.dim) return ma.second.dim < mb.second.dim;
        if (ma.first != mb.first) return ma.first < mb.first;
        return ma.second.base < mb.second.base;
    });
    std::unordered_map<uint32_t, uint32_t> apex_id;
    for (uint32_t k = 0; k < nondeg_roots.size(); ++k) apex_id[nondeg_roots[k]] = k;

    std::unordered_map<uint32_t, SimplexRef> memo;
    std::function<SimplexRef(uint32_t)> ez = [&](uint32_t root) -> SimplexRef {
        if (!degenerate[root]) return SimplexRef::nondeg(apex_id.at(root), member[root].second.dim);
        auto it = memo.find(root);
        if (it != memo.end()) return it->second;
        const auto& [o, x] = member[witness[root]];
        SimplexRef b = ez(uf.find(gid(o, SimplexRef::nondeg(x.base, x.base_dim()))));
        SimplexRef r = SimplexRef::make(b.base, compose(b.op(), x.op()));
        memo.emplace(root, r);
        return r;
    };

    auto apex = std::make_shared<SSet>();
    SColimit c;
    for (uint32_t root : nondeg_roots) {
        const auto& [o, x] = member[root];
        std::vector<SimplexRef> faces;
        for (int i = 0; x.dim >= 1 && i <= x.dim; ++i) faces.push_back(ez(uf.find(gid(o, objects[o]->face(x, i)))));
        apex->add(x.dim, std::move(faces));
        c.rep.emplace_back(o, x.base);
    }
    c.apex = apex;
    for (size_t o = 0; o < no; ++o) {
        const SSet& K = *objects[o];
        std::vector<SimplexRef> img(K.size());
        for (uint32_t s = 0; s < K.size(); ++s) img[s] = ez(uf.find(gid(o, SimplexRef::nondeg(s, K.dim(s)))));
        c.legs.emplace_back(objects[o], c.apex, std::move(img), false);
    }
    return c;
}

SMap sset_induce(const SColimit& c, const std::vector<const SMap*>& maps, const SSetPtr& target) {
    if (maps.size() != c.legs.size()) throw std::invalid_argument("cocone has the wrong number of legs");
    std::vector<SimplexRef> img(c.apex->size());
    for (uint32_t s = 0; s < img.size(); ++s) {
        const auto& [o, b] = c.rep[s];
        img[s] = maps[o]->image(b);
    }
    SMap u(c.apex, target, std::move(img), true);
    for (size_t o = 0; o < maps.size(); ++o)
        for (uint32_t s = 0; s < c.legs[o].domain().size(); ++s)
            if (u.apply(c.legs[o].image(s)) != maps[o]->image(s))
                throw std::invalid_argument("competing cocone is not compatible at object " + std::to_string(o) +
                                            ", simplex " + std::to_string(s));
    return u;
}

SColimit sset_pushout(const SMap& f, const SMap& g) {
    if (!same_sset(f.domain_ptr(), g.domain_ptr())) throw std::invalid_argument("pushout legs need a common domain");
    return sset_colimit({f.domain_ptr(), f.codomain_ptr(), g.codomain_ptr()}, {{0, 1, &f}, {0, 2, &g}});
}

SColimit sset_coproduct(const std::vector<SSetPtr>& objects) { return sset_colimit(objects, {}); }

SimplexRef SPullback::locate(const SimplexRef& x, const SimplexRef& y) const {
    if (x.dim != y.dim) throw std::invalid_argument("pullback pair has mismatched degrees");
    const uint32_t common = x.mask & y.mask;
    SimplexRef xs{x.base, static_cast<uint8_t>(x.dim - __builtin_popcount(common)), compress(x.mask, common, x.dim)};
    SimplexRef ys{y.base, xs.dim, compress(y.mask, common, y.dim)};
    auto it = index.find({xs, ys});
    if (it == index.end()) throw std::invalid_argument("pair " + str(x) + "," + str(y) + " is not in the pullback");
    return {it->second, x.dim, common};
}

SPullback sset_pullback(const SMap& f, const SMap& g) {
    if (!same_sset(f.codomain_ptr(), g.codomain_ptr()))
        throw std::invalid_argument("pullback needs maps with a common codomain");
    const SSet& L = f.domain();
    const SSet& A = g.domain();
    SPullback P;
    auto apex = std::make_shared<SSet>();
    std::vector<SimplexRef> img1, img2;
    const int top = (L.size() && A.size()) ? L.max_dim() + A.max_dim() : -1;
    for (int n = 0; n <= top; ++n) {
        std::unordered_map<SimplexRef, std::vector<SimplexRef>, SimplexRefHash> bucket;
        for (const auto& y : A.simplices(n)) bucket[g.apply(y)].push_back(y);
        for (const auto& x : L.simplices(n)) {
            auto it = bucket.find(f.apply(x));
            if (it == bucket.end()) continue;
            for (const auto& y : it->second) {
                if (x.mask & y.mask) continue;
                std::vector<SimplexRef> faces;
                for (int i = 0; n >= 1 && i <= n; ++i) faces.push_back(P.locate(L.face(x, i), A.face(y, i)));
                uint32_t id = apex->add(n, std::move(faces));
                P.index.emplace(std::make_pair(x, y), id);
                img1.push_back(x);
                img2.push_back(y);
            }
        }
    }
    P.apex = apex;
    P.p1 = SMap(apex, f.domain_ptr(), std::move(img1), false);
    P.p2 = SMap(apex, g.domain_ptr(), std::move(img2), false);
    return P;
}

SPullback sset_product(const SSetPtr& K, const SSetPtr& N) {
    return sset_pullback(terminal_map(K), terminal_map(N));
}

SMap pullback_map(const SPullback& from, const SPullback& to, const SMap* a, const SMap* b) {
    std::vector<SimplexRef> img(from.apex->size());
    for (uint32_t s = 0; s < img.size(); ++s) {
        SimplexRef x = from.p1.image(s), y = from.p2.image(s);
        if (a) x = a->apply(x);
        if (b) y = b->apply(y);
        img[s] = to.locate(x, y);
    }
    return SMap(from.apex, to.apex, std::move(img), false);
}

SCone cone(const SSetPtr& K) {
    auto C = std::make_shared<SSet>();
    const auto N = static_cast<uint32_t>(K->size());
    for (uint32_t s = 0; s < N; ++s) {
        std::vector<SimplexRef> faces;
        for (int i = 0; K->dim(s) >= 1 && i <= K->dim(s); ++i) faces.push_back(K->face(s, i));
        C->add(K->dim(s), std::move(faces));
    }
    const uint32_t e = C->add(0, {});
    // (s, e^1) gets id N + 1 + s; its last vertex is the apex
    for (uint32_t s = 0; s < N; ++s) {
        const int i = K->dim(s);
        std::vector<SimplexRef> faces;
        for (int j = 0; j <= i; ++j) {
            if (i == 0) {
                faces.push_back(SimplexRef::nondeg(e, 0));
            } else {
                const SimplexRef& f = K->face(s, j);
                faces.push_back({N + 1 + f.base, static_cast<uint8_t>(i), f.mask});
            }
        }
        faces.push_back(SimplexRef::nondeg(s, i));
        C->add(i + 1, std::move(faces));
    }
    SCone out;
    out.cone = C;
    out.apex = e;
    std::vector<SimplexRef> img(N);
    for (uint32_t s = 0; s < N; ++s) img[s] = SimplexRef::nondeg(s, K->dim(s));
    out.inclusion = SMap(K, C, std::move(img), false);
    return out;
}

SSetPtr opposite(const SSetPtr& K) {
    auto O = std::make_shared<SSet>();
    for (uint32_t s = 0; s < K->size(); ++s) {
        const int n = K->dim(s);
        std::vector<SimplexRef> faces;
        for (int i = 0; n >= 1 && i <= n; ++i) {
            SimplexRef f = K->face(s, n - i);
            f.mask = reverse_bits(f.mask, f.dim);
            faces.push_back(f);
        }
        O->add(n, std::move(faces));
    }
    return O;
}

SMap opposite(const SMap& f, const SSetPtr& dom_op, const SSetPtr& cod_op) {
    std::vector<SimplexRef> img = f.images();
    for (auto& y : img) y.mask = reverse_bits(y.mask, y.dim);
    return SMap(dom_op, cod_op, std::move(img), false);
}

std::vector<size_t> cell_counts(const SSet& K) {
    std::vector<size_t> c(K.max_dim() + 1);
    for (int d = 0; d <= K.max_dim(); ++d) c[d] = K.count(d);
    return c;
}

namespace {

// Per simplex: counts of cofaces by dimension, an isomorphism invariant used to prune the search.
std::vector<std::vector<uint32_t>> coface_profile(const SSet& K) {
    std::vector<std::vector<uint32_t>> prof(K.size(), std::vector<uint32_t>(K.max_dim() + 2, 0));
    for (uint32_t s = 0; s < K.size(); ++s)
        for (int i = 0; K.dim(s) >= 1 && i <= K.dim(s); ++i) {
            const auto& f = K.face(s, i);
            ++prof[f.base][K.dim(s)];
            prof[f.base].back() += f.mask ? 1 : 0;
        }
    return prof;
}

}  // namespace

std::optional<SMap> find_isomorphism(const SSetPtr& K, const SSetPtr& L) {
    if (K->size() != L->size() || cell_counts(*K) != cell_counts(*L)) return std::nullopt;
    const auto pk = coface_profile(*K);
    const auto pl = coface_profile(*L);
    std::vector<uint32_t> order(K->size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) { return K->dim(a) < K->dim(b); });
    std::vector<int64_t> phi(K->size(), -1);
    std::vector<char> used(L->size(), 0);
    auto mapped = [&](const SimplexRef& r) { return SimplexRef{static_cast<uint32_t>(phi[r.base]), r.dim, r.mask}; };
    std::function<bool(size_t)> rec = [&](size_t k) -> bool {
        if (k == order.size()) return true;
        const uint32_t s = order[k];
        const int n = K->dim(s);
        for (uint32_t t : L->of_dim(n)) {
            if (used[t] || pk[s] != pl[t]) continue;
            bool ok = true;
            for (int i = 0; ok && n >= 1 && i <= n; ++i) ok = mapped(K->face(s, i)) == L->face(t, i);
            if (!ok) continue;
            phi[s] = t;
            used[t] = 1;
            if (rec(k + 1)) return true;
            used[t] = 0;
            phi[s] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    std::vector<SimplexRef> img(K->size());
    for (uint32_t s = 0; s < K->size(); ++s) img[s] = SimplexRef::nondeg(static_cast<uint32_t>(phi[s]), K->dim(s));
    return SMap(K, L, std::move(img), true);
}

ChainComplex chains(const SSet& K, uint32_t p) {
    Field F(p);
    const int top = K.max_dim();
    if (top < 0) return zero_complex(p);
    std::vector<size_t> dims(top + 1);
    for (int n = 0; n <= top; ++n) dims[n] = K.count(n);
    std::vector<Matrix> d;
    for (int n = 1; n <= top; ++n) {
        Matrix m(dims[n - 1], dims[n]);
        for (uint32_t s : K.of_dim(n)) {
            SparseVec col;
            for (int i = 0; i <= n; ++i) {
                const auto& f = K.face(s, i);
                if (f.mask) continue;
                axpy(F, col, F.from_int(i % 2 ? -1 : 1), SparseVec{{K.position(f.base), 1}});
            }
            m.set_col(K.position(s), std::move(col));
        }
        d.push_back(std::move(m));
    }
    return ChainComplex(F, std::move(dims), std::move(d));
}

ChainMap chain_map(const SMap& f, uint32_t p) {
    ChainComplex src = chains(f.domain(), p);
    ChainComplex tgt = chains(f.codomain(), p);
    std::vector<Matrix> comps;
    for (int n = 0; n <= src.top(); ++n) {
        Matrix m(tgt.dim(n), src.dim(n));
        for (uint32_t s : f.domain().of_dim(n)) {
            const auto& y = f.image(s);
            if (y.mask == 0) m.set_col(f.domain().position(s), SparseVec{{f.codomain().position(y.base), 1}});
        }
        comps.push_back(std::move(m));
    }
    return ChainMap(std::move(src), std::move(tgt), std::move(comps));
}

std::vector<size_t> homology(const SSet& K, uint32_t p) { return betti(chains(K, p)); }

WeCertificate induced_homology(const SMap& f, uint32_t p) { return we_certificate(chain_map(f, p)); }

}  // namespace hocolim
