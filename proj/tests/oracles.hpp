#pragma once

// Reference computations written independently of the library: dense matrices,
// plain Gaussian elimination, and brute-force enumeration.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hocolim/chain.hpp"
#include "hocolim/simplicial.hpp"

namespace oracle {

using Dense = std::vector<std::vector<long long>>;  // row-major

inline long long mod(long long a, long long p) { return ((a % p) + p) % p; }

inline long long inv(long long a, long long p) {
    for (long long x = 1; x < p; ++x)
        if (mod(a * x, p) == 1) return x;
    return 0;
}

inline size_t rank(Dense a, long long p) {
    size_t r = 0;
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && mod(a[piv][c], p) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        long long iv = inv(mod(a[r][c], p), p);
        for (auto& x : a[r]) x = mod(x * iv, p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            long long f = mod(a[i][c], p);
            if (!f) continue;
            for (size_t k = 0; k < cols; ++k) a[i][k] = mod(a[i][k] - f * a[r][k], p);
        }
        ++r;
    }
    return r;
}

inline Dense dense(const hocolim::Matrix& m) {
    Dense d(m.rows(), std::vector<long long>(m.cols(), 0));
    for (size_t j = 0; j < m.cols(); ++j)
        for (const auto& e : m.col(j)) d[e.idx][j] = e.val;
    return d;
}

inline Dense multiply(const Dense& a, const Dense& b, long long p) {
    const size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    Dense c(n, std::vector<long long>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t)
            for (size_t j = 0; j < m; ++j) c[i][j] = mod(c[i][j] + a[i][t] * b[t][j], p);
    return c;
}

// Betti numbers from boundary matrices d[n]: C_{n+1} -> C_n given densely.
inline std::vector<size_t> betti(const std::vector<size_t>& dims, const std::vector<Dense>& d, long long p) {
    std::vector<size_t> rk(dims.size() + 1, 0);
    for (size_t n = 0; n < d.size(); ++n) rk[n + 1] = rank(d[n], p);
    std::vector<size_t> b;
    for (size_t n = 0; n < dims.size(); ++n) b.push_back(dims[n] - rk[n] - rk[n + 1]);
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
}

inline std::vector<size_t> betti(const hocolim::ChainComplex& c) {
    std::vector<Dense> d;
    for (int n = 1; n <= c.top(); ++n) d.push_back(dense(c.d_ref(n)));
    return betti(c.dims(), d, c.p());
}

// Homology of a simplicial set straight from its face table.
inline std::vector<size_t> betti(const hocolim::SSet& K, long long p) {
    std::vector<size_t> dims;
    std::vector<Dense> d;
    for (int n = 0; n <= K.max_dim(); ++n) dims.push_back(K.count(n));
    for (int n = 1; n <= K.max_dim(); ++n) {
        Dense m(dims[n - 1], std::vector<long long>(dims[n], 0));
        const auto& lo = K.of_dim(n - 1);
        const auto& hi = K.of_dim(n);
        for (size_t c = 0; c < hi.size(); ++c)
            for (int i = 0; i <= n; ++i) {
                auto f = K.face(hi[c], i);
                if (f.mask) continue;
                for (size_t r = 0; r < lo.size(); ++r)
                    if (lo[r] == f.base) m[r][c] += (i % 2 ? -1 : 1);
            }
        d.push_back(m);
    }
    return betti(dims, d, p);
}

inline std::vector<size_t> trim(std::vector<size_t> b) {
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
}

// Number of strictly increasing chains of length k+1 in the product poset [a] x [b];
// these are the non-degenerate k-simplices of Delta[a] x Delta[b].
inline size_t product_chains(int a, int b, int k) {
    size_t count = 0;
    std::vector<std::pair<int, int>> pts;
    for (int x = 0; x <= a; ++x)
        for (int y = 0; y <= b; ++y) pts.push_back({x, y});
    std::vector<int> idx;
    auto less = [&](int u, int v) {
        return pts[u].first <= pts[v].first && pts[u].second <= pts[v].second && u != v;
    };
    auto rec = [&](auto&& self, int last, int left) -> void {
        if (left == 0) {
            ++count;
            return;
        }
        for (int v = 0; v < static_cast<int>(pts.size()); ++v)
            if (last < 0 || less(last, v)) self(self, v, left - 1);
    };
    rec(rec, -1, k + 1);
    return count;
}

// Betti numbers of the mapping cone of f: A -> B, with Cone_n = A_{n-1} + B_n.
inline std::vector<size_t> cone_betti(const hocolim::ChainMap& f) {
    const auto& A = f.source();
    const auto& B = f.target();
    const long long p = A.p();
    const int top = std::max(A.top() + 1, B.top());
    std::vector<size_t> dims;
    for (int n = 0; n <= top; ++n) dims.push_back(A.dim(n - 1) + B.dim(n));
    std::vector<Dense> d;
    for (int n = 1; n <= top; ++n) {
        Dense m(dims[n - 1], std::vector<long long>(dims[n], 0));
        const size_t a_lo = A.dim(n - 2), a_hi = A.dim(n - 1);
        if (n >= 2) {
            Dense da = dense(A.d(n - 1));
            for (size_t r = 0; r < a_lo; ++r)
                for (size_t c = 0; c < a_hi; ++c) m[r][c] = mod(-da[r][c], p);
        }
        Dense fa = dense(f.at(n - 1));
        for (size_t r = 0; r < B.dim(n - 1); ++r)
            for (size_t c = 0; c < a_hi; ++c) m[a_lo + r][c] = fa[r][c];
        Dense db = dense(B.d(n));
        for (size_t r = 0; r < B.dim(n - 1); ++r)
            for (size_t c = 0; c < B.dim(n); ++c) m[a_lo + r][a_hi + c] = db[r][c];
        d.push_back(m);
    }
    return betti(dims, d, p);
}

// Homotopy colimit by the bar construction: the total complex of the double complex whose
// column m is the sum of F(source) over chains of m composable non-identity morphisms.
// Faces drop an end or compose; dropping the source pushes forward along its morphism.
// Written against FinCat only; requires a loop-free category.
inline std::vector<size_t> bar_betti(const hocolim::FinCat& I, const std::vector<hocolim::ChainComplex>& value,
                                     const std::vector<hocolim::ChainMap>& mor, long long p) {
    using Chain = std::vector<uint32_t>;  // morphisms a_1, ..., a_m with a_k: x_{k-1} -> x_k
    std::vector<std::vector<Chain>> chains(1);
    for (uint32_t o = 0; o < I.num_objects(); ++o) chains[0].push_back({o});  // an object, stored as its identity
    for (size_t m = 1;; ++m) {
        std::vector<Chain> next;
        for (const auto& c : chains[m - 1])
            for (uint32_t a = static_cast<uint32_t>(I.num_objects()); a < I.num_morphisms(); ++a) {
                if (m == 1) {
                    if (I.src(a) == c[0]) next.push_back({a});
                } else if (I.src(a) == I.tgt(c.back())) {
                    Chain x = c;
                    x.push_back(a);
                    next.push_back(x);
                }
            }
        if (next.empty()) break;
        chains.push_back(next);
    }
    const auto source = [&](const Chain& c, size_t m) { return m == 0 ? c[0] : I.src(c[0]); };
    // degree q of column m starts at offset[m][index] inside total degree m + q
    const int qmax = [&] {
        int t = 0;
        for (const auto& x : value) t = std::max(t, x.top());
        return t;
    }();
    const int top = static_cast<int>(chains.size()) - 1 + qmax;
    std::vector<size_t> dims(top + 1, 0);
    std::vector<std::vector<std::vector<size_t>>> offset(chains.size());
    for (size_t m = 0; m < chains.size(); ++m) {
        offset[m].resize(chains[m].size());
        for (size_t c = 0; c < chains[m].size(); ++c)
            for (int q = 0; q <= qmax; ++q) {
                offset[m][c].push_back(dims[m + q]);
                dims[m + q] += value[source(chains[m][c], m)].dim(q);
            }
    }
    const auto find = [&](size_t m, const Chain& c) -> size_t {
        for (size_t k = 0; k < chains[m].size(); ++k)
            if (chains[m][k] == c) return k;
        return chains[m].size();
    };
    std::vector<Dense> d;
    for (int n = 1; n <= top; ++n) d.push_back(Dense(dims[n - 1], std::vector<long long>(dims[n], 0)));
    const auto add_block = [&](int n, size_t row0, size_t col0, const Dense& blk, long long sign) {
        for (size_t r = 0; r < blk.size(); ++r)
            for (size_t c = 0; c < blk[r].size(); ++c) d[n - 1][row0 + r][col0 + c] = mod(d[n - 1][row0 + r][col0 + c] + sign * blk[r][c], p);
    };
    const auto identity = [](size_t k) {
        Dense e(k, std::vector<long long>(k, 0));
        for (size_t i = 0; i < k; ++i) e[i][i] = 1;
        return e;
    };
    for (size_t m = 0; m < chains.size(); ++m)
        for (size_t c = 0; c < chains[m].size(); ++c) {
            const Chain& ch = chains[m][c];
            const auto& X = value[source(ch, m)];
            for (int q = 0; q <= X.top(); ++q) {
                const int n = static_cast<int>(m) + q;
                const size_t col = offset[m][c][q];
                // internal differential with sign (-1)^m
                if (q >= 1) add_block(n, offset[m][c][q - 1], col, dense(X.d(q)), m % 2 ? -1 : 1);
                if (m == 0) continue;
                for (size_t k = 0; k <= m; ++k) {
                    Chain face;
                    if (m == 1) {
                        face = {k == 0 ? I.tgt(ch[0]) : I.src(ch[0])};
                    } else if (k == 0) {
                        face.assign(ch.begin() + 1, ch.end());
                    } else if (k == m) {
                        face.assign(ch.begin(), ch.end() - 1);
                    } else {
                        face = ch;
                        face[k - 1] = I.compose(ch[k], ch[k - 1]);
                        face.erase(face.begin() + k);
                    }
                    const size_t f = find(m - 1, face);
                    const long long sign = k % 2 ? -1 : 1;
                    const Dense blk = k == 0 ? dense(mor[ch[0]].at(q)) : identity(X.dim(q));
                    add_block(n, offset[m - 1][f][q], col, blk, sign);
                }
            }
        }
    return betti(dims, d, p);
}

}  // namespace oracle
