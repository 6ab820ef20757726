#include "hocolim/chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hocolim {

namespace {

// Copies the columns of `block` into `out` with row and column offsets.
void place(Matrix& out, const Matrix& block, size_t row_off, size_t col_off, const Field& F,
           bool negated = false) {
    for (size_t j = 0; j < block.cols(); ++j) {
        SparseVec c = out.col(col_off + j);
        SparseVec add;
        add.reserve(block.col(j).size());
        for (const auto& e : block.col(j))
            add.push_back({static_cast<uint32_t>(e.idx + row_off), negated ? F.neg(e.val) : e.val});
        axpy(F, c, 1, add);
        out.set_col(col_off + j, std::move(c));
    }
}

void sort_vec(SparseVec& v, const Field& F) {
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.idx < b.idx; });
    SparseVec out;
    for (const auto& e : v) {
        if (!out.empty() && out.back().idx == e.idx)
            out.back().val = F.add(out.back().val, e.val);
        else
            out.push_back(e);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Entry& e) { return e.val == 0; }),
              out.end());
    v.swap(out);
}

}  // namespace

ChainComplex::ChainComplex(uint32_t p) : p_(Field(p).p()), data_(std::make_shared<Data>()) {}

ChainComplex::ChainComplex(const Field& F, std::vector<size_t> dims, std::vector<Matrix> d)
    : p_(F.p()) {
    if (!dims.empty() && d.size() + 1 != dims.size())
        throw std::invalid_argument("chain complex needs one differential per positive degree");
    for (size_t n = 1; n < dims.size(); ++n) {
        if (d[n - 1].rows() != dims[n - 1] || d[n - 1].cols() != dims[n])
            throw std::invalid_argument("differential in degree " + std::to_string(n) +
                                        " has the wrong shape");
    }
    while (!dims.empty() && dims.back() == 0) {
        dims.pop_back();
        if (!d.empty()) d.pop_back();
    }
    if (dims.empty()) d.clear();
    auto data = std::make_shared<Data>();
    data->dims = std::move(dims);
    data->d = std::move(d);
    data_ = std::move(data);
}

size_t ChainComplex::total_dim() const {
    size_t s = 0;
    for (auto x : data_->dims) s += x;
    return s;
}

Matrix ChainComplex::d(int n) const {
    if (n >= 1 && n <= top()) return data_->d[n - 1];
    return Matrix(dim(n - 1), dim(n));
}

bool ChainComplex::operator==(const ChainComplex& o) const {
    if (p_ != o.p_) return false;
    if (data_ == o.data_) return true;
    return data_->dims == o.data_->dims && data_->d == o.data_->d;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<Matrix> comps)
    : src_(std::move(source)), tgt_(std::move(target)), m_(std::move(comps)) {
    if (src_.p() != tgt_.p()) throw std::invalid_argument("chain map between different fields");
    int top = std::max(src_.top(), tgt_.top());
    while (static_cast<int>(m_.size()) > top + 1) {
        if (!m_.back().is_zero())
            throw std::invalid_argument("chain map has a nonzero component above both complexes");
        m_.pop_back();
    }
    while (static_cast<int>(m_.size()) < top + 1) {
        int n = static_cast<int>(m_.size());
        m_.emplace_back(tgt_.dim(n), src_.dim(n));
    }
    for (int n = 0; n <= top; ++n) {
        if (m_[n].rows() != tgt_.dim(n) || m_[n].cols() != src_.dim(n))
            throw std::invalid_argument("chain map component in degree " + std::to_string(n) +
                                        " has the wrong shape");
    }
}

Matrix ChainMap::at(int n) const {
    if (n >= 0 && n <= top()) return m_[n];
    return Matrix(tgt_.dim(n), src_.dim(n));
}

ChainComplex zero_complex(uint32_t p) { return ChainComplex(p); }

ChainComplex sphere_complex(uint32_t p, int n) {
    std::vector<size_t> dims(n + 1, 0);
    dims[n] = 1;
    std::vector<Matrix> d;
    for (int k = 1; k <= n; ++k) d.emplace_back(dims[k - 1], dims[k]);
    return ChainComplex(Field(p), dims, d);
}

ChainMap identity_map(const ChainComplex& c) {
    std::vector<Matrix> m;
    for (int n = 0; n <= c.top(); ++n) m.push_back(Matrix::identity(c.dim(n)));
    return ChainMap(c, c, std::move(m));
}

ChainMap zero_map(const ChainComplex& s, const ChainComplex& t) { return ChainMap(s, t, {}); }

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!(f.target() == g.source())) throw std::invalid_argument("composing non-composable chain maps");
    Field F = f.field();
    int top = std::max(f.source().top(), g.target().top());
    std::vector<Matrix> m;
    for (int n = 0; n <= top; ++n) m.push_back(multiply(F, g.at(n), f.at(n)));
    return ChainMap(f.source(), g.target(), std::move(m));
}

void validate(const ChainComplex& c) {
    Field F = c.field();
    for (int n = 2; n <= c.top(); ++n) {
        if (!multiply(F, c.d_ref(n - 1), c.d_ref(n)).is_zero())
            throw std::invalid_argument("d*d != 0 out of degree " + std::to_string(n));
    }
}

void validate(const ChainMap& f) {
    Field F = f.field();
    int top = std::max(f.source().top(), f.target().top());
    for (int n = 1; n <= top; ++n) {
        Matrix lhs = multiply(F, f.target().d(n), f.at(n));
        Matrix rhs = multiply(F, f.at(n - 1), f.source().d(n));
        if (!(lhs == rhs))
            throw std::invalid_argument("chain map does not commute with d in degree " + std::to_string(n));
    }
}

bool is_degreewise_injective(const ChainMap& f) {
    Field F = f.field();
    for (int n = 0; n <= f.source().top(); ++n)
        if (!is_injective(F, f.at(n))) return false;
    return true;
}

bool is_degreewise_iso(const ChainMap& f) {
    Field F = f.field();
    int top = std::max(f.source().top(), f.target().top());
    for (int n = 0; n <= top; ++n)
        if (!is_invertible(F, f.at(n))) return false;
    return true;
}

std::vector<size_t> betti(const ChainComplex& c) {
    Field F = c.field();
    std::vector<size_t> rk(c.top() + 2, 0);
    for (int n = 1; n <= c.top(); ++n) rk[n] = rank(F, c.d_ref(n));
    std::vector<size_t> b;
    for (int n = 0; n <= c.top(); ++n) b.push_back(c.dim(n) - rk[n] - rk[n + 1]);
    return b;
}

HomologyBasis homology_basis(const ChainComplex& c) {
    Field F = c.field();
    HomologyBasis h;
    for (int n = 0; n <= c.top(); ++n) {
        Reducer solver(F, c.dim(n));
        if (n + 1 <= c.top()) {
            const Matrix& dn1 = c.d_ref(n + 1);
            for (size_t j = 0; j < dn1.cols(); ++j) solver.insert(dn1.col(j));
        }
        Matrix z = n == 0 ? Matrix::identity(c.dim(0)) : kernel(F, c.d_ref(n));
        std::vector<SparseVec> reps;
        for (size_t j = 0; j < z.cols(); ++j) {
            SparseVec tag{{static_cast<uint32_t>(reps.size()), 1}};
            if (solver.insert(z.col(j), tag)) reps.push_back(z.col(j));
        }
        Matrix r(c.dim(n), reps.size());
        for (size_t k = 0; k < reps.size(); ++k) r.set_col(k, reps[k]);
        h.betti.push_back(reps.size());
        h.reps.push_back(std::move(r));
        h.solver.push_back(std::move(solver));
    }
    return h;
}

SparseVec homology_coords(const HomologyBasis& h, int n, const SparseVec& cycle, size_t nb) {
    if (n < 0 || n >= static_cast<int>(h.solver.size())) {
        if (!cycle.empty()) throw std::logic_error("cycle in a degree with no chains");
        return {};
    }
    SparseVec tag;
    SparseVec rest = h.solver[n].reduce(cycle, &tag);
    if (!rest.empty()) throw std::logic_error("vector is not a cycle");
    for (const auto& e : tag)
        if (e.idx >= nb) throw std::logic_error("homology coordinate out of range");
    return tag;
}

WeCertificate we_certificate(const ChainMap& f) {
    Field F = f.field();
    WeCertificate cert;
    HomologyBasis hs = homology_basis(f.source());
    HomologyBasis ht = homology_basis(f.target());
    cert.betti_source = hs.betti;
    cert.betti_target = ht.betti;
    int top = std::max(f.source().top(), f.target().top());
    cert.positive = true;
    for (int n = 0; n <= top; ++n) {
        size_t bs = n < static_cast<int>(hs.betti.size()) ? hs.betti[n] : 0;
        size_t bt = n < static_cast<int>(ht.betti.size()) ? ht.betti[n] : 0;
        Matrix m(bt, bs);
        Matrix fn = f.at(n);
        for (size_t k = 0; k < bs; ++k) m.set_col(k, homology_coords(ht, n, apply(F, fn, hs.reps[n].col(k)), bt));
        if (!is_invertible(F, m)) cert.positive = false;
        cert.induced.push_back(std::move(m));
    }
    return cert;
}

ChainComplex mapping_cone(const ChainMap& f) {
    Field F = f.field();
    const ChainComplex& X = f.source();
    const ChainComplex& Y = f.target();
    int top = std::max(X.top() + 1, Y.top());
    std::vector<size_t> dims;
    for (int n = 0; n <= top; ++n) dims.push_back(X.dim(n - 1) + Y.dim(n));
    std::vector<Matrix> d;
    for (int n = 1; n <= top; ++n) {
        Matrix m(dims[n - 1], dims[n]);
        // (x, y) in X_{n-1} + Y_n  ->  (-dx, f x + dy) in X_{n-2} + Y_{n-1}
        place(m, X.d(n - 1), 0, 0, F, true);
        place(m, f.at(n - 1), X.dim(n - 2), 0, F);
        place(m, Y.d(n), X.dim(n - 2), X.dim(n - 1), F);
        d.push_back(std::move(m));
    }
    return ChainComplex(F, dims, d);
}

bool cone_acyclic(const ChainMap& f) {
    for (auto b : betti(mapping_cone(f)))
        if (b != 0) return false;
    return true;
}

ChainFactorization mapping_cylinder(const ChainMap& f) {
    Field F = f.field();
    const ChainComplex& X = f.source();
    const ChainComplex& Y = f.target();
    int top = std::max(X.top() + 1, Y.top());
    std::vector<size_t> dims;
    for (int n = 0; n <= top; ++n) dims.push_back(X.dim(n) + X.dim(n - 1) + Y.dim(n));
    std::vector<Matrix> d;
    for (int n = 1; n <= top; ++n) {
        // blocks of Cyl_n: a in X_n, b in X_{n-1}, c in Y_n
        // d(a, b, c) = (da - b, -db, dc + f b)
        size_t a0 = X.dim(n - 1), b0 = X.dim(n - 2);
        Matrix m(dims[n - 1], dims[n]);
        place(m, X.d(n), 0, 0, F);
        place(m, Matrix::identity(X.dim(n - 1)), 0, X.dim(n), F, true);
        place(m, X.d(n - 1), a0, X.dim(n), F, true);
        place(m, f.at(n - 1), a0 + b0, X.dim(n), F);
        place(m, Y.d(n), a0 + b0, X.dim(n) + X.dim(n - 1), F);
        d.push_back(std::move(m));
    }
    ChainComplex cyl(F, dims, d);
    std::vector<Matrix> im, qm;
    for (int n = 0; n <= top; ++n) {
        Matrix i(cyl.dim(n), X.dim(n));
        place(i, Matrix::identity(X.dim(n)), 0, 0, F);
        im.push_back(std::move(i));
        Matrix q(Y.dim(n), cyl.dim(n));
        place(q, f.at(n), 0, 0, F);
        place(q, Matrix::identity(Y.dim(n)), 0, X.dim(n) + X.dim(n - 1), F);
        qm.push_back(std::move(q));
    }
    return {cyl, ChainMap(X, cyl, std::move(im)), ChainMap(cyl, Y, std::move(qm))};
}

ChainMap cylinder_map(const ChainFactorization& from, const ChainFactorization& to, const ChainMap& a,
                      const ChainMap& b) {
    Field F = a.field();
    const ChainComplex& X = a.source();
    const ChainComplex& X2 = a.target();
    int top = std::max(from.mid.top(), to.mid.top());
    std::vector<Matrix> m;
    for (int n = 0; n <= top; ++n) {
        Matrix c(to.mid.dim(n), from.mid.dim(n));
        place(c, a.at(n), 0, 0, F);
        place(c, a.at(n - 1), X2.dim(n), X.dim(n), F);
        place(c, b.at(n), X2.dim(n) + X2.dim(n - 1), X.dim(n) + X.dim(n - 1), F);
        m.push_back(std::move(c));
    }
    return ChainMap(from.mid, to.mid, std::move(m));
}

ChainColimit chain_colimit(uint32_t p, const std::vector<const ChainComplex*>& objects,
                           const std::vector<ChainArrow>& arrows) {
    Field F(p);
    int top = -1;
    for (auto* o : objects) {
        if (o->p() != p) throw std::invalid_argument("colimit over mixed fields");
        top = std::max(top, o->top());
    }
    for (const auto& a : arrows) {
        if (a.src >= objects.size() || a.tgt >= objects.size())
            throw std::invalid_argument("colimit arrow references a missing object");
        if (!(a.map->source() == *objects[a.src]) || !(a.map->target() == *objects[a.tgt]))
            throw std::invalid_argument("colimit arrow does not match its endpoints");
    }
    // Coordinates follow a DFS postorder along the arrows, so targets sit below sources: the pivot
    // of each relation lands in the target and elimination chains stay short.
    std::vector<std::vector<uint32_t>> out_arrows(objects.size());
    for (const auto& a : arrows) out_arrows[a.src].push_back(a.tgt);
    std::vector<uint32_t> postorder;
    std::vector<char> seen(objects.size(), 0);
    std::vector<std::pair<uint32_t, size_t>> stack;
    for (uint32_t root = 0; root < objects.size(); ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            auto& [o, next] = stack.back();
            if (next < out_arrows[o].size()) {
                const uint32_t t = out_arrows[o][next++];
                if (!seen[t]) {
                    seen[t] = 1;
                    stack.push_back({t, 0});
                }
            } else {
                postorder.push_back(o);
                stack.pop_back();
            }
        }
    }
    // offsets[n][o]
    std::vector<std::vector<size_t>> off(top + 1);
    std::vector<size_t> total(top + 1, 0);
    for (int n = 0; n <= top; ++n) {
        off[n].resize(objects.size());
        for (uint32_t o : postorder) {
            off[n][o] = total[n];
            total[n] += objects[o]->dim(n);
        }
    }
    std::vector<Reducer> rel;
    for (int n = 0; n <= top; ++n) rel.emplace_back(F, total[n]);
    for (const auto& a : arrows) {
        for (int n = 0; n <= objects[a.src]->top(); ++n) {
            Matrix m = a.map->at(n);
            for (size_t k = 0; k < m.cols(); ++k) {
                SparseVec v;
                for (const auto& e : m.col(k)) v.push_back({static_cast<uint32_t>(off[n][a.tgt] + e.idx), e.val});
                v.push_back({static_cast<uint32_t>(off[n][a.src] + k), F.neg(1)});
                sort_vec(v, F);
                rel[n].insert(std::move(v));
            }
        }
    }
    ChainColimit out;
    std::vector<std::vector<int64_t>> qidx(top + 1);
    std::vector<size_t> qdims(top + 1, 0);
    out.lift.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        qidx[n].assign(total[n], -1);
        // the quotient basis follows the object order, so direct sums keep their summand order
        for (size_t o = 0; o < objects.size(); ++o) {
            for (size_t k = 0; k < objects[o]->dim(n); ++k) {
                const size_t r = off[n][o] + k;
                if (rel[n].is_pivot(static_cast<uint32_t>(r))) continue;
                qidx[n][r] = static_cast<int64_t>(qdims[n]++);
                out.lift[n].push_back({o, static_cast<uint32_t>(k)});
            }
        }
    }
    auto project = [&](int n, SparseVec v) {
        v = rel[n].reduce(std::move(v));
        for (auto& e : v) e.idx = static_cast<uint32_t>(qidx[n][e.idx]);
        // qidx follows the object order, not the coordinate order
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.idx < b.idx; });
        return v;
    };
    std::vector<Matrix> d;
    for (int n = 1; n <= top; ++n) {
        Matrix m(qdims[n - 1], qdims[n]);
        for (size_t q = 0; q < qdims[n]; ++q) {
            auto [o, k] = out.lift[n][q];
            SparseVec v;
            if (n <= objects[o]->top())
                for (const auto& e : objects[o]->d_ref(n).col(k))
                    v.push_back({static_cast<uint32_t>(off[n - 1][o] + e.idx), e.val});
            m.set_col(q, project(n - 1, std::move(v)));
        }
        d.push_back(std::move(m));
    }
    out.apex = ChainComplex(F, qdims, d);
    for (size_t o = 0; o < objects.size(); ++o) {
        std::vector<Matrix> comps;
        for (int n = 0; n <= objects[o]->top(); ++n) {
            Matrix m(out.apex.dim(n), objects[o]->dim(n));
            for (size_t k = 0; k < objects[o]->dim(n); ++k)
                m.set_col(k, project(n, {{static_cast<uint32_t>(off[n][o] + k), 1}}));
            comps.push_back(std::move(m));
        }
        out.legs.emplace_back(*objects[o], out.apex, std::move(comps));
    }
    out.lift.resize(out.apex.top() + 1);
    return out;
}

ChainMap chain_induce(const ChainColimit& c, const std::vector<const ChainMap*>& maps,
                      const ChainComplex& target) {
    if (maps.size() != c.legs.size()) throw std::invalid_argument("induced map needs one map per object");
    for (size_t o = 0; o < maps.size(); ++o) {
        if (!(maps[o]->source() == c.legs[o].source()) || !(maps[o]->target() == target))
            throw std::invalid_argument("induced map: component does not match");
    }
    std::vector<Matrix> comps;
    for (int n = 0; n <= c.apex.top(); ++n) {
        Matrix m(target.dim(n), c.apex.dim(n));
        for (size_t q = 0; q < c.apex.dim(n); ++q) {
            auto [o, k] = c.lift[n][q];
            const auto& mc = maps[o]->components();
            if (n < static_cast<int>(mc.size())) m.set_col(q, mc[n].col(k));
        }
        comps.push_back(std::move(m));
    }
    return ChainMap(c.apex, target, std::move(comps));
}

ChainColimit direct_sum(uint32_t p, const std::vector<const ChainComplex*>& objects) {
    return chain_colimit(p, objects, {});
}

}  // namespace hocolim
