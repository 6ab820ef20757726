#include "hocolim/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hocolim {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Field::Field(uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 15))
        throw std::invalid_argument("field characteristic must be a prime below 32768, got " +
                                    std::to_string(p));
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    uint32_t r = 1, b = a, e = p_ - 2;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

uint32_t Field::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
}

void axpy(const Field& F, SparseVec& v, uint32_t c, const SparseVec& w) {
    if (c == 0 || w.empty()) return;
    SparseVec out;
    out.reserve(v.size() + w.size());
    size_t a = 0, b = 0;
    while (a < v.size() || b < w.size()) {
        if (b == w.size() || (a < v.size() && v[a].idx < w[b].idx)) {
            out.push_back(v[a++]);
        } else if (a == v.size() || w[b].idx < v[a].idx) {
            out.push_back({w[b].idx, F.mul(c, w[b].val)});
            ++b;
        } else {
            uint32_t s = F.add(v[a].val, F.mul(c, w[b].val));
            if (s != 0) out.push_back({v[a].idx, s});
            ++a;
            ++b;
        }
    }
    v.swap(out);
}

void scale(const Field& F, SparseVec& v, uint32_t c) {
    if (c == 0) {
        v.clear();
        return;
    }
    for (auto& e : v) e.val = F.mul(e.val, c);
}

uint32_t coeff(const SparseVec& v, uint32_t idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const Entry& e, uint32_t i) { return e.idx < i; });
    return (it != v.end() && it->idx == idx) ? it->val : 0;
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t j = 0; j < n; ++j) m.data_[j] = {{static_cast<uint32_t>(j), 1}};
    return m;
}

void Matrix::set(size_t i, size_t j, uint32_t v) {
    auto& c = data_[j];
    auto idx = static_cast<uint32_t>(i);
    auto it = std::lower_bound(c.begin(), c.end(), idx,
                               [](const Entry& e, uint32_t k) { return e.idx < k; });
    if (it != c.end() && it->idx == idx) {
        if (v == 0)
            c.erase(it);
        else
            it->val = v;
    } else if (v != 0) {
        c.insert(it, {idx, v});
    }
}

bool Matrix::is_zero() const {
    for (const auto& c : data_)
        if (!c.empty()) return false;
    return true;
}

size_t Matrix::nnz() const {
    size_t n = 0;
    for (const auto& c : data_) n += c.size();
    return n;
}

SparseVec apply(const Field& F, const Matrix& a, const SparseVec& x) {
    SparseVec out;
    for (const auto& e : x) axpy(F, out, e.val, a.col(e.idx));
    return out;
}

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix shape mismatch in multiply: " + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()));
    Matrix out(a.rows(), b.cols());
    for (size_t j = 0; j < b.cols(); ++j) out.set_col(j, apply(F, a, b.col(j)));
    return out;
}

Matrix add(const Field& F, const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape mismatch in add");
    Matrix out = a;
    for (size_t j = 0; j < b.cols(); ++j) {
        SparseVec c = a.col(j);
        axpy(F, c, 1, b.col(j));
        out.set_col(j, std::move(c));
    }
    return out;
}

Matrix negate(const Field& F, const Matrix& a) {
    Matrix out = a;
    for (size_t j = 0; j < a.cols(); ++j) {
        SparseVec c = a.col(j);
        scale(F, c, F.neg(1));
        out.set_col(j, std::move(c));
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    std::vector<SparseVec> rows(a.rows());
    for (size_t j = 0; j < a.cols(); ++j)
        for (const auto& e : a.col(j)) rows[e.idx].push_back({static_cast<uint32_t>(j), e.val});
    Matrix out(a.cols(), a.rows());
    for (size_t i = 0; i < a.rows(); ++i) out.set_col(i, std::move(rows[i]));
    return out;
}

size_t rank(const Field& F, const Matrix& a) {
    Reducer r(F, a.rows());
    for (size_t j = 0; j < a.cols(); ++j) r.insert(a.col(j));
    return r.rank();
}

bool is_invertible(const Field& F, const Matrix& a) {
    return a.rows() == a.cols() && rank(F, a) == a.rows();
}

bool is_injective(const Field& F, const Matrix& a) { return rank(F, a) == a.cols(); }

Reducer::Reducer(const Field& F, size_t dim) : F_(F), dim_(dim), slot_(dim, -1) {}

SparseVec Reducer::reduce(SparseVec v, SparseVec* tag_out) const {
    uint32_t cursor = 0;
    while (true) {
        auto it = std::lower_bound(v.begin(), v.end(), cursor,
                                   [](const Entry& e, uint32_t i) { return e.idx < i; });
        while (it != v.end() && slot_[it->idx] < 0) ++it;
        if (it == v.end()) break;
        uint32_t row = it->idx;
        uint32_t c = it->val;
        size_t k = static_cast<size_t>(slot_[row]);
        axpy(F_, v, F_.neg(c), basis_[k]);
        if (tag_out) axpy(F_, *tag_out, c, tags_[k]);
        cursor = row + 1;
    }
    return v;
}

bool Reducer::insert(SparseVec v, SparseVec tag) {
    SparseVec acc;
    v = reduce(std::move(v), &acc);
    if (v.empty()) return false;
    // tag of the reduced vector: tag - acc
    axpy(F_, tag, F_.neg(1), acc);
    uint32_t lead = F_.inv(v.front().val);
    scale(F_, v, lead);
    scale(F_, tag, lead);
    slot_[v.front().idx] = static_cast<int64_t>(basis_.size());
    basis_.push_back(std::move(v));
    tags_.push_back(std::move(tag));
    return true;
}

Matrix kernel(const Field& F, const Matrix& a) {
    Reducer r(F, a.rows());
    std::vector<SparseVec> ker;
    for (size_t j = 0; j < a.cols(); ++j) {
        SparseVec tag{{static_cast<uint32_t>(j), 1}};
        SparseVec acc;
        SparseVec red = r.reduce(a.col(j), &acc);
        if (red.empty()) {
            // a_j = sum acc-combination of columns; kernel vector e_j - acc
            axpy(F, tag, F.neg(1), acc);
            ker.push_back(std::move(tag));
        } else {
            r.insert(a.col(j), tag);
        }
    }
    Matrix out(a.cols(), ker.size());
    for (size_t k = 0; k < ker.size(); ++k) out.set_col(k, std::move(ker[k]));
    return out;
}

}  // namespace hocolim
