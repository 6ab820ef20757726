#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hocolim {

// Arithmetic in the prime field F_p, p < 2^15.
class Field {
public:
    explicit Field(uint32_t p = 2);

    uint32_t p() const { return p_; }
    uint32_t add(uint32_t a, uint32_t b) const { uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
    uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const { return (a * b) % p_; }
    uint32_t inv(uint32_t a) const;
    // Reduces a signed integer into [0, p).
    uint32_t from_int(long long v) const;

    bool operator==(const Field& o) const { return p_ == o.p_; }

private:
    uint32_t p_;
};

bool is_prime(uint32_t p);

struct Entry {
    uint32_t idx;
    uint32_t val;
    bool operator==(const Entry&) const = default;
};

// Sorted by idx, no zero values.
using SparseVec = std::vector<Entry>;

// v <- v + c*w
void axpy(const Field& F, SparseVec& v, uint32_t c, const SparseVec& w);
void scale(const Field& F, SparseVec& v, uint32_t c);
uint32_t coeff(const SparseVec& v, uint32_t idx);

// Column-major sparse matrix over F_p.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const SparseVec& col(size_t j) const { return data_[j]; }
    void set_col(size_t j, SparseVec v) { data_[j] = std::move(v); }
    uint32_t at(size_t i, size_t j) const { return coeff(data_[j], static_cast<uint32_t>(i)); }
    // Builder access; value must already be reduced mod p.
    void set(size_t i, size_t j, uint32_t v);
    bool is_zero() const;
    size_t nnz() const;

    bool operator==(const Matrix& o) const = default;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<SparseVec> data_;
};

SparseVec apply(const Field& F, const Matrix& a, const SparseVec& x);
Matrix multiply(const Field& F, const Matrix& a, const Matrix& b);
Matrix add(const Field& F, const Matrix& a, const Matrix& b);
Matrix negate(const Field& F, const Matrix& a);
Matrix transpose(const Matrix& a);
size_t rank(const Field& F, const Matrix& a);
// Square and invertible.
bool is_invertible(const Field& F, const Matrix& a);
// Every column is a distinct unit vector, i.e. the map is injective and sends basis to basis.
bool is_injective(const Field& F, const Matrix& a);

// Incrementally maintained echelon basis. The pivot of a stored vector is its lowest index.
// Optionally each stored vector carries a tag in a second coordinate space, so that
// reduction also reports which combination of inserted tags was subtracted.
class Reducer {
public:
    Reducer(const Field& F, size_t dim);

    // Returns true if v was independent of the stored span.
    bool insert(SparseVec v, SparseVec tag = {});
    // Fully reduces v modulo the span; the result has no entries at pivot rows.
    // If tag_out is given, it accumulates sum c_k * tag_k where v_in = v_out + sum c_k * u_k.
    SparseVec reduce(SparseVec v, SparseVec* tag_out = nullptr) const;

    bool is_pivot(uint32_t row) const { return slot_[row] >= 0; }
    size_t rank() const { return basis_.size(); }
    size_t dim() const { return dim_; }
    const Field& field() const { return F_; }

private:
    Field F_;
    size_t dim_;
    std::vector<SparseVec> basis_;
    std::vector<SparseVec> tags_;
    std::vector<int64_t> slot_;
};

// Basis of the kernel of a (as columns of the returned matrix).
Matrix kernel(const Field& F, const Matrix& a);

}  // namespace hocolim
