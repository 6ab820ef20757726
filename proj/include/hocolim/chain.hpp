#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hocolim/linalg.hpp"

namespace hocolim {

// Bounded chain complex over F_p concentrated in degrees 0..top().
// Trailing zero degrees are trimmed, so equal complexes have equal representations.
// Immutable; copies share storage.
class ChainComplex {
public:
    explicit ChainComplex(uint32_t p = 2);
    // d[n-1] is the differential C_n -> C_{n-1}, a dims[n-1] x dims[n] matrix.
    ChainComplex(const Field& F, std::vector<size_t> dims, std::vector<Matrix> d);

    Field field() const { return Field(p_); }
    uint32_t p() const { return p_; }
    int top() const { return static_cast<int>(data_->dims.size()) - 1; }
    size_t dim(int n) const { return (n >= 0 && n <= top()) ? data_->dims[n] : 0; }
    const std::vector<size_t>& dims() const { return data_->dims; }
    size_t total_dim() const;
    // Differential out of degree n (n >= 1); a zero matrix outside the stored range.
    Matrix d(int n) const;
    const Matrix& d_ref(int n) const { return data_->d[n - 1]; }

    bool operator==(const ChainComplex& o) const;

private:
    struct Data {
        std::vector<size_t> dims;
        std::vector<Matrix> d;
    };
    uint32_t p_;
    std::shared_ptr<const Data> data_;
};

// Degreewise matrices; component n has shape target.dim(n) x source.dim(n).
class ChainMap {
public:
    ChainMap() = default;
    ChainMap(ChainComplex source, ChainComplex target, std::vector<Matrix> comps);

    const ChainComplex& source() const { return src_; }
    const ChainComplex& target() const { return tgt_; }
    Field field() const { return src_.field(); }
    int top() const { return static_cast<int>(m_.size()) - 1; }
    // Component in degree n; zero outside the stored range.
    Matrix at(int n) const;
    const std::vector<Matrix>& components() const { return m_; }

    bool operator==(const ChainMap& o) const = default;

private:
    ChainComplex src_;
    ChainComplex tgt_;
    std::vector<Matrix> m_;
};

ChainComplex zero_complex(uint32_t p);
// F_p concentrated in degree n.
ChainComplex sphere_complex(uint32_t p, int n);
ChainMap identity_map(const ChainComplex& c);
ChainMap zero_map(const ChainComplex& s, const ChainComplex& t);
ChainMap compose(const ChainMap& g, const ChainMap& f);
// Throws with the failing degree if d*d != 0.
void validate(const ChainComplex& c);
void validate(const ChainMap& f);

bool is_degreewise_injective(const ChainMap& f);
bool is_degreewise_iso(const ChainMap& f);

std::vector<size_t> betti(const ChainComplex& c);

// Chosen homology bases with a coordinate solver, per degree.
struct HomologyBasis {
    std::vector<size_t> betti;
    std::vector<Matrix> reps;
    std::vector<Reducer> solver;
};
HomologyBasis homology_basis(const ChainComplex& c);
// Homology coordinates of a cycle in degree n.
SparseVec homology_coords(const HomologyBasis& h, int n, const SparseVec& cycle, size_t nb);

struct WeCertificate {
    std::vector<size_t> betti_source;
    std::vector<size_t> betti_target;
    std::vector<Matrix> induced;
    bool positive = false;
};

WeCertificate we_certificate(const ChainMap& f);
// Quasi-isomorphism test through acyclicity of the mapping cone; independent of we_certificate.
bool cone_acyclic(const ChainMap& f);
ChainComplex mapping_cone(const ChainMap& f);

// f = q * i with i degreewise injective and q a quasi-isomorphism.
// Cyl_n = X_n + X_{n-1} + Y_n.
struct ChainFactorization {
    ChainComplex mid;
    ChainMap i;
    ChainMap q;
};
ChainFactorization mapping_cylinder(const ChainMap& f);
// Map of cylinders induced by a commuting square (f' a = b f).
ChainMap cylinder_map(const ChainFactorization& from, const ChainFactorization& to, const ChainMap& a,
                      const ChainMap& b);

struct ChainArrow {
    size_t src;
    size_t tgt;
    const ChainMap* map;
};

// Colimit of a graph-shaped diagram: quotient of the direct sum of objects by the
// relations x ~ map(x) for every arrow.
struct ChainColimit {
    ChainComplex apex;
    std::vector<ChainMap> legs;
    // Per degree, per apex basis vector: (object, local basis index) it was lifted from.
    std::vector<std::vector<std::pair<size_t, uint32_t>>> lift;
};
ChainColimit chain_colimit(uint32_t p, const std::vector<const ChainComplex*>& objects,
                           const std::vector<ChainArrow>& arrows);
// The morphism out of the colimit determined by a compatible family out of its objects.
ChainMap chain_induce(const ChainColimit& c, const std::vector<const ChainMap*>& maps,
                      const ChainComplex& target);
// Direct sum with inclusions.
ChainColimit direct_sum(uint32_t p, const std::vector<const ChainComplex*>& objects);

}  // namespace hocolim
