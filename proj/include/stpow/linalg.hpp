#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "stpow/zp.hpp"

namespace stpow {

// Sparse vector over Z/p: (column, value) pairs, columns strictly increasing,
// values nonzero.
using SparseVec = std::vector<std::pair<u32, u32>>;

// Row-echelon basis of a subspace of (Z/p)^ncols. Rows are not back-reduced;
// each has leading coefficient 1 at a column no other row leads at. Pivoting
// is deterministic: the lowest nonzero column.
class EchelonBasis {
public:
    EchelonBasis(u32 p, std::size_t ncols);

    u32 p() const { return p_; }
    std::size_t ncols() const { return pivot_row_.size(); }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseVec>& rows() const { return rows_; }
    bool is_pivot(u32 col) const { return pivot_row_[col] >= 0; }

    // Eliminates every pivot column of v, lowest column first. The result is
    // the unique representative of v + span supported off the pivot columns.
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    // Returns false when v already lies in the span.
    bool insert(const SparseVec& v);

private:
    u32 p_;
    std::vector<SparseVec> rows_;
    std::vector<long> pivot_row_;
};

using DenseRow = std::vector<u32>;

struct Rref {
    std::vector<DenseRow> rows;  // nonzero rows only, pivots normalized to 1
    std::vector<std::size_t> pivots;
};

// Reduced row echelon form, lowest column pivots first.
Rref rref(std::vector<DenseRow> rows, std::size_t ncols, u32 p);

// Basis of {a : sum_i a_i images[i] = 0} in (Z/p)^images.size(), one vector
// per free variable, in reduced echelon form.
std::vector<DenseRow> kernel_of(const std::vector<SparseVec>& images, u32 p);

SparseVec to_sparse(const DenseRow& row);

}  // namespace stpow
