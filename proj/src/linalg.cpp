#include "stpow/linalg.hpp"

#include <algorithm>

namespace stpow {

EchelonBasis::EchelonBasis(u32 p, std::size_t ncols) : p_(p), pivot_row_(ncols, -1) {}

SparseVec EchelonBasis::reduce(const SparseVec& v) const {
    if (v.empty()) return {};
    // Dense accumulator over the columns touched; rows only reach to the right
    // of their pivot, so one ascending sweep suffices.
    std::vector<u32> acc(ncols(), 0);
    u32 lo = v.front().first;
    for (auto [c, x] : v) acc[c] = x;
    SparseVec out;
    for (std::size_t c = lo; c < acc.size(); ++c) {
        u32 x = acc[c];
        if (!x) continue;
        long r = pivot_row_[c];
        if (r < 0) {
            out.emplace_back(static_cast<u32>(c), x);
            continue;
        }
        u32 f = neg_mod(x, p_);
        for (auto [cc, y] : rows_[r]) acc[cc] = add_mod(acc[cc], mul_mod(f, y, p_), p_);
    }
    return out;
}

bool EchelonBasis::insert(const SparseVec& v) {
    if (v.empty()) return false;
    SparseVec w = pivot_row_[v.front().first] < 0 ? v : reduce(v);
    if (w.empty()) return false;
    u32 inv = inv_mod(w.front().second, p_);
    if (inv != 1)
        for (auto& e : w) e.second = mul_mod(e.second, inv, p_);
    pivot_row_[w.front().first] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(w));
    return true;
}

Rref rref(std::vector<DenseRow> rows, std::size_t ncols, u32 p) {
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t pr = r;
        while (pr < rows.size() && rows[pr][c] == 0) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[r], rows[pr]);
        u32 iv = inv_mod(rows[r][c], p);
        for (auto& x : rows[r]) x = mul_mod(x, iv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            u32 f = neg_mod(rows[i][c], p);
            for (std::size_t j = c; j < ncols; ++j)
                if (rows[r][j]) rows[i][j] = add_mod(rows[i][j], mul_mod(f, rows[r][j], p), p);
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

SparseVec to_sparse(const DenseRow& row) {
    SparseVec v;
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i]) v.emplace_back(static_cast<u32>(i), row[i]);
    return v;
}

std::vector<DenseRow> kernel_of(const std::vector<SparseVec>& images, u32 p) {
    const std::size_t n = images.size();
    u32 width = 0;
    for (const auto& v : images)
        if (!v.empty()) width = std::max(width, v.back().first + 1);
    // Augment each image with a unit tag; a row whose image part reduces to
    // zero carries a kernel vector in its tag part.
    EchelonBasis eb(p, width + n);
    std::vector<DenseRow> kernel;
    for (std::size_t i = 0; i < n; ++i) {
        SparseVec v = images[i];
        v.emplace_back(width + static_cast<u32>(i), 1);
        SparseVec w = eb.reduce(v);
        if (!w.empty() && w.front().first >= width) {
            DenseRow k(n, 0);
            for (auto [c, x] : w) k[c - width] = x;
            kernel.push_back(std::move(k));
        }
        eb.insert(w);
    }
    return rref(std::move(kernel), n, p).rows;
}

}  // namespace stpow
