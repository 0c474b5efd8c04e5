#ifndef PYRAMID_LINALG_HPP
#define PYRAMID_LINALG_HPP

#include <vector>

namespace pyramid {

// Incremental reduced row echelon form over an exact field.  Rows are kept
// fully reduced with pivot entries 1, sorted by pivot column, so the basis a
// RowSpace exposes is canonical for the subspace it spans.
template <class K>
class RowSpace {
public:
    explicit RowSpace(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<K>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Eliminates all pivots from v in place.
    void reduce(std::vector<K>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K& c = v[pivots_[r]];
            if (c == K(0)) continue;
            K f = c;  // pivot entry is 1
            const auto& row = rows_[r];
            for (int j = pivots_[r]; j < cols_; ++j)
                if (row[j] != K(0)) v[j] -= f * row[j];
        }
    }

    bool contains(std::vector<K> v) const {
        reduce(v);
        for (const K& x : v)
            if (x != K(0)) return false;
        return true;
    }

    // Returns true when v was independent and is now part of the basis.
    bool insert(std::vector<K> v) {
        reduce(v);
        int p = -1;
        for (int j = 0; j < cols_; ++j)
            if (v[j] != K(0)) {
                p = j;
                break;
            }
        if (p < 0) return false;
        K inv = K(1) / v[p];
        for (int j = p; j < cols_; ++j) v[j] = v[j] * inv;
        // back-substitute into existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            K c = rows_[r][p];
            if (c == K(0)) continue;
            for (int j = p; j < cols_; ++j) rows_[r][j] -= c * v[j];
        }
        std::size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < p) ++at;
        rows_.insert(rows_.begin() + at, std::move(v));
        pivots_.insert(pivots_.begin() + at, p);
        return true;
    }

private:
    int cols_;
    std::vector<std::vector<K>> rows_;
    std::vector<int> pivots_;
};

// Nullspace of the span of `rows` viewed as a matrix (kernel of x -> M x is
// not what we need; this is the space of vectors orthogonal-by-coordinates,
// i.e. solutions of M x = 0).  Returns a canonical RREF basis of solutions.
template <class K>
std::vector<std::vector<K>> nullspace(const std::vector<std::vector<K>>& rows, int cols) {
    RowSpace<K> rs(cols);
    for (const auto& r : rows) rs.insert(r);
    const auto& red = rs.rows();
    const auto& piv = rs.pivots();
    std::vector<bool> is_pivot(cols, false);
    for (int p : piv) is_pivot[p] = true;
    std::vector<std::vector<K>> basis;
    for (int j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<K> v(cols, K(0));
        v[j] = K(1);
        for (std::size_t r = 0; r < red.size(); ++r) v[piv[r]] = -red[r][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace pyramid

#endif  // PYRAMID_LINALG_HPP
