#ifndef PYRAMID_VERTEX_HPP
#define PYRAMID_VERTEX_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pyramid {

// A quiver vertex is a tuple of small integers. Pyramid vertices have n
// positive coordinates; cover vertices carry one extra trailing coordinate
// (the level), which may be any integer.
using VertexVec = std::vector<int>;

// Parameter guard shared by all generators. Coordinates stay tiny, but the
// bound keeps every sum far away from integer overflow.
inline void validate_params(int n, int m) {
    if (n < 1) throw std::invalid_argument("pyramid dimension n must be >= 1");
    if (m < 3) throw std::invalid_argument("height m must be >= 3");
    if (n > 64 || m > 64) throw std::invalid_argument("n and m must be <= 64");
}

inline long long coord_sum(const VertexVec& v) {
    return std::accumulate(v.begin(), v.end(), 0LL);
}

// Membership test for the pyramid vertex set of dimension v.size() and
// height m: all coordinates positive and every prefix sum i_1+...+i_s
// bounded by m+s-1.
inline bool in_pyramid(const VertexVec& v, int m) {
    long long sum = 0;
    for (std::size_t s = 0; s < v.size(); ++s) {
        if (v[s] < 1) return false;
        sum += v[s];
        if (sum > m + static_cast<long long>(s)) return false;  // m + (s+1) - 1
    }
    return true;
}

// i(t): add e_1 for t = 1, otherwise move one unit from coordinate t-1 to
// coordinate t. Valid for 1 <= t <= v.size(); membership is the caller's
// concern.
inline VertexVec coord_step(const VertexVec& v, int t) {
    if (t < 1 || t > static_cast<int>(v.size()))
        throw std::invalid_argument("arrow type out of range");
    VertexVec w = v;
    if (t == 1) {
        w[0] += 1;
    } else {
        w[t - 2] -= 1;
        w[t - 1] += 1;
    }
    return w;
}

inline std::string vertex_to_string(const VertexVec& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(v[k]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Cuboid attached to a vertex: the box 0 <= a_t <= b_t in Z^{p+1} where p is
// the number of coordinates of the base vertex.  Side lengths telescope to
// m-1.
// ---------------------------------------------------------------------------

struct Cuboid {
    VertexVec base;       // the anchoring vertex (p coordinates)
    std::vector<int> b;   // p+1 side lengths
    int m = 0;

    int dim() const { return static_cast<int>(b.size()); }

    // All box points with coordinate sum l, sorted lexicographically.
    // Empty for l > m-1; the l = m-1 layer is the single corner b.
    std::vector<std::vector<int>> layer(int l) const {
        std::vector<std::vector<int>> out;
        std::vector<int> a(b.size(), 0);
        enumerate(0, l, a, out);
        return out;
    }

    int layer_size(int l) const { return static_cast<int>(layer(l).size()); }

private:
    void enumerate(std::size_t pos, int remain, std::vector<int>& a,
                   std::vector<std::vector<int>>& out) const {
        if (pos == b.size()) {
            if (remain == 0) out.push_back(a);
            return;
        }
        for (int x = 0; x <= b[pos] && x <= remain; ++x) {
            a[pos] = x;
            enumerate(pos + 1, remain - x, a, out);
        }
        a[pos] = 0;
    }
};

// b_1 = m+p-1-|i|, b_t = i_{t-1}-1 for 2 <= t <= p+1.
inline Cuboid cuboid_of(const VertexVec& base, int m) {
    if (!in_pyramid(base, m))
        throw std::invalid_argument("cuboid base " + vertex_to_string(base) +
                                    " is not a quiver vertex at height " + std::to_string(m));
    const int p = static_cast<int>(base.size());
    Cuboid c;
    c.base = base;
    c.m = m;
    c.b.resize(p + 1);
    c.b[0] = m + p - 1 - static_cast<int>(coord_sum(base));
    for (int t = 1; t <= p; ++t) c.b[t] = base[t - 1] - 1;
    return c;
}

// ---------------------------------------------------------------------------
// Vertex maps sending box points to vertices.
// ---------------------------------------------------------------------------

// v^i(a) for a base with p coordinates and a box point with p+1 entries:
// coordinate t becomes i_t + a_t - a_{t+1}.  Translation by the all-ones
// vector is absorbed: v^i(a+e) = v^i(a).
inline VertexVec vmap(const VertexVec& base, const std::vector<int>& a) {
    if (a.size() != base.size() + 1)
        throw std::invalid_argument("vmap: box point must have one more entry than the base");
    VertexVec w(base.size());
    for (std::size_t t = 0; t < base.size(); ++t) w[t] = base[t] + a[t] - a[t + 1];
    return w;
}

// Variant for a base that already carries p+1 coordinates (the last one a
// level): the final coordinate moves up by a_{p+1} instead of cancelling.
inline VertexVec vmap_bar(const VertexVec& base, const std::vector<int>& a) {
    if (a.size() != base.size())
        throw std::invalid_argument("vmap_bar: box point and base must have equal length");
    const std::size_t p = base.size() - 1;
    VertexVec w(base.size());
    for (std::size_t t = 0; t < p; ++t) w[t] = base[t] + a[t] - a[t + 1];
    w[p] = base[p] + a[p];
    return w;
}

// The syzygy permutation i -> (m+n-|i|, i_1, ..., i_{n-1}).  Agrees with
// v^i(b(i)) and has order dividing n+1.
inline VertexVec omega_map(const VertexVec& v, int m) {
    const int n = static_cast<int>(v.size());
    VertexVec w(n);
    w[0] = m + n - static_cast<int>(coord_sum(v));
    for (int t = 1; t < n; ++t) w[t] = v[t - 1];
    return w;
}

// Positions (1-based) where a coordinate equals 1, and where a prefix sum
// attains its bound m+s-1.  These mark the boundary walls of the pyramid.
inline std::vector<int> ones_positions(const VertexVec& v) {
    std::vector<int> z;
    for (std::size_t s = 0; s < v.size(); ++s)
        if (v[s] == 1) z.push_back(static_cast<int>(s) + 1);
    return z;
}

inline std::vector<int> tight_prefix_positions(const VertexVec& v, int m) {
    std::vector<int> w;
    long long sum = 0;
    for (std::size_t s = 0; s < v.size(); ++s) {
        sum += v[s];
        if (sum == m + static_cast<long long>(s)) w.push_back(static_cast<int>(s) + 1);
    }
    return w;
}

// All 0/1 vectors of length p with coordinate sum l, sorted lexicographically.
inline std::vector<std::vector<int>> unit_layer(int p, int l) {
    std::vector<std::vector<int>> out;
    std::vector<int> a(p, 0);
    struct Rec {
        int p, l;
        std::vector<std::vector<int>>& out;
        void go(int pos, int remain, std::vector<int>& a) {
            if (pos == p) {
                if (remain == 0) out.push_back(a);
                return;
            }
            for (int x = 0; x <= 1 && x <= remain; ++x) {
                a[pos] = x;
                go(pos + 1, remain - x, a);
            }
            a[pos] = 0;
        }
    } rec{p, l, out};
    rec.go(0, l, a);
    return out;
}

}  // namespace pyramid

#endif  // PYRAMID_VERTEX_HPP
