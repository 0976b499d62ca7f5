#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "errors.hpp"

namespace zyclone {

using Vertex = int;

/// A set of vertices stored as a strictly increasing sequence.
/// Used for edges (size k) and for the (k-1)-sets that codegree,
/// neighborhood and chain reasoning operate on.
class KSet {
public:
    KSet() = default;

    // Sorts, rejects negative entries and repeats.
    static KSet of(std::vector<Vertex> vs) {
        std::sort(vs.begin(), vs.end());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (vs[i] < 0) throw OutOfRangeVertex("KSet: negative vertex");
            if (i > 0 && vs[i] == vs[i - 1])
                throw WrongEdgeSize("KSet: repeated vertex");
        }
        KSet s;
        s.v_ = std::move(vs);
        return s;
    }

    // Caller guarantees the sequence is strictly increasing and nonnegative.
    static KSet from_sorted(std::vector<Vertex> vs) {
        KSet s;
        s.v_ = std::move(vs);
        return s;
    }

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    Vertex operator[](std::size_t i) const { return v_[i]; }
    const std::vector<Vertex>& vertices() const { return v_; }

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    bool contains(Vertex v) const {
        return std::binary_search(v_.begin(), v_.end(), v);
    }

    bool disjoint_from(const KSet& o) const {
        std::size_t i = 0, j = 0;
        while (i < v_.size() && j < o.v_.size()) {
            if (v_[i] == o.v_[j]) return false;
            if (v_[i] < o.v_[j]) ++i; else ++j;
        }
        return true;
    }

    // Union with a vertex not already present.
    KSet with(Vertex v) const {
        std::vector<Vertex> out;
        out.reserve(v_.size() + 1);
        auto it = std::lower_bound(v_.begin(), v_.end(), v);
        out.insert(out.end(), v_.begin(), it);
        out.push_back(v);
        out.insert(out.end(), it, v_.end());
        return from_sorted(std::move(out));
    }

    KSet without(Vertex v) const {
        std::vector<Vertex> out;
        out.reserve(v_.size());
        for (Vertex x : v_)
            if (x != v) out.push_back(x);
        return from_sorted(std::move(out));
    }

    bool max_vertex_below(Vertex n) const {
        return v_.empty() || v_.back() < n;
    }

    friend auto operator<=>(const KSet&, const KSet&) = default;

private:
    std::vector<Vertex> v_;
};

struct KSetHash {
    std::size_t operator()(const KSet& s) const {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a
        for (Vertex v : s) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

namespace detail {

// Packed key for edge-membership probes: 8 bits per vertex, ascending.
// Requires vertices < 256 and set size <= 8 (enforced at Hypergraph::build).
using PackedSet = std::uint64_t;

inline PackedSet pack(const KSet& s) {
    PackedSet key = 0;
    int shift = 0;
    for (Vertex v : s) {
        key |= static_cast<PackedSet>(static_cast<unsigned>(v) + 1) << shift;
        shift += 8;
    }
    return key;
}

// pack(x with v inserted); v must not be in x.
inline PackedSet pack_with(const KSet& x, Vertex v) {
    PackedSet key = 0;
    int shift = 0;
    bool placed = false;
    for (Vertex u : x) {
        if (!placed && v < u) {
            key |= static_cast<PackedSet>(static_cast<unsigned>(v) + 1) << shift;
            shift += 8;
            placed = true;
        }
        key |= static_cast<PackedSet>(static_cast<unsigned>(u) + 1) << shift;
        shift += 8;
    }
    if (!placed)
        key |= static_cast<PackedSet>(static_cast<unsigned>(v) + 1) << shift;
    return key;
}

// Visits all size-r subsets of [0, n) in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int r, Fn&& fn) {
    if (r < 0 || r > n) return;
    std::vector<Vertex> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(const_cast<const std::vector<Vertex>&>(idx));
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline std::uint64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t out = 1;
    for (int i = 1; i <= r; ++i)
        out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
    return out;
}

}  // namespace detail
}  // namespace zyclone
