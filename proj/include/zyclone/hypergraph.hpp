#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "kset.hpp"

namespace zyclone {

/// Minimum codegree of a hypergraph together with a witnessing
/// (k-1)-set and the full degree histogram over all (k-1)-sets.
struct CodegreeProfile {
    int minimum = 0;
    KSet argmin;
    std::map<int, std::uint64_t> histogram;  // degree -> number of (k-1)-sets
};

namespace detail {

// Shared, immutable once built; guarded by a mutex in the owner so the
// lazy build is idempotent and race-free.
struct CodegreeIndex {
    std::unordered_map<PackedSet, int> degree;  // only sets of positive degree
};

template <typename T>
class LazyCache {
public:
    LazyCache() = default;
    LazyCache(const LazyCache& o) : value_(o.peek()) {}
    LazyCache& operator=(const LazyCache& o) {
        if (this != &o) {
            auto v = o.peek();
            std::lock_guard<std::mutex> lk(m_);
            value_ = std::move(v);
        }
        return *this;
    }

    template <typename F>
    const T& get_or_build(F&& build) const {
        std::lock_guard<std::mutex> lk(m_);
        if (!value_) value_ = std::make_shared<const T>(build());
        return *value_;
    }

    std::shared_ptr<const T> peek() const {
        std::lock_guard<std::mutex> lk(m_);
        return value_;
    }

private:
    mutable std::mutex m_;
    mutable std::shared_ptr<const T> value_;
};

}  // namespace detail

/// Immutable k-uniform hypergraph on vertices 0..n-1. Edges are stored
/// sorted lexicographically, deduplicated, so equal hypergraphs always
/// serialize identically. All operations are pure reads and safe to call
/// concurrently.
class Hypergraph {
public:
    static constexpr int max_vertices = 255;
    static constexpr int max_uniformity = 8;

    Hypergraph() = default;

    static Hypergraph build(int n, int k, const std::vector<std::vector<Vertex>>& edges) {
        std::vector<KSet> parsed;
        parsed.reserve(edges.size());
        for (const auto& e : edges) {
            if (static_cast<int>(e.size()) != k)
                throw WrongEdgeSize("edge has " + std::to_string(e.size()) +
                                    " vertices, expected " + std::to_string(k));
            parsed.push_back(KSet::of(e));
            if (static_cast<int>(parsed.back().size()) != k)
                throw WrongEdgeSize("edge has repeated vertices");
        }
        return from_ksets(n, k, std::move(parsed));
    }

    static Hypergraph from_ksets(int n, int k, std::vector<KSet> edges) {
        if (k < 2) throw UniformityTooSmall("uniformity k must be at least 2");
        if (k > max_uniformity)
            throw InstanceTooLarge("uniformity k > " + std::to_string(max_uniformity));
        if (n < 0 || n > max_vertices)
            throw InstanceTooLarge("vertex count out of [0, " +
                                   std::to_string(max_vertices) + "]");
        for (const auto& e : edges) {
            if (static_cast<int>(e.size()) != k)
                throw WrongEdgeSize("edge has " + std::to_string(e.size()) +
                                    " vertices, expected " + std::to_string(k));
            if (!e.max_vertex_below(n))
                throw OutOfRangeVertex("edge vertex >= n = " + std::to_string(n));
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

        Hypergraph h;
        h.n_ = n;
        h.k_ = k;
        h.edges_ = std::move(edges);
        h.index_.reserve(h.edges_.size() * 2);
        for (const auto& e : h.edges_) h.index_.insert(detail::pack(e));
        return h;
    }

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<KSet>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(const KSet& e) const {
        return static_cast<int>(e.size()) == k_ && index_.count(detail::pack(e)) > 0;
    }

    // x u {v} in E, for |x| = k-1 and v not in x. The hot membership probe.
    bool has_extension(const KSet& x, Vertex v) const {
        return index_.count(detail::pack_with(x, v)) > 0;
    }

    /// Number of edges containing S, for |S| <= k.
    int degree(const KSet& s) const {
        if (static_cast<int>(s.size()) > k_)
            throw WrongSetSize("degree: set larger than uniformity");
        if (!s.max_vertex_below(n_))
            throw OutOfRangeVertex("degree: vertex out of range");
        if (static_cast<int>(s.size()) == k_) return has_edge(s) ? 1 : 0;
        if (static_cast<int>(s.size()) == k_ - 1) {
            const auto& idx = codegree_index();
            auto it = idx.degree.find(detail::pack(s));
            return it == idx.degree.end() ? 0 : it->second;
        }
        int count = 0;
        for (const auto& e : edges_)
            if (std::includes(e.begin(), e.end(), s.begin(), s.end())) ++count;
        return count;
    }

    /// Minimum degree over all (k-1)-sets, with argmin and histogram.
    CodegreeProfile min_codegree() const {
        if (n_ < k_ - 1)
            throw InstanceTooLarge("min_codegree requires n >= k-1");
        const auto& idx = codegree_index();
        CodegreeProfile out;
        std::uint64_t total = detail::binomial(n_, k_ - 1);
        std::uint64_t zero = total - idx.degree.size();
        if (zero > 0) out.histogram[0] = zero;
        for (const auto& [key, d] : idx.degree) ++out.histogram[d];
        out.minimum = out.histogram.empty() ? 0 : out.histogram.begin()->first;
        out.argmin = find_argmin(out.minimum, idx);
        return out;
    }

    /// N(x) = { v : x u {v} in E }, for |x| = k-1.
    std::vector<Vertex> neighborhood(const KSet& x) const {
        require_block(x, "neighborhood");
        std::vector<Vertex> out;
        for (Vertex v = 0; v < n_; ++v)
            if (!x.contains(v) && has_extension(x, v)) out.push_back(v);
        return out;
    }

    /// Back-neighborhood of e: all (k-1)-sets f with f u {v} in E for
    /// every v in e. Candidates come from edges through e's first vertex,
    /// so the scan is O(|E| k) rather than O(n^{k-1}).
    std::vector<KSet> back_neighborhood(const KSet& e) const {
        require_block(e, "back_neighborhood");
        std::vector<KSet> out;
        if (e.empty()) return out;  // k = 1 never occurs; guard anyway
        Vertex v0 = e[0];
        for (const auto& edge : edges_) {
            if (!edge.contains(v0)) continue;
            KSet f = edge.without(v0);
            bool ok = true;
            for (std::size_t i = 1; i < e.size() && ok; ++i) {
                Vertex v = e[i];
                if (f.contains(v) || !has_extension(f, v)) ok = false;
            }
            if (ok) out.push_back(std::move(f));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    /// e |> f: e u {v} in E for every v in f. Evaluated literally, so any
    /// degenerate union (v already in e) makes the result false.
    bool back_related(const KSet& e, const KSet& f) const {
        require_block(e, "back_related");
        require_block(f, "back_related");
        for (Vertex v : f) {
            if (e.contains(v)) return false;
            if (!has_extension(e, v)) return false;
        }
        return true;
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
    }

private:
    void require_block(const KSet& s, const char* op) const {
        if (static_cast<int>(s.size()) != k_ - 1)
            throw WrongSetSize(std::string(op) + ": expected a (k-1)-set");
        if (!s.max_vertex_below(n_))
            throw OutOfRangeVertex(std::string(op) + ": vertex out of range");
    }

    const detail::CodegreeIndex& codegree_index() const {
        return codegree_.get_or_build([this] {
            detail::CodegreeIndex idx;
            idx.degree.reserve(edges_.size() * static_cast<std::size_t>(k_));
            for (const auto& e : edges_) {
                for (std::size_t drop = 0; drop < e.size(); ++drop) {
                    KSet sub = e.without(e[drop]);
                    ++idx.degree[detail::pack(sub)];
                }
            }
            return idx;
        });
    }

    KSet find_argmin(int minimum, const detail::CodegreeIndex& idx) const {
        if (minimum == 0) {
            // lexicographically first (k-1)-set of degree zero
            KSet found;
            bool done = false;
            detail::for_each_subset(n_, k_ - 1, [&](const std::vector<Vertex>& s) {
                if (done) return;
                KSet cand = KSet::from_sorted(s);
                if (idx.degree.find(detail::pack(cand)) == idx.degree.end()) {
                    found = std::move(cand);
                    done = true;
                }
            });
            return found;
        }
        KSet best;
        detail::for_each_subset(n_, k_ - 1, [&](const std::vector<Vertex>& s) {
            if (!best.empty()) return;
            KSet cand = KSet::from_sorted(s);
            auto it = idx.degree.find(detail::pack(cand));
            if (it != idx.degree.end() && it->second == minimum) best = std::move(cand);
        });
        return best;
    }

    int n_ = 0;
    int k_ = 2;
    std::vector<KSet> edges_;
    std::unordered_set<detail::PackedSet> index_;
    detail::LazyCache<detail::CodegreeIndex> codegree_;
};

/// c-blow-up: every vertex i of f becomes a class of c clones occupying
/// [i*c, (i+1)*c); edges are all transversal k-sets over classes that form
/// an edge of f.
inline Hypergraph blow_up(const Hypergraph& f, int c) {
    if (c < 1) throw InvalidParameter("blow_up: multiplicity must be >= 1");
    if (f.n() * c > Hypergraph::max_vertices)
        throw InstanceTooLarge("blow_up: too many vertices");
    std::vector<KSet> out;
    const int k = f.k();
    std::vector<int> choice(static_cast<std::size_t>(k), 0);
    for (const auto& e : f.edges()) {
        std::fill(choice.begin(), choice.end(), 0);
        while (true) {
            std::vector<Vertex> img(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                img[static_cast<std::size_t>(i)] =
                    e[static_cast<std::size_t>(i)] * c + choice[static_cast<std::size_t>(i)];
            out.push_back(KSet::of(std::move(img)));
            int i = k - 1;
            while (i >= 0 && choice[static_cast<std::size_t>(i)] == c - 1) {
                choice[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++choice[static_cast<std::size_t>(i)];
        }
    }
    return Hypergraph::from_ksets(f.n() * c, k, std::move(out));
}

/// Complete k-graph on n vertices.
inline Hypergraph complete_graph(int n, int k) {
    std::vector<KSet> edges;
    detail::for_each_subset(n, k, [&](const std::vector<Vertex>& s) {
        edges.push_back(KSet::from_sorted(s));
    });
    return Hypergraph::from_ksets(n, k, std::move(edges));
}

}  // namespace zyclone
