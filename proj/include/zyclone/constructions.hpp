#pragma once

#include <numeric>
#include <vector>

#include "hypergraph.hpp"
#include "modular.hpp"

namespace zyclone {

/// Cluster-major vertex labeling shared by the modular constructions:
/// cluster with index t occupies the contiguous block
/// [(t - base) * cluster_size, (t - base + 1) * cluster_size).
/// The algebraic construction labels clusters 0..p-1 (base 0); the reduced
/// graph labels them 1..p (base 1), with labels read modulo p.
struct ClusterLabeling {
    int p = 0;
    int cluster_size = 0;
    int base = 0;

    int label(Vertex v) const { return v / cluster_size + base; }

    std::vector<Vertex> cluster(int lbl) const {
        std::vector<Vertex> out(static_cast<std::size_t>(cluster_size));
        Vertex first = (lbl - base) * cluster_size;
        std::iota(out.begin(), out.end(), first);
        return out;
    }
};

namespace detail {

inline std::vector<std::vector<Vertex>> zycle_blocks(int k, int ell) {
    std::vector<std::vector<Vertex>> blocks(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) {
        blocks[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(k - 1));
        std::iota(blocks[static_cast<std::size_t>(i)].begin(),
                  blocks[static_cast<std::size_t>(i)].end(), i * (k - 1));
    }
    return blocks;
}

}  // namespace detail

/// Z_ell^(k): ell blocks of k-1 vertices, block-major labeling
/// (v_i^j -> (i-1)(k-1) + (j-1)); each block forms an edge with every
/// single vertex of the next block, cyclically. (k-1)*ell vertices and,
/// except for the degenerate (k, ell) = (2, 2) where the two edges
/// coincide, (k-1)*ell edges.
///
/// The original definition asks ell >= k, but Z_2^(3) = K_4^(3) is a
/// perfectly good zycle and is used as such; any ell >= 2 is accepted.
inline Hypergraph zycle(int k, int ell) {
    if (k < 2) throw UniformityTooSmall("zycle: k >= 2 required");
    if (ell < 2) throw LengthTooSmall("zycle: ell >= 2 required");
    auto blocks = detail::zycle_blocks(k, ell);
    std::vector<KSet> edges;
    for (int i = 0; i < ell; ++i) {
        for (Vertex v : blocks[static_cast<std::size_t>((i + 1) % ell)]) {
            auto e = blocks[static_cast<std::size_t>(i)];
            e.push_back(v);
            edges.push_back(KSet::of(std::move(e)));
        }
    }
    return Hypergraph::from_ksets((k - 1) * ell, k, std::move(edges));
}

/// Z_ell^(k) minus the canonical edge block_ell u {v_1^{k-1}}.
/// For k = 3 all single-edge deletions are isomorphic, so the choice is
/// canonical; for k > 3 this is an extrapolation beyond the source
/// definition (which treats only k = 3).
inline Hypergraph zycle_minus(int k, int ell) {
    Hypergraph z = zycle(k, ell);
    auto blocks = detail::zycle_blocks(k, ell);
    auto victim = blocks[static_cast<std::size_t>(ell - 1)];
    victim.push_back(k - 2);  // v_1^{k-1}
    KSet removed = KSet::of(std::move(victim));
    std::vector<KSet> edges;
    for (const auto& e : z.edges())
        if (!(e == removed)) edges.push_back(e);
    return Hypergraph::from_ksets(z.n(), k, std::move(edges));
}

inline ClusterLabeling algebraic_labeling(int p, int n) {
    return ClusterLabeling{p, n / p, 0};
}

/// The algebraic graph F_p^(k)(n): p clusters of size n/p labeled 0..p-1,
/// with v_1..v_k an edge iff the labels sum to 0 mod p and are not all
/// zero, or exactly one label is 1 and the rest are 0.
inline Hypergraph algebraic(int k, int p, int n) {
    if (k < 2) throw UniformityTooSmall("algebraic: k >= 2 required");
    if (!is_prime(p)) throw NotPrime("algebraic: p must be prime");
    if (p <= k) throw PrimeTooSmall("algebraic: p > k required");
    if (n % p != 0) throw DivisibilityViolated("algebraic: p must divide n");
    ClusterLabeling lab = algebraic_labeling(p, n);
    std::vector<KSet> edges;
    detail::for_each_subset(n, k, [&](const std::vector<Vertex>& s) {
        int sum = 0, zeros = 0, ones = 0;
        for (Vertex v : s) {
            int l = lab.label(v);
            sum += l;
            if (l == 0) ++zeros;
            if (l == 1) ++ones;
        }
        bool zero_sum = sum % p == 0 && zeros < k;
        bool special = zeros == k - 1 && ones == 1;
        if (zero_sum || special) edges.push_back(KSet::from_sorted(s));
    });
    return Hypergraph::from_ksets(n, k, std::move(edges));
}

inline ClusterLabeling reduced_labeling(int k, int p) {
    return ClusterLabeling{p, k - 1, 1};
}

/// The reduced algebraic graph on p clusters of size k-1 labeled 1..p:
/// an edge is exactly a zero label-sum mod p.
inline Hypergraph reduced_algebraic(int k, int p) {
    if (k < 2) throw UniformityTooSmall("reduced_algebraic: k >= 2 required");
    if (!is_prime(p)) throw NotPrime("reduced_algebraic: p must be prime");
    if (p <= k) throw PrimeTooSmall("reduced_algebraic: p > k required");
    ClusterLabeling lab = reduced_labeling(k, p);
    int n = p * (k - 1);
    std::vector<KSet> edges;
    detail::for_each_subset(n, k, [&](const std::vector<Vertex>& s) {
        int sum = 0;
        for (Vertex v : s) sum += lab.label(v);
        if (sum % p == 0) edges.push_back(KSet::from_sorted(s));
    });
    return Hypergraph::from_ksets(n, k, std::move(edges));
}

/// Three clusters of n/3; edges u,v in V_i with w in V_{i+1}, indices mod 3.
inline Hypergraph tripartite_iterated(int n) {
    if (n % 3 != 0) throw DivisibilityViolated("tripartite_iterated: 3 | n required");
    int cs = n / 3;
    std::vector<KSet> edges;
    for (int i = 0; i < 3; ++i) {
        int lo = i * cs, hi = lo + cs;
        int nlo = ((i + 1) % 3) * cs;
        for (Vertex u = lo; u < hi; ++u)
            for (Vertex v = u + 1; v < hi; ++v)
                for (Vertex w = nlo; w < nlo + cs; ++w)
                    edges.push_back(KSet::of({u, v, w}));
    }
    return Hypergraph::from_ksets(n, 3, std::move(edges));
}

/// Four clusters of n/4; within-cluster pairs extend into the next
/// cluster (mod 4), plus all triples with one vertex in each of V_1, V_2
/// and the third in V_3 u V_4.
inline Hypergraph quadripartite(int n) {
    if (n % 4 != 0) throw DivisibilityViolated("quadripartite: 4 | n required");
    int cs = n / 4;
    std::vector<KSet> edges;
    for (int i = 0; i < 4; ++i) {
        int lo = i * cs, hi = lo + cs;
        int nlo = ((i + 1) % 4) * cs;
        for (Vertex u = lo; u < hi; ++u)
            for (Vertex v = u + 1; v < hi; ++v)
                for (Vertex w = nlo; w < nlo + cs; ++w)
                    edges.push_back(KSet::of({u, v, w}));
    }
    for (Vertex x = 0; x < cs; ++x)
        for (Vertex y = cs; y < 2 * cs; ++y)
            for (Vertex z = 2 * cs; z < n; ++z)
                edges.push_back(KSet::of({x, y, z}));
    return Hypergraph::from_ksets(n, 3, std::move(edges));
}

}  // namespace zyclone
