#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypergraph.hpp"

namespace zyclone {

/// A cyclic chain of pairwise disjoint (k-1)-sets e_1 |> e_2 |> ... |> e_ell |> e_1.
/// Verification is a direct re-check against the host and is independent of
/// whichever search produced the certificate.
struct ZycleCertificate {
    int ell = 0;
    std::vector<KSet> blocks;
    int host_n = 0;
    int host_k = 0;
};

/// An injective, edge-preserving vertex map from a pattern into a host.
/// map[p] is the host vertex assigned to pattern vertex p.
struct Embedding {
    Hypergraph pattern;
    Hypergraph host;
    std::vector<Vertex> map;
};

struct VerificationResult {
    bool ok = true;
    std::vector<std::string> reasons;

    void fail(std::string reason) {
        ok = false;
        reasons.push_back(std::move(reason));
    }
};

inline VerificationResult verify_certificate(const Hypergraph& host,
                                             const ZycleCertificate& cert) {
    VerificationResult r;
    if (cert.host_n != host.n() || cert.host_k != host.k())
        r.fail("certificate host shape does not match host");
    if (cert.ell < 2) r.fail("zycle length must be at least 2");
    if (static_cast<int>(cert.blocks.size()) != cert.ell)
        r.fail("block count does not equal ell");
    for (std::size_t i = 0; i < cert.blocks.size(); ++i) {
        const KSet& b = cert.blocks[i];
        if (static_cast<int>(b.size()) != host.k() - 1)
            r.fail("block " + std::to_string(i) + " is not a (k-1)-set");
        if (!b.empty() && (b[0] < 0 || !b.max_vertex_below(host.n())))
            r.fail("block " + std::to_string(i) + " has out-of-range vertices");
    }
    if (!r.ok) return r;
    for (std::size_t i = 0; i < cert.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < cert.blocks.size(); ++j)
            if (!cert.blocks[i].disjoint_from(cert.blocks[j]))
                r.fail("blocks " + std::to_string(i) + " and " + std::to_string(j) +
                       " intersect");
    for (std::size_t i = 0; i < cert.blocks.size(); ++i) {
        const KSet& e = cert.blocks[i];
        const KSet& f = cert.blocks[(i + 1) % cert.blocks.size()];
        if (!host.back_related(e, f))
            r.fail("blocks " + std::to_string(i) + " |> " +
                   std::to_string((i + 1) % cert.blocks.size()) + " fails");
    }
    return r;
}

inline VerificationResult verify_certificate(const Hypergraph& host,
                                             const Embedding& emb) {
    VerificationResult r;
    if (emb.host.n() != host.n() || emb.host.k() != host.k() ||
        !(emb.host == host))
        r.fail("embedding host does not match host");
    if (emb.pattern.k() != host.k()) r.fail("uniformity mismatch");
    if (static_cast<int>(emb.map.size()) != emb.pattern.n())
        r.fail("map does not cover all pattern vertices");
    if (!r.ok) return r;
    std::vector<bool> hit(static_cast<std::size_t>(host.n()), false);
    for (Vertex h : emb.map) {
        if (h < 0 || h >= host.n()) {
            r.fail("map image out of range");
            return r;
        }
        if (hit[static_cast<std::size_t>(h)]) {
            r.fail("map is not injective");
            return r;
        }
        hit[static_cast<std::size_t>(h)] = true;
    }
    for (const auto& e : emb.pattern.edges()) {
        std::vector<Vertex> img;
        img.reserve(e.size());
        for (Vertex v : e) img.push_back(emb.map[static_cast<std::size_t>(v)]);
        if (!host.has_edge(KSet::of(img)))
            r.fail("pattern edge maps outside the host edge set");
    }
    return r;
}

inline nlohmann::json to_json(const ZycleCertificate& c) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : c.blocks) blocks.push_back(b.vertices());
    return nlohmann::json{{"blocks", std::move(blocks)}, {"ell", c.ell}, {"type", "zycle"}};
}

inline nlohmann::json to_json(const Embedding& e) {
    nlohmann::json pairs = nlohmann::json::array();
    for (std::size_t p = 0; p < e.map.size(); ++p)
        pairs.push_back(nlohmann::json::array({static_cast<int>(p), e.map[p]}));
    return nlohmann::json{{"map", std::move(pairs)}, {"type", "embedding"}};
}

}  // namespace zyclone
