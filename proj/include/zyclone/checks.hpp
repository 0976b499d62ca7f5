#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "certificates.hpp"
#include "constructions.hpp"
#include "extremal.hpp"
#include "hypergraph.hpp"
#include "io.hpp"
#include "modular.hpp"
#include "search.hpp"

namespace zyclone {

enum class CheckStatus { pass, fail, inconclusive };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "inconclusive";
    }
}

/// Outcome of one structural check: pass/fail/inconclusive plus the
/// per-assertion evidence. Typed evidence (certificates, embeddings,
/// witnesses with their hosts) is kept alongside the JSON so callers can
/// re-verify everything independently of the searches that produced it.
struct CheckReport {
    std::string check_id;
    nlohmann::json parameters = nlohmann::json::object();
    CheckStatus status = CheckStatus::pass;
    nlohmann::json evidence = nlohmann::json::object();
    double runtime_seconds = 0.0;

    std::vector<std::pair<Hypergraph, ZycleCertificate>> zycle_evidence;
    std::vector<Embedding> embedding_evidence;
    struct WitnessEvidence {
        Hypergraph witness;
        std::vector<Hypergraph> patterns;
        int claimed_d = 0;
    };
    std::vector<WitnessEvidence> witness_evidence;

    bool passed() const { return status == CheckStatus::pass; }
};

/// Deterministic output zeroes the runtime field so reports are
/// byte-identical across runs.
inline nlohmann::json to_json(const CheckReport& r, bool deterministic_output = false) {
    return nlohmann::json{{"check_id", r.check_id},
                          {"evidence", r.evidence},
                          {"parameters", r.parameters},
                          {"passed", r.passed()},
                          {"runtime_seconds", deterministic_output ? 0.0 : r.runtime_seconds},
                          {"status", to_string(r.status)}};
}

namespace detail {

struct AssertionSink {
    nlohmann::json list = nlohmann::json::array();
    bool any_failed = false;
    bool any_inconclusive = false;

    void record(const std::string& name, bool ok,
                nlohmann::json details = nlohmann::json::object()) {
        details["name"] = name;
        details["passed"] = ok;
        if (!ok) any_failed = true;
        list.push_back(std::move(details));
    }

    void inconclusive(const std::string& name,
                      nlohmann::json details = nlohmann::json::object()) {
        details["name"] = name;
        details["inconclusive"] = true;
        any_inconclusive = true;
        list.push_back(std::move(details));
    }

    void note(const std::string& name, nlohmann::json details) {
        details["name"] = name;
        details["informational"] = true;
        list.push_back(std::move(details));
    }

    CheckStatus status() const {
        if (any_failed) return CheckStatus::fail;
        if (any_inconclusive) return CheckStatus::inconclusive;
        return CheckStatus::pass;
    }
};

class CheckTimer {
public:
    CheckTimer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Checks run their sub-searches sequentially and deterministically; their
// conclusions are proofs at fixed n and must not depend on scheduling.
inline SearchBudget check_budget(const SearchBudget& b) {
    SearchBudget out = b;
    out.jobs = 1;
    out.deterministic = true;
    return out;
}

// Freeness sub-assertion shared by several checks.
inline void assert_zycle_free(AssertionSink& sink, const Hypergraph& h, int ell,
                              const SearchBudget& budget, const std::string& label) {
    ZycleSearchResult r = find_zycle(h, ell, budget);
    if (r.status == SearchStatus::budget_exhausted) {
        sink.inconclusive(label, {{"ell", ell}, {"nodes", r.nodes_expanded}});
    } else if (r.status == SearchStatus::found) {
        sink.record(label, false,
                    {{"ell", ell}, {"counterexample", to_json(*r.certificate)}});
    } else {
        sink.record(label, true,
                    {{"ell", ell}, {"exhaustive", true}, {"nodes", r.nodes_expanded}});
    }
}

}  // namespace detail

/// Blow-up fact: the c-blow-up of Z_r contains Z_{cr}. Verified twice --
/// by pattern search and by constructing the explicit lap embedding (walk
/// the blown-up cycle c times, using a fresh clone per lap) and checking it
/// edge by edge, independently of the search.
inline CheckReport check_blowup_fact(int k, int r, int c, const SearchBudget& budget = {}) {
    if (k < 3) throw UniformityTooSmall("check_blowup_fact: k >= 3 required");
    if (r < 3) throw LengthTooSmall("check_blowup_fact: r >= 3 required");
    if (c < 1) throw InvalidParameter("check_blowup_fact: c >= 1 required");
    detail::CheckTimer timer;
    SearchBudget b = detail::check_budget(budget);
    CheckReport rep;
    rep.check_id = "blowup-fact";
    rep.parameters = {{"c", c}, {"k", k}, {"r", r}};
    detail::AssertionSink sink;

    Hypergraph base = zycle(k, r);
    Hypergraph host = blow_up(base, c);
    Hypergraph pattern = zycle(k, c * r);

    EmbeddingSearchResult sr = contains_pattern(host, pattern, b);
    if (sr.status == SearchStatus::budget_exhausted) {
        sink.inconclusive("search_embedding", {{"nodes", sr.nodes_expanded}});
    } else if (sr.status == SearchStatus::found) {
        auto v = verify_certificate(host, *sr.embedding);
        sink.record("search_embedding", v.ok,
                    {{"nodes", sr.nodes_expanded}, {"embedding", to_json(*sr.embedding)}});
        rep.embedding_evidence.push_back(*sr.embedding);
    } else {
        sink.record("search_embedding", false, {{"result", "not found"}});
    }

    // explicit lap embedding: pattern block j maps into the clones of base
    // block (j mod r) picked at lap j / r
    const int bk = k - 1;
    std::vector<Vertex> map(static_cast<std::size_t>(pattern.n()), -1);
    for (int j = 0; j < c * r; ++j) {
        int base_block = j % r;
        int lap = j / r;
        for (int m = 0; m < bk; ++m) {
            int pattern_vertex = j * bk + m;
            int base_vertex = base_block * bk + m;
            map[static_cast<std::size_t>(pattern_vertex)] = base_vertex * c + lap;
        }
    }
    Embedding lap_embedding{pattern, host, map};
    auto lap_ok = verify_certificate(host, lap_embedding);
    sink.record("explicit_lap_embedding", lap_ok.ok,
                {{"embedding", to_json(lap_embedding)},
                 {"reasons", lap_ok.reasons}});
    rep.embedding_evidence.push_back(std::move(lap_embedding));

    rep.status = sink.status();
    rep.evidence = {{"assertions", std::move(sink.list)},
                    {"host_edges", host.edge_count()},
                    {"pattern", ""}};
    rep.evidence["pattern"] = "Z_" + std::to_string(c * r) + "^(" + std::to_string(k) + ")";
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Instantiates the algebraic construction at the smallest admissible prime
/// for (k, ell) with the given cluster size and asserts the source claims:
/// (a) minimum codegree equals n/p, (b) the prime obeys the Bertrand bound,
/// (c) Z_r-freeness for every 2 <= r <= ell (exhaustive), (d) a zycle of
/// length ord_p(1-k) exists, built from the predicted cluster chain
/// V_j -> V_{(1-k)j} and re-verified independently of any search.
///
/// Note: assertion (a) fails on every instance. The true minimum codegree
/// is n/p - (k-2) for p >= 5: a (k-1)-set can intersect its own target
/// cluster, which removes those vertices from its neighborhood. The check
/// reports the deficient set as a counterexample.
inline CheckReport check_algebraic_construction(int k, int ell, int cluster_size,
                                                const SearchBudget& budget = {}) {
    if (k < 3) throw UniformityTooSmall("check_algebraic_construction: k >= 3 required");
    if (ell < 2) throw LengthTooSmall("check_algebraic_construction: ell >= 2 required");
    if (cluster_size < 1)
        throw InvalidParameter("check_algebraic_construction: cluster_size >= 1 required");
    detail::CheckTimer timer;
    SearchBudget b = detail::check_budget(budget);
    PrimeChoice pc = smallest_admissible_prime(k, ell);
    const int p = static_cast<int>(pc.p);
    const int n = p * cluster_size;

    CheckReport rep;
    rep.check_id = "algebraic-construction";
    rep.parameters = {{"cluster_size", cluster_size}, {"ell", ell}, {"k", k},
                      {"n", n}, {"p", p}};
    detail::AssertionSink sink;

    Hypergraph h = algebraic(k, p, n);
    CodegreeProfile prof = h.min_codegree();

    sink.record("min_codegree_equals_n_over_p", prof.minimum == n / p,
                {{"expected", n / p},
                 {"actual", prof.minimum},
                 {"argmin", prof.argmin.vertices()}});
    sink.record("prime_within_bertrand_bound", pc.p <= pc.upper,
                {{"p", p}, {"lower", pc.lower}, {"upper", pc.upper}});
    for (int r = 2; r <= ell; ++r)
        detail::assert_zycle_free(sink, h, r, b, "zycle_free_" + std::to_string(r));

    const int ord = multiplicative_order(1 - k, p);
    if (cluster_size >= k - 1) {
        ClusterLabeling lab = algebraic_labeling(p, n);
        std::vector<KSet> blocks;
        long long residue = 1;
        for (int i = 0; i < ord; ++i) {
            auto cluster = lab.cluster(static_cast<int>(residue));
            blocks.push_back(KSet::from_sorted(
                std::vector<Vertex>(cluster.begin(), cluster.begin() + (k - 1))));
            residue = mod(residue * (1 - k), p);
        }
        ZycleCertificate cert{ord, std::move(blocks), h.n(), h.k()};
        auto v = verify_certificate(h, cert);
        sink.record("order_zycle_via_cluster_chain", v.ok,
                    {{"ord", ord}, {"certificate", to_json(cert)}, {"reasons", v.reasons}});
        rep.zycle_evidence.emplace_back(h, std::move(cert));
    } else {
        sink.note("order_zycle_via_cluster_chain",
                  {{"skipped", "cluster_size < k-1: no within-cluster block exists"}});
    }

    // Observed property, not an assertion: the minimal zycle length equals
    // ord_p(1-k) on every instance where the sweep is affordable (k = 3).
    if (k == 3) {
        MinZycleResult mz = min_zycle_length(h, ord, b);
        nlohmann::json obs{{"ord", ord}};
        if (mz.status == SearchStatus::found) {
            obs["observed_min_zycle_length"] = mz.length;
            obs["equals_order"] = (mz.length == ord);
        } else {
            obs["observed_min_zycle_length"] = nullptr;
        }
        sink.note("observed_min_zycle_length", std::move(obs));
    } else {
        sink.note("observed_min_zycle_length", {{"skipped", "sweep too large for k > 3"}});
    }

    rep.status = sink.status();
    rep.evidence = {{"assertions", std::move(sink.list)},
                    {"edges", h.edge_count()},
                    {"min_codegree", prof.minimum}};
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Enumerates every zycle of the minimal length present in the algebraic
/// construction and asserts that each one has a block lying entirely inside
/// a single nonzero cluster (the trapping step of the freeness proof).
inline CheckReport check_cluster_trapping(int k, int ell, int cluster_size,
                                          const SearchBudget& budget = {}) {
    if (k < 3) throw UniformityTooSmall("check_cluster_trapping: k >= 3 required");
    if (ell < 2) throw LengthTooSmall("check_cluster_trapping: ell >= 2 required");
    if (cluster_size < 1)
        throw InvalidParameter("check_cluster_trapping: cluster_size >= 1 required");
    detail::CheckTimer timer;
    SearchBudget b = detail::check_budget(budget);
    PrimeChoice pc = smallest_admissible_prime(k, ell);
    const int p = static_cast<int>(pc.p);
    const int n = p * cluster_size;

    CheckReport rep;
    rep.check_id = "cluster-trapping";
    rep.parameters = {{"cluster_size", cluster_size}, {"ell", ell}, {"k", k},
                      {"n", n}, {"p", p}};
    detail::AssertionSink sink;

    Hypergraph h = algebraic(k, p, n);
    ClusterLabeling lab = algebraic_labeling(p, n);
    const int ord = multiplicative_order(1 - k, p);

    MinZycleResult mz = min_zycle_length(h, ord, b);
    if (mz.status == SearchStatus::budget_exhausted) {
        sink.inconclusive("minimal_zycle_length", {{"nodes", mz.nodes_expanded}});
    } else if (mz.status == SearchStatus::not_found) {
        sink.record("vacuous", true,
                    {{"reason", "no zycle up to ord_p(1-k) = " + std::to_string(ord)},
                     {"vacuous", true}});
    } else {
        const int len = mz.length;
        std::uint64_t trapped = 0;
        std::vector<ZycleCertificate> samples;
        auto is_trapped = [&](const ZycleCertificate& cert) {
            for (const auto& block : cert.blocks) {
                int lbl = lab.label(block[0]);
                if (lbl == 0) continue;
                bool same = true;
                for (Vertex v : block)
                    if (lab.label(v) != lbl) { same = false; break; }
                if (same) return true;
            }
            return false;
        };
        bool all_trapped = true;
        ZycleEnumeration en = enumerate_zycles(h, len, b, [&](const ZycleCertificate& cert) {
            bool t = is_trapped(cert);
            if (t) ++trapped;
            else all_trapped = false;
            if (samples.size() < 3) samples.push_back(cert);
            return true;
        });
        if (en.budget_exhausted) {
            sink.inconclusive("enumerate_all_minimal_zycles", {{"nodes", en.nodes_expanded}});
        } else {
            sink.record("every_minimal_zycle_has_trapped_block", all_trapped,
                        {{"length", len},
                         {"zycles", en.count},
                         {"trapped", trapped}});
            for (auto& cert : samples) {
                auto v = verify_certificate(h, cert);
                sink.record("sample_certificate_verifies", v.ok,
                            {{"certificate", to_json(cert)}});
                rep.zycle_evidence.emplace_back(h, std::move(cert));
            }
        }
    }

    rep.status = sink.status();
    rep.evidence = {{"assertions", std::move(sink.list)}};
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// The two partite constructions: codegree thresholds, exhaustive
/// Z_ell-freeness for every length not divisible by the part count, and
/// explicit certificates for the divisible lengths that do embed.
///
/// Note: the codegree assertions delta >= n/3 and delta >= n/4 fail; the
/// true minima are n/3 - 1 and n/4 - 1 (a cross pair loses one extension
/// to its own vertex). Reported with the deficient pair as counterexample.
inline CheckReport check_partite_constructions(int n3, int n4, int max_ell,
                                               const SearchBudget& budget = {}) {
    if (n3 % 3 != 0) throw DivisibilityViolated("check_partite_constructions: 3 | n3");
    if (n4 % 4 != 0) throw DivisibilityViolated("check_partite_constructions: 4 | n4");
    if (max_ell < 2) throw LengthTooSmall("check_partite_constructions: max_ell >= 2");
    detail::CheckTimer timer;
    SearchBudget b = detail::check_budget(budget);

    CheckReport rep;
    rep.check_id = "partite-constructions";
    rep.parameters = {{"max_ell", max_ell}, {"n3", n3}, {"n4", n4}};
    detail::AssertionSink sink;

    Hypergraph tri = tripartite_iterated(n3);
    CodegreeProfile tri_prof = tri.min_codegree();
    sink.record("tripartite_min_codegree_at_least_n_over_3", tri_prof.minimum >= n3 / 3,
                {{"expected_at_least", n3 / 3},
                 {"actual", tri_prof.minimum},
                 {"argmin", tri_prof.argmin.vertices()}});
    for (int ell = 2; ell <= max_ell; ++ell) {
        if (ell % 3 == 0) continue;
        detail::assert_zycle_free(sink, tri, ell, b,
                                  "tripartite_zycle_free_" + std::to_string(ell));
    }
    {
        ZycleSearchResult z3 = find_zycle(tri, 3, b);
        if (z3.status == SearchStatus::budget_exhausted) {
            sink.inconclusive("tripartite_contains_z3");
        } else {
            bool ok = z3.status == SearchStatus::found &&
                      verify_certificate(tri, *z3.certificate).ok;
            nlohmann::json d;
            if (z3.certificate) d["certificate"] = to_json(*z3.certificate);
            sink.record("tripartite_contains_z3", ok, std::move(d));
            if (z3.certificate) rep.zycle_evidence.emplace_back(tri, *z3.certificate);
        }
    }

    Hypergraph quad = quadripartite(n4);
    CodegreeProfile quad_prof = quad.min_codegree();
    sink.record("quadripartite_min_codegree_at_least_n_over_4", quad_prof.minimum >= n4 / 4,
                {{"expected_at_least", n4 / 4},
                 {"actual", quad_prof.minimum},
                 {"argmin", quad_prof.argmin.vertices()}});
    for (int ell = 2; ell <= max_ell; ++ell) {
        if (ell % 4 == 0) continue;
        detail::assert_zycle_free(sink, quad, ell, b,
                                  "quadripartite_zycle_free_" + std::to_string(ell));
    }
    {
        ZycleSearchResult z4 = find_zycle(quad, 4, b);
        if (z4.status == SearchStatus::budget_exhausted) {
            sink.inconclusive("quadripartite_contains_z4");
        } else {
            bool ok = z4.status == SearchStatus::found &&
                      verify_certificate(quad, *z4.certificate).ok;
            nlohmann::json d;
            if (z4.certificate) d["certificate"] = to_json(*z4.certificate);
            sink.record("quadripartite_contains_z4", ok, std::move(d));
            if (z4.certificate) rep.zycle_evidence.emplace_back(quad, *z4.certificate);
        }
    }
    if (max_ell >= 3)
        sink.note("quadripartite_z3_freeness_witnesses_density_lower_bound",
                  {{"see", "quadripartite_zycle_free_3"}});

    rep.status = sink.status();
    rep.evidence = {{"assertions", std::move(sink.list)},
                    {"quadripartite_min_codegree", quad_prof.minimum},
                    {"tripartite_min_codegree", tri_prof.minimum}};
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// The reduced algebraic graph carries an explicit zycle through whole
/// clusters: V_1 |> V_{1-k} |> V_{(1-k)^2} |> ... closes after exactly
/// ord_p(1-k) steps, which is at most p-1. The chain is constructed, not
/// searched, and re-verified as an ordinary certificate.
inline CheckReport check_reduced_chain(int k, int p, const SearchBudget& budget = {}) {
    if (k < 3) throw UniformityTooSmall("check_reduced_chain: k >= 3 required");
    detail::CheckTimer timer;
    (void)budget;

    CheckReport rep;
    rep.check_id = "reduced-chain";
    rep.parameters = {{"k", k}, {"p", p}};
    detail::AssertionSink sink;

    Hypergraph h = reduced_algebraic(k, p);  // validates p prime > k
    ClusterLabeling lab = reduced_labeling(k, p);
    const int ord = multiplicative_order(1 - k, p);
    sink.record("order_at_most_p_minus_1", ord <= p - 1, {{"ord", ord}, {"p", p}});

    std::vector<int> labels;
    std::vector<KSet> blocks;
    long long residue = 1;
    bool distinct = true;
    for (int i = 0; i < ord; ++i) {
        int lbl = residue == 0 ? p : static_cast<int>(residue);
        for (int prev : labels)
            if (prev == lbl) distinct = false;
        labels.push_back(lbl);
        blocks.push_back(KSet::of(lab.cluster(lbl)));
        residue = mod(residue * (1 - k), p);
    }
    sink.record("chain_closes_after_exactly_ord_steps", residue == 1 && distinct,
                {{"cluster_labels", labels}, {"returns_to", residue}});

    ZycleCertificate cert{ord, std::move(blocks), h.n(), h.k()};
    auto v = verify_certificate(h, cert);
    sink.record("cluster_chain_certificate_verifies", v.ok,
                {{"certificate", to_json(cert)}, {"reasons", v.reasons}});
    rep.zycle_evidence.emplace_back(h, std::move(cert));

    rep.status = sink.status();
    rep.evidence = {{"assertions", std::move(sink.list)},
                    {"edges", h.edge_count()},
                    {"ord", ord}};
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// Finite shadow of the single-edge-deletion result: the exact codegree
/// Turan number of the deleted zycle never exceeds that of the full zycle.
/// Both solver runs must be exhaustive for the check to conclude.
inline CheckReport check_zycle_minus_density_witnesses(int ell, int n,
                                                       const SearchBudget& budget = {}) {
    if (ell < 3) throw LengthTooSmall("check_zycle_minus_density_witnesses: ell >= 3");
    detail::CheckTimer timer;
    SearchBudget b = detail::check_budget(budget);

    CheckReport rep;
    rep.check_id = "zycle-minus-density";
    rep.parameters = {{"ell", ell}, {"n", n}};
    detail::AssertionSink sink;

    Hypergraph zm = zycle_minus(3, ell);
    Hypergraph z = zycle(3, ell);
    ExtremalResult rm = exco_exact(n, 3, {zm}, b);
    ExtremalResult rz = exco_exact(n, 3, {z}, b);
    if (!rm.exhaustive || !rz.exhaustive) {
        sink.inconclusive("exact_values",
                          {{"minus_exhaustive", rm.exhaustive}, {"full_exhaustive", rz.exhaustive}});
    } else {
        sink.record("deleted_zycle_value_at_most_full_zycle_value", rm.value <= rz.value,
                    {{"exco_minus", rm.value},
                     {"exco_full", rz.value},
                     {"ratio_minus", static_cast<double>(rm.value) / n},
                     {"ratio_full", static_cast<double>(rz.value) / n}});
        bool wm = verify_witness(rm.witness, {zm}, rm.value, b);
        bool wz = verify_witness(rz.witness, {z}, rz.value, b);
        sink.record("witnesses_verify", wm && wz,
                    {{"minus_witness_khg", write_khg(rm.witness)},
                     {"full_witness_khg", write_khg(rz.witness)}});
        rep.witness_evidence.push_back({rm.witness, {zm}, rm.value});
        rep.witness_evidence.push_back({rz.witness, {z}, rz.value});
    }

    rep.status = sink.status();
    rep.evidence = {{"assertions", std::move(sink.list)}};
    rep.runtime_seconds = timer.seconds();
    return rep;
}

/// The default verification matrix run by `verify --all`.
inline std::vector<CheckReport> run_default_check_suite(const SearchBudget& budget = {}) {
    std::vector<CheckReport> out;
    out.push_back(check_blowup_fact(3, 3, 2, budget));
    out.push_back(check_blowup_fact(3, 4, 2, budget));
    out.push_back(check_blowup_fact(4, 3, 2, budget));
    out.push_back(check_algebraic_construction(3, 2, 2, budget));
    out.push_back(check_algebraic_construction(3, 3, 2, budget));
    out.push_back(check_algebraic_construction(4, 2, 3, budget));
    out.push_back(check_algebraic_construction(4, 3, 3, budget));
    out.push_back(check_cluster_trapping(3, 2, 2, budget));
    out.push_back(check_partite_constructions(9, 8, 6, budget));
    out.push_back(check_partite_constructions(12, 12, 6, budget));
    out.push_back(check_reduced_chain(3, 5, budget));
    out.push_back(check_reduced_chain(3, 7, budget));
    out.push_back(check_reduced_chain(4, 5, budget));
    out.push_back(check_zycle_minus_density_witnesses(3, 6, budget));
    return out;
}

}  // namespace zyclone
