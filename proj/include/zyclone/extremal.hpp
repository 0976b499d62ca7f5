#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypergraph.hpp"
#include "io.hpp"
#include "rng.hpp"
#include "search.hpp"

namespace zyclone {

struct ExtremalResult {
    int n = 0;
    int k = 0;
    int value = 0;
    Hypergraph witness;
    bool exhaustive = false;
    std::uint64_t nodes_expanded = 0;
};

inline nlohmann::json to_json(const ExtremalResult& r) {
    return nlohmann::json{{"exhaustive", r.exhaustive},
                          {"k", r.k},
                          {"n", r.n},
                          {"value", r.value},
                          {"witness_khg", write_khg(r.witness)}};
}

struct LocalSearchConfig {
    std::uint64_t seed = 1;
    int restarts = 4;
    int steps = 20000;
    double initial_temperature = 1.5;
    double cooling = 0.9995;
    int jobs = 1;
};

/// True iff the graph meets the claimed minimum codegree and every pattern
/// is exhaustively refuted by search. Budget exhaustion counts as failure
/// since the claim would then be unconfirmed.
inline bool verify_witness(const Hypergraph& h, const std::vector<Hypergraph>& patterns,
                           int claimed_d, const SearchBudget& budget = {}) {
    for (const auto& p : patterns)
        if (p.k() != h.k())
            throw UniformityMismatch("verify_witness: pattern uniformity mismatch");
    if (h.n() >= h.k() - 1 && h.min_codegree().minimum < claimed_d) return false;
    if (h.n() < h.k() - 1 && claimed_d > 0) return false;
    for (const auto& p : patterns) {
        if (p.n() > h.n()) continue;  // cannot embed
        auto r = contains_pattern(h, p, budget);
        if (r.status != SearchStatus::not_found) return false;
    }
    return true;
}

namespace detail {

inline void validate_patterns(int k, const std::vector<Hypergraph>& patterns) {
    if (patterns.empty())
        throw InvalidParameter("forbidden family must be nonempty");
    for (const auto& p : patterns) {
        if (p.k() != k)
            throw UniformityMismatch("pattern uniformity differs from instance");
        if (p.edge_count() == 0)
            throw InvalidParameter("pattern with no edges is contained in every host");
    }
}

// Feasibility search for a fixed minimum-codegree target d: decide every
// candidate edge in lexicographic order, include branch first. Prunes on
// (k-1)-set degree slack, forces edges whose slack is exactly zero, checks
// forbidden patterns incrementally against the newest edge only, and cuts
// isomorphic duplicates by requiring vertex 0 to carry the maximum degree
// with d({0,1}) >= d({0,2}) >= ... (any witness can be relabeled to that
// form, so feasibility is unaffected).
class ExactFeasibility {
public:
    enum Result { infeasible = 0, feasible = 1, aborted = 2 };

    ExactFeasibility(int n, int k, const std::vector<Hypergraph>& patterns,
                     BudgetTracker& bt)
        : n_(n), k_(k), patterns_(patterns), bt_(bt) {
        for_each_subset(n_, k_, [&](const std::vector<Vertex>& s) {
            edges_.push_back(KSet::from_sorted(s));
        });
        for_each_subset(n_, k_ - 1, [&](const std::vector<Vertex>& s) {
            pair_index_[pack(KSet::from_sorted(s))] = static_cast<int>(pair_count_);
            ++pair_count_;
        });
        edge_pairs_.resize(edges_.size());
        pair_edges_.resize(pair_count_);
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            for (std::size_t drop = 0; drop < edges_[e].size(); ++drop) {
                int p = pair_index_.at(pack(edges_[e].without(edges_[e][drop])));
                edge_pairs_[e].push_back(p);
                pair_edges_[static_cast<std::size_t>(p)].push_back(static_cast<int>(e));
            }
        }
        for (const auto& pat : patterns_)
            pattern_orders_.push_back(nullptr), (void)pat;  // orders built lazily per anchor
    }

    Result run(int d, std::vector<KSet>& witness_out) {
        d_ = d;
        state_.assign(edges_.size(), 0);
        cur_.assign(pair_count_, 0);
        pot_.assign(pair_count_, 0);
        for (std::size_t p = 0; p < pair_count_; ++p)
            pot_[p] = static_cast<int>(pair_edges_[p].size());
        cur_deg_.assign(static_cast<std::size_t>(n_), 0);
        pot_deg_.assign(static_cast<std::size_t>(n_), 0);
        cur2_.assign(static_cast<std::size_t>(n_), 0);
        pot2_.assign(static_cast<std::size_t>(n_), 0);
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            for (Vertex v : edges_[e]) ++pot_deg_[static_cast<std::size_t>(v)];
            if (edges_[e].contains(0))
                for (Vertex v : edges_[e])
                    if (v != 0) ++pot2_[static_cast<std::size_t>(v)];
        }
        included_keys_.clear();
        included_.clear();
        trail_.clear();
        witness_.clear();

        Result r = solve();
        if (r == feasible) witness_out = witness_;
        return r;
    }

private:
    struct TrailEntry {
        int edge;
        bool included;
    };

    bool bounds_ok() const {
        for (std::size_t p = 0; p < pair_count_; ++p)
            if (cur_[p] + pot_[p] < d_) return false;
        int ub0 = cur_deg_[0] + pot_deg_[0];
        for (int v = 1; v < n_; ++v)
            if (cur_deg_[static_cast<std::size_t>(v)] > ub0) return false;
        for (int i = 1; i + 1 < n_; ++i)
            if (cur2_[static_cast<std::size_t>(i + 1)] >
                cur2_[static_cast<std::size_t>(i)] + pot2_[static_cast<std::size_t>(i)])
                return false;
        return true;
    }

    bool creates_pattern_copy(const KSet& e) const {
        auto pred = [this](const KSet& q) {
            return included_keys_.count(pack(q)) > 0;
        };
        for (const auto& pat : patterns_)
            if (count_embeddings_using_edge_impl(n_, pat, e, pred, 1) > 0) return true;
        return false;
    }

    // false = this inclusion creates a forbidden copy (state stays applied;
    // the caller unwinds through the trail)
    bool apply_include(int e) {
        state_[static_cast<std::size_t>(e)] = 1;
        trail_.push_back({e, true});
        for (int p : edge_pairs_[static_cast<std::size_t>(e)]) {
            ++cur_[static_cast<std::size_t>(p)];
            --pot_[static_cast<std::size_t>(p)];
        }
        const KSet& edge = edges_[static_cast<std::size_t>(e)];
        for (Vertex v : edge) {
            ++cur_deg_[static_cast<std::size_t>(v)];
            --pot_deg_[static_cast<std::size_t>(v)];
        }
        if (edge.contains(0))
            for (Vertex v : edge)
                if (v != 0) {
                    ++cur2_[static_cast<std::size_t>(v)];
                    --pot2_[static_cast<std::size_t>(v)];
                }
        included_keys_.insert(pack(edge));
        included_.push_back(e);
        return !creates_pattern_copy(edge);
    }

    void apply_exclude(int e) {
        state_[static_cast<std::size_t>(e)] = 2;
        trail_.push_back({e, false});
        for (int p : edge_pairs_[static_cast<std::size_t>(e)])
            --pot_[static_cast<std::size_t>(p)];
        const KSet& edge = edges_[static_cast<std::size_t>(e)];
        for (Vertex v : edge) --pot_deg_[static_cast<std::size_t>(v)];
        if (edge.contains(0))
            for (Vertex v : edge)
                if (v != 0) --pot2_[static_cast<std::size_t>(v)];
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            TrailEntry t = trail_.back();
            trail_.pop_back();
            const KSet& edge = edges_[static_cast<std::size_t>(t.edge)];
            state_[static_cast<std::size_t>(t.edge)] = 0;
            if (t.included) {
                for (int p : edge_pairs_[static_cast<std::size_t>(t.edge)]) {
                    --cur_[static_cast<std::size_t>(p)];
                    ++pot_[static_cast<std::size_t>(p)];
                }
                for (Vertex v : edge) {
                    --cur_deg_[static_cast<std::size_t>(v)];
                    ++pot_deg_[static_cast<std::size_t>(v)];
                }
                if (edge.contains(0))
                    for (Vertex v : edge)
                        if (v != 0) {
                            --cur2_[static_cast<std::size_t>(v)];
                            ++pot2_[static_cast<std::size_t>(v)];
                        }
                included_keys_.erase(pack(edge));
                included_.pop_back();
            } else {
                for (int p : edge_pairs_[static_cast<std::size_t>(t.edge)])
                    ++pot_[static_cast<std::size_t>(p)];
                for (Vertex v : edge) ++pot_deg_[static_cast<std::size_t>(v)];
                if (edge.contains(0))
                    for (Vertex v : edge)
                        if (v != 0) ++pot2_[static_cast<std::size_t>(v)];
            }
        }
    }

    // Forces every edge whose (k-1)-set has zero slack. False = dead branch.
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t p = 0; p < pair_count_; ++p) {
                if (cur_[p] + pot_[p] < d_) return false;
                if (cur_[p] < d_ && cur_[p] + pot_[p] == d_) {
                    for (int e : pair_edges_[p]) {
                        if (state_[static_cast<std::size_t>(e)] == 0) {
                            if (!apply_include(e)) return false;
                            changed = true;
                        }
                    }
                }
            }
        }
        return true;
    }

    Result solve() {
        if (!bt_.tick()) return aborted;
        std::size_t mark = trail_.size();
        if (!propagate() || !bounds_ok()) {
            undo_to(mark);
            return infeasible;
        }
        int next = -1;
        for (std::size_t e = 0; e < edges_.size(); ++e)
            if (state_[e] == 0) {
                next = static_cast<int>(e);
                break;
            }
        if (next < 0) {
            witness_.clear();
            for (int e : included_) witness_.push_back(edges_[static_cast<std::size_t>(e)]);
            std::sort(witness_.begin(), witness_.end());
            undo_to(mark);
            return feasible;
        }

        std::size_t mark_inc = trail_.size();
        if (apply_include(next)) {
            Result r = solve();
            if (r != infeasible) {
                undo_to(mark);
                return r;
            }
        }
        undo_to(mark_inc);
        apply_exclude(next);
        Result r = solve();
        undo_to(mark);
        return r;
    }

    int n_, k_, d_ = 0;
    const std::vector<Hypergraph>& patterns_;
    BudgetTracker& bt_;
    std::vector<KSet> edges_;
    std::unordered_map<PackedSet, int> pair_index_;
    std::size_t pair_count_ = 0;
    std::vector<std::vector<int>> edge_pairs_;
    std::vector<std::vector<int>> pair_edges_;
    std::vector<const void*> pattern_orders_;  // reserved

    std::vector<int8_t> state_;
    std::vector<int> cur_, pot_;
    std::vector<int> cur_deg_, pot_deg_, cur2_, pot2_;
    std::unordered_set<PackedSet> included_keys_;
    std::vector<int> included_;
    std::vector<TrailEntry> trail_;
    std::vector<KSet> witness_;
};

}  // namespace detail

/// Exact codegree Turan number: the largest d such that some pattern-free
/// k-graph on n vertices has minimum codegree >= d. Targets are tried from
/// n-k+1 downward; the first feasible level is optimal, so `exhaustive` is
/// true exactly when every higher level was refuted within budget.
inline ExtremalResult exco_exact(int n, int k, const std::vector<Hypergraph>& patterns,
                                 const SearchBudget& budget = {},
                                 std::uint64_t max_candidate_edges = 40) {
    if (k < 2) throw UniformityTooSmall("exco_exact: k >= 2 required");
    if (n < k) throw InvalidParameter("exco_exact: n >= k required");
    detail::validate_patterns(k, patterns);
    if (detail::binomial(n, k) > max_candidate_edges)
        throw InstanceTooLarge("exco_exact: C(n,k) exceeds the exact-solver cap of " +
                               std::to_string(max_candidate_edges));

    ExtremalResult out;
    out.n = n;
    out.k = k;
    detail::BudgetTracker bt(budget);
    detail::ExactFeasibility solver(n, k, patterns, bt);
    bool any_aborted = false;
    for (int d = n - k + 1; d >= 1; --d) {
        std::vector<KSet> witness;
        auto r = solver.run(d, witness);
        if (r == detail::ExactFeasibility::feasible) {
            out.value = d;
            out.witness = Hypergraph::from_ksets(n, k, std::move(witness));
            out.exhaustive = !any_aborted;
            out.nodes_expanded = bt.nodes();
            return out;
        }
        if (r == detail::ExactFeasibility::aborted) any_aborted = true;
    }
    out.value = 0;
    out.witness = Hypergraph::from_ksets(n, k, {});  // empty graph is always pattern-free
    out.exhaustive = !any_aborted;
    out.nodes_expanded = bt.nodes();
    return out;
}

namespace detail {

struct AnnealState {
    int n = 0, k = 0;
    std::vector<KSet> all_edges;
    std::vector<std::vector<int>> edge_pairs;
    std::size_t pair_count = 0;

    std::vector<char> included;
    std::unordered_set<PackedSet> keys;
    std::vector<int> pair_degree;
    std::vector<std::int64_t> hist;  // degree -> count of (k-1)-sets
    std::int64_t copies = 0;
    int edge_total = 0;

    void init_structure(int n_, int k_) {
        n = n_;
        k = k_;
        all_edges.clear();
        for_each_subset(n, k, [&](const std::vector<Vertex>& s) {
            all_edges.push_back(KSet::from_sorted(s));
        });
        std::unordered_map<PackedSet, int> pair_index;
        pair_count = 0;
        for_each_subset(n, k - 1, [&](const std::vector<Vertex>& s) {
            pair_index[pack(KSet::from_sorted(s))] = static_cast<int>(pair_count);
            ++pair_count;
        });
        edge_pairs.assign(all_edges.size(), {});
        for (std::size_t e = 0; e < all_edges.size(); ++e)
            for (std::size_t drop = 0; drop < all_edges[e].size(); ++drop)
                edge_pairs[e].push_back(
                    pair_index.at(pack(all_edges[e].without(all_edges[e][drop]))));
    }

    void load(const Hypergraph& h, const std::vector<Hypergraph>& patterns) {
        included.assign(all_edges.size(), 0);
        keys.clear();
        pair_degree.assign(pair_count, 0);
        hist.assign(static_cast<std::size_t>(n + 1), 0);
        hist[0] = static_cast<std::int64_t>(pair_count);
        edge_total = 0;
        for (std::size_t e = 0; e < all_edges.size(); ++e)
            if (h.has_edge(all_edges[e])) flip_in(static_cast<int>(e));
        copies = 0;
        auto pred = [this](const KSet& q) { return keys.count(pack(q)) > 0; };
        for (const auto& p : patterns)
            copies += static_cast<std::int64_t>(count_embeddings_impl(n, p, pred, UINT64_MAX));
    }

    int min_codegree() const {
        for (int d = 0; d <= n; ++d)
            if (hist[static_cast<std::size_t>(d)] > 0) return d;
        return 0;
    }

    void flip_in(int e) {
        included[static_cast<std::size_t>(e)] = 1;
        keys.insert(pack(all_edges[static_cast<std::size_t>(e)]));
        ++edge_total;
        for (int p : edge_pairs[static_cast<std::size_t>(e)]) {
            int d = pair_degree[static_cast<std::size_t>(p)];
            --hist[static_cast<std::size_t>(d)];
            ++hist[static_cast<std::size_t>(d + 1)];
            pair_degree[static_cast<std::size_t>(p)] = d + 1;
        }
    }

    void flip_out(int e) {
        included[static_cast<std::size_t>(e)] = 0;
        keys.erase(pack(all_edges[static_cast<std::size_t>(e)]));
        --edge_total;
        for (int p : edge_pairs[static_cast<std::size_t>(e)]) {
            int d = pair_degree[static_cast<std::size_t>(p)];
            --hist[static_cast<std::size_t>(d)];
            ++hist[static_cast<std::size_t>(d - 1)];
            pair_degree[static_cast<std::size_t>(p)] = d - 1;
        }
    }

    std::int64_t copies_using(int e, const std::vector<Hypergraph>& patterns) {
        auto pred = [this](const KSet& q) { return keys.count(pack(q)) > 0; };
        std::int64_t total = 0;
        for (const auto& p : patterns)
            total += static_cast<std::int64_t>(count_embeddings_using_edge_impl(
                n, p, all_edges[static_cast<std::size_t>(e)], pred, UINT64_MAX));
        return total;
    }

    Hypergraph to_hypergraph() const {
        std::vector<KSet> edges;
        for (std::size_t e = 0; e < all_edges.size(); ++e)
            if (included[e]) edges.push_back(all_edges[e]);
        return Hypergraph::from_ksets(n, k, std::move(edges));
    }
};

struct AnnealBest {
    bool valid = false;
    int min_deg = -1;
    int edges = -1;
    std::vector<char> included;

    void offer(const AnnealState& s) {
        if (s.copies != 0) return;
        int md = s.min_codegree();
        if (!valid || md > min_deg || (md == min_deg && s.edge_total > edges)) {
            valid = true;
            min_deg = md;
            edges = s.edge_total;
            included = s.included;
        }
    }
};

// One annealing restart. Objective: feasibility first (penalty n per
// pattern copy), then minimum codegree, then edge count as a tiebreak
// (the sum of all codegrees is k times the edge count).
inline AnnealBest anneal_restart(int n, int k, const std::vector<Hypergraph>& patterns,
                                 const LocalSearchConfig& cfg, SplitMix64 rng,
                                 const Hypergraph& start, AnnealState& st) {
    st.load(start, patterns);
    AnnealBest best;
    best.offer(st);

    const double edge_tiebreak = 1.0 / (static_cast<double>(st.all_edges.size()) + 1.0);
    auto energy = [&](std::int64_t copies, int min_deg, int edges) {
        return static_cast<double>(copies) * n - min_deg - edges * edge_tiebreak;
    };
    double temp = cfg.initial_temperature;
    const std::size_t m = st.all_edges.size();
    for (int step = 0; step < cfg.steps; ++step) {
        int e = static_cast<int>(rng.next_below(m));
        double before = energy(st.copies, st.min_codegree(), st.edge_total);
        std::int64_t new_copies;
        if (st.included[static_cast<std::size_t>(e)]) {
            std::int64_t lost = st.copies_using(e, patterns);
            st.flip_out(e);
            new_copies = st.copies - lost;
        } else {
            st.flip_in(e);
            new_copies = st.copies + st.copies_using(e, patterns);
        }
        double after = energy(new_copies, st.min_codegree(), st.edge_total);
        double delta = after - before;
        bool accept = delta <= 0.0 || rng.next_unit() < std::exp(-delta / std::max(temp, 1e-9));
        if (accept) {
            st.copies = new_copies;
            best.offer(st);
        } else {
            if (st.included[static_cast<std::size_t>(e)])
                st.flip_out(e);
            else
                st.flip_in(e);
        }
        temp *= cfg.cooling;
    }
    return best;
}

}  // namespace detail

/// Stochastic witness finder: simulated-annealing edge flips maximizing
/// minimum codegree with a penalty per contained pattern copy. The result
/// is always exhaustive = false; the returned witness is re-verified
/// pattern-free before returning, so penalized states never escape. An
/// optional seed witness (e.g. a known construction) starts restart 0, and
/// the result is never worse than a pattern-free seed.
inline ExtremalResult exco_local_search(int n, int k,
                                        const std::vector<Hypergraph>& patterns,
                                        const LocalSearchConfig& cfg = {},
                                        const std::optional<Hypergraph>& seed_witness = {}) {
    if (k < 2) throw UniformityTooSmall("exco_local_search: k >= 2 required");
    if (n < k) throw InvalidParameter("exco_local_search: n >= k required");
    detail::validate_patterns(k, patterns);
    if (detail::binomial(n, k) > 2000)
        throw InstanceTooLarge("exco_local_search: C(n,k) exceeds the local-search cap");
    if (cfg.restarts < 1 || cfg.steps < 1)
        throw InvalidParameter("exco_local_search: restarts and steps must be positive");
    if (!(cfg.initial_temperature > 0.0) || !(cfg.cooling > 0.0) || !(cfg.cooling < 1.0))
        throw InvalidParameter("exco_local_search: temperature schedule invalid");
    if (seed_witness && (seed_witness->n() != n || seed_witness->k() != k))
        throw InvalidParameter("exco_local_search: seed witness shape mismatch");

    Hypergraph empty = Hypergraph::from_ksets(n, k, {});
    std::vector<detail::AnnealBest> bests(static_cast<std::size_t>(cfg.restarts));

    auto run_range = [&](int from, int stride) {
        detail::AnnealState st;
        st.init_structure(n, k);
        for (int r = from; r < cfg.restarts; r += stride) {
            const Hypergraph& start = (r == 0 && seed_witness) ? *seed_witness : empty;
            bests[static_cast<std::size_t>(r)] = detail::anneal_restart(
                n, k, patterns, cfg, SplitMix64::stream(cfg.seed, static_cast<std::uint64_t>(r)),
                start, st);
        }
    };
    int jobs = std::max(1, std::min(cfg.jobs, cfg.restarts));
    if (jobs == 1) {
        run_range(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t) threads.emplace_back(run_range, t, jobs);
        for (auto& th : threads) th.join();
    }

    // merge: maximum value, then deterministic tiebreak on serialization
    ExtremalResult out;
    out.n = n;
    out.k = k;
    out.exhaustive = false;
    Hypergraph best_graph = empty;
    int best_value = -1;
    std::string best_khg;
    for (const auto& b : bests) {
        if (!b.valid) continue;
        std::vector<KSet> edges;
        detail::AnnealState tmp;  // rebuild edges from the flip mask
        tmp.init_structure(n, k);
        for (std::size_t e = 0; e < tmp.all_edges.size(); ++e)
            if (b.included[e]) edges.push_back(tmp.all_edges[e]);
        Hypergraph g = Hypergraph::from_ksets(n, k, std::move(edges));
        std::string khg = write_khg(g);
        int value = b.min_deg;
        if (value > best_value || (value == best_value && khg < best_khg)) {
            best_value = value;
            best_graph = std::move(g);
            best_khg = std::move(khg);
        }
    }
    if (best_value < 0) {
        best_graph = empty;
        best_value = 0;
    }

    if (!verify_witness(best_graph, patterns, best_value, detail::unbounded_budget()))
        throw std::logic_error("exco_local_search: internal witness verification failed");
    out.value = best_value;
    out.witness = std::move(best_graph);
    return out;
}

}  // namespace zyclone
