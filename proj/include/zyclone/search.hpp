#pragma once

#include <algorithm>
#include <atomic>
#include <type_traits>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "certificates.hpp"
#include "hypergraph.hpp"

namespace zyclone {

struct SearchBudget {
    std::uint64_t node_limit = 10'000'000;
    double time_limit_seconds = 60.0;
    bool deterministic = false;
    int jobs = 1;
};

enum class SearchStatus { found, not_found, budget_exhausted };

struct ZycleSearchResult {
    SearchStatus status = SearchStatus::not_found;
    std::optional<ZycleCertificate> certificate;
    std::uint64_t nodes_expanded = 0;
};

struct MinZycleResult {
    SearchStatus status = SearchStatus::not_found;  // not_found = none up to the bound
    int length = 0;                                 // valid when found
    int none_up_to = 0;                             // valid when not_found
    std::optional<ZycleCertificate> certificate;
    std::uint64_t nodes_expanded = 0;
};

struct EmbeddingSearchResult {
    SearchStatus status = SearchStatus::not_found;
    std::optional<Embedding> embedding;
    std::uint64_t nodes_expanded = 0;
};

struct BackChainResult {
    std::vector<KSet> chain;
    std::optional<int> stuck_at;  // 1-based index of the block that could not be picked
    bool ok() const { return !stuck_at.has_value(); }
};

namespace detail {

// Clamped so that absurdly large limits cannot overflow the clock's
// integer representation.
inline std::chrono::steady_clock::time_point deadline_from(double seconds) {
    double clamped = std::min(seconds, 3.0e8);  // ~10 years
    return std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(clamped));
}

class BudgetTracker {
public:
    explicit BudgetTracker(const SearchBudget& b)
        : node_limit_(b.node_limit), deadline_(deadline_from(b.time_limit_seconds)) {}

    // One search node. False means abort (budget out or another worker won).
    bool tick() {
        std::uint64_t c = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (c > node_limit_) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        if ((c & 2047) == 0 && std::chrono::steady_clock::now() > deadline_) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        return !stop_.load(std::memory_order_relaxed);
    }

    void request_stop() { stop_.store(true, std::memory_order_relaxed); }
    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
    std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

private:
    std::uint64_t node_limit_;
    std::chrono::steady_clock::time_point deadline_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
    std::atomic<bool> stop_{false};
};

inline std::vector<KSet> all_blocks(const Hypergraph& h) {
    std::vector<KSet> out;
    out.reserve(static_cast<std::size_t>(binomial(h.n(), h.k() - 1)));
    for_each_subset(h.n(), h.k() - 1, [&](const std::vector<Vertex>& s) {
        out.push_back(KSet::from_sorted(s));
    });
    return out;
}

// Depth-first search for zycle chains. A chain e_1, ..., e_t extends by
// (k-1)-subsets of N(e_t), since e |> f holds exactly when f is contained
// in N(e). Rotational symmetry is broken by keeping the root block the
// lexicographic minimum of its cycle; blocks stay pairwise disjoint.
class ZycleDfs {
public:
    // Callback receives a completed block chain; returning false stops the
    // whole search (first-hit search stops, enumeration keeps going).
    using Emit = std::function<bool(const std::vector<KSet>&)>;

    ZycleDfs(const Hypergraph& h, int ell, BudgetTracker& bt)
        : h_(h), ell_(ell), bt_(bt), used_(static_cast<std::size_t>(h.n()), 0) {}

    // Scans roots[lo, hi) in order. Returns false when aborted.
    bool scan(const std::vector<KSet>& roots, std::size_t lo, std::size_t hi,
              const Emit& emit) {
        emit_ = &emit;
        for (std::size_t i = lo; i < hi && !done_ && !aborted_; ++i) {
            if (!bt_.tick()) {
                aborted_ = true;
                break;
            }
            const KSet& root = roots[i];
            chain_.assign(1, root);
            mark(root, 1);
            used_count_ = static_cast<int>(root.size());
            extend();
            mark(root, 0);
            used_count_ = 0;
        }
        return !aborted_;
    }

    bool aborted() const { return aborted_; }

private:
    void mark(const KSet& b, char v) {
        for (Vertex x : b) used_[static_cast<std::size_t>(x)] = v;
    }

    void extend() {
        const int bk = h_.k() - 1;
        if (static_cast<int>(chain_.size()) == ell_) {
            if (h_.back_related(chain_.back(), chain_.front()))
                if (!(*emit_)(chain_)) done_ = true;
            return;
        }
        int remaining = ell_ - static_cast<int>(chain_.size());
        if (remaining * bk > h_.n() - used_count_) return;

        // candidate pool: N(last) minus vertices already used by the chain
        std::vector<Vertex> pool;
        const KSet& last = chain_.back();
        for (Vertex v = 0; v < h_.n(); ++v)
            if (!used_[static_cast<std::size_t>(v)] && !last.contains(v) &&
                h_.has_extension(last, v))
                pool.push_back(v);
        const int m = static_cast<int>(pool.size());
        if (m < bk) return;

        std::vector<int> idx(static_cast<std::size_t>(bk));
        for (int i = 0; i < bk; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::vector<Vertex> cand(static_cast<std::size_t>(bk));
            for (int i = 0; i < bk; ++i)
                cand[static_cast<std::size_t>(i)] =
                    pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            KSet block = KSet::from_sorted(std::move(cand));
            if (chain_.front() < block) {
                if (!bt_.tick()) {
                    aborted_ = true;
                    return;
                }
                mark(block, 1);
                used_count_ += bk;
                chain_.push_back(std::move(block));
                extend();
                mark(chain_.back(), 0);
                chain_.pop_back();
                used_count_ -= bk;
                if (done_ || aborted_) return;
            }
            int i = bk - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - bk + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < bk; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    const Hypergraph& h_;
    int ell_;
    BudgetTracker& bt_;
    std::vector<KSet> chain_;
    std::vector<char> used_;
    int used_count_ = 0;
    bool aborted_ = false;
    bool done_ = false;
    const Emit* emit_ = nullptr;
};

// Splits [0, total) into contiguous ranges, runs worker(index, lo, hi,
// winner) on each, and keeps the result of the lowest-index range that
// produced one; `winner` lets higher ranges stand down once a lower range
// has succeeded, which keeps deterministic results independent of the
// worker count.
template <typename R, typename Worker>
std::optional<R> run_partitioned(std::size_t total, int runner_count, BudgetTracker& bt,
                                 bool deterministic, Worker&& worker) {
    std::atomic<int> winner{std::numeric_limits<int>::max()};
    if (runner_count <= 1 || total <= 1) return worker(0, std::size_t{0}, total, winner);

    int jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(runner_count), total));
    std::vector<std::optional<R>> results(static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    std::size_t chunk = (total + static_cast<std::size_t>(jobs) - 1) / static_cast<std::size_t>(jobs);
    for (int t = 0; t < jobs; ++t) {
        threads.emplace_back([&, t] {
            std::size_t lo = static_cast<std::size_t>(t) * chunk;
            std::size_t hi = std::min(total, lo + chunk);
            if (lo >= hi) return;
            auto r = worker(t, lo, hi, winner);
            if (r) {
                results[static_cast<std::size_t>(t)] = std::move(r);
                int cur = winner.load();
                while (t < cur && !winner.compare_exchange_weak(cur, t)) {}
                if (!deterministic) bt.request_stop();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& r : results)
        if (r) return std::move(r);
    return std::nullopt;
}

}  // namespace detail

/// Searches for a copy of Z_ell in the host. A not_found result is an
/// exhaustive refutation and is only reported when the budget was not hit;
/// every returned certificate passes verify_certificate.
inline ZycleSearchResult find_zycle(const Hypergraph& host, int ell,
                                    const SearchBudget& budget = {}) {
    if (ell < 2) throw LengthTooSmall("find_zycle: ell >= 2 required");
    ZycleSearchResult out;
    if (static_cast<long long>(ell) * (host.k() - 1) > host.n())
        return out;  // too few vertices for ell disjoint blocks
    detail::BudgetTracker bt(budget);
    std::vector<KSet> roots = detail::all_blocks(host);

    auto worker = [&](int index, std::size_t lo, std::size_t hi,
                      std::atomic<int>& winner) -> std::optional<std::vector<KSet>> {
        std::optional<std::vector<KSet>> res;
        detail::ZycleDfs dfs(host, ell, bt);
        detail::ZycleDfs::Emit emit = [&](const std::vector<KSet>& chain) {
            res = chain;
            return false;
        };
        for (std::size_t i = lo; i < hi && !res; ++i) {
            if (winner.load(std::memory_order_relaxed) < index) break;
            if (!dfs.scan(roots, i, i + 1, emit)) break;
        }
        return res;
    };

    auto blocks = detail::run_partitioned<std::vector<KSet>>(
        roots.size(), budget.jobs, bt, budget.deterministic, worker);
    out.nodes_expanded = bt.nodes();
    if (blocks) {
        out.status = SearchStatus::found;
        out.certificate = ZycleCertificate{ell, std::move(*blocks), host.n(), host.k()};
    } else if (bt.exhausted()) {
        out.status = SearchStatus::budget_exhausted;
    } else {
        out.status = SearchStatus::not_found;
    }
    return out;
}

struct ZycleEnumeration {
    std::uint64_t count = 0;
    bool budget_exhausted = false;
    std::uint64_t nodes_expanded = 0;
};

/// Visits every zycle of length ell, one representative per rotation class
/// (the root block is the lexicographic minimum of its cycle). The callback
/// may return false to stop early. Sequential and deterministic.
inline ZycleEnumeration enumerate_zycles(
    const Hypergraph& host, int ell, const SearchBudget& budget,
    const std::function<bool(const ZycleCertificate&)>& fn) {
    if (ell < 2) throw LengthTooSmall("enumerate_zycles: ell >= 2 required");
    ZycleEnumeration out;
    if (static_cast<long long>(ell) * (host.k() - 1) > host.n()) return out;
    detail::BudgetTracker bt(budget);
    std::vector<KSet> roots = detail::all_blocks(host);
    detail::ZycleDfs dfs(host, ell, bt);
    detail::ZycleDfs::Emit emit = [&](const std::vector<KSet>& chain) {
        ++out.count;
        return fn(ZycleCertificate{ell, chain, host.n(), host.k()});
    };
    dfs.scan(roots, 0, roots.size(), emit);
    out.budget_exhausted = bt.exhausted();
    out.nodes_expanded = bt.nodes();
    return out;
}

/// Smallest ell <= max_ell with Z_ell in the host. Lengths are scanned
/// upward, so a found length also certifies absence of all shorter ones;
/// if any level exhausts the budget the whole query is budget_exhausted.
inline MinZycleResult min_zycle_length(const Hypergraph& host, int max_ell,
                                       const SearchBudget& budget = {}) {
    if (max_ell < 2) throw LengthTooSmall("min_zycle_length: max_ell >= 2 required");
    MinZycleResult out;
    auto deadline = detail::deadline_from(budget.time_limit_seconds);
    for (int ell = 2; ell <= max_ell; ++ell) {
        if (budget.node_limit <= out.nodes_expanded) {
            out.status = SearchStatus::budget_exhausted;
            return out;
        }
        SearchBudget level = budget;
        level.node_limit = budget.node_limit - out.nodes_expanded;
        level.time_limit_seconds = std::max(
            0.0,
            std::chrono::duration<double>(deadline - std::chrono::steady_clock::now()).count());
        ZycleSearchResult r = find_zycle(host, ell, level);
        out.nodes_expanded += r.nodes_expanded;
        if (r.status == SearchStatus::found) {
            out.status = SearchStatus::found;
            out.length = ell;
            out.certificate = std::move(r.certificate);
            return out;
        }
        if (r.status == SearchStatus::budget_exhausted) {
            out.status = SearchStatus::budget_exhausted;
            return out;
        }
    }
    out.status = SearchStatus::not_found;
    out.none_up_to = max_ell;
    return out;
}

namespace detail {

struct PatternOrder {
    std::vector<int> order;                         // assignment order of pattern vertices
    std::vector<std::vector<const KSet*>> closing;  // edges fully assigned at position i
    std::vector<int> pattern_degree;                // per pattern vertex
};

// Most-constrained-first ordering: start from the max-degree vertex (or a
// forced seed) and repeatedly take the vertex that closes the most edges.
inline PatternOrder make_pattern_order(const Hypergraph& pattern,
                                       const std::vector<int>* seed = nullptr) {
    const int pn = pattern.n();
    PatternOrder po;
    po.pattern_degree.assign(static_cast<std::size_t>(pn), 0);
    for (const auto& e : pattern.edges())
        for (Vertex v : e) ++po.pattern_degree[static_cast<std::size_t>(v)];

    std::vector<char> chosen(static_cast<std::size_t>(pn), 0);
    if (seed) {
        for (int v : *seed) {
            po.order.push_back(v);
            chosen[static_cast<std::size_t>(v)] = 1;
        }
    }
    while (static_cast<int>(po.order.size()) < pn) {
        int best = -1, best_closed = -1, best_deg = -1;
        for (int v = 0; v < pn; ++v) {
            if (chosen[static_cast<std::size_t>(v)]) continue;
            int closed = 0;
            for (const auto& e : pattern.edges()) {
                if (!e.contains(v)) continue;
                bool all = true;
                for (Vertex u : e)
                    if (u != v && !chosen[static_cast<std::size_t>(u)]) {
                        all = false;
                        break;
                    }
                if (all) ++closed;
            }
            int deg = po.pattern_degree[static_cast<std::size_t>(v)];
            if (closed > best_closed || (closed == best_closed && deg > best_deg)) {
                best = v;
                best_closed = closed;
                best_deg = deg;
            }
        }
        po.order.push_back(best);
        chosen[static_cast<std::size_t>(best)] = 1;
    }

    std::vector<int> rank(static_cast<std::size_t>(pn), 0);
    for (int i = 0; i < pn; ++i)
        rank[static_cast<std::size_t>(po.order[static_cast<std::size_t>(i)])] = i;
    po.closing.assign(static_cast<std::size_t>(pn), {});
    for (const auto& e : pattern.edges()) {
        int last = 0;
        for (Vertex v : e) last = std::max(last, rank[static_cast<std::size_t>(v)]);
        po.closing[static_cast<std::size_t>(last)].push_back(&e);
    }
    return po;
}

template <typename EdgePred>
class EmbedDfs {
public:
    using Emit = std::function<bool(const std::vector<Vertex>&)>;

    EmbedDfs(int host_n, const PatternOrder& po, const EdgePred& pred, BudgetTracker& bt,
             const std::vector<int>* host_degree = nullptr)
        : host_n_(host_n), po_(po), pred_(pred), bt_(bt),
          host_degree_(host_degree),
          assign_(po.pattern_degree.size(), -1),
          used_(static_cast<std::size_t>(host_n), 0) {}

    // Assigns po.order[pos..] by DFS; first-position candidates restricted
    // to [lo, hi). Returns false when aborted by the budget tracker.
    bool run(std::size_t pos, int lo, int hi, const Emit& emit) {
        emit_ = &emit;
        start_pos_ = pos;
        first_lo_ = lo;
        first_hi_ = hi;
        done_ = false;
        dfs(pos);
        return !aborted_;
    }

    bool aborted() const { return aborted_; }

    void preassign(int pattern_vertex, Vertex host_vertex) {
        assign_[static_cast<std::size_t>(pattern_vertex)] = host_vertex;
        used_[static_cast<std::size_t>(host_vertex)] = 1;
    }
    void clear_preassign(int pattern_vertex, Vertex host_vertex) {
        assign_[static_cast<std::size_t>(pattern_vertex)] = -1;
        used_[static_cast<std::size_t>(host_vertex)] = 0;
    }

private:
    bool closing_ok(std::size_t pos) const {
        for (const KSet* e : po_.closing[pos]) {
            std::vector<Vertex> img;
            img.reserve(e->size());
            for (Vertex v : *e) img.push_back(assign_[static_cast<std::size_t>(v)]);
            if (!pred_(KSet::of(std::move(img)))) return false;
        }
        return true;
    }

    void dfs(std::size_t pos) {
        if (pos == po_.order.size()) {
            if (!(*emit_)(assign_)) done_ = true;
            return;
        }
        int pv = po_.order[pos];
        int lo = (pos == start_pos_) ? first_lo_ : 0;
        int hi = (pos == start_pos_) ? first_hi_ : host_n_;
        for (int h = lo; h < hi; ++h) {
            if (used_[static_cast<std::size_t>(h)]) continue;
            if (host_degree_ &&
                (*host_degree_)[static_cast<std::size_t>(h)] <
                    po_.pattern_degree[static_cast<std::size_t>(pv)])
                continue;
            if (!bt_.tick()) {
                aborted_ = true;
                return;
            }
            assign_[static_cast<std::size_t>(pv)] = h;
            used_[static_cast<std::size_t>(h)] = 1;
            if (closing_ok(pos)) dfs(pos + 1);
            assign_[static_cast<std::size_t>(pv)] = -1;
            used_[static_cast<std::size_t>(h)] = 0;
            if (done_ || aborted_) return;
        }
    }

    int host_n_;
    const PatternOrder& po_;
    const EdgePred& pred_;
    BudgetTracker& bt_;
    const std::vector<int>* host_degree_;
    std::vector<Vertex> assign_;
    std::vector<char> used_;
    const Emit* emit_ = nullptr;
    std::size_t start_pos_ = 0;
    int first_lo_ = 0, first_hi_ = 0;
    bool aborted_ = false;
    bool done_ = false;
};

}  // namespace detail

/// Injective edge-preserving embedding of the pattern into the host, or an
/// exhaustive refutation. Pattern vertices are assigned most-constrained
/// first; host candidates are filtered by vertex degree.
inline EmbeddingSearchResult contains_pattern(const Hypergraph& host,
                                              const Hypergraph& pattern,
                                              const SearchBudget& budget = {}) {
    if (host.k() != pattern.k())
        throw UniformityMismatch("contains_pattern: host and pattern uniformities differ");
    EmbeddingSearchResult out;
    if (pattern.n() > host.n()) return out;

    detail::BudgetTracker bt(budget);
    detail::PatternOrder po = detail::make_pattern_order(pattern);
    std::vector<int> host_deg(static_cast<std::size_t>(host.n()), 0);
    for (const auto& e : host.edges())
        for (Vertex v : e) ++host_deg[static_cast<std::size_t>(v)];
    auto pred = [&host](const KSet& e) { return host.has_edge(e); };

    std::optional<std::vector<Vertex>> found;
    if (pattern.n() == 0) {
        found = std::vector<Vertex>{};
    } else {
        auto worker = [&](int index, std::size_t lo, std::size_t hi,
                          std::atomic<int>& winner) -> std::optional<std::vector<Vertex>> {
            (void)index;
            (void)winner;
            std::optional<std::vector<Vertex>> res;
            detail::EmbedDfs<decltype(pred)> dfs(host.n(), po, pred, bt, &host_deg);
            detail::EmbedDfs<decltype(pred)>::Emit emit =
                [&](const std::vector<Vertex>& map) {
                    res = map;
                    return false;
                };
            dfs.run(0, static_cast<int>(lo), static_cast<int>(hi), emit);
            return res;
        };
        found = detail::run_partitioned<std::vector<Vertex>>(
            static_cast<std::size_t>(host.n()), budget.jobs, bt, budget.deterministic,
            worker);
    }
    out.nodes_expanded = bt.nodes();
    if (found) {
        out.status = SearchStatus::found;
        out.embedding = Embedding{pattern, host, std::move(*found)};
    } else if (bt.exhausted()) {
        out.status = SearchStatus::budget_exhausted;
    } else {
        out.status = SearchStatus::not_found;
    }
    return out;
}

/// Greedy chain growth from `start`: each step picks the lexicographically
/// least (k-1)-set inside N(previous block) avoiding every used and
/// forbidden vertex. Deterministic. On failure reports the 1-based index
/// of the first block that could not be picked.
inline BackChainResult greedy_back_chain(const Hypergraph& host, const KSet& start,
                                         int length,
                                         const std::vector<Vertex>& forbidden = {}) {
    if (length < 1) throw LengthTooSmall("greedy_back_chain: length >= 1 required");
    if (static_cast<int>(start.size()) != host.k() - 1)
        throw WrongSetSize("greedy_back_chain: start must be a (k-1)-set");
    if (!start.max_vertex_below(host.n()))
        throw OutOfRangeVertex("greedy_back_chain: start vertex out of range");
    for (Vertex v : forbidden)
        if (start.contains(v))
            throw InvalidParameter("greedy_back_chain: start intersects forbidden set");

    std::vector<char> used(static_cast<std::size_t>(host.n()), 0);
    for (Vertex v : forbidden)
        if (v >= 0 && v < host.n()) used[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : start) used[static_cast<std::size_t>(v)] = 1;

    BackChainResult out;
    out.chain.push_back(start);
    const int bk = host.k() - 1;
    for (int i = 2; i <= length; ++i) {
        std::vector<Vertex> pool;
        const KSet& last = out.chain.back();
        for (Vertex v = 0; v < host.n(); ++v)
            if (!used[static_cast<std::size_t>(v)] && !last.contains(v) &&
                host.has_extension(last, v))
                pool.push_back(v);
        if (static_cast<int>(pool.size()) < bk) {
            out.stuck_at = i;
            return out;
        }
        KSet block = KSet::from_sorted(std::vector<Vertex>(pool.begin(), pool.begin() + bk));
        for (Vertex v : block) used[static_cast<std::size_t>(v)] = 1;
        out.chain.push_back(std::move(block));
    }
    return out;
}

namespace detail {

inline SearchBudget unbounded_budget() {
    SearchBudget b;
    b.node_limit = std::numeric_limits<std::uint64_t>::max();
    b.time_limit_seconds = 1e18;
    return b;
}

// Embeddings of `pattern` whose edge image contains `anchor`, over an
// arbitrary edge-membership predicate (the anchor is assumed present).
// Each embedding is counted exactly once: by injectivity the pattern edge
// mapped onto the anchor is unique, as is the restriction bijection.
template <typename EdgePred>
std::uint64_t count_embeddings_using_edge_impl(int host_n, const Hypergraph& pattern,
                                               const KSet& anchor, EdgePred&& pred,
                                               std::uint64_t cap) {
    if (cap == 0 || pattern.n() > host_n) return 0;
    std::uint64_t total = 0;
    BudgetTracker bt(unbounded_budget());
    std::vector<Vertex> anchor_verts(anchor.begin(), anchor.end());
    for (const auto& pe : pattern.edges()) {
        std::vector<int> seed(pe.begin(), pe.end());
        PatternOrder po = make_pattern_order(pattern, &seed);
        std::vector<Vertex> perm = anchor_verts;  // already sorted
        do {
            EmbedDfs<std::decay_t<EdgePred>> dfs(host_n, po, pred, bt);
            for (std::size_t i = 0; i < seed.size(); ++i)
                dfs.preassign(seed[i], perm[i]);
            typename EmbedDfs<std::decay_t<EdgePred>>::Emit emit =
                [&](const std::vector<Vertex>&) {
                    ++total;
                    return total < cap;
                };
            dfs.run(seed.size(), 0, host_n, emit);
            for (std::size_t i = 0; i < seed.size(); ++i)
                dfs.clear_preassign(seed[i], perm[i]);
            if (total >= cap) return total;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return total;
}

template <typename EdgePred>
std::uint64_t count_embeddings_impl(int host_n, const Hypergraph& pattern,
                                    EdgePred&& pred, std::uint64_t cap) {
    if (cap == 0 || pattern.n() > host_n) return 0;
    PatternOrder po = make_pattern_order(pattern);
    BudgetTracker bt(unbounded_budget());
    std::uint64_t total = 0;
    EmbedDfs<std::decay_t<EdgePred>> dfs(host_n, po, pred, bt);
    typename EmbedDfs<std::decay_t<EdgePred>>::Emit emit = [&](const std::vector<Vertex>&) {
        ++total;
        return total < cap;
    };
    dfs.run(0, 0, host_n, emit);
    return total;
}

}  // namespace detail

/// Number of injective embeddings of `pattern` into `host` whose edge image
/// includes `anchor`; counting stops at `cap`.
inline std::uint64_t count_embeddings_using_edge(const Hypergraph& host,
                                                 const Hypergraph& pattern,
                                                 const KSet& anchor,
                                                 std::uint64_t cap = UINT64_MAX) {
    if (host.k() != pattern.k())
        throw UniformityMismatch("count_embeddings_using_edge: uniformity mismatch");
    auto pred = [&host](const KSet& e) { return host.has_edge(e); };
    return detail::count_embeddings_using_edge_impl(host.n(), pattern, anchor, pred, cap);
}

/// Total number of injective embeddings of `pattern` into `host`.
inline std::uint64_t count_embeddings(const Hypergraph& host, const Hypergraph& pattern,
                                      std::uint64_t cap = UINT64_MAX) {
    if (host.k() != pattern.k())
        throw UniformityMismatch("count_embeddings: uniformity mismatch");
    auto pred = [&host](const KSet& e) { return host.has_edge(e); };
    return detail::count_embeddings_impl(host.n(), pattern, pred, cap);
}

}  // namespace zyclone
