#include "spc/solve.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <memory>
#include <queue>
#include <random>
#include <sstream>

namespace spc {

namespace {

// Walk-based necessary condition for the strong property: states are
// (vertex, colors of the last two steps). If no valid walk from u reaches v,
// no valid path does either; the converse does not hold.
std::vector<char> strong_walk_reachable(const Graph& g, const EdgeColoring& c, int u) {
    int n = g.vertex_count();
    int k = std::max(1, c.max_color_used());
    auto idx = [&](int v, int c1, int c2) { return (v * (k + 1) + c1) * (k + 1) + c2; };
    std::vector<char> state_seen(static_cast<size_t>(n) * (k + 1) * (k + 1), 0);
    std::vector<char> vertex_seen(n, 0);
    std::vector<int> stack;
    stack.push_back(idx(u, 0, 0));
    state_seen[stack.back()] = 1;
    vertex_seen[u] = 1;
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        int c2 = s % (k + 1);
        int c1 = s / (k + 1) % (k + 1);
        int v = s / ((k + 1) * (k + 1));
        for (const auto& a : g.neighbors(v)) {
            int col = c.color[a.edge];
            if (col == c1 || col == c2) continue;
            int ns = idx(a.to, c2, col);
            if (!state_seen[ns]) {
                state_seen[ns] = 1;
                vertex_seen[a.to] = 1;
                stack.push_back(ns);
            }
        }
    }
    return vertex_seen;
}

struct StrongValidator {
    bool operator()(const ColorSequence& s) const {
        size_t n = s.size();
        if (n >= 2 && s[n - 1] == s[n - 2]) return false;
        if (n >= 3 && s[n - 1] == s[n - 3]) return false;
        return true;
    }
};

// DFS over valid simple paths from `source`, recording the first path found
// to every wanted target. Prefix pruning is sound because honest properties
// are block-closed.
template <class ValidAppend>
class ReachSearch {
public:
    ReachSearch(const Graph& g, const EdgeColoring& c, ValidAppend valid)
        : g_(g), c_(c), valid_(std::move(valid)) {}

    // want[v] marks targets; found paths land in paths[v] (empty = unreached).
    void run(int source, const std::vector<char>& want,
             std::vector<std::vector<int>>* paths) {
        int n = g_.vertex_count();
        on_path_.assign(n, 0);
        unfound_ = 0;
        for (int v = 0; v < n; ++v)
            if (want[v]) ++unfound_;
        want_ = &want;
        paths_ = paths;
        if (paths_) paths_->assign(n, {});
        reached_.assign(n, 0);
        if (unfound_ == 0) return;
        path_ = {source};
        colors_.clear();
        on_path_[source] = 1;
        extend(source);
    }

    // After run(): which wanted targets were reached.
    const std::vector<char>& reached() const { return reached_; }

private:
    void extend(int u) {
        for (const auto& a : g_.neighbors(u)) {
            if (unfound_ == 0) return;
            if (on_path_[a.to]) continue;
            colors_.push_back(c_.color[a.edge]);
            if (!valid_(colors_)) {
                colors_.pop_back();
                continue;
            }
            path_.push_back(a.to);
            on_path_[a.to] = 1;
            if ((*want_)[a.to] && !reached_[a.to]) {
                reached_[a.to] = 1;
                if (paths_) (*paths_)[a.to] = path_;
                --unfound_;
            }
            if (unfound_ > 0) extend(a.to);
            on_path_[a.to] = 0;
            path_.pop_back();
            colors_.pop_back();
        }
    }

    const Graph& g_;
    const EdgeColoring& c_;
    ValidAppend valid_;
    const std::vector<char>* want_ = nullptr;
    std::vector<std::vector<int>>* paths_ = nullptr;
    std::vector<char> on_path_, reached_;
    std::vector<int> path_;
    ColorSequence colors_;
    int unfound_ = 0;
};

bool is_strong_property(const SequenceProperty& p) { return p.name == "strong"; }

// Reachability by valid simple paths from `source` to all targets marked in
// `want`, with the strong-property walk pre-filter applied first.
std::vector<char> reach_valid(const Graph& g, const EdgeColoring& c,
                              const SequenceProperty& p, int source, std::vector<char> want,
                              std::vector<std::vector<int>>* paths) {
    std::vector<char> prefiltered_out(g.vertex_count(), 0);
    if (is_strong_property(p)) {
        auto walk = strong_walk_reachable(g, c, source);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (want[v] && !walk[v]) {
                want[v] = 0;  // definitely unreachable
                prefiltered_out[v] = 1;
            }
    }
    std::vector<char> reached;
    if (is_strong_property(p)) {
        ReachSearch<StrongValidator> rs(g, c, StrongValidator{});
        rs.run(source, want, paths);
        reached = rs.reached();
    } else {
        ReachSearch<std::function<bool(const ColorSequence&)>> rs(g, c, p.valid_after_append);
        rs.run(source, want, paths);
        reached = rs.reached();
    }
    if (paths && paths->empty()) paths->assign(g.vertex_count(), {});
    return reached;
}

}  // namespace

std::optional<std::vector<int>> exists_valid_path(const Graph& g, const EdgeColoring& c,
                                                  int u, int v, const SequenceProperty& p) {
    assert(u != v);
    std::vector<char> want(g.vertex_count(), 0);
    want[v] = 1;
    std::vector<std::vector<int>> paths;
    auto reached = reach_valid(g, c, p, u, want, &paths);
    if (!reached[v]) return std::nullopt;
    return paths[v];
}

VerificationResult verify_connected_coloring(const Graph& g, const EdgeColoring& c,
                                             const SequenceProperty& p) {
    VerificationResult res;
    res.connected = true;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        std::vector<char> want(n, 0);
        for (int v = u + 1; v < n; ++v) want[v] = 1;
        std::vector<std::vector<int>> paths;
        auto reached = reach_valid(g, c, p, u, want, &paths);
        for (int v = u + 1; v < n; ++v) {
            if (reached[v]) {
                WitnessCertificate::Witness w;
                w.u = u;
                w.v = v;
                w.path = paths[v];
                for (size_t i = 0; i + 1 < w.path.size(); ++i)
                    w.colors.push_back(c.color[g.edge_between(w.path[i], w.path[i + 1])]);
                res.witnesses.witnesses.push_back(std::move(w));
            } else {
                res.connected = false;
                res.failing_pairs.emplace_back(u, v);
            }
        }
    }
    return res;
}

bool verify_witness_set(const Graph& g, const EdgeColoring& c, const WitnessCertificate& w,
                        const SequenceProperty& p, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (size_t i = 0; i < w.witnesses.size(); ++i) {
        const auto& wit = w.witnesses[i];
        std::ostringstream loc;
        loc << "witness " << i << " (" << wit.u << "," << wit.v << "): ";
        if (wit.path.size() < 2 || wit.path.front() != wit.u || wit.path.back() != wit.v)
            return fail(loc.str() + "path endpoints do not match");
        std::vector<char> seen(g.vertex_count(), 0);
        for (int v : wit.path) {
            if (v < 0 || v >= g.vertex_count() || seen[v])
                return fail(loc.str() + "path not simple");
            seen[v] = 1;
        }
        if (wit.colors.size() + 1 != wit.path.size())
            return fail(loc.str() + "color count mismatch");
        for (size_t j = 0; j + 1 < wit.path.size(); ++j) {
            int e = g.edge_between(wit.path[j], wit.path[j + 1]);
            if (e < 0) return fail(loc.str() + "path uses a non-edge");
            if (c.color[e] != wit.colors[j])
                return fail(loc.str() + "recorded color disagrees with coloring");
        }
        if (!p.is_valid(wit.colors))
            return fail(loc.str() + "color sequence violates property");
    }
    return true;
}

namespace {

// Allocation-free failing-pair counter for the strong property, used inside
// the annealing loop where the generic searcher's per-call setup dominates.
// Reads the current colors through the referenced coloring on every call.
class StrongEnergy {
public:
    StrongEnergy(const Graph& g, const EdgeColoring& c)
        : g_(g),
          c_(c),
          n_(g.vertex_count()),
          k_(std::max(1, c.k)),
          state_seen_(static_cast<size_t>(n_) * (k_ + 1) * (k_ + 1)),
          walk_(n_),
          on_path_(n_),
          reached_(n_) {}

    int failing_pairs() {
        int total = 0;
        for (int u = 0; u + 1 < n_; ++u) total += failing_from(u);
        return total;
    }

private:
    int failing_from(int u) {
        walk_filter(u);
        int unreachable = 0, wanted = 0;
        for (int v = u + 1; v < n_; ++v) {
            if (walk_[v])
                ++wanted;
            else
                ++unreachable;  // no valid walk, hence no valid path
        }
        if (wanted > 0) {
            unfound_ = wanted;
            base_ = u;
            std::fill(on_path_.begin(), on_path_.end(), 0);
            std::fill(reached_.begin(), reached_.end(), 0);
            on_path_[u] = 1;
            dfs(u, 0, 0);
            unreachable += unfound_;
        }
        return unreachable;
    }

    void dfs(int u, int c1, int c2) {
        for (const auto& a : g_.neighbors(u)) {
            if (unfound_ == 0) return;
            int col = c_.color[a.edge];
            if (col == c1 || col == c2 || on_path_[a.to]) continue;
            if (a.to > base_ && walk_[a.to] && !reached_[a.to]) {
                reached_[a.to] = 1;
                if (--unfound_ == 0) return;
            }
            on_path_[a.to] = 1;
            dfs(a.to, c2, col);
            on_path_[a.to] = 0;
        }
    }

    void walk_filter(int u) {
        std::fill(state_seen_.begin(), state_seen_.end(), 0);
        std::fill(walk_.begin(), walk_.end(), 0);
        auto idx = [&](int v, int a, int b) { return (v * (k_ + 1) + a) * (k_ + 1) + b; };
        stack_.clear();
        stack_.push_back(idx(u, 0, 0));
        state_seen_[stack_.back()] = 1;
        walk_[u] = 1;
        while (!stack_.empty()) {
            int s = stack_.back();
            stack_.pop_back();
            int c2 = s % (k_ + 1);
            int c1 = s / (k_ + 1) % (k_ + 1);
            int v = s / ((k_ + 1) * (k_ + 1));
            for (const auto& a : g_.neighbors(v)) {
                int col = c_.color[a.edge];
                if (col == c1 || col == c2) continue;
                int ns = idx(a.to, c2, col);
                if (!state_seen_[ns]) {
                    state_seen_[ns] = 1;
                    walk_[a.to] = 1;
                    stack_.push_back(ns);
                }
            }
        }
    }

    const Graph& g_;
    const EdgeColoring& c_;
    int n_, k_;
    std::vector<char> state_seen_, walk_, on_path_, reached_;
    std::vector<int> stack_;
    int unfound_ = 0, base_ = 0;
};

bool coloring_connects(const Graph& g, const EdgeColoring& c, const SequenceProperty& p) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        std::vector<char> want(n, 0);
        for (int v = u + 1; v < n; ++v) want[v] = 1;
        auto reached = reach_valid(g, c, p, u, want, nullptr);
        for (int v = u + 1; v < n; ++v)
            if (!reached[v]) return false;
    }
    return true;
}

int count_failing_pairs(const Graph& g, const EdgeColoring& c, const SequenceProperty& p) {
    int n = g.vertex_count();
    int failing = 0;
    for (int u = 0; u < n; ++u) {
        std::vector<char> want(n, 0);
        for (int v = u + 1; v < n; ++v) want[v] = 1;
        auto reached = reach_valid(g, c, p, u, want, nullptr);
        for (int v = u + 1; v < n; ++v)
            if (!reached[v]) ++failing;
    }
    return failing;
}

}  // namespace

std::optional<int> exact_connection_number(const Graph& g, const SequenceProperty& p,
                                           int kmax, int edge_cap) {
    int m = g.edge_count();
    if (m > edge_cap)
        throw PreconditionError("exact_connection_number: edge count exceeds the cap");
    if (m == 0) return g.vertex_count() <= 1 ? std::optional<int>(0) : std::nullopt;

    EdgeColoring c;
    c.color.assign(m, 0);
    for (int k = 1; k <= kmax; ++k) {
        c.k = k;
        // Restricted-growth enumeration: first edge color 1, each next color
        // at most one above the running maximum; max color must hit k so the
        // same coloring is never retried at a larger k.
        std::vector<int> stack{1};
        c.color[0] = 1;
        while (!stack.empty()) {
            if (static_cast<int>(stack.size()) == m) {
                int used = *std::max_element(c.color.begin(), c.color.end());
                if (used == k && coloring_connects(g, c, p)) return k;
            } else {
                int prefix_max = 0;
                for (int i = 0; i < static_cast<int>(stack.size()); ++i)
                    prefix_max = std::max(prefix_max, c.color[i]);
                int next_limit = std::min(k, prefix_max + 1);
                stack.push_back(1);
                c.color[stack.size() - 1] = 1;
                if (1 <= next_limit) continue;
            }
            // advance: increment deepest position or backtrack
            while (!stack.empty()) {
                int pos = static_cast<int>(stack.size()) - 1;
                int prefix_max = 0;
                for (int i = 0; i < pos; ++i) prefix_max = std::max(prefix_max, c.color[i]);
                int limit = pos == 0 ? 1 : std::min(k, prefix_max + 1);
                if (c.color[pos] < limit) {
                    ++c.color[pos];
                    stack.back() = c.color[pos];
                    break;
                }
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

std::optional<EdgeColoring> stochastic_search(const Graph& g, const SequenceProperty& p,
                                              int k, std::int64_t budget, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int m = g.edge_count();
    EdgeColoring c;
    c.k = k;
    c.color.resize(m);
    std::uniform_int_distribution<int> pick_color(1, k);
    for (int& col : c.color) col = pick_color(rng);

    std::unique_ptr<StrongEnergy> fast;
    if (is_strong_property(p)) fast = std::make_unique<StrongEnergy>(g, c);
    auto current_energy = [&] {
        return fast ? fast->failing_pairs() : count_failing_pairs(g, c, p);
    };

    int energy = current_energy();
    if (energy == 0 && coloring_connects(g, c, p)) return c;

    // Geometric cooling tuned so the temperature decays a few orders of
    // magnitude over the budget regardless of its size.
    const double t_start = 2.0, t_end = 0.01;
    double t = t_start;
    const double alpha =
        budget > 0 ? std::pow(t_end / t_start, 1.0 / static_cast<double>(budget)) : 1.0;
    std::uniform_int_distribution<int> pick_edge(0, m - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (std::int64_t step = 0; step < budget; ++step) {
        int e = pick_edge(rng);
        int old = c.color[e];
        int next = pick_color(rng);
        if (next == old) next = next % k + 1;
        c.color[e] = next;
        int new_energy = current_energy();
        int delta = new_energy - energy;
        if (delta <= 0 || unit(rng) < std::exp(-delta / t)) {
            energy = new_energy;
            if (energy == 0) {
                if (coloring_connects(g, c, p)) return c;
            }
        } else {
            c.color[e] = old;
        }
        t *= alpha;
    }
    return std::nullopt;
}

}  // namespace spc
