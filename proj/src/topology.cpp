#include "fracsq/topology.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace fracsq {

bool full_edge_tree(const DigitSet& d, int k, std::uint64_t max_cells) {
    CellGraph g = exact_cell_graph(d, k, max_cells);
    std::size_t full_edges = 0;
    for (const CellGraph::Edge& e : g.edges)
        if (e.kind == EdgeKind::FullEdge) ++full_edges;
    return g.component_count(true) == 1 && full_edges + 1 == g.vertices.size();
}

namespace {

// Maximum-cardinality search; the reversed visit order is a perfect
// elimination order exactly when the graph is chordal.
bool is_chordal(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 0) return true;
    std::vector<int> weight(n, 0), visit_order;
    std::vector<bool> visited(n, false);
    std::vector<std::vector<int>> buckets(n + 1);
    std::vector<int> bucket_of(n, 0);
    for (int v = 0; v < n; ++v) buckets[0].push_back(v);
    int max_bucket = 0;
    visit_order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int v = -1;
        while (true) {
            while (max_bucket > 0 && buckets[max_bucket].empty()) --max_bucket;
            std::vector<int>& b = buckets[max_bucket];
            while (!b.empty() && (visited[b.back()] || bucket_of[b.back()] != max_bucket))
                b.pop_back();
            if (!b.empty()) {
                v = b.back();
                b.pop_back();
                break;
            }
            if (max_bucket == 0) break;
        }
        if (v == -1) {  // only stale entries left in bucket 0
            for (int u = 0; u < n; ++u)
                if (!visited[u]) {
                    v = u;
                    break;
                }
        }
        visited[v] = true;
        visit_order.push_back(v);
        for (int w : adj[v])
            if (!visited[w]) {
                bucket_of[w] = ++weight[w];
                buckets[weight[w]].push_back(w);
                max_bucket = std::max(max_bucket, weight[w]);
            }
    }
    // Elimination order is the reverse of the visit order.
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[visit_order[i]] = n - 1 - i;
    std::vector<std::vector<int>> sorted_adj(n);
    for (int v = 0; v < n; ++v) {
        sorted_adj[v] = adj[v];
        std::sort(sorted_adj[v].begin(), sorted_adj[v].end());
    }
    auto adjacent = [&](int a, int b) {
        return std::binary_search(sorted_adj[a].begin(), sorted_adj[a].end(), b);
    };
    for (int v = 0; v < n; ++v) {
        int parent = -1;
        for (int u : adj[v])
            if (pos[u] > pos[v] && (parent == -1 || pos[u] < pos[parent])) parent = u;
        if (parent == -1) continue;
        for (int u : adj[v])
            if (u != parent && pos[u] > pos[v] && !adjacent(parent, u)) return false;
    }
    return true;
}

}  // namespace

std::optional<int> first_cycle_level(const DigitSet& d, int kmax, std::uint64_t max_cells) {
    for (int k = 1; k <= kmax; ++k) {
        CellGraph g = exact_cell_graph(d, k, max_cells);
        if (!is_chordal(g.adjacency())) return k;
    }
    return std::nullopt;
}

int delete_cylinder_components(const DigitSet& d, const std::vector<int>& prefix, int k,
                               DigitOrder order, std::uint64_t max_cells) {
    if (k < static_cast<int>(prefix.size()) + 1)
        throw std::invalid_argument("delete_cylinder_components: need k >= |prefix| + 1");
    CellGraph g = exact_cell_graph(d, k, max_cells);
    std::vector<Cell> removed = cylinder_cells(d, prefix, k, order, max_cells);
    std::vector<bool> alive(g.vertices.size(), true);
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        if (std::binary_search(removed.begin(), removed.end(), g.vertices[i])) alive[i] = false;
    std::vector<std::vector<int>> adj = g.adjacency();
    std::vector<bool> seen(g.vertices.size(), false);
    int components = 0;
    for (std::size_t start = 0; start < g.vertices.size(); ++start) {
        if (!alive[start] || seen[start]) continue;
        ++components;
        std::queue<int> q;
        q.push(static_cast<int>(start));
        seen[start] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (alive[w] && !seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
    }
    return components;
}

namespace {

void validate_coding(const Coding& coding, int m) {
    if (coding.per.empty()) throw std::invalid_argument("coding: empty period");
    for (int s : coding.pre)
        if (s < 1 || s > m) throw std::invalid_argument("coding: symbol out of range");
    for (int s : coding.per)
        if (s < 1 || s > m) throw std::invalid_argument("coding: symbol out of range");
}

}  // namespace

Vec2 coding_point(const DigitSet& d, const Coding& coding, DigitOrder order) {
    validate_coding(coding, d.size());
    std::vector<Cell> digits = ordered_digits(d, order);
    long long n = d.n();
    // Value of the purely periodic tail: q = word / (n^L - 1).
    long long wx = 0, wy = 0, pow_l = 1;
    for (int s : coding.per) {
        wx = wx * n + digits[s - 1].x;
        wy = wy * n + digits[s - 1].y;
        pow_l *= n;
    }
    Vec2 q{Rat(wx, pow_l - 1), Rat(wy, pow_l - 1)};
    long long px = 0, py = 0, pow_p = 1;
    for (int s : coding.pre) {
        px = px * n + digits[s - 1].x;
        py = py * n + digits[s - 1].y;
        pow_p *= n;
    }
    return {(q.x + Rat(px)) / Rat(pow_p), (q.y + Rat(py)) / Rat(pow_p)};
}

CodingAnalysis analyze_coding(const DigitSet& d, const Coding& coding, DigitOrder order,
                              int prefix_depth) {
    CodingAnalysis out;
    out.point = coding_point(d, coding, order);
    std::vector<Cell> digits = ordered_digits(d, order);
    Rat n(d.n());
    Rat one(1);

    // Position automaton: state r in [0,1]^2, one edge per digit s with
    // n*r - d_s still inside the unit square.
    std::map<Vec2, int> id_of;
    std::vector<Vec2> states;
    std::vector<std::vector<int>> succ;
    auto intern = [&](const Vec2& r) {
        auto it = id_of.find(r);
        if (it != id_of.end()) return it->second;
        int id = static_cast<int>(states.size());
        id_of.emplace(r, id);
        states.push_back(r);
        succ.emplace_back();
        return id;
    };
    int start = intern(out.point);
    for (int v = 0; v < static_cast<int>(states.size()); ++v) {
        if (states.size() > 100000) throw std::logic_error("coding automaton did not stay finite");
        for (const Cell& digit : digits) {
            Vec2 r{n * states[v].x - Rat(digit.x), n * states[v].y - Rat(digit.y)};
            if (r.x < Rat(0) || r.x > one || r.y < Rat(0) || r.y > one) continue;
            int w = intern(r);  // may grow the state tables
            succ[v].push_back(w);
        }
    }
    // Keep only states with an infinite continuation.
    std::vector<bool> alive(states.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < states.size(); ++v) {
            if (!alive[v]) continue;
            bool any = false;
            for (int w : succ[v]) any = any || alive[w];
            if (!any) {
                alive[v] = false;
                changed = true;
            }
        }
    }
    if (!alive[start]) throw std::logic_error("coded point lost its own coding");

    std::vector<std::vector<int>> live(states.size());
    for (std::size_t v = 0; v < states.size(); ++v) {
        if (!alive[v]) continue;
        for (int w : succ[v])
            if (alive[w]) live[v].push_back(w);
    }

    // Count infinite paths: states on a cycle must continue deterministically,
    // so they contribute one path; the rest is a DAG sum. The state count is
    // tiny, so cycle membership is checked by plain reachability.
    std::vector<bool> on_cycle(states.size(), false);
    for (std::size_t v = 0; v < states.size(); ++v) {
        if (!alive[v]) continue;
        std::vector<bool> seen(states.size(), false);
        std::queue<int> q;
        for (int w : live[v])
            if (!seen[w]) {
                seen[w] = true;
                q.push(w);
            }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : live[u])
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        on_cycle[v] = seen[v];
    }
    for (std::size_t v = 0; v < states.size(); ++v)
        if (on_cycle[v] && live[v].size() != 1)
            throw std::logic_error("branching cycle: infinitely many codings");

    std::vector<int> mark(states.size(), 0);
    std::vector<std::uint64_t> paths(states.size(), 0);
    auto count = [&](auto&& self, int v) -> std::uint64_t {
        if (on_cycle[v]) return 1;
        if (mark[v] == 2) return paths[v];
        if (mark[v] == 1) throw std::logic_error("unexpected cycle in coding DAG");
        mark[v] = 1;
        std::uint64_t total = 0;
        for (int w : live[v]) total += self(self, w);
        paths[v] = total;
        mark[v] = 2;
        return total;
    };
    out.multiplicity = count(count, start);

    for (int s = 1; s <= d.size(); ++s) {
        Vec2 fixed{Rat(digits[s - 1].x, d.n() - 1), Rat(digits[s - 1].y, d.n() - 1)};
        auto it = id_of.find(fixed);
        if (it != id_of.end() && alive[it->second]) out.tail_symbols.push_back(s);
    }

    std::vector<std::uint64_t> weight(states.size(), 0);
    weight[start] = 1;
    for (int k = 1; k <= prefix_depth; ++k) {
        std::vector<std::uint64_t> next(states.size(), 0);
        std::uint64_t total = 0;
        for (std::size_t v = 0; v < states.size(); ++v) {
            if (weight[v] == 0) continue;
            for (int w : live[v]) {
                next[w] += weight[v];
                total += weight[v];
            }
        }
        out.prefix_counts.push_back(total);
        weight = std::move(next);
    }
    return out;
}

DigitSet tee_digit_set() {
    return DigitSet(3, {{0, 0}, {1, 0}, {2, 0}, {1, 1}, {1, 2}});
}

DigitSet quincunx_digit_set() {
    return DigitSet(3, {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
}

int branch_degree_tee(const Coding& coding) {
    static const DigitSet tee = tee_digit_set();
    CodingAnalysis a = analyze_coding(tee, coding, DigitOrder::BottomUp);
    bool has_stem = false, all_stem_base = true;
    for (int s : coding.per) {
        if (s == 2 || s == 4) has_stem = true;
        if (s != 2) all_stem_base = false;
    }
    if (a.multiplicity == 1) {
        if (!has_stem) return 1;
        return all_stem_base ? 3 : 2;
    }
    bool tail2 = std::find(a.tail_symbols.begin(), a.tail_symbols.end(), 2) != a.tail_symbols.end();
    return tail2 ? 4 : 2;
}

int branch_degree_quincunx(const Coding& coding) {
    static const DigitSet quincunx = quincunx_digit_set();
    CodingAnalysis a = analyze_coding(quincunx, coding, DigitOrder::CornersThenCenter);
    if (a.multiplicity == 1) {
        bool center = std::find(coding.per.begin(), coding.per.end(), 5) != coding.per.end();
        return center ? 4 : 1;
    }
    return 2;
}

Fingerprint fingerprint(const DigitSet& d, int depth, DigitOrder order,
                        std::uint64_t max_cells) {
    if (depth < 2) throw std::invalid_argument("fingerprint: need depth >= 2");
    Fingerprint out;
    out.connected = hata_connected(d);
    out.order = order;
    for (int k = 1; k <= depth; ++k)
        if (full_edge_tree(d, k, max_cells)) out.full_edge_tree_up_to = k;
    out.first_cycle_level = first_cycle_level(d, depth, max_cells);
    for (int s = 1; s <= d.size(); ++s) {
        BranchSample sample;
        sample.prefix = {s};
        sample.level = 2;
        sample.components = delete_cylinder_components(d, sample.prefix, 2, order, max_cells);
        out.branch_samples.push_back(sample);
    }
    return out;
}

}  // namespace fracsq
