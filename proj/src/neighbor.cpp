#include "fracsq/neighbor.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace fracsq {

namespace {

int offset_index(int dx, int dy) { return (dy + 1) * 3 + (dx + 1); }

}  // namespace

std::vector<std::pair<int, int>> OffsetSurvivors::offsets() const {
    std::vector<std::pair<int, int>> out;
    for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
            if (alive[offset_index(dx, dy)]) out.emplace_back(dx, dy);
    return out;
}

OffsetSurvivors surviving_offsets(const DigitSet& d) {
    int n = d.n();
    std::array<bool, 9> alive{};
    alive.fill(true);
    // Successor offsets delta' = n*delta + d_j - d_i restricted to {-1,0,1}^2.
    auto successors = [&](int dx, int dy) {
        std::array<bool, 9> succ{};
        for (const Cell& di : d.cells())
            for (const Cell& dj : d.cells()) {
                int sx = n * dx + dj.x - di.x;
                int sy = n * dy + dj.y - di.y;
                if (sx >= -1 && sx <= 1 && sy >= -1 && sy <= 1) succ[offset_index(sx, sy)] = true;
            }
        return succ;
    };
    // Greatest fixed point: drop offsets with no surviving successor.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                int idx = offset_index(dx, dy);
                if (!alive[idx]) continue;
                std::array<bool, 9> succ = successors(dx, dy);
                bool any = false;
                for (int i = 0; i < 9 && !any; ++i) any = succ[i] && alive[i];
                if (!any) {
                    alive[idx] = false;
                    changed = true;
                }
            }
    }
    return OffsetSurvivors{alive};
}

bool pieces_intersect(const OffsetSurvivors& s, Cell u, Cell v) {
    int dx = v.x - u.x, dy = v.y - u.y;
    if (dx < -1 || dx > 1 || dy < -1 || dy > 1) return false;
    return s.survives(dx, dy);
}

bool pieces_intersect(const DigitSet& d, int k, Cell u, Cell v) {
    if (!cell_kept(d, k, u.x, u.y) || !cell_kept(d, k, v.x, v.y))
        throw std::invalid_argument("pieces_intersect: cell not kept at this level");
    return pieces_intersect(surviving_offsets(d), u, v);
}

std::vector<std::pair<int, int>> hata_edges(const DigitSet& d) {
    OffsetSurvivors s = surviving_offsets(d);
    const auto& cells = d.cells();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(cells.size()); ++j)
            if (pieces_intersect(s, cells[i], cells[j])) out.emplace_back(i, j);
    return out;
}

namespace {

std::vector<std::pair<int, int>> bfs_tree(int count, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(count);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(count, false);
    std::vector<std::pair<int, int>> tree;
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                tree.emplace_back(std::min(v, w), std::max(v, w));
                q.push(w);
            }
    }
    return tree;
}

}  // namespace

std::vector<std::pair<int, int>> hata_spanning_tree(const DigitSet& d) {
    return bfs_tree(d.size(), hata_edges(d));
}

bool hata_connected(const DigitSet& d) {
    return static_cast<int>(hata_spanning_tree(d).size()) == d.size() - 1;
}

CellGraph exact_cell_graph(const DigitSet& d, int k, std::uint64_t max_cells) {
    OffsetSurvivors s = surviving_offsets(d);
    CellGraph g;
    g.level = k;
    g.vertices = approximation_cells(d, k, max_cells);
    std::int64_t side = level_side(d.n(), k, max_cells);
    std::unordered_map<std::int64_t, int> index;
    index.reserve(g.vertices.size() * 2);
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
        index[g.vertices[i].y * side + g.vertices[i].x] = i;
    // One offset per unordered pair: east, north, and the two upward diagonals.
    constexpr std::pair<int, int> kHalf[4] = {{1, 0}, {0, 1}, {1, 1}, {-1, 1}};
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) {
        Cell u = g.vertices[i];
        for (auto [dx, dy] : kHalf) {
            if (!s.survives(dx, dy)) continue;
            std::int64_t vx = u.x + dx, vy = u.y + dy;
            if (vx < 0 || vy < 0 || vx >= side || vy >= side) continue;
            auto it = index.find(vy * side + vx);
            if (it == index.end()) continue;
            EdgeKind kind = (dx == 0 || dy == 0) ? EdgeKind::FullEdge : EdgeKind::PointOrPartial;
            g.edges.push_back({std::min(i, it->second), std::max(i, it->second), kind});
        }
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const CellGraph::Edge& a, const CellGraph::Edge& b) {
        return a.a != b.a ? a.a < b.a : a.b < b.b;
    });
    return g;
}

std::vector<std::vector<int>> CellGraph::adjacency(bool full_edges_only) const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (const Edge& e : edges) {
        if (full_edges_only && e.kind != EdgeKind::FullEdge) continue;
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    return adj;
}

int CellGraph::component_count(bool full_edges_only) const {
    std::vector<std::vector<int>> adj = adjacency(full_edges_only);
    std::vector<bool> seen(vertices.size(), false);
    int components = 0;
    for (int start = 0; start < static_cast<int>(vertices.size()); ++start) {
        if (seen[start]) continue;
        ++components;
        std::queue<int> q;
        q.push(start);
        seen[start] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
    }
    return components;
}

bool approx_connected(const DigitSet& d, int k, std::uint64_t max_cells) {
    Approximation a = approximation(d, k, max_cells);
    std::int64_t side = a.kept.side();
    Bitmap seen(side);
    std::vector<Cell> cells = approximation_cells(d, k, max_cells);
    if (cells.empty()) return true;
    std::queue<Cell> q;
    q.push(cells.front());
    seen.set(cells.front().x, cells.front().y);
    std::uint64_t visited = 1;
    while (!q.empty()) {
        Cell c = q.front();
        q.pop();
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                if (dx == 0 && dy == 0) continue;
                std::int64_t x = c.x + dx, y = c.y + dy;
                if (x < 0 || y < 0 || x >= side || y >= side) continue;
                if (!a.kept.get(x, y) || seen.get(x, y)) continue;
                seen.set(x, y);
                ++visited;
                q.push({static_cast<int>(x), static_cast<int>(y)});
            }
    }
    return visited == a.kept.count();
}

}  // namespace fracsq
