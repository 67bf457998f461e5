#include "fracsq/paths.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace fracsq {

namespace {

// Deterministic neighbor order for all complement searches.
constexpr std::pair<int, int> kSteps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

struct EmptyLabels {
    std::int64_t side = 0;
    std::vector<int> label;  // -1 for kept cells, component id otherwise

    int at(std::int64_t x, std::int64_t y) const {
        return label[static_cast<std::size_t>(y * side + x)];
    }
};

EmptyLabels label_empty(const Approximation& a) {
    EmptyLabels out;
    out.side = a.kept.side();
    out.label.assign(static_cast<std::size_t>(out.side * out.side), -1);
    int next = 0;
    for (std::int64_t y = 0; y < out.side; ++y)
        for (std::int64_t x = 0; x < out.side; ++x) {
            if (a.kept.get(x, y) || out.at(x, y) != -1) continue;
            int id = next++;
            std::queue<std::pair<std::int64_t, std::int64_t>> q;
            q.emplace(x, y);
            out.label[static_cast<std::size_t>(y * out.side + x)] = id;
            while (!q.empty()) {
                auto [cx, cy] = q.front();
                q.pop();
                for (auto [dx, dy] : kSteps) {
                    std::int64_t nx = cx + dx, ny = cy + dy;
                    if (nx < 0 || ny < 0 || nx >= out.side || ny >= out.side) continue;
                    if (a.kept.get(nx, ny) || out.at(nx, ny) != -1) continue;
                    out.label[static_cast<std::size_t>(ny * out.side + nx)] = id;
                    q.emplace(nx, ny);
                }
            }
        }
    for (std::int64_t y = 0; y < out.side; ++y)
        for (std::int64_t x = 0; x < out.side; ++x)
            if (a.kept.get(x, y)) out.label[static_cast<std::size_t>(y * out.side + x)] = -1;
    return out;
}

std::vector<Cell> bfs_path(const EmptyLabels& l, Cell from, Cell to) {
    std::vector<int> parent(static_cast<std::size_t>(l.side * l.side), -2);
    auto idx = [&](std::int64_t x, std::int64_t y) {
        return static_cast<std::size_t>(y * l.side + x);
    };
    std::queue<Cell> q;
    q.push(from);
    parent[idx(from.x, from.y)] = -1;
    while (!q.empty()) {
        Cell c = q.front();
        q.pop();
        if (c == to) break;
        for (auto [dx, dy] : kSteps) {
            std::int64_t nx = c.x + dx, ny = c.y + dy;
            if (nx < 0 || ny < 0 || nx >= l.side || ny >= l.side) continue;
            if (l.at(nx, ny) == -1 || parent[idx(nx, ny)] != -2) continue;
            parent[idx(nx, ny)] = static_cast<int>(idx(c.x, c.y));
            q.push({static_cast<int>(nx), static_cast<int>(ny)});
        }
    }
    std::vector<Cell> path;
    if (parent[idx(to.x, to.y)] == -2) return path;
    std::int64_t cur = static_cast<std::int64_t>(idx(to.x, to.y));
    while (cur != -1) {
        path.push_back({static_cast<int>(cur % l.side), static_cast<int>(cur / l.side)});
        cur = parent[static_cast<std::size_t>(cur)];
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<PathCertificate> vertical_at(const EmptyLabels& l, int k) {
    for (std::int64_t j = 0; j < l.side; ++j) {
        int bottom = l.at(j, 0), top = l.at(j, l.side - 1);
        if (bottom < 0 || bottom != top) continue;
        PathCertificate cert;
        cert.kind = PathKind::Vertical;
        cert.level = k;
        cert.anchor = static_cast<int>(j);
        cert.chain =
            bfs_path(l, {static_cast<int>(j), 0}, {static_cast<int>(j), static_cast<int>(l.side - 1)});
        return cert;
    }
    return std::nullopt;
}

std::optional<PathCertificate> horizontal_at(const EmptyLabels& l, int k) {
    for (std::int64_t r = 0; r < l.side; ++r) {
        int west = l.at(0, r), east = l.at(l.side - 1, r);
        if (west < 0 || west != east) continue;
        PathCertificate cert;
        cert.kind = PathKind::Horizontal;
        cert.level = k;
        cert.anchor = static_cast<int>(r);
        cert.chain =
            bfs_path(l, {0, static_cast<int>(r)}, {static_cast<int>(l.side - 1), static_cast<int>(r)});
        return cert;
    }
    return std::nullopt;
}

std::optional<PathCertificate> lambda_at(const EmptyLabels& l, int k) {
    int top = static_cast<int>(l.side - 1);
    const Cell corners[4] = {{0, 0}, {top, 0}, {0, top}, {top, top}};
    std::map<int, std::vector<Cell>> by_label;
    for (const Cell& c : corners) {
        int id = l.at(c.x, c.y);
        if (id >= 0) by_label[id].push_back(c);
    }
    for (const auto& [id, group] : by_label) {
        if (group.size() < 3) continue;
        std::vector<Cell> chain = bfs_path(l, group[0], group[1]);
        std::vector<Cell> tail = bfs_path(l, group[1], group[2]);
        chain.insert(chain.end(), tail.begin() + 1, tail.end());
        PathCertificate cert;
        cert.kind = PathKind::Lambda;
        cert.level = k;
        cert.anchor = -1;
        cert.chain = std::move(chain);
        return cert;
    }
    return std::nullopt;
}

}  // namespace

std::optional<PathCertificate> complement_path(const DigitSet& d, PathKind kind, int kmax,
                                               std::uint64_t max_cells) {
    if (kind != PathKind::Vertical && kind != PathKind::Horizontal)
        throw std::invalid_argument("complement_path: kind must be vertical or horizontal");
    for (int k = 1; k <= kmax; ++k) {
        EmptyLabels l = label_empty(approximation(d, k, max_cells));
        std::optional<PathCertificate> cert =
            kind == PathKind::Vertical ? vertical_at(l, k) : horizontal_at(l, k);
        if (cert) return cert;
    }
    return std::nullopt;
}

std::optional<std::pair<PathCertificate, PathCertificate>> cross_path(const DigitSet& d, int kmax,
                                                                      std::uint64_t max_cells) {
    std::optional<PathCertificate> v = complement_path(d, PathKind::Vertical, kmax, max_cells);
    if (!v) return std::nullopt;
    std::optional<PathCertificate> h = complement_path(d, PathKind::Horizontal, kmax, max_cells);
    if (!h) return std::nullopt;
    return std::make_pair(*v, *h);
}

std::optional<PathCertificate> lambda_path(const DigitSet& d, int kmax, std::uint64_t max_cells) {
    for (int k = 1; k <= kmax; ++k) {
        EmptyLabels l = label_empty(approximation(d, k, max_cells));
        if (std::optional<PathCertificate> cert = lambda_at(l, k)) return cert;
    }
    return std::nullopt;
}

bool validate_certificate(const DigitSet& d, const PathCertificate& cert,
                          std::uint64_t max_cells) {
    std::int64_t side = level_side(d.n(), cert.level, max_cells);
    if (cert.chain.empty()) return false;
    for (const Cell& c : cert.chain) {
        if (c.x < 0 || c.y < 0 || c.x >= side || c.y >= side) return false;
        if (cell_kept(d, cert.level, c.x, c.y)) return false;
    }
    for (std::size_t i = 1; i < cert.chain.size(); ++i) {
        int dx = std::abs(cert.chain[i].x - cert.chain[i - 1].x);
        int dy = std::abs(cert.chain[i].y - cert.chain[i - 1].y);
        if (dx + dy != 1) return false;
    }
    int top = static_cast<int>(side - 1);
    switch (cert.kind) {
        case PathKind::Vertical:
            return cert.chain.front() == Cell{cert.anchor, 0} &&
                   cert.chain.back() == Cell{cert.anchor, top};
        case PathKind::Horizontal:
            return cert.chain.front() == Cell{0, cert.anchor} &&
                   cert.chain.back() == Cell{top, cert.anchor};
        case PathKind::Lambda: {
            const Cell corners[4] = {{0, 0}, {top, 0}, {0, top}, {top, top}};
            int hit = 0;
            for (const Cell& corner : corners)
                if (std::find(cert.chain.begin(), cert.chain.end(), corner) != cert.chain.end())
                    ++hit;
            return hit >= 3;
        }
        case PathKind::Cross:
            return false;  // crosses are represented as a pair of certificates
    }
    return false;
}

std::vector<LineCertificate> full_lines(const DigitSet& d) {
    int n = d.n();
    std::vector<LineCertificate> out;
    for (int c = 0; c < n; ++c) {
        bool full = true;
        for (int y = 0; y < n && full; ++y) full = d.contains({c, y});
        if (full) out.push_back({LineCertificate::Kind::Column, c});
    }
    for (int r = 0; r < n; ++r) {
        bool full = true;
        for (int x = 0; x < n && full; ++x) full = d.contains({x, r});
        if (full) out.push_back({LineCertificate::Kind::Row, r});
    }
    bool diag = true, anti = true;
    for (int i = 0; i < n; ++i) {
        diag = diag && d.contains({i, i});
        anti = anti && d.contains({i, n - 1 - i});
    }
    if (diag) out.push_back({LineCertificate::Kind::MainDiag, 0});
    if (anti) out.push_back({LineCertificate::Kind::AntiDiag, 0});
    return out;
}

BoundaryCover boundary_line_cover(const DigitSet& d, bool vertical) {
    int n = d.n();
    // States are subsets of {left, right}; bit 1 = left, bit 2 = right.
    auto step = [&](int state, int j) {
        int next = 0;
        bool left_ok = vertical ? d.contains({n - 1, j}) : d.contains({j, n - 1});
        bool right_ok = vertical ? d.contains({0, j}) : d.contains({j, 0});
        if ((state & 1) && left_ok) next |= 1;
        if ((state & 2) && right_ok) next |= 2;
        return next;
    };
    auto covered = [&](int start) {
        bool reach[4] = {false, false, false, false};
        std::queue<int> q;
        q.push(start);
        reach[start] = true;
        while (!q.empty()) {
            int s = q.front();
            q.pop();
            for (int j = 0; j < n; ++j) {
                int t = step(s, j);
                if (!reach[t]) {
                    reach[t] = true;
                    q.push(t);
                }
            }
        }
        return !reach[0];
    };
    return {covered(1), covered(2), covered(3)};
}

const char* type_label(FsType t) {
    switch (t) {
        case FsType::TotallyDisconnected: return "I";
        case FsType::Connected: return "II";
        case FsType::ParallelSegments: return "III";
        case FsType::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

TypeDecision classify_type(const DigitSet& d, int kmax, std::uint64_t max_cells) {
    if (kmax < 1) throw std::invalid_argument("classify_type: need kmax >= 1");
    TypeDecision out;
    out.scan_depth = kmax;
    out.lines = full_lines(d);
    out.connected = hata_connected(d);
    if (out.connected && d.size() >= 2) {
        out.type = FsType::Connected;
        out.hata_tree = hata_spanning_tree(d);
        return out;
    }

    auto first_line = [&](LineCertificate::Kind kind) -> std::optional<LineCertificate> {
        for (const LineCertificate& l : out.lines)
            if (l.kind == kind) return l;
        return std::nullopt;
    };

    for (int k = 1; k <= kmax; ++k) {
        EmptyLabels l = label_empty(approximation(d, k, max_cells));
        std::optional<PathCertificate> v = vertical_at(l, k);
        std::optional<PathCertificate> h = horizontal_at(l, k);
        std::optional<PathCertificate> lam = lambda_at(l, k);
        if (!v && !h && !lam) continue;
        out.vpath = v;
        out.hpath = h;
        out.lambda = lam;
        if (v && h) {
            out.type = FsType::TotallyDisconnected;
        } else if (v) {
            std::optional<LineCertificate> col = first_line(LineCertificate::Kind::Column);
            if (col) {
                out.type = FsType::ParallelSegments;
                out.orientation = col;
            } else {
                out.type = FsType::TotallyDisconnected;
            }
        } else if (h) {
            std::optional<LineCertificate> row = first_line(LineCertificate::Kind::Row);
            if (row) {
                out.type = FsType::ParallelSegments;
                out.orientation = row;
            } else {
                out.type = FsType::TotallyDisconnected;
            }
        } else {
            out.type = FsType::TotallyDisconnected;
        }
        return out;
    }

    if (!out.lines.empty()) {
        out.type = FsType::ParallelSegments;
        out.presumed = true;
        out.orientation = out.lines.front();
    }
    return out;
}

DigitSet construct_td_digitset(int n) {
    if (n < 2) throw std::invalid_argument("construct_td_digitset: need n >= 2");
    int t = (n % 2 == 1) ? n / 2 : n / 2 - 1;
    std::vector<std::vector<bool>> removed(n, std::vector<bool>(n, false));
    for (int i = 0; i <= t; ++i) removed[i][i] = true;
    for (int j = 0; j < n; ++j) removed[j][n - 1 - j] = true;
    std::vector<Cell> cells;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            if (!removed[x][y]) cells.push_back({x, y});
    return DigitSet(n, std::move(cells));
}

}  // namespace fracsq
