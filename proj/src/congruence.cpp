#include "fracsq/congruence.hpp"

#include <algorithm>
#include <map>

namespace fracsq {

namespace {

Cell apply_d4(Cell c, int n, int op) {
    int t = n - 1;
    switch (op) {
        case 0: return {c.x, c.y};
        case 1: return {t - c.y, c.x};        // rotate 90
        case 2: return {t - c.x, t - c.y};    // rotate 180
        case 3: return {c.y, t - c.x};        // rotate 270
        case 4: return {t - c.x, c.y};        // horizontal flip
        case 5: return {c.x, t - c.y};        // vertical flip
        case 6: return {c.y, c.x};            // transpose
        case 7: return {t - c.y, t - c.x};    // anti-transpose
    }
    throw std::logic_error("bad symmetry index");
}

std::vector<Cell> anchored(std::vector<Cell> cells) {
    int mx = cells.front().x, my = cells.front().y;
    for (const Cell& c : cells) {
        mx = std::min(mx, c.x);
        my = std::min(my, c.y);
    }
    for (Cell& c : cells) {
        c.x -= mx;
        c.y -= my;
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

std::vector<std::uint8_t> encode(const std::vector<Cell>& cells, int n) {
    std::vector<std::uint8_t> bytes((n * n + 7) / 8, 0);
    for (const Cell& c : cells) {
        int bit = c.y * n + c.x;
        bytes[bit / 8] |= static_cast<std::uint8_t>(1u << (bit % 8));
    }
    return bytes;
}

}  // namespace

std::string CanonicalKey::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

std::array<DigitSet, 8> d4_images(const DigitSet& d) {
    auto image = [&](int op) {
        std::vector<Cell> cells;
        cells.reserve(d.cells().size());
        for (const Cell& c : d.cells()) cells.push_back(apply_d4(c, d.n(), op));
        return DigitSet(d.n(), std::move(cells));
    };
    return {image(0), image(1), image(2), image(3), image(4), image(5), image(6), image(7)};
}

CanonicalKey canonical_form(const DigitSet& d) {
    CanonicalKey best;
    best.n = d.n();
    for (int op = 0; op < 8; ++op) {
        std::vector<Cell> cells;
        cells.reserve(d.cells().size());
        for (const Cell& c : d.cells()) cells.push_back(apply_d4(c, d.n(), op));
        std::vector<std::uint8_t> bytes = encode(anchored(std::move(cells)), d.n());
        if (best.bytes.empty() || bytes < best.bytes) best.bytes = std::move(bytes);
    }
    return best;
}

DigitSet canonical_representative(const DigitSet& d) {
    CanonicalKey key = canonical_form(d);
    for (int op = 0; op < 8; ++op) {
        std::vector<Cell> cells;
        cells.reserve(d.cells().size());
        for (const Cell& c : d.cells()) cells.push_back(apply_d4(c, d.n(), op));
        cells = anchored(std::move(cells));
        if (encode(cells, d.n()) == key.bytes) return DigitSet(d.n(), std::move(cells));
    }
    throw std::logic_error("canonical image not found");
}

std::vector<DigitSet> enumerate_classes(int n, int m) {
    int total = n * n;
    if (m < 1 || m > total - 1)
        throw std::invalid_argument("enumerate_classes: need 1 <= m <= n^2 - 1");
    // Budget guard: C(n^2, m) subsets are enumerated explicitly.
    long double estimate = 1;
    for (int i = 0; i < m; ++i) estimate = estimate * (total - i) / (i + 1);
    if (estimate > 5e6) throw CapExceeded("enumerate_classes: too many subsets to enumerate");

    std::map<std::vector<std::uint8_t>, DigitSet> reps;
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    while (true) {
        std::vector<Cell> cells;
        cells.reserve(m);
        for (int p : pick) cells.push_back({p % n, p / n});
        DigitSet d(n, std::move(cells));
        CanonicalKey key = canonical_form(d);
        if (reps.find(key.bytes) == reps.end()) reps.emplace(key.bytes, canonical_representative(d));
        // Next combination in lexicographic order.
        int i = m - 1;
        while (i >= 0 && pick[i] == total - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::vector<DigitSet> out;
    out.reserve(reps.size());
    for (auto& [bytes, d] : reps) out.push_back(std::move(d));
    return out;
}

std::uint64_t burnside_count_dihedral(int n, int m) {
    int total = n * n;
    if (m < 0 || m > total) throw std::invalid_argument("burnside_count_dihedral: bad m");
    unsigned __int128 sum = 0;
    for (int op = 0; op < 8; ++op) {
        // Cycle lengths of the cell permutation induced by the symmetry.
        std::vector<bool> seen(total, false);
        std::vector<int> cycles;
        for (int start = 0; start < total; ++start) {
            if (seen[start]) continue;
            int len = 0, cur = start;
            while (!seen[cur]) {
                seen[cur] = true;
                ++len;
                Cell next = apply_d4({cur % n, cur / n}, n, op);
                cur = next.y * n + next.x;
            }
            cycles.push_back(len);
        }
        // Fixed m-subsets are unions of whole cycles: subset-sum count.
        std::vector<unsigned __int128> dp(m + 1, 0);
        dp[0] = 1;
        for (int len : cycles)
            for (int size = m; size >= len; --size) dp[size] += dp[size - len];
        sum += dp[m];
    }
    return static_cast<std::uint64_t>(sum / 8);
}

}  // namespace fracsq
