#include "fracsq/witness.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fracsq/paths.hpp"

namespace fracsq {

WitnessCheck verify_witness(const Mat2& A, const Vec2& v, const DigitSet& from,
                            const DigitSet& to) {
    if (from.n() != to.n()) throw std::invalid_argument("verify_witness: mismatched bases");
    if (A.det() == Rat(0)) return WitnessCheck::Singular;
    if (from.size() != to.size()) return WitnessCheck::Mismatch;
    Rat scale(from.n() - 1);
    std::vector<Cell> images;
    images.reserve(from.cells().size());
    for (const Cell& c : from.cells()) {
        Vec2 w = A.apply({Rat(c.x), Rat(c.y)}) + scale * v;
        if (w.x.denominator() != 1 || w.y.denominator() != 1) return WitnessCheck::Mismatch;
        images.push_back({static_cast<int>(w.x.numerator()), static_cast<int>(w.y.numerator())});
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
        return WitnessCheck::Mismatch;
    return images == to.cells() ? WitnessCheck::Ok : WitnessCheck::Mismatch;
}

std::vector<Rat> witness_entry_candidates(const WitnessBounds& bounds) {
    std::vector<Rat> out;
    std::set<Rat> seen;
    std::vector<long long> denoms = bounds.denominators;
    std::sort(denoms.begin(), denoms.end());
    for (long long q : denoms) {
        if (q <= 0) throw std::invalid_argument("witness bounds: denominators must be positive");
        for (long long p = 0; p <= bounds.numerator_range; ++p)
            for (long long sign : {1LL, -1LL}) {
                if (p == 0 && sign < 0) continue;
                Rat r(sign * p, q);
                if (seen.insert(r).second) out.push_back(r);
            }
    }
    return out;
}

std::optional<AffineWitness> search_witness(const DigitSet& from, const DigitSet& to,
                                            const WitnessBounds& bounds) {
    if (from.n() != to.n()) throw std::invalid_argument("search_witness: mismatched bases");
    if (from.size() != to.size()) return std::nullopt;
    std::vector<Rat> values = witness_entry_candidates(bounds);
    Vec2 sum_from{Rat(0), Rat(0)}, sum_to{Rat(0), Rat(0)};
    for (const Cell& c : from.cells()) sum_from = sum_from + Vec2{Rat(c.x), Rat(c.y)};
    for (const Cell& c : to.cells()) sum_to = sum_to + Vec2{Rat(c.x), Rat(c.y)};
    Rat inv_scale(1, static_cast<long long>(from.size()) * (from.n() - 1));
    for (const Rat& a : values)
        for (const Rat& b : values)
            for (const Rat& c : values)
                for (const Rat& d : values) {
                    Mat2 A{a, b, c, d};
                    if (A.det() == Rat(0)) continue;
                    // The identity sums to m(n-1) v = sum(D') - A sum(D).
                    Vec2 v = inv_scale * (sum_to - A.apply(sum_from));
                    if (verify_witness(A, v, from, to) == WitnessCheck::Ok)
                        return AffineWitness{A, v};
                }
    return std::nullopt;
}

AffineWitness compose_witness(const AffineWitness& first, const AffineWitness& second) {
    return {second.A * first.A, second.A.apply(first.v) + second.v};
}

AffineWitness invert_witness(const AffineWitness& w) {
    Mat2 inv = w.A.inverse();
    Vec2 v = inv.apply(w.v);
    return {inv, {-v.x, -v.y}};
}

namespace {

struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

}  // namespace

EquivalencePartition equivalence_classes(const std::vector<DigitSet>& reps,
                                         const EquivConfig& cfg) {
    std::vector<std::string> keys;
    keys.reserve(reps.size());
    for (const DigitSet& d : reps) keys.push_back(canonical_form(d).hex());
    // Process in key order so the outcome is independent of input order.
    std::vector<int> order(reps.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });

    EquivalencePartition out;
    Dsu dsu(static_cast<int>(reps.size()));
    std::vector<int> disconnected;
    for (int idx : order) {
        TypeDecision decision = classify_type(reps[idx], cfg.kmax, cfg.max_cells);
        if (decision.type == FsType::TotallyDisconnected) disconnected.push_back(idx);
    }
    for (std::size_t i = 1; i < disconnected.size(); ++i) {
        dsu.merge(disconnected[0], disconnected[i]);
        out.provenance.push_back({keys[disconnected[0]], keys[disconnected[i]],
                                  MergeRecord::Kind::TotallyDisconnected, std::nullopt});
    }
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            int a = order[i], b = order[j];
            if (dsu.find(a) == dsu.find(b)) continue;
            if (std::optional<AffineWitness> w = search_witness(reps[a], reps[b], cfg.bounds)) {
                dsu.merge(a, b);
                out.provenance.push_back({keys[a], keys[b], MergeRecord::Kind::Witness, w});
            }
        }

    std::map<int, std::vector<std::string>> groups;
    for (int idx : order) groups[dsu.find(idx)].push_back(keys[idx]);
    std::vector<std::vector<std::string>> classes;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end());
    out.classes = std::move(classes);
    for (int i = 0; i < static_cast<int>(out.classes.size()); ++i)
        for (const std::string& key : out.classes[i]) out.class_of[key] = i;
    return out;
}

EquivalencePartition equivalence_classes(int n, int m, const EquivConfig& cfg) {
    return equivalence_classes(enumerate_classes(n, m), cfg);
}

}  // namespace fracsq
