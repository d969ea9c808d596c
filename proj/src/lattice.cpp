#include <algorithm>
#include <map>
#include <set>

#include "moebius/topology.hpp"

namespace moebius::topology {

namespace {

// multiset of rounded edge-angle labels around a face, plus degree
struct FaceSignature {
    int degree = 0;
    std::vector<int> angleKeys;  // sorted, angle * 1e6 rounded
    auto operator<=>(const FaceSignature&) const = default;
};

std::vector<FaceSignature> signatures(const FaceLattice& l) {
    std::vector<FaceSignature> sig(l.faces.size());
    for (const auto& e : l.edges) {
        int key = static_cast<int>(llround(e.angle * 1e6));
        sig[e.a].degree++;
        sig[e.b].degree++;
        sig[e.a].angleKeys.push_back(key);
        sig[e.b].angleKeys.push_back(key);
    }
    for (auto& s : sig) std::sort(s.angleKeys.begin(), s.angleKeys.end());
    return sig;
}

struct AdjInfo {
    std::map<std::pair<int, int>, int> angleKey;  // edge -> rounded angle
    std::vector<std::set<int>> neigh;
};

AdjInfo adjacency(const FaceLattice& l) {
    AdjInfo a;
    a.neigh.resize(l.faces.size());
    for (const auto& e : l.edges) {
        a.neigh[e.a].insert(e.b);
        a.neigh[e.b].insert(e.a);
        int key = static_cast<int>(llround(e.angle * 1e6));
        a.angleKey[{std::min(e.a, e.b), std::max(e.a, e.b)}] = key;
    }
    return a;
}

struct IsoSearch {
    const FaceLattice& A;
    const FaceLattice& B;
    AdjInfo adjA, adjB;
    std::vector<std::vector<int>> candidates;  // per A-face
    std::vector<int> mapping;                  // A index -> B index, -1 unset
    std::vector<bool> used;
    long long steps = 0;
    static constexpr long long kStepCap = 50'000'000;

    bool feasible(int a, int b) const {
        // every mapped neighbour of a must map to a neighbour of b with the
        // same angle label
        for (int an : adjA.neigh[a]) {
            int bn = mapping[an];
            if (bn < 0) continue;
            if (!adjB.neigh[b].count(bn)) return false;
            auto ka = adjA.angleKey.at({std::min(a, an), std::max(a, an)});
            auto kb = adjB.angleKey.at({std::min(b, bn), std::max(b, bn)});
            if (ka != kb) return false;
        }
        return true;
    }

    bool run(size_t depth, const std::vector<int>& order) {
        if (++steps > kStepCap) return false;
        if (depth == order.size()) return true;
        int a = order[depth];
        for (int b : candidates[a]) {
            if (used[b] || !feasible(a, b)) continue;
            mapping[a] = b;
            used[b] = true;
            if (run(depth + 1, order)) return true;
            mapping[a] = -1;
            used[b] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> latticeIsomorphic(const FaceLattice& a,
                                                  const FaceLattice& b) {
    if (a.faces.size() != b.faces.size() || a.edges.size() != b.edges.size())
        return std::nullopt;

    auto sigA = signatures(a), sigB = signatures(b);
    {
        auto sa = sigA, sb = sigB;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;  // degree/angle profiles differ
    }

    IsoSearch search{a, b, adjacency(a), adjacency(b), {}, {}, {}};
    search.candidates.resize(a.faces.size());
    for (size_t i = 0; i < a.faces.size(); ++i)
        for (size_t j = 0; j < b.faces.size(); ++j)
            if (sigA[i] == sigB[j]) search.candidates[i].push_back(static_cast<int>(j));
    search.mapping.assign(a.faces.size(), -1);
    search.used.assign(b.faces.size(), false);

    // order A-faces by candidate scarcity, then by connectivity to the
    // already-ordered prefix (keeps the partial mapping constrained)
    std::vector<int> order;
    std::vector<bool> placed(a.faces.size(), false);
    for (size_t step = 0; step < a.faces.size(); ++step) {
        int best = -1;
        long long bestScore = -1;
        for (size_t i = 0; i < a.faces.size(); ++i) {
            if (placed[i]) continue;
            long long connected = 0;
            for (int n : search.adjA.neigh[i])
                if (placed[n]) connected++;
            long long score = connected * 1000000 -
                              static_cast<long long>(search.candidates[i].size());
            if (best < 0 || score > bestScore) {
                best = static_cast<int>(i);
                bestScore = score;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }

    if (!search.run(0, order)) return std::nullopt;
    return search.mapping;
}

DimensionCount dimensionFromLattice(const FaceLattice& l) {
    DimensionCount d;
    d.carriers = static_cast<long long>(l.faces.size());
    // one constraint per finite-angle pair; unlabeled grid contacts between
    // non-crossing spheres carry no angle constraint
    for (const auto& e : l.edges)
        if (e.angle > 0) d.constraints++;
    return d;
}

DimensionCount dimensionFromConfiguration(const config::SphereConfiguration& cfg) {
    DimensionCount d;
    d.carriers = cfg.sphereCount();
    auto pairs = config::classifyAllPairs(cfg);
    d.constraints = pairs.ortho + pairs.pi3;
    return d;
}

}  // namespace moebius::topology
