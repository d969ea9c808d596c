#include "moebius/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace moebius::group {

int ReflectionGroup::order(int i, int j) const {
    if (i == j) return 1;
    auto it = finiteOrders.find({std::min(i, j), std::max(i, j)});
    return it == finiteOrders.end() ? 0 : it->second;
}

double ReflectionGroup::relatorResidual(int i, int j) const {
    int m = order(i, j);
    if (m == 0) return 0;
    // evaluate in a local frame anchored at the pair; the relator is
    // conjugation-invariant and this keeps the matrix entries small
    Point anchor(mirrors[i].ambient(), 0.0);
    int anchors = 0;
    for (int idx : {i, j}) {
        if (mirrors[idx].kind() != SphereKind::Round) continue;
        const auto& c = mirrors[idx].round().center;
        for (size_t k = 0; k < c.size(); ++k) anchor[k] += c[k];
        ++anchors;
    }
    if (anchors > 0)
        for (double& x : anchor) x /= anchors;
    MoebiusMap gi = MoebiusMap::reflection(recenter(mirrors[i], anchor));
    MoebiusMap gj = MoebiusMap::reflection(recenter(mirrors[j], anchor));
    MoebiusMap p = gi * gj;
    MoebiusMap acc = MoebiusMap::identity(p.ambient());
    for (int k = 0; k < m; ++k) acc = acc * p;
    return acc.maxAbsDiff(MoebiusMap::identity(p.ambient()));
}

double ReflectionGroup::worstRelatorResidual() const {
    double worst = 0;
    for (const auto& [ij, m] : finiteOrders)
        worst = std::max(worst, relatorResidual(ij.first, ij.second));
    return worst;
}

ReflectionGroup buildReflectionGroup(const config::SphereConfiguration& cfg, double tol) {
    auto pairs = config::classifyAllPairs(cfg, tol);
    if (!pairs.valid())
        throw std::invalid_argument(
            "configuration is not certified: " +
            std::to_string(pairs.violations.size()) + "+ invalid pairs, first product " +
            std::to_string(pairs.violations.front().product));

    ReflectionGroup g;
    for (const auto& s : cfg.spheres) {
        g.labels.push_back(s.label);
        g.mirrors.push_back(s.sphere);
        g.generators.push_back(MoebiusMap::reflection(s.sphere));
    }
    const int n = g.rank();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double q = stableInversiveProduct(g.mirrors[i], g.mirrors[j]);
            if (std::abs(q) <= tol)
                g.finiteOrders[{i, j}] = 2;
            else if (std::abs(q + 0.5) <= tol)
                g.finiteOrders[{i, j}] = 3;
            // else disjoint: infinite order
        }
    return g;
}

namespace {

// Dedup store keyed on a scalar profile of the matrix; a plain grid hash
// misses pairs straddling a grid boundary, so candidates are range-scanned
// within tolerance and re-verified by full matrix distance.
struct ElementStore {
    std::multimap<double, int> byProfile;
    std::vector<GroupElement>* elements;

    static double profile(const MoebiusMap& m) {
        double s = 0;
        for (int i = 0; i < m.dim(); ++i)
            for (int j = 0; j < m.dim(); ++j) s += std::abs(m.at(i, j));
        return s;
    }

    // returns index of an existing equal element or -1
    int find(const MoebiusMap& m) const {
        double p = profile(m);
        double tol = 1e-6 * m.dim() * m.dim();
        auto lo = byProfile.lower_bound(p - tol);
        auto hi = byProfile.upper_bound(p + tol);
        for (auto it = lo; it != hi; ++it)
            if ((*elements)[it->second].matrix.maxAbsDiff(m) < 1e-6) return it->second;
        return -1;
    }
    void insert(int idx) {
        byProfile.emplace(profile((*elements)[idx].matrix), idx);
    }
};

}  // namespace

OrbitResult orbit(const ReflectionGroup& g, int depth, std::size_t cap) {
    OrbitResult out;
    ElementStore store;
    store.elements = &out.elements;

    out.elements.push_back({{}, MoebiusMap::identity(g.mirrors.front().ambient())});
    store.insert(0);
    out.countsPerDepth.assign(1, 1);

    std::size_t levelBegin = 0, levelEnd = 1;
    for (int d = 1; d <= depth; ++d) {
        for (std::size_t e = levelBegin; e < levelEnd; ++e) {
            for (int j = 0; j < g.rank(); ++j) {
                const GroupElement& cur = out.elements[e];
                if (!cur.word.empty() && cur.word.back() == j) continue;  // s_j s_j = e
                MoebiusMap m = cur.matrix * g.generators[j];
                if (store.find(m) >= 0) continue;
                if (out.elements.size() >= cap) {
                    out.truncated = true;
                    break;
                }
                GroupElement ge;
                ge.word = cur.word;
                ge.word.push_back(j);
                ge.matrix = m;
                out.elements.push_back(std::move(ge));
                store.insert(static_cast<int>(out.elements.size()) - 1);
            }
            if (out.truncated) break;
        }
        out.countsPerDepth.push_back(
            static_cast<long long>(out.elements.size() - levelEnd));
        levelBegin = levelEnd;
        levelEnd = out.elements.size();
        if (out.truncated || levelBegin == levelEnd) break;
    }
    return out;
}

double verifyWordMatrixConsistency(const ReflectionGroup& g, const OrbitResult& orbit) {
    // distinct reduced words + matrices reconstructible from words
    std::map<std::vector<int>, int> seen;
    double worst = 0;
    for (size_t idx = 0; idx < orbit.elements.size(); ++idx) {
        const auto& e = orbit.elements[idx];
        if (!seen.emplace(e.word, static_cast<int>(idx)).second)
            throw std::logic_error("duplicate discovery word in orbit");
        for (size_t k = 1; k < e.word.size(); ++k)
            if (e.word[k] == e.word[k - 1])
                throw std::logic_error("non-reduced discovery word in orbit");
        if (!e.word.empty()) {
            std::vector<int> prefix(e.word.begin(), e.word.end() - 1);
            if (!seen.count(prefix))
                throw std::logic_error("orbit words are not prefix-closed");
        }
        MoebiusMap m = MoebiusMap::identity(g.mirrors.front().ambient());
        for (int j : e.word) m = m * g.generators[j];
        worst = std::max(worst, m.maxAbsDiff(e.matrix));
    }
    return worst;
}

BallOrbitResult ballOrbit(const ReflectionGroup& g, int depth, std::size_t cap) {
    BallOrbitResult out;
    const int n = g.rank();

    struct Node {
        int imageIdx;
        MoebiusMap word;  // the group element whose action produced the ball
    };

    // depth 0: the generator balls themselves
    std::vector<Node> frontier;
    for (int j = 0; j < n; ++j) {
        BallImage bi;
        bi.depth = 0;
        bi.sourceSphere = j;
        bi.lastGenerator = -1;
        bi.parent = -1;
        bi.image = g.mirrors[j];
        bi.euclideanRadius = g.mirrors[j].euclideanRadius();
        out.images.push_back(bi);
        frontier.push_back({j, MoebiusMap::identity(g.mirrors.front().ambient())});
    }
    out.countsPerDepth.assign(1, n);
    out.maxRadiusPerDepth.assign(1, 0.0);
    for (const auto& im : out.images)
        out.maxRadiusPerDepth[0] = std::max(out.maxRadiusPerDepth[0], im.euclideanRadius);

    // per-level emission quota so deep levels stay populated under the cap
    const std::size_t quota = std::max<std::size_t>(64, cap / std::max(1, depth));

    for (int d = 1; d <= depth; ++d) {
        // expand the widest balls first: the level sample then carries the
        // radius maxima that the contraction diagnostics look at
        std::sort(frontier.begin(), frontier.end(), [&](const Node& a, const Node& b) {
            double ra = out.images[a.imageIdx].euclideanRadius;
            double rb = out.images[b.imageIdx].euclideanRadius;
            if (ra != rb) return ra > rb;
            return a.imageIdx < b.imageIdx;
        });
        std::vector<Node> next;
        long long count = 0;
        double maxR = 0;
        for (const Node& node : frontier) {
            // the reflection in this node's ball maps every ball disjoint
            // from it strictly inside it; only those transitions contract
            int i = out.images[node.imageIdx].sourceSphere;
            MoebiusMap w = node.word * g.generators[i];
            for (int j = 0; j < n; ++j) {
                if (j == i || g.order(i, j) != 0) continue;
                if (static_cast<std::size_t>(count) >= quota ||
                    out.images.size() >= cap) {
                    out.truncated = true;
                    break;
                }
                BallImage bi;
                bi.depth = d;
                bi.sourceSphere = j;
                bi.lastGenerator = i;
                bi.parent = node.imageIdx;
                bi.image = w.apply(g.mirrors[j]);
                bi.euclideanRadius = bi.image.euclideanRadius();
                out.nestingChecked++;
                if (!ballContained(bi.image, out.images[node.imageIdx].image, 1e-9))
                    out.nestingViolations++;
                out.images.push_back(bi);
                next.push_back({static_cast<int>(out.images.size()) - 1, w});
                ++count;
                maxR = std::max(maxR, bi.euclideanRadius);
            }
            if (static_cast<std::size_t>(count) >= quota || out.images.size() >= cap)
                break;
        }
        out.countsPerDepth.push_back(count);
        out.maxRadiusPerDepth.push_back(maxR);
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return out;
}

std::vector<InversiveSphere> handlebodyBalls(const config::SphereConfiguration& cfg) {
    std::vector<MoebiusMap> wallReflections;
    for (const auto& s : cfg.spheres)
        if (s.base && s.sphere.kind() == SphereKind::Plane)
            wallReflections.push_back(MoebiusMap::reflection(s.sphere));

    std::vector<InversiveSphere> out;
    for (const auto& s : cfg.spheres) {
        if (s.base) continue;
        out.push_back(s.sphere);
        for (const auto& w : wallReflections) out.push_back(w.apply(s.sphere));
    }
    return out;
}

LimitCloud limitCloud(const ReflectionGroup& g, int depth, std::size_t cap) {
    auto balls = ballOrbit(g, depth, cap);
    LimitCloud cloud;
    cloud.truncated = balls.truncated;
    cloud.maxRadiusPerDepth = balls.maxRadiusPerDepth;

    std::vector<std::vector<double>> radiiPerDepth(balls.countsPerDepth.size());
    int deepest = static_cast<int>(balls.countsPerDepth.size()) - 1;
    for (const auto& im : balls.images) {
        if (im.image.kind() == SphereKind::Plane) continue;
        radiiPerDepth[im.depth].push_back(im.euclideanRadius);
        if (im.depth != deepest) continue;
        cloud.points.push_back(im.image.round().center);
        cloud.radii.push_back(im.euclideanRadius);
        if (im.parent >= 0 &&
            balls.images[im.parent].image.contains(im.image.round().center))
            cloud.pointsInsideParent++;
    }
    for (auto& rs : radiiPerDepth) {
        if (rs.empty()) {
            cloud.medianRadiusPerDepth.push_back(0);
            continue;
        }
        std::sort(rs.begin(), rs.end());
        cloud.medianRadiusPerDepth.push_back(rs[rs.size() / 2]);
    }
    return cloud;
}

}  // namespace moebius::group
