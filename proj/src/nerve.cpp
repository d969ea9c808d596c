#include <algorithm>
#include <cmath>
#include <limits>

#include "moebius/topology.hpp"

namespace moebius::topology {

namespace {

struct BallView {
    Point c;
    double r;
};

// cyclic projection feasibility for the intersection of >= 3 balls
enum class Feas { Nonempty, Empty, Unknown };

// Exact three-ball test: project c3 onto the lens B1 n B2 (interior, sphere
// caps, or the intersection circle) and compare the distance with r3.
Feas tripleFeasible(const BallView& b1, const BallView& b2, const BallView& b3) {
    const size_t n = b1.c.size();
    auto inB = [&](const Point& p, const BallView& b, double slack) {
        return dist(p, b.c) <= b.r + slack;
    };
    // projection of c3 onto B1 n B2
    Point p = b3.c;
    if (!inB(p, b1, 0) || !inB(p, b2, 0)) {
        std::vector<Point> candidates;
        // cap of S1 facing c3
        double d1 = dist(b3.c, b1.c);
        if (d1 > 0) {
            Point q(n);
            for (size_t k = 0; k < n; ++k)
                q[k] = b1.c[k] + b1.r * (b3.c[k] - b1.c[k]) / d1;
            if (inB(q, b2, 1e-12)) candidates.push_back(q);
        }
        double d2 = dist(b3.c, b2.c);
        if (d2 > 0) {
            Point q(n);
            for (size_t k = 0; k < n; ++k)
                q[k] = b2.c[k] + b2.r * (b3.c[k] - b2.c[k]) / d2;
            if (inB(q, b1, 1e-12)) candidates.push_back(q);
        }
        // intersection sphere of S1 and S2 (an (n-2)-sphere in the radical plane)
        double d12 = dist(b1.c, b2.c);
        if (d12 > 0) {
            double a = (d12 * d12 + b1.r * b1.r - b2.r * b2.r) / (2 * d12);
            double rho2 = b1.r * b1.r - a * a;
            if (rho2 >= 0) {
                double rho = std::sqrt(rho2);
                Point nhat(n), o(n);
                for (size_t k = 0; k < n; ++k) {
                    nhat[k] = (b2.c[k] - b1.c[k]) / d12;
                    o[k] = b1.c[k] + a * nhat[k];
                }
                // project c3 onto the circle's plane, then onto the circle
                Point v(n);
                double vn = 0;
                for (size_t k = 0; k < n; ++k) v[k] = b3.c[k] - o[k];
                double along = dot(v, nhat);
                for (size_t k = 0; k < n; ++k) v[k] -= along * nhat[k];
                vn = std::sqrt(norm2(v));
                Point q(n);
                if (vn > 1e-14) {
                    for (size_t k = 0; k < n; ++k) q[k] = o[k] + rho * v[k] / vn;
                } else {
                    // c3 on the axis: any circle point is nearest
                    Point w(n, 0.0);
                    size_t pick = 0;
                    double bestAbs = 1.0;
                    for (size_t k = 0; k < n; ++k)
                        if (std::abs(nhat[k]) < bestAbs) {
                            bestAbs = std::abs(nhat[k]);
                            pick = k;
                        }
                    w[pick] = 1.0;
                    double wdot = dot(w, nhat);
                    for (size_t k = 0; k < n; ++k) w[k] -= wdot * nhat[k];
                    double wl = std::sqrt(norm2(w));
                    for (size_t k = 0; k < n; ++k) q[k] = o[k] + rho * w[k] / wl;
                }
                candidates.push_back(q);
            }
        }
        if (candidates.empty()) return Feas::Empty;  // B1, B2 effectively disjoint
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : candidates) {
            double d = dist(b3.c, q);
            if (d < best) {
                best = d;
                p = q;
            }
        }
    }
    double gap = dist(b3.c, p) - b3.r;
    if (gap < -1e-9) return Feas::Nonempty;
    if (gap > 1e-9) return Feas::Empty;
    return Feas::Unknown;  // within tolerance of tangency
}

Feas intersectionFeasible(const std::vector<BallView>& balls, const std::vector<int>& ids) {
    const int n = static_cast<int>(balls.front().c.size());
    // seed: centroid of the candidate centers
    Point x(n, 0.0);
    for (int id : ids)
        for (int k = 0; k < n; ++k) x[k] += balls[id].c[k];
    for (int k = 0; k < n; ++k) x[k] /= ids.size();

    auto insideAll = [&](const Point& p, double slack) {
        for (int id : ids) {
            double d = dist(p, balls[id].c);
            if (d > balls[id].r - slack) return false;
        }
        return true;
    };

    const int kCap = 10000;
    Point prev = x;
    for (int iter = 0; iter < kCap; ++iter) {
        if (insideAll(x, 1e-9)) return Feas::Nonempty;
        prev = x;
        for (int id : ids) {
            double d = dist(x, balls[id].c);
            if (d > balls[id].r) {
                double f = balls[id].r / d;
                for (int k = 0; k < n; ++k)
                    x[k] = balls[id].c[k] + (x[k] - balls[id].c[k]) * f;
            }
        }
        double moved = dist(x, prev);
        // cycle converged while still outside some ball: the displacement of
        // a full projection cycle lower-bounds the separation of the convex
        // sets, so a small step with a clear outside margin certifies empty
        if (moved < 1e-12) {
            bool strictlyOutside = false;
            for (int id : ids)
                if (dist(x, balls[id].c) > balls[id].r + 1e-9) strictlyOutside = true;
            return strictlyOutside ? Feas::Empty : Feas::Unknown;
        }
    }
    return Feas::Unknown;
}

}  // namespace

NerveComplex nerve(const std::vector<InversiveSphere>& balls, int maxDim) {
    NerveComplex out;
    out.vertices = static_cast<int>(balls.size());
    std::vector<BallView> bv;
    for (const auto& s : balls) {
        if (s.kind() != SphereKind::Round || !s.round().interiorBounded)
            throw std::invalid_argument(
                "nerve expects round balls; transform planes to round spheres first");
        bv.push_back({s.round().center, s.round().radius});
    }
    const int n = out.vertices;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist(bv[i].c, bv[j].c) < bv[i].r + bv[j].r) {
                out.edges.push_back({i, j});
                adj[i].push_back(j);
            }
    if (maxDim < 2) return out;

    for (int i = 0; i < n; ++i)
        for (int j : adj[i])
            for (int k : adj[j]) {
                if (std::find(adj[i].begin(), adj[i].end(), k) == adj[i].end()) continue;
                Feas f = tripleFeasible(bv[i], bv[j], bv[k]);
                if (f == Feas::Nonempty)
                    out.triangles.push_back({i, j, k});
                else if (f == Feas::Unknown)
                    out.unknown.push_back({i, j, k});
            }
    if (maxDim < 3) return out;

    // quadruples on top of triangles
    for (const auto& t : out.triangles) {
        auto [i, j, k] = std::tuple{t[0], t[1], t[2]};
        for (int l : adj[k]) {
            if (l <= k) continue;
            bool ijl = std::find(adj[i].begin(), adj[i].end(), l) != adj[i].end();
            bool jkl = std::find(adj[j].begin(), adj[j].end(), l) != adj[j].end();
            if (!ijl || !jkl) continue;
            Feas f = intersectionFeasible(bv, {i, j, k, l});
            if (f == Feas::Nonempty)
                out.tetrahedra.push_back({i, j, k, l});
            else if (f == Feas::Unknown)
                out.unknown.push_back({i, j, k, l});
        }
    }
    return out;
}

}  // namespace moebius::topology
