#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "moebius/topology.hpp"

namespace moebius::topology {

int ComplementAnalysis::primaryBounded() const {
    int best = -1;
    long long bestCells = -1;
    for (size_t i = 0; i < components.size(); ++i)
        if (components[i].bounded && components[i].cells > bestCells) {
            best = static_cast<int>(i);
            bestCells = components[i].cells;
        }
    return best;
}

namespace {

struct Grid {
    int res;
    Point lo;
    double h;
    std::vector<uint64_t> blocked;  // bitset over res^3

    long long idx(int x, int y, int z) const {
        return (static_cast<long long>(z) * res + y) * res + x;
    }
    bool isBlocked(long long i) const { return blocked[i >> 6] >> (i & 63) & 1; }
    void block(long long i) { blocked[i >> 6] |= 1ull << (i & 63); }
    Point center(int x, int y, int z) const {
        return {lo[0] + (x + 0.5) * h, lo[1] + (y + 0.5) * h, lo[2] + (z + 0.5) * h};
    }
};

}  // namespace

ComplementAnalysis complementComponents(const config::SphereConfiguration& cfg,
                                        int resolution) {
    if (cfg.ambient != 3)
        throw std::invalid_argument(
            "complement flood fill runs on S^3 configurations only");
    if (resolution < 32) throw std::invalid_argument("resolution too coarse (< 32)");

    // bounding box over the round spheres plus padding; keep the planes'
    // zero-levels inside the box
    Point lo(3, -0.75), hi(3, 0.75);
    for (const auto& s : cfg.spheres) {
        if (s.sphere.kind() != SphereKind::Round) continue;
        const auto& r = s.sphere.round();
        for (int k = 0; k < 3; ++k) {
            lo[k] = std::min(lo[k], r.center[k] - r.radius - 0.75);
            hi[k] = std::max(hi[k], r.center[k] + r.radius + 0.75);
        }
    }
    double span = 0;
    for (int k = 0; k < 3; ++k) span = std::max(span, hi[k] - lo[k]);

    Grid g;
    g.res = resolution;
    g.h = span / resolution;
    g.lo = lo;
    long long total = static_cast<long long>(resolution) * resolution * resolution;
    g.blocked.assign((total + 63) / 64, 0);

    // rasterize: planes sweep the whole grid, round balls only their boxes
    for (const auto& s : cfg.spheres) {
        if (s.sphere.kind() == SphereKind::Plane) {
            const auto& pl = s.sphere.plane();
            for (int z = 0; z < g.res; ++z)
                for (int y = 0; y < g.res; ++y)
                    for (int x = 0; x < g.res; ++x) {
                        Point p = g.center(x, y, z);
                        if (dot(p, pl.normal) - pl.offset >= 0) g.block(g.idx(x, y, z));
                    }
        } else {
            const auto& rd = s.sphere.round();
            int clo[3], chi[3];
            for (int k = 0; k < 3; ++k) {
                clo[k] = std::max(
                    0, static_cast<int>(std::floor((rd.center[k] - rd.radius - g.lo[k]) / g.h)));
                chi[k] = std::min(
                    g.res - 1,
                    static_cast<int>(std::ceil((rd.center[k] + rd.radius - g.lo[k]) / g.h)));
            }
            double r2 = rd.radius * rd.radius;
            if (rd.interiorBounded) {
                for (int z = clo[2]; z <= chi[2]; ++z)
                    for (int y = clo[1]; y <= chi[1]; ++y)
                        for (int x = clo[0]; x <= chi[0]; ++x) {
                            Point p = g.center(x, y, z);
                            double d2 = 0;
                            for (int k = 0; k < 3; ++k)
                                d2 += (p[k] - rd.center[k]) * (p[k] - rd.center[k]);
                            if (d2 <= r2) g.block(g.idx(x, y, z));
                        }
            } else {
                // unbounded positive side: block everything outside the ball
                for (int z = 0; z < g.res; ++z)
                    for (int y = 0; y < g.res; ++y)
                        for (int x = 0; x < g.res; ++x) {
                            Point p = g.center(x, y, z);
                            double d2 = 0;
                            for (int k = 0; k < 3; ++k)
                                d2 += (p[k] - rd.center[k]) * (p[k] - rd.center[k]);
                            if (d2 >= r2) g.block(g.idx(x, y, z));
                        }
            }
        }
    }

    ComplementAnalysis out;
    out.resolution = resolution;

    // flood fill (6-connectivity); components touching the box border are
    // unbounded (outside the padded box the free side is connected)
    std::vector<uint64_t> visited((total + 63) / 64, 0);
    auto isVisited = [&](long long i) { return visited[i >> 6] >> (i & 63) & 1; };
    auto visit = [&](long long i) { visited[i >> 6] |= 1ull << (i & 63); };

    // free cells flood with 26-connectivity (thin wedges near orthogonal
    // sphere contacts pinch below the grid step and must stay connected);
    // boundary-label detection keeps 6-connectivity
    const int dx[6] = {1, -1, 0, 0, 0, 0};
    const int dy[6] = {0, 0, 1, -1, 0, 0};
    const int dz[6] = {0, 0, 0, 0, 1, -1};

    struct RawComponent {
        long long cells = 0;
        bool bounded = true;
        // boundary cell -> adjacent blocking sphere ids
        std::map<long long, std::vector<int>> boundary;
        long long seed = 0;
    };
    std::vector<RawComponent> raw;

    auto blockingSphere = [&](const Point& p) {
        int best = -1;
        double bestDepth = -1;
        for (size_t si = 0; si < cfg.spheres.size(); ++si) {
            double d = cfg.spheres[si].sphere.depth(p);
            if (d >= 0 && d > bestDepth) {
                bestDepth = d;
                best = static_cast<int>(si);
            }
        }
        return best;
    };

    for (int z0 = 0; z0 < g.res; ++z0)
        for (int y0 = 0; y0 < g.res; ++y0)
            for (int x0 = 0; x0 < g.res; ++x0) {
                long long start = g.idx(x0, y0, z0);
                if (g.isBlocked(start) || isVisited(start)) continue;
                RawComponent comp;
                comp.seed = start;
                std::deque<std::array<int, 3>> queue;
                queue.push_back({x0, y0, z0});
                visit(start);
                while (!queue.empty()) {
                    auto [x, y, z] = queue.front();
                    queue.pop_front();
                    comp.cells++;
                    bool isBoundary = false;
                    std::vector<int> labels;
                    for (int dir = 0; dir < 6; ++dir) {
                        int nx = x + dx[dir], ny = y + dy[dir], nz = z + dz[dir];
                        if (nx < 0 || ny < 0 || nz < 0 || nx >= g.res || ny >= g.res ||
                            nz >= g.res) {
                            comp.bounded = false;
                            continue;
                        }
                        long long ni = g.idx(nx, ny, nz);
                        if (g.isBlocked(ni)) {
                            isBoundary = true;
                            int s = blockingSphere(g.center(nx, ny, nz));
                            if (s >= 0 &&
                                std::find(labels.begin(), labels.end(), s) == labels.end())
                                labels.push_back(s);
                        }
                    }
                    for (int ddz = -1; ddz <= 1; ++ddz)
                        for (int ddy = -1; ddy <= 1; ++ddy)
                            for (int ddx = -1; ddx <= 1; ++ddx) {
                                if (!ddx && !ddy && !ddz) continue;
                                int nx = x + ddx, ny = y + ddy, nz = z + ddz;
                                if (nx < 0 || ny < 0 || nz < 0 || nx >= g.res ||
                                    ny >= g.res || nz >= g.res)
                                    continue;
                                long long ni = g.idx(nx, ny, nz);
                                if (!g.isBlocked(ni) && !isVisited(ni)) {
                                    visit(ni);
                                    queue.push_back({nx, ny, nz});
                                }
                            }
                    if (isBoundary && !labels.empty())
                        comp.boundary[g.idx(x, y, z)] = labels;
                }
                raw.push_back(std::move(comp));
            }

    // merge all unbounded raw components into one (they connect outside the box)
    std::sort(raw.begin(), raw.end(), [](const RawComponent& a, const RawComponent& b) {
        return a.seed < b.seed;
    });
    std::vector<RawComponent> merged;
    RawComponent unbounded;
    unbounded.bounded = false;
    bool haveUnbounded = false;
    for (auto& c : raw) {
        if (c.bounded) {
            merged.push_back(std::move(c));
        } else {
            haveUnbounded = true;
            unbounded.cells += c.cells;
            for (auto& [cell, labels] : c.boundary) {
                auto& dst = unbounded.boundary[cell];
                for (int s : labels)
                    if (std::find(dst.begin(), dst.end(), s) == dst.end()) dst.push_back(s);
            }
        }
    }
    if (haveUnbounded) merged.push_back(std::move(unbounded));

    // face lattices per component
    for (auto& comp : merged) {
        ComplementComponent cc;
        cc.cells = comp.cells;
        cc.bounded = comp.bounded;

        // union-find over (cell, sphere) nodes
        std::vector<std::pair<long long, int>> nodes;
        std::map<std::pair<long long, int>, int> nodeIndex;
        for (const auto& [cell, labels] : comp.boundary)
            for (int s : labels) {
                nodeIndex[{cell, s}] = static_cast<int>(nodes.size());
                nodes.push_back({cell, s});
            }
        std::vector<int> parent(nodes.size());
        for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

        auto cellCoords = [&](long long i) {
            int x = static_cast<int>(i % g.res);
            int y = static_cast<int>((i / g.res) % g.res);
            int z = static_cast<int>(i / g.res / g.res);
            return std::array<int, 3>{x, y, z};
        };

        for (const auto& [cell, labels] : comp.boundary) {
            auto [x, y, z] = cellCoords(cell);
            for (int ddz = -1; ddz <= 1; ++ddz)
                for (int ddy = -1; ddy <= 1; ++ddy)
                    for (int ddx = -1; ddx <= 1; ++ddx) {
                        if (!ddx && !ddy && !ddz) continue;
                        int nx = x + ddx, ny = y + ddy, nz = z + ddz;
                        if (nx < 0 || ny < 0 || nz < 0 || nx >= g.res || ny >= g.res ||
                            nz >= g.res)
                            continue;
                        auto it = comp.boundary.find(g.idx(nx, ny, nz));
                        if (it == comp.boundary.end()) continue;
                        for (int s : labels)
                            if (std::find(it->second.begin(), it->second.end(), s) !=
                                it->second.end())
                                unite(nodeIndex[{cell, s}], nodeIndex[{g.idx(nx, ny, nz), s}]);
                    }
        }

        // clusters -> faces
        std::map<int, int> rootToFace;
        std::vector<long long> faceCells;
        std::vector<int> faceSphere;
        std::vector<long long> faceMinCell;
        for (size_t i = 0; i < nodes.size(); ++i) {
            int r = find(static_cast<int>(i));
            auto it = rootToFace.find(r);
            if (it == rootToFace.end()) {
                rootToFace[r] = static_cast<int>(faceCells.size());
                faceCells.push_back(0);
                faceSphere.push_back(nodes[i].second);
                faceMinCell.push_back(nodes[i].first);
            }
            int f = rootToFace[r];
            faceCells[f]++;
            faceMinCell[f] = std::min(faceMinCell[f], nodes[i].first);
        }
        // deterministic face order: by (sphere label, min cell)
        std::vector<int> order(faceCells.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const std::string& la = cfg.spheres[faceSphere[a]].label;
            const std::string& lb = cfg.spheres[faceSphere[b]].label;
            if (la != lb) return la < lb;
            return faceMinCell[a] < faceMinCell[b];
        });
        std::vector<int> rankOf(order.size());
        for (size_t i = 0; i < order.size(); ++i) rankOf[order[i]] = static_cast<int>(i);

        for (int f : order) {
            FaceLatticeFace ff;
            ff.sphereLabel = cfg.spheres[faceSphere[f]].label;
            ff.cells = faceCells[f];
            cc.lattice.faces.push_back(ff);
        }

        auto faceOfNode = [&](long long cell, int s) {
            return rankOf[rootToFace[find(nodeIndex[{cell, s}])]];
        };

        // edges and vertices from neighborhood co-occurrence
        std::set<std::pair<int, int>> edgeSet;
        std::set<std::array<int, 3>> vertexSet;
        for (const auto& [cell, labels] : comp.boundary) {
            auto [x, y, z] = cellCoords(cell);
            std::set<int> nearFaces;
            for (int s : labels) nearFaces.insert(faceOfNode(cell, s));
            for (int ddz = -1; ddz <= 1; ++ddz)
                for (int ddy = -1; ddy <= 1; ++ddy)
                    for (int ddx = -1; ddx <= 1; ++ddx) {
                        int nx = x + ddx, ny = y + ddy, nz = z + ddz;
                        if (nx < 0 || ny < 0 || nz < 0 || nx >= g.res || ny >= g.res ||
                            nz >= g.res)
                            continue;
                        auto it = comp.boundary.find(g.idx(nx, ny, nz));
                        if (it == comp.boundary.end()) continue;
                        for (int s : it->second) nearFaces.insert(faceOfNode(it->first, s));
                    }
            std::vector<int> nf(nearFaces.begin(), nearFaces.end());
            for (size_t a = 0; a < nf.size(); ++a)
                for (size_t b = a + 1; b < nf.size(); ++b)
                    edgeSet.insert({nf[a], nf[b]});
            if (nf.size() >= 3)
                for (size_t a = 0; a < nf.size(); ++a)
                    for (size_t b = a + 1; b < nf.size(); ++b)
                        for (size_t cix = b + 1; cix < nf.size(); ++cix)
                            vertexSet.insert({nf[a], nf[b], nf[cix]});
        }
        for (auto [a, b] : edgeSet) {
            FaceLatticeEdge e;
            e.a = a;
            e.b = b;
            int sa = faceSphere[order[a]], sb = faceSphere[order[b]];
            double q = stableInversiveProduct(cfg.spheres[sa].sphere, cfg.spheres[sb].sphere);
            if (std::abs(q) < 1e-6)
                e.angle = std::acos(0.0);  // pi/2
            else if (std::abs(q + 0.5) < 1e-6)
                e.angle = std::acos(0.5);  // pi/3
            else
                e.angle = 0;  // spurious grid contact between non-crossing spheres
            cc.lattice.edges.push_back(e);
        }
        for (const auto& v : vertexSet) cc.lattice.vertices.push_back(v);

        out.components.push_back(std::move(cc));
        out.freeCells += comp.cells;
    }

    std::sort(out.components.begin(), out.components.end(),
              [](const ComplementComponent& a, const ComplementComponent& b) {
                  return a.cells > b.cells;
              });
    return out;
}

VoxelHomology complementCycleRank(const std::vector<InversiveSphere>& balls,
                                  int resolution) {
    if (resolution < 16) throw std::invalid_argument("resolution too coarse");
    for (const auto& s : balls)
        if (s.kind() != SphereKind::Round || !s.round().interiorBounded)
            throw std::invalid_argument("cycle rank expects bounded round balls");

    Point lo(3, std::numeric_limits<double>::infinity());
    Point hi(3, -std::numeric_limits<double>::infinity());
    for (const auto& s : balls) {
        const auto& r = s.round();
        for (int k = 0; k < 3; ++k) {
            lo[k] = std::min(lo[k], r.center[k] - r.radius - 0.5);
            hi[k] = std::max(hi[k], r.center[k] + r.radius + 0.5);
        }
    }
    double span = 0;
    for (int k = 0; k < 3; ++k) span = std::max(span, hi[k] - lo[k]);

    Grid g;
    g.res = resolution;
    g.h = span / resolution;
    g.lo = lo;
    long long total = static_cast<long long>(resolution) * resolution * resolution;
    g.blocked.assign((total + 63) / 64, 0);
    for (const auto& s : balls) {
        const auto& rd = s.round();
        int clo[3], chi2[3];
        for (int k = 0; k < 3; ++k) {
            clo[k] = std::max(
                0, static_cast<int>(std::floor((rd.center[k] - rd.radius - g.lo[k]) / g.h)));
            chi2[k] = std::min(
                g.res - 1,
                static_cast<int>(std::ceil((rd.center[k] + rd.radius - g.lo[k]) / g.h)));
        }
        double r2 = rd.radius * rd.radius;
        for (int z = clo[2]; z <= chi2[2]; ++z)
            for (int y = clo[1]; y <= chi2[1]; ++y)
                for (int x = clo[0]; x <= chi2[0]; ++x) {
                    Point p = g.center(x, y, z);
                    double d2 = 0;
                    for (int k = 0; k < 3; ++k)
                        d2 += (p[k] - rd.center[k]) * (p[k] - rd.center[k]);
                    if (d2 <= r2) g.block(g.idx(x, y, z));
                }
    }

    VoxelHomology out;
    auto freeAt = [&](int x, int y, int z) {
        if (x < 0 || y < 0 || z < 0 || x >= g.res || y >= g.res || z >= g.res)
            return false;  // outside the box counts as absent from the complex
        return !g.isBlocked(g.idx(x, y, z));
    };

    // b0 of the free region (box-border components merged into one) and the
    // count of blocked components (all bounded here), via two flood fills
    auto countComponents = [&](bool freeSide, bool mergeBorder, long long* cells) {
        std::vector<uint64_t> visited((total + 63) / 64, 0);
        auto isVisited = [&](long long i) { return visited[i >> 6] >> (i & 63) & 1; };
        auto visit = [&](long long i) { visited[i >> 6] |= 1ull << (i & 63); };
        const int dx[6] = {1, -1, 0, 0, 0, 0};
        const int dy[6] = {0, 0, 1, -1, 0, 0};
        const int dz[6] = {0, 0, 0, 0, 1, -1};
        long long interior = 0, border = 0, cellCount = 0;
        for (int z0 = 0; z0 < g.res; ++z0)
            for (int y0 = 0; y0 < g.res; ++y0)
                for (int x0 = 0; x0 < g.res; ++x0) {
                    long long start = g.idx(x0, y0, z0);
                    if (g.isBlocked(start) == freeSide || isVisited(start)) continue;
                    bool touchesBorder = false;
                    std::deque<std::array<int, 3>> queue;
                    queue.push_back({x0, y0, z0});
                    visit(start);
                    while (!queue.empty()) {
                        auto [x, y, z] = queue.front();
                        queue.pop_front();
                        ++cellCount;
                        for (int dir = 0; dir < 6; ++dir) {
                            int nx = x + dx[dir], ny = y + dy[dir], nz = z + dz[dir];
                            if (nx < 0 || ny < 0 || nz < 0 || nx >= g.res || ny >= g.res ||
                                nz >= g.res) {
                                touchesBorder = true;
                                continue;
                            }
                            long long ni = g.idx(nx, ny, nz);
                            if (g.isBlocked(ni) == freeSide || isVisited(ni)) continue;
                            visit(ni);
                            queue.push_back({nx, ny, nz});
                        }
                    }
                    (touchesBorder ? border : interior)++;
                }
        if (cells) *cells = cellCount;
        return mergeBorder ? interior + (border > 0 ? 1 : 0) : interior;
    };

    out.b0 = countComponents(true, true, &out.freeCells);
    out.b2 = countComponents(false, false, nullptr);  // bounded blocked pieces

    // chi = V - E + F - C over the cubical complex of free voxels
    long long V = 0, E = 0, F = 0, C = out.freeCells;
    for (int z = 0; z <= g.res; ++z)
        for (int y = 0; y <= g.res; ++y)
            for (int x = 0; x <= g.res; ++x) {
                // vertex (x,y,z): present if any of its 8 incident cells free
                bool v = false;
                for (int ddz = -1; ddz <= 0; ++ddz)
                    for (int ddy = -1; ddy <= 0; ++ddy)
                        for (int ddx = -1; ddx <= 0; ++ddx)
                            v = v || freeAt(x + ddx, y + ddy, z + ddz);
                if (v) ++V;
                // edges along +x/+y/+z from this vertex: present if any of the
                // 4 incident cells free
                if (freeAt(x, y - 1, z - 1) || freeAt(x, y, z - 1) || freeAt(x, y - 1, z) ||
                    freeAt(x, y, z))
                    ++E;  // x-edge
                if (freeAt(x - 1, y, z - 1) || freeAt(x, y, z - 1) || freeAt(x - 1, y, z) ||
                    freeAt(x, y, z))
                    ++E;  // y-edge
                if (freeAt(x - 1, y - 1, z) || freeAt(x, y - 1, z) || freeAt(x - 1, y, z) ||
                    freeAt(x, y, z))
                    ++E;  // z-edge
                // faces normal to z / y / x touching this vertex corner
                if (freeAt(x, y, z - 1) || freeAt(x, y, z)) ++F;  // z-normal
                if (freeAt(x, y - 1, z) || freeAt(x, y, z)) ++F;  // y-normal
                if (freeAt(x - 1, y, z) || freeAt(x, y, z)) ++F;  // x-normal
            }
    out.chi = V - E + F - C;
    out.b1 = out.b0 + out.b2 - out.chi;
    return out;
}

}  // namespace moebius::topology
