#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "moebius/topology.hpp"

namespace moebius::topology {

namespace {

const double kPi = std::acos(-1.0);

// prismatic k-circuit: a cyclic sequence of k distinct faces, consecutive
// ones sharing an edge, which is not the link of a vertex (k = 3) and has no
// chords or repeated vertices (k = 4)
struct CircuitScan {
    const AbstractPolyhedron& p;
    std::map<std::pair<int, int>, double> angle;
    std::vector<std::set<int>> neigh;
    std::set<std::array<int, 3>> vertexTriples;

    explicit CircuitScan(const AbstractPolyhedron& poly) : p(poly) {
        neigh.resize(p.faces);
        for (const auto& e : p.edges) {
            angle[{std::min(e.a, e.b), std::max(e.a, e.b)}] = e.angle;
            neigh[e.a].insert(e.b);
            neigh[e.b].insert(e.a);
        }
        for (auto v : p.vertices) {
            std::sort(v.begin(), v.end());
            vertexTriples.insert(v);
        }
    }

    double angleOf(int a, int b) const {
        return angle.at({std::min(a, b), std::max(a, b)});
    }
    bool adjacent(int a, int b) const { return neigh[a].count(b) > 0; }
};

}  // namespace

AndreevResult andreevCheck(const AbstractPolyhedron& p) {
    AndreevResult res;

    // trivalence: every vertex is a triple; every face-pair edge count sane
    for (const auto& v : p.vertices)
        if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) res.trivalent = false;
    if (p.vertices.empty()) res.trivalent = false;
    if (!res.trivalent) return res;

    // domain: non-obtuse dihedral angles only
    for (const auto& e : p.edges)
        if (e.angle > kPi / 2 + 1e-12)
            throw std::invalid_argument("obtuse dihedral angle; outside the non-obtuse domain");

    CircuitScan scan(p);

    // (1) positive angles
    for (size_t i = 0; i < p.edges.size(); ++i) {
        const auto& e = p.edges[i];
        if (!(e.angle > 0))
            res.violations.push_back(
                {"angle not positive", {static_cast<int>(i)}, e.angle});
    }

    // (2) each vertex: angle sum > pi
    for (const auto& v : p.vertices) {
        double s = scan.angleOf(v[0], v[1]) + scan.angleOf(v[1], v[2]) +
                   scan.angleOf(v[0], v[2]);
        if (!(s > kPi + 1e-12))
            res.violations.push_back({"vertex angle sum <= pi", {v[0], v[1], v[2]}, s});
    }

    // (3) prismatic 3-circuits: angle sum < pi
    for (int a = 0; a < p.faces; ++a)
        for (int b : scan.neigh[a]) {
            if (b <= a) continue;
            for (int c : scan.neigh[b]) {
                if (c <= b || !scan.adjacent(a, c)) continue;
                std::array<int, 3> tri{a, b, c};
                if (scan.vertexTriples.count(tri)) continue;  // vertex link
                double s = scan.angleOf(a, b) + scan.angleOf(b, c) + scan.angleOf(a, c);
                if (!(s < kPi - 1e-12))
                    res.violations.push_back({"prismatic 3-circuit sum >= pi", {a, b, c}, s});
            }
        }

    // (4) prismatic 4-circuits: angle sum < 2 pi.  A 4-circuit a-b-c-d is
    // prismatic when opposite faces are not adjacent and no three consecutive
    // members share a vertex.
    for (int a = 0; a < p.faces; ++a)
        for (int b : scan.neigh[a]) {
            if (b <= a) continue;
            for (int c : scan.neigh[b]) {
                if (c == a || c < a) continue;
                for (int d : scan.neigh[c]) {
                    if (d <= a || d == b || !scan.adjacent(d, a)) continue;
                    if (scan.adjacent(a, c) || scan.adjacent(b, d)) continue;  // chord
                    bool touchesVertex = false;
                    for (auto t : {std::array<int, 3>{a, b, c}, std::array<int, 3>{b, c, d},
                                   std::array<int, 3>{c, d, a}, std::array<int, 3>{d, a, b}}) {
                        std::sort(t.begin(), t.end());
                        if (scan.vertexTriples.count(t)) touchesVertex = true;
                    }
                    if (touchesVertex) continue;
                    double s = scan.angleOf(a, b) + scan.angleOf(b, c) + scan.angleOf(c, d) +
                               scan.angleOf(d, a);
                    if (!(s < 2 * kPi - 1e-12))
                        res.violations.push_back(
                            {"prismatic 4-circuit sum >= 2 pi", {a, b, c, d}, s});
                }
            }
        }

    return res;
}

AbstractPolyhedron cubePolyhedron(double angle) {
    // faces 0..5: 0/1 = bottom/top, 2..5 = sides in cyclic order
    AbstractPolyhedron p;
    p.faces = 6;
    auto edge = [&](int a, int b) { p.edges.push_back({a, b, angle}); };
    for (int s = 0; s < 4; ++s) {
        int cur = 2 + s, nxt = 2 + (s + 1) % 4;
        edge(cur, nxt);
        edge(0, cur);
        edge(1, cur);
        p.vertices.push_back({0, cur, nxt});
        p.vertices.push_back({1, cur, nxt});
    }
    return p;
}

AbstractPolyhedron dodecahedronPolyhedron(double angle) {
    // standard dodecahedron face adjacency: face 0 bottom, 1..5 lower belt,
    // 6..10 upper belt, 11 top
    AbstractPolyhedron p;
    p.faces = 12;
    std::set<std::pair<int, int>> edges;
    auto addEdge = [&](int a, int b) {
        auto key = std::minmax(a, b);
        if (edges.insert(key).second) p.edges.push_back({key.first, key.second, angle});
    };
    for (int i = 0; i < 5; ++i) {
        int li = 1 + i, lnext = 1 + (i + 1) % 5;
        int ui = 6 + i, unext = 6 + (i + 1) % 5;
        addEdge(0, li);
        addEdge(li, lnext);
        addEdge(li, ui);
        addEdge(li, unext);
        addEdge(ui, unext);
        addEdge(11, ui);
        // vertices: bottom ring and the two belts
        p.vertices.push_back({0, li, lnext});
        p.vertices.push_back({li, lnext, unext});
        p.vertices.push_back({li, ui, unext});
        p.vertices.push_back({ui, unext, 11});
    }
    return p;
}

}  // namespace moebius::topology
