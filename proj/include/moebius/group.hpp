#pragma once

// Reflection group machinery: generators from a certified configuration,
// breadth-first element enumeration with ShortLex discovery words and
// matrix-hash deduplication, contracting ball-image trees and limit-set
// point clouds.

#include <map>
#include <unordered_map>
#include <vector>

#include "moebius/config.hpp"
#include "moebius/inversive.hpp"

namespace moebius::group {

struct ReflectionGroup {
    std::vector<std::string> labels;
    std::vector<InversiveSphere> mirrors;
    std::vector<MoebiusMap> generators;
    // Coxeter order m_ij for finite entries (2 or 3); absent pairs commute at
    // infinity (disjoint mirrors)
    std::map<std::pair<int, int>, int> finiteOrders;

    int rank() const { return static_cast<int>(generators.size()); }
    int order(int i, int j) const;  // 1, 2, 3 or 0 for infinity
    // max-norm distance of (g_i g_j)^m_ij from the identity
    double relatorResidual(int i, int j) const;
    double worstRelatorResidual() const;
};

// derives the Coxeter matrix from the pair classification; refuses
// (std::invalid_argument) when any pair falls outside disjoint / pi-2 / pi-3
ReflectionGroup buildReflectionGroup(const config::SphereConfiguration& cfg,
                                     double tol = 1e-9);

struct GroupElement {
    std::vector<int> word;  // ShortLex discovery word (empty = identity)
    MoebiusMap matrix;
};

struct OrbitResult {
    std::vector<GroupElement> elements;    // BFS order: by length, then lex
    std::vector<long long> countsPerDepth; // countsPerDepth[d] = #elements of length d
    bool truncated = false;
};

// all distinct elements of word length <= depth, deduplicated by snapped
// matrix hash with distance re-verification; the discovery word of each
// element is its ShortLex normal form
OrbitResult orbit(const ReflectionGroup& g, int depth, std::size_t cap = 1000000);

// re-derives every element matrix from its word and checks the words are
// pairwise distinct, reduced, and prefix-closed; returns the worst matrix
// reconstruction error (the word/matrix dedup cross-check)
double verifyWordMatrixConsistency(const ReflectionGroup& g, const OrbitResult& orbit);

struct BallImage {
    int depth = 0;
    int sourceSphere = -1;  // generator ball inside the deepest reflection
    int lastGenerator = -1; // generator applied at this step
    int parent = -1;        // index of the containing depth-(d-1) image
    InversiveSphere image;
    double euclideanRadius = 0;
};

struct BallOrbitResult {
    std::vector<BallImage> images;  // grouped by increasing depth
    std::vector<long long> countsPerDepth;
    std::vector<double> maxRadiusPerDepth;
    bool truncated = false;
    long long nestingChecked = 0;
    long long nestingViolations = 0;
};

// Contracting ball-image tree: a node at depth d is g(B_j) for a reduced
// word g = s_{i1}..s_{id} whose consecutive mirrors are disjoint, with
// m(i_d, j) infinite; its parent s_{i1}..s_{i(d-1)}(B_{i_d}) contains it
// (reflection maps everything off a mirror's ball into that ball).  Images
// along finite-order transitions stay inside the union of the two parent
// balls and revisit the same pencil, so the tree is the contracting subset
// of the full image set; containment is still verified numerically for
// every emitted node.
BallOrbitResult ballOrbit(const ReflectionGroup& g, int depth, std::size_t cap = 100000);

struct LimitCloud {
    std::vector<Point> points;
    std::vector<double> radii;
    std::vector<double> maxRadiusPerDepth;
    std::vector<double> medianRadiusPerDepth;
    long long pointsInsideParent = 0;
    bool truncated = false;
};

// centers of the deepest-generation tree balls, weighted by radius
LimitCloud limitCloud(const ReflectionGroup& g, int depth, std::size_t cap = 100000);

// The chain balls together with their images under the reflections in the
// base planes: the handlebody swept out by the first generating mirrors.
std::vector<InversiveSphere> handlebodyBalls(const config::SphereConfiguration& cfg);

}  // namespace moebius::group
