#pragma once

// Sphere configurations: the S^3 cube-chain construction and the S^4
// spun-trefoil ball covering, both assembled from axis-aligned unit blocks
// whose exposed square faces carry covering families (see facecover.hpp).

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moebius/facecover.hpp"
#include "moebius/inversive.hpp"

namespace moebius::config {

// Axis-aligned cube of dimension 3 embedded in R^n (n = 3 or 4): extent
// along three axes, fixed coordinate elsewhere.
struct Block {
    Point lo;                  // min corner, length n
    double edge = 1.0;
    std::array<int, 3> axes{0, 1, 2};
    std::string role;          // unit | chain | shared | big | tube

    int ambient() const { return static_cast<int>(lo.size()); }
    Point center() const;
};

// Square 2-face of a block.
struct BlockFace {
    int block = -1;
    int normalAxis = 0;   // one of the block's extent axes
    bool high = false;
    Point center;         // n-dim center of the face
    int uAxis = 0, vAxis = 0;
    double side = 1.0;
};

struct LabeledSphere {
    std::string label;                    // unique
    std::vector<std::string> provenance;  // all construction roles of this sphere
    InversiveSphere sphere;
    bool base = false;                    // S1..S4 of the tennis construction
};

struct SphereConfiguration {
    int ambient = 3;
    std::string construction;  // tennis | spun_trefoil | custom
    int refinement = 0;
    std::vector<LabeledSphere> spheres;
    std::vector<Block> blocks;
    std::vector<BlockFace> coveredFaces;
    std::vector<Point> targetSamples;      // sigma disc / knot samples
    std::map<std::string, double> params;  // solved lengths, 17 digits on export

    int sphereCount() const { return static_cast<int>(spheres.size()); }
    const LabeledSphere* findLabel(const std::string& label) const;
};

// --- pair classification -----------------------------------------------

enum class ValidPairKind { Disjoint, Ortho, AnglePi3 };

struct PairViolation {
    int i = 0, j = 0;
    double product = 0;
    std::string note;
};

struct PairMatrixSummary {
    long long disjoint = 0, ortho = 0, pi3 = 0;
    double worstAngleResidual = 0;  // max |q - {0,-1/2}| over angle pairs
    double minDisjointMargin = 0;   // min (-1 - q) over disjoint pairs
    std::vector<PairViolation> violations;
    bool valid() const { return violations.empty(); }
};

struct CoverageReport {
    bool checked = false;
    bool covered = false;
    long long samples = 0;
    double minDepth = 0;    // smallest best-ball Euclidean depth over samples
    Point worstSample;
};

struct CertificateReport {
    PairMatrixSummary pairs;
    CoverageReport coverage;
    bool pass() const { return pairs.valid() && (!coverage.checked || coverage.covered); }
};

// classify all pairs; angle products must sit within tol of 0 or -1/2,
// tangencies (|q -+ 1| <= tol) are rejected
PairMatrixSummary classifyAllPairs(const SphereConfiguration& cfg, double tol = 1e-9);

// full certificate: pair classes + strict interior coverage of the target
// samples by the non-base balls
CertificateReport validateConfiguration(const SphereConfiguration& cfg,
                                        int samplesPerEdge = 7, double tol = 1e-9);

// --- builders ------------------------------------------------------------

// S^3 cube-chain construction (9 unit blocks arching between two cubes that
// rest on the floor plane, sphere S4 of radius sqrt(3) meeting the two
// nearest vertex spheres orthogonally).  k = 0 is the canonical instance;
// k >= 1 requests the sub-cube refinement, which is geometrically
// incompatible with the pi/2-pi/3 certificate and raises
// ConstructionInfeasible with the offending residual.
SphereConfiguration buildTennisChain(int k);

// S^4 spun-trefoil ball covering: two 3x3x3 block assemblies in the planes
// w = 0 and w = 54 joined by a unit tube visiting w = -27 and w = 81.
SphereConfiguration buildSpunTrefoil(int k);

// number of spheres the combinatorics predicts (used as an independent
// cross-check in tests): lattice corner points + per-face ring and closer
struct SphereBudget {
    long long vertexSpheres = 0;
    long long ringSpheres = 0;
    long long closerSpheres = 0;
    long long baseSpheres = 0;
    long long total() const {
        return vertexSpheres + ringSpheres + closerSpheres + baseSpheres;
    }
};
SphereBudget countBudget(const SphereConfiguration& cfg);

// deterministic sample grid on the closed covered faces
std::vector<Point> faceSampleGrid(const SphereConfiguration& cfg, int perEdge);

}  // namespace moebius::config
