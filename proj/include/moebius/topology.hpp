#pragma once

// Combinatorial topology of ball unions and their complements: nerves,
// GF(2) Betti numbers, grid flood-fill complement analysis with face
// lattices, labeled lattice isomorphism, the Andreev conditions, and the
// deformation dimension count.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "moebius/config.hpp"
#include "moebius/inversive.hpp"

namespace moebius::topology {

// --- nerve ----------------------------------------------------------------

struct NerveComplex {
    int vertices = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 4>> tetrahedra;
    // simplices whose feasibility test hit the iteration cap
    std::vector<std::vector<int>> unknown;
};

// Nerve of a family of round balls up to the given dimension (<= 3).
// Pairwise: centers distance < r + r'.  Triples and quadruples: cyclic
// projection onto the balls from the radical-center seed; nonempty when a
// point sits in every ball with slack, empty when the limit cycle's
// displacement certifies separation, otherwise recorded as unknown.
NerveComplex nerve(const std::vector<InversiveSphere>& balls, int maxDim = 2);

struct BettiNumbers {
    long long b0 = 0, b1 = 0, b2 = 0;
    long long eulerCharacteristic() const { return b0 - b1 + b2; }
};

// simplicial homology ranks over GF(2) via boundary-matrix elimination;
// refuses (std::invalid_argument) if unknown simplices are present
BettiNumbers betti(const NerveComplex& c);

// --- complement analysis ----------------------------------------------------

struct FaceLatticeFace {
    std::string sphereLabel;
    long long cells = 0;  // boundary cells in the cluster (size diagnostic)
};

struct FaceLatticeEdge {
    int a = 0, b = 0;       // face indices
    double angle = 0;       // dihedral angle label (pi/2 or pi/3); 0 = unknown
};

struct FaceLattice {
    std::vector<FaceLatticeFace> faces;
    std::vector<FaceLatticeEdge> edges;
    std::vector<std::array<int, 3>> vertices;  // face triples meeting at a point
};

struct ComplementComponent {
    long long cells = 0;
    bool bounded = true;
    FaceLattice lattice;
};

struct ComplementAnalysis {
    int resolution = 0;
    long long freeCells = 0;
    std::vector<ComplementComponent> components;  // largest first
    int componentCount() const { return static_cast<int>(components.size()); }
    // index of the bounded component with the most cells, -1 if none
    int primaryBounded() const;
};

// Flood fill of R^n minus the closed balls on a uniform grid over the
// configuration's bounding box (the designated half-spaces of plane mirrors
// are removed too; the grid box is padded so everything outside it on the
// free side is connected and counted as the unbounded component).
// n = 3 only; resolution = cells per axis.
ComplementAnalysis complementComponents(const config::SphereConfiguration& cfg,
                                        int resolution = 256);

struct VoxelHomology {
    long long b0 = 0, b1 = 0, b2 = 0;
    long long chi = 0;
    long long freeCells = 0;
};

// Betti numbers of the sampled complement of a ball union in R^3 on a
// uniform grid: b0 by flood fill (box-border components merged), b2 as the
// count of bounded blocked components (the 2-cycles around them), b1 from
// the Euler characteristic of the free voxel complex,
// b1 = b0 + b2 - (V - E + F - C).
VoxelHomology complementCycleRank(const std::vector<InversiveSphere>& balls,
                                  int resolution);

// --- labeled lattice isomorphism --------------------------------------------

// Backtracking search for a face bijection preserving edge incidence and
// dihedral angle labels (sphere labels are not required to match).  Returns
// the mapping or nothing when the search space is exhausted.
std::optional<std::vector<int>> latticeIsomorphic(const FaceLattice& a,
                                                  const FaceLattice& b);

// --- Andreev conditions ------------------------------------------------------

struct AbstractPolyhedron {
    // 2-faces of an abstract trivalent 3-polyhedron
    int faces = 0;
    struct Edge {
        int a, b;
        double angle;  // dihedral angle in (0, pi/2]
    };
    std::vector<Edge> edges;
    std::vector<std::array<int, 3>> vertices;  // trivalent corners
};

struct AndreevViolation {
    std::string rule;
    std::vector<int> support;  // faces or edges involved
    double value = 0;
};

struct AndreevResult {
    bool trivalent = true;
    std::vector<AndreevViolation> violations;
    bool pass() const { return trivalent && violations.empty(); }
};

// The compact-polyhedron condition list used here (after the classification
// of non-obtuse hyperbolic polyhedra): angles in (0, pi/2]; edge angles of
// every trivalent vertex sum to more than pi; prismatic 3-circuits sum to
// less than pi; prismatic 4-circuits to less than 2 pi.  Non-trivalent input
// is refused.
AndreevResult andreevCheck(const AbstractPolyhedron& p);

AbstractPolyhedron cubePolyhedron(double angle);          // combinatorial cube
AbstractPolyhedron dodecahedronPolyhedron(double angle);  // combinatorial dodecahedron

// --- dimension count ----------------------------------------------------------

struct DimensionCount {
    long long carriers = 0;     // N: deforming sphere parameters' carriers
    long long constraints = 0;  // E: angle-constrained pairs
    long long dimension() const { return 4 * carriers - constraints - 10; }
};

// parameter-minus-constraint count 4N - E - 10 on both sides of the
// homomorphism: faces of the lattice for the Gamma side, distinct spheres
// for the G side
DimensionCount dimensionFromLattice(const FaceLattice& l);
DimensionCount dimensionFromConfiguration(const config::SphereConfiguration& cfg);

}  // namespace moebius::topology
