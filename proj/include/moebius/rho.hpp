#pragma once

// The geometric homomorphism rho: the abstract reflection group of a
// polyhedron's face lattice maps onto the Moebius reflection group by sending
// the reflection in each face to the inversion in the sphere carrying it;
// faces on the same sphere share an image, which is where the kernel comes
// from.

#include <string>
#include <vector>

#include "moebius/group.hpp"
#include "moebius/topology.hpp"

namespace moebius::rho {

struct FaceAssignment {
    // face index in the lattice -> generator index in the group
    std::vector<int> generatorOfFace;
    const group::ReflectionGroup* grp = nullptr;
    int faceCount() const { return static_cast<int>(generatorOfFace.size()); }
};

// total assignment from the side decomposition: each face maps to the
// reflection in its source sphere (faces on the same sphere coincide)
FaceAssignment assignFaces(const topology::FaceLattice& lattice,
                           const group::ReflectionGroup& grp);

// image of a word in the abstract face reflections
MoebiusMap rhoImage(const FaceAssignment& a, const std::vector<int>& faceWord);

// verify every face-lattice relator (a_f a_g)^m maps to the identity, m
// read off the edge angle; returns the worst residual, throws
// std::invalid_argument on an edge with no pi/m label
double verifyRhoRelators(const FaceAssignment& a, const topology::FaceLattice& lattice,
                         double tol = 1e-8);

// face indices carried by a given sphere label
std::vector<int> facesOnSphere(const topology::FaceLattice& lattice,
                               const std::string& sphereLabel);

}  // namespace moebius::rho
