#pragma once

// Covering family for a cube face of side a: four vertex spheres of radius
// a/sqrt(3) at the corners (adjacent pairs meet at exterior angle pi/3), an
// inner ring of four spheres on the face midlines orthogonal to the vertex
// ring with pi/3 between ring neighbours, and either a central closer sphere
// orthogonal to the ring or (top faces) a second ring of four spheres whose
// centers span the small square f_s.  All solved from the stated angle
// conditions by Newton iteration on the closed-form product expressions.

#include <stdexcept>
#include <string>

#include "moebius/inversive.hpp"

namespace moebius {

struct ConstructionInfeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FaceCover {
    double side = 1.0;       // a
    double vertexRadius = 0; // rho_v = a/sqrt(3)
    double ringOffset = 0;   // t: inner ring centers at face center +- t on midlines
    double ringRadius = 0;   // rho_i
    double closerRadius = 0; // rho_c, central sphere orthogonal to the ring
    // top-face variant: second ring at corners of the inner square f_s
    bool topFace = false;
    double smallSquareSide = 0;  // s, the mandated small-cube edge
    double secondRingRadius = 0; // rho_k = s/sqrt(3)
    double maxResidual = 0;      // worst constraint residual after the solves
};

// Solve the covering family for side a.  When topFace is set the second-ring
// system is solved as well and s is returned in smallSquareSide.
FaceCover faceCoverSolve(double a, bool topFace = false);

// exact reference values for a = 1 (used as test oracles):
//   t = (3 - sqrt 7)/2,  rho_i = t sqrt(2/3),  rho_c = t/sqrt 3,
//   s = 8 - 3 sqrt 7,    rho_k = s/sqrt 3

}  // namespace moebius
