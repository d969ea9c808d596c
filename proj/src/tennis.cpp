#include <cmath>

#include "config_internal.hpp"
#include "moebius/config.hpp"

namespace moebius::config {

// Cube-chain construction on S^3.  Nine unit blocks form an arch between two
// cubes standing on the floor plane x3 = 0 near the x2- and x1-axes; the
// sphere S4 = S^2(0, R) meets the two vertex spheres nearest the origin
// orthogonally and the ones directly above them at exterior angle pi/3,
// every other pair is orthogonal, pi/3 or disjoint.
//
// The closed forms behind the placement: with unit edges and vertex-sphere
// radius 1/sqrt(3), a sphere pair along a lattice edge realizes product -1/2;
// choosing R = sqrt(3) makes a vertex sphere at distance d from the origin
// satisfy product (10/3 - d^2)/2 against S4, so d^2 = 10/3 gives the
// orthogonal contact and d^2 = 13/3 the pi/3 contact exactly.  The chain foot
// (delta, c, 0) with c = delta + 1 and delta = (sqrt(51) - 3)/6 solves
// delta^2 + c^2 = 10/3.
SphereConfiguration buildTennisChain(int k) {
    if (k < 0) throw std::invalid_argument("refinement must be >= 0");
    FaceCover fc = faceCoverSolve(1.0, /*topFace=*/true);
    if (k >= 1) {
        // The mandated refinement stacks cubes of edge s on the unit top face
        // inside the twelve-sphere family.  The second-level vertex spheres of
        // such a stack sit at distance sqrt(rho_i^2 + rho_k^2 + s^2) from the
        // inner-ring spheres, giving product -s^2 / (2 rho_i rho_k), which is
        // neither 0 nor -1/2 nor <= -1.  No valid configuration exists.
        double q = -(fc.smallSquareSide * fc.smallSquareSide) /
                   (2.0 * fc.ringRadius * fc.secondRingRadius);
        throw ConstructionInfeasible(
            "refinement k=" + std::to_string(k) +
            " infeasible: sub-cube stack meets the inner ring at product " +
            std::to_string(q) + " (expected 0, -1/2 or <= -1)");
    }

    SphereConfiguration cfg;
    cfg.ambient = 3;
    cfg.construction = "tennis";
    cfg.refinement = k;

    const double delta = (std::sqrt(51.0) - 3.0) / 6.0;
    const double c = delta + 1.0;
    const double R = std::sqrt(3.0);

    // walls: positive side faces away from the chain
    auto plane = [&](Point u) { return InversiveSphere::fromPlane(u, 0.0); };
    cfg.spheres.push_back({"S1", {"base coordinate plane x1=0"}, plane({-1, 0, 0}), true});
    cfg.spheres.push_back({"S2", {"base coordinate plane x2=0"}, plane({0, -1, 0}), true});
    cfg.spheres.push_back({"S3", {"base coordinate plane x3=0"}, plane({0, 0, -1}), true});
    cfg.spheres.push_back(
        {"S4", {"base sphere S2(0,R)"}, InversiveSphere::fromCenterRadius({0, 0, 0}, R), true});

    auto block = [&](double x, double y, double z, const std::string& role) {
        Block b;
        b.lo = {x, y, z};
        b.edge = 1.0;
        b.axes = {0, 1, 2};
        b.role = role;
        cfg.blocks.push_back(b);
    };
    // first unit cube, ascent, apex, descent, second unit cube
    block(delta, c, 0, "unit");
    block(delta, c, 1, "chain");
    block(delta, c, 2, "chain");
    block(delta, c, 3, "chain");
    block(delta, delta, 3, "shared");
    block(c, delta, 3, "chain");
    block(c, delta, 2, "chain");
    block(c, delta, 1, "chain");
    block(c, delta, 0, "unit");

    cfg.coveredFaces = detail::exposedFaces(cfg.blocks, /*wallsAt0=*/true);

    detail::SphereAccumulator acc{&cfg, &fc};
    for (size_t i = 0; i < cfg.coveredFaces.size(); ++i)
        acc.coverFace(cfg.coveredFaces[i], static_cast<int>(i));

    cfg.targetSamples = faceSampleGrid(cfg, 6);

    cfg.params["delta"] = delta;
    cfg.params["c"] = c;
    cfg.params["R"] = R;
    cfg.params["vertex_radius"] = fc.vertexRadius;
    cfg.params["ring_offset"] = fc.ringOffset;
    cfg.params["ring_radius"] = fc.ringRadius;
    cfg.params["closer_radius"] = fc.closerRadius;
    cfg.params["small_cube_edge"] = fc.smallSquareSide;
    cfg.params["second_ring_radius"] = fc.secondRingRadius;
    return cfg;
}

}  // namespace moebius::config
