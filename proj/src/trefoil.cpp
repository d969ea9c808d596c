#include <cmath>

#include "config_internal.hpp"
#include "moebius/config.hpp"

namespace moebius::config {

// Spun-trefoil ball covering in S^4: two 3x3x3 block assemblies (their
// boundary 2-spheres are the trivial link components S0, S1) in the parallel
// 3-planes w = 0 and w = 54, fused by a tube of unit 3-cubes whose course
// dips to w = -27 and rises to w = 81, crossing the big-cube planes away from
// the blocks.  Every exposed square 2-face carries the four-plus-one covering
// family (four balls orthogonal to the corner balls and at pi/3 to each
// other, a central ball orthogonal to those four); corner balls sit on the
// unit lattice, so every sphere pair lands exactly on product 0, -1/2 or
// below -1.
//
// Tube course (unit cells, low corners):
//   (1,1,z,0)   z = 3..5        rise out of Q0's top tile in R^3 x {0}
//   (x,1,6,0)   x = 1..4        shift aside within R^3 x {0}
//   (4,1,6,w)   w = 0..80       up to the w = 81 plane
//   (4,1,z,81)  z = 6..8        within R^3 x {81}
//   (4,1,9,w)   w = 80..-27     down through w = 54 and w = 0 (clear of both
//                               blocks) to the w = -27 plane
//   (4,1,z,-27) z = 9..11       within R^3 x {-27}
//   (4,1,12,w)  w = -27..80     back up to w = 81
//   (x,1,12,81) x = 4..1        shift back within R^3 x {81}
//   (1,1,z,81)  z = 11..3       descend within R^3 x {81}
//   (1,1,3,w)   w = 80..54      down onto Q1's top tile
SphereConfiguration buildSpunTrefoil(int k) {
    if (k < 0) throw std::invalid_argument("thinning must be >= 0");
    FaceCover fc = faceCoverSolve(1.0, /*topFace=*/true);
    if (k >= 1) {
        // same obstruction as the tennis refinement: the 4+8k junction family
        // would put sub-scale corner balls inside the ring airspace
        double q = -(fc.smallSquareSide * fc.smallSquareSide) /
                   (2.0 * fc.ringRadius * fc.secondRingRadius);
        throw ConstructionInfeasible(
            "thinning k=" + std::to_string(k) +
            " infeasible: refined junction ring meets the tube at product " +
            std::to_string(q));
    }

    SphereConfiguration cfg;
    cfg.ambient = 4;
    cfg.construction = "spun_trefoil";
    cfg.refinement = k;

    auto cell = [&](int x, int y, int z, int w, std::array<int, 3> axes,
                    const std::string& role) {
        Block b;
        b.edge = 1.0;
        b.axes = axes;
        b.lo = {double(x), double(y), double(z), double(w)};
        b.role = role;
        cfg.blocks.push_back(b);
    };

    // big blocks Q0 (w = 0) and Q1 (w = 54)
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) {
                cell(i, j, l, 0, {0, 1, 2}, "Q0");
                cell(i, j, l, 54, {0, 1, 2}, "Q1");
            }

    const std::array<int, 3> xyz{0, 1, 2};  // cells inside a 3-plane
    const std::array<int, 3> xyw{0, 1, 3};  // cells extruded in w

    for (int z = 3; z <= 5; ++z) cell(1, 1, z, 0, xyz, "tube rise @w=0");
    for (int x = 1; x <= 4; ++x) cell(x, 1, 6, 0, xyz, "tube shift @w=0");
    for (int w = 0; w <= 80; ++w) cell(4, 1, 6, w, xyw, "tube up to 81");
    for (int z = 6; z <= 8; ++z) cell(4, 1, z, 81, xyz, "tube @w=81");
    for (int w = 80; w >= -27; --w) cell(4, 1, 9, w, xyw, "tube down to -27");
    for (int z = 9; z <= 11; ++z) cell(4, 1, z, -27, xyz, "tube @w=-27");
    for (int w = -27; w <= 80; ++w) cell(4, 1, 12, w, xyw, "tube up to 81 again");
    for (int x = 4; x >= 1; --x) cell(x, 1, 12, 81, xyz, "tube shift back @w=81");
    for (int z = 11; z >= 3; --z) cell(1, 1, z, 81, xyz, "tube descend @w=81");
    for (int w = 80; w >= 54; --w) cell(1, 1, 3, w, xyw, "tube down onto Q1");

    cfg.coveredFaces = detail::exposedFaces(cfg.blocks, /*wallsAt0=*/false);

    detail::SphereAccumulator acc{&cfg, &fc};
    for (size_t i = 0; i < cfg.coveredFaces.size(); ++i)
        acc.coverFace(cfg.coveredFaces[i], static_cast<int>(i));

    cfg.targetSamples = faceSampleGrid(cfg, 4);

    cfg.params["plane_low"] = -27;
    cfg.params["plane_q0"] = 0;
    cfg.params["plane_q1"] = 54;
    cfg.params["plane_high"] = 81;
    cfg.params["big_edge"] = 3;
    cfg.params["vertex_radius"] = fc.vertexRadius;
    cfg.params["ring_offset"] = fc.ringOffset;
    cfg.params["ring_radius"] = fc.ringRadius;
    cfg.params["closer_radius"] = fc.closerRadius;
    return cfg;
}

}  // namespace moebius::config
