#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "moebius/config.hpp"
#include "moebius/group.hpp"

using namespace moebius;
using namespace moebius::group;

namespace {

config::SphereConfiguration baseOnly() {
    config::SphereConfiguration cfg;
    cfg.ambient = 3;
    cfg.construction = "custom";
    cfg.spheres.push_back({"S1", {"p"}, InversiveSphere::fromPlane({-1, 0, 0}, 0), true});
    cfg.spheres.push_back({"S2", {"p"}, InversiveSphere::fromPlane({0, -1, 0}, 0), true});
    cfg.spheres.push_back({"S3", {"p"}, InversiveSphere::fromPlane({0, 0, -1}, 0), true});
    cfg.spheres.push_back(
        {"S4", {"b"}, InversiveSphere::fromCenterRadius({0, 0, 0}, 1.0), true});
    return cfg;
}

}  // namespace

TEST_CASE("coxeter orders from pair classes") {
    // two orthogonal planes: m = 2
    config::SphereConfiguration cfg;
    cfg.ambient = 3;
    cfg.spheres.push_back({"A", {}, InversiveSphere::fromPlane({1, 0, 0}, 0), false});
    cfg.spheres.push_back({"B", {}, InversiveSphere::fromPlane({0, 1, 0}, 0), false});
    auto g2 = buildReflectionGroup(cfg);
    CHECK(g2.order(0, 1) == 2);
    auto sq = (g2.generators[0] * g2.generators[1]) * (g2.generators[0] * g2.generators[1]);
    CHECK(sq.isIdentity(1e-12));

    // product -1/2 pair: m = 3 and (g1 g2)^3 = 1
    double r = std::sqrt(3.0) / 3.0;
    config::SphereConfiguration cfg3;
    cfg3.ambient = 3;
    cfg3.spheres.push_back({"A", {}, InversiveSphere::fromCenterRadius({0, 0, 0}, r), false});
    cfg3.spheres.push_back({"B", {}, InversiveSphere::fromCenterRadius({1, 0, 0}, r), false});
    auto g3 = buildReflectionGroup(cfg3);
    CHECK(g3.order(0, 1) == 3);
    CHECK(g3.relatorResidual(0, 1) <= 1e-12);

    // the tetrahedral base: all orders 2
    auto gb = buildReflectionGroup(baseOnly());
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK(gb.order(i, j) == 2);
}

TEST_CASE("uncertified configurations are refused") {
    config::SphereConfiguration cfg;
    cfg.ambient = 3;
    cfg.spheres.push_back({"A", {}, InversiveSphere::fromCenterRadius({0, 0, 0}, 1.0), false});
    cfg.spheres.push_back(
        {"B", {}, InversiveSphere::fromCenterRadius({0.4, 0, 0}, 1.0), false});  // nested-ish
    CHECK_THROWS_AS(buildReflectionGroup(cfg), std::invalid_argument);
}

TEST_CASE("orbit of the base group matches brute force over (Z_2)^4") {
    auto g = buildReflectionGroup(baseOnly());
    auto orb = orbit(g, 4, 1000);
    // brute force: words over 4 commuting involutions = subsets; count by
    // word length = binomial coefficients
    REQUIRE(orb.countsPerDepth.size() >= 5);
    CHECK(orb.countsPerDepth[0] == 1);
    CHECK(orb.countsPerDepth[1] == 4);
    CHECK(orb.countsPerDepth[2] == 6);
    CHECK(orb.countsPerDepth[3] == 4);
    CHECK(orb.countsPerDepth[4] == 1);
    CHECK(orb.elements.size() == 16);
    CHECK_FALSE(orb.truncated);
    CHECK(verifyWordMatrixConsistency(g, orb) <= 1e-12);
}

TEST_CASE("tennis orbit: depth-2 count equals the pair-class prediction") {
    auto cfg = config::buildTennisChain(0);
    auto g = buildReflectionGroup(cfg);
    auto pairs = config::classifyAllPairs(cfg);
    auto orb = orbit(g, 2, 200000);
    long long n = g.rank();
    // reduced words of length 2 modulo the commuting merges
    long long expected = n * (n - 1) - pairs.ortho;
    CHECK(orb.countsPerDepth[2] == expected);
    CHECK(verifyWordMatrixConsistency(g, orb) <= 1e-9);
}

TEST_CASE("relator exactness on the tennis group") {
    auto g = buildReflectionGroup(config::buildTennisChain(0));
    CHECK(g.worstRelatorResidual() <= 1e-8);
}

TEST_CASE("a reflection fixes concentric spheres through its mirror plane") {
    auto cfg = baseOnly();
    auto g = buildReflectionGroup(cfg);
    // reflect the ball of S4 in the plane S1: the image is S4 itself
    auto img = g.generators[0].apply(cfg.spheres[3].sphere);
    CHECK(std::abs(lorentz(img.vec(), cfg.spheres[3].sphere.vec()) - 1.0) < 1e-12);
}

TEST_CASE("ball orbit tree: nesting and contraction") {
    auto g = buildReflectionGroup(config::buildTennisChain(0));
    auto balls = ballOrbit(g, 3, 30000);
    CHECK(balls.nestingViolations == 0);
    CHECK(balls.nestingChecked > 1000);
    REQUIRE(balls.maxRadiusPerDepth.size() >= 4);
    // depth 0 includes the planes (infinite radius); from depth 1 on the
    // maxima contract strictly
    for (size_t d = 2; d < balls.maxRadiusPerDepth.size(); ++d)
        CHECK(balls.maxRadiusPerDepth[d] < balls.maxRadiusPerDepth[d - 1]);
    // parents really are one level up
    for (const auto& im : balls.images)
        if (im.depth > 0) CHECK(balls.images[im.parent].depth == im.depth - 1);
}

TEST_CASE("base-only group is finite: the contracting tree is empty") {
    auto g = buildReflectionGroup(baseOnly());
    auto balls = ballOrbit(g, 3, 1000);
    CHECK(balls.images.size() == 4);  // only the generator balls, no disjoint pairs
    auto cloud = limitCloud(g, 2, 1000);
    CHECK(cloud.points.empty());  // finite group, empty limit set
}

TEST_CASE("limit cloud diagnostics on the tennis group") {
    auto cfg = config::buildTennisChain(0);
    auto g = buildReflectionGroup(cfg);
    auto cloud = limitCloud(g, 3, 30000);
    REQUIRE_FALSE(cloud.points.empty());
    CHECK(cloud.pointsInsideParent == static_cast<long long>(cloud.points.size()));
    // cloud points avoid the fundamental polyhedron: every point lies inside
    // some generating ball
    int outside = 0;
    for (const auto& p : cloud.points) {
        bool inSome = false;
        for (const auto& s : cfg.spheres)
            if (s.sphere.contains(p)) inSome = true;
        if (!inSome) outside++;
    }
    CHECK(outside == 0);
    for (size_t d = 2; d < cloud.maxRadiusPerDepth.size(); ++d)
        CHECK(cloud.maxRadiusPerDepth[d] < cloud.maxRadiusPerDepth[d - 1]);
}

TEST_CASE("handlebody family: chain plus three mirror copies") {
    auto cfg = config::buildTennisChain(0);
    auto hb = handlebodyBalls(cfg);
    long long chain = 0;
    for (const auto& s : cfg.spheres)
        if (!s.base) chain++;
    CHECK(static_cast<long long>(hb.size()) == 4 * chain);
}
