#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "moebius/facecover.hpp"
#include "moebius/inversive.hpp"

using namespace moebius;

namespace {

// independent oracle: reduce the 2x2 inner-ring system to one variable with
// rho(t) = t sqrt(2/3) (from the pi/3 relation) and bisect the orthogonality
// equation g(t) = (t - 1/2)^2 + 1/4 - rho^2 - 1/3 on (0, 1/2)
double bisectInnerOffset() {
    auto g = [](double t) {
        double rho2 = (2.0 / 3.0) * t * t;
        return (t - 0.5) * (t - 0.5) + 0.25 - rho2 - 1.0 / 3.0;
    };
    double lo = 1e-6, hi = 0.5 - 1e-6;
    for (int i = 0; i < 200; ++i) {
        double mid = (lo + hi) / 2;
        if (g(lo) * g(mid) <= 0)
            hi = mid;
        else
            lo = mid;
    }
    return (lo + hi) / 2;
}

double prodRR(double dx, double dy, double r1, double r2) {
    double d2 = dx * dx + dy * dy;
    return (r1 * r1 + r2 * r2 - d2) / (2 * r1 * r2);
}

}  // namespace

TEST_CASE("vertex radius is sqrt(3)/3 for the unit face") {
    auto fc = faceCoverSolve(1.0);
    CHECK(fc.vertexRadius == doctest::Approx(std::sqrt(3.0) / 3.0).epsilon(1e-15));
    // two vertex spheres along a unit edge realize product -1/2
    CHECK(prodRR(1.0, 0.0, fc.vertexRadius, fc.vertexRadius) ==
          doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("inner ring solve matches the bisection oracle") {
    auto fc = faceCoverSolve(1.0);
    double tOracle = bisectInnerOffset();
    CHECK(fc.ringOffset == doctest::Approx(tOracle).epsilon(1e-12));
    CHECK(fc.ringRadius == doctest::Approx(tOracle * std::sqrt(2.0 / 3.0)).epsilon(1e-12));

    // residual substitution into the original product expressions
    double t = fc.ringOffset, ri = fc.ringRadius, rv = fc.vertexRadius;
    CHECK(prodRR(t - 0.5, -0.5, ri, rv) == doctest::Approx(0.0).epsilon(1e-11));
    CHECK(prodRR(t, -t, ri, ri) == doctest::Approx(-0.5).epsilon(1e-11));
    CHECK(fc.maxResidual <= 1e-10);

    // closed forms: t = (3 - sqrt 7)/2, s = 8 - 3 sqrt 7
    double s7 = std::sqrt(7.0);
    CHECK(fc.ringOffset == doctest::Approx((3 - s7) / 2).epsilon(1e-14));
}

TEST_CASE("closer sphere is orthogonal to the ring") {
    auto fc = faceCoverSolve(1.0);
    CHECK(prodRR(fc.ringOffset, 0.0, fc.closerRadius, fc.ringRadius) ==
          doctest::Approx(0.0).epsilon(1e-11));
}

TEST_CASE("top face second ring and the mandated small edge") {
    auto fc = faceCoverSolve(1.0, true);
    double s7 = std::sqrt(7.0);
    CHECK(fc.smallSquareSide == doctest::Approx(8 - 3 * s7).epsilon(1e-12));
    CHECK(fc.secondRingRadius ==
          doctest::Approx(fc.smallSquareSide / std::sqrt(3.0)).epsilon(1e-12));
    // orthogonal to the near inner-ring sphere, pi/3 to its ring neighbours
    double s = fc.smallSquareSide;
    CHECK(prodRR(s / 2 - fc.ringOffset, s / 2, fc.secondRingRadius, fc.ringRadius) ==
          doctest::Approx(0.0).epsilon(1e-10));
    CHECK(prodRR(s, 0, fc.secondRingRadius, fc.secondRingRadius) ==
          doctest::Approx(-0.5).epsilon(1e-10));
}

TEST_CASE("similarity: all lengths scale with the face") {
    auto a = faceCoverSolve(1.0, true);
    auto b = faceCoverSolve(2.0, true);
    CHECK(b.vertexRadius == doctest::Approx(2 * a.vertexRadius).epsilon(1e-12));
    CHECK(b.ringOffset == doctest::Approx(2 * a.ringOffset).epsilon(1e-9));
    CHECK(b.ringRadius == doctest::Approx(2 * a.ringRadius).epsilon(1e-9));
    CHECK(b.closerRadius == doctest::Approx(2 * a.closerRadius).epsilon(1e-9));
    CHECK(b.smallSquareSide == doctest::Approx(2 * a.smallSquareSide).epsilon(1e-9));
}

TEST_CASE("the nine-sphere family covers the closed face") {
    auto fc = faceCoverSolve(1.0);
    struct B { double x, y, r; };
    std::vector<B> balls;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1}) balls.push_back({sx * 0.5, sy * 0.5, fc.vertexRadius});
    balls.push_back({fc.ringOffset, 0, fc.ringRadius});
    balls.push_back({-fc.ringOffset, 0, fc.ringRadius});
    balls.push_back({0, fc.ringOffset, fc.ringRadius});
    balls.push_back({0, -fc.ringOffset, fc.ringRadius});
    balls.push_back({0, 0, fc.closerRadius});

    double minDepth = 1e9;
    const int n = 400;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            double x = -0.5 + 1.0 * i / n, y = -0.5 + 1.0 * j / n;
            double best = -1e9;
            for (const auto& b : balls)
                best = std::max(best, b.r - std::hypot(x - b.x, y - b.y));
            minDepth = std::min(minDepth, best);
        }
    CHECK(minDepth > 0.005);  // strictly interior with a real margin
}

TEST_CASE("rejects nonpositive sides") {
    CHECK_THROWS_AS(faceCoverSolve(0.0), std::invalid_argument);
    CHECK_THROWS_AS(faceCoverSolve(-2.0), std::invalid_argument);
}
