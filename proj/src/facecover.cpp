#include "moebius/facecover.hpp"

#include <cmath>

namespace moebius {

namespace {

// inversive product of two round spheres from centers (planar) and radii
double prodRR(double dx, double dy, double r1, double r2) {
    double d2 = dx * dx + dy * dy;
    return (r1 * r1 + r2 * r2 - d2) / (2 * r1 * r2);
}

struct Newton2Result {
    double x = 0, y = 0;
    double residual = 0;
    bool ok = false;
};

// damped Newton on f(x,y) = 0 with numeric Jacobian; deterministic
template <typename F>
Newton2Result newton2(F f, double x0, double y0, double scale) {
    double x = x0, y = y0;
    Newton2Result out;
    for (int iter = 0; iter < 200; ++iter) {
        auto [f1, f2] = f(x, y);
        double r = std::max(std::abs(f1), std::abs(f2));
        if (r < 1e-14 * scale) break;
        double h = 1e-7 * std::sqrt(scale);
        auto [f1x, f2x] = f(x + h, y);
        auto [f1y, f2y] = f(x, y + h);
        double a = (f1x - f1) / h, b = (f1y - f1) / h;
        double c = (f2x - f2) / h, d = (f2y - f2) / h;
        double det = a * d - b * c;
        if (std::abs(det) < 1e-14) break;
        double dx = (f1 * d - f2 * b) / det;
        double dy = (a * f2 - c * f1) / det;
        double damp = 1.0;
        // keep iterates positive
        while ((x - damp * dx <= 0 || y - damp * dy <= 0) && damp > 1e-6) damp /= 2;
        x -= damp * dx;
        y -= damp * dy;
    }
    auto [f1, f2] = f(x, y);
    out.x = x;
    out.y = y;
    out.residual = std::max(std::abs(f1), std::abs(f2));
    out.ok = out.residual <= 1e-10 * scale;
    return out;
}

}  // namespace

FaceCover faceCoverSolve(double a, bool topFace) {
    if (!(a > 0)) throw std::invalid_argument("face side must be positive");
    FaceCover fc;
    fc.side = a;
    fc.topFace = topFace;
    fc.vertexRadius = a / std::sqrt(3.0);

    // Inner ring: centers at (+-t, 0), (0, +-t) in face coordinates.
    //   orthogonal to the near vertex spheres: |(t,0)-(a/2,a/2)|^2 = rho^2 + rho_v^2
    //   pi/3 between ring neighbours: product((t,0),(0,t)) = -1/2
    double rv = fc.vertexRadius;
    auto sysInner = [&](double t, double rho) {
        double f1 = (t - a / 2) * (t - a / 2) + (a / 2) * (a / 2) - rho * rho - rv * rv;
        double f2 = prodRR(t, -t, rho, rho) + 0.5;
        return std::pair<double, double>{f1, f2};
    };
    auto inner = newton2(sysInner, 0.25 * a, 0.2 * a, std::max(1.0, a * a));
    if (!inner.ok || inner.x >= a / 2 || inner.x <= 0)
        throw ConstructionInfeasible(
            "inner ring solve failed, residual " + std::to_string(inner.residual));
    fc.ringOffset = inner.x;
    fc.ringRadius = inner.y;
    fc.maxResidual = inner.residual;

    // Closer: centered at the face center, orthogonal to the ring.
    double t = fc.ringOffset, ri = fc.ringRadius;
    double rc2 = t * t - ri * ri;
    if (rc2 <= 0) throw ConstructionInfeasible("closer sphere has no real radius");
    fc.closerRadius = std::sqrt(rc2);

    if (topFace) {
        // Second ring: centers at (+-s/2, +-s/2), radius s/sqrt(3) from the
        // pi/3 condition along the edges of f_s; orthogonal to the near inner
        // ring spheres.
        auto sysSecond = [&](double s, double rk) {
            double f1 = (s / 2 - t) * (s / 2 - t) + (s / 2) * (s / 2) - rk * rk - ri * ri;
            double f2 = prodRR(s, 0, rk, rk) + 0.5;  // neighbours at distance s
            return std::pair<double, double>{f1, f2};
        };
        auto second = newton2(sysSecond, 0.08 * a, 0.05 * a, std::max(1.0, a * a));
        if (!second.ok || second.x <= 0 || second.x >= 2 * t)
            throw ConstructionInfeasible(
                "second ring solve failed, residual " + std::to_string(second.residual));
        fc.smallSquareSide = second.x;
        fc.secondRingRadius = second.y;
        fc.maxResidual = std::max(fc.maxResidual, second.residual);
    }
    return fc;
}

}  // namespace moebius
