#include "moebius/inversive.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace moebius {

double lorentz(const LVec& x, const LVec& y) {
    assert(x.dim == y.dim);
    double s = 0;
    for (int i = 0; i + 1 < x.dim; ++i) s += x.a[i] * y.a[i];
    s -= x.a[x.dim - 1] * y.a[y.dim - 1];
    return s;
}

LVec lvec(std::initializer_list<double> xs) {
    LVec v;
    v.dim = static_cast<int>(xs.size());
    int i = 0;
    for (double x : xs) v.a[i++] = x;
    return v;
}

double dot(const Point& a, const Point& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Point& a) { return dot(a, a); }

double dist(const Point& a, const Point& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// --- PointLift --------------------------------------------------------------

PointLift PointLift::fromPoint(const Point& p) {
    int n = static_cast<int>(p.size());
    LVec x;
    x.dim = n + 2;
    double q = norm2(p);
    for (int i = 0; i < n; ++i) x.a[i] = p[i];
    x.a[n] = (q - 1.0) / 2.0;
    x.a[n + 1] = (q + 1.0) / 2.0;
    return PointLift(x);
}

PointLift PointLift::infinity(int ambient) {
    LVec x;
    x.dim = ambient + 2;
    x.a[ambient] = 1.0;
    x.a[ambient + 1] = 1.0;
    return PointLift(x);
}

bool PointLift::isInfinity(double tol) const {
    return std::abs(scale()) <= tol * std::abs(x_.a[x_.dim - 1]);
}

double PointLift::scale() const { return x_.a[x_.dim - 1] - x_.a[x_.dim - 2]; }

Point PointLift::point() const {
    double s = scale();
    if (std::abs(s) <= 1e-14 * std::abs(x_.a[x_.dim - 1]))
        throw std::domain_error("PointLift::point: point at infinity");
    Point p(x_.ambient());
    for (int i = 0; i < x_.ambient(); ++i) p[i] = x_.a[i] / s;
    return p;
}

PointLift PointLift::fromRaw(const LVec& x, double tol) {
    LVec y = x;
    if (y.a[y.dim - 1] < 0)
        for (int i = 0; i < y.dim; ++i) y.a[i] = -y.a[i];
    double last = y.a[y.dim - 1];
    if (last <= 0) throw NumericalDegradation("light-cone vector has no future component");
    double res = lorentz(y, y) / (last * last);
    if (std::abs(res) > tol)
        throw NumericalDegradation("light-cone residual " + std::to_string(res));
    return PointLift(y);
}

// --- InversiveSphere --------------------------------------------------------

InversiveSphere InversiveSphere::fromCenterRadius(const Point& c, double r) {
    if (!(r > 0)) throw std::invalid_argument("sphere radius must be positive");
    for (double x : c)
        if (!std::isfinite(x)) throw std::invalid_argument("sphere center must be finite");
    int n = static_cast<int>(c.size());
    LVec v;
    v.dim = n + 2;
    double q = norm2(c);
    for (int i = 0; i < n; ++i) v.a[i] = c[i] / r;
    v.a[n] = (q - r * r - 1.0) / (2.0 * r);
    v.a[n + 1] = (q - r * r + 1.0) / (2.0 * r);
    InversiveSphere s;
    s.v_ = v;
    // cache the exact inputs; reconstruction from v loses precision for
    // centers far from the origin
    s.kind_ = SphereKind::Round;
    s.round_.center = c;
    s.round_.radius = r;
    s.round_.interiorBounded = true;
    return s;
}

InversiveSphere InversiveSphere::fromPlane(const Point& u, double t) {
    double nn = norm2(u);
    if (std::abs(nn - 1.0) > 1e-9)
        throw std::invalid_argument("plane normal must be a unit vector");
    int n = static_cast<int>(u.size());
    LVec v;
    v.dim = n + 2;
    for (int i = 0; i < n; ++i) v.a[i] = u[i];
    v.a[n] = t;
    v.a[n + 1] = t;
    InversiveSphere s;
    s.v_ = v;
    s.kind_ = SphereKind::Plane;
    s.plane_.normal = u;
    s.plane_.offset = t;
    return s;
}

InversiveSphere InversiveSphere::opposite() const {
    InversiveSphere s = *this;
    for (int i = 0; i < s.v_.dim; ++i) s.v_.a[i] = -s.v_.a[i];
    if (kind_ == SphereKind::Plane) {
        for (double& x : s.plane_.normal) x = -x;
        s.plane_.offset = -plane_.offset;
    } else {
        s.round_.interiorBounded = !round_.interiorBounded;
    }
    return s;
}

InversiveSphere InversiveSphere::fromVector(const LVec& v, double tol) {
    double nn = lorentz(v, v);
    double mag = 1.0;
    for (int i = 0; i < v.dim; ++i) mag = std::max(mag, v.a[i] * v.a[i]);
    if (std::abs(nn - 1.0) > tol * mag || nn <= 0)
        throw NumericalDegradation("sphere vector norm residual " + std::to_string(nn - 1.0));
    InversiveSphere s;
    s.v_ = v;
    // renormalize exactly to unit Lorentz norm
    double f = 1.0 / std::sqrt(nn);
    for (int i = 0; i < v.dim; ++i) s.v_.a[i] *= f;
    s.cacheKind(tol);
    return s;
}

void InversiveSphere::cacheKind(double /*tol*/) {
    int n = v_.ambient();
    double s = v_.a[n + 1] - v_.a[n];  // 1/r for round spheres (signed), 0 for planes
    // scale-aware plane test
    double mag = 0;
    for (int i = 0; i < v_.dim; ++i) mag = std::max(mag, std::abs(v_.a[i]));
    if (std::abs(s) <= 1e-12 * std::max(1.0, mag)) {
        kind_ = SphereKind::Plane;
        plane_.normal.assign(v_.a.begin(), v_.a.begin() + n);
        plane_.offset = v_.a[n];
    } else {
        kind_ = SphereKind::Round;
        round_.radius = std::abs(1.0 / s);
        round_.interiorBounded = s > 0;
        round_.center.resize(n);
        for (int i = 0; i < n; ++i) round_.center[i] = v_.a[i] / s;
    }
}

const RoundData& InversiveSphere::round() const {
    if (kind_ != SphereKind::Round) throw std::domain_error("not a round sphere");
    return round_;
}

const PlaneData& InversiveSphere::plane() const {
    if (kind_ != SphereKind::Plane) throw std::domain_error("not a plane");
    return plane_;
}

double InversiveSphere::euclideanRadius() const {
    return kind_ == SphereKind::Plane ? std::numeric_limits<double>::infinity()
                                      : round_.radius;
}

double InversiveSphere::depth(const Point& p) const {
    if (kind_ == SphereKind::Plane) return dot(p, plane_.normal) - plane_.offset;
    double d = dist(p, round_.center);
    return round_.interiorBounded ? round_.radius - d : d - round_.radius;
}

bool InversiveSphere::contains(const Point& p, double slack) const {
    return depth(p) >= slack;
}

Point InversiveSphere::samplePositivePoint() const {
    if (kind_ == SphereKind::Plane) {
        Point p = plane_.normal;
        for (double& x : p) x *= (plane_.offset + 1.0);
        // offset*n + n has n-component offset+1 > offset
        return p;
    }
    if (round_.interiorBounded) return round_.center;
    Point p = round_.center;
    p[0] += 2.0 * round_.radius;
    return p;
}

bool InversiveSphere::positiveSideHasInfinity() const {
    return kind_ == SphereKind::Plane || !round_.interiorBounded;
}

double inversiveProduct(const InversiveSphere& s, const InversiveSphere& t) {
    return lorentz(s.vec(), t.vec());
}

double stableInversiveProduct(const InversiveSphere& s, const InversiveSphere& t) {
    if (s.kind() == SphereKind::Plane && t.kind() == SphereKind::Plane) {
        double q = dot(s.plane().normal, t.plane().normal);
        return q;
    }
    if (s.kind() == SphereKind::Plane || t.kind() == SphereKind::Plane) {
        const InversiveSphere& pl = (s.kind() == SphereKind::Plane) ? s : t;
        const InversiveSphere& rd = (s.kind() == SphereKind::Plane) ? t : s;
        double rho = rd.round().interiorBounded ? rd.round().radius : -rd.round().radius;
        return (dot(rd.round().center, pl.plane().normal) - pl.plane().offset) / rho;
    }
    const auto& a = s.round();
    const auto& b = t.round();
    double ra = a.interiorBounded ? a.radius : -a.radius;
    double rb = b.interiorBounded ? b.radius : -b.radius;
    double d2 = 0;
    for (size_t k = 0; k < a.center.size(); ++k) {
        double dk = a.center[k] - b.center[k];
        d2 += dk * dk;
    }
    return (ra * ra + rb * rb - d2) / (2 * ra * rb);
}

InversiveSphere recenter(const InversiveSphere& s, const Point& origin) {
    if (s.kind() == SphereKind::Plane) {
        const auto& pl = s.plane();
        return InversiveSphere::fromPlane(pl.normal, pl.offset - dot(pl.normal, origin));
    }
    const auto& rd = s.round();
    Point c = rd.center;
    for (size_t k = 0; k < c.size(); ++k) c[k] -= origin[k];
    auto out = InversiveSphere::fromCenterRadius(c, rd.radius);
    return rd.interiorBounded ? out : out.opposite();
}

double pairing(const InversiveSphere& s, const PointLift& p) {
    double raw = lorentz(s.vec(), p.vec());
    double sc = p.scale();
    // normalize so finite lifts match the standard embedding; at infinity the
    // raw value already carries the right sign
    return (std::abs(sc) > 1e-300) ? raw / sc : raw;
}

PairClass classifyPair(const InversiveSphere& s, const InversiveSphere& t, double tol) {
    double q = inversiveProduct(s, t);
    PairClass c;
    c.product = q;
    if (std::abs(q - 1.0) <= tol || std::abs(q + 1.0) <= tol) {
        c.kind = PairClassKind::Tangent;
    } else if (q < -1.0) {
        c.kind = PairClassKind::Disjoint;
    } else if (q > 1.0) {
        c.kind = PairClassKind::Nested;
    } else {
        c.kind = PairClassKind::Angle;
        c.exteriorAngle = std::acos(-q);
    }
    return c;
}

bool ballContained(const InversiveSphere& inner, const InversiveSphere& outer, double tol) {
    if (inner.positiveSideHasInfinity() && !outer.positiveSideHasInfinity()) return false;

    if (inner.kind() == SphereKind::Round && inner.round().interiorBounded) {
        const auto& in = inner.round();
        if (outer.kind() == SphereKind::Plane) {
            const auto& pl = outer.plane();
            return dot(in.center, pl.normal) - pl.offset - in.radius >= -tol;
        }
        const auto& out = outer.round();
        double d = dist(in.center, out.center);
        if (out.interiorBounded) return out.radius - d - in.radius >= -tol;
        // outer is the exterior of a ball: containment means staying clear of it
        return d - out.radius - in.radius >= -tol;
    }
    // inner has infinity on its positive side, so outer must as well
    if (inner.kind() == SphereKind::Plane) {
        const auto& in = inner.plane();
        if (outer.kind() == SphereKind::Plane) {
            const auto& out = outer.plane();
            return dot(in.normal, out.normal) >= 1.0 - 1e-12 &&
                   out.offset <= in.offset + tol;
        }
        // outer is an exterior ball: the excluded ball must avoid the half-space
        const auto& k = outer.round();
        return dot(k.center, in.normal) - in.offset <= -k.radius + tol;
    }
    // inner is an exterior ball; containment means the outer excluded ball
    // sits inside the inner excluded ball
    if (outer.kind() == SphereKind::Plane) return false;
    const auto& kin = inner.round();
    const auto& kout = outer.round();
    double d = dist(kin.center, kout.center);
    return kin.radius - d - kout.radius >= -tol;
}

// --- MoebiusMap --------------------------------------------------------------

MoebiusMap MoebiusMap::identity(int ambient) {
    MoebiusMap m(ambient + 2, +1);
    for (int i = 0; i < m.dim_; ++i) m.at(i, i) = 1.0;
    return m;
}

MoebiusMap MoebiusMap::reflection(const InversiveSphere& s) {
    // M = I - 2 v v^T J
    const LVec& v = s.vec();
    int d = v.dim;
    MoebiusMap m(d, -1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double jj = (j == d - 1) ? -1.0 : 1.0;
            m.at(i, j) = (i == j ? 1.0 : 0.0) - 2.0 * v.a[i] * v.a[j] * jj;
        }
    return m;
}

PointLift MoebiusMap::apply(const PointLift& p) const {
    LVec y;
    y.dim = dim_;
    for (int i = 0; i < dim_; ++i) {
        double s = 0;
        for (int j = 0; j < dim_; ++j) s += at(i, j) * p.vec().a[j];
        y.a[i] = s;
    }
    return PointLift::fromRaw(y);
}

InversiveSphere MoebiusMap::apply(const InversiveSphere& s) const {
    LVec y;
    y.dim = dim_;
    for (int i = 0; i < dim_; ++i) {
        double acc = 0;
        for (int j = 0; j < dim_; ++j) acc += at(i, j) * s.vec().a[j];
        y.a[i] = acc;
    }
    return InversiveSphere::fromVector(y);
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& other) const { return *this * other; }

MoebiusMap MoebiusMap::product(const MoebiusMap& a, const MoebiusMap& b) {
    assert(a.dim() == b.dim());
    int d = a.dim();
    MoebiusMap c(d, a.parity() * b.parity());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double s = 0;
            for (int k = 0; k < d; ++k) s += a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    double scale = 1.0;
    for (int i = 0; i < d * d; ++i) scale = std::max(scale, std::abs(c.m_[i]));
    if (c.orthogonalityResidual() > 1e-10 * scale * scale) c.snap();
    return c;
}

MoebiusMap operator*(const MoebiusMap& a, const MoebiusMap& b) {
    return MoebiusMap::product(a, b);
}

MoebiusMap MoebiusMap::inverse() const {
    // M^{-1} = J M^T J for Lorentz-orthogonal M
    MoebiusMap m(dim_, parity_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            double si = (i == dim_ - 1) ? -1.0 : 1.0;
            double sj = (j == dim_ - 1) ? -1.0 : 1.0;
            m.at(i, j) = si * sj * at(j, i);
        }
    return m;
}

double MoebiusMap::orthogonalityResidual() const {
    double worst = 0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            double s = 0;
            for (int k = 0; k < dim_; ++k) {
                double sk = (k == dim_ - 1) ? -1.0 : 1.0;
                s += at(k, i) * sk * at(k, j);
            }
            double target = (i == j) ? ((i == dim_ - 1) ? -1.0 : 1.0) : 0.0;
            worst = std::max(worst, std::abs(s - target));
        }
    return worst;
}

void MoebiusMap::snap() {
    // Gram-Schmidt in the Lorentz metric: columns must satisfy
    // <c_i, c_j> = +-delta_ij with the time-like column last.  Stable for the
    // small drifts produced by long products (no matrix inversion involved).
    int d = dim_;
    auto colDot = [&](int a, int b) {
        double s = 0;
        for (int k = 0; k + 1 < d; ++k) s += at(k, a) * at(k, b);
        s -= at(d - 1, a) * at(d - 1, b);
        return s;
    };
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < j; ++k) {
            double proj = colDot(j, k) / colDot(k, k);
            for (int r = 0; r < d; ++r) at(r, j) -= proj * at(r, k);
        }
        double nn = colDot(j, j);
        double target = (j == d - 1) ? -1.0 : 1.0;
        if (nn * target <= 0) return;  // signature broke; leave untouched
        double f = 1.0 / std::sqrt(std::abs(nn));
        for (int r = 0; r < d; ++r) at(r, j) *= f;
    }
}

double MoebiusMap::maxAbsDiff(const MoebiusMap& other) const {
    double worst = 0;
    for (int i = 0; i < dim_ * dim_; ++i)
        worst = std::max(worst, std::abs(m_[i] - other.m_[i]));
    return worst;
}

bool MoebiusMap::isIdentity(double tol) const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            double target = (i == j) ? 1.0 : 0.0;
            if (std::abs(at(i, j) - target) > tol) return false;
        }
    return true;
}

}  // namespace moebius
