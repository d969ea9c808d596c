#pragma once

// Inversive coordinates for spheres and points on S^n = R^n u {inf},
// n = 3 or 4, in the Lorentz model R^{n+1,1}.  A sphere or plane is a unit
// space-like vector v with <v,v> = 1; a point is a future light-cone ray.
// Sign convention: <v, lift(p)> > 0 exactly when p lies in the open ball
// bounded by the sphere (for planes, the designated half-space).

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace moebius {

constexpr int kMaxAmbient = 4;          // largest n we ever use
constexpr int kMaxDim = kMaxAmbient + 2;

// Lorentz form <x,y> = sum_{i<d-1} x_i y_i - x_{d-1} y_{d-1}.
struct LVec {
    int dim = 0;                         // n + 2
    std::array<double, kMaxDim> a{};

    double& operator[](int i) { return a[i]; }
    double operator[](int i) const { return a[i]; }
    int ambient() const { return dim - 2; }
};

double lorentz(const LVec& x, const LVec& y);

LVec lvec(std::initializer_list<double> xs);

// Euclidean point in R^n (finite); infinity is represented only as a lift.
using Point = std::vector<double>;

double dot(const Point& a, const Point& b);
double norm2(const Point& a);
double dist(const Point& a, const Point& b);

// ---------------------------------------------------------------------------

class PointLift {
public:
    // lift of a finite point p: (p, (|p|^2-1)/2, (|p|^2+1)/2)
    static PointLift fromPoint(const Point& p);
    static PointLift infinity(int ambient);

    const LVec& vec() const { return x_; }
    int ambient() const { return x_.ambient(); }

    bool isInfinity(double tol = 1e-12) const;
    // chordal-normalized scale factor x_{d-1} - x_{d-2}; 1 for finite lifts
    double scale() const;
    // recover the finite point; throws std::domain_error at infinity
    Point point() const;

    // raw light-cone vector (used by MoebiusMap::apply); renormalizes so the
    // last coordinate stays positive and checks the light-cone residual
    static PointLift fromRaw(const LVec& x, double tol = 1e-8);

private:
    explicit PointLift(LVec x) : x_(x) {}
    LVec x_;
};

// ---------------------------------------------------------------------------

enum class SphereKind { Round, Plane };

struct RoundData {
    Point center;
    double radius = 0;         // Euclidean radius, > 0
    bool interiorBounded = true;  // positive side is the bounded interior?
};

struct PlaneData {
    Point normal;              // unit
    double offset = 0;         // plane { x . normal = offset }, positive side x.normal > offset
};

class InversiveSphere {
public:
    InversiveSphere() = default;  // empty placeholder; assign before use

    static InversiveSphere fromCenterRadius(const Point& c, double r);
    // positive side is { x : x.u > t }
    static InversiveSphere fromPlane(const Point& unitNormal, double t);
    // flips the designated side
    InversiveSphere opposite() const;

    static InversiveSphere fromVector(const LVec& v, double tol = 1e-8);

    const LVec& vec() const { return v_; }
    int ambient() const { return v_.ambient(); }

    SphereKind kind() const { return kind_; }
    const RoundData& round() const;   // throws if plane
    const PlaneData& plane() const;   // throws if round
    // Euclidean radius; +inf for planes
    double euclideanRadius() const;

    // signed "depth": Euclidean distance into the positive side (>0 inside).
    // For round spheres r - |p-c| (or |p-c| - r when the positive side is
    // unbounded), for planes the signed distance to the plane.
    double depth(const Point& p) const;
    bool contains(const Point& p, double slack = 0.0) const;
    // a point comfortably inside the positive side
    Point samplePositivePoint() const;
    bool positiveSideHasInfinity() const;

private:
    void cacheKind(double tol);

    LVec v_;
    SphereKind kind_ = SphereKind::Round;
    RoundData round_{};
    PlaneData plane_{};
};

// <v,v'>; for round spheres equals (r^2 + r'^2 - d^2) / (2 r r')
double inversiveProduct(const InversiveSphere& s, const InversiveSphere& t);

// same value computed from center/radius differences; immune to the
// cancellation the raw Lorentz form suffers for spheres far from the origin
double stableInversiveProduct(const InversiveSphere& s, const InversiveSphere& t);

// the same sphere translated by -origin (local-frame reconstruction)
InversiveSphere recenter(const InversiveSphere& s, const Point& origin);

// <v, lift(p)>
double pairing(const InversiveSphere& s, const PointLift& p);

enum class PairClassKind { Disjoint, Tangent, Angle, Nested };

struct PairClass {
    PairClassKind kind;
    double exteriorAngle = 0;  // set for Angle
    double product = 0;        // raw inversive product
};

// q < -1: disjoint, |q| <= 1: angle(acos(-q)), q > 1: nested,
// |q -+ 1| <= tol: tangent
PairClass classifyPair(const InversiveSphere& s, const InversiveSphere& t,
                       double tol = 1e-9);

// B_s subset of B_t (closed positive sides), decided from the product plus a
// positive-side sample point
bool ballContained(const InversiveSphere& inner, const InversiveSphere& outer,
                   double tol = 1e-9);

// ---------------------------------------------------------------------------

class MoebiusMap {
public:
    MoebiusMap() : dim_(0), parity_(1) {}  // empty placeholder; assign before use

    static MoebiusMap identity(int ambient);
    static MoebiusMap reflection(const InversiveSphere& s);

    int ambient() const { return dim_ - 2; }
    int dim() const { return dim_; }
    double at(int i, int j) const { return m_[i * dim_ + j]; }
    double& at(int i, int j) { return m_[i * dim_ + j]; }
    int parity() const { return parity_; }

    PointLift apply(const PointLift& p) const;
    InversiveSphere apply(const InversiveSphere& s) const;

    MoebiusMap compose(const MoebiusMap& other) const;  // this after other
    MoebiusMap inverse() const;
    static MoebiusMap product(const MoebiusMap& a, const MoebiusMap& b);

    // max |M^T J M - J| entry
    double orthogonalityResidual() const;
    // polar-style snap back onto the Lorentz group (Newton iteration)
    void snap();

    double maxAbsDiff(const MoebiusMap& other) const;
    bool isIdentity(double tol = 1e-8) const;

private:
    MoebiusMap(int dim, int parity) : dim_(dim), parity_(parity) { m_.fill(0); }

    int dim_;
    int parity_;
    std::array<double, kMaxDim * kMaxDim> m_{};
};

MoebiusMap operator*(const MoebiusMap& a, const MoebiusMap& b);

// thrown when a numerical invariant drifts past its tolerance
struct NumericalDegradation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace moebius
