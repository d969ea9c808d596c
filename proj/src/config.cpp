#include "moebius/config.hpp"

#include <cstdlib>
#include <limits>
#include <set>
#include <thread>

#include "config_internal.hpp"

namespace moebius::config {

Point Block::center() const {
    Point c = lo;
    for (int a : axes) c[a] += edge / 2;
    return c;
}

const LabeledSphere* SphereConfiguration::findLabel(const std::string& label) const {
    for (const auto& s : spheres)
        if (s.label == label) return &s;
    return nullptr;
}

PairMatrixSummary classifyAllPairs(const SphereConfiguration& cfg, double tol) {
    const int n = cfg.sphereCount();
    int threads = 1;
    if (const char* env = std::getenv("WORKBENCH_THREADS"))
        threads = std::clamp(atoi(env), 1, 64);

    // flat views keep the hot loop free of branching through the kind cache
    struct Flat {
        double c[4];       // center, or plane normal
        double rho;        // signed radius; 0 marks a plane
        double offset;     // plane offset
    };
    std::vector<Flat> flat(n);
    const int dimn = cfg.ambient;
    for (int i = 0; i < n; ++i) {
        const auto& s = cfg.spheres[i].sphere;
        Flat f{};
        if (s.kind() == SphereKind::Plane) {
            for (int k = 0; k < dimn; ++k) f.c[k] = s.plane().normal[k];
            f.rho = 0;
            f.offset = s.plane().offset;
        } else {
            for (int k = 0; k < dimn; ++k) f.c[k] = s.round().center[k];
            f.rho = s.round().interiorBounded ? s.round().radius : -s.round().radius;
        }
        flat[i] = f;
    }
    auto productOf = [&flat, dimn](int i, int j) {
        const Flat& a = flat[i];
        const Flat& b = flat[j];
        if (a.rho != 0 && b.rho != 0) {
            double d2 = 0;
            for (int k = 0; k < dimn; ++k) {
                double dk = a.c[k] - b.c[k];
                d2 += dk * dk;
            }
            return (a.rho * a.rho + b.rho * b.rho - d2) / (2 * a.rho * b.rho);
        }
        if (a.rho == 0 && b.rho == 0) {
            double q = 0;
            for (int k = 0; k < dimn; ++k) q += a.c[k] * b.c[k];
            return q;
        }
        const Flat& pl = (a.rho == 0) ? a : b;
        const Flat& rd = (a.rho == 0) ? b : a;
        double q = -pl.offset;
        for (int k = 0; k < dimn; ++k) q += rd.c[k] * pl.c[k];
        return q / rd.rho;
    };

    auto scanRange = [&, n, tol](int lo, int hi, PairMatrixSummary* out) {
        out->minDisjointMargin = std::numeric_limits<double>::infinity();
        for (int i = lo; i < hi; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double q = productOf(i, j);
                if (std::abs(q) <= tol) {
                    out->ortho++;
                    out->worstAngleResidual = std::max(out->worstAngleResidual, std::abs(q));
                } else if (std::abs(q + 0.5) <= tol) {
                    out->pi3++;
                    out->worstAngleResidual =
                        std::max(out->worstAngleResidual, std::abs(q + 0.5));
                } else if (q < -1.0 - tol) {
                    out->disjoint++;
                    out->minDisjointMargin = std::min(out->minDisjointMargin, -1.0 - q);
                } else {
                    PairViolation v;
                    v.i = i;
                    v.j = j;
                    v.product = q;
                    if (std::abs(q - 1.0) <= tol || std::abs(q + 1.0) <= tol)
                        v.note = "tangent";
                    else if (q > 1.0)
                        v.note = "nested";
                    else
                        v.note = "invalid angle";
                    if (out->violations.size() < 64) out->violations.push_back(v);
                }
            }
        }
    };

    PairMatrixSummary total;
    total.minDisjointMargin = std::numeric_limits<double>::infinity();
    if (threads <= 1 || n < 256) {
        scanRange(0, n, &total);
    } else {
        std::vector<PairMatrixSummary> parts(threads);
        std::vector<std::thread> pool;
        // balance the triangular loop: chunk by equal pair counts
        std::vector<int> cuts(threads + 1, 0);
        cuts[threads] = n;
        long long totalPairs = static_cast<long long>(n) * (n - 1) / 2;
        int row = 0;
        long long acc = 0;
        for (int t = 1; t < threads; ++t) {
            long long goal = totalPairs * t / threads;
            while (row < n && acc < goal) acc += n - 1 - row, ++row;
            cuts[t] = row;
        }
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(scanRange, cuts[t], cuts[t + 1], &parts[t]);
        for (auto& th : pool) th.join();
        for (const auto& p : parts) {
            total.disjoint += p.disjoint;
            total.ortho += p.ortho;
            total.pi3 += p.pi3;
            total.worstAngleResidual = std::max(total.worstAngleResidual, p.worstAngleResidual);
            total.minDisjointMargin = std::min(total.minDisjointMargin, p.minDisjointMargin);
            for (const auto& v : p.violations)
                if (total.violations.size() < 64) total.violations.push_back(v);
        }
    }
    if (!std::isfinite(total.minDisjointMargin)) total.minDisjointMargin = 0;
    return total;
}

std::vector<Point> faceSampleGrid(const SphereConfiguration& cfg, int perEdge) {
    std::vector<Point> out;
    for (const auto& f : cfg.coveredFaces) {
        double h = f.side / 2;
        for (int iu = 0; iu <= perEdge; ++iu)
            for (int iv = 0; iv <= perEdge; ++iv) {
                double u = -h + f.side * iu / perEdge;
                double v = -h + f.side * iv / perEdge;
                out.push_back(detail::facePoint(f, u, v));
            }
    }
    return out;
}

CertificateReport validateConfiguration(const SphereConfiguration& cfg, int samplesPerEdge,
                                        double tol) {
    CertificateReport rep;
    rep.pairs = classifyAllPairs(cfg, tol);

    std::vector<Point> samples = cfg.targetSamples;
    auto grid = faceSampleGrid(cfg, samplesPerEdge);
    samples.insert(samples.end(), grid.begin(), grid.end());

    rep.coverage.checked = !samples.empty();
    if (!rep.coverage.checked) {
        rep.coverage.covered = true;  // vacuous
        return rep;
    }
    double minDepth = std::numeric_limits<double>::infinity();
    Point worst;
    for (const auto& p : samples) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& s : cfg.spheres) {
            if (s.base) continue;  // coverage must come from the j >= 5 balls
            best = std::max(best, s.sphere.depth(p));
        }
        if (best < minDepth) {
            minDepth = best;
            worst = p;
        }
    }
    rep.coverage.samples = static_cast<long long>(samples.size());
    rep.coverage.minDepth = minDepth;
    rep.coverage.worstSample = worst;
    rep.coverage.covered = minDepth > 0;
    return rep;
}

SphereBudget countBudget(const SphereConfiguration& cfg) {
    SphereBudget b;
    std::set<std::vector<long long>> corners;
    for (const auto& f : cfg.coveredFaces) {
        double h = f.side / 2;
        for (int su : {-1, 1})
            for (int sv : {-1, 1})
                corners.insert(detail::quantPoint(detail::facePoint(f, su * h, sv * h)));
    }
    b.vertexSpheres = static_cast<long long>(corners.size());
    b.ringSpheres = 4LL * static_cast<long long>(cfg.coveredFaces.size());
    b.closerSpheres = static_cast<long long>(cfg.coveredFaces.size());
    for (const auto& s : cfg.spheres)
        if (s.base) b.baseSpheres++;
    return b;
}

}  // namespace moebius::config
