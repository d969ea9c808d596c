#include "moebius/rho.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moebius::rho {

FaceAssignment assignFaces(const topology::FaceLattice& lattice,
                           const group::ReflectionGroup& grp) {
    FaceAssignment a;
    a.grp = &grp;
    for (const auto& f : lattice.faces) {
        auto it = std::find(grp.labels.begin(), grp.labels.end(), f.sphereLabel);
        if (it == grp.labels.end())
            throw std::invalid_argument("face sphere " + f.sphereLabel +
                                        " is not a group generator");
        a.generatorOfFace.push_back(static_cast<int>(it - grp.labels.begin()));
    }
    return a;
}

MoebiusMap rhoImage(const FaceAssignment& a, const std::vector<int>& faceWord) {
    MoebiusMap m = MoebiusMap::identity(a.grp->mirrors.front().ambient());
    for (int f : faceWord) {
        if (f < 0 || f >= a.faceCount())
            throw std::out_of_range("face index out of range");
        m = m * a.grp->generators[a.generatorOfFace[f]];
    }
    return m;
}

double verifyRhoRelators(const FaceAssignment& a, const topology::FaceLattice& lattice,
                         double tol) {
    const double kPi = std::acos(-1.0);
    double worst = 0;
    for (const auto& e : lattice.edges) {
        if (e.angle <= 0)
            throw std::invalid_argument("edge without a pi/m dihedral label");
        int m = static_cast<int>(llround(kPi / e.angle));
        int gi = a.generatorOfFace[e.a], gj = a.generatorOfFace[e.b];
        if (gi == gj) continue;  // same mirror, relator is trivially g^2 = 1
        // the edge label must agree with the group's own Coxeter order, and
        // the relator residual is evaluated in the group's local frame
        if (a.grp->order(gi, gj) != m)
            throw std::invalid_argument(
                "inconsistent assignment: edge (" + std::to_string(e.a) + "," +
                std::to_string(e.b) + ") labeled pi/" + std::to_string(m) +
                " but the mirror pair has order " + std::to_string(a.grp->order(gi, gj)));
        double res = a.grp->relatorResidual(gi, gj);
        worst = std::max(worst, res);
        if (res > tol)
            throw std::invalid_argument("inconsistent assignment: relator (" +
                                        std::to_string(e.a) + "," + std::to_string(e.b) +
                                        ")^" + std::to_string(m) + " residual " +
                                        std::to_string(res));
    }
    return worst;
}

std::vector<int> facesOnSphere(const topology::FaceLattice& lattice,
                               const std::string& sphereLabel) {
    std::vector<int> out;
    for (size_t i = 0; i < lattice.faces.size(); ++i)
        if (lattice.faces[i].sphereLabel == sphereLabel)
            out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace moebius::rho
