#include <algorithm>
#include <map>

#include "moebius/topology.hpp"

namespace moebius::topology {

namespace {

// GF(2) row-reduction rank; rows are bitsets over `cols` columns
struct Gf2Matrix {
    int cols = 0;
    std::vector<std::vector<uint64_t>> rows;

    void addRow(const std::vector<int>& support) {
        std::vector<uint64_t> r((cols + 63) / 64, 0);
        for (int c : support) r[c / 64] ^= (1ull << (c % 64));
        rows.push_back(std::move(r));
    }

    long long rank() const {
        std::vector<std::vector<uint64_t>> work = rows;
        long long rk = 0;
        size_t rowAt = 0;
        for (int c = 0; c < cols && rowAt < work.size(); ++c) {
            size_t piv = rowAt;
            while (piv < work.size() && !(work[piv][c / 64] >> (c % 64) & 1)) ++piv;
            if (piv == work.size()) continue;
            std::swap(work[rowAt], work[piv]);
            for (size_t r = 0; r < work.size(); ++r) {
                if (r == rowAt) continue;
                if (work[r][c / 64] >> (c % 64) & 1)
                    for (size_t w = 0; w < work[r].size(); ++w) work[r][w] ^= work[rowAt][w];
            }
            ++rowAt;
            ++rk;
        }
        return rk;
    }
};

}  // namespace

BettiNumbers betti(const NerveComplex& c) {
    if (!c.unknown.empty())
        throw std::invalid_argument(
            "nerve has " + std::to_string(c.unknown.size()) +
            " undecided simplices; refusing to compute homology");

    std::map<std::array<int, 2>, int> edgeIndex;
    for (size_t i = 0; i < c.edges.size(); ++i) edgeIndex[c.edges[i]] = static_cast<int>(i);
    std::map<std::array<int, 3>, int> triIndex;
    for (size_t i = 0; i < c.triangles.size(); ++i)
        triIndex[c.triangles[i]] = static_cast<int>(i);

    Gf2Matrix d1;  // edges -> vertices
    d1.cols = c.vertices;
    for (const auto& e : c.edges) d1.addRow({e[0], e[1]});

    Gf2Matrix d2;  // triangles -> edges
    d2.cols = static_cast<int>(c.edges.size());
    auto edgeOf = [&](int a, int b) {
        auto it = edgeIndex.find({std::min(a, b), std::max(a, b)});
        if (it == edgeIndex.end())
            throw std::invalid_argument("nerve is not downward closed (missing edge)");
        return it->second;
    };
    for (const auto& t : c.triangles)
        d2.addRow({edgeOf(t[0], t[1]), edgeOf(t[0], t[2]), edgeOf(t[1], t[2])});

    Gf2Matrix d3;  // tetrahedra -> triangles
    d3.cols = static_cast<int>(c.triangles.size());
    auto triOf = [&](int a, int b, int cc) {
        std::array<int, 3> k{a, b, cc};
        std::sort(k.begin(), k.end());
        auto it = triIndex.find(k);
        if (it == triIndex.end())
            throw std::invalid_argument("nerve is not downward closed (missing triangle)");
        return it->second;
    };
    for (const auto& q : c.tetrahedra)
        d3.addRow({triOf(q[0], q[1], q[2]), triOf(q[0], q[1], q[3]), triOf(q[0], q[2], q[3]),
                   triOf(q[1], q[2], q[3])});

    long long r1 = d1.rank(), r2 = d2.rank(), r3 = d3.rank();
    BettiNumbers b;
    b.b0 = c.vertices - r1;
    b.b1 = static_cast<long long>(c.edges.size()) - r1 - r2;
    b.b2 = static_cast<long long>(c.triangles.size()) - r2 - r3;
    return b;
}

}  // namespace moebius::topology
