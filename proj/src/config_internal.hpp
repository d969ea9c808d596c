#pragma once

// Internal helpers shared by the configuration builders.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

#include "moebius/config.hpp"

namespace moebius::config::detail {

inline long long quant(double x) { return llround(x * 1e9); }

inline std::vector<long long> quantPoint(const Point& p) {
    std::vector<long long> q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[i] = quant(p[i]);
    return q;
}

// A square 2-face is identified by its quantized corner box alone: in R^4
// the same square bounds blocks living in different hyperplanes (it is
// degenerate along two axes), so the normal direction must not enter the key.
struct FaceKey {
    std::vector<long long> loQ, hiQ;
    auto operator<=>(const FaceKey&) const = default;
};

struct FaceSlot {
    int block;
    int normalAxis;
    bool high;
};

inline FaceKey faceKey(const Block& b, int normalAxis, bool high) {
    double plane = b.lo[normalAxis] + (high ? b.edge : 0.0);
    Point lo = b.lo, hi = b.lo;
    for (int a : b.axes) hi[a] += b.edge;
    lo[normalAxis] = hi[normalAxis] = plane;
    return FaceKey{quantPoint(lo), quantPoint(hi)};
}

// Block faces not shared with another block and (optionally) not lying in a
// coordinate plane {x_i = 0} (the tennis walls and floor absorb those).
inline std::vector<BlockFace> exposedFaces(const std::vector<Block>& blocks,
                                           bool wallsAt0) {
    std::map<FaceKey, std::vector<FaceSlot>> byKey;
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
        const Block& b = blocks[bi];
        for (int a : b.axes) {
            byKey[faceKey(b, a, false)].push_back({static_cast<int>(bi), a, false});
            byKey[faceKey(b, a, true)].push_back({static_cast<int>(bi), a, true});
        }
    }
    std::vector<BlockFace> out;
    for (const auto& [key, owners] : byKey) {
        if (owners.size() > 1) continue;
        if (wallsAt0) {
            bool onWall = false;
            for (size_t i = 0; i < key.loQ.size(); ++i)
                if (key.loQ[i] == 0 && key.hiQ[i] == 0) onWall = true;
            if (onWall) continue;
        }
        const FaceSlot& slot = owners.front();
        const Block& b = blocks[slot.block];
        BlockFace f;
        f.block = slot.block;
        f.normalAxis = slot.normalAxis;
        f.high = slot.high;
        f.side = b.edge;
        std::vector<int> tang;
        for (int a : b.axes)
            if (a != slot.normalAxis) tang.push_back(a);
        std::sort(tang.begin(), tang.end());
        f.uAxis = tang[0];
        f.vAxis = tang[1];
        f.center = b.lo;
        for (int a : b.axes) f.center[a] += b.edge / 2;
        f.center[slot.normalAxis] = b.lo[slot.normalAxis] + (slot.high ? b.edge : 0.0);
        out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](const BlockFace& a, const BlockFace& b) {
        if (a.block != b.block) return a.block < b.block;
        if (a.normalAxis != b.normalAxis) return a.normalAxis < b.normalAxis;
        return a.high < b.high;
    });
    return out;
}

inline Point facePoint(const BlockFace& f, double u, double v) {
    Point p = f.center;
    p[f.uAxis] += u;
    p[f.vAxis] += v;
    return p;
}

// Deduplicating sphere sink; merged spheres keep every provenance note.
struct SphereAccumulator {
    SphereConfiguration* cfg;
    const FaceCover* fc;
    std::map<std::pair<std::vector<long long>, long long>, int> index;

    void add(const Point& center, double radius, const std::string& provenance) {
        auto key = std::make_pair(quantPoint(center), quant(radius));
        auto it = index.find(key);
        if (it != index.end()) {
            cfg->spheres[it->second].provenance.push_back(provenance);
            return;
        }
        LabeledSphere ls;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "B%04zu", cfg->spheres.size());
        ls.label = buf;
        ls.provenance = {provenance};
        ls.sphere = InversiveSphere::fromCenterRadius(center, radius);
        index[key] = static_cast<int>(cfg->spheres.size());
        cfg->spheres.push_back(std::move(ls));
    }

    void coverFace(const BlockFace& f, int faceIdx) {
        double scale = f.side / fc->side;
        double h = f.side / 2;
        std::string tag = "face" + std::to_string(faceIdx);
        for (int su : {-1, 1})
            for (int sv : {-1, 1})
                add(facePoint(f, su * h, sv * h), fc->vertexRadius * scale,
                    tag + ":vertex");
        double t = fc->ringOffset * scale;
        double ri = fc->ringRadius * scale;
        add(facePoint(f, t, 0), ri, tag + ":ring+u");
        add(facePoint(f, -t, 0), ri, tag + ":ring-u");
        add(facePoint(f, 0, t), ri, tag + ":ring+v");
        add(facePoint(f, 0, -t), ri, tag + ":ring-v");
        add(facePoint(f, 0, 0), fc->closerRadius * scale, tag + ":closer");
    }
};

}  // namespace moebius::config::detail
