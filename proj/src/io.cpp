#include "moebius/io.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "config_internal.hpp"

namespace moebius::io {

using nlohmann::json;

namespace {

json pointToJson(const Point& p) {
    json a = json::array();
    for (double x : p) a.push_back(x);
    return a;
}

Point pointFromJson(const json& a) {
    Point p;
    for (const auto& x : a) p.push_back(x.get<double>());
    return p;
}

}  // namespace

std::string toJson(const config::SphereConfiguration& cfg) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["construction"] = cfg.construction;
    doc["refinement"] = cfg.refinement;
    doc["ambient"] = cfg.ambient;
    doc["params"] = json::object();
    for (const auto& [k, v] : cfg.params) doc["params"][k] = v;

    json spheres = json::array();
    for (const auto& s : cfg.spheres) {
        json js;
        js["label"] = s.label;
        js["provenance"] = s.provenance;
        js["base"] = s.base;
        if (s.sphere.kind() == SphereKind::Round) {
            js["kind"] = "round";
            js["center"] = pointToJson(s.sphere.round().center);
            js["radius"] = s.sphere.round().radius;
            js["interior_bounded"] = s.sphere.round().interiorBounded;
        } else {
            js["kind"] = "plane";
            js["normal"] = pointToJson(s.sphere.plane().normal);
            js["offset"] = s.sphere.plane().offset;
        }
        spheres.push_back(js);
    }
    doc["spheres"] = spheres;

    json blocks = json::array();
    for (const auto& b : cfg.blocks) {
        json jb;
        jb["lo"] = pointToJson(b.lo);
        jb["edge"] = b.edge;
        jb["axes"] = b.axes;
        jb["role"] = b.role;
        blocks.push_back(jb);
    }
    doc["blocks"] = blocks;

    json samples = json::array();
    for (const auto& p : cfg.targetSamples) samples.push_back(pointToJson(p));
    doc["target_samples"] = samples;

    // 17 significant digits on all doubles
    return doc.dump(1, ' ', false, json::error_handler_t::strict);
}

config::SphereConfiguration fromJson(const std::string& text) {
    json doc = json::parse(text);
    if (!doc.contains("schema_version"))
        throw std::invalid_argument("config document: missing schema_version");
    if (doc["schema_version"].get<int>() != kSchemaVersion)
        throw std::invalid_argument("config document: unsupported schema version");
    static const std::set<std::string> known = {
        "schema_version", "construction", "refinement", "ambient",
        "params",         "spheres",      "blocks",     "target_samples"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!known.count(it.key()))
            throw std::invalid_argument("config document: unknown key " + it.key());

    config::SphereConfiguration cfg;
    cfg.construction = doc["construction"].get<std::string>();
    cfg.refinement = doc["refinement"].get<int>();
    cfg.ambient = doc["ambient"].get<int>();
    for (auto it = doc["params"].begin(); it != doc["params"].end(); ++it)
        cfg.params[it.key()] = it.value().get<double>();

    for (const auto& js : doc["spheres"]) {
        config::LabeledSphere ls;
        ls.label = js["label"].get<std::string>();
        for (const auto& p : js["provenance"]) ls.provenance.push_back(p.get<std::string>());
        ls.base = js["base"].get<bool>();
        if (js["kind"] == "round") {
            ls.sphere = InversiveSphere::fromCenterRadius(pointFromJson(js["center"]),
                                                          js["radius"].get<double>());
            if (!js["interior_bounded"].get<bool>()) ls.sphere = ls.sphere.opposite();
        } else {
            ls.sphere = InversiveSphere::fromPlane(pointFromJson(js["normal"]),
                                                   js["offset"].get<double>());
        }
        cfg.spheres.push_back(std::move(ls));
    }
    for (const auto& jb : doc["blocks"]) {
        config::Block b;
        b.lo = pointFromJson(jb["lo"]);
        b.edge = jb["edge"].get<double>();
        auto ax = jb["axes"];
        b.axes = {ax[0].get<int>(), ax[1].get<int>(), ax[2].get<int>()};
        b.role = jb["role"].get<std::string>();
        cfg.blocks.push_back(std::move(b));
    }
    for (const auto& p : doc["target_samples"]) cfg.targetSamples.push_back(pointFromJson(p));

    // rebuild the derived face list deterministically
    if (!cfg.blocks.empty())
        cfg.coveredFaces =
            config::detail::exposedFaces(cfg.blocks, cfg.construction == "tennis");
    return cfg;
}

void writeConfigFile(const config::SphereConfiguration& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << toJson(cfg) << "\n";
}

config::SphereConfiguration readConfigFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return fromJson(ss.str());
}

uint64_t configHash(const config::SphereConfiguration& cfg) {
    std::string text = toJson(cfg);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void writeCsv(const std::vector<Point>& points, const std::vector<double>& weights,
              const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.precision(17);
    for (size_t i = 0; i < points.size(); ++i) {
        for (size_t k = 0; k < points[i].size(); ++k) {
            if (k) out << ',';
            out << points[i][k];
        }
        if (i < weights.size()) out << ',' << weights[i];
        out << '\n';
    }
}

void writePly(const std::vector<Point>& points, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.precision(17);
    out << "ply\nformat ascii 1.0\nelement vertex " << points.size()
        << "\nproperty double x\nproperty double y\nproperty double z\nend_header\n";
    for (const auto& p : points) {
        for (size_t k = 0; k < 3 && k < p.size(); ++k) {
            if (k) out << ' ';
            out << p[k];
        }
        if (p.size() < 3)
            for (size_t k = p.size(); k < 3; ++k) out << (k ? " 0" : "0");
        out << '\n';
    }
}

}  // namespace moebius::io
