#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "moebius/config.hpp"
#include "moebius/io.hpp"
#include "moebius/rho.hpp"
#include "moebius/topology.hpp"
#include "moebius/words.hpp"

using namespace moebius;

TEST_CASE("config document round trip") {
    auto cfg = config::buildTennisChain(0);
    auto text = io::toJson(cfg);
    auto back = io::fromJson(text);
    CHECK(back.sphereCount() == cfg.sphereCount());
    CHECK(back.blocks.size() == cfg.blocks.size());
    CHECK(back.coveredFaces.size() == cfg.coveredFaces.size());
    CHECK(back.params.at("R") == cfg.params.at("R"));
    CHECK(back.targetSamples.size() == cfg.targetSamples.size());
    // semantic identity: the documents agree bit for bit after a round trip
    CHECK(io::toJson(back) == text);
    CHECK(io::configHash(back) == io::configHash(cfg));

    // and the round-tripped configuration still certifies
    auto rep = config::validateConfiguration(back, 3);
    CHECK(rep.pass());
}

TEST_CASE("schema violations are rejected") {
    auto cfg = config::buildTennisChain(0);
    auto text = io::toJson(cfg);

    auto mangledVersion = text;
    auto pos = mangledVersion.find("\"schema_version\": 1");
    REQUIRE(pos != std::string::npos);
    mangledVersion.replace(pos, 19, "\"schema_version\": 9");
    CHECK_THROWS_AS(io::fromJson(mangledVersion), std::invalid_argument);

    auto unknownKey = text;
    pos = unknownKey.find("\"construction\"");
    REQUIRE(pos != std::string::npos);
    unknownKey.insert(pos, "\"mystery\": 1, ");
    CHECK_THROWS_AS(io::fromJson(unknownKey), std::invalid_argument);

    CHECK_THROWS(io::fromJson("not json at all"));
}

TEST_CASE("file round trip and exporters") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "moebius-io-test";
    fs::create_directories(dir);

    auto cfg = config::buildTennisChain(0);
    auto path = (dir / "tennis.json").string();
    io::writeConfigFile(cfg, path);
    auto back = io::readConfigFile(path);
    CHECK(io::configHash(back) == io::configHash(cfg));

    std::vector<Point> pts = {{0, 0, 0}, {1, 2, 3}};
    io::writeCsv(pts, {0.5, 0.25}, (dir / "cloud.csv").string());
    io::writePly(pts, (dir / "cloud.ply").string());
    std::ifstream ply(dir / "cloud.ply");
    std::string head;
    std::getline(ply, head);
    CHECK(head == "ply");

    fs::remove_all(dir);
}

TEST_CASE("rho: faces on the same sphere share an image") {
    auto cfg = config::buildTennisChain(0);
    auto grp = group::buildReflectionGroup(cfg);
    auto comp = topology::complementComponents(cfg, 96);
    REQUIRE(comp.componentCount() == 2);
    int bounded = comp.primaryBounded();
    REQUIRE(bounded >= 0);
    const auto& lattice = comp.components[bounded].lattice;

    auto assign = rho::assignFaces(lattice, grp);
    CHECK(assign.faceCount() == static_cast<int>(lattice.faces.size()));

    // the two floor sides map to the same reflection; their product is the
    // identity (a kernel element of the face group)
    auto floorFaces = rho::facesOnSphere(lattice, "S3");
    REQUIRE(floorFaces.size() == 2);
    CHECK(assign.generatorOfFace[floorFaces[0]] == assign.generatorOfFace[floorFaces[1]]);
    auto img = rho::rhoImage(assign, {floorFaces[0], floorFaces[1]});
    CHECK(img.isIdentity(1e-8));

    // single generator images are reflections
    auto one = rho::rhoImage(assign, {floorFaces[0]});
    CHECK(one.parity() == -1);

    // every angle-labeled lattice relator maps to the identity
    topology::FaceLattice labeledOnly = lattice;
    labeledOnly.edges.clear();
    for (const auto& e : lattice.edges)
        if (e.angle > 0) labeledOnly.edges.push_back(e);
    double worst = rho::verifyRhoRelators(assign, labeledOnly, 1e-6);
    CHECK(worst <= 1e-8);
}

TEST_CASE("kernel words transported through rho") {
    // x = a1 b1 with a1, b1 the reflections in two faces carried by one
    // sphere: the image collapses, matching phi(x) = e on the abstract side
    CHECK(words::phi(words::kernelGenerators()[0]) == 0);
}
