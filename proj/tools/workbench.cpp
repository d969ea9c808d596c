// Command-line surface: build the sphere configurations, certify them,
// run the complement/orbit/nerve analyses and the kernel lemma report.
// Exit codes: 0 pass, 1 analysis failure, 2 usage or schema error.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>

#include "moebius/config.hpp"
#include "moebius/group.hpp"
#include "moebius/io.hpp"
#include "moebius/rho.hpp"
#include "moebius/topology.hpp"
#include "moebius/words.hpp"

namespace fs = std::filesystem;
using namespace moebius;

namespace {

int threadsFromEnv() {
    if (const char* env = std::getenv("WORKBENCH_THREADS")) return std::max(1, atoi(env));
    return 1;
}

config::SphereConfiguration buildByName(const std::string& name, int k) {
    if (name == "tennis") return config::buildTennisChain(k);
    if (name == "spun_trefoil") return config::buildSpunTrefoil(k);
    throw CLI::ValidationError("--construction must be tennis or spun_trefoil");
}

void printCertificate(std::ostream& os, const config::SphereConfiguration& cfg,
                      const config::CertificateReport& rep) {
    os << "construction: " << cfg.construction << " k=" << cfg.refinement << "\n";
    os << "config_hash: " << std::hex << io::configHash(cfg) << std::dec
       << " schema_version: " << io::kSchemaVersion << "\n";
    os << "spheres: " << cfg.sphereCount() << "\n";
    os << "pairs: disjoint=" << rep.pairs.disjoint << " ortho=" << rep.pairs.ortho
       << " pi3=" << rep.pairs.pi3 << "\n";
    os << "worst_angle_residual: " << rep.pairs.worstAngleResidual << "\n";
    os << "min_disjoint_margin: " << rep.pairs.minDisjointMargin << "\n";
    for (const auto& v : rep.pairs.violations)
        os << "VIOLATION: " << cfg.spheres[v.i].label << " x " << cfg.spheres[v.j].label
           << " product " << v.product << " (" << v.note << ")\n";
    if (rep.coverage.checked) {
        os << "coverage: samples=" << rep.coverage.samples
           << " min_depth=" << rep.coverage.minDepth
           << (rep.coverage.covered ? " (strictly interior)" : " (NOT covered)") << "\n";
    } else {
        os << "coverage: vacuous (no target samples)\n";
    }
    os << "certificate: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
}

int cmdBuild(const std::string& construction, int k, const std::string& outDir) {
    fs::create_directories(outDir);
    auto cfg = buildByName(construction, k);
    std::string path = outDir + "/" + construction + "_k" + std::to_string(k) + ".json";
    io::writeConfigFile(cfg, path);
    std::cout << "wrote " << path << "\n";
    std::cout << "spheres: " << cfg.sphereCount() << " blocks: " << cfg.blocks.size()
              << "\n";
    for (const auto& [key, val] : cfg.params) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", val);
        std::cout << "  " << key << " = " << buf << "\n";
    }
    return 0;
}

int cmdCertify(const std::string& file, double tol) {
    auto cfg = io::readConfigFile(file);
    auto rep = config::validateConfiguration(cfg, 7, tol);
    printCertificate(std::cout, cfg, rep);
    if (!rep.pass()) return 1;
    // relator check on top of the certificate
    auto grp = group::buildReflectionGroup(cfg, tol);
    double worst = grp.worstRelatorResidual();
    std::cout << "worst_relator_residual: " << worst << "\n";
    return worst <= 1e-8 ? 0 : 1;
}

int cmdAnalyze(const std::string& file, int depth, int resolution,
               const std::string& outDir) {
    fs::create_directories(outDir);
    auto cfg = io::readConfigFile(file);
    bool ok = true;

    std::ofstream report(outDir + "/analysis.txt");
    report << "config_hash: " << std::hex << io::configHash(cfg) << std::dec
           << " schema_version: " << io::kSchemaVersion << "\n";

    auto grp = group::buildReflectionGroup(cfg);

    if (cfg.ambient == 3) {
        auto comp = topology::complementComponents(cfg, resolution);
        report << "components: " << comp.componentCount() << "\n";
        for (const auto& c : comp.components)
            report << "  cells=" << c.cells << (c.bounded ? " bounded" : " unbounded")
                   << " faces=" << c.lattice.faces.size()
                   << " edges=" << c.lattice.edges.size() << "\n";
        std::cout << "components: " << comp.componentCount() << "\n";
        if (comp.componentCount() == 2) {
            auto iso = topology::latticeIsomorphic(comp.components[0].lattice,
                                                   comp.components[1].lattice);
            report << "lattice_isomorphic: " << (iso ? "found" : "none") << "\n";
            std::cout << "lattice_isomorphic: " << (iso ? "found" : "none") << "\n";
            if (iso) {
                std::ofstream bij(outDir + "/isomorphism.txt");
                for (size_t i = 0; i < iso->size(); ++i)
                    bij << i << " -> " << (*iso)[i] << "\n";
            }
            int bounded = comp.primaryBounded();
            if (bounded >= 0) {
                const auto& lat = comp.components[bounded].lattice;
                std::map<std::string, int> bySphere;
                for (const auto& f : lat.faces) bySphere[f.sphereLabel]++;
                report << "bounded component faces by sphere:";
                for (const auto& [l, n] : bySphere) report << " " << l << ":" << n;
                report << "\n";
            }
        } else {
            ok = false;
        }

        // nerve of the chain plus its first mirror images
        auto hb = group::handlebodyBalls(cfg);
        auto nv = topology::nerve(hb, 2);
        auto bn = topology::betti(nv);
        report << "handlebody nerve betti: " << bn.b0 << " " << bn.b1 << " " << bn.b2
               << "\n";
        std::cout << "handlebody b1: " << bn.b1 << "\n";

        auto dimFromCfg = topology::dimensionFromConfiguration(cfg);
        long long dimI = 0;
        if (comp.primaryBounded() >= 0) {
            auto di = topology::dimensionFromLattice(
                comp.components[comp.primaryBounded()].lattice);
            dimI = di.dimension();
            report << "dim_i: 4*" << di.carriers << " - " << di.constraints
                   << " - 10 = " << dimI << "\n";
        }
        report << "dim_G: 4*" << dimFromCfg.carriers << " - " << dimFromCfg.constraints
               << " - 10 = " << dimFromCfg.dimension() << "\n";
        std::cout << "dimensions: (" << dimI << ", " << dimFromCfg.dimension()
                  << ")  [the source construction quotes (775, 773) for its instance]\n";
    }

    auto cloud = group::limitCloud(grp, depth, 100000);
    io::writeCsv(cloud.points, cloud.radii, outDir + "/limit_cloud.csv");
    io::writePly(cloud.points, outDir + "/limit_cloud.ply");
    report << "cloud points: " << cloud.points.size()
           << (cloud.truncated ? " (truncated)" : "") << "\n";
    report << "max radius per depth:";
    for (double r : cloud.maxRadiusPerDepth) report << " " << r;
    report << "\n";
    std::cout << "cloud points: " << cloud.points.size() << "\n";
    return ok ? 0 : 1;
}

int cmdKernel(int L, bool faulty) {
    auto gens = words::kernelGenerators();
    if (faulty)
        gens[2] = words::normalForm({{words::Factor::A, 2}, {words::Factor::B, 1}});
    auto rep = words::verifyKernelLemma(L, gens);
    std::cout << "kernel slice size (L=" << L << "): " << rep.sliceSize << "\n";
    std::cout << "clause 1 (slices equal):     " << (rep.sliceEqual ? "pass" : "FAIL")
              << "\n";
    std::cout << "clause 2 (freeness words):   " << (rep.freenessDistinct ? "pass" : "FAIL")
              << " (" << rep.freeWordsChecked << " words)\n";
    std::cout << "clause 3 (Euler rank == 3):  " << (rep.eulerRankThree ? "pass" : "FAIL")
              << " (rank " << rep.eulerRank << ")\n";
    if (rep.witness)
        std::cout << "witness: " << words::toString(*rep.witness) << "\n";
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for discrete Moebius reflection groups"};
    app.require_subcommand(1);

    std::string construction = "tennis", file, outDir = "out";
    int k = 0, depth = 3, resolution = 256, L = 8;
    double tol = 1e-9;
    bool faulty = false;

    auto* build = app.add_subcommand("build", "solve and write a configuration");
    build->add_option("--construction", construction, "tennis | spun_trefoil");
    build->add_option("--k", k, "refinement / thinning parameter");
    build->add_option("--out", outDir, "output directory");

    auto* certify = app.add_subcommand("certify", "pair classes + coverage + relators");
    certify->add_option("config", file, "configuration document")->required();
    certify->add_option("--tolerance", tol, "classification tolerance");

    auto* analyze = app.add_subcommand("analyze", "components, nerve, cloud, dimensions");
    analyze->add_option("config", file, "configuration document")->required();
    analyze->add_option("--depth", depth, "orbit depth");
    analyze->add_option("--resolution", resolution, "grid cells per axis");
    analyze->add_option("--out", outDir, "output directory");

    auto* kernel = app.add_subcommand("kernel", "free-rank-3 kernel lemma report");
    kernel->add_option("--L", L, "maximum syllable length");
    kernel->add_flag("--faulty-generators", faulty, "inject a wrong generator set");

    (void)threadsFromEnv();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) return cmdBuild(construction, k, outDir);
        if (certify->parsed()) return cmdCertify(file, tol);
        if (analyze->parsed()) return cmdAnalyze(file, depth, resolution, outDir);
        if (kernel->parsed()) return cmdKernel(L, faulty);
    } catch (const moebius::ConstructionInfeasible& e) {
        std::cerr << "construction infeasible: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
