// Copyright 2026 the solxs developers.
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "solxs/cli.hpp"
#include "solxs/figure1.hpp"
#include "solxs/io.hpp"
#include "solxs/verify.hpp"
#include "solxs/xsec.hpp"

using namespace solxs;
namespace fs = std::filesystem;

namespace {

std::string render_csv(const Table& t) {
    std::ostringstream os;
    emit_csv(t, os);
    return os.str();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"solxs"};
    argv.insert(argv.end(), args);
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("solxs_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("serialized doubles round-trip at full precision") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const double v = std::ldexp(uniform01(rng()) - 0.5, int(uniform01(rng()) * 600) - 300);
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("csv emission") {
    Table t;
    t.columns = {"a", "b"};
    CHECK(render_csv(t) == "a,b\n");  // empty dataset: header only

    t.rows.push_back({1.0, 0.5});
    t.metadata = {"seed = 7"};
    CHECK(render_csv(t) == "# seed = 7\na,b\n1,0.5\n");

    // determinism
    CHECK(render_csv(t) == render_csv(t));
}

TEST_CASE("json round trip") {
    Table t;
    t.columns = {"x", "y"};
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) t.rows.push_back({uniform01(rng()) * 1e-7, -uniform01(rng()) * 1e9});
    std::ostringstream os;
    emit_json(t, os);
    const nlohmann::json j = nlohmann::json::parse(os.str());
    REQUIRE(j.is_array());
    REQUIRE(j.size() == t.rows.size());
    for (size_t i = 0; i < t.rows.size(); ++i) {
        CHECK(j[i]["x"].get<double>() == t.rows[i][0]);
        CHECK(j[i]["y"].get<double>() == t.rows[i][1]);
    }
}

TEST_CASE("figure-1 dataset") {
    const UnitSystem u = UnitSystem::cgs();
    Figure1Spec spec = Figure1Spec::defaults(u);
    spec.n_theta = 60;
    const auto rows = figure1_dataset(spec, u);
    REQUIRE(rows.size() == 25u * 2u * 60u);

    // 25 energies, 1..49 MeV in steps of 2
    std::map<double, int> energies;
    for (const auto& r : rows) energies[r.energy_mev]++;
    REQUIRE(energies.size() == 25u);
    CHECK(energies.begin()->first == 1.0);
    CHECK(energies.rbegin()->first == 49.0);
    for (const auto& [e, count] : energies) CHECK(count == 120);

    // exact symmetry: rows at -theta and +theta carry identical values
    std::map<std::pair<double, double>, double> by_key;
    for (const auto& r : rows) by_key[{r.energy_mev, r.theta_rad}] = r.sigma_scaled;
    for (const auto& r : rows) {
        CHECK(by_key.at({r.energy_mev, -r.theta_rad}) == r.sigma_scaled);
        CHECK(std::isfinite(r.sigma_scaled));
        CHECK(r.sigma_scaled >= 0.0);
    }

    // the forward band is excluded
    for (const auto& r : rows) CHECK(std::fabs(r.theta_rad) > spec.theta_band);

    // the default flux is one quantum: rows reproduce the quantized formula
    const double p49 = momentum_from_kinetic(49.0 * kErgPerMeV, kElectronMassGram, u);
    for (const auto& r : rows) {
        if (r.energy_mev != 49.0 || r.theta_rad < 1.0) continue;
        const double quant =
            quantized_xsec(1, spec.r0, p49, r.theta_rad, 1, u).value * spec.scale;
        CHECK(std::fabs(r.sigma_scaled / quant - 1.0) < 1e-12);
    }

    // order-of-magnitude of the scaled values over the wide-angle half of the
    // top-energy series (the 1e52 factor puts the plot there)
    double lo = 1e300, hi = 0.0;
    for (const auto& r : rows) {
        if (r.energy_mev != 49.0 || r.theta_rad < M_PI_2) continue;
        lo = std::min(lo, r.sigma_scaled);
        hi = std::max(hi, r.sigma_scaled);
    }
    CHECK(hi > 1.0);
    CHECK(hi < 1e4);
}

TEST_CASE("cli: point evaluation, config equivalence, errors") {
    TempDir tmp;
    const fs::path out1 = tmp.path / "flag.json";
    const fs::path out2 = tmp.path / "cfg.json";
    const fs::path out3 = tmp.path / "env.json";
    const fs::path cfg = tmp.path / "run.cfg";

    CHECK(cli({"xsec", "point", "--formula", "master", "--energy-mev", "5", "--theta", "0.7",
               "--r0-cm", "1", "--quanta", "1", "--format", "json", "--out",
               out1.c_str()}) == 0);

    {
        std::ofstream c(cfg);
        c << "# figure-style run\n";
        c << "formula = master\n";
        c << "energy-mev = 5\n";
        c << "theta = 0.7\n";
        c << "r0-cm = 1\n";
        c << "quanta = 1\n";
        c << "format = json\n";
    }
    CHECK(cli({"--config", cfg.c_str(), "xsec", "point", "--out", out2.c_str()}) == 0);
    CHECK(slurp(out1) == slurp(out2));

    // the environment variable names the default config
    setenv("SOLENOID_XSEC_CONFIG", cfg.c_str(), 1);
    CHECK(cli({"xsec", "point", "--out", out3.c_str()}) == 0);
    unsetenv("SOLENOID_XSEC_CONFIG");
    CHECK(slurp(out1) == slurp(out3));

    // flags override the config
    const fs::path out4 = tmp.path / "override.json";
    CHECK(cli({"--config", cfg.c_str(), "xsec", "point", "--theta", "-0.7", "--out",
               out4.c_str()}) == 0);
    const nlohmann::json a = nlohmann::json::parse(slurp(out1));
    const nlohmann::json b = nlohmann::json::parse(slurp(out4));
    CHECK(b["inputs"]["theta_rad"].get<double>() == -0.7);
    CHECK(a["value_cm_per_rad"].get<double>() == b["value_cm_per_rad"].get<double>());
    CHECK(a["regime"] == "asymptotic");

    // forward singularity: nonzero exit
    CHECK(cli({"xsec", "point", "--energy-mev", "5", "--theta", "0", "--quanta", "1"}) != 0);
    // unknown formula: nonzero exit
    CHECK(cli({"xsec", "point", "--formula", "nope", "--energy-mev", "5", "--theta", "1"}) != 0);
    // missing momentum: nonzero exit
    CHECK(cli({"xsec", "point", "--theta", "1"}) != 0);
}

TEST_CASE("cli: figure1 and scans write byte-stable files") {
    TempDir tmp;
    const fs::path f1 = tmp.path / "fig1a.csv";
    const fs::path f2 = tmp.path / "fig1b.csv";
    CHECK(cli({"figure1", "--n-theta", "40", "--out", f1.c_str()}) == 0);
    CHECK(cli({"figure1", "--n-theta", "40", "--out", f2.c_str()}) == 0);
    const std::string a = slurp(f1);
    CHECK(a == slurp(f2));
    // header + 25 energies x 80 angles
    CHECK(std::count(a.begin(), a.end(), '\n') == 1 + 25 * 80);
    CHECK(a.rfind("energy_mev,theta_rad,sigma_scaled\n", 0) == 0);

    const fs::path sc = tmp.path / "scan.csv";
    CHECK(cli({"limits", "scan-hbar", "--units", "natural", "--p", "1", "--theta", "1.5707963",
               "--r0-cm", "1", "--flux", "1", "--smin", "1e-3", "--smax", "1e-2", "--points",
               "3400", "--out", sc.c_str()}) == 0);
    const std::string s = slurp(sc);
    CHECK(s.find("s,sigma_cm_per_rad") != std::string::npos);
}

TEST_CASE("cli: scan-theta emits a symmetric grid result") {
    TempDir tmp;
    const fs::path out = tmp.path / "scan.csv";
    CHECK(cli({"xsec", "scan-theta", "--units", "natural", "--p", "2", "--flux", "1", "--r0-cm",
               "1", "--theta-min", "0.5", "--theta-max", "1.5", "--points", "11", "--out",
               out.c_str()}) == 0);
    const std::string s = slurp(out);
    CHECK(std::count(s.begin(), s.end(), '\n') == 2 + 1 + 11);  // metadata + header + rows
}
