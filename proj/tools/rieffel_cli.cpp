#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rieffel/error.hpp"
#include "rieffel/harness/emit.hpp"
#include "rieffel/harness/suites.hpp"

namespace fs = std::filesystem;
using namespace rieffel::harness;

namespace {

std::ofstream open_out(const std::string& dir, const std::string& file) {
    fs::create_directories(dir);
    std::ofstream f(fs::path(dir) / file);
    if (!f) throw rieffel::ValidationError("cannot write " + (fs::path(dir) / file).string());
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rieffel induction verification harness"};
    app.set_config("--config", "", "TOML/INI file with flag defaults (flags override it)");
    app.require_subcommand(1);

    SuiteConfig cfg;
    int kappa = 0;
    std::string out, format = "text";
    bool timing = false;

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    for (const auto& suite : suite_names()) {
        auto* sub = verify->add_subcommand(suite, "verify the " + suite + " identities");
        sub->add_option("--tol-rank", cfg.tol_rank, "relative rank tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--grid-nx", cfg.grid_nx, "x points of the kappa = +-1 grids");
        sub->add_option("--grid-xmin", cfg.grid_xmin);
        sub->add_option("--grid-xmax", cfg.grid_xmax);
        sub->add_option("--kappa1-grid", cfg.kappa1_grid, "grid CSV for the kappa = 1 transform checks");
        sub->add_option("--truncation-L", cfg.truncation_L, "torus weight truncation");
        sub->add_option("--kappa", kappa, "restrict the kappa suite")->check(CLI::IsMember({-1, 0, 1}));
        sub->add_option("--group", cfg.group, "built-in group name or group file");
        sub->add_option("--check", cfg.checks, "run only these checks")->take_all();
        sub->add_option("--out", out, "also write the report to DIR/<suite>.<format>");
        sub->add_option("--format", format)->check(CLI::IsMember({"text", "kv"}));
        sub->add_flag("--timing", timing, "include wall-clock seconds in the report");
        sub->callback([&, sub, suite] {
            if (sub->count("--kappa")) cfg.kappa = kappa;
            validate_config(suite, cfg);
            const auto start = std::chrono::steady_clock::now();
            Report r = run_suite(suite, cfg);
            if (timing) r.set_elapsed(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
            auto write = [&](std::ostream& os) { format == "kv" ? r.write_kv(os) : r.write_text(os); };
            write(std::cout);
            if (!out.empty()) {
                auto f = open_out(out, suite + (format == "kv" ? ".kv" : ".txt"));
                write(f);
            }
            if (!r.ok()) throw CLI::RuntimeError(1);
        });
    }

    EmitConfig ecfg;
    auto* emit_cmd = app.add_subcommand("emit", "write plot data as CSV");
    emit_cmd->require_subcommand(1);
    for (const auto& what : emit_names()) {
        auto* sub = emit_cmd->add_subcommand(what);
        sub->add_option("--kappa", ecfg.kappa)->check(CLI::IsMember({-1, 0, 1}));
        sub->add_option("--sigma", ecfg.sigma);
        sub->add_option("--p", ecfg.p);
        sub->add_option("--grid-xmin", ecfg.xmin);
        sub->add_option("--grid-xmax", ecfg.xmax);
        sub->add_option("--grid-nx", ecfg.nx);
        sub->add_option("--out", out, "write DIR/<selector>.csv instead of stdout");
        sub->callback([&, what] {
            if (out.empty()) {
                emit(what, ecfg, std::cout);
            } else {
                auto f = open_out(out, what + ".csv");
                emit(what, ecfg, f);
            }
        });
    }

    auto* fixtures = app.add_subcommand("fixtures", "fixture files");
    fixtures->require_subcommand(1);
    std::string fixture_dir = RIEFFEL_FIXTURE_DIR;
    auto* generate = fixtures->add_subcommand("generate", "write group and grid fixtures");
    generate->add_option("--out", fixture_dir, "target directory");
    generate->callback([&] {
        for (const auto& path : generate_fixtures(fixture_dir)) std::cout << path << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const rieffel::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
