#include "rieffel/harness/emit.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <ostream>

#include "rieffel/classical/flow.hpp"
#include "rieffel/error.hpp"
#include "rieffel/groups/builtin_groups.hpp"
#include "rieffel/groups/group_io.hpp"
#include "rieffel/kappa/bessel_transforms.hpp"
#include "rieffel/kappa/light_cone.hpp"
#include "rieffel/kappa/time_average.hpp"
#include "rieffel/numerics/grid_io.hpp"

namespace rieffel::harness {

namespace {

void row(std::ostream& os, std::initializer_list<double> values) {
    char buf[32];
    bool first = true;
    for (double v : values) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        if (!first) os << ',';
        os << buf;
        first = false;
    }
    os << '\n';
}

void check_pm_kappa(int kappa, const char* what) {
    if (kappa != 1 && kappa != -1) throw ValidationError(std::string("emit ") + what + ": --kappa must be 1 or -1");
}

void emit_trajectory(const EmitConfig& cfg, std::ostream& os) {
    classical::check_kappa(cfg.kappa);
    const classical::PhasePoint s = cfg.kappa == 0 ? classical::PhasePoint{0, 0, 1, 1}
                                    : cfg.kappa == 1 ? classical::PhasePoint{0, 5, 0, 1}
                                                     : classical::PhasePoint{0, 0, 1, 0};
    classical::write_trajectory_csv(os, cfg.kappa, classical::sample_trajectory(cfg.kappa, s, -2.0, 2.0, 400));
}

void emit_eigenfunction(const EmitConfig& cfg, std::ostream& os) {
    check_pm_kappa(cfg.kappa, "eigenfunction");
    if (cfg.nx < 2 || !(cfg.xmax > cfg.xmin)) throw ValidationError("emit eigenfunction: bad x range");
    os << "x,re,im\n";
    for (long k = 0; k < cfg.nx; ++k) {
        const double x = cfg.xmin + (cfg.xmax - cfg.xmin) * static_cast<double>(k) / static_cast<double>(cfg.nx - 1);
        const auto f = cfg.kappa == 1 ? kappa::kappa1_eigfun(cfg.sigma, cfg.p, x, 0.0) : kappa::kappa_m1_eigfun(cfg.sigma, cfg.p, x, 0.0);
        row(os, {x, f.real(), f.imag()});
    }
}

void emit_vmap(const EmitConfig& cfg, std::ostream& os) {
    if (cfg.kappa == 0) {
        const auto psi = kappa::make_test_function(kappa::cone_gaussian_fixture());
        const auto s = kappa::kappa0_vmap(psi, kappa::uniform_cone_grid(6.0, 120));
        os << "p,plus_re,plus_im,minus_re,minus_im\n";
        for (std::size_t k = 0; k < s.grid.p.size(); ++k) {
            const auto i = static_cast<Eigen::Index>(k);
            row(os, {s.grid.p[k], s.plus(i).real(), s.plus(i).imag(), s.minus(i).real(), s.minus(i).imag()});
        }
        return;
    }
    check_pm_kappa(cfg.kappa, "vmap");
    std::vector<double> p;
    for (int k = -40; k <= 40; ++k)
        if (k != 0) p.push_back(0.1 * k);
    const auto psi = kappa::kappa1_gaussian_fixture();
    const auto s = cfg.kappa == 1 ? kappa::kappa1_vmap(psi, p) : kappa::kappa_m1_vmap(psi, p);
    os << "p,re,im\n";
    for (std::size_t k = 0; k < p.size(); ++k) {
        const auto v = s.values(static_cast<Eigen::Index>(k));
        row(os, {p[k], v.real(), v.imag()});
    }
}

void emit_convergence(const EmitConfig&, std::ostream& os) {
    const auto psi = kappa::make_test_function(kappa::cone_gaussian_fixture());
    const kappa::Kappa0TimeAverage avg(psi, psi);
    const double exact = 1.0 / (4.0 * std::numbers::pi);
    os << "T,value,abs_error\n";
    for (double t : {12.5, 25.0, 50.0, 100.0, 200.0}) {
        const double v = avg(t).real();
        row(os, {t, v, std::abs(v - exact)});
    }
}

}  // namespace

const std::vector<std::string>& emit_names() {
    static const std::vector<std::string> names = {"trajectory", "eigenfunction", "vmap", "convergence"};
    return names;
}

void emit(const std::string& what, const EmitConfig& cfg, std::ostream& os) {
    if (what == "trajectory") return emit_trajectory(cfg, os);
    if (what == "eigenfunction") return emit_eigenfunction(cfg, os);
    if (what == "vmap") return emit_vmap(cfg, os);
    if (what == "convergence") return emit_convergence(cfg, os);
    throw ValidationError("unknown emit selector '" + what + "' (valid: trajectory eigenfunction vmap convergence)");
}

std::vector<std::string> generate_fixtures(const std::string& dir) {
    namespace fs = std::filesystem;
    const fs::path root(dir);
    fs::create_directories(root / "groups");
    fs::create_directories(root / "grids");
    std::vector<std::string> written;
    for (const auto& name : groups::builtin_group_names()) {
        const auto path = (root / "groups" / (name + ".txt")).string();
        groups::write_group_file(path, groups::builtin_group(name));
        written.push_back(path);
    }
    const auto cone = (root / "grids" / "cone_gaussian.csv").string();
    numerics::write_grid_csv(cone, kappa::cone_gaussian_fixture());
    written.push_back(cone);
    const auto k1 = (root / "grids" / "kappa1_gaussian.csv").string();
    numerics::write_grid_csv(k1, kappa::kappa1_gaussian_fixture());
    written.push_back(k1);
    return written;
}

}  // namespace rieffel::harness
