// Batch front door: load fan files, run analyses, verify formula vs
// enumeration, emit JSON reports. Exit codes: 0 ok, 1 mismatch, 2 invalid
// fan, 3 scope violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "toriczeta/conegf.hpp"
#include "toriczeta/gcoh.hpp"
#include "toriczeta/gfan.hpp"
#include "toriczeta/heightzeta.hpp"
#include "toriczeta/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalidFan = 2;
constexpr int kExitScope = 3;
constexpr int kNMaxCap = 8;

struct RunConfig {
    std::string fan_path;
    int n_max = 4;
    int cutoff = 8;
    long long q_override = 0;
    std::string out_path;
    bool quiet = false;
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (!cfg.out_path.empty()) {
        std::ofstream os(cfg.out_path);
        if (!os) throw std::runtime_error("cannot open output file: " + cfg.out_path);
        os << text << '\n';
    } else {
        std::cout << text << '\n';
    }
}

tz::GFan load_fan(const RunConfig& cfg) {
    tz::GFan f = tz::gfan::load_json_file(cfg.fan_path);
    if (cfg.q_override != 0) {
        f.q = cfg.q_override;
        auto diag = tz::gfan::validate(f);
        if (!diag.empty()) throw tz::ValidationError("q override: " + diag.front());
    }
    return f;
}

std::string vec_str(const std::vector<tz::Int>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ']';
    return os.str();
}

int cmd_analyze(const RunConfig& cfg) {
    tz::GFan f = load_fan(cfg);
    std::ostringstream os;
    os << "fan: rank " << f.rank << ", " << f.rays.size() << " rays, "
       << f.max_cones.size() << " maximal cones, e = " << f.e << ", q = " << f.q
       << "\nvalidation: ok\n";
    auto orbs = tz::gfan::orbits(f);
    os << "ray orbits: " << orbs.size() << "\nd_alpha: [";
    for (std::size_t i = 0; i < orbs.size(); ++i)
        os << (i ? ", " : "") << orbs[i].d_alpha;
    os << "]\n";
    tz::PicardData pic = tz::gfan::picard(f);
    os << "pic_rank: " << pic.pic_rank << "\n";
    os << "anticanonical_class: " << vec_str(pic.anticanonical_class) << "\n";
    os << "effective_cone:";
    for (const auto& g : pic.effective_cone_gens) os << ' ' << vec_str(g);
    os << "\nalpha_star: " << tz::conegf::xi_alpha(pic) << "\n";
    os << "beta: " << tz::gcoh::beta(f) << "\n";
    os << "h1_g_xt_order: " << pic.h1_gxt.order() << "\n";
    os << "c_t_order: " << tz::heightzeta::c_t_order(f);
    emit(cfg, os.str());
    return kExitOk;
}

int cmd_zeta(const RunConfig& cfg, bool with_constant) {
    if (cfg.n_max < 0 || cfg.n_max > kNMaxCap)
        throw tz::ScopeError("nmax must be in [0, 8]");
    tz::GFan f = load_fan(cfg);
    tz::ZetaReport rep =
        tz::heightzeta::full_report(f, with_constant ? cfg.n_max : cfg.n_max, cfg.cutoff);
    emit(cfg, tz::heightzeta::report_json(rep));
    return kExitOk;
}

int cmd_constant(const RunConfig& cfg) {
    tz::GFan f = load_fan(cfg);
    tz::ZetaReport rep;
    tz::heightzeta::peyre_constant(f, cfg.cutoff, rep);
    emit(cfg, tz::heightzeta::report_json(rep));
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    if (cfg.n_max < 0 || cfg.n_max > kNMaxCap)
        throw tz::ScopeError("nmax must be in [0, 8]");
    tz::GFan f = load_fan(cfg);
    auto formula = tz::heightzeta::zeta_coeffs(f, cfg.n_max);
    tz::PointBatch batch =
        f.e == 1 ? tz::oracle::enumerate_split(f, f.q, cfg.n_max)
                 : tz::oracle::enumerate_res_torus(f, f.q, f.e, cfg.n_max);
    for (int n = 0; n <= cfg.n_max; ++n)
        if (formula[n] != batch.counts[n]) {
            std::cerr << "mismatch at n = " << n << ": formula " << formula[n]
                      << ", enumeration " << batch.counts[n] << '\n';
            return kExitMismatch;
        }
    if (!cfg.quiet)
        emit(cfg, "verify: all " + std::to_string(cfg.n_max + 1) + " bins agree");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"height zeta functions of toric varieties over F_q(t)"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--fan", cfg.fan_path, "fan JSON file")->required();
    app.add_option("--nmax", cfg.n_max, "largest height exponent");
    app.add_option("--cutoff", cfg.cutoff, "place-degree cutoff for tau_H");
    app.add_option("--q", cfg.q_override, "override the fan's base field size");
    app.add_option("--out", cfg.out_path, "write the report here instead of stdout");
    app.add_flag("--quiet", cfg.quiet, "suppress non-essential output");

    auto* analyze = app.add_subcommand("analyze", "validate and print invariants");
    auto* zeta = app.add_subcommand("zeta", "coefficients N(n) of the height zeta");
    auto* constant = app.add_subcommand("constant", "Peyre-type leading constant");
    auto* verify = app.add_subcommand("verify", "formula vs brute-force enumeration");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(cfg);
        if (app.got_subcommand(zeta)) return cmd_zeta(cfg, false);
        if (app.got_subcommand(constant)) return cmd_constant(cfg);
        if (app.got_subcommand(verify)) return cmd_verify(cfg);
    } catch (const tz::ValidationError& e) {
        std::cerr << "invalid fan: " << e.what() << '\n';
        return kExitInvalidFan;
    } catch (const tz::ScopeError& e) {
        std::cerr << "scope violation: " << e.what() << '\n';
        return kExitScope;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidFan;
    }
    return kExitOk;
}
