// Command-line front end: verification suites, spectrum tables, simulation,
// definiteness/region scans, and ground-state factorisation.
// Exit codes: 0 = all checks pass, 1 = a verified claim failed, 2 = bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "pulab/algebra.hpp"
#include "pulab/classical.hpp"
#include "pulab/factorization.hpp"
#include "pulab/params.hpp"
#include "pulab/sampling.hpp"
#include "pulab/spectrum.hpp"
#include "pulab/states.hpp"

using json = nlohmann::json;
using namespace pulab;

namespace {

struct Config {
    double nu2 = 2.0;
    double Omega = 1.0;
    int eta = +1;
    double tol = 1e-10;
    unsigned long seed = 42;
    double t_max = 10.0;
    double dt = 1e-3;
    int k_max = 8;
    int n_max = 8;
    int grid_c = 100;
    int grid_p = 20;
    int samples = 20;
    bool as_json = false;
    bool as_csv = false;
    std::string structure = "jg";
    std::string out;
    double perturb_kappa = 1.0;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit(const Config& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw Error("cannot open output file " + cfg.out);
    f << text;
}

json report_json(const Report& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    return checks;
}

json params_json(const Config& cfg) {
    return {{"nu2", cfg.nu2}, {"Omega", cfg.Omega}, {"eta", cfg.eta},
            {"tol", cfg.tol}, {"seed", cfg.seed}};
}

int cmd_verify(const Config& cfg) {
    const ModelParams p = derive_params(cfg.nu2, cfg.Omega, cfg.eta);
    Report rep = verify_identity_suite(p, cfg.tol, cfg.perturb_kappa);
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < cfg.samples; ++i) {
        const ModelParams ps = sample_params(rng);
        Report r = verify_identity_suite(ps, cfg.tol, cfg.perturb_kappa);
        for (auto& c : r.checks) c.name = "sample " + std::to_string(i) + ": " + c.name;
        rep.merge(r);
    }
    const double chain_tol = std::max(cfg.tol, 1e-9);
    for (int k = 1; k <= std::min(cfg.k_max, kChainDepthCap); ++k) {
        const JordanChainReport cr = build_chain(k, p, chain_tol);
        rep.add("chain k=" + std::to_string(k) + " termination",
                cr.termination_residual, chain_tol);
        for (std::size_t l = 0; l < cr.relation_residuals.size(); ++l)
            rep.add("chain k=" + std::to_string(k) + " relation l=" +
                        std::to_string(l + 1),
                    cr.relation_residuals[l], chain_tol);
        rep.merge(verify_sector_actions(k, p, chain_tol));
        if (k <= 4) rep.merge(verify_mplus_explicit(k, p, chain_tol));
    }
    rep.merge(verify_intertwiner_ladder(std::min(cfg.n_max, kChainDepthCap), p,
                                        chain_tol));
    json out = {{"checks", report_json(rep)},
                {"params", params_json(cfg)},
                {"pass", rep.pass()}};
    emit(cfg, out.dump(2) + "\n");
    return rep.pass() ? 0 : 1;
}

int cmd_spectrum(const Config& cfg) {
    if (cfg.k_max > kChainDepthCap || cfg.n_max > kChainDepthCap)
        throw ChainDepthExceeded("k-max/n-max above " +
                                 std::to_string(kChainDepthCap));
    const ModelParams p = derive_params(cfg.nu2, cfg.Omega, cfg.eta);
    const double chain_tol = std::max(cfg.tol, 1e-9);
    const Report ladder =
        verify_intertwiner_ladder(cfg.n_max, p, chain_tol);
    if (cfg.as_csv) {
        std::ostringstream os;
        os << "n,E_n,residual_H1,residual_Hg\n";
        for (int n = 0; n <= cfg.n_max; ++n)
            os << n << "," << fmt(eigenvalue_E(n, p)) << ","
               << fmt(ladder.checks[2 * n].residual) << ","
               << fmt(ladder.checks[2 * n + 1].residual) << "\n";
        emit(cfg, os.str());
        return ladder.pass() ? 0 : 1;
    }
    Report rep = ladder;
    json chains = json::array();
    for (int k = 1; k <= cfg.k_max; ++k) {
        const JordanChainReport cr = build_chain(k, p, chain_tol);
        rep.add("chain k=" + std::to_string(k) + " termination",
                cr.termination_residual, chain_tol);
        json rel = json::array();
        for (std::size_t l = 0; l < cr.relation_residuals.size(); ++l) {
            rep.add("chain k=" + std::to_string(k) + " relation l=" +
                        std::to_string(l + 1),
                    cr.relation_residuals[l], chain_tol);
            rel.push_back(cr.relation_residuals[l]);
        }
        // every member of the fixed-k chain is an H2 eigenstate, same eigenvalue
        const WeylOp H2 = build_H2(p);
        const double ev2 = std::sqrt(2.0) * p.eta * p.kappa * k;
        double h2_resid = 0.0;
        for (const auto& s : cr.states) {
            const GaussPolyState d = state_add(apply_to_state(H2, s), s, 1.0, -ev2);
            h2_resid = std::max(h2_resid, poly_max_abs(d.poly) / cr.chain_scale);
        }
        rep.add("chain k=" + std::to_string(k) + " H2 degeneracy", h2_resid,
                chain_tol);
        chains.push_back({{"k", cr.k},
                          {"eigenvalue", cr.eigenvalue},
                          {"termination_residual", cr.termination_residual},
                          {"relation_residuals", rel},
                          {"pass", cr.pass(chain_tol)}});
        rep.merge(verify_sector_actions(k, p, chain_tol));
    }
    json table = json::array();
    for (int n = 0; n <= cfg.n_max; ++n)
        table.push_back({{"n", n}, {"E_n", eigenvalue_E(n, p)}});
    json out = {{"checks", report_json(rep)},
                {"params", params_json(cfg)},
                {"levels", table},
                {"chains", chains},
                {"unbounded_below", p.eta < 0},
                {"pass", rep.pass()}};
    emit(cfg, out.dump(2) + "\n");
    return rep.pass() ? 0 : 1;
}

int cmd_simulate(const Config& cfg) {
    if (!(cfg.dt > 0.0) || !(cfg.t_max > 0.0))
        throw Error("t-max and dt must be positive");
    const ModelParams p = derive_params(cfg.nu2, cfg.Omega, cfg.eta);
    PoissonTensor J;
    QuadHamiltonian H;
    if (cfg.structure == "jg") {
        J = build_Jg();
        H = build_Hg_classical(p);
    } else if (cfg.structure == "j2") {
        J = build_J2(p);
        H = build_H2_classical(p);
    } else if (cfg.structure.rfind("combined:", 0) == 0) {
        double c1 = 0.0, c2 = 0.0;
        if (std::sscanf(cfg.structure.c_str(), "combined:%lf,%lf", &c1, &c2) != 2)
            throw Error("bad --structure, expected combined:c1,c2");
        const CombinedPair cp = combined_pair(c1, c2, p);
        J = cp.Jbar;
        H = cp.Hbar;
    } else {
        throw Error("unknown --structure " + cfg.structure);
    }
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec4 z0;
    for (int i = 0; i < 4; ++i) z0[i] = gauss(rng);
    const auto traj = integrate(J, H, z0, cfg.t_max, cfg.dt);
    const QuadHamiltonian Hg = build_Hg_classical(p);
    const double H0 = Hg.value(z0);
    const double Q0 = conserved_Q(to_state(z0), p);
    double h_drift = 0.0, q_drift = 0.0, exact_err = 0.0;
    for (const auto& [t, z] : traj) {
        h_drift = std::max(h_drift, std::abs(Hg.value(z) - H0));
        q_drift = std::max(q_drift, std::abs(conserved_Q(to_state(z), p) - Q0));
        exact_err = std::max(
            exact_err, (z - exact_solution(z0, t, p)).cwiseAbs().maxCoeff());
    }
    if (cfg.as_csv) {
        std::ostringstream os;
        os << "t,x,y,px,py,H,Q\n";
        for (const auto& [t, z] : traj)
            os << fmt(t) << "," << fmt(z[0]) << "," << fmt(z[1]) << ","
               << fmt(z[2]) << "," << fmt(z[3]) << "," << fmt(Hg.value(z))
               << "," << fmt(conserved_Q(to_state(z), p)) << "\n";
        emit(cfg, os.str());
        return 0;
    }
    Report rep;
    rep.add("H drift", h_drift, 1e-8 * std::max(1.0, std::abs(H0)));
    rep.add("Q drift", q_drift, 1e-8 * std::max(1.0, std::abs(Q0)));
    rep.add("max error vs exact solution", exact_err, 1e-6);
    json out = {{"checks", report_json(rep)},
                {"params", params_json(cfg)},
                {"structure", cfg.structure},
                {"z0", {z0[0], z0[1], z0[2], z0[3]}},
                {"pass", rep.pass()}};
    emit(cfg, out.dump(2) + "\n");
    return rep.pass() ? 0 : 1;
}

int cmd_scan(const Config& cfg) {
    const DefinitenessScanReport ds =
        definiteness_scan(cfg.grid_c, cfg.grid_p, cfg.seed);
    const RegionScanReport rs = lambda_region_scan(200, cfg.seed);
    if (cfg.as_csv) {
        std::ostringstream os;
        os << "nu2,Omega,eta,lambda_plus,lambda_minus,a1,a2,a3,normalizable\n";
        for (const auto& r : rs.rows)
            os << fmt(r.nu2) << "," << fmt(r.Omega) << "," << r.eta << ","
               << fmt(r.lambda_plus) << "," << fmt(r.lambda_minus) << ","
               << fmt(r.a1) << "," << fmt(r.a2) << "," << fmt(r.a3) << ","
               << (r.normalizable ? 1 : 0) << "\n";
        emit(cfg, os.str());
        return 0;
    }
    Report rep;
    rep.add("simultaneous positive-definite count", double(ds.simultaneous_pd),
            0.0);
    rep.add("closed-form vs numerical block eigenvalues",
            ds.max_closed_form_residual, 1e-12);
    rep.add("lambda_minus negative everywhere",
            rs.lambda_minus_all_negative ? 0.0 : 1.0, 0.0);
    json out = {
        {"checks", report_json(rep)},
        {"params", params_json(cfg)},
        {"definiteness",
         {{"grid_points", ds.grid_points},
          {"simultaneous_pd", ds.simultaneous_pd},
          {"best_min_eig", ds.best_min_eig},
          {"best_point",
           {{"c1", ds.best_c1}, {"c2", ds.best_c2},
            {"nu2", ds.best_nu2}, {"Omega", ds.best_Omega}}}}},
        {"lambda_region",
         {{"samples", rs.rows.size()},
          {"lambda_plus_positive_fraction", rs.lambda_plus_positive_fraction},
          {"lambda_minus_all_negative", rs.lambda_minus_all_negative},
          {"smallest_lambda_plus", rs.closest_to_boundary.lambda_plus}}},
        {"pass", rep.pass()}};
    emit(cfg, out.dump(2) + "\n");
    return rep.pass() ? 0 : 1;
}

int cmd_factorize(const Config& cfg) {
    const ModelParams p = derive_params(cfg.nu2, cfg.Omega, cfg.eta);
    const FactorizationResult f = factorize(p);
    json out = {
        {"params", params_json(cfg)},
        {"lambda_plus", f.lambda_plus},
        {"lambda_minus", f.lambda_minus},
        {"rho_plus", f.rho_plus},
        {"rho_minus", f.rho_minus},
        {"v_plus", {f.v_plus[0], f.v_plus[1]}},
        {"v_minus", {f.v_minus[0], f.v_minus[1]}},
        {"a1", f.a1},
        {"a2", f.a2},
        {"a3", f.a3},
        {"normalizable", f.lambda_plus_positive},
        {"a1_negative", f.a1 < 0.0},
        {"a2_negative", f.a2 < 0.0},
        {"pass", true}};
    emit(cfg, out.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"resonant fourth-order oscillator laboratory"};
    app.require_subcommand(1);
    Config cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--nu2", cfg.nu2);
        sub->add_option("--omega-cap", cfg.Omega);
        sub->add_option("--eta", cfg.eta);
        sub->add_option("--tol", cfg.tol);
        sub->add_option("--seed", cfg.seed);
        sub->add_option("--t-max", cfg.t_max);
        sub->add_option("--dt", cfg.dt);
        sub->add_option("--k-max", cfg.k_max);
        sub->add_option("--n-max", cfg.n_max);
        sub->add_option("--grid-c", cfg.grid_c);
        sub->add_option("--grid-p", cfg.grid_p);
        sub->add_option("--samples", cfg.samples);
        sub->add_flag("--json", cfg.as_json);
        sub->add_flag("--csv", cfg.as_csv);
        sub->add_option("--structure", cfg.structure);
        sub->add_option("--out", cfg.out);
        sub->add_option("--perturb-kappa", cfg.perturb_kappa)
            ->group(""); // hidden: negative-control knob
    };
    auto* verify = app.add_subcommand("verify", "run the identity suites");
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalue ladder and chains");
    auto* simulate = app.add_subcommand("simulate", "integrate the classical flow");
    auto* scan = app.add_subcommand("scan", "definiteness and region scans");
    auto* factorize_ = app.add_subcommand("factorize", "ground-state factorisation");
    for (auto* s : {verify, spectrum, simulate, scan, factorize_}) add_common(s);

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return cmd_verify(cfg);
        if (spectrum->parsed()) return cmd_spectrum(cfg);
        if (simulate->parsed()) return cmd_simulate(cfg);
        if (scan->parsed()) return cmd_scan(cfg);
        if (factorize_->parsed()) return cmd_factorize(cfg);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
