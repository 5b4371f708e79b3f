#pragma once

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "para/io.hpp"

namespace para {

// Exit-code contract: 0 all checks pass, 1 verification failure,
// 2 usage or I/O failure.
inline constexpr int kExitPass = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;

namespace cli_detail {

inline Statistic parse_stat(const std::string& s) {
    if (s == "bose") return Statistic::Bose;
    if (s == "fermi") return Statistic::Fermi;
    throw CLI::ValidationError("--stat", "must be 'bose' or 'fermi'");
}

inline std::vector<int> parse_orders(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = std::stoi(tok);
        if (v < 1) throw CLI::ValidationError("--orders", "orders must be >= 1");
        out.push_back(v);
    }
    if (out.empty()) throw CLI::ValidationError("--orders", "empty order list");
    return out;
}

struct Output {
    std::ostream& out;
    bool verbose;
    std::vector<Report> reports;

    void take(Report r) {
        r.render(out, verbose);
        reports.push_back(std::move(r));
    }
    bool all_passed() const {
        for (const auto& r : reports)
            if (!r.all_passed()) return false;
        return true;
    }
    nlohmann::json json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        return arr;
    }
};

inline int finish(Output& o, const std::string& json_path, std::ostream& err) {
    std::size_t passed = 0, failed = 0;
    for (const auto& r : o.reports) {
        passed += r.passed();
        failed += r.failed();
    }
    o.out << "total: " << passed << " passed, " << failed << " failed\n";
    if (!json_path.empty()) {
        std::ofstream jf(json_path);
        if (!jf) {
            err << "error: cannot write " << json_path << "\n";
            return kExitUsage;
        }
        jf << o.json().dump(2) << "\n";
    }
    return o.all_passed() ? kExitPass : kExitVerifyFail;
}

}  // namespace cli_detail

/// Entry point behind the binary; takes argv-style arguments without the
/// program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"Exact paraparticle algebra toolkit: relation verification, "
                 "Jordan-Schwinger realizations, and truncated Fock matrices"};
    app.require_subcommand(1);

    // --- verify ---------------------------------------------------------
    std::string v_stat, v_orders = "1,2,3", v_suite = "all", v_json;
    int v_modes = 2;
    bool v_verbose = false;
    CLI::App* verify = app.add_subcommand("verify", "Check the defining relation suites");
    verify->add_option("--stat", v_stat, "Statistic: bose or fermi")->required();
    verify->add_option("--modes", v_modes, "Number of modes n")->check(CLI::PositiveNumber);
    verify->add_option("--orders", v_orders, "Comma-separated list of orders p");
    verify->add_option("--suite", v_suite,
                       "Suite: trilinear, un, klein, hopf, or all");
    verify->add_option("--json", v_json, "Write reports as JSON to this path");
    verify->add_flag("--verbose", v_verbose, "Print passing checks too");

    // --- js ---------------------------------------------------------------
    std::string j_lie, j_stat, j_checks = "lie,hopf,tensor", j_json;
    int j_order = 1;
    bool j_all = false, j_skip_jacobi = false, j_verbose = false;
    CLI::App* js = app.add_subcommand("js", "Verify a Jordan-Schwinger realization");
    js->add_option("--lie", j_lie, "Lie spec JSON file")->required();
    js->add_option("--stat", j_stat, "Statistic: bose or fermi")->required();
    js->add_option("--order", j_order, "Paraparticle order p")->check(CLI::PositiveNumber);
    js->add_flag("--all", j_all, "Run every check");
    js->add_option("--checks", j_checks, "Subset: lie,hopf,tensor");
    js->add_flag("--skip-jacobi", j_skip_jacobi, "Skip the Jacobi gate");
    js->add_option("--json", j_json, "Write reports as JSON to this path");
    js->add_flag("--verbose", j_verbose, "Print passing checks too");

    // --- fock ---------------------------------------------------------------
    std::string f_lie, f_stat, f_ops = "number", f_out, f_json;
    int f_modes = 0, f_order = 1, f_degree = 2;
    bool f_verbose = false;
    CLI::App* fock = app.add_subcommand("fock", "Build exact truncated Fock matrices");
    fock->add_option("--lie", f_lie, "Lie spec JSON file (enables js matrices)");
    fock->add_option("--stat", f_stat, "Statistic: bose or fermi")->required();
    fock->add_option("--modes", f_modes, "Number of modes n");
    fock->add_option("--order", f_order, "Paraparticle order p")->check(CLI::PositiveNumber);
    fock->add_option("--degree", f_degree, "Degree cap D")->check(CLI::NonNegativeNumber);
    fock->add_option("--ops", f_ops,
                     "Matrices to export: number,oscillators,bilinears,js");
    fock->add_option("--out", f_out, "Output JSON path (default stdout)");
    fock->add_flag("--verbose", f_verbose, "Print passing checks too");

    std::vector<const char*> argv;
    argv.push_back("paralgebra");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (verify->parsed()) {
            Statistic stat = parse_stat(v_stat);
            std::vector<int> orders = parse_orders(v_orders);
            bool want_trilinear = v_suite == "trilinear" || v_suite == "all";
            bool want_un = v_suite == "un" || v_suite == "all";
            bool want_klein = v_suite == "klein" || (v_suite == "all" && stat == Statistic::Bose);
            bool want_hopf = v_suite == "hopf" || v_suite == "all";
            if (!want_trilinear && !want_un && !want_klein && !want_hopf) {
                err << "usage error: unknown suite '" << v_suite << "'\n";
                return kExitUsage;
            }
            if (v_suite == "klein" && stat != Statistic::Bose) {
                err << "usage error: the Klein suite requires --stat bose\n";
                return kExitUsage;
            }
            Output o{out, v_verbose, {}};
            for (int p : orders) {
                ParaAlgebraSpec spec(stat, v_modes, p);
                if (want_trilinear) o.take(verify_trilinear(spec));
                if (want_un) o.take(verify_un_relations(spec));
                if (want_klein) o.take(verify_klein(spec));
            }
            if (want_hopf) {
                std::vector<HopfStructure> variants;
                if (stat == Statistic::Bose) {
                    variants.push_back(HopfStructure::para_bose_k());
                    variants.push_back(HopfStructure::graded_super());
                } else {
                    variants.push_back(HopfStructure::para_fermi());
                }
                for (const auto& h : variants) {
                    for (int p : orders)
                        for (int q : orders)
                            o.take(verify_well_defined(h, v_modes, p, q));
                    for (int p : orders)
                        o.take(verify_hopf_axioms(h, ParaAlgebraSpec(stat, v_modes, p)));
                    if (h.variant() == HopfVariant::ParaBoseK)
                        for (int p : orders)
                            for (int q : orders)
                                o.take(verify_bilinear_primitivity(h, v_modes, p, q));
                }
            }
            return finish(o, v_json, err);
        }

        if (js->parsed()) {
            Statistic stat = parse_stat(j_stat);
            LieAlgebraSpec L = load_lie_file(j_lie);
            Output o{out, j_verbose, {}};
            if (!j_skip_jacobi) {
                Report gate = jacobi_check(L);
                if (!gate.all_passed()) {
                    gate.render(out, false);
                    err << "Jacobi identity fails; aborting\n";
                    return kExitVerifyFail;
                }
                o.take(std::move(gate));
            }
            bool want_lie = j_all || j_checks.find("lie") != std::string::npos;
            bool want_hopf = j_all || j_checks.find("hopf") != std::string::npos;
            bool want_tensor = j_all || j_checks.find("tensor") != std::string::npos;
            ParaAlgebraSpec spec(stat, L.dimension(), j_order);
            if (want_lie) o.take(verify_lie_homomorphism(L, spec));
            if (want_hopf) {
                HopfStructure h = stat == Statistic::Bose ? HopfStructure::para_bose_k()
                                                          : HopfStructure::para_fermi();
                o.take(verify_hopf_homomorphism(L, spec, h));
            }
            if (want_tensor) o.take(verify_tensor_operators(L, spec));
            return finish(o, j_json, err);
        }

        if (fock->parsed()) {
            Statistic stat = parse_stat(f_stat);
            std::optional<LieAlgebraSpec> L;
            if (!f_lie.empty()) L = load_lie_file(f_lie);
            int modes = f_modes > 0 ? f_modes : (L ? L->dimension() : 0);
            if (modes < 1) {
                err << "usage error: --modes required when no --lie file is given\n";
                return kExitUsage;
            }
            if (L && modes != L->dimension()) {
                err << "usage error: --modes conflicts with Lie dimension\n";
                return kExitUsage;
            }
            ParaAlgebraSpec spec(stat, modes, f_order);
            FockBasis basis(spec, f_degree);

            nlohmann::json doc;
            doc["statistic"] = to_string(stat);
            doc["modes"] = modes;
            doc["order"] = f_order;
            doc["degree"] = f_degree;
            doc["basis"] = basis_to_json(basis);
            nlohmann::json mats = nlohmann::json::object();

            bool ops_number = f_ops.find("number") != std::string::npos;
            bool ops_osc = f_ops.find("oscillators") != std::string::npos;
            bool ops_bil = f_ops.find("bilinears") != std::string::npos;
            bool ops_js = f_ops.find("js") != std::string::npos;
            if (ops_number)
                mats["N"] = matrix_to_json(represent(number_operator(spec), basis));
            if (ops_osc)
                for (int i = 1; i <= modes; ++i) {
                    mats["a" + std::to_string(i)] =
                        matrix_to_json(represent(oscillator(spec, i, false), basis));
                    mats["a" + std::to_string(i) + "'"] =
                        matrix_to_json(represent(oscillator(spec, i, true), basis));
                }
            if (ops_bil)
                for (int l = 1; l <= modes; ++l)
                    for (int m = 1; m <= modes; ++m)
                        mats["N_" + std::to_string(l) + std::to_string(m)] =
                            matrix_to_json(represent(build_bilinear(l, m, spec), basis));
            if (ops_js) {
                if (!L) {
                    err << "usage error: --ops js requires --lie\n";
                    return kExitUsage;
                }
                for (int i = 1; i <= L->dimension(); ++i)
                    mats["J_" + L->name(i)] =
                        matrix_to_json(represent(js_map(i, *L, stat), basis));
            }
            doc["matrices"] = mats;

            Output o{out, f_verbose, {}};
            // Vacuum relation a_i a_j†|0> = p δ_ij |0> is always reported.
            Report vac("vacuum " + spec.tag());
            for (int i = 1; i <= modes; ++i)
                for (int j = 1; j <= modes; ++j) {
                    Element ab = oscillator(spec, i, false) * oscillator(spec, j, true);
                    Scalar got = vacuum_expectation(ab, basis);
                    Scalar want = i == j ? Scalar(f_order) : Scalar(0);
                    vac.add("<0| a_" + std::to_string(i) + " a_" + std::to_string(j) +
                                "' |0>",
                            got == want, got == want ? "" : pretty_string(got));
                }
            o.take(std::move(vac));
            if (L && f_degree >= 2) o.take(verify_representation(*L, spec, f_degree));
            for (const auto& r : o.reports) doc["reports"].push_back(report_to_json(r));

            if (f_out.empty()) {
                out << doc.dump(2) << "\n";
            } else {
                std::ofstream of(f_out);
                if (!of) {
                    err << "error: cannot write " << f_out << "\n";
                    return kExitUsage;
                }
                of << doc.dump(2) << "\n";
            }
            return o.all_passed() ? kExitPass : kExitVerifyFail;
        }
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace para
