#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "yfock/error.hpp"
#include "yfock/fock.hpp"
#include "yfock/gz.hpp"
#include "yfock/partition.hpp"
#include "yfock/quiver.hpp"
#include "yfock/ratfun.hpp"
#include "yfock/relcheck.hpp"
#include "yfock/symfun.hpp"
#include "yfock/useries.hpp"

using ordered_json = nlohmann::ordered_json;
using namespace yfock;

namespace {

std::string scalar_str(const ordered_json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

void render_text(const ordered_json& j, std::ostream& os,
                 const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                os << prefix << k << ":\n";
                render_text(v, os, prefix + "  ");
            } else {
                os << prefix << k << ": " << scalar_str(v) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                os << prefix << "-\n";
                render_text(v, os, prefix + "  ");
            } else {
                os << prefix << "- " << scalar_str(v) << "\n";
            }
        }
    }
}

void emit(const ordered_json& j, bool text) {
    if (text)
        render_text(j, std::cout);
    else
        std::cout << j.dump() << "\n";
}

ordered_json sym_json(const SymFun& f, int degree) {
    ordered_json terms = ordered_json::array();
    const auto& m = f.coeffs();
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        terms.push_back({{"partition", it->first.to_string()},
                         {"coeff", it->second.to_string()}});
    ordered_json j;
    j["basis"] = f.basis() == SymBasis::SCHUR ? "schur" : "power";
    j["degree"] = degree;
    j["terms"] = terms;
    return j;
}

ordered_json fock_json(const FockVec& v, const std::string& basis, int N) {
    ordered_json terms = ordered_json::array();
    const auto& m = v.coeffs();
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        terms.push_back({{"partition", it->first.to_string()},
                         {"coeff", it->second.to_string()}});
    ordered_json j;
    j["basis"] = basis;
    j["N"] = N;
    j["terms"] = terms;
    return j;
}

ordered_json report_json(const CheckReport& rep) {
    const RelationInstance& in = rep.instance;
    ordered_json j;
    j["id"] = in.id;
    j["sign"] = in.sign;
    j["i"] = in.i;
    j["j"] = in.j;
    j["modes"] = in.modes;
    j["N"] = in.N;
    j["D"] = in.D;
    if (in.mutation != 0)
        j["mutation"] = in.mutation;
    j["pass"] = rep.pass;
    if (rep.witness) {
        j["witness"] = {{"lambda", rep.witness->lam.to_string()},
                        {"coefficient", rep.witness->coefficient.to_string()},
                        {"detail", rep.witness->detail}};
    }
    return j;
}

RatFun pair_product(const std::vector<std::pair<RatFun, RatFun>>& pairs) {
    RatFun u(IntPoly::variable(2));
    RatFun out(1);
    for (const auto& [a, b] : pairs)
        out = out * ((u - a) / (u - b));
    return out;
}

struct flag_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void need(bool ok, const char* msg) {
    if (!ok)
        throw flag_error(msg);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact level-one Fock space toolkit"};
    app.set_version_flag("--version", "yfock 1.0.0 (variables: e1, e2)");
    app.require_subcommand(1);
    bool text = false;
    bool json_flag = false;
    app.add_flag("--text", text, "human-readable rendering");
    app.add_flag("--json", json_flag, "machine output (default)");

    int rc = 0;

    auto* jack =
        app.add_subcommand("jack", "Jack function in the Schur basis");
    jack->fallthrough();
    int j_N = 0;
    std::string j_lam;
    jack->add_option("--N", j_N, "rank")->required();
    jack->add_option("--lambda", j_lam, "partition");
    jack->callback([&] {
        Partition lam = Partition::parse(j_lam);
        emit(sym_json(jack_glN(lam, j_N), lam.size()), text);
    });

    auto* norm = app.add_subcommand("norm", "Jack norm under the level-N form");
    norm->fallthrough();
    int n_N = 0;
    std::string n_lam;
    std::string n_method = "both";
    norm->add_option("--N", n_N, "rank")->required();
    norm->add_option("--lambda", n_lam, "partition");
    norm->add_option("--method", n_method, "formula|gram_schmidt|both")
        ->check(CLI::IsMember({"formula", "gram_schmidt", "both"}));
    norm->callback([&] {
        Partition lam = Partition::parse(n_lam);
        ordered_json j;
        j["N"] = n_N;
        j["lambda"] = lam.to_string();
        if (n_method != "gram_schmidt")
            j["formula"] = jack_norm_formula(lam, n_N).to_string();
        if (n_method != "formula") {
            SymFun f = jack_glN(lam, n_N);
            j["gram_schmidt"] = uglov_form(f, f, n_N).to_string();
        }
        emit(j, text);
    });

    auto* actc = app.add_subcommand("act", "apply one generator");
    actc->fallthrough();
    int a_N = 0, a_i = 0, a_r = 0;
    std::string a_gen, a_basis, a_lam;
    actc->add_option("--N", a_N, "rank")->required();
    actc->add_option("--gen", a_gen, "x+|x-|h|X+|X-|H|e|f|hcart")
        ->required()
        ->check(CLI::IsMember(
            {"x+", "x-", "h", "X+", "X-", "H", "e", "f", "hcart"}));
    actc->add_option("--i", a_i, "generator index");
    actc->add_option("--r", a_r, "mode");
    actc->add_option("--basis", a_basis, "b|jack|schur")
        ->required()
        ->check(CLI::IsMember({"b", "jack", "schur"}));
    actc->add_option("--lambda", a_lam, "partition");
    actc->callback([&] {
        Partition lam = Partition::parse(a_lam);
        OpFamily fam;
        if (a_gen == "x+") fam = OpFamily::AY_XP;
        else if (a_gen == "x-") fam = OpFamily::AY_XM;
        else if (a_gen == "h") fam = OpFamily::AY_H;
        else if (a_gen == "X+") fam = OpFamily::YSL_XP;
        else if (a_gen == "X-") fam = OpFamily::YSL_XM;
        else if (a_gen == "H") fam = OpFamily::YSL_H;
        else if (a_gen == "e") fam = OpFamily::AFFINE_E;
        else if (a_gen == "f") fam = OpFamily::AFFINE_F;
        else fam = OpFamily::AFFINE_H;
        FockBasis basis = a_basis == "b"
                              ? FockBasis::BFIX
                              : (a_basis == "jack" ? FockBasis::JACK
                                                   : FockBasis::SCHUR);
        FockVec out =
            act(OperatorId{fam, a_i, a_r}, FockVec::unit(basis, lam), a_N);
        emit(fock_json(out, a_basis, a_N), text);
    });

    auto* check = app.add_subcommand("check", "relation-check suites");
    check->fallthrough();
    int c_N = 0, c_D = 6, c_rmax = 2, c_jobs = 1;
    std::string c_suite;
    check->add_option("--suite", c_suite,
                      "affine-yangian|yangian-sl|affine-lie|adjoint|appendix|all")
        ->required();
    check->add_option("--N", c_N, "rank (omit to run N=2 and N=3)");
    check->add_option("--max-degree", c_D, "truncation degree");
    check->add_option("--rmax", c_rmax, "largest mode in instances");
    check->add_option("--jobs", c_jobs, "parallel workers");
    check->callback([&] {
        std::vector<int> ranks =
            c_N == 0 ? std::vector<int>{2, 3} : std::vector<int>{c_N};
        int total = 0, failed = 0;
        for (int n : ranks) {
            auto reports = run_suite(c_suite, n, c_D, c_rmax, c_jobs);
            for (const auto& rep : reports) {
                ++total;
                failed += rep.pass ? 0 : 1;
                if (text) {
                    std::cout << (rep.pass ? "PASS " : "FAIL ")
                              << describe(rep.instance);
                    if (rep.witness)
                        std::cout << "  witness lambda="
                                  << rep.witness->lam.to_string()
                                  << " coefficient="
                                  << rep.witness->coefficient.to_string()
                                  << " (" << rep.witness->detail << ")";
                    std::cout << "\n";
                } else {
                    std::cout << report_json(rep).dump() << "\n";
                }
            }
        }
        ordered_json summary;
        summary["suite"] = c_suite;
        summary["ranks"] = ranks;
        summary["total"] = total;
        summary["failed"] = failed;
        if (text)
            std::cout << "total " << total << " failed " << failed << "\n";
        else
            std::cout << summary.dump() << "\n";
        rc = failed == 0 ? 0 : 1;
    });

    auto* gz = app.add_subcommand("gz", "Gelfand-Zetlin model data");
    gz->fallthrough();
    int g_N = 0, g_i = -1;
    std::string g_lam, g_op;
    gz->add_option("--N", g_N, "rank")->required();
    gz->add_option("--lambda", g_lam, "partition");
    gz->add_option("--i", g_i, "row index");
    gz->add_option("--op", g_op, "scheme|matrix-elements|a-eigen")
        ->required()
        ->check(CLI::IsMember({"scheme", "matrix-elements", "a-eigen"}));
    gz->callback([&] {
        Partition lam = Partition::parse(g_lam);
        ordered_json j;
        j["N"] = g_N;
        j["lambda"] = lam.to_string();
        if (g_op == "scheme") {
            auto [m, sch] = partition_to_gz(lam, g_N);
            j["rows"] = m.rows();
            ordered_json blocks = ordered_json::array();
            for (const auto& [mv, p] : m.blocks)
                blocks.push_back({mv, p});
            j["blocks"] = blocks;
            j["thresholds"] = sch.thresholds;
        } else {
            need(g_i >= 0, "--i is required for this op");
            j["i"] = g_i;
            if (g_op == "matrix-elements") {
                ordered_json elems = ordered_json::array();
                for (const auto& [cell, ud] :
                     nt_matrix_elements(lam, g_i, g_N))
                    elems.push_back(
                        {{"cell", {cell.first, cell.second}},
                         {"mu", lam.with_cell_removed(cell).to_string()},
                         {"up", ud.first.to_string()},
                         {"down", ud.second.to_string()}});
                j["elements"] = elems;
            } else {
                auto [m, sch] = partition_to_gz(lam, g_N);
                auto nt = nt_A_eigenvalue(m, sch, g_i);
                auto ug = uglov_A_eigenvalue_ratio(lam, g_i, g_N);
                ordered_json factors = ordered_json::array();
                for (const auto& [a, b] : nt)
                    factors.push_back({a.to_string(), b.to_string()});
                j["factors"] = factors;
                j["value"] = pair_product(nt).to_string();
                j["agrees"] = pair_product(nt) == pair_product(ug);
            }
        }
        emit(j, text);
    });

    auto* quiver = app.add_subcommand("quiver", "quiver fixed-point data");
    quiver->fallthrough();
    int q_N = 0, q_i = -1;
    std::string q_lam, q_op;
    quiver->add_option("--N", q_N, "rank")->required();
    quiver->add_option("--lambda", q_lam, "partition");
    quiver->add_option("--i", q_i, "residue");
    quiver->add_option("--op", q_op, "tangent|form|normalization|vv-check")
        ->required()
        ->check(CLI::IsMember(
            {"tangent", "form", "normalization", "vv-check"}));
    quiver->callback([&] {
        Partition lam = Partition::parse(q_lam);
        ordered_json j;
        j["N"] = q_N;
        j["lambda"] = lam.to_string();
        if (q_op == "tangent") {
            ordered_json ws = ordered_json::array();
            for (const auto& [a, b] : tangent_weights(lam, q_N))
                ws.push_back({a, b});
            j["weights"] = ws;
            j["character"] = tangent_character(lam, q_N).to_string();
            j["grothendieck_agrees"] =
                tangent_character(lam, q_N) == grothendieck_tangent(lam, q_N);
        } else if (q_op == "form") {
            j["value"] = h_form(lam, lam, q_N).to_string();
        } else if (q_op == "normalization") {
            j["bprime"] = bprime_normalization(lam, q_N).to_string();
            j["b"] = b_normalization(lam, q_N).to_string();
        } else {
            need(q_i >= 0, "--i is required for this op");
            j["i"] = q_i;
            bool holds = vv_weight_identities(lam, q_i, q_N);
            j["holds"] = holds;
            rc = holds ? 0 : 1;
        }
        emit(j, text);
    });

    auto* expand = app.add_subcommand(
        "expand-h", "diagonal eigenvalue series in powers of 1/u");
    expand->fallthrough();
    int e_N = 0, e_i = 0, e_order = 6;
    std::string e_lam, e_gen = "h";
    expand->add_option("--N", e_N, "rank")->required();
    expand->add_option("--lambda", e_lam, "partition");
    expand->add_option("--i", e_i, "generator index")->required();
    expand->add_option("--gen", e_gen, "h|H")
        ->check(CLI::IsMember({"h", "H"}));
    expand->add_option("--order", e_order, "series truncation order");
    expand->callback([&] {
        need(e_order >= 0, "--order must be nonnegative");
        Partition lam = Partition::parse(e_lam);
        OpFamily fam = e_gen == "h" ? OpFamily::AY_H : OpFamily::YSL_H;
        auto factors = h_eigen_factors(fam, e_i, lam, e_N);
        USeries s = expand_linear_quotient(factors, e_order);
        ordered_json j;
        j["N"] = e_N;
        j["lambda"] = lam.to_string();
        j["family"] = e_gen;
        j["i"] = e_i;
        j["order"] = e_order;
        ordered_json coeffs = ordered_json::array();
        for (int k = 0; k <= s.order(); ++k)
            coeffs.push_back(s[k].to_string());
        j["series"] = coeffs;
        ordered_json eigs = ordered_json::array();
        for (int r = 0; r + 1 <= e_order; ++r)
            eigs.push_back(h_r_eigenvalue(fam, e_i, r, lam, e_N).to_string());
        j["eigenvalues"] = eigs;
        emit(j, text);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const flag_error& e) {
        ordered_json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const domain_error& e) {
        ordered_json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 3;
    }
    return rc;
}
