#include <CLI11.hpp>

#include <iostream>

#include "conevol/cli.hpp"
#include "conevol/linalg.hpp"

using namespace conevol;

int main(int argc, char** argv) {
    CLI::App app{"cone-volume measures and the refined log-Minkowski necessary condition"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    cli::GlobalOptions gopt;
    uint64_t seed = 42;
    gopt.threads = cli::env_thread_cap();
    app.add_option("--output", gopt.output, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    auto* res_opt =
        app.add_option("--resolution", gopt.resolution, "profile resolution")->check(CLI::Range(16, 1 << 20));
    app.add_option("--seed", seed, "base seed for randomized commands");
    app.add_option("--tol-eq", gopt.checker.tol_eq, "equality detection tolerance");
    app.add_option("--tol-violate", gopt.checker.tol_violate, "violation tolerance");
    app.add_option("--tol-lin", gopt.checker.tol_lin, "profile linearity tolerance");

    std::string file_path, direction_str;
    bool center = false, all_directions = false;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", file_path, "polytope file (.json or .off)")->required();
    };
    auto parse_direction = [&](int dim) {
        std::vector<double> v;
        std::stringstream ss(direction_str);
        std::string tok;
        while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
        if (static_cast<int>(v.size()) != dim)
            throw input_error("--direction needs " + std::to_string(dim) + " comma-separated coordinates");
        return linalg::normalized(v);
    };

    // measure
    auto* measure = app.add_subcommand("measure", "surface, L_p and cone-volume measures");
    add_file(measure);
    double lp_p = 1.0;
    auto* p_opt = measure->add_option("--p", lp_p, "L_p exponent");

    // check
    auto* check = app.add_subcommand("check", "evaluate the refined necessary condition");
    add_file(check);
    check->add_option("--direction", direction_str, "specific unit direction x,y,...");
    check->add_flag("--center", center, "translate the centroid to the origin first");
    check->add_flag("--all-directions", all_directions,
                    "also report coordinate axes even when vacuous");

    // symmetrize
    auto* symmetrize = app.add_subcommand("symmetrize", "section-area profile CSV (t, area, radius)");
    add_file(symmetrize);
    symmetrize->add_option("--direction", direction_str, "axis x,y,...")->required();
    symmetrize->add_flag("--center", center, "translate the centroid to the origin first");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "equal-volume truncated-cone reduction report");
    add_file(reduce);
    reduce->add_option("--direction", direction_str, "axis x,y,...")->required();
    reduce->add_flag("--center", center, "translate the centroid to the origin first");

    // cone-table
    auto* cone_table = app.add_subcommand("cone-table", "closed-form frustum table CSV");
    std::vector<int> table_ns{3, 4, 5};
    std::vector<double> table_ts{1.5, 2.0, 5.0, 20.0};
    bool no_limits = false;
    cone_table->add_option("--n", table_ns, "dimensions")->delimiter(',');
    cone_table->add_option("--t", table_ts, "radius ratios (each > 1)")->delimiter(',');
    cone_table->add_flag("--no-limits", no_limits, "omit the t=1 and t=inf rows");

    // audit
    auto* audit = app.add_subcommand("audit", "randomized audit of the main condition");
    cli::AuditConfig acfg;
    audit->add_option("--dim", acfg.dim, "ambient dimension (3..6)");
    audit->add_option("--count", acfg.count, "number of bodies");
    audit->add_option("--generator", acfg.generator, "random-hull | perturbed-prism | perturbed-cone | frustum");
    audit->add_option("--noise", acfg.noise, "perturbation amplitude");

    // verify-lemmas
    auto* lemmas = app.add_subcommand("verify-lemmas", "exact appendix certificates");
    int n_min = 3, n_max = 10;
    std::string method = "both";
    bool allow_n2 = false;
    lemmas->add_option("--n-min", n_min, "smallest n");
    lemmas->add_option("--n-max", n_max, "largest n");
    lemmas->add_option("--method", method, "chain | sturm | both")
        ->check(CLI::IsMember({"chain", "sturm", "both"}));
    lemmas->add_flag("--allow-n2", allow_n2, "also emit the n=2 identity certificate");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*measure) {
            const auto file = io::load_polytope(file_path);
            return cli::cmd_measure(std::cout, file,
                                    p_opt->count() ? std::optional<double>(lp_p) : std::nullopt,
                                    gopt);
        }
        if (*check) {
            const auto file = io::load_polytope(file_path);
            std::optional<Vec> dir;
            if (!direction_str.empty()) dir = parse_direction(file.dim);
            return cli::cmd_check(std::cout, file, dir, center, all_directions, gopt);
        }
        if (*symmetrize) {
            const auto file = io::load_polytope(file_path);
            return cli::cmd_symmetrize(std::cout, file, parse_direction(file.dim), center, gopt);
        }
        if (*reduce) {
            const auto file = io::load_polytope(file_path);
            return cli::cmd_reduce(std::cout, file, parse_direction(file.dim), center, gopt);
        }
        if (*cone_table) return cli::cmd_cone_table(std::cout, table_ns, table_ts, !no_limits);
        if (*audit) {
            acfg.seed = seed;
            acfg.resolution = res_opt->count() ? gopt.resolution : 512;
            return cli::cmd_audit(std::cout, acfg, gopt);
        }
        if (*lemmas) return cli::cmd_verify_lemmas(std::cout, n_min, n_max, method, allow_n2);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kUsage;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kUsage;
    } catch (const construction_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return cli::kUsage;
    }
    return cli::kUsage;
}
