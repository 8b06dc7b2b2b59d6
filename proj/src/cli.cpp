#include "conevol/cli.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "conevol/generators.hpp"
#include "conevol/linalg.hpp"
#include "conevol/reduction.hpp"
#include "conevol/truncated_cone.hpp"

namespace conevol::cli {

using nlohmann::json;
namespace la = linalg;

int env_thread_cap() {
    const char* env = std::getenv("CONEVOL_THREADS");
    if (!env) return 1;
    const int v = std::atoi(env);
    return v >= 1 ? v : 1;
}

int cmd_measure(std::ostream& out, const io::PolytopeFile& file, std::optional<double> p,
                const GlobalOptions& opt) {
    const Polytope P = file.build();
    const DiscreteMeasure surf = surface_area_measure(P);
    json j;
    j["dim"] = P.dim();
    j["volume"] = P.volume();
    j["surface"] = io::measure_json(surf);
    const DiscreteMeasure cvm = cone_volume_measure(P);  // throws domain_error off-origin
    j["cone_volume"] = io::measure_json(cvm);
    j["cone_volume"]["total_vs_volume_rel_dev"] =
        std::abs(cvm.total() - P.volume()) / P.volume();
    if (p) {
        j["lp"] = io::measure_json(lp_surface_measure(P, *p));
        j["lp"]["p"] = *p;
    }
    if (opt.output == "csv") {
        out << "measure,direction,mass\n";
        auto rows = [&](const char* name, const DiscreteMeasure& mu) {
            for (const auto& a : mu.atoms) {
                out << name << ",\"";
                for (size_t i = 0; i < a.direction.size(); ++i)
                    out << (i ? " " : "") << io::format_double(a.direction[i]);
                out << "\"," << io::format_double(a.mass) << "\n";
            }
        };
        rows("surface", surf);
        rows("cone_volume", cvm);
        if (p) rows("lp", lp_surface_measure(P, *p));
    } else {
        out << j.dump(2) << "\n";
    }
    return kOk;
}

int cmd_check(std::ostream& out, const io::PolytopeFile& file, const std::optional<Vec>& direction,
              bool center, bool all_directions, const GlobalOptions& opt) {
    Polytope P = file.build();
    if (center) P = P.translate_to_centroid();

    std::vector<ConditionReport> reports;
    if (direction) {
        reports.push_back(check_direction(P, *direction, opt.checker));
    } else {
        std::vector<Vec> extra;
        if (all_directions)
            for (int i = 0; i < P.dim(); ++i) {
                Vec e(P.dim(), 0.0);
                e[i] = 1.0;
                extra.push_back(e);
            }
        reports = check_all_facets(P, opt.checker, extra);
    }
    if (opt.output == "csv") {
        out << io::condition_reports_csv(reports);
    } else {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(io::condition_report_json(r));
        out << arr.dump(2) << "\n";
    }
    for (const auto& r : reports)
        if (r.classification == Classification::Violated) return kViolation;
    return kOk;
}

int cmd_symmetrize(std::ostream& out, const io::PolytopeFile& file, const Vec& direction,
                   bool center, const GlobalOptions& opt) {
    Polytope P = file.build();
    if (center) P = P.translate_to_centroid();
    out << io::profile_csv(profile(P, la::normalized(direction), opt.resolution));
    return kOk;
}

int cmd_reduce(std::ostream& out, const io::PolytopeFile& file, const Vec& direction, bool center,
               const GlobalOptions& opt) {
    Polytope P = file.build();
    if (center) P = P.translate_to_centroid();
    const SliceProfile prof = profile(P, la::normalized(direction), opt.resolution);
    const auto [K0, K1] = reduction::build_d0_d1(prof);
    const reduction::CompareReport rep = reduction::compare(prof);
    const reduction::BalanceResult bal = reduction::find_balanced(prof);

    json j;
    j["direction"] = prof.direction;
    j["volume"] = prof.volume();
    j["t_lo"] = prof.t_lo;
    j["t_hi"] = prof.t_hi;
    j["R0"] = K0.r_hi;
    j["R1"] = K1.r_lo;
    j["s_star"] = rep.s_star;
    j["degenerate"] = rep.degenerate;
    j["balanced"] = {{"r_bottom", bal.frustum.r_lo},
                     {"r_top", bal.frustum.r_hi},
                     {"centroid_u", reduction::centroid_u(bal.frustum)}};
    j["x_prime"] = rep.x_prime;
    j["y_prime"] = rep.y_prime;
    j["x_frustum"] = rep.x_frustum;
    j["y_frustum"] = rep.y_frustum;
    j["psi_prime"] = rep.psi_prime;
    j["psi_frustum"] = rep.psi_frustum;
    j["flags"] = {{"x_le", rep.x_le},
                  {"y_le", rep.y_le},
                  {"psi_le", rep.psi_le},
                  {"psi_frustum_le_one", rep.psi_frustum <= 1.0 + 1e-9}};
    out << j.dump(2) << "\n";
    return kOk;
}

int cmd_cone_table(std::ostream& out, const std::vector<int>& ns, const std::vector<double>& ts,
                   bool include_limits) {
    out << "n,t,x,y,psi,key_ratio,x_bound_slack,y_bound_slack,sum_bound_slack\n";
    auto row = [&](int n, double t) {
        const cone::TruncatedConeParams params(n, t);
        const auto [x, y] = cone::xy_of_ratio(params);
        const cone::RangeReport rr = cone::range_check(params);
        out << n << "," << (std::isinf(t) ? "inf" : io::format_double(t)) << ","
            << io::format_double(x) << "," << io::format_double(y) << ","
            << io::format_double(cone::psi(x, y, n)) << ",";
        if (t > 1.0)
            out << io::format_double(cone::key_ratio(n, t));
        else if (n == 2)
            out << io::format_double(1.0);
        // t = 1, n >= 3: the ratio is 0/0 with limit +inf; cell left empty
        out << "," << io::format_double(rr.x_slack) << "," << io::format_double(rr.y_slack)
            << "," << io::format_double(rr.sum_slack) << "\n";
    };
    for (int n : ns) {
        if (include_limits) row(n, 1.0);
        for (double t : ts) row(n, t);
        if (include_limits) row(n, std::numeric_limits<double>::infinity());
    }
    return kOk;
}

namespace {

struct IterationStats {
    double min_slack = 1e300;
    double closure_rel = 0.0;
    double concavity = 0.0;
    double volume_rel_dev = 0.0;
    double centroid_rel_dev = 0.0;
    double endpoint_rel_dev = 0.0;
    double balance_resid_rel = 0.0;
    bool reduction_ok = true;
    std::vector<std::string> failures;
    json body;  // serialized on failure
};

IterationStats audit_polytope_iteration(const AuditConfig& cfg, uint64_t iter_seed) {
    gen::Rng rng(iter_seed);
    IterationStats st;
    Polytope P = [&] {
        if (cfg.generator == "random-hull") return gen::random_hull(cfg.dim, rng);
        if (cfg.generator == "perturbed-prism") return gen::perturbed_prism(cfg.dim, rng, cfg.noise);
        if (cfg.generator == "perturbed-cone") return gen::perturbed_cone(cfg.dim, rng, cfg.noise);
        throw input_error("unknown generator: " + cfg.generator);
    }();
    P = P.translate_to_centroid();

    CheckerOptions copt;
    copt.resolution = cfg.resolution;
    const auto reports = check_all_facets(P, copt);
    for (const auto& r : reports) {
        st.min_slack = std::min(st.min_slack, r.slack);
        if (r.classification == Classification::Violated)
            st.failures.push_back("violated condition, psi = " + io::format_double(r.psi));
    }
    const DiscreteMeasure surf = surface_area_measure(P);
    st.closure_rel = surf.closure_residual() / surf.total();
    if (st.closure_rel > 1e-10) st.failures.push_back("closure residual above 1e-10");

    // a seeded facet axis for the symmetrization checks
    const size_t fi = rng.next_u64() % P.facets().size();
    const Vec axis = P.facets()[fi].normal;
    const Prop1Report p1 = verify_prop1(P, axis, cfg.resolution);
    st.volume_rel_dev = p1.volume_rel_dev;
    st.centroid_rel_dev = p1.centroid_rel_dev;
    st.endpoint_rel_dev = std::max(p1.top_rel_dev, p1.bot_rel_dev);
    if (p1.volume_rel_dev > 1e-6) st.failures.push_back("profile volume deviation above 1e-6");
    if (p1.centroid_rel_dev > 1e-6) st.failures.push_back("profile centroid deviation above 1e-6");
    if (st.endpoint_rel_dev > 1e-8) st.failures.push_back("endpoint mass deviation above 1e-8");

    const SliceProfile prof = profile(P, axis, cfg.resolution);
    st.concavity = concavity_defect(prof).concavity_defect;
    if (st.concavity > 1e-8) st.failures.push_back("concavity defect above 1e-8");

    const reduction::CompareReport cmp = reduction::compare(prof);
    st.reduction_ok = cmp.x_le && cmp.y_le && cmp.psi_le && cmp.psi_frustum <= 1.0 + 1e-9;
    if (!st.reduction_ok) st.failures.push_back("reduction comparison chain failed");
    const reduction::BalanceResult bal = reduction::find_balanced(prof);
    st.balance_resid_rel =
        std::abs(reduction::centroid_u(bal.frustum)) / prof.span();
    if (!bal.degenerate && st.balance_resid_rel > 1e-9)
        st.failures.push_back("balanced centroid residual above 1e-9");

    if (!st.failures.empty()) st.body = io::polytope_json(P, cfg.generator);
    return st;
}

IterationStats audit_frustum_iteration(const AuditConfig& cfg, uint64_t iter_seed) {
    gen::Rng rng(iter_seed);
    IterationStats st;
    // log-uniform ratio in (1, 1e3]: slack tends to 0 at both ends of the range
    const double t = 1.0 + std::exp(rng.uniform(std::log(1e-3), std::log(1e3)));
    const auto [x, y] = cone::xy_of_ratio(cone::TruncatedConeParams(cfg.dim, t));
    const double psi = cone::psi(x, y, cfg.dim);
    st.min_slack = 1.0 - psi;
    if (psi > 1.0 + 1e-9) st.failures.push_back("frustum psi above 1");

    // profile pipeline on the analytic frustum, centered
    const auto [v, c] = cone::volume_and_centroid(cone::TruncatedConeParams(cfg.dim, t));
    (void)v;
    const SliceProfile prof =
        frustum_profile(cfg.dim, 1.0 - c, t - c, 1.0, t, cfg.resolution);
    st.concavity = concavity_defect(prof).concavity_defect;
    if (st.concavity > 1e-8) st.failures.push_back("concavity defect above 1e-8");
    const reduction::CompareReport cmp = reduction::compare(prof);
    st.reduction_ok = cmp.x_le && cmp.y_le && cmp.psi_le && cmp.psi_frustum <= 1.0 + 1e-9;
    if (!st.reduction_ok) st.failures.push_back("reduction comparison chain failed");
    if (!st.failures.empty())
        st.body = {{"generator", "frustum"}, {"dim", cfg.dim}, {"ratio", t}};
    return st;
}

}  // namespace

int cmd_audit(std::ostream& out, const AuditConfig& cfg, const GlobalOptions& opt,
              const std::string& failure_dir) {
    if (cfg.count < 1) throw input_error("audit count must be >= 1");
    if (cfg.dim < 3 || cfg.dim > 6) throw input_error("audit dim must be in 3..6");

    std::vector<IterationStats> stats(cfg.count);
    std::atomic<int> next{0};
    const int threads = std::max(1, std::min(opt.threads, env_thread_cap()));
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < cfg.count; i = next.fetch_add(1)) {
            const uint64_t iter_seed = cfg.seed + 0x9e3779b97f4a7c15ULL * (i + 1);
            try {
                stats[i] = cfg.generator == "frustum" ? audit_frustum_iteration(cfg, iter_seed)
                                                      : audit_polytope_iteration(cfg, iter_seed);
            } catch (const std::exception& e) {
                stats[i].failures.push_back(std::string("exception: ") + e.what());
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    json summary;
    summary["config"] = {{"dim", cfg.dim},       {"count", cfg.count}, {"generator", cfg.generator},
                         {"seed", cfg.seed},     {"resolution", cfg.resolution},
                         {"noise", cfg.noise}};
    double min_slack = 1e300, max_closure = 0.0, max_conc = 0.0, max_vol = 0.0, max_cen = 0.0,
           max_end = 0.0, max_bal = 0.0;
    json failures = json::array();
    for (int i = 0; i < cfg.count; ++i) {
        const IterationStats& s = stats[i];
        min_slack = std::min(min_slack, s.min_slack);
        max_closure = std::max(max_closure, s.closure_rel);
        max_conc = std::max(max_conc, s.concavity);
        max_vol = std::max(max_vol, s.volume_rel_dev);
        max_cen = std::max(max_cen, s.centroid_rel_dev);
        max_end = std::max(max_end, s.endpoint_rel_dev);
        max_bal = std::max(max_bal, s.balance_resid_rel);
        for (const std::string& f : s.failures) {
            json item = {{"index", i},
                         {"seed", cfg.seed + 0x9e3779b97f4a7c15ULL * (i + 1)},
                         {"reason", f}};
            if (!s.body.is_null()) {
                const std::string path = failure_dir + "/conevol-audit-failure-" +
                                         std::to_string(cfg.seed) + "-" + std::to_string(i) +
                                         ".json";
                std::ofstream(path) << s.body.dump(2) << "\n";
                item["body_file"] = path;
            }
            failures.push_back(item);
        }
    }
    summary["min_slack"] = min_slack;
    summary["max_closure_residual_rel"] = max_closure;
    summary["max_concavity_defect"] = max_conc;
    summary["max_profile_volume_rel_dev"] = max_vol;
    summary["max_profile_centroid_rel_dev"] = max_cen;
    summary["max_endpoint_mass_rel_dev"] = max_end;
    summary["max_balanced_centroid_resid_rel"] = max_bal;
    summary["failures"] = failures;
    out << summary.dump(2) << "\n";
    return failures.empty() ? kOk : kViolation;
}

int cmd_verify_lemmas(std::ostream& out, int n_min, int n_max, const std::string& method,
                      bool allow_n2) {
    if (n_min < 3 || n_min > n_max) throw input_error("need 3 <= n_min <= n_max");
    exact::Lemma2Route route;
    if (method == "chain")
        route = exact::Lemma2Route::Chain;
    else if (method == "sturm")
        route = exact::Lemma2Route::DirectFG;
    else if (method == "both")
        route = exact::Lemma2Route::Both;
    else
        throw input_error("method must be chain, sturm or both");

    json arr = json::array();
    bool all_ok = true;
    if (allow_n2) {
        const exact::Certificate c = exact::verify_n2_identity();
        all_ok = all_ok && c.proven();
        arr.push_back(io::certificate_json(c));
    }
    for (int n = n_min; n <= n_max; ++n) {
        for (const exact::Certificate& c : exact::verify_lemma1(n)) {
            all_ok = all_ok && c.proven();
            arr.push_back(io::certificate_json(c));
        }
        const exact::Certificate c2 = exact::verify_lemma2(n, route);
        all_ok = all_ok && c2.proven();
        arr.push_back(io::certificate_json(c2));
    }
    out << arr.dump(2) << "\n";
    return all_ok ? kOk : kCertificateFailure;
}

}  // namespace conevol::cli
