#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "conevol/checker.hpp"
#include "conevol/io.hpp"

// Command implementations behind the conevol binary, kept separate from
// argument parsing so they are directly testable. Each returns a process
// exit code: 0 ok, 1 usage/parse, 2 condition violation, 3 certificate
// failure.

namespace conevol::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kViolation = 2, kCertificateFailure = 3 };

struct GlobalOptions {
    std::string output = "json";  // json | csv
    int resolution = 2048;
    CheckerOptions checker;
    int threads = 1;  // audit parallelism; capped by CONEVOL_THREADS
};

int cmd_measure(std::ostream& out, const io::PolytopeFile& file, std::optional<double> p,
                const GlobalOptions& opt);

int cmd_check(std::ostream& out, const io::PolytopeFile& file, const std::optional<Vec>& direction,
              bool center, bool all_directions, const GlobalOptions& opt);

int cmd_symmetrize(std::ostream& out, const io::PolytopeFile& file, const Vec& direction,
                   bool center, const GlobalOptions& opt);

int cmd_reduce(std::ostream& out, const io::PolytopeFile& file, const Vec& direction, bool center,
               const GlobalOptions& opt);

int cmd_cone_table(std::ostream& out, const std::vector<int>& ns, const std::vector<double>& ts,
                   bool include_limits);

struct AuditConfig {
    int dim = 3;
    int count = 100;
    std::string generator = "random-hull";  // random-hull | perturbed-prism | perturbed-cone | frustum
    uint64_t seed = 42;
    int resolution = 512;
    double noise = 0.05;
};

int cmd_audit(std::ostream& out, const AuditConfig& config, const GlobalOptions& opt,
              const std::string& failure_dir = ".");

int cmd_verify_lemmas(std::ostream& out, int n_min, int n_max, const std::string& method,
                      bool allow_n2);

// CONEVOL_THREADS cap (>=1); 1 when unset or unparsable.
int env_thread_cap();

}  // namespace conevol::cli
