// Exhaustive and randomized verification sweeps over the algebraic laws.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qsymcat {

/// Sweep bounds; negative fields fall back to per-suite defaults.
struct VerifyOptions {
    int max_deg = -1;
    int max_len = -1;
    int max_n = -1;
    int max_e = -1;
    int window = -1;
    long long samples = -1;
    unsigned long long seed = 12345;
    int threads = 1;
};

struct VerifyReport {
    std::string suite;
    long long instances = 0;
    std::vector<std::string> failures;  // reproducible input renderings
    std::vector<std::pair<std::string, std::string>> info;
    bool passed() const { return failures.empty(); }
};

VerifyReport verify_frel(const VerifyOptions& options = {});
VerifyReport verify_lm(const VerifyOptions& options = {});
VerifyReport verify_shift(const VerifyOptions& options = {});
VerifyReport verify_syzygy(const VerifyOptions& options = {});
VerifyReport verify_lattice(const VerifyOptions& options = {});
VerifyReport verify_filtration(const VerifyOptions& options = {});
VerifyReport verify_pairing(const VerifyOptions& options = {});
VerifyReport verify_reduce_equiv(const VerifyOptions& options = {});

/// All suites in a fixed order.
std::vector<VerifyReport> verify_all(const VerifyOptions& options = {});

/// Run one suite by name ("frel", "lm", ..., "reduce-equiv").
/// Unknown names raise parse_error.
VerifyReport verify_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace qsymcat
