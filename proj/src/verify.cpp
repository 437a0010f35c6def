#include "qsymcat/verify.hpp"

#include "qsymcat/composition.hpp"
#include "qsymcat/gfunction.hpp"
#include "qsymcat/groebner.hpp"
#include "qsymcat/ideal.hpp"
#include "qsymcat/polynomial.hpp"
#include "qsymcat/qsym.hpp"
#include "qsymcat/rational.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

namespace qsymcat {

namespace {

int value_or(int v, int fallback) { return v < 0 ? fallback : v; }
long long value_or(long long v, long long fallback) { return v < 0 ? fallback : v; }

/// Deterministic fan-out: check(i) returns a failure rendering or nothing.
void run_parallel(long long total, int threads,
                  const std::function<std::optional<std::string>(long long)>& check,
                  std::vector<std::string>& failures) {
    threads = std::max(1, threads);
    if (threads == 1 || total < 2 * threads) {
        for (long long i = 0; i < total; ++i)
            if (auto f = check(i)) failures.push_back(*f);
        return;
    }
    std::vector<std::optional<std::string>> results(static_cast<size_t>(total));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (long long i = t; i < total; i += threads) {
                try {
                    results[static_cast<size_t>(i)] = check(i);
                } catch (const std::exception& ex) {
                    results[static_cast<size_t>(i)] =
                        "instance " + std::to_string(i) + " raised: " + ex.what();
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const auto& r : results)
        if (r) failures.push_back(*r);
}

/// All exponent vectors of the exact length with the given degree cap,
/// ascending lexicographically.
void raw_vectors_of_length(int length, int max_deg, std::vector<GenComposition>& out) {
    std::vector<int> parts(static_cast<size_t>(length), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == length) {
            out.emplace_back(parts);
            return;
        }
        for (int p = 0; p <= rest; ++p) {
            parts[static_cast<size_t>(pos)] = p;
            self(self, pos + 1, rest - p);
        }
        parts[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, max_deg);
}

std::vector<GenComposition> raw_gencomps(int max_len, int max_deg) {
    std::vector<GenComposition> out;
    for (int length = 0; length <= max_len; ++length)
        raw_vectors_of_length(length, max_deg, out);
    return out;
}

std::vector<GenComposition> stripped_gencomps(int max_len, int max_deg) {
    std::vector<GenComposition> out;
    for (const GenComposition& g : raw_gencomps(max_len, max_deg))
        if (g.empty() || g.parts().back() > 0) out.push_back(g);
    return out;
}

std::string count_str(long long v) { return std::to_string(v); }

}  // namespace

VerifyReport verify_frel(const VerifyOptions& options) {
    VerifyReport report;
    report.suite = "frel";
    int max_deg = value_or(options.max_deg, 6);
    int window = value_or(options.window, 7);
    std::vector<Composition> instances;
    for (int d = 1; d <= max_deg; ++d)
        for (const Composition& alpha : compositions_of(d)) instances.push_back(alpha);
    report.instances = static_cast<long long>(instances.size());
    run_parallel(
        report.instances, options.threads,
        [&](long long i) -> std::optional<std::string> {
            const Composition& alpha = instances[static_cast<size_t>(i)];
            if (!check_f_recurrence(alpha, window))
                return "alpha=" + alpha.str() + " n=" + std::to_string(window);
            return std::nullopt;
        },
        report.failures);
    report.info.emplace_back("max_deg", count_str(max_deg));
    report.info.emplace_back("window", count_str(window));
    return report;
}

VerifyReport verify_lm(const VerifyOptions& options) {
    VerifyReport report;
    report.suite = "lm";
    int max_len = value_or(options.max_len, 5);
    int max_deg = value_or(options.max_deg, 6);
    int window = value_or(options.window, 8);
    std::vector<GenComposition> instances = raw_gencomps(max_len, max_deg);
    report.instances = static_cast<long long>(instances.size());
    run_parallel(
        report.instances, options.threads,
        [&](long long i) -> std::optional<std::string> {
            const GenComposition& alpha = instances[static_cast<size_t>(i)];
            if (!check_lm(alpha, window))
                return "alpha=" + alpha.str() + " n=" + std::to_string(window);
            // Triangularity: all trailing terms strictly below the lead.
            Polynomial g = gfun(alpha, window);
            Monomial lead = g.leading_monomial();
            for (const auto& [m, c] : g.terms())
                if (!(m == lead) &&
                    cmp_lex(m, lead) != std::strong_ordering::less)
                    return "alpha=" + alpha.str() + " non-triangular term " + m.str();
            return std::nullopt;
        },
        report.failures);
    report.info.emplace_back("max_len", count_str(max_len));
    report.info.emplace_back("max_deg", count_str(max_deg));
    report.info.emplace_back("window", count_str(window));
    return report;
}

VerifyReport verify_shift(const VerifyOptions& options) {
    VerifyReport report;
    report.suite = "shift";
    int max_len = value_or(options.max_len, 4);
    int max_deg = value_or(options.max_deg, 5);
    int window = value_or(options.window, max_len);
    std::vector<GenComposition> shift_instances = raw_gencomps(max_len, max_deg);
    std::vector<GenComposition> remainder_instances;
    for (const GenComposition& g : shift_instances)
        if (!g.empty() && g.part(0) > 0) remainder_instances.push_back(g);
    long long shifts = static_cast<long long>(shift_instances.size());
    report.instances = shifts + static_cast<long long>(remainder_instances.size());
    run_parallel(
        report.instances, options.threads,
        [&](long long i) -> std::optional<std::string> {
            if (i < shifts) {
                const GenComposition& rho = shift_instances[static_cast<size_t>(i)];
                if (!check_shift_relation(rho, window))
                    return "rho=" + rho.str() + " n=" + std::to_string(window);
                return std::nullopt;
            }
            const GenComposition& alpha =
                remainder_instances[static_cast<size_t>(i - shifts)];
            Polynomial m = m_remainder(alpha, window + 1);
            for (const auto& [mono, c] : m.terms())
                if (mono.exponent(1) != 0)
                    return "alpha=" + alpha.str() + " remainder uses x1: " + mono.str();
            return std::nullopt;
        },
        report.failures);
    report.info.emplace_back("shift_instances", count_str(shifts));
    report.info.emplace_back("remainder_instances",
                             count_str(report.instances - shifts));
    report.info.emplace_back("window", count_str(window));
    return report;
}

VerifyReport verify_syzygy(const VerifyOptions& options) {
    VerifyReport report;
    report.suite = "syzygy";
    int max_len = value_or(options.max_len, 4);
    int max_deg = value_or(options.max_deg, 5);
    int max_e = value_or(options.max_e, 2);
    int window = value_or(options.window, max_len + 1);

    struct Instance {
        GenComposition index;  // the higher pair index gamma.a.tail
        int position;          // 0-based slot of the lowered part
    };
    std::vector<Instance> instances;
    for (const GenComposition& u : stripped_gencomps(max_len, max_deg)) {
        for (int k = 0; k < u.length(); ++k)
            if (u.part(k) >= 1) instances.push_back({u, k});
    }
    report.instances = static_cast<long long>(instances.size());

    std::vector<long long> admissible(static_cast<size_t>(max_e) + 1, 0);
    long long base_count = 0;
    long long recursion_count = 0;
    for (const Instance& inst : instances) {
        std::vector<int> lowered = inst.index.parts();
        lowered[static_cast<size_t>(inst.position)] -= 1;
        GenComposition low{std::move(lowered)};
        for (int e = 0; e <= max_e; ++e)
            if (reaches_level(inst.index, e) && reaches_level(low, e))
                ++admissible[static_cast<size_t>(e)];
        bool standard_tail = true;
        for (int i = inst.position + 1; i < inst.index.length(); ++i)
            if (inst.index.part(i) == 0) standard_tail = false;
        (standard_tail ? base_count : recursion_count) += 1;
    }

    std::atomic<long long> lm_asserted{0};
    std::atomic<long long> lm_collisions{0};
    run_parallel(
        report.instances, options.threads,
        [&](long long i) -> std::optional<std::string> {
            const Instance& inst = instances[static_cast<size_t>(i)];
            const std::vector<int>& parts = inst.index.parts();
            int k = inst.position;
            GenComposition gamma(std::vector<int>(parts.begin(), parts.begin() + k));
            int a = parts[static_cast<size_t>(k)];
            std::vector<int> tail(parts.begin() + k + 1, parts.end());
            bool ok = false;
            size_t zero = tail.size();
            for (size_t j = tail.size(); j-- > 0;)
                if (tail[j] == 0) {
                    zero = j;
                    break;
                }
            if (zero == tail.size()) {
                ok = check_syzygy_base(gamma, a, Composition(tail), window);
            } else {
                GenComposition pi(std::vector<int>(tail.begin(),
                                                   tail.begin() + static_cast<long>(zero)));
                int b = tail[zero + 1];
                Composition mu(std::vector<int>(tail.begin() + static_cast<long>(zero) + 2,
                                                tail.end()));
                SyzygyRecursionReport rec = analyze_syzygy_recursion(gamma, a, pi, b, mu, window);
                (rec.lm_asserted ? lm_asserted : lm_collisions) += 1;
                ok = rec.passed();
            }
            if (!ok)
                return "index=" + inst.index.str() + " slot=" + std::to_string(k + 1);
            return std::nullopt;
        },
        report.failures);

    report.info.emplace_back("base_pairs", count_str(base_count));
    report.info.emplace_back("recursion_pairs", count_str(recursion_count));
    report.info.emplace_back("lm_law_asserted", count_str(lm_asserted.load()));
    report.info.emplace_back("lm_law_collisions", count_str(lm_collisions.load()));
    for (int e = 0; e <= max_e; ++e)
        report.info.emplace_back("admissible_level_" + std::to_string(e),
                                 count_str(admissible[static_cast<size_t>(e)]));
    report.info.emplace_back("window", count_str(window));
    return report;
}

VerifyReport verify_lattice(const VerifyOptions& options) {
    VerifyReport report;
    report.suite = "lattice";
    int max_len = value_or(options.max_len, 4);
    int max_deg = value_or(options.max_deg, 5);
    int max_e = value_or(options.max_e, 2);
    std::vector<GenComposition> vectors = raw_gencomps(max_len, max_deg);
    long long pairs = static_cast<long long>(vectors.size()) *
                      static_cast<long long>(vectors.size());
    long long lattice_total = pairs * (max_e + 1);

    // Telescoping through the componentwise max, on the stripped sub-grid.
    std::vector<GenComposition> chain = stripped_gencomps(std::min(max_len, 3),
                                                          std::min(max_deg, 4));
    int chain_window = std::min(max_len, 3) + 1;
    long long chain_total = static_cast<long long>(chain.size()) *
                            static_cast<long long>(chain.size());
    report.instances = lattice_total + chain_total;

    run_parallel(
        report.instances, options.threads,
        [&](long long i) -> std::optional<std::string> {
            if (i < lattice_total) {
                long long pair = i / (max_e + 1);
                int e = static_cast<int>(i % (max_e + 1));
                const GenComposition& alpha =
                    vectors[static_cast<size_t>(pair / static_cast<long long>(vectors.size()))];
                const GenComposition& rho =
                    vectors[static_cast<size_t>(pair % static_cast<long long>(vectors.size()))];
                if (!check_lattice(alpha, rho, e))
                    return "alpha=" + alpha.str() + " rho=" + rho.str() +
                           " e=" + std::to_string(e);
                return std::nullopt;
            }
            long long j = i - lattice_total;
            const GenComposition& alpha =
                chain[static_cast<size_t>(j / static_cast<long long>(chain.size()))];
            const GenComposition& pi =
                chain[static_cast<size_t>(j % static_cast<long long>(chain.size()))];
            if (!check_buchberger_chain(alpha, pi, chain_window))
                return "chain alpha=" + alpha.str() + " pi=" + pi.str();
            return std::nullopt;
        },
        report.failures);

    report.info.emplace_back("implication_instances", count_str(lattice_total));
    report.info.emplace_back("chain_instances", count_str(chain_total));
    return report;
}

VerifyReport verify_filtration(const VerifyOptions& options) {
    VerifyReport report;
    report.suite = "filtration";
    int max_n = value_or(options.max_n, 4);
    int max_e = value_or(options.max_e, 2);
    struct Instance {
        int n, e, d;
    };
    std::vector<Instance> instances;
    for (int n = 1; n <= max_n; ++n)
        for (int e = 0; e + 1 <= max_e; ++e)
            for (int d = 0; d <= n + e + 1; ++d) instances.push_back({n, e, d});
    report.instances = static_cast<long long>(instances.size());
    run_parallel(
        report.instances, options.threads,
        [&](long long i) -> std::optional<std::string> {
            auto [n, e, d] = instances[static_cast<size_t>(i)];
            std::string tag = "n=" + std::to_string(n) + " e=" + std::to_string(e) +
                              " d=" + std::to_string(d);
            // Generators at the higher level form a subset of the lower level's.
            auto higher = level_generators(e + 1, d, n);
            auto lower = level_generators(e, d, n);
            for (const auto& [alpha, f] : higher) {
                bool present = std::any_of(lower.begin(), lower.end(),
                                           [&](const auto& g) { return g.first == alpha; });
                if (!present)
                    return tag + " generator " + alpha.str() + " missing at lower level";
            }
            const GradedSliceBasis& top = ideal_slice(n, e + 1, d);
            const GradedSliceBasis& bottom = ideal_slice(n, e, d);
            if (top.rank() > bottom.rank()) return tag + " rank grew with the level";
            for (const Polynomial& row : top.rows)
                if (!reduce_against(bottom, row).is_zero())
                    return tag + " slice row escapes the lower level";
            return std::nullopt;
        },
        report.failures);
    report.info.emplace_back("max_n", count_str(max_n));
    report.info.emplace_back("max_e", count_str(max_e));
    return report;
}

VerifyReport verify_pairing(const VerifyOptions& options) {
    VerifyReport report;
    report.suite = "pairing";
    int max_n = value_or(options.max_n, 4);
    int max_e = value_or(options.max_e, 1);
    struct Instance {
        int n, e, d, expected;
    };
    std::vector<Instance> instances;
    for (int n = 1; n <= max_n; ++n)
        for (int e = 0; e <= max_e; ++e) {
            HilbertTable table = hilbert_function(n, e, n + e);
            for (int d = 0; d <= n + e; ++d)
                instances.push_back({n, e, d, table.dims[static_cast<size_t>(d)]});
        }
    report.instances = static_cast<long long>(instances.size());
    run_parallel(
        report.instances, options.threads,
        [&](long long i) -> std::optional<std::string> {
            auto [n, e, d, expected] = instances[static_cast<size_t>(i)];
            int got = superharmonic_dim(n, e, d);
            if (got != expected)
                return "n=" + std::to_string(n) + " e=" + std::to_string(e) +
                       " d=" + std::to_string(d) + " perp=" + std::to_string(got) +
                       " quotient=" + std::to_string(expected);
            return std::nullopt;
        },
        report.failures);
    report.info.emplace_back("max_n", count_str(max_n));
    report.info.emplace_back("max_e", count_str(max_e));
    return report;
}

VerifyReport verify_reduce_equiv(const VerifyOptions& options) {
    VerifyReport report;
    report.suite = "reduce-equiv";
    long long samples = value_or(options.samples, 1000LL);
    int max_n = value_or(options.max_n, 4);
    int max_deg = value_or(options.max_deg, 5);
    int max_e = value_or(options.max_e, 2);

    struct Sample {
        int n, e;
        Polynomial poly;
    };
    std::vector<Sample> inputs;
    inputs.reserve(static_cast<size_t>(samples));
    std::mt19937_64 rng(options.seed);
    for (long long s = 0; s < samples; ++s) {
        int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
        int e = static_cast<int>(rng() % static_cast<unsigned>(max_e + 1));
        int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_deg));
        int terms = 1 + static_cast<int>(rng() % 5);
        Polynomial p(n);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> exp(static_cast<size_t>(n), 0);
            for (int j = 0; j < d; ++j) exp[rng() % static_cast<unsigned>(n)] += 1;
            long long num = static_cast<long long>(rng() % 19) - 9;
            if (num == 0) num = 1;
            long long den = 1 + static_cast<long long>(rng() % 3);
            p.add_term(Monomial(exp), Rat(num, den));
        }
        inputs.push_back({n, e, std::move(p)});
    }
    report.instances = samples;

    run_parallel(
        report.instances, options.threads,
        [&](long long i) -> std::optional<std::string> {
            const Sample& s = inputs[static_cast<size_t>(i)];
            std::string tag = "sample=" + std::to_string(i) + " n=" + std::to_string(s.n) +
                              " e=" + std::to_string(s.e) + " poly=" + s.poly.str();
            Polynomial nf = normal_form(s.poly, s.n, s.e);
            Polynomial div = reduce_by_gbasis(s.poly, s.n, s.e);
            if (nf != div) return tag + " reducers disagree";
            if (normal_form(nf, s.n, s.e) != nf) return tag + " normal_form not idempotent";
            if (reduce_by_gbasis(div, s.n, s.e) != div)
                return tag + " division not idempotent";
            for (const auto& [m, c] : nf.terms())
                if (!is_e_catalan(m.as_composition(), s.e))
                    return tag + " remainder monomial reaches the level: " + m.str();
            if (!contains(s.poly - nf, s.n, s.e)) return tag + " difference not in the ideal";
            if (div.is_zero() != contains(s.poly, s.n, s.e))
                return tag + " zero-remainder/membership mismatch";
            return std::nullopt;
        },
        report.failures);

    report.info.emplace_back("samples", count_str(samples));
    report.info.emplace_back("seed", std::to_string(options.seed));
    return report;
}

std::vector<VerifyReport> verify_all(const VerifyOptions& options) {
    return {verify_frel(options),    verify_lm(options),      verify_shift(options),
            verify_syzygy(options),  verify_lattice(options), verify_filtration(options),
            verify_pairing(options), verify_reduce_equiv(options)};
}

VerifyReport verify_suite(const std::string& name, const VerifyOptions& options) {
    if (name == "frel") return verify_frel(options);
    if (name == "lm") return verify_lm(options);
    if (name == "shift") return verify_shift(options);
    if (name == "syzygy") return verify_syzygy(options);
    if (name == "lattice") return verify_lattice(options);
    if (name == "filtration") return verify_filtration(options);
    if (name == "pairing") return verify_pairing(options);
    if (name == "reduce-equiv") return verify_reduce_equiv(options);
    throw parse_error("unknown verify suite: " + name);
}

}  // namespace qsymcat
