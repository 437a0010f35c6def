// Acceptance gate: ten end-to-end criteria, one line each, exit code is
// the number of failures.  Frozen expected values and independent oracles
// only -- no tolerance anywhere.
#include "qsymcat/composition.hpp"
#include "qsymcat/gfunction.hpp"
#include "qsymcat/groebner.hpp"
#include "qsymcat/ideal.hpp"
#include "qsymcat/polynomial.hpp"
#include "qsymcat/qsym.hpp"
#include "qsymcat/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace qsymcat;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int worker_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(hw > 8 ? 8 : hw);
}

VerifyOptions default_options() {
    VerifyOptions o;
    o.threads = worker_threads();
    return o;
}

// Independent oracle: walk every east/north lattice path from (0,0) to
// (n+e, n) that never drops below the line y = x - e.
long long walk_paths(int x, int y, int n, int e) {
    if (x == n + e && y == n) return 1;
    long long total = 0;
    if (x + 1 <= n + e && y >= x + 1 - e) total += walk_paths(x + 1, y, n, e);
    if (y + 1 <= n) total += walk_paths(x, y + 1, n, e);
    return total;
}

std::string join_ints(const std::vector<Int>& v) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << "]";
    return out.str();
}

Outcome quotient_totals_bounded_by_path_counts() {
    Outcome r;
    std::vector<Int> expected = {1, 2, 5, 14, 42};
    std::vector<Int> totals;
    bool all_equal = true;
    for (int n = 1; n <= 5; ++n) {
        HilbertTable t = hilbert_function(n, 0, n);
        Int bound = count_e_catalan(n, 0);
        totals.push_back(t.total());
        if (bound != expected[static_cast<size_t>(n - 1)]) {
            r.pass = false;
            r.detail += " bad bound at n=" + std::to_string(n);
        }
        if (t.total() > bound) {
            r.pass = false;
            r.detail += " total exceeds bound at n=" + std::to_string(n);
        }
        if (t.total() != bound) all_equal = false;
    }
    r.detail = "totals=" + join_ints(totals) +
               (all_equal ? " equality=observed" : " equality=NOT-observed") + r.detail;
    return r;
}

Outcome graded_dimensions_match_path_histogram() {
    Outcome r;
    HilbertTable t3 = hilbert_function(3, 0, 3);
    if (t3.dims != std::vector<int>{1, 2, 2, 0}) {
        r.pass = false;
        r.detail += " window-3 table mismatch";
    }
    HilbertTable t4 = hilbert_function(4, 0, 4);
    std::vector<int> hist(5, 0);
    for (const GenComposition& alpha : enumerate_e_catalan(4, 0))
        hist[static_cast<size_t>(alpha.degree())] += 1;
    if (hist != std::vector<int>{1, 3, 5, 5, 0}) {
        r.pass = false;
        r.detail += " path histogram disagrees with the frozen row";
    }
    bool equal = true;
    for (int d = 0; d <= 4; ++d) {
        if (t4.dims[static_cast<size_t>(d)] > hist[static_cast<size_t>(d)]) {
            r.pass = false;
            r.detail += " dimension exceeds path count at degree " + std::to_string(d);
        }
        if (t4.dims[static_cast<size_t>(d)] != hist[static_cast<size_t>(d)]) equal = false;
    }
    r.detail = "window-4 per-degree " + std::string(equal ? "equality=observed" : "equality=NOT-observed") +
               r.detail;
    return r;
}

Outcome path_counts_match_walk_oracle() {
    Outcome r;
    long long checked = 0;
    for (int n = 0; n <= 8; ++n)
        for (int e = 0; e <= 3; ++e) {
            Int fast = count_e_catalan(n, e);
            long long slow = walk_paths(0, 0, n, e);
            ++checked;
            if (fast != slow) {
                r.pass = false;
                r.detail += " mismatch at n=" + std::to_string(n) + " e=" + std::to_string(e);
            }
        }
    std::vector<Int> catalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (int n = 0; n <= 8; ++n)
        if (count_e_catalan(n, 0) != catalan[static_cast<size_t>(n)]) {
            r.pass = false;
            r.detail += " level-0 count differs from the frozen list at n=" + std::to_string(n);
        }
    r.detail = std::to_string(checked) + " (n,e) pairs against the path walker" + r.detail;
    return r;
}

Outcome report_outcome(const VerifyReport& report) {
    Outcome r;
    r.pass = report.passed();
    r.detail = report.suite + ": " + std::to_string(report.instances) + " instances, " +
               std::to_string(report.failures.size()) + " failures";
    if (!report.failures.empty()) r.detail += " first=" + report.failures.front();
    return r;
}

Outcome leading_monomials_exhaustive() { return report_outcome(verify_lm(default_options())); }

Outcome recurrence_identities() {
    VerifyReport frel = verify_frel(default_options());
    VerifyReport shift = verify_shift(default_options());
    Outcome r;
    r.pass = frel.passed() && shift.passed();
    r.detail = std::to_string(frel.instances) + " first-part + " +
               std::to_string(shift.instances) + " shift/remainder instances, " +
               std::to_string(frel.failures.size() + shift.failures.size()) + " failures";
    return r;
}

Outcome syzygy_resolutions() { return report_outcome(verify_syzygy(default_options())); }

std::vector<GenComposition> stripped_pool(int max_len, int max_deg) {
    std::vector<GenComposition> pool;
    std::vector<int> cur;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int p = 0; p <= max_deg; ++p) {
            cur.push_back(p);
            GenComposition g(cur);
            if (g.degree() <= max_deg && cur.back() > 0) pool.push_back(g);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return pool;
}

Outcome membership_and_generator_equivalence() {
    Outcome r;
    long long members = 0;
    std::vector<GenComposition> pool = stripped_pool(4, 5);
    for (int n = 1; n <= 5; ++n)
        for (int e = 0; e <= 2; ++e) {
            // every reaching index gives an ideal element
            for (const GenComposition& alpha : pool) {
                if (alpha.degree() > 5 || alpha.length() > n) continue;
                if (!reaches_level(alpha, e)) continue;
                ++members;
                if (!contains(gfun(alpha, n), n, e)) {
                    r.pass = false;
                    r.detail += " non-member alpha=" + alpha.str() + " n=" + std::to_string(n) +
                                " e=" + std::to_string(e);
                }
            }
        }

    // Two generating families span the same graded slices: the recursive
    // family contains the basis family on standard indices, and every
    // shifted multiple of a recursive generator reduces to zero against
    // the basis-family slice.
    long long rows = 0;
    for (int n = 1; n <= 4; ++n)
        for (int e = 0; e <= 2; ++e) {
            for (int d = 1; d <= 5; ++d)
                for (const Composition& alpha : compositions_of(d)) {
                    if (alpha.length() > n || !reaches_level(alpha, e)) continue;
                    if (gfun(GenComposition(alpha), n) != fundamental_qsym(alpha, n)) {
                        r.pass = false;
                        r.detail += " family mismatch at alpha=" + alpha.str();
                    }
                }
            for (const GenComposition& alpha : stripped_pool(n, 5)) {
                if (!reaches_level(alpha, e)) continue;
                for (int d = alpha.degree(); d <= 5; ++d) {
                    const GradedSliceBasis& slice = ideal_slice(n, e, d);
                    Polynomial g = gfun(alpha, n);
                    for (const Monomial& delta : monomials_of_degree(n, d - alpha.degree())) {
                        ++rows;
                        if (!reduce_against(slice, g.times_monomial(delta)).is_zero()) {
                            r.pass = false;
                            r.detail += " unreduced row alpha=" + alpha.str() +
                                        " delta=" + delta.str() + " n=" + std::to_string(n) +
                                        " e=" + std::to_string(e);
                        }
                    }
                }
            }
        }
    r.detail = std::to_string(members) + " memberships, " + std::to_string(rows) +
               " cross-family rows" + r.detail;
    return r;
}

Outcome reducer_agreement() {
    VerifyOptions o = default_options();
    o.samples = 1000;
    return report_outcome(verify_reduce_equiv(o));
}

Outcome pairing_complement_dimensions() {
    Outcome r;
    long long checked = 0;
    for (int n = 1; n <= 4; ++n)
        for (int e = 0; e <= 1; ++e) {
            HilbertTable t = hilbert_function(n, e, n + e);
            for (int d = 0; d <= n + e; ++d) {
                ++checked;
                if (superharmonic_dim(n, e, d) != t.dims[static_cast<size_t>(d)]) {
                    r.pass = false;
                    r.detail += " mismatch at n=" + std::to_string(n) + " e=" + std::to_string(e) +
                                " d=" + std::to_string(d);
                }
            }
        }
    r.detail = std::to_string(checked) + " degree slices" + r.detail;
    return r;
}

Outcome quotient_vanishes_past_top_degree() {
    Outcome r;
    long long checked = 0;
    auto expect_zero = [&](int n, int e) {
        HilbertTable t = hilbert_function(n, e, n + e + 1);
        for (int d = n + e; d <= n + e + 1; ++d) {
            ++checked;
            if (t.dims[static_cast<size_t>(d)] != 0) {
                r.pass = false;
                r.detail += " nonzero at n=" + std::to_string(n) + " e=" + std::to_string(e) +
                            " d=" + std::to_string(d);
            }
        }
    };
    for (int n = 1; n <= 5; ++n) expect_zero(n, 0);
    for (int n = 1; n <= 3; ++n)
        for (int e = 1; e <= 2; ++e) expect_zero(n, e);
    r.detail = std::to_string(checked) + " top degrees" + r.detail;
    return r;
}

struct Criterion {
    const char* name;
    double limit_seconds;  // <= 0 means no per-criterion limit
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"quotient totals bounded by path counts", 60.0, quotient_totals_bounded_by_path_counts},
        {"graded dimensions match the path histogram", 0.0, graded_dimensions_match_path_histogram},
        {"path counts match the walk oracle", 5.0, path_counts_match_walk_oracle},
        {"leading monomials exhaustive", 120.0, leading_monomials_exhaustive},
        {"recurrence identities", 0.0, recurrence_identities},
        {"syzygy resolutions", 120.0, syzygy_resolutions},
        {"membership and generator equivalence", 0.0, membership_and_generator_equivalence},
        {"reducer agreement on random inputs", 0.0, reducer_agreement},
        {"pairing complement dimensions", 0.0, pairing_complement_dimensions},
        {"quotient vanishes past the top degree", 0.0, quotient_vanishes_past_top_degree},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].run();
        } catch (const std::exception& ex) {
            outcome.pass = false;
            outcome.detail = std::string("raised: ") + ex.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[i].limit_seconds > 0 && seconds >= criteria[i].limit_seconds) {
            outcome.pass = false;
            outcome.detail += " [over the " + std::to_string(criteria[i].limit_seconds) +
                              "s limit]";
        }
        if (!outcome.pass) ++failures;
        std::printf("criterion %02zu %-45s %s  (%.1fs) %s\n", i + 1, criteria[i].name,
                    outcome.pass ? "PASS" : "FAIL", seconds, outcome.detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
