#include "qsymcat/qsym.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

namespace qsymcat {

namespace {

using QsymKey = std::pair<std::vector<int>, int>;

// Shared memo for fundamental_qsym; inserts are idempotent so a lost race
// only costs a recomputation.
std::map<QsymKey, Polynomial>& fundamental_cache() {
    static std::map<QsymKey, Polynomial> cache;
    return cache;
}
std::shared_mutex fundamental_mutex;

}  // namespace

Polynomial monomial_qsym(const Composition& alpha, int window) {
    Polynomial out(window);
    int k = alpha.length();
    if (k > window) return out;
    if (k == 0) return Polynomial::constant(1, window);
    std::vector<int> exp(static_cast<size_t>(window), 0);
    auto rec = [&](auto&& self, int pos, int min_index) -> void {
        if (pos == k) {
            out.add_term(Monomial(exp), 1);
            return;
        }
        for (int i = min_index; i <= window - (k - pos - 1); ++i) {
            exp[static_cast<size_t>(i - 1)] = alpha.part(pos);
            self(self, pos + 1, i + 1);
            exp[static_cast<size_t>(i - 1)] = 0;
        }
    };
    rec(rec, 0, 1);
    return out;
}

Polynomial fundamental_qsym(const Composition& alpha, int window) {
    QsymKey key{alpha.parts(), window};
    {
        std::shared_lock lock(fundamental_mutex);
        auto it = fundamental_cache().find(key);
        if (it != fundamental_cache().end()) return it->second;
    }
    Polynomial out(window);
    for (const Composition& beta : refinements(alpha)) out += monomial_qsym(beta, window);
    {
        std::unique_lock lock(fundamental_mutex);
        fundamental_cache().emplace(std::move(key), out);
    }
    return out;
}

Polynomial fundamental_qsym_by_chains(const Composition& alpha, int window) {
    if (alpha.empty()) return Polynomial::constant(1, window);
    int d = alpha.degree();
    std::set<int> descents = descent_set(alpha);
    Polynomial out(window);
    std::vector<int> exp(static_cast<size_t>(window), 0);
    // chain position j runs through 1..d; index weakly increases, strictly
    // after each descent position.
    auto rec = [&](auto&& self, int j, int min_index) -> void {
        if (j > d) {
            out.add_term(Monomial(exp), 1);
            return;
        }
        for (int i = min_index; i <= window; ++i) {
            exp[static_cast<size_t>(i - 1)] += 1;
            self(self, j + 1, descents.count(j) ? i + 1 : i);
            exp[static_cast<size_t>(i - 1)] -= 1;
        }
    };
    rec(rec, 1, 1);
    return out;
}

bool check_f_recurrence(const Composition& alpha, int window) {
    if (alpha.empty()) throw precondition_error("recurrence needs a nonempty composition");
    if (window < 1) throw precondition_error("window must be positive");
    Polynomial lhs = fundamental_qsym(alpha, window);
    Polynomial tail = fundamental_qsym(alpha, window - 1).shift_variables();
    Polynomial x1 = Polynomial::monomial(Monomial::var(1, window));
    Polynomial head(window);
    if (alpha.part(0) > 1) {
        std::vector<int> parts = alpha.parts();
        parts[0] -= 1;
        head = x1 * fundamental_qsym(Composition(parts), window);
    } else {
        std::vector<int> parts(alpha.parts().begin() + 1, alpha.parts().end());
        head = x1 * fundamental_qsym(Composition(parts), window - 1).shift_variables();
    }
    return lhs == head + tail;
}

std::vector<std::pair<Composition, int>> expand_in_M(const Composition& alpha) {
    std::vector<std::pair<Composition, int>> out;
    for (const Composition& beta : refinements(alpha)) out.emplace_back(beta, 1);
    return out;
}

}  // namespace qsymcat
