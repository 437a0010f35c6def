#include "qsymcat/gfunction.hpp"

#include "qsymcat/qsym.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

namespace qsymcat {

namespace {

using GKey = std::pair<std::vector<int>, int>;  // (stripped parts, window)

std::map<GKey, Polynomial>& gfun_cache() {
    static std::map<GKey, Polynomial> cache;
    return cache;
}
std::shared_mutex gfun_mutex;

Polynomial gfun_impl(const GenComposition& stripped, int window) {
    GKey key{stripped.parts(), window};
    {
        std::shared_lock lock(gfun_mutex);
        auto it = gfun_cache().find(key);
        if (it != gfun_cache().end()) return it->second;
    }
    Polynomial out(window);
    if (stripped.is_standard()) {
        out = fundamental_qsym(stripped.as_standard(), window);
    } else {
        GFactorization f = factorize_for_recursion(stripped);
        int k = f.gamma.length() + 1;
        Polynomial left = gfun_impl(concat(f.gamma, f.a, f.beta).stripped(), window);
        Polynomial right = gfun_impl(concat(f.gamma, f.a - 1, f.beta).stripped(), window);
        // x_k vanishes in windows shorter than k, killing the right branch.
        if (k <= window)
            out = left - right.times_monomial(Monomial::var(k, window));
        else
            out = std::move(left);
    }
    {
        std::unique_lock lock(gfun_mutex);
        gfun_cache().emplace(std::move(key), out);
    }
    return out;
}

}  // namespace

Polynomial gfun_truncated(const GenComposition& alpha, int window) {
    if (window < 0) throw precondition_error("window must be nonnegative");
    return gfun_impl(alpha.stripped(), window);
}

Polynomial gfun(const GenComposition& alpha, int window) {
    GenComposition nu = alpha.stripped();
    if (nu.length() > window)
        throw precondition_error("window too small for the stripped composition");
    return gfun_impl(nu, window);
}

bool check_lm(const GenComposition& alpha, int window) {
    Polynomial g = gfun(alpha, window);
    auto [lm, lc] = g.leading_term();
    return lm == Monomial::from_composition(alpha.stripped(), window) && lc == 1;
}

bool check_shift_relation(const GenComposition& rho, int window) {
    GenComposition zero_rho = concat(GenComposition(std::vector<int>{0}), rho);
    return gfun(zero_rho, window + 1) == gfun(rho, window).shift_variables();
}

Polynomial m_remainder(const GenComposition& alpha, int window) {
    if (alpha.empty() || alpha.part(0) <= 0)
        throw precondition_error("first part must be positive");
    std::vector<int> lowered = alpha.parts();
    lowered[0] -= 1;
    Polynomial head = gfun(alpha, window);
    Polynomial tail = gfun(GenComposition(std::move(lowered)), window);
    return head - tail.times_monomial(Monomial::var(1, window));
}

void clear_gfun_cache() {
    std::unique_lock lock(gfun_mutex);
    gfun_cache().clear();
}

}  // namespace qsymcat
