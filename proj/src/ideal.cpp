#include "qsymcat/ideal.hpp"

#include "qsymcat/gfunction.hpp"
#include "qsymcat/qsym.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace qsymcat {

namespace {

using IntRow = std::map<Monomial, Int, LexGreater>;

// Divide out the content and make the leading coefficient positive.
void normalize_row(IntRow& row) {
    if (row.empty()) return;
    Int g = 0;
    for (const auto& [m, c] : row) g = boost::multiprecision::gcd(g, c);
    if (g < 0) g = -g;
    bool negate = row.begin()->second < 0;
    for (auto& [m, c] : row) {
        c /= g;
        if (negate) c = -c;
    }
}

// row <- lc(pivot)*row - row[lm(pivot)]*pivot, then renormalize.
void eliminate(IntRow& row, const IntRow& pivot) {
    auto hit = row.find(pivot.begin()->first);
    if (hit == row.end()) return;
    Int a = pivot.begin()->second;
    Int b = hit->second;
    for (auto& [m, c] : row) c *= a;
    for (const auto& [m, c] : pivot) {
        auto [it, inserted] = row.emplace(m, 0);
        it->second -= b * c;
        if (it->second == 0) row.erase(it);
    }
    normalize_row(row);
}

// Fraction-free forward elimination; pivot = cmp_lex-largest remaining
// leading monomial.  Returned rows have strictly decreasing pivots and are
// fully back-substituted.
std::vector<IntRow> echelonize(std::vector<IntRow> rows) {
    std::vector<IntRow> done;
    std::erase_if(rows, [](const IntRow& r) { return r.empty(); });
    while (!rows.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < rows.size(); ++i)
            if (cmp_lex(rows[i].begin()->first, rows[best].begin()->first) ==
                std::strong_ordering::greater)
                best = i;
        IntRow pivot = std::move(rows[best]);
        rows.erase(rows.begin() + static_cast<long>(best));
        normalize_row(pivot);
        for (IntRow& r : rows) eliminate(r, pivot);
        std::erase_if(rows, [](const IntRow& r) { return r.empty(); });
        done.push_back(std::move(pivot));
    }
    for (size_t i = done.size(); i-- > 0;)
        for (size_t j = i + 1; j < done.size(); ++j) eliminate(done[i], done[j]);
    return done;
}

std::vector<IntRow> slice_rows(int n, int e, int d) {
    std::vector<IntRow> rows;
    for (const auto& [alpha, f] : level_generators(e, d, n)) {
        int rest = d - alpha.degree();
        for (const Monomial& delta : monomials_of_degree(n, rest)) {
            IntRow row;
            for (const auto& [m, c] : f.terms()) {
                // F coefficients are integers (denominator 1 by construction)
                row.emplace(m.times(delta), Int(boost::multiprecision::numerator(c)));
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

int echelon_rank(std::vector<IntRow> rows) {
    std::erase_if(rows, [](const IntRow& r) { return r.empty(); });
    int rank = 0;
    while (!rows.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < rows.size(); ++i)
            if (cmp_lex(rows[i].begin()->first, rows[best].begin()->first) ==
                std::strong_ordering::greater)
                best = i;
        IntRow pivot = std::move(rows[best]);
        rows.erase(rows.begin() + static_cast<long>(best));
        for (IntRow& r : rows) eliminate(r, pivot);
        std::erase_if(rows, [](const IntRow& r) { return r.empty(); });
        ++rank;
    }
    return rank;
}

Int monomial_count(int n, int d) { return binomial(n + d - 1, d); }

std::map<std::tuple<int, int, int>, std::unique_ptr<GradedSliceBasis>>& slice_cache() {
    static std::map<std::tuple<int, int, int>, std::unique_ptr<GradedSliceBasis>> cache;
    return cache;
}
std::mutex slice_mutex;

}  // namespace

std::vector<std::pair<Composition, Polynomial>> level_generators(int e, int d_max, int n) {
    std::vector<std::pair<Composition, Polynomial>> out;
    for (int d = 1; d <= d_max; ++d)
        for (const Composition& alpha : compositions_of(d)) {
            if (alpha.length() > n) continue;
            if (!reaches_level(alpha, e)) continue;
            out.emplace_back(alpha, fundamental_qsym(alpha, n));
        }
    return out;
}

const GradedSliceBasis& ideal_slice(int n, int e, int d) {
    if (d < 0) throw precondition_error("degree must be nonnegative");
    std::tuple<int, int, int> key{n, e, d};
    {
        std::lock_guard<std::mutex> lock(slice_mutex);
        auto it = slice_cache().find(key);
        if (it != slice_cache().end()) return *it->second;
    }
    auto basis = std::make_unique<GradedSliceBasis>();
    basis->window = n;
    basis->level = e;
    basis->degree = d;
    for (IntRow& row : echelonize(slice_rows(n, e, d))) {
        Rat lead(row.begin()->second);
        Polynomial p(n);
        for (const auto& [m, c] : row) p.add_term(m, Rat(c) / lead);
        basis->pivots.push_back(p.leading_monomial());
        basis->rows.push_back(std::move(p));
    }
    std::lock_guard<std::mutex> lock(slice_mutex);
    auto [it, inserted] = slice_cache().emplace(key, std::move(basis));
    return *it->second;
}

Polynomial reduce_against(const GradedSliceBasis& basis, Polynomial p) {
    if (p.window() != basis.window) throw precondition_error("window mismatch");
    for (size_t i = 0; i < basis.rows.size(); ++i) {
        Rat c = p.coeff(basis.pivots[i]);
        if (c != 0) p -= basis.rows[i] * c;
    }
    return p;
}

Int HilbertTable::total() const {
    Int t = 0;
    for (int d : dims) t += d;
    return t;
}

HilbertTable hilbert_function(int n, int e, int d_max) {
    HilbertTable table;
    table.window = n;
    table.level = e;
    for (int d = 0; d <= d_max; ++d) {
        Int monomials = monomial_count(n, d);
        Int dim = monomials - ideal_slice(n, e, d).rank();
        table.dims.push_back(static_cast<int>(dim));
    }
    return table;
}

bool contains(const Polynomial& p, int n, int e) {
    if (p.window() != n) throw precondition_error("window mismatch");
    if (p.is_zero()) return true;
    for (int d = p.min_degree(); d <= p.max_degree(); ++d) {
        Polynomial component = p.homogeneous_component(d);
        if (component.is_zero()) continue;
        if (!reduce_against(ideal_slice(n, e, d), std::move(component)).is_zero())
            return false;
    }
    return true;
}

Polynomial normal_form(const Polynomial& p, int n, int e) {
    if (p.window() != n) throw precondition_error("window mismatch");
    Polynomial out = p;
    while (true) {
        // Terms iterate in descending cmp_lex order, so the first reaching
        // monomial is the largest one.
        bool found = false;
        GenComposition target;
        Rat coeff;
        for (const auto& [m, c] : out.terms()) {
            if (reaches_level(m.as_composition(), e)) {
                target = m.as_composition();
                coeff = c;
                found = true;
                break;
            }
        }
        if (!found) return out;
        out -= gfun(target, n) * coeff;
    }
}

Rat apolar_pair(const Polynomial& p, const Polynomial& q) {
    if (p.window() != q.window()) throw precondition_error("window mismatch");
    Rat total = 0;
    const Polynomial& small = p.term_count() <= q.term_count() ? p : q;
    const Polynomial& large = p.term_count() <= q.term_count() ? q : p;
    for (const auto& [m, c] : small.terms()) {
        Rat other = large.coeff(m);
        if (other == 0) continue;
        Int weight = 1;
        for (int exp : m.exponents()) weight *= factorial(exp);
        total += c * other * Rat(weight);
    }
    return total;
}

int superharmonic_dim(int n, int e, int d) {
    if (d < 0) throw precondition_error("degree must be nonnegative");
    std::vector<Monomial> columns = monomials_of_degree(n, d);
    std::vector<IntRow> rows;
    for (const auto& [alpha, f] : level_generators(e, d, n)) {
        int rest = d - alpha.degree();
        for (const Monomial& delta : monomials_of_degree(n, rest)) {
            Polynomial product = f.times_monomial(delta);
            IntRow row;
            for (const Monomial& m : columns) {
                Rat value = apolar_pair(product, Polynomial::monomial(m));
                if (value != 0) row.emplace(m, Int(boost::multiprecision::numerator(value)));
            }
            rows.push_back(std::move(row));
        }
    }
    Int dim = Int(columns.size()) - echelon_rank(std::move(rows));
    return static_cast<int>(dim);
}

void clear_slice_cache() {
    std::lock_guard<std::mutex> lock(slice_mutex);
    slice_cache().clear();
}

}  // namespace qsymcat
