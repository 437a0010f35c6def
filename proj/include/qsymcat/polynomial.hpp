// Sparse exact-coefficient polynomials in a fixed window x1..xn,
// ordered by total degree (lower degree wins) then left-to-right lex.
#pragma once

#include "qsymcat/composition.hpp"
#include "qsymcat/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsymcat {

/// A monomial in the variables x1..xn for a fixed window n.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(int window);
    static Monomial var(int index, int window);  // x_index, 1-based

    int window() const { return static_cast<int>(exp_.size()); }
    int degree() const;
    int exponent(int index) const { return exp_[static_cast<size_t>(index - 1)]; }  // 1-based
    const std::vector<int>& exponents() const { return exp_; }

    Monomial times(const Monomial& other) const;
    bool divides(const Monomial& other) const;        // componentwise <=
    Monomial divided_by(const Monomial& other) const; // requires other.divides(*this)
    static Monomial lcm(const Monomial& a, const Monomial& b);

    GenComposition as_composition() const { return GenComposition(exp_); }
    static Monomial from_composition(const GenComposition& alpha, int window);

    bool operator==(const Monomial&) const = default;

    std::string str() const;  // "x1^2*x2", "1"

private:
    std::vector<int> exp_;
};

/// Term order used everywhere: a precedes b when a has *larger* degree, and
/// among equal degrees when the leftmost nonzero entry of (b - a) is
/// positive.  The maximum of a set of monomials is thus the lowest-degree,
/// most-x1-heavy one; the constant monomial beats everything.
std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b);

struct LexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return cmp_lex(a, b) == std::strong_ordering::greater;
    }
};

/// All monomials of the given window and total degree, largest first.
std::vector<Monomial> monomials_of_degree(int window, int degree);

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat, LexGreater>;

    explicit Polynomial(int window) : window_(window) {}
    static Polynomial zero(int window) { return Polynomial(window); }
    static Polynomial constant(const Rat& value, int window);
    static Polynomial monomial(const Monomial& m, const Rat& coeff = 1);

    int window() const { return window_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Largest term under cmp_lex; requires a nonzero polynomial.
    std::pair<Monomial, Rat> leading_term() const;
    Monomial leading_monomial() const { return leading_term().first; }
    Rat leading_coeff() const { return leading_term().second; }

    Rat coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rat& coeff);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Rat& scalar);
    friend Polynomial operator*(Polynomial a, const Rat& scalar) { return a *= scalar; }
    friend Polynomial operator*(const Rat& scalar, Polynomial a) { return a *= scalar; }
    bool operator==(const Polynomial&) const = default;

    Polynomial times_monomial(const Monomial& m, const Rat& coeff = 1) const;

    /// Substitute x_i -> x_{i+1}; the window grows by one.
    Polynomial shift_variables() const;
    /// Reinterpret in a wider window (new exponents zero).
    Polynomial embedded(int new_window) const;
    /// Set x_{m+1} = ... = x_n to zero and shrink the window to m.
    Polynomial restricted(int new_window) const;

    bool is_homogeneous() const;
    /// Total degree of the lowest/highest terms; -1 for the zero polynomial.
    int min_degree() const;
    int max_degree() const;
    Polynomial homogeneous_component(int degree) const;

    /// Canonical text, terms in descending cmp_lex order: "x1^2*x2 - 3*x2^3".
    std::string str() const;
    static Polynomial parse(std::string_view text, int window);

private:
    int window_ = 0;
    TermMap terms_;
};

}  // namespace qsymcat
