#include "qsymcat/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace qsymcat {

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
    for (int e : exp_)
        if (e < 0) throw precondition_error("monomial exponents must be nonnegative");
}

Monomial Monomial::one(int window) {
    if (window < 0) throw precondition_error("window must be nonnegative");
    return Monomial(std::vector<int>(static_cast<size_t>(window), 0));
}

Monomial Monomial::var(int index, int window) {
    if (index < 1 || index > window)
        throw precondition_error("variable index outside window");
    std::vector<int> exp(static_cast<size_t>(window), 0);
    exp[static_cast<size_t>(index - 1)] = 1;
    return Monomial(std::move(exp));
}

int Monomial::degree() const {
    return std::accumulate(exp_.begin(), exp_.end(), 0);
}

Monomial Monomial::times(const Monomial& other) const {
    if (window() != other.window()) throw precondition_error("window mismatch");
    std::vector<int> exp = exp_;
    for (size_t i = 0; i < exp.size(); ++i) exp[i] += other.exp_[i];
    return Monomial(std::move(exp));
}

bool Monomial::divides(const Monomial& other) const {
    if (window() != other.window()) throw precondition_error("window mismatch");
    for (size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > other.exp_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    if (!other.divides(*this)) throw precondition_error("monomial division is not exact");
    std::vector<int> exp = exp_;
    for (size_t i = 0; i < exp.size(); ++i) exp[i] -= other.exp_[i];
    return Monomial(std::move(exp));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.window() != b.window()) throw precondition_error("window mismatch");
    std::vector<int> exp = a.exp_;
    for (size_t i = 0; i < exp.size(); ++i) exp[i] = std::max(exp[i], b.exp_[i]);
    return Monomial(std::move(exp));
}

Monomial Monomial::from_composition(const GenComposition& alpha, int window) {
    if (alpha.length() > window)
        throw precondition_error("composition longer than window");
    std::vector<int> exp = alpha.parts();
    exp.resize(static_cast<size_t>(window), 0);
    return Monomial(std::move(exp));
}

std::string Monomial::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 1; i <= window(); ++i) {
        int e = exponent(i);
        if (e == 0) continue;
        if (!first) out << '*';
        out << 'x' << i;
        if (e > 1) out << '^' << e;
        first = false;
    }
    if (first) return "1";
    return out.str();
}

std::strong_ordering cmp_lex(const Monomial& a, const Monomial& b) {
    if (a.window() != b.window()) throw precondition_error("window mismatch");
    int da = a.degree();
    int db = b.degree();
    if (da != db) return db <=> da;  // lower degree is greater
    for (size_t i = 0; i < a.exponents().size(); ++i) {
        int diff = a.exponents()[i] - b.exponents()[i];
        if (diff != 0) return diff <=> 0;  // more weight on the left is greater
    }
    return std::strong_ordering::equal;
}

std::vector<Monomial> monomials_of_degree(int window, int degree) {
    if (window < 0 || degree < 0)
        throw precondition_error("window and degree must be nonnegative");
    std::vector<Monomial> out;
    if (window == 0) {
        if (degree == 0) out.push_back(Monomial::one(0));
        return out;
    }
    std::vector<int> exp(static_cast<size_t>(window), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == window - 1) {
            exp[static_cast<size_t>(pos)] = rest;
            out.emplace_back(exp);
            return;
        }
        for (int e = rest; e >= 0; --e) {
            exp[static_cast<size_t>(pos)] = e;
            self(self, pos + 1, rest - e);
        }
        exp[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

Polynomial Polynomial::constant(const Rat& value, int window) {
    Polynomial p(window);
    p.add_term(Monomial::one(window), value);
    return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rat& coeff) {
    Polynomial p(m.window());
    p.add_term(m, coeff);
    return p;
}

std::pair<Monomial, Rat> Polynomial::leading_term() const {
    if (terms_.empty()) throw precondition_error("zero polynomial has no leading term");
    return *terms_.begin();
}

Rat Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rat& coeff) {
    if (m.window() != window_) throw precondition_error("window mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(window_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (window_ != other.window_) throw precondition_error("window mismatch");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (window_ != other.window_) throw precondition_error("window mismatch");
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.window() != b.window()) throw precondition_error("window mismatch");
    Polynomial out(a.window());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial& Polynomial::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rat& coeff) const {
    if (m.window() != window_) throw precondition_error("window mismatch");
    Polynomial out(window_);
    if (coeff == 0) return out;
    for (const auto& [mm, cc] : terms_) out.terms_.emplace(mm.times(m), cc * coeff);
    return out;
}

Polynomial Polynomial::shift_variables() const {
    Polynomial out(window_ + 1);
    for (const auto& [m, c] : terms_) {
        std::vector<int> exp;
        exp.reserve(m.exponents().size() + 1);
        exp.push_back(0);
        exp.insert(exp.end(), m.exponents().begin(), m.exponents().end());
        out.terms_.emplace(Monomial(std::move(exp)), c);
    }
    return out;
}

Polynomial Polynomial::embedded(int new_window) const {
    if (new_window < window_) throw precondition_error("embedding must not shrink the window");
    Polynomial out(new_window);
    for (const auto& [m, c] : terms_) {
        std::vector<int> exp = m.exponents();
        exp.resize(static_cast<size_t>(new_window), 0);
        out.terms_.emplace(Monomial(std::move(exp)), c);
    }
    return out;
}

Polynomial Polynomial::restricted(int new_window) const {
    if (new_window > window_) throw precondition_error("restriction must not grow the window");
    Polynomial out(new_window);
    for (const auto& [m, c] : terms_) {
        bool keep = true;
        for (int i = new_window + 1; i <= window_; ++i)
            if (m.exponent(i) != 0) {
                keep = false;
                break;
            }
        if (!keep) continue;
        std::vector<int> exp(m.exponents().begin(), m.exponents().begin() + new_window);
        out.terms_.emplace(Monomial(std::move(exp)), c);
    }
    return out;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return min_degree() == max_degree();
}

int Polynomial::min_degree() const {
    // The term order is graded with lower degree first, so begin() is minimal.
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

int Polynomial::max_degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

Polynomial Polynomial::homogeneous_component(int degree) const {
    Polynomial out(window_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree) out.terms_.emplace(m, c);
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string ms = m.str();
        if (ms == "1") {
            out << abs.str();
        } else if (abs == 1) {
            out << ms;
        } else {
            out << abs.str() << '*' << ms;
        }
    }
    return out.str();
}

namespace {

struct PolyParser {
    std::string_view text;
    size_t pos = 0;
    int window;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos == text.size();
    }

    char peek() { return pos < text.size() ? text[pos] : '\0'; }

    Int read_unsigned() {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected a number in polynomial text");
        return Int(std::string(text.substr(start, pos - start)));
    }

    Rat read_rational() {
        Int num = read_unsigned();
        if (peek() == '/') {
            ++pos;
            Int den = read_unsigned();
            if (den == 0) throw parse_error("zero denominator in polynomial text");
            return Rat(num, den);
        }
        return Rat(num);
    }

    // factor := rational | 'x' index ['^' exponent]
    void read_factor(Rat& coeff, std::vector<int>& exp) {
        skip_ws();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= read_rational();
            return;
        }
        if (peek() != 'x') throw parse_error("expected a variable or number in polynomial text");
        ++pos;
        Int index = read_unsigned();
        if (index < 1 || index > window)
            throw parse_error("variable index outside window in polynomial text");
        int power = 1;
        if (peek() == '^') {
            ++pos;
            Int p = read_unsigned();
            if (p < 1 || p > 1'000'000) throw parse_error("invalid exponent in polynomial text");
            power = static_cast<int>(p);
        }
        exp[static_cast<size_t>(static_cast<int>(index) - 1)] += power;
    }

    Polynomial run() {
        Polynomial out(window);
        skip_ws();
        if (pos == text.size()) throw parse_error("empty polynomial text");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = text[pos] == '-';
            ++pos;
        }
        while (true) {
            Rat coeff = 1;
            std::vector<int> exp(static_cast<size_t>(window), 0);
            read_factor(coeff, exp);
            skip_ws();
            while (peek() == '*') {
                ++pos;
                read_factor(coeff, exp);
                skip_ws();
            }
            out.add_term(Monomial(exp), negative ? Rat(-coeff) : coeff);
            if (at_end()) break;
            if (peek() == '+') {
                negative = false;
            } else if (peek() == '-') {
                negative = true;
            } else {
                throw parse_error("expected '+' or '-' in polynomial text");
            }
            ++pos;
        }
        return out;
    }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int window) {
    if (window < 0) throw precondition_error("window must be nonnegative");
    PolyParser parser{text, 0, window};
    return parser.run();
}

}  // namespace qsymcat
