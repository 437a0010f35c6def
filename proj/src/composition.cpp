#include "qsymcat/composition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace qsymcat {

namespace {

int checked_sum(const std::vector<int>& parts) {
    long long s = 0;
    for (int p : parts) s += p;
    if (s > 1'000'000) throw precondition_error("composition degree too large");
    return static_cast<int>(s);
}

std::string join_parts(const std::vector<int>& parts) {
    if (parts.empty()) return "-";
    std::ostringstream out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out << ',';
        out << parts[i];
    }
    return out.str();
}

std::vector<int> parse_parts(std::string_view text, bool allow_zero) {
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos) throw parse_error("empty composition text");
    text = text.substr(b, e - b + 1);
    if (text == "-") return {};
    std::vector<int> parts;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        if (tok.empty()) throw parse_error("empty part in composition text");
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
            throw parse_error("invalid composition part: " + std::string(tok));
        if (!allow_zero && value == 0)
            throw parse_error("composition parts must be positive");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return parts;
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw precondition_error("composition parts must be positive");
}

int Composition::degree() const { return checked_sum(parts_); }

std::string Composition::str() const { return join_parts(parts_); }

Composition Composition::parse(std::string_view text) {
    return Composition(parse_parts(text, /*allow_zero=*/false));
}

GenComposition::GenComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) throw precondition_error("generalized composition parts must be nonnegative");
}

int GenComposition::degree() const { return checked_sum(parts_); }

GenComposition GenComposition::stripped() const {
    std::vector<int> out = parts_;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return GenComposition(std::move(out));
}

bool GenComposition::is_standard() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p > 0; });
}

Composition GenComposition::as_standard() const {
    if (!is_standard()) throw precondition_error("generalized composition has zero parts");
    return Composition(parts_);
}

bool GenComposition::canonical_equal(const GenComposition& other) const {
    return stripped().parts() == other.stripped().parts();
}

std::string GenComposition::str() const { return join_parts(parts_); }

GenComposition GenComposition::parse(std::string_view text) {
    return GenComposition(parse_parts(text, /*allow_zero=*/true));
}

GenComposition concat(const GenComposition& a, const GenComposition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return GenComposition(std::move(parts));
}

GenComposition concat(const GenComposition& a, int part, const GenComposition& b) {
    std::vector<int> parts = a.parts();
    parts.push_back(part);
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return GenComposition(std::move(parts));
}

std::set<int> descent_set(const Composition& alpha) {
    std::set<int> out;
    int sum = 0;
    for (size_t i = 0; i + 1 < alpha.parts().size(); ++i) {
        sum += alpha.parts()[i];
        out.insert(sum);
    }
    return out;
}

Composition composition_from_subset(const std::set<int>& subset, int d) {
    if (d < 0) throw precondition_error("degree must be nonnegative");
    for (int a : subset)
        if (a < 1 || a >= d)
            throw precondition_error("subset element outside {1,...,d-1}");
    if (d == 0) return Composition();
    std::vector<int> parts;
    int prev = 0;
    for (int a : subset) {  // std::set iterates ascending
        parts.push_back(a - prev);
        prev = a;
    }
    parts.push_back(d - prev);
    return Composition(std::move(parts));
}

bool refines(const Composition& beta, const Composition& alpha) {
    if (beta.degree() != alpha.degree()) return false;
    std::set<int> da = descent_set(alpha);
    std::set<int> db = descent_set(beta);
    return std::includes(db.begin(), db.end(), da.begin(), da.end());
}

std::vector<Composition> refinements(const Composition& alpha) {
    std::vector<Composition> out;
    for (const Composition& beta : compositions_of(alpha.degree()))
        if (refines(beta, alpha)) out.push_back(beta);
    return out;
}

std::vector<Composition> compositions_of(int d) {
    if (d < 0) throw precondition_error("degree must be nonnegative");
    std::vector<Composition> out;
    std::vector<int> parts;
    // First part chosen largest first gives descending lexicographic order.
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = rest; p >= 1; --p) {
            parts.push_back(p);
            self(self, rest - p);
            parts.pop_back();
        }
    };
    rec(rec, d);
    return out;
}

bool reaches_level(const GenComposition& alpha, int e) {
    int sum = 0;
    for (int i = 0; i < alpha.length(); ++i) {
        sum += alpha.part(i);
        if (sum - (i + 1) >= e) return true;
    }
    return false;
}

bool is_e_catalan(const GenComposition& alpha, int e) {
    return !reaches_level(alpha, e);
}

std::vector<GenComposition> enumerate_e_catalan(int n, int e) {
    if (n < 0 || e < 0) throw precondition_error("n and e must be nonnegative");
    std::vector<GenComposition> out;
    std::vector<int> parts(static_cast<size_t>(n), 0);
    // Prefix sums capped by (i - 1) + e keep the path weakly above y = x - e.
    auto rec = [&](auto&& self, int i, int sum) -> void {
        if (i == n) {
            out.emplace_back(parts);
            return;
        }
        int cap = i + e;  // allowed prefix sum through position i+1 is (i+1)-1+e
        for (int p = 0; sum + p <= cap; ++p) {
            parts[static_cast<size_t>(i)] = p;
            self(self, i + 1, sum + p);
        }
        parts[static_cast<size_t>(i)] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

Int count_e_catalan(int n, int e) {
    if (n < 0 || e < 0) throw precondition_error("n and e must be nonnegative");
    // ways[s] = number of admissible prefixes of length i with sum s.
    std::vector<Int> ways{1};
    for (int i = 1; i <= n; ++i) {
        int cap = i - 1 + e;
        std::vector<Int> next(static_cast<size_t>(cap) + 1);
        Int acc = 0;
        for (int s = 0; s <= cap; ++s) {
            if (s < static_cast<int>(ways.size())) acc += ways[static_cast<size_t>(s)];
            next[static_cast<size_t>(s)] = acc;
        }
        ways = std::move(next);
    }
    Int total = 0;
    for (const Int& w : ways) total += w;
    return total;
}

PathDiagram render_path(const GenComposition& alpha) {
    PathDiagram diagram;
    int x = 0;
    int y = 0;
    diagram.points.emplace_back(x, y);
    for (int i = 0; i < alpha.length(); ++i) {
        for (int s = 0; s < alpha.part(i); ++s) {
            diagram.east_heights.push_back(y);
            diagram.points.emplace_back(++x, y);
        }
        diagram.points.emplace_back(x, ++y);
    }

    if (alpha.length() == 0) return diagram;

    // One text row per part, top row first.  Cells carry the variable label
    // of their height; a bar marks the north step ending the run.
    size_t width = std::to_string(alpha.length()).size() + 2;  // "x<k>" + pad
    std::vector<int> prefix(static_cast<size_t>(alpha.length()) + 1, 0);
    for (int i = 0; i < alpha.length(); ++i)
        prefix[static_cast<size_t>(i) + 1] = prefix[static_cast<size_t>(i)] + alpha.part(i);
    std::ostringstream out;
    for (int row = alpha.length() - 1; row >= 0; --row) {
        std::string label = "x" + std::to_string(row + 1);
        label.resize(width, ' ');
        std::string line(static_cast<size_t>(prefix[static_cast<size_t>(row)]) * width, ' ');
        for (int c = prefix[static_cast<size_t>(row)]; c < prefix[static_cast<size_t>(row) + 1]; ++c)
            line += label;
        line += '|';
        out << line;
        if (row > 0) out << '\n';
    }
    diagram.text = out.str();
    return diagram;
}

GFactorization factorize_for_recursion(const GenComposition& alpha) {
    GenComposition nu = alpha.stripped();
    if (nu.empty()) throw precondition_error("cannot factorize the empty composition");
    if (nu.is_standard()) throw precondition_error("cannot factorize a standard composition");
    const std::vector<int>& parts = nu.parts();
    size_t zero = parts.size();
    for (size_t i = parts.size(); i-- > 0;) {
        if (parts[i] == 0) {
            zero = i;
            break;
        }
    }
    // The stripped form is non-standard, so a zero exists; everything to its
    // right is positive and the entry just after it exists.
    GFactorization f;
    f.gamma = GenComposition(std::vector<int>(parts.begin(), parts.begin() + static_cast<long>(zero)));
    f.a = parts[zero + 1];
    f.beta = Composition(std::vector<int>(parts.begin() + static_cast<long>(zero) + 2, parts.end()));
    return f;
}

}  // namespace qsymcat
