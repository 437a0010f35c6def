// Compositions, generalized compositions and their lattice-path geometry.
#pragma once

#include "qsymcat/rational.hpp"

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsymcat {

/// A composition: a finite sequence of strictly positive integer parts.
/// The empty composition is the unique composition of 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const;            // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }  // 0-based

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;

    /// Text form: comma-separated parts, "-" for the empty composition.
    std::string str() const;
    static Composition parse(std::string_view text);

private:
    std::vector<int> parts_;
};

/// A generalized composition: parts may be zero.  Two generalized
/// compositions are canonically equal when they agree after removing
/// trailing zeros; `parts()` always keeps the explicit length.
class GenComposition {
public:
    GenComposition() = default;
    explicit GenComposition(std::vector<int> parts);
    GenComposition(const Composition& c) : parts_(c.parts()) {}  // implicit widen

    const std::vector<int>& parts() const { return parts_; }
    int degree() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }

    /// Copy with trailing zeros removed.
    GenComposition stripped() const;
    /// True when every part is strictly positive (after no stripping).
    bool is_standard() const;
    /// The positive-part composition; requires is_standard().
    Composition as_standard() const;

    /// Equality up to trailing zeros.
    bool canonical_equal(const GenComposition& other) const;

    /// Exact sequence comparison (length-sensitive).
    bool operator==(const GenComposition&) const = default;
    auto operator<=>(const GenComposition&) const = default;

    std::string str() const;
    static GenComposition parse(std::string_view text);

private:
    std::vector<int> parts_;
};

GenComposition concat(const GenComposition& a, const GenComposition& b);
GenComposition concat(const GenComposition& a, int part, const GenComposition& b);

/// Descent set D(alpha) = {a1, a1+a2, ...} minus the total degree.
std::set<int> descent_set(const Composition& alpha);

/// Inverse of descent_set: the composition of d whose descent set is A.
/// Every element of A must lie in {1, ..., d-1}.
Composition composition_from_subset(const std::set<int>& subset, int d);

/// True when beta refines alpha: equal degree and D(alpha) subset of D(beta).
bool refines(const Composition& beta, const Composition& alpha);

/// All compositions refining alpha, in descending lexicographic order.
std::vector<Composition> refinements(const Composition& alpha);

/// All compositions of degree d, in descending lexicographic order.
std::vector<Composition> compositions_of(int d);

/// True when some nonempty prefix p of alpha has degree(p) - length(p) >= e.
/// The empty generalized composition reaches no level.
bool reaches_level(const GenComposition& alpha, int e);

/// True when the lattice path of alpha stays weakly above y = x - e,
/// i.e. alpha does not reach level e.
bool is_e_catalan(const GenComposition& alpha, int e);

/// All length-n generalized compositions that are e-Catalan, in ascending
/// lexicographic order.  Trailing zeros are significant here.
std::vector<GenComposition> enumerate_e_catalan(int n, int e);

/// Number of length-n e-Catalan generalized compositions; equals the number
/// of lattice paths (0,0) -> (n+e, n) staying weakly above y = x - e.
Int count_e_catalan(int n, int e);

/// The lattice path of a generalized composition: alpha_i east steps at
/// height i-1, with a north step between consecutive runs.
struct PathDiagram {
    std::vector<std::pair<int, int>> points;  // every lattice point visited
    std::vector<int> east_heights;            // height of each east step
    std::string text;                         // ASCII rendering
};

PathDiagram render_path(const GenComposition& alpha);

/// Factorization at the rightmost zero: alpha (with trailing zeros removed)
/// equals gamma . 0 . a . beta with a > 0 and beta standard.  Requires the
/// stripped form to be nonempty and non-standard.
struct GFactorization {
    GenComposition gamma;
    int a = 0;
    Composition beta;
};

GFactorization factorize_for_recursion(const GenComposition& alpha);

}  // namespace qsymcat
