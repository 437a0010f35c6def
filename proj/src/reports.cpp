#include "qsymcat/reports.hpp"

#include "qsymcat/composition.hpp"

#include <limits>

namespace qsymcat {

nlohmann::ordered_json json_int(const Int& value) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (value >= lo && value <= hi)
        return static_cast<long long>(value);
    return value.str();
}

nlohmann::ordered_json polynomial_terms(const Polynomial& p) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["coeff"] = c.str();
        term["exponents"] = m.exponents();
        terms.push_back(std::move(term));
    }
    return terms;
}

nlohmann::ordered_json hilbert_json(const HilbertTable& table) {
    nlohmann::ordered_json out;
    out["n"] = table.window;
    out["e"] = table.level;
    out["dims"] = table.dims;
    out["total"] = json_int(table.total());
    Int bound = count_e_catalan(table.window, table.level);
    out["catalan_bound"] = json_int(bound);
    out["equality"] = table.total() == bound;
    return out;
}

nlohmann::ordered_json paths_json(int n, int e, bool list) {
    nlohmann::ordered_json out;
    out["n"] = n;
    out["e"] = e;
    out["count"] = json_int(count_e_catalan(n, e));
    if (list) {
        nlohmann::ordered_json paths = nlohmann::ordered_json::array();
        for (const GenComposition& alpha : enumerate_e_catalan(n, e))
            paths.push_back(alpha.str());
        out["paths"] = std::move(paths);
    }
    return out;
}

nlohmann::ordered_json verify_json(const VerifyReport& report) {
    nlohmann::ordered_json out;
    out["suite"] = report.suite;
    out["instances"] = report.instances;
    out["failures"] = report.failures;
    out["passed"] = report.passed();
    nlohmann::ordered_json info;
    for (const auto& [key, value] : report.info) info[key] = value;
    out["info"] = std::move(info);
    return out;
}

}  // namespace qsymcat
