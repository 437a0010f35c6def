// JSON payload builders for the CLI and test harnesses.
#pragma once

#include "qsymcat/ideal.hpp"
#include "qsymcat/polynomial.hpp"
#include "qsymcat/rational.hpp"
#include "qsymcat/verify.hpp"

#include <json.hpp>

namespace qsymcat {

/// Arbitrary-precision integer as a JSON number when it fits in 64 bits,
/// otherwise as a decimal string.
nlohmann::ordered_json json_int(const Int& value);

/// Term list: [{"coeff": "-3", "exponents": [0,3]}, ...] in descending
/// cmp_lex order.
nlohmann::ordered_json polynomial_terms(const Polynomial& p);

/// {n, e, dims, total, catalan_bound, equality}.
nlohmann::ordered_json hilbert_json(const HilbertTable& table);

/// {n, e, count} plus "paths" (ascending lex) when list is set.
nlohmann::ordered_json paths_json(int n, int e, bool list);

/// {suite, instances, failures, passed, info}.
nlohmann::ordered_json verify_json(const VerifyReport& report);

}  // namespace qsymcat
