#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "xi/classify.hpp"
#include "xi/crown.hpp"
#include "xi/jordan.hpp"

namespace xi {

using Json = nlohmann::json;

/// Rationals travel as "p/q" strings.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json vector_json(const RationalVector& v);
RationalVector vector_from_json(const Json& j);

Json roots_json(const RootDatum& rd);
std::string render_roots(const RootDatum& rd);

Json extremes_json(const CrownPolytope& p);
std::string render_extremes(const CrownPolytope& p);

Json classification_json(const Classification& c);
/// Inverse of classification_json; spectra are not serialized and come back
/// empty apart from their flags.
Classification classification_from_json(const Json& j);
/// Lines longer than width are cut (0 = no limit).
std::string render_classification(const Classification& c, std::size_t width = 0);

struct JordanStratumRow {
    std::size_t p = 0;
    std::size_t orbit_size = 0;
    Rational det;          // of z_p
    StratumLabel stratum;  // of z_p
    StratumStabilizer stabilizer;
};

struct JordanReport {
    std::string algebra;
    std::size_t rank = 0;
    std::vector<JordanStratumRow> strata;  // p = 0 .. n

    bool ok() const;
};

JordanReport jordan_report(const JordanAlgebra& v);
Json jordan_json(const JordanReport& r);
std::string render_jordan(const JordanReport& r, std::size_t width = 0);

/// Realization checks followed by the per-component checks.
std::string render_verification(const Classification& c);

/// Stable textual form used for golden files: keys sorted, two-space indent,
/// trailing newline.
std::string canonical_dump(const Json& j);

}  // namespace xi
