#pragma once

#include <json.hpp>

#include "fkw/cosetfact.hpp"
#include "fkw/intweyl.hpp"
#include "fkw/reduction.hpp"

namespace fkw {

using json = nlohmann::ordered_json;

/// Rationals are written as strings ("-1/4") so that no precision is lost.
json to_json(const Rational& r);
json to_json(const Weight& w);
json to_json(const RootSystem& rs);
json to_json(const RootSystem& rs, const AffineCoroot& c);
json to_json(const Block& b);
json to_json(const Factorization& f);
json to_json(const ReductionResult& r);

}  // namespace fkw
