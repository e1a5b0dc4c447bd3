#pragma once

#include <string>

#include <json.hpp>

#include "hilbk3/ambiguity.hpp"
#include "hilbk3/classify.hpp"
#include "hilbk3/cones.hpp"

namespace hilbk3 {

using json = nlohmann::ordered_json;

enum class Format { Json, Csv, Md };

Format parse_format(const std::string& s); // throws parameter_violation

// Integers render as JSON numbers while they fit in a signed 64-bit word
// and as decimal strings beyond that.
json to_json(const Int& v);
json to_json(const DivisorClass& c);

json classification_json(const BirClassification& c);
json decomposition_json(long n, long t, const ChamberDecomposition& d);
json ambiguity_json(const AmbiguityReport& r);
json irregular_json(long n, const std::vector<IrregularValue>& values);
json conjecture_json(const ConjectureReport& r);

std::string classification_csv(const BirClassification& c, bool header);
std::string decomposition_csv(long n, long t, const ChamberDecomposition& d);
std::string ambiguity_csv(const AmbiguityReport& r, bool header);
std::string irregular_csv(long n, const std::vector<IrregularValue>& values, bool header);

std::string classification_md(const BirClassification& c);

} // namespace hilbk3
