// JSON views of the core structures.  All objects use insertion-ordered
// keys so serialization is byte-stable across runs.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gr33/lift.hpp"
#include "gr33/pattern.hpp"
#include "gr33/tensor.hpp"
#include "gr33/translate.hpp"
#include "gr33/weights.hpp"

namespace gr33 {

using Json = nlohmann::ordered_json;

Json decomposition_json(const Decomposition& d);

// When lift annotations are supplied (one {verdict, reason} pair per arrow,
// in arrow order) they are embedded on the arrows; otherwise omitted.
Json pattern_json(const Pattern& p,
                  const std::vector<std::pair<std::string, std::string>>& lift = {});

Json certificate_json(const TranslationCertificate& c);

Json report_json(const ReplayReport& r);

}  // namespace gr33
