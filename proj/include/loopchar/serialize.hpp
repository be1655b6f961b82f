#pragma once

#include <string>

#include <json.hpp>

#include "loopchar/charalg.hpp"
#include "loopchar/demazure.hpp"
#include "loopchar/weyl.hpp"

namespace loopchar {

using Json = nlohmann::ordered_json;

Json to_json(const Weight& w);
Json to_json(const LaurentPoly& p);
/// Serialized in reduced form.
Json to_json(const FactoredRational& r);
Json to_json(const WeylElement& v);
Json to_json(const CharacterTable& t);

Weight weight_from_json(const Json& j);
LaurentPoly poly_from_json(const Json& j);
FactoredRational rational_from_json(const Json& j);
WeylElement element_from_json(const Json& j);

/// "k,m,n" -> (l0, a1, d).
Weight parse_weight(const std::string& text);

/// Plain-text renderings for --format text.
std::string to_text(const Weight& w);
std::string to_text(const LaurentPoly& p);
std::string to_text(const FactoredRational& r);

}  // namespace loopchar
