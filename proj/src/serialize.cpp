#include "loopchar/serialize.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace loopchar {

Json to_json(const Weight& w) { return Json{{"l0", w.l0}, {"a1", w.a1}, {"d", w.d}}; }

Json to_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& t : p.terms()) arr.push_back(Json{{"w", to_json(t.w)}, {"c", t.c.get_str()}});
  return arr;
}

Json to_json(const FactoredRational& r) {
  const FactoredRational red = r.reduced();
  Json den = Json::array();
  for (const auto& b : red.den()) den.push_back(to_json(b));
  return Json{{"num", to_json(red.num())}, {"den", den}};
}

Json to_json(const WeylElement& v) { return Json{{"eps", v.eps()}, {"t", v.t()}}; }

Json to_json(const CharacterTable& t) {
  return Json{{"word", t.word.str()}, {"level", t.level}, {"terms", to_json(t.character)}};
}

Weight weight_from_json(const Json& j) {
  return {j.at("l0").get<std::int64_t>(), j.at("a1").get<std::int64_t>(),
          j.at("d").get<std::int64_t>()};
}

LaurentPoly poly_from_json(const Json& j) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) terms.push_back({weight_from_json(t.at("w")), Integer(t.at("c").get<std::string>())});
  return LaurentPoly::from_terms(std::move(terms));
}

FactoredRational rational_from_json(const Json& j) {
  std::vector<Weight> den;
  for (const auto& b : j.at("den")) den.push_back(weight_from_json(b));
  return FactoredRational(poly_from_json(j.at("num")), den);
}

WeylElement element_from_json(const Json& j) {
  return WeylElement(j.at("eps").get<int>(), j.at("t").get<std::int64_t>());
}

Weight parse_weight(const std::string& text) {
  std::int64_t v[3];
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t end = k < 2 ? text.find(',', pos) : text.size();
    if (end == std::string::npos) throw std::invalid_argument("weight must be k,m,n: " + text);
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    auto [p, ec] = std::from_chars(first, last, v[k]);
    if (ec != std::errc() || p != last || first == last)
      throw std::invalid_argument("weight must be k,m,n: " + text);
    pos = end + 1;
  }
  return {v[0], v[1], v[2]};
}

std::string to_text(const Weight& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

std::string to_text(const LaurentPoly& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

std::string to_text(const FactoredRational& r) {
  std::ostringstream os;
  os << r.reduced();
  return os.str();
}

}  // namespace loopchar
