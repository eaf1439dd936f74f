#include "qshuffle/json_io.hpp"

#include "qshuffle/errors.hpp"

namespace qshuffle {

Json to_json(const Integer& x) {
  if (x.fits_int64()) return Json(x.small_value());
  return Json(x.to_string());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

Json to_json(const LaurentPoly& p) {
  Json a = Json::array();
  for (const auto& [e, c] : p.terms()) a.push_back(Json::array({e, to_json(c)}));
  return a;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected a term list, got " + j.dump());
  std::vector<std::pair<int, Integer>> terms;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) {
      throw Error(ErrorKind::ParseError, "bad term " + t.dump());
    }
    terms.emplace_back(t[0].get<int>(), integer_from_json(t[1]));
  }
  return LaurentPoly::from_terms(terms);
}

Json to_json(const ShuffleElement& x) {
  Json words = Json::array();
  for (const auto& [w, c] : x.sorted_terms()) words.push_back({{"w", word_letters(w)}, {"c", to_json(c)}});
  return {{"cartan_type", x.cartan_ptr() ? x.cartan().name() : std::string()}, {"words", words}};
}

ShuffleElement element_from_json(const Json& j, std::shared_ptr<const CartanDatum> cartan) {
  if (!j.is_object() || !j.contains("words")) throw Error(ErrorKind::ParseError, "element JSON needs 'words'");
  if (j.contains("cartan_type") && j["cartan_type"].get<std::string>() != cartan->name()) {
    throw Error(ErrorKind::ParseError, "element is over " + j["cartan_type"].get<std::string>());
  }
  ShuffleElement x(cartan);
  for (const Json& t : j["words"]) {
    x.add_term(make_word(t.at("w").get<std::vector<int>>()), laurent_from_json(t.at("c")));
  }
  return x;
}

Json to_json(const MVector& m) { return Json(m.values()); }

MVector mvector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an m-vector array");
  return MVector(j.get<std::vector<int>>());
}

Json to_json(const std::map<MVector, LaurentPoly>& expansion) {
  Json a = Json::array();
  for (const auto& [m, c] : expansion) a.push_back({{"m", to_json(m)}, {"c", to_json(c)}});
  return a;
}

std::map<MVector, LaurentPoly> expansion_from_json(const Json& j) {
  std::map<MVector, LaurentPoly> out;
  for (const Json& t : j) out.emplace(mvector_from_json(t.at("m")), laurent_from_json(t.at("c")));
  return out;
}

}  // namespace qshuffle
