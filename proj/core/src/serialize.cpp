#include "faulhaber/serialize.hpp"

namespace faulhaber {

void to_json(nlohmann::json& j, const Rational& r) { j = r.str(); }

void from_json(const nlohmann::json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

void to_json(nlohmann::json& j, const Poly& p) { j = p.coeffs(); }

void from_json(const nlohmann::json& j, Poly& p) { p = Poly(j.get<std::vector<Rational>>()); }

void to_json(nlohmann::json& j, const LaurentPoly& p) {
  j = nlohmann::json{{"min_exp", p.min_exp()}, {"coeffs", p.coeffs()}};
}

void from_json(const nlohmann::json& j, LaurentPoly& p) {
  p = LaurentPoly(j.at("min_exp").get<long>(), j.at("coeffs").get<std::vector<Rational>>());
}

void to_json(nlohmann::json& j, const TruncatedSeries& s) {
  j = nlohmann::json{{"order", s.order()}, {"coeffs", s.coeffs()}};
}

void from_json(const nlohmann::json& j, TruncatedSeries& s) {
  s = TruncatedSeries(j.at("order").get<std::size_t>(), j.at("coeffs").get<std::vector<Rational>>());
}

void to_json(nlohmann::json& j, const FaulhaberPoly& f) {
  j = nlohmann::json{{"n", f.n}, {"coeffs", f.coeffs}};
}

void from_json(const nlohmann::json& j, FaulhaberPoly& f) {
  f.n = j.at("n").get<long>();
  f.coeffs = j.at("coeffs").get<std::vector<Rational>>();
}

}  // namespace faulhaber
