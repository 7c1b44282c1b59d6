#pragma once

#include <json.hpp>

#include "faulhaber/faulhaber_poly.hpp"
#include "faulhaber/laurent.hpp"
#include "faulhaber/poly.hpp"
#include "faulhaber/rational.hpp"
#include "faulhaber/series.hpp"

namespace faulhaber {

// Rationals travel as "p/q" (or "p") strings; polynomials as ascending arrays.
void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

void to_json(nlohmann::json& j, const Poly& p);
void from_json(const nlohmann::json& j, Poly& p);

void to_json(nlohmann::json& j, const LaurentPoly& p);
void from_json(const nlohmann::json& j, LaurentPoly& p);

void to_json(nlohmann::json& j, const TruncatedSeries& s);
void from_json(const nlohmann::json& j, TruncatedSeries& s);

void to_json(nlohmann::json& j, const FaulhaberPoly& f);
void from_json(const nlohmann::json& j, FaulhaberPoly& f);

}  // namespace faulhaber
