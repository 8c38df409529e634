#pragma once

#include <json.hpp>
#include <string>

#include "dioph/exactnum/dyadic.hpp"
#include "dioph/exactnum/poly.hpp"
#include "dioph/exactnum/rational.hpp"

namespace dioph {

using Json = nlohmann::ordered_json;

/// Outcome of a certified inequality check with the quantities involved.
struct CheckRecord {
  std::string name;
  bool holds = true;
  Json data = Json::object();

  Json to_json() const;
};

Json to_json(const Rational& q);
Json to_json(const Integer& z);
/// {"c_man","c_exp","r_man","r_exp"}.
Json to_json(const DyadicBall& b);
/// Coefficient list, low degree first, as "num/den" strings.
Json to_json(const RatPoly& p);
Json to_json(const std::vector<Rational>& v);

}  // namespace dioph
