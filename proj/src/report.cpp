#include "dioph/report.hpp"

namespace dioph {

Json CheckRecord::to_json() const {
  Json j = Json::object();
  j["check"] = name;
  j["holds"] = holds;
  for (auto it = data.begin(); it != data.end(); ++it) j[it.key()] = it.value();
  return j;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) { return z.get_str(); }

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

Json to_json(const DyadicBall& b) {
  return Json{{"c_man", integer_json(b.mid().mantissa())},
              {"c_exp", b.mid().exponent()},
              {"r_man", integer_json(b.rad().mantissa())},
              {"r_exp", b.rad().exponent()}};
}

Json to_json(const RatPoly& p) {
  Json a = Json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(to_string(p[i]));
  return a;
}

Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

}  // namespace dioph
