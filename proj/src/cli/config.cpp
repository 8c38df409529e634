#include "dioph/cli/config.hpp"

#include "dioph/error.hpp"

namespace dioph::cli {

Json ExperimentConfig::to_json() const {
  Json p = Json::object();
  for (const auto& [k, v] : params) p[k] = v;
  return Json{{"command", command}, {"params", p},          {"output", output}, {"format", format},
              {"precision_cap", precision_cap}, {"jobs", jobs}, {"seed", std::to_string(seed)}};
}

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
  try {
    ExperimentConfig c;
    c.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) c.params[k] = v.get<std::string>();
    c.output = j.at("output").get<std::string>();
    c.format = j.at("format").get<std::string>();
    c.precision_cap = j.at("precision_cap").get<long>();
    c.jobs = j.at("jobs").get<unsigned>();
    c.seed = std::stoull(j.at("seed").get<std::string>());
    if (c.format != "json" && c.format != "tsv") fail(ErrorCode::InvalidArgument, "format must be json or tsv");
    return c;
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("malformed config: ") + e.what());
  } catch (const std::logic_error& e) {
    fail(ErrorCode::InvalidArgument, std::string("malformed seed: ") + e.what());
  }
}

const std::string& ExperimentConfig::get(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) fail(ErrorCode::InvalidArgument, command + " requires --" + key);
  return it->second;
}

}  // namespace dioph::cli
