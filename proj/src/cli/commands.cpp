#include "dioph/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "dioph/construct.hpp"
#include "dioph/convexbody.hpp"
#include "dioph/gelfond.hpp"
#include "dioph/hankel.hpp"
#include "dioph/heights.hpp"

namespace dioph::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::string strip(std::string s) {
  const char* ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  s.erase(s.find_last_not_of(ws) + 1);
  return s;
}

std::vector<Rational> rationals(const ExperimentConfig& c, const std::string& key) {
  std::vector<Rational> v;
  for (const auto& part : split(c.get(key), ',')) v.push_back(parse_rational(strip(part)));
  if (v.empty()) fail(ErrorCode::InvalidArgument, "--" + key + " is empty");
  return v;
}

long integer(const ExperimentConfig& c, const std::string& key, long lo, long hi) {
  Rational q = parse_rational(c.get(key));
  if (q.get_den() != 1 || q < lo || q > hi)
    fail(ErrorCode::InvalidArgument, "--" + key + " must be an integer in [" + std::to_string(lo) + ", " +
                                         std::to_string(hi) + "]");
  return q.get_num().get_si();
}

RealNumber real(const ExperimentConfig& c, const std::string& key) { return RealNumber::parse(c.get(key)); }

RatPoly poly(const ExperimentConfig& c, const std::string& key) { return parse_poly(c.get(key)); }

void require(const CheckRecord& r) {
  if (!r.holds) fail(ErrorCode::HardAssertion, r.name + " failed");
}

Json cmd_heights(const ExperimentConfig& c) {
  int given = c.has("vector") + c.has("poly") + c.has("basis");
  if (given != 1) fail(ErrorCode::InvalidArgument, "heights needs exactly one of --vector, --poly, --basis");
  if (c.has("vector")) return height_vector(rationals(c, "vector")).to_json();
  if (c.has("poly")) return height_poly(poly(c, "poly")).to_json();
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : split(c.get("basis"), ';')) {
    std::vector<Rational> row;
    for (const auto& x : split(r, ',')) row.push_back(parse_rational(strip(x)));
    if (!rows.empty() && row.size() != rows[0].size()) fail(ErrorCode::InvalidArgument, "--basis rows differ in length");
    rows.push_back(row);
  }
  RatMatrix b = RatMatrix::from_rows(rows);
  SubspaceRep rep{b.cols(), b, orthogonal_complement(b)};
  try {
    return Json{{"dimension", rank(b)}, {"height", height_subspace(rep).to_json()}};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InconsistentRep) fail(ErrorCode::HardAssertion, "basis and kernel heights differ");
    throw;
  }
}

BodySpec body_from(const ExperimentConfig& c) {
  BodySpec b{static_cast<int>(integer(c, "n", 0, kMinimaDimensionCap)), real(c, "xi"), rationals(c, "X")};
  b.validate();
  return b;
}

Json cmd_minima(const ExperimentConfig& c) {
  BodySpec b = body_from(c);
  MinimaResult r = successive_minima(b);
  Json j = r.to_json();
  j["volume"] = to_json(volume(b));
  if (r.exhaustive) {
    CheckRecord m = minkowski_product_check(r, b);
    require(m);
    j["minkowski"] = m.to_json();
  }
  return j;
}

Json cmd_duality(const ExperimentConfig& c) {
  CheckRecord r = duality_products(body_from(c));
  require(r);
  return r.to_json();
}

Json cmd_hankel(const ExperimentConfig& c) {
  int n = static_cast<int>(integer(c, "n", 1, 12));
  HankelState s = build_state(poly(c, "Q"), real(c, "xi"), n);
  Json j{{"state", s.to_json()}};
  Json ks = Json::array();
  for (int ell = 0; ell <= n; ++ell) {
    KernelSpace v = kernel_V(s, ell);
    Json b = Json::array();
    for (const auto& p : v.basis) b.push_back(to_json(p));
    ks.push_back(Json{{"ell", ell}, {"rank_M", v.rank}, {"dim", v.basis.size()},
                      {"height", v.height ? to_json(*v.height) : Json(nullptr)}, {"basis", b}});
  }
  j["kernels"] = ks;
  if (c.has("k") || c.has("t") || c.has("X")) {
    BodySpec body{n, s.xi, rationals(c, "X")};
    DivisorReport d = construct_divisor(body, s.Q, static_cast<int>(integer(c, "k", 1, n)),
                                        static_cast<int>(integer(c, "t", 1, n)));
    j["divisor"] = d.to_json();
  }
  return j;
}

Json cmd_gelfond(const ExperimentConfig& c) {
  std::ifstream in(c.get("file"));
  if (!in) fail(ErrorCode::InvalidArgument, "--file cannot be read: " + c.get("file"));
  std::vector<RatPoly> ps;
  for (std::string line; std::getline(in, line);) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    RatPoly p = parse_poly(line);
    if (!p.has_integer_coeffs()) fail(ErrorCode::InvalidArgument, "--file lines must hold integer coefficients");
    if (p.is_zero()) fail(ErrorCode::InvalidArgument, "--file contains the zero polynomial");
    ps.push_back(p);
  }
  if (ps.empty()) fail(ErrorCode::InvalidArgument, "--file holds no polynomials");
  RealNumber xi = real(c, "xi");
  int n = 1;
  for (const auto& p : ps) n = std::max(n, p.degree());
  if (c.has("n")) n = static_cast<int>(integer(c, "n", n, 16));

  Json pairs = Json::array();
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    Json e{{"index", i}};
    if (gcd(ps[i], ps[i + 1]).degree() > 0) {
      e["coprime"] = false;
    } else {
      e["coprime"] = true;
      e["check"] = resultant_gap_check(ps[i], ps[i + 1], xi, n).to_json();
    }
    pairs.push_back(e);
  }
  FactorChainState st;
  st.xi = xi;
  st.n = n;
  Rational X = 1;
  for (const auto& p : ps) {
    X = std::max(X, height_poly(p).value);
    st = factor_chain_step(st, X, p);
  }
  return Json{{"n", n}, {"pairs", pairs}, {"chain", st.to_json()}};
}

Json cmd_module_gen(const ExperimentConfig& c) {
  long kmax = integer(c, "kmax", 1, 7), lmax = integer(c, "lmax", 0, 6);
  if (kmax + lmax > 7) fail(ErrorCode::InvalidArgument, "--kmax + --lmax must not exceed 7");
  Json rows = Json::array();
  bool all = true;
  for (int k = 1; k <= kmax; ++k)
    for (int ell = 0; ell <= lmax; ++ell) {
      MinorModule m = minor_module(k, ell);
      all = all && m.generated;
      rows.push_back(Json{{"k", k}, {"ell", ell}, {"generated", m.generated}, {"constant", to_json(m.constant)}});
    }
  if (!all) fail(ErrorCode::HardAssertion, "minor module not generated");
  return Json{{"results", rows}, {"all", all}};
}

Json cmd_approximate(const ExperimentConfig& c, std::string* tsv) {
  int n = static_cast<int>(integer(c, "n", 1, 5)), t = static_cast<int>(integer(c, "t", 1, 5));
  Rational cc = c.has("c") ? parse_rational(c.get("c")) : Rational(1);
  auto recs = theorem_A_experiment(real(c, "xi"), n, t, rationals(c, "schedule"), cc);
  Json rs = Json::array();
  bool ok = true;
  for (const auto& r : recs) {
    rs.push_back(r.to_json());
    ok = ok && r.root_within_delta && r.height_bound;
  }
  if (!ok) fail(ErrorCode::HardAssertion, "lift invariants failed");
  Json summary{{"n", n},
               {"t", t},
               {"c", to_json(cc)},
               {"records", recs.size()},
               {"last_exponent", recs.empty() ? Json(nullptr)
                                              : Json{to_json(recs.back().exponent_lo), to_json(recs.back().exponent_hi)}}};
  if (tsv) {
    *tsv = "# X\tH_alpha\tC\tY\tdelta\tdist_lo\tdist_hi\texponent_lo\texponent_hi\troot_within_delta\theight_bound\tmin_poly\n";
    for (const auto& r : recs) *tsv += r.to_tsv() + "\n";
    *tsv += "# summary " + summary.dump() + "\n";
  }
  return Json{{"records", rs}, {"summary", summary}};
}

Json cmd_prop101(const ExperimentConfig& c) {
  return prop_10_1_check(poly(c, "P"), real(c, "xi"), static_cast<int>(integer(c, "t", 2, 8))).to_json();
}

Json cmd_liouville(const ExperimentConfig& c) {
  int n = static_cast<int>(integer(c, "n", 1, 3)), t = static_cast<int>(integer(c, "t", 1, 4));
  int hmax = static_cast<int>(integer(c, "hmax", 1, 50));
  std::vector<int> grid;
  if (c.has("grid")) {
    for (const Rational& h : rationals(c, "grid")) {
      if (h.get_den() != 1 || h < 1 || h > hmax) fail(ErrorCode::InvalidArgument, "--grid entries must lie in [1, hmax]");
      grid.push_back(static_cast<int>(h.get_num().get_si()));
    }
  } else {
    for (int h = 10; h < hmax; h += 10) grid.push_back(h);
    grid.push_back(hmax);
  }
  Rational kappa = parse_rational(c.get("kappa"));
  if (!kappa_hypothesis(kappa, t)) fail(ErrorCode::InvalidArgument, "--kappa violates (kappa t)^t > (t+1)^(t+1)");
  return prop_10_2_adversarial(n, t, kappa, grid).to_json();
}

void flatten(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
  } else {
    out += path + "\t" + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"heights",         "minima",           "duality",
                                              "hankel-run",      "gelfond-check",    "module-gen-check",
                                              "approximate",     "prop101",          "liouville"};
  return names;
}

std::string run(const ExperimentConfig& c) {
  if (c.format != "json" && c.format != "tsv") fail(ErrorCode::InvalidArgument, "--format must be json or tsv");
  if (c.jobs < 1) fail(ErrorCode::InvalidArgument, "--jobs must be at least 1");
  std::string tsv;
  bool want_tsv = c.format == "tsv";
  Json result;
  const std::string& cmd = c.command;
  if (cmd == "heights") result = cmd_heights(c);
  else if (cmd == "minima") result = cmd_minima(c);
  else if (cmd == "duality") result = cmd_duality(c);
  else if (cmd == "hankel-run") result = cmd_hankel(c);
  else if (cmd == "gelfond-check") result = cmd_gelfond(c);
  else if (cmd == "module-gen-check") result = cmd_module_gen(c);
  else if (cmd == "approximate") result = cmd_approximate(c, want_tsv ? &tsv : nullptr);
  else if (cmd == "prop101") result = cmd_prop101(c);
  else if (cmd == "liouville") result = cmd_liouville(c);
  else fail(ErrorCode::InvalidArgument, "unknown command " + cmd);

  if (!want_tsv) return Json{{"config", c.to_json()}, {"result", result}}.dump(2) + "\n";
  if (tsv.empty()) flatten(result, "", tsv);
  return tsv;
}

int exit_code_for(const Error& e) {
  return e.code() == ErrorCode::HardAssertion || e.code() == ErrorCode::CounterexampleFound ? 2 : 1;
}

}  // namespace dioph::cli
