// Copyright 2026 The qgroup-frt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgf/runner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <regex>
#include <sstream>

#include "qgf/cartan.hpp"
#include "qgf/dcross.hpp"
#include "qgf/grouplike.hpp"
#include "qgf/uq.hpp"
#include "qgf/ybr.hpp"

namespace qgf {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& key, const std::string& why) {
  throw Error(ErrorCode::ValidationError, "key \"" + key + "\": " + why);
}

std::string value_str(const ParamValue& v) {
  if (v.zero) return "0";
  if (!v.is_formal()) return std::to_string(v.zeta_exp);
  std::string s = v.zeta_exp != 0 ? "z^" + std::to_string(v.zeta_exp) + " " : "";
  return s + (v.t_exp == 1 ? "t" : "t^" + std::to_string(v.t_exp));
}

int int_field(const json& j, const std::string& key) {
  if (!j.contains(key)) invalid(key, "required");
  const json& v = j.at(key);
  if (!v.is_number_integer()) invalid(key, "expected an integer");
  return v.get<int>();
}

json word_json(const TWord& w) {
  json a = json::array();
  for (const auto& l : w) a.push_back({l.row, l.col});
  return a;
}

json str_matrix(const std::vector<std::vector<Scalar>>& m) {
  json a = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.str());
    a.push_back(r);
  }
  return a;
}

json identity_json(const IdentityResult& r) {
  json j = {{"pass", r.holds}};
  if (r.witness) {
    j["witness"] = word_json(*r.witness);
    j["lhs"] = r.lhs_value;
    j["rhs"] = r.rhs_value;
  }
  return j;
}

class Section {
 public:
  void check(const std::string& name, bool pass, json detail = json::object()) {
    detail["name"] = name;
    detail["pass"] = pass;
    checks_.push_back(std::move(detail));
    ok_ = ok_ && pass;
  }
  json& data() { return data_; }
  void not_applicable(const std::string& why) {
    na_ = true;
    data_["reason"] = why;
  }
  json finish(double ms) const {
    json j = {{"status", na_ ? "not-applicable" : (ok_ ? "pass" : "fail")},
              {"checks", checks_},
              {"data", data_},
              {"timing_ms", ms}};
    return j;
  }
  void fail_with(const std::string& what) {
    ok_ = false;
    na_ = false;
    data_["error"] = what;
  }

 private:
  json checks_ = json::array();
  json data_ = json::object();
  bool ok_ = true;
  bool na_ = false;
};

void params_section(const ParamSet& ps, Section& sec) {
  sec.data()["kappa"] = str_matrix(kappa(ps));
  sec.data()["formal"] = ps.formal();
  const bool fin = is_finite_dimensional(ps);
  sec.data()["finite_dimensional"] = fin;
  sec.check("finite-dimensional iff no formal parameter", fin == !ps.formal());
  json pl = json::array();
  for (const auto& v : det_values(ps)) pl.push_back(scalar_json(v));
  sec.data()["P"] = pl;
  sec.check("P_l from kappa rows equals P_l from p", det_values(ps) == det_values_from_p(ps));
  sec.data()["det_central"] = det_is_central(ps);
  if (!ps.formal()) {
    json orders = {{"r", mult_order(ps.r).str()}};
    for (const auto& [ij, v] : ps.p)
      orders[std::to_string(ij.first) + "," + std::to_string(ij.second)] = mult_order(v).str();
    sec.data()["orders"] = orders;
  }
}

void ybe_section(const RunConfig& cfg, const ParamSet& ps, Section& sec) {
  RMatrix R = build_R(ps);
  if (cfg.corrupt_r) {
    Scalar& x = R.entry(1, 2, 1, 2);
    x = x + Scalar::one(ps.field);
    sec.data()["corrupted_entry"] = {1, 2, 1, 2};
  }
  const YbeResult y = check_ybe(R);
  json d = json::object();
  if (y.witness) d = {{"witness", {y.witness->first, y.witness->second}}, {"lhs", y.lhs_value}, {"rhs", y.rhs_value}};
  sec.check("Yang-Baxter equation", y.holds, d);
  sec.data()["max_column_nonzeros"] = max_column_nonzeros(R);
  sec.data()["hecke"] = hecke_probe(R, ps.r);
  try {
    invert_R(R);
    sec.data()["invertible"] = true;
  } catch (const Error&) {
    sec.data()["invertible"] = false;
  }
  if (cfg.dump_r) {
    json rows = json::array();
    for (std::size_t a = 0; a < R.m.rows(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < R.m.cols(); ++b) row.push_back(R.m(a, b).str());
      rows.push_back(row);
    }
    sec.data()["R"] = rows;
  }
}

void relations_section(const ParamSet& ps, int D, Section& sec) {
  sec.data()["convention"] = convention_name(kShippedConvention);
  const auto relators = rtt_relators(ps);
  sec.data()["relator_count"] = relators.size();
  sec.check("relators span a coideal", relators_form_coideal(ps, relators));
  for (const auto& c : hopf_relations(ps, D, RelationForm::Derived)) {
    json d = identity_json(c.result);
    d["i"] = c.i;
    d["j"] = c.j;
    sec.check(c.relation, c.result.holds, d);
  }
  json stated = json::array();
  for (const auto& c : hopf_relations(ps, D, RelationForm::Stated)) {
    if (c.result.holds) continue;
    json d = identity_json(c.result);
    d["relation"] = c.relation;
    d["i"] = c.i;
    d["j"] = c.j;
    stated.push_back(d);
  }
  sec.data()["stated_form_failures"] = stated;
  for (const auto& [name, u] : all_generators(ps)) {
    const AnnihilationResult a = annihilates_relators(u, relators, D);
    json d = {{"generator", name}};
    if (!a.holds) {
      d["relator"] = a.relator_index;
      d["prefix"] = word_json(*a.witness_prefix);
      d["suffix"] = word_json(*a.witness_suffix);
    }
    sec.check("annihilates relators", a.holds, d);
  }
  if (!ps.formal()) {
    json nil = json::array();
    for (int i = 1; i < ps.n; ++i) {
      const auto k = nilpotency_probe(ps, i, D, D);
      nil.push_back(k ? json(*k) : json(nullptr));
    }
    sec.data()["nilpotency_probe"] = nil;
  }
}

void cartan_section(const ParamSet& ps, Section& sec) {
  const BraidMatrix bm = braid_matrix(ps);
  sec.data()["braid"] = str_matrix(bm);
  sec.check("kappa formula matches case table", bm == braid_matrix_cases(ps));
  const auto s = symmetrized(bm);
  sec.data()["symmetrized"] = str_matrix(s);
  const Scalar one = Scalar::one(ps.field);
  bool pattern = true;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      const std::size_t d = i > j ? i - j : j - i;
      const Scalar want = d == 0 ? ps.r.pow(-2) : (d == 1 ? ps.r : one);
      pattern = pattern && s[i][j] == want;
    }
  sec.check("symmetrized pattern", pattern);
  const CartanResult c = detect_type_A(s, ps.r.inverse());
  sec.data()["type"] = c.type;
  sec.data()["cartan_matrix"] = c.a;
  json d = json::object();
  if (c.witness) d["witness"] = {c.witness->first + 1, c.witness->second + 1};
  sec.check("type A_{n-1} with q = r^-1", c.is_cartan && c.type == "A_" + std::to_string(ps.n - 1), d);
}

void group_section(const ParamSet& ps, int D, Section& sec) {
  if (ps.formal()) {
    sec.not_applicable("formal parameters");
    return;
  }
  const long m = ps.m;
  std::vector<CharVector> K, L, Kbar;
  json direct = json::array(), formula = json::array();
  bool orders_ok = true;
  for (int i = 1; i <= ps.n; ++i) {
    K.push_back(char_vec_K(ps, i));
    L.push_back(char_vec_L(ps, i));
    const long a = element_order(K.back(), m), b = order_formula_K(ps, i);
    direct.push_back(a);
    formula.push_back(b);
    orders_ok = orders_ok && a == b;
  }
  for (int i = 1; i < ps.n; ++i) Kbar.push_back(char_vec_Kbar(ps, i));
  sec.data()["K_orders"] = direct;
  sec.data()["K_orders_formula"] = formula;
  sec.check("order of K_i equals lcm formula", orders_ok);
  auto inv = [&](const std::vector<CharVector>& g) {
    const GroupInvariants x = subgroup_invariants(g, m);
    return json{{"factors", x.factors}, {"order", x.order}};
  };
  std::vector<CharVector> KL = K;
  KL.insert(KL.end(), L.begin(), L.end());
  sec.data()["K_group"] = inv(K);
  sec.data()["KL_group"] = inv(KL);
  sec.data()["Kbar_group"] = inv(Kbar);
  const CharVector sigma = char_vec_sigma(ps);
  sec.data()["sigma"] = sigma;
  sec.data()["sigma_order"] = element_order(sigma, m);

  if (ps.n == 3) {
    const auto dg = check_dependent_generators(ps);
    sec.data()["dependent_generators"] = {
        {"K3 = K1^-2 K2^3", dg.k3_relation}, {"Kbar1^2 = Kbar2", dg.kbar_relation}, {"det_central", dg.det_central}};
  }
  const CoprimeOrderReport co = check_coprime_orders(ps);
  json cj = {{"applicable", co.applicable}};
  if (co.applicable) {
    cj["direct"] = co.direct;
    cj["claimed"] = co.claimed;
    cj["match"] = co.match;
    cj["claimed_distinct"] = co.claimed_distinct;
  }
  sec.data()["coprime_orders"] = cj;

  const SigmaSplitReport sp = check_sigma_split(ps);
  json sj = {{"applicable", sp.applicable}};
  if (sp.applicable) {
    sj["orders_equal"] = sp.orders_equal;
    sj["common_order"] = sp.common_order;
    sj["split_checked"] = sp.split_checked;
    sj["split_holds"] = sp.split_holds;
    sj["order_G"] = sp.order_G;
    sj["order_sigma"] = sp.order_sigma;
    sj["order_SLG"] = sp.order_SLG;
    sec.check("sigma splits off the group-likes", sp.ok(), sj);
  }
  sec.data()["sigma_split"] = sj;

  const CentralityReport cr = sigma_centrality_check(ps, D);
  json cd = {{"det_central", cr.det_central}, {"commutes", cr.commutes}};
  if (!cr.commutes) {
    cd["witness_generator"] = cr.witness_generator;
    if (cr.witness_word) cd["witness_word"] = word_json(*cr.witness_word);
  }
  sec.data()["sigma_centrality"] = cd;
  sec.check("central determinant makes sigma central", !cr.det_central || cr.commutes, cd);
}

TWord random_word(std::mt19937_64& rng, int n, int D) {
  const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(D + 1));
  TWord w;
  for (int t = 0; t < len; ++t)
    w.push_back({static_cast<int>(rng() % n) + 1, static_cast<int>(rng() % n) + 1});
  return w;
}

void pairing_section(const ParamSet& ps, int D, std::uint64_t seed, Section& sec) {
  const PairingTable t = pairing_table(ps);
  sec.data()["LK"] = str_matrix(t.LK);
  sec.data()["SFE"] = str_matrix(t.SFE);
  sec.data()["EF"] = str_matrix(t.EF);
  sec.data()["FJS"] = str_matrix(t.FJS);
  const auto fails = pairing_closed_form_failures(ps, t);
  sec.check("closed forms", fails.empty(), {{"failing", fails}});
  for (const auto& e : verify_efd(ps)) {
    json d = {{"i", e.i}, {"j", e.j}};
    if (!e.holds) {
      json l = json::object(), r = json::object();
      for (const auto& [k, v] : e.lhs) l[k] = v.str();
      for (const auto& [k, v] : e.rhs) r[k] = v.str();
      d["lhs"] = l;
      d["rhs"] = r;
    }
    sec.check("efd", e.holds, d);
  }
  sec.check("efd and eft scalars reconcile", efd_eft_reconciliation(ps, D));
  for (const auto& c : verify_cross_exchange(ps, D)) {
    json d = identity_json(c.result);
    d["i"] = c.i;
    d["j"] = c.j;
    sec.check(c.relation, c.result.holds, d);
  }
  std::mt19937_64 rng(seed);
  bool agree = true;
  json witness = json::object();
  const int samples = 16;
  for (int k = 0; k < samples && agree; ++k) {
    const TWord a = random_word(rng, ps.n, D), b = random_word(rng, ps.n, D);
    const Scalar v = braid_pairing(ps, a, b);
    if (lambda_plus(ps, a)(b) != v || rho_plus(ps, b)(a) != v) {
      agree = false;
      witness = {{"a", word_json(a)}, {"b", word_json(b)}, {"pairing", v.str()}};
    }
  }
  sec.data()["sampled_pairs"] = samples;
  sec.check("lambda+ and rho+ agree with the pairing", agree, witness);
}

json config_json(const RunConfig& cfg) {
  json p = json::object();
  for (const auto& [ij, v] : cfg.p) p[std::to_string(ij.first) + "," + std::to_string(ij.second)] = value_str(v);
  return {{"n", cfg.n},
          {"m", cfg.m},
          {"r", value_str(cfg.r)},
          {"p", p},
          {"max_degree", cfg.max_degree},
          {"seed", cfg.seed},
          {"corrupt_r", cfg.corrupt_r}};
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"ybe", "relations", "cartan", "group", "pairing"};
  return names;
}

std::set<std::string> parse_checks(const std::string& csv) {
  std::set<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    if (item == "all") {
      out.insert(check_names().begin(), check_names().end());
      continue;
    }
    if (std::find(check_names().begin(), check_names().end(), item) == check_names().end())
      invalid("checks", "unknown check " + item);
    out.insert(item);
  }
  return out;
}

ParamValue parse_param_value(const json& v, const std::string& key) {
  if (v.is_number_integer()) return ParamValue::root(v.get<long>());
  if (!v.is_string()) invalid(key, "expected an integer exponent or a string like \"t^k\"");
  const std::string s = v.get<std::string>();
  if (s == "0") return ParamValue::zero_value();
  static const std::regex re(R"(^\s*(?:z\^(-?\d+))?\s*\*?\s*(?:t(?:\^(-?\d+))?)?\s*$)");
  std::smatch mt;
  if (!std::regex_match(s, mt, re) || s.find_first_not_of(" ") == std::string::npos)
    invalid(key, "cannot read \"" + s + "\"");
  const long a = mt[1].matched ? std::stol(mt[1].str()) : 0;
  const bool has_t = s.find('t') != std::string::npos;
  const long k = mt[2].matched ? std::stol(mt[2].str()) : (has_t ? 1 : 0);
  if (has_t && k == 0) invalid(key, "t^0 is not formal; give a z exponent instead");
  return has_t ? ParamValue::formal(a, k) : ParamValue::root(a);
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
  static const std::set<std::string> known = {"n", "m", "r", "p", "checks", "max_degree", "seed", "dump_r"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) invalid(k, "unknown key");

  RunConfig cfg;
  if (!j.contains("r")) invalid("r", "required");
  cfg.r = parse_param_value(j.at("r"), "r");
  if (!cfg.r.zero && !cfg.r.is_formal() && cfg.r.zeta_exp == 0) invalid("r", "REqualsOne: r = z^0 = 1");
  cfg.n = int_field(j, "n");
  cfg.m = int_field(j, "m");
  if (cfg.n < 2) invalid("n", "must be at least 2");
  if (cfg.m < 2) invalid("m", "must be at least 2");
  if (!j.contains("p")) invalid("p", "required");
  const json& p = j.at("p");
  if (!p.is_object()) invalid("p", "expected an object keyed by \"i,j\"");
  static const std::regex pair_re(R"(^\s*(\d+)\s*,\s*(\d+)\s*$)");
  for (const auto& [k, v] : p.items()) {
    std::smatch mt;
    if (!std::regex_match(k, mt, pair_re)) invalid(k, "not of the form \"i,j\"");
    const int a = std::stoi(mt[1].str()), b = std::stoi(mt[2].str());
    if (a < 1 || b > cfg.n || a >= b) invalid(k, "need 1 <= i < j <= n");
    cfg.p[{a, b}] = parse_param_value(v, k);
  }
  for (int a = 1; a <= cfg.n; ++a)
    for (int b = a + 1; b <= cfg.n; ++b)
      if (!cfg.p.count({a, b})) invalid(std::to_string(a) + "," + std::to_string(b), "MissingParameter");
  if (j.contains("checks")) {
    const json& c = j.at("checks");
    std::string csv;
    if (c.is_string()) {
      csv = c.get<std::string>();
    } else if (c.is_array()) {
      for (const auto& x : c) {
        if (!x.is_string()) invalid("checks", "entries must be strings");
        csv += x.get<std::string>() + ",";
      }
    } else {
      invalid("checks", "expected a string or a list");
    }
    cfg.checks = parse_checks(csv);
  }
  if (j.contains("max_degree")) {
    cfg.max_degree = int_field(j, "max_degree");
    if (cfg.max_degree < 1) invalid("max_degree", "must be positive");
  }
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) invalid("seed", "expected a nonnegative integer");
    cfg.seed = j.at("seed").get<std::uint64_t>();
  }
  if (j.contains("dump_r")) {
    if (!j.at("dump_r").is_boolean()) invalid("dump_r", "expected a boolean");
    cfg.dump_r = j.at("dump_r").get<bool>();
  }
  try {
    build_params(cfg.n, cfg.r, cfg.p, cfg.m);
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, std::string(error_code_name(e.code())) + ": " + e.what());
  }
  return cfg;
}

json scalar_json(const Scalar& s) {
  auto cyclo = [](const Cyclo& c) {
    json a = json::array();
    for (const auto& q : c.coefficients()) a.push_back(q.get_str());
    return a;
  };
  json j = {{"m", s.field()->conductor()}, {"text", s.str()}};
  if (const Cyclo* c = s.as_cyclo()) {
    j["mode"] = "cyclo";
    j["coefficients"] = cyclo(*c);
  } else {
    const RatFunc* f = s.as_ratfunc();
    j["mode"] = "ratfunc";
    auto poly = [&](const TPoly& p) {
      json a = json::array();
      for (const auto& c : p.coefficients()) a.push_back(cyclo(c));
      return a;
    };
    j["numerator"] = poly(f->numerator());
    j["denominator"] = poly(f->denominator());
  }
  return j;
}

json strip_timing(json j) {
  if (j.is_object()) {
    j.erase("timing_ms");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

Report run(const RunConfig& cfg) {
  const std::set<std::string> checks =
      cfg.checks.empty() ? std::set<std::string>(check_names().begin(), check_names().end()) : cfg.checks;
  const int D = cfg.max_degree;
  Report rep;
  rep.json = {{"config", config_json(cfg)}, {"sections", json::object()}};
  json& sections = rep.json["sections"];
  std::ostringstream summary;
  bool all = true;

  std::optional<ParamSet> ps;
  auto run_section = [&](const std::string& name, const std::function<void(Section&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Section sec;
    try {
      body(sec);
    } catch (const Error& e) {
      sec.fail_with(std::string(error_code_name(e.code())) + ": " + e.what());
    } catch (const std::exception& e) {
      sec.fail_with(e.what());
    }
    const double ms = elapsed_ms(t0);
    json j = sec.finish(ms);
    const std::string status = j["status"];
    all = all && status != "fail";
    summary << name << ": " << status;
    if (status == "fail") {
      std::vector<std::string> bad;
      for (const auto& c : j["checks"])
        if (!c["pass"].get<bool>()) bad.push_back(c["name"]);
      bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
      if (j["data"].contains("error")) bad.push_back(j["data"]["error"]);
      summary << " (";
      for (std::size_t k = 0; k < bad.size(); ++k) summary << (k ? "; " : "") << bad[k];
      summary << ")";
    }
    summary << "\n";
    sections[name] = j;
  };

  run_section("params", [&](Section& sec) {
    ps = build_params(cfg.n, cfg.r, cfg.p, cfg.m);
    params_section(*ps, sec);
  });
  for (const auto& name : check_names()) {
    if (!checks.count(name)) continue;
    run_section(name, [&](Section& sec) {
      if (!ps) {
        sec.fail_with("parameters did not build");
        return;
      }
      if (name == "ybe") ybe_section(cfg, *ps, sec);
      if (name == "relations") relations_section(*ps, D, sec);
      if (name == "cartan") cartan_section(*ps, sec);
      if (name == "group") group_section(*ps, D, sec);
      if (name == "pairing") pairing_section(*ps, D, cfg.seed, sec);
    });
  }
  rep.passed = all;
  rep.json["passed"] = all;
  summary << "overall: " << (all ? "PASS" : "FAIL") << "\n";
  rep.summary = summary.str();
  return rep;
}

}  // namespace qgf
