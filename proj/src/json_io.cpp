#include "goeritz/json_io.hpp"

#include <nlohmann/json.hpp>

namespace goeritz {

using nlohmann::json;

json to_json(const Int& v) {
  // Keep exactness: values outside the int64 range become decimal strings.
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(v));
  return json(v.str());
}

json to_json(const Mat2& m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Mat4& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const SpElement& e) {
  return json{{"omega", e.omega}, {"k", to_json(e.k)},     {"ell", to_json(e.ell)},
              {"m", to_json(e.m)}, {"n", to_json(e.n)},     {"delta", e.delta},
              {"p", e.p}};
}

namespace {

Int int_from_json(const json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<long long>());
}

}  // namespace

SpElement sp_element_from_json(const json& j) {
  SpElement e;
  e.omega = j.at("omega").get<int>();
  e.k = int_from_json(j.at("k"));
  e.ell = int_from_json(j.at("ell"));
  e.m = int_from_json(j.at("m"));
  e.n = int_from_json(j.at("n"));
  e.delta = j.at("delta").get<int>();
  e.p = j.at("p").get<long>();
  if (e.omega != 1 && e.omega != -1) fail("SpElement json: omega must be +-1");
  if (e.delta != 1 && e.delta != -1) fail("SpElement json: delta must be +-1");
  if (e.p < 2) fail("SpElement json: p must be >= 2");
  return e;
}

json to_json(const ObstructionReport& r) {
  json conds = json::array();
  for (const ConditionRow& row : r.conditions) {
    json c{{"omega", row.omega},
           {"delta", row.Delta},
           {"mod_p", row.cond1_mod_p},
           {"gcd", row.cond2_gcd}};
    c["divisibility"] =
        row.cond3_divisibility ? json(*row.cond3_divisibility) : json("n/a");
    c["inequality"] =
        row.cond4_inequality ? json(*row.cond4_inequality) : json("n/a");
    c["all"] = row.all_pass();
    conds.push_back(c);
  }
  json out{{"p", r.p},
           {"v", r.v.to_text()},
           {"v_prime", r.v_prime.to_text()},
           {"conditions", conds},
           {"verdict", verdict_name(r.verdict)},
           {"solver_exhaustive", r.solver_exhaustive}};
  if (r.families) {
    json fams = json::array();
    for (int f : *r.families) fams.push_back(f);
    out["families"] = fams;
  } else {
    out["families"] = "inconclusive";
  }
  if (r.certificate) {
    out["certificate"] = json{{"element", to_json(r.certificate->first)},
                              {"word", r.certificate->second.to_text()}};
  } else {
    out["certificate"] = nullptr;
  }
  return out;
}

json to_json(const VerificationReport& r) {
  return json{{"claim", r.claim},
              {"pass", r.pass},
              {"counterexample", r.counterexample},
              {"words", r.words_visited},
              {"elements", r.elements_visited}};
}

}  // namespace goeritz
