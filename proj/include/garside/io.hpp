#pragma once

// JSON encodings shared by the modules and the command-line tool.

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "absorbable.hpp"
#include "growth.hpp"

namespace garside {

using Json = nlohmann::ordered_json;

inline Json atom_set_json(AtomSet x) { return Json(x.atoms()); }

inline AtomSet atom_set_from_json(const Json& j) {
  if (!j.is_array()) throw Error("bad_json", "atom set must be an array");
  return AtomSet::of(j.get<std::vector<int>>());
}

/// {"inf": k, "factors": [[spelling], ...]}
inline Json to_json(const Garside& g, const GroupElement& x) {
  Json factors = Json::array();
  for (const auto& s : x.factors) factors.push_back(g.spell(s));
  return Json{{"inf", x.inf}, {"factors", factors}};
}

/// Inverse of to_json; rejects anything that is not a left normal form.
inline GroupElement element_from_json(const Garside& g, const Json& j) {
  if (!j.is_object() || !j.contains("inf") || !j.contains("factors") || !j["inf"].is_number_integer() ||
      !j["factors"].is_array())
    throw Error("bad_json", "group element must be {\"inf\": k, \"factors\": [...]}");
  GroupElement x = g.identity();
  x.inf = j["inf"].get<int>();
  for (const auto& f : j["factors"]) {
    const auto word = f.get<std::vector<int>>();
    for (int a : word) g.check_atom(a);
    const Simple s = g.system().from_word(word);
    if (s.length() != static_cast<int>(word.size()) || !g.is_proper(s) || !g.is_simple(s))
      throw Error("bad_json", "factor is not a proper simple spelled by a reduced word");
    if (!x.factors.empty() && !g.is_left_weighted(x.factors.back(), s))
      throw Error("bad_json", "factors are not left-weighted");
    x.factors.push_back(s);
  }
  return x;
}

inline Json to_json(const Garside& g, const AbsorptionCertificate& c) {
  return Json{{"absorbed", to_json(g, c.absorbed)},
              {"absorber", to_json(g, c.absorber)},
              {"inf_x", c.inf_x},
              {"sup_x", c.sup_x},
              {"inf_xy", c.inf_xy},
              {"sup_xy", c.sup_xy}};
}

inline Json to_json(const Garside& g, const AbsorbableDecomposition& d) {
  Json factors = Json::array(), absorbers = Json::array();
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    factors.push_back(to_json(g, d.factors[i]));
    absorbers.push_back(to_json(g, d.certificates[i].absorber));
  }
  return Json{{"target", to_json(g, d.target)},
              {"factors", factors},
              {"absorbers", absorbers},
              {"budget", d.budget},
              {"verified", check_decomposition(g, d)}};
}

inline Json to_json(const Garside& g, const RibbonFactor& r) {
  return Json{{"source", atom_set_json(r.source)},
              {"atom", r.atom},
              {"side", r.side == Side::left ? "left" : "right"},
              {"target", atom_set_json(r.target)},
              {"value", to_json(g, r.value)}};
}

inline std::string big_to_string(const BigInt& v) { return v.str(); }

inline const char* growth_mode_name(GrowthMode m) { return m == GrowthMode::monoid ? "monoid" : "group"; }

/// Counts are decimal strings; they outgrow every JSON number type.
inline Json to_json(const GrowthReport& r) {
  Json rows = Json::array();
  const auto& seq = r.mode == GrowthMode::monoid ? r.beta_plus : r.beta;
  for (int n = 0; n <= r.horizon; ++n) {
    Json row{{"n", n}, {"beta_plus", big_to_string(r.beta_plus[n])}, {"beta", big_to_string(r.beta[n])}};
    row["ratio"] = n == 0 ? Json(nullptr) : Json(big_ratio(seq[n], seq[n - 1]));
    rows.push_back(row);
  }
  return Json{{"system", r.system},
              {"horizon", r.horizon},
              {"mode", growth_mode_name(r.mode)},
              {"rows", rows},
              {"rate", r.rate.rate},
              {"rate_lower", r.rate.lower},
              {"rate_upper", r.rate.upper},
              {"converged", r.rate.converged}};
}

inline std::string growth_table(const GrowthReport& r) {
  const auto& seq = r.mode == GrowthMode::monoid ? r.beta_plus : r.beta;
  std::size_t wn = 1, wp = 5, wb = 4;
  for (int n = 0; n <= r.horizon; ++n) {
    wn = std::max(wn, std::to_string(n).size());
    wp = std::max(wp, big_to_string(r.beta_plus[n]).size());
    wb = std::max(wb, big_to_string(r.beta[n]).size());
  }
  std::ostringstream out;
  out << std::setw(static_cast<int>(wn)) << "n" << "  " << std::setw(static_cast<int>(wp)) << "beta+" << "  "
      << std::setw(static_cast<int>(wb)) << "beta" << "  ratio\n";
  out << std::fixed << std::setprecision(9);
  for (int n = 0; n <= r.horizon; ++n) {
    out << std::setw(static_cast<int>(wn)) << n << "  " << std::setw(static_cast<int>(wp))
        << big_to_string(r.beta_plus[n]) << "  " << std::setw(static_cast<int>(wb)) << big_to_string(r.beta[n]) << "  ";
    if (n == 0)
      out << "-";
    else
      out << big_ratio(seq[n], seq[n - 1]);
    out << "\n";
  }
  out << "growth rate " << r.rate.rate << "\n";
  return out.str();
}

}  // namespace garside
