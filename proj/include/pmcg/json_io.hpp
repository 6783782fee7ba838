#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "pmcg/families.hpp"
#include "pmcg/plumbing.hpp"
#include "pmcg/section4.hpp"
#include "pmcg/surface.hpp"

namespace pmcg {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Curves, words, relations (schema version 1; bit-exact round trips)

inline Json curve_to_json(const CurveSpec& c);

inline Json plain_curve_to_json(const PlainCurve& c) {
  return std::visit([](auto&& v) { return curve_to_json(CurveSpec(v)); }, c);
}

inline Json curve_to_json(const CurveSpec& c) {
  Json j;
  if (const auto* b = std::get_if<BoundaryCurve>(&c)) {
    j["type"] = "boundary";
    j["hole"] = b->hole;
  } else if (std::holds_alternative<OuterCurve>(c)) {
    j["type"] = "outer";
  } else if (const auto* h = std::get_if<HullCurve>(&c)) {
    j["type"] = "hull";
    j["holes"] = h->holes;
    j["routing"] = h->routing == Routing::front ? "front" : "back";
  } else {
    const auto& cc = std::get<ConjugatedCurve>(c);
    j["type"] = "conjugated";
    Json conj = Json::array();
    for (const auto& l : cc.conjugator) {
      Json letter;
      letter["curve"] = curve_to_json(l.curve);
      letter["power"] = l.power;
      conj.push_back(std::move(letter));
    }
    j["conjugator"] = std::move(conj);
    j["base"] = plain_curve_to_json(cc.base);
  }
  return j;
}

inline CurveSpec curve_from_json(const Json& j);

inline PlainCurve plain_curve_from_json(const Json& j) {
  CurveSpec c = curve_from_json(j);
  if (const auto* b = std::get_if<BoundaryCurve>(&c)) return *b;
  if (std::holds_alternative<OuterCurve>(c)) return OuterCurve{};
  if (const auto* h = std::get_if<HullCurve>(&c)) return *h;
  throw std::invalid_argument("conjugated base must itself be a plain curve");
}

inline CurveSpec curve_from_json(const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "boundary") return BoundaryCurve{j.at("hole").get<int>()};
  if (type == "outer") return OuterCurve{};
  if (type == "hull") {
    HullCurve h;
    h.holes = j.at("holes").get<std::vector<int>>();
    const std::string r = j.at("routing").get<std::string>();
    if (r != "front" && r != "back") throw std::invalid_argument("bad routing");
    h.routing = r == "front" ? Routing::front : Routing::back;
    return h;
  }
  if (type == "conjugated") {
    ConjugatedCurve cc;
    for (const auto& l : j.at("conjugator"))
      cc.conjugator.push_back(
          TwistLetter{curve_from_json(l.at("curve")), l.at("power").get<int>()});
    cc.base = plain_curve_from_json(j.at("base"));
    return cc;
  }
  throw std::invalid_argument("unknown curve type: " + type);
}

inline Json word_to_json(const MonodromyWord& w) {
  Json arr = Json::array();
  for (const auto& l : w.letters) {
    Json letter;
    letter["curve"] = curve_to_json(l.curve);
    letter["power"] = l.power;
    arr.push_back(std::move(letter));
  }
  return arr;
}

inline Json relation_to_json(const Relation& rel) {
  Json j;
  j["schema"] = 1;
  j["surface"]["n"] = rel.surface.holes;
  Json labels = Json::array();
  for (int i = 1; i <= rel.surface.holes; ++i) labels.push_back(rel.surface.label(i));
  j["surface"]["labels"] = std::move(labels);
  j["lhs"] = word_to_json(rel.lhs);
  j["rhs"] = word_to_json(rel.rhs);
  switch (rel.certificate) {
    case CertStatus::verified:
      j["certificate"]["status"] = "verified";
      break;
    case CertStatus::unverified:
      j["certificate"]["status"] = "unverified";
      break;
    case CertStatus::refuted: {
      j["certificate"]["status"] = "refuted";
      if (rel.diagnostic) {
        j["certificate"]["diagnostic"]["first_differing_generator"] =
            rel.diagnostic->first_differing_generator;
        j["certificate"]["diagnostic"]["lhs_image"] = rel.diagnostic->lhs_image;
        j["certificate"]["diagnostic"]["rhs_image"] = rel.diagnostic->rhs_image;
        j["certificate"]["diagnostic"]["homology_screen_passed"] =
            rel.diagnostic->homology_screen_passed;
      }
      break;
    }
  }
  return j;
}

inline Relation relation_from_json(const Json& j) {
  if (j.at("schema").get<int>() != 1)
    throw std::invalid_argument("unsupported relation schema version");
  Relation rel;
  const int n = j.at("surface").at("n").get<int>();
  std::vector<std::string> labels;
  if (j.at("surface").contains("labels"))
    labels = j.at("surface").at("labels").get<std::vector<std::string>>();
  rel.surface = HoledDisk(n, labels);
  auto parse_word = [&](const Json& arr) {
    MonodromyWord w{rel.surface, {}};
    for (const auto& l : arr) {
      TwistLetter tl{curve_from_json(l.at("curve")), l.at("power").get<int>()};
      if (tl.power == 0) throw std::invalid_argument("zero twist power");
      validate_curve(tl.curve, rel.surface);
      w.letters.push_back(std::move(tl));
    }
    return w;
  };
  rel.lhs = parse_word(j.at("lhs"));
  rel.rhs = parse_word(j.at("rhs"));
  const std::string status = j.at("certificate").at("status").get<std::string>();
  if (status == "verified")
    rel.certificate = CertStatus::verified;
  else if (status == "refuted")
    rel.certificate = CertStatus::refuted;
  else if (status == "unverified")
    rel.certificate = CertStatus::unverified;
  else
    throw std::invalid_argument("unknown certificate status: " + status);
  if (rel.certificate == CertStatus::refuted &&
      j.at("certificate").contains("diagnostic")) {
    const Json& d = j.at("certificate").at("diagnostic");
    RefutationDiagnostic diag;
    diag.first_differing_generator = d.at("first_differing_generator").get<int>();
    diag.lhs_image = d.at("lhs_image").get<std::string>();
    diag.rhs_image = d.at("rhs_image").get<std::string>();
    diag.homology_screen_passed = d.at("homology_screen_passed").get<bool>();
    rel.diagnostic = std::move(diag);
  }
  return rel;
}

// ---------------------------------------------------------------------------
// Reports

inline Json properties_to_json(const PropertiesReport& p) {
  auto tri = [](TriState t) {
    return t == TriState::yes ? "yes" : t == TriState::no ? "no" : "unknown";
  };
  Json j;
  j["all_powers_positive"] = p.all_powers_positive;
  j["lhs_pairwise_disjoint"] = tri(p.lhs_pairwise_disjoint);
  j["rhs_count_is_hole_count"] = p.rhs_count_is_hole_count;
  j["rhs_spans_rational_homology"] = p.rhs_spans_rational_homology;
  j["all_hold"] = p.all_hold();
  return j;
}

inline Json cf_to_json(const CFExpansion& e) {
  Json j;
  j["p"] = e.p;
  j["q"] = e.q;
  j["coefficients"] = e.coefficients;
  Json moves = Json::array();
  for (auto [m, c] : e.moves) {
    Json mv;
    mv["move"] = std::string(1, m);
    mv["count"] = c;
    moves.push_back(std::move(mv));
  }
  j["moves"] = std::move(moves);
  j["c_sequence"] = e.c_sequence;
  j["x_sequence"] = e.x_sequence;
  return j;
}

inline Json theta_to_json(const ThetaChainDescriptor& t) {
  Json j;
  j["p"] = t.p;
  j["q"] = t.q;
  j["degenerate"] = t.degenerate;
  j["c_sequence"] = t.c_sequence;
  Json links = Json::array();
  for (auto [tw, fr] : t.links) {
    Json l;
    l["twists"] = tw;
    l["framing"] = fr;
    links.push_back(std::move(l));
  }
  j["links"] = std::move(links);
  return j;
}

inline Json graph_to_json(const PlumbingGraph& g) {
  Json j;
  j["family"] = g.family;
  j["params"] = g.params;
  j["weights"] = g.weights;
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  IntMatrix m = intersection_matrix(g);
  Json matrix = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      row.push_back(m(i, k).convert_to<long long>());
    matrix.push_back(std::move(row));
  }
  j["matrix"] = std::move(matrix);
  j["negative_definite"] = is_negative_definite(g);
  j["det"] = BigInt(graph_det(g)).str();
  j["dot"] = to_dot(g);
  return j;
}

inline Json fibration_homology_to_json(const FibrationHomology& f) {
  Json j;
  j["b1"] = f.b1;
  j["b2"] = f.b2;
  if (f.torsion_det_abs)
    j["torsion_det_abs"] = f.torsion_det_abs->str();
  else
    j["torsion_det_abs"] = nullptr;
  return j;
}

inline Json match_to_json(const MatchReport& m) {
  Json j;
  j["verdict"] = m.verdict == MatchVerdict::exact_basis     ? "exact_basis"
                 : m.verdict == MatchVerdict::invariants_only ? "invariants_only"
                                                              : "mismatch";
  j["rank_matches"] = m.rank_matches;
  j["det_matches"] = m.det_matches;
  j["definiteness_matches"] = m.definiteness_matches;
  return j;
}

inline Json homeo_to_json(const HomeoType& h) {
  Json j;
  j["b2plus"] = h.b2plus;
  j["b2minus"] = h.b2minus;
  j["display"] = h.display;
  j["assumes_simply_connected_odd"] = h.assumes_simply_connected_odd;
  return j;
}

inline Json section4_to_json(const Section4Report& r) {
  Json j;
  j["g"] = r.g;
  j["lengths"]["CI"] = r.len_CI;
  j["lengths"]["I2"] = r.len_I2;
  j["lengths"]["U"] = r.len_U;
  j["lengths"]["W"] = r.len_W;
  j["lengths"]["rho"] = r.len_rho;
  j["lengths"]["rho_prime"] = r.len_rho_prime;
  j["lengths"]["I4"] = r.len_I4;
  j["chi_before"] = r.chi_before;
  j["sigma_before"] = r.sigma_before;
  j["chi_after"] = r.chi_after;
  j["sigma_after"] = r.sigma_after;
  j["b2plus"] = r.type_after.b2plus;
  j["b2minus"] = r.type_after.b2minus;
  j["homeo_display"] = r.type_after.display;
  j["chi_matches_formula"] = r.chi_matches_formula;
  j["blowdown_consistent"] = r.blowdown_consistent;
  j["i4_variant"]["chi_rho_i4"] = r.chi_rho_i4;
  j["i4_variant"]["chi_rho_prime_i4"] = r.chi_rho_prime_i4;
  Json checks = Json::array();
  for (const auto& c : r.rho_checks.checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["required"] = c.required;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace pmcg
