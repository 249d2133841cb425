#include "report.hpp"

namespace blowade::report {

std::string rational(const Rational& q) { return q.get_str(); }

Json point(const ProjectivePoint& p) {
  Json out = Json::array();
  for (const auto& c : p.coords()) out.push_back(rational(c));
  return out;
}

Json ade_type(const ADEType& t) {
  Json out;
  switch (t.family) {
    case ADEFamily::A: out["family"] = "A"; break;
    case ADEFamily::D: out["family"] = "D"; break;
    case ADEFamily::E: out["family"] = "E"; break;
    case ADEFamily::NotADE: out["family"] = "NotADE"; break;
    case ADEFamily::Indeterminate: out["family"] = "Indeterminate"; break;
  }
  if (t.is_ade()) {
    out["index"] = t.index;
  } else {
    out["index"] = nullptr;
  }
  return out;
}

Json zeta(const ZetaFunction& z) {
  Json out = Json::array();
  for (const auto& [d, nu] : z.factors()) out.push_back({{"d", d}, {"nu", nu}});
  return out;
}

Json change(const CoordinateChange& c) {
  Json out = Json::array();
  for (const auto& s : c) out.push_back(s.poly().to_string(kLocalNames));
  return out;
}

Json principal(const PrincipalPartData& data) {
  Json out;
  out["type"] = ade_type(data.type);
  out["h"] = data.h.to_string(kLocalNames);
  out["c"] = rational(data.c);
  out["m"] = data.m;
  out["chart"] = data.change.chart.index;
  out["shift"] = {rational(data.change.shift[0]), rational(data.change.shift[1])};
  out["change"] = change(data.change.series_change);
  out["effective_truncation"] = data.change.series_change[1].truncation();
  out["rounds"] = data.rounds;
  return out;
}

Json point_analysis(const PointAnalysis& p) {
  Json out;
  out["coords"] = point(p.curve.point);
  out["chart"] = p.curve.chart;
  out["type"] = ade_type(p.curve.type);
  out["milnor"] = p.curve.type.is_ade() ? Json(p.curve.milnor) : Json(nullptr);
  if (p.principal) {
    out["m"] = p.principal->m;
    out["c"] = rational(p.principal->c);
    out["h"] = p.principal->h.to_string(kLocalNames);
  } else {
    out["m"] = nullptr;
    out["c"] = nullptr;
    out["h"] = nullptr;
  }
  out["local_equation"] = p.curve.local_equation.poly().to_string(kLocalNames);
  out["local_zeta"] = p.local_zeta ? zeta(*p.local_zeta) : Json(nullptr);
  return out;
}

Json blow_ade(const BlowAdeReport& r) {
  Json out;
  out["d"] = r.d;
  out["reduced"] = r.reduced;
  out["is_blow_ade"] = r.is_blow_ade;
  out["m"] = r.m ? Json(*r.m) : Json(nullptr);
  out["k0"] = r.k0;
  out["mu_tot"] = r.mu_tot;
  out["le_yomdin"] = r.le_yomdin;
  out["subtype"] = {{"pure_blow_A1", r.subtype.pure_blow_A1},
                    {"blow_A", r.subtype.blow_A},
                    {"even_blow_A", r.subtype.even_blow_A},
                    {"general_ADE", r.subtype.general_ADE}};
  if (r.global_zeta) {
    out["zeta"] = zeta(*r.global_zeta);
    out["zeta_degree"] = zeta_degree(*r.global_zeta);
  } else {
    out["zeta"] = nullptr;
    out["zeta_degree"] = nullptr;
  }
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(point_analysis(p));
  out["points"] = pts;
  Json types = Json::array();
  for (const auto& t : r.signature().types) types.push_back(ade_type(t));
  out["signature"] = {{"types", types}, {"m", r.m ? Json(*r.m) : Json(nullptr)}};
  Json fails = Json::array();
  for (const auto& f : r.failures) {
    fails.push_back({{"coords", point(f.point)},
                     {"kind", std::string(to_string(f.kind))},
                     {"message", f.message},
                     {"conclusive", f.conclusive}});
  }
  out["failures"] = fails;
  return out;
}

Json mu_star(const MuStarTriple& t) {
  return {{"mu3", t.mu3},
          {"mu2", t.mu2},
          {"mu1", t.mu1},
          {"trials", t.trials},
          {"sections_used", t.sections_used},
          {"seed", t.seed},
          {"mu2_method", "heuristic-generic"}};
}

Json verdict(const StabilityVerdict& v) {
  Json out;
  out["constant_flags"] = {{"reduced", v.flags.reduced},     {"mu_tot", v.flags.mu_tot},
                           {"k0", v.flags.k0},               {"signature", v.flags.signature},
                           {"zeta", v.flags.zeta},           {"mu_star", v.flags.mu_star},
                           {"mu_star_skipped", v.flags.mu_star_skipped}};
  out["all_constant"] = v.flags.all();
  out["status"] = v.flags.all() ? "consistent on samples" : "violated";
  out["first_violation"] =
      v.first_violation
          ? Json{{"s", rational(v.first_violation->s)}, {"flag", v.first_violation->flag}}
          : Json(nullptr);
  out["pairwise_same_type"] = v.pairwise_same_type;
  Json samples = Json::array();
  for (const auto& s : v.samples) {
    Json js;
    js["s"] = rational(s.s);
    js["member"] = s.member.to_string();
    js["reduced"] = s.reduced;
    js["report"] = s.report ? blow_ade(*s.report) : Json(nullptr);
    js["error"] = s.error ? Json{{"kind", std::string(to_string(*s.error))}, {"message", s.message}}
                          : Json(nullptr);
    js["mu_star"] = s.mu_star ? mu_star(*s.mu_star) : Json(nullptr);
    if (!s.mu_star) js["mu_star_skipped"] = s.mu_star_note;
    samples.push_back(js);
  }
  out["samples"] = samples;
  return out;
}

Json error(const DomainError& e) {
  return {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
}

}  // namespace blowade::report
