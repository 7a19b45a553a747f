// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: lift / cone / verify / trinomial / interpolate /
// wps-demo. Exit status: 0 on success or a verified positive, 1 on a definite
// negative verdict (base point, not rational, membership failure), 2 on
// usage, parse, or resource errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "conelift/conelift.hpp"

namespace {

using conelift::Polynomial;
using conelift::Rational;
using conelift::RationalFunction;
using conelift::VarSet;
using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultStepBudget = 1000000;

conelift::StepBudget make_budget() {
  std::uint64_t limit = kDefaultStepBudget;
  if (const char* env = std::getenv("CONELIFT_STEP_BUDGET")) {
    try {
      const std::string s(env);
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      limit = v;
    } catch (const std::exception&) {
      throw conelift::Error("CONELIFT_STEP_BUDGET must be a nonnegative integer (0 = unlimited)");
    }
  }
  return conelift::StepBudget{limit, 0};
}

json strings_of(const std::vector<Polynomial>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(p.to_string());
  return arr;
}

json strings_of(const std::vector<RationalFunction>& fs) {
  json arr = json::array();
  for (const auto& f : fs) arr.push_back(f.to_string());
  return arr;
}

json strings_of(const std::vector<Rational>& qs) {
  json arr = json::array();
  for (const auto& q : qs) arr.push_back(conelift::rational_to_string(q));
  return arr;
}

json basis_json(const conelift::GroebnerBasis& basis) {
  return strings_of(basis.elements());
}

json sample_report_json(const conelift::SampleReport& rep) {
  json failures = json::array();
  for (const auto& f : rep.failures) {
    failures.push_back({{"sample_index", f.sample_index},
                        {"generator_index", f.generator_index},
                        {"domain_point", strings_of(f.domain_point)},
                        {"image_point", strings_of(f.image_point)},
                        {"value", conelift::rational_to_string(f.value)}});
  }
  return {{"n_samples", rep.n_samples},
          {"seed", rep.seed},
          {"bound", rep.coord_bound},
          {"pass_counts", rep.generator_pass_counts},
          {"failures", failures},
          {"all_passed", rep.all_passed()}};
}

void render_list(std::ostream& out, const std::string& label, const json& arr) {
  out << label << ":\n";
  for (const auto& item : arr) out << "  " << item.get<std::string>() << "\n";
}

void render_sample_report(std::ostream& out, const json& rep) {
  out << "samples: " << rep["n_samples"].get<std::size_t>() << " (seed "
      << rep["seed"].get<std::uint64_t>() << ", bound " << rep["bound"].get<std::int64_t>()
      << ")\n";
  out << "pass counts:";
  for (const auto& c : rep["pass_counts"]) out << " " << c.get<std::size_t>();
  out << "\n";
  const auto& failures = rep["failures"];
  if (failures.empty()) {
    out << "all samples on the cone: yes\n";
    return;
  }
  out << "failures: " << failures.size() << "\n";
  std::size_t shown = 0;
  for (const auto& f : failures) {
    if (++shown > 10) {
      out << "  ... (" << failures.size() - 10 << " more)\n";
      break;
    }
    out << "  sample " << f["sample_index"].get<std::size_t>() << ", generator "
        << f["generator_index"].get<std::size_t>() << ", value " << f["value"].get<std::string>()
        << "\n";
  }
}

struct Outcome {
  json report;
  int exit_code = 0;
  std::string text;
};

// [vars] + [map] sections into a projective map representation.
conelift::ProjectiveMapRep read_map(const conelift::JobFile& job, const VarSet& vars) {
  auto coords = conelift::job_rational_functions(job, "map", vars);
  if (coords.size() < 2)
    throw conelift::ParseError("[map] needs at least two coordinate lines", 1, 1);
  return conelift::ProjectiveMapRep(std::move(coords));
}

// Shared by `cone` and `verify`: h tuple (lifted from [map] when no [h]),
// the cone from [ambient]/[ideal], plus everything needed for reporting.
struct ConeJob {
  VarSet vars;
  std::vector<RationalFunction> input_coords;  // empty when [h] was given directly
  std::vector<Polynomial> h;
  std::optional<conelift::LiftResult> lift;
  VarSet ambient;
  conelift::ConeVariety cone;
};

ConeJob read_cone_job(const conelift::JobFile& job, conelift::StepBudget* budget) {
  VarSet vars = conelift::job_vars(job, "vars");
  std::vector<RationalFunction> input;
  std::vector<Polynomial> h;
  std::optional<conelift::LiftResult> lift;

  if (job.has("h")) {
    h = conelift::job_polynomials(job, "h", vars);
    if (h.empty()) throw conelift::ParseError("[h] section is empty", 1, 1);
  } else if (job.has("map")) {
    conelift::ProjectiveMapRep rep = read_map(job, vars);
    input = rep.coords();
    lift = conelift::lift_morphism(rep, conelift::MonomialOrder::Grevlex, budget);
    h = lift->h;
  } else {
    throw conelift::ParseError("job needs a [map] or [h] section", 1, 1);
  }

  VarSet ambient = job.has("ambient") ? conelift::job_vars(job, "ambient")
                                      : VarSet::numbered("z", h.size());
  if (ambient.size() != h.size())
    throw conelift::ParseError("[ambient] size differs from the number of coordinates", 1, 1);
  std::vector<Polynomial> gens =
      job.has("ideal") ? conelift::job_polynomials(job, "ideal", ambient)
                       : std::vector<Polynomial>{};
  conelift::ConeVariety cone(ambient, std::move(gens));
  return {std::move(vars), std::move(input), std::move(h), std::move(lift), std::move(ambient),
          std::move(cone)};
}

Outcome run_lift(const std::string& job_path) {
  conelift::StepBudget budget = make_budget();
  const auto job = conelift::JobFile::load(job_path);
  const VarSet vars = conelift::job_vars(job, "vars");
  const conelift::ProjectiveMapRep rep = read_map(job, vars);

  json report;
  report["command"] = "lift";
  report["vars"] = vars.names();
  report["input"] = strings_of(rep.coords());

  std::ostringstream text;
  try {
    const conelift::LiftResult r =
        conelift::lift_morphism(rep, conelift::MonomialOrder::Grevlex, &budget);
    const bool proj_eq = conelift::verify_projective_equality(
        std::span<const Polynomial>(r.h), std::span<const RationalFunction>(rep.coords()));
    report["ok"] = true;
    report["h"] = strings_of(r.h);
    report["base_chart"] = r.base_chart;
    report["certificate"] = basis_json(r.certificate);
    report["unit_ideal"] = true;
    report["projective_equality"] = proj_eq;

    text << "lift: ok\n";
    render_list(text, "input", report["input"]);
    render_list(text, "h", report["h"]);
    text << "base chart: " << r.base_chart << "\n";
    render_list(text, "certificate", report["certificate"]);
    text << "projective equality: " << (proj_eq ? "yes" : "no") << "\n";
    return {report, 0, text.str()};
  } catch (const conelift::BasePointDetected& e) {
    report["ok"] = false;
    report["error"] = "base_point";
    report["message"] = e.what();
    report["basis"] = basis_json(e.basis);
    text << "lift: base point detected\n";
    render_list(text, "proper basis", report["basis"]);
    return {report, 1, text.str()};
  }
}

Outcome run_cone(const std::string& job_path, std::optional<std::size_t> samples,
                 std::optional<std::uint64_t> seed, std::int64_t bound) {
  conelift::StepBudget budget = make_budget();
  const auto job = conelift::JobFile::load(job_path);

  json report;
  report["command"] = "cone";
  std::ostringstream text;
  try {
    ConeJob cj = read_cone_job(job, &budget);
    report["vars"] = cj.vars.names();
    if (!cj.input_coords.empty()) report["input"] = strings_of(cj.input_coords);
    report["h"] = strings_of(cj.h);
    report["ambient"] = cj.ambient.names();
    report["generators"] = strings_of(cj.cone.generators());

    const conelift::ConeSurjection surj =
        cj.lift ? conelift::build_gamma(*cj.lift, cj.cone)
                : conelift::build_gamma(std::span<const Polynomial>(cj.h), cj.cone, &budget);
    report["ok"] = true;
    report["gamma"] = strings_of(surj.gamma);
    report["m"] = surj.m;
    report["scaling_variable"] = surj.scaling_variable();
    report["maps_into_cone"] = true;

    text << "cone: ok\n";
    render_list(text, "h", report["h"]);
    render_list(text, "generators", report["generators"]);
    render_list(text, "gamma", report["gamma"]);
    text << "m: " << surj.m << "\n";
    text << "maps into cone: yes\n";

    int exit_code = 0;
    if (samples) {
      const conelift::SampleReport rep =
          conelift::sample_membership(surj, cj.cone, *samples, *seed, bound);
      report["samples"] = sample_report_json(rep);
      render_sample_report(text, report["samples"]);
      if (!rep.all_passed()) {
        exit_code = 1;
        report["ok"] = false;
      }
    }
    return {report, exit_code, text.str()};
  } catch (const conelift::BasePointDetected& e) {
    report["ok"] = false;
    report["error"] = "base_point";
    report["message"] = e.what();
    report["basis"] = basis_json(e.basis);
    text << "cone: base point detected\n";
    render_list(text, "proper basis", report["basis"]);
    return {report, 1, text.str()};
  } catch (const conelift::NotIntoCone& e) {
    report["ok"] = false;
    report["error"] = "not_into_cone";
    report["message"] = e.what();
    report["generator_index"] = e.generator_index;
    text << "cone: tuple does not map into the cone (generator " << e.generator_index << ")\n";
    return {report, 1, text.str()};
  }
}

Outcome run_verify(const std::string& job_path, std::size_t samples, std::uint64_t seed,
                   std::int64_t bound) {
  conelift::StepBudget budget = make_budget();
  const auto job = conelift::JobFile::load(job_path);

  json report;
  report["command"] = "verify";
  std::ostringstream text;
  try {
    ConeJob cj = read_cone_job(job, &budget);
    report["vars"] = cj.vars.names();
    if (!cj.input_coords.empty()) report["input"] = strings_of(cj.input_coords);
    report["h"] = strings_of(cj.h);
    report["ambient"] = cj.ambient.names();
    report["generators"] = strings_of(cj.cone.generators());

    json checks;
    bool all_ok = true;

    if (cj.lift) {
      const bool proj_eq = conelift::verify_projective_equality(
          std::span<const Polynomial>(cj.h),
          std::span<const RationalFunction>(cj.input_coords));
      checks["projective_equality"] = proj_eq;
      checks["unit_ideal"] = true;
      checks["certificate"] = basis_json(cj.lift->certificate);
      all_ok = all_ok && proj_eq;
    } else {
      const auto cert =
          conelift::is_unit_ideal(cj.h, conelift::MonomialOrder::Grevlex, &budget);
      checks["unit_ideal"] = cert.unit;
      checks["certificate"] = basis_json(cert.basis);
      if (!cert.unit) {
        report["ok"] = false;
        report["error"] = "base_point";
        report["basis"] = checks["certificate"];
        text << "verify: base point detected\n";
        render_list(text, "proper basis", report["basis"]);
        return {report, 1, text.str()};
      }
    }

    const bool into = conelift::verify_maps_into_cone(cj.h, cj.cone);
    checks["maps_into_cone"] = into;
    all_ok = all_ok && into;

    bool scaling = true;
    for (const Polynomial& g : cj.cone.generators())
      scaling = scaling && conelift::verify_gamma_scaling(g, cj.h);
    checks["scaling_identity"] = scaling;
    all_ok = all_ok && scaling;

    const conelift::ConeSurjection surj =
        cj.lift ? conelift::build_gamma(*cj.lift, cj.cone)
                : conelift::build_gamma(std::span<const Polynomial>(cj.h), cj.cone, &budget);
    report["gamma"] = strings_of(surj.gamma);
    report["m"] = surj.m;

    const conelift::SampleReport rep =
        conelift::sample_membership(surj, cj.cone, samples, seed, bound);
    report["samples"] = sample_report_json(rep);
    all_ok = all_ok && rep.all_passed();

    report["checks"] = checks;
    report["ok"] = all_ok;

    text << "verify: " << (all_ok ? "ok" : "FAILED") << "\n";
    render_list(text, "h", report["h"]);
    render_list(text, "gamma", report["gamma"]);
    for (const auto& [key, value] : checks.items())
      if (value.is_boolean())
        text << key << ": " << (value.get<bool>() ? "yes" : "no") << "\n";
    render_sample_report(text, report["samples"]);
    return {report, all_ok ? 0 : 1, text.str()};
  } catch (const conelift::BasePointDetected& e) {
    report["ok"] = false;
    report["error"] = "base_point";
    report["message"] = e.what();
    report["basis"] = basis_json(e.basis);
    text << "verify: base point detected\n";
    render_list(text, "proper basis", report["basis"]);
    return {report, 1, text.str()};
  } catch (const conelift::NotIntoCone& e) {
    report["ok"] = false;
    report["error"] = "not_into_cone";
    report["message"] = e.what();
    report["generator_index"] = e.generator_index;
    text << "verify: tuple does not map into the cone (generator " << e.generator_index
         << ")\n";
    return {report, 1, text.str()};
  }
}

std::vector<long long> parse_block(const std::string& csv, const std::string& flag) {
  std::vector<long long> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string piece =
        csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(piece, &pos);
      while (pos < piece.size() && std::isspace(static_cast<unsigned char>(piece[pos]))) ++pos;
      if (pos != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::exception&) {
      throw conelift::Error(flag + ": bad exponent list '" + csv + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

json witness_json(const conelift::RationalityVerdict& v) {
  if (const auto* w1 = std::get_if<conelift::Case1Witness>(&v.witness))
    return {{"kind", "case1"},
            {"s", w1->s},
            {"c", w1->c},
            {"renumbering", w1->renumbering}};
  if (const auto* w2 = std::get_if<conelift::Case2Witness>(&v.witness))
    return {{"kind", "case2"}, {"c", w2->c}};
  return {{"kind", "not_rational"}};
}

json trinomial_case_json(const conelift::TrinomialHypersurface& t) {
  const auto verdict = conelift::admits_surjection_from_affine_space(t);
  const auto& rat = verdict.rationality;
  json rep;
  rep["l"] = {t.block(0), t.block(1), t.block(2)};
  rep["l_gcds"] = rat.l_gcds;
  rep["cone"] = verdict.cone;
  rep["rational"] = rat.rational;
  rep["witness"] = witness_json(rat);
  rep["witness_verified"] = conelift::verify_verdict(rat);
  json surj;
  surj["status"] = conelift::to_string(verdict.status);
  if (verdict.m)
    surj["m"] = *verdict.m;
  else
    surj["m"] = nullptr;
  surj["explanation"] = verdict.explanation;
  rep["surjection"] = surj;
  rep["polynomial"] = conelift::to_polynomial(t).to_string();
  return rep;
}

void render_trinomial_case(std::ostream& out, const json& rep) {
  const auto block = [&](int i) {
    std::string s;
    for (const auto& e : rep["l"][i]) {
      if (!s.empty()) s += ",";
      s += std::to_string(e.get<long long>());
    }
    return s;
  };
  out << "l: (" << block(0) << ") (" << block(1) << ") (" << block(2) << ")\n";
  out << "l gcds: " << rep["l_gcds"][0].get<long long>() << " "
      << rep["l_gcds"][1].get<long long>() << " " << rep["l_gcds"][2].get<long long>() << "\n";
  out << "cone: " << (rep["cone"].get<bool>() ? "yes" : "no") << "\n";
  out << "rational: " << (rep["rational"].get<bool>() ? "yes" : "no") << "\n";
  const auto& w = rep["witness"];
  if (w["kind"] == "case1")
    out << "witness: case 1, s=" << w["s"].get<long long>() << ", c=("
        << w["c"][0].get<long long>() << "," << w["c"][1].get<long long>() << ","
        << w["c"][2].get<long long>() << "), renumbering " << w["renumbering"].get<int>()
        << "\n";
  else if (w["kind"] == "case2")
    out << "witness: case 2, c=(" << w["c"][0].get<long long>() << ","
        << w["c"][1].get<long long>() << "," << w["c"][2].get<long long>() << ")\n";
  else
    out << "witness: none\n";
  out << "surjection: " << rep["surjection"]["status"].get<std::string>();
  if (!rep["surjection"]["m"].is_null())
    out << " (m = " << rep["surjection"]["m"].get<long long>() << ")";
  out << "\n";
  out << "  " << rep["surjection"]["explanation"].get<std::string>() << "\n";
  out << "polynomial: " << rep["polynomial"].get<std::string>() << "\n";
}

Outcome run_trinomial(const std::string& l0, const std::string& l1, const std::string& l2) {
  const conelift::TrinomialHypersurface t(parse_block(l0, "--l0"), parse_block(l1, "--l1"),
                                          parse_block(l2, "--l2"));
  json rep;
  rep["command"] = "trinomial";
  json fields = trinomial_case_json(t);
  for (auto& [key, value] : fields.items()) rep[key] = std::move(value);
  std::ostringstream text;
  render_trinomial_case(text, rep);
  return {rep, rep["rational"].get<bool>() ? 0 : 1, text.str()};
}

Outcome run_trinomial_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw conelift::Error("cannot open batch file: " + path);
  json cases = json::array();
  std::ostringstream text;
  std::string line;
  int line_no = 0;
  bool all_rational = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream parts(line);
    std::string b0, b1, b2;
    if (!(parts >> b0)) continue;  // blank line
    if (!(parts >> b1 >> b2))
      throw conelift::ParseError("batch line needs three exponent blocks", line_no, 1);
    std::string extra;
    if (parts >> extra)
      throw conelift::ParseError("batch line has trailing content", line_no, 1);
    const conelift::TrinomialHypersurface t(parse_block(b0, "--batch"),
                                            parse_block(b1, "--batch"),
                                            parse_block(b2, "--batch"));
    json rep;
    rep["line"] = line_no;
    json fields = trinomial_case_json(t);
    for (auto& [key, value] : fields.items()) rep[key] = std::move(value);
    all_rational = all_rational && rep["rational"].get<bool>();
    render_trinomial_case(text, rep);
    text << "\n";
    cases.push_back(std::move(rep));
  }
  json report;
  report["command"] = "trinomial";
  report["batch"] = path;
  report["cases"] = std::move(cases);
  report["all_rational"] = all_rational;
  return {report, all_rational ? 0 : 1, text.str()};
}

Outcome run_interpolate(const std::string& job_path) {
  const auto job = conelift::JobFile::load(job_path);

  const auto points = conelift::job_points(job, "points");
  const auto preimages = conelift::job_points(job, "preimages");
  if (points.empty()) throw conelift::ParseError("missing or empty [points] section", 1, 1);
  if (preimages.empty())
    throw conelift::ParseError("missing or empty [preimages] section", 1, 1);

  const conelift::PointSet z(points);
  const conelift::TargetAssignment a(preimages);
  const VarSet vars =
      job.has("vars") ? conelift::job_vars(job, "vars") : VarSet::numbered("x", z.arity());
  if (vars.size() != z.arity())
    throw conelift::ParseError("[vars] size differs from the point arity", 1, 1);

  json report;
  report["command"] = "interpolate";
  report["points"] = json::array();
  for (const auto& p : z.points()) report["points"].push_back(strings_of(p));
  report["preimages"] = json::array();
  for (const auto& p : a.preimages()) report["preimages"].push_back(strings_of(p));

  const Polynomial ell = conelift::separating_functional(z, vars);
  report["separating_functional"] = ell.to_string();

  const std::vector<Polynomial> phi_tilde = conelift::interpolate_map(z, a, vars);
  report["phi_tilde"] = strings_of(phi_tilde);

  bool all_ok = true;
  json checks;
  checks["interpolation_exact"] = true;  // interpolate_map re-checks internally

  std::vector<Polynomial> phi = phi_tilde;
  if (job.has("pi")) {
    const VarSet pivars = conelift::job_vars(job, "pivars");
    if (pivars.size() != a.arity())
      throw conelift::ParseError("[pivars] size differs from the preimage arity", 1, 1);
    const std::vector<Polynomial> pi = conelift::job_polynomials(job, "pi", pivars);
    if (pi.empty()) throw conelift::ParseError("[pi] section is empty", 1, 1);
    report["pi"] = strings_of(pi);
    phi = conelift::compose_with_surjection(pi, phi_tilde);
    report["phi"] = strings_of(phi);

    bool compose_ok = true;
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = 0; j < pi.size(); ++j)
        compose_ok = compose_ok && phi[j].evaluate(z.points()[i]) ==
                                       pi[j].evaluate(a.preimages()[i]);
    checks["composition_exact"] = compose_ok;
    all_ok = all_ok && compose_ok;
  } else {
    report["phi"] = strings_of(phi);
  }

  if (job.has("ideal")) {
    const VarSet ambient = conelift::job_vars(job, "ambient");
    if (ambient.size() != phi.size())
      throw conelift::ParseError("[ambient] size differs from the number of map coordinates", 1,
                                 1);
    const auto gens = conelift::job_polynomials(job, "ideal", ambient);
    bool on_cone = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      std::vector<Rational> image;
      image.reserve(phi.size());
      for (const Polynomial& c : phi) image.push_back(c.evaluate(z.points()[i]));
      for (const Polynomial& g : gens) on_cone = on_cone && g.evaluate(image).is_zero();
    }
    checks["images_on_cone"] = on_cone;
    all_ok = all_ok && on_cone;
  }

  report["checks"] = checks;
  report["ok"] = all_ok;

  std::ostringstream text;
  text << "interpolate: " << (all_ok ? "ok" : "FAILED") << "\n";
  text << "separating functional: " << report["separating_functional"].get<std::string>()
       << "\n";
  render_list(text, "phi_tilde", report["phi_tilde"]);
  if (report.contains("pi")) render_list(text, "pi", report["pi"]);
  render_list(text, "phi", report["phi"]);
  for (const auto& [key, value] : checks.items())
    if (value.is_boolean()) text << key << ": " << (value.get<bool>() ? "yes" : "no") << "\n";
  return {report, all_ok ? 0 : 1, text.str()};
}

json wps_report_json(const conelift::WpsReport& rep) {
  json j;
  j["chart_image"] = rep.chart_image.to_string();
  j["odd_variable_degree"] = rep.odd_variable_degree;
  j["square_root"] = rep.root ? json(rep.root->to_string()) : json(nullptr);
  j["contradiction"] = rep.contradiction;
  j["notes"] = rep.notes;
  return j;
}

Outcome run_wps_demo() {
  const VarSet x3 = VarSet::numbered("x", 3);
  const auto main_rep = conelift::wps_obstruction_demo();
  const auto variant_square =
      conelift::wps_obstruction_demo(conelift::parse_polynomial("x1^2*x3^2", x3));
  const auto variant_cube =
      conelift::wps_obstruction_demo(conelift::parse_polynomial("x1^2*x3^3", x3));

  json report;
  report["command"] = "wps-demo";
  report["main"] = wps_report_json(main_rep);
  report["variants"] = {{"x1^2*x3^2", wps_report_json(variant_square)},
                        {"x1^2*x3^3", wps_report_json(variant_cube)}};

  std::ostringstream text;
  text << "wps-demo: weighted plane with weights (2, 1, 1)\n";
  for (const auto& note : main_rep.notes) text << "  " << note << "\n";
  text << "contradiction: " << (main_rep.contradiction ? "yes" : "no") << "\n";
  text << "variant x1^2*x3^2: "
       << (variant_square.root ? "square root " + variant_square.root->to_string()
                               : "no square root")
       << "\n";
  text << "variant x1^2*x3^3: "
       << (variant_cube.contradiction ? "contradiction (odd degree)" : "no contradiction")
       << "\n";

  const bool as_expected = main_rep.contradiction && variant_square.root.has_value() &&
                           variant_cube.contradiction;
  report["ok"] = as_expected;
  return {report, as_expected ? 0 : 1, text.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine cone surjection toolkit"};
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  std::string job_path;
  std::optional<std::size_t> samples_opt;
  std::optional<std::uint64_t> seed_opt;
  std::int64_t bound = 10;
  std::size_t samples_req = 0;
  std::uint64_t seed_req = 0;
  std::string l0, l1, l2, batch_path;

  CLI::App* lift = app.add_subcommand("lift", "lift a projective map to a coprime tuple");
  lift->add_option("--job", job_path, "job file")->required();
  add_format(lift);

  CLI::App* cone = app.add_subcommand("cone", "build the scaling surjection onto a cone");
  cone->add_option("--job", job_path, "job file")->required();
  auto* cone_samples = cone->add_option("--samples", samples_opt, "number of sample points");
  auto* cone_seed = cone->add_option("--seed", seed_opt, "sampling seed");
  cone->add_option("--bound", bound, "coordinate bound for sampling")->capture_default_str();
  cone_samples->needs(cone_seed);
  cone_seed->needs(cone_samples);
  add_format(cone);

  CLI::App* verify = app.add_subcommand("verify", "run all symbolic and sampled checks");
  verify->add_option("--job", job_path, "job file")->required();
  verify->add_option("--samples", samples_req, "number of sample points")->required();
  verify->add_option("--seed", seed_req, "sampling seed")->required();
  verify->add_option("--bound", bound, "coordinate bound for sampling")->capture_default_str();
  add_format(verify);

  CLI::App* trinomial = app.add_subcommand("trinomial", "decide trinomial cone rationality");
  auto* opt_l0 = trinomial->add_option("--l0", l0, "block 0 exponents, comma separated");
  auto* opt_l1 = trinomial->add_option("--l1", l1, "block 1 exponents, comma separated");
  auto* opt_l2 = trinomial->add_option("--l2", l2, "block 2 exponents, comma separated");
  auto* opt_batch =
      trinomial->add_option("--batch", batch_path, "file with one hypersurface per line");
  opt_l0->needs(opt_l1)->needs(opt_l2);
  opt_l1->needs(opt_l0)->needs(opt_l2);
  opt_l2->needs(opt_l0)->needs(opt_l1);
  opt_batch->excludes(opt_l0)->excludes(opt_l1)->excludes(opt_l2);
  add_format(trinomial);

  CLI::App* interpolate =
      app.add_subcommand("interpolate", "interpolate a map through chosen preimages");
  interpolate->add_option("--job", job_path, "job file")->required();
  add_format(interpolate);

  CLI::App* wps = app.add_subcommand("wps-demo", "weighted projective obstruction fixture");
  add_format(wps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // help/version exit 0, every usage error exits 2
  }

  try {
    Outcome outcome;
    if (lift->parsed()) {
      outcome = run_lift(job_path);
    } else if (cone->parsed()) {
      outcome = run_cone(job_path, samples_opt, seed_opt, bound);
    } else if (verify->parsed()) {
      outcome = run_verify(job_path, samples_req, seed_req, bound);
    } else if (trinomial->parsed()) {
      if (!batch_path.empty())
        outcome = run_trinomial_batch(batch_path);
      else if (!l0.empty())
        outcome = run_trinomial(l0, l1, l2);
      else
        throw conelift::Error("trinomial needs --l0/--l1/--l2 or --batch");
    } else if (interpolate->parsed()) {
      outcome = run_interpolate(job_path);
    } else {
      outcome = run_wps_demo();
    }

    if (format == "json")
      std::cout << outcome.report.dump(2) << "\n";
    else
      std::cout << outcome.text;
    return outcome.exit_code;
  } catch (const conelift::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const conelift::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
