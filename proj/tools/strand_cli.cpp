// Batch front end: load JSON definitions, run the checkers and
// computations, emit JSON reports with stable exit codes
// (0 success, 1 mathematical failure, 2 input error).

#include <CLI11.hpp>
#include <iostream>

#include "strand/io.hpp"
#include "strand/nerve.hpp"
#include "strand/pi0check.hpp"
#include "strand/presentation.hpp"

namespace {

using namespace strand;

constexpr const char* kVersion = "strand 1.0.0";

Json manifest(const std::string& command, const std::vector<std::string>& inputs,
              const Json& params) {
  return Json{{"command", command}, {"inputs", inputs}, {"params", params},
              {"tool", kVersion}};
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

Json check_report_to_json(const CheckReport& rep) {
  Json violations = Json::array();
  for (const auto& v : rep.violations)
    violations.push_back(Json{{"what", v.what}, {"detail", v.detail}});
  return Json{{"cases", rep.cases},
              {"exhaustive", rep.exhaustive},
              {"budget_hit", rep.budget_hit},
              {"violations", violations},
              {"ok", rep.ok()}};
}

Json certify_report_to_json(const CertifyReport& rep) {
  return Json{{"endpoint0_exact", rep.endpoint0_exact},
              {"endpoint1_exact", rep.endpoint1_exact},
              {"max_ratio", format_rat(rep.max_step_ratio)},
              {"lipschitz_ok", rep.lipschitz_ok},
              {"audit_ok", rep.audit_ok},
              {"collision", rep.collision},
              {"samples", rep.samples},
              {"bound", format_rat(rep.bound)},
              {"pass", rep.pass()}};
}

int cmd_axioms(const std::string& file, int arity, long budget, long seed) {
  MonoidPtr m = monoid_from_json(load_json_file(file));
  CheckReport axioms = check_axioms(*m, arity, budget, seed);
  CheckReport equivariance = check_equivariance(*m, std::min(arity, 3), budget / 4 + 1, seed);
  Json report{{"manifest", manifest("axioms", {file},
                                    Json{{"arity", arity}, {"budget", budget}, {"seed", seed}})},
              {"axioms", check_report_to_json(axioms)},
              {"equivariance", check_report_to_json(equivariance)}};
  emit(report);
  return axioms.ok() && equivariance.ok() ? 0 : 1;
}

int cmd_completion(const std::string& file, int arity) {
  MonoidPtr m = monoid_from_json(load_json_file(file));
  if (!m->carrier()) throw input_error("completion requires a finite carrier");
  MonoidPresentation pres = pi0_presentation(*m, arity);
  GrothendieckResult k = grothendieck_group(pres);
  MonoidPresentation wider = pi0_presentation(*m, arity + 1);
  GrothendieckResult k2 = grothendieck_group(wider);
  Json gens = Json::array();
  for (size_t i = 0; i < pres.generators.size(); ++i) {
    Json coords = Json::array();
    for (const Int& c : k.generator_images[i]) coords.push_back(c.str());
    gens.push_back(Json{{"generator", pres.generators[i].to_string()}, {"image", coords}});
  }
  Json report{
      {"manifest", manifest("completion", {file}, Json{{"arity", arity}})},
      {"generators", gens},
      {"relations", pres.relations.size()},
      {"arity_bound", arity},
      {"group", abelian_group_to_json(k.group)},
      {"rank", k.group.rank},
      {"torsion", abelian_group_to_json(k.group)["torsion"]},
      {"stable_under_bound_increase", k.group == k2.group}};
  emit(report);
  return 0;
}

int cmd_homotopy(const std::string& file, const std::string& kind, int samples,
                 const std::string& lipschitz) {
  Rat bound = parse_rat(lipschitz);
  Json input = load_json_file(file);
  std::optional<PathSpec> spec;
  if (kind == "isotopy") {
    LoadedIsotopy iso = isotopy_from_json(input);
    spec = make_linear_isotopy(iso.stage, iso.monoid, iso.tracks);
  } else {
    LoadedConfig loaded = config_from_json(input);
    if (!loaded.strings) throw input_error("homotopy paths need a string config");
    IsometryGadget gadget = make_gadget(loaded.stage);
    if (kind == "gamma-lambda") {
      if (!is_plus(loaded.config)) throw input_error("gamma-lambda needs an all-closed config");
      spec = make_gamma_lambda_path(loaded.config, gadget, loaded.label_monoid);
    } else if (kind == "lambda-gamma") {
      if (!is_plus(loaded.config)) throw input_error("lambda-gamma needs an all-closed config");
      LabeledConfig particles = lambda(loaded.config, gadget, loaded.label_monoid);
      IsometryGadget doubled = make_gadget(gadget.stage_out);
      spec = make_lambda_gamma_path(particles, doubled);
    } else if (kind == "h-t") {
      spec = make_h_t_path(loaded.config);
    } else if (kind == "vanish") {
      spec = make_vanish_path_spec(loaded.config);
    } else {
      throw input_error("unknown path kind '" + kind + "'");
    }
  }
  CertifyReport rep = certify_continuity(*spec, samples, bound);
  Json report{{"manifest", manifest("homotopy", {file},
                                    Json{{"kind", kind},
                                         {"samples", samples},
                                         {"lipschitz", lipschitz}})},
              {"kind", kind},
              {"certify", certify_report_to_json(rep)}};
  emit(report);
  return rep.pass() ? 0 : 1;
}

int cmd_certify_inverse(const std::string& file, int samples, const std::string& lipschitz) {
  LoadedConfig loaded = config_from_json(load_json_file(file));
  if (!loaded.strings) throw input_error("inverse certificates need a string config");
  IsometryGadget gadget = make_gadget(loaded.stage);
  PathSpec cert = grouplike_certificate(loaded.config, gadget);
  CertifyReport rep = certify_continuity(cert, samples, parse_rat(lipschitz));
  bool empty_end = cert.eval(1).empty();
  Json report{{"manifest", manifest("certify-inverse", {file},
                                    Json{{"samples", samples}, {"lipschitz", lipschitz}})},
              {"certify", certify_report_to_json(rep)},
              {"reaches_empty", empty_end}};
  emit(report);
  return rep.pass() && empty_end ? 0 : 1;
}

int cmd_orbit(const std::string& file, const std::string& subgroup_arg) {
  LoadedConfig loaded = config_from_json(load_json_file(file));
  const FiniteGroup& g = *loaded.stage->group;
  Json orbit = Json::array();
  for (int a = 0; a < g.order(); ++a)
    orbit.push_back(Json{{"g", g.element_id(a)},
                         {"config", g_act(loaded.config, a).to_string()}});
  std::vector<std::vector<int>> subs;
  if (subgroup_arg.empty()) {
    subs = subgroups(g);
  } else {
    std::vector<int> sub;
    std::stringstream ss(subgroup_arg);
    for (std::string tok; std::getline(ss, tok, ',');) sub.push_back(std::stoi(tok));
    if (!g.is_subgroup(sub)) throw input_error("indices do not form a subgroup");
    subs.push_back(std::move(sub));
  }
  Json verdicts = Json::array();
  for (const auto& sub : subs) {
    Json members = Json::array();
    for (int h : sub) members.push_back(g.element_id(h));
    verdicts.push_back(Json{{"subgroup", members}, {"fixed", is_fixed(loaded.config, sub)}});
  }
  Json report{{"manifest", manifest("orbit", {file}, Json{{"subgroup", subgroup_arg}})},
              {"orbit", orbit},
              {"fixed", verdicts}};
  emit(report);
  return 0;
}

int cmd_nerve(const std::string& file, int p_bound, const std::string& kind) {
  MonoidPtr m = monoid_from_json(load_json_file(file));
  HomologyReport rep;
  if (kind == "q") {
    rep = nerve_q_homology(*m, p_bound);
  } else if (kind == "bar") {
    rep = bar_homology_one_object(finite_monoid_from_pm(*m));
  } else if (kind == "bar2") {
    FiniteMonoid a = finite_monoid_from_pm(*m);
    std::vector<int> id(a.size());
    for (int i = 0; i < a.size(); ++i) id[i] = i;
    rep = bar_homology_two_sided(a, a, id);
  } else {
    throw input_error("unknown nerve kind '" + kind + "'");
  }
  Json report{{"manifest", manifest("nerve", {file},
                                    Json{{"p_bound", p_bound}, {"kind", kind}})},
              {"H0", abelian_group_to_json(rep.h0)},
              {"H1", abelian_group_to_json(rep.h1)},
              {"objects", rep.objects},
              {"morphisms", rep.morphisms},
              {"two_simplices", rep.two_simplices},
              {"chain_degree_bound", 2},
              {"p_bound", rep.p_bound}};
  emit(report);
  return 0;
}

int cmd_snf(const std::string& file) {
  IntMatrix a = matrix_from_json(load_json_file(file));
  SmithResult s = smith_normal_form(a);
  bool ok = check_smith_certificate(a, s, true);
  Json diag = Json::array();
  for (const Int& d : s.diagonal()) diag.push_back(d.str());
  Json report{{"manifest", manifest("snf", {file}, Json::object())},
              {"U", matrix_to_json(s.u)},
              {"D", matrix_to_json(s.d)},
              {"V", matrix_to_json(s.v)},
              {"diagonal", diag},
              {"certificate_ok", ok}};
  emit(report);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact partial-monoid, interval and configuration calculator"};
  app.require_subcommand(1);

  std::string file, kind = "gamma-lambda", lipschitz = "1000", subgroup, nerve_kind = "q";
  int arity = 4, samples = 64, p_bound = 3;
  long budget = 10000, seed = 0;

  auto* axioms = app.add_subcommand("axioms", "check partial monoid axioms");
  axioms->add_option("monoid", file)->required();
  axioms->add_option("--arity", arity);
  axioms->add_option("--budget", budget);
  axioms->add_option("--seed", seed);

  auto* completion = app.add_subcommand("completion", "presentation and universal group");
  completion->add_option("monoid", file)->required();
  completion->add_option("--arity", arity);

  auto* homotopy = app.add_subcommand("homotopy", "certify a catalog homotopy");
  homotopy->add_option("config", file)->required();
  homotopy->add_option("--path", kind);
  homotopy->add_option("--samples", samples);
  homotopy->add_option("--lipschitz", lipschitz);

  auto* inverse = app.add_subcommand("certify-inverse", "certify the inverse path");
  inverse->add_option("config", file)->required();
  inverse->add_option("--samples", samples);
  inverse->add_option("--lipschitz", lipschitz);

  auto* orbit = app.add_subcommand("orbit", "orbit and fixed-point verdicts");
  orbit->add_option("config", file)->required();
  orbit->add_option("--subgroup", subgroup);

  auto* nerve = app.add_subcommand("nerve", "summation category or bar homology");
  nerve->add_option("monoid", file)->required();
  nerve->add_option("--p-bound", p_bound);
  nerve->add_option("--kind", nerve_kind);

  auto* snf = app.add_subcommand("snf", "Smith normal form with certificates");
  snf->add_option("matrix", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (axioms->parsed()) return cmd_axioms(file, arity, budget, seed);
    if (completion->parsed()) return cmd_completion(file, arity);
    if (homotopy->parsed()) return cmd_homotopy(file, kind, samples, lipschitz);
    if (inverse->parsed()) return cmd_certify_inverse(file, samples, lipschitz);
    if (orbit->parsed()) return cmd_orbit(file, subgroup);
    if (nerve->parsed()) return cmd_nerve(file, p_bound, nerve_kind);
    if (snf->parsed()) return cmd_snf(file);
  } catch (const strand::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
