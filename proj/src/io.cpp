#include "strand/io.hpp"

#include <fstream>

namespace strand {

namespace {

[[noreturn]] void fail(const std::string& what) { throw input_error(what); }

const Json& need(const Json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  fail("expected a rational as integer or string");
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  fail("expected an integer");
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

GroupPtr group_from_json(const Json& j) {
  try {
    std::vector<std::string> ids = need(j, "elements").get<std::vector<std::string>>();
    std::vector<std::vector<int>> mul = need(j, "mul").get<std::vector<std::vector<int>>>();
    std::string name = j.value("name", std::string("G"));
    return std::make_shared<const FiniteGroup>(name, std::move(ids), std::move(mul));
  } catch (const input_error&) {
    throw;
  } catch (const std::exception& e) {
    fail(std::string("bad group: ") + e.what());
  }
}

PointedGSet pointed_set_from_json(const Json& j, GroupPtr fallback_group) {
  GroupPtr group = j.contains("group") ? group_from_json(j.at("group"))
                   : fallback_group    ? fallback_group
                                       : std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  std::vector<std::string> ids = need(j, "elements").get<std::vector<std::string>>();
  int basepoint = j.value("basepoint", 0);
  std::vector<std::vector<int>> action;
  if (j.contains("action")) {
    action = j.at("action").get<std::vector<std::vector<int>>>();
  } else {
    action.assign(group->order(), {});
    for (auto& row : action) {
      row.resize(ids.size());
      for (size_t i = 0; i < ids.size(); ++i) row[i] = static_cast<int>(i);
    }
  }
  try {
    return PointedGSet(std::move(group), std::move(ids), basepoint, std::move(action));
  } catch (const std::exception& e) {
    fail(std::string("bad pointed set: ") + e.what());
  }
}

MonoidPtr monoid_from_json(const Json& j) {
  std::string kind = need(j, "kind").get<std::string>();
  try {
    if (kind == "group_subset") {
      AmbientAbelian ambient;
      ambient.free_rank = j.value("free_rank", 0);
      if (j.contains("moduli"))
        for (const auto& m : j.at("moduli")) ambient.moduli.push_back(int_from_json(m));
      std::vector<std::vector<Int>> subset;
      for (const auto& row : need(j, "subset")) {
        std::vector<Int> coords;
        for (const auto& c : row) coords.push_back(int_from_json(c));
        subset.push_back(std::move(coords));
      }
      GroupPtr group;
      std::vector<std::vector<int>> action;
      if (j.contains("group")) group = group_from_json(j.at("group"));
      if (j.contains("action")) action = j.at("action").get<std::vector<std::vector<int>>>();
      return make_group_subset(std::move(ambient), std::move(subset), std::move(group),
                               std::move(action));
    }
    if (kind == "pointed_set") return make_pointed_set(pointed_set_from_json(j));
    if (kind == "grassmann") return make_grassmann(need(j, "dim").get<int>());
    if (kind == "interval") {
      IntervalSampler sampler;
      sampler.max_components = j.value("max_components", sampler.max_components);
      sampler.grid = j.value("grid", sampler.grid);
      sampler.span = j.value("span", sampler.span);
      return make_interval_monoid(sampler);
    }
    if (kind == "smash")
      return make_smash(monoid_from_json(need(j, "first")), monoid_from_json(need(j, "second")),
                        j.value("budget", 4096));
    if (kind == "wedge_label")
      return make_wedge_label(pointed_set_from_json(need(j, "x")),
                              monoid_from_json(need(j, "m")));
    if (kind == "total") {
      GroupPtr group;
      std::vector<std::vector<int>> action;
      if (j.contains("group")) group = group_from_json(j.at("group"));
      if (j.contains("action")) action = j.at("action").get<std::vector<std::vector<int>>>();
      return make_total_monoid(need(j, "elements").get<std::vector<std::string>>(),
                               j.value("zero", 0),
                               need(j, "table").get<std::vector<std::vector<int>>>(),
                               std::move(group), std::move(action));
    }
    if (kind == "explicit") {
      std::vector<std::pair<std::vector<int>, int>> sums;
      for (const auto& s : need(j, "sums"))
        sums.push_back({need(s, "tuple").get<std::vector<int>>(), need(s, "value").get<int>()});
      return make_explicit_monoid(need(j, "elements").get<std::vector<std::string>>(),
                                  j.value("zero", 0), std::move(sums));
    }
  } catch (const input_error&) {
    throw;
  } catch (const std::exception& e) {
    fail("bad monoid of kind '" + kind + "': " + e.what());
  }
  fail("unknown monoid kind '" + kind + "'");
}

Interval interval_from_json(const Json& j) {
  try {
    return Interval(rat_from_json(need(j, "lo")), rat_from_json(need(j, "hi")),
                    j.value("lo_closed", true), j.value("hi_closed", true));
  } catch (const input_error&) {
    throw;
  } catch (const std::exception& e) {
    fail(std::string("bad interval: ") + e.what());
  }
}

IntervalSet interval_set_from_json(const Json& j) {
  std::vector<Interval> parts;
  for (const auto& item : j) parts.push_back(interval_from_json(item));
  try {
    return IntervalSet::normalize(std::move(parts));
  } catch (const std::exception& e) {
    fail(std::string("bad interval set: ") + e.what());
  }
}

Json interval_to_json(const Interval& i) {
  return Json{{"lo", format_rat(i.lo)},
              {"hi", format_rat(i.hi)},
              {"lo_closed", i.lo_closed},
              {"hi_closed", i.hi_closed}};
}

Json interval_set_to_json(const IntervalSet& s) {
  Json out = Json::array();
  for (const auto& c : s.components()) out.push_back(interval_to_json(c));
  return out;
}

Elem elem_from_json(const Json& spec, const Json& e) {
  std::string kind = need(spec, "kind").get<std::string>();
  if (kind == "group_subset") {
    AmbientAbelian ambient;
    ambient.free_rank = spec.value("free_rank", 0);
    if (spec.contains("moduli"))
      for (const auto& m : spec.at("moduli")) ambient.moduli.push_back(int_from_json(m));
    std::vector<Int> coords;
    for (const auto& c : e) coords.push_back(int_from_json(c));
    return Elem::zvec(ambient.reduce(std::move(coords)));
  }
  if (kind == "pointed_set" || kind == "total" || kind == "explicit") {
    if (e.is_number_integer()) return Elem::idx(e.get<int>());
    if (e.is_string()) {
      auto ids = need(spec, "elements").get<std::vector<std::string>>();
      for (size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == e.get<std::string>()) return Elem::idx(static_cast<int>(i));
      fail("unknown element '" + e.get<std::string>() + "'");
    }
    fail("element must be an index or a name");
  }
  if (kind == "grassmann") {
    std::vector<QVec> rows;
    for (const auto& row : e) {
      QVec v;
      for (const auto& x : row) v.push_back(rat_from_json(x));
      rows.push_back(std::move(v));
    }
    int dim = need(spec, "dim").get<int>();
    QMatrix m = rows.empty() ? QMatrix(0, dim) : QMatrix::from_rows(rows);
    if (m.cols() != static_cast<size_t>(dim)) fail("subspace row dimension mismatch");
    m.rref();
    return Elem::subspace(std::move(m));
  }
  if (kind == "interval") return Elem::ivset(interval_set_from_json(e));
  if (kind == "smash") {
    if (e.is_string() && e.get<std::string>() == "*") return Elem::smash_base();
    return Elem::smash_pair(elem_from_json(need(spec, "first"), need(e, "first")),
                            elem_from_json(need(spec, "second"), need(e, "second")));
  }
  if (kind == "wedge_label") {
    if (e.is_string() && e.get<std::string>() == "*") return Elem::wedge_base();
    const Json& xj = need(e, "x");
    int x;
    if (xj.is_number_integer()) {
      x = xj.get<int>();
    } else {
      auto ids = need(need(spec, "x"), "elements").get<std::vector<std::string>>();
      x = -1;
      for (size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == xj.get<std::string>()) x = static_cast<int>(i);
      if (x < 0) fail("unknown wedge point");
    }
    return Elem::wedge_pair(x, elem_from_json(need(spec, "m"), need(e, "m")));
  }
  fail("unknown monoid kind '" + kind + "'");
}

namespace {

StagePtr stage_from_json(const Json& j) {
  GroupPtr group = j.contains("group")
                       ? group_from_json(j.at("group"))
                       : std::make_shared<const FiniteGroup>(FiniteGroup::trivial());
  int copies = j.value("copies", 1);
  try {
    return regular_rep(std::move(group), copies);
  } catch (const std::exception& e) {
    fail(std::string("bad stage: ") + e.what());
  }
}

QVec point_from_json(const Json& j) {
  QVec out;
  for (const auto& c : j) out.push_back(rat_from_json(c));
  return out;
}

}  // namespace

LoadedConfig config_from_json(const Json& j) {
  StagePtr stage = stage_from_json(j);
  Json spec = need(j, "monoid");
  MonoidPtr label_monoid = monoid_from_json(spec);
  bool strings = false;
  for (const auto& p : need(j, "particles"))
    if (p.contains("intervals")) strings = true;
  MonoidPtr smash_monoid;
  std::vector<Particle> particles;
  if (strings) smash_monoid = make_smash(make_interval_monoid(), label_monoid);
  for (const auto& p : need(j, "particles")) {
    QVec point = point_from_json(need(p, "point"));
    Elem label = elem_from_json(spec, need(p, "label"));
    if (strings) {
      if (!p.contains("intervals")) fail("mixed string and plain particles");
      IntervalSet set = interval_set_from_json(p.at("intervals"));
      if (set.empty() || label_monoid->is_zero(label)) continue;
      particles.push_back({std::move(point),
                           Elem::smash_pair(Elem::ivset(std::move(set)), std::move(label))});
    } else {
      particles.push_back({std::move(point), std::move(label)});
    }
  }
  try {
    LabeledConfig config =
        make_config(stage, strings ? smash_monoid : label_monoid, std::move(particles));
    return {stage, label_monoid, smash_monoid, strings, std::move(config), spec};
  } catch (const std::exception& e) {
    fail(std::string("bad config: ") + e.what());
  }
}

LoadedIsotopy isotopy_from_json(const Json& j) {
  StagePtr stage = stage_from_json(j);
  Json spec = need(j, "monoid");
  MonoidPtr label_monoid = monoid_from_json(spec);
  MonoidPtr smash_monoid = make_smash(make_interval_monoid(), label_monoid);
  std::vector<PathSpec::Track> tracks;
  for (const auto& t : need(j, "tracks")) {
    Elem label = elem_from_json(spec, need(t, "label"));
    Elem full = t.contains("intervals")
                    ? Elem::smash_pair(Elem::ivset(interval_set_from_json(t.at("intervals"))),
                                       std::move(label))
                    : std::move(label);
    tracks.push_back(
        {point_from_json(need(t, "from")), point_from_json(need(t, "to")), std::move(full)});
  }
  bool has_strings = !tracks.empty() && tracks[0].label.kind() == Elem::Kind::smash;
  return {stage, has_strings ? smash_monoid : label_monoid, std::move(tracks)};
}

IntMatrix matrix_from_json(const Json& j) {
  std::vector<std::vector<Int>> rows;
  for (const auto& row : need(j, "rows")) {
    std::vector<Int> r;
    for (const auto& x : row) r.push_back(int_from_json(x));
    rows.push_back(std::move(r));
  }
  try {
    return IntMatrix::from_rows(rows);
  } catch (const std::exception& e) {
    fail(std::string("bad matrix: ") + e.what());
  }
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return Json{{"rows", std::move(rows)}};
}

Json abelian_group_to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const Int& t : g.torsion) torsion.push_back(t.str());
  return Json{{"rank", g.rank}, {"torsion", std::move(torsion)}, {"pretty", g.to_string()}};
}

}  // namespace strand
