#pragma once

#include <json.hpp>

#include "strand/config.hpp"
#include "strand/intmatrix.hpp"
#include "strand/monoid.hpp"
#include "strand/strings.hpp"

namespace strand {

using Json = nlohmann::json;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json load_json_file(const std::string& path);

GroupPtr group_from_json(const Json& j);
PointedGSet pointed_set_from_json(const Json& j, GroupPtr fallback_group = nullptr);

/// Build a monoid from its spec (discriminated on "kind"); the spec is also
/// the schema for element literals.
MonoidPtr monoid_from_json(const Json& j);

/// Element literal, interpreted against the monoid spec it belongs to.
Elem elem_from_json(const Json& monoid_spec, const Json& elem_json);

Interval interval_from_json(const Json& j);
IntervalSet interval_set_from_json(const Json& j);
Json interval_to_json(const Interval& i);
Json interval_set_to_json(const IntervalSet& s);

struct LoadedConfig {
  StagePtr stage;
  MonoidPtr label_monoid;        // M
  MonoidPtr smash_monoid;        // interval ^ M when the file carries strings
  bool strings = false;
  LabeledConfig config;          // over smash_monoid when strings, else over M
  Json monoid_spec;
};

/// Full config file: group + copies + label monoid + particles; particles
/// with an "intervals" field make the file a string config.
LoadedConfig config_from_json(const Json& j);

/// Isotopy file: same header with "tracks" of {from, to, label, intervals}.
struct LoadedIsotopy {
  StagePtr stage;
  MonoidPtr monoid;
  std::vector<PathSpec::Track> tracks;
};
LoadedIsotopy isotopy_from_json(const Json& j);

IntMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);

Json abelian_group_to_json(const AbelianGroup& g);

}  // namespace strand
