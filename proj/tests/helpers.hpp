#pragma once

#include <string>
#include <vector>

#include "strand/interval.hpp"

namespace strand::testing {

inline std::string data_path(const std::string& rel) {
  return std::string(STRAND_DATA_DIR) + "/" + rel;
}

inline Interval iv(const char* lo, const char* hi, bool lc = true, bool hc = true) {
  return Interval(parse_rat(lo), parse_rat(hi), lc, hc);
}

inline IntervalSet ivs(std::vector<Interval> parts) {
  return IntervalSet::normalize(std::move(parts));
}

}  // namespace strand::testing
