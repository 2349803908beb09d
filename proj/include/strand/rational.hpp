#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace strand {

// All arithmetic in this project is exact.  Int is an arbitrary-precision
// integer, Rat an always-normalized rational (gcd-reduced, denominator > 0).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parse a rational from "p/q", "p", or a decimal string like "-0.25".
Rat parse_rat(const std::string& text);

/// Canonical serialization: "p" when the denominator is 1, else "p/q".
std::string format_rat(const Rat& value);

Int rat_num(const Rat& value);
Int rat_den(const Rat& value);

inline Rat rat_abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }
inline Int int_abs(const Int& value) { return value < 0 ? Int(-value) : value; }

using QVec = std::vector<Rat>;

QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scale(const Rat& c, const QVec& v);
Rat qvec_dot(const QVec& a, const QVec& b);

/// l1 distance between two vectors of equal dimension.
Rat qvec_l1_dist(const QVec& a, const QVec& b);

std::string format_qvec(const QVec& v);

}  // namespace strand
