#include "strand/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace strand {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rat(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0) throw std::invalid_argument("trailing dot in '" + text + "'");
    Int num(digits);
    Int den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rat(num, den);
  }
  return Rat(Int(text));
}

std::string format_rat(const Rat& value) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(value);
  if (boost::multiprecision::denominator(value) != 1)
    out << '/' << boost::multiprecision::denominator(value);
  return out.str();
}

Int rat_num(const Rat& value) { return Int(boost::multiprecision::numerator(value)); }
Int rat_den(const Rat& value) { return Int(boost::multiprecision::denominator(value)); }

QVec qvec_add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVec qvec_scale(const Rat& c, const QVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Rat qvec_dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Rat acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat qvec_l1_dist(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Rat acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += rat_abs(a[i] - b[i]);
  return acc;
}

std::string format_qvec(const QVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_rat(v[i]);
  }
  return out + ")";
}

}  // namespace strand
