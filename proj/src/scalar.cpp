#include "affgeo/scalar.hpp"

#include "affgeo/errors.hpp"

#include <cctype>

namespace affgeo {

namespace {
boost::multiprecision::cpp_int parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("bad rational: '" + std::string(whole) + "'");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad rational: '" + std::string(whole) + "'");
  return boost::multiprecision::cpp_int(std::string(s));
}
}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    q = Rational(parse_integer(s.substr(0, slash), text), den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    boost::multiprecision::cpp_int scale = 1;
    for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
    boost::multiprecision::cpp_int num = (ip.empty() ? 0 : parse_integer(ip, text)) * scale;
    if (!fp.empty()) num += parse_integer(fp, text);
    if (ip.empty() && fp.empty()) throw ParseError("bad rational: '" + std::string(text) + "'");
    q = Rational(num, scale);
  } else {
    q = Rational(parse_integer(s, text));
  }
  return negative ? -q : q;
}

std::string to_string(const Rational& q) {
  auto num = q.numerator();
  auto den = q.denominator();
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace affgeo
