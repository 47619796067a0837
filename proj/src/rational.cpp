#include "leibniz/rational.hpp"

namespace leibniz {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rational rat_parse(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  const std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw parse_error("malformed rational '" + s + "'");
  Rational r;
  r.get_num() = Int(num);
  r.get_den() = Int(den);
  if (r.get_den() == 0) throw parse_error("malformed rational '" + s + "': zero denominator");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace leibniz
