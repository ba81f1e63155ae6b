#include "tropchow/rational.hpp"

namespace tropchow {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Integer n(s);
      return Rational(n);
    }
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal '" + s + "'");
  }
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const RatVec& v) {
  std::string s;
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += to_string(v(i));
  }
  return s;
}

}  // namespace tropchow
