#include "onerel/rational.hpp"

#include "onerel/error.hpp"

namespace onerel {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view s) {
  if (s.empty()) fail(Errc::ParseError, "empty rational");
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(Integer(std::string(s)));
    }
    Integer num{std::string(s.substr(0, slash))};
    Integer den{std::string(s.substr(slash + 1))};
    if (den == 0) fail(Errc::ParseError, "zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "malformed rational '" + std::string(s) + "'");
  }
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace onerel
