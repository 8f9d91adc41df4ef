#include "lampspec/rational.hpp"

#include <cctype>

#include "lampspec/errors.hpp"

namespace lampspec {

std::string to_fraction_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_fraction(const std::string& text) {
  if (text.empty()) throw parameter_error("parse_fraction: empty string");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+')
      throw parameter_error("parse_fraction: bad character in \"" + text + "\"");
  }
  Rat q;
  if (q.set_str(text, 10) != 0)
    throw parameter_error("parse_fraction: cannot parse \"" + text + "\"");
  if (q.get_den() == 0) throw parameter_error("parse_fraction: zero denominator");
  q.canonicalize();
  return q;
}

bool denominator_is_power_of(const Rat& q, unsigned long prime) {
  if (prime < 2) throw parameter_error("denominator_is_power_of: prime must be >= 2");
  Int den = q.get_den();  // canonical, positive
  while (den % prime == 0) den /= prime;
  return den == 1;
}

}  // namespace lampspec
