#include "f4/rat.hpp"

#include <stdexcept>

namespace f4 {

std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(BigInt(s));
    }
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    }
    return Rat(num) / Rat(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("rat_from_string: malformed rational '" + s + "'");
  }
}

}  // namespace f4
