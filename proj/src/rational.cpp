#include "filiform/rational.hpp"

#include <stdexcept>

namespace filiform {

Rat parse_rational(const std::string& text) {
  mpq_class q;
  try {
    if (q.set_str(text, 10) != 0) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& value) { return value.get_str(); }

}  // namespace filiform
