#include "nilo/rational.hpp"

#include <ostream>

namespace nilo {

std::ostream& operator<<(std::ostream& os, const Rational& a) {
  return os << a.to_string();
}

}  // namespace nilo
