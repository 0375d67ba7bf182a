#include "cstar/numeric.hpp"

#include <ostream>

namespace cstar {

std::ostream& operator<<(std::ostream& os, const Int& a) { return os << a.raw(); }

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.raw(); }

}  // namespace cstar
