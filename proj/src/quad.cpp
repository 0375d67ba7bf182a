#include "cstar/quad.hpp"

#include <cmath>

namespace cstar {

bool isSquarefree(std::uint64_t d) {
  for (std::uint64_t k = 2; k * k <= d; ++k)
    if (d % (k * k) == 0) return false;
  return true;
}

int QuadReal::sign() const {
  int sp = sgn(p_);
  int sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // opposite signs: compare p^2 against q^2 d.  Equality would mean sqrt(d)
  // is rational, impossible for squarefree d >= 2, so the element of larger
  // square wins.
  Rational lhs = p_ * p_;
  Rational rhs = q_ * q_ * Rational(d_);
  if (lhs == rhs) fail(Err::Internal, "p^2 == q^2 d with q != 0");
  return lhs > rhs ? sp : sq;
}

double QuadReal::toDouble() const {
  // sqrt(d) always embeds as the positive real root
  return cstar::toDouble(p_) + cstar::toDouble(q_) * std::sqrt(static_cast<double>(d_));
}

}  // namespace cstar
