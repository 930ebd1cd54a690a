#pragma once

#include "dhl/params.hpp"

namespace fixtures {

inline dhl::ModelParams figure1() { return dhl::ModelParams::parse("53/3", "34/3", "1/6", 6); }
inline dhl::ModelParams figure2() { return dhl::ModelParams::parse("19", "23/2", "1/4", 6); }
// Admissible, outside both transfer families.
inline dhl::ModelParams generic(int N = 5) {
  dhl::ModelParams p;
  p.N = N;
  p.c = dhl::Rational(1, 3);
  p.b = dhl::Rational(N) + dhl::Rational(27, 10);
  p.a = p.b + N + dhl::Rational(4, 3);
  return p;
}

}  // namespace fixtures
