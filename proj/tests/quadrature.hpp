#pragma once

#include <cmath>
#include <functional>

#include "hillspectra/types.hpp"

namespace testutil {

using hillspectra::cxd;

// composite Simpson on [a, b] with n panels (n even)
inline cxd simpson(const std::function<cxd(double)>& f, double a, double b,
                   int n = 4096) {
  if (n % 2 != 0) ++n;
  double h = (b - a) / n;
  cxd sum = f(a) + f(b);
  for (int i = 1; i < n; ++i)
    sum += f(a + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
  return sum * (h / 3.0);
}

}  // namespace testutil
