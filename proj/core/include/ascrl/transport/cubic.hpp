#pragma once

#include <algorithm>
#include <cmath>

namespace ascrl::transport {

// Window as a cubic function of time since the last loss, in MSS units:
// w(t) = C * (t - K)^3 + w_max with K = cbrt(w_max * (1 - beta) / C).
// At t = 0 this yields beta * w_max; at t = K it returns to w_max.
inline double cubic_window(double t_since_loss_s, double w_max_mss, double c_cubic,
                           double beta) {
  const double k = std::cbrt(w_max_mss * (1.0 - beta) / c_cubic);
  const double d = t_since_loss_s - k;
  const double w = c_cubic * d * d * d + w_max_mss;
  return std::max(w, 1.0);
}

}  // namespace ascrl::transport
