#pragma once

#include <vector>

#include "kelem.hpp"

namespace qident {

/* The normalized sine ratios
 *     s_k(n) = sin((2n+1) k pi / 20) / sin(k pi / 20)
 * as exact field elements, via the Chebyshev-type recurrence
 *     s_k(0) = 1,  s_k(1) = 2 c_k + 1,  s_k(n+1) = 2 c_k s_k(n) - s_k(n-1),
 * where 2 c_k = 2 cos(k pi / 10) = -alpha(k).  The sequence is periodic
 * with period 20 and antisymmetric around n = 19/2.                        */
inline std::vector<KElem> sine_ratio_table(int k, int count) {
  std::vector<KElem> s;
  s.reserve(static_cast<std::size_t>(count));
  KElem two_c = k_neg(alpha_coeff(k));
  if (count > 0) s.push_back(KElem(1));
  if (count > 1) s.push_back(k_add(two_c, KElem(1)));
  for (int n = 2; n < count; ++n) {
    s.push_back(k_sub(k_mul(two_c, s[static_cast<std::size_t>(n - 1)]),
                      s[static_cast<std::size_t>(n - 2)]));
  }
  return s;
}

}  // namespace qident
