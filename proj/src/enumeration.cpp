#include "goeritz/enumeration.hpp"

#include <algorithm>
#include <tuple>

namespace goeritz {

std::vector<SpElement> enumerate_image(long p, const Int& kappa_max,
                                       const Int& axis_bound) {
  std::vector<SpElement> out;
  if (kappa_max < 2) return out;

  // Diagonal candidates: u = kp+1 and v = np+Delta with |u| + |v| <= kappa_max.
  std::vector<std::pair<Int, Int>> ks;  // (k, u)
  for (Int u = -(kappa_max - 1); u <= kappa_max - 1; ++u) {
    if (u == 0) continue;
    if (!divides(Int(p), u - 1)) continue;
    ks.emplace_back((u - 1) / p, u);
  }
  for (const auto& [k, u] : ks) {
    for (int delta : {1, -1}) {
      for (Int v = -(kappa_max - abs_val(u)); v <= kappa_max - abs_val(u); ++v) {
        if (v == 0) continue;
        if (!divides(Int(p), v - delta)) continue;
        Int n = (v - delta) / p;
        Int prod = u * v - delta;  // = l * m * p by the determinant condition
        Int lm = prod / p;
        if (lm * p != prod) continue;  // cannot happen; keep the guard

        auto push = [&](const Int& ell, const Int& m) {
          SpElement e{1, k, ell, m, n, delta, p};
          if (!e.determinant_condition_holds()) return;
          if (!in_B_p(e)) return;
          out.push_back(e);
        };

        if (lm == 0) {
          push(0, 0);
          for (Int t = 1; t <= axis_bound; ++t) {
            push(t, 0);
            push(-t, 0);
            push(0, t);
            push(0, -t);
          }
        } else {
          Int a = abs_val(lm);
          for (Int d = 1; d * d <= a; ++d) {
            if (a % d != 0) continue;
            Int q = a / d;
            push(d, lm / d);
            push(-d, lm / -d);
            if (q != d) {
              push(q, lm / q);
              push(-q, lm / -q);
            }
          }
        }
      }
    }
  }

  auto key = [](const SpElement& e) {
    return std::make_tuple(kappa(e), e.k, e.ell, e.m, e.n, Int(e.delta));
  };
  std::sort(out.begin(), out.end(),
            [&](const SpElement& a, const SpElement& b) { return key(a) < key(b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace goeritz
