#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracles {

std::uint32_t crc24_long_division(const std::vector<std::uint8_t>& bits) {
  // Dividend = message followed by 24 zeros; generator = 25-bit 0x1FFF409.
  std::vector<std::uint8_t> dividend(bits);
  dividend.insert(dividend.end(), 24, 0u);
  const std::uint32_t gen = 0x1FFF409;
  std::vector<std::uint8_t> gbits(25);
  for (int i = 0; i < 25; ++i) gbits[i] = (gen >> (24 - i)) & 1u;

  for (size_t i = 0; i + 25 <= dividend.size(); ++i) {
    if (dividend[i]) {
      for (int j = 0; j < 25; ++j) dividend[i + j] ^= gbits[j];
    }
  }
  std::uint32_t rem = 0;
  for (size_t i = dividend.size() - 24; i < dividend.size(); ++i)
    rem = (rem << 1) | dividend[i];
  return rem;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 int intervals) {
  if (intervals % 2) ++intervals;
  double h = (b - a) / intervals;
  double s = f(a) + f(b);
  for (int i = 1; i < intervals; ++i)
    s += f(a + i * h) * ((i % 2) ? 4.0 : 2.0);
  return s * h / 3.0;
}

namespace {

double eval_poly(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (double ck : c) v = v * x + ck;
  return v;
}

std::vector<double> derivative(const std::vector<double>& c) {
  int deg = static_cast<int>(c.size()) - 1;
  std::vector<double> d(deg);
  for (int i = 0; i < deg; ++i) d[i] = c[i] * (deg - i);
  return d;
}

double bisect(const std::vector<double>& c, double lo, double hi) {
  double flo = eval_poly(c, lo);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = eval_poly(c, mid);
    if ((flo < 0) == (fm < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> real_roots(std::vector<double> coeffs) {
  // Normalize and strip a (numerically) zero leading coefficient.
  while (coeffs.size() > 1 && std::abs(coeffs.front()) < 1e-300)
    coeffs.erase(coeffs.begin());
  int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg <= 0) return {};
  double lead = coeffs.front();
  for (double& c : coeffs) c /= lead;
  if (deg == 1) return {-coeffs[1]};

  // Cauchy bound on root magnitude.
  double bound = 0.0;
  for (int i = 1; i <= deg; ++i) bound = std::max(bound, std::abs(coeffs[i]));
  bound += 1.0;

  std::vector<double> crit = real_roots(derivative(coeffs));
  std::sort(crit.begin(), crit.end());
  std::vector<double> pts;
  pts.push_back(-bound);
  for (double c : crit) pts.push_back(c);
  pts.push_back(bound);

  std::vector<double> roots;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    double a = pts[i], b = pts[i + 1];
    double fa = eval_poly(coeffs, a), fb = eval_poly(coeffs, b);
    if (fa == 0.0) {
      roots.push_back(a);
      continue;
    }
    if ((fa < 0) != (fb < 0)) {
      roots.push_back(bisect(coeffs, a, b));
    } else if (std::abs(fb) < 1e-11 * (1.0 + std::abs(fa)) && i + 2 == pts.size()) {
      roots.push_back(b);
    }
  }
  // Near-multiple roots can slip between brackets; accept critical points
  // where the polynomial is numerically zero.
  for (double c : crit) {
    if (std::abs(eval_poly(coeffs, c)) < 1e-10) {
      bool dup = false;
      for (double r : roots) dup |= std::abs(r - c) < 1e-8 * (1.0 + std::abs(c));
      if (!dup) roots.push_back(c);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> hermitian_eigenvalues_charpoly(
    const std::vector<std::complex<double>>& m, int n) {
  using cd = std::complex<double>;
  auto idx = [n](int r, int c) { return static_cast<size_t>(r) * n + c; };
  // Faddeev-LeVerrier: M_1 = A, c_1 = -tr(M_1);
  // M_{k+1} = A (M_k + c_k I), c_{k+1} = -tr(M_{k+1}) / (k+1).
  std::vector<cd> mk(m);
  std::vector<double> coeffs(n + 1, 0.0);
  coeffs[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    cd tr = 0.0;
    for (int i = 0; i < n; ++i) tr += mk[idx(i, i)];
    double ck = -tr.real() / k;
    coeffs[k] = ck;
    if (k == n) break;
    std::vector<cd> tmp(mk);
    for (int i = 0; i < n; ++i) tmp[idx(i, i)] += ck;
    std::vector<cd> next(static_cast<size_t>(n) * n, cd(0.0));
    for (int r = 0; r < n; ++r)
      for (int j = 0; j < n; ++j) {
        cd s = 0.0;
        for (int k2 = 0; k2 < n; ++k2) s += m[idx(r, k2)] * tmp[idx(k2, j)];
        next[idx(r, j)] = s;
      }
    mk.swap(next);
  }
  std::vector<double> roots = real_roots(coeffs);
  std::sort(roots.begin(), roots.end(), std::greater<double>());
  return roots;
}

}  // namespace oracles
