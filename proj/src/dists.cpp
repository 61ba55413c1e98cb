#include "selinf/dists.hpp"
#include "selinf/error.hpp"

#include <cmath>

namespace selinf {

namespace {

// Lentz's algorithm for the continued fraction of I_x(a,b).
double betacf(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-15;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

} // namespace

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error("incomplete_beta: a, b must be > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double lnfront = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                         a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(lnfront);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
  return 1.0 - std::exp(std::lgamma(a + b) - std::lgamma(b) - std::lgamma(a) +
                        b * std::log1p(-x) + a * std::log(x)) *
                   betacf(b, a, 1.0 - x) / b;
}

double t_survival_two_sided(double t, double df) {
  if (df < 1.0) throw Error("t_survival_two_sided: df must be >= 1");
  const double t2 = t * t;
  return incomplete_beta(0.5 * df, 0.5, df / (df + t2));
}

double f_survival(double x, double df1, double df2) {
  if (df1 < 1.0 || df2 < 1.0) throw Error("f_survival: dfs must be >= 1");
  if (x <= 0.0) return 1.0;
  return incomplete_beta(0.5 * df2, 0.5 * df1, df2 / (df2 + df1 * x));
}

double chisq1_survival(double x) {
  if (x <= 0.0) return 1.0;
  return std::erfc(std::sqrt(0.5 * x));
}

double max_chisq1_survival(double x, int m) {
  if (m < 1) throw Error("max_chisq1_survival: m must be >= 1");
  const double s1 = chisq1_survival(x);
  if (m == 1) return s1;
  // 1 - (1 - s1)^m, computed stably for small s1
  return -std::expm1(static_cast<double>(m) * std::log1p(-s1));
}

double ExpLaw::survival(double x) const {
  if (x <= 0.0) return 1.0;
  return std::exp(-x / mean);
}

} // namespace selinf
