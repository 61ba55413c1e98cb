#ifndef SELINF_DISTS_HPP
#define SELINF_DISTS_HPP

namespace selinf {

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation with
// the symmetry switch at x = (a+1)/(a+b+2). Absolute accuracy ~1e-14.
double incomplete_beta(double a, double b, double x);

// P[|T_df| > |t|]
double t_survival_two_sided(double t, double df);

// P[F_{df1,df2} > x]; for df1 = 2 equals (1 + 2x/df2)^(-df2/2) exactly.
double f_survival(double x, double df1, double df2);

// P[chi^2_1 > x]
double chisq1_survival(double x);

// P[max of m iid chi^2_1 > x] = 1 - (1 - S1(x))^m
double max_chisq1_survival(double x, int m);

// Exponential law parameterized by mean (the spacing nulls are Exp(mean 1/j)).
struct ExpLaw {
  double mean = 1.0;
  double survival(double x) const;
  double cdf(double x) const { return 1.0 - survival(x); }
};

} // namespace selinf

#endif
