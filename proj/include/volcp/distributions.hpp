#pragma once

// Limit distributions used by the test statistics.
//
//   Gumbel-type law:      F(x) = exp(-exp(-x) / sqrt(pi))
//   Kolmogorov-Smirnov:   K(x) = 1 - 2 * sum_{k>=1} (-1)^{k-1} exp(-2 k^2 x^2)
//
// Quantiles invert these maps; the Gumbel-type inverse is closed form,
// the KS inverse is computed by bisection.

namespace volcp {

// F(x) = exp(-exp(-x)/sqrt(pi)), valid for all real x.
double ev_cdf(double x);

// F^{-1}(p) = -log(-sqrt(pi) * log(p)), requires p in (0,1).
double ev_quantile(double p);

// K(x) as the alternating series; K(x) = 0 for x <= 0.
double ks_cdf(double x);

// K^{-1}(p), requires p in (0,1).
double ks_quantile(double p);

}  // namespace volcp
