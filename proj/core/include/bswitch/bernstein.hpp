#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bswitch/poly.hpp"

namespace bswitch {

/// Degree-m Bernstein approximant of a scalar function on [lo, hi].
///
/// samples[r] holds f(lo + (r/m)*(hi-lo)). Evaluation runs the de Casteljau
/// recurrence on the normalized coordinate t = (x-lo)/(hi-lo), clamped to
/// [0, 1] for arguments outside the domain. If all samples lie in [0, 1]
/// the value does too (every de Casteljau stage is a convex combination).
class BernsteinSeries {
public:
    BernsteinSeries(unsigned degree, double lo, double hi, std::vector<double> samples);

    unsigned degree() const { return degree_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    const std::vector<double>& samples() const { return samples_; }

private:
    unsigned degree_;
    double lo_;
    double hi_;
    std::vector<double> samples_;
};

/// Bernstein basis value C(m,r) t^r (1-t)^{m-r}.
///
/// Computed multiplicatively for moderate degrees and in log space beyond,
/// never through raw factorials. Throws if r > m or t is outside [0, 1].
double bernstein_basis(unsigned m, unsigned r, double t);

/// Sample f at the m+1 equispaced nodes of [lo, hi]. Throws if m < 1,
/// lo >= hi, or a sample comes back non-finite (the message names the node).
BernsteinSeries series_from_function(const std::function<double(double)>& f, unsigned m,
                                     double lo, double hi);

double eval_series(const BernsteinSeries& s, double x);

/// Series sampling the 0/1 step with its jump at `jump`; a node landing
/// exactly on the jump takes the midpoint value 0.5.
BernsteinSeries step_series(unsigned m, double lo, double hi, double jump);

/// Chain of series applied innermost-first: stages[1](stages[0](x))...
struct ComposedSignal {
    std::vector<BernsteinSeries> stages;

    double operator()(double x) const {
        for (const auto& s : stages) x = eval_series(s, x);
        return x;
    }
};

ComposedSignal compose(const BernsteinSeries& outer, const BernsteinSeries& inner);
ComposedSignal compose(const BernsteinSeries& outer, ComposedSignal inner);

/// State-dependent switching weight w(x1, x2) in [0, 1]: the Bernstein step
/// interpolant on [-1, 1] evaluated at u = delta*x1*x2 (clamped). The
/// complementary weight is 1 - w. compose_depth > 0 sharpens the transition
/// by chaining step interpolants on [0, 1] with the jump at 0.5.
class SignWeight {
public:
    SignWeight(double delta, ComposedSignal chain)
        : delta_(delta), chain_(std::move(chain)) {}

    double operator()(double x1, double x2) const { return chain_(delta_ * x1 * x2); }
    double delta() const { return delta_; }
    const ComposedSignal& chain() const { return chain_; }

private:
    double delta_;
    ComposedSignal chain_;
};

SignWeight sign_interpolant(unsigned m, double delta, unsigned compose_depth = 0);

/// Series on [0, 1] sampling the indicator of [t0, t1]. Throws unless
/// 0 <= t0 < t1 <= 1.
BernsteinSeries pulse_interpolant(unsigned m, double t0, double t1);

/// Series on [0, 1] sampling the indicator of a union of windows
/// (each window already validated to lie in [0, 1] with t0 < t1).
/// An empty window list yields the all-zero series.
BernsteinSeries pulse_union(unsigned m, std::span<const std::pair<double, double>> windows);

constexpr unsigned kDefaultExpansionLimit = 30;

/// Expand the series into monomial coefficients of the normalized variable
/// t = (x-lo)/(hi-lo) in [0, 1]. Monomial conversion is ill-conditioned at
/// high degree, so degrees above `expansion_limit` are rejected with advice
/// to stay on the evaluation path.
MultiPoly to_poly(const BernsteinSeries& s, const std::string& var = "t",
                  unsigned expansion_limit = kDefaultExpansionLimit);

}  // namespace bswitch
