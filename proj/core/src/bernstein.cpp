#include "bswitch/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bswitch/numeric.hpp"

namespace bswitch {

BernsteinSeries::BernsteinSeries(unsigned degree, double lo, double hi,
                                 std::vector<double> samples)
    : degree_(degree), lo_(lo), hi_(hi), samples_(std::move(samples)) {
    if (degree_ < 1) throw std::invalid_argument("BernsteinSeries: degree must be >= 1");
    if (!(lo_ < hi_)) throw std::invalid_argument("BernsteinSeries: requires lo < hi");
    if (!std::isfinite(lo_) || !std::isfinite(hi_)) {
        throw std::invalid_argument("BernsteinSeries: non-finite domain");
    }
    if (samples_.size() != static_cast<size_t>(degree_) + 1) {
        throw std::invalid_argument("BernsteinSeries: expected " +
                                    std::to_string(degree_ + 1) + " samples, got " +
                                    std::to_string(samples_.size()));
    }
}

double bernstein_basis(unsigned m, unsigned r, double t) {
    if (r > m) {
        throw std::invalid_argument("bernstein_basis: index r=" + std::to_string(r) +
                                    " out of range for degree m=" + std::to_string(m));
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::invalid_argument("bernstein_basis: t must lie in [0, 1]");
    }
    if (t == 0.0) return r == 0 ? 1.0 : 0.0;
    if (t == 1.0) return r == m ? 1.0 : 0.0;
    if (m <= 400) {
        return binomial_real(m, r) * ipow(t, r) * ipow(1.0 - t, m - r);
    }
    // Log space for very high degrees where the direct product under/overflows.
    const double lc = std::lgamma(m + 1.0) - std::lgamma(r + 1.0) - std::lgamma(m - r + 1.0);
    const double lv = lc + r * std::log(t) + (m - r) * std::log1p(-t);
    return std::exp(lv);
}

BernsteinSeries series_from_function(const std::function<double(double)>& f, unsigned m,
                                     double lo, double hi) {
    if (m < 1) throw std::invalid_argument("series_from_function: degree must be >= 1");
    if (!(lo < hi)) throw std::invalid_argument("series_from_function: requires lo < hi");
    std::vector<double> samples(m + 1);
    for (unsigned r = 0; r <= m; ++r) {
        const double node = lo + (static_cast<double>(r) / m) * (hi - lo);
        const double v = f(node);
        if (!std::isfinite(v)) {
            throw std::domain_error("series_from_function: non-finite sample " +
                                    repr(v) + " at node r=" + std::to_string(r) +
                                    " (x=" + repr(node) + ")");
        }
        samples[r] = v;
    }
    return BernsteinSeries(m, lo, hi, std::move(samples));
}

double eval_series(const BernsteinSeries& s, double x) {
    double t = (x - s.lo()) / (s.hi() - s.lo());
    t = std::clamp(t, 0.0, 1.0);
    std::vector<double> scratch = s.samples();
    const double u = 1.0 - t;
    for (size_t k = scratch.size() - 1; k >= 1; --k) {
        for (size_t i = 0; i < k; ++i) {
            scratch[i] = u * scratch[i] + t * scratch[i + 1];
        }
    }
    return scratch[0];
}

BernsteinSeries step_series(unsigned m, double lo, double hi, double jump) {
    if (m < 1) throw std::invalid_argument("step_series: degree must be >= 1");
    if (!(lo < hi)) throw std::invalid_argument("step_series: requires lo < hi");
    std::vector<double> samples(m + 1);
    for (unsigned r = 0; r <= m; ++r) {
        const double node = lo + (static_cast<double>(r) / m) * (hi - lo);
        samples[r] = node < jump ? 0.0 : (node > jump ? 1.0 : 0.5);
    }
    return BernsteinSeries(m, lo, hi, std::move(samples));
}

ComposedSignal compose(const BernsteinSeries& outer, const BernsteinSeries& inner) {
    return ComposedSignal{{inner, outer}};
}

ComposedSignal compose(const BernsteinSeries& outer, ComposedSignal inner) {
    inner.stages.push_back(outer);
    return inner;
}

SignWeight sign_interpolant(unsigned m, double delta, unsigned compose_depth) {
    if (!(delta > 0.0)) throw std::invalid_argument("sign_interpolant: delta must be > 0");
    ComposedSignal chain{{step_series(m, -1.0, 1.0, 0.0)}};
    for (unsigned d = 0; d < compose_depth; ++d) {
        chain = compose(step_series(m, 0.0, 1.0, 0.5), std::move(chain));
    }
    return SignWeight(delta, std::move(chain));
}

BernsteinSeries pulse_interpolant(unsigned m, double t0, double t1) {
    if (!(t0 < t1)) throw std::invalid_argument("pulse_interpolant: requires t0 < t1");
    if (!(t0 >= 0.0 && t1 <= 1.0)) {
        throw std::invalid_argument("pulse_interpolant: window must lie in [0, 1]");
    }
    const std::pair<double, double> window{t0, t1};
    return pulse_union(m, std::span(&window, 1));
}

BernsteinSeries pulse_union(unsigned m, std::span<const std::pair<double, double>> windows) {
    if (m < 1) throw std::invalid_argument("pulse_union: degree must be >= 1");
    std::vector<double> samples(m + 1, 0.0);
    for (unsigned r = 0; r <= m; ++r) {
        const double node = static_cast<double>(r) / m;
        double v = 0.0;
        for (const auto& [t0, t1] : windows) {
            // A window edge interior to [0, 1] is a genuine jump and takes
            // the midpoint value; an edge on the domain boundary does not.
            if ((node == t0 && t0 > 0.0) || (node == t1 && t1 < 1.0)) {
                v = std::max(v, 0.5);
            } else if (node >= t0 && node <= t1) {
                v = 1.0;
                break;
            }
        }
        samples[r] = v;
    }
    return BernsteinSeries(m, 0.0, 1.0, std::move(samples));
}

MultiPoly to_poly(const BernsteinSeries& s, const std::string& var,
                  unsigned expansion_limit) {
    const unsigned m = s.degree();
    if (m > expansion_limit) {
        throw std::domain_error(
            "to_poly: degree " + std::to_string(m) + " exceeds the expansion limit " +
            std::to_string(expansion_limit) +
            "; monomial conversion is ill-conditioned there, use eval_series instead");
    }
    // Monomial coefficients via forward differences: a_j = C(m,j) D^j s_0.
    // Unlike the naive double-binomial expansion this never cancels huge
    // intermediates, so smooth sample vectors convert to near machine
    // accuracy.
    const std::vector<double> choose = binomial_row(m);
    std::vector<double> diff = s.samples();
    MultiPoly out = MultiPoly::constant(0.0);
    for (unsigned j = 0; j <= m; ++j) {
        const double coeff = choose[j] * diff[0];
        if (coeff != 0.0) {
            out = out + MultiPoly::monomial({var}, {j}, coeff);
        }
        for (size_t i = 0; i + j + 1 < diff.size(); ++i) {
            diff[i] = diff[i + 1] - diff[i];
        }
    }
    return out;
}

}  // namespace bswitch
