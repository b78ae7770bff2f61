#include "bswitch/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bswitch {

double Interval::mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }

Interval make_interval(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
        throw std::invalid_argument("make_interval: requires finite lo <= hi");
    }
    return Interval{lo, hi};
}

Interval inflate(Interval a, double slack) {
    const double pad = slack * a.mag() + std::numeric_limits<double>::denorm_min();
    return Interval{a.lo - pad, a.hi + pad};
}

Interval iadd(Interval a, Interval b, double slack) {
    return inflate(Interval{a.lo + b.lo, a.hi + b.hi}, slack);
}

Interval isub(Interval a, Interval b, double slack) {
    return inflate(Interval{a.lo - b.hi, a.hi - b.lo}, slack);
}

Interval imul(Interval a, Interval b, double slack) {
    const double p1 = a.lo * b.lo;
    const double p2 = a.lo * b.hi;
    const double p3 = a.hi * b.lo;
    const double p4 = a.hi * b.hi;
    return inflate(Interval{std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})}, slack);
}

Interval iscale(Interval a, double c, double slack) {
    const double p1 = a.lo * c;
    const double p2 = a.hi * c;
    return inflate(Interval{std::min(p1, p2), std::max(p1, p2)}, slack);
}

Interval ipow_interval(Interval a, unsigned n, double slack) {
    if (n == 0) return Interval{1.0, 1.0};
    double lo_pow = 1.0, hi_pow = 1.0;
    for (unsigned i = 0; i < n; ++i) {
        lo_pow *= a.lo;
        hi_pow *= a.hi;
    }
    Interval out;
    if (n % 2 == 1) {
        out = Interval{lo_pow, hi_pow};
    } else if (a.lo >= 0.0) {
        out = Interval{lo_pow, hi_pow};
    } else if (a.hi <= 0.0) {
        out = Interval{hi_pow, lo_pow};
    } else {
        out = Interval{0.0, std::max(lo_pow, hi_pow)};
    }
    return inflate(out, slack);
}

Interval hull(Interval a, Interval b) {
    return Interval{std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Box::Box(std::vector<std::string> names, std::vector<Interval> ranges)
    : names_(std::move(names)), ranges_(std::move(ranges)) {
    if (names_.size() != ranges_.size()) {
        throw std::invalid_argument("Box: one interval per name");
    }
    if (names_.empty()) return;
    // Sort dimensions by name, carrying the intervals along.
    std::vector<size_t> order(names_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return names_[a] < names_[b]; });
    std::vector<std::string> sorted_names;
    std::vector<Interval> sorted_ranges;
    sorted_names.reserve(names_.size());
    sorted_ranges.reserve(ranges_.size());
    for (size_t idx : order) {
        sorted_names.push_back(std::move(names_[idx]));
        sorted_ranges.push_back(ranges_[idx]);
    }
    names_ = std::move(sorted_names);
    ranges_ = std::move(sorted_ranges);
    if (std::adjacent_find(names_.begin(), names_.end()) != names_.end()) {
        throw std::invalid_argument("Box: duplicate dimension name");
    }
    for (const auto& r : ranges_) {
        if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi) {
            throw std::invalid_argument("Box: invalid interval");
        }
    }
}

std::vector<double> Box::midpoint() const {
    std::vector<double> m(ranges_.size());
    for (size_t i = 0; i < ranges_.size(); ++i) m[i] = ranges_[i].midpoint();
    return m;
}

std::vector<double> Box::half_widths() const {
    std::vector<double> w(ranges_.size());
    for (size_t i = 0; i < ranges_.size(); ++i) w[i] = 0.5 * ranges_[i].width();
    return w;
}

size_t Box::widest_dimension() const {
    size_t best = 0;
    for (size_t i = 1; i < ranges_.size(); ++i) {
        if (ranges_[i].width() > ranges_[best].width()) best = i;
    }
    return best;
}

std::pair<Box, Box> Box::bisect(size_t dim) const {
    const double mid = ranges_[dim].midpoint();
    Box left = *this;
    Box right = *this;
    left.ranges_[dim].hi = mid;
    right.ranges_[dim].lo = mid;
    return {std::move(left), std::move(right)};
}

bool Box::contains(const std::vector<double>& x) const {
    if (x.size() != ranges_.size()) return false;
    for (size_t i = 0; i < ranges_.size(); ++i) {
        if (!ranges_[i].contains(x[i])) return false;
    }
    return true;
}

}  // namespace bswitch
