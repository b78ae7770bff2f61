#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bswitch {

/// Default relative outward inflation applied after every interval
/// operation. This replaces directed rounding: each result is widened by
/// slack*max(|lo|,|hi|) plus one denormal, which dominates the worst-case
/// rounding error of the underlying double arithmetic by several orders of
/// magnitude. Honest numerical rigor, not a formal proof.
constexpr double kDefaultSlack = 1e-12;

/// Closed real interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double v) const { return lo <= v && v <= hi; }
    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    /// Magnitude: max |v| over the interval.
    double mag() const;

    bool operator==(const Interval& other) const = default;
};

/// Validating constructor; throws unless lo <= hi and both are finite.
Interval make_interval(double lo, double hi);

Interval inflate(Interval a, double slack = kDefaultSlack);
Interval iadd(Interval a, Interval b, double slack = kDefaultSlack);
Interval isub(Interval a, Interval b, double slack = kDefaultSlack);
Interval imul(Interval a, Interval b, double slack = kDefaultSlack);
Interval iscale(Interval a, double c, double slack = kDefaultSlack);
/// a^n with the even-power tightening around zero.
Interval ipow_interval(Interval a, unsigned n, double slack = kDefaultSlack);
Interval hull(Interval a, Interval b);

/// Axis-aligned rectangle with named dimensions, sorted by name so it can be
/// aligned with MultiPoly variables directly.
class Box {
public:
    Box() = default;
    /// Throws on duplicate names or invalid intervals.
    Box(std::vector<std::string> names, std::vector<Interval> ranges);

    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Interval>& ranges() const { return ranges_; }
    size_t size() const { return names_.size(); }

    std::vector<double> midpoint() const;
    std::vector<double> half_widths() const;
    /// Widest dimension; ties resolve to the lowest index for determinism.
    size_t widest_dimension() const;
    std::pair<Box, Box> bisect(size_t dim) const;
    bool contains(const std::vector<double>& x) const;

private:
    std::vector<std::string> names_;
    std::vector<Interval> ranges_;
};

}  // namespace bswitch
