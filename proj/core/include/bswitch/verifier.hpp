#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bswitch/interval.hpp"
#include "bswitch/poly.hpp"

namespace bswitch {

/// Budget and tolerance knobs for verify_ineq.
struct VerifyConfig {
    double epsilon = 0.0;
    int max_depth = 40;
    std::uint64_t max_boxes = 1'000'000;
    double slack_factor = kDefaultSlack;
};

enum class VerifyStatus { Verified, Falsified, Inconclusive };

std::string to_string(VerifyStatus s);

/// Outcome of a branch-and-bound run. Falsified carries a witness point
/// (ordered like `vars`) with eval(f, witness) >= epsilon exactly as
/// computed; Verified means every leaf box passed the bound test.
struct Certificate {
    VerifyStatus status = VerifyStatus::Inconclusive;
    std::vector<std::string> vars;
    std::vector<double> witness;  // Falsified only
    double witness_value = 0.0;   // Falsified only
    std::string reason;           // Inconclusive only
    std::uint64_t boxes_processed = 0;
    int max_depth_reached = 0;
    double elapsed_seconds = 0.0;  // wall time; never written to certificate files
    VerifyConfig config;
};

/// Natural interval extension of p over b: interval arithmetic term by term
/// with outward slack. Always contains {p(x) : x in b}. The box may bound a
/// superset of p's variables; every variable of p must be bounded.
Interval interval_eval(const MultiPoly& p, const Box& b, double slack = kDefaultSlack);

/// Second-order bound max_{x in b} p(x) <= p(y) + sum_i |dp/dx_i(y)| w_i
/// + 1/2 sum_ij H_ij w_i w_j with y the box midpoint, w the half-widths and
/// H_ij the interval magnitude of the second partials over b. Exact (within
/// slack) for affine p.
double taylor_upper_bound(const MultiPoly& p, const Box& b, double slack = kDefaultSlack);

/// Certify  forall x in b: p(x) < cfg.epsilon  by branch and bound.
///
/// Each box passes when min(taylor_upper_bound, interval hi) clears epsilon
/// minus a slack margin; otherwise the midpoint is tested for an outright
/// counterexample and the box is bisected along its widest dimension.
/// Budget exhaustion ends in Inconclusive after a seeded random sampling
/// pass that upgrades to Falsified when it can. Sequential and
/// deterministic: identical inputs give identical certificates.
Certificate verify_ineq(const MultiPoly& p, const Box& b, const VerifyConfig& cfg);

/// Flat key=value certificate, byte-reproducible across runs (elapsed time
/// is deliberately omitted; it is reported on the summary stream instead).
void write_certificate(std::ostream& out, const Certificate& cert, const MultiPoly& p,
                       const Box& b);

}  // namespace bswitch
