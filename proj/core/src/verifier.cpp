#include "bswitch/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

#include "bswitch/numeric.hpp"

namespace bswitch {

std::string to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Verified: return "Verified";
        case VerifyStatus::Falsified: return "Falsified";
        case VerifyStatus::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

namespace {

/// Ensures every variable of p is bounded by b and returns p extended to
/// the box's full (sorted) variable set so indices align.
MultiPoly align_to_box(const MultiPoly& p, const Box& b) {
    for (const auto& v : p.vars()) {
        if (!std::binary_search(b.names().begin(), b.names().end(), v)) {
            throw std::invalid_argument("verifier: variable '" + v +
                                        "' of the polynomial is not bounded by the box");
        }
    }
    return p.with_vars(b.names());
}

}  // namespace

Interval interval_eval(const MultiPoly& p, const Box& b, double slack) {
    const MultiPoly q = align_to_box(p, b);
    const auto& ranges = b.ranges();
    Interval sum{0.0, 0.0};
    for (const auto& [exps, c] : q.terms()) {
        Interval term{c, c};
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            term = imul(term, ipow_interval(ranges[i], exps[i], slack), slack);
        }
        sum = iadd(sum, term, slack);
    }
    return sum;
}

namespace {

/// Gradient/Hessian polynomials computed once per verification run.
class TaylorBounder {
public:
    TaylorBounder(MultiPoly p, const Box& box, double slack)
        : p_(std::move(p)), slack_(slack) {
        const size_t n = box.size();
        grad_.reserve(n);
        for (size_t i = 0; i < n; ++i) grad_.push_back(p_.differentiate(box.names()[i]));
        hess_.resize(n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = i; j < n; ++j) {
                hess_[i].push_back(grad_[i].differentiate(box.names()[j]));
            }
        }
    }

    double upper_bound(const Box& b) const {
        const size_t n = b.size();
        const auto y = b.midpoint();
        const auto w = b.half_widths();
        double bound = p_.eval(y);
        double abs_sum = std::fabs(bound);
        for (size_t i = 0; i < n; ++i) {
            const double grad_term = std::fabs(grad_[i].eval(y)) * w[i];
            bound += grad_term;
            abs_sum += grad_term;
            for (size_t j = i; j < n; ++j) {
                const MultiPoly& hij = hess_[i][j - i];
                if (hij.is_zero()) continue;
                const double mult = i == j ? 0.5 : 1.0;
                const double hess_term =
                    mult * interval_eval(hij, b, slack_).mag() * w[i] * w[j];
                bound += hess_term;
                abs_sum += hess_term;
            }
        }
        return bound + slack_ * abs_sum + std::numeric_limits<double>::denorm_min();
    }

    const MultiPoly& poly() const { return p_; }

private:
    MultiPoly p_;
    double slack_;
    std::vector<MultiPoly> grad_;
    std::vector<std::vector<MultiPoly>> hess_;  // upper triangle, row i holds j >= i
};

}  // namespace

double taylor_upper_bound(const MultiPoly& p, const Box& b, double slack) {
    return TaylorBounder(align_to_box(p, b), b, slack).upper_bound(b);
}

Certificate verify_ineq(const MultiPoly& p, const Box& b, const VerifyConfig& cfg) {
    if (!std::isfinite(cfg.epsilon)) {
        throw std::invalid_argument("verify_ineq: epsilon must be finite");
    }
    if (cfg.max_depth <= 0) throw std::invalid_argument("verify_ineq: max_depth must be > 0");
    if (cfg.max_boxes == 0) throw std::invalid_argument("verify_ineq: max_boxes must be > 0");
    if (!(cfg.slack_factor > 0.0)) {
        throw std::invalid_argument("verify_ineq: slack_factor must be > 0");
    }
    if (b.size() == 0 && !p.vars().empty()) {
        throw std::invalid_argument("verify_ineq: empty box for a non-constant polynomial");
    }

    const auto start = std::chrono::steady_clock::now();
    Certificate cert;
    cert.config = cfg;
    cert.vars = b.names();

    const TaylorBounder bounder(align_to_box(p, b), b, cfg.slack_factor);
    const MultiPoly& q = bounder.poly();
    const double pass_margin = cfg.slack_factor * std::max(1.0, std::fabs(cfg.epsilon));

    auto finish = [&](Certificate c) {
        c.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return c;
    };

    // A deterministic sampling sweep over the undecided box, run before
    // conceding Inconclusive; any sample at or above epsilon falsifies.
    auto sample_pass = [&](const Box& box, const std::string& reason) {
        std::mt19937_64 rng(0x5eed5eed5eed5eedULL);
        std::vector<double> x(box.size());
        for (int s = 0; s < 256; ++s) {
            for (size_t i = 0; i < box.size(); ++i) {
                const auto& r = box.ranges()[i];
                std::uniform_real_distribution<double> dist(r.lo, r.hi);
                x[i] = dist(rng);
            }
            const double v = q.eval(x);
            if (v >= cfg.epsilon) {
                cert.status = VerifyStatus::Falsified;
                cert.witness = x;
                cert.witness_value = v;
                return finish(cert);
            }
        }
        cert.status = VerifyStatus::Inconclusive;
        cert.reason = reason;
        return finish(cert);
    };

    struct WorkItem {
        Box box;
        int depth;
    };
    std::vector<WorkItem> stack;
    stack.push_back({b, 0});

    while (!stack.empty()) {
        if (cert.boxes_processed >= cfg.max_boxes) {
            return sample_pass(stack.back().box, "box budget exhausted (max_boxes=" +
                                                     std::to_string(cfg.max_boxes) + ")");
        }
        WorkItem item = std::move(stack.back());
        stack.pop_back();
        ++cert.boxes_processed;
        cert.max_depth_reached = std::max(cert.max_depth_reached, item.depth);

        double ub = bounder.upper_bound(item.box);
        ub = std::min(ub, interval_eval(q, item.box, cfg.slack_factor).hi);
        if (!std::isfinite(ub)) {
            cert.status = VerifyStatus::Inconclusive;
            cert.reason = "numeric: non-finite bound";
            return finish(cert);
        }
        if (ub < cfg.epsilon - pass_margin) continue;  // box certified

        const auto mid = item.box.midpoint();
        const double v = q.eval(mid);
        if (v >= cfg.epsilon) {
            cert.status = VerifyStatus::Falsified;
            cert.witness = mid;
            cert.witness_value = v;
            return finish(cert);
        }
        if (item.depth >= cfg.max_depth) {
            return sample_pass(item.box, "depth budget exhausted (max_depth=" +
                                             std::to_string(cfg.max_depth) + ")");
        }
        auto [left, right] = item.box.bisect(item.box.widest_dimension());
        stack.push_back({std::move(right), item.depth + 1});
        stack.push_back({std::move(left), item.depth + 1});
    }

    cert.status = VerifyStatus::Verified;
    return finish(cert);
}

void write_certificate(std::ostream& out, const Certificate& cert, const MultiPoly& p,
                       const Box& b) {
    out << "status=" << to_string(cert.status) << "\n";
    out << "polynomial=" << p.to_string() << "\n";
    out << "epsilon=" << repr(cert.config.epsilon) << "\n";
    std::string vars;
    for (const auto& v : b.names()) {
        if (!vars.empty()) vars += ",";
        vars += v;
    }
    out << "vars=" << vars << "\n";
    for (size_t i = 0; i < b.size(); ++i) {
        out << "box_" << b.names()[i] << "=" << repr(b.ranges()[i].lo) << ","
            << repr(b.ranges()[i].hi) << "\n";
    }
    if (cert.status == VerifyStatus::Falsified) {
        std::string witness;
        for (double w : cert.witness) {
            if (!witness.empty()) witness += ",";
            witness += repr(w);
        }
        out << "witness=" << witness << "\n";
        out << "witness_value=" << repr(cert.witness_value) << "\n";
    }
    if (cert.status == VerifyStatus::Inconclusive) {
        out << "reason=" << cert.reason << "\n";
    }
    out << "boxes_processed=" << cert.boxes_processed << "\n";
    out << "max_depth_reached=" << cert.max_depth_reached << "\n";
    out << "max_depth=" << cert.config.max_depth << "\n";
    out << "max_boxes=" << cert.config.max_boxes << "\n";
    out << "slack_factor=" << repr(cert.config.slack_factor) << "\n";
    out << "rigor=outward-slack floating point bounds; numerical certificate, "
           "not a formal proof\n";
}

}  // namespace bswitch
