#include "bswitch/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bswitch/bernstein.hpp"

namespace bswitch {

LyapunovCandidate::LyapunovCandidate(MultiPoly v) : V(std::move(v)) {
    const MultiPoly::Exponents origin(V.vars().size(), 0);
    if (V.coefficient(origin) != 0.0) {
        throw std::invalid_argument("LyapunovCandidate: V(0) must be 0 (constant term found)");
    }
}

PolyVectorField::PolyVectorField(std::vector<std::string> vars, std::vector<MultiPoly> comps)
    : state_vars(std::move(vars)), components(std::move(comps)) {
    if (state_vars.size() != components.size()) {
        throw std::invalid_argument("PolyVectorField: one component per state variable");
    }
    std::vector<std::string> sorted = state_vars;
    std::sort(sorted.begin(), sorted.end());
    for (auto& c : components) {
        for (const auto& v : c.vars()) {
            if (!std::binary_search(sorted.begin(), sorted.end(), v)) {
                throw std::invalid_argument("PolyVectorField: component uses unknown "
                                            "variable '" + v + "'");
            }
        }
        c = c.with_vars(sorted);
    }
}

std::vector<std::string> state_var_names(size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

LyapunovCandidate quadratic_candidate(const Mat& P) {
    if (!P.square()) throw std::invalid_argument("quadratic_candidate: P must be square");
    if (!P.all_finite()) throw std::invalid_argument("quadratic_candidate: P must be finite");
    const size_t n = P.rows();
    double scale = 0.0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) scale = std::max(scale, std::fabs(P(i, j)));
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (std::fabs(P(i, j) - P(j, i)) > 1e-12 * std::max(1.0, scale)) {
                throw std::invalid_argument("quadratic_candidate: P is not symmetric");
            }
        }
    }
    const auto names = state_var_names(n);
    MultiPoly V(names);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            const double c = i == j ? P(i, i) : P(i, j) + P(j, i);
            if (c == 0.0) continue;
            MultiPoly::Exponents exps(n, 0);
            exps[i] += 1;
            exps[j] += 1;
            V = V + MultiPoly::monomial(names, exps, c);
        }
    }
    return LyapunovCandidate(std::move(V));
}

MultiPoly lie_derivative(const LyapunovCandidate& V, const PolyVectorField& f) {
    std::vector<std::string> sorted = f.state_vars;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& v : V.V.vars()) {
        if (!std::binary_search(sorted.begin(), sorted.end(), v)) {
            throw std::invalid_argument("lie_derivative: V uses variable '" + v +
                                        "' absent from the vector field");
        }
    }
    const MultiPoly v_full = V.V.with_vars(sorted);
    MultiPoly out(sorted);
    for (size_t i = 0; i < f.state_vars.size(); ++i) {
        out = out + v_full.differentiate(f.state_vars[i]) * f.components[i];
    }
    return out;
}

PolyVectorField vector_field_from_linear(const Mat& A) {
    if (!A.square()) throw std::invalid_argument("vector_field_from_linear: A must be square");
    const size_t n = A.rows();
    const auto names = state_var_names(n);
    std::vector<MultiPoly> comps;
    comps.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        MultiPoly row(names);
        for (size_t j = 0; j < n; ++j) {
            if (A(i, j) == 0.0) continue;
            MultiPoly::Exponents exps(n, 0);
            exps[j] = 1;
            row = row + MultiPoly::monomial(names, exps, A(i, j));
        }
        comps.push_back(std::move(row));
    }
    return PolyVectorField(names, std::move(comps));
}

PolyVectorField vector_field_bswitched(const SwitchedSystem& sys, unsigned expansion_limit) {
    const auto* rule = std::get_if<StateSignRule>(&sys.rule());
    if (rule == nullptr) {
        throw std::invalid_argument("vector_field_bswitched: needs a blended state-sign rule");
    }
    const unsigned effective_degree =
        rule->composed ? rule->degree * rule->degree : rule->degree;
    if (effective_degree > expansion_limit) {
        throw std::domain_error(
            "vector_field_bswitched: effective weight degree " +
            std::to_string(effective_degree) + " exceeds the expansion limit " +
            std::to_string(expansion_limit) + "; use a smaller m for verification");
    }

    // Step weight as a polynomial in the normalized blend variable t.
    MultiPoly w_t = to_poly(step_series(rule->degree, -1.0, 1.0, 0.0), "t", expansion_limit);
    if (rule->composed) {
        const MultiPoly outer =
            to_poly(step_series(rule->degree, 0.0, 1.0, 0.5), "t", expansion_limit);
        w_t = outer.substitute("t", w_t);
    }

    // t = (delta*x1*x2 + 1)/2, the affine map of [-1, 1] onto [0, 1].
    const size_t n = sys.dimension();
    const auto names = state_var_names(n);
    MultiPoly::Exponents cross(n, 0);
    cross[0] = 1;
    cross[1] = 1;
    const MultiPoly u = MultiPoly::monomial(names, cross, 0.5 * rule->delta) +
                        MultiPoly::constant(0.5);
    const MultiPoly w = w_t.vars().empty() ? w_t : w_t.substitute("t", u);

    // field = A2 x + w * (A1 x - A2 x); the difference form cancels exactly
    // when the subsystems coincide.
    const PolyVectorField f1 = vector_field_from_linear(sys.subsystems()[0].A);
    const PolyVectorField f2 = vector_field_from_linear(sys.subsystems()[1].A);
    std::vector<MultiPoly> comps;
    comps.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        comps.push_back(f2.components[i] + w * (f1.components[i] - f2.components[i]));
    }
    return PolyVectorField(names, std::move(comps));
}

}  // namespace bswitch
