#pragma once

#include <string>
#include <vector>

#include "bswitch/matrix.hpp"
#include "bswitch/poly.hpp"
#include "bswitch/switched.hpp"

namespace bswitch {

/// Polynomial Lyapunov candidate; construction enforces V(0) = 0 (no
/// constant term).
struct LyapunovCandidate {
    MultiPoly V;

    explicit LyapunovCandidate(MultiPoly v);
};

/// Polynomial vector field dx_i/dt = components[i](x) over state variables
/// state_vars (x1..xn by default). Every component may only use state_vars.
struct PolyVectorField {
    std::vector<std::string> state_vars;
    std::vector<MultiPoly> components;

    PolyVectorField(std::vector<std::string> vars, std::vector<MultiPoly> comps);
};

/// Conventional state variable names x1..xn.
std::vector<std::string> state_var_names(size_t n);

/// V(x) = x^T P x. Throws unless P is (numerically) symmetric and finite.
LyapunovCandidate quadratic_candidate(const Mat& P);

/// Vdot = sum_i dV/dx_i * f_i, the derivative of V along f.
MultiPoly lie_derivative(const LyapunovCandidate& V, const PolyVectorField& f);

/// Linear field component i = sum_j A_ij x_j.
PolyVectorField vector_field_from_linear(const Mat& A);

/// Explicit polynomial form of the blended right-hand side for a state-sign
/// rule: the degree-m step weight is expanded into monomials of the
/// normalized blend variable and u = (delta*x1*x2 + 1)/2 is substituted.
///
/// Polynomials cannot clamp, so the result matches rhs_bswitched only where
/// |delta*x1*x2| <= 1; the verifier's box must respect that region. Degrees
/// above `expansion_limit` (composed rules: degree squared) are rejected.
PolyVectorField vector_field_bswitched(const SwitchedSystem& sys,
                                       unsigned expansion_limit = kDefaultExpansionLimit);

}  // namespace bswitch
