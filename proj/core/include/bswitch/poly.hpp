#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

namespace bswitch {

/// Sparse multivariate polynomial over named variables.
///
/// Variables are kept sorted by name; each term maps an exponent vector
/// (one entry per variable, aligned with vars()) to a nonzero double
/// coefficient. Zero coefficients are never stored, so the zero polynomial
/// has an empty term map. Values are immutable after construction and all
/// operations are pure, so instances can be shared across threads.
///
/// Evaluation is deterministic: terms are summed in the fixed ascending
/// lexicographic order of the underlying map.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, double>;

    /// Zero polynomial with no variables.
    MultiPoly() = default;

    /// Zero polynomial over the given variables (sorted internally).
    /// Throws std::invalid_argument on duplicate or malformed names.
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(double c);
    static MultiPoly variable(const std::string& name);

    /// Single monomial c * prod vars[i]^exps[i]. `exps` is aligned with the
    /// order of `vars` as given; variables are sorted internally.
    static MultiPoly monomial(std::vector<std::string> vars, Exponents exps, double c);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;

    /// Coefficient of the given exponent vector (0 if absent).
    double coefficient(const Exponents& exps) const;

    /// Value at x, aligned with vars(). Throws on dimension mismatch.
    double eval(std::span<const double> x) const;

    /// Formal partial derivative. Throws if `var` is not a variable of this
    /// polynomial.
    MultiPoly differentiate(const std::string& var) const;

    /// Replace `var` by the polynomial `replacement` (exact composition).
    MultiPoly substitute(const std::string& var, const MultiPoly& replacement) const;

    /// Same polynomial over a superset of its variables (sorted, unique).
    /// Throws if `superset` is missing one of the current variables.
    MultiPoly with_vars(const std::vector<std::string>& superset) const;

    /// Canonical text form: monomials in descending lexicographic exponent
    /// order, `coeff*var^exp` factors joined by `*`, terms joined by
    /// " + " / " - ". Round-trips through parse() bit-exactly.
    std::string to_string() const;

    /// Parse the canonical text form. Throws std::invalid_argument with a
    /// position-bearing message on malformed input.
    static MultiPoly parse(const std::string& text);

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, double c);
    friend MultiPoly operator*(double c, const MultiPoly& a);
    friend MultiPoly operator-(const MultiPoly& a);

    bool operator==(const MultiPoly& other) const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void insert_term(const Exponents& exps, double c);
    static void check_name(const std::string& name);
};

/// Named aliases for the operator surface.
inline MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
inline MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }
inline MultiPoly scale(const MultiPoly& p, double c) { return p * c; }

}  // namespace bswitch
