#include "bswitch/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "bswitch/numeric.hpp"

namespace bswitch {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Merge two sorted unique name lists.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

void MultiPoly::check_name(const std::string& name) {
    if (name.empty() || !ident_start(name[0]) ||
        !std::all_of(name.begin(), name.end(), ident_char)) {
        throw std::invalid_argument("MultiPoly: invalid variable name '" + name + "'");
    }
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    for (const auto& v : vars_) check_name(v);
    std::sort(vars_.begin(), vars_.end());
    if (std::adjacent_find(vars_.begin(), vars_.end()) != vars_.end()) {
        throw std::invalid_argument("MultiPoly: duplicate variable name");
    }
}

MultiPoly MultiPoly::constant(double c) {
    MultiPoly p;
    if (c != 0.0) p.terms_.emplace(Exponents{}, c);
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    return monomial({name}, {1}, 1.0);
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponents exps, double c) {
    if (vars.size() != exps.size()) {
        throw std::invalid_argument("MultiPoly::monomial: vars/exps length mismatch");
    }
    // Sort variables and carry the exponents along.
    std::vector<size_t> order(vars.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t i, size_t j) { return vars[i] < vars[j]; });
    MultiPoly p;
    p.vars_.reserve(vars.size());
    Exponents sorted_exps(exps.size());
    for (size_t i = 0; i < order.size(); ++i) {
        p.vars_.push_back(vars[order[i]]);
        sorted_exps[i] = exps[order[i]];
    }
    for (const auto& v : p.vars_) check_name(v);
    if (std::adjacent_find(p.vars_.begin(), p.vars_.end()) != p.vars_.end()) {
        throw std::invalid_argument("MultiPoly::monomial: duplicate variable name");
    }
    if (c != 0.0) p.terms_.emplace(std::move(sorted_exps), c);
    return p;
}

unsigned MultiPoly::total_degree() const {
    unsigned deg = 0;
    for (const auto& [exps, c] : terms_) {
        unsigned d = 0;
        for (unsigned e : exps) d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

double MultiPoly::coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? 0.0 : it->second;
}

double MultiPoly::eval(std::span<const double> x) const {
    if (x.size() != vars_.size()) {
        throw std::invalid_argument("MultiPoly::eval: expected " +
                                    std::to_string(vars_.size()) + " coordinates, got " +
                                    std::to_string(x.size()));
    }
    double sum = 0.0;
    for (const auto& [exps, c] : terms_) {
        double term = c;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] != 0) term *= ipow(x[i], exps[i]);
        }
        sum += term;
    }
    return sum;
}

void MultiPoly::insert_term(const Exponents& exps, double c) {
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) terms_.erase(it);
    } else if (c == 0.0) {
        terms_.erase(it);
    }
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& superset) const {
    MultiPoly out(superset);
    // Position of each current variable inside the superset.
    std::vector<size_t> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::lower_bound(out.vars_.begin(), out.vars_.end(), vars_[i]);
        if (it == out.vars_.end() || *it != vars_[i]) {
            throw std::invalid_argument("MultiPoly::with_vars: superset is missing '" +
                                        vars_[i] + "'");
        }
        pos[i] = static_cast<size_t>(it - out.vars_.begin());
    }
    for (const auto& [exps, c] : terms_) {
        Exponents wide(out.vars_.size(), 0);
        for (size_t i = 0; i < exps.size(); ++i) wide[pos[i]] = exps[i];
        out.terms_.emplace(std::move(wide), c);
    }
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    const auto vars = merge_vars(a.vars_, b.vars_);
    MultiPoly lhs = a.with_vars(vars);
    const MultiPoly rhs = b.with_vars(vars);
    for (const auto& [exps, c] : rhs.terms_) lhs.insert_term(exps, c);
    return lhs;
}

MultiPoly operator-(const MultiPoly& a) { return a * -1.0; }

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    const auto vars = merge_vars(a.vars_, b.vars_);
    const MultiPoly lhs = a.with_vars(vars);
    const MultiPoly rhs = b.with_vars(vars);
    MultiPoly out(vars);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            MultiPoly::Exponents exps(vars.size());
            for (size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
            out.insert_term(exps, ca * cb);
        }
    }
    return out;
}

MultiPoly operator*(const MultiPoly& a, double c) {
    MultiPoly out(a.vars_);
    if (c == 0.0) return out;
    for (const auto& [exps, coeff] : a.terms_) {
        const double v = coeff * c;
        if (v != 0.0) out.terms_.emplace(exps, v);
    }
    return out;
}

MultiPoly operator*(double c, const MultiPoly& a) { return a * c; }

bool MultiPoly::operator==(const MultiPoly& other) const {
    if (vars_ == other.vars_) return terms_ == other.terms_;
    const auto vars = merge_vars(vars_, other.vars_);
    return with_vars(vars).terms_ == other.with_vars(vars).terms_;
}

MultiPoly MultiPoly::differentiate(const std::string& var) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) {
        throw std::invalid_argument("MultiPoly::differentiate: unknown variable '" + var + "'");
    }
    const size_t idx = static_cast<size_t>(it - vars_.begin());
    MultiPoly out(vars_);
    for (const auto& [exps, c] : terms_) {
        if (exps[idx] == 0) continue;
        Exponents d = exps;
        const double factor = static_cast<double>(d[idx]);
        d[idx] -= 1;
        out.insert_term(d, c * factor);
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& replacement) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (it == vars_.end() || *it != var) {
        throw std::invalid_argument("MultiPoly::substitute: unknown variable '" + var + "'");
    }
    const size_t idx = static_cast<size_t>(it - vars_.begin());
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));

    unsigned max_exp = 0;
    for (const auto& [exps, c] : terms_) max_exp = std::max(max_exp, exps[idx]);
    // Powers of the replacement, computed once.
    std::vector<MultiPoly> powers;
    powers.reserve(max_exp + 1);
    powers.push_back(MultiPoly::constant(1.0));
    for (unsigned k = 1; k <= max_exp; ++k) powers.push_back(powers.back() * replacement);

    MultiPoly out(rest);
    for (const auto& [exps, c] : terms_) {
        Exponents rest_exps;
        rest_exps.reserve(exps.size() - 1);
        for (size_t i = 0; i < exps.size(); ++i) {
            if (i != idx) rest_exps.push_back(exps[i]);
        }
        out = out + MultiPoly::monomial(rest, rest_exps, c) * powers[exps[idx]];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical text form
// ---------------------------------------------------------------------------

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Descending lexicographic exponent order: highest power of the first
    // variable leads, matching how the polynomials are written by hand.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exps, c] = *it;
        const bool neg = std::signbit(c);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const double mag = std::fabs(c);
        std::string factors;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += vars_[i];
            if (exps[i] != 1) factors += "^" + std::to_string(exps[i]);
        }
        if (factors.empty()) {
            out += repr(mag);
        } else if (mag == 1.0) {
            out += factors;
        } else {
            out += repr(mag) + "*" + factors;
        }
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("MultiPoly::parse: " + what + " at position " +
                                    std::to_string(pos));
    }
};

double parse_number(Cursor& cur) {
    const char* start = cur.text.c_str() + cur.pos;
    char* end = nullptr;
    const double v = std::strtod(start, &end);
    if (end == start) cur.fail("expected a number");
    cur.pos += static_cast<size_t>(end - start);
    // Canonical form separates factors with '*': "2x1" is rejected.
    if (cur.pos < cur.text.size() && ident_start(cur.text[cur.pos])) {
        cur.fail("expected '*' between coefficient and variable");
    }
    return v;
}

std::string parse_ident(Cursor& cur) {
    size_t start = cur.pos;
    while (cur.pos < cur.text.size() && ident_char(cur.text[cur.pos])) ++cur.pos;
    return cur.text.substr(start, cur.pos - start);
}

struct ParsedTerm {
    double coeff = 1.0;
    std::map<std::string, unsigned> exps;
};

ParsedTerm parse_term(Cursor& cur) {
    ParsedTerm term;
    bool first_factor = true;
    while (true) {
        cur.skip_ws();
        if (cur.pos >= cur.text.size()) {
            if (first_factor) cur.fail("expected a term");
            break;
        }
        const char c = cur.peek();
        if (ident_start(c)) {
            const std::string name = parse_ident(cur);
            unsigned exp = 1;
            cur.skip_ws();
            if (cur.pos < cur.text.size() && cur.peek() == '^') {
                ++cur.pos;
                cur.skip_ws();
                size_t start = cur.pos;
                while (cur.pos < cur.text.size() &&
                       std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
                    ++cur.pos;
                }
                if (cur.pos == start) cur.fail("expected a non-negative integer exponent");
                exp = static_cast<unsigned>(
                    std::strtoul(cur.text.c_str() + start, nullptr, 10));
            }
            term.exps[name] += exp;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            term.coeff *= parse_number(cur);
        } else {
            cur.fail(std::string("unexpected character '") + c + "'");
        }
        first_factor = false;
        cur.skip_ws();
        if (cur.pos < cur.text.size() && cur.peek() == '*') {
            ++cur.pos;
            continue;
        }
        break;
    }
    return term;
}

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
    Cursor cur{text};
    std::vector<ParsedTerm> parsed;
    bool first = true;
    while (!cur.done()) {
        double sign = 1.0;
        cur.skip_ws();
        if (cur.peek() == '+' || cur.peek() == '-') {
            sign = cur.peek() == '-' ? -1.0 : 1.0;
            ++cur.pos;
        } else if (!first) {
            cur.fail("expected '+' or '-' between terms");
        }
        ParsedTerm term = parse_term(cur);
        term.coeff *= sign;
        parsed.push_back(std::move(term));
        first = false;
    }
    if (first) throw std::invalid_argument("MultiPoly::parse: empty input");

    std::vector<std::string> vars;
    for (const auto& t : parsed) {
        for (const auto& [name, exp] : t.exps) vars.push_back(name);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    MultiPoly out(vars);
    for (const auto& t : parsed) {
        Exponents exps(vars.size(), 0);
        for (const auto& [name, exp] : t.exps) {
            const auto it = std::lower_bound(vars.begin(), vars.end(), name);
            exps[static_cast<size_t>(it - vars.begin())] = exp;
        }
        out.insert_term(exps, t.coeff);
    }
    return out;
}

}  // namespace bswitch
