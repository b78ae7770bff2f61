#include "bswitch/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace bswitch {

double ipow(double x, unsigned n) {
    double result = 1.0;
    double base = x;
    while (n > 0) {
        if (n & 1u) result *= base;
        base *= base;
        n >>= 1u;
    }
    return result;
}

double binomial_real(unsigned n, unsigned k) {
    if (k > n) throw std::invalid_argument("binomial_real: k > n");
    if (k > n - k) k = n - k;
    double c = 1.0;
    for (unsigned i = 1; i <= k; ++i) {
        c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return c;
}

std::vector<double> binomial_row(unsigned n) {
    std::vector<double> row(n + 1, 1.0);
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = i; j-- > 1;) {
            row[j] += row[j - 1];
        }
        row[i] = 1.0;
    }
    return row;
}

std::string repr(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return std::signbit(v) ? "-0" : "0";
    char buf[40];
    if (v == std::floor(v) && std::fabs(v) < 1e15) {
        std::snprintf(buf, sizeof buf, "%.0f", v);
        return buf;
    }
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

}  // namespace bswitch
