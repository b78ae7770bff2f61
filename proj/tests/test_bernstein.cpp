#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>
#include <vector>

#include "bswitch/bernstein.hpp"
#include "bswitch/numeric.hpp"
#include "bswitch/poly.hpp"

using namespace bswitch;

namespace {

/// Direct-summation oracle: sum_r samples[r] * C(m,r) t^r (1-t)^{m-r},
/// independent of the de Casteljau evaluation path.
double direct_sum(const BernsteinSeries& s, double x) {
    double t = (x - s.lo()) / (s.hi() - s.lo());
    t = std::clamp(t, 0.0, 1.0);
    double acc = 0.0;
    for (unsigned r = 0; r <= s.degree(); ++r) {
        acc += s.samples()[r] * bernstein_basis(s.degree(), r, t);
    }
    return acc;
}

}  // namespace

TEST_CASE("basis values") {
    for (unsigned m : {1u, 2u, 10u, 100u}) {
        CHECK(bernstein_basis(m, 0, 0.0) == 1.0);
        CHECK(bernstein_basis(m, m, 1.0) == 1.0);
    }
    CHECK(bernstein_basis(2, 1, 0.5) == doctest::Approx(0.5));  // C(2,1)*0.5*0.5

    double sum = 0.0;
    for (unsigned r = 0; r <= 100; ++r) sum += bernstein_basis(100, r, 0.37);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));

    CHECK_THROWS_AS(bernstein_basis(3, 4, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(bernstein_basis(3, 1, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(bernstein_basis(3, 1, 1.1), std::invalid_argument);
}

TEST_CASE("partition of unity across degrees") {
    for (unsigned m : {1u, 5u, 10u, 50u, 100u, 200u}) {
        for (int i = 0; i <= 100; ++i) {
            const double t = i / 100.0;
            double sum = 0.0;
            for (unsigned r = 0; r <= m; ++r) sum += bernstein_basis(m, r, t);
            CHECK(std::fabs(sum - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("basis non-negativity") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> tdist(0.0, 1.0);
    std::uniform_int_distribution<unsigned> mdist(1, 200);
    for (int i = 0; i < 500; ++i) {
        const unsigned m = mdist(rng);
        const unsigned r = std::uniform_int_distribution<unsigned>(0, m)(rng);
        const double b = bernstein_basis(m, r, tdist(rng));
        CHECK(b >= 0.0);
        CHECK(b <= 1.0);
    }
}

TEST_CASE("series construction and constant reproduction") {
    const auto s = series_from_function([](double) { return 1.0; }, 25, 0.0, 1.0);
    for (int i = 0; i <= 20; ++i) {
        CHECK(eval_series(s, i / 20.0) == doctest::Approx(1.0).epsilon(1e-14));
    }

    const auto c = series_from_function([](double) { return 3.25; }, 7, -2.0, 5.0);
    CHECK(eval_series(c, 1.0) == doctest::Approx(3.25).epsilon(1e-14));

    CHECK_THROWS_AS(series_from_function([](double) { return 1.0; }, 0, 0.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(series_from_function([](double) { return 1.0; }, 3, 1.0, 1.0),
                    std::invalid_argument);
    // Non-finite samples are rejected with the node in the message.
    CHECK_THROWS_WITH_AS(
        series_from_function([](double x) { return x == 0.5 ? 1.0 / 0.0 : 0.0; }, 2, 0.0, 1.0),
        doctest::Contains("node r=1"), std::domain_error);
}

TEST_CASE("t^2 closed form: B_m(t^2) = t^2 + t(1-t)/m") {
    for (unsigned m : {5u, 50u, 100u}) {
        const auto s = series_from_function([](double t) { return t * t; }, m, 0.0, 1.0);
        double max_err = 0.0;
        double max_gap = 0.0;  // uniform-convergence surrogate
        for (int i = 0; i <= 1000; ++i) {
            const double t = i / 1000.0;
            const double expected = t * t + t * (1.0 - t) / m;
            max_err = std::max(max_err, std::fabs(eval_series(s, t) - expected));
            max_gap = std::max(max_gap, std::fabs(eval_series(s, t) - t * t));
        }
        CHECK(max_err <= 1e-10);
        double closed_form_max = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double t = i / 1000.0;
            closed_form_max = std::max(closed_form_max, t * (1.0 - t) / m);
        }
        CHECK(std::fabs(max_gap - closed_form_max) <= 1e-10);
    }
}

TEST_CASE("closed form verified symbolically for small degrees") {
    // to_poly of the t^2 series must equal (1 - 1/m) t^2 + (1/m) t exactly.
    for (unsigned m = 2; m <= 5; ++m) {
        const auto s = series_from_function([](double t) { return t * t; }, m, 0.0, 1.0);
        const MultiPoly p = to_poly(s);
        CHECK(p.coefficient({2}) == doctest::Approx(1.0 - 1.0 / m).epsilon(1e-14));
        CHECK(p.coefficient({1}) == doctest::Approx(1.0 / m).epsilon(1e-14));
        CHECK(p.coefficient({0}) == doctest::Approx(0.0));
    }
}

TEST_CASE("affine reproduction") {
    // Bernstein series reproduce a + b t exactly for any degree.
    const auto s = series_from_function([](double t) { return t; }, 17, 0.0, 1.0);
    CHECK(eval_series(s, 0.3) == doctest::Approx(0.3).epsilon(1e-14));

    for (unsigned m : {1u, 10u, 200u}) {
        const auto a = series_from_function([](double t) { return 2.0 - 3.0 * t; }, m, 0.0, 1.0);
        double max_err = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double t = i / 100.0;
            max_err = std::max(max_err, std::fabs(eval_series(a, t) - (2.0 - 3.0 * t)));
        }
        CHECK(max_err <= 1e-10);
    }
}

TEST_CASE("de Casteljau matches direct summation") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> sval(-2.0, 2.0);
    for (unsigned m : {1u, 3u, 17u, 100u}) {
        std::vector<double> samples(m + 1);
        for (auto& v : samples) v = sval(rng);
        const BernsteinSeries s(m, -1.0, 2.0, samples);
        for (int i = 0; i <= 50; ++i) {
            const double x = -1.0 + 3.0 * i / 50.0;
            CHECK(eval_series(s, x) == doctest::Approx(direct_sum(s, x)).epsilon(1e-11));
        }
    }
}

TEST_CASE("step interpolant: midpoint, monotonicity, clamping") {
    const auto s = step_series(100, -1.0, 1.0, 0.0);
    CHECK(eval_series(s, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(direct_sum(s, 0.0) == doctest::Approx(0.5).epsilon(1e-12));

    double prev = -1.0;
    for (int i = 0; i <= 1000; ++i) {
        const double x = -1.0 + 2.0 * i / 1000.0;
        const double v = eval_series(s, x);
        CHECK(v == doctest::Approx(direct_sum(s, x)).epsilon(1e-11));
        CHECK(v >= prev - 1e-12);  // monotone in x
        prev = v;
    }

    // Out-of-domain arguments clamp to the endpoint samples.
    CHECK(eval_series(s, -5.0) == 0.0);
    CHECK(eval_series(s, 7.0) == 1.0);
}

TEST_CASE("range preservation for samples in [0,1]") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> sval(0.0, 1.0);
    std::uniform_real_distribution<double> xval(-3.0, 3.0);
    for (int iter = 0; iter < 50; ++iter) {
        const unsigned m = 1 + iter % 40;
        std::vector<double> samples(m + 1);
        for (auto& v : samples) v = sval(rng);
        const BernsteinSeries s(m, -1.0, 1.0, samples);
        for (int i = 0; i < 20; ++i) {
            const double v = eval_series(s, xval(rng));
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        // Endpoint interpolation.
        CHECK(eval_series(s, -1.0) == samples.front());
        CHECK(eval_series(s, 1.0) == samples.back());
    }
}

TEST_CASE("compose") {
    // Composing with an identity-sampled series reproduces the inner signal
    // (affine functions are reproduced exactly).
    const auto identity = series_from_function([](double t) { return t; }, 20, 0.0, 1.0);
    const auto step = step_series(100, -1.0, 1.0, 0.0);
    const auto near_id = compose(identity, step);
    for (int i = 0; i <= 100; ++i) {
        const double x = -1.0 + 2.0 * i / 100.0;
        CHECK(near_id(x) == doctest::Approx(eval_series(step, x)).epsilon(1e-12));
    }

    // Both stages fix 0.5 by sample symmetry.
    const auto sharpened = compose(step_series(100, 0.0, 1.0, 0.5), step);
    CHECK(sharpened(0.0) == doctest::Approx(0.5).epsilon(1e-12));

    // Composition sharpens the transition: closer to 1 inside the positive
    // half at a fifth of the halfwidth.
    const double x_probe = 0.2;
    const double single = eval_series(step, x_probe);
    const double composed_v = sharpened(x_probe);
    CHECK(std::fabs(composed_v - 1.0) < std::fabs(single - 1.0));
}

TEST_CASE("sign interpolant weights") {
    const SignWeight w = sign_interpolant(100, 10.0);
    CHECK(w(0.0, 123.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(w(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(w(1.0, -1.0) == doctest::Approx(0.0).epsilon(1e-3));

    // Saturation is exact once |delta x1 x2| >= 1 (clamped to an endpoint).
    CHECK(w(1.0, 1.0) == 1.0);
    CHECK(w(1.0, -1.0) == 0.0);

    CHECK_THROWS_AS(sign_interpolant(100, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(sign_interpolant(100, -1.0), std::invalid_argument);
}

TEST_CASE("weight pair validity on a grid") {
    // w and 1-w stay in [0,1] and sum to 1 exactly over [-2,2]^2.
    for (const unsigned depth : {0u, 1u}) {
        const SignWeight w = sign_interpolant(50, 3.0, depth);
        for (int i = 0; i <= 40; ++i) {
            for (int j = 0; j <= 40; ++j) {
                const double x1 = -2.0 + 4.0 * i / 40.0;
                const double x2 = -2.0 + 4.0 * j / 40.0;
                const double v = w(x1, x2);
                const double complement = 1.0 - v;
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
                CHECK(complement >= 0.0);
                CHECK(complement <= 1.0);
                CHECK(v + complement == 1.0);  // exact
            }
        }
    }
}

TEST_CASE("pulse interpolant") {
    const auto p = pulse_interpolant(100, 0.2, 0.4);
    CHECK(eval_series(p, 0.3) > 0.5);
    CHECK(direct_sum(p, 0.3) > 0.5);
    CHECK(eval_series(p, 0.0) == 0.0);  // endpoint reproduction, sample[0] = 0
    CHECK(eval_series(p, 1.0) == 0.0);

    // Full-interval pulse is constant 1.
    const auto full = pulse_interpolant(50, 0.0, 1.0);
    for (int i = 0; i <= 20; ++i) {
        CHECK(eval_series(full, i / 20.0) == doctest::Approx(1.0).epsilon(1e-14));
    }

    // Jump nodes take the midpoint value.
    CHECK(p.samples()[20] == 0.5);
    CHECK(p.samples()[40] == 0.5);

    CHECK_THROWS_AS(pulse_interpolant(100, 0.4, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(pulse_interpolant(100, 0.4, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(pulse_interpolant(100, -0.1, 0.4), std::invalid_argument);
}

TEST_CASE("to_poly") {
    // Constant series -> constant polynomial.
    const auto c = series_from_function([](double) { return 4.0; }, 5, 0.0, 1.0);
    CHECK(to_poly(c) == MultiPoly::constant(4.0));

    // Affine reproduction at m = 3: the expansion collapses to t, up to the
    // rounding of the sampled nodes r/3.
    const auto lin = series_from_function([](double t) { return t; }, 3, 0.0, 1.0);
    const MultiPoly t_poly = to_poly(lin);
    CHECK(t_poly.coefficient({1}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(t_poly.coefficient({0}) == 0.0);
    CHECK(std::fabs(t_poly.coefficient({2})) <= 1e-15);
    CHECK(std::fabs(t_poly.coefficient({3})) <= 1e-15);

    // Degree limit guards the ill-conditioned conversion.
    const auto big = step_series(31, -1.0, 1.0, 0.0);
    CHECK_THROWS_AS(to_poly(big), std::domain_error);
    CHECK_NOTHROW(to_poly(step_series(30, -1.0, 1.0, 0.0)));
}

TEST_CASE("to_poly round-trips against eval_series") {
    // Smooth sample vectors convert to near machine accuracy at every degree
    // the expansion limit allows.
    for (unsigned m : {1u, 5u, 12u, 20u, 30u}) {
        const auto s = series_from_function(
            [](double t) { return std::sin(3.0 * t) + t * t; }, m, 0.0, 1.0);
        const MultiPoly p = to_poly(s);
        double max_err = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double t = i / 1000.0;
            max_err = std::max(max_err,
                               std::fabs(p.eval(std::vector<double>{t}) - eval_series(s, t)));
        }
        CHECK(max_err < 1e-8);
    }

    // The 0/1 step is the roughest sample vector the pipeline feeds in; its
    // true monomial coefficients grow fast, so hold the 1e-8 line up to
    // m = 20 and only a conditioning-limited 1e-4 at the m = 30 limit.
    for (unsigned m : {1u, 5u, 12u, 20u}) {
        const auto s = step_series(m, -1.0, 1.0, 0.0);
        const MultiPoly p = to_poly(s);
        double max_err = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double tn = i / 1000.0;
            const double x = -1.0 + 2.0 * tn;
            max_err = std::max(
                max_err, std::fabs(p.eval(std::vector<double>{tn}) - eval_series(s, x)));
        }
        CHECK(max_err < 1e-8);
    }
    const auto rough = step_series(30, -1.0, 1.0, 0.0);
    const MultiPoly p30 = to_poly(rough);
    double max_err = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double tn = i / 1000.0;
        max_err = std::max(max_err, std::fabs(p30.eval(std::vector<double>{tn}) -
                                              eval_series(rough, -1.0 + 2.0 * tn)));
    }
    CHECK(max_err < 1e-4);
}
