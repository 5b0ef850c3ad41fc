#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "parareal/option.hpp"
#include "test_helpers.hpp"

using namespace parareal;

TEST_CASE("derive_transform maps the reference option") {
    const TransformedProblem tp = derive_transform(testutil::table1_option(1.6));
    CHECK(tp.kappa == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(tp.alpha == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(tp.beta == doctest::Approx(1.75).epsilon(1e-12));
    CHECK(tp.x0 == doctest::Approx(-0.287682).epsilon(1e-5));
    CHECK(tp.x_minus == doctest::Approx(-1.673976).epsilon(1e-5));
    CHECK(tp.x_plus == doctest::Approx(1.386294).epsilon(1e-5));
    CHECK(tp.tau_max == doctest::Approx(0.032).epsilon(1e-12));
}

TEST_CASE("derive_transform handles kappa below one") {
    const TransformedProblem tp = derive_transform({std::sqrt(2.0), 0.5, 10.0, 10.0, 1.0});
    CHECK(tp.kappa == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(tp.alpha == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(tp.beta == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(tp.x0 == 0.0);
}

TEST_CASE("at-the-money domain is symmetric at ln 4") {
    const TransformedProblem tp = derive_transform({0.2, 0.05, 20.0, 20.0, 1.0});
    CHECK(tp.x0 == 0.0);
    CHECK(tp.x_minus == -std::log(4.0));
    CHECK(tp.x_plus == std::log(4.0));
}

TEST_CASE("transform exponent identities hold for random options") {
    std::mt19937_64 rng(7);
    auto unit = [&] { return static_cast<double>(rng() % 10000) / 10000.0; };
    for (int i = 0; i < 200; ++i) {
        const MarketOption mo{0.05 + unit(), unit() * 0.2, 1.0 + 50.0 * unit(),
                              1.0 + 50.0 * unit(), 0.1 + 5.0 * unit()};
        const TransformedProblem tp = derive_transform(mo);
        CHECK(tp.beta - tp.alpha == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(tp.kappa == doctest::Approx(2.0 * tp.alpha + 1.0).epsilon(1e-12));
        CHECK(tp.x_minus < tp.x0);
        CHECK(tp.x0 < tp.x_plus);
        CHECK(tp.tau_max > 0.0);
    }
}

TEST_CASE("invalid market data is rejected") {
    CHECK_THROWS_AS(derive_transform({0.0, 0.05, 15, 20, 1.6}), std::domain_error);
    CHECK_THROWS_AS(derive_transform({0.2, -0.01, 15, 20, 1.6}), std::domain_error);
    CHECK_THROWS_AS(derive_transform({0.2, 0.05, 0.0, 20, 1.6}), std::domain_error);
    CHECK_THROWS_AS(derive_transform({0.2, 0.05, 15, -20, 1.6}), std::domain_error);
    CHECK_THROWS_AS(derive_transform({0.2, 0.05, 15, 20, 0.0}), std::domain_error);
    CHECK_NOTHROW(derive_transform({0.2, 0.0, 15, 20, 1.6}));  // zero rate is fine
}

TEST_CASE("initial condition clips and matches the hand value") {
    const TransformedProblem tp = derive_transform(testutil::table1_option(1.6));
    CHECK(initial_condition(0.0, tp) == 0.0);
    CHECK(initial_condition(-1.0, tp) == 0.0);
    CHECK(initial_condition(0.1, tp) == doctest::Approx(0.113362).epsilon(1e-5));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const double x = -4.0 + 8.0 * static_cast<double>(rng() % 10000) / 10000.0;
        CHECK(initial_condition(x, tp) >= 0.0);
    }
}

TEST_CASE("boundary values") {
    const TransformedProblem tp = derive_transform({0.2, 0.05, 20.0, 20.0, 1.6});
    // x_plus = ln 4, alpha = 0.75, beta = 1.75
    const BoundaryPair at0 = boundary_values(0.0, tp);
    CHECK(at0.left == 0.0);
    CHECK(at0.right == doctest::Approx(8.485281).epsilon(1e-6));
    CHECK(at0.right == initial_condition(tp.x_plus, tp));

    const BoundaryPair later = boundary_values(tp.tau_max, tp);
    CHECK(later.left == 0.0);
    CHECK(later.right > at0.right);  // far-field value grows with tau

    CHECK_THROWS_AS(boundary_values(-0.1, tp), std::domain_error);
    CHECK_THROWS_AS(boundary_values(tp.tau_max * 1.5, tp), std::domain_error);
}

TEST_CASE("price recovery undoes the scaling") {
    const TransformedProblem tp = derive_transform(testutil::table1_option(1.6));
    CHECK(recover_price(0.0, tp, 20.0) == 0.0);
    CHECK(recover_price(1.0, tp, 20.0) == doctest::Approx(22.4995).epsilon(1e-5));

    // Round-trip: feeding the inverse scaling recovers the plain value.
    for (double v : {0.02, 1.0, 17.5}) {
        const double u = std::exp(tp.alpha * tp.x0 + tp.beta * tp.beta * tp.tau_max) * v;
        CHECK(recover_price(u, tp, 20.0) / 20.0 == doctest::Approx(v).epsilon(1e-12));
    }
}

TEST_CASE("normal cdf accuracy and symmetry") {
    CHECK(std_normal_cdf(0.0) == 0.5);
    CHECK(std_normal_cdf(8.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std_normal_cdf(1.96) == doctest::Approx(0.9750021).epsilon(1e-7));

    // 20-digit quadrature references; the requirement is 1e-10 absolute.
    CHECK(std::abs(std_normal_cdf(1.0) - 0.84134474606854294859) <= 1e-12);
    CHECK(std::abs(std_normal_cdf(-2.0) - 0.0227501319481792072) <= 1e-12);
    CHECK(std::abs(std_normal_cdf(0.5) - 0.69146246127401310364) <= 1e-12);
    CHECK(std::abs(std_normal_cdf(-7.0) - 1.2798125438858350044e-12) <= 1e-12);

    for (int i = 0; i <= 1000; ++i) {
        const double z = -8.0 + 16.0 * i / 1000.0;
        CHECK(std::abs(std_normal_cdf(z) + std_normal_cdf(-z) - 1.0) <= 1e-12);
    }
}

TEST_CASE("closed-form price matches the reference rows") {
    CHECK(exact_price(testutil::table1_option(1.6)) == doctest::Approx(0.4853).epsilon(1.1e-3));
    CHECK(std::abs(exact_price(testutil::table1_option(1.6)) - 0.4853) <= 5e-4);
    CHECK(std::abs(exact_price(testutil::table2_option(1.6)) - 1.5179) <= 5e-4);
    CHECK(std::abs(exact_price(testutil::table1_option(16.0)) - 7.4169) <= 5e-4);
}

TEST_CASE("closed-form price is monotone in spot and strike") {
    std::mt19937_64 rng(23);
    auto unit = [&] { return static_cast<double>(rng() % 10000) / 10000.0; };
    for (int i = 0; i < 100; ++i) {
        const double sigma = 0.1 + 0.4 * unit();
        const double rate = 0.1 * unit();
        const double spot = 5.0 + 50.0 * unit();
        const double strike = 5.0 + 50.0 * unit();
        const double maturity = 0.2 + 5.0 * unit();
        const double base = exact_price({sigma, rate, spot, strike, maturity});
        CHECK(exact_price({sigma, rate, spot * 1.01, strike, maturity}) > base);
        CHECK(exact_price({sigma, rate, spot, strike * 1.01, maturity}) < base);
    }
}
