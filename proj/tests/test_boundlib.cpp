#include <doctest.h>

#include <cmath>

#include "regorb/boundlib.hpp"

using namespace regorb;

TEST_CASE("f and f_p") {
    CHECK(f(11) == 65);
    CHECK(f(23) == Rational(12167 - 4761 + 322 - 6, 6));
    for (int n = 23; n <= 60; ++n) CHECK(f_p(n, 2) == f(n));
    CHECK(f_p(15, 2) == 127);
    CHECK(f_p(16, 2) == 127);
    CHECK(f_p(18, 2) == 253);
    CHECK(f_p(20, 2) == 505);
    CHECK(f_p(22, 2) == 930);
    CHECK(f_p(11, 3) == 54);
    CHECK(f_p(12, 5) == 88);
    CHECK(f_p(13, 3) == 107);
    CHECK(f_p(14, 3) == 175);
    CHECK(f_p(15, 3) == 213);
    CHECK_THROWS_AS(f_p(14, 2), std::domain_error);
    CHECK_THROWS_AS(f_p(10, 3), std::domain_error);
    for (int n = 15; n <= 40; ++n) CHECK(2 * f_p(n, 2) > f_p(n + 2, 2));
    for (int n = 11; n <= 40; ++n) CHECK(2 * f_p(n, 3) > f_p(n + 2, 3));
}

TEST_CASE("anchored floors") {
    CHECK(g(2, 20).floor() == 620);
    CHECK(g(2, 21).floor() == 697);
    CHECK(g(3, 19).floor() == 352);
    CHECK(h_spin(3, 8).floor() == 38);
    CHECK(h_spin(11, 17).floor() == 124);
}

TEST_CASE("exact floors agree with floating point away from integers") {
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13})
        for (int n = 7; n <= 22; ++n) {
            LogBound b = g(q, n);
            double x = static_cast<double>(b.value());
            if (std::abs(x - std::round(x)) > 1e-9) CHECK(b.floor() == static_cast<long long>(std::floor(x)));
            CHECK(h_assoc(q, n).floor() >= 2 * h_spin(q, n).floor());
            CHECK(abs(h_assoc(q, n).value() - 2 * h_spin(q, n).value()) < Real(1e-30));
        }
    CHECK(floor_log(2, 1024) == 10);
    CHECK(floor_log(2, 1023) == 9);
    CHECK(floor_log(3, 1) == 0);
}

TEST_CASE("general bound") {
    CHECK(general_bound(120, 120, 7).floor() == 7);
    CHECK(abs(general_bound(120, 120, 7).value() - 7) < Real(1e-40));
    double v = static_cast<double>(general_bound(3, 120, 4).value());
    CHECK(v == doctest::Approx(17.43).epsilon(0.001));
    CHECK_THROWS(general_bound(3, 1, 4));
}

TEST_CASE("eq2 and eq3") {
    // (n(n-1)z)^2 <= 2 n! z for n >= 8 and z <= n.
    for (int n = 8; n <= 30; ++n)
        for (int z = 1; z <= n; ++z) {
            BigInt a = BigInt(n) * (n - 1) * z;
            CHECK(a * a <= 2 * factorial(n) * z);
            CHECK(eq2(5, n, z).floor() == eq3(5, n, z).floor());
        }
    CHECK_THROWS(eq3(2, 7, 8));
    CHECK_THROWS(eq2(2, 6, 1));
}

TEST_CASE("log_q(C(q-1)) decreases in q") {
    for (int c : {5, 42, 1000}) {
        double prev = 1e300;
        for (int q = 2; q <= 10000; ++q) {
            double v = std::log(static_cast<double>(c) * (q - 1)) / std::log(static_cast<double>(q));
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("delta and kappa") {
    CHECK(delta(Cover::TwoSn, 8, 5) == 8);
    CHECK(delta(Cover::TwoAn, 8, 3) == 8);
    CHECK(delta(Cover::TwoSn, 10, 3) == 16);
    CHECK(delta(Cover::TwoAn, 11, 3) == 16);
    CHECK(delta(Cover::TwoAn, 12, 3) == 16);
    CHECK(kappa(3, 12) == 1);
    CHECK(kappa(5, 8) == 0);
}

TEST_CASE("r_upper") {
    CHECK(r_upper(true, 10) == 9);
    CHECK(r_upper(false, 10) == 5);
    CHECK(r_upper(false, 5) == 4);
    CHECK(r_upper(false, 7) == 3);
}
