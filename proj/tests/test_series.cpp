#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multisine/constants.hpp"
#include "multisine/errors.hpp"
#include "multisine/series.hpp"

using namespace multisine;

namespace {

// Independent pi via Machin's formula, using only basic field operations:
// pi = 16 atan(1/5) - 4 atan(1/239), each arctangent by its power series.
HPReal machin_pi(Precision p) {
    auto arctan_inv = [&](long q) {
        HPReal acc(p);
        HPReal inv_q2 = HPReal(1L, p) / (q * q);
        HPReal term = HPReal(1L, p) / q;
        for (long j = 0; j < 4000; ++j) {
            HPReal piece = term / (2 * j + 1);
            acc = (j % 2 == 0) ? acc + piece : acc - piece;
            term = term * inv_q2;
            if (term < HPReal("1e-200", p)) break;
        }
        return acc;
    };
    return 16L * arctan_inv(5) - 4L * arctan_inv(239);
}

const Precision p30(30);
const Precision p50(50);

}  // namespace

TEST_CASE("agree_digits basics") {
    CHECK(agree_digits(HPReal("1.0000000", p30), HPReal("1.0000001", p30)) == 7);
    HPReal x("1.2345", p30);
    CHECK(agree_digits(x, x) == p30.working_digits());  // cap at working digits
    CHECK(agree_digits(HPReal(p30), HPReal("1e-30", p30)) == 30);
    CHECK(agree_digits(HPReal(0L, p30), HPReal(1L, p30)) == 0);
}

TEST_CASE("sum_series geometric") {
    SeriesSpec spec;
    spec.term = [](long n) { return pow(HPReal(2L, p50), -n); };
    spec.tail_bound = [](long n) { return pow(HPReal(2L, p50), -n); };
    HPReal s = sum_series(spec, p50);
    CHECK(agree_digits(s, HPReal(1L, p50)) >= 50);
}

TEST_CASE("sum_series zero series") {
    SeriesSpec spec;
    spec.term = [](long) { return HPReal(p50); };
    spec.tail_bound = [](long) { return HPReal(p50); };
    CHECK(sum_series(spec, p50).is_zero());
}

TEST_CASE("sum_series 1/n^2 hits the budget wall at full precision") {
    // the tail decays like 1/N, so meeting 10^-25 within 10^6 terms is
    // impossible; the documented failure mode is budget_error
    SeriesSpec spec;
    spec.term = [](long n) { return 1L / (HPReal(n, p30) * HPReal(n, p30)); };
    spec.tail_bound = [](long n) { return 1L / HPReal(n, p30); };
    spec.budget = 1000000;
    CHECK_THROWS_AS((void)sum_series(spec, Precision(10, 0)), budget_error);

    // at an explicit 1e-6 tolerance the same series is fine: pi^2/6
    HPReal s = sum_series_to_tolerance(spec, HPReal("1e-6", p30), p30);
    HPReal pi = machin_pi(p30);
    CHECK(agree_digits(s, pi * pi / 6L) >= 5);
}

TEST_CASE("machin pi matches the constant module") {
    CHECK(agree_digits(machin_pi(p50), constant("pi", p50)) >= 50);
}

TEST_CASE("sum_alternating log 2") {
    HPReal s = sum_alternating([](long k) { return 1L / HPReal(k, p50); }, 1, p50);
    CHECK(agree_digits(s, constant("log2", p50)) >= 50);
    // 10-digit smoke check against plain pairwise partial sums: after N
    // complete pairs the remainder of an alternating series is half the next
    // term, to O(1/N^2)
    const long N = 100000;
    HPReal plain(p30);
    for (long k = 1; k <= 2 * N; k += 2)
        plain = plain + (1L / HPReal(k, p30) - 1L / HPReal(k + 1, p30));
    plain = plain + 1L / HPReal(2 * (2 * N + 1), p30);
    CHECK(agree_digits(s, plain) >= 10);
}

TEST_CASE("sum_alternating pi/4") {
    HPReal s = sum_alternating([](long k) { return 1L / HPReal(2 * k - 1, p50); }, 1, p50);
    CHECK(agree_digits(s, constant("pi", p50) / 4L) >= 50);
}

TEST_CASE("sum_alternating zero") {
    HPReal s = sum_alternating([](long) { return HPReal(p30); }, 1, p30);
    CHECK(s.is_zero());
}

TEST_CASE("sum_alternating eta values against zeta") {
    for (long s = 2; s <= 4; ++s) {
        HPReal acc = sum_alternating([&](long k) { return pow(HPReal(k, p50), -s); }, 1, p50);
        HPReal expected = (1L - pow(HPReal(2L, p50), 1 - s)) * zeta_int(s, p50);
        CHECK(agree_digits(acc, expected) >= 50);
    }
}

TEST_CASE("sum_alternating n0 parity") {
    // sum_{k>=2} (-1)^(k+1) / k = log 2 - 1
    HPReal s = sum_alternating([](long k) { return 1L / HPReal(k, p50); }, 2, p50);
    CHECK(agree_digits(s, constant("log2", p50) - 1L) >= 50);
}

TEST_CASE("richardson constant sequence at order 0") {
    auto res = richardson_limit([](long) { return HPReal("2.5", p30); }, 0, 100, p30);
    CHECK(res.value == HPReal("2.5", p30));
    CHECK(res.achieved_digits == p30.working_digits());
}

TEST_CASE("richardson 1 + 1/n") {
    auto res = richardson_limit([](long n) { return 1L + 1L / HPReal(n, p30); }, 3, 512, p30);
    CHECK(agree_digits(res.value, HPReal(1L, p30)) >= 25);
}

TEST_CASE("richardson (1+1/n)^n -> e") {
    auto res = richardson_limit(
        [](long n) { return pow(1L + 1L / HPReal(n, p30), n); }, 7, 1024, p30);
    CHECK(agree_digits(res.value, constant("e", p30)) >= 12);
    CHECK(res.achieved_digits >= 10);
}

TEST_CASE("richardson diverging sequence raises") {
    CHECK_THROWS_AS((void)richardson_limit([](long n) { return log(HPReal(n, p30)); }, 4, 4096, p30),
                    convergence_error);
}

TEST_CASE("self-consistency: recompute with extra digits agrees") {
    HPReal a = sum_alternating([](long k) { return 1L / HPReal(k, p30); }, 1, p30);
    HPReal b = sum_alternating([](long k) { return 1L / HPReal(k, Precision(50)); }, 1,
                               Precision(50));
    CHECK(agree_digits(a, b) >= 30);
}
