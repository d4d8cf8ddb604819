#include "doctest.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "uacg/numtheory.hpp"

using namespace uacg;

namespace {

// Independent oracle: c(k, n) as the real part of the unit-root sum
// over residues coprime to n, by direct complex summation.
double ramanujan_dft(int k, int n) {
    double re = 0.0;
    for (int j = 1; j < n; ++j) {
        if (std::gcd(j, n) != 1) continue;
        const long long r = static_cast<long long>(j) * k % n;
        re += std::cos(2.0 * std::numbers::pi * static_cast<double>(r) / n);
    }
    return re;
}

} // namespace

TEST_CASE("factorize") {
    CHECK(factorize(1).empty());
    CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
    CHECK(factorize(125) == Factorization{{5, 3}});
    CHECK(factorize(97) == Factorization{{97, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
    CHECK_THROWS_AS(factorize(-4), std::invalid_argument);
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(9) == 6);
    CHECK(euler_phi(15) == 8);
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);

    // divisor sum identity
    for (int n = 1; n <= 300; ++n) {
        std::int64_t sum = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) sum += euler_phi(d);
        CHECK(sum == n);
    }
}

TEST_CASE("mobius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(mobius(0), std::invalid_argument);
}

TEST_CASE("units") {
    CHECK(units(2) == std::vector<std::int64_t>{1});
    CHECK(units(9) == std::vector<std::int64_t>{1, 2, 4, 5, 7, 8});
    CHECK(units(5) == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK_THROWS_AS(units(1), std::invalid_argument);
    for (int n = 2; n <= 200; ++n)
        CHECK(static_cast<std::int64_t>(units(n).size()) == euler_phi(n));
}

TEST_CASE("squarefree_kernel") {
    CHECK(squarefree_kernel(1).s == 1);
    CHECK(squarefree_kernel(1).r == 0);
    CHECK(squarefree_kernel(18).s == 6);
    CHECK(squarefree_kernel(18).r == 2);
    CHECK(squarefree_kernel(15).s == 15);
    CHECK(squarefree_kernel(15).r == 2);
}

TEST_CASE("ramanujan_sum spot values") {
    CHECK(ramanujan_sum(0, 6) == 2); // c(0, n) = phi(n)
    CHECK(ramanujan_sum(3, 6) == -2);
    CHECK(ramanujan_sum(1, 9) == 0);
    CHECK_THROWS_AS(ramanujan_sum(6, 6), std::invalid_argument);
    CHECK_THROWS_AS(ramanujan_sum(-1, 6), std::invalid_argument);
    CHECK_THROWS_AS(ramanujan_sum(0, 1), std::invalid_argument);
}

TEST_CASE("ramanujan_sum row sums vanish") {
    for (int n = 2; n <= 300; ++n) {
        std::int64_t sum = 0;
        for (int k = 0; k < n; ++k) sum += ramanujan_sum(k, n);
        CHECK(sum == 0);
    }
}

TEST_CASE("ramanujan_sum symmetry") {
    for (int n = 2; n <= 120; ++n)
        for (int k = 1; k < n; ++k) CHECK(ramanujan_sum(k, n) == ramanujan_sum(n - k, n));
}

TEST_CASE("ramanujan_sum equals the unit-root sum") {
    for (int n = 2; n <= 150; ++n)
        for (int k = 0; k < n; ++k) {
            const double oracle = ramanujan_dft(k, n);
            CHECK(std::abs(static_cast<double>(ramanujan_sum(k, n)) - oracle) < 1e-9);
        }
}
