#pragma once

#include <cstdint>
#include <vector>

namespace uacg {

struct PrimePower {
    std::int64_t prime;
    int exponent;
    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization, ascending by prime. Empty for n = 1.
using Factorization = std::vector<PrimePower>;

Factorization factorize(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// 0 if n has a squared prime factor, otherwise (-1)^(number of prime factors).
int mobius(std::int64_t n);

/// Residues in 1..n-1 coprime to n, ascending. Requires n >= 2.
std::vector<std::int64_t> units(std::int64_t n);

/// s = product of the distinct primes dividing n, r = how many there are.
/// s == n exactly when n is squarefree; (1, 0) for n = 1.
struct SquarefreeKernel {
    std::int64_t s;
    int r;
};
SquarefreeKernel squarefree_kernel(std::int64_t n);

/// Ramanujan sum c(k, n) = mu(t) * phi(n) / phi(t) with t = n / gcd(k, n).
/// Exact in integers; phi(t) divides phi(n) because t divides n.
/// c(0, n) = phi(n). Requires n >= 2 and 0 <= k < n.
std::int64_t ramanujan_sum(std::int64_t k, std::int64_t n);

} // namespace uacg
