#include "uacg/numtheory.hpp"

#include <numeric>
#include <stdexcept>

namespace uacg {

Factorization factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be a positive integer");
    Factorization out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be a positive integer");
    std::int64_t phi = n;
    for (const auto& pp : factorize(n)) phi -= phi / pp.prime;
    return phi;
}

int mobius(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be a positive integer");
    int primes = 0;
    for (const auto& pp : factorize(n)) {
        if (pp.exponent > 1) return 0;
        ++primes;
    }
    return (primes % 2 == 0) ? 1 : -1;
}

std::vector<std::int64_t> units(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("units: n must be at least 2");
    std::vector<std::int64_t> out;
    for (std::int64_t a = 1; a < n; ++a)
        if (std::gcd(a, n) == 1) out.push_back(a);
    return out;
}

SquarefreeKernel squarefree_kernel(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("squarefree_kernel: n must be a positive integer");
    SquarefreeKernel k{1, 0};
    for (const auto& pp : factorize(n)) {
        k.s *= pp.prime;
        ++k.r;
    }
    return k;
}

std::int64_t ramanujan_sum(std::int64_t k, std::int64_t n) {
    if (n < 2) throw std::invalid_argument("ramanujan_sum: n must be at least 2");
    if (k < 0 || k >= n) throw std::invalid_argument("ramanujan_sum: k must lie in 0..n-1");
    const std::int64_t t = n / std::gcd(k, n);
    const int mu = mobius(t);
    if (mu == 0) return 0;
    return mu * (euler_phi(n) / euler_phi(t));
}

} // namespace uacg
