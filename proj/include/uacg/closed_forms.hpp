#pragma once

#include <cstdint>
#include <string>

#include "uacg/linalg.hpp"

namespace uacg {

/// Spectral families with number-theoretic closed forms. The complement
/// family refers to the complement of the addition Cayley graph; everything
/// else is the addition Cayley graph itself.
enum class ClosedFamily {
    signless,
    signless_complement,
    laplacian,
    distance,
    distance_laplacian,
    distance_signless,
};

const char* to_string(ClosedFamily family);
bool closed_family_from_string(const std::string& name, ClosedFamily& out);

/// Which results exist for (family, n) and through which case split.
struct FormulaCase {
    bool has_spectrum = false;
    bool has_energy = false;
    bool has_bounds = false;  // odd-n interval theorems
    bool energy_caveat = false;
    std::string branch;       // "even", "power-of-two", "prime-power", "odd", "none"
};

FormulaCase classify(ClosedFamily family, int n);

/// Exact spectrum where one exists. Branches:
///  - signless: even n via phi(n) + c(k, n); odd prime powers via the block
///    determinant form; otherwise NoClosedForm.
///  - signless_complement: even n and odd prime powers; otherwise none.
///  - laplacian: every odd n; even n via regularity (phi(n) - c(k, n)).
///  - distance: n = 2^m; even n with an odd prime factor; odd prime powers.
///  - distance_laplacian: every odd n; every even n.
///  - distance_signless: every even n; odd prime powers.
/// Distance families require n > 2. Throws NoClosedForm otherwise.
Spectrum closed_spectrum(ClosedFamily family, int n);

/// Closed-form energies. The distance energy for an odd prime n = p carries
/// a caveat: the prime-power product formula goes negative in one factor at
/// m = 1, so the returned value is the sum of |eigenvalue| over the exact
/// spectrum instead, with caveat = true.
EnergyValue closed_energy(ClosedFamily family, int n);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// One closed interval per eigenvalue index (n of them), from the odd-n
/// bound theorems: circulant eigenvalues shifted by the diagonal range.
/// Valid families: signless (width 2), signless_complement (width 2),
/// distance (width 1), distance_signless (width 2). Odd n >= 3 only.
struct BoundSet {
    ClosedFamily family = ClosedFamily::signless;
    int n = 0;
    std::vector<Interval> intervals; // sorted descending by midpoint
};

BoundSet eigenvalue_bounds(ClosedFamily family, int n);

/// Energy bounds for odd n: signless, signless_complement and distance.
Interval energy_bounds(ClosedFamily family, int n);

/// Eigenvalues of the two gcd-pattern circulants on residues 0..n-1:
///  - coprime:    entry 1 iff gcd(i - j, n) == 1 (the unitary Cayley
///                adjacency), eigenvalues c(k, n);
///  - noncoprime: entry 1 iff gcd(i - j, n) != 1, eigenvalues
///                n - 1 - phi(n) and -c(k, n) - 1 for k = 1..n-1.
enum class GcdPattern { coprime, noncoprime };

Spectrum gcd_pattern_spectrum(GcdPattern which, int n);

/// Distance Laplacian spectrum of a diameter <= 2 graph from its Laplacian
/// spectrum: {0} plus {2n - mu : mu nonzero}. The input must contain an
/// eigenvalue 0 with multiplicity exactly one (the caller asserts the
/// diameter condition).
Spectrum distance_laplacian_from_laplacian(const Spectrum& laplacian, int n);

/// The two radicand shapes floating around for the odd prime-power distance
/// spectrum. `reduced` is sqrt(p^2m + 2p^m - 4p^(m-1) + 1) and is the one
/// the oracle confirms; `expanded` carries the extra
/// 4p^(2m-1) - 12p^(2m-2) terms, agrees with `reduced` only at p = 3, and is
/// kept so tests can demonstrate the disagreement at n = 5.
enum class DistanceRadicand { reduced, expanded };

Spectrum distance_prime_power_spectrum(std::int64_t p, int m,
                                       DistanceRadicand radicand = DistanceRadicand::reduced);

} // namespace uacg
