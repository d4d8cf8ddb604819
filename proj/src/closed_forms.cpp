#include "uacg/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "uacg/numtheory.hpp"

namespace uacg {

namespace {

std::int64_t pow_int(std::int64_t base, int exp) {
    std::int64_t v = 1;
    while (exp-- > 0) v *= base;
    return v;
}

std::vector<std::int64_t> ramanujan_row(int n) {
    std::vector<std::int64_t> c(n);
    for (int k = 0; k < n; ++k) c[k] = ramanujan_sum(k, n);
    return c;
}

struct SpectrumBuilder {
    std::vector<SpectrumEntry> entries;
    void add(double value, std::int64_t multiplicity) {
        if (multiplicity > 0) entries.push_back({value, static_cast<int>(multiplicity)});
    }
    Spectrum done() { return Spectrum::from_entries(std::move(entries)); }
};

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// n = p^m with p odd; returns false otherwise.
bool odd_prime_power(int n, std::int64_t& p, int& m) {
    if (n < 3 || n % 2 == 0) return false;
    const auto f = factorize(n);
    if (f.size() != 1) return false;
    p = f[0].prime;
    m = f[0].exponent;
    return true;
}

void require_graph_order(ClosedFamily family, int n) {
    const bool distance_family = family == ClosedFamily::distance ||
                                 family == ClosedFamily::distance_laplacian ||
                                 family == ClosedFamily::distance_signless;
    if (n < 2 || (distance_family && n < 3))
        throw NoClosedForm(std::string("no closed form: ") + to_string(family) +
                           " requires n >= " + (distance_family ? "3" : "2"));
}

[[noreturn]] void no_closed_form(ClosedFamily family, int n, const char* what) {
    throw NoClosedForm(std::string("no closed-form ") + what + " for " + to_string(family) +
                       " at n=" + std::to_string(n));
}

// Block-determinant spectra at n = p^m, p odd. Multiplicities with value 0
// (p = 3 or m = 1 edge cases) drop out in SpectrumBuilder::add.

Spectrum signless_prime_power(std::int64_t p, int m) {
    const std::int64_t pm = pow_int(p, m);
    const std::int64_t q = pow_int(p, m - 1);
    const double x1 = static_cast<double>(3 * pm - 4 * q - 2);
    const double y1 = std::sqrt(static_cast<double>((pm - 2) * (pm - 2) + 8 * q));
    SpectrumBuilder b;
    b.add(static_cast<double>(pm - 2 * q - 2), (p - 3) / 2);
    b.add((x1 - y1) / 2.0, 1);
    b.add(static_cast<double>(pm - q - 2), pm - q - p + 1);
    b.add(static_cast<double>(pm - q), q - 1);
    b.add(static_cast<double>(pm - 2), (p - 1) / 2);
    b.add((x1 + y1) / 2.0, 1);
    return b.done();
}

Spectrum signless_complement_prime_power(std::int64_t p, int m) {
    const std::int64_t q = pow_int(p, m - 1);
    SpectrumBuilder b;
    b.add(0.0, (p - 1) / 2);
    b.add(static_cast<double>(q - 2), q - 1);
    b.add(static_cast<double>(q), (p - 1) * (q - 1));
    b.add(static_cast<double>(2 * q - 2), 1);
    b.add(static_cast<double>(2 * q), (p - 1) / 2);
    return b.done();
}

Spectrum distance_signless_prime_power(std::int64_t p, int m) {
    const std::int64_t pm = pow_int(p, m);
    const std::int64_t q = pow_int(p, m - 1);
    const double x3 = static_cast<double>(3 * pm + 4 * q - 6);
    const double y3 = std::sqrt(static_cast<double>(pm * pm + 4 * pm - 8 * q + 4));
    SpectrumBuilder b;
    b.add(static_cast<double>(pm - 2), (p - 1) / 2);
    b.add(static_cast<double>(pm + q - 4), q - 1);
    b.add(static_cast<double>(pm + q - 2), (p - 1) * (q - 1));
    b.add((x3 - y3) / 2.0, 1);
    b.add(static_cast<double>(pm + 2 * q - 2), (p - 3) / 2);
    b.add((x3 + y3) / 2.0, 1);
    return b.done();
}

} // namespace

Spectrum distance_prime_power_spectrum(std::int64_t p, int m, DistanceRadicand radicand) {
    if (p < 3 || p % 2 == 0 || m < 1)
        throw std::invalid_argument("distance_prime_power_spectrum: need odd prime p, m >= 1");
    const std::int64_t pm = pow_int(p, m);
    const std::int64_t q = pow_int(p, m - 1);
    const double x2 = static_cast<double>(pm + 2 * q - 3);
    std::int64_t rad = pm * pm + 2 * pm - 4 * q + 1;
    if (radicand == DistanceRadicand::expanded)
        rad += 4 * pow_int(p, 2 * m - 1) - 12 * pow_int(p, 2 * m - 2);
    const double y2 = std::sqrt(static_cast<double>(rad));
    SpectrumBuilder b;
    b.add(static_cast<double>(-1 - q), (p - 1) / 2);
    b.add(-2.0, q - 1);
    b.add(-1.0, (p - 1) * (q - 1));
    b.add((x2 - y2) / 2.0, 1);
    b.add(static_cast<double>(q - 1), (p - 3) / 2);
    b.add((x2 + y2) / 2.0, 1);
    return b.done();
}

const char* to_string(ClosedFamily family) {
    switch (family) {
        case ClosedFamily::signless: return "signless";
        case ClosedFamily::signless_complement: return "signless-complement";
        case ClosedFamily::laplacian: return "laplacian";
        case ClosedFamily::distance: return "distance";
        case ClosedFamily::distance_laplacian: return "distance-laplacian";
        case ClosedFamily::distance_signless: return "distance-signless";
    }
    return "?";
}

bool closed_family_from_string(const std::string& name, ClosedFamily& out) {
    for (ClosedFamily f :
         {ClosedFamily::signless, ClosedFamily::signless_complement, ClosedFamily::laplacian,
          ClosedFamily::distance, ClosedFamily::distance_laplacian,
          ClosedFamily::distance_signless}) {
        if (name == to_string(f)) {
            out = f;
            return true;
        }
    }
    return false;
}

FormulaCase classify(ClosedFamily family, int n) {
    FormulaCase fc;
    fc.branch = "none";
    const bool distance_family = family == ClosedFamily::distance ||
                                 family == ClosedFamily::distance_laplacian ||
                                 family == ClosedFamily::distance_signless;
    if (n < 2 || (distance_family && n < 3)) return fc;

    const bool even = n % 2 == 0;
    std::int64_t p = 0;
    int m = 0;
    const bool pm = odd_prime_power(n, p, m);

    switch (family) {
        case ClosedFamily::signless:
        case ClosedFamily::signless_complement:
            if (even) {
                fc.has_spectrum = fc.has_energy = true;
                fc.branch = "even";
            } else {
                fc.has_bounds = true;
                fc.branch = "odd";
                if (pm) {
                    fc.has_spectrum = fc.has_energy = true;
                    fc.branch = "prime-power";
                }
            }
            break;
        case ClosedFamily::laplacian:
            fc.has_spectrum = true;
            fc.branch = even ? "even" : "odd";
            break;
        case ClosedFamily::distance:
            if (even) {
                fc.has_spectrum = fc.has_energy = true;
                fc.branch = is_power_of_two(n) ? "power-of-two" : "even-with-odd-prime";
            } else {
                fc.has_bounds = true;
                fc.branch = "odd";
                if (pm) {
                    fc.has_spectrum = fc.has_energy = true;
                    fc.energy_caveat = m == 1;
                    fc.branch = "prime-power";
                }
            }
            break;
        case ClosedFamily::distance_laplacian:
            fc.has_spectrum = fc.has_energy = true;
            fc.branch = even ? (is_power_of_two(n) ? "power-of-two" : "even-with-odd-prime")
                             : "odd";
            break;
        case ClosedFamily::distance_signless:
            if (even) {
                fc.has_spectrum = true;
                fc.branch = is_power_of_two(n) ? "power-of-two" : "even-with-odd-prime";
            } else {
                fc.has_bounds = true;
                fc.branch = "odd";
                if (pm) {
                    fc.has_spectrum = true;
                    fc.branch = "prime-power";
                }
            }
            break;
    }
    return fc;
}

Spectrum closed_spectrum(ClosedFamily family, int n) {
    require_graph_order(family, n);
    const bool even = n % 2 == 0;
    const std::int64_t phi = euler_phi(n);
    std::int64_t p = 0;
    int m = 0;
    const bool pm = odd_prime_power(n, p, m);

    switch (family) {
        case ClosedFamily::signless: {
            if (even) {
                const auto c = ramanujan_row(n);
                SpectrumBuilder b;
                for (int k = 0; k < n; ++k) b.add(static_cast<double>(phi + c[k]), 1);
                return b.done();
            }
            if (pm) return signless_prime_power(p, m);
            no_closed_form(family, n, "spectrum");
        }
        case ClosedFamily::signless_complement: {
            if (even) {
                // Principal value 2(n - phi(n) - 1): the all-ones direction of
                // J - A shifted by the constant complement degree.
                const auto c = ramanujan_row(n);
                SpectrumBuilder b;
                b.add(static_cast<double>(2 * (n - phi - 1)), 1);
                for (int k = 1; k < n; ++k)
                    b.add(static_cast<double>(n - phi - c[k] - 2), 1);
                return b.done();
            }
            if (pm) return signless_complement_prime_power(p, m);
            no_closed_form(family, n, "spectrum");
        }
        case ClosedFamily::laplacian: {
            const auto c = ramanujan_row(n);
            SpectrumBuilder b;
            if (even) {
                for (int k = 0; k < n; ++k) b.add(static_cast<double>(phi - c[k]), 1);
            } else {
                for (int k = 0; k <= (n - 1) / 2; ++k) b.add(static_cast<double>(phi - c[k]), 1);
                for (int k = (n + 1) / 2; k < n; ++k) b.add(static_cast<double>(phi + c[k]), 1);
            }
            return b.done();
        }
        case ClosedFamily::distance: {
            if (even && is_power_of_two(n)) {
                SpectrumBuilder b;
                b.add(1.5 * n - 2, 1);
                b.add(0.5 * n - 2, 1);
                b.add(-2.0, n - 2);
                return b.done();
            }
            if (even) {
                const auto c = ramanujan_row(n);
                SpectrumBuilder b;
                b.add(2.5 * n - 2 * phi - 2, 1);
                b.add(static_cast<double>(2 * (phi - 1) - n / 2), 1);
                for (int k = 1; k < n; ++k)
                    if (k != n / 2) b.add(static_cast<double>(-2 - 2 * c[k]), 1);
                return b.done();
            }
            if (pm) return distance_prime_power_spectrum(p, m);
            no_closed_form(family, n, "spectrum");
        }
        case ClosedFamily::distance_laplacian: {
            if (even && is_power_of_two(n)) {
                SpectrumBuilder b;
                b.add(0.5 * n - phi, 1);
                b.add(1.5 * n - phi, 1);
                b.add(static_cast<double>(2 * n - phi), n - 2);
                return b.done();
            }
            const auto c = ramanujan_row(n);
            SpectrumBuilder b;
            if (even) {
                b.add(0.0, 1);
                b.add(static_cast<double>(3 * n - 4 * phi), 1);
                for (int k = 1; k < n; ++k)
                    if (k != n / 2) b.add(2.5 * n - 2 * phi + 2 * c[k], 1);
            } else {
                b.add(0.0, 1);
                for (int k = 1; k <= (n - 1) / 2; ++k)
                    b.add(static_cast<double>(2 * n + c[k] - phi), 1);
                for (int k = (n + 1) / 2; k < n; ++k)
                    b.add(static_cast<double>(2 * n - c[k] - phi), 1);
            }
            return b.done();
        }
        case ClosedFamily::distance_signless: {
            if (even && is_power_of_two(n)) {
                SpectrumBuilder b;
                b.add(3.5 * n - phi - 4, 1);
                b.add(2.5 * n - phi - 4, 1);
                b.add(static_cast<double>(2 * n - phi - 4), n - 2);
                return b.done();
            }
            if (even) {
                const auto c = ramanujan_row(n);
                SpectrumBuilder b;
                b.add(static_cast<double>(5 * n - 4 * phi - 4), 1);
                b.add(static_cast<double>(2 * n - 4), 1);
                for (int k = 1; k < n; ++k)
                    if (k != n / 2) b.add(2.5 * n - 2 * phi - 2 * c[k] - 4, 1);
                return b.done();
            }
            if (pm) return distance_signless_prime_power(p, m);
            no_closed_form(family, n, "spectrum");
        }
    }
    no_closed_form(family, n, "spectrum");
}

namespace {

// Centering constants of the energy definitions, from the counts the graph
// families force: even n is phi(n)-regular, odd n is semiregular with
// phi(n) vertices one degree short.
double mean_degree(int n) {
    const double phi = static_cast<double>(euler_phi(n));
    return n % 2 == 0 ? phi : phi * (n - 1) / n;
}

double mean_complement_degree(int n) {
    return n - 1 - mean_degree(n);
}

double mean_transmission(int n) {
    const std::int64_t phi = euler_phi(n);
    if (n % 2 == 0)
        return static_cast<double>(is_power_of_two(n) ? 2LL * n - 2 - phi
                                                      : 5LL * n / 2 - 2 - 2 * phi);
    return static_cast<double>(2 * n - phi - 2) + static_cast<double>(phi) / n;
}

} // namespace

EnergyValue closed_energy(ClosedFamily family, int n) {
    require_graph_order(family, n);
    const bool even = n % 2 == 0;
    const std::int64_t phi = euler_phi(n);
    const auto [s, r] = squarefree_kernel(n);
    std::int64_t p = 0;
    int m = 0;
    const bool pm = odd_prime_power(n, p, m);

    switch (family) {
        case ClosedFamily::signless: {
            if (even)
                return {static_cast<double>((std::int64_t{1} << r) * phi), mean_degree(n), false};
            if (pm) {
                const double pd = static_cast<double>(p);
                const std::int64_t pmv = pow_int(p, m);
                if (m == 1)
                    return {pd - 2 - 2 / pd + std::sqrt((pd - 2) * (pd - 2) + 8), mean_degree(n),
                            false};
                const double root =
                    std::sqrt(static_cast<double>((pmv - 2) * (pmv - 2) + 8 * pow_int(p, m - 1)));
                return {static_cast<double>(2 * pmv - pow_int(p, m - 1) - 2 * pow_int(p, m - 2)) -
                            pd - 2 + 1 / pd + root,
                        mean_degree(n), false};
            }
            no_closed_form(family, n, "energy");
        }
        case ClosedFamily::signless_complement: {
            if (even) {
                double prod = 1.0;
                for (const auto& pp : factorize(n)) prod *= 2.0 - static_cast<double>(pp.prime);
                return {static_cast<double>(2 * n - 2 + ((std::int64_t{1} << r) - 2) * phi - s) +
                            prod,
                        mean_complement_degree(n), false};
            }
            if (pm) {
                const double pd = static_cast<double>(p);
                if (m == 1) return {pd - 1 / pd, mean_complement_degree(n), false};
                return {static_cast<double>(pow_int(p, m) + 3 * pow_int(p, m - 1) -
                                            2 * pow_int(p, m - 2) - 5) +
                            3 / pd,
                        mean_complement_degree(n), false};
            }
            no_closed_form(family, n, "energy");
        }
        case ClosedFamily::distance: {
            if (even && is_power_of_two(n)) return {4.0 * n - 8, 0.0, false};
            if (even) {
                const double value = (9.0 * n - 4 * s - 4) / 2 +
                                     phi * ((std::int64_t{2} << r) - 6) +
                                     std::abs(2.0 * phi - 2 - n / 2.0);
                return {value, 0.0, false};
            }
            if (pm) {
                if (m == 1) {
                    // The product formula turns negative in one factor at
                    // m = 1; report the spectrum sum and flag it.
                    EnergyValue direct = energy(closed_spectrum(family, n), 0.0);
                    direct.caveat = true;
                    return direct;
                }
                return {static_cast<double>(3 * pow_int(p, m) + pow_int(p, m - 1) - p - 3), 0.0,
                        false};
            }
            no_closed_form(family, n, "energy");
        }
        case ClosedFamily::distance_laplacian: {
            if (even) {
                EnergyValue de = closed_energy(ClosedFamily::distance, n);
                // transmission regular: distance Laplacian energy equals
                // distance energy
                return {de.value, mean_transmission(n), false};
            }
            const double phid = static_cast<double>(phi);
            const double shared = 2.0 * n - 2 - (n - 1.0) / n * phid;
            const double twor = static_cast<double>(std::int64_t{1} << r);
            double value;
            if (s == n)
                value = phid * (2 - phid / n) + (twor - 2) * phid + shared;
            else
                value = (n - s) * (2 - phid / n) + (twor - 1) * phid + shared;
            return {value, mean_transmission(n), false};
        }
        case ClosedFamily::laplacian:
        case ClosedFamily::distance_signless:
            no_closed_form(family, n, "energy");
    }
    no_closed_form(family, n, "energy");
}

BoundSet eigenvalue_bounds(ClosedFamily family, int n) {
    if (n < 3 || n % 2 == 0)
        throw NoClosedForm("eigenvalue_bounds: only the odd-n theorems give intervals");
    const std::int64_t phi = euler_phi(n);
    const auto c = ramanujan_row(n);

    // Circulant part: the left-circulant split with the principal index first.
    std::vector<double> base;
    base.reserve(n);
    double dlo = 0.0, dhi = 0.0;
    switch (family) {
        case ClosedFamily::signless:
            base.push_back(static_cast<double>(c[0])); // c(0, n) = phi(n)
            dlo = static_cast<double>(phi - 2);
            dhi = static_cast<double>(phi);
            break;
        case ClosedFamily::signless_complement:
            base.push_back(static_cast<double>(n - phi));
            dlo = static_cast<double>(n - phi - 2);
            dhi = static_cast<double>(n - phi);
            break;
        case ClosedFamily::distance:
            base.push_back(static_cast<double>(2 * n - phi));
            dlo = -2.0;
            dhi = -1.0;
            break;
        case ClosedFamily::distance_signless:
            base.push_back(static_cast<double>(2 * n - phi));
            dlo = static_cast<double>(2 * n - phi - 4);
            dhi = static_cast<double>(2 * n - phi - 2);
            break;
        default:
            throw NoClosedForm(std::string("eigenvalue_bounds: no bound theorem for ") +
                               to_string(family));
    }
    for (int k = 1; k <= (n - 1) / 2; ++k) base.push_back(static_cast<double>(c[k]));
    for (int k = (n + 1) / 2; k < n; ++k) base.push_back(static_cast<double>(-c[k]));

    BoundSet bounds;
    bounds.family = family;
    bounds.n = n;
    bounds.intervals.reserve(n);
    for (double b : base) bounds.intervals.push_back({b + dlo, b + dhi});
    std::sort(bounds.intervals.begin(), bounds.intervals.end(),
              [](const Interval& a, const Interval& b) { return a.lo + a.hi > b.lo + b.hi; });
    return bounds;
}

Interval energy_bounds(ClosedFamily family, int n) {
    if (n < 3 || n % 2 == 0)
        throw NoClosedForm("energy_bounds: only stated for odd n");
    const double phi = static_cast<double>(euler_phi(n));
    const auto [sk, r] = squarefree_kernel(n);
    const double s = static_cast<double>(sk);
    const double twor = static_cast<double>(std::int64_t{1} << r);
    const bool squarefree = sk == n;

    switch (family) {
        case ClosedFamily::signless:
            if (squarefree)
                return {phi * (twor + 1 + 1.0 / n) - n - 1 - phi * phi / n,
                        phi * (twor + 1.0 / n) + n - 1};
            return {phi * (n * (twor + 1) - s + 1) / n - s - 1,
                    phi * (n * (twor - 1) + s + 1) / n + 2 * n - s - 1};
        case ClosedFamily::signless_complement:
            if (squarefree)
                return {phi * (twor - 2 - 1.0 / n) + phi * phi / n,
                        phi * (twor - 2 - 1.0 / n) + 2 * n};
            return {phi * (n * (twor - 3) + s - 1) / n + 2 * n - 2 * s,
                    phi * (n * (twor - 1) - s - 1) / n + 2 * n};
        case ClosedFamily::distance:
            return {(twor - 2) * phi + (4 * n - s - 3) / 2,
                    (twor - 2) * phi + (6 * n - s - 3) / 2};
        default:
            throw NoClosedForm(std::string("energy_bounds: none stated for ") + to_string(family));
    }
}

Spectrum gcd_pattern_spectrum(GcdPattern which, int n) {
    if (n < 2) throw std::invalid_argument("gcd_pattern_spectrum: n must be at least 2");
    const auto c = ramanujan_row(n);
    SpectrumBuilder b;
    if (which == GcdPattern::coprime) {
        for (int k = 0; k < n; ++k) b.add(static_cast<double>(c[k]), 1);
    } else {
        b.add(static_cast<double>(n - 1 - euler_phi(n)), 1);
        for (int k = 1; k < n; ++k) b.add(static_cast<double>(-c[k] - 1), 1);
    }
    return b.done();
}

Spectrum distance_laplacian_from_laplacian(const Spectrum& laplacian, int n) {
    const std::vector<SpectrumEntry>& entries = laplacian.entries();
    if (entries.empty()) throw std::invalid_argument("distance_laplacian_from_laplacian: empty");

    // locate the single zero eigenvalue
    int zero_index = -1;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (std::abs(entries[i].value) <= Spectrum::kClusterTol) {
            zero_index = static_cast<int>(i);
            break;
        }
    }
    if (zero_index < 0)
        throw std::invalid_argument(
            "distance_laplacian_from_laplacian: spectrum has no zero eigenvalue");
    if (entries[static_cast<std::size_t>(zero_index)].multiplicity != 1)
        throw std::invalid_argument(
            "distance_laplacian_from_laplacian: zero eigenvalue must be simple");

    SpectrumBuilder b;
    b.add(0.0, 1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (static_cast<int>(i) == zero_index) continue;
        b.add(2.0 * n - entries[i].value, entries[i].multiplicity);
    }
    return b.done();
}

} // namespace uacg
