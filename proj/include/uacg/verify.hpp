#pragma once

#include <string>
#include <vector>

#include "uacg/closed_forms.hpp"

namespace uacg {

enum class CheckKind { spectrum, energy, bounds, identity, chain };
enum class CheckStatus { pass, fail, not_applicable, caveat };

const char* to_string(CheckKind kind);
const char* to_string(CheckStatus status);

/// One cross-validation outcome. status == pass implies max_deviation is
/// within the tolerance the check ran at; not_applicable records a
/// (family, n) pair with no closed form to check.
struct VerificationReport {
    int n = 0;
    std::string family; // closed family tag, or the identity name
    CheckKind kind = CheckKind::spectrum;
    CheckStatus status = CheckStatus::not_applicable;
    double max_deviation = 0.0;
    std::string details;
};

constexpr double kDefaultTol = 1e-8;

/// Closed-form spectrum against the Jacobi oracle on the built matrix.
VerificationReport verify_spectrum(ClosedFamily family, int n, double tol = kDefaultTol);

/// Rank-paired containment: oracle eigenvalues sorted descending must fall
/// inside the bound intervals sorted descending, index by index, with tol
/// slack on the endpoints. Odd n only.
VerificationReport verify_bounds(ClosedFamily family, int n, double tol = kDefaultTol);

/// Closed-form energy against the oracle-spectrum energy, plus containment
/// in the energy-bound interval when one exists for (family, n). A caveat
/// from the closed form surfaces as status caveat, not fail.
VerificationReport verify_energy(ClosedFamily family, int n, double tol = kDefaultTol);

/// Cross-identities at one n: addition/unitary Cayley cospectrality over all
/// six matrix families (even n), distance Laplacian energy == distance
/// energy (even n, transmission regular), the left = permutation * right
/// circulant relation, and the trace identities.
std::vector<VerificationReport> verify_identities(int n, double tol = kDefaultTol);

/// The concluding eigenvalue chain evaluated from oracle spectra. Principal
/// values (the all-ones-direction eigenvalue: the largest for the signless,
/// distance and distance signless families, 0 for the distance Laplacian)
/// are split off and compared as
///     dl0 < signless0 < distance0 < dq0,
/// the remaining values are sorted descending and compared rank by rank as
///     2 * distance_k < signless_k < dq_k < dl_k.
/// Violations are recorded as data; the report status is always pass.
struct ChainEvaluation {
    int n = 0;
    bool principal_ok = false;
    std::vector<int> violated_ranks; // 1-based ranks among the non-principal values
    std::string principal_detail;
};

ChainEvaluation evaluate_conclusion_chain(int n);
VerificationReport conclusion_chain_report(int n);

struct ScanOptions {
    int n_from = 0;
    int n_to = 0;
    std::vector<ClosedFamily> families; // empty means all six
    double tol = kDefaultTol;
    bool include_identities = true; // identities + chain per n
    int jobs = 0;                   // 0: hardware concurrency
};

struct ScanResult {
    std::vector<VerificationReport> reports; // sorted by (n, family, kind)
    int passed = 0;
    int failed = 0;
    int caveats = 0;
    int not_applicable = 0;
};

/// Runs every applicable check over the range. Distinct n are evaluated in
/// parallel; the report order and content do not depend on the schedule.
/// Throws std::invalid_argument for an empty range or n_from < 2.
ScanResult scan(const ScanOptions& options);

} // namespace uacg
