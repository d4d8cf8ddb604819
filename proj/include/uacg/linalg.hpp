#pragma once

#include <vector>

#include "uacg/errors.hpp"
#include "uacg/graph.hpp"

namespace uacg {

/// Dense real matrix, row-major. Everything spectral in this library goes
/// through symmetric instances; the general layout exists because right
/// circulants are not symmetric.
class Matrix {
public:
    static constexpr int kMaxOrder = 3000;

    explicit Matrix(int n);

    int order() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    double trace() const;
    double frobenius_norm() const;
    bool is_symmetric() const;

    const std::vector<double>& data() const { return a_; }

private:
    int n_;
    std::vector<double> a_;
};

struct SpectrumEntry {
    double value;
    int multiplicity;
};

/// Sorted real eigenvalue multiset. Values ascending; nearby values are
/// merged under a relative clustering tolerance so exact multiplicities
/// survive the numerics.
class Spectrum {
public:
    static constexpr double kClusterTol = 1e-7;

    Spectrum() = default;

    static Spectrum from_values(const std::vector<double>& values,
                                double cluster_tol = kClusterTol);
    static Spectrum from_entries(std::vector<SpectrumEntry> entries,
                                 double cluster_tol = kClusterTol);

    const std::vector<SpectrumEntry>& entries() const { return entries_; }
    int total_multiplicity() const;
    std::vector<double> expanded() const; // ascending, one slot per multiplicity
    double sum() const;                   // sum of value * multiplicity
    double min_value() const;
    double max_value() const;

private:
    std::vector<SpectrumEntry> entries_;
};

/// Standard circulant layouts: row i of the right form is the generating
/// vector cyclically shifted right i times; the left form walks the shifts
/// the other way and is always symmetric.
Matrix right_circulant(const std::vector<double>& row);
Matrix left_circulant(const std::vector<double>& row);

/// Permutation P with P(0,0) = 1 and P(i, n-i) = 1: index negation mod n.
/// left_circulant(c) == negation_permutation(n) * right_circulant(c).
Matrix negation_permutation(int n);

Matrix multiply(const Matrix& a, const Matrix& b);
double max_abs_difference(const Matrix& a, const Matrix& b);

/// Eigenvalues of the left circulant of `row`, assembled from the right
/// circulant DFT values v_k: {v_0} plus (+|v_k|, -|v_k|) pairs for
/// 0 < k < n/2, plus v_{n/2} when n is even.
Spectrum left_circulant_spectrum(const std::vector<double>& row);

enum class MatrixFamily {
    adjacency,
    laplacian,
    signless_laplacian,
    distance,
    distance_laplacian,
    distance_signless_laplacian,
};

const char* to_string(MatrixFamily family);

/// The named matrix of the graph. Distance families run BFS and therefore
/// propagate DisconnectedGraph. Entries are integers stored exactly.
Matrix build_matrix(MatrixFamily family, const Graph& g);

/// Eigenvalues by cyclic Jacobi rotations; the independent oracle every
/// closed form in this library is checked against. Converged when the
/// off-diagonal Frobenius norm drops below tol times the Frobenius norm of
/// the input. Throws NoConvergence after kSweepCap sweeps and
/// std::invalid_argument for non-symmetric input.
Spectrum jacobi_spectrum(const Matrix& m, double tol = 1e-12);

constexpr int kJacobiSweepCap = 100;

/// Index-wise comparison of the expanded value lists.
/// size_mismatch (total multiplicities differ) is reported separately from a
/// value mismatch; max_deviation is max_i |a_i - b_i| / max(1, |a_i|).
struct SpectrumComparison {
    bool equal = false;
    bool size_mismatch = false;
    double max_deviation = 0.0;
};

SpectrumComparison spectrum_equal(const Spectrum& a, const Spectrum& b, double tol);

/// Sum of multiplicity * |value - shift| over the spectrum. The shift is the
/// centering constant of the energy flavor: 0 for distance energy, average
/// degree for (signless) Laplacian energy, mean transmission for the
/// distance Laplacian energy.
struct EnergyValue {
    double value = 0.0;
    double shift = 0.0;
    bool caveat = false;
};

EnergyValue energy(const Spectrum& s, double shift);

} // namespace uacg
