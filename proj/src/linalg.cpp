#include "uacg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uacg {

Matrix::Matrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Matrix: order must be positive");
    if (n > kMaxOrder)
        throw std::invalid_argument("Matrix: order above " + std::to_string(kMaxOrder));
    a_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

double Matrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

bool Matrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Spectrum

namespace {

std::vector<SpectrumEntry> cluster(std::vector<SpectrumEntry> raw, double tol) {
    std::sort(raw.begin(), raw.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value < b.value; });
    std::vector<SpectrumEntry> out;
    double weighted = 0.0;
    for (const auto& e : raw) {
        if (e.multiplicity <= 0) continue;
        if (!out.empty() &&
            e.value - out.back().value <= tol * std::max(1.0, std::abs(e.value))) {
            // merge; representative value is the weighted mean of the cluster
            weighted += e.value * e.multiplicity;
            out.back().multiplicity += e.multiplicity;
            out.back().value = weighted / out.back().multiplicity;
        } else {
            out.push_back(e);
            weighted = e.value * e.multiplicity;
        }
    }
    return out;
}

} // namespace

Spectrum Spectrum::from_values(const std::vector<double>& values, double cluster_tol) {
    std::vector<SpectrumEntry> raw;
    raw.reserve(values.size());
    for (double v : values) raw.push_back({v, 1});
    return from_entries(std::move(raw), cluster_tol);
}

Spectrum Spectrum::from_entries(std::vector<SpectrumEntry> entries, double cluster_tol) {
    Spectrum s;
    s.entries_ = cluster(std::move(entries), cluster_tol);
    return s;
}

int Spectrum::total_multiplicity() const {
    int t = 0;
    for (const auto& e : entries_) t += e.multiplicity;
    return t;
}

std::vector<double> Spectrum::expanded() const {
    std::vector<double> out;
    out.reserve(total_multiplicity());
    for (const auto& e : entries_)
        out.insert(out.end(), e.multiplicity, e.value);
    return out;
}

double Spectrum::sum() const {
    double s = 0.0;
    for (const auto& e : entries_) s += e.value * e.multiplicity;
    return s;
}

double Spectrum::min_value() const {
    if (entries_.empty()) throw std::logic_error("Spectrum: empty");
    return entries_.front().value;
}

double Spectrum::max_value() const {
    if (entries_.empty()) throw std::logic_error("Spectrum: empty");
    return entries_.back().value;
}

// ---------------------------------------------------------------------------
// Circulants

Matrix right_circulant(const std::vector<double>& row) {
    const int n = static_cast<int>(row.size());
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = row[static_cast<std::size_t>(((j - i) % n + n) % n)];
    return m;
}

Matrix left_circulant(const std::vector<double>& row) {
    const int n = static_cast<int>(row.size());
    Matrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = row[static_cast<std::size_t>((i + j) % n)];
    return m;
}

Matrix negation_permutation(int n) {
    Matrix p(n);
    p(0, 0) = 1.0;
    for (int i = 1; i < n; ++i) p(i, n - i) = 1.0;
    return p;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("multiply: order mismatch");
    const int n = a.order();
    Matrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("max_abs_difference: order mismatch");
    double m = 0.0;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

Spectrum left_circulant_spectrum(const std::vector<double>& row) {
    const int n = static_cast<int>(row.size());
    if (n < 1) throw std::invalid_argument("left_circulant_spectrum: empty row");
    std::vector<double> values;
    values.reserve(n);

    double v0 = 0.0;
    for (double c : row) v0 += c;
    values.push_back(v0);

    if (n % 2 == 0) {
        double vh = 0.0;
        for (int j = 0; j < n; ++j) vh += (j % 2 == 0) ? row[j] : -row[j];
        values.push_back(vh);
    }

    // |v_k| of the right-circulant DFT; angles reduced mod n before the
    // trig call so large j*k loses no precision.
    const double step = 2.0 * std::numbers::pi / n;
    for (int k = 1; k <= (n - 1) / 2; ++k) {
        double re = 0.0, im = 0.0;
        for (int j = 0; j < n; ++j) {
            const long long r = (static_cast<long long>(j) * k) % n;
            re += row[j] * std::cos(step * r);
            im += row[j] * std::sin(step * r);
        }
        const double mag = std::hypot(re, im);
        values.push_back(mag);
        values.push_back(-mag);
    }
    return Spectrum::from_values(values);
}

// ---------------------------------------------------------------------------
// Graph matrices

const char* to_string(MatrixFamily family) {
    switch (family) {
        case MatrixFamily::adjacency: return "adjacency";
        case MatrixFamily::laplacian: return "laplacian";
        case MatrixFamily::signless_laplacian: return "signless-laplacian";
        case MatrixFamily::distance: return "distance";
        case MatrixFamily::distance_laplacian: return "distance-laplacian";
        case MatrixFamily::distance_signless_laplacian: return "distance-signless-laplacian";
    }
    return "?";
}

Matrix build_matrix(MatrixFamily family, const Graph& g) {
    const int n = g.order();
    Matrix m(n);
    switch (family) {
        case MatrixFamily::adjacency:
        case MatrixFamily::laplacian:
        case MatrixFamily::signless_laplacian: {
            const double sign = family == MatrixFamily::laplacian ? -1.0 : 1.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (g.adjacent(i, j)) m(i, j) = sign;
            if (family != MatrixFamily::adjacency)
                for (int i = 0; i < n; ++i) m(i, i) = g.degree(i);
            break;
        }
        case MatrixFamily::distance:
        case MatrixFamily::distance_laplacian:
        case MatrixFamily::distance_signless_laplacian: {
            const IntMatrix d = distance_matrix(g);
            const double sign = family == MatrixFamily::distance_laplacian ? -1.0 : 1.0;
            std::vector<std::int64_t> tr(n, 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    m(i, j) = sign * d(i, j);
                    tr[i] += d(i, j);
                }
            if (family != MatrixFamily::distance)
                for (int i = 0; i < n; ++i) m(i, i) = static_cast<double>(tr[i]);
            break;
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Jacobi oracle

Spectrum jacobi_spectrum(const Matrix& m, double tol) {
    const int n = m.order();
    if (!m.is_symmetric()) throw std::invalid_argument("jacobi_spectrum: matrix not symmetric");

    std::vector<double> a(m.data());
    auto at = [&a, n](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    if (n == 1) return Spectrum::from_values({at(0, 0)});
    const double fro = m.frobenius_norm();
    if (fro == 0.0) return Spectrum::from_values(std::vector<double>(n, 0.0));

    const double target = tol * fro;
    const double skip = 1e-18 * fro; // cannot block convergence to 1e-12 * fro

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
        return std::sqrt(2.0 * s);
    };

    for (int sweep = 0; sweep < kJacobiSweepCap; ++sweep) {
        if (off_norm() < target) {
            std::vector<double> eig(n);
            for (int i = 0; i < n; ++i) eig[i] = at(i, i);
            return Spectrum::from_values(eig);
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) <= skip) continue;
                const double app = at(p, p);
                const double aqq = at(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = at(i, p);
                    const double aiq = at(i, q);
                    at(i, p) = at(p, i) = c * aip - s * aiq;
                    at(i, q) = at(q, i) = s * aip + c * aiq;
                }
            }
        }
    }
    throw NoConvergence("jacobi_spectrum: sweep cap reached at n=" + std::to_string(n));
}

// ---------------------------------------------------------------------------

SpectrumComparison spectrum_equal(const Spectrum& a, const Spectrum& b, double tol) {
    SpectrumComparison cmp;
    const std::vector<double> av = a.expanded();
    const std::vector<double> bv = b.expanded();
    if (av.size() != bv.size()) {
        cmp.size_mismatch = true;
        cmp.max_deviation = std::numeric_limits<double>::infinity();
        return cmp;
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < av.size(); ++i)
        dev = std::max(dev, std::abs(av[i] - bv[i]) / std::max(1.0, std::abs(av[i])));
    cmp.max_deviation = dev;
    cmp.equal = dev <= tol;
    return cmp;
}

EnergyValue energy(const Spectrum& s, double shift) {
    double e = 0.0;
    for (const auto& entry : s.entries())
        e += entry.multiplicity * std::abs(entry.value - shift);
    return EnergyValue{e, shift, false};
}

} // namespace uacg
