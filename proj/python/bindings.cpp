#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "uacg/closed_forms.hpp"
#include "uacg/numtheory.hpp"
#include "uacg/verify.hpp"

namespace py = pybind11;
using namespace uacg;

namespace {

std::vector<std::vector<int>> int_matrix_rows(const IntMatrix& m) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(m.n));
    for (int i = 0; i < m.n; ++i) {
        rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.n));
        for (int j = 0; j < m.n; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
    }
    return rows;
}

std::vector<std::vector<double>> matrix_rows(const Matrix& m) {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.order()));
    for (int i = 0; i < m.order(); ++i) {
        rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m.order()));
        for (int j = 0; j < m.order(); ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
    }
    return rows;
}

Matrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("matrix rows must form a square layout");
        for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

} // namespace

PYBIND11_MODULE(_uacg, m) {
    m.doc() = "spectra, energies and closed-form verification for unitary addition Cayley graphs";

    py::register_exception<DisconnectedGraph>(m, "DisconnectedGraphError");
    py::register_exception<NoClosedForm>(m, "NoClosedFormError");
    py::register_exception<NoConvergence>(m, "NoConvergenceError");

    // number theory
    m.def("factorize", [](std::int64_t n) {
        std::vector<std::pair<std::int64_t, int>> out;
        for (const auto& pp : factorize(n)) out.emplace_back(pp.prime, pp.exponent);
        return out;
    });
    m.def("euler_phi", &euler_phi);
    m.def("mobius", &mobius);
    m.def("units", &units);
    m.def("squarefree_kernel",
          [](std::int64_t n) { const auto k = squarefree_kernel(n); return std::make_pair(k.s, k.r); });
    m.def("ramanujan_sum", &ramanujan_sum);

    // graphs
    py::enum_<GraphKind>(m, "GraphKind")
        .value("uacg", GraphKind::addition_cayley)
        .value("ucg", GraphKind::unitary_cayley)
        .value("uacg_complement", GraphKind::addition_cayley_complement)
        .value("ucg_complement", GraphKind::unitary_cayley_complement);

    py::class_<Graph>(m, "Graph")
        .def(py::init<GraphKind, int>())
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("kind", &Graph::kind)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("degree_sequence", &Graph::degree_sequence)
        .def("edge_count", &Graph::edge_count)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "Graph(" << to_string(g.kind()) << ", n=" << g.order() << ")";
            return os.str();
        });
    m.def("build_graph", &build_graph);
    m.def("distance_matrix", [](const Graph& g) { return int_matrix_rows(distance_matrix(g)); });
    m.def("diameter_formula", &diameter_formula);
    m.def("transmissions", &transmissions);

    py::enum_<VertexClass>(m, "VertexClass")
        .value("even_power_of_two", VertexClass::even_power_of_two)
        .value("even_with_odd_prime", VertexClass::even_with_odd_prime)
        .value("odd_degree_phi", VertexClass::odd_degree_phi)
        .value("odd_degree_phi_minus_one", VertexClass::odd_degree_phi_minus_one);
    m.def("transmission_formula", &transmission_formula);

    // linear algebra
    py::class_<Matrix>(m, "Matrix")
        .def(py::init(&matrix_from_rows))
        .def_property_readonly("order", &Matrix::order)
        .def("at", [](const Matrix& m_, int i, int j) { return m_(i, j); })
        .def("rows", &matrix_rows)
        .def("trace", &Matrix::trace)
        .def("frobenius_norm", &Matrix::frobenius_norm)
        .def("is_symmetric", &Matrix::is_symmetric);

    py::class_<Spectrum>(m, "Spectrum")
        .def_static("from_values",
                    [](const std::vector<double>& values) { return Spectrum::from_values(values); })
        .def("entries",
             [](const Spectrum& s) {
                 std::vector<std::pair<double, int>> out;
                 for (const auto& e : s.entries()) out.emplace_back(e.value, e.multiplicity);
                 return out;
             })
        .def("expanded", &Spectrum::expanded)
        .def("total_multiplicity", &Spectrum::total_multiplicity)
        .def("sum", &Spectrum::sum)
        .def("min_value", &Spectrum::min_value)
        .def("max_value", &Spectrum::max_value)
        .def("__repr__", [](const Spectrum& s) {
            std::ostringstream os;
            os << "Spectrum(";
            bool first = true;
            for (const auto& e : s.entries()) {
                if (!first) os << ", ";
                first = false;
                os << e.value;
                if (e.multiplicity > 1) os << "x" << e.multiplicity;
            }
            os << ")";
            return os.str();
        });

    m.def("right_circulant", [](const std::vector<double>& row) { return right_circulant(row); });
    m.def("left_circulant", [](const std::vector<double>& row) { return left_circulant(row); });
    m.def("negation_permutation", &negation_permutation);
    m.def("left_circulant_spectrum",
          [](const std::vector<double>& row) { return left_circulant_spectrum(row); });

    py::enum_<MatrixFamily>(m, "MatrixFamily")
        .value("adjacency", MatrixFamily::adjacency)
        .value("laplacian", MatrixFamily::laplacian)
        .value("signless_laplacian", MatrixFamily::signless_laplacian)
        .value("distance", MatrixFamily::distance)
        .value("distance_laplacian", MatrixFamily::distance_laplacian)
        .value("distance_signless_laplacian", MatrixFamily::distance_signless_laplacian);
    m.def("build_matrix", &build_matrix);
    m.def("jacobi_spectrum", &jacobi_spectrum, py::arg("matrix"), py::arg("tol") = 1e-12);

    py::class_<SpectrumComparison>(m, "SpectrumComparison")
        .def_readonly("equal", &SpectrumComparison::equal)
        .def_readonly("size_mismatch", &SpectrumComparison::size_mismatch)
        .def_readonly("max_deviation", &SpectrumComparison::max_deviation);
    m.def("spectrum_equal", &spectrum_equal);

    py::class_<EnergyValue>(m, "EnergyValue")
        .def_readonly("value", &EnergyValue::value)
        .def_readonly("shift", &EnergyValue::shift)
        .def_readonly("caveat", &EnergyValue::caveat)
        .def("__repr__", [](const EnergyValue& e) {
            std::ostringstream os;
            os << "EnergyValue(value=" << e.value << ", shift=" << e.shift
               << (e.caveat ? ", caveat" : "") << ")";
            return os.str();
        });
    m.def("energy", &energy);

    // closed forms
    py::enum_<ClosedFamily>(m, "ClosedFamily")
        .value("signless", ClosedFamily::signless)
        .value("signless_complement", ClosedFamily::signless_complement)
        .value("laplacian", ClosedFamily::laplacian)
        .value("distance", ClosedFamily::distance)
        .value("distance_laplacian", ClosedFamily::distance_laplacian)
        .value("distance_signless", ClosedFamily::distance_signless);

    py::class_<FormulaCase>(m, "FormulaCase")
        .def_readonly("has_spectrum", &FormulaCase::has_spectrum)
        .def_readonly("has_energy", &FormulaCase::has_energy)
        .def_readonly("has_bounds", &FormulaCase::has_bounds)
        .def_readonly("energy_caveat", &FormulaCase::energy_caveat)
        .def_readonly("branch", &FormulaCase::branch);
    m.def("classify", &classify);
    m.def("closed_spectrum", &closed_spectrum);
    m.def("closed_energy", &closed_energy);

    py::class_<BoundSet>(m, "BoundSet")
        .def_readonly("family", &BoundSet::family)
        .def_readonly("n", &BoundSet::n)
        .def_property_readonly("intervals", [](const BoundSet& b) {
            std::vector<std::pair<double, double>> out;
            for (const auto& iv : b.intervals) out.emplace_back(iv.lo, iv.hi);
            return out;
        });
    m.def("eigenvalue_bounds", &eigenvalue_bounds);
    m.def("energy_bounds",
          [](ClosedFamily family, int n) { const auto iv = energy_bounds(family, n); return std::make_pair(iv.lo, iv.hi); });

    py::enum_<GcdPattern>(m, "GcdPattern")
        .value("coprime", GcdPattern::coprime)
        .value("noncoprime", GcdPattern::noncoprime);
    m.def("gcd_pattern_spectrum", &gcd_pattern_spectrum);
    m.def("distance_laplacian_from_laplacian", &distance_laplacian_from_laplacian);

    py::enum_<DistanceRadicand>(m, "DistanceRadicand")
        .value("reduced", DistanceRadicand::reduced)
        .value("expanded", DistanceRadicand::expanded);
    m.def("distance_prime_power_spectrum", &distance_prime_power_spectrum, py::arg("p"),
          py::arg("m"), py::arg("radicand") = DistanceRadicand::reduced);

    // verification
    py::enum_<CheckKind>(m, "CheckKind")
        .value("spectrum", CheckKind::spectrum)
        .value("energy", CheckKind::energy)
        .value("bounds", CheckKind::bounds)
        .value("identity", CheckKind::identity)
        .value("chain", CheckKind::chain);
    py::enum_<CheckStatus>(m, "CheckStatus")
        .value("passed", CheckStatus::pass)
        .value("failed", CheckStatus::fail)
        .value("not_applicable", CheckStatus::not_applicable)
        .value("caveat", CheckStatus::caveat);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("n", &VerificationReport::n)
        .def_readonly("family", &VerificationReport::family)
        .def_readonly("kind", &VerificationReport::kind)
        .def_readonly("status", &VerificationReport::status)
        .def_readonly("max_deviation", &VerificationReport::max_deviation)
        .def_readonly("details", &VerificationReport::details)
        .def("__repr__", [](const VerificationReport& r) {
            std::ostringstream os;
            os << "VerificationReport(n=" << r.n << ", family=" << r.family
               << ", kind=" << to_string(r.kind) << ", status=" << to_string(r.status) << ")";
            return os.str();
        });

    m.def("verify_spectrum", &verify_spectrum, py::arg("family"), py::arg("n"),
          py::arg("tol") = kDefaultTol);
    m.def("verify_bounds", &verify_bounds, py::arg("family"), py::arg("n"),
          py::arg("tol") = kDefaultTol);
    m.def("verify_energy", &verify_energy, py::arg("family"), py::arg("n"),
          py::arg("tol") = kDefaultTol);
    m.def("verify_identities", &verify_identities, py::arg("n"), py::arg("tol") = kDefaultTol);

    py::class_<ChainEvaluation>(m, "ChainEvaluation")
        .def_readonly("n", &ChainEvaluation::n)
        .def_readonly("principal_ok", &ChainEvaluation::principal_ok)
        .def_readonly("violated_ranks", &ChainEvaluation::violated_ranks)
        .def_readonly("principal_detail", &ChainEvaluation::principal_detail);
    m.def("evaluate_conclusion_chain", &evaluate_conclusion_chain);
    m.def("conclusion_chain_report", &conclusion_chain_report);

    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("reports", &ScanResult::reports)
        .def_readonly("passed", &ScanResult::passed)
        .def_readonly("failed", &ScanResult::failed)
        .def_readonly("caveats", &ScanResult::caveats)
        .def_readonly("not_applicable", &ScanResult::not_applicable);
    m.def(
        "scan",
        [](int n_from, int n_to, const std::vector<ClosedFamily>& families, double tol,
           bool include_identities, int jobs) {
            ScanOptions options;
            options.n_from = n_from;
            options.n_to = n_to;
            options.families = families;
            options.tol = tol;
            options.include_identities = include_identities;
            options.jobs = jobs;
            return scan(options);
        },
        py::arg("n_from"), py::arg("n_to"), py::arg("families") = std::vector<ClosedFamily>{},
        py::arg("tol") = kDefaultTol, py::arg("include_identities") = true, py::arg("jobs") = 0);
}
