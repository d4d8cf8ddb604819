#include "uacg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "uacg/numtheory.hpp"

namespace uacg {

namespace {

constexpr ClosedFamily kAllFamilies[] = {
    ClosedFamily::signless,          ClosedFamily::signless_complement,
    ClosedFamily::laplacian,         ClosedFamily::distance,
    ClosedFamily::distance_laplacian, ClosedFamily::distance_signless,
};

GraphKind graph_kind_for(ClosedFamily family) {
    return family == ClosedFamily::signless_complement ? GraphKind::addition_cayley_complement
                                                       : GraphKind::addition_cayley;
}

MatrixFamily matrix_family_for(ClosedFamily family) {
    switch (family) {
        case ClosedFamily::signless:
        case ClosedFamily::signless_complement: return MatrixFamily::signless_laplacian;
        case ClosedFamily::laplacian: return MatrixFamily::laplacian;
        case ClosedFamily::distance: return MatrixFamily::distance;
        case ClosedFamily::distance_laplacian: return MatrixFamily::distance_laplacian;
        case ClosedFamily::distance_signless: return MatrixFamily::distance_signless_laplacian;
    }
    return MatrixFamily::adjacency;
}

bool has_eigenvalue_bounds(ClosedFamily family) {
    return family == ClosedFamily::signless || family == ClosedFamily::signless_complement ||
           family == ClosedFamily::distance || family == ClosedFamily::distance_signless;
}

bool has_energy_bounds(ClosedFamily family) {
    return family == ClosedFamily::signless || family == ClosedFamily::signless_complement ||
           family == ClosedFamily::distance;
}

std::string format_value(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// Lazily computed per-n graphs and oracle spectra, shared by the checks that
// run at the same n so each matrix is solved once.
class NCache {
public:
    explicit NCache(int n) : n_(n) {}

    const Graph& graph(GraphKind kind) {
        auto it = graphs_.find(kind);
        if (it == graphs_.end()) it = graphs_.emplace(kind, Graph(kind, n_)).first;
        return it->second;
    }

    const Spectrum& oracle(GraphKind kind, MatrixFamily family) {
        const auto key = std::make_pair(kind, family);
        auto it = spectra_.find(key);
        if (it == spectra_.end()) {
            const Matrix m = build_matrix(family, graph(kind));
            it = spectra_.emplace(key, jacobi_spectrum(m)).first;
        }
        return it->second;
    }

    double energy_shift(ClosedFamily family) {
        const GraphKind kind = graph_kind_for(family);
        switch (family) {
            case ClosedFamily::distance: return 0.0;
            case ClosedFamily::distance_laplacian:
            case ClosedFamily::distance_signless: {
                const auto tr = transmissions(graph(kind));
                std::int64_t sum = 0;
                for (auto t : tr) sum += t;
                return static_cast<double>(sum) / n_;
            }
            default: {
                const Graph& g = graph(kind);
                return static_cast<double>(2 * g.edge_count()) / n_;
            }
        }
    }

private:
    int n_;
    std::map<GraphKind, Graph> graphs_;
    std::map<std::pair<GraphKind, MatrixFamily>, Spectrum> spectra_;
};

VerificationReport verify_spectrum_impl(ClosedFamily family, int n, double tol, NCache& cache) {
    VerificationReport rep{n, to_string(family), CheckKind::spectrum,
                           CheckStatus::not_applicable, 0.0, ""};
    const FormulaCase fc = classify(family, n);
    if (!fc.has_spectrum) {
        rep.details = "no closed form (" + fc.branch + ")";
        return rep;
    }
    const Spectrum cf = closed_spectrum(family, n);
    const Spectrum& oracle = cache.oracle(graph_kind_for(family), matrix_family_for(family));
    const SpectrumComparison cmp = spectrum_equal(cf, oracle, tol);
    rep.max_deviation = cmp.max_deviation;
    rep.status = cmp.equal ? CheckStatus::pass : CheckStatus::fail;
    rep.details = fc.branch + (cmp.size_mismatch ? "; multiplicity totals differ" : "");
    return rep;
}

VerificationReport verify_bounds_impl(ClosedFamily family, int n, double tol, NCache& cache) {
    VerificationReport rep{n, to_string(family), CheckKind::bounds, CheckStatus::not_applicable,
                           0.0, ""};
    if (!has_eigenvalue_bounds(family)) {
        rep.details = "no bound theorem for this family";
        return rep;
    }
    if (n < 3 || n % 2 == 0) {
        rep.details = "bounds stated for odd n only";
        return rep;
    }
    const BoundSet bounds = eigenvalue_bounds(family, n);
    std::vector<double> values =
        cache.oracle(graph_kind_for(family), matrix_family_for(family)).expanded();
    std::sort(values.begin(), values.end(), std::greater<double>());

    // rank-paired containment: k-th largest eigenvalue inside k-th interval
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double scale = std::max(1.0, std::abs(values[static_cast<std::size_t>(i)]));
        const double below = bounds.intervals[static_cast<std::size_t>(i)].lo -
                             values[static_cast<std::size_t>(i)];
        const double above = values[static_cast<std::size_t>(i)] -
                             bounds.intervals[static_cast<std::size_t>(i)].hi;
        worst = std::max(worst, std::max(below, above) / scale);
    }
    rep.max_deviation = std::max(worst, 0.0);
    rep.status = worst <= tol ? CheckStatus::pass : CheckStatus::fail;
    rep.details = "rank-paired (" + std::to_string(n) + " intervals)";
    return rep;
}

VerificationReport verify_energy_impl(ClosedFamily family, int n, double tol, NCache& cache) {
    VerificationReport rep{n, to_string(family), CheckKind::energy, CheckStatus::not_applicable,
                           0.0, ""};
    const FormulaCase fc = classify(family, n);
    const bool bounded = has_energy_bounds(family) && n >= 3 && n % 2 == 1;
    if (!fc.has_energy && !bounded) {
        rep.details = "no closed-form energy (" + fc.branch + ")";
        return rep;
    }

    const double shift = cache.energy_shift(family);
    const EnergyValue direct =
        energy(cache.oracle(graph_kind_for(family), matrix_family_for(family)), shift);

    bool ok = true;
    std::ostringstream details;
    double deviation = 0.0;

    if (fc.has_energy) {
        const EnergyValue cf = closed_energy(family, n);
        const double dev =
            std::abs(cf.value - direct.value) / std::max(1.0, std::abs(direct.value));
        deviation = std::max(deviation, dev);
        ok = ok && dev <= tol;
        details << "closed form " << format_value(cf.value) << " vs direct "
                << format_value(direct.value);
        if (cf.caveat && family == ClosedFamily::distance) {
            const auto f = factorize(n);
            const double nominal = static_cast<double>(3 * n + 1 - f[0].prime - 3);
            details << "; m=1 product formula gives " << format_value(nominal)
                    << ", spectrum gives " << format_value(direct.value);
        }
    }
    if (bounded) {
        const Interval iv = energy_bounds(family, n);
        const double scale = std::max(1.0, std::abs(direct.value));
        const double outside =
            std::max(iv.lo - direct.value, direct.value - iv.hi) / scale;
        deviation = std::max(deviation, std::max(outside, 0.0));
        ok = ok && outside <= tol;
        if (fc.has_energy) details << "; ";
        details << "direct " << format_value(direct.value) << " in [" << format_value(iv.lo)
                << ", " << format_value(iv.hi) << "]";
    }

    rep.max_deviation = deviation;
    rep.details = details.str();
    if (!ok)
        rep.status = CheckStatus::fail;
    else if (fc.energy_caveat)
        rep.status = CheckStatus::caveat;
    else
        rep.status = CheckStatus::pass;
    return rep;
}

std::vector<VerificationReport> verify_identities_impl(int n, double tol, NCache& cache) {
    if (n < 3) throw std::invalid_argument("verify_identities: requires n >= 3");
    std::vector<VerificationReport> out;
    const bool even = n % 2 == 0;

    // addition/unitary Cayley cospectrality, all six matrix families
    {
        VerificationReport rep{n, "uacg-ucg-cospectral", CheckKind::identity,
                               CheckStatus::not_applicable, 0.0, ""};
        if (even) {
            double dev = 0.0;
            bool ok = true;
            for (MatrixFamily f :
                 {MatrixFamily::adjacency, MatrixFamily::laplacian,
                  MatrixFamily::signless_laplacian, MatrixFamily::distance,
                  MatrixFamily::distance_laplacian, MatrixFamily::distance_signless_laplacian}) {
                const SpectrumComparison cmp =
                    spectrum_equal(cache.oracle(GraphKind::addition_cayley, f),
                                   cache.oracle(GraphKind::unitary_cayley, f), tol);
                dev = std::max(dev, cmp.max_deviation);
                ok = ok && cmp.equal;
            }
            rep.max_deviation = dev;
            rep.status = ok ? CheckStatus::pass : CheckStatus::fail;
            rep.details = "six matrix families";
        } else {
            rep.details = "the graphs are isomorphic only for even n";
        }
        out.push_back(rep);
    }

    // transmission regular (even n): distance Laplacian energy == distance energy
    {
        VerificationReport rep{n, "distance-laplacian-energy-equals-distance-energy",
                               CheckKind::identity, CheckStatus::not_applicable, 0.0, ""};
        if (even) {
            const double de =
                energy(cache.oracle(GraphKind::addition_cayley, MatrixFamily::distance), 0.0)
                    .value;
            const double led =
                energy(cache.oracle(GraphKind::addition_cayley, MatrixFamily::distance_laplacian),
                       cache.energy_shift(ClosedFamily::distance_laplacian))
                    .value;
            rep.max_deviation = std::abs(de - led) / std::max(1.0, std::abs(de));
            rep.status = rep.max_deviation <= tol ? CheckStatus::pass : CheckStatus::fail;
            rep.details = "DE " + format_value(de) + " vs LE_D " + format_value(led);
        } else {
            rep.details = "transmission regular only for even n";
        }
        out.push_back(rep);
    }

    // left circulant == negation permutation * right circulant, on the
    // coprime-indicator row
    {
        std::vector<double> row(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = std::gcd(j, n) == 1 ? 1.0 : 0.0;
        const double dev =
            max_abs_difference(left_circulant(row),
                               multiply(negation_permutation(n), right_circulant(row)));
        VerificationReport rep{n, "left-circulant-relation", CheckKind::identity,
                               dev == 0.0 ? CheckStatus::pass : CheckStatus::fail, dev,
                               "entrywise, coprime-indicator row"};
        out.push_back(rep);
    }

    // trace identities: matrix traces against degree/transmission sums, and
    // closed-form spectra summing to the same totals where they exist
    {
        const Graph& g = cache.graph(GraphKind::addition_cayley);
        const double degree_sum = static_cast<double>(2 * g.edge_count());
        const auto tr = transmissions(g);
        double tr_sum = 0.0;
        for (auto t : tr) tr_sum += static_cast<double>(t);

        double dev = 0.0;
        auto check = [&dev](double actual, double expected) {
            dev = std::max(dev, std::abs(actual - expected) / std::max(1.0, std::abs(expected)));
        };
        check(build_matrix(MatrixFamily::signless_laplacian, g).trace(), degree_sum);
        check(build_matrix(MatrixFamily::distance, g).trace(), 0.0);
        check(build_matrix(MatrixFamily::distance_laplacian, g).trace(), tr_sum);
        check(build_matrix(MatrixFamily::distance_signless_laplacian, g).trace(), tr_sum);
        if (classify(ClosedFamily::signless, n).has_spectrum)
            check(closed_spectrum(ClosedFamily::signless, n).sum(), degree_sum);
        if (classify(ClosedFamily::distance, n).has_spectrum)
            check(closed_spectrum(ClosedFamily::distance, n).sum(), 0.0);
        if (classify(ClosedFamily::distance_laplacian, n).has_spectrum)
            check(closed_spectrum(ClosedFamily::distance_laplacian, n).sum(), tr_sum);
        if (classify(ClosedFamily::distance_signless, n).has_spectrum)
            check(closed_spectrum(ClosedFamily::distance_signless, n).sum(), tr_sum);

        VerificationReport rep{n, "trace-identities", CheckKind::identity,
                               dev <= tol ? CheckStatus::pass : CheckStatus::fail, dev,
                               "degree and transmission totals"};
        out.push_back(rep);
    }

    return out;
}

ChainEvaluation evaluate_chain_impl(int n, NCache& cache) {
    if (n < 3) throw std::invalid_argument("evaluate_conclusion_chain: requires n >= 3");
    auto sorted_desc = [&cache](MatrixFamily f) {
        std::vector<double> v = cache.oracle(GraphKind::addition_cayley, f).expanded();
        std::sort(v.begin(), v.end(), std::greater<double>());
        return v;
    };
    std::vector<double> signless = sorted_desc(MatrixFamily::signless_laplacian);
    std::vector<double> dist = sorted_desc(MatrixFamily::distance);
    std::vector<double> dq = sorted_desc(MatrixFamily::distance_signless_laplacian);
    std::vector<double> dl = sorted_desc(MatrixFamily::distance_laplacian);

    // principal values sit on the all-ones direction: the largest eigenvalue
    // for the signless/distance/distance-signless families, 0 for the
    // distance Laplacian (popped from the back of the descending list)
    const double mu0 = signless.front();
    const double ld0 = dist.front();
    const double dq0 = dq.front();
    const double dl0 = dl.back();
    signless.erase(signless.begin());
    dist.erase(dist.begin());
    dq.erase(dq.begin());
    dl.pop_back();

    ChainEvaluation eval;
    eval.n = n;
    eval.principal_ok = dl0 < mu0 && mu0 < ld0 && ld0 < dq0;
    {
        std::ostringstream os;
        os << format_value(dl0) << " < " << format_value(mu0) << " < " << format_value(ld0)
           << " < " << format_value(dq0);
        eval.principal_detail = os.str();
    }
    for (int k = 0; k < n - 1; ++k) {
        const std::size_t i = static_cast<std::size_t>(k);
        const bool ok = 2.0 * dist[i] < signless[i] && signless[i] < dq[i] && dq[i] < dl[i];
        if (!ok) eval.violated_ranks.push_back(k + 1);
    }
    return eval;
}

VerificationReport chain_report_impl(int n, NCache& cache) {
    const ChainEvaluation eval = evaluate_chain_impl(n, cache);
    std::ostringstream details;
    details << "principal " << (eval.principal_ok ? "holds" : "violated") << " ("
            << eval.principal_detail << "); non-principal violations "
            << eval.violated_ranks.size() << "/" << (n - 1);
    if (!eval.violated_ranks.empty()) {
        details << " at ranks";
        for (int r : eval.violated_ranks) details << ' ' << r;
    }
    // report-generation operation: violations are data, not failures
    return VerificationReport{n, "conclusion-chain", CheckKind::chain, CheckStatus::pass, 0.0,
                              details.str()};
}

std::vector<VerificationReport> reports_for_n(int n, const std::vector<ClosedFamily>& families,
                                              double tol, bool include_identities) {
    NCache cache(n);
    std::vector<VerificationReport> out;
    for (ClosedFamily family : families) {
        out.push_back(verify_spectrum_impl(family, n, tol, cache));
        if (n >= 3 && n % 2 == 1 && has_eigenvalue_bounds(family))
            out.push_back(verify_bounds_impl(family, n, tol, cache));
        out.push_back(verify_energy_impl(family, n, tol, cache));
    }
    if (include_identities && n >= 3) {
        auto ids = verify_identities_impl(n, tol, cache);
        out.insert(out.end(), ids.begin(), ids.end());
        out.push_back(chain_report_impl(n, cache));
    }
    return out;
}

} // namespace

const char* to_string(CheckKind kind) {
    switch (kind) {
        case CheckKind::spectrum: return "spectrum";
        case CheckKind::energy: return "energy";
        case CheckKind::bounds: return "bounds";
        case CheckKind::identity: return "identity";
        case CheckKind::chain: return "chain";
    }
    return "?";
}

const char* to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::not_applicable: return "not-applicable";
        case CheckStatus::caveat: return "caveat";
    }
    return "?";
}

VerificationReport verify_spectrum(ClosedFamily family, int n, double tol) {
    if (n < 2) throw std::invalid_argument("verify_spectrum: n must be at least 2");
    NCache cache(n);
    return verify_spectrum_impl(family, n, tol, cache);
}

VerificationReport verify_bounds(ClosedFamily family, int n, double tol) {
    if (n < 2) throw std::invalid_argument("verify_bounds: n must be at least 2");
    NCache cache(n);
    return verify_bounds_impl(family, n, tol, cache);
}

VerificationReport verify_energy(ClosedFamily family, int n, double tol) {
    if (n < 2) throw std::invalid_argument("verify_energy: n must be at least 2");
    NCache cache(n);
    return verify_energy_impl(family, n, tol, cache);
}

std::vector<VerificationReport> verify_identities(int n, double tol) {
    NCache cache(n);
    return verify_identities_impl(n, tol, cache);
}

ChainEvaluation evaluate_conclusion_chain(int n) {
    NCache cache(n);
    return evaluate_chain_impl(n, cache);
}

VerificationReport conclusion_chain_report(int n) {
    NCache cache(n);
    return chain_report_impl(n, cache);
}

ScanResult scan(const ScanOptions& options) {
    if (options.n_from < 2)
        throw std::invalid_argument("scan: n_from must be at least 2");
    if (options.n_to < options.n_from) throw std::invalid_argument("scan: empty range");
    std::vector<ClosedFamily> families = options.families;
    if (families.empty())
        families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));

    const int count = options.n_to - options.n_from + 1;
    std::vector<std::vector<VerificationReport>> buckets(static_cast<std::size_t>(count));

    int jobs = options.jobs;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min(jobs, count));

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (true) {
            const int idx = next.fetch_add(1);
            if (idx >= count) return;
            try {
                buckets[static_cast<std::size_t>(idx)] = reports_for_n(
                    options.n_from + idx, families, options.tol, options.include_identities);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (error) std::rethrow_exception(error);

    ScanResult result;
    for (auto& bucket : buckets)
        result.reports.insert(result.reports.end(), bucket.begin(), bucket.end());
    std::stable_sort(result.reports.begin(), result.reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         if (a.n != b.n) return a.n < b.n;
                         if (a.family != b.family) return a.family < b.family;
                         return static_cast<int>(a.kind) < static_cast<int>(b.kind);
                     });
    for (const auto& rep : result.reports) {
        switch (rep.status) {
            case CheckStatus::pass: ++result.passed; break;
            case CheckStatus::fail: ++result.failed; break;
            case CheckStatus::caveat: ++result.caveats; break;
            case CheckStatus::not_applicable: ++result.not_applicable; break;
        }
    }
    return result;
}

} // namespace uacg
