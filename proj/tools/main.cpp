#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "records.hpp"
#include "uacg/closed_forms.hpp"
#include "uacg/verify.hpp"

namespace {

using namespace uacg;
using cli::Format;
using cli::Record;
using cli::RecordPrinter;

constexpr const char* kSchema = "uacg/1";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoClosedForm = 3;
constexpr int kExitDisconnected = 4;

double default_tol() {
    if (const char* env = std::getenv("UACG_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0) return v;
        std::cerr << "warning: ignoring invalid UACG_TOL\n";
    }
    return kDefaultTol;
}

int env_jobs() {
    if (const char* env = std::getenv("UACG_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
        std::cerr << "warning: ignoring invalid UACG_JOBS\n";
    }
    return 0; // auto
}

bool matrix_family_from_string(const std::string& name, MatrixFamily& out) {
    if (name == "adjacency") out = MatrixFamily::adjacency;
    else if (name == "laplacian") out = MatrixFamily::laplacian;
    else if (name == "signless") out = MatrixFamily::signless_laplacian;
    else if (name == "distance") out = MatrixFamily::distance;
    else if (name == "distance-laplacian") out = MatrixFamily::distance_laplacian;
    else if (name == "distance-signless") out = MatrixFamily::distance_signless_laplacian;
    else return false;
    return true;
}

GraphKind resolve_kind(const std::string& graph, bool complement) {
    if (graph == "uacg")
        return complement ? GraphKind::addition_cayley_complement : GraphKind::addition_cayley;
    return complement ? GraphKind::unitary_cayley_complement : GraphKind::unitary_cayley;
}

// Closed forms the (graph, complement, family) combination maps onto. The
// unitary Cayley graph shares every addition-Cayley closed form at even n
// (the graphs are isomorphic there) and keeps its own adjacency spectrum,
// the coprime gcd-pattern circulant, at every n.
Spectrum closed_spectrum_for(MatrixFamily family, GraphKind kind, int n) {
    const bool complement = kind == GraphKind::addition_cayley_complement ||
                            kind == GraphKind::unitary_cayley_complement;
    const bool unitary = kind == GraphKind::unitary_cayley ||
                         kind == GraphKind::unitary_cayley_complement;
    if (complement) {
        if (family == MatrixFamily::signless_laplacian && (!unitary || n % 2 == 0))
            return closed_spectrum(ClosedFamily::signless_complement, n);
        throw NoClosedForm("no closed form for this complement family");
    }
    if (family == MatrixFamily::adjacency) {
        if (unitary || n % 2 == 0) return gcd_pattern_spectrum(GcdPattern::coprime, n);
        throw NoClosedForm("no closed-form adjacency spectrum for odd-n uacg");
    }
    if (unitary && n % 2 != 0)
        throw NoClosedForm("unitary Cayley closed forms here cover even n only");
    switch (family) {
        case MatrixFamily::laplacian: return closed_spectrum(ClosedFamily::laplacian, n);
        case MatrixFamily::signless_laplacian: return closed_spectrum(ClosedFamily::signless, n);
        case MatrixFamily::distance: return closed_spectrum(ClosedFamily::distance, n);
        case MatrixFamily::distance_laplacian:
            return closed_spectrum(ClosedFamily::distance_laplacian, n);
        case MatrixFamily::distance_signless_laplacian:
            return closed_spectrum(ClosedFamily::distance_signless, n);
        default: throw NoClosedForm("no closed form");
    }
}

EnergyValue closed_energy_for(MatrixFamily family, GraphKind kind, int n) {
    const bool complement = kind == GraphKind::addition_cayley_complement ||
                            kind == GraphKind::unitary_cayley_complement;
    const bool unitary = kind == GraphKind::unitary_cayley ||
                         kind == GraphKind::unitary_cayley_complement;
    if (complement) {
        if (family == MatrixFamily::signless_laplacian && (!unitary || n % 2 == 0))
            return closed_energy(ClosedFamily::signless_complement, n);
        throw NoClosedForm("no closed-form energy for this complement family");
    }
    if (unitary && n % 2 != 0)
        throw NoClosedForm("unitary Cayley closed forms here cover even n only");
    switch (family) {
        case MatrixFamily::signless_laplacian: return closed_energy(ClosedFamily::signless, n);
        case MatrixFamily::distance: return closed_energy(ClosedFamily::distance, n);
        case MatrixFamily::distance_laplacian:
            return closed_energy(ClosedFamily::distance_laplacian, n);
        default:
            throw NoClosedForm(std::string("no closed-form energy for family ") +
                               to_string(family));
    }
}

// energy centering constant, from the graph itself
double oracle_shift(MatrixFamily family, const Graph& g) {
    switch (family) {
        case MatrixFamily::adjacency:
        case MatrixFamily::distance: return 0.0;
        case MatrixFamily::laplacian:
        case MatrixFamily::signless_laplacian:
            return static_cast<double>(2 * g.edge_count()) / g.order();
        case MatrixFamily::distance_laplacian:
        case MatrixFamily::distance_signless_laplacian: {
            std::int64_t sum = 0;
            for (auto t : transmissions(g)) sum += t;
            return static_cast<double>(sum) / g.order();
        }
    }
    return 0.0;
}

struct CommonArgs {
    int n = 0;
    std::string family;
    std::string graph = "uacg";
    bool complement = false;
    std::string source = "both";
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--n", args.n, "graph order")->required();
    cmd->add_option("--family", args.family, "matrix family")
        ->required()
        ->check(CLI::IsMember({"adjacency", "laplacian", "signless", "distance",
                               "distance-laplacian", "distance-signless"}));
    cmd->add_option("--graph", args.graph, "graph construction (default uacg)")
        ->check(CLI::IsMember({"uacg", "ucg"}));
    cmd->add_flag("--complement", args.complement, "use the complement graph");
    cmd->add_option("--source", args.source, "closed-form, oracle or both (default both)")
        ->check(CLI::IsMember({"closed-form", "oracle", "both"}));
    cmd->add_option("--format", args.format, "json or csv (default json)")
        ->check(CLI::IsMember({"json", "csv"}));
}

void spectrum_rows(RecordPrinter& printer, const CommonArgs& args, const char* source,
                   const Spectrum& spectrum) {
    for (const auto& entry : spectrum.entries()) {
        Record rec;
        rec.add("schema", kSchema);
        rec.add("command", "spectrum");
        rec.add("n", args.n);
        rec.add("family", args.family);
        rec.add("graph", args.graph);
        rec.add("complement", args.complement);
        rec.add("source", source);
        rec.add("value", entry.value);
        rec.add("multiplicity", entry.multiplicity);
        printer.print(rec);
    }
}

int run_spectrum(const CommonArgs& args) {
    MatrixFamily family{};
    matrix_family_from_string(args.family, family);
    const GraphKind kind = resolve_kind(args.graph, args.complement);
    const bool want_oracle = args.source != "closed-form";
    const bool want_closed = args.source != "oracle";

    // the oracle side runs first so a disconnected complement is reported as
    // such rather than as a missing closed form
    std::optional<Spectrum> oracle;
    if (want_oracle) oracle = jacobi_spectrum(build_matrix(family, Graph(kind, args.n)));
    std::optional<Spectrum> closed;
    if (want_closed) closed = closed_spectrum_for(family, kind, args.n);

    RecordPrinter printer(args.format == "csv" ? Format::csv : Format::json);
    if (closed) spectrum_rows(printer, args, "closed-form", *closed);
    if (oracle) spectrum_rows(printer, args, "oracle", *oracle);
    if (closed && oracle) {
        const SpectrumComparison cmp = spectrum_equal(*closed, *oracle, default_tol());
        Record rec;
        rec.add("schema", kSchema);
        rec.add("command", "spectrum");
        rec.add("n", args.n);
        rec.add("family", args.family);
        rec.add("graph", args.graph);
        rec.add("complement", args.complement);
        rec.add("source", "comparison");
        rec.add("value", cmp.max_deviation);
        rec.add("multiplicity", cmp.equal ? 1 : 0);
        printer.print(rec);
    }
    return kExitOk;
}

int run_energy(const CommonArgs& args) {
    MatrixFamily family{};
    matrix_family_from_string(args.family, family);
    const GraphKind kind = resolve_kind(args.graph, args.complement);
    const bool want_oracle = args.source != "closed-form";
    const bool want_closed = args.source != "oracle";

    std::optional<EnergyValue> direct;
    if (want_oracle) {
        const Graph g(kind, args.n);
        const Spectrum oracle = jacobi_spectrum(build_matrix(family, g));
        direct = energy(oracle, oracle_shift(family, g));
    }
    std::optional<EnergyValue> closed;
    if (want_closed) closed = closed_energy_for(family, kind, args.n);

    Record rec;
    rec.add("schema", kSchema);
    rec.add("command", "energy");
    rec.add("n", args.n);
    rec.add("family", args.family);
    rec.add("graph", args.graph);
    rec.add("complement", args.complement);
    rec.add("shift", direct ? direct->shift : closed->shift);
    if (closed) rec.add("closed_form", closed->value);
    else rec.add_null("closed_form");
    if (direct) rec.add("oracle", direct->value);
    else rec.add_null("oracle");
    if (closed && direct)
        rec.add("deviation", std::abs(closed->value - direct->value));
    else rec.add_null("deviation");
    rec.add("caveat", closed ? closed->caveat : false);

    RecordPrinter printer(args.format == "csv" ? Format::csv : Format::json);
    printer.print(rec);
    return kExitOk;
}

struct VerifyArgs {
    int n = 0;
    int n_from = 0;
    int n_to = 0;
    std::string families = "all";
    double tol = -1.0;
    std::string format = "json";
};

int run_verify_scan(const VerifyArgs& args, const char* command) {
    ScanOptions options;
    options.n_from = args.n_from;
    options.n_to = args.n_to;
    options.tol = args.tol > 0 ? args.tol : default_tol();
    options.jobs = env_jobs();
    options.include_identities = args.families == "all";
    if (args.families != "all") {
        std::string rest = args.families;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string name = rest.substr(0, comma);
            rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
            ClosedFamily family{};
            if (!closed_family_from_string(name, family)) {
                std::cerr << "error: unknown family '" << name << "'\n";
                return kExitUsage;
            }
            options.families.push_back(family);
        }
        if (options.families.empty()) {
            std::cerr << "error: empty family list\n";
            return kExitUsage;
        }
    }

    const ScanResult result = scan(options);

    RecordPrinter printer(args.format == "csv" ? Format::csv : Format::json);
    for (const auto& rep : result.reports) {
        Record rec;
        rec.add("schema", kSchema);
        rec.add("command", command);
        rec.add("n", rep.n);
        rec.add("family", rep.family);
        rec.add("kind", to_string(rep.kind));
        rec.add("status", to_string(rep.status));
        rec.add("max_deviation", rep.max_deviation);
        rec.add("details", rep.details);
        printer.print(rec);
    }
    std::cerr << command << " n=" << options.n_from << ".." << options.n_to
              << ": pass=" << result.passed << " fail=" << result.failed
              << " caveat=" << result.caveats << " not-applicable=" << result.not_applicable
              << "\n";
    return result.failed > 0 ? kExitVerifyFailed : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectra, energies and closed-form verification for unitary addition Cayley graphs"};
    app.require_subcommand(1);

    CommonArgs spectrum_args;
    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "print a spectrum from the closed form and/or the oracle");
    add_common(spectrum_cmd, spectrum_args);

    CommonArgs energy_args;
    CLI::App* energy_cmd =
        app.add_subcommand("energy", "print an energy from the closed form and/or the oracle");
    add_common(energy_cmd, energy_args);

    VerifyArgs verify_args;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "cross-check the closed forms at a single order");
    verify_cmd->add_option("--n", verify_args.n, "graph order")->required();
    verify_cmd->add_option("--families", verify_args.families,
                           "comma-separated closed families, or 'all'");
    verify_cmd->add_option("--tol", verify_args.tol, "relative tolerance (default 1e-8)");
    verify_cmd->add_option("--format", verify_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    VerifyArgs scan_args;
    CLI::App* scan_cmd = app.add_subcommand("scan", "cross-check a whole range of orders");
    scan_cmd->add_option("--n-from", scan_args.n_from, "first order")->required();
    scan_cmd->add_option("--n-to", scan_args.n_to, "last order")->required();
    scan_cmd->add_option("--families", scan_args.families,
                         "comma-separated closed families, or 'all'");
    scan_cmd->add_option("--tol", scan_args.tol, "relative tolerance (default 1e-8)");
    scan_cmd->add_option("--format", scan_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*spectrum_cmd) return run_spectrum(spectrum_args);
        if (*energy_cmd) return run_energy(energy_args);
        if (*verify_cmd) {
            verify_args.n_from = verify_args.n_to = verify_args.n;
            return run_verify_scan(verify_args, "verify");
        }
        if (*scan_cmd) return run_verify_scan(scan_args, "scan");
    } catch (const NoClosedForm& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoClosedForm;
    } catch (const DisconnectedGraph& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisconnected;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
