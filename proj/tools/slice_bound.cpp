// slice-bound: command-line front end for the slicebound library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <slicebound/slicebound.hpp>

namespace sb = slicebound;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct DiagramInput {
    std::string pd;
    std::string braid;
};

void add_diagram_options(CLI::App* cmd, DiagramInput& in) {
    auto* pd = cmd->add_option("--pd", in.pd, "PD code, e.g. \"PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]\"");
    auto* braid = cmd->add_option("--braid", in.braid, "braid word, e.g. \"2:[1,1,1]\"");
    pd->excludes(braid);
    braid->excludes(pd);
}

struct Parsed {
    sb::Diagram diagram;
    std::optional<sb::BraidWord> braid;
};

Parsed parse_input(const DiagramInput& in) {
    if (!in.braid.empty()) {
        sb::BraidWord w = sb::parse_braid(in.braid);
        return {sb::braid_closure(w), w};
    }
    if (!in.pd.empty()) return {sb::diagram_from_pd_text(in.pd), std::nullopt};
    throw sb::ParseError("one of --pd or --braid is required");
}

/// Writes to --out when given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw sb::ValidationError("cannot write " + path);
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void write_bound_csv(std::ostream& os, const sb::BoundsReport& r, const std::optional<int>& s_oracle) {
    auto opt = [](const auto& v) {
        if (!v) return std::string();
        std::ostringstream s;
        s << *v;
        return s.str();
    };
    os << "U,Delta,s_lower,s_upper,s_exact,s_oracle,genus_bound_new,genus_bound_classic,crossings,writhe,"
          "components,seifert_circles\n";
    os << r.U << ',' << r.Delta << ',' << opt(r.s_lower) << ',' << opt(r.s_upper) << ',' << opt(r.s_exact) << ','
       << opt(s_oracle) << ',' << opt(r.genus_bound_new) << ',' << opt(r.genus_bound_classic) << ',' << r.crossings
       << ',' << r.writhe << ',' << r.components << ',' << r.seifert_circles << '\n';
}

int run_bound(const DiagramInput& in, bool oracle, int max_crossings, bool csv, const std::string& out) {
    const Parsed p = parse_input(in);
    const sb::BoundsReport report = p.braid ? sb::bounds_report(*p.braid) : sb::bounds_report(p.diagram);
    std::optional<int> s_oracle;
    std::string oracle_note;
    if (oracle) {
        if (!p.diagram.is_knot()) oracle_note = "oracle handles knots only";
        else if (p.diagram.crossing_count() > max_crossings)
            oracle_note = "diagram exceeds oracle limit of " + std::to_string(max_crossings) + " crossings";
        else s_oracle = sb::lee::analyze(p.diagram, {max_crossings}).s;
    }

    Output o(out);
    if (csv) {
        write_bound_csv(o.stream(), report, s_oracle);
        return 0;
    }
    sb::Json j = sb::to_json(report);
    if (oracle) {
        j["s_oracle"] = s_oracle ? sb::Json(*s_oracle) : sb::Json(nullptr);
        if (!oracle_note.empty()) j["oracle_note"] = oracle_note;
    }
    o.stream() << j.dump(2) << '\n';
    return 0;
}

int run_oracle(const DiagramInput& in, int max_crossings, const std::string& out) {
    const Parsed p = parse_input(in);
    const sb::lee::LeeAnalysis a = sb::lee::analyze(p.diagram, {max_crossings});
    Output o(out);
    o.stream() << sb::to_json(a).dump(2) << '\n';
    return 0;
}

void write_table_json(std::ostream& os, const std::vector<sb::TableResult>& results) {
    auto opt = [](const std::optional<int>& v) { return v ? sb::Json(*v) : sb::Json(nullptr); };
    sb::Json rows = sb::Json::array();
    for (const auto& r : results) {
        sb::Json j;
        j["name"] = r.name;
        j["U"] = opt(r.U);
        j["Delta"] = opt(r.Delta);
        j["s_lower"] = opt(r.s_lower);
        j["s_upper"] = opt(r.s_upper);
        j["s_oracle"] = opt(r.s_oracle);
        j["known_s"] = opt(r.known_s);
        j["status"] = sb::to_string(r.status);
        j["detail"] = r.detail;
        rows.push_back(std::move(j));
    }
    os << rows.dump(2) << '\n';
}

int run_table(const std::string& in, bool oracle, int max_crossings, int jobs, bool json, const std::string& out) {
    std::ifstream file(in);
    if (!file) throw sb::ValidationError("cannot read " + in);
    const auto rows = sb::read_knot_table(file);
    sb::TableOptions opt;
    opt.run_oracle = oracle;
    opt.oracle.max_crossings = max_crossings;
    const auto results = sb::run_table(rows, opt, jobs);
    Output o(out);
    if (json) write_table_json(o.stream(), results);
    else sb::write_table_csv(o.stream(), results);
    return sb::table_ok(results) ? 0 : kExitViolation;
}

int run_fuzz(const sb::FuzzOptions& opt, const std::string& out) {
    const sb::FuzzSummary s = sb::run_fuzz(opt);
    Output o(out);
    o.stream() << sb::to_text(s, opt);
    if (!s.ok())
        for (const auto& f : s.failures) std::cerr << "property violation: " << f << '\n';
    return s.ok() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Diagram bounds on Rasmussen's s-invariant, with an exact Lee-homology oracle"};
    app.require_subcommand(1);

    DiagramInput input;
    bool oracle = false, csv = false, json = false, no_oracle = false;
    int max_crossings = 12, jobs = 1;
    std::string in, out;
    sb::FuzzOptions fuzz;

    auto* bound = app.add_subcommand("bound", "bounds report for one diagram (JSON by default)");
    add_diagram_options(bound, input);
    bound->add_flag("--oracle", oracle, "also compute s with the Lee oracle");
    bound->add_option("--max-crossings", max_crossings, "oracle crossing limit")->check(CLI::PositiveNumber);
    auto* bound_json = bound->add_flag("--json", json, "JSON output (default)");
    bound->add_flag("--csv", csv, "one-row CSV output")->excludes(bound_json);
    bound->add_option("--out", out, "output file (default stdout)");

    auto* oracle_cmd = app.add_subcommand("oracle", "Lee oracle analysis of one knot diagram (JSON)");
    add_diagram_options(oracle_cmd, input);
    oracle_cmd->add_option("--max-crossings", max_crossings, "oracle crossing limit")->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--out", out, "output file (default stdout)");

    auto* table = app.add_subcommand("table", "evaluate a knot table CSV (name,pd,known_s[,braid,...])");
    table->add_option("--in", in, "input CSV")->required();
    table->add_flag("--oracle", oracle, "run the Lee oracle on every knot row");
    table->add_option("--max-crossings", max_crossings, "oracle crossing limit")->check(CLI::PositiveNumber);
    table->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    auto* table_csv = table->add_flag("--csv", csv, "CSV output (default)");
    table->add_flag("--json", json, "JSON output")->excludes(table_csv);
    table->add_option("--out", out, "output file (default stdout)");

    auto* fuzz_cmd = app.add_subcommand("fuzz", "seeded property suite over random braid closures");
    fuzz_cmd->add_option("--count", fuzz.count, "number of braids")->check(CLI::NonNegativeNumber);
    fuzz_cmd->add_option("--strands", fuzz.max_strands, "maximum strand count")->check(CLI::Range(2, 64));
    fuzz_cmd->add_option("--max-length", fuzz.max_length, "maximum word length")->check(CLI::NonNegativeNumber);
    fuzz_cmd->add_option("--seed", fuzz.seed, "RNG seed");
    fuzz_cmd->add_option("--max-crossings", max_crossings, "oracle crossing limit")->check(CLI::PositiveNumber);
    fuzz_cmd->add_flag("--no-oracle", no_oracle, "skip the oracle sandwich check");
    fuzz_cmd->add_option("--jobs", fuzz.jobs, "worker threads")->check(CLI::PositiveNumber);
    fuzz_cmd->add_option("--out", out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*bound) return run_bound(input, oracle, max_crossings, csv, out);
        if (*oracle_cmd) return run_oracle(input, max_crossings, out);
        if (*table) return run_table(in, oracle, max_crossings, jobs, json, out);
        fuzz.run_oracle = !no_oracle;
        fuzz.oracle.max_crossings = max_crossings;
        return run_fuzz(fuzz, out);
    } catch (const sb::ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}
