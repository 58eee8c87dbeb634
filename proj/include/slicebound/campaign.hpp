#pragma once

// Batch evaluation: knot tables (CSV in, CSV out) and the seeded fuzz
// property suite over random braid closures.

#include <algorithm>
#include <atomic>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "diagram.hpp"
#include "lee/oracle.hpp"
#include "notation.hpp"
#include "seifert.hpp"

namespace slicebound {

// ---------------------------------------------------------------- csv ---

using CsvRow = std::vector<std::string>;

/// RFC 4180 reader: comma separated, double-quoted fields may hold commas,
/// newlines and doubled quotes. Blank lines are skipped.
inline std::vector<CsvRow> read_csv(std::istream& in) {
    std::vector<CsvRow> rows;
    CsvRow row;
    std::string field;
    bool quoted = false, any = false;
    char ch;
    auto end_row = [&] {
        if (any || !field.empty() || !row.empty()) {
            row.push_back(field);
            rows.push_back(row);
        }
        row.clear();
        field.clear();
        any = false;
    };
    while (in.get(ch)) {
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get(ch);
                    field += '"';
                } else {
                    quoted = false;
                }
            } else {
                field += ch;
            }
        } else if (ch == '"') {
            quoted = any = true;
        } else if (ch == ',') {
            row.push_back(field);
            field.clear();
            any = true;
        } else if (ch == '\n') {
            end_row();
        } else if (ch != '\r') {
            field += ch;
            any = true;
        }
    }
    if (quoted) throw ParseError("unterminated quoted CSV field");
    end_row();
    return rows;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

// -------------------------------------------------------------- table ---

struct KnotTableEntry {
    std::string name;
    std::string pd;
    std::optional<int> known_s;
    std::optional<HalfInteger> known_genus4;
    std::string braid;
    std::string source;
};

/// Rows keyed by header name; unknown columns are ignored and missing ones
/// left empty. Field errors are kept per row so one bad row never hides
/// the rest.
struct TableInput {
    KnotTableEntry entry;
    std::string error;
};

inline std::vector<TableInput> read_knot_table(std::istream& in) {
    const auto rows = read_csv(in);
    std::vector<TableInput> out;
    if (rows.empty()) return out;
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < rows[0].size(); ++i) col[rows[0][i]] = i;
    if (!col.count("name") || (!col.count("pd") && !col.count("braid")))
        throw ParseError("knot table header needs 'name' and 'pd' (or 'braid') columns");
    auto get = [&](const CsvRow& r, const char* key) -> std::string {
        auto it = col.find(key);
        return it != col.end() && it->second < r.size() ? r[it->second] : std::string();
    };
    for (std::size_t i = 1; i < rows.size(); ++i) {
        TableInput t;
        t.entry.name = get(rows[i], "name");
        t.entry.pd = get(rows[i], "pd");
        t.entry.braid = get(rows[i], "braid");
        t.entry.source = get(rows[i], "source");
        try {
            if (auto s = get(rows[i], "known_s"); !s.empty()) {
                std::size_t used = 0;
                t.entry.known_s = std::stoi(s, &used);
                if (used != s.size()) throw ParseError("bad known_s '" + s + "'");
                if (*t.entry.known_s % 2 != 0) throw ValidationError("known_s = " + s + " is odd");
            }
            if (auto g = get(rows[i], "known_genus4"); !g.empty()) t.entry.known_genus4 = HalfInteger::parse(g);
        } catch (const std::exception& e) {
            t.error = e.what();
        }
        out.push_back(std::move(t));
    }
    return out;
}

enum class RowStatus { Tight, SandwichOk, Mismatch, Error };

inline const char* to_string(RowStatus s) {
    switch (s) {
        case RowStatus::Tight: return "TIGHT";
        case RowStatus::SandwichOk: return "SANDWICH_OK";
        case RowStatus::Mismatch: return "MISMATCH";
        case RowStatus::Error: return "ERROR";
    }
    return "ERROR";
}

struct TableResult {
    std::string name;
    std::optional<int> U, Delta, s_lower, s_upper, s_oracle, known_s;
    RowStatus status = RowStatus::Error;
    std::string detail;
};

struct TableOptions {
    bool run_oracle = false;
    lee::LeeOptions oracle;
};

inline Diagram entry_diagram(const KnotTableEntry& e) {
    if (!e.pd.empty()) return diagram_from_pd_text(e.pd);
    if (!e.braid.empty()) return braid_closure(parse_braid(e.braid));
    throw ValidationError("row has neither pd nor braid");
}

/// Status rules: MISMATCH when the oracle value leaves the window
/// ("sandwich_violation", an implementation bug) or disagrees with known_s
/// ("oracle_vs_known", bad table data), or when known values contradict the
/// bounds; TIGHT when Delta = 0 and nothing contradicts; else SANDWICH_OK.
inline TableResult evaluate_entry(const TableInput& in, const TableOptions& opt) {
    TableResult r;
    r.name = in.entry.name;
    r.known_s = in.entry.known_s;
    if (!in.error.empty()) {
        r.detail = in.error;
        return r;
    }
    try {
        const Diagram d = entry_diagram(in.entry);
        const BoundsReport b = bounds_report(d);
        r.U = b.U;
        r.Delta = b.Delta;
        r.s_lower = b.s_lower;
        r.s_upper = b.s_upper;
        std::vector<std::string> problems, notes;

        if (d.is_knot() && opt.run_oracle) {
            if (d.crossing_count() <= opt.oracle.max_crossings) r.s_oracle = lee::analyze(d, opt.oracle).s;
            else notes.push_back("oracle_skipped_size");
        } else if (!d.is_knot()) {
            notes.push_back("link_bounds_only");
        }
        if (!d.is_knot() && in.entry.known_s) notes.push_back("known_s_unchecked_for_link");

        const bool knot_window = d.is_knot() && b.s_lower && b.s_upper;
        if (r.s_oracle && knot_window && (*r.s_oracle < *b.s_lower || *r.s_oracle > *b.s_upper))
            problems.push_back("sandwich_violation");
        if (r.s_oracle && r.known_s && *r.s_oracle != *r.known_s) problems.push_back("oracle_vs_known");
        if (!r.s_oracle && r.known_s && knot_window && (*r.known_s < *b.s_lower || *r.known_s > *b.s_upper))
            problems.push_back("known_s_outside_window");
        if (in.entry.known_genus4 && b.genus_bound_new && *b.genus_bound_new > *in.entry.known_genus4)
            problems.push_back("genus_bound_exceeds_known_genus4");

        if (!problems.empty()) {
            r.status = RowStatus::Mismatch;
            notes.insert(notes.begin(), problems.begin(), problems.end());
        } else {
            r.status = (d.is_knot() && b.Delta == 0) ? RowStatus::Tight : RowStatus::SandwichOk;
        }
        for (std::size_t i = 0; i < notes.size(); ++i) r.detail += (i ? ";" : "") + notes[i];
    } catch (const std::exception& e) {
        r.status = RowStatus::Error;
        r.detail = e.what();
    }
    return r;
}

/// Runs fn(i) for i in [0, n) on `jobs` threads; results stay in index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, int jobs, Fn fn) {
    std::vector<T> out(n);
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t)
        workers.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) out[i] = fn(i);
        });
    for (auto& w : workers) w.join();
    return out;
}

inline std::vector<TableResult> run_table(const std::vector<TableInput>& rows, const TableOptions& opt,
                                          int jobs = 1) {
    return parallel_map<TableResult>(rows.size(), jobs, [&](std::size_t i) { return evaluate_entry(rows[i], opt); });
}

inline void write_table_csv(std::ostream& os, const std::vector<TableResult>& results) {
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    os << "name,U,Delta,s_lower,s_upper,s_oracle,known_s,status,detail\n";
    for (const auto& r : results)
        os << csv_field(r.name) << ',' << opt(r.U) << ',' << opt(r.Delta) << ',' << opt(r.s_lower) << ','
           << opt(r.s_upper) << ',' << opt(r.s_oracle) << ',' << opt(r.known_s) << ',' << to_string(r.status) << ','
           << csv_field(r.detail) << '\n';
}

inline bool table_ok(const std::vector<TableResult>& results) {
    return std::none_of(results.begin(), results.end(), [](const TableResult& r) {
        return r.status == RowStatus::Mismatch || r.status == RowStatus::Error;
    });
}

// --------------------------------------------------------------- fuzz ---

struct FuzzOptions {
    int count = 1000;
    int max_strands = 4;
    int max_length = 12;
    std::uint64_t seed = 42;
    bool run_oracle = true;
    lee::LeeOptions oracle;
    int jobs = 1;
};

/// Case i draws its strand count uniformly from [2, max_strands], its
/// length from [0, max_length] and a word seed, all from one
/// std::mt19937_64 stream seeded with `seed`.
inline std::vector<BraidWord> fuzz_corpus(const FuzzOptions& opt) {
    if (opt.count < 0 || opt.max_strands < 2 || opt.max_length < 0)
        throw ValidationError("fuzz needs count >= 0, strands >= 2, max_length >= 0");
    std::mt19937_64 rng(opt.seed);
    std::vector<BraidWord> corpus;
    corpus.reserve(static_cast<std::size_t>(opt.count));
    for (int i = 0; i < opt.count; ++i) {
        const int strands = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(opt.max_strands - 1));
        const int length = static_cast<int>(rng() % static_cast<std::uint64_t>(opt.max_length + 1));
        corpus.push_back(random_braid(strands, length, rng()));
    }
    return corpus;
}

struct PropertyTally {
    int checked = 0;
    int failed = 0;
};

struct FuzzCaseResult {
    std::vector<std::pair<std::string, bool>> checks;
    bool knot = false, connected = false, oracle_run = false;
};

struct FuzzSummary {
    int cases = 0;
    int knots = 0;
    int connected = 0;
    int oracle_runs = 0;
    std::map<std::string, PropertyTally> properties;
    std::vector<std::string> failures;  // "<braid>: <property>"

    bool ok() const { return failures.empty(); }
};

inline FuzzCaseResult fuzz_case(const BraidWord& w, const FuzzOptions& opt) {
    FuzzCaseResult out;
    auto check = [&](const char* name, auto&& predicate) {
        bool ok = false;
        try {
            ok = predicate();
        } catch (const std::exception&) {
            ok = false;
        }
        out.checks.push_back({name, ok});
    };

    const Diagram d = braid_closure(w);
    const Diagram m = mirror(d);
    const SeifertCircles circles = oriented_resolution(d);
    const SeifertGraph g = seifert_graph(d, circles);
    const int U = bound_U(d), delta = bound_Delta(d);
    out.knot = d.is_knot();
    out.connected = d.is_connected();

    int letter_sum = 0;
    for (int l : w.letters) letter_sum += l > 0 ? 1 : -1;
    check("writhe_is_letter_sum", [&] { return d.writhe() == letter_sum; });
    check("circles_equal_strands", [&] { return circles.count == w.strands; });
    check("mirror_identity", [&] { return U + bound_U(m) == 2 * delta; });
    check("mirror_delta", [&] { return bound_Delta(m) == delta; });
    check("mirror_swaps_signs", [&] {
        const SeifertGraph gm = seifert_graph(m);
        return component_count(gm, 1) == component_count(g, -1) && component_count(gm, -1) == component_count(g, 1);
    });
    check("seifert_bipartite", [&] { return two_coloring(g).has_value(); });

    if (out.connected) {
        check("delta_is_betti1", [&] { return betti1(aux_graph(g, circles)) == delta; });
        check("tightness_predicates", [&] {
            const bool fires = is_positive(d) || is_negative(d) || is_alternating(d) || braid_sign_condition(w);
            return !fires || delta == 0;
        });
        check("link_bound_formula", [&] {
            return genus_bound_link(d) ==
                   HalfInteger::from_twice(d.writhe() - circles.count + 2 * component_count(g, 1) -
                                           2 * d.component_count() + 1);
        });
    }
    if (out.connected && out.knot) {
        check("U_even", [&] { return U % 2 == 0; });
        check("dominance", [&] { return genus_bound_knot(d) >= classic_bennequin(d); });
        check("link_reduces_to_knot", [&] { return genus_bound_link(d) == genus_bound_knot(d); });
        if (opt.run_oracle && d.crossing_count() <= opt.oracle.max_crossings) {
            out.oracle_run = true;
            check("sandwich", [&] {
                const int s = lee::s_invariant(d, opt.oracle);
                return U - 2 * delta <= s && s <= U;
            });
        }
    }
    return out;
}

inline FuzzSummary run_fuzz(const FuzzOptions& opt) {
    const auto corpus = fuzz_corpus(opt);
    const auto results =
        parallel_map<FuzzCaseResult>(corpus.size(), opt.jobs, [&](std::size_t i) { return fuzz_case(corpus[i], opt); });
    FuzzSummary s;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        ++s.cases;
        s.knots += r.knot;
        s.connected += r.connected;
        s.oracle_runs += r.oracle_run;
        for (const auto& [name, ok] : r.checks) {
            auto& t = s.properties[name];
            ++t.checked;
            if (!ok) {
                ++t.failed;
                s.failures.push_back(to_string(corpus[i]) + ": " + name);
            }
        }
    }
    return s;
}

inline std::string to_text(const FuzzSummary& s, const FuzzOptions& opt) {
    std::ostringstream os;
    os << "fuzz seed=" << opt.seed << " count=" << opt.count << " strands<=" << opt.max_strands
       << " length<=" << opt.max_length << "\n";
    os << "cases=" << s.cases << " knots=" << s.knots << " connected=" << s.connected
       << " oracle_runs=" << s.oracle_runs << "\n";
    for (const auto& [name, t] : s.properties)
        os << "  " << name << ": " << (t.checked - t.failed) << "/" << t.checked << " pass\n";
    for (const auto& f : s.failures) os << "FAIL " << f << "\n";
    os << (s.ok() ? "result: PASS" : "result: FAIL") << "\n";
    return os.str();
}

}  // namespace slicebound
