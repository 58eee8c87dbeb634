// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <slicebound/slicebound.hpp>

using namespace slicebound;

namespace {

struct Criterion {
    std::string id;
    std::string title;
    std::function<bool(std::ostream&)> check;
};

std::vector<TableInput> load_table() {
    std::ifstream in(SLICEBOUND_DATA_DIR "/knot_table.csv");
    if (!in) throw std::runtime_error("cannot open knot table");
    return read_knot_table(in);
}

std::vector<BraidWord> corpus(int count, int strands, int length, std::uint64_t seed) {
    FuzzOptions o;
    o.count = count;
    o.max_strands = strands;
    o.max_length = length;
    o.seed = seed;
    return fuzz_corpus(o);
}

Diagram torus_2q(int q) { return braid_closure({2, std::vector<int>(static_cast<std::size_t>(q), 1)}); }

/// Every oracle run in this binary goes through here, so every constructed
/// complex is checked for d^2 = 0, closed canonical cycles and the jump gap.
struct OracleLedger {
    int runs = 0;
    int d_squared_failures = 0;
    int open_cycles = 0;
    int gap_failures = 0;
    std::vector<std::string> notes;

    int s(const Diagram& d, const std::string& name) {
        ++runs;
        const lee::LeeComplexSlice slice = lee::build_slice(d);
        if (!lee::differentials_compose_to_zero(slice)) {
            ++d_squared_failures;
            notes.push_back(name + ": d0 d-1 != 0");
        }
        const auto [so, sobar] = lee::canonical_cycles(d, slice);
        if (!lee::is_cycle(slice, so) || !lee::is_cycle(slice, sobar)) {
            ++open_cycles;
            notes.push_back(name + ": canonical cycle not closed");
        }
        const lee::LeeAnalysis a = lee::analyze(d);
        if (a.jump_upper - a.jump_lower != 2 || a.jump_lower + 1 != a.s) {
            ++gap_failures;
            notes.push_back(name + ": jump gap");
        }
        return a.s;
    }
};

struct ParityLedger {
    int checked = 0;
    std::vector<std::string> odd;

    void check(const Diagram& d, const std::string& name) {
        if (!d.is_knot() || !d.is_connected()) return;
        ++checked;
        if (bound_U(d) % 2 != 0) odd.push_back(name);
    }
};

void list(std::ostream& os, const std::vector<std::string>& items, std::size_t limit = 5) {
    for (std::size_t i = 0; i < items.size() && i < limit; ++i) os << (i ? ", " : " [") << items[i];
    if (items.size() > limit) os << ", ...";
    if (!items.empty()) os << "]";
}

}  // namespace

int main() {
    const auto table = load_table();
    OracleLedger oracle;
    ParityLedger parity;
    const auto random = corpus(1000, 5, 12, 42);

    // Oracle values of table knots, shared by several criteria.
    std::map<std::string, int> s_table;
    auto table_s = [&](const TableInput& row) {
        auto it = s_table.find(row.entry.name);
        if (it != s_table.end()) return it->second;
        const int s = oracle.s(entry_diagram(row.entry), row.entry.name);
        s_table[row.entry.name] = s;
        return s;
    };

    std::vector<Criterion> criteria;

    criteria.push_back({"AC1", "sandwich U-2D <= s <= U on the knot table", [&](std::ostream& os) {
                            std::vector<std::string> bad;
                            for (const auto& row : table) {
                                if (!row.error.empty()) {
                                    bad.push_back(row.entry.name + " (" + row.error + ")");
                                    continue;
                                }
                                const Diagram d = entry_diagram(row.entry);
                                parity.check(d, row.entry.name);
                                const int U = bound_U(d), delta = bound_Delta(d), s = table_s(row);
                                if (!(U - 2 * delta <= s && s <= U)) bad.push_back(row.entry.name);
                                if (row.entry.known_s && *row.entry.known_s != s)
                                    bad.push_back(row.entry.name + " (known_s)");
                            }
                            os << table.size() << " rows, " << bad.size() << " violations";
                            list(os, bad);
                            return bad.empty() && table.size() >= 36;
                        }});

    criteria.push_back({"AC2", "alternating table diagrams have Delta = 0 and U = s", [&](std::ostream& os) {
                            int alternating = 0;
                            std::vector<std::string> bad;
                            for (const auto& row : table) {
                                const Diagram d = entry_diagram(row.entry);
                                if (!is_alternating(d)) continue;
                                ++alternating;
                                if (bound_Delta(d) != 0 || bound_U(d) != table_s(row)) bad.push_back(row.entry.name);
                            }
                            os << alternating << " alternating diagrams, " << bad.size() << " failures";
                            list(os, bad);
                            return bad.empty() && alternating > 0;
                        }});

    criteria.push_back({"AC3", "T(2,q), q = 3,5,7,9: U = s = q-1, Delta = 0, genus bound (q-1)/2",
                        [&](std::ostream& os) {
                            bool ok = true;
                            for (int q : {3, 5, 7, 9}) {
                                const Diagram d = torus_2q(q);
                                parity.check(d, "T(2," + std::to_string(q) + ")");
                                const int U = bound_U(d), delta = bound_Delta(d);
                                const int s = oracle.s(d, "T(2," + std::to_string(q) + ")");
                                const HalfInteger g = genus_bound_knot(d);
                                os << "q=" << q << ": U=" << U << " Delta=" << delta << " s=" << s << " g=" << g
                                   << (q < 9 ? "; " : "");
                                ok = ok && U == q - 1 && delta == 0 && s == q - 1 &&
                                     g == HalfInteger::from_twice(q - 1);
                            }
                            return ok;
                        }});

    criteria.push_back({"AC4", "mirror identity on 1000 random closures", [&](std::ostream& os) {
                            std::vector<std::string> bad;
                            for (const auto& w : random) {
                                const Diagram d = braid_closure(w);
                                const Diagram m = mirror(d);
                                parity.check(d, to_string(w));
                                parity.check(m, "mirror " + to_string(w));
                                if (bound_U(d) + bound_U(m) != 2 * bound_Delta(d) || bound_Delta(m) != bound_Delta(d))
                                    bad.push_back(to_string(w));
                            }
                            os << random.size() << " closures, " << bad.size() << " failures";
                            list(os, bad);
                            return bad.empty() && random.size() == 1000;
                        }});

    criteria.push_back({"AC5", "Delta = b1(G) on the same corpus", [&](std::ostream& os) {
                            int connected = 0, split = 0;
                            std::vector<std::string> bad;
                            for (const auto& w : random) {
                                const Diagram d = braid_closure(w);
                                const SeifertCircles c = oriented_resolution(d);
                                const AuxGraph g = aux_graph(seifert_graph(d, c), c);
                                if (d.is_connected()) {
                                    ++connected;
                                    if (betti1(g) != bound_Delta(d)) bad.push_back(to_string(w));
                                } else {
                                    // Split diagrams: Delta = sum of per-component b1 - (#components(G) - 1).
                                    ++split;
                                    const auto parts = betti1_by_component(g);
                                    int sum = 0;
                                    for (int b : parts) sum += b;
                                    if (sum - static_cast<int>(parts.size()) + 1 != bound_Delta(d))
                                        bad.push_back(to_string(w));
                                }
                            }
                            os << connected << " connected (b1), " << split << " split (per component), "
                               << bad.size() << " failures";
                            list(os, bad);
                            return bad.empty();
                        }});

    criteria.push_back({"AC6", "dominance over slice-Bennequin, strict for the negative trefoil",
                        [&](std::ostream& os) {
                            int knots = 0, strict = 0;
                            std::vector<std::string> bad;
                            for (const auto& w : random) {
                                const Diagram d = braid_closure(w);
                                if (!d.is_knot() || !d.is_connected()) continue;
                                ++knots;
                                const HalfInteger a = genus_bound_knot(d), b = classic_bennequin(d);
                                if (a < b) bad.push_back(to_string(w));
                                if (a > b) ++strict;
                            }
                            const Diagram t = mirror(torus_2q(3));
                            const HalfInteger gn = genus_bound_knot(t), gc = classic_bennequin(t);
                            os << knots << " knots, " << bad.size() << " failures, " << strict
                               << " strict; negative trefoil: " << gn << " > " << gc;
                            list(os, bad);
                            return bad.empty() && knots > 0 && gn == HalfInteger::from_integer(-1) &&
                                   gc == HalfInteger::from_integer(-2);
                        }});

    criteria.push_back({"AC8", "oracle agrees on braid and PD presentations", [&](std::ostream& os) {
                            int compared = 0;
                            std::vector<std::string> bad;
                            for (const auto& row : table) {
                                if (row.entry.braid.empty()) continue;
                                const Diagram b = braid_closure(parse_braid(row.entry.braid));
                                parity.check(b, row.entry.name + " braid");
                                const int sb = oracle.s(b, row.entry.name + " braid");
                                const int sp = table_s(row);
                                ++compared;
                                os << row.entry.name << ":" << sb << "/" << sp << " ";
                                if (sb != sp) bad.push_back(row.entry.name);
                            }
                            os << "(" << compared << " knots)";
                            list(os, bad);
                            return bad.empty() && compared >= 5;
                        }});

    criteria.push_back({"AC9", "U even on connected knot diagrams; unknot diagrams give s = 0",
                        [&](std::ostream& os) {
                            const std::vector<std::pair<std::string, Diagram>> unknots = {
                                {"0-crossing", braid_closure({1, {}})},
                                {"kink", diagram_from_pd_text("X[1,1,2,2]")},
                                {"2:[1,1,-1]", braid_closure(parse_braid("2: [1,1,-1]"))}};
                            bool ok = true;
                            for (const auto& [name, d] : unknots) {
                                parity.check(d, name);
                                const int s = oracle.s(d, name);
                                os << name << " s=" << s << "; ";
                                ok = ok && s == 0;
                            }
                            os << parity.checked << " parity checks, " << parity.odd.size() << " odd";
                            list(os, parity.odd);
                            return ok && parity.odd.empty() && parity.checked > 0;
                        }});

    criteria.push_back({"AC10", "link corollary: Hopf = -1/2; reduces to knot bound at r = 1",
                        [&](std::ostream& os) {
                            const HalfInteger hopf = genus_bound_link(braid_closure(parse_braid("2: [1,1]")));
                            int cases = 0;
                            std::vector<std::string> bad;
                            for (const auto& w : corpus(2000, 5, 12, 10)) {
                                if (cases == 100) break;
                                const Diagram d = braid_closure(w);
                                if (!d.is_knot() || !d.is_connected()) continue;
                                ++cases;
                                if (genus_bound_link(d) != genus_bound_knot(d)) bad.push_back(to_string(w));
                            }
                            os << "Hopf " << hopf << "; " << cases << " knot closures, " << bad.size() << " failures";
                            list(os, bad);
                            return hopf == HalfInteger::from_twice(-1) && cases == 100 && bad.empty();
                        }});

    // Runs last so that it covers every complex built above.
    criteria.push_back({"AC7", "oracle consistency: d^2 = 0, closed cycles, jump gap 2, s(mirror) = -s",
                        [&](std::ostream& os) {
                            std::vector<std::string> bad;
                            int mirrored = 0;
                            for (const auto& row : table) {
                                const Diagram d = entry_diagram(row.entry);
                                if (d.crossing_count() > 7) continue;
                                ++mirrored;
                                const Diagram m = mirror(d);
                                parity.check(m, row.entry.name + " mirror");
                                if (oracle.s(m, row.entry.name + " mirror") != -table_s(row))
                                    bad.push_back(row.entry.name);
                            }
                            int sandwiched = 0;
                            for (const auto& w : random) {
                                const Diagram d = braid_closure(w);
                                if (!d.is_knot() || d.crossing_count() > 10) continue;
                                ++sandwiched;
                                const int s = oracle.s(d, to_string(w));
                                if (s < bound_U(d) - 2 * bound_Delta(d) || s > bound_U(d))
                                    bad.push_back(to_string(w) + " sandwich");
                            }
                            os << oracle.runs << " oracle runs: " << oracle.d_squared_failures << " d^2 failures, "
                               << oracle.open_cycles << " open cycles, " << oracle.gap_failures << " gap failures; "
                               << mirrored << " mirrors, " << sandwiched << " corpus knots, " << bad.size() << " failures";
                            list(os, bad);
                            list(os, oracle.notes);
                            return bad.empty() && oracle.d_squared_failures == 0 && oracle.open_cycles == 0 &&
                                   oracle.gap_failures == 0 && mirrored > 0;
                        }});

    int failed = 0;
    std::map<int, std::string> lines;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : criteria) {
        std::ostringstream detail;
        bool ok = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail << " exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !ok;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        lines[std::stoi(c.id.substr(2))] =
            (ok ? "[PASS] " : "[FAIL] ") + c.id + " " + c.title + " -- " + detail.str() + " (" + timing + ")";
    }
    for (const auto& [id, line] : lines) std::cout << line << '\n';
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (failed ? "acceptance: FAILED " : "acceptance: all criteria passed ") << "(" << criteria.size() - failed
              << "/" << criteria.size() << ", " << total << "s)" << std::endl;
    return failed ? 1 : 0;
}
