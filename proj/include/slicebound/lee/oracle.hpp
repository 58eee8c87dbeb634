#pragma once

// Exact Rasmussen invariant of a small knot diagram from the filtered Lee
// complex, restricted to homological degrees -1, 0, 1.
//
// Cube of resolutions: bit k of a vertex mask is the smoothing of crossing
// k (0 joins edges a-b and c-d, 1 joins a-d and b-c). A vertex with |v|
// one-smoothings sits in homological degree |v| - n_minus. Generators label
// each circle v+ (bit 0) or v- (bit 1), with quantum grading
//
//     q = #v+ - #v- + |v| + n_plus - 2 n_minus.
//
// The differential uses Lee's Frobenius algebra Q[x]/(x^2 - 1) with
// v+ = 1, v- = x; it is filtered (q never decreases).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "../diagram.hpp"
#include "../error.hpp"
#include "../seifert.hpp"
#include "../union_find.hpp"
#include "sparse.hpp"

namespace slicebound::lee {

struct LeeOptions {
    int max_crossings = 12;
};

struct ResolutionVertex {
    std::uint64_t mask = 0;
    int circles = 0;
    std::vector<int> circle_of_edge;
    int offset = 0;  // index of the all-v+ generator
};

/// Generators of one homological degree. Generator index =
/// vertex.offset + label mask (bit c set when circle c carries v-).
struct ChainGroup {
    int degree = 0;
    std::vector<ResolutionVertex> vertices;
    std::unordered_map<std::uint64_t, int> vertex_index;
    std::vector<int> grading;

    int size() const { return static_cast<int>(grading.size()); }
};

/// Small-integer sparse matrix stored by columns; rows ascending.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, int>>> columns;
};

struct LeeComplexSlice {
    ChainGroup c_minus1, c0, c1;
    IntMatrix d_minus1;  // C^-1 -> C^0
    IntMatrix d0;        // C^0 -> C^1
    int n_plus = 0;
    int n_minus = 0;
    std::uint64_t oriented_vertex = 0;
};

/// A degree-0 chain over the oriented resolution: (generator index, coefficient).
struct CanonicalCycle {
    std::vector<std::pair<int, int>> chain;
    int min_grading = 0;
};

namespace detail {

inline void require_oracle_input(const Diagram& d, const LeeOptions& opt) {
    if (!d.is_knot())
        throw DomainError("Lee oracle handles knots only; diagram has " + std::to_string(d.component_count()) +
                          " components");
    if (d.crossing_count() > opt.max_crossings)
        throw LimitError("diagram has " + std::to_string(d.crossing_count()) + " crossings, oracle limit is " +
                         std::to_string(opt.max_crossings));
    if (d.crossing_count() > 62) throw LimitError("oracle cannot index more than 62 crossings");
}

inline ResolutionVertex resolve(const Diagram& d, std::uint64_t mask) {
    UnionFind uf(d.edge_count());
    for (int k = 0; k < d.crossing_count(); ++k) {
        const auto& e = d.crossings()[k].edges;
        if (mask >> k & 1) {
            uf.unite(e[0], e[3]);
            uf.unite(e[1], e[2]);
        } else {
            uf.unite(e[0], e[1]);
            uf.unite(e[2], e[3]);
        }
    }
    ResolutionVertex v;
    v.mask = mask;
    v.circle_of_edge = uf.labels();
    v.circles = uf.set_count();
    if (v.circles > 30) throw LimitError("resolution with more than 30 circles");
    return v;
}

inline void for_each_mask(int n, int ones, auto&& fn) {
    if (ones < 0 || ones > n) return;
    if (ones == 0) {
        fn(std::uint64_t{0});
        return;
    }
    // Gosper's hack: masks with `ones` bits set, ascending.
    std::uint64_t m = (std::uint64_t{1} << ones) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (m < limit) {
        fn(m);
        const std::uint64_t c = m & (~m + 1);
        const std::uint64_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

inline ChainGroup make_group(const Diagram& d, int degree) {
    ChainGroup g;
    g.degree = degree;
    const int ones = degree + d.n_minus();
    const int shift = d.n_plus() - 2 * d.n_minus();
    for_each_mask(d.crossing_count(), ones, [&](std::uint64_t mask) {
        ResolutionVertex v = resolve(d, mask);
        v.offset = g.size();
        const std::uint32_t labelings = std::uint32_t{1} << v.circles;
        for (std::uint32_t labels = 0; labels < labelings; ++labels)
            g.grading.push_back(v.circles - 2 * std::popcount(labels) + ones + shift);
        g.vertex_index.emplace(mask, static_cast<int>(g.vertices.size()));
        g.vertices.push_back(std::move(v));
    });
    return g;
}

// Edge maps of the cube from `from` (degree i) to `to` (degree i + 1).
inline IntMatrix make_differential(const Diagram& d, const ChainGroup& from, const ChainGroup& to) {
    IntMatrix m;
    m.rows = to.size();
    m.cols = from.size();
    m.columns.resize(static_cast<std::size_t>(from.size()));
    const int n = d.crossing_count();
    for (const ResolutionVertex& v : from.vertices) {
        for (int k = 0; k < n; ++k) {
            if (v.mask >> k & 1) continue;
            const std::uint64_t target_mask = v.mask | (std::uint64_t{1} << k);
            const ResolutionVertex& w = to.vertices[to.vertex_index.at(target_mask)];
            const int sign = std::popcount(v.mask & ((std::uint64_t{1} << k) - 1)) % 2 ? -1 : 1;
            const auto& e = d.crossings()[k].edges;
            const int A = v.circle_of_edge[e[0]], B = v.circle_of_edge[e[2]];

            // Untouched circles carry their label across.
            std::vector<int> image(v.circles, -1);
            for (int edge = 0; edge < d.edge_count(); ++edge) {
                const int c = v.circle_of_edge[edge];
                if (c != A && c != B && image[c] < 0) image[c] = w.circle_of_edge[edge];
            }
            const int W1 = w.circle_of_edge[e[0]], W2 = w.circle_of_edge[e[1]];
            const bool merge = A != B;
            if (merge != (W1 == W2)) throw ConsistencyError("merge/split mismatch in cube edge");

            const std::uint32_t labelings = std::uint32_t{1} << v.circles;
            for (std::uint32_t labels = 0; labels < labelings; ++labels) {
                std::uint32_t base = 0;
                for (int c = 0; c < v.circles; ++c)
                    if (image[c] >= 0 && (labels >> c & 1)) base |= std::uint32_t{1} << image[c];
                auto& col = m.columns[static_cast<std::size_t>(v.offset) + labels];
                auto emit = [&](std::uint32_t target_labels) {
                    col.push_back({w.offset + static_cast<int>(target_labels), sign});
                };
                if (merge) {
                    // m(1,1)=1, m(1,x)=m(x,1)=x, m(x,x)=1.
                    const bool x = ((labels >> A) ^ (labels >> B)) & 1;
                    emit(base | (x ? std::uint32_t{1} << W1 : 0));
                } else {
                    // D(1) = 1(x)x + x(x)1, D(x) = x(x)x + 1(x)1.
                    const std::uint32_t b1 = std::uint32_t{1} << W1, b2 = std::uint32_t{1} << W2;
                    if (labels >> A & 1) {
                        emit(base | b1 | b2);
                        emit(base);
                    } else {
                        emit(base | b2);
                        emit(base | b1);
                    }
                }
            }
        }
    }
    for (auto& col : m.columns) std::sort(col.begin(), col.end());
    return m;
}

template <class T>
SparseVector<T> to_sparse(const std::vector<std::pair<int, int>>& col, const std::vector<int>& position) {
    SparseVector<T> v;
    v.reserve(col.size());
    for (auto [row, value] : col) v.push_back({position[row], T(value)});
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
    return v;
}

/// Positions of generators sorted by ascending grading, and the grading at
/// each position.
struct GradedOrder {
    std::vector<int> position;
    std::vector<int> grading_at;
};

inline GradedOrder ascending_order(const ChainGroup& g) {
    std::vector<int> order(static_cast<std::size_t>(g.size()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.grading[a] < g.grading[b]; });
    GradedOrder o;
    o.position.resize(order.size());
    o.grading_at.resize(order.size());
    for (std::size_t p = 0; p < order.size(); ++p) {
        o.position[order[p]] = static_cast<int>(p);
        o.grading_at[p] = g.grading[order[p]];
    }
    return o;
}

}  // namespace detail

inline LeeComplexSlice build_slice(const Diagram& d, const LeeOptions& opt = {}) {
    detail::require_oracle_input(d, opt);
    LeeComplexSlice s;
    s.n_plus = d.n_plus();
    s.n_minus = d.n_minus();
    for (int k = 0; k < d.crossing_count(); ++k)
        if (d.crossings()[k].sign < 0) s.oriented_vertex |= std::uint64_t{1} << k;
    s.c_minus1 = detail::make_group(d, -1);
    s.c0 = detail::make_group(d, 0);
    s.c1 = detail::make_group(d, 1);
    s.d_minus1 = detail::make_differential(d, s.c_minus1, s.c0);
    s.d0 = detail::make_differential(d, s.c0, s.c1);
    return s;
}

/// Applies a column-stored matrix to a sparse chain.
inline std::map<int, long long> apply(const IntMatrix& m, const std::vector<std::pair<int, int>>& chain) {
    std::map<int, long long> out;
    for (auto [col, coeff] : chain)
        for (auto [row, value] : m.columns[col]) out[row] += static_cast<long long>(coeff) * value;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

/// d0 o d_-1 == 0, exactly.
inline bool differentials_compose_to_zero(const LeeComplexSlice& s) {
    for (const auto& col : s.d_minus1.columns)
        if (!apply(s.d0, col).empty()) return false;
    return true;
}

/// Every column of both differentials lands in gradings >= its own.
inline bool respects_filtration(const LeeComplexSlice& s) {
    auto check = [](const IntMatrix& m, const ChainGroup& from, const ChainGroup& to) {
        for (int c = 0; c < m.cols; ++c)
            for (auto [row, value] : m.columns[c])
                if (to.grading[row] < from.grading[c]) return false;
        return true;
    };
    return check(s.d_minus1, s.c_minus1, s.c0) && check(s.d0, s.c0, s.c1);
}

inline bool is_cycle(const LeeComplexSlice& s, const CanonicalCycle& z) { return apply(s.d0, z.chain).empty(); }

/// The two canonical Lee cycles on the oriented resolution. Circles of one
/// colour class of the Seifert graph carry v- + v+, the others v- - v+;
/// swapping the classes gives the second cycle.
inline std::pair<CanonicalCycle, CanonicalCycle> canonical_cycles(const Diagram& d, const LeeComplexSlice& s) {
    const SeifertCircles circles = oriented_resolution(d);
    const auto coloring = two_coloring(seifert_graph(d, circles));
    if (!coloring) throw ConsistencyError("Seifert graph is not bipartite");
    const ResolutionVertex& v = s.c0.vertices[s.c0.vertex_index.at(s.oriented_vertex)];
    if (v.circle_of_edge != circles.circle_of_edge)
        throw ConsistencyError("oriented cube vertex disagrees with the Seifert circles");

    auto build = [&](int minus_class) {
        CanonicalCycle z;
        z.min_grading = s.c0.grading[v.offset + (static_cast<int>(std::uint32_t{1} << v.circles) - 1)];
        const std::uint32_t labelings = std::uint32_t{1} << v.circles;
        for (std::uint32_t labels = 0; labels < labelings; ++labels) {
            int coeff = 1;
            for (int c = 0; c < v.circles; ++c)
                if (!(labels >> c & 1) && (*coloring)[c] == minus_class) coeff = -coeff;
            z.chain.push_back({v.offset + static_cast<int>(labels), coeff});
        }
        if (!is_cycle(s, z)) throw ConsistencyError("canonical generator is not a cycle");
        return z;
    };
    return {build(1), build(0)};
}

namespace detail {

/// s_min = max{ j : z in F^j C^0 + im d_-1 }, found by reducing z against
/// an echelon basis of im d_-1 whose rows are ordered by ascending grading.
template <class T>
int filtration_level(const CanonicalCycle& z, const EchelonBasis<T>& image, const GradedOrder& order) {
    SparseVector<T> v;
    for (auto [gen, coeff] : z.chain) v.push_back({order.position[gen], T(coeff)});
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
    v = image.reduce(std::move(v));
    if (v.empty()) throw ConsistencyError("canonical cycle is a boundary");
    return order.grading_at[v.front().row];
}

template <class T>
EchelonBasis<T> image_basis(const LeeComplexSlice& s, const GradedOrder& order) {
    EchelonBasis<T> basis(s.c0.size());
    for (const auto& col : s.d_minus1.columns) basis.insert(to_sparse<T>(col, order.position));
    return basis;
}

/// dim F^j H^0 at every grading j of C^0 and at one step above the top:
///   dim F^j C^0 - rank(d0 on F^j C^0) - rank(d_-1) + rank(d_-1 below j).
template <class T>
std::map<int, int> filtration_profile(const LeeComplexSlice& s, const EchelonBasis<T>& image,
                                      const GradedOrder& order) {
    std::vector<int> by_desc(static_cast<std::size_t>(s.c0.size()));
    std::iota(by_desc.begin(), by_desc.end(), 0);
    std::stable_sort(by_desc.begin(), by_desc.end(),
                     [&](int a, int b) { return s.c0.grading[a] > s.c0.grading[b]; });

    std::vector<int> identity(static_cast<std::size_t>(s.c1.size()));
    std::iota(identity.begin(), identity.end(), 0);
    EchelonBasis<T> kernel_probe(s.c1.size());

    std::vector<int> pivot_gradings;
    for (int p : image.pivots()) pivot_gradings.push_back(order.grading_at[p]);
    std::sort(pivot_gradings.begin(), pivot_gradings.end());
    auto image_rows_below = [&](int j) {
        return static_cast<int>(std::lower_bound(pivot_gradings.begin(), pivot_gradings.end(), j) -
                                pivot_gradings.begin());
    };

    std::map<int, int> profile;
    const int top = s.c0.size() ? s.c0.grading[by_desc.front()] : 0;
    profile[top + 2] = 0;
    int generators = 0, rank_d0 = 0;
    for (std::size_t i = 0; i < by_desc.size();) {
        const int j = s.c0.grading[by_desc[i]];
        for (; i < by_desc.size() && s.c0.grading[by_desc[i]] == j; ++i) {
            ++generators;
            if (kernel_probe.insert(to_sparse<T>(s.d0.columns[by_desc[i]], identity))) ++rank_d0;
        }
        profile[j] = generators - rank_d0 - image.rank() + image_rows_below(j);
    }
    return profile;
}

struct Levels {
    int s_min_o = 0;
    int s_min_obar = 0;
    std::map<int, int> profile;
};

template <class T>
Levels eliminate(const LeeComplexSlice& s, const CanonicalCycle& so, const CanonicalCycle& sobar,
                 bool with_profile) {
    const GradedOrder order = ascending_order(s.c0);
    const EchelonBasis<T> image = image_basis<T>(s, order);
    Levels out;
    out.s_min_o = filtration_level(so, image, order);
    out.s_min_obar = filtration_level(sobar, image, order);
    if (with_profile) out.profile = filtration_profile(s, image, order);
    return out;
}

/// Machine integers first; on overflow, the same elimination in big integers.
inline Levels eliminate_exact(const LeeComplexSlice& s, const CanonicalCycle& so, const CanonicalCycle& sobar,
                              bool with_profile) {
    try {
        return eliminate<long long>(s, so, sobar, with_profile);
    } catch (const Overflow&) {
        return eliminate<BigInteger>(s, so, sobar, with_profile);
    }
}

}  // namespace detail

/// Rasmussen's s = s_min + 1 for a knot diagram.
inline int s_invariant(const Diagram& d, const LeeOptions& opt = {}) {
    const LeeComplexSlice s = build_slice(d, opt);
    const auto [so, sobar] = canonical_cycles(d, s);
    const auto levels = detail::eliminate_exact(s, so, sobar, false);
    if (levels.s_min_o != levels.s_min_obar)
        throw ConsistencyError("canonical cycles sit at different filtration levels");
    return levels.s_min_o + 1;
}

/// dim F^j H^0 for every grading j of C^0 (plus one empty step on top).
inline std::map<int, int> filtration_profile(const Diagram& d, const LeeOptions& opt = {}) {
    const LeeComplexSlice s = build_slice(d, opt);
    const auto [so, sobar] = canonical_cycles(d, s);
    return detail::eliminate_exact(s, so, sobar, true).profile;
}

/// Full oracle run with every internal consistency check.
struct LeeAnalysis {
    int s = 0;
    int s_min_o = 0;
    int s_min_obar = 0;
    std::map<int, int> profile;
    int jump_upper = 0;  // largest j with dim F^j H^0 >= 1
    int jump_lower = 0;  // largest j with dim F^j H^0 = 2
    std::size_t generators_minus1 = 0, generators0 = 0, generators1 = 0;
};

inline LeeAnalysis analyze(const Diagram& d, const LeeOptions& opt = {}) {
    const LeeComplexSlice s = build_slice(d, opt);
    if (!differentials_compose_to_zero(s)) throw ConsistencyError("d0 o d_-1 != 0");
    if (!respects_filtration(s)) throw ConsistencyError("differential lowers quantum grading");
    const auto [so, sobar] = canonical_cycles(d, s);
    const auto levels = detail::eliminate_exact(s, so, sobar, true);

    LeeAnalysis a;
    a.generators_minus1 = s.c_minus1.size();
    a.generators0 = s.c0.size();
    a.generators1 = s.c1.size();
    a.s_min_o = levels.s_min_o;
    a.s_min_obar = levels.s_min_obar;
    if (a.s_min_o != a.s_min_obar) throw ConsistencyError("canonical cycles sit at different filtration levels");
    a.s = a.s_min_o + 1;
    if (a.s % 2 != 0) throw ConsistencyError("odd s = " + std::to_string(a.s));

    a.profile = levels.profile;
    int previous = 0;
    bool have_upper = false, have_lower = false;
    for (auto it = a.profile.rbegin(); it != a.profile.rend(); ++it) {
        const int dim = it->second;
        if (dim < previous || dim > 2) throw ConsistencyError("filtration profile is not a 0,1,2 staircase");
        if (dim >= 1 && !have_upper) {
            a.jump_upper = it->first;
            have_upper = true;
        }
        if (dim == 2 && !have_lower) {
            a.jump_lower = it->first;
            have_lower = true;
        }
        previous = dim;
    }
    if (!have_lower) throw ConsistencyError("H^0 is not 2-dimensional");
    if (a.jump_upper - a.jump_lower != 2) throw ConsistencyError("filtration jumps are not 2 apart");
    if (a.jump_lower + 1 != a.s) throw ConsistencyError("filtration profile disagrees with canonical cycle");
    return a;
}

}  // namespace slicebound::lee
