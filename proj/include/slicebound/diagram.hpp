#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "notation.hpp"
#include "union_find.hpp"

namespace slicebound {

/// A crossing in PD order: edges[0] is the incoming under-strand, the rest
/// follow counterclockwise. The sign fixes the over-strand direction:
/// positive crossings run edges[3] -> edges[1] on top.
struct Crossing {
    std::array<int, 4> edges{};
    int sign = 1;

    int in_under() const { return edges[0]; }
    int out_under() const { return edges[2]; }
    int in_over() const { return sign > 0 ? edges[3] : edges[1]; }
    int out_over() const { return sign > 0 ? edges[1] : edges[3]; }

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented planar diagram of a knot or link. Edge ids are dense in
/// [0, edge_count); an id with no crossing incidence is a crossingless
/// component. Construction validates, so every Diagram value is valid.
class Diagram {
public:
    Diagram(std::vector<Crossing> crossings, int edge_count, std::vector<int> labels = {})
        : crossings_(std::move(crossings)), edge_count_(edge_count), labels_(std::move(labels)) {
        if (labels_.empty())
            for (int e = 0; e < edge_count_; ++e) labels_.push_back(e + 1);
        build();
    }

    static Diagram from_pd(const PdCode& pd) {
        detail::check_pd(pd);
        std::vector<int> labels;
        for (const auto& x : pd.crossings) labels.insert(labels.end(), x.begin(), x.end());
        labels.insert(labels.end(), pd.loops.begin(), pd.loops.end());
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        auto id = [&](int label) {
            return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
        };
        const auto orientation = detail::derive_orientation(pd);
        std::vector<Crossing> xs;
        for (std::size_t k = 0; k < pd.crossings.size(); ++k) {
            Crossing c;
            for (int p = 0; p < 4; ++p) c.edges[p] = id(pd.crossings[k][p]);
            c.sign = orientation.over_d_to_b[k] ? 1 : -1;
            xs.push_back(c);
        }
        const int edge_count = static_cast<int>(labels.size());
        return Diagram(std::move(xs), edge_count, std::move(labels));
    }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int edge_count() const { return edge_count_; }
    int label(int edge) const { return labels_[edge]; }
    const std::vector<int>& labels() const { return labels_; }

    int successor(int edge) const { return successor_[edge]; }
    bool is_free_loop(int edge) const { return incidences_[edge] == 0; }

    int n_plus() const { return n_plus_; }
    int n_minus() const { return n_minus_; }
    int writhe() const { return n_plus_ - n_minus_; }

    /// Link components r.
    int component_count() const { return components_; }
    /// Connected pieces of the projection; free loops count as pieces.
    int piece_count() const { return pieces_; }
    bool is_connected() const { return pieces_ == 1; }
    bool is_knot() const { return components_ == 1; }

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.crossings_ == b.crossings_ && a.edge_count_ == b.edge_count_;
    }

private:
    void fail(const std::string& what) const { throw ValidationError(what); }
    std::string edge_name(int e) const { return "edge " + std::to_string(labels_[e]); }

    void build() {
        if (edge_count_ < 1) fail("diagram has no edges");
        if (static_cast<int>(labels_.size()) != edge_count_) fail("label table size mismatch");
        const int n = crossing_count();

        incidences_.assign(edge_count_, 0);
        std::vector<int> heads(edge_count_, 0), tails(edge_count_, 0);
        std::vector<std::array<int, 2>> slot_of(edge_count_, {-1, -1});
        for (int k = 0; k < n; ++k) {
            const Crossing& c = crossings_[k];
            if (c.sign != 1 && c.sign != -1) fail("crossing " + std::to_string(k) + " has sign other than +-1");
            for (int p = 0; p < 4; ++p) {
                const int e = c.edges[p];
                if (e < 0 || e >= edge_count_) fail("crossing " + std::to_string(k) + " references unknown edge id");
                if (incidences_[e] >= 2)
                    fail(edge_name(e) + " is used more than twice (crossing " + std::to_string(k) + ")");
                slot_of[e][incidences_[e]++] = 4 * k + p;
            }
            ++heads[c.in_under()];
            ++heads[c.in_over()];
            ++tails[c.out_under()];
            ++tails[c.out_over()];
        }
        for (int e = 0; e < edge_count_; ++e) {
            if (incidences_[e] == 1) fail(edge_name(e) + " has a single crossing incidence");
            if (incidences_[e] == 2 && (heads[e] != 1 || tails[e] != 1))
                fail(edge_name(e) + " is not oriented coherently (" + std::to_string(heads[e]) + " heads, " +
                     std::to_string(tails[e]) + " tails)");
        }

        successor_.resize(edge_count_);
        for (int e = 0; e < edge_count_; ++e) successor_[e] = e;
        n_plus_ = n_minus_ = 0;
        for (const Crossing& c : crossings_) {
            successor_[c.in_under()] = c.out_under();
            successor_[c.in_over()] = c.out_over();
            (c.sign > 0 ? n_plus_ : n_minus_)++;
        }

        std::vector<bool> seen(edge_count_, false);
        components_ = 0;
        for (int e = 0; e < edge_count_; ++e) {
            if (seen[e]) continue;
            ++components_;
            for (int f = e; !seen[f]; f = successor_[f]) seen[f] = true;
        }

        UnionFind pieces(edge_count_);
        for (const Crossing& c : crossings_)
            for (int p = 1; p < 4; ++p) pieces.unite(c.edges[0], c.edges[p]);
        pieces_ = pieces.set_count();

        // Faces of each piece: orbits of "cross the edge, then turn to the
        // next slot counterclockwise". A piece with m crossings is planar
        // iff it has m + 2 faces.
        std::vector<int> other(4 * n);
        for (int e = 0; e < edge_count_; ++e)
            if (incidences_[e] == 2) {
                other[slot_of[e][0]] = slot_of[e][1];
                other[slot_of[e][1]] = slot_of[e][0];
            }
        std::map<int, int> faces, crossings_in_piece;
        std::vector<bool> visited(4 * n, false);
        for (int s = 0; s < 4 * n; ++s) {
            if (visited[s]) continue;
            ++faces[pieces.find(crossings_[s / 4].edges[0])];
            for (int t = s; !visited[t];) {
                visited[t] = true;
                const int u = other[t];
                t = 4 * (u / 4) + (u % 4 + 1) % 4;
            }
        }
        for (const Crossing& c : crossings_) ++crossings_in_piece[pieces.find(c.edges[0])];
        for (auto [root, m] : crossings_in_piece)
            if (faces[root] != m + 2)
                fail("diagram is not planar: a piece with " + std::to_string(m) + " crossings has " +
                     std::to_string(faces[root]) + " faces");
    }

    std::vector<Crossing> crossings_;
    int edge_count_ = 0;
    std::vector<int> labels_;
    std::vector<int> successor_;
    std::vector<int> incidences_;
    int n_plus_ = 0, n_minus_ = 0;
    int components_ = 0;
    int pieces_ = 0;
};

/// Re-runs every invariant check; throws ValidationError on failure.
inline void validate(const Diagram& d) { Diagram(d.crossings(), d.edge_count(), d.labels()); }

inline Diagram mirror(const Diagram& d) {
    std::vector<Crossing> xs;
    xs.reserve(d.crossings().size());
    for (const Crossing& c : d.crossings()) {
        const auto& e = c.edges;
        // The old over-strand becomes the under-strand; restart the tuple at it.
        if (c.sign > 0) xs.push_back({{e[3], e[0], e[1], e[2]}, -1});
        else xs.push_back({{e[1], e[2], e[3], e[0]}, 1});
    }
    return Diagram(std::move(xs), d.edge_count(), d.labels());
}

inline PdCode to_pd(const Diagram& d) {
    PdCode pd;
    for (const Crossing& c : d.crossings())
        pd.crossings.push_back({d.label(c.edges[0]), d.label(c.edges[1]), d.label(c.edges[2]), d.label(c.edges[3])});
    for (int e = 0; e < d.edge_count(); ++e)
        if (d.is_free_loop(e)) pd.loops.push_back(d.label(e));
    return pd;
}

inline Diagram diagram_from_pd_text(std::string_view text) { return Diagram::from_pd(parse_pd(text)); }

/// Standard closure of a braid drawn bottom to top. Edge ids are assigned
/// by walking each component, so the resulting PD code follows the
/// consecutive-label convention.
inline Diagram braid_closure(const BraidWord& w) {
    validate(w);
    const int strands = w.strands;
    int next_id = 0;
    std::vector<int> bottom(strands), cur(strands);
    for (int p = 0; p < strands; ++p) bottom[p] = cur[p] = next_id++;

    std::vector<Crossing> raw;
    for (int letter : w.letters) {
        const int left = std::abs(letter) - 1, right = left + 1;
        const int out_left = next_id++, out_right = next_id++;
        if (letter > 0) raw.push_back({{cur[right], out_right, out_left, cur[left]}, 1});
        else raw.push_back({{cur[left], cur[right], out_right, out_left}, -1});
        cur[left] = out_left;
        cur[right] = out_right;
    }

    UnionFind same(next_id);
    for (int p = 0; p < strands; ++p) same.unite(bottom[p], cur[p]);
    std::vector<int> cls = same.labels();
    const int edges = same.set_count();
    for (Crossing& c : raw)
        for (int& e : c.edges) e = cls[e];

    std::vector<int> succ(edges, -1);
    for (const Crossing& c : raw) {
        succ[c.in_under()] = c.out_under();
        succ[c.in_over()] = c.out_over();
    }
    std::vector<int> renumber(edges, -1);
    int fresh = 0;
    for (int e = 0; e < edges; ++e) {
        if (renumber[e] >= 0) continue;
        if (succ[e] < 0) {
            renumber[e] = fresh++;
            continue;
        }
        for (int f = e; renumber[f] < 0; f = succ[f]) renumber[f] = fresh++;
    }
    for (Crossing& c : raw)
        for (int& e : c.edges) e = renumber[e];
    return Diagram(std::move(raw), edges);
}

inline bool is_positive(const Diagram& d) { return d.n_minus() == 0; }
inline bool is_negative(const Diagram& d) { return d.n_plus() == 0; }

/// Every edge ends at an under-crossing slot at exactly one of its two
/// incidences. Nugatory crossings are taken literally.
inline bool is_alternating(const Diagram& d) {
    std::vector<int> under_ends(d.edge_count(), 0);
    for (const Crossing& c : d.crossings()) {
        ++under_ends[c.edges[0]];
        ++under_ends[c.edges[2]];
    }
    for (int e = 0; e < d.edge_count(); ++e)
        if (!d.is_free_loop(e) && under_ends[e] != 1) return false;
    return true;
}

/// Each generator index appears with a single sign throughout the word.
inline bool braid_sign_condition(const BraidWord& w) {
    std::map<int, int> sign_of;
    for (int l : w.letters) {
        const int s = l > 0 ? 1 : -1;
        auto [it, inserted] = sign_of.emplace(std::abs(l), s);
        if (!inserted && it->second != s) return false;
    }
    return true;
}

}  // namespace slicebound
