#pragma once

// Diagram bounds on the Rasmussen invariant s and the slice genus.
//
//   U(D)     = #circles - 2 #components(T-) + w(D) + 1
//   Delta(D) = #circles - #components(T-) - #components(T+) + 1
//
// For a knot diagram U - 2 Delta <= s <= U, and s = U whenever Delta = 0.

#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>

#include "diagram.hpp"
#include "error.hpp"
#include "notation.hpp"
#include "seifert.hpp"

namespace slicebound {

/// Exact element of (1/2)Z, stored as twice its value.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    static constexpr HalfInteger from_twice(long long twice) {
        HalfInteger h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInteger from_integer(long long n) { return from_twice(2 * n); }

    constexpr long long twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    double to_double() const { return static_cast<double>(twice_) / 2.0; }

    /// "3", "-1/2", "7/2".
    std::string to_string() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    /// Accepts "n", "n/2" and any p/q that reduces to a half-integer.
    static HalfInteger parse(const std::string& text) {
        const auto slash = text.find('/');
        try {
            std::size_t used = 0;
            if (slash == std::string::npos) {
                const long long n = std::stoll(text, &used);
                if (used != text.size()) throw ParseError("bad rational '" + text + "'");
                return from_integer(n);
            }
            const long long p = std::stoll(text.substr(0, slash), &used);
            if (used != slash) throw ParseError("bad rational '" + text + "'");
            const std::string den = text.substr(slash + 1);
            const long long q = std::stoll(den, &used);
            if (used != den.size() || q == 0) throw ParseError("bad rational '" + text + "'");
            if ((2 * p) % q != 0) throw ParseError("'" + text + "' is not a half-integer");
            return from_twice(2 * p / q);
        } catch (const std::logic_error&) {
            throw ParseError("bad rational '" + text + "'");
        }
    }

    friend constexpr auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
    friend std::ostream& operator<<(std::ostream& os, const HalfInteger& h) { return os << h.to_string(); }

private:
    long long twice_ = 0;
};

/// The counts every bound is built from.
struct SeifertCounts {
    int circles = 0;
    int minus_components = 0;
    int plus_components = 0;
    int writhe = 0;
    int link_components = 1;
    bool connected = true;
};

inline SeifertCounts seifert_counts(const Diagram& d) {
    const SeifertGraph g = seifert_graph(d);
    return {g.node_count, component_count(g, -1), component_count(g, 1), d.writhe(), d.component_count(),
            d.is_connected()};
}

inline int bound_U(const SeifertCounts& c) { return c.circles - 2 * c.minus_components + c.writhe + 1; }
inline int bound_Delta(const SeifertCounts& c) {
    return c.circles - c.minus_components - c.plus_components + 1;
}
inline int bound_U(const Diagram& d) { return bound_U(seifert_counts(d)); }
inline int bound_Delta(const Diagram& d) { return bound_Delta(seifert_counts(d)); }

struct SWindow {
    int lower = 0;
    int upper = 0;
    std::optional<int> exact;

    friend bool operator==(const SWindow&, const SWindow&) = default;
};

namespace detail {

inline void require_connected_knot(const Diagram& d, const char* op) {
    if (!d.is_knot())
        throw DomainError(std::string(op) + " needs a knot diagram; this diagram has " +
                          std::to_string(d.component_count()) + " components");
    if (!d.is_connected()) throw DomainError(std::string(op) + " needs a connected diagram");
}

inline void require_connected(const Diagram& d, const char* op) {
    if (!d.is_connected()) throw DomainError(std::string(op) + " needs a connected diagram");
}

// A tightness predicate held but Delta != 0.
[[noreturn]] inline void tightness_violation(const char* predicate, int delta) {
    throw ConsistencyError(std::string(predicate) + " diagram has Delta = " + std::to_string(delta) +
                           "; tightness requires Delta = 0");
}

inline void check_tightness(const Diagram& d, int delta, std::optional<bool> braid_condition) {
    if (delta == 0 || !d.is_connected()) return;
    if (is_positive(d)) tightness_violation("positive", delta);
    if (is_negative(d)) tightness_violation("negative", delta);
    if (is_alternating(d)) tightness_violation("alternating", delta);
    if (braid_condition.value_or(false)) tightness_violation("sign-coherent braid closure", delta);
}

inline SWindow s_window(const Diagram& d, std::optional<bool> braid_condition) {
    require_connected_knot(d, "s_window");
    const SeifertCounts c = seifert_counts(d);
    const int u = bound_U(c), delta = bound_Delta(c);
    check_tightness(d, delta, braid_condition);
    SWindow w{u - 2 * delta, u, std::nullopt};
    if (delta == 0) w.exact = u;
    return w;
}

}  // namespace detail

inline SWindow s_window(const Diagram& d) { return detail::s_window(d, std::nullopt); }
inline SWindow s_window(const BraidWord& w) { return detail::s_window(braid_closure(w), braid_sign_condition(w)); }

/// Lower bound on g* from U - 2 Delta: (w - #circles + 2 #components(T+) - 1) / 2.
inline HalfInteger genus_bound_knot(const Diagram& d) {
    detail::require_connected_knot(d, "genus_bound_knot");
    const SeifertCounts c = seifert_counts(d);
    return HalfInteger::from_twice(c.writhe - c.circles + 2 * c.plus_components - 1);
}

/// Link version, with g*(L) = G(L) + 1/2 - r/2:
/// (w - #circles + 2 #components(T+) - 2r + 1) / 2.
inline HalfInteger genus_bound_link(const Diagram& d) {
    detail::require_connected(d, "genus_bound_link");
    const SeifertCounts c = seifert_counts(d);
    return HalfInteger::from_twice(c.writhe - c.circles + 2 * c.plus_components - 2 * c.link_components + 1);
}

/// Slice-Bennequin baseline (w - #circles + 1) / 2.
inline HalfInteger classic_bennequin(const Diagram& d) {
    detail::require_connected_knot(d, "classic_bennequin");
    return HalfInteger::from_twice(d.writhe() - seifert_counts(d).circles + 1);
}

struct ReportFlags {
    bool positive = false;
    bool negative = false;
    bool alternating = false;
    std::optional<bool> braid_sign_condition;  // only for braid input
    bool connected = false;
    bool is_knot = false;
};

/// Everything known about one diagram. For knots s_lower/s_upper bracket s.
/// For links s_upper = U still bounds s(L), s_lower is the link bound
/// U - 2 Delta + 2 - 2r, and s_exact is never set. Split diagrams get no
/// s window or genus bounds; U and Delta are reported literally.
struct BoundsReport {
    int U = 0;
    int Delta = 0;
    std::optional<int> s_lower;
    std::optional<int> s_upper;
    std::optional<int> s_exact;
    std::optional<HalfInteger> genus_bound_new;
    std::optional<HalfInteger> genus_bound_classic;
    ReportFlags flags;

    int crossings = 0;
    int writhe = 0;
    int components = 1;
    int seifert_circles = 0;
    int minus_components = 0;
    int plus_components = 0;
    /// U(D) + U(mirror D); equals 2 Delta.
    int mirror_U_sum = 0;
};

namespace detail {

inline BoundsReport bounds_report(const Diagram& d, std::optional<bool> braid_condition) {
    const SeifertCounts c = seifert_counts(d);
    BoundsReport r;
    r.U = bound_U(c);
    r.Delta = bound_Delta(c);
    r.flags = {is_positive(d), is_negative(d), is_alternating(d), braid_condition, d.is_connected(), d.is_knot()};
    r.crossings = d.crossing_count();
    r.writhe = d.writhe();
    r.components = d.component_count();
    r.seifert_circles = c.circles;
    r.minus_components = c.minus_components;
    r.plus_components = c.plus_components;
    r.mirror_U_sum = r.U + bound_U(mirror(d));

    if (!d.is_connected()) return r;
    check_tightness(d, r.Delta, braid_condition);
    if (d.is_knot()) {
        const SWindow w = s_window(d, braid_condition);
        r.s_lower = w.lower;
        r.s_upper = w.upper;
        r.s_exact = w.exact;
        r.genus_bound_new = genus_bound_knot(d);
        r.genus_bound_classic = classic_bennequin(d);
    } else {
        r.s_upper = r.U;
        r.s_lower = r.U - 2 * r.Delta + 2 - 2 * c.link_components;
        r.genus_bound_new = genus_bound_link(d);
    }
    return r;
}

}  // namespace detail

inline BoundsReport bounds_report(const Diagram& d) { return detail::bounds_report(d, std::nullopt); }
inline BoundsReport bounds_report(const BraidWord& w) {
    return detail::bounds_report(braid_closure(w), braid_sign_condition(w));
}

}  // namespace slicebound
