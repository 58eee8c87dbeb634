#pragma once

// Text notations for diagrams: planar diagram (PD) codes and braid words.
//
// PD convention: X[a,b,c,d] lists the four edge labels at a crossing
// counterclockwise, starting from the incoming under-strand a (so the
// under-strand runs a -> c). Labels along a component are consecutive
// integers that wrap from the component's largest label to its smallest.
// Loop[k] is a crossingless component carrying the single label k.
//
// Braid convention: "n: [l1, l2, ...]" is a word on n strands; letter k
// stands for sigma_|k| raised to sign(k).

#include <array>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace slicebound {

struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

struct PdCode {
    std::vector<std::array<int, 4>> crossings;
    std::vector<int> loops;

    friend bool operator==(const PdCode&, const PdCode&) = default;
};

namespace detail {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    // Whitespace and commas are interchangeable separators.
    void skip_sep() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ',' || std::isspace(static_cast<unsigned char>(text_[pos_]))))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    bool accept(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view token) {
        if (!accept(token)) fail("expected '" + std::string(token) + "'");
    }

    long long integer() {
        std::size_t start = pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected integer");
        }
        if (pos_ - digits > 9) fail("integer out of range");
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << what << " at offset " << pos_;
        if (!at_end()) os << " near '" << text_.substr(pos_, 12) << "'";
        throw ParseError(os.str());
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

struct Orientation {
    // true when the over-strand runs d -> b (positive crossing).
    std::vector<bool> over_d_to_b;
};

// Recovers the over-strand direction of every crossing. Under-strands fix
// the direction of their edges; directions propagate along edges, and any
// component that is never an under-strand falls back to the consecutive
// label rule.
inline Orientation derive_orientation(const PdCode& pd) {
    const int n = static_cast<int>(pd.crossings.size());
    std::map<int, std::vector<std::pair<int, int>>> slots;
    for (int k = 0; k < n; ++k)
        for (int p = 0; p < 4; ++p) slots[pd.crossings[k][p]].push_back({k, p});

    enum : signed char { unknown = 0, in = 1, out = -1 };
    std::vector<std::array<signed char, 4>> dir(n, {unknown, unknown, unknown, unknown});
    std::vector<std::pair<int, int>> stack;

    auto assign = [&](int k, int p, signed char d) {
        if (dir[k][p] == unknown) {
            dir[k][p] = d;
            stack.push_back({k, p});
        } else if (dir[k][p] != d) {
            throw ValidationError("incoherent orientation at edge " + std::to_string(pd.crossings[k][p]) +
                                  " (crossing " + std::to_string(k) + ")");
        }
    };
    auto propagate = [&] {
        while (!stack.empty()) {
            auto [k, p] = stack.back();
            stack.pop_back();
            const signed char d = dir[k][p];
            for (auto [k2, p2] : slots[pd.crossings[k][p]])
                if (k2 != k || p2 != p) assign(k2, p2, static_cast<signed char>(-d));
            if (p == 1 || p == 3) assign(k, 4 - p, static_cast<signed char>(-d));
        }
    };

    for (int k = 0; k < n; ++k) {
        assign(k, 0, in);
        assign(k, 2, out);
    }
    propagate();
    for (int k = 0; k < n; ++k) {
        if (dir[k][1] != unknown) continue;
        const int b = pd.crossings[k][1];
        const int d = pd.crossings[k][3];
        bool b_in;
        if (d == b + 1) b_in = true;
        else if (b == d + 1) b_in = false;
        else b_in = b > d;  // wrap from the component's largest label
        assign(k, 1, b_in ? in : out);
        propagate();
    }

    Orientation o;
    o.over_d_to_b.resize(n);
    for (int k = 0; k < n; ++k) o.over_d_to_b[k] = dir[k][3] == in;
    return o;
}

// Label counts and the consecutive-label rule along every component.
inline void check_pd(const PdCode& pd) {
    if (pd.crossings.empty() && pd.loops.empty()) throw ValidationError("empty diagram");
    std::map<int, int> count;
    for (const auto& x : pd.crossings)
        for (int label : x) {
            if (label <= 0) throw ValidationError("edge label " + std::to_string(label) + " is not positive");
            ++count[label];
        }
    for (auto [label, c] : count)
        if (c != 2)
            throw ValidationError("edge " + std::to_string(label) + " occurs " + std::to_string(c) +
                                  " times (expected 2)");
    for (int label : pd.loops) {
        if (label <= 0) throw ValidationError("loop label " + std::to_string(label) + " is not positive");
        if (count.count(label))
            throw ValidationError("loop label " + std::to_string(label) + " also used by a crossing");
        count[label] = 1;
    }
    if (count.size() != pd.crossings.size() * 2 + pd.loops.size())
        throw ValidationError("duplicate loop label");

    const Orientation o = derive_orientation(pd);
    std::map<int, int> successor;
    for (std::size_t k = 0; k < pd.crossings.size(); ++k) {
        const auto& x = pd.crossings[k];
        successor[x[0]] = x[2];
        if (o.over_d_to_b[k]) successor[x[3]] = x[1];
        else successor[x[1]] = x[3];
    }
    if (successor.size() != pd.crossings.size() * 2)
        throw ValidationError("incoherent orientation: some edge has two heads");

    std::map<int, bool> seen;
    for (auto [start, unused] : successor) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        for (int e = start; !seen[e]; e = successor.at(e)) {
            seen[e] = true;
            cycle.push_back(e);
        }
        int lo = cycle[0], hi = cycle[0];
        for (int e : cycle) {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
        for (int e : cycle) {
            const int next = successor.at(e);
            if (!(next == e + 1 || (e == hi && next == lo)))
                throw ValidationError("labels along a component are not consecutive: edge " + std::to_string(e) +
                                      " is followed by " + std::to_string(next));
        }
    }
}

}  // namespace detail

inline PdCode parse_pd(std::string_view text) {
    detail::Cursor cur(text);
    cur.skip_ws();
    if (cur.at_end()) cur.fail("empty PD code");

    PdCode pd;
    bool wrapped = cur.accept("PD");
    if (wrapped) {
        cur.skip_ws();
        cur.expect("[");
    }
    cur.skip_sep();
    while (!cur.at_end() && cur.peek() != ']') {
        if (cur.accept("X")) {
            cur.skip_ws();
            cur.expect("[");
            std::array<int, 4> x{};
            for (int i = 0; i < 4; ++i) {
                cur.skip_sep();
                x[i] = static_cast<int>(cur.integer());
            }
            cur.skip_sep();
            cur.expect("]");
            pd.crossings.push_back(x);
        } else if (cur.accept("Loop")) {
            cur.skip_ws();
            cur.expect("[");
            cur.skip_ws();
            pd.loops.push_back(static_cast<int>(cur.integer()));
            cur.skip_ws();
            cur.expect("]");
        } else {
            cur.fail("expected X[...] or Loop[...]");
        }
        cur.skip_sep();
    }
    if (wrapped) cur.expect("]");
    cur.skip_ws();
    if (!cur.at_end()) cur.fail("trailing characters");
    if (!wrapped && pd.crossings.empty() && pd.loops.empty()) cur.fail("no crossings");

    detail::check_pd(pd);
    return pd;
}

inline std::string to_string(const PdCode& pd) {
    std::ostringstream os;
    os << "PD[";
    bool first = true;
    for (const auto& x : pd.crossings) {
        if (!first) os << ", ";
        first = false;
        os << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ']';
    }
    for (int l : pd.loops) {
        if (!first) os << ", ";
        first = false;
        os << "Loop[" << l << ']';
    }
    os << ']';
    return os.str();
}

inline void validate(const BraidWord& w) {
    if (w.strands < 1) throw ValidationError("braid needs at least one strand");
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        const int l = w.letters[i];
        if (l == 0) throw ValidationError("letter 0 is invalid (position " + std::to_string(i) + ")");
        if (std::abs(l) >= w.strands)
            throw ValidationError("letter " + std::to_string(l) + " needs more than " + std::to_string(w.strands) +
                                  " strands");
    }
}

inline BraidWord parse_braid(std::string_view text) {
    detail::Cursor cur(text);
    cur.skip_ws();
    if (cur.at_end()) cur.fail("empty braid word");
    BraidWord w;
    const long long strands = cur.integer();
    if (strands < 1 || strands > 64) throw ValidationError("strand count must be in [1, 64]");
    w.strands = static_cast<int>(strands);
    cur.skip_ws();
    cur.expect(":");
    cur.skip_ws();
    cur.expect("[");
    cur.skip_ws();
    // Letters are separated by one comma or by whitespace; empty items are errors.
    while (!cur.accept("]")) {
        if (cur.at_end()) cur.fail("unterminated letter list");
        w.letters.push_back(static_cast<int>(cur.integer()));
        cur.skip_ws();
        if (cur.accept(",")) {
            cur.skip_ws();
            if (cur.peek() == ']' || cur.peek() == ',') cur.fail("empty letter");
        }
    }
    cur.skip_ws();
    if (!cur.at_end()) cur.fail("trailing characters");
    validate(w);
    return w;
}

inline std::string to_string(const BraidWord& w) {
    std::ostringstream os;
    os << w.strands << ": [";
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << ',';
        os << w.letters[i];
    }
    os << ']';
    return os.str();
}

/// Uniform random braid word. The generator is std::mt19937_64 (fully
/// specified by the C++ standard) seeded with `seed`; letters are drawn by
/// rejection sampling on raw 64-bit outputs, so the word is reproducible
/// across platforms and standard libraries.
inline BraidWord random_braid(int strands, int length, std::uint64_t seed) {
    if (strands < 2) throw ValidationError("random_braid needs at least 2 strands");
    if (length < 0) throw ValidationError("random_braid length must be nonnegative");
    std::mt19937_64 rng(seed);
    const std::uint64_t choices = 2 * static_cast<std::uint64_t>(strands - 1);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % choices;
    BraidWord w{strands, {}};
    w.letters.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
        std::uint64_t r;
        do r = rng();
        while (r >= limit);
        r %= choices;
        const int generator = static_cast<int>(r / 2) + 1;
        w.letters.push_back(r % 2 ? -generator : generator);
    }
    return w;
}

}  // namespace slicebound
