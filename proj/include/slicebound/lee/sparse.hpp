#pragma once

// Exact sparse vectors over Z (standing in for Q: every operation here is a
// rank or membership question, which fraction-free elimination answers
// without denominators).
//
// Two scalar types share one implementation: `long long` with checked
// arithmetic (throws Overflow) and an arbitrary-precision integer. Callers
// run the fast type first and redo the computation exactly on overflow.

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace slicebound::lee {

using BigInteger = boost::multiprecision::cpp_int;

struct Overflow : std::overflow_error {
    Overflow() : std::overflow_error("64-bit elimination overflow") {}
};

template <class T>
struct ScalarOps;

template <>
struct ScalarOps<long long> {
    static long long mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow();
        return r;
    }
    static long long sub(long long a, long long b) {
        long long r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow();
        return r;
    }
    static long long neg(long long a) { return sub(0, a); }
    static long long gcd(long long a, long long b) { return std::gcd(a, b); }
    static bool is_zero(long long a) { return a == 0; }
    static bool negative(long long a) { return a < 0; }
};

template <>
struct ScalarOps<BigInteger> {
    static BigInteger mul(const BigInteger& a, const BigInteger& b) { return a * b; }
    static BigInteger sub(const BigInteger& a, const BigInteger& b) { return a - b; }
    static BigInteger neg(const BigInteger& a) { return -a; }
    static BigInteger gcd(const BigInteger& a, const BigInteger& b) { return boost::multiprecision::gcd(a, b); }
    static bool is_zero(const BigInteger& a) { return a.is_zero(); }
    static bool negative(const BigInteger& a) { return a.sign() < 0; }
};

template <class T>
struct Entry {
    int row;
    T value;
};

/// Sorted by row, no zero entries.
template <class T>
using SparseVector = std::vector<Entry<T>>;

/// a*x - b*y.
template <class T>
SparseVector<T> combine(const T& a, const SparseVector<T>& x, const T& b, const SparseVector<T>& y) {
    using Ops = ScalarOps<T>;
    SparseVector<T> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].row < y[j].row)) {
            out.push_back({x[i].row, Ops::mul(a, x[i].value)});
            ++i;
        } else if (i == x.size() || y[j].row < x[i].row) {
            out.push_back({y[j].row, Ops::neg(Ops::mul(b, y[j].value))});
            ++j;
        } else {
            T v = Ops::sub(Ops::mul(a, x[i].value), Ops::mul(b, y[j].value));
            if (!Ops::is_zero(v)) out.push_back({x[i].row, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

/// Divides out the content and makes the leading entry positive.
template <class T>
void normalize(SparseVector<T>& v) {
    using Ops = ScalarOps<T>;
    if (v.empty()) return;
    T g = Ops::gcd(v.front().value, v.front().value);
    for (std::size_t i = 1; i < v.size() && g != 1; ++i) g = Ops::gcd(g, v[i].value);
    if (Ops::negative(v.front().value)) g = Ops::neg(g);
    if (g != 1)
        for (auto& e : v) e.value /= g;
}

/// Column echelon basis keyed by leading (smallest) row. Inserting vectors
/// in a chosen order and counting successes gives the rank of every prefix;
/// the set of leading rows gives the rank of every leading block of rows.
template <class T>
class EchelonBasis {
public:
    explicit EchelonBasis(int rows) : by_lead_(static_cast<std::size_t>(rows)) {}

    /// Eliminates leading entries against the basis until the lead is free
    /// (or the vector vanishes).
    SparseVector<T> reduce(SparseVector<T> v) const {
        using Ops = ScalarOps<T>;
        normalize(v);
        while (!v.empty()) {
            const auto& pivot = by_lead_[v.front().row];
            if (!pivot) break;
            T a = pivot->front().value;
            T b = v.front().value;
            const T g = Ops::gcd(a, b);
            a /= g;
            b /= g;
            v = combine(a, v, b, *pivot);
            normalize(v);
        }
        return v;
    }

    /// True when v is independent of everything inserted so far.
    bool insert(SparseVector<T> v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        const int lead = v.front().row;
        by_lead_[lead] = std::move(v);
        pivots_.push_back(lead);
        return true;
    }

    const std::vector<int>& pivots() const { return pivots_; }
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    std::vector<std::optional<SparseVector<T>>> by_lead_;
    std::vector<int> pivots_;
};

}  // namespace slicebound::lee
