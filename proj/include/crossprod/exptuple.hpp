#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace crossprod {

/// Tuple of nonnegative integer exponents. Doubles as a monomial exponent,
/// an element type, and a filtration index.
using ExpTuple = std::vector<int>;

enum class Ordering { Less, Equal, Greater };

/// Term-order rule on equal-length tuples.
///   Deglex: total degree first, then leftmost difference (larger entry wins).
///   PaperLiteral: index of the last nonzero entry first (zero-trimmed length),
///   then leftmost difference.
enum class OrderRule { Deglex, PaperLiteral };

inline int tuple_degree(const ExpTuple& a) {
    int s = 0;
    for (int e : a) s += e;
    return s;
}

inline ExpTuple tuple_add(const ExpTuple& a, const ExpTuple& b) {
    if (a.size() != b.size()) throw std::invalid_argument("ExpTuple: length mismatch");
    ExpTuple r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline int trimmed_length(const ExpTuple& a) {
    int r = static_cast<int>(a.size());
    while (r > 0 && a[static_cast<size_t>(r) - 1] == 0) --r;
    return r;
}

inline Ordering lex_compare(const ExpTuple& a, const ExpTuple& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

inline Ordering compare(const ExpTuple& a, const ExpTuple& b, OrderRule rule = OrderRule::Deglex) {
    if (a.size() != b.size()) throw std::invalid_argument("ExpTuple: length mismatch");
    if (rule == OrderRule::Deglex) {
        int da = tuple_degree(a), db = tuple_degree(b);
        if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
        return lex_compare(a, b);
    }
    int ra = trimmed_length(a), rb = trimmed_length(b);
    if (ra != rb) return ra < rb ? Ordering::Less : Ordering::Greater;
    return lex_compare(a, b);
}

/// Strict-less comparator for canonical map storage (always deglex; the active
/// OrderRule only affects type extraction and printing order).
struct DeglexLess {
    bool operator()(const ExpTuple& a, const ExpTuple& b) const {
        return compare(a, b, OrderRule::Deglex) == Ordering::Less;
    }
};

inline std::string tuple_str(const ExpTuple& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    s += ")";
    return s;
}

}  // namespace crossprod
