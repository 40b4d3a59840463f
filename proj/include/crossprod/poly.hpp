#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crossprod/exptuple.hpp"
#include "crossprod/rational.hpp"

namespace crossprod {

/// Multivariate polynomial over the rationals. No zero coefficients stored;
/// term map ordered graded-lex for deterministic iteration.
struct CommPoly {
    int nvars = 0;
    std::map<ExpTuple, Rational, DeglexLess> terms;

    static CommPoly zero(int nvars) { return CommPoly{nvars, {}}; }
    static CommPoly constant(int nvars, const Rational& c);
    static CommPoly monomial(ExpTuple exp, const Rational& c);
    static CommPoly variable(int nvars, int var_index);  // 0-based

    bool is_zero() const { return terms.empty(); }
    bool is_one() const;
    bool is_constant() const;

    /// Max exponent sum over terms; nullopt is the bottom marker for zero.
    std::optional<int> degree() const;

    /// Degree in a single variable; nullopt for zero.
    std::optional<int> degree_in(int var_index) const;

    void add_term(const ExpTuple& exp, const Rational& c);
};

bool operator==(const CommPoly& a, const CommPoly& b);
inline bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

CommPoly add(const CommPoly& a, const CommPoly& b);
CommPoly sub(const CommPoly& a, const CommPoly& b);
CommPoly neg(const CommPoly& a);
CommPoly scale(const CommPoly& a, const Rational& c);

/// Rewrites every occurrence of (eliminated variable)^leading_exponent by the
/// lower-order part of a monic relation. Terminates; idempotent on its output.
struct QuotientPresentation {
    CommPoly relation;
    int eliminated_variable = 0;  // 0-based
    int leading_exponent = 0;

    /// Throws unless the relation is monic of the stated degree in the
    /// eliminated variable (constant leading coefficient 1).
    void validate() const;
};

CommPoly reduce(const CommPoly& p, const QuotientPresentation& q);
CommPoly mul(const CommPoly& a, const CommPoly& b, const QuotientPresentation* q = nullptr);

/// A derivation of the base domain, given by generator images and extended by
/// Leibniz. images[i] is the image of variable i.
struct DerivationSpec {
    std::vector<CommPoly> images;

    static DerivationSpec zero(int nvars);
    bool is_zero() const;
};

CommPoly apply_derivation(const DerivationSpec& d, const CommPoly& p,
                          const QuotientPresentation* q = nullptr);

/// Base domain A: Q[x1..xm], optionally modulo a single monic relation.
struct BaseDomain {
    std::vector<std::string> var_names;
    std::optional<QuotientPresentation> quotient;

    int num_vars() const { return static_cast<int>(var_names.size()); }
    const QuotientPresentation* quot() const { return quotient ? &*quotient : nullptr; }
};

bool operator==(const BaseDomain& a, const BaseDomain& b);

/// Canonical text form: graded-lex descending, reduced fractions, `*` products,
/// `^` powers. Bit-exact across runs.
std::string poly_str(const CommPoly& p, const std::vector<std::string>& var_names);

}  // namespace crossprod
