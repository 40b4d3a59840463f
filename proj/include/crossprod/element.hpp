#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crossprod/presentation.hpp"

namespace crossprod {

/// An element of B in PBW normal form: left coefficients from A against the
/// sorted monomials g1^j1...gn^jn. No zero coefficients stored.
struct CrossedElement {
    int nvars = 0;
    int ngens = 0;
    std::map<ExpTuple, CommPoly, DeglexLess> terms;  // gen exponents -> coefficient

    static CrossedElement zero(const AlgebraPresentation& pres);
    static CrossedElement one(const AlgebraPresentation& pres);
    static CrossedElement from_coeff(const AlgebraPresentation& pres, const CommPoly& c);
    static CrossedElement generator(const AlgebraPresentation& pres, int i);  // 0-based

    bool is_zero() const { return terms.empty(); }
    bool is_one() const;
    void add_term(const ExpTuple& gexp, const CommPoly& c);
};

bool operator==(const CrossedElement& a, const CrossedElement& b);
inline bool operator!=(const CrossedElement& a, const CrossedElement& b) { return !(a == b); }

CrossedElement ce_add(const CrossedElement& a, const CrossedElement& b);
CrossedElement ce_sub(const CrossedElement& a, const CrossedElement& b);
CrossedElement ce_neg(const CrossedElement& a);
/// Left multiplication by a coefficient from A.
CrossedElement ce_scale(const AlgebraPresentation& pres, const CommPoly& c,
                        const CrossedElement& e);

/// Left multiplication by a single generator; the rewriting core.
CrossedElement gen_times(const AlgebraPresentation& pres, int i, const CrossedElement& e);

/// Product in B. Normal-form output; exact.
CrossedElement multiply(const AlgebraPresentation& pres, const CrossedElement& a,
                        const CrossedElement& b);

CrossedElement ce_pow(const AlgebraPresentation& pres, const CrossedElement& a, int k);

/// A word: alternating coefficients and generator symbols, in any order.
using WordAtom = std::variant<CommPoly, int>;  // int = generator index, 0-based
using Word = std::vector<WordAtom>;

/// Normal form of a word, by left-to-right accumulation through the engine.
CrossedElement normal_form(const Word& word, const AlgebraPresentation& pres);

/// Type of a nonzero element: the exponent tuple of its order-maximal monomial.
ExpTuple type_of(const CrossedElement& e, OrderRule rule = OrderRule::Deglex);

/// Coefficient degree plus generator exponent sum, maximized over terms;
/// nullopt is the bottom marker for zero.
std::optional<int> total_degree(const CrossedElement& e);

/// Componentwise maximum of the (g2..gn)-exponents; length n-1.
ExpTuple filtration_index(const CrossedElement& e);

/// A PBW basis label: reduced base monomial times generator monomial.
struct PbwLabel {
    ExpTuple base;
    ExpTuple gens;
    int degree() const { return tuple_degree(base) + tuple_degree(gens); }
};

/// All labels of total degree <= bound, canonically ordered (degree, then
/// graded-lex on the concatenated tuple).
std::vector<PbwLabel> pbw_basis(const AlgebraPresentation& pres, int degree_bound);
long pbw_count(const AlgebraPresentation& pres, int degree_bound);

struct FreenessReport {
    bool pass = true;
    int degree_bound = 0;
    std::vector<long> lhs, rhs;  // per degree 0..bound
    std::string str() const;
};

/// Degree-by-degree dimension count of B against the module decomposition over
/// the Ore subalgebra on g1. Requires n >= 2.
FreenessReport check_A1_freeness(const AlgebraPresentation& pres, int degree_bound);

struct ConsistencyReport {
    bool pass = true;
    std::string witness;  // offending word, canonically printed
    std::string note;
    std::string str() const;
};

/// Exact Jacobi plus associativity on generator triples and seeded random
/// mixed words. Failure is a value carrying the witness.
ConsistencyReport consistency_check(const AlgebraPresentation& pres, long trials,
                                    std::uint64_t seed);

/// Canonical printing: PBW monomials by the active rule, descending; flattened
/// coefficient terms graded-lex descending. Bit-exact across runs.
std::string element_str(const CrossedElement& e, const AlgebraPresentation& pres,
                        OrderRule rule = OrderRule::Deglex);

}  // namespace crossprod
