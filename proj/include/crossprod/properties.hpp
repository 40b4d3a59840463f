#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crossprod/linalg.hpp"

namespace crossprod {

/// Seeded element sampler, fixed across the project so corpora are comparable:
/// coefficients k/q with k in {-3..3}\{0} and q in {1,2,3}; per-variable
/// exponents geometric with mean 1.5 truncated at the degree bound; term count
/// 1 + geometric(1/2) capped at 3.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t bits();
    int uniform(int lo, int hi);
    int geometric(int permille);  // P(success) = permille/1000
    Rational coefficient();
    ExpTuple exponents(int length, int degree_bound);
    CommPoly poly(const BaseDomain& base, int degree_bound);
    CrossedElement element(const AlgebraPresentation& pres, int degree_bound);
    CrossedElement nonzero_element(const AlgebraPresentation& pres, int degree_bound);

private:
    std::uint64_t state_;
};

/// Membership-decidable subalgebra of B.
struct SubalgebraSpec {
    enum class Kind { DegreeZeroPart, FirstGenerator, UserGenerated };
    Kind kind = Kind::FirstGenerator;
    std::vector<CrossedElement> gens;  // UserGenerated: non-unital span of products
    int expansion_bound = 6;

    static SubalgebraSpec a1() { return SubalgebraSpec{Kind::FirstGenerator, {}, 0}; }
    static SubalgebraSpec zero_part() { return SubalgebraSpec{Kind::DegreeZeroPart, {}, 0}; }
    static SubalgebraSpec user(std::vector<CrossedElement> gens, int expansion_bound);
};

struct PropertyReport {
    std::string property;
    long trials = 0, performed = 0, skipped = 0;
    struct Violation {
        CrossedElement a, b, ab;
    };
    std::vector<Violation> violations;
    enum class Verdict { Pass, Fail, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    std::string note;
    int expansion_bound = -1;

    std::string str(const AlgebraPresentation& pres) const;
};

/// Definition-1 sampler: draws a, b outside the subalgebra and flags ab inside.
PropertyReport check_completely_prime(const SubalgebraSpec& sub, const AlgebraPresentation& pres,
                                      long trials, std::uint64_t seed, int degree_bound);

/// Definition-2 sampler: draws pairs with at least one factor outside and
/// flags ab inside.
PropertyReport check_scp(const SubalgebraSpec& sub, const AlgebraPresentation& pres, long trials,
                         std::uint64_t seed, int degree_bound);

struct GradedChainReport {
    bool precondition_ok = false;   // grading semigroup passes the strict check
    bool graded_domain_ok = false;  // no zero divisors among sampled homogeneous elements
    PropertyReport prime, scp;
    PropertyReport::Verdict overall = PropertyReport::Verdict::Inconclusive;
    std::string note;
    std::string str(const AlgebraPresentation& pres) const;
};

/// Runs both primality checks on the degree-zero part of a base-graded
/// presentation (grading by total degree, or the trivial grading).
GradedChainReport check_graded_lemma_chain(const AlgebraPresentation& pres, long trials,
                                           std::uint64_t seed, int degree_bound,
                                           bool trivial_grading = false);

/// Verifies filtration_index(e1*e2) <= filtration_index(e1) + filtration_index(e2)
/// componentwise on random pairs.
PropertyReport check_filtration_multiplicative(const AlgebraPresentation& pres, long trials,
                                               std::uint64_t seed, int degree_bound);

/// Decidable membership test backing the checks; exposed for re-verification
/// of reported witnesses.
bool subalgebra_contains(const SubalgebraSpec& sub, const CrossedElement& e,
                         const AlgebraPresentation& pres);

}  // namespace crossprod
