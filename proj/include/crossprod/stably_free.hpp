#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossprod/linalg.hpp"

namespace crossprod {

/// A verified unimodular row with its right cofactors: sum entries[i]*cofactors[i] = 1.
/// Length 2 is the (r, g+q) case; sphere columns use length n.
struct UnimodularRow {
    std::vector<CrossedElement> entries;
    std::vector<CrossedElement> cofactors;

    const CrossedElement& a() const { return entries.at(0); }
    const CrossedElement& b() const { return entries.at(1); }
    const CrossedElement& u() const { return cofactors.at(0); }
    const CrossedElement& v() const { return cofactors.at(1); }
};

/// Re-verifies the row identity exactly; throws on failure.
UnimodularRow make_verified_row(std::vector<CrossedElement> entries,
                                std::vector<CrossedElement> cofactors,
                                const AlgebraPresentation& pres);

/// Cofactor search for (a, b) with target 1; empty optional = inconclusive at
/// the bound.
std::optional<UnimodularRow> find_cofactors(const CrossedElement& a, const CrossedElement& b,
                                            int cofactor_bound,
                                            const AlgebraPresentation& pres);

/// A right ideal given by explicit generators.
struct IdealSpec {
    enum class Provenance { Syzygy, LiftedFromA1, User };
    Provenance provenance = Provenance::User;
    std::vector<CrossedElement> generators;
    // Intersection data when provenance is Syzygy or LiftedFromA1:
    CrossedElement a, b;
    std::vector<std::pair<CrossedElement, CrossedElement>> syzygies;  // gen = a*s = -b*t
    int syzygy_bound = -1;
    std::string sub_presentation_hash;  // set by lift_ideal
};

/// Generators of a*B intersect b*B from a syzygy basis; every generator is
/// verified equal to a*s and -b*t. Empty syzygy space at the bound returns an
/// empty optional (inconclusive).
std::optional<IdealSpec> build_intersection_ideal(const UnimodularRow& row, int degree_bound,
                                                  const AlgebraPresentation& pres);

/// The split projection B^k -> B along the row, its section by the cofactor
/// column, and the complementary idempotent E = I - col*row presenting the
/// kernel. All identities verified exactly at construction.
struct StableFreenessWitness {
    std::vector<CrossedElement> row;
    std::vector<CrossedElement> col;
    std::vector<std::vector<CrossedElement>> idempotent;
    CrossedElement trace;
    std::optional<int> rank;  // set when the trace is a constant
};

StableFreenessWitness certify_stably_free(const UnimodularRow& row,
                                          const AlgebraPresentation& pres);

/// Machine-checkable non-cyclicity record: slice dimensions of the ideal
/// against those of a principal ideal with the same minimal degree.
struct NonCyclicityCertificate {
    int d0 = -1;
    int d_witness = -1;
    long dim_ideal_at_witness = 0;
    long dim_full_at_witness = 0;
    int degree_cap = 0;
    int cofactor_bound = 0;
    std::string method;  // "intersection" or "generated"
    std::map<int, long> dim_ideal;  // per degree 0..cap
};

struct NonCyclicityOutcome {
    enum class Status { Certified, Inconclusive, Refused };
    Status status = Status::Refused;
    std::string reason;
    std::optional<NonCyclicityCertificate> cert;
    std::map<int, long> dim_ideal;
    int d0 = -1;
};

/// For syzygy/lifted ideals the slices of aB intersect bB are computed exactly
/// by subspace intersection; for user ideals the generated-ideal slices come
/// from filtered_dim at the cofactor bound (a lower bound, so certificates stay
/// sound). A certificate is emitted when a slice strictly exceeds the principal
/// pattern dim B_{<= d-d0}. Requires degree additivity: base Q or Q[x..] only.
NonCyclicityOutcome certify_noncyclic(const IdealSpec& ideal, int degree_cap, int cofactor_bound,
                                      const AlgebraPresentation& pres);

/// Re-embeds an ideal of the first-generator subalgebra into B. Generators may
/// mention only g1 and base variables.
IdealSpec lift_ideal(const IdealSpec& ideal, const AlgebraPresentation& pres_sub,
                     const AlgebraPresentation& pres_b);

enum class StabilityVerdict { Stable, Unstable, Inconclusive };

struct DerivationStabilityReport {
    StabilityVerdict verdict = StabilityVerdict::Inconclusive;
    int witness_index = -1;  // generator whose image escapes
    CommPoly witness_generator, witness_image;
    int bound_used = 0;
    std::string str(const std::vector<std::string>& var_names) const;
};

/// delta(ideal) subset ideal test over a commutative base, by bounded
/// membership solving; the membership bound always covers deg(d(m)) plus the
/// maximal generator degree.
DerivationStabilityReport derivation_stability(const std::vector<CommPoly>& ideal_gens,
                                               const DerivationSpec& d, int membership_bound,
                                               const BaseDomain& base);

/// The quotient-ring column (x1..xn) with its own entries as cofactors.
struct SphereInstance {
    int n = 0;
    AlgebraPresentation pres;
    std::vector<CrossedElement> column;
};

SphereInstance sphere_column(int n);
StableFreenessWitness cokernel_presentation(const SphereInstance& inst);

}  // namespace crossprod
