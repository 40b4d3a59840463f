#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "crossprod/exptuple.hpp"

namespace crossprod {

/// Finite truncation of a commutative semigroup with identity, given by an
/// operation table. -1 marks a sum escaping the truncation.
struct FiniteSemigroupSample {
    std::vector<std::string> names;
    std::vector<std::vector<int>> op;  // op[a][b], -1 = out of sample
    int zero = 0;

    int size() const { return static_cast<int>(names.size()); }

    /// Checks associativity/commutativity where defined and neutrality of zero.
    void validate() const;

    /// Built-ins: "nat-plus:<bound>", "nat-max:<bound>", "natk-plus:<k>:<bound>".
    static FiniteSemigroupSample builtin(const std::string& spec);

    /// Text table: header line of element names, then one row per element with
    /// the results of <row> op <column>; "-" marks an escaping sum.
    static FiniteSemigroupSample load(std::istream& in);
};

/// |{(a,b) : a in S1, b in S2, a+b = c}|. Escaping sums never hit c.
int nu_count(const std::vector<int>& s1, const std::vector<int>& s2, int c,
             const FiniteSemigroupSample& sample);

struct PairCheck {
    bool applicable = false;  // S1+S2 inside the sample and != {0}
    bool ok = false;          // some admissible c has nu(c) == 1
    int unique_c = -1;        // a witnessing c when ok
};

/// Evaluates the unique-decomposition condition for one subset pair. In strict
/// mode the witness c must be nonzero.
PairCheck check_pair(const std::vector<int>& s1, const std::vector<int>& s2,
                     const FiniteSemigroupSample& sample, bool strict);

struct OrderedLikeReport {
    enum class Verdict { Pass, Fail, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;
    long checked = 0;
    long skipped = 0;  // pairs escaping the truncation
    std::vector<int> witness_s1, witness_s2;  // first failing pair
    std::string note;

    std::string str(const FiniteSemigroupSample& sample) const;
};

/// Exhaustive check over all nonempty subset pairs up to the size bound:
/// (i) no nonzero invertibles, (ii) each in-sample pair with S1+S2 != {0} has
/// an element of unique decomposition (nonzero when strict). Pairs whose sums
/// escape the truncation are skipped and counted, never treated as passing.
OrderedLikeReport check_ordered_like(const FiniteSemigroupSample& sample,
                                     int subset_size_bound, bool strict);

struct WellOrderReport {
    bool pass = true;
    long trials = 0;
    ExpTuple witness_a, witness_b, witness_c;
    std::string note;
    std::string str() const;
};

using TupleComparator = std::function<Ordering(const ExpTuple&, const ExpTuple&)>;

/// Randomized totality + translation-invariance check of a comparator on
/// exponent tuples. Seeded and deterministic.
WellOrderReport well_order_compatibility_check(const TupleComparator& cmp, int length,
                                               long trials, std::uint64_t seed);
WellOrderReport well_order_compatibility_check(OrderRule rule, int length, long trials,
                                               std::uint64_t seed);

}  // namespace crossprod
