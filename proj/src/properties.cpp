#include "crossprod/properties.hpp"

#include <algorithm>
#include <stdexcept>

#include "crossprod/semigroup.hpp"

namespace crossprod {

std::uint64_t Sampler::bits() {
    // splitmix64; stable across platforms.
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int Sampler::uniform(int lo, int hi) {
    return lo + static_cast<int>(bits() % static_cast<std::uint64_t>(hi - lo + 1));
}

int Sampler::geometric(int permille) {
    int k = 0;
    while (static_cast<int>(bits() % 1000) >= permille && k < 32) ++k;
    return k;
}

Rational Sampler::coefficient() {
    int num = 0;
    while (num == 0) num = uniform(-3, 3);
    return Rational(num, uniform(1, 3));
}

ExpTuple Sampler::exponents(int length, int degree_bound) {
    ExpTuple e(static_cast<size_t>(length), 0);
    for (int attempt = 0; attempt < 16; ++attempt) {
        for (auto& v : e) v = geometric(400);  // mean 1.5
        if (tuple_degree(e) <= degree_bound) return e;
    }
    std::fill(e.begin(), e.end(), 0);
    return e;
}

CommPoly Sampler::poly(const BaseDomain& base, int degree_bound) {
    CommPoly p = CommPoly::zero(base.num_vars());
    int nterms = std::min(1 + geometric(500), 3);
    for (int t = 0; t < nterms; ++t) p.add_term(exponents(base.num_vars(), degree_bound), coefficient());
    if (base.quot()) p = reduce(p, *base.quot());
    return p;
}

CrossedElement Sampler::element(const AlgebraPresentation& pres, int degree_bound) {
    CrossedElement e = CrossedElement::zero(pres);
    int nterms = std::min(1 + geometric(500), 3);
    for (int t = 0; t < nterms; ++t) {
        ExpTuple g = exponents(pres.num_generators(), degree_bound);
        int left = degree_bound - tuple_degree(g);
        ExpTuple b = exponents(pres.num_vars(), left);
        e.add_term(g, CommPoly::monomial(b, coefficient()));
    }
    return e;
}

CrossedElement Sampler::nonzero_element(const AlgebraPresentation& pres, int degree_bound) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        CrossedElement e = element(pres, degree_bound);
        if (!e.is_zero()) return e;
    }
    return CrossedElement::one(pres);
}

SubalgebraSpec SubalgebraSpec::user(std::vector<CrossedElement> gens, int expansion_bound) {
    SubalgebraSpec s;
    s.kind = Kind::UserGenerated;
    s.gens = std::move(gens);
    s.expansion_bound = expansion_bound;
    return s;
}

namespace {

/// Row-reduced span of all products of the generators up to the degree bound;
/// membership by reduction against the pivot rows.
struct SpanTable {
    TruncBasis basis;
    std::vector<std::vector<Rational>> rows;  // reduced echelon rows
    std::vector<int> pivots;

    void insert(std::vector<Rational> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            const Rational& lead = v[static_cast<size_t>(pivots[r])];
            if (lead.is_zero()) continue;
            for (size_t c = 0; c < v.size(); ++c) {
                if (!rows[r][c].is_zero()) v[c] -= lead * rows[r][c];
            }
        }
        int pivot = -1;
        for (size_t c = 0; c < v.size(); ++c) {
            if (!v[c].is_zero()) {
                pivot = static_cast<int>(c);
                break;
            }
        }
        if (pivot < 0) return;
        Rational inv = Rational(1) / v[static_cast<size_t>(pivot)];
        for (auto& x : v) {
            if (!x.is_zero()) x *= inv;
        }
        rows.push_back(std::move(v));
        pivots.push_back(pivot);
    }

    bool contains(std::vector<Rational> v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            const Rational& lead = v[static_cast<size_t>(pivots[r])];
            if (lead.is_zero()) continue;
            for (size_t c = 0; c < v.size(); ++c) {
                if (!rows[r][c].is_zero()) v[c] -= lead * rows[r][c];
            }
        }
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
};

SpanTable build_span(const SubalgebraSpec& sub, const AlgebraPresentation& pres) {
    SpanTable table;
    table.basis = TruncBasis::build(pres, sub.expansion_bound);
    // Closure under right multiplication by the generators, degree-capped.
    std::vector<CrossedElement> work = sub.gens;
    size_t next = 0;
    while (next < work.size()) {
        CrossedElement cur = work[next++];
        auto d = total_degree(cur);
        if (!d || *d > sub.expansion_bound) continue;
        table.insert(vectorize(cur, table.basis));
        for (const auto& g : sub.gens) {
            CrossedElement prod = multiply(pres, cur, g);
            auto dp = total_degree(prod);
            if (dp && *dp <= sub.expansion_bound) work.push_back(std::move(prod));
        }
        if (work.size() > 4096) break;  // degree cap makes this unreachable in practice
    }
    return table;
}

}  // namespace

bool subalgebra_contains(const SubalgebraSpec& sub, const CrossedElement& e,
                         const AlgebraPresentation& pres) {
    if (e.is_zero()) return true;
    switch (sub.kind) {
        case SubalgebraSpec::Kind::FirstGenerator:
            for (const auto& [g, c] : e.terms) {
                for (size_t i = 1; i < g.size(); ++i)
                    if (g[i] != 0) return false;
            }
            return true;
        case SubalgebraSpec::Kind::DegreeZeroPart:
            if (pres.num_generators() > 0) {
                for (const auto& [g, c] : e.terms)
                    if (tuple_degree(g) != 0) return false;
                return true;
            }
            return *total_degree(e) == 0;
        case SubalgebraSpec::Kind::UserGenerated: {
            auto d = total_degree(e);
            if (!d || *d > sub.expansion_bound) return false;
            SpanTable table = build_span(sub, pres);
            return table.contains(vectorize(e, table.basis));
        }
    }
    return false;
}

namespace {

PropertyReport run_pair_sampler(const std::string& property, const SubalgebraSpec& sub,
                                const AlgebraPresentation& pres, long trials, std::uint64_t seed,
                                int degree_bound, bool scp_mode) {
    PropertyReport rep;
    rep.property = property;
    rep.trials = trials;
    if (sub.kind == SubalgebraSpec::Kind::UserGenerated) rep.expansion_bound = sub.expansion_bound;
    // Build the span table once; per-trial membership reuses it.
    std::optional<SpanTable> table;
    if (sub.kind == SubalgebraSpec::Kind::UserGenerated) table = build_span(sub, pres);
    auto member = [&](const CrossedElement& e) {
        if (sub.kind != SubalgebraSpec::Kind::UserGenerated)
            return subalgebra_contains(sub, e, pres);
        if (e.is_zero()) return true;
        auto d = total_degree(e);
        if (!d || *d > sub.expansion_bound) return false;
        return table->contains(vectorize(e, table->basis));
    };
    for (long t = 0; t < trials; ++t) {
        Sampler sampler(seed + 0x1000 * static_cast<std::uint64_t>(t));  // per-trial derived seed
        CrossedElement a = sampler.nonzero_element(pres, degree_bound);
        CrossedElement b = sampler.nonzero_element(pres, degree_bound);
        bool a_in = member(a), b_in = member(b);
        bool applicable = scp_mode ? !(a_in && b_in) : (!a_in && !b_in);
        if (!applicable) {
            ++rep.skipped;
            continue;
        }
        ++rep.performed;
        CrossedElement ab = multiply(pres, a, b);
        if (member(ab) && !ab.is_zero()) {
            rep.violations.push_back({a, b, ab});
            rep.verdict = PropertyReport::Verdict::Fail;
            return rep;
        }
    }
    rep.verdict = PropertyReport::Verdict::Pass;
    if (rep.performed == 0 && trials > 0) rep.note = "vacuous: no applicable sample pairs";
    return rep;
}

}  // namespace

PropertyReport check_completely_prime(const SubalgebraSpec& sub, const AlgebraPresentation& pres,
                                      long trials, std::uint64_t seed, int degree_bound) {
    return run_pair_sampler("completely-prime", sub, pres, trials, seed, degree_bound, false);
}

PropertyReport check_scp(const SubalgebraSpec& sub, const AlgebraPresentation& pres, long trials,
                         std::uint64_t seed, int degree_bound) {
    return run_pair_sampler("strongly-completely-prime", sub, pres, trials, seed, degree_bound,
                            true);
}

std::string PropertyReport::str(const AlgebraPresentation& pres) const {
    std::string s;
    s += "report = " + property + "\n";
    s += "trials = " + std::to_string(trials) + "\n";
    s += "performed = " + std::to_string(performed) + "\n";
    s += "skipped = " + std::to_string(skipped) + "\n";
    s += "violations = " + std::to_string(violations.size()) + "\n";
    if (expansion_bound >= 0) s += "expansion-bound = " + std::to_string(expansion_bound) + "\n";
    s += "verdict = ";
    s += verdict == Verdict::Pass ? "pass" : verdict == Verdict::Fail ? "fail" : "inconclusive";
    s += "\n";
    if (!violations.empty()) {
        s += "witness.a = " + element_str(violations[0].a, pres) + "\n";
        s += "witness.b = " + element_str(violations[0].b, pres) + "\n";
        s += "witness.ab = " + element_str(violations[0].ab, pres) + "\n";
    }
    if (!note.empty()) s += "note = " + note + "\n";
    return s;
}

GradedChainReport check_graded_lemma_chain(const AlgebraPresentation& pres, long trials,
                                           std::uint64_t seed, int degree_bound,
                                           bool trivial_grading) {
    GradedChainReport rep;
    if (pres.num_generators() != 0) {
        rep.note = "graded lemma chain runs on base-graded presentations (no generators)";
        return rep;
    }
    // Grading semigroup: Z+ under addition (total degree). Strict check on a
    // truncation; the trivial grading is graded by the zero semigroup.
    if (trivial_grading) {
        rep.precondition_ok = true;
    } else {
        auto sample = FiniteSemigroupSample::builtin("nat-plus:12");
        auto ol = check_ordered_like(sample, 3, true);
        rep.precondition_ok = ol.verdict == OrderedLikeReport::Verdict::Pass;
    }
    if (!rep.precondition_ok) {
        rep.note = "grading semigroup fails the strict ordered-like check";
        return rep;
    }
    // Graded-domain spot check: products of nonzero homogeneous elements.
    rep.graded_domain_ok = true;
    {
        Sampler sampler(seed ^ 0xD011ULL);
        for (int t = 0; t < 200 && rep.graded_domain_ok; ++t) {
            auto homogeneous = [&]() {
                CommPoly p = sampler.poly(pres.base, degree_bound);
                if (p.is_zero()) return p;
                int top = *p.degree();
                CommPoly h = CommPoly::zero(p.nvars);
                for (const auto& [e, c] : p.terms)
                    if (tuple_degree(e) == top) h.add_term(e, c);
                return h;
            };
            CommPoly a = homogeneous(), b = homogeneous();
            if (a.is_zero() || b.is_zero()) continue;
            if (mul(a, b, pres.base.quot()).is_zero()) rep.graded_domain_ok = false;
        }
    }
    if (!rep.graded_domain_ok) {
        rep.note = "zero divisors among homogeneous elements: graded-domain precondition fails";
        rep.overall = PropertyReport::Verdict::Inconclusive;
        return rep;
    }
    if (trivial_grading) {
        // A0 = A: both properties hold vacuously.
        rep.prime.property = "completely-prime";
        rep.prime.verdict = PropertyReport::Verdict::Pass;
        rep.prime.note = "vacuous: trivial grading, degree-zero part is everything";
        rep.scp = rep.prime;
        rep.scp.property = "strongly-completely-prime";
        rep.overall = PropertyReport::Verdict::Pass;
        return rep;
    }
    rep.prime =
        check_completely_prime(SubalgebraSpec::zero_part(), pres, trials, seed, degree_bound);
    rep.scp = check_scp(SubalgebraSpec::zero_part(), pres, trials, seed + 1, degree_bound);
    bool ok = rep.prime.verdict == PropertyReport::Verdict::Pass &&
              rep.scp.verdict == PropertyReport::Verdict::Pass;
    rep.overall = ok ? PropertyReport::Verdict::Pass : PropertyReport::Verdict::Fail;
    return rep;
}

std::string GradedChainReport::str(const AlgebraPresentation& pres) const {
    std::string s;
    s += "report = graded-lemma-chain\n";
    s += std::string("precondition = ") + (precondition_ok ? "pass" : "fail") + "\n";
    s += std::string("graded-domain = ") + (graded_domain_ok ? "pass" : "fail") + "\n";
    if (!note.empty()) s += "note = " + note + "\n";
    if (precondition_ok && graded_domain_ok) {
        s += "-- completely prime --\n" + prime.str(pres);
        s += "-- strongly completely prime --\n" + scp.str(pres);
    }
    s += "overall = ";
    s += overall == PropertyReport::Verdict::Pass
             ? "pass"
             : overall == PropertyReport::Verdict::Fail ? "fail" : "inconclusive";
    s += "\n";
    return s;
}

namespace {

// Index of an element in the ordered filtration: the deglex-maximal
// (g2..gn)-exponent tuple over its terms. The filtration semigroup carries the
// degree-lexicographic order, so submultiplicativity is an order inequality,
// not a componentwise one: brackets can trade a later generator for an earlier
// one of the same total degree.
ExpTuple ordered_filtration_index(const CrossedElement& e) {
    size_t n = static_cast<size_t>(e.ngens);
    ExpTuple best(n > 0 ? n - 1 : 0, 0);
    bool first = true;
    for (const auto& [g, c] : e.terms) {
        ExpTuple tail(g.begin() + (n > 0 ? 1 : 0), g.end());
        if (first || compare(tail, best, OrderRule::Deglex) == Ordering::Greater) best = tail;
        first = false;
    }
    return best;
}

}  // namespace

PropertyReport check_filtration_multiplicative(const AlgebraPresentation& pres, long trials,
                                               std::uint64_t seed, int degree_bound) {
    PropertyReport rep;
    rep.property = "filtration-multiplicative";
    rep.trials = trials;
    for (long t = 0; t < trials; ++t) {
        Sampler sampler(seed + 0x2000 * static_cast<std::uint64_t>(t));
        CrossedElement a = sampler.nonzero_element(pres, degree_bound);
        CrossedElement b = sampler.nonzero_element(pres, degree_bound);
        CrossedElement ab = multiply(pres, a, b);
        if (ab.is_zero()) {
            ++rep.skipped;
            continue;
        }
        ++rep.performed;
        ExpTuple ia = ordered_filtration_index(a);
        ExpTuple ib = ordered_filtration_index(b);
        ExpTuple sum = tuple_add(ia, ib);
        ExpTuple prod = ordered_filtration_index(ab);
        bool degree_ok = tuple_degree(prod) <= tuple_degree(sum);
        bool order_ok = compare(prod, sum, OrderRule::Deglex) != Ordering::Greater;
        if (!degree_ok || !order_ok) {
            rep.violations.push_back({a, b, ab});
            rep.verdict = PropertyReport::Verdict::Fail;
            return rep;
        }
    }
    rep.verdict = PropertyReport::Verdict::Pass;
    return rep;
}

}  // namespace crossprod
