#include "crossprod/stably_free.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace crossprod {

namespace {

CrossedElement row_dot(const AlgebraPresentation& pres,
                       const std::vector<CrossedElement>& row,
                       const std::vector<CrossedElement>& col) {
    CrossedElement s = CrossedElement::zero(pres);
    for (size_t i = 0; i < row.size(); ++i) s = ce_add(s, multiply(pres, row[i], col[i]));
    return s;
}

}  // namespace

UnimodularRow make_verified_row(std::vector<CrossedElement> entries,
                                std::vector<CrossedElement> cofactors,
                                const AlgebraPresentation& pres) {
    if (entries.size() != cofactors.size() || entries.size() < 2)
        throw std::invalid_argument("unimodular row: needs matching entries and cofactors");
    if (!row_dot(pres, entries, cofactors).is_one())
        throw std::invalid_argument("unimodular row: identity sum a_i u_i = 1 fails");
    return UnimodularRow{std::move(entries), std::move(cofactors)};
}

std::optional<UnimodularRow> find_cofactors(const CrossedElement& a, const CrossedElement& b,
                                            int cofactor_bound,
                                            const AlgebraPresentation& pres) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("find_cofactors: zero entry");
    SolveReport rep =
        right_combination_solve({a, b}, CrossedElement::one(pres), cofactor_bound, pres);
    if (!rep.solved()) return std::nullopt;
    return make_verified_row({a, b}, rep.cofactors, pres);
}

std::optional<IdealSpec> build_intersection_ideal(const UnimodularRow& row, int degree_bound,
                                                  const AlgebraPresentation& pres) {
    const CrossedElement& a = row.a();
    const CrossedElement& b = row.b();
    if (!row_dot(pres, row.entries, row.cofactors).is_one())
        throw std::invalid_argument("build_intersection_ideal: row fails re-verification");
    auto syz = syzygy_basis(a, b, degree_bound, pres);
    if (syz.empty()) return std::nullopt;
    IdealSpec ideal;
    ideal.provenance = IdealSpec::Provenance::Syzygy;
    ideal.a = a;
    ideal.b = b;
    ideal.syzygy_bound = degree_bound;
    for (const auto& [s, t] : syz) {
        CrossedElement gen = multiply(pres, a, s);
        if (gen.is_zero()) continue;
        if (gen != ce_neg(multiply(pres, b, t)))
            throw std::logic_error("build_intersection_ideal: generator verification failed");
        ideal.generators.push_back(std::move(gen));
        ideal.syzygies.emplace_back(s, t);
    }
    if (ideal.generators.empty()) return std::nullopt;
    return ideal;
}

StableFreenessWitness certify_stably_free(const UnimodularRow& row,
                                          const AlgebraPresentation& pres) {
    StableFreenessWitness w;
    w.row = row.entries;
    w.col = row.cofactors;
    CrossedElement identity = row_dot(pres, w.row, w.col);
    if (!identity.is_one())
        throw std::invalid_argument("certify_stably_free: row identity fails re-verification");
    const size_t k = w.row.size();
    // E = I - col*row; E*E = E, row*E = 0, E*col = 0 are all checked exactly.
    w.idempotent.assign(k, std::vector<CrossedElement>(k, CrossedElement::zero(pres)));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            CrossedElement e = ce_neg(multiply(pres, w.col[i], w.row[j]));
            if (i == j) e = ce_add(e, CrossedElement::one(pres));
            w.idempotent[i][j] = std::move(e);
        }
    }
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            CrossedElement square = CrossedElement::zero(pres);
            for (size_t l = 0; l < k; ++l)
                square = ce_add(square, multiply(pres, w.idempotent[i][l], w.idempotent[l][j]));
            if (square != w.idempotent[i][j])
                throw std::logic_error("certify_stably_free: idempotent identity failed");
        }
    }
    for (size_t j = 0; j < k; ++j) {
        CrossedElement re = CrossedElement::zero(pres);
        CrossedElement ec = CrossedElement::zero(pres);
        for (size_t l = 0; l < k; ++l) {
            re = ce_add(re, multiply(pres, w.row[l], w.idempotent[l][j]));
            ec = ce_add(ec, multiply(pres, w.idempotent[j][l], w.col[l]));
        }
        if (!re.is_zero() || !ec.is_zero())
            throw std::logic_error("certify_stably_free: splitting identity failed");
    }
    w.trace = CrossedElement::zero(pres);
    for (size_t i = 0; i < k; ++i) w.trace = ce_add(w.trace, w.idempotent[i][i]);
    if (!w.trace.is_zero()) {
        bool constant = w.trace.terms.size() == 1 &&
                        tuple_degree(w.trace.terms.begin()->first) == 0 &&
                        w.trace.terms.begin()->second.is_constant();
        if (constant) {
            const Rational& c = w.trace.terms.begin()->second.terms.begin()->second;
            if (c.raw().get_den() == 1 && c.raw().get_num().fits_sint_p())
                w.rank = static_cast<int>(c.raw().get_num().get_si());
        }
    }
    return w;
}

namespace {

bool additivity_spot_check(const AlgebraPresentation& pres) {
    if (pres.base.quotient) return false;  // associated graded need not be a domain
    std::mt19937_64 rng(0x5eedC0DEULL);
    auto draw = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    for (int trial = 0; trial < 32; ++trial) {
        auto sample = [&]() {
            CrossedElement e = CrossedElement::zero(pres);
            int nterms = draw(1, 2);
            for (int t = 0; t < nterms; ++t) {
                ExpTuple g(static_cast<size_t>(pres.num_generators()), 0);
                for (auto& v : g) v = draw(0, 2);
                ExpTuple bexp(static_cast<size_t>(pres.num_vars()), 0);
                for (auto& v : bexp) v = draw(0, 2);
                int c = 0;
                while (c == 0) c = draw(-3, 3);
                e.add_term(g, CommPoly::monomial(bexp, Rational(c)));
            }
            return e;
        };
        CrossedElement e1 = sample(), e2 = sample();
        if (e1.is_zero() || e2.is_zero()) continue;
        auto d = total_degree(multiply(pres, e1, e2));
        if (!d || *d != *total_degree(e1) + *total_degree(e2)) return false;
    }
    return true;
}

}  // namespace

NonCyclicityOutcome certify_noncyclic(const IdealSpec& ideal, int degree_cap, int cofactor_bound,
                                      const AlgebraPresentation& pres) {
    NonCyclicityOutcome out;
    if (ideal.generators.empty()) {
        out.status = NonCyclicityOutcome::Status::Inconclusive;
        out.reason = "no generators";
        return out;
    }
    if (!additivity_spot_check(pres)) {
        out.status = NonCyclicityOutcome::Status::Refused;
        out.reason = "degree additivity precondition fails for this presentation";
        return out;
    }
    bool via_intersection = ideal.provenance != IdealSpec::Provenance::User && !ideal.a.is_zero();
    if (via_intersection) {
        out.dim_ideal = intersection_dims(ideal.a, ideal.b, degree_cap, pres);
    } else {
        out.dim_ideal = filtered_dim(ideal.generators, cofactor_bound, degree_cap, pres);
    }
    for (int d = 0; d <= degree_cap; ++d) {
        if (out.dim_ideal[d] > 0) {
            out.d0 = d;
            break;
        }
    }
    if (out.d0 < 0) {
        out.status = NonCyclicityOutcome::Status::Inconclusive;
        out.reason = "no nonzero slice up to the cap";
        return out;
    }
    for (int d = out.d0; d <= degree_cap; ++d) {
        long full = pbw_count(pres, d - out.d0);
        if (out.dim_ideal[d] > full) {
            NonCyclicityCertificate cert;
            cert.d0 = out.d0;
            cert.d_witness = d;
            cert.dim_ideal_at_witness = out.dim_ideal[d];
            cert.dim_full_at_witness = full;
            cert.degree_cap = degree_cap;
            cert.cofactor_bound = cofactor_bound;
            cert.method = via_intersection ? "intersection" : "generated";
            cert.dim_ideal = out.dim_ideal;
            out.cert = std::move(cert);
            out.status = NonCyclicityOutcome::Status::Certified;
            return out;
        }
    }
    out.status = NonCyclicityOutcome::Status::Inconclusive;
    out.reason = "all slice dimensions match the principal pattern up to the cap";
    return out;
}

IdealSpec lift_ideal(const IdealSpec& ideal, const AlgebraPresentation& pres_sub,
                     const AlgebraPresentation& pres_b) {
    if (pres_b.num_generators() < 2)
        throw std::invalid_argument("lift_ideal: target needs at least two generators");
    AlgebraPresentation restricted = pres_b.restrict_to_first_generator();
    if (restricted.content_hash() != pres_sub.content_hash())
        throw std::invalid_argument(
            "lift_ideal: target presentation does not extend the subalgebra");
    auto embed = [&](const CrossedElement& e) {
        CrossedElement out = CrossedElement::zero(pres_b);
        for (const auto& [g, c] : e.terms) {
            for (size_t i = 1; i < g.size(); ++i) {
                if (g[i] != 0)
                    throw std::invalid_argument(
                        "lift_ideal: generator mentions g" + std::to_string(i + 1));
            }
            ExpTuple wide(static_cast<size_t>(pres_b.num_generators()), 0);
            if (!g.empty()) wide[0] = g[0];
            out.add_term(wide, c);
        }
        return out;
    };
    IdealSpec lifted;
    lifted.provenance = IdealSpec::Provenance::LiftedFromA1;
    lifted.syzygy_bound = ideal.syzygy_bound;
    lifted.sub_presentation_hash = pres_sub.content_hash();
    if (!ideal.a.is_zero()) lifted.a = embed(ideal.a);
    if (!ideal.b.is_zero()) lifted.b = embed(ideal.b);
    for (const auto& g : ideal.generators) lifted.generators.push_back(embed(g));
    for (const auto& [s, t] : ideal.syzygies) lifted.syzygies.emplace_back(embed(s), embed(t));
    // The embedding is a ring map: every recorded identity re-verifies in B.
    for (size_t i = 0; i < lifted.syzygies.size(); ++i) {
        CrossedElement gen = multiply(pres_b, lifted.a, lifted.syzygies[i].first);
        if (gen != lifted.generators[i] ||
            gen != ce_neg(multiply(pres_b, lifted.b, lifted.syzygies[i].second)))
            throw std::logic_error("lift_ideal: lifted identity failed re-verification");
    }
    return lifted;
}

DerivationStabilityReport derivation_stability(const std::vector<CommPoly>& ideal_gens,
                                               const DerivationSpec& d, int membership_bound,
                                               const BaseDomain& base) {
    DerivationStabilityReport rep;
    if (ideal_gens.empty()) throw std::invalid_argument("derivation_stability: no generators");
    AlgebraPresentation ambient;
    ambient.base = base;
    int max_gen_deg = 0;
    for (const auto& g : ideal_gens) {
        if (g.is_zero()) throw std::invalid_argument("derivation_stability: zero generator");
        max_gen_deg = std::max(max_gen_deg, *g.degree());
    }
    std::vector<CrossedElement> gens;
    for (const auto& g : ideal_gens) gens.push_back(CrossedElement::from_coeff(ambient, g));
    for (size_t i = 0; i < ideal_gens.size(); ++i) {
        CommPoly img = apply_derivation(d, ideal_gens[i], base.quot());
        if (img.is_zero()) continue;
        int bound = std::max(membership_bound, *img.degree() + max_gen_deg + 1);
        SolveReport sol = right_combination_solve(
            gens, CrossedElement::from_coeff(ambient, img), bound, ambient);
        if (!sol.solved()) {
            rep.verdict = StabilityVerdict::Unstable;
            rep.witness_index = static_cast<int>(i);
            rep.witness_generator = ideal_gens[i];
            rep.witness_image = img;
            rep.bound_used = bound;
            return rep;
        }
        rep.bound_used = std::max(rep.bound_used, bound);
    }
    rep.verdict = StabilityVerdict::Stable;
    return rep;
}

std::string DerivationStabilityReport::str(const std::vector<std::string>& var_names) const {
    std::string s = "verdict = ";
    s += verdict == StabilityVerdict::Stable
             ? "stable"
             : verdict == StabilityVerdict::Unstable ? "unstable" : "inconclusive";
    s += "\nbound-used = " + std::to_string(bound_used) + "\n";
    if (verdict == StabilityVerdict::Unstable) {
        s += "witness.generator = " + poly_str(witness_generator, var_names) + "\n";
        s += "witness.image = " + poly_str(witness_image, var_names) + "\n";
    }
    return s;
}

SphereInstance sphere_column(int n) {
    if (n < 3) throw std::invalid_argument("sphere_column: needs n >= 3");
    SphereInstance inst;
    inst.n = n;
    inst.pres = AlgebraPresentation::preset("sphere:" + std::to_string(n));
    for (int i = 0; i < n; ++i) {
        inst.column.push_back(
            CrossedElement::from_coeff(inst.pres, CommPoly::variable(n, i)));
    }
    CrossedElement sum = row_dot(inst.pres, inst.column, inst.column);
    if (!sum.is_one()) throw std::logic_error("sphere_column: sum a_i^2 = 1 failed");
    return inst;
}

StableFreenessWitness cokernel_presentation(const SphereInstance& inst) {
    UnimodularRow row{inst.column, inst.column};
    return certify_stably_free(row, inst.pres);
}

}  // namespace crossprod
