#pragma once

// Test-only word rewriter, independent of the production engine: scans each
// word left to right, rewrites the first violating adjacent pair, and explores
// the resulting words breadth-first. Used to cross-check normal forms.

#include <deque>

#include "crossprod/element.hpp"

namespace crossprod::testing {

inline CrossedElement oracle_normal_form(const Word& input, const AlgebraPresentation& pres) {
    CrossedElement result = CrossedElement::zero(pres);
    std::deque<Word> agenda{input};
    while (!agenda.empty()) {
        Word w = std::move(agenda.front());
        agenda.pop_front();
        bool rewrote = false;
        for (size_t i = 0; i + 1 < w.size() && !rewrote; ++i) {
            const bool left_gen = std::holds_alternative<int>(w[i]);
            const bool right_gen = std::holds_alternative<int>(w[i + 1]);
            if (!left_gen && !right_gen) {
                // merge adjacent coefficients
                Word next(w.begin(), w.begin() + static_cast<long>(i));
                CommPoly merged = mul(std::get<CommPoly>(w[i]), std::get<CommPoly>(w[i + 1]),
                                      pres.base.quot());
                if (!merged.is_zero()) {
                    next.emplace_back(std::move(merged));
                    next.insert(next.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                    agenda.push_back(std::move(next));
                }
                rewrote = true;
            } else if (left_gen && !right_gen) {
                // g r -> r g + delta(r)
                int g = std::get<int>(w[i]);
                const CommPoly& r = std::get<CommPoly>(w[i + 1]);
                Word swapped(w.begin(), w.begin() + static_cast<long>(i));
                swapped.emplace_back(r);
                swapped.emplace_back(g);
                swapped.insert(swapped.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                agenda.push_back(std::move(swapped));
                CommPoly dr = apply_derivation(pres.derivations.deltas.at(static_cast<size_t>(g)),
                                               r, pres.base.quot());
                if (!dr.is_zero()) {
                    Word derived(w.begin(), w.begin() + static_cast<long>(i));
                    derived.emplace_back(std::move(dr));
                    derived.insert(derived.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                    agenda.push_back(std::move(derived));
                }
                rewrote = true;
            } else if (left_gen && right_gen) {
                int gi = std::get<int>(w[i]), gj = std::get<int>(w[i + 1]);
                if (gi <= gj) continue;
                // g_i g_j -> g_j g_i - sum c g_k - a  for i > j
                Word swapped(w.begin(), w.begin() + static_cast<long>(i));
                swapped.emplace_back(gj);
                swapped.emplace_back(gi);
                swapped.insert(swapped.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                agenda.push_back(std::move(swapped));
                for (const auto& [k, c] : pres.lie.bracket(gj, gi)) {
                    Word br(w.begin(), w.begin() + static_cast<long>(i));
                    br.emplace_back(CommPoly::constant(pres.num_vars(), -c));
                    br.emplace_back(k);
                    br.insert(br.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                    agenda.push_back(std::move(br));
                }
                CommPoly a = pres.lie.cocycle(gj, gi, pres.num_vars());
                if (!a.is_zero()) {
                    Word co(w.begin(), w.begin() + static_cast<long>(i));
                    co.emplace_back(neg(a));
                    co.insert(co.end(), w.begin() + static_cast<long>(i) + 2, w.end());
                    agenda.push_back(std::move(co));
                }
                rewrote = true;
            }
        }
        if (rewrote) continue;
        // Irreducible: coefficients only at the front, generators ascending.
        CommPoly coeff = CommPoly::constant(pres.num_vars(), Rational(1));
        ExpTuple gens(static_cast<size_t>(pres.num_generators()), 0);
        bool zero = false;
        for (const auto& atom : w) {
            if (std::holds_alternative<int>(atom)) {
                gens[static_cast<size_t>(std::get<int>(atom))] += 1;
            } else {
                coeff = mul(coeff, std::get<CommPoly>(atom), pres.base.quot());
                if (coeff.is_zero()) {
                    zero = true;
                    break;
                }
            }
        }
        if (!zero) {
            CrossedElement term = CrossedElement::zero(pres);
            term.add_term(gens, coeff);
            result = ce_add(result, term);
        }
    }
    return result;
}

/// Product computed through oracle words only; independent of multiply().
inline CrossedElement oracle_multiply(const CrossedElement& a, const CrossedElement& b,
                                      const AlgebraPresentation& pres) {
    CrossedElement out = CrossedElement::zero(pres);
    for (const auto& [ga, ca] : a.terms) {
        for (const auto& [gb, cb] : b.terms) {
            Word w;
            w.emplace_back(ca);
            for (size_t i = 0; i < ga.size(); ++i)
                for (int k = 0; k < ga[i]; ++k) w.emplace_back(static_cast<int>(i));
            w.emplace_back(cb);
            for (size_t i = 0; i < gb.size(); ++i)
                for (int k = 0; k < gb[i]; ++k) w.emplace_back(static_cast<int>(i));
            out = ce_add(out, oracle_normal_form(w, pres));
        }
    }
    return out;
}

}  // namespace crossprod::testing
