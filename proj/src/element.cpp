#include "crossprod/element.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace crossprod {

CrossedElement CrossedElement::zero(const AlgebraPresentation& pres) {
    return CrossedElement{pres.num_vars(), pres.num_generators(), {}};
}

CrossedElement CrossedElement::one(const AlgebraPresentation& pres) {
    return from_coeff(pres, CommPoly::constant(pres.num_vars(), Rational(1)));
}

CrossedElement CrossedElement::from_coeff(const AlgebraPresentation& pres, const CommPoly& c) {
    CrossedElement e = zero(pres);
    e.add_term(ExpTuple(static_cast<size_t>(pres.num_generators()), 0), c);
    return e;
}

CrossedElement CrossedElement::generator(const AlgebraPresentation& pres, int i) {
    if (i < 0 || i >= pres.num_generators())
        throw std::invalid_argument("unknown generator index");
    CrossedElement e = zero(pres);
    ExpTuple g(static_cast<size_t>(pres.num_generators()), 0);
    g[static_cast<size_t>(i)] = 1;
    e.add_term(g, CommPoly::constant(pres.num_vars(), Rational(1)));
    return e;
}

bool CrossedElement::is_one() const {
    return terms.size() == 1 && tuple_degree(terms.begin()->first) == 0 &&
           terms.begin()->second.is_one();
}

void CrossedElement::add_term(const ExpTuple& gexp, const CommPoly& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(gexp.size()) != ngens)
        throw std::invalid_argument("CrossedElement: generator exponent length mismatch");
    auto it = terms.find(gexp);
    if (it == terms.end()) {
        terms.emplace(gexp, c);
    } else {
        it->second = add(it->second, c);
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool operator==(const CrossedElement& a, const CrossedElement& b) {
    return a.nvars == b.nvars && a.ngens == b.ngens && a.terms == b.terms;
}

CrossedElement ce_add(const CrossedElement& a, const CrossedElement& b) {
    if (a.nvars != b.nvars || a.ngens != b.ngens)
        throw std::invalid_argument("CrossedElement add: presentation mismatch");
    CrossedElement r = a;
    for (const auto& [g, c] : b.terms) r.add_term(g, c);
    return r;
}

CrossedElement ce_neg(const CrossedElement& a) {
    CrossedElement r{a.nvars, a.ngens, {}};
    for (const auto& [g, c] : a.terms) r.terms.emplace(g, neg(c));
    return r;
}

CrossedElement ce_sub(const CrossedElement& a, const CrossedElement& b) {
    return ce_add(a, ce_neg(b));
}

CrossedElement ce_scale(const AlgebraPresentation& pres, const CommPoly& c,
                        const CrossedElement& e) {
    CrossedElement r = CrossedElement::zero(pres);
    if (c.is_zero()) return r;
    for (const auto& [g, k] : e.terms) r.add_term(g, mul(c, k, pres.base.quot()));
    return r;
}

namespace {

/// g_i * g^beta as a normal-form element; relation (2) rewriting.
CrossedElement insert_gen(const AlgebraPresentation& pres, int i, const ExpTuple& beta) {
    const int n = pres.num_generators();
    int j = -1;
    for (int t = 0; t < n; ++t) {
        if (beta[static_cast<size_t>(t)] > 0) {
            j = t;
            break;
        }
    }
    CrossedElement r = CrossedElement::zero(pres);
    if (j < 0 || i <= j) {
        ExpTuple g = beta;
        g[static_cast<size_t>(i)] += 1;
        r.add_term(g, CommPoly::constant(pres.num_vars(), Rational(1)));
        return r;
    }
    // i > j:  g_i g_j = g_j g_i - sum_k c g_k - a,  with [g_j, g_i] = sum_k c g_k + a.
    ExpTuple rest = beta;
    rest[static_cast<size_t>(j)] -= 1;
    CrossedElement x = insert_gen(pres, i, rest);
    r = gen_times(pres, j, x);
    for (const auto& [k, c] : pres.lie.bracket(j, i)) {
        CrossedElement piece = insert_gen(pres, k, rest);
        r = ce_sub(r, ce_scale(pres, CommPoly::constant(pres.num_vars(), c), piece));
    }
    CommPoly a = pres.lie.cocycle(j, i, pres.num_vars());
    if (!a.is_zero()) {
        CrossedElement piece = CrossedElement::zero(pres);
        piece.add_term(rest, a);
        r = ce_sub(r, piece);
    }
    return r;
}

}  // namespace

CrossedElement gen_times(const AlgebraPresentation& pres, int i, const CrossedElement& e) {
    // g_i * (c g^beta) = c * (g_i g^beta) + delta_i(c) g^beta   (relation (1)).
    CrossedElement r = CrossedElement::zero(pres);
    const DerivationSpec& delta = pres.derivations.deltas.at(static_cast<size_t>(i));
    for (const auto& [beta, c] : e.terms) {
        r = ce_add(r, ce_scale(pres, c, insert_gen(pres, i, beta)));
        CommPoly dc = apply_derivation(delta, c, pres.base.quot());
        if (!dc.is_zero()) r.add_term(beta, dc);
    }
    return r;
}

namespace {

CrossedElement monomial_times(const AlgebraPresentation& pres, const ExpTuple& beta,
                              CrossedElement e) {
    // Letters of g1^b1...gn^bn act right to left.
    for (int i = pres.num_generators() - 1; i >= 0; --i) {
        for (int k = 0; k < beta[static_cast<size_t>(i)]; ++k) e = gen_times(pres, i, e);
    }
    return e;
}

}  // namespace

CrossedElement multiply(const AlgebraPresentation& pres, const CrossedElement& a,
                        const CrossedElement& b) {
    if (a.nvars != b.nvars || a.ngens != b.ngens || a.nvars != pres.num_vars() ||
        a.ngens != pres.num_generators())
        throw std::invalid_argument("multiply: presentation mismatch");
    CrossedElement r = CrossedElement::zero(pres);
    for (const auto& [beta, c] : a.terms) {
        r = ce_add(r, ce_scale(pres, c, monomial_times(pres, beta, b)));
    }
    return r;
}

CrossedElement ce_pow(const AlgebraPresentation& pres, const CrossedElement& a, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    CrossedElement r = CrossedElement::one(pres);
    for (int t = 0; t < k; ++t) r = multiply(pres, r, a);
    return r;
}

CrossedElement normal_form(const Word& word, const AlgebraPresentation& pres) {
    CrossedElement acc = CrossedElement::one(pres);
    for (const auto& atom : word) {
        CrossedElement next = std::holds_alternative<int>(atom)
                                  ? CrossedElement::generator(pres, std::get<int>(atom))
                                  : CrossedElement::from_coeff(pres, std::get<CommPoly>(atom));
        acc = multiply(pres, acc, next);
    }
    return acc;
}

ExpTuple type_of(const CrossedElement& e, OrderRule rule) {
    if (e.is_zero()) throw std::invalid_argument("type_of: zero element");
    const ExpTuple* best = nullptr;
    for (const auto& [g, c] : e.terms) {
        if (!best || compare(g, *best, rule) == Ordering::Greater) best = &g;
    }
    return *best;
}

std::optional<int> total_degree(const CrossedElement& e) {
    if (e.is_zero()) return std::nullopt;
    int d = 0;
    for (const auto& [g, c] : e.terms) d = std::max(d, tuple_degree(g) + *c.degree());
    return d;
}

ExpTuple filtration_index(const CrossedElement& e) {
    if (e.is_zero()) throw std::invalid_argument("filtration_index: zero element");
    size_t n = static_cast<size_t>(e.ngens);
    ExpTuple idx(n > 0 ? n - 1 : 0, 0);
    for (const auto& [g, c] : e.terms) {
        for (size_t t = 1; t < n; ++t) idx[t - 1] = std::max(idx[t - 1], g[t]);
    }
    return idx;
}

namespace {

void enumerate_tuples(int len, int degree_bound, const std::function<void(const ExpTuple&)>& f) {
    ExpTuple cur(static_cast<size_t>(len), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == len) {
            f(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[static_cast<size_t>(pos)] = e;
            rec(pos + 1, left - e);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(0, degree_bound);
}

bool label_less(const PbwLabel& a, const PbwLabel& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.base != b.base) return lex_compare(a.base, b.base) == Ordering::Less;
    return lex_compare(a.gens, b.gens) == Ordering::Less;
}

}  // namespace

std::vector<PbwLabel> pbw_basis(const AlgebraPresentation& pres, int degree_bound) {
    if (degree_bound < 0) throw std::invalid_argument("pbw_basis: negative bound");
    std::vector<PbwLabel> labels;
    const QuotientPresentation* q = pres.base.quot();
    enumerate_tuples(pres.num_generators(), degree_bound, [&](const ExpTuple& g) {
        int left = degree_bound - tuple_degree(g);
        enumerate_tuples(pres.num_vars(), left, [&](const ExpTuple& b) {
            if (q && b[static_cast<size_t>(q->eliminated_variable)] >= q->leading_exponent) return;
            labels.push_back(PbwLabel{b, g});
        });
    });
    std::sort(labels.begin(), labels.end(), label_less);
    return labels;
}

long pbw_count(const AlgebraPresentation& pres, int degree_bound) {
    if (degree_bound < 0) return 0;
    return static_cast<long>(pbw_basis(pres, degree_bound).size());
}

FreenessReport check_A1_freeness(const AlgebraPresentation& pres, int degree_bound) {
    if (pres.num_generators() < 2)
        throw std::invalid_argument("check_A1_freeness: needs at least two generators");
    FreenessReport rep;
    rep.degree_bound = degree_bound;
    AlgebraPresentation sub = pres.restrict_to_first_generator();
    for (int d = 0; d <= degree_bound; ++d) {
        long lhs = pbw_count(pres, d);
        long rhs = 0;
        enumerate_tuples(pres.num_generators() - 1, d, [&](const ExpTuple& omega) {
            rhs += pbw_count(sub, d - tuple_degree(omega));
        });
        rep.lhs.push_back(lhs);
        rep.rhs.push_back(rhs);
        if (lhs != rhs) rep.pass = false;
    }
    return rep;
}

std::string FreenessReport::str() const {
    std::string s = "verdict = ";
    s += pass ? "pass" : "fail";
    s += "\ndegree-bound = " + std::to_string(degree_bound) + "\n";
    for (size_t d = 0; d < lhs.size(); ++d) {
        s += "dim." + std::to_string(d) + " = " + std::to_string(lhs[d]) + " " +
             std::to_string(rhs[d]) + "\n";
    }
    return s;
}

namespace {

std::string word_str(const Word& w, const AlgebraPresentation& pres) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        if (std::holds_alternative<int>(w[i])) {
            s += AlgebraPresentation::canonical_gen_name(std::get<int>(w[i]));
        } else {
            const CommPoly& p = std::get<CommPoly>(w[i]);
            std::string ps = poly_str(p, pres.base.var_names);
            s += p.terms.size() > 1 ? "(" + ps + ")" : ps;
        }
    }
    return s;
}

int rng_draw(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

CommPoly random_small_poly(std::mt19937_64& rng, const BaseDomain& base) {
    CommPoly p = CommPoly::zero(base.num_vars());
    int nterms = rng_draw(rng, 1, 2);
    for (int t = 0; t < nterms; ++t) {
        ExpTuple e(static_cast<size_t>(base.num_vars()), 0);
        for (auto& x : e) x = rng_draw(rng, 0, 2);
        int num = 0;
        while (num == 0) num = rng_draw(rng, -3, 3);
        p.add_term(e, Rational(num));
    }
    if (p.is_zero()) p = CommPoly::constant(base.num_vars(), Rational(1));
    if (base.quot()) p = reduce(p, *base.quot());
    return p;
}

}  // namespace

ConsistencyReport consistency_check(const AlgebraPresentation& pres, long trials,
                                    std::uint64_t seed) {
    ConsistencyReport rep;
    try {
        pres.lie.validate_jacobi();
    } catch (const std::exception& ex) {
        rep.pass = false;
        rep.note = ex.what();
        return rep;
    }
    const int n = pres.num_generators();
    auto assoc_fail = [&](const Word& w) -> bool {
        if (w.size() < 3) return false;
        // Left fold vs right fold of the same word.
        CrossedElement left = normal_form(w, pres);
        CrossedElement right = std::holds_alternative<int>(w.back())
                                   ? CrossedElement::generator(pres, std::get<int>(w.back()))
                                   : CrossedElement::from_coeff(pres, std::get<CommPoly>(w.back()));
        for (size_t i = w.size() - 1; i-- > 0;) {
            CrossedElement atom = std::holds_alternative<int>(w[i])
                                      ? CrossedElement::generator(pres, std::get<int>(w[i]))
                                      : CrossedElement::from_coeff(pres, std::get<CommPoly>(w[i]));
            right = multiply(pres, atom, right);
        }
        if (left != right) {
            rep.pass = false;
            rep.witness = word_str(w, pres);
            rep.note = "associativity failure";
            return true;
        }
        return false;
    };
    // All generator triples, and triples with one base coefficient inserted.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (assoc_fail({i, j, k})) return rep;
                for (int v = 0; v < pres.num_vars(); ++v) {
                    CommPoly xv = CommPoly::variable(pres.num_vars(), v);
                    if (assoc_fail({i, j, xv})) return rep;
                    if (assoc_fail({i, xv, j})) return rep;
                    if (assoc_fail({xv, i, j})) return rep;
                }
            }
    std::mt19937_64 rng(seed);
    for (long t = 0; t < trials; ++t) {
        int len = rng_draw(rng, 3, 4);
        Word w;
        for (int p = 0; p < len; ++p) {
            if (n > 0 && (pres.num_vars() == 0 || rng_draw(rng, 0, 2) > 0)) {
                w.emplace_back(rng_draw(rng, 0, n - 1));
            } else {
                w.emplace_back(random_small_poly(rng, pres.base));
            }
        }
        if (assoc_fail(w)) return rep;
    }
    return rep;
}

std::string ConsistencyReport::str() const {
    std::string s = "verdict = ";
    s += pass ? "pass" : "fail";
    s += "\n";
    if (!pass) {
        if (!witness.empty()) s += "witness = " + witness + "\n";
        s += "note = " + note + "\n";
    }
    return s;
}

std::string element_str(const CrossedElement& e, const AlgebraPresentation& pres,
                        OrderRule rule) {
    if (e.is_zero()) return "0";
    std::vector<const ExpTuple*> keys;
    for (const auto& [g, c] : e.terms) keys.push_back(&g);
    std::sort(keys.begin(), keys.end(), [&](const ExpTuple* a, const ExpTuple* b) {
        return compare(*a, *b, rule) == Ordering::Greater;
    });
    std::string s;
    bool first = true;
    for (const ExpTuple* g : keys) {
        const CommPoly& c = e.terms.at(*g);
        for (auto it = c.terms.rbegin(); it != c.terms.rend(); ++it) {
            const Rational& k = it->second;
            Rational mag = k.abs();
            if (first) {
                if (k.sign() < 0) s += "-";
                first = false;
            } else {
                s += k.sign() < 0 ? " - " : " + ";
            }
            std::vector<std::string> pieces;
            bool has_mono = tuple_degree(it->first) > 0 || tuple_degree(*g) > 0;
            if (!mag.is_one() || !has_mono) pieces.push_back(mag.str());
            for (size_t i = 0; i < it->first.size(); ++i) {
                if (it->first[i] == 0) continue;
                std::string v = pres.base.var_names.at(i);
                if (it->first[i] > 1) v += "^" + std::to_string(it->first[i]);
                pieces.push_back(v);
            }
            for (size_t i = 0; i < g->size(); ++i) {
                if ((*g)[i] == 0) continue;
                std::string v = AlgebraPresentation::canonical_gen_name(static_cast<int>(i));
                if ((*g)[i] > 1) v += "^" + std::to_string((*g)[i]);
                pieces.push_back(v);
            }
            for (size_t i = 0; i < pieces.size(); ++i) {
                if (i) s += "*";
                s += pieces[i];
            }
        }
    }
    return s;
}

}  // namespace crossprod
