#include "crossprod/poly.hpp"

#include <stdexcept>

namespace crossprod {

CommPoly CommPoly::constant(int nvars, const Rational& c) {
    CommPoly p{nvars, {}};
    if (!c.is_zero()) p.terms.emplace(ExpTuple(static_cast<size_t>(nvars), 0), c);
    return p;
}

CommPoly CommPoly::monomial(ExpTuple exp, const Rational& c) {
    CommPoly p{static_cast<int>(exp.size()), {}};
    if (!c.is_zero()) p.terms.emplace(std::move(exp), c);
    return p;
}

CommPoly CommPoly::variable(int nvars, int var_index) {
    ExpTuple e(static_cast<size_t>(nvars), 0);
    e.at(static_cast<size_t>(var_index)) = 1;
    return monomial(std::move(e), Rational(1));
}

bool CommPoly::is_one() const {
    return terms.size() == 1 && tuple_degree(terms.begin()->first) == 0 &&
           terms.begin()->second.is_one();
}

bool CommPoly::is_constant() const {
    return terms.empty() || (terms.size() == 1 && tuple_degree(terms.begin()->first) == 0);
}

std::optional<int> CommPoly::degree() const {
    if (terms.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, tuple_degree(e));
    return d;
}

std::optional<int> CommPoly::degree_in(int var_index) const {
    if (terms.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, e.at(static_cast<size_t>(var_index)));
    return d;
}

void CommPoly::add_term(const ExpTuple& exp, const Rational& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(exp.size()) != nvars)
        throw std::invalid_argument("CommPoly: exponent length mismatch");
    auto it = terms.find(exp);
    if (it == terms.end()) {
        terms.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool operator==(const CommPoly& a, const CommPoly& b) {
    return a.nvars == b.nvars && a.terms == b.terms;
}

CommPoly add(const CommPoly& a, const CommPoly& b) {
    if (a.nvars != b.nvars) throw std::invalid_argument("CommPoly add: variable-count mismatch");
    CommPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

CommPoly neg(const CommPoly& a) {
    CommPoly r{a.nvars, {}};
    for (const auto& [e, c] : a.terms) r.terms.emplace(e, -c);
    return r;
}

CommPoly sub(const CommPoly& a, const CommPoly& b) { return add(a, neg(b)); }

CommPoly scale(const CommPoly& a, const Rational& c) {
    CommPoly r{a.nvars, {}};
    if (c.is_zero()) return r;
    for (const auto& [e, k] : a.terms) r.terms.emplace(e, k * c);
    return r;
}

void QuotientPresentation::validate() const {
    if (leading_exponent <= 0)
        throw std::invalid_argument("QuotientPresentation: leading exponent must be positive");
    if (eliminated_variable < 0 || eliminated_variable >= relation.nvars)
        throw std::invalid_argument("QuotientPresentation: eliminated variable out of range");
    // The coefficient of (eliminated var)^leading_exponent must be the constant 1,
    // and no term may exceed that power.
    CommPoly lead = CommPoly::zero(relation.nvars);
    for (const auto& [e, c] : relation.terms) {
        int k = e.at(static_cast<size_t>(eliminated_variable));
        if (k > leading_exponent)
            throw std::invalid_argument("QuotientPresentation: relation degree exceeds leading exponent");
        if (k == leading_exponent) {
            ExpTuple rest = e;
            rest[static_cast<size_t>(eliminated_variable)] = 0;
            lead.add_term(rest, c);
        }
    }
    if (!lead.is_one())
        throw std::invalid_argument("QuotientPresentation: relation is not monic in the eliminated variable");
}

CommPoly reduce(const CommPoly& p, const QuotientPresentation& q) {
    const int ev = q.eliminated_variable;
    const int L = q.leading_exponent;
    // Rewrite rule x_ev^L -> x_ev^L - relation (the lower-order part).
    ExpTuple top(static_cast<size_t>(p.nvars), 0);
    top[static_cast<size_t>(ev)] = L;
    const CommPoly lower = sub(CommPoly::monomial(std::move(top), Rational(1)), q.relation);
    CommPoly out = CommPoly::zero(p.nvars);
    CommPoly work = p;
    while (!work.terms.empty()) {
        CommPoly next = CommPoly::zero(p.nvars);
        for (const auto& [e, c] : work.terms) {
            int k = e.at(static_cast<size_t>(ev));
            if (k < L) {
                out.add_term(e, c);
                continue;
            }
            ExpTuple rest = e;
            rest[static_cast<size_t>(ev)] = k - L;
            // c * x^rest * lower; every produced term has strictly smaller
            // exponent in the eliminated variable, so this terminates.
            for (const auto& [le, lc] : lower.terms) {
                next.add_term(tuple_add(rest, le), c * lc);
            }
        }
        work = std::move(next);
    }
    return out;
}

CommPoly mul(const CommPoly& a, const CommPoly& b, const QuotientPresentation* q) {
    if (a.nvars != b.nvars) throw std::invalid_argument("CommPoly mul: variable-count mismatch");
    CommPoly r{a.nvars, {}};
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            r.add_term(tuple_add(ea, eb), ca * cb);
        }
    }
    if (q) r = reduce(r, *q);
    return r;
}

DerivationSpec DerivationSpec::zero(int nvars) {
    DerivationSpec d;
    d.images.assign(static_cast<size_t>(nvars), CommPoly::zero(nvars));
    return d;
}

bool DerivationSpec::is_zero() const {
    for (const auto& im : images)
        if (!im.is_zero()) return false;
    return true;
}

CommPoly apply_derivation(const DerivationSpec& d, const CommPoly& p,
                          const QuotientPresentation* q) {
    if (static_cast<int>(d.images.size()) != p.nvars)
        throw std::invalid_argument("apply_derivation: derivation not defined on all variables");
    CommPoly r = CommPoly::zero(p.nvars);
    for (const auto& [e, c] : p.terms) {
        for (int i = 0; i < p.nvars; ++i) {
            int k = e[static_cast<size_t>(i)];
            if (k == 0 || d.images[static_cast<size_t>(i)].is_zero()) continue;
            ExpTuple m = e;
            m[static_cast<size_t>(i)] = k - 1;
            CommPoly piece = mul(CommPoly::monomial(std::move(m), c * Rational(k)),
                                 d.images[static_cast<size_t>(i)], q);
            r = add(r, piece);
        }
    }
    if (q) r = reduce(r, *q);
    return r;
}

bool operator==(const BaseDomain& a, const BaseDomain& b) {
    if (a.var_names != b.var_names) return false;
    if (a.quotient.has_value() != b.quotient.has_value()) return false;
    if (!a.quotient) return true;
    return a.quotient->relation == b.quotient->relation &&
           a.quotient->eliminated_variable == b.quotient->eliminated_variable &&
           a.quotient->leading_exponent == b.quotient->leading_exponent;
}

std::string poly_str(const CommPoly& p, const std::vector<std::string>& var_names) {
    if (p.terms.empty()) return "0";
    std::string s;
    bool first = true;
    // Graded-lex descending: reverse of storage order.
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const ExpTuple& e = it->first;
        const Rational& c = it->second;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) s += "-";
            first = false;
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        std::vector<std::string> pieces;
        if (!mag.is_one() || tuple_degree(e) == 0) pieces.push_back(mag.str());
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            std::string v = var_names.at(i);
            if (e[i] > 1) v += "^" + std::to_string(e[i]);
            pieces.push_back(v);
        }
        for (size_t i = 0; i < pieces.size(); ++i) {
            if (i) s += "*";
            s += pieces[i];
        }
    }
    return s;
}

}  // namespace crossprod
