#include "crossprod/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace crossprod {

TruncBasis TruncBasis::build(const AlgebraPresentation& pres, int degree_bound) {
    TruncBasis b;
    b.pres = &pres;
    b.degree_bound = degree_bound;
    b.labels = pbw_basis(pres, degree_bound);
    for (int i = 0; i < static_cast<int>(b.labels.size()); ++i) {
        b.index.emplace(std::make_pair(b.labels[static_cast<size_t>(i)].base,
                                       b.labels[static_cast<size_t>(i)].gens),
                        i);
    }
    return b;
}

std::vector<Rational> vectorize(const CrossedElement& e, const TruncBasis& basis) {
    std::vector<Rational> v(static_cast<size_t>(basis.size()), Rational(0));
    for (const auto& [g, c] : e.terms) {
        for (const auto& [be, k] : c.terms) {
            auto it = basis.index.find(std::make_pair(be, g));
            if (it == basis.index.end())
                throw std::invalid_argument("vectorize: element exceeds the basis bound");
            v[static_cast<size_t>(it->second)] = k;
        }
    }
    return v;
}

CrossedElement unvectorize(const std::vector<Rational>& v, const TruncBasis& basis) {
    CrossedElement e = CrossedElement::zero(*basis.pres);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const PbwLabel& label = basis.labels[i];
        e.add_term(label.gens, CommPoly::monomial(label.base, v[i]));
    }
    return e;
}

RatMatrix RatMatrix::zero(int rows, int cols) {
    RatMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(static_cast<size_t>(rows), std::vector<Rational>(static_cast<size_t>(cols)));
    return m;
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m = zero(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RrefResult rref(RatMatrix m) {
    RrefResult r;
    int lead = 0;
    for (int col = 0; col < m.cols && lead < m.rows; ++col) {
        int piv = -1;
        for (int row = lead; row < m.rows; ++row) {
            if (!m.at(row, col).is_zero()) {
                piv = row;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(m.a[static_cast<size_t>(piv)], m.a[static_cast<size_t>(lead)]);
        Rational inv = Rational(1) / m.at(lead, col);
        for (int c = col; c < m.cols; ++c) {
            if (!m.at(lead, c).is_zero()) m.at(lead, c) *= inv;
        }
        for (int row = 0; row < m.rows; ++row) {
            if (row == lead || m.at(row, col).is_zero()) continue;
            Rational f = m.at(row, col);
            for (int c = col; c < m.cols; ++c) {
                if (m.at(lead, c).is_zero()) continue;
                m.at(row, c) -= f * m.at(lead, c);
            }
        }
        r.pivots.push_back(col);
        ++lead;
    }
    r.rank = static_cast<int>(r.pivots.size());
    r.m = std::move(m);
    return r;
}

std::optional<std::vector<Rational>> solve_linear(const RatMatrix& m,
                                                  const std::vector<Rational>& b) {
    RatMatrix aug = RatMatrix::zero(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[static_cast<size_t>(r)];
    }
    RrefResult rr = rref(std::move(aug));
    for (int p : rr.pivots) {
        if (p == m.cols) return std::nullopt;  // inconsistent
    }
    std::vector<Rational> x(static_cast<size_t>(m.cols), Rational(0));
    for (size_t i = 0; i < rr.pivots.size(); ++i) {
        x[static_cast<size_t>(rr.pivots[i])] = rr.m.at(static_cast<int>(i), m.cols);
    }
    return x;
}

std::vector<std::vector<Rational>> nullspace(const RatMatrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int p : rr.pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Rational> v(static_cast<size_t>(m.cols), Rational(0));
        v[static_cast<size_t>(f)] = Rational(1);
        for (size_t i = 0; i < rr.pivots.size(); ++i) {
            v[static_cast<size_t>(rr.pivots[i])] = -rr.m.at(static_cast<int>(i), f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

struct ProductColumns {
    TruncBasis basis;                         // the ambient slice
    std::vector<PbwLabel> cof_labels;         // cofactor monomials per generator
    std::vector<CrossedElement> products;     // gen_i * label, flattened
    std::vector<int> gen_of, label_of;        // provenance of each column
};

CrossedElement label_element(const AlgebraPresentation& pres, const PbwLabel& label) {
    CrossedElement e = CrossedElement::zero(pres);
    e.add_term(label.gens, CommPoly::monomial(label.base, Rational(1)));
    return e;
}

ProductColumns build_products(const std::vector<CrossedElement>& gens, int cofactor_bound,
                              int ambient_bound, const AlgebraPresentation& pres) {
    ProductColumns pc;
    pc.basis = TruncBasis::build(pres, ambient_bound);
    pc.cof_labels = pbw_basis(pres, cofactor_bound);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        for (size_t li = 0; li < pc.cof_labels.size(); ++li) {
            CrossedElement prod =
                multiply(pres, gens[gi], label_element(pres, pc.cof_labels[li]));
            pc.products.push_back(std::move(prod));
            pc.gen_of.push_back(static_cast<int>(gi));
            pc.label_of.push_back(static_cast<int>(li));
        }
    }
    return pc;
}

}  // namespace

SolveReport right_combination_solve(const std::vector<CrossedElement>& gens,
                                    const CrossedElement& target, int cofactor_bound,
                                    const AlgebraPresentation& pres) {
    SolveReport rep;
    rep.cofactor_bound = cofactor_bound;
    int maxg = 0;
    for (const auto& g : gens) {
        auto d = total_degree(g);
        if (d) maxg = std::max(maxg, *d);
    }
    int ambient = maxg + cofactor_bound;
    if (auto dt = total_degree(target)) ambient = std::max(ambient, *dt);
    ProductColumns pc = build_products(gens, cofactor_bound, ambient, pres);
    RatMatrix m = RatMatrix::zero(pc.basis.size(), static_cast<int>(pc.products.size()));
    for (int c = 0; c < m.cols; ++c) {
        auto v = vectorize(pc.products[static_cast<size_t>(c)], pc.basis);
        for (int r = 0; r < m.rows; ++r) m.at(r, c) = v[static_cast<size_t>(r)];
    }
    auto bvec = vectorize(target, pc.basis);
    auto sol = solve_linear(m, bvec);
    {
        RrefResult rr = rref(m);
        rep.rank = rr.rank;
        rep.rank_augmented = rr.rank + (sol ? 0 : 1);
    }
    if (!sol) {
        rep.status = SolveReport::Status::NoSolutionAtBound;
        return rep;
    }
    rep.cofactors.assign(gens.size(), CrossedElement::zero(pres));
    for (size_t c = 0; c < sol->size(); ++c) {
        if ((*sol)[c].is_zero()) continue;
        const PbwLabel& label = pc.cof_labels[static_cast<size_t>(pc.label_of[c])];
        rep.cofactors[static_cast<size_t>(pc.gen_of[c])].add_term(
            label.gens, CommPoly::monomial(label.base, (*sol)[c]));
    }
    // Re-verify by exact multiplication; a solved report never lies.
    CrossedElement check = CrossedElement::zero(pres);
    for (size_t i = 0; i < gens.size(); ++i)
        check = ce_add(check, multiply(pres, gens[i], rep.cofactors[i]));
    if (check != target) throw std::logic_error("right_combination_solve: verification failed");
    rep.status = SolveReport::Status::Solved;
    return rep;
}

std::vector<std::pair<CrossedElement, CrossedElement>> syzygy_basis(
    const CrossedElement& a, const CrossedElement& b, int degree_bound,
    const AlgebraPresentation& pres) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("syzygy_basis: zero input");
    int maxg = std::max(*total_degree(a), *total_degree(b));
    int ambient = maxg + degree_bound;
    TruncBasis basis = TruncBasis::build(pres, ambient);
    std::vector<PbwLabel> cof = pbw_basis(pres, degree_bound);
    int k = static_cast<int>(cof.size());
    RatMatrix m = RatMatrix::zero(basis.size(), 2 * k);
    for (int c = 0; c < k; ++c) {
        auto va = vectorize(multiply(pres, a, label_element(pres, cof[static_cast<size_t>(c)])),
                            basis);
        auto vb = vectorize(multiply(pres, b, label_element(pres, cof[static_cast<size_t>(c)])),
                            basis);
        for (int r = 0; r < m.rows; ++r) {
            m.at(r, c) = va[static_cast<size_t>(r)];
            m.at(r, k + c) = vb[static_cast<size_t>(r)];
        }
    }
    std::vector<std::pair<CrossedElement, CrossedElement>> out;
    for (const auto& v : nullspace(m)) {
        CrossedElement s = CrossedElement::zero(pres), t = CrossedElement::zero(pres);
        for (int c = 0; c < k; ++c) {
            const PbwLabel& label = cof[static_cast<size_t>(c)];
            if (!v[static_cast<size_t>(c)].is_zero())
                s.add_term(label.gens, CommPoly::monomial(label.base, v[static_cast<size_t>(c)]));
            if (!v[static_cast<size_t>(k + c)].is_zero())
                t.add_term(label.gens,
                           CommPoly::monomial(label.base, v[static_cast<size_t>(k + c)]));
        }
        CrossedElement check = ce_add(multiply(pres, a, s), multiply(pres, b, t));
        if (!check.is_zero()) throw std::logic_error("syzygy_basis: verification failed");
        out.emplace_back(std::move(s), std::move(t));
    }
    return out;
}

std::map<int, long> filtered_dim(const std::vector<CrossedElement>& span_gens,
                                 int right_cofactor_bound, int degree_cap,
                                 const AlgebraPresentation& pres) {
    std::map<int, long> dims;
    for (int d = 0; d <= degree_cap; ++d) dims[d] = 0;
    if (span_gens.empty()) return dims;
    int maxg = 0;
    for (const auto& g : span_gens) {
        auto d = total_degree(g);
        if (d) maxg = std::max(maxg, *d);
    }
    int ambient = maxg + right_cofactor_bound;
    ProductColumns pc = build_products(span_gens, right_cofactor_bound, ambient, pres);
    // Rows are the products, columns the basis labels sorted by degree
    // descending; a row-echelon pivot inside the <= d suffix then witnesses one
    // dimension of the degree-<= d slice.
    std::vector<int> order(static_cast<size_t>(pc.basis.size()));
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return pc.basis.labels[static_cast<size_t>(x)].degree() >
               pc.basis.labels[static_cast<size_t>(y)].degree();
    });
    RatMatrix m = RatMatrix::zero(static_cast<int>(pc.products.size()), pc.basis.size());
    for (int r = 0; r < m.rows; ++r) {
        auto v = vectorize(pc.products[static_cast<size_t>(r)], pc.basis);
        for (int c = 0; c < m.cols; ++c)
            m.at(r, c) = v[static_cast<size_t>(order[static_cast<size_t>(c)])];
    }
    RrefResult rr = rref(std::move(m));
    for (int p : rr.pivots) {
        int deg = pc.basis.labels[static_cast<size_t>(order[static_cast<size_t>(p)])].degree();
        for (int d = deg; d <= degree_cap; ++d) ++dims[d];
    }
    return dims;
}

std::map<int, long> intersection_dims(const CrossedElement& a, const CrossedElement& b,
                                      int degree_cap, const AlgebraPresentation& pres) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("intersection_dims: zero input");
    const int da = *total_degree(a);
    const int db = *total_degree(b);
    TruncBasis basis = TruncBasis::build(pres, degree_cap);
    auto fill = [&](const CrossedElement& g, int dg, int d, RatMatrix& m, int row0) {
        if (d < dg) return;
        auto labels = pbw_basis(pres, d - dg);
        for (size_t i = 0; i < labels.size(); ++i) {
            auto v = vectorize(multiply(pres, g, label_element(pres, labels[i])), basis);
            for (int c = 0; c < m.cols; ++c)
                m.at(row0 + static_cast<int>(i), c) = v[static_cast<size_t>(c)];
        }
    };
    std::map<int, long> dims;
    for (int d = 0; d <= degree_cap; ++d) {
        long ra = d >= da ? pbw_count(pres, d - da) : 0;
        long rb = d >= db ? pbw_count(pres, d - db) : 0;
        if (ra == 0 || rb == 0) {
            dims[d] = 0;
            continue;
        }
        RatMatrix ma = RatMatrix::zero(static_cast<int>(ra), basis.size());
        fill(a, da, d, ma, 0);
        RatMatrix mb = RatMatrix::zero(static_cast<int>(rb), basis.size());
        fill(b, db, d, mb, 0);
        RatMatrix msum = RatMatrix::zero(static_cast<int>(ra + rb), basis.size());
        fill(a, da, d, msum, 0);
        fill(b, db, d, msum, static_cast<int>(ra));
        long dim_u = rref(std::move(ma)).rank;
        long dim_w = rref(std::move(mb)).rank;
        long dim_sum = rref(std::move(msum)).rank;
        dims[d] = dim_u + dim_w - dim_sum;
    }
    return dims;
}

}  // namespace crossprod
