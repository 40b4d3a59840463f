#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossprod/element.hpp"

namespace crossprod {

/// A finite PBW basis slice with label lookup.
struct TruncBasis {
    const AlgebraPresentation* pres = nullptr;
    int degree_bound = 0;
    std::vector<PbwLabel> labels;
    std::map<std::pair<ExpTuple, ExpTuple>, int> index;

    static TruncBasis build(const AlgebraPresentation& pres, int degree_bound);
    int size() const { return static_cast<int>(labels.size()); }
};

std::vector<Rational> vectorize(const CrossedElement& e, const TruncBasis& basis);
CrossedElement unvectorize(const std::vector<Rational>& v, const TruncBasis& basis);

struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<Rational>> a;

    static RatMatrix zero(int rows, int cols);
    static RatMatrix identity(int n);
    Rational& at(int r, int c) { return a[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
    const Rational& at(int r, int c) const {
        return a[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
};

struct RrefResult {
    RatMatrix m;
    std::vector<int> pivots;  // pivot column per pivot row
    int rank = 0;
};

/// Reduced row echelon form, exact, deterministic pivoting: leftmost column,
/// then smallest row index.
RrefResult rref(RatMatrix m);

/// Solves M x = b; particular solution with free variables zero, or nullopt.
std::optional<std::vector<Rational>> solve_linear(const RatMatrix& m,
                                                  const std::vector<Rational>& b);

/// Basis of the nullspace of M, one vector per free column, deterministic.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& m);

struct SolveReport {
    enum class Status { Solved, NoSolutionAtBound };
    Status status = Status::NoSolutionAtBound;
    std::vector<CrossedElement> cofactors;  // right cofactors, one per generator
    int rank = 0, rank_augmented = 0;
    int cofactor_bound = 0;

    bool solved() const { return status == Status::Solved; }
};

/// Finds right cofactors c_i of degree <= bound with sum g_i * c_i = target.
/// Solved reports re-verify by exact multiplication before being returned; a
/// negative answer is definitive only at the bound.
SolveReport right_combination_solve(const std::vector<CrossedElement>& gens,
                                    const CrossedElement& target, int cofactor_bound,
                                    const AlgebraPresentation& pres);

/// Basis of { (s, t) : a s + b t = 0, deg s, deg t <= bound }. Every returned
/// pair re-verifies exactly.
std::vector<std::pair<CrossedElement, CrossedElement>> syzygy_basis(
    const CrossedElement& a, const CrossedElement& b, int degree_bound,
    const AlgebraPresentation& pres);

/// Exact dimension of the degree-<= d slices of the right ideal generated by
/// span_gens within the cofactor bound, for every d <= degree_cap.
std::map<int, long> filtered_dim(const std::vector<CrossedElement>& span_gens,
                                 int right_cofactor_bound, int degree_cap,
                                 const AlgebraPresentation& pres);

/// Exact slice dimensions of a*B intersect b*B. Under degree additivity every
/// element of a*B of degree <= d is a single product a*s with deg s = d - deg a,
/// so the slices are computed without any cofactor-bound caveat:
/// dim(U cap W) = dim U + dim W - dim(U + W).
std::map<int, long> intersection_dims(const CrossedElement& a, const CrossedElement& b,
                                      int degree_cap, const AlgebraPresentation& pres);

}  // namespace crossprod
