#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crossprod/poly.hpp"

namespace crossprod {

/// Lie data of the crossed product: bracket structure constants and cocycle
/// terms, stored for i < j only (antisymmetry implicit).
///   [g_i, g_j] = sum_k c * g_k  +  a_ij,   a_ij in A.
struct LiePresentation {
    std::vector<std::string> generator_names;  // declared names; canonical g1..gn always parse
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rational>>> brackets;  // 0-based
    std::map<std::pair<int, int>, CommPoly> cocycles;

    int n() const { return static_cast<int>(generator_names.size()); }
    std::vector<std::pair<int, Rational>> bracket(int i, int j) const;  // any i != j, sign handled
    CommPoly cocycle(int i, int j, int nvars) const;

    /// Exact Jacobi identity on the structure constants; throws with the
    /// offending triple on failure.
    void validate_jacobi() const;
};

/// One derivation of A per generator.
struct DerivationTable {
    std::vector<DerivationSpec> deltas;
};

/// The input artifact defining B = A * U(G).
struct AlgebraPresentation {
    BaseDomain base;
    LiePresentation lie;
    DerivationTable derivations;

    int num_generators() const { return lie.n(); }
    int num_vars() const { return base.num_vars(); }

    /// Canonical generator name "g<k>", 1-based.
    static std::string canonical_gen_name(int i) { return "g" + std::to_string(i + 1); }

    /// Structural validation: shapes, monic relation, Jacobi. Associativity is
    /// the consistency_check operation's job.
    void validate() const;

    /// Canonical single-file serialization; hashing and certificates bind to it.
    std::string canonical_text() const;
    std::string content_hash() const;

    /// The Ore subalgebra on the first generator, as its own presentation.
    AlgebraPresentation restrict_to_first_generator() const;

    static AlgebraPresentation parse(const std::string& text);

    /// Built-ins: weyl, weyl-ext-abelian, heisenberg, heisenberg-ext,
    /// sphere:<n>, poly:<m>. Returns empty optional for unknown names.
    static AlgebraPresentation preset(const std::string& name);
    static bool is_preset_name(const std::string& name);

    /// Loads a preset by name or a presentation file by path.
    static AlgebraPresentation load(const std::string& name_or_path);
};

/// FNV-1a 64-bit, fixed and documented so certificates are portable.
std::uint64_t fnv1a(const std::string& bytes);
std::string fnv1a_hex(const std::string& bytes);

}  // namespace crossprod
