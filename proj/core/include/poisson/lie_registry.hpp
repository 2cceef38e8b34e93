#pragma once

#include "poisson/multivector.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace poisson {

/// The real three-dimensional Lie algebras, one tag per isomorphism class
/// (open book and hyperbolic types share the `book` tag and differ in tau).
enum class AlgebraTag { abelian, heisenberg, aff_x_r, euclidean, book, semi_open_book, spiral, sl2, so3 };

class AlgebraKind {
public:
    /// Throws ParameterError if tau is missing, superfluous or out of range:
    /// book needs 0 < |tau| <= 1, spiral needs tau > 0.
    AlgebraKind(AlgebraTag tag, std::optional<Rational> tau = std::nullopt);

    /// Parses an algebra name plus an optional tau string ("p/q" or integer).
    static AlgebraKind parse(std::string_view name, std::optional<std::string_view> tau);

    AlgebraTag tag() const { return tag_; }
    const std::optional<Rational>& tau() const { return tau_; }
    std::string name() const;
    /// e.g. "book(tau=-2/3)".
    std::string label() const;

    /// For hyperbolic books (tau = -p/q, gcd(p,q) = 1, p <= q) the pair (p, q).
    std::optional<std::pair<long, long>> hyperbolic_pq() const;

    friend bool operator==(const AlgebraKind&, const AlgebraKind&) = default;

private:
    AlgebraTag tag_;
    std::optional<Rational> tau_;
};

std::string_view tag_name(AlgebraTag tag);
std::optional<AlgebraTag> tag_from_name(std::string_view name);
bool tag_needs_tau(AlgebraTag tag);
const std::vector<AlgebraTag>& all_tags();

/// [e_i, e_j] = sum_k c^k_ij e_k for i < j, stored as c[pair][k] with pairs
/// ordered (1,2), (1,3), (2,3).
struct StructureConstants {
    std::array<std::array<Rational, 3>, 3> c{};

    /// c^k_ij with 1-based indices and antisymmetry applied; 0 when i == j.
    Rational at(int i, int j, int k) const;
    void set(int i, int j, int k, const Rational& value);
};

StructureConstants structure_constants(const AlgebraKind& kind);

/// pi = sum_{i<j} (sum_k c^k_ij x_k) d_i ^ d_j.
MultiVector linear_poisson(const StructureConstants& sc);

/// [pi, pi]; zero iff the constants satisfy the Jacobi identity.
MultiVector jacobi_defect(const StructureConstants& sc);

inline MultiVector linear_poisson(const AlgebraKind& kind) { return linear_poisson(structure_constants(kind)); }

}  // namespace poisson
