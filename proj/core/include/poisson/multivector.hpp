#pragma once

#include "poisson/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace poisson {

/// Raised when an operation is applied outside its contract (wrong cochain
/// degree, mismatched shapes).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// binomial(3, q); 0 outside 0..3.
int wedge_basis_size(int q);

/// Multivector field on R^3 of a fixed cochain degree.
///
/// Components follow the wedge basis
///   q = 0: 1
///   q = 1: dx, dy, dz
///   q = 2: dy^dz, dz^dx, dx^dy      (cyclic; W^x, W^y, W^z)
///   q = 3: dx^dy^dz
/// Degrees above 3 are allowed as formal zero results of wedge/bracket.
class MultiVector {
public:
    explicit MultiVector(int degree = 0);
    MultiVector(int degree, std::vector<Polynomial> components);

    static MultiVector scalar(const Polynomial& f) { return MultiVector(0, {f}); }
    static MultiVector vector(const Polynomial& x, const Polynomial& y, const Polynomial& z)
    {
        return MultiVector(1, {x, y, z});
    }
    /// Bivector from its cyclic components (W^x, W^y, W^z).
    static MultiVector bivector(const Polynomial& wx, const Polynomial& wy, const Polynomial& wz)
    {
        return MultiVector(2, {wx, wy, wz});
    }
    static MultiVector trivector(const Polynomial& h) { return MultiVector(3, {h}); }
    /// Basis element `index` of degree q with coefficient 1.
    static MultiVector basis(int q, int index);

    int degree() const { return degree_; }
    const std::vector<Polynomial>& components() const { return components_; }
    const Polynomial& operator[](int i) const { return components_.at(static_cast<std::size_t>(i)); }
    Polynomial& operator[](int i) { return components_.at(static_cast<std::size_t>(i)); }

    bool is_zero() const;
    /// Every component homogeneous of polynomial degree d (zero counts).
    bool is_homogeneous(int d) const;
    /// Largest polynomial degree over components; -1 if zero.
    int poly_degree() const;

    MultiVector& operator+=(const MultiVector& other);
    MultiVector& operator-=(const MultiVector& other);

    friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
    friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
    friend MultiVector operator-(MultiVector a);
    friend MultiVector operator*(const Polynomial& f, MultiVector a);
    friend MultiVector operator*(const Rational& c, MultiVector a) { return Polynomial(c) * std::move(a); }
    friend bool operator==(const MultiVector& a, const MultiVector& b);

private:
    int degree_;
    std::vector<Polynomial> components_;
};

/// Sign-aware access to the wedge basis: dx_i for i in `vars` (sorted or not)
/// expressed as (component index, sign). Index -1 when the wedge vanishes.
struct BasisSlot {
    int index;
    int sign;
};
BasisSlot wedge_slot(const std::vector<Var>& vars);

MultiVector wedge(const MultiVector& a, const MultiVector& b);

/// Schouten-Nijenhuis bracket. The convention extends the Lie bracket of
/// vector fields, has [X, f] = X(f), and gives
///   [X ^ Y, f] = Y(f) X - X(f) Y,
/// so that [z dx^dy, g] = z g_y dx - z g_x dy.
MultiVector schouten_bracket(const MultiVector& a, const MultiVector& b);

/// Componentwise Lie derivative along a vector field: L_X V = [X, V].
inline MultiVector lie_derivative(const MultiVector& x, const MultiVector& v) { return schouten_bracket(x, v); }

std::vector<Rational> evaluate(const MultiVector& v, const RationalPoint& pt);

/// Divergence with respect to dx^dy^dz. Requires degree 1.
Polynomial divergence(const MultiVector& x);

/// Hamiltonian vector field X_g = -[pi, g] (so that X_g = pi^#(dg)).
MultiVector hamiltonian_vector_field(const MultiVector& pi, const Polynomial& g);

/// Vector field X_mu with X_mu(g) = div(X_g) for all g. Requires degree 2.
MultiVector modular_vector_field(const MultiVector& pi);

/// Applies a polynomial map to every component.
template <class F>
MultiVector map_components(const MultiVector& v, F&& f)
{
    std::vector<Polynomial> out;
    out.reserve(v.components().size());
    for (const auto& c : v.components())
        out.push_back(f(c));
    return MultiVector(v.degree(), std::move(out));
}

// Fields that show up all over the place.
namespace fields {
MultiVector euler_plane();        // E = x dx + y dy
MultiVector rotation();           // T = -y dx + x dy
MultiVector euler_space();        // x dx + y dy + z dz
MultiVector euler_weighted(const Rational& tau);  // x dx + tau y dy
MultiVector d(Var v);             // dx, dy or dz
}  // namespace fields

}  // namespace poisson
