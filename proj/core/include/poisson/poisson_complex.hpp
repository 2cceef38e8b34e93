#pragma once

#include "poisson/multivector.hpp"
#include "poisson/sparse.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace poisson {

/// Raised when an image leaves the homogeneous piece it should stay in,
/// which signals a non-linear bivector.
class DegreeViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ordered basis of the homogeneous piece C^q_d: monomial m times wedge
/// basis element w, sorted by m (leading first) and then w.
class GradedBasis {
public:
    struct Element {
        int wedge;
        Monomial monomial;
    };

    GradedBasis(int q, int d);

    int q() const { return q_; }
    int d() const { return d_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Element>& elements() const { return elements_; }
    std::size_t index_of(int wedge, const Monomial& m) const;

    MultiVector element(std::size_t i) const;
    /// Coordinates of v. Throws DegreeViolation if v is not in C^q_d.
    SparseVector coordinates(const MultiVector& v) const;
    MultiVector multivector(const SparseVector& coords) const;

private:
    int q_, d_;
    std::vector<Element> elements_;
    std::map<Monomial, std::size_t, LeadingFirst> monomial_offset_;
};

inline GradedBasis homogeneous_basis(int q, int d) { return GradedBasis(q, d); }

/// Matrix of d_pi : C^q_d -> C^{q+1}_d.
struct DifferentialCell {
    int q = 0;
    int d = 0;
    SparseMatrix matrix;
};

/// d_pi V = [pi, V].
inline MultiVector poisson_differential(const MultiVector& pi, const MultiVector& v) { return schouten_bracket(pi, v); }

/// If pi = X ^ dz with X a planar vector field independent of z, returns X.
std::optional<MultiVector> planar_generator(const MultiVector& pi);

/// The differential of pi = X ^ dz written out componentwise in terms of
/// X, Lie derivatives and partials (the explicit formulas for functions,
/// vector fields and bivectors). Independent of the Schouten bracket code.
/// Throws ContractViolation if x_pi is not planar and z-independent.
MultiVector closed_form_differential(const MultiVector& x_pi, const MultiVector& v);

/// Matrix of any degree-preserving operator C^q_d -> C^{q_out}_d.
SparseMatrix operator_matrix(const std::function<MultiVector(const MultiVector&)>& op, int q, int q_out, int d);

DifferentialCell differential_matrix(const MultiVector& pi, int q, int d);

/// Matrix of L_T = [T, .] on C^q_d, T = -y dx + x dy.
SparseMatrix rotation_matrix(int q, int d);

/// Basis of the rotation-invariant part of C^q_d, in coordinates of
/// GradedBasis(q, d), fully row-reduced.
std::vector<SparseVector> invariant_basis(int q, int d);

}  // namespace poisson
