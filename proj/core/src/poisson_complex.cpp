#include "poisson/poisson_complex.hpp"

#include <string>

namespace poisson {

GradedBasis::GradedBasis(int q, int d) : q_(q), d_(d)
{
    if (d < 0)
        throw ContractViolation("negative polynomial degree");
    const int width = wedge_basis_size(q);
    std::size_t offset = 0;
    for (const Monomial& m : monomials_of_degree(d)) {
        monomial_offset_.emplace(m, offset);
        for (int w = 0; w < width; ++w)
            elements_.push_back({w, m});
        offset += static_cast<std::size_t>(width);
    }
}

std::size_t GradedBasis::index_of(int wedge, const Monomial& m) const
{
    auto it = monomial_offset_.find(m);
    if (it == monomial_offset_.end() || wedge < 0 || wedge >= wedge_basis_size(q_))
        throw DegreeViolation("term outside C^" + std::to_string(q_) + "_" + std::to_string(d_));
    return it->second + static_cast<std::size_t>(wedge);
}

MultiVector GradedBasis::element(std::size_t i) const
{
    const Element& e = elements_.at(i);
    MultiVector v(q_);
    v[e.wedge] = Polynomial::term(e.monomial);
    return v;
}

SparseVector GradedBasis::coordinates(const MultiVector& v) const
{
    if (v.is_zero())
        return {};
    if (v.degree() != q_)
        throw DegreeViolation("cochain degree " + std::to_string(v.degree()) + " where " + std::to_string(q_) +
                              " was expected");
    std::vector<SparseVector::Entry> entries;
    for (int w = 0; w < wedge_basis_size(q_); ++w)
        for (const auto& [m, c] : v[w].terms())
            entries.emplace_back(index_of(w, m), c);
    return SparseVector(std::move(entries));
}

MultiVector GradedBasis::multivector(const SparseVector& coords) const
{
    MultiVector v(q_);
    for (const auto& [i, c] : coords.entries()) {
        const Element& e = elements_.at(i);
        v[e.wedge].add_term(e.monomial, c);
    }
    return v;
}

std::optional<MultiVector> planar_generator(const MultiVector& pi)
{
    if (pi.degree() != 2 || !pi[2].is_zero())
        return std::nullopt;
    // X ^ dz = X^y dy^dz + X^x dz^dx  (cyclic slots 0 and 1)
    MultiVector x = MultiVector::vector(-pi[1], pi[0], 0);
    for (const auto& c : x.components())
        if (c.depends_on(Var::z))
            return std::nullopt;
    return x;
}

MultiVector closed_form_differential(const MultiVector& x_pi, const MultiVector& v)
{
    if (x_pi.degree() != 1 || !x_pi[2].is_zero() || x_pi[0].depends_on(Var::z) || x_pi[1].depends_on(Var::z))
        throw ContractViolation("closed form needs a planar z-independent generator");
    const Polynomial& px = x_pi[0];
    const Polynomial& py = x_pi[1];
    auto along = [&](const Polynomial& f) { return px * f.partial(Var::x) + py * f.partial(Var::y); };
    auto dz = [](const Polynomial& f) { return f.partial(Var::z); };

    switch (v.degree()) {
    case 0: {
        // (dz g) X - X(g) dz
        const Polynomial& g = v[0];
        return MultiVector::vector(dz(g) * px, dz(g) * py, -along(g));
    }
    case 1: {
        const Polynomial &vx = v[0], &vy = v[1], &vz = v[2];
        Polynomial wx = along(vy) - vx * py.partial(Var::x) - vy * py.partial(Var::y) + py * dz(vz);
        Polynomial wy = -along(vx) + vx * px.partial(Var::x) + vy * px.partial(Var::y) - px * dz(vz);
        Polynomial wz = px * dz(vy) - py * dz(vx);
        return MultiVector::bivector(wx, wy, wz);
    }
    case 2: {
        const Polynomial &wx = v[0], &wy = v[1], &wz = v[2];
        Polynomial div = px.partial(Var::x) + py.partial(Var::y);
        return MultiVector::trivector(px * dz(wx) + py * dz(wy) + div * wz - along(wz));
    }
    default:
        return MultiVector(v.degree() + 1);
    }
}

SparseMatrix operator_matrix(const std::function<MultiVector(const MultiVector&)>& op, int q, int q_out, int d)
{
    GradedBasis source(q, d);
    GradedBasis target(q_out, d);
    SparseMatrix m(target.size(), source.size());
    for (std::size_t j = 0; j < source.size(); ++j) {
        MultiVector image = op(source.element(j));
        if (!image.is_zero() && !image.is_homogeneous(d))
            throw DegreeViolation("image of a degree-" + std::to_string(d) +
                                  " basis element is not homogeneous of that degree");
        if (q_out > 3)
            continue;
        m.set_column(j, target.coordinates(image));
    }
    return m;
}

DifferentialCell differential_matrix(const MultiVector& pi, int q, int d)
{
    auto op = [&pi](const MultiVector& v) { return poisson_differential(pi, v); };
    return DifferentialCell{q, d, operator_matrix(op, q, q + 1, d)};
}

SparseMatrix rotation_matrix(int q, int d)
{
    const MultiVector t = fields::rotation();
    return operator_matrix([&t](const MultiVector& v) { return lie_derivative(t, v); }, q, q, d);
}

std::vector<SparseVector> invariant_basis(int q, int d)
{
    RowEchelon echelon;
    for (auto& v : rank_kernel(rotation_matrix(q, d)).kernel)
        echelon.insert(std::move(v));
    return echelon.rows();
}

}  // namespace poisson
