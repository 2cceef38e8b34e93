#include "poisson/cohomology.hpp"

#include <stdexcept>

namespace poisson {
namespace {

// A piece of a (sub)complex in degree q: its basis as ambient coordinates
// (empty optional = the whole of C^q_d) and the differential restricted to it.
struct Piece {
    std::optional<std::vector<SparseVector>> basis;
    std::size_t dim = 0;
    SparseMatrix differential;  // ambient C^{q+1}_d  <-  piece coordinates
};

Piece full_piece(const MultiVector& pi, int q, int d)
{
    SparseMatrix m = differential_matrix(pi, q, d).matrix;
    const std::size_t dim = m.cols();
    return Piece{std::nullopt, dim, std::move(m)};
}

Piece invariant_piece(const MultiVector& pi, int q, int d)
{
    std::vector<SparseVector> basis = invariant_basis(q, d);
    SparseMatrix full = differential_matrix(pi, q, d).matrix;
    SparseMatrix restricted(full.rows(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        restricted.set_column(j, full * basis[j]);
    const std::size_t dim = basis.size();
    return Piece{std::move(basis), dim, std::move(restricted)};
}

SparseVector to_ambient(const Piece& piece, const SparseVector& local)
{
    if (!piece.basis)
        return local;
    SparseVector out;
    for (const auto& [j, c] : local.entries())
        out.axpy(c, (*piece.basis)[j]);
    return out;
}

RowEchelon image_of(const Piece& piece)
{
    RowEchelon echelon;
    for (std::size_t j = 0; j < piece.differential.cols(); ++j)
        echelon.insert(piece.differential.column(j));
    return echelon;
}

CohomologyCell assemble(int q, int d, const Piece& here, const RowEchelon& image_in)
{
    CohomologyCell cell;
    cell.q = q;
    cell.d = d;
    cell.dim_cochains = here.dim;
    RankKernel rk = rank_kernel(here.differential);
    cell.rank_out = rk.rank;
    cell.rank_in = image_in.rank();
    if (rk.kernel.size() < cell.rank_in)
        throw ContractViolation("image larger than kernel: d_pi does not square to zero");
    cell.dim_h = rk.kernel.size() - cell.rank_in;

    RowEchelon reps;
    for (const auto& k : rk.kernel)
        reps.insert(image_in.reduce(to_ambient(here, k)));
    if (reps.rank() != cell.dim_h)
        throw ContractViolation("representative count disagrees with dim H");
    GradedBasis basis(q, d);
    for (const auto& r : reps.rows())
        cell.representatives.push_back(basis.multivector(r));
    return cell;
}

void require_poisson(const MultiVector& pi)
{
    if (pi.degree() != 2)
        throw ContractViolation("a Poisson structure is a bivector");
    if (!schouten_bracket(pi, pi).is_zero())
        throw ContractViolation("[pi, pi] != 0");
}

}  // namespace

const CohomologyCell& CohomologyTable::cell(int q, int d) const
{
    for (const auto& c : cells)
        if (c.q == q && c.d == d)
            return c;
    throw std::out_of_range("no cell (" + std::to_string(q) + ", " + std::to_string(d) + ")");
}

std::vector<std::size_t> CohomologyTable::dims(int q) const
{
    std::vector<std::size_t> out;
    for (int d = 0; d <= dmax; ++d)
        out.push_back(cell(q, d).dim_h);
    return out;
}

CohomologyCell cohomology_cell(const MultiVector& pi, int q, int d)
{
    require_poisson(pi);
    RowEchelon image_in = q > 0 ? image_of(full_piece(pi, q - 1, d)) : RowEchelon{};
    return assemble(q, d, full_piece(pi, q, d), image_in);
}

CohomologyTable cohomology_table(const MultiVector& pi, int dmax, std::string algebra, std::optional<Rational> tau)
{
    if (dmax < 0)
        throw ContractViolation("dmax must be non-negative");
    require_poisson(pi);
    CohomologyTable table;
    table.algebra = std::move(algebra);
    table.tau = std::move(tau);
    table.dmax = dmax;

    std::vector<std::vector<CohomologyCell>> by_q(4);
    for (int d = 0; d <= dmax; ++d) {
        RowEchelon image_in;
        for (int q = 0; q <= 3; ++q) {
            Piece here = full_piece(pi, q, d);
            by_q[q].push_back(assemble(q, d, here, image_in));
            image_in = image_of(here);
        }
    }
    table.stable = true;
    for (int q = 0; q <= 3; ++q)
        for (auto& c : by_q[q]) {
            table.totals[q] += c.dim_h;
            if (c.d > dmax - 3 && c.dim_h != 0)
                table.stable = false;
            table.cells.push_back(std::move(c));
        }
    return table;
}

CohomologyTable cohomology_table(const AlgebraKind& kind, int dmax)
{
    return cohomology_table(linear_poisson(kind), dmax, kind.name(), kind.tau());
}

CohomologyCell invariant_cohomology(const MultiVector& pi, int q, int d)
{
    require_poisson(pi);
    if (!lie_derivative(fields::rotation(), pi).is_zero())
        throw ContractViolation("pi is not invariant under the rotation T");
    RowEchelon image_in = q > 0 ? image_of(invariant_piece(pi, q - 1, d)) : RowEchelon{};
    return assemble(q, d, invariant_piece(pi, q, d), image_in);
}

std::optional<MultiVector> coboundary_witness(const MultiVector& pi, const MultiVector& v)
{
    const int q = v.degree() - 1;
    if (q < 0)
        return std::nullopt;
    const int d = v.poly_degree();
    if (d < 0)
        return MultiVector(q);
    if (!v.is_homogeneous(d))
        throw DegreeViolation("witness search needs a homogeneous multivector");
    SparseMatrix m = differential_matrix(pi, q, d).matrix;
    // Kernel of [D | -v]; a vector with nonzero last entry solves D u = v.
    SparseMatrix augmented(m.rows(), m.cols() + 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        augmented.set_column(j, m.column(j));
    SparseVector target = GradedBasis(q + 1, d).coordinates(v);
    target.scale(-1);
    augmented.set_column(m.cols(), target);
    for (auto& k : rank_kernel(augmented).kernel) {
        const Rational last = k.at(m.cols());
        if (last == 0)
            continue;
        k.scale(Rational(1) / last);
        std::vector<SparseVector::Entry> head;
        for (const auto& e : k.entries())
            if (e.first < m.cols())
                head.push_back(e);
        return GradedBasis(q, d).multivector(SparseVector(std::move(head)));
    }
    return std::nullopt;
}

bool in_cohomology_span(const MultiVector& pi, const MultiVector& v, const std::vector<MultiVector>& reps)
{
    if (v.is_zero())
        return true;
    const int q = v.degree();
    const int d = v.poly_degree();
    if (!v.is_homogeneous(d) || !schouten_bracket(pi, v).is_zero())
        return false;
    GradedBasis basis(q, d);
    RowEchelon span;
    if (q > 0)
        span = image_of(full_piece(pi, q - 1, d));
    for (const auto& r : reps) {
        if (r.is_zero())
            continue;
        if (r.degree() != q || !r.is_homogeneous(d))
            return false;
        span.insert(basis.coordinates(r));
    }
    return span.contains(basis.coordinates(v));
}

std::size_t cohomology_rank(const MultiVector& pi, const std::vector<MultiVector>& cocycles)
{
    std::optional<std::pair<int, int>> shape;
    for (const auto& c : cocycles) {
        if (c.is_zero())
            continue;
        const std::pair<int, int> s{c.degree(), c.poly_degree()};
        if (!c.is_homogeneous(s.second) || (shape && *shape != s))
            throw ContractViolation("cocycles must share cochain and polynomial degree");
        if (!schouten_bracket(pi, c).is_zero())
            throw ContractViolation("not a cocycle: " + std::to_string(s.first) + "-field of degree " +
                                    std::to_string(s.second));
        shape = s;
    }
    if (!shape)
        return 0;
    const auto [q, d] = *shape;
    GradedBasis basis(q, d);
    RowEchelon span = q > 0 ? image_of(full_piece(pi, q - 1, d)) : RowEchelon{};
    const std::size_t base = span.rank();
    for (const auto& c : cocycles)
        if (!c.is_zero())
            span.insert(basis.coordinates(c));
    return span.rank() - base;
}

std::vector<Resonance> resonances(const Rational& tau, const Rational& c, int dmax)
{
    std::vector<Resonance> out;
    for (long total = 0; total <= dmax; ++total)
        for (long i = 0; i <= total; ++i) {
            const long j = total - i;
            if (Rational(i) + tau * j == c)
                out.push_back({i, j});
        }
    return out;
}

}  // namespace poisson
