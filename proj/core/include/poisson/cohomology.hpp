#pragma once

#include "poisson/lie_registry.hpp"
#include "poisson/poisson_complex.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace poisson {

struct CohomologyCell {
    int q = 0;
    int d = 0;
    std::size_t dim_cochains = 0;
    std::size_t rank_out = 0;  // rank of d_pi on (q, d)
    std::size_t rank_in = 0;   // rank of d_pi on (q-1, d); 0 for q = 0
    std::size_t dim_h = 0;
    std::vector<MultiVector> representatives;
};

struct CohomologyTable {
    std::string algebra;
    std::optional<Rational> tau;
    int dmax = 0;
    /// Ordered by q, then d.
    std::vector<CohomologyCell> cells;
    std::array<std::size_t, 4> totals{};
    /// True when the three top degrees contribute nothing.
    bool stable = false;

    const CohomologyCell& cell(int q, int d) const;
    /// dim H^q_d for d = 0..dmax.
    std::vector<std::size_t> dims(int q) const;
};

/// Representatives are the kernel vectors reduced modulo the image, then
/// brought to reduced row echelon form; their leading basis positions are
/// never pivots of the image.
CohomologyCell cohomology_cell(const MultiVector& pi, int q, int d);

/// Throws ContractViolation if [pi, pi] != 0 or dmax < 0.
CohomologyTable cohomology_table(const MultiVector& pi, int dmax, std::string algebra = "custom",
                                 std::optional<Rational> tau = std::nullopt);
CohomologyTable cohomology_table(const AlgebraKind& kind, int dmax);

/// Cohomology of the rotation-invariant subcomplex. Throws ContractViolation
/// if L_T pi != 0.
CohomologyCell invariant_cohomology(const MultiVector& pi, int q, int d);

/// Some U with [pi, U] = v, or nothing if v is not a coboundary.
/// v must be homogeneous.
std::optional<MultiVector> coboundary_witness(const MultiVector& pi, const MultiVector& v);

/// True if v is a cocycle and lies in span(reps) + image of d_pi.
bool in_cohomology_span(const MultiVector& pi, const MultiVector& v, const std::vector<MultiVector>& reps);

/// Dimension of the span of the classes of the given cocycles, all of the
/// same cochain and polynomial degree. Throws ContractViolation otherwise.
std::size_t cohomology_rank(const MultiVector& pi, const std::vector<MultiVector>& cocycles);

struct Resonance {
    long i = 0;
    long j = 0;
    friend bool operator==(const Resonance&, const Resonance&) = default;
};

/// All (i, j) >= 0 with i + j <= dmax and i + tau j = c, ordered by i + j.
std::vector<Resonance> resonances(const Rational& tau, const Rational& c, int dmax);

}  // namespace poisson
