#pragma once

#include "poisson/verification.hpp"

#include <functional>
#include <string>
#include <vector>

namespace poisson::oracle {

/// Coefficient rings of the representative families, graded by total
/// polynomial degree.
enum class Ring {
    constants,  // R
    poly_z,     // f(z)
    poly_xy,    // g(x, y)
    poly_xy0,   // g(x, y) with g(0) = 0
    poly_xyz,   // h(x, y, z)
    invariant,  // polynomials in one homogeneous invariant of degree `step`
};

/// A family  { generator(m) : m a ring monomial }  in cochain degree q.
/// An element built from a ring monomial of degree k has degree k + shift.
struct Family {
    std::string name;
    int q = 0;
    int shift = 0;
    Ring ring = Ring::constants;
    /// invariant ring: degree of the invariant and its expansion.
    int step = 0;
    Polynomial invariant;
    std::function<MultiVector(const Polynomial&)> generator;
    /// "stated" for literally listed representatives, otherwise the family
    /// is expanded by this oracle.
    bool literal = false;
};

/// Number of ring elements of degree k in a basis of the ring.
std::size_t ring_count(const Family& f, int k);
/// Those basis elements, as polynomials.
std::vector<Polynomial> ring_basis(const Family& f, int k);

/// dim of the span of family members in degree d (families are assumed
/// independent, which is what the source statements assert).
std::size_t family_dim(const std::vector<Family>& families, int q, int d);

struct Spec {
    std::string id;
    AlgebraKind kind;
    std::string citation;
    bool smooth_shadow = false;
    std::vector<Family> families;
    /// Instances are listed up to this degree.
    int expand_dmax = 0;
    std::string dims_provenance = "oracle:family_enumeration";
    std::vector<ExpectedWitness> witnesses;
};

inline constexpr int kGridDmax = 12;

std::vector<Spec> all_specs();
ExpectedResult build(const Spec& spec);
std::vector<ExpectedResult> build_all();

}  // namespace poisson::oracle
