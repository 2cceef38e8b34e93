#pragma once

#include "poisson/cohomology.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace poisson {

class UnknownId : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExpectedGenerator {
    int q = 0;
    int d = 0;
    std::string expr;
    std::string family;
    std::string provenance;
};

/// A cocycle together with whether it must be a coboundary.
struct ExpectedWitness {
    std::string expr;
    bool coboundary = true;
    std::string provenance;
};

/// One fixture document. Provenance strings are either "stated" (taken from
/// a published theorem, with `citation` naming it) or "oracle:<name>".
struct ExpectedResult {
    std::string id;
    AlgebraKind kind{AlgebraTag::abelian};
    std::string citation;
    /// The source statement is about smooth coefficients and is checked only
    /// through its polynomial degree-by-degree shadow.
    bool smooth_shadow = false;
    int min_dmax = 0;
    int grid_dmax = 0;
    std::array<std::vector<std::size_t>, 4> dims;
    std::string dims_provenance;
    std::optional<std::array<std::size_t, 4>> totals;
    std::optional<bool> stable;
    std::string totals_provenance;
    std::vector<ExpectedGenerator> generators;
    /// Generators are a complete set of class representatives for d up to here.
    int generators_complete_dmax = -1;
    std::vector<ExpectedWitness> witnesses;
};

struct Mismatch {
    std::string what;
    std::string expected;
    std::string computed;
};

struct Report {
    std::string id;
    bool pass = false;
    std::vector<Mismatch> mismatches;
    std::optional<CohomologyTable> table;
};

/// POISSON_FIXTURES if set, else the directory configured at build time.
std::filesystem::path fixture_dir();
std::vector<std::string> known_ids();

ExpectedResult parse_expected(std::string_view json_text);
std::string expected_to_json(const ExpectedResult& expected);
/// Throws UnknownId if there is no fixture for `id`.
ExpectedResult expected_table(const std::string& id);

/// Never throws on a mathematical mismatch; they are listed in the report.
Report verify(const ExpectedResult& expected, int dmax);
Report verify(const std::string& id, int dmax);

std::string report_to_text(const Report& report);
std::string report_to_json(const Report& report);

enum class DeformationFamily { heisenberg, euclidean };

DeformationFamily parse_deformation_family(std::string_view name);

/// Deformed structure:
///   heisenberg: z dx^dy + [(a + z b) dz, dx^dy], a, b in x, y, vanishing at 0
///   euclidean:  T^dz + a(x^2+y^2) E^dz + b(z) dx^dy, a given in the variable x
/// Throws ParameterError on inputs outside those shapes.
MultiVector deformed_structure(DeformationFamily family, const Polynomial& a, const Polynomial& b);

/// The claimed closed form of [pi_def, pi_def]:
///   heisenberg: 2 (a_y b_x - a_x b_y) dx^dy^dz
///   euclidean:  4 b(z) (a(u) + u a'(u)) dx^dy^dz,  u = x^2 + y^2
MultiVector deformation_closed_form(DeformationFamily family, const Polynomial& a, const Polynomial& b);

/// [pi_def, pi_def] minus the closed form; zero when the closed form holds.
MultiVector deformation_identity_check(DeformationFamily family, const Polynomial& a, const Polynomial& b);

/// The expected modular vector field of each registry entry.
MultiVector expected_modular_field(const AlgebraKind& kind);

/// Checks the modular field against the expectation, that it is a cocycle,
/// and that its class vanishes exactly when the expected field is a coboundary.
Report modular_class_check(const AlgebraKind& kind);

}  // namespace poisson
