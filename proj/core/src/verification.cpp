#include "poisson/verification.hpp"

#include "poisson/expression.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#ifndef POISSON_DEFAULT_FIXTURE_DIR
#define POISSON_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace poisson {

using ordered_json = nlohmann::ordered_json;

std::filesystem::path fixture_dir()
{
    if (const char* env = std::getenv("POISSON_FIXTURES"); env && *env)
        return env;
    return POISSON_DEFAULT_FIXTURE_DIR;
}

std::vector<std::string> known_ids()
{
    std::vector<std::string> ids;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(fixture_dir(), ec))
        if (entry.path().extension() == ".json")
            ids.push_back(entry.path().stem().string());
    std::sort(ids.begin(), ids.end());
    return ids;
}

namespace {

std::optional<std::string> tau_text(const AlgebraKind& kind)
{
    if (!kind.tau())
        return std::nullopt;
    return to_string(*kind.tau());
}

template <std::size_t N>
std::array<std::size_t, N> to_array(const ordered_json& j)
{
    std::array<std::size_t, N> out{};
    if (!j.is_array() || j.size() != N)
        throw ParameterError("expected an array of " + std::to_string(N) + " integers");
    for (std::size_t i = 0; i < N; ++i)
        out[i] = j[i].get<std::size_t>();
    return out;
}

}  // namespace

ExpectedResult parse_expected(std::string_view json_text)
{
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
        ExpectedResult e;
        e.id = doc.at("id").get<std::string>();
        std::optional<std::string> tau;
        if (!doc.at("tau").is_null())
            tau = doc.at("tau").get<std::string>();
        e.kind = AlgebraKind::parse(doc.at("algebra").get<std::string>(),
                                    tau ? std::optional<std::string_view>(*tau) : std::nullopt);
        e.citation = doc.value("citation", "");
        e.smooth_shadow = doc.value("smooth_shadow", false);
        e.min_dmax = doc.at("min_dmax").get<int>();
        const auto& dims = doc.at("dims");
        e.grid_dmax = dims.at("dmax").get<int>();
        e.dims_provenance = dims.at("provenance").get<std::string>();
        for (int q = 0; q <= 3; ++q) {
            e.dims[q] = dims.at("h" + std::to_string(q)).get<std::vector<std::size_t>>();
            if (e.dims[q].size() != static_cast<std::size_t>(e.grid_dmax + 1))
                throw ParameterError("dims row h" + std::to_string(q) + " has the wrong length");
        }
        if (doc.contains("totals") && !doc.at("totals").is_null()) {
            const auto& t = doc.at("totals");
            e.totals = to_array<4>(t.at("values"));
            e.stable = t.at("stable").get<bool>();
            e.totals_provenance = t.at("provenance").get<std::string>();
        } else if (doc.contains("stable") && !doc.at("stable").is_null()) {
            e.stable = doc.at("stable").get<bool>();
        }
        for (const auto& g : doc.value("generators", ordered_json::array()))
            e.generators.push_back({g.at("q").get<int>(), g.at("d").get<int>(), g.at("expr").get<std::string>(),
                                    g.value("family", ""), g.at("provenance").get<std::string>()});
        e.generators_complete_dmax = doc.value("generators_complete_dmax", -1);
        for (const auto& w : doc.value("witnesses", ordered_json::array()))
            e.witnesses.push_back(
                {w.at("expr").get<std::string>(), w.at("coboundary").get<bool>(), w.at("provenance").get<std::string>()});
        return e;
    } catch (const nlohmann::json::exception& ex) {
        throw ParameterError(std::string("malformed fixture: ") + ex.what());
    }
}

std::string expected_to_json(const ExpectedResult& e)
{
    ordered_json doc;
    doc["id"] = e.id;
    doc["algebra"] = e.kind.name();
    auto tau = tau_text(e.kind);
    doc["tau"] = tau ? ordered_json(*tau) : ordered_json(nullptr);
    doc["citation"] = e.citation;
    doc["smooth_shadow"] = e.smooth_shadow;
    doc["min_dmax"] = e.min_dmax;
    ordered_json dims;
    dims["dmax"] = e.grid_dmax;
    dims["provenance"] = e.dims_provenance;
    for (int q = 0; q <= 3; ++q)
        dims["h" + std::to_string(q)] = e.dims[q];
    doc["dims"] = dims;
    if (e.totals)
        doc["totals"] = {{"values", *e.totals}, {"stable", e.stable.value_or(true)}, {"provenance", e.totals_provenance}};
    else {
        doc["totals"] = nullptr;
        doc["stable"] = e.stable ? ordered_json(*e.stable) : ordered_json(nullptr);
    }
    ordered_json gens = ordered_json::array();
    for (const auto& g : e.generators)
        gens.push_back({{"q", g.q}, {"d", g.d}, {"expr", g.expr}, {"family", g.family}, {"provenance", g.provenance}});
    doc["generators"] = gens;
    doc["generators_complete_dmax"] = e.generators_complete_dmax;
    ordered_json wit = ordered_json::array();
    for (const auto& w : e.witnesses)
        wit.push_back({{"expr", w.expr}, {"coboundary", w.coboundary}, {"provenance", w.provenance}});
    doc["witnesses"] = wit;
    return doc.dump(2) + "\n";
}

ExpectedResult expected_table(const std::string& id)
{
    const bool plain = !id.empty() && std::all_of(id.begin(), id.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
    const auto path = fixture_dir() / (id + ".json");
    std::ifstream in(path);
    if (!plain || !in)
        throw UnknownId("unknown verification id '" + id + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_expected(buffer.str());
}

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

std::string cell_name(int q, int d) { return "H^" + std::to_string(q) + "_" + std::to_string(d); }

}  // namespace

Report verify(const ExpectedResult& e, int dmax)
{
    Report report;
    report.id = e.id;
    auto mismatch = [&](std::string what, std::string expected, std::string computed) {
        report.mismatches.push_back({std::move(what), std::move(expected), std::move(computed)});
    };
    if (dmax < e.min_dmax) {
        mismatch("dmax", ">= " + std::to_string(e.min_dmax), std::to_string(dmax));
        return report;
    }
    try {
        const MultiVector pi = linear_poisson(e.kind);
        CohomologyTable table = cohomology_table(e.kind, dmax);

        const int grid = std::min(dmax, e.grid_dmax);
        for (int q = 0; q <= 3; ++q)
            for (int d = 0; d <= grid; ++d)
                if (table.cell(q, d).dim_h != e.dims[q][d])
                    mismatch("dim " + cell_name(q, d), str(e.dims[q][d]), str(table.cell(q, d).dim_h));
        if (e.totals)
            for (int q = 0; q <= 3; ++q)
                if (table.totals[q] != (*e.totals)[q])
                    mismatch("total H^" + std::to_string(q), str((*e.totals)[q]), str(table.totals[q]));
        if (e.stable && table.stable != *e.stable)
            mismatch("stable", *e.stable ? "true" : "false", table.stable ? "true" : "false");

        std::map<std::pair<int, int>, std::vector<MultiVector>> by_cell;
        for (const auto& g : e.generators) {
            if (g.d > dmax)
                continue;
            MultiVector v = parse_multivector(g.expr);
            if (v.is_zero() || v.degree() != g.q || !v.is_homogeneous(g.d)) {
                mismatch("generator " + g.expr, cell_name(g.q, g.d), "wrong shape");
                continue;
            }
            if (!in_cohomology_span(pi, v, table.cell(g.q, g.d).representatives))
                mismatch("generator " + g.expr, "class in " + cell_name(g.q, g.d), "not spanned");
            by_cell[{g.q, g.d}].push_back(std::move(v));
        }
        for (int q = 0; q <= 3; ++q)
            for (int d = 0; d <= std::min(dmax, e.generators_complete_dmax); ++d) {
                auto it = by_cell.find({q, d});
                std::size_t rank = 0;
                if (it != by_cell.end()) {
                    try {
                        rank = cohomology_rank(pi, it->second);
                    } catch (const ContractViolation&) {
                        // already reported as a generator mismatch
                        continue;
                    }
                }
                if (rank != table.cell(q, d).dim_h)
                    mismatch("generators span " + cell_name(q, d), str(table.cell(q, d).dim_h) + " classes",
                             str(rank) + " classes");
            }
        for (const auto& w : e.witnesses) {
            MultiVector v = parse_multivector(w.expr);
            if (!schouten_bracket(pi, v).is_zero()) {
                mismatch("witness " + w.expr, "cocycle", "not a cocycle");
                continue;
            }
            const bool exact = coboundary_witness(pi, v).has_value();
            if (exact != w.coboundary)
                mismatch("witness " + w.expr, w.coboundary ? "coboundary" : "nonzero class",
                         exact ? "coboundary" : "nonzero class");
        }
        report.table = std::move(table);
    } catch (const std::exception& ex) {
        mismatch("engine", "completed", ex.what());
    }
    report.pass = report.mismatches.empty();
    return report;
}

Report verify(const std::string& id, int dmax) { return verify(expected_table(id), dmax); }

std::string report_to_text(const Report& r)
{
    std::ostringstream out;
    out << r.id << ": " << (r.pass ? "pass" : "FAIL");
    if (r.table) {
        const auto& t = r.table->totals;
        out << "  totals (" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ")"
            << (r.table->stable ? " stable" : " not stable");
    }
    out << '\n';
    for (const auto& m : r.mismatches)
        out << "  " << m.what << ": expected " << m.expected << ", computed " << m.computed << '\n';
    return out.str();
}

std::string report_to_json(const Report& r)
{
    ordered_json doc;
    doc["id"] = r.id;
    doc["status"] = r.pass ? "pass" : "fail";
    ordered_json mm = ordered_json::array();
    for (const auto& m : r.mismatches)
        mm.push_back({{"what", m.what}, {"expected", m.expected}, {"computed", m.computed}});
    doc["mismatches"] = mm;
    if (r.table)
        doc["totals"] = {{"0", r.table->totals[0]},
                         {"1", r.table->totals[1]},
                         {"2", r.table->totals[2]},
                         {"3", r.table->totals[3]}};
    return doc.dump(2) + "\n";
}

DeformationFamily parse_deformation_family(std::string_view name)
{
    if (name == "heisenberg")
        return DeformationFamily::heisenberg;
    if (name == "euclidean")
        return DeformationFamily::euclidean;
    throw ParameterError("unknown deformation family '" + std::string(name) + "' (heisenberg or euclidean)");
}

namespace {

bool only_in(const Polynomial& p, std::initializer_list<Var> allowed)
{
    for (Var v : kAllVars)
        if (std::find(allowed.begin(), allowed.end(), v) == allowed.end() && p.depends_on(v))
            return false;
    return true;
}

void check_inputs(DeformationFamily family, const Polynomial& a, const Polynomial& b)
{
    if (family == DeformationFamily::heisenberg) {
        for (const Polynomial* g : {&a, &b}) {
            if (!only_in(*g, {Var::x, Var::y}))
                throw ParameterError("heisenberg deformation inputs must be functions of x and y");
            if (g->coefficient(Monomial{}) != 0)
                throw ParameterError("heisenberg deformation inputs must vanish at the origin");
        }
    } else {
        if (!only_in(a, {Var::x}))
            throw ParameterError("euclidean deformation: f must be a polynomial in one variable (written x)");
        if (!only_in(b, {Var::z}))
            throw ParameterError("euclidean deformation: g must be a polynomial in z");
    }
}

Polynomial radius_squared() { return Polynomial::var(Var::x) * Polynomial::var(Var::x) + Polynomial::var(Var::y) * Polynomial::var(Var::y); }

}  // namespace

MultiVector deformed_structure(DeformationFamily family, const Polynomial& a, const Polynomial& b)
{
    check_inputs(family, a, b);
    const MultiVector dxdy = MultiVector::bivector(0, 0, 1);
    if (family == DeformationFamily::heisenberg) {
        const MultiVector pi = linear_poisson(AlgebraKind(AlgebraTag::heisenberg));
        const Polynomial h = a + Polynomial::var(Var::z) * b;
        return pi + schouten_bracket(MultiVector::vector(0, 0, h), dxdy);
    }
    const MultiVector pi = linear_poisson(AlgebraKind(AlgebraTag::euclidean));
    const Polynomial f = substitute(a, Var::x, radius_squared());
    return pi + f * wedge(fields::euler_plane(), fields::d(Var::z)) + b * dxdy;
}

MultiVector deformation_closed_form(DeformationFamily family, const Polynomial& a, const Polynomial& b)
{
    check_inputs(family, a, b);
    if (family == DeformationFamily::heisenberg) {
        Polynomial h = a.partial(Var::y) * b.partial(Var::x) - a.partial(Var::x) * b.partial(Var::y);
        return MultiVector::trivector(Rational(2) * h);
    }
    const Polynomial u = Polynomial::var(Var::x);
    const Polynomial inner = substitute(a + u * a.partial(Var::x), Var::x, radius_squared());
    return MultiVector::trivector(Rational(4) * b * inner);
}

MultiVector deformation_identity_check(DeformationFamily family, const Polynomial& a, const Polynomial& b)
{
    const MultiVector q = deformed_structure(family, a, b);
    return schouten_bracket(q, q) - deformation_closed_form(family, a, b);
}

MultiVector expected_modular_field(const AlgebraKind& kind)
{
    const Polynomial one(1);
    switch (kind.tag()) {
    case AlgebraTag::aff_x_r: return MultiVector::vector(0, -one, 0);
    case AlgebraTag::book: return MultiVector::vector(0, 0, Rational(-(1 + *kind.tau())) * one);
    case AlgebraTag::semi_open_book: return MultiVector::vector(0, 0, Rational(-2) * one);
    case AlgebraTag::spiral: return MultiVector::vector(0, 0, Rational(-2 * *kind.tau()) * one);
    default: return MultiVector(1);
    }
}

Report modular_class_check(const AlgebraKind& kind)
{
    Report report;
    report.id = "modular:" + kind.label();
    const MultiVector pi = linear_poisson(kind);
    const MultiVector field = modular_vector_field(pi);
    const MultiVector expected = expected_modular_field(kind);
    if (!(field == expected))
        report.mismatches.push_back({"modular field", format_multivector(expected), format_multivector(field)});
    if (!schouten_bracket(pi, field).is_zero())
        report.mismatches.push_back({"cocycle", "d_pi X_mu = 0", format_multivector(schouten_bracket(pi, field))});
    else {
        const bool expected_zero = expected.is_zero() || coboundary_witness(pi, expected).has_value();
        const bool computed_zero = field.is_zero() || coboundary_witness(pi, field).has_value();
        if (expected_zero != computed_zero)
            report.mismatches.push_back({"modular class", expected_zero ? "zero (unimodular)" : "nonzero",
                                         computed_zero ? "zero (unimodular)" : "nonzero"});
    }
    report.pass = report.mismatches.empty();
    return report;
}

}  // namespace poisson
