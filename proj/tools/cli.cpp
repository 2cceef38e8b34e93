#include "cli.hpp"

#include "poisson/cohomology.hpp"
#include "poisson/expression.hpp"
#include "poisson/table_io.hpp"
#include "poisson/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

namespace poisson::cli {
namespace {

struct Options {
    std::string algebra;
    std::string tau;
    int dmax = 6;
    std::vector<int> qs;
    std::string format = "text";
    std::string out;
    std::string id;
    std::string c = "1";
    std::vector<std::string> exprs;
};

AlgebraKind algebra_of(const Options& o)
{
    if (o.algebra.empty())
        throw ParameterError("--algebra is required");
    return AlgebraKind::parse(o.algebra, o.tau.empty() ? std::nullopt : std::optional<std::string_view>(o.tau));
}

void require_format(const Options& o, std::initializer_list<const char*> allowed)
{
    for (const char* f : allowed)
        if (o.format == f)
            return;
    std::string list;
    for (const char* f : allowed)
        list += (list.empty() ? "" : ", ") + std::string(f);
    throw ParameterError("--format must be one of " + list + " for this command");
}

MultiVector expr_at(const Options& o, std::size_t i)
{
    if (o.exprs.size() <= i)
        throw ParameterError("missing expression argument");
    return parse_multivector(o.exprs[i]);
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string multivector_doc(const std::string& key, const MultiVector& v, const Options& o)
{
    if (o.format == "json")
        return "{" + json_string(key) + ": " + json_string(format_multivector(v)) + "}\n";
    return format_multivector(v) + "\n";
}

CohomologyTable filter_cells(CohomologyTable t, const std::vector<int>& qs)
{
    if (qs.empty())
        return t;
    for (int q : qs)
        if (q < 0 || q > 3)
            throw ParameterError("--q values must lie in 0..3");
    std::erase_if(t.cells, [&](const CohomologyCell& c) { return std::find(qs.begin(), qs.end(), c.q) == qs.end(); });
    return t;
}

std::string render_cells(const CohomologyTable& t, const std::vector<int>& qs, OutputFormat f)
{
    if (qs.empty() || f != OutputFormat::text)
        return render_table(filter_cells(t, qs), f);
    // text view keeps the full grid so the totals line up; list only the
    // requested representatives
    std::ostringstream out;
    out << "algebra " << t.algebra << (t.tau ? " tau=" + to_string(*t.tau) : "") << "  dmax " << t.dmax << '\n';
    for (const auto& c : filter_cells(t, qs).cells) {
        out << "H^" << c.q << " d=" << c.d << ": dim " << c.dim_h;
        for (const auto& r : c.representatives)
            out << "\n  " << format_multivector(r);
        out << '\n';
    }
    return out.str();
}

CohomologyTable invariant_table(const AlgebraKind& kind, int dmax)
{
    if (dmax < 0)
        throw ParameterError("--dmax must be non-negative");
    const MultiVector pi = linear_poisson(kind);
    CohomologyTable t;
    t.algebra = kind.name() + "/invariant";
    t.tau = kind.tau();
    t.dmax = dmax;
    t.stable = true;
    for (int q = 0; q <= 3; ++q)
        for (int d = 0; d <= dmax; ++d) {
            CohomologyCell c = invariant_cohomology(pi, q, d);
            t.totals[q] += c.dim_h;
            if (d > dmax - 3 && c.dim_h != 0)
                t.stable = false;
            t.cells.push_back(std::move(c));
        }
    return t;
}

std::string list_text(const Options& o)
{
    std::ostringstream out;
    if (o.format == "json") {
        nlohmann::ordered_json doc;
        nlohmann::ordered_json algebras = nlohmann::ordered_json::array();
        for (AlgebraTag tag : all_tags())
            algebras.push_back({{"name", tag_name(tag)}, {"needs_tau", tag_needs_tau(tag)}});
        doc["algebras"] = algebras;
        doc["verify_ids"] = known_ids();
        return doc.dump(2) + "\n";
    }
    out << "algebras:\n";
    for (AlgebraTag tag : all_tags())
        out << "  " << tag_name(tag) << (tag_needs_tau(tag) ? " --tau T" : "") << '\n';
    out << "verify ids:\n";
    for (const auto& id : known_ids())
        out << "  " << id << '\n';
    return out.str();
}

std::string show_text(const Options& o)
{
    const AlgebraKind kind = algebra_of(o);
    const StructureConstants sc = structure_constants(kind);
    const MultiVector pi = linear_poisson(sc);
    if (o.format == "json") {
        nlohmann::ordered_json doc;
        doc["algebra"] = kind.name();
        doc["tau"] = kind.tau() ? nlohmann::ordered_json(to_string(*kind.tau())) : nlohmann::ordered_json(nullptr);
        nlohmann::ordered_json brackets = nlohmann::ordered_json::array();
        for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}})
            for (int k = 1; k <= 3; ++k)
                if (sc.at(i, j, k) != 0)
                    brackets.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", to_string(sc.at(i, j, k))}});
        doc["structure_constants"] = brackets;
        doc["pi"] = format_multivector(pi);
        doc["modular_field"] = format_multivector(modular_vector_field(pi));
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << kind.label() << '\n';
    for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        Polynomial rhs;
        std::string text;
        for (int k = 1; k <= 3; ++k)
            if (sc.at(i, j, k) != 0)
                text += (text.empty() ? "" : " + ") + (sc.at(i, j, k) == 1 ? "" : to_string(sc.at(i, j, k)) + "*") +
                        "e" + std::to_string(k);
        if (!text.empty())
            out << "  [e" << i << ",e" << j << "] = " << text << '\n';
    }
    out << "pi = " << format_multivector(pi) << '\n';
    out << "modular field = " << format_multivector(modular_vector_field(pi)) << '\n';
    return out.str();
}

std::string resonances_text(const Options& o)
{
    if (o.tau.empty())
        throw ParameterError("--tau is required");
    const Rational tau = parse_rational(o.tau);
    const Rational c = parse_rational(o.c);
    if (o.dmax < 0)
        throw ParameterError("--dmax must be non-negative");
    const auto list = resonances(tau, c, o.dmax);
    if (o.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : list)
            arr.push_back({r.i, r.j});
        return nlohmann::ordered_json{{"tau", to_string(tau)}, {"c", to_string(c)}, {"dmax", o.dmax}, {"resonances", arr}}
                   .dump(2) +
               "\n";
    }
    std::string out;
    for (const auto& r : list)
        out += (out.empty() ? "" : " ") + ("(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")");
    return out + "\n";
}

struct Outcome {
    std::string text;
    int status = kExitOk;
};

Outcome verify_outcome(const Options& o)
{
    std::vector<std::string> ids = o.id.empty() ? known_ids() : std::vector<std::string>{o.id};
    if (ids.empty())
        throw ParameterError("no fixtures found in " + fixture_dir().string());
    Outcome result;
    std::vector<std::string> docs;
    for (const auto& id : ids) {
        const Report r = verify(expected_table(id), o.dmax);
        if (!r.pass)
            result.status = kExitVerifyFailed;
        docs.push_back(o.format == "json" ? report_to_json(r) : report_to_text(r));
    }
    if (o.format != "json" || !o.id.empty()) {
        for (const auto& d : docs)
            result.text += d;
        return result;
    }
    result.text = "[\n";
    for (std::size_t i = 0; i < docs.size(); ++i) {
        docs[i].pop_back();
        result.text += docs[i] + (i + 1 < docs.size() ? ",\n" : "\n");
    }
    result.text += "]\n";
    return result;
}

Outcome modular_outcome(const Options& o)
{
    const AlgebraKind kind = algebra_of(o);
    const MultiVector field = modular_vector_field(linear_poisson(kind));
    const Report r = modular_class_check(kind);
    Outcome result;
    result.status = r.pass ? kExitOk : kExitVerifyFailed;
    const bool unimodular =
        field.is_zero() || coboundary_witness(linear_poisson(kind), field).has_value();
    if (o.format == "json") {
        nlohmann::ordered_json doc;
        doc["algebra"] = kind.label();
        doc["modular_field"] = format_multivector(field);
        doc["unimodular"] = unimodular;
        doc["status"] = r.pass ? "pass" : "fail";
        result.text = doc.dump(2) + "\n";
    } else {
        result.text = "X_mu = " + format_multivector(field) + (unimodular ? "  (unimodular)\n" : "  (class nonzero)\n") +
                      report_to_text(r);
    }
    return result;
}

Outcome dispatch(const std::string& verb, const Options& o)
{
    const bool table_verb = verb == "cohomology" || verb == "invariant-cohomology";
    if (table_verb)
        require_format(o, {"text", "json", "csv"});
    else
        require_format(o, {"text", "json"});

    if (verb == "list")
        return {list_text(o)};
    if (verb == "show")
        return {show_text(o)};
    if (verb == "cohomology") {
        if (o.dmax < 0)
            throw ParameterError("--dmax must be non-negative");
        return {render_cells(cohomology_table(algebra_of(o), o.dmax), o.qs, parse_output_format(o.format))};
    }
    if (verb == "invariant-cohomology")
        return {render_cells(invariant_table(algebra_of(o), o.dmax), o.qs, parse_output_format(o.format))};
    if (verb == "verify")
        return verify_outcome(o);
    if (verb == "schouten")
        return {multivector_doc("bracket", schouten_bracket(expr_at(o, 0), expr_at(o, 1)), o)};
    if (verb == "dpi")
        return {multivector_doc("dpi", poisson_differential(linear_poisson(algebra_of(o)), expr_at(o, 0)), o)};
    if (verb == "modular")
        return modular_outcome(o);
    if (verb == "resonances")
        return {resonances_text(o)};
    if (verb == "jacobi") {
        const MultiVector defect = jacobi_defect(structure_constants(algebra_of(o)));
        return {multivector_doc("pi_pi", defect, o), defect.is_zero() ? kExitOk : kExitVerifyFailed};
    }
    throw ParameterError("unknown command '" + verb + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Poisson cohomology of linear Poisson structures on duals of 3-dimensional Lie algebras.\n"
                 "In expressions dx, dy, dz are the coordinate vector fields."};
    app.name("poisson-cohomology");
    app.require_subcommand(1);
    Options o;

    auto algebra_opts = [&](CLI::App* sub) {
        sub->add_option("--algebra", o.algebra, "registry name (see `list`)");
        sub->add_option("--tau", o.tau, "parameter for book and spiral, p/q or integer");
    };
    auto io_opts = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text, json or csv");
        sub->add_option("--out", o.out, "write the artifact to FILE");
    };

    auto* list = app.add_subcommand("list", "registry entries and verification ids");
    io_opts(list);
    auto* show = app.add_subcommand("show", "structure constants, pi and its modular field");
    algebra_opts(show);
    io_opts(show);
    for (const char* name : {"cohomology", "invariant-cohomology"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "cohomology"
                                                 ? "dim H^q_d and representatives for d <= dmax"
                                                 : "cohomology of the rotation-invariant subcomplex");
        algebra_opts(sub);
        io_opts(sub);
        sub->add_option("--dmax", o.dmax, "largest polynomial degree");
        sub->add_option("--q", o.qs, "cochain degrees to report")->delimiter(',');
    }
    auto* verify_cmd = app.add_subcommand("verify", "compare the engine against a fixture (all when --id is absent)");
    io_opts(verify_cmd);
    verify_cmd->add_option("--id", o.id, "fixture id (see `list`)");
    o.dmax = 6;
    verify_cmd->add_option("--dmax", o.dmax, "largest polynomial degree (default 12)");
    auto* schouten = app.add_subcommand("schouten", "Schouten bracket of two expressions");
    io_opts(schouten);
    schouten->add_option("exprs", o.exprs, "two multivector expressions")->expected(2);
    auto* dpi = app.add_subcommand("dpi", "d_pi of an expression");
    algebra_opts(dpi);
    io_opts(dpi);
    dpi->add_option("exprs", o.exprs, "multivector expression")->expected(1);
    auto* modular = app.add_subcommand("modular", "modular vector field and its class");
    algebra_opts(modular);
    io_opts(modular);
    auto* res = app.add_subcommand("resonances", "pairs (i, j) with i + tau j = c");
    io_opts(res);
    res->add_option("--tau", o.tau, "p/q or integer")->required();
    res->add_option("--c", o.c, "target value (default 1)");
    res->add_option("--dmax", o.dmax, "bound on i + j");
    auto* jacobi = app.add_subcommand("jacobi", "[pi, pi] from the structure constants");
    algebra_opts(jacobi);
    io_opts(jacobi);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (verify_cmd->parsed() && verify_cmd->count("--dmax") == 0)
        o.dmax = 12;

    const std::string verb = app.get_subcommands().front()->get_name();
    Outcome outcome;
    try {
        outcome = dispatch(verb, o);
    } catch (const UnknownId& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {  // ParameterError, ParseError
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {  // ContractViolation
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DegreeViolation& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (o.out.empty()) {
        out << outcome.text;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!(file << outcome.text)) {
            err << "error: cannot write " << o.out << '\n';
            return kExitUsage;
        }
    }
    return outcome.status;
}

}  // namespace poisson::cli
