#include "poisson/table_io.hpp"

#include "poisson/expression.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace poisson {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_output_format(std::string_view name)
{
    if (name == "text")
        return OutputFormat::text;
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    throw ParameterError("unknown format '" + std::string(name) + "' (text, json or csv)");
}

std::string table_to_json(const CohomologyTable& table)
{
    ordered_json doc;
    doc["algebra"] = table.algebra;
    doc["tau"] = table.tau ? ordered_json(to_string(*table.tau)) : ordered_json(nullptr);
    doc["dmax"] = table.dmax;
    ordered_json cells = ordered_json::array();
    for (const auto& c : table.cells) {
        ordered_json reps = ordered_json::array();
        for (const auto& r : c.representatives)
            reps.push_back(format_multivector(r));
        cells.push_back({{"q", c.q},
                         {"d", c.d},
                         {"dim_cochains", c.dim_cochains},
                         {"rank_in", c.rank_in},
                         {"rank_out", c.rank_out},
                         {"dim_h", c.dim_h},
                         {"representatives", std::move(reps)}});
    }
    doc["cells"] = std::move(cells);
    doc["totals"] = {{"0", table.totals[0]}, {"1", table.totals[1]}, {"2", table.totals[2]}, {"3", table.totals[3]}};
    doc["stable"] = table.stable;
    return doc.dump(2) + "\n";
}

std::string table_to_csv(const CohomologyTable& table)
{
    std::ostringstream out;
    out << "q,d,dim_cochains,rank_in,rank_out,dim_h,representatives\n";
    for (const auto& c : table.cells) {
        out << c.q << ',' << c.d << ',' << c.dim_cochains << ',' << c.rank_in << ',' << c.rank_out << ',' << c.dim_h
            << ",\"";
        for (std::size_t i = 0; i < c.representatives.size(); ++i)
            out << (i ? "; " : "") << format_multivector(c.representatives[i]);
        out << "\"\n";
    }
    return out.str();
}

std::string table_to_text(const CohomologyTable& table)
{
    std::ostringstream out;
    out << "algebra " << table.algebra;
    if (table.tau)
        out << " tau=" << to_string(*table.tau);
    out << "  dmax " << table.dmax << "\n\n";
    out << "dim H^q_d\n   d:";
    for (int d = 0; d <= table.dmax; ++d)
        out << std::setw(4) << d;
    out << "  total\n";
    for (int q = 0; q <= 3; ++q) {
        out << "  q=" << q;
        for (auto v : table.dims(q))
            out << std::setw(4) << v;
        out << "  " << std::setw(5) << table.totals[q] << '\n';
    }
    out << "\n" << (table.stable ? "stable" : "not stable (top degrees still contribute)") << "\n";
    bool header = false;
    for (const auto& c : table.cells) {
        if (c.representatives.empty())
            continue;
        if (!header) {
            out << "\nrepresentatives\n";
            header = true;
        }
        for (const auto& r : c.representatives)
            out << "  H^" << c.q << " d=" << c.d << ": " << format_multivector(r) << '\n';
    }
    return out.str();
}

std::string render_table(const CohomologyTable& table, OutputFormat format)
{
    switch (format) {
    case OutputFormat::json: return table_to_json(table);
    case OutputFormat::csv: return table_to_csv(table);
    default: return table_to_text(table);
    }
}

std::vector<std::string> table_schema_violations(std::string_view json_text)
{
    std::vector<std::string> problems;
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        return {std::string("not JSON: ") + e.what()};
    }
    auto need = [&](const ordered_json& obj, const char* key, auto check, const char* what) {
        if (!obj.is_object() || !obj.contains(key))
            problems.push_back(std::string("missing ") + key);
        else if (!check(obj.at(key)))
            problems.push_back(std::string(key) + " is not " + what);
    };
    auto is_int = [](const ordered_json& v) { return v.is_number_integer(); };
    need(doc, "algebra", [](const ordered_json& v) { return v.is_string(); }, "a string");
    need(doc, "tau", [](const ordered_json& v) { return v.is_string() || v.is_null(); }, "a string or null");
    need(doc, "dmax", is_int, "an integer");
    need(doc, "stable", [](const ordered_json& v) { return v.is_boolean(); }, "a boolean");
    need(doc, "totals", [&](const ordered_json& v) {
        if (!v.is_object() || v.size() != 4)
            return false;
        for (const char* k : {"0", "1", "2", "3"})
            if (!v.contains(k) || !v.at(k).is_number_integer())
                return false;
        return true;
    }, "an object with integer keys 0..3");
    need(doc, "cells", [](const ordered_json& v) { return v.is_array(); }, "an array");
    if (doc.is_object() && doc.contains("cells") && doc.at("cells").is_array()) {
        std::size_t i = 0;
        for (const auto& cell : doc.at("cells")) {
            const std::string where = "cells[" + std::to_string(i++) + "].";
            for (const char* k : {"q", "d", "dim_cochains", "rank_in", "rank_out", "dim_h"})
                if (!cell.is_object() || !cell.contains(k) || !cell.at(k).is_number_integer())
                    problems.push_back(where + k + " missing or not an integer");
            if (!cell.is_object() || !cell.contains("representatives") || !cell.at("representatives").is_array())
                problems.push_back(where + "representatives missing or not an array");
            else
                for (const auto& r : cell.at("representatives"))
                    if (!r.is_string())
                        problems.push_back(where + "representatives holds a non-string");
        }
    }
    return problems;
}

}  // namespace poisson
