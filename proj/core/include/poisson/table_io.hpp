#pragma once

#include "poisson/cohomology.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace poisson {

enum class OutputFormat { text, json, csv };

OutputFormat parse_output_format(std::string_view name);

/// JSON document:
///   {"algebra", "tau" (string|null), "dmax", "cells": [{"q","d","dim_cochains",
///    "rank_in","rank_out","dim_h","representatives"}], "totals": {"0".."3"}, "stable"}
std::string table_to_json(const CohomologyTable& table);
/// Header line plus one row per cell; representatives joined by "; ".
std::string table_to_csv(const CohomologyTable& table);
std::string table_to_text(const CohomologyTable& table);
std::string render_table(const CohomologyTable& table, OutputFormat format);

/// Problems found checking a document against the table schema; empty if valid.
std::vector<std::string> table_schema_violations(std::string_view json_text);

}  // namespace poisson
