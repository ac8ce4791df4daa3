#pragma once

#include <string>

#include "empress/errors.hpp"
#include "empress/table.hpp"

// Machine-readable table rendering. Output is byte-deterministic: decimal
// ASCII digits, LF line endings, no locale formatting.

namespace empress {

enum class OutputFormat { Csv, Json, Tsv };

inline OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "tsv") return OutputFormat::Tsv;
    throw ParameterError("unknown format '" + name + "' (expected csv, json, or tsv)");
}

// csv/tsv carry the header "n,a,b"; json is an array of [n,a,b] triples.
inline std::string format_table(const PPositionTable& t, OutputFormat format) {
    std::string out;
    switch (format) {
    case OutputFormat::Csv:
    case OutputFormat::Tsv: {
        const char sep = format == OutputFormat::Csv ? ',' : '\t';
        out += "n";
        out += sep;
        out += "a";
        out += sep;
        out += "b\n";
        for (std::size_t n = 1; n <= t.size(); ++n) {
            out += std::to_string(n);
            out += sep;
            out += std::to_string(t.a(n));
            out += sep;
            out += std::to_string(t.b(n));
            out += '\n';
        }
        return out;
    }
    case OutputFormat::Json: {
        out += "[\n";
        for (std::size_t n = 1; n <= t.size(); ++n) {
            out += "[" + std::to_string(n) + "," + std::to_string(t.a(n)) + "," +
                   std::to_string(t.b(n)) + "]";
            if (n < t.size()) out += ",";
            out += "\n";
        }
        out += "]\n";
        return out;
    }
    }
    throw ParameterError("unknown output format");
}

} // namespace empress
