#pragma once

#include <optional>
#include <string>

#include "vendor_json.hpp"

#include "binmat/matroid.hpp"
#include "binmat/ramsey.hpp"

namespace binmat {

/// Line-oriented matroid container:
///   # comment
///   dim: <n>
///   points: <space-separated decimal integers>   (repeatable)
/// Canonical emission lists points strictly increasing, sixteen per line.
Matroid parse_matroid(const std::string& text);
std::string emit_matroid(const Matroid& m);

/// Coloring container: a matroid file plus
///   colors: <c>
///   color <point> <id>                            (one line per point)
Coloring parse_coloring(const std::string& text);
std::string emit_coloring(const Coloring& col);

enum class ReportFormat { text, json };

/// One structured result record per CLI run. Serialization is deterministic:
/// JSON keys sorted, text rendered as sorted dotted paths.
struct RunReport {
    std::string command;
    std::string input_digest;
    nlohmann::json results;
    std::optional<double> timing_ms;  // only populated on request
    std::string version = "binmat 0.1.0";
    int schema = 1;
};

std::string emit_report(const RunReport& report, ReportFormat format);

/// FNV-1a 64-bit digest of arbitrary bytes, rendered as "fnv1a64:<hex>".
std::string digest_bytes(const std::string& bytes);

}  // namespace binmat
