#include "binmat/io.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

#include "binmat/errors.hpp"

namespace binmat {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        std::string body = line.substr(begin, end - begin + 1);
        if (body.empty() || body[0] == '#') continue;
        out.push_back({number, body});
    }
    return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw input_error("line " + std::to_string(line) + ": " + msg);
}

long long parse_number(const Line& line, const std::string& token) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used != token.size()) fail(line.number, "bad number '" + token + "'");
        return v;
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        fail(line.number, "bad number '" + token + "'");
    }
}

std::vector<std::string> split_tokens(const std::string& body) {
    std::vector<std::string> out;
    std::istringstream in(body);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Matroid parse_matroid(const std::string& text) {
    std::optional<int> dim;
    std::optional<PointSet> points;
    for (const Line& line : content_lines(text)) {
        if (line.text.rfind("dim:", 0) == 0) {
            if (dim) fail(line.number, "duplicate dim header");
            auto toks = split_tokens(line.text.substr(4));
            if (toks.size() != 1) fail(line.number, "dim header needs exactly one number");
            long long n = parse_number(line, toks[0]);
            if (n < 1 || n > 28) fail(line.number, "dimension out of range");
            dim = int(n);
            points = PointSet(*dim);
        } else if (line.text.rfind("points:", 0) == 0) {
            if (!dim) fail(line.number, "points before dim header");
            for (const std::string& tok : split_tokens(line.text.substr(7))) {
                long long v = parse_number(line, tok);
                if (v == 0) fail(line.number, "point 0 is not a projective point");
                if (v < 0 || v >= (1ll << *dim)) fail(line.number, "point out of range");
                if (points->test(Vec(v))) fail(line.number, "duplicate point " + tok);
                points->set(Vec(v));
            }
        } else if (line.text.rfind("colors:", 0) == 0 || line.text.rfind("color ", 0) == 0) {
            // tolerated so a coloring file also parses as its underlying matroid
        } else {
            fail(line.number, "unrecognized line");
        }
    }
    if (!dim) throw input_error("missing dim header");
    return Matroid(*dim, *points);
}

std::string emit_matroid(const Matroid& m) {
    std::ostringstream out;
    out << "dim: " << m.dim() << "\n";
    std::vector<Vec> pts = m.ground().to_vector();
    if (pts.empty()) {
        out << "points:\n";
        return out.str();
    }
    for (std::size_t i = 0; i < pts.size(); i += 16) {
        out << "points:";
        for (std::size_t j = i; j < std::min(i + 16, pts.size()); ++j) out << " " << pts[j];
        out << "\n";
    }
    return out.str();
}

Coloring parse_coloring(const std::string& text) {
    std::optional<int> dim;
    std::optional<int> colors;
    std::vector<std::optional<std::uint8_t>> assignment;
    for (const Line& line : content_lines(text)) {
        if (line.text.rfind("dim:", 0) == 0) {
            auto toks = split_tokens(line.text.substr(4));
            if (toks.size() != 1) fail(line.number, "dim header needs exactly one number");
            long long n = parse_number(line, toks[0]);
            if (n < 1 || n > 20) fail(line.number, "dimension out of range for a coloring");
            dim = int(n);
            assignment.assign(std::size_t(1) << *dim, std::nullopt);
        } else if (line.text.rfind("colors:", 0) == 0) {
            auto toks = split_tokens(line.text.substr(7));
            if (toks.size() != 1) fail(line.number, "colors header needs exactly one number");
            long long c = parse_number(line, toks[0]);
            if (c < 1 || c > 255) fail(line.number, "color count out of range");
            colors = int(c);
        } else if (line.text.rfind("color ", 0) == 0) {
            if (!dim || !colors) fail(line.number, "color line before headers");
            auto toks = split_tokens(line.text.substr(6));
            if (toks.size() != 2) fail(line.number, "expected: color <point> <id>");
            long long v = parse_number(line, toks[0]);
            long long id = parse_number(line, toks[1]);
            if (v < 1 || v >= (1ll << *dim)) fail(line.number, "point out of range");
            if (id < 0 || id >= *colors) fail(line.number, "color id out of range");
            if (assignment[std::size_t(v)]) fail(line.number, "duplicate color for point");
            assignment[std::size_t(v)] = std::uint8_t(id);
        } else if (line.text.rfind("points:", 0) == 0) {
            // tolerated: a coloring may embed its point list
        } else {
            fail(line.number, "unrecognized line");
        }
    }
    if (!dim || !colors) throw input_error("coloring needs dim and colors headers");
    Coloring col;
    col.n = *dim;
    col.colors = *colors;
    col.color_of.assign(std::size_t(1) << *dim, 0);
    for (Vec v = 1; v < (Vec(1) << *dim); ++v) {
        if (!assignment[v]) throw input_error("point " + std::to_string(v) + " has no color");
        col.color_of[v] = *assignment[v];
    }
    return col;
}

std::string emit_coloring(const Coloring& col) {
    std::ostringstream out;
    out << "dim: " << col.n << "\n";
    out << "colors: " << col.colors << "\n";
    for (Vec v = 1; v < (Vec(1) << col.n); ++v)
        out << "color " << v << " " << int(col.color_of[v]) << "\n";
    return out.str();
}

namespace {

void flatten(const nlohmann::json& node, const std::string& path, std::ostringstream& out) {
    if (node.is_object()) {
        for (auto it = node.begin(); it != node.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
    } else if (node.is_array()) {
        out << path << ": " << node.dump() << "\n";
    } else {
        out << path << ": " << node.dump() << "\n";
    }
}

}  // namespace

std::string emit_report(const RunReport& report, ReportFormat format) {
    nlohmann::json j;
    j["command"] = report.command;
    j["input_digest"] = report.input_digest;
    j["results"] = report.results;
    j["schema"] = report.schema;
    if (report.timing_ms)
        j["timing_ms"] = *report.timing_ms;
    else
        j["timing_ms"] = nullptr;
    j["version"] = report.version;
    if (format == ReportFormat::json) return j.dump(2) + "\n";
    std::ostringstream out;
    flatten(j, "", out);
    return out.str();
}

std::string digest_bytes(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

}  // namespace binmat
