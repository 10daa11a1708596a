#include "hvg/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hvg/error.hpp"

namespace hvg {

namespace {

[[noreturn]] void fail_at(const std::string& what, int line, int column) {
    throw ParseError(what + " at line " + std::to_string(line) + ", column " +
                     std::to_string(column));
}

bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

int parse_int_token(const std::string& token, const std::string& what, int line) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        fail_at("expected " + what + ", got '" + token + "'", line, 1);
    }
    if (used != token.size() || value < -1000000000LL || value > 1000000000LL) {
        fail_at("expected " + what + ", got '" + token + "'", line, 1);
    }
    return static_cast<int>(value);
}

Graph parse_edge_list_document(const std::string& text) {
    std::istringstream input(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(input, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        std::istringstream row(strip_comment(line));
        if (n < 0) {
            std::string keyword, count, extra;
            row >> keyword >> count;
            if (keyword != "n" || count.empty() || (row >> extra)) {
                fail_at("expected header 'n <count>'", line_no, 1);
            }
            n = parse_int_token(count, "a vertex count", line_no);
            continue;
        }
        std::string a, b, extra;
        row >> a >> b;
        if (a.empty() || b.empty() || (row >> extra)) {
            fail_at("expected an edge line 'i j'", line_no, 1);
        }
        edges.emplace_back(parse_int_token(a, "a vertex", line_no),
                           parse_int_token(b, "a vertex", line_no));
    }
    if (n < 0) throw ParseError("graph document is empty");
    return Graph(n, std::move(edges));
}

Graph parse_json_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
        !doc["n"].is_number_integer() || !doc["edges"].is_array()) {
        throw ParseError("graph document needs an integer \"n\" and an \"edges\" array");
    }
    std::vector<Edge> edges;
    for (const auto& entry : doc["edges"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer()) {
            throw ParseError("each edge must be a two-integer array");
        }
        edges.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }
    return Graph(doc["n"].get<int>(), std::move(edges));
}

} // namespace

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.size() << "\n";
    for (const Edge& e : g.edges()) out << e.first << " " << e.second << "\n";
    return out.str();
}

std::string to_json(const Graph& g) {
    nlohmann::json doc;
    doc["n"] = g.size();
    doc["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges()) doc["edges"].push_back({e.first, e.second});
    return doc.dump();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (int v = 1; v <= g.size(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) {
        out << "  " << e.first << " -- " << e.second << ";\n";
    }
    out << "}\n";
    return out.str();
}

Graph parse_graph(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '{' ? parse_json_document(text) : parse_edge_list_document(text);
    }
    throw ParseError("graph document is empty");
}

namespace {

DataSequence parse_series_line(const std::string& line, int line_no) {
    DataSequence out;
    std::size_t i = 0;
    while (i < line.size()) {
        char ch = line[i];
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            int start_column = static_cast<int>(i) + 1;
            std::string token;
            int dots = 0;
            int digits = 0;
            while (i < line.size() &&
                   (std::isdigit(static_cast<unsigned char>(line[i])) || line[i] == '.')) {
                if (line[i] == '.') ++dots;
                else ++digits;
                token.push_back(line[i]);
                ++i;
            }
            if (dots > 1 || digits == 0) {
                fail_at("malformed number '" + token + "'", line_no, start_column);
            }
            out.push_back(std::stod(token));
            continue;
        }
        fail_at(std::string("unexpected character '") + ch + "'", line_no,
                static_cast<int>(i) + 1);
    }
    return out;
}

} // namespace

std::vector<DataSequence> parse_series_file(const std::string& text) {
    std::vector<DataSequence> sequences;
    std::istringstream input(text);
    std::string line;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] == '#') continue;
        DataSequence seq = parse_series_line(line, line_no);
        if (seq.empty()) {
            fail_at("empty sequence", line_no, 1);
        }
        sequences.push_back(std::move(seq));
    }
    return sequences;
}

std::string format_sequence(const DataSequence& d) {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out << " ";
        double v = d[i];
        if (std::abs(v) < 1e15 && v == std::floor(v)) {
            out << static_cast<long long>(v);
        } else {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.10g", v);
            out << buf;
        }
    }
    return out.str();
}

} // namespace hvg
