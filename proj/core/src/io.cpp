#include "caproute/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "caproute/errors.hpp"

namespace caproute {

namespace {

double parse_load(std::string_view tok, int line_no) {
    double x = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError("bad load '" + std::string(tok) + "'", line_no);
    if (x < 0.0) throw NegativeLoadError("negative load '" + std::string(tok) + "'", line_no);
    return x;
}

}  // namespace

LoadedGraph parse_edge_list(std::string_view text) {
    std::vector<LabeledEdge> edges;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (size_t h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        std::vector<std::string_view> toks;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) toks.push_back(line.substr(i, j - i));
            i = j;
        }
        if (toks.empty()) continue;
        if (toks.size() != 3)
            throw ParseError("expected '<u> <v> <load>', got " + std::to_string(toks.size()) +
                                 " fields",
                             line_no);
        edges.push_back(
            {std::string(toks[0]), std::string(toks[1]), parse_load(toks[2], line_no)});
    }
    return make_loaded_graph(edges);
}

LoadedGraph parse_json_graph(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top-level JSON value must be an object");

    std::vector<LabeledEdge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("'edges' must be an array");
        for (const auto& je : j["edges"]) {
            if (!je.is_object() || !je.contains("u") || !je.contains("v") ||
                !je.contains("load"))
                throw ParseError("each edge needs 'u', 'v', 'load'");
            if (!je["u"].is_string() || !je["v"].is_string() || !je["load"].is_number())
                throw ParseError("edge fields: 'u','v' strings, 'load' number");
            double load = je["load"].get<double>();
            if (load < 0.0) throw NegativeLoadError("negative load in edge object");
            edges.push_back({je["u"].get<std::string>(), je["v"].get<std::string>(), load});
        }
    }
    std::vector<std::string> extra;
    if (j.contains("nodes")) {
        if (!j["nodes"].is_array()) throw ParseError("'nodes' must be an array");
        for (const auto& jn : j["nodes"]) {
            if (!jn.is_string()) throw ParseError("'nodes' entries must be strings");
            extra.push_back(jn.get<std::string>());
        }
    }
    return make_loaded_graph(edges, extra);
}

LoadedGraph parse_graph(std::string_view text, GraphFormat format) {
    if (format == GraphFormat::Auto) {
        size_t i = text.find_first_not_of(" \t\r\n");
        format = (i != std::string_view::npos && text[i] == '{') ? GraphFormat::Json
                                                                 : GraphFormat::EdgeList;
    }
    return format == GraphFormat::Json ? parse_json_graph(text) : parse_edge_list(text);
}

std::string format_double(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, p);
}

std::string serialize_edge_list(const LoadedGraph& g) {
    std::string out;
    for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
        const Edge& ed = g.graph.edge(e);
        out += g.labels[ed.u];
        out += ' ';
        out += g.labels[ed.v];
        out += ' ';
        out += format_double(g.loads[e]);
        out += '\n';
    }
    return out;
}

std::string serialize_json_graph(const LoadedGraph& g) {
    nlohmann::ordered_json j;
    j["nodes"] = g.labels;
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
        const Edge& ed = g.graph.edge(e);
        edges.push_back({{"u", g.labels[ed.u]}, {"v", g.labels[ed.v]}, {"load", g.loads[e]}});
    }
    return j.dump(2) + "\n";
}

std::string to_dot(const LoadedGraph& g, const DotStyle& style) {
    std::vector<char> congested(g.graph.edge_count(), 0);
    for (EdgeId e : style.congested_edges)
        if (e >= 0 && e < g.graph.edge_count()) congested[e] = 1;

    std::vector<char> on_path_edge(g.graph.edge_count(), 0);
    for (size_t i = 0; i + 1 < style.path.size(); ++i) {
        EdgeId e = g.graph.edge_id(style.path[i], style.path[i + 1]);
        if (e >= 0) on_path_edge[e] = 1;
    }
    std::vector<char> on_path_node(g.graph.node_count(), 0);
    for (NodeId v : style.path)
        if (v >= 0 && v < g.graph.node_count()) on_path_node[v] = 1;

    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };

    std::string out = "graph {\n";
    for (NodeId v = 0; v < g.graph.node_count(); ++v) {
        std::string attrs;
        if (set_contains(style.filled_nodes, v))
            attrs = "style=filled, fillcolor=lightgray";
        if (on_path_node[v]) attrs += (attrs.empty() ? "" : ", ") + std::string("penwidth=2");
        out += "  " + quote(g.labels[v]);
        if (!attrs.empty()) out += " [" + attrs + "]";
        out += ";\n";
    }
    for (EdgeId e = 0; e < g.graph.edge_count(); ++e) {
        const Edge& ed = g.graph.edge(e);
        std::string attrs = "label=" + quote(format_double(g.loads[e]));
        if (congested[e]) attrs += ", congested=true, color=red";
        if (on_path_edge[e]) attrs += ", style=bold, penwidth=3";
        out += "  " + quote(g.labels[ed.u]) + " -- " + quote(g.labels[ed.v]) + " [" + attrs +
               "];\n";
    }
    out += "}\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace caproute
