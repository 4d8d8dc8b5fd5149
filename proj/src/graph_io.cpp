#include "specgraph/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "json.hpp"

namespace specgraph {

namespace {

std::string shortest_decimal(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

double parse_double(const std::string& token, const std::string& where) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        raise(ErrorCode::Parse, where + ": malformed number '" + token + "'");
    return value;
}

// splits "m=1.5" into key and value
std::pair<std::string, std::string> split_kv(const std::string& token,
                                             const std::string& where) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
        raise(ErrorCode::Parse, where + ": expected key=value, got '" + token + "'");
    return {token.substr(0, eq), token.substr(eq + 1)};
}

} // namespace

Graph read_graph_text(std::istream& in, const std::string& source_name) {
    struct VertexRecord {
        double m = 1.0;
        double c = 0.0;
        std::string id;
    };
    std::vector<VertexRecord> vertices;
    std::map<std::string, std::size_t> index_of;
    std::vector<std::tuple<std::size_t, std::size_t, double>> edges;
    std::map<std::pair<std::size_t, std::size_t>, bool> seen_edges;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = source_name + ":" + std::to_string(line_no);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#')
            continue;
        if (head == "vertex") {
            VertexRecord rec;
            if (!(ls >> rec.id))
                raise(ErrorCode::Parse, where + ": vertex line needs an id");
            if (index_of.count(rec.id))
                raise(ErrorCode::Parse, where + ": duplicate vertex id '" + rec.id + "'");
            bool have_m = false;
            std::string token;
            while (ls >> token) {
                auto [key, value] = split_kv(token, where);
                if (key == "m") {
                    rec.m = parse_double(value, where);
                    have_m = true;
                } else if (key == "c") {
                    rec.c = parse_double(value, where);
                } else {
                    raise(ErrorCode::Parse, where + ": unknown key '" + key + "'");
                }
            }
            if (!have_m)
                raise(ErrorCode::Parse, where + ": vertex line needs m=<float>");
            index_of[rec.id] = vertices.size();
            vertices.push_back(std::move(rec));
        } else if (head == "edge") {
            std::string u, v;
            if (!(ls >> u >> v))
                raise(ErrorCode::Parse, where + ": edge line needs two vertex ids");
            for (const auto* id : {&u, &v})
                if (!index_of.count(*id))
                    raise(ErrorCode::Parse,
                          where + ": edge names undeclared vertex '" + *id + "'");
            double b = 0.0;
            bool have_b = false;
            std::string token;
            while (ls >> token) {
                auto [key, value] = split_kv(token, where);
                if (key == "b") {
                    b = parse_double(value, where);
                    have_b = true;
                } else {
                    raise(ErrorCode::Parse, where + ": unknown key '" + key + "'");
                }
            }
            if (!have_b)
                raise(ErrorCode::Parse, where + ": edge line needs b=<float>");
            const std::size_t ui = index_of[u], vi = index_of[v];
            const auto key = std::make_pair(std::min(ui, vi), std::max(ui, vi));
            if (seen_edges.count(key))
                raise(ErrorCode::Parse,
                      where + ": duplicate edge " + u + "," + v);
            seen_edges[key] = true;
            edges.emplace_back(ui, vi, b);
        } else {
            raise(ErrorCode::Parse,
                  source_name + ":" + std::to_string(line_no) +
                      ": unknown directive '" + head + "'");
        }
    }

    Graph g(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        g.set_measure(i, vertices[i].m);
        g.set_potential(i, vertices[i].c);
        g.set_label(i, vertices[i].id);
    }
    for (const auto& [u, v, b] : edges) {
        if (b != 0.0)
            g.set_edge_weight(u, v, b); // loops load fine, validate reports them
    }
    return g;
}

void write_graph_text(std::ostream& out, const Graph& graph) {
    out << "# specgraph graph, " << graph.order() << " vertices\n";
    for (std::size_t x = 0; x < graph.order(); ++x) {
        out << "vertex " << graph.display_label(x) << " m="
            << shortest_decimal(graph.measures()[x]);
        if (graph.potentials()[x] != 0.0)
            out << " c=" << shortest_decimal(graph.potentials()[x]);
        out << "\n";
    }
    for (const auto& [key, b] : graph.edges()) {
        out << "edge " << graph.display_label(key.first) << " "
            << graph.display_label(key.second) << " b=" << shortest_decimal(b)
            << "\n";
    }
}

Graph read_graph_json(std::istream& in, const std::string& source_name) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        raise(ErrorCode::Parse, source_name + ": " + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("vertices"))
            raise(ErrorCode::Parse, source_name + ": expected object with 'vertices'");
        const auto& vs = doc.at("vertices");
        Graph g(vs.size());
        std::map<std::string, std::size_t> index_of;
        std::size_t i = 0;
        for (const auto& v : vs) {
            std::string id = v.at("id").is_string()
                                 ? v.at("id").get<std::string>()
                                 : v.at("id").dump();
            if (index_of.count(id))
                raise(ErrorCode::Parse,
                      source_name + ": duplicate vertex id '" + id + "'");
            index_of[id] = i;
            g.set_label(i, id);
            g.set_measure(i, v.at("m").get<double>());
            g.set_potential(i, v.value("c", 0.0));
            ++i;
        }
        for (const auto& e : doc.value("edges", nlohmann::json::array())) {
            std::string u = e.at("u").is_string() ? e.at("u").get<std::string>()
                                                  : e.at("u").dump();
            std::string w = e.at("v").is_string() ? e.at("v").get<std::string>()
                                                  : e.at("v").dump();
            for (const auto* id : {&u, &w})
                if (!index_of.count(*id))
                    raise(ErrorCode::Parse,
                          source_name + ": edge names undeclared vertex '" + *id + "'");
            g.set_edge_weight(index_of[u], index_of[w], e.at("b").get<double>());
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::Parse, source_name + ": " + e.what());
    }
}

void write_graph_json(std::ostream& out, const Graph& graph) {
    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (std::size_t x = 0; x < graph.order(); ++x) {
        nlohmann::json v;
        v["id"] = graph.display_label(x);
        v["m"] = graph.measures()[x];
        if (graph.potentials()[x] != 0.0)
            v["c"] = graph.potentials()[x];
        doc["vertices"].push_back(std::move(v));
    }
    doc["edges"] = nlohmann::json::array();
    for (const auto& [key, b] : graph.edges()) {
        nlohmann::json e;
        e["u"] = graph.display_label(key.first);
        e["v"] = graph.display_label(key.second);
        e["b"] = b;
        doc["edges"].push_back(std::move(e));
    }
    out << doc.dump(2) << "\n";
}

namespace {

bool has_json_extension(const std::string& path) {
    const auto dot = path.rfind('.');
    return dot != std::string::npos && path.substr(dot) == ".json";
}

} // namespace

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(ErrorCode::Io, "cannot open '" + path + "' for reading");
    return has_json_extension(path) ? read_graph_json(in, path)
                                    : read_graph_text(in, path);
}

void write_graph_file(const Graph& graph, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        raise(ErrorCode::Io, "cannot open '" + path + "' for writing");
    if (has_json_extension(path))
        write_graph_json(out, graph);
    else
        write_graph_text(out, graph);
    if (!out)
        raise(ErrorCode::Io, "failed writing '" + path + "'");
}

} // namespace specgraph
