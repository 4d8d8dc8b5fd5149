#include "specgraph/graph.hpp"

#include <cmath>
#include <sstream>

namespace specgraph {

const char* flavor_name(TruncationFlavor flavor) {
    return flavor == TruncationFlavor::Dirichlet ? "dirichlet" : "neumann";
}

std::size_t Graph::check_vertex(std::size_t x) const {
    if (x >= order())
        raise(ErrorCode::InvalidArgument,
              "vertex index " + std::to_string(x) + " out of range (order " +
                  std::to_string(order()) + ")");
    return x;
}

void Graph::set_edge_weight(std::size_t x, std::size_t y, double b) {
    check_vertex(x);
    check_vertex(y);
    EdgeKey key{std::min(x, y), std::max(x, y)};
    if (b == 0.0)
        edges_.erase(key);
    else
        edges_[key] = b;
}

double Graph::edge_weight(std::size_t x, std::size_t y) const {
    check_vertex(x);
    check_vertex(y);
    auto it = edges_.find({std::min(x, y), std::max(x, y)});
    return it == edges_.end() ? 0.0 : it->second;
}

std::string Graph::display_label(std::size_t x) const {
    check_vertex(x);
    return labels_[x].empty() ? std::to_string(x) : labels_[x];
}

double Graph::degree(std::size_t x) const {
    check_vertex(x);
    double sum = 0.0;
    for (const auto& [key, b] : edges_) {
        if (key.first == x || key.second == x)
            sum += b;
    }
    return sum;
}

std::vector<std::string> Graph::validate() const {
    std::vector<std::string> report;
    auto note = [&](const std::string& msg) { report.push_back(msg); };

    for (std::size_t x = 0; x < order(); ++x) {
        if (!std::isfinite(measure_[x]))
            note("nonfinite measure at vertex " + display_label(x));
        else if (measure_[x] <= 0.0)
            note("nonpositive measure at vertex " + display_label(x));
        if (!std::isfinite(potential_[x]))
            note("nonfinite potential at vertex " + display_label(x));
        else if (potential_[x] < 0.0)
            note("negative potential at vertex " + display_label(x));
    }
    for (const auto& [key, b] : edges_) {
        const std::string name =
            display_label(key.first) + "," + display_label(key.second);
        if (key.first == key.second)
            note("loop at vertex " + display_label(key.first));
        if (!std::isfinite(b))
            note("nonfinite edge weight at edge " + name);
        else if (b < 0.0)
            note("negative edge weight at edge " + name);
    }
    for (std::size_t x = 0; x < order(); ++x) {
        if (!std::isfinite(degree(x)))
            note("nonfinite degree at vertex " + display_label(x));
    }
    return report;
}

Graph Graph::with_potential(std::span<const double> c) const {
    if (c.size() != order())
        raise(ErrorCode::Dimension,
              "potential has " + std::to_string(c.size()) + " entries, graph has " +
                  std::to_string(order()) + " vertices");
    Graph out = *this;
    for (std::size_t x = 0; x < order(); ++x)
        out.potential_[x] = c[x];
    return out;
}

double weighted_inner_product(const Graph& graph, std::span<const double> f,
                              std::span<const double> g) {
    const std::size_t n = graph.order();
    if (f.size() != n || g.size() != n)
        raise(ErrorCode::Dimension,
              "inner product arguments must have one entry per vertex (got " +
                  std::to_string(f.size()) + " and " + std::to_string(g.size()) +
                  ", order " + std::to_string(n) + ")");
    double sum = 0.0;
    for (std::size_t x = 0; x < n; ++x)
        sum += f[x] * g[x] * graph.measures()[x];
    return sum;
}

Graph generate_paper_path(std::size_t n) {
    if (n == 0)
        raise(ErrorCode::InvalidArgument, "paper path needs at least one vertex");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double k = static_cast<double>(i + 1);
        g.set_measure(i, 1.0 / (k * k * k * k));
        g.set_label(i, std::to_string(i + 1));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double k = static_cast<double>(i + 1);
        g.set_edge_weight(i, i + 1, k * k);
    }
    return g;
}

std::vector<double> truncate_potential(std::span<const double> c, std::size_t keep) {
    if (keep > c.size())
        raise(ErrorCode::Dimension,
              "cannot keep " + std::to_string(keep) + " entries of a potential with " +
                  std::to_string(c.size()));
    std::vector<double> out(c.size(), 0.0);
    for (std::size_t i = 0; i < keep; ++i)
        out[i] = c[i];
    return out;
}

} // namespace specgraph
