#include "specgraph/operator.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace specgraph {

OperatorMatrix::OperatorMatrix(Matrix a, Graph graph, TruncationFlavor flavor)
    : a_(std::move(a)), graph_(std::move(graph)), flavor_(flavor),
      inf_norm_(a_.inf_norm()) {}

double OperatorMatrix::max_potential_ratio() const {
    double ratio = 0.0;
    for (std::size_t x = 0; x < graph_.order(); ++x)
        ratio = std::max(ratio, graph_.potentials()[x] / graph_.measures()[x]);
    return ratio;
}

OperatorMatrix assemble(const Graph& graph) {
    const auto report = graph.validate();
    if (!report.empty()) {
        std::ostringstream msg;
        msg << "graph fails validation:";
        for (const auto& item : report)
            msg << "\n  " << item;
        raise(ErrorCode::InvalidGraph, msg.str());
    }

    const std::size_t n = graph.order();
    std::vector<double> degree(n, 0.0);
    for (const auto& [key, b] : graph.edges()) {
        degree[key.first] += b;
        degree[key.second] += b;
    }

    Matrix a(n);
    for (std::size_t x = 0; x < n; ++x)
        a(x, x) = (degree[x] + graph.potentials()[x]) / graph.measures()[x];
    for (const auto& [key, b] : graph.edges()) {
        const auto [x, y] = key;
        const double off =
            -b / std::sqrt(graph.measures()[x] * graph.measures()[y]);
        a(x, y) = off;
        a(y, x) = off; // mirrored once, symmetric by construction
    }
    return OperatorMatrix(std::move(a), graph,
                          graph.flavor().value_or(TruncationFlavor::Neumann));
}

std::vector<double> apply_operator(const OperatorMatrix& op, std::span<const double> f) {
    const Graph& g = op.graph();
    const std::size_t n = g.order();
    if (f.size() != n)
        raise(ErrorCode::Dimension,
              "function has " + std::to_string(f.size()) + " entries, graph has " +
                  std::to_string(n) + " vertices");
    std::vector<double> out(n, 0.0);
    for (const auto& [key, b] : g.edges()) {
        const auto [x, y] = key;
        out[x] += b * (f[x] - f[y]);
        out[y] += b * (f[y] - f[x]);
    }
    for (std::size_t x = 0; x < n; ++x)
        out[x] = out[x] / g.measures()[x] +
                 g.potentials()[x] / g.measures()[x] * f[x];
    return out;
}

double quadratic_form(const Graph& graph, std::span<const double> f,
                      std::span<const double> g) {
    const std::size_t n = graph.order();
    if (f.size() != n || g.size() != n)
        raise(ErrorCode::Dimension,
              "form arguments must have one entry per vertex (got " +
                  std::to_string(f.size()) + " and " + std::to_string(g.size()) +
                  ", order " + std::to_string(n) + ")");
    // each unordered pair appears once; this equals (1/2) over ordered pairs
    double form = 0.0;
    for (const auto& [key, b] : graph.edges()) {
        const auto [x, y] = key;
        form += b * (f[x] - f[y]) * (g[x] - g[y]);
    }
    for (std::size_t x = 0; x < n; ++x)
        form += graph.potentials()[x] * f[x] * g[x];
    return form;
}

} // namespace specgraph
