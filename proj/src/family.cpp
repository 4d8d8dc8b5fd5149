#include "specgraph/family.hpp"

#include <utility>

namespace specgraph {

GraphFamily::GraphFamily(Kind kind, Rule m_rule, Rule b_rule, Rule c_rule)
    : kind_(kind), m_rule_(std::move(m_rule)), b_rule_(std::move(b_rule)),
      c_rule_(std::move(c_rule)) {}

GraphFamily GraphFamily::paper_path() {
    auto m = [](std::size_t k) {
        const double x = static_cast<double>(k);
        return 1.0 / (x * x * x * x);
    };
    auto b = [](std::size_t k) {
        const double x = static_cast<double>(k);
        return x * x;
    };
    auto c = [](std::size_t) { return 0.0; };
    return GraphFamily(Kind::PaperPath, m, b, c);
}

GraphFamily GraphFamily::custom(Rule m_rule, Rule b_rule, Rule c_rule) {
    if (!m_rule || !b_rule || !c_rule)
        raise(ErrorCode::InvalidArgument, "family rules must all be set");
    return GraphFamily(Kind::Custom, std::move(m_rule), std::move(b_rule),
                       std::move(c_rule));
}

Graph GraphFamily::truncate(std::size_t n, TruncationFlavor flavor) const {
    if (n == 0)
        raise(ErrorCode::InvalidArgument, "truncation size must be positive");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = i + 1;
        g.set_measure(i, m_rule_(k));
        g.set_potential(i, c_rule_(k));
        g.set_label(i, std::to_string(k));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double b = b_rule_(i + 1);
        if (b != 0.0)
            g.set_edge_weight(i, i + 1, b);
    }
    if (flavor == TruncationFlavor::Dirichlet) {
        // dropped crossing edge b(n,n+1) becomes killing potential at vertex n
        g.set_potential(n - 1, g.potential(n - 1) + b_rule_(n));
    }
    g.set_flavor(flavor);
    return g;
}

} // namespace specgraph
