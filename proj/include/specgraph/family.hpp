#ifndef SPECGRAPH_FAMILY_HPP
#define SPECGRAPH_FAMILY_HPP

#include <cstddef>
#include <functional>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Rule-defined infinite path family over vertices 1,2,3,... where
/// m_rule(k) is the measure of vertex k, b_rule(k) the weight of the edge
/// (k,k+1) and c_rule(k) the potential.  Only finite truncations are ever
/// materialized.
class GraphFamily {
public:
    using Rule = std::function<double(std::size_t)>; // 1-based index

    enum class Kind { PaperPath, Custom };

    static GraphFamily paper_path();
    static GraphFamily custom(Rule m_rule, Rule b_rule, Rule c_rule);

    Kind kind() const noexcept { return kind_; }

    double measure_rule(std::size_t k) const { return m_rule_(k); }
    double edge_rule(std::size_t k) const { return b_rule_(k); }
    double potential_rule(std::size_t k) const { return c_rule_(k); }

    /// Finite section on vertices 1..n.  Neumann keeps only interior data;
    /// Dirichlet additionally folds the dropped crossing edge b(n,n+1) into
    /// the potential of vertex n.
    Graph truncate(std::size_t n, TruncationFlavor flavor) const;

private:
    GraphFamily(Kind kind, Rule m_rule, Rule b_rule, Rule c_rule);

    Kind kind_;
    Rule m_rule_;
    Rule b_rule_;
    Rule c_rule_;
};

} // namespace specgraph

#endif
