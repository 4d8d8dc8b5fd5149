#ifndef SPECGRAPH_GRAPH_HPP
#define SPECGRAPH_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specgraph/errors.hpp"

namespace specgraph {

/// Boundary handling used when a rule-defined family is cut to finite size.
/// Neumann drops crossing edges; Dirichlet folds them into the potential of
/// the boundary vertex (killing at the removed vertices).
enum class TruncationFlavor { Neumann, Dirichlet };

const char* flavor_name(TruncationFlavor flavor);

/// A weighted graph (b,c) over a discrete measure space (X,m).
///
/// Vertices are contiguous indices 0..order()-1 with optional string labels.
/// m is a positive vertex measure, b a symmetric nonnegative edge weight
/// stored once per unordered pair, c a nonnegative vertex potential.
/// Setters accept values that violate the numeric invariants (so that files
/// describing broken graphs can be loaded and reported); validate() lists
/// every violation.
class Graph {
public:
    using EdgeKey = std::pair<std::size_t, std::size_t>; // normalized (min,max)
    using EdgeMap = std::map<EdgeKey, double>;

    Graph() = default;
    explicit Graph(std::size_t order)
        : measure_(order, 1.0), potential_(order, 0.0), labels_(order) {}

    std::size_t order() const noexcept { return measure_.size(); }

    double measure(std::size_t x) const { return measure_.at(check_vertex(x)); }
    double potential(std::size_t x) const { return potential_.at(check_vertex(x)); }

    void set_measure(std::size_t x, double m) { measure_[check_vertex(x)] = m; }
    void set_potential(std::size_t x, double c) { potential_[check_vertex(x)] = c; }

    /// Stores b(x,y); overwrites an existing entry, removes it when b == 0.
    void set_edge_weight(std::size_t x, std::size_t y, double b);
    /// b(x,y), zero when the pair carries no edge.
    double edge_weight(std::size_t x, std::size_t y) const;

    const EdgeMap& edges() const noexcept { return edges_; }
    const std::vector<double>& measures() const noexcept { return measure_; }
    const std::vector<double>& potentials() const noexcept { return potential_; }

    void set_label(std::size_t x, std::string label) { labels_[check_vertex(x)] = std::move(label); }
    /// Label when one was assigned, otherwise the decimal index.
    std::string display_label(std::size_t x) const;
    const std::string& raw_label(std::size_t x) const { return labels_.at(check_vertex(x)); }

    /// Weighted degree sum_y b(x,y).
    double degree(std::size_t x) const;

    /// Every violated invariant with its location; empty means valid.
    std::vector<std::string> validate() const;
    bool is_valid() const { return validate().empty(); }

    std::optional<TruncationFlavor> flavor() const noexcept { return flavor_; }
    void set_flavor(TruncationFlavor flavor) noexcept { flavor_ = flavor; }

    /// Copy with the potential replaced by `c`.
    Graph with_potential(std::span<const double> c) const;

private:
    std::size_t check_vertex(std::size_t x) const;

    std::vector<double> measure_;
    std::vector<double> potential_;
    std::vector<std::string> labels_;
    EdgeMap edges_;
    std::optional<TruncationFlavor> flavor_;
};

/// sum_x f(x) g(x) m(x), the ell^2(X,m) scalar product.
double weighted_inner_product(const Graph& graph, std::span<const double> f,
                              std::span<const double> g);

/// Path graph on vertices 1..n with m(k)=k^-4, b(k,k+1)=k^2 and zero
/// potential; labels carry the 1-based vertex numbers.
Graph generate_paper_path(std::size_t n);

/// c_M: equal to c on the first `keep` vertices, zero afterwards.
std::vector<double> truncate_potential(std::span<const double> c, std::size_t keep);

} // namespace specgraph

#endif
