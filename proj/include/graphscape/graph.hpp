#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphscape {

struct Edge {
    int u = 0;
    int v = 0;
    double weight = 1.0;
};

/// Node-labelled graph with nonnegative edge weights.
///
/// Nodes are dense ids 0..n-1. Undirected graphs store each edge once with
/// u < v; no self-loops or duplicate (u,v) pairs. Nodes with no incident
/// edge count as isolated and are skipped by the landscape operations.
/// Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, bool directed, std::vector<Edge> edges,
          std::vector<std::string> labels = {}, std::vector<std::string> keys = {});

    int n() const { return n_; }
    bool directed() const { return directed_; }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Raw token the node had in the edge-list file (equals label when no sidecar).
    const std::string& key(int v) const { return keys_[v]; }

    /// Undirected: all neighbors. Directed: out-neighbors.
    std::span<const std::pair<int, double>> neighbors(int v) const {
        return {adj_[v].data(), adj_[v].size()};
    }
    std::span<const std::pair<int, double>> in_neighbors(int v) const {
        return directed_ ? std::span<const std::pair<int, double>>{radj_[v].data(), radj_[v].size()}
                         : neighbors(v);
    }

    /// Number of incident (out-)edges.
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    /// Sum of incident (out-)edge weights.
    double strength(int v) const { return strength_[v]; }

    bool isolated(int v) const;
    /// Non-isolated node ids, ascending.
    std::vector<int> active() const;

    /// Lookup by display label, falling back to the raw file token.
    std::optional<int> find(std::string_view label) const;
    /// find() or input_error naming the label.
    int node(std::string_view label) const;

private:
    int n_ = 0;
    bool directed_ = false;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<std::string> keys_;
    std::vector<std::vector<std::pair<int, double>>> adj_;
    std::vector<std::vector<std::pair<int, double>>> radj_;  // directed only
    std::vector<double> strength_;
};

/// Parse a whitespace-separated edge list ("U V" or "U V W", '#' comments).
/// Tokens become node keys in first-appearance order; an optional sidecar
/// (lines "ID<TAB>NAME") supplies display labels.
Graph load_edge_list(const std::filesystem::path& path, bool directed,
                     const std::optional<std::filesystem::path>& labels_path = std::nullopt);

enum class ThresholdMode {
    strict_greater,      // keep edges with weight > tau
    symmetrize_average,  // directed input -> undirected, weight (w_uv + w_vu)/2, then > tau
};

/// Drop edges at or below tau. Nodes losing all edges become isolated and are
/// excluded from downstream landscape analysis.
Graph threshold_edges(const Graph& g, double tau, ThresholdMode mode);

/// Induced subgraph on the connected component containing `label`
/// (undirected graphs; edge directions ignored for membership otherwise).
Graph component_of(const Graph& g, std::string_view label);

}  // namespace graphscape
