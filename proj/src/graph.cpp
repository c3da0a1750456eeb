#include "graphscape/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "graphscape/errors.hpp"

namespace graphscape {

Graph::Graph(int n, bool directed, std::vector<Edge> edges,
             std::vector<std::string> labels, std::vector<std::string> keys)
    : n_(n), directed_(directed), edges_(std::move(edges)),
      labels_(std::move(labels)), keys_(std::move(keys)) {
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
    }
    if (keys_.empty()) keys_ = labels_;
    if (static_cast<int>(labels_.size()) != n_ || static_cast<int>(keys_.size()) != n_)
        throw input_error("graph: label/key count does not match node count");

    adj_.assign(n_, {});
    if (directed_) radj_.assign(n_, {});
    strength_.assign(n_, 0.0);

    std::set<std::pair<int, int>> seen;
    for (auto& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw input_error("graph: edge endpoint out of range");
        if (e.u == e.v)
            throw input_error("graph: self-loop at node '" + labels_[e.u] + "'");
        if (e.weight < 0.0)
            throw input_error("graph: negative weight on edge ('" + labels_[e.u] + "', '" +
                              labels_[e.v] + "')");
        if (!directed_ && e.u > e.v) std::swap(e.u, e.v);
        if (!seen.insert({e.u, e.v}).second)
            throw input_error("graph: duplicate edge ('" + labels_[e.u] + "', '" +
                              labels_[e.v] + "')");
        adj_[e.u].push_back({e.v, e.weight});
        strength_[e.u] += e.weight;
        if (directed_) {
            radj_[e.v].push_back({e.u, e.weight});
        } else {
            adj_[e.v].push_back({e.u, e.weight});
            strength_[e.v] += e.weight;
        }
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    for (auto& a : radj_) std::sort(a.begin(), a.end());
}

bool Graph::isolated(int v) const {
    if (!directed_) return adj_[v].empty();
    return adj_[v].empty() && radj_[v].empty();
}

std::vector<int> Graph::active() const {
    std::vector<int> out;
    out.reserve(n_);
    for (int v = 0; v < n_; ++v)
        if (!isolated(v)) out.push_back(v);
    return out;
}

std::optional<int> Graph::find(std::string_view label) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == label) return v;
    for (int v = 0; v < n_; ++v)
        if (keys_[v] == label) return v;
    return std::nullopt;
}

int Graph::node(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw input_error("unknown node '" + std::string(label) + "'");
}

namespace {

double parse_weight(const std::string& tok, const std::filesystem::path& path, int line) {
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw input_error(path.string() + ":" + std::to_string(line) +
                          ": cannot parse weight '" + tok + "'");
    return w;
}

}  // namespace

Graph load_edge_list(const std::filesystem::path& path, bool directed,
                     const std::optional<std::filesystem::path>& labels_path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open edge list '" + path.string() + "'");

    std::unordered_map<std::string, int> id;
    std::vector<std::string> keys;
    std::vector<Edge> edges;

    auto intern = [&](const std::string& tok) {
        auto [it, fresh] = id.try_emplace(tok, static_cast<int>(keys.size()));
        if (fresh) keys.push_back(tok);
        return it->second;
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string u, v, w, extra;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v))
            throw input_error(path.string() + ":" + std::to_string(lineno) +
                              ": expected 'U V' or 'U V W'");
        Edge e;
        if (ls >> w) {
            if (ls >> extra)
                throw input_error(path.string() + ":" + std::to_string(lineno) +
                                  ": trailing token '" + extra + "'");
            e.weight = parse_weight(w, path, lineno);
            if (e.weight < 0.0)
                throw input_error(path.string() + ":" + std::to_string(lineno) +
                                  ": negative weight");
        }
        e.u = intern(u);
        e.v = intern(v);
        edges.push_back(e);
    }

    std::vector<std::string> labels = keys;
    if (labels_path) {
        std::ifstream lin(*labels_path);
        if (!lin) throw input_error("cannot open label map '" + labels_path->string() + "'");
        std::string lline;
        int lno = 0;
        while (std::getline(lin, lline)) {
            ++lno;
            if (lline.empty() || lline[0] == '#') continue;
            auto tab = lline.find('\t');
            if (tab == std::string::npos)
                throw input_error(labels_path->string() + ":" + std::to_string(lno) +
                                  ": expected 'ID<TAB>NAME'");
            std::string key = lline.substr(0, tab);
            std::string name = lline.substr(tab + 1);
            if (!name.empty() && name.back() == '\r') name.pop_back();
            if (auto it = id.find(key); it != id.end()) labels[it->second] = name;
        }
    }

    try {
        return Graph(static_cast<int>(keys.size()), directed, std::move(edges),
                     std::move(labels), std::move(keys));
    } catch (const input_error& e) {
        throw input_error(path.string() + ": " + e.what());
    }
}

Graph threshold_edges(const Graph& g, double tau, ThresholdMode mode) {
    if (tau < 0.0) throw input_error("threshold: tau must be nonnegative");
    std::vector<Edge> kept;
    bool out_directed = g.directed();
    if (mode == ThresholdMode::symmetrize_average) {
        if (!g.directed())
            throw input_error("threshold: symmetrize-average requires a directed graph");
        std::map<std::pair<int, int>, double> acc;
        for (const auto& e : g.edges()) {
            auto key = std::minmax(e.u, e.v);
            acc[{key.first, key.second}] += 0.5 * e.weight;
        }
        for (const auto& [uv, w] : acc)
            if (w > tau) kept.push_back({uv.first, uv.second, w});
        out_directed = false;
    } else {
        for (const auto& e : g.edges())
            if (e.weight > tau) kept.push_back(e);
    }
    return Graph(g.n(), out_directed, std::move(kept), g.labels(),
                 std::vector<std::string>(g.labels().size()) == g.labels()
                     ? g.labels()
                     : g.labels());
}

Graph component_of(const Graph& g, std::string_view label) {
    int root = g.node(label);
    std::vector<char> in_comp(g.n(), 0);
    std::vector<int> stack{root};
    in_comp[root] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        auto push = [&](int y) {
            if (!in_comp[y]) {
                in_comp[y] = 1;
                stack.push_back(y);
            }
        };
        for (auto [y, w] : g.neighbors(x)) push(y);
        for (auto [y, w] : g.in_neighbors(x)) push(y);
    }
    std::vector<Edge> kept;
    for (const auto& e : g.edges())
        if (in_comp[e.u] && in_comp[e.v]) kept.push_back(e);
    return Graph(g.n(), g.directed(), std::move(kept), g.labels());
}

}  // namespace graphscape
