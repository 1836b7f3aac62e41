#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cks {

using NodeId = std::uint32_t;

// Unreachable marker used by bfs_distances.
inline constexpr std::int32_t kUnreachable = -1;

struct ParseError : std::runtime_error {
    ParseError(std::string message, std::size_t line_number)
        : std::runtime_error(std::move(message)), line(line_number) {}
    std::size_t line;
};

// Immutable undirected simple graph in CSR form. Node ids are contiguous,
// adjacency lists are sorted, self-loops and duplicate edges never occur.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list. Self-loops and duplicates are dropped, arcs
    // are symmetrized. `labels`, when given, must have node_count entries;
    // otherwise labels default to the decimal node id.
    static Graph from_edges(std::size_t node_count,
                            const std::vector<std::pair<NodeId, NodeId>>& edges,
                            std::vector<std::string> labels = {}) {
        Graph g;
        std::vector<std::vector<NodeId>> adj(node_count);
        for (const auto& [u, v] : edges) {
            if (u >= node_count || v >= node_count)
                throw std::out_of_range("edge endpoint out of range");
            if (u == v) continue;
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        g.offsets_.assign(node_count + 1, 0);
        for (std::size_t v = 0; v < node_count; ++v) {
            auto& list = adj[v];
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            g.offsets_[v + 1] = g.offsets_[v] + list.size();
        }
        g.targets_.reserve(g.offsets_[node_count]);
        for (auto& list : adj)
            g.targets_.insert(g.targets_.end(), list.begin(), list.end());

        if (labels.empty()) {
            labels.reserve(node_count);
            for (std::size_t v = 0; v < node_count; ++v)
                labels.push_back(std::to_string(v));
        } else if (labels.size() != node_count) {
            throw std::invalid_argument("label count does not match node count");
        }
        g.labels_ = std::move(labels);
        for (NodeId v = 0; v < g.labels_.size(); ++v)
            g.label_index_.emplace(g.labels_[v], v);
        return g;
    }

    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const {
        check_node(v);
        return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    std::size_t degree(NodeId v) const {
        check_node(v);
        return offsets_[v + 1] - offsets_[v];
    }

    const std::string& label(NodeId v) const {
        check_node(v);
        return labels_[v];
    }

    std::optional<NodeId> find_label(std::string_view label) const {
        auto it = label_index_.find(std::string(label));
        if (it == label_index_.end()) return std::nullopt;
        return it->second;
    }

    // Undirected edge set as (u, v) pairs with u < v, sorted.
    std::vector<std::pair<NodeId, NodeId>> edges() const {
        std::vector<std::pair<NodeId, NodeId>> out;
        out.reserve(edge_count());
        for (NodeId u = 0; u < node_count(); ++u)
            for (NodeId v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

private:
    void check_node(NodeId v) const {
        if (v >= node_count()) throw std::out_of_range("node id out of range");
    }

    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> targets_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> label_index_;
};

struct ParseOptions {
    // Require node labels to be decimal integers; any other token is a
    // parse error. Off by default: labels are arbitrary strings.
    bool numeric_labels = false;
};

namespace detail {

inline bool is_integer_token(std::string_view tok) {
    std::size_t i = (tok.size() > 1 && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    return true;
}

}  // namespace detail

// Reads a whitespace-delimited edge list. Lines starting with '#' or '%' are
// comments; the first two tokens of a data line are node labels and extra
// tokens are ignored. Arcs are symmetrized, duplicates and self-loops are
// dropped. Internal ids follow first appearance order.
inline Graph parse_edge_list(std::istream& in, const ParseOptions& options = {}) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<NodeId, NodeId>> edges;

    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.emplace(token, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::string a, b;
        if (!(fields >> a)) continue;  // blank line
        if (a[0] == '#' || a[0] == '%') continue;
        if (!(fields >> b))
            throw ParseError("expected two node labels", line_number);
        if (options.numeric_labels &&
            (!detail::is_integer_token(a) || !detail::is_integer_token(b)))
            throw ParseError("non-numeric node label", line_number);
        const NodeId ua = intern(a);
        const NodeId ub = intern(b);
        edges.emplace_back(ua, ub);
    }

    const std::size_t node_count = labels.size();
    Graph g = Graph::from_edges(node_count, edges, std::move(labels));
    if (g.edge_count() == 0)
        throw ParseError("edge list holds no usable edges", 0);
    return g;
}

inline Graph parse_edge_list(const std::string& text, const ParseOptions& options = {}) {
    std::istringstream in(text);
    return parse_edge_list(in, options);
}

// Hop distances from `source`; unreachable nodes get kUnreachable.
inline std::vector<std::int32_t> bfs_distances(const Graph& g, NodeId source) {
    const std::size_t n = g.node_count();
    if (source >= n) throw std::out_of_range("source out of range");
    std::vector<std::int32_t> dist(n, kUnreachable);
    std::vector<NodeId> queue;
    queue.reserve(n);
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId u = queue[head];
        for (NodeId v : g.neighbors(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

}  // namespace cks
