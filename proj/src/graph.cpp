#include "atcover/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace atcover {

Graph make_graph(std::vector<std::string> labels,
                 const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.n = static_cast<int>(labels.size());
    g.labels = std::move(labels);
    g.adj.assign(g.n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n)
            throw std::invalid_argument("make_graph: endpoint out of range");
        if (u == v) throw std::invalid_argument("make_graph: loop edge");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& list : g.adj) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw std::invalid_argument("make_graph: duplicate edge");
    }
    return g;
}

const std::vector<int>& neighbors(const Graph& g, VertexId v) {
    if (v < 0 || v >= g.n) throw std::out_of_range("neighbors: invalid vertex");
    return g.adj[v];
}

int degree(const Graph& g, VertexId v) { return static_cast<int>(neighbors(g, v).size()); }

int edge_count(const Graph& g) {
    std::size_t total = 0;
    for (const auto& list : g.adj) total += list.size();
    return static_cast<int>(total / 2);
}

bool is_regular(const Graph& g, int k) {
    for (const auto& list : g.adj)
        if (static_cast<int>(list.size()) != k) return false;
    return true;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    std::vector<char> seen(g.n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
    }
    return reached == g.n;
}

int find_vertex(const Graph& g, const std::string& label) {
    for (int i = 0; i < g.n; ++i)
        if (g.labels[i] == label) return i;
    return -1;
}

Gf2Matrix adjacency_gf2(const Graph& g) {
    Gf2Matrix m(g.n, g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) m.set(u, v, true);
    return m;
}

Graph lex_blowup(const Graph& g) {
    Graph out;
    out.n = 2 * g.n;
    out.labels.reserve(out.n);
    for (int v = 0; v < g.n; ++v) {
        out.labels.push_back(g.labels[v] + "|0");
        out.labels.push_back(g.labels[v] + "|1");
    }
    out.adj.assign(out.n, {});
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) out.adj[2 * u + x].push_back(2 * v + y);
    for (auto& list : out.adj) std::sort(list.begin(), list.end());
    return out;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n; ++v) out << "  " << v << " [label=\"" << g.labels[v] << "\"];\n";
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    j["labels"] = g.labels;
    auto edges = nlohmann::json::array();
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

Graph graph_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    if (static_cast<int>(labels.size()) != j.at("n").get<int>())
        throw std::invalid_argument("graph_from_json: label count mismatch");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return make_graph(std::move(labels), edges);
}

}  // namespace atcover
