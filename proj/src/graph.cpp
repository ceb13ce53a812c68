#include "tbl/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "tbl/errors.hpp"

namespace tbl {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) : k_(vertex_count) {
    if (k_ < 1) throw DomainError(errc::invalid_graph, "vertex count must be >= 1");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= k_ || v >= k_)
            throw DomainError(errc::invalid_graph, "vertex id out of range");
        if (u == v) throw DomainError(errc::invalid_graph, "self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(k_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    s.degrees.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) s.degrees.push_back(g.degree(v));
    s.deg_min = *std::min_element(s.degrees.begin(), s.degrees.end());
    s.deg_max = *std::max_element(s.degrees.begin(), s.degrees.end());
    return s;
}

bool is_connected(const Graph& g) {
    const int k = g.vertex_count();
    std::vector<char> seen(k, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int w : g.adjacency()[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == k;
}

Graph complete_graph(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    return Graph(k, std::move(edges));
}

Graph star_graph(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < k; ++i) edges.emplace_back(0, i);
    return Graph(k, std::move(edges));
}

Graph path_graph(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Graph(k, std::move(edges));
}

Graph cycle_graph(int k) {
    if (k < 3) throw DomainError(errc::invalid_graph, "cycle needs k >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return Graph(k, std::move(edges));
}

Graph empty_graph(int k) { return Graph(k, {}); }

namespace {

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int header_k = -1;
    int max_id = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        if (line.rfind("k=", 0) == 0) {
            try {
                header_k = std::stoi(line.substr(2));
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(line_no) + ": bad vertex-count header");
            }
            if (header_k < 1)
                throw ParseError("line " + std::to_string(line_no) + ": vertex count must be >= 1");
            continue;
        }
        std::istringstream fields(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
        if (u < 0 || v < 0)
            throw ParseError("line " + std::to_string(line_no) + ": negative vertex id");
        if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    const int k = header_k >= 0 ? header_k : max_id + 1;
    if (k < 1) throw ParseError("empty edge list and no 'k=' header");
    if (max_id >= k) throw ParseError("vertex id exceeds declared vertex count");
    try {
        return Graph(k, std::move(edges));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "k=" << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

}  // namespace tbl
