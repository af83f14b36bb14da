#ifndef VCSS_MULTIGRAPH_HPP
#define VCSS_MULTIGRAPH_HPP

// Undirected multigraph with dense vertex indices and stable dense edge ids,
// plus EdgeSet, the universal representation of covers and solutions.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vcss {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Multigraph {
public:
    struct Edge {
        int a;
        int b;
        int other(int v) const { return v == a ? b : a; }
        bool touches(int v) const { return a == v || b == v; }
    };

    Multigraph() = default;
    Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list)
        : n_(vertex_count) {
        if (vertex_count < 0) throw GraphError("negative vertex count");
        inc_.assign(n_, {});
        edges_.reserve(edge_list.size());
        for (const auto& [a, b] : edge_list) add_edge_internal(a, b);
        finalize();
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int id) const { return edges_[id]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Incident edge ids of v, ascending.
    const std::vector<int>& incident(int v) const { return inc_[v]; }
    int degree(int v) const { return static_cast<int>(inc_[v].size()); }

    bool simple() const { return simple_; }
    bool has_parallel(int e) const { return multiplicity(edges_[e].a, edges_[e].b) > 1; }

    int multiplicity(int u, int v) const {
        int c = 0;
        for (int e : inc_[u])
            if (edges_[e].other(u) == v) ++c;
        return c;
    }
    bool adjacent(int u, int v) const {
        if (degree(u) > degree(v)) std::swap(u, v);
        for (int e : inc_[u])
            if (edges_[e].other(u) == v) return true;
        return false;
    }
    // Smallest edge id between u and v, if any.
    std::optional<int> edge_between(int u, int v) const {
        std::optional<int> best;
        for (int e : inc_[u])
            if (edges_[e].other(u) == v && (!best || e < *best)) best = e;
        return best;
    }
    // All edge ids between u and v, ascending.
    std::vector<int> edges_between(int u, int v) const {
        std::vector<int> out;
        for (int e : inc_[u])
            if (edges_[e].other(u) == v) out.push_back(e);
        return out;
    }
    // Distinct neighbors of v, ascending.
    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int e : inc_[v]) {
            int u = edges_[e].other(v);
            bool seen = false;
            for (int x : out) seen = seen || x == u;
            if (!seen) out.push_back(u);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    void add_edge_internal(int a, int b) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_) throw GraphError("edge endpoint out of range");
        if (a == b) throw GraphError("self-loop rejected");
        int id = static_cast<int>(edges_.size());
        edges_.push_back({a, b});
        inc_[a].push_back(id);
        inc_[b].push_back(id);
    }
    void finalize() {
        simple_ = true;
        for (int v = 0; v < n_ && simple_; ++v) {
            for (int e : inc_[v]) {
                int u = edges_[e].other(v);
                if (u > v && multiplicity(v, u) > 1) {
                    simple_ = false;
                    break;
                }
            }
        }
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> inc_;
    bool simple_ = true;
};

// Subset of edge ids of a host graph. Keeps per-vertex degrees current so
// cover/matching checks are O(1).
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(const Multigraph& host)
        : host_(&host), in_(host.edge_count(), 0), deg_(host.vertex_count(), 0) {}

    static EdgeSet of(const Multigraph& host, const std::vector<int>& ids) {
        EdgeSet s(host);
        for (int e : ids) s.insert(e);
        return s;
    }
    static EdgeSet full(const Multigraph& host) {
        EdgeSet s(host);
        for (int e = 0; e < host.edge_count(); ++e) s.insert(e);
        return s;
    }

    const Multigraph& host() const { return *host_; }
    bool contains(int e) const { return in_[e] != 0; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    void insert(int e) {
        check(e);
        if (in_[e]) return;
        in_[e] = 1;
        ++count_;
        deg_[host_->edge(e).a]++;
        deg_[host_->edge(e).b]++;
    }
    void erase(int e) {
        check(e);
        if (!in_[e]) return;
        in_[e] = 0;
        --count_;
        deg_[host_->edge(e).a]--;
        deg_[host_->edge(e).b]--;
    }

    int degree(int v) const { return deg_[v]; }

    // Ascending member edge ids.
    std::vector<int> ids() const {
        std::vector<int> out;
        out.reserve(count_);
        for (int e = 0; e < static_cast<int>(in_.size()); ++e)
            if (in_[e]) out.push_back(e);
        return out;
    }

    friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
        return a.host_ == b.host_ && a.in_ == b.in_;
    }

private:
    void check(int e) const {
        if (!host_ || e < 0 || e >= static_cast<int>(in_.size()))
            throw GraphError("edge id outside host");
    }

    const Multigraph* host_ = nullptr;
    std::vector<std::uint8_t> in_;
    std::vector<int> deg_;
    int count_ = 0;
};

} // namespace vcss

#endif
