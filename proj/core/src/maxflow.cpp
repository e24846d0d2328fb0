#include "caproute/maxflow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "caproute/errors.hpp"

namespace caproute {

MaxFlow::MaxFlow(int node_count) : n_(node_count), adj_(node_count) {}

int MaxFlow::add_edge(int u, int v, long long cap) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || cap < 0)
        throw InvalidParameterError("bad flow arc");
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({v, cap});
    arcs_.push_back({u, 0});
    adj_[u].push_back(id);
    adj_[v].push_back(id + 1);
    return id;
}

int MaxFlow::add_undirected(int u, int v, long long cap) {
    int id = add_edge(u, v, cap);
    arcs_[id + 1].cap = cap;
    return id;
}

bool MaxFlow::bfs(int s, int t) {
    level_.assign(n_, -1);
    std::deque<int> q{s};
    level_[s] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int a : adj_[v]) {
            if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
                level_[arcs_[a].to] = level_[v] + 1;
                q.push_back(arcs_[a].to);
            }
        }
    }
    return level_[t] >= 0;
}

long long MaxFlow::dfs(int v, int t, long long limit) {
    if (v == t) return limit;
    for (size_t& i = iter_[v]; i < adj_[v].size(); ++i) {
        int a = adj_[v][i];
        int to = arcs_[a].to;
        if (arcs_[a].cap <= 0 || level_[to] != level_[v] + 1) continue;
        long long got = dfs(to, t, std::min(limit, arcs_[a].cap));
        if (got > 0) {
            arcs_[a].cap -= got;
            arcs_[a ^ 1].cap += got;
            return got;
        }
    }
    return 0;
}

long long MaxFlow::run(int s, int t) {
    if (s == t) throw InvalidParameterError("flow source equals sink");
    long long flow = 0;
    while (bfs(s, t)) {
        iter_.assign(n_, 0);
        while (long long got = dfs(s, t, std::numeric_limits<long long>::max()))
            flow += got;
    }
    return flow;
}

std::vector<char> MaxFlow::min_source_side(int s) const {
    std::vector<char> seen(n_, 0);
    std::deque<int> q{s};
    seen[s] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int a : adj_[v]) {
            if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                seen[arcs_[a].to] = 1;
                q.push_back(arcs_[a].to);
            }
        }
    }
    return seen;
}

std::vector<char> MaxFlow::max_source_side(int t) const {
    // reaches[v]: a residual path v -> ... -> t exists. For each arc a stored
    // at v (arc v -> x), the partner a^1 is the arc x -> v; positive partner
    // capacity means x can step to v.
    std::vector<char> reaches(n_, 0);
    std::deque<int> q{t};
    reaches[t] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int a : adj_[v]) {
            int x = arcs_[a].to;
            if (arcs_[a ^ 1].cap > 0 && !reaches[x]) {
                reaches[x] = 1;
                q.push_back(x);
            }
        }
    }
    std::vector<char> side(n_, 0);
    for (int v = 0; v < n_; ++v) side[v] = reaches[v] ? 0 : 1;
    return side;
}

}  // namespace caproute
