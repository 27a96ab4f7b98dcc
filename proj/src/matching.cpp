#include "rainbow/matching.hpp"

#include <algorithm>
#include <queue>

namespace rainbow {

namespace {

class Blossom {
public:
    explicit Blossom(const std::vector<std::vector<int>>& adj)
        : adj_(adj), n_(static_cast<int>(adj.size())), mate_(n_, -1), parent_(n_), base_(n_), used_(n_),
          blossom_(n_) {}

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] != -1) continue;
            for (int u : adj_[v]) {
                if (mate_[u] == -1) {
                    mate_[u] = v;
                    mate_[v] = u;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] != -1) continue;
            const int end = find_path(v);
            augment(end);
        }
        return mate_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    const int cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;
                    used_[mate_[to]] = 1;
                    q.push(mate_[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            const int pv = parent_[v];
            const int ppv = mate_[pv];
            mate_[v] = pv;
            mate_[pv] = v;
            v = ppv;
        }
    }

    const std::vector<std::vector<int>>& adj_;
    int n_;
    std::vector<int> mate_, parent_, base_;
    std::vector<char> used_, blossom_;
};

}  // namespace

std::vector<int> maximum_matching(const std::vector<std::vector<int>>& adjacency) {
    return Blossom(adjacency).solve();
}

std::vector<std::pair<int, int>> matched_pairs(const std::vector<int>& mate) {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < static_cast<int>(mate.size()); ++v)
        if (mate[v] > v) out.emplace_back(v, mate[v]);
    return out;
}

}  // namespace rainbow
