#include "copeland/dense_blossom.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <stdexcept>
#include <tuple>

namespace copeland {

namespace {

// Primal-dual weighted blossom algorithm on an adjacency matrix, 1-indexed.
// Nodes 1..n are vertices, n+1..n_x are (possibly nested) blossoms. lab[] are
// doubled duals: an edge (u,v) is tight when lab[u] + lab[v] == 2*w(u,v).
// Vertex labels all start equal and shift together (outer -d, inner +d), so
// every halved quantity below stays integral.
class Solver {
 public:
  Solver(int n, const std::vector<std::tuple<int, int, long long>>& edges)
      : n_(n), cap_(2 * n + 1) {
    g_.assign(cap_ + 1, std::vector<EdgeInfo>(cap_ + 1));
    for (int u = 0; u <= cap_; ++u)
      for (int v = 0; v <= cap_; ++v) g_[u][v] = {u, v, 0};
    lab_.assign(cap_ + 1, 0);
    match_.assign(cap_ + 1, 0);
    slack_.assign(cap_ + 1, 0);
    st_.assign(cap_ + 1, 0);
    pa_.assign(cap_ + 1, 0);
    s_.assign(cap_ + 1, -1);
    vis_.assign(cap_ + 1, 0);
    flower_.assign(cap_ + 1, {});
    flower_from_.assign(cap_ + 1, std::vector<int>(n_ + 1, 0));
    for (const auto& [a, b, w] : edges) {
      if (a == b || a < 0 || b < 0 || a >= n || b >= n)
        throw std::invalid_argument("bad edge in dense matching input");
      if (w <= 0) throw std::invalid_argument("dense matching needs w > 0");
      int u = a + 1, v = b + 1;
      g_[u][v].w = std::max(g_[u][v].w, w);
      g_[v][u].w = g_[u][v].w;
    }
  }

  DenseBlossomResult solve() {
    n_x_ = n_;
    for (int x = 0; x <= cap_; ++x) st_[x] = x;
    long long w_max = 0;
    for (int u = 1; u <= n_; ++u) {
      for (int v = 1; v <= n_; ++v) {
        flower_from_[u][v] = (u == v ? u : 0);
        w_max = std::max(w_max, g_[u][v].w);
      }
    }
    for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
    while (phase()) {
    }
    DenseBlossomResult result;
    for (int u = 1; u <= n_; ++u) {
      if (match_[u] && match_[u] < u) {
        result.total_weight += g_[u][match_[u]].w;
        result.pairs.push_back({match_[u] - 1, u - 1});
      }
    }
    std::sort(result.pairs.begin(), result.pairs.end());
    return result;
  }

 private:
  struct EdgeInfo {
    int u = 0, v = 0;
    long long w = 0;
  };
  static constexpr long long kInf = LLONG_MAX / 4;

  long long e_delta(const EdgeInfo& e) const {
    return lab_[e.u] + lab_[e.v] - 2 * e.w;
  }

  void update_slack(int u, int x) {
    if (!slack_[x] || e_delta(g_[u][x]) < e_delta(g_[slack_[x]][x]))
      slack_[x] = u;
  }

  void set_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; ++u)
      if (g_[u][x].w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
  }

  void q_push(int x) {
    if (x <= n_) {
      q_.push_back(x);
    } else {
      for (int child : flower_[x]) q_push(child);
    }
  }

  void set_st(int x, int b) {
    st_[x] = b;
    if (x > n_)
      for (int child : flower_[x]) set_st(child, b);
  }

  // Position of child xr on the even side of b's cycle; flips the cycle
  // direction (base fixed) if xr sits at an odd position.
  int get_pr(int b, int xr) {
    int pr = static_cast<int>(
        std::find(flower_[b].begin(), flower_[b].end(), xr) -
        flower_[b].begin());
    if (pr % 2 == 1) {
      std::reverse(flower_[b].begin() + 1, flower_[b].end());
      return static_cast<int>(flower_[b].size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match_[u] = g_[u][v].v;
    if (u <= n_) return;
    EdgeInfo e = g_[u][v];
    int xr = flower_from_[u][e.u];
    int pr = get_pr(u, xr);
    for (int i = 0; i < pr; ++i)
      set_match(flower_[u][i], flower_[u][i ^ 1]);
    set_match(xr, v);
    std::rotate(flower_[u].begin(), flower_[u].begin() + pr,
                flower_[u].end());
  }

  void augment(int u, int v) {
    for (;;) {
      int xnv = st_[match_[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st_[pa_[xnv]]);
      u = st_[pa_[xnv]];
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    for (++timestamp_; u || v; std::swap(u, v)) {
      if (u == 0) continue;
      if (vis_[u] == timestamp_) return u;
      vis_[u] = timestamp_;
      u = st_[match_[u]];
      if (u) u = st_[pa_[u]];
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[b]) ++b;
    if (b > n_x_) ++n_x_;
    lab_[b] = 0;
    s_[b] = 0;
    match_[b] = match_[lca];
    flower_[b].clear();
    flower_[b].push_back(lca);
    for (int x = u, y; x != lca; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      flower_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    std::reverse(flower_[b].begin() + 1, flower_[b].end());
    for (int x = v, y; x != lca; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      flower_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) g_[b][x].w = g_[x][b].w = 0;
    for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
    for (int child : flower_[b]) {
      for (int x = 1; x <= n_x_; ++x)
        if (g_[b][x].w == 0 || e_delta(g_[child][x]) < e_delta(g_[b][x])) {
          g_[b][x] = g_[child][x];
          g_[x][b] = g_[x][child];
        }
      for (int x = 1; x <= n_; ++x)
        if (flower_from_[child][x]) flower_from_[b][x] = child;
    }
    set_slack(b);
  }

  void expand_blossom(int b) {
    for (int child : flower_[b]) set_st(child, child);
    int xr = flower_from_[b][g_[b][pa_[b]].u];
    int pr = get_pr(b, xr);
    // Even-side path stays in the tree, alternating inner/outer from the
    // base; the rest leaves the tree.
    for (int i = 0; i < pr; i += 2) {
      int xs = flower_[b][i];
      int xns = flower_[b][i + 1];
      pa_[xs] = g_[xns][xs].u;
      s_[xs] = 1;
      s_[xns] = 0;
      slack_[xs] = 0;
      set_slack(xns);
      q_push(xns);
    }
    s_[xr] = 1;
    pa_[xr] = pa_[b];
    for (int i = pr + 1; i < static_cast<int>(flower_[b].size()); ++i) {
      int xs = flower_[b][i];
      s_[xs] = -1;
      set_slack(xs);
    }
    st_[b] = 0;
  }

  bool on_found_edge(const EdgeInfo& e) {
    int u = st_[e.u], v = st_[e.v];
    if (s_[v] == -1) {
      pa_[v] = e.u;
      s_[v] = 1;
      int nu = st_[match_[v]];
      slack_[v] = slack_[nu] = 0;
      s_[nu] = 0;
      q_push(nu);
    } else if (s_[v] == 0) {
      int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  // One search phase: grows alternating trees from all free surfaces until
  // an augmenting path is found (true) or the duals prove the current
  // matching has maximum weight (false).
  bool phase() {
    std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
    std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
    q_.clear();
    for (int x = 1; x <= n_x_; ++x)
      if (st_[x] == x && !match_[x]) {
        pa_[x] = 0;
        s_[x] = 0;
        q_push(x);
      }
    if (q_.empty()) return false;
    for (;;) {
      while (!q_.empty()) {
        int u = q_.front();
        q_.pop_front();
        if (s_[st_[u]] == 1) continue;
        for (int v = 1; v <= n_; ++v)
          if (g_[u][v].w > 0 && st_[u] != st_[v]) {
            if (e_delta(g_[u][v]) == 0) {
              if (on_found_edge(g_[u][v])) return true;
            } else {
              update_slack(u, st_[v]);
            }
          }
      }
      long long d = kInf;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x]) {
          if (s_[x] == -1)
            d = std::min(d, e_delta(g_[slack_[x]][x]));
          else if (s_[x] == 0)
            d = std::min(d, e_delta(g_[slack_[x]][x]) / 2);
        }
      for (int u = 1; u <= n_; ++u)
        if (s_[st_[u]] == 0) d = std::min(d, lab_[u]);
      if (d == kInf) return false;  // nothing reachable at any label level

      for (int u = 1; u <= n_; ++u) {
        if (s_[st_[u]] == 0)
          lab_[u] -= d;
        else if (s_[st_[u]] == 1)
          lab_[u] += d;
      }
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] >= 0) {
          if (s_[b] == 0)
            lab_[b] += 2 * d;
          else
            lab_[b] -= 2 * d;
        }
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
            e_delta(g_[slack_[x]][x]) == 0)
          if (on_found_edge(g_[slack_[x]][x])) return true;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);

      // Free vertices carry the minimum label; once they reach zero no
      // augmentation can improve total weight.
      bool exhausted = false;
      for (int u = 1; u <= n_; ++u)
        if (s_[st_[u]] == 0 && lab_[u] == 0) exhausted = true;
      if (exhausted && q_.empty()) return false;
    }
  }

  int n_;
  int cap_;
  int n_x_ = 0;
  int timestamp_ = 0;
  std::vector<std::vector<EdgeInfo>> g_;
  std::vector<long long> lab_;
  std::vector<int> match_, slack_, st_, pa_, s_, vis_;
  std::vector<std::vector<int>> flower_;
  std::vector<std::vector<int>> flower_from_;
  std::deque<int> q_;
};

}  // namespace

DenseBlossomResult max_weight_matching_dense(
    int n, const std::vector<std::tuple<int, int, long long>>& edges) {
  if (n <= 1 || edges.empty()) return {};
  Solver solver(n, edges);
  return solver.solve();
}

}  // namespace copeland
