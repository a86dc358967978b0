#include "ccx/connectivity.hpp"

#include <algorithm>
#include <vector>

namespace ccx {

namespace {

// is t minus `removed` still connected (on >= 2 surviving vertices)?
bool connected_without(const Triangulation& t, const std::vector<char>& removed) {
  int n = t.n();
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive < 2) return true;
  std::vector<char> vis(n, 0);
  std::vector<int> stack{start};
  vis[start] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : t.neighbors(v))
      if (!removed[w] && !vis[w]) {
        vis[w] = 1;
        ++cnt;
        stack.push_back(w);
      }
  }
  return cnt == alive;
}

}  // namespace

int vertex_connectivity(const Triangulation& t, int cap) {
  if (cap < 1 || cap > 6) fail(ErrorKind::OutOfRange, "connectivity cap must be 1..6");
  int n = t.n();
  int limit = std::min(cap, n - 1);
  std::vector<char> removed(n, 0);
  std::vector<int> pick;
  for (int k = 1; k < limit; ++k) {
    pick.assign(k, 0);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      std::fill(removed.begin(), removed.end(), 0);
      for (int v : pick) removed[v] = 1;
      if (!connected_without(t, removed)) return k;
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return limit;
}

}  // namespace ccx
