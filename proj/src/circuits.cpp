#include "lcs/circuits.hpp"

namespace lcs {

namespace {

struct Search {
  const Multigraph& g;
  std::size_t cap;
  std::vector<std::vector<Arrow>> out_arrows;  // per tail vertex
  std::vector<char> visited;
  Circuit path;
  std::vector<Circuit> found;
  int base = 0;

  explicit Search(const Multigraph& graph, std::size_t limit) : g(graph), cap(limit) {
    out_arrows.resize(g.nv());
    for (Arrow a = 0; a < g.narrows(); ++a) out_arrows[arrow_tail(g, a)].push_back(a);
    visited.assign(g.nv(), 0);
  }

  void record() {
    if (found.size() >= cap) throw CapExceeded("elementary circuit cap exceeded");
    found.push_back(path);
  }

  void dfs(int u) {
    for (Arrow a : out_arrows[u]) {
      int v = arrow_head(g, a);
      if (v == base) {
        // Reject the degenerate walk a, rev(a) on a single edge.
        if (path.size() == 1 && arrow_edge(a) == arrow_edge(path[0])) continue;
        path.push_back(a);
        record();
        path.pop_back();
      } else if (v > base && !visited[v]) {
        visited[v] = 1;
        path.push_back(a);
        dfs(v);
        path.pop_back();
        visited[v] = 0;
      }
    }
  }
};

}  // namespace

std::vector<Circuit> elementary_circuits(const Multigraph& g, std::size_t cap) {
  Search search(g, cap);
  for (int v = 0; v < g.nv(); ++v) {
    search.base = v;
    search.visited[v] = 1;
    search.dfs(v);
    search.visited[v] = 0;
  }
  return search.found;
}

}  // namespace lcs
