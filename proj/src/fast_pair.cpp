#include "confaces/fast_pair.hpp"

#include <numeric>

namespace confaces {

StochasticPattern pattern_of(const RatMatrix& a) {
  StochasticPattern p;
  p.n = a.n();
  p.adj.assign(static_cast<std::size_t>(p.n) * p.n, false);
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      p.adj[static_cast<std::size_t>(i) * p.n + j] = a.at(i, j) > 0;
    }
  }
  return p;
}

namespace {

bool is_stochastic(const RatMatrix& a) {
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) {
      if (a.at(i, j) < 0) return false;
    }
  }
  return check_fixed_vector(a);
}

}  // namespace

bool is_undirected_stochastic(const RatMatrix& a) {
  if (!is_stochastic(a)) return false;
  for (int i = 0; i < a.n(); ++i) {
    for (int j = i + 1; j < a.n(); ++j) {
      if ((a.at(i, j) > 0) != (a.at(j, i) > 0)) return false;
    }
  }
  return true;
}

bool square_has_positive_diagonal(const RatMatrix& a) {
  for (int i = 0; i < a.n(); ++i) {
    Rational d(0);
    for (int k = 0; k < a.n(); ++k) d += a.at(i, k) * a.at(k, i);
    if (!(d > 0)) return false;
  }
  return true;
}

namespace {

// Strongly connected components of the pattern digraph, iterative Tarjan.
// Returns component ids; ids are assigned in completion order.
std::vector<int> scc_ids(const StochasticPattern& p, int& count) {
  const int n = p.n;
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0;
  count = 0;

  struct Frame {
    int v;
    int next;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < n) {
        int w = f.next++;
        if (!p.at(f.v, w)) continue;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      if (low[f.v] == index[f.v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != f.v);
        ++count;
      }
      int v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
    }
  }
  return comp;
}

// gcd of cycle lengths within one strongly connected node set, from
// breadth-first levels: every edge (u,v) inside the class contributes
// |level(u) + 1 - level(v)|.
bool class_is_aperiodic(const StochasticPattern& p, const std::vector<int>& comp,
                        int cid) {
  const int n = p.n;
  int start = -1;
  for (int v = 0; v < n && start == -1; ++v) {
    if (comp[v] == cid) start = v;
  }
  std::vector<int> level(n, -1);
  level[start] = 0;
  std::vector<int> queue{start};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int w = 0; w < n; ++w) {
      if (!p.at(u, w) || comp[w] != cid || level[w] != -1) continue;
      level[w] = level[u] + 1;
      queue.push_back(w);
    }
  }
  int g = 0;
  for (int u = 0; u < n; ++u) {
    if (comp[u] != cid) continue;
    for (int w = 0; w < n; ++w) {
      if (!p.at(u, w) || comp[w] != cid) continue;
      int d = level[u] + 1 - level[w];
      g = std::gcd(g, d < 0 ? -d : d);
    }
  }
  return g == 1;
}

}  // namespace

bool power_converges_to_consensus(const RatMatrix& b) {
  if (!is_stochastic(b)) {
    throw PreconditionError(
        "power convergence test needs a stochastic matrix (nonnegative, rows "
        "summing to 1)");
  }
  StochasticPattern p = pattern_of(b);
  int count = 0;
  std::vector<int> comp = scc_ids(p, count);

  // Closed classes: components no edge leaves. Powers converge to a
  // rank-one consensus limit iff there is exactly one and it is aperiodic.
  std::vector<bool> closed(count, true);
  for (int u = 0; u < p.n; ++u) {
    for (int w = 0; w < p.n; ++w) {
      if (p.at(u, w) && comp[u] != comp[w]) closed[comp[u]] = false;
    }
  }
  int the_class = -1;
  for (int c = 0; c < count; ++c) {
    if (!closed[c]) continue;
    if (the_class != -1) return false;  // two closed classes never merge
    the_class = c;
  }
  if (the_class == -1) return false;  // unreachable: some class is a sink
  return class_is_aperiodic(p, comp, the_class);
}

Verdict decide_two_undirected(const RatMatrix& a1, const RatMatrix& a2) {
  if (!is_undirected_stochastic(a1) || !is_undirected_stochastic(a2)) {
    throw PreconditionError(
        "the two-matrix fast path needs undirected stochastic matrices; fall "
        "back to the face graph");
  }
  Verdict v;
  v.problem = Problem::AsymptoticStability;
  // The three sequences of the pair criterion: constant first matrix,
  // constant second, strict alternation (whose two-step products are powers
  // of A2*A1).
  if (!power_converges_to_consensus(a1)) {
    v.answer = false;
    v.failed_sequence = "sigma1";
  } else if (!power_converges_to_consensus(a2)) {
    v.answer = false;
    v.failed_sequence = "sigma2";
  } else if (!power_converges_to_consensus(mat_mul(a2, a1))) {
    v.answer = false;
    v.failed_sequence = "sigma3";
  } else {
    v.answer = true;
  }
  return v;
}

}  // namespace confaces
