#include "token_alpha/mis.hpp"

#include "token_alpha/bitset.hpp"
#include "token_alpha/error.hpp"
#include "token_alpha/token_graph.hpp"

#include <algorithm>
#include <string>

namespace token_alpha {

std::string_view to_string(MisMethod m) {
  return m == MisMethod::exhaustive ? "exhaustive" : "branch-and-bound";
}

bool is_independent(const Graph &g, const VertexSet &s) {
  if (!s.empty() && s.members().back() >= g.order())
    throw ParameterError("vertex " + std::to_string(s.members().back()) +
                         " out of range for order " +
                         std::to_string(g.order()));
  for (const auto &e : g.edges())
    if (s.contains(e.u) && s.contains(e.v))
      return false;
  return true;
}

namespace {

class Exhaustive {
public:
  explicit Exhaustive(const Graph &g) : n_(g.order()), adj_(n_, 0) {
    for (const auto &e : g.edges()) {
      adj_[e.u] |= std::uint64_t{1} << e.v;
      adj_[e.v] |= std::uint64_t{1} << e.u;
    }
  }

  MisResult run() {
    const std::uint64_t all =
        n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    search(0, all, 0, 0);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n_; ++v)
      if (best_set_ >> v & 1)
        members.push_back(v);
    MisResult r;
    r.size = best_;
    r.witness = VertexSet(n_, std::move(members));
    r.method = MisMethod::exhaustive;
    r.nodes_explored = nodes_;
    return r;
  }

private:
  // Candidates are the vertices >= `from` still compatible with `chosen`.
  // Including a vertex is tried before excluding it, so the first maximum
  // found is the lexicographically least one.
  void search(Vertex from, std::uint64_t candidates, std::uint64_t chosen,
              std::size_t size) {
    ++nodes_;
    candidates &= ~((std::uint64_t{1} << from) - 1);
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best_)
      return;
    if (candidates == 0) {
      best_ = size;
      best_set_ = chosen;
      return;
    }
    const auto v = static_cast<Vertex>(std::countr_zero(candidates));
    search(v + 1, candidates & ~adj_[v], chosen | std::uint64_t{1} << v,
           size + 1);
    search(v + 1, candidates, chosen, size);
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::size_t best_ = 0;
  std::uint64_t best_set_ = 0;
  std::uint64_t nodes_ = 0;
};

class BranchAndBound {
public:
  BranchAndBound(const Graph &g, const SolverOptions &opts)
      : n_(g.order()), rows_(adjacency_rows(g)), budget_(opts.node_budget) {}

  MisResult run() {
    Bitset all(n_);
    all.set_all();
    greedy(all);
    std::vector<Vertex> current;
    if (n_ > 0)
      search(all, current);

    MisResult r;
    r.size = best_.size();
    r.witness = VertexSet(n_, best_);
    r.method = MisMethod::branch_and_bound;
    r.nodes_explored = nodes_;
    r.budget_exceeded = aborted_;
    return r;
  }

private:
  std::size_t degree_in(std::size_t v, const Bitset &p) const {
    return rows_[v].count_and(p);
  }

  void take(std::size_t v, Bitset &p, std::vector<Vertex> &current) const {
    current.push_back(static_cast<Vertex>(v));
    p.subtract(rows_[v]);
    p.reset(v);
  }

  // Minimum-degree greedy, used as the initial incumbent.
  void greedy(Bitset p) {
    std::vector<Vertex> chosen;
    while (p.any()) {
      std::size_t pick = Bitset::npos, pick_deg = 0;
      p.for_each([&](std::size_t v) {
        auto d = degree_in(v, p);
        if (pick == Bitset::npos || d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      });
      take(pick, p, chosen);
    }
    best_ = std::move(chosen);
    std::sort(best_.begin(), best_.end());
  }

  // Greedy partition of `p` into cliques; the number of cliques bounds the
  // independence number of G[p].
  std::size_t clique_cover(Bitset uncovered) const {
    std::size_t cliques = 0;
    for (auto v = uncovered.first(); v != Bitset::npos;
         v = uncovered.next(v)) {
      uncovered.reset(v);
      Bitset extend = uncovered & rows_[v];
      for (auto w = extend.first(); w != Bitset::npos; w = extend.next(w)) {
        uncovered.reset(w);
        extend &= rows_[w];
      }
      ++cliques;
    }
    return cliques;
  }

  void search(Bitset p, std::vector<Vertex> &current) {
    if (aborted_)
      return;
    if (budget_ != 0 && nodes_ >= budget_) {
      aborted_ = true;
      return;
    }
    ++nodes_;
    const auto depth = current.size();

    // A vertex of residual degree <= 1 belongs to some maximum independent
    // set of the residual graph.
    for (bool changed = true; changed;) {
      changed = false;
      for (auto v = p.first(); v != Bitset::npos; v = p.next(v + 1)) {
        if (degree_in(v, p) <= 1) {
          take(v, p, current);
          changed = true;
        }
      }
    }

    if (p.none()) {
      if (current.size() > best_.size()) {
        best_ = current;
        std::sort(best_.begin(), best_.end());
      }
      current.resize(depth);
      return;
    }

    if (current.size() + clique_cover(p) <= best_.size()) {
      current.resize(depth);
      return;
    }

    std::size_t branch = Bitset::npos, branch_deg = 0;
    p.for_each([&](std::size_t v) {
      auto d = degree_in(v, p);
      if (branch == Bitset::npos || d > branch_deg) {
        branch = v;
        branch_deg = d;
      }
    });

    Bitset with = p;
    const auto mark = current.size();
    take(branch, with, current);
    search(with, current);
    current.resize(mark);

    p.reset(branch);
    search(p, current);
    current.resize(depth);
  }

  std::size_t n_;
  std::vector<Bitset> rows_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<Vertex> best_;
};

} // namespace

MisResult max_independent_set_exhaustive(const Graph &g) {
  if (g.order() > kExhaustiveCap)
    throw CapacityError("exhaustive search is capped at " +
                        std::to_string(kExhaustiveCap) +
                        " vertices (got " + std::to_string(g.order()) +
                        "); use the branch-and-bound solver");
  return Exhaustive(g).run();
}

MisResult max_independent_set(const Graph &g, const SolverOptions &opts) {
  return BranchAndBound(g, opts).run();
}

} // namespace token_alpha
