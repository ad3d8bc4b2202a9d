#include "ggt/coset_graph.hpp"

#include <deque>
#include <queue>
#include <stdexcept>
#include <string>

#include "ggt/errors.hpp"

namespace ggt {

std::int32_t CosetGraph::find(std::int32_t v) const {
  while (parent_[static_cast<std::size_t>(v)] != v) v = parent_[static_cast<std::size_t>(v)];
  return v;
}

std::int32_t CosetGraph::edge(std::int32_t v, int r) const {
  std::int32_t e = adj_[static_cast<std::size_t>(v) * static_cast<std::size_t>(degree_) +
                        static_cast<std::size_t>(r)];
  return e < 0 ? e : find(e);
}

CosetGraph::CosetGraph(const Presentation& p, int radius, long long work_cap)
    : alphabet_(p.alphabet), radius_(radius), degree_(2 * p.alphabet.size()) {
  if (radius < 1) throw std::invalid_argument("closure radius must be >= 1");
  max_relator_length_ = p.max_relator_length();
  std::vector<Word> sym = p.relators.empty() ? std::vector<Word>{} : p.symmetrized();

  long long work = 0;
  auto spend = [&](long long units) {
    work += units;
    if (work > work_cap) {
      throw WorkCapExceeded("ball closure work cap exceeded (cap " + std::to_string(work_cap) +
                            ")");
    }
  };

  // Free-group ball as a BFS tree of reduced words.
  std::vector<Word> rep{Word{}};
  parent_.push_back(0);
  adj_.assign(static_cast<std::size_t>(degree_), -1);
  depth_.push_back(0);
  std::size_t layer_begin = 0;
  for (int d = 0; d < radius; ++d) {
    std::size_t layer_end = rep.size();
    for (std::size_t v = layer_begin; v < layer_end; ++v) {
      for (int r = 0; r < degree_; ++r) {
        Letter l = alphabet_.letter_at_rank(r);
        if (!rep[v].empty() && rep[v].back() == letter_inverse(l)) continue;  // tree parent
        std::int32_t u = static_cast<std::int32_t>(rep.size());
        rep.push_back(concat(rep[v], Word{l}));
        parent_.push_back(u);
        depth_.push_back(d + 1);
        adj_.resize(adj_.size() + static_cast<std::size_t>(degree_), -1);
        adj_[v * static_cast<std::size_t>(degree_) + static_cast<std::size_t>(r)] = u;
        int rinv = alphabet_.letter_rank(letter_inverse(l));
        adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(degree_) +
             static_cast<std::size_t>(rinv)] = static_cast<std::int32_t>(v);
        spend(1);
      }
    }
    layer_begin = layer_end;
  }

  std::deque<std::pair<std::int32_t, std::int32_t>> pending;
  auto fold = [&]() {
    while (!pending.empty()) {
      auto [a, b] = pending.front();
      pending.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (a > b) std::swap(a, b);  // keep the BFS-earlier vertex as representative
      parent_[static_cast<std::size_t>(b)] = a;
      for (int r = 0; r < degree_; ++r) {
        std::int32_t eb = adj_[static_cast<std::size_t>(b) * static_cast<std::size_t>(degree_) +
                               static_cast<std::size_t>(r)];
        if (eb < 0) continue;
        std::int32_t& ea = adj_[static_cast<std::size_t>(a) * static_cast<std::size_t>(degree_) +
                                static_cast<std::size_t>(r)];
        if (ea < 0) {
          ea = eb;
        } else if (find(ea) != find(eb)) {
          pending.emplace_back(ea, eb);
        }
      }
      spend(degree_);
    }
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::int32_t v = 0; v < static_cast<std::int32_t>(rep.size()); ++v) {
      if (find(v) != v) continue;
      for (const Word& w : sym) {
        std::int32_t cur = v;
        bool defined = true;
        long long steps = 0;
        for (Letter l : w) {
          ++steps;
          cur = edge(cur, alphabet_.letter_rank(l));
          if (cur < 0) {
            defined = false;
            break;
          }
        }
        spend(steps);
        if (defined && cur != v) {
          pending.emplace_back(v, cur);
          fold();
          changed = true;
        }
      }
    }
  }
  stabilized_ = true;

  // Representatives and class depths via BFS over the folded graph.
  live_.clear();
  for (std::int32_t v = 0; v < static_cast<std::int32_t>(parent_.size()); ++v) {
    if (find(v) == v) live_.push_back(v);
  }
  for (std::int32_t v : live_) depth_[static_cast<std::size_t>(v)] = -1;
  std::queue<std::int32_t> bfs;
  std::int32_t root = find(0);
  depth_[static_cast<std::size_t>(root)] = 0;
  bfs.push(root);
  while (!bfs.empty()) {
    std::int32_t v = bfs.front();
    bfs.pop();
    for (int r = 0; r < degree_; ++r) {
      std::int32_t u = edge(v, r);
      if (u >= 0 && depth_[static_cast<std::size_t>(u)] < 0) {
        depth_[static_cast<std::size_t>(u)] = depth_[static_cast<std::size_t>(v)] + 1;
        bfs.push(u);
      }
    }
  }

  complete_ = true;
  for (std::int32_t v : live_) {
    for (int r = 0; r < degree_; ++r) {
      if (edge(v, r) < 0) {
        complete_ = false;
        break;
      }
    }
    if (!complete_) break;
  }
}

std::int32_t CosetGraph::trace(const Word& w) const {
  std::int32_t cur = find(0);
  for (Letter l : free_reduce(w)) {
    cur = edge(cur, alphabet_.letter_rank(l));
    if (cur < 0) return -1;
  }
  return cur;
}

std::int32_t CosetGraph::identity_class() const { return find(0); }

int CosetGraph::class_depth(std::int32_t cls) const {
  return depth_[static_cast<std::size_t>(cls)];
}

BallClosureOracle::BallClosureOracle(const Presentation& p, int radius, long long work_cap)
    : graph_(p, radius, work_cap) {}

Verdict BallClosureOracle::is_trivial(const Word& w) const {
  if (!alphabet().contains_word(w)) {
    throw std::invalid_argument("word uses letters outside the oracle alphabet");
  }
  std::int32_t cls = graph_.trace(w);
  if (cls < 0) return Verdict::Unknown;
  if (cls == graph_.identity_class()) return Verdict::Trivial;
  if (graph_.complete()) return Verdict::Nontrivial;
  int margin = graph_.radius() - graph_.class_depth(cls);
  if (graph_.stabilized() && margin >= graph_.max_relator_length()) {
    caveat_flag_ = true;
    return Verdict::Nontrivial;
  }
  return Verdict::Unknown;
}

std::optional<std::string> BallClosureOracle::canonical_key(const Word& w) const {
  std::int32_t cls = graph_.trace(w);
  if (cls < 0) return std::nullopt;
  return std::to_string(cls);
}

std::optional<int> BallClosureOracle::geodesic_length(const Word& w) const {
  if (!graph_.complete()) return std::nullopt;
  std::int32_t cls = graph_.trace(w);
  if (cls < 0) return std::nullopt;
  return graph_.class_depth(cls);
}

std::shared_ptr<const BallClosureOracle> make_ball_closure_oracle(const Presentation& p,
                                                                  int radius,
                                                                  long long work_cap) {
  return std::make_shared<BallClosureOracle>(p, radius, work_cap);
}

std::shared_ptr<const BallClosureOracle> make_finite_table_oracle(const Presentation& p,
                                                                  int radius,
                                                                  long long work_cap) {
  auto oracle = std::make_shared<BallClosureOracle>(p, radius, work_cap);
  if (!oracle->graph().complete()) {
    throw std::runtime_error("finite-table backend: closure did not complete at radius " +
                             std::to_string(radius));
  }
  return oracle;
}

}  // namespace ggt
