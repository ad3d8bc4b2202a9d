#include "ggt/ball.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ggt/errors.hpp"

namespace ggt {

std::int32_t Ball::locate(const Word& w) const {
  Word r = free_reduce(w);
  std::int32_t cur = 0;
  for (Letter l : r) {
    cur = neighbor(cur, oracle_->alphabet().letter_rank(l));
    if (cur < 0) return -1;
  }
  return cur;
}

bool Ball::has_exact_metric() const {
  return oracle_->geodesic_length(Word{}).has_value();
}

int Ball::distance(int x, int y) const {
  if (x == y) return 0;
  Word w = mul(inverse(rep(x)), rep(y));
  if (auto len = oracle_->geodesic_length(w)) return *len;
  // A complete ball is the whole Cayley graph; walks cannot leave it.
  if (!complete_ && static_cast<int>(w.size()) > radius_) {
    throw GuardViolation("distance query outside ball guard");
  }
  std::int32_t id = locate(w);
  if (id < 0) throw GuardViolation("distance walk left the ball");
  return depth(id);
}

Ball build_ball(OraclePtr oracle, int radius, BallBuildOptions opts) {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  Ball b;
  b.oracle_ = oracle;
  b.radius_ = radius;
  const OrderedAlphabet& a = oracle->alphabet();
  b.degree_ = 2 * a.size();

  const bool keyed = oracle->canonical_key(Word{}).has_value();
  std::unordered_map<std::string, std::int32_t> key_to_id;
  std::vector<std::size_t> layer_start;  // index of first element at each depth

  auto add_element = [&](const Word& w, int d) -> std::int32_t {
    std::int32_t id = static_cast<std::int32_t>(b.rep_.size());
    b.rep_.push_back(w);
    b.depth_.push_back(d);
    b.adj_.resize(b.adj_.size() + static_cast<std::size_t>(b.degree_), -1);
    return id;
  };

  // Identify the candidate word with an existing element, or -1.
  auto find_existing = [&](const Word& w, int candidate_depth) -> std::int32_t {
    if (keyed) {
      auto key = oracle->canonical_key(w);
      if (!key) {
        if (!opts.permissive) throw OracleUnknown("oracle returned no key during ball build");
        b.cert_ = Certificate::BestEffort;
        return -1;
      }
      auto it = key_to_id.find(*key);
      return it == key_to_id.end() ? -1 : it->second;
    }
    // Pairwise scan; an equal element can only live at depth in
    // [candidate_depth - 2, candidate_depth].
    std::size_t from = 0;
    int low = std::max(0, candidate_depth - 2);
    if (static_cast<std::size_t>(low) < layer_start.size()) {
      from = layer_start[static_cast<std::size_t>(low)];
    }
    for (std::size_t i = from; i < b.rep_.size(); ++i) {
      Verdict v = oracle->equal(w, b.rep_[i]);
      if (v == Verdict::Trivial) return static_cast<std::int32_t>(i);
      if (v == Verdict::Unknown) {
        if (!opts.permissive) {
          throw OracleUnknown("oracle Unknown during ball identification: " +
                              word_to_string(a, w) + " vs " + word_to_string(a, b.rep_[i]));
        }
        b.cert_ = Certificate::BestEffort;
      }
    }
    return -1;
  };

  if (oracle->certificate() == Certificate::BestEffort) b.cert_ = Certificate::BestEffort;

  layer_start.push_back(0);
  add_element(Word{}, 0);
  if (keyed) key_to_id.emplace(*oracle->canonical_key(Word{}), 0);

  std::size_t layer_begin = 0;
  for (int d = 0; d < radius; ++d) {
    std::size_t layer_end = b.rep_.size();
    if (layer_begin == layer_end) break;
    layer_start.push_back(layer_end);
    for (std::size_t v = layer_begin; v < layer_end; ++v) {
      for (int r = 0; r < b.degree_; ++r) {
        if (b.neighbor(static_cast<int>(v), r) >= 0) continue;
        Letter l = a.letter_at_rank(r);
        Word w = mul(b.rep_[v], Word{l});
        std::int32_t u = find_existing(w, d + 1);
        if (u < 0) {
          u = add_element(w, d + 1);
          if (keyed) key_to_id.emplace(*oracle->canonical_key(w), u);
        }
        b.adj_[v * static_cast<std::size_t>(b.degree_) + static_cast<std::size_t>(r)] = u;
        // Inverse edge.
        int rinv = a.letter_rank(letter_inverse(l));
        b.adj_[static_cast<std::size_t>(u) * static_cast<std::size_t>(b.degree_) +
               static_cast<std::size_t>(rinv)] = static_cast<std::int32_t>(v);
      }
    }
    layer_begin = layer_end;
  }

  // Final layer adjacency: link edges between already-registered elements.
  for (std::size_t v = layer_begin; v < b.rep_.size(); ++v) {
    for (int r = 0; r < b.degree_; ++r) {
      if (b.neighbor(static_cast<int>(v), r) >= 0) continue;
      Letter l = a.letter_at_rank(r);
      Word w = mul(b.rep_[v], Word{l});
      std::int32_t u = find_existing(w, radius + 1);
      if (u >= 0) {
        b.adj_[v * static_cast<std::size_t>(b.degree_) + static_cast<std::size_t>(r)] = u;
      }
    }
  }

  b.complete_ = true;
  for (std::size_t v = 0; v < b.rep_.size() && b.complete_; ++v) {
    for (int r = 0; r < b.degree_; ++r) {
      if (b.neighbor(static_cast<int>(v), r) < 0) {
        b.complete_ = false;
        break;
      }
    }
  }
  return b;
}

std::vector<int> interval(const Ball& b, int x, int y) {
  int dxy = b.distance(x, y);
  if (b.depth(x) + dxy > b.radius()) {
    throw GuardViolation("interval guard: d(e,x) + d(x,y) exceeds ball radius");
  }
  std::vector<int> result{x};
  std::set<int> cur{x};
  for (int t = 1; t <= dxy; ++t) {
    std::set<int> next;
    for (int p : cur) {
      for (int r = 0; r < b.degree(); ++r) {
        std::int32_t q = b.neighbor(p, r);
        if (q < 0) continue;
        if (b.distance(q, y) == dxy - t) next.insert(q);
      }
    }
    cur = std::move(next);
    result.insert(result.end(), cur.begin(), cur.end());
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

namespace {

void geodesic_dfs(const Ball& b, int cur, int y, int remaining, std::vector<int>& path,
                  std::vector<std::vector<int>>& out, int cap) {
  if (remaining == 0) {
    if (static_cast<int>(out.size()) >= cap) {
      throw CapExceeded("geodesic enumeration cap exceeded");
    }
    out.push_back(path);
    return;
  }
  for (int r = 0; r < b.degree(); ++r) {
    std::int32_t q = b.neighbor(cur, r);
    if (q < 0) continue;
    if (b.distance(q, y) != remaining - 1) continue;
    path.push_back(q);
    geodesic_dfs(b, q, y, remaining - 1, path, out, cap);
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_geodesics(const Ball& b, int x, int y, int cap) {
  int dxy = b.distance(x, y);
  if (b.depth(x) + dxy > b.radius()) {
    throw GuardViolation("geodesic guard: d(e,x) + d(x,y) exceeds ball radius");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> path{x};
  geodesic_dfs(b, x, y, dxy, path, out, cap);
  return out;
}

Word Homomorphism::apply(const Word& w) const {
  Word out;
  for (Letter l : w) {
    const Word& img = images[static_cast<std::size_t>(letter_gen(l))];
    Word part = letter_positive(l) ? img : inverse(img);
    out.insert(out.end(), part.begin(), part.end());
  }
  return free_reduce(out);
}

Homomorphism parse_homomorphism(const OrderedAlphabet& domain, OraclePtr codomain,
                                const std::string& spec) {
  Homomorphism h;
  h.domain = domain;
  h.codomain = codomain;
  h.images.assign(static_cast<std::size_t>(domain.size()), Word{});
  std::vector<bool> seen(static_cast<std::size_t>(domain.size()), false);
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto arrow = part.find("->");
    if (arrow == std::string::npos) throw std::invalid_argument("map entry needs '->': " + part);
    Word src = parse_word(domain, part.substr(0, arrow));
    if (src.size() != 1 || !letter_positive(src[0])) {
      throw std::invalid_argument("map source must be a single generator: " + part);
    }
    int gen = letter_gen(src[0]);
    h.images[static_cast<std::size_t>(gen)] =
        free_reduce(parse_word(codomain->alphabet(), part.substr(arrow + 2)));
    seen[static_cast<std::size_t>(gen)] = true;
  }
  for (int g = 0; g < domain.size(); ++g) {
    if (!seen[static_cast<std::size_t>(g)]) {
      throw std::invalid_argument(std::string("map missing image for generator '") +
                                  domain.display_letter(g) + "'");
    }
  }
  return h;
}

InjectivityRadius injectivity_radius(const Homomorphism& h, const Ball& dom_ball) {
  InjectivityRadius out;
  out.cert = dom_ball.certificate();
  const GroupOracle& cod = *h.codomain;
  if (cod.certificate() == Certificate::BestEffort) out.cert = Certificate::BestEffort;

  const bool keyed = cod.canonical_key(Word{}).has_value();
  std::unordered_map<std::string, int> image_key_to_id;
  std::vector<Word> images(static_cast<std::size_t>(dom_ball.size()));
  for (int id = 0; id < dom_ball.size(); ++id) {
    images[static_cast<std::size_t>(id)] = h.apply(dom_ball.rep(id));
  }

  // Elements arrive in depth order; the first collision pins the radius.
  for (int id = 0; id < dom_ball.size(); ++id) {
    int d = dom_ball.depth(id);
    if (keyed) {
      auto key = cod.canonical_key(images[static_cast<std::size_t>(id)]);
      if (key) {
        auto [it, inserted] = image_key_to_id.emplace(*key, id);
        if (!inserted) {
          out.value = d - 1;
          out.unbounded_up_to = false;
          out.witness_u = dom_ball.rep(it->second);
          out.witness_v = dom_ball.rep(id);
          return out;
        }
        continue;
      }
      out.cert = Certificate::BestEffort;
    }
    for (int other = 0; other < id; ++other) {
      Verdict v = cod.equal(images[static_cast<std::size_t>(other)],
                            images[static_cast<std::size_t>(id)]);
      if (v == Verdict::Trivial) {
        out.value = d - 1;
        out.unbounded_up_to = false;
        out.witness_u = dom_ball.rep(other);
        out.witness_v = dom_ball.rep(id);
        return out;
      }
      if (v == Verdict::Unknown) out.cert = Certificate::BestEffort;
    }
  }
  out.value = dom_ball.radius();
  out.unbounded_up_to = true;
  return out;
}

}  // namespace ggt
