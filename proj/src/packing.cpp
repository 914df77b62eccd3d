#include "apollo/packing.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "json.hpp"

namespace apollo {

GeneratorSet build_group(int rho) {
  GeneratorSet g;
  g.rho = rho;
  g.strip_E = strip_perspective(rho);
  std::vector<Face> faces = build_faces(rho);

  for (const Face& f : faces) {
    if (f.kind != Face::Kind::Reflection) continue;
    if (f.role == "base") continue;  // removing R_{e_rho} makes the group thin
    g.gens.push_back(reflection_matrix(f.vector, f.label));
    g.labels.push_back(f.label);
    g.mirrors.push_back(f.vector);
  }
  if (rho == 9 || rho == 10) {
    std::vector<Vec> Q, Qp;
    solve_vertices(rho, faces, Q, Qp);
    Vec P1 = (rho == 9) ? midpoint(Q[3], Q[4], g.strip_E) : midpoint(Q[3], Q[5], g.strip_E);
    Vec P2 = parse_vec(rho == 9 ? "1,1,1,1,2,-1,-2,1,2" : "1,1,1,1,2,2,-1,-3,1,3");
    g.gens.push_back(phi_matrix(P1, g.strip_E, "phi(P1,E)"));
    g.labels.push_back("phi(P1,E)");
    g.mirrors.push_back(faces[faces.size() - 2].vector);  // vertical wall through P1 and E
    g.gens.push_back(phi_matrix(P1, P2, "phi(P1,P2)"));
    g.labels.push_back("phi(P1,P2)");
    g.mirrors.push_back(faces.back().vector);  // sphere through P1 and P2
  }
  for (const Isometry& m : g.gens)
    if (!m.preserves_form() || !m.is_involution() || !m.preserves_future())
      throw Error("build_group: generator is not an exact involution in O^+");

  Vec Q1 = center_ray(unit(rho, 0), g.strip_E);
  g.height_base = add(Q1, scaled(g.strip_E, 3));
  return g;
}

Int height(const GeneratorSet& g, const Vec& m) { return -dot(g.height_base, m); }

Int height(const Vec& m, int rho) {
  Vec E = strip_perspective(rho);
  Vec Q1 = center_ray(unit(rho, 0), E);
  return -dot(add(Q1, scaled(E, 3)), m);
}

// ---- int64 fast path shared by the walks ----------------------------------

namespace {

using I64Vec = std::vector<int64_t>;
constexpr int64_t kCoordCap = int64_t(1) << 40;

struct FastPathOverflow {};

struct I64VecHash {
  size_t operator()(const I64Vec& v) const {
    size_t h = 1469598103934665603ull;
    for (int64_t x : v) {
      h ^= (size_t)x + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

__int128 dot128(const I64Vec& u, const I64Vec& v) {
  __int128 s = 0, su = 0, sv = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    s += (__int128)u[i] * v[i];
    su += u[i];
    sv += v[i];
  }
  return 2 * s - su * sv;
}

I64Vec to_i64(const Vec& v) {
  I64Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].fits_slong_p()) throw FastPathOverflow{};
    r[i] = v[i].get_si();
    if (r[i] >= kCoordCap || r[i] <= -kCoordCap) throw FastPathOverflow{};
  }
  return r;
}

Vec to_vec(const I64Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = (long)v[i];
  return r;
}

std::vector<std::vector<I64Vec>> gens_i64(const GeneratorSet& g) {
  std::vector<std::vector<I64Vec>> out;
  for (const Isometry& iso : g.gens) {
    std::vector<I64Vec> m;
    for (const Vec& row : iso.rows) m.push_back(to_i64(row));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

namespace {

struct DescentKey {
  Int h, k;
  Vec m;
  bool operator<(const DescentKey& o) const {
    if (h != o.h) return h < o.h;
    if (k != o.k) return k < o.k;
    return m < o.m;  // lexicographic on exact integers
  }
};

// Height never needs to rise: a sphere move strictly drops the curvature
// while the base point, sitting inside the closed fundamental cone, keeps
// the height from growing.  Mirrors through the base point leave h fixed,
// so equal-h plateaus are genuine (and finite: the base point is timelike);
// a best-first walk ordered by (h, curvature, vector) explores them fully
// instead of stalling at a plateau-local minimum.
DescentResult descend_exact(const GeneratorSet& g, const Vec& m, size_t step_cap) {
  struct QEntry {
    DescentKey key;
    int parent;
    int gen;
  };
  std::deque<QEntry> store;
  auto cmp = [&store](int a, int b) { return store[b].key < store[a].key; };
  std::vector<int> heap;
  std::set<Vec> seen;
  auto push = [&](DescentKey key, int parent, int gen) {
    if (!seen.insert(key.m).second) return;
    store.push_back(QEntry{std::move(key), parent, gen});
    heap.push_back((int)store.size() - 1);
    std::push_heap(heap.begin(), heap.end(), cmp);
  };

  const Int h0 = height(g, m);
  push(DescentKey{h0, -dot(m, g.strip_E), m}, -1, -1);
  DescentResult res;
  res.terminal = m;
  int best_seen = 0;
  while (!heap.empty()) {
    if (++res.steps > step_cap) throw Error("descend: step cap exceeded (non-termination bug)");
    std::pop_heap(heap.begin(), heap.end(), cmp);
    int cur = heap.back();
    heap.pop_back();
    if (store[cur].key < store[best_seen].key) best_seen = cur;
    if (sign(store[cur].key.k) == 0) {
      best_seen = cur;
      break;
    }
    for (size_t i = 0; i < g.gens.size(); ++i) {
      Vec im = g.gens[i].apply(store[cur].key.m);
      Int h = height(g, im);
      if (h > h0) continue;
      Int k = -dot(im, g.strip_E);
      push(DescentKey{std::move(h), std::move(k), std::move(im)}, cur, (int)i);
    }
  }
  std::vector<int> rev;
  for (int e = best_seen; store[e].parent >= 0; e = store[e].parent) rev.push_back(store[e].gen);
  res.word.assign(rev.rbegin(), rev.rend());
  res.terminal = store[best_seen].key.m;
  return res;
}

// Same walk on machine integers; throws FastPathOverflow when a relevant
// child leaves the representable range (the caller falls back to exact).
DescentResult descend_fast(const GeneratorSet& g, const Vec& m, size_t step_cap) {
  const auto gens = gens_i64(g);
  const I64Vec P = to_i64(g.height_base);
  const I64Vec E = to_i64(g.strip_E);
  const I64Vec m0 = to_i64(m);
  const int rho = g.rho;

  struct Key {
    int64_t h, k;
    I64Vec m;
    bool less(const Key& o) const {
      if (h != o.h) return h < o.h;
      if (k != o.k) return k < o.k;
      return m < o.m;
    }
  };
  struct QEntry {
    Key key;
    int parent;
    int gen;
  };
  std::deque<QEntry> store;
  auto cmp = [&store](int a, int b) { return store[b].key.less(store[a].key); };
  std::vector<int> heap;
  std::unordered_set<I64Vec, I64VecHash> seen;
  auto push = [&](Key key, int parent, int gen) {
    if (!seen.insert(key.m).second) return;
    store.push_back(QEntry{std::move(key), parent, gen});
    heap.push_back((int)store.size() - 1);
    std::push_heap(heap.begin(), heap.end(), cmp);
  };

  const int64_t h0 = -(int64_t)dot128(P, m0);
  push(Key{h0, -(int64_t)dot128(E, m0), m0}, -1, -1);
  DescentResult res;
  int best_seen = 0;
  size_t steps = 0;
  while (!heap.empty()) {
    if (++steps > step_cap) throw Error("descend: step cap exceeded (non-termination bug)");
    std::pop_heap(heap.begin(), heap.end(), cmp);
    int cur = heap.back();
    heap.pop_back();
    if (store[cur].key.less(store[best_seen].key)) best_seen = cur;
    if (store[cur].key.k == 0) {
      best_seen = cur;
      break;
    }
    for (size_t i = 0; i < gens.size(); ++i) {
      I64Vec child(rho);
      bool overflow = false;
      for (int r = 0; r < rho; ++r) {
        __int128 acc = 0;
        for (int c = 0; c < rho; ++c) acc += (__int128)gens[i][r][c] * store[cur].key.m[c];
        if (acc >= kCoordCap || acc <= -kCoordCap) overflow = true;
        child[r] = (int64_t)acc;
      }
      if (overflow) throw FastPathOverflow{};
      int64_t h = -(int64_t)dot128(P, child);
      if (h > h0) continue;
      int64_t k = -(int64_t)dot128(E, child);
      push(Key{h, k, std::move(child)}, cur, (int)i);
    }
  }
  res.steps = steps;
  std::vector<int> rev;
  for (int e = best_seen; store[e].parent >= 0; e = store[e].parent) rev.push_back(store[e].gen);
  res.word.assign(rev.rbegin(), rev.rend());
  res.terminal = to_vec(store[best_seen].key.m);
  return res;
}

// Two-phase walk: reduce the sphere's center into the base cell by wall
// signs, then invert through a dome that holds it, dropping the curvature.
// Returns false (leaving m and word advanced as far as they got) when the
// walk jams on a boundary case; the caller falls back to the exact search.
bool descend_walk(const GeneratorSet& g, Vec& m, std::vector<int>& word, size_t step_cap) {
  const int rho = g.rho;
  const auto gens = gens_i64(g);
  const I64Vec E = to_i64(g.strip_E);
  std::vector<std::pair<I64Vec, int>> walls, domes;
  for (size_t i = 0; i < g.gens.size(); ++i) {
    I64Vec mir = to_i64(g.mirrors[i]);
    if (dot(g.mirrors[i], g.strip_E) == 0)
      walls.emplace_back(std::move(mir), (int)i);
    else
      domes.emplace_back(std::move(mir), (int)i);
  }

  I64Vec cur = to_i64(m);
  auto apply = [&](int gi) {
    I64Vec next(rho);
    for (int r = 0; r < rho; ++r) {
      __int128 acc = 0;
      for (int c = 0; c < rho; ++c) acc += (__int128)gens[gi][r][c] * cur[c];
      if (acc >= kCoordCap || acc <= -kCoordCap) throw FastPathOverflow{};
      next[r] = (int64_t)acc;
    }
    cur = std::move(next);
    word.push_back(gi);
  };

  const size_t walk_cap = std::min<size_t>(step_cap, 50000);
  size_t steps = 0;
  while (true) {
    int64_t k = -(int64_t)dot128(E, cur);
    if (k == 0) {
      m = to_vec(cur);
      return true;
    }
    if (++steps > walk_cap) {
      m = to_vec(cur);
      return false;  // hand a jammed walk to the exact search
    }
    // Center of the sphere: the inversion image of the point at infinity.
    I64Vec O(rho);
    for (int i = 0; i < rho; ++i) {
      __int128 v = (__int128)E[i] + 2 * (__int128)k * cur[i];
      if (v >= kCoordCap || v <= -kCoordCap) throw FastPathOverflow{};
      O[i] = (int64_t)v;
    }
    int move = -1;
    for (auto& [w, gi] : walls)
      if (dot128(w, O) > 0) {
        move = gi;
        break;
      }
    if (move < 0) {
      for (auto& [d, gi] : domes)
        if (dot128(d, O) > 0) {
          move = gi;
          break;
        }
    }
    if (move < 0) {
      m = to_vec(cur);
      return false;  // center on a cell boundary with no dome strictly past it
    }
    bool was_dome = dot(g.mirrors[move], g.strip_E) != 0;
    apply(move);
    // A dome move must strictly drop the curvature; anything else is a
    // boundary case for the exact search.
    if (was_dome && -(int64_t)dot128(E, cur) >= k) {
      m = to_vec(cur);
      return false;
    }
  }
}

}  // namespace

DescentResult descend(const GeneratorSet& g, const Vec& m, size_t step_cap) {
  if (dot(m, m) != 1) throw Error("descend: m (.) m must be 1");
  if (sign(dot(m, all_ones(g.rho))) >= 0) throw Error("descend: m must satisfy m (.) D < 0");
  DescentResult res;
  Vec cur = m;
  try {
    if (descend_walk(g, cur, res.word, step_cap)) {
      res.terminal = std::move(cur);
      res.steps = res.word.size();
      return res;
    }
  } catch (const FastPathOverflow&) {
    cur = m;
    res.word.clear();
  }
  // Exact best-first search from wherever the walk stopped.
  DescentResult tail;
  try {
    tail = descend_fast(g, cur, step_cap);
  } catch (const FastPathOverflow&) {
    tail = descend_exact(g, cur, step_cap);
  }
  res.word.insert(res.word.end(), tail.word.begin(), tail.word.end());
  res.terminal = std::move(tail.terminal);
  res.steps = res.word.size();
  return res;
}

// ---- breadth-first enumeration (int64 fast path) ---------------------------

namespace {

struct Node {
  I64Vec m;
  int64_t h;
  int64_t k;
  int depth;
};

}  // namespace

EnumerateResult enumerate_orbit(const GeneratorSet& g, const Vec& E, const Int& kmax, const EnumerateLimits& lim) {
  if (sign(kmax) < 0) throw Error("enumerate: kmax must be nonnegative");
  if (dot(E, E) != 0) throw Error("enumerate: perspective must be isotropic");
  const int rho = g.rho;
  std::vector<std::vector<I64Vec>> gens;
  I64Vec P, Epers;
  try {
    gens = gens_i64(g);
    P = to_i64(g.height_base);
    Epers = to_i64(E);
  } catch (const FastPathOverflow&) {
    throw Error("enumerate: inputs exceed the machine-integer range");
  }
  const int64_t kmax64 = kmax.fits_slong_p() ? kmax.get_si() : (int64_t(1) << 40);

  auto height_of = [&](const I64Vec& m) { return -(int64_t)dot128(P, m); };
  auto curv_of = [&](const I64Vec& m) { return -(int64_t)dot128(Epers, m); };

  // Initial window and growth step: reach past the base cluster plus the
  // curvature band, then deepen.
  int64_t base_h = 0;
  for (int i = 0; i < rho; ++i) {
    I64Vec e(rho, 0);
    e[i] = 1;
    base_h = std::max(base_h, height_of(e));
  }
  int64_t H = base_h + 3 * kmax64;
  const int64_t step = std::max<int64_t>(base_h, 6);

  std::unordered_set<I64Vec, I64VecHash> seen;
  std::deque<Node> queue;
  std::vector<Node> parked;  // children above the window, kept for deepening
  std::vector<Node> retained;
  std::set<int64_t> values, prev_values;
  bool truncated = false;

  I64Vec root(rho, 0);
  root[rho - 1] = 1;
  seen.insert(root);
  queue.push_back(Node{root, height_of(root), curv_of(root), 0});

  int stable_rounds = 0;
  int rounds = 0;
  while (true) {
    while (!queue.empty()) {
      Node n = std::move(queue.front());
      queue.pop_front();
      if (n.k >= 0 && n.k <= kmax64) {
        if (retained.size() >= lim.record_cap) {
          truncated = true;
        } else {
          values.insert(n.k);
          retained.push_back(n);
        }
      }
      for (const auto& mat : gens) {
        I64Vec child(rho);
        bool in_range = true;
        __int128 acc;
        for (int i = 0; i < rho && in_range; ++i) {
          acc = 0;
          for (int j = 0; j < rho; ++j) acc += (__int128)mat[i][j] * n.m[j];
          if (acc > kCoordCap || acc < -kCoordCap) in_range = false;
          child[i] = (int64_t)acc;
        }
        if (!in_range) continue;  // far beyond any window we will reach
        int64_t h = height_of(child);
        if (h > H + step * (int64_t)lim.max_rounds) continue;
        if (seen.count(child)) continue;
        if (seen.size() >= lim.visit_cap) {
          truncated = true;
          continue;
        }
        seen.insert(child);
        int64_t kk = curv_of(child);
        Node c{std::move(child), h, kk, n.depth + 1};
        if (h <= H)
          queue.push_back(std::move(c));
        else
          parked.push_back(std::move(c));
      }
    }
    ++rounds;
    if (values == prev_values) {
      if (++stable_rounds >= 2) break;
    } else {
      stable_rounds = 0;
      prev_values = values;
    }
    if (rounds >= lim.max_rounds || truncated) {
      truncated = truncated || rounds >= lim.max_rounds;
      break;
    }
    H += step;
    // Release parked nodes now inside the window, in deterministic order.
    std::vector<Node> still_parked;
    std::vector<Node> release;
    for (Node& p : parked) (p.h <= H ? release : still_parked).push_back(std::move(p));
    parked = std::move(still_parked);
    std::sort(release.begin(), release.end(), [](const Node& a, const Node& b) {
      return a.h != b.h ? a.h < b.h : a.m < b.m;
    });
    for (Node& r : release) queue.push_back(std::move(r));
  }

  EnumerateResult out;
  out.height_bound = (long)H;
  out.truncated = truncated;
  std::sort(retained.begin(), retained.end(), [](const Node& a, const Node& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.m < b.m;
  });
  for (const Node& n : retained) {
    SphereRecord r;
    r.m = to_vec(n.m);
    r.curvature = (long)n.k;
    r.height = (long)n.h;
    r.word_length = n.depth;
    out.records.push_back(std::move(r));
  }
  for (int64_t v : values) out.curvature_values.push_back((long)v);
  return out;
}

// ---- verification -----------------------------------------------------------

namespace {

int worker_count(int threads) {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("APOLLO_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? (int)hc : 1;
}

}  // namespace

PackingReport verify_packing(const std::vector<SphereRecord>& records, const Vec& E, int rho, int threads) {
  PackingReport rep;
  rep.count = records.size();

  rep.curvatures_ok = true;
  rep.parity_ok = true;
  Vec erho = unit(rho, rho - 1);
  for (const SphereRecord& r : records) {
    if (-dot(r.m, E) != r.curvature || sign(r.curvature) < 0) rep.curvatures_ok = false;
    Int par = dot(r.m, erho);
    if (mpz_odd_p(par.get_mpz_t()) == 0) rep.parity_ok = false;
  }

  std::vector<I64Vec> ms;
  ms.reserve(records.size());
  try {
    for (const SphereRecord& r : records) ms.push_back(to_i64(r.m));
  } catch (const FastPathOverflow&) {
    throw Error("verify_packing: record coordinates exceed the machine-integer range");
  }

  const size_t n = ms.size();
  const int nw = worker_count(threads);
  std::vector<std::thread> pool;
  std::mutex mu;
  std::vector<PairViolation> violations;
  std::vector<size_t> tangents(nw, 0);

  auto work = [&](int w) {
    std::vector<PairViolation> local;
    size_t tang = 0;
    for (size_t i = w; i < n; i += nw) {
      for (size_t j = i + 1; j < n; ++j) {
        __int128 p = dot128(ms[i], ms[j]);
        if (p == -1)
          ++tang;
        else if (p > -1 && local.size() < 16) {
          PairViolation v;
          v.i = i;
          v.j = j;
          v.product = (long)p;
          local.push_back(v);
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    tangents[w] = tang;
    violations.insert(violations.end(), local.begin(), local.end());
  };
  for (int w = 0; w < nw; ++w) pool.emplace_back(work, w);
  for (auto& t : pool) t.join();

  std::sort(violations.begin(), violations.end(), [](const PairViolation& a, const PairViolation& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  rep.violations = std::move(violations);
  rep.separation_ok = rep.violations.empty();
  rep.tangent_pairs = 0;
  for (size_t t : tangents) rep.tangent_pairs += t;
  return rep;
}

std::string PackingReport::to_json(const EnumerateResult& er, int rho, const Vec& E) const {
  nlohmann::json j;
  j["rho"] = rho;
  j["perspective"] = to_string(E);
  j["records"] = count;
  j["height_bound"] = er.height_bound.get_str();
  j["truncated"] = er.truncated;
  nlohmann::json vals = nlohmann::json::array();
  for (const Int& v : er.curvature_values) vals.push_back(v.get_str());
  j["curvature_values"] = vals;
  j["tangent_pairs"] = tangent_pairs;
  j["separation_ok"] = separation_ok;
  j["curvatures_ok"] = curvatures_ok;
  j["parity_ok"] = parity_ok;
  nlohmann::json viol = nlohmann::json::array();
  for (const PairViolation& v : violations)
    viol.push_back({{"i", v.i}, {"j", v.j}, {"product", v.product.get_str()}});
  j["violations"] = viol;
  j["ok"] = ok();
  return j.dump(2);
}

Cluster find_cluster(const GeneratorSet& g, const Vec& m) {
  DescentResult d = descend(g, m);
  std::vector<int> word = d.word;
  Vec t = d.terminal;

  auto base_index = [&](const Vec& v) {
    for (int i = 0; i < g.rho; ++i)
      if (v == unit(g.rho, i)) return i;
    return -1;
  };

  if (base_index(t) < 0) {
    // Bounded search from the terminal to any base sphere.
    struct Cand {
      Vec v;
      std::vector<int> w;
    };
    std::deque<Cand> q;
    std::set<Vec> seen{t};
    q.push_back({t, {}});
    size_t expansions = 0;
    bool found = false;
    const Int hcap = height(g, t) + 64;
    while (!q.empty() && expansions < 200000) {
      Cand c = std::move(q.front());
      q.pop_front();
      ++expansions;
      if (base_index(c.v) >= 0) {
        word.insert(word.end(), c.w.begin(), c.w.end());
        t = c.v;
        found = true;
        break;
      }
      for (size_t i = 0; i < g.gens.size(); ++i) {
        Vec im = g.gens[i].apply(c.v);
        if (height(g, im) > hcap) continue;
        if (!seen.insert(im).second) continue;
        std::vector<int> w = c.w;
        w.push_back((int)i);
        q.push_back({std::move(im), std::move(w)});
      }
    }
    if (!found) throw Error("find_cluster: descent failed to certify membership of " + to_string(m));
  }

  // m = g_{w1} g_{w2} ... g_{wL} (t); pull the base cluster back the same way.
  Cluster cl;
  try {
    const auto gens = gens_i64(g);
    for (int i = 0; i < g.rho; ++i) {
      I64Vec v(g.rho, 0);
      v[i] = 1;
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        I64Vec next(g.rho);
        for (int r = 0; r < g.rho; ++r) {
          __int128 acc = 0;
          for (int c = 0; c < g.rho; ++c) acc += (__int128)gens[*it][r][c] * v[c];
          if (acc >= kCoordCap || acc <= -kCoordCap) throw FastPathOverflow{};
          next[r] = (int64_t)acc;
        }
        v = std::move(next);
      }
      cl.members.push_back(to_vec(v));
    }
  } catch (const FastPathOverflow&) {
    cl.members.clear();
    for (int i = 0; i < g.rho; ++i) {
      Vec v = unit(g.rho, i);
      for (auto it = word.rbegin(); it != word.rend(); ++it) v = g.gens[*it].apply(v);
      cl.members.push_back(std::move(v));
    }
  }
  bool contains = false;
  for (const Vec& v : cl.members) contains = contains || v == m;
  if (!contains) throw Error("find_cluster: pulled-back cluster does not contain the input");
  return cl;
}

DescartesReport descartes_check(const Cluster& cluster, const Vec& E) {
  const int rho = (int)cluster.members.size();
  for (int i = 0; i < rho; ++i)
    for (int j = 0; j < rho; ++j) {
      Int p = dot(cluster.members[i], cluster.members[j]);
      if (p != (i == j ? 1 : -1))
        throw Error("descartes_check: cluster is not mutually tangent at pair (" + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + "): product " + p.get_str());
    }
  BilinearForm J(rho);
  if (!J.inverse_check()) throw Error("descartes_check: J * J^{-1} != I");
  std::vector<RVec> inv = J.inverse();
  RVec k(rho);
  for (int i = 0; i < rho; ++i) k[i] = Rat(-dot(cluster.members[i], E));

  DescartesReport rep;
  Rat acc = 0;
  for (int i = 0; i < rho; ++i)
    for (int j = 0; j < rho; ++j) acc += k[i] * inv[i][j] * k[j];
  rep.generalized = acc;
  rep.generalized_ok = sign(acc) == 0;
  if (rho == 4) {
    Int s = 0, sq = 0;
    for (int i = 0; i < 4; ++i) {
      Int ki = -dot(cluster.members[i], E);
      s += ki;
      sq += ki * ki;
    }
    rep.classical_checked = true;
    rep.classical_lhs = s * s;
    rep.classical_rhs = 2 * sq;
    rep.classical_ok = rep.classical_lhs == rep.classical_rhs;
  }
  return rep;
}

std::string records_to_csv(const std::vector<SphereRecord>& records) {
  std::string out = "curvature,vector,word_length\n";
  for (const SphereRecord& r : records)
    out += r.curvature.get_str() + ",\"" + to_string(r.m) + "\"," + std::to_string(r.word_length) + "\n";
  return out;
}

Vec random_orbit_image(const GeneratorSet& g, const Vec& x, int length, uint64_t& state) {
  // splitmix64 steps; raw modulo keeps the stream platform-independent.
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  Vec v = x;
  int prev = -1;
  for (int i = 0; i < length; ++i) {
    int idx = (int)(next() % g.gens.size());
    if (idx == prev) idx = (idx + 1) % (int)g.gens.size();  // involutions cancel
    v = g.gens[idx].apply(v);
    prev = idx;
  }
  return v;
}

}  // namespace apollo
