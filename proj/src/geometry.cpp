#include "modpovm/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "modpovm/errors.hpp"

namespace modpovm {

namespace {

using Blocks = std::vector<std::vector<size_t> >;

Blocks block_lists(const IncidenceStructure& s) {
  Blocks b;
  for (const auto& blk : s.blocks) b.push_back(blk.pts);
  return b;
}

std::string matrix_key(const CycloMatrix& m) {
  std::string k;
  for (const auto& x : m.entries()) k += x.canonical_key() + ";";
  return k;
}

}  // namespace

std::vector<std::vector<size_t> > IncidenceStructure::point_blocks() const {
  std::vector<std::vector<size_t> > pb(points.size());
  for (size_t b = 0; b < blocks.size(); ++b)
    for (size_t p : blocks[b].pts) pb[p].push_back(b);
  return pb;
}

std::vector<std::vector<size_t> > IncidenceStructure::components() const {
  auto pb = point_blocks();
  std::vector<int> comp(blocks.size(), -1);
  std::vector<std::vector<size_t> > out;
  for (size_t s = 0; s < blocks.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<size_t> c = {s};
    comp[s] = static_cast<int>(out.size());
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t p : blocks[c[i]].pts)
        for (size_t b : pb[p])
          if (comp[b] < 0) {
            comp[b] = comp[s];
            c.push_back(b);
          }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

IncidenceStructure IncidenceStructure::restrict_to(const std::vector<size_t>& block_ids) const {
  std::set<size_t> used;
  for (size_t b : block_ids) used.insert(blocks[b].pts.begin(), blocks[b].pts.end());
  std::map<size_t, size_t> idx;
  IncidenceStructure r;
  r.dims = dims;
  for (size_t p : used) {
    idx[p] = r.points.size();
    r.points.push_back(points[p]);
  }
  for (size_t b : block_ids) {
    Block nb = blocks[b];
    for (auto& p : nb.pts) p = idx[p];
    for (auto& p : nb.ordering) p = idx[p];
    r.blocks.push_back(std::move(nb));
  }
  return r;
}

int pm_identity_sign(const DimFactorization& dims, const std::vector<PauliOp>& ops) {
  PhasedPauli p = multiply(dims, ops);
  if (!p.op.is_identity()) return 0;
  const long long L = dims.conductor();
  const long long ph = ((p.phase % L) + L) % L;
  if (ph == 0) return 1;
  if (2 * ph == L) return -1;
  return 0;
}

IncidenceStructure tuple_lines(const Orbit& orbit, int k, const std::vector<CycloNum>& targets,
                               bool require_pm_identity) {
  if (k != 3 && k != 4) throw InputError("tuple size must be 3 or 4");
  const size_t n = orbit.projectors.size();
  if (n == 0) throw InputError("empty orbit");
  const bool vec = !orbit.states.empty();

  // overlap[i][j] = <psi_i|psi_j>/n2, or the projector itself for projector orbits
  CycloMatrix g;
  int K = orbit.conductor;
  if (vec) {
    g = overlap_matrix(orbit);
    K = g.conductor();
  }
  std::vector<CycloNum> tg;
  bool zero_target = false;
  for (const auto& t : targets) {
    tg.push_back(t.lifted(static_cast<int>(lcm_ll(K, t.conductor()))));
    zero_target |= t.is_zero();
  }

  auto cyclic_trace = [&](const std::vector<size_t>& o) -> CycloNum {
    if (vec) {
      CycloNum t = g(o[0], o[1]);
      for (size_t a = 1; a < o.size() && !t.is_zero(); ++a) t *= g(o[a], o[(a + 1) % o.size()]);
      return t;
    }
    CycloMatrix m = orbit.projectors[o[0]];
    for (size_t a = 1; a + 1 < o.size(); ++a) m = matmul(m, orbit.projectors[o[a]]);
    return trace_of_product(m, orbit.projectors[o.back()]);
  };
  auto hits = [&](const CycloNum& t) {
    for (const auto& x : tg)
      if (x == t) return true;
    return false;
  };

  struct Raw {
    std::vector<size_t> pts, ordering;
    CycloNum trace;
    int sign;
    std::vector<CycloNum> all;
  };
  std::vector<Raw> raw;
  std::vector<size_t> sub(k);
  std::function<void(size_t, size_t)> rec = [&](size_t depth, size_t from) {
    if (depth == static_cast<size_t>(k)) {
      std::vector<size_t> rest(sub.begin() + 1, sub.end());
      std::vector<CycloNum> all;
      std::optional<size_t> chosen;
      int sign = 0;
      size_t idx = 0;
      do {
        std::vector<size_t> o = {sub[0]};
        o.insert(o.end(), rest.begin(), rest.end());
        CycloNum t = cyclic_trace(o);
        if (!chosen && hits(t)) {
          std::vector<PauliOp> ops;
          for (size_t p : o) ops.push_back(orbit.ops[p]);
          int s = pm_identity_sign(orbit.dims, ops);
          if (!require_pm_identity || s != 0) {
            chosen = idx;
            sign = s;
          }
        }
        all.push_back(std::move(t));
        ++idx;
      } while (std::next_permutation(rest.begin(), rest.end()));
      if (chosen) {
        std::vector<size_t> rest2(sub.begin() + 1, sub.end());
        for (size_t i = 0; i < *chosen; ++i) std::next_permutation(rest2.begin(), rest2.end());
        std::vector<size_t> o = {sub[0]};
        o.insert(o.end(), rest2.begin(), rest2.end());
        raw.push_back({sub, o, all[*chosen], sign, std::move(all)});
      }
      return;
    }
    for (size_t i = from; i < n; ++i) {
      // a zero overlap with an earlier member makes every ordering vanish
      // only when all cyclic neighbours are forced; skip just the cheap case
      // of k = 3, where every pair is adjacent in every ordering
      if (vec && k == 3 && !zero_target) {
        bool dead = false;
        for (size_t j = 0; j < depth && !dead; ++j) dead = g(sub[j], i).is_zero();
        if (dead) continue;
      }
      sub[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);

  IncidenceStructure s;
  s.dims = orbit.dims;
  std::set<size_t> used;
  for (const auto& r : raw) used.insert(r.pts.begin(), r.pts.end());
  std::map<size_t, size_t> idx;
  for (size_t p : used) {
    idx[p] = s.points.size();
    s.points.push_back(orbit.ops[p]);
  }
  for (auto& r : raw) {
    Block b;
    for (size_t p : r.pts) b.pts.push_back(idx[p]);
    for (size_t p : r.ordering) b.ordering.push_back(idx[p]);
    b.trace = r.trace.reduced();
    b.sign = r.sign;
    for (auto& t : r.all) b.ordering_traces.push_back(t.reduced());
    s.blocks.push_back(std::move(b));
  }
  return s;
}

std::vector<std::vector<size_t> > Graph::adjacency() const {
  std::vector<std::vector<size_t> > a(n);
  for (auto [u, v] : edges) {
    a[u].push_back(v);
    a[v].push_back(u);
  }
  return a;
}

std::vector<std::vector<size_t> > Graph::components() const {
  auto a = adjacency();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<size_t> > out;
  for (size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<size_t> c = {s};
    seen[s] = true;
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t v : a[c[i]])
        if (!seen[v]) {
          seen[v] = true;
          c.push_back(v);
        }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

Graph Graph::induced(const std::vector<size_t>& vertices) const {
  std::map<size_t, size_t> idx;
  for (size_t i = 0; i < vertices.size(); ++i) idx[vertices[i]] = i;
  Graph g;
  g.n = vertices.size();
  for (auto [u, v] : edges) {
    auto a = idx.find(u), b = idx.find(v);
    if (a != idx.end() && b != idx.end()) g.edges.emplace_back(a->second, b->second);
  }
  return g;
}

std::string Graph::to_dot(const std::string& name, const std::vector<std::string>& labels) const {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (size_t v = 0; v < n; ++v) {
    os << "  " << v;
    if (v < labels.size()) os << " [label=\"" << labels[v] << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : edges) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

Graph intersection_graph(const IncidenceStructure& s, int shared) {
  if (shared < 1) throw InputError("shared count must be positive");
  Graph g;
  g.n = s.blocks.size();
  for (size_t i = 0; i < g.n; ++i)
    for (size_t j = i + 1; j < g.n; ++j) {
      const auto& a = s.blocks[i].pts;
      const auto& b = s.blocks[j].pts;
      std::vector<size_t> c;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
      if (static_cast<int>(c.size()) == shared) g.edges.emplace_back(i, j);
    }
  return g;
}

bool isomorphic(size_t na, const Blocks& a, size_t nb, const Blocks& b) {
  if (na != nb || a.size() != b.size()) return false;
  auto sizes = [](const Blocks& x) {
    std::vector<size_t> s;
    for (const auto& blk : x) s.push_back(blk.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sizes(a) != sizes(b)) return false;
  auto common = [](size_t n, const Blocks& x) {
    std::vector<std::vector<int> > c(n, std::vector<int>(n, 0));
    for (const auto& blk : x)
      for (size_t i : blk)
        for (size_t j : blk) ++c[i][j];
    return c;
  };
  const auto ca = common(na, a), cb = common(nb, b);
  std::vector<int> da(na), db(nb);
  for (size_t i = 0; i < na; ++i) da[i] = ca[i][i];
  for (size_t i = 0; i < nb; ++i) db[i] = cb[i][i];
  {
    auto x = da, y = db;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  // visit points of a so that each one meets an earlier one when possible
  std::vector<size_t> order;
  std::vector<bool> placed(na, false);
  while (order.size() < na) {
    size_t best = na;
    int score = -1;
    for (size_t p = 0; p < na; ++p) {
      if (placed[p]) continue;
      int s = 0;
      for (size_t q : order) s += ca[p][q] > 0;
      if (s > score) {
        score = s;
        best = p;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  std::set<std::vector<size_t> > target;
  for (auto blk : b) {
    std::sort(blk.begin(), blk.end());
    target.insert(blk);
  }
  std::vector<size_t> f(na, nb);
  std::vector<bool> used(nb, false);
  std::function<bool(size_t)> go = [&](size_t depth) -> bool {
    if (depth == na) {
      for (const auto& blk : a) {
        std::vector<size_t> img;
        for (size_t p : blk) img.push_back(f[p]);
        std::sort(img.begin(), img.end());
        if (!target.count(img)) return false;
      }
      return true;
    }
    const size_t p = order[depth];
    for (size_t q = 0; q < nb; ++q) {
      if (used[q] || db[q] != da[p]) continue;
      bool ok = true;
      for (size_t t = 0; t < depth && ok; ++t) ok = ca[p][order[t]] == cb[q][f[order[t]]];
      if (!ok) continue;
      f[p] = q;
      used[q] = true;
      if (go(depth + 1)) return true;
      used[q] = false;
    }
    f[p] = nb;
    return false;
  };
  return go(0);
}

bool is_petersen(const Graph& g) {
  Blocks pet;
  for (size_t i = 0; i < 5; ++i) {
    pet.push_back({i, (i + 1) % 5});
    pet.push_back({i, i + 5});
    pet.push_back({i + 5, (i + 2) % 5 + 5});
  }
  Blocks e;
  for (auto [u, v] : g.edges) e.push_back({u, v});
  return isomorphic(g.n, e, 10, pet);
}

Blocks hesse_template() {
  Blocks b;
  const int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  std::set<std::vector<size_t> > seen;
  for (auto& d : dirs)
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        std::vector<size_t> l;
        for (int t = 0; t < 3; ++t) l.push_back(((x + t * d[0]) % 3) * 3 + (y + t * d[1]) % 3);
        std::sort(l.begin(), l.end());
        if (seen.insert(l).second) b.push_back(l);
      }
  return b;
}

Blocks gq22_template() {
  std::vector<std::pair<int, int> > pairs;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) pairs.emplace_back(i, j);
  auto index = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<size_t>(std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) - pairs.begin());
  };
  std::set<std::vector<size_t> > lines;
  for (int a = 1; a < 6; ++a) {
    std::vector<int> rest;
    for (int x = 1; x < 6; ++x)
      if (x != a) rest.push_back(x);
    // pair {0,a}, then split the remaining four into two pairs
    for (int m = 1; m < 4; ++m) {
      std::vector<int> other;
      for (int t = 1; t < 4; ++t)
        if (t != m) other.push_back(rest[t]);
      std::vector<size_t> l = {index(0, a), index(rest[0], rest[m]), index(other[0], other[1])};
      std::sort(l.begin(), l.end());
      lines.insert(l);
    }
  }
  return Blocks(lines.begin(), lines.end());
}

Blocks grid_template() {
  Blocks b;
  for (size_t r = 0; r < 3; ++r) b.push_back({3 * r, 3 * r + 1, 3 * r + 2});
  for (size_t c = 0; c < 3; ++c) b.push_back({c, c + 3, c + 6});
  return b;
}

Blocks pappus_template() {
  // A B C = 0 1 2, a b c = 3 4 5, X Y Z = 6 7 8
  return {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 4, 6}, {1, 3, 6}, {0, 5, 7}, {2, 3, 7}, {1, 5, 8}, {2, 4, 8}};
}

Blocks borromean_template() { return {{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 3, 4, 5}}; }

bool gq22_axioms(size_t npts, const Blocks& blocks) {
  if (npts != 15 || blocks.size() != 15) return false;
  std::vector<int> deg(npts, 0);
  for (const auto& l : blocks) {
    if (l.size() != 3) return false;
    for (size_t p : l) ++deg[p];
  }
  for (int d : deg)
    if (d != 3) return false;
  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j = i + 1; j < blocks.size(); ++j) {
      size_t c = 0;
      for (size_t p : blocks[i]) c += std::count(blocks[j].begin(), blocks[j].end(), p);
      if (c > 1) return false;
    }
  for (const auto& l : blocks)
    for (size_t p = 0; p < npts; ++p) {
      if (std::count(l.begin(), l.end(), p)) continue;
      int meet = 0;
      for (const auto& m : blocks) {
        if (!std::count(m.begin(), m.end(), p)) continue;
        for (size_t q : m) meet += std::count(l.begin(), l.end(), q) > 0;
      }
      if (meet != 1) return false;
    }
  return true;
}

std::string to_string(GeometryKind k) {
  switch (k) {
    case GeometryKind::HESSE: return "HESSE";
    case GeometryKind::GQ22: return "GQ22";
    case GeometryKind::MERMIN_SQUARE: return "MERMIN_SQUARE";
    case GeometryKind::GRID_3x3: return "GRID_3x3";
    case GeometryKind::PAPPUS: return "PAPPUS";
    case GeometryKind::PETERSEN_DECOMP: return "PETERSEN_DECOMP";
    case GeometryKind::BORROMEAN_PAIR: return "BORROMEAN_PAIR";
    case GeometryKind::UNRECOGNIZED: break;
  }
  return "UNRECOGNIZED";
}

std::string GeometryLabel::text() const {
  std::string s = to_string(kind);
  if (kind != GeometryKind::UNRECOGNIZED && copies != 1) s += " x" + std::to_string(copies);
  return s;
}

namespace {

GeometryKind classify_component(const IncidenceStructure& c) {
  const size_t n = c.points.size();
  const Blocks b = block_lists(c);
  if (isomorphic(n, b, 9, hesse_template())) return GeometryKind::HESSE;
  if (isomorphic(n, b, 15, gq22_template())) return GeometryKind::GQ22;
  if (isomorphic(n, b, 9, pappus_template())) return GeometryKind::PAPPUS;
  if (isomorphic(n, b, 9, grid_template())) {
    int minus = 0;
    bool all_pm = true;
    for (const auto& blk : c.blocks) {
      all_pm &= blk.sign != 0;
      minus += blk.sign < 0;
    }
    return all_pm && minus % 2 == 1 ? GeometryKind::MERMIN_SQUARE : GeometryKind::GRID_3x3;
  }
  if (isomorphic(n, b, 6, borromean_template())) return GeometryKind::BORROMEAN_PAIR;
  return GeometryKind::UNRECOGNIZED;
}

// Petersen copies: components of the `split` intersection graph whose
// one-point intersection graph is the Petersen graph.
size_t petersen_copies(const IncidenceStructure& s, int split) {
  Graph gs = intersection_graph(s, split);
  Graph g1 = split == 1 ? gs : intersection_graph(s, 1);
  auto comps = gs.components();
  for (const auto& c : comps)
    if (c.size() != 10 || !is_petersen(g1.induced(c))) return 0;
  return comps.size();
}

}  // namespace

GeometryLabel recognize(const IncidenceStructure& s) {
  GeometryLabel out;
  if (s.blocks.empty()) return out;
  auto comps = s.components();
  std::optional<GeometryKind> common;
  bool uniform = true;
  for (const auto& c : comps) {
    GeometryKind k = classify_component(s.restrict_to(c));
    if (!common) common = k;
    uniform &= *common == k;
  }
  if (uniform && *common != GeometryKind::UNRECOGNIZED) {
    out.kind = *common;
    out.copies = comps.size();
    return out;
  }
  for (int split : {2, 1}) {
    size_t c = petersen_copies(s, split);
    if (c) {
      out.kind = GeometryKind::PETERSEN_DECOMP;
      out.copies = c;
      out.petersen_shared = split;
      return out;
    }
  }
  return out;
}

int MerminSquare::minus_lines() const {
  int m = 0;
  for (const auto& b : grid.blocks) m += b.sign < 0;
  return m;
}

std::optional<MerminSquare> mermin_square(const IncidenceStructure& s) {
  if (s.components().size() != 1 || !gq22_axioms(s.points.size(), block_lists(s))) return std::nullopt;
  const auto& L = s.blocks;
  const size_t nl = L.size();
  auto meet = [&](size_t a, size_t b) {
    size_t c = 0;
    for (size_t p : L[a].pts) c += std::count(L[b].pts.begin(), L[b].pts.end(), p);
    return c;
  };
  struct Cand {
    std::vector<size_t> rows, cols;
    bool uniform;
  };
  std::optional<Cand> best;
  for (size_t a = 0; a < nl; ++a)
    for (size_t b = a + 1; b < nl; ++b)
      for (size_t c = b + 1; c < nl; ++c) {
        std::vector<size_t> r = {a, b, c};
        if (meet(a, b) || meet(a, c) || meet(b, c)) continue;
        std::vector<size_t> transversal;
        for (size_t t = 0; t < nl; ++t)
          if (meet(t, a) == 1 && meet(t, b) == 1 && meet(t, c) == 1) transversal.push_back(t);
        for (size_t i = 0; i < transversal.size(); ++i)
          for (size_t j = i + 1; j < transversal.size(); ++j)
            for (size_t k = j + 1; k < transversal.size(); ++k) {
              std::vector<size_t> col = {transversal[i], transversal[j], transversal[k]};
              if (meet(col[0], col[1]) || meet(col[0], col[2]) || meet(col[1], col[2])) continue;
              int minus_r = 0, minus_c = 0;
              bool ok = true;
              for (size_t x : r) {
                ok &= L[x].sign != 0;
                minus_r += L[x].sign < 0;
              }
              for (size_t x : col) {
                ok &= L[x].sign != 0;
                minus_c += L[x].sign < 0;
              }
              if (!ok || (minus_r + minus_c) % 2 == 0) continue;
              std::vector<size_t> rows = r, cols = col;
              if (minus_r % 2 == 0) std::swap(rows, cols);
              auto same = [&](const std::vector<size_t>& v) {
                return L[v[0]].trace == L[v[1]].trace && L[v[0]].trace == L[v[2]].trace;
              };
              bool uniform = same(rows) && same(cols);
              if (!best || (uniform && !best->uniform)) best = Cand{rows, cols, uniform};
            }
      }
  if (!best) return std::nullopt;

  std::vector<size_t> ids = best->rows;
  ids.insert(ids.end(), best->cols.begin(), best->cols.end());
  MerminSquare m;
  m.grid = s.restrict_to(ids);
  m.cells.assign(3, std::vector<size_t>(3));
  for (size_t r = 0; r < 3; ++r)
    for (size_t c = 0; c < 3; ++c) {
      const auto& rp = m.grid.blocks[r].pts;
      const auto& cp = m.grid.blocks[3 + c].pts;
      for (size_t p : rp)
        if (std::count(cp.begin(), cp.end(), p)) m.cells[r][c] = p;
    }
  return m;
}

std::vector<std::vector<CycloMatrix> > line_contexts(const MerminSquare& m) {
  const auto& dims = m.grid.dims;
  const size_t d = static_cast<size_t>(dims.dim());
  const int ord = 2 * dims.conductor();
  std::vector<std::vector<CycloMatrix> > out;
  for (const auto& blk : m.grid.blocks) {
    std::vector<CycloMatrix> ms;
    for (size_t p : blk.pts) ms.push_back(displacement(dims, m.grid.points[p]));
    std::vector<CycloMatrix> ctx;
    std::vector<size_t> ks(ms.size(), 0);
    for (;;) {
      CycloMatrix st(d * ms.size(), d, ord);
      for (size_t t = 0; t < ms.size(); ++t) {
        CycloNum lam = CycloNum::root(ord, static_cast<long long>(ks[t]));
        for (size_t i = 0; i < d; ++i)
          for (size_t j = 0; j < d; ++j) st.set(t * d + i, j, ms[t](i, j) - (i == j ? lam : CycloNum()));
      }
      for (const auto& v : kernel(st)) ctx.push_back(scale(outer(v, v), herm_inner(v, v).inverse()));
      size_t q = 0;
      while (q < ks.size() && ++ks[q] == static_cast<size_t>(ord)) ks[q++] = 0;
      if (q == ks.size()) break;
    }
    out.push_back(std::move(ctx));
  }
  return out;
}

std::vector<std::vector<CycloMatrix> > complete_contexts(const std::vector<CycloMatrix>& rays0) {
  std::vector<CycloMatrix> rays;
  std::set<std::string> seen;
  for (const auto& r : rays0)
    if (seen.insert(matrix_key(r)).second) rays.push_back(r);
  if (rays.empty()) return {};
  const size_t d = rays[0].rows();
  const size_t n = rays.size();
  std::vector<std::vector<bool> > orth(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) orth[i][j] = orth[j][i] = trace_of_product(rays[i], rays[j]).is_zero();
  std::vector<std::vector<CycloMatrix> > out;
  std::vector<size_t> cur;
  std::function<void(size_t)> go = [&](size_t from) {
    if (cur.size() == d) {
      std::vector<CycloMatrix> ctx;
      for (size_t i : cur) ctx.push_back(rays[i]);
      out.push_back(std::move(ctx));
      return;
    }
    for (size_t i = from; i < n; ++i) {
      bool ok = true;
      for (size_t j : cur) ok = ok && orth[i][j];
      if (!ok) continue;
      cur.push_back(i);
      go(i + 1);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

bool ks_noncolorable(const std::vector<std::vector<CycloMatrix> >& contexts) {
  std::map<std::string, size_t> id;
  std::vector<CycloMatrix> rays;
  std::vector<std::vector<size_t> > ctx;
  for (const auto& c : contexts) {
    std::vector<size_t> ids;
    for (const auto& r : c) {
      auto [it, fresh] = id.try_emplace(matrix_key(r), rays.size());
      if (fresh) rays.push_back(r);
      ids.push_back(it->second);
    }
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j)
        if (!trace_of_product(c[i], c[j]).is_zero()) throw InputError("context members are not orthogonal");
    ctx.push_back(std::move(ids));
  }
  const size_t n = rays.size();
  std::vector<std::vector<size_t> > orth(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (trace_of_product(rays[i], rays[j]).is_zero()) {
        orth[i].push_back(j);
        orth[j].push_back(i);
      }
  // value: 1 true, 0 false, -1 open; false count tracks forced zeros
  std::vector<int> val(n, -1);
  std::function<bool()> colorable = [&]() -> bool {
    // context with no true member and fewest open rays
    int pick = -1;
    size_t best = n + 1;
    for (size_t c = 0; c < ctx.size(); ++c) {
      bool has_true = false;
      size_t open = 0;
      for (size_t r : ctx[c]) {
        has_true |= val[r] == 1;
        open += val[r] == -1;
      }
      if (has_true) continue;
      if (open == 0) return false;
      if (open < best) {
        best = open;
        pick = static_cast<int>(c);
      }
    }
    if (pick < 0) return true;
    for (size_t r : ctx[pick]) {
      if (val[r] != -1) continue;
      std::vector<size_t> changed = {r};
      val[r] = 1;
      for (size_t o : orth[r])
        if (val[o] == -1) {
          val[o] = 0;
          changed.push_back(o);
        }
      if (colorable()) return true;
      for (size_t x : changed) val[x] = -1;
    }
    return false;
  };
  return !colorable();
}

}  // namespace modpovm
