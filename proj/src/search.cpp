#include "modpovm/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "modpovm/errors.hpp"

namespace modpovm {

namespace {

using Angle = std::optional<Rational>;  // nullopt = zero entry

Rational frac(Rational q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  q -= fl;
  q.canonicalize();
  return q;
}

CycloNum root_of_angle(const Rational& a) {
  const mpz_class& den = a.get_den();
  if (!den.fits_sint_p()) throw ArithmeticError("root of unity order too large");
  return CycloNum::root(static_cast<int>(den.get_si()), a.get_num().get_si());
}

std::string perm_key(const Permutation& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) s += static_cast<char>(p[i]);
  return s;
}

// Angle of a root of unity, or nullopt if x is not one.
std::optional<Rational> root_angle(const CycloNum& x) {
  if (x.is_zero()) return std::nullopt;
  const int n = x.conductor();
  const int m = n % 2 ? 2 * n : n;
  for (int k = 0; k < m; ++k)
    if (CycloNum::root(m, k) == x) return Rational(k, m);
  return std::nullopt;
}

// One candidate entry: a root of unity (angle) or a general value.
struct Entry {
  bool zero = true;
  std::optional<Rational> angle;
  CycloNum value;

  std::string key() const {
    if (zero) return "0";
    if (angle) return "r" + angle->get_str();
    return "c" + value.canonical_key();
  }
  CycloNum number() const { return zero ? CycloNum() : angle ? root_of_angle(*angle) : value; }
};

struct Coef {
  CycloNum value;
  std::optional<Rational> angle;
};

std::vector<Coef> nonzero_coefficients(const std::vector<CycloNum>& entry_set) {
  std::vector<Coef> out;
  std::set<std::string> seen;
  for (const auto& x : entry_set) {
    if (x.is_zero()) continue;
    if (!seen.insert(x.canonical_key()).second) continue;
    out.push_back({x, root_angle(x)});
  }
  return out;
}

std::vector<Permutation> subgroup_elements(const std::vector<Permutation>& gens) {
  const size_t n = gens.front().size();
  std::vector<Permutation> els = {Permutation(n)};
  std::unordered_set<std::string> seen = {perm_key(els[0])};
  for (size_t k = 0; k < els.size(); ++k)
    for (const auto& g : gens) {
      Permutation h = els[k].then(g);
      if (seen.insert(perm_key(h)).second) els.push_back(h);
    }
  return els;
}

std::string subgroup_key(const std::vector<Permutation>& gens) {
  std::vector<std::string> ks;
  for (const auto& p : subgroup_elements(gens)) ks.push_back(perm_key(p));
  std::sort(ks.begin(), ks.end());
  std::string s;
  for (const auto& k : ks) s += k + '|';
  return s;
}

bool commute(const Permutation& a, const Permutation& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (b[a[i]] != a[b[i]]) return false;
  return true;
}

bool in_cyclic(const Permutation& g, const Permutation& h) {
  Permutation p = g;
  const size_t o = g.order();
  for (size_t k = 1; k <= o; ++k) {
    if (p == h) return true;
    p = p.then(g);
  }
  return false;
}

}  // namespace

std::vector<CycloNum> SearchBudget::default_entry_set() {
  const CycloNum w3 = CycloNum::root(3, 1), w6 = CycloNum::root(6, 1), i = CycloNum::root(4, 1);
  const CycloNum one(1);
  return {CycloNum(), one, -one, w3, -w3, w3 + one, -(w3 + one), w6, -w6, w6 - one, -(w6 - one), i, -i};
}

void SearchBudget::validate() const {
  if (entry_set.empty()) throw InputError("entry set is empty");
  bool zero = false, one = false;
  for (const auto& x : entry_set) {
    zero |= x.is_zero();
    one |= x.is_one();
  }
  if (!zero || !one) throw InputError("entry set must contain 0 and 1");
  if (max_support < 1) throw InputError("max support must be at least 1");
  if (group_element_cap < 1) throw InputError("group element cap must be at least 1");
  if (workers < 1) throw InputError("workers must be at least 1");
}

std::vector<CycloNum> parse_entry_set(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    std::vector<CycloNum> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) out.push_back(parse_cyclo_expr(tok));
    return out;
  }
  return parse_cyclo_list(text);
}

std::string RootSpace::key() const {
  std::string s;
  for (const auto& v : basis) {
    for (const auto& a : v) s += (a ? a->get_str() : std::string("z")) + ",";
    s += ';';
  }
  return s;
}

std::vector<CycloVector> RootSpace::vectors() const {
  std::vector<CycloVector> out;
  for (const auto& v : basis) {
    CycloVector x;
    for (const auto& a : v) x.push_back(a ? root_of_angle(*a) : CycloNum());
    unify_conductor(x);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<RootSpace> joint_eigenspaces(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw InputError("joint_eigenspaces: no generators");
  const size_t n = gens[0].size();
  std::vector<size_t> orders;
  for (const auto& g : gens) {
    if (g.size() != n) throw DimensionError("joint_eigenspaces: size mismatch");
    orders.push_back(g.order());
  }
  // orbits, each listed from its smallest point
  std::vector<std::vector<uint32_t> > orbits;
  std::vector<bool> seen(n, false);
  for (uint32_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<uint32_t> orb = {s};
    seen[s] = true;
    for (size_t k = 0; k < orb.size(); ++k)
      for (const auto& g : gens)
        if (!seen[g[orb[k]]]) {
          seen[g[orb[k]]] = true;
          orb.push_back(g[orb[k]]);
        }
    orbits.push_back(std::move(orb));
  }

  std::vector<RootSpace> out;
  std::vector<size_t> ks(gens.size(), 0);
  for (;;) {
    RootSpace sp;
    for (const auto& orb : orbits) {
      std::vector<Angle> x(n);
      x[orb[0]] = Rational(0);
      bool ok = true;
      for (size_t k = 0; k < orb.size() && ok; ++k) {
        const uint32_t i = orb[k];
        for (size_t gi = 0; gi < gens.size() && ok; ++gi) {
          const uint32_t j = gens[gi][i];
          Rational want = frac(*x[i] + Rational(ks[gi], orders[gi]));
          if (!x[j])
            x[j] = want;
          else
            ok = *x[j] == want;
        }
      }
      if (ok) sp.basis.push_back(std::move(x));
    }
    if (!sp.basis.empty()) out.push_back(std::move(sp));
    size_t p = 0;
    while (p < ks.size() && ++ks[p] == orders[p]) ks[p++] = 0;
    if (p == ks.size()) break;
  }
  return out;
}

std::vector<Permutation> group_elements(const PermPair& pair, size_t cap, bool* truncated) {
  return group_elements(std::vector<Permutation>{pair.e, pair.v}, cap, truncated);
}

std::vector<Permutation> group_elements(const std::vector<Permutation>& gens, size_t cap, bool* truncated) {
  if (truncated) *truncated = false;
  if (gens.empty()) return {};
  std::unordered_set<std::string> seen = {perm_key(Permutation(gens[0].size()))};
  std::vector<Permutation> els;
  auto push = [&](const Permutation& p) {
    if (!seen.insert(perm_key(p)).second) return true;
    if (els.size() == cap) {
      if (truncated) *truncated = true;
      return false;
    }
    els.push_back(p);
    return true;
  };
  for (const auto& g : gens)
    if (!push(g)) return els;
  for (size_t k = 0; k < els.size(); ++k)
    for (const auto& g : gens)
      if (!push(els[k].then(g))) return els;
  return els;
}

CandidateList candidate_fiducials(const PermPair& pair, const SearchBudget& budget) {
  pair.validate();
  return candidate_fiducials(std::vector<Permutation>{pair.e, pair.v}, budget);
}

CandidateList candidate_fiducials(const std::vector<Permutation>& generators, const SearchBudget& budget) {
  budget.validate();
  if (generators.empty()) throw InputError("no generators");
  for (const auto& g : generators)
    if (g.size() != generators[0].size()) throw InputError("generators act on different point sets");
  CandidateList res;
  auto els = group_elements(generators, budget.group_element_cap, &res.truncated);
  res.elements_scanned = els.size();

  std::vector<RootSpace> spaces;
  std::set<std::string> space_keys, group_keys;
  auto take = [&](const std::vector<Permutation>& gens) {
    if (!group_keys.insert(subgroup_key(gens)).second) return;
    for (auto& sp : joint_eigenspaces(gens))
      if (space_keys.insert(sp.key()).second) spaces.push_back(std::move(sp));
  };
  for (const auto& g : els) take({g});
  for (size_t a = 0; a < els.size(); ++a)
    for (size_t b = a + 1; b < els.size(); ++b) {
      if (!commute(els[a], els[b])) continue;
      if (in_cyclic(els[a], els[b]) || in_cyclic(els[b], els[a])) continue;
      take({els[a], els[b]});
    }
  res.spaces = spaces.size();

  const auto coefs = nonzero_coefficients(budget.entry_set);
  std::set<std::string> seen;
  const size_t n = generators[0].size();
  auto emit = [&](const RootSpace& sp, const std::vector<size_t>& sub, const std::vector<size_t>& ci) {
    std::vector<Entry> v(n);
    for (size_t t = 0; t < sub.size(); ++t) {
      const auto& b = sp.basis[sub[t]];
      for (size_t p = 0; p < n; ++p) {
        if (!b[p]) continue;
        Entry& e = v[p];
        e.zero = false;
        if (t == 0) {
          e.angle = *b[p];
        } else {
          const Coef& c = coefs[ci[t - 1]];
          if (c.angle)
            e.angle = frac(*c.angle + *b[p]);
          else
            e.value = c.value * root_of_angle(*b[p]);
        }
      }
    }
    std::string key;
    for (const auto& e : v) key += e.key() + ",";
    if (!seen.insert(key).second) return;
    CycloVector x;
    for (const auto& e : v) x.push_back(e.number());
    res.vectors.push_back(std::move(x));
  };

  for (const auto& sp : spaces) {
    const size_t k = sp.basis.size();
    if (k == 1) {
      emit(sp, {0}, {});
      continue;
    }
    const size_t smax = std::min(k, static_cast<size_t>(budget.max_support));
    for (size_t s = 1; s <= smax; ++s) {
      std::vector<bool> mask(k, false);
      std::fill(mask.begin(), mask.begin() + s, true);
      do {
        std::vector<size_t> sub;
        for (size_t i = 0; i < k; ++i)
          if (mask[i]) sub.push_back(i);
        std::vector<size_t> ci(s - 1, 0);
        for (;;) {
          emit(sp, sub, ci);
          size_t p = 0;
          while (p < ci.size() && ++ci[p] == coefs.size()) ci[p++] = 0;
          if (p == ci.size()) break;
        }
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
  }
  return res;
}

std::string spectrum_key(const ICCertificate& c) {
  std::string s;
  for (const auto& e : c.trace_spectrum) s += e.value.canonical_key() + "x" + std::to_string(e.multiplicity) + ";";
  s += "|";
  for (const auto& a : c.angle_spectrum) s += a.norm.get_str() + "^" + std::to_string(a.degree) + "x" +
                                              std::to_string(a.multiplicity) + ";";
  return s;
}

SearchResult search_ic(const PermPair& pair, const DimFactorization& dims, const SearchBudget& budget) {
  if (static_cast<size_t>(dims.dim()) != pair.index())
    throw DimensionError("dimension " + std::to_string(dims.dim()) + " does not match index " +
                         std::to_string(pair.index()));
  pair.validate();
  return search_ic(std::vector<Permutation>{pair.e, pair.v}, dims, budget);
}

SearchResult search_ic(const std::vector<Permutation>& generators, const DimFactorization& dims,
                       const SearchBudget& budget) {
  if (generators.empty() || static_cast<size_t>(dims.dim()) != generators[0].size())
    throw DimensionError("dimension " + std::to_string(dims.dim()) + " does not match the permutation degree");
  return certify_candidates(candidate_fiducials(generators, budget), dims, budget);
}

SearchResult certify_candidates(const CandidateList& cands, const DimFactorization& dims,
                                const SearchBudget& budget) {
  SearchResult res;
  res.truncated = cands.truncated;
  res.candidates = cands.vectors.size();

  const size_t n2 = static_cast<size_t>(dims.dim()) * dims.dim();
  for (const auto& v : cands.vectors)
    if (v.size() != static_cast<size_t>(dims.dim())) throw DimensionError("candidate length does not match dimension");
  std::vector<std::optional<ICCertificate> > slots(cands.vectors.size());
  auto work = [&](size_t begin, size_t step) {
    for (size_t i = begin; i < cands.vectors.size(); i += step) {
      Fiducial f = Fiducial::from_vector(dims, cands.vectors[i]);
      if (group_matrix_rank(dims, overlap_traces(f)) != n2) continue;
      ICCertificate c = verify(f);
      if (c.is_ic) slots[i] = std::move(c);
    }
  };
  const size_t w = static_cast<size_t>(budget.workers);
  if (w <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> ts;
    for (size_t t = 0; t < w; ++t) ts.emplace_back(work, t, w);
    for (auto& t : ts) t.join();
  }

  struct Ranked {
    size_t pp, ntrace;
    std::string skey, fkey;
    ICCertificate cert;
  };
  std::vector<Ranked> all;
  for (auto& s : slots)
    if (s) all.push_back({s->pp(), s->trace_spectrum.size(), spectrum_key(*s), s->fiducial.pretty(), std::move(*s)});
  std::sort(all.begin(), all.end(), [](const Ranked& a, const Ranked& b) {
    return std::tie(a.pp, a.ntrace, a.skey, a.fkey) < std::tie(b.pp, b.ntrace, b.skey, b.fkey);
  });
  std::set<std::string> kept;
  for (auto& r : all) {
    if (budget.dedupe && !kept.insert(r.skey).second) continue;
    res.certificates.push_back(std::move(r.cert));
  }
  return res;
}

}  // namespace modpovm
