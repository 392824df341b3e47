#include "modpovm/modgroup.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "modpovm/errors.hpp"

namespace modpovm {

void PermPair::validate() const {
  const size_t mu = e.size();
  if (mu == 0 || v.size() != mu) throw InputError("perm pair: sizes must agree and be positive");
  if (!e.then(e).is_identity()) throw InputError("perm pair: sigma_e is not an involution");
  if (!v.power(3).is_identity()) throw InputError("perm pair: sigma_v^3 is not the identity");
  std::vector<bool> seen(mu, false);
  std::vector<uint32_t> stack = {0};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    uint32_t p = stack.back();
    stack.pop_back();
    for (uint32_t q : {e[p], v[p]})
      if (!seen[q]) {
        seen[q] = true;
        ++count;
        stack.push_back(q);
      }
  }
  if (count != mu) throw InputError("perm pair: action is not transitive");
}

std::string PermPair::to_string() const {
  return "e=" + e.to_cycle_string() + " v=" + v.to_cycle_string();
}

PermPair parse_perm_pair(size_t mu, std::string_view e_cycles, std::string_view v_cycles) {
  PermPair p{Permutation::from_cycles(mu, e_cycles), Permutation::from_cycles(mu, v_cycles)};
  p.validate();
  return p;
}

namespace {

// Low-index search. Points are introduced in order; at the first point
// with an undefined image, sigma_e (then sigma_v) is decided there, either
// among existing free points or by creating the next new point.
class TableSearch {
 public:
  explicit TableSearch(size_t mu) : mu_(mu), e_(mu, kFree), v_(mu, kFree) {}

  std::vector<PermPair> run() {
    recurse(1);
    return std::move(out_);
  }

 private:
  static constexpr int kFree = -1;

  void recurse(int n) {
    const int mu = static_cast<int>(mu_);
    for (int p = 0; p < n; ++p) {
      if (e_[p] == kFree) {
        e_[p] = p;
        recurse(n);
        e_[p] = kFree;
        for (int q = p + 1; q < n; ++q) {
          if (e_[q] != kFree) continue;
          e_[p] = q;
          e_[q] = p;
          recurse(n);
          e_[p] = e_[q] = kFree;
        }
        if (n < mu) {
          e_[p] = n;
          e_[n] = p;
          recurse(n + 1);
          e_[p] = e_[n] = kFree;
        }
        return;
      }
      if (v_[p] == kFree) {
        v_[p] = p;
        recurse(n);
        v_[p] = kFree;
        std::vector<int> cands;
        for (int q = 0; q < n; ++q)
          if (q != p && v_[q] == kFree) cands.push_back(q);
        cands.push_back(n);
        cands.push_back(n + 1);
        for (int b : cands)
          for (int c : cands) {
            if (b == c) continue;
            int nn = n;
            if (b >= n) {
              if (b != n) continue;
              nn = n + 1;
            }
            if (c >= n) {
              if (c != nn) continue;
              ++nn;
            }
            if (nn > mu) continue;
            v_[p] = b;
            v_[b] = c;
            v_[c] = p;
            recurse(nn);
            v_[p] = v_[b] = v_[c] = kFree;
          }
        return;
      }
    }
    if (n == mu) {
      std::vector<uint32_t> e(e_.begin(), e_.end()), v(v_.begin(), v_.end());
      out_.push_back(PermPair{Permutation(std::move(e)), Permutation(std::move(v))});
    }
  }

  size_t mu_;
  std::vector<int> e_, v_;
  std::vector<PermPair> out_;
};

PermPair relabel_from(const PermPair& p, uint32_t base) {
  const size_t mu = p.index();
  std::vector<int> lab(mu, -1);
  std::vector<uint32_t> order = {base};
  lab[base] = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    uint32_t x = order[i];
    for (uint32_t y : {p.e[x], p.v[x], p.v[p.v[x]]})
      if (lab[y] < 0) {
        lab[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
  }
  std::vector<uint32_t> ne(mu), nv(mu);
  for (size_t x = 0; x < mu; ++x) {
    ne[lab[x]] = lab[p.e[x]];
    nv[lab[x]] = lab[p.v[x]];
  }
  return PermPair{Permutation(std::move(ne)), Permutation(std::move(nv))};
}

}  // namespace

std::vector<PermPair> enumerate_tables(size_t mu) {
  if (mu < 1) throw InputError("index must be positive");
  if (mu > kMaxEnumerationIndex)
    throw ResourceError("index " + std::to_string(mu) + " exceeds enumeration limit " +
                        std::to_string(kMaxEnumerationIndex));
  return TableSearch(mu).run();
}

PermPair canonical_form(const PermPair& p) {
  PermPair best = relabel_from(p, 0);
  for (uint32_t b = 1; b < p.index(); ++b) {
    PermPair c = relabel_from(p, b);
    if (c < best) best = std::move(c);
  }
  return best;
}

std::vector<PermPair> enumerate_index(size_t mu) {
  std::set<PermPair> classes;
  for (const auto& t : enumerate_tables(mu)) classes.insert(canonical_form(t));
  return {classes.begin(), classes.end()};
}

Signature signature(const PermPair& p) {
  Signature s;
  s.index = p.index();
  s.nu2 = p.e.fixed_points();
  s.nu3 = p.v.fixed_points();
  s.cusp_widths = p.translation().cycle_type();
  s.level = 1;
  for (size_t w : s.cusp_widths) s.level = std::lcm(s.level, static_cast<unsigned long long>(w));
  long twelve_g = 12 + static_cast<long>(s.index) - 3 * static_cast<long>(s.nu2) -
                  4 * static_cast<long>(s.nu3) - 6 * static_cast<long>(s.cusp_widths.size());
  if (twelve_g < 0 || twelve_g % 12 != 0)
    throw InputError("genus formula gives a non-integral or negative value for " + p.to_string());
  s.genus = twelve_g / 12;
  s.congruence = is_congruence(p);
  return s;
}

namespace {

Permutation prod(std::initializer_list<Permutation> ps) {
  auto it = ps.begin();
  Permutation r = *it;
  for (++it; it != ps.end(); ++it) r = r.then(*it);
  return r;
}

long long inv_mod(long long a, long long m) {
  a %= m;
  if (a < 0) a += m;
  for (long long x = 1; x < m; ++x)
    if (a * x % m == 1) return x;
  throw ArithmeticError("no inverse mod " + std::to_string(m));
}

}  // namespace

// Hsu's relations on L = image of [[1,1],[0,1]] and R = image of
// [[1,0],[1,1]] under the right coset action.
bool is_congruence(const PermPair& p) {
  unsigned long long N = 1;
  for (size_t w : p.translation().cycle_type()) N = std::lcm(N, static_cast<unsigned long long>(w));
  if (N == 1) return true;
  const long long n = static_cast<long long>(N);
  const Permutation L = p.e.then(p.v);
  const Permutation R = prod({p.e, L.inverse(), p.e});
  long long two = 1;
  while (n % (2 * two) == 0) two *= 2;
  const long long odd = n / two;

  if (two == 1) {
    long long h = inv_mod(2, n);
    return prod({R.power(2), L.power(-h)}).power(3).is_identity();
  }
  if (odd == 1) {
    long long f = inv_mod(5, n);
    Permutation s = prod({L.power(20), R.power(f), L.power(-4), R.inverse()});
    Permutation x = prod({L, R.inverse(), L});
    return prod({x.inverse(), s, x}) == s.inverse() &&
           prod({s.inverse(), R, s}) == R.power(25) &&
           prod({s, R.power(5), L, R.inverse(), L}).power(3).is_identity();
  }
  long long c = 0, d = 0;
  for (long long t = 0; t < n; ++t) {
    if (t % two == 0 && t % odd == 1) c = t;
    if (t % two == 1 && t % odd == 0) d = t;
  }
  const Permutation a = L.power(c), b = R.power(c), l = L.power(d), r = R.power(d);
  const long long h = inv_mod(2, odd), f = inv_mod(5, two);
  const Permutation s = prod({l.power(20), r.power(f), l.power(-4), r.inverse()});
  const Permutation x = prod({l, r.inverse(), l});
  const Permutation aba = prod({a, b.inverse(), a});
  return a.then(r) == r.then(a) && aba.power(4).is_identity() &&
         aba.power(2) == b.inverse().then(a).power(3) &&
         prod({a.power(2), b.power(-h)}).power(3).is_identity() &&
         prod({x.inverse(), s, x}) == s.inverse() && prod({s.inverse(), r, s}) == r.power(25) &&
         x.power(2) == prod({s, r.power(5), l, r.inverse(), l}).power(3);
}

namespace {

template <class Key, class Canon, class ActS, class ActV>
PermPair coset_action(const std::vector<Key>& pts, Canon canon, ActS act_s, ActV act_v) {
  std::map<Key, uint32_t> index;
  for (size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<uint32_t>(i);
  std::vector<uint32_t> e(pts.size()), v(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    e[i] = index.at(canon(act_s(pts[i])));
    v[i] = index.at(canon(act_v(pts[i])));
  }
  PermPair p{Permutation(std::move(e)), Permutation(std::move(v))};
  p.validate();
  return canonical_form(p);
}

}  // namespace

PermPair gamma0(unsigned N) {
  if (N < 1) throw InputError("gamma0: N must be positive");
  const long long n = N;
  using Pt = std::pair<long long, long long>;
  auto md = [n](long long x) { return ((x % n) + n) % n; };
  auto canon = [&](Pt q) {
    Pt best{n, n};
    for (long long u = 1; u <= n; ++u) {
      if (std::gcd(u, n) != 1) continue;
      Pt c{md(u * q.first), md(u * q.second)};
      if (n == 1) c = {0, 0};
      best = std::min(best, c);
    }
    return best;
  };
  std::set<Pt> reps;
  for (long long c = 0; c < n; ++c)
    for (long long d = 0; d < n; ++d)
      if (std::gcd(std::gcd(c, d), n) == 1) reps.insert(canon({c, d}));
  std::vector<Pt> pts(reps.begin(), reps.end());
  // (c,d).S = (d,-c); (c,d).ST = (d, d-c)
  return coset_action(
      pts, canon, [&](Pt q) { return Pt{q.second, md(-q.first)}; },
      [&](Pt q) { return Pt{q.second, md(q.second - q.first)}; });
}

PermPair gamma_principal(unsigned N) {
  if (N < 1) throw InputError("gamma_principal: N must be positive");
  const long long n = N;
  using Mat = std::array<long long, 4>;
  auto md = [n](long long x) { return ((x % n) + n) % n; };
  auto canon = [&](Mat m) {
    Mat neg{md(-m[0]), md(-m[1]), md(-m[2]), md(-m[3])};
    return std::min(m, neg);
  };
  auto mul = [&](const Mat& a, const Mat& b) {
    return Mat{md(a[0] * b[0] + a[1] * b[2]), md(a[0] * b[1] + a[1] * b[3]),
               md(a[2] * b[0] + a[3] * b[2]), md(a[2] * b[1] + a[3] * b[3])};
  };
  std::set<Mat> reps;
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      for (long long c = 0; c < n; ++c)
        for (long long d = 0; d < n; ++d)
          if (md(a * d - b * c) == md(1)) reps.insert(canon({a, b, c, d}));
  std::vector<Mat> pts(reps.begin(), reps.end());
  const Mat S{0, md(-1), md(1), 0};
  const Mat V{0, md(-1), md(1), md(1)};
  return coset_action(
      pts, canon, [&](const Mat& m) { return mul(m, S); }, [&](const Mat& m) { return mul(m, V); });
}

unsigned long long psi(unsigned N) {
  unsigned long long r = N;
  unsigned m = N;
  for (unsigned p = 2; p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r = r / p * (p + 1);
  }
  return r;
}

unsigned long long gamma_index_psl(unsigned N) {
  if (N <= 2) return N == 1 ? 1 : 6;
  unsigned long long r = static_cast<unsigned long long>(N) * N * N;
  unsigned m = N;
  for (unsigned p = 2; p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r = r / (static_cast<unsigned long long>(p) * p) * (static_cast<unsigned long long>(p) * p - 1);
  }
  return r / 2;
}

CycloMatrix perm_matrix(const Permutation& s) {
  CycloMatrix m(s.size(), s.size());
  for (size_t i = 0; i < s.size(); ++i) m.at(i, s[i]) = CycloNum(1);
  return m;
}

std::pair<CycloMatrix, CycloMatrix> perm_matrices(const PermPair& p) {
  return {perm_matrix(p.e), perm_matrix(p.v)};
}

unsigned long long group_order(const PermPair& p, unsigned long long bound) {
  return group_order(std::vector<Permutation>{p.e, p.v}, bound);
}

std::string signature_label(const Signature& s) {
  std::map<size_t, size_t> mult;
  for (size_t w : s.cusp_widths) ++mult[w];
  std::ostringstream os;
  os << (s.congruence ? "C" : "NC") << '(' << s.genus << ',' << s.level << ',' << s.nu2 << ','
     << s.nu3 << ",[";
  bool first = true;
  for (auto [w, m] : mult) {
    os << (first ? "" : " ") << w << '^' << m;
    first = false;
  }
  os << "])";
  return os.str();
}

PermPair gamma_prime() {
  // Gamma/Gamma' = Z6 with e -> 3, v -> 2
  std::vector<uint32_t> e(6), v(6);
  for (uint32_t x = 0; x < 6; ++x) {
    e[x] = (x + 3) % 6;
    v[x] = (x + 2) % 6;
  }
  return PermPair{Permutation(e), Permutation(v)};
}

std::string subgroup_name(const PermPair& p) {
  const size_t mu = p.index();
  const PermPair c = canonical_form(p);
  if (mu == 1) return "Γ";
  if (mu == 2 && c == canonical_form(PermPair{Permutation::from_cycles(2, "(1,2)"), Permutation(2)}))
    return "Γ²";
  if (mu == 3 && c == canonical_form(PermPair{Permutation(3), Permutation::from_cycles(3, "(1,2,3)")}))
    return "Γ³";
  if (mu == 6 && c == canonical_form(gamma_prime())) return "Γ'";
  for (unsigned N = 2; psi(N) <= 2 * mu; ++N) {
    if (psi(N) == mu && c == canonical_form(gamma0(N))) return "Γ0(" + std::to_string(N) + ")";
    if (gamma_index_psl(N) == mu && c == canonical_form(gamma_principal(N)))
      return "Γ(" + std::to_string(N) + ")";
  }
  const Signature s = signature(p);
  if (!s.congruence || s.genus != 0) return "";
  struct Named {
    size_t index;
    unsigned long long level;
    std::vector<size_t> widths;
    const char* name;
  };
  static const std::vector<Named> names = {
      {4, 4, {4}, "4A⁰"},
      {5, 5, {5}, "5A⁰"},
      {6, 3, {3, 3}, "3C⁰"},
      {7, 7, {7}, "7A⁰"},
  };
  std::vector<size_t> w = s.cusp_widths;
  std::sort(w.begin(), w.end());
  for (const auto& n : names)
    if (n.index == mu && n.level == s.level && n.widths == w) return n.name;
  return "";
}

}  // namespace modpovm
