#include "modpovm/povm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "modpovm/errors.hpp"

namespace modpovm {

namespace {

bool is_hermitian(const CycloMatrix& m) { return dagger(m) == m; }

CycloNum lift(const CycloNum& x, int k) { return x.conductor() == k ? x : x.lifted(k); }

double log_abs(const mpz_class& z) {
  long e = 0;
  double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

// One unordered-pair value with how many pairs carry it.
struct PairValue {
  CycloNum trace;
  std::optional<CycloNum> inner;  // normalized inner product, vector orbits
  size_t count = 0;
};

std::vector<SpectrumEntry> spectrum_of(const std::vector<PairValue>& pv) {
  std::map<std::string, std::pair<CycloNum, size_t> > raw;
  for (const auto& p : pv) {
    auto [it, fresh] = raw.try_emplace(p.trace.to_string(), p.trace, 0);
    it->second.second += p.count;
  }
  std::map<std::string, SpectrumEntry> by_key;
  for (const auto& [k, vc] : raw) {
    CycloNum r = vc.first.reduced();
    auto [it, fresh] = by_key.try_emplace(r.to_string());
    if (fresh) it->second.value = r;
    it->second.multiplicity += vc.second;
  }
  std::vector<SpectrumEntry> out;
  for (auto& [k, e] : by_key) out.push_back(std::move(e));
  std::stable_sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    return a.value.embed().real() < b.value.embed().real();
  });
  return out;
}

std::vector<AngleEntry> angles_of(const std::vector<PairValue>& pv, int field, bool* agree) {
  const int deg = euler_phi(field);
  std::map<std::string, Rational> norm_cache;
  std::map<Rational, AngleEntry> by_norm;
  if (agree) *agree = true;
  for (const auto& p : pv) {
    std::string key = p.trace.to_string();
    auto it = norm_cache.find(key);
    if (it == norm_cache.end()) it = norm_cache.emplace(key, p.trace.field_norm(field)).first;
    const Rational& n = it->second;
    auto [e, fresh] = by_norm.try_emplace(n);
    AngleEntry& a = e->second;
    if (fresh) {
      a.norm = n;
      a.degree = deg;
      a.squared_angle = exact_root(n, deg);
      if (n > 0)
        a.approx = std::exp((log_abs(n.get_num()) - log_abs(n.get_den())) / deg);
    }
    if (p.inner) {
      std::string ik = "i" + p.inner->to_string();
      auto jt = norm_cache.find(ik);
      if (jt == norm_cache.end()) jt = norm_cache.emplace(ik, p.inner->field_norm(field)).first;
      const Rational& m = jt->second;
      Rational sq = m * m;
      if (!a.inner_norm_squared) a.inner_norm_squared = sq;
      if (sq != n && agree) *agree = false;
    }
    a.multiplicity += p.count;
  }
  std::vector<AngleEntry> out;
  for (auto& [k, a] : by_norm) out.push_back(std::move(a));
  return out;
}

std::vector<PairValue> orbit_pairs(const Orbit& o) {
  std::vector<PairValue> pv;
  const bool vec = !o.states.empty();
  const CycloNum inv_n2 = o.norm2.inverse();
  for (size_t i = 0; i < o.projectors.size(); ++i)
    for (size_t j = i + 1; j < o.projectors.size(); ++j) {
      PairValue p;
      p.count = 1;
      if (vec) {
        CycloNum c = herm_inner(o.states[i], o.states[j]) * inv_n2;
        p.trace = c * c.conj();
        p.inner = c;
      } else {
        p.trace = trace_of_product(o.projectors[i], o.projectors[j]);
      }
      pv.push_back(std::move(p));
    }
  return pv;
}

// Common order M and exponents (-1 for zero) when every entry is 0 or a
// root of unity.
std::optional<std::pair<int, std::vector<long> > > root_exponents(const Fiducial& f) {
  std::vector<std::optional<Rational> > angles;
  mpz_class m = f.conductor();
  for (const auto& x : f.vec()) {
    if (x.is_zero()) {
      angles.emplace_back();
      continue;
    }
    auto a = x.root_angle();
    if (!a) return std::nullopt;
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), a->get_den_mpz_t());
    angles.push_back(a);
  }
  if (m != f.conductor() && m != 2 * f.conductor()) return std::nullopt;
  const int M = static_cast<int>(m.get_si());
  std::vector<long> ex;
  for (const auto& a : angles) ex.push_back(a ? Rational(*a * M).get_num().get_si() : -1);
  return std::make_pair(M, ex);
}

// Per-label data for the fiducial against its displaced copies.
struct LabelData {
  std::vector<PauliOp> labels;
  std::vector<CycloNum> trace;
  std::vector<std::optional<CycloNum> > inner;
};

LabelData label_data(const Fiducial& f) {
  LabelData ld;
  const auto& dims = f.dims();
  ld.labels = enumerate_group(dims);
  const int K = f.conductor();
  const int scale = K / dims.conductor();
  if (f.has_vector() && root_exponents(f)) {
    // Entries are roots of unity: each overlap is a sum of roots, collected
    // as exponent counts before one conversion.
    const auto& psi = f.vec();
    auto [M, ex] = *root_exponents(f);
    // M is K or 2K (odd K); odd exponents fold to -zeta_K^((e-K)/2).
    const int step = M / dims.conductor();
    const CycloNum inv_n2 = f.norm2().inverse();
    std::vector<long> counts(K);
    for (const auto& op : ld.labels) {
      auto act = monomial(dims, op);
      std::fill(counts.begin(), counts.end(), 0);
      for (size_t j = 0; j < psi.size(); ++j) {
        const long t = ex[act.target[j]];
        if (ex[j] < 0 || t < 0) continue;
        long long e = ((ex[j] - t + act.phase[j] * step) % M + M) % M;
        if (M == K)
          ++counts[e];
        else if (e % 2 == 0)
          ++counts[e / 2];
        else
          --counts[((e - K) / 2 % K + K) % K];
      }
      CycloNum c = CycloNum::from_root_counts(counts) * inv_n2;
      ld.trace.push_back(c * c.conj());
      ld.inner.push_back(c);
    }
  } else if (f.has_vector()) {
    const auto& psi = f.vec();
    const CycloNum inv_n2 = f.norm2().inverse();
    for (const auto& op : ld.labels) {
      auto act = monomial(dims, op);
      CycloNum c;
      for (size_t j = 0; j < psi.size(); ++j) {
        const CycloNum& target = psi[act.target[j]];
        if (psi[j].is_zero() || target.is_zero()) continue;
        c += target.conj() * psi[j].times_root(act.phase[j] * scale);
      }
      c *= inv_n2;
      ld.trace.push_back(c * c.conj());
      ld.inner.push_back(c);
    }
  } else {
    CycloMatrix p = f.projector();
    for (const auto& op : ld.labels) {
      ld.trace.push_back(trace_of_product(p, conjugate_by(dims, op, p)));
      ld.inner.push_back(std::nullopt);
    }
  }
  return ld;
}

// Sum of D Pi D^dagger over the group.
CycloMatrix orbit_sum(const Fiducial& f) {
  const auto& dims = f.dims();
  const size_t d = static_cast<size_t>(dims.dim());
  const int K = f.conductor();
  auto roots = f.has_vector() ? root_exponents(f) : std::nullopt;
  if (!roots) {
    CycloMatrix p = f.projector();
    CycloMatrix sum(d, d, K);
    for (const auto& op : enumerate_group(dims)) sum = add(sum, conjugate_by(dims, op, p));
    return sum;
  }
  auto [M, ex] = *roots;
  const int step = M / dims.conductor();
  std::vector<std::vector<long> > counts(d * d, std::vector<long>(K, 0));
  for (const auto& op : enumerate_group(dims)) {
    auto act = monomial(dims, op);
    for (size_t j = 0; j < d; ++j) {
      if (ex[j] < 0) continue;
      for (size_t k = 0; k < d; ++k) {
        if (ex[k] < 0) continue;
        long long e = ((ex[j] - ex[k] + (act.phase[j] - act.phase[k]) * step) % M + M) % M;
        auto& slot = counts[act.target[j] * d + act.target[k]];
        if (M == K)
          ++slot[e];
        else if (e % 2 == 0)
          ++slot[e / 2];
        else
          --slot[((e - K) / 2 % K + K) % K];
      }
    }
  }
  const CycloNum inv = f.norm2().inverse();
  CycloMatrix sum(d, d, K);
  for (size_t i = 0; i < d * d; ++i) sum.set(i / d, i % d, CycloNum::from_root_counts(counts[i]) * inv);
  return sum;
}

const char* const kSubscript[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};

std::string omega(int n) {
  std::string s = "ω";
  for (char ch : std::to_string(n)) s += kSubscript[ch - '0'];
  return s;
}

const std::vector<std::pair<std::string, CycloNum> >& entry_names() {
  static const std::vector<std::pair<std::string, CycloNum> > names = [] {
    std::vector<std::pair<std::string, CycloNum> > base = {
        {"1", CycloNum(1)},
        {"i", CycloNum::root(4, 1)},
        {omega(3), CycloNum::root(3, 1)},
        {omega(6), CycloNum::root(6, 1)},
        {omega(3) + "²", CycloNum::root(3, 2)},
        {omega(6) + "⁵", CycloNum::root(6, 5)},
        {omega(8), CycloNum::root(8, 1)},
        {omega(8) + "³", CycloNum::root(8, 3)},
    };
    std::vector<std::pair<std::string, CycloNum> > out;
    out.emplace_back("0", CycloNum());
    for (const auto& [n, v] : base) {
      out.emplace_back(n, v);
      out.emplace_back("-" + n, -v);
    }
    for (size_t k = 1; k < base.size(); ++k) {
      const auto& [n, v] = base[k];
      out.emplace_back(n + "+1", v + CycloNum(1));
      out.emplace_back(n + "-1", v - CycloNum(1));
      out.emplace_back("-" + n + "+1", CycloNum(1) - v);
      out.emplace_back("-" + n + "-1", -v - CycloNum(1));
    }
    return out;
  }();
  return names;
}

}  // namespace

std::string entry_name(const CycloNum& x) {
  for (const auto& [n, v] : entry_names())
    if (v == x) return n;
  if (x.is_rational()) return x.rational_value().get_str();
  return x.reduced().to_string();
}

std::optional<Rational> exact_root(const Rational& q, int k) {
  if (k <= 0) throw InputError("exact_root: degree must be positive");
  if (q < 0) return std::nullopt;
  mpz_class a, b;
  if (!mpz_root(a.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(k))) return std::nullopt;
  if (!mpz_root(b.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(k))) return std::nullopt;
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Fiducial Fiducial::from_vector(DimFactorization dims, CycloVector vec) {
  if (static_cast<int>(vec.size()) != dims.dim())
    throw DimensionError("fiducial length " + std::to_string(vec.size()) + " does not match dimension " +
                         std::to_string(dims.dim()));
  if (std::all_of(vec.begin(), vec.end(), [](const CycloNum& x) { return x.is_zero(); }))
    throw InputError("fiducial vector is zero");
  for (auto& x : vec) x = x.reduced();
  Fiducial f;
  f.dims_ = std::move(dims);
  f.conductor_ = unify_conductor(vec, f.dims_.conductor());
  f.norm2_ = herm_inner(vec, vec);
  f.vec_ = std::move(vec);
  return f;
}

Fiducial Fiducial::from_projector(DimFactorization dims, CycloMatrix proj) {
  const size_t d = static_cast<size_t>(dims.dim());
  if (proj.rows() != d || proj.cols() != d) throw DimensionError("projector shape does not match dimension");
  if (!is_hermitian(proj)) throw InputError("projector is not Hermitian");
  if (matmul(proj, proj) != proj) throw InputError("projector is not idempotent");
  if (!trace(proj).is_one()) throw InputError("projector does not have unit trace");
  Fiducial f;
  f.dims_ = std::move(dims);
  f.conductor_ = static_cast<int>(lcm_ll(proj.conductor(), f.dims_.conductor()));
  proj.lift_to(f.conductor_);
  f.proj_ = std::move(proj);
  return f;
}

CycloMatrix Fiducial::projector() const {
  if (!has_vector()) return proj_;
  CycloMatrix p = scale(outer(vec_, vec_), norm2_.inverse());
  p.lift_to(conductor_);
  return p;
}

std::string Fiducial::pretty() const {
  std::ostringstream os;
  if (has_vector()) {
    os << '(';
    for (size_t i = 0; i < vec_.size(); ++i) os << (i ? "," : "") << entry_name(vec_[i]);
    os << ')';
    return os.str();
  }
  os << '[';
  for (size_t i = 0; i < proj_.rows(); ++i) {
    os << (i ? ";" : "");
    for (size_t j = 0; j < proj_.cols(); ++j) os << (j ? "," : "") << entry_name(proj_(i, j));
  }
  os << ']';
  return os.str();
}

Orbit build_orbit(const Fiducial& f) {
  Orbit o;
  o.dims = f.dims();
  o.conductor = f.conductor();
  o.ops = enumerate_group(o.dims);
  if (f.has_vector()) {
    o.norm2 = f.norm2();
    const CycloNum inv = o.norm2.inverse();
    const int scale_k = o.conductor / o.dims.conductor();
    for (const auto& op : o.ops) {
      auto act = monomial(o.dims, op);
      CycloVector s(f.vec().size(), CycloNum(Rational(0), o.conductor));
      for (size_t j = 0; j < s.size(); ++j) s[act.target[j]] = f.vec()[j].times_root(act.phase[j] * scale_k);
      CycloMatrix p = scale(outer(s, s), inv);
      p.lift_to(o.conductor);
      o.projectors.push_back(std::move(p));
      o.states.push_back(std::move(s));
    }
  } else {
    CycloMatrix p = f.projector();
    for (const auto& op : o.ops) o.projectors.push_back(conjugate_by(o.dims, op, p));
  }
  return o;
}

bool povm_sum_check(const Orbit& orbit) {
  const size_t d = static_cast<size_t>(orbit.dims.dim());
  if (orbit.projectors.empty()) return false;
  CycloMatrix sum(d, d, orbit.conductor);
  for (const auto& p : orbit.projectors) sum = add(sum, p);
  return sum == scale(CycloMatrix::identity(d), CycloNum(static_cast<long>(d)));
}

CycloMatrix gram_matrix(const Orbit& orbit) {
  const size_t n = orbit.projectors.size();
  CycloMatrix g(n, n, orbit.conductor);
  const CycloNum inv_n2 = orbit.norm2.inverse();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      CycloNum v;
      if (i == j) {
        v = CycloNum(1);
      } else if (!orbit.states.empty()) {
        CycloNum c = herm_inner(orbit.states[i], orbit.states[j]) * inv_n2;
        v = c * c.conj();
      } else {
        v = trace_of_product(orbit.projectors[i], orbit.projectors[j]);
      }
      g.set(i, j, v);
      g.set(j, i, v);
    }
  return g;
}

size_t gram_rank(const Orbit& orbit) { return rank(gram_matrix(orbit)); }

CycloMatrix overlap_matrix(const Orbit& orbit) {
  if (orbit.states.empty()) throw InputError("overlap_matrix needs a vector fiducial");
  const size_t n = orbit.states.size();
  CycloMatrix g(n, n, orbit.conductor);
  const CycloNum inv_n2 = orbit.norm2.inverse();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) g.set(i, j, herm_inner(orbit.states[i], orbit.states[j]) * inv_n2);
  return g;
}

std::vector<SpectrumEntry> pair_spectrum(const Orbit& orbit) { return spectrum_of(orbit_pairs(orbit)); }

std::vector<AngleEntry> hermitian_angles(const Orbit& orbit) {
  return angles_of(orbit_pairs(orbit), orbit.conductor, nullptr);
}

std::string AngleEntry::text() const {
  if (squared_angle) return squared_angle->get_str();
  return "(" + norm.get_str() + ")^(1/" + std::to_string(degree) + ")";
}

std::vector<CycloNum> overlap_traces(const Fiducial& f) { return label_data(f).trace; }

size_t group_matrix_rank(const DimFactorization& dims, const std::vector<CycloNum>& t) {
  auto labels = enumerate_group(dims);
  if (labels.size() != t.size()) throw DimensionError("group_matrix_rank: wrong number of values");
  const int L = dims.conductor();
  int M = L;
  for (const auto& x : t) M = static_cast<int>(lcm_ll(M, x.conductor()));
  // t(x) over one denominator as integer power-basis rows at conductor M
  mpz_class den = 1;
  std::vector<CycloNum> tl;
  for (const auto& x : t) {
    tl.push_back(lift(x, M));
    for (const auto& c : tl.back().coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  const int phi = euler_phi(M);
  std::vector<std::vector<mpz_class> > rows;
  for (const auto& x : tl) {
    std::vector<mpz_class> r;
    for (const auto& c : x.coeffs()) r.push_back(c.get_num() * (den / c.get_den()));
    rows.push_back(std::move(r));
  }
  const int step = M / L;
  auto exponent = [&](const PauliOp& w, const PauliOp& x) {
    long long e = 0;
    for (size_t k = 0; k < dims.factors.size(); ++k)
      e += static_cast<long long>(L / dims.factors[k]) *
           (w.labels[k].first * x.labels[k].first + w.labels[k].second * x.labels[k].second);
    return static_cast<int>((e * step) % M);
  };
  // 64-bit accumulation when no sum can overflow
  mpz_class bound = 0;
  for (const auto& row : rows)
    for (const auto& c : row) bound += abs(c);
  const bool small = bound < mpz_class(1) << 62;
  std::vector<long> lcounts(M);
  std::vector<mpz_class> counts(M);
  size_t r = 0;
  for (const auto& w : labels) {
    if (small) {
      std::fill(lcounts.begin(), lcounts.end(), 0);
      for (size_t x = 0; x < labels.size(); ++x) {
        if (tl[x].is_zero()) continue;
        const int e = exponent(w, labels[x]);
        for (int i = 0; i < phi; ++i) lcounts[(i + e) % M] += rows[x][i].get_si();
      }
      r += !CycloNum::from_root_counts(lcounts).is_zero();
    } else {
      for (auto& c : counts) c = 0;
      for (size_t x = 0; x < labels.size(); ++x) {
        if (tl[x].is_zero()) continue;
        const int e = exponent(w, labels[x]);
        for (int i = 0; i < phi; ++i)
          if (rows[x][i] != 0) counts[(i + e) % M] += rows[x][i];
      }
      r += !CycloNum::from_root_counts(counts).is_zero();
    }
  }
  return r;
}

ICCertificate verify(const Fiducial& f) {
  ICCertificate c;
  c.fiducial = f;
  c.conductor = f.conductor();
  const auto& dims = f.dims();
  const size_t d = static_cast<size_t>(dims.dim());
  const size_t n = d * d;

  c.povm_sum_ok = orbit_sum(f) == scale(CycloMatrix::identity(d), CycloNum(static_cast<long>(d)));

  LabelData ld = label_data(f);
  c.gram_rank = group_matrix_rank(dims, ld.trace);

  // Each nonzero label is the difference of n ordered pairs; halved below.
  std::vector<PairValue> pv;
  for (size_t w = 1; w < ld.labels.size(); ++w) {
    PairValue v;
    v.trace = ld.trace[w];
    v.inner = ld.inner[w];
    v.count = n;
    pv.push_back(std::move(v));
  }
  c.trace_spectrum = spectrum_of(pv);
  c.angle_spectrum = angles_of(pv, c.conductor, &c.angle_variants_agree);
  for (auto& e : c.trace_spectrum) e.multiplicity /= 2;
  for (auto& a : c.angle_spectrum) a.multiplicity /= 2;

  c.is_ic = c.povm_sum_ok && c.gram_rank == n;
  const CycloNum sic_value(Rational(1, static_cast<unsigned long>(d + 1)));
  c.is_sic = c.is_ic && ld.trace[0].is_one() && c.trace_spectrum.size() == 1 &&
             c.trace_spectrum[0].value == sic_value;
  return c;
}

}  // namespace modpovm
