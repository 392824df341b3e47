#include "modpovm/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "modpovm/errors.hpp"

namespace modpovm {

int euler_phi(int n) {
  if (n < 1) throw InputError("euler_phi: n must be positive");
  int r = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

namespace {

using Poly = std::vector<long long>;  // low degree first

struct FieldContext {
  int n = 1;
  int phi = 1;
  Poly cyclo;                          // monic, degree phi
  std::vector<std::vector<long> > pw;  // zeta^k reduced, k in [0, n)
  std::vector<int> units;
};

Poly poly_divide_exact(Poly num, const Poly& den) {
  // den monic
  int dn = static_cast<int>(den.size()) - 1;
  int nn = static_cast<int>(num.size()) - 1;
  Poly q(nn - dn + 1, 0);
  for (int i = nn; i >= dn; --i) {
    long long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

Poly cyclotomic_poly(int n, std::map<int, Poly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, cyclotomic_poly(d, memo));
  memo[n] = p;
  return p;
}

std::unique_ptr<FieldContext> build_context(int n) {
  static std::map<int, Poly> memo;  // guarded by the context mutex
  auto ctx = std::make_unique<FieldContext>();
  ctx->n = n;
  ctx->phi = euler_phi(n);
  ctx->cyclo = cyclotomic_poly(n, memo);
  const int phi = ctx->phi;
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  ctx->pw.reserve(n);
  for (int k = 0; k < n; ++k) {
    ctx->pw.push_back(cur);
    long top = cur[phi - 1];
    std::vector<long> nxt(phi, 0);
    for (int i = phi - 1; i > 0; --i) nxt[i] = cur[i - 1];
    if (top != 0)
      for (int i = 0; i < phi; ++i) nxt[i] -= top * ctx->cyclo[i];
    cur.swap(nxt);
  }
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ctx->units.push_back(k % n == 0 ? 0 : k);
  if (n == 1) ctx->units = {0};
  return ctx;
}

const FieldContext& context(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldContext> > cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto& slot = cache[n];
  slot = build_context(n);
  return *slot;
}

long long pos_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

void add_scaled(std::vector<mpz_class>& acc, const mpz_class& c,
                const std::vector<long>& row) {
  for (size_t t = 0; t < row.size(); ++t) {
    long r = row[t];
    if (r > 0)
      mpz_addmul_ui(acc[t].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(r));
    else if (r < 0)
      mpz_submul_ui(acc[t].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-r));
  }
}

}  // namespace

CycloNum::CycloNum() : n_(1), num_(1, mpz_class(0)), den_(1) {}

CycloNum::CycloNum(long v) : n_(1), num_(1, mpz_class(v)), den_(1) {}

CycloNum::CycloNum(const Rational& r, int conductor)
    : n_(1), num_(1, r.get_num()), den_(r.get_den()) {
  if (conductor != 1) *this = lifted(conductor);
}

CycloNum::CycloNum(int n, std::vector<mpz_class> num, mpz_class den)
    : n_(n), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void CycloNum::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

CycloNum CycloNum::root(int n, long long k) {
  if (n < 1) throw InputError("root: conductor must be positive");
  const auto& ctx = context(n);
  const auto& row = ctx.pw[pos_mod(k, n)];
  std::vector<mpz_class> num(row.begin(), row.end());
  return CycloNum(n, std::move(num), 1);
}

CycloNum CycloNum::from_coeffs(int n, const std::vector<Rational>& coeffs) {
  if (n < 1) throw InputError("from_coeffs: conductor must be positive");
  if (static_cast<int>(coeffs.size()) != euler_phi(n))
    throw InputError("from_coeffs: expected " + std::to_string(euler_phi(n)) +
                     " coefficients for conductor " + std::to_string(n));
  mpz_class den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> num;
  num.reserve(coeffs.size());
  for (const auto& c : coeffs) num.push_back(c.get_num() * (den / c.get_den()));
  return CycloNum(n, std::move(num), den);
}

CycloNum CycloNum::from_root_counts(const std::vector<long>& counts) {
  const int n = static_cast<int>(counts.size());
  if (n < 1) throw InputError("from_root_counts: empty count vector");
  const auto& ctx = context(n);
  std::vector<long> acc(ctx.phi, 0);
  for (int k = 0; k < n; ++k) {
    if (counts[k] == 0) continue;
    const auto& row = ctx.pw[k];
    for (int t = 0; t < ctx.phi; ++t) acc[t] += counts[k] * row[t];
  }
  return CycloNum(n, std::vector<mpz_class>(acc.begin(), acc.end()), 1);
}

CycloNum CycloNum::from_root_counts(const std::vector<mpz_class>& counts, const mpz_class& den) {
  const int n = static_cast<int>(counts.size());
  if (n < 1) throw InputError("from_root_counts: empty count vector");
  const auto& ctx = context(n);
  std::vector<mpz_class> acc(ctx.phi, mpz_class(0));
  for (int k = 0; k < n; ++k)
    if (counts[k] != 0) add_scaled(acc, counts[k], ctx.pw[k]);
  return CycloNum(n, std::move(acc), den);
}

std::optional<Rational> CycloNum::root_angle() const {
  if (den_ != 1 || is_zero()) return std::nullopt;
  const auto& ctx = context(n_);
  for (int k = 0; k < n_; ++k) {
    const auto& row = ctx.pw[k];
    bool plus = true, minus = true;
    for (int t = 0; t < ctx.phi && (plus || minus); ++t) {
      plus &= num_[t] == row[t];
      minus &= num_[t] == -row[t];
    }
    if (plus) {
      Rational a(k, n_);
      a.canonicalize();
      return a;
    }
    if (minus) {
      Rational a(2 * k + n_, 2 * n_);
      a.canonicalize();
      if (a >= 1) a -= 1;
      return a;
    }
  }
  return std::nullopt;
}

Rational CycloNum::coeff(int i) const {
  Rational r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> CycloNum::coeffs() const {
  std::vector<Rational> out;
  for (int i = 0; i < degree(); ++i) out.push_back(coeff(i));
  return out;
}

bool CycloNum::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_one() const {
  if (den_ != 1 || num_[0] != 1) return false;
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational CycloNum::rational_value() const {
  if (!is_rational()) throw ArithmeticError("value is not rational: " + to_string());
  return coeff(0);
}

CycloNum CycloNum::lifted(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0)
    throw ArithmeticError("cannot lift conductor " + std::to_string(n_) + " to " +
                          std::to_string(m));
  const auto& ctx = context(m);
  const int step = m / n_;
  std::vector<mpz_class> acc(ctx.phi, mpz_class(0));
  for (size_t j = 0; j < num_.size(); ++j)
    if (num_[j] != 0) add_scaled(acc, num_[j], ctx.pw[(j * step) % m]);
  return CycloNum(m, std::move(acc), den_);
}

CycloNum CycloNum::galois(long long k) const {
  long long kk = pos_mod(k, n_);
  if (std::gcd(kk, static_cast<long long>(n_)) != 1 && n_ != 1)
    throw ArithmeticError("galois: k not coprime to conductor");
  if (kk == 1 || n_ <= 2) return *this;
  const auto& ctx = context(n_);
  std::vector<mpz_class> acc(ctx.phi, mpz_class(0));
  for (size_t j = 0; j < num_.size(); ++j)
    if (num_[j] != 0) add_scaled(acc, num_[j], ctx.pw[(j * kk) % n_]);
  return CycloNum(n_, std::move(acc), den_);
}

CycloNum CycloNum::conj() const { return galois(-1); }

CycloNum CycloNum::times_root(long long k) const {
  long long kk = pos_mod(k, n_);
  if (kk == 0) return *this;
  const auto& ctx = context(n_);
  std::vector<mpz_class> acc(ctx.phi, mpz_class(0));
  for (size_t j = 0; j < num_.size(); ++j)
    if (num_[j] != 0) add_scaled(acc, num_[j], ctx.pw[(j + kk) % n_]);
  return CycloNum(n_, std::move(acc), den_);
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (is_rational()) return CycloNum(Rational(1) / coeff(0), n_);
  const auto& ctx = context(n_);
  CycloNum others(Rational(1), n_);
  for (int u : ctx.units)
    if (u != 1) others *= galois(u);
  Rational norm = (*this * others).rational_value();
  return others * CycloNum(Rational(1) / norm, n_);
}

Rational CycloNum::field_norm() const {
  if (is_zero()) return Rational(0);
  const auto& ctx = context(n_);
  CycloNum prod(Rational(1), n_);
  for (int u : ctx.units) prod *= galois(u);
  return prod.rational_value();
}

Rational CycloNum::field_norm(int m) const { return lifted(m).field_norm(); }

namespace {

// Solve A y = b exactly; A is rows x cols with full column rank. Returns
// false if inconsistent.
bool solve_exact(std::vector<std::vector<Rational> > a, std::vector<Rational> b,
                 std::vector<Rational>& y) {
  const size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  size_t r = 0;
  std::vector<size_t> pivcol;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) return false;
  y.assign(cols, Rational(0));
  for (size_t i = 0; i < r; ++i) y[pivcol[i]] = b[i];
  return true;
}

}  // namespace

CycloNum CycloNum::reduced() const {
  if (is_rational()) return CycloNum(coeff(0));
  const auto& ctx = context(n_);
  for (int m = 2; m < n_; ++m) {
    if (n_ % m != 0 || m % 4 == 2) continue;
    bool fixed = true;
    for (int u : ctx.units) {
      if (u % m != 1 || u == 1) continue;
      if (galois(u) != *this) {
        fixed = false;
        break;
      }
    }
    if (!fixed) continue;
    const int pm = euler_phi(m), step = n_ / m;
    std::vector<std::vector<Rational> > a(ctx.phi, std::vector<Rational>(pm));
    for (int i = 0; i < pm; ++i) {
      const auto& row = ctx.pw[(i * step) % n_];
      for (int t = 0; t < ctx.phi; ++t) a[t][i] = row[t];
    }
    std::vector<Rational> y;
    if (!solve_exact(a, coeffs(), y)) throw ArithmeticError("reduce_conductor: inconsistent subfield");
    return from_coeffs(m, y);
  }
  return *this;
}

std::complex<double> CycloNum::embed() const {
  std::complex<double> acc = 0;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    double c = mpq_class(num_[j], den_).get_d();
    acc += c * std::polar(1.0, two_pi * static_cast<double>(j) / n_);
  }
  return acc;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  os << n_ << ":[";
  for (int i = 0; i < degree(); ++i) {
    if (i) os << ',';
    os << coeff(i).get_str();
  }
  os << ']';
  return os.str();
}

CycloNum CycloNum::parse(std::string_view text) {
  auto colon = text.find(':');
  auto open = text.find('[');
  auto close = text.rfind(']');
  if (colon == std::string_view::npos || open == std::string_view::npos ||
      close == std::string_view::npos || open < colon || close < open)
    throw InputError("malformed cyclotomic literal: " + std::string(text));
  int n = 0;
  try {
    n = std::stoi(std::string(text.substr(0, colon)));
  } catch (const std::exception&) {
    throw InputError("malformed conductor in: " + std::string(text));
  }
  if (n < 1) throw InputError("conductor must be positive: " + std::string(text));
  std::vector<Rational> cs;
  std::string body(text.substr(open + 1, close - open - 1));
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty coefficient in: " + std::string(text));
    Rational q;
    if (q.set_str(tok.substr(b, e - b + 1), 10) != 0 || q.get_den() == 0)
      throw InputError("bad rational '" + tok + "'");
    q.canonicalize();
    cs.push_back(q);
  }
  return from_coeffs(n, cs);
}

void CycloNum::align(CycloNum& a, CycloNum& b) {
  if (a.n_ == b.n_) return;
  int m = static_cast<int>(lcm_ll(a.n_, b.n_));
  a = a.lifted(m);
  b = b.lifted(m);
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (o.n_ != n_) {
    CycloNum b = o;
    align(*this, b);
    return *this += b;
  }
  if (den_ == o.den_) {
    for (size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    mpz_class fa = l / den_, fb = l / o.den_;
    for (size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= fa;
      mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), fb.get_mpz_t());
    }
    den_ = l;
  }
  normalize();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum operator*(const CycloNum& a0, const CycloNum& b0) {
  if (a0.n_ != b0.n_) {
    CycloNum a = a0, b = b0;
    CycloNum::align(a, b);
    return a * b;
  }
  const int n = a0.n_;
  const int phi = a0.degree();
  if (a0.is_zero() || b0.is_zero()) return CycloNum(Rational(0), n);
  std::vector<mpz_class> conv(2 * phi - 1, mpz_class(0));
  for (int i = 0; i < phi; ++i) {
    if (a0.num_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (b0.num_[j] != 0)
        mpz_addmul(conv[i + j].get_mpz_t(), a0.num_[i].get_mpz_t(), b0.num_[j].get_mpz_t());
  }
  std::vector<mpz_class> acc(conv.begin(), conv.begin() + phi);
  if (phi > 1) {
    const auto& ctx = context(n);
    for (int k = phi; k < 2 * phi - 1; ++k)
      if (conv[k] != 0) add_scaled(acc, conv[k], ctx.pw[k % n]);
  }
  return CycloNum(n, std::move(acc), a0.den_ * b0.den_);
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  *this = *this * o;
  return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& o) {
  *this = *this * o.inverse();
  return *this;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.n_ != b.n_) {
    CycloNum x = a, y = b;
    CycloNum::align(x, y);
    return x == y;
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

int common_conductor(const CycloVector& v) {
  long long m = 1;
  for (const auto& x : v) m = lcm_ll(m, x.conductor());
  return static_cast<int>(m);
}

int unify_conductor(CycloVector& v, int at_least) {
  int m = static_cast<int>(lcm_ll(common_conductor(v), at_least));
  for (auto& x : v) x = x.lifted(m);
  return m;
}

namespace {

// ω, subscript and superscript digits, and the minus sign to plain ASCII.
std::string asciify(std::string_view in) {
  static const char* const sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  static const char* const sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  size_t i = 0;
  bool in_sup = false;
  while (i < in.size()) {
    auto starts = [&](std::string_view t) { return in.substr(i, t.size()) == t; };
    bool matched = false;
    for (int d = 0; d < 10 && !matched; ++d) {
      if (starts(sub[d])) {
        out += static_cast<char>('0' + d);
        i += std::string_view(sub[d]).size();
        in_sup = false;
        matched = true;
      } else if (starts(sup[d])) {
        if (!in_sup) out += '^';
        out += static_cast<char>('0' + d);
        i += std::string_view(sup[d]).size();
        in_sup = true;
        matched = true;
      }
    }
    if (matched) continue;
    in_sup = false;
    if (starts("ω")) {
      out += 'w';
      i += std::string_view("ω").size();
    } else if (starts("−")) {
      out += '-';
      i += std::string_view("−").size();
    } else {
      if (!std::isspace(static_cast<unsigned char>(in[i]))) out += in[i];
      ++i;
    }
  }
  return out;
}

}  // namespace

CycloNum parse_cyclo_expr(std::string_view text) {
  if (text.find(':') != std::string_view::npos) return CycloNum::parse(text);
  const std::string s = asciify(text);
  if (s.empty()) throw InputError("empty cyclotomic expression");
  const std::string whole(text);
  size_t i = 0;
  auto digits = [&] {
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw InputError("expected digits in '" + whole + "'");
    std::string d = s.substr(i, j - i);
    i = j;
    return d;
  };
  CycloNum acc;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw InputError("expected '+' or '-' in '" + whole + "'");
    }
    first = false;
    Rational q(sign);
    bool any = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mpz_class num(digits());
      mpz_class den(1);
      if (i < s.size() && s[i] == '/') {
        ++i;
        den = mpz_class(digits());
        if (den == 0) throw InputError("zero denominator in '" + whole + "'");
      }
      q *= Rational(num, den);
      q.canonicalize();
      any = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    CycloNum r(1);
    if (i < s.size() && (s[i] == 'w' || s[i] == 'i')) {
      int n = 4;
      long long k = 1;
      if (s[i] == 'w') {
        ++i;
        n = std::stoi(digits());
        if (n < 1) throw InputError("root order must be positive in '" + whole + "'");
      } else {
        ++i;
      }
      if (i < s.size() && s[i] == '^') {
        ++i;
        int ks = 1;
        if (i < s.size() && s[i] == '-') {
          ks = -1;
          ++i;
        }
        k = ks * std::stoll(digits());
      }
      r = CycloNum::root(n, k);
      any = true;
    }
    if (!any) throw InputError("malformed term in '" + whole + "'");
    acc += CycloNum(q) * r;
  }
  return acc;
}

CycloVector parse_cyclo_list(std::string_view text) {
  std::string_view t = text;
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  t = trim(t);
  if (t.size() >= 2 && ((t.front() == '(' && t.back() == ')') || (t.front() == '[' && t.back() == ']'))) {
    t = t.substr(1, t.size() - 2);
  }
  CycloVector out;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i <= t.size(); ++i) {
    if (i == t.size() || (t[i] == ',' && depth == 0)) {
      auto item = trim(t.substr(start, i - start));
      if (item.empty()) throw InputError("empty entry in list '" + std::string(text) + "'");
      out.push_back(parse_cyclo_expr(item));
      start = i + 1;
    } else if (t[i] == '[' || t[i] == '(') {
      ++depth;
    } else if (t[i] == ']' || t[i] == ')') {
      --depth;
    }
  }
  return out;
}

}  // namespace modpovm
