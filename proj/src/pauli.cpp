#include "modpovm/pauli.hpp"

#include <numeric>
#include <sstream>

#include "modpovm/errors.hpp"

namespace modpovm {

DimFactorization::DimFactorization(std::vector<int> f) : factors(std::move(f)) {
  if (factors.empty()) throw InputError("factorization needs at least one factor");
  for (int x : factors)
    if (x < 2) throw InputError("factors must be at least 2");
}

DimFactorization DimFactorization::parse(std::string_view text) {
  std::vector<int> f;
  std::string s(text);
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, 'x')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad dimension factorization '" + s + "'");
    f.push_back(std::stoi(tok));
  }
  return DimFactorization(std::move(f));
}

int DimFactorization::dim() const {
  int d = 1;
  for (int x : factors) d *= x;
  return d;
}

int DimFactorization::conductor() const {
  int m = 1;
  for (int x : factors) m = std::lcm(m, x);
  return m;
}

std::string DimFactorization::to_string() const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + std::to_string(factors[i]);
  return s;
}

bool PauliOp::is_identity() const {
  for (auto [a, b] : labels)
    if (a || b) return false;
  return true;
}

namespace {

std::string superscript(int k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  if (k == 1) return "";
  std::string s;
  for (char c : std::to_string(k)) s += digits[c - '0'];
  return s;
}

void check_labels(const DimFactorization& fact, const PauliOp& op) {
  if (op.labels.size() != fact.factors.size())
    throw DimensionError("Pauli label count does not match the factorization");
  for (size_t i = 0; i < op.labels.size(); ++i) {
    int f = fact.factors[i];
    auto [a, b] = op.labels[i];
    if (a < 0 || a >= f || b < 0 || b >= f) throw DimensionError("Pauli label out of range");
  }
}

// Digits of a basis index, first factor most significant.
std::vector<int> digits_of(const DimFactorization& fact, int j) {
  std::vector<int> d(fact.factors.size());
  for (size_t k = fact.factors.size(); k-- > 0;) {
    d[k] = j % fact.factors[k];
    j /= fact.factors[k];
  }
  return d;
}

int index_of(const DimFactorization& fact, const std::vector<int>& d) {
  int j = 0;
  for (size_t k = 0; k < d.size(); ++k) j = j * fact.factors[k] + d[k];
  return j;
}

}  // namespace

std::string PauliOp::to_string() const {
  std::string out;
  for (size_t i = 0; i < labels.size(); ++i) {
    auto [a, b] = labels[i];
    if (i) out += "⊗";
    if (!a && !b) {
      out += "I";
      continue;
    }
    if (a) out += "X" + superscript(a);
    if (b) out += "Z" + superscript(b);
  }
  return out;
}

MonomialAction monomial(const DimFactorization& fact, const PauliOp& op) {
  check_labels(fact, op);
  const int L = fact.conductor();
  const int d = fact.dim();
  MonomialAction m;
  m.target.resize(d);
  m.phase.resize(d);
  for (int j = 0; j < d; ++j) {
    auto dj = digits_of(fact, j);
    long long phase = 0;
    for (size_t k = 0; k < dj.size(); ++k) {
      int f = fact.factors[k];
      auto [a, b] = op.labels[k];
      phase += static_cast<long long>(b) * dj[k] * (L / f);
      dj[k] = (dj[k] + a) % f;
    }
    m.target[j] = index_of(fact, dj);
    m.phase[j] = phase % L;
  }
  return m;
}

CycloMatrix conjugate_by(const DimFactorization& fact, const PauliOp& op, const CycloMatrix& m0) {
  const size_t d = fact.dim();
  if (m0.rows() != d || m0.cols() != d) throw DimensionError("conjugate_by: shape mismatch");
  CycloMatrix m = m0;
  m.lift_to(static_cast<int>(lcm_ll(m.conductor(), fact.conductor())));
  const int scale = m.conductor() / fact.conductor();
  auto act = monomial(fact, op);
  CycloMatrix out(d, d, m.conductor());
  for (size_t j = 0; j < d; ++j)
    for (size_t k = 0; k < d; ++k) {
      if (m(j, k).is_zero()) continue;
      out.at(act.target[j], act.target[k]) = m(j, k).times_root((act.phase[j] - act.phase[k]) * scale);
    }
  return out;
}

CycloMatrix displacement(const DimFactorization& fact, const PauliOp& op) {
  check_labels(fact, op);
  const int L = fact.conductor();
  const int d = fact.dim();
  CycloMatrix m(d, d, L);
  // (X^a Z^b)|j> = w^(b j)|j+a>
  for (int j = 0; j < d; ++j) {
    auto dj = digits_of(fact, j);
    long long phase = 0;
    std::vector<int> di(dj.size());
    for (size_t k = 0; k < dj.size(); ++k) {
      int f = fact.factors[k];
      auto [a, b] = op.labels[k];
      phase += static_cast<long long>(b) * dj[k] * (L / f);
      di[k] = (dj[k] + a) % f;
    }
    m.at(index_of(fact, di), j) = CycloNum::root(L, phase);
  }
  return m;
}

std::vector<PauliOp> enumerate_group(const DimFactorization& fact) {
  std::vector<PauliOp> out = {PauliOp{}};
  for (int f : fact.factors) {
    std::vector<PauliOp> next;
    for (const auto& prefix : out)
      for (int a = 0; a < f; ++a)
        for (int b = 0; b < f; ++b) {
          PauliOp p = prefix;
          p.labels.emplace_back(a, b);
          next.push_back(std::move(p));
        }
    out.swap(next);
  }
  return out;
}

CycloVector apply(const PauliOp& op, const DimFactorization& fact, const CycloVector& v) {
  check_labels(fact, op);
  const int d = fact.dim();
  if (static_cast<int>(v.size()) != d) throw DimensionError("apply: vector length mismatch");
  const int L = fact.conductor();
  CycloVector in = v;
  int m = unify_conductor(in, L);
  CycloVector out(d, CycloNum(Rational(0), m));
  const int scale = m / L;
  for (int j = 0; j < d; ++j) {
    if (in[j].is_zero()) continue;
    auto dj = digits_of(fact, j);
    long long phase = 0;
    for (size_t k = 0; k < dj.size(); ++k) {
      int f = fact.factors[k];
      auto [a, b] = op.labels[k];
      phase += static_cast<long long>(b) * dj[k] * (L / f);
      dj[k] = (dj[k] + a) % f;
    }
    out[index_of(fact, dj)] = in[j].times_root(phase * scale);
  }
  return out;
}

PhasedPauli multiply(const DimFactorization& fact, const std::vector<PauliOp>& ops) {
  const int L = fact.conductor();
  PhasedPauli acc;
  acc.op.labels.assign(fact.factors.size(), {0, 0});
  for (const auto& op : ops) {
    check_labels(fact, op);
    for (size_t k = 0; k < fact.factors.size(); ++k) {
      int f = fact.factors[k];
      auto& [A, B] = acc.op.labels[k];
      auto [a, b] = op.labels[k];
      // X^A Z^B X^a Z^b = w^(B a) X^(A+a) Z^(B+b)
      acc.phase += static_cast<long long>(B) * a * (L / f);
      A = (A + a) % f;
      B = (B + b) % f;
    }
    acc.phase %= L;
  }
  return acc;
}

PauliOp pauli_inverse_label(const DimFactorization& fact, const PauliOp& op) {
  PauliOp r = op;
  for (size_t k = 0; k < r.labels.size(); ++k) {
    int f = fact.factors[k];
    r.labels[k] = {(f - r.labels[k].first) % f, (f - r.labels[k].second) % f};
  }
  return r;
}

PauliOp label_difference(const DimFactorization& fact, const PauliOp& u, const PauliOp& v) {
  PauliOp r = v;
  for (size_t k = 0; k < r.labels.size(); ++k) {
    int f = fact.factors[k];
    r.labels[k] = {(v.labels[k].first - u.labels[k].first + f) % f,
                   (v.labels[k].second - u.labels[k].second + f) % f};
  }
  return r;
}

size_t label_index(const DimFactorization& fact, const PauliOp& op) {
  size_t idx = 0;
  for (size_t k = 0; k < op.labels.size(); ++k) {
    size_t f = fact.factors[k];
    idx = (idx * f + op.labels[k].first) * f + op.labels[k].second;
  }
  return idx;
}

}  // namespace modpovm
