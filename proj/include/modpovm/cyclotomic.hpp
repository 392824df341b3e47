#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modpovm {

using Rational = mpq_class;

int euler_phi(int n);
long long lcm_ll(long long a, long long b);

// Element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1), reduced
// modulo the n-th cyclotomic polynomial. Stored as integer numerators over a
// single positive denominator, kept in lowest terms so that equality is
// plain field-by-field comparison.
class CycloNum {
 public:
  CycloNum();
  CycloNum(long v);  // NOLINT(google-explicit-constructor)
  explicit CycloNum(const Rational& r, int conductor = 1);

  static CycloNum root(int n, long long k);
  static CycloNum from_coeffs(int n, const std::vector<Rational>& coeffs);
  static CycloNum parse(std::string_view text);
  // sum_k counts[k] zeta_n^k, n = counts.size()
  static CycloNum from_root_counts(const std::vector<long>& counts);
  static CycloNum from_root_counts(const std::vector<mpz_class>& counts, const mpz_class& den = 1);

  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(num_.size()); }
  Rational coeff(int i) const;
  std::vector<Rational> coeffs() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  Rational rational_value() const;
  // k/m in [0,1) when this equals exp(2 pi i k/m), otherwise nothing.
  std::optional<Rational> root_angle() const;

  CycloNum lifted(int m) const;
  CycloNum galois(long long k) const;
  CycloNum conj() const;
  CycloNum inverse() const;
  CycloNum times_root(long long k) const;  // x * zeta_n^k
  CycloNum reduced() const;

  // Product of all Galois conjugates over Q(zeta_n), n = conductor().
  Rational field_norm() const;
  // Same, after lifting to conductor m (a multiple of conductor()).
  Rational field_norm(int m) const;

  std::complex<double> embed() const;
  std::string to_string() const;
  // Key for hashing/ordering: the text form of reduced().
  std::string canonical_key() const { return reduced().to_string(); }

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

 private:
  CycloNum(int n, std::vector<mpz_class> num, mpz_class den);
  void normalize();
  static void align(CycloNum& a, CycloNum& b);

  int n_ = 1;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

using CycloVector = std::vector<CycloNum>;

// Lift every entry to the LCM conductor of the collection; returns it.
int common_conductor(const CycloVector& v);
int unify_conductor(CycloVector& v, int at_least = 1);

// Sum of terms [±][q][*]root, root one of "wN", "wN^k", "ωN" (subscript
// digits), "i" or nothing; e.g. "w6-1", "-ω₃", "1/2*w12^5". Also accepts
// the "n:[...]" literal form.
CycloNum parse_cyclo_expr(std::string_view text);
// Comma-separated entries, optionally wrapped in () or [].
CycloVector parse_cyclo_list(std::string_view text);

}  // namespace modpovm
