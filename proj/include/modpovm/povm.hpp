#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modpovm/linalg.hpp"
#include "modpovm/pauli.hpp"

namespace modpovm {

// A fiducial state, given either as an unnormalized vector or as an exact
// rank-one projector (for states whose amplitudes are not cyclotomic).
class Fiducial {
 public:
  static Fiducial from_vector(DimFactorization dims, CycloVector vec);
  static Fiducial from_projector(DimFactorization dims, CycloMatrix proj);

  const DimFactorization& dims() const { return dims_; }
  int dim() const { return dims_.dim(); }
  bool has_vector() const { return !vec_.empty(); }
  const CycloVector& vec() const { return vec_; }
  const CycloNum& norm2() const { return norm2_; }
  // Normalized rank-one projector.
  CycloMatrix projector() const;
  // LCM of entry conductors and the Pauli phase conductor.
  int conductor() const { return conductor_; }

  // "(0,1,-ω₆,ω₆-1)" style where entries have short names.
  std::string pretty() const;

 private:
  DimFactorization dims_;
  CycloVector vec_;
  CycloMatrix proj_;
  CycloNum norm2_{1};
  int conductor_ = 1;
};

// Short name for small cyclotomic entries ("0", "-1", "ω₃", "-i", "ω₆-1").
std::string entry_name(const CycloNum& x);

struct Orbit {
  DimFactorization dims;
  std::vector<PauliOp> ops;
  std::vector<CycloVector> states;      // present for vector fiducials
  CycloNum norm2{1};
  std::vector<CycloMatrix> projectors;  // normalized
  int conductor = 1;
};

Orbit build_orbit(const Fiducial& f);
bool povm_sum_check(const Orbit& orbit);
CycloMatrix gram_matrix(const Orbit& orbit);
// Exact elimination rank of the Gram matrix.
size_t gram_rank(const Orbit& orbit);
// Normalized overlap <psi_i|psi_j>/n (vector orbits only).
CycloMatrix overlap_matrix(const Orbit& orbit);

struct SpectrumEntry {
  CycloNum value;  // reduced conductor
  size_t multiplicity = 0;
};

struct AngleEntry {
  Rational norm;                         // field norm of tr(PiPj)
  int degree = 1;                        // degree of the working field
  std::optional<Rational> squared_angle; // norm^(1/degree) when rational
  double approx = 0;
  size_t multiplicity = 0;
  // Norm of the inner product itself, squared; equals `norm` when the
  // two readings of the angle agree. Absent for projector fiducials.
  std::optional<Rational> inner_norm_squared;
  std::string text() const;
};

std::vector<SpectrumEntry> pair_spectrum(const Orbit& orbit);
std::vector<AngleEntry> hermitian_angles(const Orbit& orbit);

struct ICCertificate {
  Fiducial fiducial;
  int conductor = 1;
  bool povm_sum_ok = false;
  size_t gram_rank = 0;
  bool is_ic = false;
  bool is_sic = false;
  std::vector<SpectrumEntry> trace_spectrum;
  std::vector<AngleEntry> angle_spectrum;
  // Whether the two angle readings agree on every pair.
  bool angle_variants_agree = true;

  size_t pp() const { return angle_spectrum.size(); }
};

// Full certificate. The Gram rank uses the character decomposition of the
// group-invariant Gram matrix; gram_rank(build_orbit(f)) is the elimination
// route and agrees.
ICCertificate verify(const Fiducial& f);

// tr(Pi_0 Pi_u) for every label u in enumerate_group order.
std::vector<CycloNum> overlap_traces(const Fiducial& f);
// Rank of the matrix [t(v-u)] via its characters.
size_t group_matrix_rank(const DimFactorization& dims, const std::vector<CycloNum>& t);

// Exact integer k-th root test for a non-negative rational.
std::optional<Rational> exact_root(const Rational& q, int k);

}  // namespace modpovm
