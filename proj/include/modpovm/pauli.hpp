#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modpovm/linalg.hpp"

namespace modpovm {

struct DimFactorization {
  std::vector<int> factors;

  DimFactorization() = default;
  explicit DimFactorization(std::vector<int> f);
  // "2x2", "6", "3x3"
  static DimFactorization parse(std::string_view text);

  int dim() const;
  // LCM of the factors: the conductor of every displacement phase.
  int conductor() const;
  std::string to_string() const;
  friend bool operator==(const DimFactorization&, const DimFactorization&) = default;
};

// X^a Z^b on each tensor factor, first factor most significant.
struct PauliOp {
  std::vector<std::pair<int, int> > labels;

  bool is_identity() const;
  // "Z⊗XZ²" style
  std::string to_string() const;
  friend bool operator==(const PauliOp&, const PauliOp&) = default;
  friend auto operator<=>(const PauliOp&, const PauliOp&) = default;
};

// Operator times zeta_L^phase, L = fact.conductor().
struct PhasedPauli {
  PauliOp op;
  long long phase = 0;
};

// D|j> = zeta_L^phase[j] |target[j]>, L = fact.conductor().
struct MonomialAction {
  std::vector<int> target;
  std::vector<long long> phase;
};

MonomialAction monomial(const DimFactorization& fact, const PauliOp& op);
// D m D^dagger without forming D.
CycloMatrix conjugate_by(const DimFactorization& fact, const PauliOp& op, const CycloMatrix& m);

CycloMatrix displacement(const DimFactorization& fact, const PauliOp& op);
std::vector<PauliOp> enumerate_group(const DimFactorization& fact);
CycloVector apply(const PauliOp& op, const DimFactorization& fact, const CycloVector& v);

// Exact product of displacement operators in the given order.
PhasedPauli multiply(const DimFactorization& fact, const std::vector<PauliOp>& ops);
PauliOp pauli_inverse_label(const DimFactorization& fact, const PauliOp& op);
// Label of D_u^dagger D_v up to phase, i.e. v - u.
PauliOp label_difference(const DimFactorization& fact, const PauliOp& u, const PauliOp& v);
// Position of a label in enumerate_group order.
size_t label_index(const DimFactorization& fact, const PauliOp& op);

}  // namespace modpovm
