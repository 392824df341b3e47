#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modpovm/linalg.hpp"
#include "modpovm/permutation.hpp"

namespace modpovm {

// A finite-index subgroup of the modular group, as the action of the
// generators e (order 2) and v (order 3) on its right cosets.
struct PermPair {
  Permutation e;
  Permutation v;

  size_t index() const { return e.size(); }
  // Throws InputError unless e^2 = v^3 = 1 and <e,v> is transitive.
  void validate() const;
  // sigma_e o sigma_v
  Permutation translation() const { return compose(e, v); }
  std::string to_string() const;

  friend bool operator==(const PermPair& a, const PermPair& b) { return a.e == b.e && a.v == b.v; }
  friend bool operator<(const PermPair& a, const PermPair& b) {
    return a.e != b.e ? a.e < b.e : a.v < b.v;
  }
};

PermPair parse_perm_pair(size_t mu, std::string_view e_cycles, std::string_view v_cycles);

struct Signature {
  size_t index = 1;
  long genus = 0;
  size_t nu2 = 0;
  size_t nu3 = 0;
  std::vector<size_t> cusp_widths;
  unsigned long long level = 1;
  bool congruence = true;

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Upper limit accepted by enumerate_index.
inline constexpr size_t kMaxEnumerationIndex = 12;

std::vector<PermPair> enumerate_index(size_t mu);
// Every labeled pair the low-index search visits, before deduplication.
std::vector<PermPair> enumerate_tables(size_t mu);
PermPair canonical_form(const PermPair& p);

Signature signature(const PermPair& p);
bool is_congruence(const PermPair& p);

PermPair gamma0(unsigned N);
PermPair gamma_principal(unsigned N);
// Index formula for Gamma(N) inside PSL(2,Z).
unsigned long long gamma_index_psl(unsigned N);
unsigned long long psi(unsigned N);

std::pair<CycloMatrix, CycloMatrix> perm_matrices(const PermPair& p);
CycloMatrix perm_matrix(const Permutation& s);

unsigned long long group_order(const PermPair& p, unsigned long long bound = 0);

// "C(g,N,nu2,nu3,[w...])" or "NC(...)" in the style of subgroup tables.
std::string signature_label(const Signature& s);

// The commutator subgroup, index 6.
PermPair gamma_prime();
// Conventional name of a congruence class ("Γ0(4)", "Γ(2)", "Γ'", "5A⁰"),
// or an empty string when the class has none in the built-in list.
std::string subgroup_name(const PermPair& p);

}  // namespace modpovm
