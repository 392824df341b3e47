#pragma once

#include <string>
#include <vector>

#include "modpovm/modgroup.hpp"
#include "modpovm/povm.hpp"

namespace modpovm {

struct SearchBudget {
  std::vector<CycloNum> entry_set = default_entry_set();
  int max_support = 2;
  size_t group_element_cap = 1000;
  int workers = 1;
  // Keep one certificate per spectrum; off returns every IC candidate.
  bool dedupe = true;

  // {0, ±1, ±ω₃, ±(ω₃+1), ±ω₆, ±(ω₆−1), ±i}
  static std::vector<CycloNum> default_entry_set();
  void validate() const;
};

// Parse "0,1,-1,w3,-w6,i,w6-1" style lists (also accepts conductor-tagged
// "n:[...]" entries separated by ';').
std::vector<CycloNum> parse_entry_set(const std::string& text);

// Joint eigenspace of a set of commuting permutations, basis in reduced row
// echelon form; entries are roots of unity stored as angles in [0,1).
struct RootSpace {
  std::vector<std::vector<std::optional<Rational> > > basis;
  std::string key() const;
  std::vector<CycloVector> vectors() const;
};

// Every nonzero joint eigenspace of the abelian group generated by gens,
// for the action (P x)_i = x_{g(i)}.
std::vector<RootSpace> joint_eigenspaces(const std::vector<Permutation>& gens);

// Non-identity group elements in breadth-first word order from (e, v).
// Stops after cap elements; sets *truncated when more exist.
std::vector<Permutation> group_elements(const PermPair& pair, size_t cap, bool* truncated);
std::vector<Permutation> group_elements(const std::vector<Permutation>& gens, size_t cap, bool* truncated);

struct CandidateList {
  std::vector<CycloVector> vectors;
  bool truncated = false;
  size_t elements_scanned = 0;
  size_t spaces = 0;
};

CandidateList candidate_fiducials(const PermPair& pair, const SearchBudget& budget);
// Same search for any permutation group given by generators.
CandidateList candidate_fiducials(const std::vector<Permutation>& generators, const SearchBudget& budget);

struct SearchResult {
  std::vector<ICCertificate> certificates;
  bool truncated = false;
  size_t candidates = 0;
};

SearchResult search_ic(const PermPair& pair, const DimFactorization& dims, const SearchBudget& budget);
SearchResult search_ic(const std::vector<Permutation>& generators, const DimFactorization& dims,
                       const SearchBudget& budget);
// Verification half of search_ic, for reusing one candidate list under
// several factorizations.
SearchResult certify_candidates(const CandidateList& cands, const DimFactorization& dims,
                                const SearchBudget& budget);

// Key identifying a certificate's trace and angle spectra.
std::string spectrum_key(const ICCertificate& c);

}  // namespace modpovm
