#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace modpovm {

// Permutation of {0..n-1} stored as its image list. Printed 1-based in
// cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(size_t n);  // identity
  explicit Permutation(std::vector<uint32_t> images);

  static Permutation from_cycles(size_t n, std::string_view text);

  size_t size() const { return img_.size(); }
  uint32_t operator[](size_t i) const { return img_[i]; }
  const std::vector<uint32_t>& images() const { return img_; }

  // (a.then(b))(x) = b(a(x)).
  Permutation then(const Permutation& b) const;
  Permutation inverse() const;
  Permutation power(long long k) const;
  bool is_identity() const;
  size_t order() const;
  size_t fixed_points() const;
  std::vector<std::vector<uint32_t> > cycles() const;
  std::vector<size_t> cycle_type() const;  // sorted lengths
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.img_ != b.img_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<uint32_t> img_;
};

// Function composition f o g: apply g first.
inline Permutation compose(const Permutation& f, const Permutation& g) { return g.then(f); }

// Order of the group generated by the given permutations (Schreier-Sims).
// Throws ResourceError when the order exceeds `bound` (0 = unbounded).
unsigned long long group_order(const std::vector<Permutation>& gens,
                               unsigned long long bound = 0);

}  // namespace modpovm
