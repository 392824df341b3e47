#include "modpovm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "modpovm/errors.hpp"

namespace modpovm {

Permutation::Permutation(size_t n) : img_(n) { std::iota(img_.begin(), img_.end(), 0u); }

Permutation::Permutation(std::vector<uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t x : img_) {
    if (x >= img_.size() || seen[x]) throw InputError("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(size_t n, std::string_view text) {
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(n, false);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("cycle notation: expected '(' in " + std::string(text));
    ++i;
    std::vector<uint32_t> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw InputError("cycle notation: expected a point in " + std::string(text));
      unsigned long pt = std::stoul(std::string(text.substr(i, j - i)));
      if (pt < 1 || pt > n) throw InputError("cycle notation: point out of range in " + std::string(text));
      if (used[pt - 1]) throw InputError("cycle notation: repeated point in " + std::string(text));
      used[pt - 1] = true;
      cyc.push_back(static_cast<uint32_t>(pt - 1));
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

Permutation Permutation::then(const Permutation& b) const {
  std::vector<uint32_t> r(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r[i] = b.img_[img_[i]];
  Permutation p;
  p.img_ = std::move(r);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<uint32_t> r(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r[img_[i]] = static_cast<uint32_t>(i);
  Permutation p;
  p.img_ = std::move(r);
  return p;
}

Permutation Permutation::power(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Permutation acc(size());
  while (e) {
    if (e & 1) acc = acc.then(base);
    base = base.then(base);
    e >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

size_t Permutation::order() const {
  size_t o = 1;
  for (size_t len : cycle_type()) o = std::lcm(o, len);
  return o;
}

size_t Permutation::fixed_points() const {
  size_t f = 0;
  for (size_t i = 0; i < img_.size(); ++i) f += img_[i] == i;
  return f;
}

std::vector<std::vector<uint32_t> > Permutation::cycles() const {
  std::vector<std::vector<uint32_t> > out;
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<uint32_t> c;
    for (uint32_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<size_t> Permutation::cycle_type() const {
  std::vector<size_t> t;
  for (const auto& c : cycles()) t.push_back(c.size());
  std::sort(t.begin(), t.end());
  return t;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    os << '(';
    for (size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k] + 1;
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

namespace {

struct Level {
  uint32_t base = 0;
  std::vector<int> orbit_pos;  // -1 if not in orbit
  std::vector<uint32_t> orbit;
  std::vector<Permutation> transversal;  // base -> orbit[i]
};

// Deterministic Schreier-Sims: strong generators are kept in one list and
// level i uses those fixing the first i base points.
class StabChain {
 public:
  explicit StabChain(size_t n) : n_(n) {}

  void add_generator(const Permutation& g) {
    if (g.is_identity()) return;
    add_strong(g);
    while (complete_one()) {
    }
  }

  unsigned long long order() const {
    unsigned long long o = 1;
    for (const auto& l : levels_) o *= l.orbit.size();
    return o;
  }

 private:
  bool fixes_prefix(const Permutation& g, size_t i) const {
    for (size_t j = 0; j < i; ++j)
      if (g[levels_[j].base] != levels_[j].base) return false;
    return true;
  }

  void add_strong(const Permutation& g) {
    strong_.push_back(g);
    if (fixes_prefix(g, levels_.size())) {
      Level l;
      uint32_t b = 0;
      while (g[b] == b) ++b;
      l.base = b;
      levels_.push_back(std::move(l));
    }
    for (size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(i);
  }

  void rebuild_orbit(size_t i) {
    Level& l = levels_[i];
    l.orbit_pos.assign(n_, -1);
    l.orbit = {l.base};
    l.transversal = {Permutation(n_)};
    l.orbit_pos[l.base] = 0;
    for (size_t k = 0; k < l.orbit.size(); ++k)
      for (const auto& s : strong_) {
        if (!fixes_prefix(s, i)) continue;
        uint32_t q = s[l.orbit[k]];
        if (l.orbit_pos[q] >= 0) continue;
        l.orbit_pos[q] = static_cast<int>(l.orbit.size());
        l.orbit.push_back(q);
        l.transversal.push_back(l.transversal[k].then(s));
      }
  }

  Permutation sift(Permutation h, size_t from) const {
    for (size_t j = from; j < levels_.size(); ++j) {
      const Level& l = levels_[j];
      uint32_t b = h[l.base];
      if (l.orbit_pos[b] < 0) return h;
      h = h.then(l.transversal[l.orbit_pos[b]].inverse());
    }
    return h;
  }

  // Finds one Schreier generator that does not sift, adds it, returns true.
  bool complete_one() {
    for (size_t i = levels_.size(); i-- > 0;) {
      const Level& l = levels_[i];
      for (size_t k = 0; k < l.orbit.size(); ++k)
        for (const auto& s : strong_) {
          if (!fixes_prefix(s, i)) continue;
          uint32_t q = s[l.orbit[k]];
          Permutation sg = l.transversal[k].then(s).then(l.transversal[l.orbit_pos[q]].inverse());
          if (sg.is_identity()) continue;
          Permutation res = sift(sg, i + 1);
          if (!res.is_identity()) {
            add_strong(res);
            return true;
          }
        }
    }
    return false;
  }

  size_t n_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

}  // namespace

unsigned long long group_order(const std::vector<Permutation>& gens, unsigned long long bound) {
  if (gens.empty()) return 1;
  StabChain chain(gens[0].size());
  for (const auto& g : gens) chain.add_generator(g);
  unsigned long long o = chain.order();
  if (bound && o > bound) throw ResourceError("group order " + std::to_string(o) + " exceeds bound");
  return o;
}

}  // namespace modpovm
