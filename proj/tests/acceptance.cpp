// Acceptance report: one PASS/FAIL line per criterion, then a summary.
// Exits 0 once every criterion has been evaluated; a criterion that throws
// is reported as FAIL and the run continues.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "modpovm/geometry.hpp"
#include "modpovm/modgroup.hpp"
#include "modpovm/search.hpp"
#include "oracles.hpp"

using namespace modpovm;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void check(bool cond, const std::string& what) {
    if (!cond) ok = false;
    notes.push_back(std::string(cond ? "" : "MISMATCH ") + what);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

CycloNum q(long a, long b) { return CycloNum(Rational(a, b)); }
const CycloNum one(1);
const CycloNum w3 = CycloNum::root(3, 1);
const CycloNum w6 = CycloNum::root(6, 1);

std::string str(size_t n) { return std::to_string(n); }

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep = ", ") {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string spectrum_text(const std::vector<SpectrumEntry>& s) {
  std::vector<std::string> parts;
  for (const auto& e : s) parts.push_back(entry_name(e.value) + " x" + str(e.multiplicity));
  return "{" + join(parts) + "}";
}

std::string angles_text(const std::vector<AngleEntry>& s) {
  std::vector<std::string> parts;
  for (const auto& a : s) parts.push_back(a.text() + " x" + str(a.multiplicity));
  return "{" + join(parts) + "}";
}

std::set<std::string> value_keys(const std::vector<SpectrumEntry>& s) {
  std::set<std::string> k;
  for (const auto& e : s) k.insert(e.value.canonical_key());
  return k;
}

std::set<std::string> keys(const std::vector<CycloNum>& xs) {
  std::set<std::string> k;
  for (const auto& x : xs) k.insert(x.canonical_key());
  return k;
}

bool all_angles(const ICCertificate& c, const Rational& v) {
  return !c.angle_spectrum.empty() &&
         std::all_of(c.angle_spectrum.begin(), c.angle_spectrum.end(),
                     [&](const AngleEntry& a) { return a.squared_angle && *a.squared_angle == v; });
}

bool contains(const CandidateList& c, const CycloVector& v) {
  return std::find(c.vectors.begin(), c.vectors.end(), v) != c.vectors.end();
}

Fiducial vec(std::vector<int> dims, CycloVector v) { return Fiducial::from_vector(DimFactorization(dims), v); }

// (I + (aX + bY + cZ))/2 for real cyclotomic a, b, c.
Fiducial qubit_projector(const CycloNum& a, const CycloNum& b, const CycloNum& c) {
  const CycloNum i = CycloNum::root(4, 1), half = q(1, 2);
  CycloMatrix m(2, 2);
  m.set(0, 0, half * (one + c));
  m.set(1, 1, half * (one - c));
  m.set(0, 1, half * (a - i * b));
  m.set(1, 0, half * (a + i * b));
  return Fiducial::from_projector(DimFactorization({2}), m);
}

// Every fiducial certified by criteria 1-7, for the property suite.
std::vector<std::pair<std::string, Fiducial> > g_certified;

void keep(const std::string& name, const Fiducial& f) { g_certified.emplace_back(name, f); }

Outcome criterion1() {
  Outcome out;
  const CycloNum s3 = CycloNum::root(12, 1) + CycloNum::root(12, 11);
  const CycloNum s2 = CycloNum::root(8, 1) + CycloNum::root(8, 7);
  const CycloNum b3 = s3.inverse(), b2 = s2.inverse();
  Fiducial t = qubit_projector(b3, b3, b3);
  Fiducial h = qubit_projector(b2, CycloNum(0), b2);
  keep("qubit T", t);
  keep("qubit H", h);

  ICCertificate ct = verify(t);
  Orbit ot = build_orbit(t);
  out.check(povm_sum_check(ot), "T orbit sums to 2I");
  out.check(ct.trace_spectrum.size() == 1 && ct.trace_spectrum[0].value == q(1, 3),
            "T pair traces " + spectrum_text(ct.trace_spectrum));
  out.check(ct.gram_rank == 4 && gram_rank(ot) == 4, "T Gram rank " + str(ct.gram_rank));

  Orbit oh = build_orbit(h);
  const bool h_sum = povm_sum_check(oh);
  out.check(!h_sum, std::string("H orbit povm_sum_check ") + (h_sum ? "passes (sums to 2I)" : "fails"));
  out.note("H Gram rank " + str(gram_rank(oh)));
  return out;
}

Outcome criterion2() {
  Outcome out;
  const CycloVector v = {0, 1, -1};
  CandidateList cands = candidate_fiducials(gamma0(2), SearchBudget{});
  out.check(contains(cands, v), "(0,1,-1) among " + str(cands.vectors.size()) + " Γ0(2) candidates");

  Fiducial f = Fiducial::from_vector(DimFactorization({3}), v);
  keep("Hesse", f);
  ICCertificate c = verify(f);
  Orbit o = build_orbit(f);
  out.check(c.is_sic, "is_sic");
  out.check(c.trace_spectrum.size() == 1 && c.trace_spectrum[0].value == q(1, 4),
            "pair traces " + spectrum_text(c.trace_spectrum));
  out.check(c.gram_rank == 9 && gram_rank(o) == 9, "Gram rank " + str(c.gram_rank));

  IncidenceStructure s = tuple_lines(o, 3, {q(1, 8), q(-1, 8)}, false);
  const auto pb = s.point_blocks();
  const bool four = std::all_of(pb.begin(), pb.end(), [](const auto& b) { return b.size() == 4; });
  GeometryLabel l = recognize(s);
  out.check(s.points.size() == 9 && s.blocks.size() == 12 && four,
            str(s.points.size()) + " points, " + str(s.blocks.size()) + " lines, 4 lines per point: " +
                (four ? "yes" : "no"));
  out.check(l.kind == GeometryKind::HESSE && l.copies == 1, "label " + l.text());
  return out;
}

Outcome criterion3() {
  Outcome out;
  Fiducial f = vec({2, 2}, {0, 1, -w6, w6 - one});
  keep("two-qubit", f);
  ICCertificate c = verify(f);
  out.check(c.gram_rank == 16, "Gram rank " + str(c.gram_rank));
  out.check(c.povm_sum_ok, "orbit sums to 4I");
  out.check(value_keys(c.trace_spectrum) == keys({q(1, 3), q(1, 9)}),
            "trace spectrum " + spectrum_text(c.trace_spectrum));

  IncidenceStructure s = tuple_lines(build_orbit(f), 3, {q(1, 9), q(1, 27), q(-1, 27)}, true);
  std::vector<std::vector<size_t> > blocks;
  for (const auto& b : s.blocks) blocks.push_back(b.pts);
  GeometryLabel l = recognize(s);
  out.check(s.points.size() == 15 && s.blocks.size() == 15,
            str(s.points.size()) + " points / " + str(s.blocks.size()) + " lines");
  out.check(gq22_axioms(s.points.size(), blocks), "quadrangle axioms");
  out.check(l.kind == GeometryKind::GQ22, "label " + l.text());

  auto m = mermin_square(s);
  out.check(m.has_value(), "Mermin square extracted");
  if (m) {
    bool rows = true, cols = true;
    for (size_t b = 0; b < 3; ++b) {
      rows = rows && m->grid.blocks[b].trace == q(-1, 27);
      cols = cols && m->grid.blocks[3 + b].trace == q(1, 27);
    }
    out.check(rows, "row traces -1/27");
    out.check(cols, "column traces +1/27");
    out.check(m->minus_lines() % 2 == 1, "-I lines: " + std::to_string(m->minus_lines()));
    out.check(ks_noncolorable(line_contexts(*m)), "contexts KS non-colorable");
  }
  return out;
}

Outcome criterion4() {
  Outcome out;
  Fiducial f = vec({5}, {0, 1, -1, -1, 1});
  keep("d=5 (0,1,-1,-1,1)", f);
  ICCertificate c = verify(f);
  // sqrt5 = 1 + 2(z5 + z5^4)
  const CycloNum s5 = one + CycloNum(2) * (CycloNum::root(5, 1) + CycloNum::root(5, 4));
  out.check(s5 * s5 == CycloNum(5), "sqrt5 squares to 5");
  const CycloNum lo = (CycloNum(7) - CycloNum(3) * s5) * q(1, 32);
  const CycloNum hi = (CycloNum(7) + CycloNum(3) * s5) * q(1, 32);
  out.check(value_keys(c.trace_spectrum) == keys({q(1, 16), lo, hi}),
            "trace spectrum " + spectrum_text(c.trace_spectrum));
  out.check(all_angles(c, Rational(1, 16)), "squared angles " + angles_text(c.angle_spectrum));

  IncidenceStructure s = tuple_lines(build_orbit(f), 3, {q(-1, 64)}, false);
  const auto pb = s.point_blocks();
  const bool twelve = std::all_of(pb.begin(), pb.end(), [](const auto& b) { return b.size() == 12; });
  const bool three = std::all_of(s.blocks.begin(), s.blocks.end(), [](const Block& b) { return b.pts.size() == 3; });
  out.check(s.points.size() == 25 && s.blocks.size() == 100 && twelve && three,
            "(" + str(s.points.size()) + "_12, " + str(s.blocks.size()) + "_3) configuration");

  const Graph g1 = intersection_graph(s, 1);
  std::vector<int> petersen_at;
  for (int shared = 1; shared <= 2; ++shared) {
    Graph g = intersection_graph(s, shared);
    auto comps = g.components();
    size_t own = 0, one_point = 0;
    for (const auto& cp : comps) {
      own += is_petersen(g.induced(cp));
      one_point += is_petersen(g1.induced(cp));
    }
    out.note("shared=" + std::to_string(shared) + ": " + str(comps.size()) + " components, " + str(own) +
             " Petersen, " + str(one_point) + " with Petersen one-point graph");
    if (comps.size() == 10 && (own == 10 || one_point == 10)) petersen_at.push_back(shared);
  }
  out.check(!petersen_at.empty(), "10 Petersen components at shared=" + join(petersen_at));
  GeometryLabel l = recognize(s);
  out.check(l.kind == GeometryKind::PETERSEN_DECOMP && l.copies == 10, "label " + l.text());

  Fiducial g = vec({5}, {0, 1, 1, 1, 1});
  keep("d=5 (0,1,1,1,1)", g);
  ICCertificate cg = verify(g);
  std::set<Rational> angles;
  for (const auto& a : cg.angle_spectrum)
    if (a.squared_angle) angles.insert(*a.squared_angle);
  out.check(cg.angle_spectrum.size() == 2 && angles == std::set<Rational>{Rational(1, 16), Rational(9, 16)},
            "(0,1,1,1,1) squared angles " + angles_text(cg.angle_spectrum));
  out.note("(0,1,1,1,1) trace spectrum has " + str(cg.trace_spectrum.size()) + " values");
  return out;
}

// Same entries as ref up to a common root-of-unity factor.
bool same_type(const CycloVector& v, const CycloVector& ref) {
  std::multiset<std::string> got;
  for (const auto& y : v) got.insert(y.canonical_key());
  for (const auto& x : ref) {
    if (x.is_zero()) continue;
    const CycloNum inv = x.inverse();
    std::multiset<std::string> target;
    for (const auto& y : ref) target.insert((y * inv).canonical_key());
    if (got == target) return true;
  }
  return false;
}

Outcome criterion5() {
  Outcome out;
  const CycloVector ref = {0, 1, w6 - one, 0, -w6, 0};
  SearchBudget budget;
  budget.dedupe = false;
  auto classes = enumerate_index(6);
  std::vector<std::string> hits;
  for (size_t i = 0; i < classes.size(); ++i) {
    SearchResult r = search_ic(classes[i], DimFactorization({6}), budget);
    const bool hit = std::any_of(r.certificates.begin(), r.certificates.end(), [&](const ICCertificate& c) {
      return c.is_ic && c.fiducial.has_vector() && same_type(c.fiducial.vec(), ref) &&
             value_keys(c.trace_spectrum) == keys({q(1, 3), q(1, 9)});
    });
    if (hit) {
      std::string n = subgroup_name(classes[i]);
      hits.push_back("#" + str(i + 1) + " " + (n.empty() ? signature_label(signature(classes[i])) : n));
    }
  }
  out.check(hits.size() == 5, str(hits.size()) + " of " + str(classes.size()) + " classes: " + join(hits));

  Fiducial f = vec({6}, ref);
  keep("d=6", f);
  IncidenceStructure s = tuple_lines(build_orbit(f), 4, {q(1, 9)}, true);
  auto comps = s.components();
  out.check(comps.size() == 2, str(comps.size()) + " components");
  using Label = std::pair<int, int>;  // (a, b) for X^a Z^b
  const std::map<int, std::set<Label> > expected = {
      {-1, {{0, 0}, {3, 1}, {0, 2}, {3, 3}, {0, 4}, {3, 5}}},
      {+1, {{4, 0}, {0, 1}, {3, 2}, {0, 3}, {3, 4}, {0, 5}}},
  };
  for (const auto& cp : comps) {
    IncidenceStructure sub = s.restrict_to(cp);
    std::set<Label> pts;
    std::vector<std::string> names;
    for (const auto& p : sub.points) {
      pts.insert(p.labels[0]);
      names.push_back(p.to_string());
    }
    std::set<int> signs;
    for (const auto& b : sub.blocks) signs.insert(b.sign);
    const int sign = signs.size() == 1 ? *signs.begin() : 0;
    const bool match = expected.count(sign) && expected.at(sign) == pts;
    out.check(sub.points.size() == 6 && match, std::string(sign < 0 ? "-I" : sign > 0 ? "+I" : "mixed") +
                                                   " component {" + join(names) + "}");
  }
  return out;
}

Outcome criterion6() {
  Outcome out;
  auto classes = enumerate_index(7);
  SearchBudget budget;
  budget.max_support = 1;
  budget.dedupe = false;
  std::vector<std::string> found;
  size_t named = 0;
  for (size_t i = 0; i < classes.size(); ++i) {
    if (subgroup_name(classes[i]) != "7A⁰") continue;
    ++named;
    SearchResult r = search_ic(classes[i], DimFactorization({7}), budget);
    for (const auto& c : r.certificates) {
      if (!c.is_ic || c.pp() != 2 || !c.fiducial.has_vector()) continue;
      const CycloVector& v = c.fiducial.vec();
      bool pattern = v[0] == one && v[1].is_zero() && v[2].is_zero() && v[3].is_zero() && v[4] == one;
      for (size_t k : {5, 6}) pattern = pattern && (v[k] == one || v[k] == -one);
      if (pattern) {
        found.push_back("class " + str(i + 1) + " " + c.fiducial.pretty());
        if (found.size() == 1) keep("d=7 7A⁰", c.fiducial);
      }
    }
  }
  out.check(named > 0 && !found.empty(),
            str(named) + " 7A⁰ classes; bivalued (1,0,0,0,1,±1,±1): " + (found.empty() ? "none" : join(found)));

  size_t match = 0;
  std::vector<std::string> nc;
  for (const auto& p : classes) {
    Signature s = signature(p);
    if (s.congruence) continue;
    nc.push_back(signature_label(s));
    match += nc.back() == "NC(0,6,1,1,[1^1 6^1])";
  }
  out.check(match > 0, "non-congruence index-7 classes: " + join(nc));

  Fiducial m = vec({7}, {1, -w3 - one, -w3, w3, w3 + one, -1, 0});
  keep("d=7 magic", m);
  ICCertificate c = verify(m);
  out.check(c.is_ic && all_angles(c, Rational(1, 36)), "magic fiducial squared angles " + angles_text(c.angle_spectrum));
  return out;
}

Outcome criterion7() {
  Outcome out;
  PermPair pair = parse_perm_pair(9, "(3,4)(5,7)(8,9)", "(1,2,3)(4,5,6)(7,8,9)");
  SearchBudget budget;
  budget.max_support = 1;
  CandidateList cands = candidate_fiducials(pair, budget);
  const CycloVector grid = {1, 0, 0, 0, 1, 0, 1, 1, 0};
  const CycloVector pappus = {1, 0, 0, 0, -1, 0, -1, 1, 0};
  out.check(contains(cands, grid) && contains(cands, pappus),
            "both fiducials among " + str(cands.vectors.size()) + " candidates of the group");

  auto run = [&](const std::string& name, const CycloVector& v, const CycloNum& t, GeometryKind want,
                 size_t copies) {
    Fiducial f = vec({3, 3}, v);
    keep(name, f);
    out.check(verify(f).is_ic, name + " is IC");
    IncidenceStructure s = tuple_lines(build_orbit(f), 3, {t}, false);
    GeometryLabel l = recognize(s);
    out.check(l.kind == want && l.copies == copies,
              name + " at " + entry_name(t) + ": " + l.text() + " (" + str(s.blocks.size()) + " lines), expected " +
                  to_string(want) + " x" + str(copies));
  };
  run("grid fiducial", grid, q(-1, 8), GeometryKind::GRID_3x3, 6);
  run("Pappus fiducial", pappus, q(1, 8), GeometryKind::PAPPUS, 9);
  return out;
}

Outcome criterion8() {
  Outcome out;
  auto quoted = [&](const std::string& name, const PermPair& p, size_t index, size_t nu2, size_t nu3,
                    size_t cusps) {
    Signature s = signature(p);
    out.check(s.index == index && s.nu2 == nu2 && s.nu3 == nu3 && s.cusp_widths.size() == cusps && s.genus == 0,
              name + " " + signature_label(s));
  };
  quoted("Γ0(2)", gamma0(2), 3, 1, 0, 2);
  quoted("Γ0(3)", gamma0(3), 4, 0, 1, 2);
  quoted("Γ(2)", gamma_principal(2), 6, 0, 0, 3);
  auto five = enumerate_index(5);
  out.check(five.size() == 1, str(five.size()) + " class at index 5");
  if (!five.empty()) {
    Signature s = signature(five[0]);
    quoted("index-5 class", five[0], 5, 1, 2, 1);
    out.check(s.level == 5 && s.congruence && subgroup_name(five[0]) == "5A⁰", "index-5 class is 5A⁰, level 5");
    const PermPair given = parse_perm_pair(5, "(1,2)(4,5)", "(2,3,4)");
    out.check(canonical_form(given) == canonical_form(five[0]), "e=(1,2)(4,5), v=(2,3,4) is that class");
  }

  std::vector<std::string> counts;
  bool counts_ok = true;
  for (size_t mu = 1; mu <= 7; ++mu) {
    const size_t a = enumerate_index(mu).size(), b = oracle::brute_force_class_count(mu);
    counts_ok = counts_ok && a == b;
    counts.push_back(str(a) + (a == b ? "" : "/" + str(b)));
  }
  out.check(counts_ok, "class counts index 1..7: " + join(counts, ","));

  bool genus_ok = true;
  size_t total = 0;
  std::map<size_t, std::vector<PermPair> > by_index;
  for (size_t mu = 1; mu <= 9; ++mu) {
    by_index[mu] = enumerate_index(mu);
    for (const auto& p : by_index[mu]) {
      Signature s = signature(p);
      const long twelve_g = 12 + static_cast<long>(mu) - 3 * static_cast<long>(s.nu2) -
                            4 * static_cast<long>(s.nu3) - 6 * static_cast<long>(s.cusp_widths.size());
      genus_ok = genus_ok && twelve_g >= 0 && twelve_g % 12 == 0 && twelve_g / 12 == s.genus;
      ++total;
    }
  }
  out.check(genus_ok, "genus non-negative integer for all " + str(total) + " classes of index <= 9");

  struct Named {
    size_t index;
    std::string name;
    bool congruence;
  };
  const std::vector<Named> table = {
      {3, "Γ0(2)", true},
      {4, "Γ0(3)", true},
      {4, "4A⁰", true},
      {5, "5A⁰", true},
      {6, "Γ'", true},
      {6, "Γ(2)", true},
      {6, "3C⁰", true},
      {6, "Γ0(4)", true},
      {6, "Γ0(5)", true},
      {7, "7A⁰", true},
      {7, "NC(0,6,1,1,[1^1 6^1])", false},
      {9, "NC(0,8,3,0,[1^1 8^1])", false},
      {9, "NC(0,9,1,3,[9^1])", false},
  };
  std::vector<std::string> bad;
  for (const auto& n : table) {
    size_t seen = 0;
    for (const auto& p : by_index[n.index]) {
      Signature s = signature(p);
      if (subgroup_name(p) != n.name && signature_label(s) != n.name) continue;
      ++seen;
      if (s.congruence != n.congruence) bad.push_back(n.name + " labelled " + (s.congruence ? "C" : "NC"));
    }
    if (seen == 0) bad.push_back(n.name + " not found");
  }
  out.check(bad.empty(), "congruence labels of " + str(table.size()) + " named subgroups" +
                             (bad.empty() ? "" : ": " + join(bad)));
  return out;
}

bool same_spectrum(const std::vector<SpectrumEntry>& a, const std::vector<SpectrumEntry>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].value != b[i].value || a[i].multiplicity != b[i].multiplicity) return false;
  return true;
}

bool same_angles(const std::vector<AngleEntry>& a, const std::vector<AngleEntry>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].norm != b[i].norm || a[i].multiplicity != b[i].multiplicity) return false;
  return true;
}

Outcome criterion9() {
  Outcome out;
  std::mt19937 rng(17);
  for (const auto& [name, f] : g_certified) {
    Orbit o = build_orbit(f);
    std::vector<std::string> failed;

    bool proj = true;
    for (const auto& p : o.projectors) proj = proj && dagger(p) == p && matmul(p, p) == p && trace(p).is_one();
    if (!proj) failed.push_back("projectors");

    CycloMatrix g = gram_matrix(o);
    bool sym = true;
    for (size_t i = 0; i < g.rows(); ++i)
      for (size_t j = 0; j < i; ++j) sym = sym && g(i, j) == g(j, i);
    if (!sym) failed.push_back("Gram symmetry");

    Orbit shuffled = o;
    std::vector<size_t> perm(o.projectors.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (size_t i = 0; i < perm.size(); ++i) {
      shuffled.ops[i] = o.ops[perm[i]];
      shuffled.projectors[i] = o.projectors[perm[i]];
      if (!o.states.empty()) shuffled.states[i] = o.states[perm[i]];
    }
    const size_t r = gram_rank(o);
    if (r != gram_rank(shuffled) || r != verify(f).gram_rank) failed.push_back("rank invariance");
    const auto spec = pair_spectrum(o);
    if (!same_spectrum(spec, pair_spectrum(shuffled))) failed.push_back("trace spectrum invariance");
    if (!same_angles(hermitian_angles(o), hermitian_angles(shuffled))) failed.push_back("angle invariance");

    // Spot checks on spectrum values and a few Gram entries.
    std::vector<CycloNum> xs;
    for (const auto& e : spec) xs.push_back(e.value);
    for (size_t k = 0; k < 4 && k + 1 < g.rows(); ++k) xs.push_back(g(0, k + 1) + CycloNum::root(o.conductor, k));
    bool norm_ok = true, embed_ok = true;
    for (size_t i = 0; i < xs.size(); ++i)
      for (size_t j = i; j < xs.size() && j < i + 3; ++j) {
        const CycloNum& a = xs[i];
        const CycloNum& b = xs[j];
        const int m = std::lcm(std::max(1, a.conductor()), std::max(1, b.conductor()));
        norm_ok = norm_ok && (a * b).field_norm(m) == a.field_norm(m) * b.field_norm(m);
        embed_ok = embed_ok && std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-10 &&
                   std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-10 &&
                   std::abs(a.conj().embed() - std::conj(a.embed())) < 1e-10;
      }
    if (!norm_ok) failed.push_back("field norm");
    if (!embed_ok) failed.push_back("embedding");

    out.check(failed.empty(), name + (failed.empty() ? "" : " (" + join(failed) + ")"));
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, 1, criterion1},   {2, 5, criterion2},   {3, 60, criterion3},
      {4, 90, criterion4},  {5, 120, criterion5}, {6, 120, criterion6},
      {7, 180, criterion7}, {8, 120, criterion8}, {9, 60, criterion9},
  };
  int passed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_s;
    const bool ok = o.ok && in_time;
    passed += ok;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs << " s / " << c.limit_s << " s";
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " (" << t.str()
              << (in_time ? "" : ", over time") << ")\n";
    for (const auto& n : o.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
  }
  std::cout << passed << "/" << criteria.size() << " criteria passed\n";
  return 0;
}
