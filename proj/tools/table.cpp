#include "table.hpp"

#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "modpovm/errors.hpp"

namespace modpovm::cli {

namespace {

struct Recipe {
  int k;
  std::vector<CycloNum> targets;
  bool pm;
};

CycloNum q(long a, long b) { return CycloNum(Rational(a, b)); }

std::vector<std::string> factorizations(int d) {
  switch (d) {
    case 4: return {"2x2", "4"};
    case 8: return {"2x2x2", "2x4", "8"};
    case 9: return {"3x3"};
    default: return {std::to_string(d)};
  }
}

std::vector<Recipe> recipes(const std::string& dims) {
  if (dims == "3") return {{3, {q(1, 8), q(-1, 8)}, false}};
  if (dims == "2x2") return {{3, {q(1, 9), q(1, 27), q(-1, 27)}, true}};
  if (dims == "5") return {{3, {q(-1, 64)}, false}};
  if (dims == "6") return {{4, {q(1, 9)}, true}};
  return {};
}

// Index-9 signatures searched in the targeted two-qutrit row.
const std::set<std::string> kTargetedD9 = {"NC(0,8,3,0,[1^1 8^1])", "NC(0,9,1,3,[9^1])"};

// Two-qutrit fiducials whose triple products give the grid and Pappus
// structures, with the trace value each is read at.
const std::vector<std::pair<CycloVector, Recipe> >& d9_probes() {
  static const std::vector<std::pair<CycloVector, Recipe> > p = {
      {{1, 0, 0, 0, 1, 0, 1, 1, 0}, {3, {q(-1, 8)}, false}},
      {{1, 0, 0, 0, -1, 0, -1, 1, 0}, {3, {q(1, 8)}, false}},
  };
  return p;
}

std::vector<std::string> labels_for(const Fiducial& f, const std::vector<Recipe>& rs) {
  std::vector<std::string> out;
  Orbit o = build_orbit(f);
  for (const auto& r : rs) {
    GeometryLabel l = recognize(tuple_lines(o, r.k, r.targets, r.pm));
    if (l.kind != GeometryKind::UNRECOGNIZED) out.push_back(l.text());
  }
  return out;
}

// Qubit projector (I + (X+Y+Z)/sqrt3)/2.
Fiducial qubit_magic() {
  const CycloNum s3 = CycloNum::root(12, 1) + CycloNum::root(12, 11);
  const CycloNum i = CycloNum::root(4, 1);
  const CycloNum b = s3.inverse(), half(Rational(1, 2));
  CycloMatrix m(2, 2);
  m.set(0, 0, half * (CycloNum(1) + b));
  m.set(1, 1, half * (CycloNum(1) - b));
  m.set(0, 1, half * (b - i * b));
  m.set(1, 0, half * (b + i * b));
  return Fiducial::from_projector(DimFactorization({2}), m);
}

Fiducial d7_magic() {
  const CycloNum w3 = CycloNum::root(3, 1);
  return Fiducial::from_vector(DimFactorization({7}),
                               {1, -w3 - CycloNum(1), -w3, w3, w3 + CycloNum(1), -1, 0});
}

const ReferenceRow* find_reference(int d, const std::string& dims) {
  for (const auto& r : reference_rows())
    if (r.dim == d && r.dims == dims) return &r;
  return nullptr;
}

}  // namespace

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = {
      {2, "2", {}, 1, "tetrahedron", {}},
      {3, "3", {{"Γ0(2)", 1}}, 0, "Hesse SIC", {"HESSE"}},
      {4, "2x2", {{"Γ0(3)", 2}, {"4A⁰", 2}}, 0, "GQ(2,2)", {"GQ22"}},
      {5, "5", {{"5A⁰", 1}}, 0, "Petersen graph", {"PETERSEN_DECOMP x10"}},
      {6, "6", {{"Γ'", 2}, {"Γ(2)", 2}, {"3C⁰", 2}, {"Γ0(4)", 2}, {"Γ0(5)", 2}}, 0, "Borromean ring",
       {"BORROMEAN_PAIR x2"}},
      {7, "7", {{"7A⁰", 2}, {"NC(0,6,1,1,[1^1 6^1])", 2}}, 1, "", {}},
      {8, "2x2x2", {}, 0, "Hoggar SIC (not modular)", {}},
      {8, "2x4", {}, 0, "", {}},
      {8, "8", {}, 0, "", {}},
      {9, "3x3", {{"NC(0,8,3,0,[1^1 8^1])", 2}, {"NC(0,9,1,3,[9^1])", 3}}, 0, "3x3 grid, Pappus",
       {"GRID_3x3 x9", "PAPPUS x9"}},
  };
  return rows;
}

Json build_table(const TableOptions& opt, bool* truncated) {
  if (opt.max_dim < 2 || opt.max_dim > 9) throw InputError("--max-dim must be between 2 and 9");
  if (truncated) *truncated = false;
  Json rows = Json::array();
  for (int d = 2; d <= opt.max_dim; ++d) {
    auto classes = enumerate_index(static_cast<size_t>(d));
    struct ClassRun {
      size_t id;
      PermPair pair;
      CandidateList cands;
    };
    std::vector<ClassRun> runs;
    for (size_t c = 0; c < classes.size(); ++c) {
      if (d == 9 && !kTargetedD9.count(signature_label(signature(classes[c])))) continue;
      if (opt.verbose) std::cerr << "d=" << d << " class " << c + 1 << "/" << classes.size() << "\n";
      runs.push_back({c + 1, classes[c], candidate_fiducials(classes[c], opt.budget)});
      if (truncated && runs.back().cands.truncated) *truncated = true;
    }

    for (const auto& dims_text : factorizations(d)) {
      const DimFactorization dims = DimFactorization::parse(dims_text);
      Json row;
      row["dim"] = d;
      row["dims"] = dims_text;
      row["classes_searched"] = runs.size();
      Json groups = Json::array();
      std::optional<size_t> best;
      struct Found {
        std::string name;
        size_t pp;
        std::vector<ICCertificate> certs;
      };
      std::vector<Found> found;
      for (const auto& r : runs) {
        SearchResult res = certify_candidates(r.cands, dims, opt.budget);
        if (res.certificates.empty()) continue;
        const ICCertificate& top = res.certificates.front();
        Json g;
        g["class"] = r.id;
        g["name"] = display_name(r.pair);
        g["signature"] = signature_label(signature(r.pair));
        g["pp"] = top.pp();
        g["trace_values"] = top.trace_spectrum.size();
        g["fiducial"] = top.fiducial.pretty();
        g["certificates"] = res.certificates.size();
        g["truncated"] = res.truncated;
        groups.push_back(g);
        best = best ? std::min(*best, top.pp()) : top.pp();
        found.push_back({display_name(r.pair), top.pp(), std::move(res.certificates)});
      }
      row["subgroups"] = groups;
      row["pp"] = best ? Json(*best) : Json(nullptr);

      Json ext = Json::array();
      std::optional<size_t> ext_pp;
      auto add_external = [&](const std::string& what, const Fiducial& f) {
        ICCertificate c = verify(f);
        Json e;
        e["source"] = what;
        e["fiducial"] = fiducial_json(f);
        e["is_ic"] = c.is_ic;
        e["is_sic"] = c.is_sic;
        e["pp"] = c.pp();
        ext.push_back(e);
        if (c.is_ic) ext_pp = c.pp();
      };
      if (dims_text == "2") add_external("qubit magic projector", qubit_magic());
      if (dims_text == "7") add_external("non-modular permutation group Z7:Z6", d7_magic());
      row["external"] = ext;

      std::vector<std::string> labels;
      const auto rs = recipes(dims_text);
      if (!rs.empty() && best) {
        for (const auto& f : found) {
          if (f.pp != *best) continue;
          size_t tried = 0;
          for (const auto& c : f.certs) {
            if (c.pp() != *best || tried++ == 3) break;
            for (auto& l : labels_for(c.fiducial, rs))
              if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
          }
        }
      }
      if (dims_text == "3x3") {
        for (const auto& r : runs)
          for (const auto& [vec, recipe] : d9_probes()) {
            if (std::find(r.cands.vectors.begin(), r.cands.vectors.end(), vec) == r.cands.vectors.end()) continue;
            Fiducial f = Fiducial::from_vector(dims, vec);
            if (!verify(f).is_ic) continue;
            for (auto& l : labels_for(f, {recipe}))
              if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
          }
      }
      row["geometry"] = labels;

      Json disc = Json::array();
      const ReferenceRow* ref = find_reference(d, dims_text);
      if (!ref) {
        row["reference"] = nullptr;
        disc.push_back("no reference row for this factorization");
      } else {
        Json rj;
        Json rg = Json::array();
        for (const auto& g : ref->subgroups) rg.push_back({{"name", g.name}, {"pp", g.pp}});
        rj["subgroups"] = rg;
        rj["external_pp"] = ref->external_pp ? Json(ref->external_pp) : Json(nullptr);
        rj["geometry"] = ref->geometry;
        row["reference"] = rj;

        std::map<std::string, std::vector<size_t> > got;
        for (const auto& f : found) got[f.name].push_back(f.pp);
        for (const auto& g : ref->subgroups) {
          auto it = got.find(g.name);
          if (it == got.end()) {
            disc.push_back(g.name + ": no IC found (reference pp " + std::to_string(g.pp) + ")");
            continue;
          }
          for (size_t pp : it->second)
            if (pp != g.pp)
              disc.push_back(g.name + ": pp " + std::to_string(pp) + " (reference " + std::to_string(g.pp) + ")");
        }
        for (const auto& [name, pps] : got) {
          bool listed = std::any_of(ref->subgroups.begin(), ref->subgroups.end(),
                                    [&](const ReferenceGroup& g) { return g.name == name; });
          if (!listed)
            for (size_t pp : pps) disc.push_back(name + ": IC with pp " + std::to_string(pp) + " not in reference");
        }
        if (ref->external_pp && ext_pp != ref->external_pp)
          disc.push_back("external construction pp differs from reference");
        for (const auto& l : ref->labels)
          if (std::find(labels.begin(), labels.end(), l) == labels.end())
            disc.push_back("geometry " + l + " not recognized");
      }
      row["discrepancies"] = disc;
      rows.push_back(row);
    }
  }
  Json out;
  out["max_dim"] = opt.max_dim;
  out["budget"] = budget_json(opt.budget);
  out["rows"] = rows;
  return out;
}

std::string table_text(const Json& table) {
  std::ostringstream os;
  for (const auto& row : table.at("rows")) {
    os << "d=" << row.at("dim").get<int>() << " [" << row.at("dims").get<std::string>() << "]  ";
    if (row.at("subgroups").empty()) {
      os << "none";
    } else {
      bool first = true;
      for (const auto& g : row.at("subgroups")) {
        os << (first ? "" : ", ") << g.at("name").get<std::string>() << " (pp " << g.at("pp").get<size_t>() << ")";
        first = false;
      }
    }
    for (const auto& e : row.at("external"))
      os << "; " << e.at("source").get<std::string>() << " (pp " << e.at("pp").get<size_t>()
         << (e.at("is_ic").get<bool>() ? "" : ", not IC") << ")";
    os << "  |  pp " << (row.at("pp").is_null() ? std::string("-") : row.at("pp").dump());
    os << "  |  ";
    if (row.at("geometry").empty()) os << "-";
    bool first = true;
    for (const auto& l : row.at("geometry")) {
      os << (first ? "" : ", ") << l.get<std::string>();
      first = false;
    }
    os << "\n";
    for (const auto& x : row.at("discrepancies")) os << "    ! " << x.get<std::string>() << "\n";
  }
  return os.str();
}

}  // namespace modpovm::cli
