#include "io.hpp"

#include <fstream>
#include <sstream>

#include "modpovm/errors.hpp"

namespace modpovm::cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Largest point mentioned in cycle notation.
size_t max_point(const std::string& cycles) {
  size_t m = 0, cur = 0;
  bool in = false;
  for (char ch : cycles) {
    if (ch >= '0' && ch <= '9') {
      cur = cur * 10 + static_cast<size_t>(ch - '0');
      in = true;
    } else {
      if (in) m = std::max(m, cur);
      cur = 0;
      in = false;
    }
  }
  if (in) m = std::max(m, cur);
  return m;
}

Json spectrum_value(const CycloNum& v) {
  Json j;
  j["value"] = value_text(v);
  j["exact"] = v.reduced().to_string();
  j["approx"] = v.embed().real();
  return j;
}

}  // namespace

GeneratorFile parse_generators(const std::string& text) {
  GeneratorFile g;
  std::optional<std::string> e, v;
  std::vector<std::string> extra;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw InputError("generator file: expected 'key: value' in '" + line + "'");
    const std::string key = trim(line.substr(0, colon));
    const std::string val = trim(line.substr(colon + 1));
    if (key == "degree") {
      try {
        g.degree = std::stoul(val);
      } catch (const std::exception&) {
        throw InputError("generator file: bad degree '" + val + "'");
      }
    } else if (key == "e") {
      e = val;
    } else if (key == "v") {
      v = val;
    } else if (key == "gen") {
      extra.push_back(val);
    } else {
      throw InputError("generator file: unknown key '" + key + "'");
    }
  }
  std::vector<std::string> all;
  if (e) all.push_back(*e);
  if (v) all.push_back(*v);
  all.insert(all.end(), extra.begin(), extra.end());
  if (all.empty()) throw InputError("generator file: no generators");
  if (g.degree == 0)
    for (const auto& c : all) g.degree = std::max(g.degree, max_point(c));
  if (g.degree == 0) throw InputError("generator file: cannot infer degree");
  if (e && v) {
    g.pair = parse_perm_pair(g.degree, *e, *v);
    g.generators = {g.pair->e, g.pair->v};
    for (const auto& c : extra) g.generators.push_back(Permutation::from_cycles(g.degree, c));
    if (!extra.empty()) g.pair.reset();
  } else {
    for (const auto& c : all) g.generators.push_back(Permutation::from_cycles(g.degree, c));
  }
  return g;
}

GeneratorFile read_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_generators(ss.str());
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string value_text(const CycloNum& x) { return entry_name(x); }

Json fiducial_json(const Fiducial& f) {
  Json j;
  j["dims"] = f.dims().to_string();
  if (f.has_vector()) {
    Json v = Json::array();
    for (const auto& x : f.vec()) v.push_back(value_text(x));
    j["vector"] = v;
    j["pretty"] = f.pretty();
  } else {
    const CycloMatrix p = f.projector();
    Json m = Json::array();
    for (size_t r = 0; r < p.rows(); ++r) {
      Json row = Json::array();
      for (size_t c = 0; c < p.cols(); ++c) row.push_back(p(r, c).reduced().to_string());
      m.push_back(row);
    }
    j["projector"] = m;
  }
  return j;
}

Fiducial fiducial_from_json(const Json& j0) {
  const Json& j = j0.contains("fiducial") ? j0.at("fiducial") : j0;
  if (!j.is_object() || !j.contains("dims") || !j.at("dims").is_string())
    throw InputError("fiducial JSON needs a \"dims\" string");
  DimFactorization dims = DimFactorization::parse(j.at("dims").get<std::string>());
  auto entry = [](const Json& x) -> CycloNum {
    if (x.is_number_integer()) return CycloNum(x.get<long>());
    if (x.is_string()) return parse_cyclo_expr(x.get<std::string>());
    throw InputError("fiducial entries must be strings or integers");
  };
  if (j.contains("vector")) {
    CycloVector v;
    for (const auto& x : j.at("vector")) v.push_back(entry(x));
    return Fiducial::from_vector(dims, v);
  }
  if (j.contains("projector")) {
    const Json& m = j.at("projector");
    const size_t d = m.size();
    CycloMatrix p(d, d);
    for (size_t r = 0; r < d; ++r) {
      if (m[r].size() != d) throw DimensionError("projector must be square");
      for (size_t c = 0; c < d; ++c) p.set(r, c, entry(m[r][c]));
    }
    return Fiducial::from_projector(dims, p);
  }
  throw InputError("fiducial JSON needs \"vector\" or \"projector\"");
}

Json certificate_json(const ICCertificate& c) {
  Json j;
  j["fiducial"] = fiducial_json(c.fiducial);
  j["conductor"] = c.conductor;
  j["povm_sum_ok"] = c.povm_sum_ok;
  j["gram_rank"] = c.gram_rank;
  j["is_ic"] = c.is_ic;
  j["is_sic"] = c.is_sic;
  j["pp"] = c.pp();
  Json ts = Json::array();
  for (const auto& e : c.trace_spectrum) {
    Json x = spectrum_value(e.value);
    x["multiplicity"] = e.multiplicity;
    ts.push_back(x);
  }
  j["trace_spectrum"] = ts;
  Json as = Json::array();
  for (const auto& a : c.angle_spectrum) {
    Json x;
    x["squared_angle"] = a.squared_angle ? Json(a.squared_angle->get_str()) : Json(nullptr);
    x["norm"] = a.norm.get_str();
    x["degree"] = a.degree;
    x["approx"] = a.approx;
    x["multiplicity"] = a.multiplicity;
    as.push_back(x);
  }
  j["angle_spectrum"] = as;
  j["angle_variants_agree"] = c.angle_variants_agree;
  return j;
}

std::string display_name(const PermPair& p) {
  std::string n = subgroup_name(p);
  return n.empty() ? signature_label(signature(p)) : n;
}

Json signature_json(const PermPair& p) {
  const Signature s = signature(p);
  Json j;
  j["e"] = p.e.to_cycle_string();
  j["v"] = p.v.to_cycle_string();
  j["signature"] = signature_label(s);
  j["name"] = subgroup_name(p);
  j["genus"] = s.genus;
  j["level"] = s.level;
  j["nu2"] = s.nu2;
  j["nu3"] = s.nu3;
  j["cusp_widths"] = s.cusp_widths;
  j["congruence"] = s.congruence;
  return j;
}

Json budget_json(const SearchBudget& b) {
  Json j;
  Json es = Json::array();
  for (const auto& x : b.entry_set) es.push_back(value_text(x));
  j["entry_set"] = es;
  j["max_support"] = b.max_support;
  j["group_element_cap"] = b.group_element_cap;
  j["dedupe"] = b.dedupe;
  return j;
}

Json structure_json(const IncidenceStructure& s, int k, const std::vector<CycloNum>& targets, bool pm) {
  Json j;
  j["dims"] = s.dims.to_string();
  j["k"] = k;
  Json tg = Json::array();
  for (const auto& t : targets) tg.push_back(value_text(t));
  j["targets"] = tg;
  j["pm_identity"] = pm;
  Json pts = Json::array();
  for (const auto& p : s.points) pts.push_back(p.to_string());
  j["points"] = pts;
  Json blocks = Json::array(), orders = Json::array(), traces = Json::array(), signs = Json::array();
  for (const auto& b : s.blocks) {
    blocks.push_back(b.pts);
    orders.push_back(b.ordering);
    traces.push_back(value_text(b.trace));
    signs.push_back(b.sign);
  }
  j["blocks"] = blocks;
  j["orderings"] = orders;
  j["traces"] = traces;
  j["signs"] = signs;
  const GeometryLabel lbl = recognize(s);
  j["label"] = to_string(lbl.kind);
  j["copies"] = lbl.copies;
  j["components"] = s.components().size();
  if (!s.blocks.empty()) {
    Json ig = Json::object();
    const Graph one = intersection_graph(s, 1);
    for (int shared = 1; shared < k; ++shared) {
      Graph g = intersection_graph(s, shared);
      auto comps = g.components();
      size_t pet = 0, pet1 = 0;
      for (const auto& c : comps) {
        if (c.size() != 10) continue;
        pet += is_petersen(g.induced(c));
        pet1 += is_petersen(one.induced(c));
      }
      Json x;
      x["edges"] = g.edges.size();
      x["components"] = comps.size();
      // components that are Petersen graphs themselves, and those whose
      // one-point intersection graph is
      x["petersen_components"] = pet;
      x["petersen_one_point_subgraphs"] = pet1;
      ig[std::to_string(shared)] = x;
    }
    j["intersection_graphs"] = ig;
  }
  if (lbl.kind == GeometryKind::PETERSEN_DECOMP) j["petersen_shared"] = lbl.petersen_shared;
  if (auto m = mermin_square(s)) {
    Json ms;
    Json rows = Json::array(), cols = Json::array();
    for (size_t r = 0; r < 3; ++r) {
      Json row = Json::array();
      for (size_t c = 0; c < 3; ++c) row.push_back(m->grid.points[m->cells[r][c]].to_string());
      rows.push_back(row);
    }
    ms["cells"] = rows;
    Json rt = Json::array(), ct = Json::array(), rs = Json::array(), cs = Json::array();
    for (size_t b = 0; b < 3; ++b) {
      rt.push_back(value_text(m->grid.blocks[b].trace));
      rs.push_back(m->grid.blocks[b].sign);
      ct.push_back(value_text(m->grid.blocks[3 + b].trace));
      cs.push_back(m->grid.blocks[3 + b].sign);
    }
    ms["row_traces"] = rt;
    ms["row_signs"] = rs;
    ms["column_traces"] = ct;
    ms["column_signs"] = cs;
    ms["minus_lines"] = m->minus_lines();
    ms["ks_noncolorable"] = ks_noncolorable(line_contexts(*m));
    j["mermin_square"] = ms;
  }
  return j;
}

}  // namespace modpovm::cli
