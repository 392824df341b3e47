#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "io.hpp"
#include "modpovm/errors.hpp"
#include "table.hpp"

using namespace modpovm;
using namespace modpovm::cli;

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kInvalid = 2;
constexpr int kTruncated = 3;

struct Common {
  std::string format = "json";
  std::string out;
};

struct BudgetFlags {
  std::string entry_set;
  int max_support = -1;
  size_t cap = 0;
  int workers = 1;
  bool all = false;

  SearchBudget budget(int default_support) const {
    SearchBudget b;
    if (!entry_set.empty()) b.entry_set = parse_entry_set(entry_set);
    b.max_support = max_support >= 0 ? max_support : default_support;
    if (cap) b.group_element_cap = cap;
    b.workers = workers;
    b.dedupe = !all;
    b.validate();
    return b;
  }
};

void add_common(CLI::App* app, Common& c, bool dot) {
  app->add_option("--format", c.format, "Output format")
      ->check(dot ? CLI::IsMember({"json", "text", "dot"}) : CLI::IsMember({"json", "text"}));
  app->add_option("--out", c.out, "Write output to FILE instead of stdout");
}

void add_budget(CLI::App* app, BudgetFlags& b, int default_support) {
  app->add_option("--entry-set", b.entry_set, "Coefficients for combining eigenvectors, e.g. \"0,1,-1,w3,i\"");
  app->add_option("--max-support", b.max_support,
                  "Eigenvectors combined per candidate (default " + std::to_string(default_support) + ")");
  app->add_option("--cap", b.cap, "Group elements scanned per subgroup (default 1000)");
  app->add_option("--workers", b.workers, "Verification threads")->check(CLI::PositiveNumber);
  app->add_flag("--all", b.all, "Keep every IC instead of one per spectrum");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InputError("cannot write " + c.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string certificate_text(const ICCertificate& c) {
  std::ostringstream os;
  os << "fiducial " << (c.fiducial.has_vector() ? c.fiducial.pretty() : std::string("(projector)")) << " on "
     << c.fiducial.dims().to_string() << "\n";
  os << "  povm sum " << (c.povm_sum_ok ? "ok" : "FAILS") << ", gram rank " << c.gram_rank << ", IC "
     << (c.is_ic ? "yes" : "no") << ", SIC " << (c.is_sic ? "yes" : "no") << ", pp " << c.pp() << "\n";
  os << "  traces:";
  for (const auto& e : c.trace_spectrum) os << " " << value_text(e.value) << " x" << e.multiplicity;
  os << "\n  squared angles:";
  for (const auto& a : c.angle_spectrum) os << " " << a.text() << " x" << a.multiplicity;
  os << "\n";
  return os.str();
}

Fiducial fiducial_arg(const std::string& input, const std::string& vec, const std::string& dims) {
  if (!input.empty() && !vec.empty()) throw InputError("give either --input or --fiducial, not both");
  if (!input.empty()) {
    Fiducial f = fiducial_from_json(read_json_file(input));
    if (!dims.empty() && DimFactorization::parse(dims) != f.dims())
      throw DimensionError("--dims disagrees with the input file");
    return f;
  }
  if (vec.empty()) throw InputError("a fiducial is required (--input FILE or --fiducial LIST)");
  if (dims.empty()) throw InputError("--dims is required with --fiducial");
  return Fiducial::from_vector(DimFactorization::parse(dims), parse_cyclo_list(vec));
}

int run(int argc, char** argv) {
  CLI::App app{"Informationally complete POVMs from subgroups of the modular group"};
  app.require_subcommand(1);

  // enumerate
  Common enum_c;
  size_t enum_index = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List conjugacy classes of subgroups of a given index");
  enumerate->add_option("--index", enum_index, "Subgroup index")->required();
  add_common(enumerate, enum_c, false);

  // search
  Common search_c;
  BudgetFlags search_b;
  size_t search_index = 0;
  std::string search_dims, search_pairs;
  std::vector<size_t> search_classes;
  auto* search = app.add_subcommand("search", "Search permutation-gate eigenstates for IC fiducials");
  search->add_option("--index", search_index, "Subgroup index (searches every class)");
  search->add_option("--class", search_classes, "Only these classes (1-based, enumerate order)");
  search->add_option("--pairs", search_pairs, "Generator file in cycle notation instead of --index");
  search->add_option("--dims", search_dims, "Pauli group factorization, e.g. 2x2")->required();
  add_budget(search, search_b, 2);
  add_common(search, search_c, false);

  // verify
  Common verify_c;
  std::string verify_in, verify_vec, verify_dims;
  auto* verifyc = app.add_subcommand("verify", "Certify one fiducial");
  verifyc->add_option("--input", verify_in, "Fiducial or certificate JSON");
  verifyc->add_option("--fiducial", verify_vec, "Entries, e.g. \"(0,1,-w6,w6-1)\"");
  verifyc->add_option("--dims", verify_dims, "Pauli group factorization");
  add_common(verifyc, verify_c, false);

  // geometry
  Common geo_c;
  std::string geo_in, geo_vec, geo_dims, geo_targets;
  int geo_k = 3, geo_shared = 1;
  bool geo_pm = false;
  auto* geometry = app.add_subcommand("geometry", "Constant-trace tuples of projectors and their geometry");
  geometry->add_option("--input", geo_in, "Fiducial or certificate JSON");
  geometry->add_option("--fiducial", geo_vec, "Entries, e.g. \"(0,1,-1)\"");
  geometry->add_option("--dims", geo_dims, "Pauli group factorization");
  geometry->add_option("--k", geo_k, "Tuple size")->check(CLI::IsMember({3, 4}));
  geometry->add_option("--targets", geo_targets, "Trace values, e.g. \"1/8,-1/8\"")->required();
  geometry->add_flag("--pm", geo_pm, "Keep only tuples whose operator product is +I or -I");
  geometry->add_option("--shared", geo_shared, "Shared points for the DOT intersection graph")->check(CLI::PositiveNumber);
  add_common(geometry, geo_c, true);

  // table
  Common table_c;
  BudgetFlags table_b;
  int table_max = 7;
  bool table_verbose = false;
  auto* table = app.add_subcommand("table", "Summary rows by dimension");
  table->add_option("--max-dim", table_max, "Largest dimension (2..9)");
  table->add_flag("--verbose", table_verbose, "Progress on stderr");
  add_budget(table, table_b, 1);
  add_common(table, table_c, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? kOk : kInvalid;
  }

  if (*enumerate) {
    if (enum_index < 1 || enum_index > kMaxEnumerationIndex)
      throw InputError("--index must be between 1 and " + std::to_string(kMaxEnumerationIndex));
    auto classes = enumerate_index(enum_index);
    Json j;
    j["index"] = enum_index;
    Json cl = Json::array();
    for (size_t i = 0; i < classes.size(); ++i) {
      Json c = signature_json(classes[i]);
      c["class"] = i + 1;
      cl.push_back(c);
    }
    j["classes"] = cl;
    if (enum_c.format == "json") {
      emit(enum_c, dump(j));
    } else {
      std::ostringstream os;
      os << "index " << enum_index << ": " << classes.size() << " classes\n";
      for (size_t i = 0; i < classes.size(); ++i) {
        const auto& c = cl[i];
        os << "  " << i + 1 << "  " << c["signature"].get<std::string>();
        if (!c["name"].get<std::string>().empty()) os << "  " << c["name"].get<std::string>();
        os << "  e=" << c["e"].get<std::string>() << " v=" << c["v"].get<std::string>() << "\n";
      }
      emit(enum_c, os.str());
    }
    return kOk;
  }

  if (*search) {
    const DimFactorization dims = DimFactorization::parse(search_dims);
    const SearchBudget budget = search_b.budget(2);
    Json j;
    j["dims"] = dims.to_string();
    j["budget"] = budget_json(budget);
    Json groups = Json::array();
    bool truncated = false;
    auto record = [&](Json head, const SearchResult& r) {
      head["truncated"] = r.truncated;
      head["candidates"] = r.candidates;
      Json certs = Json::array();
      for (const auto& c : r.certificates) certs.push_back(certificate_json(c));
      head["certificates"] = certs;
      truncated |= r.truncated;
      groups.push_back(head);
    };
    if (!search_pairs.empty()) {
      if (search_index || !search_classes.empty()) throw InputError("--pairs excludes --index and --class");
      GeneratorFile g = read_generators(search_pairs);
      Json head;
      head["source"] = search_pairs;
      Json gens = Json::array();
      for (const auto& p : g.generators) gens.push_back(p.to_cycle_string());
      head["generators"] = gens;
      if (g.pair) head["subgroup"] = signature_json(*g.pair);
      SearchResult r = g.pair ? search_ic(*g.pair, dims, budget) : search_ic(g.generators, dims, budget);
      record(head, r);
    } else {
      if (search_index == 0) throw InputError("give --index or --pairs");
      if (search_index > kMaxEnumerationIndex)
        throw InputError("--index must be at most " + std::to_string(kMaxEnumerationIndex));
      if (static_cast<size_t>(dims.dim()) != search_index)
        throw DimensionError("--dims " + search_dims + " does not have dimension " + std::to_string(search_index));
      auto classes = enumerate_index(search_index);
      for (size_t c : search_classes)
        if (c < 1 || c > classes.size()) throw InputError("--class " + std::to_string(c) + " out of range");
      for (size_t i = 0; i < classes.size(); ++i) {
        if (!search_classes.empty() &&
            std::find(search_classes.begin(), search_classes.end(), i + 1) == search_classes.end())
          continue;
        Json head;
        head["class"] = i + 1;
        head["subgroup"] = signature_json(classes[i]);
        record(head, search_ic(classes[i], dims, budget));
      }
    }
    j["results"] = groups;

    // flag against the reference table
    Json ref = nullptr;
    for (const auto& r : reference_rows())
      if (search_index && r.dim == static_cast<int>(search_index) && r.dims == dims.to_string()) {
        ref = Json::object();
        Json rg = Json::array();
        for (const auto& g : r.subgroups) rg.push_back({{"name", g.name}, {"pp", g.pp}});
        ref["subgroups"] = rg;
        ref["geometry"] = r.geometry;
      }
    j["reference"] = ref;
    if (search_index && ref.is_null()) j["note"] = "no reference row for this dimension and factorization";

    if (search_c.format == "json") {
      emit(search_c, dump(j));
    } else {
      std::ostringstream os;
      for (const auto& g : j["results"]) {
        if (g.contains("source")) os << g["source"].get<std::string>() << " ";
        if (g.contains("class")) os << "class " << g["class"].get<size_t>() << " ";
        if (g.contains("subgroup")) os << g["subgroup"]["signature"].get<std::string>() << " "
                                       << g["subgroup"]["name"].get<std::string>();
        os << ": " << g["certificates"].size() << " IC spectra from " << g["candidates"].get<size_t>()
           << " candidates" << (g["truncated"].get<bool>() ? " (truncated)" : "") << "\n";
        for (const auto& c : g["certificates"]) {
          os << "  pp " << c["pp"].get<size_t>() << "  " << c["fiducial"].value("pretty", std::string("?"))
             << "  traces";
          for (const auto& t : c["trace_spectrum"]) os << " " << t["value"].get<std::string>();
          os << "\n";
        }
      }
      if (!ref.is_null()) {
        os << "reference:";
        for (const auto& g : ref["subgroups"])
          os << " " << g["name"].get<std::string>() << " (pp " << g["pp"].get<size_t>() << ")";
        os << "\n";
      } else if (search_index) {
        os << "reference: none for this factorization\n";
      }
      emit(search_c, os.str());
    }
    return truncated ? kTruncated : kOk;
  }

  if (*verifyc) {
    Fiducial f = fiducial_arg(verify_in, verify_vec, verify_dims);
    ICCertificate c = verify(f);
    emit(verify_c, verify_c.format == "json" ? dump(certificate_json(c)) : certificate_text(c));
    return kOk;
  }

  if (*geometry) {
    Fiducial f = fiducial_arg(geo_in, geo_vec, geo_dims);
    std::vector<CycloNum> targets;
    if (!geo_targets.empty() && geo_targets != "()" && geo_targets != "[]") targets = parse_cyclo_list(geo_targets);
    IncidenceStructure s;
    s.dims = f.dims();
    if (!targets.empty()) s = tuple_lines(build_orbit(f), geo_k, targets, geo_pm);
    Json j = structure_json(s, geo_k, targets, geo_pm);
    if (geo_c.format == "json") {
      emit(geo_c, dump(j));
    } else if (geo_c.format == "dot") {
      std::vector<std::string> labels;
      for (const auto& b : s.blocks) {
        std::string l;
        for (size_t p : b.pts) l += (l.empty() ? "" : " ") + s.points[p].to_string();
        labels.push_back(l);
      }
      emit(geo_c, intersection_graph(s, geo_shared).to_dot("intersection" + std::to_string(geo_shared), labels));
    } else {
      std::ostringstream os;
      os << s.points.size() << " points, " << s.blocks.size() << " blocks, " << j["components"].get<size_t>()
         << " components: " << j["label"].get<std::string>();
      if (j["copies"].get<size_t>() > 1) os << " x" << j["copies"].get<size_t>();
      os << "\n";
      for (const auto& b : s.blocks) {
        os << " ";
        for (size_t p : b.ordering) os << " " << s.points[p].to_string();
        os << "  tr " << value_text(b.trace);
        if (b.sign) os << (b.sign > 0 ? "  +I" : "  -I");
        os << "\n";
      }
      if (j.contains("mermin_square")) {
        const auto& m = j["mermin_square"];
        os << "Mermin square, " << m["minus_lines"].get<int>() << " line(s) at -I, KS non-colorable: "
           << (m["ks_noncolorable"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& row : m["cells"]) {
          os << " ";
          for (const auto& c : row) os << " " << c.get<std::string>();
          os << "\n";
        }
      }
      emit(geo_c, os.str());
    }
    return kOk;
  }

  if (*table) {
    TableOptions opt;
    opt.max_dim = table_max;
    opt.budget = table_b.budget(1);
    opt.verbose = table_verbose;
    bool truncated = false;
    Json j = build_table(opt, &truncated);
    emit(table_c, table_c.format == "json" ? dump(j) : table_text(j));
    return truncated ? kTruncated : kOk;
  }
  return kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
