#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "modpovm/geometry.hpp"
#include "modpovm/search.hpp"

namespace modpovm::cli {

using Json = nlohmann::ordered_json;

// Generators read from a permutation file. When both e and v are given the
// pair is also available as a PermPair.
struct GeneratorFile {
  size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<PermPair> pair;
};

GeneratorFile read_generators(const std::string& path);
GeneratorFile parse_generators(const std::string& text);

std::string value_text(const CycloNum& x);

Json fiducial_json(const Fiducial& f);
Fiducial fiducial_from_json(const Json& j);
Json certificate_json(const ICCertificate& c);
Json signature_json(const PermPair& p);
Json budget_json(const SearchBudget& b);
Json structure_json(const IncidenceStructure& s, int k, const std::vector<CycloNum>& targets, bool pm);

// Subgroup display name: conventional name if known, else the signature label.
std::string display_name(const PermPair& p);

Json read_json_file(const std::string& path);

}  // namespace modpovm::cli
