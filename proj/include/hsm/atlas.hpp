#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsm/domains.hpp"

namespace hsm {

struct AtlasRecord {
  std::string tag;        // as requested, e.g. "IV:4"
  std::string canonical;  // after small-isomorphism normalization, e.g. "I:2:2"
  int real_dim = 0;
  int rank = 0;
  std::string group, compact_group, isotropy;
  bool tube = false;
  std::vector<std::string> boundary_cones;  // index = boundary rank k
  std::vector<std::string> aliases;
};

// Irreducible types only: I:p:q (p>=q>=1), II:n (n>=2), III:n (n>=1), IV:n (n>=1, n!=2), V, VI.
AtlasRecord lookup(const std::string& type);
std::string normalize_type(const std::string& type);
bool tube_type(const std::string& type);

// Dynkin series "A","B","C","D" (with n) or "E6","E7","E8","F4","G2".
struct DynkinDiagram {
  std::string series;
  int n = 0;
  static DynkinDiagram parse(const std::string& series, int n = 0);
  RMat inner_products() const;  // (alpha_i, alpha_j), Bourbaki numbering
};
// Positive roots as coefficient vectors in the simple roots, by height.
std::vector<std::vector<int>> positive_roots(const DynkinDiagram& d);
std::vector<int> highest_root(const DynkinDiagram& d);
// 1-based nodes with coefficient 1 in the highest root.
std::vector<int> cominuscule_roots(const DynkinDiagram& d);

struct CatalogRecord {
  std::string family;          // e.g. "I_{n;r,s}"
  std::string conditions;
  std::string cone;            // cone descriptor family, e.g. "psd-c:n"
  std::string representation;
  std::string symmetric_cases;
  bool constructible = false;
};
std::vector<CatalogRecord> quasi_symmetric_catalog();
// Equivalent symmetric domain for an instance tag ("I:3:1:0", "II:3:1", "III:3:0", "IV:4:2:0", "IV:5:1", "VI0").
std::optional<std::string> catalog_symmetric_equivalent(const std::string& tag);

struct TubeRow {
  std::string cone, domain;
};
std::vector<TubeRow> tube_table();

}  // namespace hsm
