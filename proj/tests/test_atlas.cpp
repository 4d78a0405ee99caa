#include <doctest.h>

#include <algorithm>
#include <set>

#include "hsm/atlas.hpp"

using namespace hsm;

TEST_CASE("lookup") {
  const AtlasRecord vi = lookup("VI");
  CHECK(vi.real_dim == 54);
  CHECK(vi.rank == 3);
  CHECK(vi.tube);
  const AtlasRecord ii5 = lookup("II:5");
  CHECK(ii5.real_dim == 20);
  CHECK(ii5.rank == 2);
  CHECK_FALSE(ii5.tube);
  CHECK(lookup("IV:4").canonical == "I:2:2");
  CHECK(normalize_type("IV:6") == "II:4");
  CHECK(normalize_type("IV:3") == "III:2");
  CHECK(normalize_type("II:3") == "I:3:1");
  CHECK(normalize_type("IV:1") == "I:1:1");
  CHECK(lookup("II:2").rank == 1);
  CHECK(lookup("V").real_dim == 32);
  CHECK(lookup("I:5:3").real_dim == 30);
  CHECK(lookup("III:4").real_dim == 20);
  CHECK_THROWS_AS(lookup("VII"), Error);
  CHECK_THROWS_AS(lookup("I:2:3"), Error);
}

TEST_CASE("tube types") {
  CHECK(tube_type("III:4"));
  CHECK(tube_type("I:3:3"));
  CHECK_FALSE(tube_type("I:3:2"));
  CHECK_FALSE(tube_type("V"));
  CHECK(tube_type("VI"));
  CHECK(tube_type("II:4"));
  CHECK_FALSE(tube_type("II:5"));
  CHECK(tube_type("IV:7"));
  CHECK(tube_table().size() == 5);
}

TEST_CASE("positive roots and highest roots") {
  const std::vector<std::pair<std::string, int>> counts = {{"A4", 10}, {"B4", 16}, {"C4", 16}, {"D5", 20}, {"E6", 36},
                                                          {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
  for (const auto& [name, c] : counts) {
    const bool classical = name[0] >= 'A' && name[0] <= 'D';
    const DynkinDiagram d = classical ? DynkinDiagram::parse(name.substr(0, 1), std::stoi(name.substr(1)))
                                      : DynkinDiagram::parse(name);
    CHECK_MESSAGE(int(positive_roots(d).size()) == c, name);
  }
  CHECK(highest_root(DynkinDiagram::parse("E8")) == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(highest_root(DynkinDiagram::parse("G2")) == std::vector<int>{3, 2});
  CHECK(highest_root(DynkinDiagram::parse("B", 3)) == std::vector<int>{1, 2, 2});
  CHECK(highest_root(DynkinDiagram::parse("C", 3)) == std::vector<int>{2, 2, 1});
}

TEST_CASE("cominuscule roots") {
  CHECK(cominuscule_roots(DynkinDiagram::parse("C", 5)) == std::vector<int>{5});
  CHECK(cominuscule_roots(DynkinDiagram::parse("D", 6)) == std::vector<int>{1, 5, 6});
  CHECK(cominuscule_roots(DynkinDiagram::parse("A", 4)) == std::vector<int>{1, 2, 3, 4});
  CHECK(cominuscule_roots(DynkinDiagram::parse("B", 5)) == std::vector<int>{1});
  CHECK(cominuscule_roots(DynkinDiagram::parse("E6")) == std::vector<int>{1, 6});
  CHECK(cominuscule_roots(DynkinDiagram::parse("E7")) == std::vector<int>{7});
  CHECK(cominuscule_roots(DynkinDiagram::parse("E8")).empty());
  CHECK(cominuscule_roots(DynkinDiagram::parse("F4")).empty());
  CHECK(cominuscule_roots(DynkinDiagram::parse("G2")).empty());
}

TEST_CASE("cominuscule sets are invariant under diagram automorphisms") {
  auto as_set = [](const std::vector<int>& v) { return std::set<int>(v.begin(), v.end()); };
  for (int n = 2; n < 8; ++n) {
    const auto a = as_set(cominuscule_roots(DynkinDiagram::parse("A", n)));
    std::set<int> rev;
    for (int i : a) rev.insert(n + 1 - i);
    CHECK(a == rev);
  }
  for (int n = 4; n < 8; ++n) {
    const auto d = as_set(cominuscule_roots(DynkinDiagram::parse("D", n)));
    std::set<int> sw;
    for (int i : d) sw.insert(i == n ? n - 1 : i == n - 1 ? n : i);
    CHECK(d == sw);
  }
  const auto e = as_set(cominuscule_roots(DynkinDiagram::parse("E6")));
  // E6 reversal in Bourbaki labels: 1<->6, 3<->5, 2 and 4 fixed
  std::set<int> er;
  for (int i : e) er.insert(i == 1 ? 6 : i == 6 ? 1 : i == 3 ? 5 : i == 5 ? 3 : i);
  CHECK(e == er);
}

TEST_CASE("inner products are Cartan-compatible") {
  for (const std::string s : {"E6", "E7", "E8", "F4", "G2"}) {
    const RMat B = DynkinDiagram::parse(s).inner_products();
    CHECK(B.rows() == B.cols());
    CHECK(Eigen::SelfAdjointEigenSolver<RMat>(B).eigenvalues().minCoeff() > 0);
    for (int i = 0; i < B.rows(); ++i)
      for (int j = 0; j < B.cols(); ++j) {
        const double c = 2 * B(i, j) / B(j, j);
        CHECK(std::abs(c - std::round(c)) < 1e-12);
      }
  }
}

TEST_CASE("quasi-symmetric catalog") {
  const auto rows = quasi_symmetric_catalog();
  CHECK(rows.size() == 6);
  const auto it = std::find_if(rows.begin(), rows.end(), [](const CatalogRecord& r) { return r.family == "VI_0"; });
  REQUIRE(it != rows.end());
  CHECK(catalog_symmetric_equivalent("VI0") == std::optional<std::string>("VI"));
  CHECK(catalog_symmetric_equivalent("II:3:0") == std::optional<std::string>("II:6"));
  CHECK(catalog_symmetric_equivalent("II:3:1") == std::optional<std::string>("II:7"));
  CHECK_FALSE(catalog_symmetric_equivalent("II:3:2").has_value());
  CHECK(catalog_symmetric_equivalent("I:3:1:0") == std::optional<std::string>("I:4:3"));
  CHECK_FALSE(catalog_symmetric_equivalent("I:3:1:1").has_value());
  CHECK(catalog_symmetric_equivalent("IV:4:2:0") == std::optional<std::string>("I:4:2"));
  CHECK(catalog_symmetric_equivalent("IV:8:1:0") == std::optional<std::string>("V"));
  CHECK(catalog_symmetric_equivalent("IV:6:1:0") == std::optional<std::string>("II:5"));
  CHECK(catalog_symmetric_equivalent("IV:2:3") == std::optional<std::string>("I:4:1"));
  for (const auto& r : rows)
    if (r.family.rfind("IV", 0) == 0) CHECK_FALSE(r.constructible);
}

TEST_CASE("atlas rank and dimension match the domain descriptors") {
  for (const std::string t : {"I:1:1", "I:3:2", "I:4:4", "II:2", "II:5", "II:8", "III:1", "III:4", "IV:1", "IV:3",
                              "IV:8", "V", "VI"}) {
    const DomainDescriptor D = parse_domain(t);
    CHECK(lookup(t).real_dim == 2 * D.dim());
    CHECK(lookup(t).rank == D.table_rank());
    CHECK(lookup(t).boundary_cones.size() == size_t(D.table_rank()));
  }
}
