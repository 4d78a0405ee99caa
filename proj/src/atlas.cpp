#include "hsm/atlas.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hsm/boundary.hpp"

namespace hsm {

using Kind = JtsDescriptor::Kind;

namespace {

std::vector<int> split_ints(const std::string& s, std::string& head) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.empty()) throw Error("UnknownType", "empty type tag");
  head = parts[0];
  std::vector<int> v;
  for (size_t i = 1; i < parts.size(); ++i) {
    try {
      size_t used = 0;
      v.push_back(std::stoi(parts[i], &used));
      if (used != parts[i].size()) throw 0;
    } catch (...) {
      throw Error("UnknownType", "bad type tag '" + s + "'");
    }
  }
  return v;
}

DomainDescriptor irreducible(const std::string& type) {
  std::string head;
  auto v = split_ints(type, head);
  auto need = [&](size_t c) {
    if (v.size() != c) throw Error("UnknownType", "bad type tag '" + type + "'");
  };
  if (head == "I") {
    need(2);
    if (!(v[0] >= v[1] && v[1] >= 1)) throw Error("UnknownType", "I:p:q needs p >= q >= 1");
    return DomainDescriptor::type_i(v[0], v[1]);
  }
  if (head == "II") {
    need(1);
    if (v[0] < 2) throw Error("UnknownType", "II:n needs n >= 2");
    return DomainDescriptor::type_ii(v[0]);
  }
  if (head == "III") {
    need(1);
    if (v[0] < 1) throw Error("UnknownType", "III:n needs n >= 1");
    return DomainDescriptor::type_iii(v[0]);
  }
  if (head == "IV") {
    need(1);
    if (v[0] < 1 || v[0] == 2) throw Error("UnknownType", "IV:n needs n >= 1, n != 2");
    return DomainDescriptor::type_iv(v[0]);
  }
  if (head == "V") {
    need(0);
    return DomainDescriptor::type_v();
  }
  if (head == "VI") {
    need(0);
    return DomainDescriptor::type_vi();
  }
  throw Error("UnknownType", "unknown type '" + type + "'");
}

// Rows of the small-isomorphism table; the first entry is canonical.
const std::vector<std::vector<std::string>>& iso_rows() {
  static const std::vector<std::vector<std::string>> rows = {
      {"I:1:1", "II:2", "III:1", "IV:1"}, {"I:3:1", "II:3"}, {"III:2", "IV:3"}, {"I:2:2", "IV:4"}, {"II:4", "IV:6"}};
  return rows;
}

std::string s(int x) { return std::to_string(x); }

}  // namespace

std::string normalize_type(const std::string& type) {
  const std::string name = irreducible(type).name();
  for (const auto& row : iso_rows())
    if (std::find(row.begin(), row.end(), name) != row.end()) return row[0];
  return name;
}

bool tube_type(const std::string& type) {
  const DomainDescriptor D = irreducible(normalize_type(type));
  switch (D.kind) {
    case Kind::I: return D.p == D.q;
    case Kind::II: return D.n % 2 == 0;
    case Kind::III:
    case Kind::IV:
    case Kind::VI: return true;
    default: return false;
  }
}

AtlasRecord lookup(const std::string& type) {
  const DomainDescriptor D = irreducible(type);
  AtlasRecord r;
  r.tag = D.name();
  r.canonical = normalize_type(type);
  switch (D.kind) {
    case Kind::I:
      r.real_dim = 2 * D.p * D.q;
      r.rank = D.q;
      r.group = "PSU(" + s(D.p) + "," + s(D.q) + ")";
      r.compact_group = "PSU(" + s(D.p + D.q) + ")";
      r.isotropy = "S(U_" + s(D.p) + " x U_" + s(D.q) + ")";
      break;
    case Kind::II:
      r.real_dim = D.n * (D.n - 1);
      r.rank = D.n / 2;
      r.group = "PSO*(" + s(2 * D.n) + ")";
      r.compact_group = "PSO(" + s(2 * D.n) + ")";
      r.isotropy = "U(" + s(D.n) + ")";
      break;
    case Kind::III:
      r.real_dim = D.n * (D.n + 1);
      r.rank = D.n;
      r.group = "PSp(" + s(D.n) + ",R)";
      r.compact_group = "PSp(" + s(D.n) + ")";
      r.isotropy = "U(" + s(D.n) + ")";
      break;
    case Kind::IV:
      r.real_dim = 2 * D.n;
      r.rank = std::min(2, D.n);
      r.group = "PSO(2," + s(D.n) + ")";
      r.compact_group = "PSO(" + s(D.n + 2) + ")";
      r.isotropy = "SO(2) x SO(" + s(D.n) + ")";
      break;
    case Kind::V:
      r.real_dim = 32;
      r.rank = 2;
      r.group = "E6(-14)";
      r.compact_group = "E6^c";
      r.isotropy = "SO(10) x SO(2)";
      break;
    case Kind::VI:
      r.real_dim = 54;
      r.rank = 3;
      r.group = "E7(-25)";
      r.compact_group = "E7^c";
      r.isotropy = "E6^c x SO(2)";
      break;
    default: break;
  }
  r.tube = tube_type(type);
  for (int k = 0; k < r.rank; ++k) r.boundary_cones.push_back(boundary_cone(D, k).name());
  for (const auto& row : iso_rows())
    if (std::find(row.begin(), row.end(), r.tag) != row.end())
      for (const auto& a : row)
        if (a != r.tag) r.aliases.push_back(a);
  return r;
}

// ---- root systems ----

DynkinDiagram DynkinDiagram::parse(const std::string& series, int n) {
  DynkinDiagram d;
  d.series = series;
  if (series == "A" || series == "B" || series == "C" || series == "D") {
    const int lo = series == "A" ? 1 : series == "D" ? 4 : 2;
    if (n < lo) throw Error("InvalidDiagram", series + s(n) + " is not a Dynkin diagram here");
    d.n = n;
    return d;
  }
  static const std::map<std::string, int> ex = {{"E6", 6}, {"E7", 7}, {"E8", 8}, {"F4", 4}, {"G2", 2}};
  auto it = ex.find(series);
  if (it == ex.end()) throw Error("InvalidDiagram", "unknown series '" + series + "'");
  if (n != 0 && n != it->second) throw Error("InvalidDiagram", series + " has " + s(it->second) + " nodes");
  d.n = it->second;
  return d;
}

RMat DynkinDiagram::inner_products() const {
  RMat B = RMat::Zero(n, n);
  auto link = [&](int i, int j, double v) {  // 1-based
    B(i - 1, j - 1) = v;
    B(j - 1, i - 1) = v;
  };
  for (int i = 0; i < n; ++i) B(i, i) = 2;
  if (series == "A" || series == "B" || series == "C") {
    for (int i = 1; i < n; ++i) link(i, i + 1, -1);
    if (series == "B") {
      B(n - 1, n - 1) = 1;
    } else if (series == "C") {
      B(n - 1, n - 1) = 4;
      link(n - 1, n, -2);
    }
  } else if (series == "D") {
    for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
    link(n - 2, n, -1);
  } else if (series[0] == 'E') {
    link(1, 3, -1);
    link(2, 4, -1);
    for (int i = 3; i < n; ++i) link(i, i + 1, -1);
  } else if (series == "F4") {
    B(2, 2) = B(3, 3) = 1;
    link(1, 2, -1);
    link(2, 3, -1);
    link(3, 4, -0.5);
  } else if (series == "G2") {
    B(0, 0) = 1;
    B(1, 1) = 3;
    link(1, 2, -1.5);
  }
  return B;
}

std::vector<std::vector<int>> positive_roots(const DynkinDiagram& d) {
  const RMat B = d.inner_products();
  const int n = d.n;
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> roots, layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> a(n, 0);
    a[i] = 1;
    layer.push_back(a);
  }
  auto coroot_pairing = [&](const std::vector<int>& b, int i) {  // <beta, alpha_i^vee>
    double v = 0;
    for (int j = 0; j < n; ++j) v += b[j] * B(j, i);
    return static_cast<int>(std::lround(2 * v / B(i, i)));
  };
  while (!layer.empty()) {
    for (const auto& r : layer) {
      known.insert(r);
      roots.push_back(r);
    }
    std::vector<std::vector<int>> next;
    std::set<std::vector<int>> seen;
    for (const auto& b : layer)
      for (int i = 0; i < n; ++i) {
        int p = 0;
        std::vector<int> down = b;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        if (p - coroot_pairing(b, i) > 0) {
          std::vector<int> up = b;
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    layer = std::move(next);
  }
  return roots;
}

std::vector<int> highest_root(const DynkinDiagram& d) { return positive_roots(d).back(); }

std::vector<int> cominuscule_roots(const DynkinDiagram& d) {
  const auto h = highest_root(d);
  std::vector<int> out;
  for (int i = 0; i < d.n; ++i)
    if (h[i] == 1) out.push_back(i + 1);
  return out;
}

// ---- quasi-symmetric catalog ----

std::vector<CatalogRecord> quasi_symmetric_catalog() {
  return {
      {"IV_{n;r,s}", "r >= s >= 0, even n >= 4", "lorentz:n-1", "sp_1^r + sp_2^s",
       "IV_{n;0,0}=IV_n; IV_{4;r,0}=I_{r+2,2}; IV_{6;1,0}=II_5; IV_{8;1,0}=V", false},
      {"IV_{n;r}", "r >= 0, odd n >= 3 or n = 2", "lorentz:n-1", "sp^r", "IV_{n;0}=IV_n (n>=3); IV_{2;r}=I_{r+1,1}",
       false},
      {"III_{n;r}", "n >= 3, r >= 0", "psd-r:n", "id^r", "III_{n;0}=III_n", true},
      {"I_{n;r,s}", "n >= 3, r >= s >= 0", "psd-c:n", "id^r + conj(id)^s", "I_{n;r,0}=I_{n+r,n}", true},
      {"II_{n;r}", "n >= 3, r >= 0", "psd-h:n", "id^r", "II_{n;r}=II_{2n+r} (r=0,1)", true},
      {"VI_0", "", "albert", "0", "VI_0=VI", true},
  };
}

std::optional<std::string> catalog_symmetric_equivalent(const std::string& tag) {
  if (tag == "VI0") return "VI";
  std::string head;
  auto v = split_ints(tag, head);
  if (head == "I" && v.size() == 3) {
    if (v[2] == 0) return "I:" + s(v[0] + v[1]) + ":" + s(v[0]);
    return std::nullopt;
  }
  if (head == "III" && v.size() == 2) {
    if (v[1] == 0) return "III:" + s(v[0]);
    return std::nullopt;
  }
  if (head == "II" && v.size() == 2) {
    if (v[1] <= 1) return "II:" + s(2 * v[0] + v[1]);
    return std::nullopt;
  }
  if (head == "IV" && v.size() == 3) {
    const int n = v[0], r = v[1], sx = v[2];
    if (r == 0 && sx == 0) return "IV:" + s(n);
    if (n == 4 && sx == 0) return "I:" + s(r + 2) + ":2";
    if (n == 6 && r == 1 && sx == 0) return "II:5";
    if (n == 8 && r == 1 && sx == 0) return "V";
    return std::nullopt;
  }
  if (head == "IV" && v.size() == 2) {
    const int n = v[0], r = v[1];
    if (r == 0 && n >= 3) return "IV:" + s(n);
    if (n == 2) return "I:" + s(r + 1) + ":1";
    return std::nullopt;
  }
  throw Error("UnknownType", "bad catalog tag '" + tag + "'");
}

std::vector<TubeRow> tube_table() {
  return {{"lorentz:n-1 (n >= 2)", "IV:n if n >= 3, IV:1 if n = 2"},
          {"psd-r:n (n >= 3)", "III:n"},
          {"psd-c:n (n >= 3)", "I:n:n"},
          {"psd-h:n (n >= 3)", "II:2n"},
          {"albert", "VI"}};
}

}  // namespace hsm
