#include "hsm/io.hpp"

#include <fstream>
#include <sstream>

namespace hsm::io {

json to_json(cd z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }  // + 0.0 drops signed zeros

json to_json(const CVec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

json to_json(const RVec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v(i) + 0.0);
  return a;
}

json to_json(const CMat& M) {
  json a = json::array();
  for (int i = 0; i < M.rows(); ++i) a.push_back(to_json(CVec(M.row(i).transpose())));
  return a;
}

json to_json(const Check& c) {
  return {{"criterion", c.criterion}, {"suite", c.suite}, {"name", c.name},
          {"pass", c.pass},           {"metric", c.metric}, {"detail", c.detail}};
}

bool is_complex_scalar(const json& j) {
  return j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number());
}

cd complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (is_complex_scalar(j)) return {j[0].get<double>(), j[1].get<double>()};
  throw Error("ParseError", "expected a number or [re, im], got " + j.dump());
}

CVec cvec_from_json(const json& j) {
  if (!j.is_array()) throw Error("ParseError", "expected an array of complex numbers");
  CVec v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i]);
  return v;
}

RVec rvec_from_json(const json& j) {
  const CVec v = cvec_from_json(j);
  if (v.size() && v.imag().cwiseAbs().maxCoeff() != 0.0) throw Error("ParseError", "expected a real vector");
  return v.real();
}

CMat cmat_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || is_complex_scalar(j))
    throw Error("ParseError", "expected a matrix (array of rows)");
  const size_t cols = j[0].size();
  CMat M(j.size(), cols);
  for (size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw Error("ParseError", "ragged matrix");
    for (size_t c = 0; c < cols; ++c) M(r, c) = complex_from_json(j[r][c]);
  }
  return M;
}

json load(const std::string& arg) {
  std::string text = arg;
  if (std::ifstream f(arg); f) {
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("ParseError", "not valid JSON (or an unreadable file): " + arg);
  return j;
}

namespace {
bool is_matrix(const json& j) {
  return j.is_array() && !j.empty() && j[0].is_array() && !is_complex_scalar(j[0]);
}
}  // namespace

CVec point_from_json(const DomainDescriptor& D, const json& j) {
  const json& p = j.is_object() && j.contains("point") ? j["point"] : j;
  CVec z;
  // [[a,b],[c,d]] is ambiguous; a length that cannot be a coordinate vector means rows
  const bool rows = is_matrix(p) || (p.is_array() && !p.empty() && p[0].is_array() && int(p.size()) != D.dim());
  if (rows) {
    using K = JtsDescriptor::Kind;
    if (D.kind != K::I && D.kind != K::II && D.kind != K::III)
      throw Error("ParseError", "matrix points are only accepted for types I, II, III");
    z = jts_from_matrix(D, cmat_from_json(p));
  } else {
    z = cvec_from_json(p);
  }
  check_element(D, z);
  return z;
}

GroupElement group_from_json(const DomainDescriptor& D, const json& j, double tol) {
  const json& m = j.is_object() && j.contains("g") ? j["g"] : j;
  GroupElement g = group_identity(D);
  const CMat M = cmat_from_json(m);
  if (M.rows() != g.g.rows() || M.cols() != g.g.cols())
    throw Error("DescriptorMismatch", "group element must be " + std::to_string(g.g.rows()) + "x" +
                                          std::to_string(g.g.cols()) + " for " + D.name());
  g.g = M;
  if (!group_valid(g, tol)) throw Error("NotInGroup", "matrix violates the relations of " + g.tag());
  return g;
}

}  // namespace hsm::io
