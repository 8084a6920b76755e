#include "matgen/json_io.hpp"

namespace matgen {

namespace {

Field field_from_json(const json& j, Field fallback, const char* what) {
  if (j.is_object() && j.contains("field")) {
    Field f = parse_field(j.at("field").get<std::string>());
    require(fallback == nullptr || fallback == f, Err::FieldMismatch,
            std::string(what) + ": field disagrees with the requested one");
    return f;
  }
  require(fallback != nullptr, Err::BadInput, std::string(what) + ": no field given");
  return fallback;
}

} // namespace

json matrix_to_json(const Matrix& a) {
  json rows = json::array();
  for (int i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return json{{"field", a.field()->to_string()}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const json& j, Field fallback) {
  require(j.is_object() && j.contains("rows"), Err::BadInput, "matrix JSON needs a rows array");
  Field f = field_from_json(j, fallback, "matrix");
  const json& rows = j.at("rows");
  require(rows.is_array() && !rows.empty(), Err::BadInput, "matrix rows must be nonempty");
  std::vector<Vec> grid;
  for (const json& row : rows) {
    require(row.is_array() && !row.empty(), Err::BadInput, "matrix row must be a nonempty array");
    Vec v;
    for (const json& cell : row) v.push_back(parse_scalar(cell.get<std::string>(), f));
    grid.push_back(std::move(v));
  }
  return Matrix::from_rows(f, grid);
}

json matrix_list_to_json(const std::vector<Matrix>& s) {
  json out = json::array();
  for (const Matrix& a : s) out.push_back(matrix_to_json(a));
  return out;
}

std::vector<Matrix> matrix_list_from_json(const json& j, Field fallback) {
  require(j.is_array(), Err::BadInput, "expected an array of matrix objects");
  std::vector<Matrix> out;
  for (const json& item : j) out.push_back(matrix_from_json(item, fallback));
  return out;
}

json subspace_to_json(const Subspace& v) {
  json basis = json::array();
  for (const Vec& row : v.basis()) {
    json r = json::array();
    for (const Scalar& x : row) r.push_back(x.to_string());
    basis.push_back(std::move(r));
  }
  return json{{"field", v.field()->to_string()}, {"n", v.ambient()}, {"basis", std::move(basis)}};
}

Subspace subspace_from_json(const json& j, Field fallback) {
  require(j.is_object() && j.contains("n") && j.contains("basis"), Err::BadInput,
          "subspace JSON needs n and basis");
  Field f = field_from_json(j, fallback, "subspace");
  int n = j.at("n").get<int>();
  std::vector<Vec> rows;
  for (const json& row : j.at("basis")) {
    Vec v;
    for (const json& cell : row) v.push_back(parse_scalar(cell.get<std::string>(), f));
    rows.push_back(std::move(v));
  }
  return Subspace::from_spanning(f, n, rows);
}

std::vector<Subspace> subspace_list_from_json(const json& j, Field fallback) {
  require(j.is_array(), Err::BadInput, "expected an array of subspace objects");
  std::vector<Subspace> out;
  for (const json& item : j) out.push_back(subspace_from_json(item, fallback));
  return out;
}

json span_basis_to_json(const SpanBasis& b) {
  return json{{"field", b.field()->to_string()},
              {"n", b.n()},
              {"dim", b.dim()},
              {"closed_under_mult", b.closed_under_mult},
              {"contains_identity", b.contains_identity},
              {"basis", matrix_list_to_json(b.basis())}};
}

json record_to_json(const TransformRecord& t) {
  json affine = json::array();
  for (const AffinePair& p : t.affine)
    affine.push_back(json::array({p.scale.to_string(), p.shift.to_string()}));
  return json{{"order", "permute,affine,transpose,conjugate"},
              {"permutation", t.perm},
              {"affine", std::move(affine)},
              {"transpose", t.transposed},
              {"conjugator", matrix_to_json(t.conjugator)}};
}

TransformRecord record_from_json(const json& j, Field fallback) {
  require(j.is_object(), Err::BadInput, "record JSON must be an object");
  TransformRecord t;
  t.conjugator = matrix_from_json(j.at("conjugator"), fallback);
  Field f = t.conjugator.field();
  t.transposed = j.value("transpose", false);
  for (const json& p : j.at("permutation")) t.perm.push_back(p.get<int>());
  for (const json& p : j.at("affine")) {
    require(p.is_array() && p.size() == 2, Err::BadInput, "affine entries are [scale, shift]");
    t.affine.push_back(AffinePair{parse_scalar(p[0].get<std::string>(), f),
                                  parse_scalar(p[1].get<std::string>(), f)});
  }
  require(t.perm.size() == t.affine.size(), Err::BadInput,
          "permutation and affine lists must have equal length");
  return t;
}

json shape_to_json(const BlockShape& s) {
  json blocks = json::array();
  for (auto [r, k] : s.blocks) blocks.push_back(json::array({r, k}));
  return json{{"blocks", std::move(blocks)}};
}

BlockShape shape_from_json(const json& j) {
  require(j.is_object() && j.contains("blocks"), Err::BadInput,
          "block shape JSON needs a blocks array");
  BlockShape s;
  for (const json& b : j.at("blocks")) {
    require(b.is_array() && b.size() == 2, Err::BadInput, "blocks entries are [r, k]");
    s.blocks.emplace_back(b[0].get<int>(), b[1].get<int>());
  }
  s.validate();
  return s;
}

json witness_to_json(const IndepResult& r) {
  json out{{"independent", r.independent}};
  if (r.independent) {
    out["witnesses"] = matrix_list_to_json(r.witness.movers);
    out["invertible"] = r.witness.invertible;
  }
  return out;
}

json suite_report_to_json(const SuiteReport& rep, bool with_timing) {
  json out{{"suite", rep.suite},
           {"field", rep.field},
           {"families_scanned", rep.families_scanned},
           {"independent_found", rep.independent_found},
           {"pattern1", rep.pattern1_count},
           {"pattern2", rep.pattern2_count},
           {"violations", rep.violations},
           {"witness_samples", rep.witness_samples},
           {"violation_samples", rep.violation_samples},
           {"passed", rep.passed()}};
  if (rep.independence_number >= 0) out["independence_number"] = rep.independence_number;
  for (const auto& [key, value] : rep.extra) out[key] = value;
  if (with_timing) out["elapsed_ms"] = rep.elapsed_ms;
  return out;
}

json dim_report_to_json(const DimReport& rep) {
  json out{{"case", rep.which},
           {"centralizer_dim", rep.centralizer_dim},
           {"dim_I", rep.dim_I},
           {"dim_Z", rep.dim_Z_val}};
  if (rep.has_alpha) out["alpha"] = rep.alpha.to_string();
  return out;
}

json classification3_to_json(const Classification3& c) {
  json reachable = json::array();
  for (const Scalar& a : c.reachable) reachable.push_back(a.to_string());
  json witnesses = json::array();
  for (const Subspace& v : c.witnesses) witnesses.push_back(subspace_to_json(v));
  return json{{"alpha", c.alpha.to_string()},
              {"reachable", std::move(reachable)},
              {"record", record_to_json(c.record)},
              {"witnesses", std::move(witnesses)}};
}

} // namespace matgen
