#ifndef MATGEN_JSON_IO_HPP
#define MATGEN_JSON_IO_HPP

#include <json.hpp>

#include "matgen/classify.hpp"
#include "matgen/genset.hpp"
#include "matgen/independence.hpp"
#include "matgen/suites.hpp"

namespace matgen {

using nlohmann::json;

json matrix_to_json(const Matrix& a);
/// Reads {"field": ..., "rows": [[...], ...]}; `fallback` supplies the field
/// when the object omits it, and must agree when both are present.
Matrix matrix_from_json(const json& j, Field fallback = nullptr);

json matrix_list_to_json(const std::vector<Matrix>& s);
std::vector<Matrix> matrix_list_from_json(const json& j, Field fallback = nullptr);

json subspace_to_json(const Subspace& v);
Subspace subspace_from_json(const json& j, Field fallback = nullptr);
std::vector<Subspace> subspace_list_from_json(const json& j, Field fallback = nullptr);

json span_basis_to_json(const SpanBasis& b);

json record_to_json(const TransformRecord& t);
TransformRecord record_from_json(const json& j, Field fallback = nullptr);

json shape_to_json(const BlockShape& s);
BlockShape shape_from_json(const json& j);

json witness_to_json(const IndepResult& r);
json suite_report_to_json(const SuiteReport& rep, bool with_timing);
json dim_report_to_json(const DimReport& rep);
json classification3_to_json(const Classification3& c);

} // namespace matgen

#endif
