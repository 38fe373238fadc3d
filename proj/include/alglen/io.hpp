#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "alglen/algebra.hpp"
#include "alglen/bounds.hpp"
#include "alglen/errors.hpp"
#include "alglen/field.hpp"
#include "alglen/length.hpp"

namespace alglen {

using Json = nlohmann::ordered_json;

template <FieldCtx F>
Json vec_to_json(const F& f, const Vec<F>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(f.str(x));
  return a;
}

template <FieldCtx F>
Vec<F> vec_from_json(const F& f, const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of scalars");
  Vec<F> v;
  v.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError("scalars must be strings");
    v.push_back(f.parse(x.get<std::string>()));
  }
  return v;
}

/// Algebra file format: {"field", "dim", "labels", "unit",
/// "structure_constants"} with scalars in the textual syntax of the field.
/// Round-trips losslessly because scalars are kept canonical.
template <FieldCtx F>
Json algebra_to_json(const Algebra<F>& alg) {
  const F& f = alg.field();
  Json j;
  j["field"] = f.desc().str();
  j["dim"] = alg.dim();
  j["labels"] = alg.labels();
  j["unit"] = vec_to_json(f, alg.unit());
  Json table = Json::array();
  for (int i = 0; i < alg.dim(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < alg.dim(); ++k) {
      row.push_back(vec_to_json(f, alg.basis_product(i, k)));
    }
    table.push_back(std::move(row));
  }
  j["structure_constants"] = std::move(table);
  return j;
}

inline FieldDesc algebra_json_field(const Json& j) {
  if (!j.contains("field") || !j["field"].is_string()) {
    throw ParseError("algebra file is missing the field spec");
  }
  return FieldDesc::parse(j["field"].get<std::string>());
}

template <FieldCtx F>
Algebra<F> algebra_from_json(const F& f, const Json& j) {
  if (!(algebra_json_field(j) == f.desc())) {
    throw FieldMismatch("algebra file declares field " +
                        j["field"].get<std::string>());
  }
  const int dim = j.at("dim").get<int>();
  std::vector<std::string> labels =
      j.at("labels").get<std::vector<std::string>>();
  const Json& table_json = j.at("structure_constants");
  if (static_cast<int>(table_json.size()) != dim) {
    throw ParseError("structure_constants must have dim rows");
  }
  std::vector<std::vector<Vec<F>>> table(dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = table_json[i];
    if (static_cast<int>(row.size()) != dim) {
      throw ParseError("structure_constants row has wrong length");
    }
    for (int k = 0; k < dim; ++k) table[i].push_back(vec_from_json(f, row[k]));
  }
  return Algebra<F>::from_structure_constants(
      f, std::move(labels), std::move(table), vec_from_json(f, j.at("unit")));
}

template <FieldCtx F>
Json word_to_json(const Word& w) {
  Json a = Json::array();
  for (int letter : w.letters) a.push_back(letter);
  return a;
}

template <FieldCtx F>
Json filtration_report_to_json(const F& f, const FiltrationReport<F>& report) {
  Json j;
  j["dims"] = report.dims;
  j["generates"] = report.generates;
  if (report.length) {
    j["length"] = *report.length;
  } else {
    j["length"] = nullptr;
  }
  j["stabilized_dim"] = report.stabilized_dim;
  j["truncated"] = report.truncated;
  Json levels = Json::array();
  for (const auto& level : report.new_words) {
    Json words = Json::array();
    for (const auto& w : level) {
      Json entry;
      entry["word"] = word_to_json<F>(w.word);
      entry["coords"] = vec_to_json(f, w.coords);
      words.push_back(std::move(entry));
    }
    levels.push_back(std::move(words));
  }
  j["new_words"] = std::move(levels);
  return j;
}

inline Json bound_report_to_json(const BoundReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["m"] = r.m_value;
  j["m_exact"] = r.m_exact;
  j["ldm"] = r.ldm;
  j["pappacena"] = r.pappacena;
  if (r.markova) {
    j["markova"] = *r.markova;
  } else {
    j["markova"] = nullptr;
  }
  j["tightest"] = r.tightest;
  return j;
}

/// CSV row matching the header "dim,m,ldm,pappacena,markova,tightest";
/// markova is empty when the bound does not apply.
inline std::string bound_report_to_csv_row(const BoundReport& r) {
  std::string row = std::to_string(r.dim) + "," + std::to_string(r.m_value) +
                    "," + std::to_string(r.ldm) + "," +
                    std::to_string(r.pappacena) + ",";
  if (r.markova) row += std::to_string(*r.markova);
  row += "," + r.tightest;
  return row;
}

inline const char* bound_report_csv_header() {
  return "dim,m,ldm,pappacena,markova,tightest";
}

}  // namespace alglen
