// Command-line front end: builds the bicirculant and dihedral algebras,
// runs filtrations and length searches, and emits reproduction tables.
//
// Exit codes: 0 = computed values match expectations, 1 = usage or
// configuration error, 2 = a computed value contradicts an expected one.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "alglen/alglen.hpp"

namespace {

using alglen::FieldDesc;
using Json = alglen::Json;

constexpr std::int64_t kDefaultBudget = std::int64_t{1} << 20;

struct OutputOpts {
  std::string format = "text";
  std::string out;
};

void render_text(const Json& j, std::ostream& os, const std::string& prefix) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      render_text(value, os, prefix + key + ".");
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      for (std::size_t i = 0; i < value.size(); ++i) {
        render_text(value[i], os, prefix + key + "[" + std::to_string(i) + "].");
      }
    } else {
      os << prefix << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump())
         << "\n";
    }
  }
}

std::string render_csv_value(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string joined;
    for (const auto& x : v) {
      if (!joined.empty()) joined += ";";
      joined += render_csv_value(x);
    }
    return joined;
  }
  return v.dump();
}

void render_csv(const Json& j, std::ostream& os) {
  std::string header, row;
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() || (value.is_array() && !value.empty() && value[0].is_object())) {
      continue;  // nested reports are json/text-only
    }
    if (!header.empty()) {
      header += ",";
      row += ",";
    }
    header += key;
    row += render_csv_value(value);
  }
  os << header << "\n" << row << "\n";
}

int emit(const Json& j, const OutputOpts& opts, const std::string& csv_override = "") {
  std::ostringstream body;
  if (opts.format == "json") {
    body << j.dump(2) << "\n";
  } else if (opts.format == "csv") {
    if (!csv_override.empty()) {
      body << csv_override;
    } else {
      render_csv(j, body);
    }
  } else {
    render_text(j, body, "");
  }
  if (opts.out.empty()) {
    std::cout << body.str();
    return 0;
  }
  std::ofstream f(opts.out, std::ios::binary);
  if (!f || !(f << body.str()) || !f.flush()) {
    std::cerr << "error: cannot write output file '" << opts.out << "'\n";
    return 1;
  }
  return 0;
}

template <alglen::FieldCtx F>
Json witness_json(const F& f, const alglen::Algebra<F>& alg,
                  const alglen::LengthSearchResult<F>& r) {
  Json w = Json::array();
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    Json entry;
    if (i < r.witness_indices.size()) entry["index"] = r.witness_indices[i];
    entry["element"] = alg.format_element(r.witness[i]);
    entry["coords"] = alglen::vec_to_json(f, r.witness[i]);
    w.push_back(std::move(entry));
  }
  return w;
}

int run_bicirc(int n, const std::string& field_spec, const OutputOpts& opts) {
  const FieldDesc desc = FieldDesc::parse(field_spec);
  return alglen::with_field(desc, [&](auto f) -> int {
    using F = decltype(f);
    auto [a, b] = alglen::bicirculant_generators(n, f);
    const auto e = alglen::Matrix<F>::identity(f, n);
    const bool relations_ok = a.pow(n) == e && b.mul(b) == e &&
                              a.mul(b) == b.mul(a.pow(n - 1));
    auto cn = alglen::bicirculant_algebra(n, f);
    const int dim_expected = n % 2 == 1 ? 2 * n - 1 : 2 * n - 2;
    alglen::GeneratingSet<F> s{&cn.algebra,
                               {*cn.express(b), *cn.express(a.mul(b))}};
    auto report = alglen::filtrate(s);
    const int l_expected = n - 1;
    Json j;
    j["command"] = "bicirc";
    j["n"] = n;
    j["field"] = desc.str();
    j["dim"] = cn.algebra.dim();
    j["dim_expected"] = dim_expected;
    j["relations_ok"] = relations_ok;
    j["l_bab"] = report.length ? Json(*report.length) : Json(nullptr);
    j["l_expected"] = l_expected;
    Json jumps = Json::array();
    if (report.generates) {
      for (int d : alglen::dim_jump_profile(report)) jumps.push_back(d);
    }
    j["jumps"] = std::move(jumps);
    j["m_upper"] = std::min(cn.algebra.dim(), n);
    const bool ok = relations_ok && cn.algebra.dim() == dim_expected &&
                    report.generates && *report.length == l_expected;
    j["ok"] = ok;
    int rc = emit(j, opts);
    if (rc != 0) return rc;
    if (!ok) {
      std::cerr << "MISMATCH: bicirculant values disagree with the expected "
                   "dimension/length formulas\n";
      return 2;
    }
    return 0;
  });
}

int run_dihedral(int n, const std::string& field_spec, std::int64_t trials,
                 std::uint64_t seed, std::int64_t budget,
                 const OutputOpts& opts) {
  const FieldDesc desc = FieldDesc::parse(field_spec);
  return alglen::with_field(desc, [&](auto f) -> int {
    using F = decltype(f);
    auto rep = alglen::bicirculant_representation(n, f);
    const alglen::Algebra<F>& fdn = rep.domain;
    auto ker = alglen::representation_kernel(rep);
    const int ker_expected = n % 2 == 1 ? 1 : 2;
    const int dim_cn = n % 2 == 1 ? 2 * n - 1 : 2 * n - 2;
    const int upper = alglen::surjection_bound(n - 1, 2 * n, dim_cn);

    // deterministic witness {b, ab} first, then the sampled search
    alglen::Vec<F> gen_b = fdn.basis_vec(n);
    alglen::Vec<F> gen_ab = fdn.mul(fdn.basis_vec(1), fdn.basis_vec(n));
    alglen::GeneratingSet<F> s{&fdn, {gen_b, gen_ab}};
    auto det_report = alglen::filtrate(s);
    std::optional<int> best =
        det_report.generates ? det_report.length : std::nullopt;
    auto sampled = alglen::algebra_length_sampled(fdn, trials, 2, 3, seed);
    if (sampled.best && (!best || *sampled.best > *best)) best = sampled.best;

    std::optional<int> m_exact;
    bool m_ok = true;
    if (f.size()) {
      try {
        m_exact = alglen::m_by_enumeration(fdn, budget, n).degree;
        m_ok = *m_exact <= alglen::mdn_bound(n);
      } catch (const alglen::BudgetExceeded&) {
      }
    }

    Json j;
    j["command"] = "dihedral";
    j["n"] = n;
    j["field"] = desc.str();
    j["dim_fdn"] = fdn.dim();
    j["dim_cn"] = dim_cn;
    j["kernel_dim"] = ker.dim();
    j["kernel_dim_expected"] = ker_expected;
    j["l_deterministic"] =
        det_report.length ? Json(*det_report.length) : Json(nullptr);
    j["l_lower_bestfound"] = best ? Json(*best) : Json(nullptr);
    j["l_upper"] = upper;
    j["m_exact"] = m_exact ? Json(*m_exact) : Json(nullptr);
    j["mdn_upper"] = alglen::mdn_bound(n);
    j["trials"] = trials;
    j["seed"] = seed;
    const bool ok = ker.dim() == ker_expected && best && *best <= upper && m_ok;
    j["ok"] = ok;
    int rc = emit(j, opts);
    if (rc != 0) return rc;
    if (!ok) {
      std::cerr << "MISMATCH: dihedral group algebra values contradict the "
                   "expected kernel/length/minimal-polynomial bounds\n";
      return 2;
    }
    return 0;
  });
}

struct ScanRange {
  int lo = 0, hi = -1;  // empty when hi < lo
};

ScanRange parse_range(const std::string& s) {
  ScanRange r;
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s);
    } else {
      r.lo = std::stoi(s.substr(0, dots));
      r.hi = std::stoi(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw alglen::ParseError("bad range '" + s + "' (expected A..B)");
  }
  return r;
}

constexpr const char* kScanHeader =
    "n,dim_cn,l_cn_lower,ldm_cn,pappacena_cn,dim_fdn,kernel_dim,"
    "l_fdn_lower,l_fdn_upper,m_fdn_lower,m_fdn_upper";

int run_scan(const std::string& range_spec, const std::string& field_spec,
             std::int64_t budget, const OutputOpts& opts) {
  const ScanRange range = parse_range(range_spec);
  const FieldDesc desc = FieldDesc::parse(field_spec);
  return alglen::with_field(desc, [&](auto f) -> int {
    using F = decltype(f);
    std::ostringstream csv;
    csv << kScanHeader << "\n";
    Json rows = Json::array();
    bool ok = true;
    for (int n = std::max(3, range.lo); n <= range.hi; ++n) {
      auto cn = alglen::bicirculant_algebra(n, f);
      auto [a, b] = alglen::bicirculant_generators(n, f);
      alglen::GeneratingSet<F> s{&cn.algebra,
                                 {*cn.express(b), *cn.express(a.mul(b))}};
      auto c_report = alglen::filtrate(s);
      const int l_cn = c_report.length.value_or(-1);
      auto rep = alglen::bicirculant_representation(n, f);
      auto ker = alglen::representation_kernel(rep);
      alglen::Vec<F> gen_b = rep.domain.basis_vec(n);
      alglen::Vec<F> gen_ab =
          rep.domain.mul(rep.domain.basis_vec(1), rep.domain.basis_vec(n));
      alglen::GeneratingSet<F> sd{&rep.domain, {gen_b, gen_ab}};
      auto d_report = alglen::filtrate(sd);
      const int l_fdn_lower = d_report.length.value_or(-1);
      const int l_fdn_upper =
          alglen::surjection_bound(l_cn, 2 * n, cn.algebra.dim());
      std::optional<int> m_exact;
      if (f.size()) {
        try {
          m_exact = alglen::m_by_enumeration(rep.domain, budget, n).degree;
        } catch (const alglen::BudgetExceeded&) {
        }
      }
      ok = ok && l_cn == n - 1 && l_fdn_lower >= 0 &&
           l_fdn_lower <= l_fdn_upper &&
           (!m_exact || *m_exact <= alglen::mdn_bound(n));
      Json row;
      row["n"] = n;
      row["dim_cn"] = cn.algebra.dim();
      row["l_cn_lower"] = l_cn;
      row["ldm_cn"] = alglen::ldm_bound(cn.algebra.dim(), n);
      row["pappacena_cn"] = alglen::pappacena_bound(cn.algebra.dim(), n);
      row["dim_fdn"] = 2 * n;
      row["kernel_dim"] = ker.dim();
      row["l_fdn_lower"] = l_fdn_lower;
      row["l_fdn_upper"] = l_fdn_upper;
      row["m_fdn_lower"] = m_exact ? Json(*m_exact) : Json(nullptr);
      row["m_fdn_upper"] =
          m_exact ? Json(*m_exact) : Json(alglen::mdn_bound(n));
      csv << n << "," << cn.algebra.dim() << "," << l_cn << ","
          << alglen::ldm_bound(cn.algebra.dim(), n) << ","
          << alglen::pappacena_bound(cn.algebra.dim(), n) << "," << 2 * n
          << "," << ker.dim() << "," << l_fdn_lower << "," << l_fdn_upper
          << "," << (m_exact ? std::to_string(*m_exact) : std::string()) << ","
          << (m_exact ? std::to_string(*m_exact)
                      : std::to_string(alglen::mdn_bound(n)))
          << "\n";
      rows.push_back(std::move(row));
    }
    Json j;
    j["command"] = "scan";
    j["field"] = desc.str();
    j["rows"] = std::move(rows);
    j["ok"] = ok;
    OutputOpts effective = opts;
    if (effective.format == "text") effective.format = "csv";  // scan is a table
    int rc = emit(j, effective, csv.str());
    if (rc != 0) return rc;
    return ok ? 0 : 2;
  });
}

int run_exhaustive(const std::string& builtin, const std::string& spec_file,
                   const std::string& field_spec, std::optional<int> max_card,
                   std::int64_t budget, const OutputOpts& opts) {
  FieldDesc desc = FieldDesc::rationals();
  Json file_json;
  if (!spec_file.empty()) {
    std::ifstream in(spec_file);
    if (!in) {
      std::cerr << "error: cannot read spec file '" << spec_file << "'\n";
      return 1;
    }
    try {
      file_json = Json::parse(in);
      desc = alglen::algebra_json_field(file_json);
    } catch (const std::exception& e) {
      std::cerr << "error: bad algebra file '" << spec_file << "': " << e.what()
                << "\n";
      return 1;
    }
  } else {
    desc = FieldDesc::parse(field_spec);
  }
  return alglen::with_field(desc, [&](auto f) -> int {
    using F = decltype(f);
    std::optional<alglen::Algebra<F>> alg;
    std::optional<int> expected;
    std::string name = builtin;
    if (!spec_file.empty()) {
      alg = alglen::algebra_from_json(f, file_json);
      name = spec_file;
    } else {
      if (builtin.size() < 2) throw alglen::ParseError("bad builtin name");
      const int n = std::stoi(builtin.substr(1));
      switch (builtin[0]) {
        case 'c':
          alg = alglen::bicirculant_algebra(n, f).algebra;
          expected = n - 1;
          break;
        case 'd':
          alg = alglen::group_algebra(alglen::dihedral_group(n), f);
          if (n % 2 == 1) expected = n;
          break;
        case 'm':
          alg = alglen::full_matrix_algebra(n, f).algebra;
          if (n == 2) expected = 2;
          break;
        default:
          throw alglen::ParseError("unknown builtin '" + builtin +
                                   "' (expected c<n>, d<n> or m<k>)");
      }
    }
    const int cap = max_card.value_or(alg->dim());
    auto result = alglen::algebra_length_exhaustive(*alg, cap, budget);
    Json j;
    j["command"] = "exhaustive";
    j["algebra"] = name;
    j["field"] = desc.str();
    j["dim"] = alg->dim();
    j["max_card"] = cap;
    j["budget"] = budget;
    j["l"] = result.best ? Json(*result.best) : Json(nullptr);
    j["l_expected"] = expected ? Json(*expected) : Json(nullptr);
    j["subsets_examined"] = result.subsets_examined;
    j["witness"] = witness_json(f, *alg, result);
    const bool ok = !expected || (result.best && *result.best == *expected);
    j["ok"] = ok;
    int rc = emit(j, opts);
    if (rc != 0) return rc;
    if (!ok) {
      std::cerr << "MISMATCH: exhaustive length disagrees with the expected "
                   "value\n";
      return 2;
    }
    return 0;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"length invariants of finite-dimensional associative algebras"};
  app.require_subcommand(1);

  OutputOpts opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", opts.out, "write output to a file instead of stdout");

  int n = 0;
  std::string field;
  std::string range;
  std::int64_t trials = 10000;
  std::uint64_t seed = 1;
  std::int64_t budget = kDefaultBudget;
  std::string builtin;
  std::string spec_file;
  int max_card = 0;

  auto* bicirc = app.add_subcommand("bicirc", "bicirculant algebra checks");
  bicirc->add_option("--n", n, "matrix size")->required()->check(CLI::Range(3, 64));
  bicirc->add_option("--field", field, "q or f<p>")->required();

  auto* dihedral =
      app.add_subcommand("dihedral", "dihedral group algebra checks");
  dihedral->add_option("--n", n, "dihedral index")->required()->check(CLI::Range(3, 64));
  dihedral->add_option("--field", field, "q or f<p>")->required();
  dihedral->add_option("--trials", trials, "sampled-search trials")
      ->capture_default_str();
  dihedral->add_option("--seed", seed, "sampled-search seed")
      ->capture_default_str();
  dihedral->add_option("--budget", budget, "element-enumeration budget")
      ->capture_default_str();

  auto* scan = app.add_subcommand("scan", "table over a range of n");
  scan->add_option("--n", range, "range A..B")->required();
  scan->add_option("--field", field, "q or f<p>")->required();
  scan->add_option("--budget", budget, "element-enumeration budget")
      ->capture_default_str();

  auto* exhaustive =
      app.add_subcommand("exhaustive", "exact l(A) by subset enumeration");
  auto* opt_builtin = exhaustive->add_option(
      "--algebra", builtin, "builtin algebra: c<n>, d<n> or m<k>");
  auto* opt_file =
      exhaustive->add_option("--spec-file", spec_file, "algebra file (json)");
  exhaustive->add_option("--field", field, "q or f<p> (builtin only)");
  exhaustive->add_option("--max-card", max_card,
                         "cap on generating-set cardinality (default dim A)");
  exhaustive->add_option("--budget", budget, "subset budget")
      ->capture_default_str();
  opt_builtin->excludes(opt_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // --help exits 0, bad usage exits 1
  }

  try {
    if (bicirc->parsed()) return run_bicirc(n, field, opts);
    if (dihedral->parsed()) {
      return run_dihedral(n, field, trials, seed, budget, opts);
    }
    if (scan->parsed()) return run_scan(range, field, budget, opts);
    if (exhaustive->parsed()) {
      if (builtin.empty() && spec_file.empty()) {
        std::cerr << "error: exhaustive needs --algebra or --spec-file\n";
        return 1;
      }
      if (spec_file.empty() && field.empty()) {
        std::cerr << "error: builtin algebras need --field\n";
        return 1;
      }
      return run_exhaustive(builtin, spec_file, field,
                            max_card > 0 ? std::optional<int>(max_card)
                                         : std::nullopt,
                            budget, opts);
    }
  } catch (const alglen::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const alglen::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
