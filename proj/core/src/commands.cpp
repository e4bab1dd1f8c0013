#include "bht/commands.hpp"

#include "bht/output.hpp"
#include "bht/verifier.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace bht {

namespace {

using json = nlohmann::json;  // std::map keys => sorted, stable serialization

constexpr const char* kSchemaVersion = "bht-1";

json surd_node(const QuadSurd& x, int digits) {
  return json{{"surd", x.to_string()}, {"decimal", x.eval(digits)}};
}

json real_node(Real v, int digits) { return decimal_string(v, digits); }

json solution_node(const RadiiSolution& sol, int digits) {
  json entries = json::array();
  for (const auto& e : sol.squared_radii) {
    json entry;
    entry["label"] = e.label;
    entry["multiplicity"] = e.multiplicity;
    entry["b"] = surd_node(e.value, digits);
    entry["radius_decimal"] = decimal_string(std::sqrt(e.value.to_real()), digits);
    entries.push_back(std::move(entry));
  }
  json node;
  node["family"] = to_string(sol.params.family);
  node["n"] = sol.params.n;
  node["p"] = sol.params.p;
  node["q"] = sol.params.q;
  node["branch"] = to_string(sol.branch);
  node["proper"] = sol.proper;
  node["exact"] = sol.exact;
  node["squared_radii"] = std::move(entries);
  node["d"] = surd_node(sol.d, digits);
  node["t"] = sol.t ? surd_node(*sol.t, digits) : json(nullptr);
  return node;
}

json oracle_node(const OracleReport& rep, int digits) {
  json node;
  node["oracle"] = to_string(rep.oracle);
  node["samples"] = rep.samples;
  node["seed"] = rep.seed;
  node["max_residual"] = real_node(rep.max_residual, digits);
  node["max_tangential"] = real_node(rep.max_tangential, digits);
  node["max_normal"] = real_node(rep.max_normal, digits);
  node["step_consistency"] = real_node(rep.max_consistency, digits);
  node["verdict"] = to_string(rep.verdict);
  return node;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_rows_csv(const std::vector<std::string>& header,
                            const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_escape(header[i]);
  os << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
    os << "\n";
  }
  return os.str();
}

std::string render_rows_md(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  os << "|";
  for (const auto& h : header) os << " " << h << " |";
  os << "\n|";
  for (size_t i = 0; i < header.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& row : rows) {
    os << "|";
    for (const auto& cell : row) os << " " << cell << " |";
    os << "\n";
  }
  return os.str();
}

std::string cell(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

/// Flat table view of the command-specific payload, for csv/md renderings.
std::pair<std::vector<std::string>, std::vector<std::vector<std::string>>> tabulate(
    const json& doc) {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  const std::string command = doc.at("command");
  const json& results = doc.at("results");

  if (command == "solve") {
    header = {"family", "n",     "p",      "q",         "branch",        "proper",
              "label",  "mult",  "b_surd", "b_decimal", "radius_decimal"};
    for (const json& sol : results.at("solutions"))
      for (const json& e : sol.at("squared_radii"))
        rows.push_back({cell(sol.at("family")), cell(sol.at("n")), cell(sol.at("p")),
                        cell(sol.at("q")), cell(sol.at("branch")), cell(sol.at("proper")),
                        cell(e.at("label")), cell(e.at("multiplicity")),
                        cell(e.at("b").at("surd")), cell(e.at("b").at("decimal")),
                        cell(e.at("radius_decimal"))});
  } else if (command == "verify") {
    header = {"family", "n", "p", "q", "oracle", "samples", "max_residual", "step_consistency",
              "verdict"};
    for (const json& inst : results.at("instances"))
      for (const json& o : inst.at("oracles"))
        rows.push_back({cell(inst.at("family")), cell(inst.at("n")), cell(inst.at("p")),
                        cell(inst.at("q")), cell(o.at("oracle")), cell(o.at("samples")),
                        cell(o.at("max_residual")), cell(o.at("step_consistency")),
                        cell(o.at("verdict"))});
  } else if (command == "table") {
    if (results.contains("rows") && results.at("rows").size() > 0 &&
        results.at("rows")[0].contains("endorsed")) {
      header = {"p", "q", "r_sq", "s_sq", "criterion_residual", "variant_residual",
                "oracle_stored", "oracle_criterion", "endorsed"};
      for (const json& r : results.at("rows"))
        rows.push_back({cell(r.at("p")), cell(r.at("q")), cell(r.at("stored_r_sq").at("surd")),
                        cell(r.at("stored_s_sq").at("surd")), cell(r.at("criterion_residual")),
                        cell(r.at("variant_residual")),
                        cell(r.at("oracle_stored").at("verdict")),
                        cell(r.at("oracle_criterion").at("verdict")), cell(r.at("endorsed"))});
    } else {
      header = {"p", "q", "r_sq", "s_sq", "exact_match", "max_residual"};
      for (const json& r : results.at("rows"))
        rows.push_back({cell(r.at("p")), cell(r.at("q")), cell(r.at("stored_r_sq").at("surd")),
                        cell(r.at("stored_s_sq").at("surd")), cell(r.at("exact_match")),
                        cell(r.at("max_residual"))});
    }
  } else if (command == "stability") {
    header = {"n", "p", "q", "branch", "closed_form", "numeric", "relative_agreement",
              "sign_verdict"};
    for (const json& r : results.at("reports"))
      rows.push_back({cell(r.at("n")), cell(r.at("p")), cell(r.at("q")), cell(r.at("branch")),
                      cell(r.at("closed_form").at("decimal")), cell(r.at("numeric")),
                      cell(r.at("relative_agreement")), cell(r.at("sign_verdict"))});
  }
  return {header, rows};
}

CommandResult finish(json doc, const std::string& format, int exit_code) {
  CommandResult out;
  out.exit_code = exit_code;
  if (format == "json") {
    out.output = doc.dump(2) + "\n";
  } else if (format == "csv" || format == "md") {
    auto [header, rows] = tabulate(doc);
    out.output = format == "csv" ? render_rows_csv(header, rows) : render_rows_md(header, rows);
  } else {
    throw std::invalid_argument("unknown format " + format);
  }
  return out;
}

CommandResult error_result(const std::string& command, const std::string& message) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["error"] = message;
  return {kExitUsage, doc.dump(2) + "\n"};
}

VerifyOptions options_from(std::uint64_t seed, int samples, std::optional<double> tolerance) {
  VerifyOptions opts;
  opts.seed = seed;
  opts.samples = samples;
  if (tolerance) {
    opts.pass_tol = static_cast<Real>(*tolerance);
    opts.fail_tol = opts.pass_tol * 100;
  }
  return opts;
}

json tolerances_node(const VerifyOptions& opts, int digits) {
  json node;
  node["pass"] = real_node(opts.pass_tol, digits);
  node["fail"] = real_node(opts.fail_tol, digits);
  node["parallel_h"] = real_node(opts.parallel_h_tol, digits);
  return node;
}

}  // namespace

CommandResult cmd_solve(const SolveSpec& spec) {
  const int digits = configured_digits();
  try {
    auto family = family_from_string(spec.family);
    if (!family) return error_result("solve", "unknown family " + spec.family);
    if (spec.p.has_value() != spec.q.has_value())
      return error_result("solve", "p and q must be given together");

    std::optional<Branch> branch;
    if (spec.branch) {
      branch = branch_from_string(*spec.branch);
      if (!branch) return error_result("solve", "unknown branch " + *spec.branch);
    }

    std::vector<RadiiSolution> solutions;
    std::optional<QuadSurd> discriminant;
    if (spec.p) {
      FamilyParams params{*family, spec.n, *spec.p, *spec.q};
      params.require_valid();
      SolveOutput solved = solve_family(params);
      solutions = std::move(solved.solutions);
      discriminant = solved.discriminant;
    } else {
      int pq_sum = *family == Family::CpnHypersurface ? spec.n - 1 : spec.n + 1;
      int p_min = *family == Family::CpnHypersurface ? 0 : 1;
      for (int p = p_min; 2 * p <= pq_sum; ++p) {
        FamilyParams params{*family, spec.n, p, pq_sum - p};
        if (!params.valid()) continue;
        for (auto& sol : solve_family(params).solutions)
          if (sol.proper) solutions.push_back(std::move(sol));
      }
    }
    if (branch) {
      std::erase_if(solutions, [&](const RadiiSolution& s) { return s.branch != *branch; });
    }

    int proper_count = 0;
    json list = json::array();
    for (const auto& sol : solutions) {
      proper_count += sol.proper ? 1 : 0;
      list.push_back(solution_node(sol, digits));
    }

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "solve";
    doc["params"] = {{"family", spec.family},
                     {"n", spec.n},
                     {"p", spec.p ? json(*spec.p) : json(nullptr)},
                     {"q", spec.q ? json(*spec.q) : json(nullptr)},
                     {"branch", spec.branch ? json(*spec.branch) : json(nullptr)}};
    doc["results"]["solutions"] = std::move(list);
    doc["results"]["proper_count"] = proper_count;
    if (discriminant) doc["results"]["discriminant"] = surd_node(*discriminant, digits);
    return finish(std::move(doc), spec.format, proper_count > 0 ? kExitOk : kExitNoProper);
  } catch (const std::exception& e) {
    return error_result("solve", e.what());
  }
}

namespace {

std::vector<FamilyInstance> verify_instances(const VerifySpec& spec, Family family, json& params,
                                             int digits) {
  std::vector<FamilyInstance> instances;
  if (spec.radii) {
    FamilyInstance inst;
    if (family == Family::CpnHypersurface) {
      if (!spec.p || !spec.q) throw std::invalid_argument("hypersurface radii need p and q");
      if (spec.radii->size() != 2) throw std::invalid_argument("expected two radii (r, s)");
      inst.params = {family, spec.n, *spec.p, *spec.q};
    } else {
      if (static_cast<int>(spec.radii->size()) != spec.n + 1)
        throw std::invalid_argument("expected n+1 radii");
      inst.params = {family, spec.n, spec.p.value_or(1), spec.q.value_or(spec.n)};
    }
    inst.params.require_valid();
    Real norm_sq = 0;
    for (double a : *spec.radii) {
      if (a <= 0) throw std::invalid_argument("radii must be positive");
      norm_sq += static_cast<Real>(a) * static_cast<Real>(a);
    }
    json normalized = json::array();
    for (double a : *spec.radii) {
      Real b = static_cast<Real>(a) * static_cast<Real>(a) / norm_sq;
      inst.squared_radii.push_back({b, 1});
      normalized.push_back(decimal_string(std::sqrt(b), digits));
    }
    params["radii_normalized"] = std::move(normalized);
    instances.push_back(std::move(inst));
    return instances;
  }

  if (!spec.p || !spec.q)
    throw std::invalid_argument("verify needs either explicit radii or p and q");
  FamilyParams fp{family, spec.n, *spec.p, *spec.q};
  fp.require_valid();
  std::optional<Branch> branch;
  if (spec.branch) branch = branch_from_string(*spec.branch);
  for (const auto& sol : solve_family(fp).solutions) {
    if (branch && sol.branch != *branch) continue;
    instances.push_back(instance_of(sol));
  }
  if (instances.empty()) throw std::invalid_argument("no solutions for the requested branch");
  return instances;
}

}  // namespace

CommandResult cmd_verify(const VerifySpec& spec) {
  const int digits = configured_digits();
  try {
    auto family = family_from_string(spec.family);
    if (!family) return error_result("verify", "unknown family " + spec.family);
    VerifyOptions opts = options_from(spec.seed, spec.samples, spec.tolerance);

    std::set<Oracle> oracles;
    if (spec.oracles.empty()) {
      oracles = {Oracle::Algebraic, Oracle::SphereFD};
      if (*family != Family::SphereFlatTorus) oracles.insert(Oracle::CpnFD);
    } else {
      for (const auto& name : spec.oracles) {
        auto o = oracle_from_string(name);
        if (!o) return error_result("verify", "unknown oracle " + name);
        oracles.insert(*o);
      }
    }

    json params = {{"family", spec.family},
                   {"n", spec.n},
                   {"p", spec.p ? json(*spec.p) : json(nullptr)},
                   {"q", spec.q ? json(*spec.q) : json(nullptr)},
                   {"samples", spec.samples}};
    std::vector<FamilyInstance> instances = verify_instances(spec, *family, params, digits);

    Verdict overall = Verdict::Biharmonic;
    json inst_list = json::array();
    for (const FamilyInstance& inst : instances) {
      CompositeReport rep = verify_solution(inst, oracles, opts);
      if (rep.verdict == Verdict::NotBiharmonic) overall = Verdict::NotBiharmonic;
      else if (rep.verdict == Verdict::Inconclusive && overall == Verdict::Biharmonic)
        overall = Verdict::Inconclusive;

      json node;
      node["family"] = to_string(inst.params.family);
      node["n"] = inst.params.n;
      node["p"] = inst.params.p;
      node["q"] = inst.params.q;
      json radii = json::array();
      for (auto [b, mult] : inst.squared_radii)
        radii.push_back({{"b", decimal_string(b, digits)}, {"multiplicity", mult}});
      node["squared_radii"] = std::move(radii);
      json oracle_list = json::array();
      for (const auto& o : rep.oracles) oracle_list.push_back(oracle_node(o, digits));
      node["oracles"] = std::move(oracle_list);
      node["verdict"] = to_string(rep.verdict);
      inst_list.push_back(std::move(node));
    }

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "verify";
    doc["params"] = std::move(params);
    doc["seed"] = spec.seed;
    doc["tolerances"] = tolerances_node(opts, digits);
    doc["results"]["instances"] = std::move(inst_list);
    doc["results"]["verdict"] = to_string(overall);

    int code = overall == Verdict::Biharmonic
                   ? kExitOk
                   : (overall == Verdict::NotBiharmonic ? kExitNotBiharmonic : kExitInconclusive);
    return finish(std::move(doc), spec.format, code);
  } catch (const std::exception& e) {
    return error_result("verify", e.what());
  }
}

CommandResult cmd_table(const TableSpec& spec) {
  const int digits = configured_digits();
  try {
    auto id = table_from_string(spec.id);
    if (!id) return error_result("table", "unknown table " + spec.id);
    VerifyOptions opts = options_from(spec.seed, spec.samples, spec.tolerance);

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "table";
    doc["params"] = {{"id", spec.id}, {"samples", spec.samples}};
    doc["seed"] = spec.seed;

    bool endorsed_as_printed = true;
    json rows = json::array();

    if (*id == TableId::LagrangianN4) {
      TableReconstruction table = reconstruct_table(*id);
      for (const auto& row : table.lagrangian_rows) {
        json node;
        node["p"] = row.stored.p;
        node["q"] = row.stored.q;
        node["stored_r_sq"] = surd_node(row.stored.r_sq, digits);
        node["stored_s_sq"] = surd_node(row.stored.s_sq, digits);
        node["solver"] = solution_node(row.solver, digits);
        node["exact_match"] = row.exact_match;
        Real max_res = 0;
        for (const auto& r : row.residual) max_res = std::max(max_res, std::abs(r.to_real()));
        node["max_residual"] = real_node(max_res, digits);
        endorsed_as_printed &= row.exact_match;
        rows.push_back(std::move(node));
      }
    } else {
      AdjudicationReport adj = adjudicate_hypersurface_table(5, opts);
      doc["tolerances"] = tolerances_node(opts, digits);
      for (const auto& row : adj.rows) {
        json node;
        node["p"] = row.stored.p;
        node["q"] = row.stored.q;
        node["stored_r_sq"] = surd_node(row.stored.r_sq, digits);
        node["stored_s_sq"] = surd_node(row.stored.s_sq, digits);
        node["criterion_residual"] = real_node(row.criterion_residual_stored, digits);
        node["variant_residual"] = real_node(row.variant_residual_stored, digits);
        node["matches_criterion_solver"] = row.matches_criterion_solver;
        node["matches_variant_solver"] = row.matches_variant_solver;
        node["criterion_solution"] = solution_node(row.criterion_solution, digits);
        node["criterion_residual_solved"] = real_node(row.criterion_residual_solved, digits);
        node["oracle_stored"] = oracle_node(row.oracle_stored, digits);
        node["oracle_criterion"] = oracle_node(row.oracle_solved, digits);
        node["endorsed"] = to_string(row.endorsed);
        endorsed_as_printed &= row.endorsed == Endorsement::StoredTable ||
                               row.endorsed == Endorsement::Both;
        rows.push_back(std::move(node));
      }
    }
    doc["results"]["rows"] = std::move(rows);
    doc["results"]["endorsed_as_printed"] = endorsed_as_printed;
    return finish(std::move(doc), spec.format, endorsed_as_printed ? kExitOk : kExitTableMismatch);
  } catch (const std::exception& e) {
    return error_result("table", e.what());
  }
}

CommandResult cmd_stability(const StabilitySpec& spec) {
  const int digits = configured_digits();
  try {
    FamilyParams params{Family::CpnLagrangianTorus, spec.n, spec.p, spec.q};
    params.require_valid();
    std::optional<Branch> branch;
    if (spec.branch) {
      branch = branch_from_string(*spec.branch);
      if (!branch) return error_result("stability", "unknown branch " + *spec.branch);
    }

    VerifyOptions opts;
    opts.seed = spec.seed;
    std::vector<RadiiSolution> chosen;
    for (auto& sol : solve_lagrangian_radii(params).solutions) {
      if (!sol.proper) continue;
      if (branch && sol.branch != *branch) continue;
      chosen.push_back(std::move(sol));
    }
    if (chosen.empty())
      return error_result("stability", "no proper solution for the requested parameters");

    bool all_negative = true;
    json reports = json::array();
    for (const auto& sol : chosen) {
      StabilityReport rep = stability_report(sol, opts);
      all_negative &= rep.numeric_value < 0;
      json node;
      node["n"] = spec.n;
      node["p"] = spec.p;
      node["q"] = spec.q;
      node["branch"] = to_string(sol.branch);
      node["closed_form"] = rep.closed_form_exact
                                ? surd_node(*rep.closed_form_exact, digits)
                                : json{{"decimal", decimal_string(rep.closed_form_value, digits)}};
      node["numeric"] = real_node(rep.numeric_value, digits);
      node["relative_agreement"] = real_node(rep.relative_agreement, digits);
      node["h_norm_sq_residual"] = real_node(rep.h_norm_sq_residual, digits);
      node["sign_verdict"] = rep.sign_verdict;
      reports.push_back(std::move(node));
    }

    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "stability";
    doc["params"] = {{"n", spec.n},
                     {"p", spec.p},
                     {"q", spec.q},
                     {"branch", spec.branch ? json(*spec.branch) : json(nullptr)}};
    doc["seed"] = spec.seed;
    doc["results"]["reports"] = std::move(reports);
    return finish(std::move(doc), spec.format, all_negative ? kExitOk : kExitNotBiharmonic);
  } catch (const std::exception& e) {
    return error_result("stability", e.what());
  }
}

}  // namespace bht
