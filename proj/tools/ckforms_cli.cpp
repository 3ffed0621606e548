// ckforms command-line tool.
//
// Subcommands:
//   check              verdict for one pair (g, h)
//   survey-split       split-pair survey over the regular subalgebra types
//   survey-candidates  survey over a JSON candidate file
//   info               catalog invariants of an algebra
//   poincare           candidate Poincare polynomial set of a group
//
// Exit codes: 0 success, 1 user-input error, 2 internal invariant violation.
#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ckforms/checker.hpp"
#include "ckforms/version.hpp"

using nlohmann::json;
using namespace ckforms;

namespace {

struct Options {
  std::string format = "text";
  bool verbose = false;
  bool timing = false;
  std::chrono::steady_clock::time_point start;
};

json poly_to_json(const IntPolynomial& p) {
  json arr = json::array();
  for (const Coeff& c : p.coefficients()) arr.push_back(c.convert_to<long long>());
  return arr;
}

json verdict_to_json(const Verdict& v, bool include_polys) {
  json j;
  j["outcome"] = to_string(v.outcome);
  j["d"] = v.d;
  j["rank_g"] = v.rank_g;
  j["rank_h"] = v.rank_h;
  json coeffs = json::array();
  for (const Coeff& c : v.coefficients_at_d) coeffs.push_back(c.convert_to<long long>());
  j["coefficients_at_d"] = coeffs;
  if (include_polys) {
    json polys = json::array();
    for (const auto& p : v.polynomials) polys.push_back(poly_to_json(p));
    j["polynomials"] = polys;
  }
  if (v.sl2_fast_path_agrees)
    j["sl2_fast_path_agrees"] = *v.sl2_fast_path_agrees;
  return j;
}

void emit(const Options& opt, const std::string& command, const json& inputs,
          const json& result, const std::string& text) {
  if (opt.format == "json") {
    json out;
    out["schema_version"] = kJsonSchemaVersion;
    out["tool"] = "ckforms";
    out["version"] = kVersion;
    out["command"] = command;
    out["inputs"] = inputs;
    out["result"] = result;
    if (opt.timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - opt.start)
                    .count();
      out["elapsed_ms"] = ms;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string describe_verdict(const Verdict& v, bool verbose) {
  std::string s = to_string(v.outcome) + "  (d = " + std::to_string(v.d) +
                  ", rank_R g = " + std::to_string(v.rank_g) +
                  ", rank_R h = " + std::to_string(v.rank_h) + ")\n";
  if (v.sl2_fast_path_agrees)
    s += std::string("sl(2,R) fast path agrees: ") +
         (*v.sl2_fast_path_agrees ? "yes" : "no") + "\n";
  if (verbose) {
    for (std::size_t i = 0; i < v.polynomials.size(); ++i)
      s += "  P" + std::to_string(i) + " (degree " +
           std::to_string(v.polynomials[i].degree()) + "): coefficient at " +
           std::to_string(v.d) + " = " + v.coefficients_at_d[i].str() + "\n";
  }
  return s;
}

json survey_to_json(const std::vector<SurveyRow>& rows, bool verbose) {
  json arr = json::array();
  for (const auto& r : rows) {
    if (!verbose && r.verdict.outcome != Outcome::NoCK_Tholozan) continue;
    json row;
    row["h"] = canonical_name(r.h);
    row["verdict"] = verdict_to_json(r.verdict, /*include_polys=*/false);
    arr.push_back(row);
  }
  return arr;
}

std::string survey_to_text(const std::vector<SurveyRow>& rows, bool verbose) {
  std::string s;
  for (const auto& r : rows) {
    if (!verbose && r.verdict.outcome != Outcome::NoCK_Tholozan) continue;
    s += canonical_name(r.h);
    if (verbose) s += "\t" + to_string(r.verdict.outcome);
    s += "\td=" + std::to_string(r.verdict.d) + "\n";
  }
  int kept = 0;
  for (const auto& r : rows)
    kept += r.verdict.outcome == Outcome::NoCK_Tholozan;
  s += "# " + std::to_string(kept) + " pair(s) with no compact Clifford-Klein form";
  if (verbose)
    s += " out of " + std::to_string(rows.size()) + " checked";
  s += "\n";
  return s;
}

SimpleType split_ambient(const std::string& gname, bool allow_nonexceptional) {
  RealSimpleAlgebra g = parse_simple_algebra(gname);
  if (!is_split_form(g))
    throw input_error(gname + " is not a split form");
  const bool exceptional = g.complex_type.family == Family::E ||
                           g.complex_type.family == Family::F ||
                           g.complex_type.family == Family::G;
  if (!exceptional && !allow_nonexceptional)
    throw input_error(gname +
                      " is a classical split form; pass --allow-nonexceptional "
                      "to survey it anyway");
  return g.complex_type;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detects reductive homogeneous spaces G/H with no compact "
               "Clifford-Klein form (Calabi-Markus and cohomological tests)"};
  app.require_subcommand(1);
  // --h is an option below, so help stays long-form only
  app.set_help_flag("--help", "Print help");

  Options opt;
  opt.start = std::chrono::steady_clock::now();
  auto add_common = [&opt](CLI::App* sub) {
    sub->set_help_flag("--help", "Print help");
    sub->add_option("--format", opt.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--verbose", opt.verbose, "Include filtered rows / evidence");
    sub->add_flag("--timing", opt.timing, "Include elapsed time in JSON output");
  };

  std::string g_name, h_name, algebra_name, candidates_path;
  bool allow_nonexceptional = false;

  CLI::App* check = app.add_subcommand("check", "Check one pair (g, h)");
  add_common(check);
  check->add_option("--g", g_name, "Ambient simple algebra")->required();
  check->add_option("--h", h_name, "Subalgebra (sum of simple factors)")->required();

  CLI::App* ssplit = app.add_subcommand(
      "survey-split", "Survey split regular subalgebras of a split g");
  add_common(ssplit);
  ssplit->add_option("--g", g_name, "Split ambient algebra, e.g. e6(6)")->required();
  ssplit->add_flag("--allow-nonexceptional", allow_nonexceptional,
                   "Allow classical split ambient algebras");

  CLI::App* scand = app.add_subcommand(
      "survey-candidates", "Survey an externally computed candidate list");
  add_common(scand);
  scand->add_option("--g", g_name, "Ambient simple algebra")->required();
  scand->add_option("--candidates", candidates_path, "JSON candidate file")
      ->required();

  CLI::App* info = app.add_subcommand("info", "Catalog invariants of an algebra");
  add_common(info);
  info->add_option("--algebra", algebra_name, "Algebra name")->required();

  CLI::App* poincare = app.add_subcommand(
      "poincare", "Candidate Poincare polynomial set of g");
  add_common(poincare);
  poincare->add_option("--g", g_name, "Non-compact simple g with semisimple K")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      RealSimpleAlgebra g = parse_simple_algebra(g_name);
      SemisimpleRealAlgebra h = parse_algebra(h_name);
      Verdict v = check_pair(g, h);
      json inputs{{"g", name(g)}, {"h", canonical_name(h)}};
      emit(opt, "check", inputs, verdict_to_json(v, opt.verbose),
           describe_verdict(v, opt.verbose));
    } else if (ssplit->parsed()) {
      SimpleType t = split_ambient(g_name, allow_nonexceptional);
      auto rows = survey_split(t);
      json inputs{{"g", name(split_form(t))}};
      emit(opt, "survey-split", inputs, survey_to_json(rows, opt.verbose),
           survey_to_text(rows, opt.verbose));
    } else if (scand->parsed()) {
      RealSimpleAlgebra g = parse_simple_algebra(g_name);
      CandidateList cl = load_candidates(candidates_path);
      auto rows = survey_candidates(g, cl);
      json inputs{{"g", name(g)}, {"candidates", candidates_path}};
      emit(opt, "survey-candidates", inputs, survey_to_json(rows, opt.verbose),
           survey_to_text(rows, opt.verbose));
    } else if (info->parsed()) {
      SemisimpleRealAlgebra a = parse_algebra(algebra_name);
      json factors = json::array();
      std::string text;
      int total_dim = 0, total_d = 0, total_rank = 0;
      for (const auto& f : a.factors) {
        RealInvariants inv = invariants(f);
        total_dim += inv.dim;
        total_d += inv.d;
        total_rank += inv.real_rank;
        std::string mc = inv.max_compact.factors.empty()
                             ? ""
                             : canonical_name(inv.max_compact);
        if (inv.torus_rank > 0) {
          mc += (mc.empty() ? "" : "+") + std::string("u(1)");
          if (inv.torus_rank > 1) mc += "^" + std::to_string(inv.torus_rank);
        }
        json jf;
        jf["name"] = name(f);
        jf["dim"] = inv.dim;
        jf["real_rank"] = inv.real_rank;
        jf["max_compact"] = mc;
        jf["d"] = inv.d;
        jf["dual_degrees"] = inv.dual_degrees;
        factors.push_back(jf);
        text += name(f) + ": dim = " + std::to_string(inv.dim) +
                ", real rank = " + std::to_string(inv.real_rank) +
                ", max compact = " + (mc.empty() ? "0" : mc) +
                ", d = " + std::to_string(inv.d) + ", dual degrees = {";
        for (std::size_t i = 0; i < inv.dual_degrees.size(); ++i)
          text += (i ? "," : "") + std::to_string(inv.dual_degrees[i]);
        text += "}\n";
      }
      if (a.factors.size() > 1)
        text += "total: dim = " + std::to_string(total_dim) +
                ", real rank = " + std::to_string(total_rank) +
                ", d = " + std::to_string(total_d) + "\n";
      json result;
      result["factors"] = factors;
      result["total"] = {{"dim", total_dim}, {"real_rank", total_rank},
                         {"d", total_d}};
      emit(opt, "info", json{{"algebra", canonical_name(a)}}, result, text);
    } else if (poincare->parsed()) {
      RealSimpleAlgebra g = parse_simple_algebra(g_name);
      if (invariants(g).d == 0) throw input_error(name(g) + " is compact");
      DegreeData dd = degree_data(g);
      auto polys = candidate_polynomials(dd);
      json jp = json::array();
      std::string text;
      for (const auto& p : polys) {
        json row;
        row["degree"] = p.degree();
        row["coefficients"] = poly_to_json(p);
        row["has_negative_coefficient"] = p.has_negative_coefficient();
        jp.push_back(row);
        text += "degree " + std::to_string(p.degree()) + ": " + p.to_string() +
                (p.has_negative_coefficient() ? "  [negative coefficients]" : "") +
                "\n";
      }
      json result;
      result["big_degrees"] = dd.big_degrees;
      result["compact_degrees"] = dd.compact_degrees;
      result["polynomials"] = jp;
      emit(opt, "poincare", json{{"g", name(g)}}, result, text);
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
