// gybe — exact construction and verification of (d,3,1)-R-matrices from
// ribbon-fusion-category data.
//
// Exit codes: 0 success, 1 a mathematical check returned false, 2 usage or
// data error. Reports are JSON on stdout; diagnostics go to stderr.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>

#include "gybe/error.hpp"
#include "gybe/fusion.hpp"
#include "gybe/verifier.hpp"

namespace {

using gybe::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

bool g_pretty = false;

void emit(const Json& report) {
  std::cout << report.dump(2) << '\n';
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  if (out.empty()) gybe::fail("empty label list '" + csv + "'");
  return out;
}

void append_pretty_matrix(Json& report, const gybe::ExactMatrix& m) {
  if (!g_pretty) return;
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  report["pretty"] = std::move(rows);
}

gybe::GybeCertificate require_certificate(const gybe::FusionRing& ring,
                                          const gybe::ObjectExpr& x,
                                          const std::vector<std::string>& s,
                                          Json& report, int& exit_code) {
  auto scan = gybe::is_gybe_object(ring, x, s);
  if (auto* refusal = std::get_if<gybe::GybeRefusal>(&scan)) {
    report["certificate"] = gybe::refusal_to_json(*refusal);
    exit_code = kExitCheckFailed;
    return {};
  }
  auto cert = std::get<gybe::GybeCertificate>(scan);
  report["certificate"] = gybe::certificate_to_json(cert);
  return cert;
}

int cmd_validate(const std::string& path) {
  const gybe::CategoryData cat = gybe::parse_category_file(path);
  Json report;
  report["command"] = "validate";
  report["file"] = path;
  report["valid"] = true;
  report["name"] = cat.name;
  report["labels"] = cat.ring.labels;
  report["label_count"] = cat.ring.size();
  report["cyclotomic_order"] = cat.field_order;
  report["r_symbols"] = cat.r_symbols.size();
  report["f_matrices"] = cat.f_matrices.size();
  emit(report);
  return kExitOk;
}

int cmd_gen_so(int r, const std::string& relabel, const std::string& out_path) {
  gybe::FusionRing ring = gybe::gen_so_odd_level2(r);
  if (relabel == "jk")
    ring = gybe::relabel_jk(ring);
  else if (!relabel.empty())
    gybe::fail("unknown relabeling '" + relabel + "' (supported: jk)");
  gybe::CategoryData cat;
  cat.name = "so(" + std::to_string(2 * r + 1) + ")_2";
  cat.field_order = gybe::default_field_order();
  cat.ring = std::move(ring);
  const Json file = gybe::serialize_category(cat);
  if (!out_path.empty()) {
    gybe::write_json_file(out_path, file);
    Json report;
    report["command"] = "gen-so";
    report["r"] = r;
    report["labels"] = cat.ring.labels;
    report["written"] = out_path;
    emit(report);
  } else {
    emit(file);
  }
  return kExitOk;
}

int cmd_find_gybe(const std::string& path, int max_summands) {
  const gybe::CategoryData cat = gybe::parse_category_file(path);
  const auto certs = gybe::find_gybe_objects(cat.ring, max_summands);
  const auto dims = gybe::fp_dimensions(cat.ring);
  Json report;
  report["command"] = "find-gybe";
  report["file"] = path;
  report["max_summands"] = max_summands;
  Json list = Json::array();
  for (const auto& cert : certs) {
    Json c = gybe::certificate_to_json(cert);
    c["dim_integrality"] = gybe::check_dim_integrality(cat.ring, cert, dims);
    gybe::ObjectExpr x{cert.object};
    c["eigenvalue_bound_l"] = gybe::eigenvalue_bound_l(cat.ring, x);
    list.push_back(std::move(c));
  }
  report["certificates"] = std::move(list);
  report["count"] = certs.size();
  emit(report);
  return kExitOk;
}

int cmd_build_r(const std::string& path, const std::string& object_csv,
                const std::string& set_csv, const std::string& out_path,
                bool decimal) {
  const gybe::CategoryData cat = gybe::parse_category_file(path);
  Json report;
  report["command"] = "build-r";
  int exit_code = kExitOk;
  const gybe::ObjectExpr x{split_labels(object_csv)};
  const auto cert = require_certificate(cat.ring, x, split_labels(set_csv),
                                        report, exit_code);
  if (exit_code != kExitOk) {
    emit(report);
    return exit_code;
  }
  const gybe::AssembledR assembled = gybe::assemble_R(cat, cert);
  report["d"] = assembled.d;
  Json sectors = Json::array();
  for (std::size_t k = 0; k < assembled.sector_order.size(); ++k) {
    Json s;
    s["i"] = assembled.sector_order[k].first;
    s["j"] = assembled.sector_order[k].second;
    s["matrix"] = gybe::matrix_to_json(assembled.sector_blocks[k]);
    sectors.push_back(std::move(s));
  }
  report["sector_blocks"] = std::move(sectors);
  report["p_matrix"] = gybe::matrix_to_json(assembled.p);
  report["r_matrix"] = gybe::matrix_to_json(assembled.r);
  append_pretty_matrix(report, assembled.r);
  if (!out_path.empty()) {
    gybe::write_json_file(out_path, decimal
                                        ? gybe::matrix_to_decimal_json(assembled.r)
                                        : gybe::matrix_to_json(assembled.r));
    report["written"] = out_path;
  }
  emit(report);
  return kExitOk;
}

int cmd_verify(const std::string& path, int d, int m, bool far_comm,
               int braid_n) {
  const gybe::ExactMatrix r = gybe::matrix_from_json(gybe::load_json_file(path));
  Json report;
  report["command"] = "verify";
  report["file"] = path;
  Json checks = Json::array();
  bool all_ok = true;

  Json dims;
  dims["d"] = d;
  dims["m"] = m;
  dims["product_dim"] = int(std::pow(double(d), m + 1));
  const auto gybe_res = gybe::check_gybe(r, d, m);
  all_ok = all_ok && gybe_res.ok;
  checks.push_back(gybe::check_report_json("gybe", gybe_res, dims));

  if (far_comm) {
    const auto fc = gybe::check_far_commutativity(r, d, m);
    all_ok = all_ok && fc.ok;
    Json fdims;
    fdims["d"] = d;
    fdims["m"] = m;
    checks.push_back(gybe::check_report_json("far_commutativity", fc, fdims));
  }
  if (braid_n > 0) {
    if (m != 3) gybe::fail("--braid-rep requires m = 3");
    const auto rep = gybe::braid_rep(r, d, braid_n);
    const auto br = gybe::check_braid_relations(rep);
    all_ok = all_ok && br.ok;
    Json bdims;
    bdims["d"] = d;
    bdims["n"] = braid_n;
    bdims["dimension"] = rep.generators.empty() ? 0 : rep.generators[0].rows();
    checks.push_back(gybe::check_report_json("braid_relations", br, bdims));
  }
  report["checks"] = std::move(checks);
  report["all_ok"] = all_ok;
  emit(report);
  return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_eigs(const std::string& path, const std::string& category_path,
             const std::string& object_csv) {
  const gybe::ExactMatrix r = gybe::matrix_from_json(gybe::load_json_file(path));
  Json report;
  report["command"] = "eigs";
  report["file"] = path;
  std::vector<gybe::CycloScalar> candidates;
  bool from_category = false;
  if (!category_path.empty()) {
    if (object_csv.empty())
      gybe::fail("--category requires --object to pick the braiding symbols");
    const gybe::CategoryData cat = gybe::parse_category_file(category_path);
    const auto summand_names = split_labels(object_csv);
    std::vector<int> summands;
    for (const auto& n : summand_names)
      summands.push_back(cat.ring.index_of(n));
    // Candidates are the braiding symbols on the channels of x⊗x.
    if (summands.size() == 1) {
      const int x = summands[0];
      for (int c : cat.ring.fuse(x, x)) {
        const gybe::CycloScalar* sym = cat.find_r(x, x, c);
        if (!sym)
          gybe::fail("category lacks R^{" + cat.ring.labels[x] + "," +
                     cat.ring.labels[x] + "}_" + cat.ring.labels[c]);
        candidates.push_back(*sym);
      }
    } else {
      for (int a : summands)
        for (int b : summands) {
          const auto& ch = cat.ring.fuse(a, b);
          if (ch.size() != 1) continue;
          if (const gybe::CycloScalar* sym = cat.find_r(a, b, ch[0]))
            candidates.push_back(*sym);
        }
    }
    from_category = true;
    report["candidate_source"] = "category";
  } else {
    const auto proposals =
        gybe::propose_eigenvalues(r, gybe::default_field_order());
    candidates = proposals.matched;
    report["candidate_source"] = "numeric_proposals";
    if (!proposals.unmatched.empty()) {
      Json un = Json::array();
      for (const auto& z : proposals.unmatched)
        un.push_back(gybe::complex_to_json(z));
      report["unmatched_numeric"] = std::move(un);
    }
  }
  if (candidates.empty()) gybe::fail("no eigenvalue candidates to certify");
  const auto cert = gybe::certify_eigenvalues(r, candidates);
  Json evs = Json::array();
  for (const auto& ev : cert.certified) {
    Json e;
    e["terms"] = gybe::scalar_to_json(ev);
    e["order"] = ev.order();
    e["decimal"] = gybe::complex_to_json(ev.embed());
    e["text"] = ev.str();
    evs.push_back(std::move(e));
  }
  report["certified"] = std::move(evs);
  report["count"] = cert.certified.size();
  report["annihilates"] = cert.annihilates;
  emit(report);
  // Failure to annihilate with category-sourced candidates means the listed
  // braidings do not exhaust the spectrum: a failed mathematical check.
  if (from_category && !cert.annihilates) return kExitCheckFailed;
  return kExitOk;
}

int cmd_group_order(const std::string& path, int d, int n, bool projective,
                    std::size_t cap) {
  const gybe::ExactMatrix r = gybe::matrix_from_json(gybe::load_json_file(path));
  const auto rep = gybe::braid_rep(r, d, n);
  const auto report_data = gybe::group_closure(rep.generators, cap, projective);
  Json report;
  report["command"] = "group-order";
  report["file"] = path;
  report["d"] = d;
  report["n"] = n;
  report["dimension"] = rep.generators.empty() ? 0 : rep.generators[0].rows();
  report.update(gybe::closure_report_json(report_data));
  emit(report);
  return kExitOk;
}

int demo_checks(Json& report, const gybe::CategoryData& cat,
                const gybe::GybeCertificate& cert,
                const gybe::AssembledR& assembled,
                const std::vector<gybe::CycloScalar>& candidates,
                const gybe::ExactMatrix& reference) {
  bool all_ok = true;

  report["matches_printed_matrix"] = (assembled.r == reference);
  all_ok = all_ok && assembled.r == reference;

  Json checks = Json::array();
  Json dims;
  dims["d"] = assembled.d;
  dims["m"] = 3;
  const auto gybe_res = gybe::check_gybe(assembled.r, assembled.d, 3);
  all_ok = all_ok && gybe_res.ok;
  checks.push_back(gybe::check_report_json("gybe", gybe_res, dims));
  const auto fc = gybe::check_far_commutativity(assembled.r, assembled.d, 3);
  all_ok = all_ok && fc.ok;
  checks.push_back(gybe::check_report_json("far_commutativity", fc, dims));
  report["checks"] = std::move(checks);

  const auto eig = gybe::certify_eigenvalues(assembled.r, candidates);
  Json evs = Json::array();
  for (const auto& ev : eig.certified) {
    Json e;
    e["terms"] = gybe::scalar_to_json(ev);
    e["decimal"] = gybe::complex_to_json(ev.embed());
    e["text"] = ev.str();
    evs.push_back(std::move(e));
  }
  const gybe::ObjectExpr x{cert.object};
  const int bound = gybe::eigenvalue_bound_l(cat.ring, x);
  Json eig_report;
  eig_report["certified"] = std::move(evs);
  eig_report["count"] = eig.certified.size();
  eig_report["bound_l"] = bound;
  eig_report["annihilates"] = eig.annihilates;
  all_ok = all_ok && eig.annihilates && int(eig.certified.size()) <= bound;
  report["eigenvalues"] = std::move(eig_report);

  // Smallest k <= 24 with R^k = I, if any.
  int matrix_order = 0;
  gybe::ExactMatrix power = assembled.r;
  for (int k = 1; k <= 24; ++k) {
    if (power.is_identity()) {
      matrix_order = k;
      break;
    }
    power = power * assembled.r;
  }
  if (matrix_order > 0)
    report["r_matrix_order"] = matrix_order;
  else
    report["r_matrix_order"] = nullptr;

  const auto dims_fp = gybe::fp_dimensions(cat.ring);
  const bool integrality = gybe::check_dim_integrality(cat.ring, cert, dims_fp);
  all_ok = all_ok && integrality;
  report["dim_integrality"] = integrality;

  report["all_ok"] = all_ok;
  return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_demo(const std::string& which) {
  const gybe::CategoryData cat = gybe::builtin_category(which);
  Json report;
  report["command"] = "demo";
  report["category"] = which;
  int exit_code = kExitOk;
  gybe::ObjectExpr x;
  std::vector<std::string> set_labels;
  std::vector<gybe::CycloScalar> candidates;
  gybe::ExactMatrix reference;
  if (which == "jk6") {
    x.summands = {"2"};
    set_labels = {"1", "3"};
    const int xi = cat.ring.index_of("2");
    for (int c : cat.ring.fuse(xi, xi)) candidates.push_back(*cat.find_r(xi, xi, c));
    reference = gybe::reference_jk6_r_matrix();
  } else {
    x.summands = {"1", "psi"};
    set_labels = {"1", "psi"};
    const int one = cat.ring.index_of("1");
    const int psi = cat.ring.index_of("psi");
    candidates.push_back(*cat.find_r(one, one, one));
    candidates.push_back(*cat.find_r(psi, psi, one));
    reference = gybe::reference_ising_r_matrix();
  }
  const auto cert =
      require_certificate(cat.ring, x, set_labels, report, exit_code);
  if (exit_code != kExitOk) {
    emit(report);
    return exit_code;
  }
  const gybe::AssembledR assembled = gybe::assemble_R(cat, cert);
  Json sectors = Json::array();
  for (std::size_t k = 0; k < assembled.sector_order.size(); ++k) {
    Json s;
    s["i"] = assembled.sector_order[k].first;
    s["j"] = assembled.sector_order[k].second;
    s["matrix"] = gybe::matrix_to_json(assembled.sector_blocks[k]);
    sectors.push_back(std::move(s));
  }
  report["sector_blocks"] = std::move(sectors);
  report["b_matrix"] = gybe::matrix_to_json(assembled.b);
  report["p_matrix"] = gybe::matrix_to_json(assembled.p);
  report["r_matrix"] = gybe::matrix_to_json(assembled.r);
  report["r_matrix_decimal"] = gybe::matrix_to_decimal_json(assembled.r);
  append_pretty_matrix(report, assembled.r);
  if (cat.kauffman_variable)
    report["kauffman_variable"] = gybe::scalar_to_json(*cat.kauffman_variable);
  exit_code = demo_checks(report, cat, cert, assembled, candidates, reference);
  emit(report);
  return exit_code;
}

const char* kReportSchemaFooter =
    "Reports are JSON objects on stdout. Common fields: command (string), "
    "all_ok (bool, when checks run), checks (array of {check, result, "
    "dimensions, witness}). Matrices serialize as {cyclotomic_order, rows, "
    "cols, entries}, each entry a list of {p, q, k} terms meaning "
    "sum (p/q)*zeta^k.";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gybe: exact solutions to generalized Yang-Baxter equations from "
      "ribbon-fusion-category data"};
  app.footer(kReportSchemaFooter);
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty,
               "add a human-readable rendering of result matrices");

  if (const char* env = std::getenv("GYBE_FIELD_ORDER")) {
    try {
      gybe::set_default_field_order(std::stoi(env));
    } catch (const std::exception& e) {
      std::cerr << "error: invalid GYBE_FIELD_ORDER: " << e.what() << '\n';
      return kExitUsage;
    }
  }

  std::string category_file, matrix_file, object_csv, set_csv, out_path;
  std::string relabel, category_path, demo_name;
  int r = 1, d = 2, m = 3, braid_n = 0, max_summands = 1, closure_n = 3;
  bool far_comm = false, projective = false, decimal = false;
  std::size_t cap = gybe::limits::kDefaultClosureCap;

  auto* validate = app.add_subcommand(
      "validate", "parse a category file and re-check every invariant; "
                  "report: {command, file, valid, name, labels, ...}");
  validate->add_option("file", category_file, "category JSON file")->required();

  auto* gen_so = app.add_subcommand(
      "gen-so", "emit the SO(2r+1) level-2 fusion ring as a category file; "
                "report: the file itself, or {written} with --out");
  gen_so->add_option("--r", r, "rank parameter (r >= 1)")->required();
  gen_so->add_option("--relabel", relabel,
                     "relabel to the five-label alphabet 0..4 (value: jk)");
  gen_so->add_option("--out", out_path, "write to a file instead of stdout");

  auto* find_gybe = app.add_subcommand(
      "find-gybe", "scan a category for gYBE objects; report: "
                   "{certificates: [{object, set, d, decompositions}], count}");
  find_gybe->add_option("file", category_file, "category JSON file")->required();
  find_gybe->add_option("--max-summands", max_summands,
                        "summand limit for candidate objects (default 1)");

  auto* build_r = app.add_subcommand(
      "build-r", "assemble the (d,3,1)-R-matrix for a certified object; "
                 "report: {certificate, sector_blocks, p_matrix, r_matrix}");
  build_r->add_option("file", category_file, "category JSON file")->required();
  build_r->add_option("--object", object_csv, "comma-separated summand labels")
      ->required();
  build_r->add_option("--set", set_csv, "comma-separated labels of S")
      ->required();
  build_r->add_option("--out", out_path, "also write the matrix to a file");
  build_r->add_flag("--decimal", decimal,
                    "write the --out file as non-authoritative decimals");

  auto* verify = app.add_subcommand(
      "verify", "check the gYBE (and optionally more) for a matrix file; "
                "report: {checks: [{check, result, dimensions, witness}], "
                "all_ok}; exit 1 when a check is false");
  verify->add_option("file", matrix_file, "matrix JSON file")->required();
  verify->add_option("--d", d, "strand vector-space dimension")->required();
  verify->add_option("--m", m, "tensor factors R acts on")->required();
  verify->add_flag("--far-comm", far_comm, "also check far commutativity");
  verify->add_option("--braid-rep", braid_n,
                     "also check braid relations on n strands (m = 3 only)");

  auto* eigs = app.add_subcommand(
      "eigs", "certify eigenvalues exactly; candidates come from a category "
              "(--category/--object) or from numeric proposals; report: "
              "{certified, count, annihilates}");
  eigs->add_option("file", matrix_file, "matrix JSON file")->required();
  eigs->add_option("--category", category_path, "category JSON file");
  eigs->add_option("--object", object_csv, "object labels for the braidings");

  auto* group_order = app.add_subcommand(
      "group-order", "breadth-first closure of the braid generator group; "
                     "report: {order | \"exceeded_cap\", cap, closed}");
  group_order->add_option("file", matrix_file, "matrix JSON file")->required();
  group_order->add_option("--d", d, "strand vector-space dimension")->required();
  group_order->add_option("--n", closure_n, "strand count")->required();
  group_order->add_flag("--projective", projective,
                        "identify matrices up to scalar factors");
  group_order->add_option("--cap", cap, "element cap (default 100000)");

  auto* demo = app.add_subcommand(
      "demo", "end-to-end reproduction of a built-in worked example "
              "(jk6 or ising); asserts exact equality with the stored "
              "reference matrix; report: {sector_blocks, b_matrix, p_matrix, "
              "r_matrix, eigenvalues, all_ok}");
  demo->add_option("name", demo_name, "jk6 or ising")
      ->required()
      ->check(CLI::IsMember({"jk6", "ising"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(category_file);
    if (gen_so->parsed()) return cmd_gen_so(r, relabel, out_path);
    if (find_gybe->parsed()) return cmd_find_gybe(category_file, max_summands);
    if (build_r->parsed())
      return cmd_build_r(category_file, object_csv, set_csv, out_path, decimal);
    if (verify->parsed())
      return cmd_verify(matrix_file, d, m, far_comm, braid_n);
    if (eigs->parsed()) return cmd_eigs(matrix_file, category_path, object_csv);
    if (group_order->parsed())
      return cmd_group_order(matrix_file, d, closure_n, projective, cap);
    if (demo->parsed()) return cmd_demo(demo_name);
  } catch (const gybe::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
