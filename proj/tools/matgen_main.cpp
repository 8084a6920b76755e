#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "matgen/json_io.hpp"

using namespace matgen;

namespace {

json read_json(const std::string& path) {
  if (path.empty() || path == "-") return json::parse(std::cin);
  std::ifstream in(path);
  require(in.good(), Err::BadInput, "cannot open input file '" + path + "'");
  return json::parse(in);
}

void write_json(const std::string& path, const json& j) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << std::endl;
    return;
  }
  std::ofstream out(path);
  require(out.good(), Err::BadInput, "cannot open output file '" + path + "'");
  out << j.dump(2) << std::endl;
}

std::size_t cap_from_env(std::size_t fallback) {
  const char* env = std::getenv("MATGEN_CAP");
  if (env == nullptr) return fallback;
  long long v = std::atoll(env);
  return v > 0 ? static_cast<std::size_t>(v) : fallback;
}

Field optional_field(const std::string& spec) {
  return spec.empty() ? nullptr : parse_field(spec);
}

int run_verify_suite(const std::string& name, int q, const SuiteOptions& opts,
                     const std::string& field_spec, bool no_timing, const std::string& out_path) {
  auto one = [&](const std::string& suite) -> SuiteReport {
    if (suite == "indep-sub3") return suite_indep_sub3(q, opts);
    if (suite == "pgl2") return suite_pgl2(q, opts);
    if (suite == "four-lines") return suite_four_lines(q, opts);
    if (suite == "gl-vs-monoid") return suite_gl_vs_monoid(q, opts);
    if (suite == "laffey-random") return suite_laffey_random(opts);
    if (suite == "unital-random") return suite_unital_random(opts);
    if (suite == "dims") return suite_dims(parse_field(field_spec.empty() ? "gf:7" : field_spec));
    fail(Err::BadInput, "unknown suite '" + suite + "'");
  };
  if (name != "all") {
    SuiteReport rep = one(name);
    write_json(out_path, suite_report_to_json(rep, !no_timing));
    return rep.passed() ? 0 : 1;
  }
  json reports = json::array();
  bool ok = true;
  SuiteOptions o = opts;
  for (const std::string& suite :
       {std::string("indep-sub3"), std::string("pgl2"), std::string("four-lines"),
        std::string("laffey-random"), std::string("unital-random"), std::string("dims")}) {
    SuiteReport rep;
    if (suite == "indep-sub3") rep = suite_indep_sub3(3, o);
    else if (suite == "pgl2") rep = suite_pgl2(3, o);
    else if (suite == "four-lines") rep = suite_four_lines(3, o);
    else if (suite == "laffey-random") rep = suite_laffey_random(o);
    else if (suite == "unital-random") { SuiteOptions u = o; u.trials = 500; rep = suite_unital_random(u); }
    else rep = suite_dims(parse_field(field_spec.empty() ? "gf:7" : field_spec));
    ok = ok && rep.passed();
    reports.push_back(suite_report_to_json(rep, !no_timing));
  }
  write_json(out_path, reports);
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"matgen: exact computations with matrix-algebra generating sets"};
  app.require_subcommand(1);

  std::string in_path, out_path, field_spec, alpha_str, shape_str, case_str, suite_name;
  int n = 3, p = 1, q_corner = 1, q_order = 3, jobs = 1, trials = 200;
  long long stride = 1, az_d = 0, az_dim_i = 0, az_dim_z = 0;
  int az_n = 3, az_r = 5;
  unsigned seed = 0;
  bool non_unital = false, no_timing = false, full_scan = false;
  std::size_t cap = cap_from_env(4096);

  int exit_code = 0;

  auto add_io = [&](CLI::App* cmd, bool with_in = true) {
    if (with_in) cmd->add_option("--in", in_path, "input JSON file (default: stdin)");
    cmd->add_option("--out", out_path, "output JSON file (default: stdout)");
  };

  // --- construction commands ---
  auto* canonical = app.add_subcommand("canonical", "emit the canonical (2n-1)-element set");
  canonical->add_option("--n", n, "matrix size")->required();
  canonical->add_option("--field", field_spec, "field spec")->required();
  add_io(canonical, false);
  canonical->callback([&] {
    write_json(out_path, matrix_list_to_json(canonical_irredundant(n, parse_field(field_spec))));
  });

  auto* salpha = app.add_subcommand("s-alpha", "emit the canonical 5-element family member");
  salpha->add_option("--alpha", alpha_str, "parameter value")->required();
  salpha->add_option("--field", field_spec, "field spec")->required();
  add_io(salpha, false);
  salpha->callback([&] {
    Field f = parse_field(field_spec);
    write_json(out_path, matrix_list_to_json(s_alpha(parse_scalar(alpha_str, f))));
  });

  // --- generation checks ---
  auto* gencheck = app.add_subcommand("gen-check", "does the set generate M_n?");
  gencheck->add_option("--field", field_spec, "field spec (default: from input)");
  gencheck->add_flag("--non-unital", non_unital, "test non-unital generation");
  add_io(gencheck);
  gencheck->callback([&] {
    auto s = matrix_list_from_json(read_json(in_path), optional_field(field_spec));
    require(!s.empty(), Err::BadInput, "gen-check needs at least one matrix");
    SpanBasis span = span_close(s, !non_unital);
    bool g = span.dim() == span.n() * span.n();
    write_json(out_path, json{{"generates", g}, {"dim", span.dim()}});
    exit_code = g ? 0 : 1;
  });

  auto* irrcheck = app.add_subcommand("irredundant-check", "is the set irredundant generating?");
  irrcheck->add_option("--field", field_spec, "field spec (default: from input)");
  add_io(irrcheck);
  irrcheck->callback([&] {
    auto s = matrix_list_from_json(read_json(in_path), optional_field(field_spec));
    bool g = generates(s, true);
    bool irr = g && is_irredundant_generating(s);
    write_json(out_path, json{{"generates", g}, {"irredundant", irr}});
    exit_code = irr ? 0 : 1;
  });

  auto* extract = app.add_subcommand("extract", "greedy irredundant generating subset");
  extract->add_option("--field", field_spec, "field spec (default: from input)");
  add_io(extract);
  extract->callback([&] {
    auto s = matrix_list_from_json(read_json(in_path), optional_field(field_spec));
    SubsetSelection t = extract_irredundant(s);
    write_json(out_path,
               json{{"indices", t.indices}, {"matrices", matrix_list_to_json(t.subset)}});
  });

  auto* corner = app.add_subcommand("corner-complete", "completion of a corner subalgebra");
  corner->add_option("--p", p, "corner rows")->required();
  corner->add_option("--q", q_corner, "corner cols")->required();
  corner->add_option("--field", field_spec, "field spec (default: from input)");
  add_io(corner);
  corner->callback([&] {
    auto s = matrix_list_from_json(read_json(in_path), optional_field(field_spec));
    require(!s.empty(), Err::BadInput, "corner-complete needs at least one matrix");
    CornerShape shape{p, q_corner, s.front().rows()};
    SubsetSelection t = complete_from_corner(shape, s);
    write_json(out_path, json{{"indices", t.indices},
                              {"matrices", matrix_list_to_json(t.subset)},
                              {"max_allowed", 2 * shape.n - shape.p - shape.q}});
  });

  // --- hat construction ---
  auto* hat = app.add_subcommand("hat", "block-subalgebra transcription of matrices");
  hat->add_option("--shape", shape_str, "block shape JSON, e.g. {\"blocks\":[[1,2],[1,1]]}")
      ->required();
  hat->add_option("--cap", cap, "assembly cap (also via MATGEN_CAP)");
  hat->add_option("--field", field_spec, "field spec (default: from input)");
  add_io(hat);
  hat->callback([&] {
    BlockShape shape = shape_from_json(json::parse(shape_str));
    auto s = matrix_list_from_json(read_json(in_path), optional_field(field_spec));
    json hats = json::array();
    for (const Matrix& x : s) hats.push_back(matrix_list_to_json(hat_matrix(shape, x, cap)));
    json out{{"shape", shape_to_json(shape)}, {"hats", std::move(hats)}};
    if (!s.empty())
      out["hat_algebra"] = matrix_list_to_json(hat_algebra(shape, s.front().field()));
    write_json(out_path, out);
  });

  auto* laffey = app.add_subcommand("laffey-check", "two-sided generation equivalence");
  laffey->add_option("--shape", shape_str, "block shape JSON")->required();
  laffey->add_option("--cap", cap, "assembly cap (also via MATGEN_CAP)");
  laffey->add_option("--field", field_spec, "field spec (default: from input)");
  add_io(laffey);
  laffey->callback([&] {
    BlockShape shape = shape_from_json(json::parse(shape_str));
    auto s = matrix_list_from_json(read_json(in_path), optional_field(field_spec));
    auto [lhs, rhs] = laffey_equiv_check(shape, s, cap);
    write_json(out_path, json{{"lhs", lhs}, {"rhs", rhs}, {"equal", lhs == rhs}});
    exit_code = (lhs == rhs) ? 0 : 1;
  });

  // --- subspace commands ---
  auto* glindep = app.add_subcommand("gl-indep", "GL-independence of a subspace family");
  glindep->add_option("--field", field_spec, "field spec (default: from input)");
  add_io(glindep);
  glindep->callback([&] {
    auto family = subspace_list_from_json(read_json(in_path), optional_field(field_spec));
    IndepResult r = gl_independent(family);
    write_json(out_path, witness_to_json(r));
    exit_code = r.independent ? 0 : 1;
  });

  auto* mindep = app.add_subcommand("m-indep", "monoid-independence of a subspace family");
  mindep->add_option("--field", field_spec, "field spec (default: from input)");
  add_io(mindep);
  mindep->callback([&] {
    auto family = subspace_list_from_json(read_json(in_path), optional_field(field_spec));
    IndepResult r = m_independent(family);
    write_json(out_path, witness_to_json(r));
    exit_code = r.independent ? 0 : 1;
  });

  auto* pattern = app.add_subcommand("pattern", "pattern classification of a 5-family");
  pattern->add_option("--field", field_spec, "field spec (default: from input)");
  add_io(pattern);
  pattern->callback([&] {
    auto family = subspace_list_from_json(read_json(in_path), optional_field(field_spec));
    PatternResult r = pattern_classify(family);
    const char* kind = r.kind == PatternResult::Kind::Pattern1   ? "pattern1"
                       : r.kind == PatternResult::Kind::Pattern2 ? "pattern2"
                                                                 : "none";
    json out{{"pattern", kind}};
    if (r.matched()) out["roles"] = std::vector<int>(r.roles.begin(), r.roles.end());
    write_json(out_path, out);
    exit_code = r.matched() ? 0 : 1;
  });

  auto* stab = app.add_subcommand("stab-algebra", "stabilizer algebra of a subspace family");
  stab->add_option("--field", field_spec, "field spec (needed when the family is empty)");
  stab->add_option("--n", n, "ambient dimension (needed when the family is empty)");
  add_io(stab);
  stab->callback([&] {
    auto family = subspace_list_from_json(read_json(in_path), optional_field(field_spec));
    SpanBasis b = family.empty() ? stabilizer_algebra(parse_field(field_spec), n, family)
                                 : stabilizer_algebra(family);
    write_json(out_path, span_basis_to_json(b));
  });

  auto* central = app.add_subcommand("centralizer", "centralizer of a matrix set");
  central->add_option("--field", field_spec, "field spec (default: from input)");
  add_io(central);
  central->callback([&] {
    auto s = matrix_list_from_json(read_json(in_path), optional_field(field_spec));
    write_json(out_path, span_basis_to_json(centralizer(s)));
  });

  // --- classification ---
  auto* classify2 = app.add_subcommand("classify2", "canonical form of an M_2 triple");
  classify2->add_option("--field", field_spec, "field spec (default: from input)");
  add_io(classify2);
  classify2->callback([&] {
    auto s = matrix_list_from_json(read_json(in_path), optional_field(field_spec));
    Classification2 c = classify_m2_triple(s);
    write_json(out_path, json{{"record", record_to_json(c.record)},
                              {"canonical", matrix_list_to_json(c.canonical)}});
  });

  auto* classify3 = app.add_subcommand("classify3", "canonical form of an M_3 quintuple");
  classify3->add_option("--field", field_spec, "field spec (default: from input)");
  add_io(classify3);
  classify3->callback([&] {
    auto s = matrix_list_from_json(read_json(in_path), optional_field(field_spec));
    write_json(out_path, classification3_to_json(classify_m3_quintuple(s)));
  });

  auto* alphacls = app.add_subcommand("alpha-class", "equivalence candidates for the parameter");
  alphacls->add_option("--alpha", alpha_str, "parameter value")->required();
  alphacls->add_option("--field", field_spec, "field spec")->required();
  add_io(alphacls, false);
  alphacls->callback([&] {
    Field f = parse_field(field_spec);
    AlphaClass c = alpha_class(parse_scalar(alpha_str, f));
    json cand = json::array(), ver = json::array();
    for (const Scalar& x : c.candidates) cand.push_back(x.to_string());
    for (const Scalar& x : c.verified) ver.push_back(x.to_string());
    write_json(out_path, json{{"alpha", c.base.to_string()},
                              {"candidates", std::move(cand)},
                              {"verified", std::move(ver)}});
  });

  auto* equiv3 = app.add_subcommand("equivalent3", "are two 5-element sets equivalent?");
  equiv3->add_option("--field", field_spec, "field spec (default: from input)");
  add_io(equiv3);
  equiv3->callback([&] {
    json j = read_json(in_path);
    require(j.is_object() && j.contains("first") && j.contains("second"), Err::BadInput,
            "equivalent3 input is {\"first\": [...], \"second\": [...]}");
    Field f = optional_field(field_spec);
    bool eq = equivalent_m3(matrix_list_from_json(j.at("first"), f),
                            matrix_list_from_json(j.at("second"), f));
    write_json(out_path, json{{"equivalent", eq}});
    exit_code = eq ? 0 : 1;
  });

  // --- verification suites and dimension arithmetic ---
  auto* verify = app.add_subcommand("verify", "exhaustive/randomized verification suites");
  verify->add_option("--suite", suite_name,
                     "indep-sub3 | pgl2 | four-lines | laffey-random | unital-random | dims | "
                     "gl-vs-monoid | all")
      ->required();
  verify->add_option("--q", q_order, "field order for exhaustive suites");
  verify->add_option("--jobs", jobs, "worker count");
  verify->add_option("--seed", seed, "seed for randomized suites");
  verify->add_option("--trials", trials, "trial count for randomized suites");
  verify->add_option("--stride", stride, "subsampling stride for gl-vs-monoid");
  verify->add_flag("--full-scan", full_scan, "audit: direct 6-family loop");
  verify->add_option("--field", field_spec, "field for the dims suite");
  verify->add_flag("--no-timing", no_timing, "omit elapsed_ms for byte-identical output");
  add_io(verify, false);
  verify->callback([&] {
    SuiteOptions opts;
    opts.jobs = jobs;
    opts.seed = seed;
    opts.trials = trials;
    opts.stride = stride;
    opts.full_scan = full_scan;
    exit_code = run_verify_suite(suite_name, q_order, opts, field_spec, no_timing, out_path);
  });

  auto* dims = app.add_subcommand("dims", "orbit-dimension arithmetic reports");
  dims->add_option("--case", case_str, "2x3 | 3x5")->required();
  dims->add_option("--alpha", alpha_str, "parameter for the 3x5 case (default 0)");
  dims->add_option("--field", field_spec, "field spec (default gf:7)");
  add_io(dims, false);
  dims->callback([&] {
    Field f = parse_field(field_spec.empty() ? "gf:7" : field_spec);
    DimReport rep;
    if (case_str == "2x3") {
      rep = dim_arith_report_2x3(f);
    } else if (case_str == "3x5") {
      rep = dim_arith_report_3x5(parse_scalar(alpha_str.empty() ? "0" : alpha_str, f));
    } else {
      fail(Err::BadInput, "--case must be 2x3 or 3x5");
    }
    write_json(out_path, dim_report_to_json(rep));
  });

  auto* azumaya = app.add_subcommand("azumaya-check", "locally redundant generation bound");
  azumaya->add_option("--d", az_d, "Krull dimension")->required();
  azumaya->add_option("--n", az_n, "algebra degree")->required();
  azumaya->add_option("--r", az_r, "tuple length")->required();
  azumaya->add_option("--dim-i", az_dim_i, "dim of the irredundant locus")->required();
  azumaya->add_option("--dim-z", az_dim_z, "dim of the non-generating locus")->required();
  add_io(azumaya, false);
  azumaya->callback([&] {
    bool ok = azumaya_bound_check(az_d, az_n, az_r, az_dim_i, az_dim_z);
    write_json(out_path, json{{"guaranteed", ok}});
    exit_code = ok ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const json::parse_error& e) {
    std::cerr << "malformed JSON: " << e.what() << std::endl;
    return 2;
  } catch (const MatgenError& e) {
    std::cerr << e.what() << std::endl;
    return (e.code() == Err::BadInput || e.code() == Err::BadSize) ? 2 : 3;
  }
  return exit_code;
}
