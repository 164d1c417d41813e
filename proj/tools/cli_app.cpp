#include "cli_app.hpp"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "inoue/classify.hpp"
#include "inoue/descriptor.hpp"
#include "inoue/io.hpp"
#include "inoue/ot_bridge.hpp"
#include "inoue/search.hpp"

namespace inoue_cli {

using namespace inoue;
using nlohmann::json;

namespace {

constexpr const char* k_schema_version = "1.0";

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 start)
        .count();
  }
};

json report_frame(const std::string& command) {
  return {{"schema_version", k_schema_version}, {"command", command}};
}

void emit(std::ostream& out, const json& report, bool as_json, const std::string& human) {
  if (as_json)
    out << report.dump(2) << "\n";
  else
    out << human;
}

std::string preview(const DyadicInterval& v) {
  return decimal_preview(v.c.to_rat(), 12) + " (preview, +/- " + decimal_preview(v.r.to_rat(), 3) + ")";
}

std::string preview(const DyadicComplexInterval& v) {
  std::string im = decimal_preview(v.im.c.to_rat(), 12);
  std::string sign = (!im.empty() && im[0] == '-') ? " - " : " + ";
  if (!im.empty() && im[0] == '-') im = im.substr(1);
  return decimal_preview(v.re.c.to_rat(), 12) + sign + im + "i (preview)";
}

// ---------------------------------------------------------------------------

int cmd_check(const std::string& path, long bits, bool as_json, std::ostream& out) {
  Timer timer;
  IntMatrix m = read_matrix_file(path);
  json report = report_frame("check");
  report["parameters"] = {{"bits", bits}};
  report["input"] = {{"matrix", to_json(m)}};

  CheckResult res = check_type_I(m);
  if (std::holds_alternative<Rejection>(res)) {
    const auto& rej = std::get<Rejection>(res);
    report["result"] = to_json(rej);
    report["timings_ms"] = {{"total", timer.ms()}};
    std::ostringstream human;
    human << "REJECTED: " << rejection_reason_name(rej.reason) << " (" << rej.detail << ")\n";
    emit(out, report, as_json, human.str());
    return 1;
  }
  const auto& cert = std::get<TypeICertificate>(res);
  DyadicInterval alpha = refine_real(cert.chi, cert.alpha_interval(), bits);
  report["result"] = to_json(cert);
  report["result"]["alpha_enclosure"] = to_json(alpha);
  report["timings_ms"] = {{"total", timer.ms()}};
  std::ostringstream human;
  human << "ACCEPTED: type I, dim " << cert.dim << " (n = " << cert.n << ")\n"
        << "  char poly: " << cert.chi.to_string() << "\n"
        << "  alpha ~ " << preview(alpha) << "\n"
        << "  conjugate pairs: " << cert.complex_pairs.size() << "\n";
  for (const auto& note : cert.notes) human << "  note: " << note << "\n";
  emit(out, report, as_json, human.str());
  return 0;
}

int cmd_invariants(const std::string& path, long bits, bool as_json, std::ostream& out) {
  Timer timer;
  IntMatrix m = read_matrix_file(path);
  json report = report_frame("invariants");
  report["parameters"] = {{"bits", bits}};
  report["input"] = {{"matrix", to_json(m)}};

  auto res = build_descriptor(m, bits);
  if (std::holds_alternative<Rejection>(res)) {
    report["result"] = to_json(std::get<Rejection>(res));
    report["timings_ms"] = {{"total", timer.ms()}};
    emit(out, report, as_json,
         std::string("REJECTED: ") + rejection_reason_name(std::get<Rejection>(res).reason) + "\n");
    return 1;
  }
  const auto& desc = std::get<InoueDescriptor>(res);
  json result;
  result["certificate"] = to_json(desc.certificate);
  result["homology"] = to_json(desc.homology);
  result["presentation"] = to_json(desc.presentation);
  result["mapping_torus"] = {{"fiber_dim", desc.mapping_torus.fiber_dim},
                             {"monodromy", to_json(desc.mapping_torus.monodromy)}};
  result["flags"] = to_json(desc.flags);
  result["diagonalizable"] = desc.diagonalizability.diagonalizable;
  result["alpha_enclosure"] = to_json(desc.eigen.alpha);
  result["semidirect_type"] = semidirect_type_name(semidirect_data(m).type);
  report["result"] = std::move(result);
  report["timings_ms"] = {{"total", timer.ms()}};

  std::ostringstream human;
  human << "type I accepted, n = " << desc.certificate.n << "\n"
        << "b1 = " << desc.homology.b1 << ", torsion = [";
  for (std::size_t i = 0; i < desc.homology.torsion.size(); ++i)
    human << (i ? ", " : "") << desc.homology.torsion[i].get_str();
  human << "] (order " << desc.homology.total_torsion_order.get_str() << ")\n"
        << "mapping torus: fiber T^" << desc.mapping_torus.fiber_dim << ", monodromy M^T\n"
        << "diagonalizable: " << (desc.diagonalizability.diagonalizable ? "yes" : "no") << "\n"
        << "flags: kahler NO, kodaira -infinity, lck " << lck_flag_name(desc.flags.lck)
        << ", ot " << ot_flag_name(desc.flags.ot_homeomorphic) << "\n"
        << "alpha ~ " << preview(desc.eigen.alpha) << "\n";
  emit(out, report, as_json, human.str());
  return 0;
}

int cmd_present(const std::string& path, bool as_json, std::ostream& out) {
  IntMatrix m = read_matrix_file(path);
  GroupPresentation pres = inoue_presentation(m);
  if (as_json) {
    json report = report_frame("present");
    report["input"] = {{"matrix", to_json(m)}};
    report["result"] = to_json(pres);
    out << report.dump(2) << "\n";
  } else {
    out << presentation_to_text(pres);
  }
  return 0;
}

std::vector<std::pair<int, int>> parse_word(const std::string& text, int max_gen) {
  std::istringstream is(text);
  std::vector<std::pair<int, int>> word;
  std::string tok;
  while (is >> tok) {
    int exp = 1;
    std::string head = tok;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      head = tok.substr(0, caret);
      exp = std::stoi(tok.substr(caret + 1));
    }
    if (!head.empty() && head[0] == 'g') head = head.substr(1);
    int gen = std::stoi(head);
    if (gen < 0 || gen > max_gen) fail(errc::invalid_input, "generator index out of range in word");
    word.push_back({gen, exp});
  }
  return word;
}

ActionPoint parse_point(const std::string& text, int n, long bits) {
  // 2(n+1) rationals: w_re w_im z1_re z1_im ...
  std::istringstream is(text);
  std::vector<Rat> vals;
  std::string tok;
  while (is >> tok) vals.push_back(parse_rational(tok));
  if (static_cast<int>(vals.size()) != 2 * (n + 1))
    fail(errc::invalid_input, "point needs " + std::to_string(2 * (n + 1)) +
                                  " rationals (w re/im then each z re/im)");
  long prec = bits + 16;
  DyadicComplexInterval w(DyadicInterval::from_rat(vals[0], prec),
                          DyadicInterval::from_rat(vals[1], prec));
  std::vector<DyadicComplexInterval> z;
  for (int i = 0; i < n; ++i)
    z.emplace_back(DyadicInterval::from_rat(vals[static_cast<std::size_t>(2 * i + 2)], prec),
                   DyadicInterval::from_rat(vals[static_cast<std::size_t>(2 * i + 3)], prec));
  return ActionPoint(std::move(w), std::move(z));
}

int cmd_orbit(const std::string& path, const std::string& word_text, const std::string& point_text,
              long bits, bool as_json, std::ostream& out) {
  Timer timer;
  IntMatrix m = read_matrix_file(path);
  auto res = build_descriptor(m, bits);
  if (std::holds_alternative<Rejection>(res)) {
    std::ostringstream human;
    human << "REJECTED: " << rejection_reason_name(std::get<Rejection>(res).reason) << "\n";
    json report = report_frame("orbit");
    report["result"] = to_json(std::get<Rejection>(res));
    emit(out, report, as_json, human.str());
    return 1;
  }
  const auto& desc = std::get<InoueDescriptor>(res);
  auto word = parse_word(word_text, desc.certificate.dim);
  ActionPoint start = point_text.empty()
                          ? ActionPoint(DyadicComplexInterval::exact_point(Dyadic(), Dyadic::from_int(1)),
                                        std::vector<DyadicComplexInterval>(
                                            static_cast<std::size_t>(desc.eigen.n)))
                          : parse_point(point_text, desc.eigen.n, bits);
  ActionPoint image = apply_word(desc, word, start);

  json report = report_frame("orbit");
  report["parameters"] = {{"bits", bits}, {"word", word_text}};
  report["input"] = {{"matrix", to_json(m)}};
  json zs = json::array();
  for (const auto& z : image.z) zs.push_back(to_json(z));
  report["result"] = {{"w", to_json(image.w)}, {"z", std::move(zs)}};
  report["timings_ms"] = {{"total", timer.ms()}};

  std::ostringstream human;
  human << "w  ~ " << preview(image.w) << "\n";
  for (std::size_t i = 0; i < image.z.size(); ++i)
    human << "z" << (i + 1) << " ~ " << preview(image.z[i]) << "\n";
  emit(out, report, as_json, human.str());
  return 0;
}

int cmd_roots(const std::string& path, long bits, bool as_json, std::ostream& out) {
  Timer timer;
  IntPoly p = read_poly_file(path);
  auto reals = isolate_real_roots(p);
  auto boxes = enclose_complex_roots(p, bits);

  json report = report_frame("roots");
  report["parameters"] = {{"bits", bits}};
  report["input"] = {{"poly", to_json(p)}};
  json jr = json::array(), jb = json::array();
  for (const auto& r : reals) jr.push_back(to_json(r));
  for (const auto& b : boxes) jb.push_back(to_json(b));
  report["result"] = {{"real_roots", std::move(jr)}, {"boxes", std::move(jb)}};
  report["timings_ms"] = {{"total", timer.ms()}};

  std::ostringstream human;
  human << p.to_string() << "\n";
  for (const auto& b : boxes) {
    if (b.is_real_root()) {
      human << "  real    [" << rat_to_string(b.re_lo) << ", " << rat_to_string(b.re_hi) << "]"
            << "  ~ " << decimal_preview((b.re_lo + b.re_hi) / 2, 12) << " (preview)";
    } else {
      human << "  complex re [" << rat_to_string(b.re_lo) << ", " << rat_to_string(b.re_hi)
            << "], im [" << rat_to_string(b.im_lo) << ", " << rat_to_string(b.im_hi) << "]"
            << "  ~ " << decimal_preview((b.re_lo + b.re_hi) / 2, 12) << " + "
            << decimal_preview((b.im_lo + b.im_hi) / 2, 12) << "i (preview)";
    }
    if (b.multiplicity > 1) human << "  x" << b.multiplicity;
    human << "\n";
  }
  emit(out, report, as_json, human.str());
  return 0;
}

int cmd_classify(const std::string& path_a, const std::string& path_b, long budget,
                 const std::string& shifts_csv, bool as_json, std::ostream& out) {
  Timer timer;
  IntMatrix a = read_matrix_file(path_a);
  IntMatrix b = read_matrix_file(path_b);
  json report = report_frame("classify");
  report["parameters"] = {{"budget", budget}, {"shifts", shifts_csv}};
  report["input"] = {{"A", to_json(a)}, {"B", to_json(b)}};

  std::vector<Int> shifts;
  {
    std::istringstream is(shifts_csv);
    std::string tok;
    while (std::getline(is, tok, ','))
      if (!tok.empty()) shifts.emplace_back(tok);
  }
  if (shifts.empty()) fail(errc::invalid_input, "empty fingerprint shift list");

  HomeoVerdict hv = homeo_verdict(a, b, budget, shifts);
  json result;
  result["det_negative_conversions"] = hv.conjugacy.det_negative_conversions;
  result["budget_used"] = hv.conjugacy.budget_used;
  std::ostringstream human;
  int code = 3;
  switch (hv.outcome) {
  case HomeoOutcome::homeomorphic: {
    code = 0;
    result["verdict"] = "homeomorphic";
    result["witness"] = to_json(*hv.witness);
    if (hv.map_kind == HomeoMapKind::direct) {
      result["map"] = "(x, t) -> (Cx, t)";
    } else {
      result["map"] = "composition of (x,t)->(-x,t), (x,t)->(Cx,t), (x,t)->(x,1-t)";
    }
    human << "HOMEOMORPHIC via "
          << (hv.map_kind == HomeoMapKind::direct ? "direct conjugation" : "inverse composition")
          << "\nwitness C =\n" << hv.witness->to_string();
    break;
  }
  case HomeoOutcome::not_homeomorphic:
    code = 1;
    result["verdict"] = "not-homeomorphic";
    result["obstruction"] = hv.obstruction;
    result["separating_invariant"] = hv.conjugacy.separating_invariant;
    result["separating_values"] = hv.conjugacy.separating_values;
    human << "NOT HOMEOMORPHIC: " << hv.obstruction << "\n";
    break;
  case HomeoOutcome::unknown:
    code = 3;
    result["verdict"] = "unknown";
    human << "UNKNOWN within budget " << budget << " (used " << hv.conjugacy.budget_used << ")\n";
    break;
  }
  report["result"] = std::move(result);
  report["timings_ms"] = {{"total", timer.ms()}};
  emit(out, report, as_json, human.str());
  return code;
}

int cmd_ot(const std::string& path, long bits, bool as_json, std::ostream& out) {
  Timer timer;
  IntPoly p = read_poly_file(path);
  json report = report_frame("ot");
  report["parameters"] = {{"bits", bits}};
  report["input"] = {{"poly", to_json(p)}};

  auto res = correspondence_report(p, bits);
  if (std::holds_alternative<UnitPolyRejection>(res)) {
    auto rej = std::get<UnitPolyRejection>(res);
    report["result"] = {{"accepted", false}, {"reason", unit_poly_rejection_name(rej)}};
    report["timings_ms"] = {{"total", timer.ms()}};
    emit(out, report, as_json,
         std::string("REJECTED: ") + unit_poly_rejection_name(rej) + "\n");
    return 1;
  }
  const auto& rep = std::get<CorrespondenceReport>(res);
  json lattice = json::array();
  for (const auto& row : rep.ot.lattice_rows) {
    json jrow = json::array();
    for (const auto& e : row) jrow.push_back(to_json(e));
    lattice.push_back(std::move(jrow));
  }
  json betas = json::array();
  for (const auto& b : rep.ot.betas) betas.push_back(to_json(b));
  report["result"] = {
      {"accepted", true},
      {"D", to_json(rep.D)},
      {"type_I", to_json(rep.type_I)},
      {"diagonalizable", rep.diagonalizable},
      {"r_diagonal_matches", rep.r_diagonal_matches},
      {"lattice_matches_u_rows", rep.lattice_matches_u_rows},
      {"field_data",
       {{"s", rep.ot.s}, {"t", rep.ot.t}, {"alpha", to_json(rep.ot.alpha)}, {"betas", std::move(betas)},
        {"lattice_rows", std::move(lattice)}}},
  };
  report["timings_ms"] = {{"total", timer.ms()}};

  std::ostringstream human;
  human << "correspondence verified for P = " << p.to_string() << "\n"
        << "  D_P = C_P^T accepted as type I (n = " << rep.type_I.n << "), diagonalizable\n"
        << "  unit action: alpha ~ " << preview(rep.ot.alpha) << "\n";
  for (std::size_t i = 0; i < rep.ot.betas.size(); ++i)
    human << "  beta_" << (i + 1) << " ~ " << preview(rep.ot.betas[i]) << "\n";
  human << "  lattice rows match the eigen-data u-rows\n";
  emit(out, report, as_json, human.str());
  return 0;
}

int cmd_search(int dim, const std::string& mode_name, int count, std::uint64_t seed,
               long entry_bound, const std::string& out_dir, bool as_json, std::ostream& out) {
  Timer timer;
  SearchConfig cfg;
  cfg.dim = dim;
  cfg.count = count;
  cfg.seed = seed;
  cfg.entry_bound = entry_bound;
  if (mode_name == "companion")
    cfg.mode = SearchMode::companion;
  else if (mode_name == "conjugated-companion")
    cfg.mode = SearchMode::conjugated_companion;
  else if (mode_name == "block-nondiag")
    cfg.mode = SearchMode::block_nondiag;
  else
    fail(errc::invalid_input, "unknown mode '" + mode_name + "'");

  SearchOutcome outcome = search_type_I(cfg);
  json files = json::array();
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < outcome.hits.size(); ++i) {
      std::ostringstream name;
      name << "M_" << std::setw(3) << std::setfill('0') << i << ".txt";
      std::string file = (std::filesystem::path(out_dir) / name.str()).string();
      write_file(file, matrix_to_text(outcome.hits[i].matrix));
      files.push_back(file);
    }
  }
  json report = report_frame("search");
  report["parameters"] = {{"dim", dim},   {"mode", mode_name},          {"count", count},
                          {"seed", seed}, {"entry_bound", entry_bound}, {"out", out_dir}};
  json hits = json::array();
  for (const auto& hit : outcome.hits) hits.push_back(to_json(hit.matrix));
  report["result"] = {{"found", outcome.hits.size()},
                      {"attempts", outcome.attempts},
                      {"matrices", std::move(hits)},
                      {"files", std::move(files)}};
  report["timings_ms"] = {{"total", timer.ms()}};

  std::ostringstream human;
  human << "found " << outcome.hits.size() << "/" << count << " in " << outcome.attempts
        << " attempts (seed " << seed << ")\n";
  for (std::size_t i = 0; i < outcome.hits.size(); ++i)
    human << "--- M_" << i << " ---\n" << outcome.hits[i].matrix.to_string();
  emit(out, report, as_json, human.str());
  return outcome.hits.empty() && count > 0 ? 1 : 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and classification toolkit for mapping-torus "
               "manifolds of integer matrices"};
  app.require_subcommand(1);

  long bits = 128;
  long budget = 1000000;
  bool as_json = false;

  std::string path_a, path_b, word_text, point_text, out_dir;
  std::string mode_name = "companion";
  std::string shifts_csv = "-2,-1,0,1,2";
  int dim = 3, count = 1;
  std::uint64_t seed = 0;
  long entry_bound = 3;

  auto* check = app.add_subcommand("check", "Certify the type-I hypotheses for a matrix");
  check->add_option("matrix", path_a, "matrix file")->required();
  check->add_option("--bits", bits, "enclosure precision (default 128)");
  check->add_flag("--json", as_json, "machine-readable report");

  auto* invariants = app.add_subcommand("invariants", "Presentation, homology, flags, mapping torus");
  invariants->add_option("matrix", path_a)->required();
  invariants->add_option("--bits", bits);
  invariants->add_flag("--json", as_json);

  auto* present = app.add_subcommand("present", "Print the fundamental-group presentation");
  present->add_option("matrix", path_a)->required();
  present->add_flag("--json", as_json);

  auto* orbit = app.add_subcommand("orbit", "Evaluate a word in the generators at a point");
  orbit->add_option("matrix", path_a)->required();
  orbit->add_option("--word", word_text, "e.g. \"0 1 1 2\" or \"g0 g1^-1\"")->required();
  orbit->add_option("--point", point_text, "w re/im then z re/im pairs, rationals or decimals");
  orbit->add_option("--bits", bits);
  orbit->add_flag("--json", as_json);

  auto* roots = app.add_subcommand("roots", "Certified real intervals and complex boxes");
  roots->add_option("poly", path_a)->required();
  roots->add_option("--bits", bits);
  roots->add_flag("--json", as_json);

  auto* classify = app.add_subcommand("classify", "Homeomorphism type of two mapping tori");
  classify->add_option("A", path_a)->required();
  classify->add_option("B", path_b)->required();
  classify->add_option("--budget", budget, "witness-search candidates (default 10^6)");
  classify->add_option("--shifts", shifts_csv, "fingerprint shift constants");
  classify->add_flag("--json", as_json);

  auto* ot = app.add_subcommand("ot", "Number-field correspondence data from a unit polynomial");
  ot->add_option("poly", path_a)->required();
  ot->add_option("--bits", bits);
  ot->add_flag("--json", as_json);

  auto* search = app.add_subcommand("search", "Generate certified example matrices");
  search->add_option("--dim", dim)->required();
  search->add_option("--mode", mode_name, "companion | conjugated-companion | block-nondiag");
  search->add_option("--count", count);
  search->add_option("--seed", seed);
  search->add_option("--entry-bound", entry_bound);
  search->add_option("--out", out_dir, "directory for matrix files");
  search->add_flag("--json", as_json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(path_a, bits, as_json, out);
    if (invariants->parsed()) return cmd_invariants(path_a, bits, as_json, out);
    if (present->parsed()) return cmd_present(path_a, as_json, out);
    if (orbit->parsed()) return cmd_orbit(path_a, word_text, point_text, bits, as_json, out);
    if (roots->parsed()) return cmd_roots(path_a, bits, as_json, out);
    if (classify->parsed()) return cmd_classify(path_a, path_b, budget, shifts_csv, as_json, out);
    if (ot->parsed()) return cmd_ot(path_a, bits, as_json, out);
    if (search->parsed())
      return cmd_search(dim, mode_name, count, seed, entry_bound, out_dir, as_json, out);
  } catch (const Error& e) {
    err << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

} // namespace inoue_cli
