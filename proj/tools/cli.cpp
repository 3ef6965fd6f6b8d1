#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "grassmor/errors.hpp"

namespace grassmor::cli {

namespace {

constexpr std::pair<const char*, Command> kCommands[] = {
    {"construct", Command::construct}, {"verify", Command::verify},
    {"transversal", Command::transversal}, {"codim", Command::codim},
    {"fillings", Command::fillings}, {"components", Command::components},
    {"sweep", Command::sweep},
};

Json ints(std::span<const int> v) { return Json(std::vector<int>(v.begin(), v.end())); }

Json term_json(const Term& t) {
  Json j;
  j["coeff"] = to_json(t.coeff);
  j["dx"] = t.dx;
  j["dy"] = t.dy;
  return j;
}

Json dims_json(const HomSpaceDims& d) {
  Json j;
  j["hom_K_On"] = d.hom_K_On;
  j["hom_On_E"] = d.hom_On_E;
  j["hom_K_E"] = d.hom_K_E;
  return j;
}

// Codimension data for one (sub, quot) pair.
Json codim_json(const SplittingPair& p) {
  Json j;
  j["codim_sub"] = ext1_self(p.sub);
  j["codim_quot"] = ext1_self(p.quot);
  j["codim_intersection"] = codim_intersection(p);
  j["dim_mor"] = dim_mor(p.r, p.n, p.e());
  j["expected_dim_intersection"] = dim_mor(p.r, p.n, p.e()) - codim_intersection(p);
  return j;
}

SplittingPair pair_from(const RunConfig& cfg) {
  if (!cfg.a || !cfg.b) throw InvalidInput("--a and --b are required");
  SplittingType sub = SplittingType::parse(*cfg.a);
  SplittingType quot = SplittingType::parse(*cfg.b);
  const int n = cfg.n.value_or(sub.rank() + quot.rank());
  const int r = sub.rank();
  if (cfg.r && *cfg.r != r) {
    throw InvalidInput("--r is " + std::to_string(*cfg.r) + " but --a has " +
                       std::to_string(r) + " parts");
  }
  if (sub.rank() + quot.rank() != n) {
    throw InvalidInput("--a and --b must have n = " + std::to_string(n) + " parts together");
  }
  SplittingPair p = SplittingPair::make(n, r, std::move(sub), std::move(quot));
  if (cfg.e && *cfg.e != p.e()) {
    throw InvalidInput("--e is " + std::to_string(*cfg.e) + " but the parts sum to " +
                       std::to_string(p.e()));
  }
  return p;
}

TangentSplitting tangent_from(const RunConfig& cfg) {
  if (!cfg.c) throw InvalidInput("--c is required");
  if (!cfg.r || !cfg.n) throw InvalidInput("--r and --n are required with --c");
  SplittingType parts = SplittingType::parse(*cfg.c);
  std::vector<int> c(parts.ascending().begin(), parts.ascending().end());
  TangentSplitting t(*cfg.r, *cfg.n, std::move(c));
  if (cfg.e) {
    long total = 0;
    for (int x : t.parts()) total += x;
    if (total != static_cast<long>(*cfg.e) * t.n()) {
      throw InvalidInput("--e is " + std::to_string(*cfg.e) + " but the parts of --c sum to " +
                         std::to_string(total) + ", not n e");
    }
  }
  return t;
}

Json header(const RunConfig& cfg) {
  Json doc;
  doc["command"] = to_string(cfg.command);
  return doc;
}

Json cmd_construct(const RunConfig& cfg, const ExactSequence& seq) {
  Json doc = header(cfg);
  doc["pair"] = to_json(seq.pair);
  doc["sequence"] = to_json(seq);
  return doc;
}

std::vector<SamplePoint> points_for(const RunConfig& cfg) {
  return cfg.seed ? seeded_sample_points(*cfg.seed) : default_sample_points();
}

Json dphi_json(const DPhiMatrix& m) {
  Json j;
  j["rows"] = m.entries.size();
  j["cols"] = m.entries.empty() ? 0 : m.entries.front().size();
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& q : row) r.push_back(to_json(q));
    rows.push_back(std::move(r));
  }
  j["entries"] = std::move(rows);
  return j;
}

Json cmd_codim(const RunConfig& cfg) {
  const SplittingPair p = pair_from(cfg);
  Json doc = header(cfg);
  doc["pair"] = to_json(p);
  const Json codims = codim_json(p);
  for (const auto& [k, v] : codims.items()) doc[k] = v;
  doc["sub_balanced"] = is_balanced(p.sub);
  doc["quot_balanced"] = is_balanced(p.quot);
  return doc;
}

Json tangent_json(const TangentSplitting& t) {
  Json j;
  j["r"] = t.r();
  j["n"] = t.n();
  j["c"] = ints(t.parts());
  return j;
}

Json cmd_fillings(const RunConfig& cfg) {
  const TangentSplitting t = tangent_from(cfg);
  const std::vector<Filling> all = enumerate_fillings(t);
  Json doc = header(cfg);
  doc["tangent"] = tangent_json(t);
  Json list = Json::array();
  long realizable = 0;
  long minimal = 0;
  for (const Filling& f : all) {
    Json j = to_json(f);
    if (f.realizable()) {
      ++realizable;
      const bool m = is_minimal(f, all);
      minimal += m ? 1 : 0;
      j["minimal"] = m;
    } else {
      j["minimal"] = nullptr;
    }
    list.push_back(std::move(j));
  }
  doc["fillings"] = std::move(list);
  doc["count"] = all.size();
  doc["realizable_count"] = realizable;
  doc["minimal_count"] = minimal;
  doc["lower_bound"] = minimal;
  doc["upper_bound"] = filling_upper_bound(t.r(), t.n());
  return doc;
}

Json cmd_components(const RunConfig& cfg) {
  const TangentSplitting t = tangent_from(cfg);
  const std::vector<Filling> all = enumerate_fillings(t);
  Json doc = header(cfg);
  doc["tangent"] = tangent_json(t);
  Json comps = Json::array();
  for (const Filling& f : all) {
    if (!f.realizable() || !is_minimal(f, all)) continue;
    const auto& d = *f.derived;
    const SplittingPair p = SplittingPair::make(t.n(), t.r(), d.sub, d.quot);
    Json j;
    j["grid"] = f.grid;
    j["pair"] = to_json(p);
    const Json codims = codim_json(p);
    for (const auto& [k, v] : codims.items()) j[k] = v;
    comps.push_back(std::move(j));
  }
  doc["lower_bound"] = comps.size();
  doc["upper_bound"] = filling_upper_bound(t.r(), t.n());
  doc["components"] = std::move(comps);
  return doc;
}

Json cmd_sweep(const RunConfig& cfg, bool& failed) {
  SweepOptions opts;
  opts.max_n = cfg.max_n;
  opts.max_e = cfg.max_e;
  if (opts.max_n < opts.min_n) throw InvalidInput("--max-n must be at least 4");
  if (opts.max_e < opts.min_e) throw InvalidInput("--max-e must be at least 1");
  const SweepSummary s = run_sweep(opts);
  Json doc = header(cfg);
  doc["max_n"] = opts.max_n;
  doc["max_e"] = opts.max_e;
  doc["instances"] = s.results.size();
  doc["general"] = s.general;
  doc["dualized"] = s.dualized;
  doc["failures"] = s.failures;
  Json failed_list = Json::array();
  for (const InstanceResult& r : s.results) {
    if (r.ok()) continue;
    Json j;
    j["instance"] = r.pair.key();
    j["provenance"] = to_string(r.provenance);
    j["checks"] = r.failures;
    failed_list.push_back(std::move(j));
  }
  doc["failed"] = std::move(failed_list);
  doc["all_passed"] = s.failures == 0;
  failed = s.failures != 0;
  return doc;
}

Json error_doc(const std::string& kind, const std::string& message) {
  Json doc;
  doc["error"]["kind"] = kind;
  doc["error"]["message"] = message;
  return doc;
}

void emit(const Json& doc, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << doc.dump(2) << '\n';
  } else {
    out << render_text(doc);
  }
}

// ---- text rendering -------------------------------------------------------

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool all_scalars(const Json& arr) {
  return std::all_of(arr.begin(), arr.end(), [](const Json& x) { return x.is_primitive(); });
}

bool is_grid(const Json& arr) {
  return !arr.empty() && std::all_of(arr.begin(), arr.end(), [](const Json& x) {
    return x.is_array() && all_scalars(x);
  });
}

bool is_poly(const Json& j) {
  return j.is_object() && j.contains("text") && j["text"].is_string() && j.contains("terms");
}

std::string inline_list(const Json& arr) {
  std::string s = "[";
  bool first = true;
  for (const Json& x : arr) {
    if (!first) s += ", ";
    s += scalar_text(x);
    first = false;
  }
  return s + "]";
}

void grid_text(const Json& rows, const std::string& pad, std::ostringstream& os) {
  std::vector<std::size_t> width;
  for (const Json& row : rows) {
    std::size_t c = 0;
    for (const Json& x : row) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], scalar_text(x).size());
      ++c;
    }
  }
  for (const Json& row : rows) {
    os << pad << "[ ";
    std::size_t c = 0;
    for (const Json& x : row) {
      const std::string s = scalar_text(x);
      os << std::string(width[c] - s.size(), ' ') << s << (c + 1 < row.size() ? "  " : "");
      ++c;
    }
    os << " ]\n";
  }
}

void value_text(const std::string& label, const Json& j, int depth, std::ostringstream& os);

void object_text(const Json& obj, int depth, std::ostringstream& os) {
  // Matrices carry both a rendered grid and structured terms; text shows the grid.
  const bool matrix = obj.contains("text") && obj["text"].is_array();
  for (const auto& [k, v] : obj.items()) {
    if (matrix && k == "entries") continue;
    value_text(k, v, depth, os);
  }
}

void value_text(const std::string& label, const Json& j, int depth, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (is_poly(j)) {
    os << pad << label << ": " << j["text"].get<std::string>() << '\n';
  } else if (j.is_object()) {
    os << pad << label << ":\n";
    object_text(j, depth + 1, os);
  } else if (j.is_array() && all_scalars(j)) {
    os << pad << label << ": " << inline_list(j) << '\n';
  } else if (j.is_array() && is_grid(j)) {
    os << pad << label << ":\n";
    grid_text(j, pad + "  ", os);
  } else if (j.is_array()) {
    os << pad << label << ":\n";
    int idx = 0;
    for (const Json& x : j) value_text("[" + std::to_string(idx++) + "]", x, depth + 1, os);
  } else {
    os << pad << label << ": " << scalar_text(j) << '\n';
  }
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [n, c] : kCommands) {
    if (name == n) return c;
  }
  return std::nullopt;
}

std::string to_string(Command c) {
  for (const auto& [n, cmd] : kCommands) {
    if (cmd == c) return n;
  }
  return "unknown";
}

Json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(grassmor::to_string(q));
}

Json to_json(const HomPoly& p) {
  Json j;
  j["degree"] = p.degree();
  j["text"] = p.to_string();
  Json terms = Json::array();
  for (const Term& t : p.terms()) terms.push_back(term_json(t));
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const PolyMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["row_degrees"] = m.row_degrees();
  j["col_degrees"] = m.col_degrees();
  j["text"] = m.rendered();
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols(); ++k) {
      Json terms = Json::array();
      for (const Term& t : m.at(i, k).terms()) terms.push_back(term_json(t));
      row.push_back(std::move(terms));
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Json to_json(const SplittingType& t) {
  Json j;
  j["non_increasing"] = t.descending();
  j["non_decreasing"] = ints(t.ascending());
  return j;
}

Json to_json(const SplittingPair& p) {
  Json j;
  j["n"] = p.n;
  j["r"] = p.r;
  j["e"] = p.e();
  j["sub"] = to_json(p.sub);
  j["quot"] = to_json(p.quot);
  return j;
}

Json to_json(const ExactSequence& seq) {
  Json j;
  j["provenance"] = to_string(seq.provenance);
  j["v"] = to_json(seq.v);
  j["u"] = to_json(seq.u);
  return j;
}

Json to_json(const ExactnessReport& rep) {
  Json j;
  j["provenance"] = to_string(rep.provenance);
  j["compose_zero"] = rep.compose_zero;
  j["minors"]["v_first"] = to_json(rep.minors.v_first);
  j["minors"]["v_second"] = to_json(rep.minors.v_second);
  j["minors"]["u_first"] = to_json(rep.minors.u_first);
  j["minors"]["u_second"] = to_json(rep.minors.u_second);
  Json pts = Json::array();
  for (const PointRank& pr : rep.point_ranks) {
    Json p;
    p["x"] = to_json(pr.point.x);
    p["y"] = to_json(pr.point.y);
    p["rank_v"] = pr.rank_v;
    p["rank_u"] = pr.rank_u;
    pts.push_back(std::move(p));
  }
  j["point_ranks"] = std::move(pts);
  j["verdict"] = rep.verdict;
  j["failures"] = rep.failures;
  return j;
}

Json to_json(const TransversalityReport& rep) {
  Json j;
  j["dims"] = dims_json(rep.dims);
  j["rank"] = rep.rank;
  j["surjective"] = rep.surjective;
  j["method"] = to_string(rep.method);
  j["witness_checked"] = rep.witness_checked;
  j["witness_spans"] = rep.witness_checked ? Json(rep.witness_spans) : Json(nullptr);
  return j;
}

Json to_json(const Filling& f) {
  Json j;
  j["grid"] = f.grid;
  j["realizable"] = f.realizable();
  if (f.derived) {
    j["e"] = f.derived->e;
    j["sub"] = to_json(f.derived->sub);
    j["quot"] = to_json(f.derived->quot);
  } else {
    j["e"] = nullptr;
    j["sub"] = nullptr;
    j["quot"] = nullptr;
  }
  return j;
}

std::string render_text(const Json& doc) {
  std::ostringstream os;
  if (doc.is_object()) {
    object_text(doc, 0, os);
  } else {
    value_text("value", doc, 0, os);
  }
  return os.str();
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  RunConfig cfg;
  CLI::App app{"Exact sequences, transversality and fillings for morphisms P^1 -> G(r, n)",
               "grassmor"};
  std::string command;
  std::string format = "text";
  std::vector<std::string> names;
  for (const auto& [n, c] : kCommands) names.emplace_back(n);

  app.add_option("command", command, "construct | verify | transversal | codim | fillings | "
                                     "components | sweep")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("--n", cfg.n, "Ambient dimension n");
  app.add_option("--r", cfg.r, "Rank r of the sub-bundle");
  app.add_option("--e", cfg.e, "Degree e (checked against the parts)");
  app.add_option("--a", cfg.a, "Sub splitting type, comma-separated, any order");
  app.add_option("--b", cfg.b, "Quotient splitting type, comma-separated, any order");
  app.add_option("--c", cfg.c, "Tangent splitting type, comma-separated, any order");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for extra random sample points in verify");
  app.add_option("--max-n", cfg.max_n, "Sweep bound on n")->capture_default_str();
  app.add_option("--max-e", cfg.max_e, "Sweep bound on e")->capture_default_str();
  app.add_flag("--emit-matrix", cfg.emit_matrix, "Include the DPhi matrix (transversal)");
  app.add_option("-o,--output", cfg.output, "Write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw InvalidInput(e.what());
  }
  cfg.command = *parse_command(command);
  cfg.format = format == "json" ? Format::json : Format::text;
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Json doc;
  int code = kExitOk;
  try {
    switch (cfg.command) {
      case Command::construct:
        doc = cmd_construct(cfg, build(pair_from(cfg)));
        break;
      case Command::verify: {
        const ExactSequence seq = build(pair_from(cfg));
        const std::vector<SamplePoint> pts = points_for(cfg);
        doc = cmd_construct(cfg, seq);
        const ExactnessReport rep = grassmor::verify(seq, pts);
        doc["exactness"] = to_json(rep);
        if (!rep.verdict) code = kExitFailure;
        break;
      }
      case Command::transversal: {
        const ExactSequence seq = build(pair_from(cfg));
        const std::vector<SamplePoint> pts = points_for(cfg);
        doc = cmd_construct(cfg, seq);
        const ExactnessReport ex = grassmor::verify(seq, pts);
        const TransversalityReport tr = is_surjective(seq, true);
        doc["exactness"] = to_json(ex);
        doc["transversality"] = to_json(tr);
        const std::optional<bool> shortcut = balanced_shortcut(seq.pair);
        doc["balanced_shortcut"] = shortcut ? Json(*shortcut) : Json(nullptr);
        if (cfg.emit_matrix) doc["dphi"] = dphi_json(assemble_dphi(seq));
        if (!ex.verdict || !tr.surjective || !tr.witness_spans) code = kExitFailure;
        break;
      }
      case Command::codim:
        doc = cmd_codim(cfg);
        break;
      case Command::fillings:
        doc = cmd_fillings(cfg);
        break;
      case Command::components:
        doc = cmd_components(cfg);
        break;
      case Command::sweep: {
        bool failed = false;
        doc = cmd_sweep(cfg, failed);
        if (failed) code = kExitFailure;
        break;
      }
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    doc = error_doc("invalid_input", e.what());
    code = kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    doc = error_doc("internal", e.what());
    code = kExitFailure;
  }

  if (cfg.output) {
    std::ofstream file(*cfg.output);
    if (!file) {
      err << "error: cannot open " << *cfg.output << '\n';
      return kExitInvalidInput;
    }
    emit(doc, cfg.format, file);
  } else {
    emit(doc, cfg.format, out);
  }
  return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> cfg;
  try {
    cfg = parse_args(argc, argv, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  if (!cfg) return kExitOk;
  return run(*cfg, out, err);
}

}  // namespace grassmor::cli
