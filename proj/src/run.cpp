#include "cglab/run.hpp"

#include <fstream>
#include <sstream>

#include "cglab/analysis.hpp"
#include "cglab/bcd.hpp"
#include "cglab/errors.hpp"
#include "cglab/growth.hpp"
#include "cglab/serial.hpp"

namespace cglab {

namespace {

GrowthTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open input table: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return table_from_json(text);
  } catch (const CacheError& e) {
    throw CacheError(path + ": " + e.what());
  }
}

std::pair<int, int> parse_range(const std::string& r) {
  auto colon = r.find(':');
  if (colon == std::string::npos) throw ParseError("range must look like LO:HI");
  try {
    return {std::stoi(r.substr(0, colon)), std::stoi(r.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ParseError("range must look like LO:HI");
  }
}

int run_growth_count(const RunConfig& cfg, std::ostream& out) {
  GroupModel model = GroupModel::parse(cfg.group);
  GrowthKind kind = growth_kind_from_string(cfg.kind);
  GrowthMode mode = growth_mode_from_string(cfg.mode);
  GrowthEngine engine = growth_engine_from_string(cfg.engine);
  GrowthCaps caps;
  caps.enum_n_cap = cfg.enum_cap;
  caps.formula_n_cap = cfg.formula_cap;

  GrowthTable table;
  bool have = false;
  if (!cfg.cache_dir.empty()) {
    auto cached = cache_read(cfg.cache_dir, model.descriptor(), kind, mode, engine, cfg.n_max);
    if (cached) {
      table = std::move(*cached);
      have = true;
    }
  }
  if (!have) {
    table = count_growth(model, kind, mode, cfg.n_max, engine, caps);
    if (!cfg.cache_dir.empty()) cache_write(cfg.cache_dir, table);
  }
  if (cfg.format == "json") {
    out << table_to_json(table);
  } else if (cfg.format == "csv") {
    out << table_to_csv(table);
  } else {
    throw ParseError("unknown output format '" + cfg.format + "' (csv|json)");
  }
  return 0;
}

int run_series_analyze(const RunConfig& cfg, std::ostream& out) {
  if (cfg.test != "recurrence") {
    throw ParseError("unknown series test '" + cfg.test + "' (only: recurrence)");
  }
  GrowthTable t = load_table(cfg.input_path);
  RecurrenceReport rep = find_recurrence(t.coeffs, cfg.max_order);
  out << recurrence_report_to_json(rep, static_cast<int>(t.coeffs.size()));
  return 0;
}

int run_series_asymptotics(const RunConfig& cfg, std::ostream& out) {
  GrowthTable t = load_table(cfg.input_path);
  auto [lo, hi] = parse_range(cfg.range);
  double e_h = 0.0;
  bool exact = false;
  if (cfg.base == "exact") {
    GroupModel model = GroupModel::parse(t.group);
    int n_ball = std::min(30, std::max({12, hi + 2, 3 * 8}));
    auto est = growth_rate(ball_counts(model, n_ball));
    e_h = est.value;
    exact = est.exact;
  } else {
    try {
      e_h = std::stod(cfg.base);
    } catch (const std::exception&) {
      throw ParseError("--base must be 'exact' or a float");
    }
    if (!(e_h > 0)) throw ParseError("--base must be positive");
  }
  // The band uses the cumulative view; the fit uses the table's own mode.
  GrowthTable cumulative = t.mode == GrowthMode::Cumulative ? t : convert_mode(t);
  BandCheckReport band = band_check(cumulative.coeffs, e_h, lo, hi);
  AsymptoticFit fit = exponent_fit(t.coeffs, e_h, lo, hi);
  out << asymptotics_report_to_json(band, fit, e_h, exact);
  return 0;
}

int run_fsa_build(const RunConfig& cfg, std::ostream& out) {
  GroupModel model = GroupModel::parse(cfg.group);
  BcdConfig bcd_cfg = BcdConfig::make(model, cfg.K);
  Dfa dfa;
  if (cfg.which == "bcd") {
    dfa = build_bcd_automaton(bcd_cfg);
  } else if (cfg.which == "lex") {
    dfa = build_lex_automaton(bcd_cfg.pa);
  } else if (cfg.which == "S") {
    dfa = build_S(bcd_cfg);
  } else if (cfg.which == "delta") {
    dfa = build_delta(bcd_cfg).m2;
  } else {
    throw ParseError("unknown automaton '" + cfg.which + "' (bcd|lex|S|delta)");
  }
  if (cfg.fsa_out == "dot") {
    out << dfa_to_dot(dfa);
  } else if (cfg.fsa_out == "json") {
    out << dfa_to_json(dfa);
  } else {
    throw ParseError("unknown automaton output '" + cfg.fsa_out + "' (dot|json)");
  }
  return 0;
}

int run_delta_apply(const RunConfig& cfg, std::ostream& out) {
  GroupModel model = GroupModel::parse(cfg.group);
  BcdConfig bcd_cfg = BcdConfig::make(model, cfg.K);
  Word u = parse_word(model.alphabet, cfg.word);
  DeltaMachine dm = build_delta(bcd_cfg);
  DeltaResult res = delta_apply(dm, u);
  out << "input: " << format_word(model.alphabet, u) << "\n";
  out << "delta: " << format_word(model.alphabet, res.output) << "\n";
  out << "conjugator: " << format_word(model.alphabet, res.conjugator) << "\n";
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "growth-count") return run_growth_count(cfg, out);
    if (cfg.command == "series-analyze") return run_series_analyze(cfg, out);
    if (cfg.command == "series-asymptotics") return run_series_asymptotics(cfg, out);
    if (cfg.command == "fsa-build") return run_fsa_build(cfg, out);
    if (cfg.command == "delta-apply") return run_delta_apply(cfg, out);
    err << "error: unknown command '" << cfg.command << "'\n";
    return 2;
  } catch (const ResourceCap& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const CacheError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NegativeDifference& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace cglab
