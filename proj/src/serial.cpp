#include "cglab/serial.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "cglab/errors.hpp"

namespace cglab {

namespace {

constexpr const char* kEngineVersion = "cglab-growth-1";

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string table_payload(const GrowthTable& t) {
  std::string payload = t.group + "|" + to_string(t.kind) + "|" + to_string(t.mode) + "|" +
                        to_string(t.engine) + "|" + kEngineVersion + "|" +
                        std::to_string(t.n_max());
  for (const auto& c : t.coeffs) {
    payload += "|";
    payload += c.str();
  }
  return payload;
}

std::string checksum_of(const GrowthTable& t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                static_cast<unsigned long long>(fnv1a(table_payload(t))));
  return buf;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string table_to_json(const GrowthTable& t) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["group"] = t.group;
  j["kind"] = to_string(t.kind);
  j["mode"] = to_string(t.mode);
  j["engine"] = to_string(t.engine);
  j["engine_version"] = kEngineVersion;
  j["n_max"] = t.n_max();
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : t.coeffs) coeffs.push_back(c.str());
  j["coeffs"] = std::move(coeffs);
  j["checksum"] = checksum_of(t);
  return j.dump(2) + "\n";
}

GrowthTable table_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw CacheError(std::string("table JSON parse failure: ") + e.what());
  }
  GrowthTable t;
  try {
    if (j.at("schema").get<int>() != 1) throw CacheError("unsupported table schema");
    t.group = j.at("group").get<std::string>();
    t.kind = growth_kind_from_string(j.at("kind").get<std::string>());
    t.mode = growth_mode_from_string(j.at("mode").get<std::string>());
    t.engine = growth_engine_from_string(j.at("engine").get<std::string>());
    for (const auto& c : j.at("coeffs")) t.coeffs.emplace_back(c.get<std::string>());
    if (j.at("n_max").get<int>() != t.n_max()) throw CacheError("n_max/coeffs mismatch");
    if (j.at("engine_version").get<std::string>() != kEngineVersion) {
      throw CacheError("stale engine version '" + j.at("engine_version").get<std::string>() + "'");
    }
    std::string expect = checksum_of(t);
    if (j.at("checksum").get<std::string>() != expect) {
      throw CacheError("checksum mismatch: stored " + j.at("checksum").get<std::string>() +
                       ", computed " + expect);
    }
  } catch (const CacheError&) {
    throw;
  } catch (const std::exception& e) {
    throw CacheError(std::string("malformed table JSON: ") + e.what());
  }
  return t;
}

std::string table_to_csv(const GrowthTable& t) {
  std::string out;
  for (std::size_t n = 0; n < t.coeffs.size(); ++n) {
    out += std::to_string(n) + "," + t.coeffs[n].str() + "\n";
  }
  return out;
}

std::string cache_file_name(const std::string& group, GrowthKind kind, GrowthMode mode) {
  std::string g;
  for (char c : group) {
    g += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  return g + "." + to_string(kind) + "." + to_string(mode) + ".json";
}

void cache_write(const std::string& dir, const GrowthTable& t) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path path = fs::path(dir) / cache_file_name(t.group, t.kind, t.mode);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot open cache file for writing: " + tmp.string());
    out << table_to_json(t);
    if (!out) throw CacheError("short write to cache file: " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) throw CacheError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

std::optional<GrowthTable> cache_read(const std::string& dir, const std::string& group,
                                      GrowthKind kind, GrowthMode mode, GrowthEngine engine,
                                      int n_max) {
  namespace fs = std::filesystem;
  fs::path path = fs::path(dir) / cache_file_name(group, kind, mode);
  if (!fs::exists(path)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open cache file: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  GrowthTable t;
  try {
    t = table_from_json(text);
  } catch (const CacheError& e) {
    throw CacheError(path.string() + ": " + e.what());
  }
  if (t.group != group || t.kind != kind || t.mode != mode) {
    throw CacheError(path.string() + ": cache entry key mismatch");
  }
  if (t.engine != engine || t.n_max() != n_max) return std::nullopt;  // not a hit, recompute
  return t;
}

std::string dfa_to_json(const Dfa& d) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json symbols = nlohmann::ordered_json::array();
  for (int s = 0; s < d.symbols.num_symbols(); ++s) symbols.push_back(d.symbols.name(s));
  j["symbols"] = std::move(symbols);
  j["states"] = d.num_states;
  j["start"] = d.start;
  nlohmann::ordered_json acc = nlohmann::ordered_json::array();
  for (int s = 0; s < d.num_states; ++s) {
    if (d.accepting[static_cast<std::size_t>(s)]) acc.push_back(s);
  }
  j["accepting"] = std::move(acc);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int s = 0; s < d.num_states; ++s) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int x = 0; x < d.symbols.num_symbols(); ++x) row.push_back(d.tr(s, x));
    rows.push_back(std::move(row));
  }
  j["transitions"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string dfa_to_dot(const Dfa& d) {
  std::string out = "digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int s = 1; s < d.num_states; ++s) {
    if (d.accepting[static_cast<std::size_t>(s)]) {
      out += "  " + std::to_string(s) + " [shape=doublecircle];\n";
    }
  }
  if (d.start != 0) {
    out += "  start [shape=none,label=\"\"];\n";
    out += "  start -> " + std::to_string(d.start) + ";\n";
  }
  for (int s = 1; s < d.num_states; ++s) {
    for (int x = 0; x < d.symbols.num_symbols(); ++x) {
      int t = d.tr(s, x);
      if (t == 0) continue;
      out += "  " + std::to_string(s) + " -> " + std::to_string(t) + " [label=\"" +
             d.symbols.name(x) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

std::string recurrence_report_to_json(const RecurrenceReport& rep, int n_coeffs) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["test"] = "recurrence";
  j["n_coeffs"] = n_coeffs;
  j["found"] = rep.found;
  if (rep.found) {
    j["order"] = rep.order;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& c : rep.coeffs) {
      cs.push_back(boost::multiprecision::numerator(c).str() + "/" +
                   boost::multiprecision::denominator(c).str());
    }
    j["coeffs"] = std::move(cs);
    j["window"] = {rep.window_lo, rep.window_hi};
    j["verified_through"] = rep.verified_through;
  } else {
    j["max_order_tested"] = rep.order;
    j["verified_through"] = rep.verified_through;
  }
  return j.dump(2) + "\n";
}

std::string asymptotics_report_to_json(const BandCheckReport& band, const AsymptoticFit& fit,
                                       double e_h, bool e_h_exact) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["e_h"] = format_double(e_h);
  j["e_h_exact"] = e_h_exact;
  nlohmann::ordered_json b;
  b["range"] = {band.lo, band.hi};
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (double r : band.r) rs.push_back(format_double(r));
  b["r"] = std::move(rs);
  b["min"] = format_double(band.min);
  b["max"] = format_double(band.max);
  b["ratio"] = format_double(band.ratio);
  j["band"] = std::move(b);
  nlohmann::ordered_json f;
  f["range"] = {fit.lo, fit.hi};
  f["lambda"] = format_double(fit.lambda);
  f["p_hat"] = format_double(fit.p_hat);
  f["residual"] = format_double(fit.residual);
  j["fit"] = std::move(f);
  return j.dump(2) + "\n";
}

}  // namespace cglab
