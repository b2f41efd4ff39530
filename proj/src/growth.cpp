#include "cglab/growth.hpp"

#include <unordered_set>

#include "cglab/errors.hpp"
#include "cglab/model_automata.hpp"
#include "cglab/poly.hpp"

namespace cglab {

std::string to_string(GrowthKind k) {
  switch (k) {
    case GrowthKind::Ball: return "ball";
    case GrowthKind::Conj: return "conj";
    case GrowthKind::PConj: return "pconj";
    case GrowthKind::Comm: return "comm";
  }
  return "?";
}

std::string to_string(GrowthMode m) {
  return m == GrowthMode::Strict ? "strict" : "cumulative";
}

std::string to_string(GrowthEngine e) {
  return e == GrowthEngine::Enumerate ? "enum" : "formula";
}

GrowthKind growth_kind_from_string(const std::string& s) {
  if (s == "ball") return GrowthKind::Ball;
  if (s == "conj") return GrowthKind::Conj;
  if (s == "pconj") return GrowthKind::PConj;
  if (s == "comm") return GrowthKind::Comm;
  throw ParseError("unknown growth kind '" + s + "'");
}

GrowthMode growth_mode_from_string(const std::string& s) {
  if (s == "strict") return GrowthMode::Strict;
  if (s == "cumulative") return GrowthMode::Cumulative;
  throw ParseError("unknown growth mode '" + s + "'");
}

GrowthEngine growth_engine_from_string(const std::string& s) {
  if (s == "enum") return GrowthEngine::Enumerate;
  if (s == "formula") return GrowthEngine::Formula;
  throw ParseError("unknown growth engine '" + s + "'");
}

namespace {

// Strict counts of one sphere: distinct keys whose minimal class length is
// exactly n.
BigInt strict_count_at(const GroupModel& g, GrowthKind kind, int n, std::int64_t budget) {
  if (kind == GrowthKind::Ball) return sphere_size(g, n);
  if (n == 0) {
    // Identity: one conjugacy class, one torsion commensurability class, not
    // primitive.
    return kind == GrowthKind::PConj ? 0 : 1;
  }
  std::unordered_set<Word, WordHash> keys;
  for_each_sphere_word(
      g, n,
      [&](const Word& w) {
        Word key = conj_key(g, w);
        if (key.length() != n) return;  // class counted at its minimal length
        switch (kind) {
          case GrowthKind::Conj:
            keys.insert(std::move(key));
            break;
          case GrowthKind::PConj:
          case GrowthKind::Comm: {
            if (has_finite_order(g, key)) return;
            if (smallest_cyclic_period(key) != n) return;  // proper power
            if (kind == GrowthKind::PConj) {
              keys.insert(std::move(key));
            } else {
              // New commensurability classes at length n come only from
              // primitive keys of length n.
              Word k2 = conj_key(g, inv(g, key));
              keys.insert(std::min(key, k2));
            }
            break;
          }
          case GrowthKind::Ball:
            break;
        }
      },
      budget);
  return BigInt(keys.size());
}

std::vector<BigInt> formula_strict(const GroupModel& g, GrowthKind kind, int n_max) {
  if (!g.is_free()) {
    throw FormulaUnavailable("formula engine covers free groups only; use --engine enum");
  }
  switch (kind) {
    case GrowthKind::Ball: {
      std::vector<BigInt> out;
      for (int n = 0; n <= n_max; ++n) out.push_back(sphere_size(g, n));
      return out;
    }
    case GrowthKind::Conj:
      return necklace_counts_free(g.rank, n_max);
    case GrowthKind::PConj:
      return primitive_necklace_counts_free(g.rank, n_max);
    case GrowthKind::Comm: {
      // Free groups are bi-orderable, so no primitive class meets its inverse
      // class; commensurability pairs {[r], [r^-1]} halve the primitive count.
      std::vector<BigInt> p = primitive_necklace_counts_free(g.rank, n_max);
      std::vector<BigInt> out(p.size());
      out[0] = 1;  // the torsion class (identity)
      for (std::size_t n = 1; n < p.size(); ++n) {
        if (p[n] % 2 != 0) throw InvariantViolation("odd primitive count in free group");
        out[n] = p[n] / 2;
      }
      return out;
    }
  }
  throw InvariantViolation("unreachable growth kind");
}

}  // namespace

GrowthTable count_growth(const GroupModel& g, GrowthKind kind, GrowthMode mode, int n_max,
                         GrowthEngine engine, const GrowthCaps& caps) {
  if (n_max < 0) throw RangeError("n_max must be >= 0");
  std::vector<BigInt> strict;
  if (engine == GrowthEngine::Formula) {
    if (n_max > caps.formula_n_cap) {
      throw ResourceCap("n_max " + std::to_string(n_max) + " exceeds the formula engine cap " +
                        std::to_string(caps.formula_n_cap));
    }
    strict = formula_strict(g, kind, n_max);
  } else {
    if (n_max > caps.enum_n_cap) {
      throw ResourceCap("n_max " + std::to_string(n_max) + " exceeds the enumerate engine cap " +
                        std::to_string(caps.enum_n_cap));
    }
    strict.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) strict.push_back(strict_count_at(g, kind, n, caps.sphere_budget));
  }
  GrowthTable t;
  t.group = g.descriptor();
  t.kind = kind;
  t.mode = GrowthMode::Strict;
  t.engine = engine;
  t.coeffs = std::move(strict);
  if (mode == GrowthMode::Cumulative) t = convert_mode(t);
  return t;
}

std::vector<BigInt> cyclically_reduced_counts(int k, int n_max) {
  const GroupModel g = GroupModel::free_group(k);
  return count_per_length(geo_conj_dfa(g), n_max);
}

namespace {

long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int mobius(int n) {
  int count = 0;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count % 2 == 0 ? 1 : -1;
}

}  // namespace

std::vector<BigInt> necklace_counts_free(int k, int n_max) {
  if (k < 2) throw RangeError("necklace_counts_free requires rank >= 2");
  std::vector<BigInt> c = cyclically_reduced_counts(k, n_max);
  std::vector<BigInt> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      acc += BigInt(euler_phi(d)) * c[static_cast<std::size_t>(n / d)];
    }
    if (acc % n != 0) throw InvariantViolation("Burnside sum not divisible by n");
    out[static_cast<std::size_t>(n)] = acc / n;
  }
  return out;
}

std::vector<BigInt> primitive_necklace_counts_free(int k, int n_max) {
  std::vector<BigInt> c = cyclically_reduced_counts(k, n_max);
  std::vector<BigInt> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = 0;
  for (int n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      acc += BigInt(mobius(n / d)) * c[static_cast<std::size_t>(d)];
    }
    if (acc % n != 0) throw InvariantViolation("Moebius sum not divisible by n");
    out[static_cast<std::size_t>(n)] = acc / n;
  }
  return out;
}

std::vector<BigInt> ball_counts(const GroupModel& g, int n_max) {
  std::vector<BigInt> strict;
  if (g.is_free()) {
    strict = series_expand(rational_gf(geodesic_dfa(g)), n_max);
  } else {
    strict = count_per_length(geodesic_dfa(g), n_max);
  }
  std::vector<BigInt> out(strict.size());
  BigInt acc = 0;
  for (std::size_t n = 0; n < strict.size(); ++n) {
    acc += strict[n];
    out[n] = acc;
  }
  return out;
}

GrowthTable convert_mode(const GrowthTable& t) {
  GrowthTable out = t;
  if (t.mode == GrowthMode::Strict) {
    out.mode = GrowthMode::Cumulative;
    BigInt acc = 0;
    for (std::size_t n = 0; n < t.coeffs.size(); ++n) {
      acc += t.coeffs[n];
      out.coeffs[n] = acc;
    }
  } else {
    out.mode = GrowthMode::Strict;
    BigInt prev = 0;
    for (std::size_t n = 0; n < t.coeffs.size(); ++n) {
      if (t.coeffs[n] < prev) {
        throw NegativeDifference("cumulative table is not monotone at n=" + std::to_string(n));
      }
      out.coeffs[n] = t.coeffs[n] - prev;
      prev = t.coeffs[n];
    }
  }
  return out;
}

}  // namespace cglab
