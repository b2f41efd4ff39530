#pragma once

#include <string>
#include <vector>

#include "cglab/bigint.hpp"
#include "cglab/group_model.hpp"

namespace cglab {

enum class GrowthKind { Ball, Conj, PConj, Comm };
enum class GrowthMode { Strict, Cumulative };
enum class GrowthEngine { Enumerate, Formula };

std::string to_string(GrowthKind k);
std::string to_string(GrowthMode m);
std::string to_string(GrowthEngine e);
GrowthKind growth_kind_from_string(const std::string& s);
GrowthMode growth_mode_from_string(const std::string& s);
GrowthEngine growth_engine_from_string(const std::string& s);

struct GrowthTable {
  std::string group;
  GrowthKind kind = GrowthKind::Conj;
  GrowthMode mode = GrowthMode::Cumulative;
  GrowthEngine engine = GrowthEngine::Enumerate;
  std::vector<BigInt> coeffs;  // index n = 0..n_max

  int n_max() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct GrowthCaps {
  int enum_n_cap = 12;
  int formula_n_cap = 30;
  std::int64_t sphere_budget = kDefaultSphereBudget;
};

// coeffs[n] = number of distinct classes of the requested kind with minimal
// length exactly n (strict) or <= n (cumulative). The enumerate engine streams
// spheres and deduplicates canonical keys; the formula engine uses the
// necklace / Moebius closed forms (free groups only).
GrowthTable count_growth(const GroupModel& g, GrowthKind kind, GrowthMode mode, int n_max,
                         GrowthEngine engine, const GrowthCaps& caps = {});

// Strict conjugacy counts of F_k by Burnside averaging over rotations:
// sigma(n) = (1/n) sum_{d|n} phi(d) c(n/d), with c from the transfer matrix
// of the cyclically-reduced-word automaton.
std::vector<BigInt> necklace_counts_free(int k, int n_max);
// c(m): number of cyclically reduced words of length m in F_k.
std::vector<BigInt> cyclically_reduced_counts(int k, int n_max);
// Strict primitive-conjugacy counts of F_k (Moebius inversion over c).
std::vector<BigInt> primitive_necklace_counts_free(int k, int n_max);

// Cumulative ball sizes: rational-gf expansion of the geodesic automaton for
// free groups, transfer-matrix counts for free products.
std::vector<BigInt> ball_counts(const GroupModel& g, int n_max);

// Strict <-> cumulative: first differences / prefix sums.
GrowthTable convert_mode(const GrowthTable& t);

}  // namespace cglab
