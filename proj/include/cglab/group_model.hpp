#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cglab/bigint.hpp"
#include "cglab/word.hpp"

namespace cglab {

enum class GroupKind { FreeGroup, FreeProductFiniteCyclic };

// A computable group: a free group F_k or a free product Z/m * Z/n.
// Generating sets: the 2k standard generators for F_k; all nontrivial factor
// elements for the free product, so geodesic length is syllable count.
struct GroupModel {
  GroupKind kind;
  int rank = 0;   // FreeGroup
  int m = 0;      // FreeProductFiniteCyclic: first factor order
  int n = 0;      //                         second factor order
  Alphabet alphabet;
  std::vector<int> letter_factor;  // free product: 0 or 1 per letter
  std::vector<int> letter_power;   // free product: exponent 1..order-1
  int max_finite_subgroup_order = 1;  // M: 1 for free groups, max(m,n) otherwise

  static GroupModel free_group(int rank);
  static GroupModel free_product(int m, int n);
  // Descriptor strings: "free:2", "zm*zn:2,3".
  static GroupModel parse(const std::string& descriptor);
  std::string descriptor() const;

  bool is_free() const { return kind == GroupKind::FreeGroup; }
};

// Geodesic normal form: free reduction, or alternating-syllable collapse.
Word geodesic_form(const GroupModel& g, const Word& w);
int geodesic_length(const GroupModel& g, const Word& w);
// Group multiplication / inversion in normal form.
Word mul(const GroupModel& g, const Word& u, const Word& v);
Word inv(const GroupModel& g, const Word& w);

bool has_finite_order(const GroupModel& g, const Word& w);
// Word is its own geodesic form and is minimal in its conjugacy class.
bool is_conj_geodesic(const GroupModel& g, const Word& w);

// Canonical conjugacy key: cyclically reduced (or cyclically alternating)
// form, lexicographically least over rotations.
Word conj_key(const GroupModel& g, const Word& w);

struct RootResult {
  Word root;
  int exponent;
};
// Maximal-root decomposition of an infinite-order element; throws TorsionInput.
RootResult primitive_root(const GroupModel& g, const Word& w);
bool is_primitive(const GroupModel& g, const Word& w);

// Commensurability key: one shared class for all finite-order elements,
// otherwise the lex-least conjugacy key of {root, root^-1}.
struct CommKey {
  bool torsion = false;
  Word key;  // empty when torsion

  // Minimal geodesic length of any element in the class.
  int min_length() const { return torsion ? 0 : key.length(); }
  auto operator<=>(const CommKey&) const = default;
};
struct CommKeyHash {
  std::size_t operator()(const CommKey& k) const {
    return WordHash{}(k.key) ^ (k.torsion ? 0x9e3779b97f4a7c15ull : 0);
  }
};
CommKey comm_key(const GroupModel& g, const Word& w);

// Exact sphere and ball cardinalities (closed-form / product recursion).
BigInt sphere_size(const GroupModel& g, int n);
BigInt ball_size(const GroupModel& g, int n);

inline constexpr std::int64_t kDefaultSphereBudget = 7'000'000;  // free:2 n=14 fits

// Visits every element of geodesic length exactly n once, in lex order of the
// normal form. Throws ResourceCap when the sphere exceeds `budget` elements.
void for_each_sphere_word(const GroupModel& g, int n,
                          const std::function<void(const Word&)>& visit,
                          std::int64_t budget = kDefaultSphereBudget);
std::vector<Word> enumerate_sphere(const GroupModel& g, int n,
                                   std::int64_t budget = kDefaultSphereBudget);
// All elements of geodesic length <= n, spheres in increasing length.
std::vector<Word> enumerate_ball(const GroupModel& g, int n,
                                 std::int64_t budget = kDefaultSphereBudget);

}  // namespace cglab
