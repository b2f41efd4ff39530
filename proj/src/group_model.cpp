#include "cglab/group_model.hpp"

#include <algorithm>

#include "cglab/errors.hpp"

namespace cglab {

GroupModel GroupModel::free_group(int rank) {
  GroupModel g;
  g.kind = GroupKind::FreeGroup;
  g.rank = rank;
  g.alphabet = Alphabet::free_group(rank);
  g.max_finite_subgroup_order = 1;
  return g;
}

GroupModel GroupModel::free_product(int m, int n) {
  GroupModel g;
  g.kind = GroupKind::FreeProductFiniteCyclic;
  g.m = m;
  g.n = n;
  g.alphabet = Alphabet::free_product_cyclic(m, n);
  g.letter_factor.resize(static_cast<std::size_t>(g.alphabet.size()));
  g.letter_power.resize(static_cast<std::size_t>(g.alphabet.size()));
  for (int i = 0; i < m - 1; ++i) {
    g.letter_factor[static_cast<std::size_t>(i)] = 0;
    g.letter_power[static_cast<std::size_t>(i)] = i + 1;
  }
  for (int i = 0; i < n - 1; ++i) {
    g.letter_factor[static_cast<std::size_t>(m - 1 + i)] = 1;
    g.letter_power[static_cast<std::size_t>(m - 1 + i)] = i + 1;
  }
  g.max_finite_subgroup_order = std::max(m, n);
  return g;
}

GroupModel GroupModel::parse(const std::string& d) {
  if (d.rfind("free:", 0) == 0) {
    int rank = 0;
    try {
      rank = std::stoi(d.substr(5));
    } catch (...) {
      throw ParseError("bad group descriptor '" + d + "'");
    }
    return free_group(rank);
  }
  if (d.rfind("zm*zn:", 0) == 0) {
    std::string rest = d.substr(6);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw ParseError("bad group descriptor '" + d + "'");
    int m = 0, n = 0;
    try {
      m = std::stoi(rest.substr(0, comma));
      n = std::stoi(rest.substr(comma + 1));
    } catch (...) {
      throw ParseError("bad group descriptor '" + d + "'");
    }
    return free_product(m, n);
  }
  throw ParseError("unknown group descriptor '" + d + "' (expected free:K or zm*zn:M,N)");
}

std::string GroupModel::descriptor() const {
  if (is_free()) return "free:" + std::to_string(rank);
  return "zm*zn:" + std::to_string(m) + "," + std::to_string(n);
}

namespace {

int factor_order(const GroupModel& g, int factor) { return factor == 0 ? g.m : g.n; }

Letter fp_letter(const GroupModel& g, int factor, int power) {
  // power in 1..order-1
  return static_cast<Letter>(factor == 0 ? power - 1 : g.m - 1 + power - 1);
}

// Collapse to the alternating-syllable normal form of a free product.
Word fp_geodesic(const GroupModel& g, const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.letters.size());
  for (Letter x : w.letters) {
    int f = g.letter_factor[static_cast<std::size_t>(x)];
    int p = g.letter_power[static_cast<std::size_t>(x)];
    while (!stack.empty() && g.letter_factor[static_cast<std::size_t>(stack.back())] == f) {
      p = (g.letter_power[static_cast<std::size_t>(stack.back())] + p) % factor_order(g, f);
      stack.pop_back();
      if (p == 0) break;
    }
    if (p != 0) stack.push_back(fp_letter(g, f, p));
  }
  return Word(std::move(stack));
}

// Cyclically alternating form: merge matching end syllables until the first
// and last letters lie in different factors (or length <= 1).
Word fp_cyclic_reduce(const GroupModel& g, const Word& w) {
  Word v = fp_geodesic(g, w);
  while (v.length() >= 2) {
    int ff = g.letter_factor[static_cast<std::size_t>(v.letters.front())];
    int lf = g.letter_factor[static_cast<std::size_t>(v.letters.back())];
    if (ff != lf) break;
    int p = (g.letter_power[static_cast<std::size_t>(v.letters.back())] +
             g.letter_power[static_cast<std::size_t>(v.letters.front())]) %
            factor_order(g, ff);
    std::vector<Letter> mid(v.letters.begin() + 1, v.letters.end() - 1);
    if (p != 0) mid.push_back(fp_letter(g, ff, p));
    v = Word(std::move(mid));
  }
  return v;
}

}  // namespace

Word geodesic_form(const GroupModel& g, const Word& w) {
  if (g.is_free()) return free_reduce(g.alphabet, w);
  return fp_geodesic(g, w);
}

int geodesic_length(const GroupModel& g, const Word& w) { return geodesic_form(g, w).length(); }

Word mul(const GroupModel& g, const Word& u, const Word& v) {
  return geodesic_form(g, concat(u, v));
}

Word inv(const GroupModel& g, const Word& w) {
  return geodesic_form(g, inverse_word(g.alphabet, w));
}

bool has_finite_order(const GroupModel& g, const Word& w) {
  if (g.is_free()) return cyclic_reduce(g.alphabet, w).empty();
  return fp_cyclic_reduce(g, w).length() <= 1;
}

bool is_conj_geodesic(const GroupModel& g, const Word& w) {
  if (geodesic_form(g, w) != w) return false;
  if (g.is_free()) return cyclic_reduce(g.alphabet, w).length() == w.length();
  return fp_cyclic_reduce(g, w).length() == w.length();
}

Word conj_key(const GroupModel& g, const Word& w) {
  if (g.is_free()) return cyclic_normal_form(g.alphabet, w);
  Word c = fp_cyclic_reduce(g, w);
  if (c.length() <= 1) return c;
  return lex_min_rotation(c);
}

RootResult primitive_root(const GroupModel& g, const Word& w) {
  if (has_finite_order(g, w)) {
    throw TorsionInput("primitive_root: input has finite order");
  }
  Word key = conj_key(g, w);
  int d = smallest_cyclic_period(key);
  Word root(std::vector<Letter>(key.letters.begin(), key.letters.begin() + d));
  return RootResult{std::move(root), key.length() / d};
}

bool is_primitive(const GroupModel& g, const Word& w) {
  if (has_finite_order(g, w)) return false;
  return primitive_root(g, w).exponent == 1;
}

CommKey comm_key(const GroupModel& g, const Word& w) {
  if (has_finite_order(g, w)) return CommKey{true, Word{}};
  Word root = primitive_root(g, w).root;
  Word k1 = conj_key(g, root);
  Word k2 = conj_key(g, inv(g, root));
  return CommKey{false, std::min(k1, k2)};
}

BigInt sphere_size(const GroupModel& g, int n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  if (g.is_free()) {
    BigInt s = 2 * g.rank;
    for (int i = 1; i < n; ++i) s *= 2 * g.rank - 1;
    return s;
  }
  // Alternating words: track counts by leading factor.
  BigInt start0 = g.m - 1, start1 = g.n - 1;
  for (int i = 1; i < n; ++i) {
    BigInt next0 = BigInt(g.m - 1) * start1;
    BigInt next1 = BigInt(g.n - 1) * start0;
    start0 = next0;
    start1 = next1;
  }
  return start0 + start1;
}

BigInt ball_size(const GroupModel& g, int n) {
  BigInt total = 0;
  for (int i = 0; i <= n; ++i) total += sphere_size(g, i);
  return total;
}

namespace {

void check_budget(const GroupModel& g, int n, std::int64_t budget) {
  if (n < 0) throw RangeError("sphere radius must be >= 0");
  if (sphere_size(g, n) > budget) {
    throw ResourceCap("sphere of radius " + std::to_string(n) + " in " + g.descriptor() +
                      " exceeds the enumeration budget of " + std::to_string(budget) + " elements");
  }
}

}  // namespace

void for_each_sphere_word(const GroupModel& g, int n,
                          const std::function<void(const Word&)>& visit, std::int64_t budget) {
  check_budget(g, n, budget);
  Word buf;
  buf.letters.reserve(static_cast<std::size_t>(n));
  const int nletters = g.alphabet.size();
  // DFS in letter order yields lex order of geodesic normal forms.
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      visit(buf);
      return;
    }
    for (Letter x = 0; x < nletters; ++x) {
      if (!buf.letters.empty()) {
        Letter prev = buf.letters.back();
        if (g.is_free()) {
          if (x == g.alphabet.inv(prev)) continue;
        } else {
          if (g.letter_factor[static_cast<std::size_t>(x)] ==
              g.letter_factor[static_cast<std::size_t>(prev)])
            continue;
        }
      }
      buf.letters.push_back(x);
      self(self, depth + 1);
      buf.letters.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<Word> enumerate_sphere(const GroupModel& g, int n, std::int64_t budget) {
  std::vector<Word> out;
  for_each_sphere_word(g, n, [&out](const Word& w) { out.push_back(w); }, budget);
  return out;
}

std::vector<Word> enumerate_ball(const GroupModel& g, int n, std::int64_t budget) {
  std::vector<Word> out;
  for (int i = 0; i <= n; ++i) {
    for_each_sphere_word(g, i, [&out](const Word& w) { out.push_back(w); }, budget);
  }
  return out;
}

}  // namespace cglab
