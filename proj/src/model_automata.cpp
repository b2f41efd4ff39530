#include "cglab/model_automata.hpp"

namespace cglab {

SymbolTable model_symbols(const GroupModel& g) { return SymbolTable::plain(g.alphabet.tokens); }

namespace {

Dfa blank(SymbolTable symbols, int num_states, int start) {
  Dfa d;
  d.symbols = std::move(symbols);
  d.num_states = num_states;
  d.start = start;
  d.accepting.assign(static_cast<std::size_t>(num_states), 0);
  d.transition.assign(static_cast<std::size_t>(num_states) *
                          static_cast<std::size_t>(d.symbols.num_symbols()),
                      0);
  return d;
}

}  // namespace

Dfa geodesic_dfa(const GroupModel& g) {
  const int L = g.alphabet.size();
  // States: 0 fail, 1 start, 2+x "last letter was x".
  Dfa d = blank(model_symbols(g), 2 + L, 1);
  d.accepting.assign(static_cast<std::size_t>(d.num_states), 1);
  d.accepting[0] = 0;
  for (int x = 0; x < L; ++x) d.set_tr(1, x, 2 + x);
  for (int prev = 0; prev < L; ++prev) {
    for (int x = 0; x < L; ++x) {
      bool ok;
      if (g.is_free()) {
        ok = x != g.alphabet.inv(static_cast<Letter>(prev));
      } else {
        ok = g.letter_factor[static_cast<std::size_t>(x)] !=
             g.letter_factor[static_cast<std::size_t>(prev)];
      }
      d.set_tr(2 + prev, x, ok ? 2 + x : 0);
    }
  }
  return minimize(d);
}

Dfa geo_conj_dfa(const GroupModel& g) {
  const int L = g.alphabet.size();
  if (g.is_free()) {
    // States: 0 fail, 1 start (empty word), 2 + f*L + l for first letter f and
    // last letter l. Accept unless l is the inverse of f.
    Dfa d = blank(model_symbols(g), 2 + L * L, 1);
    d.accepting[1] = 1;
    for (int f = 0; f < L; ++f) {
      for (int l = 0; l < L; ++l) {
        d.accepting[static_cast<std::size_t>(2 + f * L + l)] =
            (l != g.alphabet.inv(static_cast<Letter>(f))) ? 1 : 0;
      }
    }
    for (int x = 0; x < L; ++x) d.set_tr(1, x, 2 + x * L + x);
    for (int f = 0; f < L; ++f) {
      for (int l = 0; l < L; ++l) {
        for (int x = 0; x < L; ++x) {
          bool ok = x != g.alphabet.inv(static_cast<Letter>(l));
          d.set_tr(2 + f * L + l, x, ok ? 2 + f * L + x : 0);
        }
      }
    }
    return minimize(d);
  }
  // Free product: alternating words whose first and last letters lie in
  // different factors, plus all words of length <= 1.
  // States: 0 fail, 1 start, then (first factor, last factor, len==1?) cases:
  // 2+f: single letter of factor f; 4 + f*2 + l: longer word, first factor f,
  // last factor l.
  Dfa d = blank(model_symbols(g), 8, 1);
  d.accepting[1] = 1;
  d.accepting[2] = d.accepting[3] = 1;
  for (int f = 0; f < 2; ++f) {
    for (int l = 0; l < 2; ++l) {
      d.accepting[static_cast<std::size_t>(4 + f * 2 + l)] = (f != l) ? 1 : 0;
    }
  }
  auto factor_of = [&g](int x) { return g.letter_factor[static_cast<std::size_t>(x)]; };
  for (int x = 0; x < L; ++x) d.set_tr(1, x, 2 + factor_of(x));
  for (int f = 0; f < 2; ++f) {
    for (int x = 0; x < L; ++x) {
      int xf = factor_of(x);
      d.set_tr(2 + f, x, xf != f ? 4 + f * 2 + xf : 0);
    }
    for (int l = 0; l < 2; ++l) {
      for (int x = 0; x < L; ++x) {
        int xf = factor_of(x);
        d.set_tr(4 + f * 2 + l, x, xf != l ? 4 + f * 2 + xf : 0);
      }
    }
  }
  return minimize(d);
}

}  // namespace cglab
