#include "cglab/bcd.hpp"

#include <algorithm>
#include <unordered_map>

#include "cglab/errors.hpp"
#include "cglab/model_automata.hpp"

namespace cglab {

PaddedAlphabet PaddedAlphabet::make(const Alphabet& a) {
  PaddedAlphabet pa;
  pa.base = SymbolTable::plain(a.tokens);
  std::vector<std::string> padded_names = a.tokens;
  padded_names.push_back("$");
  pa.padded = SymbolTable::plain(std::move(padded_names));
  pa.pair = SymbolTable::product({&pa.padded, &pa.padded});
  pa.triple = SymbolTable::product({&pa.padded, &pa.padded, &pa.padded});
  pa.pad = static_cast<int>(a.tokens.size());
  return pa;
}

PaddedWord pad_free(const Word& w) {
  PaddedWord out;
  out.reserve(w.letters.size());
  for (Letter x : w.letters) out.push_back(x);
  return out;
}

Word unpad(const PaddedAlphabet& pa, const PaddedWord& v) {
  Word out;
  for (int x : v) {
    if (x != pa.pad) out.letters.push_back(static_cast<Letter>(x));
  }
  return out;
}

std::vector<int> pair_word(const PaddedAlphabet& pa, const PaddedWord& u, const PaddedWord& v) {
  if (u.size() != v.size()) throw LengthMismatch("pair_word requires equal-length padded words");
  std::vector<int> out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    int tuple[2] = {u[i], v[i]};
    out.push_back(pa.pair.encode(tuple));
  }
  return out;
}

BcdConfig BcdConfig::make(const GroupModel& model, int K) {
  if (K < 0) throw RangeError("BCD constant K must be >= 0");
  BcdConfig cfg;
  cfg.model = model;
  cfg.K = K;
  cfg.pa = PaddedAlphabet::make(model.alphabet);
  cfg.conjugator_ball = enumerate_ball(model, K);
  return cfg;
}

namespace {

// Group element of a padded letter: identity for $, the letter otherwise.
Word padded_letter_word(const BcdConfig& cfg, int x) {
  if (x == cfg.pa.pad) return Word{};
  return Word{{static_cast<Letter>(x)}};
}

}  // namespace

std::optional<Word> bcd_witness(const BcdConfig& cfg, const PaddedWord& u, const PaddedWord& v) {
  if (u.size() != v.size()) {
    throw LengthMismatch("bcd_pair_check requires equal-length padded words");
  }
  const GroupModel& g = cfg.model;
  // Prefix group elements U_j, V_j.
  std::vector<Word> up(u.size() + 1), vp(v.size() + 1);
  up[0] = Word{};
  vp[0] = Word{};
  for (std::size_t j = 0; j < u.size(); ++j) {
    up[j + 1] = mul(g, up[j], padded_letter_word(cfg, u[j]));
    vp[j + 1] = mul(g, vp[j], padded_letter_word(cfg, v[j]));
  }
  for (const Word& cj : cfg.conjugator_ball) {
    bool ok = true;
    for (std::size_t j = 0; j <= u.size() && ok; ++j) {
      Word offset = mul(g, inv(g, vp[j]), mul(g, cj, up[j]));
      ok = offset.length() <= cfg.K;
    }
    if (!ok) continue;
    // gU = Vg as group elements.
    if (mul(g, cj, up.back()) == mul(g, vp.back(), cj)) return cj;
  }
  return std::nullopt;
}

bool bcd_pair_check(const BcdConfig& cfg, const PaddedWord& u, const PaddedWord& v) {
  return bcd_witness(cfg, u, v).has_value();
}

Dfa build_bcd_automaton(const BcdConfig& cfg, int state_cap) {
  if (cfg.K > kDefaultBcdMaxK) {
    throw ResourceCap("BCD automaton: K exceeds the configured bound");
  }
  const GroupModel& g = cfg.model;
  const int ball_size = static_cast<int>(cfg.conjugator_ball.size());
  if (ball_size > 4096) throw ResourceCap("BCD automaton: conjugator ball too large");
  std::unordered_map<Word, int, WordHash> ball_index;
  for (int i = 0; i < ball_size; ++i) ball_index[cfg.conjugator_ball[static_cast<std::size_t>(i)]] = i;

  const int nsym = cfg.pa.pair.num_symbols();
  // h -> x^-1 h y per pair symbol; -1 when the result leaves the ball.
  std::vector<std::int32_t> step(static_cast<std::size_t>(ball_size) * static_cast<std::size_t>(nsym), -1);
  for (int h = 0; h < ball_size; ++h) {
    for (int sym = 0; sym < nsym; ++sym) {
      int tuple[2];
      cfg.pa.pair.decode(sym, tuple);
      Word x = padded_letter_word(cfg, tuple[0]);
      Word y = padded_letter_word(cfg, tuple[1]);
      Word hh = mul(g, inv(g, x), mul(g, cfg.conjugator_ball[static_cast<std::size_t>(h)], y));
      auto it = ball_index.find(hh);
      if (it != ball_index.end()) {
        step[static_cast<std::size_t>(h) * static_cast<std::size_t>(nsym) +
             static_cast<std::size_t>(sym)] = it->second;
      }
    }
  }

  // Union over start elements g: NFA states (g, h) = g*ball_size + h.
  Nfa nfa;
  nfa.symbols = cfg.pa.pair;
  nfa.num_states = ball_size * ball_size;
  nfa.accepting.assign(static_cast<std::size_t>(nfa.num_states), 0);
  nfa.transition.assign(static_cast<std::size_t>(nfa.num_states) * static_cast<std::size_t>(nsym),
                        {});
  for (int gi = 0; gi < ball_size; ++gi) {
    nfa.starts.push_back(gi * ball_size + gi);
    nfa.accepting[static_cast<std::size_t>(gi * ball_size + gi)] = 1;
    for (int h = 0; h < ball_size; ++h) {
      for (int sym = 0; sym < nsym; ++sym) {
        std::int32_t hh = step[static_cast<std::size_t>(h) * static_cast<std::size_t>(nsym) +
                               static_cast<std::size_t>(sym)];
        if (hh >= 0) {
          nfa.transition[static_cast<std::size_t>(gi * ball_size + h) * static_cast<std::size_t>(nsym) +
                         static_cast<std::size_t>(sym)]
              .push_back(gi * ball_size + hh);
        }
      }
    }
  }
  return minimize(determinize(nfa, state_cap));
}

Dfa build_lex_automaton(const PaddedAlphabet& pa) {
  Dfa d;
  d.symbols = SymbolTable::product({&pa.padded, &pa.padded});
  d.num_states = 4;  // 0 fail (unreachable), 1 undecided, 2 less, 3 greater
  d.start = 1;
  d.accepting = {0, 0, 1, 0};
  const int nsym = d.symbols.num_symbols();
  d.transition.assign(static_cast<std::size_t>(d.num_states) * static_cast<std::size_t>(nsym), 0);
  for (int sym = 0; sym < nsym; ++sym) {
    int tuple[2];
    d.symbols.decode(sym, tuple);
    int from_undecided = tuple[0] == tuple[1] ? 1 : (tuple[0] < tuple[1] ? 2 : 3);
    d.set_tr(1, sym, from_undecided);
    d.set_tr(2, sym, 2);
    d.set_tr(3, sym, 3);
  }
  return d;
}

Dfa build_S(const BcdConfig& cfg, const std::vector<Word>& exclusions) {
  Dfa geo = geo_conj_dfa(cfg.model);
  if (!exclusions.empty()) {
    std::vector<std::vector<int>> words;
    for (const Word& w : exclusions) {
      std::vector<int> v;
      for (Letter x : w.letters) v.push_back(x);
      words.push_back(std::move(v));
    }
    Dfa excl = Dfa::finite_language(geo.symbols, words);
    geo = minimize(boolean_combine(geo, excl, BoolOp::Difference));
  }
  // unpad^-1: base letters map to themselves, $ maps to the empty word.
  Morphism unpad_phi;
  unpad_phi.source = cfg.pa.padded;
  unpad_phi.target = cfg.pa.base;
  unpad_phi.image.resize(static_cast<std::size_t>(cfg.pa.padded.num_symbols()));
  for (int y = 0; y < cfg.pa.padded.num_symbols(); ++y) {
    if (y == cfg.pa.pad) {
      unpad_phi.image[static_cast<std::size_t>(y)] = {};
    } else {
      unpad_phi.image[static_cast<std::size_t>(y)] = {y};
    }
  }
  return minimize(morphism_preimage(geo, unpad_phi));
}

DeltaMachine build_delta(const BcdConfig& cfg, bool with_paper_variant, int state_cap) {
  DeltaMachine dm;
  dm.cfg = cfg;
  dm.bcd = build_bcd_automaton(cfg, state_cap);
  dm.s = build_S(cfg);
  Dfa lex = build_lex_automaton(cfg.pa);

  const SymbolTable& C = cfg.pa.triple;
  const int ntriple = C.num_symbols();
  // Symbol remaps of the triple alphabet onto each component's alphabet.
  std::vector<int> to12(static_cast<std::size_t>(ntriple));
  std::vector<int> to13(static_cast<std::size_t>(ntriple));
  std::vector<int> to2(static_cast<std::size_t>(ntriple));
  std::vector<int> to3(static_cast<std::size_t>(ntriple));
  std::vector<int> to23(static_cast<std::size_t>(ntriple));
  for (int sym = 0; sym < ntriple; ++sym) {
    int t[3];
    C.decode(sym, t);
    int p12[2] = {t[0], t[1]};
    int p13[2] = {t[0], t[2]};
    int p23[2] = {t[1], t[2]};
    to12[static_cast<std::size_t>(sym)] = cfg.pa.pair.encode(p12);
    to13[static_cast<std::size_t>(sym)] = cfg.pa.pair.encode(p13);
    to2[static_cast<std::size_t>(sym)] = t[1];
    to3[static_cast<std::size_t>(sym)] = t[2];
    to23[static_cast<std::size_t>(sym)] = lex.symbols.encode(p23);
  }

  // T1 = pi12^-1(M) ∩ pi13^-1(M) ∩ pi2^-1(S) ∩ pi3^-1(S).
  {
    const Dfa* parts[] = {&dm.bcd, &dm.bcd, &dm.s, &dm.s};
    dm.t1 = minimize(product_intersection(parts, {to12, to13, to2, to3}, C, state_cap));
  }
  // T2 = T1 ∩ pi23^-1(V1 <lex V2).
  {
    std::vector<int> ident(static_cast<std::size_t>(ntriple));
    for (int sym = 0; sym < ntriple; ++sym) ident[static_cast<std::size_t>(sym)] = sym;
    const Dfa* parts[] = {&dm.t1, &lex};
    dm.t2 = minimize(product_intersection(parts, {ident, to23}, C, state_cap));
  }

  int coords13[] = {0, 2};
  Dfa p13 = project(dm.t2, coords13, state_cap);

  // pi2^-1(S) over the pair alphabet.
  Morphism pair_to_padded;
  pair_to_padded.source = cfg.pa.pair;
  pair_to_padded.target = cfg.pa.padded;
  pair_to_padded.image.resize(static_cast<std::size_t>(cfg.pa.pair.num_symbols()));
  for (int sym = 0; sym < cfg.pa.pair.num_symbols(); ++sym) {
    int t[2];
    cfg.pa.pair.decode(sym, t);
    pair_to_padded.image[static_cast<std::size_t>(sym)] = {t[1]};
  }
  Dfa s_pre2 = morphism_preimage(dm.s, pair_to_padded);

  Dfa core = boolean_combine(dm.bcd, s_pre2, BoolOp::Intersection, state_cap);
  dm.m2 = minimize(boolean_combine(core, p13, BoolOp::Difference, state_cap));

  if (with_paper_variant) {
    int coords12[] = {0, 1};
    Dfa p12 = project(dm.t2, coords12, state_cap);
    dm.m2_paper = minimize(boolean_combine(p12, p13, BoolOp::Difference, state_cap));
  }
  return dm;
}

std::vector<PaddedWord> delta_partners(const DeltaMachine& dm, const Word& u, int limit) {
  const Dfa& m2 = dm.m2;
  const PaddedAlphabet& pa = dm.cfg.pa;
  const int n = u.length();
  const int npadded = pa.padded.num_symbols();
  // Backward live sets: states from which the remaining fixed first coordinate
  // can still reach acceptance.
  std::vector<std::vector<std::uint8_t>> live(static_cast<std::size_t>(n) + 1);
  live[static_cast<std::size_t>(n)] = m2.accepting;
  for (int j = n - 1; j >= 0; --j) {
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(m2.num_states), 0);
    for (int q = 0; q < m2.num_states; ++q) {
      for (int y = 0; y < npadded; ++y) {
        int tuple[2] = {u.letters[static_cast<std::size_t>(j)], y};
        int t = m2.tr(q, pa.pair.encode(tuple));
        if (live[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(t)]) {
          cur[static_cast<std::size_t>(q)] = 1;
          break;
        }
      }
    }
    live[static_cast<std::size_t>(j)] = std::move(cur);
  }
  std::vector<PaddedWord> found;
  PaddedWord partial;
  auto rec = [&](auto&& self, int j, int q) -> void {
    if (static_cast<int>(found.size()) >= limit) return;
    if (j == n) {
      if (m2.accepting[static_cast<std::size_t>(q)]) found.push_back(partial);
      return;
    }
    for (int y = 0; y < npadded; ++y) {
      int tuple[2] = {u.letters[static_cast<std::size_t>(j)], y};
      int t = m2.tr(q, pa.pair.encode(tuple));
      if (!live[static_cast<std::size_t>(j) + 1][static_cast<std::size_t>(t)]) continue;
      partial.push_back(y);
      self(self, j + 1, t);
      partial.pop_back();
    }
  };
  if (live[0][static_cast<std::size_t>(m2.start)]) rec(rec, 0, m2.start);
  return found;
}

DeltaResult delta_apply(const DeltaMachine& dm, const Word& u) {
  if (!is_conj_geodesic(dm.cfg.model, u)) {
    throw NotConjGeodesic("delta_apply: input is not minimal in its conjugacy class");
  }
  std::vector<PaddedWord> partners = delta_partners(dm, u, 2);
  if (partners.size() != 1) {
    throw InvariantViolation("delta_apply: expected exactly one accepted partner, found " +
                             std::to_string(partners.size()));
  }
  Word out = unpad(dm.cfg.pa, partners[0]);
  auto witness = bcd_witness(dm.cfg, pad_free(u), partners[0]);
  if (!witness) {
    throw InvariantViolation("delta_apply: accepted partner fails the direct BCD check");
  }
  return DeltaResult{std::move(out), std::move(*witness)};
}

}  // namespace cglab
