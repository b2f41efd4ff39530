#pragma once

#include <optional>
#include <vector>

#include "cglab/dfa.hpp"
#include "cglab/group_model.hpp"

namespace cglab {

// Padded letters are base letters plus a trailing padding symbol "$" which
// sorts greater than every base letter and represents the identity.
struct PaddedAlphabet {
  SymbolTable base;    // Y
  SymbolTable padded;  // Y^$
  SymbolTable pair;    // B = X^$ x Y^$  (X = Y here)
  SymbolTable triple;  // C = X^$ x Y^$ x Y^$
  int pad = 0;         // index of $ in `padded`

  static PaddedAlphabet make(const Alphabet& a);
};

// A word over Y^$ as padded letter indices.
using PaddedWord = std::vector<int>;

PaddedWord pad_free(const Word& w);                     // no padding symbols
Word unpad(const PaddedAlphabet& pa, const PaddedWord& v);
// Equal-length padded words zipped into a word over the pair alphabet.
std::vector<int> pair_word(const PaddedAlphabet& pa, const PaddedWord& u, const PaddedWord& v);

struct BcdConfig {
  GroupModel model;
  int K = 0;
  PaddedAlphabet pa;
  std::vector<Word> conjugator_ball;  // all |g| <= K in (length, lex) order

  static BcdConfig make(const GroupModel& model, int K);
};

inline constexpr int kDefaultBcdMaxK = 4;

// Direct-definition check: some g in the conjugator ball satisfies gU = Vg
// with every prefix offset V_j^-1 g U_j of length <= K. No automata involved.
bool bcd_pair_check(const BcdConfig& cfg, const PaddedWord& u, const PaddedWord& v);
// Same check, returning the first witnessing conjugator in ball order.
std::optional<Word> bcd_witness(const BcdConfig& cfg, const PaddedWord& u, const PaddedWord& v);

// The K-synchronous BCD pair language M over B: one copy of the conjugator
// ball per start element g with transitions h -> x^-1 h y, union over g,
// determinized and minimized.
Dfa build_bcd_automaton(const BcdConfig& cfg, int state_cap = kDefaultStateCap);

// Three live states (undecided / first-smaller / first-greater) plus the
// untouched fail state; accepts pairs whose first coordinate is strictly
// lexicographically smaller.
Dfa build_lex_automaton(const PaddedAlphabet& pa);

// S = unpad^-1(geo_conj - exclusions) over Y^$.
Dfa build_S(const BcdConfig& cfg, const std::vector<Word>& exclusions = {});

struct DeltaMachine {
  BcdConfig cfg;
  Dfa bcd;                      // M over B
  Dfa s;                        // S over Y^$
  Dfa t1;                       // triple language T1 over C
  Dfa t2;                       // T1 restricted to V1 <lex V2
  Dfa m2;                       // corrected minimal-partner language over B
  std::optional<Dfa> m2_paper;  // literal pi12(T2) - pi13(T2), on request
};

DeltaMachine build_delta(const BcdConfig& cfg, bool with_paper_variant = false,
                         int state_cap = kDefaultStateCap);

// All padded partners V with (U, V) accepted by m2, in lex order (at most
// `limit` collected). U is given over the base alphabet.
std::vector<PaddedWord> delta_partners(const DeltaMachine& dm, const Word& u, int limit = 8);

struct DeltaResult {
  Word output;
  Word conjugator;
};
// Applies the Delta map: requires U in geo_conj (NotConjGeodesic otherwise);
// returns unpad(V) for the unique accepted partner plus a witnessing
// conjugator.
DeltaResult delta_apply(const DeltaMachine& dm, const Word& u);

}  // namespace cglab
