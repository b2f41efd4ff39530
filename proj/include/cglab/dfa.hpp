#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cglab/bigint.hpp"

namespace cglab {

// Symbol alphabet of an automaton. Symbols are indices 0..num_symbols()-1.
// A table is either plain (one component) or a product of component alphabets;
// product symbols are tuples encoded in row-major mixed radix, so index order
// is lexicographic on tuples.
struct SymbolTable {
  std::vector<std::vector<std::string>> components;

  static SymbolTable plain(std::vector<std::string> names);
  static SymbolTable product(std::vector<const SymbolTable*> parts);  // parts must be plain

  int arity() const { return static_cast<int>(components.size()); }
  int num_symbols() const;
  int component_size(int i) const { return static_cast<int>(components[static_cast<std::size_t>(i)].size()); }
  void decode(int sym, std::span<int> out) const;
  int encode(std::span<const int> tuple) const;
  std::string name(int sym) const;  // "a" or "(a,$)"
  SymbolTable select(std::span<const int> coords) const;

  bool operator==(const SymbolTable&) const = default;
};

// Deterministic automaton with a total transition table. State 0 is always the
// absorbing fail state; it is never accepting.
struct Dfa {
  SymbolTable symbols;
  int num_states = 1;
  int start = 0;
  std::vector<std::uint8_t> accepting;   // size num_states
  std::vector<std::int32_t> transition;  // num_states * num_symbols, row-major

  int tr(int state, int sym) const {
    return transition[static_cast<std::size_t>(state) * static_cast<std::size_t>(symbols.num_symbols()) +
                      static_cast<std::size_t>(sym)];
  }
  void set_tr(int state, int sym, int target) {
    transition[static_cast<std::size_t>(state) * static_cast<std::size_t>(symbols.num_symbols()) +
               static_cast<std::size_t>(sym)] = target;
  }
  bool accepts(std::span<const int> word) const;

  static Dfa empty_language(SymbolTable symbols);
  static Dfa all_words(SymbolTable symbols);
  static Dfa finite_language(SymbolTable symbols, const std::vector<std::vector<int>>& words);
};

// Epsilon-free nondeterministic automaton (possibly several start states).
struct Nfa {
  SymbolTable symbols;
  int num_states = 0;
  std::vector<std::int32_t> starts;
  std::vector<std::uint8_t> accepting;
  std::vector<std::vector<std::int32_t>> transition;  // [state * num_symbols + sym]

  const std::vector<std::int32_t>& tr(int state, int sym) const {
    return transition[static_cast<std::size_t>(state) * static_cast<std::size_t>(symbols.num_symbols()) +
                      static_cast<std::size_t>(sym)];
  }
  bool accepts(std::span<const int> word) const;  // subset simulation
};

// Monoid morphism between symbol alphabets: each source symbol maps to a word
// (possibly empty) over the target alphabet.
struct Morphism {
  SymbolTable source;
  SymbolTable target;
  std::vector<std::vector<int>> image;  // size = source.num_symbols()

  static Morphism identity(const SymbolTable& s);
  static Morphism projection(const SymbolTable& product_table, std::span<const int> coords);
  static Morphism erase_component(const SymbolTable& plain_table, int erased_symbol);  // symbol -> epsilon
};

enum class BoolOp { Union, Intersection, Difference };

inline constexpr int kDefaultStateCap = 2'000'000;

// Product construction over a shared alphabet; throws AlphabetMismatch.
Dfa boolean_combine(const Dfa& a, const Dfa& b, BoolOp op, int state_cap = kDefaultStateCap);
// Reachable intersection of several automata read through per-component symbol
// remaps: component i consumes remap[i][sym] for each input symbol.
Dfa product_intersection(std::span<const Dfa* const> parts,
                         const std::vector<std::vector<int>>& remap, SymbolTable symbols,
                         int state_cap = kDefaultStateCap);

// Subset construction; throws ResourceCap beyond state_cap states.
Dfa determinize(const Nfa& n, int state_cap = kDefaultStateCap);
// Partition refinement + canonical BFS numbering (fail fixed at index 0).
Dfa minimize(const Dfa& d);

// Image {phi(w) : w in L(a)}; epsilon images are eliminated on the fly.
Nfa morphism_image(const Dfa& a, const Morphism& phi);
// Preimage {w : phi(w) in L(a)}; stays deterministic.
Dfa morphism_preimage(const Dfa& a, const Morphism& phi);
// Coordinate projection of a product-alphabet automaton: image, determinized,
// minimized.
Dfa project(const Dfa& a, std::span<const int> coords, int state_cap = kDefaultStateCap);

// Exact number of accepted words of each length 0..n_max.
std::vector<BigInt> count_per_length(const Dfa& a, int n_max);

}  // namespace cglab
