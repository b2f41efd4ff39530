#include "cglab/dfa.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

#include "cglab/errors.hpp"

namespace cglab {

SymbolTable SymbolTable::plain(std::vector<std::string> names) {
  SymbolTable t;
  t.components.push_back(std::move(names));
  return t;
}

SymbolTable SymbolTable::product(std::vector<const SymbolTable*> parts) {
  SymbolTable t;
  for (const SymbolTable* p : parts) {
    if (p->arity() != 1) throw InvariantViolation("SymbolTable::product expects plain components");
    t.components.push_back(p->components[0]);
  }
  return t;
}

int SymbolTable::num_symbols() const {
  int n = 1;
  for (const auto& c : components) n *= static_cast<int>(c.size());
  return n;
}

void SymbolTable::decode(int sym, std::span<int> out) const {
  for (int i = arity() - 1; i >= 0; --i) {
    int sz = component_size(i);
    out[static_cast<std::size_t>(i)] = sym % sz;
    sym /= sz;
  }
}

int SymbolTable::encode(std::span<const int> tuple) const {
  int sym = 0;
  for (int i = 0; i < arity(); ++i) {
    sym = sym * component_size(i) + tuple[static_cast<std::size_t>(i)];
  }
  return sym;
}

std::string SymbolTable::name(int sym) const {
  std::vector<int> tuple(static_cast<std::size_t>(arity()));
  decode(sym, tuple);
  if (arity() == 1) return components[0][static_cast<std::size_t>(tuple[0])];
  std::string out = "(";
  for (int i = 0; i < arity(); ++i) {
    if (i) out += ",";
    out += components[static_cast<std::size_t>(i)][static_cast<std::size_t>(tuple[static_cast<std::size_t>(i)])];
  }
  out += ")";
  return out;
}

SymbolTable SymbolTable::select(std::span<const int> coords) const {
  SymbolTable t;
  for (int c : coords) t.components.push_back(components[static_cast<std::size_t>(c)]);
  return t;
}

bool Dfa::accepts(std::span<const int> word) const {
  int s = start;
  for (int sym : word) s = tr(s, sym);
  return accepting[static_cast<std::size_t>(s)] != 0;
}

namespace {

Dfa blank_dfa(SymbolTable symbols, int num_states) {
  Dfa d;
  d.symbols = std::move(symbols);
  d.num_states = num_states;
  d.accepting.assign(static_cast<std::size_t>(num_states), 0);
  d.transition.assign(static_cast<std::size_t>(num_states) *
                          static_cast<std::size_t>(d.symbols.num_symbols()),
                      0);
  return d;
}

}  // namespace

Dfa Dfa::empty_language(SymbolTable symbols) {
  Dfa d = blank_dfa(std::move(symbols), 1);
  d.start = 0;
  return d;
}

Dfa Dfa::all_words(SymbolTable symbols) {
  Dfa d = blank_dfa(std::move(symbols), 2);
  d.start = 1;
  d.accepting[1] = 1;
  for (int s = 0; s < d.symbols.num_symbols(); ++s) d.set_tr(1, s, 1);
  return d;
}

Dfa Dfa::finite_language(SymbolTable symbols, const std::vector<std::vector<int>>& words) {
  // Trie with fail state 0.
  std::vector<std::map<int, int>> children(2);
  std::vector<std::uint8_t> acc(2, 0);
  for (const auto& w : words) {
    int cur = 1;
    for (int sym : w) {
      auto it = children[static_cast<std::size_t>(cur)].find(sym);
      if (it == children[static_cast<std::size_t>(cur)].end()) {
        int fresh = static_cast<int>(children.size());
        children[static_cast<std::size_t>(cur)][sym] = fresh;
        children.emplace_back();
        acc.push_back(0);
        cur = fresh;
      } else {
        cur = it->second;
      }
    }
    acc[static_cast<std::size_t>(cur)] = 1;
  }
  Dfa d = blank_dfa(std::move(symbols), static_cast<int>(children.size()));
  d.start = 1;
  for (std::size_t s = 0; s < children.size(); ++s) {
    d.accepting[s] = acc[s];
    for (auto [sym, t] : children[s]) d.set_tr(static_cast<int>(s), sym, t);
  }
  return d;
}

bool Nfa::accepts(std::span<const int> word) const {
  std::vector<std::uint8_t> cur(static_cast<std::size_t>(num_states), 0);
  for (int s : starts) cur[static_cast<std::size_t>(s)] = 1;
  for (int sym : word) {
    std::vector<std::uint8_t> next(static_cast<std::size_t>(num_states), 0);
    for (int s = 0; s < num_states; ++s) {
      if (!cur[static_cast<std::size_t>(s)]) continue;
      for (int t : tr(s, sym)) next[static_cast<std::size_t>(t)] = 1;
    }
    cur.swap(next);
  }
  for (int s = 0; s < num_states; ++s) {
    if (cur[static_cast<std::size_t>(s)] && accepting[static_cast<std::size_t>(s)]) return true;
  }
  return false;
}

Morphism Morphism::identity(const SymbolTable& s) {
  Morphism m;
  m.source = s;
  m.target = s;
  m.image.resize(static_cast<std::size_t>(s.num_symbols()));
  for (int i = 0; i < s.num_symbols(); ++i) m.image[static_cast<std::size_t>(i)] = {i};
  return m;
}

Morphism Morphism::projection(const SymbolTable& product_table, std::span<const int> coords) {
  Morphism m;
  m.source = product_table;
  m.target = product_table.select(coords);
  m.image.resize(static_cast<std::size_t>(product_table.num_symbols()));
  std::vector<int> tuple(static_cast<std::size_t>(product_table.arity()));
  std::vector<int> sub(coords.size());
  for (int sym = 0; sym < product_table.num_symbols(); ++sym) {
    product_table.decode(sym, tuple);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      sub[i] = tuple[static_cast<std::size_t>(coords[i])];
    }
    m.image[static_cast<std::size_t>(sym)] = {m.target.encode(sub)};
  }
  return m;
}

Morphism Morphism::erase_component(const SymbolTable& plain_table, int erased_symbol) {
  Morphism m;
  m.source = plain_table;
  std::vector<std::string> names;
  std::vector<int> remap(static_cast<std::size_t>(plain_table.num_symbols()), -1);
  for (int i = 0; i < plain_table.num_symbols(); ++i) {
    if (i == erased_symbol) continue;
    remap[static_cast<std::size_t>(i)] = static_cast<int>(names.size());
    names.push_back(plain_table.components[0][static_cast<std::size_t>(i)]);
  }
  m.target = SymbolTable::plain(std::move(names));
  m.image.resize(static_cast<std::size_t>(plain_table.num_symbols()));
  for (int i = 0; i < plain_table.num_symbols(); ++i) {
    if (i == erased_symbol) {
      m.image[static_cast<std::size_t>(i)] = {};
    } else {
      m.image[static_cast<std::size_t>(i)] = {remap[static_cast<std::size_t>(i)]};
    }
  }
  return m;
}

Dfa boolean_combine(const Dfa& a, const Dfa& b, BoolOp op, int state_cap) {
  if (!(a.symbols == b.symbols)) {
    throw AlphabetMismatch("boolean_combine requires identical symbol alphabets");
  }
  const int nsym = a.symbols.num_symbols();
  auto accept = [op](bool x, bool y) {
    switch (op) {
      case BoolOp::Union: return x || y;
      case BoolOp::Intersection: return x && y;
      case BoolOp::Difference: return x && !y;
    }
    return false;
  };
  // Reachable product; pair (0,0) is the combined fail state.
  std::unordered_map<std::uint64_t, int> ids;
  std::vector<std::pair<int, int>> states;
  auto key = [&b](int x, int y) {
    return static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(b.num_states) +
           static_cast<std::uint64_t>(y);
  };
  auto intern = [&](int x, int y) {
    auto [it, fresh] = ids.try_emplace(key(x, y), static_cast<int>(states.size()));
    if (fresh) states.emplace_back(x, y);
    return it->second;
  };
  intern(0, 0);
  int start = intern(a.start, b.start);
  std::vector<std::int32_t> trans;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (static_cast<int>(states.size()) > state_cap) {
      throw ResourceCap("boolean_combine exceeded the state cap");
    }
    auto [x, y] = states[i];
    for (int s = 0; s < nsym; ++s) trans.push_back(intern(a.tr(x, s), b.tr(y, s)));
  }
  Dfa d;
  d.symbols = a.symbols;
  d.num_states = static_cast<int>(states.size());
  d.start = start;
  d.transition = std::move(trans);
  d.accepting.resize(static_cast<std::size_t>(d.num_states));
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [x, y] = states[i];
    d.accepting[i] = accept(a.accepting[static_cast<std::size_t>(x)] != 0,
                            b.accepting[static_cast<std::size_t>(y)] != 0)
                         ? 1
                         : 0;
  }
  // The (0,0) product state must stay non-accepting for the fail invariant;
  // that holds for all three ops since neither component accepts at 0.
  return d;
}

Dfa product_intersection(std::span<const Dfa* const> parts, const std::vector<std::vector<int>>& remap,
                         SymbolTable symbols, int state_cap) {
  const int nsym = symbols.num_symbols();
  const int k = static_cast<int>(parts.size());
  std::unordered_map<std::string, int> ids;
  std::vector<std::vector<int>> states;
  auto intern = [&](const std::vector<int>& tuple) {
    std::string key(reinterpret_cast<const char*>(tuple.data()), tuple.size() * sizeof(int));
    auto [it, fresh] = ids.try_emplace(std::move(key), static_cast<int>(states.size()));
    if (fresh) states.push_back(tuple);
    return it->second;
  };
  std::vector<int> fail(static_cast<std::size_t>(k), 0);
  std::vector<int> init(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) init[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)]->start;
  intern(fail);
  int start = intern(init);
  std::vector<std::int32_t> trans;
  std::vector<int> next(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (static_cast<int>(states.size()) > state_cap) {
      throw ResourceCap("product_intersection exceeded the state cap");
    }
    std::vector<int> cur = states[i];
    for (int s = 0; s < nsym; ++s) {
      bool dead = false;
      for (int j = 0; j < k; ++j) {
        next[static_cast<std::size_t>(j)] = parts[static_cast<std::size_t>(j)]->tr(
            cur[static_cast<std::size_t>(j)], remap[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)]);
      }
      // Normalize: if any component failed, the whole tuple is dead.
      for (int j = 0; j < k; ++j) dead = dead || next[static_cast<std::size_t>(j)] == 0;
      trans.push_back(dead ? 0 : intern(next));
    }
  }
  Dfa d;
  d.symbols = std::move(symbols);
  d.num_states = static_cast<int>(states.size());
  d.start = start;
  d.transition = std::move(trans);
  d.accepting.assign(static_cast<std::size_t>(d.num_states), 0);
  for (std::size_t i = 1; i < states.size(); ++i) {
    bool acc = true;
    for (int j = 0; j < k; ++j) {
      acc = acc && parts[static_cast<std::size_t>(j)]
                           ->accepting[static_cast<std::size_t>(states[i][static_cast<std::size_t>(j)])] != 0;
    }
    d.accepting[i] = acc ? 1 : 0;
  }
  return d;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int32_t x : v) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Dfa determinize(const Nfa& n, int state_cap) {
  const int nsym = n.symbols.num_symbols();
  std::unordered_map<std::vector<std::int32_t>, int, VecHash> ids;
  std::vector<std::vector<std::int32_t>> subsets;
  auto intern = [&](std::vector<std::int32_t> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    auto [it, fresh] = ids.try_emplace(subset, static_cast<int>(subsets.size()));
    if (fresh) subsets.push_back(it->first);
    return it->second;
  };
  // Index 0 = the empty subset = fail.
  ids.emplace(std::vector<std::int32_t>{}, 0);
  subsets.emplace_back();
  std::vector<std::int32_t> start_subset(n.starts.begin(), n.starts.end());
  int start = intern(std::move(start_subset));
  std::vector<std::int32_t> trans;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (static_cast<int>(subsets.size()) > state_cap) {
      throw ResourceCap("determinize exceeded the state cap");
    }
    std::vector<std::int32_t> cur = subsets[i];
    for (int s = 0; s < nsym; ++s) {
      std::vector<std::int32_t> next;
      for (std::int32_t q : cur) {
        const auto& ts = n.tr(q, s);
        next.insert(next.end(), ts.begin(), ts.end());
      }
      trans.push_back(intern(std::move(next)));
    }
  }
  Dfa d;
  d.symbols = n.symbols;
  d.num_states = static_cast<int>(subsets.size());
  d.start = start;
  d.transition = std::move(trans);
  d.accepting.assign(static_cast<std::size_t>(d.num_states), 0);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::int32_t q : subsets[i]) {
      if (n.accepting[static_cast<std::size_t>(q)]) {
        d.accepting[i] = 1;
        break;
      }
    }
  }
  return d;
}

Dfa minimize(const Dfa& d) {
  const int nsym = d.symbols.num_symbols();
  // Reachable states (always include fail).
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(d.num_states), 0);
  reach[0] = 1;
  std::vector<int> order;
  std::queue<int> bfs;
  if (!reach[static_cast<std::size_t>(d.start)]) {
    reach[static_cast<std::size_t>(d.start)] = 1;
    bfs.push(d.start);
  } else if (d.start == 0) {
    bfs.push(0);
  }
  while (!bfs.empty()) {
    int s = bfs.front();
    bfs.pop();
    order.push_back(s);
    for (int a = 0; a < nsym; ++a) {
      int t = d.tr(s, a);
      if (!reach[static_cast<std::size_t>(t)]) {
        reach[static_cast<std::size_t>(t)] = 1;
        bfs.push(t);
      }
    }
  }
  std::vector<int> domain;
  for (int s = 0; s < d.num_states; ++s) {
    if (reach[static_cast<std::size_t>(s)]) domain.push_back(s);
  }

  // Moore refinement by transition-class signatures.
  std::vector<int> cls(static_cast<std::size_t>(d.num_states), -1);
  for (int s : domain) cls[static_cast<std::size_t>(s)] = d.accepting[static_cast<std::size_t>(s)] ? 1 : 0;
  int num_classes = 2;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next_cls(static_cast<std::size_t>(d.num_states), -1);
    std::vector<int> sig;
    for (int s : domain) {
      sig.clear();
      sig.push_back(cls[static_cast<std::size_t>(s)]);
      for (int a = 0; a < nsym; ++a) sig.push_back(cls[static_cast<std::size_t>(d.tr(s, a))]);
      auto [it, fresh] = sig_ids.try_emplace(sig, static_cast<int>(sig_ids.size()));
      (void)fresh;
      next_cls[static_cast<std::size_t>(s)] = it->second;
    }
    int next_num = static_cast<int>(sig_ids.size());
    bool stable = next_num == num_classes;
    cls.swap(next_cls);
    num_classes = next_num;
    if (stable) break;
  }

  // Canonical numbering: fail's class -> 0, BFS from start's class -> 1,2,...
  std::vector<int> new_id(static_cast<std::size_t>(num_classes), -1);
  new_id[static_cast<std::size_t>(cls[0])] = 0;
  // Class representatives (first in BFS order).
  std::vector<int> rep(static_cast<std::size_t>(num_classes), -1);
  for (int s : domain) {
    if (rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(s)])] < 0) {
      rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(s)])] = s;
    }
  }
  rep[static_cast<std::size_t>(cls[0])] = 0;
  int next_id = 1;
  std::queue<int> q;
  int start_cls = cls[static_cast<std::size_t>(d.start)];
  if (new_id[static_cast<std::size_t>(start_cls)] < 0) {
    new_id[static_cast<std::size_t>(start_cls)] = next_id++;
    q.push(start_cls);
  }
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    int s = rep[static_cast<std::size_t>(c)];
    for (int a = 0; a < nsym; ++a) {
      int tc = cls[static_cast<std::size_t>(d.tr(s, a))];
      if (new_id[static_cast<std::size_t>(tc)] < 0) {
        new_id[static_cast<std::size_t>(tc)] = next_id++;
        q.push(tc);
      }
    }
  }

  Dfa out;
  out.symbols = d.symbols;
  out.num_states = next_id;
  out.start = new_id[static_cast<std::size_t>(start_cls)];
  out.accepting.assign(static_cast<std::size_t>(out.num_states), 0);
  out.transition.assign(static_cast<std::size_t>(out.num_states) * static_cast<std::size_t>(nsym), 0);
  for (int c = 0; c < num_classes; ++c) {
    int id = new_id[static_cast<std::size_t>(c)];
    if (id < 0) continue;  // class unreachable from start (and not fail)
    int s = rep[static_cast<std::size_t>(c)];
    out.accepting[static_cast<std::size_t>(id)] = d.accepting[static_cast<std::size_t>(s)];
    for (int a = 0; a < nsym; ++a) {
      int tid = new_id[static_cast<std::size_t>(cls[static_cast<std::size_t>(d.tr(s, a))])];
      if (tid < 0) throw InvariantViolation("minimize: transition to unnumbered class");
      out.set_tr(id, a, tid);
    }
  }
  return out;
}

Nfa morphism_image(const Dfa& a, const Morphism& phi) {
  if (!(phi.source == a.symbols)) {
    throw AlphabetMismatch("morphism_image: morphism source must match automaton alphabet");
  }
  const int nsym_src = a.symbols.num_symbols();
  const int nsym_tgt = phi.target.num_symbols();
  // Stage 1: expand multi-letter images through chain states, with epsilon
  // edges for empty images.
  struct Edge {
    int from, to, sym;  // sym = -1 means epsilon
  };
  std::vector<Edge> edges;
  int num_states = a.num_states;
  for (int s = 1; s < a.num_states; ++s) {
    for (int x = 0; x < nsym_src; ++x) {
      int t = a.tr(s, x);
      if (t == 0) continue;  // fail is dropped; NFAs are partial by nature
      const auto& img = phi.image[static_cast<std::size_t>(x)];
      if (img.empty()) {
        edges.push_back({s, t, -1});
      } else {
        int cur = s;
        for (std::size_t i = 0; i + 1 < img.size(); ++i) {
          int fresh = num_states++;
          edges.push_back({cur, fresh, img[i]});
          cur = fresh;
        }
        edges.push_back({cur, t, img.back()});
      }
    }
  }
  // Stage 2: epsilon closure elimination.
  std::vector<std::vector<int>> eps(static_cast<std::size_t>(num_states));
  std::vector<std::vector<std::pair<int, int>>> sym_edges(static_cast<std::size_t>(num_states));
  for (const Edge& e : edges) {
    if (e.sym < 0) {
      eps[static_cast<std::size_t>(e.from)].push_back(e.to);
    } else {
      sym_edges[static_cast<std::size_t>(e.from)].push_back({e.sym, e.to});
    }
  }
  std::vector<std::vector<int>> closure(static_cast<std::size_t>(num_states));
  for (int s = 0; s < num_states; ++s) {
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(num_states), 0);
    std::queue<int> cq;
    cq.push(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!cq.empty()) {
      int u = cq.front();
      cq.pop();
      closure[static_cast<std::size_t>(s)].push_back(u);
      for (int v : eps[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          cq.push(v);
        }
      }
    }
  }
  Nfa out;
  out.symbols = phi.target;
  out.num_states = num_states;
  out.accepting.assign(static_cast<std::size_t>(num_states), 0);
  for (int s = 0; s < a.num_states; ++s) {
    out.accepting[static_cast<std::size_t>(s)] = a.accepting[static_cast<std::size_t>(s)];
  }
  // A state accepts if its closure reaches an accepting state.
  for (int s = 0; s < num_states; ++s) {
    for (int u : closure[static_cast<std::size_t>(s)]) {
      if (out.accepting[static_cast<std::size_t>(u)]) {
        out.accepting[static_cast<std::size_t>(s)] = 1;
        break;
      }
    }
  }
  out.transition.assign(static_cast<std::size_t>(num_states) * static_cast<std::size_t>(nsym_tgt), {});
  for (int s = 0; s < num_states; ++s) {
    for (int u : closure[static_cast<std::size_t>(s)]) {
      for (auto [sym, t] : sym_edges[static_cast<std::size_t>(u)]) {
        for (int v : closure[static_cast<std::size_t>(t)]) {
          out.transition[static_cast<std::size_t>(s) * static_cast<std::size_t>(nsym_tgt) +
                         static_cast<std::size_t>(sym)]
              .push_back(v);
        }
      }
    }
  }
  for (auto& ts : out.transition) {
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  }
  out.starts = {a.start};
  return out;
}

Dfa morphism_preimage(const Dfa& a, const Morphism& phi) {
  if (!(phi.target == a.symbols)) {
    throw AlphabetMismatch("morphism_preimage: morphism target must match automaton alphabet");
  }
  const int nsym = phi.source.num_symbols();
  Dfa d;
  d.symbols = phi.source;
  d.num_states = a.num_states;
  d.start = a.start;
  d.accepting = a.accepting;
  d.transition.assign(static_cast<std::size_t>(d.num_states) * static_cast<std::size_t>(nsym), 0);
  for (int s = 0; s < d.num_states; ++s) {
    for (int x = 0; x < nsym; ++x) {
      int cur = s;
      for (int y : phi.image[static_cast<std::size_t>(x)]) cur = a.tr(cur, y);
      d.set_tr(s, x, cur);
    }
  }
  // State 0 keeps absorbing under any morphism (phi images land in fail).
  return d;
}

Dfa project(const Dfa& a, std::span<const int> coords, int state_cap) {
  Morphism phi = Morphism::projection(a.symbols, coords);
  return minimize(determinize(morphism_image(a, phi), state_cap));
}

std::vector<BigInt> count_per_length(const Dfa& a, int n_max) {
  if (n_max < 0) throw RangeError("count_per_length: n_max must be >= 0");
  const int nsym = a.symbols.num_symbols();
  // Multiplicity adjacency (skip fail: it never reaches acceptance).
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(a.num_states));
  for (int s = 1; s < a.num_states; ++s) {
    std::map<int, int> mult;
    for (int x = 0; x < nsym; ++x) {
      int t = a.tr(s, x);
      if (t != 0) mult[t]++;
    }
    adj[static_cast<std::size_t>(s)].assign(mult.begin(), mult.end());
  }
  std::vector<BigInt> cur(static_cast<std::size_t>(a.num_states), 0);
  if (a.start != 0) cur[static_cast<std::size_t>(a.start)] = 1;
  std::vector<BigInt> counts;
  counts.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0;; ++n) {
    BigInt total = 0;
    for (int s = 1; s < a.num_states; ++s) {
      if (a.accepting[static_cast<std::size_t>(s)]) total += cur[static_cast<std::size_t>(s)];
    }
    counts.push_back(total);
    if (n == n_max) break;
    std::vector<BigInt> next(static_cast<std::size_t>(a.num_states), 0);
    for (int s = 1; s < a.num_states; ++s) {
      if (cur[static_cast<std::size_t>(s)] == 0) continue;
      for (auto [t, m] : adj[static_cast<std::size_t>(s)]) {
        next[static_cast<std::size_t>(t)] += cur[static_cast<std::size_t>(s)] * m;
      }
    }
    cur.swap(next);
  }
  return counts;
}

}  // namespace cglab
