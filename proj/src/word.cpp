#include "cglab/word.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "cglab/errors.hpp"

namespace cglab {

Alphabet Alphabet::free_group(int rank) {
  if (rank < 1) throw ParseError("free group rank must be >= 1");
  Alphabet a;
  a.tokens.reserve(2 * static_cast<std::size_t>(rank));
  a.inverse.reserve(2 * static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    std::string low, up;
    if (rank <= 13) {
      low = std::string(1, static_cast<char>('a' + i));
      up = std::string(1, static_cast<char>('A' + i));
    } else {
      low = "x" + std::to_string(i + 1);
      up = "X" + std::to_string(i + 1);
    }
    a.tokens.push_back(low);
    a.tokens.push_back(up);
    a.inverse.push_back(static_cast<Letter>(2 * i + 1));
    a.inverse.push_back(static_cast<Letter>(2 * i));
  }
  return a;
}

Alphabet Alphabet::free_product_cyclic(int m, int n) {
  if (m < 2 || n < 2) throw ParseError("free product factor orders must be >= 2");
  Alphabet a;
  auto add_factor = [&a](char base, int order, int offset) {
    for (int p = 1; p < order; ++p) {
      std::string tok(1, base);
      if (p > 1) tok += std::to_string(p);
      a.tokens.push_back(tok);
      int inv_power = order - p;
      a.inverse.push_back(static_cast<Letter>(offset + inv_power - 1));
    }
  };
  add_factor('a', m, 0);
  add_factor('b', n, m - 1);
  return a;
}

Word inverse_word(const Alphabet& a, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.push_back(a.inv(*it));
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.letters.size() + v.letters.size());
  out.insert(out.end(), u.letters.begin(), u.letters.end());
  out.insert(out.end(), v.letters.begin(), v.letters.end());
  return Word(std::move(out));
}

Word free_reduce(const Alphabet& a, const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.letters.size());
  for (Letter x : w.letters) {
    if (!stack.empty() && stack.back() == a.inv(x)) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(std::move(stack));
}

Word cyclic_reduce(const Alphabet& a, const Word& w) {
  Word r = free_reduce(a, w);
  std::size_t lo = 0, hi = r.letters.size();
  while (hi - lo >= 2 && r.letters[lo] == a.inv(r.letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(r.letters.begin() + static_cast<std::ptrdiff_t>(lo),
                                  r.letters.begin() + static_cast<std::ptrdiff_t>(hi)));
}

std::vector<Word> rotations(const Word& w) {
  if (w.empty()) return {w};
  std::vector<Word> out;
  const int n = w.length();
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Letter> rot;
    rot.reserve(static_cast<std::size_t>(n));
    rot.insert(rot.end(), w.letters.begin() + i, w.letters.end());
    rot.insert(rot.end(), w.letters.begin(), w.letters.begin() + i);
    out.emplace_back(std::move(rot));
  }
  return out;
}

Word lex_min_rotation(const Word& w) {
  const int n = w.length();
  if (n == 0) return w;
  // Compare rotation starts on the doubled word; n is small here.
  int best = 0;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Letter x = w.letters[static_cast<std::size_t>((i + j) % n)];
      Letter y = w.letters[static_cast<std::size_t>((best + j) % n)];
      if (x != y) {
        if (x < y) best = i;
        break;
      }
    }
  }
  std::vector<Letter> rot;
  rot.reserve(static_cast<std::size_t>(n));
  rot.insert(rot.end(), w.letters.begin() + best, w.letters.end());
  rot.insert(rot.end(), w.letters.begin(), w.letters.begin() + best);
  return Word(std::move(rot));
}

Word cyclic_normal_form(const Alphabet& a, const Word& w) {
  return lex_min_rotation(cyclic_reduce(a, w));
}

int smallest_cyclic_period(const Word& w) {
  const int n = w.length();
  if (n == 0) return 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      ok = w.letters[static_cast<std::size_t>(i)] == w.letters[static_cast<std::size_t>((i + d) % n)];
    }
    if (ok) return d;
  }
  return n;
}

std::string format_word(const Alphabet& a, const Word& w) {
  bool multi = false;
  for (const auto& t : a.tokens) {
    if (t.size() > 1 && (t[0] == 'x' || t[0] == 'X')) multi = true;
  }
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (multi && i > 0) out += ',';
    out += a.tokens[static_cast<std::size_t>(w.letters[i])];
  }
  return out;
}

namespace {

std::unordered_map<std::string, Letter> token_map(const Alphabet& a) {
  std::unordered_map<std::string, Letter> m;
  for (int i = 0; i < a.size(); ++i) m[a.tokens[static_cast<std::size_t>(i)]] = static_cast<Letter>(i);
  // Free-product alias: uppercase letter means the factor inverse of power 1.
  for (int i = 0; i < a.size(); ++i) {
    const std::string& t = a.tokens[static_cast<std::size_t>(i)];
    if (t.size() == 1 && t[0] >= 'a' && t[0] <= 'z') {
      std::string up(1, static_cast<char>(t[0] - 'a' + 'A'));
      if (!m.count(up)) m[up] = a.inverse[static_cast<std::size_t>(i)];
    }
  }
  return m;
}

}  // namespace

Word parse_word(const Alphabet& a, const std::string& text) {
  auto toks = token_map(a);
  std::vector<Letter> letters;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (!piece.empty()) {
        auto it = toks.find(piece);
        if (it == toks.end()) throw ParseError("unknown letter token '" + piece + "'");
        letters.push_back(it->second);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return Word(std::move(letters));
  }
  std::size_t i = 0;
  while (i < text.size()) {
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
      throw ParseError(std::string("unexpected character '") + text[i] + "' in word");
    }
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    std::string piece = text.substr(i, j - i);
    auto it = toks.find(piece);
    if (it == toks.end()) throw ParseError("unknown letter token '" + piece + "'");
    letters.push_back(it->second);
    i = j;
  }
  return Word(std::move(letters));
}

}  // namespace cglab
