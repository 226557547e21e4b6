#include "gogkit/word.hpp"

#include <cctype>
#include <cstdlib>

namespace gogkit {

GeneratorSymbol GeneratorSymbol::parse(const std::string& tok) {
  size_t cut = tok.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(tok[cut - 1]))) --cut;
  if (cut == tok.size() || cut == 0) return GeneratorSymbol{tok, std::nullopt};
  return GeneratorSymbol{tok.substr(0, cut), std::atoi(tok.c_str() + cut)};
}

Word free_reduce(const std::vector<Letter>& raw) {
  Word out;
  out.letters.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!out.letters.empty() && out.letters.back().gen == l.gen &&
        out.letters.back().sign == -l.sign) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(Letter{it->gen, -it->sign});
  return out;
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> raw = a.letters;
  raw.insert(raw.end(), b.letters.begin(), b.letters.end());
  return free_reduce(raw);
}

Word power(const Word& w, long long n) {
  Word base = n < 0 ? inverse(w) : w;
  long long k = n < 0 ? -n : n;
  Word out;
  for (long long i = 0; i < k; ++i) out = concat(out, base);
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

Word cyclic_reduce(const Word& w) {
  Word out = free_reduce(w.letters);
  while (out.size() >= 2) {
    const Letter& first = out.letters.front();
    const Letter& last = out.letters.back();
    if (first.gen == last.gen && first.sign == -last.sign) {
      out.letters.erase(out.letters.begin());
      out.letters.pop_back();
    } else {
      break;
    }
  }
  return out;
}

Word relabel(const Word& w, const std::vector<int>& map) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (const Letter& l : w.letters)
    raw.push_back(Letter{map[static_cast<size_t>(l.gen)], l.sign});
  return free_reduce(raw);
}

Word substitute(const Word& w, const std::vector<Word>& substitution) {
  std::vector<Letter> raw;
  for (const Letter& l : w.letters) {
    const Word& image = substitution[static_cast<size_t>(l.gen)];
    if (l.sign > 0) {
      raw.insert(raw.end(), image.letters.begin(), image.letters.end());
    } else {
      const Word inv = inverse(image);
      raw.insert(raw.end(), inv.letters.begin(), inv.letters.end());
    }
  }
  return free_reduce(raw);
}

}  // namespace gogkit
