#include "gogkit/presentation.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "gogkit/errors.hpp"

namespace gogkit {

int Presentation::gen_index(const std::string& token) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i].token() == token) return static_cast<int>(i);
  return -1;
}

int Presentation::add_generator(const GeneratorSymbol& s) {
  if (gen_index(s.token()) >= 0)
    throw input_error("duplicate generator '" + s.token() + "'");
  generators.push_back(s);
  return static_cast<int>(generators.size()) - 1;
}

void Presentation::add_relator(const Word& w) {
  Word r = cyclic_reduce(w);
  if (!r.empty()) relators.push_back(std::move(r));
}

namespace {

bool is_token_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_token_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw input_error(std::string("expected '") + c + "' at offset " +
                        std::to_string(pos) + " in word/presentation text");
  }
  std::string token() {
    skip_ws();
    if (pos >= s.size() || !is_token_start(s[pos]))
      throw input_error("expected generator token at offset " + std::to_string(pos));
    size_t start = pos;
    while (pos < s.size() && is_token_char(s[pos])) ++pos;
    return s.substr(start, pos - start);
  }
  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw input_error("expected integer at offset " + std::to_string(start));
    return std::stoll(s.substr(start, pos - start));
  }
};

Word parse_word_expr(Cursor& cur, const Presentation& ctx, bool stop_at_eq);

Word parse_atom(Cursor& cur, const Presentation& ctx) {
  char c = cur.peek();
  if (c == '(') {
    cur.expect('(');
    Word inner = parse_word_expr(cur, ctx, false);
    cur.expect(')');
    return inner;
  }
  if (c == '[') {
    cur.expect('[');
    Word u = parse_word_expr(cur, ctx, false);
    cur.expect(',');
    Word v = parse_word_expr(cur, ctx, false);
    cur.expect(']');
    return commutator(u, v);
  }
  const std::string tok = cur.token();
  const int g = ctx.gen_index(tok);
  if (g < 0) throw input_error("unknown generator '" + tok + "'");
  Word w;
  w.letters.push_back(Letter{g, +1});
  return w;
}

Word parse_term(Cursor& cur, const Presentation& ctx) {
  Word atom = parse_atom(cur, ctx);
  if (cur.accept('^')) {
    const long long e = cur.integer();
    return power(atom, e);
  }
  return atom;
}

bool at_term_start(Cursor& cur) {
  char c = cur.peek();
  return c == '(' || c == '[' || is_token_start(c);
}

Word parse_word_expr(Cursor& cur, const Presentation& ctx, bool /*stop_at_eq*/) {
  Word w = parse_term(cur, ctx);
  while (at_term_start(cur)) w = concat(w, parse_term(cur, ctx));
  return w;
}

Word parse_relator(Cursor& cur, const Presentation& ctx) {
  Word lhs = parse_word_expr(cur, ctx, true);
  if (cur.accept('=')) {
    Word rhs = parse_word_expr(cur, ctx, true);
    return concat(lhs, inverse(rhs));
  }
  return lhs;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Cursor cur{text};
  cur.expect('<');
  Presentation p;
  if (cur.peek() != '|' && cur.peek() != '>') {
    p.add_generator(GeneratorSymbol::parse(cur.token()));
    while (cur.accept(',')) p.add_generator(GeneratorSymbol::parse(cur.token()));
  }
  if (cur.accept('|')) {
    if (cur.peek() != '>') {
      p.add_relator(parse_relator(cur, p));
      while (cur.accept(',')) p.add_relator(parse_relator(cur, p));
    }
  }
  cur.expect('>');
  if (!cur.eof()) throw input_error("trailing text after presentation");
  return p;
}

Word parse_word(const std::string& text, const Presentation& context) {
  Cursor cur{text};
  if (cur.eof()) return Word{};
  Word w = parse_relator(cur, context);
  if (!cur.eof()) throw input_error("trailing text after word: '" + text + "'");
  return w;
}

std::string word_text(const Word& w, const Presentation& ctx) {
  if (w.empty()) return "1";
  std::ostringstream os;
  // Run-length collects g g g into g^3 for readability.
  size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w.letters[j] == w.letters[i]) ++j;
    const long long run = static_cast<long long>(j - i);
    if (!first) os << ' ';
    first = false;
    os << ctx.generators[static_cast<size_t>(w.letters[i].gen)].token();
    const long long e = w.letters[i].sign > 0 ? run : -run;
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

std::string presentation_text(const Presentation& p) {
  std::ostringstream os;
  os << "< ";
  for (size_t i = 0; i < p.generators.size(); ++i) {
    if (i) os << ", ";
    os << p.generators[i].token();
  }
  os << " |";
  for (size_t i = 0; i < p.relators.size(); ++i) {
    os << (i ? ", " : " ") << word_text(p.relators[i], p);
  }
  os << " >";
  return os.str();
}

std::string presentation_json(const Presentation& p) {
  nlohmann::json j;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : p.generators) j["generators"].push_back(g.token());
  j["relators"] = nlohmann::json::array();
  for (const Word& r : p.relators) {
    nlohmann::json w = nlohmann::json::array();
    for (const Letter& l : r.letters) {
      w.push_back({p.generators[static_cast<size_t>(l.gen)].token(), l.sign});
    }
    j["relators"].push_back(w);
  }
  return j.dump();
}

Presentation presentation_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  Presentation p;
  for (const auto& g : j.at("generators"))
    p.add_generator(GeneratorSymbol::parse(g.get<std::string>()));
  for (const auto& rel : j.at("relators")) {
    std::vector<Letter> raw;
    for (const auto& lt : rel) {
      const std::string tok = lt.at(0).get<std::string>();
      const long long e = lt.at(1).get<long long>();
      const int g = p.gen_index(tok);
      if (g < 0) throw input_error("relator uses unknown generator '" + tok + "'");
      if (e == 0) throw input_error("zero exponent in relator letter");
      const int sign = e > 0 ? +1 : -1;
      for (long long k = 0; k < (e > 0 ? e : -e); ++k) raw.push_back(Letter{g, sign});
    }
    p.add_relator(free_reduce(raw));
  }
  return p;
}

}  // namespace gogkit
