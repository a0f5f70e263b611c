#include "paritygame.hpp"

#include <cctype>
#include <cstring>
#include <sstream>

#include "errors.hpp"

namespace mucheck {

bool ParityGame::operator==(const ParityGame& o) const {
  if (positions.size() != o.positions.size()) return false;
  for (size_t i = 0; i < positions.size(); ++i) {
    const auto& a = positions[i];
    const auto& b = o.positions[i];
    if (a.owner != b.owner || a.priority != b.priority || a.moves != b.moves ||
        a.label != b.label)
      return false;
  }
  return true;
}

void ParityGame::validate() const {
  for (const auto& v : positions)
    for (uint32_t t : v.moves)
      if (t >= positions.size())
        throw ValidationError("dangling successor " + std::to_string(t));
}

std::string export_pgsolver(const ParityGame& g) {
  std::ostringstream out;
  out << "parity " << (g.positions.empty() ? 0 : g.positions.size() - 1)
      << ";\n";
  for (size_t i = 0; i < g.positions.size(); ++i) {
    const auto& v = g.positions[i];
    out << i << " " << v.priority << " "
        << (v.owner == Owner::exists ? 0 : 1);
    for (size_t k = 0; k < v.moves.size(); ++k)
      out << (k == 0 ? " " : ",") << v.moves[k];
    std::string label = v.label.empty() ? "n" + std::to_string(i) : v.label;
    out << " \"" << label << "\";\n";
  }
  return out.str();
}

namespace {

struct LineParser {
  const std::string& text;
  size_t pos = 0;
  int line = 1;

  bool done() const { return pos >= text.size(); }
  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  void newline() {
    skip_space();
    while (pos < text.size() && (text[pos] == '\n' || text[pos] == '\r')) {
      if (text[pos] == '\n') ++line;
      ++pos;
      skip_space();
    }
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, 1);
  }
  uint64_t number() {
    skip_space();
    if (pos >= text.size() || !isdigit(uint8_t(text[pos])))
      fail("expected number");
    uint64_t v = 0;
    while (pos < text.size() && isdigit(uint8_t(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return v;
  }
  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  bool eat_word(const char* w) {
    skip_space();
    size_t len = strlen(w);
    if (text.compare(pos, len, w) == 0) {
      pos += len;
      return true;
    }
    return false;
  }
};

}  // namespace

ParityGame import_pgsolver(const std::string& text) {
  LineParser p{text};
  p.newline();
  if (!p.eat_word("parity")) p.fail("expected 'parity' header");
  uint64_t maxindex = p.number();
  p.expect(';');
  p.newline();

  ParityGame g;
  g.positions.resize(maxindex + 1);
  std::vector<bool> defined(maxindex + 1, false);

  while (!p.done()) {
    p.newline();
    if (p.done()) break;
    uint64_t id = p.number();
    if (id > maxindex) p.fail("position id exceeds declared maximum");
    if (defined[id]) p.fail("duplicate position " + std::to_string(id));
    defined[id] = true;
    auto& v = g.positions[id];
    v.priority = uint32_t(p.number());
    uint64_t owner = p.number();
    if (owner > 1)
      p.fail("owner must be 0 or 1, got " + std::to_string(owner));
    v.owner = owner == 0 ? Owner::exists : Owner::forall;
    p.skip_space();
    if (!p.done() && isdigit(uint8_t(text[p.pos]))) {
      v.moves.push_back(uint32_t(p.number()));
      while (p.eat(',')) v.moves.push_back(uint32_t(p.number()));
    }
    p.skip_space();
    if (!p.done() && text[p.pos] == '"') {
      ++p.pos;
      std::string label;
      while (!p.done() && text[p.pos] != '"') {
        if (text[p.pos] == '\n') p.fail("unterminated label");
        label += text[p.pos++];
      }
      p.expect('"');
      v.label = label;
    } else {
      v.label = "n" + std::to_string(id);
    }
    p.expect(';');
    p.newline();
  }
  for (uint64_t i = 0; i <= maxindex; ++i)
    if (!defined[i])
      throw ParseError("position " + std::to_string(i) + " not defined", 1, 1);
  for (const auto& v : g.positions)
    for (uint32_t t : v.moves)
      if (t > maxindex)
        throw ParseError("dangling successor " + std::to_string(t), 1, 1);
  return g;
}

}  // namespace mucheck
