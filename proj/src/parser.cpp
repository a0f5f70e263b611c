#include "parser.hpp"

#include <cctype>
#include <map>
#include <set>

#include "errors.hpp"

namespace mucheck {

namespace {

bool ident_start(char c) { return std::isalpha(uint8_t(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(uint8_t(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula run() {
    Formula f = formula();
    skip_ws();
    if (pos_ < text_.size()) fail("trailing input after formula");
    resolve_stray_binder_names(f);
    return rename_apart(f);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line_, col_);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(uint8_t(text_[pos_])))
      advance();
  }

  char peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  bool eat(char c) {
    skip_ws();
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c, const std::string& what) {
    if (!eat(c)) fail("expected '" + std::string(1, c) + "' " + what);
  }

  std::string ident() {
    skip_ws();
    if (!ident_start(peek())) fail("expected identifier");
    std::string s;
    while (ident_char(peek())) {
      s += peek();
      advance();
    }
    return s;
  }

  std::string nat() {
    skip_ws();
    if (!std::isdigit(uint8_t(peek()))) fail("expected number");
    std::string s;
    while (std::isdigit(uint8_t(peek()))) {
      s += peek();
      advance();
    }
    return s;
  }

  Rational rat() {
    std::string a = nat();
    skip_ws();
    if (peek() == '/') {
      advance();
      std::string b = nat();
      if (BigInt(b) == 0) fail("rational with zero denominator");
      return Rational(BigInt(a), BigInt(b));
    }
    return Rational(BigInt(a), 1);
  }

  // "mu"/"nu" are recognized only when followed by a non-identifier char,
  // so atoms like "mutex" parse as atoms.
  bool keyword(const char* kw) {
    skip_ws();
    size_t len = std::char_traits<char>::length(kw);
    if (text_.compare(pos_, len, kw) != 0) return false;
    if (pos_ + len < text_.size() && ident_char(text_[pos_ + len]))
      return false;
    for (size_t i = 0; i < len; ++i) advance();
    return true;
  }

  Formula formula() {
    if (keyword("mu")) {
      std::string x = ident();
      expect('.', "after fixpoint variable");
      scopes_.push_back(x);
      binder_names_.insert(x);
      Formula body = formula();
      scopes_.pop_back();
      return Formula::mu(x, body);
    }
    if (keyword("nu")) {
      std::string x = ident();
      expect('.', "after fixpoint variable");
      scopes_.push_back(x);
      binder_names_.insert(x);
      Formula body = formula();
      scopes_.pop_back();
      return Formula::nu(x, body);
    }
    return disj();
  }

  Formula disj() {
    Formula f = conj();
    while (eat('|')) f = Formula::disj(f, conj());
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (eat('&')) f = Formula::conj(f, unary());
    return f;
  }

  Formula unary() {
    skip_ws();
    int l = line_, c = col_;
    if (eat('!')) {
      Formula f = unary();
      if (!f.closed())
        throw ParseError(
            "negation applied to a subformula with free fixpoint variable '" +
                *f.free_vars().begin() + "'",
            l, c);
      return f.negated();
    }
    if (peek() == '<' || peek() == '[') {
      ModalOp op = modal_op();
      return Formula::modal(op, unary());
    }
    return atomexpr();
  }

  ModalOp modal_op() {
    skip_ws();
    bool dia = peek() == '<';
    advance();
    char c = peek();
    if (dia && c == '>') {
      advance();
      return ModalOp::diamond();
    }
    if (!dia && c == ']') {
      advance();
      return ModalOp::box();
    }
    if (c == 'g') {
      advance();
      std::string n = nat();
      close_modal(dia);
      unsigned long long g = 0;
      try {
        g = std::stoull(n);
      } catch (const std::out_of_range&) {
        fail("grade out of range");
      }
      return dia ? ModalOp::graded_dia(g) : ModalOp::graded_box(g);
    }
    if (c == 'p') {
      advance();
      Rational p = rat();
      if (p > Rational(1)) fail("probability threshold above 1");
      close_modal(dia);
      return dia ? ModalOp::prob_dia(p) : ModalOp::prob_box(p);
    }
    if (c == 'm') {
      advance();
      close_modal(dia);
      return dia ? ModalOp::mon_dia() : ModalOp::mon_box();
    }
    if (c == '{') {
      advance();
      std::vector<std::string> agents;
      skip_ws();
      if (peek() != '}') {  // the empty coalition is accepted
        agents.push_back(ident());
        while (eat(',')) agents.push_back(ident());
      }
      expect('}', "to close coalition");
      close_modal(dia);
      return dia ? ModalOp::coal_dia(std::move(agents))
                 : ModalOp::coal_box(std::move(agents));
    }
    fail("malformed modal operator");
  }

  void close_modal(bool dia) {
    skip_ws();
    char want = dia ? '>' : ']';
    if (peek() != want) fail("expected '" + std::string(1, want) + "'");
    advance();
  }

  Formula atomexpr() {
    skip_ws();
    if (eat('(')) {
      Formula f = formula();
      expect(')', "to close parenthesis");
      return f;
    }
    if (keyword("true")) return Formula::top();
    if (keyword("false")) return Formula::bot();
    int l = line_, c = col_;
    std::string name = ident();
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
      if (*it == name) return Formula::var(name);
    atom_sites_[name] = {l, c};
    return Formula::atom(name);
  }

  // An identifier bound by some fixpoint elsewhere in the formula must not
  // also occur as an atom: such an occurrence is an out-of-scope variable
  // use, not a proposition.
  void resolve_stray_binder_names(const Formula&) {
    for (const auto& [name, site] : atom_sites_)
      if (binder_names_.count(name))
        throw ParseError("unbound fixpoint variable '" + name + "'",
                         site.first, site.second);
  }

  // Renames bound variables so they are pairwise distinct and disjoint from
  // every other identifier in the formula.
  Formula rename_apart(const Formula& f) {
    std::set<std::string> used = f.all_idents();
    std::map<std::string, std::string> env;
    return rename(f, env, used);
  }

  Formula rename(const Formula& f, std::map<std::string, std::string>& env,
                 std::set<std::string>& used) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::var: {
        auto it = env.find(f.name());
        return Formula::var(it == env.end() ? f.name() : it->second);
      }
      case K::conj:
        return Formula::conj(rename(f.left(), env, used),
                             rename(f.right(), env, used));
      case K::disj:
        return Formula::disj(rename(f.left(), env, used),
                             rename(f.right(), env, used));
      case K::modal:
        return Formula::modal(f.op(), rename(f.arg(), env, used));
      case K::mu:
      case K::nu: {
        std::string fresh = f.name();
        if (!taken_.insert(fresh).second) {
          int i = 2;
          do {
            fresh = f.name() + "_" + std::to_string(i++);
          } while (used.count(fresh) || !taken_.insert(fresh).second);
        }
        used.insert(fresh);
        auto saved = env.find(f.name()) != env.end()
                         ? std::optional<std::string>(env[f.name()])
                         : std::nullopt;
        env[f.name()] = fresh;
        Formula body = rename(f.arg(), env, used);
        if (saved)
          env[f.name()] = *saved;
        else
          env.erase(f.name());
        return f.kind() == K::mu ? Formula::mu(fresh, body)
                                 : Formula::nu(fresh, body);
      }
      default: return f;
    }
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  std::vector<std::string> scopes_;
  std::set<std::string> binder_names_;
  std::set<std::string> taken_;
  std::map<std::string, std::pair<int, int>> atom_sites_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).run(); }

}  // namespace mucheck
