#include "edgeideal/textio.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "edgeideal/errors.hpp"

namespace edgeideal {

std::string to_string(const Monomial& m, const VarSet& vars) {
  if (m.nvars() != vars.size()) {
    throw ValidationError("monomial variable count differs from variable set");
  }
  if (m.is_constant()) return "1";
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (e >= 2) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (const Monomial& g : ideal.generators()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(g, *ideal.ambient());
  }
  out += ')';
  return out;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos);
  }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos;
  }

  bool at_name_start() const {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string read_name() {
    if (!at_name_start()) fail("expected a variable name");
    std::size_t start = pos;
    while (!done()) {
      char c = text[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos;
      } else {
        break;
      }
    }
    return std::string(text.substr(start, pos - start));
  }

  long long read_integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected an integer");
    }
    long long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > std::numeric_limits<int>::max()) {
        fail("integer literal too large");
      }
      ++pos;
    }
    return value;
  }
};

// Parses one monomial term.  When `vars` is null, only syntax is checked and
// `names_seen` collects variable names by first appearance (discovery pass).
Monomial parse_term(Cursor& cur, const VarSet* vars,
                    std::vector<std::string>* names_seen) {
  int n = vars ? vars->size() : 0;
  std::vector<int> exps(n, 0);
  bool first_factor = true;
  while (true) {
    cur.skip_ws();
    if (cur.peek() == '1' && first_factor) {
      // Constant factor; only meaningful alone or as a leading "1*".
      ++cur.pos;
    } else if (cur.at_name_start()) {
      std::size_t name_pos = cur.pos;
      std::string name = cur.read_name();
      int power = 1;
      if (cur.peek() == '^') {
        ++cur.pos;
        long long p = cur.read_integer();
        power = static_cast<int>(p);
      }
      if (vars) {
        auto idx = vars->find(name);
        if (!idx) {
          throw ParseError("unknown variable '" + name + "'", name_pos);
        }
        long long sum = static_cast<long long>(exps[*idx]) + power;
        if (sum > std::numeric_limits<int>::max()) {
          throw ParseError("exponent too large", name_pos);
        }
        exps[*idx] = static_cast<int>(sum);
      } else if (names_seen) {
        bool known = false;
        for (const std::string& s : *names_seen) {
          if (s == name) {
            known = true;
            break;
          }
        }
        if (!known) names_seen->push_back(name);
      }
    } else {
      cur.fail("expected a variable name or '1'");
    }
    first_factor = false;
    cur.skip_ws();
    if (cur.peek() == '*') {
      ++cur.pos;
      continue;
    }
    break;
  }
  return Monomial(std::move(exps));
}

// Parses "( term, term, ... )" or "(0)".  Returns the generators; with a
// null `vars` it only records names.
std::vector<Monomial> parse_ideal_body(Cursor& cur, const VarSet* vars,
                                       std::vector<std::string>* names_seen) {
  std::vector<Monomial> gens;
  cur.skip_ws();
  cur.expect('(');
  cur.skip_ws();
  if (cur.peek() == ')') {
    cur.fail("empty ideal; write (0) for the zero ideal");
  }
  while (true) {
    cur.skip_ws();
    if (cur.peek() == '0') {
      ++cur.pos;  // an explicit zero contributes no generator
    } else {
      gens.push_back(parse_term(cur, vars, names_seen));
    }
    cur.skip_ws();
    if (cur.peek() == ',') {
      ++cur.pos;
      continue;
    }
    break;
  }
  cur.expect(')');
  cur.skip_ws();
  if (!cur.done()) cur.fail("unexpected trailing characters");
  return gens;
}

}  // namespace

Monomial parse_monomial(std::string_view text, const VarSet& vars) {
  Cursor cur{text};
  cur.skip_ws();
  Monomial m = parse_term(cur, &vars, nullptr);
  cur.skip_ws();
  if (!cur.done()) cur.fail("unexpected trailing characters");
  return m;
}

MonomialIdeal parse_ideal(std::string_view text, VarSetPtr vars) {
  if (!vars) throw ValidationError("ideal requires an ambient variable set");
  Cursor cur{text};
  std::vector<Monomial> gens = parse_ideal_body(cur, vars.get(), nullptr);
  for (const Monomial& g : gens) {
    if (g.is_constant()) {
      throw ParseError("constant generator is not allowed", 0);
    }
  }
  return MonomialIdeal(std::move(vars), std::move(gens));
}

MonomialIdeal parse_ideal(std::string_view text) {
  Cursor discover{text};
  std::vector<std::string> names;
  parse_ideal_body(discover, nullptr, &names);
  if (names.empty()) {
    throw ParseError(
        "cannot infer variables for an ideal with no variable occurrences", 0);
  }
  return parse_ideal(text, VarSet::make(std::move(names)));
}

}  // namespace edgeideal
