#include "goeritz/words.hpp"

#include <sstream>

namespace goeritz {

bool generator_valid(Gen g, long p) {
  switch (g) {
    case Gen::Alpha: return p >= 3;
    case Gen::Beta: return p >= 2;
    case Gen::Gamma: return p >= 2;
    case Gen::Delta: return p == 3;
    case Gen::Rho: return p == 2;
    case Gen::Sigma: return p >= 4;
  }
  return false;
}

char generator_token(Gen g) {
  switch (g) {
    case Gen::Alpha: return 'a';
    case Gen::Beta: return 'b';
    case Gen::Gamma: return 'g';
    case Gen::Delta: return 'd';
    case Gen::Rho: return 'r';
    case Gen::Sigma: return 's';
  }
  return '?';
}

const char* generator_name(Gen g) {
  switch (g) {
    case Gen::Alpha: return "alpha";
    case Gen::Beta: return "beta";
    case Gen::Gamma: return "gamma";
    case Gen::Delta: return "delta";
    case Gen::Rho: return "rho";
    case Gen::Sigma: return "sigma";
  }
  return "?";
}

Gen generator_from_token(char c) {
  switch (c) {
    case 'a': return Gen::Alpha;
    case 'b': return Gen::Beta;
    case 'g': return Gen::Gamma;
    case 'd': return Gen::Delta;
    case 'r': return Gen::Rho;
    case 's': return Gen::Sigma;
  }
  fail(std::string("unknown generator token '") + c + "'");
}

GroupWord::GroupWord(long p) : p_(p) {
  if (p < 2) fail("GroupWord: p must be >= 2");
}

GroupWord::GroupWord(long p, std::vector<Letter> letters) : GroupWord(p) {
  for (const Letter& l : letters) append(l.gen, l.exp);
}

void GroupWord::append(Gen g, long long exp) {
  if (exp == 0) return;
  if (!generator_valid(g, p_))
    fail(std::string("generator ") + generator_name(g) + " is not valid for p = " +
         std::to_string(p_));
  if (!letters_.empty() && letters_.back().gen == g) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(Letter{g, exp});
}

std::string GroupWord::to_text() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : letters_) {
    if (!first) os << ' ';
    first = false;
    os << generator_token(l.gen);
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

GroupWord parse_word(const std::string& text, long p) {
  GroupWord w(p);
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;  // explicit identity token
    Gen g = generator_from_token(tok[0]);
    long long exp = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^') fail("word parse: expected '^' in token '" + tok + "'");
      std::string num = tok.substr(2);
      if (num.empty()) fail("word parse: missing exponent in token '" + tok + "'");
      try {
        size_t pos = 0;
        exp = std::stoll(num, &pos);
        if (pos != num.size()) throw std::invalid_argument(num);
      } catch (const std::exception&) {
        fail("word parse: bad exponent in token '" + tok + "'");
      }
    }
    w.append(g, exp);
  }
  return w;
}

GroupWord multiply(const GroupWord& u, const GroupWord& v) {
  if (u.p() != v.p()) fail("multiply: mismatched p");
  GroupWord w = u;
  for (const Letter& l : v.letters()) w.append(l.gen, l.exp);
  return w;
}

GroupWord invert(const GroupWord& u) {
  GroupWord w(u.p());
  const auto& ls = u.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) w.append(it->gen, -it->exp);
  return w;
}

}  // namespace goeritz
