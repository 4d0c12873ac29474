#include "goeritz/free_word.hpp"

#include <algorithm>
#include <cctype>

namespace goeritz {

std::string FreeWord::to_text() const {
  if (letters.empty()) return "1";
  std::string s;
  for (int l : letters) {
    switch (l) {
      case 1: s += 'x'; break;
      case -1: s += 'X'; break;
      case 2: s += 'y'; break;
      case -2: s += 'Y'; break;
      default: s += '?';
    }
  }
  return s;
}

FreeWord parse_free_word(const std::string& text) {
  FreeWord w;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    switch (c) {
      case 'x': w.letters.push_back(1); break;
      case 'X': w.letters.push_back(-1); break;
      case 'y': w.letters.push_back(2); break;
      case 'Y': w.letters.push_back(-2); break;
      case '1': break;
      default: fail(std::string("free word parse: unknown letter '") + c + "'");
    }
  }
  return w;
}

FreeWord free_reduce(const FreeWord& w) {
  FreeWord r;
  for (int l : w.letters) {
    if (!r.letters.empty() && r.letters.back() == -l)
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

FreeWord free_invert(const FreeWord& w) {
  FreeWord r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

FreeWord cyclic_reduce(const FreeWord& w) {
  FreeWord r = free_reduce(w);
  size_t lo = 0, hi = r.letters.size();
  while (hi - lo >= 2 && r.letters[lo] == -r.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  FreeWord out;
  out.letters.assign(r.letters.begin() + static_cast<long>(lo),
                     r.letters.begin() + static_cast<long>(hi));
  return out;
}

namespace {

std::vector<int> least_rotation(const std::vector<int>& v) {
  if (v.empty()) return v;
  std::vector<int> best = v;
  std::vector<int> cur = v;
  for (size_t i = 1; i < v.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

bool freely_homotopic(const FreeWord& u, const FreeWord& v) {
  FreeWord cu = cyclic_reduce(u);
  FreeWord cv = cyclic_reduce(v);
  if (cu.letters.size() != cv.letters.size()) return false;
  return least_rotation(cu.letters) == least_rotation(cv.letters);
}

}  // namespace goeritz
