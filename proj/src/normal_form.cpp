#include "goeritz/normal_form.hpp"

#include <sstream>

namespace goeritz {

namespace {

// Syllable of the quotient's free-product structure.  For p = 2 the pair is
// (gamma exponent, rho exponent) in Z2 x Z2; for p = 3 it is
// (gamma exponent, delta exponent) in S3; for p >= 4 each non-beta letter is
// its own syllable and `b` is unused.
struct Syllable {
  bool is_beta;
  int a = 0;
  int b = 0;
  Gen lone = Gen::Beta;  // p >= 4: the involution this syllable holds
};

struct Reducer {
  long p;
  int parity = 0;
  std::vector<Syllable> stack;

  void push_beta() {
    if (!stack.empty() && stack.back().is_beta) {
      stack.pop_back();
      return;
    }
    stack.push_back(Syllable{true});
  }

  // p = 2: multiply (gamma^a0 rho^b0)(gamma^a rho^b); moving gamma left past
  // rho costs a central rho^2, and rho rho folds into the parity as well.
  void push_gr(int a, int b) {
    if ((a | b) == 0) return;
    if (!stack.empty() && !stack.back().is_beta) {
      Syllable top = stack.back();
      stack.pop_back();
      parity ^= (top.b & a) ^ (top.b & b);
      push_gr(top.a ^ a, top.b ^ b);
      return;
    }
    stack.push_back(Syllable{false, a, b});
  }

  // p = 3: multiply in S3 = <gamma, delta | gamma^2, delta^3, (gamma delta)^2>,
  // canonical syllable gamma^e delta^f.  delta^f gamma = gamma delta^{-f}.
  void push_gd(int e, int f) {
    e &= 1;
    f = ((f % 3) + 3) % 3;
    if (e == 0 && f == 0) return;
    if (!stack.empty() && !stack.back().is_beta) {
      Syllable top = stack.back();
      stack.pop_back();
      int ne = top.a ^ e;
      int nf = ((f + (e ? -top.b : top.b)) % 3 + 3) % 3;
      push_gd(ne, nf);
      return;
    }
    stack.push_back(Syllable{false, e, f});
  }

  // p >= 4: free product of three involutions.
  void push_involution(Gen g) {
    if (!stack.empty() && !stack.back().is_beta && stack.back().lone == g) {
      stack.pop_back();
      return;
    }
    if (!stack.empty() && stack.back().is_beta && g == Gen::Beta) {
      stack.pop_back();
      return;
    }
    Syllable s;
    s.is_beta = (g == Gen::Beta);
    s.lone = g;
    stack.push_back(s);
  }
};

NormalForm reduce_p2(const GroupWord& w) {
  Reducer r{2, 0, {}};
  for (const Letter& l : w.letters()) {
    long long e = ((l.exp % 4) + 4) % 4;
    switch (l.gen) {
      case Gen::Beta:
        if (e & 1) r.push_beta();
        break;
      case Gen::Gamma:
        if (e & 1) r.push_gr(1, 0);
        break;
      case Gen::Rho:
        r.parity ^= static_cast<int>((e >> 1) & 1);
        if (e & 1) r.push_gr(0, 1);
        break;
      default:
        fail("normal_form: generator invalid for p = 2");
    }
  }
  GroupWord core(2);
  for (const Syllable& s : r.stack) {
    if (s.is_beta) {
      core.append(Gen::Beta, 1);
    } else {
      if (s.a) core.append(Gen::Gamma, 1);
      if (s.b) core.append(Gen::Rho, 1);
    }
  }
  return NormalForm{2, r.parity, std::move(core)};
}

NormalForm reduce_p3(const GroupWord& w) {
  Reducer r{3, 0, {}};
  for (const Letter& l : w.letters()) {
    switch (l.gen) {
      case Gen::Alpha:
        r.parity ^= static_cast<int>(((l.exp % 2) + 2) % 2);
        break;
      case Gen::Beta:
        if (((l.exp % 2) + 2) % 2) r.push_beta();
        break;
      case Gen::Gamma:
        if (((l.exp % 2) + 2) % 2) r.push_gd(1, 0);
        break;
      case Gen::Delta:
        r.push_gd(0, static_cast<int>(((l.exp % 3) + 3) % 3));
        break;
      default:
        fail("normal_form: generator invalid for p = 3");
    }
  }
  GroupWord core(3);
  for (const Syllable& s : r.stack) {
    if (s.is_beta) {
      core.append(Gen::Beta, 1);
    } else {
      if (s.a) core.append(Gen::Gamma, 1);
      if (s.b) core.append(Gen::Delta, s.b);
    }
  }
  return NormalForm{3, r.parity, std::move(core)};
}

NormalForm reduce_big_p(const GroupWord& w) {
  Reducer r{w.p(), 0, {}};
  for (const Letter& l : w.letters()) {
    int odd = static_cast<int>(((l.exp % 2) + 2) % 2);
    if (!odd) continue;
    switch (l.gen) {
      case Gen::Alpha:
        r.parity ^= 1;
        break;
      case Gen::Beta:
      case Gen::Gamma:
      case Gen::Sigma:
        r.push_involution(l.gen);
        break;
      default:
        fail("normal_form: generator invalid for p >= 4");
    }
  }
  GroupWord core(w.p());
  for (const Syllable& s : r.stack) core.append(s.lone, 1);
  return NormalForm{w.p(), r.parity, std::move(core)};
}

}  // namespace

NormalForm normal_form(const GroupWord& w) {
  if (w.p() == 2) return reduce_p2(w);
  if (w.p() == 3) return reduce_p3(w);
  return reduce_big_p(w);
}

bool is_trivial_in_quotient(const GroupWord& w) { return normal_form(w).is_trivial(); }

GroupWord NormalForm::realize() const {
  GroupWord w(p);
  if (central_parity) {
    if (p == 2)
      w.append(Gen::Rho, 2);
    else
      w.append(Gen::Alpha, 1);
  }
  return multiply(w, core);
}

std::string NormalForm::to_text() const {
  std::ostringstream os;
  if (central_parity) os << (p == 2 ? "r^2" : "a") << (core.empty() ? "" : " ");
  if (!core.empty() || !central_parity) os << core.to_text();
  return os.str();
}

LLPrefix ll_prefix(const GroupWord& w) {
  if (w.p() < 4) fail("ll_prefix: defined only for p >= 4");
  NormalForm nf = normal_form(w);
  const auto& ls = nf.core.letters();
  if (ls.empty()) return LLPrefix::None;
  if (ls[0].gen == Gen::Gamma) return LLPrefix::Gamma;
  if (ls[0].gen == Gen::Sigma) return LLPrefix::Sigma;
  // Leading beta; the reduced word alternates, so look one letter further.
  if (ls.size() < 2) return LLPrefix::None;
  return ls[1].gen == Gen::Gamma ? LLPrefix::BetaGamma : LLPrefix::BetaSigma;
}

const char* ll_prefix_name(LLPrefix ll) {
  switch (ll) {
    case LLPrefix::None: return "empty";
    case LLPrefix::Gamma: return "gamma";
    case LLPrefix::Sigma: return "sigma";
    case LLPrefix::BetaGamma: return "beta gamma";
    case LLPrefix::BetaSigma: return "beta sigma";
  }
  return "?";
}

P2Form parse_p2_form(const NormalForm& nf) {
  if (nf.p != 2) fail("parse_p2_form: not a p = 2 normal form");
  P2Form f{};
  f.omega_hat = nf.central_parity;
  // Cut the core at each rho.  Segments between rhos are beta (gamma beta)^j
  // words optionally followed by gamma, i.e. eta_k gamma^eps with k >= 1.
  std::vector<Gen> flat;
  for (const Letter& l : nf.core.letters())
    for (long long i = 0; i < l.exp; ++i) flat.push_back(l.gen);

  std::vector<std::vector<Gen>> segments(1);
  for (Gen g : flat) {
    if (g == Gen::Rho)
      segments.emplace_back();
    else
      segments.back().push_back(g);
  }
  // segments.front() is left of the leftmost rho, segments.back() right of
  // the rightmost; with no rho there is a single segment.
  auto count_betas = [](const std::vector<Gen>& s) {
    long long k = 0;
    for (Gen g : s)
      if (g == Gen::Beta) ++k;
    return k;
  };
  size_t nseg = segments.size();
  const auto& right = segments.back();
  f.k0 = count_betas(right);
  f.eps0 = (!right.empty() && right.back() == Gen::Gamma) ? 1 : 0;
  const auto& left = segments.front();
  if (nseg == 1) {
    f.eps_top = 0;
    return f;
  }
  f.eps_top = (!left.empty() && left.front() == Gen::Gamma && count_betas(left) > 0) ? 1 : 0;
  // Blocks read leftmost first: segment i (0-based, i < nseg-1) ends at a rho.
  for (size_t i = 0; i + 1 < nseg; ++i) {
    const auto& s = segments[i];
    P2Block blk;
    blk.k = count_betas(s);
    blk.eps = (!s.empty() && s.back() == Gen::Gamma) ? 1 : 0;
    if (i == 0 && s.size() == 1 && s[0] == Gen::Gamma) {
      // Lone gamma before the leftmost rho: record it as the block's eps.
      blk.k = 0;
      blk.eps = 1;
    }
    f.blocks.push_back(blk);
  }
  return f;
}

P3Form parse_p3_form(const NormalForm& nf) {
  if (nf.p != 3) fail("parse_p3_form: not a p = 3 normal form");
  P3Form f{};
  f.alpha = nf.central_parity;
  // Walk syllables: optional leading S3 syllable means the beta of eta_n was
  // cancelled by beta^{eps2}.
  struct Syl {
    bool beta;
    int e = 0, d = 0;
  };
  std::vector<Syl> syls;
  for (const Letter& l : nf.core.letters()) {
    if (l.gen == Gen::Beta) {
      syls.push_back({true});
    } else if (l.gen == Gen::Gamma) {
      syls.push_back({false, 1, 0});
    } else {  // delta
      if (!syls.empty() && !syls.back().beta && syls.back().d == 0)
        syls.back().d = static_cast<int>(l.exp);
      else
        syls.push_back({false, 0, static_cast<int>(l.exp)});
    }
  }
  size_t i = 0;
  if (!syls.empty() && !syls.front().beta) {
    f.beta_left = 1;
    f.etas.emplace_back(syls[0].e, syls[0].d);
    i = 1;
  }
  while (i < syls.size()) {
    if (i + 1 < syls.size() && syls[i].beta && !syls[i + 1].beta) {
      f.etas.emplace_back(syls[i + 1].e, syls[i + 1].d);
      i += 2;
    } else if (syls[i].beta && i + 1 == syls.size()) {
      f.beta_right = 1;
      ++i;
    } else {
      fail("parse_p3_form: malformed canonical core");
    }
  }
  return f;
}

}  // namespace goeritz
