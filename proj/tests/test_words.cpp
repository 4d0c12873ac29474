#include "doctest.h"

#include "goeritz/free_word.hpp"
#include "goeritz/normal_form.hpp"
#include "goeritz/star_map.hpp"
#include "goeritz/sweeps.hpp"
#include "goeritz/words.hpp"

using namespace goeritz;

TEST_CASE("word parsing") {
  GroupWord w = parse_word("b g r^2", 2);
  REQUIRE(w.letters().size() == 3);
  CHECK(w.letters()[0] == Letter{Gen::Beta, 1});
  CHECK(w.letters()[1] == Letter{Gen::Gamma, 1});
  CHECK(w.letters()[2] == Letter{Gen::Rho, 2});

  CHECK(parse_word("", 5).empty());
  CHECK_THROWS_AS(parse_word("d", 5), Error);          // delta needs p = 3
  CHECK_THROWS_AS(parse_word("r", 3), Error);          // rho needs p = 2
  CHECK_THROWS_AS(parse_word("a", 2), Error);          // alpha needs p >= 3
  CHECK_THROWS_AS(parse_word("q", 5), Error);
  CHECK_THROWS_AS(parse_word("b^x", 5), Error);
  CHECK(parse_word("r^-1", 2).letters()[0].exp == -1);
  CHECK(parse_word("b^2 b^-2", 5).empty());
}

TEST_CASE("multiply merges but never rewrites") {
  GroupWord bg = parse_word("b g", 5);
  GroupWord gb = parse_word("g b", 5);
  CHECK(multiply(bg, gb) == parse_word("b g^2 b", 5));
  CHECK(multiply(bg, GroupWord(5)) == bg);
  GroupWord r2 = parse_word("r^2", 2);
  CHECK(multiply(r2, r2) == parse_word("r^4", 2));
  CHECK_THROWS_AS(multiply(parse_word("b", 2), parse_word("b", 3)), Error);
}

TEST_CASE("invert reverses and negates") {
  CHECK(invert(parse_word("b g r", 2)) == parse_word("r^-1 g^-1 b^-1", 2));
  CHECK(invert(GroupWord(7)).empty());
  CHECK(invert(parse_word("r^2", 2)) == parse_word("r^-2", 2));
  GroupWord w = parse_word("b g^3 s^-2", 7);
  CHECK(multiply(w, invert(w)).empty());
}

TEST_CASE("normal form p = 2") {
  // rho gamma = rho^2 (gamma rho)
  NormalForm nf = normal_form(parse_word("r g", 2));
  CHECK(nf.central_parity == 1);
  CHECK(nf.core == parse_word("g r", 2));
  CHECK(nf.realize() == parse_word("r^2 g r", 2));

  CHECK(is_trivial_in_quotient(parse_word("b^2", 2)));
  CHECK(is_trivial_in_quotient(parse_word("g r g r", 2)));  // defining relation
  CHECK(is_trivial_in_quotient(parse_word("r^4", 2)));
  CHECK(is_trivial_in_quotient(parse_word("r^2 b r^2 b^-1", 2)));
  CHECK_FALSE(is_trivial_in_quotient(parse_word("g", 2)));
  CHECK_FALSE(is_trivial_in_quotient(parse_word("r^2", 2)));

  P2Form f = parse_p2_form(nf);
  CHECK(f.omega_hat == 1);
  REQUIRE(f.blocks.size() == 1);
  CHECK(f.blocks[0].k == 0);
  CHECK(f.blocks[0].eps == 1);
  CHECK(f.k0 == 0);
  CHECK(f.eps0 == 0);
}

TEST_CASE("normal form p = 3") {
  // gamma delta is already in eta shape; delta^2 gamma rewrites to it.
  NormalForm a = normal_form(parse_word("g d", 3));
  NormalForm b = normal_form(parse_word("d^2 g", 3));
  CHECK(a == b);
  CHECK(a.core == parse_word("g d", 3));
  CHECK(is_trivial_in_quotient(parse_word("b^2", 3)));
  CHECK(is_trivial_in_quotient(parse_word("d^3", 3)));
  CHECK(is_trivial_in_quotient(parse_word("g d g d", 3)));
  CHECK(is_trivial_in_quotient(parse_word("a b a b^-1", 3)));
  CHECK_FALSE(is_trivial_in_quotient(parse_word("a", 3)));

  P3Form f = parse_p3_form(normal_form(parse_word("a b g d^2 b", 3)));
  CHECK(f.alpha == 1);
  REQUIRE(f.etas.size() == 1);
  CHECK(f.etas[0] == std::pair<int, int>{1, 2});
  CHECK(f.beta_right == 1);
}

TEST_CASE("normal form p >= 4") {
  CHECK(is_trivial_in_quotient(parse_word("b^2", 7)));
  CHECK(is_trivial_in_quotient(parse_word("s g g s", 7)));
  NormalForm nf = normal_form(parse_word("a s b b s g", 7));
  CHECK(nf.central_parity == 1);
  CHECK(nf.core == parse_word("g", 7));
}

TEST_CASE("normal form is idempotent and star-compatible") {
  for (long p : {2L, 3L, 5L, 7L}) {
    for (unsigned long long i = 0; i < 200; ++i) {
      std::mt19937_64 rng = sample_rng(42, i);
      GroupWord w = random_word(p, 10, rng);
      NormalForm nf = normal_form(w);
      CHECK(normal_form(nf.realize()) == nf);
      CHECK(star(w) == star(nf.realize()));
    }
  }
}

TEST_CASE("normal form inverse law") {
  for (long p : {2L, 3L, 5L}) {
    for (unsigned long long i = 0; i < 100; ++i) {
      std::mt19937_64 rng = sample_rng(7, i);
      GroupWord u = random_word(p, 8, rng);
      CHECK(is_trivial_in_quotient(multiply(u, invert(u))));
    }
  }
}

TEST_CASE("p = 2 canonical cores satisfy the block shape") {
  // Interior blocks need k >= 1; exponents are all 0/1 by construction.
  for (unsigned long long i = 0; i < 300; ++i) {
    std::mt19937_64 rng = sample_rng(11, i);
    GroupWord w = random_word(2, 12, rng);
    P2Form f = parse_p2_form(normal_form(w));
    for (size_t j = 0; j < f.blocks.size(); ++j) {
      bool leftmost = j == 0;
      if (!leftmost) CHECK(f.blocks[j].k >= 1);
      CHECK(f.blocks[j].k >= 0);
    }
    CHECK(f.k0 >= 0);
  }
}

TEST_CASE("ll prefix") {
  CHECK(ll_prefix(parse_word("b", 5)) == LLPrefix::None);
  CHECK(ll_prefix(parse_word("g b s", 5)) == LLPrefix::Gamma);
  CHECK(ll_prefix(parse_word("b s g", 5)) == LLPrefix::BetaSigma);
  CHECK(ll_prefix(parse_word("b g s", 5)) == LLPrefix::BetaGamma);
  CHECK(ll_prefix(parse_word("s", 5)) == LLPrefix::Sigma);
  CHECK(ll_prefix(parse_word("", 5)) == LLPrefix::None);
  CHECK(ll_prefix(parse_word("a b", 5)) == LLPrefix::None);  // alpha stripped
  CHECK_THROWS_AS(ll_prefix(parse_word("g", 2)), Error);
}

TEST_CASE("free word basics") {
  CHECK(cyclic_reduce(parse_free_word("x y X")) == parse_free_word("y"));
  CHECK(cyclic_reduce(parse_free_word("x y")) == parse_free_word("x y"));
  CHECK(cyclic_reduce(parse_free_word("x X")).letters.empty());

  CHECK(freely_homotopic(parse_free_word("x y X"), parse_free_word("y")));
  CHECK(freely_homotopic(parse_free_word("x y"), parse_free_word("y x")));
  CHECK_FALSE(freely_homotopic(parse_free_word("x"), parse_free_word("y")));
  CHECK(freely_homotopic(parse_free_word(""), parse_free_word("x X")));
}

TEST_CASE("free homotopy is conjugation invariant") {
  for (unsigned long long i = 0; i < 300; ++i) {
    std::mt19937_64 rng = sample_rng(5, i);
    std::uniform_int_distribution<int> len(1, 10), letter(0, 3);
    auto rand_word = [&](int n) {
      FreeWord w;
      static const int map[4] = {1, -1, 2, -2};
      for (int j = 0; j < n; ++j) w.letters.push_back(map[letter(rng)]);
      return w;
    };
    FreeWord u = rand_word(len(rng));
    FreeWord g = rand_word(len(rng));
    FreeWord gug;
    gug.letters = g.letters;
    gug.letters.insert(gug.letters.end(), u.letters.begin(), u.letters.end());
    FreeWord gi = free_invert(g);
    gug.letters.insert(gug.letters.end(), gi.letters.begin(), gi.letters.end());
    CHECK(freely_homotopic(gug, u));
    // Symmetry spot check.
    FreeWord v = rand_word(len(rng));
    CHECK(freely_homotopic(u, v) == freely_homotopic(v, u));
  }
}
