#include "doctest.h"

#include <map>

#include "goeritz/enumeration.hpp"
#include "goeritz/star_map.hpp"
#include "goeritz/sweeps.hpp"
#include "goeritz/synthesis.hpp"

using namespace goeritz;

namespace {

Mat2 rows2(std::initializer_list<long> v) {
  Mat2 m;
  size_t i = 0;
  for (long x : v) m.e[i++] = x;
  return m;
}

const SpElement gamma_params{1, 0, 1, 0, 0, -1, 2};
const SpElement sigma5_params{1, 0, 0, -1, 0, -1, 5};

}  // namespace

TEST_CASE("a_block and d_block") {
  CHECK(a_block(gamma_params) == rows2({1, 1, 0, -1}));
  CHECK(a_block(SpElement::identity(5)) == Mat2::identity());
  CHECK(a_block(SpElement{1, 1, 1, 1, 0, 1, 5}) == rows2({6, 1, 5, 1}));

  CHECK(d_block(gamma_params) == rows2({0, 0, 0, 0}));
  CHECK(d_block(sigma5_params) == rows2({0, 1, -1, 0}));
  CHECK(d_block(SpElement::identity(7)) == rows2({0, 0, 0, 0}));
}

TEST_CASE("assemble matches the generator matrices") {
  CHECK(assemble(gamma_params) == generator_matrix(Gen::Gamma, 2));
  CHECK(assemble(SpElement::identity(5)) == Mat4::identity());
  CHECK(assemble(sigma5_params) == generator_matrix(Gen::Sigma, 5));
  // delta_* sits in S_3 with the eps = -1 convention.
  CHECK(assemble(SpElement{1, -1, -1, 1, 0, 1, 3}) == generator_matrix(Gen::Delta, 3));
  CHECK_THROWS_AS(assemble(SpElement{1, 1, 0, 0, 0, 1, 5}), Error);
}

TEST_CASE("decompose") {
  CHECK(decompose_sp(star(parse_word("g", 2)), 2) == gamma_params);
  CHECK(decompose_sp(Mat4::identity(), 5) == SpElement::identity(5));
  Mat4 bad = Mat4::identity();
  bad.at(2, 0) = 1;
  CHECK_FALSE(try_decompose_sp(bad, 5).has_value());
  CHECK_THROWS_AS(decompose_sp(bad, 5), Error);
  // Wrong D block is rejected even when the corner blocks fit.
  Mat4 tampered = assemble(SpElement{1, 0, 0, 1, 0, 1, 5});
  tampered.at(0, 3) += 1;
  CHECK_FALSE(try_decompose_sp(tampered, 5).has_value());
}

TEST_CASE("p = 2 sign normalization") {
  // The parameterization is 2:1 for p = 2: both tuples assemble equally.
  SpElement e{1, 0, 1, 1, 1, 1, 2};  // A = [1 1; 2 3]
  REQUIRE(e.determinant_condition_holds());
  SpElement other{-1, -1, -1, -1, -2, 1, 2};
  REQUIRE(other.determinant_condition_holds());
  CHECK(other.canonicalize() == e);
  CHECK(assemble(e) == assemble(other));
  CHECK(decompose_sp(assemble(e), 2) == e);
  CHECK(decompose_sp(assemble(e), 2).omega == 1);
}

TEST_CASE("compose agrees with matrix product") {
  SpElement beta_params = decompose_sp(generator_matrix(Gen::Beta, 2), 2);
  SpElement bg = compose_sp(beta_params, gamma_params);
  CHECK(a_block(bg) == rows2({1, 1, 0, 1}));
  CHECK(bg == SpElement{1, 0, 1, 0, 0, 1, 2});
  CHECK(compose_sp(bg, SpElement::identity(2)) == bg);
  CHECK(compose_sp(gamma_params, gamma_params) == SpElement::identity(2));
  CHECK_THROWS_AS(compose_sp(SpElement::identity(2), SpElement::identity(3)), Error);
}

TEST_CASE("invert_sp") {
  for (unsigned long long i = 0; i < 100; ++i) {
    std::mt19937_64 rng = sample_rng(17, i);
    for (long p : {2L, 3L, 5L}) {
      SpElement e = decompose_sp(star(random_word(p, 8, rng)), p);
      CHECK(compose_sp(e, invert_sp(e)) == SpElement::identity(p));
      CHECK(assemble(invert_sp(e)) == assemble(e).inverse());
    }
  }
}

TEST_CASE("membership predicates") {
  CHECK(in_A_p(rows2({6, 1, 5, 1}), 5));
  CHECK_FALSE(in_A_p(rows2({2, 0, 0, 2}), 5));
  CHECK(in_A_p(Mat2::identity(), 5));
  CHECK(in_A_p(Mat2::identity(), 97));
  CHECK(in_A_p(-rows2({6, 1, 5, 1}), 5));  // global sign absorbed

  CHECK(in_B_p(SpElement{1, 1, 1, 1, 0, 1, 5}));
  SpElement witness{1, 2, 7, 5, 3, 1, 5};  // A = [11 7; 25 16]
  REQUIRE(witness.determinant_condition_holds());
  REQUIRE(a_block(witness) == rows2({11, 7, 25, 16}));
  CHECK_FALSE(in_B_p(witness));
  CHECK(in_B_p(SpElement::identity(5)));
}

TEST_CASE("kappa") {
  CHECK(kappa(SpElement::identity(3)) == 2);
  CHECK(kappa(SpElement{1, 1, 1, 1, 0, 1, 5}) == 7);
  CHECK(kappa(SpElement{1, 2, 7, 5, 3, 1, 5}) == 27);
}

TEST_CASE("synthesize_word examples") {
  // One descent step from [[6,1],[5,1]]: T(-1) then the kappa = 2 base.
  SpElement e{1, 1, 1, 1, 0, 1, 5};
  GroupWord w = synthesize_word(e);
  CHECK(w == parse_word("b g b s", 5));
  CHECK(star(w) == assemble(e));

  for (long ell : {-3L, 1L, 4L}) {
    SpElement upper{1, 0, ell, 0, 0, 1, 7};
    GroupWord expect(7);
    for (long i = 0; i < std::abs(ell); ++i) {
      if (ell > 0) {
        expect.append(Gen::Beta, 1);
        expect.append(Gen::Gamma, 1);
      } else {
        expect.append(Gen::Gamma, -1);
        expect.append(Gen::Beta, -1);
      }
    }
    CHECK(synthesize_word(upper) == expect);
  }
  CHECK(synthesize_word(SpElement::identity(5)).empty());
  CHECK_THROWS_AS(synthesize_word(SpElement{1, 2, 7, 5, 3, 1, 5}), Error);
}

TEST_CASE("enumerate_image") {
  CHECK(enumerate_image(5, 1, 4).empty());
  auto e2 = enumerate_image(2, 2, 4);
  CHECK(std::find(e2.begin(), e2.end(), SpElement{1, 0, 0, 1, 0, 1, 2}) != e2.end());
  auto e5 = enumerate_image(5, 2, 4);
  for (const SpElement& e : e5) {
    CHECK(kappa(e) == 2);
    CHECK(e.omega == 1);
    CHECK(e.determinant_condition_holds());
    CHECK(in_B_p(e));
  }
  // Uniqueness and deterministic order.
  for (size_t i = 1; i < e5.size(); ++i) CHECK_FALSE(e5[i] == e5[i - 1]);
  CHECK(enumerate_image(5, 2, 4) == e5);
  // Mixed kappa = 2 patterns for p = 2 (l and m both nonzero) are present.
  auto mixed = enumerate_image(2, 2, 4);
  bool has_mixed = false;
  for (const SpElement& e : mixed)
    has_mixed = has_mixed || (e.ell != 0 && e.m != 0);
  CHECK(has_mixed);
}

TEST_CASE("synthesis covers the enumerated image exactly") {
  for (long p : {2L, 3L, 4L, 5L}) {
    auto elems = enumerate_image(p, 6, 6);
    REQUIRE(!elems.empty());
    std::map<std::string, int> seen;
    for (const SpElement& e : elems) {
      GroupWord w = synthesize_word(e);
      CHECK(star(w) == assemble(e));
      ++seen[a_block(e).to_text() + "|" + std::to_string(e.omega)];
    }
    // q is injective on the canonical parameterization.
    for (const auto& [key, count] : seen) CHECK(count == 1);
  }
}

TEST_CASE("every star image decomposes and round-trips") {
  for (long p : {2L, 3L, 5L, 7L}) {
    for (unsigned long long i = 0; i < 200; ++i) {
      std::mt19937_64 rng = sample_rng(23, i);
      GroupWord w = random_word(p, 10, rng);
      Mat4 m = star(w);
      SpElement e = decompose_sp(m, p);
      CHECK(assemble(e) == m);
      CHECK(in_B_p(e));
      CHECK(decompose_sp(assemble(e), p) == e);
    }
  }
}
