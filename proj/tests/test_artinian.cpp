#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "reesag/artinian.hpp"
#include "reesag/parse.hpp"

using namespace reesag;

namespace {

RingPtr<Rational> ring3() { return make_rational_ring({"x", "y", "z"}); }

LocalIdeal<Rational> ideal_of(const RingPtr<Rational>& ring,
                              const std::vector<std::string>& gens) {
  std::vector<Polynomial<Rational>> polys;
  for (const auto& g : gens) polys.push_back(parse_polynomial<Rational>(g, ring));
  return LocalIdeal<Rational>(ring, polys);
}

// Independent oracle: membership in a monomial ideal is termwise divisibility.
bool monomial_member(const Monomial& m, const std::vector<Monomial>& gens) {
  for (const auto& g : gens)
    if (g.divides(m)) return true;
  return false;
}

// Independent oracle for complete intersections of pure powers: the standard
// monomials form a box of size prod(exps), and the socle is spanned over the
// ideal by the single corner monomial prod x_i^(e_i - 1).
struct BoxOracle {
  std::vector<uint32_t> exps;
  uint64_t length() const {
    uint64_t n = 1;
    for (auto e : exps) n *= e;
    return n;
  }
  Monomial corner() const {
    std::vector<std::uint32_t> e(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) e[i] = exps[i] - 1;
    return Monomial(e);
  }
};

}  // namespace

TEST_CASE("lengths of pure power ideals match box counting") {
  std::mt19937_64 rng(20240818);
  std::uniform_int_distribution<int> exp(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    auto ring = ring3();
    BoxOracle box{{static_cast<uint32_t>(exp(rng)), static_cast<uint32_t>(exp(rng)),
                   static_cast<uint32_t>(exp(rng))}};
    std::vector<Polynomial<Rational>> gens;
    for (std::size_t i = 0; i < 3; ++i)
      gens.push_back(Polynomial<Rational>::variable(ring, i).pow(box.exps[i]));
    LocalIdeal<Rational> q(ring, gens);
    CHECK(local_length(q) == box.length());
  }
}

TEST_CASE("frozen lengths") {
  auto ring = ring3();
  CHECK(local_length(ideal_of(ring, {"x", "y^2", "z^2"})) == 4);
  CHECK(local_length(ideal_of(ring, {"x", "y^2", "z^3"})) == 6);
  CHECK(local_length(ideal_of(ring, {"x^2", "y^2", "z^2"})) == 8);
  CHECK(local_length(maximal_ideal(ring)) == 1);
  CHECK(local_length(ideal_square(maximal_ideal(ring))) == 4);
}

TEST_CASE("membership agrees with the divisibility oracle on monomial ideals") {
  auto ring = ring3();
  auto q = ideal_of(ring, {"x", "y^2", "z^2"});
  std::vector<Monomial> gens = {Monomial({1, 0, 0}), Monomial({0, 2, 0}),
                                Monomial({0, 0, 2})};
  for (const auto& m : monomials_up_to(3, 5)) {
    auto f = Polynomial<Rational>::from_monomial(ring, m, Rational(1));
    CHECK(membership(f, q) == monomial_member(m, gens));
  }
}

TEST_CASE("socle of a pure power ideal is generated by the corner monomial") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> exp(1, 3);
  for (int trial = 0; trial < 15; ++trial) {
    auto ring = ring3();
    BoxOracle box{{static_cast<uint32_t>(exp(rng)), static_cast<uint32_t>(exp(rng)),
                   static_cast<uint32_t>(exp(rng))}};
    if (box.length() == 1) continue;  // the maximal ideal is not admissible
    std::vector<Polynomial<Rational>> gens;
    for (std::size_t i = 0; i < 3; ++i)
      gens.push_back(Polynomial<Rational>::variable(ring, i).pow(box.exps[i]));
    LocalIdeal<Rational> q(ring, gens);
    auto socle = socle_ideal(q);
    auto expected = ideal_sum(
        q, LocalIdeal<Rational>(ring, {Polynomial<Rational>::from_monomial(
                                          ring, box.corner(), Rational(1))}));
    CHECK(ideal_equal(socle, expected));
    CHECK(local_length(socle) == box.length() - 1);
  }
}

TEST_CASE("frozen socle computations") {
  auto ring = ring3();
  auto s1 = socle_ideal(ideal_of(ring, {"x", "y^2", "z^2"}));
  CHECK(ideal_equal(s1, ideal_of(ring, {"x", "y^2", "y*z", "z^2"})));
  CHECK(membership(parse_polynomial<Rational>("y*z", ring), s1));

  auto s2 = socle_ideal(ideal_of(ring, {"x", "y^2", "z^3"}));
  CHECK(ideal_equal(s2, ideal_of(ring, {"x", "y^2", "y*z^2", "z^3"})));

  auto s3 = socle_ideal(ideal_of(ring, {"x", "y", "z^2"}));
  CHECK(ideal_equal(s3, maximal_ideal(ring)));
}

TEST_CASE("colon matches the socle when the divisor is the maximal ideal") {
  auto ring = ring3();
  auto q = ideal_of(ring, {"x", "y^2", "z^2"});
  auto c = colon(q, maximal_ideal(ring));
  CHECK(ideal_equal(c, socle_ideal(q)));
  // Q : (Q : m) recovers m for these instances
  auto back = colon(q, c);
  CHECK(ideal_equal(back, maximal_ideal(ring)));
  // colon of an ideal by itself contains a unit
  CHECK(colon(q, q).contains_unit_generator());
}

TEST_CASE("minimal generator counts") {
  auto ring = ring3();
  CHECK(ideal_mu(maximal_ideal(ring)) == 3);
  CHECK(ideal_mu(ideal_square(maximal_ideal(ring))) == 6);
  CHECK(ideal_mu(ideal_of(ring, {"x", "y^2", "y*z", "z^2"})) == 4);
  CHECK(ideal_mu(ideal_of(ring, {"x", "y^2", "z^2"})) == 3);
  // redundant generators do not inflate mu
  CHECK(ideal_mu(ideal_of(ring, {"x", "y^2", "z^2", "x + y^2", "x*z"})) == 3);
}

TEST_CASE("relative generator counts") {
  auto ring = ring3();
  auto m = maximal_ideal(ring);
  CHECK(mu_subquotient(m, ideal_sum(ideal_of(ring, {"x"}), ideal_square(m))) == 2);
  CHECK(mu_subquotient(m, ideal_square(m)) == 3);
  // inner ideal must sit inside the outer one
  CHECK_THROWS_AS(mu_subquotient(ideal_of(ring, {"x", "y^2", "z^2"}), m),
                  HypothesisError);
}

TEST_CASE("linear rank reads the number of independent linear forms") {
  auto ring = ring3();
  CHECK(linear_rank(ideal_of(ring, {"x", "y^2", "z^2"})) == 1);
  CHECK(linear_rank(ideal_of(ring, {"x^2", "y^2", "z^2"})) == 0);
  CHECK(linear_rank(maximal_ideal(ring)) == 3);
  // leading terms of mixed generators still count
  CHECK(linear_rank(ideal_of(ring, {"x + y^2", "y + z^3", "z^2"})) == 2);
  CHECK(linear_rank(ideal_of(ring, {"x + y", "x - y", "z^2"})) == 2);
}

TEST_CASE("truncation level stabilizes") {
  auto ring = ring3();
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x", "y^2", "z^2"}, {"x^2", "y^2", "z^2"}, {"x", "y^2", "z^3"},
           {"x + y^2", "y + z^3", "z^2"}}) {
    auto q = ideal_of(ring, gens);
    auto stable = stabilized_quotient(q);
    auto later = quotient_at_level(q, stable.level() + 3);
    CHECK(stable.length() == later.length());
  }
}

TEST_CASE("generator permutation and unit scaling are invisible") {
  auto ring = ring3();
  auto base = ideal_of(ring, {"x", "y^2", "z^2"});
  auto scrambled = ideal_of(ring, {"z^2", "x", "y^2"});
  std::vector<Polynomial<Rational>> scaled_gens;
  int sign = 1;
  for (const auto& g : base.generators()) {
    scaled_gens.push_back(g.scaled(Rational(sign * 7)));
    sign = -sign;
  }
  LocalIdeal<Rational> scaled(ring, scaled_gens);
  for (const auto* other : {&scrambled, &scaled}) {
    CHECK(local_length(*other) == local_length(base));
    CHECK(ideal_mu(*other) == ideal_mu(base));
    CHECK(ideal_equal(socle_ideal(*other), socle_ideal(base)));
    CHECK(linear_rank(*other) == linear_rank(base));
  }
}

TEST_CASE("prime field engine agrees with the rational engine") {
  auto qring = ring3();
  auto pring = make_prime_ring({"x", "y", "z"}, 32003);
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x", "y^2", "z^2"}, {"x^2", "y^2", "z^3"}, {"x + y^2", "y + z^3", "z^2"}}) {
    std::vector<Polynomial<GFp>> pgens;
    for (const auto& g : gens) pgens.push_back(parse_polynomial<GFp>(g, pring));
    LocalIdeal<GFp> qp(pring, pgens);
    CHECK(local_length(qp) == local_length(ideal_of(qring, gens)));
    CHECK(ideal_mu(qp) == ideal_mu(ideal_of(qring, gens)));
  }
}

TEST_CASE("rejects ideals that are not primary for the maximal ideal") {
  auto ring = ring3();
  CHECK_THROWS_AS(stabilized_quotient(ideal_of(ring, {"x", "y"}), 10),
                  HypothesisError);
  CHECK_THROWS_AS(local_length(ideal_of(ring, {"x*y", "z"}), 10),
                  HypothesisError);
  CHECK_THROWS_WITH(stabilized_quotient(ideal_of(ring, {"x", "y"}), 10),
                    Catch::Matchers::ContainsSubstring("nmax"));
  // primary but outside the truncation cap: same refusal, never a wrong answer
  CHECK_THROWS_AS(local_length(ideal_of(ring, {"x", "y", "z^45"}), 10),
                  HypothesisError);
  CHECK_THROWS_AS(stabilized_quotient(LocalIdeal<Rational>(ring, {}), 10),
                  HypothesisError);
  CHECK_THROWS_AS(
      stabilized_quotient(ideal_of(ring, {"1 + x"}), 10), HypothesisError);
}

TEST_CASE("socle of the maximal ideal is rejected") {
  auto ring = ring3();
  CHECK_THROWS_AS(socle_ideal(maximal_ideal(ring)), HypothesisError);
  CHECK_THROWS_AS(socle_ideal(ideal_of(ring, {"x", "y", "z", "x + y"})),
                  HypothesisError);
}

TEST_CASE("normal forms reduce exactly on stabilized quotients") {
  auto ring = ring3();
  auto q = ideal_of(ring, {"x", "y^2", "z^2"});
  auto art = stabilized_quotient(q);
  auto f = parse_polynomial<Rational>("3*y*z + x*z + y^2 - 2", ring);
  auto coords = art.normal_form(f);
  const auto& basis = art.standard_monomials();
  REQUIRE(coords.size() == basis.size());
  auto nf = Polynomial<Rational>::zero(ring);
  for (std::size_t s = 0; s < coords.size(); ++s)
    if (coords[s] != 0) nf.add_term(basis[s], coords[s]);
  CHECK(nf == parse_polynomial<Rational>("3*y*z - 2", ring));
  CHECK(art.contains(parse_polynomial<Rational>("x*z", ring)));
  CHECK(art.contains(parse_polynomial<Rational>("y^2 + x", ring)));
  CHECK(!art.contains(parse_polynomial<Rational>("y*z", ring)));
}
