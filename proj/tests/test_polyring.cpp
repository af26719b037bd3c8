#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "reesag/parse.hpp"
#include "reesag/polynomial.hpp"

using namespace reesag;

namespace {

Polynomial<Rational> random_poly(const RingPtr<Rational>& ring,
                                 std::mt19937_64& rng, int max_terms = 4,
                                 int max_deg = 3) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expo(0, max_deg);
  Polynomial<Rational> f = Polynomial<Rational>::zero(ring);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(ring->dimension());
    int budget = max_deg;
    for (auto& x : e) {
      int v = std::min(budget, expo(rng));
      x = static_cast<std::uint32_t>(v);
      budget -= v;
    }
    f.add_term(Monomial(e), Rational(coeff(rng)));
  }
  return f;
}

// Independent determinant: sum over permutations with explicit sign from the
// inversion count.  Only used as an oracle against det_exact.
Polynomial<Rational> det_permutation_expansion(
    const PolyMatrix<Rational>& m, const RingPtr<Rational>& ring) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial<Rational> acc = Polynomial<Rational>::zero(ring);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial<Rational> prod =
        Polynomial<Rational>::constant(ring, Integer(1));
    for (std::size_t i = 0; i < n; ++i) prod *= m[i][perm[i]];
    if (inversions % 2 == 0)
      acc += prod;
    else
      acc -= prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace

TEST_CASE("graded lex order ranks degree first, then earlier variables") {
  auto ring = make_rational_ring({"x", "y", "z"});
  auto m = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    return Monomial(std::vector<std::uint32_t>{a, b, c});
  };
  CHECK(grlex_compare(m(0, 2, 0), m(1, 0, 0)) > 0);  // y^2 > x
  CHECK(grlex_compare(m(2, 0, 0), m(1, 1, 0)) > 0);  // x^2 > xy
  CHECK(grlex_compare(m(1, 1, 0), m(1, 0, 1)) > 0);  // xy > xz
  CHECK(grlex_compare(m(1, 0, 1), m(0, 2, 0)) > 0);  // xz > y^2
  CHECK(grlex_compare(m(0, 1, 1), m(0, 0, 2)) > 0);  // yz > z^2
  CHECK(grlex_compare(m(1, 2, 3), m(1, 2, 3)) == 0);
}

TEST_CASE("printing uses descending terms with absorbed signs") {
  auto ring = make_rational_ring({"x", "y", "z"});
  auto f = parse_polynomial<Rational>("x - y^2 + 2*x*z - 1", ring);
  CHECK(f.str() == "2*x*z - y^2 + x - 1");
  CHECK(parse_polynomial<Rational>("0", ring).str() == "0");
  CHECK(parse_polynomial<Rational>("y*z - z*y", ring).is_zero());
  CHECK(parse_polynomial<Rational>("-x", ring).str() == "-x");
  CHECK(parse_polynomial<Rational>("x^1", ring).str() == "x");
}

TEST_CASE("parser enforces explicit products and integer exponents") {
  auto ring = make_rational_ring({"x", "y", "z"});
  CHECK_THROWS_AS(parse_polynomial<Rational>("x y", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial<Rational>("2x", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial<Rational>("x^", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial<Rational>("x^y", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial<Rational>("w + x", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial<Rational>("(x + y", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial<Rational>("", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial<Rational>("x + ", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial<Rational>("x**y", ring), ParseError);
}

TEST_CASE("exponentiation binds tightest and minus folds into coefficients") {
  auto ring = make_rational_ring({"x", "y"});
  CHECK(parse_polynomial<Rational>("-x^2", ring).str() == "-x^2");
  CHECK(parse_polynomial<Rational>("2*x^3", ring) ==
        parse_polynomial<Rational>("2*(x^3)", ring));
  CHECK(parse_polynomial<Rational>("x*(1 - x)", ring).str() == "-x^2 + x");
  CHECK(parse_polynomial<Rational>("2^3", ring).str() == "8");
  CHECK(parse_polynomial<Rational>("(x + y)^2", ring).str() ==
        "x^2 + 2*x*y + y^2");
}

TEST_CASE("parse-print round trip is the identity on printed forms") {
  auto ring = make_rational_ring({"x", "y", "z"});
  std::mt19937_64 rng(20240817);
  for (int it = 0; it < 200; ++it) {
    auto f = random_poly(ring, rng);
    auto printed = f.str();
    CHECK(parse_polynomial<Rational>(printed, ring) == f);
  }
}

TEST_CASE("ring axioms hold on random polynomials") {
  auto ring = make_rational_ring({"x", "y", "z"});
  std::mt19937_64 rng(987654321);
  for (int it = 0; it < 100; ++it) {
    auto f = random_poly(ring, rng);
    auto g = random_poly(ring, rng);
    auto h = random_poly(ring, rng);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK((f - f).is_zero());
    CHECK(f * Polynomial<Rational>::constant(ring, Integer(1)) == f);
  }
}

TEST_CASE("graded multiplication adds degrees") {
  auto ring = make_rational_ring({"x", "y", "z"});
  std::mt19937_64 rng(424242);
  for (int it = 0; it < 100; ++it) {
    auto f = random_poly(ring, rng);
    auto g = random_poly(ring, rng);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(*(f * g).total_degree() <= *f.total_degree() + *g.total_degree());
    CHECK(*(f * g).min_total_degree() >=
          *f.min_total_degree() + *g.min_total_degree());
  }
}

TEST_CASE("determinant agrees with the permutation expansion") {
  auto ring = make_rational_ring({"x", "y", "z"});
  std::mt19937_64 rng(1357911);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int it = 0; it < 10; ++it) {
      PolyMatrix<Rational> m(n, std::vector<Polynomial<Rational>>(
                                    n, Polynomial<Rational>::zero(ring)));
      for (auto& row : m)
        for (auto& e : row) e = random_poly(ring, rng, 2, 2);
      CHECK(det_exact(m, ring) == det_permutation_expansion(m, ring));
    }
  }
}

TEST_CASE("determinant of known matrices") {
  auto ring = make_rational_ring({"x", "y", "z"});
  auto P = [&](const char* s) { return parse_polynomial<Rational>(s, ring); };
  PolyMatrix<Rational> m{{P("y"), P("z^2")}, {P("0"), P("z")}};
  CHECK(det_exact(m, ring) == P("y*z"));
  PolyMatrix<Rational> id3{{P("1"), P("0"), P("0")},
                           {P("0"), P("1"), P("0")},
                           {P("0"), P("0"), P("1")}};
  CHECK(det_exact(id3, ring) == P("1"));
  PolyMatrix<Rational> bad{{P("x"), P("y")}};
  CHECK_THROWS_AS(det_exact(bad, ring), InputError);
}

TEST_CASE("substitution embeds into extended rings") {
  auto small = make_rational_ring({"x", "y"});
  auto big = make_rational_ring({"x", "y", "t"});
  auto f = parse_polynomial<Rational>("x^2 - 3*y", small);
  std::vector<Polynomial<Rational>> images = {
      Polynomial<Rational>::variable(big, 0),
      Polynomial<Rational>::variable(big, 1)};
  auto g = f.substitute(images);
  CHECK(g == parse_polynomial<Rational>("x^2 - 3*y", big));
}

TEST_CASE("prime field coefficients reduce and round trip") {
  auto ring = make_prime_ring({"x", "y"}, 3);
  CHECK(parse_polynomial<GFp>("3*x", ring).is_zero());
  CHECK(parse_polynomial<GFp>("4*x", ring).str() == "x");
  CHECK(parse_polynomial<GFp>("x - y", ring).str() == "x + 2*y");

  auto ring31 = make_prime_ring({"x", "y"}, 31);
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> coeff(-40, 40);
  for (int it = 0; it < 50; ++it) {
    Polynomial<GFp> f = Polynomial<GFp>::zero(ring31);
    for (int t = 0; t < 4; ++t) {
      std::vector<std::uint32_t> e = {
          static_cast<std::uint32_t>(rng() % 3),
          static_cast<std::uint32_t>(rng() % 3)};
      f.add_term(Monomial(e), GFp(coeff(rng), 31));
    }
    CHECK(parse_polynomial<GFp>(f.str(), ring31) == f);
  }
  CHECK_THROWS_AS(make_prime_ring({"x"}, 6), InputError);
  CHECK_THROWS_AS(make_prime_ring({"x"}, 1), InputError);
}

TEST_CASE("primitive part clears content and fixes the leading sign") {
  auto ring = make_rational_ring({"x", "y"});
  auto f = parse_polynomial<Rational>("2*x + 4*y", ring);
  CHECK(primitive_part(f).str() == "x + 2*y");
  auto g = parse_polynomial<Rational>("-2*x - 4*y", ring);
  CHECK(primitive_part(g).str() == "x + 2*y");
  CHECK(primitive_part(Polynomial<Rational>::zero(ring)).is_zero());
}

TEST_CASE("ring construction validates names") {
  CHECK_THROWS_AS(make_rational_ring({}), InputError);
  CHECK_THROWS_AS(make_rational_ring({"x", "x"}), InputError);
  CHECK_THROWS_AS(make_rational_ring({"2bad"}), InputError);
  CHECK_THROWS_AS(make_rational_ring({"a b"}), InputError);
}
