#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "reesag/eagon_northcott.hpp"
#include "reesag/parse.hpp"

using namespace reesag;

namespace {

std::vector<Polynomial<Rational>> params_of(const RingPtr<Rational>& ring,
                                            const std::vector<std::string>& ps) {
  std::vector<Polynomial<Rational>> out;
  for (const auto& p : ps) out.push_back(parse_polynomial<Rational>(p, ring));
  return out;
}

// random elements of m over a 3-variable ring: one or two terms, degree 1..3
std::vector<Polynomial<Rational>> random_params(const RingPtr<Rational>& ring,
                                                std::size_t r,
                                                std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(1, 4);
  std::uniform_int_distribution<int> nterms(1, 2);
  std::uniform_int_distribution<std::uint32_t> expo(0, 2);
  std::vector<Polynomial<Rational>> out;
  while (out.size() < r) {
    Polynomial<Rational> f = Polynomial<Rational>::zero(ring);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
      Monomial m({expo(rng), expo(rng), expo(rng)});
      if (m.total_degree() == 0) m = Monomial({1, 0, 0});
      f.add_term(m, Rational(coeff(rng)));
    }
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

TEST_CASE("r = 2 complex is the single Koszul relation") {
  auto ring = make_rational_ring({"x", "y"});
  auto cx = build_en_complex(params_of(ring, {"x", "y"}));
  REQUIRE(cx.modules.size() == 2);
  CHECK(cx.modules[0].rank() == 1);
  CHECK(cx.modules[1].rank() == 1);
  REQUIRE(cx.maps.size() == 1);
  auto expected = parse_polynomial<Rational>("X1*y - X2*x", cx.ring_s);
  CHECK(cx.maps[0].entries[0][0] == expected);
  auto report = verify_complex(cx, params_of(ring, {"x", "y"}));
  CHECK(report.all_pass());
}

TEST_CASE("pinned transposed presentation matrix for r = 3") {
  auto ring = make_rational_ring({"x", "y", "z"});
  auto a = params_of(ring, {"x", "y", "z"});
  auto cx = build_en_complex(a);
  REQUIRE(cx.tM.entries.size() == 2);
  REQUIRE(cx.tM.entries[0].size() == 3);
  const auto s = cx.ring_s;
  CHECK(cx.tM.entries[0][0] == parse_polynomial<Rational>("x", s));
  CHECK(cx.tM.entries[0][1] == parse_polynomial<Rational>("-y", s));
  CHECK(cx.tM.entries[0][2] == parse_polynomial<Rational>("z", s));
  CHECK(cx.tM.entries[1][0] == parse_polynomial<Rational>("X1", s));
  CHECK(cx.tM.entries[1][1] == parse_polynomial<Rational>("-X2", s));
  CHECK(cx.tM.entries[1][2] == parse_polynomial<Rational>("X3", s));
  CHECK(cx.tM.target.degrees == std::vector<int>{2, 1});
  CHECK(cx.tM.source.degrees == std::vector<int>{2, 2, 2});
}

TEST_CASE("pinned transposed presentation matrix for r = 4") {
  auto ring = make_rational_ring({"x", "y", "z", "w"});
  auto a = params_of(ring, {"x", "y", "z", "w"});
  auto cx = build_en_complex(a);
  REQUIRE(cx.tM.entries.size() == 3);
  REQUIRE(cx.tM.entries[0].size() == 8);
  const auto s = cx.ring_s;
  const std::vector<std::vector<std::string>> want = {
      {"x", "-y", "z", "-w", "0", "0", "0", "0"},
      {"X1", "-X2", "X3", "-X4", "x", "-y", "z", "-w"},
      {"0", "0", "0", "0", "X1", "-X2", "X3", "-X4"}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      CHECK(cx.tM.entries[i][j] == parse_polynomial<Rational>(want[i][j], s));
  CHECK(cx.tM.target.degrees == std::vector<int>{3, 2, 1});
}

TEST_CASE("structural checks pass on randomized parameters") {
  std::mt19937_64 rng(20250817);
  auto ring = make_rational_ring({"x", "y", "z"});
  for (std::size_t r = 2; r <= 6; ++r) {
    auto a = random_params(ring, r, rng);
    auto cx = build_en_complex(a, static_cast<int>(r));
    auto report = verify_complex(cx, a);
    INFO("r = " << r);
    for (const auto& c : report.checks) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.pass);
    }
    CHECK(report.all_pass());
    // dual variables X_j specialize to a_j, killing the first differential
    std::vector<Polynomial<Rational>> images;
    for (std::size_t v = 0; v < 3; ++v)
      images.push_back(Polynomial<Rational>::variable(cx.ring_s, v));
    for (const auto& aj : a) {
      Polynomial<Rational> lift = Polynomial<Rational>::zero(cx.ring_s);
      for (const auto& [m, c] : aj.terms()) {
        std::vector<std::uint32_t> wide(cx.ring_s->dimension(), 0);
        for (std::size_t v = 0; v < 3; ++v) wide[v] = m.exponent(v);
        lift.add_term(Monomial(wide), c);
      }
      images.push_back(std::move(lift));
    }
    for (const auto& e : cx.maps[0].entries[0])
      CHECK(e.substitute(images).is_zero());
  }
}

TEST_CASE("module ranks follow the binomial formula") {
  auto ring = make_rational_ring({"x", "y", "z"});
  auto a = params_of(ring, {"x", "y^2", "z^3", "x*y", "y*z"});
  auto cx = build_en_complex(a);
  REQUIRE(cx.modules.size() == 5);
  CHECK(cx.modules[0].rank() == 1);
  CHECK(cx.modules[1].rank() == 10);  // binom(5,2) * 1
  CHECK(cx.modules[2].rank() == 20);  // binom(5,3) * 2
  CHECK(cx.modules[3].rank() == 15);  // binom(5,4) * 3
  CHECK(cx.modules[4].rank() == 4);   // binom(5,5) * 4
}

TEST_CASE("canonical presentation has top-down generator degrees") {
  auto ring = make_rational_ring({"x", "y", "z"});
  for (std::size_t r = 3; r <= 6; ++r) {
    std::vector<std::string> names = {"x",   "y^2", "z^2",
                                      "x*y", "y*z", "x*z"};
    auto a = params_of(ring, std::vector<std::string>(names.begin(),
                                                      names.begin() + r));
    auto pres = canonical_presentation(a);
    CHECK(pres.type == r - 1);
    std::vector<int> want;
    for (int k = static_cast<int>(r) - 1; k >= 1; --k) want.push_back(k);
    CHECK(pres.generator_degrees == want);
  }
  CHECK_THROWS_AS(canonical_presentation(params_of(ring, {"x", "y"})),
                  HypothesisError);
}

TEST_CASE("input validation") {
  auto ring = make_rational_ring({"x", "y", "z"});
  CHECK_THROWS_AS(build_en_complex(params_of(ring, {"x"})), HypothesisError);
  CHECK_THROWS_AS(build_en_complex(params_of(ring, {"x", "1 + y"})),
                  HypothesisError);
  CHECK_THROWS_AS(build_en_complex(params_of(ring, {"x", "0"})),
                  HypothesisError);
  CHECK_THROWS_AS(build_en_complex(params_of(ring, {"x", "y", "z"}), 4),
                  InputError);
  // dual variable names must be free
  auto clash = make_rational_ring({"x", "X1"});
  CHECK_THROWS_AS(build_en_complex(params_of(clash, {"x", "X1"})), InputError);
}
