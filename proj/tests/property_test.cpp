#include <random>

#include "chordbracket/bracket.hpp"
#include "chordbracket/topology.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chordbracket;

// Smaller-sample versions of the identities; the acceptance suite runs the
// full-size sweep.
TEST_SUITE("properties") {

TEST_CASE("bracket identities on random diagrams") {
  std::mt19937_64 rng(424242);
  const LaurentPoly pos_kink = LaurentPoly::monomial(-1, 3);
  const LaurentPoly neg_kink = LaurentPoly::monomial(-1, -3);

  for (int d = 1; d <= 6; ++d) {
    CAPTURE(d);
    for (int trial = 0; trial < 60; ++trial) {
      const auto c = oracle::random_diagram(rng, d);
      const auto e = oracle::random_diagram(rng, 1 + trial % 4);
      CAPTURE(c.to_string());
      const auto bc = bracket(c);
      const auto lc = kauffman_jones(c);

      CHECK(bracket(stack(c, e)) == bc * bracket(e));
      CHECK(kauffman_jones(stack(c, e)) == lc * kauffman_jones(e));
      CHECK(bracket(reverse(c)) == bc.mirror());

      for (int ell = 0; ell <= 2 * d; ++ell) {
        const auto plus = insert_monogon(c, ell, true);
        const auto minus = insert_monogon(c, ell, false);
        CHECK(bracket(plus) == pos_kink * bc);
        CHECK(bracket(minus) == neg_kink * bc);
        CHECK(kauffman_jones(plus) == lc);
        CHECK(kauffman_jones(minus) == lc);
      }
      CHECK(bracket(insert_monogon_wrap(c, true)) == pos_kink * bc);
      CHECK(bracket(insert_monogon_wrap(c, false)) == neg_kink * bc);

      for (const auto &[exp, coeff] : bc.terms())
        CHECK((exp - d) % 2 == 0);

      const auto span = bc.span();
      REQUIRE(span.has_value());
      const auto mu = mu_extremes(c);
      CHECK(*span <= 4 * d);
      CHECK(mu.sum() <= d + 2);
      CHECK(*span <= 2 * d + 2 * (mu.sum() - 2));
      if (*span == 4 * d) {
        CHECK(mu.sum() == d + 2);
        CHECK(c.parity_condition());
      }
      const auto inv = neighborhood_invariants(c);
      CHECK(inv.orientable == c.parity_condition());
      CHECK(inv.boundary_components == mu.sum() - 1);
      CHECK(inv.euler_characteristic == 1 - d);
    }
  }
}

} // TEST_SUITE
