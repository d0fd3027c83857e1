#include <doctest.h>

#include "psicalc/identities.hpp"
#include "psicalc/kgroup.hpp"

using namespace psicalc;

TEST_CASE("catalog names and unknown identity") {
  CHECK(identity_catalog().size() == 7);
  CHECK_THROWS_AS(verify_identity("nope", 3), std::domain_error);
}

TEST_CASE("binom") {
  const IdentityReport rep = verify_identity("binom", 6);
  CHECK(rep.pass);
  CHECK(rep.instances == 6);
}

TEST_CASE("restriction off one branch, explicit instance") {
  // r=3, h=1, s=3: P = IC({1};0) + IC({2};0); the restriction class gains
  // exactly the level-2 pieces through branch 3.
  const int r = 3;
  KClass P(r);
  P.add(ICClass{Stratum::from_members({1}, r), 0});
  P.add(ICClass{Stratum::from_members({2}, r), 0});
  KClass expect = P;
  expect.add(ICClass{Stratum::from_members({1, 3}, r), 1});
  expect.add(ICClass{Stratum::from_members({2, 3}, r), 1});
  CHECK(restrict_off_branch(P, 3) == expect);
}

TEST_CASE("full catalog passes for r <= 6") {
  for (int r = 1; r <= 6; ++r) {
    for (const IdentityReport& rep : verify_all_identities(r)) {
      INFO(rep.name, " at r=", r, " counterexample: ", rep.counterexample);
      CHECK(rep.pass);
    }
  }
}
