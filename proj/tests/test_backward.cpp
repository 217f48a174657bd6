#include <doctest.h>

#include <wqo/backward.hpp>
#include <wqo/error.hpp>

#include "support/oracle.hpp"

using namespace wqo;

namespace {
  PetriNet net_of (const char* text) { return std::get<PetriNet> (parse_model (text).source); }

  const char* const km2 =
    "petri places=2\n"
    "trans t1 pre=(1,0) post=(0,2)\n"
    "trans t2 pre=(0,1) post=(1,0)\n";

  const char* const swap =
    "petri places=2\n"
    "trans l pre=(1,0) post=(0,1)\n"
    "trans r pre=(0,1) post=(1,0)\n";

  Marking random_marking (oracle::Rng& rng, std::size_t k, std::uint64_t hi) {
    Marking m (k);
    for (auto& x : m)
      x = oracle::uniform (rng, 0, hi);
    return m;
  }

  bool leq (const Marking& a, const Marking& b) {
    for (std::size_t p = 0; p < a.size (); ++p)
      if (a[p] > b[p])
        return false;
    return true;
  }
}

TEST_SUITE ("backward") {

  TEST_CASE ("UpBasis") {
    UpBasis b ({{2, 1}, {1, 2}, {2, 2}});
    CHECK (b.elements () == std::vector<Marking> {{1, 2}, {2, 1}});
    CHECK (b.contains ({3, 1}));
    CHECK_FALSE (b.contains ({1, 1}));
    CHECK_FALSE (b.insert ({5, 5}));
    CHECK (b.insert ({0, 3}));
    CHECK (b.insert ({0, 0}));
    CHECK (b.elements () == std::vector<Marking> {{0, 0}});
  }

  TEST_CASE ("pre_basis examples") {
    PetriNet net = net_of ("petri places=2\ntrans t pre=(1,0) post=(0,1)\n");
    CHECK (pre_basis (net, UpBasis ({{0, 1}})).elements () == std::vector<Marking> {{0, 1}, {1, 0}});
    PetriNet inc = net_of ("petri places=1\ntrans t pre=(0) post=(1)\n");
    CHECK (pre_basis (inc, UpBasis (std::vector<Marking> {{5}})).elements () == std::vector<Marking> {{4}});
    PetriNet none;
    none.places = 2;
    CHECK (pre_basis (none, UpBasis ({{2, 2}})).elements () == std::vector<Marking> {{2, 2}});
    CHECK_THROWS_AS (pre_basis (inc, UpBasis ({{1, 1}})), ShapeError);
  }

  TEST_CASE ("pre_basis matches one backward step on a box") {
    oracle::Rng rng (61);
    for (int n = 0; n < 40; ++n) {
      const std::size_t k = oracle::uniform (rng, 1, 2);
      PetriNet net = oracle::random_net (rng, k, 3, 2);
      UpBasis target ({random_marking (rng, k, 3)});
      UpBasis pre = pre_basis (net, target);
      Marking m (k, 0);
      for (;;) {
        bool expect = target.contains (m);
        for (std::size_t t = 0; t < net.transitions.size (); ++t)
          if (auto s = petri_step (net, m, t))
            expect = expect or target.contains (*s);
        CHECK (pre.contains (m) == expect);
        std::size_t p = 0;
        while (p < k and m[p] == 6)
          m[p++] = 0;
        if (p == k)
          break;
        ++m[p];
      }
    }
  }

  TEST_CASE ("pre_star and coverable_backward examples") {
    PetriNet km = net_of (km2);
    CHECK (coverable_backward (km, {1, 0}, {0, 5}));
    CHECK (coverable_backward (km, {1, 0}, {2, 0}));
    CHECK (coverable_backward (km, {0, 0}, {0, 0}));
    CHECK_FALSE (coverable_backward (km, {0, 0}, {1, 0}));
    PetriNet sw = net_of (swap);
    CHECK (coverable_backward (sw, {2, 0}, {0, 2}));
    CHECK_FALSE (coverable_backward (sw, {2, 0}, {3, 0}));
    CHECK (pre_star (sw, UpBasis ({{0, 2}})).elements () == std::vector<Marking> {{0, 2}, {1, 1}, {2, 0}});
    CHECK (pre_star (km, UpBasis ({{2, 0}})).elements () == std::vector<Marking> {{0, 1}, {1, 0}});
    CHECK_THROWS_AS (coverable_backward (km, {1}, {0, 0}), ShapeError);
  }

  TEST_CASE ("pre_star is a fixpoint containing the target") {
    oracle::Rng rng (62);
    for (int n = 0; n < 60; ++n) {
      const std::size_t k = oracle::uniform (rng, 1, 3);
      PetriNet net = oracle::random_net (rng, k, 3, 2);
      UpBasis target ({random_marking (rng, k, 3)});
      UpBasis star = pre_star (net, target);
      CHECK (pre_basis (net, star) == star);
      for (const auto& e : target.elements ())
        CHECK (star.contains (e));
      for (std::size_t i = 0; i < star.elements ().size (); ++i)
        for (std::size_t j = 0; j < star.elements ().size (); ++j)
          if (i != j)
            CHECK_FALSE (leq (star.elements ()[i], star.elements ()[j]));
    }
  }

  TEST_CASE ("coverable_backward agrees with box search") {
    oracle::Rng rng (63);
    std::size_t conclusive = 0;
    for (int n = 0; n < 80; ++n) {
      const std::size_t k = oracle::uniform (rng, 1, 3);
      PetriNet net = oracle::random_net (rng, k, 3, 2);
      for (int t = 0; t < 5; ++t) {
        Marking x0 = random_marking (rng, k, 2), y = random_marking (rng, k, 3);
        auto box = oracle::petri_coverable_in_box (net, x0, y, 6);
        if (not box)
          continue;
        ++conclusive;
        CAPTURE (n);
        CHECK (coverable_backward (net, x0, y) == *box);
      }
    }
    CHECK (conclusive > 200);
  }

  TEST_CASE ("forward and backward verdicts agree") {
    oracle::Rng rng (64);
    for (int n = 0; n < 40; ++n) {
      const std::size_t k = oracle::uniform (rng, 1, 3);
      PetriNet net = oracle::random_net (rng, k, 3, 2);
      Model m = make_model (net);
      for (int t = 0; t < 5; ++t) {
        Marking x0 = random_marking (rng, k, 2), y = random_marking (rng, k, 3);
        Verdict v = coverable_forward (m, value_of (x0), value_of (y));
        if (v != Verdict::unknown)
          CHECK ((v == Verdict::yes) == coverable_backward (net, x0, y));
      }
    }
  }
}
