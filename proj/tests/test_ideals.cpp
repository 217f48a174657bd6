#include <doctest.h>

#include <wqo/error.hpp>
#include <wqo/ideal.hpp>
#include <wqo/syntax.hpp>

#include "support/oracle.hpp"

#include <algorithm>

using namespace wqo;

namespace {
  Ideal idl (const Type& ty, const char* text) { return parse_ideal (ty, text); }
  Value val (const Type& ty, const std::string& text) { return parse_value (ty, text); }

  bool leq (const Type& ty, const char* a, const char* b) { return ideal_leq (ty, idl (ty, a), idl (ty, b)); }

  // Types of depth <= 3 over small alphabets.
  std::vector<Type> sample_types () {
    std::vector<Type> out;
    for (const auto& f : oracle::small_alphabets ()) {
      out.push_back (Type::star (f));
      out.push_back (Type::mset (f));
    }
    const Type ab = Type::fin_generated ({"a", "b"}, {{0, 1}});
    out.push_back (Type::star (Type::nat ()));
    out.push_back (Type::mset (Type::nat ()));
    out.push_back (Type::prod ({Type::nat (), ab}));
    out.push_back (Type::sum ({Type::nat (), ab}));
    out.push_back (Type::star (Type::prod ({Type::nat (), ab})));
    out.push_back (Type::mset (Type::sum ({Type::nat (), ab})));
    out.push_back (Type::star (Type::mset (ab)));
    out.push_back (Type::mset (Type::star (Type::fin_discrete ({"a", "b"}))));
    return out;
  }

  bool canonical (const Type& ty, const Ideal& i) {
    auto antichain = [&] (const Type& in, const std::vector<Ideal>& set) {
      for (std::size_t x = 0; x < set.size (); ++x)
        for (std::size_t y = 0; y < set.size (); ++y)
          if (x != y and ideal_leq (in, set[x], set[y]))
            return false;
      return true;
    };
    switch (ty.kind ()) {
      case Kind::nat:
      case Kind::fin:
        return true;
      case Kind::prod:
        for (std::size_t k = 0; k < ty.arity (); ++k)
          if (not canonical (ty.child (k), i.items[k]))
            return false;
        return true;
      case Kind::sum:
        return canonical (ty.child (i.num), i.items[0]);
      case Kind::star: {
        const Type& in = ty.inner ();
        for (std::size_t k = 0; k < i.atoms.size (); ++k) {
          const Atom& e = i.atoms[k];
          for (const auto& c : e.ideals)
            if (not canonical (in, c))
              return false;
          if (e.star and not antichain (in, e.ideals))
            return false;
          auto absorbed_by = [&] (const Atom& s) {
            return s.star and std::all_of (e.ideals.begin (), e.ideals.end (), [&] (const Ideal& c) {
              return std::any_of (s.ideals.begin (), s.ideals.end (),
                                  [&] (const Ideal& d) { return ideal_leq (in, c, d); });
            });
          };
          if (k > 0 and absorbed_by (i.atoms[k - 1]))
            return false;
          if (k + 1 < i.atoms.size () and absorbed_by (i.atoms[k + 1]))
            return false;
        }
        return true;
      }
      case Kind::mset: {
        const Type& in = ty.inner ();
        if (not antichain (in, i.items))
          return false;
        for (const auto& c : i.singles) {
          if (not canonical (in, c))
            return false;
          for (const auto& d : i.items)
            if (ideal_leq (in, c, d))
              return false;
        }
        return std::all_of (i.items.begin (), i.items.end (), [&] (const Ideal& c) { return canonical (in, c); });
      }
    }
    return false;
  }

  std::vector<Ideal> random_canonical (const Type& ty, oracle::Rng& rng, std::size_t n) {
    std::vector<Ideal> out;
    for (std::size_t k = 0; k < n; ++k)
      out.push_back (canonicalize (ty, oracle::random_ideal (ty, rng)));
    return out;
  }
}

TEST_SUITE ("ideals") {

  TEST_CASE ("principal examples") {
    Type n = Type::nat ();
    CHECK (principal (n, Value::nat (3)) == Ideal::nat (3));

    Type w = parse_type ("fin{a,b}*");
    Ideal p = principal (w, val (w, "\"a b\""));
    CHECK (print_ideal (w, p) == "a? b?");
    auto universe = enumerate_values (w, 5);
    for (const auto& v : universe)
      CHECK (ideal_member (w, v, p) == value_leq (w, v, val (w, "\"a b\"")));
    CHECK (denote_bounded (w, p, 5).size () == 4);

    Type m = parse_type ("fin{a}@");
    Ideal q = principal (m, val (m, "[| a, a |]"));
    CHECK (print_ideal (m, q) == "{}@ <a? a?>");
    CHECK (denote_bounded (m, q, 3) == std::vector<Value> {val (m, "[||]"), val (m, "[| a |]"), val (m, "[| a, a |]")});
  }

  TEST_CASE ("ideal_leq examples") {
    Type w = parse_type ("fin{a,b}*");
    CHECK (leq (w, "a?", "{a}*"));
    CHECK_FALSE (leq (w, "{a}*", "b?"));
    CHECK_FALSE (leq (w, "{a, b}*", "{a}* {b}*"));
    CHECK (oracle::separating (w, idl (w, "{a, b}*"), idl (w, "{a}* {b}*"), enumerate_values (w, 3))
           == val (w, "\"b a\""));

    Type m = parse_type ("fin{a}@");
    CHECK_FALSE (leq (m, "{}@ <a? a?>", "{}@ <a?>"));
    CHECK_FALSE (leq (m, "{a}@ <>", "{}@ <a? a?>"));
    CHECK (oracle::separating (m, idl (m, "{a}@ <>"), idl (m, "{}@ <a? a?>"), enumerate_values (m, 4))
           == val (m, "[| a, a, a |]"));
  }

  TEST_CASE ("ideal_leq base cases") {
    Type w = parse_type ("fin{a,b}*");
    CHECK (leq (w, "eps", "eps"));
    CHECK (leq (w, "eps", "a?"));
    CHECK_FALSE (leq (w, "a?", "eps"));
    CHECK_FALSE (leq (w, "{a}*", "eps"));
    Type n = parse_type ("nat");
    CHECK (leq (n, "3", "w"));
    CHECK_FALSE (leq (n, "w", "3"));
    CHECK (leq (n, "w", "w"));
  }

  TEST_CASE ("ideal_leq rejects ideals of another type") {
    Type w = parse_type ("fin{a,b}*");
    CHECK_THROWS_AS (ideal_leq (w, Ideal::nat (1), idl (w, "a?")), ShapeError);
    CHECK_THROWS_AS (ideal_member (w, Value::nat (1), idl (w, "a?")), ShapeError);
  }

  TEST_CASE ("ideal_member examples") {
    Type w = parse_type ("fin{a,b}*");
    CHECK (ideal_member (w, val (w, "\"b a b\""), idl (w, "{a, b}*")));
    CHECK_FALSE (ideal_member (w, val (w, "\"a a\""), idl (w, "a? b?")));
    Type m = parse_type ("fin{a,b}@");
    CHECK (ideal_member (m, val (m, "[| a, a, b |]"), idl (m, "{a}@ <b?>")));
  }

  TEST_CASE ("canonicalize examples") {
    Type w = parse_type ("fin{a,b}*");
    CHECK (print_ideal (w, canonicalize (w, idl (w, "a? {a}*"))) == "{a}*");
    CHECK (ideal_equiv (w, idl (w, "a? {a}*"), idl (w, "{a}*")));
    CHECK (oracle::denote (w, idl (w, "a? {a}*"), enumerate_values (w, 7))
           == oracle::denote (w, idl (w, "{a}*"), enumerate_values (w, 7)));
    Type m = parse_type ("fin{a,b}@");
    CHECK (print_ideal (m, canonicalize (m, idl (m, "{a}@ <a?>"))) == "{a}@ <>");
    CHECK (canonicalize (w, idl (w, "{a, b}*")) == idl (w, "{a, b}*"));
  }

  TEST_CASE ("full_ideals examples") {
    Type n2 = parse_type ("(nat * nat)");
    REQUIRE (full_ideals (n2).size () == 1);
    CHECK (print_ideal (n2, full_ideals (n2)[0]) == "(w, w)");
    Type s = parse_type ("(nat + nat)");
    auto fs = full_ideals (s);
    REQUIRE (fs.size () == 2);
    CHECK (print_ideal (s, fs[0]) == "#1:w");
    CHECK (print_ideal (s, fs[1]) == "#2:w");
    Type w = parse_type ("fin{a,b}*");
    REQUIRE (full_ideals (w).size () == 1);
    CHECK (print_ideal (w, full_ideals (w)[0]) == "{a, b}*");
    Type f = parse_type ("fin{a,b,c | a<b}");
    CHECK (full_ideals (f).size () == 2);
  }

  TEST_CASE ("full ideals contain every value") {
    for (const auto& ty : sample_types ()) {
      auto fs = full_ideals (ty);
      for (const auto& v : enumerate_values (ty, 6))
        CHECK (std::any_of (fs.begin (), fs.end (), [&] (const Ideal& f) { return ideal_member (ty, v, f); }));
    }
  }

  TEST_CASE ("denote_bounded examples") {
    CHECK (denote_bounded (Type::nat (), Ideal::nat (2), 10).size () == 3);
    Type w = parse_type ("fin{a,b}*");
    CHECK (denote_bounded (w, idl (w, "a? b?"), 6).size () == 4);
    Type m = parse_type ("fin{a}@");
    CHECK (denote_bounded (m, idl (m, "{a}@ <>"), 4).size () == 4);
  }

  TEST_CASE ("curated false word inclusions carry witnesses") {
    CHECK (oracle::curated_word_pairs ().size () >= 30);
    for (const auto& c : oracle::curated_word_pairs ()) {
      CAPTURE (c.lhs);
      CAPTURE (c.rhs);
      Type ty = parse_type (c.type);
      Ideal l = canonicalize (ty, idl (ty, c.lhs.c_str ()));
      Ideal r = canonicalize (ty, idl (ty, c.rhs.c_str ()));
      Value wit = val (ty, c.witness);
      CHECK (value_size (wit) <= 8);
      CHECK (oracle::member (ty, wit, l));
      CHECK_FALSE (oracle::member (ty, wit, r));
      CHECK_FALSE (ideal_leq (ty, l, r));
      CHECK (ideal_member (ty, wit, l));
      CHECK_FALSE (ideal_member (ty, wit, r));
    }
  }

  TEST_CASE ("curated false multiset inclusions carry witnesses") {
    CHECK (oracle::curated_mset_pairs ().size () >= 30);
    for (const auto& c : oracle::curated_mset_pairs ()) {
      CAPTURE (c.lhs);
      CAPTURE (c.rhs);
      Type ty = parse_type (c.type);
      Ideal l = canonicalize (ty, idl (ty, c.lhs.c_str ()));
      Ideal r = canonicalize (ty, idl (ty, c.rhs.c_str ()));
      Value wit = val (ty, c.witness);
      CHECK (value_size (wit) <= 8);
      CHECK (oracle::member (ty, wit, l));
      CHECK_FALSE (oracle::member (ty, wit, r));
      CHECK_FALSE (ideal_leq (ty, l, r));
      CHECK_FALSE (oracle::ideal_leq (ty, l, r));
    }
  }

  TEST_CASE ("ideal_leq is sound against bounded denotations") {
    oracle::Rng rng (11);
    for (const auto& ty : sample_types ()) {
      CAPTURE (print_type (ty));
      auto universe = enumerate_values (ty, 6);
      auto ideals = random_canonical (ty, rng, 24);
      for (std::size_t k = 0; k < 24; ++k)
        ideals.push_back (canonicalize (ty, oracle::weaken (ty, ideals[k], rng)));
      for (const auto& i : ideals)
        for (const auto& j : ideals) {
          const bool decided = ideal_leq (ty, i, j);
          REQUIRE (decided == oracle::ideal_leq (ty, i, j));
          if (decided)
            REQUIRE_FALSE (oracle::separating (ty, i, j, universe).has_value ());
        }
    }
  }

  TEST_CASE ("weakening yields a larger ideal") {
    oracle::Rng rng (12);
    for (const auto& ty : sample_types ())
      for (int n = 0; n < 40; ++n) {
        Ideal i = oracle::random_ideal (ty, rng);
        CHECK (ideal_leq (ty, i, oracle::weaken (ty, i, rng)));
      }
  }

  TEST_CASE ("ideal_leq is reflexive and transitive on samples") {
    oracle::Rng rng (13);
    for (const auto& ty : sample_types ()) {
      auto ideals = random_canonical (ty, rng, 30);
      for (std::size_t k = 0; k < 30; ++k)
        ideals.push_back (oracle::weaken (ty, ideals[k], rng));
      for (const auto& a : ideals) {
        CHECK (ideal_leq (ty, a, a));
        for (const auto& b : ideals)
          if (ideal_leq (ty, a, b))
            for (const auto& c : ideals)
              if (ideal_leq (ty, b, c))
                REQUIRE (ideal_leq (ty, a, c));
      }
    }
  }

  TEST_CASE ("principal embedding agrees with the element order up to bound 6") {
    for (const auto& ty : sample_types ()) {
      auto vs = enumerate_values (ty, 6);
      if (vs.size () > 150)
        vs.resize (150);
      for (const auto& v : vs) {
        Ideal p = principal (ty, v);
        CHECK (canonical (ty, p));
        for (const auto& u : vs)
          REQUIRE (ideal_member (ty, u, p) == value_leq (ty, u, v));
      }
    }
  }

  TEST_CASE ("ideals are directed") {
    oracle::Rng rng (14);
    const std::vector<Type> types {parse_type ("fin{a,b}*"), parse_type ("fin{a,b|a<b}@"),
                                   parse_type ("(nat * nat)"), parse_type ("nat*"), parse_type ("fin{a,b,c}@")};
    for (const auto& ty : types) {
      auto small = enumerate_values (ty, 4);
      auto large = enumerate_values (ty, 10);
      for (const auto& i : random_canonical (ty, rng, 12)) {
        auto lo = oracle::denote (ty, i, small);
        auto hi = oracle::denote (ty, i, large);
        for (const auto& u : lo)
          for (const auto& v : lo) {
            bool bounded = std::any_of (hi.begin (), hi.end (), [&] (const Value& w) {
              return value_leq (ty, u, w) and value_leq (ty, v, w);
            });
            REQUIRE (bounded);
          }
      }
    }
  }

  TEST_CASE ("denotations are downward closed") {
    oracle::Rng rng (15);
    for (const auto& ty : sample_types ()) {
      auto universe = enumerate_values (ty, 5);
      if (universe.size () > 120)
        universe.resize (120);
      for (const auto& i : random_canonical (ty, rng, 8)) {
        for (const auto& v : universe) {
          if (not ideal_member (ty, v, i))
            continue;
          for (const auto& u : universe)
            if (value_leq (ty, u, v))
              REQUIRE (ideal_member (ty, u, i));
        }
      }
    }
  }

  TEST_CASE ("ideal_member agrees with the backtracking oracle") {
    oracle::Rng rng (16);
    for (const auto& ty : sample_types ()) {
      auto universe = enumerate_values (ty, 6);
      for (int n = 0; n < 20; ++n) {
        Ideal i = oracle::random_ideal (ty, rng);
        for (const auto& v : universe)
          REQUIRE (ideal_member (ty, v, i) == oracle::member (ty, v, i));
        CHECK (denote_bounded (ty, i, 6) == oracle::denote (ty, i, universe));
      }
    }
  }

  TEST_CASE ("canonicalize preserves the ideal, is idempotent and canonical") {
    oracle::Rng rng (17);
    for (const auto& ty : sample_types ()) {
      for (int n = 0; n < 60; ++n) {
        Ideal raw = oracle::random_ideal (ty, rng);
        if (n % 2)
          raw = oracle::weaken (ty, raw, rng);
        Ideal c = canonicalize (ty, raw);
        REQUIRE (ideal_equiv (ty, raw, c));
        REQUIRE (canonicalize (ty, c) == c);
        REQUIRE (canonical (ty, c));
      }
    }
  }

  TEST_CASE ("reduce_antichain keeps maximal members") {
    Type w = parse_type ("fin{a,b}*");
    auto r = reduce_antichain (w, {idl (w, "a?"), idl (w, "{a}*"), idl (w, "b?"), idl (w, "{a}*")});
    REQUIRE (r.size () == 2);
    CHECK (std::find (r.begin (), r.end (), idl (w, "{a}*")) != r.end ());
    CHECK (std::find (r.begin (), r.end (), idl (w, "b?")) != r.end ());
  }
}
