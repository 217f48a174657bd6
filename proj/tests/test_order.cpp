#include <doctest.h>

#include <wqo/error.hpp>
#include <wqo/syntax.hpp>
#include <wqo/type.hpp>
#include <wqo/value.hpp>

#include "support/oracle.hpp"

#include <map>
#include <set>

using namespace wqo;

namespace {
  Value val (const Type& ty, const char* text) { return parse_value (ty, text); }

  std::vector<Type> constructor_sample () {
    const Type ab = Type::fin_generated ({"a", "b"}, {{0, 1}});
    const Type eq = Type::fin_discrete ({"a", "b"});
    return {
      Type::nat (), ab, eq,
      Type::prod ({Type::nat (), ab}),
      Type::sum ({Type::nat (), eq}),
      Type::star (eq), Type::star (ab), Type::star (Type::nat ()),
      Type::mset (eq), Type::mset (ab),
      Type::star (Type::prod ({Type::nat (), eq})),
      Type::mset (Type::star (eq)),
    };
  }
}

TEST_SUITE ("order") {

  TEST_CASE ("validate_type accepts a reflexive transitive table") {
    Type t = Type::fin ({"a", "b"}, {{true, true}, {false, true}});
    CHECK (validate_type (t).empty ());
  }

  TEST_CASE ("validate_type reports missing reflexivity") {
    Type t = Type::fin ({"a", "b"}, {{false, true}, {false, true}});
    auto v = validate_type (t);
    REQUIRE (v.size () == 1);
    CHECK (v[0].message == "non-reflexive at a");
    CHECK (v[0].path == "$");
  }

  TEST_CASE ("validate_type reports missing transitivity") {
    Type t = Type::fin ({"a", "b", "c"},
                        {{true, true, false}, {false, true, true}, {false, false, true}});
    auto v = validate_type (t);
    REQUIRE (v.size () == 1);
    CHECK (v[0].message == "non-transitive a,b,c");
  }

  TEST_CASE ("validate_type names nested nodes") {
    Type bad = Type::fin ({"a", "a"}, {{true, true}, {true, true}});
    Type t = Type::prod ({Type::nat (), Type::star (bad)});
    auto v = validate_type (t);
    REQUIRE_FALSE (v.empty ());
    CHECK (v[0].path == "$.1.inner");
    CHECK (v[0].message == "duplicate symbol a");
    CHECK_FALSE (validate_type (Type::fin ({}, {})).empty ());
    CHECK_FALSE (validate_type (Type::prod ({})).empty ());
    CHECK_FALSE (validate_type (Type::sum ({})).empty ());
  }

  TEST_CASE ("fin_generated closes the relation") {
    Type t = parse_type ("fin{a,b,c | a<b, b<c}");
    CHECK (validate_type (t).empty ());
    CHECK (t.symbol_leq (0, 2));
    CHECK_FALSE (t.symbol_leq (2, 0));
  }

  TEST_CASE ("value_leq examples") {
    Type n2 = Type::prod ({Type::nat (), Type::nat ()});
    CHECK (value_leq (n2, val (n2, "(1, 2)"), val (n2, "(3, 2)")));
    CHECK_FALSE (value_leq (n2, val (n2, "(1, 3)"), val (n2, "(3, 2)")));

    Type w = parse_type ("fin{a,b}*");
    CHECK (value_leq (w, val (w, "\"a b\""), val (w, "\"a a b\"")));
    CHECK_FALSE (value_leq (w, val (w, "\"b a\""), val (w, "\"a a b\"")));

    Type m = parse_type ("fin{a,b}@");
    CHECK (value_leq (m, val (m, "[| a, b |]"), val (m, "[| a, a, b |]")));
    CHECK_FALSE (value_leq (m, val (m, "[| a, a |]"), val (m, "[| a, b |]")));
  }

  TEST_CASE ("value_leq rejects non-conforming input with a path") {
    Type n2 = Type::prod ({Type::nat (), Type::nat ()});
    Value bad = Value::tuple ({Value::nat (1), Value::symbol (0)});
    CHECK_THROWS_AS (value_leq (n2, bad, bad), ShapeError);
    CHECK (conformance_error (n2, bad) == std::optional<std::string> ("$.1"));
  }

  TEST_CASE ("multisets are order-insensitive") {
    Value x = Value::bag ({Value::symbol (1), Value::symbol (0), Value::symbol (1)});
    Value y = Value::bag ({Value::symbol (1), Value::symbol (1), Value::symbol (0)});
    CHECK (x == y);
  }

  TEST_CASE ("enumerate_values examples") {
    auto nats = enumerate_values (Type::nat (), 3);
    CHECK (nats == std::vector<Value> {Value::nat (0), Value::nat (1), Value::nat (2)});

    Type a = parse_type ("fin{a}*");
    auto words = enumerate_values (a, 4);
    REQUIRE (words.size () == 4);
    for (std::size_t n = 0; n < 4; ++n)
      CHECK (words[n].items.size () == n);

    Type s = parse_type ("(nat + nat)");
    auto tags = enumerate_values (s, 2);
    CHECK (tags == std::vector<Value> {Value::tag (0, Value::nat (0)), Value::tag (1, Value::nat (0))});
  }

  TEST_CASE ("enumerate_values is exact, duplicate-free and size-bounded") {
    // Words over 2 letters of size <= 6: lengths 0..5.
    Type w = parse_type ("fin{a,b}*");
    CHECK (enumerate_values (w, 6).size () == 1 + 2 + 4 + 8 + 16 + 32);
    // Bags over 3 letters with at most 4 elements: C(4+3, 3).
    Type m = parse_type ("fin{a,b,c}@");
    CHECK (enumerate_values (m, 5).size () == 35);
    for (const auto& ty : constructor_sample ()) {
      auto vs = enumerate_values (ty, 6);
      std::set<Value> unique (vs.begin (), vs.end ());
      CHECK (unique.size () == vs.size ());
      for (const auto& v : vs) {
        CHECK (value_size (v) <= 6);
        CHECK_FALSE (conformance_error (ty, v).has_value ());
      }
      CHECK (enumerate_values (ty, 6) == vs);
    }
  }

  TEST_CASE ("value_leq agrees with the backtracking oracle, is reflexive and transitive") {
    for (const auto& ty : constructor_sample ()) {
      auto vs = enumerate_values (ty, 6);
      const std::size_t n = std::min<std::size_t> (vs.size (), 90);
      std::vector<std::vector<bool>> le (n, std::vector<bool> (n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          le[i][j] = value_leq (ty, vs[i], vs[j]);
          REQUIRE (le[i][j] == oracle::value_leq (ty, vs[i], vs[j]));
        }
      for (std::size_t i = 0; i < n; ++i) {
        CHECK (le[i][i]);
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k)
            if (le[i][j] and le[j][k])
              REQUIRE (le[i][k]);
      }
    }
  }

  TEST_CASE ("reflexive and transitive at bound 8 for every constructor") {
    for (const auto& ty : {parse_type ("fin{a,b}*"), parse_type ("fin{a,b|a<b}@"), parse_type ("(nat * nat)"),
                           parse_type ("(nat + fin{a})"), parse_type ("nat")}) {
      auto vs = enumerate_values (ty, 8);
      oracle::Rng rng (7);
      for (int trial = 0; trial < 3000; ++trial) {
        const auto& a = vs[oracle::uniform (rng, 0, vs.size () - 1)];
        const auto& b = vs[oracle::uniform (rng, 0, vs.size () - 1)];
        const auto& c = vs[oracle::uniform (rng, 0, vs.size () - 1)];
        CHECK (value_leq (ty, a, a));
        if (value_leq (ty, a, b) and value_leq (ty, b, c))
          CHECK (value_leq (ty, a, c));
      }
    }
  }

  TEST_CASE ("word embedding over an equality alphabet is antisymmetric") {
    Type w = parse_type ("fin{a,b,c}*");
    auto vs = enumerate_values (w, 5);
    for (const auto& x : vs)
      for (const auto& y : vs)
        if (value_leq (w, x, y) and value_leq (w, y, x))
          CHECK (x == y);
  }

  TEST_CASE ("multiset order over an equality alphabet is multiplicity-wise") {
    Type m = parse_type ("fin{a,b,c}@");
    auto count = [] (const Value& bag) {
      std::map<std::uint64_t, int> c;
      for (const auto& x : bag.items)
        ++c[x.num];
      return c;
    };
    auto vs = enumerate_values (m, 6);
    for (const auto& x : vs)
      for (const auto& y : vs) {
        auto cx = count (x), cy = count (y);
        bool mult = true;
        for (auto [k, n] : cx)
          mult = mult and cy[k] >= n;
        CHECK (value_leq (m, x, y) == mult);
      }
  }

  TEST_CASE ("different sum branches are incomparable") {
    Type s = parse_type ("(nat + nat)");
    for (const auto& x : enumerate_values (s, 5))
      for (const auto& y : enumerate_values (s, 5))
        if (x.num != y.num)
          CHECK_FALSE (value_leq (s, x, y));
  }

  TEST_CASE ("size metric is monotone") {
    for (const auto& ty : constructor_sample ()) {
      auto vs = enumerate_values (ty, 5);
      for (const auto& x : vs)
        for (const auto& y : vs)
          if (value_leq (ty, x, y))
            CHECK (value_size (x) <= value_size (y));
    }
  }
}
