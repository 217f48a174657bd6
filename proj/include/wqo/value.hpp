#pragma once

#include <wqo/type.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wqo {

  /// A concrete element of a data type.
  ///
  ///  - nat:  `num` is the number
  ///  - fin:  `num` is the index of the symbol in the carrier
  ///  - prod: `items` are the components
  ///  - sum:  `num` is the (0-based) branch, `items[0]` the payload
  ///  - star: `items` are the letters, in order
  ///  - mset: `items` are the elements, kept sorted so that bags with equal
  ///          multiplicities compare equal
  struct Value {
    Kind kind = Kind::nat;
    std::uint64_t num = 0;
    std::vector<Value> items;

    static Value nat (std::uint64_t n) { return {Kind::nat, n, {}}; }
    static Value symbol (std::size_t index) { return {Kind::fin, index, {}}; }
    static Value tuple (std::vector<Value> comps) { return {Kind::prod, 0, std::move (comps)}; }
    static Value tag (std::size_t branch, Value v);
    static Value word (std::vector<Value> letters) { return {Kind::star, 0, std::move (letters)}; }
    static Value bag (std::vector<Value> elems);
  };

  /// Syntactic total order, used for sorting and deduplication only.
  int compare (const Value& a, const Value& b);
  inline bool operator== (const Value& a, const Value& b) { return compare (a, b) == 0; }
  inline bool operator< (const Value& a, const Value& b) { return compare (a, b) < 0; }

  /// Path of the first non-conforming node, if any.
  std::optional<std::string> conformance_error (const Type& ty, const Value& v);
  /// Throws ShapeError if v does not conform to ty.
  void check_conforms (const Type& ty, const Value& v);

  /// The quasi-ordering of `ty`.  Throws ShapeError on non-conforming input.
  bool value_leq (const Type& ty, const Value& a, const Value& b);

  /// Size metric: every constructor node costs 1, a symbol costs 1, NatV(n)
  /// costs n + 1.  It is monotone: a <= b implies size(a) <= size(b).
  std::size_t value_size (const Value& v);

  /// All conforming values of size at most `size_bound`, ordered by size and
  /// then by generation order.
  std::vector<Value> enumerate_values (const Type& ty, std::size_t size_bound);
}
