#pragma once

#include <wqo/type.hpp>
#include <wqo/value.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wqo {

  struct Atom;

  /// An ideal (irreducible downward-closed set) of a data type.
  ///
  ///  - nat:  ↓num, or all of ℕ when `omega`
  ///  - fin:  ↓q for the symbol with index `num`
  ///  - prod: componentwise, `items` are the components
  ///  - sum:  `num` is the branch, `items[0]` the payload
  ///  - star: word product `atoms`
  ///  - mset: ⊛-product; `items` is the star set A in A⊛, `singles` the C? factors
  struct Ideal {
    Kind kind = Kind::nat;
    std::uint64_t num = 0;
    bool omega = false;
    std::vector<Ideal> items;
    std::vector<Atom> atoms;
    std::vector<Ideal> singles;

    static Ideal nat (std::uint64_t n) { return Ideal {Kind::nat, n, false, {}, {}, {}}; }
    static Ideal omega_nat () { return Ideal {Kind::nat, 0, true, {}, {}, {}}; }
    static Ideal symbol (std::size_t index) { return Ideal {Kind::fin, index, false, {}, {}, {}}; }
    static Ideal tuple (std::vector<Ideal> comps);
    static Ideal tag (std::size_t branch, Ideal payload);
    static Ideal product (std::vector<Atom> atoms);
    static Ideal mset_product (std::vector<Ideal> star, std::vector<Ideal> singles);
  };

  /// Atom of a word product: C? (one optional letter from C) or A* (any
  /// number of letters from the union of A, A non-empty).
  struct Atom {
    bool star = false;
    std::vector<Ideal> ideals;

    static Atom single (Ideal c) { return Atom {false, {std::move (c)}}; }
    static Atom repeat (std::vector<Ideal> a) { return Atom {true, std::move (a)}; }
  };

  /// Syntactic total order.  Denotational equality is mutual ideal_leq.
  int compare (const Ideal& a, const Ideal& b);
  int compare (const Atom& a, const Atom& b);
  inline bool operator== (const Ideal& a, const Ideal& b) { return compare (a, b) == 0; }
  inline bool operator< (const Ideal& a, const Ideal& b) { return compare (a, b) < 0; }
  inline bool operator== (const Atom& a, const Atom& b) { return compare (a, b) == 0; }

  std::optional<std::string> conformance_error (const Type& ty, const Ideal& i);
  void check_conforms (const Type& ty, const Ideal& i);

  /// Canonical ideal denoting ↓v.
  Ideal principal (const Type& ty, const Value& v);

  /// Decides ⟦i⟧ ⊆ ⟦j⟧.  Word products by dynamic programming over suffix
  /// pairs, ⊛-products by bipartite matching.
  bool ideal_leq (const Type& ty, const Ideal& i, const Ideal& j);

  /// Both inclusions.
  bool ideal_equiv (const Type& ty, const Ideal& i, const Ideal& j);

  /// v ∈ ⟦i⟧.
  bool ideal_member (const Type& ty, const Value& v, const Ideal& i);

  /// Equivalent ideal in canonical form: star sets are sorted ⊆-antichains,
  /// word atoms absorbed by an adjacent star are dropped, ⊛-singles absorbed
  /// by the star set are dropped and the rest sorted.  Idempotent.
  Ideal canonicalize (const Type& ty, const Ideal& i);

  /// Canonical antichain whose union is the whole of `ty`.
  std::vector<Ideal> full_ideals (const Type& ty);

  /// { v ∈ enumerate_values(ty, size_bound) | v ∈ ⟦i⟧ }
  std::vector<Value> denote_bounded (const Type& ty, const Ideal& i, std::size_t size_bound);

  /// Removes members included in another member (keeping the first of
  /// equivalent ones in sorted order) and sorts the remainder.
  std::vector<Ideal> reduce_antichain (const Type& ty, std::vector<Ideal> ideals);

  namespace detail {
    // Unchecked variants, for callers that have already validated shapes.
    bool leq (const Type& ty, const Ideal& i, const Ideal& j);
    bool member (const Type& ty, const Value& v, const Ideal& i);
  }
}
