#pragma once

#include <wqo/ideal.hpp>

#include <span>
#include <vector>

namespace wqo {

  /// A downward-closed set, stored as a finite antichain of canonical ideals
  /// denoting their union.  The antichain is kept sorted.
  class DownSet {
    public:
      explicit DownSet (Type ty) : _type (std::move (ty)) {}

      /// Canonicalizes and antichain-reduces `ideals`.
      static DownSet from_ideals (Type ty, std::vector<Ideal> ideals);

      const Type& type () const { return _type; }
      std::span<const Ideal> parts () const { return _parts; }
      bool empty () const { return _parts.empty (); }
      std::size_t size () const { return _parts.size (); }

      /// Adds (the canonical form of) an ideal.  Returns false (and leaves the set unchanged)
      /// if it is already included in some part; otherwise removes the parts
      /// it includes.
      bool insert (Ideal i);

      /// i ⊑ some part.
      bool covers (const Ideal& i) const;

      friend bool operator== (const DownSet& a, const DownSet& b) {
        return a._type == b._type and a._parts == b._parts;
      }

    private:
      Type _type;
      std::vector<Ideal> _parts;
  };

  /// ↓E as the antichain of principal ideals of the maximal elements of E.
  DownSet downset_from_values (const Type& ty, const std::vector<Value>& values);

  DownSet downset_union (const DownSet& a, const DownSet& b);

  /// ⟦a⟧ ⊆ ⟦b⟧, decided partwise.
  bool downset_leq (const DownSet& a, const DownSet& b);

  bool downset_member (const Value& v, const DownSet& d);

  DownSet downset_full (const Type& ty);
}
