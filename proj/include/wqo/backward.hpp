#pragma once

#include <wqo/models.hpp>

#include <vector>

namespace wqo {

  /// Finite basis of an upward-closed set of markings: ↑basis.  Kept as a
  /// sorted antichain of minimal elements.
  class UpBasis {
    public:
      UpBasis () = default;
      explicit UpBasis (const std::vector<Marking>& elements);

      /// Returns false if m is already in ↑basis.
      bool insert (const Marking& m);
      bool contains (const Marking& m) const;

      const std::vector<Marking>& elements () const { return _elements; }

      friend bool operator== (const UpBasis&, const UpBasis&) = default;

    private:
      std::vector<Marking> _elements;
  };

  /// Minimal basis of ↑target ∪ Pre(↑target).
  UpBasis pre_basis (const PetriNet& net, const UpBasis& target);

  /// Pre*(↑target) by iterating pre_basis to its fixpoint.
  UpBasis pre_star (const PetriNet& net, const UpBasis& target);

  /// Can a marking ≥ y be reached from x0?  Exact.
  bool coverable_backward (const PetriNet& net, const Marking& x0, const Marking& y);
}
