#include <wqo/backward.hpp>
#include <wqo/error.hpp>

#include <algorithm>

namespace wqo {

  namespace {
    bool dominates (const Marking& big, const Marking& small) {
      for (std::size_t p = 0; p < big.size (); ++p)
        if (big[p] < small[p])
          return false;
      return true;
    }

    void check_dimension (const PetriNet& net, const Marking& m) {
      if (m.size () != net.places)
        throw ShapeError ("marking has " + std::to_string (m.size ()) + " places, net has "
                          + std::to_string (net.places));
    }
  }

  UpBasis::UpBasis (const std::vector<Marking>& elements) {
    for (const auto& m : elements)
      insert (m);
  }

  bool UpBasis::contains (const Marking& m) const {
    return std::any_of (_elements.begin (), _elements.end (),
                        [&] (const Marking& b) { return dominates (m, b); });
  }

  bool UpBasis::insert (const Marking& m) {
    if (contains (m))
      return false;
    std::erase_if (_elements, [&] (const Marking& b) { return dominates (b, m); });
    _elements.insert (std::upper_bound (_elements.begin (), _elements.end (), m), m);
    return true;
  }

  UpBasis pre_basis (const PetriNet& net, const UpBasis& target) {
    UpBasis out = target;
    for (const auto& v : target.elements ()) {
      check_dimension (net, v);
      for (const auto& t : net.transitions) {
        // least w with w >= pre and w - pre + post >= v
        Marking w (net.places);
        for (std::size_t p = 0; p < net.places; ++p)
          w[p] = t.pre[p] + (v[p] > t.post[p] ? v[p] - t.post[p] : 0);
        out.insert (w);
      }
    }
    return out;
  }

  UpBasis pre_star (const PetriNet& net, const UpBasis& target) {
    UpBasis cur = target;
    while (true) {
      UpBasis next = pre_basis (net, cur);
      if (next == cur)
        return cur;
      cur = std::move (next);
    }
  }

  bool coverable_backward (const PetriNet& net, const Marking& x0, const Marking& y) {
    check_dimension (net, x0);
    check_dimension (net, y);
    return pre_star (net, UpBasis ({y})).contains (x0);
  }
}
