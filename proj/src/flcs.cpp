#include <wqo/models.hpp>
#include <wqo/error.hpp>

#include <algorithm>

namespace wqo {

  Type flcs_state_type (const Flcs& sys) {
    return Type::star (Type::fin_discrete (sys.alphabet));
  }

  std::optional<Value> flcs_step (const Flcs& sys, const Value& w, std::size_t t) {
    const auto& tr = sys.transitions.at (t);
    check_conforms (flcs_state_type (sys), w);
    if (tr.op == FlcsTransition::Op::send) {
      Value out = w;
      out.items.push_back (Value::symbol (tr.letter));
      return out;
    }
    auto it = std::find_if (w.items.begin (), w.items.end (),
                            [&] (const Value& l) { return l.num == tr.letter; });
    if (it == w.items.end ())
      return std::nullopt;
    return Value::word (std::vector<Value> (it + 1, w.items.end ()));
  }

  std::optional<Ideal> flcs_lift (const Flcs& sys, std::size_t t, const Ideal& p) {
    const auto& tr = sys.transitions.at (t);
    const Type ty = flcs_state_type (sys);
    check_conforms (ty, p);
    const Type& letters = ty.inner ();
    const Value a = Value::symbol (tr.letter);
    if (tr.op == FlcsTransition::Op::send) {
      Ideal out = p;
      out.atoms.push_back (Atom::single (Ideal::symbol (tr.letter)));
      return canonicalize (ty, out);
    }
    auto holds_a = [&] (const Ideal& c) { return detail::member (letters, a, c); };
    for (std::size_t k = 0; k < p.atoms.size (); ++k) {
      const Atom& e = p.atoms[k];
      if (not std::any_of (e.ideals.begin (), e.ideals.end (), holds_a))
        continue;  // e cannot supply `a`: it is lost
      const std::size_t from = e.star ? k : k + 1;
      return canonicalize (ty, Ideal::product (std::vector<Atom> (p.atoms.begin () + static_cast<std::ptrdiff_t> (from),
                                                                  p.atoms.end ())));
    }
    return std::nullopt;
  }

  namespace {
    Ideal concat (const Ideal& p, const std::vector<Atom>& suffix, std::size_t times) {
      Ideal out = p;
      for (std::size_t k = 0; k < times; ++k)
        out.atoms.insert (out.atoms.end (), suffix.begin (), suffix.end ());
      return out;
    }

    // If g(a) = a·S and g keeps appending S, then g^k(a) = a·S^k and the
    // least upper bound is a·B* with B the letter ideals occurring in S.
    // S is g(eps) when g is defined there (send-only composites); otherwise
    // the part of g(a) past a.  The append shape is confirmed on two further
    // iterates.
    std::optional<Ideal> widen_append (const Type& ty, const Ideal& a, const Ideal& ga, const LiftedMap& g) {
      std::vector<Atom> suffix;
      if (auto e = g (Ideal::product ({})); e and not e->atoms.empty ())
        suffix = e->atoms;
      else if (ga.atoms.size () > a.atoms.size ()
               and std::equal (a.atoms.begin (), a.atoms.end (), ga.atoms.begin ()))
        suffix.assign (ga.atoms.begin () + static_cast<std::ptrdiff_t> (a.atoms.size ()), ga.atoms.end ());
      else
        return std::nullopt;
      for (std::size_t k = 0; k <= 2; ++k) {
        auto next = g (canonicalize (ty, concat (a, suffix, k)));
        if (not next or not ideal_equiv (ty, *next, canonicalize (ty, concat (a, suffix, k + 1))))
          return std::nullopt;
      }
      std::vector<Ideal> base;
      for (const auto& e : suffix)
        base.insert (base.end (), e.ideals.begin (), e.ideals.end ());
      Ideal out = a;
      out.atoms.push_back (Atom::repeat (reduce_antichain (ty.inner (), std::move (base))));
      return canonicalize (ty, out);
    }
  }

  Model make_model (const Flcs& sys) {
    const Type ty = flcs_state_type (sys);
    Model model {ty, {}, {}};
    for (std::size_t t = 0; t < sys.transitions.size (); ++t) {
      model.transitions.push_back (Transition {
          sys.transitions[t].name,
          [sys, t] (const Value& v) { return flcs_step (sys, v, t); },
          [sys, t] (const Ideal& p) { return flcs_lift (sys, t, p); }});
    }
    model.widen = [ty] (const Ideal& a, const Ideal& ga, const LiftedMap& g) {
      return widen_append (ty, a, ga, g);
    };
    return model;
  }
}
