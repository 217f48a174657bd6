#include <wqo/models.hpp>
#include <wqo/error.hpp>

namespace wqo {

  Type petri_state_type (std::size_t places) {
    return Type::prod (std::vector<Type> (places, Type::nat ()));
  }

  Marking marking_of (const Value& v) {
    Marking m;
    for (const auto& c : v.items)
      m.push_back (c.num);
    return m;
  }

  Value value_of (const Marking& m) {
    std::vector<Value> comps;
    for (auto x : m)
      comps.push_back (Value::nat (x));
    return Value::tuple (std::move (comps));
  }

  std::optional<Marking> petri_step (const PetriNet& net, const Marking& m, std::size_t t) {
    const auto& tr = net.transitions.at (t);
    if (m.size () != net.places)
      throw ShapeError ("marking has " + std::to_string (m.size ()) + " places, net has "
                        + std::to_string (net.places));
    Marking out (m.size ());
    for (std::size_t p = 0; p < m.size (); ++p) {
      if (m[p] < tr.pre[p])
        return std::nullopt;
      out[p] = m[p] - tr.pre[p] + tr.post[p];
    }
    return out;
  }

  std::optional<Ideal> petri_lift (const PetriNet& net, std::size_t t, const Ideal& i) {
    const auto& tr = net.transitions.at (t);
    check_conforms (petri_state_type (net.places), i);
    std::vector<Ideal> out;
    for (std::size_t p = 0; p < net.places; ++p) {
      const Ideal& c = i.items[p];
      if (c.omega) {
        out.push_back (Ideal::omega_nat ());
        continue;
      }
      if (c.num < tr.pre[p])
        return std::nullopt;
      out.push_back (Ideal::nat (c.num - tr.pre[p] + tr.post[p]));
    }
    return Ideal::tuple (std::move (out));
  }

  Model make_model (const PetriNet& net) {
    Model model {petri_state_type (net.places), {}, {}};
    for (std::size_t t = 0; t < net.transitions.size (); ++t) {
      model.transitions.push_back (Transition {
          net.transitions[t].name,
          [net, t] (const Value& v) -> std::optional<Value> {
            if (auto m = petri_step (net, marking_of (v), t))
              return value_of (*m);
            return std::nullopt;
          },
          [net, t] (const Ideal& i) { return petri_lift (net, t, i); }});
    }
    // Coordinates that strictly grew along the loop grow without bound.
    model.widen = [] (const Ideal& a, const Ideal& ga, const LiftedMap&) -> std::optional<Ideal> {
      std::vector<Ideal> out;
      for (std::size_t p = 0; p < a.items.size (); ++p) {
        const Ideal& before = a.items[p];
        const Ideal& after = ga.items[p];
        bool grew = after.omega ? not before.omega : (not before.omega and after.num > before.num);
        out.push_back (grew ? Ideal::omega_nat () : after);
      }
      return Ideal::tuple (std::move (out));
    };
    return model;
  }
}
