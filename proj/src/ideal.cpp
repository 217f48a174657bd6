#include <wqo/ideal.hpp>
#include <wqo/error.hpp>

#include "matching.hpp"

#include <algorithm>

namespace wqo {

  Ideal Ideal::tuple (std::vector<Ideal> comps) {
    Ideal out {Kind::prod, 0, false, std::move (comps), {}, {}};
    return out;
  }

  Ideal Ideal::tag (std::size_t branch, Ideal payload) {
    Ideal out {Kind::sum, branch, false, {}, {}, {}};
    out.items.push_back (std::move (payload));
    return out;
  }

  Ideal Ideal::product (std::vector<Atom> atoms) {
    Ideal out {Kind::star, 0, false, {}, {}, {}};
    out.atoms = std::move (atoms);
    return out;
  }

  Ideal Ideal::mset_product (std::vector<Ideal> star, std::vector<Ideal> singles) {
    Ideal out {Kind::mset, 0, false, std::move (star), {}, {}};
    out.singles = std::move (singles);
    return out;
  }

  namespace {
    template <typename T>
    int compare_seq (const std::vector<T>& a, const std::vector<T>& b) {
      if (a.size () != b.size ())
        return a.size () < b.size () ? -1 : 1;
      for (std::size_t k = 0; k < a.size (); ++k)
        if (int c = compare (a[k], b[k]); c != 0)
          return c;
      return 0;
    }
  }

  int compare (const Atom& a, const Atom& b) {
    if (a.star != b.star)
      return a.star ? 1 : -1;
    return compare_seq (a.ideals, b.ideals);
  }

  int compare (const Ideal& a, const Ideal& b) {
    if (a.kind != b.kind)
      return a.kind < b.kind ? -1 : 1;
    if (a.omega != b.omega)
      return a.omega ? 1 : -1;
    if (a.num != b.num)
      return a.num < b.num ? -1 : 1;
    if (int c = compare_seq (a.items, b.items); c != 0)
      return c;
    if (int c = compare_seq (a.atoms, b.atoms); c != 0)
      return c;
    return compare_seq (a.singles, b.singles);
  }

  namespace {
    std::optional<std::string> conf (const Type& ty, const Ideal& i, const std::string& path) {
      if (ty.kind () != i.kind)
        return path;
      switch (ty.kind ()) {
        case Kind::nat:
          if (not i.items.empty () or not i.atoms.empty () or not i.singles.empty ())
            return path;
          return std::nullopt;
        case Kind::fin:
          if (i.num >= ty.carrier ().size () or i.omega)
            return path;
          return std::nullopt;
        case Kind::prod:
          if (i.items.size () != ty.arity ())
            return path;
          for (std::size_t k = 0; k < ty.arity (); ++k)
            if (auto e = conf (ty.child (k), i.items[k], path + "." + std::to_string (k)))
              return e;
          return std::nullopt;
        case Kind::sum:
          if (i.num >= ty.arity () or i.items.size () != 1)
            return path;
          return conf (ty.child (i.num), i.items[0], path + "#" + std::to_string (i.num));
        case Kind::star:
          if (not i.items.empty () or not i.singles.empty ())
            return path;
          for (std::size_t k = 0; k < i.atoms.size (); ++k) {
            const auto& a = i.atoms[k];
            const std::string p = path + "[" + std::to_string (k) + "]";
            if (a.ideals.empty () or (not a.star and a.ideals.size () != 1))
              return p;
            for (std::size_t m = 0; m < a.ideals.size (); ++m)
              if (auto e = conf (ty.inner (), a.ideals[m], p + "." + std::to_string (m)))
                return e;
          }
          return std::nullopt;
        case Kind::mset:
          if (not i.atoms.empty ())
            return path;
          for (std::size_t k = 0; k < i.items.size (); ++k)
            if (auto e = conf (ty.inner (), i.items[k], path + ".star." + std::to_string (k)))
              return e;
          for (std::size_t k = 0; k < i.singles.size (); ++k)
            if (auto e = conf (ty.inner (), i.singles[k], path + ".single." + std::to_string (k)))
              return e;
          return std::nullopt;
      }
      return path;
    }
  }

  std::optional<std::string> conformance_error (const Type& ty, const Ideal& i) {
    return conf (ty, i, "$");
  }

  void check_conforms (const Type& ty, const Ideal& i) {
    if (auto e = conformance_error (ty, i))
      throw ShapeError ("ideal does not conform to its type at " + *e);
  }

  Ideal principal (const Type& ty, const Value& v) {
    check_conforms (ty, v);
    switch (ty.kind ()) {
      case Kind::nat:
        return Ideal::nat (v.num);
      case Kind::fin:
        return Ideal::symbol (v.num);
      case Kind::prod: {
        std::vector<Ideal> comps;
        for (std::size_t k = 0; k < ty.arity (); ++k)
          comps.push_back (principal (ty.child (k), v.items[k]));
        return Ideal::tuple (std::move (comps));
      }
      case Kind::sum:
        return Ideal::tag (v.num, principal (ty.child (v.num), v.items[0]));
      case Kind::star: {
        std::vector<Atom> atoms;
        for (const auto& letter : v.items)
          atoms.push_back (Atom::single (principal (ty.inner (), letter)));
        return Ideal::product (std::move (atoms));
      }
      case Kind::mset: {
        std::vector<Ideal> singles;
        for (const auto& e : v.items)
          singles.push_back (principal (ty.inner (), e));
        std::sort (singles.begin (), singles.end ());
        return Ideal::mset_product ({}, std::move (singles));
      }
    }
    throw ShapeError ("unknown type constructor");
  }

  namespace detail {
    namespace {
      bool in_some (const Type& ty, const Ideal& c, const std::vector<Ideal>& set) {
        return std::any_of (set.begin (), set.end (), [&] (const Ideal& d) { return leq (ty, c, d); });
      }

      bool atom_leq (const Type& inner, const Atom& e, const Atom& f) {
        if (not e.star and not f.star)
          return leq (inner, e.ideals[0], f.ideals[0]);
        if (not e.star)
          return in_some (inner, e.ideals[0], f.ideals);
        if (not f.star)
          return false;
        return std::all_of (e.ideals.begin (), e.ideals.end (),
                            [&] (const Ideal& c) { return in_some (inner, c, f.ideals); });
      }

      // e P ⊑ e' P' iff (1) e ⋢ e' and e P ⊑ P', or (2) e = C?, e' = C'?,
      // C ⊆ C' and P ⊑ P', or (3) e' = A'*, e ⊑ A'* and P ⊑ e' P'.
      // The empty product is below everything; nothing non-empty is below it.
      bool word_leq (const Type& inner, const std::vector<Atom>& p, const std::vector<Atom>& q) {
        const std::size_t n = p.size (), m = q.size ();
        std::vector<std::vector<char>> ok (n + 1, std::vector<char> (m + 1, 0));
        for (std::size_t j = 0; j <= m; ++j)
          ok[n][j] = 1;
        for (std::size_t i = n; i-- > 0;) {
          for (std::size_t j = m; j-- > 0;) {
            const Atom& e = p[i];
            const Atom& f = q[j];
            const bool below = atom_leq (inner, e, f);
            bool r = false;
            if (not below)
              r = ok[i][j + 1];
            else if (f.star)
              r = ok[i + 1][j];
            else
              r = not e.star and ok[i + 1][j + 1];
            ok[i][j] = r;
          }
        }
        return ok[0][0];
      }

      bool mset_leq (const Type& inner, const Ideal& i, const Ideal& j) {
        for (const auto& c : i.items)
          if (not in_some (inner, c, j.items))
            return false;
        std::vector<const Ideal*> rest;
        for (const auto& c : i.singles)
          if (not in_some (inner, c, j.items))
            rest.push_back (&c);
        BipartiteMatcher match (rest.size (), j.singles.size ());
        for (std::size_t l = 0; l < rest.size (); ++l)
          for (std::size_t r = 0; r < j.singles.size (); ++r)
            if (leq (inner, *rest[l], j.singles[r]))
              match.add_edge (l, r);
        return match.saturates_left ();
      }
    }

    bool leq (const Type& ty, const Ideal& i, const Ideal& j) {
      switch (ty.kind ()) {
        case Kind::nat:
          return j.omega or (not i.omega and i.num <= j.num);
        case Kind::fin:
          return ty.symbol_leq (i.num, j.num);
        case Kind::prod:
          for (std::size_t k = 0; k < ty.arity (); ++k)
            if (not leq (ty.child (k), i.items[k], j.items[k]))
              return false;
          return true;
        case Kind::sum:
          return i.num == j.num and leq (ty.child (i.num), i.items[0], j.items[0]);
        case Kind::star:
          return word_leq (ty.inner (), i.atoms, j.atoms);
        case Kind::mset:
          return mset_leq (ty.inner (), i, j);
      }
      return false;
    }

    namespace {
      bool member_of_some (const Type& ty, const Value& v, const std::vector<Ideal>& set) {
        return std::any_of (set.begin (), set.end (), [&] (const Ideal& c) { return member (ty, v, c); });
      }
    }

    bool member (const Type& ty, const Value& v, const Ideal& i) {
      switch (ty.kind ()) {
        case Kind::nat:
          return i.omega or v.num <= i.num;
        case Kind::fin:
          return ty.symbol_leq (v.num, i.num);
        case Kind::prod:
          for (std::size_t k = 0; k < ty.arity (); ++k)
            if (not member (ty.child (k), v.items[k], i.items[k]))
              return false;
          return true;
        case Kind::sum:
          return v.num == i.num and member (ty.child (i.num), v.items[0], i.items[0]);
        case Kind::star: {
          const auto& w = v.items;
          const auto& atoms = i.atoms;
          const std::size_t len = w.size (), n = atoms.size ();
          // ok[p][k]: suffix w[p..] is in the product atoms[k..]
          std::vector<std::vector<char>> ok (len + 1, std::vector<char> (n + 1, 0));
          for (std::size_t k = 0; k <= n; ++k)
            ok[len][k] = 1;
          for (std::size_t p = len; p-- > 0;) {
            for (std::size_t k = n; k-- > 0;) {
              const Atom& a = atoms[k];
              bool r = ok[p][k + 1];
              if (not r and member_of_some (ty.inner (), w[p], a.ideals))
                r = a.star ? ok[p + 1][k] : ok[p + 1][k + 1];
              ok[p][k] = r;
            }
          }
          return ok[0][0];
        }
        case Kind::mset: {
          std::vector<const Value*> rest;
          for (const auto& e : v.items)
            if (not member_of_some (ty.inner (), e, i.items))
              rest.push_back (&e);
          BipartiteMatcher match (rest.size (), i.singles.size ());
          for (std::size_t l = 0; l < rest.size (); ++l)
            for (std::size_t r = 0; r < i.singles.size (); ++r)
              if (member (ty.inner (), *rest[l], i.singles[r]))
                match.add_edge (l, r);
          return match.saturates_left ();
        }
      }
      return false;
    }
  }

  bool ideal_leq (const Type& ty, const Ideal& i, const Ideal& j) {
    check_conforms (ty, i);
    check_conforms (ty, j);
    return detail::leq (ty, i, j);
  }

  bool ideal_equiv (const Type& ty, const Ideal& i, const Ideal& j) {
    return ideal_leq (ty, i, j) and detail::leq (ty, j, i);
  }

  bool ideal_member (const Type& ty, const Value& v, const Ideal& i) {
    check_conforms (ty, v);
    check_conforms (ty, i);
    return detail::member (ty, v, i);
  }

  std::vector<Ideal> reduce_antichain (const Type& ty, std::vector<Ideal> ideals) {
    std::sort (ideals.begin (), ideals.end ());
    std::vector<Ideal> kept;
    for (auto& c : ideals) {
      bool absorbed = false;
      for (const auto& k : kept)
        if (detail::leq (ty, c, k)) {
          absorbed = true;
          break;
        }
      if (absorbed)
        continue;
      std::erase_if (kept, [&] (const Ideal& k) { return detail::leq (ty, k, c); });
      kept.push_back (std::move (c));
    }
    std::sort (kept.begin (), kept.end ());
    return kept;
  }

  namespace {
    Ideal canon (const Type& ty, const Ideal& i) {
      switch (ty.kind ()) {
        case Kind::nat:
        case Kind::fin:
          return i;
        case Kind::prod: {
          std::vector<Ideal> comps;
          for (std::size_t k = 0; k < ty.arity (); ++k)
            comps.push_back (canon (ty.child (k), i.items[k]));
          return Ideal::tuple (std::move (comps));
        }
        case Kind::sum:
          return Ideal::tag (i.num, canon (ty.child (i.num), i.items[0]));
        case Kind::star: {
          const Type& inner = ty.inner ();
          std::vector<Atom> atoms;
          for (const auto& a : i.atoms) {
            std::vector<Ideal> members;
            for (const auto& c : a.ideals)
              members.push_back (canon (inner, c));
            if (a.star)
              atoms.push_back (Atom::repeat (reduce_antichain (inner, std::move (members))));
            else
              atoms.push_back (Atom::single (std::move (members[0])));
          }
          // Drop atoms absorbed by an adjacent star until none is left.
          for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t k = 0; k < atoms.size () and not changed; ++k) {
              for (std::size_t nb : {k - 1, k + 1}) {
                if (nb >= atoms.size () or not atoms[nb].star)
                  continue;
                if (detail::atom_leq (inner, atoms[k], atoms[nb])) {
                  atoms.erase (atoms.begin () + static_cast<std::ptrdiff_t> (k));
                  changed = true;
                  break;
                }
              }
            }
          }
          return Ideal::product (std::move (atoms));
        }
        case Kind::mset: {
          const Type& inner = ty.inner ();
          std::vector<Ideal> star;
          for (const auto& c : i.items)
            star.push_back (canon (inner, c));
          star = reduce_antichain (inner, std::move (star));
          std::vector<Ideal> singles;
          for (const auto& c : i.singles) {
            Ideal cc = canon (inner, c);
            if (not detail::in_some (inner, cc, star))
              singles.push_back (std::move (cc));
          }
          std::sort (singles.begin (), singles.end ());
          return Ideal::mset_product (std::move (star), std::move (singles));
        }
      }
      return i;
    }
  }

  Ideal canonicalize (const Type& ty, const Ideal& i) {
    check_conforms (ty, i);
    return canon (ty, i);
  }

  std::vector<Ideal> full_ideals (const Type& ty) {
    switch (ty.kind ()) {
      case Kind::nat:
        return {Ideal::omega_nat ()};
      case Kind::fin: {
        std::vector<Ideal> out;
        const std::size_t n = ty.carrier ().size ();
        for (std::size_t i = 0; i < n; ++i) {
          bool keep = true;
          for (std::size_t j = 0; j < n and keep; ++j) {
            if (j == i or not ty.symbol_leq (i, j))
              continue;
            // strictly above, or equivalent with a smaller index
            if (not ty.symbol_leq (j, i) or j < i)
              keep = false;
          }
          if (keep)
            out.push_back (Ideal::symbol (i));
        }
        return out;
      }
      case Kind::prod: {
        std::vector<std::vector<Ideal>> partial {{}};
        for (const auto& c : ty.children ()) {
          std::vector<std::vector<Ideal>> next;
          for (const auto& p : partial)
            for (const auto& f : full_ideals (c)) {
              auto q = p;
              q.push_back (f);
              next.push_back (std::move (q));
            }
          partial = std::move (next);
        }
        std::vector<Ideal> out;
        for (auto& p : partial)
          out.push_back (Ideal::tuple (std::move (p)));
        std::sort (out.begin (), out.end ());
        return out;
      }
      case Kind::sum: {
        std::vector<Ideal> out;
        for (std::size_t b = 0; b < ty.arity (); ++b)
          for (auto& f : full_ideals (ty.child (b)))
            out.push_back (Ideal::tag (b, std::move (f)));
        return out;
      }
      case Kind::star:
        return {Ideal::product ({Atom::repeat (full_ideals (ty.inner ()))})};
      case Kind::mset:
        return {Ideal::mset_product (full_ideals (ty.inner ()), {})};
    }
    return {};
  }

  std::vector<Value> denote_bounded (const Type& ty, const Ideal& i, std::size_t size_bound) {
    check_conforms (ty, i);
    std::vector<Value> out;
    for (auto& v : enumerate_values (ty, size_bound))
      if (detail::member (ty, v, i))
        out.push_back (std::move (v));
    return out;
  }
}
