#include <wqo/value.hpp>
#include <wqo/error.hpp>

#include "matching.hpp"

#include <algorithm>
#include <map>

namespace wqo {

  Value Value::tag (std::size_t branch, Value v) {
    Value out {Kind::sum, branch, {}};
    out.items.push_back (std::move (v));
    return out;
  }

  Value Value::bag (std::vector<Value> elems) {
    std::sort (elems.begin (), elems.end ());
    return {Kind::mset, 0, std::move (elems)};
  }

  int compare (const Value& a, const Value& b) {
    if (a.kind != b.kind)
      return a.kind < b.kind ? -1 : 1;
    if (a.num != b.num)
      return a.num < b.num ? -1 : 1;
    if (a.items.size () != b.items.size ())
      return a.items.size () < b.items.size () ? -1 : 1;
    for (std::size_t i = 0; i < a.items.size (); ++i)
      if (int c = compare (a.items[i], b.items[i]); c != 0)
        return c;
    return 0;
  }

  namespace {
    std::optional<std::string> conf (const Type& ty, const Value& v, const std::string& path) {
      if (ty.kind () != v.kind)
        return path;
      switch (ty.kind ()) {
        case Kind::nat:
          return std::nullopt;
        case Kind::fin:
          if (v.num >= ty.carrier ().size ())
            return path;
          return std::nullopt;
        case Kind::prod:
          if (v.items.size () != ty.arity ())
            return path;
          for (std::size_t i = 0; i < ty.arity (); ++i)
            if (auto e = conf (ty.child (i), v.items[i], path + "." + std::to_string (i)))
              return e;
          return std::nullopt;
        case Kind::sum:
          if (v.num >= ty.arity () or v.items.size () != 1)
            return path;
          return conf (ty.child (v.num), v.items[0], path + "#" + std::to_string (v.num));
        case Kind::star:
        case Kind::mset:
          for (std::size_t i = 0; i < v.items.size (); ++i)
            if (auto e = conf (ty.inner (), v.items[i], path + "[" + std::to_string (i) + "]"))
              return e;
          if (ty.kind () == Kind::mset and not std::is_sorted (v.items.begin (), v.items.end ()))
            return path;
          return std::nullopt;
      }
      return path;
    }

    bool leq_unchecked (const Type& ty, const Value& a, const Value& b) {
      switch (ty.kind ()) {
        case Kind::nat:
          return a.num <= b.num;
        case Kind::fin:
          return ty.symbol_leq (a.num, b.num);
        case Kind::prod:
          for (std::size_t i = 0; i < ty.arity (); ++i)
            if (not leq_unchecked (ty.child (i), a.items[i], b.items[i]))
              return false;
          return true;
        case Kind::sum:
          return a.num == b.num and leq_unchecked (ty.child (a.num), a.items[0], b.items[0]);
        case Kind::star: {
          // Leftmost greedy embedding is optimal for subword embedding.
          std::size_t j = 0;
          for (const auto& letter : a.items) {
            while (j < b.items.size () and not leq_unchecked (ty.inner (), letter, b.items[j]))
              ++j;
            if (j == b.items.size ())
              return false;
            ++j;
          }
          return true;
        }
        case Kind::mset: {
          detail::BipartiteMatcher m (a.items.size (), b.items.size ());
          for (std::size_t i = 0; i < a.items.size (); ++i)
            for (std::size_t j = 0; j < b.items.size (); ++j)
              if (leq_unchecked (ty.inner (), a.items[i], b.items[j]))
                m.add_edge (i, j);
          return m.saturates_left ();
        }
      }
      return false;
    }
  }

  std::optional<std::string> conformance_error (const Type& ty, const Value& v) {
    return conf (ty, v, "$");
  }

  void check_conforms (const Type& ty, const Value& v) {
    if (auto e = conformance_error (ty, v))
      throw ShapeError ("value does not conform to its type at " + *e);
  }

  bool value_leq (const Type& ty, const Value& a, const Value& b) {
    check_conforms (ty, a);
    check_conforms (ty, b);
    return leq_unchecked (ty, a, b);
  }

  std::size_t value_size (const Value& v) {
    switch (v.kind) {
      case Kind::nat:
        return v.num + 1;
      case Kind::fin:
        return 1;
      default: {
        std::size_t s = 1;
        for (const auto& c : v.items)
          s += value_size (c);
        return s;
      }
    }
  }

  namespace {
    class Enumerator {
      public:
        // Values of `ty` with size exactly `s`.
        const std::vector<Value>& exact (const Type& ty, std::size_t s) {
          auto key = std::make_pair (ty.id (), s);
          if (auto it = memo.find (key); it != memo.end ())
            return it->second;
          std::vector<Value> out;
          build (ty, s, out);
          return memo.emplace (key, std::move (out)).first->second;
        }

      private:
        void build (const Type& ty, std::size_t s, std::vector<Value>& out) {
          if (s == 0)
            return;
          switch (ty.kind ()) {
            case Kind::nat:
              out.push_back (Value::nat (s - 1));
              return;
            case Kind::fin:
              if (s == 1)
                for (std::size_t i = 0; i < ty.carrier ().size (); ++i)
                  out.push_back (Value::symbol (i));
              return;
            case Kind::prod: {
              std::vector<Value> partial;
              tuples (ty, 0, s - 1, partial, out);
              return;
            }
            case Kind::sum:
              for (std::size_t b = 0; b < ty.arity (); ++b)
                for (const auto& v : exact (ty.child (b), s - 1))
                  out.push_back (Value::tag (b, v));
              return;
            case Kind::star:
            case Kind::mset: {
              std::vector<Value> partial;
              sequences (ty.inner (), s - 1, ty.kind () == Kind::mset, partial, out, ty.kind ());
              return;
            }
          }
        }

        void tuples (const Type& ty, std::size_t i, std::size_t remaining,
                     std::vector<Value>& partial, std::vector<Value>& out) {
          if (i == ty.arity ()) {
            if (remaining == 0)
              out.push_back (Value::tuple (partial));
            return;
          }
          const std::size_t left = ty.arity () - i - 1;
          for (std::size_t k = 1; k + left <= remaining; ++k) {
            for (const auto& v : exact (ty.child (i), k)) {
              partial.push_back (v);
              tuples (ty, i + 1, remaining - k, partial, out);
              partial.pop_back ();
            }
          }
        }

        void sequences (const Type& inner, std::size_t remaining, bool sorted,
                        std::vector<Value>& partial, std::vector<Value>& out, Kind kind) {
          if (remaining == 0) {
            out.push_back (Value {kind, 0, partial});
            return;
          }
          for (std::size_t k = 1; k <= remaining; ++k) {
            for (const auto& v : exact (inner, k)) {
              if (sorted and not partial.empty () and v < partial.back ())
                continue;
              partial.push_back (v);
              sequences (inner, remaining - k, sorted, partial, out, kind);
              partial.pop_back ();
            }
          }
        }

        std::map<std::pair<const void*, std::size_t>, std::vector<Value>> memo;
    };
  }

  std::vector<Value> enumerate_values (const Type& ty, std::size_t size_bound) {
    Enumerator e;
    std::vector<Value> out;
    for (std::size_t s = 1; s <= size_bound; ++s) {
      const auto& layer = e.exact (ty, s);
      out.insert (out.end (), layer.begin (), layer.end ());
    }
    return out;
  }
}
