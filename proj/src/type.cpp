#include <wqo/type.hpp>

#include <algorithm>
#include <set>

namespace wqo {

  Type Type::nat () {
    return Type (std::make_shared<const Node> (Node {Kind::nat, {}, {}, {}}));
  }

  Type Type::fin (std::vector<std::string> carrier, std::vector<std::vector<bool>> leq) {
    return Type (std::make_shared<const Node> (Node {Kind::fin, std::move (carrier), std::move (leq), {}}));
  }

  Type Type::fin_generated (std::vector<std::string> carrier,
                            const std::vector<std::pair<std::size_t, std::size_t>>& lt) {
    const std::size_t n = carrier.size ();
    std::vector<std::vector<bool>> leq (n, std::vector<bool> (n, false));
    for (std::size_t i = 0; i < n; ++i)
      leq[i][i] = true;
    for (auto [a, b] : lt)
      leq[a][b] = true;
    // Warshall
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[k][j])
              leq[i][j] = true;
    return fin (std::move (carrier), std::move (leq));
  }

  Type Type::fin_discrete (std::vector<std::string> carrier) {
    return fin_generated (std::move (carrier), {});
  }

  Type Type::prod (std::vector<Type> components) {
    return Type (std::make_shared<const Node> (Node {Kind::prod, {}, {}, std::move (components)}));
  }

  Type Type::sum (std::vector<Type> branches) {
    return Type (std::make_shared<const Node> (Node {Kind::sum, {}, {}, std::move (branches)}));
  }

  Type Type::star (Type inner) {
    return Type (std::make_shared<const Node> (Node {Kind::star, {}, {}, {std::move (inner)}}));
  }

  Type Type::mset (Type inner) {
    return Type (std::make_shared<const Node> (Node {Kind::mset, {}, {}, {std::move (inner)}}));
  }

  std::ptrdiff_t Type::symbol_index (const std::string& symbol) const {
    const auto& c = node->carrier;
    auto it = std::find (c.begin (), c.end (), symbol);
    return it == c.end () ? -1 : it - c.begin ();
  }

  bool operator== (const Type& a, const Type& b) {
    if (a.node == b.node)
      return true;
    if (a.kind () != b.kind ())
      return false;
    return a.node->carrier == b.node->carrier
      and a.node->leq == b.node->leq
      and a.node->children == b.node->children;
  }

  namespace {
    void validate (const Type& ty, const std::string& path, std::vector<TypeViolation>& out) {
      switch (ty.kind ()) {
        case Kind::nat:
          return;
        case Kind::fin: {
          const auto& c = ty.carrier ();
          const auto& t = ty.table ();
          if (c.empty ())
            out.push_back ({path, "empty carrier"});
          std::set<std::string> seen;
          for (const auto& s : c)
            if (not seen.insert (s).second)
              out.push_back ({path, "duplicate symbol " + s});
          bool square = t.size () == c.size ();
          for (const auto& row : t)
            square = square and row.size () == c.size ();
          if (not square) {
            out.push_back ({path, "relation table is not " + std::to_string (c.size ()) + "x" + std::to_string (c.size ())});
            return;
          }
          for (std::size_t i = 0; i < c.size (); ++i)
            if (not t[i][i])
              out.push_back ({path, "non-reflexive at " + c[i]});
          for (std::size_t i = 0; i < c.size (); ++i)
            for (std::size_t j = 0; j < c.size (); ++j)
              for (std::size_t k = 0; k < c.size (); ++k)
                if (t[i][j] and t[j][k] and not t[i][k])
                  out.push_back ({path, "non-transitive " + c[i] + "," + c[j] + "," + c[k]});
          return;
        }
        case Kind::prod:
        case Kind::sum:
          if (ty.children ().empty ())
            out.push_back ({path, ty.kind () == Kind::prod ? "empty product" : "empty sum"});
          for (std::size_t i = 0; i < ty.arity (); ++i)
            validate (ty.child (i), path + "." + std::to_string (i), out);
          return;
        case Kind::star:
        case Kind::mset:
          validate (ty.inner (), path + ".inner", out);
          return;
      }
    }
  }

  std::vector<TypeViolation> validate_type (const Type& ty) {
    std::vector<TypeViolation> out;
    validate (ty, "$", out);
    return out;
  }

  std::size_t depth (const Type& ty) {
    std::size_t d = 0;
    for (const auto& c : ty.children ())
      d = std::max (d, depth (c) + 1);
    return d;
  }
}
