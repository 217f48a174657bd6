#include <wqo/syntax.hpp>
#include <wqo/error.hpp>

#include "cursor.hpp"

#include <algorithm>

namespace wqo {

  using detail::Cursor;

  // ---------------------------------------------------------------- types

  std::string print_type (const Type& ty) {
    switch (ty.kind ()) {
      case Kind::nat:
        return "nat";
      case Kind::fin: {
        const auto& c = ty.carrier ();
        std::string out = "fin{";
        for (std::size_t i = 0; i < c.size (); ++i)
          out += (i ? "," : "") + c[i];
        std::string rel;
        for (std::size_t i = 0; i < c.size (); ++i)
          for (std::size_t j = 0; j < c.size (); ++j)
            if (i != j and ty.symbol_leq (i, j))
              rel += (rel.empty () ? "" : ", ") + c[i] + "<" + c[j];
        if (not rel.empty ())
          out += " | " + rel;
        return out + "}";
      }
      case Kind::prod:
      case Kind::sum: {
        const char* sep = ty.kind () == Kind::prod ? " * " : " + ";
        std::string out = "(";
        for (std::size_t i = 0; i < ty.arity (); ++i)
          out += (i ? sep : "") + print_type (ty.child (i));
        if (ty.kind () == Kind::sum and ty.arity () == 1)
          out += " +";
        return out + ")";
      }
      case Kind::star:
        return print_type (ty.inner ()) + "*";
      case Kind::mset:
        return print_type (ty.inner ()) + "@";
    }
    return {};
  }

  namespace {
    class TypeParser {
      public:
        explicit TypeParser (std::string_view text) : cur (text) {}

        Type parse () {
          Type t = type ();
          cur.expect_end ();
          return t;
        }

      private:
        bool at_type_start () {
          char c = cur.peek ();
          return c == '(' or Cursor::ident_start (c);
        }

        Type type () {
          Type t = primary ();
          while (true) {
            if (cur.accept ('@')) {
              t = Type::mset (std::move (t));
              continue;
            }
            if (cur.peek () == '*') {
              // `*` followed by a type is the product separator
              std::size_t save = cur.pos;
              cur.accept ('*');
              if (at_type_start ()) {
                cur.pos = save;
                break;
              }
              t = Type::star (std::move (t));
              continue;
            }
            break;
          }
          return t;
        }

        Type primary () {
          if (cur.accept ('(')) {
            std::vector<Type> parts {type ()};
            if (cur.peek () == '*') {
              while (cur.accept ('*'))
                parts.push_back (type ());
              cur.expect (')');
              return Type::prod (std::move (parts));
            }
            if (cur.peek () == '+') {
              while (cur.accept ('+')) {
                if (cur.peek () == ')')
                  break;
                parts.push_back (type ());
              }
              cur.expect (')');
              return Type::sum (std::move (parts));
            }
            cur.expect (')');
            return Type::prod (std::move (parts));
          }
          std::size_t at = cur.pos;
          cur.skip_ws ();
          at = cur.pos;
          std::string kw = cur.identifier ();
          if (kw == "nat")
            return Type::nat ();
          if (kw == "fin")
            return fin ();
          cur.fail_at (at, "unknown type '" + kw + "'");
        }

        Type fin () {
          cur.expect ('{');
          std::vector<std::string> carrier;
          auto index_of = [&] (const std::string& s, std::size_t at) {
            auto it = std::find (carrier.begin (), carrier.end (), s);
            if (it == carrier.end ())
              cur.fail_at (at, "unknown symbol '" + s + "'");
            return static_cast<std::size_t> (it - carrier.begin ());
          };
          do {
            cur.skip_ws ();
            std::size_t at = cur.pos;
            std::string s = cur.identifier ();
            if (s == "empty")
              cur.fail_at (at, "'empty' is reserved");
            if (std::find (carrier.begin (), carrier.end (), s) != carrier.end ())
              cur.fail_at (at, "duplicate symbol '" + s + "'");
            carrier.push_back (std::move (s));
          } while (cur.accept (','));
          std::vector<std::pair<std::size_t, std::size_t>> lt;
          if (cur.accept ('|')) {
            do {
              cur.skip_ws ();
              std::size_t at = cur.pos;
              std::size_t a = index_of (cur.identifier (), at);
              cur.expect ('<');
              cur.skip_ws ();
              at = cur.pos;
              std::size_t b = index_of (cur.identifier (), at);
              lt.emplace_back (a, b);
            } while (cur.accept (','));
          }
          cur.expect ('}');
          return Type::fin_generated (std::move (carrier), lt);
        }

        Cursor cur;
    };
  }

  Type parse_type (std::string_view text) {
    return TypeParser (text).parse ();
  }

  // ---------------------------------------------------------------- values

  std::string print_value (const Type& ty, const Value& v) {
    check_conforms (ty, v);
    switch (ty.kind ()) {
      case Kind::nat:
        return std::to_string (v.num);
      case Kind::fin:
        return ty.carrier ()[v.num];
      case Kind::prod: {
        std::string out = "(";
        for (std::size_t i = 0; i < ty.arity (); ++i)
          out += (i ? ", " : "") + print_value (ty.child (i), v.items[i]);
        return out + ")";
      }
      case Kind::sum:
        return "#" + std::to_string (v.num + 1) + ":" + print_value (ty.child (v.num), v.items[0]);
      case Kind::star: {
        if (ty.inner ().kind () == Kind::star)
          throw SemanticError ("words of words have no literal form");
        std::string out = "\"";
        for (std::size_t i = 0; i < v.items.size (); ++i)
          out += (i ? " " : "") + print_value (ty.inner (), v.items[i]);
        return out + "\"";
      }
      case Kind::mset: {
        if (v.items.empty ())
          return "[||]";
        std::string out = "[| ";
        for (std::size_t i = 0; i < v.items.size (); ++i)
          out += (i ? ", " : "") + print_value (ty.inner (), v.items[i]);
        return out + " |]";
      }
    }
    return {};
  }

  namespace {
    std::size_t symbol (Cursor& cur, const Type& ty) {
      cur.skip_ws ();
      std::size_t at = cur.pos;
      std::string s = cur.identifier ();
      auto idx = ty.symbol_index (s);
      if (idx < 0)
        cur.fail_at (at, "unknown symbol '" + s + "'");
      return static_cast<std::size_t> (idx);
    }

    std::size_t branch (Cursor& cur, const Type& ty) {
      cur.expect ('#');
      cur.skip_ws ();
      std::size_t at = cur.pos;
      std::uint64_t k = cur.number ();
      if (k == 0 or k > ty.arity ())
        cur.fail_at (at, "branch " + std::to_string (k) + " out of range 1.." + std::to_string (ty.arity ()));
      cur.expect (':');
      return static_cast<std::size_t> (k - 1);
    }

    Value value (Cursor& cur, const Type& ty) {
      switch (ty.kind ()) {
        case Kind::nat:
          return Value::nat (cur.number ());
        case Kind::fin:
          return Value::symbol (symbol (cur, ty));
        case Kind::prod: {
          if (ty.arity () == 1 and cur.peek () != '(')
            return Value::tuple ({value (cur, ty.child (0))});
          cur.expect ('(');
          std::vector<Value> comps;
          for (std::size_t i = 0; i < ty.arity (); ++i) {
            if (i)
              cur.expect (',');
            comps.push_back (value (cur, ty.child (i)));
          }
          cur.expect (')');
          return Value::tuple (std::move (comps));
        }
        case Kind::sum: {
          std::size_t b = branch (cur, ty);
          return Value::tag (b, value (cur, ty.child (b)));
        }
        case Kind::star: {
          if (ty.inner ().kind () == Kind::star)
            cur.fail ("words of words have no literal form");
          cur.expect ('"');
          std::vector<Value> letters;
          while (not cur.accept ('"')) {
            if (cur.at_end ())
              cur.fail ("unterminated word literal");
            letters.push_back (value (cur, ty.inner ()));
          }
          return Value::word (std::move (letters));
        }
        case Kind::mset: {
          cur.expect ("[|");
          std::vector<Value> elems;
          if (not cur.accept ("|]")) {
            do
              elems.push_back (value (cur, ty.inner ()));
            while (cur.accept (','));
            cur.expect ("|]");
          }
          return Value::bag (std::move (elems));
        }
      }
      cur.fail ("unknown type constructor");
    }
  }

  Value parse_value (const Type& ty, std::string_view text) {
    Cursor cur (text);
    Value v = value (cur, ty);
    cur.expect_end ();
    return v;
  }

  // ---------------------------------------------------------------- ideals

  namespace {
    std::string operand (const Type& ty, const Ideal& i);

    std::string ideal_text (const Type& ty, const Ideal& i) {
      switch (ty.kind ()) {
        case Kind::nat:
          return i.omega ? "w" : std::to_string (i.num);
        case Kind::fin:
          return ty.carrier ()[i.num];
        case Kind::prod: {
          std::string out = "(";
          for (std::size_t k = 0; k < ty.arity (); ++k)
            out += (k ? ", " : "") + ideal_text (ty.child (k), i.items[k]);
          return out + ")";
        }
        case Kind::sum:
          return "#" + std::to_string (i.num + 1) + ":" + operand (ty.child (i.num), i.items[0]);
        case Kind::star: {
          if (i.atoms.empty ())
            return "eps";
          std::string out;
          for (std::size_t k = 0; k < i.atoms.size (); ++k) {
            const Atom& a = i.atoms[k];
            if (k)
              out += " ";
            if (a.star) {
              out += "{";
              for (std::size_t m = 0; m < a.ideals.size (); ++m)
                out += (m ? ", " : "") + ideal_text (ty.inner (), a.ideals[m]);
              out += "}*";
            } else
              out += operand (ty.inner (), a.ideals[0]) + "?";
          }
          return out;
        }
        case Kind::mset: {
          std::string out = "{";
          for (std::size_t m = 0; m < i.items.size (); ++m)
            out += (m ? ", " : "") + ideal_text (ty.inner (), i.items[m]);
          out += "}@ <";
          for (std::size_t m = 0; m < i.singles.size (); ++m)
            out += (m ? " " : "") + operand (ty.inner (), i.singles[m]) + "?";
          return out + ">";
        }
      }
      return {};
    }

    std::string operand (const Type& ty, const Ideal& i) {
      if (ty.kind () == Kind::star or ty.kind () == Kind::mset)
        return "(" + ideal_text (ty, i) + ")";
      return ideal_text (ty, i);
    }

    Ideal ideal (Cursor& cur, const Type& ty);

    // Operands of `?` and `#k:` whose type is a word or multiset type are
    // parenthesized.
    Ideal operand_ideal (Cursor& cur, const Type& ty) {
      if ((ty.kind () == Kind::star or ty.kind () == Kind::mset) and cur.accept ('(')) {
        Ideal out = ideal (cur, ty);
        cur.expect (')');
        return out;
      }
      return ideal (cur, ty);
    }

    bool at_operand (Cursor& cur) {
      char c = cur.peek ();
      return c == '(' or c == '#' or Cursor::ident_start (c)
        or std::isdigit (static_cast<unsigned char> (c));
    }

    Ideal word (Cursor& cur, const Type& ty) {
      const Type& inner = ty.inner ();
      if (cur.peek_identifier () == "eps") {
        std::size_t save = cur.pos;
        cur.identifier ();
        if (cur.peek () != '?')
          return Ideal::product ({});
        cur.pos = save;
      }
      std::vector<Atom> atoms;
      while (true) {
        if (cur.accept ('{')) {
          std::vector<Ideal> members;
          do
            members.push_back (ideal (cur, inner));
          while (cur.accept (','));
          cur.expect ('}');
          cur.expect ('*');
          atoms.push_back (Atom::repeat (std::move (members)));
        } else if (at_operand (cur)) {
          Ideal c = operand_ideal (cur, inner);
          cur.expect ('?');
          atoms.push_back (Atom::single (std::move (c)));
        } else
          break;
      }
      if (atoms.empty ())
        cur.fail ("expected word product");
      return Ideal::product (std::move (atoms));
    }

    Ideal ideal (Cursor& cur, const Type& ty) {
      switch (ty.kind ()) {
        case Kind::nat:
          if (cur.peek_identifier () == "w") {
            cur.identifier ();
            return Ideal::omega_nat ();
          }
          return Ideal::nat (cur.number ());
        case Kind::fin:
          return Ideal::symbol (symbol (cur, ty));
        case Kind::prod: {
          if (ty.arity () == 1 and cur.peek () != '(')
            return Ideal::tuple ({ideal (cur, ty.child (0))});
          cur.expect ('(');
          std::vector<Ideal> comps;
          for (std::size_t k = 0; k < ty.arity (); ++k) {
            if (k)
              cur.expect (',');
            comps.push_back (ideal (cur, ty.child (k)));
          }
          cur.expect (')');
          return Ideal::tuple (std::move (comps));
        }
        case Kind::sum: {
          std::size_t b = branch (cur, ty);
          return Ideal::tag (b, operand_ideal (cur, ty.child (b)));
        }
        case Kind::star:
          return word (cur, ty);
        case Kind::mset: {
          cur.expect ('{');
          std::vector<Ideal> star;
          if (not cur.accept ('}')) {
            do
              star.push_back (ideal (cur, ty.inner ()));
            while (cur.accept (','));
            cur.expect ('}');
          }
          cur.expect ('@');
          cur.expect ('<');
          std::vector<Ideal> singles;
          while (not cur.accept ('>')) {
            singles.push_back (operand_ideal (cur, ty.inner ()));
            cur.expect ('?');
          }
          return Ideal::mset_product (std::move (star), std::move (singles));
        }
      }
      cur.fail ("unknown type constructor");
    }
  }

  std::string print_ideal (const Type& ty, const Ideal& i) {
    check_conforms (ty, i);
    return ideal_text (ty, i);
  }

  Ideal parse_ideal (const Type& ty, std::string_view text) {
    Cursor cur (text);
    Ideal i = ideal (cur, ty);
    cur.expect_end ();
    return i;
  }

  std::vector<Ideal> parse_sre (const Type& ty, std::string_view text) {
    Cursor cur (text);
    if (cur.peek_identifier () == "empty") {
      cur.identifier ();
      cur.expect_end ();
      return {};
    }
    std::vector<Ideal> out;
    do
      out.push_back (ideal (cur, ty));
    while (cur.accept ('+'));
    cur.expect_end ();
    return out;
  }

  std::string print_sre (const Type& ty, std::span<const Ideal> parts) {
    if (parts.empty ())
      return "empty";
    std::string out;
    for (std::size_t k = 0; k < parts.size (); ++k)
      out += (k ? " + " : "") + print_ideal (ty, parts[k]);
    return out;
  }

  DownSet parse_downset (const Type& ty, std::string_view text) {
    return DownSet::from_ideals (ty, parse_sre (ty, text));
  }

  std::string print_downset (const DownSet& d) {
    return print_sre (d.type (), d.parts ());
  }
}
