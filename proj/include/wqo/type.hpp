#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace wqo {

  /// Constructors of the data-type grammar
  ///   D ::= nat | A_<= | D x ... x D | D + ... + D | D* | D@
  enum class Kind : std::uint8_t { nat, fin, prod, sum, star, mset };

  /// Immutable data-type expression.  Copies share structure.
  class Type {
    public:
      static Type nat ();
      /// Finite quasi-order given by a full relation table; `leq[i][j]` means
      /// carrier[i] <= carrier[j].  No closure is applied, so validate().
      static Type fin (std::vector<std::string> carrier, std::vector<std::vector<bool>> leq);
      /// Finite quasi-order generated by the strict pairs `lt` (indices into
      /// the carrier): reflexive-transitive closure is applied.
      static Type fin_generated (std::vector<std::string> carrier,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& lt);
      /// Equality order on the carrier.
      static Type fin_discrete (std::vector<std::string> carrier);
      static Type prod (std::vector<Type> components);
      static Type sum (std::vector<Type> branches);
      static Type star (Type inner);
      static Type mset (Type inner);

      Kind kind () const { return node->kind; }

      // Fin
      const std::vector<std::string>& carrier () const { return node->carrier; }
      bool symbol_leq (std::size_t a, std::size_t b) const { return node->leq[a][b]; }
      const std::vector<std::vector<bool>>& table () const { return node->leq; }
      /// Index of `symbol` in the carrier, or -1.
      std::ptrdiff_t symbol_index (const std::string& symbol) const;

      // Prod / Sum
      const std::vector<Type>& children () const { return node->children; }
      const Type& child (std::size_t i) const { return node->children[i]; }
      std::size_t arity () const { return node->children.size (); }

      // Star / MSet
      const Type& inner () const { return node->children[0]; }

      /// Structural equality.
      friend bool operator== (const Type& a, const Type& b);

      /// Identity of the shared node, usable as a memo key.
      const void* id () const { return node.get (); }

    private:
      struct Node {
        Kind kind;
        std::vector<std::string> carrier;
        std::vector<std::vector<bool>> leq;
        std::vector<Type> children;
      };

      explicit Type (std::shared_ptr<const Node> n) : node (std::move (n)) {}

      std::shared_ptr<const Node> node;
  };

  /// One violation of a type invariant, naming the offending node by path
  /// ("$" is the root, ".i" the i-th child, ".inner" the argument of * and @).
  struct TypeViolation {
    std::string path;
    std::string message;
  };

  std::vector<TypeViolation> validate_type (const Type& ty);

  /// Number of constructor levels; leaves have depth 0.
  std::size_t depth (const Type& ty);
}
