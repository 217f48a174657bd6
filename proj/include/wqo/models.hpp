#pragma once

#include <wqo/engine.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wqo {

  using Marking = std::vector<std::uint64_t>;

  struct PetriTransition {
    std::string name;
    Marking pre, post;
  };

  /// Place/transition net.  A transition fires when the marking dominates
  /// `pre` and replaces `pre` by `post`.
  struct PetriNet {
    std::size_t places = 0;
    std::vector<PetriTransition> transitions;
  };

  /// ℕ^k as a product of k naturals.
  Type petri_state_type (std::size_t places);

  std::optional<Marking> petri_step (const PetriNet& net, const Marking& m, std::size_t t);

  /// The step on ω-markings (k-tuples of nat ideals), ω absorbing.
  std::optional<Ideal> petri_lift (const PetriNet& net, std::size_t t, const Ideal& i);

  Model make_model (const PetriNet& net);

  struct FlcsTransition {
    enum class Op { send, recv };
    std::string name;
    Op op;
    std::size_t letter;  // index into the alphabet
  };

  /// Functional-lossy channel system: one channel, no control state.  A
  /// receive of `a` drops the shortest prefix ending with `a`.
  struct Flcs {
    std::vector<std::string> alphabet;
    std::vector<FlcsTransition> transitions;
  };

  /// Words over the alphabet with equality on letters.
  Type flcs_state_type (const Flcs& sys);

  std::optional<Value> flcs_step (const Flcs& sys, const Value& w, std::size_t t);

  /// The step on word products.
  std::optional<Ideal> flcs_lift (const Flcs& sys, std::size_t t, const Ideal& p);

  Model make_model (const Flcs& sys);

  Marking marking_of (const Value& v);
  Value value_of (const Marking& m);

  struct ParsedModel {
    std::variant<PetriNet, Flcs> source;
    Model model;

    bool is_petri () const { return std::holds_alternative<PetriNet> (source); }
  };

  /// Reads the line-oriented model format:
  ///
  ///     petri places=2
  ///     trans t1 pre=(1,0) post=(0,2)
  ///
  ///     flcs alphabet={a,b}
  ///     trans s1 send a
  ///     trans r1 recv a
  ///
  /// `#` starts a comment.  Throws SyntaxError or SemanticError.
  ParsedModel parse_model (std::string_view text);
}
