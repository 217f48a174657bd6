#pragma once

#include <wqo/downset.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wqo {

  /// One partial monotonic transition of a well-structured transition system,
  /// together with its extension to ideals.
  struct Transition {
    std::string name;
    /// Concrete step; nullopt outside the (upward-closed) domain.
    std::function<std::optional<Value> (const Value&)> step;
    /// The step lifted to ideals: ↓step(C ∩ dom), or nullopt when C misses
    /// the domain.  Results are canonical.
    std::function<std::optional<Ideal> (const Ideal&)> lift;
  };

  using LiftedMap = std::function<std::optional<Ideal> (const Ideal&)>;

  /// Model-specific acceleration: given a and g(a) with a strictly below
  /// g(a), return the least upper bound of the chain g^k(a), or nullopt if
  /// this model cannot compute it for this loop.
  using Widening = std::function<std::optional<Ideal> (const Ideal& a, const Ideal& ga, const LiftedMap& g)>;

  struct Model {
    Type state_type;
    std::vector<Transition> transitions;
    Widening widen;
  };

  /// Composite of transitions, applied left to right.
  using Composite = std::vector<std::size_t>;

  struct Budget {
    std::size_t max_rounds = 64;
    std::size_t max_composite_len = 4;
    std::size_t max_adds = 4096;
    /// Length of the g^k(a) chain tried when no widening applies.
    std::size_t max_iterations = 32;
  };

  enum class CoverStatus { complete, budget_exhausted };

  struct CoverStats {
    std::size_t rounds = 0;
    std::size_t accelerations = 0;
    std::size_t composites_explored = 0;
    std::size_t adds = 0;
    std::size_t non_converged = 0;

    friend bool operator== (const CoverStats&, const CoverStats&) = default;
  };

  struct CoverResult {
    DownSet cover;
    CoverStatus status;
    CoverStats stats;
  };

  /// Union over transitions and parts of the lifted images.  Throws
  /// ModelIntegrityError if a lift returns a non-conforming ideal.
  DownSet post_hat (const Model& model, const DownSet& f);

  /// g(a) by sequential application, or nullopt if a ∉ dom g.
  std::optional<Ideal> apply_composite (const Model& model, const Composite& g, const Ideal& a);

  struct Acceleration {
    Ideal result;
    bool widened = false;    // the model widening was used
    bool converged = true;   // false: the g^k(a) chain did not stabilize
  };

  /// ḡ(a): the least upper bound of g^k(a) if a is strictly below g(a), and
  /// g(a) otherwise.  Throws UndefinedComposite when a ∉ dom g.
  Acceleration accelerate (const Model& model, const Composite& g, const Ideal& a,
                           std::size_t max_iterations = Budget {}.max_iterations);

  /// Generalized Karp–Miller procedure.  Starting from {↓x0}, each round r
  /// first stops if post_hat(A) ⊆ A, then visits every composite of length
  /// at most min(r, max_composite_len) (shortest first, lexicographic)
  /// against every part present at the start of the round, adding ḡ(a)
  /// whenever it is not already covered.
  CoverResult cover (const Model& model, const Value& x0, const Budget& budget = {});

  enum class Verdict { yes, no, unknown };

  /// y ∈ ↓Post*(↓x0): yes as soon as some intermediate cover contains y, no
  /// if the cover completes without it, unknown on budget exhaustion.
  Verdict coverable_forward (const Model& model, const Value& x0, const Value& y, const Budget& budget = {});

  const char* to_string (CoverStatus s);
  const char* to_string (Verdict v);
}
