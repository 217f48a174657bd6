#include <wqo/engine.hpp>
#include <wqo/error.hpp>

#include <algorithm>

namespace wqo {

  const char* to_string (CoverStatus s) {
    return s == CoverStatus::complete ? "complete" : "budget";
  }

  const char* to_string (Verdict v) {
    switch (v) {
      case Verdict::yes: return "yes";
      case Verdict::no: return "no";
      case Verdict::unknown: return "unknown";
    }
    return "unknown";
  }

  namespace {
    std::optional<Ideal> lift_checked (const Model& model, std::size_t t, const Ideal& c) {
      auto r = model.transitions.at (t).lift (c);
      if (r)
        if (auto e = conformance_error (model.state_type, *r))
          throw ModelIntegrityError ("transition " + model.transitions[t].name
                                     + " produced a non-conforming ideal at " + *e);
      return r;
    }
  }

  DownSet post_hat (const Model& model, const DownSet& f) {
    if (not (f.type () == model.state_type))
      throw TypeMismatch ("down-set type differs from the model state type");
    DownSet out (model.state_type);
    for (std::size_t t = 0; t < model.transitions.size (); ++t)
      for (const auto& c : f.parts ())
        if (auto r = lift_checked (model, t, c))
          out.insert (std::move (*r));
    return out;
  }

  std::optional<Ideal> apply_composite (const Model& model, const Composite& g, const Ideal& a) {
    std::optional<Ideal> cur = a;
    for (auto t : g) {
      cur = lift_checked (model, t, *cur);
      if (not cur)
        return std::nullopt;
    }
    return cur;
  }

  Acceleration accelerate (const Model& model, const Composite& g, const Ideal& a, std::size_t max_iterations) {
    const Type& ty = model.state_type;
    auto ga = apply_composite (model, g, a);
    if (not ga)
      throw UndefinedComposite ("ideal is outside the domain of the composite");
    if (not detail::leq (ty, a, *ga) or detail::leq (ty, *ga, a))
      return {std::move (*ga)};

    LiftedMap gm = [&] (const Ideal& y) { return apply_composite (model, g, y); };
    if (model.widen)
      if (auto w = model.widen (a, *ga, gm))
        return {canonicalize (ty, *w), true, true};

    // The chain a < g(a) <= g²(a) <= ... stays in dom g (upward closed).
    Ideal cur = std::move (*ga);
    for (std::size_t k = 0; k < max_iterations; ++k) {
      auto next = gm (cur);
      if (not next or detail::leq (ty, *next, cur))
        return {std::move (cur)};
      cur = std::move (*next);
    }
    return {std::move (cur), false, false};
  }

  namespace {
    struct Run {
      CoverResult result;
      bool stopped = false;
    };

    // Composites of length `len` over n transitions in lexicographic order.
    template <typename F>
    bool for_each_composite (std::size_t n, std::size_t len, F&& f) {
      if (n == 0)
        return true;
      Composite g (len, 0);
      while (true) {
        if (not f (g))
          return false;
        std::size_t k = len;
        while (k > 0 and g[k - 1] + 1 == n)
          g[--k] = 0;
        if (k == 0)
          return true;
        ++g[k - 1];
      }
    }

    Run run_cover (const Model& model, const Value& x0, const Budget& budget,
                   const std::function<bool (const DownSet&)>& stop) {
      const Type& ty = model.state_type;
      Run run {CoverResult {DownSet (ty), CoverStatus::budget_exhausted, {}}};
      DownSet& a = run.result.cover;
      CoverStats& stats = run.result.stats;
      a.insert (principal (ty, x0));
      if (stop and stop (a)) {
        run.stopped = true;
        return run;
      }

      const std::size_t n = model.transitions.size ();
      for (std::size_t round = 1; round <= budget.max_rounds; ++round) {
        stats.rounds = round;
        if (downset_leq (post_hat (model, a), a)) {
          run.result.status = CoverStatus::complete;
          return run;
        }
        const std::vector<Ideal> snapshot (a.parts ().begin (), a.parts ().end ());
        const std::size_t max_len = std::min (round, budget.max_composite_len);
        bool go_on = true;
        for (std::size_t len = 1; len <= max_len and go_on; ++len) {
          go_on = for_each_composite (n, len, [&] (const Composite& g) {
            for (const auto& part : snapshot) {
              ++stats.composites_explored;
              if (not apply_composite (model, g, part))
                continue;
              Acceleration acc = accelerate (model, g, part, budget.max_iterations);
              if (acc.widened)
                ++stats.accelerations;
              if (not acc.converged)
                ++stats.non_converged;
              if (a.insert (std::move (acc.result))) {
                ++stats.adds;
                if (stop and stop (a)) {
                  run.stopped = true;
                  return false;
                }
                if (stats.adds >= budget.max_adds)
                  return false;
              }
            }
            return true;
          });
        }
        if (run.stopped or stats.adds >= budget.max_adds)
          return run;
      }
      if (downset_leq (post_hat (model, a), a))
        run.result.status = CoverStatus::complete;
      return run;
    }
  }

  CoverResult cover (const Model& model, const Value& x0, const Budget& budget) {
    return run_cover (model, x0, budget, {}).result;
  }

  Verdict coverable_forward (const Model& model, const Value& x0, const Value& y, const Budget& budget) {
    check_conforms (model.state_type, y);
    Run run = run_cover (model, x0, budget, [&] (const DownSet& a) { return downset_member (y, a); });
    if (run.stopped)
      return Verdict::yes;
    return run.result.status == CoverStatus::complete ? Verdict::no : Verdict::unknown;
  }
}
