// wqocover: ordering queries, down-set inclusion, cover computation and
// coverability checks from the command line.
//
// Exit status: 0 true/yes/complete, 1 false/no, 2 usage or input error,
// 3 unknown/budget exhausted, 4 forward and backward verdicts disagree.

#include <wqo/wqo.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace {

  using json = nlohmann::ordered_json;

  constexpr int exit_true = 0;
  constexpr int exit_false = 1;
  constexpr int exit_error = 2;
  constexpr int exit_unknown = 3;
  constexpr int exit_disagreement = 4;

  struct api_error : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  void check (int rc) {
    if (rc != WQO_OK) {
      std::string msg = wqo_last_error_message ();
      throw api_error (std::string (wqo_error_description (rc)) + (msg.empty () ? "" : ": " + msg));
    }
  }

  template <typename F>
  std::string fetch_string (F&& f) {
    std::size_t len = 0;
    int rc = f (nullptr, &len);
    if (rc != WQO_ERROR_INSUFFICIENT_BUFFER)
      check (rc);
    std::string s (len, '\0');
    check (f (s.data (), &len));
    s.resize (len - 1);
    return s;
  }

  // Owning wrapper around a C handle.
  template <typename T, int (*Destroy) (T)>
  class owned {
    public:
      owned () = default;
      owned (const owned&) = delete;
      owned& operator= (const owned&) = delete;
      ~owned () { if (h) Destroy (h); }

      T* out () { return &h; }
      T get () const { return h; }

    private:
      T h = nullptr;
  };

  using type_h = owned<wqo_type_t, wqo_type_destroy>;
  using downset_h = owned<wqo_downset_t, wqo_downset_destroy>;
  using model_h = owned<wqo_model_t, wqo_model_destroy>;
  using cover_h = owned<wqo_cover_result_t, wqo_cover_result_destroy>;

  std::string read_file (const std::string& path) {
    std::ifstream in (path, std::ios::binary);
    if (not in)
      throw api_error ("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf ();
    return ss.str ();
  }

  struct Options {
    std::string format = "text";
    std::string method = "forward";
    wqo_budget budget {};
    std::string type, lhs, rhs, value, model, init, target;
  };

  bool as_json (const Options& o) { return o.format == "json"; }

  void emit (const json& j) { std::cout << j.dump () << '\n'; }

  int cmd_leq (const Options& o) {
    type_h ty;
    check (wqo_type_parse (ty.out (), o.type.c_str ()));
    downset_h lhs, rhs;
    check (wqo_downset_parse (lhs.out (), ty.get (), o.lhs.c_str ()));
    check (wqo_downset_parse (rhs.out (), ty.get (), o.rhs.c_str ()));
    int result = 0;
    check (wqo_downset_leq (lhs.get (), rhs.get (), &result));
    if (as_json (o))
      emit ({{"command", "leq"}, {"result", result == 1}});
    else
      std::cout << (result ? "true" : "false") << '\n';
    return result ? exit_true : exit_false;
  }

  int cmd_member (const Options& o) {
    type_h ty;
    check (wqo_type_parse (ty.out (), o.type.c_str ()));
    downset_h d;
    check (wqo_downset_parse (d.out (), ty.get (), o.rhs.c_str ()));
    int result = 0;
    check (wqo_downset_member (d.get (), o.value.c_str (), &result));
    if (as_json (o))
      emit ({{"command", "member"}, {"result", result == 1}});
    else
      std::cout << (result ? "true" : "false") << '\n';
    return result ? exit_true : exit_false;
  }

  int cmd_cover (const Options& o) {
    model_h m;
    check (wqo_model_parse (m.out (), read_file (o.model).c_str ()));
    cover_h r;
    check (wqo_cover (r.out (), m.get (), o.init.c_str (), &o.budget));
    int status = 0;
    check (wqo_cover_result_status (r.get (), &status));
    const bool complete = status == WQO_COVER_COMPLETE;
    if (as_json (o)) {
      json body = json::parse (fetch_string ([&] (char* b, std::size_t* n) {
        return wqo_cover_result_to_json (r.get (), b, n);
      }));
      json out {{"command", "cover"}};
      for (auto& [k, v] : body.items ())
        out[k] = v;
      emit (out);
    } else {
      downset_h c;
      check (wqo_cover_result_cover (r.get (), c.out ()));
      std::cout << "status: " << (complete ? "complete" : "budget") << '\n'
                << "cover: " << fetch_string ([&] (char* b, std::size_t* n) {
                     return wqo_downset_to_string (c.get (), b, n);
                   }) << '\n';
    }
    return complete ? exit_true : exit_unknown;
  }

  const char* verdict_name (int v) {
    switch (v) {
      case WQO_VERDICT_YES: return "yes";
      case WQO_VERDICT_NO: return "no";
      default: return "unknown";
    }
  }

  const char* verdict_title (int v) {
    switch (v) {
      case WQO_VERDICT_YES: return "Yes";
      case WQO_VERDICT_NO: return "No";
      default: return "Unknown";
    }
  }

  int exit_of (int verdict) {
    switch (verdict) {
      case WQO_VERDICT_YES: return exit_true;
      case WQO_VERDICT_NO: return exit_false;
      default: return exit_unknown;
    }
  }

  int cmd_coverable (const Options& o) {
    model_h m;
    check (wqo_model_parse (m.out (), read_file (o.model).c_str ()));
    const bool forward = o.method != "backward";
    const bool backward = o.method != "forward";
    if (backward) {
      int petri = 0;
      check (wqo_model_is_petri (m.get (), &petri));
      if (not petri)
        throw CLI::ValidationError ("--method", "backward coverability needs a Petri net");
    }
    int fwd = WQO_VERDICT_UNKNOWN, bwd = WQO_VERDICT_UNKNOWN;
    if (forward)
      check (wqo_coverable (m.get (), o.init.c_str (), o.target.c_str (), WQO_METHOD_FORWARD, &o.budget, &fwd));
    if (backward)
      check (wqo_coverable (m.get (), o.init.c_str (), o.target.c_str (), WQO_METHOD_BACKWARD, &o.budget, &bwd));

    int verdict = backward ? bwd : fwd;
    bool disagree = forward and backward and fwd != WQO_VERDICT_UNKNOWN and fwd != bwd;
    if (as_json (o)) {
      json out {{"command", "coverable"}, {"verdict", verdict_name (verdict)}};
      if (forward and backward) {
        out["forward"] = verdict_name (fwd);
        out["backward"] = verdict_name (bwd);
        out["agree"] = not disagree;
      }
      emit (out);
    } else {
      std::cout << verdict_title (verdict) << '\n';
      if (forward and backward)
        std::cout << "forward: " << verdict_title (fwd) << '\n'
                  << "backward: " << verdict_title (bwd) << '\n';
    }
    if (disagree) {
      std::cerr << "error: forward and backward verdicts disagree\n";
      return exit_disagreement;
    }
    return exit_of (verdict);
  }

  void add_budget (CLI::App* cmd, Options& o) {
    cmd->add_option ("--max-rounds", o.budget.max_rounds, "Rounds of the cover procedure")
      ->check (CLI::PositiveNumber);
    cmd->add_option ("--max-composite-len", o.budget.max_composite_len, "Longest transition composite")
      ->check (CLI::PositiveNumber);
    cmd->add_option ("--max-adds", o.budget.max_adds, "Ideals added before giving up")
      ->check (CLI::PositiveNumber);
  }

  void add_format (CLI::App* cmd, Options& o) {
    cmd->add_option ("--format", o.format, "Output format")
      ->check (CLI::IsMember ({"text", "json"}));
  }
}

int main (int argc, char** argv) {
  Options o;
  wqo_budget_default (&o.budget);

  CLI::App app {"Down-closed sets over well-quasi-ordered data types, and covers of WSTS"};
  app.require_subcommand (1);

  auto* leq = app.add_subcommand ("leq", "Decide inclusion between two sums of ideals");
  leq->add_option ("type", o.type, "Data type")->required ();
  leq->add_option ("lhs", o.lhs, "Left-hand side")->required ();
  leq->add_option ("rhs", o.rhs, "Right-hand side")->required ();
  add_format (leq, o);

  auto* member = app.add_subcommand ("member", "Decide membership of a value in a sum of ideals");
  member->add_option ("type", o.type, "Data type")->required ();
  member->add_option ("value", o.value, "Value literal")->required ();
  member->add_option ("set", o.rhs, "Sum of ideals")->required ();
  add_format (member, o);

  auto* cover = app.add_subcommand ("cover", "Compute the cover of a model from an initial state");
  cover->add_option ("model", o.model, "Model file")->required ();
  cover->add_option ("init", o.init, "Initial state literal")->required ();
  add_budget (cover, o);
  add_format (cover, o);

  auto* coverable = app.add_subcommand ("coverable", "Decide whether a target state is coverable");
  coverable->add_option ("model", o.model, "Model file")->required ();
  coverable->add_option ("init", o.init, "Initial state literal")->required ();
  coverable->add_option ("target", o.target, "Target state literal")->required ();
  coverable->add_option ("--method", o.method, "forward, backward or both")
    ->check (CLI::IsMember ({"forward", "backward", "both"}));
  add_budget (coverable, o);
  add_format (coverable, o);

  try {
    app.parse (argc, argv);
  }
  catch (const CLI::Success& e) {
    return app.exit (e);
  }
  catch (const CLI::ParseError& e) {
    app.exit (e);
    return exit_error;
  }

  try {
    if (leq->parsed ())
      return cmd_leq (o);
    if (member->parsed ())
      return cmd_member (o);
    if (cover->parsed ())
      return cmd_cover (o);
    return cmd_coverable (o);
  }
  catch (const std::exception& e) {
    std::cerr << "error: " << e.what () << '\n';
    return exit_error;
  }
}
