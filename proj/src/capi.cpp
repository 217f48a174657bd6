#include <wqo/wqo.h>

#include <wqo/backward.hpp>
#include <wqo/error.hpp>
#include <wqo/json_io.hpp>
#include <wqo/models.hpp>
#include <wqo/syntax.hpp>

#include <cstdint>
#include <cstring>
#include <memory>
#include <string>

namespace {

  thread_local std::string last_error;

  template <typename T, std::uint32_t MAGIC>
  struct handle {
    static constexpr std::uint32_t magic_value = MAGIC;

    explicit handle (T obj) : magic (MAGIC), obj (std::move (obj)) {}
    ~handle () { magic = 0; }

    std::uint32_t magic;
    T obj;
  };

  struct invalid_object : std::runtime_error {
    invalid_object () : std::runtime_error ("invalid object handle") {}
  };

  struct null_argument : std::runtime_error {
    explicit null_argument (const char* what) : std::runtime_error (std::string ("null argument ") + what) {}
  };

  struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  template <typename H>
  auto& get (H* h) {
    if (not h)
      throw null_argument ("handle");
    if (h->magic != H::magic_value)
      throw invalid_object ();
    return h->obj;
  }

  void require (const void* p, const char* name) {
    if (not p)
      throw null_argument (name);
  }

  int code_of (wqo::ErrorCode c) {
    switch (c) {
      case wqo::ErrorCode::shape_mismatch: return WQO_ERROR_SHAPE_MISMATCH;
      case wqo::ErrorCode::type_mismatch: return WQO_ERROR_TYPE_MISMATCH;
      case wqo::ErrorCode::syntax: return WQO_ERROR_SYNTAX;
      case wqo::ErrorCode::semantic: return WQO_ERROR_SEMANTIC;
      case wqo::ErrorCode::model_integrity: return WQO_ERROR_MODEL_INTEGRITY;
      case wqo::ErrorCode::undefined_composite: return WQO_ERROR_USAGE;
      case wqo::ErrorCode::usage: return WQO_ERROR_USAGE;
    }
    return WQO_ERROR_INTERNAL;
  }

  template <typename F>
  int guard (F&& f) {
    try {
      f ();
      last_error.clear ();
      return WQO_OK;
    }
    catch (const wqo::Error& e) {
      last_error = e.what ();
      return code_of (e.code ());
    }
    catch (const null_argument& e) {
      last_error = e.what ();
      return WQO_ERROR_NULL_POINTER;
    }
    catch (const invalid_object& e) {
      last_error = e.what ();
      return WQO_ERROR_INVALID_OBJECT;
    }
    catch (const usage_error& e) {
      last_error = e.what ();
      return WQO_ERROR_USAGE;
    }
    catch (const nlohmann::ordered_json::exception& e) {
      last_error = e.what ();
      return WQO_ERROR_SYNTAX;
    }
    catch (const std::exception& e) {
      last_error = e.what ();
      return WQO_ERROR_INTERNAL;
    }
    catch (...) {
      last_error = "unknown exception";
      return WQO_ERROR_INTERNAL;
    }
  }

  int write_string (const std::string& s, char* out, std::size_t* out_len) {
    if (not out_len) {
      last_error = "null argument out_len";
      return WQO_ERROR_NULL_POINTER;
    }
    const std::size_t needed = s.size () + 1;
    const std::size_t avail = *out_len;
    *out_len = needed;
    if (not out or avail < needed) {
      last_error = "buffer too small";
      return WQO_ERROR_INSUFFICIENT_BUFFER;
    }
    std::memcpy (out, s.c_str (), needed);
    last_error.clear ();
    return WQO_OK;
  }

  // Computes the string under guard, then hands it to write_string.
  template <typename F>
  int string_result (char* out, std::size_t* out_len, F&& f) {
    std::string s;
    if (int rc = guard ([&] { s = f (); }); rc != WQO_OK)
      return rc;
    return write_string (s, out, out_len);
  }

  wqo::Budget budget_of (const wqo_budget* b) {
    wqo::Budget out;
    if (b) {
      if (b->max_rounds == 0 or b->max_composite_len == 0 or b->max_adds == 0)
        throw usage_error ("budget fields must be at least 1");
      out.max_rounds = b->max_rounds;
      out.max_composite_len = b->max_composite_len;
      out.max_adds = b->max_adds;
    }
    return out;
  }

  wqo::Type checked_type (std::string_view text) {
    wqo::Type ty = wqo::parse_type (text);
    if (auto v = wqo::validate_type (ty); not v.empty ())
      throw wqo::SemanticError ("invalid type at " + v[0].path + ": " + v[0].message);
    return ty;
  }
}

struct wqo_type_struct : handle<wqo::Type, 0x7a11e001> {
  using handle::handle;
};

struct wqo_downset_struct : handle<wqo::DownSet, 0x7a11e002> {
  using handle::handle;
};

struct wqo_model_struct : handle<wqo::ParsedModel, 0x7a11e003> {
  using handle::handle;
};

struct wqo_cover_result_struct : handle<wqo::CoverResult, 0x7a11e004> {
  using handle::handle;
};

extern "C" {

const char* wqo_error_description (int code) {
  switch (code) {
    case WQO_OK: return "OK";
    case WQO_ERROR_NULL_POINTER: return "Null pointer argument";
    case WQO_ERROR_SYNTAX: return "Syntax error";
    case WQO_ERROR_SEMANTIC: return "Semantic error";
    case WQO_ERROR_SHAPE_MISMATCH: return "Value or ideal does not conform to its type";
    case WQO_ERROR_TYPE_MISMATCH: return "Operands have different types";
    case WQO_ERROR_USAGE: return "Invalid usage";
    case WQO_ERROR_INSUFFICIENT_BUFFER: return "Insufficient buffer space";
    case WQO_ERROR_MODEL_INTEGRITY: return "Model integrity error";
    case WQO_ERROR_INVALID_OBJECT: return "Invalid object handle";
    case WQO_ERROR_INTERNAL: return "Internal error";
  }
  return "Unknown error";
}

const char* wqo_last_error_message (void) {
  return last_error.c_str ();
}

int wqo_type_parse (wqo_type_t* out, const char* text) {
  return guard ([&] {
    require (out, "out");
    require (text, "text");
    *out = new wqo_type_struct (checked_type (text));
  });
}

int wqo_type_to_string (wqo_type_t type, char* out, size_t* out_len) {
  return string_result (out, out_len, [&] { return wqo::print_type (get (type)); });
}

int wqo_type_destroy (wqo_type_t type) {
  return guard ([&] {
    if (type) {
      get (type);
      delete type;
    }
  });
}

int wqo_value_leq (wqo_type_t type, const char* a, const char* b, int* result) {
  return guard ([&] {
    require (a, "a");
    require (b, "b");
    require (result, "result");
    const auto& ty = get (type);
    *result = wqo::value_leq (ty, wqo::parse_value (ty, a), wqo::parse_value (ty, b)) ? 1 : 0;
  });
}

int wqo_downset_parse (wqo_downset_t* out, wqo_type_t type, const char* sre) {
  return guard ([&] {
    require (out, "out");
    require (sre, "sre");
    *out = new wqo_downset_struct (wqo::parse_downset (get (type), sre));
  });
}

int wqo_downset_from_json (wqo_downset_t* out, const char* json) {
  return guard ([&] {
    require (out, "out");
    require (json, "json");
    *out = new wqo_downset_struct (wqo::downset_from_json (nlohmann::ordered_json::parse (json)));
  });
}

int wqo_downset_full (wqo_downset_t* out, wqo_type_t type) {
  return guard ([&] {
    require (out, "out");
    *out = new wqo_downset_struct (wqo::downset_full (get (type)));
  });
}

int wqo_downset_union (wqo_downset_t* out, wqo_downset_t a, wqo_downset_t b) {
  return guard ([&] {
    require (out, "out");
    *out = new wqo_downset_struct (wqo::downset_union (get (a), get (b)));
  });
}

int wqo_downset_leq (wqo_downset_t a, wqo_downset_t b, int* result) {
  return guard ([&] {
    require (result, "result");
    *result = wqo::downset_leq (get (a), get (b)) ? 1 : 0;
  });
}

int wqo_downset_member (wqo_downset_t d, const char* value, int* result) {
  return guard ([&] {
    require (value, "value");
    require (result, "result");
    const auto& ds = get (d);
    *result = wqo::downset_member (wqo::parse_value (ds.type (), value), ds) ? 1 : 0;
  });
}

int wqo_downset_size (wqo_downset_t d, size_t* parts) {
  return guard ([&] {
    require (parts, "parts");
    *parts = get (d).size ();
  });
}

int wqo_downset_to_string (wqo_downset_t d, char* out, size_t* out_len) {
  return string_result (out, out_len, [&] { return wqo::print_downset (get (d)); });
}

int wqo_downset_to_json (wqo_downset_t d, char* out, size_t* out_len) {
  return string_result (out, out_len, [&] { return wqo::downset_to_json (get (d)).dump (); });
}

int wqo_downset_destroy (wqo_downset_t d) {
  return guard ([&] {
    if (d) {
      get (d);
      delete d;
    }
  });
}

int wqo_model_parse (wqo_model_t* out, const char* text) {
  return guard ([&] {
    require (out, "out");
    require (text, "text");
    *out = new wqo_model_struct (wqo::parse_model (text));
  });
}

int wqo_model_is_petri (wqo_model_t model, int* result) {
  return guard ([&] {
    require (result, "result");
    *result = get (model).is_petri () ? 1 : 0;
  });
}

int wqo_model_state_type (wqo_model_t model, wqo_type_t* out) {
  return guard ([&] {
    require (out, "out");
    *out = new wqo_type_struct (get (model).model.state_type);
  });
}

int wqo_model_destroy (wqo_model_t model) {
  return guard ([&] {
    if (model) {
      get (model);
      delete model;
    }
  });
}

void wqo_budget_default (wqo_budget* budget) {
  if (not budget)
    return;
  wqo::Budget b;
  budget->max_rounds = b.max_rounds;
  budget->max_composite_len = b.max_composite_len;
  budget->max_adds = b.max_adds;
}

int wqo_cover (wqo_cover_result_t* out, wqo_model_t model, const char* init, const wqo_budget* budget) {
  return guard ([&] {
    require (out, "out");
    require (init, "init");
    const auto& m = get (model).model;
    wqo::Budget b = budget_of (budget);
    *out = new wqo_cover_result_struct (wqo::cover (m, wqo::parse_value (m.state_type, init), b));
  });
}

int wqo_cover_result_status (wqo_cover_result_t r, int* status) {
  return guard ([&] {
    require (status, "status");
    *status = get (r).status == wqo::CoverStatus::complete ? WQO_COVER_COMPLETE : WQO_COVER_BUDGET_EXHAUSTED;
  });
}

int wqo_cover_result_cover (wqo_cover_result_t r, wqo_downset_t* out) {
  return guard ([&] {
    require (out, "out");
    *out = new wqo_downset_struct (get (r).cover);
  });
}

int wqo_cover_result_to_json (wqo_cover_result_t r, char* out, size_t* out_len) {
  return string_result (out, out_len, [&] { return wqo::cover_result_to_json (get (r)).dump (); });
}

int wqo_cover_result_destroy (wqo_cover_result_t r) {
  return guard ([&] {
    if (r) {
      get (r);
      delete r;
    }
  });
}

int wqo_coverable (wqo_model_t model, const char* init, const char* target,
                   int method, const wqo_budget* budget, int* verdict) {
  return guard ([&] {
    require (init, "init");
    require (target, "target");
    require (verdict, "verdict");
    const auto& pm = get (model);
    const auto& m = pm.model;
    wqo::Budget b = budget_of (budget);
    wqo::Value x0 = wqo::parse_value (m.state_type, init);
    wqo::Value y = wqo::parse_value (m.state_type, target);
    if (method == WQO_METHOD_FORWARD) {
      switch (wqo::coverable_forward (m, x0, y, b)) {
        case wqo::Verdict::yes: *verdict = WQO_VERDICT_YES; break;
        case wqo::Verdict::no: *verdict = WQO_VERDICT_NO; break;
        case wqo::Verdict::unknown: *verdict = WQO_VERDICT_UNKNOWN; break;
      }
      return;
    }
    if (method != WQO_METHOD_BACKWARD)
      throw usage_error ("unknown method " + std::to_string (method));
    if (not pm.is_petri ())
      throw usage_error ("the backward method needs a Petri net");
    const auto& net = std::get<wqo::PetriNet> (pm.source);
    *verdict = wqo::coverable_backward (net, wqo::marking_of (x0), wqo::marking_of (y))
      ? WQO_VERDICT_YES : WQO_VERDICT_NO;
  });
}

}
