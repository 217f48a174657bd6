#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wqo {

  enum class ErrorCode {
    shape_mismatch = 1,
    type_mismatch,
    syntax,
    semantic,
    model_integrity,
    undefined_composite,
    usage,
  };

  class Error : public std::runtime_error {
    public:
      Error (ErrorCode code, const std::string& what)
        : std::runtime_error (what), _code (code) {}

      ErrorCode code () const noexcept { return _code; }

    private:
      ErrorCode _code;
  };

  // A value or ideal does not conform to the type it was used with.  The
  // message names the offending path, e.g. "$.1[2]".
  class ShapeError : public Error {
    public:
      explicit ShapeError (const std::string& what)
        : Error (ErrorCode::shape_mismatch, what) {}
  };

  class TypeMismatch : public Error {
    public:
      explicit TypeMismatch (const std::string& what)
        : Error (ErrorCode::type_mismatch, what) {}
  };

  // Positions are 1-based.
  class SyntaxError : public Error {
    public:
      SyntaxError (const std::string& msg, std::size_t line, std::size_t column)
        : Error (ErrorCode::syntax, std::to_string (line) + ":" + std::to_string (column) + ": " + msg),
          _line (line), _column (column) {}

      std::size_t line () const noexcept { return _line; }
      std::size_t column () const noexcept { return _column; }

    private:
      std::size_t _line, _column;
  };

  class SemanticError : public Error {
    public:
      explicit SemanticError (const std::string& what)
        : Error (ErrorCode::semantic, what) {}
  };

  class ModelIntegrityError : public Error {
    public:
      explicit ModelIntegrityError (const std::string& what)
        : Error (ErrorCode::model_integrity, what) {}
  };

  class UndefinedComposite : public Error {
    public:
      explicit UndefinedComposite (const std::string& what)
        : Error (ErrorCode::undefined_composite, what) {}
  };
}
