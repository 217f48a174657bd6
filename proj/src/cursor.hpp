#pragma once

#include <wqo/error.hpp>

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

namespace wqo::detail {

  // Character cursor for the hand-written recursive-descent parsers.
  // `line_offset`/`column_offset` place the text inside a larger file.
  class Cursor {
    public:
      explicit Cursor (std::string_view text, std::size_t line_offset = 0, std::size_t column_offset = 0)
        : text (text), line_offset (line_offset), column_offset (column_offset) {}

      void skip_ws () {
        while (pos < text.size () and std::isspace (static_cast<unsigned char> (text[pos])))
          ++pos;
      }

      bool at_end () {
        skip_ws ();
        return pos >= text.size ();
      }

      char peek () {
        skip_ws ();
        return pos < text.size () ? text[pos] : '\0';
      }

      // Next character without skipping whitespace.
      char peek_raw () const { return pos < text.size () ? text[pos] : '\0'; }

      bool accept (char c) {
        if (peek () != c)
          return false;
        ++pos;
        return true;
      }

      bool accept (std::string_view s) {
        skip_ws ();
        if (text.substr (pos, s.size ()) != s)
          return false;
        pos += s.size ();
        return true;
      }

      void expect (char c) {
        if (not accept (c))
          fail (std::string ("expected '") + c + "'");
      }

      void expect (std::string_view s) {
        if (not accept (s))
          fail ("expected '" + std::string (s) + "'");
      }

      static bool ident_start (char c) {
        return std::isalpha (static_cast<unsigned char> (c)) or c == '_';
      }

      static bool ident_char (char c) {
        return std::isalnum (static_cast<unsigned char> (c)) or c == '_';
      }

      bool at_ident () { return ident_start (peek ()); }
      bool at_digit () { return std::isdigit (static_cast<unsigned char> (peek ())); }

      std::string identifier () {
        if (not at_ident ())
          fail ("expected identifier");
        std::size_t start = pos;
        while (pos < text.size () and ident_char (text[pos]))
          ++pos;
        return std::string (text.substr (start, pos - start));
      }

      // Identifier at the cursor, without consuming it.
      std::string_view peek_identifier () {
        if (not at_ident ())
          return {};
        std::size_t end = pos;
        while (end < text.size () and ident_char (text[end]))
          ++end;
        return text.substr (pos, end - pos);
      }

      std::uint64_t number () {
        if (not at_digit ())
          fail ("expected number");
        std::uint64_t out = 0;
        auto [ptr, ec] = std::from_chars (text.data () + pos, text.data () + text.size (), out);
        if (ec != std::errc ())
          fail ("number out of range");
        pos = static_cast<std::size_t> (ptr - text.data ());
        return out;
      }

      void expect_end () {
        if (not at_end ())
          fail ("unexpected trailing input");
      }

      [[noreturn]] void fail (const std::string& msg) const { fail_at (pos, msg); }

      [[noreturn]] void fail_at (std::size_t at, const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k < at and k < text.size (); ++k) {
          if (text[k] == '\n') {
            ++line;
            col = 1;
          } else
            ++col;
        }
        if (line == 1)
          col += column_offset;
        throw SyntaxError (msg, line + line_offset, col);
      }

      std::size_t pos = 0;

    private:
      std::string_view text;
      std::size_t line_offset, column_offset;
  };
}
