#include <wqo/models.hpp>
#include <wqo/error.hpp>

#include "cursor.hpp"

#include <algorithm>
#include <set>

namespace wqo {

  using detail::Cursor;

  namespace {
    struct Line {
      std::size_t number;
      std::string_view text;
    };

    std::vector<Line> significant_lines (std::string_view text) {
      std::vector<Line> out;
      std::size_t number = 0;
      while (not text.empty ()) {
        ++number;
        auto nl = text.find ('\n');
        std::string_view line = text.substr (0, nl);
        text = nl == std::string_view::npos ? std::string_view {} : text.substr (nl + 1);
        if (auto hash = line.find ('#'); hash != std::string_view::npos)
          line = line.substr (0, hash);
        if (line.find_first_not_of (" \t\r") != std::string_view::npos)
          out.push_back ({number, line});
      }
      return out;
    }

    [[noreturn]] void semantic (const Line& l, const std::string& msg) {
      throw SemanticError ("line " + std::to_string (l.number) + ": " + msg);
    }

    Marking vector_literal (Cursor& cur) {
      Marking m;
      cur.expect ('(');
      do
        m.push_back (cur.number ());
      while (cur.accept (','));
      cur.expect (')');
      return m;
    }

    void keyword (Cursor& cur, std::string_view kw) {
      cur.skip_ws ();
      std::size_t at = cur.pos;
      if (cur.peek_identifier () != kw)
        cur.fail_at (at, "expected '" + std::string (kw) + "'");
      cur.identifier ();
    }

    PetriNet petri (Cursor& header, const std::vector<Line>& lines) {
      PetriNet net;
      keyword (header, "places");
      header.expect ('=');
      net.places = header.number ();
      header.expect_end ();
      if (net.places == 0)
        semantic (lines[0], "a net needs at least one place");
      std::set<std::string> names;
      for (std::size_t k = 1; k < lines.size (); ++k) {
        Cursor cur (lines[k].text, lines[k].number - 1);
        keyword (cur, "trans");
        PetriTransition t;
        t.name = cur.identifier ();
        keyword (cur, "pre");
        cur.expect ('=');
        t.pre = vector_literal (cur);
        keyword (cur, "post");
        cur.expect ('=');
        t.post = vector_literal (cur);
        cur.expect_end ();
        if (t.pre.size () != net.places or t.post.size () != net.places)
          semantic (lines[k], "transition " + t.name + " needs vectors of length " + std::to_string (net.places));
        if (not names.insert (t.name).second)
          semantic (lines[k], "duplicate transition name " + t.name);
        net.transitions.push_back (std::move (t));
      }
      return net;
    }

    Flcs flcs (Cursor& header, const std::vector<Line>& lines) {
      Flcs sys;
      keyword (header, "alphabet");
      header.expect ('=');
      header.expect ('{');
      do
        sys.alphabet.push_back (header.identifier ());
      while (header.accept (','));
      header.expect ('}');
      header.expect_end ();
      {
        std::set<std::string> seen;
        for (const auto& a : sys.alphabet) {
          if (not seen.insert (a).second)
            semantic (lines[0], "duplicate letter " + a);
          if (a == "empty")
            semantic (lines[0], "'empty' is reserved");
        }
      }
      std::set<std::string> names;
      for (std::size_t k = 1; k < lines.size (); ++k) {
        Cursor cur (lines[k].text, lines[k].number - 1);
        keyword (cur, "trans");
        FlcsTransition t;
        t.name = cur.identifier ();
        cur.skip_ws ();
        std::size_t at = cur.pos;
        std::string op = cur.identifier ();
        if (op == "send")
          t.op = FlcsTransition::Op::send;
        else if (op == "recv")
          t.op = FlcsTransition::Op::recv;
        else
          cur.fail_at (at, "expected 'send' or 'recv'");
        std::string letter = cur.identifier ();
        cur.expect_end ();
        auto it = std::find (sys.alphabet.begin (), sys.alphabet.end (), letter);
        if (it == sys.alphabet.end ())
          semantic (lines[k], "letter " + letter + " is not in the alphabet");
        t.letter = static_cast<std::size_t> (it - sys.alphabet.begin ());
        if (not names.insert (t.name).second)
          semantic (lines[k], "duplicate transition name " + t.name);
        sys.transitions.push_back (std::move (t));
      }
      return sys;
    }
  }

  ParsedModel parse_model (std::string_view text) {
    auto lines = significant_lines (text);
    if (lines.empty ())
      throw SyntaxError ("empty model", 1, 1);
    Cursor header (lines[0].text, lines[0].number - 1);
    header.skip_ws ();
    std::size_t at = header.pos;
    std::string kind = header.peek_identifier () == "" ? "" : header.identifier ();
    if (kind == "petri") {
      PetriNet net = petri (header, lines);
      Model m = make_model (net);
      return {std::move (net), std::move (m)};
    }
    if (kind == "flcs") {
      Flcs sys = flcs (header, lines);
      Model m = make_model (sys);
      return {std::move (sys), std::move (m)};
    }
    header.fail_at (at, "expected 'petri' or 'flcs'");
  }
}
