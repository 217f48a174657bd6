#pragma once

#include <wqo/downset.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wqo {

  // Textual forms.  Every printer is a right inverse of its parser:
  // parse(print(x)) == x syntactically.  Parse failures throw SyntaxError
  // carrying a 1-based line and column.
  //
  // Types:   nat | fin{a,b,c | a<b, a<c} | (T1 * T2 ...) | (T1 + T2 ...) | T* | T@
  //          (T) is a one-component product and (T +) a one-branch sum.
  // Values:  3 | a | (v1, v2) | #1:v | "v1 v2 ..." | [| v1, v2 |]
  //          Sum branches are numbered from 1.  Words of words have no
  //          literal form.
  // Ideals:  3 | w | a | (I1, I2) | #1:I | atoms | {I1, ...}@ <I1? ...>
  //          where atoms are space-separated `I?` or `{I1, ...}*`, and `eps`
  //          is the empty product.  Word and multiset ideals used as the
  //          operand of `?` or of `#k:` are parenthesized.
  // SREs:    I1 + I2 + ...  or `empty`.

  Type parse_type (std::string_view text);
  std::string print_type (const Type& ty);

  Value parse_value (const Type& ty, std::string_view text);
  std::string print_value (const Type& ty, const Value& v);

  Ideal parse_ideal (const Type& ty, std::string_view text);
  std::string print_ideal (const Type& ty, const Ideal& i);

  /// The ideals exactly as written, without canonicalization.
  std::vector<Ideal> parse_sre (const Type& ty, std::string_view text);
  std::string print_sre (const Type& ty, std::span<const Ideal> parts);

  DownSet parse_downset (const Type& ty, std::string_view text);
  std::string print_downset (const DownSet& d);
}
