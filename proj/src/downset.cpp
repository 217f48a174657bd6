#include <wqo/downset.hpp>
#include <wqo/error.hpp>

#include <algorithm>

namespace wqo {

  DownSet DownSet::from_ideals (Type ty, std::vector<Ideal> ideals) {
    DownSet d (std::move (ty));
    for (auto& i : ideals)
      d.insert (std::move (i));
    return d;
  }

  bool DownSet::insert (Ideal i) {
    i = canonicalize (_type, i);
    if (covers (i))
      return false;
    std::erase_if (_parts, [&] (const Ideal& p) { return detail::leq (_type, p, i); });
    _parts.insert (std::upper_bound (_parts.begin (), _parts.end (), i), std::move (i));
    return true;
  }

  bool DownSet::covers (const Ideal& i) const {
    return std::any_of (_parts.begin (), _parts.end (),
                        [&] (const Ideal& p) { return detail::leq (_type, i, p); });
  }

  DownSet downset_from_values (const Type& ty, const std::vector<Value>& values) {
    DownSet d (ty);
    for (const auto& v : values)
      d.insert (principal (ty, v));
    return d;
  }

  namespace {
    void same_type (const DownSet& a, const DownSet& b) {
      if (not (a.type () == b.type ()))
        throw TypeMismatch ("down-sets over different types");
    }
  }

  DownSet downset_union (const DownSet& a, const DownSet& b) {
    same_type (a, b);
    DownSet out = a;
    for (const auto& p : b.parts ())
      out.insert (p);
    return out;
  }

  bool downset_leq (const DownSet& a, const DownSet& b) {
    same_type (a, b);
    return std::all_of (a.parts ().begin (), a.parts ().end (),
                        [&] (const Ideal& p) { return b.covers (p); });
  }

  bool downset_member (const Value& v, const DownSet& d) {
    check_conforms (d.type (), v);
    return std::any_of (d.parts ().begin (), d.parts ().end (),
                        [&] (const Ideal& p) { return detail::member (d.type (), v, p); });
  }

  DownSet downset_full (const Type& ty) {
    return DownSet::from_ideals (ty, full_ideals (ty));
  }
}
