#ifndef FACTORCENTER_JSON_IO_HPP
#define FACTORCENTER_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "factorcenter/burnside.hpp"
#include "factorcenter/links.hpp"
#include "factorcenter/surface.hpp"

namespace fc {

/// Objects are std::map backed, so keys come out sorted.
using Json = nlohmann::json;

/// Parse a file, or inline JSON when the argument starts with '{' or '['.
/// "-" reads standard input. Throws ValidationError.
Json load_json(const std::string& path_or_inline);

/// Image array or cycle string such as "(0 1)(2 3)".
Permutation permutation_from_json(const Json& j, std::size_t degree);

/// {"degree": n, "generators": [perm, ...]}
GroupPtr group_from_json(const Json& j);
Json to_json(const Group& g);

/// {"size": n, "generators": [[images], ...]} with one image array per group
/// generator, or {"cosets": [[perm, ...], ...]} for a disjoint union of coset
/// spaces G/H, each H listed by generators. A "group" key is ignored here.
GSet gset_from_json(const Json& j, const GroupPtr& g);
/// The same, with the group read from the "group" key.
GSet standalone_gset_from_json(const Json& j);
Json to_json(const GSet& a);

/// The same set over another copy of the same group (equal element lists).
GSet rebase(const GSet& a, const GroupPtr& g);

Json character_json(const Group& g, const Character& chi);
Json to_json(const BurnsideElement& e);

/// {"tag", "galois", "brauer_trivial"?, "data": {"z2"|"z3"|"z5"|"points"|"action"}, "stack"?}
SurfaceModel model_from_json(const Json& j);
Json to_json(const SurfaceModel& s);

/// {"source": model, "moves": [{"kind", "payload"?: {"tag"?, "center"?}}]}
MoveWord word_from_json(const Json& j);
Json to_json(const MoveWord& w);

Json to_json(const DeltaRowReport& r);
Json to_json(const CenterLedger& l);

}  // namespace fc

#endif  // FACTORCENTER_JSON_IO_HPP
