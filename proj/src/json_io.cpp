#include "factorcenter/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

namespace fc {

namespace {

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) throw ValidationError(what + " must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items())
    if (!ok.count(key)) throw ValidationError("unknown key \"" + key + "\" in " + what);
}

const Json& require(const Json& j, const char* key, const std::string& what) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(what + " is missing \"" + key + "\"");
  return *it;
}

std::size_t as_size(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw ValidationError(what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<Point> as_points(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + " must be an array of points");
  std::vector<Point> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw ValidationError(what + " must hold non-negative integers");
    out.push_back(v.get<Point>());
  }
  return out;
}

Json images_json(const Permutation& p) { return Json(std::vector<Point>(p.images().begin(), p.images().end())); }

std::vector<std::size_t> orbit_sizes(const GSet& a) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits(a)) out.push_back(o.size());
  return out;
}

}  // namespace

Json load_json(const std::string& path_or_inline) {
  std::string text;
  if (!path_or_inline.empty() && (path_or_inline.front() == '{' || path_or_inline.front() == '[')) {
    text = path_or_inline;
  } else if (path_or_inline == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path_or_inline);
    if (!in) throw ValidationError("cannot read \"" + path_or_inline + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

Permutation permutation_from_json(const Json& j, std::size_t degree) {
  if (j.is_string()) return Permutation::from_cycles(degree, j.get<std::string>());
  auto img = as_points(j, "permutation");
  if (img.size() != degree)
    throw ValidationError("permutation has " + std::to_string(img.size()) + " images, degree is " +
                          std::to_string(degree));
  return Permutation(std::move(img));
}

GroupPtr group_from_json(const Json& j) {
  check_keys(j, {"degree", "generators", "order"}, "group");
  const std::size_t degree = as_size(require(j, "degree", "group"), "group degree");
  const Json& gens = require(j, "generators", "group");
  if (!gens.is_array()) throw ValidationError("group generators must be an array");
  std::vector<Permutation> perms;
  for (const auto& p : gens) perms.push_back(permutation_from_json(p, degree));
  GroupPtr g = make_group(degree, std::move(perms));
  if (j.contains("order") && as_size(j.at("order"), "group order") != g->order())
    throw ValidationError("group order is " + std::to_string(g->order()) + ", input says " +
                          std::to_string(j.at("order").get<std::size_t>()));
  return g;
}

Json to_json(const Group& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(images_json(p));
  return {{"degree", g.degree()}, {"generators", gens}, {"order", g.order()}};
}

GSet gset_from_json(const Json& j, const GroupPtr& g) {
  check_keys(j, {"group", "size", "generators", "cosets", "orbit_sizes"}, "G-set");
  if (j.contains("cosets")) {
    if (j.contains("size") || j.contains("generators"))
      throw ValidationError("a G-set takes either \"cosets\" or \"size\"/\"generators\"");
    const Json& cs = j.at("cosets");
    if (!cs.is_array()) throw ValidationError("cosets must be an array of subgroup generator lists");
    std::vector<GSet> parts;
    for (const auto& h : cs) {
      if (!h.is_array()) throw ValidationError("each coset entry lists subgroup generators");
      std::vector<ElementId> ids;
      for (const auto& p : h) ids.push_back(g->require_index(permutation_from_json(p, g->degree())));
      parts.push_back(GSet::from_subgroup(g, Subgroup::generated_by(*g, ids)));
    }
    return disjoint_union(g, parts);
  }
  const std::size_t size = as_size(require(j, "size", "G-set"), "G-set size");
  const Json& gens = require(j, "generators", "G-set");
  if (!gens.is_array()) throw ValidationError("G-set generators must be an array");
  std::vector<std::vector<Point>> images;
  for (const auto& img : gens) images.push_back(as_points(img, "G-set generator image"));
  GSet a(g, size, std::move(images));
  if (j.contains("orbit_sizes") && j.at("orbit_sizes") != Json(orbit_sizes(a)))
    throw ValidationError("orbit_sizes do not match the generator images");
  return a;
}

GSet standalone_gset_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("G-set must be a JSON object");
  return gset_from_json(j, group_from_json(require(j, "group", "G-set")));
}

Json to_json(const GSet& a) {
  return {{"size", a.size()}, {"generators", a.generator_images()}, {"orbit_sizes", orbit_sizes(a)}};
}

GSet rebase(const GSet& a, const GroupPtr& g) {
  if (a.group() == g) return a;
  if (!a.group()->same_as(*g)) throw ValidationError("G-sets are over different groups");
  std::vector<std::vector<Point>> actions;
  for (ElementId e = 0; e < g->order(); ++e) actions.push_back(a.action(e));
  return GSet::from_element_actions(g, a.size(), std::move(actions));
}

Json character_json(const Group& g, const Character& chi) {
  const auto& cc = g.conjugacy_classes();
  Json classes = Json::array();
  for (std::size_t c = 0; c < cc.size(); ++c)
    classes.push_back({{"representative", g.element(cc.representatives[c]).to_cycles()},
                       {"size", cc.classes[c].size()}});
  return {{"classes", classes}, {"values", chi}};
}

Json to_json(const BurnsideElement& e) {
  Json terms = Json::array();
  if (e.ring()) {
    const auto& ring = *e.ring();
    for (const auto& [t, c] : e.coefficients()) {
      const Subgroup& h = ring.lattice().classes()[t];
      Json gens = Json::array();
      for (ElementId x : h.generators()) gens.push_back(ring.group()->element(x).to_cycles());
      terms.push_back({{"type", t},
                       {"coefficient", c},
                       {"index", ring.index_of_type(t)},
                       {"subgroup_order", h.order()},
                       {"subgroup_generators", gens}});
    }
  }
  return {{"terms", terms},
          {"zero", e.is_zero()},
          {"total_degree", e.ring() ? e.total_degree() : 0},
          {"orbit_count", e.orbit_count()}};
}

SurfaceModel model_from_json(const Json& j) {
  check_keys(j, {"tag", "galois", "brauer_trivial", "data", "stack", "degree"}, "surface model");
  const Json& tag_json = require(j, "tag", "surface model");
  if (!tag_json.is_string()) throw ValidationError("surface tag must be a string");
  const SurfaceTag tag = parse_surface_tag(tag_json.get<std::string>());
  GroupPtr g = group_from_json(require(j, "galois", "surface model"));
  const Json data = j.value("data", Json::object());
  check_keys(data, {"z2", "z3", "z5", "points", "action"}, "surface data");
  auto set = [&](const char* key) -> std::optional<GSet> {
    if (!data.contains(key)) return std::nullopt;
    return gset_from_json(data.at(key), g);
  };
  SurfaceModel s;
  switch (tag) {
    case SurfaceTag::dP9: s = SurfaceModel::dp9(g); break;
    case SurfaceTag::C8: s = SurfaceModel::c8(g); break;
    case SurfaceTag::dP8:
    case SurfaceTag::dP6:
    case SurfaceTag::dP5:
      s.tag = tag;
      s.galois = g;
      s.z2 = set("z2");
      s.z3 = set("z3");
      s.z5 = set("z5");
      break;
    case SurfaceTag::P2Blowup: {
      if (data.contains("points") == data.contains("action"))
        throw ValidationError("P2Blowup data needs exactly one of \"points\" and \"action\"");
      if (data.contains("points")) {
        s = SurfaceModel::p2_blowup(permutation_action(*set("points")));
      } else {
        const Json& act = data.at("action");
        check_keys(act, {"lattice", "matrices"}, "lattice action");
        const PicardLattice l = PicardLattice::parse(require(act, "lattice", "lattice action").get<std::string>());
        std::vector<IntMatrix> mats;
        try {
          mats = require(act, "matrices", "lattice action").get<std::vector<IntMatrix>>();
        } catch (const Json::exception&) {
          throw ValidationError("lattice action matrices must be integer matrices");
        }
        s = SurfaceModel::p2_blowup(LatticeAction(g, l, std::move(mats)));
      }
      break;
    }
  }
  if (tag == SurfaceTag::dP9 || tag == SurfaceTag::C8)
    for (const char* key : {"z2", "z3", "z5"})
      if (data.contains(key)) throw ValidationError(to_string(tag) + " models carry no \"" + key + "\" set");
  if (tag != SurfaceTag::P2Blowup && (data.contains("points") || data.contains("action")))
    throw ValidationError("only P2Blowup models carry \"points\" or \"action\"");
  if (j.contains("brauer_trivial")) {
    if (!j.at("brauer_trivial").is_boolean()) throw ValidationError("brauer_trivial must be a boolean");
    s.brauer_trivial = j.at("brauer_trivial").get<bool>();
  }
  if (j.contains("stack")) {
    if (!j.at("stack").is_array()) throw ValidationError("stack must be an array of G-sets");
    for (const auto& c : j.at("stack")) s.stack.push_back(gset_from_json(c, g));
  }
  s.validate();
  if (j.contains("degree") && j.at("degree") != Json(s.degree()))
    throw ValidationError("model degree is " + std::to_string(s.degree()) + ", input says " + j.at("degree").dump());
  return s;
}

Json to_json(const SurfaceModel& s) {
  Json data = Json::object();
  if (s.z2) data["z2"] = to_json(*s.z2);
  if (s.z3) data["z3"] = to_json(*s.z3);
  if (s.z5) data["z5"] = to_json(*s.z5);
  if (s.action) data["action"] = {{"lattice", s.action->lattice().name()}, {"matrices", s.action->generator_matrices()}};
  Json stack = Json::array();
  for (const auto& c : s.stack) stack.push_back(to_json(c));
  return {{"tag", to_string(s.tag)},
          {"galois", to_json(*s.galois)},
          {"brauer_trivial", s.brauer_trivial},
          {"degree", s.degree()},
          {"data", data},
          {"stack", stack}};
}

MoveWord word_from_json(const Json& j) {
  check_keys(j, {"source", "moves"}, "move word");
  MoveWord w;
  w.source = model_from_json(require(j, "source", "move word"));
  const GroupPtr& g = w.source.galois;
  const Json moves = j.value("moves", Json::array());
  if (!moves.is_array()) throw ValidationError("moves must be an array");
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const std::string what = "move " + std::to_string(i + 1);
    const Json& m = moves[i];
    check_keys(m, {"kind", "payload"}, what);
    const Json& kind = require(m, "kind", what);
    if (!kind.is_string()) throw ValidationError(what + ": kind must be a string");
    const Json payload = m.value("payload", Json::object());
    check_keys(payload, {"tag", "center"}, what + " payload");
    std::optional<GSet> center;
    if (payload.contains("center")) center = gset_from_json(payload.at("center"), g);
    const std::string k = kind.get<std::string>();
    if (k == "BlowUp" || k == "BlowDown") {
      if (!center) throw ValidationError(what + ": " + k + " needs payload.center");
      if (payload.contains("tag")) throw ValidationError(what + ": " + k + " takes no tag");
      w.moves.push_back(k == "BlowUp" ? Move::blow_up(*center) : Move::blow_down(*center));
    } else if (k == "Link") {
      if (!payload.contains("tag") || !payload.at("tag").is_string())
        throw ValidationError(what + ": Link needs payload.tag");
      w.moves.push_back(Move::link(LinkTag::parse(payload.at("tag").get<std::string>()), center));
    } else if (k == "Isom") {
      if (center || payload.contains("tag")) throw ValidationError(what + ": Isom takes no payload");
      w.moves.push_back(Move::isom());
    } else {
      throw ValidationError(what + ": unknown kind \"" + k + "\" (BlowUp, BlowDown, Link, Isom)");
    }
  }
  return w;
}

Json to_json(const MoveWord& w) {
  Json moves = Json::array();
  for (const auto& m : w.moves) {
    Json payload = Json::object();
    if (m.kind == Move::Kind::Link) payload["tag"] = m.tag.name();
    if (m.center) payload["center"] = to_json(*m.center);
    Json mv = {{"kind", to_string(m.kind)}};
    if (!payload.empty()) mv["payload"] = payload;
    moves.push_back(mv);
  }
  return {{"source", to_json(w.source)}, {"moves", moves}};
}

Json to_json(const DeltaRowReport& r) {
  return {{"link", r.tag.name()},
          {"delta", r.delta},
          {"lattice", r.lattice},
          {"candidates", r.candidates},
          {"families", r.families},
          {"contracted", r.contracted},
          {"source_classes", r.source_classes},
          {"ok", r.ok}};
}

Json to_json(const CenterLedger& l) {
  Json up = Json::array(), down = Json::array();
  for (const auto& z : l.blowups) up.push_back(to_json(z));
  for (const auto& z : l.blowdowns) down.push_back(to_json(z));
  return {{"blowups", up}, {"blowdowns", down}};
}

}  // namespace fc
