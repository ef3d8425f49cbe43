#include "factorcenter/links.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace fc {

std::string to_string(LinkType t) {
  switch (t) {
    case LinkType::I: return "I";
    case LinkType::IIC: return "IIC";
    case LinkType::IID: return "IID";
    case LinkType::III: return "III";
    case LinkType::IV: return "IV";
  }
  return "?";
}

LinkTag LinkTag::iid(int a, int d, int b) { return {LinkType::IID, a, d, b}; }
LinkTag LinkTag::type_i(int a, int b) { return {LinkType::I, a, 0, b}; }
LinkTag LinkTag::type_iii(int a, int b) { return {LinkType::III, a, 0, b}; }
LinkTag LinkTag::iic() { return {LinkType::IIC, 0, 0, 0}; }
LinkTag LinkTag::iv() { return {LinkType::IV, 0, 0, 0}; }

std::string LinkTag::name() const {
  switch (type) {
    case LinkType::IID: return std::to_string(a) + "<-" + std::to_string(d) + "->" + std::to_string(b);
    case LinkType::I: return "I:" + std::to_string(a) + "<-" + std::to_string(b);
    case LinkType::III: return "III:" + std::to_string(a) + "->" + std::to_string(b);
    case LinkType::IIC: return "IIC";
    case LinkType::IV: return "IV";
  }
  return "?";
}

namespace {

int parse_degree(const std::string& s, const std::string& whole) {
  if (s.empty() || s.size() > 2 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ValidationError("bad link tag \"" + whole + "\"");
  return std::stoi(s);
}

}  // namespace

LinkTag LinkTag::parse(const std::string& s) {
  if (s == "IIC") return iic();
  if (s == "IV") return iv();
  if (s.rfind("I:", 0) == 0) {
    auto p = s.find("<-");
    if (p == std::string::npos) throw ValidationError("bad link tag \"" + s + "\" (expected I:a<-b)");
    return type_i(parse_degree(s.substr(2, p - 2), s), parse_degree(s.substr(p + 2), s));
  }
  if (s.rfind("III:", 0) == 0) {
    auto p = s.find("->");
    if (p == std::string::npos) throw ValidationError("bad link tag \"" + s + "\" (expected III:a->b)");
    return type_iii(parse_degree(s.substr(4, p - 4), s), parse_degree(s.substr(p + 2), s));
  }
  auto p = s.find("<-");
  auto q = s.find("->");
  if (p == std::string::npos || q == std::string::npos || q < p)
    throw ValidationError("bad link tag \"" + s + "\" (expected a<-d->b, I:a<-b, III:a->b, IIC or IV)");
  return iid(parse_degree(s.substr(0, p), s), parse_degree(s.substr(p + 2, q - p - 2), s),
             parse_degree(s.substr(q + 2), s));
}

LinkTag LinkTag::inverse() const {
  switch (type) {
    case LinkType::IID: return iid(b, d, a);
    case LinkType::I: return type_iii(b, a);
    case LinkType::III: return type_i(b, a);
    default: return *this;
  }
}

const std::vector<DeltaRow>& classified_delta_rows() {
  static const std::vector<DeltaRow> rows = {{9, 4, 5, 6}, {9, 3, 9, 6}, {8, 4, 8, 4}, {8, 3, 5, 6},
                                             {6, 4, 6, 3}, {6, 3, 6, 4}, {5, 4, 9, 2}, {5, 3, 8, 3}};
  return rows;
}

const std::vector<DeltaRow>& delta_rows() {
  static const std::vector<DeltaRow> rows = [] {
    auto r = classified_delta_rows();
    r.push_back({9, 7, 8, 3});
    r.push_back({8, 7, 9, 2});
    r.push_back({9, 6, 9, 3});
    return r;
  }();
  return rows;
}

int delta_of(const LinkTag& t) {
  for (const auto& r : delta_rows())
    if (r.tag() == t) return r.delta;
  throw ValidationError("no delta row for link " + t.name());
}

Move Move::blow_up(GSet z) { return {Kind::BlowUp, std::move(z), {}}; }
Move Move::blow_down(GSet z) { return {Kind::BlowDown, std::move(z), {}}; }
Move Move::link(LinkTag t, std::optional<GSet> center) { return {Kind::Link, std::move(center), t}; }
Move Move::isom() { return {Kind::Isom, std::nullopt, {}}; }

std::string to_string(Move::Kind k) {
  switch (k) {
    case Move::Kind::BlowUp: return "BlowUp";
    case Move::Kind::BlowDown: return "BlowDown";
    case Move::Kind::Link: return "Link";
    case Move::Kind::Isom: return "Isom";
  }
  return "?";
}

std::string Move::describe() const {
  std::string s = to_string(kind);
  if (kind == Kind::Link) s += " " + tag.name();
  if (center) s += " |Z|=" + std::to_string(center->size());
  return s;
}

namespace {

GSet point_set(const GroupPtr& g) { return GSet::trivial(g, 1); }

std::optional<Point> fixed_point(const GSet& a) {
  for (const auto& orbit : orbits(a))
    if (orbit.size() == 1) return orbit.front();
  return std::nullopt;
}

GSet remove_point(const GSet& a, Point x) {
  std::vector<Point> rest;
  for (Point p = 0; p < a.size(); ++p)
    if (p != x) rest.push_back(p);
  return restrict_to(a, rest);
}

void check_center(const SurfaceModel& s, const GSet& z) {
  if (!z.group()->same_as(*s.galois)) throw ValidationError("center is not over the Galois group of the model");
  if (z.size() == 0) throw ValidationError("empty center");
  if (!s.brauer_trivial)
    for (const auto& orbit : orbits(z))
      if (orbit.size() % 3 != 0)
        throw ValidationError("a nontrivial Severi-Brauer surface has no points of degree " +
                              std::to_string(orbit.size()));
}

const GSet& require_link_center(const SurfaceModel& s, const LinkTag& t, const std::optional<GSet>& center,
                                std::size_t size) {
  if (!center) throw ValidationError("link " + t.name() + " needs a blow-up center of size " + std::to_string(size));
  if (center->size() != size)
    throw ValidationError("link " + t.name() + " needs a center of size " + std::to_string(size) + ", got " +
                          std::to_string(center->size()));
  check_center(s, *center);
  return *center;
}

void require_no_center(const LinkTag& t, const std::optional<GSet>& center) {
  if (center) throw ValidationError("link " + t.name() + " takes no blow-up center");
}

SurfaceTag iid_source_tag(int a) {
  switch (a) {
    case 9: return SurfaceTag::dP9;
    case 8: return SurfaceTag::dP8;
    case 6: return SurfaceTag::dP6;
    case 5: return SurfaceTag::dP5;
    default: throw ValidationError("no del Pezzo model of degree " + std::to_string(a) + " in the table");
  }
}

void require_source(const SurfaceModel& s, const LinkTag& t, SurfaceTag want) {
  if (s.tag != want)
    throw ValidationError("link " + t.name() + " needs a " + to_string(want) + " source, got " + to_string(s.tag));
}

bool is_row(const LinkTag& t) {
  for (const auto& r : delta_rows())
    if (r.tag() == t) return true;
  return false;
}

}  // namespace

std::size_t link_center_size(const LinkTag& t) {
  switch (t.type) {
    case LinkType::IID: return t.a > t.d && t.d > 0 ? static_cast<std::size_t>(t.a - t.d) : 0;
    case LinkType::I:
      if (t.a == 9 && t.b == 8) return 1;
      if (t.a == 9 && t.b == 5) return 4;
      if (t.a == 8 && t.b == 6) return 2;
      return 0;
    default: return 0;
  }
}

LinkOutcome apply_link(const SurfaceModel& s, const LinkTag& t, const std::optional<GSet>& center) {
  s.validate();
  if (s.tag == SurfaceTag::P2Blowup) throw ValidationError("links act on models of large degree, not on P2Blowup");
  if (!s.stack.empty()) throw ValidationError("links need a minimal model (empty blow-up stack)");
  const GroupPtr& g = s.galois;

  switch (t.type) {
    case LinkType::IV: {
      if (s.tag == SurfaceTag::dP9) throw ValidationError("type IV links need a conic bundle model");
      require_no_center(t, center);
      return {s, std::nullopt, std::nullopt};
    }
    case LinkType::IIC: {
      require_source(s, t, SurfaceTag::C8);
      if (!center) throw ValidationError("link IIC needs a blow-up center");
      if (center->size() > 7) throw ValidationError("link IIC takes a center of size at most 7");
      check_center(s, *center);
      return {s, *center, *center};
    }
    case LinkType::I: {
      if (t.a == 9 && t.b == 8) {
        require_source(s, t, SurfaceTag::dP9);
        const GSet& z = require_link_center(s, t, center, 1);
        return {SurfaceModel::c8(g), z, std::nullopt};
      }
      if (t.a == 9 && t.b == 5) {
        require_source(s, t, SurfaceTag::dP9);
        const GSet& z = require_link_center(s, t, center, 4);
        return {SurfaceModel::dp5(disjoint_union(z, point_set(g))), z, std::nullopt};
      }
      if (t.a == 8 && t.b == 6) {
        require_source(s, t, SurfaceTag::dP8);
        const GSet& z = require_link_center(s, t, center, 2);
        return {SurfaceModel::dp6(z, disjoint_union(*s.z2, point_set(g))), z, std::nullopt};
      }
      throw ValidationError("no type I link " + t.name() + " (known: I:9<-8, I:9<-5, I:8<-6)");
    }
    case LinkType::III: {
      require_no_center(t, center);
      if (t.a == 8 && t.b == 9) {
        require_source(s, t, SurfaceTag::C8);
        return {SurfaceModel::dp9(g), std::nullopt, point_set(g)};
      }
      if (t.a == 5 && t.b == 9) {
        require_source(s, t, SurfaceTag::dP5);
        auto x = fixed_point(*s.z5);
        if (!x) throw ValidationError("link " + t.name() + " needs a rational conic pencil (a fixed point of Z5)");
        return {SurfaceModel::dp9(g), std::nullopt, remove_point(*s.z5, *x)};
      }
      if (t.a == 6 && t.b == 8) {
        require_source(s, t, SurfaceTag::dP6);
        auto x = fixed_point(*s.z3);
        if (!x) throw ValidationError("link " + t.name() + " needs a rational conic pencil (a fixed point of Z3)");
        return {SurfaceModel::dp8(remove_point(*s.z3, *x)), std::nullopt, *s.z2};
      }
      throw ValidationError("no type III link " + t.name() + " (known: III:8->9, III:5->9, III:6->8)");
    }
    case LinkType::IID: break;
  }

  require_source(s, t, iid_source_tag(t.a));
  if (t.d == 1 || t.d == 2) {
    if (t.a != t.b) throw ValidationError("Bertini and Geiser links return to the same degree, got " + t.name());
    const GSet& z = require_link_center(s, t, center, static_cast<std::size_t>(t.a - t.d));
    return {s, z, z};
  }
  if (!is_row(t)) throw ValidationError("link " + t.name() + " is not in the table");
  const GSet& z = require_link_center(s, t, center, static_cast<std::size_t>(t.a - t.d));
  const auto key = std::make_tuple(t.a, t.d, t.b);
  if (key == std::make_tuple(9, 7, 8)) return {SurfaceModel::dp8(z), z, point_set(g)};
  if (key == std::make_tuple(8, 7, 9)) return {SurfaceModel::dp9(g), z, *s.z2};
  if (key == std::make_tuple(9, 4, 5)) return {SurfaceModel::dp5(z), z, point_set(g)};
  if (key == std::make_tuple(5, 4, 9)) return {SurfaceModel::dp9(g), z, *s.z5};
  if (key == std::make_tuple(8, 3, 5)) return {SurfaceModel::dp5(z), z, *s.z2};
  if (key == std::make_tuple(5, 3, 8)) return {SurfaceModel::dp8(z), z, *s.z5};
  if (key == std::make_tuple(6, 4, 6)) return {SurfaceModel::dp6(z, *s.z3), z, *s.z2};
  if (key == std::make_tuple(6, 3, 6)) return {SurfaceModel::dp6(*s.z2, z), z, *s.z3};
  // 9<-6->9, 9<-3->9, 8<-4->8: the contracted curves are indexed by the center.
  return {s, z, z};
}

std::vector<LinkTag> links_from(const SurfaceModel& s) {
  std::vector<LinkTag> out;
  if (s.tag == SurfaceTag::P2Blowup || !s.stack.empty()) return out;
  const int a = surface_degree(s.tag);
  if (s.tag != SurfaceTag::C8) {
    for (const auto& r : delta_rows())
      if (r.a == a) out.push_back(r.tag());
    out.push_back(LinkTag::iid(a, 1, a));
    out.push_back(LinkTag::iid(a, 2, a));
  }
  switch (s.tag) {
    case SurfaceTag::dP9:
      out.push_back(LinkTag::type_i(9, 8));
      out.push_back(LinkTag::type_i(9, 5));
      break;
    case SurfaceTag::dP8: out.push_back(LinkTag::type_i(8, 6)); break;
    case SurfaceTag::C8:
      out.push_back(LinkTag::type_iii(8, 9));
      out.push_back(LinkTag::iic());
      break;
    case SurfaceTag::dP6: out.push_back(LinkTag::type_iii(6, 8)); break;
    case SurfaceTag::dP5: out.push_back(LinkTag::type_iii(5, 9)); break;
    case SurfaceTag::P2Blowup: break;
  }
  if (s.tag != SurfaceTag::dP9) out.push_back(LinkTag::iv());
  return out;
}

BurnsideElement CenterLedger::value(const BurnsidePtr& ring) const {
  return burnside_canonicalize(ring, blowups, blowdowns);
}

namespace {

struct Step {
  SurfaceModel after;
  std::optional<GSet> blowup;
  std::optional<GSet> blowdown;
};

Step apply_move(const SurfaceModel& s, const Move& m) {
  Step st{s, std::nullopt, std::nullopt};
  switch (m.kind) {
    case Move::Kind::BlowUp:
      if (!m.center) throw ValidationError("blow-up without a center");
      check_center(s, *m.center);
      st.after.stack.push_back(*m.center);
      st.blowup = m.center;
      break;
    case Move::Kind::BlowDown:
      if (!m.center) throw ValidationError("blow-down without a center");
      if (s.stack.empty()) throw ValidationError("nothing to blow down: the stack is empty");
      if (!m.center->group()->same_as(*s.galois)) throw ValidationError("center is not over the Galois group");
      if (!is_isomorphic(s.stack.back(), *m.center))
        throw ValidationError("center is not isomorphic to the last blown-up center");
      st.after.stack.pop_back();
      st.blowdown = m.center;
      break;
    case Move::Kind::Link: {
      auto out = apply_link(s, m.tag, m.center);
      st.after = std::move(out.target);
      st.blowup = std::move(out.blowup);
      st.blowdown = std::move(out.blowdown);
      break;
    }
    case Move::Kind::Isom:
      if (m.center) throw ValidationError("an isomorphism takes no center");
      break;
  }
  return st;
}

std::string move_label(std::size_t i, const Move& m) { return "move " + std::to_string(i + 1) + " (" + m.describe() + ")"; }

void walk(const MoveWord& w, const std::function<void(std::size_t, const Step&)>& visit) {
  w.source.validate();
  SurfaceModel model = w.source;
  for (std::size_t i = 0; i < w.moves.size(); ++i) {
    Step st;
    try {
      st = apply_move(model, w.moves[i]);
    } catch (const ValidationError& e) {
      throw ValidationError(move_label(i, w.moves[i]) + ": " + e.what());
    }
    visit(i, st);
    model = st.after;
  }
}

}  // namespace

WordEvaluation evaluate_word(const MoveWord& w) {
  WordEvaluation ev;
  ev.target = w.source;
  walk(w, [&](std::size_t i, const Step& st) {
    if (st.blowup) ev.ledger.blowups.push_back(*st.blowup);
    if (st.blowdown) ev.ledger.blowdowns.push_back(*st.blowdown);
    ev.target = st.after;
    std::string line = move_label(i, w.moves[i]) + " -> " + to_string(st.after.tag) + ", K^2 = " +
                       std::to_string(st.after.degree());
    if (st.blowup) line += ", +[" + std::to_string(st.blowup->size()) + "]";
    if (st.blowdown) line += ", -[" + std::to_string(st.blowdown->size()) + "]";
    ev.trace.push_back(std::move(line));
  });
  ev.c = ev.ledger.value(burnside_ring(w.source.galois));
  return ev;
}

BurnsideElement c_of_word(const MoveWord& w) { return evaluate_word(w).c; }

MoveWord inverse_word(const MoveWord& w) {
  std::vector<Move> reversed;
  SurfaceModel end = w.source;
  walk(w, [&](std::size_t i, const Step& st) {
    const Move& m = w.moves[i];
    switch (m.kind) {
      case Move::Kind::BlowUp: reversed.push_back(Move::blow_down(*m.center)); break;
      case Move::Kind::BlowDown: reversed.push_back(Move::blow_up(*m.center)); break;
      case Move::Kind::Isom: reversed.push_back(Move::isom()); break;
      case Move::Kind::Link: {
        const LinkTag inv = m.tag.inverse();
        const bool takes_center = inv.type == LinkType::IIC || link_center_size(inv) > 0;
        reversed.push_back(Move::link(inv, takes_center ? st.blowdown : std::nullopt));
        break;
      }
    }
    end = st.after;
  });
  std::reverse(reversed.begin(), reversed.end());
  return {end, std::move(reversed)};
}

MoveWord concatenate(const MoveWord& first, const MoveWord& second) {
  MoveWord w = first;
  w.moves.insert(w.moves.end(), second.moves.begin(), second.moves.end());
  return w;
}

bool verify_mu_balance(const SurfaceModel& source, const SurfaceModel& target, const std::optional<GSet>& blowup,
                       const std::optional<GSet>& blowdown) {
  Character lhs = ns_character(target);
  Character rhs = ns_character(source);
  if (lhs.size() != rhs.size()) return false;
  if (blowdown) {
    auto x = fixed_point_character(*blowdown);
    for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] += x[i];
  }
  if (blowup) {
    auto x = fixed_point_character(*blowup);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += x[i];
  }
  return lhs == rhs;
}

bool verify_link_mu(const SurfaceModel& s, const LinkTag& t, const std::optional<GSet>& center) {
  auto out = apply_link(s, t, center);
  return verify_mu_balance(s, out.target, out.blowup, out.blowdown);
}

namespace {

PicardLattice source_lattice(int a) {
  switch (a) {
    case 9: return PicardLattice::blowup_p2(0);
    case 8: return PicardLattice::quadric(0);
    case 6: return PicardLattice::blowup_p2(3);
    case 5: return PicardLattice::blowup_p2(4);
    default: throw ValidationError("no source lattice of degree " + std::to_string(a));
  }
}

// Matrices generating the K-fixing symmetries realized by the model data of
// the degree-a source: ruling swap, S3 x Z/2 on the hexagon, S5 on the conics.
std::vector<IntMatrix> source_symmetries(int a) {
  switch (a) {
    case 8: {
      auto g = make_group(2, {Permutation::from_cycles(2, "(0 1)")});
      return lattice_action_of(SurfaceModel::dp8(GSet(g, 2, {{1, 0}}))).generator_matrices();
    }
    case 6: {
      auto g = make_group(5, {Permutation::from_cycles(5, "(0 1 2)"), Permutation::from_cycles(5, "(0 1)"),
                              Permutation::from_cycles(5, "(3 4)")});
      GSet z3(g, 3, {{1, 2, 0}, {1, 0, 2}, {0, 1, 2}});
      GSet z2(g, 2, {{0, 1}, {0, 1}, {1, 0}});
      return lattice_action_of(SurfaceModel::dp6(z2, z3)).generator_matrices();
    }
    case 5: {
      auto g = make_group(5, {Permutation::from_cycles(5, "(0 1 2 3 4)"), Permutation::from_cycles(5, "(0 1)")});
      GSet z5(g, 5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}});
      return lattice_action_of(SurfaceModel::dp5(z5)).generator_matrices();
    }
    default: return {};
  }
}

// Block matrix: `m` on the source coordinates, `perm` on the new exceptional classes.
IntMatrix extend_matrix(const IntMatrix& m, std::size_t rank, const std::vector<Point>& perm) {
  IntMatrix out = identity_matrix(rank);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m[i][j];
  const std::size_t first = m.size();
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out[first + i][first + i] = 0;
    out[first + perm[i]][first + i] = 1;
  }
  return out;
}

std::vector<Point> identity_perm(std::size_t n) {
  std::vector<Point> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Point>(i);
  return p;
}

void require_delta_row(const LinkTag& t) {
  if (t.type != LinkType::IID || !is_row(t))
    throw ValidationError("link " + t.name() + " is not a delta row of the IID table");
}

}  // namespace

DeltaRowReport verify_delta_row(const LinkTag& t, std::optional<int> delta) {
  require_delta_row(t);
  DeltaRowReport rep;
  rep.tag = t;
  rep.delta = delta.value_or(delta_of(t));
  const PicardLattice x = source_lattice(t.a);
  const std::size_t fresh = static_cast<std::size_t>(t.a - t.d);
  const std::size_t want = static_cast<std::size_t>(t.b - t.d);
  const PicardLattice y = x.blown_up(static_cast<int>(fresh));
  rep.lattice = y.name();
  const std::size_t first = x.rank();

  std::vector<DivisorClass> cand;
  if (rep.delta >= 1) {
    for (const auto& dcls : neg_one_classes(y).classes) {
      std::size_t ones = 0;
      bool simple = true;
      for (std::size_t i = first; i < y.rank(); ++i) {
        if (dcls[i] == 1) ++ones;
        else if (dcls[i] != 0) simple = false;
      }
      if (!simple || ones != static_cast<std::size_t>(rep.delta - 1)) continue;
      DivisorClass c(dcls.begin(), dcls.begin() + static_cast<std::ptrdiff_t>(first));
      if (anticanonical_degree(x, c) != rep.delta || intersection(x, c, c) != rep.delta - 2) continue;
      cand.push_back(dcls);
    }
  }
  rep.candidates = cand.size();

  std::vector<IntMatrix> gens;
  for (const auto& m : source_symmetries(t.a)) gens.push_back(extend_matrix(m, y.rank(), identity_perm(fresh)));
  if (fresh >= 2) {
    auto swap = identity_perm(fresh);
    std::swap(swap[0], swap[1]);
    auto cycle = identity_perm(fresh);
    std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    gens.push_back(extend_matrix(identity_matrix(x.rank()), y.rank(), swap));
    gens.push_back(extend_matrix(identity_matrix(x.rank()), y.rank(), cycle));
  }

  std::map<DivisorClass, std::size_t> index;
  for (std::size_t i = 0; i < cand.size(); ++i) index.emplace(cand[i], i);
  std::vector<std::vector<std::size_t>> orbit_list;
  std::vector<bool> seen(cand.size(), false);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit{i};
    seen[i] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& m : gens) {
        std::size_t j = index.at(transform_class(m, cand[orbit[k]]));
        if (!seen[j]) {
          seen[j] = true;
          orbit.push_back(j);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbit_list.push_back(std::move(orbit));
  }

  auto disjoint_within = [&](const std::vector<std::size_t>& members) {
    for (std::size_t p = 0; p < members.size(); ++p)
      for (std::size_t q = p + 1; q < members.size(); ++q)
        if (intersection(y, cand[members[p]], cand[members[q]]) != 0) return false;
    return true;
  };
  std::vector<std::vector<std::size_t>> families;
  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, std::size_t next) -> void {
    if (chosen.size() == want) {
      if (disjoint_within(chosen)) families.push_back(chosen);
      return;
    }
    for (std::size_t o = next; o < orbit_list.size(); ++o) {
      if (chosen.size() + orbit_list[o].size() > want) continue;
      chosen.insert(chosen.end(), orbit_list[o].begin(), orbit_list[o].end());
      if (disjoint_within(chosen)) self(self, o + 1);
      chosen.resize(chosen.size() - orbit_list[o].size());
    }
  };
  if (want > 0) search(search, 0);
  rep.families = families.size();
  rep.ok = families.size() == 1;
  if (rep.ok) {
    auto fam = families.front();
    std::sort(fam.begin(), fam.end());
    for (std::size_t i : fam) {
      rep.contracted.push_back(cand[i]);
      rep.source_classes.emplace_back(cand[i].begin(), cand[i].begin() + static_cast<std::ptrdiff_t>(first));
    }
  }
  return rep;
}

GSet lattice_blowdown(const SurfaceModel& s, const LinkTag& t, const GSet& center) {
  require_delta_row(t);
  require_source(s, t, iid_source_tag(t.a));
  if (!s.stack.empty()) throw ValidationError("lattice_blowdown needs a minimal model");
  if (center.size() != static_cast<std::size_t>(t.a - t.d))
    throw ValidationError("link " + t.name() + " needs a center of size " + std::to_string(t.a - t.d));
  if (!center.group()->same_as(*s.galois)) throw ValidationError("center is not over the Galois group");
  auto rep = verify_delta_row(t);
  if (!rep.ok) throw ValidationError("row " + t.name() + " has no unique contracted family");
  const LatticeAction base = lattice_action_of(s);
  const PicardLattice y = base.lattice().blown_up(static_cast<int>(center.size()));
  std::vector<IntMatrix> mats;
  for (std::size_t k = 0; k < base.generator_matrices().size(); ++k)
    mats.push_back(extend_matrix(base.generator_matrices()[k], y.rank(), center.generator_images()[k]));
  return action_on_classes(LatticeAction(s.galois, y, std::move(mats)), rep.contracted);
}

GSet random_gset(const GroupPtr& g, std::size_t size, std::mt19937_64& rng, std::size_t orbit_divisor) {
  if (orbit_divisor == 0) orbit_divisor = 1;
  auto ring = burnside_ring(g);
  std::vector<std::size_t> types;
  for (std::size_t t = 0; t < ring->type_count(); ++t)
    if (ring->index_of_type(t) % orbit_divisor == 0) types.push_back(t);
  std::vector<bool> feasible(size + 1, false);
  feasible[0] = true;
  for (std::size_t n = 1; n <= size; ++n)
    for (std::size_t t : types) {
      const std::size_t idx = ring->index_of_type(t);
      if (idx <= n && feasible[n - idx]) feasible[n] = true;
    }
  if (!feasible[size])
    throw ValidationError("no G-set of size " + std::to_string(size) + " with orbit sizes divisible by " +
                          std::to_string(orbit_divisor));
  std::vector<GSet> parts;
  for (std::size_t left = size; left > 0;) {
    std::vector<std::size_t> fits;
    for (std::size_t t : types) {
      const std::size_t idx = ring->index_of_type(t);
      if (idx <= left && feasible[left - idx]) fits.push_back(t);
    }
    const std::size_t t = fits[rng() % fits.size()];
    parts.push_back(ring->transitive_set(t));
    left -= ring->index_of_type(t);
  }
  return disjoint_union(g, parts);
}

const std::vector<GroupPtr>& sample_galois_groups() {
  static const std::vector<GroupPtr> pool = [] {
    auto cyc = [](std::size_t n) {
      std::vector<Point> img(n);
      for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
      return make_group(n, {Permutation(img)});
    };
    return std::vector<GroupPtr>{
        make_group(1, {}),
        cyc(2),
        cyc(3),
        cyc(4),
        make_group(4, {Permutation::from_cycles(4, "(0 1)"), Permutation::from_cycles(4, "(2 3)")}),
        cyc(5),
        cyc(6),
        make_group(3, {Permutation::from_cycles(3, "(0 1 2)"), Permutation::from_cycles(3, "(0 1)")}),
        make_group(4, {Permutation::from_cycles(4, "(0 1 2 3)"), Permutation::from_cycles(4, "(0 2)")}),
        make_group(5, {Permutation::from_cycles(5, "(0 1 2 3 4)"), Permutation::from_cycles(5, "(1 2 4 3)")}),
        make_group(4, {Permutation::from_cycles(4, "(0 1 2)"), Permutation::from_cycles(4, "(0 1)(2 3)")}),
        make_group(4, {Permutation::from_cycles(4, "(0 1 2 3)"), Permutation::from_cycles(4, "(0 1)")}),
    };
  }();
  return pool;
}

SurfaceModel random_model(SurfaceTag tag, const GroupPtr& g, std::mt19937_64& rng) {
  switch (tag) {
    case SurfaceTag::dP9: return SurfaceModel::dp9(g);
    case SurfaceTag::dP8: return SurfaceModel::dp8(random_gset(g, 2, rng));
    case SurfaceTag::C8: return SurfaceModel::c8(g);
    case SurfaceTag::dP6: return SurfaceModel::dp6(random_gset(g, 2, rng), random_gset(g, 3, rng));
    case SurfaceTag::dP5: return SurfaceModel::dp5(random_gset(g, 5, rng));
    case SurfaceTag::P2Blowup: break;
  }
  return SurfaceModel::p2_blowup(permutation_action(random_gset(g, 6, rng)));
}

std::vector<LinkTag> all_link_tags() {
  std::vector<LinkTag> tags;
  for (const auto& r : delta_rows()) tags.push_back(r.tag());
  for (int a : {9, 8, 6, 5}) {
    tags.push_back(LinkTag::iid(a, 1, a));
    tags.push_back(LinkTag::iid(a, 2, a));
  }
  for (auto t : {LinkTag::type_i(9, 8), LinkTag::type_i(9, 5), LinkTag::type_i(8, 6), LinkTag::type_iii(8, 9),
                 LinkTag::type_iii(5, 9), LinkTag::type_iii(6, 8), LinkTag::iic(), LinkTag::iv()})
    tags.push_back(t);
  return tags;
}

std::pair<SurfaceModel, std::optional<GSet>> random_link_input(const LinkTag& t, const GroupPtr& g,
                                                               std::mt19937_64& rng) {
  SurfaceModel s;
  switch (t.type) {
    case LinkType::IIC: s = SurfaceModel::c8(g); break;
    case LinkType::IV: {
      const SurfaceTag tags[] = {SurfaceTag::dP8, SurfaceTag::C8, SurfaceTag::dP6, SurfaceTag::dP5};
      s = random_model(tags[rng() % 4], g, rng);
      break;
    }
    case LinkType::III:
      if (t.a == 8) s = SurfaceModel::c8(g);
      else if (t.a == 5) s = SurfaceModel::dp5(disjoint_union(random_gset(g, 4, rng), point_set(g)));
      else s = SurfaceModel::dp6(random_gset(g, 2, rng), disjoint_union(random_gset(g, 2, rng), point_set(g)));
      break;
    default: s = random_model(iid_source_tag(t.a), g, rng); break;
  }
  std::optional<GSet> center;
  std::size_t size = link_center_size(t);
  if (t.type == LinkType::IIC) size = 1 + rng() % 4;
  if (size > 0) center = random_gset(g, size, rng);
  return {s, center};
}

bool TableReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowCheck& r) { return r.ok(); }) &&
         std::all_of(links.begin(), links.end(), [](const LinkCheck& l) { return l.ok(); });
}

TableReport verify_table(std::size_t samples, std::uint64_t seed) {
  TableReport rep;
  const auto& pool = sample_galois_groups();
  for (const auto& r : delta_rows()) {
    RowCheck row;
    row.report = verify_delta_row(r.tag());
    row.mutations_rejected = !verify_delta_row(r.tag(), r.delta - 1).ok && !verify_delta_row(r.tag(), r.delta + 1).ok;
    if (row.report.ok) {
      for (std::size_t i = 0; i < samples; ++i) {
        std::mt19937_64 rng(trial_seed(seed, i));
        const auto& g = pool[rng() % pool.size()];
        auto [s, center] = random_link_input(r.tag(), g, rng);
        auto out = apply_link(s, r.tag(), center);
        ++row.samples;
        if (is_isomorphic(lattice_blowdown(s, r.tag(), *center), *out.blowdown)) ++row.blowdowns_matching;
      }
    }
    rep.rows.push_back(std::move(row));
  }
  for (const auto& t : all_link_tags()) {
    LinkCheck check;
    check.tag = t;
    for (std::size_t i = 0; i < samples; ++i) {
      std::mt19937_64 rng(trial_seed(seed ^ 0x5bd1e995ULL, i));
      const auto& g = pool[rng() % pool.size()];
      auto [s, center] = random_link_input(t, g, rng);
      ++check.samples;
      if (verify_link_mu(s, t, center)) ++check.mu_balanced;
    }
    rep.links.push_back(check);
  }
  return rep;
}

std::vector<Move> homing_path(const SurfaceModel& s) {
  s.validate();
  std::vector<Move> out;
  for (auto it = s.stack.rbegin(); it != s.stack.rend(); ++it) out.push_back(Move::blow_down(*it));
  const GroupPtr& g = s.galois;
  switch (s.tag) {
    case SurfaceTag::dP9:
    case SurfaceTag::P2Blowup: break;
    case SurfaceTag::dP8: out.push_back(Move::link(LinkTag::iid(8, 7, 9), point_set(g))); break;
    case SurfaceTag::C8: out.push_back(Move::link(LinkTag::type_iii(8, 9))); break;
    case SurfaceTag::dP5: out.push_back(Move::link(LinkTag::iid(5, 4, 9), point_set(g))); break;
    case SurfaceTag::dP6:
      if (!fixed_point(*s.z3)) out.push_back(Move::link(LinkTag::iid(6, 3, 6), GSet::trivial(g, 3)));
      out.push_back(Move::link(LinkTag::type_iii(6, 8)));
      out.push_back(Move::link(LinkTag::iid(8, 7, 9), point_set(g)));
      break;
  }
  return out;
}

std::vector<Move> building_path(const SurfaceModel& target) {
  target.validate();
  std::vector<Move> out;
  const GroupPtr& g = target.galois;
  switch (target.tag) {
    case SurfaceTag::dP9:
    case SurfaceTag::P2Blowup: break;
    case SurfaceTag::dP8: out.push_back(Move::link(LinkTag::iid(9, 7, 8), *target.z2)); break;
    case SurfaceTag::C8: out.push_back(Move::link(LinkTag::type_i(9, 8), point_set(g))); break;
    case SurfaceTag::dP5: out.push_back(Move::link(LinkTag::iid(9, 4, 5), *target.z5)); break;
    case SurfaceTag::dP6:
      out.push_back(Move::link(LinkTag::iid(9, 7, 8), GSet::trivial(g, 2)));
      out.push_back(Move::link(LinkTag::type_i(8, 6), *target.z2));
      out.push_back(Move::link(LinkTag::iid(6, 3, 6), *target.z3));
      break;
  }
  for (const auto& z : target.stack) out.push_back(Move::blow_up(z));
  return out;
}

namespace {

std::optional<Move> random_move(const SurfaceModel& s, std::mt19937_64& rng) {
  const std::size_t divisor = s.brauer_trivial ? 1 : 3;
  switch (rng() % 4) {
    case 0: {
      const int room = std::max(1, s.degree() - 1);
      std::size_t size = 1 + rng() % static_cast<std::uint64_t>(std::min(room, 4));
      if (divisor == 3) size = 3 * (1 + rng() % 2);
      return Move::blow_up(random_gset(s.galois, size, rng, divisor));
    }
    case 1:
      if (s.stack.empty()) return std::nullopt;
      return Move::blow_down(s.stack.back());
    case 2: {
      auto tags = links_from(s);
      if (tags.empty()) return std::nullopt;
      const LinkTag t = tags[rng() % tags.size()];
      std::size_t size = link_center_size(t);
      if (t.type == LinkType::IIC) size = 1 + rng() % 3;
      if (size == 0) return Move::link(t);
      if (size % divisor != 0) return std::nullopt;
      return Move::link(t, random_gset(s.galois, size, rng, divisor));
    }
    default: return Move::isom();
  }
}

}  // namespace

MoveWord random_loop(const SurfaceModel& s, std::size_t max_len, std::mt19937_64& rng) {
  s.validate();
  MoveWord w{s, {}};
  const std::size_t rebuild = building_path(s).size();
  const std::size_t target_len = rng() % (max_len + 1);
  SurfaceModel model = s;
  std::size_t rejected = 0;
  while (w.moves.size() < target_len && rejected < 32) {
    auto m = random_move(model, rng);
    if (!m) {
      ++rejected;
      continue;
    }
    Step st;
    try {
      st = apply_move(model, *m);
    } catch (const ValidationError&) {
      ++rejected;
      continue;
    }
    if (w.moves.size() + 1 + homing_path(st.after).size() + rebuild > max_len) {
      ++rejected;
      continue;
    }
    w.moves.push_back(std::move(*m));
    model = std::move(st.after);
    rejected = 0;
  }
  auto home = homing_path(model);
  auto build = building_path(s);
  if (w.moves.size() + home.size() + build.size() > max_len) {
    // Even the homing path alone does not fit: fall back to the empty loop.
    w.moves.clear();
    return w;
  }
  for (auto& m : home) w.moves.push_back(std::move(m));
  for (auto& m : build) w.moves.push_back(std::move(m));
  return w;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + (trial + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

LoopReport loop_invariance_check(const SurfaceModel& s, std::size_t trials, std::size_t max_len, std::uint64_t seed) {
  LoopReport rep;
  rep.trials = trials;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(trial_seed(seed, trial));
    MoveWord w = random_loop(s, max_len, rng);
    auto ev = evaluate_word(w);
    rep.longest = std::max(rep.longest, w.moves.size());
    rep.total_moves += w.moves.size();
    if (ev.c.is_zero() && models_isomorphic(ev.target, s)) {
      ++rep.zero;
    } else if (rep.counterexamples.size() < 10) {
      rep.counterexamples.push_back(std::move(w));
    }
  }
  return rep;
}

BurnsideElement rationality_center(const MoveWord& w) {
  const SurfaceModel& s = w.source;
  if (s.tag != SurfaceTag::dP9 || !s.brauer_trivial || !s.stack.empty())
    throw ValidationError("rationality centers start from the plane (dP9, trivial Brauer data, empty stack)");
  auto ring = burnside_ring(s.galois);
  return c_of_word(w) + BurnsideElement::of_type(ring, ring->trivial_type());
}

BurnsideElement low_degree_expected_c(const BurnsidePtr& ring, std::int64_t rk_src, std::int64_t rk_tgt) {
  return BurnsideElement::of_type(ring, ring->trivial_type(), rk_tgt - rk_src);
}

bool CubicSuiteReport::ok() const {
  return gassmann && !isomorphic && ns_character == ns_character_prime && !(center == center_prime) &&
         fixed_lines == 3 && fixed_lines_prime == 5;
}

CubicSuiteReport cubic_example_suite() {
  auto g = make_group(4, {Permutation::from_cycles(4, "(0 1)"), Permutation::from_cycles(4, "(2 3)")});
  auto subgroup = [&](const char* cycles) {
    std::vector<ElementId> gens{g->require_index(Permutation::from_cycles(4, cycles))};
    return Subgroup::generated_by(*g, gens);
  };
  const Subgroup h1 = subgroup("(0 1)");
  const Subgroup h2 = subgroup("(2 3)");
  const Subgroup h3 = subgroup("(0 1)(2 3)");
  CubicSuiteReport rep;
  rep.z = disjoint_union(g, {GSet::from_subgroup(g, h1), GSet::from_subgroup(g, h2), GSet::from_subgroup(g, h3)});
  rep.z_prime = disjoint_union(g, {GSet::from_subgroup(g, Subgroup::trivial(*g)), GSet::trivial(g, 2)});
  rep.gassmann = is_gassmann(rep.z, rep.z_prime);
  rep.isomorphic = is_isomorphic(rep.z, rep.z_prime);

  auto cubic = [&](const GSet& z, Character& chi, BurnsideElement& center, std::size_t& lines, std::size_t& pairs) {
    const LatticeAction act = permutation_action(z);
    chi = ns_character(SurfaceModel::p2_blowup(act));
    center = rationality_center({SurfaceModel::dp9(g), {Move::blow_up(z)}});
    const auto classes = neg_one_classes(act.lattice()).classes;
    const GSet on_lines = action_on_classes(act, classes);
    lines = pairs = 0;
    for (const auto& orbit : orbits(on_lines)) {
      if (orbit.size() != 1) continue;
      ++lines;
      const auto& d = classes[orbit.front()];
      if (d[0] == 1 && std::count(d.begin() + 1, d.end(), 1) == 2) ++pairs;
    }
  };
  cubic(rep.z, rep.ns_character, rep.center, rep.fixed_lines, rep.fixed_line_pairs);
  cubic(rep.z_prime, rep.ns_character_prime, rep.center_prime, rep.fixed_lines_prime, rep.fixed_line_pairs_prime);
  return rep;
}

ChainReport dp5_chain_example() {
  auto g = make_group(5, {Permutation::from_cycles(5, "(0 1 2 3 4)"), Permutation::from_cycles(5, "(1 2 4 3)")});
  GSet z5(g, 5, {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}});
  GSet z2(g, 2, {{0, 1}, {1, 0}});
  ChainReport rep;
  rep.word.source = SurfaceModel::dp9(g);
  rep.word.moves = {Move::link(LinkTag::iid(9, 7, 8), z2), Move::link(LinkTag::iid(8, 3, 5), z5),
                    Move::link(LinkTag::iid(5, 4, 9), point_set(g))};
  rep.evaluation = evaluate_word(rep.word);
  return rep;
}

}  // namespace fc
