#include "factorcenter/surface.hpp"

#include <functional>
#include <map>

namespace fc {

namespace {

using CoordinateMap = std::function<DivisorClass(const DivisorClass&)>;

// Matrix of a linear map given on coordinates.
IntMatrix matrix_of(std::size_t n, const CoordinateMap& f) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    DivisorClass e(n, 0);
    e[k] = 1;
    DivisorClass img = f(e);
    for (std::size_t i = 0; i < n; ++i) m[i][k] = img[i];
  }
  return m;
}

// E_{i} -> E_{perm(i)} on the exceptional coordinates starting at `offset`.
IntMatrix permutation_matrix(std::size_t n, std::size_t offset, const std::vector<Point>& perm) {
  return matrix_of(n, [&](const DivisorClass& d) {
    DivisorClass out = d;
    for (std::size_t i = 0; i < perm.size(); ++i) out[offset + perm[i]] = d[offset + i];
    return out;
  });
}

void require_size(const std::optional<GSet>& s, std::size_t n, const char* what, const GroupPtr& g) {
  if (!s) throw ValidationError(std::string("surface model is missing its ") + what + " set");
  if (s->size() != n)
    throw ValidationError(std::string(what) + " set has " + std::to_string(s->size()) + " points, expected " +
                          std::to_string(n));
  if (!s->group()->same_as(*g)) throw ValidationError(std::string(what) + " set is not over the Galois group");
}

}  // namespace

LatticeAction::LatticeAction(GroupPtr group, PicardLattice lattice, std::vector<IntMatrix> generator_matrices)
    : group_(std::move(group)), lattice_(std::move(lattice)), generator_matrices_(std::move(generator_matrices)) {
  const Group& g = *group_;
  if (generator_matrices_.size() != g.generators().size())
    throw ValidationError("lattice action needs one matrix per generator");
  for (const auto& m : generator_matrices_)
    if (!is_isometry_fixing_canonical(lattice_, m))
      throw ValidationError("lattice action matrix does not preserve the form and the canonical class");
  matrices_.assign(g.order(), {});
  std::vector<bool> seen(g.order(), false);
  matrices_[Group::identity()] = identity_matrix(lattice_.rank());
  seen[Group::identity()] = true;
  std::vector<ElementId> queue{Group::identity()};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const ElementId x = queue[k];
    for (std::size_t s = 0; s < g.generator_ids().size(); ++s) {
      const ElementId y = g.multiply(x, g.generator_ids()[s]);
      IntMatrix m = multiply(generator_matrices_[s], matrices_[x]);
      if (!seen[y]) {
        seen[y] = true;
        matrices_[y] = std::move(m);
        queue.push_back(y);
      } else if (matrices_[y] != m) {
        throw ValidationError("lattice action matrices do not satisfy the group relations");
      }
    }
  }
}

LatticeAction LatticeAction::trivial(GroupPtr group, PicardLattice lattice) {
  std::vector<IntMatrix> mats(group->generators().size(), identity_matrix(lattice.rank()));
  return LatticeAction(std::move(group), std::move(lattice), std::move(mats));
}

Character LatticeAction::trace_character() const {
  const auto& cc = group_->conjugacy_classes();
  Character chi(cc.size());
  for (std::size_t c = 0; c < cc.size(); ++c) chi[c] = trace(matrices_[cc.representatives[c]]);
  return chi;
}

GSet action_on_classes(const LatticeAction& action, const std::vector<DivisorClass>& classes) {
  std::map<DivisorClass, Point> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i], static_cast<Point>(i));
  std::vector<std::vector<Point>> images;
  for (const auto& m : action.generator_matrices()) {
    std::vector<Point> img(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
      auto it = index.find(transform_class(m, classes[i]));
      if (it == index.end()) throw ValidationError("lattice action does not permute the class list");
      img[i] = it->second;
    }
    images.push_back(std::move(img));
  }
  return GSet(action.group(), classes.size(), std::move(images));
}

std::string to_string(SurfaceTag tag) {
  switch (tag) {
    case SurfaceTag::dP9: return "dP9";
    case SurfaceTag::dP8: return "dP8";
    case SurfaceTag::C8: return "C8";
    case SurfaceTag::dP6: return "dP6";
    case SurfaceTag::dP5: return "dP5";
    case SurfaceTag::P2Blowup: return "P2Blowup";
  }
  return "?";
}

SurfaceTag parse_surface_tag(const std::string& s) {
  for (auto t : {SurfaceTag::dP9, SurfaceTag::dP8, SurfaceTag::C8, SurfaceTag::dP6, SurfaceTag::dP5,
                 SurfaceTag::P2Blowup})
    if (to_string(t) == s) return t;
  throw ValidationError("unknown surface tag \"" + s + "\"");
}

int surface_degree(SurfaceTag tag) {
  switch (tag) {
    case SurfaceTag::dP9: return 9;
    case SurfaceTag::dP8:
    case SurfaceTag::C8: return 8;
    case SurfaceTag::dP6: return 6;
    case SurfaceTag::dP5: return 5;
    case SurfaceTag::P2Blowup: return 0;
  }
  return 0;
}

SurfaceModel SurfaceModel::dp9(GroupPtr g, bool brauer_trivial) {
  SurfaceModel s;
  s.tag = SurfaceTag::dP9;
  s.galois = std::move(g);
  s.brauer_trivial = brauer_trivial;
  return s;
}

SurfaceModel SurfaceModel::dp8(GSet z2) {
  SurfaceModel s;
  s.tag = SurfaceTag::dP8;
  s.galois = z2.group();
  s.z2 = std::move(z2);
  s.validate();
  return s;
}

SurfaceModel SurfaceModel::c8(GroupPtr g) {
  SurfaceModel s;
  s.tag = SurfaceTag::C8;
  s.galois = std::move(g);
  return s;
}

SurfaceModel SurfaceModel::dp6(GSet z2, GSet z3) {
  SurfaceModel s;
  s.tag = SurfaceTag::dP6;
  s.galois = z2.group();
  s.z2 = std::move(z2);
  s.z3 = std::move(z3);
  s.validate();
  return s;
}

SurfaceModel SurfaceModel::dp5(GSet z5) {
  SurfaceModel s;
  s.tag = SurfaceTag::dP5;
  s.galois = z5.group();
  s.z5 = std::move(z5);
  s.validate();
  return s;
}

SurfaceModel SurfaceModel::p2_blowup(LatticeAction action) {
  if (action.lattice().kind() != LatticeKind::BlowupP2)
    throw ValidationError("P2Blowup models need a plane blow-up lattice");
  SurfaceModel s;
  s.tag = SurfaceTag::P2Blowup;
  s.galois = action.group();
  s.action = std::move(action);
  return s;
}

void SurfaceModel::validate() const {
  if (!galois) throw ValidationError("surface model without a Galois group");
  const bool want2 = tag == SurfaceTag::dP8 || tag == SurfaceTag::dP6;
  const bool want3 = tag == SurfaceTag::dP6;
  const bool want5 = tag == SurfaceTag::dP5;
  if (want2) require_size(z2, 2, "Z2", galois);
  if (want3) require_size(z3, 3, "Z3", galois);
  if (want5) require_size(z5, 5, "Z5", galois);
  if (!want2 && z2) throw ValidationError(to_string(tag) + " model does not carry a Z2 set");
  if (!want3 && z3) throw ValidationError(to_string(tag) + " model does not carry a Z3 set");
  if (!want5 && z5) throw ValidationError(to_string(tag) + " model does not carry a Z5 set");
  if (tag == SurfaceTag::P2Blowup) {
    if (!action) throw ValidationError("P2Blowup model without a lattice action");
    if (!action->group()->same_as(*galois)) throw ValidationError("lattice action is not over the Galois group");
  } else if (action) {
    throw ValidationError(to_string(tag) + " model does not carry an explicit lattice action");
  }
  if (tag != SurfaceTag::dP9 && !brauer_trivial) throw ValidationError("only dP9 models carry Brauer data");
  for (const auto& c : stack)
    if (!c.group()->same_as(*galois)) throw ValidationError("stacked center is not over the Galois group");
}

int SurfaceModel::degree() const {
  int base = tag == SurfaceTag::P2Blowup ? static_cast<int>(action->lattice().degree()) : surface_degree(tag);
  for (const auto& c : stack) base -= static_cast<int>(c.size());
  return base;
}

namespace {

bool optional_iso(const std::optional<GSet>& a, const std::optional<GSet>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || is_isomorphic(*a, *b);
}

bool multiset_iso(const std::vector<GSet>& a, const std::vector<GSet>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!used[j] && is_isomorphic(x, b[j])) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool models_isomorphic(const SurfaceModel& a, const SurfaceModel& b) {
  if (a.tag != b.tag || a.brauer_trivial != b.brauer_trivial) return false;
  if (!a.galois->same_as(*b.galois)) return false;
  if (!optional_iso(a.z2, b.z2) || !optional_iso(a.z3, b.z3) || !optional_iso(a.z5, b.z5)) return false;
  if (a.tag == SurfaceTag::P2Blowup) {
    if (!(a.action->lattice() == b.action->lattice())) return false;
    for (ElementId g = 0; g < a.galois->order(); ++g)
      if (a.action->matrix(g) != b.action->matrix(g)) return false;
  }
  return multiset_iso(a.stack, b.stack);
}

BurnsideElement virtual_ns_set(const SurfaceModel& s) {
  s.validate();
  auto ring = burnside_ring(s.galois);
  const auto pt = BurnsideElement::of_type(ring, ring->trivial_type());
  switch (s.tag) {
    case SurfaceTag::dP9: return pt;
    case SurfaceTag::dP8: return BurnsideElement::of(ring, *s.z2);
    case SurfaceTag::C8: return 2 * pt;
    case SurfaceTag::dP6: return BurnsideElement::of(ring, *s.z2) + BurnsideElement::of(ring, *s.z3) - pt;
    case SurfaceTag::dP5: return BurnsideElement::of(ring, *s.z5);
    case SurfaceTag::P2Blowup: break;
  }
  throw ValidationError("P2Blowup models have no virtual Neron-Severi set; use the lattice character");
}

Character ns_character(const SurfaceModel& s) {
  s.validate();
  Character chi = s.tag == SurfaceTag::P2Blowup ? s.action->trace_character() : mu(virtual_ns_set(s));
  for (const auto& c : s.stack) {
    auto x = fixed_point_character(c);
    for (std::size_t i = 0; i < chi.size(); ++i) chi[i] += x[i];
  }
  return chi;
}

LatticeAction lattice_action_of(const SurfaceModel& s) {
  s.validate();
  const GroupPtr& g = s.galois;
  const std::size_t ngens = g->generators().size();
  std::vector<IntMatrix> mats;
  switch (s.tag) {
    case SurfaceTag::dP9: return LatticeAction::trivial(g, PicardLattice::blowup_p2(0));
    case SurfaceTag::C8: return LatticeAction::trivial(g, PicardLattice::blowup_p2(1));
    case SurfaceTag::P2Blowup: return *s.action;
    case SurfaceTag::dP8: {
      for (std::size_t k = 0; k < ngens; ++k) {
        const bool swap = s.z2->generator_images()[k][0] == 1;
        mats.push_back(swap ? IntMatrix{{0, 1}, {1, 0}} : identity_matrix(2));
      }
      return LatticeAction(g, PicardLattice::quadric(), std::move(mats));
    }
    case SurfaceTag::dP6: {
      // Conic pencil i of Z3 is H - E_{i+1}; the two points of Z2 are H and 2H - E_1 - E_2 - E_3.
      const IntMatrix cremona = matrix_of(4, [](const DivisorClass& d) {
        const std::int64_t sum = d[1] + d[2] + d[3];
        DivisorClass out(4);
        out[0] = 2 * d[0] - sum;
        for (std::size_t i = 1; i <= 3; ++i) out[i] = d[0] - (sum - d[i]);
        return out;
      });
      for (std::size_t k = 0; k < ngens; ++k) {
        IntMatrix m = permutation_matrix(4, 1, s.z3->generator_images()[k]);
        if (s.z2->generator_images()[k][0] == 1) m = multiply(m, cremona);
        mats.push_back(std::move(m));
      }
      return LatticeAction(g, PicardLattice::blowup_p2(3), std::move(mats));
    }
    case SurfaceTag::dP5: {
      // Conic pencil i of Z5 is H - E_{i+1} for i < 4 and 2H - E_1 - ... - E_4 for i = 4.
      std::vector<DivisorClass> conic(5, DivisorClass(5, 0));
      for (std::size_t i = 0; i < 4; ++i) {
        conic[i][0] = 1;
        conic[i][1 + i] = 1;
      }
      conic[4] = {2, 1, 1, 1, 1};
      for (std::size_t k = 0; k < ngens; ++k) {
        const auto& perm = s.z5->generator_images()[k];
        // H = (c_1 + c_2 + c_3 + c_4 - c_5) / 2 and E_i = H - c_i, with c mapped by perm.
        DivisorClass h(5, 0);
        for (std::size_t i = 0; i < 5; ++i)
          for (std::size_t t = 0; t < 5; ++t) h[t] += (i < 4 ? 1 : -1) * conic[perm[i]][t];
        for (auto& v : h) {
          if (v % 2 != 0) throw ValidationError("conic permutation does not lift to the lattice");
          v /= 2;
        }
        IntMatrix m(5, std::vector<std::int64_t>(5, 0));
        for (std::size_t t = 0; t < 5; ++t) m[t][0] = h[t];
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t t = 0; t < 5; ++t) m[t][1 + i] = -(h[t] - conic[perm[i]][t]);  // coordinate e_i is -E_i
        mats.push_back(std::move(m));
      }
      return LatticeAction(g, PicardLattice::blowup_p2(4), std::move(mats));
    }
  }
  throw ValidationError("unsupported surface tag");
}

GSet mj_set(const SurfaceModel& s, int j) {
  LatticeAction act = lattice_action_of(s);
  return action_on_classes(act, rational_degree_classes(act.lattice(), j).classes);
}

bool mj_duality_check(const SurfaceModel& s, int j) {
  LatticeAction act = lattice_action_of(s);
  const PicardLattice& l = act.lattice();
  const int d = static_cast<int>(l.degree());
  const auto from = rational_degree_classes(l, j).classes;
  const auto to = rational_degree_classes(l, d - j).classes;
  if (from.size() != to.size()) return false;
  GSet a = action_on_classes(act, from);
  GSet b = action_on_classes(act, to);
  std::map<DivisorClass, Point> index;
  for (std::size_t i = 0; i < to.size(); ++i) index.emplace(to[i], static_cast<Point>(i));
  std::vector<Point> phi(from.size());
  std::vector<bool> hit(to.size(), false);
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto it = index.find(adjoint_dual(l, from[i]));
    if (it == index.end() || hit[it->second]) return false;
    hit[it->second] = true;
    phi[i] = it->second;
  }
  for (std::size_t k = 0; k < a.generator_images().size(); ++k)
    for (std::size_t i = 0; i < from.size(); ++i)
      if (phi[a.generator_images()[k][i]] != b.generator_images()[k][phi[i]]) return false;
  return true;
}

int singular_fiber_count(int k2) {
  if (k2 > 8) throw ValidationError("a conic bundle has K^2 <= 8, got " + std::to_string(k2));
  return 8 - k2;
}

std::int64_t picard_rank(const SurfaceModel& s) {
  if (s.tag == SurfaceTag::P2Blowup) return orbit_count_from_character(*s.galois, ns_character(s));
  std::int64_t rank = virtual_ns_set(s).orbit_count();
  for (const auto& c : s.stack) rank += static_cast<std::int64_t>(orbits(c).size());
  return rank;
}

LatticeAction random_weyl_action(int r, int generators, int word_length, std::mt19937_64& rng) {
  const PicardLattice l = PicardLattice::blowup_p2(r);
  const auto roots = simple_roots(l);
  if (roots.empty()) throw ValidationError("no roots on the plane blown up in fewer than two points");
  const auto lines = neg_one_classes(l).classes;
  std::map<DivisorClass, Point> index;
  for (std::size_t i = 0; i < lines.size(); ++i) index.emplace(lines[i], static_cast<Point>(i));
  for (int attempt = 0;; ++attempt) {
    const int gens = attempt < 200 ? generators : 1;
    std::vector<IntMatrix> mats;
    std::vector<Permutation> perms;
    for (int k = 0; k < gens; ++k) {
      IntMatrix m = identity_matrix(l.rank());
      const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(word_length));
      for (int t = 0; t < len; ++t) m = multiply(reflection(l, roots[rng() % roots.size()]), m);
      std::vector<Point> img(lines.size());
      for (std::size_t i = 0; i < lines.size(); ++i) img[i] = index.at(transform_class(m, lines[i]));
      mats.push_back(std::move(m));
      perms.emplace_back(std::move(img));
    }
    try {
      auto g = make_group(lines.size(), perms);
      return LatticeAction(g, l, std::move(mats));
    } catch (const ResourceError&) {
      continue;
    }
  }
}

LatticeAction permutation_action(const GSet& points) {
  const std::size_t n = points.size();
  const PicardLattice l = PicardLattice::blowup_p2(static_cast<int>(n));
  std::vector<IntMatrix> mats;
  for (const auto& img : points.generator_images()) mats.push_back(permutation_matrix(n + 1, 1, img));
  return LatticeAction(points.group(), l, std::move(mats));
}

}  // namespace fc
