#ifndef FACTORCENTER_LINKS_HPP
#define FACTORCENTER_LINKS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "factorcenter/burnside.hpp"
#include "factorcenter/surface.hpp"

namespace fc {

enum class LinkType { I, IIC, IID, III, IV };

std::string to_string(LinkType t);

/// A Sarkisov link. IID: a <- d -> b (source degree a, middle degree d,
/// target degree b). I: a <- b (a del Pezzo model to a conic bundle of degree
/// b). III: a -> b (the reverse). IIC and IV carry no degrees.
struct LinkTag {
  LinkType type = LinkType::IV;
  int a = 0;
  int d = 0;
  int b = 0;

  static LinkTag iid(int a, int d, int b);
  static LinkTag type_i(int a, int b);
  static LinkTag type_iii(int a, int b);
  static LinkTag iic();
  static LinkTag iv();

  bool is_bertini() const { return type == LinkType::IID && d == 1; }
  bool is_geiser() const { return type == LinkType::IID && d == 2; }
  /// "8<-3->5", "I:9<-8", "III:8->9", "IIC", "IV".
  std::string name() const;
  static LinkTag parse(const std::string& s);
  LinkTag inverse() const;

  friend bool operator==(const LinkTag&, const LinkTag&) = default;
};

/// One row of the IID table with d >= 3: a <- d -> b and the anticanonical
/// degree delta of the contracted curves.
struct DeltaRow {
  int a, d, b, delta;
  LinkTag tag() const { return LinkTag::iid(a, d, b); }
};

/// The eight classified rows (9<-4->5, 9<-3->9, 8<-4->8, 8<-3->5, 6<-4->6,
/// 6<-3->6, 5<-4->9, 5<-3->8).
const std::vector<DeltaRow>& classified_delta_rows();
/// The classified rows plus 9<-7->8, 8<-7->9 and 9<-6->9.
const std::vector<DeltaRow>& delta_rows();
/// Throws ValidationError for tags outside delta_rows() and the Bertini/Geiser rows.
int delta_of(const LinkTag& t);

struct Move {
  enum class Kind { BlowUp, BlowDown, Link, Isom };
  Kind kind = Kind::Isom;
  /// BlowUp/BlowDown center, or the blow-up center of a link.
  std::optional<GSet> center;
  LinkTag tag;

  static Move blow_up(GSet z);
  static Move blow_down(GSet z);
  static Move link(LinkTag t, std::optional<GSet> center = std::nullopt);
  static Move isom();
  std::string describe() const;
};

std::string to_string(Move::Kind k);

struct MoveWord {
  SurfaceModel source;
  std::vector<Move> moves;
};

struct LinkOutcome {
  SurfaceModel target;
  std::optional<GSet> blowup;
  std::optional<GSet> blowdown;
};

/// Size of the blow-up center a link needs (0 when it takes none). IIC
/// accepts any size from 1 to 7 and reports 0 here.
std::size_t link_center_size(const LinkTag& t);

/// Link semantics. The blow-up center is supplied by the caller when the
/// link has one; the blow-down center and the target data follow the table.
/// Throws ValidationError when the link does not apply to `s`.
LinkOutcome apply_link(const SurfaceModel& s, const LinkTag& t, const std::optional<GSet>& center = std::nullopt);

/// Links whose source matches `s` (stack empty), without checking center availability.
std::vector<LinkTag> links_from(const SurfaceModel& s);

struct CenterLedger {
  std::vector<GSet> blowups;
  std::vector<GSet> blowdowns;

  /// Sum of blow-up classes minus blow-down classes.
  BurnsideElement value(const BurnsidePtr& ring) const;
};

struct WordEvaluation {
  SurfaceModel target;
  CenterLedger ledger;
  BurnsideElement c;
  std::vector<std::string> trace;
};

/// Throws ValidationError naming the first illegal move.
WordEvaluation evaluate_word(const MoveWord& w);
BurnsideElement c_of_word(const MoveWord& w);
/// The reverse word, starting at the target of `w`.
MoveWord inverse_word(const MoveWord& w);
MoveWord concatenate(const MoveWord& first, const MoveWord& second);

/// mu(A_target) + char(blowdown) == mu(A_source) + char(blowup), stacks included.
bool verify_mu_balance(const SurfaceModel& source, const SurfaceModel& target, const std::optional<GSet>& blowup,
                       const std::optional<GSet>& blowdown);
bool verify_link_mu(const SurfaceModel& s, const LinkTag& t, const std::optional<GSet>& center = std::nullopt);

struct DeltaRowReport {
  LinkTag tag;
  int delta = 0;
  /// Y, the source lattice blown up in a - d new points.
  std::string lattice;
  /// (-1)-classes of Y through exactly delta - 1 new points with multiplicity one.
  std::size_t candidates = 0;
  /// Pairwise disjoint families of b - d candidates invariant under the
  /// symmetries of the source lattice and of the new points.
  std::size_t families = 0;
  std::vector<DivisorClass> contracted;
  /// The contracted classes pushed down to the source (degree delta).
  std::vector<DivisorClass> source_classes;
  bool ok = false;
};

/// Lattice certificate for an IID row; `delta` overrides the tabulated value.
DeltaRowReport verify_delta_row(const LinkTag& t, std::optional<int> delta = std::nullopt);

/// The Galois set of contracted classes of the row, for a source model with
/// empty stack and a blow-up center.
GSet lattice_blowdown(const SurfaceModel& s, const LinkTag& t, const GSet& center);

/// A G-set of the given size with random orbit types. With `orbit_divisor`
/// every orbit size is a multiple of it.
GSet random_gset(const GroupPtr& g, std::size_t size, std::mt19937_64& rng, std::size_t orbit_divisor = 1);

/// Small Galois groups for sampled assignments: orders 1 to 6, Klein four,
/// S3, D8, the metacyclic group of order 20, A4 and S4.
const std::vector<GroupPtr>& sample_galois_groups();

/// A model with the given tag over g with random attached sets and empty
/// stack (P2Blowup: the permutation action of a random 6-point set).
SurfaceModel random_model(SurfaceTag tag, const GroupPtr& g, std::mt19937_64& rng);

/// Every link kind: the delta rows, Bertini and Geiser on each del Pezzo
/// degree, the type I and III links, IIC and IV.
std::vector<LinkTag> all_link_tags();

/// A random source model and blow-up center for `t`. Type III sources get a
/// fixed point in Z3 or Z5.
std::pair<SurfaceModel, std::optional<GSet>> random_link_input(const LinkTag& t, const GroupPtr& g,
                                                               std::mt19937_64& rng);

struct RowCheck {
  DeltaRowReport report;
  bool mutations_rejected = false;
  std::size_t samples = 0;
  /// Samples whose lattice blow-down matches the tabulated one.
  std::size_t blowdowns_matching = 0;
  bool ok() const { return report.ok && mutations_rejected && blowdowns_matching == samples; }
};

struct LinkCheck {
  LinkTag tag;
  std::size_t samples = 0;
  std::size_t mu_balanced = 0;
  bool ok() const { return mu_balanced == samples; }
};

struct TableReport {
  std::vector<RowCheck> rows;
  std::vector<LinkCheck> links;
  bool ok() const;
};

/// Every delta row with its delta +- 1 mutations, plus the mu balance of
/// every link over `samples` seeded Galois assignments.
TableReport verify_table(std::size_t samples, std::uint64_t seed);

/// Moves taking `s` to a dP9 model with empty stack (P2Blowup: to the same
/// model with empty stack).
std::vector<Move> homing_path(const SurfaceModel& s);
/// Moves taking dP9 (same group and Brauer flag) to `target`; the inverse
/// direction of homing_path.
std::vector<Move> building_path(const SurfaceModel& target);

/// A random legal word from `s` back to a model isomorphic to `s`, of length at most max_len.
MoveWord random_loop(const SurfaceModel& s, std::size_t max_len, std::mt19937_64& rng);

/// splitmix64 of seed + trial.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

struct LoopReport {
  std::size_t trials = 0;
  std::size_t zero = 0;
  std::size_t longest = 0;
  std::size_t total_moves = 0;
  std::vector<MoveWord> counterexamples;
  bool ok() const { return zero == trials; }
};

LoopReport loop_invariance_check(const SurfaceModel& s, std::size_t trials, std::size_t max_len, std::uint64_t seed);

/// c(w) + [pt] for a word from a dP9 model with trivial Brauer data and empty stack.
BurnsideElement rationality_center(const MoveWord& w);

/// (rk_tgt - rk_src)[pt].
BurnsideElement low_degree_expected_c(const BurnsidePtr& ring, std::int64_t rk_src, std::int64_t rk_tgt);

struct CubicSuiteReport {
  GSet z;
  GSet z_prime;
  bool gassmann = false;
  bool isomorphic = true;
  Character ns_character;
  Character ns_character_prime;
  BurnsideElement center;
  BurnsideElement center_prime;
  /// Fixed (-1)-classes among the 27.
  std::size_t fixed_lines = 0;
  std::size_t fixed_lines_prime = 0;
  /// Fixed classes of the form H - E_i - E_j.
  std::size_t fixed_line_pairs = 0;
  std::size_t fixed_line_pairs_prime = 0;
  bool ok() const;
};

/// Klein four centers 2+2+2 and 4+1+1 blown up on the plane.
CubicSuiteReport cubic_example_suite();

struct ChainReport {
  MoveWord word;
  WordEvaluation evaluation;
  bool ok() const { return evaluation.c.is_zero() && models_isomorphic(evaluation.target, word.source); }
};

/// P2 <- dP7 -> dP8 <- dP3 -> dP5 <- dP4 -> P2 over the order-20 group
/// acting on Z5 transitively and on Z2 through its quotient of order 2.
ChainReport dp5_chain_example();

}  // namespace fc

#endif  // FACTORCENTER_LINKS_HPP
