#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cuntzcf/cfe.hpp"
#include "cuntzcf/cuntz.hpp"
#include "cuntzcf/report.hpp"

namespace cuntzcf {

/// Basis label of the shift representation: an eventually periodic sequence.
using Label = PeriodicCFE;

/// Action of s_A s_B^* on the basis vector e_a: strip B (or annihilate when
/// a does not start with B), then prepend A. nullopt is the zero vector.
std::optional<Label> act(const WordOperator& op, const Label& a);

/// First `depth` letters followed by `...`.
std::string render_label(const Label& a, std::size_t depth);

/**
 * Finite truncation of the label set of the shift representation.
 *
 * No finite set is closed under every s_i, so operations that leave the
 * truncation extend it through insert() until the hard cap is reached;
 * past that TruncationLimit is thrown. Single writer; concurrent readers are
 * fine once construction is finished.
 */
class LabelSpace {
 public:
  static constexpr std::size_t kDefaultCap = std::size_t{1} << 21;

  explicit LabelSpace(std::size_t cap = kDefaultCap) : cap_(cap) {}

  /// All canonical labels with |initial| <= depth, 1 <= |period| <= depth and
  /// letters <= alphabet.
  static LabelSpace enumerate(std::size_t depth, Letter alphabet, std::size_t cap = kDefaultCap);

  bool contains(const Label& a) const { return labels_.count(a) != 0; }

  /// Returns true if a was new. Throws TruncationLimit when full.
  bool insert(const Label& a);

  std::size_t size() const { return labels_.size(); }
  std::size_t cap() const { return cap_; }
  const std::set<Label>& labels() const { return labels_; }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

 private:
  std::size_t cap_;
  std::set<Label> labels_;
};

/// Checks the Cuntz relations on the branching function system i -> prepend i
/// over LabelSpace::enumerate(depth, alphabet): injectivity, disjoint images,
/// covering, sigma o beta_i = id, s_i^* s_j = delta_ij, orthogonal range
/// projections. One aggregate record per check plus one per violation.
Report verify_cuntz_relations(std::size_t depth, Letter alphabet);

struct Orbit {
  RepClass rep;
  std::vector<Label> members;
};

/// Partition into tail-equivalence classes, each tagged with P(repeating
/// block). Output order depends only on the set of labels.
std::vector<Orbit> orbit_decompose(const LabelSpace& space);

/// For v = J^omega: s_J v = v, s_J^* v = v, (s_J)^m v = v for m <= depth, and
/// the k cycle vectors s_{j_l} ... s_{j_k} v are pairwise distinct basis
/// labels. Throws EmptyWord or NotPrimitive.
Report gp_vector_check(const Word& J, std::size_t depth);

}  // namespace cuntzcf
