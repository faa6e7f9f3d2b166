#include "cuntzcf/labels.hpp"

#include <map>

#include "cuntzcf/errors.hpp"

namespace cuntzcf {

namespace {

constexpr std::size_t kMaxViolationRecords = 20;

// Calls f on every word of length `len` over {1..alphabet}.
template <class F>
void for_each_word(std::size_t len, Letter alphabet, F&& f) {
  Word w(len, 1);
  while (true) {
    f(w);
    std::size_t i = len;
    while (i > 0 && w[i - 1] == alphabet) w[--i] = 1;
    if (i == 0) return;
    ++w[i - 1];
  }
}

struct Tally {
  explicit Tally(std::string name) : check(std::move(name)) {}

  std::string check;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;

  // describe() is only evaluated for failures.
  template <class Describe>
  void record(bool ok, Describe&& describe) {
    ++cases;
    if (ok) return;
    ++failures;
    if (samples.size() < kMaxViolationRecords) samples.push_back(describe());
  }

  void flush(Report& report, const std::string& scope) const {
    report.add(check, scope + " cases=" + std::to_string(cases), failures == 0, static_cast<double>(failures));
    for (const auto& s : samples) report.add(check, s, false, 1.0);
  }
};

}  // namespace

std::optional<Label> act(const WordOperator& op, const Label& a) {
  if (op.is_zero()) return std::nullopt;
  const Word& strip = op.right();
  for (std::size_t i = 0; i < strip.size(); ++i) {
    if (a.at(i) != strip[i]) return std::nullopt;
  }
  Label rest = strip.empty() ? a : drop_prefix(a, strip.size());
  if (op.left().empty()) return rest;
  return prepend(op.left(), rest);
}

std::string render_label(const Label& a, std::size_t depth) { return format_word(a.prefix(depth)) + ",..."; }

LabelSpace LabelSpace::enumerate(std::size_t depth, Letter alphabet, std::size_t cap) {
  LabelSpace space(cap);
  std::vector<Word> periods;
  for (std::size_t len = 1; len <= depth; ++len) {
    for_each_word(len, alphabet, [&](const Word& w) {
      if (is_primitive(w)) periods.push_back(w);
    });
  }
  for (std::size_t len = 0; len <= depth; ++len) {
    for_each_word(len, alphabet, [&](const Word& head) {
      for (const Word& p : periods) {
        if (!head.empty() && head.back() == p.back()) continue;
        space.insert(PeriodicCFE::make(head, p));
      }
    });
  }
  return space;
}

bool LabelSpace::insert(const Label& a) {
  if (labels_.count(a) != 0) return false;
  if (labels_.size() >= cap_) {
    throw TruncationLimit("label space cap of " + std::to_string(cap_) + " reached");
  }
  labels_.insert(a);
  return true;
}

Report verify_cuntz_relations(std::size_t depth, Letter alphabet) {
  const LabelSpace space = LabelSpace::enumerate(depth, alphabet);
  LabelSpace extended = space;
  const std::string scope = "depth=" + std::to_string(depth) + " alphabet=" + std::to_string(alphabet) +
                            " labels=" + std::to_string(space.size());

  Tally injective{"beta_injective"};
  Tally disjoint{"beta_disjoint_images"};
  Tally covering{"beta_images_cover"};
  Tally left_inverse{"sigma_after_beta_is_identity"};
  Tally adjoint{"adjoint_relation_si*sj=delta_ij"};
  Tally sequential{"normal_form_matches_label_action"};
  Tally projections{"range_projections_orthogonal"};

  // image -> (i, preimage)
  std::map<Label, std::pair<Letter, Label>> preimage;
  for (Letter i = 1; i <= alphabet; ++i) {
    const WordOperator s_i = WordOperator::generator(i);
    for (const Label& a : space) {
      const Label image = *act(s_i, a);
      extended.insert(image);
      auto [it, fresh] = preimage.emplace(image, std::make_pair(i, a));
      auto inst = [&] { return "beta_" + std::to_string(i) + "(" + to_string(a) + ")=" + to_string(image); };
      if (fresh) {
        injective.record(true, inst);
        disjoint.record(true, inst);
      } else if (it->second.first == i) {
        injective.record(false, [&] { return inst() + " collides with " + to_string(it->second.second); });
      } else {
        disjoint.record(false, [&] { return inst() + " also in image of beta_" + std::to_string(it->second.first); });
      }
      left_inverse.record(sigma_shift(image) == a && image.at(0) == i, inst);
    }
  }
  for (const Label& a : space) {
    if (a.at(0) <= alphabet) covering.record(preimage.count(a) != 0, [&] { return to_string(a); });
  }

  for (const Label& a : space) {
    std::size_t fixed_by = 0;
    for (Letter i = 1; i <= alphabet; ++i) {
      const WordOperator s_i_adj = WordOperator::generator_adjoint(i);
      const WordOperator proj = word_op_mul(WordOperator::generator(i), s_i_adj);
      const auto p = act(proj, a);
      if (p) {
        ++fixed_by;
        projections.record(*p == a, [&] {
          return "s_" + std::to_string(i) + "s_" + std::to_string(i) + "* on " + to_string(a);
        });
      }
      for (Letter j = 1; j <= alphabet; ++j) {
        const WordOperator s_j = WordOperator::generator(j);
        const WordOperator product = word_op_mul(s_i_adj, s_j);
        const auto direct = act(product, a);
        auto inst = [&] { return "s_" + std::to_string(i) + "*s_" + std::to_string(j) + " on " + to_string(a); };
        const bool expected_ok = i == j ? (product.is_identity() && direct && *direct == a)
                                        : (product.is_zero() && !direct);
        adjoint.record(expected_ok, inst);
        const auto step = act(s_i_adj, *act(s_j, a));
        sequential.record(step == direct, inst);
      }
    }
    projections.record(fixed_by <= 1, [&] { return "sum of range projections on " + to_string(a); });
  }

  Report report;
  for (const Tally* t : {&injective, &disjoint, &covering, &left_inverse, &adjoint, &sequential, &projections}) {
    t->flush(report, scope);
  }
  return report;
}

std::vector<Orbit> orbit_decompose(const LabelSpace& space) {
  std::map<Word, std::vector<Label>> classes;
  for (const Label& a : space) classes[least_rotation(a.period())].push_back(a);
  std::vector<Orbit> out;
  out.reserve(classes.size());
  for (auto& [key, members] : classes) out.push_back({RepClass::cycle(key), std::move(members)});
  return out;
}

Report gp_vector_check(const Word& J, std::size_t depth) {
  canonical_cycle(J);  // EmptyWord / NotPrimitive
  const Label v = PeriodicCFE::make({}, J);
  const WordOperator s_J = WordOperator::make(J, {});
  const std::string name = "v=" + render_label(v, std::max(depth, J.size()));
  Report report;

  report.add("s_J_fixes_v", name, act(s_J, v) == v);
  report.add("s_J*_fixes_v", name, act(s_J.adjoint(), v) == v);
  WordOperator power = WordOperator::identity();
  bool powers_ok = true;
  for (std::size_t m = 1; m <= depth; ++m) {
    power = power * s_J;
    powers_ok = powers_ok && act(power, v) == v;
  }
  report.add("s_J^m_fixes_v", name + " m<=" + std::to_string(depth), powers_ok);

  std::set<Label> cycle;
  for (std::size_t l = 0; l < J.size(); ++l) {
    const Word suffix(J.begin() + static_cast<std::ptrdiff_t>(l), J.end());
    cycle.insert(*act(WordOperator::make(suffix, {}), v));
  }
  report.add("cycle_vectors_orthonormal", name + " k=" + std::to_string(J.size()), cycle.size() == J.size(),
             static_cast<double>(J.size() - cycle.size()));
  return report;
}

}  // namespace cuntzcf
