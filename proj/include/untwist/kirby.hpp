#pragma once

#include "untwist/integer.hpp"
#include "untwist/seifert.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace untwist {

/// Framing/linking matrix of a surgery diagram. Components 0..n-1 are the
/// link L, components n..n+k-1 are the surgery curves S.
class SurgeryPresentation {
 public:
  SurgeryPresentation() = default;
  /// Throws NotSquare, NotSymmetric, IndexOutOfRange (link_count > size) or
  /// DimensionMismatch (label count).
  SurgeryPresentation(IntMatrix matrix, std::size_t link_count, std::vector<std::string> labels = {});

  const IntMatrix& matrix() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.rows(); }
  std::size_t link_count() const noexcept { return n_; }
  std::size_t surgery_count() const noexcept { return m_.rows() - n_; }
  bool is_surgery(std::size_t i) const noexcept { return i >= n_ && i < size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  const Integer& framing(std::size_t i) const { return m_(i, i); }
  const Integer& linking(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend bool operator==(const SurgeryPresentation& a, const SurgeryPresentation& b) {
    return a.n_ == b.n_ && a.m_ == b.m_;
  }

 private:
  IntMatrix m_;
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
};

/// Band-sum `component` with `sign` times a parallel copy of surgery curve `over`.
struct Slide {
  std::size_t component = 0;
  std::size_t over = 0;
  int sign = 1;
};

/// Remove a +-1 framed surgery curve. Whether the curve is geometrically
/// unknotted is invisible in the matrix; the caller declares it.
struct BlowDown {
  std::size_t component = 0;
  bool declared_unknotted = true;
};

/// Add a surgery curve with framing +-1 and the given linking numbers.
struct BlowUp {
  int framing = 1;
  std::vector<Integer> linking;
  std::string label;
};

using KirbyMove = std::variant<Slide, BlowDown, BlowUp>;

std::string describe(const KirbyMove& move);

/// Throws SelfSlide, SlideOverLinkComponent, IndexOutOfRange or InvalidSign.
SurgeryPresentation slide(const SurgeryPresentation& p, std::size_t i, std::size_t j, int sign);
/// Throws NotSurgeryComponent, NonUnitFraming or IndexOutOfRange.
SurgeryPresentation blow_down(const SurgeryPresentation& p, std::size_t j);
/// Throws DimensionMismatch or InvalidSign.
SurgeryPresentation blow_up(const SurgeryPresentation& p, int epsilon, std::span<const Integer> linking,
                            std::string label = {});
SurgeryPresentation apply_move(const SurgeryPresentation& p, const KirbyMove& move);

/// E with slide(P, i, j, sign).matrix() == E^T * P.matrix() * E.
IntMatrix slide_congruence(std::size_t size, std::size_t i, std::size_t j, int sign);

/// Every surgery curve has linking number 0 with every link component.
bool is_null_homologous(const SurgeryPresentation& p);

struct TraceStep {
  KirbyMove move;
  SurgeryPresentation result;
};

/// Append-only record of moves and the presentation after each.
class MoveTrace {
 public:
  MoveTrace() = default;
  explicit MoveTrace(SurgeryPresentation initial) : initial_(std::move(initial)) {}

  const SurgeryPresentation& initial() const noexcept { return initial_; }
  const std::vector<TraceStep>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  const SurgeryPresentation& current() const { return steps_.empty() ? initial_ : steps_.back().result; }
  /// State after `count` moves (0 is the initial presentation).
  const SurgeryPresentation& state(std::size_t count) const {
    return count == 0 ? initial_ : steps_.at(count - 1).result;
  }

  const SurgeryPresentation& append(const KirbyMove& move);

  /// Record a step without applying it (for traces read from disk); use verify().
  void append_recorded(KirbyMove move, SurgeryPresentation result);

  /// Replays every move; throws TraceMismatch at the first divergent step.
  void verify() const;

 private:
  SurgeryPresentation initial_;
  std::vector<TraceStep> steps_;
};

MoveTrace replay(const SurgeryPresentation& initial, std::span<const KirbyMove> moves);

/// Two-twist unknotting of a knot with framing f (components K, S1, S2).
struct OhyamaTrace {
  MoveTrace trace;
  /// Move counts at which the three linking matrices are reached.
  std::array<std::size_t, 3> checkpoints{};
  Integer linking_s1;
  Integer linking_s2;

  const IntMatrix& checkpoint(std::size_t which) const {
    return trace.state(checkpoints.at(which)).matrix();
  }
};

OhyamaTrace ohyama_trace(long long framing, long long alpha);

/// Symmetric linking matrix of the curves a_i and the negative push-offs of
/// b_i: L[a_i, b_j] = V[b_j, a_i], otherwise L = V.
IntMatrix curve_linking_matrix(const SymplecticSeifertMatrix& v);
/// Inverse of curve_linking_matrix for a basis with V - V^T = J.
IntMatrix seifert_from_curve_linking(const IntMatrix& linking);

/// Matrix shadow of unknotting with 2g null-homologous twists.
///
/// `trace` acts on the curves a_1, b_1, ..., a_g, b_g (link components) and
/// grows two twist curves per pair: m_i, a 0-framed meridian of the a_i band,
/// and its +1 companion c_i. `knot_states` tracks K together with the twist
/// curves, where sliding a band moves both edges of K.
struct UnknottingTrace {
  BasisChange basis;
  SymplecticSeifertMatrix start;
  MoveTrace trace;
  std::vector<SurgeryPresentation> knot_states;
  std::vector<IntMatrix> seifert_states;
  std::size_t twist_curves = 0;

  const IntMatrix& final_seifert() const { return seifert_states.back(); }
};

/// Throws TraceMismatch if a postcondition fails (never on valid input).
UnknottingTrace unknotting_trace(const SeifertMatrix& v);

}  // namespace untwist
