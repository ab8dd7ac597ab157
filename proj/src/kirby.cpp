#include "untwist/kirby.hpp"

#include "untwist/error.hpp"

#include <sstream>
#include <utility>

namespace untwist {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

std::vector<std::string> default_labels(std::size_t size, std::size_t link_count) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < size; ++i)
    labels.push_back(i < link_count ? "L" + std::to_string(i + 1) : "S" + std::to_string(i - link_count + 1));
  return labels;
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidSign, "sign must be +1 or -1, got " + std::to_string(sign));
}

}  // namespace

SurgeryPresentation::SurgeryPresentation(IntMatrix matrix, std::size_t link_count, std::vector<std::string> labels)
    : m_(std::move(matrix)), n_(link_count), labels_(std::move(labels)) {
  if (!m_.is_square()) throw Error(ErrorCode::NotSquare, "linking matrix must be square");
  if (!m_.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "linking matrix must be symmetric");
  if (n_ > m_.rows())
    throw Error(ErrorCode::IndexOutOfRange,
                "link count " + idx(n_) + " exceeds component count " + idx(m_.rows()));
  if (labels_.empty()) labels_ = default_labels(m_.rows(), n_);
  if (labels_.size() != m_.rows())
    throw Error(ErrorCode::DimensionMismatch, "expected " + idx(m_.rows()) + " labels, got " + idx(labels_.size()));
}

std::string describe(const KirbyMove& move) {
  std::ostringstream os;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Slide>) {
          os << "slide " << m.component << " over " << m.over << (m.sign > 0 ? " (+)" : " (-)");
        } else if constexpr (std::is_same_v<T, BlowDown>) {
          os << "blow down " << m.component << (m.declared_unknotted ? " (declared unknotted)" : "");
        } else {
          os << "blow up " << (m.framing > 0 ? "+1" : "-1") << " linking [";
          for (std::size_t i = 0; i < m.linking.size(); ++i) os << (i ? "," : "") << m.linking[i];
          os << "]";
        }
      },
      move);
  return os.str();
}

SurgeryPresentation slide(const SurgeryPresentation& p, std::size_t i, std::size_t j, int sign) {
  check_sign(sign);
  const std::size_t n = p.size();
  if (i >= n || j >= n) throw Error(ErrorCode::IndexOutOfRange, "slide " + idx(i) + " over " + idx(j) + " in " + idx(n) + " components");
  if (i == j) throw Error(ErrorCode::SelfSlide, "cannot slide component " + idx(i) + " over itself");
  if (!p.is_surgery(j)) throw Error(ErrorCode::SlideOverLinkComponent, "component " + idx(j) + " is not a surgery curve");

  const IntMatrix& m = p.matrix();
  IntMatrix out = m;
  for (std::size_t a = 0; a < n; ++a) {
    if (a == i) continue;
    out(i, a) = m(i, a) + sign * m(j, a);
    out(a, i) = out(i, a);
  }
  out(i, i) = m(i, i) + m(j, j) + 2 * sign * m(i, j);
  return SurgeryPresentation(std::move(out), p.link_count(), p.labels());
}

IntMatrix slide_congruence(std::size_t size, std::size_t i, std::size_t j, int sign) {
  IntMatrix e = IntMatrix::identity(size);
  e(j, i) = sign;
  return e;
}

SurgeryPresentation blow_down(const SurgeryPresentation& p, std::size_t j) {
  if (j >= p.size()) throw Error(ErrorCode::IndexOutOfRange, "blow down " + idx(j) + " in " + idx(p.size()) + " components");
  if (!p.is_surgery(j)) throw Error(ErrorCode::NotSurgeryComponent, "component " + idx(j) + " is a link component");
  const IntMatrix& m = p.matrix();
  const Integer& eps = m(j, j);
  if (eps != 1 && eps != -1)
    throw Error(ErrorCode::NonUnitFraming, "component " + idx(j) + " has framing " + eps.str());

  IntMatrix out = m.without(j);
  for (std::size_t a = 0, ra = 0; a < p.size(); ++a) {
    if (a == j) continue;
    for (std::size_t b = 0, rb = 0; b < p.size(); ++b) {
      if (b == j) continue;
      out(ra, rb) -= eps * m(a, j) * m(b, j);
      ++rb;
    }
    ++ra;
  }
  std::vector<std::string> labels = p.labels();
  labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(j));
  return SurgeryPresentation(std::move(out), p.link_count(), std::move(labels));
}

SurgeryPresentation blow_up(const SurgeryPresentation& p, int epsilon, std::span<const Integer> linking,
                            std::string label) {
  check_sign(epsilon);
  const std::size_t n = p.size();
  if (linking.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "blow up needs " + idx(n) + " linking numbers, got " + idx(linking.size()));
  IntMatrix out(n + 1, n + 1);
  const IntMatrix& m = p.matrix();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out(a, b) = m(a, b) + epsilon * linking[a] * linking[b];
    out(a, n) = linking[a];
    out(n, a) = linking[a];
  }
  out(n, n) = epsilon;
  std::vector<std::string> labels = p.labels();
  labels.push_back(label.empty() ? "S" + std::to_string(p.surgery_count() + 1) : std::move(label));
  return SurgeryPresentation(std::move(out), p.link_count(), std::move(labels));
}

SurgeryPresentation apply_move(const SurgeryPresentation& p, const KirbyMove& move) {
  return std::visit(
      [&](const auto& m) -> SurgeryPresentation {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Slide>) return slide(p, m.component, m.over, m.sign);
        else if constexpr (std::is_same_v<T, BlowDown>) return blow_down(p, m.component);
        else return blow_up(p, m.framing, m.linking, m.label);
      },
      move);
}

bool is_null_homologous(const SurgeryPresentation& p) {
  for (std::size_t i = 0; i < p.link_count(); ++i)
    for (std::size_t j = p.link_count(); j < p.size(); ++j)
      if (p.linking(i, j) != 0) return false;
  return true;
}

const SurgeryPresentation& MoveTrace::append(const KirbyMove& move) {
  SurgeryPresentation next = apply_move(current(), move);
  steps_.push_back({move, std::move(next)});
  return steps_.back().result;
}

void MoveTrace::append_recorded(KirbyMove move, SurgeryPresentation result) {
  steps_.push_back({std::move(move), std::move(result)});
}

void MoveTrace::verify() const {
  const SurgeryPresentation* prev = &initial_;
  for (std::size_t s = 0; s < steps_.size(); ++s) {
    const SurgeryPresentation expected = apply_move(*prev, steps_[s].move);
    if (!(expected == steps_[s].result))
      throw Error(ErrorCode::TraceMismatch, "step " + idx(s) + " (" + describe(steps_[s].move) + ") does not match its recorded matrix");
    prev = &steps_[s].result;
  }
}

MoveTrace replay(const SurgeryPresentation& initial, std::span<const KirbyMove> moves) {
  MoveTrace trace(initial);
  for (const auto& m : moves) trace.append(m);
  return trace;
}

OhyamaTrace ohyama_trace(long long framing, long long alpha) {
  OhyamaTrace out;
  out.trace = MoveTrace(SurgeryPresentation(IntMatrix{{framing}}, 1, {"K"}));
  MoveTrace& t = out.trace;

  // A -1 and a +1 framed unknot, split from K and from each other.
  t.append(BlowUp{-1, {0}, "S1"});
  t.append(BlowUp{1, {0, 0}, "S2"});
  // -1 curve over the +1 curve becomes 0-framed; then K over the +1 curve.
  t.append(Slide{1, 2, 1});
  t.append(Slide{0, 2, 1});
  out.checkpoints[0] = t.size();

  // Light bulb slides of K over the 0-framed S1.
  const int sign = alpha >= 0 ? 1 : -1;
  for (long long s = 0; s < (alpha >= 0 ? alpha : -alpha); ++s) t.append(Slide{0, 1, sign});
  out.checkpoints[1] = t.size();

  t.append(Slide{1, 2, -1});
  out.checkpoints[2] = t.size();

  const IntMatrix& last = t.current().matrix();
  out.linking_s1 = last(0, 1);
  out.linking_s2 = last(0, 2);
  if (abs(abs(out.linking_s1) - abs(out.linking_s2)) != 1)
    throw Error(ErrorCode::TraceMismatch, "unknotting curves' linking numbers do not differ by 1");
  return out;
}

IntMatrix curve_linking_matrix(const SymplecticSeifertMatrix& v) {
  const IntMatrix& e = v.entries();
  IntMatrix l = e;
  for (std::size_t x = 0; x < e.rows(); ++x)
    for (std::size_t y = 0; y < e.cols(); ++y)
      if (x % 2 == 0 && y % 2 == 1) {
        l(x, y) = e(y, x);
      }
  return l;
}

IntMatrix seifert_from_curve_linking(const IntMatrix& linking) {
  IntMatrix v = linking;
  for (std::size_t i = 0; 2 * i + 1 < v.rows(); ++i) v(2 * i, 2 * i + 1) += 1;
  return v;
}

UnknottingTrace unknotting_trace(const SeifertMatrix& input) {
  auto [reduced, u1] = symplectic_reduce(input);
  auto [normal, u2] = parity_normalize(reduced);

  UnknottingTrace out;
  out.basis = u1.then(u2);
  out.start = normal;
  const std::size_t g = normal.genus();
  const std::size_t cores = 2 * g;

  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= g; ++i) {
    labels.push_back("a" + std::to_string(i));
    labels.push_back("b" + std::to_string(i) + "'");
  }
  out.trace = MoveTrace(SurgeryPresentation(curve_linking_matrix(normal), cores, labels));
  SurgeryPresentation knot(IntMatrix{{0}}, 1, {"K"});

  auto band_block = [&](const SurgeryPresentation& p) {
    IntMatrix l(cores, cores);
    for (std::size_t x = 0; x < cores; ++x)
      for (std::size_t y = 0; y < cores; ++y) l(x, y) = p.matrix()(x, y);
    return l;
  };
  auto record = [&] {
    if (!is_null_homologous(knot))
      throw Error(ErrorCode::TraceMismatch, "a twist curve links K after step " + std::to_string(out.trace.size()));
    out.knot_states.push_back(knot);
    out.seifert_states.push_back(seifert_from_curve_linking(band_block(out.trace.current())));
  };
  // Twist curve with trace index c sits at index c - cores + 1 in `knot`.
  auto in_knot = [&](std::size_t c) { return c - cores + 1; };

  auto step = [&](const KirbyMove& move) {
    out.trace.append(move);
    if (const auto* up = std::get_if<BlowUp>(&move)) {
      std::vector<Integer> lk{0};
      lk.insert(lk.end(), up->linking.begin() + static_cast<std::ptrdiff_t>(cores), up->linking.end());
      knot = blow_up(knot, up->framing, lk, up->label);
    } else if (const auto* s = std::get_if<Slide>(&move)) {
      if (s->component < cores) {
        // The two edges of the band run in opposite directions.
        knot = slide(knot, 0, in_knot(s->over), s->sign);
        knot = slide(knot, 0, in_knot(s->over), -s->sign);
      } else {
        knot = slide(knot, in_knot(s->component), in_knot(s->over), s->sign);
      }
    }
    record();
  };

  out.knot_states.push_back(knot);
  out.seifert_states.push_back(normal.entries());

  // Setup: per pair a 0-framed meridian m_i of the a_i band and its +1 companion c_i.
  std::vector<std::size_t> meridian(g);
  for (std::size_t i = 0; i < g; ++i) {
    const std::size_t m = out.trace.current().size();
    step(BlowUp{-1, std::vector<Integer>(m, 0), "m" + std::to_string(i + 1)});
    step(BlowUp{1, std::vector<Integer>(m + 1, 0), "c" + std::to_string(i + 1)});
    step(Slide{m, m + 1, 1});
    step(Slide{2 * i, m + 1, 1});
    meridian[i] = m;
  }
  out.twist_curves = out.trace.current().surgery_count();

  // Crossing changes: each slide over m_i moves one linking number with a_i by +-1.
  for (std::size_t i = 0; i < g; ++i) {
    const std::size_t a = 2 * i;
    for (std::size_t x = 0; x < cores; ++x) {
      if (x == a) continue;
      const Integer target = (x == a + 1) ? -1 : 0;
      Integer diff = target - out.trace.current().linking(a, x);
      const int sign = diff > 0 ? 1 : -1;
      for (; diff != 0; diff -= sign) step(Slide{x, meridian[i], sign});
    }
  }
  // Framings: kink plus slide changes the a_i framing by +-2.
  for (std::size_t i = 0; i < g; ++i) {
    const std::size_t a = 2 * i;
    Integer framing = out.trace.current().framing(a);
    if (framing % 2 != 0) throw Error(ErrorCode::TraceMismatch, "a" + std::to_string(i + 1) + " framing is odd after setup");
    const int sign = framing > 0 ? -1 : 1;
    for (; framing != 0; framing += 2 * sign) step(Slide{a, meridian[i], sign});
  }

  const IntMatrix& v = out.final_seifert();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t x = 0; x < cores; ++x) {
      const Integer expected_transposed = (x == 2 * i + 1) ? -1 : 0;
      if (v(2 * i, x) != 0 || v(x, 2 * i) != expected_transposed)
        throw Error(ErrorCode::TraceMismatch, "a" + std::to_string(i + 1) + " row not cleared");
    }
  if (out.twist_curves != 2 * g) throw Error(ErrorCode::TraceMismatch, "twist curve count is not 2g");
  return out;
}

}  // namespace untwist
