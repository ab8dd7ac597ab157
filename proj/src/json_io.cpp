#include "untwist/json_io.hpp"

#include "untwist/error.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace untwist::io {

namespace {

constexpr std::uint8_t kBigIntSubtype = 0x42;

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Json bigint_value(const std::string& digits) {
  return Json::binary(Json::binary_t::container_type(digits.begin(), digits.end()), kBigIntSubtype);
}

/// DOM builder that keeps integer literals too large for int64 exactly.
class BigIntSax : public nlohmann::detail::json_sax_dom_parser<Json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<Json>;
  using Base::Base;

  bool number_float(number_float_t value, const string_t& text) {
    if (is_integer_literal(text)) {
      Json tagged = bigint_value(text);
      return Base::binary(tagged.get_binary());
    }
    return Base::number_float(value, text);
  }
};

std::string bigint_text(const Json& v) {
  const auto& b = v.get_binary();
  return std::string(b.begin(), b.end());
}

bool is_bigint(const Json& v) {
  return v.is_binary() && v.get_binary().has_subtype() && v.get_binary().subtype() == kBigIntSubtype;
}

bool is_scalar(const Json& v) { return !v.is_array() && !v.is_object(); }

void dump_to(std::ostringstream& os, const Json& v, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  if (is_bigint(v)) {
    os << bigint_text(v);
  } else if (v.is_array()) {
    if (v.empty()) {
      os << "[]";
      return;
    }
    // Arrays of scalars (matrix rows, coefficient lists) stay on one line.
    const bool inline_array = std::all_of(v.begin(), v.end(), is_scalar);
    os << '[';
    bool first = true;
    for (const auto& item : v) {
      if (!first) os << (pretty && inline_array ? ", " : ",");
      first = false;
      if (!inline_array) newline(depth + 1);
      dump_to(os, item, indent, depth + 1);
    }
    if (!inline_array) newline(depth);
    os << ']';
  } else if (v.is_object()) {
    if (v.empty()) {
      os << "{}";
      return;
    }
    os << '{';
    bool first = true;
    for (const auto& [key, item] : v.items()) {
      if (!first) os << ',';
      first = false;
      newline(depth + 1);
      os << Json(key).dump() << (pretty ? ": " : ":");
      dump_to(os, item, indent, depth + 1);
    }
    newline(depth);
    os << '}';
  } else {
    os << v.dump();
  }
}

[[noreturn]] void schema(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, where + ": " + what);
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_from_json(const Json& v, const std::string& where) {
  const Integer n = integer_from_json(v, where);
  if (n < 0 || n > std::numeric_limits<std::int64_t>::max()) schema(where, "expected a nonnegative index");
  return static_cast<std::size_t>(n);
}

int sign_from_json(const Json& v, const std::string& where) {
  const Integer n = integer_from_json(v, where);
  if (n != 1 && n != -1) schema(where, "expected +1 or -1");
  return static_cast<int>(n);
}

template <class K>
Json poly_json(const LaurentPoly<K>& p, auto&& element) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(element(c));
  Json j = Json::object();
  j["lowest_exp"] = p.lowest_exp();
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json module_json(const auto& module) {
  Json factors = Json::array();
  Json text = Json::array();
  for (const auto& f : module.invariant_factors) {
    factors.push_back(to_json(f));
    text.push_back(f.to_string());
  }
  Json j = Json::object();
  j["field"] = module.field.name();
  j["rank"] = module.rank();
  j["invariant_factors"] = std::move(factors);
  j["invariant_factors_text"] = std::move(text);
  return j;
}

}  // namespace

Json parse_json(std::string_view text) {
  Json result;
  BigIntSax sax(result, true);
  try {
    Json::sax_parse(text, &sax);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedJson, e.what());
  }
  return result;
}

std::string dump_json(const Json& value, int indent) {
  std::ostringstream os;
  dump_to(os, value, indent, 0);
  return os.str();
}

Json to_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(n));
  return bigint_value(n.str());
}

Integer integer_from_json(const Json& value, const std::string& where) {
  if (value.is_number_unsigned()) return Integer(value.get<std::uint64_t>());
  if (value.is_number_integer()) return Integer(value.get<std::int64_t>());
  if (is_bigint(value)) return Integer(bigint_text(value));
  schema(where, "expected an integer, got " + std::string(value.type_name()));
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& value, const std::string& where) {
  if (!value.is_array()) schema(where, "expected an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (std::size_t r = 0; r < value.size(); ++r) {
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!value[r].is_array()) schema(rw, "expected an array of integers");
    if (r > 0 && value[r].size() != rows.front().size())
      schema(rw, "row has " + std::to_string(value[r].size()) + " entries, expected " + std::to_string(rows.front().size()));
    std::vector<Integer> row;
    for (std::size_t c = 0; c < value[r].size(); ++c)
      row.push_back(integer_from_json(value[r][c], rw + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(row));
  }
  return IntMatrix(rows);
}

SeifertMatrix parse_seifert_file(std::string_view bytes) {
  const Json doc = parse_json(bytes);
  if (!doc.is_object()) schema("<root>", "expected an object");
  std::string name;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) schema("name", "expected a string");
    name = it->get<std::string>();
  }
  IntMatrix m = matrix_from_json(require(doc, "matrix", "<root>"), "matrix");
  try {
    return SeifertMatrix::validate(std::move(m), std::move(name));
  } catch (const Error& e) {
    throw Error(ErrorCode::SchemaViolation, e.code(), std::string("matrix: ") + e.what());
  }
}

std::string write_seifert_file(const SeifertMatrix& v) {
  Json j = Json::object();
  if (!v.name().empty()) j["name"] = v.name();
  j["matrix"] = to_json(v.entries());
  return dump_json(j, 2) + "\n";
}

std::string field_element_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Json to_json(const LaurentPoly<PrimeField>& p) {
  return poly_json(p, [](std::int64_t c) { return Json(c); });
}

Json to_json(const LaurentPoly<RationalField>& p) {
  return poly_json(p, [](const Rational& c) { return Json(field_element_string(c)); });
}

LaurentPoly<PrimeField> prime_poly_from_json(const Json& value, const PrimeField& field) {
  const Integer low = integer_from_json(require(value, "lowest_exp", "polynomial"), "lowest_exp");
  const Json& coeffs = require(value, "coeffs", "polynomial");
  if (!coeffs.is_array()) schema("coeffs", "expected an array");
  std::vector<std::int64_t> c;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    c.push_back(field.from_integer(integer_from_json(coeffs[i], "coeffs[" + std::to_string(i) + "]")));
  return LaurentPoly<PrimeField>(field, std::move(c), static_cast<std::int64_t>(low));
}

LaurentPoly<RationalField> rational_poly_from_json(const Json& value) {
  const Integer low = integer_from_json(require(value, "lowest_exp", "polynomial"), "lowest_exp");
  const Json& coeffs = require(value, "coeffs", "polynomial");
  if (!coeffs.is_array()) schema("coeffs", "expected an array");
  std::vector<Rational> c;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string where = "coeffs[" + std::to_string(i) + "]";
    if (!coeffs[i].is_string()) schema(where, "expected a \"num/den\" string");
    const std::string s = coeffs[i].get<std::string>();
    const auto slash = s.find('/');
    try {
      const Integer num(s.substr(0, slash));
      const Integer den = slash == std::string::npos ? Integer(1) : Integer(s.substr(slash + 1));
      if (den == 0) schema(where, "zero denominator");
      c.emplace_back(num, den);
    } catch (const std::runtime_error&) {
      schema(where, "not a rational: '" + s + "'");
    }
  }
  return LaurentPoly<RationalField>(RationalField{}, std::move(c), static_cast<std::int64_t>(low));
}

Json to_json(const AnyAlexanderModule& module) {
  return std::visit([](const auto& m) { return module_json(m); }, module);
}

Json to_json(const BoundsReport& report) {
  Json ranks = Json::object();
  for (const auto& [field, rank] : report.ranks) ranks[field.name()] = rank;
  Json j = Json::object();
  j["genus"] = report.genus;
  j["alexander"] = to_json(report.alexander);
  j["alexander_text"] = report.alexander.to_string();
  j["ranks"] = std::move(ranks);
  j["lower_bound"] = report.lower_bound;
  j["upper_bound"] = report.upper_bound;
  j["upper_bound_scope"] = "presented surface";
  j["tight"] = report.tight;
  return j;
}

Json to_json(const SurgeryPresentation& p) {
  Json j = Json::object();
  j["matrix"] = to_json(p.matrix());
  j["n"] = p.link_count();
  j["k"] = p.surgery_count();
  j["labels"] = p.labels();
  return j;
}

SurgeryPresentation presentation_from_json(const Json& value) {
  IntMatrix m = matrix_from_json(require(value, "matrix", "initial"), "initial.matrix");
  const std::size_t n = index_from_json(require(value, "n", "initial"), "initial.n");
  if (auto it = value.find("k"); it != value.end()) {
    const std::size_t k = index_from_json(*it, "initial.k");
    if (n + k != m.rows())
      schema("initial", "n + k = " + std::to_string(n + k) + " but the matrix has " + std::to_string(m.rows()) + " rows");
  }
  std::vector<std::string> labels;
  if (auto it = value.find("labels"); it != value.end()) {
    if (!it->is_array()) schema("initial.labels", "expected an array of strings");
    for (const auto& l : *it) {
      if (!l.is_string()) schema("initial.labels", "expected an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  try {
    return SurgeryPresentation(std::move(m), n, std::move(labels));
  } catch (const Error& e) {
    throw Error(ErrorCode::SchemaViolation, e.code(), std::string("initial: ") + e.what());
  }
}

Json to_json(const KirbyMove& move) {
  Json j = Json::object();
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Slide>) {
          j["op"] = "slide";
          j["component"] = m.component;
          j["over"] = m.over;
          j["sign"] = m.sign;
        } else if constexpr (std::is_same_v<T, BlowDown>) {
          j["op"] = "blow_down";
          j["component"] = m.component;
          j["declared_unknotted"] = m.declared_unknotted;
        } else {
          j["op"] = "blow_up";
          j["framing"] = m.framing;
          Json lk = Json::array();
          for (const auto& x : m.linking) lk.push_back(to_json(x));
          j["linking"] = std::move(lk);
          if (!m.label.empty()) j["label"] = m.label;
        }
      },
      move);
  return j;
}

KirbyMove move_from_json(const Json& value, const std::string& where) {
  const Json& op = require(value, "op", where);
  if (!op.is_string()) schema(where + ".op", "expected a string");
  const std::string name = op.get<std::string>();
  if (name == "slide") {
    return Slide{index_from_json(require(value, "component", where), where + ".component"),
                 index_from_json(require(value, "over", where), where + ".over"),
                 sign_from_json(require(value, "sign", where), where + ".sign")};
  }
  if (name == "blow_down") {
    BlowDown m{index_from_json(require(value, "component", where), where + ".component"), true};
    if (auto it = value.find("declared_unknotted"); it != value.end()) {
      if (!it->is_boolean()) schema(where + ".declared_unknotted", "expected a boolean");
      m.declared_unknotted = it->get<bool>();
    }
    return m;
  }
  if (name == "blow_up") {
    BlowUp m;
    m.framing = sign_from_json(require(value, "framing", where), where + ".framing");
    const Json& lk = require(value, "linking", where);
    if (!lk.is_array()) schema(where + ".linking", "expected an array of integers");
    for (std::size_t i = 0; i < lk.size(); ++i)
      m.linking.push_back(integer_from_json(lk[i], where + ".linking[" + std::to_string(i) + "]"));
    if (auto it = value.find("label"); it != value.end() && it->is_string()) m.label = it->get<std::string>();
    return m;
  }
  schema(where + ".op", "unknown move '" + name + "'");
}

MoveScript parse_move_script(std::string_view bytes) {
  const Json doc = parse_json(bytes);
  MoveScript script{presentation_from_json(require(doc, "initial", "<root>")), {}};
  const Json& moves = require(doc, "moves", "<root>");
  if (!moves.is_array()) schema("moves", "expected an array");
  for (std::size_t i = 0; i < moves.size(); ++i)
    script.moves.push_back(move_from_json(moves[i], "moves[" + std::to_string(i) + "]"));
  return script;
}

Json to_json(const MoveTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps()) {
    Json step = Json::object();
    step["move"] = to_json(s.move);
    step["matrix"] = to_json(s.result.matrix());
    steps.push_back(std::move(step));
  }
  Json j = Json::object();
  j["initial"] = to_json(trace.initial());
  j["steps"] = std::move(steps);
  return j;
}

MoveTrace parse_trace(std::string_view bytes) {
  const Json doc = parse_json(bytes);
  MoveTrace trace(presentation_from_json(require(doc, "initial", "<root>")));
  const Json& steps = require(doc, "steps", "<root>");
  if (!steps.is_array()) schema("steps", "expected an array");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string where = "steps[" + std::to_string(i) + "]";
    KirbyMove move = move_from_json(require(steps[i], "move", where), where + ".move");
    IntMatrix m = matrix_from_json(require(steps[i], "matrix", where), where + ".matrix");
    // Labels and link count follow the move; only the matrix is recorded.
    SurgeryPresentation replayed = apply_move(trace.current(), move);
    if (!(replayed.matrix() == m))
      throw Error(ErrorCode::TraceMismatch, where + " does not match the replayed matrix");
    trace.append_recorded(std::move(move), std::move(replayed));
  }
  return trace;
}

Json to_json(const UnknottingTrace& t) {
  Json j = Json::object();
  j["genus"] = t.start.genus();
  j["twist_curves"] = t.twist_curves;
  j["basis_change"] = to_json(t.basis.matrix());
  j["start_seifert"] = to_json(t.start.entries());
  j["final_seifert"] = to_json(t.final_seifert());
  j["null_homologous_throughout"] =
      std::all_of(t.knot_states.begin(), t.knot_states.end(), is_null_homologous);
  j["trace"] = to_json(t.trace);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

}  // namespace untwist::io
