#include "untwist/cli.hpp"

#include "untwist/bounds.hpp"
#include "untwist/error.hpp"
#include "untwist/json_io.hpp"
#include "untwist/kirby.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>

namespace untwist::cli {

namespace {

using io::Json;

struct Options {
  bool pretty = false;
  std::string file;
  std::string catalog_name;
  std::string primes;
  bool rationals = false;
  long long framing = 0;
  long long alpha = 0;
  std::string script;
  std::vector<std::string> inputs;
  std::string output;
};

SeifertMatrix load_seifert(const std::string& file, const std::string& catalog_name) {
  if (!catalog_name.empty()) return catalog_entry(catalog_name).matrix;
  return io::parse_seifert_file(io::read_file(file));
}

void print_matrix(std::ostream& os, const IntMatrix& m, const std::string& indent = "  ") {
  if (m.rows() == 0) {
    os << indent << "(empty)\n";
    return;
  }
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) width = std::max(width, m(r, c).str().size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent;
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << std::setw(static_cast<int>(width)) << m(r, c).str();
    os << '\n';
  }
}

std::set<Field> requested_fields(const Options& o) {
  if (!o.primes.empty()) {
    std::set<Field> fields = parse_prime_list(o.primes);
    if (o.rationals) fields.insert(Field::rationals());
    return fields;
  }
  if (const char* env = std::getenv("UNTWIST_DEFAULT_PRIMES"); env != nullptr && *env != '\0')
    return default_fields(std::string_view(env));
  return default_fields();
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const SeifertMatrix v = load_seifert(o.file, o.catalog_name);
  const BoundsReport report = bounds_report(v, requested_fields(o));
  if (!o.pretty) {
    out << io::dump_json(io::to_json(report)) << '\n';
    return kExitOk;
  }
  out << "genus            " << report.genus << '\n'
      << "alexander        " << report.alexander.to_string() << '\n';
  for (const auto& [field, rank] : report.ranks)
    out << "rank over " << std::left << std::setw(7) << field.name() << rank << '\n';
  out << "lower bound      " << report.lower_bound << '\n'
      << "upper bound      " << report.upper_bound << " (for the presented surface)\n"
      << "tight            " << (report.tight ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_ohyama(const Options& o, std::ostream& out) {
  const OhyamaTrace t = ohyama_trace(o.framing, o.alpha);
  if (o.pretty) {
    for (std::size_t i = 0; i < 3; ++i) {
      out << "checkpoint " << i + 1 << " (after " << t.checkpoints[i] << " moves)\n";
      print_matrix(out, t.checkpoint(i));
    }
    out << "lk(K,S1) = " << t.linking_s1 << ", lk(K,S2) = " << t.linking_s2 << '\n';
    return kExitOk;
  }
  Json checkpoints = Json::array();
  for (std::size_t i = 0; i < 3; ++i) checkpoints.push_back(io::to_json(t.checkpoint(i)));
  Json j = Json::object();
  j["f"] = o.framing;
  j["alpha"] = o.alpha;
  j["checkpoints"] = std::move(checkpoints);
  j["linking_numbers"] = Json::array({io::to_json(t.linking_s1), io::to_json(t.linking_s2)});
  j["trace"] = io::to_json(t.trace);
  out << io::dump_json(j) << '\n';
  return kExitOk;
}

int cmd_replay(const Options& o, std::ostream& out) {
  const io::MoveScript script = io::parse_move_script(io::read_file(o.script));
  SurgeryPresentation state = script.initial;
  for (std::size_t i = 0; i < script.moves.size(); ++i) {
    state = apply_move(state, script.moves[i]);
    if (o.pretty) {
      out << "step " << i + 1 << ": " << describe(script.moves[i]) << '\n';
      print_matrix(out, state.matrix());
    } else {
      Json line = Json::object();
      line["step"] = i + 1;
      line["move"] = io::to_json(script.moves[i]);
      line["matrix"] = io::to_json(state.matrix());
      line["null_homologous"] = is_null_homologous(state);
      out << io::dump_json(line) << '\n';
    }
  }
  return kExitOk;
}

int cmd_unknot(const Options& o, std::ostream& out) {
  const UnknottingTrace t = unknotting_trace(load_seifert(o.file, o.catalog_name));
  if (!o.pretty) {
    out << io::dump_json(io::to_json(t)) << '\n';
    return kExitOk;
  }
  out << "genus " << t.start.genus() << ", twist curves " << t.twist_curves << ", moves " << t.trace.size() << '\n'
      << "symplectic, parity-normalized Seifert matrix\n";
  print_matrix(out, t.start.entries());
  out << "final Seifert matrix\n";
  print_matrix(out, t.final_seifert());
  return kExitOk;
}

int cmd_sum(const Options& o, std::ostream& out) {
  SeifertMatrix total;
  for (const auto& f : o.inputs) total = connected_sum(total, io::parse_seifert_file(io::read_file(f)));
  const std::string text = io::write_seifert_file(total);
  if (o.output.empty()) out << text;
  else io::write_file(o.output, text);
  return kExitOk;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  const SeifertMatrix v = load_seifert(o.file, o.catalog_name);
  const auto [reduced, u1] = symplectic_reduce(v);
  const auto [normal, u2] = parity_normalize(reduced);
  const BasisChange u = u1.then(u2);
  if (o.pretty) {
    out << "normalized\n";
    print_matrix(out, normal.entries());
    out << "basis change U (V' = U^T V U)\n";
    print_matrix(out, u.matrix());
    return kExitOk;
  }
  Json j = Json::object();
  if (!v.name().empty()) j["name"] = v.name();
  j["matrix"] = io::to_json(normal.entries());
  j["basis_change"] = io::to_json(u.matrix());
  out << io::dump_json(j) << '\n';
  return kExitOk;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  if (o.pretty) {
    for (const auto& e : catalog())
      out << std::left << std::setw(18) << e.name << "g=" << e.matrix.genus() << "  Delta = "
          << alexander_polynomial(e.matrix).to_string() << "  " << e.notes << '\n';
    return kExitOk;
  }
  Json list = Json::array();
  for (const auto& e : catalog()) {
    Json j = Json::object();
    j["name"] = e.name;
    j["genus"] = e.matrix.genus();
    j["matrix"] = io::to_json(e.matrix.entries());
    j["alexander_text"] = alexander_polynomial(e.matrix).to_string();
    j["notes"] = e.notes;
    list.push_back(std::move(j));
  }
  out << io::dump_json(list) << '\n';
  return kExitOk;
}

void add_seifert_source(CLI::App* app, Options& o, bool positional) {
  auto* file = positional ? app->add_option("file", o.file, "Seifert matrix JSON file")
                          : app->add_option("--file", o.file, "Seifert matrix JSON file");
  auto* cat = app->add_option("--catalog", o.catalog_name, "Use a bundled catalog entry instead of a file");
  file->excludes(cat);
  app->parse_complete_callback([app, file, cat] {
    if (file->count() + cat->count() == 0)
      throw CLI::RequiredError(app->get_name() + ": a Seifert matrix file or --catalog");
  });
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bounds on null-homologous untwisting numbers and Kirby move bookkeeping", "untwist"};
  app.require_subcommand(1);

  std::function<int()> action;
  auto pretty = [&](CLI::App* sub) { sub->add_flag("--pretty", o.pretty, "Human-readable output"); };

  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on null-homologous twists");
  add_seifert_source(bounds, o, false);
  bounds->add_option("--primes", o.primes, "Comma-separated primes (default 2,3,5,7,11,13 or UNTWIST_DEFAULT_PRIMES)");
  bounds->add_flag("--rationals", o.rationals, "Also use Q when --primes is given");
  pretty(bounds);
  bounds->final_callback([&] { action = [&] { return cmd_bounds(o, out); }; });

  auto* kirby = app.add_subcommand("kirby", "Kirby calculus on framing/linking matrices");
  kirby->require_subcommand(1);
  auto* ohyama = kirby->add_subcommand("ohyama", "Replay the two-twist unknotting matrices");
  ohyama->add_option("--f", o.framing, "Framing of K")->required();
  ohyama->add_option("--alpha", o.alpha, "Algebraic number of slides of K over S1")->required();
  pretty(ohyama);
  ohyama->final_callback([&] { action = [&] { return cmd_ohyama(o, out); }; });
  auto* replay_cmd = kirby->add_subcommand("replay", "Apply a move script, one matrix per move");
  replay_cmd->add_option("script", o.script, "Move script JSON")->required();
  pretty(replay_cmd);
  replay_cmd->final_callback([&] { action = [&] { return cmd_replay(o, out); }; });
  auto* unknot = kirby->add_subcommand("unknot", "Unknot with 2g null-homologous twists (matrix shadow)");
  add_seifert_source(unknot, o, true);
  pretty(unknot);
  unknot->final_callback([&] { action = [&] { return cmd_unknot(o, out); }; });

  auto* sum = app.add_subcommand("sum", "Connected sum of Seifert matrices");
  sum->add_option("inputs", o.inputs, "Seifert matrix JSON files")->required();
  sum->add_option("-o,--output", o.output, "Write the result here instead of stdout");
  sum->final_callback([&] { action = [&] { return cmd_sum(o, out); }; });

  auto* normalize = app.add_subcommand("normalize", "Symplectic basis with odd a-framings");
  add_seifert_source(normalize, o, true);
  pretty(normalize);
  normalize->final_callback([&] { action = [&] { return cmd_normalize(o, out); }; });

  auto* cat = app.add_subcommand("catalog", "Bundled knots");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "List catalog entries");
  pretty(list);
  list->final_callback([&] { action = [&] { return cmd_catalog(o, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; everything else is a usage error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  if (!action) {
    err << "error: no command\n";
    return kExitUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
}

}  // namespace untwist::cli
