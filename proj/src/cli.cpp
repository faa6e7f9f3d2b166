#include "cuntzcf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cuntzcf/cfe.hpp"
#include "cuntzcf/cuntz.hpp"
#include "cuntzcf/equivalence.hpp"
#include "cuntzcf/errors.hpp"
#include "cuntzcf/families.hpp"
#include "cuntzcf/serialize.hpp"

namespace cuntzcf::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::string format = "text";
  std::optional<unsigned> approx;

  bool as_json() const { return format == "json"; }
};

void report_error(std::ostream& out, std::ostream& err, const Globals& g, const char* kind, const std::string& msg) {
  if (g.as_json()) {
    out << json{{"error", kind}, {"message", msg}}.dump() << '\n';
  }
  err << "error: " << msg << '\n';
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

// `-` reads the first nonblank stdin line; a JSON object there (the --format
// json output of another command) contributes its surd_text or block_text.
std::string read_literal(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() != '{') return line;
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ParseError("standard input holds malformed JSON");
    for (const char* key : {"surd_text", "block_text"}) {
      if (j.contains(key) && j[key].is_string()) return j[key].get<std::string>();
    }
    throw ParseError("standard input JSON has no surd_text or block_text");
  }
  throw ParseError("no literal on standard input");
}

bool is_surd_literal(std::string_view text) { return text.find("sqrt") != std::string_view::npos; }

QuadraticSurd require_omega(const QuadraticSurd& x) {
  if (!in_omega(x)) throw DomainError(to_string(x) + " is not in (0,1)");
  return x;
}

json surd_fields(const QuadraticSurd& x, const Globals& g) {
  json j{{"surd", surd_to_json(x)}, {"surd_text", to_string(x)}};
  if (g.approx) j["approx"] = decimal_approx(x, *g.approx);
  return j;
}

void print_approx(std::ostream& out, const QuadraticSurd& x, const Globals& g) {
  if (g.approx) out << "approx " << decimal_approx(x, *g.approx) << '\n';
}

json row_to_json(const FamilyRow& r) {
  return {{"family", r.family},     {"tuple", r.tuple},
          {"surd", r.surd},         {"expected", r.expected},
          {"got", r.got},           {"oracle_agrees", r.oracle_agrees},
          {"passed", r.passed},     {"note", r.note}};
}

std::string row_to_text(const FamilyRow& r) {
  std::string s = r.family + " (" + format_word(r.tuple) + ") " + r.surd + " expected " + r.expected + " got " + r.got;
  if (!r.note.empty()) s += " [" + r.note + "]";
  return s;
}

// --- commands ---------------------------------------------------------------

int cmd_expand(const std::string& literal, std::optional<std::size_t> terms, const Globals& g, std::istream& in,
               std::ostream& out) {
  const QuadraticSurd x = require_omega(parse_surd(read_literal(literal, in)));
  json j{{"command", "expand"}, {"input", surd_fields(x, g)}};
  std::string text;
  if (terms) {
    const Word w = cfe_expand(x, *terms);
    text = format_word(w);
    j["mode"] = "terms";
    j["terms"] = w;
  } else {
    const PeriodicCFE e = cfe_periodic(x);
    text = to_string(e);
    j["mode"] = "periodic";
    j["block"] = block_to_json(e);
  }
  j["text"] = text;
  if (g.as_json()) {
    out << j.dump() << '\n';
  } else {
    out << text << '\n';
    print_approx(out, x, g);
  }
  return kOk;
}

int cmd_solve(const std::string& literal, const Globals& g, std::istream& in, std::ostream& out) {
  const PeriodicCFE e = parse_block(read_literal(literal, in));
  const QuadraticSurd x = surd_from_cfe(e);
  const std::string cls = RepClass::cycle(e.period()).to_string();
  if (g.as_json()) {
    json j = surd_fields(x, g);
    j["command"] = "solve";
    j["block"] = block_to_json(e);
    j["block_text"] = to_string(e);
    j["class"] = cls;
    j["disc_poly"] = to_string(poly_discriminant(x));
    j["disc_field"] = to_string(field_discriminant(x));
    out << j.dump() << '\n';
  } else {
    out << to_string(x) << '\n'
        << "class " << cls << '\n'
        << "disc_poly " << to_string(poly_discriminant(x)) << '\n'
        << "disc_field " << to_string(field_discriminant(x)) << '\n';
    print_approx(out, x, g);
  }
  return kOk;
}

int cmd_equiv(const std::string& lx, const std::string& ly, const Globals& g, std::istream& in, std::ostream& out) {
  const QuadraticSurd x = require_omega(parse_surd(read_literal(lx, in)));
  const QuadraticSurd y = require_omega(parse_surd(read_literal(ly, in)));
  const bool same = modular_equivalent(x, y);
  const std::string cx = classify_surd(x).to_string();
  const std::string cy = classify_surd(y).to_string();
  if (g.as_json()) {
    json jx = surd_fields(x, g);
    jx["class"] = cx;
    json jy = surd_fields(y, g);
    jy["class"] = cy;
    out << json{{"command", "equiv"}, {"equivalent", same}, {"x", jx}, {"y", jy}}.dump() << '\n';
  } else {
    out << (same ? "equivalent" : "inequivalent") << '\n' << "x " << cx << '\n' << "y " << cy << '\n';
  }
  return same ? kOk : kFailure;
}

int cmd_classify(const std::string& literal, const Globals& g, std::istream& in, std::ostream& out) {
  const QuadraticSurd x = require_omega(parse_surd(read_literal(literal, in)));
  const PeriodicCFE e = cfe_periodic(x);
  const std::string cls = RepClass::cycle(e.period()).to_string();
  if (g.as_json()) {
    json j{{"command", "classify"}, {"input", surd_fields(x, g)}, {"class", cls}, {"block", block_to_json(e)}};
    out << j.dump() << '\n';
  } else {
    out << cls << '\n';
  }
  return kOk;
}

int cmd_tau(const std::string& literal, const Globals& g, std::istream& in, std::ostream& out) {
  const QuadraticSurd x = parse_surd(read_literal(literal, in));
  const QuadraticSurd t = gauss_tau(x);
  if (g.as_json()) {
    json j = surd_fields(t, g);
    j["command"] = "tau";
    j["input"] = surd_fields(x, g);
    out << j.dump() << '\n';
  } else {
    out << to_string(t) << '\n';
    print_approx(out, t, g);
  }
  return kOk;
}

int cmd_verify_examples(const Globals& g, std::ostream& out) {
  const ExampleReport r = verify_examples(Exec::Parallel);
  const auto failures = r.failures();
  json jf = json::array();
  for (const auto& row : failures) jf.push_back(row_to_json(row));
  json jd = json::array();
  for (const auto& row : r.discrepancies) jd.push_back(row_to_json(row));
  if (g.as_json()) {
    json j{{"command", "verify-examples"},
           {"ok", failures.empty()},
           {"rows", r.rows.size()},
           {"failures", jf},
           {"discrepancies", jd},
           {"three_cycle_123",
            {{"radicand", to_string(r.radicand_123)},
             {"surd_text", r.solved_123},
             {"disc_poly", to_string(r.poly_discriminant_123)},
             {"disc_field", to_string(r.field_discriminant_123)}}}};
    out << j.dump() << '\n';
  } else {
    out << "rows " << r.rows.size() << " failures " << failures.size() << " discrepancies "
        << r.discrepancies.size() << '\n';
    for (const auto& row : r.discrepancies) out << "discrepancy " << row_to_text(row) << '\n';
    out << "three-cycle (1,2,3): D " << to_string(r.radicand_123) << ", solved " << r.solved_123 << ", disc_poly "
        << to_string(r.poly_discriminant_123) << ", disc_field " << to_string(r.field_discriminant_123) << '\n';
    if (!failures.empty()) out << jf.dump(2) << '\n';
  }
  return failures.empty() ? kOk : kFailure;
}

// --- corpus -----------------------------------------------------------------

struct CorpusLine {
  std::size_t line = 0;
  std::string payload;
  std::optional<std::string> expected;
};

struct CorpusResult {
  json record;
  bool failed = false;
};

CorpusResult evaluate_line(const CorpusLine& entry, const std::string& mode) {
  json rec{{"line", entry.line}, {"input", entry.payload}};
  if (entry.expected) rec["expected"] = *entry.expected;
  try {
    const bool surd_input = is_surd_literal(entry.payload);
    std::string command = mode;
    if (command == "auto") command = surd_input ? "expand" : "solve";
    rec["command"] = command;
    if (surd_input != (command != "solve")) {
      throw ParseError(command + " needs a " + (command == "solve" ? "block" : "surd") + " literal");
    }

    QuadraticSurd x = surd_input ? require_omega(parse_surd(entry.payload)) : surd_from_cfe(parse_block(entry.payload));
    const PeriodicCFE block = surd_input ? cfe_periodic(x) : parse_block(entry.payload);
    const RepClass cls = RepClass::cycle(block.period());
    if (command == "expand") {
      rec["output"] = to_string(block);
    } else if (command == "solve") {
      rec["output"] = to_string(x);
    } else {
      rec["output"] = cls.to_string();
    }

    if (!entry.expected) {
      rec["status"] = "ok";
      return {rec, false};
    }
    const std::string& want = *entry.expected;
    bool match = false;
    if (is_surd_literal(want)) {
      match = parse_surd(want) == x;
    } else if (trim(want).rfind("P(", 0) == 0) {
      match = pj_equivalent(parse_rep_class(want), cls) == Verdict::Yes;
    } else {
      match = parse_block(want) == block;
    }
    rec["status"] = match ? "pass" : "fail";
    return {rec, !match};
  } catch (const Error& e) {
    rec["status"] = "error";
    rec["error"] = e.what();
    return {rec, true};
  }
}

int cmd_corpus(const std::string& path, const std::string& mode, std::string results_path, const Globals& g,
               std::ostream& out, std::ostream& err) {
  std::ifstream file(path);
  if (!file) {
    report_error(out, err, g, "io", "cannot read corpus file " + path);
    return kParseError;
  }
  std::vector<CorpusLine> entries;
  std::string raw;
  for (std::size_t n = 1; std::getline(file, raw); ++n) {
    const auto hash = raw.find('#');
    const std::string body = trim(std::string_view(raw).substr(0, hash));
    if (body.empty()) continue;
    CorpusLine entry{n, body, std::nullopt};
    if (const auto arrow = body.find("=>"); arrow != std::string::npos) {
      entry.payload = trim(std::string_view(body).substr(0, arrow));
      entry.expected = trim(std::string_view(body).substr(arrow + 2));
    }
    entries.push_back(std::move(entry));
  }

  std::vector<CorpusResult> results(entries.size());
  const auto count = static_cast<std::ptrdiff_t>(entries.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    results[static_cast<std::size_t>(i)] = evaluate_line(entries[static_cast<std::size_t>(i)], mode);
  }

  if (results_path.empty()) results_path = path + ".results.jsonl";
  std::ofstream sink(results_path);
  if (!sink) {
    report_error(out, err, g, "io", "cannot write results file " + results_path);
    return kParseError;
  }
  std::size_t pass = 0, fail = 0, error = 0, ok = 0;
  for (const auto& r : results) {
    sink << r.record.dump() << '\n';
    const std::string status = r.record["status"];
    if (status == "pass") ++pass;
    if (status == "fail") ++fail;
    if (status == "error") ++error;
    if (status == "ok") ++ok;
  }
  if (g.as_json()) {
    out << json{{"command", "corpus"}, {"entries", results.size()}, {"pass", pass}, {"fail", fail},
                {"error", error},      {"ok", ok},                  {"results", results_path}}
               .dump()
        << '\n';
  } else {
    out << "entries " << results.size() << " pass " << pass << " fail " << fail << " error " << error << " ok " << ok
        << '\n';
    for (const auto& r : results) {
      if (!r.failed) continue;
      out << "line " << r.record["line"].get<std::size_t>() << ": " << r.record["status"].get<std::string>();
      if (r.record.contains("error")) out << " (" << r.record["error"].get<std::string>() << ")";
      if (r.record.contains("output")) out << " got " << r.record["output"].get<std::string>();
      out << '\n';
    }
  }
  return fail + error == 0 ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continued fractions of quadratic surds and permutative Cuntz representations", "cuntzcf"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--approx", g.approx, "Append a decimal approximation with this many digits")
      ->check(CLI::Range(0u, 100000u));

  std::string lit1, lit2, block_lit, corpus_path, corpus_mode = "auto", results_path;
  std::optional<std::size_t> terms;

  auto* expand = app.add_subcommand("expand", "Partial quotients of a surd in (0,1)");
  expand->add_option("surd", lit1, "Surd literal, or - for stdin")->required();
  auto* terms_opt = expand->add_option("--terms", terms, "Print the first n partial quotients");
  expand->add_flag("--periodic", "Print the canonical eventually periodic block (default)")->excludes(terms_opt);

  auto* solve = app.add_subcommand("solve", "Surd in (0,1) with a given expansion block");
  solve->add_option("block", block_lit, "Block literal such as 2,(1,3), or - for stdin")->required();

  auto* equiv = app.add_subcommand("equiv", "Decide modular equivalence of two surds in (0,1)");
  equiv->add_option("x", lit1, "First surd literal")->required();
  equiv->add_option("y", lit2, "Second surd literal")->required();

  auto* classify = app.add_subcommand("classify", "Representation class P(J) of a surd in (0,1)");
  classify->add_option("surd", lit1, "Surd literal, or - for stdin")->required();

  auto* tau = app.add_subcommand("tau", "Apply the Gauss map 1/x - floor(1/x)");
  tau->add_option("surd", lit1, "Surd literal, or - for stdin")->required();

  auto* verify = app.add_subcommand("verify-examples", "Check the closed-form cycle families");

  auto* corpus = app.add_subcommand("corpus", "Run a line-oriented regression corpus");
  corpus->add_option("path", corpus_path, "Corpus file")->required();
  corpus->add_option("mode", corpus_mode, "expand, solve, classify or auto")
      ->check(CLI::IsMember({"auto", "expand", "solve", "classify"}));
  corpus->add_option("--results", results_path, "Per-line JSON output (default <path>.results.jsonl)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (expand->parsed()) return cmd_expand(lit1, terms, g, in, out);
    if (solve->parsed()) return cmd_solve(block_lit, g, in, out);
    if (equiv->parsed()) return cmd_equiv(lit1, lit2, g, in, out);
    if (classify->parsed()) return cmd_classify(lit1, g, in, out);
    if (tau->parsed()) return cmd_tau(lit1, g, in, out);
    if (verify->parsed()) return cmd_verify_examples(g, out);
    return cmd_corpus(corpus_path, corpus_mode, results_path, g, out, err);
  } catch (const ParseError& e) {
    report_error(out, err, g, "parse", e.what());
    return kParseError;
  } catch (const EmptyWord& e) {
    report_error(out, err, g, "parse", e.what());
    return kParseError;
  } catch (const Error& e) {
    report_error(out, err, g, "domain", e.what());
    return kDomainError;
  }
}

}  // namespace cuntzcf::cli
