#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "chordbracket/bracket.hpp"
#include "chordbracket/census.hpp"
#include "chordbracket/families.hpp"
#include "chordbracket/topology.hpp"

namespace chordbracket::cli {

namespace {

enum class Format { Text, Json };

struct Options {
  Format format = Format::Text;
  bool gauss = false;
  std::vector<std::string> diagrams;
  int d = 0;
  unsigned threads = 0;
  CensusMode mode = CensusMode::Pruned;
  bool positive = false;
  bool negative = false;
  std::string at;
  std::string name;
  std::optional<int> odd;
  std::optional<int> even;
  int span = 0;
};

ChordDiagram read_diagram(const std::string &text, bool gauss) {
  if (gauss)
    return parse_gauss(text);
  const auto first = std::find_if_not(text.begin(), text.end(),
                                      [](unsigned char ch) { return std::isspace(ch); });
  if (first != text.end() && *first == '{')
    return parse_json(text);
  return parse_pairs(text);
}

std::string format_poly(const LaurentPoly &p, Format fmt) {
  return fmt == Format::Json ? p.to_json() : p.to_string();
}

std::string format_diagram(const ChordDiagram &c, Format fmt) {
  return fmt == Format::Json ? c.to_json() : c.to_string();
}

std::string format_int(const char *key, std::optional<int> value, Format fmt) {
  const std::string v = value ? std::to_string(*value) : (fmt == Format::Json ? "null" : "undefined");
  if (fmt == Format::Text)
    return v;
  return std::string("{\"") + key + "\": " + v + "}";
}

void add_format(CLI::App *sub, Options &opt) {
  sub->add_option("--format", opt.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}}));
}

CLI::App *add_diagram_command(CLI::App &app, Options &opt, const std::string &name,
                              const std::string &help, std::size_t diagrams = 1) {
  auto *sub = app.add_subcommand(name, help);
  sub->add_option("diagram", opt.diagrams,
                  diagrams == 1 ? "Diagram: pair list, JSON or (with --gauss) a Gauss word"
                                : "Diagrams: pair lists, JSON or (with --gauss) Gauss words")
      ->required()
      ->expected(static_cast<int>(diagrams));
  sub->add_flag("--gauss", opt.gauss, "Read diagrams as signed Gauss words");
  add_format(sub, opt);
  return sub;
}

void add_threads(CLI::App *sub, Options &opt) {
  sub->add_option("--threads", opt.threads, "Worker threads (default: hardware concurrency)")
      ->check(CLI::PositiveNumber);
}

int dispatch(const CLI::App &app, Options &opt, std::ostream &out) {
  const auto *sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();
  const Format fmt = opt.format;
  const CensusOptions census_options{opt.threads};

  auto diagram = [&](std::size_t k) { return read_diagram(opt.diagrams.at(k), opt.gauss); };

  if (cmd == "compute") {
    out << format_poly(bracket(diagram(0)), fmt) << '\n';
  } else if (cmd == "kj") {
    out << format_poly(kauffman_jones(diagram(0)), fmt) << '\n';
  } else if (cmd == "span") {
    out << format_int("span", bracket_span(diagram(0)), fmt) << '\n';
  } else if (cmd == "bound") {
    out << format_int("bound", min_self_intersection_lower_bound(diagram(0)), fmt) << '\n';
  } else if (cmd == "invariants") {
    const auto inv = neighborhood_invariants(diagram(0));
    out << (fmt == Format::Json ? to_json(inv) : to_string(inv)) << '\n';
  } else if (cmd == "stack") {
    out << format_diagram(stack(diagram(0), diagram(1)), fmt) << '\n';
  } else if (cmd == "reverse") {
    out << format_diagram(reverse(diagram(0)), fmt) << '\n';
  } else if (cmd == "monogon") {
    const ChordDiagram c = diagram(0);
    const bool positive = !opt.negative;
    ChordDiagram result;
    if (opt.at.empty() || opt.at == "wrap") {
      result = insert_monogon_wrap(c, positive);
    } else {
      int ell = 0;
      try {
        std::size_t used = 0;
        ell = std::stoi(opt.at, &used);
        if (used != opt.at.size())
          throw std::invalid_argument("trailing characters");
      } catch (const std::exception &) {
        throw CLI::ValidationError("--at", "expected an integer position or 'wrap'");
      }
      result = insert_monogon(c, ell, positive);
    }
    out << format_diagram(result, fmt) << '\n';
  } else if (cmd == "family") {
    ChordDiagram c;
    if (!opt.name.empty())
      c = named_diagram(opt.name);
    else if (opt.odd)
      c = family_odd(*opt.odd);
    else
      c = family_even(opt.even.value());
    out << format_diagram(c, fmt) << '\n';
  } else if (cmd == "census") {
    const auto census = span_census(opt.d, census_options);
    out << (fmt == Format::Json ? census.to_json() + '\n' : census.to_string());
  } else if (cmd == "maxspan") {
    const auto n = count_max_span(opt.d, opt.mode, census_options);
    if (fmt == Format::Json)
      out << "{\"d\": " << opt.d << ", \"count\": " << n << ", \"mode\": \""
          << to_string(opt.mode) << "\"}\n";
    else
      out << n << '\n';
  } else if (cmd == "realize") {
    const auto c = realize_span(opt.d, opt.span);
    if (!c)
      out << (fmt == Format::Json ? "null" : "none") << '\n';
    else
      out << format_diagram(*c, fmt) << '\n';
  }
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Kauffman bracket and span tools for oriented linear chord diagrams",
               "chordbracket"};
  app.require_subcommand(1);
  Options opt;

  add_diagram_command(app, opt, "compute", "Kauffman bracket of a diagram");
  add_diagram_command(app, opt, "kj", "Kauffman-Jones polynomial (-A)^(-3w) <C>");
  add_diagram_command(app, opt, "span", "Span of the bracket");
  add_diagram_command(app, opt, "bound", "Lower bound ceil(span/4) on self-intersections");
  add_diagram_command(app, opt, "invariants", "Invariants of the twisted curve neighborhood");
  add_diagram_command(app, opt, "stack", "Stack two diagrams", 2);
  add_diagram_command(app, opt, "reverse", "Reverse every chord");

  auto *monogon = add_diagram_command(app, opt, "monogon", "Insert a monogon");
  auto *pos = monogon->add_flag("--positive", opt.positive, "Insert a positive chord (default)");
  monogon->add_flag("--negative", opt.negative, "Insert a negative chord")->excludes(pos);
  monogon->add_option("--at", opt.at, "Insertion position 0..2d, or 'wrap' (default)");

  auto *family = app.add_subcommand("family", "Named diagrams and parametric families");
  auto *source = family->add_option_group("source", "Exactly one diagram source");
  source->add_option("--name", opt.name, "C1, C2, C3, C4, C4prime or remark44");
  source->add_option("--odd", opt.odd, "Odd family C(d)");
  source->add_option("--even", opt.even, "Even family C(d)");
  source->require_option(1);
  add_format(family, opt);

  auto *census = app.add_subcommand("census", "Span histogram over all d-chord diagrams");
  census->add_option("--d", opt.d, "Chord count")->required();
  add_threads(census, opt);
  add_format(census, opt);

  auto *maxspan = app.add_subcommand("maxspan", "Count d-chord diagrams with span 4d");
  maxspan->add_option("--d", opt.d, "Chord count")->required();
  maxspan->add_option("--mode", opt.mode, "full or pruned (default)")
      ->transform(CLI::CheckedTransformer(std::map<std::string, CensusMode>{
          {"full", CensusMode::Full}, {"pruned", CensusMode::Pruned}}));
  add_threads(maxspan, opt);
  add_format(maxspan, opt);

  auto *realize = app.add_subcommand("realize", "Construct a d-chord diagram with a given span");
  realize->add_option("--d", opt.d, "Chord count")->required();
  realize->add_option("span", opt.span, "Target span (even)")->required();
  add_format(realize, opt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    return dispatch(app, opt, out);
  } catch (const CLI::Success &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kUsageError;
  } catch (const OverflowError &e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  } catch (const DiagramError &e) {
    err << "error: invalid diagram: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::out_of_range &e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

} // namespace chordbracket::cli
