#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "blowade/blow_ade.hpp"
#include "blowade/deformation.hpp"
#include "blowade/newton.hpp"
#include "blowade/parse.hpp"
#include "report.hpp"

namespace blowade::cli {

namespace {

using report::Json;
namespace fs = std::filesystem;

struct Options {
  int truncation = kDefaultTruncation;
  bool truncation_given = false;
  int max_blow_order = -1;
  std::string samples;
  std::uint64_t seed = kDefaultSeed;
  int trials = kDefaultSectionTrials;
  std::vector<std::string> points;
  std::string format = "json";
  std::string corpus;
  std::string vars = "x2,x3";
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(item);
  }
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path.string());
  std::string text, line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    text += line + ' ';
  }
  return text;
}

// "@path" reads the polynomial from a file.
std::string resolve_input(const std::string& arg) {
  return (!arg.empty() && arg[0] == '@') ? read_file(arg.substr(1)) : arg;
}

std::vector<ProjectivePoint> parse_points(const Options& o) {
  std::vector<ProjectivePoint> out;
  for (const auto& text : o.points) {
    try {
      out.push_back(ProjectivePoint::parse(text));
    } catch (const DomainError& e) {
      throw UsageError("--point " + text + ": " + e.what());
    }
  }
  return out;
}

std::vector<Rational> parse_samples(const Options& o) {
  if (o.samples.empty()) return DeformationFamily::default_samples();
  std::vector<Rational> out;
  for (const auto& item : split(o.samples, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const DomainError& e) {
      throw UsageError("--samples entry '" + item + "': " + e.what());
    }
  }
  return out;
}

AnalyzeOptions analyze_options(const Options& o) {
  AnalyzeOptions a;
  a.truncation = o.truncation;
  a.max_blow_order = o.max_blow_order;
  a.points = parse_points(o);
  return a;
}

struct Context {
  const Options& opts;
  Json diagnostics = Json::array();

  void note(const std::string& message) {
    diagnostics.push_back({{"level", "note"}, {"message", message}});
  }
};

Json cmd_analyze(const std::vector<std::string>& in, Context& ctx) {
  const auto r = analyze(parse_polynomial(in[0]), analyze_options(ctx.opts));
  for (const auto& f : r.failures) {
    ctx.diagnostics.push_back({{"level", f.conclusive ? "failure" : "search-failure"},
                               {"kind", std::string(to_string(f.kind))},
                               {"point", f.point.to_string()},
                               {"message", f.message}});
  }
  if (r.is_blow_ade && r.k0 == 0) ctx.note("tangent cone is smooth: blow-ADE holds vacuously");
  return report::blow_ade(r);
}

Json cmd_zeta(const std::vector<std::string>& in, Context&) {
  const Polynomial f = parse_polynomial(in[0]);
  const auto z = varchenko_zeta(f);
  Json out;
  out["zeta"] = report::zeta(z);
  out["degree"] = zeta_degree(z);
  out["newton_number"] = newton_number(f).value;
  return out;
}

Json cmd_classify(const std::vector<std::string>& in, Context& ctx) {
  const auto names = split(ctx.opts.vars, ',');
  if (names.size() != 2 || names[0].empty() || names[1].empty() || names[0] == names[1]) {
    throw UsageError("--vars needs two distinct names, e.g. x2,x3");
  }
  const Polynomial parsed = parse_polynomial(in[0], names);
  const Polynomial g = permute_variables(parsed, {1, 2, 0});
  const int jet = ctx.opts.truncation_given ? ctx.opts.truncation : kDefaultJetOrder;
  const auto cls = classify_ade({g, jet});
  const VariableNames shown{"x1", names[0], names[1]};
  Json out = report::ade_type(cls.type);
  out["milnor"] = cls.type.is_ade() ? Json(cls.type.milnor()) : Json(nullptr);
  out["normal_part"] = cls.normal_part.to_string(shown);
  Json change = Json::array();
  for (std::size_t i = 1; i < 3; ++i) change.push_back(cls.change[i].poly().to_string(shown));
  out["change"] = change;
  out["jet_order"] = jet;
  return out;
}

Json cmd_blowup(const std::vector<std::string>& in, Context& ctx) {
  const Polynomial f = parse_polynomial(in[0]);
  const auto dec = homogeneous_decompose(f);
  auto points = parse_points(ctx.opts);
  if (points.empty()) points = singular_locus(dec.part(dec.order));
  Json out;
  out["d"] = dec.order;
  Json list = Json::array();
  for (const auto& p : points) {
    const auto germ = strict_transform_at(f, p, ctx.opts.truncation);
    Json entry;
    entry["coords"] = report::point(p);
    entry["chart"] = p.chart();
    entry["strict_transform"] = germ.poly().to_string(kLocalNames);
    entry["truncation"] = germ.truncation();
    try {
      auto data = extract_principal_part(germ, ctx.opts.max_blow_order);
      data.change.chart = Chart{p.chart()};
      const auto [u, v] = data.change.chart.affine_variables();
      data.change.shift = {p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]};
      entry["principal"] = report::principal(data);
      entry["error"] = nullptr;
    } catch (const DomainError& e) {
      entry["principal"] = nullptr;
      entry["error"] = report::error(e);
      ctx.diagnostics.push_back({{"level", "search-failure"},
                                 {"kind", std::string(to_string(e.kind()))},
                                 {"point", p.to_string()},
                                 {"message", e.what()}});
    }
    list.push_back(entry);
  }
  out["points"] = list;
  return out;
}

Json cmd_compare(const std::vector<std::string>& in, Context& ctx) {
  const auto opts = analyze_options(ctx.opts);
  const auto a = analyze(parse_polynomial(in[0]), opts);
  const auto b = analyze(parse_polynomial(in[1]), opts);
  const auto match = same_type(a, b);
  Json out;
  out["same_type"] = match.same;
  Json pairs = Json::array();
  for (const auto& [i, j] : match.pairs) {
    pairs.push_back({report::point(a.points[i].curve.point), report::point(b.points[j].curve.point)});
  }
  out["matching"] = pairs;
  out["first"] = report::blow_ade(a)["signature"];
  out["second"] = report::blow_ade(b)["signature"];
  return out;
}

Json cmd_deform(const std::vector<std::string>& in, Context& ctx) {
  DeformationFamily fam{parse_parametric(in[0]), parse_samples(ctx.opts)};
  FamilyOptions fo;
  fo.analyze = analyze_options(ctx.opts);
  fo.trials = ctx.opts.trials;
  fo.seed = ctx.opts.seed;
  const auto v = check_family(fam, fo);
  ctx.note("constancy is checked on the listed samples only");
  if (v.flags.mu_star_skipped) ctx.note("mu_star unavailable for some samples; flag compares the rest");
  ctx.note("mu2 is a genericity heuristic (minimum over random plane sections)");
  return report::verdict(v);
}

Json cmd_mu_star(const std::vector<std::string>& in, Context& ctx) {
  const auto t = mu_star(parse_polynomial(in[0]), ctx.opts.trials, ctx.opts.seed);
  ctx.note("mu2 is a genericity heuristic (minimum over random plane sections)");
  return report::mu_star(t);
}

using Handler = std::function<Json(const std::vector<std::string>&, Context&)>;

struct Command {
  const char* name;
  const char* help;
  std::size_t arity;
  Handler handler;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> list = {
      {"analyze", "certify the blow-ADE property and assemble the global zeta function", 1,
       cmd_analyze},
      {"zeta", "monodromy zeta function from the Newton boundary", 1, cmd_zeta},
      {"classify", "ADE type of a plane curve germ", 1, cmd_classify},
      {"blowup", "strict transforms and principal parts at the tangent-cone singular points", 1,
       cmd_blowup},
      {"compare", "decide whether two germs have blow-ADE singularities of the same type", 2,
       cmd_compare},
      {"deform-check", "check constancy of the invariants along a family in s", 1, cmd_deform},
      {"mu-star", "Teissier's mu* triple", 1, cmd_mu_star},
  };
  return list;
}

Json options_json(const std::string& command, const Options& o) {
  Json out;
  out["version"] = BLOWADE_VERSION;
  out["truncation"] = o.truncation;
  out["max_blow_order"] = o.max_blow_order;
  out["seed"] = o.seed;
  out["trials"] = o.trials;
  out["format"] = o.format;
  if (command == "deform-check") {
    Json samples = Json::array();
    for (const auto& s : parse_samples(o)) samples.push_back(report::rational(s));
    out["samples"] = samples;
  }
  if (!o.points.empty()) out["points"] = o.points;
  if (command == "classify") out["vars"] = o.vars;
  if (!o.corpus.empty()) out["corpus"] = o.corpus;
  return out;
}

void render_text(const Json& j, std::ostream& out, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() + ": " : "- ";
    if (it->is_structured() && !it->empty()) {
      const bool flat = std::all_of(it->begin(), it->end(),
                                    [](const Json& x) { return x.is_primitive(); });
      if (flat && it->is_array()) {
        out << indent << key << it->dump() << '\n';
      } else {
        out << indent << key << '\n';
        render_text(*it, out, indent + "  ");
      }
    } else if (it->is_string()) {
      out << indent << key << it->get<std::string>() << '\n';
    } else {
      out << indent << key << it->dump() << '\n';
    }
  }
}

void emit(const Json& doc, const Options& o, std::ostream& out) {
  if (o.format == "text") {
    render_text(doc, out, "");
  } else {
    out << doc.dump(2) << '\n';
  }
}

struct Outcome {
  Json result;
  std::optional<Json> error;
  int code = kExitOk;
};

Outcome execute(const Command& cmd, const std::vector<std::string>& inputs, Context& ctx) {
  Outcome o;
  try {
    o.result = cmd.handler(inputs, ctx);
  } catch (const DomainError& e) {
    o.result = nullptr;
    o.error = report::error(e);
    o.code = e.kind() == ErrorKind::Syntax ? kExitUsage : kExitDomain;
    Json diag = *o.error;
    diag["level"] = "error";
    ctx.diagnostics.push_back(diag);
  }
  return o;
}

int dispatch(const Command& cmd, const Options& opts, const std::vector<std::string>& raw,
             std::ostream& out) {
  Json doc;
  doc["command"] = cmd.name;
  Context ctx{opts};
  int code = kExitOk;
  if (!opts.corpus.empty()) {
    if (cmd.arity != 1) throw UsageError("--corpus needs a single-input command");
    if (!raw.empty()) throw UsageError("--corpus replaces the positional input");
    if (!fs::is_directory(opts.corpus)) throw UsageError("--corpus " + opts.corpus + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(opts.corpus)) {
      if (entry.is_regular_file() && entry.path().extension() == ".poly") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    doc["input"] = opts.corpus;
    doc["options"] = options_json(cmd.name, opts);
    Json results = Json::array();
    for (const auto& file : files) {
      const std::string text = read_file(file);
      Context file_ctx{opts};
      const auto o = execute(cmd, {text}, file_ctx);
      code = std::max(code, o.code);
      results.push_back({{"file", file.filename().string()},
                         {"input", text.substr(0, text.find_last_not_of(' ') + 1)},
                         {"result", o.result},
                         {"diagnostics", file_ctx.diagnostics}});
    }
    doc["result"] = results;
    doc["diagnostics"] = ctx.diagnostics;
    emit(doc, opts, out);
    return code;
  }
  if (raw.size() != cmd.arity) {
    throw UsageError(std::string(cmd.name) + " expects " + std::to_string(cmd.arity) +
                     " input(s), got " + std::to_string(raw.size()));
  }
  std::vector<std::string> inputs;
  for (const auto& r : raw) inputs.push_back(resolve_input(r));
  doc["input"] = inputs.size() == 1 ? Json(inputs[0]) : Json(inputs);
  doc["options"] = options_json(cmd.name, opts);
  const auto o = execute(cmd, inputs, ctx);
  doc["result"] = o.result;
  doc["diagnostics"] = ctx.diagnostics;
  emit(doc, opts, out);
  return o.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blow-ADE surface singularity toolkit", "blowade"};
  app.set_version_flag("--version", BLOWADE_VERSION);
  app.require_subcommand(1);
  Options opts;
  std::map<std::string, std::vector<std::string>> inputs;
  for (const auto& cmd : commands()) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("input", inputs[cmd.name], "polynomial text, or @file")
        ->expected(0, static_cast<int>(cmd.arity));
    sub->add_option("--truncation", opts.truncation, "truncation order N")
        ->check(CLI::Range(2, 512));
    sub->add_option("--max-blow-order", opts.max_blow_order, "largest blow-order searched")
        ->check(CLI::Range(1, 512));
    sub->add_option("--samples", opts.samples, "comma-separated parameter values");
    sub->add_option("--seed", opts.seed, "seed for random plane sections");
    sub->add_option("--trials", opts.trials, "number of random plane sections")
        ->check(CLI::Range(1, 10000));
    sub->add_option("--point", opts.points, "singular point a:b:c (repeatable)");
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--corpus", opts.corpus, "directory of .poly files");
    sub->add_option("--vars", opts.vars, "two variable names for classify");
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  for (const auto& cmd : commands()) {
    auto* sub = app.get_subcommand(cmd.name);
    if (!sub->parsed()) continue;
    opts.truncation_given = sub->count("--truncation") > 0;
    try {
      return dispatch(cmd, opts, inputs[cmd.name], out);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace blowade::cli
