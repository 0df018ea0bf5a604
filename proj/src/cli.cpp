#include "qsymx/cli.hpp"

#include <algorithm>
#include <optional>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsymx/characters.hpp"
#include "qsymx/identities.hpp"
#include "qsymx/permutation.hpp"

namespace qsymx::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json comp_json(const Composition &c) { return json(c.parts()); }

std::string basis_name(Basis b) { return std::string(1, basis_letter(b)); }

json element_json(const QSymElement &x) {
  json terms = json::array();
  for (const auto &[alpha, c] : x.terms())
    terms.push_back({{"comp", comp_json(alpha)}, {"coeff", c.to_string()}});
  return {{"basis", basis_name(x.basis())}, {"terms", terms}};
}

json tensor_json(const TensorElement &t) {
  json terms = json::array();
  for (const auto &term : t.terms())
    terms.push_back({{"left", comp_json(term.left)}, {"right", comp_json(term.right)}, {"coeff", term.coeff.to_string()}});
  return {{"basis", basis_name(t.basis())}, {"terms", terms}};
}

json report_json(const identities::CheckReport &r) {
  json j = {{"id", r.id}, {"domain", r.domain}, {"cases", r.cases_run}, {"status", r.passed ? "pass" : "fail"}};
  if (r.counterexample) {
    json params = json::object();
    for (const auto &[k, v] : r.counterexample->params)
      params[k] = v;
    j["counterexample"] = {
        {"params", params}, {"lhs", r.counterexample->lhs.to_string()}, {"rhs", r.counterexample->rhs.to_string()}};
  }
  return j;
}

// Reads the degree bound from QSYMX_MAX_DEGREE.
int max_degree(std::ostream &warn) {
  const char *env = std::getenv("QSYMX_MAX_DEGREE");
  if (env == nullptr || *env == '\0')
    return kDefaultMaxDegree;
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(env, &used);
    if (used != std::string(env).size())
      throw std::invalid_argument("trailing characters");
  } catch (const std::exception &) {
    throw UsageError("QSYMX_MAX_DEGREE must be an integer, got '" + std::string(env) + "'");
  }
  if (value < 0)
    throw UsageError("QSYMX_MAX_DEGREE must be non-negative");
  if (value > kHardMaxDegree) {
    warn << "warning: QSYMX_MAX_DEGREE=" << value << " clamped to " << kHardMaxDegree
         << "; tables hold 2^(n-1) values per degree\n";
    value = kHardMaxDegree;
  }
  return value;
}

ClosedFormCharacter read_character(const std::string &id) {
  try {
    return ClosedFormCharacter::parse(id);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

Composition read_composition(const std::string &text) {
  try {
    return Composition::parse(text);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("bad composition \"") + text + "\": " + e.what());
  }
}

Basis read_basis(const std::string &text) {
  try {
    return parse_basis(text);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
}

// A composition ("2,1") names a basis element of `basis`; anything with a '['
// is an element expression such as "M[2,1] - 1/2*M[3]".
QSymElement read_element(const std::string &text, Basis basis) {
  if (text.find('[') == std::string::npos && text != "0")
    return QSymElement::basis_element(basis, read_composition(text));
  try {
    QSymElement x = QSymElement::parse(text, basis);
    if (x.basis() != basis)
      throw UsageError("element \"" + text + "\" is not in the " + basis_name(basis) + " basis");
    return x;
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("bad element \"") + text + "\": " + e.what());
  }
}

std::string pad(const std::string &s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

struct Options {
  bool json = false;
  std::string character;
  std::string basis = "M";
  std::string to;
  std::string comp;
  std::string elem;
  std::string perm;
  std::string left;
  std::string right;
  std::string id;
  std::string depth = "standard";
  bool all = false;
  int degree = -1;
};

std::string source_text(const Options &o) {
  if (!o.comp.empty() && !o.elem.empty())
    throw UsageError("give either --comp or --elem, not both");
  if (!o.elem.empty())
    return o.elem;
  return o.comp;
}

int cmd_eval(const Options &o, std::ostream &out) {
  const auto c = read_character(o.character);
  if (!o.perm.empty()) {
    Permutation sigma;
    try {
      sigma = Permutation::parse(o.perm);
    } catch (const std::invalid_argument &e) {
      throw UsageError(std::string("bad permutation \"") + o.perm + "\": " + e.what());
    }
    Rational v;
    try {
      v = eval_perm(c, sigma);
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
    if (o.json)
      out << json{{"char", c.id()}, {"perm", sigma.word()}, {"value", v.to_string()}}.dump() << "\n";
    else
      out << v << "\n";
    return kExitOk;
  }
  const std::string text = source_text(o);
  if (text.empty())
    throw UsageError("eval needs --comp, --elem or --perm");
  const Basis b = read_basis(o.basis);
  const QSymElement x = read_element(text, b);
  const Rational v = eval_element(c, x);
  if (o.json)
    out << json{{"char", c.id()}, {"element", element_json(x)}, {"value", v.to_string()}}.dump() << "\n";
  else
    out << v << "\n";
  return kExitOk;
}

void print_element(const QSymElement &x, bool as_json, std::ostream &out) {
  if (as_json)
    out << element_json(x).dump() << "\n";
  else
    out << x << "\n";
}

int cmd_mul(const Options &o, std::ostream &out) {
  if (o.left.empty() || o.right.empty())
    throw UsageError("mul needs --left and --right");
  const Basis b = read_basis(o.basis);
  print_element(multiply(read_element(o.left, b), read_element(o.right, b)), o.json, out);
  return kExitOk;
}

QSymElement required_source(const Options &o, const char *command) {
  const std::string text = source_text(o);
  if (text.empty())
    throw UsageError(std::string(command) + " needs --comp or --elem");
  return read_element(text, read_basis(o.basis));
}

int cmd_coproduct(const Options &o, std::ostream &out) {
  const TensorElement t = coproduct(required_source(o, "coproduct"));
  if (o.json)
    out << tensor_json(t).dump() << "\n";
  else
    out << t.to_string() << "\n";
  return kExitOk;
}

int cmd_antipode(const Options &o, std::ostream &out) {
  print_element(antipode(required_source(o, "antipode")), o.json, out);
  return kExitOk;
}

int cmd_convert(const Options &o, std::ostream &out) {
  if (o.to.empty())
    throw UsageError("convert needs --to M|F");
  const Basis target = read_basis(o.to);
  print_element(to_basis(required_source(o, "convert"), target), o.json, out);
  return kExitOk;
}

int resolve_degree(const Options &o, int bound) {
  const int n = o.degree < 0 ? bound : o.degree;
  if (n > bound)
    throw UsageError("degree " + std::to_string(n) + " exceeds the bound " + std::to_string(bound) +
                     " (raise QSYMX_MAX_DEGREE, at most " + std::to_string(kHardMaxDegree) + ")");
  return n;
}

// Closed forms expected for the even and odd factors of a named character.
std::pair<std::optional<ClosedFormCharacter>, std::optional<ClosedFormCharacter>>
expected_factors(const ClosedFormCharacter &c) {
  const ClosedFormCharacter eps{CharKind::Counit};
  switch (c.kind) {
  case CharKind::Zeta: return {ClosedFormCharacter{CharKind::ZetaPlus}, ClosedFormCharacter{CharKind::ZetaMinus}};
  case CharKind::ZetaInv:
    return {ClosedFormCharacter{CharKind::ZetaInvPlus}, ClosedFormCharacter{CharKind::ZetaInvMinus}};
  case CharKind::ZetaPlus:
  case CharKind::ZetaInvPlus: return {c, eps};
  case CharKind::ZetaMinus:
  case CharKind::ZetaInvMinus: return {eps, c};
  case CharKind::Counit: return {eps, eps};
  case CharKind::ZetaPower: break;
  }
  return {std::nullopt, std::nullopt};
}

int cmd_decompose(const Options &o, int bound, std::ostream &out) {
  const auto c = read_character(o.character.empty() ? "zeta" : o.character);
  const int N = resolve_degree(o, bound);
  const auto [plus, minus] = decompose(restrict(c, N));
  const auto [want_plus, want_minus] = expected_factors(c);

  long mismatches = 0;
  json entries = json::array();
  std::vector<std::vector<std::string>> rows;
  for (int n = 0; n <= N; ++n)
    for (const auto &alpha : all_compositions(n)) {
      const Rational &p = plus(alpha), &m = minus(alpha);
      std::string flag;
      json entry = {{"comp", comp_json(alpha)}, {"plus", p.to_string()}, {"minus", m.to_string()}};
      if (want_plus) {
        const Rational e = eval_M(*want_plus, alpha);
        entry["plus_matches"] = e == p;
        if (e != p) {
          ++mismatches;
          flag += "  <-- even part differs from " + want_plus->id() + " = " + e.to_string();
        }
      }
      if (want_minus) {
        const Rational e = eval_M(*want_minus, alpha);
        entry["minus_matches"] = e == m;
        if (e != m) {
          ++mismatches;
          flag += "  <-- odd part differs from " + want_minus->id() + " = " + e.to_string();
        }
      }
      entries.push_back(entry);
      rows.push_back({alpha.to_string(), p.to_string(), m.to_string(), flag});
    }

  if (o.json) {
    json j = {{"char", c.id()}, {"degree", N}, {"entries", entries}, {"mismatches", mismatches}};
    j["plus_closed_form"] = want_plus ? json(want_plus->id()) : json(nullptr);
    j["minus_closed_form"] = want_minus ? json(want_minus->id()) : json(nullptr);
    out << j.dump() << "\n";
  } else {
    std::size_t w0 = 11, w1 = 4, w2 = 5;
    for (const auto &r : rows) {
      w0 = std::max(w0, r[0].size());
      w1 = std::max(w1, r[1].size());
      w2 = std::max(w2, r[2].size());
    }
    out << "character " << c.id() << ", degree <= " << N;
    if (want_plus)
      out << "; compared with " << want_plus->id() << " and " << want_minus->id();
    out << "\n";
    out << pad("composition", w0) << "  " << pad("even", w1) << "  " << pad("odd", w2) << "\n";
    for (const auto &r : rows)
      out << pad(r[0], w0) << "  " << pad(r[1], w1) << "  " << pad(r[2], w2) << r[3] << "\n";
    if (want_plus)
      out << "mismatches: " << mismatches << "\n";
    else
      out << "no closed form to compare against\n";
  }
  return mismatches == 0 ? kExitOk : kExitFailure;
}

int cmd_table(const Options &o, int bound, std::ostream &out) {
  const auto c = read_character(o.character);
  const Basis b = read_basis(o.basis);
  const int n = resolve_degree(o, bound);
  const auto comps = all_compositions(n);
  if (o.json) {
    json values = json::array();
    for (const auto &alpha : comps)
      values.push_back({{"comp", comp_json(alpha)}, {"value", eval(c, b, alpha).to_string()}});
    out << json{{"char", c.id()}, {"basis", basis_name(b)}, {"degree", n}, {"values", values}}.dump() << "\n";
    return kExitOk;
  }
  std::size_t width = 0;
  for (const auto &alpha : comps)
    width = std::max(width, alpha.to_string().size() + 3);
  for (const auto &alpha : comps)
    out << pad(basis_name(b) + "[" + (alpha.empty() ? "" : alpha.to_string()) + "]", width) << "  "
        << eval(c, b, alpha) << "\n";
  return kExitOk;
}

void print_report(const identities::CheckReport &r, std::ostream &out) {
  out << (r.passed ? "PASS  " : "FAIL  ") << pad(r.id, 20) << "  cases=" << r.cases_run << "  domain: " << r.domain
      << "\n";
  if (r.counterexample)
    out << "      counterexample: " << r.counterexample->describe() << "\n";
}

int cmd_verify(const Options &o, std::ostream &out) {
  identities::Depth depth;
  try {
    depth = identities::parse_depth(o.depth);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  if (o.all == !o.id.empty())
    throw UsageError("verify needs exactly one of --id or --all");
  if (!o.all && !identities::is_registered(o.id))
    throw UsageError("unknown identity id '" + o.id + "'");

  std::vector<identities::CheckReport> reports;
  if (o.all)
    reports = identities::verify_all(depth);
  else
    reports.push_back(identities::verify(o.id, depth));

  const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto &r) { return !r.passed; });
  if (o.json) {
    if (o.all) {
      json arr = json::array();
      for (const auto &r : reports)
        arr.push_back(report_json(r));
      out << json{{"depth", o.depth}, {"status", failed == 0 ? "pass" : "fail"}, {"reports", arr}}.dump() << "\n";
    } else {
      out << report_json(reports.front()).dump() << "\n";
    }
  } else {
    for (const auto &r : reports)
      print_report(r, out);
    if (o.all)
      out << (reports.size() - static_cast<std::size_t>(failed)) << "/" << reports.size() << " identities pass ("
          << o.depth << ")\n";
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

} // namespace

std::string element_to_json(const QSymElement &x) { return element_json(x).dump(); }

QSymElement element_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("basis") || !j.contains("terms") || !j["basis"].is_string() ||
      !j["terms"].is_array())
    throw std::invalid_argument("element JSON needs a \"basis\" string and a \"terms\" array");
  QSymElement x(parse_basis(j["basis"].get<std::string>()));
  for (const auto &t : j["terms"]) {
    if (!t.is_object() || !t.contains("comp") || !t.contains("coeff") || !t["comp"].is_array())
      throw std::invalid_argument("each term needs \"comp\" and \"coeff\"");
    std::vector<int> parts;
    for (const auto &p : t["comp"]) {
      if (!p.is_number_integer())
        throw std::invalid_argument("composition parts must be integers");
      parts.push_back(p.get<int>());
    }
    const auto &coeff = t["coeff"];
    Rational c;
    if (coeff.is_string())
      c = Rational::parse(coeff.get<std::string>());
    else if (coeff.is_number_integer())
      c = Rational(coeff.get<long long>());
    else
      throw std::invalid_argument("coeff must be a \"p/q\" string");
    x.add(Composition(std::move(parts)), c);
  }
  return x;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact quasi-symmetric function algebra and character identities", "qsymx"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App *sub) { sub->add_flag("--json", o.json, "Machine-readable output"); };
  app.add_flag("--json", o.json, "Machine-readable output");

  auto *eval_cmd = app.add_subcommand("eval", "Evaluate a character");
  eval_cmd->add_option("--char", o.character, "Character id")->required();
  eval_cmd->add_option("--basis", o.basis, "M or F (default M)");
  eval_cmd->add_option("--comp", o.comp, "Composition such as \"2,1\"");
  eval_cmd->add_option("--elem", o.elem, "Element such as \"M[2,1] - M[3]\"");
  eval_cmd->add_option("--perm", o.perm, "Permutation such as \"312546\"");
  common(eval_cmd);

  auto *mul_cmd = app.add_subcommand("mul", "Multiply two elements");
  mul_cmd->add_option("--basis", o.basis, "M or F (default M)");
  mul_cmd->add_option("--left", o.left, "Composition or element")->required();
  mul_cmd->add_option("--right", o.right, "Composition or element")->required();
  common(mul_cmd);

  for (auto [name, help] : {std::pair{"coproduct", "Coproduct of an element"},
                            std::pair{"antipode", "Antipode of an element"},
                            std::pair{"convert", "Change basis"}}) {
    auto *sub = app.add_subcommand(name, help);
    sub->add_option("--basis", o.basis, "Basis of --comp (default M)");
    sub->add_option("--comp", o.comp, "Composition such as \"2,1\"");
    sub->add_option("--elem", o.elem, "Element such as \"M[2,1] - M[3]\"");
    if (std::string(name) == "convert")
      sub->add_option("--to", o.to, "Target basis M or F")->required();
    common(sub);
  }

  auto *dec_cmd = app.add_subcommand("decompose", "Even/odd decomposition of a character");
  dec_cmd->add_option("--degree", o.degree, "Truncation degree")->check(CLI::NonNegativeNumber);
  dec_cmd->add_option("--char", o.character, "Character id (default zeta)");
  common(dec_cmd);

  auto *table_cmd = app.add_subcommand("table", "Character values on all compositions of n");
  table_cmd->add_option("--char", o.character, "Character id")->required();
  table_cmd->add_option("--basis", o.basis, "M or F (default M)");
  table_cmd->add_option("--degree", o.degree, "Degree n")->required()->check(CLI::NonNegativeNumber);
  common(table_cmd);

  auto *verify_cmd = app.add_subcommand("verify", "Check registered identities");
  verify_cmd->add_option("--id", o.id, "Registry id");
  verify_cmd->add_flag("--all", o.all, "Run every registered identity");
  verify_cmd->add_option("--depth", o.depth, "small, standard or deep");
  common(verify_cmd);

  std::vector<const char *> argv{"qsymx"};
  for (const auto &a : args)
    argv.push_back(a.c_str());

  std::ostringstream buffered_out, buffered_err;
  int code = kExitOk;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    const int bound = max_degree(buffered_err);
    if (eval_cmd->parsed())
      code = cmd_eval(o, buffered_out);
    else if (mul_cmd->parsed())
      code = cmd_mul(o, buffered_out);
    else if (app.got_subcommand("coproduct"))
      code = cmd_coproduct(o, buffered_out);
    else if (app.got_subcommand("antipode"))
      code = cmd_antipode(o, buffered_out);
    else if (app.got_subcommand("convert"))
      code = cmd_convert(o, buffered_out);
    else if (dec_cmd->parsed())
      code = cmd_decompose(o, bound, buffered_out);
    else if (table_cmd->parsed())
      code = cmd_table(o, bound, buffered_out);
    else
      code = cmd_verify(o, buffered_out);
  } catch (const CLI::Success &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  out << buffered_out.str();
  err << buffered_err.str();
  return code;
}

} // namespace qsymx::cli
