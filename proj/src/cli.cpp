#include "qkc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qkc/error.hpp"
#include "qkc/grassq.hpp"
#include "qkc/io.hpp"
#include "qkc/oracle.hpp"

namespace qkc::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::string space;
  std::string mu;
  std::string other;
  std::string file;
  std::string check;
  int k = 0;
  int n = 0;
  bool quantum = false;
  bool nonequivariant = false;
  unsigned jobs = 1;
  std::size_t samples = 0;
  unsigned seed = 1;
};

std::string partition_text(const std::vector<int>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::vector<int> parse_partition(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (!t.empty() && (t.front() == '(' || t.front() == '[')) t = t.substr(1, t.size() - 2);
  std::vector<int> out;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, ','))
    if (!part.empty()) {
      try {
        out.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw ConfigError("cannot parse partition '" + text + "'");
      }
    }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

void emit_expr(std::ostream& out, const Options& o, const Poset& p, const SchubertExpr& e, bool gl = false) {
  const SchubertExpr shown = o.nonequivariant ? e.nonequivariant() : e;
  if (o.format == "json") {
    out << expr_to_json(p, shown).dump() << "\n";
  } else if (o.format == "diagram") {
    if (shown.is_zero()) out << "0\n";
    for (const auto& [s, c] : shown.terms()) {
      out << basis_name(shown.basis()) << "^" << format_shape(p, s) << "  coefficient " << format_qpoly(c, gl) << "\n";
      out << render_shape(p, s) << "\n";
    }
  } else {
    out << format_expr(p, shown, gl) << "\n";
  }
}

int cmd_poset(std::ostream& out, const Options& o) {
  const Poset p(parse_space(o.space));
  if (o.format == "diagram") {
    out << render_poset(p);
    return kExitOk;
  }
  json boxes = json::array();
  for (const Box& b : p.boxes())
    boxes.push_back({{"row", b.row}, {"col", b.col}, {"root", b.root}, {"short", b.is_short}, {"delta", b.delta + 1}});
  if (o.format == "json") {
    out << json{{"space", p.name()},
                {"dimension", p.size()},
                {"minuscule", p.space().is_minuscule()},
                {"gamma", p.space().gamma() + 1},
                {"z1", shape_rows(p, Shape(p.z1()))},
                {"nw_shift", {p.nw_shift().first, p.nw_shift().second}},
                {"boxes", boxes}}
               .dump()
        << "\n";
    return kExitOk;
  }
  out << p.name() << "  type " << p.roots().name() << ", gamma = alpha_" << p.space().gamma() + 1 << ", dim "
      << p.size() << (p.space().is_minuscule() ? ", minuscule" : "") << "\n";
  out << "z1 = " << format_shape(p, Shape(p.z1())) << ", shift (" << p.nw_shift().first << "," << p.nw_shift().second
      << ")\n";
  for (const Box& b : p.boxes()) {
    out << "(" << b.row << "," << b.col << ") root " << partition_text(b.root) << " delta alpha_" << b.delta + 1
        << (b.is_short ? " short" : "") << "\n";
  }
  return kExitOk;
}

int cmd_shapes(std::ostream& out, const Options& o) {
  const Poset p(parse_space(o.space));
  const auto shapes = enumerate_shapes(p);
  if (o.format == "json") {
    json arr = json::array();
    for (const Shape& s : shapes) arr.push_back(shape_rows(p, s));
    out << arr.dump() << "\n";
    return kExitOk;
  }
  for (const Shape& s : shapes) {
    out << format_shape(p, s) << "\n";
    if (o.format == "diagram") out << render_shape(p, s) << "\n";
  }
  return kExitOk;
}

int cmd_expr(std::ostream& out, const Options& o, const std::string& which) {
  const Poset p(parse_space(o.space));
  const Shape mu = parse_shape(p, o.mu);
  if (which == "ideal") emit_expr(out, o, p, ideal_sheaf(p, mu));
  else if (which == "qideal") emit_expr(out, o, p, quantized_ideal_sheaf(p, mu, true));
  else if (which == "alpha") emit_expr(out, o, p, alpha(p, mu));
  else if (!o.quantum) {
    const ChevalleyClassical c = chevalley_classical(p, mu);
    emit_expr(out, o, p, c.ideal);
    emit_expr(out, o, p, c.opposite);
  } else {
    const ChevalleyQuantum c = chevalley_quantum(p, mu);
    emit_expr(out, o, p, c.qideal);
    emit_expr(out, o, p, c.opposite);
  }
  return kExitOk;
}

int cmd_psi(std::ostream& out, const Options& o) {
  const Poset p(parse_space(o.space));
  const Shape s = psi_shape(p, parse_shape(p, o.mu));
  if (o.format == "json") out << json{{"shape", shape_rows(p, s)}}.dump() << "\n";
  else if (o.format == "diagram") out << render_shape(p, s);
  else out << format_shape(p, s) << "\n";
  return kExitOk;
}

int cmd_dist(std::ostream& out, const Options& o) {
  const Poset p(parse_space(o.space));
  const unsigned d = distance(p, parse_shape(p, o.mu), parse_shape(p, o.other));
  if (o.format == "json") out << json{{"distance", d}}.dump() << "\n";
  else out << d << "\n";
  return kExitOk;
}

int cmd_pair(std::ostream& out, const Options& o) {
  const Poset p(parse_space(o.space));
  json j;
  try {
    if (o.file == "-") {
      j = json::parse(std::cin);
    } else {
      std::ifstream in(o.file);
      if (!in) throw ConfigError("cannot open " + o.file);
      j = json::parse(in);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  const SchubertExpr e = expand_ideal(p, expr_from_json(p, j));
  const QRational r = qk_pairing(p, e, parse_shape(p, o.mu)).reduced();
  if (o.format == "json") out << json{{"numerator", qpoly_to_json(r.numerator)}, {"denominator_power", r.denom_pow}}.dump() << "\n";
  else out << format_qrational(r) << "\n";
  return kExitOk;
}

int cmd_detq(std::ostream& out, const Options& o) {
  const Poset p(Space::grassmannian(o.k, o.n));
  emit_expr(out, o, p, detq_product(o.k, o.n, parse_partition(o.mu)), true);
  return kExitOk;
}

int cmd_oracle_qh(std::ostream& out, const Options& o) {
  const auto prod = oracle::qh_product(o.k, o.n, parse_partition(o.mu), parse_partition(o.other));
  std::vector<std::pair<std::pair<int, oracle::Partition>, long long>> terms;
  for (const auto& [key, c] : prod) terms.push_back({{key.second, key.first}, c});
  std::sort(terms.begin(), terms.end());
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& [key, c] : terms) arr.push_back({{"shape", key.second}, {"q", key.first}, {"coeff", c}});
    out << arr.dump() << "\n";
    return kExitOk;
  }
  std::string s;
  for (const auto& [key, c] : terms) {
    const auto a = c < 0 ? -c : c;
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    if (a != 1) s += std::to_string(a) + "*";
    if (key.first == 1) s += "q*";
    else if (key.first > 1) s += "q^" + std::to_string(key.first) + "*";
    s += "X^" + partition_text(key.second);
  }
  out << (s.empty() ? "0" : s) << "\n";
  return kExitOk;
}

int cmd_oracle_check(std::ostream& out, const Options& o) {
  const Poset p(Space::grassmannian(o.k, o.n));
  const auto shapes = enumerate_shapes(p);
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (const Shape& mu : shapes)
    for (const Shape& lambda : shapes) {
      ++checked;
      const auto want = oracle::distance_oracle(o.k, o.n, shape_rows(p, mu), shape_rows(p, lambda));
      const unsigned got = distance(p, mu, lambda);
      if (want && *want == static_cast<int>(got)) continue;
      ++failures;
      const std::string w = want ? std::to_string(*want) : "none";
      if (o.format == "json")
        out << json{{"mu", shape_rows(p, mu)}, {"lambda", shape_rows(p, lambda)}, {"curves", got}, {"oracle", w}}.dump() << "\n";
      else
        out << "FAIL mu=" << format_shape(p, mu) << " lambda=" << format_shape(p, lambda) << ": curves " << got
            << ", oracle " << w << "\n";
    }
  if (o.format == "json") out << json{{"check", "distance"}, {"checked", checked}, {"failures", failures}}.dump() << "\n";
  else out << checked << " pairs checked, " << failures << " failures\n";
  return failures ? kExitFailure : kExitOk;
}

int cmd_verify(std::ostream& out, const Options& o) {
  const Poset p(parse_space(o.space));
  VerifyReport r;
  std::string unit = "pairs";
  if (o.check == "duality") r = verify_duality(p, o.jobs);
  else if (o.check == "classical") r = verify_classical(p, o.jobs);
  else if (o.check == "alpha") r = verify_alpha(p, o.jobs), unit = "shapes";
  else if (o.check == "lemma-weight") r = verify_lemma_weight(p, o.samples, o.seed), unit = "chains";
  else if (o.check == "branch") r = verify_branch_law(p), unit = "shapes";
  else throw ConfigError("unknown check '" + o.check + "'");
  for (const VerifyFailure& f : r.failures) {
    if (o.format == "json")
      out << json{{"lambda", shape_rows(p, f.lambda)}, {"mu", shape_rows(p, f.mu)}, {"detail", f.detail}}.dump() << "\n";
    else
      out << "FAIL lambda=" << format_shape(p, f.lambda) << " mu=" << format_shape(p, f.mu) << ": " << f.detail << "\n";
  }
  if (o.format == "json")
    out << json{{"check", r.check}, {"space", p.name()}, {"checked", r.checked}, {"failures", r.failures.size()}}.dump() << "\n";
  else
    out << r.checked << " " << unit << " checked, " << r.failures.size() << " failures\n";
  return r.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum K-theory of cominuscule flag varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "diagram"}));

  auto add_space = [&](CLI::App* s) { s->add_option("space", o.space, "Gr(k,n), LG(n), OG(n), Q(n), E6 or E7")->required(); };
  auto add_flag_neq = [&](CLI::App* s) { s->add_flag("--nonequivariant", o.nonequivariant, "Restrict coefficients to integers"); };

  auto* poset = app.add_subcommand("poset", "Boxes of P_X with grid positions and labels");
  add_space(poset);
  auto* shapes = app.add_subcommand("shapes", "All order ideals of P_X");
  add_space(shapes);

  std::map<std::string, CLI::App*> expr_cmds;
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"ideal", "Ideal sheaf I^mu in the O basis"},
           {"qideal", "Quantized ideal sheaf I_q^mu in the O basis"},
           {"alpha", "The element alpha^mu"},
           {"chev", "O^mu * (1 - O^{s_gamma})"}}) {
    auto* s = app.add_subcommand(name, help);
    add_space(s);
    s->add_option("mu", o.mu, "Shape")->required();
    add_flag_neq(s);
    expr_cmds[name] = s;
  }
  expr_cmds["chev"]->add_flag("--quantum", o.quantum, "Quantum product");

  auto* psi = app.add_subcommand("psi", "First curve neighborhood u(-1)");
  add_space(psi);
  psi->add_option("u", o.mu)->required();
  auto* dist = app.add_subcommand("dist", "Distance d(u,v)");
  add_space(dist);
  dist->add_option("u", o.mu)->required();
  dist->add_option("v", o.other)->required();
  auto* pair = app.add_subcommand("pair", "Quantum K-metric ((a, O_lambda)) of a JSON expression");
  add_space(pair);
  pair->add_option("exprfile", o.file, "JSON expression file, - for stdin")->required();
  pair->add_option("lambda", o.mu)->required();
  auto* detq = app.add_subcommand("detq", "det Q * O^mu in QK_T(Gr(k,n))");
  detq->add_option("k", o.k)->required();
  detq->add_option("n", o.n)->required();
  detq->add_option("mu", o.mu)->required();
  add_flag_neq(detq);

  auto* oracle_cmd = app.add_subcommand("oracle", "Quantum cohomology of Gr(k,n) by rim hooks");
  oracle_cmd->require_subcommand(1);
  auto* qh = oracle_cmd->add_subcommand("qh", "X^lambda * X^mu");
  qh->add_option("k", o.k)->required();
  qh->add_option("n", o.n)->required();
  qh->add_option("lambda", o.mu)->required();
  qh->add_option("mu", o.other)->required();
  auto* check_dist = oracle_cmd->add_subcommand("check-dist", "Compare d(u,v) with the oracle on all pairs");
  check_dist->add_option("k", o.k)->required();
  check_dist->add_option("n", o.n)->required();

  auto* verify = app.add_subcommand("verify", "Exhaustive identity checks");
  add_space(verify);
  verify->add_option("check", o.check)
      ->required()
      ->check(CLI::IsMember({"duality", "classical", "alpha", "lemma-weight", "branch"}));
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--samples", o.samples, "Random chains for lemma-weight (0 = all)");
  verify->add_option("--seed", o.seed, "Seed for --samples");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (poset->parsed()) return cmd_poset(out, o);
    if (shapes->parsed()) return cmd_shapes(out, o);
    for (const auto& [name, s] : expr_cmds)
      if (s->parsed()) return cmd_expr(out, o, name);
    if (psi->parsed()) return cmd_psi(out, o);
    if (dist->parsed()) return cmd_dist(out, o);
    if (pair->parsed()) return cmd_pair(out, o);
    if (detq->parsed()) return cmd_detq(out, o);
    if (qh->parsed()) return cmd_oracle_qh(out, o);
    if (check_dist->parsed()) return cmd_oracle_check(out, o);
    if (verify->parsed()) return cmd_verify(out, o);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace qkc::cli
