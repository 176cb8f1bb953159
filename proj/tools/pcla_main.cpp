#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcla/centralizer.hpp"
#include "pcla/expr.hpp"
#include "pcla/graph_io.hpp"
#include "pcla/oracle.hpp"
#include "pcla/printing.hpp"
#include "pcla/reduction.hpp"
#include "pcla/verify.hpp"

namespace {

// Exit-code contract: 0 success (or a true predicate), 1 false predicate,
// 2 usage, 3 parse error, 4 degree overflow, 5 verification failure.
enum ExitCode : int {
  kOk = 0,
  kFalse = 1,
  kUsage = 2,
  kParse = 3,
  kDegree = 4,
  kVerifyFailed = 5,
};

struct Session {
  std::string graph_path;
  std::string order_spec;
  int max_degree = 6;
  std::uint64_t seed = 0;
  std::string format = "text";
};

std::vector<std::string> split_order(const std::string& spec) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : spec) {
    if (c == '>' || c == ',') {
      if (!current.empty()) parts.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  if (!current.empty()) parts.push_back(current);
  return parts;
}

struct Context {
  pcla::CommutationGraph graph;
  pcla::GeneratorOrder order;
};

Context make_context(const Session& s) {
  pcla::CommutationGraph g = pcla::load_graph_file(s.graph_path);
  pcla::GeneratorOrder o =
      s.order_spec.empty()
          ? pcla::GeneratorOrder::declaration(g.size())
          : pcla::GeneratorOrder::from_names(g, split_order(s.order_spec));
  return Context{std::move(g), std::move(o)};
}

std::vector<std::string> order_names(const Context& ctx) {
  std::vector<std::string> out;
  for (int gidx : ctx.order.letters_descending())
    out.push_back(ctx.graph.name(gidx));
  return out;
}

void emit(const Session& s, const std::string& text,
          const nlohmann::ordered_json& structured) {
  if (s.format == "json")
    std::cout << structured.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_basis(const Session& s, bool counts_only) {
  const Context ctx = make_context(s);
  const auto basis = pcla::enumerate_pcls(ctx.order, ctx.graph, s.max_degree);

  nlohmann::ordered_json doc;
  std::string text;
  if (counts_only) {
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i) text += ' ';
      text += std::to_string(i + 1) + ":" + std::to_string(basis[i].size());
      counts[std::to_string(i + 1)] = basis[i].size();
    }
    text += '\n';
    doc["counts"] = std::move(counts);
  } else {
    nlohmann::ordered_json levels = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      text += std::to_string(i + 1) + ":";
      nlohmann::ordered_json level = nlohmann::ordered_json::array();
      for (const auto& m : basis[i]) {
        const std::string ms = pcla::to_string(m, ctx.graph);
        text += " " + ms;
        level.push_back(ms);
      }
      text += '\n';
      levels[std::to_string(i + 1)] = std::move(level);
    }
    doc["basis"] = std::move(levels);
  }
  emit(s, text, doc);
  return kOk;
}

int cmd_nf(const Session& s, const std::string& expr_text) {
  const Context ctx = make_context(s);
  const auto expr = pcla::parse_expr(expr_text, ctx.graph);
  const auto table =
      pcla::build_reduction(ctx.graph, ctx.order, std::max(2, s.max_degree));
  const pcla::LieElement nf = pcla::normal_form(table, *expr);
  const std::string text = pcla::to_string(nf, ctx.graph);
  emit(s, text + "\n", {{"normal_form", text}});
  return kOk;
}

int cmd_bracket(const Session& s, const std::string& a_text,
                const std::string& b_text) {
  const Context ctx = make_context(s);
  const auto ea = pcla::parse_expr(a_text, ctx.graph);
  const auto eb = pcla::parse_expr(b_text, ctx.graph);
  const auto table =
      pcla::build_reduction(ctx.graph, ctx.order, std::max(2, s.max_degree));
  pcla::FreeBracketCache cache;
  const pcla::LieElement a = pcla::normal_form(table, *ea, cache);
  const pcla::LieElement b = pcla::normal_form(table, *eb, cache);
  const pcla::LieElement product = pcla::bracket(table, a, b, cache);
  const std::string text = pcla::to_string(product, ctx.graph);
  emit(s, text + "\n", {{"bracket", text}});
  return kOk;
}

int cmd_commutes(const Session& s, const std::string& a_text,
                 const std::string& b_text) {
  const Context ctx = make_context(s);
  const auto ea = pcla::parse_expr(a_text, ctx.graph);
  const auto eb = pcla::parse_expr(b_text, ctx.graph);
  const auto table =
      pcla::build_reduction(ctx.graph, ctx.order, std::max(2, s.max_degree));
  pcla::FreeBracketCache cache;
  const pcla::LieElement a = pcla::normal_form(table, *ea, cache);
  const pcla::LieElement b = pcla::normal_form(table, *eb, cache);
  const bool result = pcla::commutes(table, a, b, cache);
  emit(s, std::string(result ? "true" : "false") + "\n",
       {{"commutes", result}});
  return result ? kOk : kFalse;
}

int cmd_centralizer(const Session& s, const std::string& expr_text) {
  const Context ctx = make_context(s);
  const auto expr = pcla::parse_expr(expr_text, ctx.graph);
  const int gdeg = pcla::expression_degree(*expr);
  if (gdeg > s.max_degree)
    throw pcla::DegreeError("expression degree exceeds the session bound",
                            gdeg);
  // The truncated kernel lives in degrees <= max_degree; products against g
  // reach gdeg higher, so the table is built that far.
  const auto table = pcla::build_reduction(ctx.graph, ctx.order,
                                           std::max(2, s.max_degree + gdeg));
  const pcla::LieElement g = pcla::normal_form(table, *expr);
  const pcla::CentralizerDescription d = pcla::centralizer_of(table, g);
  const pcla::KernelBasis basis =
      pcla::structural_kernel(table, d, s.max_degree);

  std::string text = "g = " + pcla::to_string(g, ctx.graph) + "\n";
  nlohmann::ordered_json doc;
  doc["g"] = pcla::to_string(g, ctx.graph);
  text += "components:\n";
  auto components = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const std::string cs = pcla::to_string(d.components[i], ctx.graph);
    text += "  " + std::to_string(i + 1) + ": " + cs + "\n";
    components.push_back(cs);
  }
  doc["components"] = std::move(components);
  const std::string ys = pcla::to_string(d.common_neighbors, ctx.graph);
  text += "common-neighbors: " + ys + "\n";
  auto y_names = nlohmann::ordered_json::array();
  for (int v : d.common_neighbors.to_vector())
    y_names.push_back(ctx.graph.name(v));
  doc["common_neighbors"] = std::move(y_names);
  text += "basis (degree <= " + std::to_string(s.max_degree) + "):\n";
  auto basis_json = nlohmann::ordered_json::array();
  for (const auto& e : basis.elements) {
    const std::string es = pcla::to_string(e, ctx.graph);
    text += "  " + es + "\n";
    basis_json.push_back(es);
  }
  doc["basis"] = std::move(basis_json);
  doc["basis_degree_bound"] = s.max_degree;
  emit(s, text, doc);
  return kOk;
}

int cmd_verify(const Session& s, const std::string& suite, int samples) {
  const Context ctx = make_context(s);
  const auto table =
      pcla::build_reduction(ctx.graph, ctx.order, std::max(2, s.max_degree));

  std::vector<pcla::SuiteResult> results;
  if (suite == "identities" || suite == "all")
    results.push_back(pcla::run_identities_suite(table, s.seed, samples));
  if (suite == "dimensions" || suite == "all")
    results.push_back(pcla::run_dimensions_suite(table));
  if (suite == "centralizers" || suite == "all")
    results.push_back(pcla::run_centralizers_suite(table, s.seed, samples));

  bool ok = true;
  nlohmann::ordered_json doc;
  doc["graph"] = nlohmann::ordered_json::parse(pcla::graph_to_json(ctx.graph));
  doc["order"] = order_names(ctx);
  doc["degree_bound"] = s.max_degree;
  doc["seed"] = s.seed;
  auto suites = nlohmann::ordered_json::array();
  std::string text;
  for (const auto& r : results) {
    ok = ok && r.ok();
    text += r.name + ": " + std::to_string(r.checks) + " checks, " +
            std::to_string(r.failures) + " failures" +
            (r.ok() ? " [pass]" : " [FAIL]") + "\n";
    nlohmann::ordered_json sj;
    sj["name"] = r.name;
    sj["checks"] = r.checks;
    sj["failures"] = r.failures;
    sj["messages"] = r.messages;
    sj["ok"] = r.ok();
    suites.push_back(std::move(sj));
  }
  doc["suites"] = std::move(suites);
  doc["ok"] = ok;
  // The verify report is machine-readable regardless of the format flag.
  if (s.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text << (ok ? "ok\n" : "FAILED\n");
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic computation in partially commutative Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Session session;
  app.add_option("-g,--graph", session.graph_path,
                 "Graph file (JSON: generators + edges)")
      ->required();
  app.add_option("-o,--order", session.order_spec,
                 "Generator order, highest first (e.g. \"x>y>z\"); defaults "
                 "to declaration order");
  app.add_option("-d,--max-degree", session.max_degree,
                 "Session degree bound")
      ->envname("PCLA_MAX_DEGREE")
      ->check(CLI::PositiveNumber);
  app.add_option("-s,--seed", session.seed, "Random seed for verification")
      ->envname("PCLA_SEED");
  app.add_option("-f,--format", session.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* basis_cmd = app.add_subcommand("basis", "List the basis per degree");
  bool counts_only = false;
  basis_cmd->add_flag("--counts", counts_only, "Print dimensions only");

  auto* nf_cmd = app.add_subcommand("nf", "Normal form of an expression");
  std::string expr1, expr2;
  nf_cmd->add_option("expr", expr1, "Expression")->required();

  auto* bracket_cmd =
      app.add_subcommand("bracket", "Normal form of a Lie product");
  bracket_cmd->add_option("left", expr1, "Left factor")->required();
  bracket_cmd->add_option("right", expr2, "Right factor")->required();

  auto* commutes_cmd =
      app.add_subcommand("commutes", "Do two elements commute?");
  commutes_cmd->add_option("left", expr1, "Left element")->required();
  commutes_cmd->add_option("right", expr2, "Right element")->required();

  auto* centralizer_cmd =
      app.add_subcommand("centralizer", "Describe the centralizer");
  centralizer_cmd->add_option("expr", expr1, "Element")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  int samples = 200;
  verify_cmd->add_option("--suite", suite, "Which suite to run")
      ->check(CLI::IsMember({"identities", "dimensions", "centralizers", "all"}));
  verify_cmd->add_option("--samples", samples, "Randomized samples per suite")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (basis_cmd->parsed()) return cmd_basis(session, counts_only);
    if (nf_cmd->parsed()) return cmd_nf(session, expr1);
    if (bracket_cmd->parsed()) return cmd_bracket(session, expr1, expr2);
    if (commutes_cmd->parsed()) return cmd_commutes(session, expr1, expr2);
    if (centralizer_cmd->parsed()) return cmd_centralizer(session, expr1);
    if (verify_cmd->parsed()) return cmd_verify(session, suite, samples);
  } catch (const pcla::DegreeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDegree;
  } catch (const pcla::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const pcla::UnknownGeneratorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const pcla::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kUsage;
}
