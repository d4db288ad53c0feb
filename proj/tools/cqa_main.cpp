// cqa: classify and solve certain query answering instances.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cqa/attack_graph.hpp"
#include "cqa/classification.hpp"
#include "cqa/database.hpp"
#include "cqa/dot.hpp"
#include "cqa/errors.hpp"
#include "cqa/join_tree.hpp"
#include "cqa/probabilistic.hpp"
#include "cqa/purification.hpp"
#include "cqa/query_parser.hpp"
#include "cqa/reduction.hpp"
#include "cqa/report.hpp"
#include "cqa/safety.hpp"
#include "cqa/solvers.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kNotCertain = 1,
  kUsage = 64,
  kDataError = 65,
  kNoInput = 66,
  kSoftware = 70,
  kPrecondition = 69,
  kResourceLimit = 75,
};

using Clock = std::chrono::steady_clock;

struct OutputFlags {
  bool json = false;
  bool timings = false;
};

// `@path` or an existing file is read; anything else is query text.
std::string query_text(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return cqa::detail::read_file(arg.substr(1));
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return cqa::detail::read_file(arg);
  return arg;
}

std::vector<std::string> rendered(const std::vector<cqa::Fact>& facts) {
  std::vector<std::string> out;
  for (const cqa::Fact& f : facts) out.push_back(cqa::render(f));
  return out;
}

cqa::RunReport make_report(std::string command, std::map<std::string, std::string> inputs, std::string verdict) {
  cqa::RunReport report;
  report.command = std::move(command);
  report.inputs = std::move(inputs);
  report.verdict = std::move(verdict);
  return report;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void emit(const cqa::RunReport& report, const OutputFlags& flags, const std::string& human) {
  if (flags.json) {
    std::cout << cqa::to_json(report, flags.timings);
  } else {
    std::cout << human;
    if (flags.timings) {
      for (const auto& [phase, s] : report.timings) std::cout << "time " << phase << ": " << s << " s\n";
    }
  }
}

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_flag("--json", flags.json, "Print a JSON report");
  cmd->add_flag("--timings", flags.timings, "Include timings");
}

std::string attack_graph_text(const cqa::AttackGraph& g) {
  std::string out;
  const cqa::Query& q = g.query();
  for (std::size_t i = 0; i < q.size(); ++i) out += "atom " + std::to_string(i) + ": " + cqa::render(q[i]) + "\n";
  for (const cqa::AttackEdge& e : g.edges()) {
    out += cqa::render(q[e.from]) + " -> " + cqa::render(q[e.to]) +
           (e.strength == cqa::AttackStrength::Strong ? " (strong)\n" : " (weak)\n");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certain query answering under primary keys"};
  app.require_subcommand(1);
  OutputFlags flags;
  std::string query_arg;
  std::string db_path;
  std::function<int()> action;
  const cqa::SolverOptions options = cqa::SolverOptions::from_environment();

  auto* classify = app.add_subcommand("classify", "Complexity of CERTAINTY(q)");
  classify->add_option("query", query_arg, "Query text, or @file")->required();
  add_output_flags(classify, flags);
  classify->callback([&] {
    action = [&] {
      auto start = Clock::now();
      cqa::Query q = cqa::parse_query(query_text(query_arg));
      cqa::ComplexityVerdict verdict = cqa::classify_complexity(q);
      cqa::RunReport report = make_report("classify", {{"query", cqa::render(q)}}, std::string(cqa::to_string(verdict.complexity)));
      std::string description = cqa::describe(verdict, q);
      report.details["description"] = description;
      if (verdict.cycle_query) report.details["k"] = std::to_string(verdict.cycle_query->k);
      if (verdict.strong_cycle) {
        report.details["strong_from"] = cqa::render(q[verdict.strong_cycle->strong_from]);
        report.details["strong_to"] = cqa::render(q[verdict.strong_cycle->strong_to]);
      }
      report.timings["total"] = seconds_since(start);
      emit(report, flags, description + "\n");
      return int{kOk};
    };
  });

  std::string method_name = "auto";
  auto* solve = app.add_subcommand("solve", "Is the query true in every repair?");
  solve->add_option("query", query_arg, "Query text, or @file")->required();
  solve->add_option("database", db_path, "Database file")->required();
  solve->add_option("--method", method_name, "auto, bruteforce, terminal-weak or cycle")
      ->check(CLI::IsMember({"auto", "bruteforce", "terminal-weak", "cycle"}));
  add_output_flags(solve, flags);
  solve->callback([&] {
    action = [&] {
      cqa::Query q = cqa::parse_query(query_text(query_arg));
      cqa::UncertainDatabase db = cqa::load_database(db_path);
      auto start = Clock::now();
      cqa::CertainAnswer answer = cqa::solve(db, q, *cqa::solve_method_from_string(method_name), options);
      cqa::RunReport report = make_report("solve", {{"query", cqa::render(q)}, {"database", db_path}},
                            answer.certain ? "CERTAIN" : "NOT CERTAIN");
      report.method = std::string(cqa::to_string(answer.method));
      report.timings["solve"] = seconds_since(start);
      std::string human = report.verdict + "\n";
      if (answer.witness) {
        report.witness = rendered(*answer.witness);
        human += "witness repair:\n";
        for (const std::string& f : *report.witness) human += "  " + f + "\n";
      }
      emit(report, flags, human);
      return int{answer.certain ? kOk : kNotCertain};
    };
  });

  bool dot = false;
  auto* attack = app.add_subcommand("attack-graph", "Attack graph of an acyclic query");
  attack->add_option("query", query_arg, "Query text, or @file")->required();
  attack->add_flag("--dot", dot, "Graphviz output");
  add_output_flags(attack, flags);
  attack->callback([&] {
    action = [&] {
      cqa::Query q = cqa::parse_query(query_text(query_arg));
      cqa::AttackGraph g = cqa::attack_graph(q);
      if (dot) {
        std::cout << cqa::to_dot(g);
        return int{kOk};
      }
      cqa::RunReport report = make_report("attack-graph", {{"query", cqa::render(q)}}, g.has_cycle() ? "cyclic" : "acyclic");
      std::size_t i = 0;
      for (const cqa::AttackEdge& e : g.edges()) {
        report.details["edge" + std::to_string(i++)] =
            cqa::render(q[e.from]) + " -> " + cqa::render(q[e.to]) +
            (e.strength == cqa::AttackStrength::Strong ? " strong" : " weak");
      }
      emit(report, flags, attack_graph_text(g));
      return int{kOk};
    };
  });

  auto* tree = app.add_subcommand("join-tree", "Join tree of an acyclic query");
  tree->add_option("query", query_arg, "Query text, or @file")->required();
  tree->add_flag("--dot", dot, "Graphviz output");
  add_output_flags(tree, flags);
  tree->callback([&] {
    action = [&] {
      cqa::Query q = cqa::parse_query(query_text(query_arg));
      auto built = cqa::build_join_tree(q);
      if (!std::holds_alternative<cqa::JoinTree>(built)) throw cqa::CyclicQueryError();
      const cqa::JoinTree& t = std::get<cqa::JoinTree>(built);
      if (dot) {
        std::cout << cqa::to_dot(t);
        return int{kOk};
      }
      std::string human;
      cqa::RunReport report = make_report("join-tree", {{"query", cqa::render(q)}}, "acyclic");
      std::size_t i = 0;
      for (const cqa::JoinTreeEdge& e : t.edges()) {
        std::string label;
        for (const cqa::Symbol& v : e.label) label += (label.empty() ? "" : ",") + v;
        std::string line = cqa::render(q[e.a]) + " -- " + cqa::render(q[e.b]) + " {" + label + "}";
        report.details["edge" + std::to_string(i++)] = line;
        human += line + "\n";
      }
      emit(report, flags, human);
      return int{kOk};
    };
  });

  auto* purify = app.add_subcommand("purify", "Remove blocks that cannot contribute to an embedding");
  purify->add_option("query", query_arg, "Query text, or @file")->required();
  purify->add_option("database", db_path, "Database file")->required();
  add_output_flags(purify, flags);
  purify->callback([&] {
    action = [&] {
      cqa::Query q = cqa::parse_query(query_text(query_arg));
      cqa::UncertainDatabase db = cqa::load_database(db_path);
      cqa::UncertainDatabase result = cqa::purify(db, q);
      cqa::RunReport report = make_report("purify", {{"query", cqa::render(q)}, {"database", db_path}},
                            std::to_string(result.size()) + "/" + std::to_string(db.size()));
      report.details["database"] = cqa::format_database(result);
      emit(report, flags, cqa::format_database(result));
      return int{kOk};
    };
  });

  auto* count = app.add_subcommand("count", "Number of repairs satisfying the query");
  count->add_option("query", query_arg, "Query text, or @file")->required();
  count->add_option("database", db_path, "Database file")->required();
  add_output_flags(count, flags);
  count->callback([&] {
    action = [&] {
      cqa::Query q = cqa::parse_query(query_text(query_arg));
      cqa::UncertainDatabase db = cqa::load_database(db_path);
      auto start = Clock::now();
      cqa::BigInt satisfying = cqa::count_satisfying_repairs(db, q, options);
      cqa::BigInt total = cqa::repair_count(db);
      cqa::RunReport report = make_report("count", {{"query", cqa::render(q)}, {"database", db_path}},
                            satisfying.str() + "/" + total.str());
      report.method = "bruteforce";
      report.timings["count"] = seconds_since(start);
      emit(report, flags, report.verdict + "\n");
      return int{kOk};
    };
  });

  auto* safe = app.add_subcommand("issafe", "Safety of the query on probabilistic databases");
  safe->add_option("query", query_arg, "Query text, or @file")->required();
  add_output_flags(safe, flags);
  safe->callback([&] {
    action = [&] {
      cqa::Query q = cqa::parse_query(query_text(query_arg));
      cqa::SafetyTrace trace = cqa::is_safe(q);
      cqa::RunReport report = make_report("issafe", {{"query", cqa::render(q)}}, trace.safe ? "SAFE" : "UNSAFE");
      report.details["trace"] = cqa::render(trace);
      emit(report, flags, report.verdict + "\n" + cqa::render(trace));
      return int{kOk};
    };
  });

  bool exact = false;
  bool is_one = false;
  auto* prob = app.add_subcommand("prob", "Probability of the query on a BID database");
  prob->add_option("query", query_arg, "Query text, or @file")->required();
  prob->add_option("database", db_path, "BID database file")->required();
  auto* exact_flag = prob->add_flag("--exact", exact, "Exact probability by world enumeration");
  prob->add_flag("--is-one", is_one, "Decide Pr(q) = 1 through certain answers")->excludes(exact_flag);
  add_output_flags(prob, flags);
  prob->callback([&] {
    action = [&] {
      cqa::Query q = cqa::parse_query(query_text(query_arg));
      cqa::BIDDatabase pdb = cqa::load_bid(db_path);
      auto start = Clock::now();
      cqa::RunReport report = make_report("prob", {{"query", cqa::render(q)}, {"database", db_path}}, "");
      if (is_one) {
        report.verdict = cqa::prob_is_one(pdb, q, options) ? "true" : "false";
        report.method = "certainty";
      } else {
        report.verdict = cqa::to_string(cqa::prob_bruteforce(pdb, q, options));
        report.method = "bruteforce";
      }
      report.timings["prob"] = seconds_since(start);
      emit(report, flags, report.verdict + "\n");
      return int{kOk};
    };
  });

  std::string output_path;
  auto* reduce = app.add_subcommand("reduce", "Reductions between certainty problems");
  reduce->require_subcommand(1);
  auto write_database = [&](const std::string& text) {
    if (output_path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw cqa::FileError("cannot write " + output_path);
    out << text;
  };

  auto* strong = reduce->add_subcommand("strong-cycle", "Map an R0/S0 database to one for a query with a strong cycle");
  strong->add_option("query", query_arg, "Query text, or @file")->required();
  strong->add_option("database", db_path, "Database over R0 (2,1) and S0 (3,2)")->required();
  strong->add_option("-o,--output", output_path, "Write the database here instead of stdout");
  strong->callback([&] {
    action = [&] {
      cqa::Query q = cqa::parse_query(query_text(query_arg));
      cqa::UncertainDatabase db0 = cqa::load_database(db_path);
      cqa::ReductionContext ctx = cqa::strong_cycle_reduce(db0, q);
      write_database("# strong attack " + cqa::render(q[ctx.f]) + " -> " + cqa::render(q[ctx.g]) + "\n" +
                     cqa::format_database(ctx.output));
      return int{kOk};
    };
  });

  auto* ck = reduce->add_subcommand("ck-ack", "Add all-key facts turning a C_k instance into an AC_k instance");
  ck->add_option("query", query_arg, "A C_k query, text or @file")->required();
  ck->add_option("database", db_path, "Database file")->required();
  ck->add_option("-o,--output", output_path, "Write the database here instead of stdout");
  ck->callback([&] {
    action = [&] {
      cqa::Query q = cqa::parse_query(query_text(query_arg));
      auto match = cqa::match_cycle_query(q);
      if (!match || match->has_all_key_atom()) throw cqa::PreconditionViolated("query is not a cycle query C_k");
      cqa::UncertainDatabase db = cqa::load_database(db_path);
      auto [augmented_db, augmented_q] = cqa::augment_cycle_instance(db, q, *match, options);
      write_database("# query " + cqa::render(augmented_q) + "\n" + cqa::format_database(augmented_db));
      return int{kOk};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return action();
  } catch (const cqa::SyntaxError& e) {
    std::cerr << "cqa: " << e.what() << "\n";
    return kDataError;
  } catch (const cqa::SignatureConflict& e) {
    std::cerr << "cqa: " << e.what() << "\n";
    return kDataError;
  } catch (const cqa::FormatError& e) {
    std::cerr << "cqa: " << e.what() << "\n";
    return kDataError;
  } catch (const cqa::FileError& e) {
    std::cerr << "cqa: " << e.what() << "\n";
    return kNoInput;
  } catch (const cqa::PreconditionViolated& e) {
    std::cerr << "cqa: " << e.what() << "\n";
    return kPrecondition;
  } catch (const cqa::ResourceLimitExceeded& e) {
    std::cerr << "cqa: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::exception& e) {
    std::cerr << "cqa: internal error: " << e.what() << "\n";
    return kSoftware;
  }
}
