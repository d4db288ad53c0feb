#include "cqa/probabilistic.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

#include "cqa/errors.hpp"
#include "cqa/evaluation.hpp"
#include "cqa/repairs.hpp"

namespace cqa {
namespace {

// cpp_int reads a leading 0 as an octal prefix.
BigInt decimal_integer(const std::string& digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string::npos ? BigInt(0) : BigInt(digits.substr(first));
}

std::optional<Rational> parse_rational(const std::string& text) {
  static const std::regex fraction(R"((\d+)(?:/(\d+))?)");
  static const std::regex decimal(R"((\d*)\.(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, fraction)) {
    BigInt num = decimal_integer(m[1].str());
    BigInt den = m[2].matched ? decimal_integer(m[2].str()) : BigInt(1);
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  }
  if (std::regex_match(text, m, decimal)) {
    std::string digits = m[1].str() + m[2].str();
    BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(m[2].length()));
    return Rational(decimal_integer(digits), den);
  }
  return std::nullopt;
}

struct WorldChoice {
  const Fact* fact;  // nullptr: the block contributes no fact
  Rational weight;
};

// Per block, the options with positive weight.
std::vector<std::vector<WorldChoice>> world_choices(const BIDDatabase& pdb) {
  std::vector<std::vector<WorldChoice>> out;
  for (const Block& block : pdb.base().blocks()) {
    std::vector<WorldChoice> options;
    for (const Fact& f : block) {
      const Rational& p = pdb.probability(f);
      if (p > 0) options.push_back({&f, p});
    }
    Rational rest = 1 - pdb.block_mass(block);
    if (rest > 0) options.push_back({nullptr, rest});
    out.push_back(std::move(options));
  }
  return out;
}

template <typename Visit>
void for_each_world(const BIDDatabase& pdb, const SolverOptions& options, Visit visit) {
  auto choices = world_choices(pdb);
  BigInt worlds = 1;
  for (const auto& c : choices) worlds *= c.size();
  if (worlds > options.repair_limit) {
    throw ResourceLimitExceeded("database has " + worlds.str() + " possible worlds, above the limit of " +
                                std::to_string(options.repair_limit));
  }
  std::vector<Fact> world;
  auto recurse = [&](auto& self, std::size_t b, const Rational& weight) -> void {
    if (b == choices.size()) {
      visit(world, weight);
      return;
    }
    for (const WorldChoice& c : choices[b]) {
      if (c.fact) world.push_back(*c.fact);
      self(self, b + 1, weight * c.weight);
      if (c.fact) world.pop_back();
    }
  };
  recurse(recurse, 0, Rational(1));
}

}  // namespace

BIDDatabase::BIDDatabase(UncertainDatabase base, std::map<Fact, Rational> probability)
    : base_(std::move(base)), probability_(std::move(probability)) {
  for (const Block& block : base_.blocks()) {
    for (const Fact& f : block) {
      auto it = probability_.find(f);
      if (it == probability_.end()) throw std::invalid_argument("no probability for " + render(f));
      if (it->second < 0 || it->second > 1) {
        throw std::invalid_argument("probability of " + render(f) + " is outside [0,1]");
      }
    }
    if (block_mass(block) > 1) {
      throw std::invalid_argument("block of " + render(block.front()) + " has probabilities summing above 1");
    }
  }
  std::erase_if(probability_, [&](const auto& entry) { return !base_.contains(entry.first); });
}

Rational BIDDatabase::block_mass(const Block& block) const {
  Rational sum = 0;
  for (const Fact& f : block) sum += probability_.at(f);
  return sum;
}

std::string to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

BIDDatabase parse_bid(std::string_view text) {
  detail::ParsedDatabase parsed = detail::parse_database_text(text, true);

  std::map<Fact, std::pair<std::optional<Rational>, std::size_t>> given;
  for (const detail::ParsedLine& line : parsed.facts) {
    std::optional<Rational> p;
    if (line.annotation) {
      p = parse_rational(*line.annotation);
      if (!p || *p > 1) throw FormatError(line.line, "probability must be a rational in [0,1], got " + *line.annotation);
    }
    auto [it, inserted] = given.emplace(line.fact, std::make_pair(p, line.line));
    if (!inserted && it->second.first != p) {
      throw FormatError(line.line, "conflicting probabilities for " + render(line.fact));
    }
  }

  std::vector<Fact> facts;
  for (const auto& entry : given) facts.push_back(entry.first);
  UncertainDatabase base(std::move(parsed.schema), std::move(facts));

  std::map<Fact, Rational> probability;
  for (const Block& block : base.blocks()) {
    Rational assigned = 0;
    std::size_t open = 0;
    std::size_t last_line = 0;
    for (const Fact& f : block) {
      const auto& [p, line] = given.at(f);
      last_line = std::max(last_line, line);
      if (p) {
        assigned += *p;
        probability[f] = *p;
      } else {
        ++open;
      }
    }
    if (assigned > 1) throw FormatError(last_line, "block of " + render(block.front()) + " sums above 1");
    for (const Fact& f : block) {
      if (!given.at(f).first) probability[f] = (1 - assigned) / open;
    }
  }
  return BIDDatabase(std::move(base), std::move(probability));
}

BIDDatabase load_bid(const std::filesystem::path& path) { return parse_bid(detail::read_file(path)); }

std::string format_bid(const BIDDatabase& pdb) {
  std::string out;
  for (const auto& [name, sig] : pdb.base().schema()) {
    out += "@relation " + name + " " + std::to_string(sig.arity) + " " + std::to_string(sig.key_length) + "\n";
  }
  for (const Fact& f : pdb.base().facts()) {
    out += f.relation;
    for (const Symbol& v : f.values) out += " " + v;
    out += " : " + to_string(pdb.probability(f)) + "\n";
  }
  return out;
}

Rational prob_bruteforce(const BIDDatabase& pdb, const Query& q, const SolverOptions& options) {
  Rational total = 0;
  for_each_world(pdb, options, [&](const std::vector<Fact>& world, const Rational& weight) {
    if (satisfies(world, q)) total += weight;
  });
  return total;
}

Rational world_probability_sum(const BIDDatabase& pdb, const SolverOptions& options) {
  Rational total = 0;
  for_each_world(pdb, options, [&](const std::vector<Fact>&, const Rational& weight) { total += weight; });
  return total;
}

UncertainDatabase certain_blocks_restrict(const BIDDatabase& pdb) {
  std::vector<Fact> kept;
  for (const Block& block : pdb.base().blocks()) {
    if (pdb.block_mass(block) != 1) continue;
    for (const Fact& f : block) {
      if (pdb.probability(f) > 0) kept.push_back(f);
    }
  }
  return pdb.base().with_facts(std::move(kept));
}

bool prob_is_one(const BIDDatabase& pdb, const Query& q, const SolverOptions& options) {
  SolverOptions decision_only = options;
  decision_only.recover_witness = false;
  return solve(certain_blocks_restrict(pdb), q, SolveMethod::Auto, decision_only).certain;
}

}  // namespace cqa
