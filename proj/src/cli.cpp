#include "wpspec/cli.hpp"

#include "wpspec/pairsum_inverse.hpp"
#include "wpspec/spectrum.hpp"
#include "wpspec/stabilizers.hpp"
#include "wpspec/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wpspec::cli {
namespace {

using Json = nlohmann::ordered_json;

class CrossCheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integers are JSON numbers when they fit in a signed 64-bit long, otherwise
// decimal strings.
Json big(const BigInt& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json big_list(std::span<const BigInt> xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(big(x));
  return arr;
}

Json index_list(const std::vector<std::size_t>& xs) {
  Json arr = Json::array();
  for (auto x : xs) arr.push_back(x);
  return arr;
}

std::string set_text(const std::vector<std::size_t>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

std::vector<BigInt> parse_integer_list(const std::string& text, std::string_view what) {
  std::vector<BigInt> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw Error(ErrorKind::ParseError, ": empty entry in --" + std::string(what));
    }
    token = token.substr(first, last - first + 1);
    const std::size_t digits_from = token[0] == '-' ? 1 : 0;
    const bool numeric = token.size() > digits_from &&
                         std::all_of(token.begin() + static_cast<std::ptrdiff_t>(digits_from),
                                     token.end(), [](unsigned char c) { return std::isdigit(c); });
    if (!numeric) {
      throw Error(ErrorKind::ParseError, ": '" + token + "' in --" + std::string(what) +
                                             " is not a decimal integer");
    }
    out.emplace_back(token, 10);
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, ": --" + std::string(what) + " is empty");
  return out;
}

Json witness_json(const StabilizerWitness& wit) {
  Json sigma = Json::array();
  for (const auto& [m, value] : wit.sigma) sigma.push_back(Json::array({m, big(value)}));
  Json j;
  j["r"] = wit.r;
  j["S1"] = index_list(wit.s1);
  j["S2"] = index_list(wit.s2);
  j["sigma"] = std::move(sigma);
  j["k"] = big(wit.k);
  j["family_dimension"] = wit.isotropic() ? Json(family_dimension(wit)) : Json(nullptr);
  return j;
}

std::string witness_text(const StabilizerWitness& wit) {
  return "r=" + std::to_string(wit.r) + " S1=" + set_text(wit.s1) + " S2=" + set_text(wit.s2);
}

Json candidate_json(const Candidate& c) {
  Json j;
  j["weights"] = big_list(c.weights);
  j["coprime"] = c.coprime;
  j["strict"] = c.strict;
  return j;
}

std::string candidate_text(const Candidate& c) {
  std::string s = "(" + join(c.weights) + ")";
  if (!c.coprime) s += "  [not pairwise coprime]";
  if (!c.strict) s += "  [contains weight 1]";
  return s;
}

std::string kind_text(const GeodesicClass& cls) {
  std::string s(to_string(cls.kind));
  for (const auto& [i, j] : cls.desirable_pairs) {
    s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  if (cls.kind == GeodesicKind::Desirable && cls.has_undesirable) s += "+undesirable";
  return s;
}

struct Outcome {
  Json result;
  std::string text;
  std::vector<std::string> diagnostics;
};

Json spectrum_json(const LengthSpectrum& spectrum) {
  Json classes = Json::array();
  for (const auto& cls : spectrum.classes) {
    Json c;
    c["k"] = big(cls.k);
    c["length"] = cls.length_text();
    c["length_over_2pi"] = cls.length().get_str();
    c["kind"] = std::string(to_string(cls.kind));
    Json pairs = Json::array();
    for (const auto& [i, j] : cls.desirable_pairs) pairs.push_back(Json::array({i, j}));
    c["desirable_pairs"] = std::move(pairs);
    c["has_undesirable"] = cls.has_undesirable;
    c["max_family_dimension"] =
        cls.max_family_dimension ? Json(*cls.max_family_dimension) : Json(nullptr);
    Json wits = Json::array();
    for (const auto& w : cls.witnesses) wits.push_back(witness_json(w));
    c["witnesses"] = std::move(wits);
    classes.push_back(std::move(c));
  }
  Json j;
  j["weights"] = big_list(spectrum.weights.values());
  j["d"] = spectrum.weights.size();
  j["all_odd"] = spectrum.all_odd;
  j["classes"] = std::move(classes);
  return j;
}

std::string spectrum_text(const LengthSpectrum& spectrum) {
  std::ostringstream os;
  os << "weights " << spectrum.weights.to_string() << "  d=" << spectrum.weights.size()
     << "  all odd: " << (spectrum.all_odd ? "yes" : "no") << "\n";
  os << std::left << std::setw(8) << "k" << std::setw(10) << "length" << std::setw(28) << "kind"
     << std::setw(5) << "dim"
     << "witnesses\n";
  for (const auto& cls : spectrum.classes) {
    std::string wits;
    for (const auto& w : cls.witnesses) wits += (wits.empty() ? "" : "; ") + witness_text(w);
    // "π" is two bytes in UTF-8; pad by display width.
    const std::string length = cls.length_text();
    const std::size_t extra = length.find("π") != std::string::npos ? 1 : 0;
    os << std::setw(8) << cls.k.get_str() << std::setw(static_cast<int>(10 + extra)) << length
       << std::setw(28) << kind_text(cls) << std::setw(5)
       << (cls.max_family_dimension ? std::to_string(*cls.max_family_dimension) : "-") << wits
       << "\n";
  }
  return os.str();
}

WeightVector parse_weights(const std::string& text, bool allow_weight_one) {
  const auto raw = parse_integer_list(text, "weights");
  return validate_weights(raw, !allow_weight_one);
}

Outcome cmd_spectrum(const WeightVector& w, bool full_grassmannian) {
  Outcome out;
  const LengthSpectrum spectrum = length_spectrum(w);
  out.diagnostics = spectrum.diagnostics;
  if (w.size() == 2) {
    if (line_spectrum_d2(w[0], w[1]) != spectrum) {
      throw CrossCheckFailure("d = 2 spectrum disagrees with the weighted projective line formula");
    }
  }
  out.result = spectrum_json(spectrum);
  out.text = spectrum_text(spectrum);
  if (full_grassmannian) {
    const WitnessCatalog catalog = enumerate_witnesses(w, /*isotropic_only=*/false);
    Json wits = Json::array();
    std::ostringstream os;
    os << "\nexceptional points of the Grassmannian (all witnesses, k > 2):\n";
    for (const auto& wit : catalog.witnesses) {
      wits.push_back(witness_json(wit));
      os << "  k=" << wit.k.get_str() << "  " << witness_text(wit)
         << (wit.isotropic() ? "" : "  (not isotropic)") << "\n";
    }
    out.result["grassmannian_witnesses"] = std::move(wits);
    out.text += os.str();
  }
  return out;
}

Outcome cmd_hear(const WeightVector& w) {
  Outcome out;
  const HearabilityReport rep = hear(w);
  Json statuses = Json::array();
  std::ostringstream os;
  os << "weights " << w.to_string() << "\n";
  os << std::left << std::setw(10) << "pair" << std::setw(8) << "sum"
     << "status\n";
  for (const auto& ps : rep.per_sum_status) {
    Json s;
    s["i"] = ps.i;
    s["j"] = ps.j;
    s["sum"] = big(ps.sum);
    s["status"] = std::string(to_string(ps.status));
    statuses.push_back(std::move(s));
    os << std::setw(10) << ("(" + std::to_string(ps.i) + "," + std::to_string(ps.j) + ")")
       << std::setw(8) << ps.sum.get_str() << to_string(ps.status) << "\n";
  }
  Json candidates = Json::array();
  for (const auto& c : rep.determined_weights) candidates.push_back(candidate_json(c));

  out.result["weights"] = big_list(w.values());
  if (rep.heard_pair_sums) {
    out.result["heard_pair_sums"] = big_list(rep.heard_pair_sums->elements());
    os << "heard pair sums: {" << join(rep.heard_pair_sums->elements()) << "}\n";
  } else {
    out.result["heard_pair_sums"] = "Unknown";
    os << "heard pair sums: Unknown\n";
  }
  out.result["per_sum_status"] = std::move(statuses);
  out.result["determined_weights"] = std::move(candidates);
  out.result["verdict"] = std::string(to_string(rep.verdict));
  out.result["candidate_count"] = rep.candidate_count();
  out.result["notes"] = rep.notes;

  for (const auto& c : rep.determined_weights) os << "candidate " << candidate_text(c) << "\n";
  os << "verdict: " << to_string(rep.verdict);
  if (rep.verdict == Verdict::FinitelyManyCandidates) os << "(" << rep.candidate_count() << ")";
  os << "\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  out.text = os.str();
  return out;
}

Outcome cmd_reconstruct(const PairSumMultiset& sums, const std::string& method, bool require_coprime) {
  Outcome out;
  auto filter = [&](std::vector<Candidate> v) {
    if (require_coprime) {
      v.erase(std::remove_if(v.begin(), v.end(), [](const Candidate& c) { return !c.coprime; }),
              v.end());
    }
    return v;
  };

  std::vector<Candidate> solutions;
  ReconstructionMethod used = ReconstructionMethod::Backtracking;
  std::optional<bool> agreement;
  if (method == "newton") {
    solutions = filter(reconstruct_newton(sums).solutions());
    used = ReconstructionMethod::Newton;
  } else if (method == "backtrack") {
    solutions = reconstruct_backtracking(sums, require_coprime).solutions();
  } else {
    const auto backtracked = reconstruct_backtracking(sums, require_coprime).solutions();
    if (ladder_degenerate(sums.declared_d())) {
      out.diagnostics.push_back("d = " + std::to_string(sums.declared_d()) +
                                " is a power of two; power-sum method skipped");
      solutions = backtracked;
    } else {
      std::vector<Candidate> newton;
      try {
        newton = filter(reconstruct_newton(sums).solutions());
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoIntegerSolution) throw;
        out.diagnostics.push_back(e.what());
      }
      if (newton != backtracked) {
        throw CrossCheckFailure("power-sum and backtracking reconstructions disagree");
      }
      agreement = true;
      solutions = backtracked;
      used = ReconstructionMethod::Both;
    }
  }

  Json sols = Json::array();
  std::ostringstream os;
  os << "pair sums {" << join(sums.elements()) << "}  d=" << sums.declared_d()
     << "  method: " << to_string(used) << "\n";
  os << solutions.size() << " solution" << (solutions.size() == 1 ? "" : "s") << "\n";
  for (const auto& c : solutions) {
    sols.push_back(candidate_json(c));
    os << "  " << candidate_text(c) << "\n";
  }
  out.result["d"] = sums.declared_d();
  out.result["method"] = std::string(to_string(used));
  out.result["solutions"] = std::move(sols);
  out.result["agreement"] = agreement ? Json(*agreement) : Json(nullptr);
  out.text = os.str();
  return out;
}

Outcome cmd_collide(const CollisionQuery& q) {
  Outcome out;
  const auto groups = find_collisions(q);
  Json arr = Json::array();
  std::ostringstream os;
  os << groups.size() << " collision group" << (groups.size() == 1 ? "" : "s") << " (d=" << q.d
     << ", N_d <= " << q.max_weight << ")\n";
  for (const auto& g : groups) {
    Json jg;
    jg["sums"] = big_list(g.sums.elements());
    Json members = Json::array();
    os << "sums {" << join(g.sums.elements()) << "}\n";
    for (const auto& m : g.members) {
      members.push_back(candidate_json(m));
      os << "  " << candidate_text(m) << "\n";
    }
    jg["members"] = std::move(members);
    arr.push_back(std::move(jg));
  }
  out.result["group_count"] = groups.size();
  out.result["groups"] = std::move(arr);
  out.text = os.str();
  return out;
}

Outcome cmd_check_identity(std::size_t d, unsigned k, std::size_t trials, std::uint64_t seed) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, ": --d must be >= 1");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, ": --k must be >= 1");
  Outcome out;
  std::mt19937_64 rng(seed);
  std::size_t corrected = 0;
  std::size_t printed = 0;
  std::optional<std::vector<BigInt>> first_printed_failure;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<BigInt> values;
    for (std::size_t i = 0; i < d; ++i) {
      values.emplace_back(static_cast<long>(rng() % 2001) - 1000);
    }
    const IdentityReport rep = verify_appendix_identity(values, k);
    corrected += rep.holds_with_corrected_exponent ? 1 : 0;
    printed += rep.holds_as_printed ? 1 : 0;
    if (!rep.holds_as_printed && !first_printed_failure) first_printed_failure = values;
  }
  out.result["trials"] = trials;
  out.result["corrected_holds"] = corrected;
  out.result["printed_holds"] = printed;
  out.result["first_printed_failure"] =
      first_printed_failure ? big_list(*first_printed_failure) : Json(nullptr);

  std::ostringstream os;
  os << "coefficient d - 2^(k-1): holds " << corrected << "/" << trials << "\n";
  os << "coefficient d - 2^k:     holds " << printed << "/" << trials << "\n";
  out.text = os.str();
  if (corrected != trials) {
    out.diagnostics.push_back("corrected identity failed on some trial");
  }
  return out;
}

void emit(std::ostream& out, bool json, const std::string& command, const Json& inputs,
          const Outcome& outcome) {
  if (json) {
    Json doc;
    doc["schema_version"] = std::string(kSchemaVersion);
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["result"] = outcome.result;
    doc["diagnostics"] = outcome.diagnostics;
    out << doc.dump(2) << "\n";
    return;
  }
  out << outcome.text;
  for (const auto& d : outcome.diagnostics) out << "warning: " << d << "\n";
}

void emit_error(std::ostream& out, std::ostream& err, bool json, const std::string& command,
                const Json& inputs, std::string_view kind, const std::string& message) {
  err << "error: " << message << "\n";
  if (!json) return;
  Json doc;
  doc["schema_version"] = std::string(kSchemaVersion);
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["result"] = nullptr;
  doc["error"] = Json{{"kind", std::string(kind)}, {"message", message}};
  doc["diagnostics"] = Json::array();
  out << doc.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exceptional-geodesic length spectra of weighted projective spaces", "wpspec"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string weights_text;
  std::string sums_text;
  bool allow_weight_one = false;
  bool full_grassmannian = false;
  std::string method = "both";
  bool require_coprime = false;
  bool require_strict = false;
  std::size_t d = 0;
  std::int64_t max_weight = 0;
  unsigned k = 0;
  std::size_t trials = 50;
  std::uint64_t seed = 1;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* spectrum = app.add_subcommand("spectrum", "Length spectrum of the exceptional geodesics");
  spectrum->add_option("--weights", weights_text, "Comma-separated weights")->required();
  spectrum->add_flag("--allow-weight-one", allow_weight_one, "Accept weight 1");
  spectrum->add_flag("--full-grassmannian", full_grassmannian,
                     "Also list non-isotropic exceptional witnesses");
  add_format(spectrum);

  auto* hear_cmd = app.add_subcommand("hear", "Decide which pair sums and weights are audible");
  hear_cmd->add_option("--weights", weights_text, "Comma-separated weights")->required();
  hear_cmd->add_flag("--allow-weight-one", allow_weight_one, "Accept weight 1");
  add_format(hear_cmd);

  auto* reconstruct = app.add_subcommand("reconstruct", "Recover weights from pairwise sums");
  reconstruct->add_option("--sums", sums_text, "Comma-separated pair sums")->required();
  reconstruct->add_option("--method", method, "newton | backtrack | both")
      ->check(CLI::IsMember({"newton", "backtrack", "both"}));
  reconstruct->add_flag("--require-coprime", require_coprime, "Keep pairwise coprime solutions only");
  add_format(reconstruct);

  auto* collide = app.add_subcommand("collide", "Search distinct weight sets with equal pair sums");
  collide->add_option("--d", d, "Number of weights")->required();
  collide->add_option("--max-weight", max_weight, "Largest weight scanned")->required();
  collide->add_flag("--require-coprime", require_coprime, "Pairwise coprime vectors only");
  collide->add_flag("--require-strict", require_strict, "Weights greater than one only");
  add_format(collide);

  auto* identity = app.add_subcommand("check-identity", "Test the pair-sum power identity");
  identity->add_option("--d", d, "Vector length")->required();
  identity->add_option("--k", k, "Power")->required();
  identity->add_option("--trials", trials, "Number of random vectors");
  identity->add_option("--seed", seed, "Generator seed");
  add_format(identity);

  std::vector<const char*> argv{"wpspec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  const bool json = format == "json";
  std::string command;
  Json inputs;
  try {
    Outcome outcome;
    if (spectrum->parsed()) {
      command = "spectrum";
      inputs = Json{{"weights", weights_text},
                    {"allow_weight_one", allow_weight_one},
                    {"full_grassmannian", full_grassmannian}};
      outcome = cmd_spectrum(parse_weights(weights_text, allow_weight_one), full_grassmannian);
    } else if (hear_cmd->parsed()) {
      command = "hear";
      inputs = Json{{"weights", weights_text}, {"allow_weight_one", allow_weight_one}};
      outcome = cmd_hear(parse_weights(weights_text, allow_weight_one));
    } else if (reconstruct->parsed()) {
      command = "reconstruct";
      inputs = Json{{"sums", sums_text}, {"method", method}, {"require_coprime", require_coprime}};
      const PairSumMultiset sums(parse_integer_list(sums_text, "sums"));
      outcome = cmd_reconstruct(sums, method, require_coprime);
    } else if (collide->parsed()) {
      command = "collide";
      inputs = Json{{"d", d},
                    {"max_weight", max_weight},
                    {"require_coprime", require_coprime},
                    {"require_strict", require_strict}};
      outcome = cmd_collide(CollisionQuery{d, max_weight, require_coprime, require_strict, 0});
    } else {
      command = "check-identity";
      inputs = Json{{"d", d}, {"k", k}, {"trials", trials}, {"seed", seed}};
      outcome = cmd_check_identity(d, k, trials, seed);
      if (outcome.result["corrected_holds"] != outcome.result["trials"]) {
        emit(out, json, command, inputs, outcome);
        return kCrossCheckFailure;
      }
    }
    emit(out, json, command, inputs, outcome);
    return kSuccess;
  } catch (const Error& e) {
    emit_error(out, err, json, command, inputs, to_string(e.kind()), e.what());
    return kInputError;
  } catch (const CrossCheckFailure& e) {
    emit_error(out, err, json, command, inputs, "CrossCheckFailure", e.what());
    return kCrossCheckFailure;
  } catch (const std::exception& e) {
    emit_error(out, err, json, command, inputs, "InternalError", e.what());
    return kCrossCheckFailure;
  }
}

}  // namespace wpspec::cli
