#include "cli.hpp"

#include <cctype>
#include <functional>
#include <ostream>
#include <limits>

#include <CLI11.hpp>

#include "solenoid/covering.hpp"
#include "solenoid/dynamics.hpp"
#include "solenoid/error.hpp"
#include "solenoid/numtheory.hpp"
#include "solenoid/padic.hpp"
#include "solenoid/serialize.hpp"

namespace solenoid::cli {
namespace {

using nlohmann::json;

Integer parse_integer(const std::string& text, const std::string& option) {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  std::size_t end = begin;
  while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
  std::size_t trail = end;
  while (trail < text.size() && std::isspace(static_cast<unsigned char>(text[trail]))) ++trail;
  if (begin == end || trail != text.size()) {
    std::size_t at = begin == end ? begin : end;
    throw ParseError(ErrorKind::SyntaxError, at,
                     "parse error in " + option + " at position " + std::to_string(at) +
                         ": expected a non-negative decimal integer");
  }
  return Integer(text.substr(begin, end - begin));
}

Integer parse_positive(const std::string& text, const std::string& option) {
  Integer v = parse_integer(text, option);
  if (v < 1) {
    throw ParseError(ErrorKind::SyntaxError, 0,
                     "parse error in " + option + " at position 0: expected an integer >= 1");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& text, const std::string& option) {
  Integer v = parse_integer(text, option);
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw ParseError(ErrorKind::SyntaxError, 0,
                     "parse error in " + option + " at position 0: value out of range");
  }
  return static_cast<std::uint64_t>(v);
}

Prime parse_prime(const std::string& text, const std::string& option) {
  std::uint64_t v = parse_u64(text, option);
  if (!nt::is_prime(v)) {
    throw ParseError(ErrorKind::NotPrime, 0,
                     "parse error in " + option + " at position 0: NotPrime(" + std::to_string(v) + ")");
  }
  return v;
}

// Re-throws spec parse failures with the option name attached.
template <class F>
auto with_option(const std::string& option, F&& parse) {
  try {
    return parse();
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), e.position(), option + ": " + e.what());
  }
}

PrimeSeqSpec parse_seq(const std::string& text, const std::string& option) {
  return with_option(option, [&] { return PrimeSeqSpec::parse(text); });
}

std::vector<Angle> parse_coords(const std::string& text) {
  std::vector<Angle> coords;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      coords.push_back(Angle::parse(item));
    } catch (const ParseError& e) {
      std::size_t at = start + e.position();
      throw ParseError(e.kind(), at,
                       "--coords: parse error at position " + std::to_string(at) +
                           ": expected num/den");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return coords;
}

std::string class_text(const PeriodicClass& cls) {
  std::string text(kind_name(cls.kind));
  if (cls.proposition != 0) text += " (Prop " + std::to_string(cls.proposition) + ")";
  return text;
}

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct Options {
  bool json_output = false;
  std::string seq, seq1, seq2;
  std::string k, m, q, x, depth, level, arc, coords, max_steps = "10000";
  bool oracle = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations on P-adic solenoids: covering degrees, fibers, periodic points",
               args.empty() ? "solenoid" : args.front()};
  app.require_subcommand(1);
  app.add_flag("--json", o.json_output, "Print JSON instead of text");

  std::vector<std::pair<CLI::App*, std::function<void()>>> commands;
  auto command = [&](const char* name, const char* description, std::function<void()> action) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_flag("--json", o.json_output, "Print JSON instead of text");
    commands.emplace_back(sub, std::move(action));
    return sub;
  };

  const char* kSeqHelp = "Prime sequence, e.g. \"prefix=[5];cycle=[2]\" or \"universal=exclude[2]\"";

  // degree
  auto* degree_cmd = command("degree", "Degree of the k-th power map h^k", [&] {
    PrimeSeqSpec seq = parse_seq(o.seq, "--seq");
    Integer k = parse_positive(o.k, "--k");
    Integer d = degree(seq, k);
    if (o.json_output) {
      print(out, {{"seq", seq.to_string()},
                  {"k", integer_json(k)},
                  {"degree", integer_json(d)},
                  {"k_fold", d == k},
                  {"homeomorphism", d == 1}});
    } else {
      out << d << '\n';
    }
  });
  degree_cmd->add_option("--seq", o.seq, kSeqHelp)->required();
  degree_cmd->add_option("--k", o.k, "Power k >= 1")->required();

  // fiber
  auto* fiber_cmd = command("fiber", "Points of the fiber of h^k over the identity", [&] {
    PrimeSeqSpec seq = parse_seq(o.seq, "--seq");
    Integer k = parse_positive(o.k, "--k");
    std::uint64_t depth = o.oracle ? std::max(stabilization_level(seq, k), oracle_min_depth(seq, k))
                                   : stabilization_level(seq, k);
    if (!o.depth.empty()) depth = std::max(depth, parse_u64(o.depth, "--depth"));
    FiberReport report = o.oracle ? fiber_oracle(seq, k, depth) : fiber_over_identity(seq, k, depth);
    if (o.json_output) {
      print(out, to_json(report));
    } else {
      out << "k " << report.k << '\n'
          << "degree " << report.degree << '\n'
          << "stabilization_level " << report.stabilization_level << '\n';
      for (const auto& r : report.representatives) out << r.to_string() << '\n';
    }
  });
  fiber_cmd->add_option("--seq", o.seq, kSeqHelp)->required();
  fiber_cmd->add_option("--k", o.k, "Power k >= 1")->required();
  fiber_cmd->add_option("--depth", o.depth, "Truncation depth (only raises the computed default)");
  fiber_cmd->add_flag("--oracle", o.oracle, "Use brute-force enumeration instead of the construction");

  // classify
  auto* classify_cmd = command("classify", "Structure of the periodic points of h^k", [&] {
    PrimeSeqSpec seq = parse_seq(o.seq, "--seq");
    Integer k = parse_positive(o.k, "--k");
    PeriodicClass cls = classify_periodic(seq, k);
    if (o.json_output) {
      json j = to_json(cls);
      j["seq"] = seq.to_string();
      j["k"] = integer_json(k);
      print(out, j);
    } else {
      out << class_text(cls) << '\n';
    }
  });
  classify_cmd->add_option("--seq", o.seq, kSeqHelp)->required();
  classify_cmd->add_option("--k", o.k, "Power k >= 1")->required();

  // witness
  auto* witness_cmd = command("witness", "Construct a periodic point of h^k inside an arc", [&] {
    PrimeSeqSpec seq = parse_seq(o.seq, "--seq");
    Integer k = parse_positive(o.k, "--k");
    std::uint64_t level = o.level.empty() ? 1 : parse_u64(o.level, "--level");
    Arc arc = with_option("--arc", [&] { return Arc::parse(o.arc); });
    Prime q = 0;
    if (o.q.empty()) {
      auto usable = usable_prime(seq, k);
      if (!usable) {
        throw Error(ErrorKind::QNotUsable,
                    "every finitely occurring prime divides k; h^k has no non-trivial periodic points");
      }
      q = *usable;
    } else {
      q = parse_prime(o.q, "--q");
    }
    std::uint64_t min_depth = o.depth.empty() ? 0 : parse_u64(o.depth, "--depth");
    PeriodicWitness w = construct_periodic_witness(seq, k, level, arc, q, min_depth);
    if (o.json_output) {
      print(out, to_json(w));
    } else {
      out << "point " << w.point.to_string() << '\n'
          << "q " << w.q << '\n'
          << "m " << w.m << '\n'
          << "claimed_period " << w.claimed_period << '\n'
          << "least_period " << w.least_period << '\n'
          << "arc_level " << w.arc_level << '\n'
          << "arc " << w.arc.to_string() << '\n'
          << "construction_level " << w.construction_level << '\n';
    }
  });
  witness_cmd->add_option("--seq", o.seq, kSeqHelp)->required();
  witness_cmd->add_option("--k", o.k, "Power k >= 2")->required();
  witness_cmd->add_option("--arc", o.arc, "Open arc \"start+length\" in turns, e.g. 1/10+1/10")->required();
  witness_cmd->add_option("--level", o.level, "Level of the arc (default 1)");
  witness_cmd->add_option("--q", o.q, "Finitely occurring prime not dividing k (default: smallest)");
  witness_cmd->add_option("--depth", o.depth, "Minimum depth of the returned point");

  // orbit
  auto* orbit_cmd = command("orbit", "Iterate h^k from a truncated point until it repeats", [&] {
    PrimeSeqSpec seq = parse_seq(o.seq, "--seq");
    Integer k = parse_positive(o.k, "--k");
    TruncatedPoint x(seq, parse_coords(o.coords));
    OrbitRecord record = orbit(x, k, parse_u64(o.max_steps, "--max-steps"));
    if (o.json_output) {
      print(out, to_json(record));
    } else if (record.period) {
      out << "pre_period " << record.pre_period << '\n' << "period " << *record.period << '\n';
    } else {
      out << "period not found within " << o.max_steps << " steps\n";
    }
  });
  orbit_cmd->add_option("--seq", o.seq, kSeqHelp)->required();
  orbit_cmd->add_option("--k", o.k, "Power k >= 1")->required();
  orbit_cmd->add_option("--coords", o.coords, "Comma-separated coordinates z_1,...,z_d as num/den")->required();
  orbit_cmd->add_option("--max-steps", o.max_steps, "Iteration limit (default 10000)");

  // equiv
  auto* equiv_cmd = command("equiv", "Decide whether two prime sequences are equivalent", [&] {
    PrimeSeqSpec a = parse_seq(o.seq1, "--seq1");
    PrimeSeqSpec b = parse_seq(o.seq2, "--seq2");
    bool same = equivalent(a, b);
    if (o.json_output) {
      print(out, {{"seq1", a.to_string()}, {"seq2", b.to_string()}, {"equivalent", same}});
    } else {
      out << (same ? "equivalent" : "not equivalent") << '\n';
    }
  });
  equiv_cmd->add_option("--seq1", o.seq1, kSeqHelp)->required();
  equiv_cmd->add_option("--seq2", o.seq2, kSeqHelp)->required();

  // member
  auto* member_cmd = command("member", "Is x a P-adic rational m/(p_1...p_n)?", [&] {
    PrimeSeqSpec seq = parse_seq(o.seq, "--seq");
    PadicRational x = with_option("--x", [&] { return PadicRational::parse(o.x); });
    bool member = is_member(seq, x);
    if (o.json_output) {
      print(out, {{"seq", seq.to_string()}, {"x", x.to_string()}, {"member", member}});
    } else {
      out << (member ? "member" : "not member") << '\n';
    }
  });
  member_cmd->add_option("--seq", o.seq, kSeqHelp)->required();
  member_cmd->add_option("--x", o.x, "Rational num/den")->required();

  // divisible
  auto* divisible_cmd = command("divisible", "q-divisibility of the P-adic rationals", [&] {
    PrimeSeqSpec seq = parse_seq(o.seq, "--seq");
    Prime q = parse_prime(o.q, "--q");
    bool divisible = is_q_divisible(seq, q);
    json j = {{"seq", seq.to_string()}, {"q", q}, {"divisible", divisible}};
    std::optional<PadicRational> witness;
    if (!o.x.empty()) {
      PadicRational x = with_option("--x", [&] { return PadicRational::parse(o.x); });
      witness = divide_witness(seq, x, q);
      j["x"] = x.to_string();
      j["witness"] = witness ? json(witness->to_string()) : json(nullptr);
    }
    if (o.json_output) {
      print(out, j);
      return;
    }
    if (o.x.empty()) {
      out << (divisible ? "divisible" : "not divisible") << '\n';
    } else {
      out << (witness ? witness->to_string() : std::string("no witness")) << '\n';
    }
  });
  divisible_cmd->add_option("--seq", o.seq, kSeqHelp)->required();
  divisible_cmd->add_option("--q", o.q, "Prime q")->required();
  divisible_cmd->add_option("--x", o.x, "Member to divide by q");

  // count-periodic
  auto* count_cmd = command("count-periodic", "Number of points with (h^k)^m(x) = x", [&] {
    PrimeSeqSpec seq = parse_seq(o.seq, "--seq");
    Integer k = parse_positive(o.k, "--k");
    std::uint64_t m = parse_u64(o.m, "--m");
    if (m < 1 || m > std::numeric_limits<unsigned>::max()) {
      throw ParseError(ErrorKind::SyntaxError, 0, "parse error in --m at position 0: expected 1 <= m < 2^32");
    }
    Integer count = count_periodic(seq, k, static_cast<unsigned>(m));
    if (o.json_output) {
      print(out, {{"seq", seq.to_string()}, {"k", integer_json(k)}, {"m", m}, {"count", integer_json(count)}});
    } else {
      out << count << '\n';
    }
  });
  count_cmd->add_option("--seq", o.seq, kSeqHelp)->required();
  count_cmd->add_option("--k", o.k, "Power k >= 2")->required();
  count_cmd->add_option("--m", o.m, "Iteration count m >= 1")->required();

  // totient
  auto* totient_cmd = command("totient", "Euler's function", [&] {
    Integer m = parse_positive(o.m, "--m");
    Integer phi = euler_totient(m);
    if (o.json_output) {
      print(out, {{"m", integer_json(m)}, {"totient", integer_json(phi)}});
    } else {
      out << phi << '\n';
    }
  });
  totient_cmd->add_option("--m", o.m, "Argument m >= 1")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("solenoid");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    for (auto& [sub, action] : commands) {
      if (sub->parsed()) action();
    }
  } catch (const ParseError& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace solenoid::cli
