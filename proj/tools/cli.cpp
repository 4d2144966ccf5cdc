#include "cli.hpp"

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tamari/tamari.hpp"

namespace tamari::cli {
namespace {

// Input rejected after argument parsing succeeded (bad value, range, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_n(int n, int lo, int hi, const std::string& what) {
  if (n < lo || n > hi)
    throw UsageError(what + " supports " + std::to_string(lo) + " <= n <= " + std::to_string(hi));
}

// ---------------------------------------------------------------------------
// enumerate / hasse

void print_perm_hasse(std::ostream& out, int n, bool mark_image) {
  check_n(n, 1, 6, "hasse --lattice perm");
  const auto sn = permutation_lattice(n);
  std::vector<bool> marked;
  if (mark_image)
    for (const auto& s : sn.elements) marked.push_back(satisfies_i2star(s));
  out << to_dot(
      sn.lattice, [&](Index i) { return to_string(realize(sn.elements[i])); }, marked,
      "S" + std::to_string(n));
}

void print_tamari_hasse(std::ostream& out, int n) {
  check_n(n, 1, 7, "hasse --lattice tamari");
  const auto tn = tamari_lattice(n);
  out << to_dot(tn.lattice, [&](Index i) { return to_string(tn.elements[i]); }, {},
                "T" + std::to_string(n));
}

void enumerate(std::ostream& out, const std::string& lattice, int n, const std::string& format) {
  if (format == "dot") {
    if (lattice == "perm") print_perm_hasse(out, n, false);
    else print_tamari_hasse(out, n);
    return;
  }
  if (lattice == "perm") {
    check_n(n, 1, 8, "enumerate --lattice perm");
    const auto perms = all_permutations(n);
    if (format == "json") {
      json all = json::array();
      for (const auto& p : perms) all.push_back(to_json(p));
      out << all.dump() << '\n';
      return;
    }
    for (const auto& p : perms) {
      const InversionSet inv = inversions(p);
      out << to_string(p) << '\t' << rank(inv) << '\t' << to_string(inv) << '\n';
    }
    return;
  }
  check_n(n, 1, kMaxEnumerateN, "enumerate --lattice tamari");
  if (format == "json") {
    json all = json::array();
    for_each_bracketing(n, [&](const BracketingFn& e) { all.push_back(to_json(e)); });
    out << all.dump() << '\n';
    return;
  }
  for_each_bracketing(n, [&](const BracketingFn& e) {
    out << to_string(e) << '\t' << height(e) << '\t' << to_word(from_bracketing_fn(e)) << '\n';
  });
}

// ---------------------------------------------------------------------------
// convert

json parse_json_value(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

// Every representation funnels through the inversion set or the bracketing
// function, whichever the source determines.
struct Value {
  std::optional<BracketingFn> fn;
  std::optional<InversionSet> invset;
};

Value read_value(const std::string& from, const std::string& text) {
  if (from == "word") return {to_bracketing_fn(parse_word(text)), std::nullopt};
  if (from == "fn") {
    if (!text.empty() && text.front() == '{') return {bracketing_fn_from_json(parse_json_value(text)), std::nullopt};
    return {BracketingFn(parse_int_list(text)), std::nullopt};
  }
  if (from == "perm") {
    if (!text.empty() && text.front() == '[') return {std::nullopt, inversions(permutation_from_json(parse_json_value(text)))};
    return {std::nullopt, inversions(Permutation(parse_int_list(text)))};
  }
  InversionSet s = inversion_set_from_json(parse_json_value(text));
  if (auto v = validate_inversion_set(s)) throw UsageError("not an inversion set: " + describe(*v));
  return {std::nullopt, s};
}

BracketingFn as_fn(const Value& v) {
  if (v.fn) return *v.fn;
  return phi_inverse(*v.invset);
}

InversionSet as_invset(const Value& v) {
  if (v.invset) return *v.invset;
  return phi(*v.fn);
}

void convert(std::ostream& out, const std::string& from, const std::string& to, const std::string& text) {
  const Value v = read_value(from, text);
  if (to == "word") out << to_word(from_bracketing_fn(as_fn(v))) << '\n';
  else if (to == "tree") out << to_structure(from_bracketing_fn(as_fn(v))) << '\n';
  else if (to == "fn") out << to_string(as_fn(v)) << '\n';
  else if (to == "perm") out << to_string(realize(as_invset(v))) << '\n';
  else out << to_json(as_invset(v)).dump() << '\n';
}

// ---------------------------------------------------------------------------
// op

InversionSet read_perm_element(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    InversionSet s = inversion_set_from_json(parse_json_value(text));
    if (auto v = validate_inversion_set(s)) throw UsageError("not an inversion set: " + describe(*v));
    return s;
  }
  return inversions(Permutation(parse_int_list(text)));
}

BracketingFn read_tamari_element(const std::string& text) {
  if (!text.empty() && text.front() == '{') return bracketing_fn_from_json(parse_json_value(text));
  return BracketingFn(parse_int_list(text));
}

void op(std::ostream& out, const std::string& name, const std::string& lattice, const std::string& as,
        const std::string& a, const std::string& b) {
  if (lattice == "tamari") {
    const BracketingFn x = read_tamari_element(a);
    const BracketingFn y = read_tamari_element(b);
    out << to_string(name == "join" ? join(x, y) : meet(x, y)) << '\n';
    return;
  }
  const InversionSet x = read_perm_element(a);
  const InversionSet y = read_perm_element(b);
  const InversionSet r = name == "join" ? join(x, y) : meet(x, y);
  if (as == "invset") out << to_json(r).dump() << '\n';
  else out << to_string(realize(r)) << '\n';
}

// ---------------------------------------------------------------------------
// stats

void stats(std::ostream& out, int n) {
  check_n(n, 1, kMaxEnumerateN, "stats");
  std::uint64_t factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= static_cast<std::uint64_t>(k);
  std::uint64_t catalan = 0;
  std::uint64_t tamari_atoms = 0;
  for_each_bracketing(n, [&](const BracketingFn& e) {
    ++catalan;
    tamari_atoms += height(e) == 1;
  });
  const auto perm_atoms = covers_up(InversionSet(n)).size();
  out << "n: " << n << '\n'
      << "|S_n|: " << factorial << '\n'
      << "|T_n|: " << catalan << '\n'
      << "height(top S_n): " << rank(InversionSet::full(n)) << '\n'
      << "height(top T_n): " << height(BracketingFn::top(n)) << '\n'
      << "atoms(S_n): " << perm_atoms << '\n'
      << "atoms(T_n): " << tamari_atoms << '\n';
}

// ---------------------------------------------------------------------------
// verify

int verify(std::ostream& out, std::ostream& err, const std::string& kind, int n, const VerifyOptions& opt) {
  Report report;
  if (kind == "embedding") report = verify_embedding(n, opt);
  else if (kind == "height") report = verify_height(n, opt);
  else if (kind == "semidistributive") report = verify_semidistributive(n, opt);
  else if (kind == "bounded") report = verify_bounded(n, opt);
  else report = verify_roundtrip(n, opt);
  out << report.to_json().dump() << '\n';
  if (report.passed()) return kExitOk;
  err << "verification failed: " << (report.witness ? report.witness->dump() : "no witness") << '\n';
  return kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak order on permutations, Tamari lattices, and the embedding between them", "tamari"};
  app.require_subcommand(1);

  const std::vector<std::string> lattices{"perm", "tamari"};

  std::string lattice;
  std::string format = "table";
  int n = 0;
  auto* cmd_enumerate = app.add_subcommand("enumerate", "List every element of S_n or T_n");
  cmd_enumerate->add_option("--lattice", lattice)->required()->check(CLI::IsMember(lattices));
  cmd_enumerate->add_option("--n", n)->required();
  cmd_enumerate->add_option("--format", format)->check(CLI::IsMember({"table", "json", "dot"}));

  std::string from;
  std::string to;
  std::string value;
  auto* cmd_convert = app.add_subcommand("convert", "Convert between words, trees, functions, permutations");
  cmd_convert->add_option("--from", from)->required()->check(CLI::IsMember({"word", "fn", "perm", "invset"}));
  cmd_convert->add_option("--to", to)->required()->check(CLI::IsMember({"word", "fn", "perm", "invset", "tree"}));
  cmd_convert->add_option("value", value)->required();

  std::string op_name;
  std::string as = "perm";
  std::string lhs;
  std::string rhs;
  auto* cmd_op = app.add_subcommand("op", "Join or meet of two elements");
  cmd_op->add_option("operation", op_name)->required()->check(CLI::IsMember({"join", "meet"}));
  cmd_op->add_option("a", lhs)->required();
  cmd_op->add_option("b", rhs)->required();
  cmd_op->add_option("--lattice", lattice)->required()->check(CLI::IsMember(lattices));
  cmd_op->add_option("--as", as, "Output of perm-lattice results")->check(CLI::IsMember({"perm", "invset"}));

  bool mark_image = false;
  auto* cmd_hasse = app.add_subcommand("hasse", "Hasse diagram as Graphviz DOT");
  cmd_hasse->add_option("--lattice", lattice)->required()->check(CLI::IsMember(lattices));
  cmd_hasse->add_option("--n", n)->required();
  cmd_hasse->add_flag("--mark-image", mark_image, "Highlight the image of T_n inside S_n");

  std::string kind;
  VerifyOptions opt;
  std::uint64_t samples = 0;
  auto* cmd_verify = app.add_subcommand("verify", "Run a verification and print its JSON report");
  cmd_verify->add_option("check", kind)
      ->required()
      ->check(CLI::IsMember({"embedding", "height", "semidistributive", "bounded", "roundtrip"}));
  cmd_verify->add_option("--n", n)->required();
  cmd_verify->add_option("--seed", opt.seed);
  auto* samples_opt = cmd_verify->add_option("--samples", samples, "Random pairs instead of all pairs");
  cmd_verify->add_option("--workers", opt.workers);

  auto* cmd_stats = app.add_subcommand("stats", "Sizes, heights and atom counts");
  cmd_stats->add_option("--n", n)->required();

  std::vector<std::string> argv_storage{"tamari"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_enumerate->parsed()) enumerate(out, lattice, n, format);
    else if (cmd_convert->parsed()) convert(out, from, to, value);
    else if (cmd_op->parsed()) op(out, op_name, lattice, as, lhs, rhs);
    else if (cmd_hasse->parsed()) {
      if (mark_image && lattice != "perm") throw UsageError("--mark-image applies to --lattice perm");
      if (lattice == "perm") print_perm_hasse(out, n, mark_image);
      else print_tamari_hasse(out, n);
    } else if (cmd_verify->parsed()) {
      if (samples_opt->count() > 0) opt.samples = samples;
      return verify(out, err, kind, n, opt);
    } else if (cmd_stats->parsed()) stats(out, n);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace tamari::cli
