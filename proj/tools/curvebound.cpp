#include "curvebound/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

using namespace curvebound;
using namespace curvebound::cli;

namespace {

std::string echo(int argc, char **argv)
{
  std::string s = "curvebound";
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a.find_first_of(" \t\"") != std::string::npos) {
      std::string q = "\"";
      for (char c : a)
        q += c == '"' ? std::string("\\\"") : std::string(1, c);
      a = q + "\"";
    }
    s += " " + a;
  }
  return s;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Reproduction suites for automorphism-group bounds of ordinary curves"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  auto *en = app.add_subcommand("enumerate", "Case-(iii) candidates of a sporadic group");
  std::string group;
  std::uint64_t chr = 0;
  en->add_option("--group", group, "alt7 or m11")->required();
  en->add_option("--char", chr, "characteristic p")->required();
  en->add_option("--format", format, "Output format: text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto *ga = app.add_subcommand("group-audit", "Certify a sporadic group from its generator file");
  std::string audit_group, file;
  ga->add_option("name", audit_group, "alt7 or m11")->required();
  ga->add_option("--file", file, "generator file (default: the shipped one)");
  ga->add_option("--format", format, "Output format: text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto *bd = app.add_subcommand("bounds", "Audit the bound chains");
  std::string chain;
  std::string order_text, genus_text;
  bd->add_option("chain", chain, "all, or one of: " + [] {
    std::string s;
    for (const auto &id : bounds::chain_ids())
      s += (s.empty() ? "" : ", ") + id;
    return s;
  }())->required();
  bd->add_option("--order", order_text, "group order to classify");
  bd->add_option("--genus", genus_text, "genus to classify");
  bd->add_option("--format", format, "Output format: text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  auto *pr = app.add_subcommand("prank", "p-rank of y^m = f(x) over F_p");
  std::uint64_t p = 0;
  std::string curve;
  bool oracle = false;
  pr->add_option("--p", p, "odd prime")->required();
  pr->add_option("--curve", curve, "model, e.g. \"y^2 = x^5 - x\"")->required();
  pr->add_flag("--oracle", oracle, "also run the point-count oracle");
  pr->add_option("--format", format, "Output format: text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command = echo(argc, argv);
  try {
    Report r;
    if (*en) {
      r = cmd_enumerate(group, chr, command);
    } else if (*ga) {
      r = cmd_group_audit(audit_group, file, command);
    } else if (*bd) {
      std::optional<BigInt> order, genus;
      auto parse_int = [](const std::string &s, const char *what) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
          throw UsageError(std::string(what) + " must be a non-negative integer");
        return BigInt(s);
      };
      if (!order_text.empty())
        order = parse_int(order_text, "--order");
      if (!genus_text.empty())
        genus = parse_int(genus_text, "--genus");
      r = cmd_bounds(chain, order, genus, command);
    } else if (*pr) {
      r = cmd_prank(curve, p, oracle, command);
    }
    std::cout << render(r, parse_format(format));
    return r.all_pass() ? kExitPass : kExitFail;
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
