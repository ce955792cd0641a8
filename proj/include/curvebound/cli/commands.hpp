#pragma once

#include "curvebound/bounds.hpp"
#include "curvebound/classical.hpp"
#include "curvebound/cli/report.hpp"
#include "curvebound/permgroup.hpp"
#include "curvebound/prank.hpp"
#include "curvebound/ramification.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace curvebound::cli {

/// Bad invocation (unknown group, unsupported prime, unknown chain, ...).
class UsageError : public Error {
public:
  using Error::Error;
};

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitInput = 3 };

namespace detail {

inline std::string read_file(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline classical::Family sporadic_family(const std::string &name)
{
  classical::Family f;
  try {
    f = classical::parse_family(name);
  } catch (const Error &) {
    throw UsageError("unknown group '" + name + "' (expected alt7 or m11)");
  }
  if (!classical::is_sporadic(f))
    throw UsageError("group '" + name + "' is not supported here (expected alt7 or m11)");
  return f;
}

inline std::string lower(std::string_view s)
{
  std::string out(s);
  for (char &c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

template <class Range> std::string join(const Range &r, const char *sep = ",")
{
  std::string out;
  for (const auto &v : r) {
    if (!out.empty())
      out += sep;
    if constexpr (std::is_convertible_v<decltype(v), std::string>)
      out += v;
    else
      out += to_string(BigInt(v));
  }
  return out;
}

inline std::string sylow_type(const perm::PermGroup &P, std::uint64_t p)
{
  const std::string order = P.order().str();
  if (P.is_trivial())
    return "trivial";
  if (perm::is_cyclic(P))
    return "cyclic of order " + order;
  if (perm::is_elementary_abelian(P, p))
    return "elementary abelian of order " + order;
  if (perm::is_abelian(P))
    return "abelian of order " + order;
  return "non-abelian of order " + order;
}

} // namespace detail

/// Case-(iii) candidates of a sporadic group at one characteristic, with
/// the case-(i)/(ii) coefficient as the single verdict.
inline Report cmd_enumerate(const std::string &group, std::uint64_t p, const std::string &command = {})
{
  const auto f = detail::sporadic_family(group);
  if (p < 3 || !is_prime(p))
    throw UsageError("characteristic must be an odd prime, got " + std::to_string(p));
  const auto primes = classical::supported_primes(f);
  if (!primes.count(p))
    throw UsageError("characteristic " + std::to_string(p) + " does not divide |" + group + "|; supported: " +
                     detail::join(primes));
  const std::string path = classical::default_generator_file(f);
  const std::string name = detail::lower(classical::family_name(f));

  Report r;
  r.command = command.empty() ? "enumerate --group " + name + " --char " + std::to_string(p) : command;
  r.input_digest = InputDigest().add("enumerate").add(name).add(std::to_string(p)).add(detail::read_file(path)).hex();

  const auto facts = classical::sporadic_facts(f, p, path);
  for (const auto &c : ram::enumerate_case_iii(facts)) {
    Json row;
    row["anchor"] = name + "/p=" + std::to_string(p) + "/case-iii";
    row["e1"] = c.signature.points[0].e;
    row["d1"] = c.signature.points[0].d;
    row["q1"] = c.wild.q1;
    row["E1"] = c.wild.E1;
    row["e2"] = c.e2;
    row["g"] = c.g.str();
    row["g_minus_1"] = BigInt(c.g - 1).str();
    row["even_genus"] = c.passes_parity;
    row["order_exceeds_84(g-1)"] = c.passes_hurwitz_filter;
    row["E1_at_least_2"] = c.passes_e1_filter;
    row["status"] = c.survives() ? "survives" : "filtered";
    r.rows.push_back(std::move(row));
  }
  const Rational coeff = ram::case_i_ii_coefficient(facts);
  const auto arg = ram::case_i_ii_argmax(facts);
  r.add_verdict("case (i)/(ii): max 2*E1*q1/(q1-2) < 84 (attained at q1=" + std::to_string(arg.q1) +
                    ", E1=" + std::to_string(arg.E1) + ")",
                coeff < 84, to_string(coeff), "< 84");
  return r;
}

/// Certifies a sporadic group from its generator file.
inline Report cmd_group_audit(const std::string &group, const std::string &file = {}, const std::string &command = {})
{
  const auto f = detail::sporadic_family(group);
  const std::string name = detail::lower(classical::family_name(f));
  const std::string path = file.empty() ? classical::default_generator_file(f) : file;

  Report r;
  r.command = command.empty() ? "group-audit " + name + (file.empty() ? "" : " --file " + file) : command;
  r.input_digest = InputDigest().add("group-audit").add(name).add(detail::read_file(path)).hex();

  const perm::PermGroup G = classical::load_sporadic(f, path);
  const BigInt expected = classical::family_order(classical::FamilySpec::sporadic(f));
  auto fact = [&](const std::string &property, std::optional<std::uint64_t> p, Json value) {
    Json row;
    row["anchor"] = name + (p ? "/p=" + std::to_string(*p) : "") + "/" + property;
    row["property"] = property;
    row["p"] = p ? Json(*p) : Json("");
    row["value"] = std::move(value);
    r.rows.push_back(std::move(row));
  };
  fact("degree", std::nullopt, G.degree());
  fact("order", std::nullopt, G.order().str());
  r.add_verdict("order (base and strong generating set)", G.order() == expected, G.order().str(), expected.str());
  if (G.order() != expected)
    return r; // the remaining facts describe some other group

  fact("element_orders", std::nullopt, detail::join(perm::element_order_set(G)));
  fact("simple", std::nullopt, perm::is_simple(G));
  std::uint64_t best = 0;
  std::optional<perm::PermGroup> sylow3;
  std::optional<BigInt> n3, count3;
  std::optional<BigInt> n7;
  for (const auto &[p, e] : factorize(G.order_u64())) {
    perm::PermGroup P = perm::sylow_subgroup(G, p);
    perm::PermGroup N = perm::normalizer(G, P);
    const BigInt count = G.order() / N.order();
    fact("sylow_type", p, detail::sylow_type(P, p));
    fact("sylow_normalizer_order", p, N.order().str());
    fact("sylow_count", p, count.str());
    if (p == 3) {
      sylow3 = P;
      n3 = N.order();
      count3 = count;
    }
    if (p == 7)
      n7 = N.order();
    if (p > 2) {
      std::uint64_t v = perm::max_solvable_with_cyclic_complement(G, p);
      fact("max_solvable_with_cyclic_complement", p, v);
      best = std::max(best, v);
    }
  }
  fact("max_solvable_with_cyclic_complement_over_p", std::nullopt, best);

  if (f == classical::Family::M11) {
    r.add_verdict("N(Sylow-3) order", n3 && *n3 == 144, n3 ? n3->str() : "", "144");
    r.add_verdict("number of Sylow 3-subgroups", count3 && *count3 == 55, count3 ? count3->str() : "", "55");
    const bool ea = sylow3 && sylow3->order() == 9 && perm::is_elementary_abelian(*sylow3, 3);
    r.add_verdict("Sylow-3 elementary abelian of order 9", ea, sylow3 ? detail::sylow_type(*sylow3, 3) : "",
                  "elementary abelian of order 9");
  } else {
    r.add_verdict("N(Sylow-7) order", n7 && *n7 == 21, n7 ? n7->str() : "", "21");
    r.add_verdict("max solvable subgroup Q x| C, C cyclic (max over p)", best == 36, std::to_string(best), "36");
  }
  return r;
}

namespace detail {

inline std::string check_mark(const bounds::PointCheck &c) { return c.undecided ? "undecided" : (c.holds ? "holds" : "fails"); }

inline Json audit_row(const bounds::Step &s, const bounds::AuditReport &a)
{
  Json row;
  row["anchor"] = s.chain + "/" + s.id;
  row["id"] = s.id;
  row["chain"] = s.chain;
  row["constant"] = s.constant;
  row["statement"] = a.statement;
  row["threshold"] = a.threshold ? a.threshold->str() : "";
  row["threshold_derived"] = s.threshold_derived;
  const char *labels[] = {"at_threshold_minus_1", "at_threshold", "at_threshold_plus_1"};
  for (std::size_t i = 0; i < 3; ++i)
    row[labels[i]] = "";
  if (a.threshold) {
    for (const auto &c : a.threshold_checks) {
      BigInt off = c.g - *a.threshold;
      if (off >= -1 && off <= 1)
        row[labels[static_cast<int>(off) + 1]] = check_mark(c);
    }
  }
  row["range"] = a.range_hi > 0 ? "[" + a.range_lo.str() + ", " + a.range_hi.str() + "]" : "";
  row["method"] = a.method;
  row["tail"] = bounds::tail_name(a.tail);
  row["tail_note"] = a.tail_note;
  row["verdict"] = bounds::verdict_name(a.verdict);
  row["witness"] = a.witness ? a.witness->str() : "";
  row["note"] = s.note;
  return row;
}

} // namespace detail

/// Audits a bound chain ("all" for every chain); with an order and a genus,
/// also classifies (|G|, g) against each bound.
inline Report cmd_bounds(const std::string &chain, const std::optional<BigInt> &order = {},
                         const std::optional<BigInt> &genus = {}, const std::string &command = {})
{
  if (order.has_value() != genus.has_value())
    throw UsageError("--order and --genus must be given together");
  std::vector<bounds::Step> steps;
  if (chain == "all") {
    steps = bounds::all_steps();
  } else {
    const auto &ids = bounds::chain_ids();
    if (std::find(ids.begin(), ids.end(), chain) == ids.end())
      throw UsageError("unknown chain '" + chain + "' (expected all or one of " + detail::join(ids, ", ") + ")");
    steps = bounds::chain_steps(chain);
  }
  Report r;
  r.command = command.empty() ? "bounds " + chain : command;
  InputDigest digest;
  digest.add("bounds").add(chain);
  for (const auto &s : steps)
    digest.add(s.id).add(s.statement());
  if (order)
    digest.add(order->str()).add(genus->str());
  r.input_digest = digest.hex();

  for (const auto &s : steps) {
    auto a = bounds::audit_step(s);
    r.rows.push_back(detail::audit_row(s, a));
    r.add_verdict(s.id, a.verdict == bounds::Verdict::Holds, bounds::verdict_name(a.verdict), "holds", "holds",
                  a.verdict == bounds::Verdict::HoldsOnRange ? "holds-on-range" : "fails");
  }
  if (order) {
    if (*order < 1 || *genus < 2)
      throw UsageError("--order must be positive and --genus at least 2");
    for (auto l : bounds::all_labels()) {
      const bool ok = bounds::satisfies(l, *order, *genus);
      Json row;
      row["anchor"] = "classify/" + std::string(bounds::label_name(l));
      row["id"] = std::string("classify.") + bounds::label_name(l);
      row["statement"] = bounds::label_bound(l);
      row["order"] = order->str();
      row["genus"] = genus->str();
      row["verdict"] = ok ? "holds" : "fails";
      r.rows.push_back(std::move(row));
      r.add_verdict("|G| = " + order->str() + ", g = " + genus->str() + ": " + bounds::label_bound(l), ok);
    }
  }
  return r;
}

namespace detail {

inline std::string matrix_text(const prank::FpMatrix &M)
{
  std::string s = "[";
  for (std::size_t i = 0; i < M.size(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < M[i].size(); ++j)
      s += (j ? " " : "") + std::to_string(M[i][j]);
  }
  return s + "]";
}

} // namespace detail

/// Genus, Cartier matrix and p-rank of y^m = f(x) over F_p; with the
/// oracle, also the point-count value and an agreement verdict.
inline Report cmd_prank(const std::string &curve, std::uint64_t p, bool oracle, const std::string &command = {})
{
  if (p < 3 || p >= (1u << 31) || !is_prime(p))
    throw UsageError("--p must be an odd prime below 2^31, got " + std::to_string(p));
  Report r;
  r.command = command.empty() ? "prank --p " + std::to_string(p) + " --curve \"" + curve + "\"" + (oracle ? " --oracle" : "")
                              : command;
  r.input_digest = InputDigest().add("prank").add(curve).add(std::to_string(p)).add(oracle ? "oracle" : "").hex();

  const prank::CurveModel c = prank::parse_curve(curve, static_cast<prank::Fp>(p));
  const auto g = prank::genus_of_model(c);
  const auto M = prank::cartier_matrix(c);
  const auto gamma = prank::stable_rank(M);
  auto add = [&](const std::string &property, Json value) {
    Json row;
    row["anchor"] = "prank/p=" + std::to_string(p);
    row["property"] = property;
    row["value"] = std::move(value);
    r.rows.push_back(std::move(row));
  };
  add("model", c.to_string());
  add("genus", g);
  std::vector<std::string> basis;
  for (const auto &b : M.basis)
    basis.push_back(b.to_string());
  add("basis", detail::join(basis, "; "));
  add("cartier_matrix", detail::matrix_text(M.entries));
  add("p_rank", gamma);
  add("ordinary", gamma == g);
  if (oracle) {
    const auto L = prank::l_polynomial(c);
    std::size_t z = prank::zeta_prank_oracle(c);
    add("l_polynomial", detail::join(L));
    add("zeta_p_rank", z);
    r.add_verdict("Cartier p-rank vs point-count oracle", z == gamma, std::to_string(gamma), std::to_string(z),
                  "agrees", "disagrees");
  }
  return r;
}

} // namespace curvebound::cli
