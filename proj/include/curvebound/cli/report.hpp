#pragma once

// Report assembly and serialization shared by the command-line tool.

#include "curvebound/exact.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace curvebound::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchemaVersion = "1.0";

/// Verdict strings that count as success for the exit status.
inline bool is_passing_verdict(std::string_view v) { return v == "holds" || v == "agrees"; }

/// Incremental SHA-256 over the inputs a report depends on.
class InputDigest {
public:
  InputDigest() : ctx_(EVP_MD_CTX_new(), EVP_MD_CTX_free)
  {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1)
      throw Error("SHA-256 initialisation failed");
  }

  /// Adds a length-prefixed field so that ("ab","c") and ("a","bc") differ.
  InputDigest &add(std::string_view field)
  {
    const std::string len = std::to_string(field.size()) + ":";
    update(len);
    update(field);
    return *this;
  }

  std::string hex()
  {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int n = 0;
    if (EVP_DigestFinal_ex(ctx_.get(), md.data(), &n) != 1)
      throw Error("SHA-256 finalisation failed");
    std::string out = "sha256:";
    char buf[3];
    for (unsigned int i = 0; i < n; ++i) {
      std::snprintf(buf, sizeof buf, "%02x", md[i]);
      out += buf;
    }
    return out;
  }

private:
  void update(std::string_view s)
  {
    if (EVP_DigestUpdate(ctx_.get(), s.data(), s.size()) != 1)
      throw Error("SHA-256 update failed");
  }

  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

struct Report {
  std::string command;
  std::string input_digest;
  std::vector<Json> rows;     // flat objects; values are strings, integers or booleans
  std::vector<Json> verdicts; // objects with at least "check" and "verdict"

  void add_verdict(std::string check, bool ok, std::string value = {}, std::string expected = {},
                   const char *pass = "holds", const char *fail = "fails")
  {
    Json v;
    v["check"] = std::move(check);
    if (!value.empty())
      v["value"] = std::move(value);
    if (!expected.empty())
      v["expected"] = std::move(expected);
    v["verdict"] = ok ? pass : fail;
    verdicts.push_back(std::move(v));
  }

  bool all_pass() const
  {
    for (const auto &v : verdicts)
      if (!is_passing_verdict(v.at("verdict").get<std::string>()))
        return false;
    return true;
  }

  Json to_json() const
  {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["rows"] = rows;
    j["verdicts"] = verdicts;
    std::size_t passed = 0;
    for (const auto &v : verdicts)
      passed += is_passing_verdict(v.at("verdict").get<std::string>());
    Json s;
    s["checks"] = verdicts.size();
    s["passed"] = passed;
    s["failed"] = verdicts.size() - passed;
    s["status"] = passed == verdicts.size() ? "pass" : "fail";
    j["summary"] = s;
    return j;
  }
};

inline std::string to_json_text(const Report &r) { return r.to_json().dump(2) + "\n"; }

namespace detail {

inline std::string scalar_text(const Json &v)
{
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_boolean())
    return v.get<bool>() ? "true" : "false";
  if (v.is_null())
    return "";
  return v.dump();
}

} // namespace detail

/// One field quoted per RFC 4180: wrapped in double quotes, with inner
/// quotes doubled, when it contains a comma, quote, CR or LF.
inline std::string csv_field(std::string_view s)
{
  if (s.find_first_of(",\"\r\n") == std::string_view::npos)
    return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

/// Column order: keys in order of first appearance across the objects.
inline std::vector<std::string> csv_columns(const std::vector<Json> &objects)
{
  std::vector<std::string> cols;
  std::set<std::string> seen;
  for (const auto &o : objects)
    for (const auto &[k, v] : o.items())
      if (seen.insert(k).second)
        cols.push_back(k);
  return cols;
}

/// The rows as CSV with CRLF line endings, followed by a blank line and the
/// verdict table.
inline std::string to_csv(const Report &r)
{
  std::ostringstream out;
  auto table = [&](const std::vector<Json> &objs) {
    auto cols = csv_columns(objs);
    for (std::size_t i = 0; i < cols.size(); ++i)
      out << (i ? "," : "") << csv_field(cols[i]);
    out << "\r\n";
    for (const auto &o : objs) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        out << (i ? "," : "");
        if (o.contains(cols[i]))
          out << csv_field(detail::scalar_text(o.at(cols[i])));
      }
      out << "\r\n";
    }
  };
  table(r.rows);
  out << "\r\n";
  table(r.verdicts);
  return out.str();
}

inline std::string to_text(const Report &r)
{
  std::ostringstream out;
  out << "# " << r.command << "\n# input " << r.input_digest << "\n";
  for (const auto &o : r.rows) {
    bool first = true;
    for (const auto &[k, v] : o.items()) {
      out << (first ? "" : "  ") << k << "=" << detail::scalar_text(v);
      first = false;
    }
    out << "\n";
  }
  if (!r.verdicts.empty())
    out << "--\n";
  for (const auto &v : r.verdicts) {
    out << v.at("verdict").get<std::string>() << "  " << v.at("check").get<std::string>();
    if (v.contains("value"))
      out << "  value=" << v.at("value").get<std::string>();
    if (v.contains("expected"))
      out << "  expected=" << v.at("expected").get<std::string>();
    out << "\n";
  }
  return out.str();
}

enum class Format { Text, Json, Csv };

inline Format parse_format(std::string_view s)
{
  if (s == "text")
    return Format::Text;
  if (s == "json")
    return Format::Json;
  if (s == "csv")
    return Format::Csv;
  throw Error("unknown format '" + std::string(s) + "' (expected text, json or csv)");
}

inline std::string render(const Report &r, Format f)
{
  switch (f) {
  case Format::Text: return to_text(r);
  case Format::Json: return to_json_text(r);
  case Format::Csv: return to_csv(r);
  }
  return {};
}

} // namespace curvebound::cli
