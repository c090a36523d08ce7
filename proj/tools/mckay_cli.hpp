// Copyright 2026 The mckay-cyclic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCKAY_TOOLS_MCKAY_CLI_HPP_
#define MCKAY_TOOLS_MCKAY_CLI_HPP_

#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mckay/mckay.hpp"

namespace mckay::cli {

using Json = nlohmann::ordered_json;

enum class Command { kExpand, kSpecials, kDigits, kCollection, kExtTable, kVerify, kSweep };
enum class Format { kTable, kJson, kTsv };

inline constexpr const char* kFormatEnv = "MCKAY_FORMAT";

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;

struct RunConfig {
  Command command = Command::kExpand;
  Int n = 0;
  Int q = 0;
  Int n_max = 0;
  bool oracle = false;
  Format format = Format::kTable;
  std::optional<std::string> output_path;
  int jobs = 1;
};

inline std::optional<Format> parse_format(const std::string& s) {
  if (s == "table") return Format::kTable;
  if (s == "json") return Format::kJson;
  if (s == "tsv") return Format::kTsv;
  return std::nullopt;
}

namespace detail {

inline std::vector<Int> char_values(const std::vector<CharIndex>& chars) {
  std::vector<Int> out;
  out.reserve(chars.size());
  for (const auto c : chars) out.push_back(c.value());
  return out;
}

template <typename T>
std::string join(const std::vector<T>& xs, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) os << sep;
    os << xs[k];
  }
  return os.str();
}

inline std::string type_name(const HjExpansion& e) {
  return "1/" + std::to_string(e.n()) + "(1," + std::to_string(e.q()) + ")";
}

inline Json base_json(const HjExpansion& e) {
  Json j;
  j["n"] = e.n();
  j["q"] = e.q();
  j["b"] = e.b;
  j["i"] = e.i;
  j["j"] = e.j;
  j["q_prime"] = e.q_prime;
  j["specials"] = char_values(specials_of(e));
  return j;
}

inline Json collection_json(const std::vector<ExceptionalObject>& coll) {
  Json arr = Json::array();
  for (const auto& obj : coll) {
    arr.push_back(Json{{"d", obj.d.value()},
                       {"level", obj.level},
                       {"length", obj.length},
                       {"twist", obj.twist.value()},
                       {"chars", char_values(obj.chars)}});
  }
  return arr;
}

inline Json checks_json(const Report& report) {
  Json arr = Json::array();
  for (const auto& c : report.checks()) {
    arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return arr;
}

struct ExtRow {
  CharIndex d, d_prime;
  ExtDims dims;
  std::optional<bool> oracle_agrees;
};

inline std::vector<ExtRow> ext_rows(const HjExpansion& e, bool oracle) {
  std::vector<ExtRow> rows;
  const auto ns = non_specials_of(e);
  for (const auto d : ns) {
    for (const auto dp : ns) {
      ExtRow row{d, dp, ext_dims_pair(e, d, dp), std::nullopt};
      if (oracle) row.oracle_agrees = oracle_ext_dims(e, d, dp) == row.dims;
      rows.push_back(row);
    }
  }
  return rows;
}

inline void emit_expand(const HjExpansion& e, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::kJson:
      out << base_json(e).dump(2) << "\n";
      return;
    case Format::kTsv:
      out << "t\tb\ti\tj\n";
      for (Int t = 0; t <= e.r + 1; ++t) {
        out << t << "\t" << (t >= 1 && t <= e.r ? std::to_string(e.b_at(t)) : "") << "\t"
            << e.i_at(t) << "\t" << e.j_at(t) << "\n";
      }
      return;
    case Format::kTable:
      out << type_name(e) << "  r=" << e.r << "  q'=" << e.q_prime << "\n";
      out << std::setw(4) << "t" << std::setw(6) << "b_t" << std::setw(8) << "i_t"
          << std::setw(8) << "j_t" << "\n";
      for (Int t = 0; t <= e.r + 1; ++t) {
        out << std::setw(4) << t << std::setw(6)
            << (t >= 1 && t <= e.r ? std::to_string(e.b_at(t)) : "-") << std::setw(8)
            << e.i_at(t) << std::setw(8) << e.j_at(t) << "\n";
      }
      return;
  }
}

inline void emit_specials(const HjExpansion& e, Format fmt, std::ostream& out) {
  const auto specials = char_values(specials_of(e));
  const auto non_specials = char_values(non_specials_of(e));
  switch (fmt) {
    case Format::kJson: {
      auto j = base_json(e);
      j["non_specials"] = non_specials;
      out << j.dump(2) << "\n";
      return;
    }
    case Format::kTsv: {
      out << "character\tspecial\n";
      const auto mask = special_mask(e);
      for (Int a = 0; a < e.n(); ++a) {
        out << a << "\t" << (mask[static_cast<std::size_t>(a)] ? "true" : "false") << "\n";
      }
      return;
    }
    case Format::kTable:
      out << type_name(e) << ": " << specials.size() << " special, " << non_specials.size()
          << " non-special\n";
      out << "special:     " << join(specials, " ") << "\n";
      out << "non-special: " << join(non_specials, " ") << "\n";
      return;
  }
}

inline void emit_digits(const HjExpansion& e, Format fmt, std::ostream& out) {
  const auto mask = special_mask(e);
  std::vector<DigitVector> rows;
  for (Int d = 0; d < e.n(); ++d) rows.push_back(digits_of(e, CharIndex::of(d, e.n())));
  switch (fmt) {
    case Format::kJson: {
      auto j = base_json(e);
      Json arr = Json::array();
      for (const auto& dv : rows) {
        arr.push_back(Json{{"d", dv.d.value()},
                           {"digits", dv.digits},
                           {"f", dv.f},
                           {"special", static_cast<bool>(mask[static_cast<std::size_t>(dv.d.value())])}});
      }
      j["digits"] = arr;
      out << j.dump(2) << "\n";
      return;
    }
    case Format::kTsv:
      out << "d\tdigits\tf\tspecial\n";
      for (const auto& dv : rows) {
        out << dv.d.value() << "\t" << join(dv.digits, ",") << "\t" << dv.f << "\t"
            << (mask[static_cast<std::size_t>(dv.d.value())] ? "true" : "false") << "\n";
      }
      return;
    case Format::kTable:
      out << type_name(e) << ": d = sum d_t i_t, f = sum d_t j_t\n";
      out << std::setw(6) << "d" << "  " << std::left << std::setw(std::max<int>(8, static_cast<int>(2 * e.r + 2)))
          << "digits" << std::right << std::setw(6) << "f" << "  special\n";
      for (const auto& dv : rows) {
        out << std::setw(6) << dv.d.value() << "  " << std::left
            << std::setw(std::max<int>(8, static_cast<int>(2 * e.r + 2))) << join(dv.digits, ",")
            << std::right << std::setw(6) << dv.f << "  "
            << (mask[static_cast<std::size_t>(dv.d.value())] ? "yes" : "no") << "\n";
      }
      return;
  }
}

inline void emit_collection(const HjExpansion& e, Format fmt, std::ostream& out) {
  const auto coll = build_collection(e);
  switch (fmt) {
    case Format::kJson: {
      auto j = base_json(e);
      j["collection"] = collection_json(coll);
      out << j.dump(2) << "\n";
      return;
    }
    case Format::kTsv:
      out << "d\tlevel\tlength\ttwist\tchars\n";
      for (const auto& obj : coll) {
        out << obj.d.value() << "\t" << obj.level << "\t" << obj.length << "\t"
            << obj.twist.value() << "\t" << join(char_values(obj.chars), ",") << "\n";
      }
      return;
    case Format::kTable:
      out << type_name(e) << ": " << coll.size() << " objects\n";
      for (const auto& obj : coll) {
        out << "  E_" << obj.d.value() << " = R_" << obj.length << " (x) rho_"
            << obj.twist.value() << "   level " << obj.level << ", chars "
            << join(char_values(obj.chars), ",") << "\n";
      }
      return;
  }
}

// Returns false if the oracle disagrees with the formula on any row.
inline bool emit_ext_table(const HjExpansion& e, bool oracle, Format fmt, std::ostream& out) {
  const auto rows = ext_rows(e, oracle);
  bool agree = true;
  for (const auto& r : rows) agree = agree && r.oracle_agrees.value_or(true);
  switch (fmt) {
    case Format::kJson: {
      auto j = base_json(e);
      j["collection"] = collection_json(build_collection(e));
      Json arr = Json::array();
      for (const auto& row : rows) {
        Json rj{{"d", row.d.value()},
                {"d_prime", row.d_prime.value()},
                {"hom", row.dims.hom},
                {"ext1", row.dims.ext1},
                {"ext2", row.dims.ext2}};
        if (row.oracle_agrees) rj["oracle_agrees"] = *row.oracle_agrees;
        arr.push_back(rj);
      }
      j["ext_table"] = arr;
      out << j.dump(2) << "\n";
      return agree;
    }
    case Format::kTsv:
      out << "d\td_prime\thom\text1\text2" << (oracle ? "\toracle_agrees" : "") << "\n";
      for (const auto& row : rows) {
        out << row.d.value() << "\t" << row.d_prime.value() << "\t" << row.dims.hom << "\t"
            << row.dims.ext1 << "\t" << row.dims.ext2;
        if (row.oracle_agrees) out << "\t" << (*row.oracle_agrees ? "true" : "false");
        out << "\n";
      }
      return agree;
    case Format::kTable:
      out << type_name(e) << ": (hom, ext1, ext2) from E_d to E_d'\n";
      out << std::setw(6) << "d" << std::setw(6) << "d'" << std::setw(6) << "hom"
          << std::setw(6) << "ext1" << std::setw(6) << "ext2" << (oracle ? "  oracle" : "") << "\n";
      for (const auto& row : rows) {
        out << std::setw(6) << row.d.value() << std::setw(6) << row.d_prime.value()
            << std::setw(6) << row.dims.hom << std::setw(6) << row.dims.ext1 << std::setw(6)
            << row.dims.ext2;
        if (row.oracle_agrees) out << "  " << (*row.oracle_agrees ? "agrees" : "DIFFERS");
        out << "\n";
      }
      return agree;
  }
  return agree;
}

inline int emit_verify(const HjExpansion& e, bool oracle, Format fmt, std::ostream& out) {
  const auto report = verify_instance(e, oracle);
  switch (fmt) {
    case Format::kJson: {
      auto j = base_json(e);
      j["collection"] = collection_json(build_collection(e));
      j["checks"] = checks_json(report);
      out << j.dump(2) << "\n";
      break;
    }
    case Format::kTsv:
      out << "name\tpass\tdetail\n";
      for (const auto& c : report.checks()) {
        out << c.name << "\t" << (c.pass ? "true" : "false") << "\t" << c.detail << "\n";
      }
      break;
    case Format::kTable:
      out << "verify " << type_name(e) << (oracle ? " (with oracle)" : "") << "\n";
      for (const auto& c : report.checks()) {
        out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.pass) out << ": " << c.detail;
        out << "\n";
      }
      out << "result: " << (report.passed() ? "PASS" : "FAIL") << " (" << report.checks().size()
          << " checks)\n";
      break;
  }
  return report.passed() ? kExitOk : kExitFailure;
}

inline int emit_sweep(Int n_max, bool oracle, int jobs, Format fmt, std::ostream& out) {
  std::vector<std::pair<Int, Int>> pairs;
  for (Int n = 2; n <= n_max; ++n) {
    for (Int q = 1; q < n; ++q) {
      if (std::gcd(n, q) == 1) pairs.emplace_back(n, q);
    }
  }
  if (fmt == Format::kTsv) out << "n\tq\tpass\tfailed\n";

  std::size_t failed = 0;
  const auto batch = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t start = 0; start < pairs.size(); start += batch) {
    const std::size_t stop = std::min(pairs.size(), start + batch);
    std::vector<std::future<Report>> pending;
    for (std::size_t k = start; k < stop; ++k) {
      const auto [n, q] = pairs[k];
      pending.push_back(std::async(batch > 1 ? std::launch::async : std::launch::deferred,
                                   [n, q, oracle] { return verify_instance(expand(n, q), oracle); }));
    }
    for (std::size_t k = start; k < stop; ++k) {
      const auto [n, q] = pairs[k];
      const auto report = pending[k - start].get();
      std::vector<std::string> names;
      std::string first_detail;
      for (const auto& c : report.checks()) {
        if (c.pass) continue;
        names.push_back(c.name);
        if (first_detail.empty()) first_detail = c.detail;
      }
      if (!report.passed()) ++failed;
      switch (fmt) {
        case Format::kJson:
          out << Json{{"n", n}, {"q", q}, {"pass", report.passed()}, {"failed", names}}.dump() << "\n";
          break;
        case Format::kTsv:
          out << n << "\t" << q << "\t" << (report.passed() ? "true" : "false") << "\t"
              << join(names, ",") << "\n";
          break;
        case Format::kTable:
          out << "n=" << n << " q=" << q << " " << (report.passed() ? "PASS" : "FAIL");
          if (!report.passed()) out << " " << join(names, ",") << ": " << first_detail;
          out << "\n";
          break;
      }
      out.flush();
    }
  }
  if (fmt == Format::kJson) {
    out << Json{{"summary", Json{{"n_max", n_max}, {"oracle", oracle},
                                 {"instances", pairs.size()}, {"failed", failed}}}}.dump()
        << "\n";
  } else if (fmt == Format::kTable) {
    out << "sweep n<=" << n_max << (oracle ? " (with oracle)" : "") << ": " << pairs.size()
        << " instances, " << failed << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace detail

/// Executes one command. Invalid input yields exit status 2 with a message
/// on `err`; a failed verification yields 1.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output_path) {
    file.open(*config.output_path);
    if (!file) {
      err << "error: cannot open output file " << *config.output_path << "\n";
      return kExitInvalid;
    }
    sink = &file;
  }
  try {
    if (config.command == Command::kSweep) {
      if (config.n_max < 2) throw InvalidInput("--n-max must be at least 2");
      return detail::emit_sweep(config.n_max, config.oracle, config.jobs, config.format, *sink);
    }
    const auto e = expand(config.n, config.q);
    switch (config.command) {
      case Command::kExpand:
        detail::emit_expand(e, config.format, *sink);
        return kExitOk;
      case Command::kSpecials:
        detail::emit_specials(e, config.format, *sink);
        return kExitOk;
      case Command::kDigits:
        detail::emit_digits(e, config.format, *sink);
        return kExitOk;
      case Command::kCollection:
        detail::emit_collection(e, config.format, *sink);
        return kExitOk;
      case Command::kExtTable:
        return detail::emit_ext_table(e, config.oracle, config.format, *sink) ? kExitOk
                                                                              : kExitFailure;
      case Command::kVerify:
        return detail::emit_verify(e, config.oracle, config.format, *sink);
      case Command::kSweep:
        break;
    }
  } catch (const InvalidInput& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

/// Parses argv into a RunConfig and runs it. The default output format comes
/// from MCKAY_FORMAT when set; --format overrides it.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact McKay-correspondence data for cyclic quotient singularities 1/n(1,q)",
               "mckay"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format_flag;
  std::string output_path;

  struct Spec {
    const char* name;
    Command command;
    const char* help;
  };
  const std::vector<Spec> specs = {
      {"expand", Command::kExpand, "Hirzebruch-Jung data b, i, j, q'"},
      {"specials", Command::kSpecials, "special / non-special characters"},
      {"digits", Command::kDigits, "digit expansion and dual value for every character"},
      {"collection", Command::kCollection, "the exceptional objects E_d"},
      {"ext-table", Command::kExtTable, "(hom, ext1, ext2) for all ordered pairs"},
      {"verify", Command::kVerify, "run every invariant suite for one instance"},
      {"sweep", Command::kSweep, "verify all coprime (n, q) with n <= n-max"},
  };
  for (const auto& spec : specs) {
    auto* sub = app.add_subcommand(spec.name, spec.help);
    if (spec.command == Command::kSweep) {
      sub->add_option("--n-max", config.n_max, "largest group order")->required();
      sub->add_option("--jobs,-j", config.jobs, "worker threads")->check(CLI::PositiveNumber);
    } else {
      sub->add_option("--n", config.n, "group order")->required();
      sub->add_option("--q", config.q, "weight of the second coordinate")->required();
    }
    sub->add_flag("--oracle", config.oracle, "cross-check Ext dimensions with the elimination oracle");
    sub->add_option("--format", format_flag, "table, json or tsv");
    sub->add_option("--output,-o", output_path, "write the report to a file");
    const auto command = spec.command;
    sub->callback([&config, command] { config.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << ex.what() << "\n";
    return kExitInvalid;
  }

  std::string format_name = format_flag;
  if (format_name.empty()) {
    if (const char* env = std::getenv(kFormatEnv)) format_name = env;
  }
  if (!format_name.empty()) {
    const auto fmt = parse_format(format_name);
    if (!fmt) {
      err << "error: unknown format '" << format_name << "' (expected table, json or tsv)\n";
      return kExitInvalid;
    }
    config.format = *fmt;
  }
  if (!output_path.empty()) config.output_path = output_path;
  return run(config, out, err);
}

}  // namespace mckay::cli

#endif  // MCKAY_TOOLS_MCKAY_CLI_HPP_
