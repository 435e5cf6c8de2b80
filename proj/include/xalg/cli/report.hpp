/*
   Copyright 2026 The xalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef XALG_CLI_REPORT_HPP
#define XALG_CLI_REPORT_HPP

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "xalg/error.hpp"
#include "xalg/xmod.hpp"

namespace xalg::cli {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::size_t> witness;
};

/// One block of a report: a titled list of verdicts plus object summaries.
struct Section {
  std::string id;
  std::string description;
  std::vector<Check> checks;
  Json objects = Json::object();
  std::optional<double> elapsed_ms;

  void check(std::string name, bool passed, std::string detail = {}, std::vector<std::size_t> witness = {});
  void object(const std::string& key, Json value) { objects[key] = std::move(value); }
  bool passed() const;
};

/// Ordered, deterministic report. Field order is insertion order.
class Report {
 public:
  Report(std::string command, std::vector<std::string> args);

  /// Returned references stay valid for the lifetime of the report.
  Section& section(std::string id, std::string description);
  void option(const std::string& key, Json value) { options_[key] = std::move(value); }
  void set_error(const Error& error);

  bool passed() const;
  const std::optional<Json>& error() const noexcept { return error_; }
  Json to_json() const;
  std::string to_text() const;

 private:
  std::string command_;
  std::vector<std::string> args_;
  Json options_ = Json::object();
  std::deque<Section> sections_;
  std::optional<Json> error_;
};

Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json summarize(const Algebra& a);
Json summarize(const CrossedModule& xm);

}  // namespace xalg::cli

#endif  // XALG_CLI_REPORT_HPP
