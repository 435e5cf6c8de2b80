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

#include "xalg/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace xalg::cli {

void Section::check(std::string name, bool passed, std::string detail, std::vector<std::size_t> witness) {
  checks.push_back(Check{std::move(name), passed, std::move(detail), std::move(witness)});
}

bool Section::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Report::Report(std::string command, std::vector<std::string> args)
    : command_(std::move(command)), args_(std::move(args)) {}

Section& Report::section(std::string id, std::string description) {
  sections_.push_back(Section{std::move(id), std::move(description), {}, Json::object(), std::nullopt});
  return sections_.back();
}

void Report::set_error(const Error& error) {
  Json e = Json::object();
  e["kind"] = std::string(to_string(error.kind()));
  e["message"] = error.what();
  e["witness"] = error.witness();
  error_ = std::move(e);
}

bool Report::passed() const {
  return !error_ && std::all_of(sections_.begin(), sections_.end(), [](const Section& s) { return s.passed(); });
}

Json Report::to_json() const {
  Json out = Json::object();
  out["command"] = command_;
  out["args"] = args_;
  out["options"] = options_;
  Json sections = Json::array();
  std::size_t total = 0, failed = 0;
  for (const auto& s : sections_) {
    Json js = Json::object();
    js["id"] = s.id;
    js["description"] = s.description;
    js["passed"] = s.passed();
    Json checks = Json::array();
    for (const auto& c : s.checks) {
      Json jc = Json::object();
      jc["name"] = c.name;
      jc["passed"] = c.passed;
      if (!c.detail.empty()) jc["detail"] = c.detail;
      if (!c.witness.empty()) jc["witness"] = c.witness;
      checks.push_back(std::move(jc));
      ++total;
      if (!c.passed) ++failed;
    }
    js["checks"] = std::move(checks);
    if (!s.objects.empty()) js["objects"] = s.objects;
    if (s.elapsed_ms) js["elapsed_ms"] = *s.elapsed_ms;
    sections.push_back(std::move(js));
  }
  out["sections"] = std::move(sections);
  if (error_) out["error"] = *error_;
  Json summary = Json::object();
  summary["checks"] = total;
  summary["failed"] = failed;
  summary["passed"] = passed();
  out["summary"] = std::move(summary);
  return out;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "xalg " << command_;
  for (const auto& a : args_) out << ' ' << a;
  out << '\n';
  std::size_t total = 0, failed = 0;
  for (const auto& s : sections_) {
    out << "\n== " << s.id << '\n';
    if (!s.description.empty()) out << "   " << s.description << '\n';
    for (const auto& c : s.checks) {
      ++total;
      if (!c.passed) ++failed;
      out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
      if (!c.detail.empty()) out << "  (" << c.detail << ')';
      if (!c.witness.empty()) out << "  witness " << Json(c.witness).dump();
      out << '\n';
    }
    for (const auto& [key, value] : s.objects.items()) out << "  " << key << ": " << value.dump() << '\n';
    if (s.elapsed_ms) out << "  elapsed: " << *s.elapsed_ms << " ms\n";
  }
  if (error_) out << "\nerror: " << (*error_)["message"].get<std::string>() << '\n';
  out << "\nresult: " << (passed() ? "PASS" : "FAIL") << " (" << (total - failed) << "/" << total
      << " checks passed)\n";
  return out.str();
}

Json to_json(const Vector& v) { return Json(v); }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

Json summarize(const Algebra& a) {
  Json out = Json::object();
  out["label"] = a.label();
  out["dim"] = a.dim();
  out["unital"] = a.is_unital();
  if (a.unit()) out["unit"] = *a.unit();
  out["zero_multiplication"] = a.has_zero_multiplication();
  return out;
}

Json summarize(const CrossedModule& xm) {
  Json out = Json::object();
  out["label"] = xm.label();
  out["top_dim"] = xm.top().dim();
  out["base_dim"] = xm.base().dim();
  out["boundary"] = to_json(xm.boundary().matrix());
  Json action = Json::array();
  for (std::size_t i = 0; i < xm.base().dim(); ++i) action.push_back(to_json(xm.action().action_matrix(xm.base().basis_element(i))));
  out["action"] = std::move(action);
  out["top_zero_multiplication"] = xm.top().has_zero_multiplication();
  return out;
}

}  // namespace xalg::cli
