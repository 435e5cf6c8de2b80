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

#include "xalg/cli/definition.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

#include "xalg/error.hpp"

namespace xalg::cli {
namespace {

template <class T>
const T& lookup(const std::map<std::string, T>& table, const std::string& name, const char* what) {
  auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorKind::DanglingReference, std::string("no ") + what + " named '" + name + "'");
  return it->second;
}

class Loader {
 public:
  explicit Loader(std::string source) : source_(std::move(source)) {}

  DefinitionFile load(const std::string& text) {
    YAML::Node root;
    try {
      root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
      throw Error(ErrorKind::SyntaxError, source_ + ":" + std::to_string(e.mark.line + 1) + ": " + e.msg,
                  {static_cast<std::size_t>(e.mark.line + 1)});
    }
    if (root.IsNull()) return std::move(out_);
    if (!root.IsMap()) throw fail(ErrorKind::SyntaxError, root, "top level must be a mapping");

    static const std::set<std::string> known{"modulus", "algebras", "morphisms", "ideals", "actions", "xmods",
                                             "functions"};
    for (const auto& kv : root) {
      const std::string key = kv.first.as<std::string>();
      if (!known.count(key)) throw fail(ErrorKind::ValidationError, kv.first, "unknown key '" + key + "'");
    }
    if (root["modulus"]) {
      const YAML::Node m = root["modulus"];
      guard(m, "modulus", [&] { out_.field = PrimeField(static_cast<std::uint32_t>(integer(m))); });
    }
    bool has_objects = false;
    for (const char* key : {"algebras", "morphisms", "ideals", "actions", "xmods", "functions"})
      if (root[key] && !root[key].IsNull()) has_objects = true;
    if (has_objects && !out_.field) throw fail(ErrorKind::ValidationError, root, "objects given without a modulus");

    each(root["algebras"], "algebras", [&](const std::string& name, const YAML::Node& n) { algebra(name, n); });
    each(root["morphisms"], "morphisms", [&](const std::string& name, const YAML::Node& n) { morphism(name, n); });
    each(root["ideals"], "ideals", [&](const std::string& name, const YAML::Node& n) { ideal(name, n); });
    each(root["actions"], "actions", [&](const std::string& name, const YAML::Node& n) { action(name, n); });
    each(root["xmods"], "xmods", [&](const std::string& name, const YAML::Node& n) { xmod(name, n); });
    each(root["functions"], "functions", [&](const std::string& name, const YAML::Node& n) { function(name, n); });
    return std::move(out_);
  }

 private:
  std::string where(const YAML::Node& node) const {
    const auto mark = node.Mark();
    return mark.line >= 0 ? source_ + ":" + std::to_string(mark.line + 1) : source_;
  }

  Error fail(ErrorKind kind, const YAML::Node& node, const std::string& message) const {
    const auto mark = node.Mark();
    std::vector<std::size_t> witness;
    if (mark.line >= 0) witness.push_back(static_cast<std::size_t>(mark.line + 1));
    return Error(kind, where(node) + ": " + message, witness);
  }

  /// Runs `body`, rewrapping library errors with the entry's location.
  template <class Body>
  void guard(const YAML::Node& node, const std::string& path, Body&& body) const {
    try {
      body();
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SyntaxError || e.kind() == ErrorKind::DanglingReference) {
        throw Error(e.kind(), where(node) + ": " + path + ": " + e.what(), e.witness());
      }
      if (e.kind() == ErrorKind::ValidationError) throw;
      throw Error(ErrorKind::ValidationError, where(node) + ": " + path + ": " + e.what(), e.witness());
    } catch (const YAML::Exception& e) {
      throw fail(ErrorKind::ValidationError, node, path + ": " + e.msg);
    }
  }

  template <class Body>
  void each(const YAML::Node& section, const std::string& key, Body&& body) {
    if (!section || section.IsNull()) return;
    if (!section.IsMap()) throw fail(ErrorKind::SyntaxError, section, key + " must be a mapping of names");
    for (const auto& kv : section) {
      const std::string name = kv.first.as<std::string>();
      if (!names_.insert(name).second)
        throw fail(ErrorKind::ValidationError, kv.first, "duplicate name '" + name + "'");
      if (!kv.second.IsMap()) throw fail(ErrorKind::SyntaxError, kv.second, key + "." + name + " must be a mapping");
      guard(kv.second, key + "." + name, [&] { body(name, kv.second); });
    }
  }

  const YAML::Node required(const YAML::Node& node, const char* key) const {
    const YAML::Node v = node[key];
    if (!v) throw fail(ErrorKind::ValidationError, node, std::string("missing field '") + key + "'");
    return v;
  }

  std::int64_t integer(const YAML::Node& node) const {
    if (!node.IsScalar()) throw fail(ErrorKind::ValidationError, node, "expected an integer");
    try {
      return node.as<std::int64_t>();
    } catch (const YAML::BadConversion&) {
      throw fail(ErrorKind::ValidationError, node, "expected an integer, got '" + node.Scalar() + "'");
    }
  }

  std::string text(const YAML::Node& node) const {
    if (!node.IsScalar()) throw fail(ErrorKind::ValidationError, node, "expected a name");
    return node.Scalar();
  }

  Vector vector(const YAML::Node& node, std::size_t len) const {
    if (!node.IsSequence()) throw fail(ErrorKind::ValidationError, node, "expected a list of integers");
    if (node.size() != len)
      throw fail(ErrorKind::ValidationError, node,
                 "expected " + std::to_string(len) + " entries, got " + std::to_string(node.size()));
    Vector v;
    for (const auto& x : node) v.push_back(out_.field->reduce(integer(x)));
    return v;
  }

  std::vector<Vector> vectors(const YAML::Node& node, std::size_t len) const {
    if (!node.IsSequence()) throw fail(ErrorKind::ValidationError, node, "expected a list of vectors");
    std::vector<Vector> out;
    for (const auto& v : node) out.push_back(vector(v, len));
    return out;
  }

  std::size_t count(const YAML::Node& node) const {
    const std::int64_t v = integer(node);
    if (v < 0) throw fail(ErrorKind::ValidationError, node, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
  }

  /// Dense `mul[i][j]` or sparse `products: {"i j": v}` (mirrored).
  std::vector<Vector> products(const YAML::Node& node, std::size_t n) const {
    std::vector<Vector> table(n * n, Vector(n, 0));
    if (node["mul"] && node["products"]) throw fail(ErrorKind::ValidationError, node, "give either mul or products");
    if (const YAML::Node mul = node["mul"]) {
      if (!mul.IsSequence() || mul.size() != n)
        throw fail(ErrorKind::ValidationError, mul, "mul must have " + std::to_string(n) + " rows");
      for (std::size_t i = 0; i < n; ++i) {
        auto row = vectors(mul[i], n);
        if (row.size() != n) throw fail(ErrorKind::ValidationError, mul[i], "mul row has the wrong length");
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = std::move(row[j]);
      }
    }
    if (const YAML::Node sparse = node["products"]) {
      if (!sparse.IsMap()) throw fail(ErrorKind::ValidationError, sparse, "products must map \"i j\" to vectors");
      for (const auto& kv : sparse) {
        std::istringstream key(kv.first.as<std::string>());
        long long i = -1, j = -1;
        char sep = 0;
        key >> i;
        if (key.peek() == ',') key >> sep;
        key >> j;
        if (!key || i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n)
          throw fail(ErrorKind::ValidationError, kv.first, "bad product index '" + kv.first.as<std::string>() + "'");
        const Vector v = vector(kv.second, n);
        table[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = v;
        table[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] = v;
      }
    }
    return table;
  }

  void algebra(const std::string& name, const YAML::Node& node) {
    if (const YAML::Node parts = node["product"]) {
      if (!parts.IsSequence() || parts.size() != 2) throw fail(ErrorKind::ValidationError, parts, "product needs two algebras");
      const Algebra& a = lookup(out_.algebras, text(parts[0]), "algebra");
      const Algebra& b = lookup(out_.algebras, text(parts[1]), "algebra");
      out_.algebras.emplace(name, product_algebra(a, b).algebra.relabeled(name));
      return;
    }
    const std::size_t n = count(required(node, "dim"));
    std::vector<Vector> table = products(node, n);
    if (const YAML::Node u = node["unit"])
      out_.algebras.emplace(name, validate_algebra(*out_.field, n, std::move(table), vector(u, n), name));
    else
      out_.algebras.emplace(name, make_algebra_detect_unit(*out_.field, n, std::move(table), name));
  }

  void morphism(const std::string& name, const YAML::Node& node) {
    const Algebra& s = lookup(out_.algebras, text(required(node, "source")), "algebra");
    const Algebra& t = lookup(out_.algebras, text(required(node, "target")), "algebra");
    const YAML::Node rows = required(node, "matrix");
    std::vector<Vector> r = vectors(rows, s.dim());
    if (r.size() != t.dim())
      throw fail(ErrorKind::ValidationError, rows, "matrix needs " + std::to_string(t.dim()) + " rows");
    out_.morphisms.emplace(name, make_morphism(s, t, Matrix::from_row_vectors(*out_.field, s.dim(), r)));
  }

  void ideal(const std::string& name, const YAML::Node& node) {
    const Algebra& a = lookup(out_.algebras, text(required(node, "algebra")), "algebra");
    out_.ideals.emplace(name, ideal_closure(a, vectors(required(node, "generators"), a.dim())));
  }

  std::vector<Vector> action_table(const YAML::Node& node, std::size_t base_dim, std::size_t top_dim) const {
    if (!node.IsSequence() || node.size() != base_dim)
      throw fail(ErrorKind::ValidationError, node, "table needs one row per base basis element (" +
                                                       std::to_string(base_dim) + ")");
    std::vector<Vector> table;
    for (const auto& row : node) {
      auto r = vectors(row, top_dim);
      if (r.size() != top_dim) throw fail(ErrorKind::ValidationError, row, "table row has the wrong length");
      for (auto& v : r) table.push_back(std::move(v));
    }
    return table;
  }

  void action(const std::string& name, const YAML::Node& node) {
    const Algebra& base = lookup(out_.algebras, text(required(node, "base")), "algebra");
    const Algebra& top = lookup(out_.algebras, text(required(node, "top")), "algebra");
    out_.actions.emplace(name, make_action(base, top, action_table(required(node, "table"), base.dim(), top.dim())));
  }

  void xmod(const std::string& name, const YAML::Node& node) {
    const std::string kind = node["kind"] ? text(node["kind"]) : "general";
    if (kind == "general") {
      const Algebra& top = lookup(out_.algebras, text(required(node, "top")), "algebra");
      const Algebra& base = lookup(out_.algebras, text(required(node, "base")), "algebra");
      const AlgebraMorphism& b = lookup(out_.morphisms, text(required(node, "boundary")), "morphism");
      const AlgebraAction& a = lookup(out_.actions, text(required(node, "action")), "action");
      out_.xmods.emplace(name, validate_xmod(top, base, b, a, name));
    } else if (kind == "inclusion") {
      const Ideal& i = lookup(out_.ideals, text(required(node, "ideal")), "ideal");
      out_.xmods.emplace(name, inclusion_xmod(i.parent(), i, name));
    } else if (kind == "identity") {
      out_.xmods.emplace(name, identity_xmod(lookup(out_.algebras, text(required(node, "algebra")), "algebra"), name));
    } else if (kind == "zero") {
      out_.xmods.emplace(name, zero_xmod(lookup(out_.algebras, text(required(node, "base")), "algebra"), name));
    } else if (kind == "zero-module") {
      const Algebra& base = lookup(out_.algebras, text(required(node, "base")), "algebra");
      const std::size_t m = count(required(node, "dim"));
      out_.xmods.emplace(name, zero_module_xmod(base, m, action_table(required(node, "table"), base.dim(), m), name));
    } else if (kind == "multiplication") {
      out_.xmods.emplace(name,
                         multiplication_xmod(lookup(out_.algebras, text(required(node, "algebra")), "algebra"), name));
    } else {
      throw fail(ErrorKind::ValidationError, node["kind"], "unknown crossed module kind '" + kind + "'");
    }
  }

  void function(const std::string& name, const YAML::Node& node) {
    FunctionValues f;
    f.algebra = text(required(node, "algebra"));
    const Algebra& a = lookup(out_.algebras, f.algebra, "algebra");
    f.values = vectors(required(node, "values"), a.dim());
    if (const YAML::Node g = node["generators"]) {
      if (!g.IsSequence() || g.size() != f.values.size())
        throw fail(ErrorKind::ValidationError, g, "one generator name per value");
      for (const auto& x : g) f.generators.push_back(text(x));
    } else {
      for (std::size_t i = 0; i < f.values.size(); ++i) f.generators.push_back("y" + std::to_string(i + 1));
    }
    out_.functions.emplace(name, std::move(f));
  }

  std::string source_;
  DefinitionFile out_;
  std::set<std::string> names_;
};

}  // namespace

const Algebra& DefinitionFile::algebra(const std::string& name) const { return lookup(algebras, name, "algebra"); }
const AlgebraMorphism& DefinitionFile::morphism(const std::string& name) const {
  return lookup(morphisms, name, "morphism");
}
const Ideal& DefinitionFile::ideal(const std::string& name) const { return lookup(ideals, name, "ideal"); }
const CrossedModule& DefinitionFile::xmod(const std::string& name) const {
  return lookup(xmods, name, "crossed module");
}
const FunctionValues& DefinitionFile::function(const std::string& name) const {
  return lookup(functions, name, "function");
}

DefinitionFile parse_definitions(const std::string& text, const std::string& source) {
  return Loader(source).load(text);
}

DefinitionFile load_definitions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::SyntaxError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_definitions(buf.str(), path);
}

}  // namespace xalg::cli
