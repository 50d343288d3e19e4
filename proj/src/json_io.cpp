#include "matroid/json_io.hpp"

#include <algorithm>

#include "matroid/constructions.hpp"

namespace matroid::io {

namespace {

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<std::string> label_list(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array of labels");
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      throw ParseError(path + "[" + std::to_string(i) + "]", "expected a string label");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

int int_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_number_integer())
    throw ParseError(path + "." + key, "expected an integer");
  return v.get<int>();
}

GroundSet ground_field(const json& j, const std::string& path) {
  try {
    return GroundSet(label_list(field(j, "ground", path), path + ".ground"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(path + ".ground", e.what());
  }
}

Mask mask_field(const json& j, const char* key, const GroundSet& g,
                const std::string& path) {
  const auto labels = label_list(field(j, key, path), path + "." + key);
  try {
    return g.mask_of(labels);
  } catch (const Error& e) {
    throw ParseError(path + "." + key, e.what());
  }
}

}  // namespace

Matroid matroid_from_json(const json& j, const std::string& path) {
  const json& kind = field(j, "kind", path);
  if (!kind.is_string()) throw ParseError(path + ".kind", "expected a string");
  const std::string k = kind.get<std::string>();
  try {
    if (k == "rank_table") {
      GroundSet g = ground_field(j, path);
      const json& data = field(j, "data", path);
      if (!data.is_array() || data.size() != g.subset_count())
        throw ParseError(path + ".data", "rank table must list 2^n integers");
      std::vector<int> t;
      for (const auto& v : data) {
        if (!v.is_number_integer())
          throw ParseError(path + ".data", "rank table entries must be integers");
        t.push_back(v.get<int>());
      }
      return Matroid::from_table(std::move(g), t);
    }
    if (k == "bases") {
      GroundSet g = ground_field(j, path);
      const json& data = field(j, "data", path);
      if (!data.is_array() || data.empty())
        throw ParseError(path + ".data", "at least one basis required");
      std::vector<Mask> given;
      for (size_t i = 0; i < data.size(); ++i)
        given.push_back(g.mask_of(label_list(data[i], path + ".data")));
      std::sort(given.begin(), given.end());
      given.erase(std::unique(given.begin(), given.end()), given.end());
      // r(X) = max over listed bases of |X n B|; validation plus a
      // round-trip check rejects families that are not matroid bases.
      Matroid m = Matroid::from_rank_fn(g, [&](Mask x) {
        int best = 0;
        for (Mask b : given) best = std::max(best, popcount(x & b));
        return best;
      });
      std::vector<Mask> back = bases(m);
      std::sort(back.begin(), back.end());
      if (back != given)
        throw ParseError(path + ".data", "set family is not the bases of a matroid");
      return m;
    }
    if (k == "uniform") {
      GroundSet g = ground_field(j, path);
      const json& data = field(j, "data", path);
      return uniform(int_field(data, "r", path + ".data"), g.labels());
    }
    if (k == "set_system")
      return transversal_matroid(set_system_from_json(j, path));
    if (k == "matrix") return column_matroid(matrix_from_json(j, path));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
  throw ParseError(path + ".kind", "unknown matroid kind \"" + k + "\"");
}

json matroid_to_json(const Matroid& m) {
  json data = json::array();
  for (Mask x = 0; x < m.ground().subset_count(); ++x) data.push_back(m.rank(x));
  return json{{"ground", m.ground().labels()},
              {"kind", "rank_table"},
              {"data", data}};
}

FpMatrix matrix_from_json(const json& j, const std::string& path) {
  const int rows = int_field(j, "rows", path);
  const json& pj = field(j, "p", path);
  if (!pj.is_number_unsigned() && !pj.is_number_integer())
    throw ParseError(path + ".p", "expected an integer modulus");
  GroundSet cols(label_list(field(j, "cols", path), path + ".cols"));
  const json& entries = field(j, "entries", path);
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    throw ParseError(path + ".entries", "expected one row array per row");
  std::vector<std::uint64_t> flat;
  for (int r = 0; r < rows; ++r) {
    const json& row = entries[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols.size())
      throw ParseError(path + ".entries[" + std::to_string(r) + "]",
                       "row length must equal the number of columns");
    for (const auto& v : row) {
      if (!v.is_number_integer() && !v.is_number_unsigned())
        throw ParseError(path + ".entries", "entries must be integers");
      flat.push_back(v.get<std::uint64_t>());
    }
  }
  try {
    return FpMatrix(pj.get<std::uint64_t>(), rows, std::move(cols), std::move(flat));
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
}

json matrix_to_json(const FpMatrix& d) {
  json entries = json::array();
  for (int r = 0; r < d.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < d.cols(); ++c) row.push_back(d.at(r, c));
    entries.push_back(row);
  }
  return json{{"kind", "matrix"},
              {"p", d.p()},
              {"rows", d.rows()},
              {"cols", d.ground().labels()},
              {"entries", entries}};
}

SetSystem set_system_from_json(const json& j, const std::string& path) {
  SetSystem s;
  s.ground = ground_field(j, path);
  const json& sets = field(j, "sets", path);
  if (!sets.is_array()) throw ParseError(path + ".sets", "expected an array of sets");
  for (size_t i = 0; i < sets.size(); ++i) {
    const std::string p = path + ".sets[" + std::to_string(i) + "]";
    try {
      s.sets.push_back(s.ground.mask_of(label_list(sets[i], p)));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(p, e.what());
    }
  }
  return s;
}

json set_system_to_json(const SetSystem& s) {
  json sets = json::array();
  for (Mask m : s.sets) sets.push_back(s.ground.labels_of(m));
  return json{{"kind", "set_system"}, {"ground", s.ground.labels()}, {"sets", sets}};
}

Matroid eval_expression(const json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  if (!j.contains("op")) return matroid_from_json(j, path);
  const json& opj = j["op"];
  if (!opj.is_string()) throw ParseError(path + ".op", "expected a string");
  const std::string op = opj.get<std::string>();

  auto sub = [&](const char* key) {
    return eval_expression(field(j, key, path), path + "." + key);
  };
  auto sub2 = [&](const char* key, const char* alias) {
    if (j.contains(key)) return eval_expression(j[key], path + "." + key);
    return eval_expression(field(j, alias, path), path + "." + alias);
  };

  try {
    if (op == "uniform")
      return uniform(int_field(j, "r", path),
                     label_list(field(j, "ground", path), path + ".ground"));
    if (op == "dual") return dual(sub("M"));
    if (op == "direct_sum") return direct_sum(sub("M"), sub("N"));
    if (op == "union") {
      Matroid g = sub2("G", "M"), h = sub2("H", "N");
      return matroid_union(g, h);
    }
    if (op == "intersection") {
      Matroid g = sub2("G", "M"), h = sub2("H", "N");
      return matroid_intersection(g, h);
    }
    if (op == "add_loops") {
      Matroid n = sub("N");
      return add_loops(n, label_list(field(j, "labels", path), path + ".labels"));
    }
    if (op == "minor") {
      Matroid m = sub("M");
      return minor(m, mask_field(j, "delete", m.ground(), path),
                   mask_field(j, "contract", m.ground(), path));
    }
    if (op == "principal_extension") {
      Matroid m = sub("M");
      const json& bj = field(j, "b", path);
      if (!bj.is_string()) throw ParseError(path + ".b", "expected a label");
      return principal_extension(m, mask_field(j, "A", m.ground(), path),
                                 bj.get<std::string>());
    }
    if (op == "extension_on_flat") {
      Matroid m = sub("M");
      const auto t = label_list(field(j, "T", path), path + ".T");
      GroundSet tg(t);
      return extension_on_flat(m, mask_field(j, "A", m.ground(), path), t,
                               mask_field(j, "B", tg, path));
    }
    if (op == "principal_sum") {
      Matroid m = sub("M"), n = sub("N");
      return principal_sum(m, n, mask_field(j, "A", m.ground(), path),
                           mask_field(j, "B", n.ground(), path));
    }
    if (op == "free_product") return free_product(sub("M"), sub("N"));
    if (op == "truncation") {
      Matroid m = sub("M");
      return truncation(m, int_field(j, "k", path));
    }
    if (op == "free_extension" || op == "free_coextension") {
      Matroid m = sub("M");
      const json& ej = field(j, "e", path);
      if (!ej.is_string()) throw ParseError(path + ".e", "expected a label");
      return op == "free_extension" ? free_extension(m, ej.get<std::string>())
                                    : free_coextension(m, ej.get<std::string>());
    }
    if (op == "higgs_lift")
      return higgs_lift(sub("Q"), sub("L"), int_field(j, "i", path));
    if (op == "higgs_semidirect")
      return higgs_semidirect(sub("M"), sub("Mq"), sub("N"), sub("Nl"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(path, std::string(e.what()) + " (op \"" + op + "\")");
  }
  throw ParseError(path + ".op", "unknown op \"" + op + "\"");
}

json family_to_json(const GroundSet& g, const std::vector<Mask>& family) {
  std::vector<std::vector<std::string>> lists;
  lists.reserve(family.size());
  for (Mask m : family) lists.push_back(g.labels_of(m));
  std::sort(lists.begin(), lists.end());
  return json(lists);
}

json report_to_json(const CheckReport& r) { return r.to_json(); }

}  // namespace matroid::io
