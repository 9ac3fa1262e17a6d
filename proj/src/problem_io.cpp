#include "tropmo/problem_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace tropmo {

using nlohmann::json;

namespace {

std::string where(std::string_view context) { return std::string(context); }

const json& member(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

Rational rational_from_json(const json& j, std::string_view context) {
  ExtendedScalar x;
  try {
    x = scalar_from_json(j, false);
  } catch (const ParseError& e) {
    throw ParseError(where(context) + ": " + e.what());
  }
  return x.value();
}

std::vector<Rational> vector_from_json(const json& j, std::string_view context) {
  if (!j.is_array()) throw ParseError(where(context) + ": expected an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(rational_from_json(j[i], std::string(context) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::vector<Rational>> matrix_from_json(const json& j, std::string_view context) {
  if (!j.is_array()) throw ParseError(where(context) + ": expected an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    rows.push_back(vector_from_json(j[r], std::string(context) + "[" + std::to_string(r) + "]"));
  }
  return rows;
}

std::vector<Outcome> points_from_json(const json& j, std::size_t d, std::string_view context) {
  auto rows = matrix_from_json(j, context);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != d) {
      throw ParseError(std::string(context) + "[" + std::to_string(r) + "]: expected " + std::to_string(d) +
                       " entries, got " + std::to_string(rows[r].size()));
    }
  }
  return rows;
}

}  // namespace

json scalar_to_json(const ExtendedScalar& x) {
  if (!x.is_finite()) return x.to_string();
  const Rational& q = x.value();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return static_cast<std::int64_t>(q.get_num().get_si());
  return rational_to_string(q);
}

ExtendedScalar scalar_from_json(const json& j, bool allow_infinite) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? ExtendedScalar(Rational(std::to_string(j.get<std::uint64_t>())))
                                  : ExtendedScalar(Rational(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_number_float()) {
    // dump() gives the shortest text that round-trips, which is the literal
    // as written for ordinary decimal input.
    return ExtendedScalar(parse_rational(j.dump()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    try {
      ExtendedScalar x = ExtendedScalar::parse(s);
      if (!x.is_finite() && !allow_infinite) throw ParseError("infinite value \"" + s + "\" is not allowed here");
      return x;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("expected a number, got " + j.dump());
}

ProblemDocument parse_problem(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("problem file must be a JSON object");

  ProblemDocument doc;
  const json& kind = member(j, "kind");
  if (!kind.is_string()) throw ParseError("\"kind\" must be a string");
  const auto& k = kind.get_ref<const std::string&>();
  if (k == "explicit") {
    doc.kind = ProblemKind::kExplicit;
  } else if (k == "knapsack01") {
    doc.kind = ProblemKind::kKnapsack01;
  } else if (k == "ideal") {
    doc.kind = ProblemKind::kIdeal;
  } else {
    throw ParseError("unknown kind \"" + k + "\" (expected explicit, knapsack01 or ideal)");
  }

  const json& d = member(j, "d");
  if (!d.is_number_integer() || d.get<std::int64_t>() < 1) throw ParseError("\"d\" must be a positive integer");
  doc.d = d.get<std::size_t>();

  switch (doc.kind) {
    case ProblemKind::kExplicit:
      doc.points = points_from_json(member(j, "points"), doc.d, "points");
      break;
    case ProblemKind::kIdeal:
      doc.generators = points_from_json(member(j, "generators"), doc.d, "generators");
      for (const auto& g : doc.generators) {
        for (const auto& v : g) {
          if (v < 0 || v.get_den() != 1) throw ParseError("generators: exponents must be nonnegative integers");
        }
      }
      break;
    case ProblemKind::kKnapsack01: {
      auto& ks = doc.knapsack;
      ks.profit = matrix_from_json(member(j, "P"), "P");
      ks.weight = matrix_from_json(member(j, "W"), "W");
      ks.capacity = vector_from_json(member(j, "c"), "c");
      if (auto it = j.find("translate"); it != j.end() && !it->is_null()) {
        ks.translate = vector_from_json(*it, "translate");
      }
      if (ks.profit.size() != doc.d) throw ParseError("P must have d rows");
      const std::size_t items = ks.profit.empty() ? 0 : ks.profit.front().size();
      for (const auto& row : ks.profit) {
        if (row.size() != items) throw ParseError("rows of P differ in length");
      }
      for (const auto& row : ks.weight) {
        if (row.size() != items) throw ParseError("W must have as many columns as P");
      }
      if (ks.capacity.size() != ks.weight.size()) throw ParseError("c must have one entry per row of W");
      if (!ks.translate.empty() && ks.translate.size() != doc.d) throw ParseError("translate must have d entries");
      if (items > 30) throw ParseError("knapsack01 supports at most 30 items");
      break;
    }
  }
  return doc;
}

ProblemDocument load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::vector<Outcome> materialize_outcomes(const ProblemDocument& doc, bool apply_translation) {
  switch (doc.kind) {
    case ProblemKind::kExplicit: return doc.points;
    case ProblemKind::kKnapsack01: {
      KnapsackData data = doc.knapsack;
      if (!apply_translation) data.translate.clear();
      return Knapsack01Oracle::enumerate_outcomes(data);
    }
    case ProblemKind::kIdeal: break;
  }
  throw std::invalid_argument("an ideal has no outcome set");
}

std::unique_ptr<ProblemOracle> make_oracle(const ProblemDocument& doc, bool apply_translation) {
  return std::make_unique<ExplicitSetOracle>(doc.d, materialize_outcomes(doc, apply_translation));
}

std::optional<std::vector<Rational>> applied_translation(const ProblemDocument& doc, bool apply_translation) {
  if (doc.kind != ProblemKind::kKnapsack01 || !apply_translation || doc.knapsack.translate.empty()) {
    return std::nullopt;
  }
  return doc.knapsack.translate;
}

json apices_to_json(const std::vector<std::vector<ExtendedScalar>>& apices) {
  json out = json::array();
  for (const auto& a : apices) {
    json row = json::array();
    for (const auto& x : a) row.push_back(scalar_to_json(x));
    out.push_back(std::move(row));
  }
  return out;
}

json result_to_json(const SolveResult& result, const std::optional<std::vector<Rational>>& translation) {
  json nd = json::array();
  for (const auto& z : result.nondominated) {
    json row = json::array();
    for (const auto& v : z) row.push_back(scalar_to_json(ExtendedScalar(v)));
    nd.push_back(std::move(row));
  }
  json doc;
  doc["nondominated"] = std::move(nd);
  doc["local_upper_bounds"] = apices_to_json(result.local_upper_bounds);
  doc["stats"] = {{"n", result.stats.n},
                  {"m", result.stats.m},
                  {"scalarizations", result.stats.scalarization_calls},
                  {"upper_bound_U", result.stats.upper_bound}};
  if (translation) {
    json t = json::array();
    for (const auto& v : *translation) t.push_back(scalar_to_json(ExtendedScalar(v)));
    doc["translation"] = std::move(t);
  } else {
    doc["translation"] = nullptr;
  }
  return doc;
}

ResultDocument result_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("result document must be a JSON object");
  ResultDocument doc;
  for (const auto& row : member(j, "nondominated")) {
    if (!row.is_array()) throw ParseError("nondominated: expected arrays");
    Outcome z;
    for (const auto& v : row) z.push_back(scalar_from_json(v, false).value());
    doc.nondominated.push_back(std::move(z));
  }
  for (const auto& row : member(j, "local_upper_bounds")) {
    if (!row.is_array()) throw ParseError("local_upper_bounds: expected arrays");
    std::vector<ExtendedScalar> a;
    for (const auto& v : row) a.push_back(scalar_from_json(v, true));
    doc.local_upper_bounds.push_back(std::move(a));
  }
  const json& stats = member(j, "stats");
  try {
    doc.n = member(stats, "n").get<std::size_t>();
    doc.m = member(stats, "m").get<std::size_t>();
    doc.scalarizations = member(stats, "scalarizations").get<std::size_t>();
    doc.upper_bound = member(stats, "upper_bound_U").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("stats: ") + e.what());
  }
  return doc;
}

ResultDocument to_document(const SolveResult& result) {
  return {result.nondominated, result.local_upper_bounds, result.stats.n, result.stats.m,
          result.stats.scalarization_calls, result.stats.upper_bound};
}

std::string result_to_tsv(const SolveResult& result) {
  std::ostringstream os;
  for (const auto& z : result.nondominated) {
    os << "nondominated";
    for (const auto& v : z) os << '\t' << rational_to_string(v);
    os << '\n';
  }
  for (const auto& a : result.local_upper_bounds) {
    os << "local_upper_bound";
    for (const auto& v : a) os << '\t' << v;
    os << '\n';
  }
  os << "stat\tn\t" << result.stats.n << '\n'
     << "stat\tm\t" << result.stats.m << '\n'
     << "stat\tscalarizations\t" << result.stats.scalarization_calls << '\n'
     << "stat\tupper_bound_U\t" << result.stats.upper_bound << '\n';
  return os.str();
}

}  // namespace tropmo
