#include "powershift/commands.hpp"

#include "powershift/pell.hpp"
#include "powershift/shift_square.hpp"
#include "powershift/square_products.hpp"

#include <map>
#include <sstream>

namespace powershift {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string dec(const Integer& n) { return to_string(n); }

OutputEnvelope make_envelope(std::string command, Params params) {
  OutputEnvelope env;
  env.command = std::move(command);
  env.parameters = std::move(params);
  return env;
}

Json certificate_json(const SquareProductCertificate& c) {
  return Json{{"a", dec(c.a)},   {"b", dec(c.b)},     {"c", dec(c.c)},
              {"t", dec(c.t)},   {"ell", dec(c.ell)}, {"root", dec(c.root())}};
}

}  // namespace

Json to_json(const OutputEnvelope& env) {
  Json params = Json::array();
  for (const auto& [name, value] : env.parameters) {
    params.push_back(Json{{"name", name}, {"value", value}});
  }
  Json j{{"command", {{"name", env.command}, {"parameters", params}, {"version", env.version}}},
         {"payload", env.payload},
         {"warnings", env.warnings}};
  j["error"] = env.error ? Json(*env.error) : Json(nullptr);
  return j;
}

OutputEnvelope envelope_from_json(const Json& j) {
  OutputEnvelope env;
  const Json& meta = j.at("command");
  env.command = meta.at("name").get<std::string>();
  env.version = meta.at("version").get<std::string>();
  for (const Json& p : meta.at("parameters")) {
    env.parameters.emplace_back(p.at("name").get<std::string>(), p.at("value").get<std::string>());
  }
  env.payload = j.at("payload");
  env.warnings = j.at("warnings").get<std::vector<std::string>>();
  if (!j.at("error").is_null()) env.error = j.at("error").get<std::string>();
  return env;
}

std::string render_json(const OutputEnvelope& env) { return to_json(env).dump(2) + "\n"; }

OutputEnvelope parse_envelope(const std::string& text) {
  return envelope_from_json(Json::parse(text));
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += scalar_text(v[i]);
    }
    return out + "]";
  }
  return v.dump();
}

bool is_table(const Json& v) {
  return v.is_array() && !v.empty() && v.front().is_object();
}

void render_value(std::ostringstream& out, const std::string& key, const Json& v) {
  if (is_table(v)) {
    out << key << ":\n";
    bool first = true;
    for (const auto& [column, _] : v.front().items()) {
      out << (first ? "" : "\t") << column;
      first = false;
    }
    out << "\n";
    for (const Json& row : v) {
      first = true;
      for (const auto& [_, cell] : row.items()) {
        out << (first ? "" : "\t") << scalar_text(cell);
        first = false;
      }
      out << "\n";
    }
  } else if (v.is_object()) {
    for (const auto& [sub, inner] : v.items()) render_value(out, key + "." + sub, inner);
  } else {
    out << key << ": " << scalar_text(v) << "\n";
  }
}

}  // namespace

std::string render_text(const OutputEnvelope& env) {
  std::ostringstream out;
  out << "# powershift " << env.version << " " << env.command;
  for (const auto& [name, value] : env.parameters) out << " " << name << "=" << value;
  out << "\n";
  for (const auto& w : env.warnings) out << "warning: " << w << "\n";
  if (env.error) out << "error: " << *env.error << "\n";
  for (const auto& [key, value] : env.payload.items()) render_value(out, key, value);
  return out.str();
}

CommandResult command_error(const std::string& command, Params parameters,
                            const std::string& message, int code) {
  OutputEnvelope env = make_envelope(command, std::move(parameters));
  env.error = message;
  return {std::move(env), code};
}

CommandResult cmd_pell(const Integer& d, std::size_t count) {
  Params params{{"d", dec(d)}, {"count", std::to_string(count)}};
  OutputEnvelope env = make_envelope("pell", params);
  if (d < 2) return command_error("pell", params, "d must be at least 2", exit_code::usage_error);
  if (is_perfect_square(d)) {
    env.error = "d is a perfect square";
    env.payload["d"] = dec(d);
    return {std::move(env), exit_code::domain_error};
  }
  const ContinuedFraction cf = continued_fraction_sqrt(d);
  Json period = Json::array();
  for (const Integer& q : cf.period) period.push_back(dec(q));
  PellStream stream(d);
  const PellSolution& f = stream.fundamental();
  Json rows = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    const PellSolution s = stream.next();
    rows.push_back(Json{{"index", std::to_string(i + 1)}, {"u", dec(s.u)}, {"v", dec(s.v)}});
  }
  env.payload = Json{{"d", dec(d)},
                     {"a0", dec(cf.a0)},
                     {"period", period},
                     {"period_length", std::to_string(cf.period.size())},
                     {"fundamental", {{"u", dec(f.u)}, {"v", dec(f.v)}}},
                     {"solutions", rows}};
  return {std::move(env), exit_code::ok};
}

CommandResult cmd_family(const Integer& a, const Integer& k, std::size_t count) {
  Params params{{"a", dec(a)}, {"k", dec(k)}, {"count", std::to_string(count)}};
  if (a < 1 || k < 1) {
    return command_error("family", params, "a and k must be positive", exit_code::usage_error);
  }
  OutputEnvelope env = make_envelope("family", params);
  const ShiftInstance inst(a, k);
  env.payload = Json{{"a", dec(a)}, {"k", dec(k)}, {"d", dec(inst.d())},
                     {"d_is_square", inst.is_square()}};
  if (inst.is_square()) {
    env.error = "a(a+k) is a perfect square; no Pell family exists";
    env.payload["certificate"] = certificate_json(*certificate_for(a, k));
    return {std::move(env), exit_code::domain_error};
  }
  WitnessFamily family(inst);
  Json rows = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    const Witness w = family.next();
    rows.push_back(Json{{"index", std::to_string(i + 1)},
                        {"x", dec(w.x)},
                        {"y", dec(w.y)},
                        {"lhs", dec(a * w.x * w.x + k)},
                        {"rhs", dec(inst.shifted() * w.y * w.y)},
                        {"verified", verify_witness(inst, w)}});
  }
  env.payload["witnesses"] = rows;
  return {std::move(env), exit_code::ok};
}

CommandResult cmd_squares(const Integer& k, const std::optional<Integer>& oracle_limit) {
  Params params{{"k", dec(k)}};
  if (oracle_limit) params.emplace_back("oracle", dec(*oracle_limit));
  if (k < 1) return command_error("squares", params, "k must be positive", exit_code::usage_error);
  if (oracle_limit && *oracle_limit < 1) {
    return command_error("squares", params, "oracle limit must be positive",
                         exit_code::usage_error);
  }
  OutputEnvelope env = make_envelope("squares", params);
  const auto certs = enumerate_square_products(k);
  Json rows = Json::array();
  for (const auto& c : certs) rows.push_back(certificate_json(c));
  env.payload = Json{{"k", dec(k)}, {"count", std::to_string(certs.size())}, {"certificates", rows}};
  if (oracle_limit) {
    std::vector<Integer> brute;
    for (Integer a = 1; a <= *oracle_limit; ++a) {
      if (is_square_product(a, k)) brute.push_back(a);
    }
    std::vector<Integer> enumerated;
    for (const auto& c : certs) {
      if (c.a <= *oracle_limit) enumerated.push_back(c.a);
    }
    Json found = Json::array();
    for (const Integer& a : brute) found.push_back(dec(a));
    env.payload["oracle"] = Json{{"limit", dec(*oracle_limit)},
                                 {"brute_force", found},
                                 {"match", brute == enumerated}};
  }
  return {std::move(env), exit_code::ok};
}

CommandResult cmd_syndetic(const SyndeticSample& sample, const SampleSource& source,
                           const Integer& k, std::size_t tries) {
  Params params{{"source", source.kind}};
  params.insert(params.end(), source.parameters.begin(), source.parameters.end());
  params.emplace_back("k", dec(k));
  params.emplace_back("horizon", dec(sample.horizon));
  params.emplace_back("gap_bound", dec(sample.gap_bound));
  params.emplace_back("tries", std::to_string(tries));
  if (k < 1 || k >= sample.horizon || tries < 1) {
    return command_error("syndetic", params, "need 1 <= k < horizon and tries >= 1",
                         exit_code::usage_error);
  }
  const SampleReport report = verify_sample(sample);
  if (!report.valid()) {
    OutputEnvelope env = make_envelope("syndetic", params);
    env.error = "invalid sample: " + report.violations.front().detail;
    Json violations = Json::array();
    for (const auto& v : report.violations) {
      violations.push_back(Json{{"kind", to_string(v.kind)},
                                {"position", std::to_string(v.position)},
                                {"detail", v.detail}});
    }
    env.payload["violations"] = violations;
    return {std::move(env), exit_code::domain_error};
  }

  OutputEnvelope env = make_envelope("syndetic", params);
  const auto adjacent = find_adjacent_pairs(sample, k);
  const auto failure = first_hitting_failure(sample, k);
  const auto outcomes = find_geometric_pairs(sample, k, tries);

  std::map<std::string, std::size_t> counts{
      {"Found", 0}, {"OutOfHorizon", 0}, {"SquareSkipped", 0}, {"HypothesisViolation", 0}};
  Json rows = Json::array();
  for (const auto& o : outcomes) {
    ++counts[to_string(o.status)];
    auto opt = [](const std::optional<Integer>& v) { return v ? Json(dec(*v)) : Json(nullptr); };
    rows.push_back(Json{
        {"a", dec(o.source)},
        {"status", to_string(o.status)},
        {"branch", o.pair ? Json(to_string(o.pair->branch)) : Json(nullptr)},
        {"base", o.pair ? Json(dec(o.pair->base)) : Json(nullptr)},
        {"ratio_root", o.pair ? Json(dec(o.pair->ratio_root)) : Json(nullptr)},
        {"product", o.pair ? Json(dec(o.pair->product)) : Json(nullptr)},
        {"x", o.solution ? Json(dec(o.solution->x)) : Json(nullptr)},
        {"y", o.solution ? Json(dec(o.solution->y)) : Json(nullptr)},
        {"b", opt(o.b)},
        {"member", o.solution ? Json(std::to_string(o.family_index + 1)) : Json(nullptr)},
    });
  }
  Json summary = Json::object();
  for (const char* key : {"Found", "OutOfHorizon", "SquareSkipped", "HypothesisViolation"}) {
    summary[key] = std::to_string(counts[key]);
  }
  env.payload = Json{{"elements", std::to_string(sample.elements.size())},
                     {"adjacent_pairs", std::to_string(adjacent.size())},
                     {"hitting", !failure.has_value()},
                     {"hitting_failure", failure ? Json(dec(*failure)) : Json(nullptr)},
                     {"summary", summary},
                     {"outcomes", rows}};
  if (failure) {
    env.warnings.push_back("hitting hypothesis fails at a=" + dec(*failure) +
                           " within the horizon");
  }
  return {std::move(env), exit_code::ok};
}

namespace {

Params query_params(const PowerEquationQuery& q) {
  return {{"a", dec(q.a)},
          {"k", dec(q.k)},
          {"ell", dec(q.ell)},
          {"m", std::to_string(q.m)},
          {"n", std::to_string(q.n)},
          {"x_bound", dec(q.x_bound)},
          {"y_bound", dec(q.y_bound)},
          {"min", dec(q.min_value)}};
}

std::string domain_text(const Integer& min_value) {
  return "x>=" + dec(min_value) + ",y>=" + dec(min_value);
}

}  // namespace

CommandResult cmd_search(const PowerEquationQuery& q, SearchOptions options) {
  Params params = query_params(q);
  try {
    q.validate();
  } catch (const std::invalid_argument& e) {
    return command_error("search", params, e.what(), exit_code::usage_error);
  }
  OutputEnvelope env = make_envelope("search", params);
  const SearchResult r = search_solutions(q, options);
  Json rows = Json::array();
  for (const auto& s : r.solutions) rows.push_back(Json{{"x", dec(s.x)}, {"y", dec(s.y)}});
  env.payload = Json{{"domain", domain_text(q.min_value)},
                     {"obstructed", r.obstructed},
                     {"exhausted", r.exhausted},
                     {"count", std::to_string(r.solutions.size())},
                     {"solutions", rows}};
  if (r.obstructed) {
    env.warnings.push_back("k is not divisible by gcd(a, ell) = " + dec(gcd(q.a, q.ell)) +
                           "; no solutions exist");
  }
  return {std::move(env), exit_code::ok};
}

CommandResult cmd_survey(const SurveyGrid& grid, SearchOptions options) {
  auto range_text = [](const IntegerRange& r) { return dec(r.lo) + ".." + dec(r.hi); };
  Params params{{"a", range_text(grid.a)},         {"k", range_text(grid.k)},
                {"ell", range_text(grid.ell)},     {"m", std::to_string(grid.m)},
                {"n", std::to_string(grid.n)},     {"x_bound", dec(grid.x_bound)},
                {"y_bound", dec(grid.y_bound)},    {"min", dec(grid.min_value)}};
  std::vector<SurveyRow> rows;
  try {
    rows = survey(grid, options);
  } catch (const std::invalid_argument& e) {
    return command_error("survey", params, e.what(), exit_code::usage_error);
  }
  OutputEnvelope env = make_envelope("survey", params);
  Json table = Json::array();
  for (const auto& r : rows) {
    table.push_back(Json{{"a", dec(r.a)},
                         {"k", dec(r.k)},
                         {"ell", dec(r.ell)},
                         {"m", std::to_string(r.m)},
                         {"n", std::to_string(r.n)},
                         {"count", std::to_string(r.count)},
                         {"obstructed", r.obstructed},
                         {"exhausted", r.exhausted}});
  }
  env.payload = Json{{"domain", domain_text(grid.min_value)},
                     {"cells", std::to_string(rows.size())},
                     {"rows", table}};
  return {std::move(env), exit_code::ok};
}

IntegerRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const Integer v = parse_integer(text);
    return {v, v};
  }
  IntegerRange r{parse_integer(text.substr(0, dots)), parse_integer(text.substr(dots + 2))};
  if (r.hi < r.lo) throw std::invalid_argument("empty range: " + text);
  return r;
}

}  // namespace powershift
