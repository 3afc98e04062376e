#include "tpbound/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tpbound/conelab.hpp"
#include "tpbound/errors.hpp"
#include "tpbound/factorizer.hpp"
#include "tpbound/polycheck.hpp"
#include "tpbound/tpcore.hpp"

namespace tpbound::cli {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "tpbound/1";

class RatioParser {
 public:
  RatioParser(std::string_view text, std::optional<int> rank) : text_(text), rank_(rank) {}

  RatioExpr parse() {
    std::vector<Pending> num = terms();
    skip_space();
    expect('/');
    std::vector<Pending> den = terms();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");

    int n = 0;
    if (rank_) {
      n = *rank_;
    } else {
      const Pending& first = num.front();
      if (first.minor) throw Error(ErrorCode::InvalidInput, "minor notation needs an explicit rank (--n)");
      n = static_cast<int>(first.a.size());
    }
    return RatioExpr(n, resolve(num, n), resolve(den, n));
  }

 private:
  struct Pending {
    bool minor = false;
    std::vector<int> a;
    std::vector<int> b;
  };

  std::vector<IndexSet> resolve(const std::vector<Pending>& side, int n) {
    std::vector<IndexSet> out;
    for (const Pending& p : side) {
      if (p.minor) {
        out.push_back(minor_to_plucker(MinorSpec(n, p.a, p.b)));
      } else {
        if (static_cast<int>(p.a.size()) != n) {
          throw Error(ErrorCode::RankMismatch, "bracket of size " + std::to_string(p.a.size()) +
                                                   " in a rank " + std::to_string(n) + " ratio");
        }
        out.emplace_back(n, p.a);
      }
    }
    return out;
  }

  std::vector<Pending> terms() {
    std::vector<Pending> out;
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '[') {
        ++pos_;
        Pending p;
        p.a = ints(']', false);
        expect(']');
        out.push_back(std::move(p));
      } else if (pos_ < text_.size() && text_[pos_] == '(') {
        ++pos_;
        Pending p;
        p.minor = true;
        p.a = ints('|', true);
        expect('|');
        p.b = ints(')', true);
        expect(')');
        out.push_back(std::move(p));
      } else {
        break;
      }
    }
    if (out.empty()) throw SyntaxError(pos_, "expected '[' or '('");
    return out;
  }

  std::vector<int> ints(char close, bool allow_empty) {
    std::vector<int> out;
    skip_space();
    if (allow_empty && pos_ < text_.size() && text_[pos_] == close) return out;
    for (;;) {
      out.push_back(integer());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < text_.size() && text_[pos_] == close) return out;
      throw SyntaxError(pos_, std::string("expected ',' or '") + close + "'");
    }
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) throw SyntaxError(start, "index too large");
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(pos_, "expected an index");
    return static_cast<int>(v);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) throw SyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::optional<int> rank_;
  std::size_t pos_ = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

json vector_json(const ExponentVector& v) {
  json out = json::object();
  for (const auto& [set, e] : v.entries()) out[set.to_string()] = e;
  return out;
}

json measure_json(const Measure& m) {
  json out = json::object();
  if (m.nu >= 0) out["nu"] = m.nu;
  if (m.mu >= 0) out["mu"] = m.mu;
  if (m.delta >= 0) out["delta"] = m.delta;
  return out;
}

std::string measure_text(const Measure& m) {
  std::ostringstream s;
  if (m.nu >= 0) s << "nu=" << m.nu;
  if (m.mu >= 0) s << (m.nu >= 0 ? " " : "") << "mu=" << m.mu << " delta=" << m.delta;
  return s.str();
}

json st0_json(const St0Result& r) {
  json out{{"holds", r.holds}};
  if (!r.holds) {
    out["index"] = r.index;
    out["numerator_count"] = r.numerator_count;
    out["denominator_count"] = r.denominator_count;
  }
  return out;
}

std::string st0_text(const St0Result& r) {
  if (r.holds) return "ST0 holds";
  return "ST0 fails at index " + std::to_string(r.index) + " (" + std::to_string(r.numerator_count) + " above, " +
         std::to_string(r.denominator_count) + " below)";
}

json condition_m_json(const ConditionMResult& r) {
  json out{{"holds", r.holds}};
  if (!r.holds && r.witness) {
    out["witness"] = r.witness->members();
    out["numerator_profile"] = r.numerator_profile;
    out["denominator_profile"] = r.denominator_profile;
  }
  return out;
}

std::string condition_m_text(const ConditionMResult& r) {
  if (r.holds) return "(M) holds";
  return "(M) fails, witness L=" + r.witness->to_string();
}

json rational_list(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

RatioExpr input_ratio(const Command& cmd) {
  std::string text = cmd.ratio;
  if (cmd.file) text = read_file(*cmd.file);
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::InvalidInput, cmd.name + " needs a ratio argument or --file");
  return parse_ratio(text, cmd.rank);
}

TPMatrix input_matrix(const Command& cmd, int rank, std::string& source) {
  if (cmd.matrix) {
    const std::string raw = trim(*cmd.matrix);
    const std::string body = (!raw.empty() && raw.front() == '[') ? raw : read_file(raw);
    json parsed;
    try {
      parsed = json::parse(body);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::InvalidInput, std::string("matrix is not valid JSON: ") + e.what());
    }
    TPMatrix m{parse_matrix(parsed), std::nullopt};
    if (m.rank() != rank) throw Error(ErrorCode::RankMismatch, "matrix size does not match the ratio rank");
    source = "given";
    return m;
  }
  source = "random_tp(n=" + std::to_string(rank) + ", seed=" + std::to_string(cmd.seed) +
           ", magnitude=" + std::to_string(cmd.magnitude) + ")";
  return random_tp(rank, cmd.seed, cmd.magnitude);
}

Report base_report(const Command& cmd) {
  Report r;
  r.json = json{{"schema", kSchema}, {"command", cmd.name}};
  return r;
}

Report run_check(const Command& cmd) {
  const RatioExpr r = input_ratio(cmd);
  const St0Result st0 = check_st0(r);
  const ConditionMResult m = check_condition_m(r);
  Report rep = base_report(cmd);
  rep.json["input"] = format_ratio(r);
  rep.json["rank"] = r.rank();
  rep.json["st0"] = st0_json(st0);
  rep.json["condition_m"] = condition_m_json(m);
  rep.text = "ratio " + format_ratio(r) + "\n" + st0_text(st0) + "\n" + condition_m_text(m) + "\n";
  return rep;
}

Report run_factor(const Command& cmd) {
  const RatioExpr r = input_ratio(cmd);
  Report rep = base_report(cmd);
  rep.json["input"] = format_ratio(r);
  std::ostringstream text;
  text << "ratio " << format_ratio(r) << "\n";
  try {
    const FactorizationResult f = factor_to_basics(r);
    rep.json["verdict"] = "factored";
    json basics = json::array();
    text << "basics (" << f.basics.size() << "):\n";
    for (const auto& b : f.basics) {
      basics.push_back({{"name", b.to_string()}, {"ratio", format_ratio(b.ratio())}});
      text << "  " << b.to_string() << "  " << format_ratio(b.ratio()) << "\n";
    }
    rep.json["basics"] = basics;
    json trace = json::array();
    text << "trace:\n";
    for (const auto& t : f.trace) {
      json children = json::array();
      for (const auto& c : t.children) children.push_back(format_ratio(c));
      json child_measures = json::array();
      for (const auto& m : t.child_measures) child_measures.push_back(measure_json(m));
      trace.push_back({{"rule", t.rule},
                       {"depth", t.depth},
                       {"input", format_ratio(t.input)},
                       {"measure", measure_json(t.measure)},
                       {"children", children},
                       {"child_measures", child_measures}});
      text << "  " << std::string(static_cast<std::size_t>(t.depth) * 2, ' ') << t.rule << " "
           << format_ratio(t.input) << " [" << measure_text(t.measure) << "]";
      if (!t.children.empty()) {
        text << " ->";
        for (const auto& c : t.children) text << " " << format_ratio(c);
      }
      text << "\n";
    }
    rep.json["trace"] = trace;
  } catch (const St0ViolationError& e) {
    rep.json["verdict"] = "unbounded";
    rep.json["st0"] = st0_json(e.witness());
    text << "unbounded: " << st0_text(e.witness()) << "\n";
  } catch (const ConditionMViolationError& e) {
    rep.json["verdict"] = "unbounded";
    rep.json["condition_m"] = condition_m_json(e.witness());
    text << "unbounded: " << condition_m_text(e.witness()) << "\n";
  }
  rep.text = text.str();
  return rep;
}

Report run_eval(const Command& cmd) {
  const RatioExpr r = input_ratio(cmd);
  std::string source;
  const TPMatrix a = input_matrix(cmd, r.rank(), source);
  const Rational value = eval_ratio(a, r);
  const bool tp = verify_tp(a.entries);
  Report rep = base_report(cmd);
  rep.json["input"] = format_ratio(r);
  rep.json["matrix_source"] = source;
  rep.json["matrix"] = matrix_to_json(a.entries);
  rep.json["totally_positive"] = tp;
  rep.json["value"] = to_string(value);
  rep.text = "ratio " + format_ratio(r) + "\nmatrix " + source + (tp ? "" : " (not TP)") + "\nvalue " +
             to_string(value) + "\n";
  return rep;
}

Report run_cone(const Command& cmd) {
  const RatioExpr r = input_ratio(cmd);
  const ExponentVector x = ratio_to_vector(r);
  const ConeVerdict v = cone_membership(x, r.rank());
  const bool ok = verify_certificate(x, v, r.rank());
  Report rep = base_report(cmd);
  rep.json["input"] = format_ratio(r);
  rep.json["vector"] = vector_json(x);
  rep.json["verified"] = ok;
  std::ostringstream text;
  text << "ratio " << format_ratio(r) << "\n";
  if (const auto* in = std::get_if<InCone>(&v)) {
    rep.json["verdict"] = "in-cone";
    json coeffs = json::array();
    text << "in cone:\n";
    for (const auto& [b, lambda] : in->coefficients) {
      coeffs.push_back({{"basic", b.to_string()}, {"coefficient", to_string(lambda)}});
      text << "  " << to_string(lambda) << " * " << b.to_string() << "\n";
    }
    rep.json["coefficients"] = coeffs;
  } else {
    rep.json["verdict"] = "outside";
    json cert = json::object();
    text << "outside; separating functional:\n";
    for (const auto& [set, y] : std::get<Outside>(v).certificate) {
      cert[set.to_string()] = to_string(y);
      text << "  " << set.to_string() << " " << to_string(y) << "\n";
    }
    rep.json["certificate"] = cert;
  }
  text << "certificate " << (ok ? "verified" : "REJECTED") << "\n";
  rep.text = text.str();
  if (!ok) rep.exit_code = 1;
  return rep;
}

Report run_subfree(const Command& cmd) {
  const RatioExpr r = input_ratio(cmd);
  const Polynomial p = ratio_difference_poly(r);
  const SubtractionFreeResult s = is_subtraction_free(p);
  Report rep = base_report(cmd);
  rep.json["input"] = format_ratio(r);
  rep.json["terms"] = p.size();
  rep.json["subtraction_free"] = s.free;
  std::ostringstream text;
  text << "ratio " << format_ratio(r) << "\nq - p has " << p.size() << " terms\n";
  if (p.size() <= 200) {
    rep.json["polynomial"] = p.to_string();
    text << "q - p = " << p.to_string() << "\n";
  }
  if (s.free) {
    text << "subtraction free\n";
  } else {
    rep.json["witness"] = {{"monomial", s.witness->to_string()}, {"coefficient", s.coefficient.get_str()}};
    text << "not subtraction free; witness " << s.coefficient.get_str() << " * " << s.witness->to_string() << "\n";
  }
  rep.text = text.str();
  return rep;
}

Report run_falsify(const Command& cmd) {
  const RatioExpr r = input_ratio(cmd);
  FalsifyOptions options;
  options.seed = cmd.seed;
  if (cmd.budget) options.budget = *cmd.budget;
  if (cmd.threshold) options.threshold = parse_rational(*cmd.threshold);
  if (cmd.t_ladder) {
    options.t_ladder.clear();
    std::stringstream ss(*cmd.t_ladder);
    std::string item;
    while (std::getline(ss, item, ',')) options.t_ladder.push_back(parse_rational(item));
    for (const auto& t : options.t_ladder) {
      if (t <= 0) throw Error(ErrorCode::NonPositiveWeight, "t-ladder values must be positive");
    }
  }
  const FalsifyOutcome out = falsify(r, options);
  Report rep = base_report(cmd);
  rep.json["input"] = format_ratio(r);
  rep.json["threshold"] = to_string(options.threshold);
  rep.json["t_ladder"] = rational_list(options.t_ladder);
  std::ostringstream text;
  text << "ratio " << format_ratio(r) << "\n";
  if (const auto* e = std::get_if<Evidence>(&out)) {
    rep.json["verdict"] = "evidence";
    rep.json["kind"] = "numerical witness";
    rep.json["method"] = e->method;
    rep.json["description"] = e->description;
    json trace = json::array();
    text << "numerical witness (" << e->method << "): " << e->description << "\n";
    for (const auto& p : e->trace) {
      trace.push_back({{"t", to_string(p.t)}, {"value", to_string(p.value)}});
      text << "  t=" << to_string(p.t) << "  value=" << to_string(p.value) << "\n";
    }
    rep.json["trace"] = trace;
    if (e->last_matrix) rep.json["matrix"] = matrix_to_json(e->last_matrix->entries);
  } else {
    const auto& inc = std::get<Inconclusive>(out);
    rep.json["verdict"] = "inconclusive";
    rep.json["reason"] = inc.reason;
    text << "inconclusive: " << inc.reason << "\n";
    rep.exit_code = 2;
  }
  rep.text = text.str();
  return rep;
}

Report run_basics(const Command& cmd) {
  if (!cmd.rank) throw Error(ErrorCode::InvalidInput, "basics needs --n");
  const int n = *cmd.rank;
  Report rep = base_report(cmd);
  rep.json["rank"] = n;
  const long long count = basic_ratio_count(n);
  rep.json["count"] = count;
  if (cmd.count) {
    rep.text = std::to_string(count) + "\n";
    return rep;
  }
  std::ostringstream text;
  json list = json::array();
  for (const auto& b : basic_ratios_all(n)) {
    list.push_back({{"name", b.to_string()}, {"ratio", format_ratio(b.ratio())}});
    text << b.to_string() << "  " << format_ratio(b.ratio()) << "\n";
  }
  rep.json["basics"] = list;
  rep.text = text.str();
  return rep;
}

Report run_transform(const Command& cmd, bool shift) {
  const RatioExpr r = input_ratio(cmd);
  if (cmd.times < 0) throw Error(ErrorCode::InvalidInput, "--times must be nonnegative");
  RatioExpr out = r;
  for (int i = 0; i < cmd.times; ++i) out = shift ? cyclic_shift(out) : reversal(out);
  Report rep = base_report(cmd);
  rep.json["input"] = format_ratio(r);
  rep.json["times"] = cmd.times;
  rep.json["output"] = format_ratio(out);
  std::ostringstream text;
  text << format_ratio(out) << "\n";
  if (cmd.matrix) {
    std::string source;
    TPMatrix a = input_matrix(cmd, r.rank(), source);
    for (int i = 0; i < cmd.times; ++i) a = shift ? shift_matrix(a) : reverse_matrix(a);
    rep.json["matrix"] = matrix_to_json(a.entries);
    rep.json["value"] = to_string(eval_ratio(a, out));
    text << "matrix " << matrix_to_json(a.entries).dump() << "\n";
    text << "value " << to_string(eval_ratio(a, out)) << "\n";
  }
  rep.text = text.str();
  return rep;
}

Report error_report(const Command& cmd, ErrorCode code, const std::string& message,
                    std::optional<std::size_t> offset = std::nullopt) {
  Report rep = base_report(cmd);
  rep.exit_code = 1;
  json err{{"code", std::string(to_string(code))}, {"message", message}};
  if (offset) err["offset"] = *offset;
  rep.json["error"] = err;
  rep.text = "error [" + std::string(to_string(code)) + "]: " + message + "\n";
  return rep;
}

}  // namespace

RatioExpr parse_ratio(std::string_view text, std::optional<int> rank) { return RatioParser(text, rank).parse(); }

std::string format_ratio(const RatioExpr& r) { return r.to_string(); }

Matrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::InvalidInput, "matrix must be a non-empty array of rows");
  const std::size_t n = j.size();
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw Error(ErrorCode::SizeMismatch, "matrix must be square");
    for (std::size_t c = 0; c < n; ++c) {
      const json& e = j[r][c];
      if (e.is_string()) {
        m(r, c) = parse_rational(e.get<std::string>());
      } else if (e.is_number_integer()) {
        m(r, c) = Rational(e.get<long>());
      } else {
        throw Error(ErrorCode::InvalidInput, "matrix entries must be \"num/den\" strings");
      }
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Command parse_command(const std::vector<std::string>& args) {
  Command cmd;
  CLI::App app{"Boundedness of ratios of Pluecker coordinates over totally positive matrices", "tpbound"};
  app.require_subcommand(1, 1);
  const std::vector<std::pair<const char*, const char*>> subs = {
      {"check", "ST0 and (M) verdicts"},
      {"factor", "factor a 2-over-2 ratio into basic ratios"},
      {"eval", "exact value on a given or seeded TP matrix"},
      {"cone", "cone membership with certificate"},
      {"subfree", "subtraction-free test of q - p"},
      {"falsify", "search for numerical growth"},
      {"basics", "list basic ratios"},
      {"shift", "cyclic shift of a ratio (and matrix)"},
      {"reverse", "reversal of a ratio (and matrix)"},
  };
  int rank = 0;
  int budget = 0;
  std::string threshold;
  std::string ladder;
  std::string matrix;
  std::string file;
  for (const auto& [name, help] : subs) {
    CLI::App* s = app.add_subcommand(name, help);
    if (std::string(name) != "basics") s->add_option("ratio", cmd.ratio, "ratio expression");
    s->add_option("--n", rank, "rank n");
    s->add_flag("--json", cmd.json, "JSON output");
    s->add_option("--seed", cmd.seed, "seed for random matrices");
    s->add_option("--budget", budget, "search budget");
    s->add_option("--threshold", threshold, "growth threshold");
    s->add_option("--t-ladder", ladder, "comma-separated t values");
    s->add_option("--matrix", matrix, "matrix as JSON or a path to JSON");
    s->add_option("--file", file, "read the ratio from a file");
    s->add_flag("--count", cmd.count, "print only the count");
    s->add_option("--magnitude", cmd.magnitude, "random weight exponent bound");
    s->add_option("--times", cmd.times, "number of applications");
    s->callback([&cmd, s] { cmd.name = s->get_name(); });
  }
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    throw Error(ErrorCode::InvalidInput, app.help());
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::InvalidInput, e.what());
  }
  for (CLI::App* s : app.get_subcommands()) {
    cmd.name = s->get_name();
    if (s->count("--n")) cmd.rank = rank;
    if (s->count("--budget")) cmd.budget = budget;
    if (s->count("--threshold")) cmd.threshold = threshold;
    if (s->count("--t-ladder")) cmd.t_ladder = ladder;
    if (s->count("--matrix")) cmd.matrix = matrix;
    if (s->count("--file")) cmd.file = file;
  }
  return cmd;
}

Report run(const Command& cmd) {
  try {
    if (cmd.name == "check") return run_check(cmd);
    if (cmd.name == "factor") return run_factor(cmd);
    if (cmd.name == "eval") return run_eval(cmd);
    if (cmd.name == "cone") return run_cone(cmd);
    if (cmd.name == "subfree") return run_subfree(cmd);
    if (cmd.name == "falsify") return run_falsify(cmd);
    if (cmd.name == "basics") return run_basics(cmd);
    if (cmd.name == "shift") return run_transform(cmd, true);
    if (cmd.name == "reverse") return run_transform(cmd, false);
    return error_report(cmd, ErrorCode::InvalidInput, "unknown command '" + cmd.name + "'");
  } catch (const SyntaxError& e) {
    return error_report(cmd, e.code(), e.what(), e.offset());
  } catch (const Error& e) {
    return error_report(cmd, e.code(), e.what());
  }
}

int main_entry(const std::vector<std::string>& args) {
  Command cmd;
  try {
    cmd = parse_command(args);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  const Report rep = run(cmd);
  if (cmd.json) {
    std::cout << rep.json.dump(2) << "\n";
  } else if (rep.exit_code == 1) {
    std::cerr << rep.text;
  } else {
    std::cout << rep.text;
  }
  return rep.exit_code;
}

}  // namespace tpbound::cli
