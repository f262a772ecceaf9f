#include "krfusion/cli.hpp"

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "krfusion/char_oracle.hpp"
#include "krfusion/kostka.hpp"
#include "krfusion/selfcheck.hpp"

namespace krfusion::cli {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t pos() const { return pos_; }

  // Signed integer; nullopt (without consuming) if none present.
  std::optional<long long> integer() {
    skip_ws();
    std::size_t p = pos_;
    bool neg = false;
    if (p < s_.size() && (s_[p] == '-' || s_[p] == '+')) {
      neg = s_[p] == '-';
      ++p;
    }
    const std::size_t digits = p;
    while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
    if (p == digits) return std::nullopt;
    if (p - digits > 9) throw ParseError("integer too large", digits);
    const long long v = std::stoll(s_.substr(digits, p - digits));
    pos_ = p;
    return neg ? -v : v;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

struct Term {
  long long coefficient;
  long long node;
  std::size_t start;
};

// [c '*'] 'w' I
Term parse_term(Cursor& cur) {
  cur.skip_ws();
  Term t{1, 0, cur.pos()};
  if (auto c = cur.integer()) {
    t.coefficient = *c;
    if (!cur.accept('*')) throw ParseError("malformed token: expected '*' after coefficient", cur.pos());
  }
  if (!cur.accept('w') && !cur.accept('W')) throw ParseError("malformed token: expected 'w<node>'", cur.pos());
  const std::size_t node_pos = cur.pos();
  auto node = cur.integer();
  if (!node) throw ParseError("malformed token: expected node index after 'w'", node_pos);
  t.node = *node;
  return t;
}

void check_node(const Term& t, int rank) {
  if (t.node < 1 || (rank > 0 && t.node > rank))
    throw ParseError("node index w" + std::to_string(t.node) + " out of range" +
                         (rank > 0 ? " 1.." + std::to_string(rank) : std::string()),
                     t.start);
}

}  // namespace

AlgebraType parse_algebra(const std::string& token) {
  std::string s;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2) throw ParseError("algebra must look like A3, D4, G2", 0);
  const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (std::string("ABCDEFG").find(fam) == std::string::npos)
    throw ParseError(std::string("unknown Lie algebra family '") + s[0] + "'", 0);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("malformed rank", i);
  if (s.size() > 4) throw ParseError("rank too large", 1);
  AlgebraType t{static_cast<Family>(fam), std::stoi(s.substr(1))};
  validate(t);
  return t;
}

KRWeightSpec parse_weight_spec(const std::string& s, int rank) {
  Cursor cur(s);
  if (cur.done()) throw ParseError("empty weight specification", 0);
  std::vector<KRFactor> factors;
  while (true) {
    const Term t = parse_term(cur);
    if (t.coefficient <= 0) throw ParseError("KR multiple must be positive", t.start);
    check_node(t, rank);
    factors.push_back({static_cast<int>(t.coefficient), static_cast<int>(t.node)});
    if (cur.done()) break;
    if (!cur.accept(',')) throw ParseError("malformed token: expected ','", cur.pos());
  }
  return KRWeightSpec(std::move(factors));
}

DominantWeight parse_lambda(const std::string& s, int rank) {
  Cursor cur(s);
  if (cur.done()) throw ParseError("empty weight", 0);
  Weight w(rank, 0);
  {
    Cursor probe(s);
    if (auto z = probe.integer(); z && *z == 0 && probe.done()) return DominantWeight(w);
  }
  while (true) {
    const Term t = parse_term(cur);
    if (t.coefficient < 0) throw ParseError("weight coefficient must be nonnegative", t.start);
    check_node(t, rank);
    w[t.node - 1] += static_cast<int>(t.coefficient);
    if (cur.done()) break;
    if (!cur.accept('+')) throw ParseError("malformed token: expected '+'", cur.pos());
  }
  return DominantWeight(std::move(w));
}

std::string command_name(Command c) {
  switch (c) {
    case Command::compute: return "compute";
    case Command::table: return "table";
    case Command::verify: return "verify";
    case Command::dims: return "dims";
    case Command::selfcheck: return "selfcheck";
  }
  return "?";
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::kr1: return "kr1";
    case Variant::kr2: return "kr2";
    case Variant::both: return "both";
  }
  return "?";
}

namespace {

Variant parse_variant(const std::string& s) {
  if (s == "kr1") return Variant::kr1;
  if (s == "kr2") return Variant::kr2;
  if (s == "both") return Variant::both;
  throw std::invalid_argument("unknown variant '" + s + "'");
}

}  // namespace

std::string canonical_key(const Request& req) {
  std::string key = "krfusion/1|" + command_name(req.command) + "|" + req.algebra.name() + "|" +
                    req.R.to_string() + "|";
  key += req.lambda ? req.lambda->to_string() : "-";
  key += "|" + variant_name(req.variant) + "|" + (req.strict_vacancy ? "strict" : "occupied");
  return key;
}

std::string cache_file_name(const Request& req) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_key(req)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str() + ".json";
}

// ---------------------------------------------------------------------------
// Computation: every command produces a json result; renderers format it.

namespace {

Json poly_json(const LaurentPoly& p) {
  Json obj = Json::object();
  for (const auto& [e, c] : p.terms()) obj[std::to_string(e)] = c.str();
  return obj;
}

LaurentPoly poly_from_json(const Json& obj) {
  LaurentPoly p;
  for (const auto& [e, c] : obj.items()) p += LaurentPoly::monomial(BigInt(c.get<std::string>()), std::stoll(e));
  return p;
}

Json factors_json(const KRWeightSpec& R) {
  Json arr = Json::array();
  for (const auto& f : R.entries()) arr.push_back(f.to_string());
  return arr;
}

FermionicOptions fermionic_options(const Request& req) {
  return {req.strict_vacancy ? PositivityScope::all : PositivityScope::occupied, std::max(1, req.threads)};
}

Json header(const Request& req) {
  Json doc;
  doc["algebra"] = req.algebra.name();
  doc["R"] = factors_json(req.R);
  return doc;
}

Json evaluate(const AlgebraData& alg, const Request& req, const DominantWeight& lam) {
  Json row;
  row["lambda"] = lam.to_string();
  const bool present = total_m(alg, req.R, lam).has_value();
  if (req.variant != Variant::kr2) {
    const auto p = fermionic_polynomial(alg, req.R, lam, fermionic_options(req));
    row["polynomial"] = poly_json(p);
    row["q1_value"] = eval_at_one(p).str();
  } else {
    row["polynomial"] = nullptr;
    row["q1_value"] = fermionic_kr2(alg, req.R, lam, req.threads).str();
  }
  row["kr2_value"] = req.variant == Variant::both ? Json(fermionic_kr2(alg, req.R, lam, req.threads).str())
                                                  : Json(nullptr);
  row["reason"] = present ? Json(nullptr) : Json("zero-weight condition fails");
  return row;
}

Json compute_result(const AlgebraData& alg, const Request& req) {
  Json doc = header(req);
  const Json row = evaluate(alg, req, *req.lambda);
  doc["lambda"] = row["lambda"];
  doc["variant"] = variant_name(req.variant);
  doc["strict_vacancy"] = req.strict_vacancy;
  for (const char* key : {"polynomial", "q1_value", "kr2_value", "reason"}) doc[key] = row[key];
  return doc;
}

Json table_result(const AlgebraData& alg, const Request& req) {
  Json doc = header(req);
  doc["variant"] = variant_name(req.variant);
  doc["strict_vacancy"] = req.strict_vacancy;
  Json rows = Json::array();
  for (const auto& lam : support_weights(alg, req.R)) {
    Json row = evaluate(alg, req, lam);
    row.erase("reason");
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

Json dims_result(const AlgebraData& alg, const Request& req) {
  const auto opts = fermionic_options(req);
  Json doc = header(req);
  const BigInt total = fermionic_dimension(alg, req.R, opts);
  doc["dimension"] = total.str();
  Json factors = Json::array();
  BigInt product = 1;
  for (const auto& f : req.R.entries()) {
    const BigInt d = fermionic_dimension(alg, KRWeightSpec({f}), opts);
    product *= d;
    factors.push_back(Json{{"factor", f.to_string()}, {"dimension", d.str()}});
  }
  doc["factors"] = std::move(factors);
  doc["product"] = product.str();
  doc["multiplicative"] = product == total;
  return doc;
}

struct Family {
  std::string name;
  bool certified;
};

Family classify(const AlgebraData& alg, const KRWeightSpec& R) {
  const auto fam = alg.type().family;
  bool fundamental = true;
  bool on_node1 = true;
  for (const auto& f : R.entries()) {
    fundamental = fundamental && f.a == 1;
    on_node1 = on_node1 && f.node == 1;
  }
  if (fam == krfusion::Family::A) return {"type A, arbitrary KR factors", true};
  if (fam == krfusion::Family::D && fundamental) return {"type D, fundamental weights", true};
  const bool classical = fam == krfusion::Family::B || fam == krfusion::Family::C || fam == krfusion::Family::D;
  if (classical && on_node1) return {"nonexceptional, multiples of w1", true};
  return {"uncertified", false};
}

Json verify_result(const AlgebraData& alg, const Request& req) {
  const Family family = classify(alg, req.R);
  const auto opts = fermionic_options(req);
  const CharacterOracle oracle(alg);
  const CharacterDecomp decomp = oracle.oracle_decomposition(req.R);
  const auto support = support_weights(alg, req.R);

  Json doc = header(req);
  doc["family"] = family.name;
  doc["certified"] = family.certified;
  Json checks = Json::array();
  int passed = 0, failed = 0, info = 0;
  auto record = [&](const std::string& check, const std::string& lam, const std::string& fermionic,
                    const std::string& expected, bool ok, bool assertable) {
    std::string status = !assertable ? "info" : ok ? "pass" : "fail";
    if (status == "pass") ++passed;
    else if (status == "fail") ++failed;
    else ++info;
    checks.push_back(Json{{"check", check},
                          {"lambda", lam},
                          {"fermionic", fermionic},
                          {"expected", expected},
                          {"match", ok},
                          {"status", status}});
  };

  const bool kostka_applicable =
      alg.type().family == krfusion::Family::A &&
      std::all_of(req.R.entries().begin(), req.R.entries().end(), [](const auto& f) { return f.node == 1; });

  for (const auto& lam : support) {
    const auto poly = fermionic_polynomial(alg, req.R, lam, opts);
    const BigInt kr1 = eval_at_one(poly);
    auto it = decomp.find(lam);
    const BigInt expected = it == decomp.end() ? BigInt(0) : it->second;
    record("kr1_vs_oracle", lam.to_string(), kr1.str(), expected.str(), kr1 == expected, family.certified);
    const BigInt kr2 = fermionic_kr2(alg, req.R, lam, req.threads);
    record("kr1_vs_kr2", lam.to_string(), kr1.str(), kr2.str(), kr1 == kr2, family.certified);
    if (kostka_applicable) {
      const auto cmp = fermionic_vs_kostka(alg, req.R, lam, opts);
      record("kr1_vs_kostka", lam.to_string(), cmp.fermionic.to_string(), cmp.transformed.to_string(), cmp.equal,
             true);
    }
  }
  for (const auto& [lam, mult] : decomp) {
    if (!std::binary_search(support.begin(), support.end(), lam))
      record("oracle_within_support", lam.to_string(), "0", mult.str(), false, true);
  }
  BigInt product = 1;
  for (const auto& f : req.R.entries()) product *= fermionic_dimension(alg, KRWeightSpec({f}), opts);
  const BigInt total = fermionic_dimension(alg, req.R, opts);
  record("dimension_multiplicative", "-", total.str(), product.str(), total == product, family.certified);

  doc["checks"] = std::move(checks);
  doc["passed"] = passed;
  doc["failed"] = failed;
  doc["informational"] = info;
  return doc;
}

Json selfcheck_result(const Request& req) {
  const auto report = run_selfcheck(req.seed, req.cases);
  Json doc;
  doc["seed"] = req.seed;
  doc["cases_per_property"] = req.cases;
  Json props = Json::array();
  for (const auto& p : report.properties) {
    props.push_back(Json{{"name", p.name},
                         {"cases", p.cases},
                         {"failures", p.failures},
                         {"status", p.passed() ? "pass" : "fail"},
                         {"details", p.failure_details}});
  }
  doc["properties"] = std::move(props);
  doc["total_cases"] = report.total_cases();
  doc["passed"] = report.passed();
  return doc;
}

// ---------------------------------------------------------------------------
// Rendering

std::string poly_text(const Json& poly) {
  return poly.is_null() ? std::string("-") : poly_from_json(poly).to_string();
}

void render_text(const Request& req, const Json& doc, std::ostream& out) {
  switch (req.command) {
    case Command::compute: {
      if (req.variant != Variant::kr2) {
        out << "M(q) = " << poly_text(doc["polynomial"]) << "\n";
        if (req.variant == Variant::both) {
          out << "M(1) = " << doc["q1_value"].get<std::string>() << "\n";
          out << "KR2(1) = " << doc["kr2_value"].get<std::string>() << "\n";
        }
      } else {
        out << "KR2(1) = " << doc["q1_value"].get<std::string>() << "\n";
      }
      if (!doc["reason"].is_null()) out << "reason: " << doc["reason"].get<std::string>() << "\n";
      break;
    }
    case Command::table: {
      out << "lambda";
      if (req.variant != Variant::kr2) out << "\tM(q)\tM(1)";
      if (req.variant != Variant::kr1) out << "\tKR2(1)";
      out << "\n";
      for (const auto& row : doc["rows"]) {
        out << row["lambda"].get<std::string>();
        if (req.variant != Variant::kr2)
          out << "\t" << poly_text(row["polynomial"]) << "\t" << row["q1_value"].get<std::string>();
        if (req.variant == Variant::kr2) out << "\t" << row["q1_value"].get<std::string>();
        if (req.variant == Variant::both) out << "\t" << row["kr2_value"].get<std::string>();
        out << "\n";
      }
      break;
    }
    case Command::dims: {
      out << "dim = " << doc["dimension"].get<std::string>() << "\n";
      for (const auto& f : doc["factors"])
        out << "factor " << f["factor"].get<std::string>() << ": " << f["dimension"].get<std::string>() << "\n";
      out << "product = " << doc["product"].get<std::string>() << "\n";
      out << "multiplicative = " << (doc["multiplicative"].get<bool>() ? "yes" : "no") << "\n";
      break;
    }
    case Command::verify: {
      out << "family: " << doc["family"].get<std::string>()
          << (doc["certified"].get<bool>() ? " (certified)" : " (exploratory, no assertions)") << "\n";
      for (const auto& c : doc["checks"]) {
        std::string status = c["status"].get<std::string>();
        for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        out << status << " " << c["check"].get<std::string>() << " lambda=" << c["lambda"].get<std::string>()
            << " fermionic=" << c["fermionic"].get<std::string>()
            << " expected=" << c["expected"].get<std::string>() << "\n";
      }
      out << "verify: " << doc["passed"].get<int>() << " passed, " << doc["failed"].get<int>() << " failed, "
          << doc["informational"].get<int>() << " informational\n";
      break;
    }
    case Command::selfcheck: {
      for (const auto& p : doc["properties"]) {
        out << (p["status"].get<std::string>() == "pass" ? "PASS " : "FAIL ") << p["name"].get<std::string>()
            << " (" << p["cases"].get<int>() << " cases, " << p["failures"].get<int>() << " failures)\n";
        for (const auto& d : p["details"]) out << "  " << d.get<std::string>() << "\n";
      }
      out << "selfcheck: " << doc["total_cases"].get<int>() << " cases, "
          << (doc["passed"].get<bool>() ? "all passed" : "FAILURES") << "\n";
      break;
    }
  }
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_csv(const Json& doc, std::ostream& out) {
  out << "lambda,polynomial,q1_value,kr2_value\n";
  for (const auto& row : doc["rows"]) {
    out << row["lambda"].get<std::string>() << ","
        << (row["polynomial"].is_null() ? std::string() : csv_field(poly_text(row["polynomial"]))) << ","
        << row["q1_value"].get<std::string>() << ","
        << (row["kr2_value"].is_null() ? std::string() : row["kr2_value"].get<std::string>()) << "\n";
  }
}

int usage_error(const Request& req, const std::string& message, std::ostream& out, std::ostream& err) {
  if (req.format == Format::json) {
    out << Json{{"error", Json{{"kind", "usage"}, {"message", message}}}}.dump(2) << "\n";
  } else {
    err << "error: " << message << "\n";
  }
  return kExitUsage;
}

std::optional<Json> cache_load(const std::filesystem::path& file, const std::string& key) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    Json doc = Json::parse(in);
    if (doc.at("key").get<std::string>() != key) return std::nullopt;
    return doc.at("result");
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_store(const std::filesystem::path& dir, const std::filesystem::path& file, const std::string& key,
                 const Json& result) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) return;
    os << Json{{"key", key}, {"result", result}}.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, file, ec);
}

}  // namespace

int run(const Request& req, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const bool needs_lambda = req.command == Command::compute;
  const bool forbids_lambda =
      req.command == Command::table || req.command == Command::dims || req.command == Command::verify;
  if (needs_lambda && !req.lambda) return usage_error(req, "compute requires --lambda", out, err);
  if (forbids_lambda && req.lambda)
    return usage_error(req, command_name(req.command) + " does not take --lambda", out, err);
  if (req.format == Format::csv && req.command != Command::table)
    return usage_error(req, "csv output is only available for table", out, err);

  Json result;
  try {
    if (req.command == Command::selfcheck) {
      result = selfcheck_result(req);
    } else {
      const AlgebraData alg(req.algebra);
      req.R.check_rank(alg.rank());
      if (req.lambda && req.lambda->rank() != alg.rank())
        return usage_error(req, "lambda rank does not match algebra", out, err);

      const bool cacheable = req.cache_dir && req.command != Command::verify;
      std::optional<Json> cached;
      std::filesystem::path file;
      if (cacheable) {
        file = std::filesystem::path(*req.cache_dir) / cache_file_name(req);
        cached = cache_load(file, canonical_key(req));
      }
      if (cached) {
        result = std::move(*cached);
      } else {
        switch (req.command) {
          case Command::compute: result = compute_result(alg, req); break;
          case Command::table: result = table_result(alg, req); break;
          case Command::dims: result = dims_result(alg, req); break;
          case Command::verify: result = verify_result(alg, req); break;
          case Command::selfcheck: break;
        }
        if (cacheable) cache_store(*req.cache_dir, file, canonical_key(req), result);
      }
    }
  } catch (const std::invalid_argument& e) {
    return usage_error(req, e.what(), out, err);
  }

  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  switch (req.format) {
    case Format::json: {
      Json doc = result;
      doc["elapsed_ms"] = elapsed;
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::csv: render_csv(result, out); break;
    case Format::text: render_text(req, result, out); break;
  }

  if (req.command == Command::verify && result["failed"].get<int>() > 0) return kExitVerifyFailed;
  if (req.command == Command::selfcheck && !result["passed"].get<bool>()) return kExitVerifyFailed;
  return kExitOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fermionic multiplicities of fusion products of Kirillov-Reshetikhin modules"};
  app.name("krfusion");
  std::string command;
  std::string algebra;
  std::string weights;
  std::string lambda;
  std::string variant = "kr1";
  std::string format = "text";
  bool strict = false;
  std::string cache_dir;
  int threads = 1;
  std::uint64_t seed = 1;
  int cases = 20;

  app.add_option("command", command, "compute | table | verify | dims | selfcheck")
      ->required()
      ->check(CLI::IsMember({"compute", "table", "verify", "dims", "selfcheck"}));
  app.add_option("--algebra,-a", algebra, "Lie algebra, e.g. A2, D4, G2");
  app.add_option("--weights,-R", weights, "KR factors, e.g. \"2*w1,w1,1*w3\"");
  app.add_option("--lambda,-l", lambda, "dominant weight, e.g. \"0\" or \"2*w1+w3\"");
  app.add_option("--variant", variant, "kr1 | kr2 | both")->check(CLI::IsMember({"kr1", "kr2", "both"}));
  app.add_option("--format", format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--strict-vacancy", strict, "require P >= 0 on support(m) and support(n)");
  auto* cache_opt = app.add_option("--cache-dir", cache_dir, "result cache directory");
  auto* threads_opt = app.add_option("--threads", threads, "worker threads per fermionic sum")
                          ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "selfcheck random seed");
  app.add_option("--cases", cases, "selfcheck cases per property")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'krfusion --help' for usage\n";
    return kExitUsage;
  }

  Request req;
  req.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  try {
    if (command == "compute") req.command = Command::compute;
    else if (command == "table") req.command = Command::table;
    else if (command == "verify") req.command = Command::verify;
    else if (command == "dims") req.command = Command::dims;
    else req.command = Command::selfcheck;
    req.variant = parse_variant(variant);
    req.strict_vacancy = strict;
    req.seed = seed;
    req.cases = cases;

    if (cache_opt->count() > 0) {
      req.cache_dir = cache_dir;
    } else if (const char* env = std::getenv("KRFUSION_CACHE_DIR"); env && *env) {
      req.cache_dir = std::string(env);
    }
    if (threads_opt->count() > 0) {
      req.threads = threads;
    } else if (const char* env = std::getenv("KRFUSION_THREADS"); env && *env) {
      req.threads = std::max(1, std::atoi(env));
    }

    if (req.command != Command::selfcheck) {
      if (algebra.empty()) return usage_error(req, "--algebra is required", out, err);
      if (weights.empty()) return usage_error(req, "--weights is required", out, err);
      req.algebra = parse_algebra(algebra);
      req.R = parse_weight_spec(weights, req.algebra.rank);
      if (!lambda.empty()) req.lambda = parse_lambda(lambda, req.algebra.rank);
    }
  } catch (const std::invalid_argument& e) {
    return usage_error(req, e.what(), out, err);
  }
  return run(req, out, err);
}

ComputeDocument parse_compute_json(const std::string& text) {
  const Json doc = Json::parse(text);
  ComputeDocument d;
  d.algebra = parse_algebra(doc.at("algebra").get<std::string>());
  std::string spec;
  for (const auto& f : doc.at("R")) {
    if (!spec.empty()) spec += ",";
    spec += f.get<std::string>();
  }
  d.R = parse_weight_spec(spec, d.algebra.rank);
  d.lambda = parse_lambda(doc.at("lambda").get<std::string>(), d.algebra.rank);
  d.variant = parse_variant(doc.at("variant").get<std::string>());
  if (!doc.at("polynomial").is_null()) d.polynomial = poly_from_json(doc.at("polynomial"));
  d.q1_value = BigInt(doc.at("q1_value").get<std::string>());
  if (!doc.at("kr2_value").is_null()) d.kr2_value = BigInt(doc.at("kr2_value").get<std::string>());
  return d;
}

}  // namespace krfusion::cli
