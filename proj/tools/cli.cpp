#include "cli.hpp"

#include "CLI11.hpp"
#include "optcyc/analysis.hpp"
#include "optcyc/claims.hpp"
#include "optcyc/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <sstream>

namespace optcyc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(Errc e) {
  switch (e) {
    case Errc::SingularSystem:
    case Errc::NonIntegerSolution:
    case Errc::InexactDivision:
    case Errc::RankDeficient:
    case Errc::NotCyclic:
    case Errc::ZeroCode:
      return kMismatch;
    default:
      return kUsage;
  }
}

std::uint64_t parse_uint(const std::string& s, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || s.front() == '-') throw UsageError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

TowerPtr make_tower(std::uint32_t p, std::uint32_t m, const RunConfig& c) {
  TowerOptions opt;
  opt.max_q = c.max_q;
  if (c.base_modulus) opt.base_modulus = parse_coeffs(*c.base_modulus);
  if (c.top_modulus) opt.top_modulus = parse_coeffs(*c.top_modulus);
  return std::make_shared<const FieldTower>(FieldTower::build(p, m, opt));
}

std::pair<std::uint32_t, std::uint32_t> factor_or_throw(std::uint64_t q) {
  const auto pm = factor_prime_power(q);
  if (!pm) throw UsageError("q=" + std::to_string(q) + " is not a prime power");
  return *pm;
}

TowerPtr resolve_tower(const RunConfig& c) {
  if (c.q) {
    const auto [p, m] = factor_or_throw(*c.q);
    if ((c.p && *c.p != p) || (c.m && *c.m != m)) {
      throw UsageError("--p/--m conflict with --q " + std::to_string(*c.q));
    }
    return make_tower(p, m, c);
  }
  if (!c.p) throw UsageError("one of --q or --p is required");
  return make_tower(*c.p, c.m.value_or(1), c);
}

Json enumerator_json(const WeightDistribution& d) {
  Json a = Json::array();
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    if (d.counts[i] != 0) a.push_back(Json::array({i, d.counts[i].str()}));
  }
  return a;
}

std::string enumerator_from_json(const Json& a) {
  WeightDistribution d;
  for (const auto& e : a) {
    const auto w = e[0].get<std::size_t>();
    if (w >= d.counts.size()) d.counts.resize(w + 1);
    d.counts[w] = BigInt(e[1].get<std::string>());
  }
  d.n = d.counts.empty() ? 0 : d.counts.size() - 1;
  return format_enumerator(d);
}

Json field_json(const FieldTower& t) {
  return {{"p", t.p()},
          {"m", t.m()},
          {"base_modulus", format_coeffs(t.base_modulus())},
          {"top_modulus", format_coeffs(t.top_modulus())}};
}

Json code_json(const CodeHandle& code, const WeightDistribution& dist, std::size_t d) {
  const std::uint64_t q = code.tower().q();
  const BigInt bound = griesmer_bound(q, code.k(), d);
  return {{"name", code.describe()},
          {"n", code.n()},
          {"k", code.k()},
          {"d", d},
          {"optimal", is_length_optimal(code, d)},
          {"griesmer_bound", bound.str()},
          {"enumerator", enumerator_json(dist)}};
}

WeightDistribution primal_distribution(const CodeHandle& code, const RunConfig& c) {
  return enumerate_code(code, c.max_enumeration);
}

void check_closed_form(std::uint64_t q, const WeightDistribution& dist) {
  if (dist != expected_enumerator_primal(q)) {
    throw MismatchError("enumerated distribution " + format_enumerator(dist) + " differs from closed form " +
                        format_enumerator(expected_enumerator_primal(q)));
  }
}

Json cmd_build(const RunConfig& c) {
  const TowerPtr tower = resolve_tower(c);
  const std::uint32_t q = tower->q();
  const CodePtr code = build_central_code(tower);
  const auto dist = primal_distribution(*code, c);
  const auto closed = expected_enumerator_primal(q);
  const std::size_t d = min_distance(dist);

  Json doc;
  doc["q"] = q;
  doc["field"] = field_json(*tower);
  Json cj = code_json(*code, dist, d);
  cj["closed_form"] = format_enumerator(closed);
  cj["matches_closed_form"] = dist == closed;
  Json rows = Json::array();
  for (const auto& r : code->generator().row_list()) rows.push_back(format_word(r));
  cj["generator_matrix"] = rows;
  cj["generator_polynomial"] = format_poly(generator_polynomial(*code));
  cj["parity_check_polynomial"] = format_poly(parity_check_polynomial(*code));
  Json words = Json::array();
  for (std::uint32_t b = 0; b < 2; ++b) {
    words.push_back({{"beta", "gamma^" + std::to_string(b)},
                     {"word", format_word(irr_codeword(*tower, q + 1, Fq2Element::from_log(b)))}});
  }
  cj["trace_words"] = words;
  doc["code"] = cj;
  Json notes = Json::array();
  if (q == 2) notes.push_back("dual is the null code; the binary case has no dual results");
  doc["notes"] = notes;
  if (dist != closed) throw MismatchError("enumerated distribution differs from closed form");
  return doc;
}

Json cmd_dual(const RunConfig& c) {
  const TowerPtr tower = resolve_tower(c);
  const std::uint32_t q = tower->q();
  if (q < 3) throw UsageError("dual needs q >= 3; for q=2 the dual is the null code");
  const CodePtr code = build_central_code(tower);
  const auto dist = primal_distribution(*code, c);
  check_closed_form(q, dist);
  const CodePtr dual = dual_code(code);
  const auto transformed = dual_distribution_transform(dist, q, 3);
  const auto closed = dual_distribution_closed_form(q);
  std::optional<WeightDistribution> brute;
  try {
    brute = enumerate_code(*dual, c.max_enumeration);
  } catch (const Error& e) {
    if (e.code() != Errc::EnumerationTooLarge) throw;
  }
  const bool agree = transformed == closed && (!brute || *brute == transformed);
  const std::size_t dd = min_distance(transformed);

  Json doc;
  doc["q"] = q;
  doc["code"] = code_json(*code, dist, min_distance(dist));
  Json dj = code_json(*dual, transformed, dd);
  dj["A4"] = a4_dual(q).str();
  if (q >= 4) dj["A5"] = a5_dual(q).str();
  dj["weights"] = transformed.nonzero_weights().size();
  dj["methods"] = {{"brute_force", brute ? Json(format_enumerator(*brute)) : Json(nullptr)},
                   {"transform", format_enumerator(transformed)},
                   {"closed_form", format_enumerator(closed)}};
  dj["methods_agree"] = agree;
  doc["dual"] = dj;
  Json notes = Json::array();
  if (!brute) notes.push_back("brute force above --max-enumeration; transform and closed form compared");
  if (transformed.nonzero_weights().size() == 1) {
    notes.push_back("dual is a one-weight [" + std::to_string(dual->n()) + "," + std::to_string(dual->k()) +
                    "] code with weight " + std::to_string(transformed.nonzero_weights().front()));
  }
  doc["notes"] = notes;
  if (!agree) throw MismatchError("dual distribution methods disagree");
  return doc;
}

Json cmd_verify(const RunConfig& c, int& exit_code) {
  const TowerPtr tower = resolve_tower(c);
  std::vector<std::string> scope = c.claims;
  for (const auto& id : scope) {
    const auto ids = claim_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw UsageError("unknown claim id '" + id + "'");
  }
  ClaimOptions opt;
  opt.dual_enumeration_cap = c.max_enumeration;
  const auto reports = verify_claims(tower, scope, opt);
  Json doc;
  doc["q"] = tower->q();
  Json claims = Json::array();
  for (const auto& r : reports) {
    claims.push_back({{"id", r.id},
                      {"status", std::string(to_string(r.status))},
                      {"witness", r.witness ? Json(*r.witness) : Json(nullptr)},
                      {"detail", r.detail}});
    if (r.status == ClaimStatus::Failed) exit_code = kClaimFailure;
  }
  doc["claims"] = claims;
  return doc;
}

Json table_row(std::uint64_t qv, const RunConfig& c) {
  const auto [p, m] = factor_or_throw(qv);
  RunConfig plain = c;
  plain.base_modulus.reset();
  plain.top_modulus.reset();
  const TowerPtr tower = make_tower(p, m, plain);
  const std::uint32_t q = tower->q();
  const CodePtr code = build_central_code(tower);
  const auto dist = primal_distribution(*code, c);
  check_closed_form(q, dist);
  const std::size_t d = min_distance(dist);
  Json row;
  row["q"] = q;
  row["n"] = code->n();
  row["k"] = code->k();
  row["d"] = d;
  if (q >= 3) {
    const auto dual_dist = dual_distribution_transform(dist, q, 3);
    if (dual_dist != dual_distribution_closed_form(q)) throw MismatchError("dual closed form mismatch at q=" + std::to_string(q));
    const std::size_t dd = min_distance(dual_dist);
    const CodePtr dual = dual_code(code);
    row["d_dual"] = dd;
    row["A_q"] = dist.counts[q].str();
    row["A4_dual"] = dual_dist.counts[4].str();
    row["primal_optimal"] = is_length_optimal(*code, d);
    row["dual_optimal"] = is_length_optimal(*dual, dd);
  } else {
    row["d_dual"] = nullptr;
    row["A_q"] = dist.counts[q].str();
    row["A4_dual"] = nullptr;
    row["primal_optimal"] = is_length_optimal(*code, d);
    row["dual_optimal"] = nullptr;
  }
  return row;
}

Json cmd_table(const RunConfig& c) {
  if (c.q_list.empty()) throw UsageError("--q-list is required");
  std::vector<std::uint64_t> qs;
  for (const auto& s : c.q_list) {
    const auto v = parse_uint(s, "q");
    factor_or_throw(v);
    qs.push_back(v);
  }
  Json rows = Json::array();
  for (auto q : qs) rows.push_back(table_row(q, c));
  return {{"rows", rows}};
}

Codeword parse_frame(const std::string& text, std::uint32_t q) {
  Codeword w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto v = parse_uint(tok, "frame symbol");
    if (v >= q) throw UsageError("frame symbol " + tok + " outside F_" + std::to_string(q));
    w.push_back(FqElement{static_cast<std::uint32_t>(v)});
  }
  if (w.empty()) throw UsageError("empty frame");
  return w;
}

Json decode_json(const std::string& frame, const DecodeResult& r) {
  Json j{{"frame", frame}, {"verdict", std::string(to_string(r.verdict))}};
  if (r.verdict == DecodeVerdict::Corrected) {
    j["position"] = r.position;
    j["magnitude"] = r.magnitude.code;
  }
  j["decoded"] = r.verdict == DecodeVerdict::Detected ? Json(nullptr) : Json(format_word(r.word));
  return j;
}

Json cmd_decode(const RunConfig& c, int& exit_code) {
  const TowerPtr tower = resolve_tower(c);
  const std::uint32_t q = tower->q();
  if (q < 3) throw UsageError("decode needs q >= 3; for q=2 the dual is the null code");
  if (!c.demo && c.frames.empty()) throw UsageError("give frames or --demo N");
  const CodePtr dual = dual_code(build_central_code(tower));
  const BaseField& f = tower->base();
  const std::size_t n = dual->n();

  Json doc;
  doc["q"] = q;
  Json frames = Json::array();
  for (const auto& text : c.frames) {
    const Codeword w = parse_frame(text, q);
    if (w.size() != n) throw UsageError("frame '" + text + "' has length " + std::to_string(w.size()) + ", expected " + std::to_string(n));
    frames.push_back(decode_json(text, syndrome_decode(*dual, w)));
  }
  doc["frames"] = frames;

  if (c.demo) {
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<std::uint32_t> sym(0, q - 1), nonzero(1, q - 1);
    std::uniform_int_distribution<std::size_t> pos(0, n - 1);
    std::uint64_t clean = 0, corrected = 0, detected = 0, wrong = 0;
    for (std::uint64_t i = 0; i < *c.demo; ++i) {
      Codeword word(n);
      for (std::size_t r = 0; r < dual->k(); ++r) {
        word = add_words(f, word, scalar_mul(f, {sym(rng)}, dual->generator().row(r)));
      }
      clean += syndrome_decode(*dual, word).verdict == DecodeVerdict::Clean;

      Codeword one = word;
      const std::size_t at = pos(rng);
      one[at] = f.add(one[at], {nonzero(rng)});
      const auto r1 = syndrome_decode(*dual, one);
      if (r1.verdict == DecodeVerdict::Corrected && r1.word == word) {
        ++corrected;
      } else {
        ++wrong;
      }

      Codeword two = word;
      const std::size_t a = pos(rng);
      std::size_t b = pos(rng);
      while (b == a) b = pos(rng);
      two[a] = f.add(two[a], {nonzero(rng)});
      two[b] = f.add(two[b], {nonzero(rng)});
      detected += syndrome_decode(*dual, two).verdict == DecodeVerdict::Detected;
    }
    doc["demo"] = {{"seed", c.seed},         {"codewords", *c.demo}, {"clean", clean},
                   {"single_errors", *c.demo}, {"corrected", corrected}, {"double_errors", *c.demo},
                   {"detected", detected},     {"failures", wrong}};
    if (clean != *c.demo || corrected != *c.demo || detected != *c.demo) exit_code = kMismatch;
  }
  return doc;
}

Json cmd_field_info(const RunConfig& c) {
  const TowerPtr tower = resolve_tower(c);
  const FieldTower& t = *tower;
  const auto poly = [](const CoeffList& cl) {
    std::vector<FqElement> v;
    for (auto x : cl) v.push_back({x});
    return format_poly(FqPoly(v));
  };
  Json doc;
  doc["q"] = t.q();
  doc["p"] = t.p();
  doc["m"] = t.m();
  doc["base_modulus"] = format_coeffs(t.base_modulus());
  doc["base_polynomial"] = poly(t.base_modulus());
  doc["top_modulus"] = format_coeffs(t.top_modulus());
  doc["top_polynomial"] = poly(t.top_modulus());
  doc["extension_order"] = t.order();
  doc["subfield_generator"] = "gamma^" + std::to_string(t.q() + 1);
  Json powers = Json::array();
  const std::uint32_t shown = std::min<std::uint32_t>(t.order(), 8);
  for (std::uint32_t e = 0; e < shown; ++e) {
    const auto [a0, a1] = t.coefficients(Fq2Element::from_log(e));
    powers.push_back({{"exponent", e}, {"a0", a0.code}, {"a1", a1.code}});
  }
  doc["gamma_powers"] = powers;
  return doc;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const std::string& prefix, const Json& v, std::ostringstream& os) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(prefix.empty() ? k : prefix + "." + k, x, os);
    return;
  }
  if (v.is_array()) {
    if (v.empty()) return;
    const bool pairs = !v.empty() && v.front().is_array();
    if (pairs) {
      os << prefix << "=" << enumerator_from_json(v) << "\n";
      return;
    }
    const bool objects = !v.empty() && v.front().is_object();
    if (objects) {
      for (std::size_t i = 0; i < v.size(); ++i) flatten(prefix + "[" + std::to_string(i) + "]", v[i], os);
      return;
    }
    std::string joined;
    for (std::size_t i = 0; i < v.size(); ++i) joined += (i ? " | " : "") + scalar_text(v[i]);
    os << prefix << "=" << joined << "\n";
    return;
  }
  os << prefix << "=" << scalar_text(v) << "\n";
}

std::string csv_field(const Json& v) {
  std::string s = scalar_text(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

const std::vector<std::string> kTableColumns = {"q",   "n",       "k",
                                                "d",   "d_dual",  "A_q",
                                                "A4_dual", "primal_optimal", "dual_optimal"};

std::string csv_rows(const std::vector<std::string>& cols, const std::vector<Json>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << (r.contains(cols[i]) ? csv_field(r[cols[i]]) : "");
    os << "\n";
  }
  return os.str();
}

std::string text_table(const std::vector<Json>& rows) {
  std::vector<std::vector<std::string>> cells{kTableColumns};
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (const auto& c : kTableColumns) line.push_back(scalar_text(r[c]));
    cells.push_back(line);
  }
  std::vector<std::size_t> width(kTableColumns.size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  std::ostringstream os;
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << std::setw(static_cast<int>(width[i])) << line[i] << (i + 1 < line.size() ? "  " : "\n");
    }
  }
  return os.str();
}

std::string verify_text(const Json& doc) {
  std::ostringstream os;
  for (const auto& c : doc["claims"]) {
    os << std::left << std::setw(15) << c["id"].get<std::string>() << " q=" << doc["q"].get<std::uint32_t>() << " "
       << std::setw(8) << c["status"].get<std::string>();
    if (c["witness"].is_string()) {
      os << " witness: " << c["witness"].get<std::string>();
    } else if (!c["detail"].get<std::string>().empty()) {
      os << " " << c["detail"].get<std::string>();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

Json report(const RunConfig& c, int& exit_code) {
  exit_code = kOk;
  if (c.command == "build") return cmd_build(c);
  if (c.command == "dual") return cmd_dual(c);
  if (c.command == "verify") return cmd_verify(c, exit_code);
  if (c.command == "table") return cmd_table(c);
  if (c.command == "decode") return cmd_decode(c, exit_code);
  if (c.command == "field-info") return cmd_field_info(c);
  throw UsageError("unknown command '" + c.command + "'");
}

std::string render_text(const Json& doc) {
  if (doc.contains("claims")) return verify_text(doc);
  if (doc.contains("rows")) return text_table(doc["rows"].get<std::vector<Json>>());
  std::ostringstream os;
  flatten("", doc, os);
  return os.str();
}

std::string render_csv(const std::string& command, const Json& doc) {
  if (command == "table") return csv_rows(kTableColumns, doc["rows"].get<std::vector<Json>>());
  if (command == "verify") {
    std::vector<Json> rows;
    for (auto c : doc["claims"]) {
      c["q"] = doc["q"];
      rows.push_back(c);
    }
    return csv_rows({"id", "q", "status", "detail", "witness"}, rows);
  }
  if (command == "decode") {
    std::vector<Json> rows = doc["frames"].get<std::vector<Json>>();
    std::string out = csv_rows({"frame", "verdict", "position", "magnitude", "decoded"}, rows);
    if (doc.contains("demo")) {
      std::vector<Json> demo{doc["demo"]};
      std::vector<std::string> cols;
      for (const auto& [k, v] : doc["demo"].items()) cols.push_back(k);
      out += csv_rows(cols, demo);
    }
    return out;
  }
  if (command == "build" || command == "dual") {
    const Json& code = doc["code"];
    Json row{{"q", doc["q"]}, {"n", code["n"]}, {"k", code["k"]}, {"d", code["d"]}};
    std::string aq;
    for (const auto& e : code["enumerator"])
      if (e[0] == doc["q"]) aq = e[1].get<std::string>();
    row["A_q"] = aq;
    row["primal_optimal"] = code["optimal"];
    if (doc.contains("dual")) {
      row["d_dual"] = doc["dual"]["d"];
      row["A4_dual"] = doc["dual"]["A4"];
      row["dual_optimal"] = doc["dual"]["optimal"];
    }
    return csv_rows(kTableColumns, {row});
  }
  std::vector<std::string> cols;
  Json row;
  for (const auto& [k, v] : doc.items()) {
    if (v.is_structured()) continue;
    cols.push_back(k);
    row[k] = v;
  }
  return csv_rows(cols, {row});
}

Result execute(const RunConfig& c) {
  Result res;
  try {
    int code = kOk;
    const Json doc = report(c, code);
    res.exit_code = code;
    switch (c.format) {
      case Format::Json: res.out = doc.dump(2) + "\n"; break;
      case Format::Csv: res.out = render_csv(c.command, doc); break;
      case Format::Text: res.out = render_text(doc); break;
    }
    if (code == kMismatch) res.err = "internal cross-check failed\n";
  } catch (const UsageError& e) {
    res = {kUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const MismatchError& e) {
    res = {kMismatch, "", std::string("mismatch: ") + e.what() + "\n"};
  } catch (const Error& e) {
    res = {exit_code_for(e.code()), "", std::string("error: ") + e.what() + "\n"};
  }
  return res;
}

Result run(const std::vector<std::string>& args) {
  CLI::App app{"optimal cyclic codes over F_q from the tower F_q < F_{q^2}", "optcyc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "optcyc 0.1.0");

  RunConfig c;
  std::uint64_t q = 0, demo = 0;
  std::uint32_t p = 0, m = 0;
  std::string base, top, format = "text";

  struct Opts {
    CLI::Option *q, *p, *m, *base, *top, *demo;
  };
  std::vector<std::pair<CLI::App*, Opts>> subs;
  const auto add = [&](const std::string& name, const std::string& desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    Opts o{};
    o.q = s->add_option("--q", q, "field size (prime power)");
    o.p = s->add_option("--p", p, "characteristic");
    o.m = s->add_option("--m", m, "extension degree of F_q over F_p");
    o.base = s->add_option("--base-modulus", base, "F_q modulus, ascending coefficients, e.g. 1,1,0,1");
    o.top = s->add_option("--top-modulus", top, "F_{q^2} modulus over F_q, ascending coefficients");
    s->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    s->add_option("--max-enumeration", c.max_enumeration, "cap on brute-force enumeration")
        ->check(CLI::PositiveNumber);
    s->add_option("--max-q", c.max_q, "largest accepted field size")->check(CLI::PositiveNumber);
    o.demo = nullptr;
    subs.emplace_back(s, o);
    return s;
  };
  add("build", "build C(1,q+1,q^2) and report its parameters");
  add("dual", "dual code, compared across three methods");
  CLI::App* verify = add("verify", "run the claim checks");
  verify->add_option("--claims", c.claims, "comma separated claim ids")->delimiter(',');
  CLI::App* table = add("table", "one summary row per q");
  table->add_option("--q-list", c.q_list, "comma separated field sizes")->delimiter(',')->required();
  CLI::App* decode = add("decode", "radius-1 syndrome decoding on the dual");
  subs.back().second.demo = decode->add_option("--demo", demo, "random codewords with injected errors");
  decode->add_option("--seed", c.seed, "demo RNG seed");
  decode->add_option("frames", c.frames, "received words, comma separated symbols");
  add("field-info", "field tower and moduli");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    return {kOk, app.help(), ""};
  } catch (const CLI::CallForAllHelp&) {
    return {kOk, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::CallForVersion& e) {
    return {kOk, std::string(e.what()) + "\n", ""};
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::string h;
      for (auto* s : app.get_subcommands()) h = s->help();
      return {kOk, h.empty() ? app.help() : h, ""};
    }
    return {kUsage, "", std::string("error: ") + e.what() + "\n"};
  }

  for (auto& [s, o] : subs) {
    if (!s->parsed()) continue;
    c.command = s->get_name();
    if (o.q->count()) c.q = q;
    if (o.p->count()) c.p = p;
    if (o.m->count()) c.m = m;
    if (o.base->count()) c.base_modulus = base;
    if (o.top->count()) c.top_modulus = top;
    if (o.demo && o.demo->count()) c.demo = demo;
  }
  c.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  return execute(c);
}

}  // namespace optcyc::cli
