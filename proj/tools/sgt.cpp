// sgt: generate graphs, compute spectra, tabulate character sums, audit bounds.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "report_json.hpp"
#include "sgt/characters.hpp"
#include "sgt/corpus.hpp"
#include "sgt/isomorphism.hpp"

namespace {

using namespace sgt;
using io::Json;

constexpr const char* kVersion = "0.1.0";

struct Config {
  std::string command;
  std::vector<std::string> source, other;
  std::string out = "edgelist", kind = "adjacency", file, caps_text, config_file, sum = "all", fixtures;
  std::uint64_t seed = 0x5eed;
  bool json = false, closed_form = false;
  u64 q = 0, sub = 0;
  Caps caps;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "chi=64,beta=24,iso=32": caps may only be lowered
void parse_caps(const std::string& text, Caps& caps) {
  const Caps def;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Usage("bad cap '" + item + "', expected key=value");
    std::string k = item.substr(0, eq);
    double v;
    try {
      v = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Usage("bad cap value in '" + item + "'");
    }
    auto set = [&](std::size_t& slot, std::size_t maxv) {
      if (v < 0 || v > (double)maxv) throw Usage("cap " + k + " can only be lowered (default " + std::to_string(maxv) + ")");
      slot = (std::size_t)v;
    };
    if (k == "chi") set(caps.chi, def.chi);
    else if (k == "iota") set(caps.iota, def.iota);
    else if (k == "beta") set(caps.beta, def.beta);
    else if (k == "iso") set(caps.iso, def.iso);
    else if (k == "budget") {
      if (v < 0 || v > def.budget_seconds) throw Usage("cap budget can only be lowered");
      caps.budget_seconds = v;
    } else {
      throw Usage("unknown cap '" + k + "'");
    }
  }
}

Json config_json(const Config& c) {
  Json j{{"command", c.command}, {"seed", c.seed}};
  if (!c.source.empty()) j["source"] = c.source;
  if (!c.other.empty()) j["other"] = c.other;
  if (c.command == "gen") j["out"] = c.out;
  if (c.command == "spec") j["kind"] = c.kind, j["closed_form"] = c.closed_form;
  if (c.command == "chars") j["q"] = c.q, j["sum"] = c.sum, j["sub"] = c.sub;
  j["caps"] = {{"chi", c.caps.chi}, {"iota", c.caps.iota}, {"beta", c.caps.beta}, {"iso", c.caps.iso},
               {"budget_seconds", c.caps.budget_seconds}};
  return j;
}

Json envelope(const Config& c) { return Json{{"tool", {{"name", "sgt"}, {"version", kVersion}}}, {"config", config_json(c)}}; }

// a graph source is an edge-list file or a family description
struct Source {
  Graph graph;
  std::optional<FamilySpec> spec;
};

// "paley 13" -> {"paley", "13"}; a file path stays whole
std::vector<std::string> words(const std::string& text) {
  if (std::filesystem::is_regular_file(text)) return {text};
  std::istringstream ss(text);
  std::vector<std::string> out;
  for (std::string w; ss >> w;) out.push_back(w);
  return out;
}

Source load(const std::vector<std::string>& words) {
  if (words.empty()) throw Usage("missing graph source");
  if (words.size() == 1 && std::filesystem::is_regular_file(words[0])) {
    std::ifstream in(words[0]);
    Graph g = parse_edge_list(in);
    g.set_name(std::filesystem::path(words[0]).stem().string());
    return {g, std::nullopt};
  }
  auto s = parse_family(words);
  return {build(s), s};
}

std::ostream* sink(const Config& c, std::ofstream& f) {
  if (c.file.empty()) return &std::cout;
  f.open(c.file);
  if (!f) throw Usage("cannot open " + c.file);
  return &f;
}

int cmd_gen(const Config& c) {
  auto src = load(c.source);
  std::ofstream f;
  auto& os = *sink(c, f);
  if (c.out == "edgelist") os << to_edge_list(src.graph);
  else if (c.out == "dot") os << to_dot(src.graph);
  else {
    Json j = envelope(c);
    j["graph"] = io::to_json(src.graph);
    os << j.dump(2) << "\n";
  }
  return 0;
}

MatrixKind parse_kind(const std::string& k) { return k == "laplacian" ? MatrixKind::Laplacian : MatrixKind::Adjacency; }

int cmd_spec(const Config& c) {
  auto src = load(c.source);
  const MatrixKind kind = parse_kind(c.kind);
  auto s = spectrum(src.graph, kind);
  Json j = envelope(c);
  j["graph"] = src.graph.name();
  j["spectrum"] = io::to_json(s);
  int status = 0;
  if (c.closed_form) {
    if (!src.spec) {
      j["closed_form"] = {{"available", false}, {"reason", "edge-list input has no family"}};
    } else {
      try {
        auto cf = closed_form_spectrum(*src.spec, kind);
        auto r = check_closed_form(s, cf);
        j["closed_form"] = io::to_json(cf);
        j["closed_form"]["pass"] = r.pass;
        j["closed_form"]["max_error"] = r.max_error;
        if (!r.pass) j["closed_form"]["message"] = r.message, status = 1;
      } catch (const Error& e) {
        j["closed_form"] = {{"available", false}, {"reason", e.what()}};
      }
    }
  }
  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << src.graph.name() << " " << kind_name(kind) << " spectrum (n=" << s.n() << ")\n";
    for (auto& [v, m] : s.entries) std::cout << "  " << v << " ^" << m << "\n";
    if (j.contains("closed_form")) {
      auto& cf = j["closed_form"];
      if (cf.contains("pass"))
        std::cout << "closed form: " << (cf["pass"].get<bool>() ? "match" : "MISMATCH") << " (max error "
                  << cf["max_error"].get<double>() << ")\n";
      else
        std::cout << "closed form: unavailable (" << cf["reason"].get<std::string>() << ")\n";
    }
  }
  return status;
}

Json char_row(const std::string& field, const std::string& type, Json idx, ComplexValue z, double bound, bool pass) {
  return Json{{"field", field},          {"sum_type", type}, {"indices", idx},  {"re", z.real()},
              {"im", z.imag()},          {"magnitude", std::abs(z)},          {"bound", bound}, {"pass", pass}};
}

int cmd_chars(const Config& c) {
  auto F = field_of_order(c.q);
  const double q = (double)F->q(), sq = std::sqrt(q), tol = 1e-9 * sq;
  const std::string name = "GF(" + std::to_string(F->q()) + ")";
  const i64 m = (i64)F->q() - 1;
  Json rows = Json::array();
  auto want = [&](const char* t) { return c.sum == "all" || c.sum == t; };
  if (want("gauss"))
    for (u32 t = 1; t < F->q(); ++t)
      for (i64 k = 1; k < m; ++k) {
        auto z = gauss_sum(AdditiveCharacter(F, t), MultiplicativeCharacter(F, k));
        rows.push_back(char_row(name, "gauss", {t, k}, z, sq, std::abs(std::abs(z) - sq) <= tol));
      }
  if (want("jacobi"))
    for (i64 a = 1; a < m; ++a)
      for (i64 b = 1; b < m; ++b) {
        auto z = jacobi_sum(MultiplicativeCharacter(F, a), MultiplicativeCharacter(F, b));
        double expect = (a + b) % m == 0 ? 1.0 : sq;
        rows.push_back(char_row(name, "jacobi", {a, b}, z, expect, std::abs(std::abs(z) - expect) <= tol));
      }
  if (want("kloosterman"))
    for (u32 a = 1; a < F->q(); ++a)
      for (u32 b = 1; b < F->q(); ++b) {
        auto z = kloosterman_sum(AdditiveCharacter(F, a), AdditiveCharacter(F, b));
        rows.push_back(char_row(name, "kloosterman", {a, b}, z, 2 * sq, std::abs(z) <= 2 * sq + tol));
      }
  if (c.sum == "eisenstein" || (c.sum == "all" && c.sub)) {
    if (!c.sub) throw Usage("eisenstein sums need --sub <order of the base field>");
    auto B = field_of_order(c.sub);
    SubfieldEmbedding emb(F, B);
    const double n = (double)emb.degree(), qb = (double)B->q();
    for (i64 k = 1; k < m; ++k) {
      MultiplicativeCharacter chi(F, k);
      auto z = eisenstein_sum(emb, chi, false);
      double expect = trivial_on_base(emb, chi) ? std::pow(qb, n / 2 - 1) : std::pow(qb, (n - 1) / 2);
      rows.push_back(char_row(name + "/GF(" + std::to_string(B->q()) + ")", "eisenstein", {k}, z, expect,
                              std::abs(std::abs(z) - expect) <= 1e-9 * std::max(1.0, expect)));
    }
  }
  bool ok = true;
  for (auto& r : rows) ok = ok && r["pass"].get<bool>();
  if (c.json) {
    Json j = envelope(c);
    j["rows"] = rows;
    j["pass"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto& r : rows) std::cout << r.dump() << "\n";
  }
  return ok ? 0 : 1;
}

Json audit_json(const Graph& g, const Config& c, AuditReport& out) {
  auto inv = compute_invariants(g, c.caps);
  auto adj = spectrum(g, MatrixKind::Adjacency);
  auto lap = spectrum(g, MatrixKind::Laplacian, true);
  out = audit_bounds(g, inv, adj, lap, c.seed);
  Json j = io::to_json(out);
  j["invariants"] = io::to_json(inv);
  return j;
}

int cmd_audit(const Config& c) {
  auto src = load(c.source);
  AuditReport rep;
  Json j = envelope(c);
  j["audit"] = audit_json(src.graph, c, rep);
  auto lap = spectrum(src.graph, MatrixKind::Laplacian, true);
  auto cert = cheeger_pm1(src.graph, lap, src.spec ? character_candidates(*src.spec) : std::vector<std::vector<double>>{});
  if (cert.found) j["audit"]["pm1_certificate"] = {{"lambda2", cert.lambda2}, {"beta_upper", io::to_json(*cert.beta)}, {"f", cert.f}};
  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto& r : rep.records) {
      if (r.skipped) std::cout << "SKIP " << r.name << " (" << r.inputs << ")\n";
      else std::cout << (r.pass ? "ok   " : "FAIL ") << r.name << ": " << r.lhs << " " << relation_str(r.relation) << " " << r.rhs << "\n";
    }
    std::cout << src.graph.name() << ": " << rep.failures() << " failed, " << rep.skipped() << " skipped, seed " << c.seed << "\n";
  }
  return rep.failures() ? 1 : 0;
}

int cmd_verify(const Config& c) {
  struct Row {
    std::string id;
    std::size_t n = 0, cf_checks = 0, cf_fail = 0, fail = 0, skipped = 0, records = 0;
    std::string error;
  };
  std::vector<Row> rows;
  auto one = [&](const std::string& id, const Graph& g, const FamilySpec* s) {
    Row r{id, g.n()};
    try {
      if (s && has_closed_form(s->family))
        for (auto k : {MatrixKind::Adjacency, MatrixKind::Laplacian}) {
          ++r.cf_checks;
          if (!check_closed_form(spectrum(g, k), closed_form_spectrum(*s, k)).pass) ++r.cf_fail;
        }
      AuditReport rep;
      audit_json(g, c, rep);
      r.fail = rep.failures(), r.skipped = rep.skipped(), r.records = rep.records.size();
    } catch (const Error& e) {
      r.error = e.what();
    }
    rows.push_back(r);
  };
  for (auto& s : corpus_specs()) one(s.id(), build(s), &s);
  if (!c.fixtures.empty()) {
    std::vector<std::filesystem::path> files;
    for (auto& e : std::filesystem::directory_iterator(c.fixtures))
      if (e.path().extension() == ".el") files.push_back(e.path());
    for (auto& p : files) {
      std::ifstream in(p);
      one("fixture:" + p.stem().string(), parse_edge_list(in), nullptr);
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.id < b.id; });
  std::size_t bad = 0, cf = 0, cff = 0, recs = 0, fails = 0, skips = 0;
  Json arr = Json::array();
  for (auto& r : rows) {
    bad += (r.fail || r.cf_fail || !r.error.empty());
    cf += r.cf_checks, cff += r.cf_fail, recs += r.records, fails += r.fail, skips += r.skipped;
    Json o{{"id", r.id}, {"n", r.n}, {"closed_form_checks", r.cf_checks}, {"closed_form_failures", r.cf_fail},
           {"bound_records", r.records}, {"bound_failures", r.fail}, {"skipped", r.skipped}};
    if (!r.error.empty()) o["error"] = r.error;
    arr.push_back(o);
  }
  Json summary{{"graphs", rows.size()}, {"graphs_failing", bad}, {"closed_form_checks", cf}, {"closed_form_failures", cff},
               {"bound_records", recs}, {"bound_failures", fails}, {"skipped", skips}};
  if (c.json) {
    Json j = envelope(c);
    j["graphs"] = arr;
    j["summary"] = summary;
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto& r : rows)
      if (r.fail || r.cf_fail || !r.error.empty())
        std::cout << "FAIL " << r.id << " bounds=" << r.fail << " closed_form=" << r.cf_fail << " " << r.error << "\n";
    std::cout << rows.size() << " graphs, " << bad << " failing; " << cf << " closed-form checks (" << cff << " failed); "
              << recs << " bound records (" << fails << " failed, " << skips << " skipped)\n";
  }
  return bad ? 1 : 0;
}

bool same_spectrum(const Spectrum& a, const Spectrum& b) {
  if (a.n() != b.n()) return false;
  for (std::size_t i = 0; i < a.n(); ++i)
    if (std::abs(a.values[i] - b.values[i]) > 1e-7) return false;
  return true;
}

int cmd_iso(const Config& c) {
  if (c.source.empty() || c.other.empty()) throw Usage("iso takes two graph sources");
  auto a = load(c.source).graph, b = load(c.other).graph;
  bool isospec = same_spectrum(spectrum(a), spectrum(b)) &&
                 same_spectrum(spectrum(a, MatrixKind::Laplacian), spectrum(b, MatrixKind::Laplacian));
  std::string verdict;
  Json j = envelope(c);
  try {
    auto r = is_isomorphic(a, b, c.caps);
    verdict = r.isomorphic ? "isomorphic" : "non-isomorphic";
    if (r.isomorphic) j["mapping"] = r.mapping;
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded) throw;
    verdict = "undecided";
    auto ia = compute_invariants(a, c.caps), ib = compute_invariants(b, c.caps);
    j["invariants"] = {io::to_json(ia), io::to_json(ib)};
  }
  std::string line = verdict + "; " + (isospec ? "isospectral" : "spectra differ");
  j["verdict"] = verdict;
  j["isospectral"] = isospec;
  if (c.json) std::cout << j.dump(2) << "\n";
  else std::cout << line << "\n";
  return 0;
}

void apply_config_file(Config& c, const CLI::App& app) {
  if (c.config_file.empty()) return;
  std::ifstream in(c.config_file);
  if (!in) throw Usage("cannot read config " + c.config_file);
  Json j = Json::parse(in);
  // flags win over the file
  if (j.contains("seed") && app.count("--seed") == 0) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("caps") && c.caps_text.empty()) {
    // either "chi=8,beta=8" or {"chi": 8, "beta": 8}
    if (j["caps"].is_string()) {
      c.caps_text = j["caps"].get<std::string>();
    } else {
      std::string t;
      for (auto& [k, v] : j["caps"].items()) t += k + "=" + v.dump() + ",";
      c.caps_text = t;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"spectral graph toolkit"};
  app.require_subcommand(1);
  app.add_option("--seed", c.seed, "64-bit seed for sampled checks");
  app.add_flag("--json", c.json, "JSON output");
  app.add_option("--caps", c.caps_text, "lower caps, e.g. chi=64,beta=24,iso=32");
  app.add_option("--config", c.config_file, "JSON config file; flags win");
  app.add_option("--file", c.file, "write output to a file");

  auto* gen = app.add_subcommand("gen", "build a graph");
  gen->add_option("family", c.source, "family and parameters, e.g. paley 13")->required();
  gen->add_option("--out", c.out, "edgelist|dot|json")->check(CLI::IsMember({"edgelist", "dot", "json"}));

  auto* spec = app.add_subcommand("spec", "spectrum of a graph");
  spec->add_option("source", c.source, "edge-list file or family")->required();
  spec->add_option("--kind", c.kind, "adjacency|laplacian")->check(CLI::IsMember({"adjacency", "laplacian"}));
  spec->add_flag("--closed-form", c.closed_form, "compare with the closed form");

  auto* chars = app.add_subcommand("chars", "character sum tables");
  chars->add_option("q", c.q, "field order")->required();
  chars->add_option("--sum", c.sum, "gauss|jacobi|kloosterman|eisenstein|all")
      ->check(CLI::IsMember({"gauss", "jacobi", "kloosterman", "eisenstein", "all"}));
  chars->add_option("--sub", c.sub, "base field order for eisenstein sums");

  auto* audit = app.add_subcommand("audit", "check every applicable bound");
  audit->add_option("source", c.source, "edge-list file or family")->required();

  auto* verify = app.add_subcommand("verify", "closed forms and audits over the corpus");
  verify->add_option("--fixtures", c.fixtures, "also audit the .el files in this directory");

  auto* iso = app.add_subcommand("iso", "compare two graphs");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a, "first edge-list file or family")->required();
  iso->add_option("b", iso_b, "second edge-list file or family")->required();

  for (auto* s : {gen, spec, chars, audit, verify, iso}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (!iso_a.empty()) c.source = words(iso_a), c.other = words(iso_b);
  try {
    c.command = app.get_subcommands().front()->get_name();
    apply_config_file(c, app);
    parse_caps(c.caps_text, c.caps);
    if (c.command == "gen") return cmd_gen(c);
    if (c.command == "spec") return cmd_spec(c);
    if (c.command == "chars") return cmd_chars(c);
    if (c.command == "audit") return cmd_audit(c);
    if (c.command == "verify") return cmd_verify(c);
    if (c.command == "iso") return cmd_iso(c);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (c.json) {
      Json j = envelope(c);
      j["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
