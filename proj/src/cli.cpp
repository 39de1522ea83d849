#include "verkit/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <unistd.h>

#include "CLI11.hpp"
#include "verkit/catalog.hpp"
#include "verkit/error.hpp"
#include "verkit/serialize.hpp"
#include "verkit/tilting.hpp"

namespace verkit::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

struct Options {
  long p = 0;
  int n = 0;
  std::string format = "text";
  std::string output;
  std::string cache_dir;
  bool no_cache = false;
  bool even_only = false;
  long samples = 200;
  std::uint64_t seed = 0;
  int M = 12;
  long a = -1, b = -1, m = -1;
  bool check_roundtrip = false;
  bool experimental_p2 = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rendered command output plus its exit status.
struct Result {
  std::string text;
  int code = 0;
};

void add_common(CLI::App* sub, Options& o, bool with_format = true) {
  sub->add_option("-p", o.p, "prime p")->required();
  sub->add_option("-n", o.n, "level n >= 1")->required();
  if (with_format)
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--output", o.output, "write to this file instead of stdout");
  sub->add_option("--cache-dir", o.cache_dir, "cache directory (default $VERKIT_CACHE_DIR)");
  sub->add_flag("--no-cache", o.no_cache, "neither read nor write the cache");
  sub->add_option("--samples", o.samples, "sample count for randomized checks")->check(CLI::NonNegativeNumber);
  sub->add_option("--rng-seed", o.seed, "seed for randomized checks");
  sub->add_flag("--check-roundtrip", o.check_roundtrip, "re-ingest emitted JSON and compare");
  sub->add_flag("--experimental-p2", o.experimental_p2, "allow the p=2 fusion rule");
}

BuildOptions build_options(const Options& o) {
  BuildOptions b;
  b.fusion_samples = o.samples;
  b.seed = o.seed;
  return b;
}

void validate(const Options& o) {
  if (!is_prime(o.p)) throw UsageError(std::to_string(o.p) + " is not a prime");
  if (o.n < 1) throw UsageError("n must be at least 1");
}

std::string emit_json(const json& doc, const Options& o) {
  std::string text = io::dump(doc);
  if (o.check_roundtrip) {
    std::string why;
    if (!io::check_roundtrip(text, &why)) throw std::runtime_error("JSON round trip failed: " + why);
  }
  return text;
}

void require_json_for_roundtrip(const Options& o) {
  if (o.check_roundtrip && o.format != "json") throw UsageError("--check-roundtrip needs --format json");
}

std::string matrix_out(const io::LabeledMatrix& lm, const std::string& kind, const Options& o) {
  if (o.format == "csv") return io::to_csv(lm);
  if (o.format == "text") return io::to_text(lm);
  return emit_json(io::document(kind, o.p, o.n, json{{"matrix", io::to_json(lm)}}), o);
}

void no_csv(const Options& o, const char* cmd) {
  if (o.format == "csv") throw UsageError(std::string(cmd) + ": csv output is for matrices only");
}

std::string cache_path(const Options& o) {
  if (o.no_cache) return {};
  std::string dir = o.cache_dir.empty() ? default_cache_dir() : o.cache_dir;
  if (dir.empty()) return {};
  return (fs::path(dir) / ("verpn_" + std::to_string(o.p) + "_" + std::to_string(o.n) + "_v" +
                           std::to_string(io::kSchemaVersion) + ".json"))
      .string();
}

json report_doc(const Options& o) {
  const std::string path = cache_path(o);
  const json opts{{"samples", o.samples}, {"seed", o.seed}};
  if (!path.empty() && fs::exists(path)) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      json doc = json::parse(buf.str());
      if (doc.at("schema_version") == io::kSchemaVersion && doc.at("kind") == "report" &&
          doc.at("payload").at("options") == opts)
        return doc;
    } catch (const std::exception&) {
      // unreadable cache entries are rebuilt below
    }
  }
  auto data = build(o.p, o.n, build_options(o));
  json payload = io::report_payload(data);
  payload["options"] = opts;
  json doc = io::document("report", o.p, o.n, std::move(payload));
  if (!path.empty()) {
    std::error_code ec;
    fs::create_directories(fs::path(path).parent_path(), ec);
    const std::string tmp = path + ".tmp" + std::to_string(::getpid());
    {
      std::ofstream f(tmp);
      f << io::dump(doc);
    }
    fs::rename(tmp, path, ec);
    if (ec) fs::remove(tmp, ec);
  }
  return doc;
}

Result cmd_report(const Options& o) {
  json doc = report_doc(o);
  const int code = doc.at("payload").at("verification").at("passed").get<bool>() ? 0 : 1;
  if (o.format == "json") return {emit_json(doc, o), code};
  if (o.format == "csv") return {io::to_csv(io::matrix_from_json(doc.at("payload").at("cartan"))), code};
  return {io::report_text(doc), code};
}

std::string vector_text(const GrElement& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.coeffs.size(); ++i) s += (i ? "," : "") + v.coeffs[i].get_str();
  return s + ")";
}

json fold_json(const Folded& f) {
  return json{{"folded", f.str()}, {"simples", f.simples}, {"projectives", f.projectives},
              {"remainder", io::to_json(f.remainder)}};
}

Result cmd_fuse(const Options& o) {
  no_csv(o, "fuse");
  if (o.a < 0 || o.b < 0) throw UsageError("fuse needs -a and -b");
  auto v = fuse_simples(o.p, o.n, o.a, o.b, o.experimental_p2);
  auto f = fold_projectives(o.p, o.n, v);
  if (o.format == "text") return {f.str() + "\n" + vector_text(v) + "\n"};
  json pl = fold_json(f);
  pl["a"] = o.a;
  pl["b"] = o.b;
  pl["vector"] = io::to_json(v);
  return {emit_json(io::document("fuse", o.p, o.n, std::move(pl)), o)};
}

Result cmd_table(const Options& o) {
  no_csv(o, "table");
  auto ring = FusionRing::get(o.p, o.n, o.experimental_p2);
  std::vector<long> labels;
  for (long i = 0; i < ring->size(); ++i)
    if (!o.even_only || i % 2 == 0) labels.push_back(i);
  std::vector<std::vector<Folded>> cells;
  std::vector<std::vector<GrElement>> vecs;
  for (long a : labels) {
    cells.emplace_back();
    vecs.emplace_back();
    for (long b : labels) {
      vecs.back().push_back(fuse_simples(o.p, o.n, a, b, o.experimental_p2));
      cells.back().push_back(fold_projectives(o.p, o.n, vecs.back().back()));
    }
  }
  if (o.format == "text") {
    std::ostringstream os;
    os << "x";
    for (long b : labels) os << "|L" << b;
    os << '\n';
    for (std::size_t r = 0; r < labels.size(); ++r) {
      os << 'L' << labels[r];
      for (const auto& c : cells[r]) os << '|' << c.str("+");
      os << '\n';
    }
    return {os.str()};
  }
  json rows = json::array();
  for (std::size_t r = 0; r < labels.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < labels.size(); ++c) {
      json cell = fold_json(cells[r][c]);
      cell["vector"] = io::to_json(vecs[r][c]);
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  return {emit_json(io::document("fusion_table", o.p, o.n, json{{"labels", labels}, {"cells", std::move(rows)}}), o)};
}

BuildOptions light(const Options& o) {
  auto b = build_options(o);
  b.verify = false;
  return b;
}

Result cmd_cartan(const Options& o) {
  auto d = build(o.p, o.n, light(o));
  return {matrix_out(io::cartan_labeled(d, o.even_only), "cartan", o)};
}

Result cmd_decomp(const Options& o) {
  auto d = build(o.p, o.n, light(o));
  return {matrix_out(io::decomposition_labeled(d), "decomposition", o)};
}

Result cmd_blocks(const Options& o) {
  no_csv(o, "blocks");
  auto dets = block_cartan_dets(o.p, o.n);
  json arr = json::array();
  std::ostringstream os;
  for (const auto& bd : dets) {
    std::vector<long> simples;
    for (long s : bd.block.members) simples.push_back(simple_of_projective(o.p, o.n, ProjIndex{s}).v);
    arr.push_back(json{{"level", bd.block.level},
                       {"projectives", bd.block.members},
                       {"simples", simples},
                       {"det", io::to_json(bd.det)},
                       {"expected_det", io::to_json(bd.predicted)}});
    os << "level " << bd.block.level << "  det " << bd.det << "  simples";
    for (long s : simples) os << " L" << s;
    os << "  projectives";
    for (long s : bd.block.members) os << " T" << s;
    os << '\n';
  }
  if (o.format == "text") return {os.str()};
  return {emit_json(io::document("blocks", o.p, o.n, json{{"blocks", std::move(arr)}}), o)};
}

Result cmd_ext1(const Options& o) {
  no_csv(o, "ext1");
  if (o.p == 2) throw UsageError("ext1 is only available for odd p");
  const long ns = num_simples(o.p, o.n);
  json arr = json::array();
  std::ostringstream os;
  for (long a = 0; a < ns; ++a)
    for (long b = a + 1; b < ns; ++b)
      if (ext1(o.p, o.n, a, b)) {
        arr.push_back(json::array({a, b}));
        os << "L" << a << " - L" << b << '\n';
      }
  if (o.format == "text") return {os.str()};
  return {emit_json(io::document("ext1", o.p, o.n, json{{"pairs", std::move(arr)}}), o)};
}

Result cmd_invariants(const Options& o) {
  no_csv(o, "invariants");
  if (o.M < 0) throw UsageError("-M must be nonnegative");
  auto a = invariant_dims(o.p, o.n, o.M);
  auto s = series_fn(o.p, o.n, o.M);
  const bool eq = a == s;
  if (o.format == "text") {
    std::ostringstream os;
    os << "m  invariant_dims  series_fn\n";
    for (int m = 0; m <= o.M; ++m) os << m << "  " << a[m] << "  " << s[m] << '\n';
    os << "equal: " << (eq ? "yes" : "no") << '\n';
    return {os.str(), eq ? 0 : 1};
  }
  json ja = json::array(), js = json::array();
  for (const auto& x : a) ja.push_back(io::to_json(x));
  for (const auto& x : s) js.push_back(io::to_json(x));
  return {emit_json(io::document("series", o.p, o.n,
                                 json{{"M", o.M}, {"invariant_dims", ja}, {"series_fn", js}, {"equal", eq}}),
                    o),
          eq ? 0 : 1};
}

Result cmd_tilting(const Options& o) {
  no_csv(o, "tilting");
  if (o.m < 0) throw UsageError("tilting needs -m");
  const auto& ch = tilting_char(o.p, o.m);
  auto weyl = weyl_expand(ch);
  const bool in_range = o.m <= proj_end(o.p, o.n);
  const bool projective = in_range && o.m >= proj_begin(o.p, o.n);
  std::optional<GrElement> cls;
  if (o.p != 2 && in_range) cls = tilting_class(o.p, o.n, o.m);
  if (o.format == "text") {
    std::ostringstream os;
    os << "T" << o.m << " Weyl factors:";
    for (auto it = weyl.rbegin(); it != weyl.rend(); ++it)
      os << " W" << it->first << (it->second != 1 ? "x" + it->second.get_str() : "");
    os << "\ndimension " << dim_at_one(ch) << '\n';
    if (!in_range) os << "zero in Ver_{" << o.p << "^" << o.n << "}\n";
    if (cls) os << "class " << cls->str() << (projective ? " (projective)" : "") << '\n';
    return {os.str()};
  }
  json jw = json::array();
  for (const auto& [j, c] : weyl) jw.push_back(json::array({j, io::to_json(c)}));
  json pl{{"m", o.m}, {"weyl", jw}, {"dim", io::to_json(dim_at_one(ch))}, {"projective", projective},
          {"nonzero", in_range}};
  pl["class"] = cls ? io::to_json(*cls) : json(nullptr);
  return {emit_json(io::document("tilting", o.p, o.n, std::move(pl)), o)};
}

Result cmd_verify(const Options& o) {
  no_csv(o, "verify");
  auto rep = verify_all(o.p, o.n, build_options(o));
  const int code = rep.passed() ? 0 : 1;
  if (o.format == "text") {
    std::ostringstream os;
    for (const auto& c : rep.checks) os << std::left << std::setw(8) << to_string(c.status) << std::setw(40) << c.name << c.witness << '\n';
    os << (rep.passed() ? "all checks passed\n" : "verification FAILED\n");
    return {os.str(), code};
  }
  return {emit_json(io::document("verification", o.p, o.n, io::to_json(rep)), o), code};
}

}  // namespace

std::string default_cache_dir() {
  if (const char* e = std::getenv("VERKIT_CACHE_DIR"); e && *e) return e;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return (fs::path(x) / "verkit").string();
  if (const char* h = std::getenv("HOME"); h && *h) return (fs::path(h) / ".cache" / "verkit").string();
  return {};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of the categories Ver_{p^n}", "verkit"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, std::function<Result(const Options&)>> handlers;
  auto sub = [&](const char* name, const char* help, std::function<Result(const Options&)> h) {
    auto* s = app.add_subcommand(name, help);
    add_common(s, o);
    handlers[s] = std::move(h);
    return s;
  };
  sub("report", "full record of one category", cmd_report);
  sub("fuse", "tensor product of two simples", cmd_fuse)->add_option("-a", o.a, "first simple label");
  app.get_subcommand("fuse")->add_option("-b", o.b, "second simple label");
  sub("table", "fusion table", cmd_table)->add_flag("--even-only", o.even_only, "even labels only");
  sub("cartan", "Cartan matrix by simple labels", cmd_cartan)->add_flag("--even-only", o.even_only, "even labels only");
  sub("decomp", "decomposition matrix", cmd_decomp);
  sub("blocks", "block partition and determinants", cmd_blocks);
  sub("ext1", "pairs of simples with nonzero Ext^1", cmd_ext1);
  sub("invariants", "dimensions of invariants in tensor powers", cmd_invariants)->add_option("-M", o.M, "largest m");
  sub("tilting", "one tilting module", cmd_tilting)->add_option("-m", o.m, "highest weight");
  sub("verify", "run every consistency check", cmd_verify);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    validate(o);
    require_json_for_roundtrip(o);
    Result r = handlers.at(chosen)(o);
    if (o.output.empty()) {
      out << r.text;
    } else {
      std::ofstream f(o.output);
      if (!f) throw UsageError("cannot write " + o.output);
      f << r.text;
    }
    return r.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::NegativeLeadingCoefficient ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace verkit::cli
