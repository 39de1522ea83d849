#include "verkit/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "verkit/error.hpp"

namespace verkit::io {

json to_json(const Integer& x) {
  if (fits_int64(x)) return json(to_int64(x));
  return json(x.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  fail(ErrorKind::InvalidArgument, "expected an integer, got " + j.dump());
}

json to_json(const LabeledMatrix& lm) {
  json data = json::array();
  for (std::size_t i = 0; i < lm.m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < lm.m.cols(); ++j) row.push_back(to_json(lm.m(i, j)));
    data.push_back(std::move(row));
  }
  return json{{"type", "matrix"},
              {"rows", lm.m.rows()},
              {"cols", lm.m.cols()},
              {"row_labels", lm.row_labels},
              {"col_labels", lm.col_labels},
              {"data", std::move(data)}};
}

LabeledMatrix matrix_from_json(const json& j) {
  LabeledMatrix lm;
  const auto rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
  lm.m = IntMatrix(rows, cols);
  const auto& data = j.at("data");
  if (data.size() != rows) fail(ErrorKind::InvalidArgument, "matrix: row count mismatch");
  for (std::size_t i = 0; i < rows; ++i) {
    if (data[i].size() != cols) fail(ErrorKind::InvalidArgument, "matrix: column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) lm.m(i, c) = integer_from_json(data[i][c]);
  }
  lm.row_labels = j.at("row_labels").get<std::vector<std::string>>();
  lm.col_labels = j.at("col_labels").get<std::vector<std::string>>();
  return lm;
}

json to_json(const GrElement& e) {
  json c = json::array();
  for (const auto& x : e.coeffs) c.push_back(to_json(x));
  return json{{"type", "gr_element"}, {"p", e.p}, {"n", e.n}, {"coeffs", std::move(c)}};
}

GrElement gr_from_json(const json& j) {
  GrElement e{j.at("p").get<long>(), j.at("n").get<int>(), {}};
  for (const auto& x : j.at("coeffs")) e.coeffs.push_back(integer_from_json(x));
  return e;
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}});
  return json{{"passed", r.passed()}, {"checks", std::move(checks)}};
}

json document(const std::string& kind, long p, int n, json payload) {
  return json{{"schema_version", kSchemaVersion}, {"kind", kind}, {"p", p}, {"n", n}, {"payload", std::move(payload)}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

namespace {

json reencode(const json& j) {
  if (j.is_object()) {
    auto t = j.find("type");
    if (t != j.end() && t->is_string()) {
      if (*t == "matrix") return to_json(matrix_from_json(j));
      if (*t == "gr_element") return to_json(gr_from_json(j));
    }
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = reencode(it.value());
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& x : j) out.push_back(reencode(x));
    return out;
  }
  return j;
}

}  // namespace

bool check_roundtrip(const std::string& text, std::string* why) {
  try {
    const json doc = json::parse(text);
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
      if (why) *why = "unknown schema_version";
      return false;
    }
    const std::string again = dump(reencode(doc));
    if (again != text) {
      if (why) *why = "re-encoded document differs";
      return false;
    }
    return true;
  } catch (const std::exception& e) {
    if (why) *why = e.what();
    return false;
  }
}

std::string to_csv(const LabeledMatrix& lm) {
  std::ostringstream os;
  os << "label";
  for (const auto& c : lm.col_labels) os << ',' << c;
  os << '\n';
  for (std::size_t i = 0; i < lm.m.rows(); ++i) {
    os << lm.row_labels[i];
    for (std::size_t j = 0; j < lm.m.cols(); ++j) os << ',' << lm.m(i, j);
    os << '\n';
  }
  return os.str();
}

std::string to_text(const LabeledMatrix& lm) {
  std::size_t w = 1, lw = 1;
  for (const auto& l : lm.col_labels) w = std::max(w, l.size());
  for (const auto& l : lm.row_labels) lw = std::max(lw, l.size());
  for (std::size_t i = 0; i < lm.m.rows(); ++i)
    for (std::size_t j = 0; j < lm.m.cols(); ++j) w = std::max(w, lm.m(i, j).get_str().size());
  std::ostringstream os;
  os << std::string(lw, ' ');
  for (const auto& c : lm.col_labels) os << ' ' << std::setw(static_cast<int>(w)) << c;
  os << '\n';
  for (std::size_t i = 0; i < lm.m.rows(); ++i) {
    os << std::left << std::setw(static_cast<int>(lw)) << lm.row_labels[i] << std::right;
    for (std::size_t j = 0; j < lm.m.cols(); ++j) os << ' ' << std::setw(static_cast<int>(w)) << lm.m(i, j).get_str();
    os << '\n';
  }
  return os.str();
}

LabeledMatrix cartan_labeled(const CategoryData& d, bool even_only) {
  const IntMatrix full = d.cartan_by_simple();
  std::vector<std::size_t> idx;
  for (long i : d.simple_labels)
    if (!even_only || i % 2 == 0) idx.push_back(static_cast<std::size_t>(i));
  LabeledMatrix lm;
  lm.m = full.principal(idx);
  for (auto i : idx) lm.row_labels.push_back("L" + std::to_string(i));
  lm.col_labels = lm.row_labels;
  return lm;
}

LabeledMatrix decomposition_labeled(const CategoryData& d) {
  LabeledMatrix lm;
  lm.m = d.decomposition;
  const long b = proj_begin(d.p, d.n);
  for (std::size_t r = 0; r < lm.m.rows(); ++r) lm.row_labels.push_back("T" + std::to_string(b + static_cast<long>(r)));
  for (std::size_t c = 0; c < lm.m.cols(); ++c) lm.col_labels.push_back("W" + std::to_string(c));
  return lm;
}

namespace {

json cyclo_json(const CycloInt& x, long double numeric) {
  json c = json::array();
  for (const auto& v : x.coeffs()) c.push_back(to_json(v));
  return json{{"exact", std::move(c)}, {"numeric", static_cast<double>(numeric)}};
}

std::string fixed(double x, int prec) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << x;
  return os.str();
}

}  // namespace

json report_payload(const CategoryData& d) {
  json corr = json::array();
  for (long i : d.simple_labels) corr.push_back(json{{"simple", i}, {"projective", d.projective_of[i]}});
  json blocks = json::array();
  const IntMatrix& c = d.cartan;
  const long b0 = proj_begin(d.p, d.n);
  for (const auto& b : d.blocks) {
    std::vector<std::size_t> idx;
    std::vector<long> simples;
    for (long s : b.members) {
      idx.push_back(static_cast<std::size_t>(s - b0));
      simples.push_back(simple_of_projective(d.p, d.n, ProjIndex{s}).v);
    }
    blocks.push_back(json{{"level", b.level},
                          {"projectives", b.members},
                          {"simples", simples},
                          {"det", to_json(determinant(c.principal(idx)))}});
  }
  json fp = json::array();
  for (long i : d.simple_labels)
    fp.push_back(json{{"label", i},
                      {"simple", cyclo_json(d.fpdim_simple[i], d.fpdim_simple_numeric[i])},
                      {"projective", cyclo_json(d.fpdim_projective[i], d.fpdim_projective_numeric[i])}});
  json ext = nullptr;
  if (d.p != 2) {
    ext = json::array();
    for (auto [a, b] : d.ext1_pairs) ext.push_back(json::array({a, b}));
  }
  auto g = stable_gr(d.p, d.n);
  json factors = json::array();
  for (const auto& f : g.factors) factors.push_back(to_json(f));
  return json{{"num_simples", d.num_simples()},
              {"num_blocks", d.blocks.size()},
              {"correspondence", std::move(corr)},
              {"decomposition", to_json(decomposition_labeled(d))},
              {"cartan", to_json(cartan_labeled(d, false))},
              {"blocks", std::move(blocks)},
              {"fpdims", std::move(fp)},
              {"ext1", std::move(ext)},
              {"stable_gr", json{{"order", to_json(g.order)}, {"factors", std::move(factors)}}},
              {"verification", to_json(d.report)}};
}

std::string report_text(const json& doc) {
  const auto& pl = doc.at("payload");
  const long p = doc.at("p").get<long>();
  const int n = doc.at("n").get<int>();
  std::ostringstream os;
  os << "Ver_{" << p << "^" << n << "}: " << pl.at("num_simples").get<long>() << " simples, "
     << pl.at("num_blocks").get<long>() << " blocks\n\n";
  os << "simple  projective cover\n";
  for (const auto& e : pl.at("correspondence"))
    os << std::left << std::setw(8) << ("L" + std::to_string(e.at("simple").get<long>())) << "T"
       << e.at("projective").get<long>() << '\n';
  os << "\nblocks\n";
  for (const auto& b : pl.at("blocks")) {
    os << "  level " << b.at("level").get<int>() << ", det " << integer_from_json(b.at("det")) << ":";
    for (const auto& s : b.at("simples")) os << " L" << s.get<long>();
    os << '\n';
  }
  os << "\nCartan matrix\n" << to_text(matrix_from_json(pl.at("cartan")));
  os << "\nFPdim        simple          projective\n";
  for (const auto& f : pl.at("fpdims"))
    os << std::left << std::setw(6) << ("L" + std::to_string(f.at("label").get<long>())) << std::right
       << std::setw(16) << fixed(f.at("simple").at("numeric").get<double>(), 9) << std::setw(20)
       << fixed(f.at("projective").at("numeric").get<double>(), 9) << '\n';
  if (!pl.at("ext1").is_null()) {
    os << "\nExt1 pairs:";
    if (pl.at("ext1").empty()) os << " none";
    for (const auto& e : pl.at("ext1")) os << " (L" << e[0].get<long>() << ", L" << e[1].get<long>() << ")";
    os << '\n';
  }
  os << "\nstable Grothendieck group: order " << integer_from_json(pl.at("stable_gr").at("order")) << ", factors";
  for (const auto& f : pl.at("stable_gr").at("factors")) os << ' ' << integer_from_json(f);
  os << "\n\nverification: " << (pl.at("verification").at("passed").get<bool>() ? "passed" : "FAILED") << '\n';
  for (const auto& c : pl.at("verification").at("checks"))
    os << "  " << std::left << std::setw(8) << c.at("status").get<std::string>() << std::setw(40)
       << c.at("name").get<std::string>() << c.at("witness").get<std::string>() << '\n';
  return os.str();
}

}  // namespace verkit::io
