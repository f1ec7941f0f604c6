#include "pcc/json_io.hpp"

namespace pcc {

namespace {

std::string join(const FieldPtr& K, const std::vector<Elem>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += K->format(c[i]);
  }
  return s;
}

std::vector<Elem> split(const FieldPtr& K, const std::string& s) {
  std::vector<Elem> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(K->parse(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JsonFormatError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

Partition partition_from(const Json& j) {
  if (!j.is_array()) throw JsonFormatError("partition must be an array");
  return Partition(j.get<std::vector<int>>());
}

}  // namespace

Json to_json(const Gjnf& g) {
  Json out = Json::array();
  for (auto& f : g.factors()) out.push_back({{"poly", f.poly.to_string()}, {"partition", f.partition.parts()}});
  return out;
}

Gjnf gjnf_from_json(const Json& j, const FieldPtr& f) {
  if (!j.is_array()) throw JsonFormatError("GJNF must be an array");
  std::vector<GjnfFactor> fs;
  for (auto& e : j)
    fs.push_back({Poly::parse(f, field(e, "poly").get<std::string>()), partition_from(field(e, "partition"))});
  return Gjnf(f, std::move(fs));
}

Json to_json(const CocentElement& v) {
  const auto& sh = v.shape();
  Json rows = Json::array();
  for (std::size_t i = 0; i < sh.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < sh.cols(); ++j) row.push_back(join(sh.field(), v.entry(i, j)));
    rows.push_back(row);
  }
  return {{"mu", sh.mu().parts()}, {"nu", sh.nu().parts()}, {"entries", rows}};
}

CocentElement cocent_from_json(const Json& j, const FieldPtr& K) {
  CocentElement v(CocentShape(partition_from(field(j, "mu")), partition_from(field(j, "nu")), K));
  const auto& rows = field(j, "entries");
  const auto& sh = v.shape();
  if (!rows.is_array() || rows.size() != sh.rows()) throw JsonFormatError("entries: wrong row count");
  for (std::size_t i = 0; i < sh.rows(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != sh.cols()) throw JsonFormatError("entries: wrong column count");
    for (std::size_t c = 0; c < sh.cols(); ++c) {
      auto coeffs = split(K, rows[i][c].get<std::string>());
      if (coeffs.size() > static_cast<std::size_t>(sh.l(i, c))) throw JsonFormatError("entry longer than its window");
      v.set_entry(i, c, coeffs);
    }
  }
  return v;
}

Json to_json(const TruncAlgElement& b) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < b.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::vector<Elem> w;
      for (int e = b.offset(i, j); e < b.offset(i, j) + b.window(i, j); ++e) w.push_back(b.coeff(i, j, e));
      row.push_back({{"offset", b.offset(i, j)}, {"coeffs", join(b.field(), w)}});
    }
    rows.push_back(row);
  }
  return {{"lambda", b.partition().parts()}, {"entries", rows}};
}

TruncAlgElement trunc_alg_from_json(const Json& j, const FieldPtr& K) {
  auto b = TruncAlgElement::zero(K, partition_from(field(j, "lambda")));
  const auto& rows = field(j, "entries");
  if (!rows.is_array() || rows.size() != b.size()) throw JsonFormatError("entries: wrong row count");
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != b.size()) throw JsonFormatError("entries: wrong column count");
    for (std::size_t c = 0; c < b.size(); ++c) {
      const int off = field(rows[i][c], "offset").get<int>();
      if (off != b.offset(i, c)) throw JsonFormatError("window offset does not match the partition");
      const auto w = split(K, field(rows[i][c], "coeffs").get<std::string>());
      if (w.size() > static_cast<std::size_t>(b.window(i, c))) throw JsonFormatError("window too long");
      for (std::size_t e = 0; e < w.size(); ++e) b.set_coeff(i, c, off + static_cast<int>(e), w[e]);
    }
  }
  return b;
}

Json to_json(const ClassRep& r) {
  Json blocks = Json::array();
  for (auto& b : r.blocks) blocks.push_back({{"poly", b.poly.to_string()}, {"rep", to_json(b.rep)}});
  return {{"levi_a", to_json(r.levi_a)}, {"levi_b", to_json(r.levi_b)}, {"blocks", blocks},
          {"matrix", r.matrix.to_string()}};
}

ClassRep class_rep_from_json(const Json& j, const FieldPtr& f) {
  ClassRep r{gjnf_from_json(field(j, "levi_a"), f), gjnf_from_json(field(j, "levi_b"), f), {},
             Matrix::parse(f, field(j, "matrix").get<std::string>())};
  for (auto& b : field(j, "blocks")) {
    Poly p = Poly::parse(f, field(b, "poly").get<std::string>());
    r.blocks.push_back({p, cocent_from_json(field(b, "rep"), extension_for(p))});
  }
  if (assemble_class(r.levi_a, r.levi_b, r.blocks) != r.matrix)
    throw JsonFormatError("matrix does not match its Levi forms and blocks");
  return r;
}

Json to_json(const CountPoly& p) {
  Json c = Json::array();
  for (auto& x : p.coeffs) c.push_back(static_cast<std::int64_t>(x));
  return {{"coeffs", c}};
}

CountPoly count_poly_from_json(const Json& j) {
  CountPoly p;
  for (auto& x : field(j, "coeffs")) p.coeffs.emplace_back(x.get<std::int64_t>());
  return p;
}

Json count_json(int m, int n, std::uint64_t q, std::uint64_t count) {
  return {{"m", m}, {"n", n}, {"q", q}, {"count", count}};
}

}  // namespace pcc
