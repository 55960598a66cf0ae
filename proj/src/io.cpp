#include "leibniz/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "leibniz/errors.hpp"

namespace leibniz::io {

namespace {

std::size_t line_of(const YAML::Node& node) {
  const YAML::Mark mark = node.Mark();
  return mark.line >= 0 ? static_cast<std::size_t>(mark.line) + 1 : 0;
}

YAML::Node load_document(std::string_view text) {
  try {
    YAML::Node root = YAML::Load(std::string(text));
    if (!root.IsMap()) throw ParseError("top level must be a mapping", line_of(root));
    return root;
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, static_cast<std::size_t>(e.mark.line) + 1);
  }
}

YAML::Node require(const YAML::Node& root, const char* key) {
  const YAML::Node node = root[key];
  if (!node) throw ParseError(std::string("missing key '") + key + "'", line_of(root));
  return node;
}

std::string scalar_text(const YAML::Node& node, const char* what) {
  if (!node.IsScalar()) throw ParseError(std::string(what) + " must be a scalar", line_of(node));
  return node.Scalar();
}

std::size_t parse_size(const YAML::Node& node, const char* what) {
  const std::string text = scalar_text(node, what);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError(std::string(what) + " must be a nonnegative integer, got '" + text + "'", line_of(node));
  }
  return value;
}

Scalar parse_coefficient(const YAML::Node& node, FieldSpec field) {
  const std::string text = scalar_text(node, "coefficient");
  try {
    return Scalar::parse(field, text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line_of(node));
  } catch (const std::domain_error& e) {
    throw ParseError("coefficient '" + text + "': " + e.what(), line_of(node));
  }
}

FieldSpec parse_field(const YAML::Node& node) {
  try {
    if (node.IsScalar()) {
      if (node.Scalar() == "Q") return FieldSpec::rationals();
      return parse_field_flag(node.Scalar());
    }
    if (node.IsMap() && node.size() == 1 && node["GF"]) {
      return FieldSpec::prime(parse_size(node["GF"], "GF modulus"));
    }
  } catch (const PreconditionViolated& e) {
    throw ParseError(e.what(), line_of(node));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line_of(node));
  }
  throw ParseError("field must be Q or {GF: p}", line_of(node));
}

// A list of [a, b, k, coeff] entries with the first three 1-based and bounded.
struct SparseEntry {
  std::size_t a, b, k;
  Scalar c;
};

std::vector<SparseEntry> parse_sparse(const YAML::Node& root, const char* key, FieldSpec field, std::size_t bound_a,
                                      std::size_t bound_b, std::size_t bound_k, bool required) {
  const YAML::Node list = root[key];
  if (!list) {
    if (required) throw ParseError(std::string("missing key '") + key + "'", line_of(root));
    return {};
  }
  if (list.IsNull()) return {};
  if (!list.IsSequence()) throw ParseError(std::string(key) + " must be a list", line_of(list));
  std::vector<SparseEntry> out;
  const std::size_t bounds[3] = {bound_a, bound_b, bound_k};
  for (const auto& entry : list) {
    if (!entry.IsSequence() || entry.size() != 4) {
      throw ParseError(std::string(key) + " entries are [index, index, index, coefficient]", line_of(entry));
    }
    std::size_t idx[3];
    for (std::size_t i = 0; i < 3; ++i) {
      idx[i] = parse_size(entry[i], "index");
      if (idx[i] < 1 || idx[i] > bounds[i]) {
        throw ParseError("index " + std::to_string(idx[i]) + " out of range 1.." + std::to_string(bounds[i]),
                         line_of(entry[i]));
      }
    }
    out.push_back({idx[0] - 1, idx[1] - 1, idx[2] - 1, parse_coefficient(entry[3], field)});
  }
  return out;
}

Vector parse_dense_vector(const YAML::Node& node, FieldSpec field, std::size_t len, const char* what) {
  if (!node.IsSequence() || node.size() != len) {
    throw ParseError(std::string(what) + " must be a list of " + std::to_string(len) + " coefficients", line_of(node));
  }
  Vector v;
  for (const auto& x : node) v.push_back(parse_coefficient(x, field));
  return v;
}

Matrix parse_dense_matrix(const YAML::Node& node, FieldSpec field, std::size_t n, const char* what) {
  if (!node.IsSequence() || node.size() != n) {
    throw ParseError(std::string(what) + " must be a list of " + std::to_string(n) + " rows", line_of(node));
  }
  std::vector<Vector> rows;
  for (const auto& row : node) rows.push_back(parse_dense_vector(row, field, n, what));
  return Matrix::from_rows(field, rows, n);
}

std::string field_text(FieldSpec field) {
  return field.is_rational() ? "Q" : "{GF: " + std::to_string(field.characteristic()) + "}";
}

std::string quoted(const Scalar& s) { return "\"" + s.to_string() + "\""; }

std::string dense(const Vector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + quoted(v[i]);
  return out + "]";
}

std::string dense(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) out += (r ? ", " : "") + dense(m.row(r));
  return out + "]";
}

void sparse_block(std::ostringstream& os, const char* key, const std::vector<Scalar>& tensor, std::size_t na,
                  std::size_t nb, std::size_t nk) {
  os << key << ":";
  bool any = false;
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      for (std::size_t k = 0; k < nk; ++k) {
        const Scalar& c = tensor[(a * nb + b) * nk + k];
        if (c.is_zero()) continue;
        os << "\n  - [" << a + 1 << ", " << b + 1 << ", " << k + 1 << ", " << quoted(c) << "]";
        any = true;
      }
    }
  }
  os << (any ? "\n" : " []\n");
}

}  // namespace

FieldSpec parse_field_flag(std::string_view text) {
  if (text == "Q") return FieldSpec::rationals();
  std::string_view digits;
  if (text.starts_with("GF:")) {
    digits = text.substr(3);
  } else if (text.starts_with("GF(") && text.ends_with(")")) {
    digits = text.substr(3, text.size() - 4);
  } else {
    throw ParseError("field must be Q, GF:p or GF(p), got '" + std::string(text) + "'");
  }
  std::uint64_t p = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || end != digits.data() + digits.size()) {
    throw ParseError("bad field modulus '" + std::string(digits) + "'");
  }
  try {
    return FieldSpec::prime(p);
  } catch (const PreconditionViolated& e) {
    throw ParseError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AlgebraTable parse_algebra(std::string_view text) {
  const YAML::Node root = load_document(text);
  const FieldSpec field = parse_field(require(root, "field"));
  const std::size_t dim = parse_size(require(root, "dim"), "dim");
  std::vector<AlgebraTable::Entry> entries;
  for (auto& e : parse_sparse(root, "brackets", field, dim, dim, dim, false)) {
    entries.push_back({e.a, e.b, e.k, e.c});
  }
  return AlgebraTable::from_entries(field, dim, entries);
}

AlgebraTable load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

std::string serialize_algebra(const AlgebraTable& g) {
  std::ostringstream os;
  os << "field: " << field_text(g.field()) << "\n";
  os << "dim: " << g.dim() << "\n";
  sparse_block(os, "brackets", g.coefficients(), g.dim(), g.dim(), g.dim());
  return os.str();
}

AnyDatum parse_datum(std::string_view text) {
  const YAML::Node root = load_document(text);
  const FieldSpec field = parse_field(require(root, "field"));
  const std::size_t nv = parse_size(require(root, "v_dim"), "v_dim");
  const std::size_t np = parse_size(require(root, "p_dim"), "p_dim");
  std::string kind = "leibniz";
  if (root["kind"]) kind = scalar_text(root["kind"], "kind");
  if (kind == "lie") {
    LieMetabelianDatum d = LieMetabelianDatum::zero(field, nv, np);
    for (auto& e : parse_sparse(root, "act", field, np, nv, nv, false)) {
      d.set_action(e.a, e.b, e.k, d.action(e.a, e.b)[e.k] + e.c);
    }
    for (auto& e : parse_sparse(root, "f", field, np, np, nv, false)) {
      d.set_form(e.a, e.b, e.k, d.form(e.a, e.b)[e.k] + e.c);
    }
    return d;
  }
  if (kind != "leibniz") throw ParseError("kind must be leibniz or lie", line_of(root["kind"]));
  MetabelianDatum d = MetabelianDatum::zero(field, nv, np);
  for (auto& e : parse_sparse(root, "left_act", field, nv, np, nv, false)) {
    d.set_left(e.a, e.b, e.k, d.left(e.a, e.b)[e.k] + e.c);
  }
  for (auto& e : parse_sparse(root, "right_act", field, np, nv, nv, false)) {
    d.set_right(e.a, e.b, e.k, d.right(e.a, e.b)[e.k] + e.c);
  }
  for (auto& e : parse_sparse(root, "f", field, np, np, nv, false)) {
    d.set_form(e.a, e.b, e.k, d.form(e.a, e.b)[e.k] + e.c);
  }
  return d;
}

AnyDatum load_datum(const std::string& path) { return parse_datum(read_file(path)); }

std::string serialize_datum(const MetabelianDatum& d) {
  std::ostringstream os;
  os << "field: " << field_text(d.field) << "\nkind: leibniz\nv_dim: " << d.v_dim << "\np_dim: " << d.p_dim << "\n";
  sparse_block(os, "left_act", d.left_act, d.v_dim, d.p_dim, d.v_dim);
  sparse_block(os, "right_act", d.right_act, d.p_dim, d.v_dim, d.v_dim);
  sparse_block(os, "f", d.f, d.p_dim, d.p_dim, d.v_dim);
  return os.str();
}

std::string serialize_datum(const LieMetabelianDatum& d) {
  std::ostringstream os;
  os << "field: " << field_text(d.field) << "\nkind: lie\nv_dim: " << d.v_dim << "\np_dim: " << d.p_dim << "\n";
  sparse_block(os, "act", d.act, d.p_dim, d.v_dim, d.v_dim);
  sparse_block(os, "f", d.f, d.p_dim, d.p_dim, d.v_dim);
  return os.str();
}

Dim1Triple parse_triple(std::string_view text) {
  const YAML::Node root = load_document(text);
  const FieldSpec field = parse_field(require(root, "field"));
  const std::size_t d = parse_size(require(root, "p_dim"), "p_dim");
  if (d == 0) throw ParseError("p_dim must be at least 1", line_of(root["p_dim"]));
  Dim1Triple t = Dim1Triple::zero(field, d);
  if (root["lambda"]) t.lambda = parse_dense_vector(root["lambda"], field, d, "lambda");
  if (root["Lambda"]) t.Lambda = parse_dense_vector(root["Lambda"], field, d, "Lambda");
  if (root["f"]) t.f = parse_dense_matrix(root["f"], field, d, "f");
  return t;
}

Dim1Triple load_triple(const std::string& path) { return parse_triple(read_file(path)); }

std::string serialize_triple(const Dim1Triple& t) {
  std::ostringstream os;
  os << "field: " << field_text(t.field) << "\np_dim: " << t.p_dim << "\nlambda: " << dense(t.lambda)
     << "\nLambda: " << dense(t.Lambda) << "\nf: " << dense(t.f) << "\n";
  return os.str();
}

MorphismTriple parse_morphism(std::string_view text, FieldSpec field, std::size_t p_dim) {
  const YAML::Node root = load_document(text);
  MorphismTriple m;
  m.v = parse_dense_vector(require(root, "v"), field, p_dim, "v");
  m.u = parse_coefficient(require(root, "u"), field);
  m.psi = parse_dense_matrix(require(root, "psi"), field, p_dim, "psi");
  return m;
}

MorphismTriple load_morphism(const std::string& path, FieldSpec field, std::size_t p_dim) {
  return parse_morphism(read_file(path), field, p_dim);
}

std::string serialize_morphism(const MorphismTriple& m) {
  std::ostringstream os;
  os << "v: " << dense(m.v) << "\nu: " << quoted(m.u) << "\npsi: " << dense(m.psi) << "\n";
  return os.str();
}

std::string detect_document_kind(std::string_view text) {
  const YAML::Node root = load_document(text);
  if (root["v_dim"]) return "datum";
  if (root["p_dim"]) return "triple";
  return "algebra";
}

}  // namespace leibniz::io
