#include "magtri/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace magtri {

namespace {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string edge_key(const WeightedTriangulation& T, Index e) {
  const auto ed = T.edge(e);
  return "e:" + T.vertex_name(ed.tail) + "," + T.vertex_name(ed.head);
}

std::string face_key(const WeightedTriangulation& T, Index f) {
  const auto fc = T.face(f);
  return "f:" + T.vertex_name(fc.a) + "," + T.vertex_name(fc.b) + "," + T.vertex_name(fc.c);
}

double require_number(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    throw ParseError(std::string("missing or non-numeric field '") + key + "'");
  return j[key].get<double>();
}

std::string require_string(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw ParseError(std::string("missing or non-string field '") + key + "'");
  return j[key].get<std::string>();
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> v)
    : std::runtime_error(v.empty() ? "invalid complex"
                                   : "invalid complex: " + v.front().rule + " (" + v.front().cell +
                                         ")" +
                                         (v.size() > 1
                                              ? " and " + std::to_string(v.size() - 1) + " more"
                                              : "")),
      violations(std::move(v)) {}

std::string to_document(const MagneticTriangulation& mt) {
  const WeightedTriangulation& T = mt.complex;
  std::ostringstream out;
  auto close_array = [&out](Index count) { out << (count ? "\n  ]" : "]"); };

  out << "{\n  \"vertices\": [";
  for (Index v = 0; v < T.vertex_count(); ++v) {
    out << (v ? ",\n    " : "\n    ");
    out << "{\"id\": \"" << escape(T.vertex_name(v)) << "\", \"c\": "
        << format_number(T.vertex_weight(v)) << "}";
  }
  close_array(T.vertex_count());
  out << ",\n  \"edges\": [";
  for (Index e = 0; e < T.edge_count(); ++e) {
    const auto ed = T.edge(e);
    out << (e ? ",\n    " : "\n    ");
    out << "{\"u\": \"" << escape(T.vertex_name(ed.tail)) << "\", \"v\": \""
        << escape(T.vertex_name(ed.head)) << "\", \"r\": " << format_number(T.edge_weight(e))
        << ", \"alpha\": " << format_number(mt.alpha(e)) << "}";
  }
  close_array(T.edge_count());
  out << ",\n  \"faces\": [";
  for (Index f = 0; f < T.face_count(); ++f) {
    const auto fc = T.face(f);
    out << (f ? ",\n    " : "\n    ");
    out << "{\"verts\": [\"" << escape(T.vertex_name(fc.a)) << "\", \""
        << escape(T.vertex_name(fc.b)) << "\", \"" << escape(T.vertex_name(fc.c))
        << "\"], \"s\": " << format_number(T.face_weight(f)) << "}";
  }
  close_array(T.face_count());
  out << "\n}\n";
  return out.str();
}

MagneticTriangulation parse_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document root must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("document must contain a 'vertices' array");

  ComplexBuilder b;
  for (const auto& jv : doc["vertices"]) {
    if (!jv.is_object()) throw ParseError("vertex entries must be objects");
    b.add_vertex(require_string(jv, "id"), require_number(jv, "c"));
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("'edges' must be an array");
    for (const auto& je : doc["edges"]) {
      if (!je.is_object()) throw ParseError("edge entries must be objects");
      const double alpha = je.contains("alpha") ? require_number(je, "alpha") : 0.0;
      b.add_edge(require_string(je, "u"), require_string(je, "v"), require_number(je, "r"), alpha);
    }
  }
  if (doc.contains("faces")) {
    if (!doc["faces"].is_array()) throw ParseError("'faces' must be an array");
    for (const auto& jf : doc["faces"]) {
      if (!jf.is_object()) throw ParseError("face entries must be objects");
      if (!jf.contains("verts") || !jf["verts"].is_array() || jf["verts"].size() != 3 ||
          !jf["verts"][0].is_string() || !jf["verts"][1].is_string() ||
          !jf["verts"][2].is_string())
        throw ParseError("face 'verts' must be an array of three vertex ids");
      b.add_face(jf["verts"][0].get<std::string>(), jf["verts"][1].get<std::string>(),
                 jf["verts"][2].get<std::string>(), require_number(jf, "s"));
    }
  }
  try {
    return b.build();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

MagneticTriangulation load_document(const std::string& text) {
  MagneticTriangulation mt = parse_document(text);
  auto violations = validate(mt.complex);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return mt;
}

MagneticTriangulation load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_document(buf.str());
}

void save_file(const MagneticTriangulation& mt, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing: " + path);
  out << to_document(mt);
}

std::string cochain_to_json(const WeightedTriangulation& T, int degree,
                            const Eigen::VectorXcd& values) {
  const Index expected = degree == 0   ? T.vertex_count()
                         : degree == 1 ? T.edge_count()
                         : degree == 2 ? T.face_count()
                                       : -1;
  if (expected < 0) throw ParseError("cochain degree must be 0, 1 or 2");
  if (values.size() != expected) throw ParseError("cochain size does not match the complex");

  std::ostringstream out;
  out << "{\n  \"degree\": " << degree << ",\n  \"values\": {";
  for (Index i = 0; i < expected; ++i) {
    std::string key = degree == 0 ? "v:" + T.vertex_name(i)
                      : degree == 1 ? edge_key(T, i)
                                    : face_key(T, i);
    out << (i ? ",\n    " : "\n    ");
    out << "\"" << escape(key) << "\": [" << format_number(values(i).real()) << ", "
        << format_number(values(i).imag()) << "]";
  }
  out << (expected ? "\n  }" : "}") << "\n}\n";
  return out.str();
}

Eigen::VectorXcd cochain_from_json(const WeightedTriangulation& T, int degree,
                                   const std::string& text) {
  const Index expected = degree == 0   ? T.vertex_count()
                         : degree == 1 ? T.edge_count()
                         : degree == 2 ? T.face_count()
                                       : -1;
  if (expected < 0) throw ParseError("cochain degree must be 0, 1 or 2");

  std::unordered_map<std::string, Index> keys;
  for (Index i = 0; i < expected; ++i)
    keys.emplace(degree == 0 ? "v:" + T.vertex_name(i) : degree == 1 ? edge_key(T, i)
                                                                     : face_key(T, i),
                 i);

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc["degree"].is_number_integer() ||
      doc["degree"].get<int>() != degree)
    throw ParseError("cochain document degree mismatch");
  if (!doc.contains("values") || !doc["values"].is_object())
    throw ParseError("cochain document must contain a 'values' object");

  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(expected);
  for (const auto& [key, val] : doc["values"].items()) {
    auto it = keys.find(key);
    if (it == keys.end()) throw ParseError("unknown cell key: " + key);
    if (!val.is_array() || val.size() != 2 || !val[0].is_number() || !val[1].is_number())
      throw ParseError("cell values must be [re, im] pairs");
    out(it->second) = Cplx(val[0].get<double>(), val[1].get<double>());
  }
  return out;
}

}  // namespace magtri
