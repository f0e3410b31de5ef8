#include "asl/io.hpp"

#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace asl {

namespace {

using nlohmann::ordered_json;

constexpr const char* kSchemaTag = "asl-1";

[[noreturn]] void parse_fail(const std::string& where, const std::string& why) {
  throw Error(Errc::ParseError, where + ": " + why);
}

const ordered_json& field(const ordered_json& obj, const std::string& where,
                          const char* key) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where + "." + key, "missing");
  return *it;
}

int int_field(const ordered_json& obj, const std::string& where, const char* key) {
  const ordered_json& v = field(obj, where, key);
  if (!v.is_number_integer()) parse_fail(where + "." + key, "not an integer");
  return v.get<int>();
}

const ordered_json& array_field(const ordered_json& obj, const std::string& where,
                                const char* key) {
  const ordered_json& v = field(obj, where, key);
  if (!v.is_array()) parse_fail(where + "." + key, "not an array");
  return v;
}

}  // namespace

std::string write_presentation(const SplitPresentation& sp) {
  SplitPresentation norm = normalized(sp);
  ordered_json doc;
  doc["schema"] = kSchemaTag;
  doc["g"] = norm.spec.genus;
  doc["s"] = norm.spec.points;
  doc["m"] = norm.spec.decorated;
  ordered_json arcs = ordered_json::array();
  for (const Arc& a : norm.arcs) {
    ordered_json ja;
    ja["id"] = a.id;
    ja["u"] = a.u;
    ja["v"] = a.v;
    arcs.push_back(std::move(ja));
  }
  doc["arcs"] = std::move(arcs);
  ordered_json pieces = ordered_json::array();
  for (const Piece& p : norm.pieces) {
    ordered_json jp;
    jp["h"] = p.genus;
    jp["n"] = p.punctures;
    jp["interior_marked"] = p.interior_marked;
    ordered_json cycles = ordered_json::array();
    for (const BoundaryCycle& c : p.cycles) {
      ordered_json jc = ordered_json::array();
      for (const Side& side : c.sides) {
        ordered_json js;
        js["arc"] = side.arc;
        js["dir"] = side.dir == Dir::Forward ? "+" : "-";
        jc.push_back(std::move(js));
      }
      cycles.push_back(std::move(jc));
    }
    jp["cycles"] = std::move(cycles);
    pieces.push_back(std::move(jp));
  }
  doc["pieces"] = std::move(pieces);
  return doc.dump(2) + "\n";
}

SplitPresentation read_presentation(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!doc.is_object()) parse_fail("$", "expected an object");
  const ordered_json& schema = field(doc, "$", "schema");
  if (!schema.is_string()) parse_fail("$.schema", "not a string");
  if (schema.get<std::string>() != kSchemaTag)
    throw Error(Errc::SchemaVersionMismatch,
                "expected \"" + std::string(kSchemaTag) + "\", got \"" +
                    schema.get<std::string>() + "\"");

  SplitPresentation sp;
  sp.spec.genus = int_field(doc, "$", "g");
  sp.spec.points = int_field(doc, "$", "s");
  sp.spec.decorated = int_field(doc, "$", "m");

  const ordered_json& arcs = array_field(doc, "$", "arcs");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    std::string where = "$.arcs[" + std::to_string(i) + "]";
    Arc a;
    a.id = int_field(arcs[i], where, "id");
    a.u = int_field(arcs[i], where, "u");
    a.v = int_field(arcs[i], where, "v");
    sp.arcs.push_back(a);
  }

  const ordered_json& pieces = array_field(doc, "$", "pieces");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    std::string where = "$.pieces[" + std::to_string(i) + "]";
    Piece p;
    p.genus = int_field(pieces[i], where, "h");
    p.punctures = int_field(pieces[i], where, "n");
    const ordered_json& interior = array_field(pieces[i], where, "interior_marked");
    for (std::size_t k = 0; k < interior.size(); ++k) {
      if (!interior[k].is_number_integer())
        parse_fail(where + ".interior_marked[" + std::to_string(k) + "]",
                   "not an integer");
      p.interior_marked.push_back(interior[k].get<int>());
    }
    const ordered_json& cycles = array_field(pieces[i], where, "cycles");
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      std::string cwhere = where + ".cycles[" + std::to_string(c) + "]";
      if (!cycles[c].is_array()) parse_fail(cwhere, "not an array");
      BoundaryCycle cycle;
      for (std::size_t k = 0; k < cycles[c].size(); ++k) {
        std::string swhere = cwhere + "[" + std::to_string(k) + "]";
        const ordered_json& js = cycles[c][k];
        Side side;
        side.arc = int_field(js, swhere, "arc");
        const ordered_json& dir = field(js, swhere, "dir");
        if (!dir.is_string()) parse_fail(swhere + ".dir", "not a string");
        std::string d = dir.get<std::string>();
        if (d == "+") {
          side.dir = Dir::Forward;
        } else if (d == "-") {
          side.dir = Dir::Backward;
        } else {
          parse_fail(swhere + ".dir", "expected \"+\" or \"-\"");
        }
        cycle.sides.push_back(side);
      }
      p.cycles.push_back(std::move(cycle));
    }
    sp.pieces.push_back(std::move(p));
  }
  return sp;
}

std::string export_dot(const SplitPresentation& sp) {
  std::map<int, std::vector<int>> hosts;
  for (std::size_t p = 0; p < sp.pieces.size(); ++p)
    for (const BoundaryCycle& c : sp.pieces[p].cycles)
      for (const Side& side : c.sides) hosts[side.arc].push_back(int(p));

  std::ostringstream os;
  os << "graph arc_system {\n";
  os << "  node [shape=box];\n";
  for (std::size_t p = 0; p < sp.pieces.size(); ++p)
    os << "  p" << p << " [label=\"" << piece_class_name(classify_piece(sp.pieces[p]))
       << "\"];\n";
  for (const Arc& a : sp.arcs) {
    auto it = hosts.find(a.id);
    if (it == hosts.end() || it->second.size() != 2)
      throw Error(Errc::Precondition,
                  "arc " + std::to_string(a.id) + " does not lie on exactly two sides");
    os << "  p" << it->second[0] << " -- p" << it->second[1] << " [label=\"" << a.id
       << ": " << a.u << "-" << a.v << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace asl
