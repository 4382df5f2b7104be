#include "fibcensus/manifold.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "fibcensus/rational.hpp"
#include "json.hpp"

namespace fibcensus {

namespace {

using json = nlohmann::ordered_json;

// Integral witness for "psi spans a nonempty open cone": brute search in a
// small box. Sound to accept on success; on exhaustion the face is rejected.
bool open_cone_nonempty(const NormData& nd, const FiberedFace& face) {
  const int b1 = nd.b1();
  if (b1 > 6) return true;  // box search would be too large; accept
  const Coord B = 4;
  IntVec eta(b1, -B);
  while (true) {
    if (!is_zero(eta) && in_open_cone(nd, face, eta)) return true;
    int i = 0;
    for (; i < b1; ++i) {
      if (eta[i] < B) {
        ++eta[i];
        std::fill(eta.begin(), eta.begin() + i, -B);
        break;
      }
    }
    if (i == b1) return false;
  }
}

NormData make_norm(int b1, std::vector<IntVec> duals) {
  std::sort(duals.begin(), duals.end());  // canonical vertex order
  return NormData(b1, std::move(duals));
}

void check_even_norm_samples(const NormData& nd) {
  std::mt19937 rng(12345u);  // fixed seed: the loader must be deterministic
  std::uniform_int_distribution<Coord> dist(-6, 6);
  for (int s = 0; s < 256; ++s) {
    IntVec eta(nd.b1());
    bool zero = true;
    for (Coord& c : eta) {
      c = dist(rng);
      if (c != 0) zero = false;
    }
    if (zero) continue;
    if (nd.norm(eta) % 2 != 0)
      throw domain_error("sampled class " + to_string(eta) + " has odd norm " +
                         std::to_string(nd.norm(eta)));
  }
}

}  // namespace

ManifoldFile::ManifoldFile(std::string name, bool closed, int b1,
                           std::vector<IntVec> dual_vertices, std::vector<FaceData> faces)
    : name_(std::move(name)),
      closed_(closed),
      norm_(make_norm(b1, std::move(dual_vertices))),
      faces_(std::move(faces)) {
  if (name_.empty()) throw domain_error("manifold name must be nonempty");
  if (faces_.empty()) throw domain_error("at least one fibered face is required");
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const FaceData& f = faces_[i];
    FiberedFace ff = make_face(norm_, f.psi);
    if (!open_cone_nonempty(norm_, ff))
      throw domain_error("no integral class found in the open cone of face " +
                         std::to_string(i));
    if (f.poly.b1() != norm_.b1())
      throw domain_error("polynomial exponent length disagrees with b1");
    for (const CubeRegion& cube : f.cubes) validate_cube(norm_, ff, cube);
    if (closed_ && !f.boundary_functionals.empty())
      throw domain_error("boundary_functionals only valid for cusped manifolds");
    for (const IntVec& b : f.boundary_functionals)
      if (static_cast<int>(b.size()) != norm_.b1())
        throw domain_error("boundary functional " + to_string(b) + " has wrong length");
  }
  check_even_norm_samples(norm_);
}

FiberedFace ManifoldFile::face(int i) const {
  if (i < 0 || i >= static_cast<int>(faces_.size()))
    throw domain_error("face index out of range");
  return make_face(norm_, faces_[static_cast<std::size_t>(i)].psi);
}

namespace {

[[noreturn]] void fail_at(const std::string& path, const std::string& msg) {
  throw validation_error(path + ": " + msg);
}

Coord get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail_at(path, "expected an integer");
  return j.get<Coord>();
}

IntVec get_int_vector(const json& j, const std::string& path) {
  if (!j.is_array()) fail_at(path, "expected an array of integers");
  IntVec v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(get_int(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

mpq_class get_rational(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<Coord>()));
  } catch (const domain_error& e) {
    fail_at(path, e.what());
  }
  fail_at(path, "expected a rational as a \"p/q\" string (float literals are not allowed)");
}

void check_keys(const json& j, const std::vector<std::string>& allowed,
                const std::string& path) {
  for (const auto& [key, _] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      fail_at(path, "unknown key '" + key + "'");
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) fail_at(path, "missing key '" + key + "'");
  return j.at(key);
}

CubeRegion parse_cube(const json& j, int face_index, const std::string& path) {
  if (!j.is_object()) fail_at(path, "expected an object");
  check_keys(j, {"center", "radius", "axes"}, path);
  CubeRegion cube;
  cube.face_index = face_index;
  const json& c = require(j, "center", path);
  if (!c.is_array()) fail_at(path + ".center", "expected an array");
  for (std::size_t i = 0; i < c.size(); ++i)
    cube.center.push_back(get_rational(c[i], path + ".center[" + std::to_string(i) + "]"));
  cube.radius = get_rational(require(j, "radius", path), path + ".radius");
  IntVec axes = get_int_vector(require(j, "axes", path), path + ".axes");
  for (std::size_t i = 0; i + 1 < axes.size(); ++i)
    if (axes[i] >= axes[i + 1]) fail_at(path + ".axes", "axes must be strictly increasing");
  for (Coord a : axes) cube.axes.push_back(static_cast<int>(a));
  return cube;
}

TeichPoly parse_poly(const json& j, int b1, const std::string& path) {
  if (!j.is_array()) fail_at(path, "expected an array of terms");
  std::vector<TeichTerm> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string tp = path + "[" + std::to_string(i) + "]";
    const json& t = j[i];
    if (!t.is_object()) fail_at(tp, "expected an object");
    check_keys(t, {"exponents", "coeff"}, tp);
    TeichTerm term;
    term.exponents = get_int_vector(require(t, "exponents", tp), tp + ".exponents");
    term.coeff = get_int(require(t, "coeff", tp), tp + ".coeff");
    terms.push_back(std::move(term));
  }
  try {
    return TeichPoly(b1, std::move(terms));
  } catch (const domain_error& e) {
    fail_at(path, e.what());
  }
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

ManifoldFile parse_manifold(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw validation_error(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                           ": parse error: " + e.what());
  }
  if (!j.is_object()) fail_at(source, "top level must be an object");
  check_keys(j, {"name", "closed", "b1", "dual_vertices", "faces"}, source);

  const json& jn = require(j, "name", source);
  if (!jn.is_string()) fail_at(source + ".name", "expected a string");
  const json& jc = require(j, "closed", source);
  if (!jc.is_boolean()) fail_at(source + ".closed", "expected a boolean");
  Coord b1 = get_int(require(j, "b1", source), source + ".b1");
  if (b1 < 1 || b1 > 64) fail_at(source + ".b1", "b1 out of range");

  const json& jd = require(j, "dual_vertices", source);
  if (!jd.is_array()) fail_at(source + ".dual_vertices", "expected an array");
  std::vector<IntVec> duals;
  for (std::size_t i = 0; i < jd.size(); ++i) {
    const std::string p = source + ".dual_vertices[" + std::to_string(i) + "]";
    IntVec v = get_int_vector(jd[i], p);
    if (static_cast<Coord>(v.size()) != b1) fail_at(p, "expected length " + std::to_string(b1));
    duals.push_back(std::move(v));
  }

  const json& jf = require(j, "faces", source);
  if (!jf.is_array()) fail_at(source + ".faces", "expected an array");
  std::vector<FaceData> faces;
  for (std::size_t i = 0; i < jf.size(); ++i) {
    const std::string p = source + ".faces[" + std::to_string(i) + "]";
    const json& f = jf[i];
    if (!f.is_object()) fail_at(p, "expected an object");
    check_keys(f, {"psi", "teich_poly", "cubes", "boundary_functionals"}, p);
    IntVec psi = get_int_vector(require(f, "psi", p), p + ".psi");
    TeichPoly poly =
        parse_poly(require(f, "teich_poly", p), static_cast<int>(b1), p + ".teich_poly");
    std::vector<CubeRegion> cubes;
    const json& jcubes = require(f, "cubes", p);
    if (!jcubes.is_array()) fail_at(p + ".cubes", "expected an array");
    for (std::size_t k = 0; k < jcubes.size(); ++k)
      cubes.push_back(parse_cube(jcubes[k], static_cast<int>(i),
                                 p + ".cubes[" + std::to_string(k) + "]"));
    std::vector<IntVec> functionals;
    if (f.contains("boundary_functionals")) {
      const json& jb = f.at("boundary_functionals");
      if (!jb.is_array()) fail_at(p + ".boundary_functionals", "expected an array");
      for (std::size_t k = 0; k < jb.size(); ++k)
        functionals.push_back(get_int_vector(
            jb[k], p + ".boundary_functionals[" + std::to_string(k) + "]"));
    }
    faces.emplace_back(std::move(psi), std::move(poly), std::move(cubes),
                       std::move(functionals));
  }

  try {
    return ManifoldFile(jn.get<std::string>(), jc.get<bool>(), static_cast<int>(b1),
                        std::move(duals), std::move(faces));
  } catch (const validation_error&) {
    throw;
  } catch (const domain_error& e) {
    throw validation_error(source + ": " + e.what());
  }
}

ManifoldFile load_manifold(const std::string& path) {
  std::string resolved = resolve_manifold_path(path);
  std::ifstream in(resolved, std::ios::binary);
  if (!in) throw validation_error(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifold(ss.str(), resolved);
}

std::string resolve_manifold_path(const std::string& path) {
  if (std::ifstream(path)) return path;
  if (const char* dir = std::getenv("FIBERED_CENSUS_DATA")) {
    std::string candidate = std::string(dir) + "/" + path;
    if (std::ifstream(candidate)) return candidate;
  }
  return path;
}

namespace {

void write_int_vector(std::ostream& os, const IntVec& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ']';
}

}  // namespace

std::string canonical_text(const ManifoldFile& mf) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": \"" << mf.name() << "\",\n";
  os << "  \"closed\": " << (mf.closed() ? "true" : "false") << ",\n";
  os << "  \"b1\": " << mf.b1() << ",\n";
  os << "  \"dual_vertices\": [\n";
  const auto& duals = mf.norm_data().dual_vertices();
  for (std::size_t i = 0; i < duals.size(); ++i) {
    os << "    ";
    write_int_vector(os, duals[i]);
    os << (i + 1 < duals.size() ? ",\n" : "\n");
  }
  os << "  ],\n";
  os << "  \"faces\": [\n";
  const auto& faces = mf.faces();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const FaceData& f = faces[i];
    os << "    {\n";
    os << "      \"psi\": ";
    write_int_vector(os, f.psi);
    os << ",\n";
    os << "      \"teich_poly\": [\n";
    const auto& terms = f.poly.terms();
    for (std::size_t t = 0; t < terms.size(); ++t) {
      os << "        {\"exponents\": ";
      write_int_vector(os, terms[t].exponents);
      os << ", \"coeff\": " << terms[t].coeff << '}';
      os << (t + 1 < terms.size() ? ",\n" : "\n");
    }
    os << "      ],\n";
    os << "      \"cubes\": [";
    for (std::size_t c = 0; c < f.cubes.size(); ++c) {
      const CubeRegion& cube = f.cubes[c];
      os << (c ? ",\n        " : "\n        ");
      os << "{\"center\": [";
      for (std::size_t k = 0; k < cube.center.size(); ++k) {
        if (k) os << ", ";
        os << '"' << format_rational(cube.center[k]) << '"';
      }
      os << "], \"radius\": \"" << format_rational(cube.radius) << "\", \"axes\": [";
      for (std::size_t k = 0; k < cube.axes.size(); ++k) {
        if (k) os << ", ";
        os << cube.axes[k];
      }
      os << "]}";
    }
    os << (f.cubes.empty() ? "]" : "\n      ]");
    if (!f.boundary_functionals.empty()) {
      os << ",\n      \"boundary_functionals\": [\n";
      for (std::size_t k = 0; k < f.boundary_functionals.size(); ++k) {
        os << "        ";
        write_int_vector(os, f.boundary_functionals[k]);
        os << (k + 1 < f.boundary_functionals.size() ? ",\n" : "\n");
      }
      os << "      ]";
    }
    os << "\n    }" << (i + 1 < faces.size() ? ",\n" : "\n");
  }
  os << "  ]\n";
  os << "}\n";
  return os.str();
}

void save_manifold(const ManifoldFile& mf, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw domain_error("cannot write " + path);
  out << canonical_text(mf);
}

}  // namespace fibcensus
