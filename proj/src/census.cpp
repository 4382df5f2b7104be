#include "fibcensus/census.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

namespace fibcensus {

namespace {

// Round-robin worker pool writing into index-addressed slots, so results do
// not depend on scheduling.
void parallel_indices(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> threads;
  const int k = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), n));
  for (int t = 0; t < k; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
}

}  // namespace

SymmetryGroup symmetry_group(const NormData& nd) {
  const auto& duals = nd.dual_vertices();
  const int b1 = nd.b1();
  const std::size_t nd_count = duals.size();
  double tuples = 1;
  for (int i = 0; i < b1; ++i) tuples *= static_cast<double>(nd_count);
  if (tuples > 4e6) throw domain_error("dual vertex set too large for symmetry search");

  std::vector<int> idx = independent_subset(duals);
  // columns of Vc are the chosen independent vertices
  IntMat Vc(b1, IntVec(b1, 0));
  for (int c = 0; c < b1; ++c)
    for (int r = 0; r < b1; ++r) Vc[r][c] = duals[idx[c]][r];
  const Coord dv = det(Vc);
  const IntMat adjV = adjugate(Vc);

  std::set<IntVec> dual_set(duals.begin(), duals.end());
  SymmetryGroup G;
  std::vector<std::size_t> tuple(b1, 0);
  while (true) {
    // candidate B with B * v_i = w_i for the chosen subset
    IntMat Wc(b1, IntVec(b1, 0));
    for (int c = 0; c < b1; ++c)
      for (int r = 0; r < b1; ++r) Wc[r][c] = duals[tuple[c]][r];
    IntMat M = mat_mul(Wc, adjV);
    bool integral = true;
    for (int r = 0; r < b1 && integral; ++r)
      for (int c = 0; c < b1; ++c)
        if (M[r][c] % dv != 0) {
          integral = false;
          break;
        }
    if (integral) {
      IntMat B(b1, IntVec(b1));
      for (int r = 0; r < b1; ++r)
        for (int c = 0; c < b1; ++c) B[r][c] = M[r][c] / dv;
      Coord d = det(B);
      if (d == 1 || d == -1) {
        bool permutes = true;
        for (const IntVec& v : duals)
          if (!dual_set.count(mat_apply(B, v))) {
            permutes = false;
            break;
          }
        if (permutes) {
          // B acts on the dual side; the class action is its transpose
          IntMat A(b1, IntVec(b1));
          for (int r = 0; r < b1; ++r)
            for (int c = 0; c < b1; ++c) A[r][c] = B[c][r];
          G.elements.push_back(std::move(A));
        }
      }
    }
    int i = 0;
    for (; i < b1; ++i) {
      if (tuple[i] + 1 < nd_count) {
        ++tuple[i];
        std::fill(tuple.begin(), tuple.begin() + i, 0);
        break;
      }
    }
    if (i == b1) break;
  }
  std::sort(G.elements.begin(), G.elements.end());
  if (G.order() < 2) throw domain_error("symmetry search lost +/- identity; data corrupt");
  return G;
}

long long orbit_count_classes(const std::vector<IntVec>& classes, const SymmetryGroup& G) {
  std::set<IntVec> reps;
  for (const IntVec& c : classes) {
    IntVec best = c;
    for (const IntMat& A : G.elements) best = std::min(best, mat_apply(A, c));
    reps.insert(std::move(best));
  }
  return static_cast<long long>(reps.size());
}

long long orbit_count(const std::vector<FiberRecord>& records, const SymmetryGroup& G) {
  for (std::size_t i = 1; i < records.size(); ++i)
    if (records[i].genus != records[0].genus)
      throw domain_error("orbit count expects records of a single genus");
  std::vector<IntVec> classes;
  classes.reserve(records.size());
  for (const FiberRecord& r : records) classes.push_back(r.cls);
  return orbit_count_classes(classes, G);
}

namespace {

FiberRecord make_record(const ManifoldFile& mf, int face_index, const IntVec& cls,
                        const mpq_class& tol) {
  const NormData& nd = mf.norm_data();
  FiberedFace face = mf.face(face_index);
  const FaceData& fd = mf.faces()[static_cast<std::size_t>(face_index)];
  FiberRecord rec;
  rec.cls = cls;
  rec.norm = nd.norm(cls);
  if (!in_open_cone(nd, face, cls))
    throw domain_error("enumerated class " + to_string(cls) + " escaped the open cone");
  rec.genus = mf.closed()
                  ? genus_of_closed_fiber(nd, face, cls)
                  : genus_of_punctured_fiber(nd, face, fd.boundary_functionals, cls);
  try {
    rec.lambda = dilatation(fd.poly, cls, tol);
    rec.normalized = scaled_log_interval(rec.lambda, static_cast<double>(rec.genus));
  } catch (const domain_error& e) {
    rec.status = e.what();
  }
  return rec;
}

GenusRow census_row(const ManifoldFile& mf, const SymmetryGroup& G, double L, Coord g,
                    const mpq_class& tol) {
  const NormData& nd = mf.norm_data();
  GenusRow row;
  row.g = g;
  row.upper_bound = count_ball_points(nd, g >= 1 ? 6 * g - 6 : 0);
  if (g < 2) return row;  // norm-0 classes are not fibers

  std::map<IntVec, int> candidates;  // class -> face index
  for (std::size_t fi = 0; fi < mf.faces().size(); ++fi) {
    for (const CubeRegion& cube : mf.faces()[fi].cubes) {
      for (IntVec& pt : enumerate_cube(cube, g)) {
        if (!is_primitive(pt)) continue;
        auto [it, inserted] = candidates.emplace(std::move(pt), static_cast<int>(fi));
        if (!inserted && it->second != static_cast<int>(fi))
          throw domain_error("class " + to_string(it->first) + " claimed by two faces");
      }
    }
  }
  for (const auto& [cls, fi] : candidates) {
    FiberRecord rec = make_record(mf, fi, cls, tol);
    if (rec.norm != 2 * g - 2)
      throw domain_error("slice produced norm " + std::to_string(rec.norm) +
                         " at genus " + std::to_string(g));
    if (!rec.status.empty()) {
      row.failed.push_back(std::move(rec));
    } else if (rec.normalized.hi <= L) {
      row.included.push_back(std::move(rec));
    } else if (rec.normalized.lo <= L) {
      row.undecided.push_back(std::move(rec));
    }  // else certainly above the budget: not a census member
  }
  {
    std::vector<IntVec> classes;
    classes.reserve(row.included.size());
    for (const FiberRecord& rec : row.included) classes.push_back(rec.cls);
    row.orbits = orbit_count_classes(classes, G);  // cusped rows may mix genera
  }
  if (static_cast<long long>(row.included.size()) > row.upper_bound)
    throw domain_error("census count exceeds ball-count bound; data corrupt");
  return row;
}

}  // namespace

CensusResult run_census(const ManifoldFile& mf, double L, Coord g_lo, Coord g_hi,
                        const mpq_class& tol, int jobs) {
  if (g_lo < 1 || g_hi < g_lo) throw domain_error("invalid genus range");
  if (!(L > 0)) throw domain_error("L must be positive");
  if (!mf.closed())
    for (const FaceData& f : mf.faces())
      if (f.boundary_functionals.empty())
        throw domain_error("cusped census requires boundary_functionals on every face");
  CensusResult result;
  SymmetryGroup G = symmetry_group(mf.norm_data());
  result.group_order = G.order();
  const std::size_t n = static_cast<std::size_t>(g_hi - g_lo + 1);
  result.rows.resize(n);
  std::vector<std::string> errors(n);
  parallel_indices(n, jobs, [&](std::size_t i) {
    try {
      result.rows[i] = census_row(mf, G, L, g_lo + static_cast<Coord>(i), tol);
    } catch (const domain_error& e) {
      errors[i] = e.what();
    }
  });
  for (const std::string& e : errors)
    if (!e.empty()) throw domain_error(e);
  return result;
}

long long upper_bound_report(const ManifoldFile& mf, Coord g, long long census_raw,
                             int jobs) {
  long long ub = count_ball_points(mf.norm_data(), g >= 1 ? 6 * g - 6 : 0, jobs);
  if (census_raw > ub)
    throw domain_error("census raw count " + std::to_string(census_raw) +
                       " exceeds the ball-count bound " + std::to_string(ub));
  return ub;
}

PennerFamily penner_family(const ManifoldFile& mf, int face_index, const IntVec& S,
                           const IntVec& Sigma, Coord g_max, const mpq_class& tol,
                           int jobs) {
  const NormData& nd = mf.norm_data();
  FiberedFace face = mf.face(face_index);
  if (dot(face.psi, Sigma) != 0)
    throw domain_error("Sigma " + to_string(Sigma) + " is not in the kernel of psi");
  if (!in_open_cone(nd, face, S))
    throw domain_error("S " + to_string(S) + " is not in the open cone of the face");
  if (g_max < 2) throw domain_error("g_max must be at least 2");
  const Coord norm_S = nd.norm(S);

  PennerFamily fam;
  for (Coord g = 2; g <= g_max && fam.start_genus == 0; ++g) {
    IntVec eta = add(scale(g - 1, S), Sigma);
    if (is_zero(eta) || !is_primitive(eta) || !in_open_cone(nd, face, eta)) continue;
    fam.start_genus = g;
  }
  if (fam.start_genus == 0)
    throw domain_error("no genus up to " + std::to_string(g_max) +
                       " yields a primitive class in the open cone");

  const std::size_t n = static_cast<std::size_t>(g_max - fam.start_genus + 1);
  fam.records.resize(n);
  std::vector<std::string> errors(n);
  parallel_indices(n, jobs, [&](std::size_t i) {
    const Coord g = fam.start_genus + static_cast<Coord>(i);
    IntVec eta = add(scale(g - 1, S), Sigma);
    FiberRecord rec;
    rec.cls = eta;
    if (!is_primitive(eta)) {
      rec.status = "imprimitive";
    } else if (!in_open_cone(nd, face, eta)) {
      rec.status = "cone-boundary";
    } else {
      try {
        rec = make_record(mf, face_index, eta, tol);
        if (rec.norm != (g - 1) * norm_S) {
          errors[i] = "family norm " + std::to_string(rec.norm) + " differs from (g-1)*" +
                      std::to_string(norm_S) + " at g=" + std::to_string(g);
          return;
        }
      } catch (const domain_error& e) {
        rec.status = e.what();
      }
    }
    fam.records[i] = std::move(rec);
  });
  for (const std::string& e : errors)
    if (!e.empty()) throw domain_error(e);
  return fam;
}

}  // namespace fibcensus
