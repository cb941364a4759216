#include "matchstick/realize.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace matchstick {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Soft clearance targets for the penalty terms.  They only shape the search;
// validation enforces the configured tolerances, so an embedding that truly
// needs clearances below these still converges and passes.
constexpr double kSepTarget = 0.28;
constexpr double kSepWeight = 0.45;
constexpr double kVertexEdgeTarget = 0.14;
constexpr double kVertexEdgeWeight = 0.65;
constexpr double kEdgeEdgeTarget = 0.11;
constexpr double kEdgeEdgeWeight = 1.0;

// Per-restart multipliers on the three clearance targets.
constexpr double kTargetSchedule[3] = {1.0, 0.4, 0.15};

// Acceptance cap on |edge length - 1|.  Separating a forced coincidence by h
// costs on the order of h^2 in edge length, so clearing the tightened 1e-5
// floors out of length slack takes around 1e-11 of it, while polishing a
// genuine solution lands below 1e-13.  A cap between those scales rejects
// near-degenerate drawings without touching real ones.
constexpr double kAcceptedLengthDeviation = 1e-12;

struct V2 {
  double x = 0, y = 0;
};
V2 operator-(V2 a, V2 b) { return {a.x - b.x, a.y - b.y}; }
double dot(V2 a, V2 b) { return a.x * b.x + a.y * b.y; }
double cross(V2 a, V2 b) { return a.x * b.y - a.y * b.x; }
double norm(V2 a) { return std::hypot(a.x, a.y); }

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
  return double(splitmix64(state) >> 11) * 0x1.0p-53;
}

// Distance from p to segment ab with the clamped parameter of the foot.
struct PointSegDist {
  double d;
  double t;  // 0 or 1 at an endpoint, strictly inside (0,1) otherwise
};

PointSegDist point_segment_distance(V2 p, V2 a, V2 b) {
  V2 e = b - a;
  double len2 = dot(e, e);
  if (len2 < 1e-30) return {norm(p - a), 0.0};
  double t = dot(p - a, e) / len2;
  if (t <= 0) return {norm(p - a), 0.0};
  if (t >= 1) return {norm(p - b), 1.0};
  return {std::fabs(cross(e, p - a)) / std::sqrt(len2), t};
}

bool segments_properly_cross(V2 a, V2 b, V2 c, V2 d) {
  double d1 = cross(b - a, c - a);
  double d2 = cross(b - a, d - a);
  double d3 = cross(d - c, a - c);
  double d4 = cross(d - c, b - c);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

double segment_segment_distance(V2 a, V2 b, V2 c, V2 d) {
  if (segments_properly_cross(a, b, c, d)) return 0.0;
  double m = point_segment_distance(a, c, d).d;
  m = std::min(m, point_segment_distance(b, c, d).d);
  m = std::min(m, point_segment_distance(c, a, b).d);
  m = std::min(m, point_segment_distance(d, a, b).d);
  return m;
}

// Constraint pair lists for one graph.
struct Terms {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> far_pairs;               // non-adjacent vertex pairs
  std::vector<std::array<int, 3>> vertex_edge;              // w, then edge (u,v), w not endpoint
  std::vector<std::pair<int, int>> edge_pairs;              // edge indices, no shared endpoint
};

Terms build_terms(const Graph& g) {
  Terms t;
  t.edges = g.edges();
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) t.far_pairs.emplace_back(u, v);
  for (int w = 0; w < n; ++w)
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      auto [u, v] = t.edges[e];
      if (w != u && w != v) t.vertex_edge.push_back({w, u, v});
    }
  for (std::size_t e = 0; e < t.edges.size(); ++e)
    for (std::size_t f = e + 1; f < t.edges.size(); ++f) {
      auto [a, b] = t.edges[e];
      auto [c, d] = t.edges[f];
      if (a != c && a != d && b != c && b != d)
        t.edge_pairs.emplace_back(static_cast<int>(e), static_cast<int>(f));
    }
  return t;
}

V2 at(const std::vector<double>& x, int v) { return {x[2 * v], x[2 * v + 1]}; }

// Dense residual/Jacobian assembly.  Rows for inactive hinge terms are left
// zero; J may be null when only the cost is needed.
struct Assembler {
  const Terms& t;
  const std::vector<double>& x;
  Eigen::VectorXd* r;
  Eigen::MatrixXd* J;
  int row = 0;

  void add(int var, double val) {
    if (J) (*J)(row, var) += val;
  }
  void addv(int vertex, V2 grad) {
    add(2 * vertex, grad.x);
    add(2 * vertex + 1, grad.y);
  }
  void set_residual(double val) { (*r)(row) = val; }

  // d = |pu - pv| with gradient +/- the unit vector.
  void distance_term(int u, int v, double scale, double offset) {
    V2 pu = at(x, u), pv = at(x, v);
    V2 e = pu - pv;
    double d = std::max(norm(e), 1e-15);
    set_residual(scale * (d + offset));
    V2 unit{e.x / d, e.y / d};
    addv(u, {scale * unit.x, scale * unit.y});
    addv(v, {-scale * unit.x, -scale * unit.y});
  }

  // Gradient of the unsigned distance from p to the line through ab,
  // accumulated with an overall scale.
  void line_distance_grad(int ip, int ia, int ib, double scale) {
    V2 p = at(x, ip), a = at(x, ia), b = at(x, ib);
    V2 e = b - a;
    double L = std::max(norm(e), 1e-15);
    double c = cross(e, p - a);
    double s = c >= 0 ? 1.0 : -1.0;
    double ac = std::fabs(c);
    addv(ip, {scale * s * -e.y / L, scale * s * e.x / L});
    addv(ia, {scale * (s * (b.y - p.y) / L + ac * e.x / (L * L * L)),
              scale * (s * (p.x - b.x) / L + ac * e.y / (L * L * L))});
    addv(ib, {scale * (s * (p.y - a.y) / L - ac * e.x / (L * L * L)),
              scale * (s * (a.x - p.x) / L - ac * e.y / (L * L * L))});
  }

  // Hinge on the point-to-segment clearance of vertex w against edge (u,v).
  void vertex_edge_term(int w, int u, int v, double target, double weight) {
    V2 p = at(x, w), a = at(x, u), b = at(x, v);
    auto [d, tt] = point_segment_distance(p, a, b);
    if (d >= target) return;
    set_residual(weight * (target - d));
    if (tt <= 0) {
      V2 e = p - a;
      double dd = std::max(d, 1e-15);
      addv(w, {-weight * e.x / dd, -weight * e.y / dd});
      addv(u, {weight * e.x / dd, weight * e.y / dd});
    } else if (tt >= 1) {
      V2 e = p - b;
      double dd = std::max(d, 1e-15);
      addv(w, {-weight * e.x / dd, -weight * e.y / dd});
      addv(v, {weight * e.x / dd, weight * e.y / dd});
    } else {
      line_distance_grad(w, u, v, -weight);
    }
  }

  // Hinge on the clearance between two vertex-disjoint edges; properly
  // crossing pairs are charged the crossing depth on top of the full target
  // so the optimizer is pushed through to the separated side.
  void edge_edge_term(int a, int b, int c, int d, double target, double weight) {
    V2 pa = at(x, a), pb = at(x, b), pc = at(x, c), pd = at(x, d);
    if (segments_properly_cross(pa, pb, pc, pd)) {
      struct Cand {
        int p, u, v;
        double dist;
      };
      auto line_dist = [&](V2 p, V2 s, V2 t) {
        V2 e = t - s;
        return std::fabs(cross(e, p - s)) / std::max(norm(e), 1e-15);
      };
      Cand cands[4] = {{a, c, d, line_dist(pa, pc, pd)},
                       {b, c, d, line_dist(pb, pc, pd)},
                       {c, a, b, line_dist(pc, pa, pb)},
                       {d, a, b, line_dist(pd, pa, pb)}};
      const Cand* best = &cands[0];
      for (const Cand& cand : cands)
        if (cand.dist < best->dist) best = &cand;
      set_residual(weight * (target + best->dist));
      line_distance_grad(best->p, best->u, best->v, weight);
      return;
    }

    PointSegDist cands[4] = {point_segment_distance(pa, pc, pd), point_segment_distance(pb, pc, pd),
                             point_segment_distance(pc, pa, pb), point_segment_distance(pd, pa, pb)};
    int which = 0;
    for (int i = 1; i < 4; ++i)
      if (cands[i].d < cands[which].d) which = i;
    double dist = cands[which].d;
    if (dist >= target) return;
    set_residual(weight * (target - dist));
    int p = which == 0 ? a : which == 1 ? b : which == 2 ? c : d;
    int su = which < 2 ? c : a;
    int sv = which < 2 ? d : b;
    double tt = cands[which].t;
    V2 pp = at(x, p), sa = at(x, su), sb = at(x, sv);
    if (tt <= 0) {
      V2 e = pp - sa;
      double dd = std::max(dist, 1e-15);
      addv(p, {-weight * e.x / dd, -weight * e.y / dd});
      addv(su, {weight * e.x / dd, weight * e.y / dd});
    } else if (tt >= 1) {
      V2 e = pp - sb;
      double dd = std::max(dist, 1e-15);
      addv(p, {-weight * e.x / dd, -weight * e.y / dd});
      addv(sv, {weight * e.x / dd, weight * e.y / dd});
    } else {
      line_distance_grad(p, su, sv, -weight);
    }
  }
};

int residual_count(const Terms& t, bool penalties) {
  int n = static_cast<int>(t.edges.size());
  if (penalties)
    n += static_cast<int>(t.far_pairs.size() + t.vertex_edge.size() + t.edge_pairs.size());
  return n;
}

void assemble(const Terms& t, const std::vector<double>& x, bool penalties, double target_scale,
              Eigen::VectorXd& r, Eigen::MatrixXd* J) {
  r.setZero();
  if (J) J->setZero();
  Assembler as{t, x, &r, J};
  for (auto [u, v] : t.edges) {
    as.distance_term(u, v, 1.0, -1.0);
    ++as.row;
  }
  if (!penalties) return;
  const double sep_target = kSepTarget * target_scale;
  for (auto [u, v] : t.far_pairs) {
    V2 e = at(x, u) - at(x, v);
    double d = norm(e);
    if (d < sep_target) as.distance_term(u, v, -kSepWeight, -sep_target);
    ++as.row;
  }
  for (auto [w, u, v] : t.vertex_edge) {
    as.vertex_edge_term(w, u, v, kVertexEdgeTarget * target_scale, kVertexEdgeWeight);
    ++as.row;
  }
  for (auto [e, f] : t.edge_pairs) {
    auto [a, b] = t.edges[e];
    auto [c, d] = t.edges[f];
    as.edge_edge_term(a, b, c, d, kEdgeEdgeTarget * target_scale, kEdgeEdgeWeight);
    ++as.row;
  }
}

double cost_only(const Terms& t, const std::vector<double>& x, bool penalties,
                 double target_scale) {
  Eigen::VectorXd r(residual_count(t, penalties));
  assemble(t, x, penalties, target_scale, r, nullptr);
  return r.squaredNorm();
}

double max_length_deviation(const Terms& t, const std::vector<double>& x) {
  double worst = 0;
  for (auto [u, v] : t.edges) worst = std::max(worst, std::fabs(norm(at(x, u) - at(x, v)) - 1.0));
  return worst;
}

// Levenberg-Marquardt descent on the residual system.
void lm_minimize(const Terms& t, std::vector<double>& x, bool penalties, double target_scale,
                 int max_iter) {
  const int nv = static_cast<int>(x.size());
  const int nr = residual_count(t, penalties);
  Eigen::VectorXd r(nr);
  Eigen::MatrixXd J(nr, nv);
  double lambda = 1e-3;

  assemble(t, x, penalties, target_scale, r, &J);
  double cost = r.squaredNorm();
  for (int iter = 0; iter < max_iter; ++iter) {
    Eigen::VectorXd grad = J.transpose() * r;
    if (grad.lpNorm<Eigen::Infinity>() < 1e-14) break;
    Eigen::MatrixXd jtj = J.transpose() * J;

    bool stepped = false;
    for (int tries = 0; tries < 24 && !stepped; ++tries) {
      Eigen::MatrixXd m = jtj;
      for (int i = 0; i < nv; ++i) m(i, i) += lambda;
      Eigen::VectorXd delta = m.ldlt().solve(-grad);
      std::vector<double> xn(x);
      for (int i = 0; i < nv; ++i) xn[i] += delta(i);
      double cn = cost_only(t, xn, penalties, target_scale);
      if (cn < cost) {
        double drop = cost - cn;
        x = std::move(xn);
        cost = cn;
        lambda = std::max(lambda / 3, 1e-12);
        stepped = true;
        assemble(t, x, penalties, target_scale, r, &J);
        if (drop < 1e-18 && max_length_deviation(t, x) < 1e-8) return;
      } else {
        lambda *= 4;
        if (lambda > 1e9) return;
      }
    }
    if (!stepped) return;
  }
}

// Gauss-Newton projection onto exact unit lengths; the minimum-norm step
// leaves the surrounding geometry essentially untouched.
void polish_lengths(const Terms& t, std::vector<double>& x) {
  const int nv = static_cast<int>(x.size());
  const int ne = static_cast<int>(t.edges.size());
  Eigen::VectorXd r(ne);
  Eigen::MatrixXd J(ne, nv);
  Terms lengths_only;
  lengths_only.edges = t.edges;
  for (int iter = 0; iter < 12; ++iter) {
    assemble(lengths_only, x, false, 1.0, r, &J);
    if (r.lpNorm<Eigen::Infinity>() < 1e-14) return;
    Eigen::VectorXd delta = J.completeOrthogonalDecomposition().solve(-r);
    for (int i = 0; i < nv; ++i) x[i] += delta(i);
  }
}

// Deterministic pose: first edge starts at the origin pointing along +x, and
// the first off-axis vertex gets positive y.
void normalize_pose(const Terms& t, std::vector<double>& x) {
  if (t.edges.empty() || x.size() < 4) return;
  auto [u0, v0] = t.edges.front();
  V2 origin = at(x, u0);
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) {
    x[i] -= origin.x;
    x[i + 1] -= origin.y;
  }
  V2 dir = at(x, v0);
  double len = norm(dir);
  if (len > 1e-12) {
    double c = dir.x / len, s = dir.y / len;
    for (std::size_t i = 0; i + 1 < x.size(); i += 2) {
      double px = x[i], py = x[i + 1];
      x[i] = c * px + s * py;
      x[i + 1] = -s * px + c * py;
    }
  }
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) {
    if (std::fabs(x[i + 1]) > 1e-9) {
      if (x[i + 1] < 0)
        for (std::size_t k = 1; k < x.size(); k += 2) x[k] = -x[k];
      break;
    }
  }
}

std::uint64_t fnv1a(const void* data, std::size_t len) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

std::string Embedding::to_xy() const {
  std::string out;
  char line[96];
  for (std::size_t v = 0; v < points.size(); ++v) {
    std::snprintf(line, sizeof line, "%zu %.17g %.17g\n", v, points[v][0], points[v][1]);
    out += line;
  }
  return out;
}

Embedding Embedding::from_xy(std::string_view text) {
  Embedding e;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::size_t v;
    double px, py;
    if (!(row >> v >> px >> py)) throw std::invalid_argument("bad embedding line: " + line);
    if (v != e.points.size()) throw std::invalid_argument("embedding vertices out of order");
    e.points.push_back({px, py});
  }
  return e;
}

bool check_obstruction(const Graph& g, const Obstruction& obs) {
  const auto& vs = obs.vertices;
  auto in_range = [&](int v) { return v >= 0 && v < g.vertex_count(); };
  if (obs.kind == Obstruction::Kind::k4_subgraph) {
    if (vs.size() != 4) return false;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!in_range(vs[i]) || !in_range(vs[j]) || !g.has_edge(vs[i], vs[j])) return false;
    return true;
  }
  if (vs.size() < 5) return false;  // u, v and at least three common neighbors
  int u = vs[0], v = vs[1];
  if (!in_range(u) || !in_range(v) || u == v) return false;
  for (std::size_t i = 2; i < vs.size(); ++i)
    if (!in_range(vs[i]) || !g.has_edge(u, vs[i]) || !g.has_edge(v, vs[i])) return false;
  return true;
}

std::optional<Obstruction> exact_obstruction(const Graph& g) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.has_edge(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
        for (int d = c + 1; d < n; ++d)
          if (g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d))
            return Obstruction{Obstruction::Kind::k4_subgraph, {a, b, c, d}};
      }
    }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::uint16_t common = g.neighbors(u) & g.neighbors(v);
      if (std::popcount(common) < 3) continue;
      Obstruction obs{Obstruction::Kind::shared_neighborhood, {u, v}};
      for (int w = 0; w < n; ++w)
        if (common & (1u << w)) obs.vertices.push_back(w);
      return obs;
    }
  return std::nullopt;
}

bool ValidationReport::passes(const SolveConfig& cfg) const {
  return max_length_deviation <= cfg.length_tol && min_crossing_margin >= cfg.cross_tol &&
         min_incident_angle >= cfg.angle_tol && min_vertex_separation >= cfg.vertex_sep &&
         min_vertex_edge_distance >= cfg.vertex_sep;
}

ValidationReport validate_embedding(const Graph& g, const Embedding& e) {
  if (static_cast<int>(e.points.size()) != g.vertex_count())
    throw std::invalid_argument("embedding size does not match vertex count");
  ValidationReport rep;
  rep.min_crossing_margin = kInf;
  rep.min_incident_angle = kInf;
  rep.min_vertex_separation = kInf;
  rep.min_vertex_edge_distance = kInf;

  auto p = [&](int v) { return V2{e.points[v][0], e.points[v][1]}; };
  Terms t = build_terms(g);

  for (auto [u, v] : t.edges)
    rep.max_length_deviation = std::max(rep.max_length_deviation, std::fabs(norm(p(u) - p(v)) - 1.0));
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      rep.min_vertex_separation = std::min(rep.min_vertex_separation, norm(p(u) - p(v)));
  for (int w = 0; w < g.vertex_count(); ++w) {
    std::uint16_t nb = g.neighbors(w);
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (!(nb & (1u << u))) continue;
      for (int v = u + 1; v < g.vertex_count(); ++v) {
        if (!(nb & (1u << v))) continue;
        V2 du = p(u) - p(w), dv = p(v) - p(w);
        double lu = norm(du), lv = norm(dv);
        double angle = 0;
        if (lu > 1e-15 && lv > 1e-15)
          angle = std::acos(std::clamp(dot(du, dv) / (lu * lv), -1.0, 1.0));
        rep.min_incident_angle = std::min(rep.min_incident_angle, angle);
      }
    }
  }
  for (auto [w, u, v] : t.vertex_edge)
    rep.min_vertex_edge_distance =
        std::min(rep.min_vertex_edge_distance, point_segment_distance(p(w), p(u), p(v)).d);
  for (auto [ei, fi] : t.edge_pairs) {
    auto [a, b] = t.edges[ei];
    auto [c, d] = t.edges[fi];
    rep.min_crossing_margin =
        std::min(rep.min_crossing_margin, segment_segment_distance(p(a), p(b), p(c), p(d)));
  }
  return rep;
}

double solver_objective(const Graph& g, const std::vector<double>& x) {
  if (x.size() != 2 * static_cast<std::size_t>(g.vertex_count()))
    throw std::invalid_argument("state size mismatch");
  return cost_only(build_terms(g), x, true, 1.0);
}

std::vector<double> solver_gradient(const Graph& g, const std::vector<double>& x) {
  if (x.size() != 2 * static_cast<std::size_t>(g.vertex_count()))
    throw std::invalid_argument("state size mismatch");
  Terms t = build_terms(g);
  const int nr = residual_count(t, true);
  Eigen::VectorXd r(nr);
  Eigen::MatrixXd J(nr, static_cast<int>(x.size()));
  assemble(t, x, true, 1.0, r, &J);
  Eigen::VectorXd grad = 2.0 * (J.transpose() * r);
  return std::vector<double>(grad.data(), grad.data() + grad.size());
}

RealizeOutcome realize(const Graph& g, const SolveConfig& cfg) {
  if (!g.connected()) throw std::invalid_argument("realize requires a connected graph");

  if (auto obs = exact_obstruction(g)) {
    RealizeOutcome out{RealizeOutcome::Verdict::obstructed, std::nullopt, std::move(obs), 0};
    return out;
  }

  SolveConfig accept = cfg.tightened(cfg.headroom);
  accept.length_tol = std::min(accept.length_tol, kAcceptedLengthDeviation);

  if (g.is_tree()) {
    Embedding e = realize_tree(g);
    if (validate_embedding(g, e).passes(accept))
      return {RealizeOutcome::Verdict::realized, std::move(e), std::nullopt, 0};
  }

  Terms t = build_terms(g);
  const int nv = 2 * g.vertex_count();
  std::string id = g.to_text();
  std::uint64_t base = cfg.rng_seed ^ fnv1a(id.data(), id.size());

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::uint64_t stream = base;
    splitmix64(stream);
    stream += static_cast<std::uint64_t>(restart) * 0x9e3779b97f4a7c15ull;

    std::vector<double> x(nv);
    const double half = 1.0 + 0.4 * g.vertex_count();
    for (int i = 0; i < nv; ++i) x[i] = (uniform01(stream) * 2 - 1) * half;

    // Cycle the clearance targets: roomy drawings fall out of the wide
    // shaping, while tightly packed ones need the gentler pull to let the
    // unit lengths win near the solution.
    const double target_scale = kTargetSchedule[restart % 3];

    lm_minimize(t, x, false, 1.0, std::min(cfg.max_iterations, 160));
    if (max_length_deviation(t, x) > 0.05) continue;
    lm_minimize(t, x, true, target_scale, cfg.max_iterations);
    polish_lengths(t, x);
    normalize_pose(t, x);

    Embedding e;
    e.points.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) e.points[v] = {x[2 * v], x[2 * v + 1]};
    if (validate_embedding(g, e).passes(accept))
      return {RealizeOutcome::Verdict::realized, std::move(e), std::nullopt, restart + 1};
  }
  return {RealizeOutcome::Verdict::exhausted, std::nullopt, std::nullopt, cfg.restarts};
}

}  // namespace matchstick
