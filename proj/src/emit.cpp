#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "matchstick/census.hpp"
#include "matchstick/reference.hpp"

namespace matchstick {

namespace {

using ordered_json = nlohmann::ordered_json;

void write_file(const std::filesystem::path& file, const std::string& content) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << content;
}

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::vector<std::uint8_t> hex_to_bytes(const std::string& hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd hex string");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) * 16 + nibble(hex[2 * i + 1]));
  return out;
}

}  // namespace

void emit_table1(const std::vector<CensusLevel>& levels, const std::filesystem::path& file) {
  std::string out = "n,q,p\n";
  for (const auto& level : levels)
    out += std::to_string(level.n) + "," + std::to_string(level.q) + "," +
           std::to_string(level.p) + "\n";
  write_file(file, out);
}

void emit_table2(const std::vector<CensusLevel>& levels, const std::filesystem::path& file) {
  std::string out = "n,F1,F2,F3,F4,F5,F6\n";
  for (const auto& level : levels) {
    std::array<std::int64_t, 6> row{};
    for (const auto& cls : level.classes)
      if (cls.faces >= 1 && cls.faces <= 6) row[cls.faces - 1] += 1;
    out += std::to_string(level.n);
    for (std::int64_t cell : row) out += "," + std::to_string(cell);
    out += "\n";
  }
  write_file(file, out);
}

void emit_catalog(const std::vector<CensusLevel>& levels, const std::filesystem::path& file) {
  ordered_json root = ordered_json::array();
  for (const auto& level : levels) {
    ordered_json rec;
    rec["n"] = level.n;
    rec["connected_classes"] = level.connected_classes;
    rec["planar_classes"] = level.planar_classes;
    rec["q"] = level.q;
    rec["p"] = level.p;
    rec["classes"] = ordered_json::array();
    for (const auto& cls : level.classes) {
      ordered_json jc;
      jc["id_class"] = cls.index;
      jc["F"] = cls.faces;
      jc["delta"] = cls.delta;
      jc["topo_key"] = cls.topo.to_hex();
      jc["members"] = ordered_json::array();
      for (const auto& m : cls.members) {
        ordered_json jm;
        jm["id"] = m.id;
        jm["graph"] = m.graph.to_text();
        ordered_json coords = ordered_json::array();
        for (auto [px, py] : m.embedding.points) coords.push_back({px, py});
        jm["coords"] = std::move(coords);
        jc["members"].push_back(std::move(jm));
      }
      rec["classes"].push_back(std::move(jc));
    }
    root.push_back(std::move(rec));
  }
  write_file(file, root.dump(2) + "\n");
}

void emit_plot_data(const std::vector<CensusLevel>& levels, const std::filesystem::path& file) {
  std::string out = "n,q,p,log10_q,log10_p,q_ratio,p_ratio,p_over_q,matchstick_fraction\n";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& level = levels[i];
    out += std::to_string(level.n) + "," + std::to_string(level.q) + "," +
           std::to_string(level.p);
    out += "," + fixed6(std::log10(double(level.q)));
    out += "," + fixed6(std::log10(double(level.p)));
    if (i > 0) {
      out += "," + fixed6(double(level.q) / double(levels[i - 1].q));
      out += "," + fixed6(double(level.p) / double(levels[i - 1].p));
    } else {
      out += ",,";
    }
    out += "," + fixed6(double(level.p) / double(level.q));
    out += "," + fixed6(double(level.p) / double(level.planar_classes));
    out += "\n";
  }
  write_file(file, out);
}

std::string render_svg(const Graph& g, const Embedding& e) {
  // 100 px per unit length, 2 px strokes, 4 px vertex dots, tight viewport.
  constexpr double kScale = 100.0;
  constexpr double kPad = 12.0;
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (std::size_t v = 0; v < e.points.size(); ++v) {
    min_x = v ? std::min(min_x, e.points[v][0]) : e.points[v][0];
    max_x = v ? std::max(max_x, e.points[v][0]) : e.points[v][0];
    min_y = v ? std::min(min_y, e.points[v][1]) : e.points[v][1];
    max_y = v ? std::max(max_y, e.points[v][1]) : e.points[v][1];
  }
  double width = (max_x - min_x) * kScale + 2 * kPad;
  double height = (max_y - min_y) * kScale + 2 * kPad;
  auto sx = [&](double x) { return (x - min_x) * kScale + kPad; };
  auto sy = [&](double y) { return (max_y - y) * kScale + kPad; };

  char buf[160];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.2f\" height=\"%.2f\" "
                "viewBox=\"0 0 %.2f %.2f\">\n",
                width, height, width, height);
  out += buf;
  out += "  <g stroke=\"#1a1a1a\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
  for (auto [u, v] : g.edges()) {
    std::snprintf(buf, sizeof buf,
                  "    <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n",
                  sx(e.points[u][0]), sy(e.points[u][1]), sx(e.points[v][0]), sy(e.points[v][1]));
    out += buf;
  }
  out += "  </g>\n  <g fill=\"#c0392b\">\n";
  for (const auto& p : e.points) {
    std::snprintf(buf, sizeof buf, "    <circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\"/>\n", sx(p[0]),
                  sy(p[1]));
    out += buf;
  }
  out += "  </g>\n</svg>\n";
  return out;
}

void emit_svgs(const std::vector<CensusLevel>& levels, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& level : levels)
    for (const auto& cls : level.classes)
      for (const auto& m : cls.members)
        write_file(dir / (m.id + ".svg"), render_svg(m.graph, m.embedding));
}

void emit_embeddings(const std::vector<CensusLevel>& levels, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& level : levels)
    for (const auto& cls : level.classes)
      for (const auto& m : cls.members) write_file(dir / (m.id + ".xy"), m.embedding.to_xy());
}

void emit_unresolved(const std::vector<CensusLevel>& levels, const std::filesystem::path& file) {
  std::int64_t total = 0;
  for (const auto& level : levels) total += static_cast<std::int64_t>(level.unresolved.size());
  std::string out = "graphs the solver left undecided (treated as unrealizable): " +
                    std::to_string(total) + "\n";
  for (const auto& level : levels)
    for (const auto& u : level.unresolved)
      out += "n=" + std::to_string(level.n) + " graph=" + u.graph.to_text() +
             " restarts=" + std::to_string(u.restarts) + "\n";
  write_file(file, out);
}

void emit_discrepancies(const std::vector<CensusLevel>& levels, const std::filesystem::path& file) {
  namespace ref = matchstick::reference;
  std::string out = "cross-check against the published census\n";
  out += "=======================================\n\n";

  bool any = false;
  for (const auto& level : levels) {
    if (level.n > ref::kMaxN) continue;
    const auto idx = level.n - 1;
    if (level.q != ref::kPublishedQ[idx]) {
      out += "q(" + std::to_string(level.n) + "): computed " + std::to_string(level.q) +
             ", published " + std::to_string(ref::kPublishedQ[idx]) + "\n";
      any = true;
    }
    if (level.p != ref::kPublishedP[idx]) {
      out += "p(" + std::to_string(level.n) + "): computed " + std::to_string(level.p) +
             ", published " + std::to_string(ref::kPublishedP[idx]) + "\n";
      any = true;
    }
    std::array<std::int64_t, 6> row{};
    for (const auto& cls : level.classes)
      if (cls.faces >= 1 && cls.faces <= 6) row[cls.faces - 1] += 1;
    for (int f = 0; f < 6; ++f) {
      if (row[f] != ref::kPublishedFacesTable[idx][f]) {
        out += "classes(n=" + std::to_string(level.n) + ",F=" + std::to_string(f + 1) +
               "): computed " + std::to_string(row[f]) + ", published " +
               std::to_string(ref::kPublishedFacesTable[idx][f]) + "\n";
        any = true;
      }
    }
    if (level.n == 9) {
      std::int64_t row_sum = 0, pub_sum = 0;
      for (int f = 0; f < 6; ++f) {
        row_sum += row[f];
        pub_sum += ref::kPublishedFacesTable[idx][f];
      }
      out += "note: published n=9 face row sums to " + std::to_string(pub_sum) +
             " against published q(9)=" + std::to_string(ref::kPublishedQ[idx]) +
             "; computed row sums to " + std::to_string(row_sum) + " with computed q(9)=" +
             std::to_string(level.q) + "\n";
      any = true;
    }
  }
  if (!any) out += "all computed counts match the published figures\n";

  if (!levels.empty() && levels.back().n == 9 && levels.size() >= 2) {
    std::vector<std::int64_t> q_series, p_series;
    for (const auto& level : levels) {
      q_series.push_back(level.q);
      p_series.push_back(level.p);
    }
    std::int64_t bq = extrapolate_lower_bound(q_series);
    std::int64_t bp = extrapolate_lower_bound(p_series);
    out += "\nextrapolated lower bounds for n=10 (last^2/previous, rounded to nearest):\n";
    out += "q(10) >= " + std::to_string(bq) + " (published " +
           std::to_string(ref::kPublishedBoundQ10) + ")";
    out += bq == ref::kPublishedBoundQ10 ? "\n" : "  <- differs\n";
    out += "p(10) >= " + std::to_string(bp) + " (published " +
           std::to_string(ref::kPublishedBoundP10) + ")";
    out += bp == ref::kPublishedBoundP10 ? "\n" : "  <- differs\n";
  }
  write_file(file, out);
}

std::vector<CensusLevel> load_catalog(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  ordered_json root = ordered_json::parse(in);

  std::vector<CensusLevel> levels;
  for (const auto& rec : root) {
    CensusLevel level;
    level.n = rec.at("n").get<int>();
    level.connected_classes = rec.at("connected_classes").get<std::int64_t>();
    level.planar_classes = rec.at("planar_classes").get<std::int64_t>();
    level.q = rec.at("q").get<std::int64_t>();
    level.p = rec.at("p").get<std::int64_t>();
    for (const auto& jc : rec.at("classes")) {
      ClassRecord cls;
      cls.index = jc.at("id_class").get<int>();
      cls.faces = jc.at("F").get<int>();
      cls.delta = jc.at("delta").get<int>();
      cls.topo.bytes = hex_to_bytes(jc.at("topo_key").get<std::string>());
      for (const auto& jm : jc.at("members")) {
        MemberRecord m;
        m.id = jm.at("id").get<std::string>();
        m.graph = Graph::from_text(jm.at("graph").get<std::string>());
        m.key = canonical_form(m.graph);
        for (const auto& pt : jm.at("coords"))
          m.embedding.points.push_back({pt.at(0).get<double>(), pt.at(1).get<double>()});
        cls.members.push_back(std::move(m));
      }
      level.classes.push_back(std::move(cls));
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

}  // namespace matchstick
