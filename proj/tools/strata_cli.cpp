#include <CLI11.hpp>
#include <atomic>
#include <thread>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "strata/atlas.hpp"
#include "strata/braid.hpp"
#include "strata/io.hpp"
#include "strata/moves.hpp"
#include "strata/nerve.hpp"
#include "strata/tracer.hpp"

namespace {

using namespace strata;

std::string out_path(const std::string& name) {
  if (const char* dir = std::getenv("STRATA_OUT_DIR"))
    return std::string(dir) + "/" + name;
  return name;
}

std::ofstream open_out(const std::string& file) {
  std::ofstream os(out_path(file));
  if (!os) throw std::runtime_error("cannot open output file " + file);
  return os;
}

std::vector<Complex> parse_complex_list(const std::string& text) {
  // tokens like "1", "-0.5", "0.2+0.6i", "1-1i"
  std::vector<Complex> out;
  std::istringstream is(text);
  std::string token;
  while (is >> token) {
    double re = 0, im = 0;
    std::size_t pos = 0;
    re = std::stod(token, &pos);
    if (pos < token.size()) {
      std::string rest = token.substr(pos);
      if (rest == "i") {
        im = re;
        re = 0;
      } else if (!rest.empty() && (rest.back() == 'i' || rest.back() == 'j')) {
        im = std::stod(rest.substr(0, rest.size() - 1));
      } else if (!rest.empty()) {
        throw std::runtime_error("cannot parse complex number '" + token + "'");
      }
    }
    out.emplace_back(re, im);
  }
  return out;
}

int cmd_atlas(int degree, int codim, const std::string& out, const std::string& table, int jobs) {
  auto atlas = enumerate_all(degree, jobs);
  std::cout << census_report(atlas);
  if (euler_sum(atlas) != 0) {
    std::cerr << "internal invariant failed: euler alternating sum is nonzero\n";
    return 1;
  }
  if (!out.empty()) {
    auto os = open_out(out);
    os << "atlas v1\ndegree " << degree << "\n";
    for (auto& [c, sigs] : atlas.by_codim) {
      if (codim >= 0 && c != codim) continue;
      for (const auto& s : sigs) os << c << " " << s.key() << "\n";
    }
    std::cout << "written " << out_path(out) << "\n";
  }
  if (!table.empty()) {
    auto os = open_out(table);
    os << "degree\tcodim\tcount\tM\tF\tS\tFS\n";
    for (const auto& row : census(atlas))
      os << degree << "\t" << row.codim << "\t" << row.count << "\t" << row.m << "\t" << row.f
         << "\t" << row.s << "\t" << row.fs << "\n";
    std::cout << "written " << out_path(table) << "\n";
  }
  return 0;
}

int cmd_nerve_build(int degree, const std::string& out, int jobs) {
  auto complex = build_nerve(degree, jobs);
  auto os = open_out(out);
  write_nerve(complex, os);
  std::cout << "nerve: " << complex.cells.size() << " cells written to " << out_path(out) << "\n";
  return 0;
}

int cmd_nerve_check(int degree, int jobs) {
  auto complex = build_nerve(degree, jobs);
  int failures = 0;
  for (int e : complex.cells_of_dim(1))
    if (complex.vertex_set(e).size() != 2) ++failures;
  for (int f : complex.cells_of_dim(2))
    if (complex.vertex_set(f).size() != 4 || complex.facets(f).size() != 4) ++failures;
  std::cout << "cells: " << complex.cells.size() << "\n";
  std::cout << "quadrangle law violations: " << failures << "\n";
  auto ncs = nc_structures(complex);
  std::cout << "NC structures: " << ncs.size() << "\n";
  for (auto& nc : ncs)
    std::cout << "  top " << complex.cells[nc.top].key() << " generic "
              << nc.generic_members.size() << " M " << nc.m_members.size() << "\n";
  auto report = symmetry_report(complex);
  std::cout << "shift-by-1 automorphism: " << (report.shift1_automorphism ? "yes" : "NO") << "\n";
  std::cout << "shift-by-2 automorphism: " << (report.shift2_automorphism ? "yes" : "NO") << "\n";
  std::cout << "reflection automorphism: " << (report.reflect_automorphism ? "yes" : "NO") << "\n";
  std::cout << "Klein group acts: " << (report.klein_group_acts ? "yes" : "NO") << "\n";
  std::cout << "M-signature orbit size: " << report.m_orbit_size << "\n";
  if (degree >= 4) {
    std::cout << "Q-pieces: " << report.piece_count << ", internal mirrors "
              << report.pieces_with_internal_mirror << ", reflection walls "
              << report.consecutive_reflection_walls << ", chambers " << report.chamber_count
              << "\n";
    std::cout << "bridges: " << bridges(complex).size() << ", open books "
              << open_books(complex).size() << "\n";
  }
  bool sym_ok = report.shift1_automorphism && report.shift2_automorphism &&
                report.reflect_automorphism;
  return failures == 0 && sym_ok && ncs.size() == 4 ? 0 : 1;
}

int cmd_q_table(int from, int to) {
  auto table = q_table(from, to);
  for (auto& [degree, column] : table) {
    std::cout << "degree " << degree << " (mod " << 4 * degree << ")\n";
    for (auto& q : column) std::cout << "  " << q.matrix_text() << "\n";
  }
  return 0;
}

int cmd_q_pieces(int degree) {
  auto diagrams = q_diagrams(degree);
  std::cout << diagrams.size() << " Q-pieces\n";
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    auto piece = q_piece(diagrams[i]);
    std::cout << "piece " << i + 1 << " " << diagrams[i].matrix_text() << ": " << piece.size()
              << " signatures\n";
    for (const auto& s : piece) {
      std::cout << "  " << s.key();
      if (s.generic()) {
        auto cls = classify(s);
        const char* names[] = {"M", "F", "S", "FS"};
        std::cout << "  [" << names[static_cast<int>(cls.kind)] << "]";
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_classify(const std::string& poly, const std::string& roots, double tol, bool as_roots) {
  Polynomial p = as_roots ? Polynomial::from_roots(parse_complex_list(roots))
                          : Polynomial::from_coefficients(parse_complex_list(poly));
  double margin = degeneracy_margin(p);
  std::cout << "degeneracy margin: " << margin << "\n";
  TraceOptions opts;
  opts.degeneracy_tol = tol;
  try {
    auto s = signature_of(p, opts);
    std::cout << "signature: " << s.key() << "\n";
    std::cout << "notation: " << matrix_notation(s) << "\n";
    return 0;
  } catch (const NearDegenerate& e) {
    std::cout << "near-degenerate: critical value " << e.critical_value.real() << "+"
              << e.critical_value.imag() << "i within tolerance of an axis\n";
    return 2;
  }
}

int cmd_classify_batch(const std::string& file, double tol, int jobs) {
  std::ifstream is(file);
  if (!is) {
    std::cerr << "cannot open " << file << "\n";
    return 1;
  }
  std::vector<Polynomial> inputs;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("roots:", 0) == 0)
      inputs.push_back(Polynomial::from_roots(parse_complex_list(line.substr(6))));
    else
      inputs.push_back(Polynomial::from_coefficients(parse_complex_list(line)));
  }
  // Classify in parallel; results print in input order regardless of
  // the worker count.
  std::vector<std::string> results(inputs.size());
  TraceOptions opts;
  opts.degeneracy_tol = tol;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < inputs.size(); i = next.fetch_add(1)) {
      std::ostringstream os;
      try {
        auto s = signature_of(inputs[i], opts);
        os << s.key();
      } catch (const NearDegenerate&) {
        os << "near-degenerate";
      } catch (const std::exception& e) {
        os << "error: " << e.what();
      }
      results[i] = os.str();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < results.size(); ++i)
    std::cout << i << " " << results[i] << "\n";
  return 0;
}

int cmd_braid(const std::string& file, int samples) {
  std::ifstream is(file);
  if (!is) {
    std::cerr << "cannot open " << file << "\n";
    return 1;
  }
  // One polynomial per line: whitespace-separated coefficients, highest
  // degree first (or "roots:" prefix for a root list).
  std::vector<Polynomial> path;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("roots:", 0) == 0)
      path.push_back(Polynomial::from_roots(parse_complex_list(line.substr(6))));
    else
      path.push_back(Polynomial::from_coefficients(parse_complex_list(line)));
  }
  if (path.size() < 2) {
    std::cerr << "path needs at least two samples\n";
    return 1;
  }
  // Optional resampling by linear coefficient interpolation.
  if (samples > static_cast<int>(path.size())) {
    std::vector<Polynomial> fine;
    const int segments = static_cast<int>(path.size()) - 1;
    for (int i = 0; i < samples; ++i) {
      double t = static_cast<double>(i) / (samples - 1) * segments;
      int seg = std::min(static_cast<int>(t), segments - 1);
      double u = t - seg;
      auto a = path[seg].coefficients();
      auto b = path[seg + 1].coefficients();
      std::vector<Complex> mix(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) mix[k] = (1.0 - u) * a[k] + u * b[k];
      fine.push_back(Polynomial::from_coefficients(std::move(mix)));
    }
    path = std::move(fine);
  }
  auto word = braid_word(track_roots(path));
  std::cout << "braid word: " << word.text() << "\n";
  std::cout << "permutation:";
  for (int v : word.permutation()) std::cout << " " << v + 1;
  std::cout << "\n";
  return 0;
}

int cmd_render_signature(const std::string& in, const std::string& out) {
  std::ifstream is(in);
  if (!is) {
    std::cerr << "cannot open " << in << "\n";
    return 1;
  }
  auto s = read_signature(is);
  auto os = open_out(out);
  os << render_signature(s);
  std::cout << "rendered " << out_path(out) << "\n";
  return 0;
}

int cmd_render_drawing(const std::string& poly, const std::string& roots, bool as_roots,
                       const std::string& out, double tol) {
  Polynomial p = as_roots ? Polynomial::from_roots(parse_complex_list(roots))
                          : Polynomial::from_coefficients(parse_complex_list(poly));
  TraceOptions opts;
  opts.degeneracy_tol = tol;
  auto drawing = trace(p, opts);
  auto os = open_out(out);
  os << render_drawing(drawing);
  std::cout << "rendered " << out_path(out) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signatures, inclusion diagrams and braids of polynomial drawings"};
  app.require_subcommand(1);

  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for enumeration");

  auto* atlas = app.add_subcommand("atlas", "signature enumeration");
  auto* atlas_enum = atlas->add_subcommand("enumerate", "census by codimension");
  int degree = 3, codim = -1;
  std::string out_file, table_file;
  atlas_enum->add_option("--degree", degree, "degree d")->required();
  atlas_enum->add_option("--codim", codim, "restrict the output file to one codimension");
  atlas_enum->add_option("--out", out_file, "write canonical keys to this file");
  atlas_enum->add_option("--table", table_file, "write a tab-separated census table");

  auto* nerve = app.add_subcommand("nerve", "inclusion diagram");
  auto* nerve_build = nerve->add_subcommand("build", "export the cell complex");
  int nb_degree = 3;
  std::string nerve_out = "nerve.txt";
  nerve_build->add_option("--degree", nb_degree, "degree d")->required();
  nerve_build->add_option("--out", nerve_out, "output file")->required();
  auto* nerve_check = nerve->add_subcommand("check", "quadrangle/NC/symmetry report");
  int nc_degree = 3;
  nerve_check->add_option("--degree", nc_degree, "degree d")->required();

  auto* q = app.add_subcommand("q", "Q-diagram machinery");
  auto* q_tab = q->add_subcommand("table", "table of inclusions");
  int q_from = 3, q_to = 7;
  q_tab->add_option("--from", q_from, "first degree");
  q_tab->add_option("--to", q_to, "last degree");
  auto* q_p = q->add_subcommand("pieces", "Q-piece membership listing");
  int qp_degree = 4;
  q_p->add_option("--degree", qp_degree, "degree d (>= 4)")->required();

  auto* classify_cmd = app.add_subcommand("classify", "signature of a polynomial");
  std::string poly_text, roots_text, batch_file;
  double tol = 1e-9;
  classify_cmd->add_option("--poly", poly_text, "coefficients, highest first");
  classify_cmd->add_option("--roots", roots_text, "root list instead of coefficients");
  classify_cmd->add_option("--batch", batch_file, "classify one polynomial per line");
  classify_cmd->add_option("--tol", tol, "degeneracy tolerance");

  auto* braid_cmd = app.add_subcommand("braid", "braid word of a polynomial path");
  std::string path_file;
  int samples = 0;
  braid_cmd->add_option("--path", path_file, "file with one polynomial per line")->required();
  braid_cmd->add_option("--samples", samples, "resample the path to this many steps");

  auto* render = app.add_subcommand("render", "SVG output");
  auto* render_sig = render->add_subcommand("signature", "render a signature file");
  std::string rs_in, rs_out = "signature.svg";
  render_sig->add_option("--in", rs_in, "signature file")->required();
  render_sig->add_option("--out", rs_out, "SVG output")->required();
  auto* render_dr = render->add_subcommand("drawing", "trace and render a drawing");
  std::string rd_poly, rd_roots, rd_out = "drawing.svg";
  render_dr->add_option("--poly", rd_poly, "coefficients, highest first");
  render_dr->add_option("--roots", rd_roots, "root list instead of coefficients");
  render_dr->add_option("--out", rd_out, "SVG output")->required();
  double rd_tol = 1e-9;
  render_dr->add_option("--tol", rd_tol, "degeneracy tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (atlas_enum->parsed()) return cmd_atlas(degree, codim, out_file, table_file, jobs);
    if (nerve_build->parsed()) return cmd_nerve_build(nb_degree, nerve_out, jobs);
    if (nerve_check->parsed()) return cmd_nerve_check(nc_degree, jobs);
    if (q_tab->parsed()) return cmd_q_table(q_from, q_to);
    if (q_p->parsed()) return cmd_q_pieces(qp_degree);
    if (classify_cmd->parsed()) {
      if (!batch_file.empty()) return cmd_classify_batch(batch_file, tol, jobs);
      if (poly_text.empty() == roots_text.empty()) {
        std::cerr << "classify: give exactly one of --poly / --roots / --batch\n";
        return 1;
      }
      return cmd_classify(poly_text, roots_text, tol, poly_text.empty());
    }
    if (braid_cmd->parsed()) return cmd_braid(path_file, samples);
    if (render_sig->parsed()) return cmd_render_signature(rs_in, rs_out);
    if (render_dr->parsed()) {
      if (rd_poly.empty() == rd_roots.empty()) {
        std::cerr << "render drawing: give exactly one of --poly / --roots\n";
        return 1;
      }
      return cmd_render_drawing(rd_poly, rd_roots, rd_poly.empty(), rd_out, rd_tol);
    }
  } catch (const NearDegenerate& e) {
    std::cerr << "near-degenerate input: margin " << e.margin << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand\n";
  return 1;
}
