#include "strata/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "strata/planar_map.hpp"

namespace strata {

void write_signature(const Signature& s, std::ostream& os) {
  os << "signature v1\n";
  os << "degree " << s.degree() << "\n";
  os << "blue";
  for (const auto& c : s.chords(Color::Blue)) os << " " << c.lo << "-" << c.hi;
  os << "\nred";
  for (const auto& c : s.chords(Color::Red)) os << " " << c.lo << "-" << c.hi;
  os << "\n";
  for (const auto& g : s.pencils()) {
    os << "pencil";
    for (const auto& c : g) os << " " << c.lo << "-" << c.hi;
    os << "\n";
  }
}

std::string write_signature(const Signature& s) {
  std::ostringstream os;
  write_signature(s, os);
  return os.str();
}

namespace {

Chord parse_chord(const std::string& token, int line_no) {
  auto dash = token.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == token.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected chord a-b, got '" + token +
                     "'");
  try {
    return Chord(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad chord '" + token + "'");
  }
}

}  // namespace

Signature read_signature(std::istream& is) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() {
    while (std::getline(is, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next_line() || line != "signature v1")
    throw ParseError("line 1: expected header 'signature v1'");

  SignatureData data;
  bool have_degree = false, have_blue = false, have_red = false;
  while (next_line()) {
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "degree") {
      if (!(ls >> data.degree)) throw ParseError("line " + std::to_string(line_no) + ": degree?");
      have_degree = true;
    } else if (word == "blue" || word == "red" || word == "pencil") {
      std::vector<Chord> chords;
      std::string token;
      while (ls >> token) chords.push_back(parse_chord(token, line_no));
      if (word == "blue") {
        if (have_blue) throw ParseError("line " + std::to_string(line_no) + ": duplicate blue field");
        have_blue = true;
        data.blue = chords;
      } else if (word == "red") {
        if (have_red) throw ParseError("line " + std::to_string(line_no) + ": duplicate red field");
        have_red = true;
        data.red = chords;
      } else {
        data.pencils.push_back(chords);
      }
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown field '" + word + "'");
    }
  }
  if (!have_degree) throw ParseError("missing degree field");
  std::string why;
  auto s = Signature::try_make(std::move(data), &why);
  if (!s) throw ParseError("invalid signature: " + why);
  return *s;
}

Signature read_signature(const std::string& text) {
  std::istringstream is(text);
  return read_signature(is);
}

namespace {

std::string num(double v) {
  char buf[32];
  if (v == 0.0) v = 0.0;  // avoid -0
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string pt(Complex z) { return num(z.real()) + "," + num(z.imag()); }

Complex label_pos(int k, int n, double r = 1.0) {
  return std::polar(r, 2.0 * M_PI * k / n);
}

const char* color_hex(Color c) { return c == Color::Blue ? "#1f4fd8" : "#d32f2f"; }

// Piecewise path of a chord through its interior pencil points; free
// chords bow inward with control points at radius 0.7 like the paper's
// figures.
std::string chord_path(const Signature& s, const PlanarMap& m, int chord_index,
                       const std::map<int, Complex>& pencil_pos,
                       std::vector<Complex>* samples) {
  const int n = s.labels();
  const Chord& c = m.chords()[chord_index];
  std::vector<Complex> anchors{label_pos(c.lo, n)};
  for (int v : m.chord_path(chord_index)) {
    auto it = pencil_pos.find(v);
    if (it != pencil_pos.end()) anchors.push_back(it->second);
  }
  anchors.push_back(label_pos(c.hi, n));

  std::ostringstream path;
  path << "M " << pt(anchors.front());
  for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
    Complex a = anchors[i], b = anchors[i + 1];
    Complex ca = a * 0.7, cb = b * 0.7;
    if (i > 0) ca = a;          // leave pencil points straight
    if (i + 2 < anchors.size()) cb = b;
    path << " C " << pt(ca) << " " << pt(cb) << " " << pt(b);
    if (samples)
      for (int t = 0; t <= 24; ++t) {
        double u = t / 24.0;
        double v = 1.0 - u;
        Complex z = v * v * v * a + 3.0 * v * v * u * ca + 3.0 * v * u * u * cb + u * u * u * b;
        samples->push_back(z);
      }
  }
  return path.str();
}

}  // namespace

std::string render_signature(const Signature& s) {
  const int n = s.labels();
  PlanarMap m = PlanarMap::build(s);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.4 -1.4 2.8 2.8\" "
         "width=\"480\" height=\"480\">\n";
  svg << "<g transform=\"scale(1,-1)\">\n";  // mathematical orientation
  svg << "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#444\" "
         "stroke-width=\"0.012\"/>\n";

  // Pencil vertices: barycenters of their endpoint positions, pulled
  // toward the center so distinct pencils stay apart.
  std::map<int, Complex> pencil_pos;
  for (std::size_t p = 0; p < s.pencils().size(); ++p) {
    Complex sum = 0.0;
    int count = 0;
    for (const auto& c : s.pencils()[p]) {
      sum += label_pos(c.lo, n) + label_pos(c.hi, n);
      count += 2;
    }
    pencil_pos[m.pencil_vertex_id(static_cast<int>(p))] = 0.55 * sum / double(count);
  }

  // Chords with sampled polylines for crossing-dot placement.
  std::vector<std::vector<Complex>> samples(m.chords().size());
  for (int ci = 0; ci < static_cast<int>(m.chords().size()); ++ci) {
    std::string path = chord_path(s, m, ci, pencil_pos, &samples[ci]);
    svg << "<path d=\"" << path << "\" fill=\"none\" stroke=\""
        << color_hex(m.chords()[ci].color()) << "\" stroke-width=\"0.016\"/>\n";
  }

  // Blue-red crossing dots at the nearest approach of the drawn paths.
  for (const auto& crossing : m.crossings()) {
    int bi = m.chord_index(crossing.blue);
    int ri = m.chord_index(crossing.red);
    double best = 1e9;
    Complex where = 0.0;
    for (Complex a : samples[bi])
      for (Complex b : samples[ri]) {
        double dist = std::abs(a - b);
        if (dist < best) {
          best = dist;
          where = 0.5 * (a + b);
        }
      }
    svg << "<circle cx=\"" << num(where.real()) << "\" cy=\"" << num(where.imag())
        << "\" r=\"0.024\" fill=\"#000\"/>\n";
  }
  for (auto& [v, z] : pencil_pos) {
    Color col = s.pencils()[m.vertices()[v].index].front().color();
    svg << "<circle cx=\"" << num(z.real()) << "\" cy=\"" << num(z.imag())
        << "\" r=\"0.028\" fill=\"" << color_hex(col) << "\"/>\n";
  }
  svg << "</g>\n";
  // Labels drawn unflipped so the text reads upright.
  for (int k = 0; k < n; ++k) {
    Complex z = label_pos(k, n, 1.13);
    svg << "<text x=\"" << num(z.real()) << "\" y=\"" << num(-z.imag())
        << "\" font-size=\"0.09\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\""
        << color_hex(color_of(k)) << "\">" << k << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_drawing(const Drawing& drawing) {
  const int n = 4 * drawing.degree;
  const double R = drawing.radius;
  std::ostringstream svg;
  double box = 1.3 * R;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(-box) << " " << num(-box)
      << " " << num(2 * box) << " " << num(2 * box) << "\" width=\"560\" height=\"560\">\n";
  svg << "<g transform=\"scale(1,-1)\">\n";
  svg << "<circle cx=\"0\" cy=\"0\" r=\"" << num(R)
      << "\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"" << num(R / 200) << "\"/>\n";
  // Asymptotic sector guides.
  for (int k = 0; k < n; ++k) {
    Complex a = std::polar(0.92 * R, M_PI * k / (2.0 * drawing.degree));
    Complex b = std::polar(1.08 * R, M_PI * k / (2.0 * drawing.degree));
    svg << "<line x1=\"" << num(a.real()) << "\" y1=\"" << num(a.imag()) << "\" x2=\""
        << num(b.real()) << "\" y2=\"" << num(b.imag())
        << "\" stroke=\"#999\" stroke-dasharray=\"0.02\" stroke-width=\"" << num(R / 250)
        << "\"/>\n";
  }
  for (const auto& curve : drawing.curves) {
    svg << "<polyline fill=\"none\" stroke=\"" << color_hex(curve.color) << "\" stroke-width=\""
        << num(R / 120) << "\" points=\"";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
      if (i) svg << " ";
      svg << pt(curve.points[i]);
    }
    svg << "\"/>\n";
  }
  for (Complex root : drawing.roots)
    svg << "<circle cx=\"" << num(root.real()) << "\" cy=\"" << num(root.imag()) << "\" r=\""
        << num(R / 70) << "\" fill=\"#000\"/>\n";
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace strata
