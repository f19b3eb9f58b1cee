#include "artin/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_int(std::string_view s, std::string_view context) {
  std::string t = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ParseError("expected an integer in '" + std::string(context) + "'");
  return value;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

struct TypeSpec {
  Family family;
  int rank;
  int p;
};

TypeSpec parse_type_token(std::string_view raw) {
  std::string tok = trim(raw);
  if (tok.empty()) throw ParseError("empty type code");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
  std::string rest = tok.substr(1);
  if (f == 'G') {
    if (rest != "2") throw ParseError("unknown type '" + tok + "'");
    return {Family::I, 2, 6};
  }
  if (f == 'I') {
    // I2:p or I2(p)
    if (rest.size() < 2 || rest[0] != '2') throw ParseError("malformed dihedral code '" + tok + "'");
    std::string arg = rest.substr(1);
    if (arg.front() == ':') {
      arg = arg.substr(1);
    } else if (arg.front() == '(' && arg.back() == ')') {
      arg = arg.substr(1, arg.size() - 2);
    } else {
      throw ParseError("malformed dihedral code '" + tok + "'");
    }
    if (arg == "inf" || arg == "oo") throw UnsupportedLabel("I2 with infinite label");
    int p = parse_int(arg, tok);
    if (p < 3) throw ParseError("dihedral label must be at least 3 in '" + tok + "'");
    return {Family::I, 2, p};
  }
  int rank = parse_int(rest, tok);
  switch (f) {
    case 'A': return {Family::A, rank, 0};
    case 'B':
    case 'C': return {Family::B, rank, 0};
    case 'D': return {Family::D, rank, 0};
    case 'E': return {Family::E, rank, 0};
    case 'F': return {Family::F, rank, 0};
    case 'H': return {Family::H, rank, 0};
    default: throw ParseError("unknown type '" + tok + "'");
  }
}

void set_label(std::vector<int>& labels, int n, int i, int j, int m) {
  labels[static_cast<std::size_t>(i * n + j)] = m;
  labels[static_cast<std::size_t>(j * n + i)] = m;
}

std::vector<int> standard_labels(Family family, int rank, int p) {
  auto bad = [&] {
    return NonSphericalGraph("no spherical type " + std::string(1, static_cast<char>(family)) +
                             std::to_string(rank));
  };
  std::vector<int> labels(static_cast<std::size_t>(rank * rank), 2);
  for (int i = 0; i < rank; ++i) set_label(labels, rank, i, i, 1);
  switch (family) {
    case Family::A:
      if (rank < 1) throw bad();
      for (int i = 0; i + 1 < rank; ++i) set_label(labels, rank, i, i + 1, 3);
      break;
    case Family::B:
      if (rank < 2) throw bad();
      for (int i = 0; i + 1 < rank; ++i) set_label(labels, rank, i, i + 1, i == 0 ? 4 : 3);
      break;
    case Family::D:
      if (rank < 4) throw bad();
      for (int i = 0; i + 1 < rank - 2; ++i) set_label(labels, rank, i, i + 1, 3);
      set_label(labels, rank, rank - 3, rank - 2, 3);
      set_label(labels, rank, rank - 3, rank - 1, 3);
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw bad();
      set_label(labels, rank, 0, 2, 3);
      set_label(labels, rank, 1, 3, 3);
      for (int i = 2; i + 1 < rank; ++i) set_label(labels, rank, i, i + 1, 3);
      break;
    case Family::F:
      if (rank != 4) throw bad();
      set_label(labels, rank, 0, 1, 3);
      set_label(labels, rank, 1, 2, 4);
      set_label(labels, rank, 2, 3, 3);
      break;
    case Family::H:
      if (rank < 3 || rank > 4) throw bad();
      for (int i = 0; i + 1 < rank; ++i) set_label(labels, rank, i, i + 1, i == 0 ? 5 : 3);
      break;
    case Family::I:
      if (rank != 2 || p < 3) throw bad();
      set_label(labels, rank, 0, 1, p);
      break;
  }
  return labels;
}

}  // namespace

std::string Component::type_name() const {
  if (family == Family::I) return "I2(" + std::to_string(p) + ")";
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::string Component::code() const {
  if (family == Family::I) return "I2:" + std::to_string(p);
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool Component::standard_numbering() const {
  for (std::size_t k = 0; k < vertices.size(); ++k)
    if (vertices[k] != vertices[0] + static_cast<int>(k)) return false;
  return true;
}

CoxeterGraph::CoxeterGraph(int n, std::vector<int> labels) : n_(n), labels_(std::move(labels)) {
  if (n < 1) throw ParseError("a Coxeter graph needs at least one vertex");
  if (labels_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw ParseError("label matrix has the wrong size");
  for (int i = 0; i < n; ++i) {
    if (label(i, i) != 1) throw ParseError("diagonal labels must be 1");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int m = label(i, j);
      if (m != label(j, i)) throw ParseError("label matrix is not symmetric");
      if (m == 0)
        throw UnsupportedLabel("infinite label on {" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + "}");
      if (m < 2) throw ParseError("off-diagonal labels must be at least 2");
    }
  }
  classify();
}

CoxeterGraph CoxeterGraph::standard(Family family, int rank, int p) {
  return CoxeterGraph(rank, standard_labels(family, rank, p));
}

CoxeterGraph CoxeterGraph::parse(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty graph description");
  if (s.rfind("n=", 0) == 0) {
    auto parts = split(s, ';');
    int n = parse_int(std::string_view(parts[0]).substr(2), s);
    if (n < 1 || n > 64) throw ParseError("vertex count out of range in '" + s + "'");
    std::vector<int> labels(static_cast<std::size_t>(n * n), 2);
    for (int i = 0; i < n; ++i) set_label(labels, n, i, i, 1);
    for (std::size_t k = 1; k < parts.size(); ++k) {
      for (const auto& raw_edge : split(parts[k], ',')) {
        std::string edge = trim(raw_edge);
        if (edge.empty()) continue;
        auto colon = edge.find(':');
        std::string ends = edge.substr(0, colon);
        int m = 3;
        if (colon != std::string::npos) {
          std::string lab = trim(edge.substr(colon + 1));
          if (lab == "inf" || lab == "oo") {
            m = 0;
          } else {
            m = parse_int(lab, edge);
          }
        }
        auto dash = ends.find('-');
        if (dash == std::string::npos) throw ParseError("malformed edge '" + edge + "'");
        int a = parse_int(ends.substr(0, dash), edge) - 1;
        int b = parse_int(ends.substr(dash + 1), edge) - 1;
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
          throw ParseError("edge endpoints out of range in '" + edge + "'");
        if (m == 1) throw ParseError("label 1 is not allowed off the diagonal");
        set_label(labels, n, a, b, m);
      }
    }
    return CoxeterGraph(n, std::move(labels));
  }

  std::vector<TypeSpec> specs;
  for (const auto& tok : split(s, 'x')) specs.push_back(parse_type_token(tok));
  int n = 0;
  for (const auto& t : specs) n += t.rank;
  std::vector<int> labels(static_cast<std::size_t>(n * n), 2);
  int offset = 0;
  for (const auto& t : specs) {
    auto block = standard_labels(t.family, t.rank, t.p);
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j)
        labels[static_cast<std::size_t>((offset + i) * n + offset + j)] =
            block[static_cast<std::size_t>(i * t.rank + j)];
    offset += t.rank;
  }
  return CoxeterGraph(n, std::move(labels));
}

void CoxeterGraph::classify() {
  component_of_.assign(static_cast<std::size_t>(n_), -1);
  components_.clear();

  auto neighbours = [&](int v) {
    std::vector<int> out;
    for (int w = 0; w < n_; ++w)
      if (w != v && label(v, w) >= 3) out.push_back(w);
    return out;
  };

  for (int start = 0; start < n_; ++start) {
    if (component_of_[static_cast<std::size_t>(start)] != -1) continue;
    int id = static_cast<int>(components_.size());
    std::vector<int> verts{start};
    component_of_[static_cast<std::size_t>(start)] = id;
    for (std::size_t k = 0; k < verts.size(); ++k)
      for (int w : neighbours(verts[k]))
        if (component_of_[static_cast<std::size_t>(w)] == -1) {
          component_of_[static_cast<std::size_t>(w)] = id;
          verts.push_back(w);
        }
    std::sort(verts.begin(), verts.end());

    std::string where = "component containing vertex " + std::to_string(start + 1);
    int edges = 0;
    int big = 0;  // edges labelled >= 4
    int max_label = 3;
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        int m = label(verts[a], verts[b]);
        if (m >= 3) {
          ++edges;
          if (m >= 4) ++big;
          max_label = std::max(max_label, m);
        }
      }
    if (edges != static_cast<int>(verts.size()) - 1)
      throw NonSphericalGraph(where + " contains a cycle");

    Component comp;
    comp.rank = static_cast<int>(verts.size());
    const int k = comp.rank;

    if (k == 1) {
      comp.family = Family::A;
      comp.vertices = verts;
    } else if (k == 2) {
      int m = label(verts[0], verts[1]);
      comp.vertices = verts;
      if (m == 3) {
        comp.family = Family::A;
      } else if (m == 4) {
        comp.family = Family::B;
      } else {
        comp.family = Family::I;
        comp.p = m;
      }
    } else {
      if (big > 1 || max_label >= 6) throw NonSphericalGraph(where + " is not of spherical type");
      std::vector<int> deg(verts.size());
      int branch = -1;
      for (std::size_t a = 0; a < verts.size(); ++a) {
        deg[a] = static_cast<int>(neighbours(verts[a]).size());
        if (deg[a] > 3) throw NonSphericalGraph(where + " has a vertex of degree > 3");
        if (deg[a] == 3) {
          if (branch != -1) throw NonSphericalGraph(where + " has two branch points");
          branch = verts[a];
        }
      }
      // walk from `from` away from `prev` until a leaf, collecting vertices
      auto walk = [&](int prev, int from) {
        std::vector<int> arm{from};
        int p = prev, c = from;
        for (;;) {
          int next = -1;
          for (int w : neighbours(c))
            if (w != p) next = w;
          if (next == -1) break;
          arm.push_back(next);
          p = c;
          c = next;
        }
        return arm;
      };

      if (branch != -1) {
        if (big != 0) throw NonSphericalGraph(where + " is not of spherical type");
        std::vector<std::vector<int>> arms;
        for (int w : neighbours(branch)) arms.push_back(walk(branch, w));
        std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
          if (x.size() != y.size()) return x.size() < y.size();
          return x.front() < y.front();
        });
        std::size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
        if (a0 == 1 && a1 == 1) {
          comp.family = Family::D;
          comp.vertices.assign(arms[2].rbegin(), arms[2].rend());
          comp.vertices.push_back(branch);
          comp.vertices.push_back(arms[0][0]);
          comp.vertices.push_back(arms[1][0]);
        } else if (a0 == 1 && a1 == 2 && a2 >= 2 && a2 <= 4) {
          comp.family = Family::E;
          comp.vertices = {arms[1][1], arms[0][0], arms[1][0], branch};
          comp.vertices.insert(comp.vertices.end(), arms[2].begin(), arms[2].end());
        } else {
          throw NonSphericalGraph(where + " is not of spherical type");
        }
      } else {
        std::vector<int> ends;
        for (std::size_t a = 0; a < verts.size(); ++a)
          if (deg[a] == 1) ends.push_back(verts[a]);
        auto path_from = [&](int e) {
          std::vector<int> path{e};
          auto rest = walk(e, neighbours(e).front());
          path.insert(path.end(), rest.begin(), rest.end());
          return path;
        };
        std::vector<int> path = path_from(ends[0]);
        if (big == 0) {
          comp.family = Family::A;
          comp.vertices = path;
        } else {
          int pos = -1;
          for (int a = 0; a + 1 < k; ++a)
            if (label(path[static_cast<std::size_t>(a)], path[static_cast<std::size_t>(a) + 1]) >= 4)
              pos = a;
          int m = label(path[static_cast<std::size_t>(pos)], path[static_cast<std::size_t>(pos) + 1]);
          bool at_end = pos == 0 || pos == k - 2;
          if (at_end && pos != 0) {
            std::reverse(path.begin(), path.end());
            pos = 0;
          }
          if (m == 4 && at_end) {
            comp.family = Family::B;
          } else if (m == 4 && k == 4 && pos == 1) {
            comp.family = Family::F;
          } else if (m == 5 && at_end && (k == 3 || k == 4)) {
            comp.family = Family::H;
          } else {
            throw NonSphericalGraph(where + " is not of spherical type");
          }
          comp.vertices = path;
        }
      }
    }
    components_.push_back(std::move(comp));
  }
}

bool CoxeterGraph::standard_numbering() const {
  int next = 0;
  for (const auto& c : components_) {
    if (!c.standard_numbering() || c.vertices.front() != next) return false;
    next += c.rank;
  }
  return true;
}

std::string CoxeterGraph::edge_list() const {
  std::ostringstream out;
  out << "n=" << n_;
  bool first = true;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (label(i, j) >= 3) {
        out << (first ? ';' : ',') << i + 1 << '-' << j + 1 << ':' << label(i, j);
        first = false;
      }
  return out.str();
}

std::string CoxeterGraph::code() const {
  if (!standard_numbering()) return edge_list();
  std::string out;
  for (const auto& c : components_) {
    if (!out.empty()) out += 'x';
    out += c.code();
  }
  return out;
}

std::vector<CoxeterGraph::Edge> CoxeterGraph::pairs() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) out.push_back({i, j, label(i, j)});
  return out;
}

}  // namespace artin
