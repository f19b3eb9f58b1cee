#include "artin/urep.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "artin/errors.hpp"
#include "artin/parallel.hpp"

namespace artin {

AffinePerm::AffinePerm(std::vector<std::uint16_t> base, std::vector<std::int64_t> offsets)
    : base_(std::move(base)), offsets_(std::move(offsets)) {
  if (base_.size() != offsets_.size()) throw std::invalid_argument("AffinePerm size mismatch");
}

AffinePerm AffinePerm::identity(std::size_t size) {
  std::vector<std::uint16_t> base(size);
  for (std::size_t t = 0; t < size; ++t) base[t] = static_cast<std::uint16_t>(t);
  return AffinePerm(std::move(base), std::vector<std::int64_t>(size, 0));
}

AffinePerm AffinePerm::operator*(const AffinePerm& rhs) const {
  std::size_t n = size();
  std::vector<std::uint16_t> base(n);
  std::vector<std::int64_t> off(n);
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t mid = rhs.base_[t];
    base[t] = base_[mid];
    off[t] = rhs.offsets_[t] + offsets_[mid];
  }
  return AffinePerm(std::move(base), std::move(off));
}

AffinePerm AffinePerm::inverse() const {
  std::size_t n = size();
  std::vector<std::uint16_t> base(n);
  std::vector<std::int64_t> off(n);
  for (std::size_t t = 0; t < n; ++t) {
    base[base_[t]] = static_cast<std::uint16_t>(t);
    off[base_[t]] = -offsets_[t];
  }
  return AffinePerm(std::move(base), std::move(off));
}

std::int64_t AffinePerm::offset_sum() const {
  std::int64_t s = 0;
  for (auto c : offsets_) s += c;
  return s;
}

std::vector<std::uint16_t> conjugation_on_reflections(const CoxeterGroup& w, const Element& x) {
  const RootSystem& roots = w.roots();
  std::size_t n = roots.positive_count();
  std::vector<std::uint16_t> out(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t img = x[r];
    out[r] = static_cast<std::uint16_t>(roots.is_positive(img) ? img : roots.negation(img));
  }
  return out;
}

AffinePerm u_generator(const CoxeterGroup& w, int i) {
  if (i < 0 || i >= w.rank()) throw std::out_of_range("generator index out of range");
  auto base = conjugation_on_reflections(w, w.generator(i));
  std::vector<std::int64_t> off(base.size(), 0);
  off[static_cast<std::size_t>(i)] = 1;
  return AffinePerm(std::move(base), std::move(off));
}

AffinePerm u_eval(const CoxeterGroup& w, const ArtinWord& word) {
  std::vector<AffinePerm> gens, invs;
  for (int i = 0; i < w.rank(); ++i) {
    gens.push_back(u_generator(w, i));
    invs.push_back(gens.back().inverse());
  }
  AffinePerm out = AffinePerm::identity(w.roots().positive_count());
  for (const auto& l : word.letters()) {
    if (l.gen < 0 || l.gen >= w.rank()) throw std::out_of_range("generator index out of range");
    out = out * (l.exp > 0 ? gens : invs)[static_cast<std::size_t>(l.gen)];
  }
  return out;
}

namespace {

void require_valid(const CoxeterGroup& w, const WHom& h) {
  if (h.images.size() != static_cast<std::size_t>(w.rank()))
    throw InvalidHom("expected " + std::to_string(w.rank()) + " images");
  if (!is_valid(w, h)) throw InvalidHom("images break an Artin relation");
}

ParityProfile profile_of(const AffinePerm& p) {
  ParityProfile out{p.base(), {}};
  for (auto c : p.offsets()) out.parity.push_back(static_cast<std::uint8_t>(c & 1));
  return out;
}

// Offsets as affine forms in the free variables; slot `vars` is the constant.
struct SymbolicPerm {
  std::vector<std::uint16_t> base;
  std::vector<std::vector<std::int64_t>> forms;

  SymbolicPerm operator*(const SymbolicPerm& rhs) const {
    SymbolicPerm out;
    std::size_t n = base.size();
    out.base.resize(n);
    out.forms.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t mid = rhs.base[t];
      out.base[t] = base[mid];
      out.forms[t] = rhs.forms[t];
      const auto& add = forms[mid];
      for (std::size_t v = 0; v < add.size(); ++v) out.forms[t][v] += add[v];
    }
    return out;
  }
};

}  // namespace

std::vector<ParityProfile> parity_profile(const CoxeterGroup& w, const WHom& psi) {
  require_valid(w, psi);
  std::vector<ParityProfile> out;
  for (const auto& x : psi.images) {
    auto a = profile_of(u_eval(w, tits_section(w, x, Descent::smallest)));
    auto b = profile_of(u_eval(w, tits_section(w, x, Descent::largest)));
    if (!(a == b)) throw std::logic_error("parity profile depends on the lift");
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<BitRow> OffsetSystem::mod2_rows() const {
  std::size_t vars = variables();
  std::vector<BitRow> rows;
  rows.reserve(equations.size());
  for (const auto& eq : equations) {
    BitRow row(vars + 1);
    int shift = 64;
    auto visit = [&](std::int64_t c) {
      if (c != 0) shift = std::min(shift, std::countr_zero(static_cast<std::uint64_t>(c)));
    };
    for (auto c : eq.coefficients) visit(c);
    visit(eq.constant);
    if (shift < 64) {
      for (std::size_t v = 0; v < vars; ++v)
        if ((eq.coefficients[v] >> shift) & 1) row.set(v);
      if ((eq.constant >> shift) & 1) row.set(vars);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

OffsetSystem offset_system(const CoxeterGroup& w, const WHom& psi, int threads) {
  auto profile = parity_profile(w, psi);
  std::size_t n = static_cast<std::size_t>(w.rank());
  std::size_t nt = w.roots().positive_count();
  std::size_t vars = n * nt;

  std::vector<SymbolicPerm> unknown(n);
  for (std::size_t i = 0; i < n; ++i) {
    unknown[i].base = profile[i].base;
    unknown[i].forms.assign(nt, std::vector<std::int64_t>(vars + 1, 0));
    for (std::size_t t = 0; t < nt; ++t) {
      unknown[i].forms[t][i * nt + t] = 2;
      unknown[i].forms[t][vars] = profile[i].parity[t];
    }
  }

  std::vector<std::pair<int, int>> relations;
  for (int i = 0; i < w.rank(); ++i)
    for (int j = i + 1; j < w.rank(); ++j) relations.emplace_back(i, j);

  OffsetSystem out{n, nt, {}};
  std::vector<std::vector<OffsetEquation>> parts(relations.size());
  parallel_for(relations.size(), threads, [&](std::size_t r) {
    auto [i, j] = relations[r];
    int m = w.graph().label(i, j);
    const auto& a = unknown[static_cast<std::size_t>(i)];
    const auto& b = unknown[static_cast<std::size_t>(j)];
    SymbolicPerm lhs = omega(a, b, m), rhs = omega(b, a, m);
    if (lhs.base != rhs.base) throw std::logic_error("relation sides differ on T");
    for (std::size_t t = 0; t < nt; ++t) {
      OffsetEquation eq;
      eq.coefficients.resize(vars);
      for (std::size_t v = 0; v < vars; ++v) eq.coefficients[v] = lhs.forms[t][v] - rhs.forms[t][v];
      eq.constant = rhs.forms[t][vars] - lhs.forms[t][vars];
      eq.gen_i = i;
      eq.gen_j = j;
      eq.reflection = t;
      parts[r].push_back(std::move(eq));
    }
  });
  for (auto& p : parts)
    for (auto& eq : p) out.equations.push_back(std::move(eq));
  return out;
}

std::string to_string(Verdict v) {
  return v == Verdict::obstructed ? "Obstructed" : "NoParityObstruction";
}

ObstructionResult solve_obstruction(const OffsetSystem& system) {
  auto rows = system.mod2_rows();
  auto solved = gf2_solve(rows, system.variables());
  ObstructionResult out;
  out.verdict = solved.consistent ? Verdict::no_parity_obstruction : Verdict::obstructed;
  out.variables = system.variables();
  out.equations = system.equations.size();
  out.rank = solved.rank;
  out.certificate = std::move(solved.certificate);
  return out;
}

ObstructionResult obstruction(const CoxeterGroup& w, const WHom& psi, int threads) {
  return solve_obstruction(offset_system(w, psi, threads));
}

bool verify_certificate(const OffsetSystem& system, std::span<const std::size_t> certificate) {
  auto rows = system.mod2_rows();
  return gf2_check_certificate(rows, system.variables(), certificate);
}

std::string dump_matrix(const OffsetSystem& system) {
  std::ostringstream out;
  for (const auto& row : system.mod2_rows()) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (row.get(k) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

Theorem31Report theorem31_report(const CoxeterGroup& w, int threads, std::uint64_t bound) {
  Theorem31Report out;
  out.graph = w.graph().code();
  std::vector<Theorem31Row> targets;
  if (w.order() <= bound) {
    out.source = "brute-force";
    HomSpace space(w, bound);
    for (const auto& c : classify_uceps(space, GroupingMode::conjugacy, threads).classes)
      if (!c.ordinary) targets.push_back({c.name, c.images, c.image_order, c.proper, {}});
  } else {
    out.source = "catalog";
    std::vector<NamedHom> entries;
    try {
      entries = catalog(w);
    } catch (const NoCatalogEntry&) {
      throw GroupTooLarge("|W| = " + std::to_string(w.order()) + " exceeds " +
                          std::to_string(bound) + " and no catalog is available");
    }
    for (const auto& e : entries) {
      if (!is_ucep(w, e.hom) || is_ordinary(w, e.hom)) continue;
      std::uint64_t order = image_order(w, e.hom);
      targets.push_back({e.name, e.hom, order, order != w.order(), {}});
    }
  }
  for (auto& row : targets) row.result = obstruction(w, row.hom, threads);
  out.vacuous = targets.empty();
  out.rows = std::move(targets);
  return out;
}

}  // namespace artin
