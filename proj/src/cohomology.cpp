#include "ample/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace ample {

Cocycle trivial_cocycle(const FiniteGroupoid& g) { return Cocycle(g.size(), Angle(0)); }

CocycleCheck is_cocycle(const FiniteGroupoid& g, const Cocycle& xi) {
  CocycleCheck out;
  if (xi.size() != g.size()) {
    throw PartialFunction("cocycle has " + std::to_string(xi.size()) + " values for " +
                          std::to_string(g.size()) + " arrows");
  }
  for (ArrowId u : g.units()) {
    if (!xi[static_cast<std::size_t>(u)].is_zero()) {
      out.ok = false;
      out.witness = {u, u};
      return out;
    }
  }
  const auto m = static_cast<ArrowId>(g.size());
  for (ArrowId a = 0; a < m; ++a) {
    for (ArrowId b : g.range_fiber(g.src(a))) {
      const ArrowId ab = g.comp(a, b);
      if (xi[static_cast<std::size_t>(ab)] !=
          xi[static_cast<std::size_t>(a)] + xi[static_cast<std::size_t>(b)]) {
        out.ok = false;
        out.witness = {a, b};
        return out;
      }
    }
  }
  return out;
}

Cocycle coboundary(const FiniteGroupoid& g, const CircleFunction& f) {
  for (ArrowId u : g.units()) {
    if (!f.count(u)) throw PartialFunction("function undefined at unit " + std::to_string(u));
  }
  Cocycle out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    const auto a = static_cast<ArrowId>(x);
    out[x] = f.at(g.src(a)) - f.at(g.rng(a));
  }
  return out;
}

Cocycle add(const Cocycle& a, const Cocycle& b) {
  Cocycle out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Cocycle negate(const Cocycle& a) {
  Cocycle out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

namespace {

using Row = std::vector<std::int64_t>;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Integer row echelon form, built one row at a time so that the n^2
// relations of a Cayley table never have to be stored at once.
class Echelon {
 public:
  explicit Echelon(std::size_t n) : pivots_(n) {}

  void insert(Row r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] == 0) continue;
      auto& p = pivots_[c];
      if (!p) {
        if (r[c] < 0) for (auto& v : r) v = -v;
        p = std::move(r);
        return;
      }
      Row& q = *p;
      // Euclid on the leading entries; afterwards q leads with the gcd and r[c] = 0.
      while (r[c] != 0) {
        const std::int64_t k = q[c] / r[c];
        for (std::size_t j = c; j < r.size(); ++j) q[j] -= k * r[j];
        std::swap(q, r);
      }
      if (q[c] < 0) for (auto& v : q) v = -v;
    }
  }

  std::vector<Row> rows() const {
    std::vector<Row> out;
    for (const auto& p : pivots_) {
      if (p) out.push_back(*p);
    }
    return out;
  }

 private:
  std::vector<std::optional<Row>> pivots_;
};

}  // namespace

SmithForm smith_normal_form(std::vector<std::vector<std::int64_t>> a, std::size_t n) {
  const std::size_t rows = a.size();
  SmithForm out;
  out.v.assign(n, Row(n, 0));
  out.v_inverse.assign(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) out.v[i][i] = out.v_inverse[i][i] = 1;

  // Column j -= k * column t, recorded in V and V^-1.
  auto col_sub = [&](std::size_t j, std::size_t t, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows; ++i) a[i][j] -= k * a[i][t];
    for (std::size_t i = 0; i < n; ++i) out.v[i][j] -= k * out.v[i][t];
    for (std::size_t i = 0; i < n; ++i) out.v_inverse[t][i] += k * out.v_inverse[j][i];
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : out.v) std::swap(row[i], row[j]);
    std::swap(out.v_inverse[i], out.v_inverse[j]);
  };
  auto row_sub = [&](std::size_t j, std::size_t t, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < n; ++c) a[j][c] -= k * a[t][c];
  };

  for (std::size_t t = 0; t < std::min(rows, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block goes to (t, t).
      std::size_t bi = rows, bj = n;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          const std::int64_t v = std::llabs(a[i][j]);
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            bi = i;
            bj = j;
          }
        }
      }
      if (best == 0) goto done;
      std::swap(a[t], a[bi]);
      col_swap(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        row_sub(i, t, floor_div(a[i][t], a[t][t]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        col_sub(j, t, floor_div(a[t][j], a[t][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row t and retry.
      std::size_t offender = rows;
      for (std::size_t i = t + 1; i < rows && offender == rows; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            offender = i;
            break;
          }
        }
      }
      if (offender == rows) break;
      for (std::size_t c = 0; c < n; ++c) a[t][c] += a[offender][c];
    }
    out.diagonal.push_back(std::llabs(a[t][t]));
  }
done:
  return out;
}

CocycleGroup cocycle_group(const FiniteGroupoid& g) {
  CocycleGroup out;
  IsotropySummary iso = isotropy(g);
  for (IsotropyGroup& group : iso.per_orbit) {
    OrbitFrame frame;
    frame.isotropy = std::move(group);
    const IsotropyGroup& h = frame.isotropy;
    out.torus_rank += h.orbit.size() - 1;

    // Breadth-first tree from the base, scanning arrows by increasing id.
    std::map<ArrowId, ArrowId> reach{{h.base, h.base}};
    std::deque<ArrowId> queue{h.base};
    while (!queue.empty()) {
      const ArrowId w = queue.front();
      queue.pop_front();
      for (ArrowId x : g.source_fiber(w)) {
        const ArrowId v = g.rng(x);
        if (reach.count(v)) continue;
        reach[v] = g.comp(x, reach.at(w));
        queue.push_back(v);
      }
    }
    for (ArrowId v : h.orbit) frame.tree.push_back(reach.at(v));

    // Abelianization: generators = elements, relations e_a + e_b - e_ab.
    const std::size_t n = h.elements.size();
    Echelon echelon(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Row r(n, 0);
        r[i] += 1;
        r[j] += 1;
        r[static_cast<std::size_t>(h.table[i][j])] -= 1;
        echelon.insert(std::move(r));
      }
    }
    SmithForm snf = smith_normal_form(echelon.rows(), n);
    if (snf.diagonal.size() != n) {
      throw InvalidGroupoid("isotropy abelianization is infinite; tables are not a group");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t d = snf.diagonal[i];
      if (d <= 1) continue;
      frame.invariants.push_back(d);
      std::vector<Angle> chi(n);
      for (std::size_t k = 0; k < n; ++k) chi[k] = Angle(snf.v[k][i], d);
      frame.characters.push_back(std::move(chi));
      frame.dual.push_back(snf.v_inverse[i]);
    }
    out.orbits.push_back(std::move(frame));
  }
  return out;
}

namespace {

// Index in isotropy.elements of t_r^-1 x t_s, where x: s -> r.
int isotropy_part(const FiniteGroupoid& g, const OrbitFrame& frame,
                  const std::map<ArrowId, std::size_t>& position, ArrowId x) {
  const ArrowId ts = frame.tree[position.at(g.src(x))];
  const ArrowId tr = frame.tree[position.at(g.rng(x))];
  const ArrowId h = g.comp(g.inv(tr), g.comp(x, ts));
  const auto& el = frame.isotropy.elements;
  return static_cast<int>(std::lower_bound(el.begin(), el.end(), h) - el.begin());
}

std::map<ArrowId, std::size_t> positions(const OrbitFrame& frame) {
  std::map<ArrowId, std::size_t> out;
  for (std::size_t i = 0; i < frame.isotropy.orbit.size(); ++i) out[frame.isotropy.orbit[i]] = i;
  return out;
}

}  // namespace

CocycleCoordinates decompose(const FiniteGroupoid& g, const CocycleGroup& z, const Cocycle& xi) {
  CocycleCheck check = is_cocycle(g, xi);
  if (!check.ok) {
    throw NotACocycle("multiplicativity fails at (" + std::to_string(check.witness->first) + "," +
                      std::to_string(check.witness->second) + ")");
  }
  CocycleCoordinates out;
  for (const OrbitFrame& frame : z.orbits) {
    std::vector<Angle> tau;
    for (ArrowId t : frame.tree) tau.push_back(xi[static_cast<std::size_t>(t)]);
    std::vector<std::int64_t> exps;
    for (std::size_t i = 0; i < frame.invariants.size(); ++i) {
      Angle w(0);
      for (std::size_t k = 0; k < frame.isotropy.elements.size(); ++k) {
        w += xi[static_cast<std::size_t>(frame.isotropy.elements[k])].times(frame.dual[i][k]);
      }
      // w = k_i / d_i in Q/Z.
      const std::int64_t d = frame.invariants[i];
      exps.push_back((w.numerator() * (d / w.denominator())) % d);
    }
    out.tau.push_back(std::move(tau));
    out.character.push_back(std::move(exps));
  }
  return out;
}

Cocycle assemble(const FiniteGroupoid& g, const CocycleGroup& z, const CocycleCoordinates& c) {
  Cocycle out(g.size());
  for (std::size_t o = 0; o < z.orbits.size(); ++o) {
    const OrbitFrame& frame = z.orbits[o];
    const auto pos = positions(frame);
    for (ArrowId u : frame.isotropy.orbit) {
      for (ArrowId x : g.source_fiber(u)) {
        const int k = isotropy_part(g, frame, pos, x);
        Angle chi(0);
        for (std::size_t i = 0; i < frame.invariants.size(); ++i) {
          chi += frame.characters[i][static_cast<std::size_t>(k)].times(c.character[o][i]);
        }
        out[static_cast<std::size_t>(x)] =
            c.tau[o][pos.at(g.rng(x))] + chi - c.tau[o][pos.at(g.src(x))];
      }
    }
  }
  return out;
}

namespace {

CocycleCoordinates zero_coordinates(const CocycleGroup& z) {
  CocycleCoordinates c;
  for (const OrbitFrame& frame : z.orbits) {
    c.tau.emplace_back(frame.isotropy.orbit.size(), Angle(0));
    c.character.emplace_back(frame.invariants.size(), 0);
  }
  return c;
}

}  // namespace

std::vector<Cocycle> cocycle_generators(const FiniteGroupoid& g, const CocycleGroup& z,
                                        std::int64_t denominator) {
  std::vector<Cocycle> out;
  for (std::size_t o = 0; o < z.orbits.size(); ++o) {
    for (std::size_t i = 0; i < z.orbits[o].invariants.size(); ++i) {
      CocycleCoordinates c = zero_coordinates(z);
      c.character[o][i] = 1;
      out.push_back(assemble(g, z, c));
    }
    for (std::size_t v = 1; v < z.orbits[o].isotropy.orbit.size(); ++v) {
      CocycleCoordinates c = zero_coordinates(z);
      c.tau[o][v] = Angle(1, denominator);
      out.push_back(assemble(g, z, c));
    }
  }
  return out;
}

std::size_t H1Description::order() const {
  std::size_t n = 1;
  for (auto d : invariants) n *= static_cast<std::size_t>(d);
  return n;
}

std::string H1Description::str() const {
  if (invariants.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (i) out += "+";
    out += "Z/" + std::to_string(invariants[i]);
  }
  return out;
}

H1Description h1(const FiniteGroupoid& g) {
  H1Description out;
  out.z1 = cocycle_group(g);
  for (const auto& frame : out.z1.orbits) {
    out.invariants.insert(out.invariants.end(), frame.invariants.begin(), frame.invariants.end());
  }
  std::sort(out.invariants.begin(), out.invariants.end());
  return out;
}

std::vector<std::vector<std::int64_t>> cohomology_class(const FiniteGroupoid& g,
                                                        const CocycleGroup& z,
                                                        const Cocycle& xi) {
  return decompose(g, z, xi).character;
}

std::optional<CircleFunction> is_coboundary(const FiniteGroupoid& g, const CocycleGroup& z,
                                            const Cocycle& xi) {
  CocycleCoordinates c = decompose(g, z, xi);
  for (const auto& exps : c.character) {
    for (auto k : exps) {
      if (k != 0) return std::nullopt;
    }
  }
  CircleFunction f;
  for (std::size_t o = 0; o < z.orbits.size(); ++o) {
    const OrbitFrame& frame = z.orbits[o];
    for (std::size_t i = 0; i < frame.isotropy.orbit.size(); ++i) {
      f[frame.isotropy.orbit[i]] = -c.tau[o][i];
    }
  }
  return f;
}

std::string format_cocycle(const Cocycle& xi) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < xi.size(); ++i) os << (i ? "," : "") << xi[i].str();
  os << "]";
  return os.str();
}

}  // namespace ample
