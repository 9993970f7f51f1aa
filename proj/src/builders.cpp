#include "ample/builders.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "lexer.hpp"

namespace ample {

namespace {

void check_group_table(const std::vector<std::vector<int>>& t) {
  const std::size_t n = t.size();
  if (n == 0) throw MalformedTable("group table is empty");
  for (const auto& row : t) {
    if (row.size() != n) throw MalformedTable("group table is not square");
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw MalformedTable("group table entry out of range");
    }
  }
}

// Identity element of a Cayley table, validating the group axioms.
int group_identity(const std::vector<std::vector<int>>& t) {
  check_group_table(t);
  const int n = static_cast<int>(t.size());
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = t[a][b] == b && t[b][a] == b;
    if (ok) e = a;
  }
  if (e < 0) throw MalformedTable("group table has no identity");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b) has_inverse = has_inverse || (t[a][b] == e && t[b][a] == e);
    if (!has_inverse) throw MalformedTable("element " + std::to_string(a) + " has no inverse");
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) {
          throw MalformedTable("group table is not associative at (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    }
  }
  return e;
}

FiniteGroupoid from_tables(std::vector<bool> is_unit, std::vector<ArrowId> src,
                           std::vector<ArrowId> rng, std::vector<ArrowId> comp,
                           std::vector<ArrowId> inv) {
  return FiniteGroupoid(std::move(is_unit), std::move(src), std::move(rng), std::move(comp),
                        std::move(inv));
}

void check_size(std::size_t m) {
  if (m > kMaxArrows) {
    throw SizeLimitExceeded("groupoid would have " + std::to_string(m) + " arrows (limit " +
                            std::to_string(kMaxArrows) + ")");
  }
}

FiniteGroupoid pair_groupoid(int n) {
  if (n < 1) throw MalformedTable("pair groupoid needs at least one point");
  const auto m = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  check_size(m);
  std::vector<bool> is_unit(m);
  std::vector<ArrowId> src(m), rng(m), inv(m), comp(m * m, kNoArrow);
  auto id = [n](int i, int j) { return static_cast<ArrowId>(i * n + j); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto a = static_cast<std::size_t>(id(i, j));
      is_unit[a] = i == j;
      src[a] = id(j, j);
      rng[a] = id(i, i);
      inv[a] = id(j, i);
      for (int k = 0; k < n; ++k) comp[a * m + static_cast<std::size_t>(id(j, k))] = id(i, k);
    }
  }
  return from_tables(std::move(is_unit), std::move(src), std::move(rng), std::move(comp), std::move(inv));
}

FiniteGroupoid group_groupoid(const FiniteGroup& grp) {
  const std::size_t m = grp.table.size();
  check_size(m);
  std::vector<bool> is_unit(m, false);
  is_unit[static_cast<std::size_t>(grp.identity)] = true;
  std::vector<ArrowId> src(m, grp.identity), rng(m, grp.identity), inv(m), comp(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      comp[a * m + b] = grp.table[a][b];
      if (grp.table[a][b] == grp.identity) inv[a] = static_cast<ArrowId>(b);
    }
  }
  return from_tables(std::move(is_unit), std::move(src), std::move(rng), std::move(comp), std::move(inv));
}

std::string perm_str(const std::vector<int>& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + "]";
}

FiniteGroupoid action_groupoid(const FiniteGroup& grp, int n, const std::vector<std::vector<int>>& perms) {
  const int order = static_cast<int>(grp.table.size());
  if (n < 1) throw NotAGroupAction("action needs at least one point");
  if (perms.size() != grp.generators.size()) {
    throw NotAGroupAction("expected " + std::to_string(grp.generators.size()) +
                          " generator permutations, got " + std::to_string(perms.size()));
  }
  for (const auto& p : perms) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(static_cast<std::size_t>(n));
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) throw NotAGroupAction(perm_str(p) + " is not a permutation of " + std::to_string(n) + " points");
  }
  // Extend the generator images to the whole group: act(s g) = act(s) o act(g).
  std::vector<std::vector<int>> act(static_cast<std::size_t>(order));
  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  act[static_cast<std::size_t>(grp.identity)] = identity;
  std::deque<int> queue{grp.identity};
  while (!queue.empty()) {
    const int g = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < perms.size(); ++k) {
      const int s = grp.generators[k];
      const int sg = grp.table[static_cast<std::size_t>(s)][static_cast<std::size_t>(g)];
      std::vector<int> p(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) p[static_cast<std::size_t>(x)] = perms[k][static_cast<std::size_t>(act[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)])];
      auto& slot = act[static_cast<std::size_t>(sg)];
      if (slot.empty()) {
        slot = std::move(p);
        queue.push_back(sg);
      } else if (slot != p) {
        throw NotAGroupAction("generator images do not respect the group relations at element " +
                              std::to_string(sg));
      }
    }
  }
  for (int g = 0; g < order; ++g) {
    if (act[static_cast<std::size_t>(g)].empty()) {
      throw NotAGroupAction("generators do not reach element " + std::to_string(g));
    }
  }
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      const auto& gh = act[static_cast<std::size_t>(grp.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)])];
      for (int x = 0; x < n; ++x) {
        if (gh[static_cast<std::size_t>(x)] != act[static_cast<std::size_t>(g)][static_cast<std::size_t>(act[static_cast<std::size_t>(h)][static_cast<std::size_t>(x)])]) {
          throw NotAGroupAction("(gh).x != g.(h.x) for g=" + std::to_string(g) + " h=" + std::to_string(h));
        }
      }
    }
  }

  const auto m = static_cast<std::size_t>(n) * static_cast<std::size_t>(order);
  check_size(m);
  auto id = [order](int x, int g) { return static_cast<ArrowId>(x * order + g); };
  std::vector<int> group_inv(static_cast<std::size_t>(order));
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      if (grp.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] == grp.identity) group_inv[static_cast<std::size_t>(g)] = h;
    }
  }
  std::vector<bool> is_unit(m);
  std::vector<ArrowId> src(m), rng(m), inv(m), comp(m * m, kNoArrow);
  for (int x = 0; x < n; ++x) {
    for (int g = 0; g < order; ++g) {
      const auto a = static_cast<std::size_t>(id(x, g));
      const int gx = act[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)];
      is_unit[a] = g == grp.identity;
      src[a] = id(x, grp.identity);
      rng[a] = id(gx, grp.identity);
      inv[a] = id(gx, group_inv[static_cast<std::size_t>(g)]);
      // (g.x, h) o (x, g) = (x, h g)
      for (int h = 0; h < order; ++h) {
        const auto left = static_cast<std::size_t>(id(gx, h));
        comp[left * m + a] = id(x, grp.table[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)]);
      }
    }
  }
  return from_tables(std::move(is_unit), std::move(src), std::move(rng), std::move(comp), std::move(inv));
}

struct Tables {
  std::vector<bool> is_unit;
  std::vector<ArrowId> src, rng, comp, inv;
};

Tables tables_of(const FiniteGroupoid& g) {
  Tables t;
  const std::size_t m = g.size();
  for (std::size_t a = 0; a < m; ++a) {
    const auto x = static_cast<ArrowId>(a);
    t.is_unit.push_back(g.is_unit(x));
    t.src.push_back(g.src(x));
    t.rng.push_back(g.rng(x));
    t.inv.push_back(g.inv(x));
    for (std::size_t b = 0; b < m; ++b) t.comp.push_back(g.comp(x, static_cast<ArrowId>(b)));
  }
  return t;
}

FiniteGroupoid union_groupoid(const FiniteGroupoid& s, const FiniteGroupoid& t) {
  const std::size_t ms = s.size(), mt = t.size(), m = ms + mt;
  check_size(m);
  Tables a = tables_of(s), b = tables_of(t);
  const auto shift = static_cast<ArrowId>(ms);
  auto sh = [shift](ArrowId x) { return x == kNoArrow ? kNoArrow : x + shift; };
  std::vector<bool> is_unit = a.is_unit;
  is_unit.insert(is_unit.end(), b.is_unit.begin(), b.is_unit.end());
  std::vector<ArrowId> src = a.src, rng = a.rng, inv = a.inv, comp(m * m, kNoArrow);
  for (std::size_t i = 0; i < mt; ++i) {
    src.push_back(sh(b.src[i]));
    rng.push_back(sh(b.rng[i]));
    inv.push_back(sh(b.inv[i]));
  }
  for (std::size_t i = 0; i < ms; ++i) {
    for (std::size_t j = 0; j < ms; ++j) comp[i * m + j] = a.comp[i * ms + j];
  }
  for (std::size_t i = 0; i < mt; ++i) {
    for (std::size_t j = 0; j < mt; ++j) comp[(i + ms) * m + (j + ms)] = sh(b.comp[i * mt + j]);
  }
  return from_tables(std::move(is_unit), std::move(src), std::move(rng), std::move(comp), std::move(inv));
}

FiniteGroupoid product_groupoid(const FiniteGroupoid& s, const FiniteGroupoid& t) {
  const std::size_t ms = s.size(), mt = t.size(), m = ms * mt;
  check_size(m);
  auto id = [mt](ArrowId a, ArrowId b) {
    return static_cast<ArrowId>(static_cast<std::size_t>(a) * mt + static_cast<std::size_t>(b));
  };
  std::vector<bool> is_unit(m);
  std::vector<ArrowId> src(m), rng(m), inv(m), comp(m * m, kNoArrow);
  for (std::size_t i = 0; i < ms; ++i) {
    for (std::size_t j = 0; j < mt; ++j) {
      const auto a = static_cast<ArrowId>(i), b = static_cast<ArrowId>(j);
      const auto x = static_cast<std::size_t>(id(a, b));
      is_unit[x] = s.is_unit(a) && t.is_unit(b);
      src[x] = id(s.src(a), t.src(b));
      rng[x] = id(s.rng(a), t.rng(b));
      inv[x] = id(s.inv(a), t.inv(b));
    }
  }
  for (std::size_t a1 = 0; a1 < ms; ++a1) {
    for (std::size_t a2 = 0; a2 < ms; ++a2) {
      const ArrowId ca = s.comp(static_cast<ArrowId>(a1), static_cast<ArrowId>(a2));
      if (ca == kNoArrow) continue;
      for (std::size_t b1 = 0; b1 < mt; ++b1) {
        for (std::size_t b2 = 0; b2 < mt; ++b2) {
          const ArrowId cb = t.comp(static_cast<ArrowId>(b1), static_cast<ArrowId>(b2));
          if (cb == kNoArrow) continue;
          const auto x = static_cast<std::size_t>(id(static_cast<ArrowId>(a1), static_cast<ArrowId>(b1)));
          const auto y = static_cast<std::size_t>(id(static_cast<ArrowId>(a2), static_cast<ArrowId>(b2)));
          comp[x * m + y] = id(ca, cb);
        }
      }
    }
  }
  return from_tables(std::move(is_unit), std::move(src), std::move(rng), std::move(comp), std::move(inv));
}

FiniteGroupoid explicit_groupoid(const ExplicitTables& e) {
  if (e.arrows < 0) throw MalformedTable("negative arrow count");
  const auto m = static_cast<std::size_t>(e.arrows);
  check_size(m);
  auto in_range = [m](int a) { return a >= 0 && static_cast<std::size_t>(a) < m; };
  std::vector<bool> is_unit(m, false);
  for (int u : e.units) {
    if (!in_range(u)) throw MalformedTable("unit " + std::to_string(u) + " is not an arrow");
    is_unit[static_cast<std::size_t>(u)] = true;
  }
  auto column = [&](const std::vector<int>& v, const char* name) {
    if (v.size() != m) {
      throw MalformedTable(std::string(name) + " lists " + std::to_string(v.size()) +
                           " entries for " + std::to_string(m) + " arrows");
    }
    return std::vector<ArrowId>(v.begin(), v.end());
  };
  std::vector<ArrowId> src = column(e.src, "src"), rng = column(e.rng, "rng"),
                       inv = column(e.inv, "inv");
  std::vector<ArrowId> comp(m * m, kNoArrow);
  for (const auto& triple : e.comp) {
    if (triple.size() != 3) throw MalformedTable("comp entries must be triples [a,b,ab]");
    for (int v : triple) {
      if (!in_range(v)) throw MalformedTable("comp entry " + std::to_string(v) + " is not an arrow");
    }
    auto& slot = comp[static_cast<std::size_t>(triple[0]) * m + static_cast<std::size_t>(triple[1])];
    if (slot != kNoArrow && slot != triple[2]) {
      throw MalformedTable("comp lists (" + std::to_string(triple[0]) + "," +
                           std::to_string(triple[1]) + ") twice");
    }
    slot = triple[2];
  }
  return from_tables(std::move(is_unit), std::move(src), std::move(rng), std::move(comp), std::move(inv));
}

}  // namespace

FiniteGroup make_group(const GroupSpec& spec) {
  FiniteGroup out;
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: {
      if (spec.n < 1) throw MalformedTable("cyclic group needs order at least 1");
      check_size(static_cast<std::size_t>(spec.n));
      out.table.assign(static_cast<std::size_t>(spec.n), std::vector<int>(static_cast<std::size_t>(spec.n)));
      for (int a = 0; a < spec.n; ++a) {
        for (int b = 0; b < spec.n; ++b) out.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % spec.n;
      }
      out.identity = 0;
      out.generators = {spec.n > 1 ? 1 : 0};
      break;
    }
    case GroupSpec::Kind::Symmetric: {
      if (spec.n < 1) throw MalformedTable("symmetric group needs degree at least 1");
      if (spec.n > 6) throw SizeLimitExceeded("sym " + std::to_string(spec.n) + " is too large (limit 6)");
      std::vector<std::vector<int>> perms;
      std::vector<int> p(static_cast<std::size_t>(spec.n));
      std::iota(p.begin(), p.end(), 0);
      do perms.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      std::map<std::vector<int>, int> index;
      for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
      out.table.assign(perms.size(), std::vector<int>(perms.size()));
      for (std::size_t a = 0; a < perms.size(); ++a) {
        for (std::size_t b = 0; b < perms.size(); ++b) {
          std::vector<int> c(static_cast<std::size_t>(spec.n));
          for (std::size_t i = 0; i < c.size(); ++i) c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
          out.table[a][b] = index.at(c);
        }
      }
      out.identity = 0;
      if (spec.n == 1) {
        out.generators = {0};
      } else {
        std::vector<int> swap01(static_cast<std::size_t>(spec.n)), cycle(static_cast<std::size_t>(spec.n));
        std::iota(swap01.begin(), swap01.end(), 0);
        std::swap(swap01[0], swap01[1]);
        for (int i = 0; i < spec.n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % spec.n;
        out.generators = {index.at(swap01)};
        if (cycle != swap01) out.generators.push_back(index.at(cycle));
      }
      break;
    }
    case GroupSpec::Kind::Table: {
      out.identity = group_identity(spec.table);
      check_size(spec.table.size());
      out.table = spec.table;
      out.generators.resize(spec.table.size());
      std::iota(out.generators.begin(), out.generators.end(), 0);
      break;
    }
  }
  return out;
}

FiniteGroupoid build(const GroupoidSpec& spec) {
  switch (spec.kind) {
    case GroupoidSpec::Kind::Pair:
      return pair_groupoid(spec.n);
    case GroupoidSpec::Kind::Group:
      return group_groupoid(make_group(spec.group));
    case GroupoidSpec::Kind::Action:
      return action_groupoid(make_group(spec.group), spec.n, spec.perms);
    case GroupoidSpec::Kind::Union:
      return union_groupoid(build(*spec.left), build(*spec.right));
    case GroupoidSpec::Kind::Product:
      return product_groupoid(build(*spec.left), build(*spec.right));
    case GroupoidSpec::Kind::Explicit:
      return explicit_groupoid(spec.tables);
  }
  throw MalformedTable("unknown spec kind");
}

namespace {

using detail::Lexer;

std::vector<int> int_list(Lexer& lx) {
  std::vector<int> out;
  lx.expect('[');
  if (lx.accept(']')) return out;
  do out.push_back(lx.small_integer(-1'000'000, 1'000'000, "entry"));
  while (lx.accept(','));
  lx.expect(']');
  return out;
}

std::vector<std::vector<int>> int_matrix(Lexer& lx) {
  std::vector<std::vector<int>> out;
  lx.expect('[');
  if (lx.accept(']')) return out;
  do out.push_back(int_list(lx));
  while (lx.accept(','));
  lx.expect(']');
  return out;
}

GroupSpec parse_group_body(Lexer& lx) {
  GroupSpec g;
  const std::string kind = lx.identifier();
  if (kind == "cyclic") {
    g.kind = GroupSpec::Kind::Cyclic;
    g.n = lx.small_integer(1, static_cast<std::int64_t>(kMaxArrows), "order");
  } else if (kind == "sym") {
    g.kind = GroupSpec::Kind::Symmetric;
    g.n = lx.small_integer(1, 6, "degree");
  } else if (kind == "table") {
    g.kind = GroupSpec::Kind::Table;
    g.table = int_matrix(lx);
  } else {
    lx.fail("unknown group kind '" + kind + "' (expected cyclic, sym or table)");
  }
  return g;
}

// Inside action(...) the group may be written bare or as group(...).
GroupSpec parse_group_arg(Lexer& lx) {
  if (lx.at_identifier("group")) {
    lx.identifier();
    lx.expect('(');
    GroupSpec g = parse_group_body(lx);
    lx.expect(')');
    return g;
  }
  return parse_group_body(lx);
}

ExplicitTables parse_explicit(Lexer& lx) {
  ExplicitTables t;
  bool seen_arrows = false;
  std::map<std::string, bool> seen;
  lx.expect('{');
  while (!lx.accept('}')) {
    const int line = lx.line(), col = lx.column();
    const std::string key = lx.identifier();
    if (seen[key]) throw ParseError("duplicate key '" + key + "'", line, col);
    seen[key] = true;
    lx.expect(':');
    if (key == "arrows") {
      t.arrows = lx.small_integer(0, static_cast<std::int64_t>(kMaxArrows), "arrow count");
      seen_arrows = true;
    } else if (key == "units") {
      t.units = int_list(lx);
    } else if (key == "src") {
      t.src = int_list(lx);
    } else if (key == "rng") {
      t.rng = int_list(lx);
    } else if (key == "inv") {
      t.inv = int_list(lx);
    } else if (key == "comp") {
      t.comp = int_matrix(lx);
    } else {
      throw ParseError("unknown key '" + key + "'", line, col);
    }
    lx.accept(',');
  }
  if (!seen_arrows) lx.fail("explicit table lacks 'arrows'");
  return t;
}

GroupoidSpec parse_spec_expr(Lexer& lx) {
  GroupoidSpec s;
  const int line = lx.line(), col = lx.column();
  const std::string head = lx.identifier();
  if (head == "explicit") {
    s.kind = GroupoidSpec::Kind::Explicit;
    s.tables = parse_explicit(lx);
    return s;
  }
  lx.expect('(');
  if (head == "pair") {
    s.kind = GroupoidSpec::Kind::Pair;
    s.n = lx.small_integer(1, 64, "point count");
  } else if (head == "group") {
    s.kind = GroupoidSpec::Kind::Group;
    s.group = parse_group_body(lx);
  } else if (head == "action") {
    s.kind = GroupoidSpec::Kind::Action;
    s.group = parse_group_arg(lx);
    lx.expect(',');
    s.n = lx.small_integer(1, static_cast<std::int64_t>(kMaxArrows), "point count");
    lx.expect(',');
    s.perms = int_matrix(lx);
  } else if (head == "union" || head == "product") {
    s.kind = head == "union" ? GroupoidSpec::Kind::Union : GroupoidSpec::Kind::Product;
    s.left = std::make_shared<GroupoidSpec>(parse_spec_expr(lx));
    lx.expect(',');
    s.right = std::make_shared<GroupoidSpec>(parse_spec_expr(lx));
  } else {
    throw ParseError("unknown constructor '" + head + "'", line, col);
  }
  lx.expect(')');
  return s;
}

std::string list_str(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

std::string matrix_str(const std::vector<std::vector<int>>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + list_str(v[i]);
  return out + "]";
}

std::string group_str(const GroupSpec& g) {
  switch (g.kind) {
    case GroupSpec::Kind::Cyclic:
      return "cyclic " + std::to_string(g.n);
    case GroupSpec::Kind::Symmetric:
      return "sym " + std::to_string(g.n);
    case GroupSpec::Kind::Table:
      return "table " + matrix_str(g.table);
  }
  return "";
}

}  // namespace

GroupoidSpec parse_spec(const std::string& text) {
  Lexer lx(text);
  GroupoidSpec s = parse_spec_expr(lx);
  if (!lx.at_end()) lx.fail("trailing input");
  return s;
}

std::string print_spec(const GroupoidSpec& s) {
  switch (s.kind) {
    case GroupoidSpec::Kind::Pair:
      return "pair(" + std::to_string(s.n) + ")";
    case GroupoidSpec::Kind::Group:
      return "group(" + group_str(s.group) + ")";
    case GroupoidSpec::Kind::Action:
      return "action(" + group_str(s.group) + ", " + std::to_string(s.n) + ", " +
             matrix_str(s.perms) + ")";
    case GroupoidSpec::Kind::Union:
      return "union(" + print_spec(*s.left) + ", " + print_spec(*s.right) + ")";
    case GroupoidSpec::Kind::Product:
      return "product(" + print_spec(*s.left) + ", " + print_spec(*s.right) + ")";
    case GroupoidSpec::Kind::Explicit: {
      std::vector<std::vector<int>> comp = s.tables.comp;
      std::sort(comp.begin(), comp.end());
      std::vector<int> units = s.tables.units;
      std::sort(units.begin(), units.end());
      return "explicit{arrows: " + std::to_string(s.tables.arrows) + ", units: " + list_str(units) +
             ", src: " + list_str(s.tables.src) + ", rng: " + list_str(s.tables.rng) +
             ", inv: " + list_str(s.tables.inv) + ", comp: " + matrix_str(comp) + "}";
    }
  }
  return "";
}

GroupoidPtr load_groupoid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return std::make_shared<const FiniteGroupoid>(build(parse_spec(buf.str())));
}

}  // namespace ample
