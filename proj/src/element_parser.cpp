#include <set>

#include "ample/builders.hpp"
#include "lexer.hpp"

namespace ample {

namespace {

using detail::Lexer;

class ElementParser {
 public:
  ElementParser(const std::string& text, GroupoidPtr g) : lx_(text), g_(std::move(g)) {}

  ExactElement parse() {
    ExactElement e = expr();
    if (!lx_.at_end()) lx_.fail("trailing input");
    return e;
  }

 private:
  ExactElement expr() {
    const int line = lx_.line(), col = lx_.column();
    const std::string head = lx_.identifier();
    if (head == "ind") {
      lx_.expect('(');
      ExactElement e = indicator_of(arrow_list(), {});
      lx_.expect(')');
      return e;
    }
    if (head == "phase") {
      lx_.expect('(');
      CircleFunction f = phases();
      lx_.expect(')');
      lx_.expect('*');
      const int l2 = lx_.line(), c2 = lx_.column();
      if (lx_.identifier() != "ind") throw ParseError("expected 'ind' after phase(...)*", l2, c2);
      lx_.expect('(');
      ExactElement e = indicator_of(arrow_list(), f);
      lx_.expect(')');
      return e;
    }
    if (head == "sum" || head == "mul") {
      lx_.expect('(');
      ExactElement a = expr();
      lx_.expect(',');
      ExactElement b = expr();
      lx_.expect(')');
      return head == "sum" ? a + b : convolve(a, b);
    }
    if (head == "scale") {
      lx_.expect('(');
      const Rational re = lx_.rational();
      lx_.expect(',');
      const Rational im = lx_.rational();
      lx_.expect(',');
      ExactElement a = expr();
      lx_.expect(')');
      return scaled(Cyclotomic(re, im), a);
    }
    throw ParseError("unknown element constructor '" + head + "'", line, col);
  }

  ArrowId arrow_id(bool unit_required) {
    const int line = lx_.line(), col = lx_.column();
    const std::int64_t v = lx_.integer();
    if (v < 0 || static_cast<std::size_t>(v) >= g_->size()) {
      throw ParseError("unknown arrow id " + std::to_string(v), line, col);
    }
    const auto a = static_cast<ArrowId>(v);
    if (unit_required && !g_->is_unit(a)) {
      throw ParseError("arrow " + std::to_string(v) + " is not a unit", line, col);
    }
    return a;
  }

  std::vector<ArrowId> arrow_list() {
    std::set<ArrowId> out;
    lx_.expect('[');
    if (!lx_.accept(']')) {
      do out.insert(arrow_id(false));
      while (lx_.accept(','));
      lx_.expect(']');
    }
    return {out.begin(), out.end()};
  }

  CircleFunction phases() {
    CircleFunction f;
    if (lx_.peek() == ')') return f;
    do {
      const int line = lx_.line(), col = lx_.column();
      const ArrowId u = arrow_id(true);
      lx_.expect(':');
      const Rational q = lx_.rational();
      if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) lx_.fail("angle too large");
      const Angle a(q.get_num().get_si(), q.get_den().get_si());
      if (!f.emplace(u, a).second) throw ParseError("phase given twice for unit " + std::to_string(u), line, col);
    } while (lx_.accept(','));
    return f;
  }

  // Coefficient at x is exp(2 pi i f(r(x))); missing units read as angle 0.
  ExactElement indicator_of(const std::vector<ArrowId>& arrows, const CircleFunction& f) {
    ExactElement e = ExactElement::zero(g_);
    for (ArrowId x : arrows) {
      auto it = f.find(g_->rng(x));
      e[x] = it == f.end() ? Cyclotomic(1) : Cyclotomic::root_of_unity(it->second);
    }
    return e;
  }

  Lexer lx_;
  GroupoidPtr g_;
};

}  // namespace

ExactElement parse_element(const std::string& text, const GroupoidPtr& g) {
  return ElementParser(text, g).parse();
}

}  // namespace ample
