#include "trm/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "trm/error.hpp"

namespace trm {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  bool done() const noexcept { return pos_ == text_.size(); }
  char peek() const noexcept { return done() ? '\0' : text_[pos_]; }
  void advance() noexcept { ++pos_; }
  std::size_t offset() const noexcept { return base_ + pos_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset()); }

  // Unsigned decimal magnitude; empty when no digits follow.
  bool magnitude(double& out) {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first == last || !(std::isdigit(static_cast<unsigned char>(*first)) || *first == '.')) return false;
    const auto [ptr, ec] = std::from_chars(first, last, out, std::chars_format::general);
    if (ec == std::errc::result_out_of_range) fail("number out of range");
    if (ec != std::errc()) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return true;
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

double sign_of(Cursor& cur) {
  if (cur.peek() == '+') {
    cur.advance();
    return 1.0;
  }
  if (cur.peek() == '-') {
    cur.advance();
    return -1.0;
  }
  return 0.0;
}

Point parse_point_at(std::string_view text, std::size_t base) {
  Cursor cur(text, base);
  if (cur.done()) cur.fail("expected a complex number like 0.3-0.1i");

  // First term: real part, or the whole imaginary part.
  double sign = sign_of(cur);
  double first = 1.0;
  const bool has_digits = cur.magnitude(first);
  if (cur.peek() == 'i') {
    cur.advance();
    if (!cur.done()) cur.fail("unexpected character after imaginary unit");
    return {0.0, (sign < 0.0 ? -1.0 : 1.0) * first};
  }
  if (!has_digits) cur.fail("expected a number");
  const double re = (sign < 0.0 ? -1.0 : 1.0) * first;
  if (cur.done()) return {re, 0.0};

  // Second term: signed imaginary part.
  sign = sign_of(cur);
  if (sign == 0.0) cur.fail("expected '+' or '-' before the imaginary part");
  double second = 1.0;
  cur.magnitude(second);
  if (cur.peek() != 'i') cur.fail("expected imaginary unit 'i'");
  cur.advance();
  if (!cur.done()) cur.fail("unexpected character after imaginary unit");
  return {re, sign * second};
}

}  // namespace

Point parse_point(std::string_view text) {
  const Point p = parse_point_at(text, 0);
  if (!is_finite(p)) throw ParseError("coordinates must be finite", 0);
  return p;
}

Domain parse_domain(std::string_view text) {
  if (text == "disk") return UnitDisk{};
  if (text == "halfplane") return UpperHalfPlane{};
  if (text == "punctured") return PuncturedUnitDisk{};

  constexpr std::string_view complement = "complement:";
  constexpr std::string_view polygon = "polygon:";
  if (text.starts_with(complement)) {
    return PointComplement{parse_point_at(text.substr(complement.size()), complement.size())};
  }
  if (text.starts_with(polygon)) {
    std::vector<Point> vertices;
    std::size_t start = polygon.size();
    while (true) {
      const std::size_t end = std::min(text.find(';', start), text.size());
      vertices.push_back(parse_point_at(text.substr(start, end - start), start));
      if (end == text.size()) break;
      start = end + 1;
    }
    return ConvexPolygon(std::move(vertices));
  }
  throw ParseError("unknown domain; expected disk, halfplane, punctured, polygon:<v1;v2;...> or complement:<z0>",
                   0);
}

MetricSpec parse_metric(std::string_view text) {
  if (text == "s") return {Metric::S};
  if (text == "jstar") return {Metric::JStar};
  if (text == "p") return {Metric::PointPair};
  if (text == "low") return {Metric::Low};
  if (text == "rho") return {Metric::Rho};
  constexpr std::string_view barrlund = "barrlund:";
  if (text.starts_with(barrlund)) {
    const std::string_view arg = text.substr(barrlund.size());
    double p = 0.0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), p);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) {
      throw ParseError("expected a real exponent after 'barrlund:'",
                       barrlund.size() + static_cast<std::size_t>(ptr - arg.data()));
    }
    return {Metric::Barrlund, p};
  }
  throw ParseError("unknown metric; expected s, jstar, p, barrlund:<p>, low or rho", 0);
}

}  // namespace trm
