#include "pspin/interval.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "pspin/error.hpp"

namespace pspin {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

double parse_bound(const std::string& s) {
  if (s == "inf" || s == "+inf" || s == "Inf" || s == "+Inf") return kInf;
  if (s == "-inf" || s == "-Inf") return -kInf;
  double v = 0.0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw DomainError("IntervalSet: bad bound '" + s + "'");
  return v;
}

std::string format_bound(double x) {
  if (x == kInf) return "inf";
  if (x == -kInf) return "-inf";
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> parts) {
  for (const auto& iv : parts) {
    if (std::isnan(iv.lo) || std::isnan(iv.hi)) throw DomainError("IntervalSet: NaN endpoint");
    if (iv.lo > iv.hi) throw DomainError("IntervalSet: lo > hi");
    if (iv.lo < iv.hi) parts_.push_back(iv);
  }
  std::sort(parts_.begin(), parts_.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> merged;
  for (const auto& iv : parts_) {
    if (!merged.empty() && iv.lo <= merged.back().hi)
      merged.back().hi = std::max(merged.back().hi, iv.hi);
    else
      merged.push_back(iv);
  }
  parts_ = std::move(merged);
}

IntervalSet IntervalSet::real_line() { return IntervalSet({{-kInf, kInf}}); }
IntervalSet IntervalSet::below(double u) { return IntervalSet({{-kInf, u}}); }
IntervalSet IntervalSet::above(double u) { return IntervalSet({{u, kInf}}); }

IntervalSet IntervalSet::parse(std::string_view text) {
  const std::string s = trim(text);
  if (s == "R" || s == "r" || s == "all") return real_line();
  if (s.empty()) throw DomainError("IntervalSet: empty input");
  std::vector<Interval> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char open = s[pos];
    if (open != '(' && open != '[') throw DomainError("IntervalSet: expected '(' or '[' in '" + s + "'");
    const std::size_t close = s.find_first_of(")]", pos);
    if (close == std::string::npos) throw DomainError("IntervalSet: unterminated interval in '" + s + "'");
    const std::string body = s.substr(pos + 1, close - pos - 1);
    const std::size_t comma = body.find(',');
    if (comma == std::string::npos || body.find(',', comma + 1) != std::string::npos)
      throw DomainError("IntervalSet: interval needs exactly one ',' in '" + s + "'");
    const double lo = parse_bound(body.substr(0, comma));
    const double hi = parse_bound(body.substr(comma + 1));
    if (lo > hi) throw DomainError("IntervalSet: lo > hi in '" + s + "'");
    parts.push_back({lo, hi});
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != 'U' && s[pos] != 'u' && s[pos] != '|')
        throw DomainError("IntervalSet: expected union separator in '" + s + "'");
      ++pos;
      if (pos == s.size()) throw DomainError("IntervalSet: trailing separator in '" + s + "'");
    }
  }
  return IntervalSet(std::move(parts));
}

bool IntervalSet::contains(double x) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [x](const Interval& iv) { return iv.lo < x && x < iv.hi; });
}

IntervalSet IntervalSet::scaled(double c) const {
  if (!(c > 0)) throw DomainError("IntervalSet::scaled: factor must be positive");
  std::vector<Interval> out;
  out.reserve(parts_.size());
  for (const auto& iv : parts_) out.push_back({c * iv.lo, c * iv.hi});
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::negated() const {
  std::vector<Interval> out;
  out.reserve(parts_.size());
  for (const auto& iv : parts_) out.push_back({-iv.hi, -iv.lo});
  return IntervalSet(std::move(out));
}

std::string IntervalSet::to_string() const {
  if (parts_.empty()) return "{}";
  if (parts_.size() == 1 && parts_[0].lo == -kInf && parts_[0].hi == kInf) return "R";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += "U";
    out += "(" + format_bound(parts_[i].lo) + "," + format_bound(parts_[i].hi) + ")";
  }
  return out;
}

}  // namespace pspin
