#include "colrec/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace colrec {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = strip(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw SpecError("expected an integer in '" + std::string(context) + "', got '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

ElementIndex parse_element(const FiniteAbelianGroup& group, std::string_view token, std::string_view context) {
  token = strip(token);
  if (!token.empty() && token.front() == '(') {
    if (token.back() != ')') throw SpecError("unbalanced tuple in '" + std::string(context) + "'");
    GroupElement x;
    for (auto part : split_top_level(token.substr(1, token.size() - 2), ',')) x.residues.push_back(parse_int(part, context));
    try {
      return group.index_of(x);
    } catch (const std::invalid_argument& e) {
      throw SpecError(std::string(e.what()) + " in '" + std::string(context) + "'");
    }
  }
  int idx = parse_int(token, context);
  if (idx < 0 || static_cast<std::size_t>(idx) >= group.order()) {
    throw SpecError("element " + std::to_string(idx) + " is not in a group of order " + std::to_string(group.order()));
  }
  return static_cast<ElementIndex>(idx);
}

std::vector<ElementIndex> parse_set_body(const FiniteAbelianGroup& group, std::string_view body, std::string_view spec) {
  body = strip(body);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    throw SpecError("set spec must look like set:{a,b,...}: '" + std::string(spec) + "'");
  }
  std::vector<ElementIndex> elements;
  auto inner = strip(body.substr(1, body.size() - 2));
  if (inner.empty()) return elements;
  for (auto token : split_top_level(inner, ',')) elements.push_back(parse_element(group, token, spec));
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

}  // namespace

FiniteAbelianGroup parse_group_spec(std::string_view spec, std::size_t max_order) {
  std::string_view s = strip(spec);
  if (s.empty()) throw SpecError("empty group spec");
  std::vector<int> orders;
  for (auto factor : split_top_level(s, 'x')) {
    factor = strip(factor);
    if (factor.empty() || factor.front() != 'Z') {
      throw SpecError("group factor must start with 'Z' in '" + std::string(spec) + "'");
    }
    factor.remove_prefix(1);
    int power = 1;
    auto caret = factor.find('^');
    if (caret != std::string_view::npos) {
      power = parse_int(factor.substr(caret + 1), spec);
      factor = factor.substr(0, caret);
      if (power < 1) throw SpecError("group power must be >= 1 in '" + std::string(spec) + "'");
    }
    int n = parse_int(factor, spec);
    orders.insert(orders.end(), static_cast<std::size_t>(power), n);
  }
  try {
    return FiniteAbelianGroup(std::move(orders), max_order);
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string(e.what()) + " in '" + std::string(spec) + "'");
  }
}

std::string render_group_spec(const FiniteAbelianGroup& group) {
  const auto& orders = group.cyclic_orders();
  std::string out;
  for (std::size_t i = 0; i < orders.size();) {
    std::size_t j = i;
    while (j < orders.size() && orders[j] == orders[i]) ++j;
    if (!out.empty()) out += "x";
    out += "Z" + std::to_string(orders[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

AllowedSet parse_allowed_spec(const FiniteAbelianGroup& group, std::string_view spec) {
  std::string_view s = strip(spec);
  auto colon = s.find(':');
  std::string_view kind = colon == std::string_view::npos ? s : s.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
  try {
    if (kind == "nonzero") return allowed_complement_identity(group);
    if (kind == "all") return allowed_all(group);
    if (kind == "none") return allowed_none(group);
    if (kind == "interval") return allowed_interval(group, parse_int(arg, spec));
    if (kind == "hamming") {
      if (!group.is_elementary_2_group()) throw SpecError("hamming allowed set needs a group Z2^n");
      return allowed_hamming(static_cast<int>(group.rank()), parse_int(arg, spec), group.order());
    }
    if (kind == "set") {
      auto elements = parse_set_body(group, arg, spec);
      return allowed_explicit(group, elements);
    }
    if (kind == "complement") return parse_allowed_spec(group, arg).complement();
  } catch (const SpecError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string(e.what()) + " (allowed spec '" + std::string(spec) + "')");
  }
  throw SpecError("unknown allowed-set spec '" + std::string(spec) + "'");
}

std::string canonical_allowed_spec(const FiniteAbelianGroup& group, std::string_view spec) {
  std::string_view s = strip(spec);
  auto colon = s.find(':');
  std::string_view kind = colon == std::string_view::npos ? s : s.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
  parse_allowed_spec(group, s);  // validates
  if (kind == "interval" || kind == "hamming") return std::string(kind) + ":" + std::to_string(parse_int(arg, spec));
  if (kind == "set") {
    std::string out = "set:{";
    bool first = true;
    for (ElementIndex x : parse_set_body(group, arg, spec)) {
      if (!first) out += ",";
      out += std::to_string(x);
      first = false;
    }
    return out + "}";
  }
  if (kind == "complement") return "complement:" + canonical_allowed_spec(group, arg);
  return std::string(kind);
}

}  // namespace colrec
