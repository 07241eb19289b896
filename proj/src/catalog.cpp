#include "sylowlab/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "sylowlab/error.hpp"
#include "sylowlab/numeric.hpp"

namespace sylowlab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse_all() {
    GroupSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail({"end of input"});
    return spec;
  }

 private:
  [[noreturn]] void fail(std::set<std::string> expected) const {
    const std::string found = pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string{};
    throw ParseError(pos_, std::move(expected), found);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Unsigned integer without leading whitespace skipping (cycle bodies).
  std::int64_t raw_integer() {
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) fail({"integer below 10^9"});
      ++pos_;
    }
    if (pos_ == start) fail({"integer"});
    return value;
  }

  std::int64_t integer() {
    skip_ws();
    return raw_integer();
  }

  [[noreturn]] void invalid(std::size_t at, const std::string& message) const {
    throw Error(ErrorKind::kValidationError, message + " (at offset " + std::to_string(at) + ")");
  }

  GroupSpec parse_spec() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string kind = word();
    GroupSpec spec;
    if (kind == "q8") {
      spec.kind = GroupKind::kQ8;
      return spec;
    }
    if (kind == "prod") {
      spec.kind = GroupKind::kProd;
      expect('(');
      spec.factors.push_back(parse_spec());
      expect(',');
      spec.factors.push_back(parse_spec());
      expect(')');
      return spec;
    }
    static const std::set<std::string> kKinds = {"alt",  "cyclic", "dihedral", "elab", "perm",
                                                 "prod", "q8",     "sym",      "table"};
    if (!kKinds.contains(kind)) {
      pos_ = start;
      fail(kKinds);
    }
    expect(':');
    const std::size_t arg_at = pos_;
    if (kind == "cyclic" || kind == "dihedral" || kind == "sym" || kind == "alt") {
      spec.n = integer();
      if (kind == "cyclic") {
        spec.kind = GroupKind::kCyclic;
        if (spec.n < 1) invalid(arg_at, "cyclic order must be at least 1");
      } else if (kind == "dihedral") {
        spec.kind = GroupKind::kDihedral;
        if (spec.n < 2 || spec.n % 2 != 0) invalid(arg_at, "dihedral order must be even and >= 2");
      } else {
        spec.kind = kind == "sym" ? GroupKind::kSym : GroupKind::kAlt;
        if (spec.n < 1) invalid(arg_at, kind + " degree must be at least 1");
      }
    } else if (kind == "elab") {
      spec.kind = GroupKind::kElab;
      spec.n = integer();
      if (!numeric::is_prime(spec.n)) invalid(arg_at, "elab base must be prime");
      expect('^');
      const std::size_t exp_at = pos_;
      spec.exponent = integer();
      if (spec.exponent < 1) invalid(exp_at, "elab exponent must be at least 1");
    } else if (kind == "perm") {
      spec.kind = GroupKind::kPerm;
      spec.generators.push_back(parse_generator());
      while (peek(';')) {
        ++pos_;
        spec.generators.push_back(parse_generator());
      }
    } else {
      spec.kind = GroupKind::kTable;
      expect('@');
      skip_ws();
      const std::size_t path_start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' &&
             !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (pos_ == path_start) fail({"file path"});
      spec.path = std::string(text_.substr(path_start, pos_ - path_start));
    }
    return spec;
  }

  CycleList parse_generator() {
    skip_ws();
    CycleList cycles;
    if (pos_ < text_.size() && text_[pos_] == 'e') {
      ++pos_;
      return cycles;
    }
    if (!peek('(')) fail({"'('", "'e'"});
    const std::size_t gen_at = pos_;
    std::set<std::uint32_t> seen;
    while (peek('(')) {
      ++pos_;
      std::vector<std::uint32_t> cycle;
      skip_ws();
      while (true) {
        const std::size_t at = pos_;
        const auto point = raw_integer();
        if (point < 1) invalid(at, "points are 1-based");
        if (!seen.insert(static_cast<std::uint32_t>(point)).second) {
          invalid(at, "point " + std::to_string(point) + " repeated within a generator");
        }
        cycle.push_back(static_cast<std::uint32_t>(point));
        const std::size_t before_ws = pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ')') break;
        if (pos_ == before_ws) fail({"' '", "')'"});
      }
      ++pos_;
      if (cycle.size() < 2) invalid(gen_at, "a cycle needs at least two points");
      cycles.push_back(std::move(cycle));
    }
    return cycles;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_cycles(const CycleList& cycles) {
  if (cycles.empty()) return "e";
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
    out += ')';
  }
  return out;
}

void require_order_within(std::int64_t order, std::size_t cap) {
  if (order > static_cast<std::int64_t>(cap)) {
    throw Error(ErrorKind::kClosureExceedsCap,
                "order " + std::to_string(order) + " exceeds construction cap " + std::to_string(cap));
  }
}

std::vector<std::vector<Element>> square(std::size_t h) {
  return std::vector<std::vector<Element>>(h, std::vector<Element>(h, 0));
}

FiniteGroup cyclic_group(std::int64_t n, std::size_t cap) {
  require_order_within(n, cap);
  const auto h = static_cast<std::size_t>(n);
  auto t = square(h);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) t[i][j] = static_cast<Element>((i + j) % h);
  }
  return group_from_table(t, cap);
}

// Index k < n is r^k, index n + k is s r^k, with r^k s = s r^-k.
FiniteGroup dihedral_group(std::int64_t order, std::size_t cap) {
  require_order_within(order, cap);
  const auto h = static_cast<std::size_t>(order);
  const std::size_t n = h / 2;
  auto t = square(h);
  std::vector<std::string> labels(h);
  for (std::size_t i = 0; i < h; ++i) {
    const std::size_t fi = i / n, ki = i % n;
    labels[i] = std::string(fi ? "s" : "") + (ki == 0 ? (fi ? "" : "e") : (fi ? " r^" : "r^") + std::to_string(ki));
    for (std::size_t j = 0; j < h; ++j) {
      const std::size_t fj = j / n, kj = j % n;
      const std::size_t k = ((fj ? n - ki : ki) + kj) % n;
      t[i][j] = static_cast<Element>(((fi + fj) % 2) * n + k);
    }
  }
  return group_from_table(t, cap).relabeled(std::move(labels));
}

// Elements 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion_group(std::size_t cap) {
  const std::vector<std::vector<Element>> t = {
      {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6}, {2, 3, 1, 0, 6, 7, 5, 4},
      {3, 2, 0, 1, 7, 6, 4, 5}, {4, 5, 7, 6, 1, 0, 2, 3}, {5, 4, 6, 7, 0, 1, 3, 2},
      {6, 7, 4, 5, 3, 2, 1, 0}, {7, 6, 5, 4, 2, 3, 0, 1},
  };
  require_order_within(8, cap);
  return group_from_table(t, cap).relabeled({"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

// Vectors over Z/p in lexicographic order (first coordinate most significant).
FiniteGroup elementary_abelian(std::int64_t p, std::int64_t k, std::size_t cap) {
  std::int64_t order = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    order *= p;
    require_order_within(order, cap);
  }
  const auto h = static_cast<std::size_t>(order);
  std::vector<std::vector<std::int64_t>> digits(h, std::vector<std::int64_t>(static_cast<std::size_t>(k)));
  std::vector<std::string> labels(h);
  for (std::size_t x = 0; x < h; ++x) {
    std::size_t rest = x;
    for (auto i = static_cast<std::size_t>(k); i-- > 0;) {
      digits[x][i] = static_cast<std::int64_t>(rest % static_cast<std::size_t>(p));
      rest /= static_cast<std::size_t>(p);
    }
    labels[x] = "(";
    for (std::size_t i = 0; i < digits[x].size(); ++i) labels[x] += (i ? "," : "") + std::to_string(digits[x][i]);
    labels[x] += ")";
  }
  auto t = square(h);
  for (std::size_t a = 0; a < h; ++a) {
    for (std::size_t b = 0; b < h; ++b) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
        idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>((digits[a][i] + digits[b][i]) % p);
      }
      t[a][b] = static_cast<Element>(idx);
    }
  }
  return group_from_table(t, cap).relabeled(std::move(labels));
}

// Pair (a, b) has index a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
  const std::size_t ha = a.order(), hb = b.order();
  require_order_within(static_cast<std::int64_t>(ha * hb), cap);
  const std::size_t h = ha * hb;
  auto t = square(h);
  std::vector<std::string> labels(h);
  for (std::size_t x = 0; x < h; ++x) {
    const auto xa = static_cast<Element>(x / hb), xb = static_cast<Element>(x % hb);
    labels[x] = "(" + a.label(xa) + "," + b.label(xb) + ")";
    for (std::size_t y = 0; y < h; ++y) {
      const auto ya = static_cast<Element>(y / hb), yb = static_cast<Element>(y % hb);
      t[x][y] = static_cast<Element>(a.mul(xa, ya) * hb + b.mul(xb, yb));
    }
  }
  return group_from_table(t, cap).relabeled(std::move(labels));
}

std::vector<std::uint32_t> iota_cycle(std::uint32_t from, std::uint32_t to) {
  std::vector<std::uint32_t> c;
  for (std::uint32_t i = from; i <= to; ++i) c.push_back(i);
  return c;
}

FiniteGroup symmetric_group(std::int64_t n, std::size_t cap) {
  const auto deg = static_cast<std::uint32_t>(n);
  std::vector<Permutation> gens;
  if (deg >= 3) gens.push_back(Permutation::from_cycles({iota_cycle(1, deg)}, deg));
  if (deg >= 2) gens.push_back(Permutation::from_cycles({{1, 2}}, deg));
  return group_from_generators(gens, cap);
}

FiniteGroup alternating_group(std::int64_t n, std::size_t cap) {
  const auto deg = static_cast<std::uint32_t>(n);
  std::vector<Permutation> gens;
  for (std::uint32_t k = 3; k <= deg; ++k) gens.push_back(Permutation::from_cycles({{1, 2, k}}, deg));
  return group_from_generators(gens, cap);
}

FiniteGroup permutation_group(const std::vector<CycleList>& generators, std::size_t cap) {
  std::uint32_t degree = 1;
  for (const auto& g : generators) {
    for (const auto& c : g) degree = std::max(degree, *std::max_element(c.begin(), c.end()));
  }
  std::vector<Permutation> gens;
  for (const auto& g : generators) gens.push_back(Permutation::from_cycles(g, degree));
  return group_from_generators(gens, cap);
}

FiniteGroup build_unnamed(const GroupSpec& spec, std::size_t cap) {
  switch (spec.kind) {
    case GroupKind::kCyclic: return cyclic_group(spec.n, cap);
    case GroupKind::kDihedral: return dihedral_group(spec.n, cap);
    case GroupKind::kSym: return symmetric_group(spec.n, cap);
    case GroupKind::kAlt: return alternating_group(spec.n, cap);
    case GroupKind::kQ8: return quaternion_group(cap);
    case GroupKind::kElab: return elementary_abelian(spec.n, spec.exponent, cap);
    case GroupKind::kProd:
      return direct_product(build(spec.factors.at(0), cap), build(spec.factors.at(1), cap), cap);
    case GroupKind::kPerm: return permutation_group(spec.generators, cap);
    case GroupKind::kTable: return load_table_file(spec.path, cap);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown group kind");
}

}  // namespace

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::kCyclic: return "cyclic:" + std::to_string(spec.n);
    case GroupKind::kDihedral: return "dihedral:" + std::to_string(spec.n);
    case GroupKind::kSym: return "sym:" + std::to_string(spec.n);
    case GroupKind::kAlt: return "alt:" + std::to_string(spec.n);
    case GroupKind::kQ8: return "q8";
    case GroupKind::kElab: return "elab:" + std::to_string(spec.n) + "^" + std::to_string(spec.exponent);
    case GroupKind::kProd: return "prod(" + render(spec.factors.at(0)) + "," + render(spec.factors.at(1)) + ")";
    case GroupKind::kPerm: {
      std::string out = "perm:";
      for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        out += (i ? ";" : "") + render_cycles(spec.generators[i]);
      }
      return out;
    }
    case GroupKind::kTable: return "table:@" + spec.path;
  }
  return {};
}

Permutation parse_cycles(std::string_view text, std::size_t min_degree) {
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  CycleList cycles;
  if (start < text.size()) {
    // Reuse the perm: grammar for the cycle body.
    const GroupSpec spec = parse_spec("perm:" + std::string(text));
    if (spec.generators.size() != 1) {
      throw Error(ErrorKind::kValidationError, "expected a single permutation");
    }
    cycles = spec.generators.front();
  }
  std::size_t degree = std::max<std::size_t>(min_degree, 1);
  for (const auto& c : cycles) {
    degree = std::max<std::size_t>(degree, *std::max_element(c.begin(), c.end()));
  }
  return Permutation::from_cycles(cycles, degree);
}

FiniteGroup build(const GroupSpec& spec, std::size_t cap) {
  return build_unnamed(spec, cap).renamed(render(spec));
}

FiniteGroup build(std::string_view spec_text, std::size_t cap) { return build(parse_spec(spec_text), cap); }

FiniteGroup load_table_file(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open table file " + path);
  std::vector<std::int64_t> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    std::int64_t v = -1;
    try {
      v = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || v < 0) {
      throw Error(ErrorKind::kValidationError, "table entry '" + token + "' is not a non-negative integer");
    }
    values.push_back(v);
  }
  std::size_t h = 0;
  while (h * h < values.size()) ++h;
  if (h == 0 || h * h != values.size()) {
    throw Error(ErrorKind::kValidationError,
                "table has " + std::to_string(values.size()) + " entries, not a perfect square");
  }
  require_order_within(static_cast<std::int64_t>(h), cap);
  std::vector<std::vector<Element>> rows(h, std::vector<Element>(h));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      const auto v = values[i * h + j];
      if (v >= static_cast<std::int64_t>(h)) {
        throw Error(ErrorKind::kValidationError, "table entry " + std::to_string(v) + " out of range");
      }
      rows[i][j] = static_cast<Element>(v);
    }
  }
  return group_from_table(rows, cap);
}

std::vector<CatalogEntry> standard_catalog(std::size_t max_order, std::size_t cap) {
  std::vector<std::string> specs;
  const auto max = static_cast<std::int64_t>(std::min(max_order, cap));
  for (std::int64_t n = 1; n <= max; ++n) specs.push_back("cyclic:" + std::to_string(n));
  for (std::int64_t m = 6; m <= max; m += 2) specs.push_back("dihedral:" + std::to_string(m));
  if (6 <= max) specs.push_back("sym:3");
  if (24 <= max) specs.push_back("sym:4");
  if (120 <= max) specs.push_back("sym:5");
  if (12 <= max) specs.push_back("alt:4");
  if (60 <= max) specs.push_back("alt:5");
  if (8 <= max) specs.push_back("q8");
  for (std::int64_t p : {2, 3, 5}) {
    for (std::int64_t k = 2, order = p * p; order <= max; ++k, order *= p) {
      specs.push_back("elab:" + std::to_string(p) + "^" + std::to_string(k));
    }
  }
  if (27 <= max) {
    specs.emplace_back(kHeisenberg27);
    specs.emplace_back(kMetacyclic27);
  }
  if (8 <= max) specs.push_back("prod(cyclic:2,cyclic:4)");
  if (16 <= max) specs.push_back("prod(cyclic:2,q8)");
  if (12 <= max) specs.push_back("prod(sym:3,cyclic:2)");

  std::vector<CatalogEntry> out;
  out.reserve(specs.size());
  for (const auto& s : specs) {
    const GroupSpec spec = parse_spec(s);
    out.push_back({render(spec), build(spec, cap)});
  }
  return out;
}

}  // namespace sylowlab
